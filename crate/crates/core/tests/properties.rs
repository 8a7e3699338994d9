use adjhopf::contraction::quotient;
use adjhopf::harness::admissible_sets;
use adjhopf::insertion::{decomposing_maps, insert_at, InsertionSpec};
use adjhopf::wire::{parse_document, WireGraph};
use adjhopf::{class_of, class_of_ext, AdjMatrix, ExtAdjMatrix, Permutation};
use proptest::prelude::*;

fn matrix(max_order: usize, max_mult: u32) -> impl Strategy<Value = AdjMatrix> {
    (1..=max_order).prop_flat_map(move |n| {
        let pairs = n * (n - 1) / 2;
        prop::collection::vec(0..=max_mult, pairs).prop_map(move |mults| {
            let mut edges = Vec::new();
            let mut k = 0;
            for i in 1..=n {
                for j in i + 1..=n {
                    for _ in 0..mults[k] {
                        edges.push((i, j));
                    }
                    k += 1;
                }
            }
            AdjMatrix::from_edges(n, &edges).unwrap()
        })
    })
}

fn connected(max_order: usize) -> impl Strategy<Value = AdjMatrix> {
    matrix(max_order, 2).prop_filter("connected", |m| m.order() >= 2 && m.is_connected())
}

fn with_permutation(m: AdjMatrix) -> impl Strategy<Value = (AdjMatrix, Permutation)> {
    let n = m.order();
    Just((1..=n).collect::<Vec<_>>())
        .prop_shuffle()
        .prop_map(move |p| (m.clone(), Permutation::new(p).unwrap()))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn class_ignores_relabeling((m, p) in matrix(6, 2).prop_flat_map(with_permutation)) {
        let q = m.permute(&p).unwrap();
        prop_assert_eq!(class_of(&m).unwrap(), class_of(&q).unwrap());
    }

    #[test]
    fn relabeling_legs_keeps_the_class(
        (m, p) in matrix(5, 2).prop_flat_map(with_permutation),
        seed in prop::collection::vec(0u32..3, 5),
    ) {
        let legs = seed[..m.order()].to_vec();
        let d = ExtAdjMatrix::new(m, legs).unwrap();
        prop_assert_eq!(class_of_ext(&d).unwrap(), class_of_ext(&d.permute(&p).unwrap()).unwrap());
    }

    #[test]
    fn quotient_splits_the_degree(m in matrix(5, 2)) {
        for set in admissible_sets(&m) {
            let sub = m.submatrix(&set).unwrap();
            let q = quotient(&m, &set).unwrap();
            prop_assert_eq!(q.matrix.degree() + sub.degree(), m.degree());
        }
    }

    #[test]
    fn insertion_adds_degrees(n in connected(3), m in connected(4), pick in any::<prop::sample::Index>()) {
        let pos = pick.index(m.order());
        let column: Vec<u32> = (0..m.order()).filter(|&r| r != pos).map(|r| m.entry(r, pos)).collect();
        let maps = decomposing_maps(&column, n.order()).unwrap();
        for map in maps.iter().take(20) {
            let spec = InsertionSpec::new(pos + 1, map.rows().to_vec()).unwrap();
            let out = insert_at(&n, &m, &spec).unwrap();
            prop_assert_eq!(out.degree(), n.degree() + m.degree());
            prop_assert_eq!(out.order(), n.order() + m.order() - 1);
            prop_assert!(out.is_connected());
        }
    }

    #[test]
    fn graphs_survive_the_wire(m in matrix(6, 3)) {
        let text = WireGraph::plain(m.clone()).to_json();
        let back = parse_document(&text).unwrap();
        prop_assert_eq!(back.to_json(), text);
    }
}
