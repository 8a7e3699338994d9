//! Canonical representatives, automorphism counts and the graded basis.

use adjhopf::basis::{graded_basis, graded_dim};
use adjhopf::canonical::{aut_order, canonical_form};
use adjhopf::{class_of, AdjMatrix, Permutation};

fn main() -> adjhopf::Result<()> {
    // a double edge with a pendant vertex, written two ways
    let a = AdjMatrix::from_edges(3, &[(1, 3), (2, 3), (2, 3)])?;
    let b = a.permute(&Permutation::new(vec![3, 1, 2])?)?;
    println!("a          = {:?}", a.rows());
    println!("b          = {:?}", b.rows());
    println!("canon(a)   = {:?}", canonical_form(&a)?.rows());
    println!("canon(b)   = {:?}", canonical_form(&b)?.rows());
    println!("same class = {}", class_of(&a)? == class_of(&b)?);

    let k4 = AdjMatrix::from_edges(4, &[(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)])?;
    println!("|Aut K4|   = {}", aut_order(&k4)?);

    for n in 0..=4 {
        println!("dim H_{n} = {}", graded_dim(n)?);
    }
    for c in graded_basis(3)? {
        println!("  {c}");
    }
    Ok(())
}
