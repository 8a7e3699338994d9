//! Inserting one graph into a vertex of another.

use adjhopf::insertion::{decomposing_maps, enumerate_insertions, insert_at, InsertionSpec};
use adjhopf::AdjMatrix;

fn main() -> adjhopf::Result<()> {
    let k2 = AdjMatrix::from_edges(2, &[(1, 2)])?;
    let p3 = AdjMatrix::from_edges(3, &[(1, 2), (2, 3)])?;

    // the middle vertex of P3 has one edge to each of vertices 1 and 3;
    // each row says which inserted vertex takes that edge
    let maps = decomposing_maps(&[1, 1], 2)?;
    println!("{} ways to distribute the edges at vertex 2", maps.len());
    for map in maps {
        let spec = InsertionSpec::new(2, map.rows().to_vec())?;
        println!("  {:?} -> {:?}", map.rows(), insert_at(&k2, &p3, &spec)?.rows());
    }

    for (class, count) in enumerate_insertions(&k2, &p3)? {
        println!("{count} x {class}");
    }
    Ok(())
}
