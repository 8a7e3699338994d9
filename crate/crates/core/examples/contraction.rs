//! Contracting subgraphs: single blocks, disconnected sets and legs.

use adjhopf::contraction::{quotient, quotient_ext};
use adjhopf::{AdjMatrix, ExtAdjMatrix, VertexSet};

fn main() -> adjhopf::Result<()> {
    let p4 = AdjMatrix::from_edges(4, &[(1, 2), (2, 3), (3, 4)])?;

    let q = quotient(&p4, &VertexSet::new([2, 3])?)?;
    println!("P4 / {{2,3}}   = {:?}  origin {:?}", q.matrix.rows(), q.origin);

    // {1,2,4,5} induces two separate edges, contracted one at a time
    let p5 = AdjMatrix::from_edges(5, &[(1, 2), (2, 3), (3, 4), (4, 5)])?;
    let q = quotient(&p5, &VertexSet::new([1, 2, 4, 5])?)?;
    println!("P5 / {{1,2,4,5}} = {:?}  origin {:?}", q.matrix.rows(), q.origin);
    let q = quotient(&p4, &VertexSet::new([1, 2, 3, 4])?)?;
    println!("P4 / P4      = {:?}", q.matrix.rows());

    let legs = ExtAdjMatrix::new(AdjMatrix::from_edges(2, &[(1, 2)])?, vec![2, 3])?;
    let q = quotient_ext(&legs, &VertexSet::new([1, 2])?)?;
    println!("(K2,(2,3)) / {{1,2}} = rows {:?}, legs {:?}", q.internal().rows(), q.external());
    Ok(())
}
