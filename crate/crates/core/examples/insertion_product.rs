//! The insertion product, its coproduct and the Lie bracket.

use adjhopf::hopf::{antipode1, coproduct1, is_primitive, lie_bracket, product_bullet, tensor_bullet};
use adjhopf::{class_of, AdjMatrix, LinComb};

fn lc(order: usize, edges: &[(usize, usize)]) -> adjhopf::Result<LinComb> {
    Ok(LinComb::from_class(class_of(&AdjMatrix::from_edges(order, edges)?)?))
}

fn main() -> adjhopf::Result<()> {
    let k2 = lc(2, &[(1, 2)])?;
    let d2 = lc(2, &[(1, 2), (1, 2)])?;

    println!("K2 • K2 = {:?}", product_bullet(&k2, &k2)?);
    println!("K2 • D2 = {:?}", product_bullet(&k2, &d2)?);

    let bracket = lie_bracket(&k2, &d2)?;
    println!("[K2, D2] = {bracket:?}  primitive: {}", is_primitive(&bracket)?);

    let kk = product_bullet(&k2, &k2)?;
    println!("Δ₁(K2 • K2)     = {:?}", coproduct1(&kk)?);
    println!("Δ₁K2 • Δ₁K2     = {:?}", tensor_bullet(&coproduct1(&k2)?, &coproduct1(&k2)?)?);
    println!("S₁(K2 • K2)     = {:?}", antipode1(&kk)?);
    Ok(())
}
