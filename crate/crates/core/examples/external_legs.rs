//! Diagrams with external legs and the map that forgets them.

use adjhopf::extended::{coproduct_ext, forget_legs, forget_legs_tensor, graded_basis_ext, product_bullet_ext};
use adjhopf::hopf::coproduct;
use adjhopf::{class_of_ext, AdjMatrix, ExtAdjMatrix, LinComb};

fn main() -> adjhopf::Result<()> {
    let t = AdjMatrix::from_edges(3, &[(1, 2), (2, 3), (1, 3)])?;
    let t1 = LinComb::from_class(class_of_ext(&ExtAdjMatrix::new(t, vec![1, 0, 0])?)?);
    let delta = coproduct_ext(&t1)?;
    println!("Δ (T, (1,0,0)) = {delta:?}");
    println!("forget ⊗ forget = {:?}", forget_legs_tensor(&delta)?);
    println!("Δ forget        = {:?}", coproduct(&forget_legs(&t1)?)?);

    let k2 = AdjMatrix::from_edges(2, &[(1, 2)])?;
    let a = LinComb::from_class(class_of_ext(&ExtAdjMatrix::new(k2.clone(), vec![0, 0])?)?);
    let b = LinComb::from_class(class_of_ext(&ExtAdjMatrix::new(k2, vec![0, 1])?)?);
    let left = product_bullet_ext(&product_bullet_ext(&a, &b)?, &b)?;
    let right = product_bullet_ext(&a, &product_bullet_ext(&b, &b)?)?;
    println!("(a•b)•b == a•(b•b): {}", left == right);

    for n in 0..=2 {
        println!("degree {n}, at most two legs: {} classes", graded_basis_ext(n, 2)?.len());
    }
    Ok(())
}
