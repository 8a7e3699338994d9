//! The contraction coproduct and its antipode on the triangle.

use adjhopf::hopf::{antipode, coproduct, mult_oplus, oplus_tensor, reduced_power};
use adjhopf::{class_of, AdjMatrix, LinComb};

fn main() -> adjhopf::Result<()> {
    let t = LinComb::from_class(class_of(&AdjMatrix::from_edges(3, &[(1, 2), (2, 3), (1, 3)])?)?);

    let delta = coproduct(&t)?;
    println!("Δ T = {delta:?}");

    let s = antipode(&t)?;
    println!("S T = {s:?}");

    // S ⊕-convolved with the identity gives the counit times the unit
    let mut left = LinComb::zero();
    for (k, v) in delta.iter() {
        let sk = antipode(&LinComb::from_class(k[0].clone()))?;
        left.add_scaled(&mult_oplus(&sk, &LinComb::from_class(k[1].clone()))?, v);
    }
    println!("⊕(S⊗id)Δ T = {left:?}");
    println!("reduced Δ³ T = {:?}", reduced_power(&t, 3)?);
    println!("⊕Δ T = {:?}", oplus_tensor(&delta)?);
    Ok(())
}
