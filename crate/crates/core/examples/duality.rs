//! Insertion coefficients against coproduct coefficients, and the span of
//! products of connected classes.

use adjhopf::basis::graded_dim;
use adjhopf::harness::{duality_diagnostic, product_span_rank};

fn main() -> adjhopf::Result<()> {
    let table = duality_diagnostic(3)?;
    println!("{:<40} {:<40} {:<40} {:>6} {:>6}", "N", "M", "Q", "•", "Δ");
    for r in &table.rows {
        println!("{:<40} {:<40} {:<40} {:>6} {:>6}", r.n, r.m, r.q, r.bullet, r.delta);
    }
    println!("supports agree: {}", table.supports_agree());
    println!("coefficients agree: {}", table.coefficients_agree());

    for n in 0..=3 {
        println!("degree {n}: rank {} of dimension {}", product_span_rank(n)?, graded_dim(n)?);
    }
    Ok(())
}
