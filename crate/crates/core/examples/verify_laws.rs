//! Runs a law suite and prints one line per law.
//!
//! ```text
//! cargo run --release --example verify_laws -- hopf_delta 3 42
//! ```

use std::env;

use adjhopf::harness::{run_suite, Suite};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<String> = env::args().skip(1).collect();
    let suite: Suite = args.first().map(String::as_str).unwrap_or("all").parse()?;
    let degree: usize = args.get(1).map(|s| s.parse()).transpose()?.unwrap_or(2);
    let seed: u64 = args.get(2).map(|s| s.parse()).transpose()?.unwrap_or(7);

    let reports = run_suite(suite, degree, seed)?;
    for r in &reports {
        let status = match (r.passed(), r.asserted) {
            (true, _) => "ok  ",
            (false, true) => "FAIL",
            (false, false) => "obs ",
        };
        println!(
            "{status} {:<40} {:>6} instances  {:>8.1?}",
            r.law_id, r.instances_checked, r.elapsed
        );
        for f in &r.failures {
            println!("     inputs {:?}", f.inputs);
            println!("     expected {}", f.expected);
            println!("     actual   {}", f.actual);
        }
    }
    let failed = reports.iter().filter(|r| r.is_violation()).count();
    println!("{} laws, {failed} failed", reports.len());
    Ok(())
}
