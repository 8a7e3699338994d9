//! Executable law suites and reference oracles.

mod duality;
mod laws;
mod oracle;
mod report;

use std::fmt;
use std::str::FromStr;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub use duality::{
    connected_classes, duality_diagnostic, ordered_products, product_span_rank, rank, DualityRow,
    DualityTable,
};
pub use laws::{admissible_sets, reinsert};
pub use oracle::{brute_aut_order, brute_basis, brute_isomorphic, BRUTE_BASIS_CAP};
pub use report::{Failure, LawReport, Wire};

use crate::basis::DEFAULT_DEGREE_CAP;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Core,
    Contraction,
    Insertion,
    HopfDelta,
    HopfBullet,
    Extended,
    All,
}

impl Suite {
    pub const EACH: [Suite; 6] = [
        Suite::Core,
        Suite::Contraction,
        Suite::Insertion,
        Suite::HopfDelta,
        Suite::HopfBullet,
        Suite::Extended,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Core => "core",
            Suite::Contraction => "contraction",
            Suite::Insertion => "insertion",
            Suite::HopfDelta => "hopf_delta",
            Suite::HopfBullet => "hopf_bullet",
            Suite::Extended => "extended",
            Suite::All => "all",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::EACH
            .iter()
            .chain([Suite::All].iter())
            .copied()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| Error::invalid(format!("unknown suite {s:?}")))
    }
}

/// Runs every law of `suite` over all classes up to `max_degree`, with
/// random probes drawn from a generator seeded by `seed`.
pub fn run_suite(suite: Suite, max_degree: usize, seed: u64) -> Result<Vec<LawReport>> {
    if max_degree > DEFAULT_DEGREE_CAP {
        return Err(Error::Capacity {
            what: "degree",
            cap: DEFAULT_DEGREE_CAP,
            requested: max_degree,
        });
    }
    let suites: Vec<Suite> = match suite {
        Suite::All => Suite::EACH.to_vec(),
        one => vec![one],
    };
    let mut out = Vec::new();
    for s in suites {
        let stream = Suite::EACH.iter().position(|&e| e == s).unwrap_or(0);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(stream as u64);
        let reports = match s {
            Suite::Core => laws::core(max_degree, seed, &mut rng)?,
            Suite::Contraction => laws::contraction(max_degree, seed, &mut rng)?,
            Suite::Insertion => laws::insertion(max_degree, seed, &mut rng)?,
            Suite::HopfDelta => laws::hopf_delta(max_degree, seed, &mut rng)?,
            Suite::HopfBullet => laws::hopf_bullet(max_degree, seed, &mut rng)?,
            Suite::Extended => laws::extended(max_degree, seed, &mut rng)?,
            Suite::All => unreachable!(),
        };
        out.extend(reports);
    }
    Ok(out)
}

/// Random classes of degree `d`, for probing beyond the exhaustive range.
pub fn random_classes(d: usize, count: usize, seed: u64) -> Result<Vec<crate::GraphClass>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count).map(|_| laws::random_class(&mut rng, d)).collect()
}
