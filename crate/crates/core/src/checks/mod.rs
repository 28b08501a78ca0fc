//! Named verification suites shared by the `check` command and the
//! acceptance tests.

mod algebraic;
mod calibration;
mod explicit;
mod pieri;

use std::time::Instant;

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::indecomposables::{BlockId, IndecompLabel, Kind};

pub use calibration::{calibrate, CalibrationReport};

pub const SUITES: &[&str] = &[
    "sl21-rules",
    "lr-oracle",
    "path-agreement",
    "oracle",
    "functoriality",
    "bijectivity",
    "invariants",
    "calibration",
];

pub const DEFAULT_SEED: u64 = 20_240_601;

#[derive(Debug, Clone)]
pub struct CheckConfig {
    pub seed: u64,
    pub oracle_dim_bound: usize,
}

impl Default for CheckConfig {
    fn default() -> Self {
        CheckConfig {
            seed: DEFAULT_SEED,
            oracle_dim_bound: 4000,
        }
    }
}

/// Outcome of one property inside a suite.
#[derive(Debug, Clone, Serialize)]
pub struct PropertyReport {
    pub name: String,
    pub cases: usize,
    pub failures: Vec<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub properties: Vec<PropertyReport>,
    pub elapsed_ms: u128,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.properties.iter().all(|p| p.failures.is_empty() && p.cases > 0)
    }

    pub fn cases(&self) -> usize {
        self.properties.iter().map(|p| p.cases).sum()
    }
}

/// Collects cases of a single property; keeps the first few failures.
pub(crate) struct Tally {
    name: String,
    cases: usize,
    failures: Vec<String>,
    dropped: usize,
}

impl Tally {
    pub(crate) fn new(name: &str) -> Self {
        Tally {
            name: name.to_string(),
            cases: 0,
            failures: Vec::new(),
            dropped: 0,
        }
    }

    pub(crate) fn check(&mut self, ok: bool, detail: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            if self.failures.len() < 10 {
                self.failures.push(detail());
            } else {
                self.dropped += 1;
            }
        }
    }

    /// Records a case whose computation returned an error as a failure.
    pub(crate) fn check_result(&mut self, r: Result<bool>, detail: impl FnOnce() -> String) {
        match r {
            Ok(ok) => self.check(ok, detail),
            Err(e) => {
                let d = detail();
                self.check(false, || format!("{d}: {e}"));
            }
        }
    }

    pub(crate) fn finish(mut self) -> PropertyReport {
        if self.dropped > 0 {
            self.failures.push(format!("... and {} more", self.dropped));
        }
        PropertyReport {
            name: self.name,
            cases: self.cases,
            failures: self.failures,
        }
    }
}

pub fn run_suite(name: &str, cfg: &CheckConfig) -> Result<SuiteReport> {
    let start = Instant::now();
    let properties = match name {
        "sl21-rules" => algebraic::sl21_rules(),
        "lr-oracle" => algebraic::lr_oracle(),
        "path-agreement" => algebraic::path_agreement(cfg.seed),
        "bijectivity" => algebraic::bijectivity(),
        "invariants" => algebraic::invariants(cfg.seed),
        "oracle" => explicit::oracle_suite(cfg),
        "functoriality" => explicit::functoriality(cfg),
        "calibration" => calibration::calibration_suite(),
        _ => return Err(Error::Parse(format!("unknown suite '{name}'"))),
    };
    Ok(SuiteReport {
        suite: name.to_string(),
        properties,
        elapsed_ms: start.elapsed().as_millis(),
    })
}

/// `count` distinct blocks of Gl(m|1) with crosses in `[-r, r]`.
pub fn random_blocks(rng: &mut ChaCha8Rng, m: usize, r: i64, count: usize) -> Vec<BlockId> {
    let pool: Vec<i64> = (-r..=r).collect();
    let mut out: Vec<BlockId> = Vec::new();
    while out.len() < count {
        let crosses: Vec<i64> = pool.choose_multiple(rng, m - 1).copied().collect();
        let b = BlockId::new(crosses).expect("distinct crosses");
        if !out.contains(&b) {
            out.push(b);
        }
    }
    out
}

/// A random odd zigzag (simple, roof or bottom) of length at most
/// `max_len` with left end near the origin.
pub fn random_odd_zigzag(rng: &mut ChaCha8Rng, block: &BlockId, max_len: usize) -> IndecompLabel {
    let mut lo = rng.gen_range(-6..=6);
    while !block.is_free(lo) {
        lo += 1;
    }
    let len = 2 * rng.gen_range(0..=(max_len - 1) / 2) + 1;
    let mut hi = lo;
    for _ in 1..len {
        hi = block.step(hi, 1);
    }
    let kind = if len == 1 {
        Kind::Irr(lo)
    } else if rng.gen_bool(0.5) {
        Kind::Roof(lo, hi)
    } else {
        Kind::Bottom(lo, hi)
    };
    IndecompLabel::new(block.clone(), kind, rng.gen_range(0..=1)).expect("free endpoints")
}
