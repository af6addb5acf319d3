//! Seeded law suite. Every law draws a [`Document`] from its own sub-seed
//! and checks it; a failing document is serialized so that
//! [`replay`] reproduces the failure from text alone.

pub mod generate;
pub mod laws;

use std::panic::{catch_unwind, AssertUnwindSafe};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use thiserror::Error;

use crate::extarith::ExtVal;
use crate::format::{Document, FormatError};

pub use generate::{generate_space, generate_space_of_size, min_plus_closure, Gen};
pub use laws::{registry, Law};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ConfigError {
    #[error("cases must be at least 1")]
    NoCases,
    #[error("max_points must be between 1 and {max}, got {got}")]
    MaxPoints { max: usize, got: usize },
    #[error("value pool must contain 0 and inf")]
    Pool,
    #[error("samples must be at least 1")]
    NoSamples,
}

#[derive(Debug, Error)]
pub enum SuiteError {
    #[error(transparent)]
    Config(#[from] ConfigError),
    #[error("unknown law {0}")]
    UnknownLaw(String),
    #[error(transparent)]
    Format(#[from] FormatError),
}

/// Largest carrier the generators produce; primes and approach tables are
/// enumerated over all subsets.
pub const MAX_POINTS: usize = 12;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteConfig {
    pub seed: u64,
    pub cases: usize,
    pub max_points: usize,
    pub value_pool: Vec<ExtVal>,
    /// Random objects (weights, vectors, nets) drawn per case.
    pub samples: usize,
    /// Sets `d(a,a) = 1` in the first space of every generated case.
    pub mutate: bool,
}

pub fn default_pool() -> Vec<ExtVal> {
    vec![
        ExtVal::zero(),
        ExtVal::ratio(1, 2),
        ExtVal::from_int(1),
        ExtVal::ratio(3, 2),
        ExtVal::from_int(2),
        ExtVal::from_int(3),
        ExtVal::inf(),
    ]
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            seed: 0,
            cases: 100,
            max_points: 6,
            value_pool: default_pool(),
            samples: 10,
            mutate: false,
        }
    }
}

impl SuiteConfig {
    pub fn new(seed: u64, cases: usize) -> Result<Self, ConfigError> {
        let config = SuiteConfig {
            seed,
            cases,
            ..SuiteConfig::default()
        };
        config.validate()?;
        Ok(config)
    }

    pub fn validate(&self) -> Result<(), ConfigError> {
        if self.cases == 0 {
            return Err(ConfigError::NoCases);
        }
        if self.max_points == 0 || self.max_points > MAX_POINTS {
            return Err(ConfigError::MaxPoints {
                max: MAX_POINTS,
                got: self.max_points,
            });
        }
        if !self.value_pool.contains(&ExtVal::zero()) || !self.value_pool.contains(&ExtVal::inf()) {
            return Err(ConfigError::Pool);
        }
        if self.samples == 0 {
            return Err(ConfigError::NoSamples);
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LawReport {
    pub law: String,
    pub paper_ref: String,
    pub pass: bool,
    pub cases: usize,
    pub counterexample: Option<String>,
}

/// Stable per-law seed derived from the suite seed and the law id.
pub fn law_seed(seed: u64, id: &str) -> u64 {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for b in id.bytes() {
        h ^= u64::from(b);
        h = h.wrapping_mul(0x0100_0000_01b3);
    }
    seed ^ h
}

fn checked(law: &Law, doc: &Document) -> Result<(), String> {
    match catch_unwind(AssertUnwindSafe(|| (law.check)(doc))) {
        Ok(result) => result,
        Err(payload) => {
            let message = payload
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| payload.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panic".into());
            Err(format!("panicked: {message}"))
        }
    }
}

fn mutate(doc: &mut Document) {
    if let Some(entry) = doc.spaces.first_mut() {
        entry.space.set_unchecked(0, 0, ExtVal::from_int(1));
    }
}

fn counterexample(law: &Law, case: usize, message: &str, doc: &Document) -> String {
    let mut out = format!("# law {} case {}\n", law.id, case);
    for line in message.lines() {
        out.push_str("# ");
        out.push_str(line);
        out.push('\n');
    }
    out.push_str(&doc.serialize());
    out
}

pub fn run_law(law: &Law, config: &SuiteConfig) -> LawReport {
    let mut rng = ChaCha8Rng::seed_from_u64(law_seed(config.seed, law.id));
    let cases = if law.fixed { 1 } else { config.cases };
    let mut failure = None;
    let mut run = 0;
    for case in 0..cases {
        let mut doc = (law.generate)(&mut Gen {
            rng: &mut rng,
            config,
        });
        if config.mutate {
            mutate(&mut doc);
        }
        run += 1;
        if let Err(message) = checked(law, &doc) {
            failure = Some(counterexample(law, case, &message, &doc));
            break;
        }
    }
    LawReport {
        law: law.id.to_string(),
        paper_ref: law.anchor.to_string(),
        pass: failure.is_none(),
        cases: run,
        counterexample: failure,
    }
}

/// Runs every registered law, in parallel across laws; the reports come back
/// in registry order.
pub fn run_suite(config: &SuiteConfig) -> Result<Vec<LawReport>, ConfigError> {
    config.validate()?;
    let laws = registry();
    let workers = std::thread::available_parallelism().map_or(1, |n| n.get()).min(laws.len());
    let mut reports: Vec<Option<LawReport>> = vec![None; laws.len()];
    std::thread::scope(|scope| {
        let chunks: Vec<_> = (0..workers)
            .map(|w| {
                let laws = &laws;
                scope.spawn(move || {
                    (w..laws.len())
                        .step_by(workers)
                        .map(|i| (i, run_law(&laws[i], config)))
                        .collect::<Vec<_>>()
                })
            })
            .collect();
        for handle in chunks {
            for (i, report) in handle.join().expect("law runner panicked outside a check") {
                reports[i] = Some(report);
            }
        }
    });
    Ok(reports.into_iter().map(|r| r.expect("every law reported")).collect())
}

pub fn find_law(id: &str) -> Option<Law> {
    registry().into_iter().find(|law| law.id == id)
}

/// Re-runs one law on a serialized counterexample. `Ok(Err(_))` means the
/// law still fails.
pub fn replay(id: &str, text: &str) -> Result<Result<(), String>, SuiteError> {
    let law = find_law(id).ok_or_else(|| SuiteError::UnknownLaw(id.to_string()))?;
    let doc = Document::parse_unchecked(text)?;
    Ok(checked(&law, &doc))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn config_invariants() {
        assert_eq!(SuiteConfig::new(1, 0), Err(ConfigError::NoCases));
        let mut c = SuiteConfig::default();
        c.value_pool = vec![ExtVal::zero(), ExtVal::from_int(1)];
        assert_eq!(c.validate(), Err(ConfigError::Pool));
        c = SuiteConfig::default();
        c.max_points = 13;
        assert!(matches!(c.validate(), Err(ConfigError::MaxPoints { .. })));
    }

    #[test]
    fn law_ids_are_unique() {
        let laws = registry();
        let mut ids: Vec<_> = laws.iter().map(|l| l.id).collect();
        ids.sort_unstable();
        ids.dedup();
        assert_eq!(ids.len(), laws.len());
    }
}
