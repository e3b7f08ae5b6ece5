//! Seeded batches of theorem checks over generated factor graphs.
//!
//! Instances are drawn sequentially from one SplitMix64 stream, then checked
//! in parallel; results are assembled in instance order so the summary does
//! not depend on scheduling.

use rand_core::{RngCore, SeedableRng};
use rand_xoshiro::SplitMix64;
use rayon::prelude::*;
use rek_core::connectivity::CutValue;
use rek_core::generators::{shuffle, GeneratorSpec};
use rek_core::theorem::{
    check_theorem_cached, Budget, CheckOptions, EvalCache, TheoremError, TheoremId, Verdict,
};
use serde::{Deserialize, Serialize};

/// Draws per instance before a family range is declared unusable.
const DRAW_ATTEMPTS: usize = 1000;

pub const THREADS_ENV: &str = "REK_LAB_THREADS";

#[derive(Debug, thiserror::Error)]
pub enum SweepError {
    #[error("invalid sweep config: {0}")]
    Config(String),
    #[error("no valid {family} graph after {DRAW_ATTEMPTS} draws")]
    NoValidInstance { family: &'static str },
    #[error("instance {index}, {theorem}: {source}")]
    Check {
        index: usize,
        theorem: TheoremId,
        source: TheoremError,
    },
    #[error("thread pool: {0}")]
    Pool(String),
}

/// Inclusive parameter ranges for one generator family.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "kebab-case")]
pub enum FamilyRange {
    Cycle {
        n: [usize; 2],
    },
    Complete {
        n: [usize; 2],
    },
    Path {
        n: [usize; 2],
    },
    Star {
        n: [usize; 2],
    },
    Harary {
        k: [usize; 2],
        n: [usize; 2],
    },
    /// Between one and `max_offsets` distinct offsets.
    Circulant {
        n: [usize; 2],
        max_offsets: usize,
    },
    RandomRegular {
        n: [usize; 2],
        d: [usize; 2],
    },
    SubdividedComplete {
        n: [usize; 2],
    },
}

impl FamilyRange {
    fn name(&self) -> &'static str {
        match self {
            Self::Cycle { .. } => "cycle",
            Self::Complete { .. } => "complete",
            Self::Path { .. } => "path",
            Self::Star { .. } => "star",
            Self::Harary { .. } => "harary",
            Self::Circulant { .. } => "circulant",
            Self::RandomRegular { .. } => "random-regular",
            Self::SubdividedComplete { .. } => "subdivided-complete",
        }
    }

    fn ranges(&self) -> Vec<[usize; 2]> {
        match self {
            Self::Cycle { n }
            | Self::Complete { n }
            | Self::Path { n }
            | Self::Star { n }
            | Self::Circulant { n, .. }
            | Self::SubdividedComplete { n } => vec![*n],
            Self::Harary { k, n } => vec![*k, *n],
            Self::RandomRegular { n, d } => vec![*n, *d],
        }
    }

    fn draw(&self, rng: &mut SplitMix64) -> GeneratorSpec {
        let mut pick = |[lo, hi]: [usize; 2]| lo + (rng.next_u64() % (hi - lo + 1) as u64) as usize;
        match self {
            Self::Cycle { n } => GeneratorSpec::Cycle { n: pick(*n) },
            Self::Complete { n } => GeneratorSpec::Complete { n: pick(*n) },
            Self::Path { n } => GeneratorSpec::Path { n: pick(*n) },
            Self::Star { n } => GeneratorSpec::Star { n: pick(*n) },
            Self::Harary { k, n } => GeneratorSpec::Harary {
                k: pick(*k),
                n: pick(*n),
            },
            Self::Circulant { n, max_offsets } => {
                let n = pick(*n);
                let half = n / 2;
                let count = pick([1, (*max_offsets).min(half).max(1)]);
                let mut pool: Vec<usize> = (1..=half).collect();
                shuffle(&mut pool, rng);
                let mut offsets: Vec<usize> = pool.into_iter().take(count).collect();
                offsets.sort_unstable();
                GeneratorSpec::Circulant { n, offsets }
            }
            Self::RandomRegular { n, d } => GeneratorSpec::RandomRegular {
                n: pick(*n),
                d: pick(*d),
                seed: rng.next_u64(),
            },
            Self::SubdividedComplete { n } => {
                let n = pick(*n);
                let edges = n * n.saturating_sub(1) / 2;
                GeneratorSpec::SubdividedComplete {
                    n,
                    edge_index: (rng.next_u64() % edges.max(1) as u64) as usize,
                }
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepConfig {
    pub seed: u64,
    pub instances: usize,
    pub theorems: Vec<TheoremId>,
    pub families: Vec<FamilyRange>,
    /// Orders `n` of the cycle or complete second factor.
    pub factor_orders: Vec<usize>,
    #[serde(default)]
    pub budget: Budget,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub output: Option<String>,
}

impl Default for SweepConfig {
    fn default() -> Self {
        Self {
            seed: 0,
            instances: 100,
            theorems: TheoremId::ALL.to_vec(),
            families: vec![
                FamilyRange::Cycle { n: [5, 6] },
                FamilyRange::Harary {
                    k: [2, 4],
                    n: [5, 6],
                },
                FamilyRange::Complete { n: [3, 5] },
                FamilyRange::Star { n: [4, 6] },
                FamilyRange::SubdividedComplete { n: [4, 4] },
                FamilyRange::Circulant {
                    n: [5, 6],
                    max_offsets: 2,
                },
                FamilyRange::RandomRegular {
                    n: [6, 6],
                    d: [3, 3],
                },
                FamilyRange::Path { n: [4, 6] },
            ],
            factor_orders: vec![4],
            budget: Budget::default(),
            output: None,
        }
    }
}

impl SweepConfig {
    pub fn validate(&self) -> Result<(), SweepError> {
        let bad = |m: &str| Err(SweepError::Config(m.into()));
        if self.theorems.is_empty() {
            return bad("no theorems selected");
        }
        if self.families.is_empty() {
            return bad("no generator families");
        }
        if self.factor_orders.is_empty() {
            return bad("no factor orders");
        }
        if let Some(n) = self.factor_orders.iter().find(|&&n| n < 3) {
            return bad(&format!("factor order {n} is below 3"));
        }
        for f in &self.families {
            if f.ranges().iter().any(|[lo, hi]| lo > hi) {
                return bad(&format!("empty range in {} family", f.name()));
            }
        }
        Ok(())
    }

    /// The generated instances, in index order.
    pub fn draw_instances(&self) -> Result<Vec<(GeneratorSpec, usize)>, SweepError> {
        self.validate()?;
        let mut rng = SplitMix64::seed_from_u64(self.seed);
        (0..self.instances)
            .map(|_| {
                let family = &self.families[(rng.next_u64() % self.families.len() as u64) as usize];
                let n =
                    self.factor_orders[(rng.next_u64() % self.factor_orders.len() as u64) as usize];
                for _ in 0..DRAW_ATTEMPTS {
                    let spec = family.draw(&mut rng);
                    if spec.build().is_ok() {
                        return Ok((spec, n));
                    }
                }
                Err(SweepError::NoValidInstance {
                    family: family.name(),
                })
            })
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerdictEntry {
    pub theorem: TheoremId,
    pub verdict: Verdict,
    pub predicted: CutValue,
    pub computed: Option<CutValue>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InstanceRecord {
    pub index: usize,
    pub generator: GeneratorSpec,
    pub n: usize,
    pub results: Vec<VerdictEntry>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TheoremCounts {
    pub theorem: TheoremId,
    pub confirmed: usize,
    pub violated: usize,
    pub hypotheses_unmet: usize,
    pub oracle_too_large: usize,
}

impl TheoremCounts {
    fn new(theorem: TheoremId) -> Self {
        Self {
            theorem,
            confirmed: 0,
            violated: 0,
            hypotheses_unmet: 0,
            oracle_too_large: 0,
        }
    }

    fn add(&mut self, v: Verdict) {
        match v {
            Verdict::Confirmed => self.confirmed += 1,
            Verdict::Violated => self.violated += 1,
            Verdict::HypothesesUnmet => self.hypotheses_unmet += 1,
            Verdict::OracleTooLarge => self.oracle_too_large += 1,
        }
    }

    pub fn total(&self) -> usize {
        self.confirmed + self.violated + self.hypotheses_unmet + self.oracle_too_large
    }
}

/// Everything needed to rerun one violating check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub index: usize,
    pub theorem: TheoremId,
    pub generator: GeneratorSpec,
    pub n: usize,
    pub sweep_seed: u64,
    pub predicted: CutValue,
    pub computed: Option<CutValue>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepSummary {
    pub config: SweepConfig,
    pub prng: &'static str,
    pub counts: Vec<TheoremCounts>,
    pub violations: Vec<Violation>,
    pub instances: Vec<InstanceRecord>,
}

impl SweepSummary {
    pub fn has_violations(&self) -> bool {
        !self.violations.is_empty()
    }
}

/// Thread count from `REK_LAB_THREADS`, if set to a positive integer.
pub fn threads_from_env() -> Option<usize> {
    std::env::var(THREADS_ENV)
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .filter(|&t| t > 0)
}

pub fn run_sweep(config: &SweepConfig) -> Result<SweepSummary, SweepError> {
    let instances = config.draw_instances()?;
    let options = CheckOptions {
        budget: config.budget,
        factor: None,
    };
    let check = |(index, (spec, n)): (usize, &(GeneratorSpec, usize))| {
        let g = spec.build().expect("drawn specs build");
        let mut cache = EvalCache::new();
        let results = config
            .theorems
            .iter()
            .map(|&theorem| {
                let r = check_theorem_cached(theorem, &g, Some(*n), &options, &mut cache).map_err(
                    |source| SweepError::Check {
                        index,
                        theorem,
                        source,
                    },
                )?;
                Ok(VerdictEntry {
                    theorem,
                    verdict: r.verdict,
                    predicted: r.predicted.value,
                    computed: r.computed,
                })
            })
            .collect::<Result<Vec<_>, SweepError>>()?;
        Ok(InstanceRecord {
            index,
            generator: spec.clone(),
            n: *n,
            results,
        })
    };
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(t) = threads_from_env() {
        builder = builder.num_threads(t);
    }
    let pool = builder
        .build()
        .map_err(|e| SweepError::Pool(e.to_string()))?;
    let records: Vec<InstanceRecord> = pool.install(|| {
        instances
            .par_iter()
            .enumerate()
            .map(check)
            .collect::<Result<_, SweepError>>()
    })?;

    let mut counts: Vec<TheoremCounts> = config
        .theorems
        .iter()
        .map(|&t| TheoremCounts::new(t))
        .collect();
    let mut violations = Vec::new();
    for rec in &records {
        for (i, entry) in rec.results.iter().enumerate() {
            counts[i].add(entry.verdict);
            if entry.verdict == Verdict::Violated {
                violations.push(Violation {
                    index: rec.index,
                    theorem: entry.theorem,
                    generator: rec.generator.clone(),
                    n: rec.n,
                    sweep_seed: config.seed,
                    predicted: entry.predicted,
                    computed: entry.computed,
                });
            }
        }
    }
    Ok(SweepSummary {
        // the summary does not depend on where it is written
        config: SweepConfig {
            output: None,
            ..config.clone()
        },
        prng: "splitmix64",
        counts,
        violations,
        instances: records,
    })
}
