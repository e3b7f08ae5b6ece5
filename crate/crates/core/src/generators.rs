//! Deterministic factor-graph families.
//!
//! Random graphs draw from SplitMix64 (`rand_xoshiro::SplitMix64`, the
//! Steele–Lea–Flood generator with increment `0x9e3779b97f4a7c15`). A shuffle
//! is the textbook Fisher–Yates pass from the last index down, picking
//! `j = next_u64() % (i + 1)`; the modulo bias is kept on purpose so the
//! stream is easy to replay in other languages.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use rand_core::{RngCore, SeedableRng};
use rand_xoshiro::SplitMix64;
use serde::{Deserialize, Serialize};

use crate::graph::Graph;

/// Pairing attempts before `random_regular` gives up.
pub const RANDOM_REGULAR_ATTEMPTS: usize = 10_000;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GeneratorError {
    #[error("{family} needs at least {min} vertices, got {n}")]
    TooSmall {
        family: &'static str,
        n: usize,
        min: usize,
    },
    #[error("harary({k}, {n}) needs n > k >= 2 and k*n even")]
    HararyParameters { k: usize, n: usize },
    #[error("circulant offset {offset} is outside 1..={max}")]
    OffsetOutOfRange { offset: usize, max: usize },
    #[error("no {d}-regular graph on {n} vertices")]
    InfeasibleDegree { n: usize, d: usize },
    #[error("no simple pairing found in {0} attempts")]
    RejectionBudget(usize),
    #[error("edge index {index} is outside 0..{edges}")]
    EdgeIndexOutOfRange { index: usize, edges: usize },
}

fn at_least(family: &'static str, n: usize, min: usize) -> Result<(), GeneratorError> {
    if n < min {
        return Err(GeneratorError::TooSmall { family, n, min });
    }
    Ok(())
}

fn build(n: usize, edges: &[(usize, usize)]) -> Graph {
    Graph::from_edge_list(n, edges).expect("generator emits valid edges")
}

/// Cₙ with edges `i – (i+1 mod n)`.
pub fn cycle(n: usize) -> Result<Graph, GeneratorError> {
    at_least("cycle", n, 3)?;
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Ok(build(n, &edges))
}

pub fn complete(n: usize) -> Result<Graph, GeneratorError> {
    at_least("complete", n, 1)?;
    Ok(build(n, &complete_edges(n)))
}

fn complete_edges(n: usize) -> Vec<(usize, usize)> {
    (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect()
}

pub fn path(n: usize) -> Result<Graph, GeneratorError> {
    at_least("path", n, 1)?;
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Ok(build(n, &edges))
}

/// K₁,ₙ₋₁ with centre `0`.
pub fn star(n: usize) -> Result<Graph, GeneratorError> {
    at_least("star", n, 1)?;
    let edges: Vec<_> = (1..n).map(|i| (0, i)).collect();
    Ok(build(n, &edges))
}

/// Harary graph Hₖ,ₙ: circulant offsets `1..=k/2`, plus the diameters
/// `i – i + n/2` when `k` is odd.
pub fn harary(k: usize, n: usize) -> Result<Graph, GeneratorError> {
    if k < 2 || n <= k || !(k * n).is_multiple_of(2) {
        return Err(GeneratorError::HararyParameters { k, n });
    }
    let mut edges = circulant_edges(n, 1..=k / 2);
    if k % 2 == 1 {
        edges.extend((0..n / 2).map(|i| (i, i + n / 2)));
    }
    Ok(build(n, &edges))
}

fn circulant_edges(n: usize, offsets: impl IntoIterator<Item = usize>) -> Vec<(usize, usize)> {
    let mut edges = Vec::new();
    for s in offsets {
        edges.extend((0..n).map(|i| (i, (i + s) % n)));
    }
    edges
}

/// `i ~ i ± s (mod n)` for every offset `s` in `1..=n/2`.
pub fn circulant(n: usize, offsets: &[usize]) -> Result<Graph, GeneratorError> {
    at_least("circulant", n, 1)?;
    let max = n / 2;
    if let Some(&offset) = offsets.iter().find(|&&s| s == 0 || s > max) {
        return Err(GeneratorError::OffsetOutOfRange { offset, max });
    }
    Ok(build(n, &circulant_edges(n, offsets.iter().copied())))
}

/// In-place Fisher–Yates driven by `rng` (see the module notes).
pub fn shuffle<T>(items: &mut [T], rng: &mut SplitMix64) {
    for i in (1..items.len()).rev() {
        let j = (rng.next_u64() % (i as u64 + 1)) as usize;
        items.swap(i, j);
    }
}

/// Uniform pairing model: shuffle `d` copies of each vertex, pair them off
/// and retry on loops or repeated pairs.
pub fn random_regular(n: usize, d: usize, seed: u64) -> Result<Graph, GeneratorError> {
    if d >= n || !(n * d).is_multiple_of(2) {
        return Err(GeneratorError::InfeasibleDegree { n, d });
    }
    let mut rng = SplitMix64::seed_from_u64(seed);
    let points: Vec<usize> = (0..n).flat_map(|v| core::iter::repeat_n(v, d)).collect();
    'attempt: for _ in 0..RANDOM_REGULAR_ATTEMPTS {
        let mut p = points.clone();
        shuffle(&mut p, &mut rng);
        let mut edges: Vec<(usize, usize)> = p
            .chunks_exact(2)
            .map(|c| (c[0].min(c[1]), c[0].max(c[1])))
            .collect();
        if edges.iter().any(|&(u, v)| u == v) {
            continue;
        }
        edges.sort_unstable();
        for w in edges.windows(2) {
            if w[0] == w[1] {
                continue 'attempt;
            }
        }
        return Ok(build(n, &edges));
    }
    Err(GeneratorError::RejectionBudget(RANDOM_REGULAR_ATTEMPTS))
}

/// Kₙ with its `edge_index`-th edge (lexicographic order) replaced by a
/// path through the new vertex `n`.
pub fn subdivided_complete(n: usize, edge_index: usize) -> Result<Graph, GeneratorError> {
    at_least("subdivided-complete", n, 4)?;
    let mut edges = complete_edges(n);
    if edge_index >= edges.len() {
        return Err(GeneratorError::EdgeIndexOutOfRange {
            index: edge_index,
            edges: edges.len(),
        });
    }
    let (u, v) = edges.remove(edge_index);
    edges.push((u, n));
    edges.push((n, v));
    Ok(build(n + 1, &edges))
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "kebab-case")]
pub enum GeneratorSpec {
    Cycle { n: usize },
    Complete { n: usize },
    Path { n: usize },
    Star { n: usize },
    Harary { k: usize, n: usize },
    Circulant { n: usize, offsets: Vec<usize> },
    RandomRegular { n: usize, d: usize, seed: u64 },
    SubdividedComplete { n: usize, edge_index: usize },
}

impl GeneratorSpec {
    pub const FAMILIES: [&'static str; 8] = [
        "cycle",
        "complete",
        "path",
        "star",
        "harary",
        "circulant",
        "random-regular",
        "subdivided-complete",
    ];

    pub fn build(&self) -> Result<Graph, GeneratorError> {
        match self {
            Self::Cycle { n } => cycle(*n),
            Self::Complete { n } => complete(*n),
            Self::Path { n } => path(*n),
            Self::Star { n } => star(*n),
            Self::Harary { k, n } => harary(*k, *n),
            Self::Circulant { n, offsets } => circulant(*n, offsets),
            Self::RandomRegular { n, d, seed } => random_regular(*n, *d, *seed),
            Self::SubdividedComplete { n, edge_index } => subdivided_complete(*n, *edge_index),
        }
    }

    pub fn family(&self) -> &'static str {
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
}

impl fmt::Display for GeneratorSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let family = self.family();
        match self {
            Self::Cycle { n } | Self::Complete { n } | Self::Path { n } | Self::Star { n } => {
                write!(f, "{family}({n})")
            }
            Self::Harary { k, n } => write!(f, "{family}({k},{n})"),
            Self::Circulant { n, offsets } => {
                let list: Vec<String> = offsets.iter().map(|s| alloc::format!("{s}")).collect();
                write!(f, "{family}({n},{{{}}})", list.join(","))
            }
            Self::RandomRegular { n, d, seed } => write!(f, "{family}({n},{d},seed={seed})"),
            Self::SubdividedComplete { n, edge_index } => write!(f, "{family}({n},{edge_index})"),
        }
    }
}
