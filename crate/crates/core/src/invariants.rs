//! Degree-based parameters: δ, Δ, the minimum edge-degree ξ and the minimum
//! boundary ξ₃ over connected 3-vertex subsets.

use alloc::vec::Vec;

use serde::Serialize;

use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum InvariantError {
    #[error("graph has no vertices")]
    EmptyGraph,
    #[error("no graph has minimum degree {delta} and minimum edge-degree {xi}")]
    ImpossibleProfile { delta: usize, xi: usize },
    #[error("closed form needs minimum degree at least 2, got {0}")]
    DegreeTooSmall(usize),
}

/// A connected 3-vertex subset, vertices in increasing order.
pub type Triple = [usize; 3];

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DegreeProfile {
    pub order: usize,
    pub size: usize,
    pub min_degree: usize,
    pub max_degree: usize,
    /// `None` for edgeless graphs.
    pub xi: Option<usize>,
    /// `None` when no connected triple exists.
    pub xi3: Option<usize>,
}

impl DegreeProfile {
    pub fn of(g: &Graph) -> Result<Self, InvariantError> {
        Ok(Self {
            order: g.order(),
            size: g.size(),
            min_degree: min_degree(g)?,
            max_degree: max_degree(g)?,
            xi: xi(g),
            xi3: xi3(g),
        })
    }
}

pub fn min_degree(g: &Graph) -> Result<usize, InvariantError> {
    g.degrees().min().ok_or(InvariantError::EmptyGraph)
}

pub fn max_degree(g: &Graph) -> Result<usize, InvariantError> {
    g.degrees().max().ok_or(InvariantError::EmptyGraph)
}

/// `d(u) + d(v) - 2` for the edge `uv`.
pub fn edge_degree(g: &Graph, u: usize, v: usize) -> usize {
    g.neighbors(u).len() + g.neighbors(v).len() - 2
}

/// Minimum edge-degree; `None` when the graph has no edges.
pub fn xi(g: &Graph) -> Option<usize> {
    g.edges().map(|(u, v)| edge_degree(g, u, v)).min()
}

/// All connected 3-subsets (paths and triangles).
///
/// Seeded from each edge `uv` plus a neighbour `w` of either endpoint; a
/// triple is emitted only from its lexicographically smallest inner edge, so
/// every triple appears once. Output is ordered by that edge, then by `w`.
pub fn connected_triples(g: &Graph) -> Vec<Triple> {
    let mut out = Vec::new();
    for (u, v) in g.edges() {
        let (nu, nv) = (g.neighbors(u), g.neighbors(v));
        let (mut i, mut j) = (0, 0);
        while i < nu.len() || j < nv.len() {
            let w = match (nu.get(i), nv.get(j)) {
                (Some(&a), Some(&b)) if a == b => {
                    i += 1;
                    j += 1;
                    a
                }
                (Some(&a), Some(&b)) if a < b => {
                    i += 1;
                    a
                }
                (Some(_), Some(&b)) => {
                    j += 1;
                    b
                }
                (Some(&a), None) => {
                    i += 1;
                    a
                }
                (None, Some(&b)) => {
                    j += 1;
                    b
                }
                (None, None) => unreachable!(),
            };
            if w == u || w == v {
                continue;
            }
            let mut t = [u, v, w];
            t.sort_unstable();
            if smallest_inner_edge(g, &t) == (u, v) {
                out.push(t);
            }
        }
    }
    out
}

fn smallest_inner_edge(g: &Graph, t: &Triple) -> (usize, usize) {
    let [a, b, c] = *t;
    [(a, b), (a, c), (b, c)]
        .into_iter()
        .find(|&(x, y)| g.has_edge(x, y))
        .expect("connected triple has an edge")
}

/// `|∂(T)|` for a 3-subset.
pub fn triple_boundary(g: &Graph, t: &Triple) -> usize {
    let [a, b, c] = *t;
    let inner = [(a, b), (a, c), (b, c)]
        .into_iter()
        .filter(|&(x, y)| g.has_edge(x, y))
        .count();
    t.iter().map(|&v| g.neighbors(v).len()).sum::<usize>() - 2 * inner
}

/// ξ₃ together with the first triple attaining it.
pub fn xi3_witness(g: &Graph) -> Option<(usize, Triple)> {
    connected_triples(g)
        .into_iter()
        .map(|t| (triple_boundary(g, &t), t))
        .min_by_key(|&(value, _)| value)
}

pub fn xi3(g: &Graph) -> Option<usize> {
    xi3_witness(g).map(|(value, _)| value)
}

/// ξ₃(G ⊠ Cₙ) for n ≥ 4 from δ(G) and ξ(G): 9δ when some edge joins two
/// minimum-degree vertices, 9δ + 2 otherwise.
pub fn xi3_strong_cycle_formula(delta: usize, xi: usize) -> Result<usize, InvariantError> {
    if delta < 2 {
        return Err(InvariantError::DegreeTooSmall(delta));
    }
    if xi < 2 * delta - 2 {
        return Err(InvariantError::ImpossibleProfile { delta, xi });
    }
    Ok(if xi == 2 * delta - 2 {
        9 * delta
    } else {
        9 * delta + 2
    })
}

/// ξ₃(G ⊠ Kₙ) = 3nδ(G) + 3n − 9, attained by a triangle inside one
/// Kₙ-layer over a minimum-degree vertex.
pub fn xi3_strong_complete_formula(delta: usize, n: usize) -> usize {
    (3 * n * delta + 3 * n).saturating_sub(9)
}
