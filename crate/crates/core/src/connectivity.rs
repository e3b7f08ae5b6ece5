//! Edge-connectivity and k-restricted edge-connectivity.
//!
//! Two independent routes compute λ₂ and λ₃:
//!
//! * **flow**: for a connected graph, the minimum k-restricted cut `∂(X)` has
//!   `G[X]` and `G[X̄]` connected, so each side contains a connected k-set
//!   (an edge for k = 2, a path or triangle for k = 3). Conversely both sides
//!   of a minimum cut between two contracted connected k-sets are connected,
//!   hence form a valid k-restricted cut. λ_k is therefore the minimum, over
//!   disjoint connected k-sets `A`, `B`, of the minimum `A`–`B` cut. The side
//!   holding vertex 0 always contains a connected k-set through vertex 0, so
//!   `A` only ranges over those.
//! * **oracle**: exhaustive scan of all bipartitions `X ∋ 0`, keeping those
//!   whose both sides split into components of order at least k.

use alloc::vec::Vec;
use core::fmt;

use serde::{de, Deserialize, Deserializer, Serialize, Serializer};

use crate::flow::kernel_for;
use crate::graph::{CutResult, Graph, GraphError, VertexSet};
use crate::invariants::{self, connected_triples, Triple};

/// Default order limit for exhaustive bipartition scans.
pub const DEFAULT_ORACLE_LIMIT: usize = 24;
/// Bipartitions are held in a `u64`; the oracle never goes beyond this.
pub const MAX_ORACLE_ORDER: usize = 63;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum EngineError {
    #[error("needs at least {needed} vertices, graph has {order}")]
    TooFewVertices { needed: usize, order: usize },
    #[error("order {order} exceeds the oracle limit of {limit}")]
    OracleLimit { order: usize, limit: usize },
    #[error("restriction level must be at least 1")]
    InvalidLevel,
    #[error("no flow method for {0}-restricted cuts; use the oracle")]
    FlowUnsupported(usize),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// A cut size, or `+∞` when no cut of the requested kind exists.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CutValue {
    Finite(usize),
    Infinite,
}

impl CutValue {
    pub fn finite(self) -> Option<usize> {
        match self {
            Self::Finite(v) => Some(v),
            Self::Infinite => None,
        }
    }

    pub fn is_infinite(self) -> bool {
        self == Self::Infinite
    }
}

impl fmt::Display for CutValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Finite(v) => write!(f, "{v}"),
            Self::Infinite => f.write_str("infinity"),
        }
    }
}

impl From<usize> for CutValue {
    fn from(v: usize) -> Self {
        Self::Finite(v)
    }
}

impl Serialize for CutValue {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self {
            Self::Finite(v) => serializer.serialize_u64(*v as u64),
            Self::Infinite => serializer.serialize_str("infinity"),
        }
    }
}

impl<'de> Deserialize<'de> for CutValue {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        struct Visitor;
        impl de::Visitor<'_> for Visitor {
            type Value = CutValue;
            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("a non-negative integer or \"infinity\"")
            }
            fn visit_u64<E: de::Error>(self, v: u64) -> Result<CutValue, E> {
                Ok(CutValue::Finite(v as usize))
            }
            fn visit_i64<E: de::Error>(self, v: i64) -> Result<CutValue, E> {
                usize::try_from(v)
                    .map(CutValue::Finite)
                    .map_err(|_| E::custom("negative cut value"))
            }
            fn visit_str<E: de::Error>(self, v: &str) -> Result<CutValue, E> {
                if v == "infinity" {
                    Ok(CutValue::Infinite)
                } else {
                    Err(E::invalid_value(de::Unexpected::Str(v), &self))
                }
            }
        }
        deserializer.deserialize_any(Visitor)
    }
}

/// Minimum k-restricted edge-cut; `witness` is `None` exactly when the
/// value is infinite.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RestrictedCut {
    pub k: usize,
    pub value: CutValue,
    pub witness: Option<CutResult>,
}

impl RestrictedCut {
    fn infinite(k: usize) -> Self {
        Self {
            k,
            value: CutValue::Infinite,
            witness: None,
        }
    }

    fn from_side(g: &Graph, k: usize, side: VertexSet) -> Self {
        let side = normalize_side(side);
        let cut = g.boundary_unchecked(&side);
        Self {
            k,
            value: CutValue::Finite(cut.value),
            witness: Some(cut),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    Flow,
    Oracle,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Flow => "flow",
            Self::Oracle => "oracle",
        })
    }
}

/// Witness sides are reported as the side holding vertex 0.
fn normalize_side(side: VertexSet) -> VertexSet {
    if side.contains(0) {
        side
    } else {
        side.complement()
    }
}

/// True when removing `edges` disconnects `g` and every component of what
/// remains has at least `k` vertices.
pub fn is_restricted_cut(g: &Graph, edges: &[(usize, usize)], k: usize) -> bool {
    let mut kept = Vec::new();
    let mut removed: Vec<(usize, usize)> = edges
        .iter()
        .map(|&(u, v)| if u < v { (u, v) } else { (v, u) })
        .collect();
    removed.sort_unstable();
    for e in g.edges() {
        if removed.binary_search(&e).is_err() {
            kept.push(e);
        }
    }
    let Ok(rest) = Graph::from_edge_list(g.order(), &kept) else {
        return false;
    };
    let comps = rest.components();
    comps.len() >= 2 && comps.iter().all(|c| c.len() >= k)
}

/// Every component of `G[X]` has at least `k` vertices (vacuous when `X` is
/// empty).
fn components_at_least(g: &Graph, x: &VertexSet, k: usize) -> bool {
    k <= 1 || g.components_within(x).iter().all(|c| c.len() >= k)
}

/// Answer for a disconnected graph: `∅` is a k-restricted cut exactly when
/// every component has order at least `k`.
fn disconnected_answer(g: &Graph, k: usize) -> RestrictedCut {
    let comps = g.components();
    if comps.iter().all(|c| c.len() >= k) {
        RestrictedCut::from_side(g, k, comps[0].clone())
    } else {
        RestrictedCut::infinite(k)
    }
}

/// Edge-connectivity λ(G).
pub fn edge_connectivity(g: &Graph) -> Result<usize, EngineError> {
    Ok(minimum_edge_cut(g)?
        .value
        .finite()
        .expect("graphs with two vertices have an edge-cut"))
}

/// A minimum edge-cut (k = 1) found by flows from vertex 0 to every other
/// vertex; ties keep the first sink in vertex order.
pub fn minimum_edge_cut(g: &Graph) -> Result<RestrictedCut, EngineError> {
    let n = g.order();
    if n < 2 {
        return Err(EngineError::TooFewVertices {
            needed: 2,
            order: n,
        });
    }
    if !g.is_connected() {
        return Ok(disconnected_answer(g, 1));
    }
    let mut kernel = kernel_for(g);
    let mut best: Option<(usize, VertexSet)> = None;
    for t in 1..n {
        let limit = best.as_ref().map_or(usize::MAX, |b| b.0);
        let value = kernel.flow(&[0], &[t], limit);
        if value < limit {
            best = Some((value, kernel.source_side()));
        }
    }
    let (_, side) = best.expect("n >= 2");
    Ok(RestrictedCut::from_side(g, 1, side))
}

/// Restricted edge-connectivity λ₂(G).
pub fn lambda2(
    g: &Graph,
    method: Method,
    oracle_limit: usize,
) -> Result<RestrictedCut, EngineError> {
    let n = g.order();
    if n < 4 {
        return Err(EngineError::TooFewVertices {
            needed: 4,
            order: n,
        });
    }
    match method {
        Method::Oracle => lambda_k_oracle(g, 2, oracle_limit),
        Method::Flow => {
            if !g.is_connected() {
                return Ok(disconnected_answer(g, 2));
            }
            let seeds: Vec<Vec<usize>> = g.edges().map(|(u, v)| alloc::vec![u, v]).collect();
            Ok(flow_search(g, 2, &seeds))
        }
    }
}

/// Two vertex-disjoint connected triples, if any exist.
///
/// For a connected graph this is exactly the condition for a 3-restricted
/// edge-cut to exist.
pub fn disjoint_triple_pair(g: &Graph) -> Option<(Triple, Triple)> {
    let triples = connected_triples(g);
    for (i, a) in triples.iter().enumerate() {
        for b in &triples[i + 1..] {
            if a.iter().all(|v| !b.contains(v)) {
                return Some((*a, *b));
            }
        }
    }
    None
}

pub fn has_3_restricted_cut(g: &Graph) -> bool {
    disjoint_triple_pair(g).is_some()
}

/// 3-restricted edge-connectivity λ₃(G). Graphs too small to split into two
/// parts of order three get `+∞`, not an error.
pub fn lambda3(
    g: &Graph,
    method: Method,
    oracle_limit: usize,
) -> Result<RestrictedCut, EngineError> {
    match method {
        Method::Oracle => {
            if g.order() < 6 {
                return Ok(RestrictedCut::infinite(3));
            }
            lambda_k_oracle(g, 3, oracle_limit)
        }
        Method::Flow => {
            if g.order() < 6 {
                return Ok(RestrictedCut::infinite(3));
            }
            if !g.is_connected() {
                return Ok(disconnected_answer(g, 3));
            }
            if !has_3_restricted_cut(g) {
                return Ok(RestrictedCut::infinite(3));
            }
            let seeds: Vec<Vec<usize>> = connected_triples(g).iter().map(|t| t.to_vec()).collect();
            Ok(flow_search(g, 3, &seeds))
        }
    }
}

/// λ_k by the requested method; flows cover k ≤ 3.
pub fn restricted_edge_connectivity(
    g: &Graph,
    k: usize,
    method: Method,
    oracle_limit: usize,
) -> Result<RestrictedCut, EngineError> {
    match (k, method) {
        (0, _) => Err(EngineError::InvalidLevel),
        (1, Method::Flow) => minimum_edge_cut(g),
        (2, _) => lambda2(g, method, oracle_limit),
        (3, _) => lambda3(g, method, oracle_limit),
        (_, Method::Oracle) => lambda_k_oracle(g, k, oracle_limit),
        (_, Method::Flow) => Err(EngineError::FlowUnsupported(k)),
    }
}

/// Minimum over pairs of disjoint seeds (`A ∋ 0`) of the `A`–`B` cut, for a
/// connected graph. Seeds must be connected k-sets.
fn flow_search(g: &Graph, k: usize, seeds: &[Vec<usize>]) -> RestrictedCut {
    let n = g.order();
    let mut best: Option<(usize, VertexSet)> = None;

    // Cuts isolating a single seed: cheap upper bounds that also settle ties.
    for seed in seeds {
        let side = VertexSet::from_vertices(n, seed.iter().copied()).expect("in range");
        if !components_at_least(g, &side.complement(), k) {
            continue;
        }
        let value = g.boundary_size(&side);
        let side = normalize_side(side);
        let better = match &best {
            None => true,
            Some((v, s)) => value < *v || (value == *v && lex_less_sets(&side, s)),
        };
        if better {
            best = Some((value, side));
        }
    }

    let mut kernel = kernel_for(g);
    for a in seeds.iter().filter(|s| s.contains(&0)) {
        for b in seeds {
            if b.iter().any(|v| a.contains(v)) {
                continue;
            }
            let limit = best.as_ref().map_or(usize::MAX, |b| b.0);
            let value = kernel.flow(a, b, limit);
            if value < limit {
                best = Some((value, kernel.source_side()));
            }
        }
    }

    match best {
        Some((_, side)) => RestrictedCut::from_side(g, k, side),
        None => RestrictedCut::infinite(k),
    }
}

fn lex_less_sets(a: &VertexSet, b: &VertexSet) -> bool {
    a.iter().lt(b.iter())
}

/// Sorted-list lexicographic order of two vertex masks.
fn lex_less_masks(mut a: u64, mut b: u64) -> bool {
    loop {
        match (a == 0, b == 0) {
            (true, true) | (false, true) => return false,
            (true, false) => return true,
            (false, false) => {}
        }
        let (x, y) = (a.trailing_zeros(), b.trailing_zeros());
        if x != y {
            return x < y;
        }
        a &= a - 1;
        b &= b - 1;
    }
}

fn mask_components_at_least(adjacency: &[u64], set: u64, k: usize) -> bool {
    if k <= 1 {
        return true;
    }
    let mut rest = set;
    while rest != 0 {
        let mut comp = rest & rest.wrapping_neg();
        let mut frontier = comp;
        while frontier != 0 {
            let mut grow = 0u64;
            let mut f = frontier;
            while f != 0 {
                grow |= adjacency[f.trailing_zeros() as usize];
                f &= f - 1;
            }
            frontier = grow & set & !comp;
            comp |= frontier;
        }
        if (comp.count_ones() as usize) < k {
            return false;
        }
        rest &= !comp;
    }
    true
}

/// Result of an exhaustive bipartition scan.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct OracleScan {
    pub value: CutValue,
    /// Sides `X ∋ 0` attaining the minimum, in lexicographic order; only the
    /// first is kept unless every minimum cut was requested.
    pub sides: Vec<u64>,
}

pub(crate) fn oracle_scan(
    g: &Graph,
    k: usize,
    limit: usize,
    all_minimum: bool,
) -> Result<OracleScan, EngineError> {
    if k == 0 {
        return Err(EngineError::InvalidLevel);
    }
    let n = g.order();
    let limit = limit.min(MAX_ORACLE_ORDER);
    if n > limit {
        return Err(EngineError::OracleLimit { order: n, limit });
    }
    if n < 2 {
        return Ok(OracleScan {
            value: CutValue::Infinite,
            sides: Vec::new(),
        });
    }
    let adjacency = g.adjacency_masks();
    let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let mut best = usize::MAX;
    let mut sides: Vec<u64> = Vec::new();
    for free in 0..(1u64 << (n - 1)) {
        let x = 1 | (free << 1);
        if x == full {
            continue;
        }
        let y = full & !x;
        let mut value = 0usize;
        let mut bits = x;
        while bits != 0 {
            value += (adjacency[bits.trailing_zeros() as usize] & y).count_ones() as usize;
            bits &= bits - 1;
            if value > best {
                break;
            }
        }
        if value > best {
            continue;
        }
        if value == best && !all_minimum && !lex_less_masks(x, sides[0]) {
            continue;
        }
        if !mask_components_at_least(&adjacency, x, k)
            || !mask_components_at_least(&adjacency, y, k)
        {
            continue;
        }
        if value < best {
            best = value;
            sides.clear();
            sides.push(x);
        } else if all_minimum {
            sides.push(x);
        } else {
            sides[0] = x;
        }
    }
    if sides.is_empty() {
        return Ok(OracleScan {
            value: CutValue::Infinite,
            sides,
        });
    }
    sides.sort_unstable_by(|&a, &b| {
        if lex_less_masks(a, b) {
            core::cmp::Ordering::Less
        } else if a == b {
            core::cmp::Ordering::Equal
        } else {
            core::cmp::Ordering::Greater
        }
    });
    Ok(OracleScan {
        value: CutValue::Finite(best),
        sides,
    })
}

/// Exact λ_k by exhaustive bipartition enumeration; the witness side is the
/// lexicographically smallest minimum side (it always holds vertex 0).
pub fn lambda_k_oracle(g: &Graph, k: usize, limit: usize) -> Result<RestrictedCut, EngineError> {
    let scan = oracle_scan(g, k, limit, false)?;
    Ok(match scan.sides.first() {
        Some(&x) => RestrictedCut::from_side(g, k, VertexSet::from_mask(g.order(), x)),
        None => RestrictedCut::infinite(k),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Property {
    MaximallyEdgeConnected,
    SuperEdgeConnected,
    MaximallyRestricted,
    SuperRestricted,
    Maximally3Restricted,
    Super3Restricted,
}

impl Property {
    pub const ALL: [Property; 6] = [
        Self::MaximallyEdgeConnected,
        Self::SuperEdgeConnected,
        Self::MaximallyRestricted,
        Self::SuperRestricted,
        Self::Maximally3Restricted,
        Self::Super3Restricted,
    ];

    /// Restriction level the property talks about.
    pub fn level(self) -> usize {
        match self {
            Self::MaximallyEdgeConnected | Self::SuperEdgeConnected => 1,
            Self::MaximallyRestricted | Self::SuperRestricted => 2,
            Self::Maximally3Restricted | Self::Super3Restricted => 3,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Outcome {
    Holds,
    Fails,
    NotApplicable,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case", tag = "kind")]
pub enum Certificate {
    /// The connectivity value and the degree bound it is compared with.
    Comparison {
        connectivity: CutValue,
        bound: usize,
    },
    /// A minimum cut: a counterexample when the property fails.
    MinimumCut {
        cut: CutResult,
    },
    Undefined {
        reason: &'static str,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassifierVerdict {
    pub property: Property,
    pub outcome: Outcome,
    pub certificate: Certificate,
}

impl ClassifierVerdict {
    /// `None` when the property is not applicable.
    pub fn holds(&self) -> Option<bool> {
        match self.outcome {
            Outcome::Holds => Some(true),
            Outcome::Fails => Some(false),
            Outcome::NotApplicable => None,
        }
    }

    fn undefined(property: Property, reason: &'static str) -> Self {
        Self {
            property,
            outcome: Outcome::NotApplicable,
            certificate: Certificate::Undefined { reason },
        }
    }
}

/// Decides one of the maximal / super properties.
///
/// Maximal properties compare a flow-computed connectivity with its degree
/// bound. Super properties scan every minimum cut exhaustively, so they need
/// `order <= oracle_limit`.
pub fn classify(
    g: &Graph,
    property: Property,
    oracle_limit: usize,
) -> Result<ClassifierVerdict, EngineError> {
    let k = property.level();
    let n = g.order();
    let needed = [2, 4, 6][k - 1];
    if n < needed {
        return Ok(ClassifierVerdict::undefined(property, "graph too small"));
    }
    let connectivity = restricted_edge_connectivity(g, k, Method::Flow, oracle_limit)?;
    if connectivity.value.is_infinite() {
        return Ok(ClassifierVerdict::undefined(
            property,
            "no restricted cut exists",
        ));
    }
    match property {
        Property::MaximallyEdgeConnected
        | Property::MaximallyRestricted
        | Property::Maximally3Restricted => {
            let bound = match property {
                Property::MaximallyEdgeConnected => invariants::min_degree(g).ok(),
                Property::MaximallyRestricted => invariants::xi(g),
                _ => invariants::xi3(g),
            };
            let Some(bound) = bound else {
                return Ok(ClassifierVerdict::undefined(
                    property,
                    "degree bound undefined",
                ));
            };
            let holds = connectivity.value == CutValue::Finite(bound);
            Ok(ClassifierVerdict {
                property,
                outcome: if holds {
                    Outcome::Holds
                } else {
                    Outcome::Fails
                },
                certificate: Certificate::Comparison {
                    connectivity: connectivity.value,
                    bound,
                },
            })
        }
        Property::SuperEdgeConnected | Property::SuperRestricted | Property::Super3Restricted => {
            let scan = oracle_scan(g, k, oracle_limit, true)?;
            let isolates = |x: u64| {
                let size = x.count_ones() as usize;
                size == k || n - size == k
            };
            let pick = scan
                .sides
                .iter()
                .copied()
                .find(|&x| !isolates(x))
                .unwrap_or(scan.sides[0]);
            let holds = isolates(pick);
            Ok(ClassifierVerdict {
                property,
                outcome: if holds {
                    Outcome::Holds
                } else {
                    Outcome::Fails
                },
                certificate: Certificate::MinimumCut {
                    cut: g.boundary_unchecked(&VertexSet::from_mask(n, pick)),
                },
            })
        }
    }
}
