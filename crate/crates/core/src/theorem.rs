//! Closed-form predictions for λ₂ and λ₃ of strong products, their
//! hypotheses, and comparison against engine values.

use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::connectivity::{
    self, has_3_restricted_cut, CutValue, EngineError, Method, RestrictedCut, MAX_ORACLE_ORDER,
};
use crate::generators::{self, GeneratorError};
use crate::graph::{CutResult, Graph, VertexSet};
use crate::invariants;
use crate::products::{self, k2_odot, ProductError};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum TheoremError {
    #[error("{0} takes a second factor; supply its order n")]
    MissingFactorOrder(TheoremId),
    #[error("factor graph has no vertices")]
    EmptyFactor,
    #[error("factor must be connected")]
    DisconnectedFactor,
    #[error("factor of order {0} is too small; need at least {1}")]
    FactorTooSmall(usize, usize),
    #[error("exhaustive check limited to factors of order {limit}, got {order}")]
    ExhaustiveLimit { order: usize, limit: usize },
    #[error("unknown theorem id {0:?}")]
    UnknownTheorem(alloc::string::String),
    #[error(transparent)]
    Generator(#[from] GeneratorError),
    #[error(transparent)]
    Product(#[from] ProductError),
    #[error(transparent)]
    Engine(#[from] EngineError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum TheoremId {
    /// λ₂(G ⊠ Cₙ).
    #[serde(rename = "T1.1")]
    T11,
    /// λ₂(G ⊠ Kₙ).
    #[serde(rename = "T1.2")]
    T12,
    /// λ₃ ≤ ξ₃.
    #[serde(rename = "L2.4")]
    L24,
    /// Lifted-cut upper bound on λ₃(G ⊠ H).
    #[serde(rename = "L2.5")]
    L25,
    /// λ₃(G ⊠ Cₙ).
    #[serde(rename = "T3.1")]
    T31,
    /// λ₃(G ⊠ Kₙ).
    #[serde(rename = "T3.2")]
    T32,
    /// Sufficient condition for G ⊠ Kₙ to be maximally 3-restricted.
    #[serde(rename = "C3.3")]
    C33,
}

impl TheoremId {
    pub const ALL: [TheoremId; 7] = [
        Self::T11,
        Self::T12,
        Self::L24,
        Self::L25,
        Self::T31,
        Self::T32,
        Self::C33,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Self::T11 => "T1.1",
            Self::T12 => "T1.2",
            Self::L24 => "L2.4",
            Self::L25 => "L2.5",
            Self::T31 => "T3.1",
            Self::T32 => "T3.2",
            Self::C33 => "C3.3",
        }
    }

    /// Second factor used when none is requested.
    pub fn default_factor(self) -> Factor {
        match self {
            Self::T12 | Self::T32 | Self::C33 => Factor::Complete,
            _ => Factor::Cycle,
        }
    }

    /// Whether the statement fixes the second factor family.
    fn fixed_factor(self) -> bool {
        !matches!(self, Self::L24 | Self::L25)
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for TheoremId {
    type Err = TheoremError;

    /// Case-insensitive, e.g. `t3.1`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Self::ALL
            .into_iter()
            .find(|id| id.as_str().eq_ignore_ascii_case(s))
            .ok_or_else(|| TheoremError::UnknownTheorem(s.into()))
    }
}

/// Family of the second factor `H`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Factor {
    Cycle,
    Complete,
}

impl Factor {
    pub fn build(self, n: usize) -> Result<Graph, GeneratorError> {
        match self {
            Self::Cycle => generators::cycle(n),
            Self::Complete => generators::complete(n),
        }
    }
}

pub fn predict_lambda2_strong_cycle(
    m: usize,
    e: usize,
    delta: usize,
    lambda: usize,
    n: usize,
) -> usize {
    [3 * n * lambda, 2 * (m + 2 * e), 6 * delta + 2]
        .into_iter()
        .min()
        .unwrap()
}

pub fn predict_lambda2_strong_complete(
    m: usize,
    e: usize,
    delta: usize,
    lambda: usize,
    n: usize,
) -> usize {
    [
        n * n * lambda,
        (n - 1) * (m + 2 * e),
        (2 * n * delta + 2 * n).saturating_sub(4),
    ]
    .into_iter()
    .min()
    .unwrap()
}

/// 9δ when ξ = 2δ − 2, else 9δ + 2.
pub fn predict_lambda3_strong_cycle(delta: usize, xi: usize) -> usize {
    if xi + 2 == 2 * delta {
        9 * delta
    } else {
        9 * delta + 2
    }
}

pub fn predict_lambda3_strong_complete(m: usize, e: usize, delta: usize, n: usize) -> usize {
    [
        n * n * delta,
        (n - 1) * (m + 2 * e),
        invariants::xi3_strong_complete_formula(delta, n),
    ]
    .into_iter()
    .min()
    .unwrap()
}

/// The sufficient condition `min{n²δ, (n−1)(m+2e)} ≥ 3nδ + 3n − 9`.
pub fn maximality_condition(m: usize, e: usize, delta: usize, n: usize) -> bool {
    (n * n * delta).min((n - 1) * (m + 2 * e)) >= invariants::xi3_strong_complete_formula(delta, n)
}

/// Upper bound on λ₃(G ⊠ H) from lifting minimum factor cuts.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LiftedBound {
    pub value: usize,
    /// `(n + 2e(H))·λ(G)`.
    pub left_term: usize,
    /// `(m + 2e(G))·λ(H)`.
    pub right_term: usize,
    /// `X × V(H)` for a minimum cut `X` of `G`.
    pub left_witness: CutResult,
    /// `V(G) × Y` for a minimum cut `Y` of `H`.
    pub right_witness: CutResult,
}

fn min_cut_side(g: &Graph) -> Result<VertexSet, TheoremError> {
    connectivity::minimum_edge_cut(g)?
        .witness
        .map(|w| w.side_x)
        .ok_or(TheoremError::DisconnectedFactor)
}

pub fn lifted_cut_bound(g: &Graph, h: &Graph) -> Result<LiftedBound, TheoremError> {
    for f in [g, h] {
        if f.order() < 3 {
            return Err(TheoremError::FactorTooSmall(f.order(), 3));
        }
        if !f.is_connected() {
            return Err(TheoremError::DisconnectedFactor);
        }
    }
    let (m, n) = (g.order(), h.order());
    let p = products::strong_product(g, h)?;
    let x = min_cut_side(g)?;
    let y = min_cut_side(h)?;
    let lifted_x =
        VertexSet::from_vertices(m * n, x.iter().flat_map(|a| (0..n).map(move |b| a * n + b)))
            .expect("in range");
    let lifted_y =
        VertexSet::from_vertices(m * n, (0..m).flat_map(|a| y.iter().map(move |b| a * n + b)))
            .expect("in range");
    let left_term = (n + 2 * h.size()) * connectivity::edge_connectivity(g)?;
    let right_term = (m + 2 * g.size()) * connectivity::edge_connectivity(h)?;
    Ok(LiftedBound {
        value: left_term.min(right_term),
        left_term,
        right_term,
        left_witness: p.graph.boundary(&lifted_x).expect("proper subset"),
        right_witness: p.graph.boundary(&lifted_y).expect("proper subset"),
    })
}

/// Largest `n(H)` accepted by [`check_k2_odot_cut_bound`].
pub const K2_ODOT_LIMIT: usize = 12;

/// Minimum boundary in `K₂ ⊙ H` over bipartitions that split both fibers,
/// against `2λ(H)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FiberSplitCheck {
    pub h_order: usize,
    pub bound: usize,
    /// `None` when no bipartition splits both fibers (`n(H) = 1`).
    pub min_boundary: Option<usize>,
    pub witness: Option<VertexSet>,
}

impl FiberSplitCheck {
    pub fn holds(&self) -> bool {
        self.min_boundary.is_none_or(|b| b >= self.bound)
    }
}

/// Exhaustive scan of `K₂ ⊙ H` for a connected `H`.
pub fn check_k2_odot_cut_bound(h: &Graph) -> Result<FiberSplitCheck, TheoremError> {
    let n = h.order();
    if n == 0 {
        return Err(TheoremError::EmptyFactor);
    }
    if n > K2_ODOT_LIMIT {
        return Err(TheoremError::ExhaustiveLimit {
            order: n,
            limit: K2_ODOT_LIMIT,
        });
    }
    if !h.is_connected() {
        return Err(TheoremError::DisconnectedFactor);
    }
    let bound = 2 * if n < 2 {
        0
    } else {
        connectivity::edge_connectivity(h)?
    };
    let p = k2_odot(h);
    let adjacency = p.graph.adjacency_masks();
    let fiber = (1u64 << n) - 1;
    let mut best: Option<(usize, u64)> = None;
    // (a, y₀) is kept in X, so each bipartition is seen once
    for rest in 0..(1u64 << (2 * n - 1)) {
        let x = (rest << 1) | 1;
        let (a, b) = (x & fiber, (x >> n) & fiber);
        if a == fiber || b == 0 || b == fiber {
            continue;
        }
        let boundary: u32 = (0..2 * n)
            .filter(|&v| x >> v & 1 == 1)
            .map(|v| (adjacency[v] & !x).count_ones())
            .sum();
        if best.is_none_or(|(value, _)| (boundary as usize) < value) {
            best = Some((boundary as usize, x));
        }
    }
    Ok(FiberSplitCheck {
        h_order: n,
        bound,
        min_boundary: best.map(|(value, _)| value),
        witness: best.map(|(_, x)| VertexSet::from_mask(2 * n, x)),
    })
}

/// Product orders up to `oracle` use exhaustive search, up to `flow` use
/// max-flow, beyond that nothing is computed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Budget {
    pub oracle: usize,
    pub flow: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Self {
            oracle: connectivity::DEFAULT_ORACLE_LIMIT,
            flow: 2000,
        }
    }
}

impl Budget {
    pub fn method_for(&self, order: usize) -> Option<Method> {
        if order <= self.oracle.min(MAX_ORACLE_ORDER) {
            Some(Method::Oracle)
        } else if order <= self.flow {
            Some(Method::Flow)
        } else {
            None
        }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckOptions {
    pub budget: Budget,
    /// Second factor for L2.4 and L2.5; the other statements fix their own.
    pub factor: Option<Factor>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Relation {
    Equal,
    AtMost,
}

impl Relation {
    fn holds(self, computed: CutValue, predicted: CutValue) -> bool {
        match self {
            Self::Equal => computed == predicted,
            Self::AtMost => computed <= predicted,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Prediction {
    /// Which quantity is compared: `lambda2` or `lambda3`.
    pub quantity: &'static str,
    pub relation: Relation,
    pub value: CutValue,
    pub formula: &'static str,
    /// The individual terms of the formula, in the order written.
    pub terms: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Hypothesis {
    pub name: &'static str,
    pub holds: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Confirmed,
    Violated,
    HypothesesUnmet,
    OracleTooLarge,
}

impl Verdict {
    pub const ALL: [Verdict; 4] = [
        Self::Confirmed,
        Self::Violated,
        Self::HypothesesUnmet,
        Self::OracleTooLarge,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Self::Confirmed => "confirmed",
            Self::Violated => "violated",
            Self::HypothesesUnmet => "hypotheses-unmet",
            Self::OracleTooLarge => "oracle-too-large",
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Parameters of the first factor `G` as computed by the engine.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FactorProfile {
    pub order: usize,
    pub size: usize,
    pub min_degree: usize,
    pub edge_connectivity: usize,
    pub xi: Option<usize>,
    pub connected: bool,
}

impl FactorProfile {
    pub fn of(g: &Graph) -> Result<Self, TheoremError> {
        let min_degree = invariants::min_degree(g).map_err(|_| TheoremError::EmptyFactor)?;
        let edge_connectivity = if g.order() < 2 {
            0
        } else {
            connectivity::edge_connectivity(g)?
        };
        Ok(Self {
            order: g.order(),
            size: g.size(),
            min_degree,
            edge_connectivity,
            xi: invariants::xi(g),
            connected: g.is_connected(),
        })
    }

    pub fn maximally_edge_connected(&self) -> bool {
        self.connected && self.edge_connectivity == self.min_degree
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TheoremReport {
    pub theorem: TheoremId,
    /// Second factor; absent when L2.4 is run on `G` alone.
    pub factor: Option<Factor>,
    pub n: Option<usize>,
    pub g: FactorProfile,
    pub target_order: usize,
    pub hypotheses: Vec<Hypothesis>,
    pub predicted: Prediction,
    pub computed: Option<CutValue>,
    pub method: Option<Method>,
    /// ξ₃ of the target graph, where the statement involves it.
    pub xi3: Option<CutValue>,
    /// Whether the predicted relation held, also for exploratory runs.
    pub relation_holds: Option<bool>,
    /// Set when some hypothesis fails; the comparison is informational only.
    pub exploratory: bool,
    pub verdict: Verdict,
    pub witness: Option<CutResult>,
}

fn opt_value(v: Option<usize>) -> CutValue {
    v.map_or(CutValue::Infinite, CutValue::Finite)
}

fn hyp(name: &'static str, holds: bool) -> Hypothesis {
    Hypothesis { name, holds }
}

/// Engine results for one first factor `G`, keyed by second factor, level
/// and method. Reuse a cache only across checks of the same `G` and budget.
type CacheKey = (Option<(Factor, usize)>, usize, Method);

#[derive(Debug, Default)]
pub struct EvalCache {
    entries: Vec<(CacheKey, RestrictedCut)>,
}

impl EvalCache {
    pub fn new() -> Self {
        Self::default()
    }
}

/// Builds the target graph, checks hypotheses, computes λ₂ or λ₃ within the
/// budget and compares it with the prediction.
pub fn check_theorem(
    id: TheoremId,
    g: &Graph,
    n: Option<usize>,
    options: &CheckOptions,
) -> Result<TheoremReport, TheoremError> {
    check_theorem_cached(id, g, n, options, &mut EvalCache::new())
}

/// [`check_theorem`] sharing engine results through `cache`.
pub fn check_theorem_cached(
    id: TheoremId,
    g: &Graph,
    n: Option<usize>,
    options: &CheckOptions,
    cache: &mut EvalCache,
) -> Result<TheoremReport, TheoremError> {
    let profile = FactorProfile::of(g)?;
    let factor = if id.fixed_factor() {
        id.default_factor()
    } else {
        options.factor.unwrap_or(id.default_factor())
    };
    let (target, factor, h) = match (id, n) {
        (TheoremId::L24, None) => (g.clone(), None, None),
        (_, None) => return Err(TheoremError::MissingFactorOrder(id)),
        (_, Some(n)) => {
            let h = factor.build(n)?;
            (
                products::strong_product(g, &h)?.graph,
                Some(factor),
                Some(h),
            )
        }
    };
    let FactorProfile {
        order: m,
        size: e,
        min_degree: delta,
        edge_connectivity: lambda,
        ..
    } = profile;
    let nn = n.unwrap_or(0);
    let connected = profile.connected;
    let maximal = profile.maximally_edge_connected();
    let mut xi3 = None;

    let (hypotheses, predicted) = match id {
        TheoremId::T11 | TheoremId::T12 => {
            let cycle = id == TheoremId::T11;
            let terms = if cycle {
                alloc::vec![3 * nn * lambda, 2 * (m + 2 * e), 6 * delta + 2]
            } else {
                alloc::vec![
                    nn * nn * lambda,
                    (nn - 1) * (m + 2 * e),
                    (2 * nn * delta + 2 * nn).saturating_sub(4)
                ]
            };
            let hyps = alloc::vec![
                hyp("g-connected", connected),
                hyp("g-nontrivial", m >= 2),
                if cycle {
                    hyp("n>=3", nn >= 3)
                } else {
                    hyp("n>=4", nn >= 4)
                },
            ];
            let pred = Prediction {
                quantity: "lambda2",
                relation: Relation::Equal,
                value: CutValue::Finite(*terms.iter().min().unwrap()),
                formula: if cycle {
                    "min{3n*lambda(G), 2(m+2e(G)), 6delta(G)+2}"
                } else {
                    "min{n^2*lambda(G), (n-1)(m+2e(G)), 2n*delta(G)+2n-4}"
                },
                terms,
            };
            (hyps, pred)
        }
        TheoremId::L24 => {
            let x3 = opt_value(invariants::xi3(&target));
            xi3 = Some(x3);
            let hyps = alloc::vec![
                hyp("target-connected", target.is_connected()),
                hyp("target-order>=6", target.order() >= 6),
                hyp("has-3-restricted-cut", has_3_restricted_cut(&target)),
            ];
            let pred = Prediction {
                quantity: "lambda3",
                relation: Relation::AtMost,
                value: x3,
                formula: "xi3",
                terms: x3.finite().into_iter().collect(),
            };
            (hyps, pred)
        }
        TheoremId::L25 => {
            let h = h.as_ref().expect("product target");
            let hyps = alloc::vec![
                hyp("g-connected", connected),
                hyp("m>=3", m >= 3),
                hyp("n>=3", nn >= 3),
            ];
            let terms = alloc::vec![
                (nn + 2 * h.size()) * lambda,
                (m + 2 * e)
                    * if nn >= 2 {
                        connectivity::edge_connectivity(h)?
                    } else {
                        0
                    },
            ];
            let pred = Prediction {
                quantity: "lambda3",
                relation: Relation::AtMost,
                value: CutValue::Finite(*terms.iter().min().unwrap()),
                formula: "min{(n+2e(H))lambda(G), (m+2e(G))lambda(H)}",
                terms,
            };
            (hyps, pred)
        }
        TheoremId::T31 => {
            xi3 = Some(opt_value(invariants::xi3(&target)));
            let xi = profile.xi.unwrap_or(0);
            let hyps = alloc::vec![
                hyp("g-maximally-edge-connected", maximal),
                hyp("m>=5", m >= 5),
                hyp("delta>=2", delta >= 2),
                hyp("n>=4", nn >= 4),
            ];
            let value = predict_lambda3_strong_cycle(delta, xi);
            let pred = Prediction {
                quantity: "lambda3",
                relation: Relation::Equal,
                value: CutValue::Finite(value),
                formula: "9delta(G) if xi(G)=2delta(G)-2, else 9delta(G)+2",
                terms: alloc::vec![value],
            };
            (hyps, pred)
        }
        TheoremId::T32 | TheoremId::C33 => {
            let terms = alloc::vec![
                nn * nn * delta,
                (nn.saturating_sub(1)) * (m + 2 * e),
                invariants::xi3_strong_complete_formula(delta, nn),
            ];
            let mut hyps = alloc::vec![
                hyp("g-maximally-edge-connected", maximal),
                hyp("m>=3", m >= 3),
                hyp("n>=4", nn >= 4),
            ];
            let pred = if id == TheoremId::T32 {
                Prediction {
                    quantity: "lambda3",
                    relation: Relation::Equal,
                    value: CutValue::Finite(*terms.iter().min().unwrap()),
                    formula: "min{n^2*delta(G), (n-1)(m+2e(G)), 3n*delta(G)+3n-9}",
                    terms,
                }
            } else {
                hyps.push(hyp(
                    "min{n^2*delta, (n-1)(m+2e)}>=3n*delta+3n-9",
                    terms[0].min(terms[1]) >= terms[2],
                ));
                let x3 = opt_value(invariants::xi3(&target));
                xi3 = Some(x3);
                Prediction {
                    quantity: "lambda3",
                    relation: Relation::Equal,
                    value: x3,
                    formula: "xi3",
                    terms: x3.finite().into_iter().collect(),
                }
            };
            (hyps, pred)
        }
    };

    let exploratory = hypotheses.iter().any(|h| !h.holds);
    let method = options.budget.method_for(target.order());
    let cut = match method {
        Some(method) => {
            let key = (factor.zip(n), level(predicted.quantity), method);
            match cache.entries.iter().find(|(k, _)| *k == key) {
                Some((_, cut)) => Some(cut.clone()),
                None => {
                    let cut = compute(&target, key.1, method, options.budget.oracle)?;
                    cache.entries.push((key, cut.clone()));
                    Some(cut)
                }
            }
        }
        None => None,
    };
    let computed = cut.as_ref().map(|c| c.value);
    let relation_holds = computed.map(|c| {
        let mut ok = predicted.relation.holds(c, predicted.value);
        if id == TheoremId::T31 {
            // the closed form is also claimed to equal ξ₃ of the product
            ok &= xi3 == Some(predicted.value);
        }
        ok
    });
    let verdict = match relation_holds {
        _ if exploratory => Verdict::HypothesesUnmet,
        None => Verdict::OracleTooLarge,
        Some(true) => Verdict::Confirmed,
        Some(false) => Verdict::Violated,
    };
    Ok(TheoremReport {
        theorem: id,
        factor,
        n,
        g: profile,
        target_order: target.order(),
        hypotheses,
        predicted,
        computed,
        method,
        xi3,
        relation_holds,
        exploratory,
        verdict,
        witness: cut.and_then(|c| c.witness),
    })
}

fn level(quantity: &str) -> usize {
    if quantity == "lambda2" {
        2
    } else {
        3
    }
}

fn compute(
    target: &Graph,
    k: usize,
    method: Method,
    oracle_limit: usize,
) -> Result<RestrictedCut, TheoremError> {
    if k == 2 && target.order() < 4 {
        // no bipartition into two parts of order two
        return Ok(RestrictedCut {
            k,
            value: CutValue::Infinite,
            witness: None,
        });
    }
    let limit = oracle_limit.min(MAX_ORACLE_ORDER);
    Ok(connectivity::restricted_edge_connectivity(
        target, k, method, limit,
    )?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::connectivity::is_restricted_cut;
    use crate::generators::{complete, cycle, star, subdivided_complete};

    #[test]
    fn lambda2_predictions() {
        assert_eq!(predict_lambda2_strong_cycle(5, 5, 2, 2, 4), 14);
        assert_eq!(predict_lambda2_strong_cycle(4, 6, 3, 3, 3), 20);
        assert_eq!(predict_lambda2_strong_complete(5, 5, 2, 2, 4), 20);
        assert_eq!(predict_lambda2_strong_complete(4, 6, 3, 3, 4), 28);
    }

    #[test]
    fn lambda3_predictions() {
        assert_eq!(predict_lambda3_strong_cycle(2, 2), 18);
        assert_eq!(predict_lambda3_strong_cycle(2, 3), 20);
        assert_eq!(predict_lambda3_strong_cycle(4, 6), 36);
        assert_eq!(predict_lambda3_strong_complete(5, 5, 2, 4), 27);
        assert_eq!(predict_lambda3_strong_complete(3, 3, 2, 4), 27);
        assert_eq!(predict_lambda3_strong_complete(3, 2, 1, 4), 15);
        assert!(maximality_condition(5, 5, 2, 4));
    }

    #[test]
    fn theorem_ids_parse() {
        assert_eq!("t3.1".parse::<TheoremId>(), Ok(TheoremId::T31));
        assert_eq!("C3.3".parse::<TheoremId>(), Ok(TheoremId::C33));
        assert!("t9.9".parse::<TheoremId>().is_err());
        assert_eq!(serde_json::to_string(&TheoremId::L25).unwrap(), "\"L2.5\"");
    }

    #[test]
    fn lifted_bounds() {
        let c5 = cycle(5).unwrap();
        let b = lifted_cut_bound(&c5, &cycle(4).unwrap()).unwrap();
        assert_eq!((b.left_term, b.right_term, b.value), (24, 30, 24));
        let b = lifted_cut_bound(&c5, &complete(4).unwrap()).unwrap();
        assert_eq!((b.left_term, b.right_term, b.value), (32, 45, 32));
        let p = products::strong_product(&c5, &complete(4).unwrap())
            .unwrap()
            .graph;
        for w in [&b.left_witness, &b.right_witness] {
            assert!(is_restricted_cut(&p, &w.edges, 3));
        }
        assert_eq!(b.left_witness.value, 32);
        assert_eq!(b.right_witness.value, 45);
        assert_eq!(
            lifted_cut_bound(&complete(2).unwrap(), &c5),
            Err(TheoremError::FactorTooSmall(2, 3))
        );
    }

    #[test]
    fn fiber_split_bound_small() {
        let r = check_k2_odot_cut_bound(&cycle(4).unwrap()).unwrap();
        assert_eq!(r.bound, 4);
        assert!(r.holds());
        let r = check_k2_odot_cut_bound(&complete(1).unwrap()).unwrap();
        assert_eq!(r.min_boundary, None);
        assert!(check_k2_odot_cut_bound(&Graph::empty(3)).is_err());
    }

    #[test]
    fn verify_cycle_branches() {
        let opts = CheckOptions::default();
        let r = check_theorem(TheoremId::T31, &cycle(5).unwrap(), Some(4), &opts).unwrap();
        assert_eq!(r.verdict, Verdict::Confirmed);
        assert_eq!(r.predicted.value, CutValue::Finite(18));
        assert_eq!(r.computed, Some(CutValue::Finite(18)));
        assert_eq!(r.method, Some(Method::Oracle));

        let s = subdivided_complete(4, 0).unwrap();
        let r = check_theorem(TheoremId::T31, &s, Some(4), &opts).unwrap();
        assert_eq!(r.verdict, Verdict::Confirmed);
        assert_eq!(r.computed, Some(CutValue::Finite(20)));
    }

    #[test]
    fn hypothesis_gate() {
        let opts = CheckOptions::default();
        let r = check_theorem(TheoremId::T31, &star(5).unwrap(), Some(4), &opts).unwrap();
        assert_eq!(r.verdict, Verdict::HypothesesUnmet);
        assert!(r.exploratory);
        assert!(r
            .hypotheses
            .iter()
            .any(|h| h.name == "delta>=2" && !h.holds));
        assert!(r
            .hypotheses
            .iter()
            .any(|h| h.name == "g-maximally-edge-connected" && h.holds));
        let r = check_theorem(TheoremId::T31, &cycle(5).unwrap(), Some(3), &opts).unwrap();
        assert_eq!(r.verdict, Verdict::HypothesesUnmet);
        assert_eq!(
            check_theorem(TheoremId::T32, &cycle(5).unwrap(), None, &opts),
            Err(TheoremError::MissingFactorOrder(TheoremId::T32))
        );
    }

    #[test]
    fn budget_refusal() {
        let opts = CheckOptions {
            budget: Budget {
                oracle: 10,
                flow: 12,
            },
            factor: None,
        };
        let r = check_theorem(TheoremId::T11, &cycle(5).unwrap(), Some(4), &opts).unwrap();
        assert_eq!(r.verdict, Verdict::OracleTooLarge);
        assert_eq!(r.computed, None);
    }

    #[test]
    fn maximality_condition_on_c5() {
        let opts = CheckOptions {
            budget: Budget {
                oracle: 0,
                flow: 2000,
            },
            factor: None,
        };
        let r = check_theorem(TheoremId::C33, &cycle(5).unwrap(), Some(4), &opts).unwrap();
        assert_eq!(r.verdict, Verdict::Confirmed);
        assert_eq!(r.predicted.value, CutValue::Finite(27));
        assert_eq!(r.method, Some(Method::Flow));
    }

    #[test]
    fn xi3_bound_on_factor_alone() {
        let r = check_theorem(
            TheoremId::L24,
            &cycle(6).unwrap(),
            None,
            &CheckOptions::default(),
        )
        .unwrap();
        assert_eq!(r.verdict, Verdict::Confirmed);
        assert_eq!(r.factor, None);
        assert_eq!(r.computed, Some(CutValue::Finite(2)));
    }
}
