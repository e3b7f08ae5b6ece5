//! Immutable simple undirected graphs, vertex subsets and edge boundaries.

use alloc::collections::VecDeque;
use alloc::vec::Vec;
use core::fmt;

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::flow::MultiGraph;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GraphError {
    #[error("edge ({0}, {1}) has an endpoint outside 0..{2}")]
    EndpointOutOfRange(usize, usize, usize),
    #[error("edge ({0}, {0}) is a self-loop")]
    SelfLoop(usize),
    #[error("vertex {0} is outside 0..{1}")]
    VertexOutOfRange(usize, usize),
    #[error("vertex set must be non-empty")]
    EmptySet,
    #[error("vertex set must be a proper subset of the vertex set")]
    FullSet,
    #[error("vertex set was built for order {set}, graph has order {graph}")]
    UniverseMismatch { set: usize, graph: usize },
    #[error("contracted set does not induce a connected subgraph")]
    DisconnectedContraction,
}

/// A subset of `0..universe`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    bits: FixedBitSet,
}

impl VertexSet {
    pub fn empty(universe: usize) -> Self {
        Self {
            bits: FixedBitSet::with_capacity(universe),
        }
    }

    pub fn full(universe: usize) -> Self {
        let mut bits = FixedBitSet::with_capacity(universe);
        bits.insert_range(..);
        Self { bits }
    }

    /// Builds a set from vertex ids; ids must be `< universe`.
    pub fn from_vertices<I>(universe: usize, vertices: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = usize>,
    {
        let mut set = Self::empty(universe);
        for v in vertices {
            if v >= universe {
                return Err(GraphError::VertexOutOfRange(v, universe));
            }
            set.bits.insert(v);
        }
        Ok(set)
    }

    /// Builds a set from the low `universe` bits of a mask (`universe <= 64`).
    pub fn from_mask(universe: usize, mask: u64) -> Self {
        debug_assert!(universe <= 64);
        let mut set = Self::empty(universe);
        let mut rest = mask;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if v < universe {
                set.bits.insert(v);
            }
        }
        set
    }

    pub fn universe(&self) -> usize {
        self.bits.len()
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_clear()
    }

    pub fn is_full(&self) -> bool {
        self.len() == self.universe()
    }

    pub fn contains(&self, v: usize) -> bool {
        v < self.universe() && self.bits.contains(v)
    }

    /// Inserts `v`. Panics if `v` is outside the universe.
    pub fn insert(&mut self, v: usize) {
        self.bits.insert(v);
    }

    pub fn remove(&mut self, v: usize) {
        if v < self.universe() {
            self.bits.set(v, false);
        }
    }

    pub fn complement(&self) -> Self {
        let mut bits = self.bits.clone();
        bits.toggle_range(..);
        Self { bits }
    }

    pub fn is_disjoint(&self, other: &Self) -> bool {
        self.bits.is_disjoint(&other.bits)
    }

    pub fn union_with(&mut self, other: &Self) {
        self.bits.union_with(&other.bits);
    }

    /// Members in increasing order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.bits.ones()
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl Serialize for VertexSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

/// Edge boundary of a bipartition `(side_x, V \ side_x)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CutResult {
    pub value: usize,
    pub side_x: VertexSet,
    /// Cut edges as `(u, v)` with `u < v`; parallel edges repeat.
    pub edges: Vec<(usize, usize)>,
}

/// `G[X]` together with the original id of every new vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InducedSubgraph {
    pub graph: Graph,
    pub original: Vec<usize>,
}

impl InducedSubgraph {
    /// New id of an original vertex, if it was kept.
    pub fn new_id(&self, original: usize) -> Option<usize> {
        self.original.binary_search(&original).ok()
    }
}

/// Simple undirected graph on `0..n` with sorted adjacency lists.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adjacency: Vec<Vec<usize>>,
    edge_count: usize,
}

impl Graph {
    /// Graph on `n` vertices with no edges.
    pub fn empty(n: usize) -> Self {
        Self {
            adjacency: alloc::vec![Vec::new(); n],
            edge_count: 0,
        }
    }

    /// Duplicate pairs (in either orientation) collapse to one edge.
    pub fn from_edge_list(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut adjacency = alloc::vec![Vec::new(); n];
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(GraphError::EndpointOutOfRange(u, v, n));
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        Ok(Self::from_adjacency_unchecked(adjacency))
    }

    /// Sorts and dedups the lists; callers guarantee symmetry and no loops.
    pub(crate) fn from_adjacency_unchecked(mut adjacency: Vec<Vec<usize>>) -> Self {
        let mut degree_sum = 0;
        for list in &mut adjacency {
            list.sort_unstable();
            list.dedup();
            degree_sum += list.len();
        }
        Self {
            adjacency,
            edge_count: degree_sum / 2,
        }
    }

    pub fn order(&self) -> usize {
        self.adjacency.len()
    }

    pub fn size(&self) -> usize {
        self.edge_count
    }

    pub fn degree(&self, v: usize) -> Result<usize, GraphError> {
        self.adjacency
            .get(v)
            .map(Vec::len)
            .ok_or(GraphError::VertexOutOfRange(v, self.order()))
    }

    /// Neighbours of `v` in increasing order. Panics if `v` is out of range.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.order() && self.adjacency[u].binary_search(&v).is_ok()
    }

    /// Every edge once as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adjacency.iter().enumerate().flat_map(|(u, list)| {
            list.iter()
                .copied()
                .filter(move |&v| u < v)
                .map(move |v| (u, v))
        })
    }

    pub fn to_edge_list(&self) -> Vec<(usize, usize)> {
        self.edges().collect()
    }

    pub fn degrees(&self) -> impl Iterator<Item = usize> + '_ {
        self.adjacency.iter().map(Vec::len)
    }

    /// Adjacency as bit masks; only meaningful for `order() <= 64`.
    pub(crate) fn adjacency_masks(&self) -> Vec<u64> {
        debug_assert!(self.order() <= 64);
        self.adjacency
            .iter()
            .map(|list| list.iter().fold(0u64, |m, &v| m | (1u64 << v)))
            .collect()
    }

    fn check_universe(&self, x: &VertexSet) -> Result<(), GraphError> {
        if x.universe() != self.order() {
            return Err(GraphError::UniverseMismatch {
                set: x.universe(),
                graph: self.order(),
            });
        }
        Ok(())
    }

    /// Edges between `x` and its complement.
    pub fn boundary(&self, x: &VertexSet) -> Result<CutResult, GraphError> {
        self.check_universe(x)?;
        if x.is_empty() {
            return Err(GraphError::EmptySet);
        }
        if x.is_full() {
            return Err(GraphError::FullSet);
        }
        Ok(self.boundary_unchecked(x))
    }

    pub(crate) fn boundary_unchecked(&self, x: &VertexSet) -> CutResult {
        let mut edges: Vec<(usize, usize)> = x
            .iter()
            .flat_map(|u| {
                self.adjacency[u]
                    .iter()
                    .copied()
                    .filter(|&v| !x.contains(v))
                    .map(move |v| if u < v { (u, v) } else { (v, u) })
            })
            .collect();
        edges.sort_unstable();
        CutResult {
            value: edges.len(),
            side_x: x.clone(),
            edges,
        }
    }

    /// `|∂(X)|` without materialising the edge list.
    pub fn boundary_size(&self, x: &VertexSet) -> usize {
        x.iter()
            .map(|u| {
                self.adjacency[u]
                    .iter()
                    .filter(|&&v| !x.contains(v))
                    .count()
            })
            .sum()
    }

    /// Connected components in order of their smallest vertex.
    pub fn components(&self) -> Vec<VertexSet> {
        self.components_within(&VertexSet::full(self.order()))
    }

    /// Components of `G[X]` as subsets of the full vertex range.
    pub fn components_within(&self, x: &VertexSet) -> Vec<VertexSet> {
        let n = self.order();
        let mut seen = VertexSet::empty(n);
        let mut out = Vec::new();
        let mut queue = VecDeque::new();
        for start in x.iter() {
            if seen.contains(start) {
                continue;
            }
            let mut comp = VertexSet::empty(n);
            seen.insert(start);
            comp.insert(start);
            queue.push_back(start);
            while let Some(u) = queue.pop_front() {
                for &v in &self.adjacency[u] {
                    if x.contains(v) && !seen.contains(v) {
                        seen.insert(v);
                        comp.insert(v);
                        queue.push_back(v);
                    }
                }
            }
            out.push(comp);
        }
        out
    }

    /// The empty graph has no components and is not connected.
    pub fn is_connected(&self) -> bool {
        self.components().len() == 1
    }

    pub fn induced_subgraph(&self, x: &VertexSet) -> Result<InducedSubgraph, GraphError> {
        self.check_universe(x)?;
        if x.is_empty() {
            return Err(GraphError::EmptySet);
        }
        let original = x.to_vec();
        let mut new_id = alloc::vec![usize::MAX; self.order()];
        for (i, &v) in original.iter().enumerate() {
            new_id[v] = i;
        }
        let adjacency = original
            .iter()
            .map(|&u| {
                self.adjacency[u]
                    .iter()
                    .filter(|&&v| new_id[v] != usize::MAX)
                    .map(|&v| new_id[v])
                    .collect()
            })
            .collect();
        Ok(InducedSubgraph {
            graph: Self::from_adjacency_unchecked(adjacency),
            original,
        })
    }

    /// Replaces `x` by one vertex, keeping parallel edges as multiplicities.
    ///
    /// The supervertex takes the id `0`; the remaining vertices keep their
    /// relative order and are numbered from `1`.
    pub fn contract_set(&self, x: &VertexSet) -> Result<MultiGraph, GraphError> {
        self.check_universe(x)?;
        if x.is_empty() {
            return Err(GraphError::EmptySet);
        }
        if self.components_within(x).len() != 1 {
            return Err(GraphError::DisconnectedContraction);
        }
        let mut map = alloc::vec![0usize; self.order()];
        let mut next = 1;
        for (v, slot) in map.iter_mut().enumerate() {
            if !x.contains(v) {
                *slot = next;
                next += 1;
            }
        }
        let mut mg = MultiGraph::new(next);
        for (u, v) in self.edges() {
            let (a, b) = (map[u], map[v]);
            if a != b {
                mg.add_edge(a, b, 1);
            }
        }
        Ok(mg)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("order", &self.order())
            .field("edges", &self.to_edge_list())
            .finish()
    }
}

#[derive(Serialize, Deserialize)]
struct GraphRepr {
    order: usize,
    edges: Vec<(usize, usize)>,
}

impl Serialize for Graph {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        GraphRepr {
            order: self.order(),
            edges: self.to_edge_list(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Graph {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let repr = GraphRepr::deserialize(deserializer)?;
        Graph::from_edge_list(repr.order, &repr.edges).map_err(serde::de::Error::custom)
    }
}
