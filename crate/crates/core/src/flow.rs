//! Max-flow / min-cut kernels.
//!
//! Two kernels share the [`CutKernel`] interface: a Dinic implementation on
//! a capacitated arc list (any order, parallel edges as capacities) and a
//! bit-parallel augmenting-path kernel for simple graphs of order at most 64.
//! Terminal sets are passed as vertex lists; treating a set as one super
//! terminal is equivalent to contracting it.

use alloc::collections::{BTreeMap, VecDeque};
use alloc::vec;
use alloc::vec::Vec;

use crate::graph::{CutResult, Graph, VertexSet};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FlowError {
    #[error("source and sink must differ")]
    SameTerminal,
    #[error("vertex {0} is outside 0..{1}")]
    VertexOutOfRange(usize, usize),
}

/// Undirected multigraph; the target of set contraction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiGraph {
    adjacency: Vec<BTreeMap<usize, u32>>,
}

impl MultiGraph {
    pub fn new(n: usize) -> Self {
        Self {
            adjacency: vec![BTreeMap::new(); n],
        }
    }

    pub fn from_graph(g: &Graph) -> Self {
        let mut mg = Self::new(g.order());
        for (u, v) in g.edges() {
            mg.add_edge(u, v, 1);
        }
        mg
    }

    /// Adds `count` parallel copies of `uv`. Loops are ignored.
    pub fn add_edge(&mut self, u: usize, v: usize, count: u32) {
        if u == v || count == 0 {
            return;
        }
        *self.adjacency[u].entry(v).or_insert(0) += count;
        *self.adjacency[v].entry(u).or_insert(0) += count;
    }

    pub fn order(&self) -> usize {
        self.adjacency.len()
    }

    pub fn multiplicity(&self, u: usize, v: usize) -> u32 {
        self.adjacency
            .get(u)
            .and_then(|m| m.get(&v))
            .copied()
            .unwrap_or(0)
    }

    /// Sum of multiplicities of edges at `v`.
    pub fn weighted_degree(&self, v: usize) -> u32 {
        self.adjacency[v].values().sum()
    }

    /// `(u, v, multiplicity)` with `u < v`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize, u32)> + '_ {
        self.adjacency.iter().enumerate().flat_map(|(u, m)| {
            m.iter()
                .filter(move |(&v, _)| u < v)
                .map(move |(&v, &c)| (u, v, c))
        })
    }
}

/// Minimum `s`–`t` cut of a multigraph; parallel edges count individually.
///
/// The returned `side_x` is the set of vertices reachable from `s` in the
/// final residual network, so it contains `s` and induces a connected
/// subgraph.
pub fn min_st_cut(g: &MultiGraph, s: usize, t: usize) -> Result<CutResult, FlowError> {
    let n = g.order();
    for v in [s, t] {
        if v >= n {
            return Err(FlowError::VertexOutOfRange(v, n));
        }
    }
    if s == t {
        return Err(FlowError::SameTerminal);
    }
    let mut net = FlowNetwork::from_multigraph(g);
    net.flow(&[s], &[t], usize::MAX);
    let side = net.source_side();
    let mut edges = Vec::new();
    for (u, v, c) in g.edges() {
        if side.contains(u) != side.contains(v) {
            edges.extend(core::iter::repeat_n((u, v), c as usize));
        }
    }
    Ok(CutResult {
        value: edges.len(),
        side_x: side,
        edges,
    })
}

pub(crate) trait CutKernel {
    /// Maximum flow between two disjoint terminal sets, capped at `limit`.
    ///
    /// A return value below `limit` is the exact maximum flow, and
    /// [`CutKernel::source_side`] then describes a minimum cut.
    fn flow(&mut self, sources: &[usize], sinks: &[usize], limit: usize) -> usize;

    /// Vertices reachable from the sources after the last uncapped `flow`.
    fn source_side(&self) -> VertexSet;
}

/// Picks the bit-parallel kernel when the graph fits in a word.
pub(crate) fn kernel_for(g: &Graph) -> alloc::boxed::Box<dyn CutKernel> {
    if g.order() <= 64 {
        alloc::boxed::Box::new(BitFlow::new(g))
    } else {
        alloc::boxed::Box::new(FlowNetwork::from_graph(g))
    }
}

/// Dinic on an arc list where every undirected edge is a pair of mutually
/// reverse arcs with equal capacity.
pub(crate) struct FlowNetwork {
    first: Vec<usize>,
    head: Vec<usize>,
    reverse: Vec<usize>,
    capacity: Vec<u32>,
    residual: Vec<u32>,
    role: Vec<u8>,
    level: Vec<u32>,
    cursor: Vec<usize>,
    reach: Vec<bool>,
}

const SOURCE: u8 = 1;
const SINK: u8 = 2;

impl FlowNetwork {
    pub(crate) fn from_graph(g: &Graph) -> Self {
        let edges: Vec<_> = g.edges().map(|(u, v)| (u, v, 1)).collect();
        Self::build(g.order(), &edges)
    }

    pub(crate) fn from_multigraph(g: &MultiGraph) -> Self {
        let edges: Vec<_> = g.edges().collect();
        Self::build(g.order(), &edges)
    }

    fn build(n: usize, edges: &[(usize, usize, u32)]) -> Self {
        let mut first = vec![0usize; n + 1];
        for &(u, v, _) in edges {
            first[u + 1] += 1;
            first[v + 1] += 1;
        }
        for i in 0..n {
            first[i + 1] += first[i];
        }
        let arcs = first[n];
        let mut fill = first.clone();
        let mut head = vec![0; arcs];
        let mut capacity = vec![0; arcs];
        let mut reverse = vec![0; arcs];
        for &(u, v, c) in edges {
            let (a, b) = (fill[u], fill[v]);
            head[a] = v;
            head[b] = u;
            capacity[a] = c;
            capacity[b] = c;
            reverse[a] = b;
            reverse[b] = a;
            fill[u] += 1;
            fill[v] += 1;
        }
        Self {
            reverse,
            residual: capacity.clone(),
            first,
            head,
            capacity,
            role: vec![0; n],
            level: vec![0; n],
            cursor: vec![0; n],
            reach: vec![false; n],
        }
    }

    fn order(&self) -> usize {
        self.role.len()
    }

    fn bfs(&mut self) -> bool {
        let n = self.order();
        self.level.iter_mut().for_each(|l| *l = u32::MAX);
        let mut queue = VecDeque::new();
        for v in 0..n {
            if self.role[v] == SOURCE {
                self.level[v] = 0;
                queue.push_back(v);
            }
        }
        let mut reached_sink = false;
        while let Some(u) = queue.pop_front() {
            for a in self.first[u]..self.first[u + 1] {
                let v = self.head[a];
                if self.residual[a] > 0 && self.level[v] == u32::MAX {
                    self.level[v] = self.level[u] + 1;
                    if self.role[v] == SINK {
                        reached_sink = true;
                    } else {
                        queue.push_back(v);
                    }
                }
            }
        }
        reached_sink
    }

    fn dfs(&mut self, u: usize, pushed: u32) -> u32 {
        if self.role[u] == SINK {
            return pushed;
        }
        while self.cursor[u] < self.first[u + 1] {
            let a = self.cursor[u];
            let v = self.head[a];
            if self.residual[a] > 0 && self.level[v] == self.level[u] + 1 {
                let got = self.dfs(v, pushed.min(self.residual[a]));
                if got > 0 {
                    self.residual[a] -= got;
                    self.residual[self.reverse[a]] += got;
                    return got;
                }
            }
            self.cursor[u] += 1;
        }
        0
    }
}

impl CutKernel for FlowNetwork {
    fn flow(&mut self, sources: &[usize], sinks: &[usize], limit: usize) -> usize {
        self.residual.copy_from_slice(&self.capacity);
        self.role.iter_mut().for_each(|r| *r = 0);
        for &s in sources {
            self.role[s] = SOURCE;
        }
        for &t in sinks {
            self.role[t] = SINK;
        }
        let mut total = 0usize;
        while total < limit && self.bfs() {
            let n = self.order();
            self.cursor.copy_from_slice(&self.first[..n]);
            for &s in sources {
                loop {
                    if total >= limit {
                        break;
                    }
                    let want = (limit - total).min(u32::MAX as usize) as u32;
                    let got = self.dfs(s, want);
                    if got == 0 {
                        break;
                    }
                    total += got as usize;
                }
            }
        }
        if total < limit {
            let n = self.order();
            self.reach.iter_mut().for_each(|r| *r = false);
            let mut stack: Vec<usize> = (0..n).filter(|&v| self.role[v] == SOURCE).collect();
            for &s in &stack {
                self.reach[s] = true;
            }
            while let Some(u) = stack.pop() {
                for a in self.first[u]..self.first[u + 1] {
                    let v = self.head[a];
                    if self.residual[a] > 0 && !self.reach[v] {
                        self.reach[v] = true;
                        stack.push(v);
                    }
                }
            }
        }
        total.min(limit)
    }

    fn source_side(&self) -> VertexSet {
        let n = self.order();
        VertexSet::from_vertices(n, (0..n).filter(|&v| self.reach[v])).expect("in range")
    }
}

/// Unit-capacity augmenting paths on a simple graph with word-sized
/// adjacency masks. `out[u]` holds the `v` with one unit of flow `u -> v`.
pub(crate) struct BitFlow {
    adjacency: Vec<u64>,
    out: Vec<u64>,
    parent: Vec<u8>,
    queue: Vec<u8>,
    reach: u64,
}

impl BitFlow {
    pub(crate) fn new(g: &Graph) -> Self {
        let n = g.order();
        assert!(n <= 64, "BitFlow needs order <= 64");
        Self {
            adjacency: g.adjacency_masks(),
            out: vec![0; n],
            parent: vec![0; n],
            queue: vec![0; n],
            reach: 0,
        }
    }

    /// Same contract as [`CutKernel::flow`] with terminal sets as masks.
    pub(crate) fn flow_masks(&mut self, sources: u64, sinks: u64, limit: usize) -> usize {
        debug_assert_eq!(sources & sinks, 0);
        self.out.iter_mut().for_each(|o| *o = 0);
        let mut value = 0;
        while value < limit {
            let mut visited = sources;
            let mut tail = 0;
            let mut rest = sources;
            while rest != 0 {
                self.queue[tail] = rest.trailing_zeros() as u8;
                tail += 1;
                rest &= rest - 1;
            }
            let mut head = 0;
            let mut hit = None;
            while head < tail {
                let u = self.queue[head] as usize;
                head += 1;
                let fresh = self.adjacency[u] & !self.out[u] & !visited;
                if fresh == 0 {
                    continue;
                }
                let at_sink = fresh & sinks;
                if at_sink != 0 {
                    let t = at_sink.trailing_zeros() as usize;
                    self.parent[t] = u as u8;
                    hit = Some(t);
                    break;
                }
                visited |= fresh;
                let mut bits = fresh;
                while bits != 0 {
                    let w = bits.trailing_zeros() as usize;
                    bits &= bits - 1;
                    self.parent[w] = u as u8;
                    self.queue[tail] = w as u8;
                    tail += 1;
                }
            }
            let Some(mut v) = hit else {
                self.reach = visited;
                return value;
            };
            loop {
                let u = self.parent[v] as usize;
                if self.out[v] & (1u64 << u) != 0 {
                    self.out[v] &= !(1u64 << u);
                } else {
                    self.out[u] |= 1u64 << v;
                }
                if sources & (1u64 << u) != 0 {
                    break;
                }
                v = u;
            }
            value += 1;
        }
        value
    }
}

fn mask_of(vertices: &[usize]) -> u64 {
    vertices.iter().fold(0u64, |m, &v| m | (1u64 << v))
}

impl CutKernel for BitFlow {
    fn flow(&mut self, sources: &[usize], sinks: &[usize], limit: usize) -> usize {
        self.flow_masks(mask_of(sources), mask_of(sinks), limit)
    }

    fn source_side(&self) -> VertexSet {
        VertexSet::from_mask(self.adjacency.len(), self.reach)
    }
}
