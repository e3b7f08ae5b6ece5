//! Graph products on `V(G) × V(H)` with the flat index `x·n + y`.

use alloc::vec::Vec;

use serde::{Deserialize, Serialize};

use crate::graph::{Graph, GraphError, VertexSet};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ProductError {
    #[error("product factors must have at least one vertex")]
    EmptyFactor,
    #[error("vertex {0} is not a vertex of a product of order {1}")]
    NotAProductVertex(usize, usize),
    #[error("factor vertex ({0}, {1}) is outside the factor orders")]
    FactorOutOfRange(usize, usize),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ProductKind {
    Strong,
    Cartesian,
    Direct,
    /// `K₂ ⊠ H` with the edges inside both `H`-fibers removed.
    K2Odot,
}

/// A product graph together with its factor orders.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProductGraph {
    pub graph: Graph,
    pub kind: ProductKind,
    /// Order of the left factor (`2` for [`ProductKind::K2Odot`]).
    pub left_order: usize,
    pub right_order: usize,
}

fn build(g: &Graph, h: &Graph, kind: ProductKind) -> Result<ProductGraph, ProductError> {
    let (m, n) = (g.order(), h.order());
    if m == 0 || n == 0 {
        return Err(ProductError::EmptyFactor);
    }
    let idx = |x: usize, y: usize| x * n + y;
    let mut adjacency = alloc::vec![Vec::new(); m * n];
    for x in 0..m {
        for y in 0..n {
            let list = &mut adjacency[idx(x, y)];
            if kind != ProductKind::Direct {
                list.extend(h.neighbors(y).iter().map(|&y2| idx(x, y2)));
                list.extend(g.neighbors(x).iter().map(|&x2| idx(x2, y)));
            }
            if kind != ProductKind::Cartesian {
                for &x2 in g.neighbors(x) {
                    list.extend(h.neighbors(y).iter().map(|&y2| idx(x2, y2)));
                }
            }
        }
    }
    Ok(ProductGraph {
        graph: Graph::from_adjacency_unchecked(adjacency),
        kind,
        left_order: m,
        right_order: n,
    })
}

/// `G ⊠ H`: adjacent when equal in one coordinate and adjacent in the
/// other, or adjacent in both.
pub fn strong_product(g: &Graph, h: &Graph) -> Result<ProductGraph, ProductError> {
    build(g, h, ProductKind::Strong)
}

/// `G □ H`: adjacent when equal in one coordinate and adjacent in the other.
pub fn cartesian_product(g: &Graph, h: &Graph) -> Result<ProductGraph, ProductError> {
    build(g, h, ProductKind::Cartesian)
}

/// `G × H`: adjacent when adjacent in both coordinates.
pub fn direct_product(g: &Graph, h: &Graph) -> Result<ProductGraph, ProductError> {
    build(g, h, ProductKind::Direct)
}

/// `K₂ ⊙ H` on `{a, b} × V(H)` (`a = 0`, `b = 1`): `(a, y₁)(b, y₂)` is an edge
/// iff `y₁ = y₂` or `y₁y₂ ∈ E(H)`; there are no edges inside a fiber.
pub fn k2_odot(h: &Graph) -> ProductGraph {
    let n = h.order();
    let mut adjacency = alloc::vec![Vec::new(); 2 * n];
    for y in 0..n {
        adjacency[y].push(n + y);
        adjacency[n + y].push(y);
        for &y2 in h.neighbors(y) {
            adjacency[y].push(n + y2);
            adjacency[n + y].push(y2);
        }
    }
    ProductGraph {
        graph: Graph::from_adjacency_unchecked(adjacency),
        kind: ProductKind::K2Odot,
        left_order: 2,
        right_order: n,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum LayerKind {
    /// `{x} × V(H)`, the H-layer (fiber) over a left vertex.
    HLayer,
    /// `V(G) × {y}`, the G-layer over a right vertex.
    GLayer,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Layer {
    pub kind: LayerKind,
    pub anchor: usize,
    pub members: VertexSet,
}

/// Position of a layer relative to a bipartition `(X, X̄)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum LayerSplit {
    InsideX,
    OutsideX,
    Split,
}

/// Which family of layers is split by the bipartition in every member.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum FiberHypothesis {
    Neither,
    /// Every H-layer meets both sides.
    HLayers,
    /// Every G-layer meets both sides.
    GLayers,
    Both,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FiberReport {
    /// Indexed by the left vertex `x`.
    pub h_layers: Vec<LayerSplit>,
    /// Indexed by the right vertex `y`.
    pub g_layers: Vec<LayerSplit>,
    pub hypothesis: FiberHypothesis,
}

impl ProductGraph {
    pub fn order(&self) -> usize {
        self.graph.order()
    }

    pub fn index(&self, x: usize, y: usize) -> Result<usize, ProductError> {
        if x >= self.left_order || y >= self.right_order {
            return Err(ProductError::FactorOutOfRange(x, y));
        }
        Ok(x * self.right_order + y)
    }

    /// Inverse of [`ProductGraph::index`].
    pub fn project(&self, v: usize) -> Result<(usize, usize), ProductError> {
        if v >= self.order() {
            return Err(ProductError::NotAProductVertex(v, self.order()));
        }
        Ok((v / self.right_order, v % self.right_order))
    }

    pub fn h_layer(&self, x: usize) -> VertexSet {
        let n = self.right_order;
        VertexSet::from_vertices(self.order(), (0..n).map(|y| x * n + y)).expect("in range")
    }

    pub fn g_layer(&self, y: usize) -> VertexSet {
        let n = self.right_order;
        VertexSet::from_vertices(self.order(), (0..self.left_order).map(|x| x * n + y))
            .expect("in range")
    }

    /// All H-layers (by `x`) followed by all G-layers (by `y`).
    pub fn layers(&self) -> Vec<Layer> {
        let h = (0..self.left_order).map(|x| Layer {
            kind: LayerKind::HLayer,
            anchor: x,
            members: self.h_layer(x),
        });
        let g = (0..self.right_order).map(|y| Layer {
            kind: LayerKind::GLayer,
            anchor: y,
            members: self.g_layer(y),
        });
        h.chain(g).collect()
    }

    pub fn classify_cut_by_layers(&self, side_x: &VertexSet) -> Result<FiberReport, ProductError> {
        if side_x.universe() != self.order() {
            return Err(GraphError::UniverseMismatch {
                set: side_x.universe(),
                graph: self.order(),
            }
            .into());
        }
        if side_x.is_empty() {
            return Err(GraphError::EmptySet.into());
        }
        if side_x.is_full() {
            return Err(GraphError::FullSet.into());
        }
        let split = |members: VertexSet| {
            let inside = members.iter().filter(|&v| side_x.contains(v)).count();
            if inside == 0 {
                LayerSplit::OutsideX
            } else if inside == members.len() {
                LayerSplit::InsideX
            } else {
                LayerSplit::Split
            }
        };
        let h_layers: Vec<_> = (0..self.left_order)
            .map(|x| split(self.h_layer(x)))
            .collect();
        let g_layers: Vec<_> = (0..self.right_order)
            .map(|y| split(self.g_layer(y)))
            .collect();
        let all_split = |s: &[LayerSplit]| s.iter().all(|&l| l == LayerSplit::Split);
        let hypothesis = match (all_split(&h_layers), all_split(&g_layers)) {
            (true, true) => FiberHypothesis::Both,
            (true, false) => FiberHypothesis::HLayers,
            (false, true) => FiberHypothesis::GLayers,
            (false, false) => FiberHypothesis::Neither,
        };
        Ok(FiberReport {
            h_layers,
            g_layers,
            hypothesis,
        })
    }
}
