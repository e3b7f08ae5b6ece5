//! Brute-force reference values, written without the engine's bitset
//! machinery: plain adjacency lists, explicit subsets, BFS.

#![allow(dead_code)]

use rek_core::Graph;

pub fn adjacency(g: &Graph) -> Vec<Vec<usize>> {
    (0..g.order()).map(|v| g.neighbors(v).to_vec()).collect()
}

/// Sizes of the components of `G[side]`.
fn component_sizes(adj: &[Vec<usize>], side: &[bool]) -> Vec<usize> {
    let n = adj.len();
    let mut seen = vec![false; n];
    let mut sizes = Vec::new();
    for s in 0..n {
        if !side[s] || seen[s] {
            continue;
        }
        seen[s] = true;
        let mut stack = vec![s];
        let mut size = 0;
        while let Some(u) = stack.pop() {
            size += 1;
            for &v in &adj[u] {
                if side[v] && !seen[v] {
                    seen[v] = true;
                    stack.push(v);
                }
            }
        }
        sizes.push(size);
    }
    sizes
}

/// λ_k by scanning every bipartition; `None` when no k-restricted cut exists.
pub fn lambda_k(g: &Graph, k: usize) -> Option<usize> {
    let n = g.order();
    assert!(n <= 20, "brute force is exponential");
    let adj = adjacency(g);
    let mut best: Option<usize> = None;
    for mask in 1u32..(1 << n) - 1 {
        let inside: Vec<bool> = (0..n).map(|v| mask >> v & 1 == 1).collect();
        let outside: Vec<bool> = inside.iter().map(|b| !b).collect();
        let ok = component_sizes(&adj, &inside)
            .into_iter()
            .chain(component_sizes(&adj, &outside))
            .all(|s| s >= k);
        if !ok {
            continue;
        }
        let cut = (0..n)
            .filter(|&u| inside[u])
            .map(|u| adj[u].iter().filter(|&&v| !inside[v]).count())
            .sum::<usize>();
        best = Some(best.map_or(cut, |b| b.min(cut)));
    }
    best
}

pub fn is_connected_set(adj: &[Vec<usize>], set: &[usize]) -> bool {
    let n = adj.len();
    let mut side = vec![false; n];
    for &v in set {
        side[v] = true;
    }
    component_sizes(adj, &side).len() == 1
}

/// Every connected 3-subset, sorted.
pub fn connected_triples(g: &Graph) -> Vec<[usize; 3]> {
    let n = g.order();
    let adj = adjacency(g);
    let mut out = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                if is_connected_set(&adj, &[a, b, c]) {
                    out.push([a, b, c]);
                }
            }
        }
    }
    out
}

pub fn xi3(g: &Graph) -> Option<usize> {
    let adj = adjacency(g);
    connected_triples(g)
        .into_iter()
        .map(|t| {
            t.iter()
                .map(|&u| adj[u].iter().filter(|v| !t.contains(v)).count())
                .sum()
        })
        .min()
}

/// `G` from a list of edges on `0..n`, ignoring self-loops.
pub fn graph_from_bits(n: usize, bits: &[bool]) -> Graph {
    let mut edges = Vec::new();
    let mut i = 0;
    for u in 0..n {
        for v in u + 1..n {
            if bits.get(i).copied().unwrap_or(false) {
                edges.push((u, v));
            }
            i += 1;
        }
    }
    Graph::from_edge_list(n, &edges).unwrap()
}
