//! Kempe chains over partial colorings.
//!
//! A chain is a connected component of the edges carrying the two colors of a
//! pair. In a proper coloring every vertex meets at most two such edges, so a
//! chain is a path or an even cycle. Chains are recomputed on every query.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::color::{ColorPair, PartialEdgeColoring};
use crate::graph::{EdgeId, Graph, Vertex};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ChainShape {
    /// The anchor vertex sees neither color of the pair.
    Empty,
    Path,
    EvenCycle,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KempeChain {
    pub pair: ColorPair,
    pub anchor: Vertex,
    pub shape: ChainShape,
    /// Sorted edge ids.
    pub edges: Vec<EdgeId>,
    /// Sorted vertex ids; just the anchor for the empty chain.
    pub vertices: Vec<Vertex>,
}

impl KempeChain {
    /// The two path ends, or nothing for cycles and the empty chain.
    pub fn endpoints(&self, g: &Graph, c: &PartialEdgeColoring) -> Vec<Vertex> {
        if self.shape != ChainShape::Path {
            return Vec::new();
        }
        self.vertices
            .iter()
            .copied()
            .filter(|&v| pair_degree(g, c, v, self.pair) == 1)
            .collect()
    }

    pub fn contains_vertex(&self, v: Vertex) -> bool {
        self.vertices.binary_search(&v).is_ok()
    }
}

fn in_pair(c: &PartialEdgeColoring, e: EdgeId, pair: ColorPair) -> bool {
    c.get(e).is_some_and(|col| pair.contains(col))
}

fn pair_degree(g: &Graph, c: &PartialEdgeColoring, v: Vertex, pair: ColorPair) -> usize {
    g.incident(v)
        .iter()
        .filter(|&&e| in_pair(c, e, pair))
        .count()
}

/// The maximal `pair`-colored component through `v`.
pub fn chain_at(g: &Graph, c: &PartialEdgeColoring, v: Vertex, pair: ColorPair) -> KempeChain {
    let mut vertices = BTreeSet::from([v]);
    let mut edges = BTreeSet::new();
    let mut stack = vec![v];
    while let Some(u) = stack.pop() {
        for &e in g.incident(u) {
            if in_pair(c, e, pair) && edges.insert(e) {
                let w = g.other_end(e, u);
                if vertices.insert(w) {
                    stack.push(w);
                }
            }
        }
    }
    let shape = if edges.is_empty() {
        ChainShape::Empty
    } else if vertices.iter().any(|&u| pair_degree(g, c, u, pair) == 1) {
        ChainShape::Path
    } else {
        ChainShape::EvenCycle
    };
    KempeChain {
        pair,
        anchor: v,
        shape,
        edges: edges.into_iter().collect(),
        vertices: vertices.into_iter().collect(),
    }
}

/// True when `u` and `v` lie on the same `pair`-chain.
pub fn linked(g: &Graph, c: &PartialEdgeColoring, u: Vertex, v: Vertex, pair: ColorPair) -> bool {
    chain_at(g, c, u, pair).contains_vertex(v)
}

/// Exchanges the pair's two colors on exactly the chain's edges.
pub fn swap(c: &PartialEdgeColoring, chain: &KempeChain) -> PartialEdgeColoring {
    let mut out = c.clone();
    for &e in &chain.edges {
        let col = c.get(e).expect("chain edges are colored");
        out.set(e, Some(chain.pair.partner(col)));
    }
    out
}

/// Swap along the chain through `v`; a no-op when `v` sees neither color.
pub fn swap_at(
    g: &Graph,
    c: &PartialEdgeColoring,
    v: Vertex,
    pair: ColorPair,
) -> PartialEdgeColoring {
    swap(c, &chain_at(g, c, v, pair))
}

/// Structural check used by the property suites: a path has exactly two
/// vertices of chain-degree one and the rest of chain-degree two, a cycle is
/// 2-regular with an even number of edges, and the chain is closed under
/// adjacency within the pair.
pub fn chain_is_well_formed(g: &Graph, c: &PartialEdgeColoring, chain: &KempeChain) -> bool {
    let degrees: Vec<usize> = chain
        .vertices
        .iter()
        .map(|&v| pair_degree(g, c, v, chain.pair))
        .collect();
    let closed = chain.vertices.iter().all(|&v| {
        g.incident(v)
            .iter()
            .filter(|&&e| in_pair(c, e, chain.pair))
            .all(|e| chain.edges.binary_search(e).is_ok())
    });
    let alternating = chain.vertices.iter().all(|&v| {
        let cols: Vec<_> = g
            .incident(v)
            .iter()
            .filter(|&&e| in_pair(c, e, chain.pair))
            .map(|&e| c.get(e))
            .collect();
        cols.len() < 2 || cols[0] != cols[1]
    });
    let shape_ok = match chain.shape {
        ChainShape::Empty => chain.edges.is_empty() && chain.vertices.len() == 1,
        ChainShape::Path => {
            degrees.iter().filter(|&&d| d == 1).count() == 2
                && degrees.iter().all(|&d| d == 1 || d == 2)
                && chain.edges.len() + 1 == chain.vertices.len()
        }
        ChainShape::EvenCycle => {
            degrees.iter().all(|&d| d == 2)
                && chain.edges.len() == chain.vertices.len()
                && chain.edges.len().is_multiple_of(2)
        }
    };
    closed && alternating && shape_ok
}
