//! Local degree conditions every critical subcubic graph satisfies.

use serde::Serialize;

use crate::error::Result;
use crate::graph::{Graph, Vertex};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Violation {
    /// Two adjacent vertices of degree 2.
    AdjacentTwoVertices {
        vertices: (Vertex, Vertex),
    },
    /// A 3-vertex with two or more neighbors of degree 2.
    SeveralTwoNeighbors {
        vertex: Vertex,
        two_neighbors: Vec<Vertex>,
    },
    Triangle {
        vertices: [Vertex; 3],
    },
    /// `vertex` has fewer than `4 - d(neighbor)` neighbors of degree 3.
    AdjacencyLemma {
        vertex: Vertex,
        neighbor: Vertex,
        required: usize,
        found: usize,
    },
    /// A vertex of degree 0 or 1.
    LowDegree {
        vertex: Vertex,
        degree: usize,
    },
}

/// Every violation of the local conditions, in vertex order. Fails only when
/// `g` has parallel edges.
pub fn audit_basic(g: &Graph) -> Result<Vec<Violation>> {
    g.require_simple()?;
    let mut out = Vec::new();
    for v in g.vertices() {
        let d = g.degree(v);
        if d < 2 {
            out.push(Violation::LowDegree {
                vertex: v,
                degree: d,
            });
        }
    }
    for &(u, v) in g.edges() {
        if g.degree(u) == 2 && g.degree(v) == 2 {
            out.push(Violation::AdjacentTwoVertices { vertices: (u, v) });
        }
    }
    for v in g.vertices().filter(|&v| g.degree(v) == 3) {
        let twos: Vec<Vertex> = sorted_neighbors(g, v)
            .into_iter()
            .filter(|&w| g.degree(w) == 2)
            .collect();
        if twos.len() >= 2 {
            out.push(Violation::SeveralTwoNeighbors {
                vertex: v,
                two_neighbors: twos,
            });
        }
    }
    out.extend(
        triangles(g)
            .into_iter()
            .map(|vertices| Violation::Triangle { vertices }),
    );
    for u in g.vertices() {
        let found = g.neighbors(u).filter(|&w| g.degree(w) == 3).count();
        for v in sorted_neighbors(g, u) {
            let required = 4usize.saturating_sub(g.degree(v));
            if found < required {
                out.push(Violation::AdjacencyLemma {
                    vertex: u,
                    neighbor: v,
                    required,
                    found,
                });
            }
        }
    }
    Ok(out)
}

/// Every triangle as an increasing vertex triple, in lexicographic order.
pub fn triangles(g: &Graph) -> Vec<[Vertex; 3]> {
    let mut out = Vec::new();
    for &(a, b) in g.edges() {
        for c in sorted_neighbors(g, b) {
            if c > b && g.has_edge(a, c) {
                out.push([a, b, c]);
            }
        }
    }
    out.sort_unstable();
    out
}

pub(crate) fn sorted_neighbors(g: &Graph, v: Vertex) -> Vec<Vertex> {
    let mut ns: Vec<Vertex> = g.neighbors(v).collect();
    ns.sort_unstable();
    ns
}
