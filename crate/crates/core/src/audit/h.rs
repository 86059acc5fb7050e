//! The subgraph induced by 3-vertices with a 2-neighbor, and the types of
//! 3-vertices with no 2-neighbor.

use serde::Serialize;

use super::basic::sorted_neighbors;
use crate::graph::{Graph, Vertex};

/// Largest component order that critical graphs other than the
/// exceptional ones allow.
pub const MAX_COMPONENT_ORDER: usize = 5;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HDecomposition {
    /// Sorted 3-vertices with at least one 2-neighbor.
    pub h_vertices: Vec<Vertex>,
    /// Components ordered by smallest vertex; each lists its vertices along
    /// the path (or cycle), starting from the smaller end.
    pub components: Vec<Vec<Vertex>>,
    /// Component index of each host vertex, `None` outside the subgraph.
    pub component_of: Vec<Option<usize>>,
    pub flags: Vec<ComponentFlag>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ComponentFlag {
    Cycle { component: usize, order: usize },
    LongPath { component: usize, order: usize },
}

impl HDecomposition {
    pub fn order(&self, component: usize) -> usize {
        self.components[component].len()
    }

    /// Order of the component containing `v`, or 0 when `v` is outside.
    pub fn order_at(&self, v: Vertex) -> usize {
        self.component_of[v].map_or(0, |c| self.order(c))
    }
}

pub fn is_h_vertex(g: &Graph, v: Vertex) -> bool {
    g.degree(v) == 3 && g.neighbors(v).any(|w| g.degree(w) == 2)
}

/// Rich vertices: 3-vertices with no 2-neighbor.
pub fn is_rich(g: &Graph, v: Vertex) -> bool {
    g.degree(v) == 3 && g.neighbors(v).all(|w| g.degree(w) != 2)
}

pub fn decompose_h(g: &Graph) -> HDecomposition {
    let n = g.vertex_count();
    let in_h: Vec<bool> = g.vertices().map(|v| is_h_vertex(g, v)).collect();
    let h_vertices: Vec<Vertex> = g.vertices().filter(|&v| in_h[v]).collect();
    let h_neighbors = |v: Vertex| -> Vec<Vertex> {
        sorted_neighbors(g, v)
            .into_iter()
            .filter(|&w| in_h[w])
            .collect()
    };

    let mut component_of = vec![None; n];
    let mut components = Vec::new();
    let mut flags = Vec::new();
    for &start in &h_vertices {
        if component_of[start].is_some() {
            continue;
        }
        let id = components.len();
        let mut members = vec![start];
        component_of[start] = Some(id);
        let mut i = 0;
        while i < members.len() {
            for w in h_neighbors(members[i]) {
                if component_of[w].is_none() {
                    component_of[w] = Some(id);
                    members.push(w);
                }
            }
            i += 1;
        }
        let edge_count: usize = members.iter().map(|&v| h_neighbors(v).len()).sum::<usize>() / 2;
        let is_cycle = edge_count == members.len();
        let first = if is_cycle {
            *members.iter().min().expect("nonempty")
        } else {
            *members
                .iter()
                .filter(|&&v| h_neighbors(v).len() <= 1)
                .min()
                .expect("a path has an end")
        };
        let ordered = walk(first, members.len(), &h_neighbors);
        let order = ordered.len();
        if is_cycle {
            flags.push(ComponentFlag::Cycle {
                component: id,
                order,
            });
        } else if order > MAX_COMPONENT_ORDER {
            flags.push(ComponentFlag::LongPath {
                component: id,
                order,
            });
        }
        components.push(ordered);
    }
    HDecomposition {
        h_vertices,
        components,
        component_of,
        flags,
    }
}

/// Walks a path or cycle from `first`, preferring the smaller neighbor.
fn walk(first: Vertex, len: usize, nbrs: &dyn Fn(Vertex) -> Vec<Vertex>) -> Vec<Vertex> {
    let mut out = vec![first];
    let mut prev = None;
    let mut cur = first;
    while out.len() < len {
        let next = nbrs(cur)
            .into_iter()
            .find(|&w| Some(w) != prev && !out.contains(&w))
            .expect("component is a path or cycle");
        out.push(next);
        prev = Some(cur);
        cur = next;
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RichVertexType {
    pub vertex: Vertex,
    /// Component orders of the neighbors, ascending; 0 for a neighbor
    /// outside the subgraph.
    pub triple: [usize; 3],
    /// Component of the neighbor behind each triple entry.
    pub components: [Option<usize>; 3],
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RichFlag {
    pub vertex: Vertex,
    pub triple: [usize; 3],
    /// Smallest order that two distinct adjacent components may not both
    /// reach.
    pub threshold: usize,
}

/// Two distinct adjacent components both this large are forbidden in general.
pub const RICH_THRESHOLD: usize = 4;
/// The stricter threshold used for the improved bound.
pub const STRICT_RICH_THRESHOLD: usize = 3;

pub fn classify_rich(g: &Graph, h: &HDecomposition) -> Vec<RichVertexType> {
    g.vertices()
        .filter(|&v| is_rich(g, v))
        .map(|v| {
            let mut entries: Vec<(usize, Option<usize>)> = g
                .neighbors(v)
                .map(|w| (h.order_at(w), h.component_of[w]))
                .collect();
            entries.sort_unstable();
            RichVertexType {
                vertex: v,
                triple: [entries[0].0, entries[1].0, entries[2].0],
                components: [entries[0].1, entries[1].1, entries[2].1],
            }
        })
        .collect()
}

/// Rich vertices adjacent to two distinct components whose orders both
/// reach the threshold.
pub fn flag_rich(types: &[RichVertexType], strict: bool) -> Vec<RichFlag> {
    let threshold = if strict {
        STRICT_RICH_THRESHOLD
    } else {
        RICH_THRESHOLD
    };
    types
        .iter()
        .filter(|t| {
            let mut big: Vec<usize> = (0..3)
                .filter(|&i| t.triple[i] >= threshold)
                .filter_map(|i| t.components[i])
                .collect();
            big.dedup();
            big.len() >= 2
        })
        .map(|t| RichFlag {
            vertex: t.vertex,
            triple: t.triple,
            threshold,
        })
        .collect()
}

/// A 3-vertex outside a component with two or more neighbors inside it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DoubleAttachment {
    pub vertex: Vertex,
    pub component: usize,
    pub neighbors: Vec<Vertex>,
}

pub fn double_attachments(g: &Graph, h: &HDecomposition) -> Vec<DoubleAttachment> {
    let mut out = Vec::new();
    for v in g.vertices().filter(|&v| g.degree(v) == 3) {
        let nbrs = sorted_neighbors(g, v);
        let mut seen: Vec<usize> = nbrs.iter().filter_map(|&w| h.component_of[w]).collect();
        seen.sort_unstable();
        seen.dedup();
        for c in seen {
            if h.component_of[v] == Some(c) {
                continue;
            }
            let inside: Vec<Vertex> = nbrs
                .iter()
                .copied()
                .filter(|&w| h.component_of[w] == Some(c))
                .collect();
            if inside.len() >= 2 {
                out.push(DoubleAttachment {
                    vertex: v,
                    component: c,
                    neighbors: inside,
                });
            }
        }
    }
    out
}
