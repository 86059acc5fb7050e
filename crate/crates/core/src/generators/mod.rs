//! Graph families: Petersen, P*, Hajós joins, the J_k family, small named
//! graphs, and the exhaustive connected subcubic corpus.

mod canon;
mod enumerate;

pub use canon::{canonical_code, canonical_form, CanonicalCode};
pub use enumerate::{enumerate_subcubic, ENUMERATE_MAX_VERTICES};

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

pub const WOODALL_MAX_K: usize = 10;

/// Petersen graph: outer cycle 0..5, spokes i to i+5, inner pentagram on 5..10.
pub fn petersen() -> Graph {
    let mut edges = Vec::with_capacity(15);
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((i, i + 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
    }
    Graph::from_edges(10, &edges).expect("Petersen graph is cubic")
}

/// Petersen graph with vertex 0 deleted; remaining vertices shift down by one.
pub fn petersen_star() -> Graph {
    delete_vertex(&petersen(), 0)
}

fn delete_vertex(g: &Graph, gone: Vertex) -> Graph {
    let shift = |v: Vertex| if v > gone { v - 1 } else { v };
    let edges: Vec<_> = g
        .edges()
        .iter()
        .filter(|&&(a, b)| a != gone && b != gone)
        .map(|&(a, b)| (shift(a), shift(b)))
        .collect();
    Graph::from_edges(g.vertex_count() - 1, &edges).expect("deletion keeps invariants")
}

pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3, "cycles need at least three vertices");
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Graph::from_edges(n, &edges).expect("cycles are subcubic")
}

pub fn path(n: usize) -> Graph {
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Graph::from_edges(n, &edges).expect("paths are subcubic")
}

pub fn complete4() -> Graph {
    Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).expect("K4 is cubic")
}

/// Hajós join of `g1` and `g2` along `e1 = (v1, v2)` and `e2 = (v3, v4)`:
/// delete both edges, merge `v3` into `v1`, and add `v2 v4`.
///
/// Vertices of `g1` keep their ids; the vertices of `g2` other than `v3`
/// follow in increasing order.
pub fn hajos_join(
    g1: &Graph,
    e1: (Vertex, Vertex),
    g2: &Graph,
    e2: (Vertex, Vertex),
) -> Result<Graph> {
    g1.require_simple()?;
    g2.require_simple()?;
    let (v1, v2) = e1;
    let (v3, v4) = e2;
    let d1 = g1
        .find_edge(v1, v2)
        .ok_or_else(|| Error::validation(format!("{v1}-{v2} is not an edge of the first graph")))?;
    let d2 = g2.find_edge(v3, v4).ok_or_else(|| {
        Error::validation(format!("{v3}-{v4} is not an edge of the second graph"))
    })?;
    let merged_degree = g1.degree(v1) + g2.degree(v3) - 2;
    if merged_degree > 3 {
        return Err(Error::validation(format!(
            "degree overflow: merged vertex would have degree {merged_degree}"
        )));
    }

    let n1 = g1.vertex_count();
    let map = |w: Vertex| -> Vertex {
        match w.cmp(&v3) {
            std::cmp::Ordering::Equal => v1,
            std::cmp::Ordering::Less => n1 + w,
            std::cmp::Ordering::Greater => n1 + w - 1,
        }
    };
    let mut edges: Vec<(Vertex, Vertex)> = g1
        .edges()
        .iter()
        .enumerate()
        .filter(|&(id, _)| id != d1)
        .map(|(_, &uv)| uv)
        .collect();
    edges.extend(
        g2.edges()
            .iter()
            .enumerate()
            .filter(|&(id, _)| id != d2)
            .map(|(_, &(a, b))| (map(a), map(b))),
    );
    edges.push((v2, map(v4)));
    let joined = Graph::from_edges(n1 + g2.vertex_count() - 1, &edges)?;
    joined.require_simple()?;
    Ok(joined)
}

/// The join edge used for J_k: the lowest 2-vertex and its lowest 3-neighbor.
fn join_edge(g: &Graph) -> Option<(Vertex, Vertex)> {
    g.vertices().filter(|&v| g.degree(v) == 2).find_map(|v| {
        let mut threes: Vec<Vertex> = g.neighbors(v).filter(|&w| g.degree(w) == 3).collect();
        threes.sort_unstable();
        threes.first().map(|&w| (v, w))
    })
}

/// J_k: P* Hajós-joined with a fresh P* `k` times, always merging 2-vertices.
pub fn woodall_j(k: usize) -> Result<Graph> {
    if !(1..=WOODALL_MAX_K).contains(&k) {
        return Err(Error::Size(format!(
            "k must be in 1..={WOODALL_MAX_K}, got {k}"
        )));
    }
    let fresh = petersen_star();
    let fresh_edge = join_edge(&fresh).expect("P* has a 2-vertex");
    let mut current = fresh.clone();
    for _ in 0..k {
        let edge = join_edge(&current).expect("every J_k has a 2-vertex with a 3-neighbor");
        current = hajos_join(&current, edge, &fresh, fresh_edge)?;
    }
    Ok(current)
}
