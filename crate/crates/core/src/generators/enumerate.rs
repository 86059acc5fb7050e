//! Connected subcubic graphs up to isomorphism, grown one vertex at a time.
//!
//! Every connected graph has a vertex whose removal leaves it connected, so
//! attaching a new vertex to 1..=3 unsaturated vertices of each connected
//! graph on `n - 1` vertices reaches every class on `n` vertices.

use std::collections::BTreeSet;

use super::canon::{canonical_code, CanonicalCode};
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex, MAX_DEGREE};

pub const ENUMERATE_MAX_VERTICES: usize = 10;

/// One graph per isomorphism class, in canonical labeling, sorted by code.
pub fn enumerate_subcubic(n: usize) -> Result<Vec<Graph>> {
    if n > ENUMERATE_MAX_VERTICES {
        return Err(Error::Size(format!(
            "enumeration supports at most {ENUMERATE_MAX_VERTICES} vertices, got {n}"
        )));
    }
    if n == 0 {
        return Ok(Vec::new());
    }
    let mut level: BTreeSet<CanonicalCode> = BTreeSet::from([Vec::new()]);
    for size in 1..n {
        let mut next = BTreeSet::new();
        for code in &level {
            let g = Graph::from_edges(size, code).expect("stored codes are valid");
            let open: Vec<Vertex> = g.vertices().filter(|&v| g.degree(v) < MAX_DEGREE).collect();
            for subset in nonempty_subsets(&open, MAX_DEGREE) {
                let mut edges = code.clone();
                edges.extend(subset.iter().map(|&v| (v, size)));
                let grown = Graph::from_edges(size + 1, &edges).expect("degrees checked");
                next.insert(canonical_code(&grown));
            }
        }
        level = next;
    }
    Ok(level
        .into_iter()
        .map(|code| Graph::from_edges(n, &code).expect("stored codes are valid"))
        .collect())
}

fn nonempty_subsets(items: &[Vertex], max_size: usize) -> Vec<Vec<Vertex>> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fn go(
        items: &[Vertex],
        start: usize,
        max: usize,
        cur: &mut Vec<Vertex>,
        out: &mut Vec<Vec<Vertex>>,
    ) {
        if !cur.is_empty() {
            out.push(cur.clone());
        }
        if cur.len() == max {
            return;
        }
        for i in start..items.len() {
            cur.push(items[i]);
            go(items, i + 1, max, cur, out);
            cur.pop();
        }
    }
    go(items, 0, max_size, &mut current, &mut out);
    out
}
