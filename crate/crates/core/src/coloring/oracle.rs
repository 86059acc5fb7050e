//! Brute-force chromatic index, kept deliberately naive: edges are assigned in
//! id order and each prefix is only checked against the edges that conflict
//! with the newest one. No ordering heuristics, no symmetry breaking.

use crate::error::{Error, Result};
use crate::graph::Graph;

pub const ORACLE_MAX_EDGES: usize = 25;

pub fn oracle_chromatic_index(g: &Graph) -> Result<usize> {
    let m = g.edge_count();
    if m > ORACLE_MAX_EDGES {
        return Err(Error::Size(format!(
            "oracle accepts at most {ORACLE_MAX_EDGES} edges, got {m}"
        )));
    }
    g.require_simple()?;

    // earlier[e] = edges with smaller id sharing an endpoint with e
    let earlier: Vec<Vec<usize>> = (0..m)
        .map(|e| {
            let (a, b) = g.endpoints(e);
            (0..e)
                .filter(|&f| {
                    let (c, d) = g.endpoints(f);
                    a == c || a == d || b == c || b == d
                })
                .collect()
        })
        .collect();

    let mut k = 0;
    loop {
        let mut assignment = vec![0usize; m];
        if assign(&earlier, &mut assignment, 0, k) {
            return Ok(k);
        }
        k += 1;
    }
}

fn assign(earlier: &[Vec<usize>], assignment: &mut [usize], e: usize, k: usize) -> bool {
    if e == assignment.len() {
        return true;
    }
    for c in 0..k {
        if earlier[e].iter().all(|&f| assignment[f] != c) {
            assignment[e] = c;
            if assign(earlier, assignment, e + 1, k) {
                return true;
            }
        }
    }
    false
}
