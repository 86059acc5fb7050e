//! Random instances shared by the property and acceptance suites.

#![allow(dead_code)]

use rand::seq::SliceRandom;
use rand::Rng;

use kempe_core::{Color, Graph, PartialEdgeColoring};

/// A random simple graph on `n` vertices with maximum degree at most 3,
/// built by offering `attempts` random vertex pairs.
pub fn random_subcubic<R: Rng>(rng: &mut R, n: usize, attempts: usize) -> Graph {
    let mut deg = vec![0usize; n];
    let mut edges: Vec<(usize, usize)> = Vec::new();
    if n >= 2 {
        for _ in 0..attempts {
            let a = rng.gen_range(0..n);
            let b = rng.gen_range(0..n);
            let e = (a.min(b), a.max(b));
            if a == b || deg[a] == 3 || deg[b] == 3 || edges.contains(&e) {
                continue;
            }
            deg[a] += 1;
            deg[b] += 1;
            edges.push(e);
        }
    }
    Graph::from_edges(n, &edges).expect("valid subcubic graph")
}

/// A random proper partial 3-edge-coloring: edges are visited in random
/// order and given a random free color, or left uncolored when none is
/// free or with probability `skip`.
pub fn random_partial_coloring<R: Rng>(rng: &mut R, g: &Graph, skip: f64) -> PartialEdgeColoring {
    let mut c = PartialEdgeColoring::uncolored(g);
    let mut order: Vec<usize> = (0..g.edge_count()).collect();
    order.shuffle(rng);
    for e in order {
        if rng.gen_bool(skip) {
            continue;
        }
        let (u, v) = g.endpoints(e);
        let used = c.seen(g, u).union(c.seen(g, v));
        let free: Vec<Color> = Color::ALL
            .into_iter()
            .filter(|&x| !used.contains(x))
            .collect();
        if let Some(&x) = free.choose(rng) {
            c.set(e, Some(x));
        }
    }
    c
}
