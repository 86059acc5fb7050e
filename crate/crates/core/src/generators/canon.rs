//! Canonical labeling by individualization and refinement.
//!
//! Color refinement is run to a stable ordered partition; when it is not
//! discrete, every vertex of the first non-singleton cell is individualized in
//! turn. Each discrete leaf induces a relabeled edge list, and the
//! lexicographically smallest one is the canonical code. Every step depends
//! only on isomorphism-invariant data, so isomorphic graphs share a code.

use crate::graph::{Graph, Vertex};

/// Sorted relabeled edge list; equal codes iff isomorphic.
pub type CanonicalCode = Vec<(Vertex, Vertex)>;

pub fn canonical_code(g: &Graph) -> CanonicalCode {
    let n = g.vertex_count();
    let adjacency: Vec<Vec<Vertex>> = g.vertices().map(|v| g.neighbors(v).collect()).collect();
    let initial: Vec<u32> = g.vertices().map(|v| g.degree(v) as u32).collect();
    let colors = refine(&adjacency, rank(&initial));
    let mut best: Option<CanonicalCode> = None;
    search(g, &adjacency, colors, n, &mut best);
    best.unwrap_or_default()
}

/// The canonical representative of `g`'s isomorphism class.
pub fn canonical_form(g: &Graph) -> Graph {
    Graph::from_edges(g.vertex_count(), &canonical_code(g)).expect("relabeling keeps invariants")
}

fn search(
    g: &Graph,
    adjacency: &[Vec<Vertex>],
    colors: Vec<u32>,
    n: usize,
    best: &mut Option<CanonicalCode>,
) {
    let cell_count = colors.iter().copied().max().map_or(0, |m| m as usize + 1);
    if cell_count == n {
        let mut code: CanonicalCode = g
            .edges()
            .iter()
            .map(|&(a, b)| {
                let (x, y) = (colors[a] as usize, colors[b] as usize);
                (x.min(y), x.max(y))
            })
            .collect();
        code.sort_unstable();
        if best.as_ref().is_none_or(|b| code < *b) {
            *best = Some(code);
        }
        return;
    }
    let mut sizes = vec![0usize; cell_count];
    for &c in &colors {
        sizes[c as usize] += 1;
    }
    let target = (0..cell_count).find(|&c| sizes[c] > 1).unwrap() as u32;
    for v in 0..n {
        if colors[v] != target {
            continue;
        }
        let split: Vec<u32> = (0..n)
            .map(|w| {
                let c = 2 * colors[w];
                if colors[w] == target && w != v {
                    c + 1
                } else {
                    c
                }
            })
            .collect();
        search(g, adjacency, refine(adjacency, rank(&split)), n, best);
    }
}

/// Iterated color refinement until the number of cells stops growing.
fn refine(adjacency: &[Vec<Vertex>], mut colors: Vec<u32>) -> Vec<u32> {
    loop {
        let before = distinct(&colors);
        let signatures: Vec<(u32, Vec<u32>)> = adjacency
            .iter()
            .enumerate()
            .map(|(v, nbrs)| {
                let mut s: Vec<u32> = nbrs.iter().map(|&w| colors[w]).collect();
                s.sort_unstable();
                (colors[v], s)
            })
            .collect();
        colors = rank(&signatures);
        if distinct(&colors) == before {
            return colors;
        }
    }
}

/// Replaces each value by its rank among the distinct values.
fn rank<T: Ord + Clone>(values: &[T]) -> Vec<u32> {
    let mut sorted: Vec<T> = values.to_vec();
    sorted.sort();
    sorted.dedup();
    values
        .iter()
        .map(|x| sorted.binary_search(x).unwrap() as u32)
        .collect()
}

fn distinct(colors: &[u32]) -> usize {
    colors.iter().copied().max().map_or(0, |m| m as usize + 1)
}
