//! Degree-respecting subgraph embeddings of configurations.

use std::collections::BTreeSet;

use crate::fixability::{Configuration, Resolved};
use crate::graph::{Graph, Vertex};

/// Image of each resolved pattern vertex, indexed by pattern vertex.
pub type Embedding = Vec<Vertex>;

/// Every injective map from the resolved pattern into `g` that sends edges
/// to edges and interior vertices to host vertices of exactly the required
/// degree. The subgraph need not be induced. Sorted lexicographically.
pub fn find_embeddings(g: &Graph, cfg: &Configuration) -> Vec<Embedding> {
    let r = resolved(cfg);
    let order = search_order(&r.graph);
    let mut out = Vec::new();
    let mut map: Vec<Option<Vertex>> = vec![None; r.graph.vertex_count()];
    let mut used = vec![false; g.vertex_count()];
    extend(g, &r, &order, 0, &mut map, &mut used, &mut out);
    out.sort_unstable();
    out
}

/// One embedding per orbit under the pattern's degree-preserving
/// automorphisms, keeping the lexicographically smallest representative.
pub fn find_pattern(g: &Graph, cfg: &Configuration) -> Vec<Embedding> {
    let r = resolved(cfg);
    let mut seen = BTreeSet::new();
    find_embeddings(g, cfg)
        .into_iter()
        .filter(|m| seen.insert(image_key(&r, m)))
        .collect()
}

fn resolved(cfg: &Configuration) -> Resolved {
    cfg.resolve()
        .expect("a constructed configuration always resolves")
}

/// Covered host edges and the degree requirement on each covered vertex.
type ImageKey = (Vec<(Vertex, Vertex)>, Vec<(Vertex, Option<usize>)>);

/// Two embeddings differ by a pattern automorphism exactly when they cover
/// the same host edges and place the same degree requirement on each
/// covered host vertex.
fn image_key(r: &Resolved, m: &Embedding) -> ImageKey {
    let mut edges: Vec<(Vertex, Vertex)> = r
        .graph
        .edges()
        .iter()
        .map(|&(a, b)| (m[a].min(m[b]), m[a].max(m[b])))
        .collect();
    edges.sort_unstable();
    let mut tags: Vec<(Vertex, Option<usize>)> = m
        .iter()
        .enumerate()
        .map(|(v, &x)| (x, r.host_degree[v]))
        .collect();
    tags.sort_unstable();
    (edges, tags)
}

/// Breadth-first order over each component so that every vertex after the
/// first of its component has an already-placed neighbor.
fn search_order(p: &Graph) -> Vec<Vertex> {
    let mut order = Vec::with_capacity(p.vertex_count());
    let mut placed = vec![false; p.vertex_count()];
    for s in p.vertices() {
        if placed[s] {
            continue;
        }
        placed[s] = true;
        let start = order.len();
        order.push(s);
        let mut i = start;
        while i < order.len() {
            let mut ns: Vec<Vertex> = p.neighbors(order[i]).collect();
            ns.sort_unstable();
            for w in ns {
                if !placed[w] {
                    placed[w] = true;
                    order.push(w);
                }
            }
            i += 1;
        }
    }
    order
}

fn extend(
    g: &Graph,
    r: &Resolved,
    order: &[Vertex],
    depth: usize,
    map: &mut Vec<Option<Vertex>>,
    used: &mut Vec<bool>,
    out: &mut Vec<Embedding>,
) {
    let Some(&v) = order.get(depth) else {
        out.push(map.iter().map(|x| x.expect("all placed")).collect());
        return;
    };
    let anchor = r.graph.neighbors(v).find_map(|w| map[w]);
    let candidates: Vec<Vertex> = match anchor {
        Some(a) => g.neighbors(a).collect(),
        None => g.vertices().collect(),
    };
    for x in candidates {
        if used[x] || !fits(g, r, map, v, x) {
            continue;
        }
        map[v] = Some(x);
        used[x] = true;
        extend(g, r, order, depth + 1, map, used, out);
        used[x] = false;
        map[v] = None;
    }
}

fn fits(g: &Graph, r: &Resolved, map: &[Option<Vertex>], v: Vertex, x: Vertex) -> bool {
    if let Some(d) = r.host_degree[v] {
        if g.degree(x) != d {
            return false;
        }
    } else if g.degree(x) < r.graph.degree(v) {
        return false;
    }
    r.graph
        .neighbors(v)
        .all(|w| map[w].is_none_or(|y| g.has_edge(x, y)))
}
