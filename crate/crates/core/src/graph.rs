//! Subcubic graph representation and the adjacency-list text format.
//!
//! Vertices are dense `0..n` ids. Edges are stored with `u < v` and sorted
//! lexicographically, so edge ids are a deterministic function of the edge
//! multiset. Parallel edges are representable (and reported by
//! [`Graph::is_simple`]) but self-loops and degrees above three are not.

use std::fmt::Write as _;

use crate::error::{Error, Result};

pub type Vertex = usize;
pub type EdgeId = usize;

/// Maximum vertex degree admitted by [`Graph`].
pub const MAX_DEGREE: usize = 3;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    vertex_count: usize,
    edges: Vec<(Vertex, Vertex)>,
    incidence: Vec<Vec<EdgeId>>,
}

impl Graph {
    /// Builds a graph from an edge list, normalizing endpoint order and edge order.
    pub fn from_edges(vertex_count: usize, edges: &[(Vertex, Vertex)]) -> Result<Self> {
        let mut normalized = Vec::with_capacity(edges.len());
        for &(a, b) in edges {
            if a >= vertex_count || b >= vertex_count {
                return Err(Error::validation(format!(
                    "edge {a}-{b} references a vertex outside 0..{vertex_count}"
                )));
            }
            if a == b {
                return Err(Error::validation(format!("self-loop at vertex {a}")));
            }
            normalized.push((a.min(b), a.max(b)));
        }
        normalized.sort_unstable();

        let mut incidence = vec![Vec::new(); vertex_count];
        for (id, &(a, b)) in normalized.iter().enumerate() {
            incidence[a].push(id);
            incidence[b].push(id);
        }
        if let Some(v) = (0..vertex_count).find(|&v| incidence[v].len() > MAX_DEGREE) {
            return Err(Error::validation(format!(
                "vertex {v} has degree {} > {MAX_DEGREE}",
                incidence[v].len()
            )));
        }

        Ok(Graph {
            vertex_count,
            edges: normalized,
            incidence,
        })
    }

    pub fn empty(vertex_count: usize) -> Self {
        Graph {
            vertex_count,
            edges: Vec::new(),
            incidence: vec![Vec::new(); vertex_count],
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn vertices(&self) -> std::ops::Range<Vertex> {
        0..self.vertex_count
    }

    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    pub fn endpoints(&self, e: EdgeId) -> (Vertex, Vertex) {
        self.edges[e]
    }

    /// The endpoint of `e` that is not `v`.
    pub fn other_end(&self, e: EdgeId, v: Vertex) -> Vertex {
        let (a, b) = self.edges[e];
        if a == v {
            b
        } else {
            debug_assert_eq!(b, v);
            a
        }
    }

    pub fn incident(&self, v: Vertex) -> &[EdgeId] {
        &self.incidence[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.incidence[v].len()
    }

    pub fn neighbors(&self, v: Vertex) -> impl Iterator<Item = Vertex> + '_ {
        self.incidence[v].iter().map(move |&e| self.other_end(e, v))
    }

    pub fn max_degree(&self) -> usize {
        self.incidence.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn find_edge(&self, u: Vertex, v: Vertex) -> Option<EdgeId> {
        self.incidence
            .get(u)?
            .iter()
            .copied()
            .find(|&e| self.other_end(e, u) == v)
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.find_edge(u, v).is_some()
    }

    pub fn is_simple(&self) -> bool {
        self.edges.windows(2).all(|w| w[0] != w[1])
    }

    /// Errors unless the graph has no parallel edges.
    pub fn require_simple(&self) -> Result<()> {
        match self.edges.windows(2).find(|w| w[0] == w[1]) {
            None => Ok(()),
            Some(w) => Err(Error::validation(format!(
                "parallel edges between {} and {}",
                w[0].0, w[0].1
            ))),
        }
    }

    pub fn is_connected(&self) -> bool {
        if self.vertex_count == 0 {
            return true;
        }
        let mut seen = vec![false; self.vertex_count];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for w in self.neighbors(v) {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == self.vertex_count
    }

    /// A copy of the graph with edge `e` deleted (edge ids after `e` shift down).
    pub fn without_edge(&self, e: EdgeId) -> Graph {
        let rest: Vec<_> = self
            .edges
            .iter()
            .enumerate()
            .filter(|&(id, _)| id != e)
            .map(|(_, &uv)| uv)
            .collect();
        Graph::from_edges(self.vertex_count, &rest).expect("edge deletion keeps invariants")
    }

    /// Vertices of each degree, indexed by degree.
    pub fn degree_histogram(&self) -> [usize; MAX_DEGREE + 1] {
        let mut hist = [0; MAX_DEGREE + 1];
        for v in self.vertices() {
            hist[self.degree(v)] += 1;
        }
        hist
    }

    /// Parses the adjacency-list document format:
    /// one `"<id>: <neighbor ids>"` line per vertex, ids dense and in order,
    /// every edge listed at both endpoints.
    pub fn parse(text: &str) -> Result<Graph> {
        let mut lists: Vec<Vec<Vertex>> = Vec::new();
        let mut line_of: Vec<usize> = Vec::new();
        for (idx, raw) in text.split('\n').enumerate() {
            let line_no = idx + 1;
            let line = raw.strip_suffix('\r').unwrap_or(raw);
            if line.trim().is_empty() {
                continue;
            }
            let (id_part, rest) = line
                .split_once(':')
                .ok_or_else(|| Error::parse(line_no, "expected `<id>: <neighbors>`"))?;
            let id: Vertex = id_part.trim().parse().map_err(|_| {
                Error::parse(line_no, format!("bad vertex id `{}`", id_part.trim()))
            })?;
            if id != lists.len() {
                return Err(Error::parse(
                    line_no,
                    format!("expected vertex id {}, found {id}", lists.len()),
                ));
            }
            let mut nbrs = Vec::new();
            for tok in rest.split_whitespace() {
                let w: Vertex = tok
                    .parse()
                    .map_err(|_| Error::parse(line_no, format!("bad neighbor id `{tok}`")))?;
                nbrs.push(w);
            }
            lists.push(nbrs);
            line_of.push(line_no);
        }
        Self::from_adjacency_lists(&lists, &line_of)
    }

    /// `line_of[v]` is the source line of vertex `v`, for error reporting.
    pub(crate) fn from_adjacency_lists(lists: &[Vec<Vertex>], line_of: &[usize]) -> Result<Graph> {
        let n = lists.len();
        let mut edges = Vec::new();
        for (v, nbrs) in lists.iter().enumerate() {
            for &w in nbrs {
                if w >= n {
                    return Err(Error::parse(
                        line_of[v],
                        format!("neighbor {w} out of range"),
                    ));
                }
                if w == v {
                    return Err(Error::validation(format!("self-loop at vertex {v}")));
                }
                if v < w {
                    edges.push((v, w));
                }
            }
        }
        // each edge must be listed symmetrically, with matching multiplicity
        for (v, nbrs) in lists.iter().enumerate() {
            for &w in nbrs {
                let forward = nbrs.iter().filter(|&&x| x == w).count();
                let backward = lists[w].iter().filter(|&&x| x == v).count();
                if forward != backward {
                    return Err(Error::parse(
                        line_of[v],
                        format!("edge {v}-{w} is not listed at both endpoints"),
                    ));
                }
            }
        }
        Graph::from_edges(n, &edges)
    }

    /// Canonical text document: lines sorted by id, neighbors ascending, LF
    /// separated, no trailing newline.
    pub fn emit(&self) -> String {
        let mut out = String::new();
        for v in self.vertices() {
            if v > 0 {
                out.push('\n');
            }
            let mut nbrs: Vec<Vertex> = self.neighbors(v).collect();
            nbrs.sort_unstable();
            write!(out, "{v}:").unwrap();
            for w in nbrs {
                write!(out, " {w}").unwrap();
            }
        }
        out
    }
}
