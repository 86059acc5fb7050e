//! Configurations: a pattern graph, which of its vertices have their full
//! host neighborhood inside the pattern, the ordered boundary slots, and
//! optional vertex identifications.
//!
//! Text format: graph lines as in the graph format, then keyword lines
//!
//! ```text
//! interior: 0 1 2        (optional, default every vertex)
//! boundary: 0/0 4/0      (vertex/slot, in board order)
//! identify: 5=13         (optional, merges 13 into 5)
//! ```
//!
//! Lines starting with `#` are comments. An interior vertex has host degree
//! equal to its pattern degree plus its slot count. Each vertex carries at
//! most one slot.

use std::fmt::Write as _;

use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex, MAX_DEGREE};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Configuration {
    pattern: Graph,
    interior: Vec<bool>,
    slots: Vec<Vertex>,
    identifications: Vec<(Vertex, Vertex)>,
}

/// The configuration after identifications, with vertices renumbered densely.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Resolved {
    pub graph: Graph,
    pub interior: Vec<bool>,
    /// Exact host degree for interior vertices.
    pub host_degree: Vec<Option<usize>>,
    /// Slot vertices in board order.
    pub slots: Vec<Vertex>,
    /// Pattern vertex each resolved vertex came from.
    pub origin: Vec<Vertex>,
}

impl Configuration {
    pub fn new(
        pattern: Graph,
        interior: Vec<bool>,
        slots: Vec<Vertex>,
        identifications: Vec<(Vertex, Vertex)>,
    ) -> Result<Self> {
        let n = pattern.vertex_count();
        pattern.require_simple()?;
        if interior.len() != n {
            return Err(Error::validation(
                "interior flags do not match the vertex count",
            ));
        }
        let mut slot_count = vec![0usize; n];
        for &v in &slots {
            if v >= n {
                return Err(Error::validation(format!(
                    "boundary vertex {v} out of range"
                )));
            }
            if !interior[v] {
                return Err(Error::validation(format!(
                    "boundary vertex {v} is not interior"
                )));
            }
            slot_count[v] += 1;
            if slot_count[v] > 1 {
                return Err(Error::validation(format!(
                    "vertex {v} carries more than one boundary slot"
                )));
            }
        }
        for v in 0..n {
            if interior[v] && pattern.degree(v) + slot_count[v] > MAX_DEGREE {
                return Err(Error::validation(format!(
                    "vertex {v} would have host degree above {MAX_DEGREE}"
                )));
            }
        }
        let cfg = Configuration {
            pattern,
            interior,
            slots,
            identifications,
        };
        cfg.resolve()?;
        Ok(cfg)
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut graph_text = String::new();
        let mut interior_list: Option<(usize, Vec<Vertex>)> = None;
        let mut boundary: Option<(usize, Vec<(Vertex, usize)>)> = None;
        let mut identify: Vec<(Vertex, Vertex)> = Vec::new();

        for (idx, raw) in text.split('\n').enumerate() {
            let line_no = idx + 1;
            let line = raw.strip_suffix('\r').unwrap_or(raw);
            let trimmed = line.trim();
            let keyword = trimmed
                .split_once(':')
                .map(|(k, rest)| (k.trim(), rest))
                .filter(|(k, _)| k.parse::<usize>().is_err());
            if trimmed.starts_with('#') {
                graph_text.push('\n');
                continue;
            }
            let Some((key, rest)) = keyword else {
                graph_text.push_str(line);
                graph_text.push('\n');
                continue;
            };
            graph_text.push('\n');
            match key {
                "interior" => {
                    let ids = rest
                        .split_whitespace()
                        .map(|tok| parse_id(tok, line_no))
                        .collect::<Result<Vec<_>>>()?;
                    interior_list = Some((line_no, ids));
                }
                "boundary" => {
                    let mut entries = Vec::new();
                    for tok in rest.split_whitespace() {
                        let (v, s) = tok.split_once('/').ok_or_else(|| {
                            Error::parse(line_no, format!("expected `vertex/slot`, got `{tok}`"))
                        })?;
                        entries.push((parse_id(v, line_no)?, parse_id(s, line_no)?));
                    }
                    boundary = Some((line_no, entries));
                }
                "identify" => {
                    for tok in rest.split_whitespace() {
                        let (a, b) = tok.split_once('=').ok_or_else(|| {
                            Error::parse(line_no, format!("expected `a=b`, got `{tok}`"))
                        })?;
                        identify.push((parse_id(a, line_no)?, parse_id(b, line_no)?));
                    }
                }
                other => {
                    return Err(Error::parse(line_no, format!("unknown keyword `{other}`")));
                }
            }
        }

        let pattern = Graph::parse(&graph_text)?;
        let n = pattern.vertex_count();
        let interior = match interior_list {
            None => vec![true; n],
            Some((line_no, ids)) => {
                let mut flags = vec![false; n];
                for v in ids {
                    if v >= n {
                        return Err(Error::parse(
                            line_no,
                            format!("interior vertex {v} out of range"),
                        ));
                    }
                    flags[v] = true;
                }
                flags
            }
        };
        let (line_no, entries) = boundary.unwrap_or((0, Vec::new()));
        let mut slots = Vec::with_capacity(entries.len());
        for (v, s) in entries {
            if s != 0 {
                return Err(Error::parse(
                    line_no,
                    format!("slot {v}/{s}: each vertex carries at most one slot, numbered 0"),
                ));
            }
            slots.push(v);
        }
        Configuration::new(pattern, interior, slots, identify)
    }

    /// Canonical text form; [`Configuration::parse`] inverts it.
    pub fn emit(&self) -> String {
        let mut out = self.pattern.emit();
        if self.interior.iter().any(|&i| !i) {
            out.push_str("\ninterior:");
            for v in (0..self.interior.len()).filter(|&v| self.interior[v]) {
                write!(out, " {v}").unwrap();
            }
        }
        out.push_str("\nboundary:");
        for v in &self.slots {
            write!(out, " {v}/0").unwrap();
        }
        if !self.identifications.is_empty() {
            out.push_str("\nidentify:");
            for (a, b) in &self.identifications {
                write!(out, " {a}={b}").unwrap();
            }
        }
        out.push('\n');
        out
    }

    /// SHA-256 of the canonical text, hex encoded.
    pub fn hash(&self) -> String {
        hex::encode(Sha256::digest(self.emit().as_bytes()))
    }

    pub fn pattern(&self) -> &Graph {
        &self.pattern
    }

    pub fn interior(&self) -> &[bool] {
        &self.interior
    }

    pub fn slots(&self) -> &[Vertex] {
        &self.slots
    }

    pub fn identifications(&self) -> &[(Vertex, Vertex)] {
        &self.identifications
    }

    /// The same configuration with a different identification list.
    pub fn with_identifications(&self, identifications: Vec<(Vertex, Vertex)>) -> Result<Self> {
        Configuration::new(
            self.pattern.clone(),
            self.interior.clone(),
            self.slots.clone(),
            identifications,
        )
    }

    fn host_degree(&self, v: Vertex) -> Option<usize> {
        self.interior[v]
            .then(|| self.pattern.degree(v) + self.slots.iter().filter(|&&s| s == v).count())
    }

    /// Applies identifications. Merging `b` into `a` requires both to be
    /// interior with equal host degree; the merged vertex keeps as many
    /// slots as its host degree leaves free, preferring `a`'s.
    pub fn resolve(&self) -> Result<Resolved> {
        let n = self.pattern.vertex_count();
        let mut rep: Vec<Vertex> = (0..n).collect();
        for &(a, b) in &self.identifications {
            if a >= n || b >= n || a == b {
                return Err(Error::validation(format!("bad identification {a}={b}")));
            }
            if rep[a] != a || rep[b] != b {
                return Err(Error::validation(format!(
                    "identification {a}={b} reuses an identified vertex"
                )));
            }
            if !self.interior[a] || !self.interior[b] {
                return Err(Error::validation(format!(
                    "identification {a}={b} needs interior vertices"
                )));
            }
            if self.host_degree(a) != self.host_degree(b) {
                return Err(Error::validation(format!(
                    "identification {a}={b} joins vertices of different host degree"
                )));
            }
            rep[b] = a;
        }

        let survivors: Vec<Vertex> = (0..n).filter(|&v| rep[v] == v).collect();
        let mut new_id = vec![usize::MAX; n];
        for (i, &v) in survivors.iter().enumerate() {
            new_id[v] = i;
        }
        let map = |v: Vertex| new_id[rep[v]];

        let mut edges = Vec::with_capacity(self.pattern.edge_count());
        for &(a, b) in self.pattern.edges() {
            let (x, y) = (map(a), map(b));
            if x == y {
                return Err(Error::validation(format!(
                    "identification turns edge {a}-{b} into a self-loop"
                )));
            }
            edges.push((x, y));
        }
        let graph = Graph::from_edges(survivors.len(), &edges)?;
        graph
            .require_simple()
            .map_err(|_| Error::validation("identification creates parallel edges".to_string()))?;

        let host_degree: Vec<Option<usize>> =
            survivors.iter().map(|&v| self.host_degree(v)).collect();
        let interior: Vec<bool> = survivors.iter().map(|&v| self.interior[v]).collect();
        let mut free = vec![0usize; survivors.len()];
        for (r, h) in host_degree.iter().enumerate() {
            if let Some(h) = *h {
                free[r] = h.checked_sub(graph.degree(r)).ok_or_else(|| {
                    Error::validation(format!(
                        "identified vertex {} exceeds its host degree",
                        survivors[r]
                    ))
                })?;
            }
        }
        // slots of surviving vertices claim the free budget before merged ones
        let mut order: Vec<(usize, Vertex)> = self.slots.iter().copied().enumerate().collect();
        order.sort_by_key(|&(pos, v)| (rep[v] != v, pos));
        let mut keep = vec![false; self.slots.len()];
        for (pos, v) in order {
            let r = map(v);
            if free[r] > 0 {
                free[r] -= 1;
                keep[pos] = true;
            }
        }
        if let Some(r) = free.iter().position(|&f| f > 0) {
            return Err(Error::validation(format!(
                "identified vertex {} has host edges outside the pattern and boundary",
                survivors[r]
            )));
        }
        let slots: Vec<Vertex> = self
            .slots
            .iter()
            .enumerate()
            .filter(|&(pos, _)| keep[pos])
            .map(|(_, &v)| map(v))
            .collect();

        Ok(Resolved {
            graph,
            interior,
            host_degree,
            slots,
            origin: survivors,
        })
    }
}

fn parse_id(tok: &str, line_no: usize) -> Result<Vertex> {
    tok.trim()
        .parse()
        .map_err(|_| Error::parse(line_no, format!("bad vertex id `{tok}`")))
}
