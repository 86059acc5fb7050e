//! Exact chromatic index and 3-criticality for subcubic graphs.
//!
//! The engine is a backtracking search over edges. At each node it picks the
//! uncolored edge with the fewest available colors (lowest id on ties), which
//! doubles as forward checking: an edge with no available color fails the
//! branch immediately. When nothing is precolored, color symmetry is broken by
//! never opening more than one fresh color per node.

mod oracle;

pub use oracle::{oracle_chromatic_index, ORACLE_MAX_EDGES};

use rayon::prelude::*;
use serde::Serialize;

use crate::color::{Color, PartialEdgeColoring};
use crate::error::{Error, Result};
use crate::graph::{EdgeId, Graph, Vertex};

/// Chromatic index together with a total proper coloring using that many colors.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ChiResult {
    pub chromatic_index: usize,
    /// Color index in `0..chromatic_index` per edge id.
    pub witness: Vec<u8>,
}

/// Per-edge evidence that deleting the edge makes the graph 3-edge-colorable.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeEvidence {
    pub edge: (Vertex, Vertex),
    /// A proper coloring of the host with `edge` left uncolored and every
    /// other edge colored, or `None` if `G - e` is not 3-edge-colorable.
    pub coloring: Option<PartialEdgeColoring>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CriticalityReport {
    pub critical: bool,
    pub chromatic_index: usize,
    /// Empty when the graph itself is 3-edge-colorable.
    pub evidence: Vec<EdgeEvidence>,
}

impl CriticalityReport {
    /// First edge whose deletion leaves a class-two graph, if any.
    pub fn first_failing_edge(&self) -> Option<(Vertex, Vertex)> {
        self.evidence
            .iter()
            .find(|ev| ev.coloring.is_none())
            .map(|ev| ev.edge)
    }
}

struct Search<'a> {
    g: &'a Graph,
    palette: u8,
    mask: u8,
    colors: Vec<Option<u8>>,
    used: Vec<u8>,
    uncolored: usize,
    break_symmetry: bool,
}

impl<'a> Search<'a> {
    fn new(g: &'a Graph, palette: u8, fixed: &[Option<u8>]) -> Option<Self> {
        let mut used = vec![0u8; g.vertex_count()];
        for (e, c) in fixed.iter().enumerate() {
            if let Some(c) = *c {
                if c >= palette {
                    return None;
                }
                let (a, b) = g.endpoints(e);
                let bit = 1 << c;
                if used[a] & bit != 0 || used[b] & bit != 0 {
                    return None;
                }
                used[a] |= bit;
                used[b] |= bit;
            }
        }
        let uncolored = fixed.iter().filter(|c| c.is_none()).count();
        Some(Search {
            g,
            palette,
            mask: ((1u16 << palette) - 1) as u8,
            colors: fixed.to_vec(),
            used,
            uncolored,
            break_symmetry: uncolored == fixed.len(),
        })
    }

    fn available(&self, e: EdgeId) -> u8 {
        let (a, b) = self.g.endpoints(e);
        !(self.used[a] | self.used[b]) & self.mask
    }

    fn pick_edge(&self) -> Option<(EdgeId, u8)> {
        let mut best: Option<(EdgeId, u8)> = None;
        for e in 0..self.colors.len() {
            if self.colors[e].is_some() {
                continue;
            }
            let avail = self.available(e);
            let better = match best {
                None => true,
                Some((_, b)) => avail.count_ones() < b.count_ones(),
            };
            if better {
                best = Some((e, avail));
                if avail.count_ones() <= 1 {
                    break;
                }
            }
        }
        best
    }

    fn assign(&mut self, e: EdgeId, c: Option<u8>) {
        let (a, b) = self.g.endpoints(e);
        match c {
            Some(c) => {
                self.used[a] |= 1 << c;
                self.used[b] |= 1 << c;
                self.uncolored -= 1;
            }
            None => {
                let old = self.colors[e].expect("unassigning an uncolored edge");
                self.used[a] &= !(1 << old);
                self.used[b] &= !(1 << old);
                self.uncolored += 1;
            }
        }
        self.colors[e] = c;
    }

    fn run(&mut self, opened: u8) -> bool {
        if self.uncolored == 0 {
            return true;
        }
        let Some((e, avail)) = self.pick_edge() else {
            return true;
        };
        for c in 0..self.palette {
            if avail & (1 << c) == 0 {
                continue;
            }
            if self.break_symmetry && c > opened {
                break;
            }
            self.assign(e, Some(c));
            let next_opened = if self.break_symmetry {
                opened.max(c + 1)
            } else {
                opened
            };
            if self.run(next_opened) {
                return true;
            }
            self.assign(e, None);
        }
        false
    }
}

/// Proper total coloring with `palette` colors extending `fixed`, if one exists.
fn extend_coloring(g: &Graph, palette: u8, fixed: &[Option<u8>]) -> Option<Vec<u8>> {
    assert_eq!(fixed.len(), g.edge_count());
    let mut search = Search::new(g, palette, fixed)?;
    if search.run(0) {
        Some(search.colors.into_iter().map(|c| c.unwrap()).collect())
    } else {
        None
    }
}

/// A proper total 3-edge-coloring of `g` that agrees with `fixed` on its
/// colored edges, or `None` when none exists (or `fixed` is not proper).
pub fn colorable_with_3(g: &Graph, fixed: &PartialEdgeColoring) -> Option<PartialEdgeColoring> {
    if fixed.len() != g.edge_count() {
        return None;
    }
    let fixed: Vec<Option<u8>> = fixed
        .as_slice()
        .iter()
        .map(|c| c.map(|c| c.index() as u8))
        .collect();
    extend_coloring(g, 3, &fixed).map(|cs| {
        PartialEdgeColoring::from_colors(
            cs.into_iter()
                .map(|c| Some(Color::from_index(c as usize)))
                .collect(),
        )
    })
}

/// Exact chromatic index with a witness coloring.
pub fn chromatic_index(g: &Graph) -> Result<ChiResult> {
    g.require_simple()?;
    let delta = g.max_degree();
    let fixed = vec![None; g.edge_count()];
    // Vizing: delta + 1 colors always suffice for simple graphs.
    for k in delta..=delta + 1 {
        if let Some(witness) = extend_coloring(g, k as u8, &fixed) {
            return Ok(ChiResult {
                chromatic_index: k,
                witness,
            });
        }
    }
    unreachable!("Vizing's bound guarantees a (delta+1)-edge-coloring")
}

/// Decides whether `g` is 3-critical: class two, and class one after deleting
/// any single edge. Only connected simple graphs with maximum degree exactly
/// three are accepted.
pub fn is_3_critical(g: &Graph) -> Result<CriticalityReport> {
    g.require_simple()?;
    if g.max_degree() != 3 {
        return Err(Error::validation(format!(
            "criticality is defined for maximum degree 3, got {}",
            g.max_degree()
        )));
    }
    if !g.is_connected() {
        return Err(Error::validation("graph is disconnected"));
    }

    let uncolored = PartialEdgeColoring::uncolored(g);
    if colorable_with_3(g, &uncolored).is_some() {
        return Ok(CriticalityReport {
            critical: false,
            chromatic_index: 3,
            evidence: Vec::new(),
        });
    }

    let evidence: Vec<EdgeEvidence> = (0..g.edge_count())
        .into_par_iter()
        .map(|e| {
            let reduced = g.without_edge(e);
            let coloring = colorable_with_3(&reduced, &PartialEdgeColoring::uncolored(&reduced))
                .map(|c| lift_coloring(c.as_slice(), e));
            EdgeEvidence {
                edge: g.endpoints(e),
                coloring,
            }
        })
        .collect();
    let critical = evidence.iter().all(|ev| ev.coloring.is_some());
    Ok(CriticalityReport {
        critical,
        chromatic_index: 4,
        evidence,
    })
}

/// Re-indexes a coloring of `G - e` onto the edge ids of `G`, leaving `e` uncolored.
fn lift_coloring(reduced: &[Option<Color>], removed: EdgeId) -> PartialEdgeColoring {
    let mut colors = Vec::with_capacity(reduced.len() + 1);
    colors.extend_from_slice(&reduced[..removed]);
    colors.push(None);
    colors.extend_from_slice(&reduced[removed..]);
    PartialEdgeColoring::from_colors(colors)
}

/// Checks a color-index witness independently of the search that produced it.
pub fn witness_is_proper(g: &Graph, witness: &[u8], palette: usize) -> bool {
    witness.len() == g.edge_count()
        && witness.iter().all(|&c| (c as usize) < palette)
        && g.vertices().all(|v| {
            let mut mask = 0u32;
            g.incident(v).iter().all(|&e| {
                let bit = 1u32 << witness[e];
                let fresh = mask & bit == 0;
                mask |= bit;
                fresh
            })
        })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{cycle, petersen, petersen_star};

    #[test]
    fn small_indices() {
        let k2 = Graph::from_edges(2, &[(0, 1)]).unwrap();
        assert_eq!(chromatic_index(&k2).unwrap().chromatic_index, 1);
        assert_eq!(chromatic_index(&cycle(5)).unwrap().chromatic_index, 3);
        assert_eq!(chromatic_index(&cycle(6)).unwrap().chromatic_index, 2);
        assert_eq!(
            chromatic_index(&Graph::empty(3)).unwrap().chromatic_index,
            0
        );
    }

    #[test]
    fn p_star_is_class_two() {
        let p = petersen_star();
        let r = chromatic_index(&p).unwrap();
        assert_eq!(r.chromatic_index, 4);
        assert!(witness_is_proper(&p, &r.witness, 4));
        assert!(colorable_with_3(&p, &PartialEdgeColoring::uncolored(&p)).is_none());
    }

    #[test]
    fn c4_and_c5_extend() {
        for n in [4, 5] {
            let g = cycle(n);
            let c = colorable_with_3(&g, &PartialEdgeColoring::uncolored(&g)).unwrap();
            assert!(c.is_total() && c.is_proper(&g));
        }
    }

    #[test]
    fn extension_respects_fixed_colors() {
        let g = cycle(4);
        let mut fixed = PartialEdgeColoring::uncolored(&g);
        fixed.set(0, Some(Color::Z));
        fixed.set(3, Some(Color::Y));
        let c = colorable_with_3(&g, &fixed).unwrap();
        assert_eq!(c.get(0), Some(Color::Z));
        assert_eq!(c.get(3), Some(Color::Y));
        assert!(c.is_proper(&g));
    }

    #[test]
    fn improper_fixed_gives_none() {
        let g = cycle(4);
        let (a, _) = g.endpoints(0);
        let other = g.incident(a).iter().copied().find(|&e| e != 0).unwrap();
        let mut fixed = PartialEdgeColoring::uncolored(&g);
        fixed.set(0, Some(Color::X));
        fixed.set(other, Some(Color::X));
        assert!(colorable_with_3(&g, &fixed).is_none());
    }

    #[test]
    fn criticality_examples() {
        let report = is_3_critical(&petersen_star()).unwrap();
        assert!(report.critical);
        for ev in &report.evidence {
            let c = ev.coloring.as_ref().unwrap();
            assert!(c.is_proper(&petersen_star()));
            assert_eq!(c.colored_count(), 11);
        }
        let k4 = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert!(!is_3_critical(&k4).unwrap().critical);
        let full = is_3_critical(&petersen()).unwrap();
        assert!(!full.critical);
        assert!(full.first_failing_edge().is_some());
    }

    #[test]
    fn criticality_rejects_bad_input() {
        assert!(is_3_critical(&cycle(6)).is_err());
        let two_k4 = Graph::from_edges(
            8,
            &[
                (0, 1),
                (0, 2),
                (0, 3),
                (1, 2),
                (1, 3),
                (2, 3),
                (4, 5),
                (4, 6),
                (4, 7),
                (5, 6),
                (5, 7),
                (6, 7),
            ],
        )
        .unwrap();
        assert!(matches!(is_3_critical(&two_k4), Err(Error::Validation(_))));
    }
}
