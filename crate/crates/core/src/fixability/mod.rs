//! Reducibility by Kempe swaps at a configuration's boundary.
//!
//! Every pattern edge starts uncolored and each boundary slot carries one
//! precolored edge, summarized by a [`Board`]. A board is won if the pattern
//! edges can be colored directly, or if some swap at a slot wins against
//! every answer of an adversary who decides where the swapped chain ends:
//! at another slot seeing a color of the pair (both slots flip) or outside
//! the configuration (only the swapped slot flips).
//!
//! In [`Mode::Stateful`] the adversary's pairing for the most recently
//! swapped color pair is remembered. Swapping along a pair never changes
//! that pair's chains, so later swaps with the same pair are forced.

mod board;
mod certificate;
mod config;
pub mod game;
mod verify;

pub use board::{
    board_count, canonicalize, canonicalizing_permutations, enumerate_boards, Board,
    ColorPermutation, MAX_SLOTS,
};
pub use certificate::{Action, Certificate, Entry, Knowledge, Mode, StateRef, CERTIFICATE_FORMAT};
pub use config::{Configuration, Resolved};
pub use verify::{verify_certificate, VerifyReport};

use std::collections::{BTreeSet, HashSet};

use rayon::prelude::*;

use crate::color::{Color, ColorPair, PartialEdgeColoring};
use crate::coloring::colorable_with_3;
use crate::error::{Error, Result};
use crate::graph::Graph;

pub const MAX_PATTERN_EDGES: usize = 20;

/// A resolved configuration ready for board games.
#[derive(Clone, Debug)]
pub struct Arena {
    resolved: Resolved,
}

impl Arena {
    pub fn new(cfg: &Configuration) -> Result<Self> {
        let resolved = cfg.resolve()?;
        if let Some(v) = resolved.interior.iter().position(|&i| !i) {
            return Err(Error::validation(format!(
                "vertex {} is not interior; boards need every host edge accounted for",
                resolved.origin[v]
            )));
        }
        let t = resolved.slots.len();
        if !(1..=MAX_SLOTS).contains(&t) {
            return Err(Error::Size(format!(
                "slot count must be in 1..={MAX_SLOTS}, got {t}"
            )));
        }
        if resolved.graph.edge_count() > MAX_PATTERN_EDGES {
            return Err(Error::Size(format!(
                "at most {MAX_PATTERN_EDGES} pattern edges supported, got {}",
                resolved.graph.edge_count()
            )));
        }
        Ok(Arena { resolved })
    }

    pub fn slot_count(&self) -> usize {
        self.resolved.slots.len()
    }

    pub fn graph(&self) -> &Graph {
        &self.resolved.graph
    }

    pub fn resolved(&self) -> &Resolved {
        &self.resolved
    }

    /// A coloring of the pattern edges (in edge-id order) compatible with the
    /// board, found by extending the board's colors on pendant stub edges.
    pub fn directly_colorable(&self, b: &Board) -> Result<Option<Vec<Color>>> {
        let g = &self.resolved.graph;
        let t = self.slot_count();
        if b.len() != t {
            return Err(Error::validation(format!(
                "board has {} slots, configuration has {t}",
                b.len()
            )));
        }
        let n = g.vertex_count();
        let mut edges: Vec<_> = g.edges().to_vec();
        edges.extend(
            self.resolved
                .slots
                .iter()
                .enumerate()
                .map(|(i, &v)| (v, n + i)),
        );
        let stubbed = Graph::from_edges(n + t, &edges)?;
        let mut fixed = PartialEdgeColoring::uncolored(&stubbed);
        for (i, &v) in self.resolved.slots.iter().enumerate() {
            fixed.set(stubbed.find_edge(v, n + i).unwrap(), Some(b.get(i)));
        }
        Ok(colorable_with_3(&stubbed, &fixed).map(|full| {
            g.edges()
                .iter()
                .map(|&(a, c)| full.get(stubbed.find_edge(a, c).unwrap()).unwrap())
                .collect()
        }))
    }

    /// Boards the adversary can answer a swap at `slot` along `pair` with.
    pub fn adversary_responses(
        &self,
        b: &Board,
        slot: usize,
        pair: ColorPair,
    ) -> Result<Vec<Board>> {
        let t = self.slot_count();
        if b.len() != t || slot >= t {
            return Err(Error::validation(format!(
                "slot {slot} out of range for {t} slots"
            )));
        }
        if !pair.contains(b.get(slot)) {
            return Err(Error::VacuousMove(format!(
                "slot {slot} sees {} which is not in pair {}",
                b.get(slot),
                pair.name()
            )));
        }
        let moved = b.toggled(slot, pair);
        let mut out = BTreeSet::from([canonicalize(&moved).0]);
        for j in (0..t).filter(|&j| j != slot && pair.contains(b.get(j))) {
            out.insert(canonicalize(&moved.toggled(j, pair)).0);
        }
        Ok(out.into_iter().collect())
    }
}

pub fn directly_colorable(cfg: &Configuration, b: &Board) -> Result<Option<Vec<Color>>> {
    Arena::new(cfg)?.directly_colorable(b)
}

pub fn adversary_responses(
    cfg: &Configuration,
    b: &Board,
    slot: usize,
    pair: ColorPair,
) -> Result<Vec<Board>> {
    Arena::new(cfg)?.adversary_responses(b, slot, pair)
}

/// Partner per slot; a slot partnered with itself is unpaired.
type Partners = [u8; MAX_SLOTS];

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
struct State {
    board: u16,
    known: Option<(u8, Partners)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
enum Chance {
    /// Swap at `slot` along a pair whose pairing is unknown.
    Open { board: u16, pair: u8, slot: u8 },
    /// Swap along the remembered pair: the outcome is forced.
    Forced(State),
}

struct BoardGame<'a> {
    t: usize,
    mode: Mode,
    colorings: &'a [Option<Option<Vec<Color>>>],
}

fn no_partners() -> Partners {
    std::array::from_fn(|i| i as u8)
}

impl BoardGame<'_> {
    fn decode(&self, code: u16) -> Board {
        Board::from_code(code as usize, self.t)
    }

    fn canonical_state(&self, b: &Board, known: Option<(ColorPair, Partners)>) -> State {
        let candidates = canonicalizing_permutations(b);
        let board = b.permuted(&candidates[0]).code() as u16;
        let known = known.map(|(pair, partners)| {
            let idx = candidates
                .iter()
                .map(|p| p.apply_pair(pair).index() as u8)
                .min()
                .unwrap();
            (idx, partners)
        });
        State { board, known }
    }

    fn eligible(&self, b: &Board, pair: ColorPair) -> Vec<usize> {
        (0..self.t).filter(|&j| pair.contains(b.get(j))).collect()
    }
}

/// Every partial matching on `items`, as partner arrays.
fn matchings(items: &[usize]) -> Vec<Partners> {
    fn go(rest: &[usize], current: &mut Partners, out: &mut Vec<Partners>) {
        let Some((&first, tail)) = rest.split_first() else {
            out.push(*current);
            return;
        };
        go(tail, current, out);
        for (k, &other) in tail.iter().enumerate() {
            current[first] = other as u8;
            current[other] = first as u8;
            let remaining: Vec<usize> = tail
                .iter()
                .enumerate()
                .filter(|&(i, _)| i != k)
                .map(|(_, &v)| v)
                .collect();
            go(&remaining, current, out);
            current[first] = first as u8;
            current[other] = other as u8;
        }
    }
    let mut out = Vec::new();
    go(items, &mut no_partners(), &mut out);
    out
}

impl game::Game for BoardGame<'_> {
    type State = State;
    type Move = (usize, ColorPair);
    type Chance = Chance;

    fn is_terminal(&self, s: &State) -> bool {
        matches!(self.colorings[s.board as usize], Some(Some(_)))
    }

    fn moves(&self, s: &State) -> Vec<((usize, ColorPair), Chance)> {
        let b = self.decode(s.board);
        let mut out = Vec::new();
        for slot in 0..self.t {
            for pair in ColorPair::ALL {
                if !pair.contains(b.get(slot)) {
                    continue;
                }
                let chance = match s.known {
                    Some((known_pair, partners)) if known_pair as usize == pair.index() => {
                        let mate = partners[slot] as usize;
                        let mut next = b.toggled(slot, pair);
                        if mate != slot {
                            next = next.toggled(mate, pair);
                        }
                        Chance::Forced(self.canonical_state(&next, Some((pair, partners))))
                    }
                    _ => Chance::Open {
                        board: s.board,
                        pair: pair.index() as u8,
                        slot: slot as u8,
                    },
                };
                out.push(((slot, pair), chance));
            }
        }
        out
    }

    fn outcomes(&self, c: &Chance) -> Vec<State> {
        let (board, pair, slot) = match c {
            Chance::Forced(s) => return vec![s.clone()],
            Chance::Open { board, pair, slot } => (
                *board,
                ColorPair::from_index(*pair as usize),
                *slot as usize,
            ),
        };
        let b = self.decode(board);
        let moved = b.toggled(slot, pair);
        let mut out = BTreeSet::new();
        match self.mode {
            Mode::Basic => {
                out.insert(self.canonical_state(&moved, None));
                for j in self.eligible(&b, pair) {
                    if j != slot {
                        out.insert(self.canonical_state(&moved.toggled(j, pair), None));
                    }
                }
            }
            Mode::Stateful => {
                for partners in matchings(&self.eligible(&b, pair)) {
                    let mate = partners[slot] as usize;
                    let next = if mate == slot {
                        moved.clone()
                    } else {
                        moved.toggled(mate, pair)
                    };
                    out.insert(self.canonical_state(&next, Some((pair, partners))));
                }
            }
        }
        out.into_iter().collect()
    }
}

/// Everything the prover learned about a configuration.
#[derive(Clone, Debug)]
pub struct ProofReport {
    pub mode: Mode,
    pub slot_count: usize,
    pub board_count: usize,
    /// Canonical boards that are colorable without swaps.
    pub colorable_boards: usize,
    /// Canonical boards with no winning strategy in this mode.
    pub losing_boards: Vec<Board>,
    pub states_explored: usize,
    /// Largest rank among the initial boards.
    pub max_rank: usize,
    pub certificate: Option<Certificate>,
}

/// Runs the fixpoint search and, when every board is won, emits a certificate.
pub fn analyze(cfg: &Configuration, mode: Mode) -> Result<ProofReport> {
    let arena = Arena::new(cfg)?;
    let t = arena.slot_count();
    let boards = enumerate_boards(t)?;

    let mut colorings: Vec<Option<Option<Vec<Color>>>> = vec![None; 3usize.pow(t as u32)];
    let computed: Vec<(usize, Option<Vec<Color>>)> = boards
        .par_iter()
        .map(|b| Ok((b.code(), arena.directly_colorable(b)?)))
        .collect::<Result<_>>()?;
    for (code, c) in computed {
        colorings[code] = Some(c);
    }
    let colorable_boards = boards
        .iter()
        .filter(|b| matches!(colorings[b.code()], Some(Some(_))))
        .count();

    let g = BoardGame {
        t,
        mode,
        colorings: &colorings,
    };
    let roots: Vec<State> = boards
        .iter()
        .map(|b| State {
            board: b.code() as u16,
            known: None,
        })
        .collect();
    let sol = game::solve(&g, &roots);

    let losing_boards: Vec<Board> = boards
        .iter()
        .zip(&roots)
        .filter(|(_, r)| sol.rank_of(r).is_none())
        .map(|(b, _)| b.clone())
        .collect();
    let max_rank = roots
        .iter()
        .filter_map(|r| sol.rank_of(r))
        .max()
        .unwrap_or(0);

    let certificate = losing_boards
        .is_empty()
        .then(|| build_certificate(cfg, &arena, &g, &sol, &roots));

    Ok(ProofReport {
        mode,
        slot_count: t,
        board_count: boards.len(),
        colorable_boards,
        losing_boards,
        states_explored: sol.states.len(),
        max_rank,
        certificate,
    })
}

/// A certificate iff every canonical board is won in `mode`.
pub fn prove_reducible(cfg: &Configuration, mode: Mode) -> Result<Option<Certificate>> {
    Ok(analyze(cfg, mode)?.certificate)
}

fn state_ref(g: &BoardGame, s: &State) -> StateRef {
    StateRef {
        board: g.decode(s.board).to_string(),
        knowledge: s.known.map(|(pair, partners)| Knowledge {
            pair: ColorPair::from_index(pair as usize).name(),
            pairs: (0..g.t)
                .filter(|&i| (partners[i] as usize) > i)
                .map(|i| (i, partners[i] as usize))
                .collect(),
        }),
    }
}

fn build_certificate(
    cfg: &Configuration,
    arena: &Arena,
    g: &BoardGame,
    sol: &game::Solution<BoardGame>,
    roots: &[State],
) -> Certificate {
    let mut seen: HashSet<usize> = HashSet::new();
    let mut stack: Vec<usize> = roots.iter().map(|r| sol.index[r]).collect();
    let mut entries = Vec::new();
    while let Some(i) = stack.pop() {
        if !seen.insert(i) {
            continue;
        }
        let s = &sol.states[i];
        let rank = sol.rank[i].expect("strategy only reaches won states");
        let action = match &sol.choice[i] {
            None => {
                let coloring = g.colorings[s.board as usize]
                    .as_ref()
                    .and_then(|c| c.as_ref())
                    .expect("rank-0 states are colorable");
                Action::Color {
                    coloring: coloring.iter().map(|c| c.letter()).collect(),
                }
            }
            Some(((slot, pair), outs)) => {
                stack.extend(outs.iter().copied());
                let mut responses: Vec<StateRef> =
                    outs.iter().map(|&o| state_ref(g, &sol.states[o])).collect();
                responses.sort();
                Action::Swap {
                    slot: *slot,
                    pair: pair.name(),
                    responses,
                }
            }
        };
        let r = state_ref(g, s);
        entries.push(Entry {
            board: r.board,
            knowledge: r.knowledge,
            rank,
            action,
        });
    }
    entries.sort_by(|a, b| (&a.board, &a.knowledge).cmp(&(&b.board, &b.knowledge)));

    Certificate {
        format: CERTIFICATE_FORMAT.to_string(),
        config_hash: cfg.hash(),
        mode: g.mode,
        slot_count: g.t,
        edges: arena.graph().edges().to_vec(),
        boards: entries,
    }
}
