//! Least-fixpoint solver for one-player-versus-adversary reachability games.
//!
//! A state is won at rank 0 when it is terminal. A move leads to a chance
//! node whose outcomes the adversary picks; a chance node is ready at rank
//! `k` once all of its outcomes are won below `k`, and a state is won at the
//! smallest rank of any ready move. Ranks are computed layer by layer with
//! per-chance-node counters, so each outcome edge is touched once.

use std::collections::HashMap;
use std::hash::Hash;

use rayon::prelude::*;

pub trait Game: Sync {
    type State: Clone + Eq + Hash + Ord + Send + Sync;
    type Move: Clone + Send + Sync;
    /// Identifies a chance node; equal keys must have equal outcome sets.
    type Chance: Clone + Eq + Hash + Send + Sync;

    fn is_terminal(&self, s: &Self::State) -> bool;
    /// Moves in preference order.
    fn moves(&self, s: &Self::State) -> Vec<(Self::Move, Self::Chance)>;
    /// Distinct outcomes of a chance node, in a deterministic order.
    fn outcomes(&self, c: &Self::Chance) -> Vec<Self::State>;
}

/// Whether a state is terminal, and its moves otherwise.
type Expansion<G> = (bool, Vec<(<G as Game>::Move, <G as Game>::Chance)>);

pub struct Solution<G: Game> {
    pub states: Vec<G::State>,
    pub index: HashMap<G::State, usize>,
    /// `Some(rank)` for won states.
    pub rank: Vec<Option<usize>>,
    /// Chosen move and its outcome state ids for won non-terminal states.
    pub choice: Vec<Option<(G::Move, Vec<usize>)>>,
}

impl<G: Game> Solution<G> {
    pub fn rank_of(&self, s: &G::State) -> Option<usize> {
        self.index.get(s).and_then(|&i| self.rank[i])
    }
}

/// Explores every state reachable from `roots` and solves the game on them.
pub fn solve<G: Game>(game: &G, roots: &[G::State]) -> Solution<G> {
    let mut states: Vec<G::State> = Vec::new();
    let mut index: HashMap<G::State, usize> = HashMap::new();
    let mut terminal: Vec<bool> = Vec::new();
    let mut moves_of: Vec<Vec<(G::Move, usize)>> = Vec::new();
    let mut chance_index: HashMap<G::Chance, usize> = HashMap::new();
    let mut chance_outcomes: Vec<Vec<usize>> = Vec::new();

    let mut frontier: Vec<usize> = Vec::new();
    for r in roots {
        intern(r, &mut states, &mut index, &mut frontier);
    }

    // breadth-first expansion, with the expensive per-state work in parallel
    while !frontier.is_empty() {
        let expanded: Vec<Expansion<G>> = frontier
            .par_iter()
            .map(|&i| {
                let s = &states[i];
                if game.is_terminal(s) {
                    (true, Vec::new())
                } else {
                    (false, game.moves(s))
                }
            })
            .collect();
        terminal.resize(states.len(), false);
        moves_of.resize_with(states.len(), Vec::new);

        let mut fresh_chances: Vec<(usize, G::Chance)> = Vec::new();
        for (&i, (is_term, moves)) in frontier.iter().zip(expanded) {
            terminal[i] = is_term;
            for (m, c) in moves {
                let next = chance_index.len();
                let id = *chance_index.entry(c.clone()).or_insert_with(|| {
                    fresh_chances.push((next, c));
                    next
                });
                moves_of[i].push((m, id));
            }
        }
        let outcomes: Vec<Vec<G::State>> = fresh_chances
            .par_iter()
            .map(|(_, c)| game.outcomes(c))
            .collect();

        let mut next_frontier = Vec::new();
        for outs in outcomes {
            let ids = outs
                .iter()
                .map(|s| intern(s, &mut states, &mut index, &mut next_frontier))
                .collect();
            chance_outcomes.push(ids);
        }
        frontier = next_frontier;
    }
    terminal.resize(states.len(), false);
    moves_of.resize_with(states.len(), Vec::new);

    let n = states.len();
    let mut remaining: Vec<usize> = chance_outcomes.iter().map(Vec::len).collect();
    let mut ready_rank: Vec<Option<usize>> = vec![None; chance_outcomes.len()];
    let mut feeds: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (c, outs) in chance_outcomes.iter().enumerate() {
        for &s in outs {
            feeds[s].push(c);
        }
    }
    let mut parents: Vec<Vec<usize>> = vec![Vec::new(); chance_outcomes.len()];
    for (s, moves) in moves_of.iter().enumerate() {
        for &(_, c) in moves {
            parents[c].push(s);
        }
    }

    let mut rank: Vec<Option<usize>> = vec![None; n];
    let mut layer: Vec<usize> = (0..n).filter(|&s| terminal[s]).collect();
    for &s in &layer {
        rank[s] = Some(0);
    }
    // chance nodes with no outcomes are vacuously ready
    let mut pending: Vec<usize> = (0..remaining.len())
        .filter(|&c| remaining[c] == 0)
        .collect();
    let mut k = 0;
    loop {
        for &s in &layer {
            for &c in &feeds[s] {
                remaining[c] -= 1;
                if remaining[c] == 0 {
                    pending.push(c);
                }
            }
        }
        k += 1;
        let mut next_layer = Vec::new();
        for c in pending.drain(..) {
            ready_rank[c] = Some(k);
            for &p in &parents[c] {
                if rank[p].is_none() {
                    rank[p] = Some(k);
                    next_layer.push(p);
                }
            }
        }
        if next_layer.is_empty() {
            break;
        }
        layer = next_layer;
    }

    let choice = (0..n)
        .map(|s| {
            let r = rank[s]?;
            if terminal[s] {
                return None;
            }
            moves_of[s]
                .iter()
                .find(|&&(_, c)| ready_rank[c].is_some_and(|cr| cr <= r))
                .map(|(m, c)| (m.clone(), chance_outcomes[*c].clone()))
        })
        .collect();

    Solution {
        states,
        index,
        rank,
        choice,
    }
}

fn intern<S: Clone + Eq + Hash>(
    s: &S,
    states: &mut Vec<S>,
    index: &mut HashMap<S, usize>,
    frontier: &mut Vec<usize>,
) -> usize {
    if let Some(&i) = index.get(s) {
        return i;
    }
    let i = states.len();
    states.push(s.clone());
    index.insert(s.clone(), i);
    frontier.push(i);
    i
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Counting down to zero: from n you may subtract 1 or 2, and the
    /// adversary may undo one step when you subtract 2.
    struct Countdown;

    impl Game for Countdown {
        type State = u32;
        type Move = u32;
        type Chance = (u32, u32);

        fn is_terminal(&self, s: &u32) -> bool {
            *s == 0
        }

        fn moves(&self, s: &u32) -> Vec<(u32, (u32, u32))> {
            [2, 1]
                .into_iter()
                .filter(|&d| d <= *s)
                .map(|d| (d, (*s, d)))
                .collect()
        }

        fn outcomes(&self, &(s, d): &(u32, u32)) -> Vec<u32> {
            if d == 2 {
                vec![s - 2, s - 1]
            } else {
                vec![s - 1]
            }
        }
    }

    #[test]
    fn ranks_are_shortest_forced_distances() {
        let sol = solve(&Countdown, &[4]);
        for v in 0..=4u32 {
            assert_eq!(sol.rank_of(&v), Some(v as usize));
        }
        let four = sol.index[&4];
        let (m, _) = sol.choice[four].clone().unwrap();
        // subtracting two is tried first and is as fast as subtracting one
        assert_eq!(m, 2);
    }

    /// A cycle with no terminal state is never won.
    struct Loop;

    impl Game for Loop {
        type State = u8;
        type Move = ();
        type Chance = u8;

        fn is_terminal(&self, _: &u8) -> bool {
            false
        }

        fn moves(&self, s: &u8) -> Vec<((), u8)> {
            vec![((), (*s + 1) % 3)]
        }

        fn outcomes(&self, c: &u8) -> Vec<u8> {
            vec![*c]
        }
    }

    #[test]
    fn cycles_without_exit_lose() {
        let sol = solve(&Loop, &[0]);
        assert_eq!(sol.states.len(), 3);
        assert!(sol.rank.iter().all(Option::is_none));
    }
}
