//! Certificate checking, written against the certificate's string encoding
//! and sharing no board, response or coloring logic with the prover.

use std::collections::{BTreeSet, HashMap};

use super::certificate::{Action, Certificate, Knowledge, Mode, StateRef, CERTIFICATE_FORMAT};
use super::config::Configuration;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyReport {
    pub valid: bool,
    pub diagnostic: Option<String>,
    /// Boards leading to the problem, starting from an initial board.
    pub path: Vec<String>,
}

impl VerifyReport {
    fn ok() -> Self {
        VerifyReport {
            valid: true,
            diagnostic: None,
            path: Vec::new(),
        }
    }

    fn fail(msg: impl Into<String>, path: Vec<String>) -> Self {
        VerifyReport {
            valid: false,
            diagnostic: Some(msg.into()),
            path,
        }
    }
}

type Key = (Vec<u8>, Option<(u8, Vec<(usize, usize)>)>);

/// Colors as 0, 1, 2 for x, y, z.
fn letters(s: &str, upper: bool) -> Option<Vec<u8>> {
    s.chars()
        .map(|c| match (c, upper) {
            ('X', true) | ('x', false) => Some(0),
            ('Y', true) | ('y', false) => Some(1),
            ('Z', true) | ('z', false) => Some(2),
            _ => None,
        })
        .collect()
}

fn board_text(b: &[u8]) -> String {
    b.iter().map(|&c| ['X', 'Y', 'Z'][c as usize]).collect()
}

/// Pair as a 3-bit mask.
fn pair_mask(s: &str) -> Option<u8> {
    let cs = letters(s, false)?;
    (cs.len() == 2 && cs[0] != cs[1]).then(|| (1 << cs[0]) | (1 << cs[1]))
}

fn in_mask(mask: u8, c: u8) -> bool {
    mask & (1 << c) != 0
}

fn other_in_pair(mask: u8, c: u8) -> u8 {
    (0..3).find(|&d| d != c && in_mask(mask, d)).unwrap()
}

/// First-appearance relabeling; returns the relabeled board and the map.
fn relabel(b: &[u8]) -> (Vec<u8>, [u8; 3]) {
    let mut map = [u8::MAX; 3];
    let mut next = 0;
    for &c in b {
        if map[c as usize] == u8::MAX {
            map[c as usize] = next;
            next += 1;
        }
    }
    for m in map.iter_mut() {
        if *m == u8::MAX {
            *m = next;
            next += 1;
        }
    }
    (b.iter().map(|&c| map[c as usize]).collect(), map)
}

fn map_mask(mask: u8, map: [u8; 3]) -> u8 {
    (0..3u8)
        .filter(|&c| in_mask(mask, c))
        .fold(0, |acc, c| acc | (1 << map[c as usize]))
}

/// Normal form of a knowledge pair on a relabeled board: on a board using a
/// single color, swapping the two unused colors is a symmetry, and `x,z` is
/// written as `x,y`.
fn normal_mask(board: &[u8], mask: u8) -> u8 {
    let single = board.iter().all(|&c| c == board[0]);
    if single && mask == 0b101 {
        0b011
    } else {
        mask
    }
}

fn knowledge_key(k: &Knowledge) -> Option<(u8, Vec<(usize, usize)>)> {
    let mask = pair_mask(&k.pair)?;
    let mut pairs: Vec<(usize, usize)> =
        k.pairs.iter().map(|&(a, b)| (a.min(b), a.max(b))).collect();
    pairs.sort_unstable();
    Some((mask, pairs))
}

fn state_key(s: &StateRef) -> Option<Key> {
    let board = letters(&s.board, true)?;
    let known = match &s.knowledge {
        None => None,
        Some(k) => Some(knowledge_key(k)?),
    };
    Some((board, known))
}

fn all_matchings(items: &[usize]) -> Vec<Vec<(usize, usize)>> {
    if items.is_empty() {
        return vec![Vec::new()];
    }
    let first = items[0];
    let rest = &items[1..];
    let mut out = all_matchings(rest);
    for (k, &other) in rest.iter().enumerate() {
        let mut remaining = rest.to_vec();
        remaining.remove(k);
        for mut m in all_matchings(&remaining) {
            m.push((first, other));
            m.sort_unstable();
            out.push(m);
        }
    }
    out
}

fn expected_responses(
    mode: Mode,
    board: &[u8],
    known: &Option<(u8, Vec<(usize, usize)>)>,
    slot: usize,
    mask: u8,
) -> BTreeSet<Key> {
    let eligible: Vec<usize> = (0..board.len())
        .filter(|&j| in_mask(mask, board[j]))
        .collect();
    let flip = |b: &[u8], ends: &[usize]| -> Vec<u8> {
        let mut out = b.to_vec();
        for &e in ends {
            out[e] = other_in_pair(mask, out[e]);
        }
        out
    };
    let mut out = BTreeSet::new();
    let forced = matches!(known, Some((m, _)) if *m == mask) && mode == Mode::Stateful;
    let pairings: Vec<Vec<(usize, usize)>> = if forced {
        vec![known.as_ref().unwrap().1.clone()]
    } else if mode == Mode::Stateful {
        all_matchings(&eligible)
    } else {
        // basic mode: only the far end matters
        let mut v = vec![Vec::new()];
        for &j in &eligible {
            if j != slot {
                v.push(vec![(slot.min(j), slot.max(j))]);
            }
        }
        v
    };
    for m in pairings {
        let mate = m.iter().find_map(|&(a, b)| {
            if a == slot {
                Some(b)
            } else if b == slot {
                Some(a)
            } else {
                None
            }
        });
        let ends: Vec<usize> = std::iter::once(slot).chain(mate).collect();
        let (canon, map) = relabel(&flip(board, &ends));
        let known = (mode == Mode::Stateful).then(|| {
            let mapped = normal_mask(&canon, map_mask(mask, map));
            (mapped, m.clone())
        });
        out.insert((canon, known));
    }
    out
}

fn coloring_ok(
    edges: &[(usize, usize)],
    n: usize,
    slots: &[usize],
    board: &[u8],
    coloring: &str,
) -> Result<(), String> {
    let cs = letters(coloring, false).ok_or("coloring has a letter other than x, y, z")?;
    if cs.len() != edges.len() {
        return Err(format!(
            "coloring has {} letters for {} edges",
            cs.len(),
            edges.len()
        ));
    }
    let mut seen = vec![0u8; n];
    for (i, &(a, b)) in edges.iter().enumerate() {
        let bit = 1 << cs[i];
        for v in [a, b] {
            if seen[v] & bit != 0 {
                return Err(format!(
                    "color {} repeats at vertex {v}",
                    coloring.as_bytes()[i] as char
                ));
            }
            seen[v] |= bit;
        }
    }
    for (i, &v) in slots.iter().enumerate() {
        if seen[v] & (1 << board[i]) != 0 {
            return Err(format!(
                "slot {i} already sees the color used inside at vertex {v}"
            ));
        }
    }
    Ok(())
}

/// Checks coverage, colorings, responses and acyclicity.
pub fn verify_certificate(cfg: &Configuration, cert: &Certificate) -> VerifyReport {
    let resolved = match cfg.resolve() {
        Ok(r) => r,
        Err(e) => return VerifyReport::fail(format!("configuration: {e}"), Vec::new()),
    };
    let t = resolved.slots.len();
    if cert.format != CERTIFICATE_FORMAT {
        return VerifyReport::fail(format!("unknown format `{}`", cert.format), Vec::new());
    }
    if cert.config_hash != cfg.hash() {
        return VerifyReport::fail(
            "certificate belongs to a different configuration",
            Vec::new(),
        );
    }
    if cert.slot_count != t {
        return VerifyReport::fail(
            format!("slot count {} but configuration has {t}", cert.slot_count),
            Vec::new(),
        );
    }
    if cert.edges != resolved.graph.edges() {
        return VerifyReport::fail("edge list does not match the configuration", Vec::new());
    }
    if t == 0 || t > 12 {
        return VerifyReport::fail(format!("unsupported slot count {t}"), Vec::new());
    }

    let mut table: HashMap<Key, usize> = HashMap::new();
    for (i, e) in cert.boards.iter().enumerate() {
        let sref = StateRef {
            board: e.board.clone(),
            knowledge: e.knowledge.clone(),
        };
        let Some(key) = state_key(&sref) else {
            return VerifyReport::fail(format!("entry {i} is malformed"), vec![e.board.clone()]);
        };
        let (board, known) = &key;
        if board.len() != t || relabel(board).0 != *board {
            return VerifyReport::fail(
                format!("board {} is not canonical", e.board),
                vec![e.board.clone()],
            );
        }
        if let Some((mask, pairs)) = known {
            if cert.mode == Mode::Basic {
                return VerifyReport::fail(
                    "basic certificates carry no pairing knowledge",
                    vec![e.board.clone()],
                );
            }
            if normal_mask(board, *mask) != *mask {
                return VerifyReport::fail(
                    format!("knowledge on {} is not in normal form", e.board),
                    vec![e.board.clone()],
                );
            }
            let mut used = vec![false; t];
            for &(a, b) in pairs {
                if a == b || a >= t || b >= t || used[a] || used[b] {
                    return VerifyReport::fail(
                        format!("knowledge on {} is not a matching", e.board),
                        vec![e.board.clone()],
                    );
                }
                if !in_mask(*mask, board[a]) || !in_mask(*mask, board[b]) {
                    return VerifyReport::fail(
                        format!("knowledge on {} pairs an ineligible slot", e.board),
                        vec![e.board.clone()],
                    );
                }
                used[a] = true;
                used[b] = true;
            }
        }
        if table.insert(key, i).is_some() {
            return VerifyReport::fail(
                format!("board {} appears twice", e.board),
                vec![e.board.clone()],
            );
        }
    }

    // every raw board must reach an entry without knowledge
    for code in 0..3usize.pow(t as u32) {
        let raw: Vec<u8> = (0..t)
            .map(|i| ((code / 3usize.pow(i as u32)) % 3) as u8)
            .collect();
        let canon = relabel(&raw).0;
        if !table.contains_key(&(canon.clone(), None)) {
            return VerifyReport::fail(
                format!("board {} is not covered", board_text(&canon)),
                vec![board_text(&canon)],
            );
        }
    }

    let n = resolved.graph.vertex_count();
    let mut successors: Vec<Vec<usize>> = vec![Vec::new(); cert.boards.len()];
    for (i, e) in cert.boards.iter().enumerate() {
        let board = letters(&e.board, true).unwrap();
        match &e.action {
            Action::Color { coloring } => {
                if let Err(msg) =
                    coloring_ok(cert.edges.as_slice(), n, &resolved.slots, &board, coloring)
                {
                    return VerifyReport::fail(
                        format!("board {}: {msg}", e.board),
                        vec![e.board.clone()],
                    );
                }
            }
            Action::Swap {
                slot,
                pair,
                responses,
            } => {
                let Some(mask) = pair_mask(pair) else {
                    return VerifyReport::fail(
                        format!("board {}: bad pair `{pair}`", e.board),
                        vec![e.board.clone()],
                    );
                };
                if *slot >= t || !in_mask(mask, board[*slot]) {
                    return VerifyReport::fail(
                        format!("board {}: vacuous swap at slot {slot}", e.board),
                        vec![e.board.clone()],
                    );
                }
                let known = e.knowledge.as_ref().and_then(knowledge_key);
                let expected = expected_responses(cert.mode, &board, &known, *slot, mask);
                let mut listed = BTreeSet::new();
                for r in responses {
                    match state_key(r) {
                        Some(k) => {
                            listed.insert(k);
                        }
                        None => {
                            return VerifyReport::fail(
                                format!("board {}: malformed response", e.board),
                                vec![e.board.clone()],
                            );
                        }
                    }
                }
                if listed != expected {
                    return VerifyReport::fail(
                        format!(
                            "board {}: responses do not match the adversary's options",
                            e.board
                        ),
                        vec![e.board.clone()],
                    );
                }
                for k in &expected {
                    match table.get(k) {
                        Some(&j) => successors[i].push(j),
                        None => {
                            return VerifyReport::fail(
                                format!(
                                    "board {}: response {} has no entry",
                                    e.board,
                                    board_text(&k.0)
                                ),
                                vec![e.board.clone(), board_text(&k.0)],
                            );
                        }
                    }
                }
            }
        }
    }

    // iterative depth-first search for a cycle in the strategy graph
    let mut state = vec![0u8; cert.boards.len()];
    for root in 0..cert.boards.len() {
        if state[root] != 0 {
            continue;
        }
        let mut stack: Vec<(usize, usize)> = vec![(root, 0)];
        state[root] = 1;
        while let Some(top) = stack.len().checked_sub(1) {
            let (v, next) = stack[top];
            if next < successors[v].len() {
                let w = successors[v][next];
                stack[top].1 += 1;
                match state[w] {
                    0 => {
                        state[w] = 1;
                        stack.push((w, 0));
                    }
                    1 => {
                        let mut path: Vec<String> = stack
                            .iter()
                            .map(|&(u, _)| cert.boards[u].board.clone())
                            .collect();
                        path.push(cert.boards[w].board.clone());
                        return VerifyReport::fail(
                            format!("strategy cycles back to board {}", cert.boards[w].board),
                            path,
                        );
                    }
                    _ => {}
                }
            } else {
                state[v] = 2;
                stack.pop();
            }
        }
    }
    VerifyReport::ok()
}
