//! Independent brute-force recomputations of derived values.

use std::collections::BTreeSet;

use kempe_core::coloring::{chromatic_index, is_3_critical, oracle_chromatic_index};
use kempe_core::discharge::{ratio, solve_parameters, Charge};
use kempe_core::fixability::{
    analyze, board_count, canonicalize, enumerate_boards, Board, Configuration, Mode,
};
use kempe_core::generators::enumerate_subcubic;
use kempe_core::library::pattern;
use kempe_core::{Color, Graph};

/// Raw boards as digit vectors, first slot first.
fn raw_boards(t: usize) -> Vec<Vec<u8>> {
    (0..3usize.pow(t as u32))
        .map(|mut code| {
            (0..t)
                .map(|_| {
                    let d = (code % 3) as u8;
                    code /= 3;
                    d
                })
                .collect()
        })
        .collect()
}

fn letters(b: &[u8]) -> String {
    b.iter().map(|&d| (b'X' + d) as char).collect()
}

fn relabel_min(b: &[u8]) -> String {
    const PERMS: [[u8; 3]; 6] = [
        [0, 1, 2],
        [0, 2, 1],
        [1, 0, 2],
        [1, 2, 0],
        [2, 0, 1],
        [2, 1, 0],
    ];
    PERMS
        .iter()
        .map(|p| letters(&b.iter().map(|&d| p[d as usize]).collect::<Vec<_>>()))
        .min()
        .unwrap()
}

/// Whether some assignment of colors to the configuration's edges is proper
/// and avoids, at each slot vertex, the color its slot sees.
fn brute_colorable(cfg: &Configuration, board: &[u8]) -> bool {
    let r = cfg.resolve().unwrap();
    let edges = r.graph.edges().to_vec();
    let m = edges.len();
    'outer: for code in 0..3usize.pow(m as u32) {
        let mut c = code;
        let colors: Vec<u8> = (0..m)
            .map(|_| {
                let d = (c % 3) as u8;
                c /= 3;
                d
            })
            .collect();
        for i in 0..m {
            for j in i + 1..m {
                let (a, b) = edges[i];
                let (x, y) = edges[j];
                if colors[i] == colors[j] && (a == x || a == y || b == x || b == y) {
                    continue 'outer;
                }
            }
        }
        for (slot, &v) in r.slots.iter().enumerate() {
            for (i, &(a, b)) in edges.iter().enumerate() {
                if (a == v || b == v) && colors[i] == board[slot] {
                    continue 'outer;
                }
            }
        }
        return true;
    }
    false
}

/// Raw boards with no winning strategy when the adversary answers a swap
/// at slot `i` with pair `p` by toggling `i` alone or `i` together with any
/// other slot seeing exactly one color of `p`.
fn brute_losing(cfg: &Configuration) -> BTreeSet<String> {
    let t = cfg.resolve().unwrap().slots.len();
    let boards = raw_boards(t);
    let index = |b: &[u8]| b.iter().rev().fold(0usize, |acc, &d| acc * 3 + d as usize);
    let mut won: Vec<bool> = boards.iter().map(|b| brute_colorable(cfg, b)).collect();
    let pairs = [(0u8, 1u8), (0, 2), (1, 2)];
    let toggle = |d: u8, (p, q): (u8, u8)| if d == p { q } else { p };
    loop {
        let mut changed = false;
        for (k, b) in boards.iter().enumerate() {
            if won[k] {
                continue;
            }
            let wins = (0..t).any(|i| {
                pairs.iter().any(|&(p, q)| {
                    if b[i] != p && b[i] != q {
                        return false;
                    }
                    let mut alone = b.clone();
                    alone[i] = toggle(b[i], (p, q));
                    if !won[index(&alone)] {
                        return false;
                    }
                    (0..t)
                        .filter(|&j| j != i && (b[j] == p || b[j] == q))
                        .all(|j| {
                            let mut both = alone.clone();
                            both[j] = toggle(b[j], (p, q));
                            won[index(&both)]
                        })
                })
            });
            if wins {
                won[k] = true;
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    boards
        .iter()
        .zip(&won)
        .filter(|(_, &w)| !w)
        .map(|(b, _)| relabel_min(b))
        .collect()
}

fn check_against_prover(cfg: &Configuration) {
    let report = analyze(cfg, Mode::Basic).unwrap();
    let losing: BTreeSet<String> = report
        .losing_boards
        .iter()
        .map(ToString::to_string)
        .collect();
    assert_eq!(losing, brute_losing(cfg));
    let t = report.slot_count;
    let colorable: BTreeSet<String> = raw_boards(t)
        .iter()
        .filter(|b| brute_colorable(cfg, b))
        .map(|b| relabel_min(b))
        .collect();
    assert_eq!(report.colorable_boards, colorable.len());
    assert_eq!(report.certificate.is_some(), losing.is_empty());
}

#[test]
fn basic_game_matches_brute_force_on_bundled_patterns() {
    for name in [
        "adjacent-2-vertices",
        "fig2b",
        "fig2c",
        "fig6-half",
        "fig5",
        "fig8a",
        "fig8c",
    ] {
        check_against_prover(&pattern(name).unwrap().unwrap());
    }
}

#[test]
fn claw_of_two_vertices_is_fixable() {
    let cfg = Configuration::parse("0: 1 2 3\n1: 0\n2: 0\n3: 0\nboundary: 1/0 2/0 3/0\n").unwrap();
    check_against_prover(&cfg);
    assert_eq!(brute_losing(&cfg), BTreeSet::new());
    assert!(!brute_colorable(&cfg, &[0, 0, 0]));
}

#[test]
fn four_cycle_with_one_slot_per_vertex_has_a_losing_board() {
    let cfg = Configuration::parse("0: 1 3\n1: 0 2\n2: 1 3\n3: 0 2\nboundary: 0/0 1/0 2/0 3/0\n")
        .unwrap();
    check_against_prover(&cfg);
    assert!(brute_losing(&cfg).contains("XYXY"));
    let report = analyze(&cfg, Mode::Basic).unwrap();
    assert!(report.certificate.is_none());
}

#[test]
fn board_orbits_by_brute_force() {
    for t in 1..=8 {
        let orbits: BTreeSet<String> = raw_boards(t).iter().map(|b| relabel_min(b)).collect();
        assert_eq!(orbits.len(), board_count(t), "t={t}");
        assert_eq!(enumerate_boards(t).unwrap().len(), orbits.len());
        let all: BTreeSet<String> = enumerate_boards(t)
            .unwrap()
            .iter()
            .map(ToString::to_string)
            .collect();
        assert_eq!(all, orbits);
    }
    // under the swap of the two non-first colors only, after fixing the first
    let swap_orbits: BTreeSet<String> = raw_boards(6)
        .iter()
        .map(|b| {
            let swapped: Vec<u8> = b.iter().map(|&d| [0, 2, 1][d as usize]).collect();
            letters(b).min(letters(&swapped))
        })
        .collect();
    assert_eq!(swap_orbits.len(), 365);
    assert_eq!(
        swap_orbits.iter().filter(|s| s.starts_with('X')).count(),
        122
    );
}

#[test]
fn raw_board_canonicalization_agrees() {
    for b in raw_boards(5) {
        let board = Board::new(b.iter().map(|&d| Color::ALL[d as usize]).collect());
        assert_eq!(canonicalize(&board).0.to_string(), relabel_min(&b));
    }
}

/// Connected graphs on `n` labeled vertices with maximum degree at most 3,
/// up to isomorphism, by minimizing edge bitmasks over all relabelings.
fn brute_connected_subcubic(n: usize) -> usize {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
        .collect();
    let perms = permutations(n);
    let mut seen = BTreeSet::new();
    for mask in 0u32..(1 << pairs.len()) {
        let edges: Vec<(usize, usize)> = (0..pairs.len())
            .filter(|&i| mask >> i & 1 == 1)
            .map(|i| pairs[i])
            .collect();
        let mut deg = vec![0; n];
        for &(a, b) in &edges {
            deg[a] += 1;
            deg[b] += 1;
        }
        if deg.iter().any(|&d| d > 3) || !connected(n, &edges) {
            continue;
        }
        let key = perms
            .iter()
            .map(|p| {
                let mut e: Vec<(usize, usize)> = edges
                    .iter()
                    .map(|&(a, b)| (p[a].min(p[b]), p[a].max(p[b])))
                    .collect();
                e.sort_unstable();
                e
            })
            .min()
            .unwrap();
        seen.insert(key);
    }
    seen.len()
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..n {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

fn connected(n: usize, edges: &[(usize, usize)]) -> bool {
    let mut seen = vec![false; n];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(v) = stack.pop() {
        for &(a, b) in edges {
            let w = if a == v {
                b
            } else if b == v {
                a
            } else {
                continue;
            };
            if !seen[w] {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    seen.iter().all(|&s| s)
}

#[test]
fn connected_subcubic_counts_by_brute_force() {
    for n in 1..=6 {
        assert_eq!(
            enumerate_subcubic(n).unwrap().len(),
            brute_connected_subcubic(n),
            "n={n}"
        );
    }
}

#[test]
fn frozen_connected_subcubic_counts() {
    let expected = [1, 1, 2, 6, 10, 29, 64, 194];
    for (n, &count) in (1..=8).zip(&expected) {
        assert_eq!(enumerate_subcubic(n).unwrap().len(), count, "n={n}");
    }
}

fn naive_critical(g: &Graph) -> bool {
    if oracle_chromatic_index(g).unwrap() != 4 {
        return false;
    }
    g.edges().iter().all(|&(a, b)| {
        let e = g.find_edge(a, b).unwrap();
        oracle_chromatic_index(&g.without_edge(e)).unwrap() == 3
    })
}

#[test]
fn criticality_matches_naive_check() {
    let mut critical = 0;
    for n in 1..=7 {
        for g in enumerate_subcubic(n).unwrap() {
            if g.max_degree() != 3 {
                continue;
            }
            let fast = is_3_critical(&g).unwrap().critical;
            assert_eq!(fast, naive_critical(&g), "{}", g.emit());
            assert_eq!(
                chromatic_index(&g).unwrap().chromatic_index,
                oracle_chromatic_index(&g).unwrap()
            );
            critical += usize::from(fast);
        }
    }
    assert_eq!(critical, 5);
}

/// Solves `2 + a = 3 - a/2 + 2b` and `2 + a = 3 - s b` by Cramer's rule.
fn cramer(s: i64) -> (Charge, Charge) {
    // a + a/2 - 2b = 1 and a + s b = 1
    let (a11, a12, b1) = (ratio(3, 2), ratio(-2, 1), ratio(1, 1));
    let (a21, a22, b2) = (ratio(1, 1), ratio(s, 1), ratio(1, 1));
    let det = &a11 * &a22 - &a12 * &a21;
    let a = (&b1 * &a22 - &a12 * &b2) / &det;
    let b = (&a11 * &b2 - &b1 * &a21) / &det;
    (a, b)
}

#[test]
fn parameter_solver_matches_cramer() {
    for s in 0..=20u32 {
        assert_eq!(solve_parameters(s), cramer(s as i64), "S={s}");
    }
    assert_eq!(solve_parameters(0), (ratio(1, 1), ratio(1, 4)));
}
