//! Boards: the colors seen at a configuration's boundary slots, up to
//! renaming colors.
//!
//! Entry `X` at a slot means the slot's vertex sees `x` on its precolored
//! edge, so its uncolored edges must use `{y, z}`.

use std::fmt;

use crate::color::{Color, ColorPair};
use crate::error::{Error, Result};

pub const MAX_SLOTS: usize = 8;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Board(Vec<Color>);

impl Board {
    pub fn new(seen: Vec<Color>) -> Self {
        Board(seen)
    }

    pub fn seen(&self) -> &[Color] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn get(&self, slot: usize) -> Color {
        self.0[slot]
    }

    /// Accepts `XYZ`, `(X,Y,Z)` and `X Y Z`, any case.
    pub fn parse(text: &str) -> Result<Board> {
        let mut seen = Vec::new();
        for ch in text.chars() {
            if matches!(ch, '(' | ')' | ',' | ' ') {
                continue;
            }
            let c = Color::from_letter(ch)
                .ok_or_else(|| Error::validation(format!("bad board letter `{ch}` in `{text}`")))?;
            seen.push(c);
        }
        Ok(Board(seen))
    }

    /// Index of the board among all `3^t` tuples, first slot least significant.
    pub fn code(&self) -> usize {
        self.0.iter().rev().fold(0, |acc, c| acc * 3 + c.index())
    }

    pub fn from_code(mut code: usize, t: usize) -> Board {
        let mut seen = Vec::with_capacity(t);
        for _ in 0..t {
            seen.push(Color::from_index(code % 3));
            code /= 3;
        }
        Board(seen)
    }

    pub fn is_canonical(&self) -> bool {
        canonicalize(self).0 == *self
    }

    /// Applies a color renaming to every slot.
    pub fn permuted(&self, perm: &ColorPermutation) -> Board {
        Board(self.0.iter().map(|&c| perm.apply(c)).collect())
    }

    /// Flips the seen color of `slot` within `pair`; the slot must see a color of the pair.
    pub fn toggled(&self, slot: usize, pair: ColorPair) -> Board {
        let mut seen = self.0.clone();
        seen[slot] = pair.partner(seen[slot]);
        Board(seen)
    }
}

impl fmt::Display for Board {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.0 {
            write!(f, "{}", c.letter().to_ascii_uppercase())?;
        }
        Ok(())
    }
}

/// A bijection on {x, y, z}; `map[c]` is the image of `c`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ColorPermutation([Color; 3]);

impl ColorPermutation {
    pub const IDENTITY: ColorPermutation = ColorPermutation(Color::ALL);

    pub fn all() -> [ColorPermutation; 6] {
        use Color::{X, Y, Z};
        [
            ColorPermutation([X, Y, Z]),
            ColorPermutation([X, Z, Y]),
            ColorPermutation([Y, X, Z]),
            ColorPermutation([Y, Z, X]),
            ColorPermutation([Z, X, Y]),
            ColorPermutation([Z, Y, X]),
        ]
    }

    pub fn apply(&self, c: Color) -> Color {
        self.0[c.index()]
    }

    pub fn apply_pair(&self, p: ColorPair) -> ColorPair {
        let (a, b) = p.colors();
        ColorPair::new(self.apply(a), self.apply(b)).expect("bijection keeps colors distinct")
    }

    pub fn inverse(&self) -> ColorPermutation {
        let mut inv = Color::ALL;
        for c in Color::ALL {
            inv[self.apply(c).index()] = c;
        }
        ColorPermutation(inv)
    }
}

/// Renames colors in order of first appearance, so the first slot becomes
/// `X` and the first slot differing from it becomes `Y`. Returns the
/// canonical board and the renaming applied.
pub fn canonicalize(b: &Board) -> (Board, ColorPermutation) {
    let mut image: [Option<Color>; 3] = [None; 3];
    let mut next = 0;
    for &c in b.seen() {
        if image[c.index()].is_none() {
            image[c.index()] = Some(Color::from_index(next));
            next += 1;
        }
    }
    for slot in image.iter_mut() {
        if slot.is_none() {
            *slot = Some(Color::from_index(next));
            next += 1;
        }
    }
    let perm = ColorPermutation(image.map(|c| c.unwrap()));
    (b.permuted(&perm), perm)
}

/// Every renaming that sends `b` to its canonical form.
pub fn canonicalizing_permutations(b: &Board) -> Vec<ColorPermutation> {
    let (canon, _) = canonicalize(b);
    ColorPermutation::all()
        .into_iter()
        .filter(|p| b.permuted(p) == canon)
        .collect()
}

/// All canonical boards on `t` slots in lexicographic order.
pub fn enumerate_boards(t: usize) -> Result<Vec<Board>> {
    if !(1..=MAX_SLOTS).contains(&t) {
        return Err(Error::Size(format!(
            "slot count must be in 1..={MAX_SLOTS}, got {t}"
        )));
    }
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(t);
    grow(t, 0, &mut current, &mut out);
    Ok(out)
}

fn grow(t: usize, used: usize, current: &mut Vec<Color>, out: &mut Vec<Board>) {
    if current.len() == t {
        out.push(Board(current.clone()));
        return;
    }
    for i in 0..(used + 1).min(3) {
        current.push(Color::from_index(i));
        grow(t, used.max(i + 1), current, out);
        current.pop();
    }
}

/// `(3^(t-1) + 1) / 2`, the number of canonical boards on `t >= 1` slots.
pub fn board_count(t: usize) -> usize {
    3usize.pow(t as u32 - 1).div_ceil(2)
}
