//! The three edge colors, small color sets, and partial edge colorings.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::graph::{EdgeId, Graph, Vertex};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Color {
    #[serde(rename = "x")]
    X = 0,
    #[serde(rename = "y")]
    Y = 1,
    #[serde(rename = "z")]
    Z = 2,
}

impl Color {
    pub const ALL: [Color; 3] = [Color::X, Color::Y, Color::Z];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn from_index(i: usize) -> Color {
        Color::ALL[i]
    }

    pub fn letter(self) -> char {
        ['x', 'y', 'z'][self.index()]
    }

    pub fn from_letter(c: char) -> Option<Color> {
        match c.to_ascii_lowercase() {
            'x' => Some(Color::X),
            'y' => Some(Color::Y),
            'z' => Some(Color::Z),
            _ => None,
        }
    }
}

impl fmt::Display for Color {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

/// A subset of {x, y, z} as a 3-bit mask.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct ColorSet(u8);

impl ColorSet {
    pub const EMPTY: ColorSet = ColorSet(0);
    pub const FULL: ColorSet = ColorSet(0b111);

    pub fn single(c: Color) -> Self {
        ColorSet(1 << c.index())
    }

    pub fn contains(self, c: Color) -> bool {
        self.0 & (1 << c.index()) != 0
    }

    pub fn insert(&mut self, c: Color) {
        self.0 |= 1 << c.index();
    }

    pub fn remove(&mut self, c: Color) {
        self.0 &= !(1 << c.index());
    }

    pub fn complement(self) -> Self {
        ColorSet(!self.0 & 0b111)
    }

    pub fn union(self, other: ColorSet) -> Self {
        ColorSet(self.0 | other.0)
    }

    pub fn intersection(self, other: ColorSet) -> Self {
        ColorSet(self.0 & other.0)
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn iter(self) -> impl Iterator<Item = Color> {
        Color::ALL.into_iter().filter(move |&c| self.contains(c))
    }

    pub fn bits(self) -> u8 {
        self.0
    }
}

impl FromIterator<Color> for ColorSet {
    fn from_iter<I: IntoIterator<Item = Color>>(iter: I) -> Self {
        let mut s = ColorSet::EMPTY;
        for c in iter {
            s.insert(c);
        }
        s
    }
}

/// An unordered pair of distinct colors, indexed (x,y)=0, (x,z)=1, (y,z)=2.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ColorPair(Color, Color);

impl ColorPair {
    pub const ALL: [ColorPair; 3] = [
        ColorPair(Color::X, Color::Y),
        ColorPair(Color::X, Color::Z),
        ColorPair(Color::Y, Color::Z),
    ];

    pub fn new(a: Color, b: Color) -> Option<Self> {
        match a.cmp(&b) {
            std::cmp::Ordering::Less => Some(ColorPair(a, b)),
            std::cmp::Ordering::Greater => Some(ColorPair(b, a)),
            std::cmp::Ordering::Equal => None,
        }
    }

    pub fn colors(self) -> (Color, Color) {
        (self.0, self.1)
    }

    pub fn index(self) -> usize {
        // x+y=1, x+z=2, y+z=3
        self.0.index() + self.1.index() - 1
    }

    pub fn from_index(i: usize) -> Self {
        ColorPair::ALL[i]
    }

    pub fn contains(self, c: Color) -> bool {
        self.0 == c || self.1 == c
    }

    /// The other color of the pair; `c` must belong to the pair.
    pub fn partner(self, c: Color) -> Color {
        if c == self.0 {
            self.1
        } else {
            debug_assert_eq!(c, self.1);
            self.0
        }
    }

    pub fn as_set(self) -> ColorSet {
        ColorSet::single(self.0).union(ColorSet::single(self.1))
    }

    /// Two-letter name such as `"xy"`.
    pub fn name(self) -> String {
        format!("{}{}", self.0, self.1)
    }

    pub fn from_name(s: &str) -> Option<Self> {
        let mut chars = s.chars();
        let a = Color::from_letter(chars.next()?)?;
        let b = Color::from_letter(chars.next()?)?;
        if chars.next().is_some() {
            return None;
        }
        ColorPair::new(a, b)
    }
}

impl fmt::Display for ColorPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.0, self.1)
    }
}

/// Edge id to color-or-uncolored map over a host graph's edges.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PartialEdgeColoring {
    colors: Vec<Option<Color>>,
}

impl PartialEdgeColoring {
    pub fn uncolored(g: &Graph) -> Self {
        PartialEdgeColoring {
            colors: vec![None; g.edge_count()],
        }
    }

    pub fn from_colors(colors: Vec<Option<Color>>) -> Self {
        PartialEdgeColoring { colors }
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    pub fn get(&self, e: EdgeId) -> Option<Color> {
        self.colors[e]
    }

    pub fn set(&mut self, e: EdgeId, c: Option<Color>) {
        self.colors[e] = c;
    }

    pub fn as_slice(&self) -> &[Option<Color>] {
        &self.colors
    }

    pub fn colored_count(&self) -> usize {
        self.colors.iter().filter(|c| c.is_some()).count()
    }

    pub fn is_total(&self) -> bool {
        self.colors.iter().all(Option::is_some)
    }

    /// Colors on colored edges at `v`.
    pub fn seen(&self, g: &Graph, v: Vertex) -> ColorSet {
        g.incident(v)
            .iter()
            .filter_map(|&e| self.colors[e])
            .collect()
    }

    /// True when the coloring matches `g`'s edge count and no two colored
    /// edges sharing an endpoint carry the same color.
    pub fn is_proper(&self, g: &Graph) -> bool {
        if self.colors.len() != g.edge_count() {
            return false;
        }
        g.vertices().all(|v| {
            let mut seen = ColorSet::EMPTY;
            for &e in g.incident(v) {
                if let Some(c) = self.colors[e] {
                    if seen.contains(c) {
                        return false;
                    }
                    seen.insert(c);
                }
            }
            true
        })
    }
}

/// Colors absent from the colored edges at `v`.
pub fn missing_colors(g: &Graph, c: &PartialEdgeColoring, v: Vertex) -> ColorSet {
    c.seen(g, v).complement()
}
