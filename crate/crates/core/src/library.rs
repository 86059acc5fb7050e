//! Bundled configurations.
//!
//! Each entry is a configuration in the text format read by
//! [`Configuration::parse`]. Interior vertices carry one boundary slot per
//! missing edge, so slots also fix each vertex's degree in the host.

use crate::error::Result;
use crate::fixability::Configuration;
use crate::graph::Vertex;

/// Name and source text of every bundled configuration.
pub const PATTERNS: &[(&str, &str)] = &[
    (
        "adjacent-2-vertices",
        include_str!("../patterns/adjacent-2-vertices.txt"),
    ),
    ("fig2a", include_str!("../patterns/fig2a.txt")),
    ("fig2b", include_str!("../patterns/fig2b.txt")),
    ("fig2c", include_str!("../patterns/fig2c.txt")),
    ("fig3", include_str!("../patterns/fig3.txt")),
    ("fig4", include_str!("../patterns/fig4.txt")),
    ("fig5", include_str!("../patterns/fig5.txt")),
    ("fig6-half", include_str!("../patterns/fig6-half.txt")),
    ("fig8a", include_str!("../patterns/fig8a.txt")),
    ("fig8b", include_str!("../patterns/fig8b.txt")),
    ("fig8c", include_str!("../patterns/fig8c.txt")),
    ("fig8d", include_str!("../patterns/fig8d.txt")),
    ("fig8e", include_str!("../patterns/fig8e.txt")),
    ("fig8f", include_str!("../patterns/fig8f.txt")),
    ("fig8g", include_str!("../patterns/fig8g.txt")),
    ("fig8h", include_str!("../patterns/fig8h.txt")),
    ("fig8i", include_str!("../patterns/fig8i.txt")),
    ("triangle", include_str!("../patterns/triangle.txt")),
];

/// Vertex merges of `fig4` that keep it simple and degree-consistent: each
/// pendant 2-vertex of one half may coincide with one of the other half.
pub const FIG4_IDENTIFICATIONS: &[&[(Vertex, Vertex)]] = &[
    &[(5, 13)],
    &[(5, 14)],
    &[(6, 13)],
    &[(6, 14)],
    &[(5, 13), (6, 14)],
    &[(5, 14), (6, 13)],
];

pub fn names() -> impl Iterator<Item = &'static str> {
    PATTERNS.iter().map(|(n, _)| *n)
}

pub fn source(name: &str) -> Option<&'static str> {
    PATTERNS.iter().find(|(n, _)| *n == name).map(|(_, t)| *t)
}

/// Parses the bundled configuration called `name`, or `None` if unknown.
pub fn pattern(name: &str) -> Option<Result<Configuration>> {
    source(name).map(Configuration::parse)
}
