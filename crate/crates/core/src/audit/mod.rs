//! Scanners for substructures that cannot occur in a critical subcubic
//! graph, plus the decomposition and typing used by discharging.

mod basic;
mod embed;
mod h;

pub use basic::{audit_basic, triangles, Violation};
pub use embed::{find_embeddings, find_pattern, Embedding};
pub use h::{
    classify_rich, decompose_h, double_attachments, flag_rich, is_h_vertex, is_rich, ComponentFlag,
    DoubleAttachment, HDecomposition, RichFlag, RichVertexType, MAX_COMPONENT_ORDER,
    RICH_THRESHOLD, STRICT_RICH_THRESHOLD,
};

use serde::Serialize;

use crate::error::Result;
use crate::graph::Graph;
use crate::library;

/// Bundled configurations that never embed in a critical graph.
pub const FORBIDDEN_PATTERNS: &[&str] = &["fig2a", "fig2b", "fig2c"];

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PatternHit {
    pub pattern: String,
    pub embedding: Embedding,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AuditReport {
    pub strict: bool,
    pub basic: Vec<Violation>,
    pub forbidden: Vec<PatternHit>,
    pub h: HDecomposition,
    pub double_attachments: Vec<DoubleAttachment>,
    pub rich: Vec<RichVertexType>,
    pub rich_flags: Vec<RichFlag>,
}

impl AuditReport {
    pub fn is_clean(&self) -> bool {
        self.basic.is_empty()
            && self.forbidden.is_empty()
            && self.h.flags.is_empty()
            && self.double_attachments.is_empty()
            && self.rich_flags.is_empty()
    }

    pub fn violation_count(&self) -> usize {
        self.basic.len()
            + self.forbidden.len()
            + self.h.flags.len()
            + self.double_attachments.len()
            + self.rich_flags.len()
    }
}

/// Runs every scanner. `strict` lowers the rich-vertex threshold.
pub fn audit(g: &Graph, strict: bool) -> Result<AuditReport> {
    let basic = audit_basic(g)?;
    let mut forbidden = Vec::new();
    for &name in FORBIDDEN_PATTERNS {
        let cfg = library::pattern(name).expect("bundled pattern exists")?;
        forbidden.extend(
            find_pattern(g, &cfg)
                .into_iter()
                .map(|embedding| PatternHit {
                    pattern: name.to_string(),
                    embedding,
                }),
        );
    }
    let h = decompose_h(g);
    let double_attachments = double_attachments(g, &h);
    let rich = classify_rich(g, &h);
    let rich_flags = flag_rich(&rich, strict);
    Ok(AuditReport {
        strict,
        basic,
        forbidden,
        h,
        double_attachments,
        rich,
        rich_flags,
    })
}
