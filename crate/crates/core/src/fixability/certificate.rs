//! Serialized winning strategies.
//!
//! Boards, pairs and colorings are stored as plain strings so the checker
//! can parse them without the prover's types. See `docs/certificate.md` at
//! the repository root for the field-by-field description.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::board::{canonicalize, Board};
use crate::error::{Error, Result};

pub const CERTIFICATE_FORMAT: &str = "kempe-fixability-certificate/1";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    /// The adversary answers every swap afresh.
    Basic,
    /// The adversary's pairing for the last swapped color pair is remembered.
    Stateful,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Basic => "basic",
            Mode::Stateful => "stateful",
        })
    }
}

impl FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "basic" => Ok(Mode::Basic),
            "stateful" => Ok(Mode::Stateful),
            other => Err(Error::validation(format!("unknown mode `{other}`"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub format: String,
    pub config_hash: String,
    pub mode: Mode,
    pub slot_count: usize,
    /// Edges of the resolved configuration; colorings index into this list.
    pub edges: Vec<(usize, usize)>,
    pub boards: Vec<Entry>,
}

/// Known pairing for one color pair: matched slots are joined by a chain of
/// that pair; eligible slots not listed are known to be unpaired.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Knowledge {
    pub pair: String,
    pub pairs: Vec<(usize, usize)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct StateRef {
    pub board: String,
    pub knowledge: Option<Knowledge>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Entry {
    pub board: String,
    pub knowledge: Option<Knowledge>,
    /// Longest forced distance to a colorable board.
    pub rank: usize,
    pub action: Action,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Action {
    /// One color letter per configuration edge.
    Color { coloring: String },
    /// Swap at `slot` with color `pair`; `responses` lists every state the
    /// adversary can answer with.
    Swap {
        slot: usize,
        pair: String,
        responses: Vec<StateRef>,
    },
}

impl Certificate {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("certificate serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::parse(e.line(), e.to_string()))
    }

    /// The entry answering a raw (possibly non-canonical) board with no
    /// pairing knowledge, plus the renaming that canonicalizes it.
    pub fn lookup(&self, raw: &Board) -> Option<(&Entry, super::board::ColorPermutation)> {
        let (canon, perm) = canonicalize(raw);
        let key = canon.to_string();
        self.boards
            .iter()
            .find(|e| e.board == key && e.knowledge.is_none())
            .map(|e| (e, perm))
    }
}
