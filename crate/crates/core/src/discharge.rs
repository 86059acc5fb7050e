//! Exact charge redistribution over the decomposition from [`crate::audit`].
//!
//! Every vertex starts with its degree. Three rules then run in order:
//! each 2-vertex takes `alpha / 2` from each neighbor; each rich vertex
//! gives `t * beta` to each neighbor in a component of order `t`; the
//! vertices of each component average their charge.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde::{Serialize, Serializer};

use crate::audit::{audit_basic, decompose_h, is_rich, HDecomposition};
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

pub type Charge = BigRational;

pub fn ratio(n: i64, d: i64) -> Charge {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Parses `a/b` or an integer.
pub fn parse_ratio(text: &str) -> Result<Charge> {
    let bad = || Error::validation(format!("bad rational `{text}`"));
    let (n, d) = match text.trim().split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (text.trim(), "1"),
    };
    let n: BigInt = n.parse().map_err(|_| bad())?;
    let d: BigInt = d.parse().map_err(|_| bad())?;
    if d.is_zero() {
        return Err(bad());
    }
    Ok(BigRational::new(n, d))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Rule {
    /// 2-vertices take from their neighbors.
    R1,
    /// Rich vertices give to adjacent components.
    R2,
    /// Components average.
    R3,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RuleStep {
    pub rule: Rule,
    /// Net change of each vertex's charge under this rule.
    #[serde(serialize_with = "charges_as_strings")]
    pub delta: Vec<Charge>,
    #[serde(serialize_with = "charges_as_strings")]
    pub charges: Vec<Charge>,
    #[serde(serialize_with = "charge_as_string")]
    pub total: Charge,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DischargeTrace {
    #[serde(serialize_with = "charge_as_string")]
    pub alpha: Charge,
    #[serde(serialize_with = "charge_as_string")]
    pub beta: Charge,
    /// `2 + alpha`, the charge every vertex should finish with.
    #[serde(serialize_with = "charge_as_string")]
    pub target: Charge,
    #[serde(serialize_with = "charges_as_strings")]
    pub initial: Vec<Charge>,
    pub steps: Vec<RuleStep>,
    /// Vertices finishing below the target.
    pub below_target: Vec<Vertex>,
}

impl DischargeTrace {
    pub fn final_charges(&self) -> &[Charge] {
        self.steps
            .last()
            .map_or(&self.initial, |s| s.charges.as_slice())
    }
}

/// Applies the three rules. Fails when the local degree conditions are
/// broken or `h` does not match `g`; cycles and long components are
/// accepted and show up as vertices below the target.
pub fn run_discharge(
    g: &Graph,
    h: &HDecomposition,
    alpha: &Charge,
    beta: &Charge,
) -> Result<DischargeTrace> {
    let violations = audit_basic(g)?;
    if !violations.is_empty() {
        return Err(Error::validation(format!(
            "graph fails the local degree conditions ({} violations)",
            violations.len()
        )));
    }
    if *h != decompose_h(g) {
        return Err(Error::validation("decomposition does not match the graph"));
    }
    let n = g.vertex_count();
    let initial: Vec<Charge> = g.vertices().map(|v| ratio(g.degree(v) as i64, 1)).collect();
    let expected_total = ratio(2 * g.edge_count() as i64, 1);

    let half_alpha = alpha / ratio(2, 1);
    let mut r1 = vec![Charge::zero(); n];
    for v in g.vertices().filter(|&v| g.degree(v) == 2) {
        for w in g.neighbors(v) {
            r1[v] += &half_alpha;
            r1[w] -= &half_alpha;
        }
    }

    let mut r2 = vec![Charge::zero(); n];
    for v in g.vertices().filter(|&v| is_rich(g, v)) {
        for w in g.neighbors(v) {
            let t = h.order_at(w);
            if t > 0 {
                let gift = beta * ratio(t as i64, 1);
                r2[v] -= &gift;
                r2[w] += gift;
            }
        }
    }

    let mut steps = Vec::with_capacity(3);
    let mut charges = initial.clone();
    for (rule, delta) in [(Rule::R1, r1), (Rule::R2, r2)] {
        steps.push(apply(rule, &mut charges, delta, &expected_total)?);
    }

    let mut r3 = vec![Charge::zero(); n];
    for comp in &h.components {
        let sum: Charge = comp.iter().map(|&v| &charges[v]).sum();
        let avg = sum / ratio(comp.len() as i64, 1);
        for &v in comp {
            r3[v] = &avg - &charges[v];
        }
    }
    steps.push(apply(Rule::R3, &mut charges, r3, &expected_total)?);

    let target = ratio(2, 1) + alpha;
    let below_target = g.vertices().filter(|&v| charges[v] < target).collect();
    Ok(DischargeTrace {
        alpha: alpha.clone(),
        beta: beta.clone(),
        target,
        initial,
        steps,
        below_target,
    })
}

fn apply(
    rule: Rule,
    charges: &mut [Charge],
    delta: Vec<Charge>,
    expected: &Charge,
) -> Result<RuleStep> {
    for (c, d) in charges.iter_mut().zip(&delta) {
        *c += d;
    }
    let total: Charge = charges.iter().sum();
    if total != *expected {
        return Err(Error::validation(format!(
            "rule {rule:?} changed the total charge to {total}"
        )));
    }
    Ok(RuleStep {
        rule,
        delta,
        charges: charges.to_vec(),
        total,
    })
}

/// Whether `2|E| >= bound * |V|`, exactly.
pub fn audit_bound(g: &Graph, bound: &Charge) -> bool {
    ratio(2 * g.edge_count() as i64, 1) >= bound * ratio(g.vertex_count() as i64, 1)
}

/// The `(alpha, beta)` making `2 + alpha`, `3 - alpha/2 + 2 beta` and
/// `3 - type_sum * beta` equal: the final charges of a 2-vertex, a vertex
/// in a component, and a rich vertex whose type entries sum to `type_sum`.
pub fn solve_parameters(type_sum: u32) -> (Charge, Charge) {
    let s = i64::from(type_sum);
    let denom = 3 * s + 4;
    (ratio(2 * s + 4, denom), ratio(1, denom))
}

fn charge_as_string<S: Serializer>(c: &Charge, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&c.to_string())
}

fn charges_as_strings<S: Serializer>(cs: &[Charge], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(cs.iter().map(ToString::to_string))
}
