//! Closed-form `EHM` expressions for joins, Cartesian products and acenes,
//! and an audit that compares them with the brute-force index.
//!
//! The join and product expressions are evaluated term by term as
//! published, without correction. The audit reports their difference from
//! the definition-level value of the explicitly constructed graph; for
//! joins and products that difference is generally non-zero.

use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::acene::{acene_ehm_formula, acene_graph, AceneError, AceneSpec};
use crate::graph::Graph;
use crate::indices::{self, IndexError};
use crate::ops::{cartesian_product, join};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum ClosedFormError {
    #[error("closed-form evaluation overflows 128-bit integer arithmetic")]
    Overflow,
    #[error(transparent)]
    Index(#[from] IndexError),
    #[error(transparent)]
    Acene(#[from] AceneError),
}

/// The invariants the closed forms are written in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
pub struct GraphSummary {
    pub n: u64,
    pub m: u64,
    pub m1: u64,
    pub em1: u64,
    pub em2: u64,
}

pub fn summarize(g: &Graph) -> Result<GraphSummary, IndexError> {
    Ok(GraphSummary {
        n: g.vertex_count() as u64,
        m: g.edge_count() as u64,
        m1: indices::m1(g)?,
        em1: indices::em1(g)?,
        em2: indices::em2(g)?,
    })
}

/// Checked `i128` arithmetic for the closed forms.
#[derive(Debug, Clone, Copy)]
struct Exact(Option<i128>);

impl Exact {
    fn of(x: u64) -> Self {
        Exact(Some(x as i128))
    }

    fn int(x: i128) -> Self {
        Exact(Some(x))
    }

    fn value(self) -> Result<i128, ClosedFormError> {
        self.0.ok_or(ClosedFormError::Overflow)
    }
}

impl std::ops::Add for Exact {
    type Output = Exact;
    fn add(self, rhs: Exact) -> Exact {
        Exact(self.0.zip(rhs.0).and_then(|(a, b)| a.checked_add(b)))
    }
}

impl std::ops::Sub for Exact {
    type Output = Exact;
    fn sub(self, rhs: Exact) -> Exact {
        Exact(self.0.zip(rhs.0).and_then(|(a, b)| a.checked_sub(b)))
    }
}

impl std::ops::Mul for Exact {
    type Output = Exact;
    fn mul(self, rhs: Exact) -> Exact {
        Exact(self.0.zip(rhs.0).and_then(|(a, b)| a.checked_mul(b)))
    }
}

/// The printed fifteen-term expression for `EHM(Γ + Ω)`, with `a = Γ`, `b = Ω`.
pub fn join_formula(a: &GraphSummary, b: &GraphSummary) -> Result<i128, ClosedFormError> {
    let k = Exact::int;
    let (na, ma, m1a, em1a, em2a) = (
        Exact::of(a.n),
        Exact::of(a.m),
        Exact::of(a.m1),
        Exact::of(a.em1),
        Exact::of(a.em2),
    );
    let (nb, mb, m1b, em1b, em2b) = (
        Exact::of(b.n),
        Exact::of(b.m),
        Exact::of(b.m1),
        Exact::of(b.em1),
        Exact::of(b.em2),
    );
    let shift = k(2) * na + k(2) * nb - k(4);

    // terms from edge pairs inside Γ
    let inside_a =
        k(2) * em1a + k(16) * nb * (m1a - k(2) * ma) + k(16) * nb * nb * ma + k(2) * em2a;
    // terms from edge pairs inside Ω
    let inside_b =
        k(2) * em1b + k(16) * na * (m1b - k(2) * mb) + k(16) * na * na * mb + k(2) * em2b;
    // terms from mixed pairs
    let mixed = k(2) * nb * m1a
        + k(2) * na * m1b
        + k(32) * ma * mb
        + k(8) * shift * (na * mb + nb * ma)
        + k(4) * na * nb * shift * shift
        + k(8) * ma * ma
        + k(8) * mb * mb;

    (inside_a + inside_b + mixed).value()
}

/// The printed expression for `EHM(Γ × Ω)`, with `a = Γ`, `b = Ω`.
pub fn product_formula(a: &GraphSummary, b: &GraphSummary) -> Result<i128, ClosedFormError> {
    let k = Exact::int;
    let (na, ma, m1a, em1a) = (
        Exact::of(a.n),
        Exact::of(a.m),
        Exact::of(a.m1),
        Exact::of(a.em1),
    );
    let (nb, mb, m1b, em1b) = (
        Exact::of(b.n),
        Exact::of(b.m),
        Exact::of(b.m1),
        Exact::of(b.em1),
    );
    let inner = na * em1b
        + k(8) * ma * m1b
        + k(4) * mb * m1a
        + nb * em1a
        + k(8) * mb * m1a
        + k(4) * ma * m1b
        - k(32) * ma * mb;
    (k(2) * inner).value()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Theorem {
    Join,
    Product,
    Acene,
}

impl fmt::Display for Theorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Theorem::Join => "join",
            Theorem::Product => "product",
            Theorem::Acene => "acene",
        })
    }
}

/// One theorem instance to audit.
#[derive(Debug, Clone, Copy)]
pub enum TheoremCase<'a> {
    Join(&'a Graph, &'a Graph),
    Product(&'a Graph, &'a Graph),
    Acene(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DiscrepancyReport {
    pub theorem_id: Theorem,
    pub closed_form_value: i128,
    pub oracle_value: i128,
    pub difference: i128,
    pub operand_description: String,
}

impl DiscrepancyReport {
    fn new(theorem_id: Theorem, closed: i128, oracle: u64, operand_description: String) -> Self {
        let oracle = oracle as i128;
        Self {
            theorem_id,
            closed_form_value: closed,
            oracle_value: oracle,
            difference: closed - oracle,
            operand_description,
        }
    }

    pub fn agrees(&self) -> bool {
        self.difference == 0
    }
}

fn describe(g: &Graph) -> String {
    format!("(n={}, m={})", g.vertex_count(), g.edge_count())
}

/// Evaluates the closed form and, independently, `EHM` of the constructed graph.
pub fn verify_theorem(case: TheoremCase<'_>) -> Result<DiscrepancyReport, ClosedFormError> {
    match case {
        TheoremCase::Join(g, h) => {
            let closed = join_formula(&summarize(g)?, &summarize(h)?)?;
            let oracle = indices::ehm(&join(g, h))?;
            let what = format!("join of {} and {}", describe(g), describe(h));
            Ok(DiscrepancyReport::new(Theorem::Join, closed, oracle, what))
        }
        TheoremCase::Product(g, h) => {
            let closed = product_formula(&summarize(g)?, &summarize(h)?)?;
            let oracle = indices::ehm(&cartesian_product(g, h))?;
            let what = format!("Cartesian product of {} and {}", describe(g), describe(h));
            Ok(DiscrepancyReport::new(
                Theorem::Product,
                closed,
                oracle,
                what,
            ))
        }
        TheoremCase::Acene(rings) => {
            let closed = acene_ehm_formula(rings)? as i128;
            let oracle = indices::ehm(&acene_graph(AceneSpec::new(rings)?))?;
            let what = format!("linear acene with {rings} rings");
            Ok(DiscrepancyReport::new(Theorem::Acene, closed, oracle, what))
        }
    }
}
