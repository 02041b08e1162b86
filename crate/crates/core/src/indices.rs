//! Definition-level Zagreb-family indices.
//!
//! Every index is a direct sum over vertices, edges, non-adjacent vertex
//! pairs or adjacent edge pairs. All arithmetic is exact `u64`; a sum that
//! would overflow is reported as [`IndexError::Overflow`] instead of wrapping.
//!
//! Summation conventions:
//! - vertex pairs in the coindices are unordered, distinct and non-adjacent;
//! - adjacent edge pairs in `EM2` and `EHM` are unordered;
//! - `EHM` squares `d(α) + d(β)` for each adjacent pair `α ~ β`.

use serde::Serialize;
use thiserror::Error;

use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum IndexError {
    #[error("{index} overflows 64-bit integer arithmetic")]
    Overflow { index: &'static str },
}

/// All eight indices of one graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct IndexReport {
    pub m1: u64,
    pub m2: u64,
    pub co_m1: u64,
    pub co_m2: u64,
    pub em1: u64,
    pub em2: u64,
    pub hm: u64,
    pub ehm: u64,
}

impl IndexReport {
    pub const FIELD_NAMES: [&'static str; 8] =
        ["m1", "m2", "co_m1", "co_m2", "em1", "em2", "hm", "ehm"];

    pub fn values(&self) -> [u64; 8] {
        [
            self.m1, self.m2, self.co_m1, self.co_m2, self.em1, self.em2, self.hm, self.ehm,
        ]
    }
}

fn exact_sum<I>(index: &'static str, terms: I) -> Result<u64, IndexError>
where
    I: IntoIterator<Item = Option<u64>>,
{
    terms
        .into_iter()
        .try_fold(0u64, |acc, term| term.and_then(|t| acc.checked_add(t)))
        .ok_or(IndexError::Overflow { index })
}

fn square(x: u64) -> Option<u64> {
    x.checked_mul(x)
}

fn wide(x: usize) -> u64 {
    x as u64
}

/// First Zagreb index, `sum_v d(v)^2`.
pub fn m1(g: &Graph) -> Result<u64, IndexError> {
    let by_vertex = exact_sum("M1", g.degrees().iter().map(|&d| square(wide(d))))?;
    debug_assert_eq!(Ok(by_vertex), m1_by_edges(g));
    Ok(by_vertex)
}

/// `M1` via its edge form, `sum_{uv in E} (d(u) + d(v))`.
pub fn m1_by_edges(g: &Graph) -> Result<u64, IndexError> {
    let d = g.degrees();
    exact_sum(
        "M1",
        g.edges()
            .iter()
            .map(|&(u, v)| wide(d[u]).checked_add(wide(d[v]))),
    )
}

/// Second Zagreb index, `sum_{uv in E} d(u) d(v)`.
pub fn m2(g: &Graph) -> Result<u64, IndexError> {
    let d = g.degrees();
    exact_sum(
        "M2",
        g.edges()
            .iter()
            .map(|&(u, v)| wide(d[u]).checked_mul(wide(d[v]))),
    )
}

// Unordered distinct non-adjacent vertex pairs.
fn non_adjacent_pairs(g: &Graph) -> impl Iterator<Item = (usize, usize)> + '_ {
    let n = g.vertex_count();
    (0..n)
        .flat_map(move |a| (a + 1..n).map(move |b| (a, b)))
        .filter(move |&(a, b)| !g.has_edge(a, b))
}

/// First Zagreb coindex, `sum_{ab not in E} (d(a) + d(b))`.
pub fn co_m1(g: &Graph) -> Result<u64, IndexError> {
    let d = g.degrees();
    exact_sum(
        "co-M1",
        non_adjacent_pairs(g).map(|(a, b)| wide(d[a]).checked_add(wide(d[b]))),
    )
}

/// Second Zagreb coindex, `sum_{ab not in E} d(a) d(b)`.
pub fn co_m2(g: &Graph) -> Result<u64, IndexError> {
    let d = g.degrees();
    exact_sum(
        "co-M2",
        non_adjacent_pairs(g).map(|(a, b)| wide(d[a]).checked_mul(wide(d[b]))),
    )
}

/// First reformulated Zagreb index, `sum_{α in E} d(α)^2`.
pub fn em1(g: &Graph) -> Result<u64, IndexError> {
    exact_sum("EM1", g.edge_degrees().into_iter().map(|d| square(wide(d))))
}

/// Second reformulated Zagreb index, `sum_{α ~ β} d(α) d(β)`.
pub fn em2(g: &Graph) -> Result<u64, IndexError> {
    exact_sum(
        "EM2",
        g.adjacent_edge_pairs()
            .into_iter()
            .map(|p| wide(p.first_degree).checked_mul(wide(p.second_degree))),
    )
}

/// Hyper-Zagreb index, `sum_{uv in E} (d(u) + d(v))^2`.
pub fn hm(g: &Graph) -> Result<u64, IndexError> {
    let d = g.degrees();
    exact_sum(
        "HM",
        g.edges()
            .iter()
            .map(|&(u, v)| wide(d[u]).checked_add(wide(d[v])).and_then(square)),
    )
}

/// Edge hyper-Zagreb index, `sum_{α ~ β} (d(α) + d(β))^2`.
pub fn ehm(g: &Graph) -> Result<u64, IndexError> {
    exact_sum(
        "EHM",
        g.adjacent_edge_pairs().into_iter().map(|p| {
            wide(p.first_degree)
                .checked_add(wide(p.second_degree))
                .and_then(square)
        }),
    )
}

pub fn index_report(g: &Graph) -> Result<IndexReport, IndexError> {
    Ok(IndexReport {
        m1: m1(g)?,
        m2: m2(g)?,
        co_m1: co_m1(g)?,
        co_m2: co_m2(g)?,
        em1: em1(g)?,
        em2: em2(g)?,
        hm: hm(g)?,
        ehm: ehm(g)?,
    })
}
