//! Hydrogen-depleted linear acene graphs (`C_{4n+2}H_{2n+4}`).
//!
//! The `n`-ring acene is built as two paths of `2n + 1` carbons, the top
//! path numbered `0..=2n` and the bottom path `2n+1..=4n+1`, joined by
//! `n + 1` rungs at even positions `0, 2, .., 2n`. Hydrogens are not vertices.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum AceneError {
    #[error("an acene needs at least one ring, got {rings}")]
    NoRings { rings: usize },
    #[error(
        "the closed form 4(85n - 62) holds for n >= 2 only (n = 1, benzene, has EHM 96, not 92); got n = {rings}"
    )]
    FormulaOutOfRange { rings: usize },
    #[error("ring count {rings} is too large")]
    TooLarge { rings: usize },
}

/// Ring count of a linear acene.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct AceneSpec {
    rings: usize,
}

impl AceneSpec {
    pub fn new(rings: usize) -> Result<Self, AceneError> {
        if rings == 0 {
            return Err(AceneError::NoRings { rings });
        }
        Ok(Self { rings })
    }

    pub fn rings(self) -> usize {
        self.rings
    }

    pub fn carbon_count(self) -> usize {
        4 * self.rings + 2
    }

    pub fn hydrogen_count(self) -> usize {
        2 * self.rings + 4
    }

    /// Molecular formula, e.g. `C10H8` for two rings.
    pub fn formula(self) -> String {
        format!("C{}H{}", self.carbon_count(), self.hydrogen_count())
    }
}

pub fn acene_graph(spec: AceneSpec) -> Graph {
    let n = spec.rings();
    let row = 2 * n + 1;
    let mut edges = Vec::with_capacity(5 * n + 1);
    for offset in [0, row] {
        edges.extend((1..row).map(|i| (offset + i - 1, offset + i)));
    }
    edges.extend((0..row).step_by(2).map(|i| (i, row + i)));
    Graph::new(2 * row, &edges).expect("acene graph is simple")
}

/// Sorted edge-degree pair `(d(α), d(β))` with `d(α) <= d(β)`.
pub type DegreePair = (usize, usize);

/// Count of adjacent edge pairs per sorted edge-degree pair.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct ClassHistogram {
    pub counts: BTreeMap<DegreePair, usize>,
}

impl ClassHistogram {
    pub fn total_pairs(&self) -> usize {
        self.counts.values().sum()
    }

    /// `sum count * (d(α) + d(β))^2`, which equals `EHM` of the source graph.
    pub fn weighted_sum(&self) -> u64 {
        self.counts
            .iter()
            .map(|(&(a, b), &count)| count as u64 * ((a + b) as u64).pow(2))
            .sum()
    }

    pub fn get(&self, key: DegreePair) -> usize {
        self.counts.get(&key).copied().unwrap_or(0)
    }
}

impl fmt::Display for ClassHistogram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, ((a, b), count)) in self.counts.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "({a},{b}):{count}")?;
        }
        f.write_str("}")
    }
}

/// Histogram of adjacent edge pairs keyed by sorted edge-degree pair. Works on any graph.
pub fn acene_pair_class_histogram(g: &Graph) -> ClassHistogram {
    let mut counts = BTreeMap::new();
    for p in g.adjacent_edge_pairs() {
        let key = (
            p.first_degree.min(p.second_degree),
            p.first_degree.max(p.second_degree),
        );
        *counts.entry(key).or_insert(0) += 1;
    }
    ClassHistogram { counts }
}

/// Location-based pair classes of an acene with `n >= 2` rings.
///
/// `outer_*` classes live in the two terminal rings, `inner_*` in the
/// interior rings and `fusion` across the shared bonds.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct LocationClasses {
    pub outer_2_2: usize,
    pub outer_2_3: usize,
    pub outer_3_4: usize,
    pub inner_3_3: usize,
    pub inner_3_4: usize,
    pub fusion_3_3: usize,
}

impl LocationClasses {
    pub fn for_rings(rings: usize) -> Result<Self, AceneError> {
        if rings < 2 {
            return Err(AceneError::FormulaOutOfRange { rings });
        }
        Ok(Self {
            outer_2_2: 4,
            outer_2_3: 4,
            outer_3_4: 4,
            inner_3_3: 2 * (rings - 2),
            inner_3_4: 4 * (rings - 2),
            fusion_3_3: 2 * (rings - 1),
        })
    }

    pub fn as_array(&self) -> [usize; 6] {
        [
            self.outer_2_2,
            self.outer_2_3,
            self.outer_3_4,
            self.inner_3_3,
            self.inner_3_4,
            self.fusion_3_3,
        ]
    }

    /// Merges the location classes by degree pair.
    pub fn to_histogram(&self) -> ClassHistogram {
        let counts = [
            ((2, 2), self.outer_2_2),
            ((2, 3), self.outer_2_3),
            ((3, 3), self.inner_3_3 + self.fusion_3_3),
            ((3, 4), self.outer_3_4 + self.inner_3_4),
        ]
        .into_iter()
        .filter(|&(_, c)| c > 0)
        .collect();
        ClassHistogram { counts }
    }
}

/// `EHM = 4(85n - 62)` for `n >= 2`.
pub fn acene_ehm_formula(rings: usize) -> Result<u64, AceneError> {
    if rings < 2 {
        return Err(AceneError::FormulaOutOfRange { rings });
    }
    u64::try_from(rings)
        .ok()
        .and_then(|n| n.checked_mul(340))
        .map(|x| x - 248)
        .ok_or(AceneError::TooLarge { rings })
}
