//! Edge-degree Zagreb-family topological indices.
//!
//! - [`graph`]: simple undirected graphs, edge-list I/O, edge degrees, line graphs
//! - [`indices`]: definition-level `M1`, `M2`, coindices, `EM1`, `EM2`, `HM`, `EHM`
//! - [`ops`]: join and Cartesian product
//! - [`closed_form`]: published closed forms for `EHM` and their audit
//! - [`acene`]: linear acene graphs and their edge-pair classes
//! - [`qspr`]: linear property models in `EHM` for the acene family

pub mod acene;
pub mod closed_form;
pub mod graph;
pub mod indices;
pub mod ops;
pub mod qspr;

pub use acene::{acene_graph, AceneError, AceneSpec, ClassHistogram};
pub use closed_form::{
    verify_theorem, ClosedFormError, DiscrepancyReport, GraphSummary, Theorem, TheoremCase,
};
pub use graph::{EdgePair, Graph, GraphError};
pub use indices::{index_report, IndexError, IndexReport};
pub use ops::{cartesian_product, join};
pub use qspr::{
    Property, PropertyDataset, PropertyRecord, QsprError, RegressionModel, Table, TableId,
};

use thiserror::Error;

/// Any error raised by this crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Index(#[from] IndexError),
    #[error(transparent)]
    Acene(#[from] AceneError),
    #[error(transparent)]
    ClosedForm(#[from] ClosedFormError),
    #[error(transparent)]
    Qspr(#[from] QsprError),
}
