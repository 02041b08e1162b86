//! Benchmark inputs shared by the criterion targets.

use zagreb_core::{acene_graph, cartesian_product, AceneSpec, Graph};

pub fn acene(rings: usize) -> Graph {
    acene_graph(AceneSpec::new(rings).expect("rings >= 1"))
}

/// `side × side` grid, a denser input than the acene chain.
pub fn grid(side: usize) -> Graph {
    let path = Graph::path(side);
    cartesian_product(&path, &path)
}
