//! Join and Cartesian product.
//!
//! Vertex encodings are fixed:
//! - join: `g`'s vertices keep their indices, `h`'s vertex `b` becomes `n_g + b`;
//!   edges are `g`'s, then `h`'s (shifted), then the cross edges in row-major order.
//! - product: `(a, b)` becomes `a * n_h + b`; for each `a` the copies of `h`'s edges
//!   come first, then for each `b` the copies of `g`'s edges.

use crate::graph::Graph;

/// `g + h`: disjoint union plus every edge between the two vertex sets.
pub fn join(g: &Graph, h: &Graph) -> Graph {
    let ng = g.vertex_count();
    let nh = h.vertex_count();
    let mut edges = Vec::with_capacity(g.edge_count() + h.edge_count() + ng * nh);
    edges.extend_from_slice(g.edges());
    edges.extend(h.edges().iter().map(|&(u, v)| (u + ng, v + ng)));
    edges.extend((0..ng).flat_map(|a| (0..nh).map(move |b| (a, ng + b))));
    Graph::new(ng + nh, &edges).expect("join of simple graphs is simple")
}

/// `g × h`: `(a, b) ~ (a', b')` iff `a = a'` and `bb'` is an edge of `h`,
/// or `aa'` is an edge of `g` and `b = b'`.
pub fn cartesian_product(g: &Graph, h: &Graph) -> Graph {
    let ng = g.vertex_count();
    let nh = h.vertex_count();
    let at = |a: usize, b: usize| a * nh + b;
    let mut edges = Vec::with_capacity(ng * h.edge_count() + nh * g.edge_count());
    for a in 0..ng {
        edges.extend(h.edges().iter().map(|&(b, c)| (at(a, b), at(a, c))));
    }
    for b in 0..nh {
        edges.extend(g.edges().iter().map(|&(a, c)| (at(a, b), at(c, b))));
    }
    Graph::new(ng * nh, &edges).expect("product of simple graphs is simple")
}
