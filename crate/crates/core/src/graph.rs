//! Finite simple undirected graphs over dense vertex indices.
//!
//! A [`Graph`] is immutable once built. Every constructor validates the
//! simple-graph invariants (no loops, no parallel edges, endpoints in range)
//! and edges are stored with the smaller endpoint first, in insertion order.
//!
//! The edge-list text format is:
//!
//! ```text
//! # optional comment lines
//! N M
//! u v      (exactly M lines, 0 <= u, v < N)
//! ```

use std::collections::{HashSet, VecDeque};
use std::fmt::Write as _;

use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("edge {edge}: self-loop on vertex {vertex}")]
    SelfLoop { edge: usize, vertex: usize },
    #[error("edge {edge}: duplicate edge {u}-{v}")]
    DuplicateEdge { edge: usize, u: usize, v: usize },
    #[error("edge {edge}: vertex {vertex} out of range for {vertex_count} vertices")]
    EndpointOutOfRange {
        edge: usize,
        vertex: usize,
        vertex_count: usize,
    },
    #[error("vertex {vertex} out of range for {vertex_count} vertices")]
    VertexOutOfRange { vertex: usize, vertex_count: usize },
    #[error("edge index {edge} out of range for {edge_count} edges")]
    EdgeOutOfRange { edge: usize, edge_count: usize },
    #[error("relabeling is not a permutation of 0..{vertex_count}")]
    NotPermutation { vertex_count: usize },
    #[error("graph is not connected")]
    Disconnected,
    #[error("line {line}: malformed header: {reason}")]
    MalformedHeader { line: usize, reason: String },
    #[error("line {line}: malformed edge: {reason}")]
    MalformedEdge { line: usize, reason: String },
    #[error("missing header line")]
    MissingHeader,
    #[error("header declares {expected} edges but {found} were given")]
    EdgeCountMismatch { expected: usize, found: usize },
    #[error("line {line}: {source}")]
    AtLine {
        line: usize,
        #[source]
        source: Box<GraphError>,
    },
}

/// A finite simple undirected graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    vertex_count: usize,
    edges: Vec<(usize, usize)>,
    degrees: Vec<usize>,
    // incident edge indices per vertex, ascending
    incidence: Vec<Vec<usize>>,
}

/// Two distinct edges sharing an endpoint, stored with `first_edge < second_edge`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct EdgePair {
    pub first_edge: usize,
    pub second_edge: usize,
    pub first_degree: usize,
    pub second_degree: usize,
}

impl Graph {
    /// Builds a validated graph. Endpoints of each edge are normalized so
    /// the smaller index comes first; edge order is kept.
    pub fn new(vertex_count: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut seen = HashSet::with_capacity(edges.len());
        let mut normalized = Vec::with_capacity(edges.len());
        for (edge, &(u, v)) in edges.iter().enumerate() {
            for vertex in [u, v] {
                if vertex >= vertex_count {
                    return Err(GraphError::EndpointOutOfRange {
                        edge,
                        vertex,
                        vertex_count,
                    });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop { edge, vertex: u });
            }
            let key = (u.min(v), u.max(v));
            if !seen.insert(key) {
                return Err(GraphError::DuplicateEdge {
                    edge,
                    u: key.0,
                    v: key.1,
                });
            }
            normalized.push(key);
        }

        let mut degrees = vec![0; vertex_count];
        let mut incidence = vec![Vec::new(); vertex_count];
        for (i, &(u, v)) in normalized.iter().enumerate() {
            degrees[u] += 1;
            degrees[v] += 1;
            incidence[u].push(i);
            incidence[v].push(i);
        }

        Ok(Self {
            vertex_count,
            edges: normalized,
            degrees,
            incidence,
        })
    }

    pub fn empty(vertex_count: usize) -> Self {
        Self::new(vertex_count, &[]).expect("edgeless graph is always valid")
    }

    pub fn complete(n: usize) -> Self {
        let edges: Vec<_> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        Self::new(n, &edges).expect("complete graph is simple")
    }

    /// Path on `n` vertices (`n - 1` edges).
    pub fn path(n: usize) -> Self {
        let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        Self::new(n, &edges).expect("path is simple")
    }

    /// Cycle on `n >= 3` vertices.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "a simple cycle needs at least 3 vertices");
        let edges: Vec<_> = (0..n).map(|v| (v, (v + 1) % n)).collect();
        Self::new(n, &edges).expect("cycle is simple")
    }

    /// Star `K_{1,leaves}` with the center at vertex 0.
    pub fn star(leaves: usize) -> Self {
        let edges: Vec<_> = (1..=leaves).map(|v| (0, v)).collect();
        Self::new(leaves + 1, &edges).expect("star is simple")
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Degrees of all vertices, indexed by vertex.
    pub fn degrees(&self) -> &[usize] {
        &self.degrees
    }

    pub fn vertex_degree(&self, v: usize) -> Result<usize, GraphError> {
        self.degrees
            .get(v)
            .copied()
            .ok_or(GraphError::VertexOutOfRange {
                vertex: v,
                vertex_count: self.vertex_count,
            })
    }

    /// Edge degree `d(u) + d(v) - 2` of edge `e = uv`.
    pub fn edge_degree(&self, e: usize) -> Result<usize, GraphError> {
        let &(u, v) = self.edges.get(e).ok_or(GraphError::EdgeOutOfRange {
            edge: e,
            edge_count: self.edges.len(),
        })?;
        Ok(self.edge_degree_unchecked(u, v))
    }

    /// Edge degrees of all edges, indexed by edge.
    pub fn edge_degrees(&self) -> Vec<usize> {
        self.edges
            .iter()
            .map(|&(u, v)| self.edge_degree_unchecked(u, v))
            .collect()
    }

    // Both endpoints of an existing edge have degree >= 1.
    fn edge_degree_unchecked(&self, u: usize, v: usize) -> usize {
        self.degrees[u] + self.degrees[v] - 2
    }

    pub fn incident_edges(&self, v: usize) -> Result<&[usize], GraphError> {
        self.incidence
            .get(v)
            .map(Vec::as_slice)
            .ok_or(GraphError::VertexOutOfRange {
                vertex: v,
                vertex_count: self.vertex_count,
            })
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        if u >= self.vertex_count || v >= self.vertex_count {
            return false;
        }
        let key = (u.min(v), u.max(v));
        // scan the shorter incidence list
        let a = if self.degrees[u] <= self.degrees[v] {
            u
        } else {
            v
        };
        self.incidence[a].iter().any(|&e| self.edges[e] == key)
    }

    /// Every unordered pair of distinct edges sharing an endpoint, exactly once.
    ///
    /// Pairs are grouped by their shared vertex in ascending vertex order,
    /// so the output is deterministic. The length is `sum_v C(d(v), 2)`.
    pub fn adjacent_edge_pairs(&self) -> Vec<EdgePair> {
        let edge_degrees = self.edge_degrees();
        let mut pairs = Vec::with_capacity(self.pair_count());
        for incident in &self.incidence {
            for (i, &a) in incident.iter().enumerate() {
                for &b in &incident[i + 1..] {
                    pairs.push(EdgePair {
                        first_edge: a,
                        second_edge: b,
                        first_degree: edge_degrees[a],
                        second_degree: edge_degrees[b],
                    });
                }
            }
        }
        pairs
    }

    /// `sum_v C(d(v), 2)`.
    pub fn pair_count(&self) -> usize {
        self.degrees
            .iter()
            .map(|&d| d * d.saturating_sub(1) / 2)
            .sum()
    }

    /// The line graph: one vertex per edge, adjacent when the edges share an endpoint.
    pub fn line_graph(&self) -> Graph {
        let edges: Vec<_> = self
            .adjacent_edge_pairs()
            .into_iter()
            .map(|p| (p.first_edge, p.second_edge))
            .collect();
        Graph::new(self.edges.len(), &edges).expect("line graph of a simple graph is simple")
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph, GraphError> {
        let not_perm = GraphError::NotPermutation {
            vertex_count: self.vertex_count,
        };
        if perm.len() != self.vertex_count {
            return Err(not_perm);
        }
        let mut hit = vec![false; self.vertex_count];
        for &p in perm {
            if p >= self.vertex_count || std::mem::replace(&mut hit[p], true) {
                return Err(not_perm);
            }
        }
        let edges: Vec<_> = self
            .edges
            .iter()
            .map(|&(u, v)| (perm[u], perm[v]))
            .collect();
        Graph::new(self.vertex_count, &edges)
    }

    /// True for connected graphs. The empty graph on zero vertices counts as connected.
    pub fn is_connected(&self) -> bool {
        if self.vertex_count == 0 {
            return true;
        }
        let mut visited = vec![false; self.vertex_count];
        let mut queue = VecDeque::from([0]);
        visited[0] = true;
        let mut reached = 1;
        while let Some(v) = queue.pop_front() {
            for &e in &self.incidence[v] {
                let (a, b) = self.edges[e];
                let w = if a == v { b } else { a };
                if !visited[w] {
                    visited[w] = true;
                    reached += 1;
                    queue.push_back(w);
                }
            }
        }
        reached == self.vertex_count
    }

    pub fn require_connected(&self) -> Result<(), GraphError> {
        if self.is_connected() {
            Ok(())
        } else {
            Err(GraphError::Disconnected)
        }
    }

    /// Parses the edge-list text format. Errors carry the 1-based line number.
    pub fn parse_edge_list(text: &str) -> Result<Graph, GraphError> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

        let (header_line, header) = lines.next().ok_or(GraphError::MissingHeader)?;
        let (vertex_count, edge_count) =
            parse_pair(header).map_err(|reason| GraphError::MalformedHeader {
                line: header_line,
                reason,
            })?;

        let mut edges = Vec::with_capacity(edge_count);
        let mut line_of_edge = Vec::with_capacity(edge_count);
        for (line, body) in lines {
            if edges.len() == edge_count {
                return Err(GraphError::AtLine {
                    line,
                    source: Box::new(GraphError::EdgeCountMismatch {
                        expected: edge_count,
                        found: edge_count + 1,
                    }),
                });
            }
            let edge =
                parse_pair(body).map_err(|reason| GraphError::MalformedEdge { line, reason })?;
            edges.push(edge);
            line_of_edge.push(line);
        }
        if edges.len() != edge_count {
            return Err(GraphError::EdgeCountMismatch {
                expected: edge_count,
                found: edges.len(),
            });
        }

        Graph::new(vertex_count, &edges).map_err(|err| {
            let edge = match err {
                GraphError::SelfLoop { edge, .. }
                | GraphError::DuplicateEdge { edge, .. }
                | GraphError::EndpointOutOfRange { edge, .. } => edge,
                other => return other,
            };
            GraphError::AtLine {
                line: line_of_edge[edge],
                source: Box::new(err),
            }
        })
    }

    /// Writes the edge-list text format: no comments, `u < v`, one trailing newline.
    pub fn to_edge_list(&self) -> String {
        let mut out = String::with_capacity(8 * (self.edges.len() + 1));
        let _ = writeln!(out, "{} {}", self.vertex_count, self.edges.len());
        for &(u, v) in &self.edges {
            let _ = writeln!(out, "{u} {v}");
        }
        out
    }
}

fn parse_pair(line: &str) -> Result<(usize, usize), String> {
    let mut fields = line.split_whitespace();
    let mut next = |what: &str| -> Result<usize, String> {
        let raw = fields.next().ok_or_else(|| format!("missing {what}"))?;
        raw.parse::<usize>()
            .map_err(|_| format!("{what} {raw:?} is not a non-negative integer"))
    };
    let a = next("first field")?;
    let b = next("second field")?;
    if let Some(extra) = fields.next() {
        return Err(format!("unexpected trailing field {extra:?}"));
    }
    Ok((a, b))
}
