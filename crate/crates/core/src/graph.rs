//! Edges, kets and the multigraph they live in.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::{Error, Result};

pub type VertexId = u32;
pub type Mode = u32;

/// One photon-pair source: a weighted connection delivering `mode1` to
/// `v1` and `mode2` to `v2`.
///
/// Constructed edges are always canonical: `v1 < v2`, with the modes
/// swapped together with the endpoints.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Edge {
    pub v1: VertexId,
    pub v2: VertexId,
    pub mode1: Mode,
    pub mode2: Mode,
    pub weight: f64,
}

impl Edge {
    pub fn new(a: VertexId, b: VertexId, mode_a: Mode, mode_b: Mode, weight: f64) -> Result<Self> {
        if a == b {
            return Err(Error::SelfLoop(a));
        }
        let (v1, v2, mode1, mode2) = if a < b {
            (a, b, mode_a, mode_b)
        } else {
            (b, a, mode_b, mode_a)
        };
        if !weight.is_finite() {
            return Err(Error::NonFiniteWeight {
                v1,
                v2,
                mode1,
                mode2,
            });
        }
        Ok(Edge {
            v1,
            v2,
            mode1,
            mode2,
            weight,
        })
    }

    pub fn key(&self) -> (VertexId, VertexId, Mode, Mode) {
        (self.v1, self.v2, self.mode1, self.mode2)
    }

    pub fn pair(&self) -> (VertexId, VertexId) {
        (self.v1, self.v2)
    }

    pub fn is_mixed(&self) -> bool {
        self.mode1 != self.mode2
    }

    pub fn touches(&self, v: VertexId) -> bool {
        self.v1 == v || self.v2 == v
    }

    /// Mode delivered to `v`, if `v` is an endpoint.
    pub fn mode_at(&self, v: VertexId) -> Option<Mode> {
        if v == self.v1 {
            Some(self.mode1)
        } else if v == self.v2 {
            Some(self.mode2)
        } else {
            None
        }
    }

    pub fn other(&self, v: VertexId) -> Option<VertexId> {
        if v == self.v1 {
            Some(self.v2)
        } else if v == self.v2 {
            Some(self.v1)
        } else {
            None
        }
    }
}

/// A computational basis state, one mode digit per party.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Ket(pub Vec<Mode>);

impl Ket {
    /// Parses a string of decimal digits.
    pub fn parse(s: &str) -> Result<Self> {
        s.chars()
            .map(|c| c.to_digit(10))
            .collect::<Option<Vec<_>>>()
            .map(Ket)
            .ok_or_else(|| Error::InvalidKet(String::from(s)))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn digits(&self) -> &[Mode] {
        &self.0
    }
}

impl fmt::Display for Ket {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use fmt::Write;
        for &d in &self.0 {
            f.write_char(char::from_digit(d, 36).unwrap_or('?'))?;
        }
        Ok(())
    }
}

/// Edge-colored weighted multigraph.
///
/// Edges are canonical and sorted by `(v1, v2, mode1, mode2)`; the vertex set
/// is exactly the union of edge endpoints. Vertex ids need not be contiguous.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct NetworkGraph {
    edges: Vec<Edge>,
    vertices: Vec<VertexId>,
    dropped: Vec<Edge>,
}

impl NetworkGraph {
    /// Builds a graph from raw edges.
    ///
    /// Edges are canonicalized and sorted. Zero-weight edges are dropped and
    /// kept aside in [`dropped_edges`](Self::dropped_edges). Two edges with the
    /// same `(v1, v2, mode1, mode2)` are rejected.
    pub fn from_edges<I>(edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = Edge>,
    {
        let mut kept = Vec::new();
        let mut dropped = Vec::new();
        for e in edges {
            let e = Edge::new(e.v1, e.v2, e.mode1, e.mode2, e.weight)?;
            if e.weight == 0.0 {
                dropped.push(e);
            } else {
                kept.push(e);
            }
        }
        kept.sort_by_key(Edge::key);
        dropped.sort_by_key(Edge::key);
        if let Some(w) = kept.windows(2).find(|w| w[0].key() == w[1].key()) {
            return Err(Error::DuplicateEdge(w[1]));
        }
        let mut vertices: Vec<VertexId> = kept.iter().flat_map(|e| [e.v1, e.v2]).collect();
        vertices.sort_unstable();
        vertices.dedup();
        Ok(NetworkGraph {
            edges: kept,
            vertices,
            dropped,
        })
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    /// Sorted vertex ids.
    pub fn vertices(&self) -> &[VertexId] {
        &self.vertices
    }

    pub fn dropped_edges(&self) -> &[Edge] {
        &self.dropped
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn contains_vertex(&self, v: VertexId) -> bool {
        self.vertices.binary_search(&v).is_ok()
    }

    /// Rank of `v` in the sorted vertex list.
    pub fn index_of(&self, v: VertexId) -> Option<usize> {
        self.vertices.binary_search(&v).ok()
    }

    /// Multigraph degree: incident edges, parallel edges counted separately.
    pub fn degree(&self, v: VertexId) -> usize {
        self.edges.iter().filter(|e| e.touches(v)).count()
    }

    /// Returns a copy with one edge weight replaced.
    pub fn with_weight(&self, index: usize, weight: f64) -> Result<Self> {
        let mut edges = self.edges.clone();
        edges[index].weight = weight;
        NetworkGraph::from_edges(edges)
    }
}
