use alloc::string::String;
use alloc::vec::Vec;

use crate::graph::{Edge, VertexId};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("self-loop on vertex {0}")]
    SelfLoop(VertexId),
    #[error("edge ({v1}, {v2}, {mode1}, {mode2}) has non-finite weight")]
    NonFiniteWeight {
        v1: VertexId,
        v2: VertexId,
        mode1: u32,
        mode2: u32,
    },
    #[error("duplicate edge ({}, {}, {}, {})", .0.v1, .0.v2, .0.mode1, .0.mode2)]
    DuplicateEdge(Edge),
    #[error("`{field}` references vertices absent from the graph: {}", join_ids(.ids))]
    UnknownVertices {
        field: &'static str,
        ids: Vec<VertexId>,
    },
    #[error("{amplitudes} amplitudes given for {kets} kets")]
    AmplitudeCount { kets: usize, amplitudes: usize },
    #[error("ket {ket:?} has length {len}, expected {expected}")]
    RaggedKets {
        ket: String,
        len: usize,
        expected: usize,
    },
    #[error("ket {0:?} contains a character that is not a decimal digit")]
    InvalidKet(String),
    #[error("amplitude #{0} is not finite")]
    NonFiniteAmplitude(usize),
    #[error("{0} vertices: no perfect matchings possible")]
    OddVertexCount(usize),
    #[error(
        "{count} vertices exceed the matching enumeration cap of {cap}; raise the cap to enumerate"
    )]
    EnumerationCap { count: usize, cap: usize },
    #[error("spectrum kets have {spectrum} parties but target kets have {target}")]
    PartyMismatch { spectrum: usize, target: usize },
    #[error("graph has no vertices")]
    EmptyGraph,
}

impl Error {
    /// Errors that come from the matcher's domain or resource limits rather
    /// than from malformed input.
    pub fn is_enumeration_limit(&self) -> bool {
        matches!(
            self,
            Error::OddVertexCount(_) | Error::EnumerationCap { .. }
        )
    }
}

fn join_ids(ids: &[VertexId]) -> String {
    use core::fmt::Write;
    let mut out = String::new();
    for (i, id) in ids.iter().enumerate() {
        if i > 0 {
            out.push_str(", ");
        }
        let _ = write!(out, "{id}");
    }
    out
}
