//! Analysis core for quantum-optics experiment graphs as emitted by
//! graph-based experiment optimizers such as PyTheus.
//!
//! A network is an edge-colored, weighted multigraph: vertices are photon
//! paths, each edge is a correlated photon-pair source, and the color of an
//! edge end is the optical mode delivered to that path. This crate turns such
//! a graph plus its role configuration into topology metrics, functional
//! roles, a mode/strategy plan, a target-state analysis, a perfect-matching
//! verification, and two drawable [`Scene`](render::Scene)s.
//!
//! The crate is `no_std` and only needs `alloc`. File formats, reports and
//! the command line live in the companion `qnet` crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

mod error;

pub mod analysis;
pub mod config;
pub mod graph;
pub mod matcher;
pub mod render;
pub mod roles;
pub mod state;
pub mod strategy;
pub mod topology;

pub use analysis::{analyze, AnalysisOptions, AnalysisResult, Verification};
pub use config::NetworkConfig;
pub use error::Error;
pub use graph::{Edge, Ket, Mode, NetworkGraph, VertexId};

pub type Result<T, E = Error> = core::result::Result<T, E>;
