//! File formats, reports and the command line around [`qnet_core`].

pub mod cli;
mod error;
pub mod ingest;
pub mod report;

pub use error::{Error, Result};
pub use ingest::{load_bundle, parse_config, parse_graph, serialize_graph, Bundle, Source};
pub use report::{generate_report, run_complete_analysis};
