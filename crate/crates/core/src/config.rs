//! Role and target-state configuration.

use alloc::string::String;
use alloc::vec::Vec;

use crate::graph::{Ket, NetworkGraph, VertexId};
use crate::{Error, Result};

/// Role declarations and target state for a network.
///
/// Absent keys stay `None`. An empty role list is kept as given but counts as
/// absent for role identification and strategy selection, since optimizer
/// configs routinely carry `"single_emitters": []`.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct NetworkConfig {
    pub single_emitters: Option<Vec<VertexId>>,
    pub out_nodes: Option<Vec<VertexId>>,
    pub anc_detectors: Option<Vec<VertexId>>,
    pub target_state: Option<Vec<String>>,
    pub amplitudes: Option<Vec<f64>>,
    pub name: Option<String>,
    /// Unrecognized keys with their raw JSON text, in document order.
    pub extra: Vec<(String, String)>,
}

fn non_empty(list: &Option<Vec<VertexId>>) -> Option<&[VertexId]> {
    list.as_deref().filter(|l| !l.is_empty())
}

impl NetworkConfig {
    pub fn single_emitters(&self) -> Option<&[VertexId]> {
        non_empty(&self.single_emitters)
    }

    pub fn out_nodes(&self) -> Option<&[VertexId]> {
        non_empty(&self.out_nodes)
    }

    pub fn anc_detectors(&self) -> Option<&[VertexId]> {
        non_empty(&self.anc_detectors)
    }

    /// Target kets, if a non-empty target state is configured.
    pub fn kets(&self) -> Result<Option<Vec<Ket>>> {
        match self.target_state.as_deref() {
            None | Some([]) => Ok(None),
            Some(raw) => raw
                .iter()
                .map(|s| Ket::parse(s))
                .collect::<Result<_>>()
                .map(Some),
        }
    }

    /// Checks the config on its own: ket alphabet and lengths, amplitude count.
    pub fn validate(&self) -> Result<()> {
        let kets = self.target_state.as_deref().unwrap_or(&[]);
        if let Some(first) = kets.first() {
            let expected = first.chars().count();
            for k in kets {
                Ket::parse(k)?;
                let len = k.chars().count();
                if len != expected {
                    return Err(Error::RaggedKets {
                        ket: k.clone(),
                        len,
                        expected,
                    });
                }
            }
        }
        if let Some(amps) = self.amplitudes.as_deref() {
            if !amps.is_empty() && amps.len() != kets.len() {
                return Err(Error::AmplitudeCount {
                    kets: kets.len(),
                    amplitudes: amps.len(),
                });
            }
            if let Some(i) = amps.iter().position(|a| !a.is_finite()) {
                return Err(Error::NonFiniteAmplitude(i));
            }
        }
        Ok(())
    }

    /// Checks that every declared vertex exists in `graph`.
    pub fn validate_against(&self, graph: &NetworkGraph) -> Result<()> {
        let fields = [
            ("single_emitters", &self.single_emitters),
            ("out_nodes", &self.out_nodes),
            ("anc_detectors", &self.anc_detectors),
        ];
        for (field, list) in fields {
            let mut missing: Vec<VertexId> = list
                .iter()
                .flatten()
                .copied()
                .filter(|&v| !graph.contains_vertex(v))
                .collect();
            if !missing.is_empty() {
                missing.sort_unstable();
                missing.dedup();
                return Err(Error::UnknownVertices {
                    field,
                    ids: missing,
                });
            }
        }
        Ok(())
    }
}
