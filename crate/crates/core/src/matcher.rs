//! Perfect matchings of the edge-colored multigraph.
//!
//! Each perfect matching is one way for every path to receive exactly one
//! photon: it contributes the ket read off the modes it delivers, with the
//! product of its edge weights as amplitude. Summing over matchings gives the
//! state the network emits under post-selection on one photon per path.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec;
use alloc::vec::Vec;

use crate::graph::{Ket, Mode, NetworkGraph, VertexId};
use crate::state::TargetState;
use crate::{Error, Result};

pub const DEFAULT_VERTEX_CAP: usize = 16;
/// Amplitudes at or below this magnitude count as zero.
pub const REACH_TOLERANCE: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq)]
pub struct Matching {
    /// Indices into `NetworkGraph::edges`, ascending.
    pub edges: Vec<usize>,
    /// Mode delivered to each vertex, in sorted vertex order.
    pub ket: Ket,
    pub amplitude: f64,
}

/// Enumerates every perfect matching, parallel edges counted as distinct.
///
/// Output is ordered lexicographically by edge-index list.
pub fn enumerate_matchings(g: &NetworkGraph, vertex_cap: usize) -> Result<Vec<Matching>> {
    let n = g.vertex_count();
    if n % 2 == 1 {
        return Err(Error::OddVertexCount(n));
    }
    if n > vertex_cap {
        return Err(Error::EnumerationCap {
            count: n,
            cap: vertex_cap,
        });
    }

    // Ends of each edge as vertex ranks; both endpoints are always present.
    let ends: Vec<(usize, usize)> = g
        .edges()
        .iter()
        .map(|e| (g.index_of(e.v1).unwrap_or(0), g.index_of(e.v2).unwrap_or(0)))
        .collect();
    let mut incident = vec![Vec::new(); n];
    for (i, &(a, b)) in ends.iter().enumerate() {
        incident[a].push(i);
        incident[b].push(i);
    }

    let mut found = Vec::new();
    let mut covered = vec![false; n];
    let mut chosen = Vec::with_capacity(n / 2);
    search(&incident, &ends, &mut covered, &mut chosen, &mut found);
    found.sort();

    Ok(found
        .into_iter()
        .map(|edges| {
            let mut modes = vec![0; n];
            let mut amplitude = 1.0;
            for &i in &edges {
                let e = &g.edges()[i];
                let (a, b) = ends[i];
                modes[a] = e.mode1;
                modes[b] = e.mode2;
                amplitude *= e.weight;
            }
            Matching {
                edges,
                ket: Ket(modes),
                amplitude,
            }
        })
        .collect())
}

fn search(
    incident: &[Vec<usize>],
    ends: &[(usize, usize)],
    covered: &mut [bool],
    chosen: &mut Vec<usize>,
    found: &mut Vec<Vec<usize>>,
) {
    let Some(u) = covered.iter().position(|c| !c) else {
        let mut m = chosen.clone();
        m.sort_unstable();
        found.push(m);
        return;
    };
    covered[u] = true;
    for &i in &incident[u] {
        let (a, b) = ends[i];
        let w = if a == u { b } else { a };
        if covered[w] {
            continue;
        }
        covered[w] = true;
        chosen.push(i);
        search(incident, ends, covered, chosen, found);
        chosen.pop();
        covered[w] = false;
    }
    covered[u] = false;
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct KetSpectrum {
    /// Summed amplitude per projected ket.
    pub entries: BTreeMap<Ket, f64>,
    /// Matchings that survived the ancilla condition.
    pub matching_count: usize,
    /// Vertices the kets are projected onto, ascending.
    pub positions: Vec<VertexId>,
}

impl KetSpectrum {
    pub fn amplitude(&self, ket: &Ket) -> f64 {
        self.entries.get(ket).copied().unwrap_or(0.0)
    }

    /// Kets with non-negligible summed amplitude.
    pub fn nonzero(&self) -> impl Iterator<Item = (&Ket, f64)> {
        self.entries
            .iter()
            .filter(|(_, a)| a.abs() > REACH_TOLERANCE)
            .map(|(k, &a)| (k, a))
    }
}

fn check_known<'a>(
    g: &NetworkGraph,
    field: &'static str,
    ids: impl Iterator<Item = &'a VertexId>,
) -> Result<()> {
    let missing: Vec<VertexId> = ids.copied().filter(|&v| !g.contains_vertex(v)).collect();
    if missing.is_empty() {
        Ok(())
    } else {
        Err(Error::UnknownVertices {
            field,
            ids: missing,
        })
    }
}

/// Sums matching amplitudes per ket.
///
/// With `ancilla_condition`, matchings delivering any other mode to a listed
/// vertex are discarded first. Kets are then projected onto `restrict_to`
/// (all vertices when `None`).
pub fn ket_spectrum(
    g: &NetworkGraph,
    matchings: &[Matching],
    restrict_to: Option<&BTreeSet<VertexId>>,
    ancilla_condition: Option<&BTreeMap<VertexId, Mode>>,
) -> Result<KetSpectrum> {
    if let Some(r) = restrict_to {
        check_known(g, "restrict_to", r.iter())?;
    }
    if let Some(c) = ancilla_condition {
        check_known(g, "ancilla_condition", c.keys())?;
    }
    let positions: Vec<VertexId> = match restrict_to {
        Some(r) => r.iter().copied().collect(),
        None => g.vertices().to_vec(),
    };
    let ranks: Vec<usize> = positions.iter().filter_map(|&v| g.index_of(v)).collect();
    let condition: Vec<(usize, Mode)> = ancilla_condition
        .into_iter()
        .flatten()
        .filter_map(|(&v, &m)| g.index_of(v).map(|i| (i, m)))
        .collect();

    let mut spectrum = KetSpectrum {
        positions,
        ..Default::default()
    };
    for m in matchings {
        if condition.iter().any(|&(i, mode)| m.ket.digits()[i] != mode) {
            continue;
        }
        spectrum.matching_count += 1;
        let ket = Ket(ranks.iter().map(|&i| m.ket.digits()[i]).collect());
        *spectrum.entries.entry(ket).or_insert(0.0) += m.amplitude;
    }
    Ok(spectrum)
}

#[derive(Debug, Clone, PartialEq)]
pub struct KetCheck {
    pub ket: Ket,
    pub amplitude: f64,
    pub reachable: bool,
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct VerificationReport {
    pub targets: Vec<KetCheck>,
    /// Non-target kets with non-zero amplitude.
    pub extraneous: Vec<(Ket, f64)>,
}

impl VerificationReport {
    pub fn all_reachable(&self) -> bool {
        self.targets.iter().all(|k| k.reachable)
    }

    pub fn unreachable(&self) -> impl Iterator<Item = &Ket> {
        self.targets.iter().filter(|k| !k.reachable).map(|k| &k.ket)
    }
}

pub fn verify_target(spectrum: &KetSpectrum, target: &TargetState) -> Result<VerificationReport> {
    if let Some(k) = spectrum
        .entries
        .keys()
        .find(|k| k.len() != target.party_count)
    {
        return Err(Error::PartyMismatch {
            spectrum: k.len(),
            target: target.party_count,
        });
    }
    let targets = target
        .kets
        .iter()
        .map(|k| {
            let amplitude = spectrum.amplitude(k);
            KetCheck {
                ket: k.clone(),
                amplitude,
                reachable: amplitude.abs() > REACH_TOLERANCE,
            }
        })
        .collect();
    let wanted: BTreeSet<&Ket> = target.kets.iter().collect();
    let extraneous = spectrum
        .nonzero()
        .filter(|(k, _)| !wanted.contains(k))
        .map(|(k, a)| (k.clone(), a))
        .collect();
    Ok(VerificationReport {
        targets,
        extraneous,
    })
}
