//! Functional role identification.
//!
//! Roles come from a three-tier cascade. Explicit role lists in the config
//! win; without them the target-state length picks the party vertices; with
//! neither, degree heuristics decide. A vertex may hold several roles.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::config::NetworkConfig;
use crate::graph::{NetworkGraph, VertexId};
use crate::topology::TopologyMetrics;
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Role {
    Source,
    Detector,
    BeamSplitter,
    Ancilla,
}

impl Role {
    pub fn as_str(self) -> &'static str {
        match self {
            Role::Source => "source",
            Role::Detector => "detector",
            Role::BeamSplitter => "beam_splitter",
            Role::Ancilla => "ancilla",
        }
    }
}

impl fmt::Display for Role {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Which tier of the cascade made an assignment.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Tier {
    Config,
    TargetState,
    Heuristic,
}

impl Tier {
    pub fn as_str(self) -> &'static str {
        match self {
            Tier::Config => "config",
            Tier::TargetState => "target-state",
            Tier::Heuristic => "heuristic",
        }
    }
}

impl fmt::Display for Tier {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Tunable constants for the structural fallback.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RoleThresholds {
    /// A vertex is a hub (beam-splitter candidate) when its multigraph degree
    /// is strictly greater than `hub_factor * mean_degree`.
    pub hub_factor: f64,
}

impl Default for RoleThresholds {
    fn default() -> Self {
        RoleThresholds { hub_factor: 1.0 }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct BeamSplitters {
    pub nodes: BTreeSet<VertexId>,
    /// Ancillas incident to parallel multi-mode edges: beam splitter and
    /// ancilla detector at once.
    pub dual_role: BTreeSet<VertexId>,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct RoleAssignment {
    pub sources: BTreeSet<VertexId>,
    pub detectors: BTreeSet<VertexId>,
    pub beam_splitters: BTreeSet<VertexId>,
    pub ancillas: BTreeSet<VertexId>,
    pub dual_role: BTreeSet<VertexId>,
    /// Tier that assigned each role of each vertex.
    pub provenance: BTreeMap<VertexId, BTreeMap<Role, Tier>>,
    pub notes: Vec<String>,
}

impl RoleAssignment {
    fn assign(&mut self, v: VertexId, role: Role, tier: Tier) {
        let set = match role {
            Role::Source => &mut self.sources,
            Role::Detector => &mut self.detectors,
            Role::BeamSplitter => &mut self.beam_splitters,
            Role::Ancilla => &mut self.ancillas,
        };
        set.insert(v);
        self.provenance
            .entry(v)
            .or_default()
            .entry(role)
            .or_insert(tier);
    }

    pub fn set(&self, role: Role) -> &BTreeSet<VertexId> {
        match role {
            Role::Source => &self.sources,
            Role::Detector => &self.detectors,
            Role::BeamSplitter => &self.beam_splitters,
            Role::Ancilla => &self.ancillas,
        }
    }

    pub fn roles_of(&self, v: VertexId) -> impl Iterator<Item = (Role, Tier)> + '_ {
        self.provenance
            .get(&v)
            .into_iter()
            .flat_map(|m| m.iter().map(|(&r, &t)| (r, t)))
    }

    /// Detectors that are not ancillas: the communicating parties.
    pub fn parties(&self) -> BTreeSet<VertexId> {
        self.detectors.difference(&self.ancillas).copied().collect()
    }
}

fn hubs(g: &NetworkGraph, m: &TopologyMetrics, t: &RoleThresholds) -> BTreeSet<VertexId> {
    let cut = m.mean_degree * t.hub_factor;
    g.vertices()
        .iter()
        .copied()
        .filter(|v| m.vertex_degrees.get(v).copied().unwrap_or(0) as f64 > cut)
        .collect()
}

fn parallel_vertices(g: &NetworkGraph) -> BTreeSet<VertexId> {
    // Edges are sorted, so parallel edges are adjacent.
    g.edges()
        .windows(2)
        .filter(|w| w[0].pair() == w[1].pair())
        .flat_map(|w| [w[0].v1, w[0].v2])
        .collect()
}

/// Beam-splitter vertices.
///
/// Single-emitter networks have none. Networks with ancilla detectors and no
/// single emitters use the ancillas (all of them when parties are declared,
/// otherwise those on parallel multi-mode edges). Without role lists, hubs of
/// above-mean degree are used.
pub fn identify_beam_splitters(
    g: &NetworkGraph,
    c: &NetworkConfig,
    m: &TopologyMetrics,
    t: &RoleThresholds,
) -> BeamSplitters {
    if c.single_emitters().is_some() {
        return BeamSplitters::default();
    }
    if let Some(anc) = c.anc_detectors() {
        let parallel = parallel_vertices(g);
        let dual_role: BTreeSet<_> = anc
            .iter()
            .copied()
            .filter(|v| parallel.contains(v))
            .collect();
        let nodes = if c.out_nodes().is_some() {
            anc.iter().copied().collect()
        } else {
            dual_role.clone()
        };
        return BeamSplitters { nodes, dual_role };
    }
    BeamSplitters {
        nodes: hubs(g, m, t),
        dual_role: BTreeSet::new(),
    }
}

pub fn identify_roles(
    g: &NetworkGraph,
    c: &NetworkConfig,
    m: &TopologyMetrics,
    t: &RoleThresholds,
) -> Result<RoleAssignment> {
    if g.vertex_count() == 0 {
        return Err(Error::EmptyGraph);
    }
    c.validate_against(g)?;

    let all: BTreeSet<VertexId> = g.vertices().iter().copied().collect();
    let out: Option<BTreeSet<VertexId>> = c.out_nodes().map(|l| l.iter().copied().collect());
    let anc: BTreeSet<VertexId> = c.anc_detectors().unwrap_or(&[]).iter().copied().collect();
    let mut r = RoleAssignment::default();

    for &v in &anc {
        r.assign(v, Role::Ancilla, Tier::Config);
        r.assign(v, Role::Detector, Tier::Config);
    }

    if let Some(emitters) = c.single_emitters() {
        for &v in emitters {
            r.assign(v, Role::Source, Tier::Config);
        }
        let detectors: BTreeSet<VertexId> = match &out {
            Some(out) => out.clone(),
            None => all.difference(&r.sources).copied().collect(),
        };
        for v in detectors {
            r.assign(v, Role::Detector, Tier::Config);
        }
    } else if let Some(out) = &out {
        // Parties emit and detect. With ancillas declared this is the
        // pair-source (SPDC) layout; otherwise non-party vertices are sources.
        for &v in out {
            r.assign(v, Role::Detector, Tier::Config);
        }
        if anc.is_empty() {
            for &v in all.difference(out) {
                r.assign(v, Role::Source, Tier::Config);
            }
        } else {
            for &v in out {
                r.assign(v, Role::Source, Tier::Config);
            }
        }
    } else if let Some(kets) = c.kets()? {
        let width = kets.first().map_or(0, |k| k.len());
        let mut free = all.difference(&anc).copied();
        for v in free.by_ref().take(width) {
            r.assign(v, Role::Detector, Tier::TargetState);
        }
        for v in free {
            r.assign(v, Role::Source, Tier::TargetState);
        }
        if width > all.len() - anc.len() {
            r.notes.push(format!(
                "target state has {width} parties but only {} non-ancilla vertices",
                all.len() - anc.len()
            ));
        }
    } else {
        let hub_set = hubs(g, m, t);
        let free: Vec<VertexId> = all.difference(&anc).copied().collect();
        let min_degree = free
            .iter()
            .map(|v| m.vertex_degrees.get(v).copied().unwrap_or(0))
            .min()
            .unwrap_or(0);
        for &v in &free {
            let d = m.vertex_degrees.get(&v).copied().unwrap_or(0);
            if d == min_degree {
                r.assign(v, Role::Detector, Tier::Heuristic);
            } else if !hub_set.contains(&v) {
                r.assign(v, Role::Source, Tier::Heuristic);
            }
        }
    }

    let bs = identify_beam_splitters(g, c, m, t);
    let bs_tier = if c.single_emitters().is_some() || (c.anc_detectors().is_some() && out.is_some())
    {
        Tier::Config
    } else {
        Tier::Heuristic
    };
    for &v in &bs.nodes {
        r.assign(v, Role::BeamSplitter, bs_tier);
    }
    r.dual_role = bs.dual_role;

    for &v in &all {
        if !r.provenance.contains_key(&v) {
            r.assign(v, Role::Detector, Tier::Heuristic);
            r.notes.push(format!(
                "vertex {v} has no configured role; treated as a detector"
            ));
        }
    }

    if c.single_emitters().is_none() && !anc.is_empty() {
        if let Some(note) = hub_tension(m, &r) {
            r.notes.push(note);
        }
    }
    Ok(r)
}

/// Flags a single highest-degree vertex that is configured as a party rather
/// than a beam splitter. Such hubs route like beam splitters even though the
/// config does not say so.
fn hub_tension(m: &TopologyMetrics, r: &RoleAssignment) -> Option<String> {
    let max = m.max_degree();
    let mut top = m.vertex_degrees.iter().filter(|(_, &d)| d == max);
    let (&hub, _) = top.next()?;
    if top.next().is_some() || r.beam_splitters.contains(&hub) || r.ancillas.contains(&hub) {
        return None;
    }
    Some(format!(
        "vertex {hub} is the highest-degree hub (degree {max}) but is configured as a party, not a beam splitter"
    ))
}
