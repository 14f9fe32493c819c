//! Single-pass orchestration of every analysis stage.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::config::NetworkConfig;
use crate::graph::{Mode, NetworkGraph, VertexId};
use crate::matcher::{self, VerificationReport, DEFAULT_VERTEX_CAP};
use crate::roles::{identify_roles, RoleAssignment, RoleThresholds};
use crate::state::{analyze_state, check_compatibility, Finding, StateAnalysis};
use crate::strategy::{analyze_modes, plan, ComplexityTable, ModeAnalysis, StrategyPlan};
use crate::topology::{compute_metrics, TopologyMetrics};
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
pub struct AnalysisOptions {
    pub vertex_cap: usize,
    pub thresholds: RoleThresholds,
    pub complexity: ComplexityTable,
    /// Required mode per ancilla for post-selection. `None` leaves ancilla
    /// modes unconstrained.
    pub ancilla_condition: Option<BTreeMap<VertexId, Mode>>,
}

impl Default for AnalysisOptions {
    fn default() -> Self {
        AnalysisOptions {
            vertex_cap: DEFAULT_VERTEX_CAP,
            thresholds: RoleThresholds::default(),
            complexity: ComplexityTable::default(),
            ancilla_condition: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Verification {
    pub report: VerificationReport,
    /// Vertices the kets were projected onto, in digit order.
    pub restrict_to: Vec<VertexId>,
    pub matching_count: usize,
    /// Human-readable statement of the post-selection assumption.
    pub convention: String,
}

#[derive(Debug, Clone, PartialEq)]
pub struct AnalysisResult {
    pub metrics: TopologyMetrics,
    pub roles: RoleAssignment,
    pub modes: ModeAnalysis,
    pub plan: StrategyPlan,
    pub state: Option<StateAnalysis>,
    pub findings: Vec<Finding>,
    pub verification: Option<Verification>,
    pub warnings: Vec<String>,
}

/// Vertices whose modes form the communicated state: configured output
/// nodes minus ancillas, else the lowest non-ancilla detectors.
pub fn party_vertices(
    c: &NetworkConfig,
    r: &RoleAssignment,
    party_count: usize,
) -> BTreeSet<VertexId> {
    match c.out_nodes() {
        Some(out) => out
            .iter()
            .filter(|v| !r.ancillas.contains(v))
            .copied()
            .collect(),
        None => r.parties().into_iter().take(party_count).collect(),
    }
}

fn convention(
    restrict: &BTreeSet<VertexId>,
    cond: Option<&BTreeMap<VertexId, Mode>>,
    ancillas: &BTreeSet<VertexId>,
) -> String {
    let ids: Vec<String> = restrict.iter().map(|v| format!("{v}")).collect();
    let heralds = match cond {
        Some(c) if !c.is_empty() => {
            let pins: Vec<String> = c.iter().map(|(v, m)| format!("{v}={m}")).collect();
            format!("ancilla modes fixed at {}", pins.join(","))
        }
        _ if ancillas.is_empty() => String::from("no ancillas"),
        _ => String::from("ancilla modes unconstrained"),
    };
    format!("{heralds}; kets projected onto vertices {}", ids.join(","))
}

fn verify(
    g: &NetworkGraph,
    c: &NetworkConfig,
    r: &RoleAssignment,
    s: &StateAnalysis,
    o: &AnalysisOptions,
    warnings: &mut Vec<String>,
) -> Result<Option<Verification>> {
    let matchings = match matcher::enumerate_matchings(g, o.vertex_cap) {
        Ok(m) => m,
        Err(e) if e.is_enumeration_limit() => {
            warnings.push(format!("verification skipped: {e}"));
            return Ok(None);
        }
        Err(e) => return Err(e),
    };
    let restrict = party_vertices(c, r, s.party_count());
    if restrict.len() != s.party_count() {
        warnings.push(format!(
            "verification skipped: {} party vertices for {}-party target",
            restrict.len(),
            s.party_count()
        ));
        return Ok(None);
    }
    let cond = o.ancilla_condition.as_ref();
    let spectrum = matcher::ket_spectrum(g, &matchings, Some(&restrict), cond)?;
    let report = match matcher::verify_target(&spectrum, &s.target) {
        Ok(rep) => rep,
        Err(e @ Error::PartyMismatch { .. }) => {
            warnings.push(format!("verification skipped: {e}"));
            return Ok(None);
        }
        Err(e) => return Err(e),
    };
    Ok(Some(Verification {
        report,
        convention: convention(&restrict, cond, &r.ancillas),
        restrict_to: restrict.into_iter().collect(),
        matching_count: spectrum.matching_count,
    }))
}

/// Runs every stage once over `g` and `c`.
///
/// Hard validation problems are errors. Soft problems (dropped zero-weight
/// edges, role tensions, a graph too large or odd for matching) end up in
/// `warnings`.
pub fn analyze(g: &NetworkGraph, c: &NetworkConfig, o: &AnalysisOptions) -> Result<AnalysisResult> {
    c.validate()?;
    let metrics = compute_metrics(g);
    let roles = if g.is_empty() {
        c.validate_against(g)?;
        RoleAssignment::default()
    } else {
        identify_roles(g, c, &metrics, &o.thresholds)?
    };
    let modes = analyze_modes(g);
    let plan = plan(g, c, &modes, &roles, &o.complexity);
    let state = analyze_state(c)?;

    let mut warnings: Vec<String> = g
        .dropped_edges()
        .iter()
        .map(|e| {
            format!(
                "dropped zero-weight edge ({}, {}, {}, {})",
                e.v1, e.v2, e.mode1, e.mode2
            )
        })
        .collect();
    if g.is_empty() {
        warnings.push(String::from(
            "graph has no edges; role identification skipped",
        ));
    }
    warnings.extend(roles.notes.iter().cloned());

    let findings = state
        .as_ref()
        .map(|s| check_compatibility(s, &roles, g, &metrics, &plan))
        .unwrap_or_default();
    let verification = match &state {
        Some(s) => verify(g, c, &roles, s, o, &mut warnings)?,
        None => None,
    };

    Ok(AnalysisResult {
        metrics,
        roles,
        modes,
        plan,
        state,
        findings,
        verification,
        warnings,
    })
}
