//! Target-state structure, entanglement class, and architecture compatibility.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::config::NetworkConfig;
use crate::graph::{Ket, NetworkGraph};
use crate::roles::RoleAssignment;
use crate::strategy::{Strategy, StrategyPlan};
use crate::topology::TopologyMetrics;
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
pub struct TargetState {
    pub kets: Vec<Ket>,
    /// Configured amplitudes, or `1/sqrt(N)` each when none are given.
    pub coefficients: Vec<f64>,
    pub party_count: usize,
    /// One more than the largest digit in any ket.
    pub dimension: usize,
}

impl TargetState {
    /// Builds a target state from kets and optional amplitudes. An empty
    /// amplitude list means equal weights.
    pub fn new(kets: Vec<Ket>, amplitudes: Option<&[f64]>) -> Result<Self> {
        let party_count = kets.first().map_or(0, Ket::len);
        if let Some(k) = kets.iter().find(|k| k.len() != party_count) {
            return Err(Error::RaggedKets {
                ket: format!("{k}"),
                len: k.len(),
                expected: party_count,
            });
        }
        let coefficients = match amplitudes {
            Some(a) if !a.is_empty() => {
                if a.len() != kets.len() {
                    return Err(Error::AmplitudeCount {
                        kets: kets.len(),
                        amplitudes: a.len(),
                    });
                }
                a.to_vec()
            }
            _ => {
                let c = 1.0 / libm::sqrt(kets.len() as f64);
                alloc::vec![c; kets.len()]
            }
        };
        let dimension = kets
            .iter()
            .flat_map(|k| k.digits().iter().copied())
            .max()
            .map_or(0, |d| d as usize + 1);
        Ok(TargetState {
            kets,
            coefficients,
            party_count,
            dimension,
        })
    }

    pub fn from_config(c: &NetworkConfig) -> Result<Option<Self>> {
        match c.kets()? {
            None => Ok(None),
            Some(kets) => TargetState::new(kets, c.amplitudes.as_deref()).map(Some),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum EntanglementClass {
    W,
    Ghz,
    Bell,
    Other,
}

impl EntanglementClass {
    pub fn as_str(self) -> &'static str {
        match self {
            EntanglementClass::W => "W",
            EntanglementClass::Ghz => "GHZ",
            EntanglementClass::Bell => "Bell",
            EntanglementClass::Other => "other",
        }
    }
}

impl fmt::Display for EntanglementClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct StateAnalysis {
    pub target: TargetState,
    /// Distinct per-ket photon counts (non-zero digits).
    pub photon_numbers: BTreeSet<usize>,
    pub uniform_photon_number: Option<usize>,
    pub entanglement_class: EntanglementClass,
    pub dimension: usize,
}

impl StateAnalysis {
    pub fn party_count(&self) -> usize {
        self.target.party_count
    }

    pub fn max_photon_number(&self) -> usize {
        self.photon_numbers.iter().copied().max().unwrap_or(0)
    }
}

/// Photon count of a ket: each non-zero digit is one photon in that mode.
pub fn photon_number(k: &Ket) -> usize {
    k.digits().iter().filter(|&&d| d != 0).count()
}

/// Classifies a ket set. Checked in order Bell, W, GHZ so the classes are
/// disjoint: two-party two-ket states are always Bell.
pub fn classify(kets: &[Ket]) -> EntanglementClass {
    let parties = kets.first().map_or(0, Ket::len);
    let distinct: BTreeSet<&Ket> = kets.iter().collect();
    let all_distinct = distinct.len() == kets.len();

    if parties == 2 && kets.len() == 2 {
        return EntanglementClass::Bell;
    }
    let single_excitation = |k: &Ket| {
        k.digits().iter().filter(|&&d| d == 1).count() == 1
            && k.digits().iter().all(|&d| d == 0 || d == 1)
    };
    if parties >= 3 && kets.len() == parties && all_distinct && kets.iter().all(single_excitation) {
        return EntanglementClass::W;
    }
    if kets.len() >= 2 {
        let uniform: Option<BTreeSet<u32>> = kets
            .iter()
            .map(|k| {
                let first = *k.digits().first()?;
                k.digits().iter().all(|&d| d == first).then_some(first)
            })
            .collect();
        if uniform.is_some_and(|digits| digits.len() == kets.len()) {
            return EntanglementClass::Ghz;
        }
    }
    EntanglementClass::Other
}

/// Analyzes the configured target state; `None` when the config has none.
pub fn analyze_state(c: &NetworkConfig) -> Result<Option<StateAnalysis>> {
    let Some(target) = TargetState::from_config(c)? else {
        return Ok(None);
    };
    let photon_numbers: BTreeSet<usize> = target.kets.iter().map(photon_number).collect();
    let uniform_photon_number = if photon_numbers.len() == 1 {
        photon_numbers.first().copied()
    } else {
        None
    };
    let entanglement_class = classify(&target.kets);
    let dimension = target.dimension;
    Ok(Some(StateAnalysis {
        target,
        photon_numbers,
        uniform_photon_number,
        entanglement_class,
        dimension,
    }))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Check {
    PartyCount,
    PhotonNumber,
    Connectivity,
    Heralding,
}

impl Check {
    pub fn as_str(self) -> &'static str {
        match self {
            Check::PartyCount => "party_count",
            Check::PhotonNumber => "photon_number",
            Check::Connectivity => "connectivity",
            Check::Heralding => "heralding",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Pass,
    Warn,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Warn => "warn",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Finding {
    pub check: Check,
    pub status: Status,
    pub detail: String,
}

impl Finding {
    fn new(check: Check, ok: bool, detail: String) -> Self {
        Finding {
            check,
            status: if ok { Status::Pass } else { Status::Warn },
            detail,
        }
    }
}

/// Every party position takes at least two values across the kets.
fn correlates_all_parties(kets: &[Ket]) -> bool {
    let parties = kets.first().map_or(0, Ket::len);
    parties > 0
        && (0..parties).all(|i| {
            let first = kets[0].digits()[i];
            kets.iter().any(|k| k.digits()[i] != first)
        })
}

/// Checks whether the identified architecture can plausibly produce the state.
pub fn check_compatibility(
    s: &StateAnalysis,
    r: &RoleAssignment,
    g: &NetworkGraph,
    m: &TopologyMetrics,
    plan: &StrategyPlan,
) -> Vec<Finding> {
    let mut out = Vec::with_capacity(4);

    let parties = r.parties().len();
    out.push(Finding::new(
        Check::PartyCount,
        s.party_count() <= parties,
        format!(
            "{} parties required, {parties} non-ancilla detectors",
            s.party_count()
        ),
    ));

    let photons = s.max_photon_number();
    out.push(match plan.strategy {
        Strategy::SinglePhoton => Finding::new(
            Check::PhotonNumber,
            photons <= r.sources.len(),
            format!(
                "{photons} photons per ket, {} single-photon sources",
                r.sources.len()
            ),
        ),
        _ => Finding::new(
            Check::PhotonNumber,
            true,
            format!(
                "{photons} photons per ket; {} pair sources emit up to {} photons",
                g.edge_count(),
                2 * g.edge_count()
            ),
        ),
    });

    if correlates_all_parties(&s.target.kets) {
        out.push(Finding::new(
            Check::Connectivity,
            m.component_count == 1,
            format!(
                "all parties correlated; graph has {} component(s)",
                m.component_count
            ),
        ));
    } else {
        out.push(Finding::new(
            Check::Connectivity,
            true,
            String::from("not every party is correlated; connectivity not required"),
        ));
    }

    if plan.heralding_required {
        out.push(Finding::new(
            Check::Heralding,
            !r.ancillas.is_empty(),
            format!("heralding required; {} ancilla detectors", r.ancillas.len()),
        ));
    } else {
        out.push(Finding::new(
            Check::Heralding,
            true,
            String::from("heralding not required"),
        ));
    }
    out
}
