//! Mode analysis, optical implementation strategy, and complexity grade.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;
use core::fmt;

use crate::config::NetworkConfig;
use crate::graph::{Mode, NetworkGraph};
use crate::roles::RoleAssignment;

/// Tolerance for treating `|w|` as exactly one.
pub const PERFECT_TOLERANCE: f64 = 1e-9;
/// Largest magnitude still counted as a weak coupling.
pub const WEAK_LIMIT: f64 = 0.2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum WeightClass {
    Perfect,
    Intermediate,
    Weak,
}

impl WeightClass {
    pub fn of(weight: f64) -> Self {
        let a = weight.abs();
        if (a - 1.0).abs() <= PERFECT_TOLERANCE {
            WeightClass::Perfect
        } else if a <= WEAK_LIMIT {
            WeightClass::Weak
        } else {
            WeightClass::Intermediate
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            WeightClass::Perfect => "perfect",
            WeightClass::Intermediate => "intermediate",
            WeightClass::Weak => "weak",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ModeAnalysis {
    pub unique_modes: BTreeSet<Mode>,
    pub mixed_mode_edges: usize,
    /// `(min |w|, max |w|)`; `None` for an empty graph.
    pub weight_extremes: Option<(f64, f64)>,
    pub perfect_correlations: usize,
    pub negative_edges: usize,
    pub weight_classes: BTreeMap<WeightClass, usize>,
    /// Distinct `|w|` values, ascending, merged within 1e-9.
    pub magnitudes: Vec<f64>,
}

pub fn analyze_modes(g: &NetworkGraph) -> ModeAnalysis {
    let edges = g.edges();
    let unique_modes = edges.iter().flat_map(|e| [e.mode1, e.mode2]).collect();
    let mut weight_classes = BTreeMap::new();
    for e in edges {
        *weight_classes.entry(WeightClass::of(e.weight)).or_insert(0) += 1;
    }
    let mut magnitudes: Vec<f64> = edges.iter().map(|e| e.weight.abs()).collect();
    magnitudes.sort_by(f64::total_cmp);
    magnitudes.dedup_by(|b, a| (*b - *a).abs() <= PERFECT_TOLERANCE);
    ModeAnalysis {
        unique_modes,
        mixed_mode_edges: edges.iter().filter(|e| e.is_mixed()).count(),
        weight_extremes: magnitudes
            .first()
            .zip(magnitudes.last())
            .map(|(&a, &b)| (a, b)),
        perfect_correlations: weight_classes
            .get(&WeightClass::Perfect)
            .copied()
            .unwrap_or(0),
        negative_edges: edges.iter().filter(|e| e.weight < 0.0).count(),
        weight_classes,
        magnitudes,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Strategy {
    SinglePhoton,
    SpdcHeralded,
    Adaptive,
}

impl Strategy {
    pub fn as_str(self) -> &'static str {
        match self {
            Strategy::SinglePhoton => "single_photon",
            Strategy::SpdcHeralded => "spdc_heralded",
            Strategy::Adaptive => "adaptive",
        }
    }
}

impl fmt::Display for Strategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Complexity {
    Simple,
    Moderate,
    Complex,
}

impl Complexity {
    pub fn as_str(self) -> &'static str {
        match self {
            Complexity::Simple => "simple",
            Complexity::Moderate => "moderate",
            Complexity::Complex => "complex",
        }
    }
}

impl fmt::Display for Complexity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Scoring table for [`assess_complexity`]: one point for each quantity above
/// its limit, plus one point when any ancilla is present.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ComplexityTable {
    pub vertex_limit: usize,
    pub mode_limit: usize,
    pub edge_limit: usize,
    /// Scores at or above this are `moderate`.
    pub moderate_from: usize,
    /// Scores at or above this are `complex`.
    pub complex_from: usize,
}

impl Default for ComplexityTable {
    fn default() -> Self {
        ComplexityTable {
            vertex_limit: 6,
            mode_limit: 2,
            edge_limit: 12,
            moderate_from: 2,
            complex_from: 3,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct StrategyPlan {
    pub strategy: Strategy,
    pub complexity: Complexity,
    pub heralding_required: bool,
}

pub fn select_strategy(c: &NetworkConfig) -> Strategy {
    if c.single_emitters().is_some() {
        Strategy::SinglePhoton
    } else if c.out_nodes().is_some() && c.anc_detectors().is_some() {
        Strategy::SpdcHeralded
    } else {
        Strategy::Adaptive
    }
}

pub fn complexity_score(
    vertices: usize,
    modes: usize,
    ancillas: usize,
    edges: usize,
    t: &ComplexityTable,
) -> usize {
    usize::from(vertices > t.vertex_limit)
        + usize::from(modes > t.mode_limit)
        + usize::from(ancillas > 0)
        + usize::from(edges > t.edge_limit)
}

pub fn grade(score: usize, t: &ComplexityTable) -> Complexity {
    if score >= t.complex_from {
        Complexity::Complex
    } else if score >= t.moderate_from {
        Complexity::Moderate
    } else {
        Complexity::Simple
    }
}

pub fn assess_complexity(
    g: &NetworkGraph,
    m: &ModeAnalysis,
    r: &RoleAssignment,
    t: &ComplexityTable,
) -> Complexity {
    grade(
        complexity_score(
            g.vertex_count(),
            m.unique_modes.len(),
            r.ancillas.len(),
            g.edge_count(),
            t,
        ),
        t,
    )
}

pub fn plan(
    g: &NetworkGraph,
    c: &NetworkConfig,
    m: &ModeAnalysis,
    r: &RoleAssignment,
    t: &ComplexityTable,
) -> StrategyPlan {
    let strategy = select_strategy(c);
    StrategyPlan {
        strategy,
        complexity: assess_complexity(g, m, r, t),
        heralding_required: strategy == Strategy::SpdcHeralded || !r.ancillas.is_empty(),
    }
}
