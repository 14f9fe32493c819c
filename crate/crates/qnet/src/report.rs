//! Text report and the three-artifact pipeline.

use std::fmt::Write;
use std::path::{Path, PathBuf};

use qnet_core::render::{render_native_graph, render_optical_table, serialize_svg, ModePalette};
use qnet_core::roles::Role;
use qnet_core::strategy::WeightClass;
use qnet_core::{analyze, AnalysisOptions, AnalysisResult, NetworkGraph, VertexId};

use crate::error::{Error, Result};
use crate::ingest::{load_bundle, Source};

pub const NATIVE_SUFFIX: &str = "_native.svg";
pub const OPTICAL_SUFFIX: &str = "_optical_table.svg";
pub const REPORT_SUFFIX: &str = "_report.txt";

/// Fixed four-decimal formatting with negative zero folded to zero.
pub fn real(x: f64) -> String {
    let s = format!("{x:.4}");
    if s == "-0.0000" {
        "0.0000".to_owned()
    } else {
        s
    }
}

/// Comma-separated ids, or `none`.
pub fn id_list<'a>(ids: impl IntoIterator<Item = &'a VertexId>) -> String {
    let parts: Vec<String> = ids.into_iter().map(u32::to_string).collect();
    if parts.is_empty() {
        "none".to_owned()
    } else {
        parts.join(",")
    }
}

struct Out(String);

impl Out {
    fn section(&mut self, title: &str) {
        if !self.0.is_empty() {
            self.0.push('\n');
        }
        let _ = writeln!(self.0, "== {title} ==");
    }

    fn kv(&mut self, key: impl std::fmt::Display, value: impl std::fmt::Display) {
        let _ = writeln!(self.0, "{key}: {value}");
    }
}

/// Renders `r` as `key: value` lines in fixed sections: HEADER, TOPOLOGY,
/// MOTIFS, ROLES, MODES, STRATEGY, STATE, VERIFICATION, WARNINGS.
pub fn generate_report(r: &AnalysisResult, name: &str) -> String {
    let mut o = Out(String::new());
    let m = &r.metrics;
    let empty = m.vertex_count == 0;

    o.section("HEADER");
    o.kv("name", name);
    o.kv("vertices", m.vertex_count);
    o.kv("edges", m.edge_count);

    o.section("TOPOLOGY");
    o.kv("vertices", m.vertex_count);
    o.kv("edges", m.edge_count);
    o.kv("vertex_pairs", m.pair_count);
    o.kv("mean_degree", real(m.mean_degree));
    o.kv("density", real(m.density));
    o.kv("clustering", real(m.clustering));
    o.kv(
        "diameter",
        m.diameter.map_or("undefined".to_owned(), |d| d.to_string()),
    );
    o.kv("components", m.component_count);
    o.kv("bipartite", m.is_bipartite);
    o.kv("tree", m.is_tree);
    o.kv("max_degree", m.max_degree());
    for (v, d) in &m.vertex_degrees {
        o.kv(format_args!("degree.{v}"), d);
    }

    o.section("MOTIFS");
    if empty {
        o.kv("status", "empty");
    } else {
        o.kv("triangles", m.triangles);
        o.kv("squares", m.squares);
        o.kv("stars", m.stars);
    }

    o.section("ROLES");
    if empty {
        o.kv("status", "empty");
    } else {
        let roles = &r.roles;
        o.kv("sources", id_list(&roles.sources));
        o.kv("detectors", id_list(&roles.detectors));
        o.kv("beam_splitters", id_list(&roles.beam_splitters));
        o.kv("ancillas", id_list(&roles.ancillas));
        o.kv("dual_role", id_list(&roles.dual_role));
        for v in roles.provenance.keys() {
            let parts: Vec<String> = roles
                .roles_of(*v)
                .map(|(role, tier)| format!("{}[{}]", role.as_str(), tier.as_str()))
                .collect();
            o.kv(format_args!("vertex.{v}"), parts.join(","));
        }
    }

    o.section("MODES");
    if empty {
        o.kv("status", "empty");
    } else {
        let md = &r.modes;
        let modes: Vec<String> = md.unique_modes.iter().map(u32::to_string).collect();
        o.kv("unique_modes", modes.join(","));
        o.kv("mixed_mode_edges", md.mixed_mode_edges);
        o.kv("negative_edges", md.negative_edges);
        o.kv("perfect_correlations", md.perfect_correlations);
        if let Some((lo, hi)) = md.weight_extremes {
            o.kv("weight_magnitude_min", real(lo));
            o.kv("weight_magnitude_max", real(hi));
        }
        let mags: Vec<String> = md.magnitudes.iter().map(|w| real(*w)).collect();
        o.kv("weight_magnitudes", mags.join(","));
        for class in [
            WeightClass::Perfect,
            WeightClass::Intermediate,
            WeightClass::Weak,
        ] {
            let n = md.weight_classes.get(&class).copied().unwrap_or(0);
            o.kv(format_args!("weight_class.{}", class.as_str()), n);
        }
    }

    o.section("STRATEGY");
    if empty {
        o.kv("status", "empty");
    } else {
        o.kv("strategy", r.plan.strategy.as_str());
        o.kv("complexity", r.plan.complexity.as_str());
        o.kv("heralding_required", r.plan.heralding_required);
    }

    o.section("STATE");
    match &r.state {
        None => o.kv("status", "unavailable"),
        Some(s) => {
            o.kv("status", "available");
            o.kv("kets", s.target.kets.len());
            o.kv("party_count", s.party_count());
            o.kv("dimension", s.dimension);
            o.kv("entanglement_class", s.entanglement_class.as_str());
            let photons: Vec<String> = s.photon_numbers.iter().map(usize::to_string).collect();
            o.kv("photon_numbers", photons.join(","));
            o.kv(
                "uniform_photon_number",
                s.uniform_photon_number
                    .map_or("none".to_owned(), |n| n.to_string()),
            );
            for (k, c) in s.target.kets.iter().zip(&s.target.coefficients) {
                o.kv(format_args!("coefficient.{k}"), real(*c));
            }
            for f in &r.findings {
                o.kv(
                    format_args!("check.{}", f.check.as_str()),
                    format_args!("{} ({})", f.status.as_str(), f.detail),
                );
            }
        }
    }

    o.section("VERIFICATION");
    match &r.verification {
        None => o.kv("status", "unavailable"),
        Some(v) => {
            o.kv(
                "status",
                if v.report.all_reachable() {
                    "reachable"
                } else {
                    "unreachable"
                },
            );
            o.kv("convention", &v.convention);
            o.kv("restrict_to", id_list(&v.restrict_to));
            o.kv("matching_count", v.matching_count);
            for k in &v.report.targets {
                let tag = if k.reachable {
                    "reachable"
                } else {
                    "unreachable"
                };
                o.kv(
                    format_args!("ket.{}", k.ket),
                    format_args!("{tag} {}", real(k.amplitude)),
                );
            }
            o.kv("extraneous_kets", v.report.extraneous.len());
            for (k, a) in &v.report.extraneous {
                o.kv(format_args!("extraneous.{k}"), real(*a));
            }
        }
    }

    o.section("WARNINGS");
    o.kv("count", r.warnings.len());
    for (i, w) in r.warnings.iter().enumerate() {
        o.kv(format_args!("warning.{}", i + 1), w);
    }
    o.0
}

/// The three coordinated outputs of one analysis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Artifacts {
    pub native_svg: String,
    pub optical_svg: String,
    pub report: String,
}

pub fn render_artifacts(g: &NetworkGraph, r: &AnalysisResult, name: &str) -> Artifacts {
    Artifacts {
        native_svg: serialize_svg(&render_native_graph(g, &ModePalette::native())),
        optical_svg: serialize_svg(&render_optical_table(
            g,
            &r.roles,
            &r.plan,
            &ModePalette::optical_table(),
        )),
        report: generate_report(r, name),
    }
}

pub fn write_file(path: PathBuf, contents: &str) -> Result<PathBuf> {
    std::fs::write(&path, contents).map_err(|source| Error::Io {
        path: path.clone(),
        source,
    })?;
    Ok(path)
}

/// Loads a bundle, analyzes it once and writes `<prefix>_native.svg`,
/// `<prefix>_optical_table.svg` and `<prefix>_report.txt` into `out_dir`.
pub fn run_complete_analysis(
    config: Option<&Source>,
    graph: &Source,
    prefix: &str,
    out_dir: &Path,
    options: &AnalysisOptions,
) -> Result<AnalysisResult> {
    let bundle = load_bundle(config, graph)?;
    let result =
        analyze(&bundle.graph, &bundle.config, options).map_err(|e| Error::Validation {
            origin: "analysis".to_owned(),
            source: e,
        })?;
    let name = bundle.config.name.as_deref().unwrap_or(prefix);
    let a = render_artifacts(&bundle.graph, &result, name);
    write_file(
        out_dir.join(format!("{prefix}{NATIVE_SUFFIX}")),
        &a.native_svg,
    )?;
    write_file(
        out_dir.join(format!("{prefix}{OPTICAL_SUFFIX}")),
        &a.optical_svg,
    )?;
    write_file(out_dir.join(format!("{prefix}{REPORT_SUFFIX}")), &a.report)?;
    Ok(result)
}

/// Role sets as the report prints them, keyed by report field name.
pub fn role_lines(r: &AnalysisResult) -> Vec<(&'static str, String)> {
    [
        ("sources", Role::Source),
        ("detectors", Role::Detector),
        ("beam_splitters", Role::BeamSplitter),
        ("ancillas", Role::Ancilla),
    ]
    .into_iter()
    .map(|(k, role)| (k, id_list(r.roles.set(role))))
    .collect()
}
