mod common;

use std::collections::BTreeSet;

use common::*;
use qnet::report::{generate_report, id_list, role_lines};
use qnet_core::render::{render_optical_table, ModePalette, Shape, Tag};
use qnet_core::state::EntanglementClass;
use qnet_core::strategy::{Complexity, Strategy, WeightClass};

fn set(ids: &[u32]) -> BTreeSet<u32> {
    ids.iter().copied().collect()
}

fn glyph_set(s: &qnet_core::render::Scene, pick: fn(&Tag) -> Option<u32>) -> BTreeSet<u32> {
    s.elements
        .iter()
        .filter(|e| !matches!(e.shape, Shape::Text { .. }))
        .filter_map(|e| pick(&e.tag))
        .collect()
}

#[test]
fn w4_structure() {
    let (b, r) = analyzed("w4");
    let m = &r.metrics;
    assert_eq!((m.vertex_count, m.edge_count), (8, 10));
    assert_eq!(m.density_ratio(), (10, 28));
    assert_eq!(m.diameter, Some(4));
    assert_eq!(m.clustering, 0.0);
    assert!(m.is_bipartite);
    assert_eq!(m.mean_degree, 2.5);
    assert_eq!(m.vertex_degrees[&5], 4);
    assert_eq!((m.triangles, m.squares, m.stars), (0, 3, 3));
    assert_eq!(b.graph.edges().iter().filter(|e| e.weight < 0.0).count(), 5);
    assert_eq!(r.plan.strategy, Strategy::SinglePhoton);
    assert_eq!(r.plan.complexity, Complexity::Simple);
    assert!(!r.plan.heralding_required);
    assert_eq!(r.roles.sources, set(&[4, 5, 6, 7]));
    assert_eq!(r.roles.detectors, set(&[0, 1, 2, 3]));
    assert!(r.roles.beam_splitters.is_empty() && r.roles.ancillas.is_empty());
    let s = r.state.as_ref().unwrap();
    assert_eq!(s.entanglement_class, EntanglementClass::W);
    assert_eq!(s.uniform_photon_number, Some(1));
}

#[test]
fn w4_every_w_ket_from_exactly_one_matching() {
    let (_, r) = analyzed("w4");
    let v = r.verification.unwrap();
    assert_eq!(v.matching_count, 4);
    assert!(v.report.all_reachable());
    assert!(v.report.targets.iter().all(|k| k.amplitude == 1.0));
    assert!(v.report.extraneous.is_empty());
}

#[test]
fn bell_structure() {
    let (_, r) = analyzed("bell");
    let m = &r.metrics;
    assert_eq!((m.vertex_count, m.edge_count), (8, 12));
    assert_eq!(m.density_ratio(), (12, 28));
    assert_eq!(m.diameter, Some(4));
    assert_eq!(m.clustering, 0.0);
    assert_eq!(m.mean_degree, 3.0);
    assert_eq!((m.triangles, m.squares), (0, 10));
    assert_eq!(r.modes.magnitudes, vec![0.1, 1.0]);
    assert_eq!(r.modes.weight_classes.get(&WeightClass::Perfect), Some(&4));
    assert_eq!(r.modes.weight_classes.get(&WeightClass::Weak), Some(&8));
    assert_eq!(r.roles.sources, set(&[2, 3, 4, 5]));
    assert_eq!(r.roles.ancillas, set(&[6, 7]));
    assert!(r.plan.heralding_required);
    assert_eq!(
        r.state.as_ref().unwrap().entanglement_class,
        EntanglementClass::Bell
    );
}

#[test]
fn bell_cross_terms_cancel() {
    let (_, r) = analyzed("bell");
    let v = r.verification.unwrap();
    assert!(v.report.all_reachable());
    for k in &v.report.targets {
        assert!(
            (k.amplitude - 0.02).abs() < 1e-15,
            "{} {}",
            k.ket,
            k.amplitude
        );
    }
    assert!(v.report.extraneous.is_empty());
}

#[test]
fn ghz346_structure() {
    let (_, r) = analyzed("ghz346");
    let m = &r.metrics;
    assert_eq!((m.vertex_count, m.edge_count), (6, 17));
    assert_eq!(m.density_ratio(), (12, 15));
    assert_eq!(m.diameter, Some(2));
    assert!((m.clustering - 0.7278).abs() < 5e-5);
    assert!((m.mean_degree - 34.0 / 6.0).abs() < 1e-12);
    assert_eq!((m.triangles, m.squares), (9, 16));
    assert_eq!(r.modes.unique_modes, set(&[0, 1, 2, 3]));
    assert_eq!(r.roles.dual_role, set(&[3, 5]));
    let s = r.state.as_ref().unwrap();
    assert_eq!(s.entanglement_class, EntanglementClass::Ghz);
    assert_eq!(s.dimension, 4);
    let v = r.verification.unwrap();
    assert!(v.report.all_reachable());
    assert!(v.report.extraneous.is_empty());
}

#[test]
fn five_node_standin_config_outcomes() {
    let (_, r) = analyzed("five_node_standin");
    assert_eq!((r.metrics.vertex_count, r.metrics.edge_count), (10, 31));
    assert_eq!(r.metrics.density_ratio(), (28, 45));
    assert_eq!(r.metrics.diameter, Some(2));
    assert_eq!(r.plan.strategy, Strategy::SpdcHeralded);
    assert_eq!(r.plan.complexity, Complexity::Complex);
    let counts = (
        r.roles.sources.len(),
        r.roles.detectors.len(),
        r.roles.beam_splitters.len(),
        r.roles.ancillas.len(),
    );
    assert_eq!(counts, (5, 10, 5, 5));
    let s = r.state.as_ref().unwrap();
    assert_eq!(s.uniform_photon_number, Some(2));
    assert!(s
        .target
        .coefficients
        .iter()
        .all(|c| (c - 10f64.sqrt().recip()).abs() < 1e-12));
    assert!(r.warnings.iter().any(|w| w.contains("vertex 3")));
    assert!(r.verification.unwrap().report.all_reachable());
}

#[test]
fn w4_optical_table() {
    let (b, r) = analyzed("w4");
    let s = render_optical_table(&b.graph, &r.roles, &r.plan, &ModePalette::optical_table());
    let diamonds = s
        .elements
        .iter()
        .filter(|e| matches!(e.shape, Shape::Diamond { .. }))
        .count();
    let semis = s
        .elements
        .iter()
        .filter(|e| matches!(e.shape, Shape::Semicircle { .. }))
        .count();
    let routes: BTreeSet<usize> = s
        .elements
        .iter()
        .filter_map(|e| {
            if let Tag::Route(i) = e.tag {
                Some(i)
            } else {
                None
            }
        })
        .collect();
    assert_eq!((diamonds, semis, routes.len()), (4, 4, 10));
    assert_eq!(s.tagged(|t| matches!(t, Tag::BeamSplitter(_))).count(), 0);
    let labels = s
        .elements
        .iter()
        .filter(|e| matches!(&e.shape, Shape::Text { text, .. } if text == "810nm"));
    assert_eq!(labels.count(), 4);
}

#[test]
fn spdc_table_heralds_ancillas_in_region() {
    let (b, r) = analyzed("five_node_standin");
    let s = render_optical_table(&b.graph, &r.roles, &r.plan, &ModePalette::optical_table());
    let region = s
        .tagged(|t| *t == Tag::Region)
        .next()
        .expect("heralding region");
    assert!(region.dash.is_some());
    let Shape::Rect {
        origin,
        width,
        height,
    } = region.shape
    else {
        panic!()
    };
    let inside = |x: f64, y: f64| {
        x > origin.x && x < origin.x + width && y > origin.y && y < origin.y + height
    };
    let mut heralded = BTreeSet::new();
    for e in &s.elements {
        if let (Tag::Detector(v), Shape::Semicircle { center, .. }) = (e.tag, &e.shape) {
            if inside(center.x, center.y) {
                heralded.insert(v);
            }
        }
    }
    assert_eq!(heralded, set(&[5, 6, 7, 8, 9]));
    assert_eq!(
        s.tagged(|t| *t == Tag::Pump)
            .filter(|e| matches!(e.shape, Shape::Rect { .. }))
            .count(),
        1
    );
    assert!(s
        .elements
        .iter()
        .any(|e| matches!(&e.shape, Shape::Text { text, .. } if text == "405nm")));
    let crystals = s
        .tagged(|t| matches!(t, Tag::Crystal(_)))
        .filter(|e| matches!(e.shape, Shape::Rect { .. }));
    assert_eq!(crystals.count(), 31);
}

#[test]
fn ghz346_optical_routes_use_four_colors() {
    let (b, r) = analyzed("ghz346");
    let p = ModePalette::optical_table();
    let s = render_optical_table(&b.graph, &r.roles, &r.plan, &p);
    let colors: BTreeSet<_> = s
        .tagged(|t| matches!(t, Tag::Route(_)))
        .filter_map(|e| e.stroke)
        .collect();
    let expected: BTreeSet<_> = (0..4).map(|m| p.color(m)).collect();
    assert_eq!(colors, expected);
}

#[test]
fn report_roles_match_glyphs_for_every_fixture() {
    for name in FIXTURES {
        let (b, r) = analyzed(name);
        let report = generate_report(&r, name);
        let s = render_optical_table(&b.graph, &r.roles, &r.plan, &ModePalette::optical_table());
        let drawn = [
            (
                "sources",
                glyph_set(&s, |t| {
                    if let Tag::Source(v) = t {
                        Some(*v)
                    } else {
                        None
                    }
                }),
            ),
            (
                "detectors",
                glyph_set(&s, |t| {
                    if let Tag::Detector(v) = t {
                        Some(*v)
                    } else {
                        None
                    }
                }),
            ),
            (
                "beam_splitters",
                glyph_set(&s, |t| {
                    if let Tag::BeamSplitter(v) = t {
                        Some(*v)
                    } else {
                        None
                    }
                }),
            ),
        ];
        for (key, ids) in drawn {
            let line = format!("{key}: {}\n", id_list(&ids));
            assert!(report.contains(&line), "{name}: report lacks {line:?}");
        }
        for (key, value) in role_lines(&r) {
            assert!(
                report.contains(&format!("\n{key}: {value}\n")),
                "{name}: {key}"
            );
        }
    }
}

#[test]
fn report_sections_in_order() {
    let (_, r) = analyzed("ghz346");
    let report = generate_report(&r, "ghz346");
    let order = [
        "HEADER",
        "TOPOLOGY",
        "MOTIFS",
        "ROLES",
        "MODES",
        "STRATEGY",
        "STATE",
        "VERIFICATION",
        "WARNINGS",
    ];
    let positions: Vec<usize> = order
        .iter()
        .map(|s| {
            report
                .find(&format!("== {s} =="))
                .unwrap_or_else(|| panic!("missing {s}"))
        })
        .collect();
    assert!(positions.windows(2).all(|w| w[0] < w[1]));
    assert!(report.contains("clustering: 0.7278\n"));
    assert!(report.contains("mean_degree: 5.6667\n"));
    for line in report
        .lines()
        .filter(|l| !l.is_empty() && !l.starts_with("=="))
    {
        assert!(line.contains(": "), "not key: value: {line}");
    }
}

#[test]
fn graph_only_report_marks_state_unavailable() {
    let b = qnet::load_bundle(None, &qnet::Source::Path(fixture("w4_graph.json"))).unwrap();
    let r = qnet_core::analyze(&b.graph, &b.config, &Default::default()).unwrap();
    let report = generate_report(&r, "w4");
    let state = report.split("== STATE ==").nth(1).unwrap();
    assert!(state.starts_with("\nstatus: unavailable\n"));
    assert_eq!(r.plan.strategy, Strategy::Adaptive);
}

#[test]
fn empty_graph_report() {
    let g = qnet::parse_graph("[]").unwrap();
    let r = qnet_core::analyze(&g, &Default::default(), &Default::default()).unwrap();
    let report = generate_report(&r, "empty");
    assert!(report.contains("== TOPOLOGY ==\nvertices: 0\nedges: 0\n"));
    for section in ["MOTIFS", "ROLES", "MODES", "STRATEGY"] {
        assert!(
            report.contains(&format!("== {section} ==\nstatus: empty\n")),
            "{section}"
        );
    }
}
