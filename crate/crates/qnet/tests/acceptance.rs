//! Acceptance criteria, one printed line each. Run with `--nocapture` to
//! see the table.

mod common;
#[path = "../../core/tests/common/mod.rs"]
mod oracles;

use std::collections::{BTreeMap, BTreeSet};
use std::time::{Duration, Instant};

use common::*;
use oracles::*;
use qnet::report::{generate_report, render_artifacts};
use qnet_core::matcher::{enumerate_matchings, ket_spectrum, DEFAULT_VERTEX_CAP};
use qnet_core::state::{EntanglementClass, TargetState};
use qnet_core::strategy::{Complexity, Strategy, WeightClass};
use qnet_core::topology::{compute_metrics, count_motifs, SimpleGraph};
use qnet_core::{analyze, AnalysisOptions, Edge, Ket, NetworkGraph};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const METRIC_TOL: f64 = 5e-5;
const COEFF_TOL: f64 = 1e-12;
const NORM_TOL: f64 = 1e-9;
const FIXTURE_BUDGET: Duration = Duration::from_millis(100);
const FIVE_NODE_BUDGET: Duration = Duration::from_millis(500);
const MATCHER_BUDGET: Duration = Duration::from_secs(1);
const MOTIF_TRIALS: usize = 500;
const MATCHING_TRIALS: usize = 200;
const IDENTITY_TRIALS: usize = 500;
const CONFIG_TRIALS: usize = 1000;
const SEED: u64 = 0x5eed_0001;

enum Outcome {
    Pass(String),
    Fail(String),
    Degraded(String),
}

type Criterion = (&'static str, fn() -> Outcome);

struct Checks(Vec<String>);

impl Checks {
    fn new() -> Self {
        Checks(Vec::new())
    }

    fn eq<T: PartialEq + std::fmt::Debug>(&mut self, what: &str, got: T, want: T) {
        if got != want {
            self.0.push(format!("{what}: got {got:?}, want {want:?}"));
        }
    }

    fn near(&mut self, what: &str, got: f64, want: f64, tol: f64) {
        if (got - want).abs() > tol {
            self.0
                .push(format!("{what}: got {got}, want {want} ± {tol}"));
        }
    }

    fn truth(&mut self, what: &str, ok: bool) {
        if !ok {
            self.0.push(what.to_owned());
        }
    }

    fn within(&mut self, what: &str, took: Duration, budget: Duration) {
        if took > budget {
            self.0.push(format!("{what}: {took:?} exceeds {budget:?}"));
        }
    }

    fn outcome(self, detail: String) -> Outcome {
        if self.0.is_empty() {
            Outcome::Pass(detail)
        } else {
            Outcome::Fail(self.0.join("; "))
        }
    }
}

fn timed(name: &str) -> (qnet::Bundle, qnet_core::AnalysisResult, Duration) {
    let start = Instant::now();
    let (b, r) = analyzed(name);
    (b, r, start.elapsed())
}

fn criterion_1() -> Outcome {
    let (_, r, took) = timed("w4");
    let m = &r.metrics;
    let mut c = Checks::new();
    c.eq("vertices", m.vertex_count, 8);
    c.eq("edges", m.edge_count, 10);
    c.near("density", m.density, 0.3571, METRIC_TOL);
    c.eq("diameter", m.diameter, Some(4));
    c.eq("clustering", m.clustering, 0.0);
    c.eq("bipartite", m.is_bipartite, true);
    c.eq("mean degree", m.mean_degree, 2.5);
    c.eq("degree(5)", m.vertex_degrees.get(&5).copied(), Some(4));
    c.eq("triangles", m.triangles, 0);
    c.eq("squares", m.squares, 3);
    c.eq("stars", m.stars, 3);
    c.within("runtime", took, FIXTURE_BUDGET);
    c.outcome(format!(
        "density {:.4}, squares {}, {took:?}",
        m.density, m.squares
    ))
}

fn criterion_2() -> Outcome {
    let (_, r, took) = timed("bell");
    let m = &r.metrics;
    let mut c = Checks::new();
    c.eq("vertices", m.vertex_count, 8);
    c.eq("edges", m.edge_count, 12);
    c.near("density", m.density, 0.4286, METRIC_TOL);
    c.eq("diameter", m.diameter, Some(4));
    c.eq("clustering", m.clustering, 0.0);
    c.eq("mean degree", m.mean_degree, 3.0);
    c.eq("triangles", m.triangles, 0);
    c.eq("squares", m.squares, 10);
    c.eq(
        "weight magnitudes",
        r.modes.magnitudes.clone(),
        vec![0.1, 1.0],
    );
    let classes: BTreeSet<WeightClass> = r
        .modes
        .weight_classes
        .iter()
        .filter(|(_, &n)| n > 0)
        .map(|(k, _)| *k)
        .collect();
    c.eq(
        "weight classes",
        classes,
        [WeightClass::Perfect, WeightClass::Weak]
            .into_iter()
            .collect(),
    );
    c.eq(
        "sources",
        r.roles.sources.clone(),
        [2, 3, 4, 5].into_iter().collect(),
    );
    c.eq(
        "ancillas",
        r.roles.ancillas.clone(),
        [6, 7].into_iter().collect(),
    );
    c.within("runtime", took, FIXTURE_BUDGET);
    c.outcome(format!(
        "density {:.4}, squares {}, {took:?}",
        m.density, m.squares
    ))
}

fn criterion_3() -> Outcome {
    let (_, r, took) = timed("ghz346");
    let m = &r.metrics;
    let mut c = Checks::new();
    c.eq("vertices", m.vertex_count, 6);
    c.eq("edges", m.edge_count, 17);
    c.near("density", m.density, 0.8, METRIC_TOL);
    c.eq("diameter", m.diameter, Some(2));
    c.near("clustering", m.clustering, 0.7278, METRIC_TOL);
    c.near("mean degree", m.mean_degree, 5.6667, METRIC_TOL);
    c.eq("triangles", m.triangles, 9);
    c.eq("squares", m.squares, 16);
    c.eq(
        "unique modes",
        r.modes.unique_modes.clone(),
        (0..4).collect(),
    );
    c.eq(
        "dual-role beam splitters",
        r.roles.dual_role.clone(),
        [3, 5].into_iter().collect(),
    );
    c.within("runtime", took, FIXTURE_BUDGET);
    c.outcome(format!(
        "clustering {:.4}, mean degree {:.4}, {took:?}",
        m.clustering, m.mean_degree
    ))
}

/// The original five-node graph file could not be obtained; the bundled
/// stand-in reproduces its counts, roles and config but not its motif
/// statistics, which fall back to criteria 7-9.
fn criterion_4() -> Outcome {
    let (_, r, took) = timed("five_node_standin");
    let m = &r.metrics;
    let mut c = Checks::new();
    c.eq("vertices", m.vertex_count, 10);
    c.eq("edges", m.edge_count, 31);
    c.near("density", m.density, 0.6222, METRIC_TOL);
    c.eq("diameter", m.diameter, Some(2));
    c.eq("strategy", r.plan.strategy, Strategy::SpdcHeralded);
    c.eq("complexity", r.plan.complexity, Complexity::Complex);
    let roles = (
        r.roles.sources.len(),
        r.roles.detectors.len(),
        r.roles.beam_splitters.len(),
        r.roles.ancillas.len(),
    );
    c.eq("roles", roles, (5, 10, 5, 5));
    c.within("runtime", took, FIVE_NODE_BUDGET);
    match c.outcome(String::new()) {
        Outcome::Pass(_) => Outcome::Degraded(format!(
            "stand-in graph: counts, density, diameter, strategy, complexity, roles pass ({took:?}); \
             clustering {:.4}, triangles {}, squares {} not comparable (reference 0.4905/24/89), covered by 7-9",
            m.clustering, m.triangles, m.squares
        )),
        fail => fail,
    }
}

fn criterion_5() -> Outcome {
    let mut c = Checks::new();
    let (_, w4) = analyzed("w4");
    let (_, ghz) = analyzed("ghz346");
    let (_, eq1) = analyzed("five_node_standin");
    let w4 = w4.state.unwrap();
    let ghz = ghz.state.unwrap();
    let eq1 = eq1.state.unwrap();
    c.eq("W4 class", w4.entanglement_class, EntanglementClass::W);
    c.eq(
        "GHZ346 class",
        ghz.entanglement_class,
        EntanglementClass::Ghz,
    );
    c.eq("GHZ346 dimension", ghz.dimension, 4);
    c.eq("ten-ket photon number", eq1.uniform_photon_number, Some(2));
    c.eq("ten-ket count", eq1.target.kets.len(), 10);
    let expected = 1.0 / 10f64.sqrt();
    for (k, coeff) in eq1.target.kets.iter().zip(&eq1.target.coefficients) {
        c.near(&format!("coefficient {k}"), *coeff, expected, COEFF_TOL);
    }
    c.outcome(format!(
        "W, GHZ(d=4), photon number 2 with 1/sqrt(10) = {expected:.12}"
    ))
}

fn criterion_6() -> Outcome {
    let mut c = Checks::new();
    let b = bundle("w4");
    let start = Instant::now();
    let ms = enumerate_matchings(&b.graph, DEFAULT_VERTEX_CAP).unwrap();
    let parties: BTreeSet<u32> = [0, 1, 2, 3].into_iter().collect();
    let spectrum = ket_spectrum(&b.graph, &ms, Some(&parties), None).unwrap();
    let took = start.elapsed();

    let oracle = brute_matchings(&b.graph);
    let mut sums: BTreeMap<Ket, f64> = BTreeMap::new();
    for (_, modes, amp) in &oracle {
        let projected: Vec<u32> = parties
            .iter()
            .map(|&v| modes[b.graph.index_of(v).unwrap()])
            .collect();
        *sums.entry(Ket(projected)).or_insert(0.0) += amp;
    }
    c.eq("matching count", ms.len(), oracle.len());
    c.eq("per-ket sums", spectrum.entries.clone(), sums);
    for k in ["0001", "0010", "0100", "1000"] {
        let a = spectrum.amplitude(&Ket::parse(k).unwrap());
        c.truth(&format!("{k} unreachable"), a.abs() > 1e-12);
    }
    c.within("runtime", took, MATCHER_BUDGET);
    c.outcome(format!(
        "{} matchings, all four W kets non-zero, {took:?}",
        ms.len()
    ))
}

fn criterion_7() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut c = Checks::new();
    for trial in 0..MOTIF_TRIALS {
        let adj = random_simple(&mut rng, 8);
        let s = SimpleGraph::from_index_pairs((0..adj.len() as u32).collect(), pairs_of(&adj));
        let m = count_motifs(&s);
        c.eq(
            &format!("trial {trial} triangles"),
            m.triangles,
            brute_triangles(&adj),
        );
        c.eq(
            &format!("trial {trial} squares"),
            m.squares,
            brute_squares(&adj),
        );
    }
    c.outcome(format!("{MOTIF_TRIALS} random graphs, exact"))
}

fn criterion_8() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 1);
    let mut c = Checks::new();
    let mut compared = 0;
    for trial in 0..MATCHING_TRIALS {
        let g = random_multigraph(&mut rng, 10, 14, 2);
        let oracle = brute_matchings(&g);
        match enumerate_matchings(&g, DEFAULT_VERTEX_CAP) {
            Ok(ms) => {
                compared += 1;
                let got: Vec<(Vec<usize>, Vec<u32>, f64)> = ms
                    .iter()
                    .map(|m| (m.edges.clone(), m.ket.digits().to_vec(), m.amplitude))
                    .collect();
                c.eq(&format!("trial {trial} matchings"), got, oracle);
            }
            Err(e) => c.truth(&format!("trial {trial}: {e}"), g.vertex_count() % 2 == 1),
        }
    }
    for trial in 0..MATCHING_TRIALS {
        let n = rng.random_range(1..=5);
        let a: Vec<Vec<u8>> = (0..n)
            .map(|_| (0..n).map(|_| rng.random_bool(0.6) as u8).collect())
            .collect();
        if let Some(g) = bipartite_graph(&a) {
            let count = enumerate_matchings(&g, DEFAULT_VERTEX_CAP).unwrap().len() as u64;
            c.eq(&format!("permanent trial {trial}"), count, permanent(&a));
        }
    }
    c.outcome(format!(
        "{MATCHING_TRIALS} multigraphs ({compared} even), {MATCHING_TRIALS} permanents, exact"
    ))
}

fn criterion_9() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 2);
    let mut c = Checks::new();
    for trial in 0..IDENTITY_TRIALS {
        let g = random_multigraph(&mut rng, 10, 20, 3);
        let m = compute_metrics(&g);
        let degree_sum: usize = m.vertex_degrees.values().sum();
        c.eq(
            &format!("trial {trial} handshake"),
            degree_sum,
            2 * g.edge_count(),
        );
        let (pairs, all) = m.density_ratio();
        c.eq(&format!("trial {trial} pairs"), pairs, m.pair_count);
        c.near(
            &format!("trial {trial} density"),
            m.density,
            pairs as f64 / all as f64,
            1e-15,
        );
        if m.is_bipartite {
            c.eq(
                &format!("trial {trial} bipartite triangles"),
                m.triangles,
                0,
            );
        }
        let kets = rng.random_range(1..=40);
        let len = rng.random_range(1..=6);
        let t = TargetState::new(
            (0..kets)
                .map(|_| Ket((0..len).map(|_| rng.random_range(0..4)).collect()))
                .collect(),
            None,
        )
        .unwrap();
        let norm: f64 = t.coefficients.iter().map(|x| x * x).sum();
        c.near(&format!("trial {trial} normalization"), norm, 1.0, NORM_TOL);
    }
    // Bipartite inputs by construction, so the implication is exercised.
    for trial in 0..IDENTITY_TRIALS {
        let n = rng.random_range(2..=10u32);
        let edges: Vec<Edge> = (0..n)
            .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
            .filter(|&(a, b)| (a + b) % 2 == 1)
            .filter(|_| rng.random_bool(0.7))
            .map(|(a, b)| Edge::new(a, b, 0, 0, 1.0).unwrap())
            .collect();
        let Ok(g) = NetworkGraph::from_edges(edges) else {
            continue;
        };
        let m = compute_metrics(&g);
        c.truth(&format!("trial {trial} bipartite"), m.is_bipartite);
        c.eq(
            &format!("trial {trial} bipartite triangles"),
            m.triangles,
            0,
        );
    }
    c.outcome(format!(
        "{IDENTITY_TRIALS} multigraphs + {IDENTITY_TRIALS} bipartite graphs"
    ))
}

fn criterion_10() -> Outcome {
    let mut c = Checks::new();
    for name in FIXTURES {
        let (b1, r1) = analyzed(name);
        let (b2, r2) = analyzed(name);
        let a1 = render_artifacts(&b1.graph, &r1, name);
        let a2 = render_artifacts(&b2.graph, &r2, name);
        c.truth(
            &format!("{name} native svg differs"),
            a1.native_svg == a2.native_svg,
        );
        c.truth(
            &format!("{name} optical svg differs"),
            a1.optical_svg == a2.optical_svg,
        );
        c.truth(&format!("{name} report differs"), a1.report == a2.report);
        c.truth(
            &format!("{name} report regeneration differs"),
            generate_report(&r1, name) == a1.report,
        );
    }
    c.outcome(format!(
        "{} fixtures, SVGs and reports byte-identical",
        FIXTURES.len()
    ))
}

fn criterion_11() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 3);
    let mut c = Checks::new();
    let o = AnalysisOptions::default();
    for trial in 0..CONFIG_TRIALS {
        let g = random_multigraph(&mut rng, 9, 16, 3);
        let mut config = random_config(&mut rng, &g);
        let r = analyze(&g, &config, &o).unwrap();
        if r.plan.strategy == Strategy::SpdcHeralded {
            c.truth(
                &format!("trial {trial}: spdc without heralding"),
                r.plan.heralding_required,
            );
        }

        // Growing every complexity input never lowers the grade.
        let top = *g.vertices().last().unwrap();
        let max_mode = r.modes.unique_modes.iter().max().copied().unwrap_or(0);
        let mut edges = g.edges().to_vec();
        edges.push(Edge::new(g.vertices()[0], top + 1, 0, max_mode + 1, 1.0).unwrap());
        let bigger = NetworkGraph::from_edges(edges).unwrap();
        let mut grown = config.clone();
        let mut anc = grown.anc_detectors.clone().unwrap_or_default();
        anc.push(top + 1);
        grown.anc_detectors = Some(anc);
        let r2 = analyze(&bigger, &grown, &o).unwrap();
        c.truth(
            &format!(
                "trial {trial}: complexity fell {:?} -> {:?}",
                r.plan.complexity, r2.plan.complexity
            ),
            r2.plan.complexity >= r.plan.complexity,
        );

        // Adding single emitters always forces the single-photon strategy.
        config.single_emitters = Some(vec![g.vertices()[rng.random_range(0..g.vertex_count())]]);
        let forced = analyze(&g, &config, &o).unwrap();
        c.eq(
            &format!("trial {trial} precedence"),
            forced.plan.strategy,
            Strategy::SinglePhoton,
        );
    }
    c.outcome(format!("{CONFIG_TRIALS} random configs"))
}

#[test]
fn acceptance() {
    let criteria: [Criterion; 11] = [
        ("W4 structure", criterion_1),
        ("Bell structure", criterion_2),
        ("GHZ346 structure", criterion_3),
        ("five-node network", criterion_4),
        ("state classification", criterion_5),
        ("W4 matcher vs brute force", criterion_6),
        ("motif oracle", criterion_7),
        ("matching oracle", criterion_8),
        ("metric identities", criterion_9),
        ("determinism", criterion_10),
        ("decision tree and complexity", criterion_11),
    ];
    let mut failed = Vec::new();
    for (i, (name, run)) in criteria.iter().enumerate() {
        let n = i + 1;
        match run() {
            Outcome::Pass(d) => println!("criterion {n:>2} PASS     {name}: {d}"),
            Outcome::Degraded(d) => println!("criterion {n:>2} DEGRADED {name}: {d}"),
            Outcome::Fail(d) => {
                println!("criterion {n:>2} FAIL     {name}: {d}");
                failed.push(n);
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
