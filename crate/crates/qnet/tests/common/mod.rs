#![allow(dead_code)]

use std::path::{Path, PathBuf};

use qnet::{load_bundle, Bundle, Source};
use qnet_core::{analyze, AnalysisOptions, AnalysisResult};

pub const FIXTURES: [&str; 4] = ["w4", "bell", "ghz346", "five_node_standin"];

pub fn fixture(file: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("fixtures")
        .join(file)
}

pub fn bundle(name: &str) -> Bundle {
    let config = Source::Path(fixture(&format!("{name}_config.json")));
    let graph = Source::Path(fixture(&format!("{name}_graph.json")));
    load_bundle(Some(&config), &graph).unwrap()
}

pub fn analyzed(name: &str) -> (Bundle, AnalysisResult) {
    let b = bundle(name);
    let r = analyze(&b.graph, &b.config, &AnalysisOptions::default()).unwrap();
    (b, r)
}
