//! JSON graph and config documents.
//!
//! Graphs come in three shapes, all normalized to one [`NetworkGraph`]:
//!
//! * an object mapping `"(v1, v2, m1, m2)"` keys to weights, optionally
//!   nested under a `"graph"` key;
//! * an array of `[v1, v2, m1, m2, w]` arrays;
//! * an array of `[v1, v2]` pairs, with modes 0 and weight 1.0.
//!
//! A document with a `"graph"` key may also carry a `"config"` object, which
//! [`load_bundle`] uses when no separate config is given.

use std::fmt::{self, Write};
use std::path::{Path, PathBuf};

use qnet_core::{Edge, NetworkConfig, NetworkGraph, VertexId};
use serde::de::{self, Deserializer, MapAccess, SeqAccess, Visitor};
use serde::Deserialize;
use serde_json::value::RawValue;
use serde_json::Value;

use crate::error::{Error, Result};

const GRAPH: &str = "graph";
const CONFIG: &str = "config";

/// A JSON object or array with members left unparsed, keeping key order and
/// duplicate keys.
enum Doc {
    Object(Vec<(String, Box<RawValue>)>),
    Array(Vec<Box<RawValue>>),
    Scalar,
}

impl<'de> Deserialize<'de> for Doc {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        struct V;
        impl<'de> Visitor<'de> for V {
            type Value = Doc;

            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("a JSON document")
            }

            fn visit_map<A: MapAccess<'de>>(self, mut map: A) -> Result<Doc, A::Error> {
                let mut out = Vec::new();
                while let Some(entry) = map.next_entry::<String, Box<RawValue>>()? {
                    out.push(entry);
                }
                Ok(Doc::Object(out))
            }

            fn visit_seq<A: SeqAccess<'de>>(self, mut seq: A) -> Result<Doc, A::Error> {
                let mut out = Vec::new();
                while let Some(item) = seq.next_element::<Box<RawValue>>()? {
                    out.push(item);
                }
                Ok(Doc::Array(out))
            }

            fn visit_bool<E: de::Error>(self, _: bool) -> Result<Doc, E> {
                Ok(Doc::Scalar)
            }
            fn visit_i64<E: de::Error>(self, _: i64) -> Result<Doc, E> {
                Ok(Doc::Scalar)
            }
            fn visit_u64<E: de::Error>(self, _: u64) -> Result<Doc, E> {
                Ok(Doc::Scalar)
            }
            fn visit_f64<E: de::Error>(self, _: f64) -> Result<Doc, E> {
                Ok(Doc::Scalar)
            }
            fn visit_str<E: de::Error>(self, _: &str) -> Result<Doc, E> {
                Ok(Doc::Scalar)
            }
            fn visit_unit<E: de::Error>(self) -> Result<Doc, E> {
                Ok(Doc::Scalar)
            }
        }
        d.deserialize_any(V)
    }
}

fn read_doc(origin: &str, raw: &str) -> Result<Doc> {
    serde_json::from_str(raw).map_err(|e| Error::parse(origin, raw, &e))
}

fn value(origin: &str, raw: &RawValue) -> Result<Value> {
    serde_json::from_str(raw.get()).map_err(|e| Error::parse(origin, raw.get(), &e))
}

fn find<'a>(entries: &'a [(String, Box<RawValue>)], key: &str) -> Option<&'a RawValue> {
    entries.iter().find(|(k, _)| k == key).map(|(_, v)| &**v)
}

fn looks_complex(v: &Value) -> bool {
    match v {
        Value::String(s) => {
            let s = s.trim();
            s.ends_with('j') || s.ends_with('i') || s.starts_with('(')
        }
        Value::Array(a) => a.len() == 2 && a.iter().all(Value::is_number),
        Value::Object(o) => {
            o.contains_key("real") || o.contains_key("imag") || o.contains_key("re")
        }
        _ => false,
    }
}

fn weight(origin: &str, what: &str, v: &Value) -> Result<f64> {
    match v.as_f64() {
        Some(w) => Ok(w),
        None if looks_complex(v) => Err(Error::format(
            origin,
            format!(
                "{what}: complex-valued weight {v} is not supported; weights must be real numbers"
            ),
        )),
        None => Err(Error::format(
            origin,
            format!("{what}: weight must be a number, found {v}"),
        )),
    }
}

fn index(origin: &str, what: &str, v: &Value) -> Result<u32> {
    v.as_u64()
        .and_then(|n| u32::try_from(n).ok())
        .ok_or_else(|| {
            Error::format(
                origin,
                format!("{what}: expected a non-negative integer, found {v}"),
            )
        })
}

/// Parses a `"(v1, v2, m1, m2)"` key; whitespace around fields is ignored.
fn parse_tuple_key(origin: &str, key: &str) -> Result<[u32; 4]> {
    let bad = || {
        Error::format(
            origin,
            format!("edge key {key:?}: expected \"(v1, v2, mode1, mode2)\""),
        )
    };
    let inner = key
        .trim()
        .strip_prefix('(')
        .and_then(|s| s.strip_suffix(')'))
        .ok_or_else(bad)?;
    let fields: Vec<&str> = inner.split(',').map(str::trim).collect();
    if fields.len() != 4 {
        return Err(Error::format(
            origin,
            format!(
                "edge key {key:?}: expected 4 fields, found {}",
                fields.len()
            ),
        ));
    }
    let mut out = [0u32; 4];
    for (slot, f) in out.iter_mut().zip(&fields) {
        *slot = f.parse().map_err(|_| bad())?;
    }
    Ok(out)
}

fn edge(origin: &str, [a, b, ma, mb]: [u32; 4], w: f64) -> Result<Edge> {
    Edge::new(a, b, ma, mb, w).map_err(|e| Error::validation(origin, e))
}

fn edges_from_object(origin: &str, entries: &[(String, Box<RawValue>)]) -> Result<Vec<Edge>> {
    let mut seen = std::collections::BTreeSet::new();
    let mut edges = Vec::with_capacity(entries.len());
    for (key, raw) in entries {
        if !seen.insert(key.as_str()) {
            return Err(Error::format(origin, format!("duplicate edge key {key:?}")));
        }
        let t = parse_tuple_key(origin, key)?;
        let w = weight(origin, &format!("edge {key}"), &value(origin, raw)?)?;
        edges.push(edge(origin, t, w)?);
    }
    Ok(edges)
}

fn edges_from_array(origin: &str, items: &[Box<RawValue>]) -> Result<Vec<Edge>> {
    let mut edges = Vec::with_capacity(items.len());
    for (i, raw) in items.iter().enumerate() {
        let what = format!("edge {i}");
        let v = value(origin, raw)?;
        let Value::Array(fields) = &v else {
            return Err(Error::format(
                origin,
                format!("{what}: expected an array, found {v}"),
            ));
        };
        let e = match fields.len() {
            2 => edge(
                origin,
                [
                    index(origin, &what, &fields[0])?,
                    index(origin, &what, &fields[1])?,
                    0,
                    0,
                ],
                1.0,
            )?,
            5 => {
                let mut t = [0u32; 4];
                for (slot, f) in t.iter_mut().zip(&fields[..4]) {
                    *slot = index(origin, &what, f)?;
                }
                edge(origin, t, weight(origin, &what, &fields[4])?)?
            }
            n => {
                return Err(Error::format(
                    origin,
                    format!("{what}: expected 2 or 5 elements, found {n}"),
                ))
            }
        };
        edges.push(e);
    }
    Ok(edges)
}

fn graph_from_doc(origin: &str, doc: &Doc) -> Result<NetworkGraph> {
    let edges = match doc {
        Doc::Object(entries) => match find(entries, GRAPH) {
            Some(inner) => return graph_from_doc(origin, &read_doc(origin, inner.get())?),
            None => edges_from_object(origin, entries)?,
        },
        Doc::Array(items) => edges_from_array(origin, items)?,
        Doc::Scalar => {
            return Err(Error::format(
                origin,
                "graph must be a JSON object or array",
            ))
        }
    };
    NetworkGraph::from_edges(edges).map_err(|e| Error::validation(origin, e))
}

/// Parses a graph document in any of the accepted shapes.
pub fn parse_graph(raw: &str) -> Result<NetworkGraph> {
    graph_from_doc(GRAPH, &read_doc(GRAPH, raw)?)
}

fn typed<T: serde::de::DeserializeOwned>(
    origin: &str,
    key: &str,
    raw: &RawValue,
    expected: &str,
) -> Result<T> {
    serde_json::from_str(raw.get()).map_err(|_| {
        Error::format(
            origin,
            format!("{key}: expected {expected}, found {}", raw.get()),
        )
    })
}

fn amplitudes(origin: &str, raw: &RawValue) -> Result<Vec<f64>> {
    let v = value(origin, raw)?;
    let Value::Array(items) = &v else {
        return Err(Error::format(
            origin,
            format!("amplitudes: expected a list of numbers, found {v}"),
        ));
    };
    items
        .iter()
        .enumerate()
        .map(|(i, a)| weight(origin, &format!("amplitudes[{i}]"), a))
        .collect()
}

fn config_from_entries(
    origin: &str,
    entries: Vec<(String, Box<RawValue>)>,
) -> Result<NetworkConfig> {
    let mut c = NetworkConfig::default();
    let mut seen = std::collections::BTreeSet::new();
    for (key, raw) in entries {
        if !seen.insert(key.clone()) {
            return Err(Error::format(origin, format!("duplicate key {key:?}")));
        }
        if raw.get() == "null" {
            continue;
        }
        let ids = "a list of vertex ids";
        match key.as_str() {
            "single_emitters" => {
                c.single_emitters = Some(typed::<Vec<VertexId>>(origin, &key, &raw, ids)?)
            }
            "out_nodes" => c.out_nodes = Some(typed(origin, &key, &raw, ids)?),
            "anc_detectors" => c.anc_detectors = Some(typed(origin, &key, &raw, ids)?),
            "target_state" => {
                c.target_state = Some(typed(origin, &key, &raw, "a list of ket strings")?)
            }
            "amplitudes" => c.amplitudes = Some(amplitudes(origin, &raw)?),
            "name" => c.name = Some(typed(origin, &key, &raw, "a string")?),
            _ => c.extra.push((key, raw.get().to_owned())),
        }
    }
    c.validate().map_err(|e| Error::validation(origin, e))?;
    Ok(c)
}

/// Parses a config document. Unrecognized keys are kept verbatim in
/// [`NetworkConfig::extra`].
pub fn parse_config(raw: &str) -> Result<NetworkConfig> {
    match read_doc(CONFIG, raw)? {
        Doc::Object(entries) => config_from_entries(CONFIG, entries),
        _ => Err(Error::format(CONFIG, "config must be a JSON object")),
    }
}

fn embedded_config(raw: &str) -> Result<Option<NetworkConfig>> {
    let Doc::Object(entries) = read_doc(GRAPH, raw)? else {
        return Ok(None);
    };
    if find(&entries, GRAPH).is_none() {
        return Ok(None);
    }
    find(&entries, CONFIG)
        .map(|c| parse_config(c.get()))
        .transpose()
}

/// Where a document comes from.
#[derive(Debug, Clone, PartialEq)]
pub enum Source {
    Path(PathBuf),
    Text(String),
    Value(Value),
}

impl From<&Path> for Source {
    fn from(p: &Path) -> Self {
        Source::Path(p.to_owned())
    }
}

impl From<Value> for Source {
    fn from(v: Value) -> Self {
        Source::Value(v)
    }
}

impl Source {
    fn read(&self) -> Result<String> {
        match self {
            Source::Path(p) => std::fs::read_to_string(p).map_err(|source| Error::Io {
                path: p.clone(),
                source,
            }),
            Source::Text(t) => Ok(t.clone()),
            Source::Value(v) => Ok(v.to_string()),
        }
    }

    fn locate(&self, e: Error) -> Error {
        match self {
            Source::Path(p) => e.at(p),
            _ => e,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Bundle {
    pub config: NetworkConfig,
    pub graph: NetworkGraph,
}

/// Loads a graph and an optional config, each from a file or a value, and
/// checks that every vertex the config names exists in the graph.
pub fn load_bundle(config: Option<&Source>, graph: &Source) -> Result<Bundle> {
    let graph_text = graph.read()?;
    let g = parse_graph(&graph_text).map_err(|e| graph.locate(e))?;
    let (c, origin) = match config {
        Some(src) => {
            let text = src.read()?;
            (parse_config(&text).map_err(|e| src.locate(e))?, src)
        }
        None => (
            embedded_config(&graph_text)
                .map_err(|e| graph.locate(e))?
                .unwrap_or_default(),
            graph,
        ),
    };
    c.validate_against(&g)
        .map_err(|e| origin.locate(Error::validation(CONFIG, e)))?;
    Ok(Bundle {
        config: c,
        graph: g,
    })
}

/// Writes a graph in the nested tuple-key shape. Parsing the output yields
/// the same edge list.
pub fn serialize_graph(g: &NetworkGraph) -> String {
    let mut out = String::from("{\"graph\": {");
    for (i, e) in g.edges().iter().enumerate() {
        if i > 0 {
            out.push_str(", ");
        }
        let w = serde_json::to_string(&e.weight).expect("finite weight");
        let _ = write!(
            out,
            "\"({}, {}, {}, {})\": {w}",
            e.v1, e.v2, e.mode1, e.mode2
        );
    }
    out.push_str("}}");
    out
}
