//! JSON and graph6 input/output.
//!
//! Graphs: `{"n": 5, "edges": [[0, 1], ...]}` or graph6 text. Lists:
//! `{"lists": {"0": [1, 2], ...}}` with one key per vertex. Colorings:
//! `{"colors": {"0": 2, ...}}`. Moves: `{"pair": [a, b], "chain": [...]}`.

use std::collections::BTreeMap;

use serde::ser::{SerializeMap, Serializer};
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::coloring::{Color, Coloring, ListAssignment};
use crate::error::{Error, Result};
use crate::graph::{parse_graph6, Graph, Vertex};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    pub n: usize,
    pub edges: Vec<[Vertex; 2]>,
}

impl From<&Graph> for GraphJson {
    fn from(g: &Graph) -> Self {
        GraphJson {
            n: g.n(),
            edges: g.edges().map(|(u, v)| [u, v]).collect(),
        }
    }
}

impl TryFrom<GraphJson> for Graph {
    type Error = Error;

    fn try_from(j: GraphJson) -> Result<Graph> {
        Graph::from_edges(j.n, j.edges.into_iter().map(|[u, v]| (u, v)))
    }
}

/// Graph text is JSON when it starts with `{`, else graph6 (one graph).
pub fn parse_graph(text: &str) -> Result<Graph> {
    let t = text.trim_start();
    if t.starts_with('{') {
        return serde_json::from_str::<GraphJson>(t)?.try_into();
    }
    let mut lines = graph6_lines(t);
    let first = lines
        .next()
        .ok_or_else(|| Error::InvalidGraph("no graph in input".into()))?;
    if lines.next().is_some() {
        return Err(Error::InvalidGraph("expected one graph, found several lines".into()));
    }
    parse_graph6(first)
}

/// Every graph6 line of a corpus file; blank lines and `#` comments are skipped.
pub fn parse_graph_corpus(text: &str) -> Result<Vec<Graph>> {
    let t = text.trim_start();
    if t.starts_with('{') {
        return Ok(vec![parse_graph(t)?]);
    }
    graph6_lines(t).map(parse_graph6).collect()
}

fn graph6_lines(text: &str) -> impl Iterator<Item = &str> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
}

/// Hex SHA-256 of a byte string.
pub fn sha256_hex(bytes: &[u8]) -> String {
    Sha256::digest(bytes).iter().map(|b| format!("{b:02x}")).collect()
}

/// Serializes per-vertex values as `{"0": .., "1": .., ...}` in vertex order.
fn serialize_dense<S: Serializer, T: Serialize>(items: &[T], s: S) -> std::result::Result<S::Ok, S::Error> {
    let mut map = s.serialize_map(Some(items.len()))?;
    for (v, item) in items.iter().enumerate() {
        map.serialize_entry(&v.to_string(), item)?;
    }
    map.end()
}

/// For `#[serde(serialize_with)]` on list-assignment fields.
pub fn serialize_lists<S: Serializer>(lists: &ListAssignment, s: S) -> std::result::Result<S::Ok, S::Error> {
    serialize_dense(lists.lists(), s)
}

fn dense<T>(map: BTreeMap<String, T>, what: &str) -> Result<Vec<T>> {
    let mut indexed = Vec::with_capacity(map.len());
    for (k, v) in map {
        let i: Vertex = k
            .parse()
            .map_err(|_| Error::InvalidLists(format!("{what} key {k:?} is not a vertex index")))?;
        indexed.push((i, v));
    }
    indexed.sort_by_key(|(i, _)| *i);
    for (expect, (i, _)) in indexed.iter().enumerate() {
        if *i != expect {
            return Err(Error::MissingVertex(expect));
        }
    }
    Ok(indexed.into_iter().map(|(_, v)| v).collect())
}

#[derive(Deserialize)]
struct ListsIn {
    lists: BTreeMap<String, Vec<Color>>,
}

#[derive(Deserialize)]
struct ColorsIn {
    colors: BTreeMap<String, Color>,
}

pub fn parse_lists(text: &str) -> Result<ListAssignment> {
    let raw: ListsIn = serde_json::from_str(text)?;
    ListAssignment::new(dense(raw.lists, "lists")?)
}

pub fn parse_coloring(text: &str) -> Result<Coloring> {
    let raw: ColorsIn = serde_json::from_str(text)?;
    Ok(Coloring::new(dense(raw.colors, "colors").map_err(|e| match e {
        Error::MissingVertex(v) => Error::InvalidColoring(format!("no color for vertex {v}")),
        other => other,
    })?))
}

struct Wrapped<'a, T>(&'static str, &'a [T]);

impl<T: Serialize> Serialize for Wrapped<'_, T> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        struct Inner<'a, T>(&'a [T]);
        impl<T: Serialize> Serialize for Inner<'_, T> {
            fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
                serialize_dense(self.0, s)
            }
        }
        let mut map = s.serialize_map(Some(1))?;
        map.serialize_entry(self.0, &Inner(self.1))?;
        map.end()
    }
}

pub fn lists_to_json(lists: &ListAssignment) -> String {
    serde_json::to_string(&Wrapped("lists", lists.lists())).expect("lists serialize")
}

pub fn coloring_to_json(c: &Coloring) -> String {
    serde_json::to_string(&Wrapped("colors", c.colors())).expect("coloring serialize")
}
