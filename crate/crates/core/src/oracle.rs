//! Brute-force ground truth: the graph of all L-colorings joined by L-valid
//! Kempe changes.
//!
//! Nodes are exact color vectors in lexicographic order, so a coloring's
//! node index is found by binary search.

use std::collections::VecDeque;
use std::fmt::Write as _;

use serde::Serialize;

use crate::coloring::{enumerate_l_colorings_capped, Color, Coloring, ListAssignment};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::kempe::{for_each_valid_move, KempeMove};

pub const DEFAULT_NODE_CAP: usize = 1_000_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReconfigEdge {
    /// Always `from < to`.
    pub from: usize,
    pub to: usize,
    /// The change taking either endpoint to the other.
    pub kempe_move: KempeMove,
}

#[derive(Clone, Debug)]
pub struct ReconfigGraph {
    pub nodes: Vec<Coloring>,
    pub edges: Vec<ReconfigEdge>,
    adjacency: Vec<Vec<(usize, usize)>>,
}

impl ReconfigGraph {
    pub fn node_index(&self, c: &Coloring) -> Option<usize> {
        self.nodes.binary_search(c).ok()
    }

    /// `(neighbor, edge index)` pairs of node `i`.
    pub fn neighbors(&self, i: usize) -> &[(usize, usize)] {
        &self.adjacency[i]
    }

    /// Graphviz rendering: nodes labelled by color vector, edges by pair.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph reconfiguration {\n");
        for (i, c) in self.nodes.iter().enumerate() {
            let label: Vec<String> = c.colors().iter().map(Color::to_string).collect();
            let _ = writeln!(out, "  n{i} [label=\"{}\"];", label.join(","));
        }
        for e in &self.edges {
            let [a, b] = e.kempe_move.pair;
            let _ = writeln!(out, "  n{} -- n{} [label=\"{a}-{b}\"];", e.from, e.to);
        }
        out.push_str("}\n");
        out
    }
}

fn edge_targets(
    g: &Graph,
    lists: &ListAssignment,
    nodes: &[Coloring],
    palette: &[Color],
    i: usize,
    mut emit: impl FnMut(usize, KempeMove),
) {
    let c = &nodes[i];
    for_each_valid_move(g, lists, c, palette, |m| {
        let target = m.apply_unchecked(c);
        let j = nodes
            .binary_search(&target)
            .expect("an L-valid Kempe change yields an L-coloring");
        emit(j, m);
    });
}

pub fn build_reconfig_graph(g: &Graph, lists: &ListAssignment) -> Result<ReconfigGraph> {
    build_reconfig_graph_capped(g, lists, DEFAULT_NODE_CAP)
}

/// Materializes every node and edge; fails rather than truncating when
/// there are more than `cap` L-colorings.
pub fn build_reconfig_graph_capped(g: &Graph, lists: &ListAssignment, cap: usize) -> Result<ReconfigGraph> {
    lists.check_covers(g)?;
    let nodes = enumerate_l_colorings_capped(g, lists, cap)?;
    let palette = lists.palette();
    let mut edges = Vec::new();
    let mut adjacency = vec![Vec::new(); nodes.len()];
    for i in 0..nodes.len() {
        edge_targets(g, lists, &nodes, &palette, i, |j, m| {
            if i < j {
                adjacency[i].push((j, edges.len()));
                adjacency[j].push((i, edges.len()));
                edges.push(ReconfigEdge {
                    from: i,
                    to: j,
                    kempe_move: m,
                });
            }
        });
    }
    Ok(ReconfigGraph {
        nodes,
        edges,
        adjacency,
    })
}

struct DisjointSets(Vec<usize>);

impl DisjointSets {
    fn new(n: usize) -> Self {
        DisjointSets((0..n).collect())
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.0[x] != x {
            self.0[x] = self.0[self.0[x]];
            x = self.0[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            // keep the smaller index as the root
            self.0[ra.max(rb)] = ra.min(rb);
        }
    }

    /// Class ids numbered by smallest member.
    fn labels(&mut self) -> (Vec<usize>, usize) {
        let n = self.0.len();
        let mut label = vec![usize::MAX; n];
        let mut count = 0;
        let out = (0..n)
            .map(|i| {
                let r = self.find(i);
                if label[r] == usize::MAX {
                    label[r] = count;
                    count += 1;
                }
                label[r]
            })
            .collect();
        (out, count)
    }
}

/// Kempe classes without storing edges: every coloring plus the index of
/// its class, classes numbered by their smallest coloring.
#[derive(Clone, Debug)]
pub struct KempeClasses {
    pub colorings: Vec<Coloring>,
    pub class_of: Vec<usize>,
    pub class_count: usize,
}

impl KempeClasses {
    pub fn index_of(&self, c: &Coloring) -> Option<usize> {
        self.colorings.binary_search(c).ok()
    }

    pub fn class_of_coloring(&self, c: &Coloring) -> Option<usize> {
        self.index_of(c).map(|i| self.class_of[i])
    }

    /// Member node indices of class `k`, ascending.
    pub fn members(&self, k: usize) -> impl Iterator<Item = usize> + '_ {
        self.class_of
            .iter()
            .enumerate()
            .filter(move |(_, &c)| c == k)
            .map(|(i, _)| i)
    }

    /// True iff all colorings matching `pred` share one class (vacuously
    /// true for none).
    pub fn single_class_among(&self, mut pred: impl FnMut(&Coloring) -> bool) -> bool {
        let mut seen = None;
        for (i, c) in self.colorings.iter().enumerate() {
            if pred(c) {
                match seen {
                    None => seen = Some(self.class_of[i]),
                    Some(k) if k != self.class_of[i] => return false,
                    Some(_) => {}
                }
            }
        }
        true
    }

    pub fn report(&self, with_witnesses: bool) -> KempeClassReport {
        let mut classes = vec![Vec::new(); self.class_count];
        for (i, &k) in self.class_of.iter().enumerate() {
            classes[k].push(i);
        }
        let witnesses = with_witnesses.then(|| classes.iter().map(|m| self.colorings[m[0]].clone()).collect());
        KempeClassReport {
            class_count: self.class_count,
            class_sizes: classes.iter().map(Vec::len).collect(),
            classes,
            witnesses,
        }
    }
}

/// Kempe classes by union-find over the valid moves of every coloring.
pub fn classify(g: &Graph, lists: &ListAssignment, cap: usize) -> Result<KempeClasses> {
    lists.check_covers(g)?;
    let colorings = enumerate_l_colorings_capped(g, lists, cap)?;
    let palette = lists.palette();
    let mut sets = DisjointSets::new(colorings.len());
    for i in 0..colorings.len() {
        edge_targets(g, lists, &colorings, &palette, i, |j, _| sets.union(i, j));
    }
    let (class_of, class_count) = sets.labels();
    Ok(KempeClasses {
        colorings,
        class_of,
        class_count,
    })
}

/// The partition of a reconfiguration graph into connected components.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct KempeClassReport {
    pub class_count: usize,
    pub class_sizes: Vec<usize>,
    /// Node indices per class; classes ordered by smallest member.
    #[serde(skip)]
    pub classes: Vec<Vec<usize>>,
    /// One representative (the smallest coloring) per class.
    #[serde(rename = "colorings", skip_serializing_if = "Option::is_none")]
    pub witnesses: Option<Vec<Coloring>>,
}

pub fn kempe_classes(rg: &ReconfigGraph) -> KempeClassReport {
    let mut sets = DisjointSets::new(rg.nodes.len());
    for e in &rg.edges {
        sets.union(e.from, e.to);
    }
    let (class_of, class_count) = sets.labels();
    let mut classes = vec![Vec::new(); class_count];
    for (i, &k) in class_of.iter().enumerate() {
        classes[k].push(i);
    }
    KempeClassReport {
        class_count,
        class_sizes: classes.iter().map(Vec::len).collect(),
        classes,
        witnesses: None,
    }
}

/// A shortest sequence of L-valid Kempe changes from `from` to `to`, or
/// `None` when they lie in different classes.
pub fn find_path(rg: &ReconfigGraph, from: &Coloring, to: &Coloring) -> Result<Option<Vec<KempeMove>>> {
    let s = rg.node_index(from).ok_or(Error::UnknownColoring)?;
    let t = rg.node_index(to).ok_or(Error::UnknownColoring)?;
    let mut via = vec![None; rg.nodes.len()];
    let mut seen = vec![false; rg.nodes.len()];
    seen[s] = true;
    let mut queue = VecDeque::from([s]);
    while let Some(u) = queue.pop_front() {
        if u == t {
            break;
        }
        for &(w, e) in rg.neighbors(u) {
            if !seen[w] {
                seen[w] = true;
                via[w] = Some((u, e));
                queue.push_back(w);
            }
        }
    }
    if !seen[t] {
        return Ok(None);
    }
    let mut moves = Vec::new();
    let mut cur = t;
    while let Some((prev, e)) = via[cur] {
        moves.push(rg.edges[e].kempe_move.clone());
        cur = prev;
    }
    moves.reverse();
    Ok(Some(moves))
}

/// At most one Kempe class (vacuously true with no colorings).
pub fn is_all_equivalent(g: &Graph, lists: &ListAssignment) -> Result<bool> {
    Ok(classify(g, lists, DEFAULT_NODE_CAP)?.class_count <= 1)
}
