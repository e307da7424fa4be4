use super::{Color, ListAssignment};
use crate::graph::{Graph, Vertex};

/// A special vertex with its special colors, split by special neighbor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpecialEntry {
    pub vertex: Vertex,
    /// `(u, L(v) \ L(u))` for every neighbor `u` with a nonempty difference.
    pub via: Vec<(Vertex, Vec<Color>)>,
}

impl SpecialEntry {
    /// All special colors of the vertex, ascending.
    pub fn colors(&self) -> Vec<Color> {
        let mut c: Vec<Color> = self.via.iter().flat_map(|(_, cs)| cs.iter().copied()).collect();
        c.sort_unstable();
        c.dedup();
        c
    }

    /// Special neighbors witnessing color `c`.
    pub fn neighbors_for(&self, c: Color) -> impl Iterator<Item = Vertex> + '_ {
        self.via.iter().filter(move |(_, cs)| cs.contains(&c)).map(|(u, _)| *u)
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SpecialReport {
    /// Sorted by vertex.
    pub entries: Vec<SpecialEntry>,
}

impl SpecialReport {
    pub fn get(&self, v: Vertex) -> Option<&SpecialEntry> {
        self.entries
            .binary_search_by_key(&v, |e| e.vertex)
            .ok()
            .map(|i| &self.entries[i])
    }

    pub fn is_special(&self, v: Vertex) -> bool {
        self.get(v).is_some()
    }

    pub fn is_special_color(&self, v: Vertex, c: Color) -> bool {
        self.get(v).is_some_and(|e| e.via.iter().any(|(_, cs)| cs.contains(&c)))
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

/// Vertices `v` with a neighbor `u` such that `L(v) \ L(u)` is nonempty.
pub fn special_vertices(g: &Graph, lists: &ListAssignment) -> SpecialReport {
    let entries = g
        .vertices()
        .filter_map(|v| {
            let via: Vec<(Vertex, Vec<Color>)> = g
                .neighbors(v)
                .iter()
                .filter_map(|&u| {
                    let diff: Vec<Color> = lists
                        .list(v)
                        .iter()
                        .copied()
                        .filter(|&c| !lists.contains(u, c))
                        .collect();
                    (!diff.is_empty()).then_some((u, diff))
                })
                .collect();
            (!via.is_empty()).then_some(SpecialEntry { vertex: v, via })
        })
        .collect();
    SpecialReport { entries }
}
