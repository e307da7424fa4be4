use std::collections::BTreeMap;

use super::{Color, Coloring, ListAssignment};
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

/// Colors to strike from the lists of surviving vertices.
pub type Forbid = BTreeMap<Vertex, Vec<Color>>;

/// A list assignment `L'` on `g − removed`, with the vertex bookkeeping
/// needed to move between the two graphs.
#[derive(Clone, Debug)]
pub struct ReducedAssignment {
    pub graph: Graph,
    /// `kept[i]` is the original index of vertex `i` of `graph`.
    pub kept: Vec<Vertex>,
    pub lists: ListAssignment,
}

impl ReducedAssignment {
    pub fn index_of(&self, original: Vertex) -> Option<usize> {
        self.kept.binary_search(&original).ok()
    }

    pub fn is_degree_assignment(&self) -> bool {
        self.graph
            .vertices()
            .all(|v| self.lists.list(v).len() >= self.graph.degree(v))
    }

    /// `|L'(z)| > d_{g − removed}(z)` for the original vertex `z`.
    pub fn has_surplus_at(&self, original: Vertex) -> bool {
        self.index_of(original)
            .is_some_and(|i| self.lists.list(i).len() > self.graph.degree(i))
    }

    /// Extends a coloring of the reduced graph to the original one, giving
    /// the removed vertices the listed colors.
    pub fn lift(&self, sub: &Coloring, removed_colors: &[(Vertex, Color)]) -> Coloring {
        let n = self.kept.len() + removed_colors.len();
        let mut colors = vec![0; n];
        for (i, &v) in self.kept.iter().enumerate() {
            colors[v] = sub.color(i);
        }
        for &(v, c) in removed_colors {
            colors[v] = c;
        }
        Coloring::new(colors)
    }
}

/// `L'(w) = L(w) \ forbid(w)` on `g − removed`.
pub fn derive_reduced_assignment(
    g: &Graph,
    lists: &ListAssignment,
    removed: &[Vertex],
    forbid: &Forbid,
) -> Result<ReducedAssignment> {
    lists.check_covers(g)?;
    for &v in removed {
        g.check_vertex(v)?;
    }
    for &w in forbid.keys() {
        g.check_vertex(w)?;
        if removed.contains(&w) {
            return Err(Error::Precondition(format!(
                "forbidden colors named for removed vertex {w}"
            )));
        }
    }
    let (graph, kept) = g.remove_vertices(removed);
    let mut reduced = Vec::with_capacity(kept.len());
    for &w in &kept {
        let strike = forbid.get(&w).map(Vec::as_slice).unwrap_or(&[]);
        let list: Vec<Color> = lists.list(w).iter().copied().filter(|c| !strike.contains(c)).collect();
        if list.is_empty() {
            return Err(Error::EmptyList(w));
        }
        reduced.push(list);
    }
    Ok(ReducedAssignment {
        graph,
        kept,
        lists: ListAssignment::new(reduced)?,
    })
}
