//! List assignments, colorings, and the constructions built on them.

mod blockwise;
mod enumerate;
mod greedy;
mod reduced;
mod special;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

pub use blockwise::{is_blockwise_uniform, is_l_colorable_characterized, BlockwiseWitness};
pub use enumerate::{
    count_l_colorings, enumerate_l_colorings, enumerate_l_colorings_capped, first_l_coloring, for_each_l_coloring,
};
pub use greedy::greedy_extend;
pub use reduced::{derive_reduced_assignment, Forbid, ReducedAssignment};
pub use special::{special_vertices, SpecialEntry, SpecialReport};

/// Colors are positive integers.
pub type Color = u32;

/// A total map from vertices to colors.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Coloring(Vec<Color>);

impl Coloring {
    pub fn new(colors: Vec<Color>) -> Self {
        Coloring(colors)
    }

    pub fn colors(&self) -> &[Color] {
        &self.0
    }

    pub fn color(&self, v: Vertex) -> Color {
        self.0[v]
    }

    pub fn set(&mut self, v: Vertex, c: Color) {
        self.0[v] = c;
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn into_inner(self) -> Vec<Color> {
        self.0
    }

    pub fn is_proper(&self, g: &Graph) -> bool {
        self.0.len() == g.n() && g.edges().all(|(u, v)| self.0[u] != self.0[v])
    }
}

/// Per-vertex color lists. Lists are kept sorted and duplicate-free; every
/// list is nonempty and every color positive.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ListAssignment {
    lists: Vec<Vec<Color>>,
}

impl ListAssignment {
    pub fn new(lists: Vec<Vec<Color>>) -> Result<Self> {
        let mut lists = lists;
        for (v, list) in lists.iter_mut().enumerate() {
            list.sort_unstable();
            list.dedup();
            if list.is_empty() {
                return Err(Error::EmptyList(v));
            }
            if list[0] == 0 {
                return Err(Error::InvalidLists(format!(
                    "vertex {v} lists color 0; colors are positive"
                )));
            }
        }
        Ok(ListAssignment { lists })
    }

    /// The same list `{1, ..., k}` on each of `n` vertices.
    pub fn identical(n: usize, k: Color) -> Self {
        ListAssignment {
            lists: vec![(1..=k).collect(); n],
        }
    }

    pub fn len(&self) -> usize {
        self.lists.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lists.is_empty()
    }

    pub fn list(&self, v: Vertex) -> &[Color] {
        &self.lists[v]
    }

    pub fn lists(&self) -> &[Vec<Color>] {
        &self.lists
    }

    pub fn contains(&self, v: Vertex, c: Color) -> bool {
        self.lists[v].binary_search(&c).is_ok()
    }

    /// Union of all lists, ascending.
    pub fn palette(&self) -> Vec<Color> {
        let mut p: Vec<Color> = self.lists.iter().flatten().copied().collect();
        p.sort_unstable();
        p.dedup();
        p
    }

    pub fn is_uniform(&self) -> bool {
        self.lists.windows(2).all(|w| w[0] == w[1])
    }

    /// Errors unless there is exactly one list per vertex of `g`.
    pub fn check_covers(&self, g: &Graph) -> Result<()> {
        if self.lists.len() < g.n() {
            Err(Error::MissingVertex(self.lists.len()))
        } else if self.lists.len() > g.n() {
            Err(Error::InvalidLists(format!(
                "{} lists for a graph on {} vertices",
                self.lists.len(),
                g.n()
            )))
        } else {
            Ok(())
        }
    }

    /// `|L(v)| = d(v)` everywhere.
    pub fn is_tight(&self, g: &Graph) -> bool {
        self.lists.len() == g.n() && g.vertices().all(|v| self.lists[v].len() == g.degree(v))
    }

    /// Vertices with `|L(v)| > d(v)`.
    pub fn surplus_vertices(&self, g: &Graph) -> Vec<Vertex> {
        g.vertices().filter(|&v| self.lists[v].len() > g.degree(v)).collect()
    }
}

/// `|L(v)| ≥ d(v)` for every vertex.
pub fn is_degree_assignment(g: &Graph, lists: &ListAssignment) -> Result<bool> {
    lists.check_covers(g)?;
    Ok(g.vertices().all(|v| lists.list(v).len() >= g.degree(v)))
}

/// Like [`is_degree_assignment`] but reports the first deficient vertex.
pub fn require_degree_assignment(g: &Graph, lists: &ListAssignment) -> Result<()> {
    lists.check_covers(g)?;
    match g.vertices().find(|&v| lists.list(v).len() < g.degree(v)) {
        Some(v) => Err(Error::NotDegreeAssignment {
            vertex: v,
            size: lists.list(v).len(),
            degree: g.degree(v),
        }),
        None => Ok(()),
    }
}

/// Proper and list-respecting.
pub fn is_l_coloring(g: &Graph, lists: &ListAssignment, c: &Coloring) -> bool {
    c.len() == g.n() && lists.len() == g.n() && g.vertices().all(|v| lists.contains(v, c.color(v))) && c.is_proper(g)
}
