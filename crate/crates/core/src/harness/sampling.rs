//! Random instances for the property suites.

use rand::seq::IndexedRandom;
use rand::Rng;

use super::assignments::random_lists;
use crate::coloring::{enumerate_l_colorings, Color, Coloring, ListAssignment};
use crate::graph::{vertex_connectivity, Graph};

/// `G(n, p)` conditioned on being connected.
pub fn random_connected_graph(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    loop {
        let g = random_graph(rng, n, p);
        if g.is_connected() {
            return g;
        }
    }
}

pub fn random_graph(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    let edges: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|_| rng.random_bool(p))
        .collect();
    Graph::from_edges(n, edges).expect("pairs are distinct")
}

/// `G(n, p)` conditioned on vertex connectivity at least `k` and not being
/// complete; `None` after `tries` rejections.
pub fn random_k_connected_graph(rng: &mut impl Rng, n: usize, k: usize, p: f64, tries: usize) -> Option<Graph> {
    (0..tries)
        .map(|_| random_graph(rng, n, p))
        .find(|g| !g.is_complete() && vertex_connectivity(g) >= k)
}

/// Tight lists drawn from `{1..cap}`.
pub fn random_tight_lists(rng: &mut impl Rng, g: &Graph, cap: usize) -> ListAssignment {
    let sizes: Vec<usize> = g.vertices().map(|v| g.degree(v)).collect();
    random_lists(&sizes, cap, rng)
}

/// Adds one color absent from `L(v)`, taken from `{1..=cap + 1}`.
pub fn add_surplus(rng: &mut impl Rng, lists: &ListAssignment, v: usize, cap: usize) -> ListAssignment {
    let missing: Vec<Color> = (1..=cap as Color + 1).filter(|&c| !lists.contains(v, c)).collect();
    let mut raw = lists.lists().to_vec();
    raw[v].push(
        *missing
            .choose(rng)
            .expect("cap + 1 colors exceed a list of size at most cap"),
    );
    ListAssignment::new(raw).expect("lists stay nonempty")
}

/// A uniformly random L-coloring, if any exists.
pub fn random_l_coloring(rng: &mut impl Rng, g: &Graph, lists: &ListAssignment) -> Option<Coloring> {
    enumerate_l_colorings(g, lists).choose(rng).cloned()
}
