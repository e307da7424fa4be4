//! Kempe chains, Kempe changes and their L-validity.

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::coloring::{Color, Coloring, ListAssignment};
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

/// A Kempe change: swap the colors of `pair` on `chain`, a component of the
/// subgraph induced by the two colors.
///
/// `pair` is stored ascending and `chain` sorted, so equality is equality of
/// the unordered pair and the vertex set.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct KempeMove {
    pub pair: [Color; 2],
    pub chain: Vec<Vertex>,
}

impl KempeMove {
    pub fn new(a: Color, b: Color, mut chain: Vec<Vertex>) -> Self {
        chain.sort_unstable();
        chain.dedup();
        KempeMove {
            pair: [a.min(b), a.max(b)],
            chain,
        }
    }

    /// The color `c` becomes under this move.
    pub fn swapped(&self, c: Color) -> Color {
        if c == self.pair[0] {
            self.pair[1]
        } else {
            self.pair[0]
        }
    }

    /// Swaps the pair on the chain without checking that it is a chain.
    pub fn apply_unchecked(&self, c: &Coloring) -> Coloring {
        let mut out = c.clone();
        for &v in &self.chain {
            out.set(v, self.swapped(c.color(v)));
        }
        out
    }
}

/// The component containing `v` of the subgraph induced by colors
/// `{c(v), b}`.
pub fn kempe_chain(g: &Graph, c: &Coloring, v: Vertex, b: Color) -> KempeMove {
    let a = c.color(v);
    debug_assert_ne!(a, b, "a Kempe chain needs two distinct colors");
    let mut seen = vec![false; g.n()];
    let chain = chain_from(g, c, v, a, b, &mut seen);
    KempeMove::new(a, b, chain)
}

/// BFS over vertices colored `a` or `b`, starting at `start`, marking `seen`.
fn chain_from(g: &Graph, c: &Coloring, start: Vertex, a: Color, b: Color, seen: &mut [bool]) -> Vec<Vertex> {
    seen[start] = true;
    let mut chain = vec![start];
    let mut queue = VecDeque::from([start]);
    while let Some(u) = queue.pop_front() {
        for &w in g.neighbors(u) {
            let cw = c.color(w);
            if !seen[w] && (cw == a || cw == b) {
                seen[w] = true;
                chain.push(w);
                queue.push_back(w);
            }
        }
    }
    chain
}

/// True iff `m` is exactly a Kempe chain of `c`.
pub fn is_chain_of(g: &Graph, c: &Coloring, m: &KempeMove) -> bool {
    let [a, b] = m.pair;
    let Some(&first) = m.chain.first() else {
        return false;
    };
    if a == b || c.len() != g.n() || m.chain.iter().any(|&v| v >= g.n()) {
        return false;
    }
    let cf = c.color(first);
    if cf != a && cf != b {
        return false;
    }
    let other = if cf == a { b } else { a };
    kempe_chain(g, c, first, other) == *m
}

/// Performs the Kempe change after checking that `m` is a chain of `c`.
pub fn apply_move(g: &Graph, c: &Coloring, m: &KempeMove) -> Result<Coloring> {
    if !is_chain_of(g, c, m) {
        return Err(Error::NotAChain);
    }
    Ok(m.apply_unchecked(c))
}

/// Every chain vertex can take its swapped color.
pub fn is_l_valid(lists: &ListAssignment, c: &Coloring, m: &KempeMove) -> bool {
    m.chain.iter().all(|&u| lists.contains(u, m.swapped(c.color(u))))
}

/// All distinct L-valid Kempe changes of an L-coloring, over every pair of
/// colors from the palette. Sorted by `(pair, chain)`.
pub fn valid_moves(g: &Graph, lists: &ListAssignment, c: &Coloring) -> Vec<KempeMove> {
    let palette = lists.palette();
    let mut out = Vec::new();
    for_each_valid_move(g, lists, c, &palette, |m| out.push(m));
    out
}

/// Streams the L-valid moves of `c`; `palette` must be `lists.palette()`.
pub(crate) fn for_each_valid_move(
    g: &Graph,
    lists: &ListAssignment,
    c: &Coloring,
    palette: &[Color],
    mut emit: impl FnMut(KempeMove),
) {
    let n = g.n();
    let mut seen = vec![false; n];
    for (i, &a) in palette.iter().enumerate() {
        for &b in &palette[i + 1..] {
            seen.iter_mut().for_each(|s| *s = false);
            for v in 0..n {
                let cv = c.color(v);
                if seen[v] || (cv != a && cv != b) {
                    continue;
                }
                let chain = chain_from(g, c, v, a, b, &mut seen);
                let valid = chain.iter().all(|&u| {
                    let cu = c.color(u);
                    lists.contains(u, if cu == a { b } else { a })
                });
                if valid {
                    emit(KempeMove::new(a, b, chain));
                }
            }
        }
    }
}

/// The blocking chain vertices of `H_{c(v), a}(v)`, split by graph distance
/// from `v`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct BoundarySets {
    /// Chain neighbors `u` of `v` with `c(v) ∉ L(u)`.
    pub n1: Vec<Vertex>,
    /// Chain vertices at distance 2 with `a ∉ L(u)`.
    pub n2: Vec<Vertex>,
    /// Chain vertices at distance ≥ 3 missing `c(v)` or `a`.
    pub n3plus: Vec<Vertex>,
}

impl BoundarySets {
    pub fn is_empty(&self) -> bool {
        self.n1.is_empty() && self.n2.is_empty() && self.n3plus.is_empty()
    }
}

/// Computes the boundary sets of the chain on `{c(v), a}` at `v`, with
/// distances measured in `g`.
pub fn boundary_sets(g: &Graph, lists: &ListAssignment, c: &Coloring, v: Vertex, a: Color) -> Result<BoundarySets> {
    g.check_vertex(v)?;
    let cv = c.color(v);
    if a == cv {
        return Err(Error::Precondition(format!(
            "color {a} is already the color of vertex {v}"
        )));
    }
    if !lists.contains(v, a) {
        return Err(Error::Precondition(format!("color {a} is not in L({v})")));
    }
    let chain = kempe_chain(g, c, v, a);
    let dist = g.bfs_distances(v);
    let mut out = BoundarySets::default();
    for &u in &chain.chain {
        match dist[u] {
            Some(1) if !lists.contains(u, cv) => out.n1.push(u),
            Some(2) if !lists.contains(u, a) => out.n2.push(u),
            Some(d) if d >= 3 && !(lists.contains(u, cv) && lists.contains(u, a)) => out.n3plus.push(u),
            _ => {}
        }
    }
    Ok(out)
}
