//! Small connected graphs up to isomorphism, by vertex augmentation.
//!
//! Every graph on `k + 1` vertices arises from some graph on `k` vertices
//! by adding a vertex joined to a subset, so augmenting all graphs
//! (connected or not) and deduplicating by a canonical code is complete.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::graph::{vertex_connectivity, Graph};

pub const MAX_CORPUS_ORDER: usize = 8;

/// Adjacency rows as bitmasks.
type Rows = Vec<u16>;

fn to_rows(g: &Graph) -> Rows {
    g.vertices()
        .map(|v| g.neighbors(v).iter().fold(0u16, |m, &u| m | (1 << u)))
        .collect()
}

fn from_rows(rows: &[u16]) -> Graph {
    let n = rows.len();
    let edges = (0..n).flat_map(|v| (v + 1..n).filter(move |&u| rows[v] >> u & 1 == 1).map(move |u| (v, u)));
    Graph::from_edges(n, edges).expect("rows describe a simple graph")
}

/// Upper-triangle bits in graph6 order (column by column), first bit most
/// significant.
fn code(rows: &[u16], perm: &[usize]) -> u64 {
    let n = perm.len();
    let mut c = 0u64;
    for j in 1..n {
        for i in 0..j {
            c = c << 1 | u64::from(rows[perm[i]] >> perm[j] & 1);
        }
    }
    c
}

/// The largest code over labelings that list vertices by a refined degree
/// invariant; the invariant is isomorphism-stable, so the result is too.
fn canonical(rows: &[u16]) -> (u64, Vec<usize>) {
    let n = rows.len();
    let deg = |v: usize| rows[v].count_ones();
    let key = |v: usize| {
        let mut nd: Vec<u32> = (0..n).filter(|&u| rows[v] >> u & 1 == 1).map(deg).collect();
        nd.sort_unstable_by(|a, b| b.cmp(a));
        (
            std::cmp::Reverse(deg(v)),
            nd.into_iter().map(std::cmp::Reverse).collect::<Vec<_>>(),
        )
    };
    let mut verts: Vec<usize> = (0..n).collect();
    verts.sort_by_key(|&v| key(v));
    let mut groups: Vec<Vec<usize>> = Vec::new();
    for &v in &verts {
        match groups.last_mut() {
            Some(g) if key(g[0]) == key(v) => g.push(v),
            _ => groups.push(vec![v]),
        }
    }
    let mut best = (0u64, verts.clone());
    let mut found = false;
    let mut perm = Vec::with_capacity(n);
    fn go(
        groups: &mut [Vec<usize>],
        gi: usize,
        perm: &mut Vec<usize>,
        rows: &[u16],
        best: &mut (u64, Vec<usize>),
        found: &mut bool,
    ) {
        if gi == groups.len() {
            let c = code(rows, perm);
            if !*found || c > best.0 {
                *best = (c, perm.clone());
                *found = true;
            }
            return;
        }
        let k = groups[gi].len();
        permute(groups, gi, 0, k, perm, rows, best, found);
    }
    #[allow(clippy::too_many_arguments)]
    fn permute(
        groups: &mut [Vec<usize>],
        gi: usize,
        pos: usize,
        k: usize,
        perm: &mut Vec<usize>,
        rows: &[u16],
        best: &mut (u64, Vec<usize>),
        found: &mut bool,
    ) {
        if pos == k {
            go(groups, gi + 1, perm, rows, best, found);
            return;
        }
        for i in pos..k {
            groups[gi].swap(pos, i);
            perm.push(groups[gi][pos]);
            permute(groups, gi, pos + 1, k, perm, rows, best, found);
            perm.pop();
            groups[gi].swap(pos, i);
        }
    }
    go(&mut groups, 0, &mut perm, rows, &mut best, &mut found);
    best
}

fn relabel(rows: &[u16], perm: &[usize]) -> Rows {
    let n = perm.len();
    let mut pos = vec![0; n];
    for (i, &v) in perm.iter().enumerate() {
        pos[v] = i;
    }
    (0..n)
        .map(|i| {
            let v = perm[i];
            (0..n)
                .filter(|&u| rows[v] >> u & 1 == 1)
                .fold(0u16, |m, u| m | (1 << pos[u]))
        })
        .collect()
}

/// Canonically relabelled copy of `g` (`n ≤ MAX_CORPUS_ORDER`).
pub fn canonical_form(g: &Graph) -> Result<Graph> {
    if g.n() > MAX_CORPUS_ORDER {
        return Err(Error::Precondition(format!(
            "canonical labelling supports at most {MAX_CORPUS_ORDER} vertices"
        )));
    }
    let rows = to_rows(g);
    let (_, perm) = canonical(&rows);
    Ok(from_rows(&relabel(&rows, &perm)))
}

/// All connected graphs on `1..=max_n` vertices with vertex connectivity at
/// least `min_connectivity`, one per isomorphism class, ordered by order and
/// then by canonical code.
pub fn connected_graphs(max_n: usize, min_connectivity: usize) -> Result<Vec<Graph>> {
    if max_n > MAX_CORPUS_ORDER {
        return Err(Error::Precondition(format!(
            "corpus generation supports at most {MAX_CORPUS_ORDER} vertices"
        )));
    }
    let mut out = Vec::new();
    if max_n == 0 {
        return Ok(out);
    }
    // every graph on k vertices, as canonical rows
    let mut level: BTreeSet<(u64, Rows)> = BTreeSet::from([(0, vec![0u16])]);
    for k in 1..=max_n {
        for (_, rows) in &level {
            let g = from_rows(rows);
            if g.is_connected() && (min_connectivity == 0 || vertex_connectivity(&g) >= min_connectivity) {
                out.push(g);
            }
        }
        if k == max_n {
            break;
        }
        let mut next = BTreeSet::new();
        for (_, rows) in &level {
            for subset in 0u16..(1 << k) {
                let mut grown = rows.clone();
                for (v, r) in grown.iter_mut().enumerate() {
                    if subset >> v & 1 == 1 {
                        *r |= 1 << k;
                    }
                }
                grown.push(subset);
                let (c, perm) = canonical(&grown);
                next.insert((c, relabel(&grown, &perm)));
            }
        }
        level = next;
    }
    Ok(out)
}
