//! Vertex connectivity, with `κ(K_n) = n − 1`.
//!
//! Small graphs go through an exhaustive vertex-cut search; larger ones use
//! unit-capacity max-flow on the split digraph (Even's reduction).

use std::collections::VecDeque;

use super::{Graph, Vertex};

/// Graphs with at most this many vertices use the exhaustive method.
pub const BRUTE_FORCE_LIMIT: usize = 12;

pub fn vertex_connectivity(g: &Graph) -> usize {
    if g.n() <= BRUTE_FORCE_LIMIT {
        vertex_connectivity_brute_force(g)
    } else {
        vertex_connectivity_flow(g)
    }
}

/// Smallest `k` such that deleting some `k` vertices disconnects `g`.
pub fn vertex_connectivity_brute_force(g: &Graph) -> usize {
    let n = g.n();
    if n <= 1 {
        return 0;
    }
    if g.is_complete() {
        return n - 1;
    }
    (0..n - 1)
        .find(|&k| !is_k_connected_brute_force(g, k + 1))
        .unwrap_or(n - 1)
}

/// True iff `g − S` is connected for every `S` with `|S| < k` (and
/// `n > k`, or `g` complete with `n ≥ k + 1`).
pub fn is_k_connected_brute_force(g: &Graph, k: usize) -> bool {
    let n = g.n();
    if n <= k {
        return false;
    }
    let mut removed = vec![false; n];
    let mut chosen = Vec::with_capacity(k);
    (0..k).all(|size| subsets_keep_connected(g, size, 0, &mut chosen, &mut removed))
}

fn subsets_keep_connected(
    g: &Graph,
    size: usize,
    from: Vertex,
    chosen: &mut Vec<Vertex>,
    removed: &mut [bool],
) -> bool {
    if chosen.len() == size {
        return g.is_connected_without(removed);
    }
    for v in from..g.n() {
        chosen.push(v);
        removed[v] = true;
        let ok = subsets_keep_connected(g, size, v + 1, chosen, removed);
        removed[v] = false;
        chosen.pop();
        if !ok {
            return false;
        }
    }
    true
}

/// Flow-based connectivity. Only non-adjacent pairs `(v_i, w)` with `i ≤ κ`
/// need to be examined: some minimum cut misses one of `v_0..=v_κ`.
pub fn vertex_connectivity_flow(g: &Graph) -> usize {
    let n = g.n();
    if n <= 1 {
        return 0;
    }
    if g.is_complete() {
        return n - 1;
    }
    if !g.is_connected() {
        return 0;
    }
    let mut best = g.min_degree();
    let mut i = 0;
    while i <= best && i < n {
        for j in i + 1..n {
            if !g.has_edge(i, j) {
                best = best.min(local_connectivity(g, i, j, best));
            }
        }
        i += 1;
    }
    best
}

/// Number of internally vertex-disjoint `s`–`t` paths, stopping at `limit`.
fn local_connectivity(g: &Graph, s: Vertex, t: Vertex, limit: usize) -> usize {
    // Vertex v becomes v_in = 2v and v_out = 2v + 1 with an arc of capacity 1.
    let nodes = 2 * g.n();
    let mut head = Vec::new();
    let mut cap = Vec::new();
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); nodes];
    let mut add_arc = |adj: &mut Vec<Vec<usize>>, from: usize, to: usize, c: u32| {
        adj[from].push(head.len());
        head.push(to);
        cap.push(c);
        adj[to].push(head.len());
        head.push(from);
        cap.push(0);
    };
    let big = g.n() as u32;
    for v in g.vertices() {
        let c = if v == s || v == t { big } else { 1 };
        add_arc(&mut adj, 2 * v, 2 * v + 1, c);
        for &w in g.neighbors(v) {
            add_arc(&mut adj, 2 * v + 1, 2 * w, 1);
        }
    }
    let (source, sink) = (2 * s + 1, 2 * t);
    let mut flow = 0;
    let mut parent_arc = vec![usize::MAX; nodes];
    while flow < limit {
        parent_arc.iter_mut().for_each(|p| *p = usize::MAX);
        let mut seen = vec![false; nodes];
        seen[source] = true;
        let mut queue = VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            if u == sink {
                break;
            }
            for &arc in &adj[u] {
                let w = head[arc];
                if cap[arc] > 0 && !seen[w] {
                    seen[w] = true;
                    parent_arc[w] = arc;
                    queue.push_back(w);
                }
            }
        }
        if !seen[sink] {
            break;
        }
        let mut v = sink;
        while v != source {
            let arc = parent_arc[v];
            cap[arc] -= 1;
            cap[arc ^ 1] += 1;
            v = head[arc ^ 1];
        }
        flow += 1;
    }
    flow
}
