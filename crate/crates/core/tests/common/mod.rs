//! Brute-force reference implementations, written against adjacency
//! matrices only, for cross-checking the library.
#![allow(dead_code)]

use std::collections::{HashMap, VecDeque};

use kempe_reconfig::Graph;

pub struct Dense {
    pub n: usize,
    pub adj: Vec<Vec<bool>>,
}

impl Dense {
    pub fn of(g: &Graph) -> Dense {
        let n = g.n();
        let mut adj = vec![vec![false; n]; n];
        for (u, v) in g.edges() {
            adj[u][v] = true;
            adj[v][u] = true;
        }
        Dense { n, adj }
    }

    pub fn proper(&self, col: &[u32]) -> bool {
        (0..self.n).all(|u| (u + 1..self.n).all(|v| !self.adj[u][v] || col[u] != col[v]))
    }
}

/// Every tuple in the product of the lists that is proper, in
/// lexicographic order.
pub fn colorings(d: &Dense, lists: &[Vec<u32>]) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut idx = vec![0usize; d.n];
    if lists.iter().any(Vec::is_empty) {
        return out;
    }
    loop {
        let col: Vec<u32> = (0..d.n).map(|v| lists[v][idx[v]]).collect();
        if d.proper(&col) {
            out.push(col);
        }
        let mut i = d.n;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            idx[i] += 1;
            if idx[i] < lists[i].len() {
                break;
            }
            idx[i] = 0;
        }
    }
}

/// Vertices reachable from `v` through vertices colored `col[v]` or `b`.
pub fn chain(d: &Dense, col: &[u32], v: usize, b: u32) -> Vec<usize> {
    let a = col[v];
    let mut seen = vec![false; d.n];
    seen[v] = true;
    let mut queue = VecDeque::from([v]);
    while let Some(u) = queue.pop_front() {
        for w in 0..d.n {
            if d.adj[u][w] && !seen[w] && (col[w] == a || col[w] == b) {
                seen[w] = true;
                queue.push_back(w);
            }
        }
    }
    (0..d.n).filter(|&u| seen[u]).collect()
}

pub fn swap(col: &[u32], chain: &[usize], a: u32, b: u32) -> Vec<u32> {
    let mut out = col.to_vec();
    for &u in chain {
        out[u] = if col[u] == a { b } else { a };
    }
    out
}

pub fn respects(lists: &[Vec<u32>], col: &[u32]) -> bool {
    col.iter().zip(lists).all(|(c, l)| l.contains(c))
}

/// Connected components of the reconfiguration graph by BFS.
pub fn class_count(g: &Graph, lists: &[Vec<u32>]) -> (usize, usize) {
    let d = Dense::of(g);
    let all = colorings(&d, lists);
    let index: HashMap<&[u32], usize> = all.iter().enumerate().map(|(i, c)| (c.as_slice(), i)).collect();
    let mut palette: Vec<u32> = lists.iter().flatten().copied().collect();
    palette.sort_unstable();
    palette.dedup();
    let mut comp = vec![usize::MAX; all.len()];
    let mut count = 0;
    for s in 0..all.len() {
        if comp[s] != usize::MAX {
            continue;
        }
        comp[s] = count;
        let mut queue = VecDeque::from([s]);
        while let Some(i) = queue.pop_front() {
            let col = &all[i];
            for v in 0..d.n {
                for &b in &palette {
                    if b == col[v] {
                        continue;
                    }
                    let ch = chain(&d, col, v, b);
                    let next = swap(col, &ch, col[v], b);
                    if respects(lists, &next) {
                        let j = index[next.as_slice()];
                        if comp[j] == usize::MAX {
                            comp[j] = count;
                            queue.push_back(j);
                        }
                    }
                }
            }
        }
        count += 1;
    }
    (all.len(), count)
}
