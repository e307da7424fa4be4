//! Undirected simple graphs over dense vertex indices `0..n`.
//!
//! Everything the proofs consume lives here: degrees, distance layers,
//! vertex connectivity, the block decomposition, spanning orders for the
//! greedy colorings and recognition of the exceptional graphs.

mod blocks;
mod connectivity;
mod exception;
pub mod families;
mod graph6;
mod order;

use std::collections::VecDeque;

use crate::error::{Error, Result};

pub use blocks::{biconnected_blocks, is_gallai_tree, BlockDecomposition, BlockKind};
pub use connectivity::{
    is_k_connected_brute_force, vertex_connectivity, vertex_connectivity_brute_force, vertex_connectivity_flow,
    BRUTE_FORCE_LIMIT,
};
pub use exception::{classify_exception, is_triangular_prism, Exception};
pub use graph6::{encode_graph6, parse_graph6};
pub use order::{spanning_order, VertexOrder};

pub type Vertex = usize;

/// An undirected simple graph with sorted adjacency lists.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<Vertex>>,
    edge_count: usize,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
            edge_count: 0,
        }
    }

    /// Builds a graph from an edge list. Self-loops, duplicate edges and
    /// out-of-range endpoints are rejected.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut g = Graph::empty(n);
        for (u, v) in edges {
            if u >= n {
                return Err(Error::VertexOutOfRange(u));
            }
            if v >= n {
                return Err(Error::VertexOutOfRange(v));
            }
            if u == v {
                return Err(Error::InvalidGraph(format!("self-loop at vertex {u}")));
            }
            if g.adj[u].contains(&v) {
                return Err(Error::InvalidGraph(format!("duplicate edge {u}-{v}")));
            }
            g.adj[u].push(v);
            g.adj[v].push(u);
            g.edge_count += 1;
        }
        for list in &mut g.adj {
            list.sort_unstable();
        }
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).min().unwrap_or(0)
    }

    pub fn vertices(&self) -> std::ops::Range<Vertex> {
        0..self.n()
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, ns)| ns.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
    }

    pub fn is_complete(&self) -> bool {
        let n = self.n();
        self.adj.iter().all(|ns| ns.len() + 1 == n)
    }

    pub fn is_connected(&self) -> bool {
        self.n() == 0 || self.bfs_distances(0).iter().all(Option::is_some)
    }

    /// Checks connectivity after deleting `removed` (given as a mask).
    pub(crate) fn is_connected_without(&self, removed: &[bool]) -> bool {
        let Some(start) = self.vertices().find(|&v| !removed[v]) else {
            return true;
        };
        let mut seen = removed.to_vec();
        seen[start] = true;
        let mut stack = vec![start];
        while let Some(u) = stack.pop() {
            for &w in &self.adj[u] {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        seen.iter().all(|&s| s)
    }

    /// BFS distances from `source`; `None` for unreachable vertices.
    pub fn bfs_distances(&self, source: Vertex) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n()];
        dist[source] = Some(0);
        let mut queue = VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].unwrap_or(0);
            for &w in &self.adj[u] {
                if dist[w].is_none() {
                    dist[w] = Some(du + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// The layers `N^1(v), N^2(v), ...`: layer `k - 1` holds the vertices at
    /// distance exactly `k`. Each layer is sorted.
    pub fn distance_layers(&self, v: Vertex) -> DistanceLayers {
        let dist = self.bfs_distances(v);
        let mut layers: Vec<Vec<Vertex>> = Vec::new();
        let mut unreached = Vec::new();
        for (u, d) in dist.iter().enumerate() {
            match *d {
                Some(0) => {}
                Some(k) => {
                    if layers.len() < k {
                        layers.resize(k, Vec::new());
                    }
                    layers[k - 1].push(u);
                }
                None => unreached.push(u),
            }
        }
        DistanceLayers { layers, unreached }
    }

    /// The subgraph induced on the vertices not in `removed`, together with
    /// the map from new indices to original ones (ascending).
    pub fn remove_vertices(&self, removed: &[Vertex]) -> (Graph, Vec<Vertex>) {
        let mut gone = vec![false; self.n()];
        for &v in removed {
            gone[v] = true;
        }
        let kept: Vec<Vertex> = self.vertices().filter(|&v| !gone[v]).collect();
        let mut index = vec![usize::MAX; self.n()];
        for (i, &v) in kept.iter().enumerate() {
            index[v] = i;
        }
        let edges = self
            .edges()
            .filter(|&(u, v)| !gone[u] && !gone[v])
            .map(|(u, v)| (index[u], index[v]));
        let sub = Graph::from_edges(kept.len(), edges).expect("induced subgraph of a simple graph");
        (sub, kept)
    }

    pub(crate) fn check_vertex(&self, v: Vertex) -> Result<()> {
        if v < self.n() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange(v))
        }
    }
}

/// Result of [`Graph::distance_layers`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceLayers {
    pub layers: Vec<Vec<Vertex>>,
    /// Vertices in other components.
    pub unreached: Vec<Vertex>,
}

impl DistanceLayers {
    /// `N^k(v)`, empty when `k` is beyond the eccentricity. `k = 0` is not a layer.
    pub fn layer(&self, k: usize) -> &[Vertex] {
        if k == 0 {
            return &[];
        }
        self.layers.get(k - 1).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.layers.iter().map(Vec::len).collect()
    }
}
