//! Named small graphs used throughout the tests and suites.

use super::{Graph, Vertex};

fn build(n: usize, edges: impl IntoIterator<Item = (Vertex, Vertex)>) -> Graph {
    Graph::from_edges(n, edges).expect("family constructors produce simple graphs")
}

pub fn complete(n: usize) -> Graph {
    build(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
}

pub fn path(n: usize) -> Graph {
    build(n, (1..n).map(|v| (v - 1, v)))
}

/// The cycle `C_n`, `n >= 3`.
pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3, "cycles need at least 3 vertices");
    build(n, (0..n).map(|v| (v, (v + 1) % n)))
}

/// `K_{1,leaves}` with the center at index 0.
pub fn star(leaves: usize) -> Graph {
    build(leaves + 1, (1..=leaves).map(|v| (0, v)))
}

pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    build(a + b, (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v))))
}

/// Complete multipartite graph with the given part sizes, parts laid out
/// consecutively.
pub fn complete_multipartite(parts: &[usize]) -> Graph {
    let mut part_of = Vec::new();
    for (p, &size) in parts.iter().enumerate() {
        part_of.extend(std::iter::repeat_n(p, size));
    }
    let n = part_of.len();
    let part_of = &part_of;
    build(
        n,
        (0..n).flat_map(|u| {
            (u + 1..n)
                .filter(move |&v| part_of[u] != part_of[v])
                .map(move |v| (u, v))
        }),
    )
}

/// The octahedron `K_{2,2,2}`; antipodal pairs are `(0,1)`, `(2,3)`, `(4,5)`.
pub fn octahedron() -> Graph {
    complete_multipartite(&[2, 2, 2])
}

/// The triangular prism `K_3 □ K_2`: triangles `{0,1,2}` and `{3,4,5}`
/// joined by the matching `i — i+3`.
pub fn prism() -> Graph {
    build(
        6,
        [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)],
    )
}

/// Circulant graph on `Z_n` joining `i` to `i ± j` for each jump `j`.
pub fn circulant(n: usize, jumps: &[usize]) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for &j in jumps {
            let v = (u + j) % n;
            let e = (u.min(v), u.max(v));
            if u != v && !edges.contains(&e) {
                edges.push(e);
            }
        }
    }
    build(n, edges)
}

/// The 3-cube `Q_3`.
pub fn cube() -> Graph {
    let mut edges = Vec::new();
    for u in 0..8usize {
        for bit in 0..3 {
            let v = u ^ (1 << bit);
            if u < v {
                edges.push((u, v));
            }
        }
    }
    build(8, edges)
}

/// The wheel with hub 0 and a rim cycle of `rim` vertices.
pub fn wheel(rim: usize) -> Graph {
    let mut edges: Vec<_> = (1..=rim).map(|v| (0, v)).collect();
    edges.extend((1..=rim).map(|v| (v, v % rim + 1)));
    build(rim + 1, edges)
}

/// Two triangles sharing vertex 0.
pub fn bowtie() -> Graph {
    build(5, [(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)])
}
