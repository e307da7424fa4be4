use serde::Serialize;

use super::{families, Graph};

/// The exceptional graphs of the Δ-list reconfiguration theorem, plus odd
/// cycles (the Brooks-type exception).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Exception {
    Complete,
    TriangularPrism,
    OddCycle,
    None,
}

/// Recognition is exact. Complete graphs take precedence, so `K_3` is
/// `Complete`.
pub fn classify_exception(g: &Graph) -> Exception {
    if g.is_complete() {
        Exception::Complete
    } else if is_triangular_prism(g) {
        Exception::TriangularPrism
    } else if g.n() >= 3 && g.n() % 2 == 1 && g.vertices().all(|v| g.degree(v) == 2) && g.is_connected() {
        Exception::OddCycle
    } else {
        Exception::None
    }
}

/// Brute-force isomorphism test against `K_3 □ K_2`.
pub fn is_triangular_prism(g: &Graph) -> bool {
    if g.n() != 6 || g.edge_count() != 9 || g.vertices().any(|v| g.degree(v) != 3) {
        return false;
    }
    let prism = families::prism();
    let mut perm: Vec<usize> = (0..6).collect();
    permutations_any(&mut perm, 0, &mut |p| {
        prism.edges().all(|(u, v)| g.has_edge(p[u], p[v]))
    })
}

fn permutations_any(perm: &mut [usize], k: usize, f: &mut impl FnMut(&[usize]) -> bool) -> bool {
    if k == perm.len() {
        return f(perm);
    }
    for i in k..perm.len() {
        perm.swap(k, i);
        if permutations_any(perm, k + 1, f) {
            perm.swap(k, i);
            return true;
        }
        perm.swap(k, i);
    }
    false
}
