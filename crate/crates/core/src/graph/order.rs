use super::{Graph, Vertex};
use crate::error::{Error, Result};

/// A vertex order for greedy coloring: an optional pinned vertex first,
/// then the rest by non-increasing distance from `root`, `root` last.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexOrder {
    pub order: Vec<Vertex>,
    pub root: Vertex,
    pub pinned_first: Option<Vertex>,
}

/// Orders every vertex of `g` for a greedy coloring ending at `root`.
///
/// Distances are measured in `g` minus the pinned vertex, so that every
/// vertex other than the root and the pinned one keeps a later neighbor
/// (its BFS parent). Ties go to the smaller index.
pub fn spanning_order(g: &Graph, root: Vertex, pinned_first: Option<Vertex>) -> Result<VertexOrder> {
    g.check_vertex(root)?;
    if let Some(p) = pinned_first {
        g.check_vertex(p)?;
        if p == root {
            return Err(Error::Precondition("pinned vertex equals the root".into()));
        }
    }
    let dist = match pinned_first {
        None => g.bfs_distances(root),
        Some(p) => {
            let (h, kept) = g.remove_vertices(&[p]);
            let sub_root = kept.binary_search(&root).expect("root kept");
            let sub = h.bfs_distances(sub_root);
            let mut dist = vec![None; g.n()];
            for (i, &v) in kept.iter().enumerate() {
                dist[v] = sub[i];
            }
            dist[p] = Some(0);
            dist
        }
    };
    let mut rest = Vec::with_capacity(g.n());
    for v in g.vertices() {
        if Some(v) == pinned_first || v == root {
            continue;
        }
        match dist[v] {
            Some(d) => rest.push((d, v)),
            None => return Err(Error::Unreachable(v)),
        }
    }
    rest.sort_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
    let mut order = Vec::with_capacity(g.n());
    order.extend(pinned_first);
    order.extend(rest.into_iter().map(|(_, v)| v));
    order.push(root);
    Ok(VertexOrder {
        order,
        root,
        pinned_first,
    })
}
