use super::{Color, Coloring, ListAssignment};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexOrder};

/// Colors the vertices in `order`, giving each the smallest list color not
/// already used on a colored neighbor.
///
/// Succeeds whenever every non-root vertex has a neighbor later in the order
/// and the root's list outnumbers its neighbors.
pub fn greedy_extend(g: &Graph, lists: &ListAssignment, order: &VertexOrder) -> Result<Coloring> {
    lists.check_covers(g)?;
    let n = g.n();
    let mut seen = vec![false; n];
    for &v in &order.order {
        g.check_vertex(v)?;
        if std::mem::replace(&mut seen[v], true) {
            return Err(Error::Precondition(format!("vertex {v} appears twice in the order")));
        }
    }
    if let Some(v) = seen.iter().position(|&s| !s) {
        return Err(Error::Precondition(format!("vertex {v} is missing from the order")));
    }
    let mut colors: Vec<Option<Color>> = vec![None; n];
    for &v in &order.order {
        let pick = lists
            .list(v)
            .iter()
            .copied()
            .find(|&c| g.neighbors(v).iter().all(|&w| colors[w] != Some(c)));
        match pick {
            Some(c) => colors[v] = Some(c),
            None => return Err(Error::GreedyStuck(v)),
        }
    }
    Ok(Coloring::new(
        colors.into_iter().map(|c| c.expect("all colored")).collect(),
    ))
}
