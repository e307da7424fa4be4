use std::ops::ControlFlow;

use super::{Color, Coloring, ListAssignment};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Visits every L-coloring in lexicographic order of the color vector.
///
/// Backtracks over vertices `0..n`, trying each list in ascending order and
/// checking only the already-colored (smaller) neighbors.
pub fn for_each_l_coloring<F>(g: &Graph, lists: &ListAssignment, mut visit: F) -> ControlFlow<()>
where
    F: FnMut(&[Color]) -> ControlFlow<()>,
{
    let n = g.n();
    assert_eq!(lists.len(), n, "one list per vertex");
    if n == 0 {
        return visit(&[]);
    }
    let earlier: Vec<Vec<usize>> = g
        .vertices()
        .map(|v| g.neighbors(v).iter().copied().filter(|&w| w < v).collect())
        .collect();
    let mut colors = vec![0 as Color; n];
    let mut pos = vec![0usize; n];
    let mut v = 0usize;
    loop {
        let list = lists.list(v);
        let mut placed = false;
        while pos[v] < list.len() {
            let c = list[pos[v]];
            pos[v] += 1;
            if earlier[v].iter().all(|&w| colors[w] != c) {
                colors[v] = c;
                placed = true;
                break;
            }
        }
        if placed {
            if v + 1 == n {
                visit(&colors)?;
            } else {
                v += 1;
                pos[v] = 0;
            }
        } else {
            if v == 0 {
                return ControlFlow::Continue(());
            }
            v -= 1;
        }
    }
}

/// All L-colorings, lexicographically ordered and duplicate-free.
pub fn enumerate_l_colorings(g: &Graph, lists: &ListAssignment) -> Vec<Coloring> {
    let mut out = Vec::new();
    let _ = for_each_l_coloring(g, lists, |c| {
        out.push(Coloring::new(c.to_vec()));
        ControlFlow::Continue(())
    });
    out
}

/// As [`enumerate_l_colorings`], failing once more than `cap` colorings exist.
pub fn enumerate_l_colorings_capped(g: &Graph, lists: &ListAssignment, cap: usize) -> Result<Vec<Coloring>> {
    let mut out = Vec::new();
    let flow = for_each_l_coloring(g, lists, |c| {
        if out.len() == cap {
            return ControlFlow::Break(());
        }
        out.push(Coloring::new(c.to_vec()));
        ControlFlow::Continue(())
    });
    match flow {
        ControlFlow::Break(()) => Err(Error::NodeCap { cap }),
        ControlFlow::Continue(()) => Ok(out),
    }
}

pub fn first_l_coloring(g: &Graph, lists: &ListAssignment) -> Option<Coloring> {
    let mut found = None;
    let _ = for_each_l_coloring(g, lists, |c| {
        found = Some(Coloring::new(c.to_vec()));
        ControlFlow::Break(())
    });
    found
}

pub fn count_l_colorings(g: &Graph, lists: &ListAssignment) -> u64 {
    let mut count = 0;
    let _ = for_each_l_coloring(g, lists, |_| {
        count += 1;
        ControlFlow::Continue(())
    });
    count
}
