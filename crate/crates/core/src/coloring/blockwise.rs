use itertools::Itertools;

use super::{require_degree_assignment, Color, ListAssignment};
use crate::error::{Error, Result};
use crate::graph::{biconnected_blocks, BlockDecomposition, BlockKind, Graph, Vertex};

/// Per-block color sets `S_1, ..., S_k` realizing a blockwise uniform
/// assignment on a Gallai tree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockwiseWitness {
    pub blocks: Vec<Vec<Vertex>>,
    /// `sets[i]` belongs to `blocks[i]`, sorted.
    pub sets: Vec<Vec<Color>>,
}

impl BlockwiseWitness {
    /// Re-checks the defining conditions from scratch: block sizes, disjoint
    /// sets on blocks that meet, and `L(v)` equal to the union over the
    /// blocks through `v`.
    pub fn verify(&self, g: &Graph, lists: &ListAssignment) -> bool {
        let Ok(bd) = biconnected_blocks(g) else {
            return false;
        };
        if bd.blocks != self.blocks || self.sets.len() != self.blocks.len() || lists.len() != g.n() {
            return false;
        }
        for (i, set) in self.sets.iter().enumerate() {
            let want = match bd.kind(g, i) {
                BlockKind::Clique => self.blocks[i].len() - 1,
                BlockKind::OddCycle => 2,
                BlockKind::Other => return false,
            };
            if set.len() != want {
                return false;
            }
        }
        for i in 0..self.blocks.len() {
            for j in i + 1..self.blocks.len() {
                let meet = self.blocks[i].iter().any(|v| self.blocks[j].contains(v));
                if meet && self.sets[i].iter().any(|c| self.sets[j].contains(c)) {
                    return false;
                }
            }
        }
        g.vertices().all(|v| {
            let mut union: Vec<Color> = (0..self.blocks.len())
                .filter(|&i| self.blocks[i].contains(&v))
                .flat_map(|i| self.sets[i].iter().copied())
                .collect();
            union.sort_unstable();
            union.dedup();
            union == lists.list(v)
        })
    }
}

fn required_size(bd: &BlockDecomposition, g: &Graph, block: usize) -> Option<usize> {
    match bd.kind(g, block) {
        BlockKind::Clique => Some(bd.blocks[block].len() - 1),
        BlockKind::OddCycle => Some(2),
        BlockKind::Other => None,
    }
}

/// Finds a blockwise-uniform witness for `lists` if `g` is a Gallai tree
/// and one exists.
///
/// A block with a non-cut vertex `v` must carry exactly `L(v)`; only blocks
/// made entirely of cut vertices are searched.
pub fn is_blockwise_uniform(g: &Graph, lists: &ListAssignment) -> Option<BlockwiseWitness> {
    if lists.len() != g.n() {
        return None;
    }
    let bd = biconnected_blocks(g).ok()?;
    if bd.blocks.is_empty() {
        return None;
    }
    let k = bd.blocks.len();
    let sizes: Vec<usize> = (0..k).map(|i| required_size(&bd, g, i)).collect::<Option<_>>()?;

    let mut sets: Vec<Option<Vec<Color>>> = vec![None; k];
    for (i, block) in bd.blocks.iter().enumerate() {
        let mut free = block.iter().filter(|&&v| !bd.is_cut_vertex(v));
        if let Some(&v) = free.next() {
            if free.any(|&w| lists.list(w) != lists.list(v)) || lists.list(v).len() != sizes[i] {
                return None;
            }
            sets[i] = Some(lists.list(v).to_vec());
        }
    }

    let blocks_of: Vec<Vec<usize>> = g.vertices().map(|v| bd.blocks_of(v)).collect();
    let meets = |i: usize, j: usize| bd.blocks[i].iter().any(|&v| blocks_of[v].contains(&j));
    for i in 0..k {
        for j in i + 1..k {
            if let (Some(a), Some(b)) = (&sets[i], &sets[j]) {
                if meets(i, j) && a.iter().any(|c| b.contains(c)) {
                    return None;
                }
            }
        }
    }

    let open: Vec<usize> = (0..k).filter(|&i| sets[i].is_none()).collect();
    let mut candidates = Vec::with_capacity(open.len());
    for &i in &open {
        let mut pool: Option<Vec<Color>> = None;
        for &v in &bd.blocks[i] {
            let avail: Vec<Color> = lists
                .list(v)
                .iter()
                .copied()
                .filter(|c| {
                    blocks_of[v]
                        .iter()
                        .all(|&j| sets[j].as_ref().is_none_or(|s| !s.contains(c)))
                })
                .collect();
            pool = Some(match pool {
                None => avail,
                Some(p) => p.into_iter().filter(|c| avail.contains(c)).collect(),
            });
        }
        candidates.push(pool.unwrap_or_default());
    }

    type Done<'a> = dyn Fn(&[Option<Vec<Color>>]) -> bool + 'a;

    fn search(
        depth: usize,
        open: &[usize],
        candidates: &[Vec<Color>],
        sizes: &[usize],
        sets: &mut Vec<Option<Vec<Color>>>,
        meets: &dyn Fn(usize, usize) -> bool,
        done: &Done<'_>,
    ) -> bool {
        if depth == open.len() {
            return done(sets);
        }
        let i = open[depth];
        for combo in candidates[depth].iter().copied().combinations(sizes[i]) {
            let clash = (0..sets.len()).any(|j| {
                j != i && sets[j].as_ref().is_some_and(|s| combo.iter().any(|c| s.contains(c))) && meets(i, j)
            });
            if clash {
                continue;
            }
            sets[i] = Some(combo);
            if search(depth + 1, open, candidates, sizes, sets, meets, done) {
                return true;
            }
            sets[i] = None;
        }
        false
    }

    let unions_match = |sets: &[Option<Vec<Color>>]| {
        g.vertices().all(|v| {
            let mut union: Vec<Color> = blocks_of[v]
                .iter()
                .flat_map(|&j| sets[j].iter().flatten().copied())
                .collect();
            union.sort_unstable();
            union == lists.list(v)
        })
    };
    if !search(0, &open, &candidates, &sizes, &mut sets, &meets, &unions_match) {
        return None;
    }
    Some(BlockwiseWitness {
        blocks: bd.blocks.clone(),
        sets: sets.into_iter().map(|s| s.expect("all blocks assigned")).collect(),
    })
}

/// L-colorability of a connected graph under a degree-assignment, decided
/// structurally: uncolorable exactly when `g` is a Gallai tree and `lists`
/// is blockwise uniform.
pub fn is_l_colorable_characterized(g: &Graph, lists: &ListAssignment) -> Result<bool> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    require_degree_assignment(g, lists)?;
    Ok(is_blockwise_uniform(g, lists).is_none())
}
