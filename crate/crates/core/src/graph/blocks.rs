use super::{Graph, Vertex};
use crate::error::{Error, Result};

/// What a 2-connected block looks like, as far as Gallai trees care.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BlockKind {
    /// Complete block, including a bridge (`K_2`) and triangles.
    Clique,
    OddCycle,
    Other,
}

/// Maximal 2-connected blocks (bridges as 2-vertex blocks) and cut vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockDecomposition {
    /// Each block's vertices, sorted; blocks ordered by their vertex lists.
    pub blocks: Vec<Vec<Vertex>>,
    pub cut_vertices: Vec<Vertex>,
}

impl BlockDecomposition {
    pub fn is_cut_vertex(&self, v: Vertex) -> bool {
        self.cut_vertices.binary_search(&v).is_ok()
    }

    /// Indices of the blocks containing `v`.
    pub fn blocks_of(&self, v: Vertex) -> Vec<usize> {
        self.blocks
            .iter()
            .enumerate()
            .filter(|(_, b)| b.binary_search(&v).is_ok())
            .map(|(i, _)| i)
            .collect()
    }

    pub fn kind(&self, g: &Graph, block: usize) -> BlockKind {
        let vs = &self.blocks[block];
        let k = vs.len();
        let edges = vs
            .iter()
            .enumerate()
            .map(|(i, &u)| vs[i + 1..].iter().filter(|&&w| g.has_edge(u, w)).count())
            .sum::<usize>();
        if edges == k * (k - 1) / 2 {
            BlockKind::Clique
        } else if edges == k && k % 2 == 1 {
            // a 2-connected graph with as many edges as vertices is a cycle
            BlockKind::OddCycle
        } else {
            BlockKind::Other
        }
    }
}

/// Tarjan's block decomposition. The graph must be connected.
pub fn biconnected_blocks(g: &Graph) -> Result<BlockDecomposition> {
    let n = g.n();
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if n <= 1 {
        return Ok(BlockDecomposition {
            blocks: Vec::new(),
            cut_vertices: Vec::new(),
        });
    }

    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0; n];
    let mut is_cut = vec![false; n];
    let mut blocks: Vec<Vec<Vertex>> = Vec::new();
    let mut edge_stack: Vec<(Vertex, Vertex)> = Vec::new();
    let mut timer = 0;

    // (vertex, parent, next neighbor position)
    let mut stack: Vec<(Vertex, Vertex, usize)> = vec![(0, usize::MAX, 0)];
    disc[0] = 0;
    low[0] = 0;
    timer += 1;
    let mut root_children = 0;

    while let Some(&mut (u, parent, ref mut pos)) = stack.last_mut() {
        if let Some(&w) = g.neighbors(u).get(*pos) {
            *pos += 1;
            if disc[w] == usize::MAX {
                disc[w] = timer;
                low[w] = timer;
                timer += 1;
                edge_stack.push((u, w));
                if u == 0 {
                    root_children += 1;
                }
                stack.push((w, u, 0));
            } else if w != parent && disc[w] < disc[u] {
                edge_stack.push((u, w));
                low[u] = low[u].min(disc[w]);
            }
        } else {
            stack.pop();
            if parent != usize::MAX {
                low[parent] = low[parent].min(low[u]);
                if low[u] >= disc[parent] {
                    if parent != 0 {
                        is_cut[parent] = true;
                    }
                    let mut block = Vec::new();
                    while let Some((a, b)) = edge_stack.pop() {
                        block.push(a);
                        block.push(b);
                        if (a, b) == (parent, u) {
                            break;
                        }
                    }
                    block.sort_unstable();
                    block.dedup();
                    blocks.push(block);
                }
            }
        }
    }
    if root_children > 1 {
        is_cut[0] = true;
    }
    blocks.sort();
    Ok(BlockDecomposition {
        blocks,
        cut_vertices: (0..n).filter(|&v| is_cut[v]).collect(),
    })
}

/// Connected, and every block is a clique or an odd cycle.
pub fn is_gallai_tree(g: &Graph) -> bool {
    match biconnected_blocks(g) {
        Ok(bd) => (0..bd.blocks.len()).all(|i| bd.kind(g, i) != BlockKind::Other),
        Err(_) => false,
    }
}
