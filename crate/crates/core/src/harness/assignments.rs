//! Tight degree-assignments up to renaming of colors.
//!
//! Any assignment with surplus somewhere already has a single Kempe class,
//! so sweeps only need `|L(v)| = d(v)`. Two assignments that differ by a
//! permutation of colors behave identically, so each renaming class is
//! represented once, by its canonical form.
//!
//! The canonical form numbers colors by their vertex sets: a color whose
//! set contains the smallest distinguishing vertex comes first. Equivalently
//! it is the lexicographically smallest renaming when the sorted lists are
//! read in vertex order, and scanning it every new color is the smallest
//! unused integer.

use std::cmp::Ordering;

use rand::seq::index;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::coloring::{Color, ListAssignment};
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case", tag = "mode")]
pub enum GeneratorMode {
    ExhaustiveCanonical,
    Random { samples: usize, seed: u64 },
}

impl GeneratorMode {
    pub fn name(&self) -> &'static str {
        match self {
            GeneratorMode::ExhaustiveCanonical => "exhaustive-canonical",
            GeneratorMode::Random { .. } => "random",
        }
    }
}

#[derive(Clone, Debug)]
pub struct AssignmentGenerator {
    pub graph: Graph,
    pub mode: GeneratorMode,
    /// Upper bound on the number of distinct colors (exhaustive) or the
    /// palette `{1..cap}` drawn from (random).
    pub palette_cap: usize,
}

impl AssignmentGenerator {
    pub fn exhaustive(graph: Graph, palette_cap: usize) -> Self {
        AssignmentGenerator {
            graph,
            mode: GeneratorMode::ExhaustiveCanonical,
            palette_cap,
        }
    }

    pub fn random(graph: Graph, palette_cap: usize, samples: usize, seed: u64) -> Self {
        AssignmentGenerator {
            graph,
            mode: GeneratorMode::Random { samples, seed },
            palette_cap,
        }
    }

    pub fn validate(&self) -> Result<()> {
        let max_degree = self.graph.max_degree();
        if self.palette_cap < max_degree {
            return Err(Error::PaletteCap {
                cap: self.palette_cap,
                max_degree,
            });
        }
        if let Some(v) = self.graph.vertices().find(|&v| self.graph.degree(v) == 0) {
            return Err(Error::Precondition(format!(
                "vertex {v} is isolated, so its tight list would be empty"
            )));
        }
        Ok(())
    }

    /// The `i`-th random sample; identical for a given seed and index
    /// whatever order samples are drawn in.
    pub fn sample(&self, seed: u64, i: usize) -> ListAssignment {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(i as u64);
        let sizes: Vec<usize> = self.graph.vertices().map(|v| self.graph.degree(v)).collect();
        canonicalize(&random_lists(&sizes, self.palette_cap, &mut rng))
    }
}

/// Each vertex gets a uniformly random `sizes[v]`-subset of `{1..cap}`.
pub fn random_lists(sizes: &[usize], cap: usize, rng: &mut impl rand::Rng) -> ListAssignment {
    let lists = sizes
        .iter()
        .map(|&k| {
            let mut l: Vec<Color> = index::sample(rng, cap, k).into_iter().map(|i| i as Color + 1).collect();
            l.sort_unstable();
            l
        })
        .collect();
    ListAssignment::new(lists).expect("random lists are nonempty")
}

/// Orders two colors by their (ascending) vertex sets: at the first
/// difference the set holding the smaller vertex wins; a set that extends
/// the other wins.
fn color_order(a: &[Vertex], b: &[Vertex]) -> Ordering {
    for (x, y) in a.iter().zip(b) {
        if x != y {
            return x.cmp(y);
        }
    }
    b.len().cmp(&a.len())
}

/// The canonical member of the color-renaming class of `lists`.
pub fn canonicalize(lists: &ListAssignment) -> ListAssignment {
    let palette = lists.palette();
    let mut holders: Vec<(Color, Vec<Vertex>)> = palette
        .iter()
        .map(|&c| (c, (0..lists.len()).filter(|&v| lists.contains(v, c)).collect()))
        .collect();
    holders.sort_by(|a, b| color_order(&a.1, &b.1));
    let mut rename = std::collections::HashMap::with_capacity(holders.len());
    for (i, (c, _)) in holders.iter().enumerate() {
        rename.insert(*c, i as Color + 1);
    }
    ListAssignment::new(
        lists
            .lists()
            .iter()
            .map(|l| l.iter().map(|c| rename[c]).collect())
            .collect(),
    )
    .expect("renaming keeps lists nonempty")
}

pub fn is_canonical(lists: &ListAssignment) -> bool {
    canonicalize(lists) == *lists
}

/// Every canonical tight assignment with at most `palette_cap` colors, or
/// the seeded random samples, in generation order.
pub fn enumerate_canonical_degree_assignments(gen: &AssignmentGenerator) -> Result<Vec<ListAssignment>> {
    gen.validate()?;
    match gen.mode {
        GeneratorMode::ExhaustiveCanonical => {
            let mut out = Vec::new();
            for_each_canonical_tight(&gen.graph, gen.palette_cap, |l| out.push(l));
            Ok(out)
        }
        GeneratorMode::Random { samples, seed } => Ok((0..samples).map(|i| gen.sample(seed, i)).collect()),
    }
}

/// Depth-first generation over vertices in index order. A vertex's list is
/// some old colors plus the next `k` unused ones; a prefix is kept only if
/// its colors are already in canonical order restricted to the prefix,
/// which is exact since the prefix fixes every comparison it decides.
pub fn for_each_canonical_tight(g: &Graph, palette_cap: usize, mut emit: impl FnMut(ListAssignment)) {
    let n = g.n();
    let mut lists: Vec<Vec<Color>> = Vec::with_capacity(n);
    // holders[c - 1] = vertices whose list contains c
    let mut holders: Vec<Vec<Vertex>> = Vec::new();
    fn go(
        g: &Graph,
        cap: usize,
        lists: &mut Vec<Vec<Color>>,
        holders: &mut Vec<Vec<Vertex>>,
        emit: &mut dyn FnMut(ListAssignment),
    ) {
        let v = lists.len();
        if v == g.n() {
            emit(ListAssignment::new(lists.clone()).expect("tight lists are nonempty"));
            return;
        }
        let d = g.degree(v);
        let m = holders.len();
        for k in 0..=d.min(cap - m) {
            if d - k > m {
                continue;
            }
            for old in combinations(m, d - k) {
                let mut list: Vec<Color> = old.iter().map(|&i| i as Color + 1).collect();
                list.extend((m + 1..=m + k).map(|c| c as Color));
                for &c in &list {
                    let idx = c as usize - 1;
                    if idx == holders.len() {
                        holders.push(Vec::new());
                    }
                    holders[idx].push(v);
                }
                let ordered = holders
                    .windows(2)
                    .all(|w| color_order(&w[0], &w[1]) != Ordering::Greater);
                if ordered {
                    lists.push(list.clone());
                    go(g, cap, lists, holders, emit);
                    lists.pop();
                }
                for &c in list.iter().rev() {
                    let idx = c as usize - 1;
                    holders[idx].pop();
                    if holders[idx].is_empty() {
                        holders.pop();
                    }
                }
            }
        }
    }
    if n == 0 {
        return;
    }
    go(g, palette_cap, &mut lists, &mut holders, &mut emit);
}

/// All `k`-subsets of `0..m` in lexicographic order.
fn combinations(m: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..k).collect();
    if k > m {
        return out;
    }
    loop {
        out.push(cur.clone());
        let Some(i) = (0..k).rev().find(|&i| cur[i] < m - k + i) else {
            return out;
        };
        cur[i] += 1;
        for j in i + 1..k {
            cur[j] = cur[j - 1] + 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families;
    use std::collections::BTreeSet;

    /// Generate every raw tight assignment over `{1..cap}`, canonicalize,
    /// and dedupe.
    fn raw_then_canonicalize(g: &Graph, cap: usize) -> BTreeSet<ListAssignment> {
        let mut all: Vec<Vec<Vec<Color>>> = vec![Vec::new()];
        for v in g.vertices() {
            let subsets = combinations(cap, g.degree(v));
            all = all
                .into_iter()
                .flat_map(|prefix| {
                    subsets.iter().map(move |s| {
                        let mut p = prefix.clone();
                        p.push(s.iter().map(|&i| i as Color + 1).collect());
                        p
                    })
                })
                .collect();
        }
        all.into_iter()
            .map(|l| canonicalize(&ListAssignment::new(l).unwrap()))
            .collect()
    }

    fn generated(g: &Graph, cap: usize) -> Vec<ListAssignment> {
        enumerate_canonical_degree_assignments(&AssignmentGenerator::exhaustive(g.clone(), cap)).unwrap()
    }

    #[test]
    fn k2_has_two_classes() {
        let got = generated(&families::complete(2), 2);
        let want = vec![
            ListAssignment::new(vec![vec![1], vec![1]]).unwrap(),
            ListAssignment::new(vec![vec![1], vec![2]]).unwrap(),
        ];
        assert_eq!(got, want);
        assert_eq!(generated(&families::complete(2), 5), want);
    }

    #[test]
    fn path_matches_generate_and_canonicalize() {
        let g = families::path(3);
        let got = generated(&g, 3);
        let set: BTreeSet<_> = got.iter().cloned().collect();
        assert_eq!(set.len(), got.len());
        assert_eq!(set, raw_then_canonicalize(&g, 3));
        assert_eq!(got.len(), 5);
    }

    #[test]
    fn tiny_graphs_generator_is_complete() {
        let graphs = [
            families::complete(3),
            families::path(4),
            families::star(3),
            families::cycle(4),
            families::complete(4),
            Graph::from_edges(4, [(0, 1), (1, 2), (2, 0), (2, 3)]).unwrap(),
        ];
        for g in &graphs {
            for cap in g.max_degree()..=g.max_degree() + 2 {
                let got = generated(g, cap);
                let set: BTreeSet<_> = got.iter().cloned().collect();
                assert_eq!(set.len(), got.len(), "duplicates for {g:?} cap {cap}");
                assert_eq!(set, raw_then_canonicalize(g, cap), "{g:?} cap {cap}");
                assert!(got.iter().all(is_canonical));
            }
        }
    }

    #[test]
    fn octahedron_contains_identical_lists() {
        let got = generated(&families::octahedron(), 4);
        assert!(got.contains(&ListAssignment::identical(6, 4)));
    }

    #[test]
    fn canonical_form_is_renaming_invariant() {
        let l = ListAssignment::new(vec![vec![7, 9], vec![9, 3], vec![3, 7]]).unwrap();
        let c = canonicalize(&l);
        assert_eq!(c.lists(), &[vec![1, 2], vec![1, 3], vec![2, 3]]);
        let renamed = ListAssignment::new(vec![vec![2, 5], vec![5, 1], vec![1, 2]]).unwrap();
        assert_eq!(canonicalize(&renamed), c);
    }

    #[test]
    fn palette_cap_below_max_degree() {
        let gen = AssignmentGenerator::exhaustive(families::octahedron(), 3);
        assert!(matches!(
            enumerate_canonical_degree_assignments(&gen),
            Err(Error::PaletteCap { cap: 3, max_degree: 4 })
        ));
    }

    #[test]
    fn random_samples_are_reproducible_and_canonical() {
        let gen = AssignmentGenerator::random(families::octahedron(), 8, 50, 42);
        let a = enumerate_canonical_degree_assignments(&gen).unwrap();
        let b = enumerate_canonical_degree_assignments(&gen).unwrap();
        assert_eq!(a, b);
        assert!(a.iter().all(|l| is_canonical(l) && l.is_tight(&gen.graph)));
        assert_eq!(gen.sample(42, 17), a[17]);
        let other =
            enumerate_canonical_degree_assignments(&AssignmentGenerator::random(families::octahedron(), 8, 50, 43))
                .unwrap();
        assert_ne!(a, other);
    }

    #[test]
    fn combinations_small() {
        assert_eq!(combinations(3, 2), vec![vec![0, 1], vec![0, 2], vec![1, 2]]);
        assert_eq!(combinations(2, 0), vec![Vec::<usize>::new()]);
        assert!(combinations(1, 2).is_empty());
    }
}
