//! Executable checks of the structural lemmas and the three claims used for
//! 4-connected graphs. Each verdict records whether the hypothesis held;
//! `pass` is only reported when it held and the oracle confirmed the
//! conclusion.

use std::cell::OnceCell;
use std::collections::BTreeMap;

use serde::Serialize;
use serde_json::{json, Value};

use crate::coloring::{
    derive_reduced_assignment, first_l_coloring, greedy_extend, is_blockwise_uniform, is_degree_assignment,
    is_l_colorable_characterized, is_l_coloring, special_vertices, Color, Coloring, Forbid, ListAssignment,
    SpecialReport,
};
use crate::error::{Error, Result};
use crate::graph::{is_gallai_tree, spanning_order, vertex_connectivity, Graph, Vertex};
use crate::kempe::boundary_sets;
use crate::oracle::{classify, KempeClasses, DEFAULT_NODE_CAP};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Outcome {
    Pass,
    Fail,
    Skipped,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Hypothesis {
    pub held: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Verdict {
    pub check: String,
    pub hypothesis: Hypothesis,
    pub outcome: Outcome,
    pub facts: BTreeMap<String, Value>,
}

impl Verdict {
    pub fn passed(&self) -> bool {
        self.outcome == Outcome::Pass
    }

    pub fn skipped(&self) -> bool {
        self.outcome == Outcome::Skipped
    }
}

/// Collects hypothesis conditions; the first failures are reported.
#[derive(Default)]
struct Conditions {
    held: Vec<String>,
    failed: Vec<String>,
}

impl Conditions {
    fn need(&mut self, ok: bool, what: impl Into<String>) -> bool {
        if ok {
            self.held.push(what.into());
        } else {
            self.failed.push(what.into());
        }
        ok
    }

    fn ok(&self) -> bool {
        self.failed.is_empty()
    }

    fn into_hypothesis(self) -> Hypothesis {
        if self.failed.is_empty() {
            Hypothesis {
                held: true,
                detail: self.held.join("; "),
            }
        } else {
            Hypothesis {
                held: false,
                detail: format!("not satisfied: {}", self.failed.join("; ")),
            }
        }
    }
}

fn skipped(check: &str, cond: Conditions) -> Verdict {
    Verdict {
        check: check.to_string(),
        hypothesis: cond.into_hypothesis(),
        outcome: Outcome::Skipped,
        facts: BTreeMap::new(),
    }
}

fn decided(check: &str, cond: Conditions, pass: bool, facts: BTreeMap<String, Value>) -> Verdict {
    Verdict {
        check: check.to_string(),
        hypothesis: cond.into_hypothesis(),
        outcome: if pass { Outcome::Pass } else { Outcome::Fail },
        facts,
    }
}

/// Runs checks against one `(g, L)` pair, computing the oracle partition,
/// the connectivity, and the special vertices at most once.
pub struct Checker<'a> {
    g: &'a Graph,
    lists: &'a ListAssignment,
    node_cap: usize,
    classes: OnceCell<KempeClasses>,
    connectivity: OnceCell<usize>,
    special: OnceCell<SpecialReport>,
}

impl<'a> Checker<'a> {
    pub fn new(g: &'a Graph, lists: &'a ListAssignment) -> Result<Self> {
        lists.check_covers(g)?;
        Ok(Checker {
            g,
            lists,
            node_cap: DEFAULT_NODE_CAP,
            classes: OnceCell::new(),
            connectivity: OnceCell::new(),
            special: OnceCell::new(),
        })
    }

    pub fn with_node_cap(mut self, cap: usize) -> Self {
        self.node_cap = cap;
        self
    }

    pub fn classes(&self) -> Result<&KempeClasses> {
        if let Some(c) = self.classes.get() {
            return Ok(c);
        }
        let c = classify(self.g, self.lists, self.node_cap)?;
        Ok(self.classes.get_or_init(|| c))
    }

    pub fn connectivity(&self) -> usize {
        *self.connectivity.get_or_init(|| vertex_connectivity(self.g))
    }

    pub fn special(&self) -> &SpecialReport {
        self.special.get_or_init(|| special_vertices(self.g, self.lists))
    }

    fn degree_assignment(&self) -> bool {
        is_degree_assignment(self.g, self.lists).unwrap_or(false)
    }

    fn need_connectivity(&self, cond: &mut Conditions, k: usize) {
        let kappa = self.connectivity();
        cond.need(kappa >= k, format!("{k}-connected (connectivity {kappa})"));
    }

    fn need_coloring(&self, cond: &mut Conditions, name: &str, c: &Coloring) -> Result<()> {
        if c.len() != self.g.n() {
            return Err(Error::InvalidColoring(format!(
                "{name} has {} colors for {} vertices",
                c.len(),
                self.g.n()
            )));
        }
        cond.need(is_l_coloring(self.g, self.lists, c), format!("{name} is an L-coloring"));
        Ok(())
    }

    /// Colorability by the Gallai-tree characterization agrees with
    /// exhaustive search.
    pub fn lemma3(&self) -> Result<Verdict> {
        let mut cond = Conditions::default();
        cond.need(self.g.is_connected(), "connected");
        cond.need(self.degree_assignment(), "degree-assignment");
        if !cond.ok() {
            return Ok(skipped("lemma3", cond));
        }
        let characterized = is_l_colorable_characterized(self.g, self.lists)?;
        let enumerated = first_l_coloring(self.g, self.lists).is_some();
        let facts = BTreeMap::from([
            ("characterizedColorable".into(), json!(characterized)),
            ("enumeratedColorable".into(), json!(enumerated)),
            ("gallaiTree".into(), json!(is_gallai_tree(self.g))),
            (
                "blockwiseUniform".into(),
                json!(is_blockwise_uniform(self.g, self.lists).is_some()),
            ),
        ]);
        Ok(decided("lemma3", cond, characterized == enumerated, facts))
    }

    /// Surplus at one vertex forces a single class.
    pub fn lemma4(&self) -> Result<Verdict> {
        let mut cond = Conditions::default();
        cond.need(self.g.is_connected(), "connected");
        cond.need(self.degree_assignment(), "degree-assignment");
        let surplus = self.lists.surplus_vertices(self.g);
        cond.need(!surplus.is_empty(), "some vertex has |L(v)| > d(v)");
        if !cond.ok() {
            return Ok(skipped("lemma4", cond));
        }
        let classes = self.classes()?;
        let facts = BTreeMap::from([
            ("colorings".into(), json!(classes.colorings.len())),
            ("classCount".into(), json!(classes.class_count)),
            ("surplusVertices".into(), json!(surplus)),
        ]);
        Ok(decided("lemma4", cond, classes.class_count <= 1, facts))
    }

    /// All colorings assigning the special color `a` to `x` are equivalent.
    pub fn lemma5(&self, x: Vertex, a: Color) -> Result<Verdict> {
        self.g.check_vertex(x)?;
        let mut cond = Conditions::default();
        self.need_connectivity(&mut cond, 2);
        cond.need(self.degree_assignment(), "degree-assignment");
        cond.need(
            self.special().is_special_color(x, a),
            format!("color {a} is special for vertex {x}"),
        );
        if !cond.ok() {
            return Ok(skipped("lemma5", cond));
        }
        let classes = self.classes()?;
        let fixed = classes.colorings.iter().filter(|c| c.color(x) == a).count();
        let oracle = classes.single_class_among(|c| c.color(x) == a);

        let z = self
            .special()
            .get(x)
            .and_then(|e| e.neighbors_for(a).next())
            .expect("special color has a witness");
        let forbid: Forbid = self.g.neighbors(x).iter().map(|&w| (w, vec![a])).collect();
        let reduced = derive_reduced_assignment(self.g, self.lists, &[x], &forbid)?;
        let reduction = reduced.is_degree_assignment() && reduced.has_surplus_at(z);

        let facts = BTreeMap::from([
            ("coloringsWithColor".into(), json!(fixed)),
            ("singleClass".into(), json!(oracle)),
            ("specialNeighbor".into(), json!(z)),
            ("reducedSurplus".into(), json!(reduction)),
        ]);
        Ok(decided("lemma5", cond, oracle && reduction, facts))
    }

    /// Colorings with `x = a` or `y = b` form one class, and the greedy
    /// construction produces a coloring with both.
    pub fn lemma6(&self, x: Vertex, y: Vertex, a: Color, b: Color) -> Result<Verdict> {
        self.g.check_vertex(x)?;
        self.g.check_vertex(y)?;
        let mut cond = Conditions::default();
        self.need_connectivity(&mut cond, 3);
        cond.need(self.degree_assignment(), "degree-assignment");
        cond.need(
            x != y && !self.g.has_edge(x, y),
            format!("vertices {x} and {y} are distinct and non-adjacent"),
        );
        cond.need(
            self.special().is_special_color(x, a),
            format!("color {a} is special for vertex {x}"),
        );
        cond.need(
            self.special().is_special_color(y, b),
            format!("color {b} is special for vertex {y}"),
        );
        if !cond.ok() {
            return Ok(skipped("lemma6", cond));
        }
        let classes = self.classes()?;
        let member = |c: &Coloring| c.color(x) == a || c.color(y) == b;
        let oracle = classes.single_class_among(member);
        let in_union = classes.colorings.iter().filter(|c| member(c)).count();

        let z = self
            .special()
            .get(x)
            .and_then(|e| e.neighbors_for(a).next())
            .expect("special color has a witness");
        let construction = self.lemma6_construction(x, y, a, b, z);
        let mut facts = BTreeMap::from([
            ("coloringsInUnion".into(), json!(in_union)),
            ("singleClass".into(), json!(oracle)),
            ("specialNeighbor".into(), json!(z)),
        ]);
        let built = match construction {
            Ok(c) => {
                facts.insert("constructed".into(), json!(c.colors()));
                is_l_coloring(self.g, self.lists, &c) && c.color(x) == a && c.color(y) == b
            }
            Err(e) => {
                facts.insert("constructionError".into(), json!(e.to_string()));
                false
            }
        };
        facts.insert("constructionInBothSets".into(), json!(built));
        Ok(decided("lemma6", cond, oracle && built, facts))
    }

    fn lemma6_construction(&self, x: Vertex, y: Vertex, a: Color, b: Color, z: Vertex) -> Result<Coloring> {
        let (nx, ny) = (self.g.neighbors(x), self.g.neighbors(y));
        let mut forbid = Forbid::new();
        for &w in nx {
            forbid.entry(w).or_default().push(a);
        }
        for &w in ny {
            forbid.entry(w).or_default().push(b);
        }
        let reduced = derive_reduced_assignment(self.g, self.lists, &[x, y], &forbid)?;
        if !reduced.has_surplus_at(z) {
            return Err(Error::Precondition(format!(
                "no surplus at special neighbor {z} after reduction"
            )));
        }
        let root = reduced.index_of(z).expect("special neighbor survives");
        let order = spanning_order(&reduced.graph, root, None)?;
        let sub = greedy_extend(&reduced.graph, &reduced.lists, &order)?;
        Ok(reduced.lift(&sub, &[(x, a), (y, b)]))
    }

    /// Within the class of `psi` some coloring keeps `x` fixed and has no
    /// blocking chain neighbors of `x` for the pair `{psi(x), c}`.
    pub fn claim1(&self, psi: &Coloring, x: Vertex, c: Color) -> Result<Verdict> {
        self.g.check_vertex(x)?;
        let mut cond = Conditions::default();
        self.need_coloring(&mut cond, "psi", psi)?;
        self.need_connectivity(&mut cond, 4);
        cond.need(!self.g.is_complete(), "not complete");
        cond.need(self.degree_assignment(), "degree-assignment");
        let px = psi.color(x);
        cond.need(
            self.lists.contains(x, c) && c != px,
            format!("color {c} is in L({x}) and differs from psi({x})"),
        );
        let max_degree = self.g.degree(x) == self.g.max_degree();
        let far_special = self
            .g
            .vertices()
            .find(|&y| y != x && !self.g.has_edge(x, y) && self.special().is_special_color(y, c));
        cond.need(
            max_degree || far_special.is_some(),
            format!("vertex {x} has maximum degree, or a vertex non-adjacent to it has special color {c}"),
        );
        if !cond.ok() {
            return Ok(skipped("claim1", cond));
        }
        let classes = self.classes()?;
        let class = classes.class_of_coloring(psi).expect("psi is an L-coloring");
        let clear =
            |phi: &Coloring| -> bool { boundary_sets(self.g, self.lists, phi, x, c).is_ok_and(|s| s.n1.is_empty()) };
        let trivial = clear(psi);
        let oracle = classes
            .members(class)
            .any(|i| classes.colorings[i].color(x) == px && clear(&classes.colorings[i]));

        let mut facts = BTreeMap::from([
            ("trivial".into(), json!(trivial)),
            ("witnessInClass".into(), json!(oracle)),
            ("maximumDegree".into(), json!(max_degree)),
            ("farSpecial".into(), json!(far_special)),
        ]);
        let mut built = true;
        if !trivial {
            let forbid: Forbid = self
                .g
                .neighbors(x)
                .iter()
                .map(|&w| (w, vec![if self.lists.contains(w, px) { px } else { c }]))
                .collect();
            let phi = derive_reduced_assignment(self.g, self.lists, &[x], &forbid)
                .ok()
                .and_then(|r| first_l_coloring(&r.graph, &r.lists).map(|sub| r.lift(&sub, &[(x, px)])));
            built = phi.as_ref().is_some_and(|phi| {
                is_l_coloring(self.g, self.lists, phi) && clear(phi) && classes.class_of_coloring(phi) == Some(class)
            });
            if let Some(phi) = &phi {
                facts.insert("constructed".into(), json!(phi.colors()));
            }
            facts.insert("constructionInClass".into(), json!(built));
        }
        Ok(decided("claim1", cond, oracle && built, facts))
    }

    /// With no blocking neighbors but some blocking vertex at distance two,
    /// either the class of `phi` clears both, or two non-adjacent vertices
    /// share the special color `a`.
    pub fn claim2(&self, phi: &Coloring, v: Vertex, a: Color) -> Result<Verdict> {
        self.g.check_vertex(v)?;
        let mut cond = Conditions::default();
        self.need_coloring(&mut cond, "phi", phi)?;
        self.need_connectivity(&mut cond, 4);
        cond.need(!self.g.is_complete(), "not complete");
        cond.need(self.degree_assignment(), "degree-assignment");
        cond.need(
            self.g.degree(v) == self.g.max_degree(),
            format!("vertex {v} has maximum degree"),
        );
        cond.need(
            self.special().is_special_color(v, a),
            format!("color {a} is special for vertex {v}"),
        );
        let pv = phi.color(v);
        if !cond.need(a != pv, format!("phi({v}) differs from {a}")) || !cond.ok() {
            return Ok(skipped("claim2", cond));
        }
        let sets = boundary_sets(self.g, self.lists, phi, v, a)?;
        cond.need(sets.n1.is_empty(), "no blocking chain neighbors");
        cond.need(!sets.n2.is_empty(), "some blocking chain vertex at distance 2");
        if !cond.ok() {
            return Ok(skipped("claim2", cond));
        }
        let classes = self.classes()?;
        let class = classes.class_of_coloring(phi).expect("phi is an L-coloring");
        let first = classes.members(class).any(|i| {
            let psi = &classes.colorings[i];
            psi.color(v) == pv
                && boundary_sets(self.g, self.lists, psi, v, a).is_ok_and(|s| s.n1.is_empty() && s.n2.is_empty())
        });
        let sharing: Vec<Vertex> = self
            .g
            .vertices()
            .filter(|&u| self.special().is_special_color(u, a))
            .collect();
        let pair = sharing.iter().enumerate().find_map(|(i, &p)| {
            sharing[i + 1..]
                .iter()
                .find(|&&q| !self.g.has_edge(p, q))
                .map(|&q| [p, q])
        });
        let facts = BTreeMap::from([
            ("boundary".into(), json!(sets)),
            ("clearedInClass".into(), json!(first)),
            ("nonAdjacentSharingPair".into(), json!(pair)),
        ]);
        Ok(decided("claim2", cond, first || pair.is_some(), facts))
    }

    /// Two non-adjacent vertices sharing a special color force a single class.
    pub fn claim3(&self, x: Vertex, y: Vertex, c: Color) -> Result<Verdict> {
        self.g.check_vertex(x)?;
        self.g.check_vertex(y)?;
        let mut cond = Conditions::default();
        self.need_connectivity(&mut cond, 4);
        cond.need(self.degree_assignment(), "degree-assignment");
        cond.need(
            x != y && !self.g.has_edge(x, y),
            format!("vertices {x} and {y} are distinct and non-adjacent"),
        );
        cond.need(
            self.special().is_special_color(x, c) && self.special().is_special_color(y, c),
            format!("color {c} is special for both {x} and {y}"),
        );
        if !cond.ok() {
            return Ok(skipped("claim3", cond));
        }
        let classes = self.classes()?;
        let facts = BTreeMap::from([
            ("colorings".into(), json!(classes.colorings.len())),
            ("classCount".into(), json!(classes.class_count)),
        ]);
        Ok(decided("claim3", cond, classes.class_count <= 1, facts))
    }
}

pub fn check_lemma3(g: &Graph, lists: &ListAssignment) -> Result<Verdict> {
    Checker::new(g, lists)?.lemma3()
}

pub fn check_lemma4(g: &Graph, lists: &ListAssignment) -> Result<Verdict> {
    Checker::new(g, lists)?.lemma4()
}

pub fn check_lemma5(g: &Graph, lists: &ListAssignment, x: Vertex, a: Color) -> Result<Verdict> {
    Checker::new(g, lists)?.lemma5(x, a)
}

pub fn check_lemma6(g: &Graph, lists: &ListAssignment, x: Vertex, y: Vertex, a: Color, b: Color) -> Result<Verdict> {
    Checker::new(g, lists)?.lemma6(x, y, a, b)
}

pub fn check_claim1(g: &Graph, lists: &ListAssignment, psi: &Coloring, x: Vertex, c: Color) -> Result<Verdict> {
    Checker::new(g, lists)?.claim1(psi, x, c)
}

pub fn check_claim2(g: &Graph, lists: &ListAssignment, phi: &Coloring, v: Vertex, a: Color) -> Result<Verdict> {
    Checker::new(g, lists)?.claim2(phi, v, a)
}

pub fn check_claim3(g: &Graph, lists: &ListAssignment, x: Vertex, y: Vertex, c: Color) -> Result<Verdict> {
    Checker::new(g, lists)?.claim3(x, y, c)
}
