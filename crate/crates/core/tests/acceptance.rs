//! Acceptance criteria. One line per criterion; exits nonzero on any failure.

mod common;

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use rand::seq::{IndexedRandom, SliceRandom};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use kempe_reconfig::coloring::special_vertices;
use kempe_reconfig::graph::{families, vertex_connectivity};
use kempe_reconfig::harness::sampling::{
    add_surplus, random_connected_graph, random_k_connected_graph, random_tight_lists,
};
use kempe_reconfig::harness::{
    canonicalize, check_lemma3, check_lemma4, enumerate_canonical_degree_assignments, search_conjecture,
    verify_theorem2, AssignmentGenerator, Checker, SweepOptions,
};
use kempe_reconfig::io::parse_graph_corpus;
use kempe_reconfig::kempe::{apply_move, is_chain_of, kempe_chain, valid_moves};
use kempe_reconfig::oracle::{build_reconfig_graph, classify, find_path, kempe_classes, DEFAULT_NODE_CAP};
use kempe_reconfig::{Color, Graph, ListAssignment};

const CORPUS_LE6: &str = include_str!("../data/connected_le6.g6");

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(start: Instant, budget: Duration) -> Result<(), String> {
    let t = start.elapsed();
    ensure(t <= budget, || format!("took {t:.2?}, budget {budget:?}"))
}

fn quiet() -> SweepOptions {
    SweepOptions {
        node_cap: DEFAULT_NODE_CAP,
        include_timing: false,
    }
}

fn raw(lists: &ListAssignment) -> Vec<Vec<Color>> {
    lists.lists().to_vec()
}

fn prism_exception() -> Outcome {
    let start = Instant::now();
    let g = families::prism();
    let l = ListAssignment::identical(6, 3);
    let classes = classify(&g, &l, DEFAULT_NODE_CAP).map_err(|e| e.to_string())?;
    let (brute_nodes, brute_classes) = common::class_count(&g, &raw(&l));
    within(start, Duration::from_secs(1))?;
    ensure(classes.colorings.len() == 12 && brute_nodes == 12, || {
        format!(
            "{} colorings (reference {brute_nodes}), expected 12",
            classes.colorings.len()
        )
    })?;
    ensure(classes.class_count >= 2 && brute_classes == classes.class_count, || {
        format!(
            "{} classes (reference {brute_classes}), expected at least 2",
            classes.class_count
        )
    })?;
    Ok(format!("12 colorings, {} classes", classes.class_count))
}

fn k33_single_class() -> Outcome {
    let start = Instant::now();
    let g = families::complete_bipartite(3, 3);
    let l = ListAssignment::identical(6, 3);
    let classes = classify(&g, &l, DEFAULT_NODE_CAP).map_err(|e| e.to_string())?;
    let (nodes, brute) = common::class_count(&g, &raw(&l));
    within(start, Duration::from_secs(5))?;
    ensure(classes.class_count == 1 && brute == 1, || {
        format!("{} classes (reference {brute})", classes.class_count)
    })?;
    Ok(format!("{nodes} colorings, 1 class"))
}

fn octahedron_sweeps() -> Outcome {
    let start = Instant::now();
    let g = families::octahedron();
    let gen = AssignmentGenerator::exhaustive(g.clone(), 5);
    let exhaustive = verify_theorem2(&g, &gen, quiet()).map_err(|e| e.to_string())?;

    // every raw tight assignment over five colors, canonicalized
    let mut reference = BTreeSet::new();
    let subsets: Vec<Vec<Color>> = (1..=5).map(|skip| (1..=5).filter(|&c| c != skip).collect()).collect();
    let mut idx = [0usize; 6];
    loop {
        let l = ListAssignment::new(idx.iter().map(|&i| subsets[i].clone()).collect()).unwrap();
        reference.insert(canonicalize(&l));
        let Some(i) = (0..6).rev().find(|&i| idx[i] < 4) else {
            break;
        };
        idx[i] += 1;
        idx[i + 1..].iter_mut().for_each(|x| *x = 0);
    }
    ensure(exhaustive.assignments_tested == reference.len(), || {
        format!(
            "{} canonical assignments, reference {}",
            exhaustive.assignments_tested,
            reference.len()
        )
    })?;
    ensure(exhaustive.is_clean(), || {
        format!("{} exhaustive violations", exhaustive.violations.len())
    })?;

    let gen = AssignmentGenerator::random(g.clone(), 8, 1000, 0x5eed);
    let sampled = verify_theorem2(&g, &gen, quiet()).map_err(|e| e.to_string())?;
    ensure(sampled.is_clean(), || {
        format!("{} sampled violations", sampled.violations.len())
    })?;
    ensure(sampled.assignments_tested >= 1000, || "fewer than 1000 samples".into())?;
    within(start, Duration::from_secs(600))?;
    Ok(format!(
        "{} exhaustive (cap 5) + {} sampled (cap 8), 0 violations",
        exhaustive.assignments_tested, sampled.assignments_tested
    ))
}

fn lemma3_agreement() -> Outcome {
    let start = Instant::now();
    let corpus = parse_graph_corpus(CORPUS_LE6).map_err(|e| e.to_string())?;
    let mut by_order = [0usize; 7];
    for g in &corpus {
        by_order[g.n()] += 1;
    }
    ensure(by_order[1..] == [1, 1, 2, 6, 21, 112], || {
        format!("corpus orders {by_order:?}")
    })?;
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let (mut total, mut uncolorable) = (0, 0);
    for g in &corpus {
        for _ in 0..100 {
            let l = if g.n() == 1 {
                // a lone vertex has degree 0; the smallest degree-assignment is one color
                ListAssignment::new(vec![vec![rng.random_range(1..=3)]]).unwrap()
            } else {
                let cap = g.max_degree() + rng.random_range(0..=2);
                random_tight_lists(&mut rng, g, cap)
            };
            let v = check_lemma3(g, &l).map_err(|e| e.to_string())?;
            ensure(v.passed(), || {
                format!("disagreement on {g:?} with {l:?}: {:?}", v.facts)
            })?;
            if v.facts["enumeratedColorable"] == false {
                uncolorable += 1;
            }
            total += 1;
        }
    }
    within(start, Duration::from_secs(600))?;
    ensure(uncolorable > 0, || "no uncolorable instance was sampled".into())?;
    Ok(format!("{total} instances agree ({uncolorable} uncolorable)"))
}

fn lemma4_suite() -> Outcome {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let mut cross_checked = 0;
    for i in 0..1000 {
        let n = rng.random_range(2..=7);
        let p = rng.random_range(0.3..0.9);
        let g = random_connected_graph(&mut rng, n, p);
        let cap = g.max_degree() + rng.random_range(0..=2);
        let tight = random_tight_lists(&mut rng, &g, cap);
        let v = rng.random_range(0..n);
        let l = add_surplus(&mut rng, &tight, v, cap);
        let verdict = check_lemma4(&g, &l).map_err(|e| e.to_string())?;
        ensure(verdict.passed(), || {
            format!("instance {i}: {g:?} {l:?} {:?}", verdict.facts)
        })?;
        if i % 10 == 0 {
            let (_, brute) = common::class_count(&g, &raw(&l));
            ensure(brute <= 1, || {
                format!("reference finds {brute} classes on instance {i}")
            })?;
            cross_checked += 1;
        }
    }
    within(start, Duration::from_secs(600))?;
    Ok(format!(
        "1000 surplus instances, 1 class each ({cross_checked} cross-checked)"
    ))
}

fn lemma5_and_6_suites() -> Outcome {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(56);
    let mut lemma5 = 0;
    let mut attempts = 0;
    while lemma5 < 200 {
        attempts += 1;
        ensure(attempts < 20_000, || "could not sample lemma 5 instances".into())?;
        let n = rng.random_range(3..=7);
        let p = rng.random_range(0.4..0.9);
        let Some(g) = random_k_connected_graph(&mut rng, n, 2, p, 100) else {
            continue;
        };
        let cap = g.max_degree() + rng.random_range(1..=3);
        let l = random_tight_lists(&mut rng, &g, cap);
        let specials = special_vertices(&g, &l);
        let options: Vec<(usize, Color)> = specials
            .entries
            .iter()
            .flat_map(|e| e.colors().into_iter().map(move |c| (e.vertex, c)))
            .collect();
        let Some(&(x, a)) = options.choose(&mut rng) else {
            continue;
        };
        let v = Checker::new(&g, &l)
            .and_then(|c| c.lemma5(x, a))
            .map_err(|e| e.to_string())?;
        ensure(v.passed(), || format!("lemma 5 on {g:?} {l:?} x={x} a={a}: {v:?}"))?;
        lemma5 += 1;
    }

    let mut lemma6 = 0;
    let mut equal_colors = 0;
    attempts = 0;
    while lemma6 < 200 {
        attempts += 1;
        ensure(attempts < 20_000, || "could not sample lemma 6 instances".into())?;
        let n = rng.random_range(5..=7);
        let p = rng.random_range(0.6..0.9);
        let Some(g) = random_k_connected_graph(&mut rng, n, 3, p, 100) else {
            continue;
        };
        let cap = g.max_degree() + rng.random_range(1..=3);
        let l = random_tight_lists(&mut rng, &g, cap);
        let specials = special_vertices(&g, &l);
        let mut options = Vec::new();
        for ex in &specials.entries {
            for ey in &specials.entries {
                if ex.vertex < ey.vertex && !g.has_edge(ex.vertex, ey.vertex) {
                    for a in ex.colors() {
                        for b in ey.colors() {
                            options.push((ex.vertex, ey.vertex, a, b));
                        }
                    }
                }
            }
        }
        let same: Vec<_> = options.iter().copied().filter(|o| o.2 == o.3).collect();
        let pick = if !same.is_empty() && rng.random_bool(0.3) {
            same.choose(&mut rng)
        } else {
            options.choose(&mut rng)
        };
        let Some(&(x, y, a, b)) = pick else { continue };
        let v = Checker::new(&g, &l)
            .and_then(|c| c.lemma6(x, y, a, b))
            .map_err(|e| e.to_string())?;
        ensure(v.passed(), || {
            format!("lemma 6 on {g:?} {l:?} x={x} y={y} a={a} b={b}: {v:?}")
        })?;
        ensure(v.facts["constructionInBothSets"] == true, || {
            "construction missed a set".into()
        })?;
        lemma6 += 1;
        if a == b {
            equal_colors += 1;
        }
    }
    within(start, Duration::from_secs(600))?;
    ensure(equal_colors > 0, || "no lemma 6 instance with a = b".into())?;
    Ok(format!(
        "lemma 5: {lemma5} pass; lemma 6: {lemma6} pass ({equal_colors} with a = b), constructions verified"
    ))
}

fn four_connected_hosts() -> Vec<(&'static str, Graph)> {
    let mut chorded = families::circulant(7, &[1, 2]).edges().collect::<Vec<_>>();
    chorded.push((0, 3));
    vec![
        ("octahedron", families::octahedron()),
        ("C7(1,2)", families::circulant(7, &[1, 2])),
        ("C8(1,2)", families::circulant(8, &[1, 2])),
        ("C8(1,3)", families::circulant(8, &[1, 3])),
        ("C7(1,2)+chord", Graph::from_edges(7, chorded).unwrap()),
    ]
}

fn claims_suites() -> Outcome {
    let start = Instant::now();
    let hosts = four_connected_hosts();
    for (name, g) in &hosts {
        let k = vertex_connectivity(g);
        ensure(k >= 4 && !g.is_complete(), || {
            format!("host {name} has connectivity {k}")
        })?;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(123);
    let (mut c1, mut c1_trivial, mut c1_far, mut c2, mut c3) = (0, 0, 0, 0, 0);
    let mut cross_checked = 0;
    let mut round = 0;
    while c1 < 100 || c2 < 100 || c3 < 100 {
        round += 1;
        ensure(round < 5_000, || {
            format!("sampling stalled: claim1 {c1}, claim2 {c2}, claim3 {c3}")
        })?;
        let (name, g) = hosts.choose(&mut rng).unwrap();
        let cap = g.max_degree() + rng.random_range(1..=2);
        let l = random_tight_lists(&mut rng, g, cap);
        let checker = Checker::new(g, &l).map_err(|e| e.to_string())?;
        let classes = checker.classes().map_err(|e| e.to_string())?;
        if classes.colorings.is_empty() {
            continue;
        }
        let specials = checker.special().clone();
        let fail = |what: &str, v: &kempe_reconfig::harness::Verdict| format!("{what} on {name} {l:?}: {v:?}");

        for _ in 0..4 {
            let psi = classes.colorings.choose(&mut rng).unwrap().clone();
            let x = rng.random_range(0..g.n());
            let c = *l.list(x).choose(&mut rng).unwrap();
            let v = checker.claim1(&psi, x, c).map_err(|e| e.to_string())?;
            if v.skipped() {
                continue;
            }
            ensure(v.passed(), || fail("claim 1", &v))?;
            c1 += 1;
            c1_trivial += usize::from(v.facts["trivial"] == true);
            c1_far += usize::from(v.facts["maximumDegree"] == false);
        }

        let mut order: Vec<usize> = (0..classes.colorings.len()).collect();
        order.shuffle(&mut rng);
        let mut found = 0;
        'search: for &i in order.iter().take(200) {
            let phi = &classes.colorings[i];
            for e in &specials.entries {
                for a in e.colors() {
                    let v = checker.claim2(phi, e.vertex, a).map_err(|e| e.to_string())?;
                    if v.skipped() {
                        continue;
                    }
                    ensure(v.passed(), || fail("claim 2", &v))?;
                    c2 += 1;
                    found += 1;
                    if found == 2 {
                        break 'search;
                    }
                }
            }
        }

        let mut pairs = Vec::new();
        for ex in &specials.entries {
            for ey in &specials.entries {
                if ex.vertex < ey.vertex && !g.has_edge(ex.vertex, ey.vertex) {
                    for c in ex.colors() {
                        if specials.is_special_color(ey.vertex, c) {
                            pairs.push((ex.vertex, ey.vertex, c));
                        }
                    }
                }
            }
        }
        if let Some(&(x, y, c)) = pairs.choose(&mut rng) {
            let v = checker.claim3(x, y, c).map_err(|e| e.to_string())?;
            ensure(v.passed(), || fail("claim 3", &v))?;
            c3 += 1;
            if cross_checked < 10 {
                let (_, brute) = common::class_count(g, &raw(&l));
                ensure(brute == 1, || {
                    format!("reference finds {brute} classes for claim 3 on {name}")
                })?;
                cross_checked += 1;
            }
        }
    }
    within(start, Duration::from_secs(900))?;
    ensure(c1_trivial > 0 && c1_trivial < c1, || {
        "claim 1 never exercised both branches".into()
    })?;
    ensure(c1_far > 0, || {
        "claim 1 never needed the non-adjacent special vertex".into()
    })?;
    Ok(format!(
        "claim 1: {c1} pass ({c1_trivial} trivial, {c1_far} without maximum degree); claim 2: {c2} pass; claim 3: {c3} pass"
    ))
}

fn mechanical_invariants() -> Outcome {
    let start = Instant::now();
    let corpus: Vec<Graph> = parse_graph_corpus(CORPUS_LE6)
        .map_err(|e| e.to_string())?
        .into_iter()
        .filter(|g| g.n() >= 2 && g.n() <= 5)
        .collect();
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let (mut instances, mut colorings_seen, mut edges_seen, mut paths) = (0, 0, 0, 0);
    for g in &corpus {
        let d = g.max_degree() as Color;
        let mut assignments = vec![
            ListAssignment::identical(g.n(), d),
            ListAssignment::identical(g.n(), d + 1),
        ];
        for _ in 0..3 {
            assignments.push(random_tight_lists(&mut rng, g, g.max_degree() + 2));
        }
        let dense = common::Dense::of(g);
        for l in &assignments {
            instances += 1;
            let rg = build_reconfig_graph(g, l).map_err(|e| e.to_string())?;
            let palette = l.palette();
            let mut expected_edges = BTreeSet::new();
            for (i, c) in rg.nodes.iter().enumerate() {
                colorings_seen += 1;
                for v in g.vertices() {
                    for &b in &palette {
                        if b == c.color(v) {
                            continue;
                        }
                        let m = kempe_chain(g, c, v, b);
                        let reference = common::chain(&dense, c.colors(), v, b);
                        ensure(m.chain == reference, || format!("chain mismatch on {g:?} at {v}"))?;
                        ensure(is_chain_of(g, c, &m), || "chain not recognised".into())?;
                        let once = apply_move(g, c, &m).map_err(|e| e.to_string())?;
                        let back = apply_move(g, &once, &m).map_err(|e| e.to_string())?;
                        ensure(back == *c, || "swap is not an involution".into())?;
                        if common::respects(l.lists(), once.colors()) {
                            let j = rg.node_index(&once).ok_or("valid swap leaves the node set")?;
                            expected_edges.insert((i.min(j), i.max(j)));
                        }
                    }
                }
            }
            let actual: BTreeSet<(usize, usize)> = rg.edges.iter().map(|e| (e.from, e.to)).collect();
            for e in &rg.edges {
                let moved = apply_move(g, &rg.nodes[e.from], &e.kempe_move).map_err(|e| e.to_string())?;
                ensure(moved == rg.nodes[e.to], || {
                    "edge move does not reach its endpoint".into()
                })?;
            }
            ensure(actual == expected_edges, || format!("edge set mismatch on {g:?} {l:?}"))?;
            edges_seen += actual.len();

            let report = kempe_classes(&rg);
            for members in &report.classes {
                let source = &rg.nodes[members[0]];
                for &t in members {
                    let target = &rg.nodes[t];
                    let moves = find_path(&rg, source, target)
                        .map_err(|e| e.to_string())?
                        .ok_or("no path inside a class")?;
                    let mut cur = source.clone();
                    for m in &moves {
                        ensure(valid_moves(g, l, &cur).contains(m), || {
                            "path uses an invalid move".into()
                        })?;
                        cur = apply_move(g, &cur, m).map_err(|e| e.to_string())?;
                    }
                    ensure(cur == *target, || "path replay misses its target".into())?;
                    paths += 1;
                }
            }
            if report.classes.len() > 1 {
                let a = &rg.nodes[report.classes[0][0]];
                let b = &rg.nodes[report.classes[1][0]];
                ensure(find_path(&rg, a, b).map_err(|e| e.to_string())?.is_none(), || {
                    "path across classes".into()
                })?;
            }
        }
    }
    within(start, Duration::from_secs(120))?;
    Ok(format!(
        "{instances} instances, {colorings_seen} colorings, {edges_seen} edges, {paths} paths replayed"
    ))
}

fn determinism() -> Outcome {
    let g = families::octahedron();
    let gen = AssignmentGenerator::random(g.clone(), 9, 300, 77);
    let first = verify_theorem2(&g, &gen, quiet()).map_err(|e| e.to_string())?.to_json();
    let second = verify_theorem2(&g, &gen, quiet()).map_err(|e| e.to_string())?.to_json();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(1)
        .build()
        .map_err(|e| e.to_string())?;
    let serial = pool
        .install(|| verify_theorem2(&g, &gen, quiet()))
        .map_err(|e| e.to_string())?
        .to_json();
    ensure(first == second && first == serial, || {
        "theorem 2 reports differ between runs".into()
    })?;

    let k33 = families::complete_bipartite(3, 3);
    let gen = AssignmentGenerator::exhaustive(k33.clone(), 4);
    let a = search_conjecture(&k33, &gen, quiet())
        .map_err(|e| e.to_string())?
        .to_json();
    let b = pool
        .install(|| search_conjecture(&k33, &gen, quiet()))
        .map_err(|e| e.to_string())?
        .to_json();
    ensure(a == b, || "conjecture reports differ between runs".into())?;

    let samples = enumerate_canonical_degree_assignments(&AssignmentGenerator::random(g.clone(), 9, 50, 77)).unwrap();
    ensure(
        samples == enumerate_canonical_degree_assignments(&AssignmentGenerator::random(g, 9, 50, 77)).unwrap(),
        || "sampled assignments differ".into(),
    )?;
    Ok(format!(
        "byte-identical reports ({} and {} bytes), across thread counts",
        first.len(),
        a.len()
    ))
}

fn main() {
    type Criterion = (&'static str, fn() -> Outcome);
    let criteria: [Criterion; 9] = [
        ("prism exception: 12 colorings, >= 2 classes, < 1 s", prism_exception),
        ("K3,3 identical {1,2,3}: exactly 1 class, < 5 s", k33_single_class),
        (
            "octahedron sweeps: exhaustive cap 5 + 1000 sampled, 0 violations, <= 10 min",
            octahedron_sweeps,
        ),
        (
            "colorability characterization vs enumeration, <= 6 vertices x 100, <= 10 min",
            lemma3_agreement,
        ),
        (
            "surplus implies one class, 1000 instances n <= 7, <= 10 min",
            lemma4_suite,
        ),
        (
            "fixed special colors: 200 + 200 instances, <= 10 min",
            lemma5_and_6_suites,
        ),
        ("4-connected claims: 100 instances each, <= 15 min", claims_suites),
        (
            "mechanical invariants on <= 5 vertices, <= 2 min",
            mechanical_invariants,
        ),
        ("determinism of sweep reports", determinism),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = std::panic::catch_unwind(run).unwrap_or_else(|_| Err("panicked".into()));
        let t = start.elapsed();
        match result {
            Ok(detail) => println!("PASS [{}] {name} :: {detail} ({t:.2?})", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL [{}] {name} :: {why} ({t:.2?})", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
