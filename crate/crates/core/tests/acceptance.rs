//! Acceptance checks, one line per criterion.
//!
//! Run with `cargo test -p symdepth-core --test acceptance --release`.
//! A criterion listed in `DOCUMENTED_GAPS` still prints FAIL when it fails,
//! but does not fail the process: its published values cannot hold for the
//! graphs as defined (the reason is printed alongside).

use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use symdepth_core::betti::{depth, depth_rows, depth_via_polarization, BettiOptions, polarize, stabilization_index, PowerKind};
use symdepth_core::bipartite::{bc, bc_prime};
use symdepth_core::io::parse_graph_shorthand;
use symdepth_core::symbolic::{ghos_odd_cycle_expansion, sullivant_chordal, symbolic_membership, symbolic_power};
use symdepth_core::verify::{default_scan_suite, VERIFY_LATTICE_CAP, run_conjecture_scan, verify_lemma, Lemma, Status, VerifyOptions};
use symdepth_core::{Field, Graph, Monomial, MonomialIdeal, SimplicialComplex, SymbolicPowerRequest, VertexSet, WhiskerSpec};

const DOCUMENTED_GAPS: &[(u32, &str)] = &[
    (
        5,
        "triangle with two whiskers per vertex: the whisker depth lemma gives 1+2+2 = 5 at s = 1 and dim S/I = 6 < 7",
    ),
    (
        8,
        "complement of the graph has diameter 2, which forces depth S/I^(2) >= 2; depth 1 is first reached at s = 3",
    ),
];

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome { pass, detail: detail.into() }
}

fn g(spec: &str) -> Graph {
    parse_graph_shorthand(spec).unwrap()
}

fn sym(graph: &Graph, s: u32) -> MonomialIdeal {
    symbolic_power(&SymbolicPowerRequest::new(graph.clone(), s)).unwrap()
}

fn depth_sequence(graph: &Graph, kind: PowerKind, s_max: u32, field: Field) -> symdepth_core::Result<Vec<usize>> {
    let opts = BettiOptions { lattice_cap: VERIFY_LATTICE_CAP, ..BettiOptions::over(field) };
    Ok(depth_rows(graph, kind, s_max, &opts)?.into_iter().map(|r| r.depth).collect())
}

fn ceil3(x: i64) -> i64 {
    x.div_euclid(3) + i64::from(x.rem_euclid(3) != 0)
}

/// Closed form for odd cycles, written out independently of the library.
fn cycle_formula(n: usize, s: u32) -> usize {
    if s == 1 {
        ceil3(n as i64 - 1) as usize
    } else {
        ceil3(n as i64 - s as i64 + 1).max(1) as usize
    }
}

fn criterion_1() -> Outcome {
    let f = Field::DEFAULT;
    let t = Instant::now();
    let c5 = depth_sequence(&g("cycle:5"), PowerKind::Symbolic, 5, f).unwrap();
    let t5 = t.elapsed();
    let t = Instant::now();
    let c7 = depth_sequence(&g("cycle:7"), PowerKind::Symbolic, 7, f).unwrap();
    let t7 = t.elapsed();
    let want5: Vec<usize> = (1..=5).map(|s| cycle_formula(5, s)).collect();
    let want7: Vec<usize> = (1..=7).map(|s| cycle_formula(7, s)).collect();
    let pass = c5 == [2, 2, 1, 1, 1]
        && c7 == [2, 2, 2, 2, 1, 1, 1]
        && c5 == want5
        && c7 == want7
        && t5 < Duration::from_secs(60)
        && t7 < Duration::from_secs(900);
    outcome(pass, format!("C5 {c5:?} in {:.1}s, C7 {c7:?} in {:.1}s", t5.as_secs_f64(), t7.as_secs_f64()))
}

fn criterion_2() -> Outcome {
    let f = Field::DEFAULT;
    let c5 = depth_sequence(&g("cycle:5"), PowerKind::Symbolic, 4, f).unwrap();
    let c7 = depth_sequence(&g("cycle:7"), PowerKind::Symbolic, 6, f).unwrap();
    let s5 = stabilization_index(&c5, Some(3)).unwrap();
    let s7 = stabilization_index(&c7, Some(5)).unwrap();
    let pass = s5.index == 3 && s7.index == 5 && !s5.tentative && !s7.tentative;
    outcome(pass, format!("sdstab C5 = {}, C7 = {}", s5.index, s7.index))
}

fn criterion_3() -> Outcome {
    let f = Field::DEFAULT;
    let c5 = depth_sequence(&g("cycle:5"), PowerKind::Ordinary, 4, f).unwrap();
    let c6 = depth_sequence(&g("cycle:6"), PowerKind::Ordinary, 4, f).unwrap();
    outcome(c5 == [2, 2, 0, 0] && c6 == [2, 2, 2, 1], format!("C5 {c5:?}, C6 {c6:?}"))
}

fn criterion_4() -> Outcome {
    let f = Field::DEFAULT;
    let mut pass = true;
    let mut detail = Vec::new();
    for n in 2..=4 {
        let w = Graph::whisker(&WhiskerSpec::uniform(n).unwrap()).unwrap();
        let seq = depth_sequence(&w, PowerKind::Symbolic, 3, f).unwrap();
        pass &= seq == [n, n - 1, n - 1];
        detail.push(format!("W{n} {seq:?}"));
    }
    for (a, lemma) in [(vec![2, 1], 2), (vec![2, 2, 1], 4), (vec![3, 1], 2)] {
        let w = Graph::whisker(&WhiskerSpec::new(a.clone()).unwrap()).unwrap();
        let d = depth(&w.edge_ideal(), f).unwrap();
        // 1 + a_2 + ... with a sorted decreasingly
        let mut sorted = a.clone();
        sorted.sort_unstable_by(|x, y| y.cmp(x));
        let formula = 1 + sorted[1..].iter().sum::<usize>();
        pass &= d == lemma && d == formula;
        detail.push(format!("W{a:?} s=1 {d}"));
    }
    outcome(pass, detail.join(", "))
}

fn criterion_5() -> Outcome {
    let w = Graph::example_w();
    let t = Instant::now();
    let b = bc(&w).unwrap().0;
    let bp = bc_prime(&w).unwrap().0;
    let tb = t.elapsed();
    let t = Instant::now();
    let seq = depth_sequence(&w, PowerKind::Symbolic, 3, Field::DEFAULT).unwrap();
    let ts = t.elapsed();
    let pass = seq == [7, 4, 2] && b == 3 && bp == 2 && tb < Duration::from_secs(1) && ts < Duration::from_secs(1800);
    outcome(
        pass,
        format!(
            "depths {seq:?} (expected [7, 4, 2]) in {:.1}s; bc {b}, bc' {bp} in {:.3}s",
            ts.as_secs_f64(),
            tb.as_secs_f64()
        ),
    )
}

fn criterion_6() -> Outcome {
    let mut pass = true;
    let mut detail = Vec::new();
    for n in [3, 5, 7, 9] {
        let b = bc(&Graph::cycle(n).unwrap()).unwrap().0;
        pass &= b == 1;
        detail.push(format!("bc(C{n})={b}"));
    }
    for n in 2..=5 {
        let b = bc(&Graph::whisker(&WhiskerSpec::uniform(n).unwrap()).unwrap()).unwrap().0;
        pass &= b == n - 1;
        detail.push(format!("bc(W{n})={b}"));
    }
    for a in [vec![1, 1], vec![1, 1, 1], vec![2, 2, 2], vec![2, 1, 1]] {
        let n = a.len();
        let b = bc_prime(&Graph::whisker(&WhiskerSpec::new(a.clone()).unwrap()).unwrap()).unwrap().0;
        pass &= b == n - 1;
        detail.push(format!("bc'(W{a:?})={b}"));
    }
    outcome(pass, detail.join(" "))
}

fn criterion_7() -> Outcome {
    let o = VerifyOptions::default();
    let mut cases: Vec<(Lemma, &str, Option<u32>)> = vec![
        (Lemma::LeafColon, "path:3", Some(2)),
        (Lemma::LeafColon, "path:3", Some(3)),
        (Lemma::LeafColon, "path:4", Some(2)),
        (Lemma::LeafColon, "path:4", Some(3)),
        (Lemma::LeafColon, "path:5", Some(2)),
        (Lemma::LeafColon, "whisker:1,1", Some(2)),
        (Lemma::LeafColon, "whisker:1,1", Some(3)),
        (Lemma::LeafColon, "whisker:1,1,1", Some(2)),
        (Lemma::LeafColon, "whisker:2,1", Some(3)),
        (Lemma::LeafColon, "example:w", Some(2)),
    ];
    for n in ["complete:2", "complete:3", "complete:4", "complete:5"] {
        cases.push((Lemma::CompleteColon, n, None));
    }
    for a in ["whisker:1,1", "whisker:1,1,1", "whisker:2,1"] {
        cases.push((Lemma::WhiskerColon, a, None));
    }
    for h in ["cycle:5", "example:w"] {
        cases.push((Lemma::CompletionSum, h, None));
        cases.push((Lemma::BipartiteCompletionColon, h, None));
    }
    cases.push((Lemma::BipartiteCompletionColon, "path:4", None));
    cases.extend([
        (Lemma::CycleColonF, "cycle:5", Some(3)),
        (Lemma::CycleColonF, "cycle:7", Some(4)),
        (Lemma::CycleColonF, "cycle:7", Some(5)),
    ]);
    let mut rows = 0;
    let mut bad = Vec::new();
    for (lemma, graph, s) in cases {
        match verify_lemma(lemma, graph, s, &o) {
            Ok(r) => {
                rows += r.rows.len();
                if r.rows.is_empty() || r.rows.iter().any(|row| row.status != Status::Pass) {
                    bad.push(format!("{lemma} on {graph}"));
                }
            }
            Err(e) => bad.push(format!("{lemma} on {graph}: {e}")),
        }
    }
    outcome(bad.is_empty(), format!("{rows} identities checked; failures: {bad:?}"))
}

fn eleven_variable_graph() -> Graph {
    let edges = [
        (1, 3), (1, 4), (1, 7), (1, 10), (1, 11), (2, 4), (2, 5), (2, 8), (2, 10), (2, 11),
        (3, 5), (3, 6), (3, 8), (3, 11), (4, 6), (4, 9), (4, 11),
        (5, 7), (5, 9), (5, 11), (6, 8), (6, 9), (7, 9), (7, 10), (8, 10),
    ];
    Graph::from_edges(11, edges.iter().map(|&(a, b)| (a - 1, b - 1))).unwrap()
}

fn criterion_8() -> Outcome {
    let graph = eleven_variable_graph();
    let i = graph.edge_ideal();
    let d2 = depth(&i, Field::Prime(2)).unwrap();
    let dp = depth(&i, Field::DEFAULT).unwrap();
    let dq = depth(&i, Field::Rationals).unwrap();
    let sq = sym(&graph, 2);
    let s2 = depth(&sq, Field::Prime(2)).unwrap();
    let sp = depth(&sq, Field::DEFAULT).unwrap();
    let pass = (d2, dp, dq) == (2, 3, 3) && (s2, sp) == (1, 1);
    outcome(
        pass,
        format!("I: gf:2 {d2}, gf:32003 {dp}, qq {dq} (expected 2, 3, 3); I^(2): gf:2 {s2}, gf:32003 {sp} (expected 1, 1)"),
    )
}

fn random_chordal(rng: &mut ChaCha8Rng, n: usize) -> Graph {
    // attach each new vertex to a subset of an existing clique
    let mut graph = Graph::empty(n).unwrap();
    let mut cliques: Vec<Vec<usize>> = vec![vec![0]];
    for v in 1..n {
        let base = cliques[rng.gen_range(0..cliques.len())].clone();
        let chosen: Vec<usize> = base.into_iter().filter(|_| rng.gen_bool(0.7)).collect();
        let chosen = if chosen.is_empty() { vec![rng.gen_range(0..v)] } else { chosen };
        for &u in &chosen {
            graph.add_edge(u, v).unwrap();
        }
        let mut c = chosen;
        c.push(v);
        cliques.push(c);
    }
    graph
}

fn random_ideal(rng: &mut ChaCha8Rng) -> MonomialIdeal {
    loop {
        let n = rng.gen_range(2..=4);
        let k = rng.gen_range(1..=5);
        let rows: Vec<Vec<u32>> = (0..k).map(|_| (0..n).map(|_| rng.gen_range(0..=3)).collect()).collect();
        if rows.iter().any(|r| r.iter().all(|&e| e == 0)) {
            continue;
        }
        let i = MonomialIdeal::from_exponents(n, rows).unwrap();
        let (pol, _) = polarize(&i).unwrap();
        if pol.n() <= 12 {
            return i;
        }
    }
}

fn criterion_9() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut violations = Vec::new();

    // (a) intersection against the odd-cycle expansion
    for n in [3, 5, 7] {
        let c = Graph::cycle(n).unwrap();
        for s in 1..=n as u32 {
            if !sym(&c, s).equals(&ghos_odd_cycle_expansion(n, s).unwrap()).unwrap() {
                violations.push(format!("ghos C{n} s={s}"));
            }
        }
    }
    // (b) intersection against clique products on chordal graphs
    let mut chordal = 0;
    for _ in 0..30 {
        let n = rng.gen_range(3..=8);
        let graph = random_chordal(&mut rng, n);
        assert!(graph.is_chordal());
        chordal += 1;
        for s in 1..=3 {
            if !sym(&graph, s).equals(&sullivant_chordal(&graph, s).unwrap()).unwrap() {
                violations.push(format!("sullivant {graph:?} s={s}"));
            }
        }
    }
    // (c) lcm-lattice depth against Hochster on the polarization
    for _ in 0..50 {
        let i = random_ideal(&mut rng);
        let a = depth(&i, Field::DEFAULT).unwrap();
        let b = depth_via_polarization(&i, Field::DEFAULT).unwrap();
        if a != b {
            violations.push(format!("depth {i}: {a} vs {b}"));
        }
    }
    // (d) nerve theorem
    for _ in 0..200 {
        let n = rng.gen_range(2..=7);
        let k = rng.gen_range(1..=6);
        let facets: Vec<VertexSet> = (0..k)
            .map(|_| VertexSet(rng.gen_range(1..(1u64 << n))))
            .collect();
        let c = SimplicialComplex::from_facets(n, facets).unwrap();
        for f in [Field::Prime(2), Field::Rationals] {
            if !c.nerve_theorem_check(f).unwrap() {
                violations.push(format!("nerve {c:?}"));
            }
        }
    }
    // (e) membership oracle
    let graphs = [("cycle:5", 3), ("whisker:1,1,1", 2), ("example:w", 2), ("path:4", 3), ("complete:4", 3)];
    let ideals: Vec<(Graph, u32, MonomialIdeal)> =
        graphs.iter().map(|&(spec, s)| (g(spec), s, sym(&g(spec), s))).collect();
    for _ in 0..1000 {
        let (graph, s, ideal) = &ideals[rng.gen_range(0..ideals.len())];
        let m = Monomial::new((0..graph.n()).map(|_| rng.gen_range(0..=3))).unwrap();
        if symbolic_membership(graph, *s, &m).unwrap() != ideal.contains(&m).unwrap() {
            violations.push(format!("membership {m}"));
        }
    }
    outcome(violations.is_empty(), format!("{chordal} chordal graphs; violations {violations:?}"))
}

fn criterion_10() -> Outcome {
    let report = run_conjecture_scan(&default_scan_suite(), None, &VerifyOptions::default()).unwrap();
    let bound_ok = report.rows.iter().filter(|r| r.check == "depth <= bc").all(|r| r.status == Status::Pass);
    let verdicts: Vec<String> = report
        .rows
        .iter()
        .filter(|r| r.check == "limit = bc'")
        .map(|r| format!("{} {}", r.instance, r.note))
        .collect();
    let all_match = report.rows.iter().filter(|r| r.check == "limit = bc'").all(|r| r.note == "matches");
    outcome(bound_ok && all_match && report.passed(), format!("depth <= bc on all: {bound_ok}; {}", verdicts.join(", ")))
}

fn main() {
    type Criterion = (u32, &'static str, fn() -> Outcome);
    let criteria: [Criterion; 10] = [
        (1, "cycle symbolic depth tables", criterion_1),
        (2, "cycle stabilization index", criterion_2),
        (3, "ordinary cycle powers", criterion_3),
        (4, "whisker graphs", criterion_4),
        (5, "example W", criterion_5),
        (6, "bc / bc' suite", criterion_6),
        (7, "ideal identity suite", criterion_7),
        (8, "characteristic dependence", criterion_8),
        (9, "oracle equivalence", criterion_9),
        (10, "depth <= bc and conjecture scan", criterion_10),
    ];
    let mut unexpected = 0;
    let mut documented = 0;
    for (id, name, run) in criteria {
        let t = Instant::now();
        let out = run();
        let secs = t.elapsed().as_secs_f64();
        let verdict = if out.pass { "PASS" } else { "FAIL" };
        println!("{verdict} {id:>2} {name} ({secs:.1}s): {}", out.detail);
        if !out.pass {
            match DOCUMENTED_GAPS.iter().find(|(g, _)| *g == id) {
                Some((_, why)) => {
                    println!("        documented gap: {why}");
                    documented += 1;
                }
                None => unexpected += 1,
            }
        }
    }
    println!("acceptance: {} criteria, {unexpected} unexpected failures, {documented} documented gaps", criteria.len());
    if unexpected > 0 {
        std::process::exit(1);
    }
}
