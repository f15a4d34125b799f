//! Acceptance suite: one PASS/FAIL line per criterion. Run with
//! `cargo test -p muvc-core --test acceptance -- --nocapture`.

use std::time::{Duration, Instant};

use muvc_core::cw::{build_cograph, build_path, build_tree, cw_dp, solve_muvc_cw, solve_muvc_cw_fpt, CwExpression, FptOutcome};
use muvc_core::generators::hardness::{check_structure, example_formula, gen_hardness_instance, gen_random_formula, TypedFormula};
use muvc_core::generators::{nine_vertex_tree, gen_bounded_degree_partial_ktree, gen_gk, gen_partial_ktree, gen_random_cotree, gen_random_tree};
use muvc_core::oracle::solve_muvc_bruteforce;
use muvc_core::oracle::solve_pauvc_bruteforce;
use muvc_core::tree::{build_neat_forest, solve_muvc_tree, NodeId, TreeDp};
use muvc_core::tw::{make_nice, solve_muvc_tw, TreeDecomposition, TwDp, TwMode};
use muvc_core::{induced_delete, is_unique_min_vc, min_vc_size, Graph, Solution, VertexSet};

const TREE9_LIMIT: Duration = Duration::from_millis(10);
const GK_LIMIT: Duration = Duration::from_secs(60);
const ORACLE_LIMIT: Duration = Duration::from_secs(300);
const PATH_SIZES: [usize; 3] = [250_000, 500_000, 1_000_000];
const PATH_LIMIT: Duration = Duration::from_secs(2);
const PATH_RATIO_LIMIT: f64 = 2.5;
const PATH_REPEATS: usize = 3;
const HARDNESS_LIMIT: Duration = Duration::from_secs(120);
const TREE_TABLE_LIMIT: usize = 12;

struct Report {
    failures: Vec<String>,
}

impl Report {
    fn record(&mut self, id: &str, title: &str, outcome: Result<String, String>) {
        match outcome {
            Ok(detail) => println!("PASS criterion {id}: {title} ({detail})"),
            Err(detail) => {
                println!("FAIL criterion {id}: {title} ({detail})");
                self.failures.push(id.to_string());
            }
        }
    }
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn oracle_opt(g: &Graph) -> usize {
    solve_muvc_bruteforce(g, g.n()).expect("deleting every vertex always works").opt
}

fn check_solution(name: &str, g: &Graph, s: &Solution, expected: usize) -> Result<(), String> {
    ensure(s.opt == expected, || format!("{name}: optimum {} but oracle says {expected}", s.opt))?;
    ensure(s.verify(g).is_some(), || format!("{name}: witness {} does not verify", s.witness.to_external()))
}

/// Builder corpus: 50 paths, 50 trees and 50 cographs with 1..=11 vertices.
fn builder_corpus() -> Vec<(String, Graph, CwExpression)> {
    let mut out = Vec::new();
    for i in 0..50u64 {
        let n = 1 + (i as usize % 11);
        out.push((format!("path n={n}"), Graph::path(n), build_path(n).expect("n >= 1")));
        let t = gen_random_tree(n, 1000 + i);
        let e = build_tree(&t).expect("a tree");
        out.push((format!("tree seed={}", 1000 + i), t, e));
        let ct = gen_random_cotree(n, 2000 + i).expect("n >= 1");
        let e = build_cograph(&ct).expect("valid cotree");
        out.push((format!("cograph seed={}", 2000 + i), ct.graph().expect("valid cotree"), e));
    }
    out
}

fn criterion_1() -> Result<String, String> {
    let g = nine_vertex_tree();
    let start = Instant::now();
    let s = solve_muvc_tree(&g).map_err(|e| e.to_string())?;
    let h = induced_delete(&g, &VertexSet::parse_external("8 9", g.n()).expect("valid ids"));
    let u = is_unique_min_vc(&h.graph);
    let mvc = min_vc_size(&g, &VertexSet::new()).expect("no forbidden vertices");
    let elapsed = start.elapsed();
    ensure(s.opt == 2, || format!("tree optimum {} != 2", s.opt))?;
    ensure(u.unique, || "G - {8,9} has several minimum covers".into())?;
    let cover = h.lift(&u.cover).to_external();
    ensure(cover == "2 4 6", || format!("unique cover {cover} != 2 4 6"))?;
    ensure(mvc == 4, || format!("MVC {mvc} != 4"))?;
    ensure(elapsed < TREE9_LIMIT, || format!("took {elapsed:?}"))?;
    Ok(format!("opt 2, cover {{{cover}}}, MVC 4, {elapsed:?}"))
}

fn criterion_2() -> Result<String, String> {
    let start = Instant::now();
    for k in 3..=7 {
        let g = gen_gk(k).expect("k >= 3");
        let s = solve_muvc_tree(&g).map_err(|e| e.to_string())?;
        ensure(s.opt == 2 && s.verify(&g).is_some(), || format!("G_{k}: tree optimum {}", s.opt))?;
    }
    let mut pau = Vec::new();
    for k in 3..=5 {
        let g = gen_gk(k).expect("k >= 3");
        let p = solve_pauvc_bruteforce(&g).map_err(|e| e.to_string())?;
        ensure(p.opt >= k, || format!("G_{k}: PAU-VC optimum {} < {k}", p.opt))?;
        pau.push(p.opt);
    }
    let elapsed = start.elapsed();
    ensure(elapsed < GK_LIMIT, || format!("took {elapsed:?}"))?;
    Ok(format!("MU-VC 2 for k=3..7, PAU-VC {pau:?} for k=3..5, {elapsed:?}"))
}

fn criterion_3() -> Result<String, String> {
    let start = Instant::now();
    for i in 0..300u64 {
        let n = 1 + (i as usize % 13);
        let g = gen_random_tree(n, i);
        let s = solve_muvc_tree(&g).map_err(|e| e.to_string())?;
        check_solution(&format!("tree seed={i}"), &g, &s, oracle_opt(&g))?;
    }
    for i in 0..150u64 {
        let n = 1 + (i as usize % 10);
        let k = 1 + (i as usize % 3);
        let (g, td) = gen_partial_ktree(n, k, 0.75, 5000 + i);
        let s = solve_muvc_tw(&g, &td, TwMode::Exact).map_err(|e| e.to_string())?;
        check_solution(&format!("tw seed={}", 5000 + i), &g, &s, oracle_opt(&g))?;
    }
    for (name, g, e) in builder_corpus() {
        ensure(e.eval().graph == g, || format!("{name}: expression does not evaluate to the graph"))?;
        let s = solve_muvc_cw(&e).map_err(|e| e.to_string())?;
        check_solution(&name, &g, &s, oracle_opt(&g))?;
    }
    let elapsed = start.elapsed();
    ensure(elapsed < ORACLE_LIMIT, || format!("took {elapsed:?}"))?;
    Ok(format!("300 trees, 150 tw<=3 graphs, 150 builder instances agree; {elapsed:?}"))
}

fn criterion_4() -> Result<String, String> {
    for i in 0..100u64 {
        let n = 1 + (i as usize * 7 % 60);
        let g = gen_random_tree(n, 9000 + i);
        let tree = solve_muvc_tree(&g).map_err(|e| e.to_string())?.opt;
        let td = TreeDecomposition::for_forest(&g).expect("a tree");
        let tw = solve_muvc_tw(&g, &td, TwMode::Exact).map_err(|e| e.to_string())?.opt;
        let cw = solve_muvc_cw(&build_tree(&g).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?.opt;
        ensure(tree == tw && tw == cw, || format!("seed {}: tree {tree}, tw {tw}, cw {cw}", 9000 + i))?;
    }
    Ok("100 trees with n <= 60 agree across tree, tw and cw solvers".into())
}

fn criterion_5() -> Result<String, String> {
    for i in 0..100u64 {
        let n = 4 + (i as usize % 11);
        let (g, td) = gen_bounded_degree_partial_ktree(n, 3, 4, 7000 + i);
        ensure(g.max_degree() <= 4, || "generator exceeded degree 4".into())?;
        let exact = solve_muvc_tw(&g, &td, TwMode::Exact).map_err(|e| e.to_string())?.opt;
        let trunc = solve_muvc_tw(&g, &td, TwMode::DegreeTruncated { max_degree: 4 }).map_err(|e| e.to_string())?.opt;
        ensure(exact == trunc, || format!("seed {}: exact {exact}, truncated {trunc}", 7000 + i))?;
    }
    let corpus = builder_corpus();
    for (name, _, e) in &corpus {
        let xp = solve_muvc_cw(e).map_err(|e| e.to_string())?.opt;
        for k in 0..=xp + 2 {
            let fpt = solve_muvc_cw_fpt(e, k).map_err(|e| e.to_string())?;
            match fpt {
                FptOutcome::Solved(s) => ensure(k >= xp && s.opt == xp, || format!("{name}: k={k} gave {} (xp {xp})", s.opt))?,
                FptOutcome::InfeasibleWithinK { .. } => ensure(k < xp, || format!("{name}: k={k} infeasible though xp {xp}"))?,
            }
        }
    }
    Ok(format!("100 degree-4 instances; {} builder expressions for k = 0..opt+2", corpus.len()))
}

fn time_path(n: usize) -> Result<Duration, String> {
    let g = Graph::path(n);
    let mut best = Duration::MAX;
    for _ in 0..PATH_REPEATS {
        let start = Instant::now();
        let s = solve_muvc_tree(&g).map_err(|e| e.to_string())?;
        best = best.min(start.elapsed());
        ensure(s.opt == oracle_path_opt(n), || format!("path n={n}: optimum {}", s.opt))?;
    }
    Ok(best)
}

/// Optimum on paths, frozen from the oracle on small paths: a path has a unique
/// minimum cover iff it has an odd number of vertices, so one deletion fixes even paths.
fn oracle_path_opt(n: usize) -> usize {
    usize::from(n.is_multiple_of(2))
}

fn criterion_6() -> Result<String, String> {
    for n in 1..=12 {
        ensure(oracle_opt(&Graph::path(n)) == oracle_path_opt(n), || format!("oracle disagrees on path n={n}"))?;
    }
    let times: Vec<Duration> = PATH_SIZES.iter().map(|&n| time_path(n)).collect::<Result<_, _>>()?;
    for (n, t) in PATH_SIZES.iter().zip(&times) {
        ensure(*t < PATH_LIMIT, || format!("n={n} took {t:?}"))?;
    }
    let ratios: Vec<f64> = times.windows(2).map(|w| w[1].as_secs_f64() / w[0].as_secs_f64()).collect();
    ensure(ratios.iter().all(|&r| r <= PATH_RATIO_LIMIT), || format!("ratios {ratios:.2?}"))?;
    Ok(format!("times {times:?}, ratios {ratios:.2?}"))
}

fn criterion_7() -> Result<String, String> {
    let mut tree_nodes = 0;
    for i in 0..100u64 {
        let g = gen_random_tree(1 + (i as usize * 13 % 300), 300 + i);
        let d = build_neat_forest(&g).map_err(|e| e.to_string())?;
        let dp = TreeDp::run_traced(&d);
        for x in 0..d.nodes().len() {
            let len = dp.table(NodeId(x as u32)).len();
            ensure(len <= TREE_TABLE_LIMIT, || format!("tree table with {len} entries"))?;
        }
        tree_nodes += d.nodes().len();
    }
    let mut tw_entries = 0;
    for i in 0..100u64 {
        let (g, td) = gen_partial_ktree(2 + (i as usize % 11), 1 + (i as usize % 3), 0.7, 400 + i);
        let nice = make_nice(&td, &g).map_err(|e| e.to_string())?;
        let dp = TwDp::run(&nice, &g, TwMode::Exact);
        let max_deg = g.max_degree() as u32;
        for t in dp.tables() {
            for c in t.keys() {
                ensure(c.delta[0] == 0, || "delta of the empty set is not zero".into())?;
                for (d, &x) in c.delta.iter().enumerate() {
                    ensure(x <= max_deg * d.count_ones(), || format!("delta {x} above degree bound"))?;
                }
                tw_entries += 1;
            }
        }
    }
    let mut cw_entries = 0;
    for (name, _, e) in builder_corpus() {
        let dp = cw_dp(&e).map_err(|e| e.to_string())?;
        for (x, t) in dp.tables().iter().enumerate() {
            for (c, entry) in t {
                let ok = dp.differences(x, c).iter().all(|&d| (0..=entry.size as i64).contains(&d));
                ensure(ok, || format!("{name}: difference outside [0, |S|]"))?;
                cw_entries += 1;
            }
        }
    }
    Ok(format!("{tree_nodes} tree nodes, {tw_entries} tw entries, {cw_entries} cw entries checked"))
}

/// Formulas with at most two clauses and at most two x-variables: every
/// single-clause formula on three variables, plus seeded two-clause formulas.
fn small_formulas() -> Vec<TypedFormula> {
    let mut out = Vec::new();
    for n1 in 0..=2usize {
        for signs in 0..8u32 {
            let lits: Vec<String> = (0..3)
                .map(|t| {
                    let name = if t < n1 { format!("x{}", t + 1) } else { format!("y{}", t - n1 + 1) };
                    if signs >> t & 1 == 1 {
                        format!("-{name}")
                    } else {
                        name
                    }
                })
                .collect();
            let text = format!("x {n1}\ny {}\n{}\n", 3 - n1, lits.join(" "));
            out.push(text.parse().expect("valid formula"));
        }
    }
    for n1 in 0..=2usize {
        for nv in 3..=6usize {
            for seed in 0..8u64 {
                if let Some(f) = gen_random_formula(n1, nv - n1, 2, seed * 31 + nv as u64) {
                    out.push(f);
                }
            }
        }
    }
    out
}

fn criterion_8() -> Result<String, String> {
    let start = Instant::now();
    let f = example_formula();
    let gg = gen_hardness_instance(&f);
    check_structure(&gg, &f).map_err(|e| e.to_string())?;
    ensure((gg.graph.n(), gg.graph.m()) == (102, 146), || format!("example has {} vertices, {} edges", gg.graph.n(), gg.graph.m()))?;
    ensure(gg.graph.max_degree() <= 5, || "degree above 5".into())?;
    let formulas = small_formulas();
    let mut yes = 0;
    for f in &formulas {
        let gg = gen_hardness_instance(f);
        check_structure(&gg, f).map_err(|e| e.to_string())?;
        let hits_n1 = solve_muvc_bruteforce(&gg.graph, f.n1()).is_ok_and(|r| r.opt == f.n1());
        let uq = f.is_uq_one_in_three();
        yes += usize::from(uq);
        ensure(hits_n1 == uq, || format!("formula {:?}: optimum = n1 is {hits_n1}, UQ 1-in-3 says {uq}", f.to_string()))?;
    }
    let elapsed = start.elapsed();
    ensure(elapsed < HARDNESS_LIMIT, || format!("took {elapsed:?}"))?;
    Ok(format!("example 102/146 max degree {}; {} formulas ({yes} yes) agree; {elapsed:?}", gg.graph.max_degree(), formulas.len()))
}

#[test]
fn acceptance() {
    let mut report = Report { failures: Vec::new() };
    report.record("1", "nine-vertex tree reproduction", criterion_1());
    report.record("2", "separation family G_k", criterion_2());
    report.record("3", "oracle equivalence suites", criterion_3());
    report.record("4", "cross-solver consistency", criterion_4());
    report.record("5", "truncation losslessness", criterion_5());
    report.record("6", "linear time on paths", criterion_6());
    report.record("7", "structural invariants", criterion_7());
    report.record("8", "hardness generator sanity", criterion_8());
    assert!(report.failures.is_empty(), "failed criteria: {:?}", report.failures);
}
