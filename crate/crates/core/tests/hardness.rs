//! Gadget-level properties of optimal solutions on tiny reduction instances.

use muvc_core::generators::hardness::{gen_hardness_instance, gen_random_formula, Role, TypedFormula, Var};
use muvc_core::oracle::solve_muvc_bruteforce;

fn tiny_yes_instances() -> Vec<TypedFormula> {
    let mut out = Vec::new();
    for n1 in 1..=2usize {
        for nv in 3..=5usize {
            for seed in 0..6u64 {
                if let Some(f) = gen_random_formula(n1, nv - n1, 2, 77 * seed + nv as u64) {
                    if f.is_uq_one_in_three() {
                        out.push(f);
                    }
                }
            }
        }
    }
    out
}

#[test]
fn optimal_deletions_hit_one_pendant_path_vertex_per_x_gadget() {
    let formulas = tiny_yes_instances();
    assert!(formulas.len() >= 5, "corpus too small: {}", formulas.len());
    for f in &formulas {
        let gg = gen_hardness_instance(f);
        let r = solve_muvc_bruteforce(&gg.graph, f.n1()).expect("yes-instances are solvable with n1 deletions");
        assert_eq!(r.opt, f.n1());
        for i in 0..f.n1() {
            let var = Var::X(i);
            let hits = r
                .witness
                .iter()
                .filter(|&v| matches!(gg.roles[v], Role::U { var: w, k: 2 | 3 | 5 | 6 } if w == var))
                .count();
            assert_eq!(hits, 1, "formula {f:?}: {hits} deletions on the pendant paths of {var}");
        }
    }
}

#[test]
fn unique_cover_takes_three_vertices_per_clause_gadget() {
    for f in &tiny_yes_instances() {
        let gg = gen_hardness_instance(f);
        let r = solve_muvc_bruteforce(&gg.graph, f.n1()).expect("yes-instance");
        for c in 0..f.clauses().len() {
            let taken = r
                .unique_cover
                .iter()
                .filter(|&v| matches!(gg.roles[v], Role::ClauseLiteral { clause, .. } | Role::ClauseHub { clause } | Role::ClausePendant { clause } if clause == c))
                .count();
            assert_eq!(taken, 3, "formula {f:?}, clause {}", c + 1);
        }
    }
}
