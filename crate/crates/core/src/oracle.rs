//! Exhaustive reference solvers. These are exponential and meant for small
//! graphs; every other solver is tested against them.

use itertools::Itertools;
use rayon::prelude::*;
use thiserror::Error;

use crate::graph::{induced_delete, is_vertex_cover, Graph, VertexSet};
use crate::vc::{is_unique_min_vc, min_vc_size};

/// Result of the exhaustive MU-VC search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleResult {
    /// Minimum size of a deletion set.
    pub opt: usize,
    /// The lexicographically first optimal deletion set.
    pub witness: VertexSet,
    /// The unique minimum vertex cover of `G - witness`, in indices of `G`.
    pub unique_cover: VertexSet,
}

/// Result of the exhaustive PAU-VC search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PauResult {
    /// Minimum size of a set `P` contained in exactly one minimum cover.
    pub opt: usize,
    /// The lexicographically first optimal `P`.
    pub witness: VertexSet,
    /// The minimum cover singled out by `witness`.
    pub cover: VertexSet,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("no deletion set of size at most {k_max} makes the minimum vertex cover unique")]
    InfeasibleAboveBudget { k_max: usize },
    #[error("no vertex set is contained in exactly one minimum vertex cover")]
    PauInfeasible,
}

/// Smallest `S` with `|S| <= k_max` such that `G - S` has a unique minimum
/// vertex cover. Sets are tried by increasing size, then lexicographically;
/// within one size the candidates are checked in parallel and the first one
/// in that order is returned.
pub fn solve_muvc_bruteforce(g: &Graph, k_max: usize) -> Result<OracleResult, OracleError> {
    for size in 0..=k_max.min(g.n()) {
        let candidates: Vec<Vec<usize>> = (0..g.n()).combinations(size).collect();
        let hit = candidates.par_iter().find_map_first(|s| {
            let set = VertexSet::from(s.clone());
            let h = induced_delete(g, &set);
            let u = is_unique_min_vc(&h.graph);
            u.unique.then(|| (set, h.lift(&u.cover)))
        });
        if let Some((witness, unique_cover)) = hit {
            return Ok(OracleResult { opt: size, witness, unique_cover });
        }
    }
    Err(OracleError::InfeasibleAboveBudget { k_max })
}

/// All minimum vertex covers of `g` in lexicographic order.
pub fn enumerate_min_vcs(g: &Graph) -> Vec<VertexSet> {
    let m = min_vc_size(g, &VertexSet::new()).expect("no forbidden vertices");
    (0..g.n())
        .combinations(m)
        .map(VertexSet::from)
        .filter(|c| is_vertex_cover(g, c))
        .collect()
}

/// Smallest `P` such that exactly one minimum vertex cover contains `P`.
///
/// A full minimum cover is contained in no other minimum cover, so a
/// solution always exists; the error is kept for completeness.
pub fn solve_pauvc_bruteforce(g: &Graph) -> Result<PauResult, OracleError> {
    let covers: Vec<Vec<bool>> = enumerate_min_vcs(g).iter().map(|c| c.to_mask(g.n())).collect();
    for size in 0..=g.n() {
        for p in (0..g.n()).combinations(size) {
            let mut containing = covers.iter().filter(|c| p.iter().all(|&v| c[v]));
            if let (Some(only), None) = (containing.next(), containing.next()) {
                let cover = (0..g.n()).filter(|&v| only[v]).collect();
                return Ok(PauResult { opt: size, witness: VertexSet::from(p), cover });
            }
        }
    }
    Err(OracleError::PauInfeasible)
}

/// Number of minimum vertex covers of `g`, by exhaustive enumeration.
pub fn count_min_vcs(g: &Graph) -> usize {
    enumerate_min_vcs(g).len()
}
