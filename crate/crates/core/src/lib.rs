//! Exact solvers for MU-VC: given a graph `G`, find a smallest vertex set `S`
//! such that `G - S` has exactly one minimum vertex cover.
//!
//! * [`graph`] and [`vc`]: graph type, `.gr` I/O, exact minimum vertex cover
//!   and the uniqueness test.
//! * [`oracle`]: exhaustive reference solvers used as ground truth.
//! * [`tree`]: linear-time solver for forests over neat tree decompositions.
//! * [`tw`]: dynamic programme over nice tree decompositions.
//! * [`cw`]: dynamic programme over clique-width expressions (XP and FPT modes).
//! * [`generators`]: deterministic instance generators, including the
//!   reduction from typed one-in-three satisfiability.

pub mod cw;
pub mod generators;
pub mod graph;
pub mod oracle;
pub mod rng;
pub mod tree;
pub mod tw;
pub mod uniq;
pub mod vc;

pub use graph::{induced_delete, is_vertex_cover, parse_graph, write_graph, Graph, GraphError, Vertex, VertexSet};
pub use uniq::Uniq;
pub use vc::{is_unique_min_vc, min_vc, min_vc_size, Uniqueness};

/// A solution of MU-VC produced by any of the solvers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Solution {
    /// Size of the deletion set.
    pub opt: usize,
    /// An optimal deletion set `S`.
    pub witness: VertexSet,
}

impl Solution {
    /// Checks the witness: it has size `opt` and `G - S` has a unique minimum
    /// vertex cover. Returns that cover in the indices of `g`.
    pub fn verify(&self, g: &Graph) -> Option<VertexSet> {
        if self.witness.len() != self.opt || self.witness.iter().any(|v| v >= g.n()) {
            return None;
        }
        let h = induced_delete(g, &self.witness);
        let u = is_unique_min_vc(&h.graph);
        u.unique.then(|| h.lift(&u.cover))
    }
}
