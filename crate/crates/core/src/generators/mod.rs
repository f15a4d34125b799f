//! Deterministic instance generators.
//!
//! * fixed families: the nine-vertex example tree and the family `G_k`;
//! * seeded random trees, `G(n, p)` graphs, cotrees and partial `k`-trees
//!   (the latter together with a tree decomposition of width at most `k`);
//! * the reduction from typed one-in-three satisfiability, in [`hardness`].

pub mod hardness;

use itertools::Itertools;

use crate::cw::Cotree;
use crate::graph::{Graph, Vertex};
use crate::rng::{seeded, GenRng, Rng, SliceRandom};
use crate::tw::TreeDecomposition;

/// The nine-vertex tree rooted at vertex 1 (external id) with three pendant
/// paths of length two and two pendant leaves:
/// edges 1-2, 1-4, 1-6, 1-8, 1-9, 2-3, 4-5, 6-7 (1-based).
pub fn nine_vertex_tree() -> Graph {
    let edges = [(1, 2), (1, 4), (1, 6), (1, 8), (1, 9), (2, 3), (4, 5), (6, 7)];
    Graph::new(9, edges.iter().map(|&(u, v)| (u - 1, v - 1))).expect("fixed edge list")
}

/// `G_k` for `k >= 3`: the nine-vertex tree with `k - 3` further pendant
/// paths of length two hung from vertex 1. The minimum deletion set has size
/// two for every `k`, while pinning a unique cover by inclusion needs `k` vertices.
pub fn gen_gk(k: usize) -> Option<Graph> {
    if k < 3 {
        return None;
    }
    let base = nine_vertex_tree();
    let extra = k - 3;
    let n = base.n() + 2 * extra;
    let mut edges: Vec<(Vertex, Vertex)> = base.edges().collect();
    for j in 0..extra {
        let a = base.n() + 2 * j;
        edges.push((0, a));
        edges.push((a, a + 1));
    }
    Some(Graph::new(n, edges).expect("tree edges are valid"))
}

/// Decodes a Prüfer sequence over `0..n` (length `n - 2`) into a labelled tree.
pub fn prufer_decode(n: usize, seq: &[Vertex]) -> Graph {
    assert!(n >= 2 && seq.len() == n - 2, "a Prüfer sequence for n vertices has length n - 2");
    let mut degree = vec![1usize; n];
    for &v in seq {
        degree[v] += 1;
    }
    let mut leaves: std::collections::BTreeSet<Vertex> = (0..n).filter(|&v| degree[v] == 1).collect();
    let mut edges = Vec::with_capacity(n - 1);
    for &v in seq {
        let leaf = leaves.pop_first().expect("a tree always has a leaf");
        edges.push((leaf, v));
        degree[v] -= 1;
        if degree[v] == 1 {
            leaves.insert(v);
        }
    }
    let (a, b) = (leaves.pop_first().expect("two left"), leaves.pop_first().expect("two left"));
    edges.push((a, b));
    Graph::new(n, edges).expect("Prüfer decoding yields a simple tree")
}

/// A uniformly random labelled tree on `n` vertices (via a random Prüfer sequence).
pub fn gen_random_tree(n: usize, seed: u64) -> Graph {
    let mut rng = seeded(seed);
    random_tree(n, &mut rng)
}

fn random_tree(n: usize, rng: &mut GenRng) -> Graph {
    match n {
        0 | 1 => Graph::empty(n),
        _ => {
            let seq: Vec<Vertex> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
            prufer_decode(n, &seq)
        }
    }
}

/// An Erdős–Rényi graph: every pair (in lexicographic order) is an edge with probability `p`.
pub fn gen_random_graph(n: usize, p: f64, seed: u64) -> Graph {
    let mut rng = seeded(seed);
    let p = p.clamp(0.0, 1.0);
    let edges: Vec<_> = (0..n).tuple_combinations().filter(|_| rng.gen_bool(p)).collect();
    Graph::new(n, edges).expect("pairs are distinct")
}

/// A random cotree on leaves `0..n`: leaves are shuffled, then recursively
/// split into two or three parts, alternating union and join nodes.
pub fn gen_random_cotree(n: usize, seed: u64) -> Option<Cotree> {
    if n == 0 {
        return None;
    }
    let mut rng = seeded(seed);
    let mut leaves: Vec<Vertex> = (0..n).collect();
    leaves.shuffle(&mut rng);
    let top_is_join = rng.gen_bool(0.5);
    Some(random_cotree(&leaves, top_is_join, &mut rng))
}

fn random_cotree(leaves: &[Vertex], join: bool, rng: &mut GenRng) -> Cotree {
    if leaves.len() == 1 {
        return Cotree::Leaf(leaves[0]);
    }
    let parts = rng.gen_range(2..=leaves.len().min(3));
    let mut cuts: Vec<usize> = (1..leaves.len()).collect();
    cuts.shuffle(rng);
    let mut cuts: Vec<usize> = cuts.into_iter().take(parts - 1).collect();
    cuts.sort_unstable();
    let mut children = Vec::new();
    let mut start = 0;
    for end in cuts.into_iter().chain(std::iter::once(leaves.len())) {
        children.push(random_cotree(&leaves[start..end], !join, rng));
        start = end;
    }
    if join {
        Cotree::Join(children)
    } else {
        Cotree::Union(children)
    }
}

/// A random partial `k`-tree on `n` vertices with a tree decomposition of width
/// at most `k`. A random `k`-tree is grown by attaching each new vertex to a
/// random existing `k`-clique, each edge is then kept with probability
/// `keep`, and vertex names are shuffled.
pub fn gen_partial_ktree(n: usize, k: usize, keep: f64, seed: u64) -> (Graph, TreeDecomposition) {
    let mut rng = seeded(seed);
    let (edges, bags, tree_edges) = ktree_skeleton(n, k, &mut rng);
    let keep = keep.clamp(0.0, 1.0);
    let edges: Vec<_> = edges.into_iter().filter(|_| rng.gen_bool(keep)).collect();
    finish_partial_ktree(n, edges, bags, tree_edges, &mut rng)
}

/// Like [`gen_partial_ktree`], but edges of the `k`-tree are visited in random
/// order and kept only while both endpoints stay below degree `max_degree`.
pub fn gen_bounded_degree_partial_ktree(n: usize, k: usize, max_degree: usize, seed: u64) -> (Graph, TreeDecomposition) {
    let mut rng = seeded(seed);
    let (mut edges, bags, tree_edges) = ktree_skeleton(n, k, &mut rng);
    edges.shuffle(&mut rng);
    let mut degree = vec![0usize; n];
    let mut kept = Vec::new();
    for (u, v) in edges {
        if degree[u] < max_degree && degree[v] < max_degree {
            degree[u] += 1;
            degree[v] += 1;
            kept.push((u, v));
        }
    }
    finish_partial_ktree(n, kept, bags, tree_edges, &mut rng)
}

type Skeleton = (Vec<(Vertex, Vertex)>, Vec<Vec<Vertex>>, Vec<(usize, usize)>);

fn ktree_skeleton(n: usize, k: usize, rng: &mut GenRng) -> Skeleton {
    let base = n.min(k + 1);
    let mut edges: Vec<(Vertex, Vertex)> = (0..base).tuple_combinations().collect();
    let mut bags = vec![(0..base).collect::<Vec<_>>()];
    let mut tree_edges = Vec::new();
    // k-cliques available for attachment, with the bag that contains them.
    let mut cliques: Vec<(Vec<Vertex>, usize)> = if base == k + 1 {
        (0..base).combinations(k).map(|c| (c, 0)).collect()
    } else {
        Vec::new()
    };
    for v in base..n {
        let (clique, host) = cliques[rng.gen_range(0..cliques.len())].clone();
        let bag_id = bags.len();
        let mut bag = clique.clone();
        bag.push(v);
        bags.push(bag);
        tree_edges.push((host, bag_id));
        for &c in &clique {
            edges.push((c, v));
        }
        for skip in 0..clique.len() {
            let mut next: Vec<Vertex> = clique.iter().copied().enumerate().filter(|&(i, _)| i != skip).map(|(_, c)| c).collect();
            next.push(v);
            cliques.push((next, bag_id));
        }
        if clique.is_empty() {
            cliques.push((Vec::new(), bag_id));
        }
    }
    (edges, bags, tree_edges)
}

fn finish_partial_ktree(
    n: usize,
    edges: Vec<(Vertex, Vertex)>,
    bags: Vec<Vec<Vertex>>,
    tree_edges: Vec<(usize, usize)>,
    rng: &mut GenRng,
) -> (Graph, TreeDecomposition) {
    let mut perm: Vec<Vertex> = (0..n).collect();
    perm.shuffle(rng);
    let graph = Graph::new(n, edges.into_iter().map(|(u, v)| (perm[u], perm[v]))).expect("k-tree edges are simple");
    let bags = bags.into_iter().map(|b| b.into_iter().map(|v| perm[v]).collect()).collect();
    let td = TreeDecomposition::new(n, bags, tree_edges).expect("k-tree bags form a tree decomposition");
    (graph, td)
}
