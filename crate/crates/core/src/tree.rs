//! Linear-time MU-VC on forests.
//!
//! Each component is rooted at its smallest vertex and written as a term over
//! three constructors: `Leaf(r)` (a single root), `Extend(T', r)` (a new root
//! `r` joined by one edge to the root of `T'`) and `Join(T1, T2)` (two trees
//! glued at their common root). For every subterm the dynamic programme keeps,
//! per *reduced characteristic*, the smallest deletion set avoiding the root.
//!
//! For a deletion set `S` avoiding the root `r` of `(T, r)`, let `a0` (`a1`)
//! be the smallest number of non-root vertices in a vertex cover of `T - S`
//! that excludes (includes) `r`, and let `b0`, `b1` record whether that
//! optimum is attained once or several times. Always `a1 <= a0`. The reduced
//! characteristic keeps `delta = min(2, a0 - a1)` together with `b0, b1`,
//! giving twelve possible values; [`TreeFullChar`] keeps `a0, a1` exactly and
//! serves as an independent cross-check.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::graph::{Graph, Vertex, VertexSet};
use crate::uniq::Uniq;
use crate::Solution;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TreeError {
    #[error("the graph is not a tree")]
    NotATree,
    #[error("the graph is not a forest")]
    NotAForest,
    #[error("root {root} out of range for a graph with {n} vertices")]
    RootOutOfRange { root: Vertex, n: usize },
}

/// Index of a node inside a [`NeatTreeDecomposition`]. Nodes and vertices are
/// stored as `u32` to keep the arena compact.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct NodeId(pub u32);

impl NodeId {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

/// One constructor of a neat tree decomposition.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NeatNode {
    /// The single-vertex tree rooted at `root`.
    Leaf { root: u32 },
    /// `child` plus the new root `root`, adjacent to the root of `child`.
    Extend { child: NodeId, root: u32 },
    /// Two trees sharing the root `root` and nothing else.
    Join { left: NodeId, right: NodeId, root: u32 },
}

impl NeatNode {
    pub fn root(&self) -> Vertex {
        match *self {
            NeatNode::Leaf { root } | NeatNode::Extend { root, .. } | NeatNode::Join { root, .. } => root as Vertex,
        }
    }
}

/// Neat tree decompositions of every component of a forest, stored in one
/// arena in post-order: children precede their parents, and every node is
/// immediately preceded by the complete term of its last child. The terms can
/// therefore be evaluated with a stack.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NeatTreeDecomposition {
    nodes: Vec<NeatNode>,
    tops: Vec<NodeId>,
}

impl NeatTreeDecomposition {
    pub fn nodes(&self) -> &[NeatNode] {
        &self.nodes
    }

    pub fn node(&self, id: NodeId) -> NeatNode {
        self.nodes[id.index()]
    }

    /// Top-level term of each component, in order of the component roots.
    pub fn tops(&self) -> &[NodeId] {
        &self.tops
    }

    /// The edges produced by evaluating the terms, each as `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(Vertex, Vertex)> {
        let mut edges: Vec<_> = self
            .nodes
            .iter()
            .filter_map(|node| match *node {
                NeatNode::Extend { child, root } => {
                    let (c, root) = (self.node(child).root(), root as Vertex);
                    Some((c.min(root), c.max(root)))
                }
                _ => None,
            })
            .collect();
        edges.sort_unstable();
        edges
    }

    /// Vertices of the subtree generated by `id`, sorted.
    pub fn vertices(&self, id: NodeId) -> Vec<Vertex> {
        let mut out = Vec::new();
        let mut stack = vec![id];
        while let Some(x) = stack.pop() {
            match self.node(x) {
                NeatNode::Leaf { root } => out.push(root as Vertex),
                NeatNode::Extend { child, root } => {
                    out.push(root as Vertex);
                    stack.push(child);
                }
                NeatNode::Join { left, right, .. } => {
                    stack.push(left);
                    stack.push(right);
                }
            }
        }
        out.sort_unstable();
        out.dedup();
        out
    }

    fn push(&mut self, node: NeatNode) -> NodeId {
        self.nodes.push(node);
        NodeId((self.nodes.len() - 1) as u32)
    }

    /// Appends the decomposition of the component of `root`, rooted there.
    /// Children are visited in increasing order and folded left to right:
    /// `Join(Join(Extend(T1), Extend(T2)), Extend(T3))`. Nodes are emitted in
    /// post-order of that term. The caller guarantees that the component is acyclic.
    fn add_component(&mut self, g: &Graph, root: Vertex, visited: &mut [bool]) -> NodeId {
        struct Frame {
            v: Vertex,
            next: usize,
            acc: Option<NodeId>,
        }
        visited[root] = true;
        let mut stack = vec![Frame { v: root, next: 0, acc: None }];
        let mut finished: Option<NodeId> = None;
        loop {
            let frame = stack.last_mut().expect("the root frame is popped last");
            let v = frame.v;
            // Fold the term of a child that has just been completed.
            if let Some(sub) = finished.take() {
                let ext = self.push(NeatNode::Extend { child: sub, root: v as u32 });
                let frame = stack.last_mut().expect("still on the stack");
                frame.acc = Some(match frame.acc {
                    None => ext,
                    Some(left) => self.push(NeatNode::Join { left, right: ext, root: v as u32 }),
                });
                continue;
            }
            let nbrs = g.neighbors(v);
            while frame.next < nbrs.len() && visited[nbrs[frame.next]] {
                frame.next += 1;
            }
            if let Some(&c) = nbrs.get(frame.next) {
                frame.next += 1;
                visited[c] = true;
                stack.push(Frame { v: c, next: 0, acc: None });
                continue;
            }
            let done = stack.pop().expect("non-empty");
            let term = done.acc.unwrap_or_else(|| self.push(NeatNode::Leaf { root: v as u32 }));
            if stack.is_empty() {
                return term;
            }
            finished = Some(term);
        }
    }
}

/// Neat tree decomposition of a tree rooted at `root`.
pub fn build_neat_decomposition(g: &Graph, root: Vertex) -> Result<NeatTreeDecomposition, TreeError> {
    if root >= g.n() {
        return Err(TreeError::RootOutOfRange { root, n: g.n() });
    }
    if !g.is_tree() {
        return Err(TreeError::NotATree);
    }
    let mut d = NeatTreeDecomposition { nodes: Vec::new(), tops: Vec::new() };
    let mut visited = vec![false; g.n()];
    let top = d.add_component(g, root, &mut visited);
    d.tops.push(top);
    Ok(d)
}

/// Neat tree decompositions of all components of a forest, each rooted at its smallest vertex.
pub fn build_neat_forest(g: &Graph) -> Result<NeatTreeDecomposition, TreeError> {
    if !g.is_forest() {
        return Err(TreeError::NotAForest);
    }
    let mut d = NeatTreeDecomposition { nodes: Vec::new(), tops: Vec::new() };
    let mut visited = vec![false; g.n()];
    for v in 0..g.n() {
        if !visited[v] {
            let top = d.add_component(g, v, &mut visited);
            d.tops.push(top);
        }
    }
    Ok(d)
}

/// One of the twelve reduced characteristics.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TreeReducedChar {
    /// `min(2, a0 - a1)`.
    pub delta: u8,
    /// Multiplicity of optimal covers excluding the root.
    pub beta0: Uniq,
    /// Multiplicity of optimal covers including the root.
    pub beta1: Uniq,
}

fn uniq_bit(u: Uniq) -> usize {
    match u {
        Uniq::One => 0,
        Uniq::Many => 1,
    }
}

fn uniq_of(bit: usize) -> Uniq {
    if bit == 0 {
        Uniq::One
    } else {
        Uniq::Many
    }
}

impl TreeReducedChar {
    pub const COUNT: usize = 12;

    pub fn new(delta: u8, beta0: Uniq, beta1: Uniq) -> Self {
        assert!(delta <= 2, "delta is capped at two");
        TreeReducedChar { delta, beta0, beta1 }
    }

    /// Dense index in `0..12`.
    pub fn index(self) -> usize {
        self.delta as usize * 4 + uniq_bit(self.beta0) * 2 + uniq_bit(self.beta1)
    }

    pub fn from_index(i: usize) -> Self {
        assert!(i < Self::COUNT);
        TreeReducedChar { delta: (i / 4) as u8, beta0: uniq_of((i / 2) % 2), beta1: uniq_of(i % 2) }
    }

    /// All twelve values in index order.
    pub fn all() -> impl Iterator<Item = TreeReducedChar> {
        (0..Self::COUNT).map(Self::from_index)
    }

    /// Characteristic of the empty set in a single-vertex tree.
    pub fn leaf() -> Self {
        TreeReducedChar::new(0, Uniq::One, Uniq::One)
    }

    /// Characteristic of the union of two deletion sets on the two sides of a join.
    pub fn join(self, other: Self) -> Self {
        TreeReducedChar {
            delta: (self.delta + other.delta).min(2),
            beta0: self.beta0.times(other.beta0),
            beta1: self.beta1.times(other.beta1),
        }
    }

    /// Characteristic after extending by a new root, the old root kept.
    pub fn extend_keep(self) -> Self {
        TreeReducedChar {
            delta: if self.delta >= 1 { 0 } else { 1 },
            beta0: self.beta1,
            beta1: match self.delta {
                0 => self.beta0,
                1 => Uniq::Many,
                _ => self.beta1,
            },
        }
    }

    /// Characteristic after extending by a new root, the old root deleted.
    pub fn extend_delete(self) -> Self {
        TreeReducedChar { delta: 0, beta0: self.beta1, beta1: self.beta1 }
    }

    /// Whether a set with this characteristic is a solution when the root stays.
    pub fn accepts_with_root(self) -> bool {
        (self.delta == 0 && self.beta0 == Uniq::One) || (self.delta == 2 && self.beta1 == Uniq::One)
    }

    /// Whether the set plus the root is a solution.
    pub fn accepts_without_root(self) -> bool {
        self.beta1 == Uniq::One
    }
}

/// How an entry was produced, for witness reconstruction.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TreeBack {
    Leaf,
    /// From entry `child` of the child term; `deleted` when the child's root joined `S`.
    Extend { child: u8, deleted: bool },
    Join { left: u8, right: u8 },
}

/// Smallest deletion set size for one reduced characteristic.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TreeEntry {
    pub size: u32,
    pub back: TreeBack,
}

/// Table indexed by [`TreeReducedChar::index`]; `None` means no set has that characteristic.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub struct TreeDpTable(pub [Option<TreeEntry>; TreeReducedChar::COUNT]);

impl TreeDpTable {
    pub fn get(&self, c: TreeReducedChar) -> Option<TreeEntry> {
        self.0[c.index()]
    }

    /// Number of finite entries.
    pub fn len(&self) -> usize {
        self.0.iter().flatten().count()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Finite entries as `(characteristic, size)` in index order.
    pub fn entries(&self) -> impl Iterator<Item = (TreeReducedChar, u32)> + '_ {
        self.0.iter().enumerate().filter_map(|(i, e)| e.map(|e| (TreeReducedChar::from_index(i), e.size)))
    }

    /// Stores `entry` unless an entry at most as small is already present.
    fn offer(&mut self, c: TreeReducedChar, entry: TreeEntry) {
        let slot = &mut self.0[c.index()];
        if slot.is_none_or(|old| entry.size < old.size) {
            *slot = Some(entry);
        }
    }
}

/// Back pointers of one node, one byte per characteristic: `0` for a leaf,
/// `2 * child + deleted` for an extension, `12 * left + right` for a join.
type PackedBack = [u8; TreeReducedChar::COUNT];

fn pack(back: TreeBack) -> u8 {
    match back {
        TreeBack::Leaf => 0,
        TreeBack::Extend { child, deleted } => 2 * child + u8::from(deleted),
        TreeBack::Join { left, right } => left * TreeReducedChar::COUNT as u8 + right,
    }
}

fn unpack(node: NeatNode, b: u8) -> TreeBack {
    match node {
        NeatNode::Leaf { .. } => TreeBack::Leaf,
        NeatNode::Extend { .. } => TreeBack::Extend { child: b / 2, deleted: b % 2 == 1 },
        NeatNode::Join { .. } => TreeBack::Join { left: b / TreeReducedChar::COUNT as u8, right: b % TreeReducedChar::COUNT as u8 },
    }
}

/// Result of the dynamic programme. The decomposition is evaluated with a
/// stack, so only the packed back pointers of every node and the tables of
/// the component tops are kept; [`TreeDp::run_traced`] additionally keeps
/// every table for inspection.
#[derive(Clone, Debug)]
pub struct TreeDp {
    back: Vec<PackedBack>,
    tops: Vec<(NodeId, TreeDpTable)>,
    traced: Option<Vec<TreeDpTable>>,
}

impl TreeDp {
    /// Runs the programme keeping only what witness reconstruction needs.
    pub fn run(d: &NeatTreeDecomposition) -> Self {
        Self::evaluate(d, false)
    }

    /// Runs the programme and keeps the table of every node.
    pub fn run_traced(d: &NeatTreeDecomposition) -> Self {
        Self::evaluate(d, true)
    }

    fn evaluate(d: &NeatTreeDecomposition, trace: bool) -> Self {
        let mut back: Vec<PackedBack> = Vec::with_capacity(d.nodes.len());
        let mut traced = trace.then(|| Vec::with_capacity(d.nodes.len()));
        let mut stack: Vec<TreeDpTable> = Vec::new();
        for node in &d.nodes {
            let mut t = TreeDpTable::default();
            match *node {
                NeatNode::Leaf { .. } => t.offer(TreeReducedChar::leaf(), TreeEntry { size: 0, back: TreeBack::Leaf }),
                NeatNode::Extend { .. } => {
                    let src = stack.pop().expect("post-order: the child term is on top");
                    // The kept-root transition is offered first, so it wins ties.
                    for (c, size) in src.entries() {
                        let back = TreeBack::Extend { child: c.index() as u8, deleted: false };
                        t.offer(c.extend_keep(), TreeEntry { size, back });
                    }
                    for (c, size) in src.entries() {
                        let back = TreeBack::Extend { child: c.index() as u8, deleted: true };
                        t.offer(c.extend_delete(), TreeEntry { size: size + 1, back });
                    }
                }
                NeatNode::Join { .. } => {
                    let r = stack.pop().expect("post-order: right term on top");
                    let l = stack.pop().expect("post-order: left term below");
                    for (a, sa) in l.entries() {
                        for (b, sb) in r.entries() {
                            let back = TreeBack::Join { left: a.index() as u8, right: b.index() as u8 };
                            t.offer(a.join(b), TreeEntry { size: sa + sb, back });
                        }
                    }
                }
            }
            back.push(t.0.map(|e| e.map_or(0, |e| pack(e.back))));
            if let Some(all) = traced.as_mut() {
                all.push(t);
            }
            stack.push(t);
        }
        debug_assert_eq!(stack.len(), d.tops.len());
        let tops = d.tops.iter().copied().zip(stack).collect();
        TreeDp { back, tops, traced }
    }

    /// Table of node `id`.
    ///
    /// # Panics
    /// If the programme was not run with [`TreeDp::run_traced`] and `id` is not a component top.
    pub fn table(&self, id: NodeId) -> &TreeDpTable {
        match &self.traced {
            Some(all) => &all[id.index()],
            None => self.top_table(id),
        }
    }

    fn top_table(&self, top: NodeId) -> &TreeDpTable {
        &self.tops.iter().find(|(t, _)| *t == top).expect("tables of component tops are kept").1
    }

    /// Best deletion set for the tree generated by `top`: its size, the
    /// characteristic it came from, and whether the root itself is deleted.
    /// Ties prefer keeping the root, then the lower characteristic index.
    pub fn finalize(&self, top: NodeId) -> (u32, TreeReducedChar, bool) {
        let mut best: Option<(u32, TreeReducedChar, bool)> = None;
        let mut consider = |size: u32, c: TreeReducedChar, deleted: bool| {
            if best.is_none_or(|(s, _, _)| size < s) {
                best = Some((size, c, deleted));
            }
        };
        let t = self.top_table(top);
        for (c, size) in t.entries() {
            if c.accepts_with_root() {
                consider(size, c, false);
            }
        }
        for (c, size) in t.entries() {
            if c.accepts_without_root() {
                consider(size + 1, c, true);
            }
        }
        best.expect("the whole vertex set is always a solution")
    }

    /// Rebuilds the deletion set stored at entry `c` of node `id`.
    pub fn witness(&self, d: &NeatTreeDecomposition, id: NodeId, c: TreeReducedChar, out: &mut Vec<Vertex>) {
        let mut stack = vec![(id, c)];
        while let Some((x, c)) = stack.pop() {
            let node = d.node(x);
            match (node, unpack(node, self.back[x.index()][c.index()])) {
                (NeatNode::Leaf { .. }, TreeBack::Leaf) => {}
                (NeatNode::Extend { child, .. }, TreeBack::Extend { child: ci, deleted }) => {
                    if deleted {
                        out.push(d.node(child).root());
                    }
                    stack.push((child, TreeReducedChar::from_index(ci as usize)));
                }
                (NeatNode::Join { left, right, .. }, TreeBack::Join { left: li, right: ri }) => {
                    stack.push((left, TreeReducedChar::from_index(li as usize)));
                    stack.push((right, TreeReducedChar::from_index(ri as usize)));
                }
                _ => unreachable!("back pointer kind matches node kind"),
            }
        }
    }
}

/// Solves MU-VC on a forest in linear time. The optimum of a forest is the
/// sum over its components.
pub fn solve_muvc_tree(g: &Graph) -> Result<Solution, TreeError> {
    let d = build_neat_forest(g)?;
    let dp = TreeDp::run(&d);
    let mut witness = Vec::new();
    let mut opt = 0usize;
    for &top in d.tops() {
        let (size, c, deleted) = dp.finalize(top);
        opt += size as usize;
        if deleted {
            witness.push(d.node(top).root());
        }
        dp.witness(&d, top, c, &mut witness);
    }
    Ok(Solution { opt, witness: VertexSet::from(witness) })
}

/// The exact characteristic `(a0, a1, b0, b1)` of a deletion set avoiding the root.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TreeFullChar {
    pub alpha0: u32,
    pub alpha1: u32,
    pub beta0: Uniq,
    pub beta1: Uniq,
}

impl TreeFullChar {
    pub fn leaf() -> Self {
        TreeFullChar { alpha0: 0, alpha1: 0, beta0: Uniq::One, beta1: Uniq::One }
    }

    pub fn join(self, o: Self) -> Self {
        TreeFullChar {
            alpha0: self.alpha0 + o.alpha0,
            alpha1: self.alpha1 + o.alpha1,
            beta0: self.beta0.times(o.beta0),
            beta1: self.beta1.times(o.beta1),
        }
    }

    pub fn extend_keep(self) -> Self {
        let with_child = self.alpha1 + 1;
        TreeFullChar {
            alpha0: with_child,
            alpha1: self.alpha0.min(with_child),
            beta0: self.beta1,
            beta1: match self.alpha0.cmp(&with_child) {
                std::cmp::Ordering::Less => self.beta0,
                std::cmp::Ordering::Greater => self.beta1,
                std::cmp::Ordering::Equal => Uniq::Many,
            },
        }
    }

    pub fn extend_delete(self) -> Self {
        TreeFullChar { alpha0: self.alpha1, alpha1: self.alpha1, beta0: self.beta1, beta1: self.beta1 }
    }

    /// The reduced characteristic this full characteristic maps to.
    pub fn reduce(self) -> TreeReducedChar {
        TreeReducedChar::new((self.alpha0 - self.alpha1).min(2) as u8, self.beta0, self.beta1)
    }

    pub fn accepts_with_root(self) -> bool {
        (self.alpha0 < self.alpha1 + 1 && self.beta0 == Uniq::One) || (self.alpha1 + 1 < self.alpha0 && self.beta1 == Uniq::One)
    }
}

/// Tables of the full-characteristic programme, one per node.
pub fn tree_dp_full(d: &NeatTreeDecomposition) -> Vec<BTreeMap<TreeFullChar, u32>> {
    let mut tables: Vec<BTreeMap<TreeFullChar, u32>> = Vec::with_capacity(d.nodes.len());
    let offer = |t: &mut BTreeMap<TreeFullChar, u32>, c, s| {
        let e = t.entry(c).or_insert(s);
        *e = (*e).min(s);
    };
    for node in &d.nodes {
        let mut t = BTreeMap::new();
        match *node {
            NeatNode::Leaf { .. } => offer(&mut t, TreeFullChar::leaf(), 0),
            NeatNode::Extend { child, .. } => {
                for (&c, &s) in &tables[child.index()] {
                    offer(&mut t, c.extend_keep(), s);
                    offer(&mut t, c.extend_delete(), s + 1);
                }
            }
            NeatNode::Join { left, right, .. } => {
                for (&a, &sa) in &tables[left.index()] {
                    for (&b, &sb) in &tables[right.index()] {
                        offer(&mut t, a.join(b), sa + sb);
                    }
                }
            }
        }
        tables.push(t);
    }
    tables
}

/// MU-VC optimum of a forest computed with full characteristics (polynomial, not linear).
pub fn solve_muvc_tree_full(g: &Graph) -> Result<usize, TreeError> {
    let d = build_neat_forest(g)?;
    let tables = tree_dp_full(&d);
    Ok(d
        .tops()
        .iter()
        .map(|top| {
            tables[top.index()]
                .iter()
                .flat_map(|(c, &s)| {
                    let keep = c.accepts_with_root().then_some(s);
                    let del = (c.beta1 == Uniq::One).then_some(s + 1);
                    keep.into_iter().chain(del)
                })
                .min()
                .expect("the whole vertex set is always a solution") as usize
        })
        .sum())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::nine_vertex_tree;

    fn single(table: &TreeDpTable) -> Vec<(TreeReducedChar, u32)> {
        table.entries().collect()
    }

    #[test]
    fn twelve_distinct_characteristics() {
        let all: std::collections::HashSet<_> = TreeReducedChar::all().collect();
        assert_eq!(all.len(), 12);
        for c in TreeReducedChar::all() {
            assert_eq!(TreeReducedChar::from_index(c.index()), c);
        }
    }

    #[test]
    fn extend_of_a_single_edge() {
        let g = Graph::path(2);
        let d = build_neat_decomposition(&g, 0).unwrap();
        let dp = TreeDp::run_traced(&d);
        let top = d.tops()[0];
        assert_eq!(
            single(dp.table(top)),
            vec![(TreeReducedChar::new(0, Uniq::One, Uniq::One), 1), (TreeReducedChar::new(1, Uniq::One, Uniq::One), 0)]
        );
    }

    #[test]
    fn join_of_a_cherry() {
        // K_{1,2} rooted at the centre.
        let g = Graph::new(3, [(0, 1), (0, 2)]).unwrap();
        let d = build_neat_decomposition(&g, 0).unwrap();
        assert!(matches!(d.node(d.tops()[0]), NeatNode::Join { .. }));
        let dp = TreeDp::run(&d);
        assert_eq!(dp.table(d.tops()[0]).get(TreeReducedChar::new(2, Uniq::One, Uniq::One)).map(|e| e.size), Some(0));
    }

    #[test]
    fn path_of_three_keeps_the_middle_unique() {
        let g = Graph::path(3);
        let d = build_neat_decomposition(&g, 0).unwrap();
        let dp = TreeDp::run(&d);
        let t = dp.table(d.tops()[0]);
        assert_eq!(t.get(TreeReducedChar::new(0, Uniq::One, Uniq::Many)).map(|e| e.size), Some(0));
    }

    #[test]
    fn nine_vertex_tree_optimum() {
        let s = solve_muvc_tree(&nine_vertex_tree()).unwrap();
        assert_eq!(s.opt, 2);
        assert!(s.verify(&nine_vertex_tree()).is_some());
        assert_eq!(solve_muvc_tree_full(&nine_vertex_tree()).unwrap(), 2);
    }

    #[test]
    fn decomposition_errors() {
        assert_eq!(build_neat_decomposition(&Graph::cycle(3), 0), Err(TreeError::NotATree));
        assert_eq!(build_neat_forest(&Graph::cycle(4)), Err(TreeError::NotAForest));
        assert_eq!(build_neat_decomposition(&Graph::path(2), 5), Err(TreeError::RootOutOfRange { root: 5, n: 2 }));
    }

    #[test]
    fn forests_and_trivial_graphs() {
        assert_eq!(solve_muvc_tree(&Graph::empty(0)).unwrap().opt, 0);
        assert_eq!(solve_muvc_tree(&Graph::empty(3)).unwrap().opt, 0);
        // Two disjoint edges: each needs one deletion.
        let g = Graph::new(4, [(0, 1), (2, 3)]).unwrap();
        let s = solve_muvc_tree(&g).unwrap();
        assert_eq!(s.opt, 2);
        assert!(s.verify(&g).is_some());
    }

    #[test]
    fn evaluation_reproduces_the_tree() {
        let g = nine_vertex_tree();
        let d = build_neat_decomposition(&g, 0).unwrap();
        assert_eq!(d.edges(), g.edges().collect::<Vec<_>>());
        assert_eq!(d.vertices(d.tops()[0]), (0..9).collect::<Vec<_>>());
    }
}
