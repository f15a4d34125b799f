//! MU-VC over tree decompositions.
//!
//! A tree decomposition is first turned into a *nice* one (leaf nodes with
//! empty bags, introduce / forget nodes changing the bag by one vertex, and
//! binary joins over equal bags, with an empty root bag). Node `x` stands for
//! the terminal graph `G_x`: the subgraph induced by all vertices seen below
//! `x`, minus the edges inside the bag `B_x`. An edge is therefore accounted
//! for exactly once, at the forget node of whichever endpoint is forgotten first.
//!
//! For a deletion set `S` avoiding the bag and a subset `D` of the bag, let
//! `a(D)` be the smallest number of non-bag vertices of a cover of `G_x - S`
//! whose intersection with the bag is exactly `D`, and `b(D)` its multiplicity
//! (one or many). The table key is `delta(D) = a({}) - a(D)` together with
//! `b`, indexed by subsets of the bag in the order of the sorted bag.

use std::fmt;

use indexmap::IndexMap;
use thiserror::Error;

use crate::graph::{Graph, Vertex, VertexSet};
use crate::uniq::Uniq;
use crate::Solution;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TdError {
    #[error("vertex {vertex} in bag {bag} is out of range for {n} vertices")]
    VertexOutOfRange { bag: usize, vertex: Vertex, n: usize },
    #[error("tree edge {0}-{1} references a missing bag")]
    BagOutOfRange(usize, usize),
    #[error("the bags do not form a tree")]
    NotATree,
    #[error("decomposition is for {td} vertices but the graph has {graph}")]
    VertexCountMismatch { td: usize, graph: usize },
    #[error("vertex {0} is in no bag")]
    VertexUncovered(Vertex),
    #[error("edge {0}-{1} is in no bag")]
    EdgeUncovered(Vertex, Vertex),
    #[error("the bags containing vertex {0} are not connected")]
    ConnectivityViolated(Vertex),
    #[error("bag of {size} vertices exceeds the supported maximum of {max}")]
    BagTooLarge { size: usize, max: usize },
}

/// Largest bag the subset-indexed tables support.
pub const MAX_BAG: usize = 16;

/// A tree decomposition: bags of vertices plus the edges of the bag tree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TreeDecomposition {
    n: usize,
    bags: Vec<Vec<Vertex>>,
    edges: Vec<(usize, usize)>,
}

impl TreeDecomposition {
    /// Checks that the bag tree is a tree and that bag contents are in range.
    /// Bags are sorted and deduplicated.
    pub fn new(n: usize, bags: Vec<Vec<Vertex>>, edges: Vec<(usize, usize)>) -> Result<Self, TdError> {
        let mut bags = bags;
        for (i, bag) in bags.iter_mut().enumerate() {
            bag.sort_unstable();
            bag.dedup();
            if let Some(&v) = bag.iter().find(|&&v| v >= n) {
                return Err(TdError::VertexOutOfRange { bag: i, vertex: v, n });
            }
        }
        for &(a, b) in &edges {
            if a >= bags.len() || b >= bags.len() {
                return Err(TdError::BagOutOfRange(a, b));
            }
        }
        if !bags.is_empty() {
            let tree = Graph::new(bags.len(), edges.iter().copied()).map_err(|_| TdError::NotATree)?;
            if !tree.is_tree() {
                return Err(TdError::NotATree);
            }
        } else if !edges.is_empty() {
            return Err(TdError::NotATree);
        }
        Ok(TreeDecomposition { n, bags, edges })
    }

    /// Edge-bag decomposition of a forest: a bag `{v, parent(v)}` per non-root
    /// vertex and a bag `{r}` per component root, the root bags chained together.
    pub fn for_forest(g: &Graph) -> Option<Self> {
        if !g.is_forest() {
            return None;
        }
        let n = g.n();
        let mut bag_of = vec![usize::MAX; n];
        let mut bags = Vec::new();
        let mut edges = Vec::new();
        let mut prev_root_bag: Option<usize> = None;
        for comp in g.components() {
            let root = comp[0];
            bag_of[root] = bags.len();
            bags.push(vec![root]);
            if let Some(p) = prev_root_bag {
                edges.push((p, bag_of[root]));
            }
            prev_root_bag = Some(bag_of[root]);
            let mut stack = vec![root];
            while let Some(v) = stack.pop() {
                for &u in g.neighbors(v) {
                    if bag_of[u] == usize::MAX {
                        bag_of[u] = bags.len();
                        bags.push(vec![u.min(v), u.max(v)]);
                        edges.push((bag_of[v], bag_of[u]));
                        stack.push(u);
                    }
                }
            }
        }
        Some(TreeDecomposition::new(n, bags, edges).expect("edge bags of a forest form a decomposition"))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn bags(&self) -> &[Vec<Vertex>] {
        &self.bags
    }

    pub fn tree_edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Largest bag size minus one (zero when there are no bags).
    pub fn width(&self) -> usize {
        self.bags.iter().map(Vec::len).max().unwrap_or(1).saturating_sub(1)
    }

    /// Checks vertex coverage, edge coverage and connectivity against `g`.
    pub fn validate(&self, g: &Graph) -> Result<(), TdError> {
        if g.n() != self.n {
            return Err(TdError::VertexCountMismatch { td: self.n, graph: g.n() });
        }
        let mut holders: Vec<Vec<usize>> = vec![Vec::new(); self.n];
        for (i, bag) in self.bags.iter().enumerate() {
            for &v in bag {
                holders[v].push(i);
            }
        }
        if let Some(v) = (0..self.n).find(|&v| holders[v].is_empty()) {
            return Err(TdError::VertexUncovered(v));
        }
        for (u, v) in g.edges() {
            if !holders[u].iter().any(|&b| self.bags[b].binary_search(&v).is_ok()) {
                return Err(TdError::EdgeUncovered(u, v));
            }
        }
        // Bags holding v induce a connected subtree iff #holders - #edges inside = 1.
        let mut inside = vec![0usize; self.n];
        for &(a, b) in &self.edges {
            for &v in &self.bags[a] {
                if self.bags[b].binary_search(&v).is_ok() {
                    inside[v] += 1;
                }
            }
        }
        if let Some(v) = (0..self.n).find(|&v| holders[v].len() != inside[v] + 1) {
            return Err(TdError::ConnectivityViolated(v));
        }
        Ok(())
    }
}

/// A `.td` parse failure at a 1-based line number.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {message}")]
pub struct TdParseError {
    pub line: usize,
    pub message: String,
}

/// Parses the PACE `.td` format: `s td <bags> <width+1> <n>`, then
/// `b <id> <v>...` lines and bag-tree edges `<a> <b>`, all 1-based.
/// Lines starting with `c` or `#` are comments.
pub fn parse_td(text: &str) -> Result<TreeDecomposition, TdParseError> {
    let err = |line: usize, message: String| TdParseError { line, message };
    let mut header: Option<(usize, usize)> = None;
    let mut bags: Vec<Option<Vec<Vertex>>> = Vec::new();
    let mut edges = Vec::new();
    let mut last = 0;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        last = line;
        let t = raw.trim();
        if t.is_empty() || t.starts_with('c') || t.starts_with('#') {
            continue;
        }
        let toks: Vec<&str> = t.split_whitespace().collect();
        let nums = |toks: &[&str]| -> Result<Vec<usize>, TdParseError> {
            toks.iter().map(|x| x.parse::<usize>().map_err(|_| err(line, format!("expected a number, found {x:?}")))).collect()
        };
        match (header, toks[0]) {
            (None, "s") => {
                if toks.len() != 5 || toks[1] != "td" {
                    return Err(err(line, "malformed header, expected \"s td <bags> <width+1> <n>\"".into()));
                }
                let v = nums(&toks[2..])?;
                header = Some((v[0], v[2]));
                bags = vec![None; v[0]];
            }
            (None, _) => return Err(err(line, "missing \"s td\" header".into())),
            (Some((nb, n)), "b") => {
                let v = nums(&toks[1..])?;
                let id = *v.first().ok_or_else(|| err(line, "bag line without id".into()))?;
                if id == 0 || id > nb {
                    return Err(err(line, format!("bag id {id} out of range 1..={nb}")));
                }
                if bags[id - 1].is_some() {
                    return Err(err(line, format!("bag {id} defined twice")));
                }
                let mut bag = Vec::new();
                for &x in &v[1..] {
                    if x == 0 || x > n {
                        return Err(err(line, format!("vertex {x} out of range 1..={n}")));
                    }
                    bag.push(x - 1);
                }
                bags[id - 1] = Some(bag);
            }
            (Some((nb, _)), _) => {
                let v = nums(&toks)?;
                if v.len() != 2 || v.iter().any(|&x| x == 0 || x > nb) {
                    return Err(err(line, "malformed tree edge, expected two bag ids".into()));
                }
                edges.push((v[0] - 1, v[1] - 1));
            }
        }
    }
    let (_, n) = header.ok_or_else(|| err(last.max(1), "missing \"s td\" header".into()))?;
    let bags: Vec<Vec<Vertex>> = bags
        .into_iter()
        .enumerate()
        .map(|(i, b)| b.ok_or_else(|| err(last, format!("bag {} never defined", i + 1))))
        .collect::<Result<_, _>>()?;
    TreeDecomposition::new(n, bags, edges).map_err(|e| err(last, e.to_string()))
}

/// Serializes a decomposition in `.td` format.
pub fn write_td(td: &TreeDecomposition) -> String {
    let mut out = format!("s td {} {} {}\n", td.bags.len(), td.width() + 1, td.n);
    for (i, bag) in td.bags.iter().enumerate() {
        out.push_str(&format!("b {}", i + 1));
        for &v in bag {
            out.push_str(&format!(" {}", v + 1));
        }
        out.push('\n');
    }
    for &(a, b) in &td.edges {
        out.push_str(&format!("{} {}\n", a + 1, b + 1));
    }
    out
}

/// Kind of a nice decomposition node.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NiceKind {
    Leaf,
    Introduce(Vertex),
    Forget(Vertex),
    Join,
}

/// A node of a nice tree decomposition. `bag` is sorted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NiceNode {
    pub kind: NiceKind,
    pub bag: Vec<Vertex>,
    pub children: Vec<usize>,
}

/// A nice tree decomposition; children precede parents and the last node is the root.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NiceTreeDecomposition {
    nodes: Vec<NiceNode>,
}

impl NiceTreeDecomposition {
    pub fn nodes(&self) -> &[NiceNode] {
        &self.nodes
    }

    pub fn root(&self) -> usize {
        self.nodes.len() - 1
    }

    pub fn width(&self) -> usize {
        self.nodes.iter().map(|x| x.bag.len()).max().unwrap_or(1).saturating_sub(1)
    }

    fn push(&mut self, kind: NiceKind, bag: Vec<Vertex>, children: Vec<usize>) -> usize {
        self.nodes.push(NiceNode { kind, bag, children });
        self.nodes.len() - 1
    }

    /// Extends the chain ending at `from` until its bag equals `target`:
    /// forgets first, then introductions, both in increasing vertex order.
    fn transition(&mut self, mut from: usize, target: &[Vertex]) -> usize {
        let current = self.nodes[from].bag.clone();
        for &v in current.iter().filter(|v| target.binary_search(v).is_err()) {
            let bag: Vec<Vertex> = self.nodes[from].bag.iter().copied().filter(|&w| w != v).collect();
            from = self.push(NiceKind::Forget(v), bag, vec![from]);
        }
        for &v in target.iter().filter(|v| current.binary_search(v).is_err()) {
            let mut bag = self.nodes[from].bag.clone();
            let pos = bag.binary_search(&v).unwrap_err();
            bag.insert(pos, v);
            from = self.push(NiceKind::Introduce(v), bag, vec![from]);
        }
        from
    }

    /// The edges of `g` accounted for at each node: for a forget node of `v`,
    /// the edges from `v` to the remaining bag.
    pub fn materialized_edges(&self, g: &Graph, x: usize) -> Vec<(Vertex, Vertex)> {
        match self.nodes[x].kind {
            NiceKind::Forget(v) => self.nodes[x]
                .bag
                .iter()
                .copied()
                .filter(|&w| g.has_edge(v, w))
                .map(|w| (v.min(w), v.max(w)))
                .collect(),
            _ => Vec::new(),
        }
    }

    /// Vertices appearing in bags of the subtree of `x`, sorted.
    pub fn subtree_vertices(&self, x: usize) -> Vec<Vertex> {
        let mut out = Vec::new();
        let mut stack = vec![x];
        while let Some(y) = stack.pop() {
            out.extend(self.nodes[y].bag.iter().copied());
            stack.extend(self.nodes[y].children.iter().copied());
        }
        out.sort_unstable();
        out.dedup();
        out
    }
}

/// Converts a validated decomposition of `g` into a nice one rooted at bag 0.
pub fn make_nice(td: &TreeDecomposition, g: &Graph) -> Result<NiceTreeDecomposition, TdError> {
    td.validate(g)?;
    if let Some(bag) = td.bags.iter().find(|b| b.len() > MAX_BAG) {
        return Err(TdError::BagTooLarge { size: bag.len(), max: MAX_BAG });
    }
    let mut nice = NiceTreeDecomposition { nodes: Vec::new() };
    if td.bags.is_empty() {
        nice.push(NiceKind::Leaf, Vec::new(), Vec::new());
        return Ok(nice);
    }
    let k = td.bags.len();
    let mut adj = vec![Vec::new(); k];
    for &(a, b) in &td.edges {
        adj[a].push(b);
        adj[b].push(a);
    }
    // Iterative DFS from bag 0; reverse preorder visits children before parents.
    let mut order = Vec::with_capacity(k);
    let mut parent = vec![usize::MAX; k];
    let mut seen = vec![false; k];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(x) = stack.pop() {
        order.push(x);
        for &y in adj[x].iter().rev() {
            if !seen[y] {
                seen[y] = true;
                parent[y] = x;
                stack.push(y);
            }
        }
    }
    let mut top = vec![usize::MAX; k];
    for &x in order.iter().rev() {
        let bag = &td.bags[x];
        let mut acc: Option<usize> = None;
        let mut children: Vec<usize> = adj[x].iter().copied().filter(|&y| parent[y] == x).collect();
        children.sort_unstable();
        for y in children {
            let chain = nice.transition(top[y], bag);
            acc = Some(match acc {
                None => chain,
                Some(left) => nice.push(NiceKind::Join, bag.clone(), vec![left, chain]),
            });
        }
        top[x] = match acc {
            Some(id) => id,
            None => {
                let leaf = nice.push(NiceKind::Leaf, Vec::new(), Vec::new());
                nice.transition(leaf, bag)
            }
        };
    }
    let root_chain = nice.transition(top[0], &[]);
    debug_assert_eq!(root_chain, nice.root());
    Ok(nice)
}

/// Reduced characteristic at a node: `delta` and `beta` indexed by bag subsets.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TwReducedChar {
    pub delta: Box<[u32]>,
    pub beta: Box<[Uniq]>,
}

impl fmt::Debug for TwReducedChar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let b: Vec<u8> = self.beta.iter().map(|u| u.value()).collect();
        write!(f, "delta={:?} beta={:?}", self.delta, b)
    }
}

/// How an entry was produced; indices point into the child tables.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TwBack {
    Leaf,
    Introduce(usize),
    /// `deleted` when the forgotten vertex joined the deletion set.
    Forget { child: usize, deleted: bool },
    Join(usize, usize),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TwEntry {
    pub size: u32,
    pub back: TwBack,
}

/// Table of one node: smallest deletion set size per reduced characteristic.
pub type TwTable = IndexMap<TwReducedChar, TwEntry>;

/// Whether characteristics violating the degree bound are discarded.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TwMode {
    /// Keep every reachable characteristic.
    Exact,
    /// Discard characteristics with `delta(D) > max_degree * |D|`. Every
    /// reachable characteristic satisfies the bound, so this is lossless.
    DegreeTruncated { max_degree: u32 },
}

fn offer(t: &mut TwTable, c: TwReducedChar, e: TwEntry) {
    match t.get_mut(&c) {
        Some(old) if old.size <= e.size => {}
        Some(old) => *old = e,
        None => {
            t.insert(c, e);
        }
    }
}

/// Removes bit `p` from `mask`, shifting higher bits down.
fn drop_bit(mask: usize, p: usize) -> usize {
    (mask & ((1 << p) - 1)) | ((mask >> (p + 1)) << p)
}

/// Inserts a zero bit at position `p`, shifting higher bits up.
fn insert_bit(mask: usize, p: usize) -> usize {
    (mask & ((1 << p) - 1)) | ((mask >> p) << (p + 1))
}

fn within_degree_bound(c: &TwReducedChar, max_degree: u32) -> bool {
    c.delta.iter().enumerate().all(|(d, &x)| x <= max_degree * d.count_ones())
}

/// Dynamic programme over a nice decomposition of `g`.
pub struct TwDp {
    tables: Vec<TwTable>,
    max_degree: u32,
}

impl TwDp {
    pub fn run(nice: &NiceTreeDecomposition, g: &Graph, mode: TwMode) -> Self {
        let max_degree = g.max_degree() as u32;
        let mut tables: Vec<TwTable> = Vec::with_capacity(nice.nodes.len());
        for node in &nice.nodes {
            let mut t = TwTable::new();
            match node.kind {
                NiceKind::Leaf => {
                    let c = TwReducedChar { delta: vec![0].into(), beta: vec![Uniq::One].into() };
                    t.insert(c, TwEntry { size: 0, back: TwBack::Leaf });
                }
                NiceKind::Introduce(v) => {
                    let p = node.bag.binary_search(&v).expect("introduced vertex is in the bag");
                    let subsets = 1usize << node.bag.len();
                    for (i, (c, e)) in tables[node.children[0]].iter().enumerate() {
                        let delta = (0..subsets).map(|d| c.delta[drop_bit(d, p)]).collect();
                        let beta = (0..subsets).map(|d| c.beta[drop_bit(d, p)]).collect();
                        offer(&mut t, TwReducedChar { delta, beta }, TwEntry { size: e.size, back: TwBack::Introduce(i) });
                    }
                }
                NiceKind::Join => {
                    let (l, r) = (&tables[node.children[0]], &tables[node.children[1]]);
                    for (i, (a, ea)) in l.iter().enumerate() {
                        for (j, (b, eb)) in r.iter().enumerate() {
                            let delta = a.delta.iter().zip(b.delta.iter()).map(|(x, y)| x + y).collect();
                            let beta = a.beta.iter().zip(b.beta.iter()).map(|(x, y)| x.times(*y)).collect();
                            offer(&mut t, TwReducedChar { delta, beta }, TwEntry { size: ea.size + eb.size, back: TwBack::Join(i, j) });
                        }
                    }
                }
                NiceKind::Forget(v) => {
                    let child = &nice.nodes[node.children[0]];
                    let p = child.bag.binary_search(&v).expect("forgotten vertex is in the child bag");
                    let neighbours: usize = node
                        .bag
                        .iter()
                        .enumerate()
                        .filter(|&(_, &w)| g.has_edge(v, w))
                        .map(|(i, _)| 1usize << i)
                        .sum();
                    // Keep-first order makes the kept transition win ties.
                    for deleted in [false, true] {
                        for (i, (c, e)) in tables[node.children[0]].iter().enumerate() {
                            let key = if deleted { forget_delete(c, node.bag.len(), p) } else { forget_keep(c, node.bag.len(), p, neighbours) };
                            let size = e.size + deleted as u32;
                            offer(&mut t, key, TwEntry { size, back: TwBack::Forget { child: i, deleted } });
                        }
                    }
                }
            }
            if let TwMode::DegreeTruncated { max_degree } = mode {
                t.retain(|c, _| within_degree_bound(c, max_degree));
            } else {
                debug_assert!(t.keys().all(|c| within_degree_bound(c, max_degree)), "degree bound violated");
            }
            debug_assert!(t.keys().all(|c| c.delta[0] == 0), "delta of the empty subset must vanish");
            tables.push(t);
        }
        TwDp { tables, max_degree }
    }

    pub fn tables(&self) -> &[TwTable] {
        &self.tables
    }

    pub fn max_degree(&self) -> u32 {
        self.max_degree
    }

    /// Best entry at the root (empty bag): smallest size with a unique cover.
    pub fn finalize(&self) -> (u32, usize) {
        let root = self.tables.last().expect("at least one node");
        root.iter()
            .enumerate()
            .filter(|(_, (c, _))| c.beta[0] == Uniq::One)
            .map(|(i, (_, e))| (e.size, i))
            .min()
            .expect("deleting every vertex always works")
    }

    /// Deletion set stored at entry `index` of the root table.
    pub fn witness(&self, nice: &NiceTreeDecomposition, index: usize) -> VertexSet {
        let mut out = Vec::new();
        let mut stack = vec![(nice.root(), index)];
        while let Some((x, i)) = stack.pop() {
            let (_, e) = self.tables[x].get_index(i).expect("back pointers are valid");
            let node = &nice.nodes[x];
            match e.back {
                TwBack::Leaf => {}
                TwBack::Introduce(j) => stack.push((node.children[0], j)),
                TwBack::Forget { child, deleted } => {
                    if deleted {
                        if let NiceKind::Forget(v) = node.kind {
                            out.push(v);
                        }
                    }
                    stack.push((node.children[0], child));
                }
                TwBack::Join(a, b) => {
                    stack.push((node.children[0], a));
                    stack.push((node.children[1], b));
                }
            }
        }
        VertexSet::from(out)
    }
}

/// Forget transition when the forgotten vertex stays in the graph.
fn forget_keep(c: &TwReducedChar, bag_len: usize, p: usize, neighbours: usize) -> TwReducedChar {
    let subsets = 1usize << bag_len;
    let dv = c.delta[1 << p] as i64;
    let gamma: i64 = if neighbours == 0 && dv <= 1 { 0 } else { dv - 1 };
    let mut delta = Vec::with_capacity(subsets);
    let mut beta = Vec::with_capacity(subsets);
    for d in 0..subsets {
        let dy = insert_bit(d, p);
        let dp = dy | (1 << p);
        let (a, b) = (c.delta[dy] as i64, c.delta[dp] as i64);
        let covered = neighbours & !d == 0;
        let value = if covered && b <= a + 1 { a - gamma } else { b - gamma - 1 };
        debug_assert!(value >= 0, "negative delta after forget");
        delta.push(value as u32);
        beta.push(if covered && b < a + 1 {
            c.beta[dy]
        } else if !covered || b > a + 1 {
            c.beta[dp]
        } else {
            Uniq::Many
        });
    }
    TwReducedChar { delta: delta.into(), beta: beta.into() }
}

/// Forget transition when the forgotten vertex joins the deletion set.
fn forget_delete(c: &TwReducedChar, bag_len: usize, p: usize) -> TwReducedChar {
    let subsets = 1usize << bag_len;
    let dv = c.delta[1 << p];
    let delta = (0..subsets).map(|d| c.delta[insert_bit(d, p) | (1 << p)] - dv).collect();
    let beta = (0..subsets).map(|d| c.beta[insert_bit(d, p) | (1 << p)]).collect();
    TwReducedChar { delta, beta }
}

/// Solves MU-VC given a tree decomposition of `g`.
pub fn solve_muvc_tw(g: &Graph, td: &TreeDecomposition, mode: TwMode) -> Result<Solution, TdError> {
    let nice = make_nice(td, g)?;
    let dp = TwDp::run(&nice, g, mode);
    let (size, index) = dp.finalize();
    Ok(Solution { opt: size as usize, witness: dp.witness(&nice, index) })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::nine_vertex_tree;

    fn k2_nice() -> (Graph, NiceTreeDecomposition) {
        let g = Graph::path(2);
        let td = TreeDecomposition::new(2, vec![vec![0, 1]], vec![]).unwrap();
        (g.clone(), make_nice(&td, &g).unwrap())
    }

    #[test]
    fn forget_on_a_single_edge() {
        let (g, nice) = k2_nice();
        let dp = TwDp::run(&nice, &g, TwMode::Exact);
        // Nodes: leaf, introduce 0, introduce 1, forget 0, forget 1.
        assert_eq!(nice.nodes()[3].kind, NiceKind::Forget(0));
        let t = &dp.tables()[3];
        assert_eq!(t.len(), 2);
        let (c, e) = t.get_index(0).unwrap();
        assert_eq!((&*c.delta, e.size), (&[0u32, 1][..], 0));
        assert!(c.beta.iter().all(|&b| b == Uniq::One));
    }

    #[test]
    fn cycle_and_tree_optima() {
        let c4 = Graph::cycle(4);
        let td = TreeDecomposition::new(4, vec![vec![0, 1, 2], vec![0, 2, 3]], vec![(0, 1)]).unwrap();
        assert_eq!(solve_muvc_tw(&c4, &td, TwMode::Exact).unwrap().opt, 1);
        let g = nine_vertex_tree();
        let td = TreeDecomposition::for_forest(&g).unwrap();
        assert_eq!(td.width(), 1);
        let s = solve_muvc_tw(&g, &td, TwMode::Exact).unwrap();
        assert_eq!(s.opt, 2);
        assert!(s.verify(&g).is_some());
    }

    #[test]
    fn nice_form_is_well_shaped() {
        let g = nine_vertex_tree();
        let nice = make_nice(&TreeDecomposition::for_forest(&g).unwrap(), &g).unwrap();
        let nodes = nice.nodes();
        assert!(nodes[nice.root()].bag.is_empty());
        for x in nodes {
            match x.kind {
                NiceKind::Leaf => assert!(x.bag.is_empty() && x.children.is_empty()),
                NiceKind::Introduce(v) => {
                    let c = &nodes[x.children[0]].bag;
                    assert_eq!(c.len() + 1, x.bag.len());
                    assert!(!c.contains(&v) && x.bag.contains(&v));
                }
                NiceKind::Forget(v) => {
                    let c = &nodes[x.children[0]].bag;
                    assert_eq!(c.len(), x.bag.len() + 1);
                    assert!(c.contains(&v) && !x.bag.contains(&v));
                }
                NiceKind::Join => assert!(x.children.iter().all(|&c| nodes[c].bag == x.bag)),
            }
        }
        let mut edges: Vec<_> = (0..nodes.len()).flat_map(|x| nice.materialized_edges(&g, x)).collect();
        edges.sort_unstable();
        assert_eq!(edges, g.edges().collect::<Vec<_>>());
    }

    #[test]
    fn validation_errors() {
        let g = Graph::path(3);
        let td = TreeDecomposition::new(3, vec![vec![0, 1], vec![2]], vec![(0, 1)]).unwrap();
        assert_eq!(td.validate(&g), Err(TdError::EdgeUncovered(1, 2)));
        let td = TreeDecomposition::new(3, vec![vec![0, 1], vec![2], vec![1, 2]], vec![(0, 1), (1, 2)]).unwrap();
        assert_eq!(td.validate(&g), Err(TdError::ConnectivityViolated(1)));
        assert_eq!(
            TreeDecomposition::new(3, vec![vec![0], vec![1]], vec![]),
            Err(TdError::NotATree)
        );
    }

    #[test]
    fn td_text_round_trip() {
        let g = nine_vertex_tree();
        let td = TreeDecomposition::for_forest(&g).unwrap();
        assert_eq!(parse_td(&write_td(&td)).unwrap(), td);
        let e = parse_td("s td 1 2 2\nb 1 1 3\n").unwrap_err();
        assert_eq!(e.line, 2);
    }
}
