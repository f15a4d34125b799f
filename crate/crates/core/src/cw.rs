//! MU-VC over clique-width expressions.
//!
//! Expressions are built from labelled single vertices `(v <label> <name>)`,
//! disjoint unions `(union A B)`, edge insertions `(eta i j A)` joining every
//! vertex labelled `i` to every vertex labelled `j`, and relabellings
//! `(rho i j A)` turning label `i` into `j`.
//!
//! For a deletion set `S` and a set of labels `I`, a vertex cover *extends*
//! `I` when it contains every vertex whose label is in `I` (labels without
//! vertices are trivially contained). The characteristic of `S` records, for
//! every `I`, the size `alpha(I)` of the smallest cover of `H - S` extending
//! `I` and whether it is unique (`beta(I)`).
//!
//! The exact programme ranges over all characteristics (polynomial for a
//! fixed number of labels). The parameterized programme first computes the
//! characteristic of the empty deletion set and then keeps only
//! characteristics whose differences to it lie in `[0, k]`.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt;

use indexmap::IndexMap;
use thiserror::Error;

use crate::graph::{Graph, Vertex, VertexSet};
use crate::uniq::Uniq;
use crate::Solution;

/// Largest number of distinct labels the subset-indexed tables support.
pub const MAX_LABELS: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CwError {
    #[error("line {line}: unknown constructor {name:?}")]
    UnknownConstructor { line: usize, name: String },
    #[error("line {line}: operation needs two different labels, got {label} twice")]
    SameLabels { line: usize, label: u32 },
    #[error("line {line}: vertex name {name:?} used twice")]
    DuplicateName { line: usize, name: String },
    #[error("line {line}: {message}")]
    Malformed { line: usize, message: String },
    #[error("expression uses {0} labels, more than the supported {MAX_LABELS}")]
    TooManyLabels(usize),
    #[error("the graph is not a tree")]
    NotATree,
    #[error("invalid cotree: {0}")]
    InvalidCotree(String),
    #[error("the expression does not describe the given graph")]
    GraphMismatch,
}

/// One constructor of a clique-width expression; children are arena indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CwNode {
    Vertex { label: u32, name: String },
    Union(usize, usize),
    Eta { i: u32, j: u32, child: usize },
    Rho { from: u32, to: u32, child: usize },
}

/// A clique-width expression stored in post-order (children before parents,
/// left subtrees before right ones); the last node is the root.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CwExpression {
    nodes: Vec<CwNode>,
}

/// A graph produced by evaluating an expression.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabeledGraph {
    pub graph: Graph,
    /// Final label of each vertex.
    pub labels: Vec<u32>,
    /// Name of each vertex.
    pub names: Vec<String>,
}

impl CwExpression {
    /// Re-emits the subexpression rooted at `root` of an arbitrary arena in post-order.
    fn from_arena(arena: &[CwNode], root: usize) -> Self {
        let mut nodes = Vec::with_capacity(arena.len());
        let mut new_id = vec![usize::MAX; arena.len()];
        // (node, children done?)
        let mut stack = vec![(root, false)];
        while let Some((x, done)) = stack.pop() {
            if done {
                let node = match &arena[x] {
                    CwNode::Vertex { label, name } => CwNode::Vertex { label: *label, name: name.clone() },
                    CwNode::Union(a, b) => CwNode::Union(new_id[*a], new_id[*b]),
                    CwNode::Eta { i, j, child } => CwNode::Eta { i: *i, j: *j, child: new_id[*child] },
                    CwNode::Rho { from, to, child } => CwNode::Rho { from: *from, to: *to, child: new_id[*child] },
                };
                nodes.push(node);
                new_id[x] = nodes.len() - 1;
                continue;
            }
            stack.push((x, true));
            match &arena[x] {
                CwNode::Vertex { .. } => {}
                CwNode::Union(a, b) => {
                    stack.push((*b, false));
                    stack.push((*a, false));
                }
                CwNode::Eta { child, .. } | CwNode::Rho { child, .. } => stack.push((*child, false)),
            }
        }
        CwExpression { nodes }
    }

    pub fn nodes(&self) -> &[CwNode] {
        &self.nodes
    }

    pub fn root(&self) -> usize {
        self.nodes.len() - 1
    }

    /// Distinct labels used anywhere, sorted.
    pub fn labels(&self) -> Vec<u32> {
        let mut l: Vec<u32> = self
            .nodes
            .iter()
            .flat_map(|x| match x {
                CwNode::Vertex { label, .. } => vec![*label],
                CwNode::Union(..) => vec![],
                CwNode::Eta { i, j, .. } => vec![*i, *j],
                CwNode::Rho { from, to, .. } => vec![*from, *to],
            })
            .collect();
        l.sort_unstable();
        l.dedup();
        l
    }

    /// Number of distinct labels.
    pub fn width(&self) -> usize {
        self.labels().len()
    }

    /// Vertex names in order of appearance.
    pub fn names(&self) -> Vec<&str> {
        self.nodes
            .iter()
            .filter_map(|x| match x {
                CwNode::Vertex { name, .. } => Some(name.as_str()),
                _ => None,
            })
            .collect()
    }

    /// Graph index of the `k`-th vertex in order of appearance. When the names
    /// are exactly `1..=n`, vertex named `t` gets index `t - 1`; otherwise the
    /// appearance order is used.
    pub fn vertex_indices(&self) -> Vec<Vertex> {
        let names = self.names();
        let n = names.len();
        let numeric: Option<Vec<usize>> = names.iter().map(|s| s.parse::<usize>().ok().filter(|&t| t >= 1 && t <= n)).collect();
        if let Some(ids) = numeric {
            let distinct: HashSet<_> = ids.iter().collect();
            if distinct.len() == n {
                return ids.into_iter().map(|t| t - 1).collect();
            }
        }
        (0..n).collect()
    }

    /// For every node, the range of appearance positions of its vertices.
    fn ranges(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = Vec::with_capacity(self.nodes.len());
        let mut next = 0;
        for node in &self.nodes {
            let r = match node {
                CwNode::Vertex { .. } => {
                    next += 1;
                    (next - 1, next)
                }
                CwNode::Union(a, b) => (out[*a].0, out[*b].1),
                CwNode::Eta { child, .. } | CwNode::Rho { child, .. } => out[*child],
            };
            out.push(r);
        }
        out
    }

    /// Evaluates the expression.
    pub fn eval(&self) -> LabeledGraph {
        let index = self.vertex_indices();
        let n = index.len();
        let ranges = self.ranges();
        let mut label = vec![0u32; n];
        let mut names = vec![String::new(); n];
        let mut edges: HashSet<(Vertex, Vertex)> = HashSet::new();
        let mut pos = 0;
        for (x, node) in self.nodes.iter().enumerate() {
            match node {
                CwNode::Vertex { label: l, name } => {
                    label[pos] = *l;
                    names[index[pos]] = name.clone();
                    pos += 1;
                }
                CwNode::Union(..) => {}
                CwNode::Eta { i, j, .. } => {
                    let (lo, hi) = ranges[x];
                    for a in lo..hi {
                        for b in lo..hi {
                            if label[a] == *i && label[b] == *j {
                                let (u, v) = (index[a], index[b]);
                                edges.insert((u.min(v), u.max(v)));
                            }
                        }
                    }
                }
                CwNode::Rho { from, to, .. } => {
                    let (lo, hi) = ranges[x];
                    for l in &mut label[lo..hi] {
                        if *l == *from {
                            *l = *to;
                        }
                    }
                }
            }
        }
        let mut edges: Vec<_> = edges.into_iter().collect();
        edges.sort_unstable();
        let mut labels = vec![0u32; n];
        for (p, &v) in index.iter().enumerate() {
            labels[v] = label[p];
        }
        LabeledGraph { graph: Graph::new(n, edges).expect("evaluation yields a simple graph"), labels, names }
    }
}

impl fmt::Display for CwExpression {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", write_expr(self))
    }
}

/// Serializes an expression as nested s-expressions.
pub fn write_expr(e: &CwExpression) -> String {
    let mut text: Vec<String> = Vec::with_capacity(e.nodes.len());
    for node in &e.nodes {
        let s = match node {
            CwNode::Vertex { label, name } => format!("(v {label} {name})"),
            CwNode::Union(a, b) => format!("(union {} {})", std::mem::take(&mut text[*a]), std::mem::take(&mut text[*b])),
            CwNode::Eta { i, j, child } => format!("(eta {i} {j} {})", std::mem::take(&mut text[*child])),
            CwNode::Rho { from, to, child } => format!("(rho {from} {to} {})", std::mem::take(&mut text[*child])),
        };
        text.push(s);
    }
    text.pop().unwrap_or_default()
}

#[derive(Debug)]
enum Token<'a> {
    Open,
    Close,
    Atom(&'a str),
}

/// Parses an expression. Lines starting with `#` are comments.
pub fn parse_expr(text: &str) -> Result<CwExpression, CwError> {
    let mut tokens: Vec<(usize, Token)> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let t = raw.trim_start();
        if t.starts_with('#') {
            continue;
        }
        let mut rest = raw;
        while !rest.is_empty() {
            let c = rest.chars().next().expect("non-empty");
            if c.is_whitespace() {
                rest = &rest[c.len_utf8()..];
            } else if c == '(' {
                tokens.push((line, Token::Open));
                rest = &rest[1..];
            } else if c == ')' {
                tokens.push((line, Token::Close));
                rest = &rest[1..];
            } else {
                let end = rest.find(|ch: char| ch.is_whitespace() || ch == '(' || ch == ')').unwrap_or(rest.len());
                tokens.push((line, Token::Atom(&rest[..end])));
                rest = &rest[end..];
            }
        }
    }
    let last_line = text.lines().count().max(1);
    let malformed = |line, message: &str| CwError::Malformed { line, message: message.to_string() };

    // Each frame: constructor name, its line, atoms, child node ids.
    struct Frame<'a> {
        line: usize,
        name: &'a str,
        atoms: Vec<&'a str>,
        kids: Vec<usize>,
    }
    let mut arena: Vec<CwNode> = Vec::new();
    let mut stack: Vec<Frame> = Vec::new();
    let mut root: Option<usize> = None;
    let mut names: HashSet<String> = HashSet::new();
    let mut it = tokens.into_iter().peekable();
    while let Some((line, tok)) = it.next() {
        match tok {
            Token::Open => {
                if root.is_some() {
                    return Err(malformed(line, "trailing input after the expression"));
                }
                let name = match it.next() {
                    Some((_, Token::Atom(a))) => a,
                    _ => return Err(malformed(line, "expected a constructor name after '('")),
                };
                if !matches!(name, "v" | "union" | "eta" | "rho") {
                    return Err(CwError::UnknownConstructor { line, name: name.to_string() });
                }
                stack.push(Frame { line, name, atoms: Vec::new(), kids: Vec::new() });
            }
            Token::Atom(a) => match stack.last_mut() {
                Some(f) => {
                    if !f.kids.is_empty() {
                        return Err(malformed(line, "arguments must precede subexpressions"));
                    }
                    f.atoms.push(a);
                }
                None => return Err(malformed(line, "expected '('")),
            },
            Token::Close => {
                let f = stack.pop().ok_or_else(|| malformed(line, "unbalanced ')'"))?;
                let label = |s: &str| -> Result<u32, CwError> {
                    s.parse::<u32>().ok().filter(|&l| l >= 1).ok_or_else(|| malformed(f.line, "labels are positive integers"))
                };
                let node = match (f.name, f.atoms.len(), f.kids.len()) {
                    ("v", 2, 0) => {
                        let name = f.atoms[1].to_string();
                        if !names.insert(name.clone()) {
                            return Err(CwError::DuplicateName { line: f.line, name });
                        }
                        CwNode::Vertex { label: label(f.atoms[0])?, name }
                    }
                    ("union", 0, 2) => CwNode::Union(f.kids[0], f.kids[1]),
                    ("eta", 2, 1) | ("rho", 2, 1) => {
                        let (i, j) = (label(f.atoms[0])?, label(f.atoms[1])?);
                        if i == j {
                            return Err(CwError::SameLabels { line: f.line, label: i });
                        }
                        if f.name == "eta" {
                            CwNode::Eta { i, j, child: f.kids[0] }
                        } else {
                            CwNode::Rho { from: i, to: j, child: f.kids[0] }
                        }
                    }
                    (name, _, _) => return Err(malformed(f.line, &format!("wrong arity for {name}"))),
                };
                arena.push(node);
                let id = arena.len() - 1;
                match stack.last_mut() {
                    Some(parent) => parent.kids.push(id),
                    None => root = Some(id),
                }
            }
        }
    }
    if !stack.is_empty() {
        return Err(malformed(last_line, "unbalanced '('"));
    }
    let root = root.ok_or_else(|| malformed(last_line, "empty expression"))?;
    Ok(CwExpression::from_arena(&arena, root))
}

/// A cotree: leaves are vertices, internal nodes are disjoint unions or joins
/// (complete connections between children) with at least two children each.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Cotree {
    Leaf(Vertex),
    Union(Vec<Cotree>),
    Join(Vec<Cotree>),
}

impl Cotree {
    /// Leaves in left-to-right order.
    pub fn leaves(&self) -> Vec<Vertex> {
        let mut out = Vec::new();
        let mut stack = vec![self];
        while let Some(t) = stack.pop() {
            match t {
                Cotree::Leaf(v) => out.push(*v),
                Cotree::Union(c) | Cotree::Join(c) => stack.extend(c.iter().rev()),
            }
        }
        out
    }

    /// Checks that leaves are exactly `0..n` and inner nodes have two or more children.
    pub fn validate(&self) -> Result<usize, CwError> {
        let mut stack = vec![self];
        while let Some(t) = stack.pop() {
            if let Cotree::Union(c) | Cotree::Join(c) = t {
                if c.len() < 2 {
                    return Err(CwError::InvalidCotree("inner node with fewer than two children".into()));
                }
                stack.extend(c.iter());
            }
        }
        let mut leaves = self.leaves();
        leaves.sort_unstable();
        let n = leaves.len();
        if leaves != (0..n).collect::<Vec<_>>() {
            return Err(CwError::InvalidCotree("leaves must be the vertices 0..n, each once".into()));
        }
        Ok(n)
    }

    /// The cograph described by the cotree.
    pub fn graph(&self) -> Result<Graph, CwError> {
        let n = self.validate()?;
        let mut edges = Vec::new();
        let mut stack = vec![self];
        while let Some(t) = stack.pop() {
            match t {
                Cotree::Leaf(_) => {}
                Cotree::Union(c) => stack.extend(c.iter()),
                Cotree::Join(c) => {
                    let parts: Vec<Vec<Vertex>> = c.iter().map(Cotree::leaves).collect();
                    for a in 0..parts.len() {
                        for b in a + 1..parts.len() {
                            for &u in &parts[a] {
                                for &v in &parts[b] {
                                    edges.push((u, v));
                                }
                            }
                        }
                    }
                    stack.extend(c.iter());
                }
            }
        }
        Ok(Graph::new(n, edges).expect("cotree edges are simple"))
    }
}

/// Arena helper used by the builders.
#[derive(Default)]
struct Builder {
    arena: Vec<CwNode>,
}

impl Builder {
    fn add(&mut self, node: CwNode) -> usize {
        self.arena.push(node);
        self.arena.len() - 1
    }
    fn vertex(&mut self, label: u32, v: Vertex) -> usize {
        self.add(CwNode::Vertex { label, name: (v + 1).to_string() })
    }
    fn union(&mut self, a: usize, b: usize) -> usize {
        self.add(CwNode::Union(a, b))
    }
    fn eta(&mut self, i: u32, j: u32, child: usize) -> usize {
        self.add(CwNode::Eta { i, j, child })
    }
    fn rho(&mut self, from: u32, to: u32, child: usize) -> usize {
        self.add(CwNode::Rho { from, to, child })
    }
    fn finish(self, root: usize) -> CwExpression {
        CwExpression::from_arena(&self.arena, root)
    }
}

/// Expression of width at most three for the path `0 - 1 - ... - (n-1)`
/// (width two for `n = 2`). Vertex names are the 1-based ids.
pub fn build_path(n: usize) -> Option<CwExpression> {
    if n == 0 {
        return None;
    }
    let mut b = Builder::default();
    // Label 2 marks the current end of the path, label 3 the finished interior.
    let mut acc = b.vertex(2, 0);
    for v in 1..n {
        let x = b.vertex(1, v);
        let u = b.union(acc, x);
        acc = b.eta(1, 2, u);
        if v + 1 < n {
            let r = b.rho(2, 3, acc);
            acc = b.rho(1, 2, r);
        }
    }
    Some(b.finish(acc))
}

/// Expression of width at most three for a tree, rooted at vertex 0.
/// Within a finished subtree the root has label 1 and all other vertices label 2.
pub fn build_tree(g: &Graph) -> Result<CwExpression, CwError> {
    if !g.is_tree() {
        return Err(CwError::NotATree);
    }
    let n = g.n();
    let mut parent = vec![usize::MAX; n];
    let mut order = Vec::with_capacity(n);
    let mut seen = vec![false; n];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(v) = stack.pop() {
        order.push(v);
        for &u in g.neighbors(v).iter().rev() {
            if !seen[u] {
                seen[u] = true;
                parent[u] = v;
                stack.push(u);
            }
        }
    }
    let mut b = Builder::default();
    let mut expr = vec![usize::MAX; n];
    for &v in order.iter().rev() {
        let mut acc = b.vertex(1, v);
        let mut has_child = false;
        for &c in g.neighbors(v) {
            if parent[c] == v {
                let moved = b.rho(1, 3, expr[c]);
                acc = b.union(acc, moved);
                has_child = true;
            }
        }
        if has_child {
            let joined = b.eta(1, 3, acc);
            acc = b.rho(3, 2, joined);
        }
        expr[v] = acc;
    }
    Ok(b.finish(expr[0]))
}

/// Expression of width at most two for the cograph of a cotree.
/// Every finished subexpression has all vertices on label 1.
pub fn build_cograph(t: &Cotree) -> Result<CwExpression, CwError> {
    t.validate()?;
    let mut b = Builder::default();
    // Post-order over the cotree with an explicit stack.
    enum Step<'a> {
        Enter(&'a Cotree),
        Exit(&'a Cotree),
    }
    let mut stack = vec![Step::Enter(t)];
    let mut results: Vec<usize> = Vec::new();
    while let Some(step) = stack.pop() {
        match step {
            Step::Enter(node) => match node {
                Cotree::Leaf(v) => results.push(b.vertex(1, *v)),
                Cotree::Union(c) | Cotree::Join(c) => {
                    stack.push(Step::Exit(node));
                    stack.extend(c.iter().rev().map(Step::Enter));
                }
            },
            Step::Exit(node) => {
                let (k, join) = match node {
                    Cotree::Union(c) => (c.len(), false),
                    Cotree::Join(c) => (c.len(), true),
                    Cotree::Leaf(_) => unreachable!(),
                };
                let parts = results.split_off(results.len() - k);
                let mut acc = parts[0];
                for &p in &parts[1..] {
                    if join {
                        let moved = b.rho(1, 2, p);
                        let u = b.union(acc, moved);
                        let e = b.eta(1, 2, u);
                        acc = b.rho(2, 1, e);
                    } else {
                        acc = b.union(acc, p);
                    }
                }
                results.push(acc);
            }
        }
    }
    Ok(b.finish(results.pop().expect("one result")))
}

/// Characteristic of a deletion set: `alpha` and `beta` indexed by label sets
/// (bit `t` stands for the `t`-th smallest label of the expression).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CwChar {
    pub alpha: Box<[u32]>,
    pub beta: Box<[Uniq]>,
}

impl fmt::Debug for CwChar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let b: Vec<u8> = self.beta.iter().map(|u| u.value()).collect();
        write!(f, "alpha={:?} beta={:?}", self.alpha, b)
    }
}

impl CwChar {
    fn out_singleton(d: usize, bit: usize) -> Self {
        let alpha = (0..1usize << d).map(|s| (s >> bit & 1) as u32).collect();
        CwChar { alpha, beta: vec![Uniq::One; 1 << d].into() }
    }

    fn in_singleton(d: usize) -> Self {
        CwChar { alpha: vec![0; 1 << d].into(), beta: vec![Uniq::One; 1 << d].into() }
    }

    /// Characteristic after adding all edges between labels `i` and `j` (bits).
    pub fn eta(&self, i: usize, j: usize) -> Self {
        let (bi, bj) = (1usize << i, 1usize << j);
        let mut alpha = self.alpha.to_vec();
        let mut beta = self.beta.to_vec();
        for s in 0..alpha.len() {
            if s & (bi | bj) != 0 {
                continue;
            }
            let (a, b, ab) = (self.alpha[s | bi], self.alpha[s | bj], self.alpha[s | bi | bj]);
            alpha[s] = a.min(b);
            beta[s] = match a.cmp(&b) {
                std::cmp::Ordering::Less => self.beta[s | bi],
                std::cmp::Ordering::Greater => self.beta[s | bj],
                // Both sides optimal: unique only if each side is unique and
                // the two optimal covers coincide (one cover extends both labels).
                std::cmp::Ordering::Equal => {
                    if self.beta[s | bi] == Uniq::One && self.beta[s | bj] == Uniq::One && ab == a {
                        Uniq::One
                    } else {
                        Uniq::Many
                    }
                }
            };
        }
        CwChar { alpha: alpha.into(), beta: beta.into() }
    }

    /// Characteristic after relabelling `from` to `to` (bits).
    pub fn rho(&self, from: usize, to: usize) -> Self {
        let (bf, bt) = (1usize << from, 1usize << to);
        let pick = |s: usize| if s & bt != 0 { s | bf } else { s & !bf };
        CwChar {
            alpha: (0..self.alpha.len()).map(|s| self.alpha[pick(s)]).collect(),
            beta: (0..self.beta.len()).map(|s| self.beta[pick(s)]).collect(),
        }
    }

    /// Characteristic of the union of deletion sets in a disjoint union.
    pub fn union(&self, other: &Self) -> Self {
        CwChar {
            alpha: self.alpha.iter().zip(other.alpha.iter()).map(|(a, b)| a + b).collect(),
            beta: self.beta.iter().zip(other.beta.iter()).map(|(a, b)| a.times(*b)).collect(),
        }
    }
}

/// How an entry was produced; indices point into child tables.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CwBack {
    Vertex { deleted: bool },
    Unary(usize),
    Union(usize, usize),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CwEntry {
    pub size: u32,
    pub back: CwBack,
}

pub type CwTable = IndexMap<CwChar, CwEntry>;

/// Outcome of the parameterized programme.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FptOutcome {
    Solved(Solution),
    /// No deletion set of size at most `k` exists.
    InfeasibleWithinK { k: usize },
}

/// Label bit positions and the data shared by both programmes.
struct Prepared<'e> {
    expr: &'e CwExpression,
    d: usize,
    bit: HashMap<u32, usize>,
    index: Vec<Vertex>,
}

impl<'e> Prepared<'e> {
    fn new(expr: &'e CwExpression) -> Result<Self, CwError> {
        let labels = expr.labels();
        if labels.len() > MAX_LABELS {
            return Err(CwError::TooManyLabels(labels.len()));
        }
        let bit = labels.iter().enumerate().map(|(t, &l)| (l, t)).collect();
        Ok(Prepared { expr, d: labels.len(), bit, index: expr.vertex_indices() })
    }
}

/// Tables of the characteristic programme, one per expression node.
pub struct CwDp {
    tables: Vec<CwTable>,
    /// Characteristic of the empty deletion set at every node.
    empty: Vec<CwChar>,
    k: Option<u32>,
}

impl CwDp {
    fn run(p: &Prepared<'_>, k: Option<u32>) -> Self {
        let nodes = &p.expr.nodes;
        // Characteristic of the empty set, node by node.
        let mut empty: Vec<CwChar> = Vec::with_capacity(nodes.len());
        for node in nodes {
            let c = match node {
                CwNode::Vertex { label, .. } => CwChar::out_singleton(p.d, p.bit[label]),
                CwNode::Union(a, b) => empty[*a].union(&empty[*b]),
                CwNode::Eta { i, j, child } => empty[*child].eta(p.bit[i], p.bit[j]),
                CwNode::Rho { from, to, child } => empty[*child].rho(p.bit[from], p.bit[to]),
            };
            empty.push(c);
        }
        let mut tables: Vec<CwTable> = Vec::with_capacity(nodes.len());
        for (x, node) in nodes.iter().enumerate() {
            let mut t = CwTable::new();
            let mut offer = |c: CwChar, e: CwEntry| {
                if let Some(k) = k {
                    let ok = e.size <= k
                        && c.alpha.iter().zip(empty[x].alpha.iter()).all(|(&a, &a0)| a <= a0 && a0 - a <= k);
                    if !ok {
                        return;
                    }
                }
                match t.get_mut(&c) {
                    Some(old) if old.size <= e.size => {}
                    Some(old) => *old = e,
                    None => {
                        t.insert(c, e);
                    }
                }
            };
            match node {
                CwNode::Vertex { label, .. } => {
                    offer(CwChar::out_singleton(p.d, p.bit[label]), CwEntry { size: 0, back: CwBack::Vertex { deleted: false } });
                    offer(CwChar::in_singleton(p.d), CwEntry { size: 1, back: CwBack::Vertex { deleted: true } });
                }
                CwNode::Union(a, b) => {
                    for (i, (ca, ea)) in tables[*a].iter().enumerate() {
                        for (j, (cb, eb)) in tables[*b].iter().enumerate() {
                            offer(ca.union(cb), CwEntry { size: ea.size + eb.size, back: CwBack::Union(i, j) });
                        }
                    }
                }
                CwNode::Eta { i, j, child } => {
                    let (bi, bj) = (p.bit[i], p.bit[j]);
                    for (s, (c, e)) in tables[*child].iter().enumerate() {
                        offer(c.eta(bi, bj), CwEntry { size: e.size, back: CwBack::Unary(s) });
                    }
                }
                CwNode::Rho { from, to, child } => {
                    let (bf, bt) = (p.bit[from], p.bit[to]);
                    for (s, (c, e)) in tables[*child].iter().enumerate() {
                        offer(c.rho(bf, bt), CwEntry { size: e.size, back: CwBack::Unary(s) });
                    }
                }
            }
            tables.push(t);
        }
        CwDp { tables, empty, k }
    }

    pub fn tables(&self) -> &[CwTable] {
        &self.tables
    }

    /// Characteristic of the empty deletion set at each node.
    pub fn empty_characteristics(&self) -> &[CwChar] {
        &self.empty
    }

    /// The parameter of the restricted run, if any.
    pub fn k(&self) -> Option<u32> {
        self.k
    }

    /// Difference vector `alpha_empty(I) - alpha(I)` of a stored characteristic at node `x`.
    pub fn differences(&self, x: usize, c: &CwChar) -> Vec<i64> {
        self.empty[x].alpha.iter().zip(c.alpha.iter()).map(|(&a0, &a)| a0 as i64 - a as i64).collect()
    }

    fn finalize(&self) -> Option<(u32, usize)> {
        self.tables
            .last()
            .expect("non-empty expression")
            .iter()
            .enumerate()
            .filter(|(_, (c, _))| c.beta[0] == Uniq::One)
            .map(|(i, (_, e))| (e.size, i))
            .min()
    }

    fn witness(&self, p: &Prepared<'_>, entry: usize) -> VertexSet {
        let nodes = &p.expr.nodes;
        // Appearance position of every vertex node.
        let mut position = vec![usize::MAX; nodes.len()];
        let mut next = 0;
        for (x, node) in nodes.iter().enumerate() {
            if let CwNode::Vertex { .. } = node {
                position[x] = next;
                next += 1;
            }
        }
        let mut out = Vec::new();
        let mut stack = vec![(nodes.len() - 1, entry)];
        while let Some((x, i)) = stack.pop() {
            let (_, e) = self.tables[x].get_index(i).expect("valid back pointer");
            match (e.back, &nodes[x]) {
                (CwBack::Vertex { deleted }, _) => {
                    if deleted {
                        out.push(p.index[position[x]]);
                    }
                }
                (CwBack::Unary(j), CwNode::Eta { child, .. } | CwNode::Rho { child, .. }) => stack.push((*child, j)),
                (CwBack::Union(a, b), CwNode::Union(l, r)) => {
                    stack.push((*l, a));
                    stack.push((*r, b));
                }
                _ => unreachable!("back pointer kind matches node kind"),
            }
        }
        VertexSet::from(out)
    }
}

/// Runs the exact programme and returns all tables (for inspection and tests).
pub fn cw_dp(expr: &CwExpression) -> Result<CwDp, CwError> {
    Ok(CwDp::run(&Prepared::new(expr)?, None))
}

/// Runs the programme restricted to differences and sizes at most `k`.
pub fn cw_dp_fpt(expr: &CwExpression, k: usize) -> Result<CwDp, CwError> {
    Ok(CwDp::run(&Prepared::new(expr)?, Some(k.min(u32::MAX as usize) as u32)))
}

/// Solves MU-VC on the graph described by `expr`. Witness indices follow
/// [`CwExpression::vertex_indices`].
pub fn solve_muvc_cw(expr: &CwExpression) -> Result<Solution, CwError> {
    let p = Prepared::new(expr)?;
    let dp = CwDp::run(&p, None);
    let (size, i) = dp.finalize().expect("deleting every vertex always works");
    Ok(Solution { opt: size as usize, witness: dp.witness(&p, i) })
}

/// Parameterized variant: the optimum if it is at most `k`.
pub fn solve_muvc_cw_fpt(expr: &CwExpression, k: usize) -> Result<FptOutcome, CwError> {
    let p = Prepared::new(expr)?;
    let dp = CwDp::run(&p, Some(k.min(u32::MAX as usize) as u32));
    Ok(match dp.finalize() {
        Some((size, i)) => FptOutcome::Solved(Solution { opt: size as usize, witness: dp.witness(&p, i) }),
        None => FptOutcome::InfeasibleWithinK { k },
    })
}

/// Checks that `expr` evaluates to exactly `g` (under the vertex index rule).
pub fn check_describes(expr: &CwExpression, g: &Graph) -> Result<(), CwError> {
    if expr.eval().graph == *g {
        Ok(())
    } else {
        Err(CwError::GraphMismatch)
    }
}

/// Exhaustive characteristic of `S` in the labelled graph: for each label set,
/// the smallest cover of `G - S` extending it and whether it is unique.
/// Exponential; used to test the transition rules.
pub fn brute_force_characteristic(lg: &LabeledGraph, label_order: &[u32], s: &VertexSet) -> CwChar {
    let n = lg.graph.n();
    let d = label_order.len();
    let mut best: BTreeMap<usize, (u32, u32)> = BTreeMap::new();
    let edges: Vec<_> = lg.graph.edges().filter(|&(u, v)| !s.contains(u) && !s.contains(v)).collect();
    let rest: Vec<Vertex> = (0..n).filter(|&v| !s.contains(v)).collect();
    for mask in 0u64..(1u64 << rest.len()) {
        let inside = |v: Vertex| rest.iter().position(|&r| r == v).is_some_and(|i| mask >> i & 1 == 1);
        if !edges.iter().all(|&(u, v)| inside(u) || inside(v)) {
            continue;
        }
        let size = mask.count_ones();
        for set in 0..1usize << d {
            let extends = rest.iter().all(|&v| {
                let t = label_order.iter().position(|&l| l == lg.labels[v]).expect("known label");
                set >> t & 1 == 0 || inside(v)
            });
            if extends {
                let e = best.entry(set).or_insert((size, 0));
                if size < e.0 {
                    *e = (size, 1);
                } else if size == e.0 {
                    e.1 += 1;
                }
            }
        }
    }
    CwChar {
        alpha: (0..1usize << d).map(|set| best[&set].0).collect(),
        beta: (0..1usize << d).map(|set| if best[&set].1 == 1 { Uniq::One } else { Uniq::Many }).collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_print_round_trip() {
        let text = "(eta 1 2 (union (v 1 a) (v 2 b)))";
        let e = parse_expr(text).unwrap();
        assert_eq!(write_expr(&e), text);
        let lg = e.eval();
        assert_eq!(lg.graph, Graph::path(2));
        assert_eq!(lg.names, vec!["a", "b"]);
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(parse_expr("(foo 1 a)"), Err(CwError::UnknownConstructor { .. })));
        assert!(matches!(parse_expr("(eta 1 1 (v 1 a))"), Err(CwError::SameLabels { label: 1, .. })));
        assert!(matches!(parse_expr("(union (v 1 a) (v 2 a))"), Err(CwError::DuplicateName { .. })));
        assert!(matches!(parse_expr("(union (v 1 a)"), Err(CwError::Malformed { .. })));
        assert!(matches!(parse_expr("(union (v 1 a))"), Err(CwError::Malformed { .. })));
    }

    #[test]
    fn builders_describe_their_graphs() {
        for n in 1..12 {
            let e = build_path(n).unwrap();
            assert_eq!(e.eval().graph, Graph::path(n));
            assert!(e.width() <= 3);
        }
        assert_eq!(build_path(2).unwrap().width(), 2);
        let g = crate::generators::nine_vertex_tree();
        let e = build_tree(&g).unwrap();
        assert_eq!(e.eval().graph, g);
        assert!(e.width() <= 3);
        assert_eq!(build_tree(&Graph::cycle(3)), Err(CwError::NotATree));
        let k2 = Cotree::Join(vec![Cotree::Leaf(0), Cotree::Leaf(1)]);
        assert_eq!(build_cograph(&k2).unwrap().eval().graph, Graph::path(2));
        assert!(build_cograph(&Cotree::Join(vec![Cotree::Leaf(0)])).is_err());
    }

    #[test]
    fn edge_insertion_on_a_single_edge() {
        let e = parse_expr("(eta 1 2 (union (v 1 a) (v 2 b)))").unwrap();
        let dp = cw_dp(&e).unwrap();
        let root = dp.tables().last().unwrap();
        let (c, _) = root.iter().find(|(_, e)| e.size == 0).unwrap();
        assert_eq!(c.alpha[0], 1);
        assert_eq!(c.beta[0], Uniq::Many);
        assert_eq!(solve_muvc_cw(&e).unwrap().opt, 1);
    }

    #[test]
    fn clique_and_fpt_mode() {
        let k3 = Cotree::Join(vec![Cotree::Leaf(0), Cotree::Leaf(1), Cotree::Leaf(2)]);
        let e = build_cograph(&k3).unwrap();
        assert_eq!(solve_muvc_cw(&e).unwrap().opt, 2);
        assert!(matches!(solve_muvc_cw_fpt(&e, 2).unwrap(), FptOutcome::Solved(s) if s.opt == 2));
        assert_eq!(solve_muvc_cw_fpt(&e, 1).unwrap(), FptOutcome::InfeasibleWithinK { k: 1 });
    }

    #[test]
    fn joint_type_alone_does_not_decide_uniqueness() {
        // Labels 1,2,3,4: a(1)-e(4) and b(2)-c(3), then join labels 1 and 2.
        // With S empty the covers {a,b} and {a,c} of the result both have size two.
        let e = parse_expr("(eta 1 2 (union (eta 1 4 (union (v 1 a) (v 4 e))) (eta 2 3 (union (v 2 b) (v 3 c)))))").unwrap();
        let dp = cw_dp(&e).unwrap();
        let empty = &dp.empty_characteristics()[e.root()];
        assert_eq!(empty.alpha[0], 2);
        assert_eq!(empty.beta[0], Uniq::Many);
        let lg = e.eval();
        assert_eq!(&brute_force_characteristic(&lg, &e.labels(), &VertexSet::new()), empty);
    }
}
