//! Gadget graphs built from typed 3-CNF formulas.
//!
//! Variables come in two types, `x` (chosen by the outer player) and `y`
//! (whose satisfying completion must be unique). Every clause becomes a
//! c-gadget (triangle `l1 l2 l3`, a hub `w` adjacent to the triangle and a
//! pendant `z` on the hub). Every variable becomes a cycle of coloured vertices
//! (four per occurrence, alternating red/blue starting with red); consecutive
//! cycle vertices share a connector `w` carrying a pendant `z`. An
//! `x` variable additionally gets the red/blue pair `u1, u4` spliced into the
//! cycle after its last coloured vertex, with the pendant paths `u1 - u2 - u3`
//! and `u4 - u5 - u6`.
//!
//! Clause-to-variable edges join literal vertex `l_t` of a clause to the inner
//! blue (positive literal) or inner red (negative literal) vertex of the
//! matching occurrence quadruple; then, for the three inner vertices
//! `a, b, c` of a clause, the cycle neighbours are cross-linked
//! `c-1 ~ a+1`, `a-1 ~ b+1` and `b-1 ~ c+1`.
//!
//! Formula text format:
//!
//! ```text
//! x 2
//! y 2
//! x1 x2 -y1
//! -x1 y1 y2
//! ```

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::graph::{Graph, Vertex};
use crate::rng::{seeded, Rng};

/// A variable: `X(i)` or `Y(i)`, 0-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    X(usize),
    Y(usize),
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Var::X(i) => write!(f, "x{}", i + 1),
            Var::Y(i) => write!(f, "y{}", i + 1),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Literal {
    pub var: Var,
    pub positive: bool,
}

impl fmt::Display for Literal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if !self.positive {
            write!(f, "-")?;
        }
        write!(f, "{}", self.var)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum FormulaError {
    #[error("line {line}: expected `x <count>` then `y <count>` before clauses")]
    MissingHeader { line: usize },
    #[error("line {line}: malformed count {text:?}")]
    MalformedCount { line: usize, text: String },
    #[error("line {line}: malformed literal {text:?}")]
    MalformedLiteral { line: usize, text: String },
    #[error("line {line}: a clause has exactly three literals, found {found}")]
    WrongClauseLength { line: usize, found: usize },
    #[error("clause {clause}: variable {var} out of range")]
    VariableOutOfRange { clause: usize, var: Var },
    #[error("clause {clause}: variable {var} appears twice")]
    RepeatedVariable { clause: usize, var: Var },
    #[error("variable {0} occurs in no clause")]
    UnusedVariable(Var),
}

/// A 3-CNF formula over `n1` variables of type x and `n2` of type y.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TypedFormula {
    n1: usize,
    n2: usize,
    clauses: Vec<[Literal; 3]>,
}

impl TypedFormula {
    /// Validates: variables in range, distinct within a clause, each occurring at least once.
    pub fn new(n1: usize, n2: usize, clauses: Vec<[Literal; 3]>) -> Result<Self, FormulaError> {
        let mut used_x = vec![false; n1];
        let mut used_y = vec![false; n2];
        for (c, clause) in clauses.iter().enumerate() {
            for (t, lit) in clause.iter().enumerate() {
                let slot = match lit.var {
                    Var::X(i) => used_x.get_mut(i),
                    Var::Y(i) => used_y.get_mut(i),
                };
                *slot.ok_or(FormulaError::VariableOutOfRange { clause: c + 1, var: lit.var })? = true;
                if clause[..t].iter().any(|o| o.var == lit.var) {
                    return Err(FormulaError::RepeatedVariable { clause: c + 1, var: lit.var });
                }
            }
        }
        if let Some(i) = used_x.iter().position(|u| !u) {
            return Err(FormulaError::UnusedVariable(Var::X(i)));
        }
        if let Some(i) = used_y.iter().position(|u| !u) {
            return Err(FormulaError::UnusedVariable(Var::Y(i)));
        }
        Ok(TypedFormula { n1, n2, clauses })
    }

    pub fn n1(&self) -> usize {
        self.n1
    }

    pub fn n2(&self) -> usize {
        self.n2
    }

    pub fn clauses(&self) -> &[[Literal; 3]] {
        &self.clauses
    }

    /// All variables: x-variables first, then y-variables.
    pub fn variables(&self) -> impl Iterator<Item = Var> {
        (0..self.n1).map(Var::X).chain((0..self.n2).map(Var::Y))
    }

    /// Occurrences `(clause, slot)` of `var`, in clause order.
    pub fn occurrences(&self, var: Var) -> Vec<(usize, usize)> {
        self.clauses
            .iter()
            .enumerate()
            .flat_map(|(c, cl)| cl.iter().enumerate().filter(move |(_, l)| l.var == var).map(move |(t, _)| (c, t)))
            .collect()
    }

    /// Whether every clause has exactly one true literal under the assignment.
    pub fn exactly_one_satisfied(&self, x: &[bool], y: &[bool]) -> bool {
        self.clauses.iter().all(|cl| {
            cl.iter()
                .filter(|l| {
                    let value = match l.var {
                        Var::X(i) => x[i],
                        Var::Y(i) => y[i],
                    };
                    value == l.positive
                })
                .count()
                == 1
        })
    }

    /// Exhaustively decides whether some assignment of the x-variables admits
    /// exactly one assignment of the y-variables satisfying every clause with
    /// exactly one true literal. Returns such an x-assignment.
    pub fn uq_one_in_three_witness(&self) -> Option<Vec<bool>> {
        assert!(self.n1 + self.n2 <= 30, "exhaustive check is limited to 30 variables");
        let bits = |mask: u64, len: usize| (0..len).map(|i| mask >> i & 1 == 1).collect::<Vec<_>>();
        (0..1u64 << self.n1).map(|xm| bits(xm, self.n1)).find(|x| {
            let mut count = 0;
            for ym in 0..1u64 << self.n2 {
                if self.exactly_one_satisfied(x, &bits(ym, self.n2)) {
                    count += 1;
                    if count > 1 {
                        return false;
                    }
                }
            }
            count == 1
        })
    }

    pub fn is_uq_one_in_three(&self) -> bool {
        self.uq_one_in_three_witness().is_some()
    }
}

impl fmt::Display for TypedFormula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "x {}", self.n1)?;
        writeln!(f, "y {}", self.n2)?;
        for cl in &self.clauses {
            writeln!(f, "{} {} {}", cl[0], cl[1], cl[2])?;
        }
        Ok(())
    }
}

impl FromStr for TypedFormula {
    type Err = FormulaError;

    fn from_str(text: &str) -> Result<Self, FormulaError> {
        let mut counts: Vec<usize> = Vec::new();
        let mut clauses = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let t = raw.trim();
            if t.is_empty() || t.starts_with('#') {
                continue;
            }
            let tokens: Vec<&str> = t.split_whitespace().collect();
            let header = ["x", "y"];
            if counts.len() < 2 {
                if tokens.len() != 2 || tokens[0] != header[counts.len()] {
                    return Err(FormulaError::MissingHeader { line });
                }
                let c = tokens[1]
                    .parse()
                    .map_err(|_| FormulaError::MalformedCount { line, text: tokens[1].to_string() })?;
                counts.push(c);
                continue;
            }
            if tokens.len() != 3 {
                return Err(FormulaError::WrongClauseLength { line, found: tokens.len() });
            }
            let lit = |s: &str| -> Result<Literal, FormulaError> {
                let bad = || FormulaError::MalformedLiteral { line, text: s.to_string() };
                let (positive, rest) = match s.strip_prefix('-') {
                    Some(r) => (false, r),
                    None => (true, s),
                };
                let (kind, num) = rest.split_at(rest.find(|c: char| c.is_ascii_digit()).ok_or_else(bad)?);
                let i: usize = num.parse().ok().filter(|&i| i >= 1).ok_or_else(bad)?;
                let var = match kind {
                    "x" => Var::X(i - 1),
                    "y" => Var::Y(i - 1),
                    _ => return Err(bad()),
                };
                Ok(Literal { var, positive })
            };
            clauses.push([lit(tokens[0])?, lit(tokens[1])?, lit(tokens[2])?]);
        }
        if counts.len() < 2 {
            return Err(FormulaError::MissingHeader { line: text.lines().count().max(1) });
        }
        TypedFormula::new(counts[0], counts[1], clauses)
    }
}

/// The role of a vertex in a gadget graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Role {
    /// Literal vertex `l_t` (1-based `t`) of clause `c` (0-based).
    ClauseLiteral { clause: usize, t: usize },
    ClauseHub { clause: usize },
    ClausePendant { clause: usize },
    /// Coloured cycle vertex at 1-based position `pos`; inner vertices are positions 2 and 3 of a quadruple.
    Colored { var: Var, pos: usize, red: bool, inner: bool },
    /// The spliced pair and pendant paths of an x-gadget: `u1 .. u6`.
    U { var: Var, k: usize },
    /// Connector between cycle vertices `t` and `t+1` (1-based, cyclic).
    Connector { var: Var, t: usize },
    ConnectorPendant { var: Var, t: usize },
}

impl fmt::Display for Role {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Role::ClauseLiteral { clause, t } => write!(f, "c{}.l{}", clause + 1, t),
            Role::ClauseHub { clause } => write!(f, "c{}.w", clause + 1),
            Role::ClausePendant { clause } => write!(f, "c{}.z", clause + 1),
            Role::Colored { var, pos, red, inner } => {
                write!(f, "{var}.{pos}.{}", if *red { "red" } else { "blue" })?;
                if *inner {
                    write!(f, ".inner")?;
                }
                Ok(())
            }
            Role::U { var, k } => write!(f, "{var}.u{k}"),
            Role::Connector { var, t } => write!(f, "{var}.w{t}"),
            Role::ConnectorPendant { var, t } => write!(f, "{var}.z{t}"),
        }
    }
}

/// A gadget graph with the role of every vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GadgetGraph {
    pub graph: Graph,
    pub roles: Vec<Role>,
    /// Cycle of each variable gadget (x-variables first), in cyclic order.
    pub cycles: Vec<Vec<Vertex>>,
}

impl GadgetGraph {
    /// Sidecar text: one `vertex-id tag` line per vertex (1-based ids).
    pub fn roles_text(&self) -> String {
        self.roles.iter().enumerate().map(|(v, r)| format!("{} {r}\n", v + 1)).collect()
    }

    pub fn find(&self, role: Role) -> Option<Vertex> {
        self.roles.iter().position(|&r| r == role)
    }
}

/// For every variable (x first, then y), the `(clause, slot)` pairs in the
/// order in which they take the quadruples of the variable's cycle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OccurrenceOrder(pub Vec<Vec<(usize, usize)>>);

impl OccurrenceOrder {
    /// Occurrences in clause order.
    pub fn clause_order(f: &TypedFormula) -> Self {
        OccurrenceOrder(f.variables().map(|v| f.occurrences(v)).collect())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum HardnessError {
    #[error("occurrence ordering does not list each occurrence of {0} exactly once")]
    BadOrdering(Var),
}

/// Builds the gadget graph with occurrences in clause order.
pub fn gen_hardness_instance(f: &TypedFormula) -> GadgetGraph {
    gen_hardness_instance_ordered(f, &OccurrenceOrder::clause_order(f)).expect("clause order is a valid ordering")
}

/// Builds the gadget graph with the given occurrence ordering.
pub fn gen_hardness_instance_ordered(f: &TypedFormula, order: &OccurrenceOrder) -> Result<GadgetGraph, HardnessError> {
    let vars: Vec<Var> = f.variables().collect();
    if order.0.len() != vars.len() {
        return Err(HardnessError::BadOrdering(vars.get(order.0.len()).copied().unwrap_or(Var::X(0))));
    }
    for (var, occ) in vars.iter().zip(&order.0) {
        let mut a = occ.clone();
        let mut b = f.occurrences(*var);
        a.sort_unstable();
        b.sort_unstable();
        if a != b {
            return Err(HardnessError::BadOrdering(*var));
        }
    }

    let mut roles: Vec<Role> = Vec::new();
    let mut edges: Vec<(Vertex, Vertex)> = Vec::new();
    let add = |roles: &mut Vec<Role>, r: Role| {
        roles.push(r);
        roles.len() - 1
    };

    // Clause gadgets.
    let mut literal_vertex = Vec::with_capacity(f.clauses.len());
    for c in 0..f.clauses.len() {
        let l: Vec<Vertex> = (1..=3).map(|t| add(&mut roles, Role::ClauseLiteral { clause: c, t })).collect();
        let w = add(&mut roles, Role::ClauseHub { clause: c });
        let z = add(&mut roles, Role::ClausePendant { clause: c });
        edges.extend([(l[0], l[1]), (l[1], l[2]), (l[0], l[2]), (l[0], w), (l[1], w), (l[2], w), (w, z)]);
        literal_vertex.push([l[0], l[1], l[2]]);
    }

    // Variable gadgets. `slot_inner[c][t]` = (cycle index, inner vertex position within cycle).
    let mut cycles: Vec<Vec<Vertex>> = Vec::with_capacity(vars.len());
    let mut inner_of: Vec<[Option<(usize, usize)>; 3]> = vec![[None; 3]; f.clauses.len()];
    for (gi, (&var, occ)) in vars.iter().zip(&order.0).enumerate() {
        let p = 4 * occ.len();
        let mut cycle: Vec<Vertex> = (1..=p)
            .map(|pos| {
                let red = pos % 2 == 1;
                let inner = matches!(pos % 4, 2 | 3);
                add(&mut roles, Role::Colored { var, pos, red, inner })
            })
            .collect();
        let mut tails = Vec::new();
        if let Var::X(_) = var {
            let u1 = add(&mut roles, Role::U { var, k: 1 });
            let u4 = add(&mut roles, Role::U { var, k: 4 });
            cycle.push(u1);
            cycle.push(u4);
            tails.push((u1, 2));
            tails.push((u4, 5));
        }
        let len = cycle.len();
        for t in 0..len {
            let (a, b) = (cycle[t], cycle[(t + 1) % len]);
            let w = add(&mut roles, Role::Connector { var, t: t + 1 });
            let z = add(&mut roles, Role::ConnectorPendant { var, t: t + 1 });
            edges.extend([(a, b), (a, w), (b, w), (w, z)]);
        }
        for (head, k) in tails {
            let mid = add(&mut roles, Role::U { var, k });
            let end = add(&mut roles, Role::U { var, k: k + 1 });
            edges.extend([(head, mid), (mid, end)]);
        }
        for (j, &(c, t)) in occ.iter().enumerate() {
            let positive = f.clauses[c][t].positive;
            // Blue inner is quadruple position 2, red inner is position 3 (1-based).
            let idx = 4 * j + if positive { 1 } else { 2 };
            inner_of[c][t] = Some((gi, idx));
        }
        cycles.push(cycle);
    }

    // First step: literal vertex to inner coloured vertex.
    for (c, lits) in literal_vertex.iter().enumerate() {
        for t in 0..3 {
            let (gi, idx) = inner_of[c][t].expect("every slot has an occurrence");
            edges.push((lits[t], cycles[gi][idx]));
        }
    }
    // Second step: cross-link cycle neighbours of the three inner vertices.
    for slots in &inner_of {
        let at = |t: usize, delta: isize| {
            let (gi, idx) = slots[t].expect("every slot has an occurrence");
            cycles[gi][(idx as isize + delta) as usize]
        };
        edges.push((at(2, -1), at(0, 1)));
        edges.push((at(0, -1), at(1, 1)));
        edges.push((at(1, -1), at(2, 1)));
    }

    let graph = Graph::new(roles.len(), edges).expect("gadget edges are simple");
    Ok(GadgetGraph { graph, roles, cycles })
}

/// Expected `(vertices, edges)` of the gadget graph for `f`.
pub fn expected_size(f: &TypedFormula) -> (usize, usize) {
    let m = f.clauses.len();
    let (mut n, mut e) = (5 * m, 7 * m + 3 * m + 3 * m);
    for var in f.variables() {
        let p = 4 * f.occurrences(var).len();
        match var {
            Var::X(_) => {
                n += 3 * (p + 2) + 4;
                e += 4 * (p + 2) + 4;
            }
            Var::Y(_) => {
                n += 3 * p;
                e += 4 * p;
            }
        }
    }
    (n, e)
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("gadget structure violated: {0}")]
pub struct StructureError(pub String);

/// Checks the local structure of a gadget graph built from `f`: sizes, the
/// degree bound of five, c-gadgets, alternating colours along variable cycles,
/// connectors with pendants, the pendant paths, and the clause edges.
pub fn check_structure(gg: &GadgetGraph, f: &TypedFormula) -> Result<(), StructureError> {
    let g = &gg.graph;
    let fail = |msg: String| Err(StructureError(msg));
    let (n, m) = expected_size(f);
    if g.n() != n || g.m() != m {
        return fail(format!("expected {n} vertices and {m} edges, found {} and {}", g.n(), g.m()));
    }
    if g.max_degree() > 5 {
        return fail(format!("maximum degree {} exceeds 5", g.max_degree()));
    }
    let find = |r: Role| gg.find(r).ok_or_else(|| StructureError(format!("missing vertex {r}")));
    for c in 0..f.clauses.len() {
        let l: Vec<Vertex> = (1..=3).map(|t| find(Role::ClauseLiteral { clause: c, t })).collect::<Result<_, _>>()?;
        let w = find(Role::ClauseHub { clause: c })?;
        let z = find(Role::ClausePendant { clause: c })?;
        let tri = g.has_edge(l[0], l[1]) && g.has_edge(l[1], l[2]) && g.has_edge(l[0], l[2]);
        if !tri || !l.iter().all(|&x| g.has_edge(x, w)) || g.degree(z) != 1 || !g.has_edge(w, z) || g.degree(w) != 4 {
            return fail(format!("clause gadget c{} malformed", c + 1));
        }
        for (t, &lv) in l.iter().enumerate() {
            let lit = f.clauses[c][t];
            let outside: Vec<Vertex> = g.neighbors(lv).iter().copied().filter(|&u| u != w && !l.contains(&u)).collect();
            let ok = outside.len() == 1
                && matches!(gg.roles[outside[0]], Role::Colored { var, red, inner: true, .. } if var == lit.var && red != lit.positive);
            if !ok {
                return fail(format!("literal vertex c{}.l{} is not joined to the right inner vertex", c + 1, t + 1));
            }
        }
    }
    for (cycle, var) in gg.cycles.iter().zip(f.variables()) {
        let len = cycle.len();
        let red = |v: Vertex| match gg.roles[v] {
            Role::Colored { red, .. } => Some(red),
            Role::U { k: 1, .. } => Some(true),
            Role::U { k: 4, .. } => Some(false),
            _ => None,
        };
        for t in 0..len {
            let (a, b) = (cycle[t], cycle[(t + 1) % len]);
            match (red(a), red(b)) {
                (Some(x), Some(y)) if x != y => {}
                _ => return fail(format!("colours do not alternate on the {var} cycle")),
            }
            let w = find(Role::Connector { var, t: t + 1 })?;
            let z = find(Role::ConnectorPendant { var, t: t + 1 })?;
            if !g.has_edge(a, b) || !g.has_edge(a, w) || !g.has_edge(b, w) || !g.has_edge(w, z) || g.degree(w) != 3 || g.degree(z) != 1 {
                return fail(format!("connector {var}.w{} malformed", t + 1));
            }
        }
        if let Var::X(_) = var {
            let u: Vec<Vertex> = (1..=6).map(|k| find(Role::U { var, k })).collect::<Result<_, _>>()?;
            let paths = g.has_edge(u[0], u[1]) && g.has_edge(u[1], u[2]) && g.has_edge(u[3], u[4]) && g.has_edge(u[4], u[5]);
            if !paths || g.degree(u[2]) != 1 || g.degree(u[5]) != 1 || g.degree(u[1]) != 2 || g.degree(u[4]) != 2 {
                return fail(format!("pendant paths of {var} malformed"));
            }
        }
    }
    Ok(())
}

/// A random formula with `n1 + n2` variables and `clauses` clauses in which
/// every variable occurs; `None` if no such formula exists.
pub fn gen_random_formula(n1: usize, n2: usize, clauses: usize, seed: u64) -> Option<TypedFormula> {
    let nv = n1 + n2;
    if nv < 3 || 3 * clauses < nv || clauses == 0 {
        return None;
    }
    let mut rng = seeded(seed);
    let var = |i: usize| if i < n1 { Var::X(i) } else { Var::Y(i - n1) };
    loop {
        let cls: Vec<[Literal; 3]> = (0..clauses)
            .map(|_| {
                let picks = rand::seq::index::sample(&mut rng, nv, 3);
                let mut it = picks.iter().map(|i| Literal { var: var(i), positive: true });
                [it.next().unwrap(), it.next().unwrap(), it.next().unwrap()]
            })
            .collect();
        let cls = cls
            .into_iter()
            .map(|mut c| {
                for l in &mut c {
                    l.positive = rng.gen_bool(0.5);
                }
                c
            })
            .collect();
        if let Ok(f) = TypedFormula::new(n1, n2, cls) {
            return Some(f);
        }
    }
}

/// The two-clause example formula `(x1 | x2 | -y1) & (-x1 | y1 | y2)`.
pub fn example_formula() -> TypedFormula {
    "x 2\ny 2\nx1 x2 -y1\n-x1 y1 y2\n".parse().expect("fixed formula")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_round_trip_and_errors() {
        let f = example_formula();
        assert_eq!(f.to_string().parse::<TypedFormula>().unwrap(), f);
        assert!(matches!("y 1\n".parse::<TypedFormula>(), Err(FormulaError::MissingHeader { line: 1 })));
        assert!(matches!("x 1\ny 2\nx1 y1\n".parse::<TypedFormula>(), Err(FormulaError::WrongClauseLength { line: 3, found: 2 })));
        assert!(matches!("x 1\ny 2\nx1 y1 z2\n".parse::<TypedFormula>(), Err(FormulaError::MalformedLiteral { .. })));
        assert!(matches!("x 1\ny 2\nx1 y1 -y1\n".parse::<TypedFormula>(), Err(FormulaError::RepeatedVariable { .. })));
        assert!(matches!("x 1\ny 3\nx1 y1 y2\n".parse::<TypedFormula>(), Err(FormulaError::UnusedVariable(Var::Y(2)))));
        assert!(matches!("x 1\ny 1\nx1 y1 y2\n".parse::<TypedFormula>(), Err(FormulaError::VariableOutOfRange { .. })));
    }

    #[test]
    fn example_instance_sizes_and_structure() {
        let f = example_formula();
        let gg = gen_hardness_instance(&f);
        assert_eq!((gg.graph.n(), gg.graph.m()), (102, 146));
        check_structure(&gg, &f).unwrap();
        assert_eq!(gg.roles_text().lines().next(), Some("1 c1.l1"));
        assert!(gg.roles_text().contains(" x1.3.red.inner\n"));
    }

    #[test]
    fn one_in_three_decider() {
        // x1 alone: y-part (y1, y2) must make exactly one of three true.
        let f: TypedFormula = "x 1\ny 2\nx1 y1 y2\n".parse().unwrap();
        // x1 = true forces y1 = y2 = false: unique.
        assert_eq!(f.uq_one_in_three_witness(), Some(vec![true]));
        let g: TypedFormula = "x 0\ny 3\ny1 y2 y3\n".parse().unwrap();
        assert!(!g.is_uq_one_in_three());
    }

    #[test]
    fn random_formulas_are_valid() {
        for seed in 0..20 {
            let f = gen_random_formula(2, 2, 2, seed).unwrap();
            let gg = gen_hardness_instance(&f);
            check_structure(&gg, &f).unwrap();
        }
        assert!(gen_random_formula(4, 4, 2, 0).is_none());
    }
}
