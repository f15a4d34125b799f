//! Exact minimum vertex cover by branch and bound, and the uniqueness test
//! built on top of it.
//!
//! The search works on one mutable copy of the degree array with an undo
//! trail. Each call applies the degree-0 / degree-1 / triangle-degree-2
//! reductions, splits the remainder into connected components, closes cycles
//! directly, and otherwise branches on a vertex of maximum degree (take `v`,
//! or take all of `N(v)`), pruning with a greedy-matching lower bound.

use crate::graph::{Graph, GraphError, Vertex, VertexSet};

struct Search<'g> {
    g: &'g Graph,
    alive: Vec<bool>,
    deg: Vec<usize>,
    trail: Vec<Vertex>,
    stamp: Vec<u32>,
    epoch: u32,
}

impl<'g> Search<'g> {
    fn new(g: &'g Graph) -> Self {
        let n = g.n();
        Search {
            g,
            alive: vec![true; n],
            deg: (0..n).map(|v| g.degree(v)).collect(),
            trail: Vec::new(),
            stamp: vec![0; n],
            epoch: 0,
        }
    }

    fn remove(&mut self, v: Vertex) {
        debug_assert!(self.alive[v]);
        self.alive[v] = false;
        for &u in self.g.neighbors(v) {
            if self.alive[u] {
                self.deg[u] -= 1;
            }
        }
        self.trail.push(v);
    }

    fn undo(&mut self, mark: usize) {
        while self.trail.len() > mark {
            let v = self.trail.pop().expect("trail longer than mark");
            for &u in self.g.neighbors(v) {
                if self.alive[u] {
                    self.deg[u] += 1;
                }
            }
            self.alive[v] = true;
        }
    }

    fn alive_neighbors(&self, v: Vertex) -> impl Iterator<Item = Vertex> + '_ {
        self.g.neighbors(v).iter().copied().filter(move |&u| self.alive[u])
    }

    fn next_epoch(&mut self) -> u32 {
        self.epoch += 1;
        if self.epoch == u32::MAX {
            self.stamp.iter_mut().for_each(|s| *s = 0);
            self.epoch = 1;
        }
        self.epoch
    }

    /// Applies the reductions to `verts`, returning the forced cover vertices.
    fn reduce(&mut self, verts: &[Vertex]) -> Vec<Vertex> {
        let mut forced = Vec::new();
        let mut queue: Vec<Vertex> = verts.iter().copied().filter(|&v| self.deg[v] <= 2).collect();
        while let Some(v) = queue.pop() {
            if !self.alive[v] {
                continue;
            }
            match self.deg[v] {
                0 => self.remove(v),
                1 => {
                    let u = self.alive_neighbors(v).next().expect("degree one");
                    let touched: Vec<Vertex> = self.alive_neighbors(u).collect();
                    forced.push(u);
                    self.remove(u);
                    self.remove(v);
                    queue.extend(touched.into_iter().filter(|&w| self.alive[w] && self.deg[w] <= 2));
                }
                2 => {
                    let (a, b) = {
                        let mut it = self.alive_neighbors(v);
                        (it.next().expect("degree two"), it.next().expect("degree two"))
                    };
                    if self.g.has_edge(a, b) {
                        let mut touched: Vec<Vertex> = self.alive_neighbors(a).collect();
                        touched.extend(self.alive_neighbors(b));
                        forced.push(a);
                        forced.push(b);
                        self.remove(a);
                        self.remove(b);
                        self.remove(v);
                        queue.extend(touched.into_iter().filter(|&w| self.alive[w] && self.deg[w] <= 2));
                    }
                }
                _ => {}
            }
        }
        forced
    }

    fn components(&mut self, verts: &[Vertex]) -> Vec<Vec<Vertex>> {
        let epoch = self.next_epoch();
        let mut out = Vec::new();
        for &s in verts {
            if !self.alive[s] || self.stamp[s] == epoch {
                continue;
            }
            self.stamp[s] = epoch;
            let mut comp = vec![s];
            let mut i = 0;
            while i < comp.len() {
                let v = comp[i];
                i += 1;
                for &u in self.g.neighbors(v) {
                    if self.alive[u] && self.stamp[u] != epoch {
                        self.stamp[u] = epoch;
                        comp.push(u);
                    }
                }
            }
            out.push(comp);
        }
        out
    }

    /// Size of a greedy maximal matching, a lower bound on any cover.
    fn matching_bound(&mut self, comp: &[Vertex]) -> usize {
        let epoch = self.next_epoch();
        let mut size = 0;
        for &v in comp {
            if self.stamp[v] == epoch {
                continue;
            }
            let partner = self.g.neighbors(v).iter().copied().find(|&u| self.alive[u] && self.stamp[u] != epoch);
            if let Some(u) = partner {
                self.stamp[v] = epoch;
                self.stamp[u] = epoch;
                size += 1;
            }
        }
        size
    }

    /// Alternate vertices of a cycle component (every vertex has degree two).
    fn cycle_cover(&self, comp: &[Vertex]) -> Vec<Vertex> {
        let start = comp[0];
        let mut order = vec![start];
        let mut prev = start;
        let mut cur = self.alive_neighbors(start).next().expect("cycle vertex");
        while cur != start {
            order.push(cur);
            let next = self.alive_neighbors(cur).find(|&w| w != prev).expect("cycle vertex");
            prev = cur;
            cur = next;
        }
        // Even positions; for odd cycles this includes both ends of the closing edge.
        order.iter().copied().step_by(2).collect()
    }

    /// A minimum cover of the alive subgraph on `verts` (a union of alive
    /// components) if its size is strictly below `limit`.
    fn solve(&mut self, verts: &[Vertex], limit: usize) -> Option<Vec<Vertex>> {
        if limit == 0 {
            return None;
        }
        let mark = self.trail.len();
        let forced = self.reduce(verts);
        let result = self.solve_reduced(verts, limit, forced);
        self.undo(mark);
        result
    }

    fn solve_reduced(&mut self, verts: &[Vertex], limit: usize, mut forced: Vec<Vertex>) -> Option<Vec<Vertex>> {
        if forced.len() >= limit {
            return None;
        }
        let comps = self.components(verts);
        if comps.is_empty() {
            return Some(forced);
        }
        let bounds: Vec<usize> = comps.iter().map(|c| self.matching_bound(c)).collect();
        let mut used = forced.len();
        let mut rest: usize = bounds.iter().sum();
        if used + rest >= limit {
            return None;
        }
        for (comp, bound) in comps.iter().zip(&bounds) {
            rest -= bound;
            let cover = self.solve_component(comp, limit - used - rest)?;
            used += cover.len();
            forced.extend(cover);
        }
        Some(forced)
    }

    /// Like `solve` for a single connected, already reduced component.
    fn solve_component(&mut self, comp: &[Vertex], limit: usize) -> Option<Vec<Vertex>> {
        let v = comp.iter().copied().max_by_key(|&v| (self.deg[v], std::cmp::Reverse(v))).expect("non-empty");
        if self.deg[v] <= 2 {
            let cover = self.cycle_cover(comp);
            return (cover.len() < limit).then_some(cover);
        }
        if self.matching_bound(comp) >= limit {
            return None;
        }
        let mut best: Option<Vec<Vertex>> = None;
        let mut bound = limit;

        let mark = self.trail.len();
        self.remove(v);
        if let Some(mut c) = self.solve(comp, bound - 1) {
            c.push(v);
            bound = c.len();
            best = Some(c);
        }
        self.undo(mark);

        let nbrs: Vec<Vertex> = self.alive_neighbors(v).collect();
        if nbrs.len() < bound {
            self.remove(v);
            for &u in &nbrs {
                self.remove(u);
            }
            if let Some(mut c) = self.solve(comp, bound - nbrs.len()) {
                c.extend(nbrs);
                best = Some(c);
            }
            self.undo(mark);
        }
        best
    }
}

/// Removes forbidden vertices (forcing their neighbours into the cover) and
/// returns the forced part, or `Uncoverable` when two forbidden vertices are adjacent.
fn apply_forbidden(search: &mut Search<'_>, forbidden: &VertexSet) -> Result<Vec<Vertex>, GraphError> {
    let g = search.g;
    let mask = forbidden.to_mask(g.n());
    let mut forced = Vec::new();
    for f in forbidden.iter() {
        for &u in g.neighbors(f) {
            if mask[u] {
                return Err(GraphError::Uncoverable(f.min(u), f.max(u)));
            }
        }
    }
    for f in forbidden.iter() {
        for &u in g.neighbors(f) {
            if search.alive[u] {
                forced.push(u);
                search.remove(u);
            }
        }
        search.remove(f);
    }
    Ok(forced)
}

fn check_range(g: &Graph, set: &VertexSet) -> Result<(), GraphError> {
    match set.iter().find(|&v| v >= g.n()) {
        Some(v) => Err(GraphError::VertexOutOfRange { vertex: v, n: g.n() }),
        None => Ok(()),
    }
}

/// A minimum vertex cover of `g` that avoids every vertex of `forbidden`.
pub fn min_vc(g: &Graph, forbidden: &VertexSet) -> Result<VertexSet, GraphError> {
    check_range(g, forbidden)?;
    let mut search = Search::new(g);
    let mut cover = apply_forbidden(&mut search, forbidden)?;
    let rest: Vec<Vertex> = (0..g.n()).filter(|&v| search.alive[v]).collect();
    let limit = rest.len() + 1;
    cover.extend(search.solve(&rest, limit).expect("the full vertex set is a cover"));
    Ok(cover.into_iter().collect())
}

/// Size of a minimum vertex cover avoiding `forbidden`.
pub fn min_vc_size(g: &Graph, forbidden: &VertexSet) -> Result<usize, GraphError> {
    min_vc(g, forbidden).map(|c| c.len())
}

/// A cover of size at most `budget` avoiding `forbidden`, if one exists.
pub fn vc_within(g: &Graph, forbidden: &VertexSet, budget: usize) -> Result<Option<VertexSet>, GraphError> {
    check_range(g, forbidden)?;
    let mut search = Search::new(g);
    let mut cover = apply_forbidden(&mut search, forbidden)?;
    if cover.len() > budget {
        return Ok(None);
    }
    let rest: Vec<Vertex> = (0..g.n()).filter(|&v| search.alive[v]).collect();
    Ok(search.solve(&rest, budget - cover.len() + 1).map(|c| {
        cover.extend(c);
        cover.into_iter().collect()
    }))
}

/// Outcome of a uniqueness check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Uniqueness {
    /// Whether `g` has exactly one minimum vertex cover.
    pub unique: bool,
    /// A minimum vertex cover (the unique one when `unique`).
    pub cover: VertexSet,
    /// A second minimum cover, present exactly when `unique` is false.
    pub alternative: Option<VertexSet>,
}

/// Decides whether `g` has a unique minimum vertex cover.
///
/// With `M` a minimum cover of size `m`, the cover is unique exactly when no
/// cover of size `m` avoids some `v` in `M`: any other minimum cover misses
/// at least one vertex of `M`.
pub fn is_unique_min_vc(g: &Graph) -> Uniqueness {
    let cover = min_vc(g, &VertexSet::new()).expect("no forbidden vertices");
    let m = cover.len();
    for v in cover.clone().iter() {
        if let Some(other) = vc_within(g, &VertexSet::from([v]), m).expect("a single vertex is never uncoverable") {
            return Uniqueness { unique: false, cover, alternative: Some(other) };
        }
    }
    Uniqueness { unique: true, cover, alternative: None }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::is_vertex_cover;

    fn tree9() -> Graph {
        crate::generators::nine_vertex_tree()
    }

    #[test]
    fn small_minimum_covers() {
        assert_eq!(min_vc_size(&tree9(), &VertexSet::new()).unwrap(), 4);
        assert_eq!(min_vc_size(&Graph::cycle(4), &VertexSet::new()).unwrap(), 2);
        assert_eq!(min_vc_size(&Graph::cycle(5), &VertexSet::new()).unwrap(), 3);
        assert_eq!(min_vc_size(&Graph::complete(5), &VertexSet::new()).unwrap(), 4);
        assert_eq!(min_vc_size(&Graph::empty(0), &VertexSet::new()).unwrap(), 0);
        let c = min_vc(&Graph::cycle(7), &VertexSet::new()).unwrap();
        assert_eq!(c.len(), 4);
        assert!(is_vertex_cover(&Graph::cycle(7), &c));
    }

    #[test]
    fn forbidden_vertices() {
        let p3 = Graph::path(3);
        assert_eq!(min_vc_size(&p3, &VertexSet::from([1])).unwrap(), 2);
        assert_eq!(min_vc_size(&Graph::path(2), &VertexSet::from([0, 1])), Err(GraphError::Uncoverable(0, 1)));
        assert_eq!(vc_within(&p3, &VertexSet::from([1]), 1).unwrap(), None);
    }

    #[test]
    fn uniqueness_examples() {
        let p3 = is_unique_min_vc(&Graph::path(3));
        assert!(p3.unique);
        assert_eq!(p3.cover, VertexSet::from([1]));
        assert!(!is_unique_min_vc(&Graph::path(2)).unique);
        assert!(is_unique_min_vc(&Graph::empty(0)).unique);
        let h = crate::graph::induced_delete(&tree9(), &VertexSet::from([7, 8]));
        let u = is_unique_min_vc(&h.graph);
        assert!(u.unique);
        assert_eq!(h.lift(&u.cover).to_external(), "2 4 6");
    }
}
