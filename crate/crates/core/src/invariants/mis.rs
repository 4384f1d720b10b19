//! Exact maximum independent set by branch and bound.
//!
//! Each connected component is solved separately. Inside a component the
//! search repeatedly takes simplicial vertices (whose remaining neighborhood
//! is a clique; some maximum independent set always contains one), bounds with
//! a greedy clique cover, and branches on a vertex of maximum remaining
//! degree.

use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Budget for the exponential searches in this crate.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SolverLimits {
    /// Maximum number of search nodes before giving up with a resource error.
    pub max_nodes: u64,
}

impl Default for SolverLimits {
    fn default() -> Self {
        SolverLimits { max_nodes: 200_000_000 }
    }
}

pub fn maximum_independent_set(g: &Graph, limits: SolverLimits) -> Result<VertexSet> {
    let mut nodes = 0u64;
    let mut out = VertexSet::new();
    for comp in g.components() {
        let mut solver = Solver { g, best: greedy(g, comp), nodes: &mut nodes, limits };
        solver.search(VertexSet::new(), comp)?;
        out |= solver.best;
    }
    Ok(out)
}

struct Solver<'a> {
    g: &'a Graph,
    best: VertexSet,
    nodes: &'a mut u64,
    limits: SolverLimits,
}

impl Solver<'_> {
    fn search(&mut self, mut chosen: VertexSet, mut p: VertexSet) -> Result<()> {
        *self.nodes += 1;
        if *self.nodes > self.limits.max_nodes {
            return Err(Error::Resource(format!("independent set search exceeded {} nodes", self.limits.max_nodes)));
        }
        while let Some(v) = p.iter().find(|&v| self.g.is_clique(&(self.g.neighbors(v) & p))) {
            chosen.insert(v);
            p -= self.g.closed_neighbors(v);
        }
        if p.is_empty() {
            if chosen.len() > self.best.len() {
                self.best = chosen;
            }
            return Ok(());
        }
        if chosen.len() + clique_cover_bound(self.g, p) <= self.best.len() {
            return Ok(());
        }
        let v =
            p.iter().max_by_key(|&v| ((self.g.neighbors(v) & p).len(), std::cmp::Reverse(v))).expect("P is non-empty");
        let mut with_v = chosen;
        with_v.insert(v);
        self.search(with_v, p - self.g.closed_neighbors(v))?;
        p.remove(v);
        self.search(chosen, p)
    }
}

/// Number of classes in a greedy partition of `p` into cliques; an upper bound
/// on the independence number of the induced subgraph.
fn clique_cover_bound(g: &Graph, p: VertexSet) -> usize {
    let mut classes: Vec<VertexSet> = Vec::new();
    for v in p.iter() {
        let nv = g.neighbors(v);
        match classes.iter_mut().find(|c| c.is_subset(&nv)) {
            Some(c) => c.insert(v),
            None => classes.push(VertexSet::singleton(v)),
        }
    }
    classes.len()
}

/// Minimum-degree greedy independent set inside `p`.
fn greedy(g: &Graph, mut p: VertexSet) -> VertexSet {
    let mut chosen = VertexSet::new();
    while let Some(v) = p.iter().min_by_key(|&v| ((g.neighbors(v) & p).len(), v)) {
        chosen.insert(v);
        p -= g.closed_neighbors(v);
    }
    chosen
}

pub fn is_independent(g: &Graph, s: &VertexSet) -> bool {
    s.iter().all(|v| g.neighbors(v).is_disjoint(s))
}
