//! Exact combinatorial invariants: `c(G)`, `η(G)`, `L(G)`, and the step that
//! turns a clique-disjoint edge set of `G_v` into a strictly larger one of `G`.

mod cliques;
mod conflict;
mod induced_path;
mod mis;

pub use cliques::{clique_count, maximal_cliques};
pub use conflict::{in_common_clique, CliqueDisjointSet, ConflictGraph};
pub use induced_path::{is_induced_path, longest_induced_path};
pub use mis::{is_independent, maximum_independent_set, SolverLimits};

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};

/// `η(G)`: the maximum size of a clique-disjoint edge set, with one optimal
/// witness.
pub fn eta(g: &Graph, limits: SolverLimits) -> Result<(usize, CliqueDisjointSet<'_>)> {
    let cg = ConflictGraph::new(g)?;
    let best = maximum_independent_set(cg.graph(), limits)?;
    let edges = best.iter().map(|i| cg.edge(i)).collect();
    let set = CliqueDisjointSet::new(g, edges)
        .map_err(|e| Error::Internal(format!("solver returned an invalid witness: {e}")))?;
    Ok((set.len(), set))
}

/// Lexicographically least pair `α < β` of non-adjacent neighbors of `v`.
fn non_adjacent_neighbors(g: &Graph, v: usize) -> Option<(usize, usize)> {
    let nb = g.neighbors(v);
    nb.iter().find_map(|a| (nb - g.neighbors(a)).iter().find(|&b| b > a).map(|b| (a, b)))
}

/// Builds a clique-disjoint edge set of `g` with at least `|h| + 1` edges from
/// a clique-disjoint set `h` of `G_v`, where `v` is not free in `g`.
///
/// With `α < β` the least non-adjacent pair of neighbors of `v`:
/// 1. `v` covered by `e ∈ h`: replace `e` by `{v,α}, {v,β}`.
/// 2. `v` uncovered and some `{u,w} ∈ h` is not an edge of `g` (it was added
///    by saturation, so `u, w ∈ N(v)`): replace it by `{v,u}, {v,w}`.
/// 3. otherwise add `{v,α}` or `{v,β}` when either is clique-disjoint from all
///    of `h` in `g`; failing both, a single member of `h` blocks both and is
///    swapped for the pair.
pub fn extend_clique_disjoint<'g>(g: &'g Graph, v: usize, h: &CliqueDisjointSet<'_>) -> Result<CliqueDisjointSet<'g>> {
    g.check_vertex(v)?;
    let (alpha, beta) =
        non_adjacent_neighbors(g, v).ok_or_else(|| Error::Precondition(format!("vertex {v} is free")))?;
    let gv = g.saturate(v)?;
    if h.graph() != &gv {
        return Err(Error::Input("edge set is not over the saturated graph G_v".into()));
    }
    let va = Edge::new(v, alpha)?;
    let vb = Edge::new(v, beta)?;
    let members = h.edges();

    let replace = |drop: Edge, add: [Edge; 2]| -> Vec<Edge> {
        members.iter().copied().filter(|&e| e != drop).chain(add).collect()
    };

    let edges = if let Some(&e1) = members.iter().find(|e| e.contains(v)) {
        replace(e1, [va, vb])
    } else if let Some(&ej) = members.iter().find(|e| !g.has_edge(e.u, e.v)) {
        replace(ej, [Edge::new(v, ej.u)?, Edge::new(v, ej.v)?])
    } else {
        let blockers =
            |x: Edge| -> Vec<Edge> { members.iter().copied().filter(|&e| conflict::conflicts(g, e, x)).collect() };
        let (ba, bb) = (blockers(va), blockers(vb));
        if ba.is_empty() {
            members.iter().copied().chain([va]).collect()
        } else if bb.is_empty() {
            members.iter().copied().chain([vb]).collect()
        } else if ba.len() == 1 && ba == bb {
            replace(ba[0], [va, vb])
        } else {
            return Err(Error::Internal(format!(
                "blockers of {va:?} ({ba:?}) and {vb:?} ({bb:?}) are not a single shared edge"
            )));
        }
    };

    let out = CliqueDisjointSet::new(g, edges)
        .map_err(|e| Error::Internal(format!("extension produced an invalid set: {e}")))?;
    if out.len() <= h.len() {
        return Err(Error::Internal("extension did not grow the set".into()));
    }
    Ok(out)
}
