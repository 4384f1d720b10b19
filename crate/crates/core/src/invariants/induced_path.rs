use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::invariants::mis::SolverLimits;

/// `L(G)` with one longest induced path per connected component (in component
/// order). Path length counts edges; a single vertex has length zero.
pub fn longest_induced_path(g: &Graph, limits: SolverLimits) -> Result<(usize, Vec<Vec<usize>>)> {
    let mut nodes = 0u64;
    let mut total = 0;
    let mut witnesses = Vec::new();
    for comp in g.components() {
        let mut search = PathSearch { g, best: Vec::new(), nodes: &mut nodes, limits };
        for s in comp.iter() {
            let mut path = vec![s];
            search.extend(&mut path, VertexSet::singleton(s), comp)?;
        }
        total += search.best.len() - 1;
        witnesses.push(search.best);
    }
    Ok((total, witnesses))
}

struct PathSearch<'a> {
    g: &'a Graph,
    best: Vec<usize>,
    nodes: &'a mut u64,
    limits: SolverLimits,
}

impl PathSearch<'_> {
    /// `forbidden` holds the path and the closed neighborhoods of all path
    /// vertices except the last one.
    fn extend(&mut self, path: &mut Vec<usize>, forbidden: VertexSet, comp: VertexSet) -> Result<()> {
        *self.nodes += 1;
        if *self.nodes > self.limits.max_nodes {
            return Err(Error::Resource(format!("induced path search exceeded {} nodes", self.limits.max_nodes)));
        }
        if path.len() > self.best.len() {
            self.best = path.clone();
        }
        let last = *path.last().expect("path is non-empty");
        let open = comp - forbidden;
        if path.len() + reachable(self.g, last, open) <= self.best.len() {
            return Ok(());
        }
        let next_forbidden = forbidden | self.g.closed_neighbors(last);
        for w in (self.g.neighbors(last) & open).iter() {
            path.push(w);
            self.extend(path, next_forbidden, comp)?;
            path.pop();
        }
        Ok(())
    }
}

/// Vertices of `open` reachable from `start` while staying inside `open`.
fn reachable(g: &Graph, start: usize, open: VertexSet) -> usize {
    let mut seen = VertexSet::new();
    let mut frontier = g.neighbors(start) & open;
    while !frontier.is_empty() {
        seen |= frontier;
        let mut next = VertexSet::new();
        for u in frontier.iter() {
            next |= g.neighbors(u);
        }
        frontier = next & (open - seen);
    }
    seen.len()
}

/// True iff `path` is a sequence of distinct vertices whose induced subgraph
/// is exactly the path through them.
pub fn is_induced_path(g: &Graph, path: &[usize]) -> bool {
    let set: VertexSet = path.iter().copied().collect();
    if set.len() != path.len() || path.iter().any(|&v| v >= g.n()) {
        return false;
    }
    path.iter()
        .enumerate()
        .all(|(i, &a)| path.iter().enumerate().skip(i + 1).all(|(j, &b)| g.has_edge(a, b) == (j == i + 1)))
}

#[cfg(test)]
mod tests {
    use super::*;

    // Oracle: every vertex subset of each component, checked for inducing a
    // path by degree counting.
    fn brute_l(g: &Graph) -> usize {
        g.components()
            .iter()
            .map(|comp| {
                let verts = comp.to_vec();
                let k = verts.len();
                (1u32..(1 << k))
                    .filter_map(|m| {
                        let s: VertexSet = (0..k).filter(|&i| m >> i & 1 == 1).map(|i| verts[i]).collect();
                        let sub = g.induced_on(&s).graph;
                        sub.is_path().then(|| s.len() - 1)
                    })
                    .max()
                    .unwrap_or(0)
            })
            .sum()
    }

    #[test]
    fn paths_and_cycles() {
        for n in 1..9 {
            let p = Graph::from_edge_list(n, (1..n).map(|i| (i - 1, i))).unwrap();
            let (l, w) = longest_induced_path(&p, SolverLimits::default()).unwrap();
            assert_eq!(l, n - 1);
            assert!(is_induced_path(&p, &w[0]));
        }
        let c6 = Graph::from_edge_list(6, (0..6).map(|i| (i, (i + 1) % 6))).unwrap();
        assert_eq!(longest_induced_path(&c6, SolverLimits::default()).unwrap().0, 4);
    }

    #[test]
    fn sums_over_components_and_ignores_isolated() {
        let g = Graph::from_edge_list(7, [(0, 1), (1, 2), (4, 5)]).unwrap();
        let (l, w) = longest_induced_path(&g, SolverLimits::default()).unwrap();
        assert_eq!(l, 3);
        assert_eq!(w.len(), 4);
        assert_eq!(longest_induced_path(&Graph::empty(0).unwrap(), SolverLimits::default()).unwrap().0, 0);
    }

    #[test]
    fn agrees_with_brute_force_on_all_five_vertex_graphs() {
        let pairs: Vec<(usize, usize)> = (0..5).flat_map(|a| ((a + 1)..5).map(move |b| (a, b))).collect();
        for mask in 0u32..(1 << pairs.len()) {
            let edges = pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e);
            let g = Graph::from_edge_list(5, edges).unwrap();
            let (l, w) = longest_induced_path(&g, SolverLimits::default()).unwrap();
            assert_eq!(l, brute_l(&g), "{g:?}");
            assert!(w.iter().all(|p| is_induced_path(&g, p)));
        }
    }
}
