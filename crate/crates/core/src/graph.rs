//! Simple undirected graphs and the vertex-level transformations used
//! throughout the toolkit.
//!
//! Vertices are labeled `0..n` internally. A [`Graph`] is immutable once
//! built: every transformation returns a new graph.

use std::fmt;

use crate::bitset::{VertexSet, MAX_VERTICES};
use crate::error::{Error, Result};

/// An undirected edge with `u < v`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
}

impl Edge {
    /// Builds the edge `{a, b}` with endpoints put in order.
    pub fn new(a: usize, b: usize) -> Result<Edge> {
        if a == b {
            return Err(Error::Input(format!("self-loop at vertex {a}")));
        }
        Ok(Edge { u: a.min(b), v: a.max(b) })
    }

    pub fn contains(&self, x: usize) -> bool {
        self.u == x || self.v == x
    }

    /// The endpoint that is not `x`, if `x` is an endpoint.
    pub fn other(&self, x: usize) -> Option<usize> {
        if self.u == x {
            Some(self.v)
        } else if self.v == x {
            Some(self.u)
        } else {
            None
        }
    }

    pub fn endpoints(&self) -> VertexSet {
        let mut s = VertexSet::singleton(self.u);
        s.insert(self.v);
        s
    }
}

impl fmt::Debug for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{},{}}}", self.u, self.v)
    }
}

impl From<(usize, usize)> for Edge {
    /// Panics on a self-loop; use [`Edge::new`] for fallible construction.
    fn from((a, b): (usize, usize)) -> Edge {
        Edge::new(a, b).expect("self-loop")
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
}

/// Result of deleting vertices: the new graph and, for each new vertex, the
/// id it had in the source graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Induced {
    pub graph: Graph,
    pub original: Vec<usize>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Graph> {
        if n > MAX_VERTICES {
            return Err(Error::Resource(format!("{n} vertices exceeds the capacity of {MAX_VERTICES}")));
        }
        Ok(Graph { n, adj: vec![VertexSet::new(); n] })
    }

    pub fn from_edge_list<I, E>(n: usize, edges: I) -> Result<Graph>
    where
        I: IntoIterator<Item = E>,
        E: Into<(usize, usize)>,
    {
        let mut g = Graph::empty(n)?;
        for e in edges {
            let (a, b) = e.into();
            if a >= n || b >= n {
                return Err(Error::Input(format!("edge {{{a},{b}}}: endpoint out of range for {n} vertices")));
            }
            if a == b {
                return Err(Error::Input(format!("self-loop at vertex {a}")));
            }
            g.adj[a].insert(b);
            g.adj[b].insert(a);
        }
        Ok(g)
    }

    pub fn complete(n: usize) -> Result<Graph> {
        let mut g = Graph::empty(n)?;
        let all = VertexSet::full(n);
        for v in 0..n {
            g.adj[v] = all;
            g.adj[v].remove(v);
        }
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|a| a.len()).sum::<usize>() / 2
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    pub fn closed_neighbors(&self, v: usize) -> VertexSet {
        let mut s = self.adj[v];
        s.insert(v);
        s
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    #[inline]
    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        a < self.n && self.adj[a].contains(b)
    }

    /// Edges in lexicographic order of `(u, v)`.
    pub fn edges(&self) -> Vec<Edge> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in self.adj[u].iter().filter(|&v| v > u) {
                out.push(Edge { u, v });
            }
        }
        out
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.n {
            return Err(Error::Input(format!("vertex {v} out of range for {} vertices", self.n)));
        }
        Ok(())
    }

    fn check_set(&self, t: &VertexSet) -> Result<()> {
        if !t.is_subset(&self.vertices()) {
            return Err(Error::Input(format!("vertex set {t:?} is not contained in 0..{}", self.n)));
        }
        Ok(())
    }

    /// True iff `s` induces a complete subgraph.
    pub fn is_clique(&self, s: &VertexSet) -> bool {
        s.iter().all(|v| {
            let mut rest = *s;
            rest.remove(v);
            rest.is_subset(&self.adj[v])
        })
    }

    /// `G - T`: the induced subgraph on the complement of `t`, relabeled to
    /// `0..n-|T|` in ascending order of the surviving ids.
    pub fn induced_delete(&self, t: &VertexSet) -> Result<Induced> {
        self.check_set(t)?;
        Ok(self.induced_on(&(self.vertices() - *t)))
    }

    /// Induced subgraph on `keep`, relabeled in ascending order.
    pub fn induced_on(&self, keep: &VertexSet) -> Induced {
        let original: Vec<usize> = (*keep & self.vertices()).to_vec();
        let mut new_id = vec![usize::MAX; self.n];
        for (i, &old) in original.iter().enumerate() {
            new_id[old] = i;
        }
        let adj = original.iter().map(|&old| (self.adj[old] & *keep).iter().map(|w| new_id[w]).collect()).collect();
        Induced { graph: Graph { n: original.len(), adj }, original }
    }

    /// `G - v`, relabeled.
    pub fn remove_vertex(&self, v: usize) -> Result<Graph> {
        self.check_vertex(v)?;
        Ok(self.induced_delete(&VertexSet::singleton(v))?.graph)
    }

    /// `G_v`: the neighborhood of `v` completed into a clique.
    pub fn saturate(&self, v: usize) -> Result<Graph> {
        self.check_vertex(v)?;
        let nb = self.adj[v];
        let mut g = self.clone();
        for u in nb.iter() {
            let mut add = nb;
            add.remove(u);
            g.adj[u] |= add;
        }
        Ok(g)
    }

    /// A vertex is free when its neighborhood induces a complete graph.
    /// Isolated and degree-one vertices are free.
    pub fn is_free_vertex(&self, v: usize) -> Result<bool> {
        self.check_vertex(v)?;
        Ok(self.is_free_unchecked(v))
    }

    fn is_free_unchecked(&self, v: usize) -> bool {
        self.is_clique(&self.adj[v])
    }

    pub fn non_free_vertices(&self) -> VertexSet {
        (0..self.n).filter(|&v| !self.is_free_unchecked(v)).collect()
    }

    /// `iv(G)`, the number of non-free vertices.
    pub fn internal_vertex_count(&self) -> usize {
        self.non_free_vertices().len()
    }

    pub fn isolated_vertices(&self) -> VertexSet {
        (0..self.n).filter(|&v| self.adj[v].is_empty()).collect()
    }

    /// `Ĝ`: `G` minus its isolated vertices.
    pub fn strip_isolated(&self) -> Graph {
        self.induced_on(&(self.vertices() - self.isolated_vertices())).graph
    }

    /// Vertex sets of the connected components of the induced subgraph on
    /// `within`, ordered by smallest member.
    pub fn components_within(&self, within: &VertexSet) -> Vec<VertexSet> {
        let mut left = *within & self.vertices();
        let mut out = Vec::new();
        while let Some(start) = left.first() {
            let mut comp = VertexSet::singleton(start);
            let mut frontier = comp;
            while !frontier.is_empty() {
                let mut next = VertexSet::new();
                for u in frontier.iter() {
                    next |= self.adj[u];
                }
                next &= left - comp;
                comp |= next;
                frontier = next;
            }
            left -= comp;
            out.push(comp);
        }
        out
    }

    pub fn components(&self) -> Vec<VertexSet> {
        self.components_within(&self.vertices())
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Components of `G - T` as vertex sets in the labeling of `G`. The length
    /// is `c_G(T)`.
    pub fn cut_signature(&self, t: &VertexSet) -> Result<Vec<VertexSet>> {
        self.check_set(t)?;
        Ok(self.components_within(&(self.vertices() - *t)))
    }

    /// If every component induces a complete graph, their sizes in component
    /// order (isolated vertices count as size 1).
    pub fn completes_decomposition(&self) -> Option<Vec<usize>> {
        self.components().iter().map(|c| self.is_clique(c).then(|| c.len())).collect()
    }

    /// True iff `G` is the path `P_n` (with `P_1 = K_1`, and the empty graph
    /// not a path).
    pub fn is_path(&self) -> bool {
        if self.n == 0 || !self.is_connected() {
            return false;
        }
        if self.n == 1 {
            return true;
        }
        let ends = (0..self.n).filter(|&v| self.degree(v) == 1).count();
        ends == 2 && (0..self.n).all(|v| self.degree(v) <= 2)
    }

    /// Vertex-disjoint union, with `other` relabeled after `self`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let shift = self.n;
        let edges = self
            .edges()
            .into_iter()
            .map(|e| (e.u, e.v))
            .chain(other.edges().into_iter().map(|e| (e.u + shift, e.v + shift)));
        Graph::from_edge_list(self.n + other.n, edges)
    }

    /// Appends `k` isolated vertices.
    pub fn with_isolated(&self, k: usize) -> Result<Graph> {
        self.disjoint_union(&Graph::empty(k)?)
    }

    /// Relabels vertex `v` to `perm[v]`.
    pub fn permute(&self, perm: &[usize]) -> Result<Graph> {
        if perm.len() != self.n {
            return Err(Error::Input("permutation length differs from vertex count".into()));
        }
        let edges = self.edges().into_iter().map(|e| (perm[e.u], perm[e.v]));
        Graph::from_edge_list(self.n, edges)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn net() -> Graph {
        Graph::from_edge_list(6, [(0, 1), (1, 2), (0, 2), (3, 0), (4, 1), (5, 2)]).unwrap()
    }

    fn path(n: usize) -> Graph {
        Graph::from_edge_list(n, (1..n).map(|i| (i - 1, i))).unwrap()
    }

    fn c4() -> Graph {
        Graph::from_edge_list(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap()
    }

    // Brute-force freeness: every pair of neighbors adjacent.
    fn brute_iv(g: &Graph) -> usize {
        (0..g.n())
            .filter(|&v| {
                let nb: Vec<usize> = (0..g.n()).filter(|&w| g.has_edge(v, w)).collect();
                nb.iter().enumerate().any(|(i, &a)| nb[i + 1..].iter().any(|&b| !g.has_edge(a, b)))
            })
            .count()
    }

    #[test]
    fn from_edge_list_collapses_duplicates_and_rejects_bad_input() {
        let p3 = Graph::from_edge_list(3, [(0, 1), (1, 2), (2, 1)]).unwrap();
        assert_eq!(p3.edge_count(), 2);
        assert!(p3.is_path());
        let k1 = Graph::from_edge_list(1, Vec::<(usize, usize)>::new()).unwrap();
        assert_eq!((k1.n(), k1.edge_count()), (1, 0));
        assert!(matches!(Graph::from_edge_list(3, [(0, 3)]), Err(Error::Input(_))));
        assert!(matches!(Graph::from_edge_list(3, [(1, 1)]), Err(Error::Input(_))));
        assert_eq!(net().edge_count(), 6);
    }

    #[test]
    fn induced_delete_examples() {
        let p3 = path(3);
        let d = p3.induced_delete(&VertexSet::singleton(1)).unwrap();
        assert_eq!((d.graph.n(), d.graph.edge_count()), (2, 0));
        assert_eq!(d.original, vec![0, 2]);

        let d = net().induced_delete(&VertexSet::singleton(3)).unwrap();
        assert_eq!(d.graph.n(), 5);
        assert_eq!(d.graph.edge_count(), 5);
        assert_eq!(d.original, vec![0, 1, 2, 4, 5]);

        let k4 = Graph::complete(4).unwrap();
        for v in 0..4 {
            assert_eq!(k4.remove_vertex(v).unwrap(), Graph::complete(3).unwrap());
        }
        assert!(p3.induced_delete(&VertexSet::singleton(7)).is_err());
    }

    #[test]
    fn saturate_examples() {
        assert_eq!(path(3).saturate(1).unwrap(), Graph::complete(3).unwrap());
        let g = Graph::from_edge_list(3, [(0, 1)]).unwrap();
        assert_eq!(g.saturate(2).unwrap(), g);
        let diamond = c4().saturate(0).unwrap();
        assert_eq!(diamond.edge_count(), 5);
        assert!(diamond.has_edge(1, 3));
        assert!(!diamond.has_edge(0, 2));
        assert!(path(3).saturate(5).is_err());
    }

    #[test]
    fn free_vertices_and_iv() {
        let g = net();
        assert!(g.is_free_vertex(3).unwrap());
        assert!(!g.is_free_vertex(0).unwrap());
        let k5 = Graph::complete(5).unwrap();
        assert!((0..5).all(|v| k5.is_free_vertex(v).unwrap()));
        assert_eq!(g.internal_vertex_count(), 3);
        assert_eq!(brute_iv(&g), 3);
        assert_eq!(path(4).internal_vertex_count(), 2);
        assert_eq!(brute_iv(&path(4)), 2);
        let union = Graph::complete(3).unwrap().disjoint_union(&Graph::complete(2).unwrap()).unwrap();
        assert_eq!(union.internal_vertex_count(), 0);
    }

    #[test]
    fn strip_isolated_examples() {
        let k2k1 = Graph::complete(2).unwrap().with_isolated(1).unwrap();
        assert_eq!(k2k1.strip_isolated(), Graph::complete(2).unwrap());
        assert_eq!(Graph::empty(5).unwrap().strip_isolated().n(), 0);
        assert_eq!(net().strip_isolated(), net());
    }

    #[test]
    fn completes_decomposition_examples() {
        let k3 = Graph::complete(3).unwrap();
        let k2 = Graph::complete(2).unwrap();
        assert_eq!(k3.disjoint_union(&k2).unwrap().completes_decomposition(), Some(vec![3, 2]));
        assert_eq!(path(3).completes_decomposition(), None);
        assert_eq!(k2.with_isolated(1).unwrap().completes_decomposition(), Some(vec![2, 1]));
    }

    #[test]
    fn cut_signature_examples() {
        let sig = path(3).cut_signature(&VertexSet::singleton(1)).unwrap();
        assert_eq!(sig, vec![VertexSet::singleton(0), VertexSet::singleton(2)]);
        let g = Graph::from_edge_list(5, [(0, 3), (1, 2)]).unwrap();
        assert_eq!(g.cut_signature(&VertexSet::new()).unwrap(), g.components());
        assert_eq!(g.components().len(), 3);
        let tri: VertexSet = [0, 1, 2].into_iter().collect();
        let sig = net().cut_signature(&tri).unwrap();
        assert_eq!(sig, (3..6).map(VertexSet::singleton).collect::<Vec<_>>());
    }

    #[test]
    fn is_path_recognizes_paths_only() {
        assert!(path(1).is_path());
        assert!(path(5).is_path());
        assert!(!c4().is_path());
        assert!(!Graph::empty(2).unwrap().is_path());
        assert!(!Graph::empty(0).unwrap().is_path());
    }

    #[test]
    fn large_graphs_are_supported() {
        let g = Graph::from_edge_list(200, (1..200).map(|i| (i - 1, i))).unwrap();
        assert!(g.is_path());
        assert_eq!(g.internal_vertex_count(), 198);
        assert!(Graph::empty(MAX_VERTICES + 1).is_err());
    }
}
