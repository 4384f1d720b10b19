//! Clique-disjoint edge sets.
//!
//! Two edges "lie in a common clique" exactly when the union of their
//! endpoints induces a complete subgraph: three mutually adjacent vertices
//! when they share an endpoint, four when they are disjoint. Any complete
//! subgraph extends to a maximal clique, so reading "clique" as "maximal
//! clique" gives the same relation.

use crate::bitset::MAX_VERTICES;
use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};

/// True iff `e ∪ f` induces a complete subgraph of `g`. An edge is in a
/// common clique with itself.
pub fn in_common_clique(g: &Graph, e: Edge, f: Edge) -> Result<bool> {
    for x in [e, f] {
        if !g.has_edge(x.u, x.v) {
            return Err(Error::Input(format!("{x:?} is not an edge of the graph")));
        }
    }
    Ok(conflicts(g, e, f))
}

#[inline]
pub(crate) fn conflicts(g: &Graph, e: Edge, f: Edge) -> bool {
    g.is_clique(&(e.endpoints() | f.endpoints()))
}

/// The graph on the edges of a source graph in which two edges are adjacent
/// iff they lie in a common clique. Clique-disjoint edge sets are exactly its
/// independent sets.
#[derive(Clone, Debug)]
pub struct ConflictGraph {
    edge_index: Vec<Edge>,
    graph: Graph,
}

impl ConflictGraph {
    pub fn new(g: &Graph) -> Result<ConflictGraph> {
        let edge_index = g.edges();
        let m = edge_index.len();
        if m > MAX_VERTICES {
            return Err(Error::Resource(format!("{m} edges exceeds the conflict graph capacity of {MAX_VERTICES}")));
        }
        let mut pairs = Vec::new();
        for i in 0..m {
            for j in (i + 1)..m {
                if conflicts(g, edge_index[i], edge_index[j]) {
                    pairs.push((i, j));
                }
            }
        }
        let graph = Graph::from_edge_list(m, pairs)?;
        Ok(ConflictGraph { edge_index, graph })
    }

    /// Source edges in lexicographic order; position `i` is conflict vertex `i`.
    pub fn edge_index(&self) -> &[Edge] {
        &self.edge_index
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn edge(&self, i: usize) -> Edge {
        self.edge_index[i]
    }

    pub fn index_of(&self, e: Edge) -> Option<usize> {
        self.edge_index.binary_search(&e).ok()
    }
}

/// A set of edges of `graph`, no two of which lie in a common clique.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliqueDisjointSet<'g> {
    graph: &'g Graph,
    edges: Vec<Edge>,
}

impl<'g> CliqueDisjointSet<'g> {
    /// Validates membership and pairwise clique-disjointness. Edges are
    /// stored sorted; duplicates are rejected.
    pub fn new(graph: &'g Graph, mut edges: Vec<Edge>) -> Result<Self> {
        edges.sort();
        for w in edges.windows(2) {
            if w[0] == w[1] {
                return Err(Error::Input(format!("duplicate edge {:?}", w[0])));
            }
        }
        for e in &edges {
            if !graph.has_edge(e.u, e.v) {
                return Err(Error::Input(format!("{e:?} is not an edge of the graph")));
            }
        }
        for (i, &e) in edges.iter().enumerate() {
            for &f in &edges[i + 1..] {
                if conflicts(graph, e, f) {
                    return Err(Error::Input(format!("{e:?} and {f:?} lie in a common clique")));
                }
            }
        }
        Ok(CliqueDisjointSet { graph, edges })
    }

    pub fn empty(graph: &'g Graph) -> Self {
        CliqueDisjointSet { graph, edges: Vec::new() }
    }

    pub fn graph(&self) -> &'g Graph {
        self.graph
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn net() -> Graph {
        Graph::from_edge_list(6, [(0, 1), (1, 2), (0, 2), (3, 0), (4, 1), (5, 2)]).unwrap()
    }

    #[test]
    fn in_common_clique_examples() {
        let k3 = Graph::complete(3).unwrap();
        assert!(in_common_clique(&k3, (0, 1).into(), (1, 2).into()).unwrap());
        assert!(in_common_clique(&k3, (0, 1).into(), (0, 1).into()).unwrap());
        let c4 = Graph::from_edge_list(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert!(!in_common_clique(&c4, (0, 1).into(), (1, 2).into()).unwrap());
        let k4 = Graph::complete(4).unwrap();
        assert!(in_common_clique(&k4, (0, 1).into(), (2, 3).into()).unwrap());
        assert!(in_common_clique(&c4, (0, 2).into(), (1, 2).into()).is_err());
    }

    #[test]
    fn conflict_graph_examples() {
        let p5 = Graph::from_edge_list(5, (1..5).map(|i| (i - 1, i))).unwrap();
        let cg = ConflictGraph::new(&p5).unwrap();
        assert_eq!((cg.graph().n(), cg.graph().edge_count()), (4, 0));

        let cg = ConflictGraph::new(&Graph::complete(3).unwrap()).unwrap();
        assert_eq!(cg.graph(), &Graph::complete(3).unwrap());

        // net: pairwise table computed by hand, triangle edges {0,1},{0,2},{1,2}
        // conflict with each other and nothing else
        let g = net();
        let cg = ConflictGraph::new(&g).unwrap();
        assert_eq!(cg.graph().n(), 6);
        assert_eq!(cg.graph().edge_count(), 3);
        let tri: Vec<usize> = [(0, 1), (0, 2), (1, 2)].iter().map(|&e| cg.index_of(e.into()).unwrap()).collect();
        for &a in &tri {
            for &b in &tri {
                assert_eq!(cg.graph().has_edge(a, b), a != b);
            }
        }
        for e in [(0, 3), (1, 4), (2, 5)] {
            assert_eq!(cg.graph().degree(cg.index_of(e.into()).unwrap()), 0);
        }
    }

    #[test]
    fn clique_disjoint_set_validation() {
        let g = net();
        assert!(CliqueDisjointSet::new(&g, vec![(0, 1).into(), (0, 3).into()]).is_ok());
        assert!(CliqueDisjointSet::new(&g, vec![(0, 1).into(), (1, 2).into()]).is_err());
        assert!(CliqueDisjointSet::new(&g, vec![(3, 4).into()]).is_err());
        assert!(CliqueDisjointSet::new(&g, vec![(0, 3).into(), (0, 3).into()]).is_err());
    }
}
