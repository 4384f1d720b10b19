//! Maximal clique enumeration (Bron–Kerbosch with Tomita pivoting).

use crate::bitset::VertexSet;
use crate::graph::Graph;

/// Every maximal clique of `g`, each once, sorted lexicographically by
/// ascending member lists. Isolated vertices are size-one cliques.
pub fn maximal_cliques(g: &Graph) -> Vec<VertexSet> {
    let mut out = Vec::new();
    expand(g, VertexSet::new(), g.vertices(), VertexSet::new(), &mut out);
    out.sort_by_cached_key(|c| c.to_vec());
    out
}

/// `c(G)`.
pub fn clique_count(g: &Graph) -> usize {
    maximal_cliques(g).len()
}

fn expand(g: &Graph, r: VertexSet, mut p: VertexSet, mut x: VertexSet, out: &mut Vec<VertexSet>) {
    if p.is_empty() {
        if x.is_empty() && !r.is_empty() {
            out.push(r);
        }
        return;
    }
    // pivot maximizing |P ∩ N(u)| over P ∪ X
    let pivot =
        (p | x).iter().max_by_key(|&u| ((p & g.neighbors(u)).len(), std::cmp::Reverse(u))).expect("P is non-empty");
    for v in (p - g.neighbors(pivot)).iter() {
        let nv = g.neighbors(v);
        let mut r2 = r;
        r2.insert(v);
        expand(g, r2, p & nv, x & nv, out);
        p.remove(v);
        x.insert(v);
    }
}
