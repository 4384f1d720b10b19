//! Squarefree monomial ideals and the initial ideal of `J_G`.
//!
//! Variables are numbered `x_i ↦ i`, `y_i ↦ n + i` for vertex `i` in `0..n`,
//! and a squarefree monomial is the bitmask of its variables. The monomial
//! order is lex with `x_0 > … > x_{n-1} > y_0 > … > y_{n-1}`, under which the
//! leading term of `x_i y_j − x_j y_i` (`i < j`) is `x_i y_j`.
//!
//! For a path `i = i_0, i_1, …, i_r = j` with `i < j` whose interior vertices
//! all lie outside the interval `[i, j]`, the monomial
//! `x_i y_j ∏_{i_k > j} x_{i_k} ∏_{i_k < i} y_{i_k}` is a leading term of the
//! reduced Gröbner basis of `J_G` when the path is minimal, and a multiple of
//! one otherwise. Minimalizing over all such paths therefore yields the
//! minimal generators of the initial ideal.

use std::collections::BTreeSet;
use std::fmt;

use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Bitmask over at most 64 variables.
pub type Monomial = u64;

pub const MAX_VARIABLES: usize = 64;

/// Index of `x_v`.
pub fn x_var(v: usize) -> usize {
    v
}

/// Index of `y_v` in a ring on `n` vertices.
pub fn y_var(n: usize, v: usize) -> usize {
    n + v
}

/// `a | b` for squarefree monomials.
pub fn divides(a: Monomial, b: Monomial) -> bool {
    a & !b == 0
}

/// Display name of a variable with 1-based vertex labels, e.g. `x1`, `y3`.
pub fn variable_name(n: usize, var: usize) -> String {
    if var < n {
        format!("x{}", var + 1)
    } else {
        format!("y{}", var - n + 1)
    }
}

/// Ideal generated by squarefree monomials, kept minimal: no generator divides
/// another, and generators are sorted by degree then mask.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SquarefreeIdeal {
    num_vars: usize,
    gens: Vec<Monomial>,
}

impl SquarefreeIdeal {
    pub fn new(num_vars: usize, gens: impl IntoIterator<Item = Monomial>) -> Result<Self> {
        if num_vars > MAX_VARIABLES {
            return Err(Error::Resource(format!("{num_vars} variables exceeds the limit of {MAX_VARIABLES}")));
        }
        let mut gens: Vec<Monomial> = gens.into_iter().collect::<BTreeSet<_>>().into_iter().collect();
        for &g in &gens {
            if g == 0 {
                return Err(Error::Input("the unit monomial is not a valid generator".into()));
            }
            if num_vars < 64 && g >> num_vars != 0 {
                return Err(Error::Input(format!("generator {g:#x} uses variables beyond {num_vars}")));
            }
        }
        gens.sort_by_key(|&g| (g.count_ones(), g));
        let mut minimal: Vec<Monomial> = Vec::with_capacity(gens.len());
        for g in gens {
            if !minimal.iter().any(|&m| divides(m, g)) {
                minimal.push(g);
            }
        }
        Ok(SquarefreeIdeal { num_vars, gens: minimal })
    }

    pub fn zero(num_vars: usize) -> Self {
        SquarefreeIdeal { num_vars, gens: Vec::new() }
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    /// True iff the squarefree monomial `face` is a face of the
    /// Stanley–Reisner complex, i.e. contains no generator.
    pub fn is_face(&self, face: Monomial) -> bool {
        !self.gens.iter().any(|&g| divides(g, face))
    }

    /// Splits the generators into groups that share no variables, each group
    /// ordered as in `self`, groups ordered by first generator.
    pub fn variable_blocks(&self) -> Vec<Vec<Monomial>> {
        let mut blocks: Vec<(Monomial, Vec<Monomial>)> = Vec::new();
        for &g in &self.gens {
            let mut support = g;
            let mut members = vec![g];
            let mut i = 0;
            while i < blocks.len() {
                if blocks[i].0 & support != 0 {
                    let (s, m) = blocks.remove(i);
                    support |= s;
                    members.extend(m);
                    i = 0;
                } else {
                    i += 1;
                }
            }
            blocks.push((support, members));
        }
        let order = |m: &Monomial| self.gens.iter().position(|g| g == m).unwrap_or(usize::MAX);
        let mut out: Vec<Vec<Monomial>> = blocks
            .into_iter()
            .map(|(_, mut m)| {
                m.sort_by_key(|x| order(x));
                m
            })
            .collect();
        out.sort_by_key(|b| order(&b[0]));
        out
    }
}

impl fmt::Debug for SquarefreeIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SquarefreeIdeal(vars={}, gens=[", self.num_vars)?;
        for (k, g) in self.gens.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g:#x}")?;
        }
        write!(f, "])")
    }
}

/// Calls `visit` on every label-valid path of `g`: a simple path
/// `i, …, j` with `i < j` whose interior vertices are all `< i` or `> j`.
pub fn for_each_label_valid_path(g: &Graph, mut visit: impl FnMut(&[usize])) {
    let n = g.n();
    let mut path = Vec::with_capacity(n);
    for i in 0..n {
        path.clear();
        path.push(i);
        walk(g, i, usize::MAX, VertexSet::singleton(i), &mut path, &mut visit);
    }
}

/// `min_above` is the least interior vertex greater than the start; valid
/// endpoints lie strictly between the start and it.
fn walk(
    g: &Graph,
    start: usize,
    min_above: usize,
    visited: VertexSet,
    path: &mut Vec<usize>,
    visit: &mut impl FnMut(&[usize]),
) {
    let last = *path.last().expect("non-empty path");
    for w in (g.neighbors(last) - visited).iter() {
        path.push(w);
        if w > start && w < min_above {
            visit(path);
        }
        let next_min = if w > start { min_above.min(w) } else { min_above };
        // some endpoint in (start, next_min) must still be unvisited
        let mut seen = visited;
        seen.insert(w);
        let window = VertexSet::full(next_min.min(g.n())) - VertexSet::full(start + 1);
        if !(window - seen).is_empty() {
            walk(g, start, next_min, seen, path, visit);
        }
        path.pop();
    }
}

/// Monomial of a label-valid path in a ring on `n` vertices.
pub fn path_monomial(n: usize, path: &[usize]) -> Monomial {
    let i = path[0];
    let j = *path.last().expect("non-empty path");
    let mut m = 1u64 << x_var(i) | 1u64 << y_var(n, j);
    for &k in &path[1..path.len() - 1] {
        if k > j {
            m |= 1 << x_var(k);
        } else {
            m |= 1 << y_var(n, k);
        }
    }
    m
}

/// The squarefree initial ideal of `J_G` under lex order. Refuses graphs with
/// a connected component larger than `max_component` vertices.
pub fn initial_ideal(g: &Graph, max_component: usize) -> Result<SquarefreeIdeal> {
    let n = g.n();
    if 2 * n > MAX_VARIABLES {
        return Err(Error::Resource(format!("{n} vertices need {} variables; the limit is {MAX_VARIABLES}", 2 * n)));
    }
    if let Some(big) = g.components().iter().map(|c| c.len()).max() {
        if big > max_component {
            return Err(Error::Resource(format!(
                "component of {big} vertices exceeds the oracle cap of {max_component}"
            )));
        }
    }
    let mut monomials = BTreeSet::new();
    for_each_label_valid_path(g, |p| {
        monomials.insert(path_monomial(n, p));
    });
    SquarefreeIdeal::new(2 * n, monomials)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(v: usize) -> Monomial {
        1 << x_var(v)
    }
    fn y(n: usize, v: usize) -> Monomial {
        1 << y_var(n, v)
    }

    fn all_simple_paths(g: &Graph) -> Vec<Vec<usize>> {
        fn rec(g: &Graph, path: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            if path.len() >= 2 {
                out.push(path.clone());
            }
            let last = *path.last().unwrap();
            for w in g.neighbors(last).iter() {
                if !path.contains(&w) {
                    path.push(w);
                    rec(g, path, out);
                    path.pop();
                }
            }
        }
        let mut out = Vec::new();
        for s in 0..g.n() {
            rec(g, &mut vec![s], &mut out);
        }
        out
    }

    fn label_valid(p: &[usize]) -> bool {
        let (i, j) = (p[0], *p.last().unwrap());
        i < j && p[1..p.len() - 1].iter().all(|&k| k < i || k > j)
    }

    #[test]
    fn p3_and_k3_and_k2() {
        let p3 = Graph::from_edge_list(3, [(0, 1), (1, 2)]).unwrap();
        let i = initial_ideal(&p3, 8).unwrap();
        assert_eq!(i.generators(), &[x(0) | y(3, 1), x(1) | y(3, 2)]);

        let k3 = Graph::complete(3).unwrap();
        let i = initial_ideal(&k3, 8).unwrap();
        let mut expect = vec![x(0) | y(3, 1), x(0) | y(3, 2), x(1) | y(3, 2)];
        expect.sort_by_key(|&g| (g.count_ones(), g));
        assert_eq!(i.generators(), expect.as_slice());

        let k2 = Graph::complete(2).unwrap();
        assert_eq!(initial_ideal(&k2, 8).unwrap().generators(), &[x(0) | y(2, 1)]);
    }

    #[test]
    fn enumeration_matches_filtered_simple_paths() {
        let graphs = [
            Graph::complete(5).unwrap(),
            Graph::from_edge_list(6, [(0, 3), (3, 1), (1, 5), (5, 2), (2, 4), (4, 0), (1, 2)]).unwrap(),
            Graph::from_edge_list(6, [(0, 1), (1, 2), (0, 2), (3, 0), (4, 1), (5, 2)]).unwrap(),
        ];
        for g in graphs {
            let mut expect: Vec<Vec<usize>> = all_simple_paths(&g).into_iter().filter(|p| label_valid(p)).collect();
            let mut got = Vec::new();
            for_each_label_valid_path(&g, |p| got.push(p.to_vec()));
            expect.sort();
            got.sort();
            assert_eq!(got, expect);
        }
    }

    #[test]
    fn interior_labels_pick_the_right_variable() {
        // path 1 - 3 - 0 - 2 in a 4-vertex ring: endpoints 1 < 2, interior 3 > 2
        // contributes x_3, interior 0 < 1 contributes y_0
        let m = path_monomial(4, &[1, 3, 0, 2]);
        assert_eq!(m, x(1) | y(4, 2) | x(3) | y(4, 0));
    }

    #[test]
    fn minimalization_drops_multiples() {
        let i = SquarefreeIdeal::new(4, [0b0011, 0b0111, 0b1100, 0b0011]).unwrap();
        assert_eq!(i.generators(), &[0b0011, 0b1100]);
        assert!(i.is_face(0b0101));
        assert!(!i.is_face(0b1101));
        assert!(SquarefreeIdeal::new(4, [0]).is_err());
        assert!(SquarefreeIdeal::new(4, [0b10000]).is_err());
    }

    #[test]
    fn blocks_share_no_variables() {
        let i = SquarefreeIdeal::new(8, [0b11, 0b1100_0000, 0b110, 0b1_0000]).unwrap();
        let blocks = i.variable_blocks();
        assert_eq!(blocks.len(), 3);
        assert!(blocks.iter().any(|b| b.len() == 2));
    }

    #[test]
    fn component_cap_is_enforced() {
        let g = Graph::complete(9).unwrap();
        assert!(matches!(initial_ideal(&g, 8), Err(Error::Resource(_))));
        let g = Graph::complete(3).unwrap().with_isolated(20).unwrap();
        assert!(initial_ideal(&g, 8).is_ok());
    }
}
