//! Desk-scale Castelnuovo–Mumford regularity of `S/J_G`.
//!
//! `J_G` is replaced by its squarefree lex initial ideal, which has the same
//! regularity. For a squarefree monomial ideal `I` with Stanley–Reisner
//! complex `Δ`, Hochster's formula gives a nonzero Betti number
//! `β_{i,W}(S/I)` exactly when `H̃_{|W|-i-1}(Δ|_W) ≠ 0`, so
//! `reg S/I = max { t + 1 : H̃_t(Δ|_W) ≠ 0 }` over variable subsets `W`.
//!
//! Subsets with a cone point (a variable of `W` lying in no generator inside
//! `W`) are acyclic and skipped, so only unions of generators are scanned.
//! Generators that share no variables split the complex into a join, and the
//! regularity is the sum over those blocks.

mod homology;
mod ideal;

pub use homology::{check_prime, faces_by_size, homology_dims, rank_mod_p};
pub use ideal::{
    for_each_label_valid_path, initial_ideal, path_monomial, variable_name, x_var, y_var, Monomial, SquarefreeIdeal,
    MAX_VARIABLES,
};

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Vertex cap above which the oracle refuses to run unless raised.
pub const DEFAULT_MAX_VERTICES: usize = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleConfig {
    /// Largest connected component (in vertices) the initial-ideal
    /// construction accepts. Blocks of the initial ideal may use up to twice
    /// this many variables.
    pub max_vertices: usize,
    /// Sum over variable-disjoint blocks instead of scanning the whole ring.
    pub split_blocks: bool,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig { max_vertices: DEFAULT_MAX_VERTICES, split_blocks: true }
    }
}

impl OracleConfig {
    fn max_block_vars(&self) -> usize {
        (2 * self.max_vertices).min(MAX_VARIABLES)
    }
}

/// A computed regularity and the subset that certifies it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RegularityResult {
    pub value: usize,
    /// Variable subset `W` whose induced subcomplex carries the top homology.
    pub witness: Monomial,
    /// Homology degree `t = value - 1` (`-1` for the zero witness `W = ∅`).
    pub degree: i64,
    /// Field in which the witness was found.
    pub witness_field: u64,
    pub fields_used: Vec<u64>,
    pub agreement: bool,
}

impl RegularityResult {
    /// Recomputes the homology of the witness subcomplex and checks that it is
    /// nonzero in the recorded degree.
    pub fn witness_reproduces(&self, ideal: &SquarefreeIdeal) -> Result<bool> {
        let dims = homology_dims(ideal, self.witness, self.witness_field)?;
        let idx = (self.degree + 1) as usize;
        Ok(dims.get(idx).copied().unwrap_or(0) > 0)
    }
}

/// `reg S/I` over GF(p).
pub fn regularity_squarefree(ideal: &SquarefreeIdeal, p: u64, cfg: &OracleConfig) -> Result<RegularityResult> {
    check_prime(p)?;
    let blocks = if cfg.split_blocks {
        ideal.variable_blocks()
    } else if ideal.is_zero() {
        Vec::new()
    } else {
        vec![ideal.generators().to_vec()]
    };
    let mut value = 0;
    let mut witness = 0;
    for gens in blocks {
        let (v, w) = scan_block(ideal.num_vars(), &gens, p, cfg)?;
        value += v;
        witness |= w;
    }
    Ok(RegularityResult {
        value,
        witness,
        degree: value as i64 - 1,
        witness_field: p,
        fields_used: vec![p],
        agreement: true,
    })
}

/// Scans every union of generators in one block; returns the best value and
/// the numerically least subset attaining it.
fn scan_block(num_vars: usize, gens: &[Monomial], p: u64, cfg: &OracleConfig) -> Result<(usize, Monomial)> {
    let support = gens.iter().fold(0, |a, &g| a | g);
    let vars: Vec<u32> = (0..64).filter(|&i| support >> i & 1 == 1).collect();
    if vars.len() > cfg.max_block_vars() {
        return Err(Error::Resource(format!(
            "a block of {} variables exceeds the oracle cap of {}",
            vars.len(),
            cfg.max_block_vars()
        )));
    }
    let block = SquarefreeIdeal::new(num_vars, gens.iter().copied())?;
    let spread = |local: u64| -> Monomial {
        vars.iter().enumerate().filter(|(k, _)| local >> k & 1 == 1).fold(0, |a, (_, &v)| a | 1 << v)
    };
    let best = (1u64..(1u64 << vars.len()))
        .into_par_iter()
        .map(spread)
        .filter(|&w| covered_by_generators(gens, w))
        .map(|w| {
            let levels = faces_by_size(&block, w);
            let dims = homology::homology_of_faces(&levels, p);
            let top = dims.iter().rposition(|&d| d > 0).unwrap_or(0);
            (top, w)
        })
        .reduce(|| (0, 0), |a, b| if (a.0, std::cmp::Reverse(a.1)) >= (b.0, std::cmp::Reverse(b.1)) { a } else { b });
    Ok(best)
}

/// True iff every variable of `w` lies in some generator contained in `w`.
fn covered_by_generators(gens: &[Monomial], w: Monomial) -> bool {
    gens.iter().filter(|&&g| g & w == g).fold(0, |a, &g| a | g) == w
}

/// `reg S/J_G`, computed over GF(2) and GF(3). Differing answers are an error.
pub fn regularity_bei(g: &Graph, cfg: &OracleConfig) -> Result<RegularityResult> {
    let ideal = initial_ideal(g, cfg.max_vertices)?;
    regularity_checked(&ideal, cfg)
}

/// [`regularity_squarefree`] over GF(2) with a GF(3) cross-check.
pub fn regularity_checked(ideal: &SquarefreeIdeal, cfg: &OracleConfig) -> Result<RegularityResult> {
    let r2 = regularity_squarefree(ideal, 2, cfg)?;
    let r3 = regularity_squarefree(ideal, 3, cfg)?;
    if r2.value != r3.value {
        return Err(Error::CharacteristicSensitive { gf2: r2.value, gf3: r3.value });
    }
    Ok(RegularityResult { fields_used: vec![2, 3], agreement: true, ..r2 })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg() -> OracleConfig {
        OracleConfig::default()
    }

    fn path(n: usize) -> Graph {
        Graph::from_edge_list(n, (1..n).map(|i| (i - 1, i))).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        Graph::from_edge_list(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    #[test]
    fn small_squarefree_examples() {
        let single = SquarefreeIdeal::new(4, [0b1001]).unwrap();
        assert_eq!(regularity_squarefree(&single, 2, &cfg()).unwrap().value, 1);
        // {x1 y2, x2 y3} in 6 variables: x1=0 x2=1 x3=2 y1=3 y2=4 y3=5
        let two = SquarefreeIdeal::new(6, [1 << 0 | 1 << 4, 1 << 1 | 1 << 5]).unwrap();
        for split in [true, false] {
            let c = OracleConfig { split_blocks: split, ..cfg() };
            assert_eq!(regularity_squarefree(&two, 2, &c).unwrap().value, 2);
        }
        let zero = SquarefreeIdeal::zero(6);
        let r = regularity_squarefree(&zero, 3, &cfg()).unwrap();
        assert_eq!((r.value, r.witness, r.degree), (0, 0, -1));
        assert!(r.witness_reproduces(&zero).unwrap());
    }

    #[test]
    fn known_binomial_edge_ideal_values() {
        for n in 1..=7 {
            assert_eq!(regularity_bei(&path(n), &cfg()).unwrap().value, n - 1, "P_{n}");
        }
        for n in 2..=6 {
            assert_eq!(regularity_bei(&Graph::complete(n).unwrap(), &cfg()).unwrap().value, 1, "K_{n}");
        }
        // cycles C_n, n >= 4, have regularity n - 2
        for n in 4..=7 {
            assert_eq!(regularity_bei(&cycle(n), &cfg()).unwrap().value, n - 2, "C_{n}");
        }
        let net = Graph::from_edge_list(6, [(0, 1), (1, 2), (0, 2), (3, 0), (4, 1), (5, 2)]).unwrap();
        assert_eq!(regularity_bei(&net, &cfg()).unwrap().value, 4);
    }

    #[test]
    fn block_sum_agrees_with_whole_ring_scan() {
        let graphs = [
            Graph::complete(2).unwrap().disjoint_union(&Graph::complete(2).unwrap()).unwrap(),
            Graph::complete(3).unwrap().disjoint_union(&path(3)).unwrap(),
            cycle(4),
            Graph::from_edge_list(5, [(0, 1), (0, 2), (0, 3), (3, 4)]).unwrap(),
        ];
        for g in graphs {
            let ideal = initial_ideal(&g, 8).unwrap();
            let whole = OracleConfig { split_blocks: false, ..cfg() };
            for p in [2, 3] {
                let a = regularity_squarefree(&ideal, p, &cfg()).unwrap();
                let b = regularity_squarefree(&ideal, p, &whole).unwrap();
                assert_eq!(a.value, b.value, "{g:?}");
                assert!(a.witness_reproduces(&ideal).unwrap());
                assert!(b.witness_reproduces(&ideal).unwrap());
            }
        }
    }

    #[test]
    fn projective_plane_is_characteristic_sensitive() {
        // six-vertex RP^2: every edge present; minimal non-faces are the
        // triangles that are not facets
        let facets = [
            [0, 1, 3],
            [0, 1, 5],
            [0, 2, 4],
            [0, 2, 5],
            [0, 3, 4],
            [1, 2, 4],
            [1, 2, 3],
            [1, 4, 5],
            [2, 3, 5],
            [3, 4, 5],
        ];
        let facet_masks: Vec<u64> = facets.iter().map(|f| f.iter().fold(0, |a, &v| a | 1 << v)).collect();
        let non_faces = (0u64..64).filter(|m| m.count_ones() == 3 && !facet_masks.contains(m));
        let ideal = SquarefreeIdeal::new(6, non_faces).unwrap();
        assert_eq!(ideal.generators().len(), 10);
        assert_eq!(regularity_squarefree(&ideal, 2, &cfg()).unwrap().value, 3);
        assert_eq!(regularity_squarefree(&ideal, 3, &cfg()).unwrap().value, 2);
        assert_eq!(regularity_checked(&ideal, &cfg()), Err(Error::CharacteristicSensitive { gf2: 3, gf3: 2 }));
    }

    #[test]
    fn isolated_vertices_do_not_change_regularity() {
        let g = cycle(5);
        let base = regularity_bei(&g, &cfg()).unwrap().value;
        let padded = g.with_isolated(4).unwrap();
        assert_eq!(regularity_bei(&padded, &cfg()).unwrap().value, base);
    }

    #[test]
    fn caps_are_enforced() {
        let k9 = Graph::complete(9).unwrap();
        assert!(matches!(regularity_bei(&k9, &cfg()), Err(Error::Resource(_))));
        let raised = OracleConfig { max_vertices: 9, ..cfg() };
        assert!(initial_ideal(&k9, raised.max_vertices).is_ok());
    }
}
