//! Graph invariants as interchangeable maps `Graph → ℕ₀`.

use std::cell::RefCell;
use std::collections::HashMap;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::Result;
use crate::graph::Graph;
use crate::invariants::{clique_count, eta, longest_induced_path, SolverLimits};
use crate::registry::Registry;
use crate::regularity::{regularity_bei, OracleConfig};

/// A deterministic, label-invariant map from graphs to non-negative integers.
pub trait InvariantMap: Send + Sync {
    fn name(&self) -> &str;
    fn eval(&self, g: &Graph) -> Result<u64>;
}

pub struct Eta(pub SolverLimits);
pub struct CliqueCount;
pub struct InducedPathSum(pub SolverLimits);
pub struct NonFreeVertices;
pub struct EdgeCount;
pub struct Zero;
pub struct Regularity(pub OracleConfig);

impl InvariantMap for Eta {
    fn name(&self) -> &str {
        "eta"
    }
    fn eval(&self, g: &Graph) -> Result<u64> {
        Ok(eta(g, self.0)?.0 as u64)
    }
}

impl InvariantMap for CliqueCount {
    fn name(&self) -> &str {
        "c"
    }
    fn eval(&self, g: &Graph) -> Result<u64> {
        Ok(clique_count(g) as u64)
    }
}

impl InvariantMap for InducedPathSum {
    fn name(&self) -> &str {
        "L"
    }
    fn eval(&self, g: &Graph) -> Result<u64> {
        Ok(longest_induced_path(g, self.0)?.0 as u64)
    }
}

impl InvariantMap for NonFreeVertices {
    fn name(&self) -> &str {
        "iv"
    }
    fn eval(&self, g: &Graph) -> Result<u64> {
        Ok(g.internal_vertex_count() as u64)
    }
}

impl InvariantMap for EdgeCount {
    fn name(&self) -> &str {
        "edges"
    }
    fn eval(&self, g: &Graph) -> Result<u64> {
        Ok(g.edge_count() as u64)
    }
}

impl InvariantMap for Zero {
    fn name(&self) -> &str {
        "zero"
    }
    fn eval(&self, _: &Graph) -> Result<u64> {
        Ok(0)
    }
}

impl InvariantMap for Regularity {
    fn name(&self) -> &str {
        "reg"
    }
    fn eval(&self, g: &Graph) -> Result<u64> {
        Ok(regularity_bei(g, &self.0)?.value as u64)
    }
}

/// Registry of the built-in maps: `eta`, `c`, `L`, `iv`, `edges`, `zero`, `reg`.
pub fn builtin_maps(limits: SolverLimits, oracle: OracleConfig) -> Registry<dyn InvariantMap> {
    let mut r: Registry<dyn InvariantMap> = Registry::new("invariant map");
    let maps: Vec<Box<dyn InvariantMap>> = vec![
        Box::new(Eta(limits)),
        Box::new(CliqueCount),
        Box::new(InducedPathSum(limits)),
        Box::new(NonFreeVertices),
        Box::new(EdgeCount),
        Box::new(Zero),
        Box::new(Regularity(oracle)),
    ];
    for m in maps {
        let name = m.name().to_string();
        r.register(name, m).expect("builtin names are distinct");
    }
    r
}

/// Per-caller cache in front of a map, keyed by the graph itself.
pub struct Memo<'a> {
    map: &'a dyn InvariantMap,
    cache: RefCell<HashMap<Graph, u64>>,
}

impl<'a> Memo<'a> {
    pub fn new(map: &'a dyn InvariantMap) -> Self {
        Memo { map, cache: RefCell::new(HashMap::new()) }
    }

    pub fn name(&self) -> &str {
        self.map.name()
    }

    pub fn eval(&self, g: &Graph) -> Result<u64> {
        if let Some(&v) = self.cache.borrow().get(g) {
            return Ok(v);
        }
        let v = self.map.eval(g)?;
        self.cache.borrow_mut().insert(g.clone(), v);
        Ok(v)
    }
}

/// Spot-checks that `map` takes the same value on `rounds` random relabelings
/// of `g`.
pub fn label_invariant_on(map: &dyn InvariantMap, g: &Graph, rounds: usize, seed: u64) -> Result<bool> {
    let base = map.eval(g)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut perm: Vec<usize> = (0..g.n()).collect();
    for _ in 0..rounds {
        perm.shuffle(&mut rng);
        if map.eval(&g.permute(&perm)?)? != base {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{fig2_closed, net};

    #[test]
    fn builtin_values_on_named_graphs() {
        let reg = builtin_maps(SolverLimits::default(), OracleConfig::default());
        let g = fig2_closed().unwrap();
        let values: Vec<(String, u64)> = reg.iter().map(|(name, m)| (name.to_string(), m.eval(&g).unwrap())).collect();
        let expect = [("eta", 4), ("c", 4), ("L", 3), ("iv", 4), ("edges", 9), ("zero", 0), ("reg", 3)];
        for ((name, v), (en, ev)) in values.iter().zip(expect) {
            assert_eq!((name.as_str(), *v), (en, ev));
        }
    }

    #[test]
    fn maps_are_label_invariant_on_the_net() {
        let reg = builtin_maps(SolverLimits::default(), OracleConfig::default());
        let g = net().unwrap();
        for (name, m) in reg.iter() {
            assert!(label_invariant_on(m, &g, 5, 11).unwrap(), "{name}");
        }
    }

    #[test]
    fn memo_returns_cached_values() {
        let m = Memo::new(&EdgeCount);
        let g = net().unwrap();
        assert_eq!(m.eval(&g).unwrap(), 6);
        assert_eq!(m.eval(&g).unwrap(), 6);
        assert_eq!(m.cache.borrow().len(), 1);
    }
}
