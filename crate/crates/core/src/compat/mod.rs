//! Checkers for the compatibility conditions on an invariant map, the
//! non-free-vertex lemma, the regularity recursion, and the bound chain
//! `L ≤ reg ≤ η ≤ c`.
//!
//! A map `φ` is compatible when
//! - (a) `φ(Ĝ) ≤ φ(G)`;
//! - (b) `φ(G) ≥ t` whenever `G` is a disjoint union of `t` complete graphs,
//!   each on at least two vertices;
//! - (c) whenever `G` has a non-free vertex, some vertex `v` has
//!   `φ(G − v) ≤ φ(G)` and `φ(G_v) < φ(G)`.
//!
//! Every compatible map bounds `reg S/J_G` from above.

pub mod checks;
pub mod maps;

pub use maps::{builtin_maps, label_invariant_on, InvariantMap, Memo};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::invariants::{clique_count, eta, longest_induced_path, SolverLimits};
use crate::regularity::{regularity_bei, OracleConfig};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Condition {
    A,
    B,
    C,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Counterexample {
    pub graph: Graph,
    pub condition: Condition,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompatibilityReport {
    pub map: String,
    pub value: u64,
    /// `φ(Ĝ)`.
    pub stripped_value: u64,
    pub pass_a: bool,
    /// Number of components when (b) applies.
    pub b_components: Option<usize>,
    pub pass_b: bool,
    /// Whether `G` has a non-free vertex, i.e. (c) applies.
    pub c_applies: bool,
    pub pass_c: bool,
    pub witness_vertex: Option<usize>,
    /// `φ(G − v)` and `φ(G_v)` at the witness.
    pub witness_values: Option<(u64, u64)>,
    pub counterexample: Option<Counterexample>,
}

impl CompatibilityReport {
    pub fn passed(&self) -> bool {
        self.pass_a && self.pass_b && self.pass_c
    }
}

/// Checks conditions (a), (b), (c) for `phi` at `g`. For (c) the vertices are
/// tried in ascending order and the first witness is recorded.
pub fn check_compatibility(phi: &Memo<'_>, g: &Graph) -> Result<CompatibilityReport> {
    let value = phi.eval(g)?;
    let stripped = g.strip_isolated();
    let stripped_value = phi.eval(&stripped)?;
    let pass_a = stripped_value <= value;
    let mut counterexample = (!pass_a).then(|| Counterexample {
        graph: g.clone(),
        condition: Condition::A,
        detail: format!("{0}(Ĝ) = {stripped_value} > {0}(G) = {value}", phi.name()),
    });

    let b_components =
        g.completes_decomposition().filter(|sizes| sizes.iter().all(|&s| s >= 2)).map(|sizes| sizes.len());
    let pass_b = b_components.is_none_or(|t| value >= t as u64);
    if !pass_b && counterexample.is_none() {
        counterexample = Some(Counterexample {
            graph: g.clone(),
            condition: Condition::B,
            detail: format!("{}(G) = {value} < t = {}", phi.name(), b_components.unwrap_or(0)),
        });
    }

    let c_applies = g.internal_vertex_count() > 0;
    let mut witness_vertex = None;
    let mut witness_values = None;
    if c_applies {
        for v in 0..g.n() {
            let minus = phi.eval(&g.remove_vertex(v)?)?;
            if minus > value {
                continue;
            }
            let sat = phi.eval(&g.saturate(v)?)?;
            if sat < value {
                witness_vertex = Some(v);
                witness_values = Some((minus, sat));
                break;
            }
        }
    }
    let pass_c = !c_applies || witness_vertex.is_some();
    if !pass_c && counterexample.is_none() {
        counterexample = Some(Counterexample {
            graph: g.clone(),
            condition: Condition::C,
            detail: format!("no vertex v has {0}(G-v) <= {value} and {0}(G_v) < {value}", phi.name()),
        });
    }

    Ok(CompatibilityReport {
        map: phi.name().to_string(),
        value,
        stripped_value,
        pass_a,
        b_components,
        pass_b,
        c_applies,
        pass_c,
        witness_vertex,
        witness_values,
        counterexample,
    })
}

/// A non-free vertex at which `φ(G − v) ≤ φ(G)` or `φ(G_v) < φ(G)` fails.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexViolation {
    pub vertex: usize,
    pub value: u64,
    pub minus: u64,
    pub saturated: u64,
}

/// The per-vertex strengthening of (c): both inequalities at every non-free
/// vertex. Returns the vertices where it fails.
pub fn check_every_non_free_vertex(phi: &Memo<'_>, g: &Graph) -> Result<Vec<VertexViolation>> {
    let value = phi.eval(g)?;
    let mut out = Vec::new();
    for v in g.non_free_vertices().iter() {
        let minus = phi.eval(&g.remove_vertex(v)?)?;
        let saturated = phi.eval(&g.saturate(v)?)?;
        if minus > value || saturated >= value {
            out.push(VertexViolation { vertex: v, value, minus, saturated });
        }
    }
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct IvLemmaValues {
    pub iv: usize,
    pub saturated: usize,
    pub minus: usize,
    pub saturated_minus: usize,
}

impl IvLemmaValues {
    pub fn holds(&self) -> bool {
        self.saturated.max(self.minus).max(self.saturated_minus) < self.iv
    }
}

/// `iv(G_v)`, `iv(G − v)`, `iv(G_v − v)` next to `iv(G)` for a non-free `v`.
pub fn iv_lemma_values(g: &Graph, v: usize) -> Result<IvLemmaValues> {
    if g.is_free_vertex(v)? {
        return Err(Error::Precondition(format!("vertex {v} is free")));
    }
    let gv = g.saturate(v)?;
    Ok(IvLemmaValues {
        iv: g.internal_vertex_count(),
        saturated: gv.internal_vertex_count(),
        minus: g.remove_vertex(v)?.internal_vertex_count(),
        saturated_minus: gv.remove_vertex(v)?.internal_vertex_count(),
    })
}

/// `max{iv(G_v), iv(G − v), iv(G_v − v)} < iv(G)`.
pub fn check_iv_lemma(g: &Graph, v: usize) -> Result<bool> {
    Ok(iv_lemma_values(g, v)?.holds())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RecursionValues {
    pub reg: usize,
    pub saturated: usize,
    pub minus: usize,
    pub saturated_minus: usize,
}

impl RecursionValues {
    pub fn bound(&self) -> usize {
        self.saturated.max(self.minus).max(self.saturated_minus + 1)
    }

    pub fn holds(&self) -> bool {
        self.reg <= self.bound()
    }
}

pub fn recursion_values(g: &Graph, v: usize, reg: &mut dyn FnMut(&Graph) -> Result<usize>) -> Result<RecursionValues> {
    g.check_vertex(v)?;
    let gv = g.saturate(v)?;
    Ok(RecursionValues {
        reg: reg(g)?,
        saturated: reg(&gv)?,
        minus: reg(&g.remove_vertex(v)?)?,
        saturated_minus: reg(&gv.remove_vertex(v)?)?,
    })
}

/// `reg(G) ≤ max{reg(G_v), reg(G − v), reg(G_v − v) + 1}`.
pub fn check_regularity_recursion(g: &Graph, v: usize, reg: &mut dyn FnMut(&Graph) -> Result<usize>) -> Result<bool> {
    Ok(recursion_values(g, v, reg)?.holds())
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct ChainFlags {
    pub l_eq_eta: bool,
    pub l_eq_c: bool,
    pub eta_eq_c: bool,
    pub reg_eq_eta: Option<bool>,
    pub reg_eq_l: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundChainReport {
    pub n: usize,
    pub connected: bool,
    pub is_path: bool,
    pub l: usize,
    pub eta: usize,
    pub c: usize,
    pub reg: Option<usize>,
    /// Why `reg` is absent when it was requested.
    pub reg_error: Option<String>,
    pub flags: ChainFlags,
    pub violations: Vec<String>,
}

/// Evaluates `L`, `η`, `c` and optionally `reg`, and lists every failed
/// inequality of `L ≤ reg ≤ η ≤ c`, `reg ≤ n − 1`, and `reg ≤ n − 2` for
/// connected non-path graphs. `L ≤ η` is checked on its own as well.
/// Oracle resource errors leave `reg` absent; other oracle errors propagate.
pub fn bound_chain(g: &Graph, with_reg: bool, limits: SolverLimits, oracle: &OracleConfig) -> Result<BoundChainReport> {
    let l = longest_induced_path(g, limits)?.0;
    let e = eta(g, limits)?.0;
    let c = clique_count(g);
    let (reg, reg_error) = if with_reg {
        match regularity_bei(g, oracle) {
            Ok(r) => (Some(r.value), None),
            Err(err) if err.is_resource() => (None, Some(err.to_string())),
            Err(err) => return Err(err),
        }
    } else {
        (None, None)
    };
    Ok(assemble_chain(g, l, e, c, reg, reg_error))
}

pub(crate) fn assemble_chain(
    g: &Graph,
    l: usize,
    e: usize,
    c: usize,
    reg: Option<usize>,
    reg_error: Option<String>,
) -> BoundChainReport {
    let n = g.n();
    let connected = g.is_connected();
    let is_path = g.is_path();
    let mut violations = Vec::new();
    if l > e {
        violations.push(format!("L = {l} > eta = {e}"));
    }
    if e > c {
        violations.push(format!("eta = {e} > c = {c}"));
    }
    if let Some(r) = reg {
        if l > r {
            violations.push(format!("L = {l} > reg = {r}"));
        }
        if r > e {
            violations.push(format!("reg = {r} > eta = {e}"));
        }
        if r > n.saturating_sub(1) {
            violations.push(format!("reg = {r} > n - 1 = {}", n.saturating_sub(1)));
        }
        if connected && !is_path && n >= 2 && r > n - 2 {
            violations.push(format!("reg = {r} > n - 2 = {} for a connected non-path graph", n - 2));
        }
    }
    BoundChainReport {
        n,
        connected,
        is_path,
        l,
        eta: e,
        c,
        reg,
        reg_error,
        flags: ChainFlags {
            l_eq_eta: l == e,
            l_eq_c: l == c,
            eta_eq_c: e == c,
            reg_eq_eta: reg.map(|r| r == e),
            reg_eq_l: reg.map(|r| r == l),
        },
        violations,
    }
}
