//! Per-graph checks and bound gaps, registered by name so sweeps can pick
//! them at run time.

use rayon::prelude::*;

use crate::error::Result;
use crate::graph::Graph;
use crate::invariants::{clique_count, eta, longest_induced_path, SolverLimits};
use crate::registry::Registry;
use crate::regularity::{regularity_bei, OracleConfig};

use super::maps::{InvariantMap, Memo};
use super::{bound_chain, check_compatibility, check_every_non_free_vertex, iv_lemma_values, recursion_values};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub check: String,
    pub graph: Graph,
    pub vertex: Option<usize>,
    pub detail: String,
}

pub trait Check: Send + Sync {
    fn name(&self) -> &str;
    /// Every violation found at `g`; empty when the check passes.
    fn run(&self, g: &Graph) -> Result<Vec<Violation>>;
}

pub struct ChainCheck {
    pub with_reg: bool,
    pub limits: SolverLimits,
    pub oracle: OracleConfig,
}

pub struct CompatibleCheck {
    pub map: Box<dyn InvariantMap>,
    /// Also require both inequalities at every non-free vertex.
    pub every_vertex: bool,
}

pub struct IvLemmaCheck;

pub struct RecursionCheck {
    pub oracle: OracleConfig,
}

fn violation(check: &str, g: &Graph, vertex: Option<usize>, detail: String) -> Violation {
    Violation { check: check.to_string(), graph: g.clone(), vertex, detail }
}

impl Check for ChainCheck {
    fn name(&self) -> &str {
        "chain"
    }

    fn run(&self, g: &Graph) -> Result<Vec<Violation>> {
        let r = bound_chain(g, self.with_reg, self.limits, &self.oracle)?;
        Ok(r.violations.into_iter().map(|d| violation("chain", g, None, d)).collect())
    }
}

impl Check for CompatibleCheck {
    fn name(&self) -> &str {
        "compatible"
    }

    fn run(&self, g: &Graph) -> Result<Vec<Violation>> {
        let memo = Memo::new(self.map.as_ref());
        let report = check_compatibility(&memo, g)?;
        let mut out: Vec<Violation> = report
            .counterexample
            .into_iter()
            .map(|c| violation("compatible", g, None, format!("condition {:?}: {}", c.condition, c.detail)))
            .collect();
        if self.every_vertex {
            for bad in check_every_non_free_vertex(&memo, g)? {
                out.push(violation(
                    "compatible",
                    g,
                    Some(bad.vertex),
                    format!(
                        "{0}(G) = {1}, {0}(G-v) = {2}, {0}(G_v) = {3}",
                        memo.name(),
                        bad.value,
                        bad.minus,
                        bad.saturated
                    ),
                ));
            }
        }
        Ok(out)
    }
}

impl Check for IvLemmaCheck {
    fn name(&self) -> &str {
        "iv-lemma"
    }

    fn run(&self, g: &Graph) -> Result<Vec<Violation>> {
        let mut out = Vec::new();
        for v in g.non_free_vertices().iter() {
            let x = iv_lemma_values(g, v)?;
            if !x.holds() {
                out.push(violation(
                    "iv-lemma",
                    g,
                    Some(v),
                    format!(
                        "iv(G) = {}, iv(G_v) = {}, iv(G-v) = {}, iv(G_v-v) = {}",
                        x.iv, x.saturated, x.minus, x.saturated_minus
                    ),
                ));
            }
        }
        Ok(out)
    }
}

impl Check for RecursionCheck {
    fn name(&self) -> &str {
        "recursion"
    }

    fn run(&self, g: &Graph) -> Result<Vec<Violation>> {
        let mut reg = |h: &Graph| regularity_bei(h, &self.oracle).map(|r| r.value);
        let mut out = Vec::new();
        for v in 0..g.n() {
            let x = recursion_values(g, v, &mut reg)?;
            if !x.holds() {
                out.push(violation(
                    "recursion",
                    g,
                    Some(v),
                    format!(
                        "reg(G) = {}, reg(G_v) = {}, reg(G-v) = {}, reg(G_v-v) = {}",
                        x.reg, x.saturated, x.minus, x.saturated_minus
                    ),
                ));
            }
        }
        Ok(out)
    }
}

/// Runs `check` over `graphs` in parallel. Violations come back in corpus
/// order; the first error in corpus order wins.
pub fn sweep(check: &dyn Check, graphs: &[Graph]) -> Result<Vec<Violation>> {
    let per_graph: Vec<Result<Vec<Violation>>> = graphs.par_iter().map(|g| check.run(g)).collect();
    let mut out = Vec::new();
    for r in per_graph {
        out.extend(r?);
    }
    Ok(out)
}

/// Every invariant a gap report needs, so one evaluation serves all gaps.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GapValues {
    pub l: usize,
    pub eta: usize,
    pub c: usize,
    pub reg: Option<usize>,
}

pub trait Gap: Send + Sync {
    fn name(&self) -> &str;
    fn needs_reg(&self) -> bool {
        false
    }
    fn value(&self, v: &GapValues) -> i64;
}

pub struct CMinusEta;
pub struct EtaMinusL;
pub struct CMinusReg;

impl Gap for CMinusEta {
    fn name(&self) -> &str {
        "c-eta"
    }
    fn value(&self, v: &GapValues) -> i64 {
        v.c as i64 - v.eta as i64
    }
}

impl Gap for EtaMinusL {
    fn name(&self) -> &str {
        "eta-L"
    }
    fn value(&self, v: &GapValues) -> i64 {
        v.eta as i64 - v.l as i64
    }
}

impl Gap for CMinusReg {
    fn name(&self) -> &str {
        "c-reg"
    }
    fn needs_reg(&self) -> bool {
        true
    }
    fn value(&self, v: &GapValues) -> i64 {
        v.c as i64 - v.reg.expect("reg is computed when the gap needs it") as i64
    }
}

pub fn builtin_gaps() -> Registry<dyn Gap> {
    let mut r: Registry<dyn Gap> = Registry::new("gap");
    let gaps: Vec<Box<dyn Gap>> = vec![Box::new(CMinusEta), Box::new(EtaMinusL), Box::new(CMinusReg)];
    for g in gaps {
        let name = g.name().to_string();
        r.register(name, g).expect("builtin names are distinct");
    }
    r
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GapHit {
    /// Position in the corpus.
    pub index: usize,
    pub graph: Graph,
    pub gap: i64,
    pub values: GapValues,
}

pub fn gap_values(g: &Graph, with_reg: bool, limits: SolverLimits, oracle: &OracleConfig) -> Result<GapValues> {
    Ok(GapValues {
        l: longest_induced_path(g, limits)?.0,
        eta: eta(g, limits)?.0,
        c: clique_count(g),
        reg: if with_reg { Some(regularity_bei(g, oracle)?.value) } else { None },
    })
}

/// The `top` graphs of `graphs` by `gap`, largest first, ties broken by
/// corpus position.
pub fn search_gap(
    gap: &dyn Gap,
    graphs: &[Graph],
    top: usize,
    limits: SolverLimits,
    oracle: &OracleConfig,
) -> Result<Vec<GapHit>> {
    let with_reg = gap.needs_reg();
    let values: Vec<Result<GapValues>> = graphs.par_iter().map(|g| gap_values(g, with_reg, limits, oracle)).collect();
    let mut hits = Vec::with_capacity(graphs.len());
    for (index, (g, v)) in graphs.iter().zip(values).enumerate() {
        let values = v?;
        hits.push(GapHit { index, graph: g.clone(), gap: gap.value(&values), values });
    }
    hits.sort_by(|a, b| b.gap.cmp(&a.gap).then(a.index.cmp(&b.index)));
    hits.truncate(top);
    Ok(hits)
}

/// The four sweep checks under their command names. `map` feeds the
/// compatibility check.
pub fn builtin_checks(
    map: Box<dyn InvariantMap>,
    every_vertex: bool,
    with_reg: bool,
    limits: SolverLimits,
    oracle: OracleConfig,
) -> Registry<dyn Check> {
    let mut r: Registry<dyn Check> = Registry::new("check");
    let checks: Vec<Box<dyn Check>> = vec![
        Box::new(ChainCheck { with_reg, limits, oracle }),
        Box::new(CompatibleCheck { map, every_vertex }),
        Box::new(IvLemmaCheck),
        Box::new(RecursionCheck { oracle }),
    ];
    for c in checks {
        let name = c.name().to_string();
        r.register(name, c).expect("builtin names are distinct");
    }
    r
}
