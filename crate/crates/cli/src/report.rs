use binedge::compat::checks::{GapHit, Violation};
use binedge::invariants::{eta, longest_induced_path, maximal_cliques, SolverLimits};
use binedge::io::encode_graph6;
use binedge::regularity::{Monomial, RegularityResult};
use binedge::{Graph, Result};
use serde::Serialize;

pub const SCHEMA: &str = "binedge-report/1";

/// One report object per run.
#[derive(Serialize)]
pub struct Report<T: Serialize> {
    pub schema: &'static str,
    pub tool: &'static str,
    pub version: &'static str,
    pub command: Vec<String>,
    pub status: &'static str,
    pub graphs: usize,
    pub results: Vec<T>,
    pub violations: Vec<ViolationOut>,
    pub notes: Vec<String>,
    pub timing_ms: f64,
}

impl<T: Serialize> Report<T> {
    pub fn new(results: Vec<T>, graphs: usize) -> Self {
        Report {
            schema: SCHEMA,
            tool: "binedge",
            version: env!("CARGO_PKG_VERSION"),
            command: std::env::args().collect(),
            status: "ok",
            graphs,
            results,
            violations: Vec::new(),
            notes: Vec::new(),
            timing_ms: 0.0,
        }
    }
}

#[derive(Serialize)]
pub struct ViolationOut {
    pub check: String,
    pub graph6: String,
    pub vertex: Option<usize>,
    pub detail: String,
}

impl From<&Violation> for ViolationOut {
    fn from(v: &Violation) -> Self {
        ViolationOut {
            check: v.check.clone(),
            graph6: encode_graph6(&v.graph),
            vertex: v.vertex,
            detail: v.detail.clone(),
        }
    }
}

/// Witness subset `W` split into the vertices of its `x` and `y` variables.
#[derive(Serialize)]
pub struct RegOut {
    pub value: usize,
    pub witness_x: Vec<usize>,
    pub witness_y: Vec<usize>,
    pub homology_degree: i64,
    pub fields: Vec<u64>,
}

impl RegOut {
    pub fn new(n: usize, r: &RegularityResult) -> Self {
        let pick = |offset: usize| (0..n).filter(|&v| witness_has(r.witness, offset + v)).collect();
        RegOut {
            value: r.value,
            witness_x: pick(0),
            witness_y: pick(n),
            homology_degree: r.degree,
            fields: r.fields_used.clone(),
        }
    }
}

fn witness_has(w: Monomial, var: usize) -> bool {
    w >> var & 1 == 1
}

#[derive(Serialize)]
pub struct InvariantsOut {
    pub index: usize,
    pub graph6: String,
    pub n: usize,
    pub m: usize,
    pub iv: usize,
    pub non_free: Vec<usize>,
    #[serde(rename = "L")]
    pub l: usize,
    pub induced_paths: Vec<Vec<usize>>,
    pub eta: usize,
    pub eta_edges: Vec<[usize; 2]>,
    pub c: usize,
    pub maximal_cliques: Vec<Vec<usize>>,
    pub reg: Option<RegOut>,
}

impl InvariantsOut {
    pub fn compute(index: usize, g: &Graph, limits: SolverLimits, reg: Option<&RegularityResult>) -> Result<Self> {
        let (l, paths) = longest_induced_path(g, limits)?;
        let (e, set) = eta(g, limits)?;
        let cliques = maximal_cliques(g);
        Ok(InvariantsOut {
            index,
            graph6: encode_graph6(g),
            n: g.n(),
            m: g.edge_count(),
            iv: g.internal_vertex_count(),
            non_free: g.non_free_vertices().to_vec(),
            l,
            induced_paths: paths,
            eta: e,
            eta_edges: set.edges().iter().map(|x| [x.u, x.v]).collect(),
            c: cliques.len(),
            maximal_cliques: cliques.iter().map(|q| q.to_vec()).collect(),
            reg: reg.map(|r| RegOut::new(g.n(), r)),
        })
    }

    pub fn render(&self) -> String {
        let mut s = format!(
            "graph {} {}  n={} m={} iv={} L={} eta={} c={}",
            self.index, self.graph6, self.n, self.m, self.iv, self.l, self.eta, self.c
        );
        if let Some(r) = &self.reg {
            s.push_str(&format!(" reg={}", r.value));
        }
        s.push_str(&format!("\n  non-free vertices: {:?}", self.non_free));
        let paths: Vec<String> = self.induced_paths.iter().map(|p| join(p, "-")).collect();
        s.push_str(&format!("\n  longest induced paths: {}", paths.join("  ")));
        let edges: Vec<String> = self.eta_edges.iter().map(|e| format!("{}-{}", e[0], e[1])).collect();
        s.push_str(&format!("\n  clique-disjoint edges: {}", edges.join(" ")));
        let cliques: Vec<String> = self.maximal_cliques.iter().map(|q| format!("{{{}}}", join(q, ","))).collect();
        s.push_str(&format!("\n  maximal cliques: {}", cliques.join(" ")));
        if let Some(r) = &self.reg {
            s.push_str(&format!("\n  reg witness: x{:?} y{:?}", r.witness_x, r.witness_y));
        }
        s
    }
}

pub fn join(xs: &[usize], sep: &str) -> String {
    xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(sep)
}

#[derive(Serialize)]
pub struct RegResultOut {
    pub index: usize,
    pub graph6: String,
    pub n: usize,
    pub reg: RegOut,
}

#[derive(Serialize)]
pub struct GapOut {
    pub rank: usize,
    pub index: usize,
    pub graph6: String,
    pub n: usize,
    pub gap: i64,
    #[serde(rename = "L")]
    pub l: usize,
    pub eta: usize,
    pub c: usize,
    pub reg: Option<usize>,
}

impl GapOut {
    pub fn new(rank: usize, hit: &GapHit) -> Self {
        GapOut {
            rank,
            index: hit.index,
            graph6: encode_graph6(&hit.graph),
            n: hit.graph.n(),
            gap: hit.gap,
            l: hit.values.l,
            eta: hit.values.eta,
            c: hit.values.c,
            reg: hit.values.reg,
        }
    }
}

#[derive(Serialize)]
pub struct GenOut {
    pub graph6: String,
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
}
