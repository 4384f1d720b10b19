//! Graph constructors: named examples, families, and corpora.
//!
//! `sierpinski(k)` is the level-`k` subdivided triangle obtained from a
//! triangle by replacing every triangle with a triforce (a triangle cut by its
//! side midpoints into four) `k` times, middle triangles included. The result
//! is the triangular grid of side `2^k`: `(2^k+1)(2^k+2)/2` vertices and `4^k`
//! triangles, all of them maximal cliques. Level 1 is the triforce, with
//! `c = 4`, `η = 3`, `L = 3`.
//!
//! Vertex labels of the grid go row by row from the apex: row `r` holds
//! `r + 1` vertices `(r, 0), …, (r, r)` and vertex `(r, c)` gets id
//! `r(r+1)/2 + c`.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::bitset::MAX_VERTICES;
use crate::error::{Error, Result};
use crate::graph::Graph;

pub const MAX_SIERPINSKI_LEVEL: usize = 6;
pub const MAX_EXHAUSTIVE_N: usize = 7;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GraphSpec {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    Union(Vec<GraphSpec>),
    /// A triangle with one pendant edge at each corner.
    Net,
    /// Four triangles glued in a strip; maximal cliques `{0,1,2}`,
    /// `{1,2,3}`, `{2,3,4}`, `{3,4,5}`.
    Fig2Closed,
    Sierpinski(usize),
    /// `G(n, p)` with `p = num/den`, fully determined by `seed`.
    Gnp {
        n: usize,
        num: u64,
        den: u64,
        seed: u64,
    },
    /// Every labeled graph on `n` vertices.
    AllLabeled(usize),
}

impl GraphSpec {
    pub fn is_stream(&self) -> bool {
        matches!(self, GraphSpec::AllLabeled(_))
    }

    /// Parses `name arg…` or the compact `name:arg:…` form. Union members use
    /// the compact form: `union complete:3 complete:2`.
    pub fn parse(text: &str) -> Result<GraphSpec> {
        let tokens: Vec<&str> = text.split_whitespace().collect();
        match tokens.as_slice() {
            [] => Err(Error::Input("empty graph spec".into())),
            ["union", members @ ..] => {
                if members.is_empty() {
                    return Err(Error::Input("union needs at least one member".into()));
                }
                members.iter().map(|m| GraphSpec::parse(m)).collect::<Result<_>>().map(GraphSpec::Union)
            }
            [single] if single.contains(':') => {
                let parts: Vec<&str> = single.split(':').collect();
                GraphSpec::from_parts(parts[0], &parts[1..])
            }
            [name, args @ ..] => GraphSpec::from_parts(name, args),
        }
    }

    fn from_parts(name: &str, args: &[&str]) -> Result<GraphSpec> {
        let int = |i: usize| -> Result<u64> {
            let s = args.get(i).ok_or_else(|| Error::Input(format!("`{name}` is missing argument {}", i + 1)))?;
            s.parse().map_err(|_| Error::Input(format!("`{s}` is not a non-negative integer")))
        };
        let arity = |k: usize| -> Result<()> {
            if args.len() != k {
                return Err(Error::Input(format!("`{name}` takes {k} argument(s), got {}", args.len())));
            }
            Ok(())
        };
        let spec = match name {
            "path" => {
                arity(1)?;
                GraphSpec::Path(int(0)? as usize)
            }
            "cycle" => {
                arity(1)?;
                GraphSpec::Cycle(int(0)? as usize)
            }
            "complete" => {
                arity(1)?;
                GraphSpec::Complete(int(0)? as usize)
            }
            "net" => {
                arity(0)?;
                GraphSpec::Net
            }
            "fig2-closed" => {
                arity(0)?;
                GraphSpec::Fig2Closed
            }
            "sierpinski" => {
                arity(1)?;
                GraphSpec::Sierpinski(int(0)? as usize)
            }
            "all" | "all-labeled" => {
                arity(1)?;
                GraphSpec::AllLabeled(int(0)? as usize)
            }
            "gnp" => {
                arity(3)?;
                let (num, den) = parse_fraction(args[1])?;
                GraphSpec::Gnp { n: int(0)? as usize, num, den, seed: int(2)? }
            }
            other => return Err(Error::Input(format!("unknown graph family `{other}`"))),
        };
        Ok(spec)
    }

    fn compact(&self) -> String {
        match self {
            GraphSpec::Path(n) => format!("path:{n}"),
            GraphSpec::Cycle(n) => format!("cycle:{n}"),
            GraphSpec::Complete(n) => format!("complete:{n}"),
            GraphSpec::Net => "net".into(),
            GraphSpec::Fig2Closed => "fig2-closed".into(),
            GraphSpec::Sierpinski(k) => format!("sierpinski:{k}"),
            GraphSpec::AllLabeled(n) => format!("all:{n}"),
            GraphSpec::Gnp { n, num, den, seed } => format!("gnp:{n}:{num}/{den}:{seed}"),
            GraphSpec::Union(members) => {
                let inner: Vec<String> = members.iter().map(|m| m.compact()).collect();
                format!("union {}", inner.join(" "))
            }
        }
    }
}

impl fmt::Display for GraphSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.compact())
    }
}

/// Parses `NUM/DEN` with `0 ≤ NUM ≤ DEN`, `DEN > 0`.
pub fn parse_fraction(text: &str) -> Result<(u64, u64)> {
    let bad = || Error::Input(format!("`{text}` is not a probability NUM/DEN"));
    let (a, b) = text.split_once('/').ok_or_else(bad)?;
    let num: u64 = a.parse().map_err(|_| bad())?;
    let den: u64 = b.parse().map_err(|_| bad())?;
    if den == 0 || num > den {
        return Err(bad());
    }
    Ok((num, den))
}

/// Builds a single graph. Streams (`AllLabeled`) are rejected; use
/// [`build_all`].
pub fn build(spec: &GraphSpec) -> Result<Graph> {
    match spec {
        GraphSpec::Path(n) => path(*n),
        GraphSpec::Cycle(n) => cycle(*n),
        GraphSpec::Complete(n) => Graph::complete(*n),
        GraphSpec::Union(members) => {
            let mut g = Graph::empty(0)?;
            for m in members {
                g = g.disjoint_union(&build(m)?)?;
            }
            Ok(g)
        }
        GraphSpec::Net => net(),
        GraphSpec::Fig2Closed => fig2_closed(),
        GraphSpec::Sierpinski(k) => sierpinski(*k),
        GraphSpec::Gnp { n, num, den, seed } => gnp(*n, *num, *den, *seed),
        GraphSpec::AllLabeled(_) => Err(Error::Input(format!("`{spec}` describes a stream of graphs"))),
    }
}

/// Every graph a spec describes, in a deterministic order.
pub fn build_all(spec: &GraphSpec) -> Result<Box<dyn Iterator<Item = Graph>>> {
    match spec {
        GraphSpec::AllLabeled(n) => Ok(Box::new(all_labeled(*n)?)),
        other => Ok(Box::new(std::iter::once(build(other)?))),
    }
}

pub fn path(n: usize) -> Result<Graph> {
    Graph::from_edge_list(n, (1..n).map(|i| (i - 1, i)))
}

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::Input(format!("a cycle needs at least 3 vertices, got {n}")));
    }
    Graph::from_edge_list(n, (0..n).map(|i| (i, (i + 1) % n)))
}

pub fn net() -> Result<Graph> {
    Graph::from_edge_list(6, [(0, 1), (1, 2), (0, 2), (3, 0), (4, 1), (5, 2)])
}

pub fn fig2_closed() -> Result<Graph> {
    Graph::from_edge_list(6, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3), (2, 4), (3, 4), (3, 5), (4, 5)])
}

/// Number of vertices of `sierpinski(level)`.
pub fn sierpinski_vertex_count(level: usize) -> usize {
    let side = 1usize << level;
    (side + 1) * (side + 2) / 2
}

pub fn sierpinski(level: usize) -> Result<Graph> {
    if level > MAX_SIERPINSKI_LEVEL {
        return Err(Error::Input(format!("sierpinski level {level} exceeds {MAX_SIERPINSKI_LEVEL}")));
    }
    let n = sierpinski_vertex_count(level);
    if n > MAX_VERTICES {
        return Err(Error::Resource(format!(
            "sierpinski level {level} has {n} vertices; the capacity is {MAX_VERTICES}"
        )));
    }
    let side = 1usize << level;
    let id = |r: usize, c: usize| r * (r + 1) / 2 + c;
    let mut edges = Vec::new();
    for r in 0..=side {
        for c in 0..=r {
            if c < r {
                edges.push((id(r, c), id(r, c + 1)));
            }
            if r < side {
                edges.push((id(r, c), id(r + 1, c)));
                edges.push((id(r, c), id(r + 1, c + 1)));
            }
        }
    }
    Graph::from_edge_list(n, edges)
}

pub fn gnp(n: usize, num: u64, den: u64, seed: u64) -> Result<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    gnp_with(n, num, den, &mut rng)
}

pub(crate) fn gnp_with(n: usize, num: u64, den: u64, rng: &mut impl Rng) -> Result<Graph> {
    if den == 0 || num > den {
        return Err(Error::Input(format!("{num}/{den} is not a probability")));
    }
    let mut edges = Vec::new();
    for a in 0..n {
        for b in (a + 1)..n {
            if rng.gen_range(0..den) < num {
                edges.push((a, b));
            }
        }
    }
    Graph::from_edge_list(n, edges)
}

/// All `2^(n choose 2)` labeled graphs on `n ≤ 7` vertices; bit `k` of the
/// index selects the `k`-th pair in the order `(0,1), (0,2), …, (n-2,n-1)`.
pub fn all_labeled(n: usize) -> Result<impl Iterator<Item = Graph>> {
    if n > MAX_EXHAUSTIVE_N {
        return Err(Error::Resource(format!(
            "exhaustive enumeration is capped at {MAX_EXHAUSTIVE_N} vertices, got {n}"
        )));
    }
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|a| ((a + 1)..n).map(move |b| (a, b))).collect();
    let count = 1u64 << pairs.len();
    Ok((0..count).map(move |mask| {
        let edges = pairs.iter().enumerate().filter(|(k, _)| mask >> k & 1 == 1).map(|(_, &e)| e);
        Graph::from_edge_list(n, edges).expect("pairs are in range")
    }))
}

/// A seeded corpus of `count` random graphs. Each graph draws its vertex count
/// uniformly from `min_n..=max_n`, then its edges with probability `num/den`.
pub fn random_corpus(count: usize, min_n: usize, max_n: usize, num: u64, den: u64, seed: u64) -> Result<Vec<Graph>> {
    if min_n > max_n {
        return Err(Error::Input(format!("empty vertex range {min_n}..={max_n}")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = rng.gen_range(min_n..=max_n);
            gnp_with(n, num, den, &mut rng)
        })
        .collect()
}
