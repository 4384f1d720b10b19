use std::io::Read;
use std::path::PathBuf;

use binedge::generators::{all_labeled, build_all, parse_fraction, random_corpus, sierpinski, GraphSpec};
use binedge::io::parse_graphs;
use binedge::{Error, Graph, Result};
use clap::Args;

/// Where the graphs of a run come from. Sources are concatenated in the
/// order: input file, `--graph`, `--sierpinski`, `--exhaustive`, `--random`.
/// With no source at all, graphs are read from stdin.
#[derive(Args, Debug, Clone)]
pub struct CorpusArgs {
    /// graph6 lines or an edge list; `-` reads stdin
    pub input: Option<PathBuf>,

    /// A generator spec such as `net`, `path 5` or `gnp:8:1/2:7` (repeatable)
    #[arg(long = "graph", value_name = "SPEC")]
    pub graphs: Vec<String>,

    /// Sierpinski levels, `K` or `A..B`
    #[arg(long, value_name = "LEVELS")]
    pub sierpinski: Option<String>,

    /// Every labeled graph on 0..=N vertices
    #[arg(long, value_name = "N")]
    pub exhaustive: Option<usize>,

    /// COUNT seeded random graphs
    #[arg(long, value_name = "COUNT")]
    pub random: Option<usize>,

    /// Edge probability of the random graphs
    #[arg(long, value_name = "NUM/DEN", default_value = "1/2")]
    pub gnp: String,

    /// Vertex-count range of the random graphs
    #[arg(long, value_name = "A..B", default_value = "1..7")]
    pub n_range: String,

    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

fn parse_range(text: &str, what: &str) -> Result<(usize, usize)> {
    let bad = || Error::Input(format!("`{text}` is not a {what} (`K` or `A..B`)"));
    let num = |s: &str| s.trim().parse::<usize>().map_err(|_| bad());
    let (a, b) = match text.split_once("..") {
        Some((a, b)) => (num(a)?, num(b.trim_start_matches('='))?),
        None => {
            let k = num(text)?;
            (k, k)
        }
    };
    if a > b {
        return Err(bad());
    }
    Ok((a, b))
}

impl CorpusArgs {
    pub fn has_generated_source(&self) -> bool {
        !self.graphs.is_empty() || self.sierpinski.is_some() || self.exhaustive.is_some() || self.random.is_some()
    }

    pub fn load(&self) -> Result<Vec<Graph>> {
        let mut out = Vec::new();
        match &self.input {
            Some(p) if p.as_os_str() == "-" => out.extend(read_stdin()?),
            Some(p) => {
                let text = std::fs::read_to_string(p)
                    .map_err(|e| Error::Input(format!("cannot read {}: {e}", p.display())))?;
                out.extend(parse_graphs(&text)?);
            }
            None if !self.has_generated_source() => out.extend(read_stdin()?),
            None => {}
        }
        for spec in &self.graphs {
            out.extend(build_all(&GraphSpec::parse(spec)?)?);
        }
        if let Some(levels) = &self.sierpinski {
            let (a, b) = parse_range(levels, "level range")?;
            for k in a..=b {
                out.push(sierpinski(k)?);
            }
        }
        if let Some(n) = self.exhaustive {
            for k in 0..=n {
                out.extend(all_labeled(k)?);
            }
        }
        if let Some(count) = self.random {
            let (num, den) = parse_fraction(&self.gnp)?;
            let (a, b) = parse_range(&self.n_range, "vertex range")?;
            out.extend(random_corpus(count, a, b, num, den, self.seed)?);
        }
        Ok(out)
    }
}

fn read_stdin() -> Result<Vec<Graph>> {
    let mut text = String::new();
    std::io::stdin().read_to_string(&mut text).map_err(|e| Error::Input(format!("cannot read stdin: {e}")))?;
    parse_graphs(&text)
}
