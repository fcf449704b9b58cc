use std::io::Read;
use std::path::Path;

use anyhow::{bail, Context, Result};
use clap::ValueEnum;

use orispec_core::graph::enumerate_spanning_trees_with_limits;
use orispec_core::{
    bfs_spanning_tree, cotree_edges, parse_edge_list, parse_graph6, parse_mixed, Graph, Limits, MixedGraph,
    SignVector, SpanningTree,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Edgelist,
    Graph6,
    Mixed,
}

/// `-` reads stdin, an existing path reads the file, anything else is inline
/// text with `;` standing for a newline.
pub fn read_source(arg: &str) -> Result<String> {
    if arg == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).context("reading stdin")?;
        return Ok(s);
    }
    let p = Path::new(arg);
    if p.is_file() {
        return std::fs::read_to_string(p).with_context(|| format!("reading {arg}"));
    }
    Ok(arg.replace(';', "\n"))
}

pub fn load_mixed(arg: &str, format: Format) -> Result<MixedGraph> {
    let text = read_source(arg)?;
    let d = match format {
        Format::Edgelist => MixedGraph::undirected(parse_edge_list(&text)?),
        Format::Graph6 => MixedGraph::undirected(parse_graph6(text.trim())?),
        Format::Mixed => parse_mixed(&text)?,
    };
    Ok(d)
}

/// The underlying graph; arcs in mixed input are ignored.
pub fn load_graph(arg: &str, format: Format) -> Result<Graph> {
    Ok(load_mixed(arg, format)?.graph().clone())
}

/// `bfs:<root>`, `all`, or explicit edges such as `0-1,1-2,2-3` (rooted at 0).
pub fn trees(g: &Graph, spec: &str, limits: &Limits) -> Result<Vec<SpanningTree>> {
    let spec = spec.trim();
    if spec == "all" {
        return Ok(enumerate_spanning_trees_with_limits(g, limits)?);
    }
    if let Some(r) = spec.strip_prefix("bfs:") {
        let root: usize = r.trim().parse().with_context(|| format!("bad tree root {r:?}"))?;
        if root >= g.n() {
            bail!("tree root {root} is not a vertex (n={})", g.n());
        }
        return Ok(vec![bfs_spanning_tree(g, root)?]);
    }
    let mut edges = Vec::new();
    for tok in spec.split([',', ' ']).filter(|t| !t.is_empty()) {
        let (a, b) = tok
            .split_once('-')
            .with_context(|| format!("bad tree edge {tok:?}, expected u-v"))?;
        let a: usize = a.trim().parse().with_context(|| format!("bad tree edge {tok:?}"))?;
        let b: usize = b.trim().parse().with_context(|| format!("bad tree edge {tok:?}"))?;
        edges.push((a, b));
    }
    Ok(vec![SpanningTree::from_edges(g, &edges, 0)?])
}

pub fn single_tree(g: &Graph, spec: &str, limits: &Limits) -> Result<SpanningTree> {
    let mut ts = trees(g, spec, limits)?;
    if ts.len() != 1 {
        bail!("this command needs a single tree, not {spec:?}");
    }
    Ok(ts.remove(0))
}

/// `+-+` style, one character per cotree edge in sorted order.
pub fn signs(g: &Graph, t: &SpanningTree, text: &str) -> Result<SignVector> {
    let cotree = cotree_edges(g, t);
    let s: Vec<i8> = text
        .chars()
        .filter(|c| !c.is_whitespace() && *c != ',')
        .map(|c| match c {
            '+' => Ok(1),
            '-' => Ok(-1),
            _ => bail!("bad sign {c:?}, expected + or -"),
        })
        .collect::<Result<_>>()?;
    if s.len() != cotree.len() {
        bail!("{} signs given for {} cotree edges", s.len(), cotree.len());
    }
    Ok(SignVector::new(cotree, s)?)
}
