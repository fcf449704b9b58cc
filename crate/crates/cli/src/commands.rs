use anyhow::{bail, Result};
use serde_json::{json, Value};

use orispec_core::explore::{conjecture_report_with, generate_corpus_with, guo_mohar_sweep, theorem_sweep};
use orispec_core::family::{
    audit_interlacing_family_with, expected_charpoly_with, greedy_orientation_with, SumMethod,
};
use orispec_core::hermitian::{largest_eigenvalue, smallest_eigenvalue, spectral_radius_of};
use orispec_core::switching::classify_partial_orientations_with;
use orispec_core::*;

use crate::input::{self, Format};
use crate::report::{edges_text, graph_json, tree_json, Display, Output};

/// Settings shared by every command.
pub struct Ctx {
    pub graph: Option<String>,
    pub format: Format,
    pub tree: String,
    pub limits: Limits,
    pub display: Display,
    pub eps: f64,
}

impl Ctx {
    fn graph_arg(&self) -> Result<&str> {
        match &self.graph {
            Some(g) => Ok(g),
            None => bail!("no input graph; pass --graph <path|inline|->"),
        }
    }

    fn graph(&self) -> Result<Graph> {
        input::load_graph(self.graph_arg()?, self.format)
    }

    fn mixed(&self) -> Result<MixedGraph> {
        input::load_mixed(self.graph_arg()?, self.format)
    }

    fn trees(&self, g: &Graph) -> Result<Vec<SpanningTree>> {
        input::trees(g, &self.tree, &self.limits)
    }
}

pub fn matching(ctx: &Ctx) -> Result<Output> {
    let g = ctx.graph()?;
    if g.n() == 0 {
        bail!("graph has no vertices");
    }
    let d = ctx.display;
    let counts = matching_counts(&g);
    let mu = matching_polynomial(&g);
    let rho = matching_radius(&g);
    let mut out = Output::new();
    out.line(format!("{mu}, rho{}", d.root(&rho)));
    let ks: Vec<String> = counts.counts().iter().map(ToString::to_string).collect();
    out.line(format!("m_k: {}", ks.join(" ")));
    out.record(
        "matching",
        json!({
            "graph": graph_json(&g),
            "counts": counts,
            "polynomial": mu,
            "polynomial_text": mu.to_string(),
            "rho": d.root_json(&rho),
        }),
    );
    Ok(out)
}

/// The input as a mixed graph, or its partial orientation when `--signs` is given.
fn target(ctx: &Ctx, signs: Option<&str>) -> Result<(MixedGraph, Value)> {
    match signs {
        None => {
            let m = ctx.mixed()?;
            let v = json!({ "graph": graph_json(m.graph()), "mixed": m.to_text() });
            Ok((m, v))
        }
        Some(s) => {
            let g = ctx.graph()?;
            let t = input::single_tree(&g, &ctx.tree, &ctx.limits)?;
            let sv = input::signs(&g, &t, s)?;
            let m = build_mixed(&g, &t, &sv)?;
            let v = json!({
                "graph": graph_json(&g),
                "tree": tree_json(&t),
                "signs": sv,
                "mixed": m.to_text(),
            });
            Ok((m, v))
        }
    }
}

pub fn charpoly_cmd(ctx: &Ctx, signs: Option<&str>) -> Result<Output> {
    let (m, mut v) = target(ctx, signs)?;
    if m.n() == 0 {
        bail!("graph has no vertices");
    }
    let d = ctx.display;
    let p = charpoly(&m);
    let hi = largest_eigenvalue(&p);
    let lo = smallest_eigenvalue(&p);
    let rho = spectral_radius_of(&p);
    let mut out = Output::new();
    out.line(p.to_string());
    out.line(format!("lambda_max{} lambda_min{} rho{}", d.root(&hi), d.root(&lo), d.root(&rho)));
    v["charpoly"] = json!(p);
    v["charpoly_text"] = json!(p.to_string());
    v["lambda_max"] = d.root_json(&hi);
    v["lambda_min"] = d.root_json(&lo);
    v["rho"] = d.root_json(&rho);
    out.record("charpoly", v);
    Ok(out)
}

pub fn eigen(ctx: &Ctx, signs: Option<&str>) -> Result<Output> {
    let (m, mut v) = target(ctx, signs)?;
    if m.n() == 0 {
        bail!("graph has no vertices");
    }
    let d = ctx.display;
    let h = hermitian_adjacency(&m);
    let ev = eigenvalues_numeric(&h, ctx.eps.min(1e-10));
    let p = h.charpoly();
    let exact = real_roots(&p)?;
    let mut out = Output::new();
    out.line(ev.iter().map(|x| d.num(*x)).collect::<Vec<_>>().join(" "));
    out.line(format!("lambda_max{} lambda_min{}", d.root(&lambda_max(&h)), d.root(&lambda_min(&h))));
    v["charpoly"] = json!(p);
    v["eigenvalues"] = json!(ev.iter().map(|x| d.num(*x)).collect::<Vec<_>>());
    v["roots"] = json!(exact);
    v["matrix"] = h.to_json();
    out.record("eigen", v);
    Ok(out)
}

pub fn find_orientation(ctx: &Ctx, method: SumMethod) -> Result<Output> {
    let g = ctx.graph()?;
    let d = ctx.display;
    let mut out = Output::new();
    for t in ctx.trees(&g)? {
        let c = greedy_orientation_with(&g, &t, method, &ctx.limits)?;
        out.line(format!("tree: {}", edges_text(t.edges())));
        for (i, l) in c.trace.iter().enumerate() {
            out.line(format!(
                "level {}: edge {}-{} +: {} (max{}) -: {} (max{}) chose {}",
                i + 1,
                l.edge.0,
                l.edge.1,
                l.plus_sum,
                d.root(&l.plus_root),
                l.minus_sum,
                d.root(&l.minus_root),
                if l.chosen > 0 { '+' } else { '-' },
            ));
        }
        out.line(format!("signs: {}", c.signs));
        out.line(format!("charpoly: {}", c.charpoly));
        out.line(format!("lambda_max{} {} rho{}", d.root(&c.lambda_max), c.verdict, d.root(&c.rho)));
        out.line(format!("verdict: {}", c.verdict));
        out.record("find-orientation", json!({ "certificate": c, "mixed": c.mixed().to_text() }));
    }
    Ok(out)
}

pub fn verify_expectation(ctx: &Ctx) -> Result<Output> {
    let g = ctx.graph()?;
    let mu = matching_polynomial(&g);
    let mut out = Output::new();
    for t in ctx.trees(&g)? {
        let e = expected_charpoly_with(&g, &t, &ctx.limits)?;
        let pass = e == mu;
        out.defect |= !pass;
        out.line(format!(
            "{} tree {}: expected {} matching {}",
            if pass { "PASS" } else { "FAIL" },
            edges_text(t.edges()),
            e,
            mu
        ));
        out.record(
            "verify-expectation",
            json!({
                "graph": graph_json(&g),
                "tree": tree_json(&t),
                "expected_charpoly": e,
                "matching_polynomial": mu,
                "pass": pass,
            }),
        );
    }
    Ok(out)
}

pub fn audit_family(ctx: &Ctx) -> Result<Output> {
    let g = ctx.graph()?;
    let mut out = Output::new();
    for t in ctx.trees(&g)? {
        let r = audit_interlacing_family_with(&g, &t, &ctx.limits)?;
        out.defect |= !r.passed();
        out.line(format!(
            "{} tree {}: m={} nodes={} violations={}",
            if r.passed() { "PASS" } else { "FAIL" },
            edges_text(t.edges()),
            r.m,
            r.nodes,
            r.violations.len()
        ));
        for v in &r.violations {
            out.line(format!("  prefix {}: {:?}", v.prefix, v.check));
        }
        out.record("audit-family", json!({ "graph": graph_json(&g), "tree": tree_json(&t), "report": r, "pass": r.passed() }));
    }
    Ok(out)
}

pub fn switching(ctx: &Ctx, other: &str) -> Result<Output> {
    let a = ctx.mixed()?;
    let b = input::load_mixed(other, ctx.format)?;
    let cert = switching_equivalent(&a, &b)?;
    let mut out = Output::new();
    match &cert {
        Some(c) => {
            // never trust a certificate that does not reproduce the target
            if c.apply(&a)? != b {
                bail!(Error::Defect("switching certificate does not map the first graph to the second".into()));
            }
            let ph: Vec<String> = c.map.phase().iter().map(ToString::to_string).collect();
            out.line("equivalent");
            out.line(format!("phases: {}", ph.join(" ")));
            out.line(format!("converse: {}", if c.used_converse { "yes" } else { "no" }));
        }
        None => out.line("not equivalent"),
    }
    out.record(
        "switching",
        json!({
            "first": a.to_text(),
            "second": b.to_text(),
            "equivalent": cert.is_some(),
            "certificate": cert,
        }),
    );
    Ok(out)
}

pub fn classify(ctx: &Ctx) -> Result<Output> {
    let g = ctx.graph()?;
    let d = ctx.display;
    let mut out = Output::new();
    for t in ctx.trees(&g)? {
        let classes = classify_partial_orientations_with(&g, &t, &ctx.limits)?;
        out.line(format!("tree {}: {} classes", edges_text(t.edges()), classes.len()));
        let mut recs = Vec::new();
        for (i, c) in classes.iter().enumerate() {
            let p = charpoly(&build_mixed(&g, &t, &c[0])?);
            let rho = spectral_radius_of(&p);
            let members: Vec<String> = c.iter().map(ToString::to_string).collect();
            out.line(format!("  class {}: {} rho{} members {}", i + 1, p, d.root(&rho), members.join(" ")));
            recs.push(json!({ "charpoly": p, "rho": d.root_json(&rho), "members": c }));
        }
        out.record("classify", json!({ "graph": graph_json(&g), "tree": tree_json(&t), "classes": recs }));
    }
    Ok(out)
}

pub fn lemma4(ctx: &Ctx) -> Result<Output> {
    let g = ctx.graph()?;
    let mut out = Output::new();
    for t in ctx.trees(&g)? {
        let un = equiv_to_unoriented(&g, &t)?;
        let or = equiv_to_oriented(&g, &t)?;
        out.line(format!("tree {}: unoriented: {un}, oriented: {or}", edges_text(t.edges())));
        out.record(
            "lemma4",
            json!({ "graph": graph_json(&g), "tree": tree_json(&t), "unoriented": un, "oriented": or }),
        );
    }
    Ok(out)
}

pub fn explore(ctx: &Ctx, max_n: usize) -> Result<Output> {
    let corpus = match &ctx.graph {
        Some(_) => vec![ctx.graph()?],
        None => generate_corpus_with(max_n, &ctx.limits)?,
    };
    let d = ctx.display;
    let mut out = Output::new();
    for g in &corpus {
        if !g.is_connected() {
            bail!("explore needs connected graphs");
        }
        let sweep = theorem_sweep(g, &ctx.limits)?;
        out.defect |= !sweep.consistent();
        // a graph over the search guards keeps its theorem record and skips the tiers
        let conj = match conjecture_report_with(g, &ctx.limits) {
            Ok(c) if g.edge_count() > 0 => Some(c),
            Ok(_) => None,
            Err(Error::Guard { .. }) if ctx.graph.is_none() => None,
            Err(e) => return Err(e.into()),
        };
        let mut line = format!(
            "{} n={} e={} theorems={}",
            sweep.graph,
            g.n(),
            g.edge_count(),
            if sweep.consistent() { "ok" } else { "DEFECT" }
        );
        if conj.is_none() && g.edge_count() > 0 {
            line.push_str(" tiers=skipped");
        }
        if let Some(c) = &conj {
            line.push_str(&format!(
                " complete{} partial{} {}",
                d.root(&c.complete.rho),
                d.root(&c.partial.rho),
                c.verdict
            ));
            if let Some(m) = &c.mixed {
                line.push_str(&format!(" mixed{}", d.root(&m.rho)));
            }
            if !c.consistent {
                line.push_str(" partial-beats-complete");
            }
        }
        out.line(line);
        out.record("explore", json!({ "record": "graph", "theorems": sweep, "conjecture": conj }));
    }
    let gm = guo_mohar_sweep(&corpus, &ctx.limits);
    out.defect |= !gm.violations.is_empty();
    out.line(format!(
        "guo-mohar: graphs={} checked={} violations={}",
        gm.graphs,
        gm.checked,
        gm.violations.len()
    ));
    for v in &gm.violations {
        out.line(format!("  {}: {}", v.graph, v.mixed.replace('\n', "; ")));
    }
    out.record("explore", json!({ "record": "summary", "guo_mohar": gm }));
    Ok(out)
}
