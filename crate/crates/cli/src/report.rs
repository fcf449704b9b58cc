use serde_json::{json, Value};

use orispec_core::poly::rational_string;
use orispec_core::{encode_graph6, AlgebraicRoot, Graph, SpanningTree};

pub const SCHEMA: &str = "orispec/1";

/// What a command produced. `defect` is set when the output itself
/// contradicts a theorem (exit code 2 after printing).
pub struct Output {
    pub text: String,
    pub json: Vec<Value>,
    pub defect: bool,
}

impl Output {
    pub fn new() -> Output {
        Output { text: String::new(), json: Vec::new(), defect: false }
    }

    pub fn line(&mut self, s: impl AsRef<str>) {
        self.text.push_str(s.as_ref());
        self.text.push('\n');
    }

    /// Adds a JSON record tagged with the schema and command.
    pub fn record(&mut self, command: &str, mut v: Value) {
        if let Value::Object(map) = &mut v {
            map.insert("schema".into(), SCHEMA.into());
            map.insert("command".into(), command.into());
        }
        self.json.push(v);
    }
}

/// Numeric display precision derived from `--eps`.
#[derive(Clone, Copy)]
pub struct Display {
    pub decimals: usize,
}

impl Display {
    pub fn from_eps(eps: f64) -> Display {
        let d = if eps > 0.0 && eps.is_finite() { (-eps.log10()).ceil().max(0.0) as usize } else { 6 };
        Display { decimals: d.min(15) }
    }

    pub fn num(&self, x: f64) -> String {
        // avoid "-0.0000"
        let s = format!("{:.*}", self.decimals, x);
        if s.trim_start_matches('-').chars().all(|c| c == '0' || c == '.') {
            s.trim_start_matches('-').to_string()
        } else {
            s
        }
    }

    /// `=v` for exact roots, `≈v` otherwise.
    pub fn root(&self, r: &AlgebraicRoot) -> String {
        match r.exact_value() {
            Some(v) => format!("={}", rational_string(v)),
            None => format!("≈{}", self.num(r.approx())),
        }
    }

    pub fn root_json(&self, r: &AlgebraicRoot) -> Value {
        json!({ "root": r, "decimal": self.num(r.approx()) })
    }
}

pub fn graph_json(g: &Graph) -> Value {
    json!({
        "n": g.n(),
        "edges": g.edges(),
        "graph6": encode_graph6(g).ok(),
    })
}

pub fn edges_text(edges: &[(usize, usize)]) -> String {
    if edges.is_empty() {
        return "(none)".into();
    }
    edges.iter().map(|(u, v)| format!("{u}-{v}")).collect::<Vec<_>>().join(" ")
}

pub fn tree_json(t: &SpanningTree) -> Value {
    json!({ "root": t.root(), "edges": t.edges() })
}
