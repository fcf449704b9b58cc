use super::{norm_edge, EdgeState, Graph, MixedGraph};
use crate::error::{Error, Result};

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

/// Splits input into numbered, trimmed, non-empty, non-comment lines.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty())
}

fn parse_header(line: &str) -> Option<&str> {
    line.strip_prefix("n=").or_else(|| line.strip_prefix("n ="))
}

fn parse_label(tok: &str, line: usize) -> Result<usize> {
    tok.parse::<usize>()
        .map_err(|_| parse_err(line, format!("invalid vertex label {tok:?}")))
}

/// Reads a whitespace-separated edge list, one `u v` pair per line.
///
/// An optional first line `n=<count>` fixes the vertex count; otherwise it is
/// one more than the largest label. Duplicate edges are merged; blank lines and
/// `#` comments are ignored.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut declared: Option<(usize, usize)> = None;
    let mut edges = Vec::new();
    for (idx, (line_no, line)) in content_lines(text).enumerate() {
        if let Some(rest) = parse_header(line) {
            if idx != 0 {
                return Err(parse_err(line_no, "vertex count must be on the first line"));
            }
            let n = rest
                .trim()
                .parse::<usize>()
                .map_err(|_| parse_err(line_no, format!("invalid vertex count {rest:?}")))?;
            declared = Some((n, line_no));
            continue;
        }
        let toks: Vec<&str> = line.split_whitespace().collect();
        if toks.len() != 2 {
            return Err(parse_err(line_no, format!("expected \"u v\", got {line:?}")));
        }
        let u = parse_label(toks[0], line_no)?;
        let v = parse_label(toks[1], line_no)?;
        if u == v {
            return Err(parse_err(line_no, format!("loop at vertex {u}")));
        }
        if let Some((n, _)) = declared {
            if u >= n || v >= n {
                return Err(parse_err(
                    line_no,
                    format!("label out of range for n={n}: {u} {v}"),
                ));
            }
        }
        edges.push((u, v, line_no));
    }
    let n = match declared {
        Some((n, _)) => n,
        None => edges.iter().map(|&(u, v, _)| u.max(v) + 1).max().unwrap_or(0),
    };
    Graph::new_dedup(n, edges.into_iter().map(|(u, v, _)| (u, v)))
}

/// Reads a mixed graph: `u v` is an undirected edge, `u > v` an arc from `u` to `v`.
/// An optional `n=<count>` first line is accepted as for edge lists.
pub fn parse_mixed(text: &str) -> Result<MixedGraph> {
    let mut declared = None;
    let mut items: Vec<(usize, usize, bool, usize)> = Vec::new();
    for (idx, (line_no, line)) in content_lines(text).enumerate() {
        if let Some(rest) = parse_header(line) {
            if idx != 0 {
                return Err(parse_err(line_no, "vertex count must be on the first line"));
            }
            declared = Some(
                rest.trim()
                    .parse::<usize>()
                    .map_err(|_| parse_err(line_no, format!("invalid vertex count {rest:?}")))?,
            );
            continue;
        }
        let (u, v, arc) = if let Some((a, b)) = line.split_once('>') {
            (a.trim(), b.trim(), true)
        } else {
            let toks: Vec<&str> = line.split_whitespace().collect();
            if toks.len() != 2 {
                return Err(parse_err(
                    line_no,
                    format!("expected \"u v\" or \"u > v\", got {line:?}"),
                ));
            }
            (toks[0], toks[1], false)
        };
        let u = parse_label(u, line_no)?;
        let v = parse_label(v, line_no)?;
        if u == v {
            return Err(parse_err(line_no, format!("loop at vertex {u}")));
        }
        if let Some(n) = declared {
            if u >= n || v >= n {
                return Err(parse_err(line_no, format!("label out of range for n={n}")));
            }
        }
        if let Some(prev) = items
            .iter()
            .find(|p| norm_edge(p.0, p.1) == norm_edge(u, v))
        {
            return Err(parse_err(
                line_no,
                format!("edge {{{u}, {v}}} already given on line {}", prev.3),
            ));
        }
        items.push((u, v, arc, line_no));
    }
    let n = declared.unwrap_or_else(|| items.iter().map(|p| p.0.max(p.1) + 1).max().unwrap_or(0));
    let graph = Graph::new(n, items.iter().map(|p| (p.0, p.1)))?;
    let mut states = vec![EdgeState::Undirected; graph.edge_count()];
    for &(u, v, arc, _) in &items {
        if arc {
            let idx = graph.edge_index(u, v).expect("edge present");
            states[idx] = EdgeState::Arc { tail: u, head: v };
        }
    }
    MixedGraph::new(graph, states)
}

const G6_BIAS: u8 = 63;

/// Decodes a graph6 string (short form, n <= 62).
///
/// Bits follow the upper triangle column by column: (0,1), (0,2), (1,2), (0,3), ...
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let text = text.trim();
    let text = text.strip_prefix(">>graph6<<").unwrap_or(text);
    let bytes = text.as_bytes();
    if bytes.is_empty() {
        return Err(Error::Graph6("empty input".into()));
    }
    if let Some(&b) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(Error::Graph6(format!("byte {b:#04x} outside printable range 63..=126")));
    }
    if bytes[0] == 126 {
        return Err(Error::Graph6("only the short form (n <= 62) is supported".into()));
    }
    let n = (bytes[0] - G6_BIAS) as usize;
    let bits = n * n.saturating_sub(1) / 2;
    let expected = 1 + bits.div_ceil(6);
    if bytes.len() != expected {
        return Err(Error::Graph6(format!(
            "length {} does not match n = {n} (expected {expected})",
            bytes.len()
        )));
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for v in 1..n {
        for u in 0..v {
            let byte = bytes[1 + k / 6] - G6_BIAS;
            if byte & (1 << (5 - k % 6)) != 0 {
                edges.push((u, v));
            }
            k += 1;
        }
    }
    // padding bits must be zero
    if k % 6 != 0 {
        let last = bytes[bytes.len() - 1] - G6_BIAS;
        if last & ((1 << (6 - k % 6)) - 1) != 0 {
            return Err(Error::Graph6("nonzero padding bits".into()));
        }
    }
    Graph::new(n, edges)
}

/// Encodes a graph in graph6 short form.
pub fn encode_graph6(g: &Graph) -> Result<String> {
    let n = g.n();
    if n > 62 {
        return Err(Error::Graph6(format!("n = {n} needs the long form")));
    }
    let bits = n * n.saturating_sub(1) / 2;
    let mut body = vec![0u8; bits.div_ceil(6)];
    let mut k = 0;
    for v in 1..n {
        for u in 0..v {
            if g.has_edge(u, v) {
                body[k / 6] |= 1 << (5 - k % 6);
            }
            k += 1;
        }
    }
    let mut out = String::with_capacity(1 + body.len());
    out.push((n as u8 + G6_BIAS) as char);
    out.extend(body.into_iter().map(|b| (b + G6_BIAS) as char));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn edge_list_path() {
        let g = parse_edge_list("0 1\n1 2").unwrap();
        assert_eq!(g, Graph::path(3));
    }

    #[test]
    fn edge_list_example_graph() {
        let g = parse_edge_list("0 1\n1 2\n2 3\n0 3\n1 3").unwrap();
        assert_eq!(g.n(), 4);
        assert_eq!(g.edges(), &[(0, 1), (0, 3), (1, 2), (1, 3), (2, 3)]);
    }

    #[test]
    fn edge_list_errors_name_the_line() {
        match parse_edge_list("0 0") {
            Err(Error::Parse { line: 1, message }) => assert!(message.contains("loop")),
            other => panic!("{other:?}"),
        }
        match parse_edge_list("0 1\n\n1 x") {
            Err(Error::Parse { line: 3, .. }) => {}
            other => panic!("{other:?}"),
        }
        match parse_edge_list("n=3\n0 1\n1 3") {
            Err(Error::Parse { line: 3, message }) => assert!(message.contains("range")),
            other => panic!("{other:?}"),
        }
        assert!(parse_edge_list("0 1 2").is_err());
    }

    #[test]
    fn edge_list_header_and_dedup() {
        let g = parse_edge_list("n=5\n0 1\n1 0 # again\n").unwrap();
        assert_eq!(g.n(), 5);
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn graph6_k4() {
        assert_eq!(parse_graph6("C~").unwrap(), Graph::complete(4));
    }

    #[test]
    fn graph6_c4_round_trip() {
        let c4 = Graph::cycle(4);
        let code = encode_graph6(&c4).unwrap();
        assert_eq!(code, "Cl");
        assert_eq!(parse_graph6(&code).unwrap(), c4);
    }

    // Encodings produced by networkx's graph6 writer.
    #[test]
    fn graph6_reference_strings() {
        let chorded_c4 = parse_edge_list("0 1\n1 2\n2 3\n0 3\n1 3").unwrap();
        assert_eq!(parse_graph6("Cn").unwrap(), chorded_c4);
        assert_eq!(parse_graph6("FhCGG").unwrap(), Graph::path(7));
        let petersen = Graph::new(
            10,
            [
                (0, 1), (0, 4), (0, 5), (1, 2), (1, 6), (2, 3), (2, 7), (3, 4),
                (3, 8), (4, 9), (5, 7), (5, 8), (6, 8), (6, 9), (7, 9),
            ],
        )
        .unwrap();
        assert_eq!(parse_graph6("IheA@GUAo").unwrap(), petersen);
        assert_eq!(encode_graph6(&petersen).unwrap(), "IheA@GUAo");
    }

    #[test]
    fn graph6_errors() {
        assert!(matches!(parse_graph6(""), Err(Error::Graph6(m)) if m.contains("empty")));
        assert!(parse_graph6("C").is_err());
        assert!(parse_graph6("C~~").is_err());
        assert!(parse_graph6("C\u{7f}").is_err());
        assert!(parse_graph6("B`").is_err(), "padding bits");
        assert_eq!(parse_graph6("B_").unwrap(), Graph::new(3, [(0, 1)]).unwrap());
    }

    #[test]
    fn mixed_text() {
        let d = parse_mixed("0 1\n1 2\n2 3\n0 > 3").unwrap();
        let idx = d.graph().edge_index(0, 3).unwrap();
        assert_eq!(d.states()[idx], EdgeState::Arc { tail: 0, head: 3 });
        assert!(parse_mixed("0 1\n1 > 0").is_err());
    }
}
