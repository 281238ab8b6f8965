//! Text formats for graphs: a plain edge-list format and DIMACS .col.
//!
//! Edge list: first data line `n m`, then `m` lines `u v` with 0-based
//! endpoints. Blank lines are skipped and `#` starts a comment (full-line or
//! trailing). DIMACS: `c` comment lines, one `p edge n m` line, then `e u v`
//! lines with 1-based endpoints.

use crate::graph::{Graph, GraphError};

#[derive(Debug, thiserror::Error)]
pub enum IoError {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

fn parse_err(line: usize, msg: impl Into<String>) -> IoError {
    IoError::Parse {
        line,
        msg: msg.into(),
    }
}

/// Data lines with comments stripped, paired with 1-based line numbers.
fn data_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            None
        } else {
            Some((i + 1, line))
        }
    })
}

pub fn parse_edge_list(text: &str) -> Result<Graph, IoError> {
    let mut lines = data_lines(text);
    let (hline, header) = lines
        .next()
        .ok_or_else(|| parse_err(0, "empty input, expected `n m` header"))?;
    let mut it = header.split_whitespace();
    let n: usize = it
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| parse_err(hline, "expected vertex count"))?;
    let m: usize = it
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| parse_err(hline, "expected edge count"))?;
    if it.next().is_some() {
        return Err(parse_err(hline, "trailing tokens after `n m` header"));
    }
    let mut edges = Vec::with_capacity(m);
    for (lno, line) in lines {
        let mut it = line.split_whitespace();
        let u: usize = it
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| parse_err(lno, "expected edge endpoint"))?;
        let v: usize = it
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| parse_err(lno, "expected second edge endpoint"))?;
        if it.next().is_some() {
            return Err(parse_err(lno, "trailing tokens after edge"));
        }
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(parse_err(
            0,
            format!("header promises {m} edges, found {}", edges.len()),
        ));
    }
    Ok(Graph::from_edge_list(n, &edges)?)
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.m());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

pub fn parse_dimacs(text: &str) -> Result<Graph, IoError> {
    let mut dims: Option<(usize, usize)> = None;
    let mut edges: Vec<(usize, usize)> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let lno = i + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('c') {
            continue;
        }
        let toks: Vec<&str> = line.split_whitespace().collect();
        match toks[0] {
            "p" => {
                if dims.is_some() {
                    return Err(parse_err(lno, "duplicate `p` line"));
                }
                if toks.len() != 4 || toks[1] != "edge" {
                    return Err(parse_err(lno, "expected `p edge n m`"));
                }
                let n = toks[2]
                    .parse()
                    .map_err(|_| parse_err(lno, "bad vertex count"))?;
                let m = toks[3]
                    .parse()
                    .map_err(|_| parse_err(lno, "bad edge count"))?;
                dims = Some((n, m));
            }
            "e" => {
                if dims.is_none() {
                    return Err(parse_err(lno, "`e` line before `p` line"));
                }
                if toks.len() != 3 {
                    return Err(parse_err(lno, "expected `e u v`"));
                }
                let u: usize = toks[1]
                    .parse()
                    .map_err(|_| parse_err(lno, "bad endpoint"))?;
                let v: usize = toks[2]
                    .parse()
                    .map_err(|_| parse_err(lno, "bad endpoint"))?;
                if u == 0 || v == 0 {
                    return Err(parse_err(lno, "DIMACS vertices are 1-based"));
                }
                edges.push((u - 1, v - 1));
            }
            other => {
                return Err(parse_err(lno, format!("unknown line type `{other}`")));
            }
        }
    }
    let (n, m) = dims.ok_or_else(|| parse_err(0, "missing `p edge n m` line"))?;
    if edges.len() != m {
        return Err(parse_err(
            0,
            format!("`p` line promises {m} edges, found {}", edges.len()),
        ));
    }
    Ok(Graph::from_edge_list(n, &edges)?)
}

pub fn write_dimacs(g: &Graph) -> String {
    let mut out = format!("p edge {} {}\n", g.n(), g.m());
    for (u, v) in g.edges() {
        out.push_str(&format!("e {} {}\n", u + 1, v + 1));
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    EdgeList,
    Dimacs,
}

/// Picks a format from a file name: `.col` means DIMACS, anything else the
/// edge-list format.
pub fn format_for_path(path: &str) -> Format {
    if path.to_ascii_lowercase().ends_with(".col") {
        Format::Dimacs
    } else {
        Format::EdgeList
    }
}

pub fn parse(text: &str, format: Format) -> Result<Graph, IoError> {
    match format {
        Format::EdgeList => parse_edge_list(text),
        Format::Dimacs => parse_dimacs(text),
    }
}

pub fn write(g: &Graph, format: Format) -> String {
    match format {
        Format::EdgeList => write_edge_list(g),
        Format::Dimacs => write_dimacs(g),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn edge_list_roundtrip() {
        let g = Graph::from_edge_list(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        let text = write_edge_list(&g);
        assert_eq!(text.lines().next(), Some("5 5"));
        let h = parse_edge_list(&text).unwrap();
        assert_eq!(g, h);
    }

    #[test]
    fn edge_list_comments_and_blanks() {
        let text = "# a pentagon\n5 5\n0 1\n1 2 # chord? no\n\n2 3\n3 4\n4 0\n";
        let g = parse_edge_list(text).unwrap();
        assert_eq!(g.n(), 5);
        assert_eq!(g.m(), 5);
    }

    #[test]
    fn edge_list_errors() {
        assert!(parse_edge_list("").is_err());
        assert!(parse_edge_list("2 1\n").is_err());
        assert!(parse_edge_list("2 1\n0 1\n1 0\n").is_err());
        assert!(parse_edge_list("2 1\n0 x\n").is_err());
        assert!(parse_edge_list("2 1\n0 5\n").is_err());
        let err = parse_edge_list("3 1\n0 0\n").unwrap_err();
        assert!(matches!(err, IoError::Graph(GraphError::SelfLoop(0))));
    }

    #[test]
    fn dimacs_roundtrip_and_one_based() {
        let g = Graph::from_edge_list(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let text = write_dimacs(&g);
        assert!(text.starts_with("p edge 4 4\n"));
        assert!(text.contains("e 1 2"));
        let h = parse_dimacs(&text).unwrap();
        assert_eq!(g, h);
        let manual = "c square\np edge 4 4\ne 1 2\ne 2 3\ne 3 4\ne 4 1\n";
        assert_eq!(parse_dimacs(manual).unwrap(), g);
        assert!(parse_dimacs("p edge 2 1\ne 0 1\n").is_err());
        assert!(parse_dimacs("e 1 2\n").is_err());
    }

    #[test]
    fn format_detection() {
        assert_eq!(format_for_path("graph.col"), Format::Dimacs);
        assert_eq!(format_for_path("graph.COL"), Format::Dimacs);
        assert_eq!(format_for_path("graph.txt"), Format::EdgeList);
        assert_eq!(format_for_path("graph"), Format::EdgeList);
    }
}
