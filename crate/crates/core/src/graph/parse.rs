//! Line-oriented text format for pargraphs.
//!
//! ```text
//! vertices 7
//! edges 1-2,2-5,3-1,3-4,3-6,4-5,6-7,7-5
//! partition [2,5] [1] [3] [4] [6] [7]
//! sink_block 6      # optional, 1-based; defaults to the last block
//! root 7            # optional; defaults to the largest vertex
//! pseudo true       # optional; allows blocks inducing disconnected subgraphs
//! ```
//!
//! Vertices are named `1..n` in the document. Blank lines and `#` comments are
//! ignored.

use std::fmt::Write as _;

use super::multigraph::Multigraph;
use super::pargraph::Pargraph;
use crate::error::{Error, Result};

fn perr(line: usize, message: impl Into<String>) -> Error {
    Error::Parse { line, message: message.into() }
}

fn parse_usize(line: usize, s: &str, what: &str) -> Result<usize> {
    s.trim()
        .parse::<usize>()
        .map_err(|_| perr(line, format!("expected {what}, found `{}`", s.trim())))
}

fn parse_vertex(line: usize, s: &str) -> Result<usize> {
    let v = parse_usize(line, s, "a vertex name")?;
    if v == 0 {
        return Err(perr(line, "vertex names start at 1"));
    }
    Ok(v - 1)
}

fn parse_edges(line: usize, rest: &str) -> Result<Vec<(usize, usize)>> {
    let rest = rest.trim();
    if rest.is_empty() {
        return Ok(Vec::new());
    }
    rest.split(',')
        .map(|tok| {
            let (a, b) = tok
                .split_once('-')
                .ok_or_else(|| perr(line, format!("edge `{}` is not of the form i-j", tok.trim())))?;
            Ok((parse_vertex(line, a)?, parse_vertex(line, b)?))
        })
        .collect()
}

fn parse_blocks(line: usize, rest: &str) -> Result<Vec<Vec<usize>>> {
    let mut blocks = Vec::new();
    let mut rest = rest.trim();
    while !rest.is_empty() {
        let Some(inner) = rest.strip_prefix('[') else {
            return Err(perr(line, format!("expected `[` at `{rest}`")));
        };
        let close = inner.find(']').ok_or_else(|| perr(line, "unterminated block"))?;
        let body = &inner[..close];
        let block = if body.trim().is_empty() {
            Vec::new()
        } else {
            body.split(',').map(|v| parse_vertex(line, v)).collect::<Result<Vec<_>>>()?
        };
        blocks.push(block);
        rest = inner[close + 1..].trim_start();
    }
    if blocks.is_empty() {
        return Err(perr(line, "partition has no blocks"));
    }
    Ok(blocks)
}

/// Parses a pargraph document and validates it.
pub fn parse_pargraph(text: &str) -> Result<Pargraph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());

    let mut expect = |key: &str| -> Result<(usize, String)> {
        let (no, l) = lines.next().ok_or_else(|| perr(0, format!("missing `{key}` line")))?;
        let (head, rest) = l.split_once(char::is_whitespace).unwrap_or((l, ""));
        if head != key {
            return Err(perr(no, format!("expected `{key}`, found `{head}`")));
        }
        Ok((no, rest.to_string()))
    };

    let (no, rest) = expect("vertices")?;
    let n = parse_usize(no, &rest, "a vertex count")?;
    let (no, rest) = expect("edges")?;
    let edges = parse_edges(no, &rest)?;
    let (no, rest) = expect("partition")?;
    let blocks = parse_blocks(no, &rest)?;

    let mut sink = blocks.len() - 1;
    let mut root = None;
    let mut pseudo = false;
    for (no, l) in lines {
        let (head, rest) = l.split_once(char::is_whitespace).unwrap_or((l, ""));
        match head {
            "sink_block" => {
                let s = parse_usize(no, rest, "a block index")?;
                if s == 0 {
                    return Err(perr(no, "block indices start at 1"));
                }
                sink = s - 1;
            }
            "root" => root = Some(parse_vertex(no, rest)?),
            "pseudo" => {
                pseudo = match rest.trim() {
                    "true" => true,
                    "false" => false,
                    other => return Err(perr(no, format!("expected true or false, found `{other}`"))),
                }
            }
            other => return Err(perr(no, format!("unknown directive `{other}`"))),
        }
    }

    let graph = Multigraph::from_edges(n, &edges)?;
    if pseudo {
        Pargraph::new_pseudo(graph, blocks, sink, root)
    } else {
        Pargraph::new(graph, blocks, sink, root)
    }
}

/// Reads only the `vertices` and `edges` lines of a document; any partition
/// directives are ignored. Used for alternative graphs, whose blocks need not
/// be connected.
pub fn parse_multigraph(text: &str) -> Result<Multigraph> {
    let mut n = None;
    let mut edges = None;
    for (no, l) in text.lines().enumerate().map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim())) {
        if l.is_empty() {
            continue;
        }
        let (head, rest) = l.split_once(char::is_whitespace).unwrap_or((l, ""));
        match head {
            "vertices" => n = Some(parse_usize(no, rest, "a vertex count")?),
            "edges" => edges = Some(parse_edges(no, rest)?),
            "partition" | "sink_block" | "root" | "pseudo" => {}
            other => return Err(perr(no, format!("unknown directive `{other}`"))),
        }
    }
    let n = n.ok_or_else(|| perr(0, "missing `vertices` line"))?;
    let edges = edges.ok_or_else(|| perr(0, "missing `edges` line"))?;
    Multigraph::from_edges(n, &edges)
}

/// Renders a pargraph back into the document format; parallel edges are
/// written out once per copy.
pub fn to_document(pg: &Pargraph) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "vertices {}", pg.n());
    let mut edges = Vec::new();
    for (i, j, m) in pg.graph().edges() {
        for _ in 0..m {
            edges.push(format!("{}-{}", i + 1, j + 1));
        }
    }
    let _ = writeln!(out, "edges {}", edges.join(","));
    let blocks: Vec<String> = pg
        .blocks()
        .iter()
        .map(|b| {
            let names: Vec<String> = b.iter().map(|v| (v + 1).to_string()).collect();
            format!("[{}]", names.join(","))
        })
        .collect();
    let _ = writeln!(out, "partition {}", blocks.join(" "));
    if pg.sink_block() + 1 != pg.k() {
        let _ = writeln!(out, "sink_block {}", pg.sink_block() + 1);
    }
    if pg.root() + 1 != pg.n() {
        let _ = writeln!(out, "root {}", pg.root() + 1);
    }
    if pg.is_pseudo() {
        let _ = writeln!(out, "pseudo true");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    const SEVEN_VERTEX: &str = "vertices 7\n\
        edges 1-2,2-5,3-1,3-4,3-6,4-5,6-7,7-5\n\
        partition [2,5] [1] [3] [4] [6] [7]\n";

    #[test]
    fn seven_vertex_basic_edges() {
        let pg = parse_pargraph(SEVEN_VERTEX).unwrap();
        assert_eq!(pg.n(), 7);
        assert_eq!(pg.k(), 6);
        assert_eq!(pg.graph().edge_count(), 8);
        assert_eq!(pg.basic_edges(), vec![(1, 4, 1)]);
        assert_eq!(pg.root(), 6);
    }

    #[test]
    fn second_partition_with_sink_override() {
        let doc = "vertices 7\nedges 1-2,2-5,3-1,3-4,3-6,4-5,6-7,7-5\n\
                   partition [2,5,7] [1] [3] [4] [6]\nsink_block 1\n";
        let pg = parse_pargraph(doc).unwrap();
        assert_eq!(pg.basic_edges(), vec![(1, 4, 1), (4, 6, 1)]);
        assert_eq!(pg.sink_block(), 0);
    }

    #[test]
    fn root_outside_sink_is_rejected() {
        let doc = "vertices 7\nedges 1-2,2-5,3-1,3-4,3-6,4-5,6-7,7-5\n\
                   partition [2,5,7] [1] [3] [4] [6]\n";
        assert!(matches!(parse_pargraph(doc), Err(Error::Validation(_))));
        let fixed = format!("{doc}sink_block 1\nroot 5\n");
        assert_eq!(parse_pargraph(&fixed).unwrap().root(), 4);
    }

    #[test]
    fn single_block() {
        let pg = parse_pargraph("vertices 3\nedges 1-2,2-3,1-3\npartition [1,2,3]\n").unwrap();
        assert_eq!(pg.k(), 1);
        assert!(pg.relevant_edges().is_empty());
    }

    #[test]
    fn syntax_errors_carry_line_numbers() {
        let err = parse_pargraph("vertices 3\nedges 1-2,2:3\npartition [1] [2] [3]\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }));
        let err = parse_pargraph("vertices x\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 1, .. }));
        let err = parse_pargraph("vertices 2\nedges 1-2\npartition [1] [2]\ncolour red\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 4, .. }));
        assert!(parse_pargraph("").is_err());
    }

    #[test]
    fn loops_and_disconnection_are_validation_errors() {
        assert!(matches!(
            parse_pargraph("vertices 2\nedges 1-1,1-2\npartition [1] [2]\n"),
            Err(Error::Validation(_))
        ));
        assert!(matches!(
            parse_pargraph("vertices 3\nedges 1-2\npartition [1] [2] [3]\n"),
            Err(Error::Validation(_))
        ));
        let doc = "vertices 3\nedges 1-2,2-3\npartition [1,3] [2]\nsink_block 1\nroot 3\n";
        assert!(parse_pargraph(doc).is_err());
        let pg = parse_pargraph(&format!("{doc}pseudo true\n")).unwrap();
        assert!(pg.is_pseudo());
    }

    #[test]
    fn document_round_trip() {
        let pg = parse_pargraph(SEVEN_VERTEX).unwrap();
        assert_eq!(parse_pargraph(&to_document(&pg)).unwrap(), pg);
    }
}
