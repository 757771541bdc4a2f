//! Plain-text file formats: edge lists for graphs and digraphs, and
//! replayable trace files.
//!
//! Edge list: a header line `n m` (or `n m directed`), then exactly `m`
//! lines `u v` with 0-based ids. Lines starting with `#` are ignored
//! anywhere. Writers emit edges in ascending order, so output is canonical.
//!
//! Trace file: a line `S: v1 v2 …`, one line `t: v -> w` per forcing event,
//! and a final line `covered` or `stuck`.

use crate::graph::{Digraph, Graph, VertexSet};
use crate::propagation::{ForceEvent, Trace};
use crate::{Error, Result};

/// A parsed edge-list file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ParsedGraph {
    Undirected(Graph),
    Directed(Digraph),
}

fn significant_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l))
        .filter(|(_, l)| !l.trim_start().starts_with('#'))
}

fn parse_id(line: usize, token: &str) -> Result<usize> {
    token.parse().map_err(|_| Error::Parse {
        line,
        message: format!("expected a vertex id, got {token:?}"),
    })
}

pub fn parse_edge_list(text: &str) -> Result<ParsedGraph> {
    let mut lines = significant_lines(text);
    let (header_no, header) = lines.next().ok_or(Error::Parse {
        line: 1,
        message: "missing header line".into(),
    })?;
    let tokens: Vec<&str> = header.split_whitespace().collect();
    let directed = match tokens.as_slice() {
        [_, _] => false,
        [_, _, "directed"] => true,
        _ => {
            return Err(Error::Parse {
                line: header_no,
                message: format!("expected \"n m\" or \"n m directed\", got {header:?}"),
            })
        }
    };
    let n = parse_id(header_no, tokens[0])?;
    let m = parse_id(header_no, tokens[1])?;
    let mut edges = Vec::with_capacity(m);
    for _ in 0..m {
        let (line_no, line) = lines.next().ok_or(Error::Parse {
            line: header_no,
            message: format!("expected {m} edge lines, found {}", edges.len()),
        })?;
        match line.split_whitespace().collect::<Vec<_>>().as_slice() {
            [u, v] => edges.push((parse_id(line_no, u)?, parse_id(line_no, v)?)),
            _ => {
                return Err(Error::Parse {
                    line: line_no,
                    message: format!("expected \"u v\", got {line:?}"),
                })
            }
        }
    }
    if let Some((line_no, line)) = lines.next() {
        return Err(Error::Parse {
            line: line_no,
            message: format!("unexpected content after {m} edges: {line:?}"),
        });
    }
    if directed {
        Ok(ParsedGraph::Directed(Digraph::new(n, &edges)?))
    } else {
        Ok(ParsedGraph::Undirected(Graph::new(n, &edges)?))
    }
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.edge_count());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

pub fn write_edge_list_directed(d: &Digraph) -> String {
    let mut out = format!("{} {} directed\n", d.n(), d.arc_count());
    for (u, v) in d.arcs() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

// ---------------------------------------------------------------------------
// trace files
// ---------------------------------------------------------------------------

pub fn write_trace(trace: &Trace) -> String {
    let mut out = String::from("S:");
    for v in trace.initial.iter() {
        out.push_str(&format!(" {v}"));
    }
    out.push('\n');
    for e in &trace.events {
        out.push_str(&format!("{}: {} -> {}\n", e.time, e.forcer, e.forced));
    }
    out.push_str(if trace.covered {
        "covered\n"
    } else {
        "stuck\n"
    });
    out
}

/// Parses a trace file over a host with `n` vertices. The result still needs
/// [`crate::propagation::verify_trace`] to be trusted.
pub fn parse_trace(text: &str, n: usize) -> Result<Trace> {
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l));
    let (line_no, first) = lines.next().ok_or(Error::Parse {
        line: 1,
        message: "missing seed line".into(),
    })?;
    let rest = first.strip_prefix("S:").ok_or(Error::Parse {
        line: line_no,
        message: format!("expected \"S: …\", got {first:?}"),
    })?;
    let mut ids = Vec::new();
    for token in rest.split_whitespace() {
        ids.push(parse_id(line_no, token)?);
    }
    let initial = VertexSet::from_ids(n, &ids)?;
    let mut events = Vec::new();
    let mut covered = None;
    for (line_no, line) in lines {
        if covered.is_some() {
            return Err(Error::Parse {
                line: line_no,
                message: "content after the final covered/stuck line".into(),
            });
        }
        match line.trim() {
            "covered" => covered = Some(true),
            "stuck" => covered = Some(false),
            body => {
                let (time, rest) = body.split_once(':').ok_or(Error::Parse {
                    line: line_no,
                    message: format!("expected \"t: v -> w\", got {body:?}"),
                })?;
                let (v, w) = rest.split_once("->").ok_or(Error::Parse {
                    line: line_no,
                    message: format!("expected \"t: v -> w\", got {body:?}"),
                })?;
                events.push(ForceEvent {
                    time: parse_id(line_no, time.trim())?,
                    forcer: parse_id(line_no, v.trim())?,
                    forced: parse_id(line_no, w.trim())?,
                });
            }
        }
    }
    let covered = covered.ok_or(Error::Parse {
        line: text.lines().count(),
        message: "missing final covered/stuck line".into(),
    })?;
    Ok(Trace {
        initial,
        events,
        covered,
    })
}

// ---------------------------------------------------------------------------
