//! Text edge-list format shared by the CLI and the test fixtures.
//!
//! The first line is `type n` (`type n k` for hypergraphs, `bipartite a b`
//! for bipartite graphs), followed by one edge per line as space-separated
//! vertex labels. Digraph and tournament lines are ordered pairs. Writing is
//! canonical (edges sorted), so write/read/write round-trips are bit-exact.

use std::fmt::Write as _;
use std::path::Path;

use crate::error::{Error, Result};
use crate::types::{BipartiteGraph, Digraph, Graph, KUniformHypergraph, Tournament};

/// Any structure the edge-list format can carry.
#[derive(Debug, Clone, PartialEq)]
pub enum Structure {
    Graph(Graph),
    Digraph(Digraph),
    Tournament(Tournament),
    Hypergraph(KUniformHypergraph),
    Bipartite(BipartiteGraph),
}

impl Structure {
    pub fn kind(&self) -> &'static str {
        match self {
            Structure::Graph(_) => "graph",
            Structure::Digraph(_) => "digraph",
            Structure::Tournament(_) => "tournament",
            Structure::Hypergraph(_) => "hypergraph",
            Structure::Bipartite(_) => "bipartite",
        }
    }
}

pub fn write_structure(s: &Structure) -> String {
    let mut out = String::new();
    match s {
        Structure::Graph(g) => {
            writeln!(out, "graph {}", g.n()).unwrap();
            for (u, v) in g.edges() {
                writeln!(out, "{u} {v}").unwrap();
            }
        }
        Structure::Digraph(d) => {
            writeln!(out, "digraph {}", d.n()).unwrap();
            for (u, v) in d.arcs() {
                writeln!(out, "{u} {v}").unwrap();
            }
        }
        Structure::Tournament(t) => {
            writeln!(out, "tournament {}", t.n()).unwrap();
            for (u, v) in t.as_digraph().arcs() {
                writeln!(out, "{u} {v}").unwrap();
            }
        }
        Structure::Hypergraph(h) => {
            writeln!(out, "hypergraph {} {}", h.n(), h.k()).unwrap();
            for e in h.edges() {
                let line: Vec<String> = e.iter().map(|v| v.to_string()).collect();
                writeln!(out, "{}", line.join(" ")).unwrap();
            }
        }
        Structure::Bipartite(g) => {
            writeln!(out, "bipartite {} {}", g.part_a(), g.part_b()).unwrap();
            for (x, y) in g.edges() {
                writeln!(out, "{x} {y}").unwrap();
            }
        }
    }
    out
}

pub fn parse_structure(text: &str) -> Result<Structure> {
    let mut lines = text.lines().enumerate();
    let (_, header) = lines
        .next()
        .ok_or_else(|| Error::Parse {
            line: 1,
            msg: "empty input".to_string(),
        })?;
    let fields: Vec<&str> = header.split_whitespace().collect();
    let parse_num = |s: &str, line: usize| -> Result<usize> {
        s.parse().map_err(|_| Error::Parse {
            line,
            msg: format!("expected a number, found {s:?}"),
        })
    };
    let kind = *fields.first().ok_or_else(|| Error::Parse {
        line: 1,
        msg: "missing header".to_string(),
    })?;

    let mut rows: Vec<(usize, Vec<usize>)> = Vec::new();
    for (i, line) in lines {
        if line.trim().is_empty() {
            continue;
        }
        let mut row = Vec::new();
        for tok in line.split_whitespace() {
            row.push(parse_num(tok, i + 1)?);
        }
        rows.push((i + 1, row));
    }

    let pair_rows = |rows: &[(usize, Vec<usize>)]| -> Result<Vec<(usize, usize)>> {
        rows.iter()
            .map(|(line, r)| {
                if r.len() == 2 {
                    Ok((r[0], r[1]))
                } else {
                    Err(Error::Parse {
                        line: *line,
                        msg: format!("expected 2 labels, found {}", r.len()),
                    })
                }
            })
            .collect()
    };

    match kind {
        "graph" | "digraph" | "tournament" => {
            if fields.len() != 2 {
                return Err(Error::Parse {
                    line: 1,
                    msg: format!("header {kind:?} takes exactly one size field"),
                });
            }
            let n = parse_num(fields[1], 1)?;
            let pairs = pair_rows(&rows)?;
            match kind {
                "graph" => Ok(Structure::Graph(Graph::new(n, pairs)?)),
                "digraph" => Ok(Structure::Digraph(Digraph::new(n, pairs)?)),
                _ => Ok(Structure::Tournament(Tournament::new(n, pairs)?)),
            }
        }
        "hypergraph" => {
            if fields.len() != 3 {
                return Err(Error::Parse {
                    line: 1,
                    msg: "hypergraph header is `hypergraph n k`".to_string(),
                });
            }
            let n = parse_num(fields[1], 1)?;
            let k = parse_num(fields[2], 1)?;
            for (line, r) in &rows {
                if r.len() != k {
                    return Err(Error::Parse {
                        line: *line,
                        msg: format!("expected {k} labels, found {}", r.len()),
                    });
                }
            }
            let edges = rows.into_iter().map(|(_, r)| r);
            Ok(Structure::Hypergraph(KUniformHypergraph::new(n, k, edges)?))
        }
        "bipartite" => {
            if fields.len() != 3 {
                return Err(Error::Parse {
                    line: 1,
                    msg: "bipartite header is `bipartite a b`".to_string(),
                });
            }
            let a = parse_num(fields[1], 1)?;
            let b = parse_num(fields[2], 1)?;
            let pairs = pair_rows(&rows)?;
            Ok(Structure::Bipartite(BipartiteGraph::new(a, b, pairs)?))
        }
        other => Err(Error::Parse {
            line: 1,
            msg: format!("unknown structure type {other:?}"),
        }),
    }
}

pub fn write_path(s: &Structure, path: &Path) -> Result<()> {
    std::fs::write(path, write_structure(s)).map_err(|e| Error::io(path.display().to_string(), e))
}

pub fn read_path(path: &Path) -> Result<Structure> {
    let text =
        std::fs::read_to_string(path).map_err(|e| Error::io(path.display().to_string(), e))?;
    parse_structure(&text)
}
