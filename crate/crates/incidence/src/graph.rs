//! Simple undirected graphs with stable 1-based vertex ids.

use std::collections::HashSet;
use std::fmt::Write as _;
use thiserror::Error;

use crate::coloring::{Incidence, IncidenceColoring};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("line {line}: malformed input: {msg}")]
    Malformed { line: usize, msg: String },
    #[error("line {line}: vertex id {id} out of range 1..={n}")]
    VertexOutOfRange { line: usize, id: i64, n: usize },
    #[error("line {line}: self-loop at vertex {v}")]
    SelfLoop { line: usize, v: u32 },
    #[error("line {line}: duplicate edge {u} {v}")]
    DuplicateEdge { line: usize, u: u32, v: u32 },
    #[error("invalid construction: {0}")]
    Invalid(String),
}

/// Simple undirected graph. Vertices are `1..=n`; edges are stored as
/// canonical `(min, max)` pairs and adjacency lists are kept sorted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(u32, u32)>,
    adj: Vec<Vec<u32>>, // 1-based; adj[0] unused
}

impl Graph {
    /// Builds a graph from an edge list. Edges may be given in either
    /// orientation; duplicates and self-loops are rejected.
    pub fn new(n: usize, edge_list: &[(u32, u32)]) -> Result<Self, GraphError> {
        let mut seen = HashSet::new();
        let mut edges = Vec::with_capacity(edge_list.len());
        let mut adj = vec![Vec::new(); n + 1];
        for &(a, b) in edge_list {
            if a == 0 || b == 0 || a as usize > n || b as usize > n {
                return Err(GraphError::Invalid(format!(
                    "edge ({a},{b}) out of range 1..={n}"
                )));
            }
            if a == b {
                return Err(GraphError::Invalid(format!("self-loop at vertex {a}")));
            }
            let e = (a.min(b), a.max(b));
            if !seen.insert(e) {
                return Err(GraphError::Invalid(format!("duplicate edge {a} {b}")));
            }
            edges.push(e);
            adj[a as usize].push(b);
            adj[b as usize].push(a);
        }
        edges.sort_unstable();
        for list in adj.iter_mut() {
            list.sort_unstable();
        }
        Ok(Graph { n, edges, adj })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges in canonical `(min, max)` order, sorted.
    pub fn edges(&self) -> &[(u32, u32)] {
        &self.edges
    }

    pub fn vertices(&self) -> impl Iterator<Item = u32> + '_ {
        1..=self.n as u32
    }

    pub fn neighbors(&self, v: u32) -> &[u32] {
        &self.adj[v as usize]
    }

    pub fn degree(&self, v: u32) -> usize {
        self.adj[v as usize].len()
    }

    pub fn max_degree(&self) -> usize {
        (1..=self.n).map(|v| self.adj[v].len()).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: u32, v: u32) -> bool {
        self.adj[u as usize].binary_search(&v).is_ok()
    }

    /// All incidences in canonical order: for each edge `(u,v)` with `u < v`,
    /// first `(u, uv)` then `(v, uv)`. A graph has exactly `2|E|` incidences.
    pub fn incidences(&self) -> impl Iterator<Item = Incidence> + '_ {
        self.edges
            .iter()
            .flat_map(|&(u, v)| [Incidence::new(u, (u, v)), Incidence::new(v, (u, v))])
    }

    /// Strong incidences of `u`: `(u, uv)` for each neighbor `v`.
    pub fn strong_incidences(&self, u: u32) -> impl Iterator<Item = Incidence> + '_ {
        self.neighbors(u)
            .iter()
            .map(move |&v| Incidence::new(u, (u, v)))
    }

    /// Weak incidences of `u`: `(v, uv)` for each neighbor `v`.
    pub fn weak_incidences(&self, u: u32) -> impl Iterator<Item = Incidence> + '_ {
        self.neighbors(u)
            .iter()
            .map(move |&v| Incidence::new(v, (u, v)))
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = vec![false; self.n + 1];
        let mut stack = vec![1u32];
        seen[1] = true;
        let mut count = 0usize;
        while let Some(v) = stack.pop() {
            count += 1;
            for &w in self.neighbors(v) {
                if !seen[w as usize] {
                    seen[w as usize] = true;
                    stack.push(w);
                }
            }
        }
        count == self.n
    }

    /// Parses the edge-list text format: a header line `n m` followed by `m`
    /// lines `u v`. LF and CRLF line endings are both accepted.
    pub fn parse(text: &str) -> Result<Self, GraphError> {
        let mut lines = text.lines().enumerate();
        let (_, header) = lines.next().ok_or(GraphError::Malformed {
            line: 1,
            msg: "empty input, expected header \"n m\"".into(),
        })?;
        let mut it = header.split_whitespace();
        let n: usize =
            it.next()
                .and_then(|t| t.parse().ok())
                .ok_or_else(|| GraphError::Malformed {
                    line: 1,
                    msg: format!("expected header \"n m\", got {header:?}"),
                })?;
        let m: usize =
            it.next()
                .and_then(|t| t.parse().ok())
                .ok_or_else(|| GraphError::Malformed {
                    line: 1,
                    msg: format!("expected header \"n m\", got {header:?}"),
                })?;
        if it.next().is_some() {
            return Err(GraphError::Malformed {
                line: 1,
                msg: format!("trailing tokens in header {header:?}"),
            });
        }

        let mut seen = HashSet::new();
        let mut edges = Vec::with_capacity(m);
        let mut parsed = 0usize;
        for (idx, raw) in lines {
            let line_no = idx + 1;
            if raw.trim().is_empty() {
                continue;
            }
            if parsed == m {
                return Err(GraphError::Malformed {
                    line: line_no,
                    msg: format!("expected {m} edges but found more lines"),
                });
            }
            let mut it = raw.split_whitespace();
            let parse_id = |tok: Option<&str>| -> Result<i64, GraphError> {
                tok.and_then(|t| t.parse::<i64>().ok())
                    .ok_or_else(|| GraphError::Malformed {
                        line: line_no,
                        msg: format!("expected edge \"u v\", got {raw:?}"),
                    })
            };
            let a = parse_id(it.next())?;
            let b = parse_id(it.next())?;
            if it.next().is_some() {
                return Err(GraphError::Malformed {
                    line: line_no,
                    msg: format!("trailing tokens in edge line {raw:?}"),
                });
            }
            for id in [a, b] {
                if id < 1 || id as usize > n {
                    return Err(GraphError::VertexOutOfRange {
                        line: line_no,
                        id,
                        n,
                    });
                }
            }
            let (a, b) = (a as u32, b as u32);
            if a == b {
                return Err(GraphError::SelfLoop {
                    line: line_no,
                    v: a,
                });
            }
            let e = (a.min(b), a.max(b));
            if !seen.insert(e) {
                return Err(GraphError::DuplicateEdge {
                    line: line_no,
                    u: a,
                    v: b,
                });
            }
            edges.push(e);
            parsed += 1;
        }
        if parsed != m {
            return Err(GraphError::Malformed {
                line: text.lines().count(),
                msg: format!("header declared {m} edges but only {parsed} were given"),
            });
        }
        Graph::new(n, &edges)
    }

    /// Serializes in the same edge-list format accepted by [`Graph::parse`].
    pub fn to_edge_list(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{} {}", self.n, self.edges.len());
        for &(u, v) in &self.edges {
            let _ = writeln!(out, "{u} {v}");
        }
        out
    }

    /// DOT export, optionally annotating each incidence color on the edge
    /// labels (tail color first).
    pub fn to_dot(&self, coloring: Option<&IncidenceColoring>) -> String {
        let mut out = String::from("graph g {\n");
        for v in self.vertices() {
            let _ = writeln!(out, "  {v};");
        }
        for &(u, v) in &self.edges {
            match coloring {
                Some(c) => {
                    let a = c.get(Incidence::new(u, (u, v)));
                    let b = c.get(Incidence::new(v, (u, v)));
                    let fmt =
                        |x: Option<u32>| x.map(|c| c.to_string()).unwrap_or_else(|| "?".into());
                    let _ = writeln!(out, "  {u} -- {v} [label=\"{}|{}\"];", fmt(a), fmt(b));
                }
                None => {
                    let _ = writeln!(out, "  {u} -- {v};");
                }
            }
        }
        out.push_str("}\n");
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_path3() {
        let g = Graph::parse("3 2\n1 2\n2 3").unwrap();
        assert_eq!(g.vertex_count(), 3);
        let degs: Vec<usize> = g.vertices().map(|v| g.degree(v)).collect();
        assert_eq!(degs, vec![1, 2, 1]);
    }

    #[test]
    fn parse_k4() {
        let g = Graph::parse("4 6\n1 2\n1 3\n1 4\n2 3\n2 4\n3 4").unwrap();
        assert_eq!(g.max_degree(), 3);
        assert_eq!(g.edge_count(), 6);
    }

    #[test]
    fn parse_rejects_self_loop() {
        let err = Graph::parse("2 1\n1 1").unwrap_err();
        assert_eq!(err, GraphError::SelfLoop { line: 2, v: 1 });
    }

    #[test]
    fn parse_rejects_duplicate_edge() {
        let err = Graph::parse("3 2\n1 2\n2 1").unwrap_err();
        assert_eq!(
            err,
            GraphError::DuplicateEdge {
                line: 3,
                u: 2,
                v: 1
            }
        );
    }

    #[test]
    fn parse_rejects_out_of_range() {
        let err = Graph::parse("3 1\n1 4").unwrap_err();
        assert!(matches!(
            err,
            GraphError::VertexOutOfRange { line: 2, id: 4, .. }
        ));
    }

    #[test]
    fn parse_tolerates_crlf() {
        let g = Graph::parse("3 2\r\n1 2\r\n2 3\r\n").unwrap();
        assert_eq!(g.edge_count(), 2);
    }

    #[test]
    fn incidence_count_is_twice_edges() {
        let g = Graph::parse("4 3\n1 2\n2 3\n3 4").unwrap();
        assert_eq!(g.incidences().count(), 2 * g.edge_count());
        for v in g.vertices() {
            assert_eq!(g.strong_incidences(v).count(), g.degree(v));
            assert_eq!(g.weak_incidences(v).count(), g.degree(v));
        }
    }

    #[test]
    fn edge_list_round_trip() {
        let g = Graph::parse("5 4\n5 1\n2 3\n3 4\n1 2").unwrap();
        let g2 = Graph::parse(&g.to_edge_list()).unwrap();
        assert_eq!(g, g2);
    }
}
