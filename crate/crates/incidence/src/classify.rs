//! Structural classification feeding the coloring dispatcher.

use crate::graph::Graph;

/// The most specific recognized class of a graph, tested in the fixed order
/// Empty, MatchingK2s, Path, Cycle, Complete, CompleteBipartite, Tree,
/// SubcubicCandidate, General. Each tag is checkable by an independent
/// predicate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GraphClass {
    /// No edges at all (any number of isolated vertices).
    Empty,
    /// Every component is an isolated vertex or a single edge; at least one
    /// edge exists.
    MatchingK2s,
    /// A path on at least 3 vertices.
    Path,
    Cycle,
    Complete,
    /// Complete bipartite with the two sides as witness (larger side first).
    CompleteBipartite {
        left: Vec<u32>,
        right: Vec<u32>,
    },
    Tree,
    /// Connected with maximum degree at most 3, not any earlier class.
    SubcubicCandidate,
    General,
}

impl GraphClass {
    pub fn tag(&self) -> &'static str {
        match self {
            GraphClass::Empty => "empty",
            GraphClass::MatchingK2s => "matching",
            GraphClass::Path => "path",
            GraphClass::Cycle => "cycle",
            GraphClass::Complete => "complete",
            GraphClass::CompleteBipartite { .. } => "complete-bipartite",
            GraphClass::Tree => "tree",
            GraphClass::SubcubicCandidate => "subcubic-candidate",
            GraphClass::General => "general",
        }
    }
}

/// Returns the most specific applicable tag for `g`.
pub fn classify(g: &Graph) -> GraphClass {
    let n = g.vertex_count();
    let m = g.edge_count();
    if m == 0 {
        return GraphClass::Empty;
    }
    if g.max_degree() <= 1 {
        return GraphClass::MatchingK2s;
    }
    let connected = g.is_connected();
    if connected && m == n - 1 && g.max_degree() <= 2 {
        return GraphClass::Path;
    }
    if connected && g.vertices().all(|v| g.degree(v) == 2) {
        return GraphClass::Cycle;
    }
    if n >= 2 && m == n * (n - 1) / 2 {
        return GraphClass::Complete;
    }
    if connected {
        if let Some((left, right)) = complete_bipartition(g) {
            return GraphClass::CompleteBipartite { left, right };
        }
        if m == n - 1 {
            return GraphClass::Tree;
        }
        if g.max_degree() <= 3 {
            return GraphClass::SubcubicCandidate;
        }
    }
    GraphClass::General
}

/// BFS 2-coloring; when the graph is bipartite with sides of sizes `a`, `b`
/// and has exactly `a*b` edges it is complete bipartite. Returned with the
/// larger side first. Requires a connected graph.
pub(crate) fn complete_bipartition(g: &Graph) -> Option<(Vec<u32>, Vec<u32>)> {
    let n = g.vertex_count();
    let mut side = vec![u8::MAX; n + 1];
    let mut queue = std::collections::VecDeque::new();
    side[1] = 0;
    queue.push_back(1u32);
    while let Some(v) = queue.pop_front() {
        for &w in g.neighbors(v) {
            if side[w as usize] == u8::MAX {
                side[w as usize] = 1 - side[v as usize];
                queue.push_back(w);
            } else if side[w as usize] == side[v as usize] {
                return None;
            }
        }
    }
    let mut left: Vec<u32> = g.vertices().filter(|&v| side[v as usize] == 0).collect();
    let mut right: Vec<u32> = g.vertices().filter(|&v| side[v as usize] == 1).collect();
    if left.len() * right.len() != g.edge_count() {
        return None;
    }
    if left.len() < right.len() {
        std::mem::swap(&mut left, &mut right);
    }
    Some((left, right))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{generate, Kind};

    #[test]
    fn c5_is_cycle() {
        let g = generate(Kind::Cycle(5)).unwrap();
        assert_eq!(classify(&g), GraphClass::Cycle);
    }

    #[test]
    fn k32_is_complete_bipartite_with_witness() {
        let g = generate(Kind::CompleteBipartite(3, 2)).unwrap();
        match classify(&g) {
            GraphClass::CompleteBipartite { left, right } => {
                assert_eq!(left.len(), 3);
                assert_eq!(right.len(), 2);
                for &u in &left {
                    for &v in &right {
                        assert!(g.has_edge(u, v));
                    }
                }
            }
            other => panic!("expected complete bipartite, got {other:?}"),
        }
    }

    #[test]
    fn k4_minus_edge_is_subcubic_candidate() {
        let g = Graph::parse("4 5\n1 2\n1 3\n1 4\n2 3\n2 4").unwrap();
        assert_eq!(classify(&g), GraphClass::SubcubicCandidate);
    }

    #[test]
    fn order_of_tags() {
        assert_eq!(
            classify(&generate(Kind::Path(1)).unwrap()),
            GraphClass::Empty
        );
        assert_eq!(
            classify(&generate(Kind::Path(2)).unwrap()),
            GraphClass::MatchingK2s
        );
        assert_eq!(
            classify(&generate(Kind::Path(5)).unwrap()),
            GraphClass::Path
        );
        assert_eq!(
            classify(&generate(Kind::Cycle(3)).unwrap()),
            GraphClass::Cycle
        );
        assert_eq!(
            classify(&generate(Kind::Complete(4)).unwrap()),
            GraphClass::Complete
        );
        assert!(matches!(
            classify(&generate(Kind::Star(3)).unwrap()),
            GraphClass::CompleteBipartite { .. }
        ));
    }

    #[test]
    fn classify_is_stable_on_generated_cycles() {
        for n in 3..=200 {
            let g = generate(Kind::Cycle(n)).unwrap();
            assert_eq!(classify(&g), GraphClass::Cycle, "n={n}");
        }
    }
}
