//! Graph generators, including random trees and random outerplanar graphs.
//!
//! All randomized generators are deterministic functions of their seed (see
//! [`crate::rng`]). Outerplanar instances come from uniformly random
//! triangulations of a convex polygon: a uniform full binary tree with
//! `n - 2` internal nodes is drawn by growing one random node at a time, and
//! its internal nodes are read back as polygon chords. Deleting chords
//! independently keeps the graph outerplanar, since outerplanarity is closed
//! under taking subgraphs.

use crate::graph::{Graph, GraphError};
use crate::rng::SplitMix64;

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Kind {
    Path(usize),
    Cycle(usize),
    /// Hub vertex 1 adjacent to `n` leaves (so `n + 1` vertices).
    Star(usize),
    Complete(usize),
    CompleteBipartite(usize, usize),
    RandomTree(usize, u64),
    /// Hub vertex 1 adjacent to every vertex of the path `2..=n+1`.
    Fan(usize),
    /// Cycle `1..=n` plus a uniformly random triangulation of the polygon.
    RandomMaximalOuterplanar(usize, u64),
    /// Random maximal outerplanar graph with each chord deleted
    /// independently with probability `p`.
    RandomOuterplanar(usize, f64, u64),
}

pub fn generate(kind: Kind) -> Result<Graph, GraphError> {
    match kind {
        Kind::Path(n) => {
            require(n >= 1, "path needs n >= 1")?;
            let edges: Vec<_> = (1..n as u32).map(|i| (i, i + 1)).collect();
            Graph::new(n, &edges)
        }
        Kind::Cycle(n) => {
            require(n >= 3, "cycle needs n >= 3")?;
            let mut edges: Vec<_> = (1..n as u32).map(|i| (i, i + 1)).collect();
            edges.push((n as u32, 1));
            Graph::new(n, &edges)
        }
        Kind::Star(n) => {
            require(n >= 1, "star needs n >= 1 leaves")?;
            let edges: Vec<_> = (2..=n as u32 + 1).map(|v| (1, v)).collect();
            Graph::new(n + 1, &edges)
        }
        Kind::Complete(n) => {
            require(n >= 1, "complete graph needs n >= 1")?;
            let mut edges = Vec::new();
            for u in 1..=n as u32 {
                for v in u + 1..=n as u32 {
                    edges.push((u, v));
                }
            }
            Graph::new(n, &edges)
        }
        Kind::CompleteBipartite(m, n) => {
            require(m >= 1 && n >= 1, "complete bipartite needs m, n >= 1")?;
            let mut edges = Vec::new();
            for u in 1..=m as u32 {
                for v in m as u32 + 1..=(m + n) as u32 {
                    edges.push((u, v));
                }
            }
            Graph::new(m + n, &edges)
        }
        Kind::RandomTree(n, seed) => random_tree(n, seed),
        Kind::Fan(n) => {
            require(n >= 1, "fan needs n >= 1 path vertices")?;
            let mut edges: Vec<_> = (2..=n as u32 + 1).map(|v| (1, v)).collect();
            for v in 2..n as u32 + 1 {
                edges.push((v, v + 1));
            }
            Graph::new(n + 1, &edges)
        }
        Kind::RandomMaximalOuterplanar(n, seed) => {
            require(n >= 3, "maximal outerplanar needs n >= 3")?;
            let chords = random_polygon_chords(n, &mut SplitMix64::new(seed));
            let mut edges: Vec<_> = (1..n as u32).map(|i| (i, i + 1)).collect();
            edges.push((1, n as u32));
            edges.extend(chords);
            Graph::new(n, &edges)
        }
        Kind::RandomOuterplanar(n, p, seed) => {
            require(n >= 3, "random outerplanar needs n >= 3")?;
            require((0.0..=1.0).contains(&p), "probability p must be in [0,1]")?;
            let mut rng = SplitMix64::new(seed);
            let mut chords = random_polygon_chords(n, &mut rng);
            chords.sort_unstable();
            let mut edges: Vec<_> = (1..n as u32).map(|i| (i, i + 1)).collect();
            edges.push((1, n as u32));
            for chord in chords {
                if !rng.next_bool(p) {
                    edges.push(chord);
                }
            }
            Graph::new(n, &edges)
        }
    }
}

fn require(cond: bool, msg: &str) -> Result<(), GraphError> {
    if cond {
        Ok(())
    } else {
        Err(GraphError::Invalid(msg.to_string()))
    }
}

/// Uniform random labeled tree by decoding a random Pruefer sequence.
fn random_tree(n: usize, seed: u64) -> Result<Graph, GraphError> {
    require(n >= 1, "tree needs n >= 1")?;
    if n == 1 {
        return Graph::new(1, &[]);
    }
    if n == 2 {
        return Graph::new(2, &[(1, 2)]);
    }
    let mut rng = SplitMix64::new(seed);
    let seq: Vec<u32> = (0..n - 2)
        .map(|_| rng.next_below(n as u64) as u32 + 1)
        .collect();

    let mut degree = vec![1u32; n + 1];
    for &v in &seq {
        degree[v as usize] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    // Min-leaf extraction via a pointer sweep: O(n) overall.
    let mut ptr = 1usize;
    while degree[ptr] != 1 {
        ptr += 1;
    }
    let mut leaf = ptr as u32;
    for &v in &seq {
        edges.push((leaf, v));
        degree[v as usize] -= 1;
        if degree[v as usize] == 1 && (v as usize) < ptr {
            leaf = v;
        } else {
            ptr += 1;
            while degree[ptr] != 1 {
                ptr += 1;
            }
            leaf = ptr as u32;
        }
    }
    edges.push((leaf, n as u32));
    Graph::new(n, &edges)
}

/// Chord set of a uniformly random triangulation of the polygon `1..=n`.
///
/// A triangulation of an `n`-gon corresponds to a full binary tree whose
/// `n - 1` leaves are the boundary edges `(1,2), ..., (n-1,n)` in order and
/// whose root spans the base edge `(1,n)`; every non-root internal node spans
/// a chord. Uniform binary trees are grown node by node: at step `k` one of
/// the `2k - 1` existing nodes is replaced by a new internal node with the
/// old subtree and a fresh leaf attached in a random order, which makes each
/// of the Catalan many shapes equally likely.
fn random_polygon_chords(n: usize, rng: &mut SplitMix64) -> Vec<(u32, u32)> {
    let internal = n - 2;
    if internal == 0 {
        return Vec::new();
    }
    // Nodes: 0 is the initial leaf; children[i] = None for leaves.
    let mut children: Vec<Option<(usize, usize)>> = vec![None];
    let mut parent: Vec<Option<usize>> = vec![None];
    let mut root = 0usize;
    for _ in 0..internal {
        let pick = rng.next_below(children.len() as u64) as usize;
        let new_leaf = children.len();
        children.push(None);
        parent.push(None);
        let new_internal = children.len();
        let kids = if rng.next_bool(0.5) {
            (pick, new_leaf)
        } else {
            (new_leaf, pick)
        };
        children.push(Some(kids));
        parent.push(parent[pick]);
        if let Some(p) = parent[pick] {
            let (l, r) = children[p].unwrap();
            children[p] = Some(if l == pick {
                (new_internal, r)
            } else {
                (l, new_internal)
            });
        } else {
            root = new_internal;
        }
        parent[pick] = Some(new_internal);
        parent[new_leaf] = Some(new_internal);
    }

    // Leaf counts, then an explicit-stack walk emitting chord spans.
    let mut leaves = vec![0u32; children.len()];
    {
        let mut order = Vec::with_capacity(children.len());
        let mut stack = vec![root];
        while let Some(x) = stack.pop() {
            order.push(x);
            if let Some((l, r)) = children[x] {
                stack.push(l);
                stack.push(r);
            }
        }
        for &x in order.iter().rev() {
            leaves[x] = match children[x] {
                None => 1,
                Some((l, r)) => leaves[l] + leaves[r],
            };
        }
    }
    let mut chords = Vec::with_capacity(internal - 1);
    let mut stack = vec![(root, 1u32, n as u32)];
    while let Some((x, lo, hi)) = stack.pop() {
        if let Some((l, r)) = children[x] {
            if x != root {
                chords.push((lo, hi));
            }
            let split = lo + leaves[l];
            stack.push((l, lo, split));
            stack.push((r, split, hi));
        } else {
            debug_assert_eq!(hi - lo, 1);
        }
    }
    chords
}
