//! Mutable working copy of a graph for the reduce-and-extend recursion.
//!
//! Besides adjacency with edge/vertex deletion (and the one edge *addition*
//! used by the minor step), the structure maintains candidate pools for the
//! four unavoidable configurations so the next match is found in amortized
//! constant time instead of rescanning the graph. Pool membership is
//! re-evaluated for every vertex whose local picture a mutation can touch.

use std::collections::BTreeSet;

use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum PrimOp {
    DelEdge(u32, u32),
    AddEdge(u32, u32),
    DelVertex(u32),
}

pub(crate) struct WorkGraph {
    adj: Vec<BTreeSet<u32>>,
    alive: Vec<bool>,
    edges: usize,
    /// Vertices of degree at most 1.
    pool_c1: BTreeSet<u32>,
    /// Degree-2 vertices with a degree-2 neighbor.
    pool_c2: BTreeSet<u32>,
    /// Degree-2 vertices in a triangle whose other corner has degree 3.
    pool_c3: BTreeSet<u32>,
    /// Degree-4 vertices with two degree-2 triangle ears.
    pool_c4: BTreeSet<u32>,
}

impl WorkGraph {
    pub fn from_graph(g: &Graph) -> Self {
        let n = g.vertex_count();
        let mut adj = vec![BTreeSet::new(); n + 1];
        for &(u, v) in g.edges() {
            adj[u as usize].insert(v);
            adj[v as usize].insert(u);
        }
        let mut w = WorkGraph {
            adj,
            alive: vec![true; n + 1],
            edges: g.edge_count(),
            pool_c1: BTreeSet::new(),
            pool_c2: BTreeSet::new(),
            pool_c3: BTreeSet::new(),
            pool_c4: BTreeSet::new(),
        };
        for v in 1..=n as u32 {
            w.recheck(v);
        }
        w
    }

    pub fn edge_count(&self) -> usize {
        self.edges
    }

    pub fn is_alive(&self, v: u32) -> bool {
        self.alive[v as usize]
    }

    pub fn degree(&self, v: u32) -> usize {
        self.adj[v as usize].len()
    }

    pub fn neighbors(&self, v: u32) -> impl Iterator<Item = u32> + '_ {
        self.adj[v as usize].iter().copied()
    }

    pub fn has_edge(&self, u: u32, v: u32) -> bool {
        self.adj[u as usize].contains(&v)
    }

    /// The unique neighbor of a degree-2 vertex besides `not`.
    pub fn other_neighbor(&self, v: u32, not: u32) -> Option<u32> {
        self.neighbors(v).find(|&w| w != not)
    }

    fn p1(&self, v: u32) -> bool {
        self.alive[v as usize] && self.degree(v) <= 1
    }

    fn p2(&self, v: u32) -> bool {
        self.alive[v as usize]
            && self.degree(v) == 2
            && self.neighbors(v).any(|w| self.degree(w) == 2)
    }

    fn p3(&self, v: u32) -> bool {
        if !self.alive[v as usize] || self.degree(v) != 2 {
            return false;
        }
        let mut it = self.neighbors(v);
        let (p, q) = (it.next().unwrap(), it.next().unwrap());
        self.has_edge(p, q) && (self.degree(p) == 3 || self.degree(q) == 3)
    }

    fn p4(&self, u: u32) -> bool {
        if !self.alive[u as usize] || self.degree(u) != 4 {
            return false;
        }
        self.triangle_ears(u).len() >= 2
    }

    /// Degree-2 neighbors of `u` whose second neighbor is also adjacent to
    /// `u`, paired with that second neighbor.
    pub fn triangle_ears(&self, u: u32) -> Vec<(u32, u32)> {
        let mut ears = Vec::new();
        for v in self.neighbors(u) {
            if self.degree(v) == 2 {
                if let Some(x) = self.other_neighbor(v, u) {
                    if self.has_edge(u, x) {
                        ears.push((v, x));
                    }
                }
            }
        }
        ears
    }

    fn recheck(&mut self, v: u32) {
        macro_rules! sync {
            ($pool:ident, $pred:ident) => {
                if self.$pred(v) {
                    self.$pool.insert(v);
                } else {
                    self.$pool.remove(&v);
                }
            };
        }
        sync!(pool_c1, p1);
        sync!(pool_c2, p2);
        sync!(pool_c3, p3);
        sync!(pool_c4, p4);
    }

    /// Re-evaluates every vertex whose pool membership an edge change at
    /// `(a, b)` can affect: the endpoints and their (current) neighbors.
    fn recheck_around(&mut self, a: u32, b: u32) {
        let mut dirty: Vec<u32> = vec![a, b];
        dirty.extend(self.neighbors(a));
        dirty.extend(self.neighbors(b));
        dirty.sort_unstable();
        dirty.dedup();
        for v in dirty {
            self.recheck(v);
        }
    }

    fn del_edge(&mut self, a: u32, b: u32) {
        let removed = self.adj[a as usize].remove(&b);
        debug_assert!(removed, "edge ({a},{b}) absent");
        self.adj[b as usize].remove(&a);
        self.edges -= 1;
        self.recheck_around(a, b);
    }

    fn add_edge(&mut self, a: u32, b: u32) {
        let inserted = self.adj[a as usize].insert(b);
        debug_assert!(inserted, "edge ({a},{b}) already present");
        self.adj[b as usize].insert(a);
        self.edges += 1;
        self.recheck_around(a, b);
    }

    fn del_vertex(&mut self, v: u32) {
        debug_assert_eq!(self.degree(v), 0, "vertex {v} still has edges");
        self.alive[v as usize] = false;
        self.recheck(v);
    }

    fn revive_vertex(&mut self, v: u32) {
        self.alive[v as usize] = true;
        self.recheck(v);
    }

    pub fn apply(&mut self, ops: &[PrimOp]) {
        for &op in ops {
            match op {
                PrimOp::DelEdge(a, b) => self.del_edge(a, b),
                PrimOp::AddEdge(a, b) => self.add_edge(a, b),
                PrimOp::DelVertex(v) => self.del_vertex(v),
            }
        }
    }

    pub fn undo(&mut self, ops: &[PrimOp]) {
        for &op in ops.iter().rev() {
            match op {
                PrimOp::DelEdge(a, b) => self.add_edge(a, b),
                PrimOp::AddEdge(a, b) => self.del_edge(a, b),
                PrimOp::DelVertex(v) => self.revive_vertex(v),
            }
        }
    }

    pub fn min_c1(&self) -> Option<u32> {
        self.pool_c1.first().copied()
    }

    pub fn min_c2(&self) -> Option<u32> {
        self.pool_c2.first().copied()
    }

    pub fn min_c3(&self) -> Option<u32> {
        self.pool_c3.first().copied()
    }

    pub fn min_c4(&self) -> Option<u32> {
        self.pool_c4.first().copied()
    }
}
