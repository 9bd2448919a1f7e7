//! Local backtracking extension of a partial coloring over a small set of
//! free incidences.
//!
//! Two flavors share the same skeleton: the conditional search enforces the
//! four conditional-coloring conditions, the defective search enforces the
//! three defective conditions at a given `d`. Variables are assigned in
//! canonical incidence order, lowest color first, so results are
//! deterministic. The per-vertex "every palette color present" condition of
//! the conditional flavor is only decidable once all incidences around a
//! vertex are known, so it is checked at the leaves for the touched vertices.

use std::collections::HashMap;

use super::work::WorkGraph;
use crate::coloring::Incidence;

pub(crate) struct ExtendBudget {
    pub nodes: u64,
}

impl Default for ExtendBudget {
    fn default() -> Self {
        // Far above anything the fixed-size gadgets need, but finite so a
        // misuse cannot hang.
        ExtendBudget { nodes: 50_000_000 }
    }
}

struct Search<'a> {
    w: &'a WorkGraph,
    colors: &'a HashMap<Incidence, u32>,
    vars: Vec<Incidence>,
    assigned: Vec<(Incidence, u32)>,
    nodes: u64,
    max_nodes: u64,
}

impl<'a> Search<'a> {
    fn new(
        w: &'a WorkGraph,
        colors: &'a HashMap<Incidence, u32>,
        vars: &[Incidence],
        budget: &ExtendBudget,
    ) -> Self {
        debug_assert!(vars.iter().all(|inc| !colors.contains_key(inc)));
        let mut vars: Vec<Incidence> = vars.to_vec();
        vars.sort_unstable();
        vars.dedup();
        Search {
            w,
            colors,
            assigned: Vec::with_capacity(vars.len()),
            vars,
            nodes: 0,
            max_nodes: budget.nodes,
        }
    }

    fn color_of(&self, inc: Incidence) -> Option<u32> {
        self.assigned
            .iter()
            .find(|(i, _)| *i == inc)
            .map(|&(_, c)| c)
            .or_else(|| self.colors.get(&inc).copied())
    }

    /// Conditional constraints (i)-(iii) for placing `c` on `inc`; monotone,
    /// so safe to prune on.
    fn conditional_ok(&self, inc: Incidence, c: u32) -> bool {
        if self.color_of(inc.opposite()) == Some(c) {
            return false;
        }
        // (iii) strong colors distinct at inc.vertex.
        let v = inc.vertex;
        for z in self.w.neighbors(v) {
            let other = Incidence::new(v, (v, z));
            if other != inc && self.color_of(other) == Some(c) {
                return false;
            }
        }
        // (ii) weak colors distinct at the partner.
        let u = inc.partner();
        for z in self.w.neighbors(u) {
            if z == v {
                continue;
            }
            if self.color_of(Incidence::new(z, (u, z))) == Some(c) {
                return false;
            }
        }
        true
    }

    /// Condition (iv) at `v`: all `big_delta` colors appear among the strong
    /// and weak incidences of `v`. Only meaningful when every incidence at
    /// `v` is known.
    fn palette_saturated(&self, v: u32, big_delta: u32) -> bool {
        let mut seen = Vec::with_capacity(2 * self.w.degree(v));
        for z in self.w.neighbors(v) {
            for inc in [Incidence::new(v, (v, z)), Incidence::new(z, (v, z))] {
                match self.color_of(inc) {
                    Some(c) => seen.push(c),
                    None => return false,
                }
            }
        }
        seen.sort_unstable();
        seen.dedup();
        seen.len() == big_delta as usize
    }

    fn dfs_conditional(&mut self, touched: &[u32], big_delta: u32) -> bool {
        if self.assigned.len() == self.vars.len() {
            return touched
                .iter()
                .all(|&v| self.palette_saturated(v, big_delta));
        }
        self.nodes += 1;
        if self.nodes > self.max_nodes {
            return false;
        }
        let inc = self.vars[self.assigned.len()];
        for c in 0..big_delta {
            if self.conditional_ok(inc, c) {
                self.assigned.push((inc, c));
                if self.dfs_conditional(touched, big_delta) {
                    return true;
                }
                self.assigned.pop();
            }
        }
        false
    }

    /// Defective constraints at defect `d` for placing `c` on `inc`.
    fn defective_ok(&self, inc: Incidence, c: u32, d: u32) -> bool {
        if self.color_of(inc.opposite()) == Some(c) {
            return false;
        }
        let v = inc.vertex;
        // (a) strong distinct at v.
        for z in self.w.neighbors(v) {
            let other = Incidence::new(v, (v, z));
            if other != inc && self.color_of(other) == Some(c) {
                return false;
            }
        }
        // (c) at v: c joins the strong set; its weak multiplicity must stay
        // within d.
        let mut count = 0u32;
        for z in self.w.neighbors(v) {
            if self.color_of(Incidence::new(z, (v, z))) == Some(c) {
                count += 1;
            }
        }
        if count > d {
            return false;
        }
        // (c) at the partner u: inc joins the weak multiset of u; if u holds
        // c on a strong incidence the bound must still hold.
        let u = inc.partner();
        let strong_hit = self
            .w
            .neighbors(u)
            .any(|z| self.color_of(Incidence::new(u, (u, z))) == Some(c));
        if strong_hit {
            let mut count = 1u32; // inc itself
            for z in self.w.neighbors(u) {
                if z == v {
                    continue;
                }
                if self.color_of(Incidence::new(z, (u, z))) == Some(c) {
                    count += 1;
                }
            }
            if count > d {
                return false;
            }
        }
        true
    }

    fn dfs_defective(&mut self, k: u32, d: u32) -> bool {
        if self.assigned.len() == self.vars.len() {
            return true;
        }
        self.nodes += 1;
        if self.nodes > self.max_nodes {
            return false;
        }
        let inc = self.vars[self.assigned.len()];
        for c in 0..k {
            if self.defective_ok(inc, c, d) {
                self.assigned.push((inc, c));
                if self.dfs_defective(k, d) {
                    return true;
                }
                self.assigned.pop();
            }
        }
        false
    }
}

/// Backtracking search assigning all of `vars` under the conditional
/// constraints; on success the assignments are merged into `colors` and
/// `true` is returned. `colors` must not already contain any of `vars`.
pub(crate) fn extend_conditional(
    w: &WorkGraph,
    colors: &mut HashMap<Incidence, u32>,
    vars: &[Incidence],
    big_delta: u32,
    budget: &ExtendBudget,
) -> bool {
    let mut search = Search::new(w, colors, vars, budget);
    // Vertices whose presence condition the assignment can affect.
    let mut touched: Vec<u32> = search
        .vars
        .iter()
        .flat_map(|inc| [inc.edge.0, inc.edge.1])
        .collect();
    touched.sort_unstable();
    touched.dedup();
    touched.retain(|&v| w.degree(v) as u32 + 1 >= big_delta);

    if search.dfs_conditional(&touched, big_delta) {
        for (inc, c) in search.assigned {
            colors.insert(inc, c);
        }
        true
    } else {
        false
    }
}

/// Same skeleton for the defective conditions at defect `d` with `k` colors.
pub(crate) fn extend_defective(
    w: &WorkGraph,
    colors: &mut HashMap<Incidence, u32>,
    vars: &[Incidence],
    k: u32,
    d: u32,
    budget: &ExtendBudget,
) -> bool {
    let mut search = Search::new(w, colors, vars, budget);
    if search.dfs_defective(k, d) {
        for (inc, c) in search.assigned {
            colors.insert(inc, c);
        }
        true
    } else {
        false
    }
}
