//! Ground-truth checkers for defective and conditional incidence colorings.
//!
//! [`check_defective`] evaluates the three defining conditions of a
//! d-defective incidence coloring directly:
//!
//! * (a) the strong incidences of each vertex carry pairwise distinct colors,
//! * (b) the two incidences of each edge carry distinct colors,
//! * (c) each color used on a strong incidence of `u` appears at most `d`
//!   times in the multiset of weak-incidence colors of `u`.
//!
//! `d = 0` coincides with the classical proper incidence coloring.
//!
//! [`check_conditional`] evaluates the stronger conditions used to drive the
//! outerplanar induction: per-edge distinctness (i), each color at most once
//! among the weak (ii) and strong (iii) incidences of every vertex, and every
//! palette color present around each vertex of degree at least `Δ - 1` (iv).

use serde::{Deserialize, Serialize};
use std::collections::HashMap;

use crate::coloring::{ColoringError, Incidence, IncidenceColoring};
use crate::graph::Graph;

/// Which defining condition a violation record refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Condition {
    /// Strong incidences of a vertex share a color.
    A,
    /// Both incidences of an edge share a color.
    B,
    /// A strong color of a vertex appears more than `d` times among its weak
    /// incidences.
    C,
    /// Conditional (i): both incidences of an edge share a color.
    I,
    /// Conditional (ii): a color repeats among the weak incidences.
    II,
    /// Conditional (iii): a color repeats among the strong incidences.
    III,
    /// Conditional (iv): a palette color misses `A_u ∪ I_u` at a vertex of
    /// degree at least `Δ - 1`.
    IV,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Violation {
    pub condition: Condition,
    pub vertex: u32,
    /// Incidences witnessing the violation (empty for missing-color reports).
    pub witnesses: Vec<(u32, u32, u32)>,
    /// Observed multiplicity (for (c)/(ii)/(iii)) or the missing color (iv).
    pub multiplicity: u32,
}

/// Outcome of a verification run; `valid` holds exactly when no violations
/// were found. Witness lists are capped at [`MAX_VIOLATIONS`] per condition.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct VerificationReport {
    pub valid: bool,
    pub violations: Vec<Violation>,
}

pub const MAX_VIOLATIONS: usize = 100;

impl VerificationReport {
    fn from_violations(violations: Vec<Violation>) -> Self {
        VerificationReport {
            valid: violations.is_empty(),
            violations,
        }
    }
}

fn witness(inc: Incidence) -> (u32, u32, u32) {
    (inc.vertex, inc.edge.0, inc.edge.1)
}

struct ViolationCollector {
    violations: Vec<Violation>,
    per_condition: HashMap<u8, usize>,
}

impl ViolationCollector {
    fn new() -> Self {
        ViolationCollector {
            violations: Vec::new(),
            per_condition: HashMap::new(),
        }
    }

    fn push(&mut self, v: Violation) {
        let slot = self.per_condition.entry(v.condition as u8).or_insert(0);
        if *slot < MAX_VIOLATIONS {
            *slot += 1;
            self.violations.push(v);
        }
    }
}

/// Verifies a `d`-defective incidence coloring. Fails with a
/// [`ColoringError`] when the coloring does not cover exactly the incidences
/// of `g`.
pub fn check_defective(
    g: &Graph,
    c: &IncidenceColoring,
    d: u32,
) -> Result<VerificationReport, ColoringError> {
    c.validate_cover(g)?;
    let color = |inc: Incidence| c.get(inc).expect("cover validated, incidence colored");
    let mut out = ViolationCollector::new();

    // (b): endpoints of every edge.
    for &(u, v) in g.edges() {
        let iu = Incidence::new(u, (u, v));
        let iv = Incidence::new(v, (u, v));
        if color(iu) == color(iv) {
            out.push(Violation {
                condition: Condition::B,
                vertex: u,
                witnesses: vec![witness(iu), witness(iv)],
                multiplicity: 2,
            });
        }
    }

    // (a) and (c) per vertex.
    for u in g.vertices() {
        let mut strong_by_color: HashMap<u32, Vec<Incidence>> = HashMap::new();
        for inc in g.strong_incidences(u) {
            strong_by_color.entry(color(inc)).or_default().push(inc);
        }
        for (_, incs) in strong_by_color.iter().filter(|(_, v)| v.len() > 1) {
            out.push(Violation {
                condition: Condition::A,
                vertex: u,
                witnesses: incs.iter().copied().map(witness).collect(),
                multiplicity: incs.len() as u32,
            });
        }
        let mut weak_by_color: HashMap<u32, Vec<Incidence>> = HashMap::new();
        for inc in g.weak_incidences(u) {
            weak_by_color.entry(color(inc)).or_default().push(inc);
        }
        for &col in strong_by_color.keys() {
            if let Some(weaks) = weak_by_color.get(&col) {
                if weaks.len() as u32 > d {
                    out.push(Violation {
                        condition: Condition::C,
                        vertex: u,
                        witnesses: weaks.iter().copied().map(witness).collect(),
                        multiplicity: weaks.len() as u32,
                    });
                }
            }
        }
    }

    Ok(VerificationReport::from_violations(out.violations))
}

/// Smallest `d` such that the coloring is `d`-defective, or `None` when
/// conditions (a)/(b) fail (no defect bound repairs those).
pub fn defect_of(g: &Graph, c: &IncidenceColoring) -> Result<Option<u32>, ColoringError> {
    c.validate_cover(g)?;
    let color = |inc: Incidence| c.get(inc).expect("cover validated, incidence colored");

    for &(u, v) in g.edges() {
        if color(Incidence::new(u, (u, v))) == color(Incidence::new(v, (u, v))) {
            return Ok(None);
        }
    }
    let mut worst = 0u32;
    for u in g.vertices() {
        let mut strong = Vec::new();
        for inc in g.strong_incidences(u) {
            strong.push(color(inc));
        }
        {
            let mut sorted = strong.clone();
            sorted.sort_unstable();
            sorted.dedup();
            if sorted.len() != strong.len() {
                return Ok(None);
            }
        }
        let mut weak_count: HashMap<u32, u32> = HashMap::new();
        for inc in g.weak_incidences(u) {
            *weak_count.entry(color(inc)).or_insert(0) += 1;
        }
        for col in strong {
            if let Some(&cnt) = weak_count.get(&col) {
                worst = worst.max(cnt);
            }
        }
    }
    Ok(Some(worst))
}

/// Verifies a conditional incidence `Δ`-coloring (conditions (i)-(iv)).
///
/// Requires `Δ(g) <= big_delta` and a coloring whose declared palette equals
/// `big_delta`. A passing coloring is in particular 1-defective.
pub fn check_conditional(
    g: &Graph,
    c: &IncidenceColoring,
    big_delta: u32,
) -> Result<VerificationReport, ColoringError> {
    if c.palette_size() != big_delta {
        return Err(ColoringError::PaletteMismatch {
            expected: big_delta,
            got: c.palette_size(),
        });
    }
    if (g.max_degree() as u32) > big_delta {
        return Err(ColoringError::PaletteMismatch {
            expected: g.max_degree() as u32,
            got: big_delta,
        });
    }
    c.validate_cover(g)?;
    let color = |inc: Incidence| c.get(inc).expect("cover validated, incidence colored");
    let mut out = ViolationCollector::new();

    for &(u, v) in g.edges() {
        let iu = Incidence::new(u, (u, v));
        let iv = Incidence::new(v, (u, v));
        if color(iu) == color(iv) {
            out.push(Violation {
                condition: Condition::I,
                vertex: u,
                witnesses: vec![witness(iu), witness(iv)],
                multiplicity: 2,
            });
        }
    }

    for u in g.vertices() {
        let mut seen = vec![false; big_delta as usize];
        let mut groups: HashMap<u32, Vec<Incidence>> = HashMap::new();
        for inc in g.weak_incidences(u) {
            groups.entry(color(inc)).or_default().push(inc);
        }
        for (&col, incs) in &groups {
            if (col as usize) < seen.len() {
                seen[col as usize] = true;
            }
            if incs.len() > 1 {
                out.push(Violation {
                    condition: Condition::II,
                    vertex: u,
                    witnesses: incs.iter().copied().map(witness).collect(),
                    multiplicity: incs.len() as u32,
                });
            }
        }
        let mut strong_groups: HashMap<u32, Vec<Incidence>> = HashMap::new();
        for inc in g.strong_incidences(u) {
            strong_groups.entry(color(inc)).or_default().push(inc);
        }
        for (&col, incs) in &strong_groups {
            if (col as usize) < seen.len() {
                seen[col as usize] = true;
            }
            if incs.len() > 1 {
                out.push(Violation {
                    condition: Condition::III,
                    vertex: u,
                    witnesses: incs.iter().copied().map(witness).collect(),
                    multiplicity: incs.len() as u32,
                });
            }
        }
        if g.degree(u) as u32 + 1 >= big_delta {
            for (col, hit) in seen.iter().enumerate() {
                if !hit {
                    out.push(Violation {
                        condition: Condition::IV,
                        vertex: u,
                        witnesses: Vec::new(),
                        multiplicity: col as u32,
                    });
                }
            }
        }
    }

    Ok(VerificationReport::from_violations(out.violations))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    fn coloring(g: &Graph, k: u32, colors: &[(u32, (u32, u32), u32)]) -> IncidenceColoring {
        let mut c = IncidenceColoring::new(k);
        for &(v, e, col) in colors {
            c.set(Incidence::new(v, e), col).unwrap();
        }
        let _ = g;
        c
    }

    fn p3() -> Graph {
        Graph::parse("3 2\n1 2\n2 3").unwrap()
    }

    /// The standard alternating coloring of a 3-vertex path: evaluating the
    /// three conditions by hand shows the defect at the middle vertex is 1.
    fn p3_coloring() -> IncidenceColoring {
        coloring(
            &p3(),
            2,
            &[
                (1, (1, 2), 0),
                (2, (1, 2), 1),
                (2, (2, 3), 0),
                (3, (2, 3), 1),
            ],
        )
    }

    #[test]
    fn p3_valid_at_d1() {
        let g = p3();
        let report = check_defective(&g, &p3_coloring(), 1).unwrap();
        assert!(report.valid, "{:?}", report.violations);
    }

    #[test]
    fn p3_invalid_at_d0_condition_c_at_middle() {
        let g = p3();
        let report = check_defective(&g, &p3_coloring(), 0).unwrap();
        assert!(!report.valid);
        assert!(report
            .violations
            .iter()
            .any(|v| v.condition == Condition::C && v.vertex == 2));
    }

    #[test]
    fn k2_clash_violates_b() {
        let g = Graph::parse("2 1\n1 2").unwrap();
        let c = coloring(&g, 1, &[(1, (1, 2), 0), (2, (1, 2), 0)]);
        let report = check_defective(&g, &c, 5).unwrap();
        assert!(!report.valid);
        assert!(report
            .violations
            .iter()
            .all(|v| v.condition == Condition::B));
        assert_eq!(defect_of(&g, &c).unwrap(), None);
    }

    #[test]
    fn defect_of_p3_is_one() {
        let g = p3();
        assert_eq!(defect_of(&g, &p3_coloring()).unwrap(), Some(1));
    }

    #[test]
    fn mismatch_is_an_error() {
        let g = p3();
        let c = coloring(&g, 2, &[(1, (1, 2), 0)]);
        assert!(check_defective(&g, &c, 1).is_err());
    }

    #[test]
    fn monotone_in_d() {
        let g = p3();
        let c = p3_coloring();
        let mut prev = check_defective(&g, &c, 0).unwrap().valid;
        for d in 1..6 {
            let cur = check_defective(&g, &c, d).unwrap().valid;
            assert!(!prev || cur, "validity must be monotone in d");
            prev = cur;
        }
    }

    #[test]
    fn alternating_path_coloring_is_conditional() {
        // P_4 under the 2-color alternation: every vertex sees both colors.
        let g = Graph::parse("4 3\n1 2\n2 3\n3 4").unwrap();
        let c = coloring(
            &g,
            2,
            &[
                (1, (1, 2), 0),
                (2, (1, 2), 1),
                (2, (2, 3), 0),
                (3, (2, 3), 1),
                (3, (3, 4), 0),
                (4, (3, 4), 1),
            ],
        );
        assert!(check_conditional(&g, &c, 2).unwrap().valid);
    }

    #[test]
    fn conditional_requires_matching_palette() {
        let g = p3();
        let c = p3_coloring();
        assert!(check_conditional(&g, &c, 3).is_err());
        assert!(check_conditional(&g, &c, 2).unwrap().valid);
    }

    #[test]
    fn conditional_iv_detects_missing_color() {
        // P_3 inside palette 3: the middle vertex has degree 2 >= Δ-1, but
        // its surrounding colors are {0,1}, so palette color 2 is missing.
        let g = p3();
        let c = coloring(
            &g,
            3,
            &[
                (1, (1, 2), 0),
                (2, (1, 2), 1),
                (2, (2, 3), 0),
                (3, (2, 3), 1),
            ],
        );
        let report = check_conditional(&g, &c, 3).unwrap();
        assert!(!report.valid);
        assert!(report
            .violations
            .iter()
            .any(|v| v.condition == Condition::IV && v.vertex == 2 && v.multiplicity == 2));
    }
}
