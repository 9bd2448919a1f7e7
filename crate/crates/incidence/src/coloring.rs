//! Incidences and incidence colorings, plus the JSON interchange records.

use serde::{Deserialize, Serialize};
use std::collections::HashMap;
use thiserror::Error;

use crate::graph::Graph;

/// A vertex-edge pair `(v, e)` with `v` an endpoint of `e`. The edge is kept
/// canonical as `(min, max)`, so an incidence is identified by the triple
/// `(vertex, min, max)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Incidence {
    pub vertex: u32,
    pub edge: (u32, u32),
}

impl Incidence {
    /// Canonicalizes the edge orientation. Panics if `vertex` is not an
    /// endpoint of `edge`.
    pub fn new(vertex: u32, edge: (u32, u32)) -> Self {
        Self::try_new(vertex, edge)
            .unwrap_or_else(|| panic!("incidence vertex {vertex} not an endpoint of edge {edge:?}"))
    }

    pub fn try_new(vertex: u32, edge: (u32, u32)) -> Option<Self> {
        let e = (edge.0.min(edge.1), edge.0.max(edge.1));
        if vertex == e.0 || vertex == e.1 {
            Some(Incidence { vertex, edge: e })
        } else {
            None
        }
    }

    /// The other endpoint of the edge.
    pub fn partner(&self) -> u32 {
        if self.vertex == self.edge.0 {
            self.edge.1
        } else {
            self.edge.0
        }
    }

    /// The incidence on the same edge at the other endpoint.
    pub fn opposite(&self) -> Incidence {
        Incidence {
            vertex: self.partner(),
            edge: self.edge,
        }
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ColoringError {
    #[error("color {color} out of palette range 0..{k}")]
    ColorOutOfRange { color: u32, k: u32 },
    #[error("incidence ({v}, {{{a},{b}}}) does not belong to the graph")]
    ExtraneousIncidence { v: u32, a: u32, b: u32 },
    #[error("incidence ({v}, {{{a},{b}}}) of the graph is uncolored")]
    MissingIncidence { v: u32, a: u32, b: u32 },
    #[error("incidence ({v}, {{{a},{b}}}) colored twice")]
    DuplicateIncidence { v: u32, a: u32, b: u32 },
    #[error("palette mismatch: expected k = {expected}, coloring declares {got}")]
    PaletteMismatch { expected: u32, got: u32 },
    #[error("record vertex {v} is not an endpoint of edge {{{a},{b}}}")]
    BadRecord { v: u32, a: u32, b: u32 },
}

/// Total map from incidences to colors `0..k`, together with the declared
/// palette size `k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IncidenceColoring {
    k: u32,
    assignment: HashMap<Incidence, u32>,
}

impl IncidenceColoring {
    pub fn new(k: u32) -> Self {
        IncidenceColoring {
            k,
            assignment: HashMap::new(),
        }
    }

    pub fn palette_size(&self) -> u32 {
        self.k
    }

    /// Number of colored incidences.
    pub fn len(&self) -> usize {
        self.assignment.len()
    }

    pub fn is_empty(&self) -> bool {
        self.assignment.is_empty()
    }

    pub fn set(&mut self, inc: Incidence, color: u32) -> Result<(), ColoringError> {
        if color >= self.k {
            return Err(ColoringError::ColorOutOfRange { color, k: self.k });
        }
        self.assignment.insert(inc, color);
        Ok(())
    }

    pub fn get(&self, inc: Incidence) -> Option<u32> {
        self.assignment.get(&inc).copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (Incidence, u32)> + '_ {
        self.assignment.iter().map(|(&i, &c)| (i, c))
    }

    /// Checks that the coloring covers exactly the incidences of `g`.
    pub fn validate_cover(&self, g: &Graph) -> Result<(), ColoringError> {
        for inc in g.incidences() {
            if !self.assignment.contains_key(&inc) {
                return Err(ColoringError::MissingIncidence {
                    v: inc.vertex,
                    a: inc.edge.0,
                    b: inc.edge.1,
                });
            }
        }
        if self.assignment.len() != 2 * g.edge_count() {
            // Some colored incidence is not an incidence of g.
            for &inc in self.assignment.keys() {
                let (a, b) = inc.edge;
                if a == 0 || b as usize > g.vertex_count() || !g.has_edge(a, b) {
                    return Err(ColoringError::ExtraneousIncidence {
                        v: inc.vertex,
                        a,
                        b,
                    });
                }
            }
        }
        Ok(())
    }

    /// Stable record list in canonical incidence order.
    pub fn to_records(&self) -> ColoringDoc {
        let mut incidences: Vec<IncidenceRecord> = self
            .assignment
            .iter()
            .map(|(inc, &c)| IncidenceRecord {
                v: inc.vertex,
                e: [inc.edge.0, inc.edge.1],
                c,
            })
            .collect();
        incidences.sort_unstable_by_key(|r| (r.e, r.v));
        ColoringDoc {
            k: self.k,
            one_based: None,
            incidences,
        }
    }

    /// Rebuilds a coloring from interchange records, normalizing a one-based
    /// document back to canonical residues.
    pub fn from_records(doc: &ColoringDoc) -> Result<Self, ColoringError> {
        let shift = if doc.one_based == Some(true) { 1 } else { 0 };
        let mut coloring = IncidenceColoring::new(doc.k);
        for rec in &doc.incidences {
            let inc = Incidence::try_new(rec.v, (rec.e[0], rec.e[1])).ok_or(
                ColoringError::BadRecord {
                    v: rec.v,
                    a: rec.e[0],
                    b: rec.e[1],
                },
            )?;
            let c = rec
                .c
                .checked_sub(shift)
                .ok_or(ColoringError::ColorOutOfRange {
                    color: rec.c,
                    k: doc.k,
                })?;
            if coloring.get(inc).is_some() {
                return Err(ColoringError::DuplicateIncidence {
                    v: inc.vertex,
                    a: inc.edge.0,
                    b: inc.edge.1,
                });
            }
            coloring.set(inc, c)?;
        }
        Ok(coloring)
    }
}

/// One incidence record of the JSON interchange format.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct IncidenceRecord {
    pub v: u32,
    pub e: [u32; 2],
    pub c: u32,
}

/// The coloring interchange document: `{"k": .., "incidences": [..]}`.
/// Unknown extra fields (defect, method, ...) are ignored when reading, so
/// decorated documents produced by other pipeline stages stay accepted.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ColoringDoc {
    pub k: u32,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub one_based: Option<bool>,
    pub incidences: Vec<IncidenceRecord>,
}

impl ColoringDoc {
    /// Shifts all colors up by one for display and marks the document.
    pub fn into_one_based(mut self) -> Self {
        if self.one_based != Some(true) {
            for rec in &mut self.incidences {
                rec.c += 1;
            }
            self.one_based = Some(true);
        }
        self
    }
}
