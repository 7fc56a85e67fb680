//! Minimal separators of a triconnected plane graph.
//!
//! `S` is a minimal separator of triconnected plane `G` iff `L_G[S]` is a
//! cycle with a vertex of `G` strictly inside and strictly outside it. Every
//! chordless cycle of `L_G` on four or more vertices qualifies; a chordless
//! triangle qualifies unless it bounds an empty region. Enumerating
//! chordless cycles of `L_G` and keeping those with two full components
//! therefore lists every minimal separator once, with polynomial delay.

use crate::chordless::ChordlessCycles;
use crate::graph::{Component, Graph};
use crate::latching::LatchingGraph;
use crate::meter::WorkMeter;
use crate::set::VertexSet;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinSep {
    pub vertices: VertexSet,
    /// `S` as the chordless cycle of the latching graph.
    pub cycle_order: Vec<usize>,
    /// The two full components, ordered by minimum vertex.
    pub sides: [Component; 2],
}

impl MinSep {
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// The side containing `v`, if any.
    pub fn side_of(&self, v: usize) -> Option<usize> {
        (0..2).find(|&i| self.sides[i].vertices.contains(v))
    }
}

pub struct MinimalSeparators {
    base: Graph,
    cycles: ChordlessCycles,
    meter: WorkMeter,
    rejected_large: u64,
    rejected: u64,
}

impl MinimalSeparators {
    /// Minimal separators avoiding the vertices outside `allowed`.
    pub fn within(l: &LatchingGraph, allowed: VertexSet, meter: WorkMeter) -> Self {
        MinimalSeparators {
            base: l.base().graph().clone(),
            cycles: ChordlessCycles::new(l.graph_rc(), allowed, meter.clone()),
            meter,
            rejected_large: 0,
            rejected: 0,
        }
    }

    /// Chordless cycles on four or more vertices that failed the separator
    /// test. Always zero for a triconnected plane base graph.
    pub fn rejected_large(&self) -> u64 {
        self.rejected_large
    }

    /// All chordless cycles that were not separators.
    pub fn rejected(&self) -> u64 {
        self.rejected
    }
}

impl Iterator for MinimalSeparators {
    type Item = MinSep;

    fn next(&mut self) -> Option<MinSep> {
        for cycle in self.cycles.by_ref() {
            let s = VertexSet::from_vertices(self.base.n(), cycle.iter().copied());
            self.meter.tick(self.base.n() as u64);
            let comps = self.base.components(&s);
            let mut full = comps.into_iter().filter(|c| c.is_full(&s));
            match (full.next(), full.next(), full.next()) {
                (Some(a), Some(b), None) => {
                    return Some(MinSep {
                        vertices: s,
                        cycle_order: cycle,
                        sides: [a, b],
                    })
                }
                _ => {
                    self.rejected += 1;
                    if cycle.len() >= 4 {
                        self.rejected_large += 1;
                    }
                }
            }
        }
        None
    }
}

/// All minimal separators of the triconnected plane base graph of `l`.
pub fn minimal_separators(l: &LatchingGraph) -> MinimalSeparators {
    MinimalSeparators::within(l, l.base().graph().vertex_set(), WorkMeter::new())
}

/// The minimal separators not containing `v`.
pub fn minimal_separators_avoiding(l: &LatchingGraph, v: usize) -> MinimalSeparators {
    let mut allowed = l.base().graph().vertex_set();
    allowed.remove(v);
    MinimalSeparators::within(l, allowed, WorkMeter::new())
}
