//! Polynomial-delay enumeration of chordless paths and chordless cycles.
//!
//! Paths are grown depth first from `s`. A prefix `p` ending in `v` can be
//! completed to a chordless `s`-`t` path iff `t` is reachable from `v`
//! without touching the closed neighborhood of `p - v`: the shortest such
//! route is induced, so appending it keeps the whole path chordless. Every
//! branch that passes this test therefore ends in at least one output, which
//! bounds the work between outputs by `O(n * deg * (n + m))`.
//!
//! A chordless cycle with minimum vertex `s` and cycle neighbors `a < b` is
//! `s` followed by a chordless `a`-`b` path that avoids `N(s) - {a, b}` and
//! every vertex below `s`; enumerating those paths for each `(s, a, b)` lists
//! every chordless cycle once, already in canonical rotation.

use std::rc::Rc;

use crate::graph::Graph;
use crate::meter::WorkMeter;
use crate::set::VertexSet;

/// Chordless `s`-`t` paths of `G[allowed]`, as vertex sequences from `s`
/// to `t`.
pub struct ChordlessPaths {
    g: Rc<Graph>,
    allowed: VertexSet,
    target: usize,
    /// (vertex, index of the next neighbor to try)
    stack: Vec<(usize, usize)>,
    /// cover[x] = number of path vertices whose closed neighborhood holds x
    cover: Vec<u32>,
    meter: WorkMeter,
    started: bool,
}

impl ChordlessPaths {
    pub fn new(g: Rc<Graph>, allowed: VertexSet, s: usize, t: usize, meter: WorkMeter) -> Self {
        assert_ne!(s, t, "chordless paths need distinct ends");
        let n = g.n();
        let mut it = ChordlessPaths {
            g,
            allowed,
            target: t,
            stack: Vec::new(),
            cover: vec![0; n],
            meter,
            started: false,
        };
        if it.allowed.contains(s) && it.allowed.contains(t) && it.reachable(s) {
            it.push(s);
        }
        it
    }

    fn push(&mut self, v: usize) {
        self.cover[v] += 1;
        for &w in self.g.neighbors(v) {
            self.cover[w] += 1;
        }
        self.stack.push((v, 0));
    }

    fn pop(&mut self) {
        let (v, _) = self.stack.pop().expect("pop on empty path");
        self.cover[v] -= 1;
        for &w in self.g.neighbors(v) {
            self.cover[w] -= 1;
        }
    }

    /// Whether the target can be reached from `w` (the prospective next
    /// vertex) through allowed vertices outside the closed neighborhood of
    /// the current path.
    fn reachable(&self, w: usize) -> bool {
        if w == self.target {
            return true;
        }
        if self.cover[self.target] > 0 {
            return false;
        }
        let mut seen = VertexSet::new(self.g.n());
        seen.insert(w);
        let mut queue = vec![w];
        let mut visited = 0u64;
        let mut found = false;
        while let Some(x) = queue.pop() {
            visited += 1;
            for &y in self.g.neighbors(x) {
                if y == self.target {
                    found = true;
                    break;
                }
                if self.allowed.contains(y) && self.cover[y] == 0 && seen.insert(y) {
                    queue.push(y);
                }
            }
            if found {
                break;
            }
        }
        self.meter.tick(visited + 1);
        found
    }

    fn current(&self) -> Vec<usize> {
        self.stack.iter().map(|&(v, _)| v).collect()
    }
}

impl Iterator for ChordlessPaths {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        if self.started {
            // resume after the last output, which ended at the target
            if self.stack.is_empty() {
                return None;
            }
            self.pop();
        }
        self.started = true;
        while let Some(&(v, i)) = self.stack.last() {
            if v == self.target {
                return Some(self.current());
            }
            let ns = self.g.neighbors(v);
            let mut advanced = false;
            let mut j = i;
            while j < ns.len() {
                let w = ns[j];
                j += 1;
                self.meter.tick(1);
                // w is adjacent to v; any other cover would be a chord
                if !self.allowed.contains(w) || self.cover[w] != 1 {
                    continue;
                }
                // tentatively the path is p + w; the blocked set for the
                // rest is N[p], which is exactly cover > 0
                if self.reachable(w) {
                    self.stack.last_mut().unwrap().1 = j;
                    self.push(w);
                    advanced = true;
                    break;
                }
            }
            if !advanced {
                self.pop();
            }
        }
        None
    }
}

/// Chordless cycles of `G[allowed]` in canonical rotation: minimum vertex
/// first, its smaller cycle neighbor second.
pub struct ChordlessCycles {
    g: Rc<Graph>,
    allowed: VertexSet,
    meter: WorkMeter,
    /// current minimum vertex and its eligible neighbors above it
    s: usize,
    above: Vec<usize>,
    a: usize,
    b: usize,
    paths: Option<ChordlessPaths>,
}

impl ChordlessCycles {
    pub fn new(g: Rc<Graph>, allowed: VertexSet, meter: WorkMeter) -> Self {
        let mut it = ChordlessCycles {
            g,
            allowed,
            meter,
            s: 0,
            above: Vec::new(),
            a: 0,
            b: 0,
            paths: None,
        };
        if it.g.n() > 0 {
            it.load_vertex();
        }
        it
    }

    pub fn of(g: Rc<Graph>) -> Self {
        let all = g.vertex_set();
        Self::new(g, all, WorkMeter::new())
    }

    fn load_vertex(&mut self) {
        let s = self.s;
        self.above = if self.allowed.contains(s) {
            self.g
                .neighbors(s)
                .iter()
                .copied()
                .filter(|&w| w > s && self.allowed.contains(w))
                .collect()
        } else {
            Vec::new()
        };
        self.a = 0;
        self.b = 1;
    }
}

impl Iterator for ChordlessCycles {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let n = self.g.n();
        if self.s >= n {
            return None;
        }
        loop {
            if let Some(paths) = self.paths.as_mut() {
                if let Some(p) = paths.next() {
                    let mut cycle = Vec::with_capacity(p.len() + 1);
                    cycle.push(self.s);
                    cycle.extend(p);
                    return Some(cycle);
                }
                self.paths = None;
                self.b += 1;
            }
            if self.a >= self.above.len() {
                self.s += 1;
                if self.s >= n {
                    return None;
                }
                self.load_vertex();
                continue;
            }
            if self.b >= self.above.len() {
                self.a += 1;
                self.b = self.a + 1;
                continue;
            }
            let (s, a, b) = (self.s, self.above[self.a], self.above[self.b]);
            self.meter.tick(1);
            if self.g.has_edge(a, b) {
                self.b += 1;
                return Some(vec![s, a, b]);
            }
            // vertices above s, minus the rest of N[s]
            let mut sub = self.allowed.clone();
            for x in 0..=s {
                sub.remove(x);
            }
            for &w in self.g.neighbors(s) {
                if w != a && w != b {
                    sub.remove(w);
                }
            }
            self.paths = Some(ChordlessPaths::new(
                Rc::clone(&self.g),
                sub,
                a,
                b,
                self.meter.clone(),
            ));
        }
    }
}

/// Whether the vertex sequence is a chordless path of `g`.
pub fn is_chordless_path(g: &Graph, path: &[usize]) -> bool {
    let k = path.len();
    let set = VertexSet::from_vertices(g.n(), path.iter().copied());
    if set.len() != k {
        return false;
    }
    (0..k).all(|i| {
        (i + 1..k).all(|j| g.has_edge(path[i], path[j]) == (j == i + 1))
    })
}

/// Whether the vertex sequence is a chordless cycle of `g` (length >= 3).
pub fn is_chordless_cycle(g: &Graph, cycle: &[usize]) -> bool {
    let k = cycle.len();
    if k < 3 {
        return false;
    }
    let set = VertexSet::from_vertices(g.n(), cycle.iter().copied());
    if set.len() != k {
        return false;
    }
    (0..k).all(|i| {
        (i + 1..k).all(|j| {
            let consecutive = j == i + 1 || (i == 0 && j == k - 1);
            g.has_edge(cycle[i], cycle[j]) == consecutive
        })
    })
}

/// All chordless cycles of `g`.
pub fn chordless_cycles(g: &Graph) -> ChordlessCycles {
    ChordlessCycles::of(Rc::new(g.clone()))
}

/// All chordless `s`-`t` paths of `g`.
pub fn chordless_paths(g: &Graph, s: usize, t: usize) -> ChordlessPaths {
    let all = g.vertex_set();
    ChordlessPaths::new(Rc::new(g.clone()), all, s, t, WorkMeter::new())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn c5_has_one_cycle() {
        let got: Vec<_> = chordless_cycles(&Graph::cycle(5)).collect();
        assert_eq!(got, vec![vec![0, 1, 2, 3, 4]]);
    }

    #[test]
    fn k4_has_four_triangles() {
        let got: Vec<_> = chordless_cycles(&Graph::complete(4)).collect();
        assert_eq!(
            got,
            vec![vec![0, 1, 2], vec![0, 1, 3], vec![0, 2, 3], vec![1, 2, 3]]
        );
    }

    #[test]
    fn c6_has_two_paths_between_antipodes() {
        let got: Vec<_> = chordless_paths(&Graph::cycle(6), 0, 3).collect();
        assert_eq!(got, vec![vec![0, 1, 2, 3], vec![0, 5, 4, 3]]);
    }

    #[test]
    fn k4_only_direct_edge() {
        let got: Vec<_> = chordless_paths(&Graph::complete(4), 0, 1).collect();
        assert_eq!(got, vec![vec![0, 1]]);
    }

    #[test]
    fn unreachable_target_yields_nothing() {
        let g = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(chordless_paths(&g, 0, 3).count(), 0);
        assert_eq!(chordless_cycles(&g).count(), 0);
    }

    #[test]
    fn allowed_mask_restricts_paths() {
        let g = Rc::new(Graph::cycle(6));
        let allowed = g.set([0, 1, 2, 3]);
        let got: Vec<_> = ChordlessPaths::new(g, allowed, 0, 3, WorkMeter::new()).collect();
        assert_eq!(got, vec![vec![0, 1, 2, 3]]);
    }

    #[test]
    fn meter_counts_work() {
        let meter = WorkMeter::new();
        let g = Rc::new(Graph::grid(3, 3));
        let all = g.vertex_set();
        let n = ChordlessPaths::new(g, all, 0, 8, meter.clone()).count();
        assert!(n > 0);
        assert!(meter.get() > 0);
    }

    #[test]
    fn chordless_predicates() {
        let g = Graph::complete(4);
        assert!(is_chordless_path(&g, &[0, 1]));
        assert!(!is_chordless_path(&g, &[0, 1, 2]));
        assert!(is_chordless_cycle(&g, &[0, 1, 2]));
        assert!(!is_chordless_cycle(&g, &[0, 1, 2, 3]));
    }
}
