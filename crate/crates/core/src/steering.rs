//! Steering recognition.
//!
//! A graph `H` is an `(S, P)`-steering when `H[S]` is a cycle, the
//! neighborhood of `P` on that cycle is neither empty nor a slot (a single
//! vertex or a cycle edge), and, if `|P| >= 2`, `H[P]` is a path whose
//! internal vertices see nothing of `S` while each end sees a slot. With
//! `|P| = 1` the steering is a wheel.
//!
//! For a triconnected plane graph `G`, a vertex set `X` is a potential
//! maximal clique exactly when `L_G[X]` is a plane graph and a steering.
//!
//! Recognition tries every wheel apex, then every path `P` whose interior
//! consists of degree-2 vertices of `H` (forced, since interior vertices of
//! `P` have no neighbors outside `P`).

use crate::graph::Graph;
use crate::latching::LatchingGraph;
use crate::set::VertexSet;

/// A witness bipartition `(S, P)` of a steering.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SteeringCertificate {
    /// `S` in cycle order, starting at its smallest vertex and continuing
    /// towards the smaller of its two cycle neighbors.
    pub s_cycle: Vec<usize>,
    /// `P` in path order, starting at the smaller end.
    pub p_path: Vec<usize>,
    pub wheel: bool,
}

impl SteeringCertificate {
    /// The same certificate with every vertex `v` replaced by `labels[v]`.
    pub fn relabel(&self, labels: &[usize]) -> SteeringCertificate {
        SteeringCertificate {
            s_cycle: self.s_cycle.iter().map(|&v| labels[v]).collect(),
            p_path: self.p_path.iter().map(|&v| labels[v]).collect(),
            wheel: self.wheel,
        }
    }
}

/// Whether `r` is a slot of the cycle listed in `cycle`: a single cycle
/// vertex or a pair of cycle-consecutive vertices.
pub fn is_slot(cycle: &[usize], r: &VertexSet) -> bool {
    let pos = |v: usize| cycle.iter().position(|&c| c == v);
    match r.len() {
        1 => pos(r.first().unwrap()).is_some(),
        2 => {
            let vs = r.to_vec();
            match (pos(vs[0]), pos(vs[1])) {
                (Some(i), Some(j)) => {
                    let k = cycle.len();
                    (i + 1) % k == j || (j + 1) % k == i
                }
                _ => false,
            }
        }
        _ => false,
    }
}

/// Canonical cycle order of `h[s]` if it is a cycle, else `None`.
pub fn cycle_order(h: &Graph, s: &VertexSet) -> Option<Vec<usize>> {
    let k = s.len();
    if k < 3 {
        return None;
    }
    for v in s.iter() {
        if h.neighbor_set(v).intersection_len(s) != 2 {
            return None;
        }
    }
    let start = s.first()?;
    let mut order = Vec::with_capacity(k);
    order.push(start);
    let mut prev = start;
    let mut cur = h.neighbor_set(start).intersection(s).first()?;
    while cur != start {
        if order.len() == k {
            return None;
        }
        order.push(cur);
        let next = h
            .neighbor_set(cur)
            .intersection(s)
            .iter()
            .find(|&w| w != prev)?;
        prev = cur;
        cur = next;
    }
    (order.len() == k).then_some(order)
}

/// Slot test against a cycle given as a set, using adjacency in `h`.
fn is_slot_in(h: &Graph, s: &VertexSet, r: &VertexSet) -> bool {
    match r.len() {
        1 => r.is_subset(s),
        2 => {
            let vs = r.to_vec();
            r.is_subset(s) && h.has_edge(vs[0], vs[1])
        }
        _ => false,
    }
}

/// Whether `cert` witnesses that `h` is a steering.
pub fn check_certificate(h: &Graph, cert: &SteeringCertificate) -> bool {
    let n = h.n();
    let s = VertexSet::from_vertices(n, cert.s_cycle.iter().copied());
    let p = VertexSet::from_vertices(n, cert.p_path.iter().copied());
    if s.len() != cert.s_cycle.len()
        || p.len() != cert.p_path.len()
        || p.is_empty()
        || !s.is_disjoint(&p)
        || s.len() + p.len() != n
        || cert.wheel != (p.len() == 1)
    {
        return false;
    }
    // h[S] is exactly the listed cycle
    let k = cert.s_cycle.len();
    if k < 3 || s.iter().any(|v| h.neighbor_set(v).intersection_len(&s) != 2) {
        return false;
    }
    if (0..k).any(|i| !h.has_edge(cert.s_cycle[i], cert.s_cycle[(i + 1) % k])) {
        return false;
    }
    let attach = h.neighborhood(&p);
    if attach.is_empty() || is_slot(&cert.s_cycle, &attach) {
        return false;
    }
    let m = cert.p_path.len();
    if m == 1 {
        return true;
    }
    // h[P] is exactly the listed path
    for (i, &v) in cert.p_path.iter().enumerate() {
        let inside = h.neighbor_set(v).intersection(&p);
        let expected = usize::from(i > 0) + usize::from(i + 1 < m);
        if inside.len() != expected {
            return false;
        }
        if i + 1 < m && !h.has_edge(v, cert.p_path[i + 1]) {
            return false;
        }
        let outside = h.neighbor_set(v).intersection(&s);
        let is_end = i == 0 || i + 1 == m;
        if is_end {
            if !is_slot(&cert.s_cycle, &outside) {
                return false;
            }
        } else if !outside.is_empty() {
            return false;
        }
    }
    true
}

fn orient_path(mut path: Vec<usize>) -> Vec<usize> {
    if path.len() > 1 && path[0] > path[path.len() - 1] {
        path.reverse();
    }
    path
}

/// Every certificate candidate that passes the definition, in scan order.
struct Candidates<'a> {
    h: &'a Graph,
}

impl Candidates<'_> {
    fn wheel(&self, v: usize) -> Option<SteeringCertificate> {
        let h = self.h;
        let mut s = h.vertex_set();
        s.remove(v);
        let nv = h.neighbor_set(v);
        if nv.is_empty() || nv.len() <= 2 && is_slot_in(h, &s, nv) {
            return None;
        }
        let order = cycle_order(h, &s)?;
        Some(SteeringCertificate {
            s_cycle: order,
            p_path: vec![v],
            wheel: true,
        })
    }

    fn path(&self, path: &[usize]) -> Option<SteeringCertificate> {
        let h = self.h;
        let p = VertexSet::from_vertices(h.n(), path.iter().copied());
        let mut s = h.vertex_set();
        s.difference_with(&p);
        let m = path.len();
        // cheap end checks first
        for &t in [path[0], path[m - 1]].iter() {
            let out = h.neighbor_set(t).intersection(&s);
            if !is_slot_in(h, &s, &out) {
                return None;
            }
        }
        let attach = h.neighborhood(&p);
        if attach.len() <= 2 && (attach.is_empty() || is_slot_in(h, &s, &attach)) {
            return None;
        }
        let order = cycle_order(h, &s)?;
        let cert = SteeringCertificate {
            s_cycle: order,
            p_path: orient_path(path.to_vec()),
            wheel: false,
        };
        check_certificate(h, &cert).then_some(cert)
    }

    /// Calls `f` on every valid certificate; stops early when `f` returns
    /// `true`.
    fn scan(&self, mut f: impl FnMut(SteeringCertificate) -> bool) {
        let h = self.h;
        let n = h.n();
        if n < 4 {
            return;
        }
        for v in 0..n {
            if let Some(c) = self.wheel(v) {
                if f(c) {
                    return;
                }
            }
        }
        // paths t1 - x - ... grown through degree-2 vertices only
        for t1 in 0..n {
            for &x in h.neighbors(t1) {
                let mut path = vec![t1, x];
                loop {
                    let last = *path.last().unwrap();
                    // each path is met from both ends; keep one
                    if t1 < last && path.len() < n - 2 {
                        if let Some(c) = self.path(&path) {
                            if f(c) {
                                return;
                            }
                        }
                    }
                    if h.degree(last) != 2 {
                        break;
                    }
                    let prev = path[path.len() - 2];
                    let next = h.neighbors(last).iter().copied().find(|&w| w != prev);
                    match next {
                        Some(w) if !path.contains(&w) => path.push(w),
                        _ => break,
                    }
                }
            }
        }
    }
}

/// A steering certificate for `h`, choosing the lexicographically smallest
/// sorted `P` among all valid bipartitions, or `None` if `h` is not a
/// steering.
pub fn find_certificate(h: &Graph) -> Option<SteeringCertificate> {
    let mut best: Option<(Vec<usize>, SteeringCertificate)> = None;
    Candidates { h }.scan(|c| {
        let mut key = c.p_path.clone();
        key.sort_unstable();
        if best.as_ref().is_none_or(|(k, _)| key < *k) {
            best = Some((key, c));
        }
        false
    });
    let cert = best.map(|(_, c)| c);
    if cert.is_some() {
        debug_assert!(h.is_biconnected(), "steerings are biconnected");
    }
    cert
}

/// Whether `h` is a steering.
pub fn is_steering(h: &Graph) -> bool {
    let mut found = false;
    Candidates { h }.scan(|_| {
        found = true;
        true
    });
    found
}

/// Whether `x` is a potential maximal clique of the triconnected plane base
/// graph of `l`: `L[X]` must be plane and a steering.
pub fn is_pmc_by_steering(l: &LatchingGraph, x: &VertexSet) -> bool {
    l.is_plane_induced(x) && is_steering(&l.induced(x).graph)
}
