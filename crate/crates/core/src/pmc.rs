//! Polynomial-delay enumeration of the potential maximal cliques of a
//! triconnected planar graph.
//!
//! Every PMC `X` falls in one of two groups. If every component of `G - X`
//! has three neighbors, `L_G[X]` is a plane `K4`; these are found by a
//! direct scan. Otherwise some component `C` of `G - X` has a separator
//! `S = N(C)` of size at least four, and `X = S ∪ P` for a set `P` inside the
//! opposite full component `C'` of `S`. For fixed `(S, C)` the candidates
//! `P` are:
//!
//! * a single vertex of `C'` whose latching neighborhood on `S` is not a
//!   slot (a wheel over `S`);
//! * a chordless path between two *ports* (vertices of `C'` seeing a slot of
//!   `S`) whose interior avoids the latching neighborhood of `S`;
//! * a chordless path between two ports whose interior may also touch one
//!   *hinge* vertex `s` of `S`, making `s` the apex of a wheel.
//!
//! Paths of the last kind can be found from several `(port, port, hinge)`
//! triples, and may also be paths of the second kind; the union scheduler
//! of [`crate::polydelay`] assigns each to one source. At the top level the
//! per-vertex streams (all `(S, C)` with `v ∈ C`) overlap and are merged the
//! same way.

use std::cell::RefCell;
use std::rc::Rc;

use crate::chordless::{is_chordless_path, ChordlessPaths};
use crate::error::{Error, Result};
use crate::graph::{Component, Graph};
use crate::latching::{build_latching, LatchingGraph, LatchingSubgraph};
use crate::meter::WorkMeter;
use crate::minsep::{MinSep, MinimalSeparators};
use crate::planar::{embed, is_triconnected, PlaneGraph};
use crate::polydelay::{Lazy, SchedulerStats, UnionGenerator};
use crate::set::VertexSet;
use crate::steering::{check_certificate, find_certificate, is_slot, SteeringCertificate};

/// How a PMC was produced.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PmcCategory {
    /// `L[X]` is a plane `K4`.
    K4,
    /// `X = S ∪ {u}` for a vertex `u` seeing a non-slot of `S`.
    Wheel,
    /// `X = S ∪ P` for a port-to-port path avoiding `N_L(S)` inside.
    Path,
    /// `X = S ∪ P` where `L[X]` is a wheel around a hinge of `S`.
    Hinge,
}

#[derive(Clone, Debug)]
pub struct Pmc {
    pub vertices: VertexSet,
    /// Witness bipartition in original vertex ids.
    pub certificate: SteeringCertificate,
    pub category: PmcCategory,
    /// The component `C` with `|N(C)| >= 4` the PMC was generated for;
    /// `None` for the `K4` category.
    pub witness: Option<Component>,
}

/// A vertex of `C'` whose latching neighborhood on `S` is a slot.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Port {
    pub vertex: usize,
    pub slot: VertexSet,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValidPair {
    pub u1: usize,
    pub u2: usize,
    pub hinges: Vec<usize>,
}

/// Counters shared by all sub-streams of one enumeration.
#[derive(Clone, Debug, Default)]
pub struct PmcStats {
    pub emitted: u64,
    pub by_category: [u64; 4],
    /// Candidates that failed the plane-steering check and were dropped.
    pub safety_rejections: u64,
    /// `(S, C)` pairs that produced nothing.
    pub empty_components: u64,
    pub components_processed: u64,
    /// Separators of size four or more rejected by the minimal-separator
    /// filter.
    pub rejected_large_separators: u64,
    /// Suppressions inside per-component schedulers.
    pub component_suppressions: u64,
    pub component_invariant_violations: u64,
    pub component_missing_successor: u64,
    /// Work between consecutive outputs, the first measured from the start.
    pub work_gaps: Vec<u64>,
    /// Scheduler over the per-vertex streams.
    pub top: SchedulerStats,
}

impl PmcStats {
    pub fn max_work_gap(&self) -> u64 {
        self.work_gaps.iter().copied().max().unwrap_or(0)
    }
}

type Shared = Rc<RefCell<PmcStats>>;

/// One side of a separator, with the sets every operation needs.
#[derive(Clone, Debug)]
struct Side {
    l: Rc<LatchingGraph>,
    s: VertexSet,
    cycle: Vec<usize>,
    c: Component,
    c_prime: VertexSet,
    /// `N_L(S) ∩ C'`
    near: VertexSet,
}

impl Side {
    fn new(l: Rc<LatchingGraph>, sep: &MinSep, side: usize) -> Side {
        let c = sep.sides[side].clone();
        let c_prime = sep.sides[1 - side].vertices.clone();
        let near = l.graph().neighborhood(&sep.vertices).intersection(&c_prime);
        Side {
            s: sep.vertices.clone(),
            cycle: sep.cycle_order.clone(),
            c,
            c_prime,
            near,
            l,
        }
    }

    fn lg(&self) -> &Graph {
        self.l.graph()
    }

    fn s_nbrs(&self, u: usize) -> VertexSet {
        self.lg().neighbor_set(u).intersection(&self.s)
    }

    fn ports(&self) -> Vec<Port> {
        self.near
            .iter()
            .filter_map(|u| {
                let slot = self.s_nbrs(u);
                is_slot(&self.cycle, &slot).then_some(Port { vertex: u, slot })
            })
            .collect()
    }

    fn wheel_apexes(&self) -> Vec<usize> {
        self.near
            .iter()
            .filter(|&u| !is_slot(&self.cycle, &self.s_nbrs(u)))
            .collect()
    }

    /// The two cycle neighbors of `s`.
    fn around(&self, s: usize) -> (usize, usize) {
        let k = self.cycle.len();
        let i = self.cycle.iter().position(|&x| x == s).expect("vertex on the cycle");
        (self.cycle[(i + k - 1) % k], self.cycle[(i + 1) % k])
    }

    fn hinges(&self, a: &Port, b: &Port) -> Vec<usize> {
        let fits = |slot: &VertexSet, t: usize, s: usize| {
            let mut one = VertexSet::new(slot.universe());
            one.insert(t);
            let mut two = one.clone();
            two.insert(s);
            *slot == one || *slot == two
        };
        self.cycle
            .iter()
            .copied()
            .filter(|&s| {
                let (x, y) = self.around(s);
                (fits(&a.slot, x, s) && fits(&b.slot, y, s))
                    || (fits(&a.slot, y, s) && fits(&b.slot, x, s))
            })
            .collect()
    }

    fn valid_pairs(&self, ports: &[Port]) -> Vec<ValidPair> {
        let mut out = Vec::new();
        for (i, a) in ports.iter().enumerate() {
            for b in &ports[i + 1..] {
                if is_slot(&self.cycle, &a.slot.union(&b.slot)) {
                    continue;
                }
                out.push(ValidPair {
                    u1: a.vertex,
                    u2: b.vertex,
                    hinges: self.hinges(a, b),
                });
            }
        }
        out
    }

    fn a_set(&self, u1: usize, u2: usize) -> VertexSet {
        let mut a = self.c_prime.difference(&self.near);
        a.insert(u1);
        a.insert(u2);
        a
    }

    /// Vertices of `C'` whose only neighbor on `S` is `s`, added to `A`.
    fn b_set(&self, u1: usize, u2: usize, s: usize) -> VertexSet {
        let mut b = self.a_set(u1, u2);
        for w in self.near.iter() {
            let nb = self.s_nbrs(w);
            if nb.len() == 1 && nb.contains(s) {
                b.insert(w);
            }
        }
        b
    }

    fn x_of(&self, path: &[usize]) -> VertexSet {
        let mut x = self.s.clone();
        for &v in path {
            x.insert(v);
        }
        x
    }

    /// Membership of a path in the port-to-port family.
    fn in_path_family(&self, p: &[usize]) -> bool {
        let (u1, u2) = (p[0], p[p.len() - 1]);
        if p.len() < 2 || !p.iter().all(|&v| self.c_prime.contains(v)) {
            return false;
        }
        if p[1..p.len() - 1].iter().any(|&v| self.near.contains(v)) {
            return false;
        }
        let (s1, s2) = (self.s_nbrs(u1), self.s_nbrs(u2));
        is_slot(&self.cycle, &s1)
            && is_slot(&self.cycle, &s2)
            && !is_slot(&self.cycle, &s1.union(&s2))
            && is_chordless_path(self.lg(), p)
    }

    fn path_certificate(&self, p: &[usize]) -> SteeringCertificate {
        let mut path = p.to_vec();
        if path[0] > path[path.len() - 1] {
            path.reverse();
        }
        SteeringCertificate {
            s_cycle: self.cycle.clone(),
            p_path: path,
            wheel: false,
        }
    }

    /// `(S', {s})` certificate: `S'` runs along `p` and back around `S`
    /// avoiding `s`.
    fn hinge_certificate(&self, p: &[usize], s: usize) -> SteeringCertificate {
        let k = self.cycle.len();
        let pos = |x: usize| self.cycle.iter().position(|&c| c == x).unwrap();
        let end_attach = |u: usize| {
            let mut nb = self.s_nbrs(u);
            nb.remove(s);
            nb.first()
        };
        let mut ring: Vec<usize> = p.to_vec();
        if let (Some(s1), Some(s2)) = (end_attach(p[0]), end_attach(p[p.len() - 1])) {
            let mut i = pos(s2);
            let step = if self.cycle[(i + 1) % k] == s { k - 1 } else { 1 };
            loop {
                ring.push(self.cycle[i]);
                if self.cycle[i] == s1 {
                    break;
                }
                i = (i + step) % k;
                if ring.len() > k + p.len() {
                    break;
                }
            }
        }
        SteeringCertificate {
            s_cycle: canonical_cycle(ring),
            p_path: vec![s],
            wheel: true,
        }
    }
}

/// Rotates and orients a cycle to start at its minimum, towards the smaller
/// neighbor.
fn canonical_cycle(mut c: Vec<usize>) -> Vec<usize> {
    if c.is_empty() {
        return c;
    }
    let i = (0..c.len()).min_by_key(|&i| c[i]).unwrap();
    c.rotate_left(i);
    if c.len() > 2 && c[c.len() - 1] < c[1] {
        c[1..].reverse();
    }
    c
}

/// Ports of `(S, C)` where `C = sep.sides[side]`.
pub fn ports(l: &Rc<LatchingGraph>, sep: &MinSep, side: usize) -> Vec<Port> {
    Side::new(Rc::clone(l), sep, side).ports()
}

/// Valid port pairs of `(S, C)` with their hinges, ordered by `(u1, u2)`.
pub fn valid_pairs(l: &Rc<LatchingGraph>, sep: &MinSep, side: usize) -> Vec<ValidPair> {
    let sd = Side::new(Rc::clone(l), sep, side);
    let ports = sd.ports();
    sd.valid_pairs(&ports)
}

/// `L[(C' - N_L(S)) ∪ {u1, u2}]`.
pub fn graph_a(l: &Rc<LatchingGraph>, sep: &MinSep, side: usize, u1: usize, u2: usize) -> LatchingSubgraph {
    let sd = Side::new(Rc::clone(l), sep, side);
    l.induced(&sd.a_set(u1, u2))
}

/// `A` plus the vertices of `C'` whose only latching neighbor on `S` is the
/// hinge `s`.
pub fn graph_b(
    l: &Rc<LatchingGraph>,
    sep: &MinSep,
    side: usize,
    u1: usize,
    u2: usize,
    s: usize,
) -> LatchingSubgraph {
    let sd = Side::new(Rc::clone(l), sep, side);
    l.induced(&sd.b_set(u1, u2, s))
}

type PathItem = (Vec<usize>, Option<usize>);
type PathGen = Box<dyn Iterator<Item = PathItem>>;
type PathMember = Box<dyn FnMut(&PathItem, usize) -> bool>;

/// The PMCs `X` with `C` a component of `G - X`, for `C` one side of a
/// separator of size at least four.
pub struct ComponentPmcs {
    side: Rc<Side>,
    wheels: std::vec::IntoIter<usize>,
    triples: Rc<Vec<(usize, usize, usize, VertexSet)>>,
    paths: UnionGenerator<PathItem, PathGen, PathMember>,
    stats: Shared,
    emitted: u64,
    done: bool,
}

impl ComponentPmcs {
    fn new(l: Rc<LatchingGraph>, sep: &MinSep, side: usize, meter: WorkMeter, stats: Shared) -> Self {
        let sd = Rc::new(Side::new(l, sep, side));
        let ports = sd.ports();
        let pairs = sd.valid_pairs(&ports);
        meter.tick((sd.near.len() * sd.cycle.len() + pairs.len()) as u64);
        let mut triples = Vec::new();
        for vp in &pairs {
            for &s in &vp.hinges {
                triples.push((vp.u1, vp.u2, s, sd.b_set(vp.u1, vp.u2, s)));
            }
        }
        let triples = Rc::new(triples);

        let mut gens: Vec<PathGen> = Vec::with_capacity(triples.len() + 1);
        {
            let sd = Rc::clone(&sd);
            let meter = meter.clone();
            gens.push(Box::new(pairs.into_iter().flat_map(move |vp| {
                let allowed = sd.a_set(vp.u1, vp.u2);
                let lg = sd.l.graph_rc();
                let meter = meter.clone();
                Lazy::new(move || ChordlessPaths::new(lg, allowed, vp.u1, vp.u2, meter))
                    .map(|p| (p, None))
            })));
        }
        for (i, (u1, u2, _, b)) in triples.iter().enumerate() {
            let (u1, u2, b) = (*u1, *u2, b.clone());
            let lg = sd.l.graph_rc();
            let meter = meter.clone();
            gens.push(Box::new(
                Lazy::new(move || ChordlessPaths::new(lg, b, u1, u2, meter)).map(move |p| (p, Some(i))),
            ));
        }
        let member: PathMember = {
            let sd = Rc::clone(&sd);
            let triples = Rc::clone(&triples);
            let meter = meter.clone();
            Box::new(move |(p, _): &PathItem, j: usize| {
                meter.tick(p.len() as u64);
                if j == 0 {
                    return sd.in_path_family(p);
                }
                let (u1, u2, _, b) = &triples[j - 1];
                p[0] == *u1
                    && p[p.len() - 1] == *u2
                    && p.iter().all(|&v| b.contains(v))
                    && is_chordless_path(sd.lg(), p)
            })
        };
        let wheels = sd.wheel_apexes().into_iter();
        ComponentPmcs {
            side: sd,
            wheels,
            triples,
            paths: UnionGenerator::new(gens, member),
            stats,
            emitted: 0,
            done: false,
        }
    }

    /// Applies the plane-steering safety check and counts the outcome.
    fn finish(&mut self, x: VertexSet, cert: SteeringCertificate, category: PmcCategory) -> Option<Pmc> {
        let l = &self.side.l;
        let ok = l.is_plane_induced(&x) && {
            let sub = l.induced(&x);
            let mut local = vec![usize::MAX; l.n()];
            for (i, &v) in sub.labels.iter().enumerate() {
                local[v] = i;
            }
            check_certificate(&sub.graph, &cert.relabel(&local))
        };
        let mut st = self.stats.borrow_mut();
        if !ok {
            st.safety_rejections += 1;
            return None;
        }
        self.emitted += 1;
        Some(Pmc {
            vertices: x,
            certificate: cert,
            category,
            witness: Some(self.side.c.clone()),
        })
    }
}

impl Iterator for ComponentPmcs {
    type Item = Pmc;

    fn next(&mut self) -> Option<Pmc> {
        if self.done {
            return None;
        }
        while let Some(u) = self.wheels.next() {
            let x = self.side.x_of(&[u]);
            let cert = SteeringCertificate {
                s_cycle: self.side.cycle.clone(),
                p_path: vec![u],
                wheel: true,
            };
            if let Some(p) = self.finish(x, cert, PmcCategory::Wheel) {
                return Some(p);
            }
        }
        while let Some((path, triple)) = self.paths.next() {
            let x = self.side.x_of(&path);
            let (cert, cat) = match triple {
                None => (self.side.path_certificate(&path), PmcCategory::Path),
                Some(i) => (
                    self.side.hinge_certificate(&path, self.triples[i].2),
                    PmcCategory::Hinge,
                ),
            };
            if let Some(p) = self.finish(x, cert, cat) {
                return Some(p);
            }
        }
        self.done = true;
        let ps = self.paths.stats();
        let mut st = self.stats.borrow_mut();
        st.components_processed += 1;
        st.component_suppressions += ps.suppressed.iter().sum::<u64>();
        st.component_invariant_violations += ps.invariant_violations;
        st.component_missing_successor += ps.missing_live_successor;
        if self.emitted == 0 {
            st.empty_components += 1;
        }
        None
    }
}

/// The PMCs `X` of the triconnected plane base graph of `l` such that
/// `sep.sides[side]` is a component of `G - X`.
pub fn pmcs_for_component(l: &Rc<LatchingGraph>, sep: &MinSep, side: usize) -> ComponentPmcs {
    assert!(sep.len() >= 4, "per-component generation needs |S| >= 4");
    ComponentPmcs::new(
        Rc::clone(l),
        sep,
        side,
        WorkMeter::new(),
        Rc::new(RefCell::new(PmcStats::default())),
    )
}

type TopGen = Box<dyn Iterator<Item = Pmc>>;
type TopMember = Box<dyn FnMut(&Pmc, usize) -> bool>;

/// Stream of all PMCs; see [`pmcs`].
pub struct Pmcs {
    l: Option<Rc<LatchingGraph>>,
    trivial: Option<Pmc>,
    k4: std::vec::IntoIter<Pmc>,
    rest: Option<UnionGenerator<Pmc, TopGen, TopMember>>,
    meter: WorkMeter,
    last_work: u64,
    stats: Shared,
}

impl Pmcs {
    fn from_latching(l: LatchingGraph, track_invariant: bool) -> Pmcs {
        let l = Rc::new(l);
        let meter = WorkMeter::new();
        let stats: Shared = Rc::default();
        let k4 = k4_pmcs(&l, &meter).into_iter();
        let n = l.n();
        let gens: Vec<TopGen> = (0..n)
            .map(|v| {
                let l = Rc::clone(&l);
                let meter = meter.clone();
                let stats = Rc::clone(&stats);
                let it = Lazy::new(move || per_vertex(l, v, meter, stats));
                Box::new(it) as TopGen
            })
            .collect();
        let base = l.base().graph().clone();
        let m2 = meter.clone();
        let member: TopMember = Box::new(move |x: &Pmc, v: usize| {
            m2.tick(base.n() as u64);
            if x.vertices.contains(v) {
                return false;
            }
            let outside = x.vertices.complement();
            let comp = base.reach(v, &outside);
            base.neighborhood(&comp).len() >= 4
        });
        let mut rest = UnionGenerator::new(gens, member);
        if track_invariant {
            rest = rest.track_invariant();
        }
        Pmcs {
            l: Some(l),
            trivial: None,
            k4,
            rest: Some(rest),
            meter,
            last_work: 0,
            stats,
        }
    }

    /// Shared work counter of the enumeration.
    pub fn meter(&self) -> &WorkMeter {
        &self.meter
    }

    pub fn latching(&self) -> Option<&Rc<LatchingGraph>> {
        self.l.as_ref()
    }

    /// Snapshot of the counters so far.
    pub fn stats(&self) -> PmcStats {
        let mut st = self.stats.borrow().clone();
        if let Some(r) = &self.rest {
            st.top = r.stats().clone();
        }
        st
    }

    /// Enables the per-generator `epsilon <= sigma` checks of the top-level
    /// scheduler.
    pub fn track_invariant(mut self) -> Self {
        self.rest = self.rest.take().map(|r| r.track_invariant());
        self
    }

    fn record(&mut self, p: &Pmc) {
        let now = self.meter.get();
        let mut st = self.stats.borrow_mut();
        st.work_gaps.push(now - self.last_work);
        self.last_work = now;
        st.emitted += 1;
        st.by_category[p.category as usize] += 1;
    }
}

impl Iterator for Pmcs {
    type Item = Pmc;

    fn next(&mut self) -> Option<Pmc> {
        let out = if let Some(p) = self.trivial.take() {
            Some(p)
        } else if let Some(p) = self.k4.next() {
            Some(p)
        } else {
            self.rest.as_mut().and_then(|r| r.next())
        };
        if let Some(p) = &out {
            self.record(p);
        }
        out
    }
}

fn per_vertex(l: Rc<LatchingGraph>, v: usize, meter: WorkMeter, stats: Shared) -> impl Iterator<Item = Pmc> {
    let mut allowed = l.base().graph().vertex_set();
    allowed.remove(v);
    let seps = MinimalSeparators::within(&l, allowed, meter.clone());
    let st2 = Rc::clone(&stats);
    SepStream { seps, stats: st2 }.flat_map(move |sep| {
        let side = sep.side_of(v);
        side.map(|side| ComponentPmcs::new(Rc::clone(&l), &sep, side, meter.clone(), Rc::clone(&stats)))
            .into_iter()
            .flatten()
    })
}

/// Separators of size four or more, reporting filter rejections.
struct SepStream {
    seps: MinimalSeparators,
    stats: Shared,
}

impl Iterator for SepStream {
    type Item = MinSep;

    fn next(&mut self) -> Option<MinSep> {
        let before = self.seps.rejected_large();
        let out = self.seps.by_ref().find(|s| s.len() >= 4);
        let after = self.seps.rejected_large();
        self.stats.borrow_mut().rejected_large_separators += after - before;
        out
    }
}

/// The 4-sets of latching vertices inducing a plane `K4`.
fn k4_pmcs(l: &LatchingGraph, meter: &WorkMeter) -> Vec<Pmc> {
    let lg = l.graph();
    let n = l.n();
    let mut out = Vec::new();
    for a in 0..n {
        for &b in lg.neighbors(a).iter().filter(|&&b| b > a) {
            let ab = lg.neighbor_set(a).intersection(lg.neighbor_set(b));
            for c in ab.iter().filter(|&c| c > b) {
                for d in ab.intersection(lg.neighbor_set(c)).iter().filter(|&d| d > c) {
                    meter.tick(1);
                    let x = VertexSet::from_vertices(n, [a, b, c, d]);
                    if l.is_plane_induced(&x) {
                        out.push(Pmc {
                            vertices: x,
                            certificate: SteeringCertificate {
                                s_cycle: vec![b, c, d],
                                p_path: vec![a],
                                wheel: true,
                            },
                            category: PmcCategory::K4,
                            witness: None,
                        });
                    }
                }
            }
        }
    }
    out
}

/// All PMCs of a triconnected planar graph, each exactly once.
pub fn pmcs(g: &Graph) -> Result<Pmcs> {
    if g.n() <= 3 {
        if !g.is_clique(&g.vertex_set()) {
            return Err(Error::NotTriconnected);
        }
        return Ok(trivial(g));
    }
    let pg = embed(g)?;
    pmcs_plane(&pg)
}

/// As [`pmcs`], for a given embedding.
pub fn pmcs_plane(pg: &PlaneGraph) -> Result<Pmcs> {
    let g = pg.graph();
    if g.n() <= 3 {
        return pmcs(g);
    }
    if !is_triconnected(g) {
        return Err(Error::NotTriconnected);
    }
    Ok(Pmcs::from_latching(build_latching(pg)?, false))
}

fn trivial(g: &Graph) -> Pmcs {
    let n = g.n();
    let p = (n > 0).then(|| Pmc {
        vertices: g.vertex_set(),
        certificate: SteeringCertificate {
            s_cycle: (0..n).collect(),
            p_path: Vec::new(),
            wheel: false,
        },
        category: PmcCategory::K4,
        witness: None,
    });
    Pmcs {
        l: None,
        trivial: p,
        k4: Vec::new().into_iter(),
        rest: None,
        meter: WorkMeter::new(),
        last_work: 0,
        stats: Rc::default(),
    }
}

/// Recomputes a certificate for `x` from scratch, in original ids.
pub fn recertify(l: &LatchingGraph, x: &VertexSet) -> Option<SteeringCertificate> {
    if !l.is_plane_induced(x) {
        return None;
    }
    let sub = l.induced(x);
    find_certificate(&sub.graph).map(|c| c.relabel(&sub.labels))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::tests::{cube, octahedron};
    use crate::minsep::minimal_separators;

    fn brute(g: &Graph) -> Vec<VertexSet> {
        let n = g.n();
        let mut out: Vec<VertexSet> = (1u32..1 << n)
            .map(|mask| g.set((0..n).filter(|i| mask >> i & 1 == 1)))
            .filter(|x| g.is_pmc(x))
            .collect();
        out.sort();
        out
    }

    fn collect(g: &Graph) -> (Vec<VertexSet>, PmcStats) {
        let mut it = pmcs(g).unwrap().track_invariant();
        let raw: Vec<Pmc> = it.by_ref().collect();
        let stats = it.stats();
        let mut got: Vec<VertexSet> = raw.iter().map(|p| p.vertices.clone()).collect();
        got.sort();
        let n = got.len();
        got.dedup();
        assert_eq!(n, got.len(), "duplicate PMC");
        (got, stats)
    }

    fn latching(g: &Graph) -> Rc<LatchingGraph> {
        Rc::new(build_latching(&embed(g).unwrap()).unwrap())
    }

    #[test]
    fn k4_has_one_pmc() {
        let (got, _) = collect(&Graph::complete(4));
        assert_eq!(got, vec![Graph::complete(4).vertex_set()]);
    }

    #[test]
    fn small_complete_graphs() {
        for n in 1..=3 {
            let (got, _) = collect(&Graph::complete(n));
            assert_eq!(got, vec![Graph::complete(n).vertex_set()]);
        }
        assert_eq!(pmcs(&Graph::path(3)).err(), Some(Error::NotTriconnected));
        assert_eq!(pmcs(&Graph::cycle(5)).err(), Some(Error::NotTriconnected));
    }

    #[test]
    fn octahedron_and_cube_match_brute_force() {
        for g in [octahedron(), cube()] {
            let (got, stats) = collect(&g);
            assert_eq!(got, brute(&g));
            assert_eq!(stats.safety_rejections, 0);
            assert_eq!(stats.empty_components, 0);
            assert_eq!(stats.top.invariant_violations, 0);
            assert_eq!(stats.top.missing_live_successor, 0);
            assert_eq!(stats.rejected_large_separators, 0);
        }
    }

    #[test]
    fn per_component_streams_match_brute_force() {
        for g in [octahedron(), cube()] {
            let l = latching(&g);
            let all = brute(&g);
            for sep in minimal_separators(&l).filter(|s| s.len() >= 4) {
                for side in 0..2 {
                    let c = &sep.sides[side];
                    let mut got: Vec<VertexSet> =
                        pmcs_for_component(&l, &sep, side).map(|p| p.vertices).collect();
                    got.sort();
                    let want: Vec<VertexSet> = all
                        .iter()
                        .filter(|x| g.components(x).iter().any(|k| k.vertices == c.vertices))
                        .cloned()
                        .collect();
                    assert!(!got.is_empty());
                    assert_eq!(got, want);
                }
            }
        }
    }

    #[test]
    fn certificates_replay() {
        let g = cube();
        let l = latching(&g);
        for p in pmcs(&g).unwrap() {
            let sub = l.induced(&p.vertices);
            let mut local = vec![usize::MAX; g.n()];
            for (i, &v) in sub.labels.iter().enumerate() {
                local[v] = i;
            }
            assert!(check_certificate(&sub.graph, &p.certificate.relabel(&local)));
            assert!(recertify(&l, &p.vertices).is_some());
        }
    }

    #[test]
    fn ports_and_pairs_follow_the_definition() {
        let g = cube();
        let l = latching(&g);
        for sep in minimal_separators(&l).filter(|s| s.len() >= 4) {
            for side in 0..2 {
                let other = &sep.sides[1 - side].vertices;
                let ps = ports(&l, &sep, side);
                for u in other.iter() {
                    let slot = l.graph().neighbor_set(u).intersection(&sep.vertices);
                    let want = !slot.is_empty() && is_slot(&sep.cycle_order, &slot);
                    assert_eq!(ps.iter().any(|p| p.vertex == u), want);
                }
                for vp in valid_pairs(&l, &sep, side) {
                    let a = graph_a(&l, &sep, side, vp.u1, vp.u2);
                    assert!(a.labels.contains(&vp.u1) && a.labels.contains(&vp.u2));
                    for &s in &vp.hinges {
                        let b = graph_b(&l, &sep, side, vp.u1, vp.u2, s);
                        assert!(a.labels.iter().all(|v| b.labels.contains(v)));
                    }
                }
            }
        }
    }

    #[test]
    fn canonical_rotation() {
        assert_eq!(canonical_cycle(vec![3, 1, 4, 2]), vec![1, 3, 2, 4]);
        assert_eq!(canonical_cycle(vec![2, 0, 1]), vec![0, 1, 2]);
    }
}
