//! Exactly-once union of several polynomial-delay generators.
//!
//! Given generators `Gen_0 .. Gen_{N-1}` for sets `S_0 .. S_{N-1}` and a
//! membership test `s ∈ S_i`, [`UnionGenerator`] emits every element of the
//! union once. An element is owned by the largest index whose set contains
//! it; outputs from any other generator are suppressed. Control moves up to
//! the next live generator on every suppression and back down to the smallest
//! live generator after every emission or termination, so between two
//! emissions at most `N` events happen per termination in between.
//!
//! With [`UnionGenerator::track_invariant`] the scheduler also counts, for
//! every generator, the non-owned elements it has seen emitted (`epsilon`)
//! and the ones it has had suppressed (`sigma`), and checks
//! `epsilon_i <= sigma_i` each time it is about to resume a generator. This
//! costs `N` membership tests per emission.

/// Counters maintained by the scheduler.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SchedulerStats {
    pub emitted: u64,
    /// Sub-generator events: outputs plus terminations.
    pub events: u64,
    pub terminations: u64,
    /// Per generator: outputs that were suppressed.
    pub suppressed: Vec<u64>,
    /// Per generator: emitted elements it contains but does not own. Only
    /// maintained when invariant tracking is on.
    pub emitted_non_owned: Vec<u64>,
    /// Largest number of events between consecutive emissions (start and
    /// end of the stream count as emissions).
    pub max_events_between_emissions: u64,
    /// Loop-head checks that found some `epsilon_i > sigma_i`.
    pub invariant_violations: u64,
    /// Loop-head checks performed.
    pub invariant_checks: u64,
    /// Suppressions with no live generator above the current one.
    pub missing_live_successor: u64,
    /// Gaps exceeding `(terminations in the gap + 1) * N` events.
    pub delay_bound_violations: u64,
}

/// Runs `F` to build the wrapped iterator on the first call to `next`.
pub struct Lazy<I, F> {
    init: Option<F>,
    inner: Option<I>,
}

impl<I, F> Lazy<I, F>
where
    I: Iterator,
    F: FnOnce() -> I,
{
    pub fn new(init: F) -> Self {
        Lazy {
            init: Some(init),
            inner: None,
        }
    }
}

impl<I, F> Iterator for Lazy<I, F>
where
    I: Iterator,
    F: FnOnce() -> I,
{
    type Item = I::Item;

    fn next(&mut self) -> Option<I::Item> {
        if let Some(f) = self.init.take() {
            self.inner = Some(f());
        }
        self.inner.as_mut()?.next()
    }
}

pub struct UnionGenerator<T, G, M> {
    gens: Vec<Option<G>>,
    live: usize,
    member: M,
    current: usize,
    track: bool,
    stats: SchedulerStats,
    gap_events: u64,
    gap_terminations: u64,
    finished: bool,
    _marker: std::marker::PhantomData<T>,
}

impl<T, G, M> UnionGenerator<T, G, M>
where
    G: Iterator<Item = T>,
    M: FnMut(&T, usize) -> bool,
{
    /// `member(s, i)` must decide `s ∈ S_i` for every `i`.
    pub fn new(gens: Vec<G>, member: M) -> Self {
        let n = gens.len();
        UnionGenerator {
            live: n,
            gens: gens.into_iter().map(Some).collect(),
            member,
            current: 0,
            track: false,
            stats: SchedulerStats {
                suppressed: vec![0; n],
                emitted_non_owned: vec![0; n],
                ..SchedulerStats::default()
            },
            gap_events: 0,
            gap_terminations: 0,
            finished: false,
            _marker: std::marker::PhantomData,
        }
    }

    /// Enables the `epsilon_i <= sigma_i` bookkeeping.
    pub fn track_invariant(mut self) -> Self {
        self.track = true;
        self
    }

    pub fn stats(&self) -> &SchedulerStats {
        &self.stats
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    fn smallest_live_from(&self, from: usize) -> Option<usize> {
        (from..self.gens.len()).find(|&j| self.gens[j].is_some())
    }

    fn check_invariant(&mut self) {
        self.stats.invariant_checks += 1;
        let bad = self
            .stats
            .emitted_non_owned
            .iter()
            .zip(&self.stats.suppressed)
            .any(|(e, s)| e > s);
        if bad {
            self.stats.invariant_violations += 1;
        }
    }

    fn close_gap(&mut self) {
        let n = self.gens.len() as u64;
        let g = self.gap_events;
        self.stats.max_events_between_emissions = self.stats.max_events_between_emissions.max(g);
        if g > (self.gap_terminations + 1) * n.max(1) {
            self.stats.delay_bound_violations += 1;
        }
        self.gap_events = 0;
        self.gap_terminations = 0;
    }
}

impl<T, G, M> Iterator for UnionGenerator<T, G, M>
where
    G: Iterator<Item = T>,
    M: FnMut(&T, usize) -> bool,
{
    type Item = T;

    fn next(&mut self) -> Option<T> {
        let n = self.gens.len();
        while self.live > 0 {
            // ascending phase: run until an emission or a termination
            loop {
                if self.track {
                    self.check_invariant();
                }
                let i = self.current;
                let event = self.gens[i].as_mut().expect("current generator is live").next();
                self.stats.events += 1;
                self.gap_events += 1;
                let Some(s) = event else {
                    self.gens[i] = None;
                    self.live -= 1;
                    self.stats.terminations += 1;
                    self.gap_terminations += 1;
                    break;
                };
                let owned_above = (i + 1..n).any(|j| (self.member)(&s, j));
                if owned_above {
                    self.stats.suppressed[i] += 1;
                    match self.smallest_live_from(i + 1) {
                        Some(j) => self.current = j,
                        None => {
                            // membership test contradicts the generators;
                            // the element is dropped
                            self.stats.missing_live_successor += 1;
                            break;
                        }
                    }
                } else {
                    if self.track {
                        for j in 0..i {
                            if (self.member)(&s, j) {
                                self.stats.emitted_non_owned[j] += 1;
                            }
                        }
                    }
                    self.stats.emitted += 1;
                    self.close_gap();
                    if let Some(j) = self.smallest_live_from(0) {
                        self.current = j;
                    }
                    return Some(s);
                }
            }
            // descent to the smallest live generator
            if let Some(j) = self.smallest_live_from(0) {
                self.current = j;
            }
        }
        if !self.finished {
            self.finished = true;
            self.close_gap();
        }
        None
    }
}

/// Convenience constructor.
pub fn union_generate<T, G, M>(gens: Vec<G>, member: M) -> UnionGenerator<T, G, M>
where
    G: Iterator<Item = T>,
    M: FnMut(&T, usize) -> bool,
{
    UnionGenerator::new(gens, member)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    fn run(families: &[Vec<u32>]) -> (Vec<u32>, SchedulerStats) {
        let sets: Vec<BTreeSet<u32>> = families.iter().map(|f| f.iter().copied().collect()).collect();
        let gens: Vec<_> = families.iter().map(|f| f.clone().into_iter()).collect();
        let mut u = union_generate(gens, |s: &u32, i| sets[i].contains(s)).track_invariant();
        let out: Vec<u32> = u.by_ref().collect();
        (out, u.stats().clone())
    }

    #[test]
    fn overlap_is_emitted_by_the_larger_index() {
        // S_0 = {a, b}, S_1 = {b, c}
        let (out, stats) = run(&[vec![1, 2], vec![2, 3]]);
        let mut sorted = out.clone();
        sorted.sort();
        assert_eq!(sorted, vec![1, 2, 3]);
        // b from generator 0 was suppressed
        assert_eq!(stats.suppressed, vec![1, 0]);
        assert_eq!(stats.invariant_violations, 0);
        assert_eq!(stats.missing_live_successor, 0);
    }

    #[test]
    fn single_generator_passes_through() {
        let (out, stats) = run(&[vec![5, 1, 4]]);
        assert_eq!(out, vec![5, 1, 4]);
        assert_eq!(stats.events, 4);
        assert_eq!(stats.suppressed, vec![0]);
    }

    #[test]
    fn empty_union() {
        let (out, stats) = run(&[vec![], vec![]]);
        assert!(out.is_empty());
        assert_eq!(stats.terminations, 2);
        let (out, _) = run(&[]);
        assert!(out.is_empty());
    }

    #[test]
    fn gap_can_exceed_n_plus_terminations() {
        // generators 0 and 1 keep suppressing while 2 and 3 terminate empty;
        // 9 events pass before the first emission, against N + T = 7
        let (out, stats) = run(&[
            vec![10, 11, 12],
            vec![20, 21, 22, 10, 11, 12],
            vec![],
            vec![],
            vec![20, 21, 22],
        ]);
        assert_eq!(stats.max_events_between_emissions, 9);
        assert_eq!(stats.delay_bound_violations, 0);
        let mut sorted = out;
        sorted.sort();
        assert_eq!(sorted, vec![10, 11, 12, 20, 21, 22]);
    }

    #[test]
    fn lazy_defers_construction() {
        use std::cell::Cell;
        let built = Cell::new(false);
        let mut it = Lazy::new(|| {
            built.set(true);
            0..3
        });
        assert!(!built.get());
        assert_eq!(it.next(), Some(0));
        assert!(built.get());
        assert_eq!(it.count(), 2);
    }

    use proptest::prelude::*;

    proptest! {
        #[test]
        fn random_families_are_emitted_exactly_once(
            families in proptest::collection::vec(
                proptest::sample::subsequence((0u32..14).collect::<Vec<_>>(), 0..14)
                    .prop_shuffle(),
                0..7,
            )
        ) {
            let (out, stats) = run(&families);
            let union: BTreeSet<u32> = families.iter().flatten().copied().collect();
            let mut sorted = out.clone();
            sorted.sort();
            prop_assert_eq!(sorted, union.into_iter().collect::<Vec<_>>());
            prop_assert_eq!(stats.invariant_violations, 0);
            prop_assert_eq!(stats.missing_live_successor, 0);
            prop_assert_eq!(stats.delay_bound_violations, 0);
            prop_assert_eq!(stats.emitted, out.len() as u64);
        }
    }
}
