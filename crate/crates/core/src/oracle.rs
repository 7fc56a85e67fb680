//! Brute-force reference implementations.
//!
//! Everything here works from the plain [`Graph`] by exhaustive search over
//! subsets, orderings or simple paths, and is meant for cross-checking the
//! real algorithms on small inputs.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::set::VertexSet;

pub use crate::corpus::{corpus, CorpusGraph};

fn limit(g: &Graph, max: usize) -> Result<()> {
    if g.n() > max {
        return Err(Error::TooLarge { n: g.n(), max });
    }
    Ok(())
}

fn subsets(g: &Graph) -> impl Iterator<Item = VertexSet> + '_ {
    let n = g.n();
    (1u64..1 << n).map(move |mask| g.set((0..n).filter(|i| mask >> i & 1 == 1)))
}

/// Every PMC, by testing all vertex subsets. Sorted.
pub fn pmcs_bruteforce(g: &Graph) -> Result<Vec<VertexSet>> {
    limit(g, 16)?;
    let mut out: Vec<_> = subsets(g).filter(|x| g.is_pmc(x)).collect();
    out.sort();
    Ok(out)
}

/// Every minimal separator, by testing all vertex subsets. Sorted.
pub fn minseps_bruteforce(g: &Graph) -> Result<Vec<VertexSet>> {
    limit(g, 16)?;
    let mut out: Vec<_> = subsets(g).filter(|s| g.is_minimal_separator(s)).collect();
    out.sort();
    Ok(out)
}

fn masks(g: &Graph) -> Vec<u32> {
    (0..g.n())
        .map(|v| g.neighbors(v).iter().fold(0u32, |m, &w| m | 1 << w))
        .collect()
}

/// Exact treewidth by dynamic programming over elimination prefixes:
/// `TW(S) = min_{v in S} max(TW(S - v), |Q(S - v, v)|)`, where `Q(S, v)` is
/// the set of vertices outside `S + v` reachable from `v` through `S`.
pub fn treewidth_bruteforce(g: &Graph) -> Result<usize> {
    limit(g, 20)?;
    let n = g.n();
    if n <= 1 {
        return Ok(0);
    }
    let adj = masks(g);
    let q = |s: u32, v: usize| -> u32 {
        // component of v in G[s + v], then its outside neighborhood
        let mut comp = 1u32 << v;
        let mut frontier = comp;
        while frontier != 0 {
            let mut nb = 0u32;
            let mut f = frontier;
            while f != 0 {
                let x = f.trailing_zeros() as usize;
                f &= f - 1;
                nb |= adj[x];
            }
            frontier = nb & s & !comp;
            comp |= frontier;
        }
        let mut nb = 0u32;
        let mut c = comp;
        while c != 0 {
            let x = c.trailing_zeros() as usize;
            c &= c - 1;
            nb |= adj[x];
        }
        (nb & !comp & !s).count_ones()
    };
    let full = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
    let mut tw = vec![0u8; 1usize << n];
    for s in 1..=full {
        let mut best = u8::MAX;
        let mut bits = s;
        while bits != 0 {
            let v = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            let rest = s & !(1 << v);
            let val = tw[rest as usize].max(q(rest, v) as u8);
            best = best.min(val);
        }
        tw[s as usize] = best;
    }
    Ok(tw[full as usize] as usize)
}

fn canonical_cycle(mut c: Vec<usize>) -> Vec<usize> {
    let i = (0..c.len()).min_by_key(|&i| c[i]).unwrap();
    c.rotate_left(i);
    if c[c.len() - 1] < c[1] {
        c[1..].reverse();
    }
    c
}

fn chordless(g: &Graph, seq: &[usize], closed: bool) -> bool {
    let k = seq.len();
    (0..k).all(|i| {
        (i + 1..k).all(|j| {
            let consecutive = j == i + 1 || (closed && i == 0 && j == k - 1);
            g.has_edge(seq[i], seq[j]) == consecutive
        })
    })
}

/// All chordless cycles, by listing every simple cycle. Each cycle starts at
/// its minimum vertex followed by the smaller of its two neighbors.
pub fn chordless_cycles_bruteforce(g: &Graph) -> Result<BTreeSet<Vec<usize>>> {
    limit(g, 14)?;
    let mut out = BTreeSet::new();
    for s in 0..g.n() {
        let mut path = vec![s];
        let mut on = vec![false; g.n()];
        on[s] = true;
        cycles_from(g, s, &mut path, &mut on, &mut out);
    }
    Ok(out)
}

fn cycles_from(g: &Graph, s: usize, path: &mut Vec<usize>, on: &mut [bool], out: &mut BTreeSet<Vec<usize>>) {
    let v = *path.last().unwrap();
    for &w in g.neighbors(v) {
        if w == s && path.len() >= 3 {
            if chordless(g, path, true) {
                out.insert(canonical_cycle(path.clone()));
            }
        } else if w > s && !on[w] {
            on[w] = true;
            path.push(w);
            cycles_from(g, s, path, on, out);
            path.pop();
            on[w] = false;
        }
    }
}

/// All chordless `s`-`t` paths, by listing every simple path.
pub fn chordless_paths_bruteforce(g: &Graph, s: usize, t: usize) -> Result<BTreeSet<Vec<usize>>> {
    limit(g, 14)?;
    let mut out = BTreeSet::new();
    let mut on = vec![false; g.n()];
    on[s] = true;
    paths_from(g, t, &mut vec![s], &mut on, &mut out);
    Ok(out)
}

fn paths_from(g: &Graph, t: usize, path: &mut Vec<usize>, on: &mut [bool], out: &mut BTreeSet<Vec<usize>>) {
    let v = *path.last().unwrap();
    if v == t {
        if chordless(g, path, false) {
            out.insert(path.clone());
        }
        return;
    }
    for &w in g.neighbors(v) {
        if !on[w] {
            on[w] = true;
            path.push(w);
            paths_from(g, t, path, on, out);
            path.pop();
            on[w] = false;
        }
    }
}

/// Edge set of a graph on at most 8 vertices as a bitmask over pairs.
type EdgeMask = u64;

fn pair_bit(u: usize, v: usize) -> EdgeMask {
    let (a, b) = (u.min(v), u.max(v));
    1 << (a * 8 + b)
}

fn has(e: EdgeMask, u: usize, v: usize) -> bool {
    e & pair_bit(u, v) != 0
}

/// Chordality by maximum cardinality search and a perfect-elimination check.
fn is_chordal(n: usize, e: EdgeMask) -> bool {
    let mut order = Vec::with_capacity(n);
    let mut weight = vec![0usize; n];
    let mut done = vec![false; n];
    for _ in 0..n {
        let v = (0..n).filter(|&v| !done[v]).max_by_key(|&v| (weight[v], std::cmp::Reverse(v))).unwrap();
        done[v] = true;
        order.push(v);
        for w in 0..n {
            if !done[w] && has(e, v, w) {
                weight[w] += 1;
            }
        }
    }
    // reverse MCS order is a perfect elimination order iff chordal
    let pos: Vec<usize> = {
        let mut p = vec![0; n];
        for (i, &v) in order.iter().enumerate() {
            p[v] = i;
        }
        p
    };
    for &v in &order {
        let earlier: Vec<usize> = (0..n).filter(|&w| has(e, v, w) && pos[w] < pos[v]).collect();
        if let Some(&parent) = earlier.iter().max_by_key(|&&w| pos[w]) {
            if earlier.iter().any(|&w| w != parent && !has(e, w, parent)) {
                return false;
            }
        }
    }
    true
}

fn maximal_cliques(n: usize, e: EdgeMask) -> Vec<u32> {
    // every maximal clique of a small graph by subset scan
    let is_clique = |m: u32| {
        (0..n).all(|u| m >> u & 1 == 0 || (u + 1..n).all(|v| m >> v & 1 == 0 || has(e, u, v)))
    };
    let cliques: Vec<u32> = (1u32..1 << n).filter(|&m| is_clique(m)).collect();
    cliques
        .iter()
        .copied()
        .filter(|&m| (0..n).all(|v| m >> v & 1 == 1 || !is_clique(m | 1 << v)))
        .collect()
}

/// PMCs from their definition: maximal cliques of minimal triangulations.
/// Triangulations are produced by eliminating vertices in every order and
/// kept when no single fill edge can be dropped without losing chordality.
pub fn pmcs_by_triangulations(g: &Graph) -> Result<Vec<VertexSet>> {
    limit(g, 8)?;
    let n = g.n();
    let base: EdgeMask = g.edges().fold(0, |m, (u, v)| m | pair_bit(u, v));
    let mut tris: BTreeSet<EdgeMask> = BTreeSet::new();
    let mut order: Vec<usize> = (0..n).collect();
    loop {
        let mut e = base;
        let mut gone = 0u32;
        for &v in &order {
            let nb: Vec<usize> = (0..n).filter(|&w| gone >> w & 1 == 0 && w != v && has(e, v, w)).collect();
            for (i, &a) in nb.iter().enumerate() {
                for &b in &nb[i + 1..] {
                    e |= pair_bit(a, b);
                }
            }
            gone |= 1 << v;
        }
        tris.insert(e);
        if !next_permutation(&mut order) {
            break;
        }
    }
    let mut out: BTreeSet<Vec<usize>> = BTreeSet::new();
    for &t in &tris {
        let fill = t & !base;
        let minimal = (0..64).filter(|b| fill >> b & 1 == 1).all(|b| !is_chordal(n, t & !(1 << b)));
        if minimal {
            for c in maximal_cliques(n, t) {
                out.insert((0..n).filter(|v| c >> v & 1 == 1).collect());
            }
        }
    }
    Ok(out.into_iter().map(|c| g.set(c)).collect::<BTreeSet<_>>().into_iter().collect())
}

fn next_permutation(p: &mut [usize]) -> bool {
    if p.len() < 2 {
        return false;
    }
    let mut i = p.len() - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = p.len() - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::{cube, octahedron};

    #[test]
    fn treewidth_spot_values() {
        assert_eq!(treewidth_bruteforce(&Graph::complete(4)).unwrap(), 3);
        assert_eq!(treewidth_bruteforce(&Graph::path(6)).unwrap(), 1);
        assert_eq!(treewidth_bruteforce(&Graph::grid(3, 3)).unwrap(), 3);
        assert_eq!(treewidth_bruteforce(&Graph::cycle(5)).unwrap(), 2);
        assert_eq!(treewidth_bruteforce(&Graph::empty(3)).unwrap(), 0);
        assert_eq!(treewidth_bruteforce(&cube()).unwrap(), 3);
        assert_eq!(treewidth_bruteforce(&octahedron()).unwrap(), 4);
        assert!(matches!(
            treewidth_bruteforce(&Graph::empty(21)),
            Err(Error::TooLarge { n: 21, max: 20 })
        ));
    }

    #[test]
    fn separators_of_small_graphs() {
        // every non-adjacent pair of a cycle splits it into two full arcs
        let c6 = Graph::cycle(6);
        let got = minseps_bruteforce(&c6).unwrap();
        let mut want: Vec<VertexSet> = (0..6)
            .flat_map(|i| (i + 2..6).map(move |j| (i, j)))
            .filter(|&(i, j)| !(i == 0 && j == 5))
            .map(|(i, j)| c6.set([i, j]))
            .collect();
        want.sort();
        assert_eq!(got, want);
        assert_eq!(got.len(), 9);
        assert!(minseps_bruteforce(&Graph::complete(4)).unwrap().is_empty());
    }

    #[test]
    fn pmcs_of_small_graphs() {
        assert_eq!(pmcs_bruteforce(&Graph::complete(4)).unwrap(), vec![Graph::complete(4).vertex_set()]);
        // every vertex triple of a pentagon is a triangle of some triangulation
        let c5 = Graph::cycle(5);
        let got = pmcs_bruteforce(&c5).unwrap();
        assert_eq!(got, pmcs_by_triangulations(&c5).unwrap());
        assert_eq!(got.len(), 10);
    }

    #[test]
    fn definitional_oracle_agrees_with_pmc_predicate() {
        for g in [octahedron(), cube(), Graph::grid(2, 3), Graph::cycle(6), Graph::path(4)] {
            assert_eq!(pmcs_by_triangulations(&g).unwrap(), pmcs_bruteforce(&g).unwrap());
        }
    }

    #[test]
    fn chordless_brute_force() {
        let k4 = chordless_cycles_bruteforce(&Graph::complete(4)).unwrap();
        assert_eq!(k4.len(), 4);
        let c6 = chordless_paths_bruteforce(&Graph::cycle(6), 0, 3).unwrap();
        assert_eq!(c6.len(), 2);
        let cube_cycles = chordless_cycles_bruteforce(&cube()).unwrap();
        assert!(cube_cycles.iter().all(|c| c.len() >= 4));
    }
}
