//! Exact treewidth of planar graphs.
//!
//! A graph is cut into connected components, then into biconnected blocks,
//! then along 2-separators `{a, b}` into pieces `G[C ∪ {a, b}] + ab`, each a
//! minor of its parent, until the pieces are cliques, 4-vertex graphs or
//! triconnected. Triconnected pieces are solved by the Bouchitté–Todinca
//! dynamic program over their potential maximal cliques.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::pmc::pmcs;
use crate::planar::{is_planar, is_triconnected};
use crate::set::VertexSet;
use crate::td::TreeDecomposition;

/// Treewidth and an optimal decomposition computed from a complete list of
/// potential maximal cliques of a connected graph.
///
/// Blocks `(S, C)` with `C` a component of `G - Ω` for some PMC `Ω` and
/// `S = N(C)` are solved in order of increasing `|C|`; a block is realized
/// by a PMC `Ω` with `S ⊊ Ω ⊆ S ∪ C`, at cost `|Ω| - 1` or the cost of a
/// block below it.
pub fn treewidth_from_pmcs(g: &Graph, pmcs: &[VertexSet]) -> Result<(usize, TreeDecomposition)> {
    let n = g.n();
    if n == 0 {
        return Err(Error::InvalidGraph("empty graph".into()));
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    // blocks keyed by component
    let mut index: HashMap<VertexSet, usize> = HashMap::new();
    let mut blocks: Vec<(VertexSet, VertexSet)> = Vec::new();
    let mut children: Vec<Vec<usize>> = Vec::with_capacity(pmcs.len());
    for omega in pmcs {
        let mut kids = Vec::new();
        for c in g.components(omega) {
            let id = *index.entry(c.vertices.clone()).or_insert_with(|| {
                blocks.push((c.neighborhood.clone(), c.vertices.clone()));
                blocks.len() - 1
            });
            kids.push(id);
        }
        children.push(kids);
    }
    let mut order: Vec<usize> = (0..blocks.len()).collect();
    order.sort_by_key(|&b| blocks[b].1.len());
    let mut cost = vec![usize::MAX; blocks.len()];
    let mut choice = vec![usize::MAX; blocks.len()];
    for &b in &order {
        let (s, c) = &blocks[b];
        let sc = s.union(c);
        for (w, omega) in pmcs.iter().enumerate() {
            if omega.len() <= s.len() || !s.is_subset(omega) || !omega.is_subset(&sc) {
                continue;
            }
            // sub-blocks of Ω inside C
            let mut val = omega.len() - 1;
            for &k in &children[w] {
                if blocks[k].1.is_subset(c) {
                    val = val.max(cost[k]);
                }
            }
            if val < cost[b] {
                cost[b] = val;
                choice[b] = w;
            }
        }
        if cost[b] == usize::MAX {
            return Err(Error::IncompletePmcSet { separator: s.to_vec() });
        }
    }
    let mut best = (usize::MAX, usize::MAX);
    for (w, omega) in pmcs.iter().enumerate() {
        let val = children[w].iter().map(|&k| cost[k]).fold(omega.len() - 1, usize::max);
        if val < best.0 {
            best = (val, w);
        }
    }
    if best.1 == usize::MAX {
        return Err(Error::IncompletePmcSet { separator: Vec::new() });
    }
    // rebuild: each chosen Ω becomes a bag, linked to the bag it hangs from
    let mut td = TreeDecomposition::default();
    let mut stack: Vec<(usize, Option<usize>, Option<&VertexSet>)> = vec![(best.1, None, None)];
    while let Some((w, parent, within)) = stack.pop() {
        let bag = td.bags.len();
        td.bags.push(pmcs[w].clone());
        if let Some(p) = parent {
            td.edges.push((p, bag));
        }
        for &k in &children[w] {
            let c = &blocks[k].1;
            if within.is_none_or(|outer| c.is_subset(outer)) {
                stack.push((choice[k], Some(bag), Some(c)));
            }
        }
    }
    Ok((best.0, td))
}

/// One 2-separator split.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplitRecord {
    /// Pieces' sizes.
    pub piece_sizes: Vec<usize>,
    pub piece_widths: Vec<usize>,
    /// Width of the glued decomposition.
    pub width: usize,
}

/// One triconnected piece solved by the dynamic program.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PieceRecord {
    pub n: usize,
    pub pmcs: usize,
    pub width: usize,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TwStats {
    pub splits: Vec<SplitRecord>,
    pub pieces: Vec<PieceRecord>,
    /// Splits where the glued width was not `max(2, piece widths)`.
    pub split_mismatches: usize,
}

#[derive(Clone, Debug)]
pub struct TwResult {
    pub width: usize,
    pub td: TreeDecomposition,
    pub stats: TwStats,
}

/// Exact treewidth of a planar graph with an optimal tree decomposition.
pub fn treewidth_planar(g: &Graph) -> Result<TwResult> {
    if g.n() == 0 {
        return Err(Error::InvalidGraph("empty graph".into()));
    }
    if !is_planar(g) {
        return Err(Error::NotPlanar);
    }
    let mut stats = TwStats::default();
    let td = solve(g, &mut stats)?;
    Ok(TwResult {
        width: td.width(),
        td,
        stats,
    })
}

/// Decomposes `g[u]` and lifts the result to `g`'s vertex ids.
fn solve_induced(g: &Graph, u: &VertexSet, stats: &mut TwStats) -> Result<TreeDecomposition> {
    let (h, labels) = g.induced(u);
    Ok(solve(&h, stats)?.relabel(&labels, g.n()))
}

fn solve(g: &Graph, stats: &mut TwStats) -> Result<TreeDecomposition> {
    let n = g.n();
    if n <= 2 || g.is_clique(&g.vertex_set()) {
        return Ok(TreeDecomposition::trivial(g));
    }
    let comps = g.components(&g.empty_set());
    if comps.len() > 1 {
        let mut td = TreeDecomposition::default();
        for c in comps {
            let part = solve_induced(g, &c.vertices, stats)?;
            let off = td.append(part);
            if off > 0 {
                td.edges.push((0, off));
            }
        }
        return Ok(td);
    }
    let blocks = g.biconnected_components();
    if blocks.len() > 1 {
        return glue_blocks(g, blocks, stats);
    }
    if n == 4 {
        // biconnected, not a clique: a 4-cycle with at most one chord
        let (x, y) = (0..4)
            .flat_map(|a| (a + 1..4).map(move |b| (a, b)))
            .find(|&(a, b)| !g.has_edge(a, b))
            .expect("non-clique has a non-edge");
        let rest: Vec<usize> = (0..4).filter(|&v| v != x && v != y).collect();
        return Ok(TreeDecomposition {
            bags: vec![g.set([x, rest[0], rest[1]]), g.set([y, rest[0], rest[1]])],
            edges: vec![(0, 1)],
        });
    }
    if let Some((a, b)) = two_separator(g) {
        return split(g, a, b, stats);
    }
    debug_assert!(is_triconnected(g));
    let all: Vec<VertexSet> = pmcs(g)?.map(|p| p.vertices).collect();
    let (width, td) = treewidth_from_pmcs(g, &all)?;
    stats.pieces.push(PieceRecord {
        n,
        pmcs: all.len(),
        width,
    });
    Ok(td)
}

fn glue_blocks(g: &Graph, blocks: Vec<VertexSet>, stats: &mut TwStats) -> Result<TreeDecomposition> {
    let mut placed = vec![false; blocks.len()];
    let mut covered = g.empty_set();
    let mut td = TreeDecomposition::default();
    for _ in 0..blocks.len() {
        // a block touching what is placed shares exactly one cut vertex
        let i = (0..blocks.len())
            .find(|&i| !placed[i] && (td.is_empty() || blocks[i].intersects(&covered)))
            .expect("blocks of a connected graph form a tree");
        placed[i] = true;
        let part = solve_induced(g, &blocks[i], stats)?;
        if td.is_empty() {
            td.append(part);
        } else {
            let cut = blocks[i].intersection(&covered);
            let here = td.bag_containing(&cut).expect("cut vertex is placed");
            let there = part.bag_containing(&cut).expect("cut vertex in its block");
            let off = td.append(part);
            td.edges.push((here, off + there));
        }
        covered.union_with(&blocks[i]);
    }
    Ok(td)
}

/// Some `{a, b}` whose removal disconnects the biconnected graph `g`.
fn two_separator(g: &Graph) -> Option<(usize, usize)> {
    for x in 0..g.n() {
        let mut rest = g.vertex_set();
        rest.remove(x);
        let (h, labels) = g.induced(&rest);
        if let Some(&y) = h.articulation_points().first() {
            let y = labels[y];
            return Some((x.min(y), x.max(y)));
        }
    }
    None
}

fn split(g: &Graph, a: usize, b: usize, stats: &mut TwStats) -> Result<TreeDecomposition> {
    let s = g.set([a, b]);
    let mut td = TreeDecomposition::default();
    let mut sizes = Vec::new();
    let mut widths = Vec::new();
    let mut anchor = None;
    for c in g.components(&s) {
        let u = c.vertices.union(&s);
        let (h, labels) = g.induced(&u);
        let ia = labels.iter().position(|&v| v == a).unwrap();
        let ib = labels.iter().position(|&v| v == b).unwrap();
        let h = h.with_edges([(ia, ib)])?;
        if !is_planar(&h) {
            return Err(Error::NotPlanar);
        }
        let part = solve(&h, stats)?.relabel(&labels, g.n());
        sizes.push(h.n());
        widths.push(part.width());
        let there = part.bag_containing(&s).expect("piece has a bag holding the separator");
        let off = td.append(part);
        match anchor {
            None => anchor = Some(off + there),
            Some(root) => td.edges.push((root, off + there)),
        }
    }
    let width = td.width();
    let expect = widths.iter().copied().fold(2, usize::max);
    if width != expect {
        stats.split_mismatches += 1;
    }
    stats.splits.push(SplitRecord {
        piece_sizes: sizes,
        piece_widths: widths,
        width,
    });
    Ok(td)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::{cube, icosahedron, octahedron, theta};
    use crate::oracle::{pmcs_bruteforce, treewidth_bruteforce};
    use crate::td::validate_td;

    fn check(g: &Graph) -> usize {
        let r = treewidth_planar(g).unwrap();
        assert!(validate_td(g, &r.td), "{:?}", r.td.check(g));
        assert_eq!(r.width, treewidth_bruteforce(g).unwrap());
        assert_eq!(r.stats.split_mismatches, 0);
        r.width
    }

    #[test]
    fn from_pmcs_on_solids() {
        for (g, tw) in [(Graph::complete(4), 3), (octahedron(), 4), (cube(), 3)] {
            let pm = pmcs_bruteforce(&g).unwrap();
            let (w, td) = treewidth_from_pmcs(&g, &pm).unwrap();
            assert_eq!(w, tw);
            assert!(validate_td(&g, &td));
            assert_eq!(td.width(), w);
            assert!(td.bags.iter().all(|b| pm.contains(b)));
        }
    }

    #[test]
    fn missing_pmcs_are_reported() {
        let g = octahedron();
        let mut pm = pmcs_bruteforce(&g).unwrap();
        pm.truncate(1);
        assert!(matches!(
            treewidth_from_pmcs(&g, &pm),
            Err(Error::IncompletePmcSet { .. })
        ));
    }

    #[test]
    fn spot_values() {
        assert_eq!(check(&Graph::complete(4)), 3);
        assert_eq!(check(&Graph::path(7)), 1);
        assert_eq!(check(&Graph::grid(3, 3)), 3);
        assert_eq!(check(&Graph::cycle(6)), 2);
        assert_eq!(check(&Graph::empty(3)), 0);
        assert_eq!(check(&Graph::complete(1)), 0);
        assert_eq!(check(&theta(&[1, 2, 3])), 2);
        assert_eq!(check(&Graph::grid(2, 4)), 2);
    }

    #[test]
    fn triconnected_pieces() {
        assert_eq!(check(&cube()), 3);
        assert_eq!(check(&octahedron()), 4);
        assert_eq!(check(&icosahedron()), 6);
    }

    #[test]
    fn non_planar_is_rejected() {
        assert_eq!(treewidth_planar(&Graph::complete(5)).err(), Some(Error::NotPlanar));
    }
}
