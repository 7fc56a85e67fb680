//! Deterministic families of planar test graphs.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::Graph;
use crate::planar::{is_planar, is_triconnected};

#[derive(Clone, Debug)]
pub struct CorpusGraph {
    pub name: String,
    pub graph: Graph,
    pub planar: bool,
    pub connected: bool,
    pub biconnected: bool,
    pub triconnected: bool,
}

impl CorpusGraph {
    pub fn new(name: impl Into<String>, graph: Graph) -> Self {
        CorpusGraph {
            name: name.into(),
            planar: is_planar(&graph),
            connected: graph.is_connected(),
            biconnected: graph.is_biconnected(),
            triconnected: is_triconnected(&graph),
            graph,
        }
    }
}

fn build(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Graph {
    Graph::from_edges(n, edges).expect("well-formed family")
}

pub fn tetrahedron() -> Graph {
    Graph::complete(4)
}

pub fn cube() -> Graph {
    prism(4)
}

pub fn octahedron() -> Graph {
    antiprism(3)
}

pub fn dodecahedron() -> Graph {
    // outer 5-ring, middle 10-ring, inner 5-ring
    let mut e = Vec::new();
    for i in 0..5 {
        e.push((i, (i + 1) % 5));
        e.push((15 + i, 15 + (i + 1) % 5));
        e.push((i, 5 + 2 * i));
        e.push((15 + i, 5 + 2 * i + 1));
    }
    for j in 0..10 {
        e.push((5 + j, 5 + (j + 1) % 10));
    }
    build(20, e)
}

pub fn icosahedron() -> Graph {
    let mut e = Vec::new();
    for i in 0..5 {
        let (u, u1) = (1 + i, 1 + (i + 1) % 5);
        let (d, d1) = (6 + i, 6 + (i + 1) % 5);
        e.extend([(0, u), (u, u1), (d, d1), (u, d), (u, d1), (11, d)]);
    }
    build(12, e)
}

/// Hub `0` joined to the rim cycle `1..=k`.
pub fn wheel(k: usize) -> Graph {
    let mut e: Vec<_> = (1..=k).map(|i| (0, i)).collect();
    e.extend((0..k).map(|i| (1 + i, 1 + (i + 1) % k)));
    build(k + 1, e)
}

/// Two `k`-cycles `0..k` and `k..2k` joined by a perfect matching.
pub fn prism(k: usize) -> Graph {
    let mut e = Vec::new();
    for i in 0..k {
        e.extend([(i, (i + 1) % k), (k + i, k + (i + 1) % k), (i, k + i)]);
    }
    build(2 * k, e)
}

/// Two `k`-cycles joined by a zigzag of triangles.
pub fn antiprism(k: usize) -> Graph {
    let mut e = Vec::new();
    for i in 0..k {
        let j = (i + 1) % k;
        e.extend([(i, j), (k + i, k + j), (i, k + i), (j, k + i)]);
    }
    build(2 * k, e)
}

/// Complete bipartite `K_{2,k}`.
pub fn k2k(k: usize) -> Graph {
    build(k + 2, (0..k).flat_map(|i| [(0, 2 + i), (1, 2 + i)]))
}

/// Two poles joined by internally disjoint paths with the given numbers of
/// internal vertices.
pub fn theta(lengths: &[usize]) -> Graph {
    let mut n = 2;
    let mut e = Vec::new();
    for &len in lengths {
        if len == 0 {
            e.push((0, 1));
            continue;
        }
        let first = n;
        n += len;
        e.push((0, first));
        e.extend((first..n - 1).map(|v| (v, v + 1)));
        e.push((n - 1, 1));
    }
    build(n, e)
}

/// Disjoint copies of `a` and `b`, with the pairs in `glue` identified
/// (vertex `glue[i].1` of `b` becomes vertex `glue[i].0` of `a`).
pub fn glue(a: &Graph, b: &Graph, glue: &[(usize, usize)]) -> Graph {
    let mut map = vec![usize::MAX; b.n()];
    for &(x, y) in glue {
        map[y] = x;
    }
    let mut n = a.n();
    for m in map.iter_mut() {
        if *m == usize::MAX {
            *m = n;
            n += 1;
        }
    }
    let mut e: Vec<_> = a.edges().collect();
    e.extend(b.edges().map(|(u, v)| (map[u], map[v])));
    build(n, e)
}

pub fn random_tree(rng: &mut impl Rng, n: usize) -> Graph {
    build(n, (1..n).map(|v| (rng.gen_range(0..v), v)))
}

/// Triangulated sphere grown from a tetrahedron by stacking vertices into
/// faces, splitting edges and flipping edges.
pub fn random_triangulation(rng: &mut impl Rng, n: usize) -> Graph {
    assert!(n >= 4);
    let mut faces: Vec<[usize; 3]> = vec![[0, 1, 2], [0, 2, 3], [0, 3, 1], [1, 3, 2]];
    let mut count = 4;
    let degree = |faces: &[[usize; 3]], v: usize| faces.iter().filter(|f| f.contains(&v)).count();
    // faces (a, b, c) and (b, a, d) sharing the edge a-b
    let find = |faces: &[[usize; 3]], a: usize, b: usize| -> Option<(usize, usize)> {
        faces.iter().enumerate().find_map(|(i, f)| {
            (0..3).find_map(|k| (f[k] == a && f[(k + 1) % 3] == b).then_some((i, f[(k + 2) % 3])))
        })
    };
    while count < n {
        let pick = rng.gen_range(0..3);
        let fi = rng.gen_range(0..faces.len());
        let [a, b, c] = faces[fi];
        let v = count;
        if pick == 0 {
            faces.swap_remove(fi);
            faces.extend([[a, b, v], [b, c, v], [c, a, v]]);
            count += 1;
        } else {
            let (_, c1) = find(&faces, a, b).unwrap();
            let (gi, d) = find(&faces, b, a).unwrap();
            let has_cd = faces.iter().any(|f| f.contains(&c1) && f.contains(&d));
            if pick == 1 {
                let (hi, lo) = (fi.max(gi), fi.min(gi));
                faces.swap_remove(hi);
                faces.swap_remove(lo);
                faces.extend([[a, v, c1], [v, b, c1], [b, v, d], [v, a, d]]);
                count += 1;
            } else if !has_cd && degree(&faces, a) > 3 && degree(&faces, b) > 3 {
                let (hi, lo) = (fi.max(gi), fi.min(gi));
                faces.swap_remove(hi);
                faces.swap_remove(lo);
                faces.extend([[c1, a, d], [d, b, c1]]);
            }
        }
    }
    // a few extra flips to mix degrees
    for _ in 0..n {
        let fi = rng.gen_range(0..faces.len());
        let [a, b, _] = faces[fi];
        let (_, c1) = find(&faces, a, b).unwrap();
        let (gi, d) = find(&faces, b, a).unwrap();
        let has_cd = faces.iter().any(|f| f.contains(&c1) && f.contains(&d));
        if !has_cd && degree(&faces, a) > 3 && degree(&faces, b) > 3 {
            let (hi, lo) = (fi.max(gi), fi.min(gi));
            faces.swap_remove(hi);
            faces.swap_remove(lo);
            faces.extend([[c1, a, d], [d, b, c1]]);
        }
    }
    build(n, faces.iter().flat_map(|f| [(f[0], f[1]), (f[1], f[2]), (f[2], f[0])]))
}

/// A random triangulation with up to `deletions` edges removed, each removal
/// keeping the graph triconnected. Removals open faces of size four or more.
pub fn random_triconnected(rng: &mut impl Rng, n: usize, deletions: usize) -> Graph {
    let mut g = random_triangulation(rng, n);
    let mut edges: Vec<_> = g.edges().collect();
    edges.shuffle(rng);
    let mut removed = 0;
    for (u, v) in edges {
        if removed == deletions {
            break;
        }
        if g.degree(u) <= 3 || g.degree(v) <= 3 {
            continue;
        }
        let h = build(n, g.edges().filter(|&e| e != (u, v)));
        if is_triconnected(&h) {
            g = h;
            removed += 1;
        }
    }
    g
}

/// The test corpus: named solids and families plus seeded random graphs,
/// keeping only graphs with at most `n_max` vertices.
pub fn corpus(seed: u64, n_max: usize) -> Vec<CorpusGraph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = vec![
        CorpusGraph::new("tetrahedron", tetrahedron()),
        CorpusGraph::new("octahedron", octahedron()),
        CorpusGraph::new("cube", cube()),
        CorpusGraph::new("icosahedron", icosahedron()),
        CorpusGraph::new("dodecahedron", dodecahedron()),
    ];
    for k in 4..=12 {
        out.push(CorpusGraph::new(format!("wheel-{k}"), wheel(k)));
    }
    for k in 3..=7 {
        out.push(CorpusGraph::new(format!("prism-{k}"), prism(k)));
    }
    for k in 4..=7 {
        out.push(CorpusGraph::new(format!("antiprism-{k}"), antiprism(k)));
    }
    for i in 0..48 {
        let n = 5 + i % 8;
        let deletions = i % 4 * (n / 3);
        let g = random_triconnected(&mut rng, n, deletions);
        out.push(CorpusGraph::new(format!("random-tri-{n}-{i}"), g));
    }
    // not triconnected
    for (r, c) in [(1, 5), (2, 2), (2, 3), (2, 5), (3, 3), (3, 4), (4, 4)] {
        out.push(CorpusGraph::new(format!("grid-{r}x{c}"), Graph::grid(r, c)));
    }
    for k in [3, 4, 7] {
        out.push(CorpusGraph::new(format!("cycle-{k}"), Graph::cycle(k)));
    }
    for k in [2, 3, 5] {
        out.push(CorpusGraph::new(format!("k2-{k}"), k2k(k)));
    }
    for lens in [&[1, 2, 3][..], &[0, 2, 2], &[2, 2, 2, 2], &[1, 1, 4]] {
        out.push(CorpusGraph::new(format!("theta-{lens:?}"), theta(lens)));
    }
    for i in 0..4 {
        let n = 4 + i * 2;
        out.push(CorpusGraph::new(format!("tree-{n}"), random_tree(&mut rng, n)));
    }
    out.push(CorpusGraph::new("single-vertex", Graph::empty(1)));
    out.push(CorpusGraph::new("edge", Graph::complete(2)));
    out.push(CorpusGraph::new("path-5", Graph::path(5)));
    for i in 0..6 {
        let a = random_triconnected(&mut rng, 5 + i % 3, i % 2);
        let b = random_triconnected(&mut rng, 4 + i % 4, 1);
        let (u, v) = a.edges().next().unwrap();
        let (x, y) = b.edges().last().unwrap();
        let g = glue(&a, &b, &[(u, x), (v, y)]);
        out.push(CorpusGraph::new(format!("edge-glue-{i}"), g.clone()));
        // the same gluing without the shared edge keeps {u, v} a 2-separator
        let bare = build(g.n(), g.edges().filter(|&e| e != (u.min(v), u.max(v))));
        out.push(CorpusGraph::new(format!("pair-glue-{i}"), bare));
        let w = glue(&a, &b, &[(u, x)]);
        out.push(CorpusGraph::new(format!("vertex-glue-{i}"), w));
    }
    let mut chain = octahedron();
    chain = glue(&chain, &cube(), &[(0, 0), (1, 1)]);
    out.push(CorpusGraph::new("octahedron-cube", chain));
    out.push(CorpusGraph::new(
        "two-wheels-apart",
        build(10, wheel(4).edges().chain(wheel(4).edges().map(|(u, v)| (u + 5, v + 5)))),
    ));
    out.retain(|c| c.graph.n() <= n_max);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn families_have_expected_shapes() {
        for (g, n, m) in [
            (cube(), 8, 12),
            (octahedron(), 6, 12),
            (icosahedron(), 12, 30),
            (dodecahedron(), 20, 30),
            (wheel(5), 6, 10),
            (k2k(3), 5, 6),
            (theta(&[1, 2, 3]), 8, 9),
        ] {
            assert_eq!((g.n(), g.m()), (n, m));
            assert!(is_planar(&g));
        }
        for g in [cube(), octahedron(), icosahedron(), dodecahedron(), wheel(6), antiprism(5)] {
            assert!(is_triconnected(&g));
            assert!(g.edges().all(|(u, _)| g.degree(u) >= 3));
        }
    }

    #[test]
    fn random_triangulations_are_maximal_planar() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for n in 4..30 {
            let g = random_triangulation(&mut rng, n);
            assert_eq!(g.m(), 3 * n - 6, "n = {n}");
            assert!(is_planar(&g));
            assert!(is_triconnected(&g));
        }
    }

    #[test]
    fn corpus_is_deterministic_and_labelled() {
        let a = corpus(1, 12);
        let b = corpus(1, 12);
        assert_eq!(a.len(), b.len());
        for (x, y) in a.iter().zip(&b) {
            assert_eq!(x.graph, y.graph);
            assert!(x.planar, "{}", x.name);
        }
        assert!(a.iter().any(|c| c.name == "tetrahedron"));
        let tri = a.iter().filter(|c| c.triconnected).count();
        assert!(tri >= 50, "only {tri} triconnected graphs");
        assert!(a.iter().any(|c| c.triconnected && c.graph.m() < 3 * c.graph.n() - 6));
    }
}
