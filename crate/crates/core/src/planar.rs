//! Combinatorial plane embeddings (rotation systems), faces, and the
//! connectivity tests that decide which part of the pipeline applies.
//!
//! A rotation system assigns each vertex `v` a cyclic order of its
//! neighbors. Leaving `v` towards `w = next(v, u)` after arriving from `u`
//! traces a face; the directed edges split into closed walks, one per face.
//! For a connected graph the rotation system is a sphere embedding exactly
//! when `|V| - |E| + |F| = 2`.

use std::collections::{HashMap, HashSet};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::set::VertexSet;

/// A graph together with a rotation system.
#[derive(Clone, Debug)]
pub struct PlaneGraph {
    graph: Graph,
    rotation: Vec<Vec<usize>>,
}

/// One face: the closed walk along its boundary and the vertices on it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Face {
    pub id: usize,
    pub boundary: Vec<usize>,
    pub vertex_set: VertexSet,
}

impl Face {
    pub fn len(&self) -> usize {
        self.boundary.len()
    }

    pub fn is_empty(&self) -> bool {
        self.boundary.is_empty()
    }
}

impl PlaneGraph {
    /// Validates a rotation system: every list must be a permutation of the
    /// neighbors of its vertex and the face count must satisfy Euler's
    /// formula.
    pub fn new(graph: Graph, rotation: Vec<Vec<usize>>) -> Result<Self> {
        if rotation.len() != graph.n() {
            return Err(Error::InvalidEmbedding(format!(
                "rotation covers {} vertices, graph has {}",
                rotation.len(),
                graph.n()
            )));
        }
        for (v, order) in rotation.iter().enumerate() {
            let mut sorted = order.clone();
            sorted.sort_unstable();
            if sorted != graph.neighbors(v) {
                return Err(Error::InvalidEmbedding(format!(
                    "rotation at {v} is not a permutation of its neighbors"
                )));
            }
        }
        if !graph.is_connected() {
            return Err(Error::Disconnected);
        }
        let pg = PlaneGraph { graph, rotation };
        let f = pg.face_walks().len();
        let (n, m) = (pg.graph.n() as i64, pg.graph.m() as i64);
        if n - m + f as i64 != 2 {
            return Err(Error::InvalidEmbedding(format!(
                "Euler characteristic {} (V={n}, E={m}, F={f}), expected 2",
                n - m + f as i64
            )));
        }
        Ok(pg)
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn rotation(&self, v: usize) -> &[usize] {
        &self.rotation[v]
    }

    /// The neighbor following `u` in the rotation at `v`.
    pub fn next(&self, v: usize, u: usize) -> usize {
        let order = &self.rotation[v];
        let i = order
            .iter()
            .position(|&x| x == u)
            .unwrap_or_else(|| panic!("{u} is not a neighbor of {v}"));
        order[(i + 1) % order.len()]
    }

    fn face_walks(&self) -> Vec<Vec<usize>> {
        let n = self.graph.n();
        // position of each neighbor in the rotation, for O(1) successor lookup
        let pos: Vec<HashMap<usize, usize>> = self
            .rotation
            .iter()
            .map(|o| o.iter().enumerate().map(|(i, &u)| (u, i)).collect())
            .collect();
        let mut used: HashSet<(usize, usize)> = HashSet::new();
        let mut walks = Vec::new();
        for u in 0..n {
            for &v in self.graph.neighbors(u) {
                if used.contains(&(u, v)) {
                    continue;
                }
                let mut walk = Vec::new();
                let (mut a, mut b) = (u, v);
                while used.insert((a, b)) {
                    walk.push(a);
                    let order = &self.rotation[b];
                    let c = order[(pos[b][&a] + 1) % order.len()];
                    a = b;
                    b = c;
                }
                walks.push(walk);
            }
        }
        if n == 1 {
            // a lone vertex bounds a single face
            walks.push(vec![0]);
        }
        walks
    }

    /// Faces in discovery order: walks start from the smallest unused
    /// directed edge. Every directed edge lies on exactly one face.
    pub fn faces(&self) -> Vec<Face> {
        let n = self.graph.n();
        self.face_walks()
            .into_iter()
            .enumerate()
            .map(|(id, boundary)| Face {
                id,
                vertex_set: VertexSet::from_vertices(n, boundary.iter().copied()),
                boundary,
            })
            .collect()
    }

    /// The rotation system with every cyclic order reversed; the mirror
    /// image embedding.
    pub fn mirrored(&self) -> PlaneGraph {
        PlaneGraph {
            graph: self.graph.clone(),
            rotation: self
                .rotation
                .iter()
                .map(|o| o.iter().rev().copied().collect())
                .collect(),
        }
    }
}

/// Computes a plane embedding of a connected graph, or reports that none
/// exists.
///
/// Blocks are embedded independently and their rotations concatenated at cut
/// vertices; each block of three or more vertices is embedded by repeatedly
/// routing a path of some fragment through a face containing all of the
/// fragment's attachments (preferring fragments with a single admissible
/// face). Quadratic per block, which is plenty at the sizes this crate
/// targets.
pub fn embed(g: &Graph) -> Result<PlaneGraph> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let n = g.n();
    let mut rotation: Vec<Vec<usize>> = vec![Vec::new(); n];
    for block in g.biconnected_components() {
        if block.len() == 1 {
            continue;
        }
        if block.len() == 2 {
            let v = block.to_vec();
            rotation[v[0]].push(v[1]);
            rotation[v[1]].push(v[0]);
            continue;
        }
        let (h, labels) = g.induced(&block);
        let local = embed_biconnected(&h)?;
        for (i, order) in local.into_iter().enumerate() {
            rotation[labels[i]].extend(order.into_iter().map(|j| labels[j]));
        }
    }
    PlaneGraph::new(g.clone(), rotation)
}

struct Fragment {
    attachments: Vec<usize>,
    /// Vertices not yet embedded; empty for a single chord edge.
    inner: VertexSet,
    chord: Option<(usize, usize)>,
}

fn embed_biconnected(g: &Graph) -> Result<Vec<Vec<usize>>> {
    let n = g.n();
    let cycle = initial_cycle(g);
    let mut placed = VertexSet::from_vertices(n, cycle.iter().copied());
    let mut placed_edges: HashSet<(usize, usize)> = HashSet::new();
    for i in 0..cycle.len() {
        let (a, b) = (cycle[i], cycle[(i + 1) % cycle.len()]);
        placed_edges.insert((a.min(b), a.max(b)));
    }
    let mut faces: Vec<Vec<usize>> = vec![cycle.clone(), cycle.iter().rev().copied().collect()];

    while placed_edges.len() < g.m() {
        let fragments = fragments(g, &placed, &placed_edges);
        let face_sets: Vec<VertexSet> = faces
            .iter()
            .map(|f| VertexSet::from_vertices(n, f.iter().copied()))
            .collect();
        let mut choice: Option<(usize, usize)> = None;
        for (k, frag) in fragments.iter().enumerate() {
            let admissible: Vec<usize> = (0..faces.len())
                .filter(|&fi| frag.attachments.iter().all(|&a| face_sets[fi].contains(a)))
                .collect();
            match admissible.len() {
                0 => return Err(Error::NotPlanar),
                1 => {
                    choice = Some((k, admissible[0]));
                    break;
                }
                _ => {
                    if choice.is_none() {
                        choice = Some((k, admissible[0]));
                    }
                }
            }
        }
        let (k, fi) = choice.expect("some edge is still unplaced");
        let path = fragment_path(g, &fragments[k], &placed);
        let face = faces.swap_remove(fi);
        let (f1, f2) = split_face(&face, &path);
        faces.push(f1);
        faces.push(f2);
        for w in path.windows(2) {
            placed_edges.insert((w[0].min(w[1]), w[0].max(w[1])));
        }
        for &v in &path {
            placed.insert(v);
        }
    }

    // successor at v of u, read off consecutive face triples (u, v, w)
    let mut succ: Vec<HashMap<usize, usize>> = vec![HashMap::new(); n];
    for f in &faces {
        let k = f.len();
        for i in 0..k {
            let (u, v, w) = (f[(i + k - 1) % k], f[i], f[(i + 1) % k]);
            succ[v].insert(u, w);
        }
    }
    let mut rotation = Vec::with_capacity(n);
    for (v, next) in succ.iter().enumerate() {
        let start = g.neighbors(v)[0];
        let mut order = vec![start];
        let mut u = next[&start];
        while u != start {
            order.push(u);
            u = next[&u];
        }
        rotation.push(order);
    }
    Ok(rotation)
}

/// A cycle through the edge from vertex 0 to its smallest neighbor.
fn initial_cycle(g: &Graph) -> Vec<usize> {
    let a = g.neighbors(0)[0];
    // BFS from a to 0 without using the edge {0, a}
    let n = g.n();
    let mut parent = vec![usize::MAX; n];
    parent[a] = a;
    let mut queue = std::collections::VecDeque::from([a]);
    while let Some(v) = queue.pop_front() {
        if v == 0 {
            break;
        }
        for &w in g.neighbors(v) {
            if v == a && w == 0 {
                continue;
            }
            if parent[w] == usize::MAX {
                parent[w] = v;
                queue.push_back(w);
            }
        }
    }
    assert!(parent[0] != usize::MAX, "biconnected graph has a cycle through every edge");
    let mut cycle = vec![0];
    let mut v = parent[0];
    while v != a {
        cycle.push(v);
        v = parent[v];
    }
    cycle.push(a);
    cycle
}

fn fragments(g: &Graph, placed: &VertexSet, placed_edges: &HashSet<(usize, usize)>) -> Vec<Fragment> {
    let mut out = Vec::new();
    for (u, v) in g.edges() {
        if placed.contains(u) && placed.contains(v) && !placed_edges.contains(&(u, v)) {
            out.push(Fragment {
                attachments: vec![u, v],
                inner: VertexSet::new(g.n()),
                chord: Some((u, v)),
            });
        }
    }
    for c in g.components(placed) {
        out.push(Fragment {
            attachments: c.neighborhood.to_vec(),
            inner: c.vertices,
            chord: None,
        });
    }
    out
}

/// A path through the fragment joining two distinct attachments.
fn fragment_path(g: &Graph, frag: &Fragment, placed: &VertexSet) -> Vec<usize> {
    if let Some((u, v)) = frag.chord {
        return vec![u, v];
    }
    let a = frag.attachments[0];
    let start = g
        .neighbors(a)
        .iter()
        .copied()
        .find(|&c| frag.inner.contains(c))
        .expect("attachment touches the fragment");
    let n = g.n();
    let mut parent = vec![usize::MAX; n];
    parent[start] = start;
    let mut queue = std::collections::VecDeque::from([start]);
    while let Some(x) = queue.pop_front() {
        if let Some(&b) = g
            .neighbors(x)
            .iter()
            .find(|&&b| b != a && placed.contains(b))
        {
            let mut inner = vec![x];
            let mut y = x;
            while y != start {
                y = parent[y];
                inner.push(y);
            }
            inner.reverse();
            let mut path = vec![a];
            path.extend(inner);
            path.push(b);
            return path;
        }
        for &w in g.neighbors(x) {
            if frag.inner.contains(w) && parent[w] == usize::MAX {
                parent[w] = x;
                queue.push_back(w);
            }
        }
    }
    unreachable!("fragments of a biconnected graph have two attachments")
}

/// Splits a face cycle by a path whose ends lie on it. Orientation is kept
/// consistent: each new path edge appears once in each direction.
fn split_face(face: &[usize], path: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let k = face.len();
    let a = path[0];
    let b = *path.last().unwrap();
    let i = face.iter().position(|&x| x == a).expect("path start on face");
    let j = face.iter().position(|&x| x == b).expect("path end on face");
    let interior = &path[1..path.len() - 1];

    let mut f1 = Vec::new();
    let mut t = i;
    loop {
        f1.push(face[t]);
        if t == j {
            break;
        }
        t = (t + 1) % k;
    }
    f1.extend(interior.iter().rev());

    let mut f2 = Vec::new();
    let mut t = j;
    loop {
        f2.push(face[t]);
        if t == i {
            break;
        }
        t = (t + 1) % k;
    }
    f2.extend(interior.iter());
    (f1, f2)
}

/// Planarity test.
pub fn is_planar(g: &Graph) -> bool {
    if g.is_connected() {
        return embed(g).is_ok();
    }
    g.components(&g.empty_set()).iter().all(|c| {
        let (h, _) = g.induced(&c.vertices);
        embed(&h).is_ok()
    })
}

/// No separator of size at most two. Graphs on at most four vertices are
/// triconnected exactly when complete.
pub fn is_triconnected(g: &Graph) -> bool {
    let n = g.n();
    if n <= 4 {
        return g.is_clique(&g.vertex_set());
    }
    if !g.is_connected() {
        return false;
    }
    (0..n).all(|x| {
        let rest = VertexSet::singleton(n, x).complement();
        let (h, _) = g.induced(&rest);
        h.is_connected() && h.articulation_points().is_empty()
    })
}

/// All two-vertex separators, in lexicographic order.
pub fn two_separators(g: &Graph) -> Vec<VertexSet> {
    let n = g.n();
    let mut out = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            let s = VertexSet::from_vertices(n, [a, b]);
            if g.components(&s).len() >= 2 {
                out.push(s);
            }
        }
    }
    out
}
