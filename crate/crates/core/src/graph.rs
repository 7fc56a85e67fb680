//! Simple undirected graphs on dense vertex ids, with the separator and
//! potential-maximal-clique predicates everything else is checked against.

use crate::error::{Error, Result};
use crate::set::VertexSet;

/// A simple undirected graph on vertices `0..n`.
///
/// Adjacency is stored twice: as sorted neighbor lists for iteration and as
/// bit sets for set algebra. Immutable after construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    nbrs: Vec<VertexSet>,
    m: usize,
}

/// A connected component of `G - S` together with its open neighborhood.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Component {
    pub vertices: VertexSet,
    pub neighborhood: VertexSet,
}

impl Component {
    /// Whether the neighborhood is all of `s`.
    pub fn is_full(&self, s: &VertexSet) -> bool {
        &self.neighborhood == s
    }
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
            nbrs: vec![VertexSet::new(n); n],
            m: 0,
        }
    }

    /// Builds a graph from an edge list. Repeated edges are merged; self-loops
    /// and out-of-range endpoints are rejected.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut nbrs = vec![VertexSet::new(n); n];
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::InvalidGraph(format!(
                    "edge ({u}, {v}) out of range for {n} vertices"
                )));
            }
            if u == v {
                return Err(Error::InvalidGraph(format!("self-loop at {u}")));
            }
            nbrs[u].insert(v);
            nbrs[v].insert(u);
        }
        let adj: Vec<Vec<usize>> = nbrs.iter().map(VertexSet::to_vec).collect();
        let m = adj.iter().map(Vec::len).sum::<usize>() / 2;
        Ok(Graph { adj, nbrs, m })
    }

    /// Complete graph on `n` vertices.
    pub fn complete(n: usize) -> Self {
        let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
        Graph::from_edges(n, edges).expect("complete graph edges are valid")
    }

    /// Cycle `0 - 1 - ... - (n-1) - 0`.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "a cycle needs at least three vertices");
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).expect("cycle edges are valid")
    }

    /// Path `0 - 1 - ... - (n-1)`.
    pub fn path(n: usize) -> Self {
        Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).expect("path edges are valid")
    }

    /// `rows x cols` grid with vertex `r * cols + c`.
    pub fn grid(rows: usize, cols: usize) -> Self {
        let mut edges = Vec::new();
        for r in 0..rows {
            for c in 0..cols {
                let v = r * cols + c;
                if c + 1 < cols {
                    edges.push((v, v + 1));
                }
                if r + 1 < rows {
                    edges.push((v, v + cols));
                }
            }
        }
        Graph::from_edges(rows * cols, edges).expect("grid edges are valid")
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn neighbor_set(&self, v: usize) -> &VertexSet {
        &self.nbrs[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.nbrs[u].contains(v)
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, ns)| ns.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
    }

    pub fn vertex_set(&self) -> VertexSet {
        VertexSet::full(self.n())
    }

    pub fn empty_set(&self) -> VertexSet {
        VertexSet::new(self.n())
    }

    pub fn set<I: IntoIterator<Item = usize>>(&self, vertices: I) -> VertexSet {
        VertexSet::from_vertices(self.n(), vertices)
    }

    /// Open neighborhood `N(U)`: vertices outside `u` adjacent to some member.
    pub fn neighborhood(&self, u: &VertexSet) -> VertexSet {
        let mut out = VertexSet::new(self.n());
        for v in u {
            out.union_with(&self.nbrs[v]);
        }
        out.difference_with(u);
        out
    }

    pub fn is_clique(&self, u: &VertexSet) -> bool {
        let k = u.len();
        u.iter().all(|v| self.nbrs[v].intersection_len(u) == k - 1)
    }

    /// Vertices reachable from `start` inside `allowed` (which must contain
    /// `start`).
    pub fn reach(&self, start: usize, allowed: &VertexSet) -> VertexSet {
        let mut seen = VertexSet::new(self.n());
        seen.insert(start);
        let mut stack = vec![start];
        while let Some(v) = stack.pop() {
            for &w in &self.adj[v] {
                if allowed.contains(w) && seen.insert(w) {
                    stack.push(w);
                }
            }
        }
        seen
    }

    /// Whether `u` induces a connected subgraph. The empty set counts as
    /// connected.
    pub fn is_connected_set(&self, u: &VertexSet) -> bool {
        match u.first() {
            None => true,
            Some(s) => self.reach(s, u).len() == u.len(),
        }
    }

    pub fn is_connected(&self) -> bool {
        self.is_connected_set(&self.vertex_set())
    }

    /// Components of `G - s`, ordered by their minimum vertex.
    pub fn components(&self, s: &VertexSet) -> Vec<Component> {
        self.components_within(&s.complement())
    }

    /// Components of the subgraph induced by `allowed`, with neighborhoods
    /// taken in the whole graph.
    pub fn components_within(&self, allowed: &VertexSet) -> Vec<Component> {
        let mut rest = allowed.clone();
        let mut out = Vec::new();
        while let Some(v) = rest.first() {
            let vertices = self.reach(v, &rest);
            rest.difference_with(&vertices);
            let neighborhood = self.neighborhood(&vertices);
            out.push(Component {
                vertices,
                neighborhood,
            });
        }
        out
    }

    /// Components of `G - s` whose neighborhood is all of `s`.
    pub fn full_components(&self, s: &VertexSet) -> Vec<Component> {
        self.components(s)
            .into_iter()
            .filter(|c| c.is_full(s))
            .collect()
    }

    /// `s` is a minimal separator iff at least two components of `G - s` are
    /// full.
    pub fn is_minimal_separator(&self, s: &VertexSet) -> bool {
        if s.is_empty() {
            return false;
        }
        self.components(s).iter().filter(|c| c.is_full(s)).take(2).count() == 2
    }

    /// Potential maximal clique test: `x` has no full component, and every
    /// pair of `x` is adjacent or lies in a common component neighborhood.
    pub fn is_pmc(&self, x: &VertexSet) -> bool {
        if x.is_empty() {
            return false;
        }
        let comps = self.components(x);
        if comps.iter().any(|c| c.is_full(x)) {
            return false;
        }
        // covered[v] = vertices of x that are adjacent to v or share a
        // component neighborhood with v
        let mut covered: Vec<VertexSet> = Vec::with_capacity(self.n());
        for v in 0..self.n() {
            if x.contains(v) {
                covered.push(self.nbrs[v].intersection(x));
            } else {
                covered.push(VertexSet::new(0));
            }
        }
        for c in &comps {
            for v in &c.neighborhood {
                covered[v].union_with(&c.neighborhood);
            }
        }
        x.iter().all(|v| {
            let mut need = x.clone();
            need.remove(v);
            need.is_subset(&covered[v])
        })
    }

    /// The subgraph induced by `u`, relabelled to `0..|u|` in ascending
    /// order. The second value maps new ids back to the original ones.
    pub fn induced(&self, u: &VertexSet) -> (Graph, Vec<usize>) {
        let labels = u.to_vec();
        let mut index = vec![usize::MAX; self.n()];
        for (i, &v) in labels.iter().enumerate() {
            index[v] = i;
        }
        let edges = self
            .edges()
            .filter(|&(a, b)| u.contains(a) && u.contains(b))
            .map(|(a, b)| (index[a], index[b]));
        let g = Graph::from_edges(labels.len(), edges).expect("induced edges are valid");
        (g, labels)
    }

    /// A copy with the given extra edges added.
    pub fn with_edges<I: IntoIterator<Item = (usize, usize)>>(&self, extra: I) -> Result<Graph> {
        Graph::from_edges(self.n(), self.edges().chain(extra))
    }

    /// Cut vertices, ascending.
    pub fn articulation_points(&self) -> Vec<usize> {
        let blocks = self.biconnected_components();
        let mut count = vec![0usize; self.n()];
        for b in &blocks {
            for v in b {
                count[v] += 1;
            }
        }
        (0..self.n()).filter(|&v| count[v] > 1).collect()
    }

    pub fn is_biconnected(&self) -> bool {
        self.n() >= 3 && self.is_connected() && self.articulation_points().is_empty()
    }

    /// Vertex sets of the biconnected components (blocks). Bridges are
    /// two-vertex blocks; isolated vertices are singleton blocks. Ordered by
    /// minimum vertex, then lexicographically.
    pub fn biconnected_components(&self) -> Vec<VertexSet> {
        let n = self.n();
        let mut disc = vec![usize::MAX; n];
        let mut low = vec![0usize; n];
        let mut time = 0;
        let mut edge_stack: Vec<(usize, usize)> = Vec::new();
        let mut blocks = Vec::new();

        for root in 0..n {
            if disc[root] != usize::MAX {
                continue;
            }
            if self.adj[root].is_empty() {
                blocks.push(VertexSet::singleton(n, root));
                disc[root] = time;
                time += 1;
                continue;
            }
            disc[root] = time;
            low[root] = time;
            time += 1;
            // frames: (vertex, parent, next neighbor index)
            let mut stack: Vec<(usize, usize, usize)> = vec![(root, usize::MAX, 0)];
            while let Some(top) = stack.last_mut() {
                let (v, parent, i) = *top;
                if i < self.adj[v].len() {
                    top.2 += 1;
                    let w = self.adj[v][i];
                    if disc[w] == usize::MAX {
                        edge_stack.push((v, w));
                        disc[w] = time;
                        low[w] = time;
                        time += 1;
                        stack.push((w, v, 0));
                    } else if w != parent && disc[w] < disc[v] {
                        edge_stack.push((v, w));
                        low[v] = low[v].min(disc[w]);
                    }
                } else {
                    stack.pop();
                    if let Some(&(p, _, _)) = stack.last() {
                        low[p] = low[p].min(low[v]);
                        if low[v] >= disc[p] {
                            let mut block = VertexSet::new(n);
                            while let Some((a, b)) = edge_stack.pop() {
                                block.insert(a);
                                block.insert(b);
                                if (a, b) == (p, v) {
                                    break;
                                }
                            }
                            blocks.push(block);
                        }
                    }
                }
            }
        }
        blocks.sort();
        blocks
    }
}
