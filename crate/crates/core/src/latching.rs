//! Latching graphs: a plane graph plus, inside every face bounded by four or
//! more vertices, every chord of the bounding cycle.
//!
//! For a triconnected plane graph two vertices share at most one face unless
//! they are adjacent, in which case no face has them as a chord. The latching
//! graph is then simple, and a vertex set `X` induces a plane subgraph
//! exactly when no face holds four or more members of `X`.

use std::collections::HashMap;
use std::fmt;
use std::rc::Rc;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::planar::{Face, PlaneGraph};
use crate::set::VertexSet;

/// Where a latching edge comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum EdgeOrigin {
    GraphEdge,
    /// Chord drawn inside the face with this id.
    Chord(usize),
}

impl fmt::Display for EdgeOrigin {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EdgeOrigin::GraphEdge => f.write_str("edge"),
            EdgeOrigin::Chord(face) => write!(f, "chord {face}"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LatchingEdge {
    pub u: usize,
    pub v: usize,
    pub origin: EdgeOrigin,
}

#[derive(Clone, Debug)]
pub struct LatchingGraph {
    base: PlaneGraph,
    faces: Vec<Face>,
    edges: Vec<LatchingEdge>,
    origin: HashMap<(usize, usize), EdgeOrigin>,
    graph: Rc<Graph>,
}

/// `L[X]` relabelled to `0..|X|`, keeping the origin of every edge.
#[derive(Clone, Debug)]
pub struct LatchingSubgraph {
    pub graph: Graph,
    /// Local id to original vertex.
    pub labels: Vec<usize>,
    /// Edges in original ids.
    pub edges: Vec<LatchingEdge>,
}

fn key(u: usize, v: usize) -> (usize, usize) {
    (u.min(v), u.max(v))
}

/// Builds the latching graph of a biconnected plane graph.
///
/// Fails with [`Error::MultiEdge`] when a vertex pair would receive two
/// latching edges, which happens only if the base graph is not triconnected.
pub fn build_latching(pg: &PlaneGraph) -> Result<LatchingGraph> {
    let g = pg.graph();
    if !g.is_biconnected() {
        return Err(Error::NotBiconnected);
    }
    let faces = pg.faces();
    let mut origin: HashMap<(usize, usize), EdgeOrigin> = HashMap::new();
    let mut edges = Vec::new();
    for (u, v) in g.edges() {
        origin.insert((u, v), EdgeOrigin::GraphEdge);
        edges.push(LatchingEdge {
            u,
            v,
            origin: EdgeOrigin::GraphEdge,
        });
    }
    for face in &faces {
        let k = face.len();
        if k < 4 {
            continue;
        }
        for i in 0..k {
            // skip i+1 (consecutive) and stop before wrapping back to i-1
            for j in i + 2..k {
                if i == 0 && j == k - 1 {
                    continue;
                }
                let (u, v) = key(face.boundary[i], face.boundary[j]);
                let tag = EdgeOrigin::Chord(face.id);
                if origin.insert((u, v), tag).is_some() {
                    return Err(Error::MultiEdge(u, v));
                }
                edges.push(LatchingEdge { u, v, origin: tag });
            }
        }
    }
    edges.sort();
    let graph = Rc::new(Graph::from_edges(g.n(), edges.iter().map(|e| (e.u, e.v)))?);
    Ok(LatchingGraph {
        base: pg.clone(),
        faces,
        edges,
        origin,
        graph,
    })
}

impl LatchingGraph {
    pub fn base(&self) -> &PlaneGraph {
        &self.base
    }

    pub fn faces(&self) -> &[Face] {
        &self.faces
    }

    /// All latching edges sorted by endpoints.
    pub fn edges(&self) -> &[LatchingEdge] {
        &self.edges
    }

    /// The latching graph as a plain simple graph.
    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    /// Shared handle to the latching graph, for long-lived enumerators.
    pub fn graph_rc(&self) -> Rc<Graph> {
        Rc::clone(&self.graph)
    }

    pub fn n(&self) -> usize {
        self.graph.n()
    }

    pub fn origin(&self, u: usize, v: usize) -> Option<EdgeOrigin> {
        self.origin.get(&key(u, v)).copied()
    }

    pub fn chord_count(&self) -> usize {
        self.edges
            .iter()
            .filter(|e| e.origin != EdgeOrigin::GraphEdge)
            .count()
    }

    /// The subgraph induced by `x`.
    pub fn induced(&self, x: &VertexSet) -> LatchingSubgraph {
        let (graph, labels) = self.graph.induced(x);
        let edges = self
            .edges
            .iter()
            .filter(|e| x.contains(e.u) && x.contains(e.v))
            .copied()
            .collect();
        LatchingSubgraph {
            graph,
            labels,
            edges,
        }
    }

    /// Whether `L[X]` is a plane graph: no face has four or more members of
    /// `x` on its boundary.
    pub fn is_plane_induced(&self, x: &VertexSet) -> bool {
        self.faces.iter().all(|f| f.vertex_set.intersection_len(x) < 4)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::tests::{cube, octahedron};
    use crate::planar::embed;

    fn latching(g: &Graph) -> LatchingGraph {
        build_latching(&embed(g).unwrap()).unwrap()
    }

    #[test]
    fn octahedron_and_k4_gain_no_chords() {
        for g in [octahedron(), Graph::complete(4)] {
            let l = latching(&g);
            assert_eq!(l.graph(), &g);
            assert_eq!(l.chord_count(), 0);
        }
    }

    #[test]
    fn cube_latching_has_two_chords_per_face() {
        let g = cube();
        let l = latching(&g);
        assert_eq!(l.edges().len(), 24);
        assert_eq!(l.chord_count(), 12);
        assert_eq!(l.graph().m(), 24);
        // each chord is claimed by one face, two per face
        let mut per_face: HashMap<usize, usize> = HashMap::new();
        for e in l.edges() {
            if let EdgeOrigin::Chord(f) = e.origin {
                *per_face.entry(f).or_default() += 1;
                assert!(!g.has_edge(e.u, e.v));
            }
        }
        assert_eq!(per_face.len(), 6);
        assert!(per_face.values().all(|&c| c == 2));
    }

    #[test]
    fn induced_on_cube_face_is_k4() {
        let g = cube();
        let l = latching(&g);
        let x = g.set([0, 1, 2, 3]);
        let sub = l.induced(&x);
        assert_eq!(sub.graph, Graph::complete(4));
        assert_eq!(
            sub.edges.iter().filter(|e| e.origin == EdgeOrigin::GraphEdge).count(),
            4
        );
        assert!(!l.is_plane_induced(&x));
        assert_eq!(l.induced(&g.empty_set()).graph.n(), 0);
    }

    #[test]
    fn any_three_cube_vertices_are_plane() {
        let g = cube();
        let l = latching(&g);
        for a in 0..8 {
            for b in a + 1..8 {
                for c in b + 1..8 {
                    assert!(l.is_plane_induced(&g.set([a, b, c])));
                }
            }
        }
    }

    #[test]
    fn octahedron_everything_is_plane() {
        let g = octahedron();
        let l = latching(&g);
        for mask in 0u32..64 {
            let x = g.set((0..6).filter(|i| mask >> i & 1 == 1));
            assert!(l.is_plane_induced(&x));
        }
        assert_eq!(l.induced(&g.set([0, 1, 2])).graph, Graph::complete(3));
    }

    #[test]
    fn two_separated_graph_has_parallel_latching_edges() {
        // C4 has two quadrilateral faces drawing the same two chords
        let pg = embed(&Graph::cycle(4)).unwrap();
        assert!(matches!(build_latching(&pg), Err(Error::MultiEdge(_, _))));
        // a path is not biconnected at all
        let pg = embed(&Graph::path(3)).unwrap();
        assert_eq!(build_latching(&pg).unwrap_err(), Error::NotBiconnected);
    }
}
