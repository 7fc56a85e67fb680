use std::fmt;

use crate::graph::Graph;
use crate::set::VertexSet;

/// A tree decomposition: bags indexed `0..k` and tree edges between bag
/// indices.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TreeDecomposition {
    pub bags: Vec<VertexSet>,
    pub edges: Vec<(usize, usize)>,
}

/// The first decomposition axiom that fails.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TdViolation {
    /// A bag index in a tree edge is out of range, or a bag mentions a
    /// vertex outside the graph.
    OutOfRange,
    /// The tree edges do not form a tree on the bags.
    NotATree,
    /// The vertex is in no bag.
    UncoveredVertex(usize),
    /// No bag holds both ends of the edge.
    UncoveredEdge(usize, usize),
    /// The bags holding the vertex are not connected in the tree.
    Disconnected(usize),
}

impl fmt::Display for TdViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TdViolation::OutOfRange => f.write_str("index out of range"),
            TdViolation::NotATree => f.write_str("tree edges do not form a tree"),
            TdViolation::UncoveredVertex(v) => write!(f, "vertex {v} is in no bag"),
            TdViolation::UncoveredEdge(u, v) => write!(f, "edge {u}-{v} is in no bag"),
            TdViolation::Disconnected(v) => write!(f, "bags containing {v} are not connected"),
        }
    }
}

impl TreeDecomposition {
    /// Single bag holding every vertex.
    pub fn trivial(g: &Graph) -> Self {
        TreeDecomposition {
            bags: vec![g.vertex_set()],
            edges: Vec::new(),
        }
    }

    /// Largest bag size minus one; `0` for an empty decomposition.
    pub fn width(&self) -> usize {
        self.bags.iter().map(|b| b.len()).max().unwrap_or(1).saturating_sub(1)
    }

    pub fn len(&self) -> usize {
        self.bags.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bags.is_empty()
    }

    /// Appends `other`, shifting its bag indices; returns the offset.
    pub fn append(&mut self, other: TreeDecomposition) -> usize {
        let off = self.bags.len();
        self.bags.extend(other.bags);
        self.edges.extend(other.edges.into_iter().map(|(a, b)| (a + off, b + off)));
        off
    }

    /// The same decomposition over a larger vertex universe, with vertex `v`
    /// renamed to `labels[v]`.
    pub fn relabel(&self, labels: &[usize], universe: usize) -> TreeDecomposition {
        TreeDecomposition {
            bags: self
                .bags
                .iter()
                .map(|b| VertexSet::from_vertices(universe, b.iter().map(|v| labels[v])))
                .collect(),
            edges: self.edges.clone(),
        }
    }

    /// Index of the first bag containing all of `s`.
    pub fn bag_containing(&self, s: &VertexSet) -> Option<usize> {
        self.bags.iter().position(|b| s.is_subset(b))
    }

    /// Checks the three axioms and that the edges form a tree.
    pub fn check(&self, g: &Graph) -> Result<(), TdViolation> {
        let n = g.n();
        let k = self.bags.len();
        if self.bags.iter().any(|b| b.iter().any(|v| v >= n)) {
            return Err(TdViolation::OutOfRange);
        }
        if self.edges.iter().any(|&(a, b)| a >= k || b >= k) {
            return Err(TdViolation::OutOfRange);
        }
        if n == 0 {
            return Ok(());
        }
        if k == 0 || self.edges.len() != k - 1 {
            return Err(TdViolation::NotATree);
        }
        let mut tree = vec![Vec::new(); k];
        for &(a, b) in &self.edges {
            tree[a].push(b);
            tree[b].push(a);
        }
        // connected with k - 1 edges means a tree
        let reach = |keep: &dyn Fn(usize) -> bool, start: usize| {
            let mut seen = vec![false; k];
            let mut stack = vec![start];
            seen[start] = true;
            let mut count = 1;
            while let Some(x) = stack.pop() {
                for &y in &tree[x] {
                    if !seen[y] && keep(y) {
                        seen[y] = true;
                        count += 1;
                        stack.push(y);
                    }
                }
            }
            count
        };
        if reach(&|_| true, 0) != k {
            return Err(TdViolation::NotATree);
        }
        for v in 0..n {
            let holding: Vec<usize> = (0..k).filter(|&i| self.bags[i].contains(v)).collect();
            let Some(&first) = holding.first() else {
                return Err(TdViolation::UncoveredVertex(v));
            };
            if reach(&|i| self.bags[i].contains(v), first) != holding.len() {
                return Err(TdViolation::Disconnected(v));
            }
        }
        for (u, v) in g.edges() {
            if !self.bags.iter().any(|b| b.contains(u) && b.contains(v)) {
                return Err(TdViolation::UncoveredEdge(u, v));
            }
        }
        Ok(())
    }
}

/// Whether `td` is a valid tree decomposition of `g`.
pub fn validate_td(g: &Graph, td: &TreeDecomposition) -> bool {
    td.check(g).is_ok()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_bag() {
        let g = Graph::complete(4);
        let td = TreeDecomposition::trivial(&g);
        assert!(validate_td(&g, &td));
        assert_eq!(td.width(), 3);
    }

    #[test]
    fn path_decomposition_of_a_cycle() {
        let g = Graph::cycle(4);
        let td = TreeDecomposition {
            bags: vec![g.set([0, 1, 3]), g.set([1, 2, 3])],
            edges: vec![(0, 1)],
        };
        assert_eq!(td.check(&g), Ok(()));
        assert_eq!(td.width(), 2);
    }

    #[test]
    fn violations() {
        let g = Graph::cycle(4);
        let missing_edge = TreeDecomposition {
            bags: vec![g.set([0, 1, 2]), g.set([2, 3])],
            edges: vec![(0, 1)],
        };
        assert_eq!(missing_edge.check(&g), Err(TdViolation::UncoveredEdge(0, 3)));
        let broken = TreeDecomposition {
            bags: vec![g.set([0, 1, 3]), g.set([1, 2]), g.set([2, 3])],
            edges: vec![(0, 1), (1, 2)],
        };
        assert_eq!(broken.check(&g), Err(TdViolation::Disconnected(3)));
        let forest = TreeDecomposition {
            bags: vec![g.set([0, 1, 3]), g.set([1, 2, 3])],
            edges: vec![],
        };
        assert_eq!(forest.check(&g), Err(TdViolation::NotATree));
        let uncovered = TreeDecomposition {
            bags: vec![g.set([0, 1])],
            edges: vec![],
        };
        assert_eq!(uncovered.check(&g), Err(TdViolation::UncoveredVertex(2)));
        let bad_index = TreeDecomposition {
            bags: vec![g.vertex_set()],
            edges: vec![(0, 3)],
        };
        assert_eq!(bad_index.check(&g), Err(TdViolation::OutOfRange));
    }
}
