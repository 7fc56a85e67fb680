//! PACE 2017 `.gr` / `.td` text formats and the rotation sidecar.
//!
//! Vertex ids are 1-based in files and 0-based in memory.
//!
//! ```text
//! c a comment             s td <bags> <width+1> <n>      1: 2 3 4
//! p tw <n> <m>            b 1 <v> <v> ...                2: 1 4 3
//! <u> <v>                 <bag> <bag>                    ...
//! ```

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::planar::PlaneGraph;
use crate::set::VertexSet;
use crate::td::TreeDecomposition;

/// Non-comment, non-blank lines with their 1-based line numbers.
fn lines(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, l)| {
        let t: Vec<&str> = l.split_whitespace().collect();
        match t.first() {
            None => None,
            Some(&"c") => None,
            Some(_) => Some((i + 1, t)),
        }
    })
}

fn number(line: usize, tok: &str) -> Result<usize> {
    tok.parse()
        .map_err(|_| Error::parse(line, format!("expected a number, found {tok:?}")))
}

fn vertex(line: usize, tok: &str, n: usize) -> Result<usize> {
    let v = number(line, tok)?;
    if v == 0 || v > n {
        return Err(Error::parse(line, format!("vertex {v} outside 1..={n}")));
    }
    Ok(v - 1)
}

pub fn read_gr(text: &str) -> Result<Graph> {
    let mut it = lines(text);
    let (hl, header) = it.next().ok_or_else(|| Error::parse(1, "missing `p tw` header"))?;
    if header.len() != 4 || header[0] != "p" || header[1] != "tw" {
        return Err(Error::parse(hl, "header must be `p tw <n> <m>`"));
    }
    let n = number(hl, header[2])?;
    let m = number(hl, header[3])?;
    let mut edges = Vec::with_capacity(m);
    for (line, t) in it {
        if t.len() != 2 {
            return Err(Error::parse(line, "edge line must be `<u> <v>`"));
        }
        let (u, v) = (vertex(line, t[0], n)?, vertex(line, t[1], n)?);
        if u == v {
            return Err(Error::parse(line, "self-loop"));
        }
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(Error::parse(hl, format!("header announces {m} edges, found {}", edges.len())));
    }
    Graph::from_edges(n, edges)
}

pub fn write_gr(g: &Graph) -> String {
    let mut s = format!("p tw {} {}\n", g.n(), g.m());
    for (u, v) in g.edges() {
        let _ = writeln!(s, "{} {}", u + 1, v + 1);
    }
    s
}

/// Parses a decomposition; returns it with the vertex count from its header.
pub fn read_td(text: &str) -> Result<(TreeDecomposition, usize)> {
    let mut it = lines(text);
    let (hl, header) = it.next().ok_or_else(|| Error::parse(1, "missing `s td` header"))?;
    if header.len() != 5 || header[0] != "s" || header[1] != "td" {
        return Err(Error::parse(hl, "header must be `s td <bags> <width+1> <n>`"));
    }
    let k = number(hl, header[2])?;
    let declared = number(hl, header[3])?;
    let n = number(hl, header[4])?;
    let mut bags: Vec<Option<VertexSet>> = vec![None; k];
    let mut edges = Vec::new();
    for (line, t) in it {
        if t[0] == "b" {
            if t.len() < 2 {
                return Err(Error::parse(line, "bag line must be `b <i> <v>...`"));
            }
            let i = number(line, t[1])?;
            if i == 0 || i > k {
                return Err(Error::parse(line, format!("bag index {i} outside 1..={k}")));
            }
            if bags[i - 1].is_some() {
                return Err(Error::parse(line, format!("bag {i} defined twice")));
            }
            let mut bag = VertexSet::new(n);
            for tok in &t[2..] {
                bag.insert(vertex(line, tok, n)?);
            }
            bags[i - 1] = Some(bag);
        } else {
            if t.len() != 2 {
                return Err(Error::parse(line, "tree edge line must be `<i> <j>`"));
            }
            let a = number(line, t[0])?;
            let b = number(line, t[1])?;
            if a == 0 || a > k || b == 0 || b > k {
                return Err(Error::parse(line, format!("bag index outside 1..={k}")));
            }
            edges.push((a - 1, b - 1));
        }
    }
    let bags: Vec<VertexSet> = bags
        .into_iter()
        .enumerate()
        .map(|(i, b)| b.ok_or_else(|| Error::parse(hl, format!("bag {} missing", i + 1))))
        .collect::<Result<_>>()?;
    let td = TreeDecomposition { bags, edges };
    let actual = td.bags.iter().map(|b| b.len()).max().unwrap_or(0);
    if actual > declared {
        return Err(Error::parse(hl, format!("header declares bags of size {declared}, found {actual}")));
    }
    Ok((td, n))
}

pub fn write_td(td: &TreeDecomposition, n: usize) -> String {
    let size = td.bags.iter().map(|b| b.len()).max().unwrap_or(0);
    let mut s = format!("s td {} {} {}\n", td.bags.len(), size, n);
    for (i, b) in td.bags.iter().enumerate() {
        let _ = write!(s, "b {}", i + 1);
        for v in b.iter() {
            let _ = write!(s, " {}", v + 1);
        }
        s.push('\n');
    }
    for &(a, b) in &td.edges {
        let _ = writeln!(s, "{} {}", a + 1, b + 1);
    }
    s
}

/// Reads a rotation system for `g`: one line `v: u1 u2 ... uk` per vertex,
/// listing its neighbors in clockwise order.
pub fn read_rotation(g: &Graph, text: &str) -> Result<PlaneGraph> {
    let n = g.n();
    let mut rotation: Vec<Option<Vec<usize>>> = vec![None; n];
    for (line, t) in lines(text) {
        let head = t[0]
            .strip_suffix(':')
            .ok_or_else(|| Error::parse(line, "line must start with `<v>:`"))?;
        let v = vertex(line, head, n)?;
        if rotation[v].is_some() {
            return Err(Error::parse(line, format!("vertex {} listed twice", v + 1)));
        }
        let order: Vec<usize> = t[1..].iter().map(|tok| vertex(line, tok, n)).collect::<Result<_>>()?;
        let mut sorted = order.clone();
        sorted.sort_unstable();
        if sorted != g.neighbors(v) {
            return Err(Error::parse(
                line,
                format!("rotation of {} is not a permutation of its neighbors", v + 1),
            ));
        }
        rotation[v] = Some(order);
    }
    let rotation = rotation
        .into_iter()
        .enumerate()
        .map(|(v, r)| r.ok_or_else(|| Error::parse(0, format!("no rotation for vertex {}", v + 1))))
        .collect::<Result<Vec<_>>>()?;
    PlaneGraph::new(g.clone(), rotation)
}

pub fn write_rotation(pg: &PlaneGraph) -> String {
    let mut s = String::new();
    for v in 0..pg.graph().n() {
        let _ = write!(s, "{}:", v + 1);
        for &u in pg.rotation(v) {
            let _ = write!(s, " {}", u + 1);
        }
        s.push('\n');
    }
    s
}
