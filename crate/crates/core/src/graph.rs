//! Unit graphs stored as dense adjacency bit rows.

use std::fmt::Write;

use crate::bitset::BitSet;
use crate::ring::FiniteRing;

/// A simple undirected graph on `0..vertex_count`.
///
/// For a ring `R` the vertices are the elements of `R`, and distinct `x`, `y`
/// are adjacent iff `x + y` is a unit. A vertex with `2x` a unit gets no loop.
#[derive(Clone, PartialEq, Eq)]
pub struct UnitGraph {
    rows: Vec<BitSet>,
    labels: Vec<String>,
}

impl std::fmt::Debug for UnitGraph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "UnitGraph({} vertices, {} edges)", self.vertex_count(), self.edge_count())
    }
}

pub fn build_unit_graph(r: &FiniteRing) -> UnitGraph {
    let n = r.order();
    let units = r.units().to_vec();
    let rows = (0..n)
        .map(|x| {
            let nx = r.neg(x);
            let mut row = BitSet::from_indices(n, units.iter().map(|&u| r.add(u, nx)));
            row.remove(x);
            row
        })
        .collect();
    UnitGraph {
        rows,
        labels: (0..n).map(|x| r.label(x)).collect(),
    }
}

impl UnitGraph {
    /// Graph from an explicit edge list; labels are the vertex indices.
    pub fn from_edges<I: IntoIterator<Item = (usize, usize)>>(n: usize, edges: I) -> UnitGraph {
        let mut g = UnitGraph {
            rows: vec![BitSet::new(n); n],
            labels: (0..n).map(|v| v.to_string()).collect(),
        };
        for (a, b) in edges {
            g.set_edge(a, b, true);
        }
        g
    }

    pub fn complete(n: usize) -> UnitGraph {
        UnitGraph::from_edges(n, (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))))
    }

    pub fn vertex_count(&self) -> usize {
        self.rows.len()
    }

    pub fn edge_count(&self) -> usize {
        self.rows.iter().map(BitSet::count).sum::<usize>() / 2
    }

    #[inline]
    pub fn adjacent(&self, a: usize, b: usize) -> bool {
        self.rows[a].contains(b)
    }

    pub fn neighbors(&self, x: usize) -> &BitSet {
        &self.rows[x]
    }

    pub fn degree(&self, x: usize) -> usize {
        self.rows[x].count()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.vertex_count()).map(|x| self.degree(x)).max().unwrap_or(0)
    }

    pub fn label(&self, x: usize) -> &str {
        &self.labels[x]
    }

    /// Adds or removes an edge. Loops are ignored.
    pub fn set_edge(&mut self, a: usize, b: usize, present: bool) {
        if a == b {
            return;
        }
        if present {
            self.rows[a].insert(b);
            self.rows[b].insert(a);
        } else {
            self.rows[a].remove(b);
            self.rows[b].remove(a);
        }
    }

    pub fn complement(&self) -> UnitGraph {
        let rows = self
            .rows
            .iter()
            .enumerate()
            .map(|(x, row)| {
                let mut c = row.complement();
                c.remove(x);
                c
            })
            .collect();
        UnitGraph {
            rows,
            labels: self.labels.clone(),
        }
    }

    /// Edges `(a, b)` with `a < b` in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(a, row)| row.iter().filter(move |&b| b > a).map(move |b| (a, b)))
    }

    pub fn is_clique(&self, vs: &[usize]) -> bool {
        vs.iter()
            .enumerate()
            .all(|(i, &a)| vs[i + 1..].iter().all(|&b| a != b && self.adjacent(a, b)))
    }

    pub fn is_coclique(&self, vs: &[usize]) -> bool {
        vs.iter()
            .enumerate()
            .all(|(i, &a)| vs[i + 1..].iter().all(|&b| a != b && !self.adjacent(a, b)))
    }

    /// One `a b` line per edge, no trailing newline.
    pub fn export_edgelist(&self) -> String {
        self.edges()
            .map(|(a, b)| format!("{a} {b}"))
            .collect::<Vec<_>>()
            .join("\n")
    }

    /// Undirected DOT with element labels.
    pub fn export_dot(&self) -> String {
        let mut out = String::from("graph unit_graph {\n");
        for (v, label) in self.labels.iter().enumerate() {
            let escaped = label.replace('\\', "\\\\").replace('"', "\\\"");
            writeln!(out, "  {v} [label=\"{escaped}\"];").unwrap();
        }
        for (a, b) in self.edges() {
            writeln!(out, "  {a} -- {b};").unwrap();
        }
        out.push('}');
        out
    }
}
