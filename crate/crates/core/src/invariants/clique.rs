//! Exact maximum clique by bitset branch and bound.
//!
//! Vertices are renumbered by a degeneracy ordering so that bit order is
//! search order. Each node greedily colors the candidate set; a vertex whose
//! color class number cannot lift the current clique above the incumbent is
//! pruned together with every vertex colored before it.

use crate::bitset::BitSet;
use crate::graph::UnitGraph;

use super::{BudgetExceeded, InvariantError};

/// Largest vertex count accepted by [`clique_number_oracle`].
pub const ORACLE_MAX_VERTICES: usize = 20;

struct Search {
    adj: Vec<BitSet>,
    best: Vec<usize>,
    current: Vec<usize>,
    nodes: u64,
    budget: Option<u64>,
}

/// Maximum clique of `g`, sorted ascending. `budget` bounds the number of
/// search nodes; exhausting it returns the best clique found so far.
pub fn max_clique(g: &UnitGraph, budget: Option<u64>) -> Result<Vec<usize>, BudgetExceeded> {
    let n = g.vertex_count();
    if n == 0 {
        return Ok(Vec::new());
    }
    let order = degeneracy_order(g);
    let mut position = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        position[v] = i;
    }
    let adj: Vec<BitSet> = order
        .iter()
        .map(|&v| BitSet::from_indices(n, g.neighbors(v).iter().map(|w| position[w])))
        .collect();
    let mut search = Search {
        adj,
        best: vec![position[0]],
        current: Vec::new(),
        nodes: 0,
        budget,
    };
    let outcome = search.expand(BitSet::full(n));
    let mut clique: Vec<usize> = search.best.iter().map(|&i| order[i]).collect();
    clique.sort_unstable();
    match outcome {
        Ok(()) => Ok(clique),
        Err(()) => Err(BudgetExceeded {
            nodes: search.nodes,
            best: clique,
        }),
    }
}

impl Search {
    fn expand(&mut self, mut candidates: BitSet) -> Result<(), ()> {
        self.nodes += 1;
        if self.budget.is_some_and(|b| self.nodes > b) {
            return Err(());
        }
        let (verts, colors) = self.color_sort(&candidates);
        for i in (0..verts.len()).rev() {
            if self.current.len() + colors[i] <= self.best.len() {
                return Ok(());
            }
            let v = verts[i];
            self.current.push(v);
            let next = candidates.intersection(&self.adj[v]);
            if next.is_empty() {
                if self.current.len() > self.best.len() {
                    self.best = self.current.clone();
                }
            } else {
                self.expand(next)?;
            }
            self.current.pop();
            candidates.remove(v);
        }
        Ok(())
    }

    /// Sequential greedy coloring; returns vertices in nondecreasing color
    /// order with their (1-based) color numbers.
    fn color_sort(&self, candidates: &BitSet) -> (Vec<usize>, Vec<usize>) {
        let mut uncolored = candidates.clone();
        let mut verts = Vec::with_capacity(candidates.count());
        let mut colors = Vec::with_capacity(verts.capacity());
        let mut k = 0;
        while !uncolored.is_empty() {
            k += 1;
            let mut open = uncolored.clone();
            while let Some(v) = open.first() {
                open.remove(v);
                open.difference_with(&self.adj[v]);
                uncolored.remove(v);
                verts.push(v);
                colors.push(k);
            }
        }
        (verts, colors)
    }
}

/// Vertices ordered so that repeatedly removing a minimum-degree vertex
/// (least index on ties) visits them in reverse.
pub fn degeneracy_order(g: &UnitGraph) -> Vec<usize> {
    let n = g.vertex_count();
    let mut degree: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut removed = vec![false; n];
    let mut removal = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !removed[v])
            .min_by_key(|&v| (degree[v], v))
            .unwrap();
        removed[v] = true;
        removal.push(v);
        for w in g.neighbors(v) {
            if !removed[w] {
                degree[w] -= 1;
            }
        }
    }
    removal.reverse();
    removal
}

/// Clique number by checking every vertex subset. Independent of the
/// branch-and-bound path; intended for cross-validation.
pub fn clique_number_oracle(g: &UnitGraph) -> Result<usize, InvariantError> {
    let n = g.vertex_count();
    if n > ORACLE_MAX_VERTICES {
        return Err(InvariantError::TooManyVertices {
            vertices: n,
            limit: ORACLE_MAX_VERTICES,
        });
    }
    let masks: Vec<u32> = (0..n)
        .map(|v| (0..n).filter(|&w| g.adjacent(v, w)).fold(0, |m, w| m | 1 << w))
        .collect();
    // is_clique[s] for every subset s, built from s minus its lowest vertex
    let mut is_clique = vec![false; 1 << n];
    is_clique[0] = true;
    let mut best = 0;
    for s in 1usize..1 << n {
        let low = s.trailing_zeros() as usize;
        let rest = s & (s - 1);
        if is_clique[rest] && (rest as u32) & !masks[low] == 0 {
            is_clique[s] = true;
            best = best.max(s.count_ones() as usize);
        }
    }
    Ok(best)
}
