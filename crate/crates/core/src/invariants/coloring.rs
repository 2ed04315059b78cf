//! Chromatic number: greedy upper bound plus exact k-colorability search.

use crate::bitset::BitSet;
use crate::graph::UnitGraph;

use super::clique::max_clique;

pub const DEFAULT_CHI_EXACT_CAP: usize = 256;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Chromatic {
    Exact {
        chi: usize,
        coloring: Vec<usize>,
    },
    /// Exact search was not run or ran out of budget.
    Bounds {
        lower: usize,
        upper: usize,
        coloring: Vec<usize>,
    },
}

impl Chromatic {
    pub fn exact(&self) -> Option<usize> {
        match self {
            Chromatic::Exact { chi, .. } => Some(*chi),
            Chromatic::Bounds { .. } => None,
        }
    }

    pub fn lower(&self) -> usize {
        match self {
            Chromatic::Exact { chi, .. } => *chi,
            Chromatic::Bounds { lower, .. } => *lower,
        }
    }

    pub fn upper(&self) -> usize {
        match self {
            Chromatic::Exact { chi, .. } => *chi,
            Chromatic::Bounds { upper, .. } => *upper,
        }
    }

    pub fn coloring(&self) -> &[usize] {
        match self {
            Chromatic::Exact { coloring, .. } | Chromatic::Bounds { coloring, .. } => coloring,
        }
    }
}

/// Largest-degree-first greedy coloring (least index on ties). Colors are
/// numbered from 0.
pub fn greedy_coloring(g: &UnitGraph) -> Vec<usize> {
    let n = g.vertex_count();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let mut color = vec![usize::MAX; n];
    let mut used = Vec::new();
    for v in order {
        used.clear();
        used.extend(g.neighbors(v).iter().map(|w| color[w]).filter(|&c| c != usize::MAX));
        used.sort_unstable();
        used.dedup();
        color[v] = used
            .iter()
            .enumerate()
            .find(|&(i, &c)| i != c)
            .map_or(used.len(), |(i, _)| i);
    }
    color
}

pub fn color_count(coloring: &[usize]) -> usize {
    coloring.iter().max().map_or(0, |&c| c + 1)
}

pub fn is_proper_coloring(g: &UnitGraph, coloring: &[usize]) -> bool {
    coloring.len() == g.vertex_count() && g.edges().all(|(a, b)| coloring[a] != coloring[b])
}

/// DSATUR heuristic: color the uncolored vertex with the most distinct
/// neighbor colors (then highest degree, then least index) with its least
/// free color.
pub fn dsatur_coloring(g: &UnitGraph) -> Vec<usize> {
    let n = g.vertex_count();
    let mut color = vec![NONE; n];
    let mut seen: Vec<BitSet> = vec![BitSet::new(n); n];
    let mut saturation = vec![0usize; n];
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| color[v] == NONE)
            .max_by_key(|&v| (saturation[v], g.degree(v), std::cmp::Reverse(v)))
            .expect("an uncolored vertex remains");
        let c = (0..n).find(|&c| !seen[v].contains(c)).unwrap_or(0);
        color[v] = c;
        for w in g.neighbors(v) {
            if seen[w].insert(c) {
                saturation[w] += 1;
            }
        }
    }
    color
}

/// Exact chromatic number when `g` has at most `exact_cap` vertices and the
/// node budget suffices; otherwise bounds from a clique and the best
/// heuristic coloring.
///
/// The exact search starts from the better of the largest-first and DSATUR
/// colorings and asks for one color fewer each round, with a maximum clique
/// precolored to break color symmetry.
pub fn chromatic_number(g: &UnitGraph, exact_cap: usize, budget: Option<u64>) -> Chromatic {
    let n = g.vertex_count();
    let mut best = greedy_coloring(g);
    let clique = match max_clique(g, budget) {
        Ok(c) => c,
        Err(e) => e.best,
    };
    let lower = clique.len();
    if n == 0 || lower == color_count(&best) {
        return Chromatic::Exact {
            chi: lower,
            coloring: best,
        };
    }
    if n > exact_cap {
        return Chromatic::Bounds {
            lower,
            upper: color_count(&best),
            coloring: best,
        };
    }
    let heuristic = dsatur_coloring(g);
    if color_count(&heuristic) < color_count(&best) {
        best = heuristic;
    }
    let mut search = Dsatur::new(g, budget);
    while color_count(&best) > lower {
        let k = color_count(&best) - 1;
        match search.colorable(k, &clique) {
            Some(Some(coloring)) => best = coloring,
            Some(None) => break,
            None => {
                return Chromatic::Bounds {
                    lower,
                    upper: color_count(&best),
                    coloring: best,
                }
            }
        }
    }
    Chromatic::Exact {
        chi: color_count(&best),
        coloring: best,
    }
}

struct Dsatur<'a> {
    g: &'a UnitGraph,
    n: usize,
    k: usize,
    color: Vec<usize>,
    /// `conflicts[v * k + c]`: colored neighbors of `v` with color `c`.
    conflicts: Vec<u32>,
    saturation: Vec<usize>,
    degree: Vec<usize>,
    nodes: u64,
    budget: Option<u64>,
}

const NONE: usize = usize::MAX;

impl<'a> Dsatur<'a> {
    fn new(g: &'a UnitGraph, budget: Option<u64>) -> Self {
        Dsatur {
            g,
            n: g.vertex_count(),
            k: 0,
            color: Vec::new(),
            conflicts: Vec::new(),
            saturation: Vec::new(),
            degree: (0..g.vertex_count()).map(|v| g.degree(v)).collect(),
            nodes: 0,
            budget,
        }
    }

    /// `Some(Some(coloring))` if k-colorable, `Some(None)` if not, `None`
    /// when the budget ran out. The budget is shared across calls. The
    /// clique `fixed` gets colors `0..fixed.len()`.
    fn colorable(&mut self, k: usize, fixed: &[usize]) -> Option<Option<Vec<usize>>> {
        if fixed.len() > k {
            return Some(None);
        }
        self.k = k;
        self.color = vec![NONE; self.n];
        self.conflicts = vec![0; self.n * k];
        self.saturation = vec![0; self.n];
        for (c, &v) in fixed.iter().enumerate() {
            self.assign(v, c);
        }
        match self.search(fixed.len()) {
            Ok(true) => Some(Some(self.color.clone())),
            Ok(false) => Some(None),
            Err(()) => None,
        }
    }

    fn pick(&self) -> Option<usize> {
        (0..self.n)
            .filter(|&v| self.color[v] == NONE)
            .max_by_key(|&v| (self.saturation[v], self.degree[v], std::cmp::Reverse(v)))
    }

    fn assign(&mut self, v: usize, c: usize) {
        self.color[v] = c;
        for w in self.g.neighbors(v) {
            let slot = &mut self.conflicts[w * self.k + c];
            if *slot == 0 {
                self.saturation[w] += 1;
            }
            *slot += 1;
        }
    }

    fn unassign(&mut self, v: usize, c: usize) {
        self.color[v] = NONE;
        for w in self.g.neighbors(v) {
            let slot = &mut self.conflicts[w * self.k + c];
            *slot -= 1;
            if *slot == 0 {
                self.saturation[w] -= 1;
            }
        }
    }

    fn search(&mut self, used: usize) -> Result<bool, ()> {
        self.nodes += 1;
        if self.budget.is_some_and(|b| self.nodes > b) {
            return Err(());
        }
        let Some(v) = self.pick() else {
            return Ok(true);
        };
        if self.saturation[v] >= self.k {
            return Ok(false);
        }
        // a fresh color is interchangeable with any other unused one
        for c in 0..(used + 1).min(self.k) {
            if self.conflicts[v * self.k + c] != 0 {
                continue;
            }
            self.assign(v, c);
            if self.search(used.max(c + 1))? {
                return Ok(true);
            }
            self.unassign(v, c);
        }
        Ok(false)
    }
}
