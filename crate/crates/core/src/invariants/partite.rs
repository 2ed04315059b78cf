//! Bipartiteness with certificates, and complete multipartite recognition.

use std::collections::VecDeque;

use crate::bitset::BitSet;
use crate::graph::UnitGraph;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Bipartiteness {
    /// A proper 2-partition; the first part holds every search root.
    Bipartite { parts: [Vec<usize>; 2] },
    /// Vertices of an odd cycle in traversal order.
    OddCycle(Vec<usize>),
}

impl Bipartiteness {
    pub fn is_bipartite(&self) -> bool {
        matches!(self, Bipartiteness::Bipartite { .. })
    }
}

/// Breadth-first 2-coloring of every component, roots taken in index order.
pub fn is_bipartite(g: &UnitGraph) -> Bipartiteness {
    let n = g.vertex_count();
    let mut side = vec![u8::MAX; n];
    let mut parent = vec![usize::MAX; n];
    let mut depth = vec![0usize; n];
    for root in 0..n {
        if side[root] != u8::MAX {
            continue;
        }
        side[root] = 0;
        let mut queue = VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            for w in g.neighbors(v) {
                if side[w] == u8::MAX {
                    side[w] = 1 - side[v];
                    parent[w] = v;
                    depth[w] = depth[v] + 1;
                    queue.push_back(w);
                } else if side[w] == side[v] {
                    return Bipartiteness::OddCycle(odd_cycle(&parent, &depth, v, w));
                }
            }
        }
    }
    let part = |s| (0..n).filter(|&v| side[v] == s).collect();
    Bipartiteness::Bipartite {
        parts: [part(0), part(1)],
    }
}

/// Closes the tree paths from `a` and `b` at their common ancestor.
fn odd_cycle(parent: &[usize], depth: &[usize], mut a: usize, mut b: usize) -> Vec<usize> {
    let mut left = vec![a];
    let mut right = vec![b];
    while depth[a] > depth[b] {
        a = parent[a];
        left.push(a);
    }
    while depth[b] > depth[a] {
        b = parent[b];
        right.push(b);
    }
    while a != b {
        a = parent[a];
        b = parent[b];
        left.push(a);
        right.push(b);
    }
    right.pop();
    right.reverse();
    left.extend(right);
    left
}

/// True iff `cycle` is a closed walk of odd length through distinct adjacent vertices.
pub fn is_odd_cycle(g: &UnitGraph, cycle: &[usize]) -> bool {
    let k = cycle.len();
    let mut seen = cycle.to_vec();
    seen.sort_unstable();
    seen.dedup();
    k >= 3
        && k % 2 == 1
        && seen.len() == k
        && (0..k).all(|i| g.adjacent(cycle[i], cycle[(i + 1) % k]))
}

pub fn is_bipartition(g: &UnitGraph, parts: &[Vec<usize>; 2]) -> bool {
    let n = g.vertex_count();
    let mut seen = BitSet::new(n);
    for p in parts {
        for &v in p {
            if v >= n || !seen.insert(v) {
                return false;
            }
        }
    }
    seen.count() == n && parts.iter().all(|p| g.is_coclique(p))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Multipartite {
    /// Parts in ascending order of least member; `r` is `parts.len()`.
    Complete { parts: Vec<Vec<usize>> },
    /// `a ~ b` and `b ~ c` (equal or non-adjacent) while `a` and `c` are adjacent.
    NotComplete { triple: [usize; 3] },
}

impl Multipartite {
    pub fn is_complete(&self) -> bool {
        matches!(self, Multipartite::Complete { .. })
    }

    pub fn parts(&self) -> Option<&[Vec<usize>]> {
        match self {
            Multipartite::Complete { parts } => Some(parts),
            Multipartite::NotComplete { .. } => None,
        }
    }
}

/// `g` is complete multipartite iff "equal or non-adjacent" is transitive;
/// the parts are its classes.
pub fn complete_multipartite(g: &UnitGraph) -> Multipartite {
    let n = g.vertex_count();
    let classes: Vec<BitSet> = (0..n)
        .map(|v| {
            let mut c = g.neighbors(v).complement();
            c.insert(v);
            c
        })
        .collect();
    let mut assigned = BitSet::new(n);
    let mut parts = Vec::new();
    for v in 0..n {
        for u in classes[v].iter() {
            if classes[u] == classes[v] {
                continue;
            }
            let mut diff = classes[u].clone();
            diff.difference_with(&classes[v]);
            if let Some(w) = diff.first() {
                return Multipartite::NotComplete { triple: [v, u, w] };
            }
            let mut diff = classes[v].clone();
            diff.difference_with(&classes[u]);
            let w = diff.first().expect("classes differ");
            return Multipartite::NotComplete { triple: [u, v, w] };
        }
        if !assigned.contains(v) {
            assigned.union_with(&classes[v]);
            parts.push(classes[v].to_vec());
        }
    }
    Multipartite::Complete { parts }
}

/// Checks the defining property of a complete multipartite partition.
pub fn is_complete_multipartition(g: &UnitGraph, parts: &[Vec<usize>]) -> bool {
    let n = g.vertex_count();
    let mut which = vec![usize::MAX; n];
    for (i, p) in parts.iter().enumerate() {
        for &v in p {
            if v >= n || which[v] != usize::MAX {
                return false;
            }
            which[v] = i;
        }
    }
    which.iter().all(|&i| i != usize::MAX)
        && (0..n).all(|a| (a + 1..n).all(|b| g.adjacent(a, b) == (which[a] != which[b])))
}
