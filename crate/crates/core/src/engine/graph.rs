//! Factorization graphs and the catenary degree.
//!
//! Two factorizations of an element are adjacent when they share an atom
//! (nonzero gcd). Betti elements are those whose graph is disconnected.
//! The catenary degree is found by a union-find sweep over edges sorted by
//! distance: the answer is the largest weight the spanning structure is
//! forced to use.

use super::{distance, FactorizationSet};
use crate::Result;

/// Connected components of a factorization graph, each a sorted list of
/// indices into the factorization set, ordered by smallest member.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphPartition {
    pub blocks: Vec<Vec<usize>>,
}

impl GraphPartition {
    pub fn is_connected(&self) -> bool {
        self.blocks.len() <= 1
    }
}

struct DisjointSet {
    parent: Vec<usize>,
    rank: Vec<u8>,
    components: usize,
}

impl DisjointSet {
    fn new(n: usize) -> Self {
        DisjointSet {
            parent: (0..n).collect(),
            rank: vec![0; n],
            components: n,
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        match self.rank[ra].cmp(&self.rank[rb]) {
            std::cmp::Ordering::Less => self.parent[ra] = rb,
            std::cmp::Ordering::Greater => self.parent[rb] = ra,
            std::cmp::Ordering::Equal => {
                self.parent[rb] = ra;
                self.rank[ra] += 1;
            }
        }
        self.components -= 1;
        true
    }
}

/// Components under shared-atom adjacency. Requires a complete set.
pub fn graph_components(set: &FactorizationSet) -> Result<GraphPartition> {
    set.require_complete()?;
    let zs = &set.factorizations;
    let n = zs.len();
    let mut ds = DisjointSet::new(n);
    for i in 0..n {
        for j in i + 1..n {
            if zs[i].iter().zip(&zs[j]).any(|(&a, &b)| a > 0 && b > 0) {
                ds.union(i, j);
            }
        }
    }
    let mut by_root: Vec<Vec<usize>> = vec![Vec::new(); n];
    for i in 0..n {
        let r = ds.find(i);
        by_root[r].push(i);
    }
    let mut blocks: Vec<Vec<usize>> = by_root.into_iter().filter(|b| !b.is_empty()).collect();
    blocks.sort_by_key(|b| b[0]);
    Ok(GraphPartition { blocks })
}

/// Catenary degree of one element from its complete factorization set:
/// the least N such that any two factorizations are joined by a chain with
/// consecutive distances at most N. Elements with at most one
/// factorization have catenary degree 0.
pub fn catenary_degree_of_set(set: &FactorizationSet) -> Result<u64> {
    set.require_complete()?;
    let zs = &set.factorizations;
    let n = zs.len();
    if n <= 1 {
        return Ok(0);
    }
    let mut edges: Vec<(u64, usize, usize)> = Vec::with_capacity(n * (n - 1) / 2);
    for i in 0..n {
        for j in i + 1..n {
            edges.push((distance(&zs[i], &zs[j]), i, j));
        }
    }
    edges.sort_unstable();
    let mut ds = DisjointSet::new(n);
    let mut needed = 0u64;
    for (w, i, j) in edges {
        if ds.union(i, j) {
            needed = w;
            if ds.components == 1 {
                return Ok(needed);
            }
        }
    }
    // A complete set over one element is always connected at some weight,
    // so falling through means n == 1, handled above.
    Ok(needed)
}
