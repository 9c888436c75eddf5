//! Branch-and-bound maximum clique over bitset adjacency.
//!
//! Tomita-style search: at every node the candidate set is greedily colored
//! in the static vertex order and candidates are expanded in descending
//! color, pruning when clique size plus color cannot beat the incumbent.
//! Callers order vertices so that same-block vertices (which are pairwise
//! non-adjacent) sit together; greedy coloring then reuses one color per
//! block and the bound collapses early.

use alloc::vec;
use alloc::vec::Vec;

pub struct CliqueGraph {
    n: usize,
    words: usize,
    adj: Vec<u64>,
}

impl CliqueGraph {
    pub fn new(n: usize) -> Self {
        let words = n.div_ceil(64);
        CliqueGraph { n, words, adj: vec![0; n * words] }
    }

    pub fn add_edge(&mut self, a: usize, b: usize) {
        debug_assert!(a != b);
        self.adj[a * self.words + b / 64] |= 1 << (b % 64);
        self.adj[b * self.words + a / 64] |= 1 << (a % 64);
    }

    fn neighbors(&self, v: usize) -> &[u64] {
        &self.adj[v * self.words..(v + 1) * self.words]
    }

    /// A maximum clique, deterministic for a fixed graph.
    pub fn max_clique(&self) -> Vec<usize> {
        if self.n == 0 {
            return Vec::new();
        }
        let mut all = vec![u64::MAX; self.words];
        let spare = self.words * 64 - self.n;
        if spare > 0 {
            all[self.words - 1] = u64::MAX >> spare;
        }
        let mut best = Vec::new();
        let mut current = Vec::new();
        self.expand(&all, &mut current, &mut best);
        best.sort_unstable();
        best
    }

    fn expand(&self, candidates: &[u64], current: &mut Vec<usize>, best: &mut Vec<usize>) {
        // greedy coloring in static order; color classes are independent sets
        let mut order: Vec<(usize, usize)> = Vec::new(); // (vertex, color)
        let mut classes: Vec<Vec<u64>> = Vec::new(); // occupied neighborhoods per color
        let scratch = candidates.to_vec();
        for (w, &slot) in scratch.iter().enumerate() {
            let mut word = slot;
            while word != 0 {
                let v = w * 64 + word.trailing_zeros() as usize;
                word &= word - 1;
                let nv = self.neighbors(v);
                let color = classes
                    .iter()
                    .position(|cls| cls.iter().zip(nv).all(|(c, n)| c & n == 0))
                    .unwrap_or(classes.len());
                if color == classes.len() {
                    classes.push(vec![0; self.words]);
                }
                classes[color][v / 64] |= 1 << (v % 64);
                order.push((v, color + 1));
            }
        }
        // expand in descending color; color upper-bounds the clique size
        // reachable inside the remaining candidate prefix
        order.sort_by_key(|&(_, color)| color);
        let mut remaining = candidates.to_vec();
        for &(v, color) in order.iter().rev() {
            if current.len() + color <= best.len() {
                return;
            }
            current.push(v);
            let nv = self.neighbors(v);
            let next: Vec<u64> = remaining.iter().zip(nv).map(|(r, n)| r & n).collect();
            if next.iter().all(|&w| w == 0) {
                if current.len() > best.len() {
                    *best = current.clone();
                }
            } else {
                self.expand(&next, current, best);
            }
            current.pop();
            remaining[v / 64] &= !(1 << (v % 64));
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_and_single() {
        assert!(CliqueGraph::new(0).max_clique().is_empty());
        assert_eq!(CliqueGraph::new(1).max_clique(), vec![0]);
        // no edges: any single vertex, deterministically the search result
        assert_eq!(CliqueGraph::new(5).max_clique().len(), 1);
    }

    #[test]
    fn triangle_plus_pendant() {
        let mut g = CliqueGraph::new(4);
        g.add_edge(0, 1);
        g.add_edge(1, 2);
        g.add_edge(0, 2);
        g.add_edge(2, 3);
        assert_eq!(g.max_clique(), vec![0, 1, 2]);
    }

    #[test]
    fn complete_graph() {
        let n = 20;
        let mut g = CliqueGraph::new(n);
        for a in 0..n {
            for b in a + 1..n {
                g.add_edge(a, b);
            }
        }
        assert_eq!(g.max_clique().len(), n);
    }

    #[test]
    fn bipartite_max_is_two() {
        let mut g = CliqueGraph::new(8);
        for a in 0..4 {
            for b in 4..8 {
                g.add_edge(a, b);
            }
        }
        assert_eq!(g.max_clique().len(), 2);
    }

    #[test]
    fn crown_of_cliques() {
        // two disjoint 4-cliques joined by one edge
        let mut g = CliqueGraph::new(8);
        for base in [0, 4] {
            for a in 0..4 {
                for b in a + 1..4 {
                    g.add_edge(base + a, base + b);
                }
            }
        }
        g.add_edge(3, 4);
        assert_eq!(g.max_clique().len(), 4);
    }
}
