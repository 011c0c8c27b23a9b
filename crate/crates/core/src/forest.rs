//! Prefix-sum forests: Fenwick trees, Sierpinski trees and greedy pruning.
//!
//! Edges point from parent to child. Node `i` of a forest stores the partial
//! sum `q_i = f_i + xor_{c in children(i)} q_c`, which makes the encoding
//! matrix the completion `G = R + I` of the reachability matrix `R`.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use num_rational::Ratio;

use crate::error::{Error, Result};
use crate::gf2::{BitMatrix, BitVector};

/// A directed forest on nodes `0..n` with edges parent -> child.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Forest {
    n: usize,
    parent: Vec<Option<usize>>,
    children: Vec<Vec<usize>>,
}

impl Forest {
    pub fn empty(n: usize) -> Self {
        Self {
            n,
            parent: vec![None; n],
            children: vec![Vec::new(); n],
        }
    }

    /// Builds a forest, rejecting out-of-range endpoints, nodes with two
    /// parents, self-loops and cycles. Duplicate edges are collapsed.
    pub fn new<I: IntoIterator<Item = (usize, usize)>>(n: usize, edges: I) -> Result<Self> {
        let edges: BTreeSet<(usize, usize)> = edges.into_iter().collect();
        let mut forest = Self::empty(n);
        for (p, c) in edges {
            if p >= n || c >= n {
                return Err(Error::InvalidForest(format!(
                    "edge {p}->{c} has an endpoint outside 0..{n}"
                )));
            }
            if p == c {
                return Err(Error::InvalidForest(format!("self-loop on node {p}")));
            }
            if let Some(old) = forest.parent[c] {
                return Err(Error::InvalidForest(format!(
                    "node {c} has two parents ({old} and {p})"
                )));
            }
            forest.parent[c] = Some(p);
            forest.children[p].push(c);
        }
        // With at most one parent per node, a node lies on a cycle exactly
        // when it cannot be reached from a root.
        if forest.post_order().len() != n {
            return Err(Error::InvalidForest("edge set contains a cycle".into()));
        }
        Ok(forest)
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn parent(&self, i: usize) -> Option<usize> {
        self.parent[i]
    }

    pub fn children(&self, i: usize) -> &[usize] {
        &self.children[i]
    }

    pub fn roots(&self) -> Vec<usize> {
        (0..self.n).filter(|&i| self.parent[i].is_none()).collect()
    }

    pub fn edge_count(&self) -> usize {
        self.parent.iter().filter(|p| p.is_some()).count()
    }

    /// All edges in ascending `(parent, child)` order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut edges: Vec<_> = self
            .children
            .iter()
            .enumerate()
            .flat_map(|(p, cs)| cs.iter().map(move |&c| (p, c)))
            .collect();
        edges.sort_unstable();
        edges
    }

    pub fn contains_edge(&self, parent: usize, child: usize) -> bool {
        child < self.n && self.parent[child] == Some(parent)
    }

    pub fn without_edge(&self, parent: usize, child: usize) -> Forest {
        let mut out = self.clone();
        if out.contains_edge(parent, child) {
            out.parent[child] = None;
            out.children[parent].retain(|&c| c != child);
        }
        out
    }

    /// Proper ancestors of `i`, nearest first.
    pub fn ancestors(&self, i: usize) -> Vec<usize> {
        std::iter::successors(self.parent[i], |&p| self.parent[p]).collect()
    }

    /// Drops every node with index `>= keep` together with its incident
    /// edges. Surviving children of dropped nodes become roots.
    pub fn truncate(&self, keep: usize) -> Forest {
        let kept = self.edges().into_iter().filter(|&(p, c)| p < keep && c < keep);
        Forest::new(keep.min(self.n), kept).expect("sub-forest of a forest is a forest")
    }

    /// Nodes ordered so that every child precedes its parent.
    fn post_order(&self) -> Vec<usize> {
        let mut order = Vec::with_capacity(self.n);
        let mut stack: Vec<(usize, bool)> = self.roots().into_iter().rev().map(|r| (r, false)).collect();
        while let Some((node, expanded)) = stack.pop() {
            if expanded {
                order.push(node);
            } else {
                stack.push((node, true));
                stack.extend(self.children[node].iter().rev().map(|&c| (c, false)));
            }
        }
        order
    }

    /// `R[i][j] = 1` iff `j != i` is a descendant of `i`.
    pub fn transitive_closure(&self) -> BitMatrix {
        let mut rows = vec![BitVector::zeros(self.n); self.n];
        for node in self.post_order() {
            let mut row = BitVector::zeros(self.n);
            for &c in &self.children[node] {
                row.or_assign(&rows[c]);
                row.set(c, true);
            }
            rows[node] = row;
        }
        BitMatrix::from_rows(rows).unwrap_or_else(|_| BitMatrix::zeros(0, 0))
    }

    /// `G = R + I`.
    pub fn completion_matrix(&self) -> BitMatrix {
        let mut g = self.transitive_closure();
        for i in 0..self.n {
            g.set(i, i, true);
        }
        g
    }

    /// Inverse of the completion matrix, `I + A` with `A` the adjacency
    /// matrix: inverting `q_i = f_i + xor_{c} q_c` gives
    /// `f_i = q_i + xor_{c in children(i)} q_c`.
    pub fn completion_inverse(&self) -> BitMatrix {
        BitMatrix::from_fn(self.n, self.n, |i, j| i == j || self.parent[j] == Some(i))
    }

    /// Lines `parent child`, ascending.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (p, c) in self.edges() {
            writeln!(out, "{p} {c}").unwrap();
        }
        out
    }

    /// Parses `parent child` lines for a forest on `n` nodes. Blank lines
    /// and lines starting with `#` are skipped.
    pub fn parse_text(n: usize, text: &str) -> Result<Forest> {
        let mut edges = Vec::new();
        for (lineno, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let fields: Vec<&str> = line.split_whitespace().collect();
            let parse = |s: &str| {
                s.parse::<usize>()
                    .map_err(|e| Error::Parse(format!("line {}: {e}", lineno + 1)))
            };
            match fields.as_slice() {
                [p, c] => edges.push((parse(p)?, parse(c)?)),
                _ => {
                    return Err(Error::Parse(format!(
                        "line {}: expected `parent child`, got {line:?}",
                        lineno + 1
                    )))
                }
            }
        }
        Forest::new(n, edges)
    }
}

/// The Fenwick tree on `n` nodes: `fenwick(S, E)` links `E` to the
/// midpoint `floor((S+E)/2)` and recurses on both halves.
pub fn build_fenwick(n: usize) -> Forest {
    fn recurse(start: usize, end: usize, edges: &mut Vec<(usize, usize)>) {
        if start == end {
            return;
        }
        let mid = (start + end) / 2;
        edges.push((end, mid));
        recurse(start, mid, edges);
        recurse(mid + 1, end, edges);
    }
    let mut edges = Vec::with_capacity(n.saturating_sub(1));
    if n > 0 {
        recurse(0, n - 1, &mut edges);
    }
    Forest::new(n, edges).expect("fenwick construction yields a tree")
}

/// Smallest `k` with `3^k >= n`.
pub fn ceil_log3(n: usize) -> u32 {
    let mut k = 0;
    let mut p = 1usize;
    while p < n {
        p *= 3;
        k += 1;
    }
    k
}

fn sierpinski_edges(start: usize, end: usize, edges: &mut Vec<(usize, usize)>) {
    if start == end {
        return;
    }
    let size = end - start + 1;
    assert!(size.is_multiple_of(3), "interval [{start}, {end}] is not a power of three");
    let third = size / 3;
    assert!(third % 2 == 1, "interval [{start}, {end}] is not a power of three");
    let left = start + (third - 1) / 2;
    assert!((start + end).is_multiple_of(2));
    let center = (start + end) / 2;
    let right = end - (left - start);
    edges.push((center, left));
    edges.push((center, right));
    let t = 2 * (left - start);
    sierpinski_edges(start, start + t, edges);
    sierpinski_edges(start + t + 1, start + 2 * t + 1, edges);
    sierpinski_edges(start + 2 * t + 2, end, edges);
}

/// The unpruned Sierpinski forest on `n` nodes. For `n` not a power of
/// three the tree on `3^ceil(log3 n)` nodes is built and truncated to `0..n`.
pub fn build_sierpinski(n: usize) -> Forest {
    if n == 0 {
        return Forest::empty(0);
    }
    let full = 3usize.pow(ceil_log3(n));
    let mut edges = Vec::with_capacity(full - 1);
    sierpinski_edges(0, full - 1, &mut edges);
    let edges = edges.into_iter().filter(|&(p, c)| p < n && c < n);
    Forest::new(n, edges).expect("sierpinski construction yields a forest")
}

/// Greedy edge deletion. Edges are visited in ascending `(parent, child)`
/// order and an edge is removed only if that strictly lowers `objective`.
/// Passes repeat until one removes nothing.
pub fn prune<F>(forest: &Forest, mut objective: F) -> Forest
where
    F: FnMut(&Forest) -> Ratio<u64>,
{
    let mut current = forest.clone();
    let mut score = objective(&current);
    loop {
        let mut removed_any = false;
        for (p, c) in current.edges() {
            let candidate = current.without_edge(p, c);
            let candidate_score = objective(&candidate);
            if candidate_score < score {
                current = candidate;
                score = candidate_score;
                removed_any = true;
            }
        }
        if !removed_any {
            return current;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn edge_set(f: &Forest) -> Vec<(usize, usize)> {
        f.edges()
    }

    #[test]
    fn fenwick_small_cases() {
        assert!(edge_set(&build_fenwick(1)).is_empty());
        assert_eq!(edge_set(&build_fenwick(2)), vec![(1, 0)]);
        assert_eq!(
            edge_set(&build_fenwick(7)),
            vec![(1, 0), (3, 1), (3, 2), (5, 4), (6, 3), (6, 5)]
        );
    }

    #[test]
    fn fenwick7_completion_is_printed_matrix() {
        let g = build_fenwick(7).completion_matrix();
        assert_eq!(
            g.to_text(),
            "1000000\n1100000\n0010000\n1111000\n0000100\n0000110\n1111111\n"
        );
    }

    #[test]
    fn sierpinski_small_cases() {
        assert!(edge_set(&build_sierpinski(1)).is_empty());
        assert_eq!(edge_set(&build_sierpinski(3)), vec![(1, 0), (1, 2)]);
        assert_eq!(
            edge_set(&build_sierpinski(9)),
            vec![(1, 0), (1, 2), (4, 1), (4, 3), (4, 5), (4, 7), (7, 6), (7, 8)]
        );
    }

    #[test]
    fn sierpinski18_is_truncated_27_tree() {
        let expected = vec![
            (1, 0), (1, 2), (4, 1), (4, 3), (4, 5), (4, 7), (7, 6), (7, 8), (10, 9), (10, 11),
            (13, 4), (13, 10), (13, 12), (13, 14), (13, 16), (16, 15), (16, 17),
        ];
        assert_eq!(edge_set(&build_sierpinski(18)), expected);
        assert_eq!(build_sierpinski(27).truncate(18), build_sierpinski(18));
    }

    #[test]
    fn sierpinski_power_of_three_shape() {
        for k in 0..=6u32 {
            let n = 3usize.pow(k);
            let f = build_sierpinski(n);
            assert_eq!(f.edge_count(), n - 1);
            assert_eq!(f.roots(), vec![(n - 1) / 2]);
        }
    }

    #[test]
    fn sierpinski9_completion_rows() {
        let g = build_sierpinski(9).completion_matrix();
        assert_eq!(g.row(4).to_string(), "111111111");
        assert_eq!(g.row(1).to_string(), "111000000");
        assert_eq!(g.row(7).to_string(), "000000111");
    }

    #[test]
    fn closure_examples() {
        assert_eq!(Forest::empty(4).transitive_closure(), BitMatrix::zeros(4, 4));
        let chain = Forest::new(3, [(2, 1), (1, 0)]).unwrap();
        assert_eq!(chain.transitive_closure().row(2).to_string(), "110");
        let r = build_fenwick(7).transitive_closure();
        assert_eq!(r.row(6).to_string(), "1111110");
        assert_eq!(Forest::empty(1).completion_matrix().to_text(), "1\n");
    }

    #[test]
    fn completion_inverse_matches_elimination() {
        for n in [1, 2, 7, 9, 18, 40, 100] {
            for f in [build_fenwick(n), build_sierpinski(n)] {
                let g = f.completion_matrix();
                assert_eq!(g.invert().unwrap(), f.completion_inverse());
            }
        }
    }

    #[test]
    fn rejects_malformed_forests() {
        assert!(Forest::new(3, [(0, 3)]).is_err());
        assert!(Forest::new(3, [(0, 2), (1, 2)]).is_err());
        assert!(Forest::new(3, [(0, 1), (1, 0)]).is_err());
        assert!(Forest::new(3, [(1, 1)]).is_err());
        assert!(Forest::parse_text(3, "0 1 2\n").is_err());
        assert!(Forest::parse_text(3, "a b\n").is_err());
    }

    #[test]
    fn text_round_trip() {
        let f = build_sierpinski(18);
        assert_eq!(Forest::parse_text(18, &f.to_text()).unwrap(), f);
        assert_eq!(f.to_text().lines().next(), Some("1 0"));
    }

    #[test]
    fn prune_without_edges_is_identity() {
        let f = Forest::empty(1);
        let pruned = prune(&f, |_| Ratio::new(1, 1));
        assert_eq!(pruned, f);
    }

    #[test]
    fn prune_keeps_ties_and_takes_strict_gains() {
        // objective = number of edges: every deletion is a strict gain
        let f = build_fenwick(7);
        let pruned = prune(&f, |g| Ratio::from_integer(g.edge_count() as u64));
        assert_eq!(pruned.edge_count(), 0);
        // constant objective: nothing is removed
        let kept = prune(&f, |_| Ratio::from_integer(5));
        assert_eq!(kept, f);
    }

    #[test]
    fn ancestors_nearest_first() {
        let f = build_fenwick(7);
        assert_eq!(f.ancestors(2), vec![3, 6]);
        assert!(f.ancestors(6).is_empty());
    }
}
