//! Ternary trees and their root-to-leaf paths.
//!
//! Nodes are labelled breadth-first, left to right. Filling the levels in
//! that order means node `k > 0` always hangs off slot `(k - 1) % 3` of
//! node `(k - 1) / 3`, so an incomplete tree converts the leftmost leaves
//! of the next level first.

use std::fmt;

/// Which child slot a path takes at a node.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Branch {
    Upper,
    Middle,
    Lower,
}

impl Branch {
    pub const ALL: [Branch; 3] = [Branch::Upper, Branch::Middle, Branch::Lower];

    pub fn slot(self) -> usize {
        match self {
            Branch::Upper => 0,
            Branch::Middle => 1,
            Branch::Lower => 2,
        }
    }
}

impl fmt::Display for Branch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Branch::Upper => "upper",
            Branch::Middle => "middle",
            Branch::Lower => "lower",
        })
    }
}

/// A root-to-leaf path: the labelled nodes traversed and the branch taken
/// at each of them.
pub type TernaryPath = Vec<(usize, Branch)>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TernaryTree {
    n: usize,
    /// `children[v][slot]` is `None` for a leaf slot.
    children: Vec<[Option<usize>; 3]>,
}

impl TernaryTree {
    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn child(&self, node: usize, branch: Branch) -> Option<usize> {
        self.children[node][branch.slot()]
    }

    pub fn depth(&self, mut node: usize) -> usize {
        let mut d = 0;
        while node > 0 {
            node = (node - 1) / 3;
            d += 1;
        }
        d
    }

    /// Edges `parent child` in ascending order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (1..self.n).map(|k| ((k - 1) / 3, k)).collect()
    }

    /// Every root-to-leaf path, depth first with upper < middle < lower.
    /// A tree on `n` nodes has `2n + 1` of them.
    pub fn paths(&self) -> Vec<TernaryPath> {
        let mut out = Vec::with_capacity(2 * self.n + 1);
        if self.n == 0 {
            return out;
        }
        let mut prefix = Vec::new();
        self.walk(0, &mut prefix, &mut out);
        out
    }

    fn walk(&self, node: usize, prefix: &mut TernaryPath, out: &mut Vec<TernaryPath>) {
        for branch in Branch::ALL {
            prefix.push((node, branch));
            match self.child(node, branch) {
                Some(next) => self.walk(next, prefix, out),
                None => out.push(prefix.clone()),
            }
            prefix.pop();
        }
    }
}

/// Complete ternary tree on the largest `(3^h - 1)/2 <= n` nodes, with the
/// remaining nodes placed breadth-first in the next level.
pub fn build_ternary_tree(n: usize) -> TernaryTree {
    let mut children = vec![[None; 3]; n];
    for k in 1..n {
        children[(k - 1) / 3][(k - 1) % 3] = Some(k);
    }
    TernaryTree { n, children }
}

pub fn enumerate_paths(tree: &TernaryTree) -> Vec<TernaryPath> {
    tree.paths()
}
