//! Fermion-to-qubit encodings and the operators they emit.
//!
//! Every scheme except `ternary` is given by an invertible matrix `G`
//! sending occupation vectors `f` to qubit basis states `|G f>`. The
//! Majoranas then follow from the index sets:
//!
//! ```text
//! Γ_{2i}   =      Z_{P(i)} X_{U(i)}
//! Γ_{2i+1} = -i · Z_{R(i)} X_{U(i)}
//! ```
//!
//! The ternary scheme instead reads one Pauli string off every root-to-leaf
//! path of a ternary tree.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::forest::{build_fenwick, build_sierpinski, prune, Forest};
use crate::gf2::{BitMatrix, BitVector};
use crate::pauli::{Pauli, PauliString, Phase};
use crate::polynomial::{Coeff, PauliPolynomial};
use crate::sets::{all_sets_with_inverse, IndexSetQuad};
use crate::stats::{forest_average, AverageConvention};
use crate::ternary::{build_ternary_tree, Branch, TernaryPath, TernaryTree};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Scheme {
    JordanWigner,
    Parity,
    Fenwick,
    Sierpinski,
    SierpinskiPruned,
    Ternary,
    Custom,
}

impl Scheme {
    /// The schemes `make_encoding` can build from `n` alone.
    pub const BUILT_IN: [Scheme; 6] = [
        Scheme::JordanWigner,
        Scheme::Parity,
        Scheme::Fenwick,
        Scheme::Sierpinski,
        Scheme::SierpinskiPruned,
        Scheme::Ternary,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Scheme::JordanWigner => "jw",
            Scheme::Parity => "parity",
            Scheme::Fenwick => "fenwick",
            Scheme::Sierpinski => "sierpinski",
            Scheme::SierpinskiPruned => "sierpinski_pruned",
            Scheme::Ternary => "ternary",
            Scheme::Custom => "custom",
        }
    }

    /// Whether the scheme is described by a matrix `G`.
    pub fn is_matrix_based(self) -> bool {
        self != Scheme::Ternary
    }
}

impl fmt::Display for Scheme {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Scheme {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let all = Scheme::BUILT_IN.iter().chain([&Scheme::Custom]);
        all.copied()
            .find(|sc| sc.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown scheme `{s}`")))
    }
}

#[derive(Clone, Debug)]
enum Layout {
    Matrix {
        g: BitMatrix,
        ginv: BitMatrix,
        sets: Vec<IndexSetQuad>,
        forest: Option<Forest>,
    },
    Ternary {
        tree: TernaryTree,
        paths: Vec<TernaryPath>,
    },
}

#[derive(Clone, Debug)]
pub struct Encoding {
    n: usize,
    scheme: Scheme,
    layout: Layout,
    majoranas: Vec<PauliString>,
}

/// Builds the encoding of `scheme` on `n` modes. `custom` needs an explicit
/// forest or matrix, see [`Encoding::from_forest`] and [`Encoding::from_matrix`].
pub fn make_encoding(scheme: Scheme, n: usize) -> Result<Encoding> {
    match scheme {
        Scheme::JordanWigner => Encoding::with_forest(scheme, Forest::empty(n)),
        Scheme::Parity => Encoding::with_forest(scheme, parity_chain(n)),
        Scheme::Fenwick => Encoding::with_forest(scheme, build_fenwick(n)),
        Scheme::Sierpinski => Encoding::with_forest(scheme, build_sierpinski(n)),
        Scheme::SierpinskiPruned => {
            Encoding::with_forest(scheme, pruned_sierpinski(n))
        }
        Scheme::Ternary => Ok(Encoding::ternary(n)),
        Scheme::Custom => Err(Error::UnsupportedScheme {
            scheme: scheme.to_string(),
            reason: "a custom encoding needs a forest or a matrix".into(),
        }),
    }
}

/// The chain `n-1 -> n-2 -> ... -> 0`: node `i` stores `f_0 + ... + f_i`.
pub fn parity_chain(n: usize) -> Forest {
    Forest::new(n, (1..n).map(|i| (i, i - 1))).expect("a chain is a forest")
}

/// The Sierpinski forest after greedy pruning against the average weight
/// of all `2n + 1` anticommuting operators (the Majoranas plus their
/// product).
pub fn pruned_sierpinski(n: usize) -> Forest {
    prune(&build_sierpinski(n), |f| forest_average(f, AverageConvention::Extended2nPlus1))
}

fn majoranas_from_sets(n: usize, sets: &[IndexSetQuad]) -> Vec<PauliString> {
    let mut out = Vec::with_capacity(2 * n);
    for q in sets {
        let x = q.update.mask().clone();
        out.push(PauliString::from_z_x_masks(q.parity.mask().clone(), x.clone(), Phase::ONE));
        out.push(PauliString::from_z_x_masks(q.remainder.mask().clone(), x, Phase::MINUS_I));
    }
    out
}

fn path_string(n: usize, path: &TernaryPath) -> PauliString {
    let mut s = PauliString::identity(n);
    for &(node, branch) in path {
        let letter = match branch {
            Branch::Upper => Pauli::X,
            Branch::Middle => Pauli::Y,
            Branch::Lower => Pauli::Z,
        };
        s.set_letter(node, letter);
    }
    s
}

impl Encoding {
    fn with_matrix(scheme: Scheme, g: BitMatrix, forest: Option<Forest>) -> Result<Self> {
        let ginv = match &forest {
            Some(f) => f.completion_inverse(),
            None => g.invert()?,
        };
        let sets = all_sets_with_inverse(&g, &ginv)?;
        let n = g.rows();
        let majoranas = majoranas_from_sets(n, &sets);
        Ok(Self {
            n,
            scheme,
            layout: Layout::Matrix {
                g,
                ginv,
                sets,
                forest,
            },
            majoranas,
        })
    }

    fn with_forest(scheme: Scheme, forest: Forest) -> Result<Self> {
        Self::with_matrix(scheme, forest.completion_matrix(), Some(forest))
    }

    fn ternary(n: usize) -> Self {
        let tree = build_ternary_tree(n);
        let paths = tree.paths();
        // 2n + 1 paths, the last (all-lower) one is left out
        let majoranas = paths[..2 * n].iter().map(|p| path_string(n, p)).collect();
        Self {
            n,
            scheme: Scheme::Ternary,
            layout: Layout::Ternary { tree, paths },
            majoranas,
        }
    }

    /// A `custom` encoding from an arbitrary invertible matrix.
    pub fn from_matrix(g: BitMatrix) -> Result<Self> {
        if !g.is_square() {
            return Err(Error::DimensionMismatch {
                expected: g.rows(),
                found: g.cols(),
            });
        }
        Self::with_matrix(Scheme::Custom, g, None)
    }

    /// A `custom` encoding from a prefix-sum forest.
    pub fn from_forest(forest: Forest) -> Result<Self> {
        Self::with_forest(Scheme::Custom, forest)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn scheme(&self) -> Scheme {
        self.scheme
    }

    pub fn matrix(&self) -> Option<&BitMatrix> {
        match &self.layout {
            Layout::Matrix { g, .. } => Some(g),
            Layout::Ternary { .. } => None,
        }
    }

    pub fn inverse(&self) -> Option<&BitMatrix> {
        match &self.layout {
            Layout::Matrix { ginv, .. } => Some(ginv),
            Layout::Ternary { .. } => None,
        }
    }

    pub fn sets(&self) -> Option<&[IndexSetQuad]> {
        match &self.layout {
            Layout::Matrix { sets, .. } => Some(sets),
            Layout::Ternary { .. } => None,
        }
    }

    pub fn forest(&self) -> Option<&Forest> {
        match &self.layout {
            Layout::Matrix { forest, .. } => forest.as_ref(),
            Layout::Ternary { .. } => None,
        }
    }

    pub fn ternary_tree(&self) -> Option<&TernaryTree> {
        match &self.layout {
            Layout::Ternary { tree, .. } => Some(tree),
            Layout::Matrix { .. } => None,
        }
    }

    pub fn ternary_paths(&self) -> Option<&[TernaryPath]> {
        match &self.layout {
            Layout::Ternary { paths, .. } => Some(paths),
            Layout::Matrix { .. } => None,
        }
    }

    fn unsupported(&self, what: &str) -> Error {
        Error::UnsupportedScheme {
            scheme: self.scheme.to_string(),
            reason: format!("{what} needs a matrix-based scheme"),
        }
    }

    fn check_mode(&self, j: usize) -> Result<()> {
        if j >= self.n {
            return Err(Error::IndexOutOfRange {
                index: j,
                size: self.n,
            });
        }
        Ok(())
    }

    /// All `2n` Majorana strings in order.
    pub fn majoranas(&self) -> &[PauliString] {
        &self.majoranas
    }

    pub fn majorana(&self, k: usize) -> Result<&PauliString> {
        self.majoranas.get(k).ok_or(Error::IndexOutOfRange {
            index: k,
            size: 2 * self.n,
        })
    }

    /// The `2n + 1` path strings of the ternary scheme.
    pub fn ternary_majoranas(&self) -> Result<Vec<PauliString>> {
        match &self.layout {
            Layout::Ternary { paths, .. } => {
                Ok(paths.iter().map(|p| path_string(self.n, p)).collect())
            }
            Layout::Matrix { .. } => Err(Error::UnsupportedScheme {
                scheme: self.scheme.to_string(),
                reason: "path strings exist only for the ternary scheme".into(),
            }),
        }
    }

    /// The product of all `2n` Majoranas, rescaled to a Hermitian string.
    /// It anticommutes with every Majorana, so it completes them to `2n + 1`
    /// mutually anticommuting strings. For the ternary scheme it is the
    /// dropped path string up to sign.
    pub fn completing_operator(&self) -> PauliString {
        let mut acc = PauliString::identity(self.n);
        for m in &self.majoranas {
            acc = acc.multiply(m).expect("equal widths");
        }
        if acc.phase().is_real() {
            acc
        } else {
            let p = acc.phase() * Phase::MINUS_I;
            acc.with_phase(p)
        }
    }

    fn ladder(&self, j: usize, sign: i64) -> Result<PauliPolynomial> {
        self.check_mode(j)?;
        if !self.scheme.is_matrix_based() {
            return Err(self.unsupported("creation and annihilation operators"));
        }
        PauliPolynomial::from_terms(
            self.n,
            [
                (Coeff::HALF, self.majoranas[2 * j].clone()),
                (Coeff::new(0, sign, 1), self.majoranas[2 * j + 1].clone()),
            ],
        )
    }

    /// `a_j^† = (Γ_{2j} - i Γ_{2j+1}) / 2`.
    pub fn creation(&self, j: usize) -> Result<PauliPolynomial> {
        self.ladder(j, -1)
    }

    /// `a_j = (Γ_{2j} + i Γ_{2j+1}) / 2`.
    pub fn annihilation(&self, j: usize) -> Result<PauliPolynomial> {
        self.ladder(j, 1)
    }

    /// `a_j^† a_j`.
    pub fn number_op(&self, j: usize) -> Result<PauliPolynomial> {
        self.creation(j)?.multiply(&self.annihilation(j)?)
    }

    fn check_len(&self, v: &BitVector) -> Result<()> {
        if v.len() != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                found: v.len(),
            });
        }
        Ok(())
    }

    /// Occupations `f` to stored bits `G f`.
    pub fn encode_state(&self, f: &BitVector) -> Result<BitVector> {
        self.check_len(f)?;
        self.matrix()
            .ok_or_else(|| self.unsupported("the state codec"))?
            .matvec(f)
    }

    /// Stored bits `q` to occupations `G^-1 q`.
    pub fn decode_state(&self, q: &BitVector) -> Result<BitVector> {
        self.check_len(q)?;
        self.inverse()
            .ok_or_else(|| self.unsupported("the state codec"))?
            .matvec(q)
    }
}
