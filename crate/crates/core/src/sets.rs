//! Update, flip, parity and remainder sets of an invertible binary matrix.
//!
//! For `G` in GL_n(F2) and a mode `i`:
//!
//! - `U(i)`: rows of `G` with a one in column `i` (the stored bits that
//!   contain `f_i`),
//! - `F(i)`: columns of `G^-1` with a one in row `i` (the stored bits whose
//!   sum is `f_i`),
//! - `P(i)`: support of row `i` of `Π G^-1`, i.e. `F(0) △ ... △ F(i-1)`,
//! - `R(i) = F(i) △ P(i)`.

use std::fmt;

use crate::error::{Error, Result};
use crate::gf2::{prefix_matrix, BitMatrix, BitVector};

/// A set of qubit indices kept both as a sorted list and as a bit mask.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IndexSet {
    indices: Vec<usize>,
    mask: BitVector,
}

impl IndexSet {
    pub fn from_mask(mask: BitVector) -> Self {
        Self {
            indices: mask.ones().collect(),
            mask,
        }
    }

    pub fn from_indices(n: usize, indices: &[usize]) -> Result<Self> {
        BitVector::from_indices(n, indices).map(Self::from_mask)
    }

    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    pub fn mask(&self) -> &BitVector {
        &self.mask
    }

    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }

    pub fn contains(&self, i: usize) -> bool {
        i < self.mask.len() && self.mask.get(i)
    }

    pub fn symmetric_difference(&self, other: &IndexSet) -> IndexSet {
        IndexSet::from_mask(&self.mask ^ &other.mask)
    }

    pub fn union(&self, other: &IndexSet) -> IndexSet {
        IndexSet::from_mask(&self.mask | &other.mask)
    }

    pub fn intersection_len(&self, other: &IndexSet) -> usize {
        self.mask.overlap(&other.mask)
    }
}

impl fmt::Display for IndexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, i) in self.indices.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{i}")?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for IndexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IndexSetQuad {
    pub mode: usize,
    pub update: IndexSet,
    pub flip: IndexSet,
    pub parity: IndexSet,
    pub remainder: IndexSet,
}

impl IndexSetQuad {
    /// The three intersection parities every invertible matrix satisfies:
    /// `|U∩F|` odd, `|U∩P|` even, `|U∩R|` odd.
    pub fn satisfies_intersection_parities(&self) -> bool {
        self.update.intersection_len(&self.flip) % 2 == 1
            && self.update.intersection_len(&self.parity).is_multiple_of(2)
            && self.update.intersection_len(&self.remainder) % 2 == 1
    }
}

impl fmt::Display for IndexSetQuad {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}: U={} F={} P={} R={}",
            self.mode, self.update, self.flip, self.parity, self.remainder
        )
    }
}

fn check_pair(g: &BitMatrix, ginv: &BitMatrix) -> Result<()> {
    if !g.is_square() {
        return Err(Error::DimensionMismatch {
            expected: g.rows(),
            found: g.cols(),
        });
    }
    if ginv.rows() != g.rows() || ginv.cols() != g.cols() {
        return Err(Error::DimensionMismatch {
            expected: g.rows(),
            found: ginv.rows(),
        });
    }
    Ok(())
}

/// Sets for a single mode, straight from the definitions.
pub fn compute_sets(g: &BitMatrix, ginv: &BitMatrix, i: usize) -> Result<IndexSetQuad> {
    check_pair(g, ginv)?;
    let n = g.rows();
    if i >= n {
        return Err(Error::IndexOutOfRange { index: i, size: n });
    }
    let update = IndexSet::from_mask(g.column(i));
    let flip = IndexSet::from_mask(ginv.row(i).clone());
    let pi_ginv = prefix_matrix(n).matmul(ginv)?;
    let parity = IndexSet::from_mask(pi_ginv.row(i).clone());
    let remainder = flip.symmetric_difference(&parity);
    Ok(IndexSetQuad {
        mode: i,
        update,
        flip,
        parity,
        remainder,
    })
}

/// Sets for every mode, inverting `g` once.
pub fn all_sets(g: &BitMatrix) -> Result<Vec<IndexSetQuad>> {
    let ginv = g.invert()?;
    all_sets_with_inverse(g, &ginv)
}

/// Sets for every mode given a known inverse. Parity sets are accumulated
/// as the running symmetric difference of the flip sets.
pub fn all_sets_with_inverse(g: &BitMatrix, ginv: &BitMatrix) -> Result<Vec<IndexSetQuad>> {
    check_pair(g, ginv)?;
    let n = g.rows();
    let gt = g.transpose();
    let mut running = BitVector::zeros(n);
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let flip_mask = ginv.row(i).clone();
        let remainder = IndexSet::from_mask(&running ^ &flip_mask);
        out.push(IndexSetQuad {
            mode: i,
            update: IndexSet::from_mask(gt.row(i).clone()),
            flip: IndexSet::from_mask(flip_mask.clone()),
            parity: IndexSet::from_mask(running.clone()),
            remainder,
        });
        running.xor_assign(&flip_mask);
    }
    Ok(out)
}
