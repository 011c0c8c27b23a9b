//! Dense linear algebra over GF(2).
//!
//! Vectors and matrix rows are packed into `u64` words so that row
//! operations (xor, and, popcount) run a word at a time. Matrix entries are
//! addressed `m[i][j]` with `i` the row and `j` the column, so the encoded
//! array of a tree is `q = G f` with `q_i = xor_j G[i][j] f_j`.

use std::fmt;
use std::ops::{BitAnd, BitOr, BitXor};
use std::str::FromStr;

use rand::Rng;

use crate::error::{Error, Result};

const WORD_BITS: usize = 64;

fn word_count(len: usize) -> usize {
    len.div_ceil(WORD_BITS)
}

/// A vector over GF(2).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitVector {
    len: usize,
    words: Vec<u64>,
}

impl BitVector {
    pub fn zeros(len: usize) -> Self {
        Self {
            len,
            words: vec![0; word_count(len)],
        }
    }

    /// The standard basis vector `e_i`.
    pub fn unit(len: usize, i: usize) -> Self {
        let mut v = Self::zeros(len);
        v.set(i, true);
        v
    }

    pub fn from_bools<I: IntoIterator<Item = bool>>(bits: I) -> Self {
        let bits: Vec<bool> = bits.into_iter().collect();
        let mut v = Self::zeros(bits.len());
        for (i, b) in bits.into_iter().enumerate() {
            if b {
                v.set(i, true);
            }
        }
        v
    }

    /// Builds a vector of length `len` with the listed positions set.
    pub fn from_indices(len: usize, indices: &[usize]) -> Result<Self> {
        let mut v = Self::zeros(len);
        for &i in indices {
            if i >= len {
                return Err(Error::IndexOutOfRange { index: i, size: len });
            }
            v.set(i, true);
        }
        Ok(v)
    }

    /// The low `len` bits of `value`, bit `i` of the integer going to entry `i`.
    pub fn from_u64(len: usize, value: u64) -> Self {
        assert!(len <= WORD_BITS);
        let mut v = Self::zeros(len);
        if len > 0 {
            let mask = if len == WORD_BITS { !0 } else { (1u64 << len) - 1 };
            v.words[0] = value & mask;
        }
        v
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn words(&self) -> &[u64] {
        &self.words
    }

    pub fn get(&self, i: usize) -> bool {
        assert!(i < self.len, "bit index {i} out of range (len={})", self.len);
        (self.words[i / WORD_BITS] >> (i % WORD_BITS)) & 1 == 1
    }

    pub fn set(&mut self, i: usize, value: bool) {
        assert!(i < self.len, "bit index {i} out of range (len={})", self.len);
        let mask = 1u64 << (i % WORD_BITS);
        if value {
            self.words[i / WORD_BITS] |= mask;
        } else {
            self.words[i / WORD_BITS] &= !mask;
        }
    }

    pub fn flip(&mut self, i: usize) {
        assert!(i < self.len, "bit index {i} out of range (len={})", self.len);
        self.words[i / WORD_BITS] ^= 1u64 << (i % WORD_BITS);
    }

    pub fn xor_assign(&mut self, other: &Self) {
        assert_eq!(self.len, other.len, "length mismatch in xor");
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= *b;
        }
    }

    pub fn or_assign(&mut self, other: &Self) {
        assert_eq!(self.len, other.len, "length mismatch in or");
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= *b;
        }
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Inner product mod 2.
    pub fn dot(&self, other: &Self) -> bool {
        assert_eq!(self.len, other.len, "length mismatch in dot");
        let ones: u32 = self
            .words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones())
            .sum();
        ones & 1 == 1
    }

    /// Size of the intersection of the supports.
    pub fn overlap(&self, other: &Self) -> usize {
        assert_eq!(self.len, other.len, "length mismatch in overlap");
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    /// Indices of the set entries, ascending.
    pub fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let tz = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(wi * WORD_BITS + tz)
            })
        })
    }

    pub fn iter(&self) -> impl Iterator<Item = bool> + '_ {
        (0..self.len).map(move |i| self.get(i))
    }
}

impl BitXor for &BitVector {
    type Output = BitVector;

    fn bitxor(self, rhs: &BitVector) -> BitVector {
        let mut out = self.clone();
        out.xor_assign(rhs);
        out
    }
}

impl BitAnd for &BitVector {
    type Output = BitVector;

    fn bitand(self, rhs: &BitVector) -> BitVector {
        assert_eq!(self.len, rhs.len, "length mismatch in and");
        BitVector {
            len: self.len,
            words: self.words.iter().zip(&rhs.words).map(|(a, b)| a & b).collect(),
        }
    }
}

impl BitOr for &BitVector {
    type Output = BitVector;

    fn bitor(self, rhs: &BitVector) -> BitVector {
        let mut out = self.clone();
        out.or_assign(rhs);
        out
    }
}

impl fmt::Display for BitVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in self.iter() {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for BitVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitVector({self})")
    }
}

impl FromStr for BitVector {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bits = s
            .chars()
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                other => Err(Error::Parse(format!("unexpected character {other:?} in bit string"))),
            })
            .collect::<Result<Vec<_>>>()?;
        if bits.is_empty() {
            return Err(Error::Parse("empty bit string".into()));
        }
        Ok(Self::from_bools(bits))
    }
}

/// A dense matrix over GF(2), stored row by row.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BitVector>,
}

impl BitMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![BitVector::zeros(cols); rows],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, true);
        }
        m
    }

    pub fn from_rows(rows: Vec<BitVector>) -> Result<Self> {
        let cols = rows.first().map(BitVector::len).unwrap_or(0);
        if let Some(bad) = rows.iter().find(|r| r.len() != cols) {
            return Err(Error::DimensionMismatch {
                expected: cols,
                found: bad.len(),
            });
        }
        Ok(Self {
            rows: rows.len(),
            cols,
            data: rows,
        })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> bool) -> Self {
        let mut m = Self::zeros(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                if f(i, j) {
                    m.set(i, j, true);
                }
            }
        }
        m
    }

    /// Draws uniformly random matrices until one is invertible.
    pub fn random_invertible<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Self {
        loop {
            let m = Self::from_fn(n, n, |_, _| rng.gen::<bool>());
            if m.invert().is_ok() {
                return m;
            }
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        self.data[i].get(j)
    }

    pub fn set(&mut self, i: usize, j: usize, value: bool) {
        self.data[i].set(j, value);
    }

    pub fn row(&self, i: usize) -> &BitVector {
        &self.data[i]
    }

    pub fn row_vectors(&self) -> &[BitVector] {
        &self.data
    }

    pub fn column(&self, j: usize) -> BitVector {
        BitVector::from_bools((0..self.rows).map(|i| self.get(i, j)))
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for (i, row) in self.data.iter().enumerate() {
            for j in row.ones() {
                t.set(j, i, true);
            }
        }
        t
    }

    pub fn is_identity(&self) -> bool {
        self.is_square() && *self == Self::identity(self.rows)
    }

    /// `result_i = xor_j M[i][j] v_j`.
    pub fn matvec(&self, v: &BitVector) -> Result<BitVector> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: v.len(),
            });
        }
        Ok(BitVector::from_bools(self.data.iter().map(|row| row.dot(v))))
    }

    pub fn matmul(&self, other: &BitMatrix) -> Result<BitMatrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: other.rows,
            });
        }
        let data = self
            .data
            .iter()
            .map(|row| {
                let mut acc = BitVector::zeros(other.cols);
                for k in row.ones() {
                    acc.xor_assign(&other.data[k]);
                }
                acc
            })
            .collect();
        Ok(BitMatrix {
            rows: self.rows,
            cols: other.cols,
            data,
        })
    }

    /// Gauss-Jordan inversion. The pivot for each column is the first row
    /// at or below the diagonal with that bit set.
    pub fn invert(&self) -> Result<BitMatrix> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch {
                expected: self.rows,
                found: self.cols,
            });
        }
        let n = self.rows;
        let mut left = self.data.clone();
        let mut right = Self::identity(n).data;
        for col in 0..n {
            let pivot = (col..n)
                .find(|&r| left[r].get(col))
                .ok_or(Error::NotInvertible { column: col })?;
            left.swap(col, pivot);
            right.swap(col, pivot);
            let (pl, pr) = (left[col].clone(), right[col].clone());
            for r in 0..n {
                if r != col && left[r].get(col) {
                    left[r].xor_assign(&pl);
                    right[r].xor_assign(&pr);
                }
            }
        }
        Ok(BitMatrix {
            rows: n,
            cols: n,
            data: right,
        })
    }

    /// One row per line, characters `0`/`1`, trailing newline.
    pub fn to_text(&self) -> String {
        let mut out = String::with_capacity(self.rows * (self.cols + 1));
        for row in &self.data {
            out.push_str(&row.to_string());
            out.push('\n');
        }
        out
    }

    /// Inverse of [`BitMatrix::to_text`]; blank lines are ignored.
    pub fn parse_text(text: &str) -> Result<Self> {
        let rows = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty())
            .map(BitVector::from_str)
            .collect::<Result<Vec<_>>>()?;
        if rows.is_empty() {
            return Err(Error::Parse("matrix text has no rows".into()));
        }
        Self::from_rows(rows)
    }
}

impl fmt::Debug for BitMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "BitMatrix {}x{}", self.rows, self.cols)?;
        f.write_str(&self.to_text())
    }
}

/// Strictly lower-triangular all-ones matrix: `(Π x)_i = xor_{j<i} x_j`.
pub fn prefix_matrix(n: usize) -> BitMatrix {
    BitMatrix::from_fn(n, n, |i, j| j < i)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    const FENWICK7_G: &str = "\
1000000
1100000
0010000
1111000
0000100
0000110
1111111
";

    const FENWICK7_GINV: &str = "\
1000000
1100000
0010000
0111000
0000100
0000110
0001011
";

    fn bv(s: &str) -> BitVector {
        s.parse().unwrap()
    }

    #[test]
    fn identity_inverts_to_itself() {
        let id = BitMatrix::identity(3);
        assert_eq!(id.invert().unwrap(), id);
    }

    #[test]
    fn fenwick7_inverse_matches_printed() {
        let g = BitMatrix::parse_text(FENWICK7_G).unwrap();
        let ginv = g.invert().unwrap();
        assert_eq!(ginv.to_text(), FENWICK7_GINV);
        assert_eq!(ginv.row(3).to_string(), "0111000");
        assert_eq!(ginv.row(6).to_string(), "0001011");
    }

    #[test]
    fn singular_matrix_is_rejected() {
        let m = BitMatrix::parse_text("11\n11\n").unwrap();
        assert_eq!(m.invert(), Err(Error::NotInvertible { column: 1 }));
        let rect = BitMatrix::zeros(2, 3);
        assert!(matches!(rect.invert(), Err(Error::DimensionMismatch { .. })));
    }

    #[test]
    fn random_64x64_multiply_back() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..100 {
            let m = BitMatrix::random_invertible(64, &mut rng);
            let inv = m.invert().unwrap();
            assert!(m.matmul(&inv).unwrap().is_identity());
            assert!(inv.matmul(&m).unwrap().is_identity());
        }
    }

    #[test]
    fn matvec_examples() {
        let v = bv("10011");
        assert_eq!(BitMatrix::identity(5).matvec(&v).unwrap(), v);

        let g = BitMatrix::parse_text(FENWICK7_G).unwrap();
        assert_eq!(g.matvec(&BitVector::unit(7, 0)).unwrap(), bv("1101001"));

        let parity = BitMatrix::from_fn(5, 5, |i, j| i >= j);
        assert_eq!(parity.matvec(&v).unwrap(), bv("11101"));

        assert!(matches!(
            g.matvec(&v),
            Err(Error::DimensionMismatch { expected: 7, found: 5 })
        ));
    }

    #[test]
    fn matmul_examples() {
        let g = BitMatrix::parse_text(FENWICK7_G).unwrap();
        assert_eq!(g.matmul(&BitMatrix::identity(7)).unwrap(), g);
        let ginv = g.invert().unwrap();
        assert!(ginv.matmul(&g).unwrap().is_identity());
        let pg = prefix_matrix(7).matmul(&ginv).unwrap();
        assert_eq!(pg.row(2).to_string(), "0100000");
        assert!(g.matmul(&BitMatrix::zeros(3, 3)).is_err());
    }

    #[test]
    fn prefix_matrix_examples() {
        assert_eq!(prefix_matrix(1).to_text(), "0\n");
        assert_eq!(prefix_matrix(2).to_text(), "00\n10\n");
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let x = BitVector::from_bools((0..16).map(|_| rng.gen::<bool>()));
        let px = prefix_matrix(16).matvec(&x).unwrap();
        let mut acc = false;
        for i in 0..16 {
            assert_eq!(px.get(i), acc);
            acc ^= x.get(i);
        }
    }

    #[test]
    fn text_round_trip_and_errors() {
        let g = BitMatrix::parse_text(FENWICK7_G).unwrap();
        assert_eq!(BitMatrix::parse_text(&g.to_text()).unwrap(), g);
        assert!(BitMatrix::parse_text("10\n1\n").is_err());
        assert!(BitMatrix::parse_text("1x\n").is_err());
        assert!(BitMatrix::parse_text("\n").is_err());
    }

    #[test]
    fn ones_iterates_across_words() {
        let v = BitVector::from_indices(130, &[0, 63, 64, 129]).unwrap();
        assert_eq!(v.ones().collect::<Vec<_>>(), vec![0, 63, 64, 129]);
        assert_eq!(v.count_ones(), 4);
        assert!(BitVector::from_indices(3, &[3]).is_err());
    }
}
