//! Pauli strings with exact phases, the binary symplectic map and the
//! CNOT-block Clifford tableau of an invertible binary matrix.
//!
//! A string is stored as `phase · P_0 ⊗ P_1 ⊗ ... ⊗ P_{n-1}` with the
//! letters packed into x and z bit vectors (`X = (1,0)`, `Y = (1,1)`,
//! `Z = (0,1)`). Qubit 0 is always the leftmost letter when rendered.

use std::fmt;
use std::ops::Mul;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::gf2::{BitMatrix, BitVector};

/// A phase `i^k`, `k` in `0..4`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Phase(u8);

impl Phase {
    pub const ONE: Phase = Phase(0);
    pub const I: Phase = Phase(1);
    pub const MINUS_ONE: Phase = Phase(2);
    pub const MINUS_I: Phase = Phase(3);

    pub fn from_exponent(k: i64) -> Phase {
        Phase(k.rem_euclid(4) as u8)
    }

    pub fn exponent(self) -> u8 {
        self.0
    }

    pub fn is_real(self) -> bool {
        self.0.is_multiple_of(2)
    }

    pub fn conj(self) -> Phase {
        Phase((4 - self.0) % 4)
    }

    /// `(re, im)` of the phase.
    pub fn to_complex(self) -> (i64, i64) {
        match self.0 {
            0 => (1, 0),
            1 => (0, 1),
            2 => (-1, 0),
            _ => (0, -1),
        }
    }

    pub fn prefix(self) -> &'static str {
        match self.0 {
            0 => "+",
            1 => "+i",
            2 => "-",
            _ => "-i",
        }
    }
}

impl Mul for Phase {
    type Output = Phase;

    fn mul(self, rhs: Phase) -> Phase {
        Phase((self.0 + rhs.0) % 4)
    }
}

impl fmt::Display for Phase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.prefix())
    }
}

impl fmt::Debug for Phase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Phase({})", self.prefix())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Pauli {
    I,
    X,
    Y,
    Z,
}

impl Pauli {
    fn from_bits(x: bool, z: bool) -> Pauli {
        match (x, z) {
            (false, false) => Pauli::I,
            (true, false) => Pauli::X,
            (true, true) => Pauli::Y,
            (false, true) => Pauli::Z,
        }
    }

    fn bits(self) -> (bool, bool) {
        match self {
            Pauli::I => (false, false),
            Pauli::X => (true, false),
            Pauli::Y => (true, true),
            Pauli::Z => (false, true),
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Pauli::I => 'I',
            Pauli::X => 'X',
            Pauli::Y => 'Y',
            Pauli::Z => 'Z',
        }
    }

    pub fn from_char(c: char) -> Option<Pauli> {
        match c {
            'I' => Some(Pauli::I),
            'X' => Some(Pauli::X),
            'Y' => Some(Pauli::Y),
            'Z' => Some(Pauli::Z),
            _ => None,
        }
    }
}

/// Image of a Pauli string under the symplectic map, phase discarded.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SymplecticVector {
    pub x: BitVector,
    pub z: BitVector,
}

impl SymplecticVector {
    pub fn zeros(n: usize) -> Self {
        Self {
            x: BitVector::zeros(n),
            z: BitVector::zeros(n),
        }
    }

    pub fn len(&self) -> usize {
        self.x.len()
    }

    pub fn is_empty(&self) -> bool {
        self.x.is_empty()
    }

    pub fn xor(&self, other: &Self) -> Self {
        Self {
            x: &self.x ^ &other.x,
            z: &self.z ^ &other.z,
        }
    }

    /// `<x, z'> + <z, x'>` mod 2; one exactly when the strings anticommute.
    pub fn symplectic_product(&self, other: &Self) -> bool {
        self.x.dot(&other.z) ^ self.z.dot(&other.x)
    }

    /// The `2n` bits `(x_0..x_{n-1}, z_0..z_{n-1})`.
    pub fn to_bits(&self) -> BitVector {
        BitVector::from_bools(self.x.iter().chain(self.z.iter()))
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PauliString {
    phase: Phase,
    x: BitVector,
    z: BitVector,
}

impl PauliString {
    pub fn identity(n: usize) -> Self {
        Self {
            phase: Phase::ONE,
            x: BitVector::zeros(n),
            z: BitVector::zeros(n),
        }
    }

    pub fn from_letters(phase: Phase, letters: &[Pauli]) -> Self {
        let mut s = Self::identity(letters.len());
        s.phase = phase;
        for (q, &p) in letters.iter().enumerate() {
            s.set_letter(q, p);
        }
        s
    }

    pub fn single(n: usize, qubit: usize, letter: Pauli) -> Result<Self> {
        if qubit >= n {
            return Err(Error::IndexOutOfRange { index: qubit, size: n });
        }
        let mut s = Self::identity(n);
        s.set_letter(qubit, letter);
        Ok(s)
    }

    /// `pre · prod_{j in z} Z_j · prod_{j in x} X_j`; every qubit in both
    /// sets becomes a `Y` and contributes `Z X = iY` to the phase.
    pub fn from_z_x_sets(n: usize, z_set: &[usize], x_set: &[usize], pre: Phase) -> Result<Self> {
        let z = BitVector::from_indices(n, z_set)?;
        let x = BitVector::from_indices(n, x_set)?;
        Ok(Self::from_z_x_masks(z, x, pre))
    }

    pub fn from_z_x_masks(z: BitVector, x: BitVector, pre: Phase) -> Self {
        assert_eq!(z.len(), x.len());
        let ys = z.overlap(&x) as i64;
        Self {
            phase: pre * Phase::from_exponent(ys),
            x,
            z,
        }
    }

    pub fn from_symplectic(v: &SymplecticVector, phase: Phase) -> Self {
        Self {
            phase,
            x: v.x.clone(),
            z: v.z.clone(),
        }
    }

    pub fn num_qubits(&self) -> usize {
        self.x.len()
    }

    pub fn phase(&self) -> Phase {
        self.phase
    }

    pub fn with_phase(mut self, phase: Phase) -> Self {
        self.phase = phase;
        self
    }

    pub fn x_bits(&self) -> &BitVector {
        &self.x
    }

    pub fn z_bits(&self) -> &BitVector {
        &self.z
    }

    pub fn letter(&self, q: usize) -> Pauli {
        Pauli::from_bits(self.x.get(q), self.z.get(q))
    }

    pub fn set_letter(&mut self, q: usize, p: Pauli) {
        let (x, z) = p.bits();
        self.x.set(q, x);
        self.z.set(q, z);
    }

    pub fn letters(&self) -> Vec<Pauli> {
        (0..self.num_qubits()).map(|q| self.letter(q)).collect()
    }

    /// Number of non-identity letters.
    pub fn weight(&self) -> usize {
        (&self.x | &self.z).count_ones()
    }

    pub fn is_identity_up_to_phase(&self) -> bool {
        self.x.is_zero() && self.z.is_zero()
    }

    /// A string is Hermitian iff its phase is real.
    pub fn is_hermitian(&self) -> bool {
        self.phase.is_real()
    }

    pub fn adjoint(&self) -> Self {
        Self {
            phase: self.phase.conj(),
            ..self.clone()
        }
    }

    pub fn phi(&self) -> SymplecticVector {
        SymplecticVector {
            x: self.x.clone(),
            z: self.z.clone(),
        }
    }

    fn check_len(&self, other: &Self) -> Result<()> {
        if self.num_qubits() != other.num_qubits() {
            return Err(Error::DimensionMismatch {
                expected: self.num_qubits(),
                found: other.num_qubits(),
            });
        }
        Ok(())
    }

    /// Exact product `self · other`.
    pub fn multiply(&self, other: &Self) -> Result<Self> {
        self.check_len(other)?;
        let x = &self.x ^ &other.x;
        let z = &self.z ^ &other.z;
        // Writing Y = iXZ, each factor is phase · prod i^{xz} X^x Z^z; moving
        // Z^{z1} past X^{x2} costs (-1)^{z1 x2}.
        let k = self.x.overlap(&self.z) as i64
            + other.x.overlap(&other.z) as i64
            + 2 * self.z.overlap(&other.x) as i64
            - x.overlap(&z) as i64;
        Ok(Self {
            phase: self.phase * other.phase * Phase::from_exponent(k),
            x,
            z,
        })
    }

    pub fn anticommutes(&self, other: &Self) -> Result<bool> {
        self.check_len(other)?;
        Ok(self.x.dot(&other.z) ^ self.z.dot(&other.x))
    }

    /// Letters only, e.g. `IZYXIIX`.
    pub fn letters_string(&self) -> String {
        (0..self.num_qubits()).map(|q| self.letter(q).as_char()).collect()
    }

    /// Phase prefix followed by the letters, e.g. `+iIZYXIIX`.
    pub fn to_dense(&self) -> String {
        format!("{}{}", self.phase.prefix(), self.letters_string())
    }

    /// Phase prefix followed by indexed non-identity letters, e.g.
    /// `+Z1 Z2 X3 X6`. The identity string renders as `+I`.
    pub fn to_sparse(&self) -> String {
        let tokens: Vec<String> = (0..self.num_qubits())
            .filter_map(|q| match self.letter(q) {
                Pauli::I => None,
                p => Some(format!("{}{q}", p.as_char())),
            })
            .collect();
        if tokens.is_empty() {
            format!("{}I", self.phase.prefix())
        } else {
            format!("{}{}", self.phase.prefix(), tokens.join(" "))
        }
    }
}

impl fmt::Display for PauliString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_dense())
    }
}

impl fmt::Debug for PauliString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PauliString({})", self.to_dense())
    }
}

/// Parses the dense form: an optional phase prefix (`+`, `-`, `+i`, `-i`)
/// then one letter per qubit.
impl FromStr for PauliString {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (phase, rest) = if let Some(r) = s.strip_prefix("+i") {
            (Phase::I, r)
        } else if let Some(r) = s.strip_prefix("-i") {
            (Phase::MINUS_I, r)
        } else if let Some(r) = s.strip_prefix('+') {
            (Phase::ONE, r)
        } else if let Some(r) = s.strip_prefix('-') {
            (Phase::MINUS_ONE, r)
        } else {
            (Phase::ONE, s)
        };
        let letters = rest
            .chars()
            .map(|c| Pauli::from_char(c).ok_or_else(|| Error::Parse(format!("invalid Pauli letter {c:?} in {s:?}"))))
            .collect::<Result<Vec<_>>>()?;
        if letters.is_empty() {
            return Err(Error::Parse(format!("no Pauli letters in {s:?}")));
        }
        Ok(PauliString::from_letters(phase, &letters))
    }
}

/// Signed images of the generators under a Clifford: column `i < n` is
/// `φ(C X_i C†)`, column `n + i` is `φ(C Z_i C†)`. Sign bits use
/// 1 for `+` and 0 for `-`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliffordTableau {
    n: usize,
    columns: Vec<SymplecticVector>,
    signs: BitVector,
}

impl CliffordTableau {
    pub fn identity(n: usize) -> Self {
        let mut columns = Vec::with_capacity(2 * n);
        for i in 0..n {
            let mut v = SymplecticVector::zeros(n);
            v.x.set(i, true);
            columns.push(v);
        }
        for i in 0..n {
            let mut v = SymplecticVector::zeros(n);
            v.z.set(i, true);
            columns.push(v);
        }
        let mut signs = BitVector::zeros(2 * n);
        for k in 0..2 * n {
            signs.set(k, true);
        }
        Self { n, columns, signs }
    }

    /// Tableau of the CNOT circuit `C_G |f> = |G f>`: block diagonal with
    /// blocks `G` and `(G^-1)^T`, all signs positive.
    pub fn from_matrix(g: &BitMatrix) -> Result<Self> {
        let ginv = g.invert()?;
        let n = g.rows();
        let mut tab = Self::identity(n);
        for i in 0..n {
            tab.columns[i] = SymplecticVector {
                x: g.column(i),
                z: BitVector::zeros(n),
            };
            tab.columns[n + i] = SymplecticVector {
                x: BitVector::zeros(n),
                z: ginv.row(i).clone(),
            };
        }
        Ok(tab)
    }

    pub fn num_qubits(&self) -> usize {
        self.n
    }

    pub fn column(&self, k: usize) -> &SymplecticVector {
        &self.columns[k]
    }

    pub fn signs(&self) -> &BitVector {
        &self.signs
    }

    fn signed_image(&self, k: usize) -> PauliString {
        let phase = if self.signs.get(k) { Phase::ONE } else { Phase::MINUS_ONE };
        // a column with both x and z on a qubit stands for Y
        let v = &self.columns[k];
        PauliString::from_symplectic(v, phase)
    }

    pub fn image_of_x(&self, i: usize) -> PauliString {
        self.signed_image(i)
    }

    pub fn image_of_z(&self, i: usize) -> PauliString {
        self.signed_image(self.n + i)
    }

    /// `C p C†`, built from the generator images using
    /// `p = phase · prod_j i^{x_j z_j} X_j^{x_j} Z_j^{z_j}`.
    pub fn conjugate(&self, p: &PauliString) -> Result<PauliString> {
        if p.num_qubits() != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                found: p.num_qubits(),
            });
        }
        let ys = p.x_bits().overlap(p.z_bits()) as i64;
        let mut acc = PauliString::identity(self.n).with_phase(p.phase() * Phase::from_exponent(ys));
        for j in 0..self.n {
            if p.x_bits().get(j) {
                acc = acc.multiply(&self.image_of_x(j))?;
            }
            if p.z_bits().get(j) {
                acc = acc.multiply(&self.image_of_z(j))?;
            }
        }
        Ok(acc)
    }

    /// The `2n x 2n` column matrix, x-parts in rows `0..n`.
    pub fn matrix(&self) -> BitMatrix {
        let n = self.n;
        BitMatrix::from_fn(2 * n, 2 * n, |r, c| {
            let v = &self.columns[c];
            if r < n {
                v.x.get(r)
            } else {
                v.z.get(r - n)
            }
        })
    }

    /// `M^T Ω M = Ω` with `Ω = [[0, I], [I, 0]]`.
    pub fn is_symplectic(&self) -> bool {
        let n = self.n;
        let omega = BitMatrix::from_fn(2 * n, 2 * n, |r, c| r + n == c || c + n == r);
        let m = self.matrix();
        let lhs = m
            .transpose()
            .matmul(&omega)
            .and_then(|t| t.matmul(&m))
            .expect("square blocks");
        lhs == omega
    }

    /// Matrix rows followed by the sign row.
    pub fn to_text(&self) -> String {
        let mut out = self.matrix().to_text();
        out.push_str(&self.signs.to_string());
        out.push('\n');
        out
    }
}

pub fn tableau_from_matrix(g: &BitMatrix) -> Result<CliffordTableau> {
    CliffordTableau::from_matrix(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::forest::build_fenwick;
    use crate::sets::all_sets;

    fn ps(s: &str) -> PauliString {
        s.parse().unwrap()
    }

    #[test]
    fn single_qubit_products() {
        assert_eq!(ps("X").multiply(&ps("X")).unwrap(), ps("+I"));
        assert_eq!(ps("Z").multiply(&ps("X")).unwrap(), ps("+iY"));
        assert_eq!(ps("X").multiply(&ps("Z")).unwrap(), ps("-iY"));
        assert_eq!(ps("X").multiply(&ps("Y")).unwrap(), ps("+iZ"));
        assert_eq!(ps("Y").multiply(&ps("Z")).unwrap(), ps("+iX"));
        assert_eq!(ps("Y").multiply(&ps("Y")).unwrap(), ps("I"));
        assert_eq!(ps("ZX").multiply(&ps("XX")).unwrap(), ps("+iYI"));
        assert!(ps("X").multiply(&ps("XX")).is_err());
    }

    #[test]
    fn from_sets_examples() {
        assert_eq!(PauliString::from_z_x_sets(1, &[], &[0], Phase::ONE).unwrap(), ps("X"));
        let g6 = PauliString::from_z_x_sets(7, &[1, 2], &[3, 6], Phase::ONE).unwrap();
        assert_eq!(g6.to_sparse(), "+Z1 Z2 X3 X6");
        assert_eq!(g6.weight(), 4);
        let g7 = PauliString::from_z_x_sets(7, &[3], &[3, 6], Phase::MINUS_I).unwrap();
        assert_eq!(g7.to_sparse(), "+Y3 X6");
        assert_eq!(g7.weight(), 2);
        assert!(PauliString::from_z_x_sets(3, &[3], &[], Phase::ONE).is_err());
    }

    #[test]
    fn phi_examples() {
        assert_eq!(ps("III").phi(), SymplecticVector::zeros(3));
        let v = ps("XYZ").phi();
        assert_eq!(v.x.to_string(), "110");
        assert_eq!(v.z.to_string(), "011");
        assert_eq!(v.to_bits().to_string(), "110011");
    }

    #[test]
    fn anticommutation_examples() {
        assert!(ps("X").anticommutes(&ps("Z")).unwrap());
        assert!(!ps("XI").anticommutes(&ps("IX")).unwrap());
        assert!(ps("XX").anticommutes(&ps("XY")).unwrap());
        assert!(ps("X").anticommutes(&ps("XX")).is_err());
    }

    #[test]
    fn weight_examples() {
        assert_eq!(ps("IIII").weight(), 0);
        assert_eq!(ps("-iXYZI").weight(), 3);
    }

    #[test]
    fn text_forms() {
        let p = ps("+iIZYXIIX");
        assert_eq!(p.phase(), Phase::I);
        assert_eq!(p.to_dense(), "+iIZYXIIX");
        assert_eq!(p.to_sparse(), "+iZ1 Y2 X3 X6");
        assert_eq!(ps("-II").to_sparse(), "-I");
        assert!("".parse::<PauliString>().is_err());
        assert!("+iQ".parse::<PauliString>().is_err());
    }

    #[test]
    fn cnot_tableau() {
        let g = BitMatrix::parse_text("10\n11\n").unwrap();
        let tab = tableau_from_matrix(&g).unwrap();
        assert_eq!(tab.to_text(), "1000\n1100\n0011\n0001\n1111\n");
        assert!(tab.is_symplectic());
        assert_eq!(tab.conjugate(&ps("XI")).unwrap(), ps("XX"));
        assert_eq!(tab.conjugate(&ps("IZ")).unwrap(), ps("ZZ"));
    }

    #[test]
    fn identity_tableau() {
        let tab = tableau_from_matrix(&BitMatrix::identity(4)).unwrap();
        assert_eq!(tab, CliffordTableau::identity(4));
        assert!(tableau_from_matrix(&BitMatrix::zeros(2, 2)).is_err());
    }

    #[test]
    fn fenwick7_tableau_images_are_update_and_flip_sets() {
        let g = build_fenwick(7).completion_matrix();
        let tab = tableau_from_matrix(&g).unwrap();
        for q in all_sets(&g).unwrap() {
            let x = PauliString::from_z_x_sets(7, &[], q.update.indices(), Phase::ONE).unwrap();
            let z = PauliString::from_z_x_sets(7, q.flip.indices(), &[], Phase::ONE).unwrap();
            assert_eq!(tab.image_of_x(q.mode), x);
            assert_eq!(tab.image_of_z(q.mode), z);
        }
    }
}
