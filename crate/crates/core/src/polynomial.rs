//! Exact linear combinations of Pauli strings.
//!
//! Coefficients are Gaussian dyadic rationals `(re + i·im) / 2^k`, which is
//! closed under everything creation, annihilation and number operators
//! need, so every comparison here is exact.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::pauli::{Phase, PauliString};

/// `(re + i·im) / 2^log2_den`, kept in lowest terms.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct Coeff {
    pub re_num: i64,
    pub im_num: i64,
    pub log2_den: u32,
}

impl Coeff {
    pub const ZERO: Coeff = Coeff {
        re_num: 0,
        im_num: 0,
        log2_den: 0,
    };
    pub const ONE: Coeff = Coeff {
        re_num: 1,
        im_num: 0,
        log2_den: 0,
    };
    pub const HALF: Coeff = Coeff {
        re_num: 1,
        im_num: 0,
        log2_den: 1,
    };

    pub fn new(re_num: i64, im_num: i64, log2_den: u32) -> Coeff {
        let mut c = Coeff {
            re_num,
            im_num,
            log2_den,
        };
        c.normalize();
        c
    }

    pub fn from_phase(p: Phase) -> Coeff {
        let (re, im) = p.to_complex();
        Coeff::new(re, im, 0)
    }

    fn normalize(&mut self) {
        if self.re_num == 0 && self.im_num == 0 {
            self.log2_den = 0;
            return;
        }
        while self.log2_den > 0 && self.re_num % 2 == 0 && self.im_num % 2 == 0 {
            self.re_num /= 2;
            self.im_num /= 2;
            self.log2_den -= 1;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.re_num == 0 && self.im_num == 0
    }

    pub fn conj(self) -> Coeff {
        Coeff::new(self.re_num, -self.im_num, self.log2_den)
    }

    pub fn mul_phase(self, p: Phase) -> Coeff {
        self * Coeff::from_phase(p)
    }

    fn scaled_to(self, log2_den: u32) -> (i64, i64) {
        let shift = log2_den - self.log2_den;
        (self.re_num << shift, self.im_num << shift)
    }
}

impl Add for Coeff {
    type Output = Coeff;

    fn add(self, rhs: Coeff) -> Coeff {
        let den = self.log2_den.max(rhs.log2_den);
        let (a, b) = self.scaled_to(den);
        let (c, d) = rhs.scaled_to(den);
        Coeff::new(a + c, b + d, den)
    }
}

impl Neg for Coeff {
    type Output = Coeff;

    fn neg(self) -> Coeff {
        Coeff::new(-self.re_num, -self.im_num, self.log2_den)
    }
}

impl Sub for Coeff {
    type Output = Coeff;

    fn sub(self, rhs: Coeff) -> Coeff {
        self + (-rhs)
    }
}

impl Mul for Coeff {
    type Output = Coeff;

    fn mul(self, rhs: Coeff) -> Coeff {
        let re = self.re_num * rhs.re_num - self.im_num * rhs.im_num;
        let im = self.re_num * rhs.im_num + self.im_num * rhs.re_num;
        Coeff::new(re, im, self.log2_den + rhs.log2_den)
    }
}

impl fmt::Display for Coeff {
    /// `1/2`, `-i/2`, `(1+i)/4`, `3`, `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let num = match (self.re_num, self.im_num) {
            (0, 0) => "0".to_string(),
            (re, 0) => re.to_string(),
            (0, 1) => "i".to_string(),
            (0, -1) => "-i".to_string(),
            (0, im) => format!("{im}i"),
            (re, im) => {
                let sign = if im < 0 { '-' } else { '+' };
                let mag = im.unsigned_abs();
                if mag == 1 {
                    format!("({re}{sign}i)")
                } else {
                    format!("({re}{sign}{mag}i)")
                }
            }
        };
        if self.log2_den == 0 {
            f.write_str(&num)
        } else {
            write!(f, "{num}/{}", 1u64 << self.log2_den)
        }
    }
}

impl fmt::Debug for Coeff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Coeff({self})")
    }
}

/// A sum of coefficient-weighted Pauli strings. Strings are stored with
/// phase `+1` (their phase is folded into the coefficient), equal strings
/// are merged, zero terms dropped, and terms sorted by letters.
#[derive(Clone, PartialEq, Eq)]
pub struct PauliPolynomial {
    n: usize,
    terms: Vec<(Coeff, PauliString)>,
}

impl PauliPolynomial {
    pub fn zero(n: usize) -> Self {
        Self { n, terms: Vec::new() }
    }

    pub fn from_terms<I>(n: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Coeff, PauliString)>,
    {
        let mut merged: BTreeMap<String, (Coeff, PauliString)> = BTreeMap::new();
        for (c, s) in terms {
            if s.num_qubits() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: s.num_qubits(),
                });
            }
            let c = c.mul_phase(s.phase());
            let s = s.with_phase(Phase::ONE);
            let entry = merged
                .entry(s.letters_string())
                .or_insert((Coeff::ZERO, s));
            entry.0 = entry.0 + c;
        }
        let terms = merged.into_values().filter(|(c, _)| !c.is_zero()).collect();
        Ok(Self { n, terms })
    }

    pub fn num_qubits(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> &[(Coeff, PauliString)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient_of(&self, letters: &str) -> Coeff {
        self.terms
            .iter()
            .find(|(_, s)| s.letters_string() == letters)
            .map(|(c, _)| *c)
            .unwrap_or(Coeff::ZERO)
    }

    pub fn adjoint(&self) -> Self {
        Self {
            n: self.n,
            terms: self.terms.iter().map(|(c, s)| (c.conj(), s.clone())).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        Self::from_terms(self.n, self.terms.iter().chain(&other.terms).cloned())
    }

    pub fn scale(&self, c: Coeff) -> Self {
        Self::from_terms(self.n, self.terms.iter().map(|(a, s)| (*a * c, s.clone())))
            .expect("same width")
    }

    pub fn multiply(&self, other: &Self) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                found: other.n,
            });
        }
        let mut products = Vec::with_capacity(self.terms.len() * other.terms.len());
        for (a, p) in &self.terms {
            for (b, q) in &other.terms {
                products.push((*a * *b, p.multiply(q)?));
            }
        }
        Self::from_terms(self.n, products)
    }
}

impl fmt::Display for PauliPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (c, s)) in self.terms.iter().enumerate() {
            if k > 0 {
                f.write_str(" ; ")?;
            }
            write!(f, "{c} {}", &s.to_sparse()[1..])?;
        }
        Ok(())
    }
}

impl fmt::Debug for PauliPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PauliPolynomial[{self}]")
    }
}
