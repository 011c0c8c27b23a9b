//! Brute-force checks on the full `2^n`-dimensional state space.
//!
//! Basis index `b` encodes `|b_0 b_1 ... b_{n-1}>` with qubit 0 as the most
//! significant bit. Pauli strings act on basis states letter by letter
//! (`X|a> = |1-a>`, `Z|a> = (-1)^a |a>`, `Y|a> = i (-1)^a |1-a>`), which is
//! independent of the symplectic product used elsewhere in the crate.

use std::fmt;

use serde::Serialize;

use crate::encoding::{make_encoding, Encoding, Scheme};
use crate::error::{Error, Result};
use crate::gf2::BitVector;
use crate::pauli::{Pauli, PauliString, Phase};
use crate::polynomial::{Coeff, PauliPolynomial};

pub const DEFAULT_DENSE_LIMIT: usize = 10;
pub const MAX_DENSE_LIMIT: usize = 14;

fn check_limit(n: usize, limit: usize) -> Result<()> {
    if n > limit.min(MAX_DENSE_LIMIT) {
        return Err(Error::LimitExceeded {
            n,
            limit: limit.min(MAX_DENSE_LIMIT),
        });
    }
    Ok(())
}

/// A Pauli string compiled for basis-state application.
#[derive(Clone, Copy, Debug)]
struct BasisAction {
    flip: usize,
    sign: usize,
    phase: Phase,
}

impl BasisAction {
    fn new(p: &PauliString) -> Self {
        let n = p.num_qubits();
        let mut flip = 0;
        let mut sign = 0;
        let mut ys = 0;
        for q in 0..n {
            let bit = 1usize << (n - 1 - q);
            match p.letter(q) {
                Pauli::I => {}
                Pauli::X => flip |= bit,
                Pauli::Z => sign |= bit,
                Pauli::Y => {
                    flip |= bit;
                    sign |= bit;
                    ys += 1;
                }
            }
        }
        Self {
            flip,
            sign,
            phase: p.phase() * Phase::from_exponent(ys),
        }
    }

    fn apply(&self, b: usize) -> (Phase, usize) {
        let minus = (b & self.sign).count_ones() as i64;
        (self.phase * Phase::from_exponent(2 * minus), b ^ self.flip)
    }
}

/// Action of a Pauli string on basis state `b`: `P|b> = phase · |b'>`.
pub fn pauli_on_basis(p: &PauliString, b: usize) -> (Phase, usize) {
    BasisAction::new(p).apply(b)
}

#[derive(Clone, PartialEq, Eq)]
pub struct StateVector {
    n: usize,
    amplitudes: Vec<Coeff>,
}

impl StateVector {
    pub fn zero(n: usize) -> Self {
        Self {
            n,
            amplitudes: vec![Coeff::ZERO; 1 << n],
        }
    }

    pub fn basis(n: usize, index: usize) -> Self {
        let mut v = Self::zero(n);
        v.amplitudes[index] = Coeff::ONE;
        v
    }

    /// Basis state from a bit vector, bit `q` giving qubit `q`.
    pub fn from_bits(bits: &BitVector) -> Self {
        Self::basis(bits.len(), bits_to_index(bits))
    }

    pub fn num_qubits(&self) -> usize {
        self.n
    }

    pub fn amplitudes(&self) -> &[Coeff] {
        &self.amplitudes
    }

    pub fn amplitude(&self, index: usize) -> Coeff {
        self.amplitudes[index]
    }

    pub fn is_zero(&self) -> bool {
        self.amplitudes.iter().all(Coeff::is_zero)
    }

    pub fn scale(&self, c: Coeff) -> Self {
        Self {
            n: self.n,
            amplitudes: self.amplitudes.iter().map(|&a| a * c).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                found: other.n,
            });
        }
        Ok(Self {
            n: self.n,
            amplitudes: self.amplitudes.iter().zip(&other.amplitudes).map(|(&a, &b)| a + b).collect(),
        })
    }

    /// Nonzero entries as `(index, amplitude)`.
    pub fn support(&self) -> Vec<(usize, Coeff)> {
        self.amplitudes
            .iter()
            .enumerate()
            .filter(|(_, a)| !a.is_zero())
            .map(|(i, &a)| (i, a))
            .collect()
    }
}

impl fmt::Debug for StateVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .support()
            .into_iter()
            .map(|(i, a)| format!("{a}|{:0width$b}>", i, width = self.n))
            .collect();
        write!(f, "StateVector[{}]", terms.join(" + "))
    }
}

pub fn bits_to_index(bits: &BitVector) -> usize {
    let n = bits.len();
    bits.ones().map(|q| 1usize << (n - 1 - q)).sum()
}

pub fn index_to_bits(n: usize, index: usize) -> BitVector {
    BitVector::from_bools((0..n).map(|q| index >> (n - 1 - q) & 1 == 1))
}

fn check_width(n: usize, found: usize) -> Result<()> {
    if n != found {
        return Err(Error::DimensionMismatch { expected: n, found });
    }
    Ok(())
}

pub fn apply_pauli(p: &PauliString, v: &StateVector) -> Result<StateVector> {
    check_width(v.n, p.num_qubits())?;
    let action = BasisAction::new(p);
    let mut out = StateVector::zero(v.n);
    for (b, &a) in v.amplitudes.iter().enumerate() {
        if a.is_zero() {
            continue;
        }
        let (ph, b2) = action.apply(b);
        out.amplitudes[b2] = out.amplitudes[b2] + a.mul_phase(ph);
    }
    Ok(out)
}

pub fn apply_polynomial(p: &PauliPolynomial, v: &StateVector) -> Result<StateVector> {
    check_width(v.n, p.num_qubits())?;
    let mut out = StateVector::zero(v.n);
    for (c, s) in p.terms() {
        out = out.add(&apply_pauli(s, v)?.scale(*c))?;
    }
    Ok(out)
}

/// A Fock basis state `± |f>`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FermionBasisState {
    pub occupation: BitVector,
    pub negative: bool,
}

impl FermionBasisState {
    pub fn new(occupation: BitVector) -> Self {
        Self {
            occupation,
            negative: false,
        }
    }

    pub fn sign(&self) -> i64 {
        if self.negative {
            -1
        } else {
            1
        }
    }
}

/// `a_j^†` (if `dagger`) or `a_j` on a Fock basis state: `None` when the
/// mode is already full (resp. empty), otherwise the occupation flips and
/// the sign picks up `(-1)^{f_0 + ... + f_{j-1}}`.
pub fn fermionic_apply(j: usize, dagger: bool, s: &FermionBasisState) -> Result<Option<FermionBasisState>> {
    let n = s.occupation.len();
    if j >= n {
        return Err(Error::IndexOutOfRange { index: j, size: n });
    }
    if s.occupation.get(j) == dagger {
        return Ok(None);
    }
    let parity = (0..j).filter(|&i| s.occupation.get(i)).count() % 2 == 1;
    let mut occupation = s.occupation.clone();
    occupation.flip(j);
    Ok(Some(FermionBasisState {
        occupation,
        negative: s.negative ^ parity,
    }))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub k: String,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub check: String,
    pub scheme: String,
    pub n: usize,
    pub pass: bool,
    #[serde(rename = "firstViolation")]
    pub first_violation: Option<Violation>,
}

impl VerificationReport {
    fn new(check: &str, scheme: &str, n: usize, first_violation: Option<Violation>) -> Self {
        Self {
            check: check.into(),
            scheme: scheme.into(),
            n,
            pass: first_violation.is_none(),
            first_violation,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }
}

impl fmt::Display for VerificationReport {
    /// `check_car fenwick n=7 PASS` or `... FAIL k=(0,3) detail=...`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} n={} ", self.check, self.scheme, self.n)?;
        match &self.first_violation {
            None => f.write_str("PASS"),
            Some(v) => write!(f, "FAIL k={} detail={}", v.k, v.detail),
        }
    }
}

fn violation(k: String, detail: String) -> Option<Violation> {
    Some(Violation { k, detail })
}

/// `{Γ_j, Γ_k} = 2 δ_jk I`, tested by applying both orderings to every
/// basis state. Pairs are scanned in lexicographic order and the first
/// failure is reported.
pub fn check_car_strings(scheme: &str, strings: &[PauliString], limit: usize) -> Result<VerificationReport> {
    let n = strings.first().map_or(0, PauliString::num_qubits);
    check_limit(n, limit)?;
    for s in strings {
        check_width(n, s.num_qubits())?;
    }
    let actions: Vec<BasisAction> = strings.iter().map(BasisAction::new).collect();
    let dim = 1usize << n;
    for (j, aj) in actions.iter().enumerate() {
        for (k, ak) in actions.iter().enumerate().skip(j) {
            for b in 0..dim {
                let (p1, b1) = ak.apply(b);
                let (p2, b_jk) = aj.apply(b1);
                let (p3, b3) = aj.apply(b);
                let (p4, b_kj) = ak.apply(b3);
                let first = Coeff::from_phase(p1 * p2);
                let second = Coeff::from_phase(p3 * p4);
                let ok = if j == k {
                    b_jk == b && first + second == Coeff::new(2, 0, 0)
                } else {
                    b_jk == b_kj && (first + second).is_zero()
                };
                if !ok {
                    let expected = if j == k { "2I" } else { "0" };
                    return Ok(VerificationReport::new(
                        "check_car",
                        scheme,
                        n,
                        violation(
                            format!("({j},{k})"),
                            format!("anticommutator is not {expected} on basis state {b:0n$b}"),
                        ),
                    ));
                }
            }
        }
    }
    Ok(VerificationReport::new("check_car", scheme, n, None))
}

pub fn check_car(e: &Encoding, limit: usize) -> Result<VerificationReport> {
    check_car_strings(e.scheme().name(), e.majoranas(), limit)
}

/// The same relations on the symplectic representation: every string
/// Hermitian, every distinct pair anticommuting. No size limit.
pub fn check_car_symplectic(scheme: &str, strings: &[PauliString]) -> VerificationReport {
    let n = strings.first().map_or(0, PauliString::num_qubits);
    let report = |first| VerificationReport::new("check_car_symplectic", scheme, n, first);
    for (j, s) in strings.iter().enumerate() {
        if s.num_qubits() != n {
            return report(violation(format!("({j})"), "string width differs".into()));
        }
        if !s.is_hermitian() {
            return report(violation(format!("({j},{j})"), format!("{s} is not Hermitian")));
        }
    }
    for (j, a) in strings.iter().enumerate() {
        for (k, b) in strings.iter().enumerate().skip(j + 1) {
            if !a.anticommutes(b).expect("widths checked") {
                return report(violation(format!("({j},{k})"), format!("{a} and {b} commute")));
            }
        }
    }
    report(None)
}

fn require_matrix(e: &Encoding, what: &str) -> Result<()> {
    if e.matrix().is_none() {
        return Err(Error::UnsupportedScheme {
            scheme: e.scheme().to_string(),
            reason: format!("{what} needs a matrix-based scheme"),
        });
    }
    Ok(())
}

/// Encoded basis index `|G f>` for every occupation index `f`.
fn encoded_indices(e: &Encoding) -> Vec<usize> {
    let n = e.n();
    (0..1usize << n)
        .map(|f| {
            let q = e.encode_state(&index_to_bits(n, f)).expect("width matches");
            bits_to_index(&q)
        })
        .collect()
}

/// For every occupation vector `f` and mode `j`, the encoded creation and
/// annihilation operators act on `|G f>` exactly like `a_j^†`, `a_j` act on
/// `|f>`, zero results included.
pub fn check_fock_action(e: &Encoding, limit: usize) -> Result<VerificationReport> {
    require_matrix(e, "the Fock action check")?;
    let n = e.n();
    check_limit(n, limit)?;
    let encoded = encoded_indices(e);
    let mut ops = Vec::with_capacity(2 * n);
    for j in 0..n {
        ops.push((j, true, e.creation(j)?));
        ops.push((j, false, e.annihilation(j)?));
    }
    for f in 0..1usize << n {
        let input = StateVector::basis(n, encoded[f]);
        let fock = FermionBasisState::new(index_to_bits(n, f));
        for (j, dagger, op) in &ops {
            let got = apply_polynomial(op, &input)?;
            let expected = match fermionic_apply(*j, *dagger, &fock)? {
                None => StateVector::zero(n),
                Some(s) => StateVector::basis(n, encoded[bits_to_index(&s.occupation)])
                    .scale(Coeff::new(s.sign(), 0, 0)),
            };
            if got != expected {
                let name = if *dagger { "creation" } else { "annihilation" };
                return Ok(VerificationReport::new(
                    "check_fock_action",
                    e.scheme().name(),
                    n,
                    violation(
                        format!("{j}"),
                        format!("{name} on f={f:0n$b}: got {got:?}, expected {expected:?}"),
                    ),
                ));
            }
        }
    }
    Ok(VerificationReport::new("check_fock_action", e.scheme().name(), n, None))
}

/// `n_j |G f> = f_j |G f>` for every `f` and `j`.
pub fn check_number_operator(e: &Encoding, limit: usize) -> Result<VerificationReport> {
    require_matrix(e, "the number operator check")?;
    let n = e.n();
    check_limit(n, limit)?;
    let encoded = encoded_indices(e);
    let number_ops: Vec<_> = (0..n).map(|j| e.number_op(j)).collect::<Result<_>>()?;
    for f in 0..1usize << n {
        let input = StateVector::basis(n, encoded[f]);
        for (j, op) in number_ops.iter().enumerate() {
            let got = apply_polynomial(op, &input)?;
            let occupied = f >> (n - 1 - j) & 1 == 1;
            let expected = if occupied { input.clone() } else { StateVector::zero(n) };
            if got != expected {
                return Ok(VerificationReport::new(
                    "check_number_operator",
                    e.scheme().name(),
                    n,
                    violation(format!("{j}"), format!("f={f:0n$b}: got {got:?}")),
                ));
            }
        }
    }
    Ok(VerificationReport::new("check_number_operator", e.scheme().name(), n, None))
}

/// Jordan-Wigner Majoranas written out letter by letter.
pub fn jordan_wigner_majorana(n: usize, k: usize) -> PauliString {
    let j = k / 2;
    let mut letters = vec![Pauli::I; n];
    for l in letters.iter_mut().take(j) {
        *l = Pauli::Z;
    }
    letters[j] = if k.is_multiple_of(2) { Pauli::X } else { Pauli::Y };
    PauliString::from_letters(Phase::ONE, &letters)
}

/// `C_G Γ_k^{JW} C_G^† = Γ_k` for every `k`, where `C_G |f> = |G f>` is a
/// basis permutation. Both sides are applied to every basis state.
pub fn check_conjugation(e: &Encoding, limit: usize) -> Result<VerificationReport> {
    require_matrix(e, "the conjugation check")?;
    let n = e.n();
    check_limit(n, limit)?;
    let forward = encoded_indices(e);
    let mut backward = vec![0; forward.len()];
    for (f, &q) in forward.iter().enumerate() {
        backward[q] = f;
    }
    for k in 0..2 * n {
        let jw = BasisAction::new(&jordan_wigner_majorana(n, k));
        let target = BasisAction::new(e.majorana(k)?);
        for b in 0..1usize << n {
            let (p1, f) = jw.apply(backward[b]);
            let (p2, b2) = target.apply(b);
            if p1 != p2 || forward[f] != b2 {
                return Ok(VerificationReport::new(
                    "check_conjugation",
                    e.scheme().name(),
                    n,
                    violation(
                        format!("{k}"),
                        format!(
                            "on basis state {b:0n$b}: conjugated JW gives {}|{:0n$b}>, encoding gives {}|{b2:0n$b}>",
                            p1.prefix(),
                            forward[f],
                            p2.prefix()
                        ),
                    ),
                ));
            }
        }
    }
    Ok(VerificationReport::new("check_conjugation", e.scheme().name(), n, None))
}

/// Dense checks that apply to `e` (all of them for matrix-based schemes,
/// anticommutation only for ternary).
pub fn dense_suite(e: &Encoding, limit: usize) -> Result<Vec<VerificationReport>> {
    let mut out = vec![check_car(e, limit)?];
    if e.matrix().is_some() {
        out.push(check_fock_action(e, limit)?);
        out.push(check_number_operator(e, limit)?);
        out.push(check_conjugation(e, limit)?);
    }
    Ok(out)
}

/// Convenience for tests and the CLI: build and run the dense suite.
pub fn dense_suite_for(scheme: Scheme, n: usize, limit: usize) -> Result<Vec<VerificationReport>> {
    dense_suite(&make_encoding(scheme, n)?, limit)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ps(s: &str) -> PauliString {
        s.parse().unwrap()
    }

    fn bits(s: &str) -> BitVector {
        s.parse().unwrap()
    }

    #[test]
    fn basis_order_is_msb_first() {
        assert_eq!(bits_to_index(&bits("100")), 4);
        assert_eq!(index_to_bits(3, 1), bits("001"));
        let v = apply_pauli(&ps("XI"), &StateVector::basis(2, 0)).unwrap();
        assert_eq!(v, StateVector::basis(2, 2));
    }

    #[test]
    fn single_qubit_actions() {
        let zero = StateVector::basis(1, 0);
        let one = StateVector::basis(1, 1);
        assert_eq!(apply_pauli(&ps("I"), &one).unwrap(), one);
        assert_eq!(apply_pauli(&ps("X"), &zero).unwrap(), one);
        assert_eq!(apply_pauli(&ps("Z"), &one).unwrap(), one.scale(Coeff::new(-1, 0, 0)));
        assert_eq!(apply_pauli(&ps("Y"), &zero).unwrap(), one.scale(Coeff::new(0, 1, 0)));
        assert_eq!(apply_pauli(&ps("Y"), &one).unwrap(), zero.scale(Coeff::new(0, -1, 0)));
        let raise = PauliPolynomial::from_terms(1, [(Coeff::HALF, ps("X")), (Coeff::new(0, -1, 1), ps("Y"))]).unwrap();
        assert_eq!(apply_polynomial(&raise, &zero).unwrap(), one);
        assert!(apply_polynomial(&raise, &one).unwrap().is_zero());
        assert!(apply_pauli(&ps("XX"), &zero).is_err());
    }

    #[test]
    fn string_then_adjoint_is_identity() {
        let p = ps("-iXYZY");
        for b in 0..16 {
            let v = StateVector::basis(4, b);
            let w = apply_pauli(&p.adjoint(), &apply_pauli(&p, &v).unwrap()).unwrap();
            assert_eq!(w, v);
        }
    }

    #[test]
    fn dense_action_agrees_with_symplectic_product() {
        let a = ps("+XYZIY");
        let b = ps("-iZZXYI");
        let ab = a.multiply(&b).unwrap();
        for idx in 0..32 {
            let v = StateVector::basis(5, idx);
            let lhs = apply_pauli(&a, &apply_pauli(&b, &v).unwrap()).unwrap();
            assert_eq!(lhs, apply_pauli(&ab, &v).unwrap());
        }
    }

    #[test]
    fn fermionic_examples() {
        let s = FermionBasisState::new(bits("000"));
        let r = fermionic_apply(0, true, &s).unwrap().unwrap();
        assert_eq!(r, FermionBasisState::new(bits("100")));
        let s = FermionBasisState::new(bits("10011"));
        assert_eq!(fermionic_apply(3, true, &s).unwrap(), None);
        let r = fermionic_apply(1, true, &s).unwrap().unwrap();
        assert_eq!(r.occupation, bits("11011"));
        assert!(r.negative);
        assert!(fermionic_apply(5, true, &s).is_err());
    }

    #[test]
    fn fermionic_anticommutation() {
        // a_j a_k^† + a_k^† a_j = δ_jk on every basis state
        let n = 5;
        for f in 0..1usize << n {
            let s = FermionBasisState::new(index_to_bits(n, f));
            for j in 0..n {
                for k in 0..n {
                    let mut sum: Vec<(BitVector, i64)> = Vec::new();
                    let orders = [((k, true), (j, false)), ((j, false), (k, true))];
                    for (first, second) in orders {
                        if let Some(t) = fermionic_apply(first.0, first.1, &s).unwrap() {
                            if let Some(u) = fermionic_apply(second.0, second.1, &t).unwrap() {
                                match sum.iter_mut().find(|(o, _)| *o == u.occupation) {
                                    Some(e) => e.1 += u.sign(),
                                    None => sum.push((u.occupation.clone(), u.sign())),
                                }
                            }
                        }
                    }
                    sum.retain(|(_, c)| *c != 0);
                    if j == k {
                        assert_eq!(sum, vec![(s.occupation.clone(), 1)]);
                    } else {
                        assert!(sum.is_empty());
                    }
                }
            }
        }
    }

    #[test]
    fn car_passes_and_catches_corruption() {
        let e = make_encoding(Scheme::JordanWigner, 3).unwrap();
        assert!(check_car(&e, 10).unwrap().pass);
        let e = make_encoding(Scheme::Sierpinski, 9).unwrap();
        assert!(check_car(&e, 10).unwrap().pass);

        let mut bad = e.majoranas().to_vec();
        let q = (0..9).find(|&q| bad[0].letter(q) == Pauli::I).unwrap();
        bad[0].set_letter(q, Pauli::Z);
        let rep = check_car_strings("corrupted", &bad, 10).unwrap();
        assert!(!rep.pass);
        assert!(rep.to_string().starts_with("check_car corrupted n=9 FAIL k=(0,"));
        assert!(!check_car_symplectic("corrupted", &bad).pass);
    }

    #[test]
    fn limit_is_enforced() {
        let e = make_encoding(Scheme::JordanWigner, 11).unwrap();
        assert!(matches!(check_car(&e, 10), Err(Error::LimitExceeded { n: 11, limit: 10 })));
        let e = make_encoding(Scheme::JordanWigner, 15).unwrap();
        assert!(matches!(check_car(&e, 20), Err(Error::LimitExceeded { limit: 14, .. })));
    }

    #[test]
    fn fock_action_jw_example() {
        // A_1^† |10> = -|11>
        let e = make_encoding(Scheme::JordanWigner, 2).unwrap();
        let out = apply_polynomial(&e.creation(1).unwrap(), &StateVector::from_bits(&bits("10"))).unwrap();
        assert_eq!(out, StateVector::from_bits(&bits("11")).scale(Coeff::new(-1, 0, 0)));
    }

    #[test]
    fn fenwick7_creation3_basis_action() {
        let e = make_encoding(Scheme::Fenwick, 7).unwrap();
        let a3 = e.creation(3).unwrap();
        for b in 0..128 {
            let q = index_to_bits(7, b);
            let out = apply_polynomial(&a3, &StateVector::basis(7, b)).unwrap();
            // f_3 = q_1 + q_2 + q_3
            if q.get(1) ^ q.get(2) ^ q.get(3) {
                assert!(out.is_zero());
                continue;
            }
            let mut flipped = q.clone();
            flipped.flip(3);
            flipped.flip(6);
            let sign = if q.get(1) ^ q.get(2) { -1 } else { 1 };
            assert_eq!(out, StateVector::from_bits(&flipped).scale(Coeff::new(sign, 0, 0)));
        }
    }

    #[test]
    fn dense_suite_small() {
        for s in Scheme::BUILT_IN {
            for n in 1..=5 {
                for rep in dense_suite_for(s, n, 10).unwrap() {
                    assert!(rep.pass, "{rep}");
                }
            }
        }
    }

    #[test]
    fn conjugation_cnot() {
        let g = crate::gf2::BitMatrix::parse_text("10\n11\n").unwrap();
        let e = Encoding::from_matrix(g).unwrap();
        assert_eq!(e.majorana(0).unwrap().letters_string(), "XX");
        assert!(check_conjugation(&e, 10).unwrap().pass);
    }

    #[test]
    fn ternary_has_no_fock_check() {
        let e = make_encoding(Scheme::Ternary, 3).unwrap();
        assert!(matches!(check_fock_action(&e, 10), Err(Error::UnsupportedScheme { .. })));
        assert_eq!(dense_suite(&e, 10).unwrap().len(), 1);
    }

    #[test]
    fn report_json() {
        let rep = VerificationReport::new("check_car", "jw", 2, None);
        assert_eq!(
            rep.to_json(),
            r#"{"check":"check_car","scheme":"jw","n":2,"pass":true,"firstViolation":null}"#
        );
        assert_eq!(rep.to_string(), "check_car jw n=2 PASS");
    }
}
