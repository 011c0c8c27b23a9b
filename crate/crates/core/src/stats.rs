//! Pauli weight accounting.
//!
//! Averages are exact rationals. Two conventions are supported: the mean
//! over the `2n` Majoranas, and the mean over those plus the string that
//! completes them to `2n + 1` mutually anticommuting operators (their
//! product). The second one is how a full ternary tree is usually counted.

use std::fmt::{self, Write as _};
use std::str::FromStr;

use num_rational::Ratio;
use serde::Serialize;

use crate::encoding::{make_encoding, Encoding, Scheme};
use crate::error::{Error, Result};
use crate::forest::Forest;
use crate::gf2::BitVector;
use crate::sets::IndexSetQuad;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum AverageConvention {
    Majoranas2n,
    Extended2nPlus1,
}

impl AverageConvention {
    pub const BOTH: [AverageConvention; 2] =
        [AverageConvention::Majoranas2n, AverageConvention::Extended2nPlus1];

    pub fn name(self) -> &'static str {
        match self {
            AverageConvention::Majoranas2n => "majoranas2n",
            AverageConvention::Extended2nPlus1 => "extended2n+1",
        }
    }
}

impl fmt::Display for AverageConvention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for AverageConvention {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        AverageConvention::BOTH
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown averaging convention `{s}`")))
    }
}

fn mean(total: usize, count: usize) -> Ratio<u64> {
    Ratio::new(total as u64, count as u64)
}

pub fn majorana_weights(e: &Encoding) -> Vec<usize> {
    e.majoranas().iter().map(|m| m.weight()).collect()
}

pub fn average_weight(e: &Encoding, convention: AverageConvention) -> Ratio<u64> {
    let total: usize = majorana_weights(e).iter().sum();
    match convention {
        AverageConvention::Majoranas2n => mean(total, 2 * e.n()),
        AverageConvention::Extended2nPlus1 => {
            mean(total + e.completing_operator().weight(), 2 * e.n() + 1)
        }
    }
}

/// Average weight straight from the index sets, without building strings:
/// `|Γ_{2i}| = |U(i) ∪ P(i)|`, `|Γ_{2i+1}| = |U(i) ∪ R(i)|`, and the product
/// of all Majoranas is `Z` on the symmetric difference of every `F(i)`.
pub fn average_from_sets(sets: &[IndexSetQuad], convention: AverageConvention) -> Ratio<u64> {
    let n = sets.len();
    let mut total = 0;
    let mut all_flips = BitVector::zeros(n);
    for q in sets {
        total += (q.update.mask() | q.parity.mask()).count_ones();
        total += (q.update.mask() | q.remainder.mask()).count_ones();
        all_flips.xor_assign(q.flip.mask());
    }
    match convention {
        AverageConvention::Majoranas2n => mean(total, 2 * n),
        AverageConvention::Extended2nPlus1 => mean(total + all_flips.count_ones(), 2 * n + 1),
    }
}

/// Same as [`average_from_sets`] for the completion of a forest, read off
/// the forest directly. There `U(i)` is `i` with its ancestors, `F(i)` is
/// `i` with its children, and a node lies in an odd number of flip sets
/// exactly when it is a root, so the product of all Majoranas is `Z` on the
/// roots. Runs in `O(n · depth)`, which keeps greedy pruning cheap.
pub fn forest_average(f: &Forest, convention: AverageConvention) -> Ratio<u64> {
    let n = f.len();
    let mut parity = vec![false; n];
    let mut parity_len = 0usize;
    let mut total = 0;
    for i in 0..n {
        let mut update = f.ancestors(i);
        update.push(i);
        let flip = |k: usize| k == i || f.parent(k) == Some(i);
        // |U ∪ P|
        total += parity_len + update.iter().filter(|&&k| !parity[k]).count();
        // |U ∪ R| with R = P △ F
        let mut remainder_len = parity_len;
        for k in std::iter::once(i).chain(f.children(i).iter().copied()) {
            if parity[k] {
                remainder_len -= 1;
            } else {
                remainder_len += 1;
            }
        }
        total += remainder_len + update.iter().filter(|&&k| parity[k] == flip(k)).count();
        for k in std::iter::once(i).chain(f.children(i).iter().copied()) {
            parity[k] = !parity[k];
            if parity[k] {
                parity_len += 1;
            } else {
                parity_len -= 1;
            }
        }
    }
    match convention {
        AverageConvention::Majoranas2n => mean(total, 2 * n),
        AverageConvention::Extended2nPlus1 => mean(total + f.roots().len(), 2 * n + 1),
    }
}

/// Largest `k` with `(3^k - 1) / 2 <= n`: a ternary tree on `n` nodes has
/// `k` complete levels.
fn complete_levels(n: usize) -> u32 {
    let mut k = 0;
    let mut full = 0usize;
    loop {
        let next = 3 * full + 1;
        if next > n {
            return k;
        }
        full = next;
        k += 1;
    }
}

/// Average weight of the `2n + 1` ternary tree strings in closed form:
/// `((2k + 3) n + k - 3 (3^k - 1) / 2) / (2n + 1)` where the tree has `k`
/// complete levels.
pub fn ternary_average(n: usize) -> Ratio<u64> {
    assert!(n >= 1, "ternary_average needs n >= 1");
    let k = complete_levels(n) as u64;
    let full = (3u64.pow(k as u32) - 1) / 2;
    let n = n as u64;
    Ratio::new((2 * k + 3) * n + k - 3 * full, 2 * n + 1)
}

/// Total path weight `T_n` by the recurrence `T_n = T_{n-1} + 2k + 3`,
/// where the node added at step `n` converts a leaf at depth `k`
/// into three leaves at depth `k + 1`.
pub fn ternary_totals(n_max: usize) -> Vec<u64> {
    let mut totals = Vec::with_capacity(n_max + 1);
    totals.push(0);
    for n in 1..=n_max {
        let k = complete_levels(n - 1) as u64;
        totals.push(totals[n - 1] + 2 * k + 3);
    }
    totals
}

pub fn ternary_average_recurrence(n: usize) -> Ratio<u64> {
    assert!(n >= 1, "ternary_average_recurrence needs n >= 1");
    Ratio::new(ternary_totals(n)[n], 2 * n as u64 + 1)
}

/// `|U(i) ∪ P(i)| + 1`, an upper bound on the weight of both Majoranas of
/// mode `i`.
pub fn worst_case_weight(e: &Encoding, i: usize) -> Result<usize> {
    let sets = e.sets().ok_or_else(|| Error::UnsupportedScheme {
        scheme: e.scheme().to_string(),
        reason: "worst-case weights are defined through the index sets".into(),
    })?;
    let q = sets.get(i).ok_or(Error::IndexOutOfRange {
        index: i,
        size: e.n(),
    })?;
    Ok((q.update.mask() | q.parity.mask()).count_ones() + 1)
}

/// `log_3(2n)`: no encoding of `n` modes into `n` qubits has a smaller
/// average Majorana weight.
pub fn weight_lower_bound(n: usize) -> f64 {
    (2.0 * n as f64).ln() / 3f64.ln()
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct WeightReport {
    pub n: usize,
    pub scheme: String,
    pub weights: Vec<usize>,
    pub completing_weight: usize,
    #[serde(serialize_with = "ser_ratio")]
    pub average: Ratio<u64>,
    #[serde(serialize_with = "ser_ratio")]
    pub extended_average: Ratio<u64>,
    pub max: usize,
    pub worst_case_per_mode: Option<Vec<usize>>,
    pub lower_bound: f64,
}

fn ser_ratio<S: serde::Serializer>(r: &Ratio<u64>, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&r.to_string())
}

fn ratio_to_f64(r: &Ratio<u64>) -> f64 {
    *r.numer() as f64 / *r.denom() as f64
}

impl WeightReport {
    pub fn average_for(&self, convention: AverageConvention) -> Ratio<u64> {
        match convention {
            AverageConvention::Majoranas2n => self.average,
            AverageConvention::Extended2nPlus1 => self.extended_average,
        }
    }
}

pub fn weight_report(e: &Encoding) -> WeightReport {
    let weights = majorana_weights(e);
    let completing_weight = e.completing_operator().weight();
    let worst_case_per_mode = e
        .sets()
        .map(|_| (0..e.n()).map(|i| worst_case_weight(e, i).expect("valid mode")).collect());
    let total: usize = weights.iter().sum();
    let n = e.n();
    WeightReport {
        n,
        scheme: e.scheme().to_string(),
        max: weights.iter().copied().max().unwrap_or(0),
        average: mean(total, 2 * n),
        extended_average: mean(total + completing_weight, 2 * n + 1),
        weights,
        completing_weight,
        worst_case_per_mode,
        lower_bound: weight_lower_bound(n),
    }
}

/// One report per `(scheme, n)`, schemes in the given order and `n`
/// ascending within each scheme.
pub fn compare_table(schemes: &[Scheme], n_range: std::ops::RangeInclusive<usize>) -> Result<Vec<WeightReport>> {
    let mut out = Vec::new();
    for &s in schemes {
        for n in n_range.clone() {
            out.push(weight_report(&make_encoding(s, n)?));
        }
    }
    Ok(out)
}

pub const CSV_HEADER: &str =
    "scheme,n,avg_num,avg_den,avg_real,max,bound,ext_avg_num,ext_avg_den,ext_avg_real";

pub fn render_csv(reports: &[WeightReport]) -> String {
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    for r in reports {
        writeln!(
            out,
            "{},{},{},{},{:.6},{},{:.6},{},{},{:.6}",
            r.scheme,
            r.n,
            r.average.numer(),
            r.average.denom(),
            ratio_to_f64(&r.average),
            r.max,
            r.lower_bound,
            r.extended_average.numer(),
            r.extended_average.denom(),
            ratio_to_f64(&r.extended_average),
        )
        .unwrap();
    }
    out
}

pub fn render_text(reports: &[WeightReport]) -> String {
    let mut out = format!(
        "{:<18} {:>5} {:>12} {:>10} {:>12} {:>10} {:>4} {:>8}\n",
        "scheme", "n", "avg", "avg_real", "ext_avg", "ext_real", "max", "bound"
    );
    for r in reports {
        writeln!(
            out,
            "{:<18} {:>5} {:>12} {:>10.4} {:>12} {:>10.4} {:>4} {:>8.4}",
            r.scheme,
            r.n,
            r.average.to_string(),
            ratio_to_f64(&r.average),
            r.extended_average.to_string(),
            ratio_to_f64(&r.extended_average),
            r.max,
            r.lower_bound,
        )
        .unwrap();
    }
    out
}
