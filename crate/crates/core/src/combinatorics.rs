//! Partitions, binomial conventions, variety dimensions and the dominance order.
//!
//! All counts that can grow with `n` and `d` are exact [`BigInt`]s. Small
//! structural integers (number of variables, parts, secant index) are `usize`.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};
use crate::predictor::PredictionReport;

/// Binomial coefficient with the zero conventions used throughout the crate:
/// `C(a, b) = 0` whenever `a < 0`, `b < 0` or `b > a`.
pub fn binom(a: i64, b: i64) -> BigInt {
    if a < 0 || b < 0 || b > a {
        return BigInt::zero();
    }
    let b = b.min(a - b);
    let mut acc = BigInt::one();
    for i in 0..b {
        // acc * (a - i) is divisible by (i + 1) at every step
        acc = acc * (a - i) / (i + 1);
    }
    acc
}

/// `C(a, b)` for index-sized arguments, `None` on overflow. Used for matrix
/// shapes where the result has to fit in memory anyway.
pub fn binom_usize(a: usize, b: usize) -> Option<usize> {
    if b > a {
        return Some(0);
    }
    let b = b.min(a - b);
    let mut acc: u128 = 1;
    for i in 0..b {
        acc = acc.checked_mul((a - i) as u128)? / (i as u128 + 1);
    }
    usize::try_from(acc).ok()
}

/// Number of monomials of degree `e` in `n` variables, i.e. `C(e + n - 1, n - 1)`.
pub fn monomial_count(n: usize, e: i64) -> BigInt {
    binom(e + n as i64 - 1, n as i64 - 1)
}

/// A partition `d₁ ≥ d₂ ≥ … ≥ d_r ≥ 1`, always stored in nonincreasing order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Sorts the parts into canonical order; rejects empty input and zero parts.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::InvalidPartition("no parts".into()));
        }
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(format!("{parts:?} has a zero part")));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Self { parts })
    }

    /// `[d - 1, 1]`, the partition with a single linear factor.
    pub fn linear_factor(d: usize) -> Result<Self> {
        if d < 2 {
            return Err(Error::InvalidPartition(format!("[d-1,1] needs d >= 2, got {d}")));
        }
        Self::new(vec![d - 1, 1])
    }

    /// `[d₁, 1, …, 1]` with `s` trailing ones.
    pub fn hook(d1: usize, s: usize) -> Result<Self> {
        let mut parts = vec![d1];
        parts.extend(std::iter::repeat_n(1, s));
        Self::new(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// `d`, the sum of the parts.
    pub fn total(&self) -> usize {
        self.parts.iter().sum()
    }

    /// `r`, the number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// `d₁`.
    pub fn largest(&self) -> usize {
        self.parts[0]
    }

    /// `d₂`, or 0 for a one-part partition.
    pub fn second(&self) -> usize {
        self.parts.get(1).copied().unwrap_or(0)
    }

    /// `s = d - d₁`.
    pub fn tail_sum(&self) -> usize {
        self.total() - self.largest()
    }

    /// `t`, the multiplicity of the largest part.
    pub fn leading_multiplicity(&self) -> usize {
        self.parts.iter().take_while(|&&p| p == self.parts[0]).count()
    }

    pub fn is_all_ones(&self) -> bool {
        self.parts[0] == 1
    }

    /// True for `[d - 1, 1]` (including `[1, 1]`).
    pub fn is_linear_factor(&self) -> bool {
        self.parts.len() == 2 && self.parts[1] == 1
    }

    fn prefix_sum(&self, k: usize) -> usize {
        self.parts.iter().take(k).sum()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        f.write_str(&parts.join(","))
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Accepts `"3,2,2"`, optionally wrapped in brackets, with arbitrary whitespace.
    fn from_str(s: &str) -> Result<Self> {
        let body = s.trim().trim_start_matches('[').trim_end_matches(']');
        let parts = body
            .split(',')
            .map(|tok| {
                tok.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::InvalidPartition(format!("cannot parse part {tok:?} in {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(parts)
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Self::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

/// The universal input record `(n, ℓ, λ)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ProblemInstance {
    pub n: usize,
    pub l: usize,
    pub partition: Partition,
}

impl ProblemInstance {
    pub fn new(n: usize, l: usize, partition: Partition) -> Result<Self> {
        if n < 3 {
            return Err(invalid(format!("need at least 3 variables, got n = {n}")));
        }
        if l < 1 {
            return Err(invalid("secant index must be at least 1"));
        }
        if partition.len() < 2 {
            return Err(Error::InvalidPartition(format!(
                "secant computations need at least two parts, got [{partition}]"
            )));
        }
        Ok(Self { n, l, partition })
    }

    pub fn d(&self) -> usize {
        self.partition.total()
    }

    /// `N = C(d + n - 1, n - 1)`, the dimension of the space of degree-`d` forms.
    pub fn ambient(&self) -> BigInt {
        monomial_count(self.n, self.d() as i64)
    }

    pub fn dim_variety(&self) -> BigInt {
        variety_dim(self.n, &self.partition)
    }
}

impl fmt::Display for ProblemInstance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={} l={} [{}]", self.n, self.l, self.partition)
    }
}

/// `Σᵢ C(dᵢ + n - 1, n - 1) - r`. Rejects `n < 3`.
pub fn dim_variety(n: usize, partition: &Partition) -> Result<BigInt> {
    if n < 3 {
        return Err(invalid(format!("dim_variety needs n >= 3, got {n}")));
    }
    Ok(variety_dim(n, partition))
}

fn variety_dim(n: usize, partition: &Partition) -> BigInt {
    let sum: BigInt = partition
        .parts()
        .iter()
        .map(|&di| monomial_count(n, di as i64))
        .sum();
    sum - partition.len()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExpectedDim {
    pub expected: BigInt,
    /// How far the naive parameter count overshoots `N - 1`.
    pub epsilon: BigInt,
}

/// `min{N - 1, ℓ·dim X + ℓ - 1}` together with the overshoot `ε`.
pub fn expected_dim(inst: &ProblemInstance) -> ExpectedDim {
    let ambient_top = inst.ambient() - 1;
    let naive = parameter_count(inst);
    let overshoot = &naive - &ambient_top;
    ExpectedDim {
        expected: (&naive).min(&ambient_top).clone(),
        epsilon: if overshoot.is_positive() { overshoot } else { BigInt::zero() },
    }
}

/// `ℓ·dim X + ℓ - 1`.
pub fn parameter_count(inst: &ProblemInstance) -> BigInt {
    let l = BigInt::from(inst.l);
    &l * inst.dim_variety() + &l - 1
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Dominance {
    Less,
    Greater,
    Equal,
    Incomparable,
}

/// Dominance order on partitions of the same integer, via prefix sums.
pub fn partition_compare(a: &Partition, b: &Partition) -> Result<Dominance> {
    if a.total() != b.total() {
        return Err(Error::MismatchedTotals(a.total(), b.total()));
    }
    let len = a.len().max(b.len());
    let mut ge = true;
    let mut le = true;
    for k in 1..=len {
        match a.prefix_sum(k).cmp(&b.prefix_sum(k)) {
            Ordering::Less => ge = false,
            Ordering::Greater => le = false,
            Ordering::Equal => {}
        }
    }
    Ok(match (ge, le) {
        (true, true) => Dominance::Equal,
        (true, false) => Dominance::Greater,
        (false, true) => Dominance::Less,
        (false, false) => Dominance::Incomparable,
    })
}

/// All partitions of `d` with between `r_min` and `r_max` parts.
///
/// Order: grouped by part count ascending, and within a group in reverse
/// lexicographic order of the part sequence (largest first part first). Sweep
/// outputs depend on this order, so it must not change.
pub fn enumerate_partitions(d: usize, r_min: usize, r_max: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let r_min = r_min.max(1);
    if d == 0 || r_min > r_max {
        return out;
    }
    for r in r_min..=r_max.min(d) {
        let mut buf = Vec::with_capacity(r);
        exact_parts(d, r, d, &mut buf, &mut out);
    }
    out
}

fn exact_parts(remaining: usize, slots: usize, cap: usize, buf: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if slots == 0 {
        if remaining == 0 {
            out.push(Partition { parts: buf.clone() });
        }
        return;
    }
    if remaining < slots {
        return;
    }
    let hi = cap.min(remaining - (slots - 1));
    let lo = remaining.div_ceil(slots);
    for part in (lo..=hi).rev() {
        buf.push(part);
        exact_parts(remaining - part, slots - 1, part, buf, out);
        buf.pop();
    }
}

/// What the reducible-hypersurface prediction says about the Segre variety
/// `P^{n₁-1} × … × P^{n_r-1}` with `nᵢ = C(dᵢ + n - 1, n - 1)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SegreReport {
    pub factors: Vec<BigInt>,
    pub balanced: bool,
    /// Non-defectivity of the Segre secant follows from the prediction.
    pub nondefective_implied: bool,
}

pub fn segre_report(n: usize, partition: &Partition, l: usize, prediction: &PredictionReport) -> Result<SegreReport> {
    let inst = &prediction.instance;
    if inst.n != n || inst.l != l || &inst.partition != partition {
        return Err(invalid(format!(
            "prediction is for {inst}, not n={n} l={l} [{partition}]"
        )));
    }
    let factors: Vec<BigInt> = partition
        .parts()
        .iter()
        .map(|&di| monomial_count(n, di as i64))
        .collect();
    let rest = &factors[1..];
    let product: BigInt = rest.iter().product();
    let shifted: BigInt = rest.iter().map(|f| f - 1).sum();
    let balanced = &factors[0] - 1 <= product - shifted;
    let nondefective_implied = prediction.defect.is_zero()
        && prediction.status.is_proven()
        && prediction.predicted == parameter_count(inst);
    Ok(SegreReport {
        factors,
        balanced,
        nondefective_implied,
    })
}
