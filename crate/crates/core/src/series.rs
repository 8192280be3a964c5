//! Truncated integer power series and the Hilbert series built from them.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::combinatorics::{binom, Partition};

/// Coefficients `c₀ … c_D` of a power series, exact in every tracked degree.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TruncatedSeries {
    coeffs: Vec<BigInt>,
}

impl TruncatedSeries {
    pub fn new(coeffs: Vec<BigInt>) -> Self {
        assert!(!coeffs.is_empty(), "a truncated series tracks at least degree 0");
        Self { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero(bound: usize) -> Self {
        Self::new(vec![BigInt::zero(); bound + 1])
    }

    pub fn one(bound: usize) -> Self {
        let mut s = Self::zero(bound);
        s.coeffs[0] = BigInt::one();
        s
    }

    /// `D`, the largest tracked degree.
    pub fn bound(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `t^j`, zero beyond the bound.
    pub fn coeff(&self, j: usize) -> BigInt {
        self.coeffs.get(j).cloned().unwrap_or_default()
    }

    pub fn truncate(&self, bound: usize) -> Self {
        let mut coeffs = self.coeffs.clone();
        coeffs.resize(bound + 1, BigInt::zero());
        Self::new(coeffs)
    }

    pub fn add(&self, other: &Self) -> Self {
        let bound = self.bound().min(other.bound());
        Self::new((0..=bound).map(|j| &self.coeffs[j] + &other.coeffs[j]).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        let bound = self.bound().min(other.bound());
        Self::new((0..=bound).map(|j| &self.coeffs[j] - &other.coeffs[j]).collect())
    }

    /// Cauchy product, truncated to the smaller bound.
    pub fn mul(&self, other: &Self) -> Self {
        let bound = self.bound().min(other.bound());
        let mut out = vec![BigInt::zero(); bound + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(bound + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(bound + 1 - i) {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    pub fn pow(&self, l: usize) -> Self {
        let mut acc = Self::one(self.bound());
        let mut base = self.clone();
        let mut e = l;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Multiply by `(1 - t)^i`, i.e. take `i` successive first differences.
    pub fn times_one_minus_t_pow(&self, i: usize) -> Self {
        let mut c = self.coeffs.clone();
        for _ in 0..i {
            for j in (1..c.len()).rev() {
                let prev = c[j - 1].clone();
                c[j] -= prev;
            }
        }
        Self::new(c)
    }

    /// Divide by `(1 - t)`, i.e. take partial sums.
    pub fn partial_sums(&self) -> Self {
        let mut c = self.coeffs.clone();
        for j in 1..c.len() {
            let prev = c[j - 1].clone();
            c[j] += prev;
        }
        Self::new(c)
    }

    pub fn to_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(|c| c.to_string()).collect()
    }

    /// Index of the first coefficient that is not strictly positive.
    pub fn first_nonpositive(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_positive())
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<(usize, BigInt)> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(j, c)| (j, c.clone()))
            .collect();
        write_polynomial(f, &terms)?;
        write!(f, " + O(t^{})", self.bound() + 1)
    }
}

/// Sparse polynomial numerator: distinct degrees, nonzero coefficients, sorted by degree.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SeriesNumerator {
    terms: Vec<(usize, BigInt)>,
}

impl SeriesNumerator {
    /// Combines like terms and drops zeros.
    pub fn from_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (usize, BigInt)>,
    {
        let mut acc: BTreeMap<usize, BigInt> = BTreeMap::new();
        for (deg, c) in terms {
            *acc.entry(deg).or_default() += c;
        }
        Self {
            terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }

    pub fn from_i64(terms: &[(usize, i64)]) -> Self {
        Self::from_terms(terms.iter().map(|&(d, c)| (d, BigInt::from(c))))
    }

    pub fn one() -> Self {
        Self::from_i64(&[(0, 1)])
    }

    pub fn terms(&self) -> &[(usize, BigInt)] {
        &self.terms
    }

    pub fn degree(&self) -> Option<usize> {
        self.terms.last().map(|(d, _)| *d)
    }

    pub fn coeff(&self, deg: usize) -> BigInt {
        self.terms
            .binary_search_by_key(&deg, |(d, _)| *d)
            .map(|i| self.terms[i].1.clone())
            .unwrap_or_default()
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self::from_terms(
            self.terms
                .iter()
                .flat_map(|(da, a)| other.terms.iter().map(move |(db, b)| (da + db, a * b))),
        )
    }

    pub fn pow(&self, l: usize) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut e = l;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    pub fn to_series(&self, bound: usize) -> TruncatedSeries {
        let mut s = TruncatedSeries::zero(bound);
        for (deg, c) in &self.terms {
            if *deg <= bound {
                s.coeffs[*deg] = c.clone();
            }
        }
        s
    }
}

impl fmt::Display for SeriesNumerator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_polynomial(f, &self.terms)
    }
}

fn write_polynomial(f: &mut fmt::Formatter<'_>, terms: &[(usize, BigInt)]) -> fmt::Result {
    if terms.is_empty() {
        return f.write_str("0");
    }
    for (i, (deg, c)) in terms.iter().enumerate() {
        let mag = c.abs();
        if i == 0 {
            if c.is_negative() {
                f.write_str("-")?;
            }
        } else {
            f.write_str(if c.is_negative() { " - " } else { " + " })?;
        }
        let unit = mag.is_one();
        match deg {
            0 => write!(f, "{mag}")?,
            1 if unit => f.write_str("t")?,
            1 => write!(f, "{mag}t")?,
            _ if unit => write!(f, "t^{deg}")?,
            _ => write!(f, "{mag}t^{deg}")?,
        }
    }
    Ok(())
}

/// Coefficients of `num / (1 - t)^n` through degree `bound`.
pub fn expand_rational(num: &SeriesNumerator, n: usize, bound: usize) -> TruncatedSeries {
    let kernel: Vec<BigInt> = (0..=bound as i64)
        .map(|j| {
            if n == 0 {
                if j == 0 {
                    BigInt::one()
                } else {
                    BigInt::zero()
                }
            } else {
                binom(j + n as i64 - 1, j)
            }
        })
        .collect();
    let mut out = vec![BigInt::zero(); bound + 1];
    for (deg, c) in num.terms() {
        if *deg > bound {
            break;
        }
        for (j, k) in kernel.iter().enumerate().take(bound + 1 - deg) {
            out[deg + j] += c * k;
        }
    }
    TruncatedSeries::new(out)
}

/// `1 - Σᵢ t^{d - dᵢ} + (r - 1) t^d`, the numerator of the Hilbert series of `S/J`
/// for the tangent ideal `J` at a point of the variety.
pub fn reducible_numerator(partition: &Partition) -> SeriesNumerator {
    let d = partition.total();
    let r = partition.len() as i64;
    let mut terms = vec![(0, BigInt::one()), (d, BigInt::from(r - 1))];
    terms.extend(partition.parts().iter().map(|&di| (d - di, BigInt::from(-1))));
    SeriesNumerator::from_terms(terms)
}

/// `bᵢ = aᵢ` while every `a_j` with `j ≤ i` is positive, zero from the first
/// nonpositive coefficient on.
pub fn plus_truncate(x: &TruncatedSeries) -> TruncatedSeries {
    let mut coeffs = x.coeffs.clone();
    if let Some(cut) = x.first_nonpositive() {
        for c in &mut coeffs[cut..] {
            *c = BigInt::zero();
        }
    }
    TruncatedSeries::new(coeffs)
}

/// `|numerator^ℓ / (1 - t)^n|⁺`, the Hilbert function of `S/(I₁ + … + I_ℓ)` that
/// the weak Lefschetz property would force.
pub fn predicted_hilbert(n: usize, l: usize, partition: &Partition, bound: usize) -> TruncatedSeries {
    plus_truncate(&untruncated_hilbert(n, l, partition, bound))
}

/// `numerator^ℓ / (1 - t)^n` without truncation.
pub fn untruncated_hilbert(n: usize, l: usize, partition: &Partition, bound: usize) -> TruncatedSeries {
    expand_rational(&reducible_numerator(partition).pow(l), n, bound)
}

/// `numerator^ℓ / (1 - t)^{2ℓ}`: the artinian reduction of the join ring.
/// A polynomial of degree `ℓ(d - 2)`.
pub fn artinian_series(l: usize, partition: &Partition, bound: usize) -> TruncatedSeries {
    expand_rational(&reducible_numerator(partition).pow(l), 2 * l, bound)
}

/// `numerator^ℓ / (1 - t)^{ℓn}`: the Hilbert series of the join ring, the tensor
/// product of `ℓ` copies of `S/J`.
pub fn join_series(n: usize, l: usize, partition: &Partition, bound: usize) -> TruncatedSeries {
    expand_rational(&reducible_numerator(partition).pow(l), l * n, bound)
}

/// The degree where the artinian series stops: `ℓ(d - 2)`.
pub fn artinian_socle_degree(l: usize, partition: &Partition) -> usize {
    l * partition.total().saturating_sub(2)
}

/// `|Π(1 - t^{eᵢ}) / (1 - t)^n|⁺`, the Hilbert function Fröberg predicts for an
/// ideal generated by generic forms of degrees `eᵢ`.
pub fn froeberg_series(n: usize, degrees: &[usize], bound: usize) -> TruncatedSeries {
    let num = degrees.iter().fold(SeriesNumerator::one(), |acc, &e| {
        acc.mul(&SeriesNumerator::from_i64(&[(0, 1), (e, -1)]))
    });
    plus_truncate(&expand_rational(&num, n, bound))
}

/// One generator at a time: `h'_j = max(0, h_j - h_{j-e})`.
pub fn froeberg_recursive(n: usize, degrees: &[usize], bound: usize) -> TruncatedSeries {
    let mut h = expand_rational(&SeriesNumerator::one(), n, bound).coeffs;
    for &e in degrees {
        let prev = h.clone();
        for j in 0..=bound {
            let sub = if j >= e { prev[j - e].clone() } else { BigInt::zero() };
            let v = &prev[j] - sub;
            h[j] = if v.is_positive() { v } else { BigInt::zero() };
        }
    }
    TruncatedSeries::new(h)
}
