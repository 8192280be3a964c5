//! Graded colexicographic ranking of monomials.
//!
//! An exponent vector `(a₁, …, a_n)` of degree `e` is read as stars and bars: the
//! bars sit at `c_i = (a₁ + … + a_i) + i - 1` for `i = 1 … n-1`, a subset of
//! `{0, …, e + n - 2}`. Its rank is the combinatorial-number-system value
//! `Σ C(c_i, i)`, which enumerates the `C(e + n - 1, n - 1)` monomials of degree `e`
//! without gaps.

use crate::combinatorics::binom_usize;

#[derive(Clone, Debug)]
pub struct MonomialBasis {
    n: usize,
    degree: usize,
    /// Exponent vectors in rank order.
    exps: Vec<Vec<u16>>,
}

impl MonomialBasis {
    pub fn new(n: usize, degree: usize) -> Self {
        assert!(n >= 1, "need at least one variable");
        let len = basis_len(n, degree);
        let mut exps = vec![Vec::new(); len];
        let mut cur = vec![0u16; n];
        fill(&mut cur, 0, degree, &mut |v| {
            let r = rank(v);
            exps[r] = v.to_vec();
        });
        Self { n, degree, exps }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn len(&self) -> usize {
        self.exps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn unrank(&self, r: usize) -> &[u16] {
        &self.exps[r]
    }

    pub fn iter(&self) -> impl Iterator<Item = &[u16]> {
        self.exps.iter().map(|v| v.as_slice())
    }
}

/// `C(e + n - 1, n - 1)`.
pub fn basis_len(n: usize, e: usize) -> usize {
    binom_usize(e + n - 1, n - 1).expect("monomial count fits in usize")
}

fn fill(cur: &mut [u16], i: usize, left: usize, visit: &mut impl FnMut(&[u16])) {
    if i + 1 == cur.len() {
        cur[i] = left as u16;
        visit(cur);
        return;
    }
    for a in 0..=left {
        cur[i] = a as u16;
        fill(cur, i + 1, left - a, visit);
    }
    cur[i] = 0;
}

/// Rank of an exponent vector among monomials of its own degree.
pub fn rank(exps: &[u16]) -> usize {
    let mut acc = 0usize;
    let mut prefix = 0usize;
    for (i, &a) in exps.iter().enumerate().take(exps.len().saturating_sub(1)) {
        prefix += a as usize;
        let c = prefix + i;
        acc += small_binom(c, i + 1);
    }
    acc
}

/// Rank of the product monomial `u·v` without materializing it.
pub fn rank_of_product(u: &[u16], v: &[u16]) -> usize {
    let mut acc = 0usize;
    let mut prefix = 0usize;
    for i in 0..u.len().saturating_sub(1) {
        prefix += (u[i] + v[i]) as usize;
        acc += small_binom(prefix + i, i + 1);
    }
    acc
}

const TABLE: usize = 96;

static BINOMS: std::sync::OnceLock<Vec<[usize; TABLE]>> = std::sync::OnceLock::new();

#[inline]
fn small_binom(a: usize, b: usize) -> usize {
    if b > a {
        return 0;
    }
    if a < TABLE {
        let t = BINOMS.get_or_init(|| {
            let mut t = vec![[0usize; TABLE]; TABLE];
            for a in 0..TABLE {
                t[a][0] = 1;
                for b in 1..=a {
                    t[a][b] = t[a - 1][b - 1].saturating_add(if b < a { t[a - 1][b] } else { 0 });
                }
            }
            t
        });
        t[a][b]
    } else {
        binom_usize(a, b).expect("monomial rank fits in usize")
    }
}
