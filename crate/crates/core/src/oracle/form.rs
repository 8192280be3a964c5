//! Dense homogeneous forms over Z/p.

use rand::Rng;

use super::field::Field;
use super::monomial::{basis_len, rank_of_product, MonomialBasis};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomogeneousForm {
    pub n: usize,
    pub degree: usize,
    /// Indexed by monomial rank in degree `degree`.
    pub coeffs: Vec<u32>,
}

impl HomogeneousForm {
    pub fn zero(n: usize, degree: usize) -> Self {
        Self {
            n,
            degree,
            coeffs: vec![0; basis_len(n, degree)],
        }
    }

    pub fn constant(n: usize, c: u32) -> Self {
        Self {
            n,
            degree: 0,
            coeffs: vec![c],
        }
    }

    pub fn monomial(exps: &[u16]) -> Self {
        let degree = exps.iter().map(|&a| a as usize).sum();
        let mut f = Self::zero(exps.len(), degree);
        f.coeffs[super::monomial::rank(exps)] = 1;
        f
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    pub fn add(&self, other: &Self, field: &Field) -> Self {
        assert_eq!((self.n, self.degree), (other.n, other.degree), "shape mismatch");
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(&a, &b)| field.add(a as u64, b as u64) as u32)
            .collect();
        Self { coeffs, ..*self }
    }
}

/// Independent uniform coefficients over the full monomial basis of degree `e`.
pub fn random_form<R: Rng + ?Sized>(n: usize, e: usize, field: &Field, rng: &mut R) -> HomogeneousForm {
    let p = field.p();
    HomogeneousForm {
        n,
        degree: e,
        coeffs: (0..basis_len(n, e)).map(|_| rng.gen_range(0..p) as u32).collect(),
    }
}

/// Exact product mod p by dense convolution over exponent vectors.
pub fn multiply(f: &HomogeneousForm, g: &HomogeneousForm, field: &Field) -> HomogeneousForm {
    assert_eq!(f.n, g.n, "forms live in different rings");
    let n = f.n;
    let bf = MonomialBasis::new(n, f.degree);
    let bg = MonomialBasis::new(n, g.degree);
    let mut acc = vec![0u64; basis_len(n, f.degree + g.degree)];
    let budget = field.lazy_budget();
    let mut pending = 0u64;
    for (i, &a) in f.coeffs.iter().enumerate() {
        if a == 0 {
            continue;
        }
        let u = bf.unrank(i);
        for (j, &b) in g.coeffs.iter().enumerate() {
            if b == 0 {
                continue;
            }
            acc[rank_of_product(u, bg.unrank(j))] += a as u64 * b as u64;
        }
        pending += 1;
        if pending == budget {
            acc.iter_mut().for_each(|x| *x = field.reduce(*x));
            pending = 0;
        }
    }
    HomogeneousForm {
        n,
        degree: f.degree + g.degree,
        coeffs: acc.into_iter().map(|x| field.reduce(x) as u32).collect(),
    }
}

/// `G_k = Π_{j ≠ k} F_j` for every `k`, using prefix and suffix products only.
pub fn tangent_generators(factors: &[HomogeneousForm], field: &Field) -> Vec<HomogeneousForm> {
    let r = factors.len();
    assert!(r >= 2, "tangent generators need at least two factors");
    let n = factors[0].n;
    let one = HomogeneousForm::constant(n, 1);
    // prefix[k] = F_0 ⋯ F_{k-1}, suffix[k] = F_k ⋯ F_{r-1}
    let mut prefix = Vec::with_capacity(r);
    prefix.push(one.clone());
    for f in &factors[..r - 1] {
        let next = multiply(prefix.last().expect("nonempty"), f, field);
        prefix.push(next);
    }
    let mut suffix = vec![one; r + 1];
    for k in (1..r).rev() {
        suffix[k] = multiply(&factors[k], &suffix[k + 1], field);
    }
    (0..r)
        .map(|k| {
            if k == 0 {
                suffix[1].clone()
            } else if k == r - 1 {
                prefix[r - 1].clone()
            } else {
                multiply(&prefix[k], &suffix[k + 1], field)
            }
        })
        .collect()
}
