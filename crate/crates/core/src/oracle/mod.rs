//! Terracini oracle: dimensions of secant varieties from ranks of matrices over Z/p.
//!
//! For `ℓ` random points `Pᵢ = F_{i,1} ⋯ F_{i,r}` the tangent ideal `I_{Pᵢ}` is
//! generated by the products `F/F_{i,k}`. The span of the tangent spaces is
//! `[I_{P₁} + … + I_{P_ℓ}]_d`, so `dim σ_ℓ = rank - 1`. Nothing here uses the closed
//! forms from [`crate::predictor`]; comparisons happen in the callers.

pub mod field;
pub mod form;
pub mod monomial;
pub mod rank;

use num_bigint::BigInt;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::combinatorics::{Partition, ProblemInstance};
use crate::error::{Error, Result};
use crate::series::{froeberg_recursive, froeberg_series, predicted_hilbert};

pub use field::Field;
pub use form::{multiply, random_form, tangent_generators, HomogeneousForm};
pub use monomial::{basis_len, MonomialBasis};
pub use rank::Echelon;

pub const DEFAULT_PRIME: u64 = 1_000_003;
pub const DEFAULT_TRIALS: usize = 3;
pub const DEFAULT_SEED: u64 = 0x5ec4_47ed;
pub const DEFAULT_MAX_COLUMNS: usize = 250_000;

/// Rows reduced together, so each stored pivot tail is read once per block.
const BLOCK: usize = 16;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PrimeFieldConfig {
    pub p: u64,
    pub trials: usize,
    pub seed: u64,
    /// Refuse matrices with more columns than this.
    pub max_columns: usize,
}

impl Default for PrimeFieldConfig {
    fn default() -> Self {
        Self {
            p: DEFAULT_PRIME,
            trials: DEFAULT_TRIALS,
            seed: DEFAULT_SEED,
            max_columns: DEFAULT_MAX_COLUMNS,
        }
    }
}

impl PrimeFieldConfig {
    pub fn field(&self) -> Result<Field> {
        Field::new(self.p)
    }

    pub fn with_seed(self, seed: u64) -> Self {
        Self { seed, ..self }
    }
}

/// Reproducible RNG for one `(trial, point, factor)` triple.
pub fn stream_rng(seed: u64, trial: usize, point: usize, factor: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(((trial as u64) << 42) | ((point as u64) << 21) | factor as u64);
    rng
}

/// SplitMix64 finalizer, used to derive per-cell seeds.
pub fn mix_seed(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Rank of `[ideal generated by gens]_j`. Generators above degree `j` contribute nothing.
pub fn ideal_piece_rank(generators: &[HomogeneousForm], j: usize, field: Field) -> usize {
    let Some(first) = generators.first() else { return 0 };
    let n = first.n;
    let ncols = basis_len(n, j);
    let mut ech = Echelon::new(ncols, field);
    for g in generators {
        if g.degree > j || ech.is_full() {
            continue;
        }
        let gb = MonomialBasis::new(n, g.degree);
        let support: Vec<(&[u16], u64)> = g
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(i, &c)| (gb.unrank(i), c as u64))
            .collect();
        let mults = MonomialBasis::new(n, j - g.degree);
        let mut rows: Vec<Vec<u64>> = Vec::with_capacity(BLOCK);
        let mut monos = mults.iter().peekable();
        while monos.peek().is_some() && !ech.is_full() {
            rows.clear();
            for mono in monos.by_ref().take(BLOCK) {
                let mut row = vec![0u64; ncols];
                for (u, c) in &support {
                    row[monomial::rank_of_product(u, mono)] = *c;
                }
                rows.push(row);
            }
            ech.push_block(&mut rows);
        }
    }
    ech.rank()
}

/// The tangent generators at `ℓ` random points of `X_{m-1,λ}` for one trial.
pub fn trial_generators(m: usize, l: usize, lam: &Partition, field: Field, seed: u64, trial: usize) -> Vec<HomogeneousForm> {
    (0..l)
        .flat_map(|point| {
            let factors: Vec<HomogeneousForm> = lam
                .parts()
                .iter()
                .enumerate()
                .map(|(k, &e)| random_form(m, e, &field, &mut stream_rng(seed, trial, point, k)))
                .collect();
            tangent_generators(&factors, &field)
        })
        .collect()
}

/// Ranks in degrees `0..=top` (only `top` unless `all_degrees`). A full-rank degree
/// makes every later degree full too.
fn ranks_upto(gens: &[HomogeneousForm], m: usize, top: usize, all_degrees: bool, field: Field) -> Vec<usize> {
    if !all_degrees {
        return vec![ideal_piece_rank(gens, top, field)];
    }
    let mut out = Vec::with_capacity(top + 1);
    let mut full = false;
    for j in 0..=top {
        let cols = basis_len(m, j);
        if full {
            out.push(cols);
            continue;
        }
        let rk = ideal_piece_rank(gens, j, field);
        full = rk == cols;
        out.push(rk);
    }
    out
}

fn guard(m: usize, d: usize, cfg: &PrimeFieldConfig) -> Result<usize> {
    let cols = monomial::basis_len(m, d);
    if cols > cfg.max_columns {
        return Err(Error::ResourceGuard(format!(
            "{cols} columns in {m} variables at degree {d} exceeds the limit of {}",
            cfg.max_columns
        )));
    }
    Ok(cols)
}

/// Hilbert function of `S/(I_{P₁} + … + I_{P_ℓ})` in `m` variables through degree
/// `top`, maximised over trials degree by degree. Also returns the per-trial ranks
/// at `top`.
pub fn construction_hilbert(
    m: usize,
    l: usize,
    lam: &Partition,
    top: usize,
    cfg: &PrimeFieldConfig,
) -> Result<(Vec<usize>, Vec<usize>)> {
    guard(m, top, cfg)?;
    let field = cfg.field()?;
    let per_trial: Vec<Vec<usize>> = (0..cfg.trials.max(1))
        .into_par_iter()
        .map(|t| {
            let gens = trial_generators(m, l, lam, field, cfg.seed, t);
            ranks_upto(&gens, m, top, true, field)
        })
        .collect();
    let hilbert = (0..=top)
        .map(|j| basis_len(m, j) - per_trial.iter().map(|r| r[j]).max().unwrap_or(0))
        .collect();
    let top_ranks = per_trial.iter().map(|r| r[top]).collect();
    Ok((hilbert, top_ranks))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleRun {
    pub instance: ProblemInstance,
    pub prime: u64,
    pub seed: u64,
    pub trial_ranks: Vec<usize>,
    pub max_rank: usize,
    pub secant_dim: i64,
    /// `N - max_rank`, the codimension of the affine cone of the secant variety.
    pub codim: usize,
    pub columns: usize,
    /// `dim [A]_j` for `j = 0 … d`.
    pub hilbert: Option<Vec<usize>>,
}

impl OracleRun {
    pub fn to_json(&self) -> Value {
        let inst = &self.instance;
        json!({
            "n": inst.n,
            "l": inst.l,
            "partition": inst.partition.parts(),
            "prime": self.prime,
            "seed": self.seed,
            "trial_ranks": self.trial_ranks,
            "max_rank": self.max_rank,
            "secant_dim": self.secant_dim,
            "codim": self.codim,
            "columns": self.columns,
            "hilbert": self.hilbert,
        })
    }
}

/// `dim σ_ℓ(X_{n-1,λ})` from the rank of the Terracini span at random points.
///
/// The rank at any specialization is at most the generic rank, so the maximum over
/// trials is a lower bound that is attained with high probability.
pub fn oracle_run(inst: &ProblemInstance, cfg: &PrimeFieldConfig, want_hilbert: bool) -> Result<OracleRun> {
    let (n, l, d) = (inst.n, inst.l, inst.d());
    let columns = guard(n, d, cfg)?;
    let field = cfg.field()?;
    let per_trial: Vec<Vec<usize>> = (0..cfg.trials.max(1))
        .into_par_iter()
        .map(|t| {
            let gens = trial_generators(n, l, &inst.partition, field, cfg.seed, t);
            ranks_upto(&gens, n, d, want_hilbert, field)
        })
        .collect();
    let trial_ranks: Vec<usize> = per_trial.iter().map(|r| *r.last().expect("nonempty")).collect();
    let max_rank = *trial_ranks.iter().max().expect("at least one trial");
    let hilbert = want_hilbert.then(|| {
        (0..=d)
            .map(|j| basis_len(n, j) - per_trial.iter().map(|r| r[j]).max().unwrap_or(0))
            .collect()
    });
    Ok(OracleRun {
        instance: inst.clone(),
        prime: cfg.p,
        seed: cfg.seed,
        trial_ranks,
        max_rank,
        secant_dim: max_rank as i64 - 1,
        codim: columns - max_rank,
        columns,
        hilbert,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WlpLevel {
    /// Number of general linear forms cut.
    pub i: usize,
    /// Variables after cutting: `2ℓ - i`.
    pub vars: usize,
    pub expected: Vec<BigInt>,
    /// `None` when the level was beyond the column budget.
    pub oracle: Option<Vec<usize>>,
    pub matches: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WlpCheck {
    pub k: usize,
    /// Every computed level matched.
    pub pass: bool,
    /// No level was skipped.
    pub complete: bool,
    pub ladder: Vec<WlpLevel>,
}

/// Compares the oracle Hilbert function of the construction in `2ℓ - i` variables,
/// `i = 0 … k` with `k = max(0, 2ℓ - n)`, against `|(1 - t)^i · numerator^ℓ / (1 - t)^{2ℓ}|⁺`
/// in degrees `0 … d`. Levels whose matrices exceed `cfg.max_columns` are skipped.
pub fn wlp_consequence_check(inst: &ProblemInstance, cfg: &PrimeFieldConfig) -> Result<WlpCheck> {
    wlp_consequence_check_with(inst, cfg, ladder_hilbert)
}

/// Hilbert function of one ladder level. Trials run one after another and stop at the
/// first that reproduces `expected`; the remaining trials only run on a mismatch.
pub fn ladder_hilbert(
    m: usize,
    l: usize,
    lam: &Partition,
    top: usize,
    cfg: &PrimeFieldConfig,
    expected: &[BigInt],
) -> Result<Vec<usize>> {
    guard(m, top, cfg)?;
    let field = cfg.field()?;
    let mut best: Option<Vec<usize>> = None;
    for t in 0..cfg.trials.max(1) {
        let gens = trial_generators(m, l, lam, field, cfg.seed, t);
        let ranks = ranks_upto(&gens, m, top, true, field);
        let merged: Vec<usize> = match best {
            None => ranks,
            Some(b) => b.iter().zip(&ranks).map(|(a, b)| *a.max(b)).collect(),
        };
        let h: Vec<usize> = (0..=top).map(|j| basis_len(m, j) - merged[j]).collect();
        best = Some(merged);
        if h.iter().zip(expected).all(|(&a, b)| BigInt::from(a) == *b) {
            return Ok(h);
        }
    }
    let best = best.expect("at least one trial");
    Ok((0..=top).map(|j| basis_len(m, j) - best[j]).collect())
}

/// Same as [`wlp_consequence_check`], with the Hilbert computation supplied by the
/// caller (for caching across instances that share a level).
pub fn wlp_consequence_check_with<F>(inst: &ProblemInstance, cfg: &PrimeFieldConfig, mut hilbert: F) -> Result<WlpCheck>
where
    F: FnMut(usize, usize, &Partition, usize, &PrimeFieldConfig, &[BigInt]) -> Result<Vec<usize>>,
{
    let (n, l, d) = (inst.n, inst.l, inst.d());
    let k = (2 * l).saturating_sub(n);
    let mut ladder = Vec::new();
    if k > 0 {
        for i in 0..=k {
            let vars = 2 * l - i;
            let expected = predicted_hilbert(vars, l, &inst.partition, d).coeffs().to_vec();
            let oracle = match hilbert(vars, l, &inst.partition, d, cfg, &expected) {
                Ok(h) => Some(h),
                Err(Error::ResourceGuard(_)) => None,
                Err(e) => return Err(e),
            };
            let matches = oracle
                .as_ref()
                .map(|h| h.iter().zip(&expected).all(|(&a, b)| BigInt::from(a) == *b));
            ladder.push(WlpLevel {
                i,
                vars,
                expected,
                oracle,
                matches,
            });
        }
    }
    Ok(WlpCheck {
        k,
        pass: ladder.iter().all(|lv| lv.matches != Some(false)),
        complete: ladder.iter().all(|lv| lv.matches.is_some()),
        ladder,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FroebergCheck {
    pub hilbert: Vec<usize>,
    pub predicted: Vec<BigInt>,
    pub froeberg_match: bool,
    /// The one-generator-at-a-time recursion agrees with the series form.
    pub recursive_agrees: bool,
}

/// Hilbert function through degree `d` of `ℓ` generic forms of degree `k` and `ℓ`
/// of degree `d - k` in `n` variables, against Fröberg's prediction.
pub fn froeberg_oracle_r2(n: usize, l: usize, k: usize, d: usize, cfg: &PrimeFieldConfig) -> Result<FroebergCheck> {
    if k == 0 || 2 * k > d {
        return Err(crate::error::invalid(format!("need 1 <= k <= d/2, got k = {k}, d = {d}")));
    }
    guard(n, d, cfg)?;
    let field = cfg.field()?;
    let mut degrees = vec![k; l];
    degrees.extend(std::iter::repeat_n(d - k, l));
    let per_trial: Vec<Vec<usize>> = (0..cfg.trials.max(1))
        .into_par_iter()
        .map(|t| {
            let gens: Vec<HomogeneousForm> = degrees
                .iter()
                .enumerate()
                .map(|(i, &e)| random_form(n, e, &field, &mut stream_rng(cfg.seed, t, i, 0)))
                .collect();
            ranks_upto(&gens, n, d, true, field)
        })
        .collect();
    let hilbert: Vec<usize> = (0..=d)
        .map(|j| basis_len(n, j) - per_trial.iter().map(|r| r[j]).max().unwrap_or(0))
        .collect();
    let series = froeberg_series(n, &degrees, d);
    let recursive_agrees = series == froeberg_recursive(n, &degrees, d);
    let predicted = series.coeffs().to_vec();
    let froeberg_match = hilbert.iter().zip(&predicted).all(|(&a, b)| BigInt::from(a) == *b);
    Ok(FroebergCheck {
        hilbert,
        predicted,
        froeberg_match,
        recursive_agrees,
    })
}
