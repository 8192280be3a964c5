//! Predictor-versus-oracle verification and parameter sweeps.

mod output;

use std::collections::HashMap;
use std::str::FromStr;
use std::sync::Mutex;
use std::time::Instant;

use num_bigint::BigInt;
use num_traits::Signed;
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::combinatorics::{enumerate_partitions, Partition, ProblemInstance};
use crate::error::{invalid, Error, Result};
use crate::oracle::{ladder_hilbert, mix_seed, oracle_run, wlp_consequence_check_with, OracleRun, PrimeFieldConfig, WlpCheck};
use crate::predictor::{
    linear_factor_predict, n3_secant_line, predict, reducible_forms_predict, g_check, PredictionReport,
};

pub use output::{write_csv, write_json, CSV_HEADER};

/// Which instances a sweep visits.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SweepFamily {
    /// Every partition with `2 ≤ r ≤ r_max`.
    General,
    /// `[d - 1, 1]` through the linear-factor closed form.
    LinearFactor,
    /// `[d/2, d/2]`.
    Balanced,
    /// The variety of all reducible forms.
    ReducibleForms,
    /// `n = 3`, `ℓ = 2` through the plane classification.
    N3SecantLine,
}

impl SweepFamily {
    pub fn name(self) -> &'static str {
        match self {
            SweepFamily::General => "general",
            SweepFamily::LinearFactor => "linear_factor",
            SweepFamily::Balanced => "balanced",
            SweepFamily::ReducibleForms => "reducible_forms",
            SweepFamily::N3SecantLine => "n3_secant_line",
        }
    }
}

impl FromStr for SweepFamily {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "general" => Ok(SweepFamily::General),
            "linear_factor" | "lfactor" => Ok(SweepFamily::LinearFactor),
            "balanced" => Ok(SweepFamily::Balanced),
            "reducible_forms" | "redforms" => Ok(SweepFamily::ReducibleForms),
            "n3_secant_line" | "n3line" => Ok(SweepFamily::N3SecantLine),
            other => Err(invalid(format!("unknown family {other:?}"))),
        }
    }
}

#[derive(Clone, Debug)]
pub struct SweepConfig {
    pub n_range: (usize, usize),
    pub l_range: (usize, usize),
    pub d_min: usize,
    pub d_max: usize,
    pub r_max: usize,
    pub families: Vec<SweepFamily>,
    /// `None` runs the predictor only.
    pub oracle: Option<PrimeFieldConfig>,
    /// Run the WLP ladder on cells with `2ℓ > n`.
    pub wlp: bool,
    /// Ladder levels with more columns than this are skipped and reported.
    pub wlp_max_columns: usize,
}

impl Default for SweepConfig {
    fn default() -> Self {
        Self {
            n_range: (3, 6),
            l_range: (2, 5),
            d_min: 2,
            d_max: 8,
            r_max: 4,
            families: vec![SweepFamily::General],
            oracle: Some(PrimeFieldConfig::default()),
            wlp: false,
            wlp_max_columns: 12_000,
        }
    }
}

impl SweepConfig {
    pub fn validate(&self) -> Result<()> {
        let (n0, n1) = self.n_range;
        let (l0, l1) = self.l_range;
        if n0 < 3 {
            return Err(invalid(format!("n range must start at 3 or more, got {n0}")));
        }
        if l0 < 2 {
            return Err(invalid(format!("l range must start at 2 or more, got {l0}")));
        }
        if n0 > n1 || l0 > l1 || self.d_min > self.d_max {
            // empty ranges are allowed and give an empty sweep
            return Ok(());
        }
        if self.r_max < 2 {
            return Err(invalid(format!("r_max must be at least 2, got {}", self.r_max)));
        }
        Ok(())
    }

    /// All cells in output order: family, then `n`, `ℓ`, `d`, then partition enumeration order.
    pub fn cells(&self) -> Vec<(SweepFamily, ProblemInstance)> {
        let mut fams = self.families.clone();
        fams.sort();
        fams.dedup();
        let mut out = Vec::new();
        for fam in fams {
            for n in self.n_range.0..=self.n_range.1 {
                for l in self.l_range.0..=self.l_range.1 {
                    for d in self.d_min.max(2)..=self.d_max {
                        for lam in family_partitions(fam, n, l, d, self.r_max) {
                            let inst = ProblemInstance::new(n, l, lam).expect("sweep ranges are validated");
                            out.push((fam, inst));
                        }
                    }
                }
            }
        }
        out
    }
}

fn family_partitions(fam: SweepFamily, n: usize, l: usize, d: usize, r_max: usize) -> Vec<Partition> {
    match fam {
        SweepFamily::General => enumerate_partitions(d, 2, r_max.min(d)),
        SweepFamily::LinearFactor if d >= 3 => vec![Partition::linear_factor(d).expect("d >= 3")],
        SweepFamily::ReducibleForms => vec![Partition::linear_factor(d).expect("d >= 2")],
        SweepFamily::Balanced if d.is_multiple_of(2) => vec![Partition::new(vec![d / 2, d / 2]).expect("d >= 2")],
        SweepFamily::N3SecantLine if n == 3 && l == 2 => enumerate_partitions(d, 2, r_max.min(d)),
        _ => Vec::new(),
    }
}

/// Seed for one cell, a function of the base seed and the cell coordinates only.
pub fn cell_seed(base: u64, n: usize, l: usize, lam: &Partition) -> u64 {
    let mut h = mix_seed(base ^ 0xce11);
    for x in [n, l].iter().chain(lam.parts()) {
        h = mix_seed(h ^ *x as u64);
    }
    h
}

/// Seed for a WLP ladder level: independent of `n` so levels are shared across cells.
pub fn ladder_seed(base: u64, vars: usize, l: usize, lam: &Partition) -> u64 {
    let mut h = mix_seed(base ^ 0x1add);
    for x in [vars, l].iter().chain(lam.parts()) {
        h = mix_seed(h ^ *x as u64);
    }
    h
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    /// Oracle and predictor agree, or the oracle was not run.
    Ok,
    /// Conjectural row where the oracle disagrees: reproducible evidence, not a failure.
    Finding(String),
    /// Proven row where the oracle disagrees.
    ProvenDisagreement(String),
    /// Resource guard refused the oracle matrix.
    Skipped(String),
    Error(String),
}

impl Outcome {
    pub fn label(&self) -> &'static str {
        match self {
            Outcome::Ok => "ok",
            Outcome::Finding(_) => "finding",
            Outcome::ProvenDisagreement(_) => "proven_disagreement",
            Outcome::Skipped(_) => "skipped",
            Outcome::Error(_) => "error",
        }
    }

    pub fn detail(&self) -> &str {
        match self {
            Outcome::Ok => "",
            Outcome::Finding(s) | Outcome::ProvenDisagreement(s) | Outcome::Skipped(s) | Outcome::Error(s) => s,
        }
    }
}

#[derive(Clone, Debug)]
pub struct SweepRow {
    pub family: SweepFamily,
    pub instance: ProblemInstance,
    pub prediction: Option<PredictionReport>,
    pub oracle: Option<OracleRun>,
    /// Defined only when the oracle ran.
    pub agree: Option<bool>,
    /// Oracle ≤ predicted, checked where the prediction is a proven upper bound
    /// (`r = 2` or `2ℓ = n + 1`).
    pub upper_bound_ok: Option<bool>,
    pub wlp: Option<WlpCheck>,
    pub outcome: Outcome,
    pub seed: u64,
    pub runtime_ms: u128,
}

impl SweepRow {
    fn failed(family: SweepFamily, instance: ProblemInstance, err: Error, seed: u64) -> Self {
        Self {
            family,
            instance,
            prediction: None,
            oracle: None,
            agree: None,
            upper_bound_ok: None,
            wlp: None,
            outcome: Outcome::Error(err.to_string()),
            seed,
            runtime_ms: 0,
        }
    }

    pub fn oracle_dim(&self) -> Option<i64> {
        self.oracle.as_ref().map(|o| o.secant_dim)
    }

    pub fn is_proven(&self) -> bool {
        self.prediction.as_ref().is_some_and(|p| p.status.is_proven())
    }

    pub fn to_json(&self) -> Value {
        json!({
            "family": self.family.name(),
            "prediction": self.prediction.as_ref().map(|p| p.to_json()),
            "oracle": self.oracle.as_ref().map(|o| o.to_json()),
            "agree": self.agree,
            "upper_bound_ok": self.upper_bound_ok,
            "wlp": self.wlp.as_ref().map(wlp_json),
            "outcome": self.outcome.label(),
            "detail": self.outcome.detail(),
            "seed": self.seed,
        })
    }
}

pub fn wlp_json(w: &WlpCheck) -> Value {
    json!({
        "k": w.k,
        "pass": w.pass,
        "complete": w.complete,
        "ladder": w.ladder.iter().map(|lv| json!({
            "i": lv.i,
            "vars": lv.vars,
            "expected": lv.expected.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
            "oracle": lv.oracle,
            "matches": lv.matches,
        })).collect::<Vec<_>>(),
    })
}

fn family_prediction(fam: SweepFamily, inst: &ProblemInstance) -> Result<PredictionReport> {
    match fam {
        SweepFamily::LinearFactor => linear_factor_predict(inst.n, inst.l, inst.d()),
        SweepFamily::ReducibleForms => reducible_forms_predict(inst.n, inst.l, inst.d()),
        SweepFamily::N3SecantLine => {
            let rep = predict(inst)?;
            let plane = n3_secant_line(&inst.partition)?;
            if plane.dim != rep.predicted {
                return Err(Error::Inconsistent(format!("{inst}: plane classification {} vs {}", plane.dim, rep.predicted)));
            }
            Ok(rep)
        }
        SweepFamily::General | SweepFamily::Balanced => predict(inst),
    }
}

/// Prediction and oracle for one instance, with agreement bookkeeping.
pub fn verify_case(inst: &ProblemInstance, cfg: &PrimeFieldConfig) -> SweepRow {
    verify_family_case(SweepFamily::General, inst, Some(cfg))
}

fn verify_family_case(fam: SweepFamily, inst: &ProblemInstance, cfg: Option<&PrimeFieldConfig>) -> SweepRow {
    let start = Instant::now();
    let seed = cfg.map_or(0, |c| c.seed);
    let prediction = match family_prediction(fam, inst) {
        Ok(p) => p,
        Err(e) => return SweepRow::failed(fam, inst.clone(), e, seed),
    };
    let mut row = SweepRow {
        family: fam,
        instance: inst.clone(),
        prediction: None,
        oracle: None,
        agree: None,
        upper_bound_ok: None,
        wlp: None,
        outcome: Outcome::Ok,
        seed,
        runtime_ms: 0,
    };
    if let Some(cfg) = cfg {
        match oracle_run(inst, cfg, false) {
            Ok(run) => {
                let got = BigInt::from(run.secant_dim);
                let agree = got == prediction.predicted;
                row.agree = Some(agree);
                if inst.partition.len() == 2 || 2 * inst.l == inst.n + 1 {
                    row.upper_bound_ok = Some(got <= prediction.predicted);
                }
                if !agree {
                    let repro = format!(
                        "{inst}: oracle {} vs predicted {} (prime {}, seed {}, trial ranks {:?})",
                        run.secant_dim, prediction.predicted, run.prime, run.seed, run.trial_ranks
                    );
                    row.outcome = if prediction.status.is_proven() {
                        Outcome::ProvenDisagreement(repro)
                    } else {
                        Outcome::Finding(repro)
                    };
                }
                row.oracle = Some(run);
            }
            Err(Error::ResourceGuard(msg)) => row.outcome = Outcome::Skipped(msg),
            Err(e) => row.outcome = Outcome::Error(e.to_string()),
        }
    }
    row.prediction = Some(prediction);
    row.runtime_ms = start.elapsed().as_millis();
    row
}

type LadderKey = (usize, usize, Partition);
type LadderCache = Mutex<HashMap<LadderKey, Result<Vec<usize>>>>;

/// WLP ladder for one cell, sharing levels through `cache`.
fn wlp_for_cell(inst: &ProblemInstance, base: &PrimeFieldConfig, max_columns: usize, cache: &LadderCache) -> Result<WlpCheck> {
    let cfg = PrimeFieldConfig {
        max_columns: max_columns.min(base.max_columns),
        ..*base
    };
    wlp_consequence_check_with(inst, &cfg, |vars, l, lam, top, cfg, expected| {
        let key = (vars, l, lam.clone());
        if let Some(hit) = cache.lock().expect("cache lock").get(&key) {
            return hit.clone();
        }
        let level_cfg = cfg.with_seed(ladder_seed(base.seed, vars, l, lam));
        let res = ladder_hilbert(vars, l, lam, top, &level_cfg, expected);
        cache.lock().expect("cache lock").insert(key, res.clone());
        res
    })
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SweepSummary {
    pub total: usize,
    pub proven: usize,
    pub conjectural: usize,
    pub errors: usize,
    pub oracle_ran: usize,
    pub agree: usize,
    pub findings: usize,
    pub proven_disagreements: usize,
    pub skipped: usize,
    pub upper_bound_violations: usize,
    pub wlp_checked: usize,
    pub wlp_failed: usize,
    pub wlp_failed_proven: usize,
    pub wlp_incomplete: usize,
    pub g_check: Option<GCheckSummary>,
}

impl SweepSummary {
    fn from_rows(rows: &[SweepRow]) -> Self {
        let mut s = SweepSummary {
            total: rows.len(),
            ..Default::default()
        };
        for row in rows {
            match &row.prediction {
                Some(p) if p.status.is_proven() => s.proven += 1,
                Some(_) => s.conjectural += 1,
                None => s.errors += 1,
            }
            if row.oracle.is_some() {
                s.oracle_ran += 1;
            }
            if row.agree == Some(true) {
                s.agree += 1;
            }
            match row.outcome {
                Outcome::Finding(_) => s.findings += 1,
                Outcome::ProvenDisagreement(_) => s.proven_disagreements += 1,
                Outcome::Skipped(_) => s.skipped += 1,
                Outcome::Error(_) if row.prediction.is_some() => s.errors += 1,
                _ => {}
            }
            if row.upper_bound_ok == Some(false) {
                s.upper_bound_violations += 1;
            }
            if let Some(w) = &row.wlp {
                if w.k > 0 {
                    s.wlp_checked += 1;
                    if !w.pass {
                        s.wlp_failed += 1;
                        if row.is_proven() {
                            s.wlp_failed_proven += 1;
                        }
                    }
                    if !w.complete {
                        s.wlp_incomplete += 1;
                    }
                }
            }
        }
        s
    }

    pub fn to_json(&self) -> Value {
        json!({
            "total": self.total,
            "proven": self.proven,
            "conjectural": self.conjectural,
            "errors": self.errors,
            "oracle_ran": self.oracle_ran,
            "agree": self.agree,
            "findings": self.findings,
            "proven_disagreements": self.proven_disagreements,
            "skipped": self.skipped,
            "upper_bound_violations": self.upper_bound_violations,
            "wlp_checked": self.wlp_checked,
            "wlp_failed": self.wlp_failed,
            "wlp_failed_proven": self.wlp_failed_proven,
            "wlp_incomplete": self.wlp_incomplete,
            "g_check": self.g_check.as_ref().map(|r| json!({
                "cases": r.cases,
                "partitions": r.partitions,
                "g_nonpositive": r.g_nonpositive,
                "holds": r.holds,
                "failures": r.failures.iter().map(|(n, l, lam)| format!("n={n} l={l} [{lam}]")).collect::<Vec<_>>(),
            })),
        })
    }
}

#[derive(Clone, Debug)]
pub struct SweepResult {
    pub rows: Vec<SweepRow>,
    pub summary: SweepSummary,
}

/// Runs every cell of the configuration. Rows come back in [`SweepConfig::cells`]
/// order whatever order the work pool finishes them in.
pub fn sweep(cfg: &SweepConfig) -> Result<SweepResult> {
    cfg.validate()?;
    let cells = cfg.cells();
    let cache: LadderCache = Mutex::new(HashMap::new());
    let rows: Vec<SweepRow> = cells
        .par_iter()
        .map(|(fam, inst)| {
            let cell_cfg = cfg
                .oracle
                .map(|o| o.with_seed(cell_seed(o.seed, inst.n, inst.l, &inst.partition)));
            let mut row = verify_family_case(*fam, inst, cell_cfg.as_ref());
            if cfg.wlp && 2 * inst.l > inst.n {
                if let Some(base) = &cfg.oracle {
                    match wlp_for_cell(inst, base, cfg.wlp_max_columns, &cache) {
                        Ok(w) => {
                            if !w.pass && matches!(row.outcome, Outcome::Ok) {
                                let msg = format!("{inst}: WLP ladder mismatch (seed {})", base.seed);
                                row.outcome = if row.is_proven() {
                                    Outcome::ProvenDisagreement(msg)
                                } else {
                                    Outcome::Finding(msg)
                                };
                            }
                            row.wlp = Some(w);
                        }
                        Err(e) => row.outcome = Outcome::Error(e.to_string()),
                    }
                }
            }
            row
        })
        .collect();
    let summary = SweepSummary::from_rows(&rows);
    Ok(SweepResult { rows, summary })
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GCheckSummary {
    /// `(n, ℓ, s, d₁)` tuples in the region.
    pub cases: usize,
    /// Partitions covered: every tail partition of `s` for each case.
    pub partitions: u64,
    pub g_nonpositive: usize,
    /// Cases with `g ≤ 0` where the implication holds.
    pub holds: usize,
    pub failures: Vec<(usize, usize, Partition)>,
}

/// The `(n, ℓ, s, d₁)` tuples with `3 ≤ n < ℓ ≤ bound` (or `n ≤ ℓ` when `!strict`),
/// `s ≤ bound` and `2s ≤ d₁ < (n - 1)(s - 1)`, in lexicographic order.
pub fn g_check_region(bound: usize, strict: bool) -> impl Iterator<Item = (usize, usize, usize, usize)> {
    (3..=bound).flat_map(move |n| {
        (n + usize::from(strict)..=bound).flat_map(move |l| {
            (1..=bound).flat_map(move |s| (2 * s..(n - 1) * s.saturating_sub(1)).map(move |d1| (n, l, s, d1)))
        })
    })
}

/// Runs the g-check once per case on `[d₁, 1, …, 1]`. Both `g` and the fallback
/// inequality depend only on `(n, ℓ, s, d₁)`, and `[d₁, 1, …, 1]` has the smallest
/// variety among partitions with that head, so one check covers every tail.
pub fn g_check_campaign(bound: usize) -> Result<GCheckSummary> {
    let work: Vec<_> = g_check_region(bound, true).collect();
    let counts = partition_counts(bound);
    let parts: Vec<GCheckSummary> = work
        .par_chunks(4096)
        .map(|chunk| {
            let mut acc = GCheckSummary::default();
            for &(n, l, s, d1) in chunk {
                let lam = Partition::hook(d1, s).expect("d1 >= 2s >= 2");
                let chk = g_check(n, l, &lam).expect("d1 >= s");
                acc.cases += 1;
                acc.partitions += counts[s];
                if !chk.g.is_positive() {
                    acc.g_nonpositive += 1;
                    if chk.implication_holds {
                        acc.holds += 1;
                    } else {
                        acc.failures.push((n, l, lam));
                    }
                }
            }
            acc
        })
        .collect();
    let mut total = GCheckSummary::default();
    for p in parts {
        total.cases += p.cases;
        total.partitions += p.partitions;
        total.g_nonpositive += p.g_nonpositive;
        total.holds += p.holds;
        total.failures.extend(p.failures);
    }
    Ok(total)
}

/// `p(k)` for `k ≤ bound`.
fn partition_counts(bound: usize) -> Vec<u64> {
    let mut p = vec![0u64; bound + 1];
    p[0] = 1;
    for part in 1..=bound {
        for k in part..=bound {
            p[k] += p[k - part];
        }
    }
    p
}

#[cfg(test)]
mod tests {
    use super::*;

    fn inst(n: usize, l: usize, parts: &[usize]) -> ProblemInstance {
        ProblemInstance::new(n, l, Partition::new(parts.to_vec()).unwrap()).unwrap()
    }

    #[test]
    fn verify_worked_example() {
        let row = verify_case(&inst(4, 3, &[3, 2, 2]), &PrimeFieldConfig::default());
        assert_eq!(row.agree, Some(true));
        assert_eq!(row.oracle_dim(), Some(113));
        assert_eq!(row.prediction.unwrap().predicted, BigInt::from(113));
    }

    #[test]
    fn verify_plane_hypersurface() {
        let row = verify_case(&inst(3, 2, &[9, 7, 2]), &PrimeFieldConfig::default());
        assert_eq!(row.agree, Some(true));
        assert_eq!(row.oracle_dim(), Some(188));
        assert!(row.is_proven());
        assert_eq!(row.outcome, Outcome::Ok);
    }

    #[test]
    fn verify_proper_case() {
        // 2l = n: proper intersection, predicted value read off the series
        let i = inst(6, 3, &[3, 2, 2]);
        let row = verify_case(&i, &PrimeFieldConfig::default());
        let rep = row.prediction.as_ref().unwrap();
        assert!(rep.status.is_proven());
        let h = predicted_hilbert_top(&i);
        assert_eq!(rep.predicted, i.ambient() - 1 - h);
        assert_eq!(row.agree, Some(true));
    }

    fn predicted_hilbert_top(i: &ProblemInstance) -> BigInt {
        crate::series::predicted_hilbert(i.n, i.l, &i.partition, i.d()).coeff(i.d())
    }

    #[test]
    fn guard_marks_skipped() {
        let cfg = PrimeFieldConfig {
            max_columns: 10,
            ..Default::default()
        };
        let row = verify_case(&inst(4, 2, &[2, 2]), &cfg);
        assert!(matches!(row.outcome, Outcome::Skipped(_)));
        assert!(row.agree.is_none());
        assert!(row.prediction.is_some());
    }

    fn small_cfg() -> SweepConfig {
        SweepConfig {
            n_range: (3, 4),
            l_range: (2, 3),
            d_min: 2,
            d_max: 5,
            r_max: 3,
            families: vec![SweepFamily::General, SweepFamily::LinearFactor, SweepFamily::N3SecantLine],
            oracle: Some(PrimeFieldConfig::default()),
            wlp: true,
            wlp_max_columns: 2_000,
        }
    }

    #[test]
    fn csv_is_deterministic() {
        let cfg = small_cfg();
        let mut a = Vec::new();
        let mut b = Vec::new();
        write_csv(&sweep(&cfg).unwrap(), &mut a).unwrap();
        write_csv(&sweep(&cfg).unwrap(), &mut b).unwrap();
        assert_eq!(a, b);
        let text = String::from_utf8(a).unwrap();
        assert!(text.starts_with(&CSV_HEADER.join(",")));
    }

    #[test]
    fn summary_conserves_rows() {
        let res = sweep(&small_cfg()).unwrap();
        let s = &res.summary;
        assert_eq!(s.total, res.rows.len());
        assert_eq!(s.proven + s.conjectural + res.rows.iter().filter(|r| r.prediction.is_none()).count(), s.total);
        assert_eq!(s.proven_disagreements, 0);
        assert_eq!(s.oracle_ran, s.agree + s.findings);
        assert!(s.wlp_checked > 0);
        assert_eq!(s.wlp_failed, 0);
    }

    #[test]
    fn empty_range() {
        let cfg = SweepConfig {
            n_range: (5, 4),
            ..small_cfg()
        };
        let res = sweep(&cfg).unwrap();
        assert!(res.rows.is_empty());
        assert_eq!(res.summary, SweepSummary::default());
        let mut out = Vec::new();
        write_csv(&res, &mut out).unwrap();
        assert_eq!(String::from_utf8(out).unwrap().lines().count(), 1);
    }

    #[test]
    fn rejects_bad_ranges() {
        let cfg = SweepConfig {
            n_range: (2, 4),
            ..small_cfg()
        };
        assert!(sweep(&cfg).is_err());
    }

    #[test]
    fn cell_order_ignores_family_order() {
        let mut cfg = small_cfg();
        let a = cfg.cells();
        cfg.families.reverse();
        assert_eq!(a, cfg.cells());
    }

    #[test]
    fn region_size_matches_published_count() {
        // the published count of 57,345,933 cases at bound 60 includes l = n
        assert_eq!(g_check_region(60, false).count(), 57_345_933);
        assert_eq!(g_check_region(60, true).count(), 54_426_848);
    }

    #[test]
    fn partition_numbers() {
        assert_eq!(partition_counts(12), [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77]);
    }

    #[test]
    fn small_campaign_holds() {
        let s = g_check_campaign(7).unwrap();
        assert!(s.cases > 0);
        assert!(s.failures.is_empty());
        assert_eq!(s.holds, s.g_nonpositive);
    }
}
