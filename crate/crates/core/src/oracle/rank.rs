//! Incremental row echelon form over Z/p.
//!
//! Rows arrive one at a time and are reduced against the pivots found so far.
//! The working row is kept in u64 with lazy reduction; stored pivots are
//! normalized to leading coefficient 1 and keep only their tail right of the
//! pivot column, negated so elimination is a plain multiply-add.

use super::field::Field;

pub struct Echelon {
    field: Field,
    ncols: usize,
    /// Pivot index for each column, or `usize::MAX`.
    pivot_of: Vec<usize>,
    /// `tails[k]` covers columns `pivot_col[k] + 1 ..`.
    tails: Vec<Vec<u32>>,
    work: Vec<u64>,
}

const NONE: usize = usize::MAX;

impl Echelon {
    pub fn new(ncols: usize, field: Field) -> Self {
        Self {
            field,
            ncols,
            pivot_of: vec![NONE; ncols],
            tails: Vec::new(),
            work: vec![0; ncols],
        }
    }

    pub fn rank(&self) -> usize {
        self.tails.len()
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn is_full(&self) -> bool {
        self.tails.len() == self.ncols
    }

    /// Scratch row to be filled by the caller before [`Echelon::push_work`]. Entries must be `< p`.
    pub fn work_mut(&mut self) -> &mut [u64] {
        &mut self.work
    }

    /// Reduces the scratch row, records a new pivot if it survives, and clears the scratch.
    /// Returns whether the rank went up.
    pub fn push_work(&mut self) -> bool {
        let f = self.field;
        let budget = f.lazy_budget();
        let mut pending = 0u64;
        let mut added = false;
        let mut c = 0;
        while c < self.ncols {
            let v = f.reduce(self.work[c]);
            if v == 0 {
                self.work[c] = 0;
                c += 1;
                continue;
            }
            let k = self.pivot_of[c];
            if k == NONE {
                let inv = f.inv(v);
                let tail: Vec<u32> = self.work[c + 1..]
                    .iter()
                    .map(|&x| f.neg(f.mul(f.reduce(x), inv)) as u32)
                    .collect();
                self.pivot_of[c] = self.tails.len();
                self.tails.push(tail);
                added = true;
                break;
            }
            if pending == budget {
                self.work[c + 1..].iter_mut().for_each(|x| *x = f.reduce(*x));
                pending = 0;
            }
            axpy(&mut self.work[c + 1..], v, &self.tails[k]);
            pending += 1;
            self.work[c] = 0;
            c += 1;
        }
        self.work.iter_mut().for_each(|x| *x = 0);
        added
    }

    /// Reduces a small block of rows (entries `< p`) against the current pivots,
    /// streaming each stored tail once for the whole block, then folds the survivors
    /// in one by one. The rows are consumed as scratch.
    pub fn push_block(&mut self, rows: &mut [Vec<u64>]) {
        if rows.is_empty() || self.is_full() {
            return;
        }
        let f = self.field;
        let budget = f.lazy_budget();
        let mut pending = vec![0u64; rows.len()];
        for c in 0..self.ncols {
            let k = self.pivot_of[c];
            if k == NONE {
                continue;
            }
            let tail = &self.tails[k];
            for (row, pend) in rows.iter_mut().zip(pending.iter_mut()) {
                let v = f.reduce(row[c]);
                row[c] = 0;
                if v == 0 {
                    continue;
                }
                if *pend == budget {
                    row[c + 1..].iter_mut().for_each(|x| *x = f.reduce(*x));
                    *pend = 0;
                }
                axpy(&mut row[c + 1..], v, tail);
                *pend += 1;
            }
        }
        for row in rows.iter_mut() {
            if self.is_full() {
                break;
            }
            for (w, x) in self.work.iter_mut().zip(row.iter()) {
                *w = f.reduce(*x);
            }
            self.push_work();
        }
    }

    /// Convenience for tests: push a dense row of residues.
    pub fn push_row(&mut self, row: &[u64]) -> bool {
        assert_eq!(row.len(), self.ncols);
        for (w, &x) in self.work.iter_mut().zip(row) {
            *w = self.field.reduce(x);
        }
        self.push_work()
    }
}

/// `row += v * tail` with `v < 2^32`; written as a 32x32 -> 64 bit product so it vectorizes.
#[inline]
fn axpy(row: &mut [u64], v: u64, tail: &[u32]) {
    #[cfg(target_arch = "x86_64")]
    {
        if std::arch::is_x86_feature_detected!("avx2") {
            // SAFETY: the feature was just detected on this CPU.
            unsafe { axpy_avx2(row, v, tail) };
            return;
        }
    }
    axpy_generic(row, v, tail);
}

#[inline(always)]
fn axpy_generic(row: &mut [u64], v: u64, tail: &[u32]) {
    let v = v as u32 as u64;
    for (w, &t) in row.iter_mut().zip(tail) {
        *w += v * t as u64;
    }
}

#[cfg(target_arch = "x86_64")]
#[target_feature(enable = "avx2")]
unsafe fn axpy_avx2(row: &mut [u64], v: u64, tail: &[u32]) {
    axpy_generic(row, v, tail);
}

/// Rank of a dense matrix of residues.
pub fn matrix_rank(rows: &[Vec<u64>], ncols: usize, field: Field) -> usize {
    let mut e = Echelon::new(ncols, field);
    for row in rows {
        if e.is_full() {
            break;
        }
        e.push_row(row);
    }
    e.rank()
}
