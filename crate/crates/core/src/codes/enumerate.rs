use std::collections::HashSet;
use std::hash::Hash;
use std::sync::atomic::{AtomicU64, Ordering};

use itertools::Itertools;
use rayon::prelude::*;

use super::{gaussian_binomial, LinearCode};
use crate::error::{Error, Result};
use crate::gf::{Elem, Field};

/// Coefficient tables up to this many entries are precomputed.
const TABLE_LIMIT: u64 = 1 << 20;

trait Mask: Copy + Default + Eq + Hash + Send + Sync {
    fn set(&mut self, i: usize);
    fn or(self, other: Self) -> Self;
    fn count(&self) -> u32;
}

impl Mask for u64 {
    fn set(&mut self, i: usize) {
        *self |= 1 << i;
    }
    fn or(self, other: Self) -> Self {
        self | other
    }
    fn count(&self) -> u32 {
        self.count_ones()
    }
}

impl Mask for u128 {
    fn set(&mut self, i: usize) {
        *self |= 1 << i;
    }
    fn or(self, other: Self) -> Self {
        self | other
    }
    fn count(&self) -> u32 {
        self.count_ones()
    }
}

impl<const N: usize> Mask for [u64; N]
where
    [u64; N]: Default,
{
    fn set(&mut self, i: usize) {
        self[i / 64] |= 1 << (i % 64);
    }
    fn or(mut self, other: Self) -> Self {
        for (a, b) in self.iter_mut().zip(other) {
            *a |= b;
        }
        self
    }
    fn count(&self) -> u32 {
        self.iter().map(|w| w.count_ones()).sum()
    }
}

fn support_mask<M: Mask>(v: &[Elem]) -> M {
    let mut m = M::default();
    for (i, x) in v.iter().enumerate() {
        if !x.is_zero() {
            m.set(i);
        }
    }
    m
}

fn axpy(field: &Field, acc: &mut [Elem], c: Elem, row: &[Elem]) {
    if c.is_zero() {
        return;
    }
    for (a, &x) in acc.iter_mut().zip(row) {
        *a = field.add(*a, field.mul(c, x));
    }
}

fn weight(v: &[Elem]) -> u64 {
    v.iter().filter(|x| !x.is_zero()).count() as u64
}

fn check_budget(needed: u128, limit: u128) -> Result<()> {
    if needed > limit {
        Err(Error::BudgetExceeded { needed, limit })
    } else {
        Ok(())
    }
}

/// Minimum Hamming weight, enumerating one codeword per line through the
/// origin (first nonzero coefficient 1).
pub fn min_distance(code: &LinearCode, limit: u128) -> Result<u64> {
    let k = code.dimension();
    if k == 0 {
        return Err(Error::InvalidParams("the zero code has no minimum distance".into()));
    }
    let field = code.field().clone();
    let q = field.order() as u128;
    let mut count: u128 = 0;
    for _ in 0..k {
        count = count.saturating_mul(q).saturating_add(1);
    }
    check_budget(count, limit)?;
    let rows = code.basis().row_vecs();
    let elems: Vec<Elem> = field.elements().collect();
    let best = AtomicU64::new(code.length() as u64);

    // Each task fixes the leading position and the next coefficient.
    let tasks: Vec<(usize, Option<Elem>)> = (0..k)
        .flat_map(|j| {
            if j + 1 < k {
                elems.iter().map(|&c| (j, Some(c))).collect::<Vec<_>>()
            } else {
                vec![(j, None)]
            }
        })
        .collect();
    tasks.par_iter().for_each(|&(j, next)| {
        let mut start = rows[j].clone();
        let depth = match next {
            Some(c) => {
                axpy(&field, &mut start, c, &rows[j + 1]);
                j + 2
            }
            None => j + 1,
        };
        let local = min_weight_dfs(&field, &rows, &elems, depth, start);
        best.fetch_min(local, Ordering::Relaxed);
    });
    Ok(best.into_inner())
}

fn min_weight_dfs(field: &Field, rows: &[Vec<Elem>], elems: &[Elem], depth: usize, cur: Vec<Elem>) -> u64 {
    if depth == rows.len() {
        return weight(&cur);
    }
    let mut best = u64::MAX;
    for &c in elems {
        let mut next = cur.clone();
        axpy(field, &mut next, c, &rows[depth]);
        best = best.min(min_weight_dfs(field, rows, elems, depth + 1, next));
    }
    best
}

/// The `r`-th generalized Hamming weight: the smallest support of an
/// `r`-dimensional subcode.
pub fn ghw(code: &LinearCode, r: usize, limit: u128) -> Result<u64> {
    let k = code.dimension();
    if r == 0 || r > k {
        return Err(Error::InvalidParams(format!(
            "r = {r} must lie between 1 and the dimension {k}"
        )));
    }
    check_budget(gaussian_binomial(k, r, code.field().order() as u64), limit)?;
    match code.length() {
        0..=64 => Ok(ghw_with::<u64>(code, r)),
        65..=128 => Ok(ghw_with::<u128>(code, r)),
        129..=512 => Ok(ghw_with::<[u64; 8]>(code, r)),
        513..=1024 => Ok(ghw_with::<[u64; 16]>(code, r)),
        m => Err(Error::Unsupported(format!(
            "generalized Hamming weights for length {m} > 1024"
        ))),
    }
}

struct MaskSource<'a, M> {
    field: &'a Field,
    rows: Vec<Vec<Elem>>,
    table: Option<Vec<M>>,
}

impl<M: Mask> MaskSource<'_, M> {
    fn new(code: &LinearCode) -> MaskSource<'_, M> {
        let field = code.field();
        let rows = code.basis().row_vecs();
        let q = field.order() as u64;
        let k = rows.len() as u32;
        let table = q.checked_pow(k).filter(|&n| n <= TABLE_LIMIT).map(|n| {
            let mut table = vec![M::default(); n as usize];
            let elems: Vec<Elem> = field.elements().collect();
            fill_table(field, &rows, &elems, rows.len(), 0, vec![Elem::ZERO; code.length()], &mut table);
            table
        });
        MaskSource { field, rows, table }
    }

    /// Support of `sum coeffs[i] * row_i`.
    fn mask(&self, coeffs: &[Elem]) -> M {
        match &self.table {
            Some(t) => {
                let q = self.field.order() as usize;
                let idx = coeffs.iter().rev().fold(0usize, |acc, c| acc * q + c.index() as usize);
                t[idx]
            }
            None => {
                let mut v = vec![Elem::ZERO; self.rows[0].len()];
                for (c, row) in coeffs.iter().zip(&self.rows) {
                    axpy(self.field, &mut v, *c, row);
                }
                support_mask(&v)
            }
        }
    }
}

/// Writes the support mask of every codeword, indexed by its coefficient
/// vector read in base `q` (coefficient of row 0 least significant).
fn fill_table<M: Mask>(
    field: &Field,
    rows: &[Vec<Elem>],
    elems: &[Elem],
    depth: usize,
    index: usize,
    cur: Vec<Elem>,
    table: &mut [M],
) {
    if depth == 0 {
        table[index] = support_mask(&cur);
        return;
    }
    let t = depth - 1;
    let q = elems.len();
    for &c in elems {
        let mut next = cur.clone();
        axpy(field, &mut next, c, &rows[t]);
        fill_table(field, rows, elems, t, index * q + c.index() as usize, next, table);
    }
}

fn ghw_with<M: Mask>(code: &LinearCode, r: usize) -> u64 {
    let k = code.dimension();
    let source = MaskSource::<M>::new(code);
    let elems: Vec<Elem> = code.field().elements().collect();
    let best = AtomicU64::new(code.length() as u64);
    let pivot_sets: Vec<Vec<usize>> = (0..k).combinations(r).collect();
    pivot_sets.par_iter().for_each(|pivots| {
        if best.load(Ordering::Relaxed) as usize == r {
            return;
        }
        // Rows of an RREF r x k matrix are independent given the pivots.
        let options: Vec<Vec<M>> = pivots
            .iter()
            .map(|&p| {
                let free: Vec<usize> = (p + 1..k).filter(|c| !pivots.contains(c)).collect();
                let mut seen = HashSet::new();
                let mut coeffs = vec![Elem::ZERO; k];
                coeffs[p] = Elem::ONE;
                for assignment in (0..free.len()).map(|_| elems.iter()).multi_cartesian_product() {
                    for (&c, &x) in free.iter().zip(&assignment) {
                        coeffs[c] = *x;
                    }
                    seen.insert(source.mask(&coeffs));
                }
                if free.is_empty() {
                    seen.insert(source.mask(&coeffs));
                }
                let mut v: Vec<M> = seen.into_iter().collect();
                v.sort_by_key(|m| m.count());
                v
            })
            .collect();
        let mut local = best.load(Ordering::Relaxed) as u32 + 1;
        union_dfs(&options, 0, M::default(), &mut local);
        best.fetch_min(local as u64, Ordering::Relaxed);
    });
    best.into_inner()
}

fn union_dfs<M: Mask>(options: &[Vec<M>], row: usize, acc: M, best: &mut u32) {
    if row == options.len() {
        *best = (*best).min(acc.count());
        return;
    }
    for &m in &options[row] {
        let next = acc.or(m);
        if next.count() < *best {
            union_dfs(options, row + 1, next, best);
        }
    }
}
