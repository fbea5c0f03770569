use itertools::Itertools;
use serde::{Deserialize, Serialize};

use super::{binomial, code_of_degree, ghw};
use crate::error::{Error, Result};
use crate::groebner::GroebnerBasis;
use crate::indicators::IndicatorSet;
use crate::variety::{HilbertData, ProjectivePointSet};

/// Footprint bound `fp_I(d, r)`: `deg S/I` minus the largest
/// `deg S/(in(I) + (F))` over `r`-subsets `F` of `Δ(I)_d`, where subsets
/// with `(in(I) : (F)) = in(I)` count as 0. An Artinian quotient counts
/// with its length, so the value is negative when that length exceeds
/// `deg S/I`.
pub fn footprint(gb: &GroebnerBasis, m: u64, d: u32, r: usize, limit: u128) -> Result<i64> {
    let delta = gb.standard_monomials(d);
    if r == 0 || r > delta.len() {
        return Err(Error::InvalidParams(format!(
            "r = {r} must lie between 1 and |Δ_{d}| = {}",
            delta.len()
        )));
    }
    let needed = binomial(delta.len(), r);
    if needed > limit {
        return Err(Error::BudgetExceeded { needed, limit });
    }
    let lead = gb.initial_ideal();
    let mut best = 0;
    for subset in delta.into_iter().combinations(r) {
        if lead.colon(&subset) == lead {
            continue;
        }
        let (_, deg) = lead.sum(&subset).dim_degree()?;
        best = best.max(deg);
    }
    Ok(m as i64 - best as i64)
}

/// `fp_I(d, r)` for `1 <= d <= r0`, `1 <= r <= m`; `None` where
/// `r > H(d)` or the budget does not allow the computation.
pub fn footprint_matrix(gb: &GroebnerBasis, hd: &HilbertData, limit: u128) -> Result<Vec<Vec<Option<i64>>>> {
    let m = hd.degree;
    let mut out = Vec::new();
    for d in 1..=hd.r0 {
        let h = hd.value(d as i64) as usize;
        let mut row = Vec::new();
        for r in 1..=m as usize {
            row.push(if r <= h && binomial(h, r) <= limit {
                Some(footprint(gb, m, d, r, limit)?)
            } else {
                None
            });
        }
        out.push(row);
    }
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CellSource {
    /// Generalized Hamming weight computed by enumeration.
    Enumeration,
    /// `δ(d, r) = r` because `d >= v_r(I)`.
    Regularity,
    /// Forced by the footprint, Singleton and monotonicity bounds.
    Bounds,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Cell {
    Exact { value: u64, source: CellSource },
    Interval { lo: u64, hi: u64 },
    Infinity,
}

impl Cell {
    fn bounds(&self) -> Option<(u64, u64)> {
        match *self {
            Cell::Exact { value, .. } => Some((value, value)),
            Cell::Interval { lo, hi } => Some((lo, hi)),
            Cell::Infinity => None,
        }
    }

    pub fn exact(&self) -> Option<u64> {
        match *self {
            Cell::Exact { value, .. } => Some(value),
            _ => None,
        }
    }
}

/// The matrix `(δ_X(d, r))` for `1 <= d <= r0`, `1 <= r <= m`, together
/// with the footprint matrix.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightMatrix {
    pub r0: u32,
    pub m: u64,
    /// `cells[d-1][r-1]`.
    pub cells: Vec<Vec<Cell>>,
    /// `footprint[d-1][r-1]`.
    pub footprint: Vec<Vec<Option<i64>>>,
}

impl WeightMatrix {
    pub fn cell(&self, d: u32, r: usize) -> Cell {
        self.cells[d as usize - 1][r - 1]
    }

    pub fn is_fully_resolved(&self) -> bool {
        self.cells
            .iter()
            .flatten()
            .all(|c| !matches!(c, Cell::Interval { .. }))
    }

    /// Rows in the usual layout, with `∞` glyphs and `lo..hi` intervals.
    pub fn to_table(&self) -> String {
        let text: Vec<Vec<String>> = self
            .cells
            .iter()
            .map(|row| {
                row.iter()
                    .map(|c| match c {
                        Cell::Exact { value, .. } => value.to_string(),
                        Cell::Interval { lo, hi } => format!("{lo}..{hi}"),
                        Cell::Infinity => "∞".to_string(),
                    })
                    .collect()
            })
            .collect();
        let width = text.iter().flatten().map(|s| s.chars().count()).max().unwrap_or(1);
        text.iter()
            .map(|row| {
                row.iter()
                    .map(|s| format!("{s:>width$}"))
                    .collect::<Vec<_>>()
                    .join(" ")
            })
            .collect::<Vec<_>>()
            .join("\n")
    }
}

/// Resolves every cell of the weight matrix: `∞` for `r > H(d)`, then
/// enumeration within budget, then `δ(d, r) = r` for `d >= v_r(I)`, then
/// bounds tightened to a fixpoint. Unresolved cells stay intervals.
pub fn weight_matrix(
    x: &ProjectivePointSet,
    gb: &GroebnerBasis,
    hd: &HilbertData,
    is: &IndicatorSet,
    limit: u128,
) -> Result<WeightMatrix> {
    let m = hd.degree;
    let r0 = hd.r0;
    let v_r = is.v_sorted();
    let fp = footprint_matrix(gb, hd, limit)?;
    let mut cells = Vec::new();
    for d in 1..=r0 {
        let h = hd.value(d as i64);
        let code = code_of_degree(x, gb, d);
        if code.dimension() as u64 != h {
            return Err(Error::inconsistent(format!(
                "dim C_X({d}) = {} but H({d}) = {h}",
                code.dimension()
            )));
        }
        let mut row = Vec::new();
        for r in 1..=m as usize {
            let f = fp[d as usize - 1][r - 1];
            let cell = if r as u64 > h {
                Cell::Infinity
            } else {
                match ghw(&code, r, limit) {
                    Ok(value) => {
                        if d >= v_r[r - 1] && value != r as u64 {
                            return Err(Error::inconsistent(format!(
                                "δ({d},{r}) = {value} although d >= v_{r}(I)"
                            )));
                        }
                        Cell::Exact {
                            value,
                            source: CellSource::Enumeration,
                        }
                    }
                    Err(Error::BudgetExceeded { .. }) if d >= v_r[r - 1] => Cell::Exact {
                        value: r as u64,
                        source: CellSource::Regularity,
                    },
                    Err(Error::BudgetExceeded { .. }) => Cell::Interval {
                        lo: f.map_or(0, |v| v.max(0) as u64).max(r as u64),
                        hi: m - h + r as u64,
                    },
                    Err(e) => return Err(e),
                }
            };
            if let (Some(fv), Some((lo, _))) = (f, cell.bounds()) {
                if fv > lo as i64 {
                    if let Cell::Exact { .. } = cell {
                        return Err(Error::inconsistent(format!(
                            "footprint {fv} exceeds δ({d},{r}) = {lo}"
                        )));
                    }
                }
            }
            row.push(cell);
        }
        cells.push(row);
    }
    tighten(&mut cells, hd, &v_r)?;
    Ok(WeightMatrix {
        r0,
        m,
        cells,
        footprint: fp,
    })
}

fn tighten(cells: &mut [Vec<Cell>], hd: &HilbertData, v_r: &[u32]) -> Result<()> {
    let nd = cells.len();
    let nr = cells.first().map_or(0, |r| r.len());
    let mut bounds: Vec<Vec<Option<(u64, u64)>>> = cells
        .iter()
        .map(|row| row.iter().map(|c| c.bounds()).collect())
        .collect();
    loop {
        let mut changed = false;
        let mut update = |b: &mut Option<(u64, u64)>, lo: Option<u64>, hi: Option<u64>| {
            if let Some((l, h)) = b {
                if let Some(v) = lo.filter(|v| v > l) {
                    *l = v;
                    changed = true;
                }
                if let Some(v) = hi.filter(|v| v < h) {
                    *h = v;
                    changed = true;
                }
            }
        };
        for di in 0..nd {
            let h = hd.value(di as i64 + 1) as usize;
            // δ(d, r) < δ(d, r+1) for r < H(d)
            for ri in 0..h.saturating_sub(1).min(nr) {
                if let (Some((l1, _)), Some((_, h2))) = (bounds[di][ri], bounds[di][ri + 1]) {
                    update(&mut bounds[di][ri + 1], Some(l1 + 1), None);
                    update(&mut bounds[di][ri], None, Some(h2.saturating_sub(1)));
                }
            }
        }
        for ri in 0..nr {
            // δ(d, r) > δ(d+1, r) for d < R_r
            for di in 0..nd.saturating_sub(1) {
                let d = di as u32 + 1;
                if d >= v_r[ri] {
                    continue;
                }
                if let (Some((_, h1)), Some((l2, _))) = (bounds[di][ri], bounds[di + 1][ri]) {
                    update(&mut bounds[di][ri], Some(l2 + 1), None);
                    update(&mut bounds[di + 1][ri], None, Some(h1.saturating_sub(1)));
                }
            }
        }
        if !changed {
            break;
        }
    }
    for (di, row) in cells.iter_mut().enumerate() {
        for (ri, cell) in row.iter_mut().enumerate() {
            let Some((lo, hi)) = bounds[di][ri] else { continue };
            if lo > hi {
                return Err(Error::inconsistent(format!(
                    "bounds for δ({},{}) are contradictory: {lo} > {hi}",
                    di + 1,
                    ri + 1
                )));
            }
            if let Cell::Interval { .. } = cell {
                *cell = if lo == hi {
                    Cell::Exact {
                        value: lo,
                        source: CellSource::Bounds,
                    }
                } else {
                    Cell::Interval { lo, hi }
                };
            }
        }
    }
    Ok(())
}
