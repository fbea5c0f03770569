//! Reed-Muller-type evaluation codes, their duals and weights.

mod enumerate;
mod weights;

pub use enumerate::{ghw, min_distance};
pub use weights::{footprint, footprint_matrix, weight_matrix, Cell, CellSource, WeightMatrix};

use crate::error::{Error, Result};
use crate::gf::{Elem, Field};
use crate::groebner::GroebnerBasis;
use crate::linalg::Matrix;
use crate::variety::ProjectivePointSet;

/// Default limit on the number of objects an enumeration may visit.
pub const DEFAULT_BUDGET: u128 = 10_000_000;

/// [`DEFAULT_BUDGET`] unless overridden by the `RMCODE_BUDGET` environment
/// variable.
pub fn budget_from_env() -> u128 {
    std::env::var("RMCODE_BUDGET")
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(DEFAULT_BUDGET)
}

/// A linear code of length `m`, stored by its basis in reduced row echelon
/// form so that equality of codes is equality of bases.
#[derive(Clone, Debug)]
pub struct LinearCode {
    basis: Matrix,
    degree: Option<u32>,
}

impl PartialEq for LinearCode {
    fn eq(&self, other: &LinearCode) -> bool {
        self.basis == other.basis
    }
}

impl Eq for LinearCode {}

impl LinearCode {
    /// Row space of `generators`.
    pub fn from_generators(generators: &Matrix) -> LinearCode {
        LinearCode {
            basis: generators.rref().0,
            degree: None,
        }
    }

    pub fn from_rows(field: &Field, length: usize, rows: Vec<Vec<Elem>>) -> Result<LinearCode> {
        Ok(LinearCode::from_generators(&Matrix::from_rows(field, length, rows)?))
    }

    pub fn zero(field: &Field, length: usize) -> LinearCode {
        LinearCode::from_generators(&Matrix::zeros(field, 0, length))
    }

    pub fn full(field: &Field, length: usize) -> LinearCode {
        LinearCode::from_generators(&Matrix::identity(field, length))
    }

    pub fn field(&self) -> &Field {
        self.basis.field()
    }

    pub fn length(&self) -> usize {
        self.basis.cols()
    }

    pub fn dimension(&self) -> usize {
        self.basis.rows()
    }

    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    /// The degree `d` when the code is `C_X(d)`.
    pub fn degree(&self) -> Option<u32> {
        self.degree
    }

    pub fn contains(&self, v: &[Elem]) -> bool {
        let mut rows = self.basis.row_vecs();
        rows.push(v.to_vec());
        Matrix::from_rows(self.field(), self.length(), rows)
            .map(|m| m.rank() == self.dimension())
            .unwrap_or(false)
    }

    pub fn is_subcode_of(&self, other: &LinearCode) -> bool {
        self.basis.row_vecs().iter().all(|r| other.contains(r))
    }

    /// `C^⊥ = {x : <x, c> = 0 for all c ∈ C}`.
    pub fn dual(&self) -> LinearCode {
        let f = self.field();
        let n = self.length();
        let ns = if self.dimension() == 0 {
            Matrix::identity(f, n)
        } else {
            self.basis.nullspace()
        };
        LinearCode {
            basis: ns,
            degree: None,
        }
    }

    /// `β·C = {(β_1 c_1, ..., β_m c_m) : c ∈ C}`.
    pub fn scaled(&self, beta: &[Elem]) -> Result<LinearCode> {
        if beta.len() != self.length() {
            return Err(Error::DimensionMismatch {
                expected: self.length(),
                found: beta.len(),
            });
        }
        let f = self.field();
        let rows = self
            .basis
            .row_vecs()
            .into_iter()
            .map(|r| r.iter().zip(beta).map(|(&x, &b)| f.mul(x, b)).collect())
            .collect();
        LinearCode::from_rows(f, self.length(), rows)
    }
}

/// `C_X(d)`: the image of the degree-`d` evaluation map at the given
/// representatives.
pub fn code_of_degree(x: &ProjectivePointSet, gb: &GroebnerBasis, d: u32) -> LinearCode {
    let delta = gb.standard_monomials(d);
    let mut c = LinearCode::from_generators(&x.evaluation_matrix(&delta));
    c.degree = Some(d);
    c
}

/// The zero code for negative degrees, `C_X(d)` otherwise.
pub fn code_of_degree_signed(x: &ProjectivePointSet, gb: &GroebnerBasis, d: i64) -> LinearCode {
    if d < 0 {
        LinearCode::zero(x.field(), x.len())
    } else {
        code_of_degree(x, gb, d as u32)
    }
}

/// Checks `c2 = β·c1` for a supplied `β` with nonzero entries. Blind
/// searches for `β` are not supported.
pub fn monomially_equivalent(c1: &LinearCode, c2: &LinearCode, beta: Option<&[Elem]>) -> Result<bool> {
    let beta = beta.ok_or_else(|| {
        Error::Unsupported("monomial equivalence without a candidate vector".into())
    })?;
    if c1.length() != c2.length() {
        return Err(Error::DimensionMismatch {
            expected: c1.length(),
            found: c2.length(),
        });
    }
    if beta.iter().any(|b| b.is_zero()) {
        return Err(Error::InvalidParams("β must have nonzero entries".into()));
    }
    Ok(c1.scaled(beta)? == *c2)
}

/// Number of `r`-dimensional subspaces of `F_q^k`, saturating at
/// `u128::MAX`.
pub fn gaussian_binomial(k: usize, r: usize, q: u64) -> u128 {
    if r > k {
        return 0;
    }
    let q = q as u128;
    // [k, r] = [k-1, r-1] + q^r [k-1, r]
    let mut row: Vec<u128> = vec![1];
    for n in 1..=k {
        let mut next = vec![1u128; n + 1];
        let mut qpow: u128 = 1;
        for j in 1..n {
            qpow = qpow.saturating_mul(q);
            next[j] = row[j - 1].saturating_add(qpow.saturating_mul(row[j]));
        }
        row = next;
    }
    row[r]
}

/// `C(n, r)` saturating at `u128::MAX`.
pub fn binomial(n: usize, r: usize) -> u128 {
    if r > n {
        return 0;
    }
    let r = r.min(n - r);
    let mut acc: u128 = 1;
    for i in 0..r {
        acc = match acc.checked_mul((n - i) as u128) {
            Some(v) => v / (i as u128 + 1),
            None => return u128::MAX,
        };
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gaussian_binomials() {
        assert_eq!(gaussian_binomial(3, 1, 2), 7);
        assert_eq!(gaussian_binomial(4, 2, 3), 130);
        assert_eq!(gaussian_binomial(5, 0, 9), 1);
        assert_eq!(gaussian_binomial(5, 5, 9), 1);
        assert_eq!(gaussian_binomial(2, 3, 2), 0);
        assert_eq!(gaussian_binomial(200, 100, 81), u128::MAX);
        assert_eq!(binomial(10, 4), 210);
    }

    #[test]
    fn duals() {
        let f = Field::prime(3).unwrap();
        assert_eq!(LinearCode::full(&f, 4).dual().dimension(), 0);
        let ones = LinearCode::from_rows(&f, 4, vec![vec![Elem::ONE; 4]]).unwrap();
        let d = ones.dual();
        assert_eq!(d.dimension(), 3);
        assert_eq!(d.dual(), ones);
        assert_eq!(LinearCode::zero(&f, 4).dual(), LinearCode::full(&f, 4));
        assert!(ones.is_subcode_of(&ones.dual().dual()));
    }

    #[test]
    fn equivalence_requires_a_witness() {
        let f = Field::prime(3).unwrap();
        let c = LinearCode::full(&f, 3);
        assert!(monomially_equivalent(&c, &c, Some(&[Elem::ONE; 3])).unwrap());
        assert!(matches!(monomially_equivalent(&c, &c, None), Err(Error::Unsupported(_))));
    }
}
