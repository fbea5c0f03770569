//! Standard indicator functions, v-numbers and essential monomials.

use crate::error::{Error, Result};
use crate::gf::Elem;
use crate::groebner::GroebnerBasis;
use crate::linalg::Matrix;
use crate::poly::{Monomial, Poly};
use crate::variety::{HilbertData, ProjectivePointSet};

/// The standard indicator functions `f_1, ..., f_m` of a point set, each
/// with leading coefficient 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IndicatorSet {
    pub fs: Vec<Poly>,
    /// `f_i(P_i)`.
    pub values: Vec<Elem>,
    /// `deg f_i`, the local v-numbers.
    pub degrees: Vec<u32>,
    /// Monomials appearing in every `f_i`, descending.
    pub essential: Vec<Monomial>,
}

impl IndicatorSet {
    pub fn len(&self) -> usize {
        self.fs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.fs.is_empty()
    }

    /// The v-number `min_i deg f_i`.
    pub fn v_number(&self) -> u32 {
        *self.degrees.iter().min().expect("nonempty point set")
    }

    /// `v_1(I) <= ... <= v_m(I)`, the predicted regularity indices of
    /// `δ_X(·, r)`.
    pub fn v_sorted(&self) -> Vec<u32> {
        let mut v = self.degrees.clone();
        v.sort_unstable();
        v
    }

    pub fn leading_coefficients(&self) -> Vec<Elem> {
        self.fs.iter().map(|f| f.lc().expect("nonzero")).collect()
    }
}

/// `m × |Δ_d|` matrix with entries `u(P_j)`.
fn point_monomial_matrix(x: &ProjectivePointSet, delta: &[Monomial]) -> Matrix {
    x.evaluation_matrix(delta).transpose()
}

fn assemble(gb: &GroebnerBasis, delta: &[Monomial], coeffs: &[Elem]) -> Poly {
    let terms = delta.iter().cloned().zip(coeffs.iter().copied());
    Poly::from_terms(gb.ring(), terms.collect::<Vec<_>>()).monic()
}

/// Computes all `f_i` degree by degree from one left transform per degree.
pub fn standard_indicators(x: &ProjectivePointSet, gb: &GroebnerBasis, hd: &HilbertData) -> Result<IndicatorSet> {
    let m = x.len();
    let mut fs: Vec<Option<Poly>> = vec![None; m];
    for d in 0..=hd.r0 {
        if fs.iter().all(|f| f.is_some()) {
            break;
        }
        let delta = gb.standard_monomials(d);
        let n = delta.len();
        let (e, _, pivots) = point_monomial_matrix(x, &delta).left_transform();
        if pivots != (0..n).collect::<Vec<_>>() {
            return Err(Error::inconsistent(format!(
                "evaluation map is not injective on standard monomials of degree {d}"
            )));
        }
        for (i, slot) in fs.iter_mut().enumerate() {
            if slot.is_some() {
                continue;
            }
            let col: Vec<Elem> = (0..m).map(|r| e.get(r, i)).collect();
            if col[n..].iter().all(|c| c.is_zero()) {
                *slot = Some(assemble(gb, &delta, &col[..n]));
            }
        }
    }
    let fs: Vec<Poly> = fs
        .into_iter()
        .enumerate()
        .map(|(i, f)| f.ok_or_else(|| Error::inconsistent(format!("no indicator function for point {i} up to degree r0"))))
        .collect::<Result<_>>()?;
    let mut values = Vec::with_capacity(m);
    for (i, f) in fs.iter().enumerate() {
        let ev = x.eval_poly(f)?;
        if ev[i].is_zero() || ev.iter().enumerate().any(|(j, v)| j != i && !v.is_zero()) {
            return Err(Error::inconsistent(format!("f_{} does not separate its point", i + 1)));
        }
        values.push(ev[i]);
    }
    let degrees = fs.iter().map(|f| f.homogeneous_degree().unwrap_or(0)).collect();
    let mut essential = fs[0].support();
    for f in &fs[1..] {
        essential.retain(|u| !f.coeff(u).is_zero());
    }
    Ok(IndicatorSet {
        fs,
        values,
        degrees,
        essential,
    })
}

/// Standard polynomial of degree `d` vanishing on `X \ {P_i}` and not at
/// `P_i`, if one exists. Solved independently of [`standard_indicators`].
pub fn separator_in_degree(x: &ProjectivePointSet, gb: &GroebnerBasis, i: usize, d: u32) -> Result<Option<Poly>> {
    let delta = gb.standard_monomials(d);
    let a = point_monomial_matrix(x, &delta);
    let mut rhs = vec![Elem::ZERO; x.len()];
    rhs[i] = Elem::ONE;
    Ok(a.solve(&rhs)?.map(|c| assemble(gb, &delta, &c)))
}

/// Returns `f_i` after checking that it separates `P_i` and that no
/// standard polynomial of smaller degree does.
pub fn colon_witness(x: &ProjectivePointSet, gb: &GroebnerBasis, is: &IndicatorSet, i: usize) -> Result<Poly> {
    let f = &is.fs[i];
    let ev = x.eval_poly(f)?;
    if ev[i].is_zero() || ev.iter().enumerate().any(|(j, v)| j != i && !v.is_zero()) {
        return Err(Error::inconsistent(format!("f_{} does not separate its point", i + 1)));
    }
    let d = is.degrees[i];
    if d > 0 && separator_in_degree(x, gb, i, d - 1)?.is_some() {
        return Err(Error::inconsistent(format!(
            "point {} is separated in degree {} < deg f_{}",
            i + 1,
            d - 1,
            i + 1
        )));
    }
    match separator_in_degree(x, gb, i, d)? {
        Some(g) if g == *f => Ok(f.clone()),
        _ => Err(Error::inconsistent(format!(
            "indicator function of point {} is not unique up to scalar",
            i + 1
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::Field;
    use crate::poly::TermOrder;
    use crate::variety::{hilbert_data, vanishing_ideal};

    #[test]
    fn affine_plane_indicators() {
        let f = Field::prime(3).unwrap();
        let x = ProjectivePointSet::affine_grid(&f, 2).unwrap();
        let gb = vanishing_ideal(&x, &TermOrder::grevlex(3)).unwrap();
        let hd = hilbert_data(&gb, 9).unwrap();
        let is = standard_indicators(&x, &gb, &hd).unwrap();
        assert!(is.degrees.iter().all(|&d| d == 4));
        assert!(is.values.iter().all(|v| v.is_one()));
        assert_eq!(is.essential, vec![Monomial::new(vec![2, 2, 0])]);
        for i in 0..9 {
            colon_witness(&x, &gb, &is, i).unwrap();
        }
    }

    #[test]
    fn two_points() {
        let f = Field::prime(3).unwrap();
        let x = ProjectivePointSet::new(&f, 2, vec![vec![Elem::ONE, Elem::ZERO], vec![Elem::ZERO, Elem::ONE]]).unwrap();
        let gb = vanishing_ideal(&x, &TermOrder::grevlex(2)).unwrap();
        let hd = hilbert_data(&gb, 2).unwrap();
        let is = standard_indicators(&x, &gb, &hd).unwrap();
        assert_eq!(is.fs[0].to_string(), "t1");
        assert_eq!(is.v_number(), 1);
    }
}
