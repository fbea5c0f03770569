//! Finite sets of projective points, their vanishing ideals, and Hilbert
//! function invariants.

use crate::error::{Error, Result};
use crate::gf::{Elem, Field};
use crate::groebner::{buchberger, GroebnerBasis, MonomialIdeal};
use crate::linalg::{Echelon, Matrix};
use crate::poly::{Monomial, Poly, Ring, TermOrder};

/// Distinct points of `P^{s-1}` over a finite field, stored by the
/// representatives they were given with.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProjectivePointSet {
    field: Field,
    nvars: usize,
    points: Vec<Vec<Elem>>,
}

/// Scales `p` so that its last nonzero coordinate is 1.
pub fn canonical_representative(field: &Field, p: &[Elem]) -> Option<Vec<Elem>> {
    let last = p.iter().rposition(|x| !x.is_zero())?;
    let inv = field.inv(p[last]);
    Some(p.iter().map(|&x| field.mul(inv, x)).collect())
}

impl ProjectivePointSet {
    /// Validates the points (length, nonzero, pairwise projectively
    /// distinct, at least two) and keeps the given representatives.
    pub fn new(field: &Field, nvars: usize, points: Vec<Vec<Elem>>) -> Result<ProjectivePointSet> {
        let mut canon: Vec<Vec<Elem>> = Vec::with_capacity(points.len());
        for (i, p) in points.iter().enumerate() {
            if p.len() != nvars {
                return Err(Error::DimensionMismatch {
                    expected: nvars,
                    found: p.len(),
                });
            }
            for &x in p {
                field.check(x)?;
            }
            let c = canonical_representative(field, p).ok_or(Error::ZeroPoint(i))?;
            if let Some(j) = canon.iter().position(|q| *q == c) {
                return Err(Error::DuplicatePoint(j, i));
            }
            canon.push(c);
        }
        if points.len() < 2 {
            return Err(Error::TooFewPoints(points.len()));
        }
        Ok(ProjectivePointSet {
            field: field.clone(),
            nvars,
            points,
        })
    }

    /// Canonicalizes every point and drops projective duplicates.
    pub fn from_points_dedup(field: &Field, nvars: usize, points: Vec<Vec<Elem>>) -> Result<ProjectivePointSet> {
        let mut out: Vec<Vec<Elem>> = Vec::new();
        for (i, p) in points.iter().enumerate() {
            if p.len() != nvars {
                return Err(Error::DimensionMismatch {
                    expected: nvars,
                    found: p.len(),
                });
            }
            let c = canonical_representative(field, p).ok_or(Error::ZeroPoint(i))?;
            if !out.contains(&c) {
                out.push(c);
            }
        }
        ProjectivePointSet::new(field, nvars, out)
    }

    /// All `(q^s - 1)/(q - 1)` points of `P^{s-1}`, canonical.
    pub fn full_projective(field: &Field, nvars: usize) -> Result<ProjectivePointSet> {
        let pts = all_vectors(field, nvars)
            .into_iter()
            .filter(|v| v.iter().rposition(|x| !x.is_zero()).is_some_and(|j| v[j].is_one()))
            .collect();
        ProjectivePointSet::new(field, nvars, pts)
    }

    /// The projective torus: points with all coordinates nonzero, last
    /// coordinate 1.
    pub fn torus(field: &Field, nvars: usize) -> Result<ProjectivePointSet> {
        let pts = all_vectors(field, nvars - 1)
            .into_iter()
            .filter(|v| v.iter().all(|x| !x.is_zero()))
            .map(|mut v| {
                v.push(Elem::ONE);
                v
            })
            .collect();
        ProjectivePointSet::new(field, nvars, pts)
    }

    /// The toric set `{[(y^{v_1}, ..., y^{v_s})] : y ∈ (K^*)^n}`, where each
    /// `v_i` is an integer exponent vector of length `n`.
    pub fn parameterized(field: &Field, exponents: &[Vec<i64>]) -> Result<ProjectivePointSet> {
        let n = exponents.first().map_or(0, |v| v.len());
        if n == 0 || exponents.iter().any(|v| v.len() != n) {
            return Err(Error::InvalidParams(
                "exponent vectors must be nonempty and of equal length".into(),
            ));
        }
        let ys: Vec<Vec<Elem>> = all_vectors(field, n)
            .into_iter()
            .filter(|v| v.iter().all(|x| !x.is_zero()))
            .collect();
        let mut pts = Vec::with_capacity(ys.len());
        for y in &ys {
            let mut p = Vec::with_capacity(exponents.len());
            for v in exponents {
                let mut acc = Elem::ONE;
                for (&yi, &e) in y.iter().zip(v) {
                    acc = field.mul(acc, field.pow(yi, e)?);
                }
                p.push(acc);
            }
            pts.push(p);
        }
        ProjectivePointSet::from_points_dedup(field, exponents.len(), pts)
    }

    /// `[X, 1]`: appends a last coordinate 1 to affine points.
    pub fn projective_closure(field: &Field, affine: &[Vec<Elem>]) -> Result<ProjectivePointSet> {
        let n = affine.first().map_or(0, |p| p.len());
        let pts = affine
            .iter()
            .map(|p| {
                let mut v = p.clone();
                v.push(Elem::ONE);
                v
            })
            .collect();
        ProjectivePointSet::new(field, n + 1, pts)
    }

    /// Projective closure of the affine space `F_q^n`, in lexicographic
    /// order of the affine coordinates.
    pub fn affine_grid(field: &Field, n: usize) -> Result<ProjectivePointSet> {
        ProjectivePointSet::projective_closure(field, &all_vectors(field, n))
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[Vec<Elem>] {
        &self.points
    }

    pub fn point(&self, i: usize) -> &[Elem] {
        &self.points[i]
    }

    /// True when every representative has last nonzero coordinate 1.
    pub fn is_canonical(&self) -> bool {
        self.points
            .iter()
            .all(|p| p.iter().rev().find(|x| !x.is_zero()).is_some_and(|x| x.is_one()))
    }

    pub fn canonicalized(&self) -> ProjectivePointSet {
        let points = self
            .points
            .iter()
            .map(|p| canonical_representative(&self.field, p).expect("nonzero point"))
            .collect();
        ProjectivePointSet {
            field: self.field.clone(),
            nvars: self.nvars,
            points,
        }
    }

    /// True when every point has last coordinate 1.
    pub fn last_coordinates_one(&self) -> bool {
        self.points.iter().all(|p| p[self.nvars - 1].is_one())
    }

    /// Multiplies the `i`-th representative by `lambdas[i]`.
    pub fn rescaled(&self, lambdas: &[Elem]) -> Result<ProjectivePointSet> {
        if lambdas.len() != self.len() {
            return Err(Error::DimensionMismatch {
                expected: self.len(),
                found: lambdas.len(),
            });
        }
        if lambdas.iter().any(|l| l.is_zero()) {
            return Err(Error::InvalidParams("scaling factors must be nonzero".into()));
        }
        let f = &self.field;
        let points = self
            .points
            .iter()
            .zip(lambdas)
            .map(|(p, &l)| p.iter().map(|&x| f.mul(l, x)).collect())
            .collect();
        Ok(ProjectivePointSet {
            field: f.clone(),
            nvars: self.nvars,
            points,
        })
    }

    /// The same points over an extension field.
    pub fn lift(&self, big: &Field) -> Result<ProjectivePointSet> {
        let emb = self.field.embedding_into(big)?;
        let points = self
            .points
            .iter()
            .map(|p| p.iter().map(|x| emb[x.index() as usize]).collect())
            .collect();
        Ok(ProjectivePointSet {
            field: big.clone(),
            nvars: self.nvars,
            points,
        })
    }

    /// Evaluation vector `(u(P_1), ..., u(P_m))`.
    pub fn eval_monomial(&self, u: &Monomial) -> Vec<Elem> {
        self.points.iter().map(|p| u.eval(&self.field, p)).collect()
    }

    pub fn eval_poly(&self, f: &Poly) -> Result<Vec<Elem>> {
        self.points.iter().map(|p| f.eval(p)).collect()
    }

    /// Matrix whose rows are the evaluation vectors of `monomials`.
    pub fn evaluation_matrix(&self, monomials: &[Monomial]) -> Matrix {
        let rows = monomials.iter().map(|u| self.eval_monomial(u)).collect();
        Matrix::from_rows(&self.field, self.len(), rows).expect("rows have length m")
    }
}

/// All vectors of `F_q^n`, lexicographic with the first coordinate
/// slowest and elements ordered by packed index.
fn all_vectors(field: &Field, n: usize) -> Vec<Vec<Elem>> {
    let elems: Vec<Elem> = field.elements().collect();
    let mut out = vec![Vec::with_capacity(n)];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|v| {
                elems.iter().map(move |&x| {
                    let mut w = v.clone();
                    w.push(x);
                    w
                })
            })
            .collect();
    }
    out
}

/// Reduced Gröbner basis of `I(X)` by degree-wise interpolation, checked
/// against Buchberger's criterion.
pub fn vanishing_ideal(x: &ProjectivePointSet, order: &TermOrder) -> Result<GroebnerBasis> {
    if order.nvars() != x.nvars() {
        return Err(Error::DimensionMismatch {
            expected: x.nvars(),
            found: order.nvars(),
        });
    }
    let ring = Ring::new(x.field(), order.clone());
    let m = x.len();
    let mut gens: Vec<Poly> = Vec::new();
    let mut lead = MonomialIdeal::zero(x.nvars());
    let mut r0: Option<u32> = None;
    let mut d = 0u32;
    loop {
        let mut candidates: Vec<Monomial> = ring
            .monomials_of_degree(d)
            .into_iter()
            .filter(|u| !lead.contains(u))
            .collect();
        candidates.reverse();
        let mut ech = Echelon::new(x.field());
        let mut standard: Vec<Monomial> = Vec::new();
        let mut new_leads = Vec::new();
        for u in candidates {
            match ech.insert(x.eval_monomial(&u)) {
                None => standard.push(u),
                Some(comb) => {
                    let terms = std::iter::once((u.clone(), Elem::ONE))
                        .chain(standard.iter().cloned().zip(comb));
                    gens.push(Poly::from_terms(&ring, terms.collect::<Vec<_>>()));
                    new_leads.push(u);
                }
            }
        }
        lead = lead.sum(&new_leads);
        if standard.len() > m {
            return Err(Error::inconsistent("more standard monomials than points"));
        }
        match r0 {
            Some(r) if d > r => break,
            None if standard.len() == m => r0 = Some(d),
            _ => {}
        }
        d += 1;
    }
    let order_ref = ring.order();
    gens.sort_by(|a, b| order_ref.cmp(a.lm().unwrap(), b.lm().unwrap()));
    let gb = GroebnerBasis::from_gens_unchecked(&ring, gens);
    if gb.is_certified() {
        return Ok(gb);
    }
    let gb = buchberger(&ring, gb.gens())?;
    if !gb.is_certified() {
        return Err(Error::CertificationFailed);
    }
    Ok(gb)
}

/// Hilbert function data of `S/I(X)` up to the regularity index.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertData {
    /// `H(0), ..., H(r0)`.
    pub values: Vec<u64>,
    pub h_vector: Vec<u64>,
    pub r0: u32,
    pub degree: u64,
}

impl HilbertData {
    /// `H(d)` for any integer `d`, with `H(d) = 0` for `d < 0`.
    pub fn value(&self, d: i64) -> u64 {
        if d < 0 {
            0
        } else if d as usize >= self.values.len() {
            self.degree
        } else {
            self.values[d as usize]
        }
    }

    pub fn a_invariant(&self) -> i64 {
        self.r0 as i64 - 1
    }

    pub fn is_symmetric(&self) -> bool {
        let h = &self.h_vector;
        (0..h.len()).all(|i| h[i] == h[h.len() - 1 - i])
    }
}

pub fn hilbert_data(gb: &GroebnerBasis, m: u64) -> Result<HilbertData> {
    let mut values = Vec::new();
    for d in 0u32.. {
        let h = gb.standard_monomials(d).len() as u64;
        if h > m || (d > 0 && h < values[d as usize - 1]) {
            return Err(Error::inconsistent(format!(
                "Hilbert function value {h} in degree {d} is not compatible with {m} points"
            )));
        }
        values.push(h);
        if h == m {
            break;
        }
        if d as u64 > m {
            return Err(Error::inconsistent("Hilbert function does not reach the degree"));
        }
    }
    let h_vector = values
        .iter()
        .enumerate()
        .map(|(i, &v)| if i == 0 { v } else { v - values[i - 1] })
        .collect();
    Ok(HilbertData {
        r0: values.len() as u32 - 1,
        values,
        h_vector,
        degree: m,
    })
}

/// Symmetry of the h-vector, cross-checked against
/// `H(d) + H(r0-d-1) = m` for `0 <= d <= r0`.
pub fn symmetry_equiv_check(hd: &HilbertData) -> Result<bool> {
    let sym = hd.is_symmetric();
    let r0 = hd.r0 as i64;
    let sums = (0..=r0).all(|d| hd.value(d) + hd.value(r0 - d - 1) == hd.degree);
    if sym != sums {
        return Err(Error::inconsistent(
            "h-vector symmetry disagrees with the Hilbert function sum condition",
        ));
    }
    Ok(sym)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pts(f: &Field, rows: &[&[i64]]) -> Vec<Vec<Elem>> {
        rows.iter()
            .map(|r| r.iter().map(|&x| f.from_int(x)).collect())
            .collect()
    }

    #[test]
    fn four_point_complete_intersection() {
        let f = Field::prime(3).unwrap();
        let x = ProjectivePointSet::new(
            &f,
            4,
            pts(&f, &[&[-1, -1, -1, 1], &[1, 1, 1, 1], &[0, 1, 1, 1], &[0, -1, -1, 1]]),
        )
        .unwrap();
        let gb = vanishing_ideal(&x, &TermOrder::grevlex(4)).unwrap();
        let got: Vec<String> = gb.gens().iter().map(|g| g.to_string()).collect();
        assert_eq!(got, ["t2-t3", "t3^2-t4^2", "t1^2-t1*t3"]);
        let hd = hilbert_data(&gb, 4).unwrap();
        assert_eq!(hd.values, [1, 3, 4]);
        assert_eq!(hd.r0, 2);
    }

    #[test]
    fn two_points_on_a_line() {
        let f = Field::prime(5).unwrap();
        let x = ProjectivePointSet::new(&f, 2, pts(&f, &[&[1, 0], &[0, 1]])).unwrap();
        let gb = vanishing_ideal(&x, &TermOrder::grevlex(2)).unwrap();
        assert_eq!(gb.gens()[0].to_string(), "t1*t2");
        let hd = hilbert_data(&gb, 2).unwrap();
        assert_eq!((hd.values.clone(), hd.h_vector.clone(), hd.r0), (vec![1, 2], vec![1, 1], 1));
        assert!(symmetry_equiv_check(&hd).unwrap());
    }

    #[test]
    fn affine_plane_is_a_complete_intersection() {
        let f = Field::prime(3).unwrap();
        let x = ProjectivePointSet::affine_grid(&f, 2).unwrap();
        assert!(x.last_coordinates_one());
        let gb = vanishing_ideal(&x, &TermOrder::grevlex(3)).unwrap();
        let got: Vec<String> = gb.gens().iter().map(|g| g.to_string()).collect();
        assert_eq!(got, ["t2^3-t2*t3^2", "t1^3-t1*t3^2"]);
        assert_eq!(hilbert_data(&gb, 9).unwrap().values, [1, 3, 6, 8, 9]);
    }

    #[test]
    fn generators() {
        let f5 = Field::prime(5).unwrap();
        let t = ProjectivePointSet::torus(&f5, 2).unwrap();
        assert_eq!(t.points(), &pts(&f5, &[&[1, 1], &[2, 1], &[3, 1], &[4, 1]])[..]);
        let f3 = Field::prime(3).unwrap();
        assert_eq!(ProjectivePointSet::full_projective(&f3, 3).unwrap().len(), 13);
        let par = ProjectivePointSet::parameterized(&f5, &[vec![1, 0], vec![0, 1], vec![0, 0]]).unwrap();
        assert_eq!(par, ProjectivePointSet::torus(&f5, 3).unwrap());
        let sq = ProjectivePointSet::parameterized(&f5, &[vec![2], vec![0]]).unwrap();
        assert_eq!(sq.len(), 2);
    }

    #[test]
    fn validation_errors() {
        let f = Field::prime(3).unwrap();
        assert_eq!(
            ProjectivePointSet::new(&f, 2, pts(&f, &[&[1, 1], &[-1, -1]])),
            Err(Error::DuplicatePoint(0, 1))
        );
        assert_eq!(
            ProjectivePointSet::new(&f, 2, pts(&f, &[&[1, 1], &[0, 0]])),
            Err(Error::ZeroPoint(1))
        );
        assert_eq!(
            ProjectivePointSet::new(&f, 2, pts(&f, &[&[1, 1]])),
            Err(Error::TooFewPoints(1))
        );
    }

    #[test]
    fn asymmetric_h_vector() {
        let hd = HilbertData {
            values: vec![1, 3, 6, 9, 10],
            h_vector: vec![1, 2, 3, 3, 1],
            r0: 4,
            degree: 10,
        };
        assert!(!symmetry_equiv_check(&hd).unwrap());
    }
}
