//! Gröbner bases of homogeneous ideals, standard monomials, and the
//! monomial-ideal arithmetic used by the footprint bound.

mod monomial_ideal;

use std::collections::HashMap;

pub use monomial_ideal::MonomialIdeal;

use crate::error::{Error, Result};
use crate::gf::Elem;
use crate::linalg::Echelon;
use crate::poly::{Monomial, Poly, Ring};

/// A reduced Gröbner basis: monic, self-reduced, sorted ascending by
/// leading monomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerBasis {
    ring: Ring,
    gens: Vec<Poly>,
    certified: bool,
}

impl GroebnerBasis {
    /// Wraps generators that are already monic, reduced and sorted, then
    /// checks all S-pairs.
    pub(crate) fn from_reduced(ring: &Ring, gens: Vec<Poly>) -> GroebnerBasis {
        let mut gb = GroebnerBasis {
            ring: ring.clone(),
            gens,
            certified: false,
        };
        gb.certified = gb_certify(&gb);
        gb
    }

    /// Builds a basis from arbitrary generators without completing them;
    /// `certified` reports whether they happen to form a Gröbner basis.
    pub fn from_gens_unchecked(ring: &Ring, gens: Vec<Poly>) -> GroebnerBasis {
        let mut gb = GroebnerBasis {
            ring: ring.clone(),
            gens: gens.into_iter().filter(|g| !g.is_zero()).map(|g| g.monic()).collect(),
            certified: false,
        };
        gb.certified = gb_certify(&gb);
        gb
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn gens(&self) -> &[Poly] {
        &self.gens
    }

    pub fn is_certified(&self) -> bool {
        self.certified
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.gens.iter().filter_map(|g| g.lm().cloned()).collect()
    }

    pub fn initial_ideal(&self) -> MonomialIdeal {
        MonomialIdeal::new(self.ring.nvars(), self.leading_monomials())
    }

    pub fn is_standard(&self, m: &Monomial) -> bool {
        !self.gens.iter().any(|g| g.lm().is_some_and(|l| l.divides(m)))
    }

    /// `Δ(I)_d` in descending order.
    pub fn standard_monomials(&self, d: u32) -> Vec<Monomial> {
        self.ring
            .monomials_of_degree(d)
            .into_iter()
            .filter(|m| self.is_standard(m))
            .collect()
    }

    pub fn normal_form(&self, f: &Poly) -> Result<Poly> {
        normal_form(f, self)
    }

    /// Ideal membership; meaningful only for certified bases.
    pub fn contains(&self, f: &Poly) -> Result<bool> {
        Ok(self.normal_form(f)?.is_zero())
    }

    /// Appends generators and recomputes a reduced basis.
    pub fn extend(&self, extra: &[Poly]) -> Result<GroebnerBasis> {
        let mut all = self.gens.clone();
        all.extend_from_slice(extra);
        buchberger(&self.ring, &all)
    }
}

/// Remainder of `f` on division by the basis: no term of the result is
/// divisible by a leading monomial.
pub fn normal_form(f: &Poly, gb: &GroebnerBasis) -> Result<Poly> {
    if f.ring() != gb.ring() {
        return Err(Error::RingMismatch);
    }
    Ok(reduce(f, &gb.gens))
}

fn reduce(f: &Poly, gens: &[Poly]) -> Poly {
    let field = f.field().clone();
    let mut p = f.clone();
    let mut rem: Vec<(Monomial, Elem)> = Vec::new();
    while let Some((m, c)) = p.terms().first().cloned() {
        let divisor = gens
            .iter()
            .find(|g| g.lm().is_some_and(|l| l.divides(&m)));
        match divisor {
            Some(g) => {
                let lc = g.lc().expect("nonzero divisor");
                let coef = field.neg(field.div(c, lc));
                let shift = m.div(g.lm().expect("nonzero divisor"));
                p = p.add_scaled(coef, &shift, g);
            }
            None => {
                rem.push((m.clone(), c));
                p = Poly::from_sorted_unchecked(f.ring(), p.terms()[1..].to_vec());
            }
        }
    }
    Poly::from_sorted_unchecked(f.ring(), rem)
}

fn s_polynomial(f: &Poly, g: &Poly) -> Poly {
    let (lf, lg) = (f.lm().unwrap(), g.lm().unwrap());
    let l = lf.lcm(lg);
    let field = f.field();
    let a = f.scale(field.inv(f.lc().unwrap())).mul_monomial(&l.div(lf));
    a.add_scaled(field.neg(field.inv(g.lc().unwrap())), &l.div(lg), g)
}

/// True iff every S-polynomial of the generators reduces to zero.
pub fn gb_certify(gb: &GroebnerBasis) -> bool {
    let gens = &gb.gens;
    for i in 0..gens.len() {
        for j in (i + 1)..gens.len() {
            let (li, lj) = (gens[i].lm().unwrap(), gens[j].lm().unwrap());
            if li.is_coprime(lj) {
                continue;
            }
            if !reduce(&s_polynomial(&gens[i], &gens[j]), gens).is_zero() {
                return false;
            }
        }
    }
    true
}

/// Reduced Gröbner basis of a homogeneous ideal by Buchberger's algorithm
/// with the normal selection strategy and the coprime criterion.
pub fn buchberger(ring: &Ring, input: &[Poly]) -> Result<GroebnerBasis> {
    let mut gens: Vec<Poly> = Vec::new();
    for f in input {
        if f.ring() != ring {
            return Err(Error::RingMismatch);
        }
        if !f.is_homogeneous() {
            return Err(Error::NotHomogeneous(f.to_string()));
        }
        if !f.is_zero() {
            gens.push(f.monic());
        }
    }
    let order = ring.order();
    gens.sort_by(|a, b| order.cmp(a.lm().unwrap(), b.lm().unwrap()));

    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for j in 0..gens.len() {
        for i in 0..j {
            pairs.push((i, j));
        }
    }
    loop {
        let pick = pairs
            .iter()
            .enumerate()
            .min_by(|(_, &(a, b)), (_, &(c, d))| {
                let l1 = gens[a].lm().unwrap().lcm(gens[b].lm().unwrap());
                let l2 = gens[c].lm().unwrap().lcm(gens[d].lm().unwrap());
                order.cmp(&l1, &l2).then((a, b).cmp(&(c, d)))
            })
            .map(|(k, _)| k);
        let Some(k) = pick else { break };
        let (i, j) = pairs.swap_remove(k);
        if gens[i].lm().unwrap().is_coprime(gens[j].lm().unwrap()) {
            continue;
        }
        let r = reduce(&s_polynomial(&gens[i], &gens[j]), &gens);
        if !r.is_zero() {
            let n = gens.len();
            gens.push(r.monic());
            pairs.extend((0..n).map(|i| (i, n)));
        }
    }
    Ok(GroebnerBasis::from_reduced(ring, interreduce(ring, gens)))
}

/// Minimalizes and fully reduces a Gröbner basis.
fn interreduce(ring: &Ring, mut gens: Vec<Poly>) -> Vec<Poly> {
    let order = ring.order();
    gens.sort_by(|a, b| order.cmp(a.lm().unwrap(), b.lm().unwrap()));
    let mut minimal: Vec<Poly> = Vec::new();
    for g in gens {
        if !minimal.iter().any(|h| h.lm().unwrap().divides(g.lm().unwrap())) {
            minimal.push(g);
        }
    }
    let mut out = Vec::with_capacity(minimal.len());
    for i in 0..minimal.len() {
        let others: Vec<Poly> = minimal
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, g)| g.clone())
            .collect();
        let lead = Poly::monomial(ring, minimal[i].lm().unwrap().clone(), Elem::ONE);
        let tail = minimal[i].sub(&lead).expect("same ring");
        let reduced_tail = reduce(&tail, &others);
        out.push(lead.add(&reduced_tail).expect("same ring"));
    }
    out
}

/// Number of minimal homogeneous generators of the ideal, summing
/// `dim I_d - dim (S_1 I_{d-1})_d` over `d <= max_degree`.
pub fn minimal_generator_count(gb: &GroebnerBasis, max_degree: u32) -> usize {
    let ring = gb.ring();
    let field = ring.field();
    let top = gb
        .gens
        .iter()
        .filter_map(|g| g.homogeneous_degree())
        .max()
        .unwrap_or(0)
        .max(max_degree);
    let mut count = 0;
    for d in 0..=top {
        let basis = ring.monomials_of_degree(d);
        let index: HashMap<&Monomial, usize> = basis.iter().enumerate().map(|(i, m)| (m, i)).collect();
        let to_vec = |p: &Poly| {
            let mut v = vec![Elem::ZERO; basis.len()];
            for (m, c) in p.terms() {
                v[index[m]] = *c;
            }
            v
        };
        let mut ech = Echelon::new(field);
        let mut fresh = Vec::new();
        for g in &gb.gens {
            let e = match g.homogeneous_degree() {
                Some(e) if e <= d => e,
                _ => continue,
            };
            if e == d {
                fresh.push(to_vec(g));
                continue;
            }
            for w in Monomial::all_of_degree(ring.nvars(), d - e) {
                ech.insert(to_vec(&g.mul_monomial(&w)));
            }
        }
        let before = ech.rank();
        for v in fresh {
            ech.insert(v);
        }
        count += ech.rank() - before;
    }
    count
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::Field;
    use crate::poly::TermOrder;

    fn ring(p: u32, k: u32, s: usize) -> Ring {
        Ring::new(&Field::new(p, k, None).unwrap(), TermOrder::grevlex(s))
    }

    fn polys(r: &Ring, src: &[&str]) -> Vec<Poly> {
        src.iter().map(|s| r.parse_poly(s).unwrap()).collect()
    }

    #[test]
    fn completes_over_f4() {
        let r = ring(2, 2, 3);
        let gb = buchberger(&r, &polys(&r, &["t1*t2", "t1^3+t2^3+t3^3"])).unwrap();
        assert!(gb.is_certified());
        assert_eq!(gb.gens(), &polys(&r, &["t1*t2", "t1^3+t2^3+t3^3", "t2^4+t2*t3^3"])[..]);
    }

    #[test]
    fn coprime_leading_terms_stay() {
        let r = ring(3, 1, 3);
        let input = polys(&r, &["t2^3-t2*t3^2", "t1^3-t1*t3^2"]);
        let gb = buchberger(&r, &input).unwrap();
        assert_eq!(gb.gens(), &input[..]);
        assert!(buchberger(&r, &polys(&r, &["0"])).unwrap().gens().is_empty());
    }

    #[test]
    fn certification_detects_missing_elements() {
        let r = ring(3, 1, 2);
        let raw = GroebnerBasis::from_gens_unchecked(&r, polys(&r, &["t1+t2", "t1^2"]));
        assert!(!raw.is_certified());
        let gb = buchberger(&r, raw.gens()).unwrap();
        assert_eq!(gb.gens(), &polys(&r, &["t1+t2", "t2^2"])[..]);
    }

    #[test]
    fn rejects_inhomogeneous_input() {
        let r = ring(3, 1, 2);
        assert!(matches!(
            buchberger(&r, &polys(&r, &["t1^2+t2"])),
            Err(Error::NotHomogeneous(_))
        ));
    }

    #[test]
    fn normal_form_by_reduced_basis() {
        let r = ring(3, 1, 4);
        let gb = buchberger(&r, &polys(&r, &["t2-t3", "t3^2-t4^2", "t1^2-t1*t3"])).unwrap();
        let nf = gb.normal_form(&r.parse_poly("t1^2").unwrap()).unwrap();
        assert_eq!(nf, r.parse_poly("t1*t3").unwrap());
        let std = r.parse_poly("t1*t3+t4^2").unwrap();
        assert_eq!(gb.normal_form(&std).unwrap(), std);
        assert_eq!(minimal_generator_count(&gb, 3), 3);
        assert_eq!(gb.standard_monomials(0), vec![Monomial::one(4)]);
        let other = ring(3, 1, 3);
        assert_eq!(
            gb.normal_form(&other.parse_poly("t1").unwrap()),
            Err(Error::RingMismatch)
        );
    }

    #[test]
    fn redundant_generators_are_not_minimal() {
        let r = ring(3, 1, 3);
        let input = polys(&r, &["t2^3-t2*t3^2", "t1^3-t1*t3^2", "t1*t2^3-t1*t2*t3^2"]);
        let gb = buchberger(&r, &input).unwrap();
        assert_eq!(minimal_generator_count(&gb, 5), 2);
    }
}
