//! Artinian reductions `S/(I, h)`, their socles, and the resulting
//! Gorenstein, level, type and s-number classification.

use crate::error::{Error, Result};
use crate::gf::{Elem, Field};
use crate::groebner::{buchberger, GroebnerBasis};
use crate::indicators::IndicatorSet;
use crate::linalg::Matrix;
use crate::poly::{Monomial, Poly, Ring};
use crate::variety::{HilbertData, ProjectivePointSet};

/// A linear form `h = sum c_i t_i` over `F_{q^e}` that vanishes at no
/// point of `X`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RegularForm {
    pub field: Field,
    pub extension_degree: u32,
    pub coeffs: Vec<Elem>,
}

fn is_regular(x: &ProjectivePointSet, field: &Field, coeffs: &[Elem]) -> Option<usize> {
    x.points().iter().position(|p| {
        p.iter()
            .zip(coeffs)
            .fold(Elem::ZERO, |acc, (&a, &c)| field.add(acc, field.mul(a, c)))
            .is_zero()
    })
}

/// Forms with first nonzero coefficient 1, in lexicographic order of
/// packed coefficients.
fn normalized_forms(field: &Field, s: usize) -> impl Iterator<Item = Vec<Elem>> + '_ {
    (0..s).rev().flat_map(move |lead| {
        let tail = s - lead - 1;
        let q = field.order() as u64;
        (0..q.pow(tail as u32)).map(move |mut idx| {
            let mut v = vec![Elem::ZERO; s];
            v[lead] = Elem::ONE;
            for c in v[lead + 1..].iter_mut().rev() {
                *c = field.elem((idx % q) as u32).expect("in range");
                idx /= q;
            }
            v
        })
    })
}

/// Finds a regular linear form: the smallest variable of the order first,
/// then the other variables, then general forms; if no form over `F_q`
/// avoids all points, the smallest extension admitting one is used.
pub fn find_regular_linear_form(x: &ProjectivePointSet, ring: &Ring) -> Result<RegularForm> {
    let s = x.nvars();
    let base = x.field();
    let mut vars = vec![ring.order().last_var()];
    vars.extend((0..s).filter(|&i| i != ring.order().last_var()));
    for i in vars {
        let mut v = vec![Elem::ZERO; s];
        v[i] = Elem::ONE;
        if is_regular(x, base, &v).is_none() {
            return Ok(RegularForm {
                field: base.clone(),
                extension_degree: 1,
                coeffs: v,
            });
        }
    }
    for e in 1u32.. {
        let field = if e == 1 { base.clone() } else { base.extension(e)? };
        let lifted = if e == 1 { x.clone() } else { x.lift(&field)? };
        let found = normalized_forms(&field, s).find(|v| is_regular(&lifted, &field, v).is_none());
        if let Some(coeffs) = found {
            return Ok(RegularForm {
                field,
                extension_degree: e,
                coeffs,
            });
        }
    }
    unreachable!("some extension always admits an avoiding hyperplane")
}

/// `c_1 t_1 + ... + c_s t_s`.
pub fn linear_form(ring: &Ring, coeffs: &[Elem]) -> Poly {
    let n = ring.nvars();
    Poly::from_terms(
        ring,
        coeffs
            .iter()
            .enumerate()
            .map(|(i, &c)| (Monomial::var(n, i), c))
            .collect::<Vec<_>>(),
    )
}

/// Index `i` when `h = t_i` with `t_i` the smallest variable of a GRevLex
/// order.
fn shortcut_variable(ring: &Ring, h: &Poly) -> Option<usize> {
    let order = ring.order();
    if order.kind() != crate::poly::OrderKind::GRevLex {
        return None;
    }
    match h.terms() {
        [(m, c)] if c.is_one() && m.degree() == 1 && m.exponents()[order.last_var()] == 1 => Some(order.last_var()),
        _ => None,
    }
}

/// Gröbner basis of `J = (I, h)`. For `h` the smallest variable under
/// GRevLex, `G ∪ {h}` is already a Gröbner basis and is checked as such.
pub fn artinian_reduce(x: &ProjectivePointSet, gb: &GroebnerBasis, h: &Poly) -> Result<GroebnerBasis> {
    if h.homogeneous_degree() != Some(1) {
        return Err(Error::InvalidParams(format!("{h} is not a linear form")));
    }
    if let Some(i) = x.points().iter().position(|p| h.eval(p).map(|v| v.is_zero()).unwrap_or(true)) {
        return Err(Error::NotRegular(h.to_string(), i));
    }
    let mut gens = gb.gens().to_vec();
    gens.push(h.clone());
    if shortcut_variable(gb.ring(), h).is_some() {
        let raw = GroebnerBasis::from_gens_unchecked(gb.ring(), gens.clone());
        if !raw.is_certified() {
            return Err(Error::inconsistent(
                "G together with the smallest variable is not a Gröbner basis",
            ));
        }
    }
    buchberger(gb.ring(), &gens)
}

/// Result of classifying `S/I(X)` through an Artinian reduction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ArtinianClassification {
    pub h: Poly,
    pub extension_degree: u32,
    pub j_basis: GroebnerBasis,
    /// Socle basis elements with their degrees.
    pub socle: Vec<(u32, Poly)>,
    pub socle_degrees: Vec<u32>,
    pub socle_type: usize,
    pub level: bool,
    pub gorenstein: bool,
    pub s_number: u32,
    /// The top degree of `S/J` equals `r0`.
    pub reg_check: bool,
    /// The only standard monomial of `J` in degree `r0`, when Gorenstein.
    pub socle_monomial: Option<Monomial>,
}

/// Socle of the Artinian ring `S/J`, degree by degree, as the common kernel
/// of multiplication by the variables.
pub fn socle(j: &GroebnerBasis) -> Result<Vec<(u32, Poly)>> {
    if j.initial_ideal().dim()? != 0 {
        return Err(Error::NotArtinian);
    }
    let ring = j.ring();
    let field = ring.field();
    let n = ring.nvars();
    let mut levels = vec![j.standard_monomials(0)];
    while !levels.last().expect("nonempty").is_empty() {
        let d = levels.len() as u32;
        levels.push(j.standard_monomials(d));
    }
    let mut out = Vec::new();
    for e in 0..levels.len() - 1 {
        let (cur, next) = (&levels[e], &levels[e + 1]);
        let mut rows: Vec<Vec<Elem>> = Vec::new();
        for i in 0..n {
            let t = Monomial::var(n, i);
            let images: Vec<Poly> = cur
                .iter()
                .map(|u| j.normal_form(&Poly::monomial(ring, u.mul(&t), Elem::ONE)))
                .collect::<Result<_>>()?;
            for w in next {
                rows.push(images.iter().map(|p| p.coeff(w)).collect());
            }
        }
        let kernel = if rows.is_empty() {
            Matrix::identity(field, cur.len())
        } else {
            Matrix::from_rows(field, cur.len(), rows)?.nullspace()
        };
        for v in kernel.row_vecs() {
            let terms = cur.iter().cloned().zip(v).collect::<Vec<_>>();
            out.push((e as u32, Poly::from_terms(ring, terms)));
        }
    }
    Ok(out)
}

/// Classifies `S/I(X)` via `S/(I, h)`. Without a supplied `h` (given over
/// the base field), a regular form is searched for.
pub fn classify(
    x: &ProjectivePointSet,
    gb: &GroebnerBasis,
    hd: &HilbertData,
    h: Option<&Poly>,
) -> Result<ArtinianClassification> {
    let (x, gb, h, e) = match h {
        Some(h) => {
            if h.ring() != gb.ring() {
                return Err(Error::RingMismatch);
            }
            (x.clone(), gb.clone(), h.clone(), 1)
        }
        None => {
            let form = find_regular_linear_form(x, gb.ring())?;
            if form.extension_degree == 1 {
                (x.clone(), gb.clone(), linear_form(gb.ring(), &form.coeffs), 1)
            } else {
                let (lx, lgb) = lift(x, gb, &form.field)?;
                let h = linear_form(lgb.ring(), &form.coeffs);
                (lx, lgb, h, form.extension_degree)
            }
        }
    };
    let j = artinian_reduce(&x, &gb, &h)?;
    let soc = socle(&j)?;
    let socle_degrees: Vec<u32> = soc.iter().map(|(d, _)| *d).collect();
    let socle_type = soc.len();
    let level = socle_degrees.windows(2).all(|w| w[0] == w[1]);
    let gorenstein = socle_type == 1;
    let s_number = *socle_degrees.iter().min().ok_or(Error::NotArtinian)?;
    let top = (0u32..).find(|&d| j.standard_monomials(d + 1).is_empty()).expect("Artinian");
    let reg_check = top == hd.r0;
    let socle_monomial = if gorenstein {
        match j.standard_monomials(hd.r0).as_slice() {
            [t] => Some(t.clone()),
            _ => None,
        }
    } else {
        None
    };
    if level && hd.is_symmetric() && !gorenstein {
        return Err(Error::inconsistent("level with symmetric h-vector but not Gorenstein"));
    }
    Ok(ArtinianClassification {
        h,
        extension_degree: e,
        j_basis: j,
        socle: soc,
        socle_degrees,
        socle_type,
        level,
        gorenstein,
        s_number,
        reg_check,
        socle_monomial,
    })
}

/// The point set and basis over an extension field.
pub fn lift(x: &ProjectivePointSet, gb: &GroebnerBasis, big: &Field) -> Result<(ProjectivePointSet, GroebnerBasis)> {
    let emb = x.field().embedding_into(big)?;
    let ring = gb.ring().with_field(big);
    let gens: Vec<Poly> = gb.gens().iter().map(|g| g.lift(&ring, &emb)).collect();
    let lifted = buchberger(&ring, &gens)?;
    Ok((x.lift(big)?, lifted))
}

/// Outcome of [`verify_socle_identities`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SocleIdentities {
    /// `λ_i` with `NF(f_i, J) = λ_i t^a`.
    pub lambdas: Vec<Elem>,
    /// Whether the smallest-variable identities were applicable and checked.
    pub smallest_variable_checks: bool,
}

/// Checks the socle identities of a Gorenstein reduction against the
/// indicator functions: each `f_i` reduces modulo `J` to a nonzero multiple
/// of the socle monomial, every `deg f_i = r0`, and when `h` is the smallest
/// variable of GRevLex with all its values 1, `f_i = lc(f_i) t^a + t_s G_i`.
pub fn verify_socle_identities(
    cls: &ArtinianClassification,
    x: &ProjectivePointSet,
    gb: &GroebnerBasis,
    hd: &HilbertData,
    is: &IndicatorSet,
) -> Result<SocleIdentities> {
    if !cls.gorenstein {
        return Err(Error::NotGorenstein);
    }
    let violated = |what: String| Error::IdentityViolated(what);
    let ta = cls
        .socle_monomial
        .clone()
        .ok_or_else(|| violated("no unique standard monomial of J in degree r0".into()))?;
    let jring = cls.j_basis.ring().clone();
    let emb = x.field().embedding_into(jring.field())?;
    let mut lambdas = Vec::new();
    for (i, f) in is.fs.iter().enumerate() {
        if is.degrees[i] != hd.r0 {
            return Err(violated(format!("deg f_{} != r0", i + 1)));
        }
        let r = cls.j_basis.normal_form(&f.lift(&jring, &emb))?;
        match r.terms() {
            [(m, c)] if *m == ta => lambdas.push(*c),
            _ => return Err(violated(format!("remainder of f_{} modulo J is {r}", i + 1))),
        }
    }
    let shortcut = cls.extension_degree == 1
        && shortcut_variable(gb.ring(), &cls.h).is_some()
        && x.last_coordinates_one();
    if shortcut {
        let s = gb.ring().order().last_var();
        if ta.exponents()[s] != 0 {
            return Err(violated("t_s divides the socle monomial".into()));
        }
        if !is.essential.contains(&ta) {
            return Err(violated("the socle monomial is not essential".into()));
        }
        for (i, f) in is.fs.iter().enumerate() {
            if lambdas[i] != f.lc().expect("nonzero") {
                return Err(violated(format!("λ_{} != lc(f_{})", i + 1, i + 1)));
            }
            let rest = f.sub(&Poly::monomial(gb.ring(), ta.clone(), lambdas[i]))?;
            if rest.terms().iter().any(|(m, _)| m.exponents()[s] == 0) {
                return Err(violated(format!("f_{} - λ t^a is not divisible by t_s", i + 1)));
            }
        }
        let ts = Monomial::var(gb.ring().nvars(), s);
        for d in 0..=hd.r0 {
            for u in gb.standard_monomials(d) {
                let mut w = u.clone();
                for _ in 0..3 {
                    w = w.mul(&ts);
                    if !gb.is_standard(&w) {
                        return Err(violated(format!("t_s multiple of standard monomial {u} is not standard")));
                    }
                }
            }
        }
    }
    Ok(SocleIdentities {
        lambdas,
        smallest_variable_checks: shortcut,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::TermOrder;
    use crate::variety::{hilbert_data, vanishing_ideal};

    #[test]
    fn projective_line_needs_an_extension() {
        let f = Field::prime(3).unwrap();
        let x = ProjectivePointSet::full_projective(&f, 2).unwrap();
        let ring = Ring::new(&f, TermOrder::grevlex(2));
        let form = find_regular_linear_form(&x, &ring).unwrap();
        assert_eq!(form.extension_degree, 2);
        let gb = vanishing_ideal(&x, ring.order()).unwrap();
        let hd = hilbert_data(&gb, 4).unwrap();
        let cls = classify(&x, &gb, &hd, None).unwrap();
        assert!(cls.gorenstein);
        assert_eq!(cls.socle_degrees, vec![hd.r0]);
    }

    #[test]
    fn two_points_reduce_to_a_line() {
        let f = Field::prime(5).unwrap();
        let x = ProjectivePointSet::new(&f, 2, vec![vec![Elem::ONE, Elem::ONE], vec![f.from_int(2), Elem::ONE]]).unwrap();
        let gb = vanishing_ideal(&x, &TermOrder::grevlex(2)).unwrap();
        let hd = hilbert_data(&gb, 2).unwrap();
        let cls = classify(&x, &gb, &hd, None).unwrap();
        assert_eq!(cls.h.to_string(), "t2");
        assert_eq!(cls.j_basis.standard_monomials(1).len(), 1);
        assert!(cls.gorenstein && cls.level && cls.reg_check);
    }

    #[test]
    fn regularity_is_required() {
        let f = Field::prime(3).unwrap();
        let x = ProjectivePointSet::new(&f, 2, vec![vec![Elem::ONE, Elem::ZERO], vec![Elem::ZERO, Elem::ONE]]).unwrap();
        let gb = vanishing_ideal(&x, &TermOrder::grevlex(2)).unwrap();
        let h = gb.ring().var(1);
        assert!(matches!(artinian_reduce(&x, &gb, &h), Err(Error::NotRegular(_, 0))));
    }
}
