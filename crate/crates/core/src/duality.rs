//! Global and local duality of evaluation codes, parity-check vectors,
//! self-orthogonality and self-duality, and the affine case.

use rayon::prelude::*;

use crate::artinian::ArtinianClassification;
use crate::codes::{code_of_degree, code_of_degree_signed, min_distance, LinearCode};
use crate::error::{Error, Result};
use crate::gf::{Elem, Field};
use crate::groebner::GroebnerBasis;
use crate::indicators::{standard_indicators, IndicatorSet};
use crate::linalg::dot;
use crate::poly::{Monomial, OrderKind, TermOrder};
use crate::variety::{hilbert_data, vanishing_ideal, HilbertData, ProjectivePointSet};

/// A violated clause of the duality criterion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FailureWitness {
    pub degree: Option<u32>,
    pub reason: String,
}

/// How the parity-check vector was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BetaSource {
    /// `(lc(f_i) / f_i(P_i))_i`.
    Indicators,
    /// Nullspace generator of `C_X(r0-1)` scaled to first entry 1.
    Nullspace,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualityCertificate {
    /// `H(d) + H(r0-d-1) = m` for every `0 <= d <= r0`.
    pub symmetric_sum: bool,
    /// Every local v-number equals `r0`.
    pub v_all_r0: bool,
    pub holds: bool,
    pub beta: Option<Vec<Elem>>,
    pub beta_source: Option<BetaSource>,
    /// Degrees `d` with `C_X(d)^⊥ = β·C_X(r0-d-1)` checked directly.
    pub verified_degrees: Vec<u32>,
    /// All violated clauses, the v-number clause first.
    pub failures: Vec<FailureWitness>,
}

impl DualityCertificate {
    pub fn failure_witness(&self) -> Option<&FailureWitness> {
        self.failures.first()
    }
}

/// `x` scaled so that its first nonzero entry is 1.
pub fn normalize(field: &Field, x: &[Elem]) -> Vec<Elem> {
    match x.iter().find(|c| !c.is_zero()) {
        Some(&c) => {
            let inv = field.inv(c);
            x.iter().map(|&v| field.mul(v, inv)).collect()
        }
        None => x.to_vec(),
    }
}

pub fn proportional(field: &Field, a: &[Elem], b: &[Elem]) -> bool {
    a.len() == b.len() && normalize(field, a) == normalize(field, b)
}

/// The nullspace generator of the generator matrix of `C_X(r0-1)`, when
/// that nullspace is one-dimensional.
pub fn parity_check_vector(x: &ProjectivePointSet, gb: &GroebnerBasis, hd: &HilbertData) -> Option<Vec<Elem>> {
    if hd.r0 == 0 {
        return None;
    }
    let dual = code_of_degree(x, gb, hd.r0 - 1).dual();
    (dual.dimension() == 1).then(|| normalize(x.field(), dual.basis().row(0)))
}

/// `(lc(f_i) f_i(P_i)^{-1})_i`.
pub fn indicator_beta(field: &Field, is: &IndicatorSet) -> Vec<Elem> {
    is.leading_coefficients()
        .iter()
        .zip(&is.values)
        .map(|(&l, &v)| field.div(l, v))
        .collect()
}

/// Checks `C_X(d)^⊥ = β·C_X(r0-d-1)`.
pub fn verify_degree(x: &ProjectivePointSet, gb: &GroebnerBasis, r0: u32, beta: &[Elem], d: u32) -> Result<bool> {
    let lhs = code_of_degree(x, gb, d).dual();
    let rhs = code_of_degree_signed(x, gb, r0 as i64 - d as i64 - 1).scaled(beta)?;
    Ok(lhs == rhs)
}

/// Evaluates the duality criterion and, when it holds, verifies the
/// resulting monomial equivalences degree by degree.
pub fn global_duality(
    x: &ProjectivePointSet,
    gb: &GroebnerBasis,
    hd: &HilbertData,
    is: &IndicatorSet,
    limit: u128,
) -> Result<DualityCertificate> {
    let m = hd.degree;
    let r0 = hd.r0;
    let field = x.field();
    let mut failures = Vec::new();
    let v_all_r0 = is.degrees.iter().all(|&v| v == r0);
    if !v_all_r0 {
        let v = is.v_number();
        failures.push(FailureWitness {
            degree: Some(v),
            reason: format!("v(I) = {v} < r0 = {r0}"),
        });
        for (i, &vi) in is.degrees.iter().enumerate().filter(|(_, &vi)| vi != r0) {
            failures.push(FailureWitness {
                degree: Some(vi),
                reason: format!("v_{}(I) = {vi} != r0 = {r0}", i + 1),
            });
        }
    }
    let mut symmetric_sum = true;
    for d in 0..=r0 {
        let sum = hd.value(d as i64) + hd.value(r0 as i64 - d as i64 - 1);
        if sum != m {
            symmetric_sum = false;
            failures.push(FailureWitness {
                degree: Some(d),
                reason: format!("H({d}) + H({}) = {sum} != {m}", r0 as i64 - d as i64 - 1),
            });
        }
    }
    let holds = symmetric_sum && v_all_r0;
    if !holds {
        return Ok(DualityCertificate {
            symmetric_sum,
            v_all_r0,
            holds,
            beta: None,
            beta_source: None,
            verified_degrees: Vec::new(),
            failures,
        });
    }
    let null_beta = parity_check_vector(x, gb, hd)
        .ok_or_else(|| Error::inconsistent("criterion holds but C_X(r0-1)^⊥ is not one-dimensional"))?;
    if null_beta.iter().any(|b| b.is_zero()) {
        return Err(Error::inconsistent("parity-check vector of C_X(r0-1) has a zero entry"));
    }
    let (beta, source) = if gb.ring().order().is_standard_grevlex() && x.last_coordinates_one() {
        let b = indicator_beta(field, is);
        if !proportional(field, &b, &null_beta) {
            return Err(Error::inconsistent(
                "indicator parity-check vector is not proportional to the nullspace vector",
            ));
        }
        (b, BetaSource::Indicators)
    } else {
        (null_beta, BetaSource::Nullspace)
    };
    let checks: Vec<(u32, bool)> = (0..=r0)
        .into_par_iter()
        .map(|d| verify_degree(x, gb, r0, &beta, d).map(|ok| (d, ok)))
        .collect::<Result<_>>()?;
    if let Some((d, _)) = checks.iter().find(|(_, ok)| !ok) {
        return Err(Error::inconsistent(format!(
            "criterion holds but C_X({d})^⊥ != β·C_X({})",
            r0 as i64 - *d as i64 - 1
        )));
    }
    if r0 >= 1 {
        let code = code_of_degree(x, gb, r0 - 1);
        match min_distance(&code, limit) {
            Ok(2) | Err(Error::BudgetExceeded { .. }) => {}
            Ok(w) => {
                return Err(Error::inconsistent(format!(
                    "criterion holds but δ_X(r0-1) = {w} != 2"
                )))
            }
            Err(e) => return Err(e),
        }
    }
    Ok(DualityCertificate {
        symmetric_sum,
        v_all_r0,
        holds,
        beta: Some(beta),
        beta_source: Some(source),
        verified_degrees: checks.into_iter().map(|(d, _)| d).collect(),
        failures,
    })
}

/// Duality holds exactly when the ideal is Gorenstein.
pub fn gorenstein_crosscheck(cert: &DualityCertificate, cls: &ArtinianClassification) -> Result<bool> {
    if cert.holds != cls.gorenstein {
        return Err(Error::inconsistent(format!(
            "duality {} but Gorenstein {}",
            cert.holds, cls.gorenstein
        )));
    }
    Ok(cert.holds)
}

/// A passed local duality check: `γ·ev_d(KΓ1) = ev_k(KΓ2)^⊥`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalDuality {
    pub gamma: Vec<Elem>,
}

fn span(x: &ProjectivePointSet, monomials: &[Monomial]) -> LinearCode {
    LinearCode::from_generators(&x.evaluation_matrix(monomials))
}

/// Verifies local duality for `Γ1 ⊂ Δ_d`, `Γ2 ⊂ Δ_k` and an essential
/// monomial `t_e`. `projective` carries the Gorenstein classification for
/// the relaxed condition `d + k <= r0`.
#[allow(clippy::too_many_arguments)]
pub fn local_duality_verify(
    x: &ProjectivePointSet,
    gb: &GroebnerBasis,
    hd: &HilbertData,
    is: &IndicatorSet,
    (gamma1, d): (&[Monomial], u32),
    (gamma2, k): (&[Monomial], u32),
    te: &Monomial,
    projective: Option<&ArtinianClassification>,
) -> Result<LocalDuality> {
    let field = x.field();
    if !is.essential.contains(te) {
        return Err(Error::NotEssential(gb.ring().format_monomial(te)));
    }
    for (set, deg) in [(gamma1, d), (gamma2, k)] {
        if let Some(u) = set.iter().find(|u| u.degree() != deg || !gb.is_standard(u)) {
            return Err(Error::InvalidParams(format!(
                "{} is not a standard monomial of degree {deg}",
                gb.ring().format_monomial(u)
            )));
        }
    }
    if let Some(cls) = projective {
        let order = gb.ring().order();
        if order.kind() != OrderKind::GRevLex || !x.last_coordinates_one() {
            return Err(Error::InvalidParams(
                "projective mode needs GRevLex and last coordinates 1".into(),
            ));
        }
        if !cls.gorenstein {
            return Err(Error::NotGorenstein);
        }
        if te.exponents()[order.last_var()] != 0 {
            return Err(Error::InvalidParams("the smallest variable divides t_e".into()));
        }
    }
    if gamma1.len() + gamma2.len() != x.len() {
        return Err(Error::ConditionFailed(
            2,
            format!("|Γ1| + |Γ2| = {} != {}", gamma1.len() + gamma2.len(), x.len()),
        ));
    }
    let ok1 = if projective.is_some() { d + k <= hd.r0 } else { d + k == hd.r0 };
    if !ok1 {
        return Err(Error::ConditionFailed(1, format!("d + k = {} against r0 = {}", d + k, hd.r0)));
    }
    for u1 in gamma1 {
        for u2 in gamma2 {
            let r = gb.normal_form(&crate::poly::Poly::monomial(gb.ring(), u1.mul(u2), Elem::ONE))?;
            if !r.coeff(te).is_zero() {
                return Err(Error::ConditionFailed(
                    3,
                    format!("t_e appears in the remainder of {}", gb.ring().format_monomial(&u1.mul(u2))),
                ));
            }
        }
    }
    let gamma: Vec<Elem> = is
        .fs
        .iter()
        .zip(&is.values)
        .map(|(f, &v)| field.div(f.coeff(te), v))
        .collect();
    let lhs = span(x, gamma1).scaled(&gamma)?;
    let rhs = span(x, gamma2).dual();
    if lhs != rhs {
        return Err(Error::inconsistent("conditions (1)-(3) hold but γ·ev(KΓ1) != ev(KΓ2)^⊥"));
    }
    Ok(LocalDuality { gamma })
}

/// Columns `C_1, ..., C_s` of the point matrix are pairwise orthogonal,
/// each also to itself.
fn columns_orthogonal(x: &ProjectivePointSet) -> bool {
    let f = x.field();
    let cols: Vec<Vec<Elem>> = (0..x.nvars()).map(|j| x.points().iter().map(|p| p[j]).collect()).collect();
    (0..cols.len()).all(|i| (i..cols.len()).all(|j| dot(f, &cols[i], &cols[j]).is_zero()))
}

fn sums_to_zero(field: &Field, v: &[Elem]) -> bool {
    v.iter().fold(Elem::ZERO, |a, &b| field.add(a, b)).is_zero()
}

/// `C_X(d) ⊆ C_X(d)^⊥`, decided through `C_X(2d) ⊆ (1, ..., 1)^⊥` and
/// cross-checked directly.
pub fn self_orthogonal(x: &ProjectivePointSet, gb: &GroebnerBasis, d: u32) -> Result<bool> {
    let f = x.field();
    let by_criterion = gb
        .standard_monomials(2 * d)
        .iter()
        .all(|u| sums_to_zero(f, &x.eval_monomial(u)));
    let basis = code_of_degree(x, gb, d).basis().row_vecs();
    let direct = basis.iter().all(|a| basis.iter().all(|b| dot(f, a, b).is_zero()));
    if by_criterion != direct {
        return Err(Error::inconsistent(format!("self-orthogonality tests disagree at d = {d}")));
    }
    Ok(direct)
}

/// `C_X(d) = C_X(d)^⊥`: self-orthogonal with `m = 2 H(d)`, cross-checked
/// directly.
pub fn self_dual(x: &ProjectivePointSet, gb: &GroebnerBasis, d: u32) -> Result<bool> {
    let code = code_of_degree(x, gb, d);
    let by_criterion = self_orthogonal(x, gb, d)? && x.len() == 2 * code.dimension();
    let direct = code.dual() == code;
    if by_criterion != direct {
        return Err(Error::inconsistent(format!("self-duality tests disagree at d = {d}")));
    }
    if direct && x.last_coordinates_one() {
        let p = x.field().characteristic() as usize;
        if !x.len().is_multiple_of(p) || !columns_orthogonal(x) {
            return Err(Error::inconsistent(format!(
                "C_X({d}) is self-dual but the point matrix columns are not orthogonal"
            )));
        }
    }
    Ok(direct)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SelfDualEntry {
    pub degree: u32,
    pub self_orthogonal: bool,
    pub self_dual: bool,
}

/// Self-orthogonality and self-duality of `C_X(d)` for `1 <= d <= r0`.
pub fn self_dual_scan(x: &ProjectivePointSet, gb: &GroebnerBasis, hd: &HilbertData) -> Result<Vec<SelfDualEntry>> {
    (0..=hd.r0)
        .into_par_iter()
        .map(|d| {
            Ok(SelfDualEntry {
                degree: d,
                self_orthogonal: self_orthogonal(x, gb, d)?,
                self_dual: self_dual(x, gb, d)?,
            })
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GorensteinSelfDualEntry {
    pub degree: u32,
    /// `C_X(d)` is monomially equivalent to its dual.
    pub monomially_self_dual: bool,
    pub self_dual: bool,
    /// The point-matrix column criterion, when it applies.
    pub column_criterion: Option<bool>,
}

/// Self-duality classification for Gorenstein ideals, each verdict
/// cross-checked against a direct computation.
pub fn gorenstein_selfdual_classify(
    x: &ProjectivePointSet,
    gb: &GroebnerBasis,
    hd: &HilbertData,
    cls: &ArtinianClassification,
) -> Result<Vec<GorensteinSelfDualEntry>> {
    if !cls.gorenstein {
        return Err(Error::NotGorenstein);
    }
    let field = x.field();
    let r0 = hd.r0;
    let beta = parity_check_vector(x, gb, hd)
        .ok_or_else(|| Error::inconsistent("Gorenstein but C_X(r0-1)^⊥ is not one-dimensional"))?;
    let ones = vec![Elem::ONE; x.len()];
    let mut out = Vec::new();
    for d in 1..=r0 {
        let monomially = r0 == 2 * d + 1;
        let code = code_of_degree(x, gb, d);
        if monomially && code.dual() != code.scaled(&beta)? {
            return Err(Error::inconsistent(format!("C_X({d})^⊥ != β·C_X({d}) although r0 = 2d+1")));
        }
        let strict = monomially
            && code_of_degree(x, gb, 2 * d)
                .basis()
                .row_vecs()
                .iter()
                .all(|r| dot(field, r, &ones).is_zero());
        if strict != self_dual(x, gb, d)? {
            return Err(Error::inconsistent(format!("self-duality criterion disagrees at d = {d}")));
        }
        let column_criterion = (d == 1 && x.last_coordinates_one() && hd.value(1) == x.nvars() as u64)
            .then(|| x.len() == 2 * x.nvars() && columns_orthogonal(x));
        if column_criterion.is_some_and(|c| c != strict) {
            return Err(Error::inconsistent("column criterion disagrees at d = 1"));
        }
        out.push(GorensteinSelfDualEntry {
            degree: d,
            monomially_self_dual: monomially,
            self_dual: strict,
            column_criterion,
        });
    }
    Ok(out)
}

/// The projective closure of an affine set and its duality certificate;
/// the affine Hilbert function is that of the closure.
#[derive(Clone, Debug)]
pub struct AffineDuality {
    pub closure: ProjectivePointSet,
    pub gb: GroebnerBasis,
    pub hilbert: HilbertData,
    pub indicators: IndicatorSet,
    pub certificate: DualityCertificate,
}

pub fn affine_duality(field: &Field, affine: &[Vec<Elem>], order: &TermOrder, limit: u128) -> Result<AffineDuality> {
    let closure = ProjectivePointSet::projective_closure(field, affine)?;
    if order.nvars() != closure.nvars() {
        return Err(Error::DimensionMismatch {
            expected: closure.nvars(),
            found: order.nvars(),
        });
    }
    let gb = vanishing_ideal(&closure, order)?;
    let hilbert = hilbert_data(&gb, closure.len() as u64)?;
    let indicators = standard_indicators(&closure, &gb, &hilbert)?;
    let certificate = global_duality(&closure, &gb, &hilbert, &indicators, limit)?;
    Ok(AffineDuality {
        closure,
        gb,
        hilbert,
        indicators,
        certificate,
    })
}
