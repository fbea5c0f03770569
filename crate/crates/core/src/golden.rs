//! The worked-example corpus: points files paired with expected
//! invariants, and a runner that reports every mismatch with a diff.

use std::collections::BTreeMap;
use std::fmt::Debug;

use serde::Deserialize;

use crate::artinian::{artinian_reduce, classify, verify_socle_identities, ArtinianClassification};
use crate::codes::{code_of_degree, min_distance, weight_matrix, Cell, LinearCode};
use crate::duality::{
    global_duality, gorenstein_crosscheck, gorenstein_selfdual_classify, local_duality_verify, proportional,
    self_dual_scan, DualityCertificate,
};
use crate::error::{Error, Result};
use crate::gf::{Elem, Field};
use crate::groebner::{buchberger, minimal_generator_count, GroebnerBasis};
use crate::indicators::{standard_indicators, IndicatorSet};
use crate::io::{parse_order_spec, parse_points_file};
use crate::poly::{Monomial, Poly, Ring};
use crate::variety::{hilbert_data, vanishing_ideal, HilbertData, ProjectivePointSet};

macro_rules! corpus {
    ($($name:literal),* $(,)?) => {
        &[$(($name, include_str!(concat!("../golden/", $name, ".pts")), include_str!(concat!("../golden/", $name, ".toml")))),*]
    };
}

/// `(name, points file, expected values)`.
pub const CORPUS: &[(&str, &str, &str)] = corpus![
    "ci_four_points_f3",
    "gorenstein_non_ci_f3",
    "affine_plane_f3",
    "five_points_p3_f3",
    "self_dual_f4",
    "projective_line_f9",
    "projective_plane_f3",
    "torus_p1_f5",
    "ten_points_glex_f3",
    "seven_points_f3",
];

/// A field element written as an integer or an element literal.
#[derive(Clone, Debug, Deserialize)]
#[serde(untagged)]
pub enum Lit {
    Int(i64),
    Text(String),
}

impl Lit {
    fn elem(&self, field: &Field) -> Result<Elem> {
        match self {
            Lit::Int(i) => Ok(field.from_int(*i)),
            Lit::Text(s) => field.parse(s),
        }
    }
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Expected {
    pub description: String,
    /// Generators of the vanishing ideal, compared by reduced Gröbner basis.
    pub ideal: Vec<String>,
    /// The reduced Gröbner basis itself.
    pub gb: Option<Vec<String>>,
    pub hilbert: Option<Vec<u64>>,
    /// `(d, H(d))` pairs.
    pub hilbert_at: Option<Vec<(i64, u64)>>,
    pub h_vector: Option<Vec<u64>>,
    pub r0: Option<u32>,
    pub complete_intersection: Option<bool>,
    pub minimal_generators: Option<usize>,
    /// Standard indicator functions in point order, up to scalar.
    pub indicators: Option<Vec<String>>,
    /// Values of the listed indicators at their own points.
    pub indicator_values: Option<Vec<Lit>>,
    pub v_numbers: Option<Vec<u32>>,
    pub v_number: Option<u32>,
    pub essential: Option<Vec<String>>,
    pub essential_includes: Option<Vec<String>>,
    /// `δ_X(d)` for `d = 1, 2, ...`.
    pub min_distance: Option<Vec<u64>>,
    /// `R_r` for `r = 1, ..., m`.
    pub regularity_indices: Option<Vec<u32>>,
    /// Standard monomials by degree.
    pub standard: Option<BTreeMap<String, Vec<String>>>,
    pub duality: Option<DualityExpected>,
    pub artinian: Option<ArtinianExpected>,
    pub selfdual: Option<SelfDualExpected>,
    pub weights: Option<WeightsExpected>,
    #[serde(default)]
    pub local_duality: Vec<LocalExpected>,
    pub variant: Option<VariantExpected>,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DualityExpected {
    pub holds: bool,
    /// Up to scalar.
    pub beta: Option<Vec<Lit>>,
    pub witness: Option<String>,
    /// `(a, b)` with `C_X(a)^⊥ = C_X(b)`.
    pub dual_pairs: Option<Vec<(u32, u32)>>,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ArtinianExpected {
    pub h: Option<String>,
    /// Linear forms regular on `S/I`.
    pub regular: Option<Vec<String>>,
    pub gorenstein: bool,
    pub socle_type: Option<usize>,
    pub level: Option<bool>,
    pub s_number: Option<u32>,
    pub socle_degrees: Option<Vec<u32>>,
    /// Socle basis, up to scalar.
    pub socle: Option<Vec<String>>,
    /// Remainder of every listed indicator function modulo `(I, h)`, up to scalar.
    pub remainder: Option<String>,
    /// Exact scalars `lambda_i` with remainder `lambda_i * remainder`.
    pub remainder_scalars: Option<Vec<Lit>>,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SelfDualExpected {
    pub self_orthogonal: Option<Vec<u32>>,
    pub self_dual: Option<Vec<u32>>,
    pub monomially_self_dual: Option<Vec<u32>>,
    pub column_criterion: Option<bool>,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WeightsExpected {
    /// Rows of `δ_X(d, r)`, `inf` for infinity.
    pub rows: Vec<String>,
    pub footprint_equal: Option<bool>,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LocalExpected {
    pub gamma1: Vec<String>,
    pub d: u32,
    pub gamma2: Vec<String>,
    pub k: u32,
    pub te: String,
    pub projective: bool,
    pub gamma: Vec<Lit>,
    pub span1: Option<Vec<Vec<Lit>>>,
    pub span2: Option<Vec<Vec<Lit>>>,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct VariantExpected {
    pub order: String,
    pub indicators: Option<Vec<String>>,
    pub indicator_values: Option<Vec<Lit>>,
    pub essential: Option<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    /// Diff or error message for failed checks.
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExampleOutcome {
    pub name: String,
    pub description: String,
    pub checks: Vec<Check>,
}

impl ExampleOutcome {
    pub fn passed(&self) -> bool {
        !self.checks.is_empty() && self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

/// Everything computed for one example.
pub struct Analysis {
    pub x: ProjectivePointSet,
    pub gb: GroebnerBasis,
    pub hd: HilbertData,
    pub is: IndicatorSet,
    pub duality: DualityCertificate,
    pub artinian: ArtinianClassification,
}

#[derive(Default)]
struct Checks(Vec<Check>);

impl Checks {
    fn eq<T: Debug + PartialEq>(&mut self, name: impl Into<String>, expected: T, got: T) {
        let passed = expected == got;
        let detail = if passed {
            String::new()
        } else {
            format!("expected: {expected:?}\n     got: {got:?}")
        };
        self.0.push(Check {
            name: name.into(),
            passed,
            detail,
        });
    }

    fn truth(&mut self, name: impl Into<String>, ok: bool, detail: impl Into<String>) {
        self.0.push(Check {
            name: name.into(),
            passed: ok,
            detail: if ok { String::new() } else { detail.into() },
        });
    }

    fn guard(&mut self, name: &str, r: Result<()>) {
        if let Err(e) = r {
            self.truth(name, false, format!("error: {e}"));
        }
    }
}

fn show(field: &Field, v: &[Elem]) -> Vec<String> {
    v.iter()
        .map(|&c| match field.signed_repr(c) {
            Some(i) => i.to_string(),
            None => field.format(c),
        })
        .collect()
}

fn elems(field: &Field, lits: &[Lit]) -> Result<Vec<Elem>> {
    lits.iter().map(|l| l.elem(field)).collect()
}

fn polys(ring: &Ring, src: &[String]) -> Result<Vec<Poly>> {
    src.iter().map(|s| ring.parse_poly(s)).collect()
}

fn monomials(ring: &Ring, src: &[String]) -> Result<Vec<Monomial>> {
    src.iter().map(|s| ring.parse_monomial(s)).collect()
}

fn strings<T: ToString>(v: &[T]) -> Vec<String> {
    v.iter().map(|p| p.to_string()).collect()
}

fn sorted_desc(ring: &Ring, mut v: Vec<Monomial>) -> Vec<Monomial> {
    v.sort_by(|a, b| ring.order().cmp(b, a));
    v
}

/// Runs the analysis pipeline shared by the golden runner and the tests.
pub fn analyze(points: &str, limit: u128) -> Result<Analysis> {
    let file = parse_points_file(points)?;
    let x = file.point_set()?;
    let gb = vanishing_ideal(&x, &file.order_or_default())?;
    let hd = hilbert_data(&gb, x.len() as u64)?;
    let is = standard_indicators(&x, &gb, &hd)?;
    let duality = global_duality(&x, &gb, &hd, &is, limit)?;
    let artinian = classify(&x, &gb, &hd, None)?;
    Ok(Analysis {
        x,
        gb,
        hd,
        is,
        duality,
        artinian,
    })
}

/// Runs one example given the text of its two files.
pub fn run_example_text(name: &str, points: &str, expected: &str, limit: u128) -> ExampleOutcome {
    let mut ch = Checks::default();
    let exp: Expected = match toml::from_str(expected) {
        Ok(e) => e,
        Err(e) => {
            ch.truth("expected values", false, format!("error: {e}"));
            return ExampleOutcome {
                name: name.into(),
                description: String::new(),
                checks: ch.0,
            };
        }
    };
    match analyze(points, limit) {
        Ok(a) => check_all(&mut ch, &exp, &a, limit),
        Err(e) => ch.truth("pipeline", false, format!("error: {e}")),
    }
    ExampleOutcome {
        name: name.into(),
        description: exp.description,
        checks: ch.0,
    }
}

/// Runs the corpus, optionally restricted to one example.
pub fn run_corpus(filter: Option<&str>, limit: u128) -> Result<Vec<ExampleOutcome>> {
    let selected: Vec<_> = CORPUS.iter().filter(|(n, _, _)| filter.is_none_or(|f| f == *n)).collect();
    if selected.is_empty() {
        return Err(Error::InvalidParams(format!(
            "no example named {:?}",
            filter.unwrap_or_default()
        )));
    }
    Ok(selected
        .iter()
        .map(|(n, p, e)| run_example_text(n, p, e, limit))
        .collect())
}

fn check_all(ch: &mut Checks, exp: &Expected, a: &Analysis, limit: u128) {
    let r = check_ideal(ch, exp, a);
    ch.guard("ideal", r);
    check_hilbert(ch, exp, a);
    let r = check_indicators(ch, exp, a);
    ch.guard("indicators", r);
    let r = check_codes(ch, exp, a, limit);
    ch.guard("codes", r);
    let r = check_duality(ch, exp, a);
    ch.guard("duality", r);
    let r = check_artinian(ch, exp, a);
    ch.guard("artinian", r);
    let r = check_selfdual(ch, exp, a);
    ch.guard("self-duality", r);
    let r = check_weights(ch, exp, a, limit);
    ch.guard("weights", r);
    let r = check_local(ch, exp, a);
    ch.guard("local duality", r);
    let r = check_variant(ch, exp, a);
    ch.guard("variant", r);
    ch.guard(
        "gorenstein crosscheck",
        gorenstein_crosscheck(&a.duality, &a.artinian).map(|_| ()),
    );
}

fn check_ideal(ch: &mut Checks, exp: &Expected, a: &Analysis) -> Result<()> {
    let ring = a.gb.ring();
    let want = buchberger(ring, &polys(ring, &exp.ideal)?)?;
    ch.eq("ideal", strings(want.gens()), strings(a.gb.gens()));
    if let Some(gb) = &exp.gb {
        let mut want: Vec<Poly> = polys(ring, gb)?.iter().map(|p| p.monic()).collect();
        want.sort_by(|p, q| ring.order().cmp(p.lm().expect("nonzero"), q.lm().expect("nonzero")));
        ch.eq("groebner basis", strings(&want), strings(a.gb.gens()));
    }
    let s = ring.nvars();
    let gens = minimal_generator_count(&a.gb, a.hd.r0 + 1);
    if let Some(ci) = exp.complete_intersection {
        ch.eq("complete intersection", ci, gens == s - 1);
    }
    if let Some(n) = exp.minimal_generators {
        ch.eq("minimal generators", n, gens);
    }
    if let Some(std) = &exp.standard {
        for (d, list) in std {
            let d: u32 = d
                .parse()
                .map_err(|_| Error::InvalidParams(format!("bad degree key {d:?}")))?;
            let want = sorted_desc(ring, monomials(ring, list)?);
            ch.eq(
                format!("standard monomials of degree {d}"),
                strings(&want),
                strings(&a.gb.standard_monomials(d)),
            );
        }
    }
    Ok(())
}

fn check_hilbert(ch: &mut Checks, exp: &Expected, a: &Analysis) {
    if let Some(h) = &exp.hilbert {
        ch.eq("hilbert function", h.clone(), a.hd.values.clone());
    }
    for &(d, v) in exp.hilbert_at.iter().flatten() {
        ch.eq(format!("H({d})"), v, a.hd.value(d));
    }
    if let Some(h) = &exp.h_vector {
        ch.eq("h-vector", h.clone(), a.hd.h_vector.clone());
    }
    if let Some(r0) = exp.r0 {
        ch.eq("r0", r0, a.hd.r0);
    }
}

fn compare_indicators(
    ch: &mut Checks,
    label: &str,
    ring: &Ring,
    x: &ProjectivePointSet,
    is: &IndicatorSet,
    list: Option<&Vec<String>>,
    values: Option<&Vec<Lit>>,
) -> Result<()> {
    let Some(list) = list else { return Ok(()) };
    let fs = polys(ring, list)?;
    let want: Vec<String> = fs.iter().map(|f| f.monic().to_string()).collect();
    ch.eq(format!("{label}indicator functions"), want, strings(&is.fs));
    if let Some(values) = values {
        let field = x.field();
        let want = elems(field, values)?;
        let got: Vec<Elem> = fs.iter().enumerate().map(|(i, f)| f.eval(x.point(i))).collect::<Result<_>>()?;
        ch.eq(format!("{label}f_i(P_i)"), show(field, &want), show(field, &got));
    }
    Ok(())
}

fn check_indicators(ch: &mut Checks, exp: &Expected, a: &Analysis) -> Result<()> {
    let ring = a.gb.ring();
    compare_indicators(ch, "", ring, &a.x, &a.is, exp.indicators.as_ref(), exp.indicator_values.as_ref())?;
    if let Some(v) = &exp.v_numbers {
        ch.eq("v-numbers", v.clone(), a.is.degrees.clone());
    }
    if let Some(v) = exp.v_number {
        ch.eq("v-number", v, a.is.v_number());
    }
    if let Some(e) = &exp.essential {
        let want = sorted_desc(ring, monomials(ring, e)?);
        ch.eq("essential monomials", strings(&want), strings(&a.is.essential));
    }
    if let Some(e) = &exp.essential_includes {
        for u in monomials(ring, e)? {
            ch.truth(
                format!("{u} is essential"),
                a.is.essential.contains(&u),
                format!("essential monomials are {:?}", strings(&a.is.essential)),
            );
        }
    }
    if let Some(r) = &exp.regularity_indices {
        ch.eq("R_r from sorted v-numbers", r.clone(), a.is.v_sorted());
    }
    Ok(())
}

fn check_codes(ch: &mut Checks, exp: &Expected, a: &Analysis, limit: u128) -> Result<()> {
    for (i, &want) in exp.min_distance.iter().flatten().enumerate() {
        let d = i as u32 + 1;
        let got = min_distance(&code_of_degree(&a.x, &a.gb, d), limit)?;
        ch.eq(format!("δ_X({d})"), want, got);
    }
    Ok(())
}

fn check_duality(ch: &mut Checks, exp: &Expected, a: &Analysis) -> Result<()> {
    let Some(e) = &exp.duality else { return Ok(()) };
    let field = a.x.field();
    let cert = &a.duality;
    ch.eq("duality holds", e.holds, cert.holds);
    if let Some(beta) = &e.beta {
        let want = elems(field, beta)?;
        let got = cert.beta.clone().unwrap_or_default();
        ch.truth(
            "β up to scalar",
            proportional(field, &want, &got),
            format!("expected: {:?}\n     got: {:?}", show(field, &want), show(field, &got)),
        );
    }
    if cert.holds {
        let all: Vec<u32> = (0..=a.hd.r0).collect();
        ch.eq("verified degrees", all, cert.verified_degrees.clone());
    }
    if let Some(w) = &e.witness {
        ch.eq(
            "failure witness",
            Some(w.clone()),
            cert.failure_witness().map(|f| f.reason.clone()),
        );
    }
    for &(p, q) in e.dual_pairs.iter().flatten() {
        let lhs = code_of_degree(&a.x, &a.gb, p).dual();
        let rhs = code_of_degree(&a.x, &a.gb, q);
        ch.truth(format!("C_X({p})^⊥ = C_X({q})"), lhs == rhs, "codes differ");
    }
    Ok(())
}

fn check_artinian(ch: &mut Checks, exp: &Expected, a: &Analysis) -> Result<()> {
    let Some(e) = &exp.artinian else { return Ok(()) };
    let ring = a.gb.ring();
    for h in e.regular.iter().flatten() {
        let ok = artinian_reduce(&a.x, &a.gb, &ring.parse_poly(h)?).is_ok();
        ch.truth(format!("{h} is regular"), ok, "vanishes at a point");
    }
    let cls = match &e.h {
        Some(h) => classify(&a.x, &a.gb, &a.hd, Some(&ring.parse_poly(h)?))?,
        None => a.artinian.clone(),
    };
    ch.eq("gorenstein", e.gorenstein, cls.gorenstein);
    if let Some(t) = e.socle_type {
        ch.eq("type", t, cls.socle_type);
    }
    if let Some(l) = e.level {
        ch.eq("level", l, cls.level);
    }
    if let Some(s) = e.s_number {
        ch.eq("s-number", s, cls.s_number);
    }
    if let Some(s) = &e.socle_degrees {
        ch.eq("socle degrees", s.clone(), cls.socle_degrees.clone());
    }
    ch.truth("regularity from socle", cls.reg_check, "top degree of S/J differs from r0");
    let jring = cls.j_basis.ring().clone();
    if let Some(s) = &e.socle {
        let want: Vec<String> = polys(&jring, s)?.iter().map(|p| p.monic().to_string()).collect();
        let got: Vec<String> = cls.socle.iter().map(|(_, p)| p.monic().to_string()).collect();
        ch.eq("socle", want, got);
    }
    if let Some(r) = &e.remainder {
        let want = jring.parse_poly(r)?;
        let fs = match &exp.indicators {
            Some(list) => polys(ring, list)?,
            None => a.is.fs.clone(),
        };
        let emb = a.x.field().embedding_into(jring.field())?;
        let scalars = match &e.remainder_scalars {
            Some(l) => Some(l.iter().map(|c| c.elem(a.x.field()).map(|c| emb[c.index() as usize])).collect::<Result<Vec<_>>>()?),
            None => None,
        };
        for (i, f) in fs.iter().enumerate() {
            let got = cls.j_basis.normal_form(&f.lift(&jring, &emb))?;
            let name = format!("remainder of f_{} modulo J", i + 1);
            match scalars.as_ref().and_then(|l| l.get(i)) {
                Some(&c) => ch.eq(name, want.scale(c).to_string(), got.to_string()),
                None => ch.eq(name, want.monic().to_string(), got.monic().to_string()),
            }
        }
    }
    if cls.gorenstein {
        let r = verify_socle_identities(&cls, &a.x, &a.gb, &a.hd, &a.is).map(|_| ());
        ch.guard("socle identities", r);
    }
    Ok(())
}

fn degrees_where(v: impl Iterator<Item = (u32, bool)>) -> Vec<u32> {
    v.filter(|(_, b)| *b).map(|(d, _)| d).collect()
}

fn check_selfdual(ch: &mut Checks, exp: &Expected, a: &Analysis) -> Result<()> {
    let Some(e) = &exp.selfdual else { return Ok(()) };
    let scan = self_dual_scan(&a.x, &a.gb, &a.hd)?;
    if let Some(v) = &e.self_orthogonal {
        let got = degrees_where(scan.iter().map(|s| (s.degree, s.self_orthogonal)));
        ch.eq("self-orthogonal degrees", v.clone(), got);
    }
    if let Some(v) = &e.self_dual {
        let got = degrees_where(scan.iter().map(|s| (s.degree, s.self_dual)));
        ch.eq("self-dual degrees", v.clone(), got);
    }
    if e.monomially_self_dual.is_some() || e.column_criterion.is_some() {
        let report = gorenstein_selfdual_classify(&a.x, &a.gb, &a.hd, &a.artinian)?;
        if let Some(v) = &e.monomially_self_dual {
            let got = degrees_where(report.iter().map(|s| (s.degree, s.monomially_self_dual)));
            ch.eq("monomially self-dual degrees", v.clone(), got);
        }
        if let Some(c) = e.column_criterion {
            let got = report.iter().find(|s| s.degree == 1).and_then(|s| s.column_criterion);
            ch.eq("column criterion", Some(c), got);
        }
    }
    Ok(())
}

fn cell_text(c: &Cell) -> String {
    match c {
        Cell::Exact { value, .. } => value.to_string(),
        Cell::Interval { lo, hi } => format!("{lo}..{hi}"),
        Cell::Infinity => "inf".into(),
    }
}

fn check_weights(ch: &mut Checks, exp: &Expected, a: &Analysis, limit: u128) -> Result<()> {
    let Some(e) = &exp.weights else { return Ok(()) };
    let wm = weight_matrix(&a.x, &a.gb, &a.hd, &a.is, limit)?;
    let got: Vec<String> = wm
        .cells
        .iter()
        .map(|row| row.iter().map(cell_text).collect::<Vec<_>>().join(" "))
        .collect();
    let want: Vec<String> = e.rows.iter().map(|r| r.split_whitespace().collect::<Vec<_>>().join(" ")).collect();
    ch.eq("weight matrix", want, got);
    if let Some(fe) = e.footprint_equal {
        let equal = wm.cells.iter().zip(&wm.footprint).all(|(row, fp)| {
            row.iter().zip(fp).all(|(c, f)| match c {
                Cell::Infinity => f.is_none(),
                _ => c.exact().is_some() && *f == c.exact().map(|v| v as i64),
            })
        });
        ch.eq("footprint matrix equals weight matrix", fe, equal);
    }
    let m = a.x.len();
    let first_pinned: Vec<Option<u32>> = (1..=m)
        .map(|r| (1..=a.hd.r0).find(|&d| wm.cell(d, r).exact() == Some(r as u64)))
        .collect();
    let want: Vec<Option<u32>> = match &exp.regularity_indices {
        Some(v) => v.iter().map(|&d| Some(d)).collect(),
        None => a.is.v_sorted().into_iter().map(Some).collect(),
    };
    ch.eq("R_r from the weight matrix", want, first_pinned);
    Ok(())
}

fn span_of(field: &Field, m: usize, rows: &[Vec<Lit>]) -> Result<LinearCode> {
    let rows = rows.iter().map(|r| elems(field, r)).collect::<Result<Vec<_>>>()?;
    LinearCode::from_rows(field, m, rows)
}

fn check_local(ch: &mut Checks, exp: &Expected, a: &Analysis) -> Result<()> {
    let ring = a.gb.ring();
    let field = a.x.field();
    for (n, e) in exp.local_duality.iter().enumerate() {
        let label = format!("local duality #{}", n + 1);
        let g1 = monomials(ring, &e.gamma1)?;
        let g2 = monomials(ring, &e.gamma2)?;
        let te = ring.parse_monomial(&e.te)?;
        let proj = e.projective.then_some(&a.artinian);
        let got = local_duality_verify(&a.x, &a.gb, &a.hd, &a.is, (&g1, e.d), (&g2, e.k), &te, proj)?;
        let want = elems(field, &e.gamma)?;
        ch.eq(format!("{label}: γ"), show(field, &want), show(field, &got.gamma));
        let m = a.x.len();
        if let Some(rows) = &e.span1 {
            let c = LinearCode::from_generators(&a.x.evaluation_matrix(&g1));
            ch.truth(format!("{label}: ev(KΓ1)"), span_of(field, m, rows)? == c, "codes differ");
        }
        if let Some(rows) = &e.span2 {
            let c = LinearCode::from_generators(&a.x.evaluation_matrix(&g2));
            ch.truth(format!("{label}: ev(KΓ2)"), span_of(field, m, rows)? == c, "codes differ");
        }
    }
    Ok(())
}

fn check_variant(ch: &mut Checks, exp: &Expected, a: &Analysis) -> Result<()> {
    let Some(v) = &exp.variant else { return Ok(()) };
    let order = parse_order_spec(&v.order, a.x.nvars())?;
    let gb = vanishing_ideal(&a.x, &order)?;
    let hd = hilbert_data(&gb, a.x.len() as u64)?;
    let is = standard_indicators(&a.x, &gb, &hd)?;
    let ring = gb.ring();
    let label = format!("{}: ", v.order);
    compare_indicators(ch, &label, ring, &a.x, &is, v.indicators.as_ref(), v.indicator_values.as_ref())?;
    if let Some(e) = &v.essential {
        let want = sorted_desc(ring, monomials(ring, e)?);
        ch.eq(format!("{label}essential monomials"), strings(&want), strings(&is.essential));
    }
    ch.eq(format!("{label}indicator degrees"), a.is.degrees.clone(), is.degrees.clone());
    Ok(())
}
