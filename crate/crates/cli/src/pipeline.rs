//! The `analyze` pipeline.

use std::time::Instant;

use rmcode::artinian::{classify, find_regular_linear_form, linear_form, ArtinianClassification};
use rmcode::codes::{code_of_degree, ghw, min_distance, weight_matrix, Cell, CellSource};
use rmcode::duality::{global_duality, gorenstein_crosscheck, self_dual_scan, BetaSource};
use rmcode::error::{Error, Result};
use rmcode::gf::{Elem, Field};
use rmcode::groebner::{minimal_generator_count, GroebnerBasis};
use rmcode::indicators::{standard_indicators, IndicatorSet};
use rmcode::io::PointsFile;
use rmcode::poly::{Poly, TermOrder};
use rmcode::variety::{hilbert_data, vanishing_ideal, HilbertData, ProjectivePointSet};

use crate::report::*;

/// Which optional analyses to run. With none selected every analysis that
/// needs no parameters runs.
#[derive(Clone, Debug, Default)]
pub struct Options {
    pub order: Option<TermOrder>,
    pub ghw: Option<(u32, usize)>,
    pub weight_matrix: bool,
    pub footprint: bool,
    pub duality: bool,
    pub selfdual: bool,
    pub gorenstein: bool,
    pub regular_form: bool,
    /// User-supplied regular linear form.
    pub h: Option<String>,
    pub budget: u128,
    pub timing: bool,
}

impl Options {
    fn any_selected(&self) -> bool {
        self.ghw.is_some()
            || self.weight_matrix
            || self.footprint
            || self.duality
            || self.selfdual
            || self.gorenstein
            || self.regular_form
    }
}

/// A finished analysis with the criteria it evaluated.
pub struct Outcome {
    pub report: Report,
    /// Criteria that came out false, for `--strict`.
    pub false_criteria: Vec<String>,
}

fn elems(field: &Field, v: &[Elem]) -> Vec<String> {
    v.iter()
        .map(|&c| match field.signed_repr(c) {
            Some(i) => i.to_string(),
            None => field.format(c),
        })
        .collect()
}

fn strings<T: ToString>(v: &[T]) -> Vec<String> {
    v.iter().map(|p| p.to_string()).collect()
}

struct Run<'a> {
    x: &'a ProjectivePointSet,
    gb: &'a GroebnerBasis,
    hd: &'a HilbertData,
    is: &'a IndicatorSet,
    limit: u128,
    incomplete: Vec<Incomplete>,
}

impl Run<'_> {
    /// Keeps budget failures as partial results and propagates the rest.
    fn step<T>(&mut self, name: &str, r: Result<T>) -> Result<Option<T>> {
        match r {
            Ok(v) => Ok(Some(v)),
            Err(e @ Error::BudgetExceeded { .. }) => {
                self.incomplete.push(Incomplete {
                    analysis: name.to_string(),
                    error: e.to_string(),
                });
                Ok(None)
            }
            Err(e) => Err(e),
        }
    }

    fn codes(&self) -> Result<Vec<CodeResult>> {
        let v = self.is.v_number();
        (1..=self.hd.r0)
            .map(|d| {
                let code = code_of_degree(self.x, self.gb, d);
                let min = if d >= v {
                    Some(1)
                } else {
                    match min_distance(&code, self.limit) {
                        Ok(w) => Some(w),
                        Err(Error::BudgetExceeded { .. }) => None,
                        Err(e) => return Err(e),
                    }
                };
                Ok(CodeResult {
                    degree: d,
                    length: self.hd.degree,
                    dimension: code.dimension() as u64,
                    min_distance: min,
                })
            })
            .collect()
    }

    fn ghw(&self, d: u32, r: usize) -> Result<GhwResult> {
        if r == 0 {
            return Err(Error::InvalidParams("r must be positive".into()));
        }
        let code = code_of_degree(self.x, self.gb, d);
        let value = if r > code.dimension() {
            Cell::Infinity
        } else {
            Cell::Exact {
                value: ghw(&code, r, self.limit)?,
                source: CellSource::Enumeration,
            }
        };
        Ok(GhwResult { degree: d, r, value })
    }
}

fn gorenstein_result(
    cls: &ArtinianClassification,
    ci: bool,
    crosscheck: Option<bool>,
) -> GorensteinResult {
    let ring = cls.j_basis.ring();
    GorensteinResult {
        h: cls.h.to_string(),
        extension_degree: cls.extension_degree,
        socle_type: cls.socle_type,
        level: cls.level,
        gorenstein: cls.gorenstein,
        complete_intersection: ci,
        s_number: cls.s_number,
        socle_degrees: cls.socle_degrees.clone(),
        socle: cls.socle.iter().map(|(_, p)| p.to_string()).collect(),
        socle_monomial: cls.socle_monomial.as_ref().map(|m| ring.format_monomial(m)),
        duality_crosscheck: crosscheck,
    }
}

/// Runs the pipeline on a parsed points file.
pub fn analyze(file: &PointsFile, opts: &Options) -> Result<Outcome> {
    let start = Instant::now();
    let all = !opts.any_selected();
    let x = file.point_set()?;
    let order = opts.order.clone().unwrap_or_else(|| file.order_or_default());
    if order.nvars() != x.nvars() {
        return Err(Error::InvalidParams(format!(
            "order has {} variables, points have {}",
            order.nvars(),
            x.nvars()
        )));
    }
    let field = x.field().clone();
    let gb = vanishing_ideal(&x, &order)?;
    let hd = hilbert_data(&gb, x.len() as u64)?;
    let is = standard_indicators(&x, &gb, &hd)?;
    let ring = gb.ring().clone();
    let gens = minimal_generator_count(&gb, hd.r0 + 1);
    let ci = gens == ring.nvars() - 1;

    let mut analyses = vec!["ideal".to_string(), "hilbert".into(), "indicators".into()];
    let mut results = Results {
        ideal: Some(IdealResult {
            gb: strings(gb.gens()),
            minimal_generators: gens,
            complete_intersection: ci,
        }),
        hilbert: Some(HilbertResult {
            values: hd.values.clone(),
            h_vector: hd.h_vector.clone(),
            r0: hd.r0,
            degree: hd.degree,
            symmetric: hd.is_symmetric(),
        }),
        indicators: Some(IndicatorResult {
            functions: strings(&is.fs),
            values: elems(&field, &is.values),
            v_numbers: is.degrees.clone(),
            v_number: is.v_number(),
            essential: is.essential.iter().map(|m| ring.format_monomial(m)).collect(),
        }),
        ..Results::default()
    };
    let mut run = Run {
        x: &x,
        gb: &gb,
        hd: &hd,
        is: &is,
        limit: opts.budget,
        incomplete: Vec::new(),
    };
    let mut false_criteria = Vec::new();

    if all {
        analyses.push("codes".into());
        results.codes = Some(run.codes()?);
        for c in results.codes.iter().flatten() {
            if c.min_distance.is_none() {
                run.incomplete.push(Incomplete {
                    analysis: format!("codes: min distance at d = {}", c.degree),
                    error: "enumeration exceeds the budget".into(),
                });
            }
        }
    }
    if let Some((d, r)) = opts.ghw {
        analyses.push("ghw".into());
        let r = run.ghw(d, r);
        results.ghw = run.step("ghw", r)?;
    }
    if opts.weight_matrix || opts.footprint {
        if opts.weight_matrix {
            analyses.push("weight_matrix".into());
        }
        if opts.footprint {
            analyses.push("footprint".into());
        }
        let wm = weight_matrix(&x, &gb, &hd, &is, opts.budget);
        if let Some(wm) = run.step("weight_matrix", wm)? {
            let equal = wm.cells.iter().zip(&wm.footprint).all(|(row, fp)| {
                row.iter().zip(fp).all(|(c, f)| match (c, f) {
                    (Cell::Infinity, None) => true,
                    (c, Some(f)) => c.exact().map(|v| v as i64) == Some(*f),
                    _ => false,
                })
            });
            if opts.weight_matrix {
                if !wm.is_fully_resolved() {
                    run.incomplete.push(Incomplete {
                        analysis: "weight_matrix".into(),
                        error: "some cells are only bounded".into(),
                    });
                }
                results.weight_matrix = Some(WeightResult {
                    fully_resolved: wm.is_fully_resolved(),
                    footprint_equal: equal,
                    cells: wm.cells.clone(),
                });
            }
            if opts.footprint {
                results.footprint = Some(wm.footprint.clone());
            }
        }
    }
    let mut certificate = None;
    if all || opts.duality || opts.gorenstein {
        let cert = global_duality(&x, &gb, &hd, &is, opts.budget)?;
        if all || opts.duality {
            analyses.push("duality".into());
            if !cert.holds {
                false_criteria.push("duality".into());
            }
            results.duality = Some(DualityResult {
                holds: cert.holds,
                symmetric_sum: cert.symmetric_sum,
                v_all_r0: cert.v_all_r0,
                beta: cert.beta.as_ref().map(|b| elems(&field, b)),
                beta_source: cert.beta_source.map(|s| {
                    match s {
                        BetaSource::Indicators => "indicators",
                        BetaSource::Nullspace => "nullspace",
                    }
                    .to_string()
                }),
                verified_degrees: cert.verified_degrees.clone(),
                witness: cert.failure_witness().map(|w| Witness {
                    degree: w.degree,
                    reason: w.reason.clone(),
                }),
            });
        }
        certificate = Some(cert);
    }
    if all || opts.selfdual {
        analyses.push("selfdual".into());
        let scan = self_dual_scan(&x, &gb, &hd)?;
        if !scan.iter().any(|e| e.self_dual) {
            false_criteria.push("selfdual".into());
        }
        results.selfdual = Some(
            scan.iter()
                .map(|e| SelfDualResult {
                    degree: e.degree,
                    self_orthogonal: e.self_orthogonal,
                    self_dual: e.self_dual,
                })
                .collect(),
        );
    }
    if opts.regular_form {
        analyses.push("regular_form".into());
        let form = find_regular_linear_form(&x, &ring)?;
        let big = ring.with_field(&form.field);
        results.regular_form = Some(RegularFormResult {
            h: linear_form(&big, &form.coeffs).to_string(),
            extension_degree: form.extension_degree,
        });
    }
    if all || opts.gorenstein {
        analyses.push("gorenstein".into());
        let h: Option<Poly> = opts.h.as_deref().map(|s| ring.parse_poly(s)).transpose()?;
        let cls = classify(&x, &gb, &hd, h.as_ref())?;
        if ci && !cls.gorenstein {
            return Err(Error::InternalInconsistency(
                "complete intersection that is not Gorenstein".into(),
            ));
        }
        let crosscheck = match &certificate {
            Some(cert) => Some(gorenstein_crosscheck(cert, &cls).map(|_| true)?),
            None => None,
        };
        if !cls.gorenstein {
            false_criteria.push("gorenstein".into());
        }
        results.gorenstein = Some(gorenstein_result(&cls, ci, crosscheck));
    }

    let incomplete = run.incomplete;
    let report = Report {
        schema: SCHEMA.to_string(),
        version: env!("CARGO_PKG_VERSION").to_string(),
        input: Input {
            field: FieldSpec {
                p: field.characteristic(),
                k: field.degree(),
                modulus: field.modulus().to_vec(),
            },
            order: order.descriptor(),
            affine: file.affine,
            points: x.points().iter().map(|p| p.iter().map(|&c| field.format(c)).collect()).collect(),
        },
        budget: u64::try_from(opts.budget).unwrap_or(u64::MAX),
        analyses,
        results,
        incomplete,
        timing_ms: opts.timing.then(|| start.elapsed().as_millis() as u64),
    };
    Ok(Outcome {
        report,
        false_criteria,
    })
}
