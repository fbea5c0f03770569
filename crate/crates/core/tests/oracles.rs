mod common;

use common::*;
use rmcode::artinian::find_regular_linear_form;
use rmcode::codes::{code_of_degree, min_distance};
use rmcode::duality::{affine_duality, global_duality};
use rmcode::gf::Elem;
use rmcode::golden::{analyze, CORPUS};
use rmcode::groebner::minimal_generator_count;
use rmcode::indicators::standard_indicators;
use rmcode::poly::TermOrder;
use rmcode::variety::{hilbert_data, vanishing_ideal, ProjectivePointSet};

const BUDGET: u128 = 10_000_000;

#[test]
fn corpus_hilbert_functions_match_evaluation_ranks() {
    for (name, points, _) in CORPUS {
        let a = analyze(points, BUDGET).unwrap();
        assert_eq!(a.hd.r0, regularity_index(&a.x), "{name}");
        for d in 0..=a.hd.r0 + 1 {
            assert_eq!(a.hd.value(d as i64), hilbert(&a.x, d), "{name} d = {d}");
        }
    }
}

#[test]
fn corpus_v_numbers_match_separation_ranks() {
    for (name, points, _) in CORPUS {
        let a = analyze(points, BUDGET).unwrap();
        let oracle: Vec<u32> = (0..a.x.len()).map(|i| v_number(&a.x, i)).collect();
        assert_eq!(a.is.degrees, oracle, "{name}");
    }
}

#[test]
fn corpus_min_distances_match_full_sweeps() {
    let mut compared = 0;
    for (name, points, _) in CORPUS {
        let a = analyze(points, BUDGET).unwrap();
        for d in 0..=a.hd.r0 {
            let Some(oracle) = common::min_distance(&a.x, d, 2_000_000) else { continue };
            let code = code_of_degree(&a.x, &a.gb, d);
            assert_eq!(min_distance(&code, BUDGET).unwrap(), oracle, "{name} d = {d}");
            compared += 1;
        }
    }
    assert!(compared >= 20, "only {compared} degrees compared");
}

#[test]
fn no_linear_form_over_f3_avoids_the_projective_line() {
    let f = field(3, 1);
    let x = ProjectivePointSet::full_projective(&f, 2).unwrap();
    for a in f.elements() {
        for b in f.elements() {
            if a.is_zero() && b.is_zero() {
                continue;
            }
            let hits = x
                .points()
                .iter()
                .any(|p| f.add(f.mul(a, p[0]), f.mul(b, p[1])).is_zero());
            assert!(hits);
        }
    }
    let gb = vanishing_ideal(&x, &TermOrder::grevlex(2)).unwrap();
    assert_eq!(find_regular_linear_form(&x, gb.ring()).unwrap().extension_degree, 2);
}

#[test]
fn affine_line_closures_are_complete_intersections_with_duality() {
    for (p, k) in [(2, 1), (3, 1), (2, 2), (5, 1), (7, 1)] {
        let f = field(p, k);
        let affine: Vec<Vec<Elem>> = f.elements().map(|c| vec![c]).collect();
        let res = affine_duality(&f, &affine, &TermOrder::grevlex(2), BUDGET).unwrap();
        let q = f.order();
        assert_eq!(res.gb.gens().len(), 1);
        let want = res.gb.ring().parse_poly(&format!("t1^{q}-t1*t2^{}", q - 1)).unwrap();
        assert_eq!(res.gb.gens()[0], want);
        assert_eq!(minimal_generator_count(&res.gb, res.hilbert.r0 + 1), 1);
        assert!(res.certificate.holds, "F_{q}");
        assert_eq!(res.hilbert.r0, q - 1);
    }
}

#[test]
fn two_affine_points_have_regularity_one() {
    let f = field(5, 1);
    let affine = vec![vec![f.from_int(1), f.from_int(2)], vec![f.from_int(3), f.from_int(0)]];
    let res = affine_duality(&f, &affine, &TermOrder::grevlex(3), BUDGET).unwrap();
    assert_eq!(res.hilbert.r0, 1);
    assert!(res.certificate.holds);
    // C_Y(0) is the repetition code; its dual is spanned by (1, -1).
    let beta = res.certificate.beta.unwrap();
    assert!(rmcode::duality::proportional(&f, &beta, &[f.one(), f.neg(f.one())]));
}

#[test]
fn affine_plane_matches_its_projective_closure() {
    let f = field(3, 1);
    let affine: Vec<Vec<Elem>> = f
        .elements()
        .flat_map(|a| f.elements().map(move |b| vec![a, b]))
        .collect();
    let order = TermOrder::grevlex(3);
    let res = affine_duality(&f, &affine, &order, BUDGET).unwrap();
    let y = ProjectivePointSet::affine_grid(&f, 2).unwrap();
    let gb = vanishing_ideal(&y, &order).unwrap();
    let hd = hilbert_data(&gb, 9).unwrap();
    let is = standard_indicators(&y, &gb, &hd).unwrap();
    let cert = global_duality(&y, &gb, &hd, &is, BUDGET).unwrap();
    assert_eq!(res.certificate, cert);
    assert_eq!(res.hilbert.values, [1, 3, 6, 8, 9]);
    assert!(cert.holds);
}
