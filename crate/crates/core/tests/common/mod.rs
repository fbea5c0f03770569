//! Random instances and brute-force oracles shared by the test suites. The
//! oracles use only field arithmetic and ranks of explicit evaluation
//! matrices, never Groebner bases.

#![allow(dead_code)]

use proptest::test_runner::{Config, RngSeed};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rmcode::codes::LinearCode;
use rmcode::gf::{Elem, Field};
use rmcode::linalg::Matrix;
use rmcode::poly::{Monomial, OrderKind, TermOrder};
use rmcode::variety::ProjectivePointSet;

pub const FIELD_ORDERS: [(u32, u32); 4] = [(2, 1), (3, 1), (2, 2), (5, 1)];

pub fn config(cases: u32, seed: u64) -> Config {
    Config {
        cases,
        rng_seed: RngSeed::Fixed(seed),
        failure_persistence: None,
        ..Config::default()
    }
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn field(p: u32, k: u32) -> Field {
    Field::new(p, k, None).expect("built-in field")
}

/// All canonical points of `P^{s-1}` (last nonzero coordinate 1).
pub fn all_points(field: &Field, s: usize) -> Vec<Vec<Elem>> {
    let q = field.order() as usize;
    let mut out = Vec::new();
    for idx in 1..q.pow(s as u32) {
        let mut v = Vec::with_capacity(s);
        let mut r = idx;
        for _ in 0..s {
            v.push(field.elem((r % q) as u32).unwrap());
            r /= q;
        }
        let last = v.iter().rposition(|x| !x.is_zero()).unwrap();
        if v[last].is_one() {
            out.push(v);
        }
    }
    out
}

/// `m` distinct random points of `P^{s-1}`, each scaled by a random nonzero
/// factor, or `None` when `P^{s-1}` has fewer than `max(m, 2)` points.
pub fn random_points(field: &Field, s: usize, m: usize, seed: u64) -> Option<ProjectivePointSet> {
    let mut r = rng(seed);
    let mut pts = all_points(field, s);
    if pts.len() < m.max(2) {
        return None;
    }
    pts.shuffle(&mut r);
    pts.truncate(m.max(2));
    let nonzero: Vec<Elem> = field.nonzero_elements().collect();
    for p in &mut pts {
        let c = nonzero[r.gen_range(0..nonzero.len())];
        for x in p.iter_mut() {
            *x = field.mul(*x, c);
        }
    }
    Some(ProjectivePointSet::new(field, s, pts).expect("distinct points"))
}

pub fn random_nonzero(field: &Field, n: usize, seed: u64) -> Vec<Elem> {
    let mut r = rng(seed);
    let nonzero: Vec<Elem> = field.nonzero_elements().collect();
    (0..n).map(|_| nonzero[r.gen_range(0..nonzero.len())]).collect()
}

pub fn random_elems(field: &Field, n: usize, r: &mut ChaCha8Rng) -> Vec<Elem> {
    let q = field.order();
    (0..n).map(|_| field.elem(r.gen_range(0..q)).unwrap()).collect()
}

fn pow(field: &Field, x: Elem, e: u32) -> Elem {
    (0..e).fold(field.one(), |acc, _| field.mul(acc, x))
}

/// Value of `t^a` at `p` by repeated multiplication.
pub fn monomial_value(field: &Field, a: &Monomial, p: &[Elem]) -> Elem {
    a.exponents()
        .iter()
        .zip(p)
        .fold(field.one(), |acc, (&e, &x)| field.mul(acc, pow(field, x, e)))
}

/// Rows: monomials of degree `d`; columns: the given points.
pub fn evaluation(field: &Field, s: usize, d: u32, points: &[Vec<Elem>]) -> Matrix {
    let rows = Monomial::all_of_degree(s, d)
        .iter()
        .map(|a| points.iter().map(|p| monomial_value(field, a, p)).collect())
        .collect();
    Matrix::from_rows(field, points.len(), rows).unwrap()
}

/// `H_I(d)` as the rank of the full degree-`d` evaluation matrix.
pub fn hilbert(x: &ProjectivePointSet, d: u32) -> u64 {
    evaluation(x.field(), x.nvars(), d, x.points()).rank() as u64
}

/// First `d` where the Hilbert function reaches `|X|`.
pub fn regularity_index(x: &ProjectivePointSet) -> u32 {
    (0..).find(|&d| hilbert(x, d) == x.len() as u64).unwrap()
}

/// Least degree of a form vanishing on `X \ {P_i}` but not at `P_i`.
pub fn v_number(x: &ProjectivePointSet, i: usize) -> u32 {
    let others: Vec<Vec<Elem>> = x
        .points()
        .iter()
        .enumerate()
        .filter(|(j, _)| *j != i)
        .map(|(_, p)| p.clone())
        .collect();
    (0..)
        .find(|&d| {
            let all = evaluation(x.field(), x.nvars(), d, x.points()).rank();
            let rest = evaluation(x.field(), x.nvars(), d, &others).rank();
            all > rest
        })
        .unwrap()
}

/// Minimum weight of `C_X(d)` by evaluating every form of degree `d`, or
/// `None` when there are more than `limit` forms.
pub fn min_distance(x: &ProjectivePointSet, d: u32, limit: u64) -> Option<u64> {
    let field = x.field();
    let ev = evaluation(field, x.nvars(), d, x.points());
    let n = ev.rows();
    let q = field.order() as u64;
    let total = q.checked_pow(n as u32).filter(|&t| t <= limit)?;
    let mut best = None;
    for idx in 1..total {
        let mut word = vec![field.zero(); x.len()];
        let mut r = idx;
        for row in 0..n {
            let c = field.elem((r % q) as u32).unwrap();
            r /= q;
            if !c.is_zero() {
                for (w, &e) in word.iter_mut().zip(ev.row(row)) {
                    *w = field.add(*w, field.mul(c, e));
                }
            }
        }
        let weight = word.iter().filter(|w| !w.is_zero()).count() as u64;
        if weight > 0 {
            best = Some(best.map_or(weight, |b: u64| b.min(weight)));
        }
    }
    best
}

/// All fields of order at most 81.
pub fn prime_power_fields() -> Vec<Field> {
    let mut out = Vec::new();
    for p in [2u32, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79] {
        let mut k = 1;
        while p.pow(k) <= 81 {
            out.push(field(p, k));
            k += 1;
        }
    }
    out
}

/// Random points and a random GRevLex or GLex order with shuffled variables.
pub fn instance(fi: usize, s: usize, m: usize, seed: u64) -> Option<(ProjectivePointSet, TermOrder)> {
    let (p, k) = FIELD_ORDERS[fi];
    let x = random_points(&field(p, k), s, m, seed)?;
    let mut perm: Vec<usize> = (0..s).collect();
    let mut r = rng(seed ^ 0x5eed);
    perm.shuffle(&mut r);
    let kind = if r.gen_bool(0.5) { OrderKind::GRevLex } else { OrderKind::GLex };
    Some((x, TermOrder::new(kind, perm).unwrap()))
}

pub fn random_code(seed: u64) -> LinearCode {
    let mut r = rng(seed);
    let (p, k) = [(2, 1), (3, 1), (2, 2), (5, 1), (7, 1), (3, 2)][r.gen_range(0..6)];
    let f = field(p, k);
    let n = r.gen_range(1..=10);
    let rows = r.gen_range(0..=n);
    let gens: Vec<Vec<Elem>> = (0..rows).map(|_| random_elems(&f, n, &mut r)).collect();
    LinearCode::from_generators(&Matrix::from_rows(&f, n, gens).unwrap())
}

/// Panics unless `f` satisfies the field axioms, checked on every element.
pub fn assert_field_axioms(f: &Field) {
    let els: Vec<Elem> = f.elements().collect();
    assert_eq!(els.len() as u32, f.order());
    let (zero, one) = (f.zero(), f.one());
    let p = f.characteristic();
    for &x in &els {
        assert_eq!(f.add(x, zero), x);
        assert_eq!(f.mul(x, one), x);
        assert_eq!(f.add(x, f.neg(x)), zero);
        if !x.is_zero() {
            assert_eq!(f.mul(x, f.inv(x)), one);
            let inverses = els.iter().filter(|&&y| f.mul(x, y) == one).count();
            assert_eq!(inverses, 1, "unique inverse in F_{}", f.order());
            assert_eq!(f.powu(x, f.order() - 1), one);
        }
        for &y in &els {
            assert_eq!(f.add(x, y), f.add(y, x));
            assert_eq!(f.mul(x, y), f.mul(y, x));
            assert_eq!(f.powu(f.add(x, y), p), f.add(f.powu(x, p), f.powu(y, p)));
            for &z in &els {
                assert_eq!(f.add(f.add(x, y), z), f.add(x, f.add(y, z)));
                assert_eq!(f.mul(f.mul(x, y), z), f.mul(x, f.mul(y, z)));
                assert_eq!(f.mul(x, f.add(y, z)), f.add(f.mul(x, y), f.mul(x, z)));
            }
        }
    }
}

/// The first term order axiom that fails on `u, v, w`, if any.
pub fn order_axiom_violation(o: &TermOrder, u: &Monomial, v: &Monomial, w: &Monomial) -> Option<&'static str> {
    use std::cmp::Ordering::*;
    let one = Monomial::one(o.nvars());
    if o.cmp(u, v) != o.cmp(v, u).reverse() {
        return Some("antisymmetry");
    }
    if (o.cmp(u, v) == Equal) != (u == v) {
        return Some("totality");
    }
    if o.cmp(&one, u) == Greater {
        return Some("well-ordering");
    }
    if o.cmp(u, v) == Less && o.cmp(v, w) == Less && o.cmp(u, w) != Less {
        return Some("transitivity");
    }
    if o.cmp(u, v) == Less && o.cmp(&u.mul(w), &v.mul(w)) != Less {
        return Some("multiplicativity");
    }
    if u.degree() < v.degree() && o.cmp(u, v) != Less {
        return Some("degree compatibility");
    }
    None
}

/// A random monomial of degree at most 8 in `s` variables.
pub fn random_monomial(s: usize, r: &mut ChaCha8Rng) -> Monomial {
    let mut e = vec![0u32; s];
    for _ in 0..r.gen_range(0..=8) {
        e[r.gen_range(0..s)] += 1;
    }
    Monomial::new(e)
}
