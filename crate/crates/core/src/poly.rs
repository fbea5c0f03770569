//! Sparse multivariate polynomials over `F_q` under graded monomial orders.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gf::{Elem, Field};

/// Exponent vector `c` of `t^c = t_1^{c_1} ... t_s^{c_s}`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Monomial {
        Monomial(exponents)
    }

    pub fn one(nvars: usize) -> Monomial {
        Monomial(vec![0; nvars])
    }

    pub fn var(nvars: usize, i: usize) -> Monomial {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Monomial(e)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// `self / other`; caller guarantees divisibility.
    pub fn div(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(&a, &b)| a.max(b)).collect())
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(&a, &b)| a == 0 || b == 0)
    }

    /// Variable indices with positive exponent.
    pub fn support(&self) -> Vec<usize> {
        (0..self.0.len()).filter(|&i| self.0[i] > 0).collect()
    }

    /// All monomials of total degree `d` in `nvars` variables, in no
    /// particular order.
    pub fn all_of_degree(nvars: usize, d: u32) -> Vec<Monomial> {
        fn rec(i: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
            if i + 1 == cur.len() {
                cur[i] = left;
                out.push(Monomial(cur.clone()));
                return;
            }
            for e in (0..=left).rev() {
                cur[i] = e;
                rec(i + 1, left - e, cur, out);
            }
        }
        if nvars == 0 {
            return if d == 0 { vec![Monomial(vec![])] } else { vec![] };
        }
        let mut out = Vec::new();
        rec(0, d, &mut vec![0; nvars], &mut out);
        out
    }

    /// Value of `t^c` at a point.
    pub fn eval(&self, field: &Field, point: &[Elem]) -> Elem {
        self.0
            .iter()
            .zip(point)
            .fold(Elem::ONE, |acc, (&e, &x)| field.mul(acc, field.powu(x, e)))
    }

    pub fn format_with(&self, names: &[String]) -> String {
        let mut parts = Vec::new();
        for (i, &e) in self.0.iter().enumerate() {
            match e {
                0 => {}
                1 => parts.push(names[i].clone()),
                _ => parts.push(format!("{}^{}", names[i], e)),
            }
        }
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join("*")
        }
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names = default_names(self.0.len());
        f.write_str(&self.format_with(&names))
    }
}

pub fn default_names(nvars: usize) -> Vec<String> {
    (1..=nvars).map(|i| format!("t{i}")).collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OrderKind {
    GRevLex,
    GLex,
}

/// A graded monomial order. `perm[0]` is the index of the largest
/// variable, `perm[s-1]` the smallest.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TermOrder {
    kind: OrderKind,
    perm: Vec<usize>,
}

impl TermOrder {
    pub fn new(kind: OrderKind, perm: Vec<usize>) -> Result<TermOrder> {
        let mut seen = vec![false; perm.len()];
        for &i in &perm {
            if i >= perm.len() || seen[i] {
                return Err(Error::InvalidParams(format!(
                    "{perm:?} is not a permutation of the variables"
                )));
            }
            seen[i] = true;
        }
        Ok(TermOrder { kind, perm })
    }

    pub fn grevlex(nvars: usize) -> TermOrder {
        TermOrder {
            kind: OrderKind::GRevLex,
            perm: (0..nvars).collect(),
        }
    }

    pub fn glex(nvars: usize) -> TermOrder {
        TermOrder {
            kind: OrderKind::GLex,
            perm: (0..nvars).collect(),
        }
    }

    pub fn kind(&self) -> OrderKind {
        self.kind
    }

    pub fn perm(&self) -> &[usize] {
        &self.perm
    }

    pub fn nvars(&self) -> usize {
        self.perm.len()
    }

    /// Index of the smallest variable.
    pub fn last_var(&self) -> usize {
        *self.perm.last().expect("at least one variable")
    }

    /// GRevLex with the smallest variable being the last one, the setting
    /// in which `t_s` behaves as the canonical regular element.
    pub fn is_standard_grevlex(&self) -> bool {
        self.kind == OrderKind::GRevLex && self.last_var() + 1 == self.nvars()
    }

    /// Compares two monomials of the right length. Panics on mismatched
    /// lengths; see [`TermOrder::try_cmp`].
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        let (da, db) = (a.degree(), b.degree());
        if da != db {
            return da.cmp(&db);
        }
        match self.kind {
            OrderKind::GLex => {
                for &i in &self.perm {
                    match a.0[i].cmp(&b.0[i]) {
                        Ordering::Equal => continue,
                        o => return o,
                    }
                }
                Ordering::Equal
            }
            OrderKind::GRevLex => {
                for &i in self.perm.iter().rev() {
                    match a.0[i].cmp(&b.0[i]) {
                        Ordering::Equal => continue,
                        // a - b negative at the last nonzero entry means a > b
                        o => return o.reverse(),
                    }
                }
                Ordering::Equal
            }
        }
    }

    pub fn try_cmp(&self, a: &Monomial, b: &Monomial) -> Result<Ordering> {
        for m in [a, b] {
            if m.nvars() != self.nvars() {
                return Err(Error::DimensionMismatch {
                    expected: self.nvars(),
                    found: m.nvars(),
                });
            }
        }
        Ok(self.cmp(a, b))
    }

    /// Appends a new variable that is smaller than all existing ones.
    pub fn extended(&self) -> TermOrder {
        let mut perm = self.perm.clone();
        perm.push(self.perm.len());
        TermOrder {
            kind: self.kind,
            perm,
        }
    }

    /// Text form used by the points-file format, e.g. `grevlex perm=1,2,3`.
    pub fn descriptor(&self) -> String {
        let kind = match self.kind {
            OrderKind::GRevLex => "grevlex",
            OrderKind::GLex => "glex",
        };
        let perm: Vec<String> = self.perm.iter().map(|i| (i + 1).to_string()).collect();
        format!("{kind} perm={}", perm.join(","))
    }
}

struct RingData {
    field: Field,
    order: TermOrder,
    names: Vec<String>,
}

/// `K[t_1, ..., t_s]` with a fixed graded order. Cheap to clone.
#[derive(Clone)]
pub struct Ring(Arc<RingData>);

impl PartialEq for Ring {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.field == other.0.field
                && self.0.order == other.0.order
                && self.0.names == other.0.names)
    }
}

impl Eq for Ring {}

impl fmt::Debug for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{:?}[{}] ({})",
            self.0.field,
            self.0.names.join(","),
            self.0.order.descriptor()
        )
    }
}

impl Ring {
    pub fn new(field: &Field, order: TermOrder) -> Ring {
        let names = default_names(order.nvars());
        Ring::with_names(field, order, names)
    }

    pub fn with_names(field: &Field, order: TermOrder, names: Vec<String>) -> Ring {
        assert_eq!(names.len(), order.nvars());
        Ring(Arc::new(RingData {
            field: field.clone(),
            order,
            names,
        }))
    }

    pub fn field(&self) -> &Field {
        &self.0.field
    }

    pub fn order(&self) -> &TermOrder {
        &self.0.order
    }

    pub fn nvars(&self) -> usize {
        self.0.order.nvars()
    }

    pub fn names(&self) -> &[String] {
        &self.0.names
    }

    /// Same variables and order over another field.
    pub fn with_field(&self, field: &Field) -> Ring {
        Ring::with_names(field, self.0.order.clone(), self.0.names.clone())
    }

    /// Adds a homogenizing variable `u`, smallest in the order.
    pub fn homogenizing(&self) -> Ring {
        let mut names = self.0.names.clone();
        names.push("u".to_string());
        Ring::with_names(&self.0.field, self.0.order.extended(), names)
    }

    pub fn var(&self, i: usize) -> Poly {
        Poly::monomial(self, Monomial::var(self.nvars(), i), Elem::ONE)
    }

    /// Degree-`d` monomials in descending order.
    pub fn monomials_of_degree(&self, d: u32) -> Vec<Monomial> {
        let mut all = Monomial::all_of_degree(self.nvars(), d);
        all.sort_by(|a, b| self.0.order.cmp(b, a));
        all
    }

    pub fn format_monomial(&self, m: &Monomial) -> String {
        m.format_with(&self.0.names)
    }

    /// Parses a monomial such as `t1^2*t3` or `1`.
    pub fn parse_monomial(&self, s: &str) -> Result<Monomial> {
        let p = self.parse_poly(s)?;
        match p.terms() {
            [(m, c)] if c.is_one() => Ok(m.clone()),
            _ => Err(Error::parse(0, 0, format!("{s:?} is not a monomial"))),
        }
    }

    /// Parses the polynomial grammar `±c*t1^e1*...*ts^es` with terms joined
    /// by `+`/`-`. Coefficients are integers, `a`-powers or a parenthesized
    /// element literal. Whitespace is ignored.
    pub fn parse_poly(&self, s: &str) -> Result<Poly> {
        let src: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let err = |msg: String| Error::parse(0, 0, format!("in {s:?}: {msg}"));
        if src.is_empty() {
            return Err(err("empty polynomial".into()));
        }
        let field = self.field();
        let n = self.nvars();
        let mut terms: Vec<(Monomial, Elem)> = Vec::new();
        let bytes = src.as_bytes();
        let mut i = 0;
        while i < bytes.len() {
            let mut negative = false;
            while i < bytes.len() && (bytes[i] == b'+' || bytes[i] == b'-') {
                if bytes[i] == b'-' {
                    negative = !negative;
                }
                i += 1;
            }
            let start = i;
            let mut depth = 0i32;
            while i < bytes.len() {
                match bytes[i] {
                    b'(' => depth += 1,
                    b')' => depth -= 1,
                    b'+' | b'-' if depth == 0 => break,
                    _ => {}
                }
                i += 1;
            }
            let term = &src[start..i];
            if term.is_empty() {
                return Err(err("empty term".into()));
            }
            let mut coeff = Elem::ONE;
            let mut exps = vec![0u32; n];
            for factor in split_factors(term) {
                if let Some(inner) = factor.strip_prefix('(').and_then(|f| f.strip_suffix(')')) {
                    coeff = field.mul(coeff, field.parse(inner)?);
                    continue;
                }
                let (base, exp) = match factor.split_once('^') {
                    Some((b, e)) => (
                        b,
                        e.parse::<u32>()
                            .map_err(|_| err(format!("bad exponent in {factor:?}")))?,
                    ),
                    None => (factor, 1),
                };
                if let Some(v) = self.0.names.iter().position(|nm| nm == base) {
                    exps[v] += exp;
                } else if base == "a" {
                    coeff = field.mul(coeff, field.powu(field.a(), exp));
                } else if let Ok(c) = base.parse::<i64>() {
                    coeff = field.mul(coeff, field.pow(field.from_int(c), exp as i64)?);
                } else {
                    return Err(err(format!("unknown factor {factor:?}")));
                }
            }
            if negative {
                coeff = field.neg(coeff);
            }
            terms.push((Monomial(exps), coeff));
        }
        Ok(Poly::from_terms(self, terms))
    }
}

fn split_factors(term: &str) -> Vec<&str> {
    let mut out = Vec::new();
    let mut depth = 0;
    let mut start = 0;
    for (i, ch) in term.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => depth -= 1,
            '*' if depth == 0 => {
                out.push(&term[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    out.push(&term[start..]);
    out
}

/// A polynomial with terms kept in strictly descending monomial order and
/// no zero coefficients.
#[derive(Clone)]
pub struct Poly {
    ring: Ring,
    terms: Vec<(Monomial, Elem)>,
}

impl PartialEq for Poly {
    fn eq(&self, other: &Self) -> bool {
        self.ring == other.ring && self.terms == other.terms
    }
}

impl Eq for Poly {}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}

impl Poly {
    pub fn zero(ring: &Ring) -> Poly {
        Poly {
            ring: ring.clone(),
            terms: Vec::new(),
        }
    }

    pub fn constant(ring: &Ring, c: Elem) -> Poly {
        Poly::monomial(ring, Monomial::one(ring.nvars()), c)
    }

    pub fn monomial(ring: &Ring, m: Monomial, c: Elem) -> Poly {
        let terms = if c.is_zero() { Vec::new() } else { vec![(m, c)] };
        Poly {
            ring: ring.clone(),
            terms,
        }
    }

    /// Collects like terms, drops zeros and sorts.
    pub fn from_terms(ring: &Ring, terms: impl IntoIterator<Item = (Monomial, Elem)>) -> Poly {
        let field = ring.field();
        let mut acc: HashMap<Monomial, Elem> = HashMap::new();
        for (m, c) in terms {
            let e = acc.entry(m).or_insert(Elem::ZERO);
            *e = field.add(*e, c);
        }
        let mut terms: Vec<(Monomial, Elem)> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        let order = ring.order();
        terms.sort_by(|a, b| order.cmp(&b.0, &a.0));
        Poly {
            ring: ring.clone(),
            terms,
        }
    }

    /// Terms must already be strictly descending with nonzero coefficients.
    pub(crate) fn from_sorted_unchecked(ring: &Ring, terms: Vec<(Monomial, Elem)>) -> Poly {
        Poly {
            ring: ring.clone(),
            terms,
        }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn field(&self) -> &Field {
        self.ring.field()
    }

    pub fn terms(&self) -> &[(Monomial, Elem)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Leading monomial `in(f)`.
    pub fn lm(&self) -> Option<&Monomial> {
        self.terms.first().map(|(m, _)| m)
    }

    pub fn lc(&self) -> Option<Elem> {
        self.terms.first().map(|(_, c)| *c)
    }

    pub fn coeff(&self, m: &Monomial) -> Elem {
        self.terms
            .iter()
            .find(|(t, _)| t == m)
            .map(|(_, c)| *c)
            .unwrap_or(Elem::ZERO)
    }

    pub fn support(&self) -> Vec<Monomial> {
        self.terms.iter().map(|(m, _)| m.clone()).collect()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }

    /// Common degree of all terms, if the polynomial is homogeneous and
    /// nonzero.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let d = self.terms.first()?.0.degree();
        self.terms.iter().all(|(m, _)| m.degree() == d).then_some(d)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.is_zero() || self.homogeneous_degree().is_some()
    }

    fn check_ring(&self, other: &Poly) -> Result<()> {
        if self.ring == other.ring {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    /// `self + c * m * g`, merging the sorted term lists.
    pub fn add_scaled(&self, c: Elem, m: &Monomial, g: &Poly) -> Poly {
        let field = self.field();
        let order = self.ring.order();
        if c.is_zero() || g.is_zero() {
            return self.clone();
        }
        let mut out = Vec::with_capacity(self.terms.len() + g.terms.len());
        let mut a = self.terms.iter().peekable();
        let mut b = g.terms.iter().map(|(t, x)| (t.mul(m), field.mul(c, *x))).peekable();
        loop {
            let ord = match (a.peek(), b.peek()) {
                (None, None) => break,
                (Some(_), None) => Ordering::Greater,
                (None, Some(_)) => Ordering::Less,
                (Some(x), Some(y)) => order.cmp(&x.0, &y.0),
            };
            match ord {
                Ordering::Greater => out.push(a.next().unwrap().clone()),
                Ordering::Less => out.push(b.next().unwrap()),
                Ordering::Equal => {
                    let (t, x) = a.next().unwrap();
                    let (_, y) = b.next().unwrap();
                    let s = field.add(*x, y);
                    if !s.is_zero() {
                        out.push((t.clone(), s));
                    }
                }
            }
        }
        Poly {
            ring: self.ring.clone(),
            terms: out,
        }
    }

    pub fn add(&self, other: &Poly) -> Result<Poly> {
        self.check_ring(other)?;
        Ok(self.add_scaled(Elem::ONE, &Monomial::one(self.ring.nvars()), other))
    }

    pub fn sub(&self, other: &Poly) -> Result<Poly> {
        self.check_ring(other)?;
        let minus_one = self.field().neg(Elem::ONE);
        Ok(self.add_scaled(minus_one, &Monomial::one(self.ring.nvars()), other))
    }

    pub fn neg(&self) -> Poly {
        self.scale(self.field().neg(Elem::ONE))
    }

    pub fn scale(&self, c: Elem) -> Poly {
        if c.is_zero() {
            return Poly::zero(&self.ring);
        }
        let field = self.field();
        Poly {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, x)| (m.clone(), field.mul(c, *x))).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Poly {
        Poly {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(t, x)| (t.mul(m), *x)).collect(),
        }
    }

    pub fn mul(&self, other: &Poly) -> Result<Poly> {
        self.check_ring(other)?;
        let field = self.field();
        let terms = self.terms.iter().flat_map(|(m1, c1)| {
            other
                .terms
                .iter()
                .map(move |(m2, c2)| (m1.mul(m2), field.mul(*c1, *c2)))
        });
        Ok(Poly::from_terms(&self.ring, terms.collect::<Vec<_>>()))
    }

    /// Scales so that the leading coefficient is 1.
    pub fn monic(&self) -> Poly {
        match self.lc() {
            Some(c) if !c.is_one() => self.scale(self.field().inv(c)),
            _ => self.clone(),
        }
    }

    pub fn eval(&self, point: &[Elem]) -> Result<Elem> {
        if point.len() != self.ring.nvars() {
            return Err(Error::DimensionMismatch {
                expected: self.ring.nvars(),
                found: point.len(),
            });
        }
        let field = self.field();
        Ok(self.terms.iter().fold(Elem::ZERO, |acc, (m, c)| {
            field.add(acc, field.mul(*c, m.eval(field, point)))
        }))
    }

    /// Homogenizes with a new last variable `u`: every term `c t^a` becomes
    /// `c t^a u^{deg f - |a|}`.
    pub fn homogenize(&self) -> Poly {
        let ring = self.ring.homogenizing();
        let d = self.total_degree().unwrap_or(0);
        let terms = self.terms.iter().map(|(m, c)| {
            let mut e = m.0.clone();
            e.push(d - m.degree());
            (Monomial(e), *c)
        });
        Poly::from_terms(&ring, terms.collect::<Vec<_>>())
    }

    /// Sets the last variable to 1 and drops it.
    pub fn dehomogenize(&self, target: &Ring) -> Result<Poly> {
        if target.nvars() + 1 != self.ring.nvars() {
            return Err(Error::RingMismatch);
        }
        let terms = self.terms.iter().map(|(m, c)| {
            let e = m.0[..m.0.len() - 1].to_vec();
            (Monomial(e), *c)
        });
        Ok(Poly::from_terms(target, terms.collect::<Vec<_>>()))
    }

    /// Moves the polynomial into `target` (same variables), mapping each
    /// coefficient through `map` (indexed by packed element index).
    pub fn lift(&self, target: &Ring, map: &[Elem]) -> Poly {
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| (m.clone(), map[c.index() as usize]));
        Poly::from_terms(target, terms.collect::<Vec<_>>())
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let field = self.field();
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let mono = self.ring.format_monomial(m);
            let (negative, coeff) = match field.signed_repr(*c) {
                Some(v) if v < 0 => (true, (-v).to_string()),
                Some(v) => (false, v.to_string()),
                None => {
                    let lit = field.format(*c);
                    if lit.contains('+') {
                        (false, format!("({lit})"))
                    } else {
                        (false, lit)
                    }
                }
            };
            if negative {
                f.write_str("-")?;
            } else if i > 0 {
                f.write_str("+")?;
            }
            if m.is_one() {
                f.write_str(&coeff)?;
            } else if coeff == "1" {
                f.write_str(&mono)?;
            } else {
                write!(f, "{coeff}*{mono}")?;
            }
        }
        Ok(())
    }
}
