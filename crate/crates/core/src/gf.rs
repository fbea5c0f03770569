//! Exact arithmetic in finite fields `F_q`, `q = p^k`.
//!
//! Elements are stored as their coordinate vector with respect to the basis
//! `1, a, ..., a^{k-1}` packed into a single integer `sum c_i p^i`, where `a`
//! is the class of `x` in `F_p[x]/(modulus)`. Multiplication goes through
//! discrete log tables built from a primitive element, so every operation is
//! a table lookup or a handful of integer operations.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Fields larger than this are rejected; the log tables are `O(q)`.
const MAX_ORDER: u64 = 1 << 20;
/// Addition is tabulated up to this order.
const ADD_TABLE_MAX: u32 = 1024;

/// Default moduli (Conway polynomials) as coefficient lists `m_0, ..., m_k`.
/// For each of them the class of `x` is a primitive element.
const BUILTIN_MODULI: &[(u32, u32, &[u32])] = &[
    (2, 2, &[1, 1, 1]),
    (2, 3, &[1, 1, 0, 1]),
    (2, 4, &[1, 1, 0, 0, 1]),
    (2, 5, &[1, 0, 1, 0, 0, 1]),
    (2, 6, &[1, 1, 0, 1, 1, 0, 1]),
    (3, 2, &[2, 2, 1]),
    (3, 3, &[1, 2, 0, 1]),
    (3, 4, &[2, 0, 0, 2, 1]),
    (5, 2, &[2, 4, 1]),
    (7, 2, &[3, 6, 1]),
];

/// An element of some [`Field`]. Only meaningful together with its field.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Elem(u32);

impl Elem {
    pub const ZERO: Elem = Elem(0);
    pub const ONE: Elem = Elem(1);

    /// Packed coordinate index in `0..q`.
    pub fn index(self) -> u32 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }

    pub fn is_one(self) -> bool {
        self.0 == 1
    }
}

#[derive(Debug)]
struct FieldData {
    p: u32,
    k: u32,
    q: u32,
    modulus: Vec<u32>,
    generator: Elem,
    exp: Vec<u32>,
    log: Vec<u32>,
    neg: Vec<u32>,
    add: Vec<u32>,
}

/// A finite field `F_{p^k}` together with a fixed modulus and primitive
/// element. Cheap to clone.
#[derive(Clone)]
pub struct Field(Arc<FieldData>);

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.p == other.0.p && self.0.k == other.0.k && self.0.modulus == other.0.modulus)
    }
}

impl Eq for Field {}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F_{}", self.0.q)?;
        if self.0.k > 1 {
            write!(f, "[a]/({:?})", self.0.modulus)?;
        }
        Ok(())
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Built-in modulus for `F_{p^k}`, if the table has one.
pub fn builtin_modulus(p: u32, k: u32) -> Option<Vec<u32>> {
    if k == 1 {
        return Some(vec![0, 1]);
    }
    BUILTIN_MODULI
        .iter()
        .find(|(bp, bk, _)| *bp == p && *bk == k)
        .map(|(_, _, m)| m.to_vec())
}

/// Dense univariate polynomials over `F_p`, lowest coefficient first.
mod upoly {
    pub fn trim(a: &mut Vec<u64>) {
        while a.last() == Some(&0) {
            a.pop();
        }
    }

    fn inv_mod(a: u64, p: u64) -> u64 {
        let mut r = 1;
        let mut b = a % p;
        let mut e = p - 2;
        while e > 0 {
            if e & 1 == 1 {
                r = r * b % p;
            }
            b = b * b % p;
            e >>= 1;
        }
        r
    }

    pub fn rem(a: &[u64], m: &[u64], p: u64) -> Vec<u64> {
        let mut r = a.to_vec();
        trim(&mut r);
        let dm = m.len() - 1;
        let inv_lead = inv_mod(m[dm], p);
        while r.len() > dm {
            let c = r[r.len() - 1] * inv_lead % p;
            let shift = r.len() - 1 - dm;
            for (i, &mi) in m.iter().enumerate() {
                r[shift + i] = (r[shift + i] + p - c * mi % p) % p;
            }
            trim(&mut r);
        }
        r
    }

    pub fn mulmod(a: &[u64], b: &[u64], m: &[u64], p: u64) -> Vec<u64> {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut prod = vec![0u64; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x * y) % p;
            }
        }
        rem(&prod, m, p)
    }

    pub fn powmod(base: &[u64], mut e: u64, m: &[u64], p: u64) -> Vec<u64> {
        let mut result = vec![1u64];
        let mut b = rem(base, m, p);
        while e > 0 {
            if e & 1 == 1 {
                result = mulmod(&result, &b, m, p);
            }
            b = mulmod(&b, &b, m, p);
            e >>= 1;
        }
        result
    }

    pub fn gcd(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
        let mut x = a.to_vec();
        let mut y = b.to_vec();
        trim(&mut x);
        trim(&mut y);
        while !y.is_empty() {
            let r = rem(&x, &y, p);
            x = y;
            y = r;
        }
        x
    }

    /// Ben-Or: `f` of degree k is irreducible iff gcd(x^{p^i} - x, f) = 1
    /// for all `1 <= i <= k/2`.
    pub fn is_irreducible(f: &[u64], p: u64) -> bool {
        let k = f.len() - 1;
        if k == 0 {
            return false;
        }
        if k == 1 {
            return true;
        }
        if k <= 3 {
            // A reducible polynomial of degree <= 3 has a linear factor.
            return (0..p).all(|c| f.iter().rev().fold(0, |acc, &fi| (acc * c + fi) % p) != 0);
        }
        let x = vec![0u64, 1];
        let mut xp = x.clone();
        for _ in 1..=k / 2 {
            xp = powmod(&xp, p, f, p);
            let mut diff = xp.clone();
            diff.resize(diff.len().max(2), 0);
            diff[1] = (diff[1] + p - 1) % p;
            trim(&mut diff);
            if gcd(f, &diff, p).len() != 1 {
                return false;
            }
        }
        true
    }
}

impl Field {
    /// `F_p` with generator the smallest primitive root.
    pub fn prime(p: u32) -> Result<Field> {
        Field::new(p, 1, None)
    }

    /// Builds `F_{p^k}`. Without an explicit modulus, `k > 1` requires an
    /// entry in the built-in table.
    pub fn new(p: u32, k: u32, modulus: Option<&[u32]>) -> Result<Field> {
        if !is_prime(p as u64) {
            return Err(Error::NonPrimeP(p as u64));
        }
        if k == 0 {
            return Err(Error::InvalidParams("extension degree must be positive".into()));
        }
        let q = (p as u64).checked_pow(k).filter(|&q| q <= MAX_ORDER);
        let q = match q {
            Some(q) => q as u32,
            None => return Err(Error::FieldTooLarge((p as u64).saturating_pow(k))),
        };
        let modulus = match modulus {
            Some(m) => m.to_vec(),
            None => builtin_modulus(p, k).ok_or(Error::NoModulusAvailable { p, k })?,
        };
        let monic = modulus.len() == k as usize + 1
            && modulus.last() == Some(&1)
            && modulus.iter().all(|&c| c < p);
        let as_u64: Vec<u64> = modulus.iter().map(|&c| c as u64).collect();
        if !monic || !upoly::is_irreducible(&as_u64, p as u64) {
            return Err(Error::ReducibleModulus(modulus));
        }
        Ok(Field::build(p, k, q, modulus))
    }

    /// Smallest monic irreducible polynomial of degree `k` over `F_p`
    /// (coefficient vectors compared as base-p integers).
    pub fn find_irreducible(p: u32, k: u32) -> Option<Vec<u32>> {
        let count = (p as u64).checked_pow(k)?;
        (0..count).find_map(|n| {
            let mut f: Vec<u64> = (0..k).map(|i| (n / (p as u64).pow(i)) % p as u64).collect();
            f.push(1);
            upoly::is_irreducible(&f, p as u64).then(|| f.iter().map(|&c| c as u32).collect())
        })
    }

    fn build(p: u32, k: u32, q: u32, modulus: Vec<u32>) -> Field {
        let m64: Vec<u64> = modulus.iter().map(|&c| c as u64).collect();
        let to_poly = |x: u32| -> Vec<u64> {
            let mut v: Vec<u64> = (0..k).map(|i| ((x / p.pow(i)) % p) as u64).collect();
            upoly::trim(&mut v);
            v
        };
        let from_poly = |v: &[u64]| -> u32 {
            v.iter().enumerate().map(|(i, &c)| c as u32 * p.pow(i as u32)).sum()
        };
        let order = (q - 1) as u64;
        let factors = prime_factors(order);
        let generator = (1..q)
            .find(|&x| {
                let base = to_poly(x);
                factors.iter().all(|&r| {
                    let y = upoly::powmod(&base, order / r, &m64, p as u64);
                    y != [1]
                })
            })
            .expect("the multiplicative group of a finite field is cyclic");

        let n = (q - 1) as usize;
        let mut exp = vec![0u32; 2 * n.max(1)];
        let mut log = vec![0u32; q as usize];
        let g = to_poly(generator);
        let mut cur = vec![1u64];
        for i in 0..n {
            let x = from_poly(&cur);
            exp[i] = x;
            exp[i + n] = x;
            log[x as usize] = i as u32;
            cur = upoly::mulmod(&cur, &g, &m64, p as u64);
        }

        let digits = |x: u32| -> Vec<u32> { (0..k).map(|i| (x / p.pow(i)) % p).collect() };
        let neg: Vec<u32> = (0..q)
            .map(|x| {
                digits(x)
                    .iter()
                    .enumerate()
                    .map(|(i, &c)| ((p - c) % p) * p.pow(i as u32))
                    .sum()
            })
            .collect();
        let mut data = FieldData {
            p,
            k,
            q,
            modulus,
            generator: Elem(generator),
            exp,
            log,
            neg,
            add: Vec::new(),
        };
        if q <= ADD_TABLE_MAX {
            let mut add = vec![0u32; (q * q) as usize];
            for x in 0..q {
                for y in 0..q {
                    add[(x * q + y) as usize] = digit_add(&data, x, y);
                }
            }
            data.add = add;
        }
        Field(Arc::new(data))
    }

    pub fn characteristic(&self) -> u32 {
        self.0.p
    }

    pub fn degree(&self) -> u32 {
        self.0.k
    }

    pub fn order(&self) -> u32 {
        self.0.q
    }

    pub fn modulus(&self) -> &[u32] {
        &self.0.modulus
    }

    /// The primitive element fixed at construction: the smallest element
    /// (by packed index) of multiplicative order `q - 1`.
    pub fn generator(&self) -> Elem {
        self.0.generator
    }

    pub fn zero(&self) -> Elem {
        Elem::ZERO
    }

    pub fn one(&self) -> Elem {
        Elem::ONE
    }

    /// The class of `x` in `F_p[x]/(modulus)`; the integer 0 for prime fields
    /// represented by the default modulus `x`.
    pub fn a(&self) -> Elem {
        if self.0.k == 1 {
            let m0 = self.0.modulus[0];
            Elem((self.0.p - m0) % self.0.p)
        } else {
            Elem(self.0.p)
        }
    }

    /// Element with packed index `i`, or `FieldMismatch` if out of range.
    pub fn elem(&self, i: u32) -> Result<Elem> {
        if i < self.0.q {
            Ok(Elem(i))
        } else {
            Err(Error::FieldMismatch)
        }
    }

    pub fn check(&self, x: Elem) -> Result<Elem> {
        self.elem(x.0)
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> + '_ {
        (0..self.0.q).map(Elem)
    }

    pub fn nonzero_elements(&self) -> impl Iterator<Item = Elem> + '_ {
        (1..self.0.q).map(Elem)
    }

    /// Image of an integer under `Z -> F_p -> F_q`.
    pub fn from_int(&self, n: i64) -> Elem {
        Elem(n.rem_euclid(self.0.p as i64) as u32)
    }

    /// Coordinates with respect to `1, a, ..., a^{k-1}`.
    pub fn coeffs(&self, x: Elem) -> Vec<u32> {
        let p = self.0.p;
        (0..self.0.k).map(|i| (x.0 / p.pow(i)) % p).collect()
    }

    pub fn from_coeffs(&self, coeffs: &[u32]) -> Result<Elem> {
        if coeffs.len() > self.0.k as usize {
            return Err(Error::DimensionMismatch {
                expected: self.0.k as usize,
                found: coeffs.len(),
            });
        }
        let p = self.0.p;
        Ok(Elem(
            coeffs
                .iter()
                .enumerate()
                .map(|(i, &c)| (c % p) * p.pow(i as u32))
                .sum(),
        ))
    }

    /// If `x` lies in the prime subfield, its integer value in `0..p`.
    pub fn as_prime_int(&self, x: Elem) -> Option<u32> {
        (x.0 < self.0.p).then_some(x.0)
    }

    #[inline]
    pub fn add(&self, x: Elem, y: Elem) -> Elem {
        let d = &self.0;
        if !d.add.is_empty() {
            Elem(d.add[(x.0 * d.q + y.0) as usize])
        } else {
            Elem(digit_add(d, x.0, y.0))
        }
    }

    #[inline]
    pub fn neg(&self, x: Elem) -> Elem {
        Elem(self.0.neg[x.0 as usize])
    }

    #[inline]
    pub fn sub(&self, x: Elem, y: Elem) -> Elem {
        self.add(x, self.neg(y))
    }

    #[inline]
    pub fn mul(&self, x: Elem, y: Elem) -> Elem {
        if x.0 == 0 || y.0 == 0 {
            return Elem::ZERO;
        }
        let d = &self.0;
        Elem(d.exp[(d.log[x.0 as usize] + d.log[y.0 as usize]) as usize])
    }

    /// Multiplicative inverse; panics on zero. See [`Field::try_inv`].
    #[inline]
    pub fn inv(&self, x: Elem) -> Elem {
        self.try_inv(x).expect("inverse of zero")
    }

    pub fn try_inv(&self, x: Elem) -> Result<Elem> {
        if x.0 == 0 {
            return Err(Error::DivisionByZero);
        }
        let d = &self.0;
        let n = d.q - 1;
        Ok(Elem(d.exp[((n - d.log[x.0 as usize]) % n) as usize]))
    }

    #[inline]
    pub fn div(&self, x: Elem, y: Elem) -> Elem {
        self.mul(x, self.inv(y))
    }

    pub fn try_div(&self, x: Elem, y: Elem) -> Result<Elem> {
        Ok(self.mul(x, self.try_inv(y)?))
    }

    /// `x^e` for any integer `e`; negative exponents invert first.
    pub fn pow(&self, x: Elem, e: i64) -> Result<Elem> {
        if x.0 == 0 {
            return match e.cmp(&0) {
                std::cmp::Ordering::Less => Err(Error::DivisionByZero),
                std::cmp::Ordering::Equal => Ok(Elem::ONE),
                std::cmp::Ordering::Greater => Ok(Elem::ZERO),
            };
        }
        let d = &self.0;
        let n = (d.q - 1) as i64;
        let l = (d.log[x.0 as usize] as i64 * e.rem_euclid(n)).rem_euclid(n);
        Ok(Elem(d.exp[l as usize]))
    }

    /// `x^e` for a non-negative exponent; never fails.
    #[inline]
    pub fn powu(&self, x: Elem, e: u32) -> Elem {
        if e == 0 {
            return Elem::ONE;
        }
        if x.0 == 0 {
            return Elem::ZERO;
        }
        let d = &self.0;
        let n = (d.q - 1) as u64;
        let l = (d.log[x.0 as usize] as u64 * e as u64) % n;
        Elem(d.exp[l as usize])
    }

    /// Multiplicative order of a nonzero element.
    pub fn mult_order(&self, x: Elem) -> Result<u32> {
        if x.0 == 0 {
            return Err(Error::DivisionByZero);
        }
        let n = self.0.q - 1;
        let l = self.0.log[x.0 as usize];
        Ok(n / gcd(n, l))
    }

    /// `g^i` for the fixed generator.
    pub fn gen_pow(&self, i: i64) -> Elem {
        let n = (self.0.q - 1) as i64;
        Elem(self.0.exp[i.rem_euclid(n) as usize])
    }

    /// Constructs `F_{q^e}` as an extension of the same prime field.
    pub fn extension(&self, e: u32) -> Result<Field> {
        let k = self.0.k * e;
        let p = self.0.p;
        match builtin_modulus(p, k) {
            Some(m) => Field::new(p, k, Some(&m)),
            None => {
                let m = Field::find_irreducible(p, k).ok_or(Error::NoModulusAvailable { p, k })?;
                Field::new(p, k, Some(&m))
            }
        }
    }

    /// Field embedding `self -> big`, as the image of each element indexed by
    /// packed index. Requires `k | big.k` and a common characteristic.
    pub fn embedding_into(&self, big: &Field) -> Result<Vec<Elem>> {
        if self.0.p != big.0.p || !big.0.k.is_multiple_of(self.0.k) {
            return Err(Error::FieldMismatch);
        }
        // Image of `a`: a root of our modulus in the big field.
        let root = big
            .elements()
            .find(|&z| {
                let mut acc = Elem::ZERO;
                for &c in self.0.modulus.iter().rev() {
                    acc = big.add(big.mul(acc, z), big.from_int(c as i64));
                }
                acc.is_zero()
            })
            .ok_or(Error::FieldMismatch)?;
        Ok(self
            .elements()
            .map(|x| {
                let mut acc = Elem::ZERO;
                for &c in self.coeffs(x).iter().rev() {
                    acc = big.add(big.mul(acc, root), big.from_int(c as i64));
                }
                acc
            })
            .collect())
    }

    /// Symmetric integer representative for prime-field elements of odd
    /// characteristic (`-(p-1)/2 ..= (p-1)/2`), plain value otherwise.
    pub fn signed_repr(&self, x: Elem) -> Option<i64> {
        let v = self.as_prime_int(x)? as i64;
        let p = self.0.p as i64;
        if p > 2 && v > (p - 1) / 2 {
            Some(v - p)
        } else {
            Some(v)
        }
    }

    /// Element literal: an integer for prime fields, otherwise a sum of
    /// terms `c`, `a`, `c*a^e` in ascending powers, e.g. `2+a`.
    pub fn format(&self, x: Elem) -> String {
        if self.0.k == 1 {
            return x.0.to_string();
        }
        let coeffs = self.coeffs(x);
        let mut parts = Vec::new();
        for (i, &c) in coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let part = match (i, c) {
                (0, _) => c.to_string(),
                (1, 1) => "a".to_string(),
                (1, _) => format!("{c}*a"),
                (_, 1) => format!("a^{i}"),
                _ => format!("{c}*a^{i}"),
            };
            parts.push(part);
        }
        if parts.is_empty() {
            "0".to_string()
        } else {
            parts.join("+")
        }
    }

    /// Parses an element literal. Accepts signed integers, `a`, `a^e`, `c*a`,
    /// `c*a^e` and sums/differences of those; no whitespace.
    pub fn parse(&self, s: &str) -> Result<Elem> {
        let err = |msg: &str| Error::parse(0, 0, format!("bad element literal {s:?}: {msg}"));
        if s.is_empty() {
            return Err(err("empty"));
        }
        let mut acc = Elem::ZERO;
        let bytes = s.as_bytes();
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
            while i < bytes.len() && bytes[i] != b'+' && bytes[i] != b'-' {
                i += 1;
            }
            let term = &s[start..i];
            if term.is_empty() {
                return Err(err("empty term"));
            }
            let mut value = Elem::ONE;
            for factor in term.split('*') {
                let f = if let Some(rest) = factor.strip_prefix('a') {
                    let e = if rest.is_empty() {
                        1
                    } else {
                        rest.strip_prefix('^')
                            .and_then(|e| e.parse::<i64>().ok())
                            .ok_or_else(|| err("bad exponent"))?
                    };
                    self.pow(self.a(), e)?
                } else {
                    let n: i64 = factor.parse().map_err(|_| err("bad integer"))?;
                    self.from_int(n)
                };
                value = self.mul(value, f);
            }
            if negative {
                value = self.neg(value);
            }
            acc = self.add(acc, value);
        }
        Ok(acc)
    }
}

fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn digit_add(d: &FieldData, mut x: u32, mut y: u32) -> u32 {
    let p = d.p;
    let mut out = 0;
    let mut place = 1;
    for _ in 0..d.k {
        out += ((x % p + y % p) % p) * place;
        x /= p;
        y /= p;
        place *= p;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_generators() {
        assert_eq!(Field::prime(3).unwrap().generator(), Elem(2));
        assert_eq!(Field::prime(7).unwrap().generator(), Elem(3));
        assert_eq!(Field::prime(5).unwrap().generator(), Elem(2));
    }

    #[test]
    fn brute_force_orders_in_f7() {
        let f = Field::prime(7).unwrap();
        let order = |x: u32| (1..=6).find(|&e| f.powu(Elem(x), e) == Elem::ONE).unwrap();
        assert_eq!(order(2), 3);
        assert_eq!(order(3), 6);
        assert_eq!(f.mult_order(Elem(2)).unwrap(), 3);
    }

    #[test]
    fn f9_with_x2_plus_1() {
        let f = Field::new(3, 2, Some(&[1, 0, 1])).unwrap();
        let a = f.a();
        assert_eq!(f.mult_order(a).unwrap(), 4);
        let a1 = f.add(a, Elem::ONE);
        assert_eq!(f.generator(), a1);
        assert_eq!(f.format(a1), "1+a");
        assert_eq!(f.powu(f.generator(), 8), Elem::ONE);
        // exhaustive order table: the smallest element of order 8 is a+1
        for x in 1..4 {
            assert_ne!(f.mult_order(Elem(x)).unwrap(), 8);
        }
    }

    #[test]
    fn f4_generator_is_a() {
        let f = Field::new(2, 2, None).unwrap();
        assert_eq!(f.generator(), f.a());
        for x in f.nonzero_elements().filter(|x| !x.is_one()) {
            assert_eq!(f.mult_order(x).unwrap(), 3);
        }
    }

    #[test]
    fn builtin_moduli_are_primitive() {
        for &(p, k, _) in BUILTIN_MODULI {
            let f = Field::new(p, k, None).unwrap();
            assert_eq!(f.generator(), f.a(), "F_{}^{}", p, k);
        }
    }

    #[test]
    fn construction_errors() {
        assert_eq!(Field::prime(4).unwrap_err(), Error::NonPrimeP(4));
        assert!(matches!(
            Field::new(3, 2, Some(&[2, 0, 1])),
            Err(Error::ReducibleModulus(_))
        ));
        assert_eq!(
            Field::new(11, 2, None).unwrap_err(),
            Error::NoModulusAvailable { p: 11, k: 2 }
        );
    }

    #[test]
    fn inverses_in_f5() {
        let f = Field::prime(5).unwrap();
        assert_eq!(f.inv(Elem(3)), Elem(2));
        assert_eq!(f.inv(Elem(2)), Elem(3));
        assert_eq!(f.inv(f.from_int(-2)), Elem(2));
        assert_eq!(f.from_int(-3), Elem(2));
        assert_eq!(f.try_inv(Elem::ZERO), Err(Error::DivisionByZero));
        assert_eq!(f.elem(7), Err(Error::FieldMismatch));
    }

    #[test]
    fn literals_round_trip() {
        let f = Field::new(3, 2, None).unwrap();
        for x in f.elements() {
            assert_eq!(f.parse(&f.format(x)).unwrap(), x);
        }
        assert_eq!(f.parse("a^8").unwrap(), Elem::ONE);
        assert_eq!(f.parse("-1").unwrap(), f.from_int(2));
        assert_eq!(f.parse("2*a+1").unwrap(), f.from_coeffs(&[1, 2]).unwrap());
        assert!(f.parse("b").is_err());
    }

    #[test]
    fn extension_embedding_is_a_ring_map() {
        let small = Field::new(3, 2, None).unwrap();
        let big = small.extension(2).unwrap();
        assert_eq!(big.order(), 81);
        let emb = small.embedding_into(&big).unwrap();
        for x in small.elements() {
            for y in small.elements() {
                assert_eq!(emb[small.add(x, y).0 as usize], big.add(emb[x.0 as usize], emb[y.0 as usize]));
                assert_eq!(emb[small.mul(x, y).0 as usize], big.mul(emb[x.0 as usize], emb[y.0 as usize]));
            }
        }
    }

    #[test]
    fn irreducible_search() {
        let m = Field::find_irreducible(3, 3).unwrap();
        assert!(Field::new(3, 3, Some(&m)).is_ok());
        assert_eq!(Field::find_irreducible(2, 2).unwrap(), vec![1, 1, 1]);
    }
}
