use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::poly::Monomial;

/// A monomial ideal stored by its minimal generators.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    nvars: usize,
    gens: Vec<Monomial>,
}

fn canonical_cmp(a: &Monomial, b: &Monomial) -> Ordering {
    a.degree()
        .cmp(&b.degree())
        .then_with(|| b.exponents().cmp(a.exponents()))
}

impl MonomialIdeal {
    /// Builds the ideal generated by `gens`, discarding redundant generators.
    pub fn new(nvars: usize, gens: impl IntoIterator<Item = Monomial>) -> MonomialIdeal {
        let mut all: Vec<Monomial> = gens.into_iter().collect();
        all.sort_by(canonical_cmp);
        all.dedup();
        let mut min: Vec<Monomial> = Vec::with_capacity(all.len());
        for g in all {
            if !min.iter().any(|h| h.divides(&g)) {
                min.push(g);
            }
        }
        MonomialIdeal { nvars, gens: min }
    }

    pub fn zero(nvars: usize) -> MonomialIdeal {
        MonomialIdeal {
            nvars,
            gens: Vec::new(),
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn gens(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    pub fn is_proper(&self) -> bool {
        !self.gens.iter().any(|g| g.is_one())
    }

    /// `L + (extra)`.
    pub fn sum(&self, extra: &[Monomial]) -> MonomialIdeal {
        MonomialIdeal::new(self.nvars, self.gens.iter().chain(extra).cloned())
    }

    /// `(L : t^m)`, generated by `lcm(g, t^m) / t^m`.
    pub fn colon_monomial(&self, m: &Monomial) -> MonomialIdeal {
        MonomialIdeal::new(self.nvars, self.gens.iter().map(|g| g.lcm(m).div(m)))
    }

    /// Intersection, generated by pairwise lcms.
    pub fn intersect(&self, other: &MonomialIdeal) -> MonomialIdeal {
        let lcms = self
            .gens
            .iter()
            .flat_map(|a| other.gens.iter().map(move |b| a.lcm(b)));
        MonomialIdeal::new(self.nvars, lcms.collect::<Vec<_>>())
    }

    /// `(L : (F)) = ∩_{f ∈ F} (L : f)`. Panics on empty `F`.
    pub fn colon(&self, fs: &[Monomial]) -> MonomialIdeal {
        let mut it = fs.iter();
        let first = it.next().expect("colon by an empty set of monomials");
        it.fold(self.colon_monomial(first), |acc, f| {
            acc.intersect(&self.colon_monomial(f))
        })
    }

    /// Number of degree-`d` monomials outside the ideal.
    pub fn standard_count(&self, d: u32) -> u64 {
        Monomial::all_of_degree(self.nvars, d)
            .iter()
            .filter(|m| !self.contains(m))
            .count() as u64
    }

    /// Krull dimension of `S/L`: `s` minus the smallest set of variables
    /// meeting the support of every generator.
    pub fn dim(&self) -> Result<usize> {
        let s = self.nvars;
        if s > 16 {
            return Err(Error::Unsupported(format!(
                "dimension of a monomial ideal in {s} variables"
            )));
        }
        let supports: Vec<u32> = self
            .gens
            .iter()
            .map(|g| g.support().iter().fold(0u32, |acc, &i| acc | (1 << i)))
            .collect();
        let mut best = s;
        for cover in 0u32..(1 << s) {
            let size = cover.count_ones() as usize;
            if size < best && supports.iter().all(|&sup| sup & cover != 0) {
                best = size;
            }
        }
        Ok(s - best)
    }

    /// `(dim S/L, deg S/L)`. In dimension 0 the degree is the number of
    /// standard monomials; in dimension 1 it is the stable value of the
    /// Hilbert function. The unit ideal yields `(0, 0)`.
    pub fn dim_degree(&self) -> Result<(usize, u64)> {
        if !self.is_proper() {
            return Ok((0, 0));
        }
        let dim = self.dim()?;
        let bound: u32 = (0..self.nvars)
            .map(|i| self.gens.iter().map(|g| g.exponents()[i]).max().unwrap_or(0))
            .sum();
        match dim {
            0 => Ok((0, (0..=bound).map(|d| self.standard_count(d)).sum())),
            1 => {
                let a = self.standard_count(bound);
                let b = self.standard_count(bound + 1);
                if a != b {
                    return Err(Error::inconsistent(format!(
                        "Hilbert function of a one-dimensional monomial quotient not stable at degree {bound}"
                    )));
                }
                Ok((1, a))
            }
            d => Err(Error::DimensionTooLarge(d)),
        }
    }
}
