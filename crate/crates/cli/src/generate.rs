//! Point-set generators for the `generate` command.

use rmcode::error::{Error, Result};
use rmcode::gf::Field;
use rmcode::io::PointsFile;
use rmcode::variety::ProjectivePointSet;

#[derive(Clone, Debug)]
pub enum Kind {
    /// All of `P^{s-1}`.
    Projective { s: usize },
    /// The projective torus in `P^{s-1}`.
    Torus { s: usize },
    /// `{[(y^{v_1}, ..., y^{v_s})]}` for exponent vectors `v_i`.
    Parameterized { exponents: Vec<Vec<i64>> },
    /// The closure of `F_q^n` in `P^n`.
    AffineGrid { n: usize },
}

/// `F_q` for a prime power `q`, with the built-in modulus.
pub fn field_of_order(q: u32) -> Result<Field> {
    if q < 2 {
        return Err(Error::InvalidParams(format!("{q} is not a prime power")));
    }
    let p = (2..=q).find(|d| q.is_multiple_of(*d)).expect("q >= 2");
    let (mut r, mut k) = (q, 0);
    while r % p == 0 {
        r /= p;
        k += 1;
    }
    if r != 1 {
        return Err(Error::InvalidParams(format!("{q} is not a prime power")));
    }
    Field::new(p, k, None)
}

/// Parses exponent vectors written as `1,0;0,1`.
pub fn parse_exponents(s: &str) -> Result<Vec<Vec<i64>>> {
    s.split(';')
        .map(|v| {
            v.split(',')
                .map(|e| {
                    e.trim()
                        .parse()
                        .map_err(|_| Error::InvalidParams(format!("bad exponent {e:?}")))
                })
                .collect()
        })
        .collect()
}

pub fn generate(field: &Field, kind: &Kind) -> Result<PointsFile> {
    let need = |s: usize, what: &str| {
        if s == 0 {
            Err(Error::InvalidParams(format!("{what} must be positive")))
        } else {
            Ok(())
        }
    };
    let x = match kind {
        Kind::Projective { s } => {
            need(*s, "s")?;
            ProjectivePointSet::full_projective(field, *s)?
        }
        Kind::Torus { s } => {
            need(*s, "s")?;
            ProjectivePointSet::torus(field, *s)?
        }
        Kind::Parameterized { exponents } => ProjectivePointSet::parameterized(field, exponents)?,
        Kind::AffineGrid { n } => {
            need(*n, "n")?;
            ProjectivePointSet::affine_grid(field, *n)?
        }
    };
    Ok(PointsFile::from(&x))
}
