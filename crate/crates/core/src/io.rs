//! Points files.
//!
//! ```text
//! # comment
//! field 3 2 2 2 1      # p, k, optional modulus coefficients m_0 .. m_k
//! vars 3
//! order grevlex perm=1,2,3
//! affine
//! 1 0 1
//! a 1+a 1
//! ```
//!
//! `order` and `affine` are optional. Each remaining line is one point;
//! coordinates are separated by whitespace or commas and the line may be
//! wrapped in brackets or parentheses. With `affine`, points have `vars`
//! coordinates and are read as affine points.

use crate::error::{Error, Result};
use crate::gf::{Elem, Field};
use crate::poly::{OrderKind, TermOrder};
use crate::variety::ProjectivePointSet;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointsFile {
    pub field: Field,
    pub nvars: usize,
    pub order: Option<TermOrder>,
    pub affine: bool,
    pub points: Vec<Vec<Elem>>,
}

impl PointsFile {
    /// The projective point set, taking the closure of affine input.
    pub fn point_set(&self) -> Result<ProjectivePointSet> {
        if self.affine {
            ProjectivePointSet::projective_closure(&self.field, &self.points)
        } else {
            ProjectivePointSet::new(&self.field, self.nvars, self.points.clone())
        }
    }

    /// Number of variables of the projective ring.
    pub fn ring_nvars(&self) -> usize {
        self.nvars + usize::from(self.affine)
    }

    /// The stated order, GRevLex with the natural variable order otherwise.
    pub fn order_or_default(&self) -> TermOrder {
        self.order.clone().unwrap_or_else(|| TermOrder::grevlex(self.ring_nvars()))
    }
}

/// Tokens of `line` with their 1-based columns.
fn tokens(line: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, ch) in line.char_indices() {
        let sep = ch.is_whitespace() || ch == ',';
        match (sep, start) {
            (true, Some(s)) => {
                out.push((s + 1, &line[s..i]));
                start = None;
            }
            (false, None) => start = Some(i),
            _ => {}
        }
    }
    if let Some(s) = start {
        out.push((s + 1, &line[s..]));
    }
    out
}

fn strip_comment(line: &str) -> &str {
    line.split('#').next().unwrap_or("")
}

fn parse_uint(tok: (usize, &str), line: usize, what: &str) -> Result<u32> {
    tok.1
        .parse()
        .map_err(|_| Error::parse(line, tok.0, format!("expected {what}, found {:?}", tok.1)))
}

fn parse_order(toks: &[(usize, &str)], line: usize, nvars: usize) -> Result<TermOrder> {
    let kind = match toks.get(1) {
        Some((_, "grevlex")) => OrderKind::GRevLex,
        Some((_, "glex")) => OrderKind::GLex,
        Some(&(col, t)) => return Err(Error::parse(line, col, format!("unknown order {t:?}"))),
        None => return Err(Error::parse(line, 1, "missing order name")),
    };
    let perm = match toks.get(2) {
        None => (0..nvars).collect(),
        Some(&(col, t)) => {
            let list = t
                .strip_prefix("perm=")
                .ok_or_else(|| Error::parse(line, col, format!("expected perm=..., found {t:?}")))?;
            let mut perm: Vec<usize> = Vec::new();
            let mut rest: Vec<&str> = list.split(',').filter(|s| !s.is_empty()).collect();
            for &(_, extra) in &toks[3..] {
                rest.push(extra);
            }
            for s in rest {
                let i: usize = s
                    .parse()
                    .ok()
                    .filter(|&i: &usize| i >= 1)
                    .ok_or_else(|| Error::parse(line, col, format!("bad variable index {s:?}")))?;
                perm.push(i - 1);
            }
            perm
        }
    };
    if perm.len() != nvars {
        return Err(Error::parse(
            line,
            1,
            format!("order lists {} variables, expected {nvars}", perm.len()),
        ));
    }
    TermOrder::new(kind, perm).map_err(|e| Error::parse(line, 1, e.to_string()))
}

/// Parses an order specification such as `glex perm=3,2,1`.
pub fn parse_order_spec(spec: &str, nvars: usize) -> Result<TermOrder> {
    let line = format!("order {spec}");
    parse_order(&tokens(&line), 1, nvars)
}

fn parse_coordinate(field: &Field, tok: &str, line: usize, col: usize) -> Result<Elem> {
    let t = tok.trim_start_matches(['(', '[']).trim_end_matches([')', ']']);
    field.parse(t).map_err(|e| match e {
        Error::Parse { msg, .. } => Error::parse(line, col, msg),
        other => Error::parse(line, col, other.to_string()),
    })
}

pub fn parse_points_file(text: &str) -> Result<PointsFile> {
    let mut field: Option<Field> = None;
    let mut nvars: Option<usize> = None;
    let mut order: Option<(usize, Vec<(usize, String)>)> = None;
    let mut affine = false;
    let mut points = Vec::new();
    let mut last_line = 0;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        last_line = line;
        let toks = tokens(strip_comment(raw));
        let Some(&(col, head)) = toks.first() else { continue };
        match head {
            "field" => {
                if field.is_some() {
                    return Err(Error::parse(line, col, "repeated field line"));
                }
                let p = parse_uint(*toks.get(1).ok_or_else(|| Error::parse(line, col, "missing p"))?, line, "p")?;
                let k = match toks.get(2) {
                    Some(&t) => parse_uint(t, line, "k")?,
                    None => 1,
                };
                let modulus: Vec<u32> = toks[3.min(toks.len())..]
                    .iter()
                    .map(|&t| parse_uint(t, line, "a modulus coefficient"))
                    .collect::<Result<_>>()?;
                let m = (!modulus.is_empty()).then_some(modulus.as_slice());
                field = Some(Field::new(p, k, m).map_err(|e| Error::parse(line, col, e.to_string()))?);
            }
            "vars" => {
                if field.is_none() {
                    return Err(Error::parse(line, col, "vars before field"));
                }
                let t = *toks.get(1).ok_or_else(|| Error::parse(line, col, "missing variable count"))?;
                let s = parse_uint(t, line, "a variable count")? as usize;
                if s == 0 {
                    return Err(Error::parse(line, t.0, "need at least one variable"));
                }
                nvars = Some(s);
            }
            "order" => {
                if order.is_some() {
                    return Err(Error::parse(line, col, "repeated order line"));
                }
                let owned: Vec<(usize, String)> = toks.iter().map(|&(c, t)| (c, t.to_string())).collect();
                order = Some((line, owned));
            }
            "affine" => {
                if !points.is_empty() {
                    return Err(Error::parse(line, col, "affine after points"));
                }
                affine = true;
            }
            _ => {
                let f = field.as_ref().ok_or_else(|| Error::parse(line, col, "point before field line"))?;
                let s = nvars.ok_or_else(|| Error::parse(line, col, "point before vars line"))?;
                let coords: Vec<Elem> = toks
                    .iter()
                    .filter(|(_, t)| !t.chars().all(|c| "()[]".contains(c)))
                    .map(|&(c, t)| parse_coordinate(f, t, line, c))
                    .collect::<Result<_>>()?;
                if coords.len() != s {
                    return Err(Error::parse(
                        line,
                        col,
                        format!("expected {s} coordinates, found {}", coords.len()),
                    ));
                }
                points.push(coords);
            }
        }
    }
    let field = field.ok_or_else(|| Error::parse(last_line.max(1), 1, "missing field line"))?;
    let nvars = nvars.ok_or_else(|| Error::parse(last_line.max(1), 1, "missing vars line"))?;
    if points.is_empty() {
        return Err(Error::parse(last_line.max(1), 1, "no points"));
    }
    let order = match order {
        Some((line, toks)) => {
            let borrowed: Vec<(usize, &str)> = toks.iter().map(|(c, t)| (*c, t.as_str())).collect();
            Some(parse_order(&borrowed, line, nvars + usize::from(affine))?)
        }
        None => None,
    };
    Ok(PointsFile {
        field,
        nvars,
        order,
        affine,
        points,
    })
}

/// Canonical text of a points file; parsing it gives back `file`.
pub fn write_points_file(file: &PointsFile) -> String {
    let f = &file.field;
    let mut out = format!("field {} {}", f.characteristic(), f.degree());
    if f.degree() > 1 {
        for c in f.modulus() {
            out.push_str(&format!(" {c}"));
        }
    }
    out.push_str(&format!("\nvars {}\n", file.nvars));
    if let Some(o) = &file.order {
        out.push_str(&format!("order {}\n", o.descriptor()));
    }
    if file.affine {
        out.push_str("affine\n");
    }
    for p in &file.points {
        let coords: Vec<String> = p.iter().map(|&c| f.format(c)).collect();
        out.push_str(&coords.join(" "));
        out.push('\n');
    }
    out
}

impl From<&ProjectivePointSet> for PointsFile {
    fn from(x: &ProjectivePointSet) -> PointsFile {
        PointsFile {
            field: x.field().clone(),
            nvars: x.nvars(),
            order: None,
            affine: false,
            points: x.points().to_vec(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let text = "# nine\nfield 3 2\nvars 2\norder glex perm=2,1\n(1, a)\n[0 1+a]  # tail\n\n2*a 1\n";
        let file = parse_points_file(text).unwrap();
        assert_eq!(file.field.order(), 9);
        assert_eq!(file.order.as_ref().unwrap().perm(), &[1, 0]);
        assert_eq!(file.points.len(), 3);
        let again = parse_points_file(&write_points_file(&file)).unwrap();
        assert_eq!(again, file);
    }

    #[test]
    fn affine_closure() {
        let file = parse_points_file("field 5\nvars 1\naffine\norder grevlex\n0\n1\n").unwrap();
        assert_eq!(file.ring_nvars(), 2);
        assert_eq!(file.order_or_default().nvars(), 2);
        let x = file.point_set().unwrap();
        assert_eq!(x.point(1), &[Elem::ONE, Elem::ONE]);
    }

    #[test]
    fn errors_carry_positions() {
        assert!(matches!(parse_points_file(""), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(
            parse_points_file("field 3\nvars 2\n1 7x\n"),
            Err(Error::Parse { line: 3, col: 3, .. })
        ));
        assert!(matches!(parse_points_file("field 4\n"), Err(Error::Parse { line: 1, col: 1, .. })));
        assert!(matches!(
            parse_points_file("field 3\nvars 2\n1 0 1\n"),
            Err(Error::Parse { line: 3, .. })
        ));
        assert!(matches!(
            parse_points_file("field 3\nvars 2\norder grevlex perm=1,1\n1 0\n0 1\n"),
            Err(Error::Parse { line: 3, .. })
        ));
    }
}
