//! Plain-text rendering of a report.

use std::fmt::Write;

use rmcode::codes::Cell;

use crate::report::Report;

fn cell(c: &Cell) -> String {
    match c {
        Cell::Exact { value, .. } => value.to_string(),
        Cell::Interval { lo, hi } => format!("{lo}..{hi}"),
        Cell::Infinity => "∞".to_string(),
    }
}

fn list<T: ToString>(v: &[T]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", ")
}

fn grid(rows: &[Vec<String>]) -> String {
    let width = rows.iter().flatten().map(|s| s.chars().count()).max().unwrap_or(1);
    rows.iter()
        .map(|row| {
            let cells: Vec<String> = row.iter().map(|s| format!("{s:>width$}")).collect();
            format!("  {}\n", cells.join(" "))
        })
        .collect()
}

pub fn render(r: &Report) -> String {
    let mut out = String::new();
    let f = &r.input.field;
    let q = f.p.pow(f.k);
    let _ = writeln!(out, "field      F_{q}");
    let _ = writeln!(out, "order      {}", r.input.order);
    let _ = writeln!(out, "points     {}", r.input.points.len());
    let res = &r.results;
    if let Some(i) = &res.ideal {
        let _ = writeln!(out, "ideal      {}", list(&i.gb));
        let _ = writeln!(
            out,
            "generators {} minimal, complete intersection: {}",
            i.minimal_generators, i.complete_intersection
        );
    }
    if let Some(h) = &res.hilbert {
        let _ = writeln!(out, "hilbert    {}", list(&h.values));
        let _ = writeln!(out, "h-vector   {}", list(&h.h_vector));
        let _ = writeln!(out, "r0         {}", h.r0);
    }
    if let Some(i) = &res.indicators {
        let _ = writeln!(out, "v-numbers  {}", list(&i.v_numbers));
        let _ = writeln!(out, "v(I)       {}", i.v_number);
        let ess = if i.essential.is_empty() { "none".to_string() } else { list(&i.essential) };
        let _ = writeln!(out, "essential  {ess}");
        for (k, (g, v)) in i.functions.iter().zip(&i.values).enumerate() {
            let _ = writeln!(out, "  f_{} = {g}    f_{}(P_{}) = {v}", k + 1, k + 1, k + 1);
        }
    }
    if let Some(codes) = &res.codes {
        let _ = writeln!(out, "codes      d  n  k  min distance");
        for c in codes {
            let md = c.min_distance.map_or("?".to_string(), |w| w.to_string());
            let _ = writeln!(out, "           {}  {}  {}  {md}", c.degree, c.length, c.dimension);
        }
    }
    if let Some(g) = &res.ghw {
        let _ = writeln!(out, "ghw        δ({}, {}) = {}", g.degree, g.r, cell(&g.value));
    }
    if let Some(w) = &res.weight_matrix {
        let rows: Vec<Vec<String>> = w.cells.iter().map(|r| r.iter().map(cell).collect()).collect();
        let _ = writeln!(out, "weights    (footprint equal: {})", w.footprint_equal);
        out.push_str(&grid(&rows));
    }
    if let Some(fp) = &res.footprint {
        let rows: Vec<Vec<String>> = fp
            .iter()
            .map(|r| r.iter().map(|c| c.map_or("∞".to_string(), |v| v.to_string())).collect())
            .collect();
        let _ = writeln!(out, "footprint");
        out.push_str(&grid(&rows));
    }
    if let Some(d) = &res.duality {
        let _ = writeln!(out, "duality    {}", if d.holds { "holds" } else { "fails" });
        if let Some(b) = &d.beta {
            let _ = writeln!(out, "β          ({})", list(b));
        }
        if let Some(w) = &d.witness {
            let _ = writeln!(out, "witness    {}", w.reason);
        }
    }
    if let Some(s) = &res.selfdual {
        let pick = |f: fn(&crate::report::SelfDualResult) -> bool| {
            let v: Vec<u32> = s.iter().filter(|e| f(e)).map(|e| e.degree).collect();
            if v.is_empty() {
                "none".to_string()
            } else {
                format!("d = {}", list(&v))
            }
        };
        let _ = writeln!(out, "self-orthogonal: {}", pick(|e| e.self_orthogonal));
        let _ = writeln!(out, "self-dual: {}", pick(|e| e.self_dual));
    }
    if let Some(h) = &res.regular_form {
        let _ = writeln!(out, "regular    {} (extension degree {})", h.h, h.extension_degree);
    }
    if let Some(g) = &res.gorenstein {
        let _ = writeln!(out, "h          {} (extension degree {})", g.h, g.extension_degree);
        let _ = writeln!(
            out,
            "socle      type {}, degrees {}, level {}, s-number {}",
            g.socle_type,
            list(&g.socle_degrees),
            g.level,
            g.s_number
        );
        let _ = writeln!(out, "gorenstein {}", g.gorenstein);
        if let Some(m) = &g.socle_monomial {
            let _ = writeln!(out, "socle mono {m}");
        }
    }
    for i in &r.incomplete {
        let _ = writeln!(out, "incomplete {}: {}", i.analysis, i.error);
    }
    if let Some(t) = r.timing_ms {
        let _ = writeln!(out, "time       {t} ms");
    }
    out
}
