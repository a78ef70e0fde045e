use std::fmt::Write;

use serde::Serialize;
use steinberg_core::json;
use steinberg_core::period_domain::{self, HomologyReport};
use steinberg_core::{Coweight, JhContext, KlTable, SimpleSubset, WeylElement, WeylGroup};

use crate::{Failure, Format, Session};

type Out = Result<String, Failure>;

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string(value).expect("DTOs always serialize");
    s.push('\n');
    s
}

fn words(g: &WeylGroup, ws: &[WeylElement]) -> String {
    ws.iter().map(|&w| g.format(w)).collect::<Vec<_>>().join(" ")
}

fn warn(warnings: &[String]) {
    for w in warnings {
        eprintln!("warning: {w}");
    }
}

pub fn factors(s: &Session, word: &str, count: bool) -> Out {
    let g = &s.group;
    let w = g.parse_element(word)?;
    let ctx = JhContext::for_group(g.clone());
    let table = ctx.jh_factors(w)?;
    Ok(match (s.format, count) {
        (Format::Json, true) => to_json(&serde_json::json!({ "count": table.count() })),
        (Format::Json, false) => to_json(&json::factor_table(g, &table)),
        (Format::Text, true) => format!("{}\n", table.count()),
        (Format::Text, false) => {
            let mut out = String::new();
            for (f, m) in &table.entries {
                writeln!(out, "{}", ctx.table_line(f, *m)).unwrap();
            }
            writeln!(out, "count: {}", table.count()).unwrap();
            out
        }
    })
}

pub fn omega(s: &Session, mu: &Coweight, i: SimpleSubset) -> Out {
    let g = &s.group;
    let om = period_domain::omega(g, mu, i)?;
    Ok(match s.format {
        Format::Json => to_json(&json::omega(g, &om)),
        Format::Text => format!("{}\n", words(g, &om.elements)),
    })
}

pub fn yspace(s: &Session, mu: &Coweight, i: SimpleSubset) -> Out {
    let g = &s.group;
    let y = period_domain::y_structure(g, mu, i)?;
    let layout = period_domain::parabolic_complex_layout(g, mu, i)?;
    if s.format == Format::Json {
        return Ok(to_json(&json::yspace(g, &y, &layout)));
    }
    let mut out = String::new();
    writeln!(out, "I={}; r_I={}; d_I={}; start degree {}", i, y.r_i, y.d_i, layout.start_degree).unwrap();
    let cells: Vec<String> = y.cells.iter().map(|&(w, d)| format!("{}:{d}", g.format(w))).collect();
    writeln!(out, "cells: {}", cells.join(" ")).unwrap();
    for (j, col) in layout.columns.iter().enumerate() {
        let objs: Vec<String> = col.iter().map(|&w| layout.object_label(g, w)).collect();
        writeln!(out, "degree {}: {}", layout.start_degree + j as i64, objs.join(" ")).unwrap();
    }
    Ok(out)
}

pub fn complex(s: &Session, mu: &Coweight, detail: bool) -> Out {
    let g = &s.group;
    let c = period_domain::build_complex(g, mu)?;
    warn(&c.warnings());
    if s.format == Format::Json {
        return Ok(to_json(&json::complex(g, &c)));
    }
    let sizes: Vec<String> = c.level_sizes().iter().map(usize::to_string).collect();
    let mut out = format!("i0={}; levels: [{}]\n", c.i0, sizes.join(","));
    if detail {
        for (j, level) in c.levels.iter().enumerate() {
            writeln!(out, "degree {}: {}", c.degree_of_level(j), words(g, level)).unwrap();
        }
    }
    Ok(out)
}

fn homology_text(ctx: &JhContext, report: &HomologyReport, trace: bool) -> String {
    let g = ctx.group();
    let mut out = format!("i0={}\n", report.i0);
    for d in report.by_degree() {
        if d.entries.is_empty() {
            writeln!(out, "H_{}: 0", d.degree).unwrap();
            continue;
        }
        writeln!(out, "H_{}: {} factors", d.degree, d.entries.len()).unwrap();
        for (f, h) in &d.entries {
            let flag = if h.pinned() { "" } else { " UNDETERMINED" };
            writeln!(out, "  {h}  {}  [{}, {}, {}]{flag}", ctx.factor_label(f), g.format(f.v), f.i, f.j).unwrap();
        }
    }
    let open = report.undetermined().count();
    if open > 0 {
        writeln!(out, "undetermined: {open} factors").unwrap();
    }
    if trace {
        for f in &report.factors {
            writeln!(out, "trace {} {}: {}", ctx.factor_label(&f.factor()), f.dist, f.trace.join("; ")).unwrap();
        }
    }
    out
}

pub fn homology(s: &Session, mu: &Coweight, trace: bool) -> Out {
    let g = &s.group;
    let c = period_domain::build_complex(g, mu)?;
    warn(&c.warnings());
    let ctx = JhContext::for_group(g.clone());
    let report = period_domain::homology_bounds(&ctx, &c)?;
    Ok(match s.format {
        Format::Json => to_json(&json::homology(g, &report)),
        Format::Text => homology_text(&ctx, &report, trace),
    })
}

pub fn kl(s: &Session, x: &str, w: &str, verma: bool) -> Out {
    let g = &s.group;
    let (x, w) = (g.parse_element(x)?, g.parse_element(w)?);
    let table = KlTable::new(g.clone());
    let p = table.kl_polynomial(x, w)?;
    let m = if verma { Some(table.verma_multiplicity(x, w)?) } else { None };
    Ok(match (s.format, m) {
        (Format::Json, _) => to_json(&json::kl(g, x, w, &p, m)),
        (Format::Text, Some(m)) => format!("{m}\n"),
        (Format::Text, None) => format!("{p}\n"),
    })
}

pub fn double_layout(s: &Session, mu: &Coweight) -> Out {
    let g = &s.group;
    let lay = period_domain::double_complex_layout(g, mu)?;
    if s.format == Format::Json {
        return Ok(to_json(&json::double_layout(g, &lay)));
    }
    let mut out = format!("n={}\n", lay.n);
    for (&(p, q), cells) in &lay.entries {
        let items: Vec<String> = cells.iter().map(|&(i, w)| format!("{i} {}", g.format(w))).collect();
        writeln!(out, "({p},{q}): {}", items.join("; ")).unwrap();
    }
    Ok(out)
}
