use std::fmt::Write as _;
use std::str::FromStr;

use hfsplit_core::error::Error;
use hfsplit_core::obstruct::slice_obstructed;
use hfsplit_core::{
    cyclotomic, cyclotomic_split, homology_order, pretzel_alexander, torus2_alexander, BifiltGen, DTable,
    IntLaurentPoly, Metabolizer, SplitGrid,
};
use num_bigint::BigInt;
use serde_json::{json, Value};

use crate::{AlexanderArgs, Format};

fn number(n: &BigInt) -> Value {
    Value::Number(serde_json::Number::from_str(&n.to_string()).expect("integer is a JSON number"))
}

fn poly_json(name: &str, poly: &IntLaurentPoly) -> Value {
    json!({
        "name": name,
        "polynomial": poly,
        "human": poly.to_string(),
        "value_at_minus_one": number(&poly.eval_at_minus_one()),
    })
}

fn poly_csv(rows: &[(String, IntLaurentPoly)]) -> String {
    let mut out = String::from("name,exponent,coefficient\n");
    for (name, poly) in rows {
        for (e, c) in poly.terms() {
            let _ = writeln!(out, "{name},{e},{c}");
        }
    }
    out
}

pub fn alexander(a: &AlexanderArgs, format: Format) -> Result<String, Error> {
    if a.split {
        let (p, q) = (a.p.unwrap_or_default(), a.q.unwrap_or_default());
        let (f1, f2, f3) = cyclotomic_split(p, q)?;
        let product = &(&f1 * &f2) * &f3;
        let pq = p.checked_mul(q).ok_or_else(|| Error::InvalidArgument("p * q overflows".into()))?;
        let identity = product == torus2_alexander(pq)?;
        let rows =
            [(format!("phi_{}", 2 * p), f1), (format!("phi_{}", 2 * q), f2), (format!("phi_{}", 2 * pq), f3)];
        return Ok(match format {
            Format::Json => {
                let factors: Vec<Value> = rows.iter().map(|(n, f)| poly_json(n, f)).collect();
                let doc =
                    json!({ "p": p, "q": q, "factors": factors, "product_is_torus_alexander": identity });
                serde_json::to_string(&doc).expect("JSON") + "\n"
            }
            Format::Csv => poly_csv(&rows),
            Format::Md => {
                let mut out = String::new();
                for (name, f) in &rows {
                    let _ = writeln!(out, "{name}(t) = {f}    [value at -1: {}]", f.eval_at_minus_one());
                }
                let _ = writeln!(out, "product = (t^{pq} + 1)/(t + 1): {identity}");
                out
            }
        });
    }

    let (name, poly) = if let Some(n) = a.torus {
        (format!("T(2,{n})"), torus2_alexander(n)?)
    } else if let Some(n) = a.pretzel {
        (format!("K_{n}"), pretzel_alexander(n)?)
    } else if let Some(n) = a.cyclotomic {
        (format!("phi_{n}"), cyclotomic(n)?)
    } else {
        return Err(Error::InvalidArgument("choose --torus, --pretzel, --cyclotomic or --split".into()));
    };
    let det = homology_order(&poly);
    Ok(match format {
        Format::Json => {
            let mut doc = poly_json(&name, &poly);
            doc["determinant"] = number(&det);
            serde_json::to_string(&doc).expect("JSON") + "\n"
        }
        Format::Csv => poly_csv(&[(name, poly)]),
        Format::Md => format!("{name}: {poly}\ndeterminant: {det}\n"),
    })
}

pub fn levels(gens: &[BifiltGen], pairs: u64, format: Format) -> String {
    match format {
        Format::Json => {
            let doc = json!({ "pairs": pairs, "levels": gens });
            serde_json::to_string(&doc).expect("JSON") + "\n"
        }
        Format::Csv => {
            let mut out = String::from("alpha,beta\n");
            for g in gens {
                let _ = writeln!(out, "{},{}", g.alpha, g.beta);
            }
            out
        }
        Format::Md => {
            let mut out = format!(
                "{} levels from {} generator pairs\n\n| alpha | beta |\n|------:|-----:|\n",
                gens.len(),
                pairs
            );
            for g in gens {
                let _ = writeln!(out, "| {} | {} |", g.alpha, g.beta);
            }
            out
        }
    }
}

pub fn dtable_markdown(table: &DTable) -> String {
    let mut out = format!(
        "N = {}, convention = {}, complex = {}\n\n| m | d |\n|--:|--:|\n",
        table.n(),
        table.convention(),
        table.source()
    );
    for (m, d) in table.iter() {
        let _ = writeln!(out, "| {m} | {d} |");
    }
    out
}

pub fn split_csv(grid: &SplitGrid) -> String {
    let mut out = String::from("i,j,D,neg_D\n");
    for (i, row) in grid.rows().iter().enumerate() {
        for (j, v) in row.iter().enumerate() {
            let _ = writeln!(out, "{i},{j},{v},{}", -v);
        }
    }
    let _ = writeln!(out, "# obstructed: {}", grid.is_obstructed());
    out
}

pub fn metabolizers(table: &DTable, cands: &[Metabolizer], format: Format) -> String {
    let obstructed = slice_obstructed(cands);
    match format {
        Format::Json => {
            let doc = json!({
                "N": table.n(),
                "convention": table.convention().name(),
                "linking_form": "-xy/N mod 1",
                "candidates": cands,
                "slice_obstructed": obstructed,
            });
            serde_json::to_string_pretty(&doc).expect("JSON") + "\n"
        }
        Format::Csv => {
            let mut out = String::from("generator,order,linking_vanishes,d_vanishes\n");
            for c in cands {
                let _ = writeln!(out, "{},{},{},{}", c.generator, c.order, c.linking_vanishes, c.d_vanishes);
            }
            out
        }
        Format::Md => {
            let mut out = format!("N = {}, linking form -xy/N mod 1\n\n", table.n());
            for c in cands {
                let _ = writeln!(out, "metabolizer {c}");
            }
            let _ = writeln!(out, "slice_obstructed: {obstructed}");
            out
        }
    }
}
