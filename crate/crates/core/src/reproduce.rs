//! End-to-end run for `K_15`: the d-table on the `3 x 5` grid, its second
//! differences, and both verdicts.

use std::fmt::Write as _;

use num_bigint::BigInt;
use serde::Serialize;

use crate::dinv::{d_table, Convention, DTable};
use crate::error::Error;
use crate::family::surgery_complex;
use crate::obstruct::{
    grid_elements, integer_grid, markdown_grid, metabolizer_obstruction, slice_obstructed, split_obstruction,
    Metabolizer, SplitGrid,
};

pub const P: u32 = 3;
pub const Q: u32 = 5;

#[derive(Clone, Debug)]
pub struct Reproduction {
    pub table: DTable,
    /// `d(ipa + jqb)` laid out `[i][j]`.
    pub values: Vec<Vec<BigInt>>,
    pub split: SplitGrid,
    pub metabolizers: Vec<Metabolizer>,
}

pub fn reproduce_paper(convention: Convention) -> Result<Reproduction, Error> {
    let complex = surgery_complex(P * Q)?;
    let table = d_table(&complex.generators, complex.modulus, convention)?.with_source(complex.source);
    let values = integer_grid(&table, P, Q)?;
    let split = split_obstruction(&table, P, Q)?;
    let metabolizers = metabolizer_obstruction(&table)?;
    Ok(Reproduction { table, values, split, metabolizers })
}

fn stringify<T: ToString>(cells: &[Vec<T>]) -> Vec<Vec<String>> {
    cells.iter().map(|row| row.iter().map(ToString::to_string).collect()).collect()
}

impl Reproduction {
    pub fn obstructed(&self) -> bool {
        self.split.is_obstructed()
    }

    pub fn slice_obstructed(&self) -> bool {
        slice_obstructed(&self.metabolizers)
    }

    pub fn to_markdown(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "# K_15: N = {}, p = {}, q = {}, a = {}, b = {}, convention = {}\n",
            self.table.n(),
            self.split.p(),
            self.split.q(),
            self.split.a(),
            self.split.b(),
            self.table.convention()
        );
        out.push_str("## Values of d(M, ipa + jqb)\n\n");
        out.push_str(&markdown_grid(&self.values));
        out.push_str("\n## Values of -(d(M, ipa + jqb) - d(M, ipa) - d(M, jqb))\n\n");
        out.push_str(&self.split.to_markdown());
        out.push('\n');
        let _ = writeln!(out, "obstructed: {}", self.obstructed());
        for m in &self.metabolizers {
            let _ = writeln!(out, "metabolizer {m}");
        }
        let _ = writeln!(out, "slice_obstructed: {}", self.slice_obstructed());
        out
    }

    /// One row per grid cell: `table,i,j,element,value`.
    pub fn to_csv(&self) -> String {
        let elements = grid_elements(self.split.p(), self.split.q());
        let tables = [
            ("d", stringify(&self.values)),
            ("neg_second_difference", stringify(&self.split.sign_reversed())),
        ];
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(["table", "i", "j", "element", "value"]).expect("in-memory write");
        for (name, cells) in &tables {
            for j in 0..elements[0].len() {
                for (i, row) in elements.iter().enumerate() {
                    w.write_record([
                        name,
                        i.to_string().as_str(),
                        j.to_string().as_str(),
                        row[j].to_string().as_str(),
                        cells[i][j].as_str(),
                    ])
                    .expect("in-memory write");
                }
            }
        }
        String::from_utf8(w.into_inner().expect("in-memory flush")).expect("CSV is UTF-8")
    }

    pub fn to_json(&self) -> String {
        #[derive(Serialize)]
        struct Doc<'a> {
            #[serde(rename = "N")]
            n: u64,
            convention: &'static str,
            staircase_source: &'a str,
            d_values: Vec<Vec<String>>,
            split: serde_json::Value,
            metabolizers: &'a [Metabolizer],
            obstructed: bool,
            slice_obstructed: bool,
        }
        let doc = Doc {
            n: self.table.n(),
            convention: self.table.convention().name(),
            staircase_source: self.table.source(),
            d_values: stringify(&self.values),
            split: self.split.json_value(),
            metabolizers: &self.metabolizers,
            obstructed: self.obstructed(),
            slice_obstructed: self.slice_obstructed(),
        };
        serde_json::to_string_pretty(&doc).expect("report serialization is infallible")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn markdown_report() {
        let md = reproduce_paper(Convention::Table1).unwrap().to_markdown();
        assert!(md.contains("| j = 1 |    18 |     6 |    20 |"));
        assert!(md.contains("| j = 4 |    22 |    12 |    26 |"));
        assert!(md.contains("obstructed: true\n"));
        assert!(md.contains("slice_obstructed: true\n"));
    }

    #[test]
    fn appendix_convention_negates_values_but_not_verdict() {
        let a = reproduce_paper(Convention::Table1).unwrap();
        let b = reproduce_paper(Convention::Appendix).unwrap();
        assert_eq!(b.values[0][0], BigInt::from(-22));
        assert_eq!(a.obstructed(), b.obstructed());
    }

    #[test]
    fn csv_report() {
        let csv = reproduce_paper(Convention::Table1).unwrap().to_csv();
        assert_eq!(csv.lines().count(), 31);
        assert!(csv.contains("\nd,1,1,120,6\n"));
        assert!(csv.contains("\nneg_second_difference,1,1,120,26\n"));
    }

    #[test]
    fn json_report() {
        let v: serde_json::Value =
            serde_json::from_str(&reproduce_paper(Convention::Table1).unwrap().to_json()).unwrap();
        assert_eq!(v["d_values"][2][2], "22");
        assert_eq!(v["obstructed"], true);
        assert_eq!(v["metabolizers"][0]["generator"], 15);
    }
}
