//! Correction terms `d(S^3_N(L), m)` of large surgeries, computed from the
//! grading-0 generators of the knot complex.
//!
//! For a generator at level `(alpha, beta)` and a label `m`,
//! `Psi = beta - m` when `beta - alpha >= m` and `Psi = alpha` otherwise;
//! `delta_m` is the minimum of `Psi` over all generators, and
//!
//! ```text
//! d(m) = 2 delta_m - ((2m - N)^2 - N) / (4N)
//! ```
//!
//! under the [`Convention::Table1`] orientation. [`Convention::Appendix`] is
//! the global negation of the same value.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::DinvError;
use crate::staircase::{pareto_min, BifiltGen, GeneratorSet};

pub type Rational = BigRational;

/// Orientation convention for the surgery manifold.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum Convention {
    /// `d = 2 delta - lens_term`.
    #[default]
    Table1,
    /// `d = -2 delta + lens_term`.
    Appendix,
}

impl Convention {
    pub fn name(self) -> &'static str {
        match self {
            Convention::Table1 => "table1",
            Convention::Appendix => "appendix",
        }
    }

    pub fn flipped(self) -> Self {
        match self {
            Convention::Table1 => Convention::Appendix,
            Convention::Appendix => Convention::Table1,
        }
    }
}

impl fmt::Display for Convention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Convention {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "table1" => Ok(Convention::Table1),
            "appendix" => Ok(Convention::Appendix),
            other => Err(format!("unknown convention '{other}' (expected table1 or appendix)")),
        }
    }
}

/// Largest `|m|` of a symmetric residue modulo an odd `n`.
fn half_range(n: u64) -> Result<u64, DinvError> {
    if n == 0 || n % 2 == 0 || n > i64::MAX as u64 {
        return Err(DinvError::BadModulus(n));
    }
    Ok((n - 1) / 2)
}

/// A Spin^c structure on `S^3_N(L)`, labelled by `m` with `|m| <= (N - 1) / 2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SpincLabel {
    m: i64,
    n: u64,
}

impl SpincLabel {
    pub fn new(m: i64, n: u64) -> Result<Self, DinvError> {
        let bound = half_range(n)?;
        if m.unsigned_abs() > bound {
            return Err(DinvError::LabelOutOfRange { m, n, bound });
        }
        Ok(Self { m, n })
    }

    pub fn m(self) -> i64 {
        self.m
    }

    pub fn n(self) -> u64 {
        self.n
    }

    /// The conjugate structure, `-m`.
    pub fn conjugate(self) -> Self {
        Self { m: -self.m, n: self.n }
    }

    /// Every label for `n`, in increasing `m`.
    pub fn all(n: u64) -> Result<impl Iterator<Item = SpincLabel>, DinvError> {
        let bound = half_range(n)? as i64;
        Ok((-bound..=bound).map(move |m| SpincLabel { m, n }))
    }
}

impl fmt::Display for SpincLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod {})", self.m, self.n)
    }
}

/// Reduces the group element `g` of `Z_N` to its label in the symmetric range.
pub fn label_of_group_element(g: i64, n: u64) -> Result<SpincLabel, DinvError> {
    let bound = half_range(n)?;
    let r = i128::from(g).rem_euclid(i128::from(n)) as u64;
    let m = if r > bound { r as i64 - n as i64 } else { r as i64 };
    Ok(SpincLabel { m, n })
}

pub fn psi(g: BifiltGen, m: i64) -> i64 {
    let (alpha, beta) = (i64::from(g.alpha), i64::from(g.beta));
    if beta - alpha >= m {
        beta - m
    } else {
        alpha
    }
}

/// `delta_m`: the minimum of [`psi`] over the generators.
pub fn delta<'a>(gens: impl IntoIterator<Item = &'a BifiltGen>, m: i64) -> Result<i64, DinvError> {
    gens.into_iter().map(|&g| psi(g, m)).min().ok_or(DinvError::EmptyGeneratorSet)
}

/// The quadratic term `((2m - N)^2 - N) / (4N)`.
///
/// # Panics
///
/// Panics if `n == 0`.
pub fn lens_term(n: u64, m: i64) -> Rational {
    assert!(n > 0, "lens_term needs a positive surgery coefficient");
    let n = BigInt::from(n);
    let shifted = BigInt::from(2) * BigInt::from(m) - &n;
    Rational::new(&shifted * &shifted - &n, BigInt::from(4) * n)
}

fn d_from_delta(delta: i64, n: u64, m: i64, convention: Convention) -> Rational {
    let value = Rational::from_integer(BigInt::from(2 * delta)) - lens_term(n, m);
    match convention {
        Convention::Table1 => value,
        Convention::Appendix => -value,
    }
}

/// `d(S^3_N(L), m)` as an exact rational.
pub fn d_surgery<'a>(
    gens: impl IntoIterator<Item = &'a BifiltGen>,
    n: u64,
    m: i64,
    convention: Convention,
) -> Result<Rational, DinvError> {
    let label = SpincLabel::new(m, n)?;
    let delta = delta(gens, label.m())?;
    Ok(d_from_delta(delta, n, m, convention))
}

/// Like [`d_surgery`], but fails unless the value is an integer.
pub fn d_surgery_integral<'a>(
    gens: impl IntoIterator<Item = &'a BifiltGen>,
    n: u64,
    m: i64,
    convention: Convention,
) -> Result<BigInt, DinvError> {
    let value = d_surgery(gens, n, m, convention)?;
    to_integer(m, value)
}

fn to_integer(m: i64, value: Rational) -> Result<BigInt, DinvError> {
    if value.is_integer() {
        Ok(value.to_integer())
    } else {
        Err(DinvError::NonIntegral { m, value })
    }
}

/// Correction terms for every Spin^c label of `S^3_N(L)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DTable {
    n: u64,
    convention: Convention,
    source: String,
    // values[m + bound]
    values: Vec<Rational>,
}

impl DTable {
    /// Builds a table from an arbitrary function of the label. Used for
    /// synthetic tables.
    pub fn from_fn(
        n: u64,
        convention: Convention,
        mut f: impl FnMut(i64) -> Rational,
    ) -> Result<Self, DinvError> {
        let values = SpincLabel::all(n)?.map(|l| f(l.m())).collect();
        Ok(Self { n, convention, source: String::from("synthetic"), values })
    }

    pub fn with_source(mut self, source: impl Into<String>) -> Self {
        self.source = source.into();
        self
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn convention(&self) -> Convention {
        self.convention
    }

    pub fn source(&self) -> &str {
        &self.source
    }

    fn bound(&self) -> i64 {
        ((self.n - 1) / 2) as i64
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Value at a label in the symmetric range; `None` outside it.
    pub fn at(&self, m: i64) -> Option<&Rational> {
        let idx = m.checked_add(self.bound())?;
        usize::try_from(idx).ok().and_then(|i| self.values.get(i))
    }

    pub fn get(&self, label: SpincLabel) -> Option<&Rational> {
        if label.n() != self.n {
            return None;
        }
        self.at(label.m())
    }

    /// Value at any element of `Z_N`.
    pub fn at_element(&self, g: i64) -> &Rational {
        let label = label_of_group_element(g, self.n).expect("table modulus is valid");
        self.at(label.m()).expect("reduced label is in range")
    }

    pub fn integer_at_element(&self, g: i64) -> Result<BigInt, DinvError> {
        let label = label_of_group_element(g, self.n)?;
        to_integer(label.m(), self.at_element(g).clone())
    }

    /// `(m, d(m))` in increasing `m`.
    pub fn iter(&self) -> impl Iterator<Item = (i64, &Rational)> + '_ {
        let bound = self.bound();
        self.values.iter().enumerate().map(move |(i, v)| (i as i64 - bound, v))
    }

    pub fn is_conjugation_symmetric(&self) -> bool {
        self.iter().all(|(m, v)| self.at(-m) == Some(v))
    }

    /// The same table under the opposite orientation convention.
    pub fn negated(&self) -> Self {
        Self {
            n: self.n,
            convention: self.convention.flipped(),
            source: self.source.clone(),
            values: self.values.iter().map(|v| -v).collect(),
        }
    }

    /// CSV with header `m,d`; non-integral values are written as `p/q`.
    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(["m", "d"]).expect("in-memory write");
        for (m, v) in self.iter() {
            w.write_record([m.to_string(), v.to_string()]).expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("in-memory flush")).expect("CSV is UTF-8")
    }

    /// JSON object with metadata and an `entries` array of `{m, d}`; `d` is an
    /// exact rational string.
    pub fn to_json(&self) -> String {
        #[derive(Serialize)]
        struct Entry {
            m: i64,
            d: String,
        }
        #[derive(Serialize)]
        struct Doc<'a> {
            #[serde(rename = "N")]
            n: u64,
            convention: &'static str,
            staircase_source: &'a str,
            entries: Vec<Entry>,
        }
        let doc = Doc {
            n: self.n,
            convention: self.convention.name(),
            staircase_source: &self.source,
            entries: self.iter().map(|(m, v)| Entry { m, d: v.to_string() }).collect(),
        };
        serde_json::to_string_pretty(&doc).expect("table serialization is infallible")
    }
}

/// Evaluates [`d_surgery`] at every label. Labels are processed in parallel;
/// the result does not depend on scheduling.
pub fn d_table(gens: &GeneratorSet, n: u64, convention: Convention) -> Result<DTable, DinvError> {
    if gens.is_empty() {
        return Err(DinvError::EmptyGeneratorSet);
    }
    let frontier = pareto_min(gens);
    let labels: Vec<SpincLabel> = SpincLabel::all(n)?.collect();
    let values = labels
        .par_iter()
        .map(|l| {
            let delta = delta(&frontier, l.m())?;
            Ok(d_from_delta(delta, n, l.m(), convention))
        })
        .collect::<Result<Vec<_>, DinvError>>()?;
    Ok(DTable { n, convention, source: String::from("unspecified"), values })
}
