//! Obstructions read off a table of correction terms.
//!
//! * The splitting test: if `M` is rationally homology cobordant to
//!   `M_1 # M_2` with `|H_1(M_1)|` a power of `p` and `|H_1(M_2)|` a power of
//!   `q`, then `d(ipa + jqb) - d(ipa) - d(jqb)` does not depend on `(i, j)`.
//! * The metabolizer test: a rational homology ball filling forces a subgroup
//!   of order `sqrt|H_1|` on which the linking form and `d` both vanish.
//!
//! `H_1` is taken to be cyclic, `Z_N` with `N = p^2 q^2`; the summands
//! `Z_{p^2}` and `Z_{q^2}` are generated by `a = q^2` and `b = p^2`.

use std::fmt::{self, Display, Write as _};

use num_bigint::BigInt;
use num_integer::Roots;
use num_traits::Zero;
use serde::Serialize;

use crate::alexpoly::{divisors, is_prime};
use crate::dinv::{DTable, Rational};
use crate::error::ObstructError;

fn check_prime_pair(p: u32, q: u32) -> Result<(), ObstructError> {
    for r in [p, q] {
        if r == 2 || !is_prime(r) {
            return Err(ObstructError::NotOddPrime(r));
        }
    }
    if p == q {
        return Err(ObstructError::EqualPrimes(p));
    }
    Ok(())
}

/// The `p x q` matrix of second differences and its verdict.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplitGrid {
    p: u32,
    q: u32,
    a: u64,
    b: u64,
    // second_diff[i][j]
    second_diff: Vec<Vec<Rational>>,
    obstructed: bool,
}

impl SplitGrid {
    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    /// Generator of the `Z_{p^2}` summand.
    pub fn a(&self) -> u64 {
        self.a
    }

    /// Generator of the `Z_{q^2}` summand.
    pub fn b(&self) -> u64 {
        self.b
    }

    /// `D(i, j) = d(ipa + jqb) - d(ipa) - d(jqb)`.
    pub fn entry(&self, i: usize, j: usize) -> &Rational {
        &self.second_diff[i][j]
    }

    pub fn rows(&self) -> &[Vec<Rational>] {
        &self.second_diff
    }

    /// `true` when the entries are not all equal, which rules out a
    /// rational homology cobordism to a split connected sum.
    pub fn is_obstructed(&self) -> bool {
        self.obstructed
    }

    /// The grid with every entry negated, as it is usually tabulated.
    pub fn sign_reversed(&self) -> Vec<Vec<Rational>> {
        self.second_diff.iter().map(|row| row.iter().map(|v| -v).collect()).collect()
    }

    /// Markdown table of `-D`: rows `j`, columns `i`.
    pub fn to_markdown(&self) -> String {
        markdown_grid(&self.sign_reversed())
    }

    /// `{"p", "q", "a", "b", "D", "obstructed"}` with `D[i][j]` as exact
    /// rational strings.
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.json_value()).expect("grid serialization is infallible")
    }

    pub(crate) fn json_value(&self) -> serde_json::Value {
        #[derive(Serialize)]
        struct Doc {
            p: u32,
            q: u32,
            a: u64,
            b: u64,
            #[serde(rename = "D")]
            d: Vec<Vec<String>>,
            obstructed: bool,
        }
        serde_json::to_value(Doc {
            p: self.p,
            q: self.q,
            a: self.a,
            b: self.b,
            d: self.second_diff.iter().map(|row| row.iter().map(ToString::to_string).collect()).collect(),
            obstructed: self.obstructed,
        })
        .expect("grid serialization is infallible")
    }
}

/// Markdown table of `cells[i][j]` laid out with rows `j` and columns `i`.
pub fn markdown_grid<T: Display>(cells: &[Vec<T>]) -> String {
    let cols = cells.len();
    let rows = cells.first().map_or(0, Vec::len);
    let mut out = String::from("|       |");
    for i in 0..cols {
        let _ = write!(out, " i = {i} |");
    }
    out.push_str("\n|-------|");
    for _ in 0..cols {
        out.push_str("-------|");
    }
    out.push('\n');
    for j in 0..rows {
        let _ = write!(out, "| j = {j} |");
        for column in cells {
            let _ = write!(out, " {:>5} |", column[j].to_string());
        }
        out.push('\n');
    }
    out
}

/// Group elements `ipa + jqb` of `Z_{p^2 q^2}` for `i < p`, `j < q`, as
/// `grid[i][j]`.
pub fn grid_elements(p: u32, q: u32) -> Vec<Vec<u64>> {
    let (p64, q64) = (u64::from(p), u64::from(q));
    let n = p64 * p64 * q64 * q64;
    let pa = p64 * q64 * q64;
    let qb = q64 * p64 * p64;
    (0..p64).map(|i| (0..q64).map(|j| (i * pa + j * qb) % n).collect()).collect()
}

/// `d(ipa + jqb)` as integers, laid out `[i][j]`.
pub fn integer_grid(table: &DTable, p: u32, q: u32) -> Result<Vec<Vec<BigInt>>, ObstructError> {
    check_split_modulus(table, p, q)?;
    grid_elements(p, q)
        .into_iter()
        .map(|row| {
            row.into_iter().map(|g| table.integer_at_element(g as i64).map_err(ObstructError::from)).collect()
        })
        .collect()
}

fn check_split_modulus(table: &DTable, p: u32, q: u32) -> Result<(), ObstructError> {
    check_prime_pair(p, q)?;
    let pq = u64::from(p) * u64::from(q);
    let expected = pq * pq;
    if table.n() != expected {
        return Err(ObstructError::ModulusMismatch { expected, actual: table.n() });
    }
    Ok(())
}

/// Second differences `D(i, j)` over `i in [0, p)`, `j in [0, q)`.
pub fn split_obstruction(table: &DTable, p: u32, q: u32) -> Result<SplitGrid, ObstructError> {
    check_split_modulus(table, p, q)?;
    let (p64, q64) = (u64::from(p), u64::from(q));
    let a = q64 * q64;
    let b = p64 * p64;
    let elements = grid_elements(p, q);
    let d = |g: u64| table.at_element(g as i64);
    let second_diff: Vec<Vec<Rational>> = elements
        .iter()
        .map(|row| {
            let d_ipa = d(row[0]);
            row.iter().zip(&elements[0]).map(|(&g, &jqb)| d(g) - d_ipa - d(jqb)).collect()
        })
        .collect();
    let first = &second_diff[0][0];
    let obstructed = second_diff.iter().flatten().any(|v| v != first);
    Ok(SplitGrid { p, q, a, b, second_diff, obstructed })
}

/// `lambda(x, y) = -xy / N` reduced into `[0, 1)`.
pub fn linking_form(x: i64, y: i64, n: u64) -> Rational {
    assert!(n > 0, "linking form needs N > 0");
    let n128 = i128::from(n);
    let prod = (i128::from(x) * i128::from(y)).rem_euclid(n128);
    let residue = (-prod).rem_euclid(n128);
    Rational::new(BigInt::from(residue), BigInt::from(n))
}

/// A cyclic subgroup of `Z_N`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Subgroup {
    pub generator: u64,
    pub order: u64,
}

impl Subgroup {
    pub fn elements(&self, n: u64) -> impl Iterator<Item = u64> + '_ {
        (0..self.order).map(move |k| (k * self.generator) % n.max(1))
    }
}

/// One subgroup per divisor of `N`, by increasing order.
pub fn cyclic_subgroups(n: u64) -> Vec<Subgroup> {
    divisors(n).into_iter().map(|order| Subgroup { generator: (n / order) % n, order }).collect()
}

/// A candidate metabolizer and the two conditions it must satisfy.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Metabolizer {
    pub generator: u64,
    pub order: u64,
    pub linking_vanishes: bool,
    pub d_vanishes: bool,
}

impl Metabolizer {
    pub fn is_metabolizing(&self) -> bool {
        self.linking_vanishes && self.d_vanishes
    }
}

impl fmt::Display for Metabolizer {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "<{}> order {}: linking_vanishes = {}, d_vanishes = {}",
            self.generator, self.order, self.linking_vanishes, self.d_vanishes
        )
    }
}

/// Every subgroup of order `sqrt(N)` with its linking-form and `d` flags.
pub fn metabolizer_obstruction(table: &DTable) -> Result<Vec<Metabolizer>, ObstructError> {
    let n = table.n();
    let root = n.sqrt();
    if root * root != n {
        return Err(ObstructError::NotSquare(n));
    }
    let candidates = cyclic_subgroups(n)
        .into_iter()
        .filter(|s| s.order == root)
        .map(|s| {
            let elements: Vec<u64> = s.elements(n).collect();
            let linking_vanishes = elements
                .iter()
                .all(|&x| elements.iter().all(|&y| linking_form(x as i64, y as i64, n).is_zero()));
            let d_vanishes = elements.iter().all(|&g| table.at_element(g as i64).is_zero());
            Metabolizer { generator: s.generator, order: s.order, linking_vanishes, d_vanishes }
        })
        .collect();
    Ok(candidates)
}

/// `true` when no candidate satisfies both metabolizer conditions.
pub fn slice_obstructed(candidates: &[Metabolizer]) -> bool {
    !candidates.iter().any(Metabolizer::is_metabolizing)
}
