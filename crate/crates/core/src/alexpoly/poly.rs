//! Integer Laurent polynomials in one variable `t`.
//!
//! Coefficients are arbitrary-precision integers stored sparsely by exponent.
//! Zero coefficients are never stored, so structural equality is coefficient
//! equality.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::PolyError;

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct IntLaurentPoly {
    terms: BTreeMap<i64, BigInt>,
}

impl IntLaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    /// `coeff * t^exp`.
    pub fn monomial(coeff: impl Into<BigInt>, exp: i64) -> Self {
        let mut p = Self::zero();
        p.add_term(exp, coeff.into());
        p
    }

    /// Builds `c[0] + c[1] t + c[2] t^2 + ...`.
    pub fn from_coeffs(coeffs: &[i64]) -> Self {
        Self::from_pairs(coeffs.iter().enumerate().map(|(e, &c)| (e as i64, BigInt::from(c))))
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs. Repeated
    /// exponents are summed.
    pub fn from_pairs<C: Into<BigInt>>(pairs: impl IntoIterator<Item = (i64, C)>) -> Self {
        let mut p = Self::zero();
        for (e, c) in pairs {
            p.add_term(e, c.into());
        }
        p
    }

    /// `t^n - 1`.
    pub fn t_pow_minus_one(n: u32) -> Self {
        Self::from_pairs([(i64::from(n), 1), (0, -1)])
    }

    /// `t^n + 1`.
    pub fn t_pow_plus_one(n: u32) -> Self {
        Self::from_pairs([(i64::from(n), 1), (0, 1)])
    }

    fn add_term(&mut self, exp: i64, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        let slot = self.terms.entry(exp).or_insert_with(BigInt::zero);
        *slot += coeff;
        if slot.is_zero() {
            self.terms.remove(&exp);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, exp: i64) -> BigInt {
        self.terms.get(&exp).cloned().unwrap_or_default()
    }

    /// Nonzero terms in ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> + '_ {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Highest exponent, `None` for the zero polynomial.
    pub fn max_exponent(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    pub fn min_exponent(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    /// Span `max - min` of the exponents; zero for constants and for zero.
    pub fn degree_span(&self) -> i64 {
        match (self.min_exponent(), self.max_exponent()) {
            (Some(lo), Some(hi)) => hi - lo,
            _ => 0,
        }
    }

    /// Multiplies by `t^k`.
    pub fn shift(&self, k: i64) -> Self {
        Self { terms: self.terms.iter().map(|(&e, c)| (e + k, c.clone())).collect() }
    }

    /// Shifts so the lowest exponent is zero. The zero polynomial is returned
    /// unchanged.
    pub fn normalized(&self) -> Self {
        match self.min_exponent() {
            Some(lo) => self.shift(-lo),
            None => self.clone(),
        }
    }

    /// Equality up to multiplication by `t^k`.
    pub fn eq_up_to_shift(&self, other: &Self) -> bool {
        self.normalized() == other.normalized()
    }

    /// Equality up to multiplication by a unit `±t^k`.
    pub fn eq_up_to_unit(&self, other: &Self) -> bool {
        let a = self.normalized();
        let b = other.normalized();
        a == b || a == -b
    }

    /// True when the coefficient sequence reads the same in both directions
    /// (`c_k = c_{deg-k}` after normalization).
    pub fn is_symmetric(&self) -> bool {
        let (Some(lo), Some(hi)) = (self.min_exponent(), self.max_exponent()) else {
            return true;
        };
        self.terms.iter().all(|(&e, c)| self.terms.get(&(lo + hi - e)) == Some(c))
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Evaluates at an integer point. Negative exponents are allowed only
    /// when the result stays integral (for instance at `x = ±1`).
    pub fn evaluate(&self, x: &BigInt) -> Result<BigInt, PolyError> {
        let lo = self.min_exponent().unwrap_or(0);
        if lo >= 0 {
            return Ok(self.horner(x, 0));
        }
        if x.is_zero() {
            return Err(PolyError::NonIntegralEvaluation);
        }
        // x^lo * (sum c_e x^(e-lo)); exact only when x^|lo| divides the sum.
        let numer = self.horner(x, lo);
        let denom = big_pow(x, lo.unsigned_abs());
        let (q, r) = numer.div_rem(&denom);
        if r.is_zero() {
            Ok(q)
        } else {
            Err(PolyError::NonIntegralEvaluation)
        }
    }

    /// `sum c_e x^(e - offset)`; every `e - offset` must be nonnegative.
    fn horner(&self, x: &BigInt, offset: i64) -> BigInt {
        let mut acc = BigInt::zero();
        let mut prev: Option<i64> = None;
        for (&e, c) in self.terms.iter().rev() {
            if let Some(p) = prev {
                acc *= big_pow(x, (p - e) as u64);
            }
            acc += c;
            prev = Some(e);
        }
        if let Some(p) = prev {
            acc *= big_pow(x, (p - offset) as u64);
        }
        acc
    }

    /// Value at `t = -1`; always defined.
    pub fn eval_at_minus_one(&self) -> BigInt {
        self.terms.iter().map(|(&e, c)| if e.rem_euclid(2) == 0 { c.clone() } else { -c }).sum()
    }

    /// Exact quotient `self / divisor` in `Z[t, t^-1]`.
    pub fn div_exact(&self, divisor: &Self) -> Result<Self, PolyError> {
        let (Some(div_lo), Some(div_hi)) = (divisor.min_exponent(), divisor.max_exponent()) else {
            return Err(PolyError::DivisionByZero);
        };
        let Some(num_lo) = self.min_exponent() else {
            return Ok(Self::zero());
        };
        let lead = &divisor.terms[&div_hi];
        let div_deg = div_hi - div_lo;

        // Long division on the shifted (nonnegative) representatives.
        let mut rem = self.shift(-num_lo);
        let mut quot = Self::zero();
        while let Some(top) = rem.max_exponent() {
            if top < div_deg {
                return Err(PolyError::InexactDivision);
            }
            let (c, r) = rem.terms[&top].div_rem(lead);
            if !r.is_zero() {
                return Err(PolyError::InexactDivision);
            }
            let k = top - div_deg;
            for (&e, dc) in &divisor.terms {
                rem.add_term(e - div_lo + k, -(dc * &c));
            }
            quot.add_term(k, c);
        }
        Ok(quot.shift(num_lo - div_lo))
    }

    /// JSON array of `[exponent, coefficient]` pairs in ascending exponent order.
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("polynomial serialization is infallible")
    }

    pub fn from_json(s: &str) -> Result<Self, PolyError> {
        serde_json::from_str(s).map_err(|e| PolyError::Parse(e.to_string()))
    }
}

fn big_pow(base: &BigInt, mut exp: u64) -> BigInt {
    let mut result = BigInt::one();
    let mut b = base.clone();
    while exp > 0 {
        if exp & 1 == 1 {
            result *= &b;
        }
        exp >>= 1;
        if exp > 0 {
            b = &b * &b;
        }
    }
    result
}

impl fmt::Display for IntLaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (&e, c)) in self.terms.iter().rev().enumerate() {
            let mag = c.abs();
            if i == 0 {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else if c.is_negative() {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            match e {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}")?;
                    }
                    if e == 1 {
                        f.write_str("t")?;
                    } else {
                        write!(f, "t^{e}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl Serialize for IntLaurentPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeSeq;
        let mut seq = serializer.serialize_seq(Some(self.terms.len()))?;
        for (&e, c) in &self.terms {
            let n =
                serde_json::Number::from_str(&c.to_string()).expect("integer literal is a valid JSON number");
            seq.serialize_element(&(e, n))?;
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for IntLaurentPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let pairs = Vec::<(i64, serde_json::Number)>::deserialize(deserializer)?;
        let mut out = Self::zero();
        let mut last: Option<i64> = None;
        for (e, n) in pairs {
            if last.is_some_and(|l| l >= e) {
                return Err(D::Error::custom("exponents must be strictly increasing"));
            }
            last = Some(e);
            let c = BigInt::from_str(&n.to_string())
                .map_err(|_| D::Error::custom(format!("coefficient {n} is not an integer")))?;
            if c.is_zero() {
                return Err(D::Error::custom("zero coefficients must be omitted"));
            }
            out.add_term(e, c);
        }
        Ok(out)
    }
}

impl Neg for IntLaurentPoly {
    type Output = IntLaurentPoly;
    fn neg(self) -> Self::Output {
        -&self
    }
}

impl Neg for &IntLaurentPoly {
    type Output = IntLaurentPoly;
    fn neg(self) -> Self::Output {
        IntLaurentPoly { terms: self.terms.iter().map(|(&e, c)| (e, -c)).collect() }
    }
}

impl Add for &IntLaurentPoly {
    type Output = IntLaurentPoly;
    fn add(self, rhs: &IntLaurentPoly) -> Self::Output {
        let mut out = self.clone();
        for (&e, c) in &rhs.terms {
            out.add_term(e, c.clone());
        }
        out
    }
}

impl Sub for &IntLaurentPoly {
    type Output = IntLaurentPoly;
    fn sub(self, rhs: &IntLaurentPoly) -> Self::Output {
        let mut out = self.clone();
        for (&e, c) in &rhs.terms {
            out.add_term(e, -c);
        }
        out
    }
}

impl Mul for &IntLaurentPoly {
    type Output = IntLaurentPoly;
    fn mul(self, rhs: &IntLaurentPoly) -> Self::Output {
        let mut out = IntLaurentPoly::zero();
        for (&ea, ca) in &self.terms {
            for (&eb, cb) in &rhs.terms {
                out.add_term(ea + eb, ca * cb);
            }
        }
        out
    }
}

macro_rules! forward_owned {
    ($($tr:ident :: $m:ident),*) => {$(
        impl $tr for IntLaurentPoly {
            type Output = IntLaurentPoly;
            fn $m(self, rhs: IntLaurentPoly) -> Self::Output {
                (&self).$m(&rhs)
            }
        }
    )*};
}
forward_owned!(Add::add, Sub::sub, Mul::mul);

impl std::iter::Product for IntLaurentPoly {
    fn product<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::one(), |acc, p| &acc * &p)
    }
}
