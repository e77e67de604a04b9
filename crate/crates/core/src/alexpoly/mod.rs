//! Alexander polynomials of `T(2, n)` and of the pretzel family `K_n`, and the
//! cyclotomic factorizations behind the primary decomposition.

mod poly;

pub use poly::IntLaurentPoly;

use num_bigint::BigInt;
use num_traits::Signed;

use crate::error::AlexanderError;

pub fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let n = u64::from(n);
    (2..).take_while(|d| d * d <= n).all(|d| n % d != 0)
}

/// Divisors of `n` in ascending order.
pub fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n % d == 0 {
            small.push(d);
            if d != n / d {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// The `n`-th cyclotomic polynomial `phi_n(t)`, computed as
/// `(t^n - 1) / prod_{d | n, d < n} phi_d(t)` by exact division.
pub fn cyclotomic(n: u32) -> Result<IntLaurentPoly, AlexanderError> {
    if n == 0 {
        return Err(AlexanderError::NonPositive(n));
    }
    let mut result = IntLaurentPoly::t_pow_minus_one(n);
    for d in divisors(u64::from(n)) {
        let d = d as u32;
        if d < n {
            result = result.div_exact(&cyclotomic(d)?)?;
        }
    }
    Ok(result)
}

/// `Delta_{T(2,n)}(t) = (t^n + 1) / (t + 1)` for odd `n`.
pub fn torus2_alexander(n: u32) -> Result<IntLaurentPoly, AlexanderError> {
    if n == 0 {
        return Err(AlexanderError::NonPositive(n));
    }
    if n % 2 == 0 {
        return Err(AlexanderError::Even(n));
    }
    Ok(IntLaurentPoly::t_pow_plus_one(n).div_exact(&IntLaurentPoly::from_coeffs(&[1, 1]))?)
}

/// `Delta_{K_n}(t) = ((t^n + 1) / (t + 1))^2`, the closed form obtained from
/// the skein reduction of `P(n, -n, n - 1)` to `T(2,n) # -T(2,n)`.
pub fn pretzel_alexander(n: u32) -> Result<IntLaurentPoly, AlexanderError> {
    Ok(torus2_alexander(n)?.pow(2))
}

/// `(phi_{2p}, phi_{2q}, phi_{2pq})` for distinct odd primes; their product is
/// `Delta_{T(2,pq)}`.
pub fn cyclotomic_split(
    p: u32,
    q: u32,
) -> Result<(IntLaurentPoly, IntLaurentPoly, IntLaurentPoly), AlexanderError> {
    for r in [p, q] {
        if r == 2 || !is_prime(r) {
            return Err(AlexanderError::NotOddPrime(r));
        }
    }
    if p == q {
        return Err(AlexanderError::EqualPrimes(p));
    }
    let two_pq = 2 * u64::from(p) * u64::from(q);
    let two_pq = u32::try_from(two_pq).map_err(|_| AlexanderError::TooLarge(two_pq))?;
    Ok((cyclotomic(2 * p)?, cyclotomic(2 * q)?, cyclotomic(two_pq)?))
}

/// `|H_1|` of the 2-fold branched cover: `|Delta(-1)|`.
pub fn homology_order(delta: &IntLaurentPoly) -> BigInt {
    delta.eval_at_minus_one().abs()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(c: &[i64]) -> IntLaurentPoly {
        IntLaurentPoly::from_coeffs(c)
    }

    #[test]
    fn small_cyclotomics() {
        assert_eq!(cyclotomic(1).unwrap(), p(&[-1, 1]));
        assert_eq!(cyclotomic(2).unwrap(), p(&[1, 1]));
        assert_eq!(cyclotomic(4).unwrap(), p(&[1, 0, 1]));
        // t^6 - 1 = (t - 1)(t + 1)(t^2 + t + 1)(t^2 - t + 1)
        assert_eq!(cyclotomic(6).unwrap(), p(&[1, -1, 1]));
        assert_eq!(cyclotomic(0), Err(AlexanderError::NonPositive(0)));
    }

    #[test]
    fn phi_105_has_a_coefficient_minus_two() {
        // smallest n with a coefficient outside {-1, 0, 1}
        let phi = cyclotomic(105).unwrap();
        assert_eq!(phi.coefficient(7), BigInt::from(-2));
        assert_eq!(phi.max_exponent(), Some(48));
    }

    #[test]
    fn torus_alexander() {
        assert_eq!(torus2_alexander(1).unwrap(), IntLaurentPoly::one());
        assert_eq!(torus2_alexander(3).unwrap(), p(&[1, -1, 1]));
        assert_eq!(torus2_alexander(5).unwrap(), p(&[1, -1, 1, -1, 1]));
        assert_eq!(torus2_alexander(4), Err(AlexanderError::Even(4)));
        assert_eq!(torus2_alexander(0), Err(AlexanderError::NonPositive(0)));
        assert_eq!(torus2_alexander(15).unwrap().eval_at_minus_one(), BigInt::from(15));
    }

    #[test]
    fn pretzel() {
        assert_eq!(pretzel_alexander(3).unwrap(), p(&[1, -2, 3, -2, 1]));
        assert_eq!(pretzel_alexander(1).unwrap(), IntLaurentPoly::one());
        assert!(pretzel_alexander(8).is_err());
        assert_eq!(homology_order(&pretzel_alexander(21).unwrap()), BigInt::from(441));
    }

    #[test]
    fn split_rejects_bad_primes() {
        assert_eq!(cyclotomic_split(3, 3).unwrap_err(), AlexanderError::EqualPrimes(3));
        assert_eq!(cyclotomic_split(2, 3).unwrap_err(), AlexanderError::NotOddPrime(2));
        assert_eq!(cyclotomic_split(3, 9).unwrap_err(), AlexanderError::NotOddPrime(9));
    }

    #[test]
    fn split_3_7() {
        let (a, b, c) = cyclotomic_split(3, 7).unwrap();
        assert_eq!(&(&a * &b) * &c, torus2_alexander(21).unwrap());
        assert_eq!(
            (a.eval_at_minus_one(), b.eval_at_minus_one(), c.eval_at_minus_one()),
            (BigInt::from(3), BigInt::from(7), BigInt::from(1))
        );
    }

    #[test]
    fn divisor_listing() {
        assert_eq!(divisors(1), vec![1]);
        assert_eq!(divisors(225), vec![1, 3, 5, 9, 15, 25, 45, 75, 225]);
        assert_eq!(divisors(16), vec![1, 2, 4, 8, 16]);
    }

    #[test]
    fn cyclotomic_product_identity() {
        for n in 1..=60u32 {
            let prod: IntLaurentPoly =
                divisors(u64::from(n)).into_iter().map(|d| cyclotomic(d as u32).unwrap()).product();
            assert_eq!(prod, IntLaurentPoly::t_pow_minus_one(n), "n = {n}");
        }
    }

    proptest! {
        #[test]
        fn pretzel_is_symmetric_with_square_determinant(k in 0u32..16) {
            let n = 2 * k + 1;
            let delta = pretzel_alexander(n).unwrap();
            prop_assert!(delta.is_symmetric());
            prop_assert_eq!(homology_order(&delta), BigInt::from(n * n));
        }
    }
}
