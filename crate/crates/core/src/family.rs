//! The surgery complexes for the branched double covers `M(K_n)`.
//!
//! `M(K_n)` is `n^2`-surgery on `T(n-1, n) # k D(T(2,3))` with
//! `k = (3n - 1) / 2`, for `n = 3 mod 4`. Only `n = 15` is tabulated; larger
//! `n` use the extrapolated staircases and are reported as unvalidated.

use crate::error::Error;
use crate::staircase::{
    consecutive_torus_staircase, tensor, torus_14_15, unit_staircase, whitehead_sum_22, GeneratorSet,
};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SurgeryComplex {
    pub n: u32,
    /// Surgery coefficient `N = n^2 = |H_1|`.
    pub modulus: u64,
    pub generators: GeneratorSet,
    pub source: String,
    /// `false` for complexes built from extrapolated staircases.
    pub validated: bool,
}

pub fn surgery_complex(n: u32) -> Result<SurgeryComplex, Error> {
    let modulus = u64::from(n) * u64::from(n);
    if n == 1 {
        return Ok(SurgeryComplex {
            n,
            modulus,
            generators: GeneratorSet::from(&unit_staircase(0)),
            source: String::from("trivial"),
            validated: true,
        });
    }
    if n == 15 {
        return Ok(SurgeryComplex {
            n,
            modulus,
            generators: tensor(&torus_14_15(), &whitehead_sum_22())?,
            source: String::from("T(14,15) # 22 D(T(2,3))"),
            validated: true,
        });
    }
    if n < 15 || n % 4 != 3 {
        return Err(Error::InvalidArgument(format!(
            "no built-in complex for n = {n}: use n = 15, n = 1, n >= 15 with n = 3 mod 4, \
             or supply --staircase-file"
        )));
    }
    let copies = (3 * n - 1) / 2;
    let generators = tensor(&consecutive_torus_staircase(n)?, &unit_staircase(copies))?;
    Ok(SurgeryComplex {
        n,
        modulus,
        generators,
        source: format!("T({},{}) # {} D(T(2,3)) [extrapolated]", n - 1, n, copies),
        validated: false,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::staircase::GeneratorSet;

    #[test]
    fn paper_instance() {
        let c = surgery_complex(15).unwrap();
        assert_eq!(c.modulus, 225);
        assert_eq!(c.generators.pair_count(), 345);
        assert!(c.validated);
    }

    #[test]
    fn extrapolated_formula_agrees_at_fifteen() {
        let c = surgery_complex(15).unwrap();
        let extrapolated =
            tensor(&consecutive_torus_staircase(15).unwrap(), &unit_staircase((3 * 15 - 1) / 2)).unwrap();
        assert_eq!(c.generators, extrapolated);
    }

    #[test]
    fn larger_members() {
        let c = surgery_complex(19).unwrap();
        assert_eq!(c.modulus, 361);
        assert_eq!(c.generators.pair_count(), 19 * 29);
        assert!(!c.validated);
        assert!(c.source.contains("extrapolated"));
    }

    #[test]
    fn trivial_and_rejected() {
        let c = surgery_complex(1).unwrap();
        assert_eq!(c.generators, GeneratorSet::from(&unit_staircase(0)));
        for n in [3, 7, 17, 21] {
            assert!(matches!(surgery_complex(n), Err(Error::InvalidArgument(_))), "n = {n}");
        }
    }
}
