//! Exact computation of Heegaard Floer correction terms for 2-fold branched
//! covers of the knots `K_n`, and the obstructions to splitting their
//! concordance classes along a factorization of the Alexander polynomial.
//!
//! The pipeline is:
//!
//! 1. [`alexpoly`]: `Delta_{K_n} = ((t^n + 1)/(t + 1))^2`, its cyclotomic
//!    factors and `|H_1(M(K_n))| = n^2`.
//! 2. [`staircase`]: grading-0 generators of the staircase complexes and
//!    their tensor products.
//! 3. [`dinv`]: `delta_m` and the correction terms `d(M, m)` for every label.
//! 4. [`obstruct`]: second-difference and metabolizer tests on the table.
//!
//! All arithmetic is exact.

pub mod alexpoly;
pub mod dinv;
pub mod error;
pub mod family;
pub mod obstruct;
pub mod reproduce;
pub mod staircase;

pub use alexpoly::{
    cyclotomic, cyclotomic_split, homology_order, pretzel_alexander, torus2_alexander, IntLaurentPoly,
};
pub use dinv::{
    d_surgery, d_surgery_integral, d_table, delta, label_of_group_element, lens_term, psi, Convention,
    DTable, Rational, SpincLabel,
};
pub use error::{Error, Result};
pub use family::{surgery_complex, SurgeryComplex};
pub use obstruct::{
    linking_form, metabolizer_obstruction, slice_obstructed, split_obstruction, Metabolizer, SplitGrid,
};
pub use reproduce::{reproduce_paper, Reproduction};
pub use staircase::{
    consecutive_torus_staircase, pareto_min, tensor, torus_14_15, unit_staircase, whitehead_sum_22,
    BifiltGen, GeneratorSet, Staircase,
};
