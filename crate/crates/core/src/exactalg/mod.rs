//! Exact arithmetic: rationals, the group ring of the rationals, cyclotomic fields,
//! dense matrices over either, and Cherednik parameters.

mod cyclotomic;
mod group_ring;
mod matrix;
mod param;
mod rational;

pub use cyclotomic::{cyclotomic_polynomial, cyclotomic_sum_check, Cyclotomic, CyclotomicField};
pub use group_ring::{charged_residue, residue, GroupRingElement};
pub use matrix::{Matrix, Scalar};
pub use param::{BRegime, CherednikParameter, CoxeterGroup};
pub use rational::{parse_rational, rat, ratio, Rational};
