//! The brute-force verification engine: exact power-sum arithmetic, the
//! classical Schur and Q expansions, direct truncated application of the
//! vertex operator exponentials, inner products, and the tableau count for
//! the Littlewood-Richardson rule.
//!
//! Everything here is independent of the combinatorial modules it checks:
//! Schur functions come from Jacobi-Trudi determinants, Q-functions from the
//! operator exponentials themselves, and LR coefficients from tableau
//! enumeration.

mod bases;
mod ppoly;
mod project;
mod ssyt;
mod vertex;

pub use bases::{e_in_p, h_in_p, q_n_in_p, schur_in_p, z_constant};
pub use ppoly::{integer, rational, IndexMode, PPolynomial};
pub use project::{inner, q_expansion_from_p, schur_expansion_from_p, InnerProductMode};
pub use ssyt::ssyt_lr;
pub use vertex::{
    apply_b_direct, apply_y_direct, apply_y_direct_with, arbitrate_y_normalization, q_in_p,
    YNormalization, Y_NORMALIZATION,
};
