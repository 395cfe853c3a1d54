//! Asymptotic invariants of families of global fields.
//!
//! The library works with finitely supported φ-vectors (the limits of
//! `N_q / g` along a tower) and derives from them limit zeta functions,
//! basic-inequality deficiencies, zero densities, Brauer–Siegel ratios and
//! the linear-programming bounds on those ratios. A small catalogue of
//! explicit number fields with infinite class field towers is bundled.
//!
//! Every numeric routine is generic over [`Real`], implemented for `f32`
//! and `f64`. The aliases below fix the scalar to `f64`, which is what the
//! reference values are checked against.

// `!(x > 0)` style guards are deliberate: they also reject NaN.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod density;
pub mod error;
pub mod ffgrowth;
pub mod inequality;
pub mod lp;
pub mod numerics;
pub mod phi;
pub mod real;
pub mod towers;
pub mod zeta;

pub use error::{Error, Result};
pub use real::Real;

/// Complex argument of zeta-type functions.
pub type ComplexValue<T = f64> = num_complex::Complex<T>;

pub type Phi = phi::PhiSystem<f64>;
pub type Phi32 = phi::PhiSystem<f32>;
pub type Coefficients = lp::LpCoefficients<f64>;
pub type Solution = lp::LpSolution<f64>;
pub type Profile = density::DensityProfile<f64>;
pub type Example = towers::NumberFieldExample<f64>;
pub type Complex64 = ComplexValue<f64>;
pub type Complex32 = ComplexValue<f32>;
