//! Basic-inequality left-hand sides and the deficiency.
//!
//! Each number-field form is `a_R φ_R + a_C φ_C + Σ_q a_q φ_q ≤ 1` for a
//! mode-specific family of weights; those weights are exposed here because
//! the linear-programming bounds reuse them.

use crate::error::{Error, Result};
use crate::numerics::prime_power_decomposition;
use crate::phi::PhiSystem;
use crate::real::Real;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum InequalityMode {
    /// Explicit-formula inequality under GRH.
    Grh,
    /// Unconditional inequality with weights 2 log q Σ_m 1/(q^m + 1).
    Unconditional1,
    /// Stark's unconditional inequality, weights log q/(q − 1).
    Unconditional2,
    /// Function fields, weights m/(r^{m/2} − 1).
    FunctionField,
}

impl InequalityMode {
    pub fn tag(self) -> &'static str {
        match self {
            Self::Grh => "grh",
            Self::Unconditional1 => "unc1",
            Self::Unconditional2 => "unc2",
            Self::FunctionField => "function-field",
        }
    }
}

/// Weights (a_R, a_C) of φ_R and φ_C for a number-field mode.
pub fn archimedean_weights<T: Real>(mode: InequalityMode) -> Option<(T, T)> {
    let g = T::euler_gamma();
    let pi = T::PI();
    let half = T::half();
    let two = T::two();
    match mode {
        InequalityMode::Grh => Some((
            (two * (two * pi).sqrt()).ln() + pi / T::lit(4.0) + g * half,
            (T::lit(8.0) * pi).ln() + g,
        )),
        InequalityMode::Unconditional1 => Some((
            (two * pi.sqrt()).ln() + half + g * half,
            (T::lit(4.0) * pi).ln() + g,
        )),
        InequalityMode::Unconditional2 => Some((
            (two * pi.sqrt()).ln() + g * half,
            (two * pi).ln() + g,
        )),
        InequalityMode::FunctionField => None,
    }
}

const GEOMETRIC_CUTOFF: f64 = 1e-15;

/// Σ_{m≥1} 1/(q^m + 1), summed until a term drops below 1e-15 and closed
/// with the geometric estimate of the remainder.
pub fn reciprocal_power_sum<T: Real>(q: T) -> T {
    let one = T::one();
    let ratio = one / q;
    let mut power = q;
    let mut sum = T::zero();
    loop {
        let term = one / (power + one);
        if term < T::lit(GEOMETRIC_CUTOFF) {
            return sum + term / (one - ratio);
        }
        sum = sum + term;
        power = power * q;
    }
}

/// Weight a_q of the prime power `q` in a number-field mode.
///
/// # Panics
/// On [`InequalityMode::FunctionField`], whose weights depend on r.
pub fn place_weight<T: Real>(mode: InequalityMode, q: u64) -> T {
    let qf = T::int(q);
    let lq = qf.ln();
    match mode {
        InequalityMode::Grh => lq / (qf.sqrt() - T::one()),
        InequalityMode::Unconditional1 => T::two() * lq * reciprocal_power_sum(qf),
        InequalityMode::Unconditional2 => lq / (qf - T::one()),
        InequalityMode::FunctionField => {
            panic!("function-field weights depend on r; use ff_place_weight")
        }
    }
}

/// Weight m/(r^{m/2} − 1) of φ_{r^m}.
pub fn ff_place_weight<T: Real>(r: u64, m: u32) -> T {
    let rm = T::int(r).powi(m as i32);
    T::int(m as u64) / (rm.sqrt() - T::one())
}

/// Left-hand side of the basic inequality in `mode`.
pub fn lhs<T: Real>(phi: &PhiSystem<T>, mode: InequalityMode) -> Result<T> {
    match mode {
        InequalityMode::FunctionField => {
            let r = phi.require_function_field("the function-field inequality")?;
            Ok(phi
                .ff_entries()
                .fold(T::zero(), |acc, (m, _, v)| acc + v * ff_place_weight::<T>(r, m)))
        }
        _ => {
            if !phi.is_number_field() {
                return Err(Error::Kind(format!(
                    "mode {} needs a number-field φ",
                    mode.tag()
                )));
            }
            let (ar, ac) = archimedean_weights::<T>(mode).expect("number-field mode");
            let finite = phi.entries().fold(T::zero(), |acc, (q, v)| {
                debug_assert!(prime_power_decomposition(q).is_some());
                acc + v * place_weight::<T>(mode, q)
            });
            Ok(ar * phi.phi_r() + ac * phi.phi_c() + finite)
        }
    }
}

/// δ = 1 − (GRH or function-field left-hand side). Negative values flag
/// vectors no family can realize under GRH.
pub fn deficiency<T: Real>(phi: &PhiSystem<T>) -> T {
    let mode = if phi.is_number_field() {
        InequalityMode::Grh
    } else {
        InequalityMode::FunctionField
    };
    T::one() - lhs(phi, mode).expect("mode matches kind")
}
