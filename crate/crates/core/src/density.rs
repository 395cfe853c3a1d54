//! Limit densities of zeta zeros given by the explicit formula, and the
//! Serre measure.
//!
//! The number-field density presumes GRH; there is no unconditional
//! counterpart here. For function fields `t` is an angle and is reduced
//! into (−π, π].

use std::fmt::Write as _;

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::numerics::digamma;
use crate::phi::{format_phi, FieldKind, PhiSystem};
use crate::real::Real;

/// Largest |t| accepted for number-field profiles.
pub const NUMBER_FIELD_T_MAX: f64 = 50.0;

const CURVATURE_STEP: f64 = 1e-3;

/// Sampled density M_φ on a grid.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityProfile<T: Real = f64> {
    pub kind: FieldKind,
    pub t_values: Vec<T>,
    pub m_values: Vec<T>,
    pub phi_digest: String,
}

/// h_q(t) = (√q cos(t log q) − 1)/(q + 1 − 2√q cos(t log q)).
pub fn kernel_number_field<T: Real>(q: u64, t: T) -> T {
    let qf = T::int(q);
    let sq = qf.sqrt();
    let c = (t * qf.ln()).cos();
    (sq * c - T::one()) / (qf + T::one() - T::two() * sq * c)
}

/// h_m(t) = (r^{m/2} cos mt − 1)/(r^m + 1 − 2 r^{m/2} cos mt).
pub fn kernel_function_field<T: Real>(r: u64, m: u32, t: T) -> T {
    let rm = T::int(r).powi(m as i32);
    let sq = rm.sqrt();
    let c = (T::int(m as u64) * t).cos();
    (sq * c - T::one()) / (rm + T::one() - T::two() * sq * c)
}

/// Reduces an angle into (−π, π].
pub fn reduce_angle<T: Real>(t: T) -> T {
    let two_pi = T::two() * T::PI();
    let mut x = t - two_pi * (t / two_pi).round();
    if x <= -T::PI() {
        x = x + two_pi;
    }
    x
}

/// M_φ(t).
pub fn density_at<T: Real>(phi: &PhiSystem<T>, t: T) -> T {
    if let Some(r) = phi.constant_field() {
        let t = reduce_angle(t);
        return phi.ff_entries().fold(T::one(), |acc, (m, _, v)| {
            acc - T::int(m as u64) * v * kernel_function_field(r, m, t)
        });
    }
    let pi = T::PI();
    let (pr, pc) = (phi.phi_r(), phi.phi_c());
    let mut value = T::one() - pr * T::half() * pi.ln() - pc * (T::two() * pi).ln();
    if pr != T::zero() {
        let z = Complex::new(T::lit(0.25), t * T::half());
        value = value + pr * T::half() * digamma(z).expect("no pole off the real axis").re;
    }
    if pc != T::zero() {
        let z = Complex::new(T::half(), t);
        value = value + pc * digamma(z).expect("no pole off the real axis").re;
    }
    for (q, v) in phi.entries() {
        value = value - v * kernel_number_field(q, t) * T::int(q).ln();
    }
    value
}

/// FNV-1a digest of the φ-file rendering.
pub fn phi_digest<T: Real>(phi: &PhiSystem<T>) -> String {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for b in format_phi(phi).bytes() {
        h ^= b as u64;
        h = h.wrapping_mul(0x0100_0000_01b3);
    }
    format!("{h:016x}")
}

/// `n` evenly spaced samples of M_φ on [t_min, t_max].
pub fn density_profile<T: Real>(
    phi: &PhiSystem<T>,
    t_min: T,
    t_max: T,
    n: usize,
) -> Result<DensityProfile<T>> {
    if !(t_min < t_max) || !t_min.is_finite() || !t_max.is_finite() {
        return Err(Error::Domain(format!("need t_min < t_max, got [{t_min}, {t_max}]")));
    }
    if n < 2 {
        return Err(Error::Domain(format!("need at least 2 samples, got {n}")));
    }
    match phi.kind() {
        FieldKind::NumberField => {
            let cap = T::lit(NUMBER_FIELD_T_MAX);
            if t_min < -cap || t_max > cap {
                return Err(Error::Domain(format!("number-field profiles need |t| <= {cap}")));
            }
        }
        FieldKind::FunctionField { .. } => {
            if t_min <= -T::PI() || t_max > T::PI() {
                return Err(Error::Domain("function-field profiles need t in (-pi, pi]".into()));
            }
        }
    }
    let step = (t_max - t_min) / T::int(n as u64 - 1);
    let t_values: Vec<T> = (0..n)
        .map(|i| {
            if i == n - 1 {
                t_max
            } else {
                t_min + step * T::int(i as u64)
            }
        })
        .collect();
    let m_values = t_values.iter().map(|&t| density_at(phi, t)).collect();
    Ok(DensityProfile {
        kind: phi.kind(),
        t_values,
        m_values,
        phi_digest: phi_digest(phi),
    })
}

impl<T: Real> DensityProfile<T> {
    /// CSV with header `t,M`, 17 significant digits, LF line endings.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("t,M\n");
        for (t, m) in self.t_values.iter().zip(&self.m_values) {
            let _ = writeln!(out, "{t:.16e},{m:.16e}");
        }
        out
    }

    pub fn min_value(&self) -> T {
        self.m_values.iter().copied().fold(T::infinity(), T::min)
    }
}

/// Reads back the `t,M` columns written by [`DensityProfile::to_csv`].
pub fn parse_profile_csv<T: Real>(text: &str) -> Result<(Vec<T>, Vec<T>)> {
    let mut lines = text.split('\n');
    if lines.next() != Some("t,M") {
        return Err(Error::Parse {
            line: 1,
            message: "expected header `t,M`".into(),
        });
    }
    let mut ts = Vec::new();
    let mut ms = Vec::new();
    for (i, line) in lines.enumerate() {
        if line.is_empty() {
            continue;
        }
        let bad = || Error::Parse {
            line: i + 2,
            message: format!("bad row `{line}`"),
        };
        let (t, m) = line.split_once(',').ok_or_else(bad)?;
        ts.push(t.parse::<T>().map_err(|_| bad())?);
        ms.push(m.parse::<T>().map_err(|_| bad())?);
    }
    Ok((ts, ms))
}

/// M″_φ(0) by the five-point centered difference with step 1e-3.
pub fn density_curvature_at_zero<T: Real>(phi: &PhiSystem<T>) -> T {
    let h = T::lit(CURVATURE_STEP);
    let f = |t: T| density_at(phi, t);
    let two = T::two();
    (-f(two * h) + T::lit(16.0) * f(h) - T::lit(30.0) * f(T::zero()) + T::lit(16.0) * f(-h)
        - f(-two * h))
        / (T::lit(12.0) * h * h)
}

/// Density of the Serre measure μ_p on [−2, 2].
pub fn serre_measure_density<T: Real>(p: u64, x: T) -> Result<T> {
    if !(x.abs() <= T::two()) {
        return Err(Error::Domain(format!("Serre measure lives on [-2, 2], got {x}")));
    }
    let pf = T::int(p);
    let one = T::one();
    let root = (one - x * x / T::lit(4.0)).max(T::zero()).sqrt();
    Ok((pf + one) / T::PI() * pf * root / ((pf + one) * (pf + one) - pf * x * x))
}
