//! Function-field asymptotics: growth of the number of effective divisors,
//! the threshold μ₁ and the global Brauer–Siegel bounds. Logarithms are to
//! base r.

use crate::error::{Error, Result};
use crate::numerics::prime_power_decomposition;
use crate::phi::PhiSystem;
use crate::real::Real;
use crate::zeta::kappa;

const MAX_BISECTIONS: usize = 400;
const ROOT_SCAN_STEPS: usize = 4000;

/// μ₀ = Σ_m m φ_{r^m}/(r^m − 1), which equals 1 − ξ_φ(1).
pub fn mu_zero<T: Real>(phi: &PhiSystem<T>) -> Result<T> {
    let r = phi.require_function_field("mu_zero")?;
    Ok(weighted_sum(phi, T::int(r)))
}

fn weighted_sum<T: Real>(phi: &PhiSystem<T>, lambda: T) -> T {
    phi.ff_entries().fold(T::zero(), |acc, (m, _, v)| {
        acc + T::int(m as u64) * v / (lambda.powi(m as i32) - T::one())
    })
}

fn check_mu<T: Real>(mu: T) -> Result<()> {
    if !mu.is_finite() || mu <= T::zero() {
        return Err(Error::Domain(format!("mu = {mu} must be finite and positive")));
    }
    Ok(())
}

/// Bisection on a sign change of `f` over [lo, hi], where `f(lo) > 0 > f(hi)`
/// or the reverse. Stops at |f| < `tol` or when the interval no longer shrinks.
fn bisect<T: Real>(mut lo: T, mut hi: T, tol: T, f: impl Fn(T) -> T) -> T {
    let lo_sign = f(lo) > T::zero();
    for _ in 0..MAX_BISECTIONS {
        let mid = (lo + hi) * T::half();
        if mid <= lo || mid >= hi {
            break;
        }
        let v = f(mid);
        if v.abs() < tol {
            return mid;
        }
        if (v > T::zero()) == lo_sign {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    (lo + hi) * T::half()
}

/// Λ(μ): r for μ ≥ μ₀, otherwise the root Λ > r of Σ m φ_{r^m}/(Λ^m − 1) = μ.
pub fn lambda_of_mu<T: Real>(phi: &PhiSystem<T>, mu: T) -> Result<T> {
    check_mu(mu)?;
    let r = T::int(phi.require_function_field("lambda_of_mu")?);
    if mu >= weighted_sum(phi, r) {
        return Ok(r);
    }
    let f = |lambda: T| weighted_sum(phi, lambda) - mu;
    let mut hi = r * T::two();
    while f(hi) > T::zero() {
        hi = hi * T::two();
        if !hi.is_finite() {
            return Err(Error::NoRoot(format!("Λ(μ) for mu = {mu}")));
        }
    }
    Ok(bisect(r, hi, T::lit(1e-13), f))
}

/// lim D_{[μg]}/g = μ log_r Λ + Σ_m φ_{r^m} log_r(Λ^m/(Λ^m − 1)).
pub fn divisor_growth<T: Real>(phi: &PhiSystem<T>, mu: T) -> Result<T> {
    let lambda = lambda_of_mu(phi, mu)?;
    Ok(growth_at(phi, mu, lambda))
}

fn growth_at<T: Real>(phi: &PhiSystem<T>, mu: T, lambda: T) -> T {
    let lr = T::int(phi.constant_field().expect("function field")).ln();
    let sum = phi.ff_entries().fold(T::zero(), |acc, (m, _, v)| {
        let lm = lambda.powi(m as i32);
        acc + v * (lm / (lm - T::one())).ln()
    });
    (mu * lambda.ln() + sum) / lr
}

/// Left side minus right side of the equation defining μ₁.
pub fn mu_one_equation<T: Real>(phi: &PhiSystem<T>, mu: T) -> Result<T> {
    let r = phi.require_function_field("mu_one")?;
    let lr = T::int(r).ln();
    let half = mu * T::half();
    Ok(half + (mu * half.ln() + (T::two() - mu) * (T::one() - half).ln()) / lr + T::two() * kappa(phi))
}

/// μ₁: the largest root in (0, 2) of
/// μ/2 + μ log_r(μ/2) + (2 − μ) log_r(1 − μ/2) = −2 log_r ζ_φ(1).
///
/// The left side tends to 1 at μ = 2, so the root is bracketed by scanning
/// down from 2 for the first sign change. For φ = 0 the other root is the
/// endpoint 0.
pub fn mu_one<T: Real>(phi: &PhiSystem<T>) -> Result<T> {
    let h = |mu: T| mu_one_equation(phi, mu).expect("function field");
    phi.require_function_field("mu_one")?;
    let step = T::two() / T::int(ROOT_SCAN_STEPS as u64);
    let mut upper = T::two() - step;
    let mut upper_val = h(upper);
    for k in (1..ROOT_SCAN_STEPS - 1).rev() {
        let lower = step * T::int(k as u64);
        let lower_val = h(lower);
        if lower_val == T::zero() {
            return Ok(lower);
        }
        if (lower_val > T::zero()) != (upper_val > T::zero()) {
            return Ok(bisect(lower, upper, T::lit(1e-13), h));
        }
        upper = lower;
        upper_val = lower_val;
    }
    Err(Error::NoRoot("mu_one: no sign change in (0, 2)".into()))
}

/// Lower and upper limits of BS over all families with constant field F_r:
/// (1, 1 + (√r − 1) log_r(r/(r − 1))).
pub fn ff_global_bounds<T: Real>(r: u64) -> Result<(T, T)> {
    if r < 2 || prime_power_decomposition(r).is_none() {
        return Err(Error::Domain(format!("r = {r} is not a prime power")));
    }
    let rf = T::int(r);
    Ok((T::one(), T::one() + (rf.sqrt() - T::one()) * (rf / (rf - T::one())).ln() / rf.ln()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::zeta::{bs_ratio, xi};
    use approx::assert_abs_diff_eq;
    use num_complex::Complex;
    use proptest::prelude::*;

    fn ff(r: u64, entries: &[(u64, f64)]) -> PhiSystem {
        PhiSystem::function_field(r, entries.iter().copied()).unwrap()
    }

    #[test]
    fn mu_zero_values() {
        assert_eq!(mu_zero(&ff(2, &[])).unwrap(), 0.0);
        assert_abs_diff_eq!(mu_zero(&ff(4, &[(4, 1.0)])).unwrap(), 1.0 / 3.0, epsilon = 1e-15);
        let phi = ff(3, &[(3, 0.4), (9, 0.2), (27, 0.05)]);
        let x = xi(&phi, Complex::new(1.0, 0.0)).unwrap().re;
        assert_abs_diff_eq!(mu_zero(&phi).unwrap(), 1.0 - x, epsilon = 1e-12);
        assert!(matches!(mu_zero(&PhiSystem::<f64>::zero_number_field()), Err(Error::Kind(_))));
    }

    #[test]
    fn lambda_branches() {
        let phi = ff(4, &[(4, 1.0)]);
        assert_eq!(lambda_of_mu(&phi, 0.5).unwrap(), 4.0);
        assert_abs_diff_eq!(lambda_of_mu(&phi, 0.2).unwrap(), 6.0, epsilon = 1e-10);
        assert_eq!(lambda_of_mu(&ff(2, &[]), 0.7).unwrap(), 2.0);
        assert!(lambda_of_mu(&phi, 0.0).is_err());
        assert!(lambda_of_mu(&phi, f64::NAN).is_err());
    }

    #[test]
    fn lambda_residual() {
        let phi = ff(3, &[(3, 0.5), (9, 0.25), (81, 0.1)]);
        let mu0 = mu_zero(&phi).unwrap();
        for frac in [0.01, 0.2, 0.5, 0.9, 0.999] {
            let mu = mu0 * frac;
            let l = lambda_of_mu(&phi, mu).unwrap();
            assert!(l > 3.0);
            assert_abs_diff_eq!(weighted_sum(&phi, l), mu, epsilon = 1e-10);
        }
    }

    #[test]
    fn growth_values() {
        assert_abs_diff_eq!(divisor_growth(&ff(5, &[]), 0.37).unwrap(), 0.37, epsilon = 1e-15);
        let g = divisor_growth(&ff(4, &[(4, 1.0)]), 0.2).unwrap();
        let expected = 0.2 * 6f64.ln() / 4f64.ln() + (6.0f64 / 5.0).ln() / 4f64.ln();
        assert_abs_diff_eq!(g, expected, epsilon = 1e-10);
        assert_abs_diff_eq!(g, 0.3900, epsilon = 1e-4);
    }

    #[test]
    fn growth_continuous_at_mu_zero() {
        let phi = ff(2, &[(2, 0.3), (4, 0.1)]);
        let mu0 = mu_zero(&phi).unwrap();
        let left = growth_at(&phi, mu0, lambda_of_mu(&phi, mu0 * (1.0 - 1e-12)).unwrap());
        let right = divisor_growth(&phi, mu0).unwrap();
        assert_abs_diff_eq!(left, right, epsilon = 1e-9);
    }

    #[test]
    fn mu_one_trivial_family() {
        let phi = ff(2, &[]);
        let m = mu_one(&phi).unwrap();
        assert!(m > 1.8 && m < 1.85, "{m}");
        assert_abs_diff_eq!(m, 1.810_3, epsilon = 1e-4);
        assert!(mu_one_equation(&phi, m).unwrap().abs() < 1e-10);
        assert_eq!(kappa(&phi), 0.0);
        assert!(mu_one_equation(&phi, 1.0).unwrap() < 0.0);
        assert!(mu_one_equation(&phi, 1.99).unwrap() > 0.0);
    }

    #[test]
    fn mu_one_moves_down_as_zeta_grows() {
        let values: Vec<f64> = [0.0, 0.5, 1.0]
            .iter()
            .map(|&v| mu_one(&ff(4, &[(4, v)])).unwrap())
            .collect();
        assert!(values[0] > values[1] && values[1] > values[2], "{values:?}");
        assert_abs_diff_eq!(values[0], 1.5459, epsilon = 1e-4);
        assert_abs_diff_eq!(values[2], 1.1411, epsilon = 1e-4);
    }

    #[test]
    fn mu_one_can_fail() {
        // φ_2 = 1 exceeds the rational-point bound; no root remains.
        assert!(matches!(mu_one(&ff(2, &[(2, 1.0)])), Err(Error::NoRoot(_))));
    }

    #[test]
    fn global_bounds() {
        let (lo, hi) = ff_global_bounds::<f64>(2).unwrap();
        assert_eq!(lo, 1.0);
        assert_abs_diff_eq!(hi, 2f64.sqrt(), epsilon = 1e-15);
        assert_abs_diff_eq!(ff_global_bounds::<f64>(4).unwrap().1, 1.20752, epsilon = 1e-5);
        for r in [2u64, 3, 4, 9, 25] {
            let maximal = ff(r, &[(r, (r as f64).sqrt() - 1.0)]);
            assert_abs_diff_eq!(ff_global_bounds::<f64>(r).unwrap().1, bs_ratio(&maximal), epsilon = 1e-14);
        }
        assert!(ff_global_bounds::<f64>(6).is_err());
        assert!(ff_global_bounds::<f64>(1).is_err());
    }

    fn arb_ff() -> impl Strategy<Value = PhiSystem> {
        (prop::sample::select(vec![2u64, 3, 4, 5, 7, 9]), prop::collection::vec(0.0f64..0.3, 1..4)).prop_map(
            |(r, vals)| {
                let entries: Vec<(u64, f64)> = vals
                    .iter()
                    .enumerate()
                    .map(|(i, &v)| (r.pow(i as u32 + 1), v))
                    .collect();
                PhiSystem::function_field(r, entries).unwrap()
            },
        )
    }

    proptest! {
        #[test]
        fn growth_is_monotone(phi in arb_ff()) {
            let mu0 = mu_zero(&phi).unwrap();
            let mut prev = f64::NEG_INFINITY;
            for k in 1..40 {
                let mu = mu0 * 2.0 * k as f64 / 40.0 + 1e-6;
                let g = divisor_growth(&phi, mu).unwrap();
                prop_assert!(g >= prev - 1e-12);
                prev = g;
            }
        }

        #[test]
        fn linear_above_mu_zero(phi in arb_ff(), extra in 0.0f64..3.0) {
            let mu0 = mu_zero(&phi).unwrap().max(1e-9);
            let a = divisor_growth(&phi, mu0).unwrap();
            let b = divisor_growth(&phi, mu0 + extra).unwrap();
            prop_assert!((b - a - extra).abs() < 1e-12);
        }

        #[test]
        fn mu_one_in_range(phi in arb_ff()) {
            if let Ok(m) = mu_one(&phi) {
                prop_assert!(m > 0.0 && m < 2.0);
                prop_assert!(mu_one_equation(&phi, m).unwrap().abs() < 1e-10);
            }
        }
    }
}
