//! Special functions and small integer arithmetic.
//!
//! `digamma` and `log_gamma` shift the argument upward until `Re z >= 10`
//! and then sum the Bernoulli asymptotic series; eight terms are enough for
//! double precision there. Primes come from a sieve capped at
//! [`SIEVE_CAP`].

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::real::Real;

/// Largest limit accepted by the prime sieve.
pub const SIEVE_CAP: u64 = 10_000_000;

const SHIFT_TARGET: f64 = 10.0;

// B_{2k} for k = 1..=8.
const BERNOULLI: [f64; 8] = [
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
    7.0 / 6.0,
    -3617.0 / 510.0,
];

fn check_argument<T: Real>(z: Complex<T>, function: &'static str) -> Result<()> {
    if !z.re.is_finite() || !z.im.is_finite() {
        return Err(Error::Domain(format!("{function} of a non-finite argument")));
    }
    if z.im == T::zero() && z.re <= T::zero() && z.re == z.re.round() {
        return Err(Error::Pole {
            function,
            at: format!("{}", z.re),
        });
    }
    Ok(())
}

/// ψ(z) = Γ′(z)/Γ(z).
pub fn digamma<T: Real>(z: Complex<T>) -> Result<Complex<T>> {
    check_argument(z, "digamma")?;
    let one = Complex::new(T::one(), T::zero());
    let mut z = z;
    let mut acc = Complex::new(T::zero(), T::zero());
    while z.re < T::lit(SHIFT_TARGET) {
        acc = acc - one / z;
        z = z + one;
    }
    let inv = one / z;
    let inv2 = inv * inv;
    let mut power = inv2;
    let mut series = Complex::new(T::zero(), T::zero());
    for (k, b) in BERNOULLI.iter().enumerate() {
        let two_k = T::int(2 * (k as u64 + 1));
        series = series + power * (T::lit(*b) / two_k);
        power = power * inv2;
    }
    Ok(acc + z.ln() - inv * T::half() - series)
}

/// log Γ(z), continuous on the plane cut along the non-positive reals and
/// real on the positive axis.
pub fn log_gamma<T: Real>(z: Complex<T>) -> Result<Complex<T>> {
    check_argument(z, "log_gamma")?;
    let one = Complex::new(T::one(), T::zero());
    let mut z = z;
    let mut acc = Complex::new(T::zero(), T::zero());
    while z.re < T::lit(SHIFT_TARGET) {
        acc = acc - z.ln();
        z = z + one;
    }
    let inv = one / z;
    let inv2 = inv * inv;
    let mut power = inv;
    let mut series = Complex::new(T::zero(), T::zero());
    for (k, b) in BERNOULLI.iter().enumerate() {
        let two_k = 2 * (k as u64 + 1);
        series = series + power * (T::lit(*b) / T::int(two_k * (two_k - 1)));
        power = power * inv2;
    }
    let half_log_two_pi = (T::two() * T::PI()).ln() * T::half();
    Ok(acc + (z - one * T::half()) * z.ln() - z + half_log_two_pi + series)
}

/// Real digamma, for callers that stay on the positive axis.
pub fn digamma_real<T: Real>(x: T) -> Result<T> {
    digamma(Complex::new(x, T::zero())).map(|c| c.re)
}

fn jacobi(mut a: u128, mut n: u128) -> i8 {
    debug_assert!(n % 2 == 1);
    a %= n;
    let mut sign = 1i8;
    while a != 0 {
        while a.is_multiple_of(2) {
            a /= 2;
            if n % 8 == 3 || n % 8 == 5 {
                sign = -sign;
            }
        }
        std::mem::swap(&mut a, &mut n);
        if a % 4 == 3 && n % 4 == 3 {
            sign = -sign;
        }
        a %= n;
    }
    if n == 1 {
        sign
    } else {
        0
    }
}

/// Kronecker symbol (a | n) for n ≥ 1. Agrees with the Legendre symbol
/// when n is an odd prime.
pub fn kronecker_symbol(a: i128, n: u64) -> i8 {
    if n == 0 {
        return if a == 1 || a == -1 { 1 } else { 0 };
    }
    let mut n = n as u128;
    let mut sign = 1i8;
    let twos = n.trailing_zeros();
    if twos > 0 {
        if a % 2 == 0 {
            return 0;
        }
        let r = a.rem_euclid(8);
        if (r == 3 || r == 5) && twos % 2 == 1 {
            sign = -sign;
        }
        n >>= twos;
    }
    if n == 1 {
        return sign;
    }
    let a = a.rem_euclid(n as i128) as u128;
    sign * jacobi(a, n)
}

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// Least f ≥ 1 with a^f ≡ 1 (mod n).
pub fn multiplicative_order(a: i64, n: u64) -> Result<u64> {
    if n < 2 {
        return Err(Error::Domain(format!("modulus {n} must exceed 1")));
    }
    let r = a.rem_euclid(n as i64) as u64;
    if gcd(r, n) != 1 {
        return Err(Error::NotCoprime { a, n });
    }
    let mut x = r;
    let mut f = 1;
    while x != 1 {
        x = ((x as u128 * r as u128) % n as u128) as u64;
        f += 1;
    }
    Ok(f)
}

/// All primes up to `limit`, ascending.
pub fn primes_up_to(limit: u64) -> Result<Vec<u64>> {
    if limit > SIEVE_CAP {
        return Err(Error::SieveCap {
            limit,
            cap: SIEVE_CAP,
        });
    }
    if limit < 2 {
        return Ok(Vec::new());
    }
    let n = limit as usize;
    let mut composite = vec![false; n + 1];
    let mut i = 2;
    while i * i <= n {
        if !composite[i] {
            let mut j = i * i;
            while j <= n {
                composite[j] = true;
                j += i;
            }
        }
        i += 1;
    }
    Ok((2..=n)
        .filter(|&k| !composite[k])
        .map(|k| k as u64)
        .collect())
}

/// Primes in increasing order up to `cap`, sieving in growing blocks so
/// short scans stay cheap.
#[derive(Debug, Clone)]
pub struct PrimeStream {
    primes: Vec<u64>,
    next: usize,
    limit: u64,
    cap: u64,
}

impl PrimeStream {
    pub fn new(cap: u64) -> Result<Self> {
        if cap > SIEVE_CAP {
            return Err(Error::SieveCap {
                limit: cap,
                cap: SIEVE_CAP,
            });
        }
        let limit = cap.min(1 << 12);
        Ok(Self {
            primes: primes_up_to(limit)?,
            next: 0,
            limit,
            cap,
        })
    }

    pub fn cap(&self) -> u64 {
        self.cap
    }
}

impl Iterator for PrimeStream {
    type Item = u64;

    fn next(&mut self) -> Option<u64> {
        while self.next == self.primes.len() {
            if self.limit >= self.cap {
                return None;
            }
            self.limit = (self.limit * 8).min(self.cap);
            self.primes = primes_up_to(self.limit).expect("limit within the sieve cap");
        }
        self.next += 1;
        Some(self.primes[self.next - 1])
    }
}

/// Rendering rule for fixed-point decimals.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Rounding {
    /// Drop the digits past the last place, as in `0.2164...`.
    #[default]
    Truncate,
    HalfEven,
}

/// Formats `x` with `places` decimals. Truncation works on the shortest
/// decimal that reads back as `x`, so 0.141 stays 0.141 rather than
/// 0.1409 from its binary expansion.
pub fn format_fixed<T: Real>(x: T, places: usize, rounding: Rounding) -> String {
    if !x.is_finite() {
        return format!("{x}");
    }
    match rounding {
        Rounding::HalfEven => format!("{:.places$}", x.to_f64_lossy()),
        Rounding::Truncate => {
            let mut short = format!("{x}");
            if !short.contains('.') {
                short.push('.');
            }
            let dot = short.find('.').expect("point inserted above");
            let want = dot + 1 + places;
            while short.len() < want {
                short.push('0');
            }
            let cut = &short[..want];
            let cut = cut.strip_suffix('.').unwrap_or(cut);
            if cut.starts_with('-') && cut[1..].chars().all(|c| c == '0' || c == '.') {
                cut[1..].to_string()
            } else {
                cut.to_string()
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PrimePower {
    pub q: u64,
    pub p: u64,
    pub m: u32,
}

/// Prime powers q = p^m ≤ limit in increasing order of q.
pub fn prime_powers(limit: u64) -> Result<Vec<PrimePower>> {
    let mut out = Vec::new();
    for p in primes_up_to(limit)? {
        let mut q = p;
        let mut m = 1;
        loop {
            out.push(PrimePower { q, p, m });
            match q.checked_mul(p) {
                Some(next) if next <= limit => {
                    q = next;
                    m += 1;
                }
                _ => break,
            }
        }
    }
    out.sort();
    Ok(out)
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// Writes q as p^m when q is a prime power.
pub fn prime_power_decomposition(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let mut p = 0;
    let mut d = 2;
    while d * d <= q {
        if q.is_multiple_of(d) {
            p = d;
            break;
        }
        d += 1;
    }
    if p == 0 {
        return Some((q, 1));
    }
    let mut rest = q;
    let mut m = 0;
    while rest.is_multiple_of(p) {
        rest /= p;
        m += 1;
    }
    (rest == 1).then_some((p, m))
}

/// Exponent m with q = r^m, if any.
pub fn power_of(q: u64, r: u64) -> Option<u32> {
    if r < 2 || q < r {
        return None;
    }
    let mut x = q;
    let mut m = 0;
    while x.is_multiple_of(r) {
        x /= r;
        m += 1;
    }
    (x == 1).then_some(m)
}
