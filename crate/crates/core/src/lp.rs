//! The linear program behind the Brauer–Siegel and κ bounds, solved in
//! closed form.
//!
//! Variables are x_0, x_1 (real and complex places) and x_q (prime
//! powers). The objective is F(x) = Σ b_q x_q − b_0 x_0 − b_1 x_1 subject to
//!
//! * (i) every variable is non-negative,
//! * (ii) Σ_m m·x_{p^m} ≤ x_0 + 2x_1 for every prime p,
//! * (iii) Σ a_q x_q + a_0 x_0 + a_1 x_1 ≤ 1,
//! * (iv) variables with zero weight (or excluded by the field class) vanish.
//!
//! Maximizers only ever use prime variables: moving mass from x_{p^m} to
//! x_p keeps (ii) and (iii) and does not lower F.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::inequality::{archimedean_weights, place_weight, InequalityMode};
use crate::numerics::{format_fixed, prime_power_decomposition, PrimeStream, Rounding, SIEVE_CAP};
use crate::real::Real;
use crate::towers::{self, BoundsMode, ExampleBounds};

/// Largest prime examined by [`lp_max`] before giving up.
pub const LP_MAX_PRIME_CAP: u64 = 100_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LpMode {
    GrhBs,
    GrhKappa,
    UncBs,
    UncKappa,
}

impl LpMode {
    pub const ALL: [LpMode; 4] = [Self::GrhBs, Self::GrhKappa, Self::UncBs, Self::UncKappa];

    pub fn inequality(self) -> InequalityMode {
        match self {
            Self::GrhBs | Self::GrhKappa => InequalityMode::Grh,
            Self::UncBs | Self::UncKappa => InequalityMode::Unconditional1,
        }
    }

    pub fn is_kappa(self) -> bool {
        matches!(self, Self::GrhKappa | Self::UncKappa)
    }

    pub fn is_grh(self) -> bool {
        matches!(self, Self::GrhBs | Self::GrhKappa)
    }

    pub fn from_parts(grh: bool, kappa: bool) -> Self {
        match (grh, kappa) {
            (true, false) => Self::GrhBs,
            (true, true) => Self::GrhKappa,
            (false, false) => Self::UncBs,
            (false, true) => Self::UncKappa,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FieldClass {
    All,
    TotallyReal,
    TotallyComplex,
}

impl FieldClass {
    pub const ALL: [FieldClass; 3] = [Self::All, Self::TotallyReal, Self::TotallyComplex];

    pub fn label(self) -> &'static str {
        match self {
            Self::All => "all fields",
            Self::TotallyReal => "totally real",
            Self::TotallyComplex => "totally complex",
        }
    }

    pub fn tag(self) -> &'static str {
        match self {
            Self::All => "all",
            Self::TotallyReal => "real",
            Self::TotallyComplex => "complex",
        }
    }
}

/// Coefficients (a_0, a_1, a_q, b_0, b_1, b_q) of one instance.
#[derive(Debug, Clone, PartialEq)]
pub struct LpCoefficients<T: Real = f64> {
    pub mode: LpMode,
    pub class: FieldClass,
    pub a0: T,
    pub a1: T,
    pub b0: T,
    pub b1: T,
    /// Source of the weights a_0, a_1, a_q.
    pub inequality: InequalityMode,
    /// Restricts the problem to primes up to this bound.
    pub prime_limit: Option<u64>,
}

pub fn coefficients<T: Real>(mode: LpMode, class: FieldClass) -> LpCoefficients<T> {
    let (a0, a1) = archimedean_weights::<T>(mode.inequality()).expect("number-field mode");
    let (b0, b1) = if mode.is_kappa() {
        (T::zero(), T::zero())
    } else {
        (T::two().ln(), (T::two() * T::PI()).ln())
    };
    LpCoefficients {
        mode,
        class,
        a0,
        a1,
        b0,
        b1,
        inequality: mode.inequality(),
        prime_limit: None,
    }
}

impl<T: Real> LpCoefficients<T> {
    pub fn truncated(mut self, limit: u64) -> Self {
        self.prime_limit = Some(limit);
        self
    }

    /// Swaps in the weights of another number-field inequality.
    pub fn with_inequality(mut self, inequality: InequalityMode) -> Result<Self> {
        let (a0, a1) = archimedean_weights::<T>(inequality)
            .ok_or_else(|| Error::Kind("LP weights need a number-field inequality".into()))?;
        self.a0 = a0;
        self.a1 = a1;
        self.inequality = inequality;
        Ok(self)
    }

    pub fn x0_admissible(&self) -> bool {
        self.class != FieldClass::TotallyComplex && self.a0 != T::zero()
    }

    pub fn x1_admissible(&self) -> bool {
        self.class != FieldClass::TotallyReal && self.a1 != T::zero()
    }

    pub fn a(&self, q: u64) -> T {
        place_weight(self.inequality, q)
    }

    pub fn b(&self, q: u64) -> T {
        let qf = T::int(q);
        (qf / (qf - T::one())).ln()
    }

    /// Checks the structural hypotheses the closed forms rely on, over prime
    /// powers up to `q_limit`. Returns a description of each failure.
    pub fn check_conditions(&self, q_limit: u64) -> Result<Vec<String>> {
        let mut failures = Vec::new();
        let pps = crate::numerics::prime_powers(q_limit)?;
        let mut by_prime: BTreeMap<u64, Vec<(u32, u64)>> = BTreeMap::new();
        for pp in &pps {
            by_prime.entry(pp.p).or_default().push((pp.m, pp.q));
        }
        let tiny = T::lit(1e-12);
        for (p, powers) in &by_prime {
            for &(m, qm) in powers {
                for &(n, qn) in powers.iter().filter(|(n, _)| *n <= m) {
                    let lhs = T::int(m as u64) / T::int(n as u64);
                    let rhs = self.a(qm) / self.a(qn);
                    if lhs < rhs * (T::one() - tiny) {
                        failures.push(format!("(1) fails at p = {p}, m = {m}, n = {n}"));
                    }
                }
            }
        }
        let mut prev: Option<(u64, T)> = None;
        for pp in &pps {
            let ratio = self.b(pp.q) / self.a(pp.q);
            if let Some((q0, r0)) = prev {
                if ratio > r0 * (T::one() + tiny) {
                    failures.push(format!("(2) fails between q = {q0} and q = {}", pp.q));
                }
            }
            prev = Some((pp.q, ratio));
        }
        if self.a0 != T::zero() && self.a1 != T::zero() {
            if self.a1 < self.a0 || self.b1 < self.b0 {
                failures.push("(3) needs a1 >= a0 and b1 >= b0".into());
            }
            if self.b0 * self.a1 > self.b1 * self.a0 * (T::one() + tiny) {
                failures.push("(3) needs b0/a0 <= b1/a1".into());
            }
        }
        let (sa, sb) = pps.iter().fold((T::zero(), T::zero()), |(sa, sb), pp| {
            (sa + self.a(pp.q), sb + self.b(pp.q))
        });
        // Divergence shows up as partial sums well past any constant of the problem.
        let threshold = T::two();
        if sa < threshold || sb < threshold {
            failures.push(format!("(4) partial sums up to {q_limit} stay below {threshold}"));
        }
        Ok(failures)
    }

    fn stream_cap(&self, default: u64) -> u64 {
        self.prime_limit.map_or(default, |l| l.min(default))
    }
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct Witness<T: Real = f64> {
    pub x0: T,
    pub x1: T,
    pub x: BTreeMap<u64, T>,
}

/// Where a greedy fill or scan stopped; `alpha` is the used fraction of the
/// last variable's cap.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Boundary<T: Real = f64> {
    pub q: u64,
    pub alpha: T,
}

#[derive(Debug, Clone, PartialEq)]
pub struct LpSolution<T: Real = f64> {
    /// F at the witness.
    pub value: T,
    /// Contribution of the variables the solver chose (excludes fixed
    /// archimedean and pre-committed terms).
    pub gain: T,
    pub witness: Witness<T>,
    pub boundary: Option<Boundary<T>>,
}

/// F(x) for an arbitrary assignment.
pub fn objective<T: Real>(c: &LpCoefficients<T>, w: &Witness<T>) -> T {
    w.x
        .iter()
        .fold(T::zero(), |acc, (&q, &v)| acc + c.b(q) * v)
        - c.b0 * w.x0
        - c.b1 * w.x1
}

/// Checks constraints (i)–(iv) with absolute slack `tol`.
pub fn check_witness<T: Real>(c: &LpCoefficients<T>, w: &Witness<T>, tol: T) -> std::result::Result<(), String> {
    if w.x0 < -tol || w.x1 < -tol || w.x.values().any(|&v| v < -tol) {
        return Err("(i) negative variable".into());
    }
    let cap = w.x0 + T::two() * w.x1;
    let mut sums: BTreeMap<u64, T> = BTreeMap::new();
    for (&q, &v) in &w.x {
        let (p, m) = prime_power_decomposition(q).ok_or(format!("{q} is not a prime power"))?;
        *sums.entry(p).or_insert_with(T::zero) = sums.get(&p).copied().unwrap_or_else(T::zero)
            + T::int(m as u64) * v;
    }
    if let Some((p, s)) = sums.iter().find(|(_, &s)| s > cap + tol) {
        return Err(format!("(ii) fails at p = {p}: {s} > {cap}"));
    }
    let used = c.a0 * w.x0
        + c.a1 * w.x1
        + w.x.iter().fold(T::zero(), |acc, (&q, &v)| acc + c.a(q) * v);
    if used > T::one() + tol {
        return Err(format!("(iii) fails: {used} > 1"));
    }
    if (!c.x0_admissible() && w.x0 > tol) || (!c.x1_admissible() && w.x1 > tol) {
        return Err("(iv) inadmissible archimedean variable is nonzero".into());
    }
    if let Some(limit) = c.prime_limit {
        if w.x.iter().any(|(&q, &v)| q > limit && v > tol) {
            return Err("(iv) variable outside the truncated instance".into());
        }
    }
    Ok(())
}

/// Minimum of F: all x_q = 0 and one archimedean variable saturating (iii).
pub fn lp_min<T: Real>(c: &LpCoefficients<T>) -> Result<LpSolution<T>> {
    let mut w = Witness::default();
    let value = if c.x1_admissible() {
        w.x1 = T::one() / c.a1;
        -c.b1 / c.a1
    } else if c.x0_admissible() {
        w.x0 = T::one() / c.a0;
        -c.b0 / c.a0
    } else {
        return Err(Error::Infeasible("no admissible archimedean variable".into()));
    };
    Ok(LpSolution {
        value,
        gain: T::zero(),
        witness: w,
        boundary: None,
    })
}

/// Extra per-place information for [`lp_max_constrained`].
#[derive(Debug, Clone, PartialEq)]
pub struct PlaceConstraints<T: Real = f64> {
    /// Pre-committed values x_q (any prime power); they use budget and
    /// count in F but are not optimized.
    pub fixed: BTreeMap<u64, T>,
    /// Caps on x_p replacing x_0 + 2x_1.
    pub caps: BTreeMap<u64, T>,
    /// Primes forced to zero.
    pub excluded: BTreeSet<u64>,
    /// Primes below this bound without an explicit cap are forced to zero.
    pub free_from: u64,
}

impl<T: Real> Default for PlaceConstraints<T> {
    fn default() -> Self {
        Self {
            fixed: BTreeMap::new(),
            caps: BTreeMap::new(),
            excluded: BTreeSet::new(),
            free_from: 2,
        }
    }
}

/// Maximum of F with x_0, x_1 fixed and the primes in `excluded` zeroed.
pub fn lp_max_fixed<T: Real>(
    c: &LpCoefficients<T>,
    x0: T,
    x1: T,
    excluded: &BTreeSet<u64>,
) -> Result<LpSolution<T>> {
    let places = PlaceConstraints {
        excluded: excluded.clone(),
        ..PlaceConstraints::default()
    };
    lp_max_constrained(c, x0, x1, &places)
}

/// [`lp_max_with`] driven by a [`PlaceConstraints`] table.
pub fn lp_max_constrained<T: Real>(
    c: &LpCoefficients<T>,
    x0: T,
    x1: T,
    places: &PlaceConstraints<T>,
) -> Result<LpSolution<T>> {
    let default_cap = x0 + T::two() * x1;
    let last = (default_cap == T::zero()).then(|| places.caps.keys().next_back().copied().unwrap_or(0));
    lp_max_with(c, x0, x1, &places.fixed, last, |p| {
        if places.excluded.contains(&p) {
            None
        } else if let Some(&cap) = places.caps.get(&p) {
            Some(cap)
        } else if p < places.free_from {
            None
        } else {
            Some(default_cap)
        }
    })
}

/// Greedy fill: primes in increasing order take their cap (`cap_of(p)`,
/// `None` meaning excluded) until (iii) binds; the boundary prime takes the
/// fraction that exhausts it. Optimal because b_p/a_p decreases with p.
/// Primes present in `fixed` are skipped. With `last_prime` set, the fill
/// may stop there without binding.
pub fn lp_max_with<T: Real, F: Fn(u64) -> Option<T>>(
    c: &LpCoefficients<T>,
    x0: T,
    x1: T,
    fixed: &BTreeMap<u64, T>,
    last_prime: Option<u64>,
    cap_of: F,
) -> Result<LpSolution<T>> {
    for (name, v) in [("x0", x0), ("x1", x1)] {
        if !v.is_finite() || v < T::zero() {
            return Err(Error::Invalid(format!("{name} = {v} must be finite and >= 0")));
        }
    }
    if (x0 > T::zero() && !c.x0_admissible()) || (x1 > T::zero() && !c.x1_admissible()) {
        return Err(Error::Infeasible(format!(
            "field class {} forbids the given archimedean values",
            c.class.tag()
        )));
    }
    let mut w = Witness {
        x0,
        x1,
        x: fixed.clone(),
    };
    let mut used = c.a0 * x0 + c.a1 * x1;
    for (&q, &v) in fixed {
        used = used + c.a(q) * v;
    }
    if used > T::one() + T::lit(1e-12) {
        return Err(Error::Infeasible(format!("fixed part already uses {used} > 1 of the budget")));
    }
    let base = objective(c, &w);
    let mut remaining = T::one() - used;
    let mut gain = T::zero();
    let mut boundary = None;
    if remaining > T::zero() {
        let cap_limit = c.stream_cap(last_prime.unwrap_or(SIEVE_CAP).max(2));
        for p in PrimeStream::new(cap_limit)? {
            if fixed.contains_key(&p) {
                continue;
            }
            let Some(cap) = cap_of(p).filter(|&cap| cap > T::zero()) else {
                continue;
            };
            let need = c.a(p) * cap;
            if need < remaining {
                remaining = remaining - need;
                gain = gain + c.b(p) * cap;
                w.x.insert(p, cap);
            } else {
                let alpha = remaining / need;
                gain = gain + c.b(p) * cap * alpha;
                w.x.insert(p, cap * alpha);
                boundary = Some(Boundary { q: p, alpha });
                break;
            }
        }
        if boundary.is_none() && last_prime.is_none() && c.prime_limit.is_none() {
            return Err(Error::ScanCap(cap_limit));
        }
    }
    Ok(LpSolution {
        value: base + gain,
        gain,
        witness: w,
        boundary,
    })
}

#[derive(Debug, Clone, Copy)]
struct ScanResult<T: Real> {
    p0: u64,
    value: T,
    weight_sum: T,
    larger_than_zero: bool,
}

fn scan_choice<T: Real>(c: &LpCoefficients<T>, a: T, b: T, cap: u64) -> Result<Option<ScanResult<T>>> {
    let mut sa = T::zero();
    let mut sb = T::zero();
    let mut best: Option<ScanResult<T>> = None;
    let mut turned = false;
    for p in PrimeStream::new(cap)? {
        let (ap, bp) = (c.a(p), c.b(p));
        sa = sa + ap;
        sb = sb + bp;
        let value = (sb - b) / (sa + a);
        let ceiling = bp / ap;
        if value >= T::zero() && value <= ceiling {
            if let Some(prev) = best {
                if value < prev.value {
                    return Err(Error::ScanCap(cap));
                }
            }
            best = Some(ScanResult {
                p0: p,
                value,
                weight_sum: sa,
                larger_than_zero: value > T::zero(),
            });
        } else if best.is_some() && value > ceiling {
            turned = true;
            break;
        }
    }
    if !turned && c.prime_limit.is_none() {
        return Err(Error::ScanCap(cap));
    }
    Ok(best)
}

/// Maximum of F over all admissible x: compare filling primes up to p0
/// weighted by x_0 alone against x_1 alone, where p0 is the last prime at
/// which the running ratio C_{p'} stays within [0, b_{p'}/a_{p'}].
pub fn lp_max<T: Real>(c: &LpCoefficients<T>) -> Result<LpSolution<T>> {
    if !c.x0_admissible() && !c.x1_admissible() {
        return Err(Error::Infeasible("no admissible archimedean variable".into()));
    }
    let cap = c.stream_cap(LP_MAX_PRIME_CAP);
    let mut best: Option<(ScanResult<T>, bool)> = None;
    if c.x0_admissible() {
        if let Some(r) = scan_choice(c, c.a0, c.b0, cap)? {
            best = Some((r, false));
        }
    }
    if c.x1_admissible() {
        if let Some(r) = scan_choice(c, c.a1 * T::half(), c.b1 * T::half(), cap)? {
            if best.is_none_or(|(b, _)| r.value > b.value) {
                best = Some((r, true));
            }
        }
    }
    let Some((r, complex)) = best.filter(|(r, _)| r.larger_than_zero || r.value == T::zero()) else {
        return Ok(LpSolution {
            value: T::zero(),
            gain: T::zero(),
            witness: Witness::default(),
            boundary: None,
        });
    };
    let (a, _) = if complex {
        (c.a1 * T::half(), c.b1 * T::half())
    } else {
        (c.a0, c.b0)
    };
    let level = T::one() / (r.weight_sum + a);
    let mut w = Witness::default();
    if complex {
        w.x1 = level * T::half();
    } else {
        w.x0 = level;
    }
    for p in PrimeStream::new(r.p0)? {
        w.x.insert(p, level);
    }
    let value = objective(c, &w);
    Ok(LpSolution {
        value,
        gain: value,
        witness: w,
        boundary: Some(Boundary {
            q: r.p0,
            alpha: T::one(),
        }),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Target {
    Bs,
    Kappa,
}

impl Target {
    pub fn tag(self) -> &'static str {
        match self {
            Self::Bs => "bs",
            Self::Kappa => "kappa",
        }
    }
}

/// Global lower and upper bounds for one (regime, class, target).
pub fn global_bounds<T: Real>(grh: bool, class: FieldClass, target: Target) -> Result<(T, T)> {
    let c = coefficients::<T>(LpMode::from_parts(grh, target == Target::Kappa), class);
    let min = lp_min(&c)?.value;
    let max = lp_max(&c)?.value;
    Ok(match target {
        Target::Bs => (T::one() + min, T::one() + max),
        Target::Kappa => (min, max),
    })
}

#[derive(Debug, Clone, PartialEq)]
pub struct BoundsRow<T: Real = f64> {
    pub grh: bool,
    pub class: FieldClass,
    pub target: Target,
    pub lower_bound: T,
    pub lower_example: Option<(T, T)>,
    pub upper_example: Option<(T, T)>,
    pub upper_bound: T,
}

#[derive(Debug, Clone, PartialEq)]
pub struct BoundsTable<T: Real = f64> {
    pub rows: Vec<BoundsRow<T>>,
}

/// Catalogue examples quoted next to each bound: fields whose towers give
/// small and large Brauer–Siegel ratios respectively.
pub fn table_examples(class: FieldClass) -> (&'static str, &'static str) {
    match class {
        FieldClass::All => ("martinet20", "tr-quad15"),
        FieldClass::TotallyReal => ("martinet4r", "tr-quad15"),
        FieldClass::TotallyComplex => ("martinet20", "tc-quad15"),
    }
}

fn interval<T: Real>(b: &ExampleBounds<T>, target: Target) -> (T, T) {
    match target {
        Target::Bs => (b.bs_lower, b.bs_upper),
        Target::Kappa => (b.kappa_lower, b.kappa_upper),
    }
}

/// Both summary tables: BS rows then κ rows, GRH before unconditional.
pub fn global_bounds_table<T: Real>() -> Result<BoundsTable<T>> {
    let mut rows = Vec::new();
    for target in [Target::Bs, Target::Kappa] {
        for grh in [true, false] {
            let mode = if grh { BoundsMode::Grh } else { BoundsMode::Unconditional };
            for class in FieldClass::ALL {
                let (lower_bound, upper_bound) = global_bounds::<T>(grh, class, target)?;
                let (lo_id, hi_id) = table_examples(class);
                let lower_example = match target {
                    Target::Bs => Some(interval(&towers::example_bounds::<T>(lo_id, mode)?, target)),
                    Target::Kappa => None,
                };
                let upper_example = Some(interval(&towers::example_bounds::<T>(hi_id, mode)?, target));
                rows.push(BoundsRow {
                    grh,
                    class,
                    target,
                    lower_bound,
                    lower_example,
                    upper_example,
                    upper_bound,
                });
            }
        }
    }
    Ok(BoundsTable { rows })
}

impl<T: Real> BoundsTable<T> {
    pub fn find(&self, grh: bool, class: FieldClass, target: Target) -> Option<&BoundsRow<T>> {
        self.rows
            .iter()
            .find(|r| r.grh == grh && r.class == class && r.target == target)
    }

    /// Aligned text rendering of both tables.
    pub fn render_text(&self, places: usize, rounding: Rounding) -> String {
        let num = |x: T| format_fixed(x, places, rounding);
        let pair = |p: Option<(T, T)>| match p {
            Some((a, b)) => format!("{}–{}", num(a), num(b)),
            None => "-".to_string(),
        };
        let mut out = String::new();
        for target in [Target::Bs, Target::Kappa] {
            let title = match target {
                Target::Bs => "Brauer–Siegel ratio BS",
                Target::Kappa => "κ-invariant",
            };
            // κ is always attainable at 0, so its table has no lower columns.
            let skip = if target == Target::Kappa { 2..4 } else { 0..0 };
            let keep = |cells: [String; 6]| -> Vec<String> {
                cells
                    .into_iter()
                    .enumerate()
                    .filter(|(i, _)| !skip.contains(i))
                    .map(|(_, c)| c)
                    .collect()
            };
            let mut lines = vec![keep([
                "".into(),
                "".into(),
                "lower bound".into(),
                "lower example".into(),
                "upper example".into(),
                "upper bound".into(),
            ])];
            for r in self.rows.iter().filter(|r| r.target == target) {
                lines.push(keep([
                    if r.grh { "GRH" } else { "unconditional" }.into(),
                    r.class.label().into(),
                    num(r.lower_bound),
                    pair(r.lower_example),
                    pair(r.upper_example),
                    num(r.upper_bound),
                ]));
            }
            let widths: Vec<usize> = (0..lines[0].len())
                .map(|i| lines.iter().map(|l| l[i].chars().count()).max().unwrap_or(0))
                .collect();
            let _ = writeln!(out, "{title}");
            for l in &lines {
                let cells: Vec<String> = l
                    .iter()
                    .zip(&widths)
                    .map(|(cell, &w)| format!("{cell}{}", " ".repeat(w - cell.chars().count())))
                    .collect();
                let _ = writeln!(out, "{}", cells.join(" | ").trim_end());
            }
            out.push('\n');
        }
        out
    }

    /// CSV with columns mode, class, target, lower_bound, lower_example,
    /// upper_example, upper_bound; intervals as `lo..hi`.
    pub fn to_csv(&self) -> String {
        let pair = |p: Option<(T, T)>| p.map_or(String::new(), |(a, b)| format!("{a}..{b}"));
        let mut out =
            String::from("mode,class,target,lower_bound,lower_example,upper_example,upper_bound\n");
        for r in &self.rows {
            let _ = writeln!(
                out,
                "{},{},{},{},{},{},{}",
                if r.grh { "grh" } else { "unc" },
                r.class.tag(),
                r.target.tag(),
                r.lower_bound,
                pair(r.lower_example),
                pair(r.upper_example),
                r.upper_bound
            );
        }
        out
    }
}

/// Function-field analogue: one family with a_m = m/(r^{m/2} − 1) and
/// b_m = log_r(r^m/(r^m − 1)), budget 1. Returns 1 + the maximum and the
/// optimal (m, φ_{r^m}).
pub fn ff_lp_max<T: Real>(r: u64, m_max: u32) -> (T, u32, T) {
    let rf = T::int(r);
    let lr = rf.ln();
    let mut best = (T::one(), 0, T::zero());
    for m in 1..=m_max {
        let rm = rf.powi(m as i32);
        let a = T::int(m as u64) / (rm.sqrt() - T::one());
        let b = (rm / (rm - T::one())).ln() / lr;
        let x = T::one() / a;
        if T::one() + b * x > best.0 {
            best = (T::one() + b * x, m, x);
        }
    }
    best
}
