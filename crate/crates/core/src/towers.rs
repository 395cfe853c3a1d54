//! Class field tower criteria and a catalogue of explicit fields with
//! infinite unramified towers, with bounds on the Brauer–Siegel ratio of
//! each tower.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::inequality::{deficiency, lhs, place_weight, InequalityMode};
use crate::lp::{coefficients, lp_max_with, Boundary, FieldClass, LpMode};
use crate::numerics::{is_prime, kronecker_symbol, multiplicative_order, primes_up_to};
use crate::phi::phi_from_unramified_tower;
use crate::real::Real;
use crate::zeta::bs_ratio;

const CATALOGUE: &str = include_str!("../data/catalogue.txt");

/// How the infiniteness of a catalogued tower is known.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TowerSource {
    /// Proved elsewhere; taken as given.
    Asserted,
    /// Follows from [`CriterionVariant::QuadraticComplex`] or
    /// [`CriterionVariant::QuadraticReal`] with data recomputed from the
    /// discriminant.
    QuadraticCriterion,
    /// Claimed in the literature but not certified by any criterion here.
    Claimed,
}

impl TowerSource {
    pub fn tag(self) -> &'static str {
        match self {
            Self::Asserted => "asserted",
            Self::QuadraticCriterion => "quadratic-criterion",
            Self::Claimed => "claimed",
        }
    }

    fn from_tag(tag: &str) -> Option<Self> {
        [Self::Asserted, Self::QuadraticCriterion, Self::Claimed]
            .into_iter()
            .find(|s| s.tag() == tag)
    }
}

/// Ramification index, residue degree and number of places above `p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct DecompositionRow {
    pub p: u64,
    pub e: u64,
    pub f: u64,
    pub n: u64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct NumberFieldExample<T: Real = f64> {
    pub id: String,
    pub degree: u64,
    pub r1: u64,
    pub r2: u64,
    /// |D| as (prime, exponent).
    pub disc_factors: Vec<(u64, u32)>,
    /// Places of norm q splitting completely in the tower, with multiplicity.
    pub split_places: Vec<(u64, u64)>,
    pub rows: Vec<DecompositionRow>,
    /// Primes below this bound that are missing from `rows` have no place of
    /// degree one. Primes from here on are only bounded by (ii).
    pub unlisted_from: u64,
    /// d of Q(√d) for quadratic fields; decomposition is then computed.
    pub quadratic: Option<i128>,
    pub unconditional: InequalityMode,
    pub source: TowerSource,
    pub stored_delta: Option<T>,
}

impl<T: Real> NumberFieldExample<T> {
    /// g = log √|D|.
    pub fn genus(&self) -> T {
        self.disc_factors.iter().fold(T::zero(), |acc, &(p, e)| {
            acc + T::int(e as u64) * T::int(p).ln()
        }) * T::half()
    }

    pub fn has_tower_data(&self) -> bool {
        !self.disc_factors.is_empty()
    }

    pub fn class(&self) -> FieldClass {
        match (self.r1, self.r2) {
            (_, 0) => FieldClass::TotallyReal,
            (0, _) => FieldClass::TotallyComplex,
            _ => FieldClass::All,
        }
    }

    /// Checks the signature, the decomposition rows and, for quadratic
    /// fields, the discriminant and the split places.
    pub fn check(&self) -> Result<()> {
        let bad = |m: String| Err(Error::MalformedExample(format!("{}: {m}", self.id)));
        if self.r1 + 2 * self.r2 != self.degree {
            return bad(format!("r1 + 2 r2 = {} but n = {}", self.r1 + 2 * self.r2, self.degree));
        }
        for row in &self.rows {
            if row.e * row.f * row.n != self.degree {
                return bad(format!("row {} has e f n = {}", row.p, row.e * row.f * row.n));
            }
        }
        if self.has_tower_data() && !(self.genus() > T::zero()) {
            return bad("genus is not positive".into());
        }
        if let Some(d) = self.quadratic {
            if self.degree != 2 || (d > 0) != (self.r1 == 2) {
                return bad(format!("signature does not match d = {d}"));
            }
            let expected = factor_abs(fundamental_discriminant(d)?);
            if expected != self.disc_factors {
                return bad(format!("disc does not match d = {d}"));
            }
            for &(q, count) in &self.split_places {
                let ok = match root_prime(q) {
                    Some((p, 1)) => {
                        quadratic_decomposition(d, p)? == Splitting::Split && count <= 2
                            || quadratic_decomposition(d, p)? == Splitting::Ramified && count == 1
                    }
                    Some((p, 2)) => quadratic_decomposition(d, p)? == Splitting::Inert && count == 1,
                    _ => false,
                };
                if !ok {
                    return bad(format!("{count} places of norm {q} are impossible"));
                }
            }
        }
        Ok(())
    }

    /// Upper bound on φ_p imposed by the decomposition of p; `None` when p
    /// has no place of degree one. Split places are handled by the caller.
    fn prime_cap(&self, p: u64, g: T) -> Option<T> {
        if let Some(d) = self.quadratic {
            return match quadratic_decomposition(d, p).ok()? {
                Splitting::Split => Some(T::two() / g),
                Splitting::Ramified => Some(T::one() / g),
                Splitting::Inert => None,
            };
        }
        if let Some(row) = self.rows.iter().find(|r| r.p == p) {
            return (row.f == 1).then(|| T::int(row.n) / g);
        }
        (p >= self.unlisted_from).then(|| T::int(self.degree) / g)
    }
}

fn root_prime(q: u64) -> Option<(u64, u32)> {
    crate::numerics::prime_power_decomposition(q)
}

fn factor_abs(d: i128) -> Vec<(u64, u32)> {
    let mut n = d.unsigned_abs();
    let mut out = Vec::new();
    let mut p = 2u128;
    while p * p <= n {
        let mut e = 0;
        while n.is_multiple_of(p) {
            n /= p;
            e += 1;
        }
        if e > 0 {
            out.push((p as u64, e));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n as u64, 1));
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Splitting {
    Split,
    Inert,
    Ramified,
}

/// Discriminant of Q(√d): d if d ≡ 1 (mod 4), else 4d.
pub fn fundamental_discriminant(d: i128) -> Result<i128> {
    if d == 0 || d == 1 {
        return Err(Error::Domain(format!("d = {d} does not define a quadratic field")));
    }
    Ok(if d.rem_euclid(4) == 1 { d } else { 4 * d })
}

/// Decomposition of the prime p in Q(√d), d squarefree.
pub fn quadratic_decomposition(d: i128, p: u64) -> Result<Splitting> {
    if !is_prime(p) {
        return Err(Error::Domain(format!("{p} is not prime")));
    }
    let disc = fundamental_discriminant(d)?;
    if disc.rem_euclid(p as i128) == 0 {
        return Ok(Splitting::Ramified);
    }
    Ok(match kronecker_symbol(disc, p) {
        1 => Splitting::Split,
        _ => Splitting::Inert,
    })
}

/// Decomposition of the small primes in Q(cos 2π/11, √2, √−23).
///
/// The field is the compositum of the real quintic subfield of Q(ζ_11) and
/// the biquadratic field Q(√2, √−23); the degrees are coprime, so e and f
/// multiply.
pub fn martinet_table() -> Vec<DecompositionRow> {
    let quintic = |v: u64| -> (u64, u64) {
        if v == 11 {
            return (5, 1);
        }
        let order = multiplicative_order(v as i64, 11).expect("v is prime to 11");
        (1, if order.is_multiple_of(2) { order / 2 } else { order })
    };
    let biquadratic = |v: u64| -> (u64, u64) {
        let a = quadratic_decomposition(2, v).expect("prime");
        let b = quadratic_decomposition(-23, v).expect("prime");
        match (a, b) {
            (Splitting::Ramified, other) | (other, Splitting::Ramified) => {
                (2, if other == Splitting::Split { 1 } else { 2 })
            }
            (Splitting::Split, Splitting::Split) => (1, 1),
            _ => (1, 2),
        }
    };
    [2, 3, 5, 7, 11, 13, 17, 19, 23]
        .into_iter()
        .map(|p| {
            let (e0, f0) = quintic(p);
            let (eb, fb) = biquadratic(p);
            let (e, f) = (e0 * eb, f0 * fb);
            DecompositionRow { p, e, f, n: 20 / (e * f) }
        })
        .collect()
}

/// Data for the tower criteria. Unused slots are ignored by a variant.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct CriterionInput {
    pub ell: u64,
    /// Ramified primes (or d(Cl) for Golod–Shafarevich).
    pub r: u64,
    pub r1: u64,
    pub r2: u64,
    /// Real places of the base that become complex.
    pub rho: u64,
    /// 1 if the base contains the ℓ-th roots of unity, else 0.
    pub delta: u64,
    /// Places required to split (or d(E) for Golod–Shafarevich).
    pub s: u64,
    pub t0: u64,
    pub sigma: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CriterionVariant {
    /// Infinite unramified ℓ-tower of a cyclic degree-ℓ extension.
    Unramified,
    /// As `Unramified`, with a set of places splitting completely.
    SplitSet,
    QuadraticComplex,
    QuadraticReal,
    GolodShafarevich,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CriterionOutcome {
    pub holds: bool,
    pub lhs: f64,
    pub rhs: f64,
}

pub fn tower_criterion(input: &CriterionInput, variant: CriterionVariant) -> Result<CriterionOutcome> {
    let i = input;
    if i.rho > i.r1 {
        return Err(Error::Invalid(format!("rho = {} exceeds r1 = {}", i.rho, i.r1)));
    }
    let f = |n: u64| n as f64;
    let base = f(i.ell) * (f(i.r1) + f(i.r2) - f(i.rho) / 2.0) + f(i.delta);
    let head = f(i.r1) + f(i.r2) + f(i.delta) + 2.0 - f(i.rho);
    let rhs = match variant {
        CriterionVariant::Unramified => head + 2.0 * base.sqrt(),
        CriterionVariant::SplitSet => {
            f(i.s) - f(i.t0) + head + 2.0 * (base + f(i.s)).sqrt()
        }
        CriterionVariant::QuadraticComplex => 3.0 + f(i.sigma) + 2.0 * (2.0 + f(i.s)).sqrt(),
        CriterionVariant::QuadraticReal => 4.0 + f(i.sigma) + 2.0 * (3.0 + f(i.s)).sqrt(),
        CriterionVariant::GolodShafarevich => 2.0 + 2.0 * (f(i.s) + 1.0).sqrt(),
    };
    let lhs = f(i.r);
    Ok(CriterionOutcome {
        holds: lhs >= rhs,
        lhs,
        rhs,
    })
}

/// ℓ-rank of the S-units in the degree-ℓ extension:
/// ℓ(r1 + r2 − ρ/2) + δ − 1 + s.
pub fn unit_s_rank(ell: u64, r1: u64, r2: u64, rho: u64, delta: u64, s: u64) -> Result<i64> {
    if (ell * rho) % 2 == 1 {
        return Err(Error::NonInteger(format!("ℓρ/2 with ℓ = {ell}, ρ = {rho}")));
    }
    Ok((ell * (r1 + r2)) as i64 - (ell * rho / 2) as i64 + delta as i64 - 1 + s as i64)
}

/// Criterion data of a quadratic example, recomputed from d: r counts the
/// primes dividing the discriminant, P is the set of primes under the split
/// places, σ the split primes in P and s = |P| + σ.
pub fn quadratic_criterion<T: Real>(
    example: &NumberFieldExample<T>,
) -> Result<Option<(CriterionInput, CriterionVariant)>> {
    let Some(d) = example.quadratic else {
        return Ok(None);
    };
    let disc = fundamental_discriminant(d)?;
    let mut under: Vec<u64> = example
        .split_places
        .iter()
        .filter_map(|&(q, _)| root_prime(q).map(|x| x.0))
        .collect();
    under.dedup();
    let t = under.len() as u64;
    let mut sigma = 0;
    for &p in &under {
        if quadratic_decomposition(d, p)? == Splitting::Split {
            sigma += 1;
        }
    }
    let input = CriterionInput {
        ell: 2,
        r: factor_abs(disc).len() as u64,
        r1: 1,
        r2: 0,
        rho: u64::from(d < 0),
        delta: 1,
        s: t + sigma,
        t0: t,
        sigma,
    };
    let variant = if d < 0 {
        CriterionVariant::QuadraticComplex
    } else {
        CriterionVariant::QuadraticReal
    };
    Ok(Some((input, variant)))
}

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

fn parse_num<N: std::str::FromStr>(line: usize, key: &str, v: &str) -> Result<N> {
    v.parse()
        .map_err(|_| parse_err(line, format!("bad value `{v}` for {key}")))
}

fn parse_block<T: Real>(lines: &[(usize, &str, &str)]) -> Result<NumberFieldExample<T>> {
    let first = lines[0].0;
    let mut map: BTreeMap<&str, (usize, &str)> = BTreeMap::new();
    for &(n, k, v) in lines {
        if map.insert(k, (n, v)).is_some() {
            return Err(parse_err(n, format!("duplicate key {k}")));
        }
    }
    let get = |k: &str| map.get(k).copied();
    let need = |k: &str| get(k).ok_or_else(|| parse_err(first, format!("missing key {k}")));
    let (_, id) = need("id")?;
    let (ln, n) = need("n")?;
    let degree = parse_num(ln, "n", n)?;
    let (ln, v) = need("r1")?;
    let r1 = parse_num(ln, "r1", v)?;
    let (ln, v) = need("r2")?;
    let r2 = parse_num(ln, "r2", v)?;
    let mut disc_factors = Vec::new();
    if let Some((ln, v)) = get("disc") {
        for tok in v.split_whitespace() {
            let (p, e) = tok.split_once('^').ok_or_else(|| parse_err(ln, format!("bad factor `{tok}`")))?;
            disc_factors.push((parse_num(ln, "disc", p)?, parse_num(ln, "disc", e)?));
        }
    }
    let mut split_places = Vec::new();
    if let Some((ln, v)) = get("split") {
        for tok in v.split_whitespace() {
            let (q, c) = tok.split_once('*').ok_or_else(|| parse_err(ln, format!("bad place `{tok}`")))?;
            split_places.push((parse_num(ln, "split", q)?, parse_num(ln, "split", c)?));
        }
    }
    let mut rows = Vec::new();
    if let Some((ln, v)) = get("rows") {
        for tok in v.split_whitespace() {
            let bad = || parse_err(ln, format!("bad row `{tok}`"));
            let (p, efn) = tok.split_once(':').ok_or_else(bad)?;
            let parts: Vec<&str> = efn.split(',').collect();
            if parts.len() != 3 {
                return Err(bad());
            }
            rows.push(DecompositionRow {
                p: parse_num(ln, "rows", p)?,
                e: parse_num(ln, "rows", parts[0])?,
                f: parse_num(ln, "rows", parts[1])?,
                n: parse_num(ln, "rows", parts[2])?,
            });
        }
    }
    let unlisted_from = match get("unlisted-from") {
        Some((ln, v)) => parse_num(ln, "unlisted-from", v)?,
        None => 2,
    };
    let quadratic = match get("quadratic") {
        Some((ln, v)) => Some(parse_num(ln, "quadratic", v)?),
        None => None,
    };
    let unconditional = match get("unconditional") {
        None | Some((_, "unc1")) => InequalityMode::Unconditional1,
        Some((_, "unc2")) => InequalityMode::Unconditional2,
        Some((ln, v)) => return Err(parse_err(ln, format!("unknown inequality `{v}`"))),
    };
    let (ln, v) = need("source")?;
    let source = TowerSource::from_tag(v).ok_or_else(|| parse_err(ln, format!("unknown source `{v}`")))?;
    let stored_delta = match get("delta") {
        Some((ln, v)) => Some(parse_num::<T>(ln, "delta", v)?),
        None => None,
    };
    let known = [
        "id", "n", "r1", "r2", "disc", "split", "rows", "unlisted-from", "quadratic",
        "unconditional", "source", "delta",
    ];
    if let Some(&(n, k, _)) = lines.iter().find(|(_, k, _)| !known.contains(k)) {
        return Err(parse_err(n, format!("unknown key {k}")));
    }
    let ex = NumberFieldExample {
        id: id.to_string(),
        degree,
        r1,
        r2,
        disc_factors,
        split_places,
        rows,
        unlisted_from,
        quadratic,
        unconditional,
        source,
        stored_delta,
    };
    ex.check()?;
    Ok(ex)
}

/// Parses the catalogue format: `key: value` lines, blocks separated by
/// blank lines, `#` starting a comment.
pub fn parse_catalogue<T: Real>(text: &str) -> Result<Vec<NumberFieldExample<T>>> {
    let mut out = Vec::new();
    let mut block: Vec<(usize, &str, &str)> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if raw.trim().is_empty() {
            if !block.is_empty() {
                out.push(parse_block(&block)?);
                block.clear();
            }
            continue;
        }
        if line.is_empty() {
            continue;
        }
        let (k, v) = line
            .split_once(':')
            .ok_or_else(|| parse_err(i + 1, format!("expected `key: value`, got `{line}`")))?;
        block.push((i + 1, k.trim(), v.trim()));
    }
    if !block.is_empty() {
        out.push(parse_block(&block)?);
    }
    let mut seen = std::collections::BTreeSet::new();
    for ex in &out {
        if !seen.insert(ex.id.clone()) {
            return Err(Error::MalformedExample(format!("duplicate id {}", ex.id)));
        }
    }
    Ok(out)
}

pub fn format_catalogue<T: Real>(examples: &[NumberFieldExample<T>]) -> String {
    let mut out = String::new();
    for (i, ex) in examples.iter().enumerate() {
        if i > 0 {
            out.push('\n');
        }
        let join = |items: Vec<String>| items.join(" ");
        let _ = writeln!(out, "id: {}", ex.id);
        let _ = writeln!(out, "n: {}", ex.degree);
        let _ = writeln!(out, "r1: {}", ex.r1);
        let _ = writeln!(out, "r2: {}", ex.r2);
        let _ = writeln!(
            out,
            "disc: {}",
            join(ex.disc_factors.iter().map(|(p, e)| format!("{p}^{e}")).collect())
        );
        let _ = writeln!(
            out,
            "split: {}",
            join(ex.split_places.iter().map(|(q, c)| format!("{q}*{c}")).collect())
        );
        if !ex.rows.is_empty() {
            let _ = writeln!(
                out,
                "rows: {}",
                join(ex.rows.iter().map(|r| format!("{}:{},{},{}", r.p, r.e, r.f, r.n)).collect())
            );
        }
        if ex.unlisted_from != 2 {
            let _ = writeln!(out, "unlisted-from: {}", ex.unlisted_from);
        }
        if let Some(d) = ex.quadratic {
            let _ = writeln!(out, "quadratic: {d}");
        }
        let _ = writeln!(out, "unconditional: {}", ex.unconditional.tag());
        if let Some(delta) = ex.stored_delta {
            let _ = writeln!(out, "delta: {delta}");
        }
        let _ = writeln!(out, "source: {}", ex.source.tag());
    }
    out
}

/// The bundled catalogue.
pub fn catalogue<T: Real>() -> Vec<NumberFieldExample<T>> {
    parse_catalogue(CATALOGUE).expect("bundled catalogue parses")
}

pub fn example<T: Real>(id: &str) -> Result<NumberFieldExample<T>> {
    catalogue()
        .into_iter()
        .find(|e| e.id == id)
        .ok_or_else(|| Error::UnknownExample(id.to_string()))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BoundsMode {
    Grh,
    Unconditional,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ExampleBounds<T: Real = f64> {
    pub genus: T,
    pub bs_lower: T,
    pub bs_upper: T,
    pub kappa_lower: T,
    pub kappa_upper: T,
    /// δ of the guaranteed φ-vector; the tower's δ is at most this.
    pub deficiency_upper: T,
    pub inequality: InequalityMode,
    /// Last prime used by the fill and its fraction of the cap.
    pub boundary: Option<Boundary<T>>,
}

/// Inequality selected by `mode` for `example`.
pub fn inequality_for<T: Real>(example: &NumberFieldExample<T>, mode: BoundsMode) -> InequalityMode {
    match mode {
        BoundsMode::Grh => InequalityMode::Grh,
        BoundsMode::Unconditional => example.unconditional,
    }
}

/// BS and κ intervals for the tower over a catalogued field.
pub fn example_bounds<T: Real>(id: &str, mode: BoundsMode) -> Result<ExampleBounds<T>> {
    let ex = example::<T>(id)?;
    example_bounds_with(&ex, inequality_for(&ex, mode))
}

/// As [`example_bounds`] for an explicit field and inequality. The lower
/// bound comes from the guaranteed φ-vector; the upper bound adds the best
/// gain of the other primes under the place caps of the field.
pub fn example_bounds_with<T: Real>(
    ex: &NumberFieldExample<T>,
    inequality: InequalityMode,
) -> Result<ExampleBounds<T>> {
    let phi = phi_from_unramified_tower(ex)?;
    let g = ex.genus();
    let c = coefficients::<T>(LpMode::GrhBs, ex.class()).with_inequality(inequality)?;
    let fixed: BTreeMap<u64, T> = phi.entries().collect();
    let sol = lp_max_with(&c, phi.phi_r(), phi.phi_c(), &fixed, None, |p| ex.prime_cap(p, g))?;
    let bs_lower = bs_ratio(&phi);
    let shift = phi.phi_r() * T::two().ln() + phi.phi_c() * (T::two() * T::PI()).ln() - T::one();
    let bs_upper = bs_lower + sol.gain;
    Ok(ExampleBounds {
        genus: g,
        bs_lower,
        bs_upper,
        kappa_lower: bs_lower + shift,
        kappa_upper: bs_upper + shift,
        deficiency_upper: deficiency(&phi),
        inequality,
        boundary: sol.boundary,
    })
}

fn bs_gap<T: Real>(q: u64) -> T {
    let qf = T::int(q);
    (qf / (qf - T::one())).ln()
}

/// Closed-form unconditional upper bound for `martinet20`: all primes from
/// 37 to 97 at their full cap 20/g plus the places of norm 23 and 32, with
/// the weights log q/(q − 1).
pub fn martinet20_closed_form_upper<T: Real>() -> Result<T> {
    let ex = example::<T>("martinet20")?;
    let g = ex.genus();
    let lower = bs_ratio(&phi_from_unramified_tower(&ex)?);
    let tail = primes_up_to(97)?
        .into_iter()
        .filter(|&p| p >= 37)
        .fold(T::zero(), |acc, p| acc + bs_gap::<T>(p));
    Ok(lower
        + (T::int(10) * bs_gap::<T>(23) + T::two() * bs_gap::<T>(32) + T::int(20) * tail) / g)
}

/// Closed-form unconditional upper bound for `martinet4r` built from the
/// GRH archimedean constant 2γ + π + 2 log 8π, weights A_p of the first
/// unconditional inequality and the boundary factor 1/(2gA_17). The greedy
/// fill of [`example_bounds`] differs from it.
pub fn martinet4r_closed_form_upper<T: Real>() -> Result<T> {
    let ex = example::<T>("martinet4r")?;
    let g = ex.genus();
    let lower = bs_ratio(&phi_from_unramified_tower(&ex)?);
    let a = |p: u64| place_weight::<T>(InequalityMode::Unconditional1, p);
    let num = bs_gap::<T>(2) + T::two() * bs_gap::<T>(7) + T::int(4) * (bs_gap::<T>(11) + bs_gap::<T>(13));
    let pi = T::PI();
    let arch = T::two() * T::euler_gamma() + pi + T::two() * (T::lit(8.0) * pi).ln();
    let rest = g - arch - a(2) - T::two() * a(7) - T::int(4) * (a(11) + a(13));
    Ok(lower + num / g + rest * bs_gap::<T>(17) / (T::two() * g * a(17)))
}

/// Norms of the degree-one places of `martinet20` between 37 and 1000.
pub const MARTINET20_SPLIT_PRIMES_BELOW_1000: [u64; 6] = [353, 439, 463, 593, 967, 991];

/// Unconditional upper bound for `martinet20` with the first unconditional
/// inequality, using the degree-one primes up to 1000.
pub fn martinet20_norm_list_upper<T: Real>() -> Result<ExampleBounds<T>> {
    let mut ex = example::<T>("martinet20")?;
    ex.rows.extend(MARTINET20_SPLIT_PRIMES_BELOW_1000.map(|p| DecompositionRow { p, e: 1, f: 1, n: 20 }));
    ex.unlisted_from = 1000;
    example_bounds_with(&ex, InequalityMode::Unconditional1)
}

#[derive(Debug, Clone, PartialEq)]
pub struct YamamuraCheck<T: Real = f64> {
    pub d: i128,
    pub genus: T,
    pub grh_lhs: T,
    /// The GRH basic inequality fails for the claimed tower.
    pub contradiction: bool,
    /// Every prime under the split places splits in the base.
    pub all_split: bool,
}

/// Evaluates the GRH basic inequality on the tower claimed for `yamamura`.
pub fn yamamura_grh_check<T: Real>() -> Result<YamamuraCheck<T>> {
    let ex = example::<T>("yamamura")?;
    let d = ex.quadratic.expect("quadratic example");
    let phi = phi_from_unramified_tower(&ex)?;
    let grh_lhs = lhs(&phi, InequalityMode::Grh)?;
    let mut all_split = true;
    for &(q, _) in &ex.split_places {
        all_split &= quadratic_decomposition(d, q)? == Splitting::Split;
    }
    Ok(YamamuraCheck {
        d,
        genus: ex.genus(),
        grh_lhs,
        contradiction: grh_lhs > T::one(),
        all_split,
    })
}
