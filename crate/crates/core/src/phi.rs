//! φ-vectors: the limits N_q/g, N_ℝ/g, N_ℂ/g along a family of fields.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::inequality::{self, InequalityMode};
use crate::numerics::{power_of, prime_power_decomposition};
use crate::real::Real;
use crate::towers::NumberFieldExample;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FieldKind {
    NumberField,
    /// Function fields over the finite field with `r` elements.
    FunctionField { r: u64 },
}

/// Finitely supported φ-vector.
///
/// Entries are keyed by prime power. Construction checks that every value
/// is finite and non-negative and that keys have the right shape; the
/// place-count constraint is left to [`validate`], since probing vectors
/// that break it is a legitimate use.
#[derive(Debug, Clone, PartialEq)]
pub struct PhiSystem<T: Real = f64> {
    kind: FieldKind,
    phi_r: T,
    phi_c: T,
    entries: BTreeMap<u64, T>,
}

fn check_value<T: Real>(what: &str, v: T) -> Result<()> {
    if !v.is_finite() || v < T::zero() {
        return Err(Error::Invalid(format!("{what} = {v} must be finite and >= 0")));
    }
    Ok(())
}

impl<T: Real> PhiSystem<T> {
    pub fn number_field(
        phi_r: T,
        phi_c: T,
        entries: impl IntoIterator<Item = (u64, T)>,
    ) -> Result<Self> {
        check_value("phi_R", phi_r)?;
        check_value("phi_C", phi_c)?;
        let mut map = BTreeMap::new();
        for (q, v) in entries {
            if prime_power_decomposition(q).is_none() {
                return Err(Error::Invalid(format!("{q} is not a prime power")));
            }
            check_value(&format!("phi_{q}"), v)?;
            if map.insert(q, v).is_some() {
                return Err(Error::Invalid(format!("duplicate entry for q = {q}")));
            }
        }
        Ok(Self {
            kind: FieldKind::NumberField,
            phi_r,
            phi_c,
            entries: map,
        })
    }

    pub fn function_field(r: u64, entries: impl IntoIterator<Item = (u64, T)>) -> Result<Self> {
        if prime_power_decomposition(r).is_none() {
            return Err(Error::Invalid(format!("r = {r} is not a prime power")));
        }
        let mut map = BTreeMap::new();
        for (q, v) in entries {
            if power_of(q, r).is_none() {
                return Err(Error::Invalid(format!("{q} is not a power of r = {r}")));
            }
            check_value(&format!("phi_{q}"), v)?;
            if map.insert(q, v).is_some() {
                return Err(Error::Invalid(format!("duplicate entry for q = {q}")));
            }
        }
        Ok(Self {
            kind: FieldKind::FunctionField { r },
            phi_r: T::zero(),
            phi_c: T::zero(),
            entries: map,
        })
    }

    pub fn zero_number_field() -> Self {
        Self {
            kind: FieldKind::NumberField,
            phi_r: T::zero(),
            phi_c: T::zero(),
            entries: BTreeMap::new(),
        }
    }

    pub fn kind(&self) -> FieldKind {
        self.kind
    }

    pub fn is_number_field(&self) -> bool {
        self.kind == FieldKind::NumberField
    }

    /// Size of the constant field, for function-field vectors.
    pub fn constant_field(&self) -> Option<u64> {
        match self.kind {
            FieldKind::FunctionField { r } => Some(r),
            FieldKind::NumberField => None,
        }
    }

    pub fn phi_r(&self) -> T {
        self.phi_r
    }

    pub fn phi_c(&self) -> T {
        self.phi_c
    }

    pub fn get(&self, q: u64) -> T {
        self.entries.get(&q).copied().unwrap_or_else(T::zero)
    }

    /// Non-archimedean entries in increasing order of q, zeros included if
    /// they were given explicitly.
    pub fn entries(&self) -> impl Iterator<Item = (u64, T)> + '_ {
        self.entries.iter().map(|(&q, &v)| (q, v))
    }

    /// Entries of a function-field vector as (m, r^m, φ_{r^m}).
    pub fn ff_entries(&self) -> impl Iterator<Item = (u32, u64, T)> + '_ {
        let r = self.constant_field().unwrap_or(0);
        self.entries
            .iter()
            .filter_map(move |(&q, &v)| power_of(q, r).map(|m| (m, q, v)))
    }

    pub fn is_zero(&self) -> bool {
        self.phi_r == T::zero()
            && self.phi_c == T::zero()
            && self.entries.values().all(|v| *v == T::zero())
    }

    /// Σ_m m·φ_{p^m} for each prime p in the support.
    pub fn place_sums(&self) -> BTreeMap<u64, T> {
        let mut sums = BTreeMap::new();
        for (&q, &v) in &self.entries {
            if let Some((p, m)) = prime_power_decomposition(q) {
                let slot = sums.entry(p).or_insert_with(T::zero);
                *slot = *slot + T::int(m as u64) * v;
            }
        }
        sums
    }

    fn require_number(&self, op: &str) -> Result<()> {
        if self.is_number_field() {
            Ok(())
        } else {
            Err(Error::Kind(format!("{op} needs a number-field φ")))
        }
    }

    pub(crate) fn require_number_field(&self, op: &str) -> Result<()> {
        self.require_number(op)
    }

    pub(crate) fn require_function_field(&self, op: &str) -> Result<u64> {
        self.constant_field()
            .ok_or_else(|| Error::Kind(format!("{op} needs a function-field φ")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ValidationMode {
    Structural,
    Grh,
    Unconditional,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Violation<T: Real = f64> {
    pub constraint: String,
    pub lhs: T,
    pub rhs: T,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct ValidationReport<T: Real = f64> {
    pub violations: Vec<Violation<T>>,
}

impl<T: Real> ValidationReport<T> {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks a φ-vector against the constraints selected by `mode`.
///
/// `Structural` checks the place-count bound over every prime; `Grh` adds
/// the GRH basic inequality (and, for function fields, φ_r ≤ √r − 1);
/// `Unconditional` adds Stark's form of the basic inequality for number
/// fields and the unconditional function-field inequality.
pub fn validate<T: Real>(phi: &PhiSystem<T>, mode: ValidationMode) -> ValidationReport<T> {
    let mut report = ValidationReport::default();
    if phi.is_number_field() {
        let rhs = phi.phi_r + T::two() * phi.phi_c;
        let slack = T::lit(1e-12) * (T::one() + rhs);
        for (p, lhs) in phi.place_sums() {
            if lhs > rhs + slack {
                report.violations.push(Violation {
                    constraint: format!("place-count[p={p}]"),
                    lhs,
                    rhs,
                    message: format!(
                        "sum of m*phi_(p^m) over p = {p} exceeds phi_R + 2 phi_C"
                    ),
                });
            }
        }
    }
    let inequality_mode = match (mode, phi.kind) {
        (ValidationMode::Structural, _) => None,
        (_, FieldKind::FunctionField { .. }) => Some(InequalityMode::FunctionField),
        (ValidationMode::Grh, FieldKind::NumberField) => Some(InequalityMode::Grh),
        (ValidationMode::Unconditional, FieldKind::NumberField) => {
            Some(InequalityMode::Unconditional2)
        }
    };
    if let Some(im) = inequality_mode {
        let lhs = inequality::lhs(phi, im).expect("mode chosen to match the kind");
        if lhs > T::one() {
            report.violations.push(Violation {
                constraint: format!("basic-inequality[{}]", im.tag()),
                lhs,
                rhs: T::one(),
                message: "basic inequality left-hand side exceeds 1".into(),
            });
        }
    }
    if let (ValidationMode::Grh, FieldKind::FunctionField { r }) = (mode, phi.kind) {
        let lhs = phi.get(r);
        let rhs = T::int(r).sqrt() - T::one();
        if lhs > rhs {
            report.violations.push(Violation {
                constraint: "rational-points".into(),
                lhs,
                rhs,
                message: format!("phi_{r} exceeds sqrt(r) - 1"),
            });
        }
    }
    report
}

/// Guaranteed lower φ-vector of an infinite unramified tower over
/// `example`: each archimedean place and each place declared completely
/// split contributes 1/g.
pub fn phi_from_unramified_tower<T: Real>(example: &NumberFieldExample<T>) -> Result<PhiSystem<T>> {
    let g = example.genus();
    if !(g > T::zero()) || !g.is_finite() {
        return Err(Error::MalformedExample(format!(
            "{}: genus {g} is not positive",
            example.id
        )));
    }
    if example.r1 + 2 * example.r2 == 0 {
        return Err(Error::MalformedExample(format!(
            "{}: no archimedean places",
            example.id
        )));
    }
    let mut entries = BTreeMap::new();
    for &(q, count) in &example.split_places {
        let slot = entries.entry(q).or_insert_with(T::zero);
        *slot = *slot + T::int(count) / g;
    }
    PhiSystem::number_field(T::int(example.r1) / g, T::int(example.r2) / g, entries)
}

/// Renders the φ-file form. Decimals use the shortest representation that
/// parses back to the same bits.
pub fn format_phi<T: Real>(phi: &PhiSystem<T>) -> String {
    let mut out = String::new();
    match phi.kind {
        FieldKind::NumberField => {
            out.push_str("kind: number\n");
            let _ = writeln!(out, "phi_R: {}", phi.phi_r);
            let _ = writeln!(out, "phi_C: {}", phi.phi_c);
        }
        FieldKind::FunctionField { r } => {
            let _ = writeln!(out, "kind: function r={r}");
        }
    }
    for (q, v) in phi.entries() {
        let _ = writeln!(out, "phi {q}: {v}");
    }
    out
}

fn parse_decimal<T: Real>(text: &str, line: usize) -> Result<T> {
    text.trim().parse::<T>().map_err(|_| Error::Parse {
        line,
        message: format!("`{}` is not a decimal number", text.trim()),
    })
}

/// Parses the φ-file format.
///
/// ```text
/// kind: number            # or `kind: function r=<q>`
/// phi_R: 0
/// phi_C: 0.22
/// phi 23: 0.19
/// ```
pub fn parse_phi<T: Real>(text: &str) -> Result<PhiSystem<T>> {
    let mut kind = None;
    let mut phi_r = None;
    let mut phi_c = None;
    let mut entries: Vec<(u64, T, usize)> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (key, value) = line.split_once(':').ok_or_else(|| Error::Parse {
            line: line_no,
            message: format!("expected `key: value`, got `{line}`"),
        })?;
        let key = key.trim();
        if kind.is_none() {
            if key != "kind" {
                return Err(Error::Parse {
                    line: line_no,
                    message: "the first record must be `kind:`".into(),
                });
            }
            let value = value.trim();
            kind = Some(if value == "number" {
                FieldKind::NumberField
            } else if let Some(rest) = value.strip_prefix("function") {
                let r = rest
                    .trim()
                    .strip_prefix("r=")
                    .and_then(|x| x.trim().parse::<u64>().ok())
                    .ok_or_else(|| Error::Parse {
                        line: line_no,
                        message: "expected `function r=<q>`".into(),
                    })?;
                FieldKind::FunctionField { r }
            } else {
                return Err(Error::Parse {
                    line: line_no,
                    message: format!("unknown kind `{value}`"),
                });
            });
            continue;
        }
        let dup = |line| Error::Parse {
            line,
            message: format!("duplicate `{key}`"),
        };
        match key {
            "kind" => return Err(dup(line_no)),
            "phi_R" | "phi_C" => {
                if kind != Some(FieldKind::NumberField) {
                    return Err(Error::Parse {
                        line: line_no,
                        message: format!("`{key}` is only allowed for number fields"),
                    });
                }
                let v: T = parse_decimal(value, line_no)?;
                let slot = if key == "phi_R" { &mut phi_r } else { &mut phi_c };
                if slot.replace(v).is_some() {
                    return Err(dup(line_no));
                }
            }
            _ => {
                let q = key
                    .strip_prefix("phi")
                    .map(str::trim)
                    .and_then(|x| x.parse::<u64>().ok())
                    .ok_or_else(|| Error::Parse {
                        line: line_no,
                        message: format!("unknown key `{key}`"),
                    })?;
                if entries.iter().any(|(seen, _, _)| *seen == q) {
                    return Err(Error::Parse {
                        line: line_no,
                        message: format!("duplicate entry for q = {q}"),
                    });
                }
                entries.push((q, parse_decimal(value, line_no)?, line_no));
            }
        }
    }
    let kind = kind.ok_or(Error::Parse {
        line: 0,
        message: "empty φ-file".into(),
    })?;
    let last_line = entries.last().map(|e| e.2).unwrap_or(1);
    let pairs = entries.into_iter().map(|(q, v, _)| (q, v));
    let built = match kind {
        FieldKind::NumberField => PhiSystem::number_field(
            phi_r.unwrap_or_else(T::zero),
            phi_c.unwrap_or_else(T::zero),
            pairs,
        ),
        FieldKind::FunctionField { r } => PhiSystem::function_field(r, pairs),
    };
    built.map_err(|e| Error::Parse {
        line: last_line,
        message: e.to_string(),
    })
}
