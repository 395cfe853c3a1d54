//! Command-line front end. Every command returns a [`CommandResult`] so
//! the dispatch can be tested without spawning processes.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use infield::density::density_profile;
use infield::ffgrowth::{divisor_growth, ff_global_bounds, lambda_of_mu, mu_one, mu_zero};
use infield::inequality::{deficiency, lhs, InequalityMode};
use infield::lp::{self, coefficients, global_bounds, FieldClass, LpMode, Target};
use infield::numerics::{format_fixed, Rounding};
use infield::phi::{parse_phi, validate, ValidationMode};
use infield::towers::{self, BoundsMode};
use infield::zeta::{
    bs_ratio, class_number_upper_bound, kappa, log_zeta, log_zeta_tilde, regulator_lower_bound,
    TruncationPolicy,
};
use infield::{Complex64, Error, Phi};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VIOLATION: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct CommandResult {
    pub exit_code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl CommandResult {
    fn ok(stdout: String) -> Self {
        Self {
            exit_code: EXIT_OK,
            stdout,
            stderr: String::new(),
        }
    }

    fn usage(message: impl std::fmt::Display) -> Self {
        Self {
            exit_code: EXIT_USAGE,
            stdout: String::new(),
            stderr: format!("error: {message}\n"),
        }
    }
}

impl From<Error> for CommandResult {
    fn from(e: Error) -> Self {
        Self::usage(e)
    }
}

#[derive(Debug, Parser)]
#[command(name = "infield", version, about = "Asymptotic invariants of global fields")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, Args)]
pub struct Display {
    /// Decimal places in printed values.
    #[arg(long, default_value_t = 4)]
    pub precision: usize,
    /// Cutting rule for printed values.
    #[arg(long, value_enum, default_value_t = RoundArg::Truncate)]
    pub round: RoundArg,
}

impl Display {
    fn fmt(&self, x: f64) -> String {
        format_fixed(x, self.precision, self.round.into())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum RoundArg {
    Truncate,
    HalfEven,
}

impl From<RoundArg> for Rounding {
    fn from(r: RoundArg) -> Self {
        match r {
            RoundArg::Truncate => Rounding::Truncate,
            RoundArg::HalfEven => Rounding::HalfEven,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    Grh,
    Unc,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ClassArg {
    All,
    Real,
    Complex,
}

impl From<ClassArg> for FieldClass {
    fn from(c: ClassArg) -> Self {
        match c {
            ClassArg::All => FieldClass::All,
            ClassArg::Real => FieldClass::TotallyReal,
            ClassArg::Complex => FieldClass::TotallyComplex,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TargetArg {
    Bs,
    Kappa,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ValidateArg {
    Structural,
    Grh,
    Unc,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Global lower and upper bounds on BS or κ.
    Bounds {
        #[arg(long, value_enum)]
        mode: ModeArg,
        #[arg(long, value_enum, default_value_t = ClassArg::All)]
        class: ClassArg,
        #[arg(long, value_enum, default_value_t = TargetArg::Bs)]
        target: TargetArg,
        #[command(flatten)]
        display: Display,
    },
    /// Both summary tables of global bounds and example towers.
    Table1 {
        /// Emit CSV instead of aligned text.
        #[arg(long)]
        csv: bool,
        #[command(flatten)]
        display: Display,
    },
    /// Bounds for the tower over a catalogued field.
    Example {
        id: String,
        #[arg(long, value_enum, default_value_t = ModeArg::Grh)]
        mode: ModeArg,
        #[command(flatten)]
        display: Display,
    },
    /// List the catalogue.
    Catalogue,
    /// log ζ_φ(s) or its completed form.
    Zeta {
        phi_file: PathBuf,
        #[arg(long)]
        s: f64,
        #[arg(long, default_value_t = 0.0)]
        im: f64,
        #[arg(long)]
        completed: bool,
        /// Drop Euler factors whose bound is below this.
        #[arg(long)]
        tol: Option<f64>,
        /// Drop Euler factors with q above this.
        #[arg(long)]
        q_max: Option<u64>,
    },
    /// Sample the zero density M_φ(t) as CSV.
    Density {
        phi_file: PathBuf,
        #[arg(long, allow_negative_numbers = true)]
        tmin: f64,
        #[arg(long, allow_negative_numbers = true)]
        tmax: f64,
        #[arg(long)]
        n: usize,
        /// Write the CSV here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check a φ-file against the basic inequalities.
    Validate {
        phi_file: PathBuf,
        #[arg(long, value_enum, default_value_t = ValidateArg::Grh)]
        mode: ValidateArg,
    },
    /// Global BS bounds for function fields over F_r.
    FfBounds {
        r: u64,
        #[command(flatten)]
        display: Display,
    },
    /// Divisor growth at μ and the threshold μ₁.
    FfGrowth {
        phi_file: PathBuf,
        #[arg(long)]
        mu: f64,
        #[command(flatten)]
        display: Display,
    },
    /// Regulator and class number bounds.
    Regulator {
        phi_file: PathBuf,
        #[command(flatten)]
        display: Display,
    },
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, S>(args: I) -> CommandResult
where
    I: IntoIterator<Item = S>,
    S: Into<OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => execute(cli.command),
        Err(e) => {
            let text = e.render().to_string();
            if e.use_stderr() {
                CommandResult {
                    exit_code: EXIT_USAGE,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                CommandResult::ok(text)
            }
        }
    }
}

pub fn execute(command: Command) -> CommandResult {
    let result = match command {
        Command::Bounds {
            mode,
            class,
            target,
            display,
        } => cmd_bounds(mode, class, target, display),
        Command::Table1 { csv, display } => cmd_table1(csv, display),
        Command::Example { id, mode, display } => cmd_example(&id, mode, display),
        Command::Catalogue => cmd_catalogue(),
        Command::Zeta {
            phi_file,
            s,
            im,
            completed,
            tol,
            q_max,
        } => cmd_zeta(&phi_file, Complex64::new(s, im), completed, tol, q_max),
        Command::Density {
            phi_file,
            tmin,
            tmax,
            n,
            out,
        } => cmd_density(&phi_file, tmin, tmax, n, out.as_deref()),
        Command::Validate { phi_file, mode } => cmd_validate(&phi_file, mode),
        Command::FfBounds { r, display } => cmd_ff_bounds(r, display),
        Command::FfGrowth {
            phi_file,
            mu,
            display,
        } => cmd_ff_growth(&phi_file, mu, display),
        Command::Regulator { phi_file, display } => cmd_regulator(&phi_file, display),
    };
    result.unwrap_or_else(CommandResult::from)
}

type CmdResult = Result<CommandResult, Error>;

fn read_phi(path: &Path) -> Result<Phi, Error> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Invalid(format!("cannot read {}: {e}", path.display())))?;
    parse_phi(&text)
}

fn finite(name: &str, x: f64) -> Result<(), Error> {
    if x.is_finite() {
        Ok(())
    } else {
        Err(Error::Invalid(format!("--{name} must be finite")))
    }
}

pub fn cmd_bounds(mode: ModeArg, class: ClassArg, target: TargetArg, d: Display) -> CmdResult {
    let grh = mode == ModeArg::Grh;
    let target = match target {
        TargetArg::Bs => Target::Bs,
        TargetArg::Kappa => Target::Kappa,
    };
    let class = FieldClass::from(class);
    let (lower, upper) = global_bounds::<f64>(grh, class, target)?;
    let c = coefficients::<f64>(LpMode::from_parts(grh, target == Target::Kappa), class);
    let mut out = format!("lower: {}\nupper: {}\n", d.fmt(lower), d.fmt(upper));
    if let Some(b) = lp::lp_max(&c)?.boundary {
        let _ = writeln!(out, "turnover prime: {}", b.q);
    }
    Ok(CommandResult::ok(out))
}

pub fn cmd_table1(csv: bool, d: Display) -> CmdResult {
    let table = lp::global_bounds_table::<f64>()?;
    Ok(CommandResult::ok(if csv {
        table.to_csv()
    } else {
        table.render_text(d.precision, d.round.into())
    }))
}

pub fn cmd_catalogue() -> CmdResult {
    let mut out = String::new();
    for ex in towers::catalogue::<f64>() {
        let _ = writeln!(
            out,
            "{:<14} n={:<2} r1={:<2} r2={:<2} source={}",
            ex.id,
            ex.degree,
            ex.r1,
            ex.r2,
            ex.source.tag()
        );
    }
    Ok(CommandResult::ok(out))
}

pub fn cmd_example(id: &str, mode: ModeArg, d: Display) -> CmdResult {
    let ex = towers::example::<f64>(id)?;
    let mut out = format!("id: {}\n", ex.id);
    if !ex.has_tower_data() {
        if let Some(delta) = ex.stored_delta {
            let _ = writeln!(out, "deficiency <= {}", d.fmt(delta));
        }
        let _ = writeln!(out, "no discriminant data bundled");
        return Ok(CommandResult::ok(out));
    }
    let phi = infield::phi::phi_from_unramified_tower(&ex)?;
    let bounds_mode = match mode {
        ModeArg::Grh => BoundsMode::Grh,
        ModeArg::Unc => BoundsMode::Unconditional,
    };
    let inequality = towers::inequality_for(&ex, bounds_mode);
    let _ = writeln!(out, "g: {}", fmt_at_least(d, ex.genus(), 5));
    let used = lhs(&phi, inequality)?;
    let _ = writeln!(out, "inequality: {}", inequality.tag());
    let _ = writeln!(out, "LHS: {}", d.fmt(used));
    if used > 1.0 {
        let _ = writeln!(out, "{}-infeasible", if mode == ModeArg::Grh { "GRH" } else { "inequality" });
        return Ok(CommandResult {
            exit_code: EXIT_VIOLATION,
            stdout: out,
            stderr: String::new(),
        });
    }
    let b = towers::example_bounds_with(&ex, inequality)?;
    let _ = writeln!(out, "deficiency <= {}", d.fmt(deficiency(&phi)));
    let _ = writeln!(out, "BS: {} .. {}", d.fmt(b.bs_lower), d.fmt(b.bs_upper));
    let _ = writeln!(out, "kappa: {} .. {}", d.fmt(b.kappa_lower), d.fmt(b.kappa_upper));
    if let Some(bd) = b.boundary {
        let _ = writeln!(out, "boundary: q = {}, fraction {}", bd.q, d.fmt(bd.alpha));
    }
    Ok(CommandResult::ok(out))
}

fn fmt_at_least(d: Display, x: f64, places: usize) -> String {
    format_fixed(x, d.precision.max(places), d.round.into())
}

pub fn cmd_zeta(path: &Path, s: Complex64, completed: bool, tol: Option<f64>, q_max: Option<u64>) -> CmdResult {
    finite("s", s.re)?;
    finite("im", s.im)?;
    let phi = read_phi(path)?;
    let mut policy = TruncationPolicy::<f64>::default();
    if let Some(t) = tol {
        policy.term_tol = t;
    }
    if let Some(q) = q_max {
        policy.q_max = q;
    }
    let ev = if completed {
        log_zeta_tilde(&phi, s, &policy)?
    } else {
        log_zeta(&phi, s, &policy)?
    };
    Ok(CommandResult::ok(format!(
        "re: {:e}\nim: {:e}\ntail_bound: {:e}\n",
        ev.value.re, ev.value.im, ev.tail_bound
    )))
}

pub fn cmd_density(path: &Path, tmin: f64, tmax: f64, n: usize, out: Option<&Path>) -> CmdResult {
    finite("tmin", tmin)?;
    finite("tmax", tmax)?;
    let phi = read_phi(path)?;
    let profile = density_profile(&phi, tmin, tmax, n)?;
    let csv = profile.to_csv();
    match out {
        Some(p) => {
            std::fs::write(p, &csv)
                .map_err(|e| Error::Invalid(format!("cannot write {}: {e}", p.display())))?;
            Ok(CommandResult {
                exit_code: EXIT_OK,
                stdout: String::new(),
                stderr: format!("wrote {n} rows to {}\n", p.display()),
            })
        }
        None => Ok(CommandResult::ok(csv)),
    }
}

pub fn cmd_validate(path: &Path, mode: ValidateArg) -> CmdResult {
    let phi = read_phi(path)?;
    let mode = match mode {
        ValidateArg::Structural => ValidationMode::Structural,
        ValidateArg::Grh => ValidationMode::Grh,
        ValidateArg::Unc => ValidationMode::Unconditional,
    };
    let report = validate(&phi, mode);
    if report.is_ok() {
        return Ok(CommandResult::ok("ok\n".into()));
    }
    let mut out = String::new();
    for v in &report.violations {
        let _ = writeln!(out, "{}: {:e} > {:e}: {}", v.constraint, v.lhs, v.rhs, v.message);
    }
    Ok(CommandResult {
        exit_code: EXIT_VIOLATION,
        stdout: out,
        stderr: String::new(),
    })
}

pub fn cmd_ff_bounds(r: u64, d: Display) -> CmdResult {
    let (lo, hi) = ff_global_bounds::<f64>(r)?;
    Ok(CommandResult::ok(format!("lower: {}\nupper: {}\n", d.fmt(lo), d.fmt(hi))))
}

pub fn cmd_ff_growth(path: &Path, mu: f64, d: Display) -> CmdResult {
    let phi = read_phi(path)?;
    let mut out = String::new();
    let _ = writeln!(out, "mu0: {}", d.fmt(mu_zero(&phi)?));
    let _ = writeln!(out, "lambda: {}", d.fmt(lambda_of_mu(&phi, mu)?));
    let _ = writeln!(out, "growth: {}", d.fmt(divisor_growth(&phi, mu)?));
    match mu_one(&phi) {
        Ok(m) => {
            let _ = writeln!(out, "mu1: {}", d.fmt(m));
        }
        Err(Error::NoRoot(_)) => {
            let _ = writeln!(out, "mu1: none");
        }
        Err(e) => return Err(e),
    }
    Ok(CommandResult::ok(out))
}

pub fn cmd_regulator(path: &Path, d: Display) -> CmdResult {
    let phi = read_phi(path)?;
    let reg = regulator_lower_bound(&phi)?;
    let mut out = String::new();
    let _ = writeln!(out, "log R / g >= {}", d.fmt(reg.bound));
    let _ = writeln!(out, "zimmert: {}", d.fmt(reg.zimmert));
    let _ = writeln!(out, "log h / g <= {}", d.fmt(class_number_upper_bound(&phi)?));
    let _ = writeln!(out, "BS: {}", d.fmt(bs_ratio(&phi)));
    let _ = writeln!(out, "kappa: {}", d.fmt(kappa(&phi)));
    let _ = writeln!(out, "deficiency: {}", d.fmt(deficiency(&phi)));
    let unc = lhs(&phi, InequalityMode::Unconditional2)?;
    let _ = writeln!(out, "unconditional LHS: {}", d.fmt(unc));
    Ok(CommandResult::ok(out))
}
