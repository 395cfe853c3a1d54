use std::path::PathBuf;
use std::process::Command;
use std::time::Instant;

use infield::density::{density_profile, parse_profile_csv};
use infield::lp::{global_bounds, global_bounds_table, FieldClass, Target};
use infield::phi::{format_phi, phi_from_unramified_tower};
use infield::towers;
use infield::Phi;
use infield_cli::{run, CommandResult, EXIT_OK, EXIT_USAGE, EXIT_VIOLATION};

fn cli(args: &[&str]) -> CommandResult {
    run(std::iter::once("infield").chain(args.iter().copied()))
}

fn value_of(out: &str, key: &str) -> String {
    out.lines()
        .find_map(|l| l.strip_prefix(&format!("{key}: ")))
        .unwrap_or_else(|| panic!("no `{key}` in {out}"))
        .trim()
        .to_string()
}

fn write_phi(dir: &tempfile::TempDir, name: &str, text: &str) -> PathBuf {
    let path = dir.path().join(name);
    std::fs::write(&path, text).unwrap();
    path
}

#[test]
fn bounds_grh_all() {
    let r = cli(&["bounds", "--mode", "grh", "--class", "all", "--target", "bs"]);
    assert_eq!(r.exit_code, EXIT_OK);
    assert_eq!(value_of(&r.stdout, "lower"), "0.5165");
    assert_eq!(value_of(&r.stdout, "upper"), "1.0938");
    assert_eq!(value_of(&r.stdout, "turnover prime"), "7");
}

#[test]
fn bounds_kappa_real() {
    let r = cli(&["bounds", "--mode", "grh", "--class", "real", "--target", "kappa"]);
    assert_eq!(value_of(&r.stdout, "upper"), "0.1874");
    assert_eq!(value_of(&r.stdout, "lower"), "0.0000");
}

#[test]
fn bounds_print_library_values() {
    for (mode, grh) in [("grh", true), ("unc", false)] {
        for (class, c) in [
            ("all", FieldClass::All),
            ("real", FieldClass::TotallyReal),
            ("complex", FieldClass::TotallyComplex),
        ] {
            for (target, t) in [("bs", Target::Bs), ("kappa", Target::Kappa)] {
                let r = cli(&["bounds", "--mode", mode, "--class", class, "--target", target, "--precision", "12"]);
                let (lo, hi) = global_bounds::<f64>(grh, c, t).unwrap();
                let lo_printed: f64 = value_of(&r.stdout, "lower").parse().unwrap();
                let hi_printed: f64 = value_of(&r.stdout, "upper").parse().unwrap();
                assert!((lo - lo_printed).abs() < 1e-12 && (hi - hi_printed).abs() < 1e-12);
            }
        }
    }
}

#[test]
fn rounding_flag() {
    let r = cli(&["bounds", "--mode", "grh", "--target", "kappa", "--round", "half-even"]);
    assert_eq!(value_of(&r.stdout, "upper"), "0.2165");
}

#[test]
fn bad_enum_is_usage_error() {
    let r = cli(&["bounds", "--mode", "maybe"]);
    assert_eq!(r.exit_code, EXIT_USAGE);
    assert!(r.stdout.is_empty());
    assert!(!r.stderr.is_empty());
    assert_eq!(cli(&["nope"]).exit_code, EXIT_USAGE);
}

fn cells(line: &str) -> Vec<String> {
    line.split('|').map(|c| c.trim().to_string()).collect()
}

#[test]
fn table_rows() {
    let r = cli(&["table1"]);
    assert_eq!(r.exit_code, EXIT_OK);
    let row = r
        .stdout
        .lines()
        .map(cells)
        .find(|c| c[0] == "GRH" && c[1] == "all fields")
        .unwrap();
    assert_eq!(row[2..], ["0.5165", "0.5939–0.6025", "1.0602–1.0798", "1.0938"]);
    let kappa_rows: Vec<Vec<String>> = r
        .stdout
        .split("κ-invariant")
        .nth(1)
        .unwrap()
        .lines()
        .map(cells)
        .filter(|c| c.len() == 4 && c[0] == "unconditional")
        .collect();
    let complex = kappa_rows.iter().find(|c| c[1] == "totally complex").unwrap();
    assert_eq!(complex[3], "0.3151");
}

#[test]
fn table_csv_matches_library_bit_for_bit() {
    let r = cli(&["table1", "--csv"]);
    let table = global_bounds_table::<f64>().unwrap();
    let mut lines = r.stdout.lines();
    assert_eq!(
        lines.next().unwrap(),
        "mode,class,target,lower_bound,lower_example,upper_example,upper_bound"
    );
    let parse_pair = |s: &str| -> Option<(f64, f64)> {
        let (a, b) = s.split_once("..")?;
        Some((a.parse().unwrap(), b.parse().unwrap()))
    };
    let rows: Vec<&str> = lines.collect();
    assert_eq!(rows.len(), table.rows.len());
    for (line, row) in rows.iter().zip(&table.rows) {
        let f: Vec<&str> = line.split(',').collect();
        assert_eq!(f.len(), 7);
        assert_eq!(f[0], if row.grh { "grh" } else { "unc" });
        assert_eq!(f[3].parse::<f64>().unwrap().to_bits(), row.lower_bound.to_bits());
        assert_eq!(f[6].parse::<f64>().unwrap().to_bits(), row.upper_bound.to_bits());
        assert_eq!(parse_pair(f[4]), row.lower_example);
        assert_eq!(parse_pair(f[5]), row.upper_example);
    }
}

#[test]
fn yamamura_example() {
    let r = cli(&["example", "yamamura", "--mode", "grh"]);
    assert_eq!(r.exit_code, EXIT_VIOLATION);
    assert_eq!(value_of(&r.stdout, "g"), "17.16493");
    assert_eq!(value_of(&r.stdout, "LHS"), "1.0013");
    assert!(r.stdout.contains("GRH-infeasible"));
}

#[test]
fn example_output() {
    let r = cli(&["example", "tr-quad15"]);
    assert_eq!(r.exit_code, EXIT_OK);
    assert_eq!(value_of(&r.stdout, "BS"), "1.0602 .. 1.0798");
    assert_eq!(value_of(&r.stdout, "kappa"), "0.1135 .. 0.1331");
    let r = cli(&["example", "hajir-maire"]);
    assert_eq!(r.exit_code, EXIT_OK);
    assert!(r.stdout.contains("deficiency <= 0.1410"));
}

#[test]
fn unknown_example() {
    let r = cli(&["example", "nowhere"]);
    assert_eq!(r.exit_code, EXIT_USAGE);
    assert!(r.stderr.contains("nowhere"));
}

#[test]
fn catalogue_runs_quickly() {
    let start = Instant::now();
    for ex in towers::catalogue::<f64>() {
        for mode in ["grh", "unc"] {
            let r = cli(&["example", &ex.id, "--mode", mode]);
            assert_ne!(r.exit_code, EXIT_USAGE, "{} {mode}: {}", ex.id, r.stderr);
        }
    }
    assert!(start.elapsed().as_secs_f64() < 5.0, "{:?}", start.elapsed());
    assert!(cli(&["catalogue"]).stdout.contains("martinet20"));
}

#[test]
fn density_of_zero_vector() {
    let dir = tempfile::tempdir().unwrap();
    let path = write_phi(&dir, "zero.phi", "kind: number\n");
    let p = path.to_str().unwrap();
    let r = cli(&["density", p, "--tmin", "-1", "--tmax", "1", "--n", "3"]);
    assert_eq!(r.exit_code, EXIT_OK, "{}", r.stderr);
    let (t, m) = parse_profile_csv::<f64>(&r.stdout).unwrap();
    assert_eq!(t, [-1.0, 0.0, 1.0]);
    assert_eq!(m, [1.0, 1.0, 1.0]);
}

#[test]
fn density_csv_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let ex = towers::example::<f64>("ihara8").unwrap();
    let phi = phi_from_unramified_tower(&ex).unwrap();
    let path = write_phi(&dir, "ihara.phi", &format_phi(&phi));
    let out = dir.path().join("profile.csv");
    let r = cli(&[
        "density",
        path.to_str().unwrap(),
        "--tmin",
        "-3",
        "--tmax",
        "7.5",
        "--n",
        "41",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(r.exit_code, EXIT_OK, "{}", r.stderr);
    assert!(r.stdout.is_empty());
    let text = std::fs::read_to_string(&out).unwrap();
    let (t, m) = parse_profile_csv::<f64>(&text).unwrap();
    let reparsed: Phi = infield::phi::parse_phi(&format_phi(&phi)).unwrap();
    let direct = density_profile(&reparsed, -3.0, 7.5, 41).unwrap();
    assert_eq!(t.iter().map(|x| x.to_bits()).collect::<Vec<_>>(), direct.t_values.iter().map(|x| x.to_bits()).collect::<Vec<_>>());
    assert_eq!(m.iter().map(|x| x.to_bits()).collect::<Vec<_>>(), direct.m_values.iter().map(|x| x.to_bits()).collect::<Vec<_>>());
}

#[test]
fn density_domain_error() {
    let dir = tempfile::tempdir().unwrap();
    let path = write_phi(&dir, "zero.phi", "kind: number\n");
    let r = cli(&["density", path.to_str().unwrap(), "--tmin", "1", "--tmax", "-1", "--n", "3"]);
    assert_eq!(r.exit_code, EXIT_USAGE);
}

#[test]
fn validate_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let ya = towers::example::<f64>("yamamura").unwrap();
    let path = write_phi(&dir, "ya.phi", &format_phi(&phi_from_unramified_tower(&ya).unwrap()));
    let p = path.to_str().unwrap();
    let r = cli(&["validate", p, "--mode", "grh"]);
    assert_eq!(r.exit_code, EXIT_VIOLATION);
    assert!(r.stdout.contains("basic-inequality[grh]"));
    assert_eq!(cli(&["validate", p, "--mode", "structural"]).exit_code, EXIT_OK);

    let bad = write_phi(&dir, "bad.phi", "kind: number\nphi 6: 0.1\n");
    assert_eq!(cli(&["validate", bad.to_str().unwrap()]).exit_code, EXIT_USAGE);
    let missing = dir.path().join("missing.phi");
    assert_eq!(cli(&["validate", missing.to_str().unwrap()]).exit_code, EXIT_USAGE);
}

#[test]
fn function_field_commands() {
    let r = cli(&["ff-bounds", "4"]);
    assert_eq!(value_of(&r.stdout, "lower"), "1.0000");
    assert_eq!(value_of(&r.stdout, "upper"), "1.2075");
    assert_eq!(cli(&["ff-bounds", "6"]).exit_code, EXIT_USAGE);

    let dir = tempfile::tempdir().unwrap();
    let path = write_phi(&dir, "ff.phi", "kind: function r=4\nphi 4: 1\n");
    let r = cli(&["ff-growth", path.to_str().unwrap(), "--mu", "0.2"]);
    assert_eq!(r.exit_code, EXIT_OK, "{}", r.stderr);
    assert_eq!(value_of(&r.stdout, "lambda"), "6.0000");
    assert_eq!(value_of(&r.stdout, "growth"), "0.3900");
    assert_eq!(value_of(&r.stdout, "mu0"), "0.3333");
    assert_eq!(cli(&["regulator", path.to_str().unwrap()]).exit_code, EXIT_USAGE);
}

#[test]
fn zeta_command() {
    let dir = tempfile::tempdir().unwrap();
    let path = write_phi(&dir, "zero.phi", "kind: number\n");
    let p = path.to_str().unwrap();
    let r = cli(&["zeta", p, "--s", "1", "--completed"]);
    assert_eq!(r.exit_code, EXIT_OK);
    assert_eq!(value_of(&r.stdout, "re").parse::<f64>().unwrap(), 1.0);
    let r = cli(&["zeta", p, "--s", "0.3"]);
    assert_eq!(r.exit_code, EXIT_USAGE);
}

#[test]
fn regulator_command() {
    let dir = tempfile::tempdir().unwrap();
    let m = towers::example::<f64>("martinet20").unwrap();
    let path = write_phi(&dir, "m.phi", &format_phi(&phi_from_unramified_tower(&m).unwrap()));
    let r = cli(&["regulator", path.to_str().unwrap()]);
    assert_eq!(r.exit_code, EXIT_OK);
    assert_eq!(value_of(&r.stdout, "BS"), "0.5939");
    assert_eq!(value_of(&r.stdout, "deficiency"), "0.1600");
}

#[test]
fn binary_round_trip() {
    let out = Command::new(env!("CARGO_BIN_EXE_infield"))
        .args(["bounds", "--mode", "unc", "--class", "real"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let stdout = String::from_utf8(out.stdout).unwrap();
    assert_eq!(value_of(&stdout, "lower"), "0.6625");
    let out = Command::new(env!("CARGO_BIN_EXE_infield"))
        .args(["bounds"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(EXIT_USAGE));
    assert!(out.stdout.is_empty());
}
