//! Batch driver: runs the invariant suites, evaluates transforms and
//! expansions from JSON job files, and emits deterministic CSV/JSON
//! artifacts. Point evaluations run concurrently (capped by `R11_THREADS`);
//! output rows keep the input order.

mod jobs;
mod output;

use clap::{Parser, Subcommand};
use jobs::{JobSpec, SchemaError};
use num_complex::Complex64;
use output::{fmt_f64, CsvWriter};
use r11_core::moebius::{circle_point, BranchCoord, Sheet, TildePoint};
use r11_core::taylor;
use r11_core::transforms::{cauchy_disk, cauchy_tilde_pv, kernel_tilde};
use r11_core::verify;
use r11_core::Error as CoreError;
use rayon::prelude::*;
use std::path::{Path, PathBuf};

const EXIT_OK: i32 = 0;
const EXIT_CHECK_FAILED: i32 = 1;
const EXIT_SCHEMA: i32 = 2;
const EXIT_DIVERGED: i32 = 3;

#[derive(Parser)]
#[command(name = "r11", about = "Verification and evaluation driver for the two disk function theories")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Run invariant suites and print a JSON report.
    Verify {
        /// Suite name (clifford, moebius, representations, transforms,
        /// operators, taylor, experiments) or "all".
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, default_value_t = 42)]
        seed: u64,
    },
    /// Evaluate a transform or expansion job and write CSV.
    Transform {
        #[arg(long)]
        job: PathBuf,
        /// Override a job parameter, e.g. --param sigma=0.5.
        #[arg(long = "param", value_parser = parse_override)]
        params: Vec<(String, String)>,
    },
    /// Write kernel or geometry sample dumps.
    Dump {
        #[arg(long)]
        kind: String,
        #[arg(long)]
        job: PathBuf,
        #[arg(long = "param", value_parser = parse_override)]
        params: Vec<(String, String)>,
    },
}

fn parse_override(s: &str) -> Result<(String, String), String> {
    match s.split_once('=') {
        Some((k, v)) => Ok((k.trim().to_string(), v.trim().to_string())),
        None => Err("override must have the form key=value".into()),
    }
}

fn main() {
    init_thread_pool();
    let cli = Cli::parse();
    let code = match cli.cmd {
        Cmd::Verify { suite, seed } => cmd_verify(&suite, seed),
        Cmd::Transform { job, params } => cmd_job(&job, &params, None),
        Cmd::Dump { kind, job, params } => cmd_job(&job, &params, Some(kind)),
    };
    std::process::exit(code);
}

fn init_thread_pool() {
    if let Ok(v) = std::env::var("R11_THREADS") {
        if let Ok(n) = v.parse::<usize>() {
            if n >= 1 {
                let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
            }
        }
    }
}

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------

fn cmd_verify(suite: &str, seed: u64) -> i32 {
    if suite == "experiments" {
        let lines = verify::experiments(seed);
        let report = serde_json::json!({ "seed": seed, "experiments": lines });
        println!("{}", serde_json::to_string_pretty(&report).expect("serializable"));
        return EXIT_OK;
    }
    let reports = match verify::run_suite(suite, seed) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_SCHEMA;
        }
    };
    let all_pass = reports.iter().all(|r| r.pass());
    let suites: Vec<serde_json::Value> = reports
        .iter()
        .map(|r| {
            let mut entry = serde_json::json!({
                "suite": r.suite,
                "pass": r.pass(),
                "checks": r.checks.iter()
                    .map(|c| output::check_json(&c.name, c.max_error, c.tolerance, c.pass))
                    .collect::<Vec<_>>(),
            });
            if r.suite == "operators" {
                if let Some(rr) = operators_residual_report(seed) {
                    entry["residual_report"] =
                        serde_json::from_str(&rr).unwrap_or(serde_json::Value::Null);
                }
            }
            entry
        })
        .collect();
    let report = serde_json::json!({ "seed": seed, "suites": suites, "pass": all_pass });
    println!("{}", serde_json::to_string_pretty(&report).expect("serializable"));
    if all_pass {
        EXIT_OK
    } else {
        EXIT_CHECK_FAILED
    }
}

/// Annihilation-residual report attached to the operators suite: the Dirac
/// residual of the analytic extension of polynomial boundary data over a
/// seeded grid of interior points.
fn operators_residual_report(seed: u64) -> Option<String> {
    use r11_core::boundary::CircleFunction;
    use r11_core::transforms::QuadratureSpec;
    let mut rng = r11_core::sampling::rng_from_seed(seed ^ 0x6f70);
    let q = QuadratureSpec { n: 1024, ..Default::default() };
    let f = CircleFunction::from_fn(1024, |phi| {
        Complex64::from_polar(1.0, 2.0 * phi) + Complex64::from_polar(0.5, phi)
    });
    let pts: Vec<Complex64> =
        (0..6).map(|_| r11_core::sampling::disk_point(&mut rng, 0.8)).collect();
    r11_core::operators::annihilation_residual_disk(&f, &pts, &q, 1e-4)
        .ok()
        .map(|r| r.to_json())
}

// ---------------------------------------------------------------------------
// jobs
// ---------------------------------------------------------------------------

fn cmd_job(path: &Path, overrides: &[(String, String)], dump_kind: Option<String>) -> i32 {
    let text = match std::fs::read_to_string(path) {
        Ok(t) => t,
        Err(e) => {
            eprintln!("error: cannot read job file {}: {e}", path.display());
            return EXIT_SCHEMA;
        }
    };
    let job = match jobs::parse_job(&text, overrides) {
        Ok(j) => j,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_SCHEMA;
        }
    };
    if let Some(kind) = &dump_kind {
        let expected = format!("{kind}-dump");
        if job.command != expected {
            eprintln!(
                "error: dump kind '{kind}' does not match job command '{}'",
                job.command
            );
            return EXIT_SCHEMA;
        }
    }
    let r = match job.command.as_str() {
        "cauchy-disk" => run_cauchy_disk(&job),
        "cauchy-r11" => run_cauchy_r11(&job),
        "taylor" => run_taylor(&job),
        "kernel-dump" => run_kernel_dump(&job),
        "geometry-dump" => run_geometry_dump(&job),
        other => {
            eprintln!("error: command '{other}' is not runnable via this verb");
            return EXIT_SCHEMA;
        }
    };
    match r {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            EXIT_SCHEMA
        }
    }
}

fn run_cauchy_disk(job: &JobSpec) -> Result<i32, SchemaError> {
    let n = job.usize_param("n", Some(2048))?;
    let f = job.circle_boundary(n)?;
    let points = job.complex_points("points")?;
    let q = job.quadrature()?;
    let out_path = PathBuf::from(job.str_param("output")?);

    let rows: Vec<Vec<String>> = points
        .par_iter()
        .map(|&a| match cauchy_disk(&f, a, &q) {
            Ok(r) => vec![
                fmt_f64(a.re),
                fmt_f64(a.im),
                fmt_f64(r.value.re),
                fmt_f64(r.value.im),
                fmt_f64(r.normalized.re),
                fmt_f64(r.normalized.im),
                fmt_f64(r.quadrature_error_estimate),
                flags_field(&r.flags, false),
            ],
            Err(e) => vec![
                fmt_f64(a.re),
                fmt_f64(a.im),
                fmt_f64(0.0),
                fmt_f64(0.0),
                fmt_f64(0.0),
                fmt_f64(0.0),
                fmt_f64(0.0),
                error_flag(&e),
            ],
        })
        .collect();

    let mut w = CsvWriter::create(
        &out_path,
        "index,a_re,a_im,value_re,value_im,normalized_re,normalized_im,error_estimate,flags",
    )
    .map_err(|e| SchemaError(format!("cannot write {}: {e}", out_path.display())))?;
    let mut failed = 0usize;
    for (i, row) in rows.iter().enumerate() {
        if row[7].starts_with("error") {
            failed += 1;
        }
        let mut fields = vec![i.to_string()];
        fields.extend(row.iter().cloned());
        w.row(&fields).map_err(|e| SchemaError(e.to_string()))?;
    }
    w.finish().map_err(|e| SchemaError(e.to_string()))?;
    Ok(if !rows.is_empty() && failed == rows.len() { EXIT_DIVERGED } else { EXIT_OK })
}

fn run_cauchy_r11(job: &JobSpec) -> Result<i32, SchemaError> {
    let sigma = job.f64_param("sigma", Some(0.0))?;
    let q = job.quadrature()?;
    let n = job.usize_param("n_per_branch", Some(513))?;
    let t_max = job.f64_param("t_max", Some(q.t_max))?;
    let f = job.tilde_boundary(n, t_max)?;
    let points = job.tilde_points("points")?;
    let out_path = PathBuf::from(job.str_param("output")?);

    let rows: Vec<(Vec<String>, bool)> = points
        .par_iter()
        .map(|u| {
            let sheet = match u.sheet {
                Sheet::Plus => "plus",
                Sheet::Minus => "minus",
            };
            match cauchy_tilde_pv(sigma, &f, u, &q) {
                Ok(r) => (
                    vec![
                        fmt_f64(u.u.u1),
                        fmt_f64(u.u.u2),
                        sheet.to_string(),
                        fmt_f64(r.value.a1),
                        fmt_f64(r.value.a2),
                        fmt_f64(r.normalized.a1),
                        fmt_f64(r.normalized.a2),
                        fmt_f64(r.quadrature_error_estimate),
                        fmt_f64(r.pv_epsilon),
                        flags_field(&r.flags, true),
                    ],
                    false,
                ),
                Err(e) => (
                    vec![
                        fmt_f64(u.u.u1),
                        fmt_f64(u.u.u2),
                        sheet.to_string(),
                        fmt_f64(0.0),
                        fmt_f64(0.0),
                        fmt_f64(0.0),
                        fmt_f64(0.0),
                        fmt_f64(0.0),
                        fmt_f64(0.0),
                        error_flag(&e),
                    ],
                    true,
                ),
            }
        })
        .collect();

    let mut w = CsvWriter::create(
        &out_path,
        "index,u1,u2,sheet,value_p1,value_p2,normalized_p1,normalized_p2,error_estimate,pv_epsilon,flags",
    )
    .map_err(|e| SchemaError(format!("cannot write {}: {e}", out_path.display())))?;
    let mut failed = 0usize;
    for (i, (row, bad)) in rows.iter().enumerate() {
        if *bad {
            failed += 1;
        }
        let mut fields = vec![i.to_string()];
        fields.extend(row.iter().cloned());
        w.row(&fields).map_err(|e| SchemaError(e.to_string()))?;
    }
    w.finish().map_err(|e| SchemaError(e.to_string()))?;
    Ok(if !rows.is_empty() && failed == rows.len() { EXIT_DIVERGED } else { EXIT_OK })
}

fn run_taylor(job: &JobSpec) -> Result<i32, SchemaError> {
    let mode = job.str_param("mode")?.to_string();
    let out_path = PathBuf::from(job.str_param("output")?);
    match mode.as_str() {
        "classical" => {
            let a = job.complex_points("a").and_then(|v| {
                v.into_iter().next().ok_or_else(|| SchemaError("param 'a' empty".into()))
            });
            // accept either [[re,im]] or [re,im]
            let a = match a {
                Ok(a) => a,
                Err(_) => {
                    let arr = job.params.get("a").and_then(serde_json::Value::as_array).ok_or_else(
                        || SchemaError("param 'a' must be [re, im] or [[re, im]]".into()),
                    )?;
                    if arr.len() != 2 {
                        return Err(SchemaError("param 'a' must be [re, im]".into()));
                    }
                    Complex64::new(
                        arr[0].as_f64().ok_or_else(|| SchemaError("non-numeric a".into()))?,
                        arr[1].as_f64().ok_or_else(|| SchemaError("non-numeric a".into()))?,
                    )
                }
            };
            let phi = job.f64_param("phi", Some(0.0))?;
            let n_max = job.usize_param("n_max", Some(30))?;
            let sums = taylor::classical_partial_sums(a, phi, n_max)
                .map_err(|e| SchemaError(e.to_string()))?;
            let mut w = CsvWriter::create(&out_path, "n,coeff_re,coeff_im,partial_re,partial_im")
                .map_err(|e| SchemaError(e.to_string()))?;
            for (i, s) in sums.iter().enumerate() {
                let c = taylor::classical_coefficient(a, i + 1)
                    .map_err(|e| SchemaError(e.to_string()))?;
                w.row(&[
                    (i + 1).to_string(),
                    fmt_f64(c.re),
                    fmt_f64(c.im),
                    fmt_f64(s.re),
                    fmt_f64(s.im),
                ])
                .map_err(|e| SchemaError(e.to_string()))?;
            }
            w.finish().map_err(|e| SchemaError(e.to_string()))?;
            Ok(EXIT_OK)
        }
        "laplace" => {
            let a = job.f64_param("a", None)?;
            let k = job.f64_param("k", Some(1.0))?;
            let t = job.f64_param("t", None)?;
            let (lhs, rhs) = match taylor::laplace_table_check(a, k, t) {
                Ok(v) => v,
                Err(CoreError::Convergence) => {
                    eprintln!("error: (a, k, t) outside the convergence region");
                    return Ok(EXIT_DIVERGED);
                }
                Err(e) => return Err(SchemaError(e.to_string())),
            };
            let mut w = CsvWriter::create(&out_path, "a,k,t,lhs,rhs,abs_diff")
                .map_err(|e| SchemaError(e.to_string()))?;
            w.row(&[
                fmt_f64(a),
                fmt_f64(k),
                fmt_f64(t),
                fmt_f64(lhs),
                fmt_f64(rhs),
                fmt_f64((lhs - rhs).abs()),
            ])
            .map_err(|e| SchemaError(e.to_string()))?;
            w.finish().map_err(|e| SchemaError(e.to_string()))?;
            Ok(EXIT_OK)
        }
        "hyperbolic" | "geometric" => {
            let u = job
                .tilde_points("points")?
                .into_iter()
                .next()
                .ok_or_else(|| SchemaError("param 'points' needs one cover point".into()))?;
            let t = job.f64_param("t", None)?;
            if mode == "hyperbolic" {
                let e = match taylor::hyperbolic_expand(&u, t) {
                    Ok(e) => e,
                    Err(CoreError::Convergence) | Err(CoreError::NonInvertible) => {
                        eprintln!("error: (u, t) outside the decomposition's convergence region");
                        return Ok(EXIT_DIVERGED);
                    }
                    Err(e) => return Err(SchemaError(e.to_string())),
                };
                let k = kernel_tilde(&u, &BranchCoord::new(0, t), 0.0)
                    .map_err(|e| SchemaError(e.to_string()))?;
                let mut w = CsvWriter::create(
                    &out_path,
                    "t,value_p1,value_p2,kernel_p1,kernel_p2,truncation_estimate",
                )
                .map_err(|e| SchemaError(e.to_string()))?;
                w.row(&[
                    fmt_f64(t),
                    fmt_f64(e.value.a1),
                    fmt_f64(e.value.a2),
                    fmt_f64(k.a1),
                    fmt_f64(k.a2),
                    fmt_f64(e.truncation_estimate),
                ])
                .map_err(|e| SchemaError(e.to_string()))?;
                w.finish().map_err(|e| SchemaError(e.to_string()))?;
            } else {
                let terms = job.usize_param("terms", Some(50))?;
                let g = match taylor::geometric_expand(&u, t, terms) {
                    Ok(g) => g,
                    Err(CoreError::Convergence) => {
                        eprintln!("error: (u, t) outside the geometric region");
                        return Ok(EXIT_DIVERGED);
                    }
                    Err(e) => return Err(SchemaError(e.to_string())),
                };
                let mut w = CsvWriter::create(&out_path, "j,partial_p1,partial_p2,ratio")
                    .map_err(|e| SchemaError(e.to_string()))?;
                for (j, s) in g.partial_sums.iter().enumerate() {
                    w.row(&[j.to_string(), fmt_f64(s.a1), fmt_f64(s.a2), fmt_f64(g.ratio)])
                        .map_err(|e| SchemaError(e.to_string()))?;
                }
                w.finish().map_err(|e| SchemaError(e.to_string()))?;
            }
            Ok(EXIT_OK)
        }
        "mellin" => {
            let q = job.quadrature()?;
            let n = job.usize_param("n_per_branch", Some(513))?;
            let t_max = job.f64_param("t_max", Some(q.t_max))?;
            let f = job.tilde_boundary(n, t_max)?;
            let p_grid = job
                .params
                .get("p_grid")
                .and_then(serde_json::Value::as_array)
                .ok_or_else(|| SchemaError("mellin mode needs array param 'p_grid'".into()))?
                .iter()
                .map(|v| v.as_f64().ok_or_else(|| SchemaError("non-numeric p".into())))
                .collect::<Result<Vec<f64>, _>>()?;
            let mut w = CsvWriter::create(&out_path, "p,value_p1,value_p2")
                .map_err(|e| SchemaError(e.to_string()))?;
            for p in p_grid {
                let c = taylor::mellin_coefficient(&f, p);
                w.row(&[fmt_f64(p), fmt_f64(c.a1), fmt_f64(c.a2)])
                    .map_err(|e| SchemaError(e.to_string()))?;
            }
            w.finish().map_err(|e| SchemaError(e.to_string()))?;
            Ok(EXIT_OK)
        }
        other => Err(SchemaError(format!("unknown taylor mode '{other}'"))),
    }
}

fn run_kernel_dump(job: &JobSpec) -> Result<i32, SchemaError> {
    let u_arr = job
        .params
        .get("u")
        .and_then(serde_json::Value::as_array)
        .filter(|a| a.len() == 2)
        .ok_or_else(|| SchemaError("kernel dump needs param 'u' = [u1, u2]".into()))?;
    let u1 = u_arr[0].as_f64().ok_or_else(|| SchemaError("non-numeric u1".into()))?;
    let u2 = u_arr[1].as_f64().ok_or_else(|| SchemaError("non-numeric u2".into()))?;
    let sheet = job.sheet_param("sheet", Sheet::Plus)?;
    let u = TildePoint::new(sheet, r11_core::clifford::Vector11::new(u1, u2));
    let sigma = job.f64_param("sigma", Some(0.0))?;
    let (t_lo, t_hi) = t_range(job, -3.0, 3.0)?;
    let count = job.usize_param("count", Some(100))?;
    if count < 2 {
        return Err(SchemaError("count must be at least 2".into()));
    }
    let out_path = PathBuf::from(job.str_param("output")?);

    let mut w = CsvWriter::create(&out_path, "branch,t,value_p1,value_p2")
        .map_err(|e| SchemaError(format!("cannot write {}: {e}", out_path.display())))?;
    for b in 0..4u8 {
        for i in 0..count {
            let t = t_lo + (t_hi - t_lo) * i as f64 / (count - 1) as f64;
            let (p1, p2) = match kernel_tilde(&u, &BranchCoord::new(b, t), sigma) {
                Ok(k) => (k.a1, k.a2),
                Err(_) => (f64::NAN, f64::NAN),
            };
            let p1s = if p1.is_nan() { "singular".to_string() } else { fmt_f64(p1) };
            let p2s = if p2.is_nan() { "singular".to_string() } else { fmt_f64(p2) };
            w.row(&[b.to_string(), fmt_f64(t), p1s, p2s])
                .map_err(|e| SchemaError(e.to_string()))?;
        }
    }
    w.finish().map_err(|e| SchemaError(e.to_string()))?;
    Ok(EXIT_OK)
}

fn run_geometry_dump(job: &JobSpec) -> Result<i32, SchemaError> {
    let lambda = job.f64_param("lambda", None)?;
    let count = job.usize_param("points_per_branch", Some(100))?;
    if count < 2 {
        return Err(SchemaError("points_per_branch must be at least 2".into()));
    }
    let (t_lo, t_hi) = t_range(job, -3.0, 3.0)?;
    let out_path = PathBuf::from(job.str_param("output")?);

    let mut w = CsvWriter::create(&out_path, "branch,t,sheet,u1,u2")
        .map_err(|e| SchemaError(format!("cannot write {}: {e}", out_path.display())))?;
    for b in 0..4u8 {
        for i in 0..count {
            let t = t_lo + (t_hi - t_lo) * i as f64 / (count - 1) as f64;
            let p = circle_point(lambda, &BranchCoord::new(b, t))
                .map_err(|e| SchemaError(e.to_string()))?;
            let sheet = match p.sheet {
                Sheet::Plus => "plus",
                Sheet::Minus => "minus",
            };
            w.row(&[
                b.to_string(),
                fmt_f64(t),
                sheet.to_string(),
                fmt_f64(p.u.u1),
                fmt_f64(p.u.u2),
            ])
            .map_err(|e| SchemaError(e.to_string()))?;
        }
    }
    w.finish().map_err(|e| SchemaError(e.to_string()))?;
    Ok(EXIT_OK)
}

fn t_range(job: &JobSpec, lo: f64, hi: f64) -> Result<(f64, f64), SchemaError> {
    match job.params.get("t_range") {
        Some(v) => {
            let arr = v
                .as_array()
                .filter(|a| a.len() == 2)
                .ok_or_else(|| SchemaError("t_range must be [lo, hi]".into()))?;
            let a = arr[0].as_f64().ok_or_else(|| SchemaError("non-numeric t_range".into()))?;
            let b = arr[1].as_f64().ok_or_else(|| SchemaError("non-numeric t_range".into()))?;
            if b <= a {
                return Err(SchemaError("t_range must be increasing".into()));
            }
            Ok((a, b))
        }
        None => Ok((lo, hi)),
    }
}

fn flags_field(flags: &[r11_core::transforms::TransformFlag], _tilde: bool) -> String {
    if flags.is_empty() {
        "ok".to_string()
    } else {
        flags.iter().map(|f| f.to_string()).collect::<Vec<_>>().join(";")
    }
}

fn error_flag(e: &CoreError) -> String {
    match e {
        CoreError::PvDivergence => "error:pv-divergence".to_string(),
        CoreError::OutOfDomain => "error:out-of-domain".to_string(),
        other => format!("error:{other}"),
    }
}
