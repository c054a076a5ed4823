use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use spinorlab::algebra::{basis_change, FourMomentum};
use spinorlab::dirac::{spinor, DiracKind, Half, SpinorBasis};
use spinorlab::exec::Execution;
use spinorlab::majorana::{bispinor_boost, boosted_table, boosted_with_phases, ConjClass, Family};
use spinorlab::matrix::{vdiff, C64};
use spinorlab::report::{render_bundle_text, render_csv, render_text, ReportBundle, VerificationReport};
use spinorlab::suites::{run_all, run_suite, Suite, SuiteConfig};
use spinorlab::weinberg::{gamma5_6, u1_boosted, u1_printed, Rep6};
use spinorlab::{default_tolerance, Error};

#[derive(Parser)]
#[command(name = "spinorlab", version, about = "Spinor constructions and identity suites for spin-1/2 and spin-1 wave equations")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
    Csv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Kind {
    U,
    V,
    #[value(alias = "λ")]
    Lambda,
    #[value(alias = "ρ")]
    Rho,
    U1,
    V1,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Basis {
    Standard,
    Chiral,
    Helicity,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum ClassArg {
    S,
    A,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Model {
    Wth,
    Barut,
    Maxwell,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum SuiteArg {
    Dirac,
    Majorana,
    Fock,
    Maxwell,
    Weinberg,
    Modeexpand,
    All,
}

#[derive(Subcommand)]
enum Command {
    /// Print spinor components next to their closed-form reference values.
    Spinor {
        #[arg(long, value_enum)]
        kind: Kind,
        /// u/v: ±1/2 (or up/down); u1/v1: 1, 0, −1
        #[arg(long, allow_hyphen_values = true)]
        sigma: Option<String>,
        /// conjugation class for λ/ρ
        #[arg(long = "class", value_enum, ignore_case = true)]
        class: Option<ClassArg>,
        /// chiral helicity for λ/ρ: up or down
        #[arg(long)]
        eta: Option<String>,
        /// 3-momentum px,py,pz
        #[arg(long, allow_hyphen_values = true, value_parser = parse_vec3)]
        p: [f64; 3],
        #[arg(long)]
        m: f64,
        #[arg(long, value_enum, default_value = "chiral")]
        basis: Basis,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Run an identity suite over seeded random momenta; exit 1 if any identity fails.
    Verify {
        #[arg(long, value_enum)]
        suite: SuiteArg,
        #[arg(long, default_value_t = 1000)]
        samples: usize,
        #[arg(long, default_value_t = 7)]
        seed: u64,
        /// defaults to SPINORLAB_TOL or 1e-10
        #[arg(long)]
        tol: Option<f64>,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        /// include wall time in the report (makes output run-dependent)
        #[arg(long)]
        timing: bool,
        #[arg(long)]
        sequential: bool,
    },
    /// Roots of a dispersion determinant with their classification.
    Dispersion {
        #[arg(long, value_enum)]
        model: Model,
        #[arg(long = "A", allow_hyphen_values = true, default_value_t = 1.0)]
        a: f64,
        #[arg(long = "B", allow_hyphen_values = true, default_value_t = 2.0)]
        b: f64,
        /// Barut α and β
        #[arg(long, allow_hyphen_values = true, default_value_t = 0.0)]
        alpha: f64,
        #[arg(long, allow_hyphen_values = true, default_value_t = 1.0)]
        beta: f64,
        #[arg(long, allow_hyphen_values = true, value_parser = parse_vec3, default_value = "0,0,0")]
        p: [f64; 3],
        #[arg(long, default_value_t = 1.0)]
        m: f64,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Re-render a JSON report written by `verify`.
    Report {
        input: PathBuf,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
}

fn parse_vec3(s: &str) -> Result<[f64; 3], String> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    if parts.len() != 3 {
        return Err(format!("expected px,py,pz, got '{s}'"));
    }
    let mut out = [0.0; 3];
    for (o, t) in out.iter_mut().zip(parts) {
        *o = t.parse().map_err(|_| format!("not a number: '{t}'"))?;
    }
    Ok(out)
}

/// Failure modes mapped to exit codes.
enum Fail {
    Usage(String),
    Runtime(String),
}

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail::Runtime(e.to_string())
    }
}

fn usage(msg: impl Into<String>) -> Fail {
    Fail::Usage(msg.into())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Fail::Usage(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
        Err(Fail::Runtime(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(1)
        }
    }
}

fn run(cli: Cli) -> Result<bool, Fail> {
    match cli.command {
        Command::Spinor { kind, sigma, class, eta, p, m, basis, format } => {
            cmd_spinor(kind, sigma.as_deref(), class, eta.as_deref(), p, m, basis, format)
        }
        Command::Verify { suite, samples, seed, tol, format, timing, sequential } => {
            cmd_verify(suite, samples, seed, tol, format, timing, sequential)
        }
        Command::Dispersion { model, a, b, alpha, beta, p, m, format } => cmd_dispersion(model, a, b, alpha, beta, p, m, format),
        Command::Report { input, format } => cmd_report(&input, format),
    }
}

fn parse_half(s: &str) -> Result<Half, Fail> {
    match s {
        "+1/2" | "1/2" | "up" | "+" => Ok(Half::Up),
        "-1/2" | "down" | "-" => Ok(Half::Down),
        _ => Err(usage(format!("invalid spin-1/2 label '{s}' (use +1/2, -1/2, up, down)"))),
    }
}

fn parse_one(s: &str) -> Result<i8, Fail> {
    match s {
        "1" | "+1" => Ok(1),
        "0" => Ok(0),
        "-1" => Ok(-1),
        _ => Err(usage(format!("invalid spin-1 label '{s}' (use 1, 0, -1)"))),
    }
}

fn fmt_c(z: C64) -> String {
    format!("{:>14.9}{:+.9}i", z.re, z.im)
}

#[allow(clippy::too_many_arguments)]
fn cmd_spinor(
    kind: Kind,
    sigma: Option<&str>,
    class: Option<ClassArg>,
    eta: Option<&str>,
    p: [f64; 3],
    m: f64,
    basis: Basis,
    format: Format,
) -> Result<bool, Fail> {
    if !(m > 0.0) {
        return Err(usage("--m must be positive"));
    }
    let q = FourMomentum::new(m, p);
    let sbasis = match basis {
        Basis::Standard => SpinorBasis::Standard,
        Basis::Chiral => SpinorBasis::Chiral,
        Basis::Helicity => SpinorBasis::Helicity,
    };
    // (label, computed, closed-form reference, what the computation was)
    let (labels, computed, reference, method): (String, Vec<C64>, Option<Vec<C64>>, &str) = match kind {
        Kind::U | Kind::V => {
            let s = parse_half(sigma.ok_or_else(|| usage("--sigma is required for u/v"))?)?;
            let dk = if kind == Kind::U { DiracKind::U } else { DiracKind::V };
            let closed = spinor(&q, dk, s, sbasis)?.components.to_vec();
            let label = format!("{}_{}", if dk == DiracKind::U { "u" } else { "v" }, if s == Half::Up { "+1/2" } else { "-1/2" });
            if sbasis == SpinorBasis::Helicity {
                (label, closed, None, "helicity-basis construction, ūu = +1")
            } else {
                // Λ_R ⊕ Λ_L applied to the rest spinor, then mapped to the requested basis
                let rest = spinor(&FourMomentum::rest(m), dk, s, SpinorBasis::Chiral)?.components;
                let boosted = bispinor_boost(&q)?.apply(&rest);
                let built = match sbasis {
                    SpinorBasis::Standard => basis_change().apply(&boosted),
                    _ => boosted,
                };
                (label, built, Some(closed), "rest spinor boosted by Λ_R ⊕ Λ_L")
            }
        }
        Kind::Lambda | Kind::Rho => {
            if basis != Basis::Chiral {
                return Err(usage("λ/ρ spinors are defined in the chiral basis"));
            }
            let k = match class.ok_or_else(|| usage("--class is required for lambda/rho"))? {
                ClassArg::S => ConjClass::S,
                ClassArg::A => ConjClass::A,
            };
            let e = parse_half(eta.ok_or_else(|| usage("--eta is required for lambda/rho"))?)?;
            let fam = if kind == Kind::Lambda { Family::Lambda } else { Family::Rho };
            let built = boosted_with_phases(fam, k, e, &q, 0.0, 0.0)?;
            let table = boosted_table(fam, k, e, &q);
            let label = spinorlab::majorana::species_name(fam, k, e);
            (label, built.components.to_vec(), Some(table.to_vec()), "rest spinor boosted by Λ_R ⊕ Λ_L")
        }
        Kind::U1 | Kind::V1 => {
            let s = parse_one(sigma.ok_or_else(|| usage("--sigma is required for u1/v1"))?)?;
            let rep = match basis {
                Basis::Standard => Rep6::Standard,
                Basis::Chiral => Rep6::Chiral,
                Basis::Helicity => return Err(usage("u1/v1 support the standard and chiral representations")),
            };
            let mut built = u1_boosted(&q, s, rep)?.components.to_vec();
            let std = u1_printed(&q, s)?;
            let mut reference = match rep {
                Rep6::Standard => std.to_vec(),
                Rep6::Chiral => spinorlab::weinberg::rep6_change().adjoint().apply(&std),
            };
            let name = if kind == Kind::U1 { "u1" } else { "v1" };
            if kind == Kind::V1 {
                built = gamma5_6(rep).apply(&built);
                reference = gamma5_6(rep).apply(&reference);
            }
            (format!("{name}_{s}"), built, Some(reference), "(mΛ_R e_σ, mΛ_L e_σ)/√2")
        }
    };
    let max_diff = reference.as_ref().map(|r| vdiff(&computed, r));
    match format {
        Format::Json => {
            let v = json!({
                "spinor": labels,
                "p": p,
                "m": m,
                "basis": format!("{basis:?}").to_lowercase(),
                "method": method,
                "components": computed,
                "reference": reference,
                "max_diff": max_diff,
            });
            println!("{}", serde_json::to_string_pretty(&v).expect("serializable"));
        }
        Format::Text | Format::Csv => {
            if format == Format::Csv {
                println!("index,re,im,ref_re,ref_im");
            } else {
                println!("{labels}  p = ({}, {}, {})  m = {m}  basis = {basis:?}  [{method}]", p[0], p[1], p[2]);
            }
            for (i, z) in computed.iter().enumerate() {
                let r = reference.as_ref().map(|r| r[i]);
                if format == Format::Csv {
                    let (rr, ri) = r.map(|r| (r.re.to_string(), r.im.to_string())).unwrap_or_default();
                    println!("{i},{},{},{rr},{ri}", z.re, z.im);
                } else {
                    let rs = r.map(fmt_c).unwrap_or_else(|| "-".into());
                    println!("  [{i}] {}    reference {rs}", fmt_c(*z));
                }
            }
            if format == Format::Text {
                if let Some(d) = max_diff {
                    println!("  max |computed − reference| = {d:.3e}");
                }
            }
        }
    }
    Ok(true)
}

fn cmd_verify(
    suite: SuiteArg,
    samples: usize,
    seed: u64,
    tol: Option<f64>,
    format: Format,
    timing: bool,
    sequential: bool,
) -> Result<bool, Fail> {
    let tol = tol.unwrap_or_else(default_tolerance);
    if !(tol > 0.0) {
        return Err(usage("--tol must be positive"));
    }
    if samples == 0 {
        return Err(usage("--samples must be at least 1"));
    }
    let exec = if sequential { Execution::Sequential } else { Execution::Parallel };
    let cfg = SuiteConfig { seed, samples, tol, exec };
    let start = Instant::now();
    let single = match suite {
        SuiteArg::All => None,
        SuiteArg::Dirac => Some(Suite::Dirac),
        SuiteArg::Majorana => Some(Suite::Majorana),
        SuiteArg::Fock => Some(Suite::Fock),
        SuiteArg::Maxwell => Some(Suite::Maxwell),
        SuiteArg::Weinberg => Some(Suite::Weinberg),
        SuiteArg::Modeexpand => Some(Suite::ModeExpand),
    };
    let ms = || timing.then(|| start.elapsed().as_secs_f64() * 1e3);
    match single {
        Some(s) => {
            let mut r = run_suite(s, &cfg)?;
            r.timing_ms = ms();
            emit_report(&r, format);
            Ok(r.passed)
        }
        None => {
            let mut b = run_all(&cfg)?;
            b.timing_ms = ms();
            emit_bundle(&b, format);
            Ok(b.passed)
        }
    }
}

fn emit_report(r: &VerificationReport, format: Format) {
    match format {
        Format::Json => println!("{}", serde_json::to_string_pretty(r).expect("serializable")),
        Format::Text => print!("{}", render_text(r)),
        Format::Csv => print!("{}", render_csv(std::slice::from_ref(r))),
    }
}

fn emit_bundle(b: &ReportBundle, format: Format) {
    match format {
        Format::Json => println!("{}", serde_json::to_string_pretty(b).expect("serializable")),
        Format::Text => print!("{}", render_bundle_text(b)),
        Format::Csv => print!("{}", render_csv(&b.reports)),
    }
}

#[allow(clippy::too_many_arguments)]
fn cmd_dispersion(model: Model, a: f64, b: f64, alpha: f64, beta: f64, p: [f64; 3], m: f64, format: Format) -> Result<bool, Fail> {
    let pn = p.iter().map(|x| x * x).sum::<f64>().sqrt();
    let rows: Vec<Value> = match model {
        Model::Maxwell => {
            let mut rows = Vec::new();
            for sign in [1.0, -1.0] {
                let r = spinorlab::maxwell::rs_characteristic_roots(p, sign)?;
                for e in r.roots {
                    let class = if e.norm() <= 1e-9 * pn.max(1.0) { "acausal" } else if (e.norm() - pn).abs() <= 1e-9 * pn.max(1.0) { "relativistic" } else { "other" };
                    rows.push(json!({"branch": if sign > 0.0 { "E - S·p" } else { "E + S·p" }, "energy": e, "multiplicity": 1, "class": class}));
                }
            }
            rows
        }
        Model::Wth => {
            if !(m > 0.0) {
                return Err(usage("--m must be positive"));
            }
            let s = spinorlab::weinberg::dispersion_spectrum(a, b, p, m)?;
            let mut rows: Vec<Value> = s
                .roots
                .iter()
                .map(|r| {
                    let class = match r.class {
                        spinorlab::weinberg::RootClass::Relativistic => "relativistic",
                        spinorlab::weinberg::RootClass::Acausal => "acausal",
                        spinorlab::weinberg::RootClass::Other => "other",
                    };
                    json!({"energy": r.energy, "multiplicity": r.multiplicity, "class": class, "shell_defect": r.shell_defect})
                })
                .collect();
            rows.insert(0, json!({"degree": s.degree}));
            rows
        }
        Model::Barut => {
            if !(m > 0.0) {
                return Err(usage("--m must be positive"));
            }
            let s = spinorlab::dirac::barut_mass_spectrum(alpha, beta, m);
            let mut rows: Vec<Value> = s.roots.iter().map(|r| json!({"mass": r.mass, "branch": r.branch})).collect();
            if let Some(d) = s.diagnostic {
                rows.push(json!({"diagnostic": d}));
            }
            rows
        }
    };
    let head = json!({"model": format!("{model:?}").to_lowercase(), "p": p, "m": m, "A": a, "B": b, "alpha": alpha, "beta": beta});
    match format {
        Format::Json => println!("{}", serde_json::to_string_pretty(&json!({"query": head, "roots": rows})).expect("serializable")),
        Format::Text | Format::Csv => {
            if format == Format::Text {
                println!("{head}");
            }
            for r in rows {
                let obj = r.as_object().expect("row object");
                let cells: Vec<String> = obj
                    .iter()
                    .map(|(k, v)| match v.as_array() {
                        Some(z) if z.len() == 2 && k == "energy" => {
                            format!("{k}={}", fmt_c(C64::new(z[0].as_f64().unwrap_or(f64::NAN), z[1].as_f64().unwrap_or(f64::NAN))))
                        }
                        _ => format!("{k}={v}"),
                    })
                    .collect();
                println!("{}", cells.join(if format == Format::Csv { "," } else { "  " }));
            }
        }
    }
    Ok(true)
}

fn cmd_report(input: &PathBuf, format: Format) -> Result<bool, Fail> {
    let text = std::fs::read_to_string(input).map_err(|e| usage(format!("{}: {e}", input.display())))?;
    if let Ok(b) = serde_json::from_str::<ReportBundle>(&text) {
        emit_bundle(&b, format);
        return Ok(b.passed);
    }
    let r: VerificationReport = serde_json::from_str(&text).map_err(|e| usage(format!("not a report: {e}")))?;
    emit_report(&r, format);
    Ok(r.passed)
}
