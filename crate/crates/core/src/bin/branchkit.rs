use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use nalgebra::Matrix3;
use num_bigint::BigInt;
use num_rational::BigRational;
use serde_json::{json, Value};

use branchkit::escoh::pairing::cup_constants;
use branchkit::escoh::script_p::build_script_p;
use branchkit::geom::iwasawa_gl3;
use branchkit::glrep::{branch_audit, WeightGL3};
use branchkit::lfactors::{aux_constants, epsilon_exponent, gamma_factor, main_constant, PiParams};
use branchkit::orthrep::{cayley_so3, matrix_m, OrthWeight3};
use branchkit::verify::{run_suite_with, VerifyOptions};
use branchkit::{Error, Result};

#[derive(Parser)]
#[command(name = "branchkit", version, about = "Branching laws, archimedean cohomology and critical-value constants for GL(3) x GL(2)")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Ξ₂(w) and the dimension audit of the GL(3) model of weight w.
    Branch {
        #[arg(long)]
        w1p: i64,
        #[arg(long)]
        w1m: i64,
        #[arg(long, default_value_t = 0)]
        w2: i64,
    },
    /// Critical points, Hodge types and the constants at a critical point.
    Critical {
        #[arg(long)]
        l2: i64,
        #[arg(long)]
        l3: i64,
        #[arg(long, default_value_t = 0)]
        delta: u8,
        #[arg(long)]
        m: Option<i64>,
    },
    /// Archimedean L- and ε-factor data.
    Gamma {
        #[arg(long)]
        l2: i64,
        #[arg(long)]
        l3: i64,
        #[arg(long, default_value_t = 0)]
        delta: u8,
    },
    /// The matrix 𝒫 with polynomial entries.
    Pmatrix {
        #[arg(long)]
        lambda3: i64,
        #[arg(long, default_value_t = 0)]
        delta: u8,
    },
    /// The O(3) matrix M_λ(u) at the Cayley point with parameters a,b,c.
    Mmatrix {
        #[arg(long)]
        lambda: i64,
        #[arg(long, default_value_t = 0)]
        delta: u8,
        /// Rational Cayley parameters, e.g. `1/2,0,-1`.
        #[arg(long, default_value = "1,0,0")]
        cayley: String,
    },
    /// Iwasawa coordinates of a real 3x3 matrix given row by row.
    Iwasawa {
        /// Nine comma-separated entries.
        #[arg(long, allow_hyphen_values = true)]
        matrix: String,
        #[arg(long, default_value_t = 1e-12)]
        tol: f64,
    },
    /// Parity and scalar of the main identity.
    Constant {
        #[arg(long)]
        l2: i64,
        #[arg(long)]
        l3: i64,
        #[arg(long, default_value_t = 0)]
        delta: u8,
        #[arg(long)]
        m: i64,
    },
    /// Runs a verification suite: glrep, orthrep, escoh, geom, lfactors or all.
    Verify {
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, default_value_t = 3)]
        max_weight: i64,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long)]
        json: Option<PathBuf>,
        #[arg(long, default_value_t = 1e-10)]
        tol: f64,
        /// Include the elapsed time in the report.
        #[arg(long)]
        timing: bool,
    },
}

fn parse_rational(s: &str) -> Result<BigRational> {
    let t = s.trim();
    let parse = |x: &str| x.trim().parse::<BigInt>().map_err(|e| Error::Parse(format!("`{x}`: {e}")));
    match t.split_once('/') {
        Some((n, d)) => {
            let d = parse(d)?;
            if d == BigInt::from(0) {
                return Err(Error::DivisionByZero);
            }
            Ok(BigRational::new(parse(n)?, d))
        }
        None => Ok(BigRational::from_integer(parse(t)?)),
    }
}

fn strings(rows: usize, cols: usize, f: impl Fn(usize, usize) -> String) -> Value {
    Value::from((0..rows).map(|r| (0..cols).map(|c| f(r, c)).collect::<Vec<_>>()).collect::<Vec<_>>())
}

fn run(cmd: Command) -> Result<(Value, u8)> {
    match cmd {
        Command::Branch { w1p, w1m, w2 } => {
            let a = branch_audit(&WeightGL3::new(w1p, w1m, w2)?)?;
            Ok((serde_json::to_value(a).map_err(|e| Error::Io(e.to_string()))?, 0))
        }
        Command::Critical { l2, l3, delta, m } => {
            let pp = PiParams::new(l2, l3, delta)?;
            let mut out = json!({
                "m": pp.critical_points(),
                "by_poles": pp.critical_points_by_poles(),
                "by_hodge": pp.critical_points_by_hodge(),
            });
            if let Some(m) = m {
                out["hodge_types"] = json!(pp.hodge_types(m));
                out["critical"] = json!(pp.is_critical(m));
                if pp.is_critical(m) {
                    out["main_constant"] = json!(main_constant(&pp, m)?);
                    out["aux_constants"] = json!(aux_constants(&pp, m)?);
                    out["cup_constants"] = json!(cup_constants(l3 + 1, delta, l2, m)?);
                }
            }
            Ok((out, 0))
        }
        Command::Gamma { l2, l3, delta } => {
            let pp = PiParams::new(l2, l3, delta)?;
            let entry = |p: &branchkit::lfactors::WeilParameter| {
                json!({ "parameter": p.to_string(), "l_infinity": gamma_factor(p).to_string(), "epsilon_exponent": epsilon_exponent(p) })
            };
            Ok((
                json!({
                    "pi2": entry(&pp.phi2()),
                    "pi3": entry(&pp.phi3()),
                    "pair": entry(&pp.phi_pair()),
                    "motivic": pp.motivic_gamma().to_string(),
                }),
                0,
            ))
        }
        Command::Pmatrix { lambda3, delta } => {
            let sp = build_script_p(lambda3, delta)?;
            let m = sp.matrix();
            Ok((
                json!({
                    "lambda3": lambda3,
                    "delta": delta,
                    "alpha": (-lambda3..=lambda3).rev().collect::<Vec<_>>(),
                    "beta": (-3..=3).rev().collect::<Vec<i64>>(),
                    "entries": strings(m.rows(), m.cols(), |r, c| m.get(r, c).to_string()),
                }),
                0,
            ))
        }
        Command::Mmatrix { lambda, delta, cayley } => {
            let parts: Vec<BigRational> = cayley.split(',').map(parse_rational).collect::<Result<_>>()?;
            let [a, b, c] = parts.as_slice() else {
                return Err(Error::Usage("--cayley expects three rationals a,b,c".into()));
            };
            let u = cayley_so3(a, b, c);
            let m = matrix_m(&OrthWeight3::new(lambda, delta)?, &u)?;
            Ok((
                json!({
                    "u": strings(3, 3, |r, c| u.get(r, c).to_string()),
                    "m": strings(m.rows(), m.cols(), |r, c| m.get(r, c).to_string()),
                }),
                0,
            ))
        }
        Command::Iwasawa { matrix, tol } => {
            let v: Vec<f64> = matrix
                .split(',')
                .map(|s| s.trim().parse::<f64>().map_err(|e| Error::Parse(format!("`{s}`: {e}"))))
                .collect::<Result<_>>()?;
            if v.len() != 9 {
                return Err(Error::Usage(format!("--matrix expects 9 entries, got {}", v.len())));
            }
            let d = iwasawa_gl3(&Matrix3::from_row_slice(&v), tol)?;
            Ok((serde_json::to_value(d).map_err(|e| Error::Io(e.to_string()))?, 0))
        }
        Command::Constant { l2, l3, delta, m } => {
            let c = main_constant(&PiParams::new(l2, l3, delta)?, m)?;
            Ok((serde_json::to_value(c).map_err(|e| Error::Io(e.to_string()))?, 0))
        }
        Command::Verify { suite, max_weight, seed, json, tol, timing } => {
            let opts = VerifyOptions { max_weight, seed, tol, timing };
            let report = run_suite_with(&suite, &opts, json.as_deref())?;
            let code = report.exit_code() as u8;
            Ok((serde_json::to_value(report).map_err(|e| Error::Io(e.to_string()))?, code))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok((value, code)) => match writeln!(std::io::stdout().lock(), "{value}") {
            Ok(()) => ExitCode::from(code),
            Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => ExitCode::from(code),
            Err(e) => {
                eprintln!("error: {e}");
                ExitCode::from(1)
            }
        },
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::Io(_) => ExitCode::from(1),
                _ => ExitCode::from(2),
            }
        }
    }
}
