//! Thin command-line front end over the library. All mathematics lives in
//! the crate; this binary parses arguments, loads JSON inputs, and writes
//! deterministic reports.
//!
//! Exit codes: 0 success, 1 a verified claim is false, 2 usage or resource
//! errors.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use sdlab::complex::FaceVector;
use sdlab::json::{decimal_string, rational_string, ComplexJson, PhiJson};
use sdlab::measures::{
    block_density, converge_gamma, fp_delta_report, link_density, phi_mc_integral,
    ConvergenceReport, DensityReport, PolynomialObservable,
};
use sdlab::poly::rat;
use sdlab::spectral::{limit_root_report, q_partition, q_solve, LambdaMatrix};
use sdlab::subdivision::iterate_subdivision;
use sdlab::theorems::{
    asymptotic_dehn_sommerville, chi_at_minus_half, dehn_sommerville, macdonald_symmetry,
    sphere_root_analysis, Residual, VerifierReport,
};
use sdlab::{EmbeddedComplex, Rational, SimplicialComplex};

const DECIMAL_DIGITS: usize = 12;

#[derive(Parser)]
#[command(name = "sdlab", version, about = "Exact barycentric-subdivision laboratory")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum, PartialEq)]
enum Format {
    Json,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum EmitKind {
    Faces,
    Fvector,
}

#[derive(Clone, Copy, ValueEnum)]
enum LambdaForm {
    Recursive,
    Closed,
}

#[derive(Clone, Copy, ValueEnum)]
enum QMethod {
    Solve,
    Partition,
}

#[derive(Clone, Copy, ValueEnum)]
enum Claim {
    Macdonald,
    ChiHalf,
    Ds,
    AsymptoticDs,
    SphereRoots,
}

#[derive(Clone, Copy, ValueEnum)]
enum Harness {
    Gamma,
    Links,
    Blocks,
    FpDelta,
}

#[derive(Args)]
struct OutputArgs {
    /// Output format
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
    /// Write to a file instead of stdout
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Subdivide a complex and emit its faces or face vector
    Subdivide {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        depth: usize,
        #[arg(long, value_enum, default_value = "fvector")]
        emit: EmitKind,
        /// Ceiling on enumerated cells (env SDLAB_MAX_CELLS overrides the default)
        #[arg(long)]
        max_cells: Option<u64>,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Face vector of a complex, optionally after subdividing
    Fvector {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, default_value_t = 0)]
        depth: usize,
        #[arg(long)]
        max_cells: Option<u64>,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// The interior-face-count matrix
    Lambda {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "recursive")]
        form: LambdaForm,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Limit coefficients of the face vector under deep subdivision
    Qcoeffs {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "solve")]
        method: QMethod,
        /// Also isolate the roots of the limit polynomial
        #[arg(long)]
        check_roots: bool,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Run an identity verifier; exits 1 when the claim fails
    Verify {
        #[arg(long, value_enum)]
        claim: Claim,
        /// Complex input (for the per-complex claims)
        #[arg(long)]
        input: Option<PathBuf>,
        /// Dimension (for the per-dimension claims)
        #[arg(long)]
        n: Option<usize>,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Convergence harnesses for the subdivision measures
    Converge {
        #[arg(long, value_enum)]
        harness: Harness,
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        p: usize,
        #[arg(long, default_value_t = 1)]
        dmin: usize,
        #[arg(long)]
        dmax: usize,
        /// Observable JSON; defaults to the constant function 1
        #[arg(long)]
        phi: Option<PathBuf>,
        #[arg(long)]
        max_cells: Option<u64>,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Monte Carlo integration through random chart words
    Sample {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        depth: usize,
        #[arg(long)]
        samples: usize,
        #[arg(long)]
        phi: Option<PathBuf>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// The shipped corpus of named complexes
    Corpus {
        #[command(subcommand)]
        action: CorpusAction,
    },
}

#[derive(Subcommand)]
enum CorpusAction {
    /// List the shipped names
    List,
    /// Write the canonical JSON for a named complex
    Emit {
        name: String,
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn resolve_cap(flag: Option<u64>) -> u64 {
    flag.or_else(|| {
        std::env::var("SDLAB_MAX_CELLS")
            .ok()
            .and_then(|s| s.parse().ok())
    })
    .unwrap_or(sdlab::DEFAULT_MAX_CELLS)
}

fn load_complex(path: &PathBuf) -> Result<ComplexJson, Box<dyn std::error::Error>> {
    let text = fs::read_to_string(path)?;
    Ok(serde_json::from_str(&text)?)
}

fn load_phi(
    path: &Option<PathBuf>,
    ambient: usize,
) -> Result<PolynomialObservable, Box<dyn std::error::Error>> {
    match path {
        Some(p) => {
            let text = fs::read_to_string(p)?;
            let phi: PhiJson = serde_json::from_str(&text)?;
            Ok(phi.to_observable()?)
        }
        None => Ok(PolynomialObservable::constant(
            ambient,
            Rational::from_integer(1.into()),
        )),
    }
}

fn emit(out: &OutputArgs, text: String) -> Result<(), Box<dyn std::error::Error>> {
    match &out.output {
        Some(path) => fs::write(path, text)?,
        None => println!("{text}"),
    }
    Ok(())
}

fn report(command: &str, config: Value, payload: Value) -> String {
    let doc = json!({
        "command": command,
        "config": config,
        "version": env!("CARGO_PKG_VERSION"),
        "payload": payload,
    });
    serde_json::to_string_pretty(&doc).expect("report serialization")
}

fn fvector_strings(f: &FaceVector) -> Vec<String> {
    f.counts().iter().map(|c| c.to_string()).collect()
}

fn exact_and_decimal(r: &Rational) -> Value {
    json!({
        "exact": rational_string(r),
        "decimal": decimal_string(r, DECIMAL_DIGITS),
    })
}

fn run(cli: Cli) -> Result<ExitCode, Box<dyn std::error::Error>> {
    match cli.command {
        Command::Subdivide {
            input,
            depth,
            emit: kind,
            max_cells,
            out,
        } => {
            let cap = resolve_cap(max_cells);
            let parsed = load_complex(&input)?;
            let k = parsed.to_complex()?;
            let result = subdivided_with_coords(&parsed, &k, depth, cap)?;
            match kind {
                EmitKind::Fvector => {
                    let f = result.0.face_vector();
                    match out.format {
                        Format::Csv => emit(&out, fvector_strings(&f).join(","))?,
                        Format::Json => emit(
                            &out,
                            report(
                                "subdivide",
                                json!({"input": input, "depth": depth, "max_cells": cap}),
                                json!({"fvector": fvector_strings(&f)}),
                            ),
                        )?,
                    }
                }
                EmitKind::Faces => match out.format {
                    Format::Csv => {
                        let mut lines = Vec::new();
                        for face in result.0.all_faces() {
                            let row: Vec<String> =
                                face.vertices().iter().map(|v| v.to_string()).collect();
                            lines.push(row.join(","));
                        }
                        emit(&out, lines.join("\n"))?;
                    }
                    Format::Json => {
                        let doc = ComplexJson::from_parts(&result.0, result.1.as_ref());
                        emit(&out, serde_json::to_string_pretty(&doc)?)?;
                    }
                },
            }
            Ok(ExitCode::SUCCESS)
        }

        Command::Fvector {
            input,
            depth,
            max_cells,
            out,
        } => {
            let cap = resolve_cap(max_cells);
            let parsed = load_complex(&input)?;
            let k = parsed.to_complex()?;
            let subdivided = iterate_subdivision(&k, depth, cap)?;
            let f = subdivided.face_vector();
            match out.format {
                Format::Csv => emit(&out, fvector_strings(&f).join(","))?,
                Format::Json => emit(
                    &out,
                    report(
                        "fvector",
                        json!({"input": input, "depth": depth}),
                        json!({
                            "fvector": fvector_strings(&f),
                            "euler_characteristic": f.euler_characteristic().to_string(),
                        }),
                    ),
                )?,
            }
            Ok(ExitCode::SUCCESS)
        }

        Command::Lambda { n, form, out } => {
            let size = n + 1;
            let m = match form {
                LambdaForm::Recursive => LambdaMatrix::recursive(size),
                LambdaForm::Closed => LambdaMatrix::closed_form(size),
            };
            let rows: Vec<Vec<String>> = (1..=size)
                .map(|i| (1..=size).map(|j| m.get(i, j).to_string()).collect())
                .collect();
            match out.format {
                Format::Csv => {
                    let lines: Vec<String> = rows.iter().map(|r| r.join(",")).collect();
                    emit(&out, lines.join("\n"))?;
                }
                Format::Json => emit(
                    &out,
                    report(
                        "lambda",
                        json!({"n": n, "form": match form { LambdaForm::Recursive => "recursive", LambdaForm::Closed => "closed" }}),
                        json!({"size": size, "rows": rows}),
                    ),
                )?,
            }
            Ok(ExitCode::SUCCESS)
        }

        Command::Qcoeffs {
            n,
            method,
            check_roots,
            out,
        } => {
            let q = match method {
                QMethod::Solve => q_solve(n),
                QMethod::Partition => q_partition(n),
            };
            let strings: Vec<String> = q.coeffs().iter().map(rational_string).collect();
            let mut payload = json!({"n": n, "q": strings});
            if check_roots {
                let rep = limit_root_report(n.max(1), &rat(1, 1_000_000_000_000i64))?;
                payload["roots"] = json!({
                    "count": rep.isolation.len(),
                    "approximations": rep.isolation.approximate_roots(),
                    "all_simple": rep.all_simple,
                    "all_real": rep.all_real,
                    "in_unit_interval": rep.in_unit_interval,
                    "vanishes_at_minus_half": rep.vanishes_at_minus_half,
                });
            }
            match out.format {
                Format::Csv => emit(&out, strings.join(","))?,
                Format::Json => emit(
                    &out,
                    report(
                        "qcoeffs",
                        json!({"n": n, "method": match method { QMethod::Solve => "solve", QMethod::Partition => "partition" }, "check_roots": check_roots}),
                        payload,
                    ),
                )?,
            }
            Ok(ExitCode::SUCCESS)
        }

        Command::Verify {
            claim,
            input,
            n,
            out,
        } => {
            let (rep, config) = match claim {
                Claim::Macdonald | Claim::ChiHalf | Claim::Ds => {
                    let path = input.ok_or("this claim needs --input")?;
                    let k = load_complex(&path)?.to_complex()?;
                    let rep = match claim {
                        Claim::Macdonald => macdonald_symmetry(&k),
                        Claim::ChiHalf => chi_at_minus_half(&k),
                        _ => dehn_sommerville(&k),
                    };
                    (rep, json!({"input": path}))
                }
                Claim::AsymptoticDs => {
                    let n = n.ok_or("this claim needs --n")?;
                    (asymptotic_dehn_sommerville(n), json!({"n": n}))
                }
                Claim::SphereRoots => {
                    let n = n.ok_or("this claim needs --n")?;
                    (sphere_root_analysis(n)?, json!({"n": n}))
                }
            };
            let holds = rep.holds;
            let applicable = rep.applicable;
            emit(&out, report("verify", config, verifier_json(&rep)))?;
            if holds || !applicable {
                Ok(ExitCode::SUCCESS)
            } else {
                Ok(ExitCode::from(1))
            }
        }

        Command::Converge {
            harness,
            input,
            p,
            dmin,
            dmax,
            phi,
            max_cells,
            out,
        } => {
            let cap = resolve_cap(max_cells);
            let parsed = load_complex(&input)?;
            let embedded = parsed.to_embedded()?;
            let observable = load_phi(&phi, embedded.ambient_dim())?;
            let config = json!({
                "harness": match harness { Harness::Gamma => "gamma", Harness::Links => "links", Harness::Blocks => "blocks", Harness::FpDelta => "fp-delta" },
                "input": input, "p": p, "dmin": dmin, "dmax": dmax, "max_cells": cap,
            });
            match harness {
                Harness::Gamma => {
                    let rep = converge_gamma(&embedded, p, dmin..=dmax, &observable, cap)?;
                    emit_convergence(&out, config, &rep)?;
                }
                Harness::FpDelta => {
                    let rep = fp_delta_report(&embedded, p, dmin..=dmax, &observable, cap)?;
                    emit_convergence(&out, config, &rep)?;
                }
                Harness::Links | Harness::Blocks => {
                    let mut reports = Vec::new();
                    for d in dmin..=dmax {
                        let rep = match harness {
                            Harness::Links => link_density(&embedded, p, d, &observable, cap)?,
                            _ => block_density(&embedded, p, d, &observable, cap)?,
                        };
                        reports.push(rep);
                    }
                    emit_density(&out, config, &reports)?;
                }
            }
            Ok(ExitCode::SUCCESS)
        }

        Command::Sample {
            n,
            depth,
            samples,
            phi,
            seed,
            out,
        } => {
            let ambient = n.max(1);
            let observable = load_phi(&phi, ambient)?;
            let mc = phi_mc_integral(n, depth, samples, &observable, seed);
            let payload = json!({
                "mean": exact_and_decimal(&mc.mean),
                "stderr": mc.stderr,
                "samples": mc.samples,
                "seed": mc.seed,
            });
            emit(
                &out,
                report(
                    "sample",
                    json!({"n": n, "depth": depth, "samples": samples, "seed": seed}),
                    payload,
                ),
            )?;
            Ok(ExitCode::SUCCESS)
        }

        Command::Corpus { action } => match action {
            CorpusAction::List => {
                for name in sdlab::corpus::corpus_names() {
                    println!("{name}");
                }
                Ok(ExitCode::SUCCESS)
            }
            CorpusAction::Emit { name, output } => {
                let entry = sdlab::corpus::corpus_entry(&name)
                    .ok_or_else(|| format!("unknown corpus name {name:?}"))?;
                let doc = ComplexJson::from_parts(&entry.complex, entry.coords.as_ref());
                let text = serde_json::to_string_pretty(&doc)?;
                match output {
                    Some(path) => fs::write(path, text)?,
                    None => println!("{text}"),
                }
                Ok(ExitCode::SUCCESS)
            }
        },
    }
}

type CoordTable = std::collections::BTreeMap<sdlab::VertexId, sdlab::Point>;

/// Subdivides, carrying coordinates through when the input had them.
fn subdivided_with_coords(
    parsed: &ComplexJson,
    k: &SimplicialComplex,
    depth: usize,
    cap: u64,
) -> Result<(SimplicialComplex, Option<CoordTable>), Box<dyn std::error::Error>> {
    if parsed.coordinates.is_some() {
        let embedded: EmbeddedComplex = parsed.to_embedded()?;
        let result = embedded.iterate_subdivide(depth, cap)?;
        Ok((
            result.complex().clone(),
            Some(result.coordinate_table().clone()),
        ))
    } else {
        Ok((iterate_subdivision(k, depth, cap)?, None))
    }
}

fn verifier_json(rep: &VerifierReport) -> Value {
    let residual = match &rep.residual {
        Residual::Polynomial(v) => json!({
            "kind": "polynomial",
            "coefficients": v.iter().map(rational_string).collect::<Vec<_>>(),
        }),
        Residual::PerIndex(v) => json!({
            "kind": "per-index",
            "defects": v.iter().map(rational_string).collect::<Vec<_>>(),
        }),
        Residual::Value(v) => json!({
            "kind": "value",
            "value": rational_string(v),
            "decimal": decimal_string(v, DECIMAL_DIGITS),
        }),
    };
    json!({
        "claim": rep.claim,
        "applicable": rep.applicable,
        "holds": rep.holds,
        "residual": residual,
        "witness": rep.witness,
        "warnings": rep.warnings,
    })
}

fn emit_convergence(
    out: &OutputArgs,
    config: Value,
    rep: &ConvergenceReport,
) -> Result<(), Box<dyn std::error::Error>> {
    match out.format {
        Format::Csv => {
            let mut lines = vec!["d,value,target,error,ratio".to_string()];
            for row in &rep.rows {
                let ratio = row
                    .ratio
                    .as_ref()
                    .map(|r| decimal_string(r, DECIMAL_DIGITS))
                    .unwrap_or_default();
                lines.push(format!(
                    "{},{},{},{},{}",
                    row.d,
                    decimal_string(&row.value, DECIMAL_DIGITS),
                    decimal_string(&rep.target, DECIMAL_DIGITS),
                    decimal_string(&row.error, DECIMAL_DIGITS),
                    ratio
                ));
            }
            emit(out, lines.join("\n"))
        }
        Format::Json => {
            let rows: Vec<Value> = rep
                .rows
                .iter()
                .map(|row| {
                    json!({
                        "d": row.d,
                        "value": exact_and_decimal(&row.value),
                        "error": exact_and_decimal(&row.error),
                        "ratio": row.ratio.as_ref().map(|r| decimal_string(r, DECIMAL_DIGITS)),
                        "skeleton_mass": exact_and_decimal(&row.skeleton_mass),
                    })
                })
                .collect();
            let payload = json!({
                "quantity": rep.quantity,
                "target": exact_and_decimal(&rep.target),
                "rows": rows,
            });
            emit(out, report("converge", config, payload))
        }
    }
}

fn emit_density(
    out: &OutputArgs,
    config: Value,
    reports: &[DensityReport],
) -> Result<(), Box<dyn std::error::Error>> {
    match out.format {
        Format::Csv => {
            let mut lines = vec!["d,l,value,target,error".to_string()];
            for rep in reports {
                for (l, (value, target)) in rep.coeffs.iter().zip(&rep.targets).enumerate() {
                    let err = num::Signed::abs(&(value - target));
                    lines.push(format!(
                        "{},{},{},{},{}",
                        rep.d,
                        l,
                        decimal_string(value, DECIMAL_DIGITS),
                        decimal_string(target, DECIMAL_DIGITS),
                        decimal_string(&err, DECIMAL_DIGITS),
                    ));
                }
            }
            emit(out, lines.join("\n"))
        }
        Format::Json => {
            let rows: Vec<Value> = reports
                .iter()
                .map(|rep| {
                    json!({
                        "d": rep.d,
                        "coefficients": rep.coeffs.iter().map(exact_and_decimal).collect::<Vec<_>>(),
                        "targets": rep.targets.iter().map(exact_and_decimal).collect::<Vec<_>>(),
                    })
                })
                .collect();
            let payload = json!({"p": reports.first().map(|r| r.p), "rows": rows});
            emit(out, report("converge", config, payload))
        }
    }
}
