//! `adt`: command-line front end for the abelian dynamics toolkit. Every
//! pipeline stage is a subcommand; `--json` switches the output to a
//! versioned envelope, and `simulate` can write a CSV trace.

use std::fmt::Write as _;
use std::process::ExitCode;

use anyhow::Context;
use clap::{Args, Parser, Subcommand, ValueEnum};
use num_rational::BigRational;
use serde::Serialize;
use serde_json::{json, Value};

use adt_core::dynamics::{
    classification_table, classify_diagram, count_fixed_points, dynamical_degrees,
    reducibility_criterion, spectrum_from_field_endo, spectrum_from_quaternion_endo,
    EndoDescriptor, Reducibility, Spectrum,
};
use adt_core::exact::parse_poly;
use adt_core::number_field::{field_kind, power_basis_discriminant, FieldElement, NumberField};
use adt_core::quaternion::{build_construction_certificate, ConstructionVariant};
use adt_core::salem::{
    classify_root_moduli, is_pisot, is_salem, salem_by_trace_criterion, salem_certificate,
};
use adt_core::{IntPolynomial, RatPolynomial, RealAlgebraic};
use adt_ergodic::{ErgodicError, FourierForm, ModeEntry, TorusAutomorphism};

const SCHEMA_VERSION: &str = "1";

#[derive(Parser)]
#[command(
    name = "adt",
    about = "Exact-arithmetic toolkit for automorphism dynamics on complex tori",
    long_about = "Exact-arithmetic toolkit for automorphism dynamics on complex tori.\n\
        Polynomials are written like \"x^4-x^3-x^2-x+1\" or as JSON coefficient\n\
        arrays [c0, c1, ...]. The environment variable ADT_PRECISION_BITS\n\
        (default 200) controls the numerical working precision.",
    version
)]
struct Cli {
    /// Emit a versioned JSON envelope instead of human-readable text.
    #[arg(long, global = true)]
    json: bool,
    /// Seed for any randomized component (echoed for reproducibility).
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Salem/Pisot tests and certified root-modulus counts.
    Salem {
        #[command(subcommand)]
        action: SalemAction,
    },
    /// Number-field computations on a defining polynomial.
    Nf {
        #[command(subcommand)]
        action: NfAction,
    },
    /// Run the construction manual on a Salem quartic: trace field,
    /// generator, ramifying prime, and the predicted degree sequence.
    Construct {
        poly: String,
        #[arg(long, value_enum, default_value_t = VariantArg::Indefinite)]
        variant: VariantArg,
        /// Multiplicity of the building block in the target variety.
        #[arg(long, default_value_t = 1)]
        v: u32,
        /// Upper bound for the ramifying-prime search.
        #[arg(long, default_value_t = 1000)]
        prime_bound: u64,
    },
    /// Analytic eigenvalue spectrum of an endomorphism descriptor.
    Spectrum(SpectrumArgs),
    /// Dynamical degrees, entropy, and hyperbolicity flags.
    Degrees(SpectrumArgs),
    /// Diagram label in the dimension 1-4 taxonomy.
    Classify(SpectrumArgs),
    /// Fixed-point count and the root-of-unity reducibility test.
    Fixpoints {
        /// Characteristic polynomial of the rational representation block.
        poly: String,
        /// Multiplicity of the block; total degree must be even.
        #[arg(long, default_value_t = 1)]
        mult: u32,
    },
    /// Cesàro form-averaging run on the torus of a reciprocal polynomial.
    Simulate {
        #[arg(long)]
        poly: String,
        /// Bidegree of the averaged (k,k)-form.
        #[arg(long)]
        k: usize,
        /// JSON file with the form's modes: [{"l": [...], "I": [...],
        /// "J": [...], "re": .., "im": ..}, ...] (1-based indices).
        #[arg(long)]
        omega: String,
        /// Number of averaging steps.
        #[arg(long)]
        n: usize,
        /// Write the checkpoint trace (N, sup_error, mode_count,
        /// collinearity) as CSV to this path.
        #[arg(long)]
        trace: Option<String>,
        /// Cap on tracked modes before the run aborts.
        #[arg(long)]
        budget: Option<usize>,
    },
    /// Dump the encoded classification table for a dimension (1-4).
    Tables {
        #[arg(long)]
        dim: usize,
    },
}

#[derive(Subcommand)]
enum SalemAction {
    /// Is the polynomial a Salem polynomial?
    Verify { poly: String },
    /// Is the polynomial a Pisot polynomial?
    Pisot { poly: String },
    /// Certified counts of roots outside / on / inside the unit circle.
    Classify { poly: String },
    /// Full certificate: trace polynomial and the certified Salem number.
    Certificate { poly: String },
    /// Trace-polynomial criterion (degree >= 4, self-reciprocal inputs).
    Trace { poly: String },
}

#[derive(Subcommand)]
enum NfAction {
    /// Discriminant of the power basis Z[x]/(p).
    Disc { poly: String },
    /// Totally real / CM / mixed classification.
    Kind { poly: String },
    /// Norm, trace, and minimal polynomial of an element given by its
    /// power-basis coordinates ("c0,c1,..." as rationals).
    Norm {
        poly: String,
        #[arg(long)]
        element: String,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum VariantArg {
    Indefinite,
    SecondKind,
}

/// Shared descriptor arguments: an endomorphism acting with multiplicity m
/// through a degree-e field (or a quaternion algebra with two half-trace
/// polynomials) on a g-dimensional variety.
#[derive(Args)]
struct SpectrumArgs {
    /// Minimal polynomial of the endomorphism (or of the first half trace).
    #[arg(long)]
    poly: String,
    /// Second half-trace minimal polynomial; switches to the quaternion
    /// descriptor.
    #[arg(long)]
    t2: Option<String>,
    /// Multiplicity of each analytic eigenvalue.
    #[arg(long, default_value_t = 1)]
    m: u32,
    /// Degree of the acting algebra over Q (defaults to deg poly).
    #[arg(long)]
    e: Option<u32>,
    /// Complex dimension of the variety.
    #[arg(long)]
    g: u32,
}

#[derive(Serialize)]
struct CommandResult {
    schema_version: &'static str,
    command: String,
    seed: u64,
    payload: Value,
    warnings: Vec<String>,
}

struct CliError {
    name: String,
    message: String,
}

impl CliError {
    fn from_debug<E: std::fmt::Debug + std::fmt::Display>(e: E) -> Self {
        let dbg = format!("{e:?}");
        let name: String = dbg
            .chars()
            .take_while(|c| c.is_alphanumeric() || *c == '_')
            .collect();
        CliError {
            name,
            message: e.to_string(),
        }
    }
}

fn poly_arg(s: &str) -> Result<IntPolynomial, CliError> {
    parse_poly(s).map_err(CliError::from_debug)
}

/// Lossless-and-readable rendering of a real algebraic number: minimal
/// polynomial, exact isolating interval, and a 30-digit decimal.
fn algebraic_json(x: &RealAlgebraic) -> Value {
    let mut v = serde_json::to_value(x).unwrap_or(Value::Null);
    if let Value::Object(map) = &mut v {
        map.insert("decimal".into(), Value::String(x.to_decimal(30)));
    }
    v
}

fn spectrum_from_args(args: &SpectrumArgs) -> Result<(Spectrum, Value), CliError> {
    let p = poly_arg(&args.poly)?;
    let e = args.e.unwrap_or(p.deg() as u32);
    let descriptor = match &args.t2 {
        None => EndoDescriptor::Field {
            min_poly: p,
            m: args.m,
            e,
            g: args.g,
        },
        Some(t2) => EndoDescriptor::Quaternion {
            t1_min_poly: p,
            t2_min_poly: poly_arg(t2)?,
            m: args.m,
            e,
            g: args.g,
        },
    };
    let spectrum = match &descriptor {
        EndoDescriptor::Field { .. } => spectrum_from_field_endo(&descriptor),
        EndoDescriptor::Quaternion { .. } => spectrum_from_quaternion_endo(&descriptor),
    }
    .map_err(CliError::from_debug)?;
    let echo = serde_json::to_value(&descriptor).unwrap_or(Value::Null);
    Ok((spectrum, echo))
}

fn spectrum_payload(s: &Spectrum) -> Value {
    json!({
        "g": s.g,
        "n_outside": s.n_outside(),
        "n_on_circle": s.n_on_circle(),
        "n_inside": 2 * s.g - s.n_outside() - s.n_on_circle(),
    })
}

fn parse_rationals(s: &str) -> Result<Vec<BigRational>, CliError> {
    s.split(',')
        .map(|t| {
            let t = t.trim();
            let parse_int = |u: &str| {
                u.parse::<num_bigint::BigInt>().map_err(|_| CliError {
                    name: "ParseError".into(),
                    message: format!("invalid rational coordinate '{t}'"),
                })
            };
            match t.split_once('/') {
                Some((n, d)) => Ok(BigRational::new(parse_int(n)?, parse_int(d)?)),
                None => Ok(BigRational::from(parse_int(t)?)),
            }
        })
        .collect()
}

/// Human-readable lines for a payload: stable "key: value" pairs.
fn human_lines(payload: &Value, indent: usize) -> String {
    let mut out = String::new();
    let pad = "  ".repeat(indent);
    match payload {
        Value::Object(map) => {
            for (k, v) in map {
                match v {
                    Value::Object(_) => {
                        let _ = writeln!(out, "{pad}{k}:");
                        out.push_str(&human_lines(v, indent + 1));
                    }
                    Value::Array(items) if items.iter().any(|i| i.is_object()) => {
                        let _ = writeln!(out, "{pad}{k}:");
                        for item in items {
                            out.push_str(&human_lines(item, indent + 1));
                        }
                    }
                    _ => {
                        let _ = writeln!(out, "{pad}{k}: {}", compact(v));
                    }
                }
            }
        }
        other => {
            let _ = writeln!(out, "{pad}{}", compact(other));
        }
    }
    out
}

fn compact(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn run(cli: &Cli) -> Result<(Value, Vec<String>), CliError> {
    let mut warnings: Vec<String> = Vec::new();
    let payload = match &cli.command {
        Command::Salem { action } => match action {
            SalemAction::Verify { poly } => {
                let p = poly_arg(poly)?;
                json!({ "poly": p.to_string(), "salem": is_salem(&p) })
            }
            SalemAction::Pisot { poly } => {
                let p = poly_arg(poly)?;
                json!({ "poly": p.to_string(), "pisot": is_pisot(&p) })
            }
            SalemAction::Classify { poly } => {
                let p = poly_arg(poly)?;
                let pattern = classify_root_moduli(&p).map_err(CliError::from_debug)?;
                if !pattern.certified {
                    warnings.push("Indeterminate".into());
                }
                let mut v = serde_json::to_value(&pattern).unwrap_or(Value::Null);
                if let Value::Object(map) = &mut v {
                    map.insert("poly".into(), Value::String(p.to_string()));
                }
                v
            }
            SalemAction::Certificate { poly } => {
                let p = poly_arg(poly)?;
                let cert = salem_certificate(&p).map_err(CliError::from_debug)?;
                json!({
                    "poly": cert.polynomial.to_string(),
                    "degree": cert.degree,
                    "trace_polynomial": cert.trace_polynomial.to_string(),
                    "salem_value": algebraic_json(&cert.salem_value),
                })
            }
            SalemAction::Trace { poly } => {
                let p = poly_arg(poly)?;
                let verdict = salem_by_trace_criterion(&p).map_err(CliError::from_debug)?;
                json!({ "poly": p.to_string(), "salem": verdict })
            }
        },
        Command::Nf { action } => match action {
            NfAction::Disc { poly } => {
                let p = poly_arg(poly)?;
                let d = power_basis_discriminant(&p);
                json!({ "poly": p.to_string(), "discriminant": d.to_string() })
            }
            NfAction::Kind { poly } => {
                let p = poly_arg(poly)?;
                json!({ "poly": p.to_string(), "kind": format!("{:?}", field_kind(&p)) })
            }
            NfAction::Norm { poly, element } => {
                let p = poly_arg(poly)?;
                let field = NumberField::new(p.clone()).map_err(CliError::from_debug)?;
                let coords = parse_rationals(element)?;
                let el = FieldElement::new(field, RatPolynomial::new(coords));
                json!({
                    "poly": p.to_string(),
                    "norm": el.norm().to_string(),
                    "trace": el.trace().to_string(),
                    "min_poly_degree": el.min_poly().coeffs().len().saturating_sub(1),
                })
            }
        },
        Command::Construct {
            poly,
            variant,
            v,
            prime_bound,
        } => {
            let p = poly_arg(poly)?;
            let variant = match variant {
                VariantArg::Indefinite => ConstructionVariant::Indefinite,
                VariantArg::SecondKind => ConstructionVariant::SecondKind,
            };
            let cert = build_construction_certificate(&p, variant, *v, *prime_bound)
                .map_err(CliError::from_debug)?;
            if cert.abstract_only {
                warnings.push("AbstractOnly".into());
            }
            let lambda = cert.salem_value.to_f64();
            let lambdas: Vec<f64> = cert
                .degree_exponents
                .iter()
                .map(|&e| lambda.powi(e as i32))
                .collect();
            json!({
                "poly": cert.polynomial.to_string(),
                "salem_degree": cert.salem_degree,
                "dimension": cert.dimension,
                "variant": serde_json::to_value(&cert.variant).unwrap_or(Value::Null),
                "v": cert.v,
                "abstract_only": cert.abstract_only,
                "generator": serde_json::to_value(&cert.generator).unwrap_or(Value::Null),
                "prime": cert.prime,
                "ramification": serde_json::to_value(&cert.ramification).unwrap_or(Value::Null),
                "second_kind_d": cert.second_kind_d,
                "salem_value": algebraic_json(&cert.salem_value),
                "degree_exponents": cert.degree_exponents,
                "lambdas": lambdas,
            })
        }
        Command::Spectrum(args) => {
            let (s, descriptor) = spectrum_from_args(args)?;
            let mut v = spectrum_payload(&s);
            if let Value::Object(map) = &mut v {
                map.insert("descriptor".into(), descriptor);
            }
            v
        }
        Command::Degrees(args) => {
            let (s, descriptor) = spectrum_from_args(args)?;
            let profile = dynamical_degrees(&s).map_err(CliError::from_debug)?;
            let mut v = serde_json::to_value(&profile).unwrap_or(Value::Null);
            if let Value::Object(map) = &mut v {
                map.insert("descriptor".into(), descriptor);
            }
            v
        }
        Command::Classify(args) => {
            let (s, descriptor) = spectrum_from_args(args)?;
            let diagram = classify_diagram(&s).map_err(CliError::from_debug)?;
            json!({
                "descriptor": descriptor,
                "label": diagram.label,
                "condition": diagram.condition,
            })
        }
        Command::Fixpoints { poly, mult } => {
            let p = poly_arg(poly)?;
            let total = p.deg() * *mult as usize;
            if total % 2 != 0 {
                return Err(CliError {
                    name: "InvalidDescriptor".into(),
                    message: "total eigenvalue count must be even (2g)".into(),
                });
            }
            let s = Spectrum::from_components(total / 2, vec![(p.clone(), *mult)])
                .map_err(CliError::from_debug)?;
            let reducibility = reducibility_criterion(&s);
            match count_fixed_points(&s) {
                Ok(count) => json!({
                    "poly": p.to_string(),
                    "mult": mult,
                    "count": count.to_string(),
                    "reducibility": serde_json::to_value(&reducibility).unwrap_or(Value::Null),
                }),
                Err(e) => match reducibility {
                    Reducibility::EigenvalueOne | Reducibility::RootOfUnity(_) => {
                        warnings.push("InfiniteFixedLocus".into());
                        json!({
                            "poly": p.to_string(),
                            "mult": mult,
                            "count": Value::Null,
                            "reducibility":
                                serde_json::to_value(&reducibility).unwrap_or(Value::Null),
                        })
                    }
                    _ => return Err(CliError::from_debug(e)),
                },
            }
        }
        Command::Simulate {
            poly,
            k,
            omega,
            n,
            trace,
            budget,
        } => {
            let p = poly_arg(poly)?;
            let t = TorusAutomorphism::from_reciprocal_polynomial(&p)
                .map_err(CliError::from_debug)?;
            let raw = std::fs::read_to_string(omega)
                .with_context(|| format!("reading {omega}"))
                .map_err(|e| CliError {
                    name: "Io".into(),
                    message: format!("{e:#}"),
                })?;
            let entries: Vec<ModeEntry> = serde_json::from_str(&raw).map_err(|e| CliError {
                name: "InvalidMode".into(),
                message: e.to_string(),
            })?;
            let form =
                FourierForm::from_entries(t.g(), *k, &entries).map_err(CliError::from_debug)?;
            let result = match budget {
                Some(b) => t.cesaro_average_with_budget(&form, *k, *n, *b),
                None => t.cesaro_average(&form, *k, *n),
            };
            let (average, report, partial_steps) = match result {
                Ok((avg, rep)) => (avg, rep, None),
                Err(ErgodicError::ModeBudgetExceeded(partial)) => {
                    warnings.push("ModeBudgetExceeded".into());
                    (partial.average, partial.report, Some(partial.steps))
                }
                Err(e) => return Err(CliError::from_debug(e)),
            };

            let mut csv = String::from("N,sup_error,mode_count,collinearity\n");
            for i in 0..report.checkpoints.len() {
                let _ = writeln!(
                    csv,
                    "{},{},{},{}",
                    report.checkpoints[i],
                    report.sup_errors[i],
                    report.mode_counts[i],
                    report.collinearity[i]
                );
            }
            if let Some(path) = trace {
                std::fs::write(path, &csv).map_err(|e| CliError {
                    name: "Io".into(),
                    message: e.to_string(),
                })?;
            }

            let limit_entries = report.limit.to_entries().map_err(CliError::from_debug)?;
            json!({
                "poly": p.to_string(),
                "g": t.g(),
                "k": k,
                "steps": partial_steps.unwrap_or(*n),
                "lambda_k": report.lambda_k,
                "limit_from_hypothesis": report.limit_from_hypothesis,
                "limit": serde_json::to_value(&limit_entries).unwrap_or(Value::Null),
                "final_sup_error": report.sup_errors.last().copied(),
                "final_collinearity": report.collinearity.last().copied(),
                "tracked_modes": report.mode_counts.last().copied(),
                "average_sup_norm": average.sup_norm(),
                "trace_csv": if trace.is_none() { Some(csv) } else { None },
            })
        }
        Command::Tables { dim } => {
            if !(1..=4).contains(dim) {
                return Err(CliError {
                    name: "Unclassified".into(),
                    message: format!("no classification table for dimension {dim}"),
                });
            }
            let rows = classification_table(*dim);
            json!({
                "dim": dim,
                "rows": serde_json::to_value(rows).unwrap_or(Value::Null),
            })
        }
    };
    Ok((payload, warnings))
}

/// Byte-stable plain-text dump for `tables`.
fn tables_text(dim: usize) -> String {
    let rows = classification_table(dim);
    let mut out = format!("classification table, dimension {dim}\n");
    let header = ["multiplication", "field", "deg", "diagrams", "lambda_1"];
    let mut widths: Vec<usize> = header.iter().map(|h| h.len()).collect();
    let cells =
        |r: &adt_core::dynamics::TableRow| -> [&'static str; 5] {
            [r.multiplication, r.field, r.degree, r.diagrams, r.lambda_property]
        };
    for r in rows {
        for (w, c) in widths.iter_mut().zip(cells(r)) {
            *w = (*w).max(c.len());
        }
    }
    let mut line = String::new();
    for (h, w) in header.iter().zip(&widths) {
        let _ = write!(line, "{h:<w$}  ");
    }
    out.push_str(line.trim_end());
    out.push('\n');
    for r in rows {
        let mut line = String::new();
        for (c, w) in cells(r).iter().zip(&widths) {
            let _ = write!(line, "{c:<w$}  ");
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

fn command_echo() -> String {
    std::env::args().skip(1).collect::<Vec<_>>().join(" ")
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok((payload, warnings)) => {
            if cli.json {
                let result = CommandResult {
                    schema_version: SCHEMA_VERSION,
                    command: command_echo(),
                    seed: cli.seed,
                    payload,
                    warnings,
                };
                println!("{}", serde_json::to_string_pretty(&result).unwrap());
            } else {
                match &cli.command {
                    Command::Tables { dim } => print!("{}", tables_text(*dim)),
                    Command::Simulate { trace, .. } => {
                        // The CSV is the primary human-readable artifact.
                        if trace.is_none() {
                            if let Some(Value::String(csv)) = payload.get("trace_csv") {
                                print!("{csv}");
                            }
                        } else {
                            print!("{}", human_lines(&payload, 0));
                        }
                        for w in &warnings {
                            eprintln!("warning: {w}");
                        }
                    }
                    _ => {
                        print!("{}", human_lines(&payload, 0));
                        for w in &warnings {
                            eprintln!("warning: {w}");
                        }
                    }
                }
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            if cli.json {
                let result = json!({
                    "schema_version": SCHEMA_VERSION,
                    "command": command_echo(),
                    "seed": cli.seed,
                    "error": { "name": e.name, "message": e.message },
                });
                println!("{}", serde_json::to_string_pretty(&result).unwrap());
            } else {
                eprintln!("error[{}]: {}", e.name, e.message);
            }
            ExitCode::FAILURE
        }
    }
}
