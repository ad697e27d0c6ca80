//! Command line front end: Betti tables, cross-route verification, the
//! nerve homology, and the bundled corpus.
//!
//! Exit codes: 0 success, 1 verification mismatch, 2 input or usage error,
//! 3 generator cap exceeded.

use std::io::Read as _;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use srtor::complex::Complement;
use srtor::doc::ComplexDocument;
use srtor::error::Error;
use srtor::tor::{poincare_polynomial, Check};
use srtor::{
    betti_table_with_complement, corpus, tor_via_nerve, verify, Coefficients, Route,
    DEFAULT_MAX_GENERATORS,
};

#[derive(Parser)]
#[command(
    name = "srtor",
    version,
    about = "Bigraded Tor groups of Stanley-Reisner rings by three independent routes"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the bigraded Betti table of a complex (and, over a field, the
    /// Poincare polynomial of the moment-angle complex).
    Betti {
        #[command(flatten)]
        input: InputArgs,
        /// Coefficient system: Z, Q or Fp:<p>
        #[arg(long, default_value = "Z")]
        coeffs: Coefficients,
        /// Computation route
        #[arg(long, value_enum, default_value_t = RouteArg::Complement)]
        route: RouteArg,
        #[command(flatten)]
        options: CommonArgs,
    },
    /// Cross-check all three routes against each other and report any
    /// disagreement per bigrading.
    Verify {
        #[command(flatten)]
        input: InputArgs,
        /// Coefficient system, repeatable (default: Z, Q, Fp:2)
        #[arg(long)]
        coeffs: Vec<Coefficients>,
        #[command(flatten)]
        options: CommonArgs,
    },
    /// Print the reduced homology of the nerve complex of the cover, with
    /// the shifted degree it corresponds to in the top bigrading.
    Nerve {
        #[command(flatten)]
        input: InputArgs,
        /// Coefficient system: Z, Q or Fp:<p>
        #[arg(long, default_value = "Z")]
        coeffs: Coefficients,
        #[command(flatten)]
        options: CommonArgs,
    },
    /// Operations on the bundled example corpus.
    Corpus {
        #[command(subcommand)]
        command: CorpusCommand,
    },
}

#[derive(Subcommand)]
enum CorpusCommand {
    /// List the bundled complexes.
    List,
    /// Print one bundled complex as JSON.
    Show { name: String },
}

#[derive(Args)]
struct InputArgs {
    /// Input complex: a JSON file path, a bundled corpus name, or `-` for
    /// standard input
    input: String,
}

#[derive(Args)]
struct CommonArgs {
    /// Which simplicial complement to use
    #[arg(long, value_enum, default_value_t = ComplementArg::Minimal)]
    complement: ComplementArg,
    /// Output format
    #[arg(long, value_enum, default_value_t = FormatArg::Text)]
    format: FormatArg,
    /// Refuse bigradings whose restricted complement has more generators
    /// than this
    #[arg(long, default_value_t = DEFAULT_MAX_GENERATORS)]
    max_gens: usize,
}

#[derive(Clone, Copy, ValueEnum)]
enum RouteArg {
    Complement,
    Hochster,
}

#[derive(Clone, Copy, ValueEnum)]
enum ComplementArg {
    /// The missing faces of the complex
    Minimal,
    /// Every non-face
    Maximal,
    /// The complement listed in the input document
    Given,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FormatArg {
    Text,
    Machine,
}

fn main() -> ExitCode {
    match run() {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::SizeCap { .. } => ExitCode::from(3),
                _ => ExitCode::from(2),
            }
        }
    }
}

fn run() -> Result<ExitCode, Error> {
    match Cli::parse().command {
        Command::Betti {
            input,
            coeffs,
            route,
            options,
        } => betti(&input, coeffs, route, &options),
        Command::Verify {
            input,
            coeffs,
            options,
        } => {
            let coeffs = if coeffs.is_empty() {
                vec![
                    Coefficients::Integers,
                    Coefficients::Rationals,
                    Coefficients::PrimeField(2),
                ]
            } else {
                coeffs
            };
            run_verify(&input, &coeffs, &options)
        }
        Command::Nerve {
            input,
            coeffs,
            options,
        } => nerve(&input, coeffs, &options),
        Command::Corpus { command } => match command {
            CorpusCommand::List => {
                for name in corpus::names() {
                    println!("{name}");
                }
                Ok(ExitCode::SUCCESS)
            }
            CorpusCommand::Show { name } => {
                let raw = corpus::raw(&name)
                    .ok_or_else(|| Error::Parse(format!("no corpus entry named `{name}`")))?;
                print!("{raw}");
                Ok(ExitCode::SUCCESS)
            }
        },
    }
}

fn load_document(input: &str) -> Result<ComplexDocument, Error> {
    if input == "-" {
        let mut text = String::new();
        std::io::stdin()
            .read_to_string(&mut text)
            .map_err(|e| Error::Parse(format!("reading stdin: {e}")))?;
        return ComplexDocument::parse(&text);
    }
    if let Some(result) = corpus::document(input) {
        return result;
    }
    match std::fs::read_to_string(input) {
        Ok(text) => ComplexDocument::parse(&text),
        Err(e) => Err(Error::Parse(format!(
            "`{input}` is neither a readable file ({e}) nor a corpus name; \
             run `srtor corpus list` for the bundled names"
        ))),
    }
}

fn choose_complement(doc: &ComplexDocument, choice: ComplementArg) -> Result<Complement, Error> {
    let k = doc.complex()?;
    match choice {
        ComplementArg::Minimal => Ok(Complement::minimal(&k)),
        ComplementArg::Maximal => Ok(Complement::maximal(&k)),
        ComplementArg::Given => doc.given_complement()?.ok_or_else(|| {
            Error::Parse("--complement given, but the document lists no complement".into())
        }),
    }
}

fn betti(
    input: &InputArgs,
    coeffs: Coefficients,
    route: RouteArg,
    options: &CommonArgs,
) -> Result<ExitCode, Error> {
    let doc = load_document(&input.input)?;
    let k = doc.complex()?;
    let table = match route {
        RouteArg::Complement => {
            let p = choose_complement(&doc, options.complement)?;
            betti_table_with_complement(&k, &p, coeffs, options.max_gens)?
        }
        RouteArg::Hochster => srtor::betti_table(&k, coeffs, Route::Hochster, options.max_gens)?,
    };
    match options.format {
        FormatArg::Text => {
            println!("{:>3}  {:<12} {:>5}  torsion", "i", "J", "rank");
            for (i, j, g) in table.rows() {
                let torsion = if g.torsion.is_empty() {
                    "-".to_string()
                } else {
                    g.torsion
                        .iter()
                        .map(|t| format!("Z/{t}"))
                        .collect::<Vec<_>>()
                        .join(" + ")
                };
                println!(
                    "{i:>3}  {:<12} {:>5}  {torsion}",
                    j.to_string(),
                    g.free_rank
                );
            }
            if coeffs.is_field() {
                println!("poincare: {}", poincare_polynomial(&table)?);
            }
        }
        FormatArg::Machine => {
            let entries: Vec<_> = table
                .rows()
                .into_iter()
                .map(|(i, j, g)| {
                    json!({
                        "i": i,
                        "j": j.vertices().collect::<Vec<_>>(),
                        "rank": g.free_rank,
                        "torsion": g.torsion.iter().map(|t| t.to_string()).collect::<Vec<_>>(),
                    })
                })
                .collect();
            let mut record = json!({
                "m": table.m,
                "coeffs": coeffs.to_string(),
                "entries": entries,
            });
            if coeffs.is_field() {
                let poly = poincare_polynomial(&table)?;
                record["poincare"] = json!(poly
                    .0
                    .iter()
                    .map(|(&e, &c)| json!({"degree": e, "coefficient": c}))
                    .collect::<Vec<_>>());
            }
            println!("{}", serde_json::to_string_pretty(&record).unwrap());
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn run_verify(
    input: &InputArgs,
    coeffs: &[Coefficients],
    options: &CommonArgs,
) -> Result<ExitCode, Error> {
    let doc = load_document(&input.input)?;
    let k = doc.complex()?;
    let p = choose_complement(&doc, options.complement)?;
    let report = verify(&k, &p, coeffs, options.max_gens)?;
    match options.format {
        FormatArg::Text => {
            for check in [
                Check::ComplementVsHochster,
                Check::NerveShift,
                Check::ComplementChoice,
            ] {
                let compared = report.check_compared(check);
                let status = if report.check_passed(check) {
                    "ok"
                } else {
                    "MISMATCH"
                };
                println!("{check}: {status} ({compared} bigradings compared)");
            }
            for miss in report.mismatches() {
                println!(
                    "  mismatch at i={} J={} over {}: {} vs {}",
                    miss.i, miss.j, miss.coeffs, miss.left, miss.right
                );
            }
            for skip in &report.skipped {
                println!(
                    "  skipped {} at J={}: {} generators exceed cap {}",
                    skip.check, skip.j, skip.generators, skip.cap
                );
            }
            println!("verdict: {}", if report.passed() { "pass" } else { "FAIL" });
        }
        FormatArg::Machine => {
            let record = json!({
                "passed": report.passed(),
                "compared": report.comparisons.len(),
                "mismatches": report
                    .mismatches()
                    .map(|c| json!({
                        "check": c.check.to_string(),
                        "i": c.i,
                        "j": c.j.vertices().collect::<Vec<_>>(),
                        "coeffs": c.coeffs.to_string(),
                        "left": c.left.to_string(),
                        "right": c.right.to_string(),
                    }))
                    .collect::<Vec<_>>(),
                "skipped": report
                    .skipped
                    .iter()
                    .map(|s| json!({
                        "check": s.check.to_string(),
                        "j": s.j.vertices().collect::<Vec<_>>(),
                        "generators": s.generators,
                        "cap": s.cap,
                    }))
                    .collect::<Vec<_>>(),
            });
            println!("{}", serde_json::to_string_pretty(&record).unwrap());
        }
    }
    Ok(if report.passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn nerve(input: &InputArgs, coeffs: Coefficients, options: &CommonArgs) -> Result<ExitCode, Error> {
    let doc = load_document(&input.input)?;
    let p = choose_complement(&doc, options.complement)?;
    if p.is_empty() {
        return Err(Error::Parse(
            "the complement is empty (the complex is a full simplex), so there is no cover".into(),
        ));
    }
    let mut rows = Vec::new();
    for n in 0..=(p.len() as i64 + 1) {
        let g = tor_via_nerve(&p, n, coeffs, options.max_gens)?;
        if !g.is_zero() {
            rows.push((n, g));
        }
    }
    match options.format {
        FormatArg::Text => {
            println!("nerve on {} cover sets over {coeffs}", p.len());
            for (n, g) in &rows {
                println!("  H~_{} = {g}   (top bigrading degree {n})", n - 2);
            }
            if rows.is_empty() {
                println!("  trivial");
            }
        }
        FormatArg::Machine => {
            let record = json!({
                "cover_sets": p.len(),
                "coeffs": coeffs.to_string(),
                "groups": rows
                    .iter()
                    .map(|(n, g)| json!({
                        "nerve_degree": n - 2,
                        "bigrading_degree": n,
                        "rank": g.free_rank,
                        "torsion": g.torsion.iter().map(|t| t.to_string()).collect::<Vec<_>>(),
                    }))
                    .collect::<Vec<_>>(),
            });
            println!("{}", serde_json::to_string_pretty(&record).unwrap());
        }
    }
    Ok(ExitCode::SUCCESS)
}
