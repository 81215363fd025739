//! Command-line front end for the `heronian` crate.
//!
//! [`run`] takes the full argument vector and returns the exit code and the text that
//! would go to stdout and stderr, so the binary and the tests share one code path.

pub mod fixtures;
pub mod verify;


use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use heronian::catalog::{Catalog, CatalogOptions, NumberRecord, SolidMode, Witness};
use heronian::decomposition::{classify_solid_rectangular, decompose, SolidWitness};
use heronian::generator::triangle_from_solution;
use heronian::quad::{solution_from_param, EnumerationConfig, ParamTriple, QuadSolution, SolutionStream};
use heronian::triangle::{classify_parity_case, integer_area, Triangle};
use heronian::{Error, Natural};
use serde_json::{json, Map, Value};

use crate::verify::TableChoice;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Self { code: EXIT_OK, stdout, stderr: String::new() }
    }

    fn failure(stdout: String, stderr: String) -> Self {
        Self { code: EXIT_FAILURE, stdout, stderr }
    }
}

#[derive(Debug, Parser)]
#[command(name = "heronian", version, about = "Integer-sided triangles with integer area")]
struct Cli {
    /// Worker threads for catalog enumeration (output does not depend on it).
    #[arg(long, global = true, default_value_t = 1, value_parser = clap::value_parser!(u16).range(1..))]
    jobs: u16,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// List solutions of x² + y² + z² = t² from parameters (l, m, n).
    Solve {
        #[arg(long)]
        lmax: u64,
        #[arg(long)]
        mmax: Option<u64>,
        /// Only m ≤ l and odd x.
        #[arg(long)]
        normalized: bool,
        /// Also emit each solution multiplied by 2, 4, …, 2^K.
        #[arg(long, default_value_t = 0)]
        scale_pow2: u32,
    },
    /// Build the triangle a = D(y²+z²)/2, b = D(x²+z²)/2, c = D(x²+y²)/2.
    Generate(GenerateArgs),
    /// Enumerate area numbers up to a limit.
    Catalog {
        #[arg(long)]
        limit: u64,
        #[arg(long, value_enum)]
        class: NumberClass,
        #[arg(long, value_enum, default_value_t = SolidModeArg::Definition2)]
        solid_mode: SolidModeArg,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Write the listing to a file instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Classes and witness triangles of one number, as JSON.
    Classify {
        value: u64,
        /// Enumeration limit (defaults to the value itself).
        #[arg(long)]
        limit: Option<u64>,
    },
    /// Coprime factorization of a triangle, as JSON.
    Decompose { a: String, b: String, c: String },
    /// Check that no Pythagorean number up to the limit is solid rectangular.
    Conjecture {
        #[arg(long)]
        limit: u64,
    },
    /// Recompute the published tables and lists and report errata.
    VerifyPaper {
        #[arg(long, value_enum, default_value_t = TableArg::All)]
        table: TableArg,
    },
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
struct GenerateSource {
    /// Parameters l m n.
    #[arg(long, num_args = 3, value_names = ["L", "M", "N"])]
    param: Option<Vec<String>>,
    /// Solution x y z t.
    #[arg(long, num_args = 4, value_names = ["X", "Y", "Z", "T"])]
    solution: Option<Vec<String>>,
}

#[derive(Debug, Args)]
struct GenerateArgs {
    #[command(flatten)]
    source: GenerateSource,
    #[arg(long)]
    scale: String,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum NumberClass {
    Area,
    Pythagorean,
    Solid,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum SolidModeArg {
    Definition2,
    Paper,
}

impl From<SolidModeArg> for SolidMode {
    fn from(m: SolidModeArg) -> Self {
        match m {
            SolidModeArg::Definition2 => SolidMode::Definition2,
            SolidModeArg::Paper => SolidMode::PaperList,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum TableArg {
    Sample,
    Generated,
    Final,
    Lists,
    All,
}

impl From<TableArg> for TableChoice {
    fn from(t: TableArg) -> Self {
        match t {
            TableArg::Sample => TableChoice::Sample,
            TableArg::Generated => TableChoice::Generated,
            TableArg::Final => TableChoice::Final,
            TableArg::Lists => TableChoice::Lists,
            TableArg::All => TableChoice::All,
        }
    }
}

/// Runs the command line `argv` (including the program name).
pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => Outcome::ok(text),
                _ => Outcome { code: EXIT_USAGE, stdout: String::new(), stderr: text },
            };
        }
    };
    let options = CatalogOptions { jobs: usize::from(cli.jobs), ..Default::default() };
    match execute(cli.command, &options) {
        Ok(outcome) => outcome,
        Err(e) => Outcome::failure(String::new(), format!("error: {e}\n")),
    }
}

#[derive(Debug)]
enum CommandError {
    Domain(Error),
    Input(String),
    Io(std::io::Error),
}

impl std::fmt::Display for CommandError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CommandError::Domain(e) => write!(f, "{e}"),
            CommandError::Input(s) => write!(f, "{s}"),
            CommandError::Io(e) => write!(f, "{e}"),
        }
    }
}

impl From<Error> for CommandError {
    fn from(e: Error) -> Self {
        CommandError::Domain(e)
    }
}

fn parse_natural(s: &str) -> Result<Natural, CommandError> {
    s.parse::<Natural>().map_err(|_| CommandError::Input(format!("not a non-negative integer: {s:?}")))
}

fn execute(command: Command, options: &CatalogOptions) -> Result<Outcome, CommandError> {
    match command {
        Command::Solve { lmax, mmax, normalized, scale_pow2 } => {
            let mut config = EnumerationConfig::up_to(lmax).normalized(normalized).scale_pow2(scale_pow2);
            if let Some(m) = mmax {
                config = config.m_max(m);
            }
            let mut out = String::from("l m l²+m² n x y z t\n");
            for (p, s) in SolutionStream::new(config) {
                writeln!(out, "{} {} {} {} {} {} {} {}", p.l(), p.m(), p.norm(), p.n(), s.x(), s.y(), s.z(), s.t()).unwrap();
            }
            Ok(Outcome::ok(out))
        }
        Command::Generate(args) => {
            let scale = parse_natural(&args.scale)?;
            let s = match (args.source.param, args.source.solution) {
                (Some(p), _) => {
                    let [l, m, n] = [&p[0], &p[1], &p[2]].map(|v| parse_natural(v));
                    solution_from_param(&ParamTriple::new(l?, m?, n?)?)
                }
                (_, Some(v)) => {
                    let [x, y, z, t] = [&v[0], &v[1], &v[2], &v[3]].map(|v| parse_natural(v));
                    QuadSolution::new(x?, y?, z?, t?)?
                }
                _ => unreachable!("clap requires one source"),
            };
            let g = triangle_from_solution(&s, &scale)?;
            let mut out = String::new();
            writeln!(out, "solution {}", g.source).unwrap();
            writeln!(out, "scale {}", g.scale).unwrap();
            writeln!(out, "triangle {}", g.triangle).unwrap();
            writeln!(out, "area {}", g.area).unwrap();
            Ok(Outcome::ok(out))
        }
        Command::Catalog { limit, class, solid_mode, format, out } => {
            let catalog = Catalog::build(limit, options);
            let mode = SolidMode::from(solid_mode);
            let records = match class {
                NumberClass::Area => catalog.triangle_area_numbers(mode),
                NumberClass::Pythagorean => catalog.pythagorean_numbers(mode),
                NumberClass::Solid => catalog.solid_rectangular_numbers(mode),
            };
            let text = match format {
                Format::Text => render_text(&records),
                Format::Json => serde_json::to_string_pretty(&Value::Array(records.iter().map(record_json).collect())).unwrap() + "\n",
                Format::Csv => render_csv(&records),
            };
            match out {
                Some(path) => {
                    std::fs::write(&path, text).map_err(CommandError::Io)?;
                    Ok(Outcome::ok(format!("wrote {} records to {}\n", records.len(), path.display())))
                }
                None => Ok(Outcome::ok(text)),
            }
        }
        Command::Classify { value, limit } => {
            let catalog = Catalog::build(limit.unwrap_or(value).max(value), options);
            let record = catalog.classify(value);
            Ok(Outcome::ok(serde_json::to_string_pretty(&record_json(&record)).unwrap() + "\n"))
        }
        Command::Decompose { a, b, c } => {
            let t = Triangle::new(parse_natural(&a)?, parse_natural(&b)?, parse_natural(&c)?)?;
            let f = decompose(&t)?;
            let area = integer_area(&t).expect("decompose succeeded");
            let mut obj = Map::new();
            obj.insert("sides".into(), Value::Array(t.sides().iter().map(num).collect()));
            obj.insert("area".into(), num(&area));
            obj.insert("case".into(), Value::String(classify_parity_case(&t).label.to_string()));
            obj.insert("d".into(), num(&f.d));
            for e in f.nine() {
                obj.insert(e.to_string(), num(f.get(e)));
            }
            obj.insert("k".into(), num(&f.perimeter_root));
            obj.insert("sum_identity".into(), Value::Bool(f.satisfies_sum_identity()));
            let witness = classify_solid_rectangular(&t)?;
            obj.insert("solid_witness".into(), witness.as_ref().map_or(Value::Null, solid_json));
            Ok(Outcome::ok(serde_json::to_string_pretty(&Value::Object(obj)).unwrap() + "\n"))
        }
        Command::Conjecture { limit } => {
            let catalog = Catalog::build(limit, options);
            let report = catalog.check_conjecture();
            let mut out = String::new();
            writeln!(out, "limit {}", report.limit).unwrap();
            writeln!(out, "pythagorean numbers {}", report.pythagorean_count).unwrap();
            writeln!(out, "solid rectangular numbers {}", report.solid_count).unwrap();
            if report.holds() {
                writeln!(out, "intersection: none").unwrap();
                Ok(Outcome::ok(out))
            } else {
                writeln!(out, "intersection:").unwrap();
                for r in &report.counterexamples {
                    writeln!(out, "{}", serde_json::to_string(&record_json(r)).unwrap()).unwrap();
                }
                Ok(Outcome::failure(out, "counterexample found\n".into()))
            }
        }
        Command::VerifyPaper { table } => {
            let reports = verify::verify_tables(table.into(), options.jobs);
            let text = verify::render(&reports);
            if reports.iter().all(verify::VerificationReport::passed) {
                Ok(Outcome::ok(text))
            } else {
                Ok(Outcome::failure(text, "unexplained mismatches\n".into()))
            }
        }
    }
}

fn num(n: &Natural) -> Value {
    Value::Number(n.to_string().parse().expect("decimal digits form a JSON number"))
}

fn solid_json(w: &SolidWitness) -> Value {
    let s = &w.solution;
    json!({
        "xyzt": [num(s.x()), num(s.y()), num(s.z()), num(s.t())],
        "d": num(&w.d),
    })
}

fn witness_json(w: &Witness, value: u64) -> Value {
    json!({
        "sides": w.triangle.sides().iter().map(num).collect::<Vec<_>>(),
        "area": value,
        "solid_witness": w.solid.as_ref().map_or(Value::Null, solid_json),
    })
}

pub fn record_json(r: &NumberRecord) -> Value {
    json!({
        "value": r.value,
        "classes": r.classes(),
        "witnesses": r.witnesses.iter().map(|w| witness_json(w, r.value)).collect::<Vec<_>>(),
    })
}

fn render_text(records: &[NumberRecord]) -> String {
    let mut out = String::new();
    for r in records {
        let witness = r.witnesses.first().map_or(String::from("-"), |w| w.triangle.to_string());
        writeln!(out, "{} [{}] {}", r.value, r.classes().join(","), witness).unwrap();
    }
    out
}

fn render_csv(records: &[NumberRecord]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["value", "is_area", "is_pythagorean", "is_solid", "witness_a", "witness_b", "witness_c"])
        .unwrap();
    for r in records {
        let sides: Vec<String> = match r.witnesses.first() {
            Some(wit) => wit.triangle.sides().iter().map(ToString::to_string).collect(),
            None => vec![String::new(); 3],
        };
        let mut row = vec![
            r.value.to_string(),
            r.is_triangle_area.to_string(),
            r.is_pythagorean.to_string(),
            r.is_solid_rectangular.to_string(),
        ];
        row.extend(sides);
        w.write_record(&row).unwrap();
    }
    String::from_utf8(w.into_inner().unwrap()).unwrap()
}
