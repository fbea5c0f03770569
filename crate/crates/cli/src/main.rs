use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rmcode::codes::budget_from_env;
use rmcode::error::Error;
use rmcode::golden::run_corpus;
use rmcode::io::{parse_order_spec, parse_points_file, write_points_file};
use rmcode_cli::generate::{field_of_order, generate, parse_exponents, Kind};
use rmcode_cli::pipeline::{analyze, Options};
use rmcode_cli::report::{to_json, validate};
use rmcode_cli::{exit_code, table, EXIT_BUDGET, EXIT_CRITERION_FALSE, EXIT_INPUT, EXIT_INTERNAL, EXIT_OK};

#[derive(Parser)]
#[command(name = "rmcode", version, about = "Reed-Muller-type codes on projective point sets")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Analyze the point set in a points file.
    Analyze(AnalyzeArgs),
    /// Write a points file for a standard point set.
    Generate(GenerateArgs),
    /// Run the built-in corpus of worked examples.
    Golden {
        /// Run only this example.
        name: Option<String>,
        #[arg(long)]
        budget: Option<u128>,
    },
    /// Check that a JSON report is valid and canonical.
    Validate { file: PathBuf },
}

#[derive(Args)]
struct AnalyzeArgs {
    file: PathBuf,
    /// Monomial order, e.g. "glex perm=3,2,1".
    #[arg(long)]
    order: Option<String>,
    /// Generalized Hamming weight δ(d, r), given as "d,r".
    #[arg(long, value_name = "D,R")]
    ghw: Option<String>,
    #[arg(long)]
    weight_matrix: bool,
    #[arg(long)]
    footprint: bool,
    #[arg(long)]
    duality: bool,
    #[arg(long)]
    selfdual: bool,
    #[arg(long)]
    gorenstein: bool,
    #[arg(long)]
    regular_form: bool,
    /// Linear form regular on S/I for the Artinian reduction.
    #[arg(long, value_name = "FORM")]
    h: Option<String>,
    /// Read the points as affine points and take their closure.
    #[arg(long)]
    affine: bool,
    /// Enumeration budget; defaults to RMCODE_BUDGET or 10^7.
    #[arg(long)]
    budget: Option<u128>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Shorthand for --format json.
    #[arg(long, conflicts_with_all = ["format", "table"])]
    json: bool,
    /// Shorthand for --format table.
    #[arg(long, conflicts_with = "format")]
    table: bool,
    /// Exit with status 1 when a duality, self-duality or Gorenstein
    /// criterion is false.
    #[arg(long)]
    strict: bool,
    /// Include the elapsed time in the report.
    #[arg(long)]
    timing: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Table,
}

#[derive(Args)]
struct GenerateArgs {
    #[arg(value_enum)]
    kind: GenKind,
    /// Field size, a prime power.
    #[arg(long)]
    q: u32,
    /// Number of projective coordinates (projective, torus).
    #[arg(long)]
    s: Option<usize>,
    /// Affine dimension (affine-grid).
    #[arg(long)]
    n: Option<usize>,
    /// Exponent vectors v_1;...;v_s with comma-separated entries
    /// (parameterized).
    #[arg(long)]
    exponents: Option<String>,
    /// Write to this file instead of standard output.
    #[arg(long, short)]
    output: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum GenKind {
    Projective,
    Torus,
    Parameterized,
    AffineGrid,
}

fn fail(code: i32, msg: impl std::fmt::Display) -> i32 {
    eprintln!("error: {msg}");
    code
}

fn read(path: &PathBuf) -> Result<String, i32> {
    std::fs::read_to_string(path).map_err(|e| fail(EXIT_INPUT, format!("{}: {e}", path.display())))
}

fn cmd_analyze(a: AnalyzeArgs) -> i32 {
    let text = match read(&a.file) {
        Ok(t) => t,
        Err(c) => return c,
    };
    let mut file = match parse_points_file(&text) {
        Ok(f) => f,
        Err(e) => return fail(exit_code(&e), e),
    };
    if a.affine && !file.affine {
        if file.order.is_some() {
            return fail(EXIT_INPUT, "--affine conflicts with the order line of the file; use --order");
        }
        file.affine = true;
    }
    let order = match &a.order {
        Some(spec) => match parse_order_spec(spec, file.ring_nvars()) {
            Ok(o) => Some(o),
            Err(e) => return fail(EXIT_INPUT, e),
        },
        None => None,
    };
    let ghw = match &a.ghw {
        Some(s) => {
            let parsed = s
                .split_once(',')
                .and_then(|(d, r)| Some((d.trim().parse().ok()?, r.trim().parse().ok()?)));
            match parsed {
                Some(p) => Some(p),
                None => return fail(EXIT_INPUT, format!("--ghw expects d,r, found {s:?}")),
            }
        }
        None => None,
    };
    let opts = Options {
        order,
        ghw,
        weight_matrix: a.weight_matrix,
        footprint: a.footprint,
        duality: a.duality,
        selfdual: a.selfdual,
        gorenstein: a.gorenstein,
        regular_form: a.regular_form,
        h: a.h,
        budget: a.budget.unwrap_or_else(budget_from_env),
        timing: a.timing,
    };
    let outcome = match analyze(&file, &opts) {
        Ok(o) => o,
        Err(e) => return fail(exit_code(&e), e),
    };
    let table = a.table || (a.format == Format::Table && !a.json);
    if table {
        print!("{}", table::render(&outcome.report));
    } else {
        print!("{}", to_json(&outcome.report));
    }
    if !outcome.report.incomplete.is_empty() {
        EXIT_BUDGET
    } else if a.strict && !outcome.false_criteria.is_empty() {
        eprintln!("false: {}", outcome.false_criteria.join(", "));
        EXIT_CRITERION_FALSE
    } else {
        EXIT_OK
    }
}

fn cmd_generate(g: GenerateArgs) -> i32 {
    let field = match field_of_order(g.q) {
        Ok(f) => f,
        Err(e) => return fail(EXIT_INPUT, e),
    };
    let missing = |what: &str| fail(EXIT_INPUT, format!("missing --{what}"));
    let kind = match g.kind {
        GenKind::Projective => match g.s {
            Some(s) => Kind::Projective { s },
            None => return missing("s"),
        },
        GenKind::Torus => match g.s {
            Some(s) => Kind::Torus { s },
            None => return missing("s"),
        },
        GenKind::AffineGrid => match g.n {
            Some(n) => Kind::AffineGrid { n },
            None => return missing("n"),
        },
        GenKind::Parameterized => match g.exponents.as_deref().map(parse_exponents) {
            Some(Ok(exponents)) => Kind::Parameterized { exponents },
            Some(Err(e)) => return fail(EXIT_INPUT, e),
            None => return missing("exponents"),
        },
    };
    let file = match generate(&field, &kind) {
        Ok(f) => f,
        Err(e) => return fail(exit_code(&e), e),
    };
    let text = write_points_file(&file);
    match g.output {
        Some(path) => match std::fs::write(&path, text) {
            Ok(()) => EXIT_OK,
            Err(e) => fail(EXIT_INPUT, format!("{}: {e}", path.display())),
        },
        None => {
            print!("{text}");
            EXIT_OK
        }
    }
}

fn cmd_golden(name: Option<String>, budget: Option<u128>) -> i32 {
    let limit = budget.unwrap_or_else(budget_from_env);
    let outcomes = match run_corpus(name.as_deref(), limit) {
        Ok(o) => o,
        Err(e @ Error::InvalidParams(_)) => return fail(EXIT_INPUT, e),
        Err(e) => return fail(exit_code(&e), e),
    };
    let mut failed = 0;
    for o in &outcomes {
        let status = if o.passed() { "PASS" } else { "FAIL" };
        println!("{status} {} ({} checks)", o.name, o.checks.len());
        for c in o.failures() {
            failed += 1;
            println!("  {}:", c.name);
            for line in c.detail.lines() {
                println!("    {line}");
            }
        }
    }
    let passed = outcomes.iter().filter(|o| o.passed()).count();
    println!("{passed}/{} examples pass", outcomes.len());
    let internal = outcomes
        .iter()
        .flat_map(|o| o.failures())
        .any(|c| c.detail.contains("internal inconsistency") || c.detail.contains("identity violated"));
    if internal {
        EXIT_INTERNAL
    } else if failed > 0 {
        EXIT_CRITERION_FALSE
    } else {
        EXIT_OK
    }
}

fn cmd_validate(path: PathBuf) -> i32 {
    let text = match read(&path) {
        Ok(t) => t,
        Err(c) => return c,
    };
    match validate(&text) {
        Ok(_) => {
            println!("valid");
            EXIT_OK
        }
        Err(e) => fail(EXIT_INPUT, e),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match cli.command {
        Command::Analyze(a) => cmd_analyze(a),
        Command::Generate(g) => cmd_generate(g),
        Command::Golden { name, budget } => cmd_golden(name, budget),
        Command::Validate { file } => cmd_validate(file),
    };
    ExitCode::from(code as u8)
}
