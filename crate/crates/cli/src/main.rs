use std::io::Read;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use hyperops::embedding::power_tower;
use hyperops::expr::{self, Config, Value};
use hyperops::hereditary::{decode, encode, HereditaryTerm};
use hyperops::laws::{run_suite, Suite};
use hyperops::{Budget, Error, LeveledNat, Natural};

const SUITE_FAILED: u8 = 4;

#[derive(Parser)]
#[command(name = "hyperops", version, about = "Exact arithmetic over leveled hyperoperation structures")]
struct Cli {
    /// Exponential base w0 (at least 2)
    #[arg(short = 'w', long, global = true, default_value = "2")]
    base: Natural,

    /// Largest intermediate result width, in bits
    #[arg(long, global = true)]
    budget_bits: Option<u64>,

    /// Print machine-readable JSON
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate an expression
    Eval {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Print the hereditary term of coordinate VALUE at LEVEL
    Encode {
        #[arg(long, default_value_t = 0)]
        level: u32,
        value: Natural,
    },
    /// Read a hereditary term as JSON from standard input
    Decode,
    /// Run a property suite
    Verify {
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, default_value_t = 0)]
        level: u32,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        cases: u64,
    },
    /// Real image of an exact expression under base OMEGA
    Embed {
        #[arg(long)]
        omega: Natural,
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Infinite power tower x^x^x^...
    Tower { x: f64 },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}

fn run(cli: &Cli) -> Result<u8, Error> {
    let budget = cli.budget_bits.map_or_else(Budget::default, Budget::with_bits);
    let config = Config {
        base: cli.base.clone(),
        budget,
    };
    let show = |v: &Value| {
        if cli.json {
            println!("{}", v.to_json(&budget));
        } else {
            println!("{}", v.display(&budget));
        }
    };
    match &cli.command {
        Command::Eval { expr } => show(&expr::eval_str(expr, &config)?),
        Command::Embed { omega, expr } => {
            let config = Config {
                base: omega.clone(),
                budget,
            };
            let inner = expr::parse(expr)?;
            let wrapped = expr::parse(&format!("EMBED({})", expr::render(&inner)))?;
            show(&expr::eval(&wrapped, &config)?);
        }
        Command::Encode { level, value } => {
            let a = LeveledNat::new(*level, value.clone(), cli.base.clone())?;
            println!("{}", encode(&a).to_json());
        }
        Command::Decode => {
            let mut text = String::new();
            std::io::stdin()
                .read_to_string(&mut text)
                .map_err(|e| Error::MalformedTerm(e.to_string()))?;
            let term = HereditaryTerm::from_json(&text)?;
            show(&Value::Nat(decode(&term, &cli.base, &budget)?));
        }
        Command::Verify {
            suite,
            level,
            seed,
            cases,
        } => {
            let suite: Suite = suite.parse()?;
            let report = run_suite(suite, *level, *seed, *cases);
            if cli.json {
                println!("{}", serde_json::to_string_pretty(&report).expect("reports serialize"));
            } else {
                println!("{}", report.to_string().trim_end());
            }
            if !report.passed() {
                return Ok(SUITE_FAILED);
            }
        }
        Command::Tower { x } => show(&Value::Tower(power_tower(*x, 1e-12, 100_000)?)),
    }
    Ok(0)
}
