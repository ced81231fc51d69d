//! `tracechar`: JSON front end to the trace-character library.
//!
//! Exit status 0 on success, 1 when the input is mathematically rejected (the
//! report carries the witness), 2 when the input is malformed.

mod commands;
mod io;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};
use tracechar::{Base, Tower};

#[derive(Parser, Debug)]
#[command(name = "tracechar", version, about = "Exact SL(2) character computations")]
struct Cli {
    /// Base field: `q` or `fp:<p>`.
    #[arg(long, global = true, default_value = "q")]
    field: String,
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Worker threads for `exceptional` and `identities`.
    #[arg(long, global = true, default_value_t = 1)]
    jobs: usize,
    /// Input file, `-` for stdin, or inline JSON.
    #[arg(long, global = true)]
    input: Option<String>,
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Six traces `[t1, t2, t3, t12, t23, t31]` to three matrices.
    Realize,
    /// Trace polynomial of a word such as `x1 x2 x1^-1`.
    Tracepoly,
    /// Residual of the rank-3 character variety at a 7-tuple.
    Variety,
    /// Propagate a torus or four-holed-sphere seed to a list of slopes.
    Propagate,
    /// Classify fifteen values on the five-holed sphere.
    Check05,
    /// Glue fifteen values into a representation of the five-holed sphere.
    Glue05,
    /// Enumerate the exceptional +-2 trace functions on the n-holed sphere.
    Exceptional {
        #[arg(long)]
        n: usize,
        /// Largest n accepted; the search grows quickly beyond 8.
        #[arg(long, default_value_t = 8)]
        max_n: usize,
        /// Also count orbits under relabeling the boundary.
        #[arg(long)]
        orbits: bool,
    },
    /// Randomized report on the basic trace identities and the trace reducer.
    Identities {
        #[arg(long, default_value_t = 100)]
        samples: usize,
    },
}

pub enum Failure {
    /// Well-formed input the mathematics rejects; the value is the report.
    Rejected(Value),
    Malformed(String),
}

impl From<tracechar::Error> for Failure {
    fn from(e: tracechar::Error) -> Self {
        match e {
            tracechar::Error::Parse(m) => Failure::Malformed(m),
            e => Failure::Rejected(json!({ "error": e.to_string() })),
        }
    }
}

pub struct Ctx {
    pub tower: Tower,
    pub seed: u64,
    pub jobs: usize,
}

fn run(cli: &Cli) -> (Value, u8) {
    let base = match Base::parse(&cli.field) {
        Ok(b) => b,
        Err(e) => return (json!({ "error": e.to_string() }), 2),
    };
    let ctx = Ctx { tower: Tower::new(base), seed: cli.seed, jobs: cli.jobs.max(1) };
    let needs_input = !matches!(cli.command, Command::Exceptional { .. } | Command::Identities { .. });
    let input = match (needs_input, &cli.input) {
        (false, _) => Value::Null,
        (true, None) => return (json!({ "error": "this command needs --input" }), 2),
        (true, Some(src)) => match io::read_input(src) {
            Ok(v) => v,
            Err(m) => return (json!({ "error": m }), 2),
        },
    };
    let (name, result) = match &cli.command {
        Command::Realize => ("realize", commands::realize(&ctx, &input)),
        Command::Tracepoly => ("tracepoly", commands::tracepoly(&input)),
        Command::Variety => ("variety", commands::variety(&ctx, &input)),
        Command::Propagate => ("propagate", commands::propagate(&ctx, &input)),
        Command::Check05 => ("check05", commands::check05(&ctx, &input)),
        Command::Glue05 => ("glue05", commands::glue05(&ctx, &input)),
        Command::Exceptional { n, max_n, orbits } => ("exceptional", commands::exceptional(&ctx, *n, *max_n, *orbits)),
        Command::Identities { samples } => ("identities", commands::identities(&ctx, *samples)),
    };
    let (body, code) = match result {
        Ok(v) => (v, 0),
        Err(Failure::Rejected(v)) => (v, 1),
        Err(Failure::Malformed(m)) => (json!({ "error": m }), 2),
    };
    let mut report = json!({
        "schema": "1",
        "command": name,
        "field": ctx.tower.base().label(),
        "seed": ctx.seed,
        "input": input,
        "tower": ctx.tower.levels_json(),
    });
    if let (Value::Object(r), Value::Object(b)) = (&mut report, body) {
        r.extend(b);
    }
    (report, code)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (report, code) = run(&cli);
    let text = serde_json::to_string_pretty(&report).expect("reports serialize") + "\n";
    match &cli.output {
        Some(path) => {
            if let Err(e) = std::fs::write(path, text) {
                eprintln!("cannot write {}: {e}", path.display());
                return ExitCode::from(2);
            }
        }
        None => print!("{text}"),
    }
    if code == 2 {
        eprintln!("error: {}", report["error"].as_str().unwrap_or("malformed input"));
    }
    ExitCode::from(code)
}
