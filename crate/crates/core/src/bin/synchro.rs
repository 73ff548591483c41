use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use synchro::algebra::{self, NormalForm};
use synchro::catalog::{self, ExpectedFlags};
use synchro::growth::{self, SigmaTable};
use synchro::sync::{self, SyncProfile};
use synchro::verify;
use synchro::{Error, PeriodicWord, Transducer};

/// Synchronous transducer laboratory.
///
/// Machine arguments are `.tdx` files, `-` for stdin, or `catalog:NAME`
/// (`catalog:family_3`, `catalog:h4exp_5` for the parametric entries).
#[derive(Parser)]
#[command(name = "synchro", version)]
struct Cli {
    /// Write the result here instead of stdout.
    #[arg(short, long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Parse a machine and report its size.
    Validate { machine: String },
    /// Size, digest and structural flags as JSON.
    Info { machine: String },
    /// Synchronization profile as JSON.
    Sync { machine: String },
    /// Synchronization profile as JSON (bi-synchronizing level included).
    Bisync { machine: String },
    /// Synchronization profile as JSON, or the core machine with `--tdx`.
    Core {
        machine: String,
        #[arg(long)]
        tdx: bool,
    },
    /// Minimal core with canonical labels.
    MinCore { machine: String },
    /// Quotient by ω-equivalence.
    Minimize { machine: String },
    /// Synchronization profile as JSON, CoreDist included.
    Coredist { machine: String },
    /// Product A∗B (A reads first).
    Compose { a: String, b: String },
    /// m-th power: minimal core via repeated products, or the raw product.
    Power {
        machine: String,
        #[arg(short)]
        m: usize,
        #[arg(long)]
        raw: bool,
    },
    /// Inverse machine (fails unless every state permutes the alphabet).
    Invert { machine: String },
    /// Dual machine: states and letters swap roles.
    Dual { machine: String },
    /// The map x ↦ λ(x, 𝔰(x)) on words of length k, as JSON.
    LevelMap {
        machine: String,
        #[arg(short)]
        k: usize,
    },
    /// Image of a periodic point.
    Act {
        machine: String,
        #[arg(long)]
        cycle: String,
    },
    /// min Core(C⁻¹ ∗ A ∗ C).
    Conjugate { a: String, c: String },
    /// Core sizes of powers.
    Growth {
        machine: String,
        #[arg(long, default_value_t = 8)]
        max_power: usize,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
    /// Σ(i, j).
    Sigma { i: u32, j: i64 },
    /// Checks on the five-state dummy machine.
    #[command(subcommand)]
    Dummy(DummyCommand),
    /// Input bits realizing an exponent prefix.
    SolvePrefix { bits: String },
    /// Builtin machines.
    #[command(subcommand)]
    Catalog(CatalogCommand),
    /// Run the reproducibility suite.
    Verify {
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Print the full reports as JSON after the table.
        #[arg(long)]
        json: bool,
    },
}

#[derive(Subcommand)]
enum DummyCommand {
    /// Compare closed-form active states with simulation.
    Verify {
        #[arg(long, default_value_t = 10)]
        max_i: usize,
        #[arg(long, default_value_t = 12)]
        k: usize,
    },
}

#[derive(Subcommand)]
enum CatalogCommand {
    /// Names with their expected flags.
    List,
    /// A builtin machine as `.tdx`.
    Get { name: String },
    /// Member i of the bi-synchronizing family.
    Family {
        #[arg(short)]
        i: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Csv,
    Json,
}

/// Failures that are the caller's fault exit with 2, the rest with 1.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Parse(_)
            | Error::Invalid(_)
            | Error::UnknownName(_)
            | Error::UnknownState(_)
            | Error::LetterOutOfRange { .. }
            | Error::EmptyCycle => 2,
            _ => 1,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        code: 2,
        message: message.into(),
    }
}

/// What a command produced, and whether its checks passed.
struct Output {
    text: String,
    ok: bool,
}

impl Output {
    fn text(text: String) -> Self {
        Output { text, ok: true }
    }

    fn json(value: &Value) -> Self {
        Output::text(format!("{}\n", serde_json::to_string_pretty(value).expect("serializable")))
    }

    fn machine(t: &Transducer) -> Self {
        Output::text(t.to_tdx())
    }
}

fn load(arg: &str) -> Result<Transducer, Failure> {
    if let Some(name) = arg.strip_prefix("catalog:") {
        return Ok(catalog_entry(name)?.machine);
    }
    let text = if arg == "-" {
        let mut s = String::new();
        io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| usage(format!("stdin: {e}")))?;
        s
    } else {
        fs::read_to_string(arg).map_err(|e| usage(format!("{arg}: {e}")))?
    };
    Transducer::parse(&text).map_err(|e| {
        let mut f = Failure::from(e);
        f.message = format!("{arg}: {}", f.message);
        f
    })
}

fn catalog_entry(name: &str) -> Result<catalog::CatalogEntry, Error> {
    let param = |prefix: &str| {
        name.strip_prefix(prefix)
            .map(|rest| rest.parse::<usize>().map_err(|_| Error::UnknownName(name.to_string())))
    };
    if let Some(i) = param("family_") {
        return catalog::bisync_family(i?);
    }
    if let Some(n) = param("h4exp_") {
        return catalog::h4exp_n(n?);
    }
    catalog::builtin(name)
}

fn max_states() -> Result<usize, Failure> {
    match std::env::var("SYNCHRO_MAX_STATES") {
        Ok(v) => v
            .parse()
            .map_err(|_| usage(format!("SYNCHRO_MAX_STATES must be a number, got `{v}`"))),
        Err(_) => Ok(algebra::DEFAULT_MAX_STATES),
    }
}

fn profile(t: &Transducer) -> Output {
    Output::json(&SyncProfile::of(t).to_json(t))
}

fn run(cli: Cli) -> Result<Output, Failure> {
    Ok(match cli.command {
        Command::Validate { machine } => {
            let t = load(&machine)?;
            Output::text(format!(
                "ok: {} states over {} letters\n",
                t.num_states(),
                t.alphabet_size()
            ))
        }
        Command::Info { machine } => {
            let t = load(&machine)?;
            let flags = ExpectedFlags::compute(&t)?;
            Output::json(&json!({
                "states": t.num_states(),
                "alphabet": t.alphabet_size(),
                "labels": t.labels(),
                "sha256": verify::digest(&t),
                "flags": flags,
            }))
        }
        Command::Sync { machine } | Command::Bisync { machine } | Command::Coredist { machine } => {
            profile(&load(&machine)?)
        }
        Command::Core { machine, tdx } => {
            let t = load(&machine)?;
            if tdx {
                Output::machine(&sync::core(&t)?)
            } else {
                profile(&t)
            }
        }
        Command::MinCore { machine } => Output::machine(NormalForm::of(&load(&machine)?)?.machine()),
        Command::Minimize { machine } => Output::machine(&algebra::minimize(&load(&machine)?)),
        Command::Compose { a, b } => Output::machine(&algebra::product(&load(&a)?, &load(&b)?)?),
        Command::Power { machine, m, raw } => {
            let t = load(&machine)?;
            if raw {
                Output::machine(&algebra::power_capped(&t, m, max_states()?)?)
            } else {
                Output::machine(NormalForm::of(&t)?.power(m)?.machine())
            }
        }
        Command::Invert { machine } => Output::machine(&load(&machine)?.invert()?),
        Command::Dual { machine } => Output::machine(&load(&machine)?.dual()),
        Command::LevelMap { machine, k } => {
            let t = load(&machine)?;
            let map = algebra::level_transformation(&t, k)?;
            let mapping: serde_json::Map<String, Value> = map
                .entries()
                .map(|(x, y)| (x.to_string(), Value::String(y.to_string())))
                .collect();
            Output::json(&json!({ "k": k, "alphabet": t.alphabet_size(), "mapping": mapping }))
        }
        Command::Act { machine, cycle } => {
            let t = load(&machine)?;
            let w: PeriodicWord = cycle.parse()?;
            let image = algebra::act_periodic(&t, &w)?;
            Output::json(&json!({ "cycle": w.to_string(), "image": image.to_string() }))
        }
        Command::Conjugate { a, c } => {
            let a = NormalForm::of(&load(&a)?)?;
            Output::machine(algebra::conjugate(&a, &load(&c)?)?.machine())
        }
        Command::Growth {
            machine,
            max_power,
            format,
        } => {
            let t = load(&machine)?;
            let opts = growth::GrowthOptions {
                raw_cap: max_states()?.min(growth::GrowthOptions::default().raw_cap),
            };
            let series = growth::growth_series_with(&t, max_power, opts, Default::default())?;
            let mut out = match format {
                Format::Csv => Output::text(series.to_csv()),
                Format::Json => Output::json(&serde_json::to_value(&series).expect("serializable")),
            };
            out.ok = series.conjecture_ok;
            out
        }
        Command::Sigma { i, j } => Output::text(format!("{}\n", growth::sigma(i, j))),
        Command::Dummy(DummyCommand::Verify { max_i, k }) => {
            let mut table = SigmaTable::new();
            let (mut cases, mut mismatches) = (0usize, Vec::new());
            for len in 0..=max_i {
                for code in 0..1usize << len {
                    let x: Vec<u8> = (0..len).map(|b| ((code >> (len - 1 - b)) & 1) as u8).collect();
                    for kk in 1..=k {
                        cases += 1;
                        let sim = growth::dummy_active_state(&x, kk);
                        let closed = growth::dummy_closed_form_with(&mut table, &x, kk);
                        if closed != sim && mismatches.len() < 10 {
                            mismatches.push(json!({ "x": x, "k": kk }));
                        }
                    }
                }
            }
            let mut out = Output::json(&json!({ "cases": cases, "mismatches": mismatches }));
            out.ok = mismatches.is_empty();
            out
        }
        Command::SolvePrefix { bits } => {
            let y: Vec<u8> = bits
                .chars()
                .map(|c| match c {
                    '0' => Ok(0),
                    '1' => Ok(1),
                    _ => Err(usage(format!("`{bits}` is not a bit string"))),
                })
                .collect::<Result<_, _>>()?;
            let x = growth::solve_exponent_prefix(&y)?;
            let s: String = x.iter().map(|b| char::from(b'0' + b)).collect();
            Output::text(format!("{s}\n"))
        }
        Command::Catalog(CatalogCommand::List) => {
            let mut s = String::new();
            for e in catalog::all() {
                s.push_str(&format!(
                    "{:<12} n={} states={} class={}\n",
                    e.name,
                    e.machine.alphabet_size(),
                    e.machine.num_states(),
                    e.expected.membership
                ));
            }
            s.push_str("family_I     n=3 states=I+1 (catalog:family_I)\n");
            s.push_str("h4exp_N      n=N states=2 (catalog:h4exp_N, N >= 4)\n");
            Output::text(s)
        }
        Command::Catalog(CatalogCommand::Get { name }) => Output::machine(&catalog_entry(&name)?.machine),
        Command::Catalog(CatalogCommand::Family { i }) => {
            Output::machine(&catalog::bisync_family(i)?.machine)
        }
        Command::Verify { suite, seed, json } => {
            let reports = verify::run_suite(&suite, seed)?;
            let mut s = String::new();
            for r in &reports {
                s.push_str(&format!("{r}\n"));
            }
            let passed = reports.iter().filter(|r| r.passed).count();
            s.push_str(&format!("{passed}/{} experiments passed\n", reports.len()));
            if json {
                s.push_str(&serde_json::to_string_pretty(&reports).expect("serializable"));
                s.push('\n');
            }
            Output {
                text: s,
                ok: passed == reports.len(),
            }
        }
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let out_path = cli.out.clone();
    match run(cli) {
        Ok(output) => {
            let written = match &out_path {
                Some(p) => fs::write(p, &output.text),
                None => io::stdout().write_all(output.text.as_bytes()),
            };
            if let Err(e) = written {
                eprintln!("synchro: {e}");
                return ExitCode::from(1);
            }
            if output.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(f) => {
            eprintln!("synchro: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
