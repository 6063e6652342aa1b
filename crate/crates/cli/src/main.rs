use std::io::{self, BufRead, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use mahonian::bijections::{
    complement_descents, descent_class, rotate_code_prefix, shuffle_class_bijection,
    sort_code_prefix, Composition,
};
use mahonian::codes::{
    ic, ic_inv, invcode, invcode_inv, lc, lc_inv, majcode, majcode_inv, mc, mc_inv,
};
use mahonian::harness::registry::{format_tuple, parse_specs};
use mahonian::harness::{
    emit_table, eval_tuple, load_golden_fixture, run_suite, CheckId, GoldenTable, SuiteOptions,
};
use mahonian::{Error, Permutation, PositionSet, SubdiagonalWord, SubexcedentWord};

#[derive(Parser)]
#[command(
    name = "mahonian",
    version,
    about = "Permutation codes, statistics and equidistribution checks"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum CodeName {
    Invcode,
    Majcode,
    Lc,
    Ic,
    Mc,
}

#[derive(Clone, Copy, ValueEnum)]
enum MapName {
    /// Complements the descent set.
    #[value(name = "complement", alias = "theorem2")]
    Complement,
    /// Rotates the first k digits of Mc.
    #[value(name = "rotate", alias = "lemma4")]
    Rotate,
    /// Sorts the first k digits of Mc.
    #[value(name = "sort-prefix", alias = "lemma5")]
    SortPrefix,
    /// Shuffle-class bijection trading Mc for Ic.
    #[value(name = "shuffle", alias = "lemma7")]
    Shuffle,
}

#[derive(Subcommand)]
enum Command {
    /// Encode permutations (arguments, or one per stdin line).
    Code {
        #[arg(value_enum)]
        name: CodeName,
        inputs: Vec<String>,
    },
    /// Decode code words back to permutations.
    Decode {
        #[arg(value_enum)]
        name: CodeName,
        inputs: Vec<String>,
    },
    /// Evaluate a statistic tuple on permutations read from stdin.
    Stat {
        /// Statistic names, separated by spaces or commas.
        #[arg(required = true)]
        specs: Vec<String>,
    },
    /// Apply one of the constructive maps to permutations.
    Map {
        #[arg(value_enum)]
        name: MapName,
        /// Prefix length for rotate and sort-prefix.
        #[arg(long)]
        k: Option<usize>,
        /// Composition for shuffle, e.g. 2,1,2.
        #[arg(long)]
        comp: Option<String>,
        inputs: Vec<String>,
    },
    /// Print the n = 4 table.
    Table {
        #[arg(long)]
        fixture: Option<PathBuf>,
    },
    /// Run the exhaustive check suite.
    Check {
        #[arg(long)]
        max_n: Option<usize>,
        /// Comma-separated check ids.
        #[arg(long, value_delimiter = ',')]
        only: Option<Vec<String>>,
        #[arg(long)]
        json: bool,
        /// Raise the triple check to n = 8.
        #[arg(long)]
        extended: bool,
        /// List check ids and exit.
        #[arg(long)]
        list: bool,
    },
    /// List the permutations of S_n with a given inverse descent set.
    Class {
        #[arg(long)]
        n: usize,
        /// Positions as digits or a comma list; "-" for the empty set.
        #[arg(long, allow_hyphen_values = true)]
        iligne: String,
        /// Exact set instead of containment.
        #[arg(long)]
        strict: bool,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn inputs_or_stdin(inputs: Vec<String>) -> Result<Vec<String>, Error> {
    if !inputs.is_empty() {
        return Ok(inputs);
    }
    let mut out = Vec::new();
    for line in io::stdin().lock().lines() {
        let line = line.map_err(|e| Error::Parse(e.to_string()))?;
        if !line.trim().is_empty() {
            out.push(line.trim().to_string());
        }
    }
    Ok(out)
}

fn perms(inputs: Vec<String>) -> Result<Vec<Permutation>, Error> {
    inputs_or_stdin(inputs)?.iter().map(|s| s.parse()).collect()
}

/// Returns `Ok(false)` when a check failed.
fn run(command: Command) -> Result<bool, Error> {
    let mut out = io::stdout().lock();
    let mut emit = |line: String| {
        let _ = writeln!(out, "{line}");
    };
    match command {
        Command::Code { name, inputs } => {
            for sigma in perms(inputs)? {
                let word = match name {
                    CodeName::Invcode => invcode(&sigma).to_string(),
                    CodeName::Majcode => majcode(&sigma).to_string(),
                    CodeName::Lc => lc(&sigma).to_string(),
                    CodeName::Ic => ic(&sigma).to_string(),
                    CodeName::Mc => mc(&sigma).to_string(),
                };
                emit(word);
            }
        }
        Command::Decode { name, inputs } => {
            for text in inputs_or_stdin(inputs)? {
                let sigma = match name {
                    CodeName::Invcode => invcode_inv(&text.parse::<SubexcedentWord>()?),
                    CodeName::Majcode => majcode_inv(&text.parse::<SubexcedentWord>()?),
                    CodeName::Lc => lc_inv(&text.parse::<SubdiagonalWord>()?),
                    CodeName::Ic => ic_inv(&text.parse::<SubdiagonalWord>()?),
                    CodeName::Mc => mc_inv(&text.parse::<SubdiagonalWord>()?),
                };
                emit(sigma.to_compact());
            }
        }
        Command::Stat { specs } => {
            let specs = parse_specs(&specs.join(","))?;
            for sigma in perms(Vec::new())? {
                emit(format_tuple(&eval_tuple(&sigma, &specs)?));
            }
        }
        Command::Map {
            name,
            k,
            comp,
            inputs,
        } => {
            let need_k = || k.ok_or_else(|| Error::Precondition("--k is required".into()));
            let comp: Option<Composition> = comp.map(|c| c.parse()).transpose()?;
            for sigma in perms(inputs)? {
                let image = match name {
                    MapName::Complement => complement_descents(&sigma),
                    MapName::Rotate => rotate_code_prefix(&sigma, need_k()?)?,
                    MapName::SortPrefix => sort_code_prefix(&sigma, need_k()?)?,
                    MapName::Shuffle => {
                        let comp = comp
                            .as_ref()
                            .ok_or_else(|| Error::Precondition("--comp is required".into()))?;
                        shuffle_class_bijection(&sigma, comp)?
                    }
                };
                emit(image.to_compact());
            }
        }
        Command::Table { fixture } => {
            let table = match fixture {
                Some(path) => load_golden_fixture(path)?,
                None => GoldenTable::shipped()?,
            };
            let _ = write!(out, "{}", emit_table(&table));
        }
        Command::Check {
            max_n,
            only,
            json,
            extended,
            list,
        } => {
            if list {
                for id in CheckId::ALL {
                    emit(format!("{id}\t{}", id.description()));
                }
                return Ok(true);
            }
            let only = only
                .map(|ids| {
                    ids.iter()
                        .map(|s| s.parse())
                        .collect::<Result<Vec<CheckId>, _>>()
                })
                .transpose()?;
            let report = run_suite(&SuiteOptions {
                max_n,
                extended,
                only,
            })?;
            for c in &report.checks {
                if json {
                    let record = serde_json::json!({
                        "id": c.id,
                        "n_range": [c.n_min, c.n_max],
                        "verdict": if c.passed { "pass" } else { "fail" },
                        "witness": c.witness,
                        "note": c.note,
                        "elapsed_ms": c.elapsed_ms,
                    });
                    emit(record.to_string());
                } else {
                    let status = if c.passed { "PASS" } else { "FAIL" };
                    let mut line = format!(
                        "{status} {:<22} n={}..{} {:>10.1} ms",
                        c.id, c.n_min, c.n_max, c.elapsed_ms
                    );
                    if let Some(w) = &c.witness {
                        line.push_str(&format!("  witness: {w}"));
                    }
                    if let Some(n) = &c.note {
                        line.push_str(&format!("  [{n}]"));
                    }
                    emit(line);
                }
            }
            return Ok(report.all_passed());
        }
        Command::Class { n, iligne, strict } => {
            let set = PositionSet::parse(&iligne, n)?;
            for sigma in descent_class(n, &set, strict)? {
                emit(sigma.to_compact());
            }
        }
    }
    Ok(true)
}
