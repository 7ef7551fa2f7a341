mod output;

use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use parkpat::bijections::{parse_tree, phi_123_132, Family as TreeFamily};
use parkpat::counting::{pf_count, pk_count, CountResult};
use parkpat::generalized::{ClassFamily, DEFAULT_PATH_CAP};
use parkpat::oracle::{verify_all, Family as Suite, OracleReport};
use parkpat::parking::{format_blocks, parse_blocks, ParkingFunction};
use parkpat::permutation::PatternSet;
use parkpat::Error;

use output::{parse_bfile, render, Format, OutputRecord};

const PATH_CAP_VAR: &str = "PARKPAT_PATH_CAP";

#[derive(Parser)]
#[command(name = "parkpat", version, about = "Counts and bijections for pattern-avoiding parking functions")]
struct Cli {
    /// Print elapsed time to stderr.
    #[arg(long, global = true)]
    timing: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Notion {
    /// Parking permutation (the car in each spot).
    Pk,
    /// Block permutation (blocks written increasingly, concatenated).
    Pf,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Direction {
    Forward,
    Backward,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SuiteArg {
    Formulas,
    Bijections,
    Classes,
    All,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TextOrJson {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Count parking functions of size n avoiding the patterns.
    Count {
        #[arg(long, value_enum)]
        notion: Notion,
        /// Comma-separated patterns, e.g. 123,132.
        #[arg(long)]
        patterns: String,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: TextOrJson,
    },
    /// Terms n = 1..=n-max.
    Sequence {
        #[arg(long, value_enum)]
        notion: Notion,
        #[arg(long)]
        patterns: String,
        #[arg(long)]
        n_max: usize,
        #[arg(long, value_enum, default_value = "bfile")]
        format: Format,
        /// Compare against a b-file instead of printing the terms.
        #[arg(long)]
        compare: Option<PathBuf>,
    },
    /// Class counts of generalized parking functions for n = 1..=n-max.
    Classes {
        /// hyposylvester-multi, metasylvester-multi, metasylvester-m, hypoplactic-m or hyposylvester-m.
        family: String,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n_max: usize,
        #[arg(long, value_enum, default_value = "bfile")]
        format: Format,
        /// Path-enumeration cap; defaults to $PARKPAT_PATH_CAP or 10000000.
        #[arg(long)]
        cap: Option<u64>,
    },
    /// Apply a tree bijection to each line of the input.
    Bijection {
        /// 123-132 or 123-213.
        #[arg(long)]
        family: String,
        #[arg(long, value_enum)]
        direction: Direction,
        /// Print vertex labels (forward 123-132 only).
        #[arg(long)]
        labeled: bool,
        /// Input file; stdin when absent or "-".
        input: Option<PathBuf>,
    },
    /// Compare formulas with brute-force oracles.
    Verify {
        #[arg(long, value_enum, default_value = "all")]
        suite: SuiteArg,
        #[arg(long, default_value_t = 7)]
        n_max: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: TextOrJson,
    },
}

/// Exit statuses.
enum Failure {
    Usage(String),
    Mismatch(String),
    Budget(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::BudgetExceeded { .. } | Error::TooLarge { .. } => Failure::Budget(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let start = Instant::now();
    let result = run(cli.command);
    if cli.timing {
        eprintln!("elapsed: {} ms", start.elapsed().as_millis());
    }
    match result {
        Ok(text) => {
            let mut out = io::stdout().lock();
            if out.write_all(text.as_bytes()).and_then(|_| out.flush()).is_err() {
                return ExitCode::from(1);
            }
            ExitCode::SUCCESS
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Mismatch(report)) => {
            print!("{report}");
            ExitCode::from(2)
        }
        Err(Failure::Budget(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}

fn run(command: Command) -> Result<String, Failure> {
    match command {
        Command::Count { notion, patterns, n, format } => {
            let set = parse_patterns(&patterns)?;
            let r = count(notion, &set, n)?;
            Ok(match format {
                TextOrJson::Text => format!("{}\n", r.value),
                TextOrJson::Json => {
                    let rec = record(n, &r, None);
                    format!("{}\n", serde_json::to_string_pretty(&rec).expect("record serializes"))
                }
            })
        }
        Command::Sequence { notion, patterns, n_max, format, compare } => {
            let set = parse_patterns(&patterns)?;
            let records = (1..=n_max)
                .map(|n| count(notion, &set, n).map(|r| record(n, &r, None)))
                .collect::<Result<Vec<_>, _>>()?;
            match compare {
                None => Ok(render(&records, format)),
                Some(path) => compare_bfile(&records, &path),
            }
        }
        Command::Classes { family, m, n_max, format, cap } => {
            let family: ClassFamily = family.parse()?;
            let cap = match cap {
                Some(c) => c,
                None => env_cap()?,
            };
            let method = match family {
                ClassFamily::MetasylvesterM => "path_enumeration",
                ClassFamily::MetasylvesterMulti => "recurrence",
                _ => "formula",
            };
            let mut records = Vec::new();
            for n in 1..=n_max {
                let v = family.count(n, m, Some(cap))?;
                records.push(OutputRecord { n, value: v.to_string(), method: method.into(), m: Some(m) });
            }
            Ok(render(&records, format))
        }
        Command::Bijection { family, direction, labeled, input } => {
            let family: TreeFamily = family.parse()?;
            if labeled && (family != TreeFamily::P123_132 || direction != Direction::Forward) {
                return Err(Failure::Usage("--labeled applies to forward 123-132 only".into()));
            }
            let text = read_input(input)?;
            let mut out = String::new();
            for (i, raw) in text.lines().enumerate() {
                let line = i + 1;
                let trimmed = raw.trim();
                if trimmed.is_empty() || trimmed.starts_with('#') {
                    continue;
                }
                let indent = raw.len() - raw.trim_start().len();
                let converted = match direction {
                    Direction::Forward => {
                        let f = parse_function(trimmed, line, indent)?;
                        if labeled {
                            phi_123_132(&f).map(|t| t.to_string())
                        } else {
                            family.forward(&f).map(|t| t.to_string())
                        }
                    }
                    Direction::Backward => {
                        let t = parse_tree(raw, line)?;
                        family.backward(&t).map(|f| format_blocks(&f.to_blocks()))
                    }
                };
                let converted = converted.map_err(|e| Failure::Usage(format!("line {line}: {e}")))?;
                out.push_str(&converted);
                out.push('\n');
            }
            Ok(out)
        }
        Command::Verify { suite, n_max, format } => verify(suite, n_max, format),
    }
}

fn parse_patterns(text: &str) -> Result<PatternSet, Failure> {
    text.parse().map_err(|e: Error| Failure::Usage(format!("--patterns: {e}")))
}

fn count(notion: Notion, set: &PatternSet, n: usize) -> Result<CountResult, Failure> {
    Ok(match notion {
        Notion::Pk => pk_count(n, set),
        Notion::Pf => pf_count(n, set)?,
    })
}

fn record(n: usize, r: &CountResult, m: Option<usize>) -> OutputRecord {
    OutputRecord { n, value: r.value.to_string(), method: r.method.to_string(), m }
}

fn env_cap() -> Result<u64, Failure> {
    match std::env::var(PATH_CAP_VAR) {
        Ok(v) => v.trim().parse().map_err(|_| Failure::Usage(format!("{PATH_CAP_VAR}={v:?} is not a number"))),
        Err(_) => Ok(DEFAULT_PATH_CAP),
    }
}

fn read_input(input: Option<PathBuf>) -> Result<String, Failure> {
    let mut text = String::new();
    match input {
        Some(p) if p.as_os_str() != "-" => {
            text = std::fs::read_to_string(&p).map_err(|e| Failure::Usage(format!("{}: {e}", p.display())))?;
        }
        _ => {
            io::stdin().read_to_string(&mut text).map_err(|e| Failure::Usage(format!("stdin: {e}")))?;
        }
    }
    Ok(text)
}

/// Block notation when the text starts with `(`, preferences otherwise.
fn parse_function(text: &str, line: usize, indent: usize) -> Result<ParkingFunction, Failure> {
    let shift = |e: Error| match e {
        Error::Parse { column, message, .. } => Error::Parse { line, column: column + indent, message },
        other => other,
    };
    let f = if text.starts_with('(') {
        let blocks = parse_blocks(text, line).map_err(shift)?;
        ParkingFunction::from_blocks(&blocks)
    } else {
        text.parse::<ParkingFunction>().map_err(shift)
    };
    f.map_err(|e| match e {
        Error::Parse { .. } => Failure::Usage(e.to_string()),
        other => Failure::Usage(format!("line {line}: {other}")),
    })
}

fn compare_bfile(records: &[OutputRecord], path: &PathBuf) -> Result<String, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    let terms = parse_bfile(&text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    let mut report = String::new();
    let mut compared = 0;
    let mut bad = 0;
    for (n, value) in &terms {
        let Some(r) = records.iter().find(|r| r.n == *n) else { continue };
        compared += 1;
        if &r.value != value {
            bad += 1;
            report.push_str(&format!("n={n}: computed {}, file {value}\n", r.value));
        }
    }
    if bad > 0 {
        report.push_str(&format!("{bad} of {compared} terms differ\n"));
        Err(Failure::Mismatch(report))
    } else {
        Ok(format!("{compared} terms agree\n"))
    }
}

#[derive(Serialize)]
struct VerifySummary {
    reports: Vec<OracleReport>,
    mismatches: usize,
}

fn verify(suite: SuiteArg, n_max: usize, format: TextOrJson) -> Result<String, Failure> {
    let mut reports = Vec::new();
    if matches!(suite, SuiteArg::Formulas | SuiteArg::All) {
        reports.extend(verify_all(n_max, &[Suite::Pk, Suite::Pf])?);
    }
    if matches!(suite, SuiteArg::Classes | SuiteArg::All) {
        reports.extend(verify_all(n_max, &[Suite::Classes])?);
    }
    if matches!(suite, SuiteArg::Bijections | SuiteArg::All) {
        reports.extend(verify_bijections(n_max.min(9))?);
    }
    let mismatches = reports.iter().filter(|r| !r.agree).count();
    let text = match format {
        TextOrJson::Json => {
            let summary = VerifySummary { reports, mismatches };
            format!("{}\n", serde_json::to_string_pretty(&summary).expect("summary serializes"))
        }
        TextOrJson::Text => {
            let mut s = String::new();
            for r in reports.iter().filter(|r| !r.agree) {
                let m = r.m.map(|m| format!(" m={m}")).unwrap_or_default();
                s.push_str(&format!("MISMATCH {} n={}{m}: oracle {}, formula {}\n", r.quantity, r.n, r.oracle, r.formula));
            }
            s.push_str(&format!("{} checks, {mismatches} mismatches\n", reports.len()));
            s
        }
    };
    if mismatches > 0 {
        Err(Failure::Mismatch(text))
    } else {
        Ok(text)
    }
}

/// Round trips over every member of each family; the oracle value is the
/// number of trees hit, the formula value the number of trees in the target
/// family.
fn verify_bijections(n_max: usize) -> Result<Vec<OracleReport>, Failure> {
    use num_bigint::BigUint;
    use parkpat::bijections::enumerate_trees;
    use parkpat::parking::enumerate_block_avoiding;
    use std::collections::HashSet;

    let mut reports = Vec::new();
    for family in TreeFamily::ALL {
        for n in 1..=n_max {
            let trees = enumerate_trees(n + 1, family.tree_filter());
            let mut hit = HashSet::new();
            for f in enumerate_block_avoiding(n, &family.patterns()) {
                let t = family.forward(&f)?;
                if family.backward(&t)? == f {
                    hit.insert(t);
                }
            }
            reports.push(OracleReport::new(
                format!("bijection {family}"),
                n,
                None,
                &BigUint::from(hit.len()),
                &BigUint::from(trees.len()),
            ));
        }
    }
    Ok(reports)
}
