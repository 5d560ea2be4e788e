//! `trisphere`: enumerate sphere triangulations, count their rainbow
//! three-edge-colorings, and verify the results against reference values
//! and brute-force oracles.
//!
//! Exit codes: 0 success, 1 failed check or internal invariant, 2 usage or
//! parse error.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use trisphere::generator::{enumerate, EnumerateError};
use trisphere::tricolor::{class_summary, enumerate_colorings};
use trisphere::EnumerationResult;
use trisphere_cli::checks::{oracle_checks, reference_checks, report_table, VerifyData};
use trisphere_cli::format::{dot_graph, parse_rotation, serialize_rotation};

#[derive(Parser)]
#[command(name = "trisphere", version, about = "Sphere triangulations and their rainbow edge colorings")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, PartialEq, Eq, Debug, ValueEnum)]
enum OutputFormat {
    /// One rotation-system line per triangulation.
    Rot,
    /// One DOT graph block per triangulation, faces as comments.
    Dot,
}

#[derive(Subcommand)]
enum Command {
    /// Enumerate all triangulations with up to N vertices, up to
    /// isomorphism (mirror images identified).
    Enumerate {
        /// Largest vertex count, between 4 and 11.
        #[arg(long = "max-n")]
        max_n: usize,
        /// Directory for per-n output files; without it the data is
        /// streamed to stdout.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = OutputFormat::Rot)]
        format: OutputFormat,
    },
    /// Count (and optionally list) the rainbow colorings of each input
    /// triangulation, up to renaming of the colors.
    Color {
        /// Input file, one rotation-system line per triangulation.
        #[arg(long = "in")]
        input: PathBuf,
        /// Print only the per-line class counts (the default).
        #[arg(long)]
        count: bool,
        /// Also print each coloring as edge:color assignments.
        #[arg(long)]
        list: bool,
        /// Also print each coloring's per-color component summary.
        #[arg(long)]
        summaries: bool,
    },
    /// Run the built-in checks and print one PASS/FAIL line each.
    Verify {
        /// Check enumeration counts, degree tables, and the published
        /// coloring counts (the default action).
        #[arg(long)]
        paper: bool,
        /// Additionally run the brute-force oracle agreement sweeps.
        #[arg(long)]
        oracle: bool,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Enumerate { max_n, out, format } => cmd_enumerate(max_n, out.as_deref(), format),
        Command::Color {
            input,
            count,
            list,
            summaries,
        } => cmd_color(&input, count, list, summaries),
        Command::Verify { paper, oracle } => cmd_verify(paper, oracle),
    }
}

fn render(result: &EnumerationResult, n: usize, format: OutputFormat) -> String {
    let mut out = String::new();
    for (i, rep) in result.representatives(n).iter().enumerate() {
        match format {
            OutputFormat::Rot => {
                out.push_str(&serialize_rotation(&rep.triangulation));
                out.push('\n');
            }
            OutputFormat::Dot => {
                let name = format!("t{n}_{i}_{}", rep.code.hex_prefix(8));
                out.push_str(&dot_graph(&rep.triangulation, &name));
            }
        }
    }
    out
}

fn cmd_enumerate(max_n: usize, out: Option<&Path>, format: OutputFormat) -> ExitCode {
    let result = match enumerate(max_n) {
        Ok(result) => result,
        Err(e @ EnumerateError::NMaxOutOfRange { .. }) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let extension = match format {
        OutputFormat::Rot => "rot",
        OutputFormat::Dot => "dot",
    };
    if let Some(dir) = out {
        if let Err(e) = fs::create_dir_all(dir) {
            eprintln!("error: cannot create {}: {e}", dir.display());
            return ExitCode::from(2);
        }
        for n in 4..=max_n {
            let path = dir.join(format!("n{n}.{extension}"));
            if let Err(e) = fs::write(&path, render(&result, n, format)) {
                eprintln!("error: cannot write {}: {e}", path.display());
                return ExitCode::from(2);
            }
        }
    } else {
        let mut stdout = std::io::stdout().lock();
        for n in 4..=max_n {
            if stdout.write_all(render(&result, n, format).as_bytes()).is_err() {
                return ExitCode::from(1);
            }
        }
    }
    println!("n μ(n)");
    for (n, count) in result.counts() {
        println!("{n} {count}");
    }
    ExitCode::SUCCESS
}

fn cmd_color(input: &Path, _count: bool, list: bool, summaries: bool) -> ExitCode {
    let text = match fs::read_to_string(input) {
        Ok(text) => text,
        Err(e) => {
            eprintln!("error: cannot read {}: {e}", input.display());
            return ExitCode::from(2);
        }
    };
    for (lineno, line) in text.lines().enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        let t = match parse_rotation(line) {
            Ok(t) => t,
            Err(e) => {
                eprintln!("error: line {}: {e}", lineno + 1);
                return ExitCode::from(2);
            }
        };
        let colorings = enumerate_colorings(&t);
        println!("{}", colorings.len());
        if list || summaries {
            for coloring in &colorings {
                if list {
                    let parts: Vec<String> = coloring
                        .assignments()
                        .map(|(e, c)| {
                            let (u, v) = e.endpoints();
                            format!("{u}-{v}:{c}")
                        })
                        .collect();
                    println!("  {}", parts.join(" "));
                }
                if summaries {
                    let summary = class_summary(&t, coloring)
                        .expect("emitted colorings are valid");
                    println!("  summary {summary}");
                }
            }
        }
    }
    ExitCode::SUCCESS
}

fn cmd_verify(paper: bool, oracle: bool) -> ExitCode {
    // bare `verify` behaves like `verify --paper`
    let paper = paper || !oracle;
    let data = VerifyData::compute();
    print!("{}", report_table(&data));
    let mut checks = Vec::new();
    if paper {
        checks.extend(reference_checks(&data));
    }
    if oracle {
        checks.extend(oracle_checks(&data));
    }
    let mut failed = 0usize;
    for check in &checks {
        println!("{}", check.render());
        if !check.pass {
            failed += 1;
        }
    }
    println!("{} checks, {} failed", checks.len(), failed);
    if failed > 0 {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    }
}
