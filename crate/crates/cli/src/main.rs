//! `aograph`: build, color, dominate, and certify alphabet overlap graphs.
//!
//! Exit codes: 0 success, 1 verification failure or refusal, 2 invalid
//! parameters, 3 size guard exceeded.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use aograph::coloring::{
    chromatic_report, optimal_coloring_oracle, recursive_coloring, theorem3_coloring,
    verify_coloring, Coloring, ColoringDomain, CHROMATIC_ORACLE_MAX_VERTICES,
};
use aograph::domination::{
    domination_number_exact_oracle, dominating_set_construct, verify_dominating,
    DOMINATION_ORACLE_MAX_VERTICES,
};
use aograph::graph::{export, materialize};
use aograph::hamiltonian::{
    eulerian_hamiltonian, grid_hamiltonian, insertion_hamiltonian, verify_cycle,
};
use aograph::planarity::{classify_planarity, verify_witness};
use aograph::serialize::{
    coloring_from_json, coloring_to_json, cycle_from_json, cycle_to_json, cycle_to_text,
    dominating_from_json, dominating_to_json, planarity_to_json, witness_from_json,
    SCHEMA_VERSION,
};
use aograph::{AOParams, AoError, ExportFormat, GridParams, SizeGuard, Verdict, Word};

#[derive(Parser)]
#[command(name = "aograph", version, about = "Alphabet overlap graph toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct ParamArgs {
    /// Word length k >= 2
    #[arg(long)]
    k: usize,
    /// Alphabet size d >= 1
    #[arg(long)]
    d: usize,
    /// Overlap length s in 1..k
    #[arg(long)]
    s: usize,
}

impl ParamArgs {
    fn parse(&self) -> Result<AOParams, AoError> {
        AOParams::new(self.k, self.d, self.s)
    }
}

#[derive(Args)]
struct OutputArgs {
    /// Write output to this file instead of standard output
    #[arg(long)]
    out: Option<PathBuf>,
    /// Disable all size guards (prints a warning)
    #[arg(long)]
    force: bool,
}

impl OutputArgs {
    fn guard(&self) -> SizeGuard {
        if self.force {
            eprintln!("warning: size guards disabled by --force");
            SizeGuard::unlimited()
        } else {
            SizeGuard::from_env()
        }
    }

    fn oracle_cap(&self, default: usize) -> usize {
        if self.force {
            usize::MAX
        } else {
            default
        }
    }

    fn emit(&self, text: &str) -> Result<(), AoError> {
        match &self.out {
            Some(path) => {
                fs::write(path, text).map_err(AoError::Io)
            }
            None => {
                print!("{text}");
                if !text.ends_with('\n') {
                    println!();
                }
                Ok(())
            }
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum GraphFormat {
    Json,
    Dot,
    Edges,
}

#[derive(Clone, Copy, ValueEnum)]
enum CycleFormat {
    Json,
    Text,
    /// Circular first-letter string; only defined for s = 1
    Sequence,
}

#[derive(Clone, Copy, ValueEnum)]
enum HamMethod {
    Insertion,
    Eulerian,
}

#[derive(Clone, Copy, ValueEnum)]
enum ColorMethod {
    Theorem3,
    Recursive,
    Oracle,
}

#[derive(Subcommand)]
enum Command {
    /// Materialize the graph and export it
    Build {
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long, value_enum, default_value = "json")]
        format: GraphFormat,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Construct a Hamiltonian cycle certificate
    Hamilton {
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long, value_enum)]
        method: HamMethod,
        #[arg(long, value_enum, default_value = "text")]
        format: CycleFormat,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Hamiltonian cycle of the d^dim grid, or the parity refusal
    GridHam {
        /// Side length d >= 2
        #[arg(long)]
        d: usize,
        /// Dimension >= 2
        #[arg(long)]
        dim: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: CycleFormat,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Produce a proper coloring
    Color {
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long, value_enum, default_value = "theorem3")]
        method: ColorMethod,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Report the chromatic number (exact value or bounds)
    Chromatic {
        #[command(flatten)]
        params: ParamArgs,
        /// Run the exact oracle even in the bounds-only regime
        #[arg(long)]
        oracle: bool,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Construct a dominating set
    Dominate {
        #[command(flatten)]
        params: ParamArgs,
        /// Also compute the exact domination number
        #[arg(long)]
        oracle: bool,
        /// Anchor word of length s (default all-a)
        #[arg(long)]
        anchor: Option<String>,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Classify planarity with a certificate
    Planarity {
        #[command(flatten)]
        params: ParamArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Check a stored certificate
    Verify {
        #[command(subcommand)]
        kind: VerifyKind,
    },
}

#[derive(Subcommand)]
enum VerifyKind {
    /// Hamiltonian cycle certificate
    Cycle {
        #[arg(long)]
        input: PathBuf,
    },
    /// Proper coloring
    Coloring {
        #[arg(long)]
        input: PathBuf,
    },
    /// Dominating set
    Dominating {
        #[arg(long)]
        input: PathBuf,
    },
    /// Complete bipartite witness
    Witness {
        #[arg(long)]
        input: PathBuf,
    },
}

fn exit_code(e: &AoError) -> u8 {
    match e {
        AoError::InvalidParams(_) | AoError::InvalidWord(_) | AoError::Parse(_) | AoError::Io(_) => 2,
        AoError::SizeGuard { .. } => 3,
        AoError::Precondition(_) | AoError::ConstructionFailed(_) => 1,
    }
}

fn fail(e: AoError) -> ExitCode {
    eprintln!("error: {e}");
    ExitCode::from(exit_code(&e))
}

fn verdict_exit(v: Verdict) -> ExitCode {
    match v.reason() {
        None => {
            println!("pass");
            ExitCode::SUCCESS
        }
        Some(reason) => {
            println!("fail: {reason}");
            ExitCode::from(1)
        }
    }
}

fn pretty(doc: serde_json::Value) -> String {
    format!("{}\n", serde_json::to_string_pretty(&doc).unwrap())
}

fn render_cycle(
    cert: &aograph::CycleCertificate,
    format: CycleFormat,
) -> Result<String, AoError> {
    match format {
        CycleFormat::Json => Ok(pretty(cycle_to_json(cert))),
        CycleFormat::Text => Ok(cycle_to_text(cert)),
        CycleFormat::Sequence => {
            let seq = cert.de_bruijn_sequence()?;
            Ok(format!("{}\n", seq.render(cert.alphabet())))
        }
    }
}

fn run(cli: Cli) -> ExitCode {
    match cli.command {
        Command::Build { params, format, output } => {
            let p = match params.parse() {
                Ok(p) => p,
                Err(e) => return fail(e),
            };
            let g = match materialize(&p, &output.guard()) {
                Ok(g) => g,
                Err(e) => return fail(e),
            };
            let fmt = match format {
                GraphFormat::Json => ExportFormat::Json,
                GraphFormat::Dot => ExportFormat::Dot,
                GraphFormat::Edges => ExportFormat::EdgeList,
            };
            match output.emit(&export(&g, fmt)) {
                Ok(()) => ExitCode::SUCCESS,
                Err(e) => fail(e),
            }
        }
        Command::Hamilton { params, method, format, output } => {
            let p = match params.parse() {
                Ok(p) => p,
                Err(e) => return fail(e),
            };
            let guard = output.guard();
            let cert = match method {
                HamMethod::Insertion => insertion_hamiltonian(&p, &guard),
                HamMethod::Eulerian => eulerian_hamiltonian(&p, &guard),
            };
            let cert = match cert {
                Ok(c) => c,
                Err(e) => return fail(e),
            };
            // constructors verify internally; check once more before printing
            if let Some(reason) = verify_cycle(&cert).reason() {
                eprintln!("error: constructed cycle failed verification: {reason}");
                return ExitCode::from(1);
            }
            match render_cycle(&cert, format).and_then(|text| output.emit(&text)) {
                Ok(()) => ExitCode::SUCCESS,
                Err(e) => fail(e),
            }
        }
        Command::GridHam { d, dim, format, output } => {
            let g = match GridParams::new(d, dim) {
                Ok(g) => g,
                Err(e) => return fail(e),
            };
            match grid_hamiltonian(&g, &output.guard()) {
                Ok(Ok(cert)) => {
                    if let Some(reason) = verify_cycle(&cert).reason() {
                        eprintln!("error: constructed cycle failed verification: {reason}");
                        return ExitCode::from(1);
                    }
                    match render_cycle(&cert, format).and_then(|text| output.emit(&text)) {
                        Ok(()) => ExitCode::SUCCESS,
                        Err(e) => fail(e),
                    }
                }
                Ok(Err(refusal)) => {
                    let doc = serde_json::json!({
                        "schema": SCHEMA_VERSION,
                        "status": "refusal",
                        "d": d,
                        "dim": dim,
                        "reason": refusal.reason,
                    });
                    let _ = output.emit(&pretty(doc));
                    ExitCode::from(1)
                }
                Err(e) => fail(e),
            }
        }
        Command::Color { params, method, output } => {
            let p = match params.parse() {
                Ok(p) => p,
                Err(e) => return fail(e),
            };
            let guard = output.guard();
            let coloring = match method {
                ColorMethod::Theorem3 => theorem3_coloring(&p, &guard),
                ColorMethod::Recursive => recursive_coloring(&p, &guard),
                ColorMethod::Oracle => oracle_coloring(&p, &guard, &output),
            };
            let coloring = match coloring {
                Ok(c) => c,
                Err(e) => return fail(e),
            };
            match verify_coloring(&coloring, &guard) {
                Ok(v) if v.is_pass() => {}
                Ok(v) => {
                    eprintln!(
                        "error: coloring failed verification: {}",
                        v.reason().unwrap_or("")
                    );
                    return ExitCode::from(1);
                }
                Err(e) => return fail(e),
            }
            match output.emit(&pretty(coloring_to_json(&coloring))) {
                Ok(()) => ExitCode::SUCCESS,
                Err(e) => fail(e),
            }
        }
        Command::Chromatic { params, oracle, output } => {
            let p = match params.parse() {
                Ok(p) => p,
                Err(e) => return fail(e),
            };
            let report = match chromatic_report(&p, oracle, &output.guard()) {
                Ok(r) => r,
                Err(e) => return fail(e),
            };
            let doc = serde_json::json!({
                "schema": SCHEMA_VERSION,
                "params": {"k": p.k(), "d": p.d(), "s": p.s()},
                "exact": report.exact,
                "lower": report.lower,
                "upper": report.upper,
                "notes": report.notes,
            });
            match output.emit(&pretty(doc)) {
                Ok(()) => ExitCode::SUCCESS,
                Err(e) => fail(e),
            }
        }
        Command::Dominate { params, oracle, anchor, output } => {
            let p = match params.parse() {
                Ok(p) => p,
                Err(e) => return fail(e),
            };
            let guard = output.guard();
            let anchor = match anchor {
                Some(text) => match Word::parse(&text, p.d()) {
                    Ok(w) => w,
                    Err(e) => return fail(e),
                },
                None => Word::zeros(p.s()),
            };
            let ds = match dominating_set_construct(&p, &anchor, &guard) {
                Ok(ds) => ds,
                Err(e) => return fail(e),
            };
            match verify_dominating(&ds, &guard) {
                Ok(v) if v.is_pass() => {}
                Ok(v) => {
                    eprintln!(
                        "error: dominating set failed verification: {}",
                        v.reason().unwrap_or("")
                    );
                    return ExitCode::from(1);
                }
                Err(e) => return fail(e),
            }
            let mut doc = dominating_to_json(&ds);
            if oracle {
                let g = match materialize(&p, &guard) {
                    Ok(g) => g,
                    Err(e) => return fail(e),
                };
                let cap = output.oracle_cap(DOMINATION_ORACLE_MAX_VERTICES);
                match domination_number_exact_oracle(&g, cap) {
                    Ok(gamma) => {
                        doc["oracle_gamma"] = serde_json::json!(gamma);
                    }
                    Err(e) => return fail(e),
                }
            }
            match output.emit(&pretty(doc)) {
                Ok(()) => ExitCode::SUCCESS,
                Err(e) => fail(e),
            }
        }
        Command::Planarity { params, output } => {
            let p = match params.parse() {
                Ok(p) => p,
                Err(e) => return fail(e),
            };
            let verdict = match classify_planarity(&p, &output.guard()) {
                Ok(v) => v,
                Err(e) => return fail(e),
            };
            match output.emit(&pretty(planarity_to_json(&verdict))) {
                Ok(()) => ExitCode::SUCCESS,
                Err(e) => fail(e),
            }
        }
        Command::Verify { kind } => {
            let guard = SizeGuard::from_env();
            let read = |path: &PathBuf| {
                fs::read_to_string(path).map_err(AoError::Io)
            };
            let result: Result<Verdict, AoError> = match kind {
                VerifyKind::Cycle { input } => {
                    read(&input).and_then(|t| cycle_from_json(&t)).map(|c| verify_cycle(&c))
                }
                VerifyKind::Coloring { input } => read(&input)
                    .and_then(|t| coloring_from_json(&t))
                    .and_then(|c| verify_coloring(&c, &guard)),
                VerifyKind::Dominating { input } => read(&input)
                    .and_then(|t| dominating_from_json(&t))
                    .and_then(|ds| verify_dominating(&ds, &guard)),
                VerifyKind::Witness { input } => {
                    read(&input).and_then(|t| witness_from_json(&t)).map(|w| verify_witness(&w))
                }
            };
            match result {
                Ok(v) => verdict_exit(v),
                Err(e) => fail(e),
            }
        }
    }
}

fn oracle_coloring(
    p: &AOParams,
    guard: &SizeGuard,
    output: &OutputArgs,
) -> Result<Coloring, AoError> {
    let g = materialize(p, guard)?;
    let cap = output.oracle_cap(CHROMATIC_ORACLE_MAX_VERTICES);
    let (chi, colors) = optimal_coloring_oracle(&g, cap)?;
    let mut assignment = std::collections::BTreeMap::new();
    for (i, label) in g.labels.iter().enumerate() {
        assignment.insert(Word::parse(label, p.d())?, colors[i]);
    }
    Ok(Coloring {
        assignment,
        palette: chi,
        domain: ColoringDomain::Ao(*p),
    })
}

fn main() -> ExitCode {
    run(Cli::parse())
}
