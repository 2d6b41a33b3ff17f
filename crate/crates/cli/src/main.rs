use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, Context};
use clap::{Parser, Subcommand, ValueEnum};

use diplace_core::census::{
    self, big_F, bound_lemma51, bound_lemma53, bound_thm54, bound_thm57, f_of, missing_day_three, theorem_table,
    BigBound, ReferenceTable,
};
use diplace_core::conflict::{self, ConflictSpec, Ruleset};
use diplace_core::digraph::io::{parse_json, to_dot, to_json};
use diplace_core::digraph::DigraphGame;
use diplace_core::expr::parse_value;
use diplace_core::synth::{synthesize_with_trace, SynthError};
use diplace_core::value::{bracket, compare, make_game, outcome, pretty, Game};

#[derive(Parser)]
#[command(name = "diplace", version, about = "Digraph placement games: evaluate, compile, synthesize, enumerate")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Value of a digraph position.
    Eval {
        file: PathBuf,
        /// Canonical value (the default when no flag is given).
        #[arg(long)]
        canonical: bool,
        /// Outcome class: L, R, N or P.
        #[arg(long)]
        outcome: bool,
        /// Literal form as a bracket encoding.
        #[arg(long)]
        literal: bool,
    },
    /// Compare two value expressions: prints <, >, = or ||.
    Compare {
        #[arg(allow_hyphen_values = true)]
        left: String,
        #[arg(allow_hyphen_values = true)]
        right: String,
    },
    /// Value of the disjoint union of several positions.
    Sum {
        #[arg(required = true)]
        files: Vec<PathBuf>,
    },
    /// Build a digraph equal to a value expression.
    Synth {
        #[arg(allow_hyphen_values = true)]
        expr: String,
        #[arg(short, long)]
        output: PathBuf,
        #[arg(long)]
        dot: Option<PathBuf>,
        /// Print the rule applied at each level.
        #[arg(long)]
        trace: bool,
    },
    /// Compile a ruleset position or raw conflict spec to a digraph.
    Compile {
        #[arg(long, value_enum)]
        ruleset: RulesetArg,
        position: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Enumerate all small digraphs and record the least witness per value.
    Census {
        #[arg(long)]
        max_n: usize,
        #[arg(long, default_value_t = 1)]
        workers: usize,
        #[arg(short, long)]
        output: Option<PathBuf>,
        /// Needed for five vertices (33.5 million graphs).
        #[arg(long)]
        allow_five: bool,
    },
    /// Check the embedded atlas of day-2 digraphs.
    Atlas {
        #[command(subcommand)]
        action: AtlasAction,
    },
    /// Bounds on F(b).
    Bounds {
        #[arg(long)]
        b: u32,
        /// Print the rows b = 0..5 as well.
        #[arg(long)]
        table: bool,
    },
}

#[derive(Subcommand)]
enum AtlasAction {
    Verify,
}

#[derive(Clone, Copy, ValueEnum)]
enum RulesetArg {
    Poset,
    Domineering,
    Nodekayles,
    Col,
    Raw,
}

/// Exit code 1 for failed checks, 2 for bad input.
enum Failure {
    Check(anyhow::Error),
    Input(anyhow::Error),
}

type Outcome = Result<(), Failure>;

fn input<E: Into<anyhow::Error>>(e: E) -> Failure {
    Failure::Input(e.into())
}

fn check<E: Into<anyhow::Error>>(e: E) -> Failure {
    Failure::Check(e.into())
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).with_context(|| format!("reading {}", path.display())).map_err(input)
}

fn write(path: &Path, text: &str) -> Outcome {
    fs::write(path, text).with_context(|| format!("writing {}", path.display())).map_err(input)
}

fn load(path: &Path) -> Result<DigraphGame, Failure> {
    parse_json(&read(path)?).with_context(|| format!("parsing {}", path.display())).map_err(input)
}

fn value_arg(text: &str) -> Result<Game, Failure> {
    parse_value(text).map_err(|e| input(anyhow!("{text:?}: {e}")))
}

fn eval(file: &Path, canonical: bool, show_outcome: bool, literal: bool) -> Outcome {
    let g = load(file)?;
    let value = g.value();
    if canonical || !(show_outcome || literal) {
        println!("{}", pretty(value));
    }
    if show_outcome {
        println!("{}", outcome(value));
    }
    if literal {
        println!("{}", bracket(g.literal()));
    }
    Ok(())
}

fn sum(files: &[PathBuf]) -> Outcome {
    let mut total = DigraphGame::new();
    for f in files {
        total = total.disjoint_union(&load(f)?);
    }
    println!("{}", pretty(total.value()));
    Ok(())
}

fn synth(expr: &str, output: &Path, dot: Option<&Path>, trace: bool) -> Outcome {
    let target = value_arg(expr)?;
    let report = synthesize_with_trace(target).map_err(|e: SynthError| check(e))?;
    if trace {
        for step in &report.trace {
            println!("{step}");
        }
    }
    write(output, &to_json(&report.graph))?;
    if let Some(dot) = dot {
        write(dot, &to_dot(&report.graph))?;
    }
    // The written file, read back, must evaluate to the request.
    let back = load(output)?.value();
    if back != target {
        return Err(check(anyhow!("{} evaluates to {}, not {}", output.display(), pretty(back), pretty(target))));
    }
    println!("{} vertices, value {}", report.graph.order(), pretty(back));
    Ok(())
}

fn compile(ruleset: RulesetArg, position: &Path, output: Option<&Path>) -> Outcome {
    let text = read(position)?;
    let spec = match ruleset {
        RulesetArg::Raw => ConflictSpec::from_json(&text).map_err(input)?,
        other => {
            let ruleset = match other {
                RulesetArg::Poset => Ruleset::Poset,
                RulesetArg::Domineering => Ruleset::Domineering,
                RulesetArg::Nodekayles => Ruleset::NodeKayles,
                RulesetArg::Col => Ruleset::Col,
                RulesetArg::Raw => unreachable!(),
            };
            let pos = conflict::parse_position(ruleset, &text).map_err(input)?;
            conflict::to_conflict(&pos).map_err(input)?
        }
    };
    let g = conflict::compile(&spec).map_err(input)?;
    let interpreted = conflict::interpret(&spec).map_err(input)?;
    if interpreted != g.literal() {
        return Err(check(anyhow!("compiled digraph differs from direct play")));
    }
    match output {
        Some(path) => {
            write(path, &to_json(&g))?;
            println!("{} moves, value {}", g.order(), pretty(g.value()));
        }
        None => println!("{}", to_json(&g)),
    }
    Ok(())
}

fn run_census(max_n: usize, workers: usize, output: Option<&Path>, allow_five: bool) -> Outcome {
    if max_n == census::HARD_CAP && !allow_five {
        return Err(input(anyhow!("a five-vertex census needs --allow-five")));
    }
    let c = census::enumerate(max_n, workers).map_err(input)?;
    if let Some(path) = output {
        write(path, &c.to_json())?;
    }
    println!("graphs visited: {}", c.graphs);
    println!("distinct values: {}", c.len());
    for b in 0..=2 {
        match big_F(b, &c) {
            Ok(f) => println!("F({b}) = {f}"),
            Err(e) => println!("F({b}): {e}"),
        }
    }
    let show = |name: &str, x: Game| match f_of(x, &c) {
        Some(n) => println!("f({name}) = {n}"),
        None => println!("f({name}) > {max_n}"),
    };
    show("*2", value_arg("*2")?);
    show("{1|-1}", make_game([value_arg("1")?], [value_arg("-1")?]));
    let missing = missing_day_three(&c);
    if let Some(&x) = missing.first() {
        println!("birthday-3 values of the form {{A|B}} absent: {} (e.g. {})", missing.len(), pretty(x));
    }
    Ok(())
}

fn atlas_verify() -> Outcome {
    let report = census::check_atlas();
    for c in &report {
        println!(
            "{} {:<10} {:<10} {} vertices (drawn {})",
            if c.ok { "PASS" } else { "FAIL" },
            c.name,
            c.value,
            c.vertices,
            c.expected_vertices
        );
    }
    census::verify_atlas().map(|_| ()).map_err(check)
}

fn bounds(b: u32, table: bool) -> Outcome {
    let reference = ReferenceTable::default();
    println!("lower bound 2[b-1]: F({b}) >= {}", bound_thm54(b));
    if b >= 1 {
        if let Some(prev) = reference.row(b - 1) {
            let rows = theorem_table();
            if let Some(f_prev) = rows.iter().find(|r| r.b == b - 1).and_then(|r| r.upper.as_exact()) {
                let up = bound_lemma51(&prev.a, f_prev, (b - 1) as u64);
                let flag = if prev.exact { "" } else { " (from an upper bound on a(b-1))" };
                println!("recursive upper bound: F({b}) <= {}{flag}", BigBound::Exact(up));
            }
        }
        if let Some(next) = reference.row(b + 1) {
            let flag = if next.exact { "" } else { " (from an upper bound on g(b+1))" };
            println!(
                "upper bound g(b+1)/2 - b: F({b}) <= {}{flag}",
                bound_thm57(&BigBound::Exact(next.g.clone()), b as u64)
            );
        }
    }
    println!("values on at most {b} vertices: G({b}) <= {}", bound_lemma53(b as u64));
    if table {
        println!("b  lower  upper");
        for r in theorem_table() {
            let flag = if r.upper_from_bound_input { " *" } else { "" };
            println!("{}  {}  {}{flag}", r.b, r.lower, r.upper);
        }
    }
    Ok(())
}

fn run(cli: Cli) -> Outcome {
    match cli.command {
        Command::Eval { file, canonical, outcome, literal } => eval(&file, canonical, outcome, literal),
        Command::Compare { left, right } => {
            println!("{}", compare(value_arg(&left)?, value_arg(&right)?));
            Ok(())
        }
        Command::Sum { files } => sum(&files),
        Command::Synth { expr, output, dot, trace } => synth(&expr, &output, dot.as_deref(), trace),
        Command::Compile { ruleset, position, output } => compile(ruleset, &position, output.as_deref()),
        Command::Census { max_n, workers, output, allow_five } => {
            run_census(max_n, workers, output.as_deref(), allow_five)
        }
        Command::Atlas { action: AtlasAction::Verify } => atlas_verify(),
        Command::Bounds { b, table } => bounds(b, table),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Check(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
        Err(Failure::Input(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
