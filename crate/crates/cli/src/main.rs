//! `zdg`: zero-divisor graphs of finite rings, semigroups, spaces and posets.

mod analyze;
mod export;
mod guards;
mod object;
mod report;

use std::fs;
use std::io::Write;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use zdg_core::poly::{check_armendariz_ring, check_content_containment, check_gaussian, clique_stabilization};
use zdg_core::ring::FiniteRing;
use zdg_core::verify::{run_suite, VerifyOptions, SUITES};
use zdg_core::Limits;

use export::{ExportFormat, GraphKind};
use guards::GuardArgs;
use object::ObjectArgs;
use report::{verdict_line, Report, TaskOutput};

#[derive(Debug, Parser)]
#[command(name = "zdg", version, about = "Zero-divisor graphs, Armendariz maps and spectral lattices")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    guards: GuardArgs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone, clap::Args)]
struct Output {
    #[arg(long, value_enum)]
    format: Option<Format>,
    /// Write the report here instead of stdout.
    #[arg(long, value_name = "FILE")]
    out: Option<String>,
    /// Leave timings out of JSON reports so that reruns are byte-identical.
    #[arg(long)]
    no_timing: bool,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Run analyses on one object.
    Analyze {
        #[command(flatten)]
        object: ObjectArgs,
        /// Comma-separated: invariants, eq-quotient, armendariz, ideals, ag, comaximal,
        /// axioms, alpha, t1, charirrconn, specs-suite.
        #[arg(long, value_delimiter = ',', required = true)]
        tasks: Vec<String>,
        #[command(flatten)]
        output: Output,
    },
    /// Run a named verification suite over a generated corpus (`all` runs every suite).
    Verify {
        suite: String,
        #[arg(long, default_value_t = 7)]
        seed: u64,
        #[arg(long, default_value_t = 4)]
        max_fields: usize,
        #[arg(long, default_value_t = 5)]
        max_ground: usize,
        #[arg(long, default_value_t = 32)]
        max_ring_order: usize,
        /// Maximal points per fan window.
        #[arg(long, default_value_t = 8)]
        window: usize,
        #[arg(long, default_value_t = 9)]
        content_max_order: usize,
        #[arg(long, default_value_t = 2)]
        content_degree: usize,
        #[command(flatten)]
        output: Output,
    },
    /// Export a graph as DOT or JSON.
    Export {
        #[command(flatten)]
        object: ObjectArgs,
        #[arg(long, value_enum, default_value = "gamma")]
        graph: GraphKind,
        #[arg(long, value_enum, default_value = "dot")]
        format: ExportFormat,
        #[arg(long, value_name = "FILE")]
        out: Option<String>,
    },
    /// Exhaustive checks on polynomials of bounded degree over a ring.
    Content {
        #[arg(long)]
        ring: String,
        #[arg(long)]
        degree: usize,
        #[arg(long, value_enum)]
        check: ContentCheck,
        #[command(flatten)]
        output: Output,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ContentCheck {
    Armendariz,
    Gaussian,
    /// Clique and chromatic numbers of the truncated graphs for degrees 0..=d.
    CliqueStab,
    /// `c(fg) ⊆ c(f)c(g)`.
    Containment,
}

#[derive(Debug)]
pub enum Failure {
    Input(String),
    Core(zdg_core::Error),
}

impl From<zdg_core::Error> for Failure {
    fn from(e: zdg_core::Error) -> Self {
        Failure::Core(e)
    }
}

impl std::fmt::Display for Failure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Failure::Input(s) => f.write_str(s),
            Failure::Core(e) => write!(f, "{e}"),
        }
    }
}

fn elapsed_ms(t: Instant) -> f64 {
    t.elapsed().as_secs_f64() * 1000.0
}

fn emit(output: &Output, default: Format, report: &Report, text: &[String]) -> Result<(), Failure> {
    let body = match output.format.unwrap_or(default) {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&report.to_json(!output.no_timing)).expect("report");
            s.push('\n');
            s
        }
        Format::Text => {
            let mut s = text.join("\n");
            s.push('\n');
            s
        }
    };
    write_out(output.out.as_deref(), &body)
}

fn write_out(path: Option<&str>, body: &str) -> Result<(), Failure> {
    match path {
        Some(p) => fs::write(p, body).map_err(|e| Failure::Input(format!("{p}: {e}"))),
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(body.as_bytes())
                .and_then(|_| out.flush())
                .map_err(|e| Failure::Input(format!("stdout: {e}")))
        }
    }
}

fn analyze(object: &ObjectArgs, tasks: &[String], output: &Output, limits: &Limits) -> Result<bool, Failure> {
    let tasks: Vec<&str> = tasks.iter().map(|t| t.trim()).filter(|t| !t.is_empty()).collect();
    if tasks.is_empty() {
        return Err(Failure::Input("task list is empty".into()));
    }
    let obj = object.load(limits)?;
    let name = obj.name(object);
    let mut report = Report::new("analyze", object.echo(&obj), guards::to_json(limits));
    let mut text = Vec::new();
    let mut results: Vec<TaskOutput> = Vec::new();
    for task in tasks {
        let t = Instant::now();
        let out = analyze::run_task(task, &obj, &name, limits)?;
        report.timing_ms.push((task.to_string(), elapsed_ms(t)));
        text.push(format!("[{task}]"));
        text.extend(out.lines.iter().map(|l| format!("  {l}")));
        text.extend(out.verdicts.iter().map(|v| format!("  {}", verdict_line(v))));
        report.passed &= out.verdicts.iter().all(|v| v.passed);
        results.push(out);
    }
    report.body.insert("results".into(), serde_json::to_value(&results).expect("results"));
    emit(output, Format::Text, &report, &text)?;
    Ok(report.passed)
}

fn verify(suite: &str, opts: &VerifyOptions, output: &Output, limits: &Limits) -> Result<bool, Failure> {
    let names: Vec<&str> = if suite == "all" {
        SUITES.to_vec()
    } else if SUITES.contains(&suite) {
        vec![suite]
    } else {
        return Err(Failure::Input(format!("unknown suite `{suite}`; known: all, {}", SUITES.join(", "))));
    };
    let echo = json!({ "kind": "suite", "source": suite, "seed": opts.seed });
    let mut report = Report::new("verify", echo, guards::to_json(limits));
    report.body.insert(
        "options".into(),
        json!({
            "seed": opts.seed,
            "max_fields": opts.max_fields,
            "max_ground": opts.max_ground,
            "max_ring_order": opts.max_ring_order,
            "window": opts.window,
            "content_max_order": opts.content_max_order,
            "content_degree": opts.content_degree,
        }),
    );
    let mut text = Vec::new();
    let mut suites: Vec<Value> = Vec::new();
    for name in names {
        let t = Instant::now();
        let rep = run_suite(name, opts, limits)?;
        report.timing_ms.push((name.to_string(), elapsed_ms(t)));
        let ok = rep.items.iter().filter(|i| i.passed).count();
        text.push(format!(
            "{} {name}: {ok}/{} items pass",
            if rep.passed() { "PASS" } else { "FAIL" },
            rep.items.len()
        ));
        for f in rep.failures() {
            text.push(format!("  FAIL {}: {}", f.name, f.detail));
            if let Some(w) = &f.witness {
                text.push(format!("    witness {w}"));
            }
        }
        report.passed &= rep.passed();
        suites.push(serde_json::to_value(&rep).expect("suite"));
    }
    report.body.insert("suites".into(), Value::Array(suites));
    emit(output, Format::Text, &report, &text)?;
    Ok(report.passed)
}

fn content(ring: &str, degree: usize, check: ContentCheck, output: &Output, limits: &Limits) -> Result<bool, Failure> {
    let r = FiniteRing::parse(ring, limits)?;
    let echo = json!({ "kind": "ring", "source": ring, "ring": r.to_string(), "order": r.order() });
    let mut report = Report::new("content", echo, guards::to_json(limits));
    let t = Instant::now();
    let (passed, verdict, line) = match check {
        ContentCheck::Armendariz | ContentCheck::Gaussian | ContentCheck::Containment => {
            let v = match check {
                ContentCheck::Armendariz => check_armendariz_ring(&r, degree, limits)?,
                ContentCheck::Gaussian => check_gaussian(&r, degree, limits)?,
                _ => check_content_containment(&r, degree, limits)?,
            };
            let mut line = format!(
                "{} {} at degree ≤ {degree}: {} pairs checked",
                if v.passed { "PASS" } else { "FAIL" },
                r,
                v.pairs_checked
            );
            if let Some(w) = &v.witness {
                line.push_str(&format!("; witness f = {}, g = {} ({})", w.f, w.g, w.detail));
            }
            (v.passed, serde_json::to_value(&v).expect("verdict"), line)
        }
        ContentCheck::CliqueStab => {
            let s = clique_stabilization(&r, degree, limits)?;
            let rows: Vec<String> = s
                .rows
                .iter()
                .map(|row| format!("d={} clq {} χ {}", row.degree, row.clique, row.chromatic))
                .collect();
            let line = format!(
                "{} {}: base clq {} χ {}; {}",
                if s.passed { "PASS" } else { "FAIL" },
                r,
                s.base_clique,
                s.base_chromatic,
                rows.join(", ")
            );
            (s.passed, serde_json::to_value(&s).expect("report"), line)
        }
    };
    report.timing_ms.push(("check".into(), elapsed_ms(t)));
    report.passed = passed;
    let check_name = check.to_possible_value().expect("named").get_name().to_string();
    report.body.insert("check".into(), json!(check_name));
    report.body.insert("degree".into(), json!(degree));
    report.body.insert("verdict".into(), verdict);
    emit(output, Format::Json, &report, &[line])?;
    Ok(passed)
}

fn run(cli: Cli) -> Result<bool, Failure> {
    let env = std::env::var(guards::ENV_VAR).ok();
    let limits = cli.guards.resolve(env.as_deref()).map_err(Failure::Input)?;
    match cli.command {
        Command::Analyze { object, tasks, output } => analyze(&object, &tasks, &output, &limits),
        Command::Verify {
            suite,
            seed,
            max_fields,
            max_ground,
            max_ring_order,
            window,
            content_max_order,
            content_degree,
            output,
        } => {
            let opts = VerifyOptions {
                seed,
                max_fields,
                max_ground,
                max_ring_order,
                window,
                content_max_order,
                content_degree,
            };
            verify(&suite, &opts, &output, &limits)
        }
        Command::Export {
            object,
            graph,
            format,
            out,
        } => {
            let obj = object.load(&limits)?;
            let (g, title) = export::graph(&obj, graph, &obj.name(&object), &limits)?;
            write_out(out.as_deref(), &export::render(&g, &title, format))?;
            Ok(true)
        }
        Command::Content {
            ring,
            degree,
            check,
            output,
        } => content(&ring, degree, check, &output, &limits),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(2),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
