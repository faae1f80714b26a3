//! Command-line front end. [`run_cli`] takes its streams as arguments so it can
//! be driven from tests.

use std::io::{Read, Write};
use std::path::PathBuf;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::classifier::{decide_u_with, diagnose, Diagnosis, Mode, Verdict};
use crate::error::Error;
use crate::generators::{
    embed_in_u, gen_cycle, gen_f_tree, gen_gk, gen_path, gen_random_tree, gen_t, random_double_star_spec,
    rng_from_seed, DoubleStarSpec,
};
use crate::graph::Graph;
use crate::io::{parse_graph, write_graph, Format, ReportDocument};
use crate::ong::{build_ong, ong_structure_check, ComponentShape, DEFAULT_CAP};
use crate::packing::{packing_report_with, Limits, PackingReport};
use crate::verify;

#[derive(Parser, Debug)]
#[command(name = "openpack", version, about = "Open packing invariants and equicardinality tests")]
struct Cli {
    /// Graph format for input and output.
    #[arg(long, global = true, value_enum, default_value = "el")]
    format: FormatArg,
    /// Print a JSON report instead of plain text.
    #[arg(long, global = true)]
    json: bool,
    /// Seed for every random choice.
    #[arg(long, global = true, default_value_t = verify::DEFAULT_SEED)]
    seed: u64,
    /// Include wall-clock timing in JSON reports.
    #[arg(long, global = true)]
    timing: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FormatArg {
    El,
    G6,
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::El => Format::EdgeList,
            FormatArg::G6 => Format::Graph6,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ModeArg {
    Auto,
    Structural,
    Brute,
}

impl From<ModeArg> for Mode {
    fn from(m: ModeArg) -> Self {
        match m {
            ModeArg::Auto => Mode::Auto,
            ModeArg::Structural => Mode::Structural,
            ModeArg::Brute => Mode::Brute,
        }
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Generate a graph and print it.
    Gen {
        #[command(subcommand)]
        family: Family,
    },
    /// Order, size, girth, degree extremes, leaves and supports.
    Stats { file: Option<PathBuf> },
    /// Open packing numbers and the sizes of all maximal open packings.
    Spectrum {
        file: Option<PathBuf>,
        /// Largest accepted order (at most 64).
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: usize,
    },
    /// The open neighborhood graph and its component shapes.
    Ong { file: Option<PathBuf> },
    /// Structural diagnosis with partition, as JSON.
    Classify { file: Option<PathBuf> },
    /// Decide whether all maximal open packings have the same size.
    Decide {
        file: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "auto")]
        mode: ModeArg,
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: usize,
    },
    /// Run an acceptance suite by number (1-11), by name, or "all".
    Verify { suite: String },
}

#[derive(Subcommand, Debug)]
enum Family {
    Path {
        n: usize,
    },
    Cycle {
        n: usize,
    },
    /// Two subdivided stars K(1,n) with adjacent centers.
    #[command(name = "T")]
    T {
        n: usize,
    },
    /// x and y joined by k paths of length 7.
    #[command(name = "Gk")]
    Gk {
        k: usize,
    },
    /// Attach a pendant path of length 3 to every vertex of the input graph.
    Embed {
        file: Option<PathBuf>,
    },
    /// Tree assembled from double stars; random unless a JSON spec is given.
    Ftree {
        #[arg(long)]
        spec: Option<PathBuf>,
        #[arg(long, default_value_t = 4)]
        max_stars: usize,
    },
    /// Uniform random labeled tree.
    Randtree {
        n: usize,
    },
}

/// Failure modes mapped to exit codes.
enum Failure {
    Usage(String),
    Run(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse { .. } | Error::AtLine { .. } | Error::InvalidArgument(_) | Error::ParameterRange { .. } => {
                Failure::Usage(e.to_string())
            }
            _ => Failure::Run(e.to_string()),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

struct Context<'a> {
    format: Format,
    json: bool,
    seed: u64,
    timing: bool,
    stdin: &'a mut dyn Read,
    out: &'a mut dyn Write,
    started: Instant,
}

impl Context<'_> {
    fn read_graph(&mut self, file: &Option<PathBuf>) -> Result<Graph, Failure> {
        let text = match file {
            Some(path) => {
                std::fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?
            }
            None => {
                let mut s = String::new();
                self.stdin.read_to_string(&mut s)?;
                s
            }
        };
        Ok(parse_graph(&text, self.format)?)
    }

    fn emit_graph(&mut self, g: &Graph) -> Result<(), Failure> {
        let text = write_graph(g, self.format)?;
        self.out.write_all(text.as_bytes())?;
        Ok(())
    }

    fn emit_json<T: Serialize>(&mut self, value: &T) -> Result<(), Failure> {
        let text = serde_json::to_string_pretty(value).expect("value serializes");
        writeln!(self.out, "{text}")?;
        Ok(())
    }

    fn document(&self, g: &Graph) -> ReportDocument {
        let doc = ReportDocument::new(g);
        if self.timing {
            doc.with_timing(self.started.elapsed())
        } else {
            doc
        }
    }
}

/// Parses `args` (including the program name) and runs the command.
/// Returns 0 on success, 1 on suite failure or a computation error such as
/// an exceeded order cap, 2 on usage or input errors.
pub fn run_cli<I, T>(args: I, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let rendered = e.render().to_string();
            let _ = if e.use_stderr() {
                stderr.write_all(rendered.as_bytes())
            } else {
                stdout.write_all(rendered.as_bytes())
            };
            return code;
        }
    };
    let mut ctx = Context {
        format: cli.format.into(),
        json: cli.json,
        seed: cli.seed,
        timing: cli.timing,
        stdin,
        out: stdout,
        started: Instant::now(),
    };
    match run(cli.command, &mut ctx) {
        Ok(code) => code,
        Err(Failure::Usage(m)) => {
            let _ = writeln!(stderr, "error: {m}");
            2
        }
        Err(Failure::Run(m)) => {
            let _ = writeln!(stderr, "error: {m}");
            1
        }
    }
}

fn join(values: impl IntoIterator<Item = usize>) -> String {
    values.into_iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ")
}

fn run(command: Command, ctx: &mut Context<'_>) -> Result<i32, Failure> {
    match command {
        Command::Gen { family } => {
            let g = generate(family, ctx)?;
            ctx.emit_graph(&g)?;
        }
        Command::Stats { file } => {
            let g = ctx.read_graph(&file)?;
            let doc = ctx.document(&g);
            if ctx.json {
                ctx.emit_json(&doc)?;
            } else {
                writeln!(ctx.out, "order {}", doc.n)?;
                writeln!(ctx.out, "size {}", doc.m)?;
                writeln!(ctx.out, "girth {}", doc.girth)?;
                writeln!(ctx.out, "min_degree {}", doc.min_degree)?;
                writeln!(ctx.out, "max_degree {}", doc.max_degree)?;
                writeln!(ctx.out, "leaves {}", join(doc.leaves.iter()))?;
                writeln!(ctx.out, "supports {}", join(doc.supports.iter()))?;
            }
        }
        Command::Spectrum { file, cap } => {
            let g = ctx.read_graph(&file)?;
            let report = packing_report_with(&g, Limits { cap, ..Limits::default() })?;
            if ctx.json {
                let doc = ctx.document(&g).with_packing(report);
                ctx.emit_json(&doc)?;
            } else {
                write_packing(ctx.out, &report)?;
            }
        }
        Command::Ong { file } => {
            let g = ctx.read_graph(&file)?;
            let ong = build_ong(&g);
            let shapes = ong_structure_check(&g);
            if ctx.json {
                #[derive(Serialize)]
                struct OngDocument<'a> {
                    schema: u32,
                    n: usize,
                    edges: Vec<(usize, usize)>,
                    components: &'a [ComponentShape],
                }
                let edges = ong.edges().collect();
                ctx.emit_json(&OngDocument {
                    schema: crate::io::SCHEMA_VERSION,
                    n: ong.order(),
                    edges,
                    components: &shapes,
                })?;
            } else {
                ctx.emit_graph(&ong)?;
                if ctx.format == Format::EdgeList {
                    for c in &shapes {
                        let shape = serde_json::to_value(c.shape).expect("shape serializes");
                        writeln!(
                            ctx.out,
                            "# {} {}: {}",
                            shape.as_str().unwrap_or("?"),
                            c.order,
                            join(c.vertices.iter())
                        )?;
                    }
                }
            }
        }
        Command::Classify { file } => {
            let g = ctx.read_graph(&file)?;
            let doc = ctx.document(&g).with_diagnosis(diagnose(&g));
            ctx.emit_json(&doc)?;
        }
        Command::Decide { file, mode, cap } => {
            let g = ctx.read_graph(&file)?;
            let d = decide_u_with(&g, mode.into(), Limits { cap, ..Limits::default() })?;
            if ctx.json {
                let doc = ctx.document(&g).with_diagnosis(d);
                ctx.emit_json(&doc)?;
            } else {
                write_diagnosis(ctx.out, &d)?;
            }
        }
        Command::Verify { suite } => {
            let reports = verify::run_named(&suite, ctx.seed).ok_or_else(|| {
                Failure::Usage(format!(
                    "unknown suite {suite:?}; expected 1-11, all, or one of {}",
                    verify::SUITE_NAMES.join(", ")
                ))
            })?;
            let passed = reports.iter().all(|r| r.passed());
            if ctx.json {
                ctx.emit_json(&reports)?;
            } else {
                for r in &reports {
                    writeln!(ctx.out, "{r}")?;
                }
            }
            return Ok(if passed { 0 } else { 1 });
        }
    }
    Ok(0)
}

fn generate(family: Family, ctx: &mut Context<'_>) -> Result<Graph, Failure> {
    Ok(match family {
        Family::Path { n } => gen_path(n)?,
        Family::Cycle { n } => gen_cycle(n)?,
        Family::T { n } => gen_t(n)?,
        Family::Gk { k } => gen_gk(k)?,
        Family::Embed { file } => {
            let h = ctx.read_graph(&file)?;
            embed_in_u(&h)?.0
        }
        Family::Ftree { spec, max_stars } => {
            let spec: DoubleStarSpec = match spec {
                Some(path) => {
                    let text = std::fs::read_to_string(&path)
                        .map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
                    serde_json::from_str(&text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?
                }
                None => {
                    if max_stars < 2 {
                        return Err(Error::ParameterRange { what: "max-stars", value: max_stars, min: 2 }.into());
                    }
                    random_double_star_spec(&mut rng_from_seed(ctx.seed), max_stars)
                }
            };
            gen_f_tree(&spec)?.0
        }
        Family::Randtree { n } => gen_random_tree(n, ctx.seed)?,
    })
}

fn write_packing(out: &mut dyn Write, r: &PackingReport) -> std::io::Result<()> {
    writeln!(out, "rho_open_lower {}", r.rho_open_lower)?;
    writeln!(out, "rho_open {}", r.rho_open)?;
    match &r.spectrum {
        Some(s) => writeln!(out, "spectrum {}", join(s.iter().copied()))?,
        None => writeln!(out, "spectrum unknown (enumeration cutoff reached)")?,
    }
    if let Some(c) = r.count {
        writeln!(out, "count {c}")?;
    }
    writeln!(out, "uniform {}", r.uniform())
}

fn write_diagnosis(out: &mut dyn Write, d: &Diagnosis) -> std::io::Result<()> {
    writeln!(out, "{}", d.verdict)?;
    for r in &d.reasons {
        writeln!(out, "{} {}", r.rule, join(r.witness.iter().copied()))?;
    }
    if let Some(s) = &d.spectrum {
        writeln!(out, "spectrum {}", join(s.iter().copied()))?;
    }
    if d.verdict == Verdict::InU {
        if let Some(p) = &d.partition {
            for (name, part) in ["L", "S1", "S2", "D11", "D12", "D2"].iter().zip(p.parts()) {
                writeln!(out, "{name} {}", join(part.iter()))?;
            }
        }
    }
    Ok(())
}
