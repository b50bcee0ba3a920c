//! Command-line front end.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::{Read, Write};
use std::path::Path;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::catalog::{self, NamedSphere};
use crate::enumeration::{self, InvariantVectors};
use crate::error::{Error, Result};
use crate::graphs;
use crate::io;
use crate::s24;
use crate::sequences::{is_m_sequence, level_necessary_conditions, SequenceVerdict};
use crate::stress::{self, Embedding};
use crate::verify::{self, Options, VerificationReport};

#[derive(Parser, Debug)]
#[command(
    name = "gspheres",
    version,
    about = "Face numbers, stresses and level sequences of simplicial spheres"
)]
struct Cli {
    /// Print machine-readable JSON.
    #[arg(long, global = true)]
    json: bool,
    /// Seed for generic embeddings.
    #[arg(long, global = true, default_value_t = 1)]
    seed: u64,
    /// Largest vertex count for exact independence numbers.
    #[arg(long = "cap-vertices", global = true, default_value_t = graphs::DEFAULT_ALPHA_CAP)]
    cap_vertices: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Face-number vectors and missing-face class.
    Info(Source),
    /// The shipped catalog.
    #[command(subcommand)]
    Catalog(CatalogCommand),
    /// Affine stress space of one degree.
    Stress {
        #[command(flatten)]
        source: Source,
        #[arg(long)]
        degree: usize,
        #[arg(long, value_enum, default_value_t = EmbeddingChoice::Generic)]
        embedding: EmbeddingChoice,
    },
    /// Socle dimensions of the Artinian reduction.
    Socle {
        #[command(flatten)]
        source: Source,
        #[arg(long, value_enum, default_value_t = EmbeddingChoice::Generic)]
        embedding: EmbeddingChoice,
    },
    /// Sequence tests.
    #[command(subcommand)]
    Seq(SeqCommand),
    /// Independence-number inequalities.
    Alpha(Source),
    /// Spheres in S(2,4).
    #[command(subcommand)]
    S24(S24Command),
    /// Verification reports.
    Verify(VerifyArgs),
}

#[derive(Args, Debug)]
struct Source {
    /// Catalog name, path to a JSON complex file, or `-` for stdin (the default).
    complex: Option<String>,
}

#[derive(Subcommand, Debug)]
enum CatalogCommand {
    /// List catalog names.
    List,
    /// Write a complex as JSON: `K i d`, `bd-simplex d`, `cycle n`, `cross d`,
    /// `susp n m`, `counterexample m`, or a catalog name.
    Build {
        #[arg(required = true, num_args = 1..)]
        parts: Vec<String>,
    },
}

#[derive(Subcommand, Debug)]
enum SeqCommand {
    /// M-sequence test.
    CheckM { values: Vec<u64> },
    /// Necessary conditions for a level sequence.
    CheckLevel { values: Vec<u64> },
}

#[derive(Subcommand, Debug)]
enum S24Command {
    /// Contract admissible edges until reduced.
    Reduce(Source),
    /// g_2 >= (2/5) f_0 - 6/5.
    Verify(Source),
    /// Compare g_2 with g_1.
    ProbeNevo(Source),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum EmbeddingChoice {
    Generic,
    Natural,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum CounterexampleChoice {
    Level,
    Support,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Family {
    AlphaBounds,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    /// Catalog name, JSON file, or `-`.
    complex: Option<String>,
    /// Every catalog sphere and both counterexamples.
    #[arg(long)]
    all: bool,
    #[arg(long, value_enum)]
    counterexample: Option<CounterexampleChoice>,
    #[arg(long, value_enum)]
    family: Option<Family>,
    /// Size parameter of the support counterexample.
    #[arg(long, default_value_t = 1)]
    m: usize,
    /// Parameters of the level counterexample K(u-k, 2u-1).
    #[arg(long, default_value_t = 3)]
    u: usize,
    #[arg(long, default_value_t = 1)]
    k: usize,
    /// List statement ids with their meaning.
    #[arg(long)]
    explain: bool,
    /// Record wall-clock time per check (makes output nondeterministic).
    #[arg(long)]
    timings: bool,
}

struct Io<'a> {
    stdin: &'a mut dyn Read,
    out: &'a mut dyn Write,
    json: bool,
}

impl Io<'_> {
    fn print(&mut self, text: &str) -> Result<()> {
        self.out
            .write_all(text.as_bytes())
            .map_err(|e| Error::Parse(format!("write failed: {e}")))
    }

    fn emit<T: Serialize>(&mut self, value: &T, human: impl FnOnce() -> String) -> Result<()> {
        let text = if self.json {
            serde_json::to_string_pretty(value).expect("reports always serialize") + "\n"
        } else {
            human()
        };
        self.print(&text)
    }
}

/// Run with the process's standard streams.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdin = std::io::stdin();
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(
        argv,
        &mut stdin.lock(),
        &mut stdout.lock(),
        &mut stderr.lock(),
    )
}

/// Run against explicit streams; returns the exit code.
pub fn run_with<I, T>(
    argv: I,
    stdin: &mut dyn Read,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            let sink: &mut dyn Write = if code == 0 { out } else { err };
            let _ = sink.write_all(text.as_bytes());
            return code;
        }
    };
    let mut io = Io {
        stdin,
        out,
        json: cli.json,
    };
    match dispatch(&cli, &mut io) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

fn resolve(source: &Option<String>, stdin: &mut dyn Read) -> Result<NamedSphere> {
    match source.as_deref() {
        None | Some("-") => {
            let mut text = String::new();
            stdin
                .read_to_string(&mut text)
                .map_err(|e| Error::Parse(format!("stdin: {e}")))?;
            io::load(&text)
        }
        Some(name) if name.ends_with(".json") || Path::new(name).is_file() => {
            let text =
                std::fs::read_to_string(name).map_err(|e| Error::Parse(format!("{name}: {e}")))?;
            io::load(&text)
        }
        Some(name) => catalog::by_name(name),
    }
}

fn fmt_vec<T: ToString>(v: &[T]) -> String {
    format!(
        "({})",
        v.iter().map(T::to_string).collect::<Vec<_>>().join(",")
    )
}

fn num(s: &str) -> Result<usize> {
    s.parse()
        .map_err(|_| Error::InvalidParameter(format!("expected a number, got {s:?}")))
}

fn build(parts: &[String]) -> Result<NamedSphere> {
    let args: Vec<&str> = parts.iter().map(String::as_str).collect();
    match args.as_slice() {
        ["K", i, d] => catalog::build_k(num(i)?, num(d)?),
        ["bd-simplex", d] => catalog::boundary_simplex(num(d)?),
        ["cycle", n] => catalog::cycle(num(n)?),
        ["cross", d] => catalog::cross_polytope(num(d)?),
        ["susp", n, m] => catalog::suspended_cycles(num(n)?, num(m)?),
        ["counterexample", m] => catalog::counterexample_polytope(num(m)?),
        [name] => catalog::by_name(name),
        _ => Err(Error::UnknownComplex(parts.join(" "))),
    }
}

#[derive(Serialize)]
struct Info {
    name: String,
    vertices: usize,
    d: usize,
    f: Vec<i64>,
    h: Vec<i64>,
    g: Vec<i64>,
    gamma: Option<Vec<i64>>,
    missing_face_counts: Vec<usize>,
    max_missing_dim: Option<usize>,
    /// Smallest `j` with the complex in `S(j, d-1)`.
    class_j: usize,
    flag: bool,
    u: Option<usize>,
    u_tilde: Option<usize>,
    homology_sphere: bool,
}

fn info(s: &NamedSphere) -> Result<Info> {
    let c = &s.complex;
    let inv = InvariantVectors::of(c)?;
    Ok(Info {
        name: s.name.clone(),
        vertices: c.num_vertices(),
        d: inv.d,
        f: inv.f,
        h: inv.h,
        g: inv.g,
        gamma: inv.gamma,
        missing_face_counts: c.missing_face_counts(),
        max_missing_dim: c.max_missing_dim(),
        class_j: c.max_missing_dim().unwrap_or(0),
        flag: c.is_flag(),
        u: enumeration::u_parameter(c),
        u_tilde: enumeration::u_tilde(c),
        homology_sphere: c.is_pure() && c.is_z2_homology_sphere()?,
    })
}

fn info_text(i: &Info) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "name = {}", i.name);
    let _ = writeln!(s, "vertices = {}, d = {}", i.vertices, i.d);
    let _ = writeln!(s, "f = {}", fmt_vec(&i.f));
    let _ = writeln!(s, "h = {}", fmt_vec(&i.h));
    let _ = writeln!(s, "g = {}", fmt_vec(&i.g));
    match &i.gamma {
        Some(g) => {
            let _ = writeln!(s, "gamma = {}", fmt_vec(g));
        }
        None => {
            let _ = writeln!(s, "gamma = undefined");
        }
    }
    let _ = writeln!(
        s,
        "missing faces by dimension = {}",
        fmt_vec(&i.missing_face_counts)
    );
    let _ = writeln!(
        s,
        "class = S({},{}){}",
        i.class_j,
        i.d as i64 - 1,
        if i.flag { ", flag" } else { "" }
    );
    let show = |x: Option<usize>| x.map_or("none".to_string(), |v| v.to_string());
    let _ = writeln!(s, "u = {}, u~ = {}", show(i.u), show(i.u_tilde));
    let _ = writeln!(s, "Z/2 homology sphere = {}", i.homology_sphere);
    s
}

fn embedding_for(s: &NamedSphere, choice: EmbeddingChoice, seed: u64) -> Result<Embedding> {
    match choice {
        EmbeddingChoice::Generic => Ok(Embedding::generic(&s.complex, seed)),
        EmbeddingChoice::Natural => s
            .natural_coords
            .clone()
            .ok_or_else(|| Error::Embedding(format!("{} has no natural coordinates", s.name))),
    }
}

fn verdict_text(label: &str, v: &SequenceVerdict) -> String {
    let mut s = format!("{label}: {}\n", if v.holds { "holds" } else { "fails" });
    for f in &v.failures {
        let _ = writeln!(s, "  {:?} at {:?}: {}", f.condition, f.witness, f.detail);
    }
    s
}

fn report_text(reports: &[VerificationReport]) -> String {
    let mut s = String::new();
    for r in reports {
        let _ = writeln!(
            s,
            "{} [{}]",
            r.target,
            if r.status == 0 { "ok" } else { "FAILED" }
        );
        for c in &r.checks {
            let state = match (c.holds, c.probe) {
                (None, _) => "skip",
                (Some(true), _) => "pass",
                (Some(false), true) => "probe",
                (Some(false), false) => "FAIL",
            };
            let idx = c.index.map_or(String::new(), |i| format!("[{i}]"));
            let mut line = format!("  {state:5} {}{idx}", c.statement);
            if c.holds.is_some() {
                let _ = write!(line, ": {} vs {}", c.lhs, c.rhs);
            }
            if !c.note.is_empty() {
                let _ = write!(line, " ({})", c.note);
            }
            if let Some(ms) = c.runtime_ms {
                let _ = write!(line, " {ms} ms");
            }
            s.push_str(&line);
            s.push('\n');
        }
    }
    s
}

#[derive(Serialize)]
struct ReportSet<'a> {
    reports: &'a [VerificationReport],
    status: i32,
}

fn dispatch(cli: &Cli, io: &mut Io) -> Result<i32> {
    let opts = Options {
        seed: cli.seed,
        alpha_cap: cli.cap_vertices,
        timings: false,
    };
    match &cli.command {
        Command::Info(src) => {
            let s = resolve(&src.complex, io.stdin)?;
            let i = info(&s)?;
            io.emit(&i, || info_text(&i))?;
            Ok(0)
        }
        Command::Catalog(CatalogCommand::List) => {
            let cat = catalog::catalog()?;
            #[derive(Serialize)]
            struct Entry {
                name: String,
                vertices: usize,
                d: usize,
            }
            let entries: Vec<Entry> = cat
                .iter()
                .map(|s| Entry {
                    name: s.name.clone(),
                    vertices: s.complex.num_vertices(),
                    d: s.complex.rank(),
                })
                .collect();
            io.emit(&entries, || {
                entries
                    .iter()
                    .map(|e| format!("{:<18} n = {:<3} d = {}\n", e.name, e.vertices, e.d))
                    .collect()
            })?;
            Ok(0)
        }
        Command::Catalog(CatalogCommand::Build { parts }) => {
            let s = build(parts)?;
            io.print(&(io::to_json(&s) + "\n"))?;
            Ok(0)
        }
        Command::Stress {
            source,
            degree,
            embedding,
        } => {
            let s = resolve(&source.complex, io.stdin)?;
            let e = embedding_for(&s, *embedding, cli.seed)?;
            if *embedding == EmbeddingChoice::Generic {
                stress::certified_generic_dims(&s.complex, cli.seed, &[*degree])?;
            }
            let b = stress::stress_space(&s.complex, &e, *degree)?;
            let file = io::stress_basis_file(&b);
            io.emit(&file, || {
                let g = InvariantVectors::of(&s.complex)
                    .map(|i| i.g_at(*degree))
                    .unwrap_or(0);
                format!(
                    "{}: dim S_{degree} = {} (g_{degree} = {g})\n",
                    s.name,
                    b.dim()
                )
            })?;
            Ok(0)
        }
        Command::Socle { source, embedding } => {
            let s = resolve(&source.complex, io.stdin)?;
            let e = embedding_for(&s, *embedding, cli.seed)?;
            let socle = stress::socle_dims(&s.complex, &e)?;
            let d = s.complex.rank();
            let top = d / 2;
            let level = stress::is_level(&s.complex, &e, top)?;
            #[derive(Serialize)]
            struct SocleOut<'a> {
                name: &'a str,
                socle: &'a [usize],
                missing_face_counts: Vec<usize>,
                level: &'a SequenceVerdict,
            }
            let out = SocleOut {
                name: &s.name,
                socle: &socle,
                missing_face_counts: s.complex.missing_face_counts(),
                level: &level,
            };
            io.emit(&out, || {
                format!(
                    "{}: socle by degree = {}\nlevel (socle only in degree {top}) = {}\n",
                    s.name,
                    fmt_vec(&socle),
                    level.holds
                )
            })?;
            Ok(0)
        }
        Command::Seq(cmd) => {
            let (label, v) = match cmd {
                SeqCommand::CheckM { values } => ("M-sequence", is_m_sequence(values)),
                SeqCommand::CheckLevel { values } => {
                    ("level conditions", level_necessary_conditions(values))
                }
            };
            io.emit(&v, || verdict_text(label, &v))?;
            Ok(i32::from(!v.holds))
        }
        Command::Alpha(src) => {
            let s = resolve(&src.complex, io.stdin)?;
            let r = graphs::verify_alpha_inequalities(&s.complex, cli.cap_vertices)?;
            io.emit(&r, || {
                let mut t = format!("{}: alpha = {} witness {:?}\n", s.name, r.alpha, r.witness);
                for c in &r.checks {
                    let state = match c.holds {
                        None => "skip",
                        Some(true) => "pass",
                        Some(false) => "FAIL",
                    };
                    let _ = writeln!(
                        t,
                        "  {state:5} {} [i = {}]: {} vs {} {}",
                        c.statement, c.i, c.lhs, c.rhs, c.note
                    );
                }
                t
            })?;
            Ok(i32::from(!r.all_hold()))
        }
        Command::S24(cmd) => match cmd {
            S24Command::Reduce(src) => {
                let s = resolve(&src.complex, io.stdin)?;
                let r = s24::reduce(&s.complex)?;
                io.emit(&r, || {
                    let mut t = String::new();
                    for m in &r.trace {
                        let _ = writeln!(
                            t,
                            "contract {:?}: g2 {} -> {} (g1 of link {})",
                            m.edge, m.g2_before, m.g2_after, m.g1_link
                        );
                    }
                    let _ = writeln!(
                        t,
                        "result: {} vertices, reduced = {}",
                        r.result.num_vertices(),
                        r.reduced
                    );
                    for g in &r.induced_gammas {
                        let _ = writeln!(
                            t,
                            "  induced Γ on {:?}, complement components {:?}",
                            g.subset, g.component_sizes
                        );
                    }
                    t
                })?;
                Ok(0)
            }
            S24Command::Verify(src) => {
                let s = resolve(&src.complex, io.stdin)?;
                let b = s24::verify_theorem_main_s24(&s.complex)?;
                io.emit(&b, || {
                    format!(
                        "{}: g2 = {} >= {} : {}{}\ng2 = {} >= f0/4 = {} : {}\n",
                        s.name,
                        b.g2,
                        b.bound,
                        b.holds,
                        if b.tight { " (tight)" } else { "" },
                        b.g2,
                        b.weak_bound,
                        b.weak_holds
                    )
                })?;
                Ok(i32::from(!(b.holds && b.weak_holds)))
            }
            S24Command::ProbeNevo(src) => {
                let s = resolve(&src.complex, io.stdin)?;
                let (g2, g1, holds) = s24::probe_nevo(&s.complex)?;
                #[derive(Serialize)]
                struct Probe {
                    g2: i64,
                    g1: i64,
                    holds: bool,
                }
                io.emit(&Probe { g2, g1, holds }, || {
                    format!(
                        "{}: g2 = {g2}, g1 = {g1}, g2 >= g1: {holds} (probe)\n",
                        s.name
                    )
                })?;
                Ok(0)
            }
        },
        Command::Verify(args) => {
            let opts = Options {
                timings: args.timings,
                ..opts
            };
            if args.explain {
                #[derive(Serialize)]
                struct Statement {
                    id: &'static str,
                    meaning: &'static str,
                }
                let list: Vec<Statement> = verify::STATEMENTS
                    .iter()
                    .map(|&(id, meaning)| Statement { id, meaning })
                    .collect();
                io.emit(&list, || {
                    list.iter()
                        .map(|s| format!("{:<24} {}\n", s.id, s.meaning))
                        .collect()
                })?;
                return Ok(0);
            }
            let reports = if args.all {
                verify::verify_all(&opts)?
            } else if let Some(which) = args.counterexample {
                match which {
                    CounterexampleChoice::Level => {
                        vec![verify::verify_level_counterexample(args.u, args.k, &opts)?]
                    }
                    CounterexampleChoice::Support => {
                        vec![verify::verify_support_counterexample(args.m, &opts)?]
                    }
                }
            } else if args.family.is_some() {
                verify::verify_alpha_family(&opts)?
            } else {
                let s = resolve(&args.complex, io.stdin)?;
                vec![verify::verify_sphere(&s, &opts)?]
            };
            let status = verify::overall_status(&reports);
            io.emit(
                &ReportSet {
                    reports: &reports,
                    status,
                },
                || report_text(&reports),
            )?;
            Ok(status)
        }
    }
}
