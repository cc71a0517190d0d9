//! The `lieact` command line.

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use thiserror::Error;

use crate::catalog::{
    build, catalog_entries, load_lie_file, parse_expression, standard_catalog, BuildError, LieFileError, ParseError,
};
use crate::exactla::format_rational;
use crate::liecore::{format_vector, LieAlgebra};
use crate::obstruction::{
    analyze_all, AlgebraProfile, EngineOptions, ManifoldDescriptor, Mode, ObstructionError, Regularity, Status,
    Verdict,
};
use crate::report::{Report, ToolInfo};
use crate::spectral::{SpectralConfig, Witness};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 1;
pub const EXIT_CONTRADICTION: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "lieact", version, about = "Invariants of real Lie algebras and cited verdicts on actions on manifolds")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check structure constants (Jacobi identity) and a manifold descriptor.
    Validate(CommonArgs),
    /// Print structural and spectral invariants.
    Invariants(CommonArgs),
    /// Decide which actions on a manifold are ruled out or known to exist.
    Analyze(CommonArgs),
    /// Supported algebras.
    Catalog {
        #[command(subcommand)]
        command: CatalogCommand,
    },
}

#[derive(Debug, Subcommand)]
enum CatalogCommand {
    /// List the atoms, their dimensions and the standard expressions.
    List {
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum RegularityArg {
    Continuous,
    Smooth,
    Analytic,
    All,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum ModeArg {
    Effective,
    FixedPointFree,
    Transitive,
    Homogeneous,
    All,
}

#[derive(Debug, Args)]
struct CommonArgs {
    /// Algebra expression, e.g. "st(3,R) x abelian(2)".
    #[arg(long, conflicts_with = "algebra_file")]
    algebra: Option<String>,
    /// Structure constants in `.lie` format.
    #[arg(long)]
    algebra_file: Option<PathBuf>,
    /// Manifold as inline JSON, `@path` to a JSON file, or a preset name such as `torus`.
    #[arg(long)]
    manifold: Option<String>,
    #[arg(long, value_enum, default_value_t = RegularityArg::All)]
    regularity: RegularityArg,
    #[arg(long, value_enum, default_value_t = ModeArg::All)]
    mode: ModeArg,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    #[arg(long, default_value_t = 8)]
    samples: usize,
    /// Working precision in bits for numeric spectra.
    #[arg(long, default_value_t = 256)]
    precision: u32,
    /// Largest integer-relation coefficient searched.
    #[arg(long, default_value_t = 1_000_000)]
    height_bound: u64,
    /// Drop rule firings that rest on sampled spectral ranks.
    #[arg(long)]
    strict: bool,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("cannot read {path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("cannot write output: {0}")]
    Output(std::io::Error),
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Build(#[from] BuildError),
    #[error(transparent)]
    LieFile(#[from] LieFileError),
    #[error(transparent)]
    Obstruction(#[from] ObstructionError),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Obstruction(ObstructionError::EngineContradiction { .. }) => EXIT_CONTRADICTION,
            _ => EXIT_INPUT,
        }
    }
}

impl CommonArgs {
    fn config(&self) -> Result<SpectralConfig, CliError> {
        if self.precision < 64 {
            return Err(CliError::Usage("--precision must be at least 64".into()));
        }
        if self.samples == 0 {
            return Err(CliError::Usage("--samples must be positive".into()));
        }
        let base = SpectralConfig::default();
        Ok(SpectralConfig {
            samples: self.samples,
            precision: self.precision,
            height_bound: self.height_bound,
            seed: self.seed,
            max_precision: base.max_precision.max(4 * self.precision),
        })
    }

    fn algebra(&self) -> Result<Option<(LieAlgebra, Option<crate::catalog::AlgebraExpr>)>, CliError> {
        if let Some(text) = &self.algebra {
            let e = parse_expression(text)?;
            return Ok(Some((build(&e)?, Some(e))));
        }
        if let Some(path) = &self.algebra_file {
            return Ok(Some((load_lie_file(path)?, None)));
        }
        Ok(None)
    }

    fn require_algebra(&self) -> Result<(LieAlgebra, Option<crate::catalog::AlgebraExpr>), CliError> {
        self.algebra()?.ok_or_else(|| CliError::Usage("one of --algebra or --algebra-file is required".into()))
    }

    fn manifold(&self) -> Result<Option<ManifoldDescriptor>, CliError> {
        self.manifold.as_deref().map(parse_manifold_arg).transpose()
    }

    fn regularities(&self) -> Vec<Regularity> {
        match self.regularity {
            RegularityArg::Continuous => vec![Regularity::Continuous],
            RegularityArg::Smooth => vec![Regularity::Smooth],
            RegularityArg::Analytic => vec![Regularity::Analytic],
            RegularityArg::All => Regularity::ALL.to_vec(),
        }
    }

    fn modes(&self) -> Vec<Mode> {
        match self.mode {
            ModeArg::Effective => vec![Mode::Effective],
            ModeArg::FixedPointFree => vec![Mode::FixedPointFree],
            ModeArg::Transitive => vec![Mode::Transitive],
            ModeArg::Homogeneous => vec![Mode::CompactHomogeneous],
            ModeArg::All => Mode::ALL.to_vec(),
        }
    }
}

/// Inline JSON, `@path`, or a preset name.
pub fn parse_manifold_arg(arg: &str) -> Result<ManifoldDescriptor, CliError> {
    let arg = arg.trim();
    let m = if let Some(path) = arg.strip_prefix('@') {
        let text =
            std::fs::read_to_string(path).map_err(|source| CliError::Io { path: path.to_string(), source })?;
        ManifoldDescriptor::from_json(&text)?
    } else if arg.starts_with('{') {
        ManifoldDescriptor::from_json(arg)?
    } else {
        return ManifoldDescriptor::preset(arg).ok_or_else(|| ObstructionError::UnknownManifold(arg.to_string()).into());
    };
    Ok(m.validate()?)
}

fn opt<T: ToString>(v: Option<T>) -> String {
    v.map_or_else(|| "-".to_string(), |x| x.to_string())
}

fn write_invariants(out: &mut dyn Write, l: &LieAlgebra, p: &AlgebraProfile) -> std::io::Result<()> {
    let f = &p.flags;
    let s = &p.spectral;
    writeln!(out, "algebra: {}", p.expression.as_deref().unwrap_or("(from file)"))?;
    writeln!(out, "dim: {}", f.dim)?;
    writeln!(out, "derived length l: {}", opt(f.derived_length))?;
    writeln!(out, "nilpotency class: {}", opt(f.nilpotency_class))?;
    writeln!(out, "center dim: {}", p.center_dim)?;
    writeln!(out, "killing det sign: {}", format!("{:?}", p.killing_det_sign).to_lowercase())?;
    let dims = |d: &[usize]| d.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ");
    writeln!(out, "derived series dims: {}", dims(&p.derived_dims))?;
    writeln!(out, "lower central series dims: {}", dims(&p.lower_central_dims))?;
    let mut flags = Vec::new();
    for (name, on) in [
        ("abelian", f.abelian),
        ("nilpotent", f.nilpotent),
        ("solvable", f.solvable),
        ("supersoluble", f.supersoluble.value),
        ("semisimple", f.semisimple),
    ] {
        flags.push(format!("{}{name}", if on { "" } else { "not " }));
    }
    writeln!(out, "flags: {}", flags.join(", "))?;
    writeln!(out, "supersolubility: {:?}", f.supersoluble.certainty)?;
    if let Some(w) = &f.supersoluble.witness {
        writeln!(out, "  nonreal witness X = {}, charpoly of ad X: {}", format_vector(&w.x, l.labels()), w.charpoly)?;
    }
    if let Some(rank) = f.semisimple_rank {
        writeln!(out, "semisimple rank: {rank}")?;
    }
    writeln!(
        out,
        "r = {}, r_NR = {} ({}, {:?}, {} samples)",
        s.r,
        s.r_nr,
        s.method.as_str(),
        s.certainty,
        s.samples_used
    )?;
    match &s.witness {
        Witness::Zero => {}
        Witness::Rational(x) => writeln!(out, "  witness X = {}", format_vector(x, l.labels()))?,
        Witness::Algebraic(d) => writeln!(
            out,
            "  witness X = sum of c_i a^i, c = {:?}, a a root of {}",
            d.coeffs,
            d.minimal_polynomial()
        )?,
    }
    writeln!(out, "AC: {} ({})", p.ac.status.as_str(), p.ac.reason)?;
    if let Some(c) = &p.ac.certificate {
        let eig: Vec<String> =
            c.eigenvalues.iter().map(|(v, m)| format!("{}^{m}", format_rational(v))).collect();
        writeln!(out, "  certificate: {:?}, spectrum {}, spot-check residual {:.1e}", c.source, eig.join(" "), c.residual)?;
    }
    for note in &p.notes {
        writeln!(out, "note: {note}")?;
    }
    Ok(())
}

fn write_verdicts(out: &mut dyn Write, verdicts: &[Verdict]) -> std::io::Result<()> {
    for v in verdicts {
        writeln!(out, "{} / {}: {}", v.query.regularity.as_str(), v.query.mode.as_str(), v.status.as_str())?;
        for c in &v.citations {
            let tag = c.heuristic.map(|h| format!(" [{h}]")).unwrap_or_default();
            writeln!(out, "  [{}] {}{tag}: {}", c.rule, c.theorem, c.statement)?;
            if let Some(t) = v.trace.iter().find(|t| t.rule == c.rule) {
                let vals: Vec<String> = t.values.iter().map(|(k, x)| format!("{k}={x}")).collect();
                writeln!(out, "    with {}", vals.join(", "))?;
            }
        }
        for t in v.trace.iter().filter(|t| t.suppressed.is_some()) {
            writeln!(out, "  [{}] suppressed by --strict", t.rule)?;
        }
        for note in &v.notes {
            writeln!(out, "  note: {note}")?;
        }
    }
    Ok(())
}

fn run(cli: Cli, out: &mut dyn Write) -> Result<(), CliError> {
    let io = CliError::Output;
    match cli.command {
        Command::Catalog { command: CatalogCommand::List { format } } => {
            let entries = catalog_entries();
            match format {
                Format::Json => {
                    let v = serde_json::json!({ "atoms": entries, "standard": standard_catalog() });
                    writeln!(out, "{}", serde_json::to_string_pretty(&crate::report::canonical(v)).expect("json"))
                        .map_err(io)?;
                }
                Format::Text => {
                    for e in &entries {
                        writeln!(out, "{:<12} dim {:<12} {}", e.syntax, e.dimension, e.description).map_err(io)?;
                    }
                }
            }
        }
        Command::Validate(args) => {
            let algebra = args.algebra()?;
            let manifold = args.manifold()?;
            if algebra.is_none() && manifold.is_none() {
                return Err(CliError::Usage("nothing to validate: pass --algebra, --algebra-file or --manifold".into()));
            }
            match args.format {
                Format::Json => {
                    let v = serde_json::json!({
                        "valid": true,
                        "algebra_dim": algebra.as_ref().map(|(l, _)| l.dim()),
                        "manifold": manifold,
                    });
                    writeln!(out, "{}", serde_json::to_string_pretty(&crate::report::canonical(v)).expect("json"))
                        .map_err(io)?;
                }
                Format::Text => {
                    if let Some((l, _)) = &algebra {
                        writeln!(
                            out,
                            "algebra ok: dim {}, {} nonzero constants, Jacobi identity holds",
                            l.dim(),
                            l.constants().len()
                        )
                        .map_err(io)?;
                    }
                    if let Some(m) = &manifold {
                        writeln!(out, "manifold ok: {}", serde_json::to_string(m).expect("json")).map_err(io)?;
                    }
                }
            }
        }
        Command::Invariants(args) => {
            let cfg = args.config()?;
            let (l, e) = args.require_algebra()?;
            let p = AlgebraProfile::compute(&l, e.as_ref(), &cfg)?;
            match args.format {
                Format::Json => {
                    let r = Report {
                        tool: ToolInfo::new(&cfg, args.strict),
                        algebra: Some(&p),
                        manifold: None,
                        verdicts: &[],
                        notes: Vec::new(),
                    };
                    writeln!(out, "{}", r.to_json_string()).map_err(io)?;
                }
                Format::Text => write_invariants(out, &l, &p).map_err(io)?,
            }
        }
        Command::Analyze(args) => {
            let cfg = args.config()?;
            let (l, e) = args.require_algebra()?;
            let m = args.manifold()?.ok_or_else(|| CliError::Usage("--manifold is required".into()))?;
            let p = AlgebraProfile::compute(&l, e.as_ref(), &cfg)?;
            let opts = EngineOptions { strict: args.strict };
            let verdicts = analyze_all(&p, &m, &args.regularities(), &args.modes(), opts)?;
            match args.format {
                Format::Json => {
                    let r = Report {
                        tool: ToolInfo::new(&cfg, args.strict),
                        algebra: Some(&p),
                        manifold: Some(&m),
                        verdicts: &verdicts,
                        notes: Vec::new(),
                    };
                    writeln!(out, "{}", r.to_json_string()).map_err(io)?;
                }
                Format::Text => {
                    writeln!(out, "algebra: {}", p.expression.as_deref().unwrap_or("(from file)")).map_err(io)?;
                    writeln!(out, "manifold: {}", serde_json::to_string(&m).expect("json")).map_err(io)?;
                    write_verdicts(out, &verdicts).map_err(io)?;
                    for note in &p.notes {
                        writeln!(out, "note: {note}").map_err(io)?;
                    }
                    let decided = verdicts.iter().filter(|v| v.status != Status::Unknown).count();
                    writeln!(out, "{decided} of {} queries decided", verdicts.len()).map_err(io)?;
                }
            }
        }
    }
    Ok(())
}

/// Runs the CLI on `argv` (including the program name), writing to the given
/// streams. Returns the process exit code.
pub fn run_cli_with<I, S>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { write!(err, "{text}") } else { write!(out, "{text}") };
            return code;
        }
    };
    match run(cli, out) {
        Ok(()) => EXIT_OK,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

pub fn run_cli<I, S>(argv: I) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    run_cli_with(argv, &mut std::io::stdout().lock(), &mut std::io::stderr().lock())
}
