//! Command-line front end for `qdiff`.
//!
//! Every verb prints one JSON document (or Markdown for `table --format md`)
//! and exits with 0 on success, 2 on invalid input, 3 when the queried
//! stratum is empty and 1 when an internal consistency check fails.

pub mod error;
pub mod table;

use std::ffi::OsString;
use std::path::PathBuf;

use anyhow::Context;
use clap::{Args, Parser, Subcommand, ValueEnum};
use qdiff::covering::{
    catalog, covered_genus, dimension_gap, pullback_is_square, pullback_pattern,
    search_dimension_preserving, tag_covering, CoveringType, FiberProfile, SearchBounds,
};
use qdiff::flat::{self, CoverSpec};
use qdiff::strata::{self, classify, hyperelliptic_family, Stratum};
use qdiff::{Rational, SingularityPattern, Surface};
use serde::Serialize;
use serde_json::{json, Value};

pub use error::CliError;

#[derive(Debug, Parser)]
#[command(name = "qdiff", version, about = "Strata of quadratic differentials")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Write the output to FILE instead of standard output.
    #[arg(long, global = true, value_name = "FILE")]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Genus, dimension and canonical double cover of a stratum.
    StratumInfo(PatternArg),
    /// Connected components of a stratum.
    Classify(PatternArg),
    /// Classify every stratum up to a genus.
    Table(TableArgs),
    /// Pull a stratum back along a covering of given ramification profile.
    CoverPattern(CoverArgs),
    /// Singularities of the canonical double cover.
    CoverCanonical(PatternArg),
    /// Break one zero into two.
    Break2(BreakArgs),
    /// Break one odd zero into three odd singularities.
    Break3(BreakArgs),
    /// Exhaustive search for dimension-preserving coverings.
    Search(BoundArgs),
    /// Known dimension-preserving coverings within bounds.
    Catalog(BoundArgs),
    /// Vertices, pattern, genus and holonomy of a surface file.
    SurfaceAnalyze(SurfaceFile),
    /// Double cover of a surface, canonical unless swaps are given.
    SurfaceDoublecover(DoubleCoverArgs),
    /// Apply a 2x2 matrix with positive determinant to a surface.
    SurfaceAct(ActArgs),
    /// Print a reference surface: torus, pillowcase or figure2.
    SurfaceExample { name: String },
}

#[derive(Debug, Args)]
pub struct PatternArg {
    /// Singularity orders, e.g. "3,1,-1^8".
    #[arg(short, long, allow_hyphen_values = true)]
    pub pattern: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Md,
}

#[derive(Debug, Args)]
pub struct TableArgs {
    #[arg(long, default_value_t = 4)]
    pub max_genus: u32,
    #[arg(long, default_value_t = 10)]
    pub max_points: usize,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct CoverArgs {
    #[arg(short, long, allow_hyphen_values = true)]
    pub pattern: String,
    #[arg(long)]
    pub degree: u32,
    /// One partition per base point in canonical (non-increasing) order,
    /// separated by ';', e.g. "1,1;2;2;2".
    #[arg(long)]
    pub profile: String,
}

#[derive(Debug, Args)]
pub struct BreakArgs {
    #[arg(short, long, allow_hyphen_values = true)]
    pub pattern: String,
    /// Position of the broken zero in the canonical order.
    #[arg(long)]
    pub index: usize,
    /// Orders of the new singularities, comma separated.
    #[arg(long, allow_hyphen_values = true)]
    pub parts: String,
}

#[derive(Debug, Args)]
pub struct BoundArgs {
    #[arg(long, default_value_t = 6)]
    pub max_degree: u32,
    #[arg(long, default_value_t = 2)]
    pub max_genus: u32,
    #[arg(long, default_value_t = 12)]
    pub max_order: i64,
    #[arg(long, default_value_t = 12)]
    pub max_points: usize,
    #[arg(long, default_value_t = 2)]
    pub min_degree: u32,
}

impl BoundArgs {
    fn bounds(&self) -> SearchBounds {
        SearchBounds {
            max_degree: self.max_degree,
            max_base_genus: self.max_genus,
            max_order: self.max_order,
            max_points: self.max_points,
            min_degree: self.min_degree,
        }
    }
}

#[derive(Debug, Args)]
pub struct SurfaceFile {
    pub file: PathBuf,
}

#[derive(Debug, Args)]
pub struct DoubleCoverArgs {
    pub file: PathBuf,
    /// Swap flags by pairing id, e.g. "1,0,1".
    #[arg(long)]
    pub swaps: Option<String>,
}

#[derive(Debug, Args)]
pub struct ActArgs {
    pub file: PathBuf,
    /// Matrix entries a,b,c,d of [[a,b],[c,d]] as rationals.
    #[arg(long, allow_hyphen_values = true)]
    pub matrix: String,
}

/// Result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Parses `argv` (program name first) and executes the command.
pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome {
                    code: 2,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                Outcome {
                    code: 0,
                    stdout: text,
                    stderr: String::new(),
                }
            };
        }
    };
    match execute(&cli.command).and_then(|doc| deliver(doc, cli.out.as_deref())) {
        Ok(stdout) => Outcome {
            code: 0,
            stdout,
            stderr: String::new(),
        },
        Err(CliError::Empty(body)) => Outcome {
            code: 3,
            stdout: pretty(&body),
            stderr: "stratum is empty\n".into(),
        },
        Err(e) => Outcome {
            code: e.exit_code(),
            stdout: String::new(),
            stderr: format!("error: {e:#}\n"),
        },
    }
}

enum Document {
    Json(Value),
    Text(String),
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("values serialize");
    s.push('\n');
    s
}

fn deliver(doc: Document, out: Option<&std::path::Path>) -> Result<String, CliError> {
    let text = match doc {
        Document::Json(v) => pretty(&v),
        Document::Text(t) => t,
    };
    match out {
        Some(path) => {
            std::fs::write(path, &text).with_context(|| format!("writing {}", path.display()))?;
            Ok(String::new())
        }
        None => Ok(text),
    }
}

fn to_value<S: Serialize>(v: &S) -> Value {
    serde_json::to_value(v).expect("values serialize")
}

fn parse_pattern(text: &str) -> Result<SingularityPattern, CliError> {
    Ok(text.parse::<SingularityPattern>()?)
}

fn parse_list<T: std::str::FromStr>(text: &str, what: &str) -> Result<Vec<T>, CliError> {
    text.split(',')
        .map(|s| {
            s.trim()
                .parse()
                .map_err(|_| CliError::Invalid(format!("bad {what} {:?}", s.trim())))
        })
        .collect()
}

fn empty_body(pattern: &SingularityPattern) -> CliError {
    CliError::Empty(json!({
        "empty": true,
        "pattern": pattern,
        "stratum": strata::strip_marked(pattern),
        "source": "masur_smillie",
    }))
}

fn read_surface(path: &std::path::Path) -> Result<Surface, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Invalid(format!("cannot read {}: {e}", path.display())))?;
    Ok(flat::from_json(&text)?)
}

fn surface_value(s: &Surface) -> Value {
    serde_json::from_str(&flat::to_json(s)).expect("surface JSON parses")
}

fn execute(command: &Command) -> Result<Document, CliError> {
    let value = match command {
        Command::StratumInfo(a) => {
            let p = parse_pattern(&a.pattern)?;
            if strata::is_empty(&p) {
                return Err(empty_body(&p));
            }
            let stratum = Stratum::new(p.clone());
            json!({
                "empty": false,
                "pattern": p,
                "genus": stratum.genus,
                "dimension": stratum.dimension(),
                "points": p.len(),
                "marked_points": p.count(0),
                "family": hyperelliptic_family(&p),
                "canonical_double_cover": strata::canonical_double_cover(&p)?,
            })
        }
        Command::Classify(a) => {
            let p = parse_pattern(&a.pattern)?;
            if strata::is_empty(&p) {
                return Err(empty_body(&p));
            }
            to_value(&classify(&p))
        }
        Command::Table(a) => {
            if a.max_points == 0 {
                return Err(CliError::Invalid("--max-points must be at least 1".into()));
            }
            let t = table::build(a.max_genus, a.max_points);
            match a.format {
                Format::Json => to_value(&t),
                Format::Md => return Ok(Document::Text(table::markdown(&t))),
            }
        }
        Command::CoverPattern(a) => cover_pattern(a)?,
        Command::CoverCanonical(a) => {
            let p = parse_pattern(&a.pattern)?;
            json!({
                "pattern": p,
                "cover": strata::canonical_double_cover(&p)?,
            })
        }
        Command::Break2(a) | Command::Break3(a) => {
            let p = parse_pattern(&a.pattern)?;
            let parts: Vec<i64> = parse_list(&a.parts, "order")?;
            let result = match (command, parts.as_slice()) {
                (Command::Break2(_), &[l1, l2]) => strata::break_zero_two(&p, a.index, l1, l2)?,
                (Command::Break3(_), &[l1, l2, l3]) => {
                    strata::break_zero_three(&p, a.index, l1, l2, l3)?
                }
                _ => {
                    return Err(CliError::Invalid(format!(
                        "wrong number of parts: {}",
                        parts.len()
                    )))
                }
            };
            json!({
                "from": p,
                "to": result,
                "genus": result.genus(),
                "empty": strata::is_empty(&result),
            })
        }
        Command::Search(b) => to_value(&search_dimension_preserving(&b.bounds())?),
        Command::Catalog(b) => {
            let bounds = b.bounds();
            bounds.check()?;
            to_value(&catalog(&bounds))
        }
        Command::SurfaceAnalyze(f) => to_value(&flat::analyze(&read_surface(&f.file)?)?),
        Command::SurfaceDoublecover(a) => {
            let s = read_surface(&a.file)?;
            let spec = match &a.swaps {
                Some(text) => {
                    let flags: Vec<u8> = parse_list(text, "swap flag")?;
                    if flags.iter().any(|&f| f > 1) {
                        return Err(CliError::Invalid("swap flags must be 0 or 1".into()));
                    }
                    CoverSpec::new(flags.into_iter().map(|f| f == 1).collect())
                }
                None => flat::canonical_cover_spec(&s)?,
            };
            let cover = flat::double_cover(&s, &spec)?;
            let analysis = if cover.connected {
                Some(flat::analyze(&cover.surface)?)
            } else {
                None
            };
            json!({
                "spec": spec,
                "connected": cover.connected,
                "branch_vertices": cover.branch_vertices,
                "analysis": analysis,
                "surface": surface_value(&cover.surface),
            })
        }
        Command::SurfaceAct(a) => {
            let s = read_surface(&a.file)?;
            let m: Vec<Rational> = parse_list(&a.matrix, "rational")?;
            let m: [Rational; 4] = m
                .try_into()
                .map_err(|_| CliError::Invalid("--matrix needs four entries".into()))?;
            surface_value(&flat::gl2_act(&s, m)?)
        }
        Command::SurfaceExample { name } => surface_value(&flat::example(name)?),
    };
    Ok(Document::Json(value))
}

fn cover_pattern(a: &CoverArgs) -> Result<Value, CliError> {
    let base = parse_pattern(&a.pattern)?;
    let partitions: Vec<Vec<u32>> = a
        .profile
        .split(';')
        .map(|f| parse_list(f, "ramification index"))
        .collect::<Result<_, _>>()?;
    if partitions.len() != base.len() {
        return Err(CliError::Invalid(format!(
            "profile has {} fibers, pattern has {} points",
            partitions.len(),
            base.len()
        )));
    }
    let fibers = base
        .orders()
        .iter()
        .zip(partitions)
        .map(|(&k, e)| FiberProfile::new(k, e))
        .collect();
    let covering = CoveringType::new(a.degree, base.genus(), fibers)?;
    let target = pullback_pattern(&covering, &base)?;
    Ok(json!({
        "base": base,
        "degree": a.degree,
        "profile": covering.fibers(),
        "target": target,
        "target_genus": covered_genus(&covering)?,
        "dims": {
            "base": strata::dimension(&base),
            "target": strata::dimension(&target),
        },
        "dimension_gap": dimension_gap(&covering, &base)?,
        "square": pullback_is_square(&covering, &base)?,
        "tag": tag_covering(&covering)?,
    }))
}
