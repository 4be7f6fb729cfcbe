use std::fmt::Write as _;
use std::fs;
use std::io::{self, Write as _};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use nilhecke_core::{
    act_tw_iterative, affine_table, demazure_product, involution_graph, pi, run_suite,
    AffineContext, Element, Error, GeneratorId, Group, ParabolicContext, Star, StarKind,
    TwistedInvolution, VerifyOptions,
};
use serde::Serialize;

#[derive(Parser)]
#[command(
    name = "nilhecke",
    version,
    about = "Demazure products, twisted involutions and the maps pi, ^J pi"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Dot,
    Text,
}

#[derive(clap::Args)]
struct Common {
    /// Preset name (A3, affine:A2, ...), a JSON spec file, or inline JSON.
    #[arg(long, short)]
    group: String,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    /// Write output to a file instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Canonical word of the Demazure product w . w2.
    Demazure {
        #[command(flatten)]
        common: Common,
        w: String,
        w2: String,
    },
    /// Twisted involutions up to a length bound with phi and ||x||.
    Involutions {
        #[command(flatten)]
        common: Common,
        /// id | minus-w0 | perm:1-2,3-3 | swap:1-2
        #[arg(long, default_value = "id")]
        star: String,
        #[arg(long, default_value_t = 4)]
        max_len: usize,
    },
    /// pi(w) = w . (w*)^-1 and the sign of T_w a_1.
    Pi {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value = "id")]
        star: String,
        w: String,
    },
    /// ^J pi(w) for w in ^JW and the sign of T_w a_1.
    Jpi {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value = "id")]
        star: String,
        /// Comma-separated generators of J, e.g. `1,2`.
        #[arg(long, default_value = "")]
        j: String,
        w: String,
    },
    /// The ^J pi table of affine A1 or A2 against its closed form.
    AffineTable {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value_t = 2)]
        max_exponent: u32,
    },
    /// Runs a named property suite and prints a JSON report.
    Verify {
        /// Suite name, or `all`.
        suite: String,
        /// Replaces every length bound of the suite.
        #[arg(long)]
        max_len: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1000)]
        samples: usize,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

/// Failure modes mapped onto exit codes 1 and 2.
enum Failure {
    Usage(String),
    Mismatch(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::UnknownPreset(_)
            | Error::InvalidCartan(_)
            | Error::GroupSpec(_)
            | Error::GeneratorOutOfRange { .. }
            | Error::WordParse { .. }
            | Error::RankMismatch { .. }
            | Error::InvalidStar(_)
            | Error::UnknownSuite(_)
            | Error::Precondition(_)
            | Error::NotTwistedInvolution(_)
            | Error::ParabolicNotFinite { .. } => Failure::Usage(e.to_string()),
            other => Failure::Mismatch(other.to_string()),
        }
    }
}

type CmdResult = Result<(String, bool), Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Mismatch(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

/// Returns whether the command succeeded without a mismatch.
fn run(command: Command) -> Result<bool, Failure> {
    let (out_path, result) = match command {
        Command::Demazure { common, w, w2 } => (common.out.clone(), cmd_demazure(&common, &w, &w2)),
        Command::Involutions {
            common,
            star,
            max_len,
        } => (common.out.clone(), cmd_involutions(&common, &star, max_len)),
        Command::Pi { common, star, w } => (common.out.clone(), cmd_pi(&common, &star, &w)),
        Command::Jpi { common, star, j, w } => {
            (common.out.clone(), cmd_jpi(&common, &star, &j, &w))
        }
        Command::AffineTable {
            common,
            max_exponent,
        } => (common.out.clone(), cmd_affine_table(&common, max_exponent)),
        Command::Verify {
            suite,
            max_len,
            seed,
            samples,
            format,
            out,
        } => {
            let opts = VerifyOptions {
                max_len,
                seed,
                samples,
            };
            (out, cmd_verify(&suite, &opts, format))
        }
    };
    let (text, ok) = result?;
    emit(out_path.as_deref(), &text)?;
    Ok(ok)
}

fn emit(path: Option<&Path>, text: &str) -> Result<(), Failure> {
    match path {
        Some(p) => fs::write(p, text).map_err(|e| Failure::Usage(format!("{}: {e}", p.display()))),
        None => io::stdout()
            .write_all(text.as_bytes())
            .map_err(|e| Failure::Mismatch(e.to_string())),
    }
}

fn load_group(spec: &str) -> Result<Group, Failure> {
    let trimmed = spec.trim();
    if trimmed.starts_with('{') {
        return Ok(Group::from_json(trimmed)?);
    }
    match Group::preset(trimmed) {
        Ok(g) => Ok(g),
        Err(Error::UnknownPreset(_)) if Path::new(trimmed).is_file() => {
            let text = fs::read_to_string(trimmed)
                .map_err(|e| Failure::Usage(format!("{trimmed}: {e}")))?;
            Ok(Group::from_json(&text)?)
        }
        Err(e) => Err(e.into()),
    }
}

fn load_star(group: &Group, spec: &str) -> Result<Star, Failure> {
    Ok(Star::build(group, &spec.parse::<StarKind>()?)?)
}

fn unsupported(format: Format, cmd: &str) -> Failure {
    Failure::Usage(format!("format {format:?} is not supported by {cmd}").to_lowercase())
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string(value).expect("output serializes");
    s.push('\n');
    s
}

#[derive(Serialize)]
struct WordOut {
    word: String,
    len: usize,
}

#[derive(Serialize)]
struct SignedWordOut {
    word: String,
    len: usize,
    /// Sign of `T_w a_1`.
    sign: i64,
}

fn cmd_demazure(common: &Common, w: &str, w2: &str) -> CmdResult {
    let g = load_group(&common.group)?;
    let p = demazure_product(&g.element(w)?, &g.element(w2)?)?;
    let out = WordOut {
        word: p.word_string(),
        len: p.length(),
    };
    let text = match common.format {
        Format::Text => format!("{}\n", out.word),
        Format::Json => to_json(&out),
        Format::Csv => format!("word,len\n{},{}\n", out.word, out.len),
        Format::Dot => return Err(unsupported(common.format, "demazure")),
    };
    Ok((text, true))
}

fn signed_output(format: Format, cmd: &str, w: &Element, image: &TwistedInvolution) -> CmdResult {
    let start = TwistedInvolution::identity(w.group(), image.star())?;
    let act = act_tw_iterative(w, &start)?;
    if act.x.element() != image.element() {
        return Err(Failure::Mismatch(format!(
            "T_w a_1 lands on {} but pi(w) = {}",
            act.x.element(),
            image.element()
        )));
    }
    let out = SignedWordOut {
        word: image.element().word_string(),
        len: image.length(),
        sign: act.sign.to_i64(),
    };
    let text = match format {
        Format::Text => format!("{}\t{}\n", out.word, act.sign),
        Format::Json => to_json(&out),
        Format::Csv => format!("word,len,sign\n{},{},{}\n", out.word, out.len, out.sign),
        Format::Dot => return Err(unsupported(format, cmd)),
    };
    Ok((text, true))
}

fn cmd_pi(common: &Common, star: &str, w: &str) -> CmdResult {
    let g = load_group(&common.group)?;
    let st = load_star(&g, star)?;
    let w = g.element(w)?;
    let image = pi(&w, &st)?;
    signed_output(common.format, "pi", &w, &image)
}

fn parse_j(text: &str, rank: usize) -> Result<Vec<GeneratorId>, Failure> {
    text.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| match t.parse::<usize>() {
            Ok(i) if (1..=rank).contains(&i) => Ok(GeneratorId::new(i)),
            _ => Err(Failure::Usage(format!(
                "bad generator `{t}` in --j for rank {rank}"
            ))),
        })
        .collect()
}

fn cmd_jpi(common: &Common, star: &str, j: &str, w: &str) -> CmdResult {
    let g = load_group(&common.group)?;
    let st = load_star(&g, star)?;
    let j = parse_j(j, g.rank())?;
    let ctx = ParabolicContext::new(&g, &j, &st, nilhecke_core::parabolic::DEFAULT_CAP)?;
    let w = g.element(w)?;
    let image = ctx.jpi(&w)?;
    signed_output(common.format, "jpi", &w, &image)
}

fn cmd_involutions(common: &Common, star: &str, max_len: usize) -> CmdResult {
    let g = load_group(&common.group)?;
    let st = load_star(&g, star)?;
    let graph = involution_graph(&g, &st, max_len)?;
    let mut text = String::new();
    match common.format {
        Format::Json => {
            for node in &graph.nodes {
                text.push_str(&to_json(&node.json_line()));
            }
        }
        Format::Csv => {
            text.push_str("word,len,phi,norm\n");
            for node in &graph.nodes {
                let l = node.json_line();
                writeln!(text, "{},{},{},{}", l.word, l.len, l.phi, l.norm).unwrap();
            }
        }
        Format::Text => {
            let width = graph
                .nodes
                .iter()
                .map(|n| n.x.element().word_string().len())
                .max()
                .unwrap_or(0)
                .max(4);
            writeln!(text, "{:<width$}  len  phi  norm", "word").unwrap();
            for node in &graph.nodes {
                let l = node.json_line();
                let word = if l.word.is_empty() {
                    "e".to_string()
                } else {
                    l.word
                };
                writeln!(
                    text,
                    "{word:<width$}  {:>3}  {:>3}  {:>4}",
                    l.len, l.phi, l.norm
                )
                .unwrap();
            }
        }
        Format::Dot => {
            text.push_str("digraph involutions {\n");
            for (i, node) in graph.nodes.iter().enumerate() {
                let word = node.x.element().word_string();
                let word = if word.is_empty() {
                    "e".to_string()
                } else {
                    word
                };
                writeln!(text, "  n{i} [label=\"{word}\\nphi={}\"];", node.phi).unwrap();
            }
            for e in &graph.edges {
                writeln!(
                    text,
                    "  n{} -> n{} [label=\"s{}: {}\"];",
                    e.from,
                    e.to,
                    e.generator,
                    e.kind.label()
                )
                .unwrap();
            }
            text.push_str("}\n");
        }
    }
    Ok((text, true))
}

fn cmd_affine_table(common: &Common, max_exponent: u32) -> CmdResult {
    let ctx = AffineContext::new(&common.group)?;
    let rows = affine_table(&ctx, max_exponent)?;
    let ok = rows.iter().all(|r| r.matches);
    let exps = |v: &[u32]| v.iter().map(u32::to_string).collect::<Vec<_>>().join(" ");
    let mut text = String::new();
    match common.format {
        Format::Json => {
            text = serde_json::to_string_pretty(&rows).expect("rows serialize");
            text.push('\n');
        }
        Format::Csv => {
            text.push_str("form,exponents,input,jpi,expected,expected_exponents,match\n");
            for r in &rows {
                writeln!(
                    text,
                    "{},{},{},{},{},{},{}",
                    r.form,
                    exps(&r.exponents),
                    r.input,
                    r.jpi,
                    r.expected,
                    exps(&r.expected_exponents),
                    r.matches
                )
                .unwrap();
            }
        }
        Format::Text => {
            for r in &rows {
                writeln!(
                    text,
                    "{:<8} [{}]  {} -> {}  expected {} [{}]  {}",
                    r.form,
                    exps(&r.exponents),
                    r.input,
                    r.jpi,
                    r.expected,
                    exps(&r.expected_exponents),
                    if r.matches { "ok" } else { "MISMATCH" }
                )
                .unwrap();
            }
        }
        Format::Dot => return Err(unsupported(common.format, "affine-table")),
    }
    Ok((text, ok))
}

fn cmd_verify(suite: &str, opts: &VerifyOptions, format: Format) -> CmdResult {
    let report = run_suite(suite, opts)?;
    let text = match format {
        Format::Json => {
            let mut s = report.to_json();
            s.push('\n');
            s
        }
        Format::Text => {
            let mut s = String::new();
            for c in &report.checks {
                let status = if c.passed() { "PASS" } else { "FAIL" };
                writeln!(s, "{status} {} ({} cases)", c.name, c.cases).unwrap();
                if let Some(f) = &c.first_failure {
                    writeln!(s, "     first failure: {f}").unwrap();
                }
            }
            s
        }
        Format::Csv | Format::Dot => return Err(unsupported(format, "verify")),
    };
    Ok((text, report.passed))
}
