//! Command-line front end: `verbalize`, `survey` and `eval`.

use std::ffi::OsString;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::sync::LazyLock;

use clap::{Args, CommandFactory, FromArgMatches, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use thiserror::Error;
use walkdir::WalkDir;

use paraverb::eval::score_submission;
use paraverb::model::{collect_frame, ClassId, Lexicon, Ontology};
use paraverb::planner::plan;
use paraverb::realize::{realize, RealizeOptions};
use paraverb::survey::{emit_report, survey_documents};
use paraverb::syntax::{
    load_lexicon, parse_ontology, LexiconFormatError, ParseOptions, SourceDocument, SyntaxError,
    GRAMMAR_VERSION,
};

pub const LEXICON_ENV: &str = "PARAVERB_LEXICON";

static VERSION_LINE: LazyLock<String> =
    LazyLock::new(|| format!("{} (grammar {GRAMMAR_VERSION})", paraverb::VERSION));

#[derive(Debug, Parser)]
#[command(
    name = "paraverb",
    about = "English paragraphs from OWL-EL class descriptions"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Describe one or more classes in English.
    Verbalize(VerbalizeArgs),
    /// Tally class frame patterns over a directory of ontologies.
    Survey(SurveyArgs),
    /// Score a re-coding of a class against its reference axioms.
    Eval(EvalArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Text,
    /// One JSON object per sentence.
    Records,
}

#[derive(Debug, Args)]
#[command(group(clap::ArgGroup::new("selector").required(true).args(["class", "class_list"])))]
pub struct VerbalizeArgs {
    #[arg(long)]
    pub ontology: PathBuf,
    #[arg(long, env = LEXICON_ENV)]
    pub lexicon: Option<PathBuf>,
    /// Class id, or `all`.
    #[arg(long)]
    pub class: Option<String>,
    /// File with one class id per line.
    #[arg(long)]
    pub class_list: Option<PathBuf>,
    #[arg(long)]
    pub elide_rolegroup: bool,
    #[arg(long)]
    pub guess_articles: bool,
    /// Reject references to undeclared entities.
    #[arg(long)]
    pub strict: bool,
    /// Print the discourse tree before each paragraph.
    #[arg(long)]
    pub rst_debug: bool,
    #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
    pub format: OutputFormat,
}

#[derive(Debug, Args)]
pub struct SurveyArgs {
    /// Directory searched recursively for `.ofs` files.
    pub corpus: PathBuf,
    #[arg(long)]
    pub strict: bool,
}

#[derive(Debug, Args)]
pub struct EvalArgs {
    #[arg(long)]
    pub reference: PathBuf,
    #[arg(long)]
    pub candidate: PathBuf,
    #[arg(long)]
    pub class: String,
    /// Print only the mean score.
    #[arg(long)]
    pub mean_only: bool,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("cannot read {path}: {source}")]
    Read { path: String, source: io::Error },
    #[error(transparent)]
    Syntax(#[from] SyntaxError),
    #[error(transparent)]
    Lexicon(#[from] LexiconFormatError),
    #[error("unknown class {id} in {path}")]
    UnknownClass { id: String, path: String },
    #[error("cannot read corpus directory {path}: {message}")]
    Corpus { path: String, message: String },
    #[error("write failed: {0}")]
    Output(#[from] io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::UnknownClass { .. } => 2,
            _ => 1,
        }
    }
}

fn read_document(path: &Path) -> Result<SourceDocument, CliError> {
    SourceDocument::read(path).map_err(|source| CliError::Read {
        path: path.display().to_string(),
        source,
    })
}

fn load_ontology(path: &Path, strict: bool, err: &mut dyn Write) -> Result<Ontology, CliError> {
    let doc = read_document(path)?;
    let parsed = parse_ontology(&doc, ParseOptions { strict })?;
    for w in &parsed.warnings {
        writeln!(err, "{}:{w}", doc.path)?;
    }
    Ok(parsed.ontology)
}

fn resolve(ontology: &Ontology, id: &str, path: &Path) -> Result<ClassId, CliError> {
    ontology.class(id).cloned().ok_or_else(|| CliError::UnknownClass {
        id: id.to_string(),
        path: path.display().to_string(),
    })
}

#[derive(Serialize)]
struct SentenceRecord<'a> {
    class: &'a str,
    index: usize,
    text: &'a str,
    groups: &'a [paraverb::GroupLabel],
}

pub fn cmd_verbalize(args: &VerbalizeArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<(), CliError> {
    let ontology = load_ontology(&args.ontology, args.strict, err)?;
    let lexicon = match &args.lexicon {
        Some(path) => load_lexicon(&read_document(path)?)?,
        None => Lexicon::new(),
    };

    let (classes, batch) = match (&args.class, &args.class_list) {
        (Some(all), _) if all == "all" => (ontology.classes().iter().cloned().collect(), true),
        (Some(id), _) => (vec![resolve(&ontology, id, &args.ontology)?], false),
        (None, Some(list)) => {
            let doc = read_document(list)?;
            let mut ids = doc
                .text
                .lines()
                .map(str::trim)
                .filter(|l| !l.is_empty() && !l.starts_with('#'))
                .map(|id| resolve(&ontology, id, &args.ontology))
                .collect::<Result<Vec<_>, _>>()?;
            ids.sort();
            ids.dedup();
            (ids, true)
        }
        (None, None) => (Vec::new(), true),
    };

    let options = RealizeOptions {
        elide_rolegroup: args.elide_rolegroup,
        guess_articles: args.guess_articles,
    };
    for (i, class) in classes.iter().enumerate() {
        let frame = collect_frame(&ontology, class).expect("class comes from the ontology");
        let planned = plan(&frame);
        let paragraph = realize(&planned.tree, &planned.designated, &lexicon, options);
        match args.format {
            OutputFormat::Text => {
                if batch && i > 0 {
                    writeln!(out)?;
                }
                if batch {
                    writeln!(out, "{class}")?;
                }
                if args.rst_debug {
                    write!(out, "{}", planned.tree.debug_render())?;
                }
                writeln!(out, "{}", paragraph.to_text())?;
            }
            OutputFormat::Records => {
                if args.rst_debug {
                    write!(err, "{class}\n{}", planned.tree.debug_render())?;
                }
                for (index, s) in paragraph.records().into_iter().enumerate() {
                    let record = SentenceRecord {
                        class: class.as_str(),
                        index,
                        text: &s.text,
                        groups: &s.groups,
                    };
                    let line = serde_json::to_string(&record).expect("plain data serializes");
                    writeln!(out, "{line}")?;
                }
            }
        }
    }
    Ok(())
}

pub fn cmd_survey(args: &SurveyArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<(), CliError> {
    let corpus_error = |message: String| CliError::Corpus {
        path: args.corpus.display().to_string(),
        message,
    };
    std::fs::read_dir(&args.corpus).map_err(|e| corpus_error(e.to_string()))?;

    let mut docs = Vec::new();
    let mut unreadable = 0;
    for entry in WalkDir::new(&args.corpus).sort_by_file_name() {
        let entry = entry.map_err(|e| corpus_error(e.to_string()))?;
        let path = entry.path();
        if !entry.file_type().is_file() || path.extension().is_none_or(|e| e != "ofs") {
            continue;
        }
        match read_document(path) {
            Ok(doc) => docs.push(doc),
            Err(e) => {
                writeln!(err, "skipped: {e}")?;
                unreadable += 1;
            }
        }
    }
    let outcome = survey_documents(&docs, ParseOptions { strict: args.strict });
    for f in &outcome.failures {
        writeln!(err, "skipped: {f}")?;
    }
    let mut stats = outcome.stats;
    stats.skipped += unreadable;
    write!(out, "{}", emit_report(&stats))?;
    writeln!(
        err,
        "surveyed {} files, skipped {}",
        docs.len() + unreadable - stats.skipped,
        stats.skipped
    )?;
    Ok(())
}

pub fn cmd_eval(args: &EvalArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<(), CliError> {
    let reference = load_ontology(&args.reference, false, err)?;
    let candidate = load_ontology(&args.candidate, false, err)?;
    let ref_class = resolve(&reference, &args.class, &args.reference)?;
    let cand_class = resolve(&candidate, &args.class, &args.candidate)?;
    let ref_frame = collect_frame(&reference, &ref_class).expect("class comes from the ontology");
    let cand_frame = collect_frame(&candidate, &cand_class).expect("class comes from the ontology");
    let report = score_submission(&cand_frame, &ref_frame);
    if !report.exhaustive {
        writeln!(
            err,
            "note: too many subclass layouts; only the written, merged and split ones were scored"
        )?;
    }
    if args.mean_only {
        writeln!(out, "{:.4}", report.mean)?;
        return Ok(());
    }
    let mut w = csv::WriterBuilder::new().flexible(true).from_writer(Vec::new());
    w.write_record(["reference_axiom", "candidate_axiom", "score"])
        .and_then(|_| {
            report.per_axiom.iter().try_for_each(|s| {
                w.write_record([
                    s.reference.as_str(),
                    s.candidate.as_deref().unwrap_or(""),
                    &format!("{:.4}", s.score),
                ])
            })
        })
        .and_then(|_| w.write_record(["mean", &format!("{:.4}", report.mean)]))
        .map_err(|e| CliError::Output(io::Error::other(e)))?;
    let bytes = w.into_inner().map_err(|e| CliError::Output(e.into_error()))?;
    out.write_all(&bytes)?;
    Ok(())
}

pub fn run(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> u8 {
    let result = match &cli.command {
        Command::Verbalize(a) => cmd_verbalize(a, out, err),
        Command::Survey(a) => cmd_survey(a, out, err),
        Command::Eval(a) => cmd_eval(a, out, err),
    };
    match result {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

pub fn command() -> clap::Command {
    Cli::command().version(VERSION_LINE.as_str())
}

/// Parses `args` (program name first) and runs; returns the exit status.
pub fn main_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let parsed = command()
        .try_get_matches_from(args)
        .and_then(|m| Cli::from_arg_matches(&m));
    match parsed {
        Ok(cli) => run(&cli, out, err),
        Err(e) => {
            let text = e.render().to_string();
            if e.use_stderr() {
                let _ = write!(err, "{text}");
                2
            } else {
                let _ = write!(out, "{text}");
                0
            }
        }
    }
}
