use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};

use dcb_core::{load_lexicon, load_ontology, RefinementMode, RuleConfig};

mod commands;

#[derive(Parser)]
#[command(name = "dcb", version, about = "Extract UML class models from requirements text")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Extract a class model from each input document.
    Extract {
        #[arg(required = true)]
        files: Vec<PathBuf>,
        #[command(flatten)]
        opts: ExtractOpts,
        #[arg(long, value_enum, default_value_t = Format::Xml)]
        format: Format,
        /// Output directory (default: current directory).
        #[arg(long)]
        out: Option<PathBuf>,
        /// Log rule firings and element provenance to stderr.
        #[arg(long)]
        trace: bool,
    },
    /// Score extraction over a corpus against gold models.
    Eval {
        /// Directory of `<stem>.txt` documents.
        #[arg(long)]
        docs: PathBuf,
        /// Directory of `<stem>.xml` gold models.
        #[arg(long)]
        gold: PathBuf,
        #[command(flatten)]
        opts: ExtractOpts,
        /// Relationship labels must match too.
        #[arg(long)]
        strict_labels: bool,
        /// Write the aggregate report as key=value lines.
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Print tagged tokens, one per line.
    Tag { file: PathBuf },
    /// Print phrases and clauses.
    Chunk { file: PathBuf },
}

#[derive(Args, Clone)]
struct ExtractOpts {
    /// Ontology file; for `eval` also a directory of `<stem>.ont` files.
    #[arg(long)]
    ontology: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Mode::Lenient)]
    mode: Mode,
    /// Extra lexicon entries (`word TAG` per line).
    #[arg(long)]
    lexicon: Option<PathBuf>,
    /// Extra rule word lists.
    #[arg(long)]
    rules: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Mode {
    Strict,
    Lenient,
}

impl From<Mode> for RefinementMode {
    fn from(m: Mode) -> Self {
        match m {
            Mode::Strict => RefinementMode::Strict,
            Mode::Lenient => RefinementMode::Lenient,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Xml,
    Plantuml,
    Both,
}

impl ExtractOpts {
    fn extractor(&self) -> Result<dcb_core::Extractor> {
        let mut extractor = dcb_core::Extractor::new();
        extractor.lexicon = load_lexicon(self.lexicon.as_deref())
            .with_context(|| "loading lexicon".to_string())?;
        if let Some(path) = &self.rules {
            extractor.rules = RuleConfig::load(path)
                .with_context(|| format!("loading rule settings {}", path.display()))?;
        }
        extractor.mode = self.mode.into();
        Ok(extractor)
    }

    /// Ontology for a document: the file itself, or `<stem>.ont` when the
    /// option names a directory.
    fn ontology_path(&self, stem: &str) -> Option<PathBuf> {
        let path = self.ontology.as_ref()?;
        if path.is_dir() {
            let candidate = path.join(format!("{stem}.ont"));
            candidate.is_file().then_some(candidate)
        } else {
            Some(path.clone())
        }
    }
}

fn with_ontology(
    mut extractor: dcb_core::Extractor,
    path: Option<&Path>,
) -> Result<dcb_core::Extractor> {
    extractor.ontology = match path {
        Some(p) => Some(
            load_ontology(p).with_context(|| format!("loading ontology {}", p.display()))?,
        ),
        None => None,
    };
    Ok(extractor)
}

fn run(cli: Cli) -> Result<()> {
    match cli.command {
        Command::Extract {
            files,
            opts,
            format,
            out,
            trace,
        } => commands::extract(&files, &opts, format, out.as_deref(), trace),
        Command::Eval {
            docs,
            gold,
            opts,
            strict_labels,
            report,
        } => commands::eval(&docs, &gold, &opts, strict_labels, report.as_deref()),
        Command::Tag { file } => commands::tag(&file),
        Command::Chunk { file } => commands::chunk(&file),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::FAILURE
        }
    }
}
