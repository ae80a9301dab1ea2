use std::fs;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};

use dcb_core::{
    aggregate, compare, from_xml, load_document, to_plantuml, to_xml, CompareOptions, Extraction,
    Extractor,
};

use crate::{with_ontology, ExtractOpts, Format};

/// Writes through a temporary file in the same directory, then renames.
fn write_atomic(path: &Path, contents: &str) -> Result<()> {
    let dir = match path.parent() {
        Some(p) if !p.as_os_str().is_empty() => p,
        _ => Path::new("."),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(dir)
        .with_context(|| format!("creating temporary file in {}", dir.display()))?;
    tmp.write_all(contents.as_bytes())?;
    tmp.persist(path)
        .with_context(|| format!("writing {}", path.display()))?;
    Ok(())
}

fn print_trace(x: &Extraction) {
    let mut err = io::stderr().lock();
    for firing in &x.firings {
        let _ = writeln!(err, "{firing}");
    }
    let refs = |p: &[dcb_core::SourceRef]| {
        p.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
    };
    for class in &x.model.classes {
        let _ = writeln!(err, "ELEMENT\tclass\t{}\t{}", class.name, refs(&class.provenance));
        for a in &class.attributes {
            let _ = writeln!(
                err,
                "ELEMENT\tattribute\t{}.{}\t{}",
                class.name,
                a.name,
                refs(&a.provenance)
            );
        }
    }
    for r in &x.model.relationships {
        let _ = writeln!(
            err,
            "ELEMENT\t{}\t{} {} {}\t{}",
            r.kind,
            r.source,
            r.target,
            r.label,
            refs(&r.provenance)
        );
    }
}

pub fn extract(
    files: &[PathBuf],
    opts: &ExtractOpts,
    format: Format,
    out: Option<&Path>,
    trace: bool,
) -> Result<()> {
    let base = opts.extractor()?;
    let out = out.unwrap_or(Path::new("."));
    if !out.is_dir() {
        fs::create_dir_all(out).with_context(|| format!("creating {}", out.display()))?;
    }
    for file in files {
        let doc = load_document(file)?;
        let extractor = with_ontology(base.clone(), opts.ontology_path(&doc.id).as_deref())?;
        let x = extractor.extract(&doc);
        if trace {
            print_trace(&x);
        }
        if matches!(format, Format::Xml | Format::Both) {
            write_atomic(&out.join(format!("{}.xml", doc.id)), &to_xml(&x.model))?;
        }
        if matches!(format, Format::Plantuml | Format::Both) {
            write_atomic(&out.join(format!("{}.puml", doc.id)), &to_plantuml(&x.model))?;
        }
    }
    Ok(())
}

fn corpus_documents(dir: &Path) -> Result<Vec<PathBuf>> {
    let mut docs = Vec::new();
    for entry in fs::read_dir(dir).with_context(|| format!("reading {}", dir.display()))? {
        let path = entry?.path();
        if path.is_file() && path.extension().is_some_and(|e| e == "txt") {
            docs.push(path);
        }
    }
    docs.sort();
    Ok(docs)
}

pub fn eval(
    docs: &Path,
    gold: &Path,
    opts: &ExtractOpts,
    strict_labels: bool,
    report: Option<&Path>,
) -> Result<()> {
    let base = opts.extractor()?;
    let options = CompareOptions { strict_labels };
    let mut reports = Vec::new();
    let mut stdout = BufWriter::new(io::stdout().lock());

    for path in corpus_documents(docs)? {
        let doc = load_document(&path)?;
        let gold_path = gold.join(format!("{}.xml", doc.id));
        if !gold_path.is_file() {
            bail!(
                "missing gold model for `{}` (expected {})",
                doc.id,
                gold_path.display()
            );
        }
        let text = fs::read_to_string(&gold_path)
            .with_context(|| format!("reading {}", gold_path.display()))?;
        let key = from_xml(&text).with_context(|| format!("parsing {}", gold_path.display()))?;
        let extractor = with_ontology(base.clone(), opts.ontology_path(&doc.id).as_deref())?;
        let response = extractor.extract(&doc).model;
        let r = compare(&response, &key, options);
        writeln!(stdout, "document {}\n{r}", doc.id)?;
        reports.push(r);
    }

    let total = aggregate(&reports);
    writeln!(stdout, "aggregate ({} documents)\n{total}", reports.len())?;
    stdout.flush()?;
    if let Some(path) = report {
        write_atomic(path, &total.to_key_values())?;
    }
    Ok(())
}

pub fn tag(file: &Path) -> Result<()> {
    let doc = load_document(file)?;
    let mut stdout = BufWriter::new(io::stdout().lock());
    for a in Extractor::new().analyze(&doc) {
        for t in &a.tagged {
            writeln!(
                stdout,
                "{}\t{}\t{}\t{}\t{}",
                a.sentence.index,
                t.token.index,
                t.surface(),
                t.lemma,
                t.tag
            )?;
        }
    }
    stdout.flush()?;
    Ok(())
}

pub fn chunk(file: &Path) -> Result<()> {
    let doc = load_document(file)?;
    let mut stdout = BufWriter::new(io::stdout().lock());
    for a in Extractor::new().analyze(&doc) {
        for p in &a.phrases {
            writeln!(stdout, "PHRASE\ts{}\t{p}", a.sentence.index)?;
        }
        for c in &a.clauses {
            writeln!(stdout, "{c}")?;
        }
    }
    stdout.flush()?;
    Ok(())
}
