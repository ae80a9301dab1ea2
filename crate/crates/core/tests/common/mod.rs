#![allow(dead_code)]

pub mod cases;
pub mod checks;
pub mod gen;

use std::path::PathBuf;

pub fn corpus_dir() -> PathBuf {
    PathBuf::from(concat!(env!("CARGO_MANIFEST_DIR"), "/../core/data/corpus"))
}
