//! Input loading with digests, and atomic artifact writes.

use std::fs;
use std::path::{Path, PathBuf};

use anyhow::{Context, Result};
use ramsey_core::format::{parse_graph, to_dot, to_graph6, to_json};
use ramsey_core::Graph;
use serde::Serialize;
use sha2::{Digest, Sha256};

use crate::args::Format;

#[derive(Clone, Debug, Serialize)]
pub struct InputDigest {
    pub path: String,
    pub sha256: String,
}

/// Reads a file, recording its digest.
pub fn read_input(path: &Path, inputs: &mut Vec<InputDigest>) -> Result<String> {
    let bytes = fs::read(path).with_context(|| format!("reading {}", path.display()))?;
    inputs.push(InputDigest {
        path: path.display().to_string(),
        sha256: hex::encode(Sha256::digest(&bytes)),
    });
    String::from_utf8(bytes).with_context(|| format!("{} is not UTF-8", path.display()))
}

pub fn read_graph(path: &Path, inputs: &mut Vec<InputDigest>) -> Result<Graph> {
    let text = read_input(path, inputs)?;
    parse_graph(&text).with_context(|| format!("parsing {}", path.display()))
}

pub fn read_json<T: serde::de::DeserializeOwned>(path: &Path, inputs: &mut Vec<InputDigest>) -> Result<T> {
    let text = read_input(path, inputs)?;
    serde_json::from_str(&text).with_context(|| format!("parsing {}", path.display()))
}

/// Collects artifact writes under one directory; every write goes to a
/// temporary file first and is renamed into place.
pub struct Artifacts {
    dir: PathBuf,
    format: Format,
    pub written: Vec<String>,
}

impl Artifacts {
    pub fn new(dir: &Path, format: Format) -> Result<Self> {
        fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
        Ok(Artifacts {
            dir: dir.to_path_buf(),
            format,
            written: Vec::new(),
        })
    }

    pub fn write(&mut self, name: &str, contents: &str) -> Result<PathBuf> {
        let path = self.dir.join(name);
        let tmp = self.dir.join(format!(".{name}.tmp"));
        fs::write(&tmp, contents).with_context(|| format!("writing {}", tmp.display()))?;
        fs::rename(&tmp, &path).with_context(|| format!("renaming to {}", path.display()))?;
        if !self.written.iter().any(|w| w == name) {
            self.written.push(name.to_string());
        }
        Ok(path)
    }

    pub fn write_json<T: Serialize>(&mut self, name: &str, value: &T) -> Result<PathBuf> {
        let mut text = serde_json::to_string_pretty(value)?;
        text.push('\n');
        self.write(name, &text)
    }

    /// Writes a graph as `<stem>.<ext>` in the chosen format.
    pub fn write_graph(&mut self, stem: &str, g: &Graph) -> Result<String> {
        let name = format!("{stem}.{}", self.format.extension());
        let text = match self.format {
            Format::G6 => format!("{}\n", to_graph6(g)),
            Format::Json => format!("{}\n", to_json(g)),
            Format::Dot => to_dot(g),
        };
        self.write(&name, &text)?;
        Ok(name)
    }
}
