//! The corpus manifest: which files to check, in which order and mode.

use std::path::{Path, PathBuf};
use std::str::FromStr;

use thiserror::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ModeRequirement {
    /// Checks in default mode, and therefore in strong mode too.
    Any,
    /// Needs `--strong`; must be rejected without it.
    StrongOnly,
    /// Kept out of the acceptance run.
    Quarantined,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Ok,
    /// Every item is a `#fail` pragma and each fails as pinned.
    AllFail,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ManifestEntry {
    pub path: PathBuf,
    pub mode: ModeRequirement,
    pub verdict: Verdict,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ManifestError {
    #[error("manifest line {line}: expected `path mode verdict`")]
    Shape { line: usize },
    #[error("manifest line {line}: unknown mode `{word}`")]
    Mode { line: usize, word: String },
    #[error("manifest line {line}: unknown verdict `{word}`")]
    Verdict { line: usize, word: String },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Manifest {
    pub entries: Vec<ManifestEntry>,
}

impl FromStr for Manifest {
    type Err = ManifestError;

    fn from_str(text: &str) -> Result<Manifest, ManifestError> {
        let mut entries = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line = i + 1;
            let content = raw.split('#').next().unwrap_or("").trim();
            if content.is_empty() {
                continue;
            }
            let words: Vec<&str> = content.split_whitespace().collect();
            let [path, mode, verdict] = words[..] else {
                return Err(ManifestError::Shape { line });
            };
            let mode = match mode {
                "default" => ModeRequirement::Any,
                "strong" => ModeRequirement::StrongOnly,
                "quarantined" => ModeRequirement::Quarantined,
                word => return Err(ManifestError::Mode { line, word: word.to_owned() }),
            };
            let verdict = match verdict {
                "ok" => Verdict::Ok,
                "all-fail" => Verdict::AllFail,
                word => return Err(ManifestError::Verdict { line, word: word.to_owned() }),
            };
            entries.push(ManifestEntry { path: PathBuf::from(path), mode, verdict });
        }
        Ok(Manifest { entries })
    }
}

impl Manifest {
    /// Files checked in default mode, in order.
    pub fn default_files(&self, root: &Path) -> Vec<PathBuf> {
        self.files(root, |e| e.mode == ModeRequirement::Any)
    }

    /// Files for a strong-mode run: the default files and the strong-only ones.
    pub fn strong_files(&self, root: &Path) -> Vec<PathBuf> {
        self.files(root, |e| e.mode != ModeRequirement::Quarantined)
    }

    /// The default-mode files before `name`, followed by `name` itself.
    pub fn prefix_through(&self, root: &Path, name: &str) -> Vec<PathBuf> {
        let mut out = Vec::new();
        for entry in &self.entries {
            let hit = entry.path == Path::new(name);
            if hit || entry.mode == ModeRequirement::Any {
                out.push(root.join(&entry.path));
            }
            if hit {
                break;
            }
        }
        out
    }

    pub fn get(&self, name: &str) -> Option<&ManifestEntry> {
        self.entries.iter().find(|e| e.path == Path::new(name))
    }

    fn files(&self, root: &Path, keep: impl Fn(&ManifestEntry) -> bool) -> Vec<PathBuf> {
        self.entries.iter().filter(|e| keep(e)).map(|e| root.join(&e.path)).collect()
    }
}

const MANIFEST: &str = include_str!("../../../corpus/manifest");

/// The manifest shipped with the corpus.
pub fn corpus_manifest() -> Manifest {
    MANIFEST.parse().expect("the shipped manifest is well formed")
}

/// Where the shipped corpus lives in the source tree.
pub fn corpus_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../corpus")
}
