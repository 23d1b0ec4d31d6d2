//! The golden fixture corpus under `fixtures/`.

use std::path::{Path, PathBuf};

use serde::Deserialize;

pub fn fixtures() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../fixtures")
}

pub fn fixture(rel: &str) -> String {
    fixtures().join(rel).display().to_string()
}

/// One golden verbalisation case from `fixtures/manifest.toml`.
#[derive(Debug, Clone, Deserialize)]
pub struct Case {
    pub name: String,
    /// `clinical` or `showcase`.
    pub set: String,
    pub ontology: String,
    pub lexicon: String,
    pub class: String,
    /// Extra command-line flags.
    pub options: Vec<String>,
    pub expected: String,
}

impl Case {
    /// Arguments for `paraverb verbalize` reproducing this case.
    pub fn verbalize_args(&self) -> Vec<String> {
        let mut args = vec![
            "verbalize".to_string(),
            "--ontology".into(),
            fixture(&self.ontology),
            "--lexicon".into(),
            fixture(&self.lexicon),
            "--class".into(),
            self.class.clone(),
        ];
        args.extend(self.options.iter().cloned());
        args
    }
}

#[derive(Deserialize)]
struct Manifest {
    case: Vec<Case>,
}

pub fn cases() -> Vec<Case> {
    let path = fixtures().join("manifest.toml");
    let text = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
    toml::from_str::<Manifest>(&text)
        .expect("manifest is well formed")
        .case
}

pub fn collapse_ws(s: &str) -> String {
    s.split_whitespace().collect::<Vec<_>>().join(" ")
}
