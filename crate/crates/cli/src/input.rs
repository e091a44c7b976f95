//! Input documents, tagged by `kind`.

use std::io::Read;
use std::path::Path;

use horoaut::{BundleSpec, Fan, HorosphericalDatum};
use serde::{Deserialize, Serialize};

use crate::Failure;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum InputDocument {
    Fan(Fan),
    Horospherical(HorosphericalDatum),
    Bundle(BundleSpec),
    BundleBatch { specs: Vec<BundleSpec> },
}

impl InputDocument {
    pub fn kind(&self) -> &'static str {
        match self {
            InputDocument::Fan(_) => "fan",
            InputDocument::Horospherical(_) => "horospherical",
            InputDocument::Bundle(_) => "bundle",
            InputDocument::BundleBatch { .. } => "bundle_batch",
        }
    }
}

/// Reads a document from a file, or from stdin when `path` is `-`.
pub fn read_document(path: &Path) -> Result<InputDocument, Failure> {
    let text = if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| Failure::schema(format!("cannot read stdin: {e}")))?;
        s
    } else {
        std::fs::read_to_string(path)
            .map_err(|e| Failure::schema(format!("cannot read {}: {e}", path.display())))?
    };
    parse_document(&text)
}

pub fn parse_document(text: &str) -> Result<InputDocument, Failure> {
    serde_json::from_str(text).map_err(|e| Failure::schema(e.to_string()))
}

pub fn wrong_kind(expected: &str, doc: &InputDocument) -> Failure {
    Failure::schema(format!("expected kind {expected}, found {}", doc.kind()))
}
