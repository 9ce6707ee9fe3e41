//! The poset file format: a JSON object with `d`, `covers` (list of
//! `[i, j]` pairs, `j` covers `i`) and optional `labels`.
//!
//! Serialization is canonical: fields in that order, covers reduced and
//! sorted, no whitespace, one trailing newline.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poset::Poset;

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct PosetFile {
    d: usize,
    covers: Vec<[usize; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    labels: Option<Vec<String>>,
}

pub fn parse_poset(text: &str) -> Result<Poset> {
    let file: PosetFile = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    let pairs: Vec<_> = file.covers.iter().map(|&[i, j]| (i, j)).collect();
    let poset = Poset::new(file.d, &pairs)?;
    match file.labels {
        Some(labels) => poset.with_labels(labels),
        None => Ok(poset),
    }
}

pub fn serialize_poset(poset: &Poset) -> String {
    let file = PosetFile {
        d: poset.len(),
        covers: poset.covers().iter().map(|&(i, j)| [i, j]).collect(),
        labels: poset.labels().map(<[String]>::to_vec),
    };
    let mut s = serde_json::to_string(&file).expect("poset file serialization cannot fail");
    s.push('\n');
    s
}
