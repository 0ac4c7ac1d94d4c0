//! Instance files: a poset, an alphabet map, and a poset ideal in one JSON document.
//!
//! ```json
//! {"elements": ["p", "q"], "covers": [["p", "q"]], "n": 3,
//!  "A": {"p": [1, 2], "q": [1, 3]},
//!  "ideal": {"type": "generators", "maps": [[2, 3]]},
//!  "guards": {"hom-maps": 5000}}
//! ```
//!
//! Maps list one value per element in the order of `elements`.

use std::collections::BTreeMap;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::guards::Guards;
use crate::hom::{AlphabetMap, HomSpace, IsotoneMap, PosetIdeal};
use crate::poset::Poset;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase")]
pub enum IdealSpec {
    Full,
    Generators { maps: Vec<Vec<u32>> },
    Explicit { maps: Vec<Vec<u32>> },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InstanceFile {
    pub elements: Vec<String>,
    #[serde(default)]
    pub covers: Vec<(String, String)>,
    pub n: u32,
    #[serde(rename = "A")]
    pub alphabet: BTreeMap<String, Vec<u32>>,
    pub ideal: IdealSpec,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub guards: BTreeMap<String, usize>,
}

impl InstanceFile {
    pub fn from_json(text: &str) -> Result<InstanceFile> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("instance files always serialize")
    }
}

/// A parsed and validated instance.
#[derive(Clone, Debug)]
pub struct Instance {
    pub file: InstanceFile,
    pub ideal: PosetIdeal,
    pub guards: Guards,
}

impl Instance {
    /// Guards are the defaults, then the file's overrides, then `overrides`.
    pub fn new(file: InstanceFile, overrides: &BTreeMap<String, usize>) -> Result<Instance> {
        let mut guards = Guards::default();
        for (k, &v) in file.guards.iter().chain(overrides) {
            guards.set(k, v)?;
        }
        let covers: Vec<(&str, &str)> = file.covers.iter().map(|(a, b)| (a.as_str(), b.as_str())).collect();
        let elements: Vec<&str> = file.elements.iter().map(String::as_str).collect();
        let poset = Poset::from_cover_relations(&elements, &covers, &guards)?;
        if let Some(k) = file.alphabet.keys().find(|k| !file.elements.contains(k)) {
            return Err(Error::UnknownElement(k.clone()));
        }
        let sets = poset
            .ids()
            .iter()
            .map(|id| {
                file.alphabet
                    .get(id)
                    .cloned()
                    .ok_or_else(|| Error::invalid(format!("no alphabet given for `{id}`")))
            })
            .collect::<Result<Vec<_>>>()?;
        let space = HomSpace::new(poset, AlphabetMap::new(file.n, sets)?)?;
        let position: Vec<usize> = space
            .poset()
            .ids()
            .iter()
            .map(|id| {
                file.elements
                    .iter()
                    .position(|e| e == id)
                    .expect("poset ids come from elements")
            })
            .collect();
        let relabel = |maps: &[Vec<u32>]| -> Result<Vec<IsotoneMap>> {
            maps.iter()
                .map(|m| {
                    if m.len() != position.len() {
                        return Err(Error::invalid(format!(
                            "map {m:?} has {} values for {} elements",
                            m.len(),
                            position.len()
                        )));
                    }
                    Ok(IsotoneMap::new(position.iter().map(|&p| m[p]).collect()))
                })
                .collect()
        };
        let ideal = match &file.ideal {
            IdealSpec::Full => PosetIdeal::full(space, &guards)?,
            IdealSpec::Generators { maps } => PosetIdeal::from_generators(space, &relabel(maps)?, &guards)?,
            IdealSpec::Explicit { maps } => PosetIdeal::explicit(space, relabel(maps)?)?,
        };
        Ok(Instance { file, ideal, guards })
    }

    pub fn load(path: &Path, overrides: &BTreeMap<String, usize>) -> Result<Instance> {
        let text = std::fs::read_to_string(path)?;
        Self::new(InstanceFile::from_json(&text)?, overrides)
    }

    /// A map in canonical label order, written back in the file's element order.
    pub fn to_file_order(&self, f: &IsotoneMap) -> Vec<u32> {
        let ids = self.ideal.poset().ids();
        self.file
            .elements
            .iter()
            .map(|e| f.get(ids.iter().position(|id| id == e).expect("element of the poset")))
            .collect()
    }
}
