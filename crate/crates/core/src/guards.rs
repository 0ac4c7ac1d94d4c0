//! Named size caps. Every potentially exponential enumeration checks one of
//! these and fails with [`Error::Guard`] instead of running away.

use std::collections::BTreeMap;

use crate::error::{Error, Result};

/// Guard names accepted by [`Guards::set`], with their defaults.
pub const GUARD_DEFAULTS: &[(&str, usize)] = &[
    ("poset-elements", 64),
    ("hom-maps", 100_000),
    ("basis", 100_000),
    ("chains", 100_000),
    ("taylor-generators", 16),
    ("koszul-support", 20),
    ("hilbert-generators", 20),
    ("splitting-generators", 5_000),
    ("faces", 100_000),
    ("lcm-lattice", 200_000),
    ("simplex-vertices", 128),
    ("bijection-vars", 10),
    ("power-generators", 150),
];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Guards {
    limits: BTreeMap<&'static str, usize>,
}

impl Default for Guards {
    fn default() -> Self {
        Guards {
            limits: GUARD_DEFAULTS.iter().copied().collect(),
        }
    }
}

impl Guards {
    pub fn limit(&self, name: &str) -> usize {
        *self
            .limits
            .get(name)
            .unwrap_or_else(|| panic!("unknown guard `{name}`"))
    }

    pub fn set(&mut self, name: &str, value: usize) -> Result<()> {
        let key = GUARD_DEFAULTS
            .iter()
            .map(|(k, _)| *k)
            .find(|k| *k == name)
            .ok_or_else(|| Error::invalid(format!("unknown guard `{name}`")))?;
        self.limits.insert(key, value);
        Ok(())
    }

    pub fn with(mut self, name: &str, value: usize) -> Result<Self> {
        self.set(name, value)?;
        Ok(self)
    }

    /// Fails when `value` exceeds the named limit.
    pub fn check(&self, name: &'static str, value: usize) -> Result<()> {
        let limit = self.limit(name);
        if value > limit {
            Err(Error::Guard { name, limit, value })
        } else {
            Ok(())
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = (&'static str, usize)> + '_ {
        self.limits.iter().map(|(k, v)| (*k, *v))
    }
}
