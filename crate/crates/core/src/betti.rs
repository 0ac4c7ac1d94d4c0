//! Multigraded Betti tables.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Serialize;

use crate::monomial::Monomial;
use crate::ring::Ring;

/// `β_{i,b}`, zero entries omitted.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct BettiTable {
    entries: BTreeMap<(usize, Monomial), usize>,
}

impl BettiTable {
    pub fn new() -> BettiTable {
        BettiTable::default()
    }

    pub fn add(&mut self, i: usize, b: Monomial, count: usize) {
        if count > 0 {
            *self.entries.entry((i, b)).or_insert(0) += count;
        }
    }

    pub fn get(&self, i: usize, b: &Monomial) -> usize {
        self.entries.get(&(i, b.clone())).copied().unwrap_or(0)
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, &Monomial, usize)> {
        self.entries.iter().map(|((i, b), v)| (*i, b, *v))
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// `β_{i,j} = sum over deg b = j`.
    pub fn graded(&self) -> BTreeMap<(usize, u32), usize> {
        let mut out = BTreeMap::new();
        for ((i, b), v) in &self.entries {
            *out.entry((*i, b.degree())).or_insert(0) += v;
        }
        out
    }

    /// Total Betti numbers `β_0, β_1, ...`.
    pub fn totals(&self) -> Vec<usize> {
        let mut out: Vec<usize> = Vec::new();
        for ((i, _), v) in &self.entries {
            if out.len() <= *i {
                out.resize(i + 1, 0);
            }
            out[*i] += v;
        }
        out
    }

    pub fn projective_dimension(&self) -> Option<usize> {
        self.entries.keys().map(|(i, _)| *i).max()
    }

    /// True when `β_{i,j} = 0` unless `j = d + i`.
    pub fn is_linear(&self, d: u32) -> bool {
        self.entries.keys().all(|(i, b)| b.degree() == d + *i as u32)
    }

    /// First entry off the `d`-linear strand.
    pub fn off_linear(&self, d: u32) -> Option<(usize, u32)> {
        self.entries
            .keys()
            .find(|(i, b)| b.degree() != d + *i as u32)
            .map(|(i, b)| (*i, b.degree()))
    }

    /// Positions where the tables differ, as `(i, b, self, other)`.
    pub fn diff<'a>(&'a self, other: &'a BettiTable) -> Vec<(usize, Monomial, usize, usize)> {
        let mut keys: Vec<&(usize, Monomial)> = self.entries.keys().chain(other.entries.keys()).collect();
        keys.sort();
        keys.dedup();
        keys.into_iter()
            .filter_map(|k| {
                let (a, b) = (self.get(k.0, &k.1), other.get(k.0, &k.1));
                (a != b).then(|| (k.0, k.1.clone(), a, b))
            })
            .collect()
    }

    /// The conventional layout: columns `i`, rows `j - i`.
    pub fn to_text(&self) -> String {
        let graded = self.graded();
        if graded.is_empty() {
            return "zero table\n".into();
        }
        let pd = graded.keys().map(|k| k.0).max().unwrap();
        let rows: Vec<i64> = {
            let mut r: Vec<i64> = graded.keys().map(|(i, j)| *j as i64 - *i as i64).collect();
            r.sort_unstable();
            r.dedup();
            r
        };
        let mut s = String::new();
        let _ = write!(s, "{:>6}", "");
        for i in 0..=pd {
            let _ = write!(s, "{i:>6}");
        }
        s.push('\n');
        let _ = write!(s, "{:>6}", "total:");
        for t in self.totals().iter().chain(std::iter::repeat(&0)).take(pd + 1) {
            let _ = write!(s, "{t:>6}");
        }
        s.push('\n');
        for r in rows {
            let _ = write!(s, "{:>6}", format!("{r}:"));
            for i in 0..=pd {
                let j = (r + i as i64) as u32;
                match graded.get(&(i, j)) {
                    Some(v) => {
                        let _ = write!(s, "{v:>6}");
                    }
                    None => {
                        let _ = write!(s, "{:>6}", ".");
                    }
                }
            }
            s.push('\n');
        }
        s
    }

    /// JSON-friendly listing `[{"i":.., "degree":.., "value":..}]`.
    pub fn to_json(&self, ring: &Ring) -> serde_json::Value {
        serde_json::Value::Array(
            self.entries
                .iter()
                .map(|((i, b), v)| serde_json::json!({"i": i, "degree": b.display(ring), "value": v}))
                .collect(),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn views() {
        let mut t = BettiTable::new();
        t.add(0, Monomial::from_exponents(vec![1, 0]), 1);
        t.add(0, Monomial::from_exponents(vec![0, 1]), 1);
        t.add(1, Monomial::from_exponents(vec![1, 1]), 1);
        t.add(1, Monomial::from_exponents(vec![0, 0]), 0);
        assert_eq!(t.totals(), vec![2, 1]);
        assert_eq!(t.projective_dimension(), Some(1));
        assert!(t.is_linear(1));
        assert_eq!(t.graded().get(&(1, 2)), Some(&1));
        let text = t.to_text();
        assert!(text.contains("total:     2     1"), "{text}");
        let mut u = t.clone();
        u.add(1, Monomial::from_exponents(vec![2, 0]), 1);
        assert_eq!(t.diff(&u).len(), 1);
        assert_eq!(u.off_linear(1), None);
        u.add(1, Monomial::from_exponents(vec![2, 1]), 1);
        assert_eq!(u.off_linear(1), Some((1, 3)));
    }
}
