//! Finite posets carried with a fixed linear-extension labeling `p1, ..., pm`.
//!
//! Every poset handed out by this module satisfies: if `p_i < p_j` then `i < j`.
//! Downstream code (the variable order, the lexicographic order on maps, the
//! sign rule of the differential) relies on this labeling.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::guards::Guards;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Poset {
    ids: Vec<String>,
    leq: Vec<Vec<bool>>,
}

impl Poset {
    /// Builds the poset generated by `covers` (pairs `(a, b)` meaning `a <= b`).
    ///
    /// Elements are relabeled along a stable topological sort: among the
    /// elements whose predecessors are all placed, the one listed first in
    /// `elements` goes next. The resulting labeling is reported by [`Poset::ids`].
    pub fn from_cover_relations<S: AsRef<str>>(elements: &[S], covers: &[(S, S)], guards: &Guards) -> Result<Poset> {
        let m = elements.len();
        guards.check("poset-elements", m)?;
        let mut position = std::collections::HashMap::new();
        for (i, e) in elements.iter().enumerate() {
            if position.insert(e.as_ref().to_string(), i).is_some() {
                return Err(Error::DuplicateElement(e.as_ref().to_string()));
            }
        }
        let lookup = |s: &S| {
            position
                .get(s.as_ref())
                .copied()
                .ok_or_else(|| Error::UnknownElement(s.as_ref().to_string()))
        };

        let mut reach = vec![vec![false; m]; m];
        for (i, row) in reach.iter_mut().enumerate() {
            row[i] = true;
        }
        for (a, b) in covers {
            let (a, b) = (lookup(a)?, lookup(b)?);
            if a == b {
                return Err(Error::NotPartialOrder(format!(
                    "self-relation on `{}`",
                    elements[a].as_ref()
                )));
            }
            reach[a][b] = true;
        }
        for k in 0..m {
            for i in 0..m {
                if reach[i][k] {
                    for j in 0..m {
                        if reach[k][j] {
                            reach[i][j] = true;
                        }
                    }
                }
            }
        }
        for i in 0..m {
            for j in (i + 1)..m {
                if reach[i][j] && reach[j][i] {
                    return Err(Error::NotPartialOrder(format!(
                        "cycle through `{}` and `{}`",
                        elements[i].as_ref(),
                        elements[j].as_ref()
                    )));
                }
            }
        }

        let mut placed = vec![false; m];
        let mut order = Vec::with_capacity(m);
        while order.len() < m {
            let next = (0..m)
                .find(|&c| !placed[c] && (0..m).all(|p| p == c || !reach[p][c] || placed[p]))
                .expect("acyclic relation always has a minimal unplaced element");
            placed[next] = true;
            order.push(next);
        }

        let ids = order.iter().map(|&i| elements[i].as_ref().to_string()).collect();
        let leq = order
            .iter()
            .map(|&i| order.iter().map(|&j| reach[i][j]).collect())
            .collect();
        let poset = Poset { ids, leq };
        debug_assert!(poset.validate().is_ok());
        Ok(poset)
    }

    /// The chain `p1 < p2 < ... < pm`.
    pub fn chain(m: usize) -> Poset {
        let ids = (1..=m).map(|i| format!("p{i}")).collect();
        let leq = (0..m).map(|i| (0..m).map(|j| i <= j).collect()).collect();
        Poset { ids, leq }
    }

    /// `m` pairwise incomparable elements.
    pub fn antichain(m: usize) -> Poset {
        let ids = (1..=m).map(|i| format!("p{i}")).collect();
        let leq = (0..m).map(|i| (0..m).map(|j| i == j).collect()).collect();
        Poset { ids, leq }
    }

    /// Builds a poset directly from a relation matrix already in labeled form.
    pub fn from_matrix(ids: Vec<String>, leq: Vec<Vec<bool>>) -> Result<Poset> {
        if leq.len() != ids.len() || leq.iter().any(|r| r.len() != ids.len()) {
            return Err(Error::invalid("relation matrix shape does not match element count"));
        }
        let poset = Poset { ids, leq };
        poset.validate()?;
        Ok(poset)
    }

    pub fn len(&self) -> usize {
        self.ids.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ids.is_empty()
    }

    /// Identifiers in label order: `ids()[i]` is `p_{i+1}`.
    pub fn ids(&self) -> &[String] {
        &self.ids
    }

    pub fn id(&self, i: usize) -> &str {
        &self.ids[i]
    }

    pub fn index_of(&self, id: &str) -> Option<usize> {
        self.ids.iter().position(|x| x == id)
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.leq[i][j]
    }

    pub fn lt(&self, i: usize, j: usize) -> bool {
        i != j && self.leq[i][j]
    }

    /// Indices strictly below `j`; all of them are smaller than `j`.
    pub fn below(&self, j: usize) -> impl Iterator<Item = usize> + '_ {
        (0..j).filter(move |&i| self.leq[i][j])
    }

    /// Checks the partial-order axioms and the linear-extension labeling.
    pub fn validate(&self) -> Result<()> {
        let m = self.len();
        for i in 0..m {
            if !self.leq[i][i] {
                return Err(Error::NotPartialOrder(format!("not reflexive at p{}", i + 1)));
            }
            for j in 0..m {
                if i != j && self.leq[i][j] {
                    if self.leq[j][i] {
                        return Err(Error::NotPartialOrder(format!(
                            "p{} and p{} are mutually related",
                            i + 1,
                            j + 1
                        )));
                    }
                    if j < i {
                        return Err(Error::NotPartialOrder(format!(
                            "labeling is not a linear extension: p{} < p{}",
                            i + 1,
                            j + 1
                        )));
                    }
                }
                for k in 0..m {
                    if self.leq[i][j] && self.leq[j][k] && !self.leq[i][k] {
                        return Err(Error::NotPartialOrder(format!(
                            "not transitive at p{}, p{}, p{}",
                            i + 1,
                            j + 1,
                            k + 1
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    /// The induced subposet on the given labels, kept in their label order.
    pub fn restrict(&self, keep: &[usize]) -> Poset {
        let ids = keep.iter().map(|&i| self.ids[i].clone()).collect();
        let leq = keep
            .iter()
            .map(|&i| keep.iter().map(|&j| self.leq[i][j]).collect())
            .collect();
        Poset { ids, leq }
    }

    /// `P^k = P x [k]` with the product order.
    pub fn product_with_chain(&self, k: usize, guards: &Guards) -> Result<ProductPoset> {
        if k == 0 {
            return Err(Error::invalid("chain length must be positive"));
        }
        let m = self.len();
        guards.check("poset-elements", m * k)?;
        // (i, j) in lexicographic order is a linear extension of the product order.
        let mut ids = Vec::with_capacity(m * k);
        for i in 0..m {
            for j in 1..=k {
                ids.push(format!("{}.{}", self.ids[i], j));
            }
        }
        let mut leq = vec![vec![false; m * k]; m * k];
        for i1 in 0..m {
            for j1 in 0..k {
                for i2 in 0..m {
                    for j2 in 0..k {
                        leq[i1 * k + j1][i2 * k + j2] = self.leq[i1][i2] && j1 <= j2;
                    }
                }
            }
        }
        let poset = Poset { ids, leq };
        poset.validate()?;
        Ok(ProductPoset { base_len: m, k, poset })
    }
}

/// `P^k` together with the bookkeeping `p_{i,j} <-> label`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProductPoset {
    base_len: usize,
    k: usize,
    poset: Poset,
}

impl ProductPoset {
    pub fn poset(&self) -> &Poset {
        &self.poset
    }

    pub fn chain_length(&self) -> usize {
        self.k
    }

    pub fn base_len(&self) -> usize {
        self.base_len
    }

    /// Label of `p_{i,j}` (both zero-based).
    pub fn index(&self, i: usize, j: usize) -> usize {
        i * self.k + j
    }

    /// Inverse of [`ProductPoset::index`].
    pub fn split(&self, label: usize) -> (usize, usize) {
        (label / self.k, label % self.k)
    }
}
