//! Monomials as dense exponent vectors over a [`Ring`](crate::ring::Ring).

use std::cmp::Ordering;
use std::fmt::Write as _;

use serde::Serialize;

use crate::ring::Ring;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn one(nvars: usize) -> Monomial {
        Monomial(vec![0; nvars])
    }

    pub fn from_exponents(exps: Vec<u32>) -> Monomial {
        Monomial(exps)
    }

    pub fn var(nvars: usize, v: usize) -> Monomial {
        let mut m = Monomial::one(nvars);
        m.0[v] = 1;
        m
    }

    pub fn from_vars(nvars: usize, vars: impl IntoIterator<Item = usize>) -> Monomial {
        let mut m = Monomial::one(nvars);
        for v in vars {
            m.0[v] += 1;
        }
        m
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn exp(&self, v: usize) -> u32 {
        self.0[v]
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn is_squarefree(&self) -> bool {
        self.0.iter().all(|&e| e <= 1)
    }

    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().enumerate().filter(|(_, &e)| e > 0).map(|(v, _)| v)
    }

    /// Variables with multiplicity, in index order.
    pub fn factors(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.degree() as usize);
        for (v, &e) in self.0.iter().enumerate() {
            out.extend(std::iter::repeat_n(v, e as usize));
        }
        out
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn mul_var(&self, v: usize) -> Monomial {
        let mut m = self.clone();
        m.0[v] += 1;
        m
    }

    /// `self / other`, or `None` if `other` does not divide `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<u32>>>()
            .map(Monomial)
    }

    pub fn div_var(&self, v: usize) -> Option<Monomial> {
        (self.0[v] > 0).then(|| {
            let mut m = self.clone();
            m.0[v] -= 1;
            m
        })
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| *a.min(b)).collect())
    }

    /// `self / gcd(self, other)`.
    pub fn colon(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a.saturating_sub(*b)).collect())
    }

    /// The single variable of a degree-one monomial.
    pub fn as_var(&self) -> Option<usize> {
        let mut it = self.support();
        let v = it.next()?;
        (self.0[v] == 1 && it.next().is_none()).then_some(v)
    }

    /// Rewrites every variable through `map` into a ring with `nvars` variables.
    pub fn substitute(&self, nvars: usize, map: impl Fn(usize) -> usize) -> Monomial {
        let mut m = Monomial::one(nvars);
        for (v, &e) in self.0.iter().enumerate() {
            if e > 0 {
                m.0[map(v)] += e;
            }
        }
        m
    }

    /// Lexicographic comparison with variable 0 largest.
    pub fn lex_cmp(&self, other: &Monomial) -> Ordering {
        self.0.cmp(&other.0)
    }

    pub fn display(&self, ring: &Ring) -> String {
        if self.is_one() {
            return "1".into();
        }
        let mut s = String::new();
        for (v, &e) in self.0.iter().enumerate() {
            if e == 1 {
                s.push_str(ring.name(v));
            } else if e > 1 {
                let _ = write!(s, "{}^{e}", ring.name(v));
            }
        }
        s
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Degree first, then lex with variable 0 largest (descending exponent vectors).
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| other.0.cmp(&self.0))
    }
}
