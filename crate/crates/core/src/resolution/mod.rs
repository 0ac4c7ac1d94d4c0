//! The explicit multigraded minimal free resolution of `L(𝔄)`.
//!
//! Level `t` has one basis symbol `[K_1, ..., K_m]` per tuple with
//! `K_i ⊆ A_i` non-empty, `sum |K_i| = m + t`, `max K_i <= min K_j` whenever
//! `p_i < p_j`, and `(max K_1, ..., max K_m) in 𝔄`.

mod cone;
mod export;
mod split;
mod verify;

use std::collections::HashMap;
use std::fmt;

use serde::Serialize;

pub use cone::build_by_mapping_cone;
pub use split::{betti_split, verify_split_additivity, BettiSplit, SplitReport};
pub use verify::{verify_complex, verify_exact, ExactnessReport, StrandRecord};

use crate::betti::BettiTable;
use crate::error::{Error, Result};
use crate::guards::Guards;
use crate::hom::{IsotoneMap, PosetIdeal};
use crate::letterplace::{delta_f, ideal_of, monomial_of_sets};
use crate::monomial::Monomial;
use crate::ring::Ring;

/// A basis symbol `[K_1, ..., K_m]`, each `K_i` sorted ascending. The derived
/// order is lexicographic on the tuple of sorted sets.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Symbol(pub Vec<Vec<u32>>);

impl Symbol {
    pub fn sets(&self) -> &[Vec<u32>] {
        &self.0
    }

    /// `sum |K_i| - m`.
    pub fn homological_degree(&self) -> usize {
        self.0.iter().map(Vec::len).sum::<usize>() - self.0.len()
    }

    /// `(max K_1, ..., max K_m)`.
    pub fn top(&self) -> IsotoneMap {
        IsotoneMap::new(self.0.iter().map(|k| *k.last().expect("non-empty sets")).collect())
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, k) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{{")?;
            for (j, a) in k.iter().enumerate() {
                if j > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{a}")?;
            }
            write!(f, "}}")?;
        }
        write!(f, "]")
    }
}

/// One nonzero entry `sign * X_var` of a differential matrix, mapping basis
/// element `col` of level `t` to basis element `row` of level `t - 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Entry {
    pub col: usize,
    pub row: usize,
    pub sign: i8,
    pub var: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ResolutionComplex {
    ring: Ring,
    symbols: Vec<Vec<Symbol>>,
    degrees: Vec<Vec<Monomial>>,
    /// `diffs[t]` is `d_t` for `t >= 1`; `diffs[0]` is empty.
    diffs: Vec<Vec<Entry>>,
}

impl ResolutionComplex {
    pub(crate) fn from_parts(
        ring: Ring,
        symbols: Vec<Vec<Symbol>>,
        degrees: Vec<Vec<Monomial>>,
        diffs: Vec<Vec<Entry>>,
    ) -> ResolutionComplex {
        ResolutionComplex {
            ring,
            symbols,
            degrees,
            diffs,
        }
    }

    /// The same complex over a ring with the identical variable layout.
    pub(crate) fn with_ring(mut self, ring: Ring) -> ResolutionComplex {
        assert_eq!(ring.nvars(), self.ring.nvars(), "ring layouts differ");
        self.ring = ring;
        self
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    /// Number of nonzero levels; `pd + 1` for a nonzero ideal.
    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn symbols(&self, t: usize) -> &[Symbol] {
        &self.symbols[t]
    }

    pub fn degrees(&self, t: usize) -> &[Monomial] {
        &self.degrees[t]
    }

    /// `d_t` for `t >= 1`, sorted by column then row.
    pub fn differential(&self, t: usize) -> &[Entry] {
        &self.diffs[t]
    }

    pub fn ranks(&self) -> Vec<usize> {
        self.symbols.iter().map(Vec::len).collect()
    }

    pub fn projective_dimension(&self) -> Option<usize> {
        self.symbols.len().checked_sub(1)
    }

    /// `d_0`: the generator `U` attached to each basis element of level 0.
    pub fn augmentation(&self) -> &[Monomial] {
        &self.degrees[0]
    }

    /// `β_{i,b}` read off as the number of basis elements of `F_i` in degree `b`.
    pub fn betti_table(&self) -> BettiTable {
        let mut t = BettiTable::new();
        for (i, level) in self.degrees.iter().enumerate() {
            for b in level {
                t.add(i, b.clone(), 1);
            }
        }
        t
    }

    /// The differential `d_t` as a dense matrix of signed variables (`None` for zero).
    pub fn dense(&self, t: usize) -> Vec<Vec<Option<(i8, usize)>>> {
        let mut m = vec![vec![None; self.symbols[t].len()]; self.symbols[t - 1].len()];
        for e in &self.diffs[t] {
            m[e.row][e.col] = Some((e.sign, e.var));
        }
        m
    }
}

/// Basis of `C_t(𝔄)`, sorted. Built from `f in 𝔄` and a `t`-subset of `Δ_f`.
pub fn enumerate_ct(ideal: &PosetIdeal, t: usize, guards: &Guards) -> Result<Vec<Symbol>> {
    let limit = guards.limit("basis");
    let mut out = Vec::new();
    for f in ideal.members() {
        let delta = delta_f(ideal.space(), f);
        if delta.len() < t {
            continue;
        }
        for_each_subset(delta.len(), t, &mut |chosen| {
            let mut sets: Vec<Vec<u32>> = f.values().iter().map(|&a| vec![a]).collect();
            for &c in chosen {
                let (s, k) = delta[c];
                sets[s].push(k);
            }
            for k in &mut sets {
                k.sort_unstable();
            }
            out.push(Symbol(sets));
        });
        if out.len() > limit {
            return Err(Error::Guard {
                name: "basis",
                limit,
                value: out.len(),
            });
        }
    }
    out.sort();
    Ok(out)
}

fn for_each_subset(n: usize, t: usize, visit: &mut dyn FnMut(&[usize])) {
    fn rec(start: usize, n: usize, t: usize, cur: &mut Vec<usize>, visit: &mut dyn FnMut(&[usize])) {
        if cur.len() == t {
            visit(cur);
            return;
        }
        for i in start..n {
            if n - i < t - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, t, cur, visit);
            cur.pop();
        }
    }
    rec(0, n, t, &mut Vec::with_capacity(t), visit);
}

/// `d_t([K])`: for each `(i, a)` with `|K_i| >= 2`, the term
/// `(-1)^σ X_{p_i,a} [..., K_i \ {a}, ...]`, where `σ` is the position of
/// `(i, a)` among all pairs of the symbol ordered by `i`, then `a`.
pub fn differential_terms(symbol: &Symbol) -> Result<Vec<(Symbol, i8, (usize, u32))>> {
    if symbol.homological_degree() == 0 {
        return Err(Error::invalid(
            "d_t is defined on symbols of homological degree at least 1",
        ));
    }
    let mut out = Vec::new();
    let mut sigma = 0usize;
    for (i, k) in symbol.0.iter().enumerate() {
        for (j, &a) in k.iter().enumerate() {
            if k.len() >= 2 {
                let mut target = symbol.0.clone();
                target[i].remove(j);
                out.push((Symbol(target), if sigma.is_multiple_of(2) { 1 } else { -1 }, (i, a)));
            }
            sigma += 1;
        }
    }
    Ok(out)
}

/// Builds and checks the resolution of `L(𝔄)`.
pub fn build_resolution(ideal: &PosetIdeal, guards: &Guards) -> Result<ResolutionComplex> {
    let (ring, _) = ideal_of(ideal);
    let mut symbols: Vec<Vec<Symbol>> = Vec::new();
    let mut total = 0usize;
    loop {
        let level = enumerate_ct(ideal, symbols.len(), guards)?;
        if level.is_empty() {
            break;
        }
        total += level.len();
        guards.check("basis", total)?;
        symbols.push(level);
    }
    let rz = assemble(ring, symbols)?;
    verify_complex(&rz)?;
    Ok(rz)
}

/// Computes degrees and differentials for given sorted levels of symbols.
pub(crate) fn assemble(ring: Ring, symbols: Vec<Vec<Symbol>>) -> Result<ResolutionComplex> {
    let degrees: Vec<Vec<Monomial>> = symbols
        .iter()
        .map(|level| {
            level
                .iter()
                .map(|s| monomial_of_sets(&ring, &s.0))
                .collect::<Result<_>>()
        })
        .collect::<Result<_>>()?;
    let mut diffs = vec![Vec::new()];
    for t in 1..symbols.len() {
        let index: HashMap<&Symbol, usize> = symbols[t - 1].iter().enumerate().map(|(i, s)| (s, i)).collect();
        let mut entries = Vec::new();
        for (col, s) in symbols[t].iter().enumerate() {
            for (target, sign, (i, a)) in differential_terms(s)? {
                let row = *index
                    .get(&target)
                    .ok_or_else(|| Error::verification(format!("d({s}) leaves the complex at {target}")))?;
                let var = ring.var(i, a).expect("letters of symbols lie in the alphabet");
                entries.push(Entry { col, row, sign, var });
            }
        }
        entries.sort();
        diffs.push(entries);
    }
    Ok(ResolutionComplex::from_parts(ring, symbols, degrees, diffs))
}
