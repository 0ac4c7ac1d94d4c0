//! Certificates for a built complex: `d∘d = 0`, degree bookkeeping, and
//! exactness of every multigraded strand over an exact field.

use std::collections::HashMap;

use rayon::prelude::*;
use serde::Serialize;

use super::ResolutionComplex;
use crate::error::{Error, Result};
use crate::guards::Guards;
use crate::ideal::MonomialIdeal;
use crate::linalg::{Field, SparseMatrix};
use crate::monomial::Monomial;
use crate::oracle::lcm_closure;

/// Checks that every entry is a single variable matching the multidegrees,
/// that `d_{t-1} d_t = 0`, and that `d_0 d_1 = 0` for the augmentation.
pub fn verify_complex(rz: &ResolutionComplex) -> Result<()> {
    let nv = rz.ring.nvars();
    for t in 1..rz.len() {
        let (rows, cols) = (&rz.degrees[t - 1], &rz.degrees[t]);
        for e in &rz.diffs[t] {
            if e.row >= rows.len() || e.col >= cols.len() || e.var >= nv || e.sign.abs() != 1 {
                return Err(Error::verification(format!("malformed entry {e:?} in d_{t}")));
            }
            if rows[e.row].mul_var(e.var) != cols[e.col] {
                return Err(Error::verification(format!(
                    "d_{t} entry ({}, {}) does not respect multidegrees",
                    e.row, e.col
                )));
            }
        }
    }
    if rz.len() > 1 {
        let mut sums = vec![0i64; rz.degrees[1].len()];
        for e in &rz.diffs[1] {
            sums[e.col] += e.sign as i64;
        }
        if let Some(c) = sums.iter().position(|&s| s != 0) {
            return Err(Error::verification(format!("d_0 d_1 is nonzero on column {c}")));
        }
    }
    for t in 2..rz.len() {
        let mut by_col: Vec<Vec<&super::Entry>> = vec![Vec::new(); rz.degrees[t - 1].len()];
        for e in &rz.diffs[t - 1] {
            by_col[e.col].push(e);
        }
        let mut acc: HashMap<(usize, usize, usize, usize), i64> = HashMap::new();
        for e in &rz.diffs[t] {
            for f in &by_col[e.row] {
                let (a, b) = (e.var.min(f.var), e.var.max(f.var));
                *acc.entry((e.col, f.row, a, b)).or_insert(0) += (e.sign * f.sign) as i64;
            }
        }
        if let Some((k, _)) = acc.iter().find(|(_, v)| **v != 0) {
            return Err(Error::verification(format!(
                "d_{} d_{t} is nonzero at column {} row {}",
                t - 1,
                k.0,
                k.1
            )));
        }
    }
    Ok(())
}

/// The rank ladder of one strand of the augmented complex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StrandRecord {
    pub degree: Monomial,
    /// `dims[0] = dim I_b`, `dims[t + 1] = dim (F_t)_b`.
    pub dims: Vec<usize>,
    /// `ranks[0]` is the rank of the augmentation, `ranks[t]` that of `d_t`.
    pub ranks: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExactnessReport {
    pub field: Field,
    pub strands: Vec<StrandRecord>,
}

/// Certifies that `rz`, augmented by `ideal`, is exact in every multidegree
/// of the lcm-closure of the basis and generator degrees.
pub fn verify_exact(
    rz: &ResolutionComplex,
    ideal: &MonomialIdeal,
    field: Field,
    guards: &Guards,
) -> Result<ExactnessReport> {
    let mut base: Vec<Monomial> = ideal.gens().to_vec();
    base.extend(rz.degrees.iter().flatten().cloned());
    base.sort();
    base.dedup();
    let lattice = lcm_closure(&base, guards)?;
    let records: Vec<Result<StrandRecord>> = lattice.par_iter().map(|b| strand(rz, ideal, b, field)).collect();
    Ok(ExactnessReport {
        field,
        strands: records.into_iter().collect::<Result<_>>()?,
    })
}

fn strand(rz: &ResolutionComplex, ideal: &MonomialIdeal, b: &Monomial, field: Field) -> Result<StrandRecord> {
    let members: Vec<Vec<Option<usize>>> = rz
        .degrees
        .iter()
        .map(|level| {
            let mut next = 0;
            level
                .iter()
                .map(|d| {
                    d.divides(b).then(|| {
                        next += 1;
                        next - 1
                    })
                })
                .collect()
        })
        .collect();
    let sizes: Vec<usize> = members.iter().map(|l| l.iter().flatten().count()).collect();
    let ib = usize::from(ideal.contains(b));
    let mut dims = vec![ib];
    dims.extend(&sizes);
    let mut ranks = Vec::with_capacity(rz.len());
    // augmentation: every degree-b basis element of F_0 maps to the single generator of I_b
    ranks.push(if ib == 1 && sizes.first().copied().unwrap_or(0) > 0 {
        1
    } else {
        0
    });
    for t in 1..rz.len() {
        let mut m = SparseMatrix::new(sizes[t - 1], sizes[t]);
        for e in &rz.diffs[t] {
            if let Some(c) = members[t][e.col] {
                let r = members[t - 1][e.row].expect("rows of strand columns lie in the strand");
                m.add(r, c, e.sign as i64);
            }
        }
        ranks.push(m.rank(field));
    }
    if ranks[0] != ib {
        return Err(Error::verification(format!("strand {b:?}: augmentation not onto I_b")));
    }
    for t in 0..sizes.len() {
        let next = ranks.get(t + 1).copied().unwrap_or(0);
        if ranks[t] + next != sizes[t] {
            return Err(Error::verification(format!(
                "strand {b:?} is not exact at F_{t}: dim {} but ranks {} + {next}",
                sizes[t], ranks[t]
            )));
        }
    }
    Ok(StrandRecord {
        degree: b.clone(),
        dims,
        ranks,
    })
}
