//! Homological shift ideals `HS_t(L(𝔄))` and their linearity.

use serde::Serialize;

use crate::betti::BettiTable;
use crate::error::{Error, Result};
use crate::guards::Guards;
use crate::hom::PosetIdeal;
use crate::ideal::{MonomialIdeal, QuasiLinearFailure};
use crate::letterplace::{ideal_of, monomial_of_sets};
use crate::linalg::Field;
use crate::oracle::{koszul_betti, taylor_betti};
use crate::resolution::{build_resolution, enumerate_ct, ResolutionComplex};
use crate::ring::Ring;

/// `HS_0, ..., HS_pd` of `L(𝔄)`.
#[derive(Clone, Debug, Serialize)]
pub struct ShiftFamily {
    pub ring: Ring,
    /// Degree `m` of the generators of `L(𝔄)`.
    pub base_degree: u32,
    pub ideals: Vec<MonomialIdeal>,
}

impl ShiftFamily {
    /// `HS_t`, the zero ideal beyond the projective dimension.
    pub fn get(&self, t: usize) -> MonomialIdeal {
        self.ideals
            .get(t)
            .cloned()
            .unwrap_or_else(|| MonomialIdeal::zero(self.ring.nvars()))
    }
}

/// `HS_t` from the closed form: the monomials `X_{p_1,K_1} ... X_{p_m,K_m}`
/// over the symbols of `C_t(𝔄)`.
pub fn hs_generators(ideal: &PosetIdeal, t: usize, guards: &Guards) -> Result<MonomialIdeal> {
    let (ring, _) = ideal_of(ideal);
    let gens = enumerate_ct(ideal, t, guards)?
        .iter()
        .map(|s| monomial_of_sets(&ring, s.sets()))
        .collect::<Result<Vec<_>>>()?;
    let count = gens.len();
    let hs = MonomialIdeal::new(ring.nvars(), gens);
    if hs.len() != count {
        return Err(Error::verification(format!(
            "HS_{t} closed-form generators are not minimal"
        )));
    }
    Ok(hs)
}

/// All shift ideals, each checked against the multidegrees of the resolution.
pub fn shift_family(ideal: &PosetIdeal, rz: Option<&ResolutionComplex>, guards: &Guards) -> Result<ShiftFamily> {
    let built;
    let rz = match rz {
        Some(r) => r,
        None => {
            built = build_resolution(ideal, guards)?;
            &built
        }
    };
    let (ring, _) = ideal_of(ideal);
    let mut ideals = Vec::with_capacity(rz.len());
    for t in 0..rz.len() {
        let hs = hs_generators(ideal, t, guards)?;
        let from_rz = MonomialIdeal::new(ring.nvars(), rz.degrees(t).to_vec());
        if hs != from_rz || hs.len() != rz.degrees(t).len() {
            return Err(Error::verification(format!("HS_{t} differs from the degrees of F_{t}")));
        }
        ideals.push(hs);
    }
    if !hs_generators(ideal, rz.len(), guards)?.is_zero() {
        return Err(Error::verification("HS is nonzero beyond the projective dimension"));
    }
    Ok(ShiftFamily {
        ring,
        base_degree: ideal.m() as u32,
        ideals,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Yes,
    No,
    /// The oracle refused the instance; no verdict is given.
    Undecided,
}

#[derive(Clone, Debug, Serialize)]
pub struct LinearityRecord {
    pub t: usize,
    pub generators: usize,
    pub linear_resolution: Verdict,
    /// Oracle that decided linearity: `taylor` or `koszul`.
    pub oracle: Option<&'static str>,
    /// A Betti position `(i, j)` off the linear strand, when not linear.
    pub off_linear: Option<(usize, u32)>,
    pub quasi_linear: bool,
    pub witnesses: Vec<QuasiLinearFailure>,
}

fn oracle_table(ideal: &MonomialIdeal, field: Field, guards: &Guards) -> Result<Option<(BettiTable, &'static str)>> {
    match koszul_betti(ideal, field, guards) {
        Ok(t) => return Ok(Some((t, "koszul"))),
        Err(e) if e.is_guard() => {}
        Err(e) => return Err(e),
    }
    match taylor_betti(ideal, field, guards) {
        Ok(t) => Ok(Some((t, "taylor"))),
        Err(e) if e.is_guard() => Ok(None),
        Err(e) => Err(e),
    }
}

/// Linear resolution and quasi-linearity of each `HS_t`, asserting that a
/// linear resolution always comes with quasi-linearity.
pub fn hs_linearity_report(family: &ShiftFamily, field: Field, guards: &Guards) -> Result<Vec<LinearityRecord>> {
    let mut out = Vec::with_capacity(family.ideals.len());
    for (t, hs) in family.ideals.iter().enumerate() {
        let degree = family.base_degree + t as u32;
        let failures = hs.quasi_linear_failures()?;
        let quasi_linear = failures.is_empty();
        let (linear, oracle, off) = match oracle_table(hs, field, guards)? {
            None => (Verdict::Undecided, None, None),
            Some((table, name)) => match table.off_linear(degree) {
                None => (Verdict::Yes, Some(name), None),
                Some(p) => (Verdict::No, Some(name), Some(p)),
            },
        };
        if linear == Verdict::Yes && !quasi_linear {
            return Err(Error::verification(format!(
                "HS_{t} has a linear resolution but is not quasi-linear"
            )));
        }
        out.push(LinearityRecord {
            t,
            generators: hs.len(),
            linear_resolution: linear,
            oracle,
            off_linear: off,
            quasi_linear,
            witnesses: failures,
        });
    }
    Ok(out)
}
