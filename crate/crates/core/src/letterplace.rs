//! The ideal `L(P, A; 𝔄) = (U_f : f in 𝔄)` and its linear quotients.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::hom::{AlphabetMap, HomSpace, IsotoneMap, PosetIdeal};
use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;
use crate::ring::Ring;

/// `U_f = prod_i X_{p_i, f(p_i)}`.
pub fn monomial_of_map(ring: &Ring, f: &IsotoneMap) -> Result<Monomial> {
    monomial_of_sets(ring, &f.values().iter().map(|&a| vec![a]).collect::<Vec<_>>())
}

/// `X_{p_1,K_1} ... X_{p_m,K_m}`.
pub fn monomial_of_sets(ring: &Ring, sets: &[Vec<u32>]) -> Result<Monomial> {
    let mut m = Monomial::one(ring.nvars());
    for (i, set) in sets.iter().enumerate() {
        for &a in set {
            let v = ring
                .var(i, a)
                .ok_or_else(|| Error::invalid(format!("no variable X[p{},{a}] in this ring", i + 1)))?;
            if m.exp(v) > 0 {
                return Err(Error::invalid(format!("letter {a} repeated at p{}", i + 1)));
            }
            m = m.mul_var(v);
        }
    }
    Ok(m)
}

/// `size(L) = sum_i |A_i|`.
pub fn ideal_size(alphabet: &AlphabetMap) -> usize {
    alphabet.size()
}

/// The ring of `(P, A)` together with `L(𝔄)`.
pub fn ideal_of(ideal: &PosetIdeal) -> (Ring, MonomialIdeal) {
    let ring = Ring::letterplace(ideal.alphabet());
    let gens = ideal
        .members()
        .iter()
        .map(|f| monomial_of_map(&ring, f).expect("members use their own alphabets"))
        .collect();
    let nv = ring.nvars();
    (ring, MonomialIdeal::new(nv, gens))
}

/// `Δ_f`: pairs `(s, k)` with `k in A_s`, `k < f(p_s)`, and `f(p_i) <= k` for all `p_i < p_s`.
pub fn delta_f(space: &HomSpace, f: &IsotoneMap) -> Vec<(usize, u32)> {
    let poset = space.poset();
    let mut out = Vec::new();
    for s in 0..space.m() {
        let floor = poset.below(s).map(|i| f.get(i)).max().unwrap_or(0);
        for &k in space.alphabet().set(s) {
            if k < f.get(s) && k >= floor {
                out.push((s, k));
            }
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QuotientStep {
    pub map: IsotoneMap,
    /// `set(U_f)`: the variables generating `(U_g : g <_l f) : U_f`.
    pub set: Vec<usize>,
}

/// For each `f` in `<=_l` order, the variables generating the prefix colon
/// ideal, checked against the closed form `Δ_f`.
pub fn linear_quotients_sets(ideal: &PosetIdeal) -> Result<Vec<QuotientStep>> {
    let (ring, _) = ideal_of(ideal);
    let nv = ring.nvars();
    let mut prefix: Vec<Monomial> = Vec::new();
    let mut out = Vec::with_capacity(ideal.len());
    for f in ideal.members() {
        let u = monomial_of_map(&ring, f)?;
        let colon = MonomialIdeal::new(nv, prefix.clone()).colon(&u);
        if !colon.is_variable_generated() {
            return Err(Error::verification(format!(
                "prefix colon at {f} is {}",
                colon.display(&ring)
            )));
        }
        let mut set: Vec<usize> = colon.gens().iter().filter_map(Monomial::as_var).collect();
        set.sort_unstable();
        let mut closed: Vec<usize> = delta_f(ideal.space(), f)
            .into_iter()
            .map(|(s, k)| ring.var(s, k).expect("Δ_f letters lie in the alphabet"))
            .collect();
        closed.sort_unstable();
        if set != closed {
            return Err(Error::verification(format!("set(U_f) differs from Δ_f at {f}")));
        }
        out.push(QuotientStep { map: f.clone(), set });
        prefix.push(u);
    }
    Ok(out)
}
