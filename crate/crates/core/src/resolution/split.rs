//! The splitting `L = J + K` along the smallest letter of `A_1`.

use serde::Serialize;

use crate::betti::BettiTable;
use crate::error::{Error, Result};
use crate::guards::Guards;
use crate::hom::{AlphabetMap, IsotoneMap, PosetIdeal};
use crate::ideal::MonomialIdeal;
use crate::letterplace::{ideal_of, monomial_of_map};
use crate::linalg::Field;
use crate::monomial::Monomial;
use crate::oracle::koszul_betti;

/// `𝔄_1 = {f : f(p_1) = a_1}` over `A_1 = {a_1}` and
/// `𝔄_2 = {f : f(p_1) != a_1}` over `A_1 \ {a_1}`.
#[derive(Clone, Debug)]
pub struct BettiSplit {
    pub a1: u32,
    pub first: PosetIdeal,
    pub second: PosetIdeal,
}

/// `None` when every member takes the value `a_1` at `p_1` (no split).
pub fn betti_split(ideal: &PosetIdeal) -> Result<Option<BettiSplit>> {
    let alphabet = ideal.alphabet();
    let a_first = alphabet.set(0);
    if ideal.m() == 0 || a_first.len() < 2 {
        return Err(Error::invalid("splitting needs |A_1| >= 2"));
    }
    let a1 = a_first[0];
    let (one, two): (Vec<IsotoneMap>, Vec<IsotoneMap>) = ideal.members().iter().cloned().partition(|f| f.get(0) == a1);
    if two.is_empty() {
        return Ok(None);
    }
    let mut sets = alphabet.sets().to_vec();
    sets[0] = vec![a1];
    let first = PosetIdeal::explicit(
        ideal
            .space()
            .with_alphabet(AlphabetMap::new(alphabet.n(), sets.clone())?)?,
        one,
    )?;
    sets[0] = a_first[1..].to_vec();
    let second = PosetIdeal::explicit(ideal.space().with_alphabet(AlphabetMap::new(alphabet.n(), sets)?)?, two)?;
    Ok(Some(BettiSplit { a1, first, second }))
}

#[derive(Clone, Debug, Serialize)]
pub struct SplitReport {
    pub a1: u32,
    pub betti_l: BettiTable,
    pub betti_j: BettiTable,
    pub betti_k: BettiTable,
    pub betti_jk: BettiTable,
}

/// Checks `J ∩ K = X_{p_1,a_1} K` and the graded additivity
/// `β_{i,j}(L) = β_{i,j}(J) + β_{i,j}(K) + β_{i-1,j}(J ∩ K)`, with all
/// tables from the simplicial oracle.
pub fn verify_split_additivity(ideal: &PosetIdeal, field: Field, guards: &Guards) -> Result<Option<SplitReport>> {
    let Some(split) = betti_split(ideal)? else {
        return Ok(None);
    };
    let (ring, l) = ideal_of(ideal);
    let nv = ring.nvars();
    let lift = |p: &PosetIdeal| -> Result<MonomialIdeal> {
        let gens = p
            .members()
            .iter()
            .map(|f| monomial_of_map(&ring, f))
            .collect::<Result<Vec<Monomial>>>()?;
        Ok(MonomialIdeal::new(nv, gens))
    };
    let j = lift(&split.first)?;
    let k = lift(&split.second)?;
    let jk = j.intersect(&k);
    let x = Monomial::var(nv, ring.var(0, split.a1).expect("a_1 in A_1"));
    if jk != k.scale(&x) {
        return Err(Error::verification("J ∩ K differs from X_{p1,a1} K"));
    }
    if j.add(&k) != l {
        return Err(Error::verification("J + K differs from L"));
    }
    let betti_l = koszul_betti(&l, field, guards)?;
    let betti_j = koszul_betti(&j, field, guards)?;
    let betti_k = koszul_betti(&k, field, guards)?;
    let betti_jk = koszul_betti(&jk, field, guards)?;
    let (gl, gj, gk, gjk) = (betti_l.graded(), betti_j.graded(), betti_k.graded(), betti_jk.graded());
    let mut keys: Vec<(usize, u32)> = gl.keys().chain(gj.keys()).chain(gk.keys()).copied().collect();
    keys.extend(gjk.keys().map(|(i, d)| (i + 1, *d)));
    keys.sort_unstable();
    keys.dedup();
    for (i, d) in keys {
        let get = |m: &std::collections::BTreeMap<(usize, u32), usize>, i: usize| m.get(&(i, d)).copied().unwrap_or(0);
        let rhs = get(&gj, i) + get(&gk, i) + if i > 0 { get(&gjk, i - 1) } else { 0 };
        if get(&gl, i) != rhs {
            return Err(Error::verification(format!(
                "Betti additivity fails at (i, j) = ({i}, {d}): {} != {rhs}",
                get(&gl, i)
            )));
        }
    }
    Ok(Some(SplitReport {
        a1: split.a1,
        betti_l,
        betti_j,
        betti_k,
        betti_jk,
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hom::HomSpace;
    use crate::poset::Poset;

    #[test]
    fn two_variables() {
        let g = Guards::default();
        let s = HomSpace::new(Poset::chain(1), AlphabetMap::uniform(1, 2)).unwrap();
        let a = PosetIdeal::full(s.clone(), &g).unwrap();
        let rep = verify_split_additivity(&a, Field::Rational, &g).unwrap().unwrap();
        assert_eq!(rep.a1, 1);
        assert_eq!(rep.betti_jk.totals(), vec![1]);
        assert_eq!(rep.betti_l.graded().get(&(1, 2)), Some(&1));

        let single = PosetIdeal::explicit(s, vec![IsotoneMap::new(vec![1])]).unwrap();
        assert!(betti_split(&single).unwrap().is_none());
    }

    #[test]
    fn needs_two_letters() {
        let g = Guards::default();
        let s = HomSpace::new(Poset::chain(1), AlphabetMap::uniform(1, 1)).unwrap();
        let a = PosetIdeal::full(s, &g).unwrap();
        assert!(betti_split(&a).is_err());
    }
}
