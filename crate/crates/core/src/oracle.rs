//! Independent Betti number computations: Taylor strands and upper Koszul
//! simplicial complexes. Neither uses the explicit resolution.

use std::collections::{HashMap, HashSet};

use rayon::prelude::*;

use crate::betti::BettiTable;
use crate::error::Result;
use crate::guards::Guards;
use crate::homology::{face_of, reduced_homology, Face};
use crate::ideal::MonomialIdeal;
use crate::linalg::{Field, SparseMatrix};
use crate::monomial::Monomial;

/// Closure of `base` under least common multiples, sorted.
pub fn lcm_closure(base: &[Monomial], guards: &Guards) -> Result<Vec<Monomial>> {
    let mut all: Vec<Monomial> = Vec::new();
    let mut seen: HashSet<Monomial> = HashSet::new();
    for g in base {
        let mut fresh = Vec::new();
        if !seen.contains(g) {
            fresh.push(g.clone());
        }
        for c in &all {
            let l = c.lcm(g);
            if !seen.contains(&l) {
                fresh.push(l);
            }
        }
        for f in fresh {
            if seen.insert(f.clone()) {
                all.push(f);
            }
        }
        guards.check("lcm-lattice", all.len())?;
    }
    all.sort();
    Ok(all)
}

/// Betti numbers from the Taylor complex, strand by strand: at `b`, subsets
/// `S` of `G(I)` with `lcm(S) = b`, differential terms kept only when removing
/// an element leaves the lcm unchanged.
pub fn taylor_betti(ideal: &MonomialIdeal, field: Field, guards: &Guards) -> Result<BettiTable> {
    let gens = ideal.gens();
    guards.check("taylor-generators", gens.len())?;
    let mut groups: HashMap<Monomial, Vec<u32>> = HashMap::new();
    fn walk(gens: &[Monomial], start: usize, mask: u32, lcm: &Monomial, groups: &mut HashMap<Monomial, Vec<u32>>) {
        for i in start..gens.len() {
            let l = lcm.lcm(&gens[i]);
            let m = mask | 1 << i;
            groups.entry(l.clone()).or_default().push(m);
            walk(gens, i + 1, m, &l, groups);
        }
    }
    walk(gens, 0, 0, &Monomial::one(ideal.nvars()), &mut groups);
    let mut keys: Vec<Monomial> = groups.keys().cloned().collect();
    keys.sort();
    let strands: Vec<Vec<(usize, usize)>> = keys.par_iter().map(|b| taylor_strand(&groups[b], field)).collect();
    let mut table = BettiTable::new();
    for (b, s) in keys.into_iter().zip(strands) {
        for (i, v) in s {
            table.add(i, b.clone(), v);
        }
    }
    Ok(table)
}

fn taylor_strand(subsets: &[u32], field: Field) -> Vec<(usize, usize)> {
    let top = subsets.iter().map(|s| s.count_ones() as usize).max().unwrap_or(0);
    let mut by_size: Vec<Vec<u32>> = vec![Vec::new(); top + 2];
    for &s in subsets {
        by_size[s.count_ones() as usize].push(s);
    }
    for v in &mut by_size {
        v.sort_unstable();
    }
    let index: HashMap<u32, usize> = by_size
        .iter()
        .flat_map(|v| v.iter().enumerate().map(|(i, s)| (*s, i)))
        .collect();
    // rank[j]: map from size j to size j - 1
    let mut rank = vec![0usize; top + 2];
    for j in 2..=top {
        let mut m = SparseMatrix::new(by_size[j - 1].len(), by_size[j].len());
        for (c, &s) in by_size[j].iter().enumerate() {
            let mut pos = 0;
            for e in 0..32 {
                if s >> e & 1 == 1 {
                    let t = s & !(1 << e);
                    if let Some(&r) = index.get(&t).filter(|_| t.count_ones() as usize == j - 1) {
                        m.add(r, c, if pos % 2 == 0 { 1 } else { -1 });
                    }
                    pos += 1;
                }
            }
        }
        rank[j] = m.rank(field);
    }
    (1..=top)
        .map(|j| (j - 1, by_size[j].len() - rank[j] - rank[j + 1]))
        .filter(|e| e.1 > 0)
        .collect()
}

/// Betti numbers via `β_{i,b}(I) = dim H̃_{i-1}(K^b)` with
/// `K^b = {F ⊆ supp b squarefree : b / x^F in I}`, over the lcm lattice of `G(I)`.
pub fn koszul_betti(ideal: &MonomialIdeal, field: Field, guards: &Guards) -> Result<BettiTable> {
    let lattice = lcm_closure(ideal.gens(), guards)?;
    for b in &lattice {
        guards.check("koszul-support", b.support().count())?;
    }
    let results: Vec<Result<Vec<usize>>> = lattice
        .par_iter()
        .map(|b| {
            let support: Vec<usize> = b.support().collect();
            let facets: Vec<Face> = ideal
                .gens()
                .iter()
                .filter(|g| g.divides(b))
                .map(|g| face_of((0..support.len()).filter(|&j| g.exp(support[j]) < b.exp(support[j]))))
                .collect();
            reduced_homology(&facets, field, guards)
        })
        .collect();
    let mut table = BettiTable::new();
    for (b, h) in lattice.into_iter().zip(results) {
        for (idx, v) in h?.into_iter().enumerate() {
            // idx = d + 1 for H̃_d, and β_{d+1, b} = dim H̃_d
            table.add(idx, b.clone(), v);
        }
    }
    Ok(table)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::Ring;

    fn ideal(nv: usize, gens: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::new(nv, gens.iter().map(|g| Monomial::from_exponents(g.to_vec())).collect())
    }

    fn both(i: &MonomialIdeal) -> BettiTable {
        let g = Guards::default();
        let t = taylor_betti(i, Field::Rational, &g).unwrap();
        let k = koszul_betti(i, Field::Rational, &g).unwrap();
        assert_eq!(t, k, "{:?}", t.diff(&k));
        t
    }

    #[test]
    fn koszul_pair() {
        let t = both(&ideal(2, &[&[1, 0], &[0, 1]]));
        assert_eq!(t.get(0, &Monomial::from_exponents(vec![1, 0])), 1);
        assert_eq!(t.get(0, &Monomial::from_exponents(vec![0, 1])), 1);
        assert_eq!(t.get(1, &Monomial::from_exponents(vec![1, 1])), 1);
        assert_eq!(t.totals(), vec![2, 1]);
    }

    #[test]
    fn square_of_maximal_ideal_in_three_variables() {
        let m = ideal(3, &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]);
        assert_eq!(both(&m.power(2)).totals(), vec![6, 8, 3]);
    }

    #[test]
    fn triangle() {
        let t = both(&ideal(3, &[&[1, 1, 0], &[0, 1, 1], &[1, 0, 1]]));
        assert_eq!(t.totals(), vec![3, 2]);
        let r = Ring::named(["x", "y", "z"]);
        assert_eq!(t.to_json(&r).as_array().unwrap().len(), 4);
    }

    #[test]
    fn fields_agree_on_small_examples() {
        let g = Guards::default();
        let i = ideal(4, &[&[1, 1, 0, 0], &[0, 1, 1, 0], &[0, 0, 1, 1], &[1, 0, 0, 1]]);
        let a = taylor_betti(&i, Field::Rational, &g).unwrap();
        let b = taylor_betti(&i, Field::Prime(32003), &g).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.totals(), vec![4, 4, 1]);
    }

    #[test]
    fn lcm_closure_of_three_variables() {
        let i = ideal(3, &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]);
        assert_eq!(lcm_closure(i.gens(), &Guards::default()).unwrap().len(), 7);
    }

    #[test]
    fn taylor_guard() {
        let g = Guards::default().with("taylor-generators", 2).unwrap();
        let i = ideal(3, &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]);
        assert!(taylor_betti(&i, Field::Rational, &g).unwrap_err().is_guard());
    }
}
