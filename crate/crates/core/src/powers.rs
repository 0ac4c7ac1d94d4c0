//! Bounded powers `L(𝔄; k)`, the lift to `(P^k, A^k, 𝔄^k)`, and specialization
//! back along the variable differences `X_{i,a}^{(s)} - X_{i,a}^{(s+1)}`.

use std::collections::{BTreeSet, HashMap, HashSet};

use serde::Serialize;

use crate::betti::BettiTable;
use crate::error::{Error, Result};
use crate::guards::Guards;
use crate::hom::{AlphabetMap, HomSpace, IsotoneMap, PosetIdeal};
use crate::ideal::MonomialIdeal;
use crate::letterplace::{ideal_of, monomial_of_map};
use crate::linalg::Field;
use crate::monomial::Monomial;
use crate::oracle::{koszul_betti, taylor_betti};
use crate::poly::Poly;
use crate::poset::ProductPoset;
use crate::resolution::{build_resolution, verify_complex, verify_exact, Entry, ResolutionComplex};
use crate::ring::Ring;

/// A sorted multiset over `[n]`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Multiset(Vec<u32>);

impl Multiset {
    pub fn new(mut elems: Vec<u32>) -> Multiset {
        elems.sort_unstable();
        Multiset(elems)
    }

    pub fn elems(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `N_l`: the `l`-th smallest element, or `n` beyond the size. `l` starts at 1.
    pub fn n_ell(&self, ell: usize, n: u32) -> u32 {
        assert!(ell >= 1, "N_l is indexed from 1");
        self.0.get(ell - 1).copied().unwrap_or(n)
    }

    /// All sub-multisets of `{[n]}_k`.
    pub fn all_within(n: u32, k: u32) -> Vec<Multiset> {
        let mut out = Vec::new();
        let mut counts = vec![0u32; n as usize];
        loop {
            let elems = counts
                .iter()
                .enumerate()
                .flat_map(|(a, &c)| std::iter::repeat_n(a as u32 + 1, c as usize))
                .collect();
            out.push(Multiset(elems));
            let mut i = 0;
            loop {
                if i == counts.len() {
                    return out;
                }
                if counts[i] < k {
                    counts[i] += 1;
                    break;
                }
                counts[i] = 0;
                i += 1;
            }
        }
    }
}

/// Checks `N_l(A) <= N_l(B)` for `l = 1..|A|`, given `phi[i]`, the position in
/// `b` of the image of `a[i]`. Errors if `phi` is not a dominating bijection.
pub fn check_n_monotone(a: &Multiset, b: &Multiset, phi: &[usize], n: u32) -> Result<bool> {
    if a.len() != b.len() || phi.len() != a.len() {
        return Err(Error::invalid("phi must be a bijection between equal-size multisets"));
    }
    let mut seen = vec![false; b.len()];
    for (i, &j) in phi.iter().enumerate() {
        if j >= b.len() || std::mem::replace(&mut seen[j], true) {
            return Err(Error::invalid("phi is not bijective"));
        }
        if a.0[i] > b.0[j] {
            return Err(Error::invalid(format!("phi is not dominating at position {i}")));
        }
    }
    Ok((1..=a.len()).all(|l| a.n_ell(l, n) <= b.n_ell(l, n)))
}

/// Outcome of the exhaustive check of the `N_l` monotonicity lemma.
#[derive(Clone, Debug, Serialize)]
pub struct NLemmaReport {
    pub n: u32,
    pub k: u32,
    pub multisets: usize,
    pub equal_size_pairs: usize,
    /// Pairs admitting a dominating bijection, found by bipartite matching.
    pub dominated_pairs: usize,
    /// Individual bijections run through [`check_n_monotone`].
    pub bijections_checked: usize,
    pub counterexample: Option<(Multiset, Multiset)>,
    /// This is a finite machine check, not a proof.
    pub note: &'static str,
}

fn dominating_matching(a: &Multiset, b: &Multiset) -> Option<Vec<usize>> {
    fn augment(i: usize, a: &[u32], b: &[u32], seen: &mut [bool], owner: &mut [Option<usize>]) -> bool {
        for j in 0..b.len() {
            if a[i] <= b[j] && !seen[j] {
                seen[j] = true;
                if owner[j].is_none_or(|o| augment(o, a, b, seen, owner)) {
                    owner[j] = Some(i);
                    return true;
                }
            }
        }
        false
    }
    let mut owner = vec![None; b.len()];
    for i in 0..a.len() {
        let mut seen = vec![false; b.len()];
        if !augment(i, &a.0, &b.0, &mut seen, &mut owner) {
            return None;
        }
    }
    let mut phi = vec![0; a.len()];
    for (j, o) in owner.iter().enumerate() {
        phi[o.expect("perfect matching")] = j;
    }
    Some(phi)
}

fn for_each_permutation(n: usize, f: &mut dyn FnMut(&[usize])) {
    fn go(k: usize, p: &mut Vec<usize>, f: &mut dyn FnMut(&[usize])) {
        if k == p.len() {
            f(p);
            return;
        }
        for i in k..p.len() {
            p.swap(k, i);
            go(k + 1, p, f);
            p.swap(k, i);
        }
    }
    go(0, &mut (0..n).collect(), f);
}

/// Exhaustive check over all pairs of equal-size sub-multisets of `{[n]}_k`.
/// Every bijection is enumerated when the size is at most `full_enumeration`.
pub fn check_n_lemma(n: u32, k: u32, full_enumeration: usize) -> Result<NLemmaReport> {
    let all = Multiset::all_within(n, k);
    let mut report = NLemmaReport {
        n,
        k,
        multisets: all.len(),
        equal_size_pairs: 0,
        dominated_pairs: 0,
        bijections_checked: 0,
        counterexample: None,
        note: "exhaustive at this size; machine-checked, not proved",
    };
    for a in &all {
        for b in all.iter().filter(|b| b.len() == a.len()) {
            report.equal_size_pairs += 1;
            let Some(phi) = dominating_matching(a, b) else { continue };
            report.dominated_pairs += 1;
            let mut ok = check_n_monotone(a, b, &phi, n)?;
            report.bijections_checked += 1;
            if a.len() <= full_enumeration {
                for_each_permutation(a.len(), &mut |p| {
                    if p.iter().enumerate().all(|(i, &j)| a.0[i] <= b.0[j]) {
                        report.bijections_checked += 1;
                        ok &= check_n_monotone(a, b, p, n).expect("dominating bijection");
                    }
                });
            }
            if !ok && report.counterexample.is_none() {
                report.counterexample = Some((a.clone(), b.clone()));
            }
        }
    }
    Ok(report)
}

/// Weakly increasing chains `f_1 <= ... <= f_k` in `𝔄`, as member indices.
pub fn chains(ideal: &PosetIdeal, k: usize, guards: &Guards) -> Result<Vec<Vec<usize>>> {
    let members = ideal.members();
    let ups: Vec<Vec<usize>> = members
        .iter()
        .map(|f| (0..members.len()).filter(|&j| f.leq(&members[j])).collect())
        .collect();
    let limit = guards.limit("chains");
    let mut out = Vec::new();
    let mut stack: Vec<usize> = Vec::with_capacity(k);
    fn go(ups: &[Vec<usize>], k: usize, stack: &mut Vec<usize>, out: &mut Vec<Vec<usize>>, limit: usize) -> Result<()> {
        if stack.len() == k {
            if out.len() >= limit {
                return Err(Error::Guard {
                    name: "chains",
                    limit,
                    value: out.len() + 1,
                });
            }
            out.push(stack.clone());
            return Ok(());
        }
        let candidates = match stack.last() {
            Some(&i) => ups[i].clone(),
            None => (0..ups.len()).collect(),
        };
        for j in candidates {
            stack.push(j);
            go(ups, k, stack, out, limit)?;
            stack.pop();
        }
        Ok(())
    }
    if k == 0 {
        return Err(Error::invalid("power exponent must be positive"));
    }
    go(&ups, k, &mut stack, &mut out, limit)?;
    Ok(out)
}

/// `L(𝔄; k) = (U_{f_1} ... U_{f_k} : f_1 <= ... <= f_k in 𝔄)`.
pub fn bounded_power(ideal: &PosetIdeal, k: usize, guards: &Guards) -> Result<MonomialIdeal> {
    let (ring, base) = ideal_of(ideal);
    let units: Vec<Monomial> = ideal
        .members()
        .iter()
        .map(|f| monomial_of_map(&ring, f))
        .collect::<Result<_>>()?;
    let gens = chains(ideal, k, guards)?
        .into_iter()
        .map(|c| c.iter().fold(Monomial::one(base.nvars()), |acc, &i| acc.mul(&units[i])))
        .collect();
    Ok(MonomialIdeal::new(ring.nvars(), gens))
}

/// The data of the lift `(P^k, A^k, 𝔄^k)` over the ring `T`.
#[derive(Clone, Debug)]
pub struct PowerContext {
    base: PosetIdeal,
    k: usize,
    product: ProductPoset,
    lifted: PosetIdeal,
    base_ring: Ring,
    ring: Ring,
}

impl PowerContext {
    pub fn base(&self) -> &PosetIdeal {
        &self.base
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn product(&self) -> &ProductPoset {
        &self.product
    }

    /// `𝔄^k` inside `Hom(P^k, A^k)`.
    pub fn lifted(&self) -> &PosetIdeal {
        &self.lifted
    }

    /// `R`, the ring of the base ideal.
    pub fn base_ring(&self) -> &Ring {
        &self.base_ring
    }

    /// `T`, with variables `X_{i,a}^{(s)}`.
    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    /// `X_{i,a}^{(s)} -> X_{i,a}` on variable indices.
    pub fn substitution(&self, v: usize) -> usize {
        self.ring
            .forget_copy(v, &self.base_ring)
            .expect("every variable of T is a copy of a variable of R")
    }

    /// The pairs `(X_{i,a}^{(s)}, X_{i,a}^{(s+1)})` whose differences form the regular sequence.
    pub fn differences(&self) -> Vec<(usize, usize)> {
        let k = self.k;
        let mut out = Vec::new();
        for i in 0..self.base.m() {
            for &a in self.base.alphabet().set(i) {
                for s in 0..k - 1 {
                    let lo = self.ring.var(self.product.index(i, s), a).expect("copy variable");
                    let hi = self.ring.var(self.product.index(i, s + 1), a).expect("copy variable");
                    out.push((lo, hi));
                }
            }
        }
        out
    }

    /// `L(P^k, A^k; 𝔄^k)` over `T`.
    pub fn lifted_ideal(&self) -> MonomialIdeal {
        let gens = self
            .lifted
            .members()
            .iter()
            .map(|f| monomial_of_map(&self.ring, f).expect("lifted maps use the lifted alphabet"))
            .collect();
        MonomialIdeal::new(self.ring.nvars(), gens)
    }

    /// Substitutes `X_{i,a}^{(s)} -> X_{i,a}` and re-minimalizes.
    pub fn specialize_ideal(&self, ideal: &MonomialIdeal) -> MonomialIdeal {
        ideal.substitute(self.base_ring.nvars(), |v| self.substitution(v))
    }

    /// Substitutes in every multidegree and entry while keeping every basis
    /// element, then re-verifies the complex property.
    pub fn specialize_complex(&self, rz: &ResolutionComplex) -> Result<ResolutionComplex> {
        if rz.ring() != &self.ring {
            return Err(Error::ContextMismatch("complex does not live over T".into()));
        }
        let nv = self.base_ring.nvars();
        let symbols = (0..rz.len()).map(|t| rz.symbols(t).to_vec()).collect();
        let degrees = (0..rz.len())
            .map(|t| {
                rz.degrees(t)
                    .iter()
                    .map(|d| d.substitute(nv, |v| self.substitution(v)))
                    .collect()
            })
            .collect();
        let mut diffs = vec![Vec::new()];
        for t in 1..rz.len() {
            let mut level: Vec<Entry> = rz
                .differential(t)
                .iter()
                .map(|e| Entry {
                    var: self.substitution(e.var),
                    ..*e
                })
                .collect();
            level.sort();
            diffs.push(level);
        }
        let out = ResolutionComplex::from_parts(self.base_ring.clone(), symbols, degrees, diffs);
        verify_complex(&out)?;
        Ok(out)
    }

    /// The resolution of the lifted ideal from the explicit construction, over `T`.
    pub fn lifted_resolution(&self, guards: &Guards) -> Result<ResolutionComplex> {
        Ok(build_resolution(&self.lifted, guards)?.with_ring(self.ring.clone()))
    }
}

/// Builds the lift and asserts the bijection between `𝔄^k` and the weakly
/// increasing `k`-chains of `𝔄` given by `f(p_{i,j}) = f_j(p_i)`.
pub fn lift(ideal: &PosetIdeal, k: usize, guards: &Guards) -> Result<PowerContext> {
    let product = ideal.poset().product_with_chain(k, guards)?;
    let m = ideal.m();
    let sets: Vec<Vec<u32>> = (0..m * k).map(|l| ideal.alphabet().set(l / k).to_vec()).collect();
    let alphabet = AlphabetMap::new(ideal.alphabet().n(), sets)?;
    let space = HomSpace::new(product.poset().clone(), alphabet)?;
    let bar = |g: &IsotoneMap| IsotoneMap::new((0..m * k).map(|l| g.get(product.split(l).0)).collect());
    let gens: Vec<IsotoneMap> = ideal.maximal_elements().iter().map(bar).collect();
    let lifted = PosetIdeal::from_generators(space, &gens, guards)?;

    let members = ideal.members();
    let from_chains: BTreeSet<IsotoneMap> = chains(ideal, k, guards)?
        .iter()
        .map(|c| {
            IsotoneMap::new(
                (0..m * k)
                    .map(|l| {
                        let (i, j) = product.split(l);
                        members[c[j]].get(i)
                    })
                    .collect(),
            )
        })
        .collect();
    for f in lifted.members() {
        let parts: Vec<IsotoneMap> = (0..k)
            .map(|j| IsotoneMap::new((0..m).map(|i| f.get(product.index(i, j))).collect()))
            .collect();
        let ok = parts.iter().all(|p| ideal.contains(p)) && parts.windows(2).all(|w| w[0].leq(&w[1]));
        if !ok {
            return Err(Error::verification(format!("lifted map {f} is not a chain of members")));
        }
    }
    let lifted_set: BTreeSet<IsotoneMap> = lifted.members().iter().cloned().collect();
    if lifted_set != from_chains {
        return Err(Error::verification(
            "lifted ideal and chains of members are not in bijection",
        ));
    }
    Ok(PowerContext {
        base: ideal.clone(),
        k,
        product,
        lifted,
        base_ring: Ring::letterplace(ideal.alphabet()),
        ring: Ring::power(ideal.alphabet(), k),
    })
}

/// The five equivalent conditions for `L(𝔄; k) = L(𝔄)^k`.
#[derive(Clone, Debug, Serialize)]
pub struct EquivalenceReport {
    pub k: usize,
    /// `L(𝔄; k) = L(𝔄)^k` at the given `k`.
    pub equal_at_k: bool,
    pub sublattice: bool,
    pub unique_maximal: bool,
    /// `𝔄 = Hom(P, B_1, ..., B_m)` for the achieved letters `B_i`.
    pub hom_of_subsets: bool,
    /// Equality at both `k` and `k + 1`.
    pub equal_at_k_and_next: bool,
    pub b_sets: Vec<Vec<u32>>,
}

impl EquivalenceReport {
    pub fn all_agree(&self) -> bool {
        let v = self.equal_at_k;
        [
            self.sublattice,
            self.unique_maximal,
            self.hom_of_subsets,
            self.equal_at_k_and_next,
        ]
        .iter()
        .all(|&x| x == v)
    }
}

pub fn equivalence_report(ideal: &PosetIdeal, k: usize, guards: &Guards) -> Result<EquivalenceReport> {
    if k < 2 {
        return Err(Error::invalid("the comparison needs k >= 2"));
    }
    let (_, base) = ideal_of(ideal);
    let equal = |k: usize| -> Result<bool> { Ok(bounded_power(ideal, k, guards)? == base.power(k)) };
    let props = ideal.properties(guards)?;
    let b_sets = ideal.achieved_letters();
    let sub = ideal
        .space()
        .with_alphabet(AlphabetMap::new(ideal.alphabet().n(), b_sets.clone())?)?;
    let hom_of_subsets = sub.enumerate(guards)? == ideal.members();
    let equal_at_k = equal(k)?;
    let report = EquivalenceReport {
        k,
        equal_at_k,
        sublattice: props.is_sublattice,
        unique_maximal: props.unique_maximal.is_some(),
        hom_of_subsets,
        equal_at_k_and_next: equal_at_k && equal(k + 1)?,
        b_sets,
    };
    if !report.all_agree() {
        return Err(Error::verification(format!(
            "equivalent conditions disagree: {report:?}"
        )));
    }
    Ok(report)
}

/// Hilbert-series certificate that the variable differences are regular.
#[derive(Clone, Debug, Serialize)]
pub struct RegularityCertificate {
    pub k: usize,
    /// Number of differences, `#vars(T) - #vars(R)`.
    pub c: usize,
    /// K-polynomial of `T / L(P^k, A^k; 𝔄^k)`.
    pub numerator_t: Poly,
    /// K-polynomial of `R / L(𝔄; k)`.
    pub numerator_r: Poly,
    /// `inclusion-exclusion` or `splitting`.
    pub method: &'static str,
    /// The substitution maps the lifted ideal onto `L(𝔄; k)`.
    pub specializes_to_bounded_power: bool,
    pub passed: bool,
}

fn numerator(ideal: &MonomialIdeal, guards: &Guards) -> Result<(Poly, &'static str)> {
    if ideal.len() <= guards.limit("hilbert-generators") {
        let a = ideal.hilbert_numerator(guards)?;
        let b = ideal.hilbert_numerator_splitting(guards)?;
        if a != b {
            return Err(Error::verification(format!("Hilbert numerators disagree: {a} vs {b}")));
        }
        Ok((a, "inclusion-exclusion"))
    } else {
        Ok((ideal.hilbert_numerator_splitting(guards)?, "splitting"))
    }
}

/// A sequence of `c` linear forms is regular on `T/L` with quotient `R/L'`
/// exactly when `H_{R/L'} = (1-t)^c H_{T/L}`; with `#vars(T) = #vars(R) + c`
/// this says the two K-polynomials coincide.
pub fn regular_sequence_certificate(ctx: &PowerContext, guards: &Guards) -> Result<RegularityCertificate> {
    let lifted = ctx.lifted_ideal();
    let bounded = bounded_power(&ctx.base, ctx.k, guards)?;
    let (numerator_t, m1) = numerator(&lifted, guards)?;
    let (numerator_r, m2) = numerator(&bounded, guards)?;
    let c = ctx.ring.nvars() - ctx.base_ring.nvars();
    debug_assert_eq!(c, ctx.differences().len());
    let specializes = ctx.specialize_ideal(&lifted) == bounded;
    let method = if m1 == "splitting" || m2 == "splitting" {
        "splitting"
    } else {
        m1
    };
    Ok(RegularityCertificate {
        k: ctx.k,
        c,
        passed: numerator_t == numerator_r && specializes,
        numerator_t,
        numerator_r,
        method,
        specializes_to_bounded_power: specializes,
    })
}

/// Certified resolution of `L(P, A)^k` obtained by specializing the lifted one.
#[derive(Clone, Debug, Serialize)]
pub struct PowerResolutionReport {
    pub k: usize,
    pub ranks: Vec<usize>,
    pub target: MonomialIdeal,
    pub strands_checked: usize,
    pub oracle: &'static str,
    pub betti_mismatches: usize,
    #[serde(skip)]
    pub resolution: ResolutionComplex,
}

/// For `𝔄 = Hom(P, A)`: resolve the lift, specialize, and certify the result
/// resolves `L(P, A)^k` minimally.
pub fn verify_power_resolution(
    space: &HomSpace,
    k: usize,
    field: Field,
    guards: &Guards,
) -> Result<PowerResolutionReport> {
    let base = PosetIdeal::full(space.clone(), guards)?;
    let target = ideal_of(&base).1.power(k);
    guards.check("power-generators", target.len())?;
    let ctx = lift(&base, k, guards)?;
    let rz = ctx.specialize_complex(&ctx.lifted_resolution(guards)?)?;
    let aug = rz.augmentation();
    if aug.len() != target.len() || MonomialIdeal::new(target.nvars(), aug.to_vec()) != target {
        return Err(Error::verification("specialized generators differ from L^k"));
    }
    let exact = verify_exact(&rz, &target, field, guards)?;
    let (table, oracle): (BettiTable, _) = match koszul_betti(&target, field, guards) {
        Ok(t) => (t, "koszul"),
        Err(e) if e.is_guard() => (taylor_betti(&target, field, guards)?, "taylor"),
        Err(e) => return Err(e),
    };
    let mismatches = rz.betti_table().diff(&table).len();
    if mismatches > 0 {
        return Err(Error::verification(format!(
            "specialized resolution disagrees with the {oracle} oracle in {mismatches} places"
        )));
    }
    Ok(PowerResolutionReport {
        k,
        ranks: rz.ranks(),
        target,
        strands_checked: exact.strands.len(),
        oracle,
        betti_mismatches: mismatches,
        resolution: rz,
    })
}

/// Whether the lifted ideal is a relabelling of the polarization of `L(𝔄; k)`.
#[derive(Clone, Debug, Serialize)]
pub struct PolarizationReport {
    pub nvars: usize,
    pub lifted: Vec<String>,
    pub polarization: Vec<String>,
    /// `witness[v]`: polarization variable receiving variable `v` of `T`.
    pub witness: Option<Vec<usize>>,
    /// Search nodes visited; the search is exhaustive when no witness is given.
    pub nodes: usize,
}

fn profiles(ideal: &MonomialIdeal) -> Vec<Vec<u32>> {
    let mut out = vec![Vec::new(); ideal.nvars()];
    for g in ideal.gens() {
        for v in g.support() {
            out[v].push(g.degree());
        }
    }
    for p in &mut out {
        p.sort_unstable();
    }
    out
}

pub fn polarization_mismatch(ctx: &PowerContext, guards: &Guards) -> Result<PolarizationReport> {
    let lifted = ctx.lifted_ideal();
    let bounded = bounded_power(&ctx.base, ctx.k, guards)?;
    let (pring, polar) = bounded.polarize(&ctx.base_ring);
    let nv = lifted.nvars();
    if polar.nvars() != nv {
        return Err(Error::invalid(format!(
            "rings differ in size: {nv} lifted variables, {} polarization variables",
            polar.nvars()
        )));
    }
    guards.check("bijection-vars", nv)?;
    let (pl, pp) = (profiles(&lifted), profiles(&polar));
    let candidates: Vec<Vec<usize>> = (0..nv).map(|v| (0..nv).filter(|&w| pl[v] == pp[w]).collect()).collect();
    let targets: HashSet<Vec<usize>> = polar.gens().iter().map(|g| g.support().collect()).collect();
    // generators of the lifted ideal, checked once their last variable is placed
    let mut by_last: HashMap<usize, Vec<Vec<usize>>> = HashMap::new();
    for g in lifted.gens() {
        let s: Vec<usize> = g.support().collect();
        by_last
            .entry(*s.iter().max().expect("nonconstant generator"))
            .or_default()
            .push(s);
    }
    let mut assign = vec![usize::MAX; nv];
    let mut used = vec![false; nv];
    let mut nodes = 0usize;
    #[allow(clippy::too_many_arguments)]
    fn search(
        v: usize,
        candidates: &[Vec<usize>],
        by_last: &HashMap<usize, Vec<Vec<usize>>>,
        targets: &HashSet<Vec<usize>>,
        assign: &mut Vec<usize>,
        used: &mut Vec<bool>,
        nodes: &mut usize,
    ) -> bool {
        *nodes += 1;
        if v == assign.len() {
            return true;
        }
        for &w in &candidates[v] {
            if used[w] {
                continue;
            }
            assign[v] = w;
            used[w] = true;
            let fits = by_last.get(&v).is_none_or(|gs| {
                gs.iter().all(|s| {
                    let mut img: Vec<usize> = s.iter().map(|&x| assign[x]).collect();
                    img.sort_unstable();
                    targets.contains(&img)
                })
            });
            if fits && search(v + 1, candidates, by_last, targets, assign, used, nodes) {
                return true;
            }
            used[w] = false;
            assign[v] = usize::MAX;
        }
        false
    }
    let found =
        lifted.len() == polar.len() && search(0, &candidates, &by_last, &targets, &mut assign, &mut used, &mut nodes);
    Ok(PolarizationReport {
        nvars: nv,
        lifted: lifted.gens().iter().map(|g| g.display(&ctx.ring)).collect(),
        polarization: polar.gens().iter().map(|g| g.display(&pring)).collect(),
        witness: found.then_some(assign),
        nodes,
    })
}
