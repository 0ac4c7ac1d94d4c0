//! Isotone maps `Hom(P, A)`, their lattice structure, and poset ideals inside them.

use std::collections::HashSet;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::guards::Guards;
use crate::poset::Poset;

/// The assignment `p_i -> A_i`, each `A_i` a non-empty subset of `[n]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct AlphabetMap {
    n: u32,
    sets: Vec<Vec<u32>>,
}

impl AlphabetMap {
    pub fn new(n: u32, sets: Vec<Vec<u32>>) -> Result<AlphabetMap> {
        let mut clean = Vec::with_capacity(sets.len());
        for (i, mut s) in sets.into_iter().enumerate() {
            s.sort_unstable();
            s.dedup();
            if s.is_empty() {
                return Err(Error::invalid(format!("alphabet of p{} is empty", i + 1)));
            }
            if s[0] == 0 || *s.last().unwrap() > n {
                return Err(Error::invalid(format!(
                    "alphabet of p{} is not a subset of [{n}]",
                    i + 1
                )));
            }
            clean.push(s);
        }
        Ok(AlphabetMap { n, sets: clean })
    }

    /// Every `A_i = [n]`.
    pub fn uniform(m: usize, n: u32) -> AlphabetMap {
        AlphabetMap {
            n,
            sets: vec![(1..=n).collect(); m],
        }
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    pub fn sets(&self) -> &[Vec<u32>] {
        &self.sets
    }

    pub fn set(&self, i: usize) -> &[u32] {
        &self.sets[i]
    }

    pub fn contains(&self, i: usize, a: u32) -> bool {
        self.sets[i].binary_search(&a).is_ok()
    }

    /// `sum_i |A_i|`, the size of the associated co-letterplace ideal.
    pub fn size(&self) -> usize {
        self.sets.iter().map(Vec::len).sum()
    }
}

/// A map `f: P -> [n]` written as the vector `(f(p_1), ..., f(p_m))`.
///
/// The derived `Ord` is the lexicographic order `<=_l`: `f` comes first when
/// the first nonzero entry of `f - g` is negative.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct IsotoneMap(Vec<u32>);

impl IsotoneMap {
    pub fn new(values: Vec<u32>) -> IsotoneMap {
        IsotoneMap(values)
    }

    pub fn values(&self) -> &[u32] {
        &self.0
    }

    pub fn get(&self, i: usize) -> u32 {
        self.0[i]
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Componentwise order.
    pub fn leq(&self, other: &IsotoneMap) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn join(&self, other: &IsotoneMap) -> IsotoneMap {
        IsotoneMap(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn meet(&self, other: &IsotoneMap) -> IsotoneMap {
        IsotoneMap(self.0.iter().zip(&other.0).map(|(a, b)| *a.min(b)).collect())
    }
}

impl fmt::Display for IsotoneMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, ")")
    }
}

/// The poset `Hom(P, A)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HomSpace {
    poset: Poset,
    alphabet: AlphabetMap,
}

impl HomSpace {
    pub fn new(poset: Poset, alphabet: AlphabetMap) -> Result<HomSpace> {
        if poset.len() != alphabet.len() {
            return Err(Error::invalid(format!(
                "poset has {} elements but {} alphabets were given",
                poset.len(),
                alphabet.len()
            )));
        }
        Ok(HomSpace { poset, alphabet })
    }

    pub fn poset(&self) -> &Poset {
        &self.poset
    }

    pub fn alphabet(&self) -> &AlphabetMap {
        &self.alphabet
    }

    pub fn m(&self) -> usize {
        self.poset.len()
    }

    pub fn contains(&self, f: &IsotoneMap) -> bool {
        f.len() == self.m()
            && (0..self.m()).all(|i| self.alphabet.contains(i, f.get(i)))
            && (0..self.m()).all(|j| self.poset.below(j).all(|i| f.get(i) <= f.get(j)))
    }

    pub fn check_map(&self, f: &IsotoneMap) -> Result<()> {
        if self.contains(f) {
            Ok(())
        } else {
            Err(Error::invalid(format!("{f} is not an isotone map into the alphabets")))
        }
    }

    /// All isotone maps with `f(p_i) in A_i`, in `<=_l` order.
    pub fn enumerate(&self, guards: &Guards) -> Result<Vec<IsotoneMap>> {
        let limit = guards.limit("hom-maps");
        let mut out = Vec::new();
        let mut current = Vec::with_capacity(self.m());
        self.extend(&mut current, &mut out, limit)?;
        Ok(out)
    }

    fn extend(&self, current: &mut Vec<u32>, out: &mut Vec<IsotoneMap>, limit: usize) -> Result<()> {
        let i = current.len();
        if i == self.m() {
            if out.len() == limit {
                return Err(Error::Guard {
                    name: "hom-maps",
                    limit,
                    value: limit + 1,
                });
            }
            out.push(IsotoneMap(current.clone()));
            return Ok(());
        }
        let floor = self.poset.below(i).map(|j| current[j]).max().unwrap_or(0);
        for &a in self.alphabet.set(i) {
            if a >= floor {
                current.push(a);
                self.extend(current, out, limit)?;
                current.pop();
            }
        }
        Ok(())
    }

    /// The map `p_i -> max A_i`, when it is isotone.
    pub fn top(&self) -> Option<IsotoneMap> {
        let f = IsotoneMap(self.alphabet.sets().iter().map(|s| *s.last().unwrap()).collect());
        self.contains(&f).then_some(f)
    }

    pub fn hom_leq(&self, f: &IsotoneMap, g: &IsotoneMap) -> Result<bool> {
        self.check_map(f)?;
        self.check_map(g)?;
        Ok(f.leq(g))
    }

    pub fn hom_lex_leq(&self, f: &IsotoneMap, g: &IsotoneMap) -> Result<bool> {
        self.check_map(f)?;
        self.check_map(g)?;
        Ok(f <= g)
    }

    pub fn hom_join(&self, f: &IsotoneMap, g: &IsotoneMap) -> Result<IsotoneMap> {
        self.check_map(f)?;
        self.check_map(g)?;
        let h = f.join(g);
        if !self.contains(&h) {
            return Err(Error::verification(format!("join {h} of {f} and {g} is not isotone")));
        }
        Ok(h)
    }

    pub fn hom_meet(&self, f: &IsotoneMap, g: &IsotoneMap) -> Result<IsotoneMap> {
        self.check_map(f)?;
        self.check_map(g)?;
        let h = f.meet(g);
        if !self.contains(&h) {
            return Err(Error::verification(format!("meet {h} of {f} and {g} is not isotone")));
        }
        Ok(h)
    }

    /// Maps obtained from `g` by lowering one coordinate to the next smaller
    /// letter of its alphabet while staying isotone. Every `f < g` in
    /// `Hom(P, A)` is reachable from `g` through a chain of such steps.
    pub fn lower_covers<'a>(&'a self, g: &'a IsotoneMap) -> impl Iterator<Item = IsotoneMap> + 'a {
        (0..self.m()).filter_map(move |i| {
            let set = self.alphabet.set(i);
            let pos = set.binary_search(&g.get(i)).ok()?;
            if pos == 0 {
                return None;
            }
            let a = set[pos - 1];
            if self.poset.below(i).any(|j| g.get(j) > a) {
                return None;
            }
            let mut v = g.0.clone();
            v[i] = a;
            Some(IsotoneMap(v))
        })
    }

    /// The same poset with the alphabets replaced.
    pub fn with_alphabet(&self, alphabet: AlphabetMap) -> Result<HomSpace> {
        HomSpace::new(self.poset.clone(), alphabet)
    }
}

/// A non-empty downward-closed subset of `Hom(P, A)`, stored explicitly in `<=_l` order.
#[derive(Clone, Debug)]
pub struct PosetIdeal {
    space: HomSpace,
    members: Vec<IsotoneMap>,
    index: HashSet<IsotoneMap>,
}

impl PartialEq for PosetIdeal {
    fn eq(&self, other: &Self) -> bool {
        self.space == other.space && self.members == other.members
    }
}

impl Eq for PosetIdeal {}

/// Lattice-theoretic data of a poset ideal.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdealProperties {
    pub is_sublattice: bool,
    pub unique_maximal: Option<IsotoneMap>,
    /// `B_i = {a in A_i : a <= f(p_i)}` for the unique maximal `f`.
    pub b_sets: Option<Vec<Vec<u32>>>,
}

impl PosetIdeal {
    /// All of `Hom(P, A)`; fails when that set is empty.
    pub fn full(space: HomSpace, guards: &Guards) -> Result<PosetIdeal> {
        let members = space.enumerate(guards)?;
        Self::from_sorted(space, members)
    }

    /// The downward closure of `gens` inside `Hom(P, A)`.
    pub fn from_generators(space: HomSpace, gens: &[IsotoneMap], guards: &Guards) -> Result<PosetIdeal> {
        if gens.is_empty() {
            return Err(Error::invalid("empty generator list"));
        }
        for g in gens {
            space.check_map(g)?;
        }
        let members = space
            .enumerate(guards)?
            .into_iter()
            .filter(|f| gens.iter().any(|g| f.leq(g)))
            .collect();
        Self::from_sorted(space, members)
    }

    /// Validates an explicit member list.
    pub fn explicit(space: HomSpace, maps: Vec<IsotoneMap>) -> Result<PosetIdeal> {
        let mut members = maps;
        members.sort();
        members.dedup();
        for f in &members {
            space.check_map(f)?;
        }
        let ideal = Self::from_sorted(space, members)?;
        for g in &ideal.members {
            if let Some(f) = ideal.space.lower_covers(g).find(|f| !ideal.contains(f)) {
                return Err(Error::invalid(format!(
                    "not downward closed: {g} is a member but {f} is not"
                )));
            }
        }
        Ok(ideal)
    }

    fn from_sorted(space: HomSpace, members: Vec<IsotoneMap>) -> Result<PosetIdeal> {
        if members.is_empty() {
            return Err(Error::invalid("a poset ideal must be non-empty"));
        }
        let index = members.iter().cloned().collect();
        Ok(PosetIdeal { space, members, index })
    }

    pub fn space(&self) -> &HomSpace {
        &self.space
    }

    pub fn poset(&self) -> &Poset {
        &self.space.poset
    }

    pub fn alphabet(&self) -> &AlphabetMap {
        &self.space.alphabet
    }

    pub fn m(&self) -> usize {
        self.space.m()
    }

    pub fn members(&self) -> &[IsotoneMap] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn contains(&self, f: &IsotoneMap) -> bool {
        self.index.contains(f)
    }

    pub fn contains_values(&self, values: &[u32]) -> bool {
        self.index.contains(&IsotoneMap(values.to_vec()))
    }

    /// `M(A)`, the maximal members, in `<=_l` order.
    pub fn maximal_elements(&self) -> Vec<IsotoneMap> {
        self.members
            .iter()
            .filter(|f| !self.members.iter().any(|g| g != *f && f.leq(g)))
            .cloned()
            .collect()
    }

    /// Meet of two members; asserts the result is again a member.
    pub fn meet(&self, f: &IsotoneMap, g: &IsotoneMap) -> Result<IsotoneMap> {
        if !self.contains(f) || !self.contains(g) {
            return Err(Error::ContextMismatch("meet arguments must be members".into()));
        }
        let h = self.space.hom_meet(f, g)?;
        if !self.contains(&h) {
            return Err(Error::verification(format!("meet {h} left the ideal")));
        }
        Ok(h)
    }

    pub fn is_join_closed(&self) -> bool {
        self.members
            .iter()
            .enumerate()
            .all(|(i, f)| self.members[i + 1..].iter().all(|g| self.contains(&f.join(g))))
    }

    /// Sublattice test, unique maximal element, and the sets `B_i`.
    ///
    /// Asserts meet closure, the equivalence "sublattice <=> unique maximal",
    /// and `A = Hom(P, B_1, ..., B_m)` before returning.
    pub fn properties(&self, guards: &Guards) -> Result<IdealProperties> {
        for (i, f) in self.members.iter().enumerate() {
            for g in &self.members[i + 1..] {
                self.meet(f, g)?;
            }
        }
        let is_sublattice = self.is_join_closed();
        let maximal = self.maximal_elements();
        let unique_maximal = (maximal.len() == 1).then(|| maximal[0].clone());
        if is_sublattice != unique_maximal.is_some() {
            return Err(Error::verification(format!(
                "sublattice = {is_sublattice} but {} maximal elements",
                maximal.len()
            )));
        }
        let b_sets = match &unique_maximal {
            None => None,
            Some(top) => {
                let sets: Vec<Vec<u32>> = (0..self.m())
                    .map(|i| {
                        self.alphabet()
                            .set(i)
                            .iter()
                            .copied()
                            .filter(|&a| a <= top.get(i))
                            .collect()
                    })
                    .collect();
                let sub = self
                    .space
                    .with_alphabet(AlphabetMap::new(self.alphabet().n(), sets.clone())?)?;
                if sub.enumerate(guards)? != self.members {
                    return Err(Error::verification("ideal differs from Hom(P, B_1, ..., B_m)"));
                }
                Some(sets)
            }
        };
        Ok(IdealProperties {
            is_sublattice,
            unique_maximal,
            b_sets,
        })
    }

    /// Letters actually taken at each element: `{f(p_i) : f in A}`.
    pub fn achieved_letters(&self) -> Vec<Vec<u32>> {
        (0..self.m())
            .map(|i| {
                let mut v: Vec<u32> = self.members.iter().map(|f| f.get(i)).collect();
                v.sort_unstable();
                v.dedup();
                v
            })
            .collect()
    }
}
