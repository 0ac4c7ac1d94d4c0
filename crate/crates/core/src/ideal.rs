//! Monomial ideals kept by their minimal generating set.

use std::collections::HashSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::guards::Guards;
use crate::monomial::Monomial;
use crate::poly::Poly;
use crate::ring::Ring;

/// A monomial ideal given by its minimal generators, sorted by degree and then
/// lexicographically with the largest variable first.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct MonomialIdeal {
    nvars: usize,
    gens: Vec<Monomial>,
}

/// A generator `u` whose colon `(G(I) \ {u}) : u` is not generated by variables.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QuasiLinearFailure {
    pub generator: Monomial,
    pub colon: MonomialIdeal,
    /// Minimal colon generators of degree at least two.
    pub non_linear: Vec<Monomial>,
}

/// Two generators for which the weakly polymatroidal exchange fails.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExchangeFailure {
    pub u: Monomial,
    pub v: Monomial,
    /// First variable on which `u` and `v` differ, with `deg u < deg v` there.
    pub q: usize,
}

fn minimalize(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort();
    gens.dedup();
    let mut out: Vec<Monomial> = Vec::with_capacity(gens.len());
    // sorted by degree, so a divisor always comes first
    for g in gens {
        if !out.iter().any(|h| h.divides(&g)) {
            out.push(g);
        }
    }
    out
}

impl MonomialIdeal {
    pub fn new(nvars: usize, gens: Vec<Monomial>) -> MonomialIdeal {
        debug_assert!(gens.iter().all(|g| g.nvars() == nvars));
        MonomialIdeal {
            nvars,
            gens: minimalize(gens),
        }
    }

    pub fn zero(nvars: usize) -> MonomialIdeal {
        MonomialIdeal {
            nvars,
            gens: Vec::new(),
        }
    }

    pub fn unit(nvars: usize) -> MonomialIdeal {
        MonomialIdeal {
            nvars,
            gens: vec![Monomial::one(nvars)],
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn gens(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.iter().any(Monomial::is_one)
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    pub fn is_squarefree(&self) -> bool {
        self.gens.iter().all(Monomial::is_squarefree)
    }

    /// The common degree of all generators, if there is one.
    pub fn equigenerated_degree(&self) -> Option<u32> {
        let d = self.gens.first()?.degree();
        self.gens.iter().all(|g| g.degree() == d).then_some(d)
    }

    /// Every minimal generator is a single variable.
    pub fn is_variable_generated(&self) -> bool {
        self.gens.iter().all(|g| g.as_var().is_some())
    }

    pub fn add(&self, other: &MonomialIdeal) -> MonomialIdeal {
        MonomialIdeal::new(self.nvars, self.gens.iter().chain(&other.gens).cloned().collect())
    }

    pub fn multiply(&self, other: &MonomialIdeal) -> MonomialIdeal {
        let mut gens = Vec::with_capacity(self.len() * other.len());
        for a in &self.gens {
            for b in &other.gens {
                gens.push(a.mul(b));
            }
        }
        MonomialIdeal::new(self.nvars, gens)
    }

    /// `I^k`, with `I^0 = (1)`.
    pub fn power(&self, k: usize) -> MonomialIdeal {
        (0..k).fold(MonomialIdeal::unit(self.nvars), |acc, _| acc.multiply(self))
    }

    /// The product of a monomial and the ideal.
    pub fn scale(&self, u: &Monomial) -> MonomialIdeal {
        MonomialIdeal::new(self.nvars, self.gens.iter().map(|g| g.mul(u)).collect())
    }

    pub fn intersect(&self, other: &MonomialIdeal) -> MonomialIdeal {
        let mut gens = Vec::with_capacity(self.len() * other.len());
        for a in &self.gens {
            for b in &other.gens {
                gens.push(a.lcm(b));
            }
        }
        MonomialIdeal::new(self.nvars, gens)
    }

    /// `(I : u)`, generated by `g / gcd(g, u)`.
    pub fn colon(&self, u: &Monomial) -> MonomialIdeal {
        MonomialIdeal::new(self.nvars, self.gens.iter().map(|g| g.colon(u)).collect())
    }

    /// The ideal generated by all minimal generators except the one at `idx`.
    pub fn without(&self, idx: usize) -> MonomialIdeal {
        let mut gens = self.gens.clone();
        gens.remove(idx);
        MonomialIdeal {
            nvars: self.nvars,
            gens,
        }
    }

    /// Rewrites every generator through a variable map and re-minimalizes.
    pub fn substitute(&self, nvars: usize, map: impl Fn(usize) -> usize) -> MonomialIdeal {
        MonomialIdeal::new(nvars, self.gens.iter().map(|g| g.substitute(nvars, &map)).collect())
    }

    fn require_equigenerated(&self) -> Result<()> {
        if !self.is_zero() && self.equigenerated_degree().is_none() {
            return Err(Error::invalid("ideal is not generated in a single degree"));
        }
        Ok(())
    }

    /// Checks the weakly polymatroidal exchange property against the variable
    /// order of the ring (index 0 largest). Returns the first failing pair.
    pub fn weakly_polymatroidal_failure(&self) -> Result<Option<ExchangeFailure>> {
        self.require_equigenerated()?;
        let set: HashSet<&Monomial> = self.gens.iter().collect();
        for u in &self.gens {
            for v in &self.gens {
                let Some(q) = (0..self.nvars).find(|&q| u.exp(q) != v.exp(q)) else {
                    continue;
                };
                if u.exp(q) > v.exp(q) {
                    continue;
                }
                let xu = u.mul_var(q);
                let ok = (q + 1..self.nvars)
                    .filter_map(|p| xu.div_var(p))
                    .any(|w| set.contains(&w));
                if !ok {
                    return Ok(Some(ExchangeFailure {
                        u: u.clone(),
                        v: v.clone(),
                        q,
                    }));
                }
            }
        }
        Ok(None)
    }

    pub fn is_weakly_polymatroidal(&self) -> Result<bool> {
        Ok(self.weakly_polymatroidal_failure()?.is_none())
    }

    /// All generators `u` whose colon `(G(I) \ {u}) : u` needs a non-variable generator.
    pub fn quasi_linear_failures(&self) -> Result<Vec<QuasiLinearFailure>> {
        self.require_equigenerated()?;
        let mut out = Vec::new();
        for (idx, u) in self.gens.iter().enumerate() {
            let colon = self.without(idx).colon(u);
            let non_linear: Vec<Monomial> = colon.gens.iter().filter(|g| g.as_var().is_none()).cloned().collect();
            if !non_linear.is_empty() {
                out.push(QuasiLinearFailure {
                    generator: u.clone(),
                    colon,
                    non_linear,
                });
            }
        }
        Ok(out)
    }

    pub fn is_quasi_linear(&self) -> Result<bool> {
        Ok(self.quasi_linear_failures()?.is_empty())
    }

    /// The squarefree Alexander dual relative to `vertices`: the minimal
    /// transversals of the generator supports. The zero ideal is dual to `(1)`
    /// and `(1)` to the zero ideal.
    pub fn alexander_dual(&self, vertices: &[usize]) -> Result<MonomialIdeal> {
        if !self.is_squarefree() {
            return Err(Error::invalid("Alexander dual needs a squarefree ideal"));
        }
        let allowed: HashSet<usize> = vertices.iter().copied().collect();
        if let Some(v) = self
            .gens
            .iter()
            .flat_map(|g| g.support())
            .find(|v| !allowed.contains(v))
        {
            return Err(Error::invalid(format!("variable {v} lies outside the vertex set")));
        }
        if self.is_zero() {
            return Ok(MonomialIdeal::unit(self.nvars));
        }
        let mut transversals = vec![Monomial::one(self.nvars)];
        for g in &self.gens {
            let mut next = Vec::new();
            for t in &transversals {
                if g.support().any(|v| t.exp(v) > 0) {
                    next.push(t.clone());
                } else {
                    next.extend(g.support().map(|v| t.mul_var(v)));
                }
            }
            transversals = minimalize(next);
        }
        if transversals.iter().any(Monomial::is_one) {
            // only (1) has the empty set as transversal
            return Ok(MonomialIdeal::zero(self.nvars));
        }
        Ok(MonomialIdeal {
            nvars: self.nvars,
            gens: transversals,
        })
    }

    /// Standard polarization. Variable `v` with top exponent `e` becomes
    /// `max(e, 1)` copies `v^(1), ..., v^(e)`, ordered by `(v, copy)`.
    pub fn polarize(&self, ring: &Ring) -> (Ring, MonomialIdeal) {
        let tops: Vec<u32> = (0..self.nvars)
            .map(|v| self.gens.iter().map(|g| g.exp(v)).max().unwrap_or(0).max(1))
            .collect();
        let mut offsets = Vec::with_capacity(self.nvars);
        let mut names = Vec::new();
        for (v, &e) in tops.iter().enumerate() {
            offsets.push(names.len());
            for c in 1..=e {
                names.push(format!("{}^({c})", ring.name(v)));
            }
        }
        let nv = names.len();
        let gens = self
            .gens
            .iter()
            .map(|g| {
                let mut m = Monomial::one(nv);
                for v in g.support() {
                    for c in 0..g.exp(v) as usize {
                        m = m.mul_var(offsets[v] + c);
                    }
                }
                m
            })
            .collect();
        (Ring::named(names), MonomialIdeal::new(nv, gens))
    }

    /// Hilbert series numerator of `S/I` by inclusion-exclusion over subsets of `G(I)`.
    pub fn hilbert_numerator(&self, guards: &Guards) -> Result<Poly> {
        guards.check("hilbert-generators", self.len())?;
        let mut coeffs: Vec<i128> = Vec::new();
        let mut add = |d: usize, s: i128| {
            if coeffs.len() <= d {
                coeffs.resize(d + 1, 0);
            }
            coeffs[d] += s;
        };
        fn walk(gens: &[Monomial], start: usize, lcm: &Monomial, size: usize, add: &mut dyn FnMut(usize, i128)) {
            add(lcm.degree() as usize, if size.is_multiple_of(2) { 1 } else { -1 });
            for i in start..gens.len() {
                walk(gens, i + 1, &lcm.lcm(&gens[i]), size + 1, add);
            }
        }
        walk(&self.gens, 0, &Monomial::one(self.nvars), 0, &mut add);
        Ok(Poly::from_coeffs(coeffs))
    }

    /// Hilbert series numerator by the pivot recursion
    /// `N(I) = N(I + (x)) + t N(I : x)`, usable beyond the inclusion-exclusion cap.
    pub fn hilbert_numerator_splitting(&self, guards: &Guards) -> Result<Poly> {
        guards.check("splitting-generators", self.len())?;
        Ok(split_numerator(self.gens.clone(), self.nvars))
    }
}

fn split_numerator(gens: Vec<Monomial>, nvars: usize) -> Poly {
    if gens.is_empty() {
        return Poly::one();
    }
    if gens.iter().any(Monomial::is_one) {
        return Poly::zero();
    }
    let mut counts = vec![0usize; nvars];
    for g in &gens {
        for v in g.support() {
            counts[v] += 1;
        }
    }
    let (pivot, &most) = counts
        .iter()
        .enumerate()
        .max_by_key(|(v, c)| (**c, std::cmp::Reverse(*v)))
        .unwrap();
    if most <= 1 {
        return gens.iter().fold(Poly::one(), |acc, g| {
            acc.mul(&Poly::one_minus_t_pow(g.degree() as usize))
        });
    }
    let x = Monomial::var(nvars, pivot);
    let mut plus = vec![x.clone()];
    plus.extend(gens.iter().filter(|g| g.exp(pivot) == 0).cloned());
    let colon: Vec<Monomial> = gens.iter().map(|g| g.colon(&x)).collect();
    let a = split_numerator(minimalize(plus), nvars);
    let b = split_numerator(minimalize(colon), nvars);
    a.add(&b.shift(1))
}

impl MonomialIdeal {
    pub fn display(&self, ring: &Ring) -> String {
        if self.is_zero() {
            return "(0)".into();
        }
        let parts: Vec<String> = self.gens.iter().map(|g| g.display(ring)).collect();
        format!("({})", parts.join(", "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring() -> Ring {
        Ring::named(["x", "y", "z", "w"])
    }

    fn parse(ring: &Ring, s: &str) -> Monomial {
        let mut m = Monomial::one(ring.nvars());
        for c in s.chars() {
            let v = ring.names().iter().position(|n| n.starts_with(c)).unwrap();
            m = m.mul_var(v);
        }
        m
    }

    fn ideal(ring: &Ring, gens: &[&str]) -> MonomialIdeal {
        MonomialIdeal::new(ring.nvars(), gens.iter().map(|g| parse(ring, g)).collect())
    }

    #[test]
    fn minimal_generators() {
        let r = ring();
        let i = ideal(&r, &["xy", "x", "yz", "xyz"]);
        assert_eq!(i.display(&r), "(x, yz)");
    }

    #[test]
    fn colon_examples() {
        let r = ring();
        let y = parse(&r, "y");
        assert_eq!(ideal(&r, &["xy", "yz"]).colon(&y), ideal(&r, &["x", "z"]));
        let i = ideal(&r, &["xy", "yz"]);
        assert_eq!(i.colon(&Monomial::one(4)), i);
        let x = parse(&r, "x");
        assert_eq!(ideal(&r, &["xx", "xy"]).colon(&x), ideal(&r, &["x", "y"]));
    }

    #[test]
    fn products_and_powers() {
        let r = ring();
        let m = ideal(&r, &["x", "y"]);
        assert_eq!(m.power(2), ideal(&r, &["xx", "xy", "yy"]));
        assert_eq!(m.multiply(&m), m.power(2));
        assert_eq!(m.power(0), MonomialIdeal::unit(4));
        assert_eq!(ideal(&r, &["x"]).intersect(&ideal(&r, &["y"])), ideal(&r, &["xy"]));
    }

    #[test]
    fn weakly_polymatroidal_examples() {
        let r = ring();
        assert!(!ideal(&r, &["xy", "zw"]).is_weakly_polymatroidal().unwrap());
        assert!(ideal(&r, &["xyz"]).is_weakly_polymatroidal().unwrap());
        assert!(ideal(&r, &["xy", "xz", "yz"]).is_weakly_polymatroidal().unwrap());
        assert!(ideal(&r, &["x", "yz"]).is_weakly_polymatroidal().is_err());
    }

    #[test]
    fn quasi_linear_examples() {
        let r = ring();
        assert!(ideal(&r, &["x", "y"]).is_quasi_linear().unwrap());
        assert!(ideal(&r, &["xy", "xz", "yz"]).is_quasi_linear().unwrap());
        assert!(ideal(&r, &["xyz"]).is_quasi_linear().unwrap());
        let f = ideal(&r, &["xy", "zw"]).quasi_linear_failures().unwrap();
        assert_eq!(f.len(), 2);
    }

    #[test]
    fn alexander_dual_examples() {
        let r = ring();
        let v = [0, 1];
        assert_eq!(ideal(&r, &["xy"]).alexander_dual(&v).unwrap(), ideal(&r, &["x", "y"]));
        assert_eq!(ideal(&r, &["x", "y"]).alexander_dual(&v).unwrap(), ideal(&r, &["xy"]));
        assert!(MonomialIdeal::zero(4).alexander_dual(&v).unwrap().is_unit());
        assert!(MonomialIdeal::unit(4).alexander_dual(&v).unwrap().is_zero());
        assert!(ideal(&r, &["xx"]).alexander_dual(&v).is_err());
        assert!(ideal(&r, &["z"]).alexander_dual(&v).is_err());
    }

    #[test]
    fn polarize_examples() {
        let r = Ring::named(["x"]);
        let i = MonomialIdeal::new(1, vec![Monomial::from_exponents(vec![2])]);
        let (pr, p) = i.polarize(&r);
        assert_eq!(p.display(&pr), "(x^(1)x^(2))");
        let r = ring();
        let sq = ideal(&r, &["xy", "z"]);
        let (pr, p) = sq.polarize(&r);
        assert_eq!(pr.nvars(), 4);
        assert_eq!(p.len(), 2);
        assert!(p.is_squarefree());
    }

    #[test]
    fn hilbert_numerators() {
        let g = Guards::default();
        let r = Ring::named(["x", "y"]);
        let xy = MonomialIdeal::new(2, vec![Monomial::from_exponents(vec![1, 1])]);
        let m = MonomialIdeal::new(2, vec![Monomial::var(2, 0), Monomial::var(2, 1)]);
        assert_eq!(MonomialIdeal::zero(2).hilbert_numerator(&g).unwrap(), Poly::one());
        assert_eq!(xy.hilbert_numerator(&g).unwrap(), Poly::one_minus_t_pow(2));
        assert_eq!(m.hilbert_numerator(&g).unwrap(), Poly::one_minus_t_to(2));
        for i in [&xy, &m] {
            assert_eq!(
                i.hilbert_numerator(&g).unwrap(),
                i.hilbert_numerator_splitting(&g).unwrap()
            );
        }
        let _ = r;
    }

    #[test]
    fn hilbert_guard() {
        let g = Guards::default().with("hilbert-generators", 1).unwrap();
        let m = MonomialIdeal::new(2, vec![Monomial::var(2, 0), Monomial::var(2, 1)]);
        assert!(m.hilbert_numerator(&g).unwrap_err().is_guard());
    }
}
