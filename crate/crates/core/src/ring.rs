//! Polynomial rings over the letterplace variables `X_{p,a}` and their copies.
//!
//! A variable is a dense index. Index 0 is the largest variable; the order is
//! fixed once here and every other module only compares indices.

use serde::Serialize;

use crate::hom::AlphabetMap;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum VarKind {
    /// `X_{p_elem, letter}`.
    Letterplace { elem: usize, letter: u32 },
    /// `X_{p_elem, letter}^{(copy)}` in the power ring, `copy` counted from 1.
    Copy { elem: usize, letter: u32, copy: usize },
    /// A free-standing name, e.g. a polarization variable.
    Named,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Ring {
    names: Vec<String>,
    kinds: Vec<VarKind>,
    /// For letterplace rings: first variable index of each element, and its alphabet.
    offsets: Vec<usize>,
    alphabets: Vec<Vec<u32>>,
    /// Number of copies per base element (1 for the base ring).
    copies: usize,
}

impl Ring {
    /// `K[X_{p_i,a} : a in A_i]`, ordered `X_{p1,a} > X_{p1,b} > ... > X_{pm,*}` for `a < b`.
    pub fn letterplace(alphabet: &AlphabetMap) -> Ring {
        Self::build(alphabet.sets(), 1)
    }

    /// The ring `T` for the product poset `P^k`, whose alphabet lists each `A_i`
    /// `k` times in label order `i*k + s`. Variables are ordered by `(i, s, a)`.
    pub fn power(base: &AlphabetMap, k: usize) -> Ring {
        let sets: Vec<Vec<u32>> = base
            .sets()
            .iter()
            .flat_map(|s| std::iter::repeat_n(s.clone(), k))
            .collect();
        Self::build(&sets, k)
    }

    fn build(sets: &[Vec<u32>], copies: usize) -> Ring {
        let mut names = Vec::new();
        let mut kinds = Vec::new();
        let mut offsets = Vec::with_capacity(sets.len());
        for (e, set) in sets.iter().enumerate() {
            offsets.push(names.len());
            for &a in set {
                if copies == 1 {
                    names.push(format!("X[p{},{a}]", e + 1));
                    kinds.push(VarKind::Letterplace { elem: e, letter: a });
                } else {
                    let (i, s) = (e / copies, e % copies + 1);
                    names.push(format!("X[p{},{a},s{s}]", i + 1));
                    kinds.push(VarKind::Copy {
                        elem: i,
                        letter: a,
                        copy: s,
                    });
                }
            }
        }
        Ring {
            names,
            kinds,
            offsets,
            alphabets: sets.to_vec(),
            copies,
        }
    }

    /// A ring with explicitly named variables, largest first.
    pub fn named<S: Into<String>>(names: impl IntoIterator<Item = S>) -> Ring {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        Ring {
            kinds: vec![VarKind::Named; names.len()],
            names,
            offsets: Vec::new(),
            alphabets: Vec::new(),
            copies: 1,
        }
    }

    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    pub fn name(&self, v: usize) -> &str {
        &self.names[v]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn kind(&self, v: usize) -> &VarKind {
        &self.kinds[v]
    }

    pub fn copies(&self) -> usize {
        self.copies
    }

    /// Index of `X_{p_elem, letter}` where `elem` is a label of the underlying
    /// poset (for the power ring, a label of `P^k`).
    pub fn var(&self, elem: usize, letter: u32) -> Option<usize> {
        let set = self.alphabets.get(elem)?;
        set.binary_search(&letter).ok().map(|p| self.offsets[elem] + p)
    }

    /// `(elem, letter)` of a letterplace variable, `elem` being a poset label.
    pub fn elem_letter(&self, v: usize) -> Option<(usize, u32)> {
        match self.kinds[v] {
            VarKind::Letterplace { elem, letter } => Some((elem, letter)),
            VarKind::Copy { elem, letter, copy } => Some((elem * self.copies + copy - 1, letter)),
            VarKind::Named => None,
        }
    }

    /// Base-ring variable index of a copy variable `X_{i,a}^{(s)} -> X_{i,a}`.
    pub fn forget_copy(&self, v: usize, base: &Ring) -> Option<usize> {
        match self.kinds[v] {
            VarKind::Copy { elem, letter, .. } => base.var(elem, letter),
            VarKind::Letterplace { elem, letter } => base.var(elem, letter),
            VarKind::Named => None,
        }
    }
}
