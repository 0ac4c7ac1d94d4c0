//! Seeded random instances for property sweeps.

use std::collections::BTreeMap;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::guards::Guards;
use crate::hom::{AlphabetMap, HomSpace, PosetIdeal};
use crate::instance::{IdealSpec, Instance, InstanceFile};
use crate::poset::Poset;

/// Size bounds for generated instances.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RandomParams {
    pub m: usize,
    pub n: u32,
    pub max_ideal: usize,
    /// Draw `|A_i| <= 2` for every element.
    pub small_alphabets: bool,
    /// Always take the full `Hom(P, A)`.
    pub full_only: bool,
}

impl Default for RandomParams {
    fn default() -> Self {
        RandomParams {
            m: 4,
            n: 5,
            max_ideal: 200,
            small_alphabets: false,
            full_only: false,
        }
    }
}

const ATTEMPTS: usize = 1000;

/// One instance from `seed`. The element count is drawn from `1..=m` and
/// each `A_i` from the nonempty subsets of `[n]`.
pub fn random_instance(seed: u64, params: RandomParams) -> Result<InstanceFile> {
    if params.m == 0 || params.n == 0 || params.max_ideal == 0 {
        return Err(Error::invalid(
            "random instances need m, n and the ideal bound positive",
        ));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let guards = Guards::default();
    for _ in 0..ATTEMPTS {
        let m = rng.gen_range(1..=params.m);
        let elements: Vec<String> = (1..=m).map(|i| format!("p{i}")).collect();
        let mut covers = Vec::new();
        for i in 0..m {
            for j in i + 1..m {
                if rng.gen_bool(0.35) {
                    covers.push((elements[i].clone(), elements[j].clone()));
                }
            }
        }
        let sets: Vec<Vec<u32>> = (0..m)
            .map(|_| {
                let mut letters: Vec<u32> = (1..=params.n).collect();
                letters.shuffle(&mut rng);
                let cap = if params.small_alphabets {
                    2.min(params.n)
                } else {
                    params.n
                };
                let size = rng.gen_range(1..=cap) as usize;
                let mut s = letters[..size].to_vec();
                s.sort_unstable();
                s
            })
            .collect();
        let poset = Poset::from_cover_relations(&elements, &covers, &guards)?;
        let space = HomSpace::new(poset, AlphabetMap::new(params.n, sets.clone())?)?;
        let hom = space.enumerate(&guards)?;
        if hom.is_empty() {
            continue;
        }
        let spec = if params.full_only || rng.gen_bool(0.3) {
            if hom.len() > params.max_ideal {
                continue;
            }
            IdealSpec::Full
        } else {
            let count = rng.gen_range(1..=3);
            let gens: Vec<_> = (0..count).map(|_| hom[rng.gen_range(0..hom.len())].clone()).collect();
            let ideal = PosetIdeal::from_generators(space, &gens, &guards)?;
            if ideal.len() > params.max_ideal {
                continue;
            }
            IdealSpec::Generators {
                maps: ideal.maximal_elements().iter().map(|g| g.values().to_vec()).collect(),
            }
        };
        return Ok(InstanceFile {
            alphabet: elements.iter().cloned().zip(sets).collect(),
            elements,
            covers,
            n: params.n,
            ideal: spec,
            guards: BTreeMap::new(),
        });
    }
    Err(Error::invalid("no instance within the bounds after many attempts"))
}

/// `count` parsed instances from consecutive seeds starting at `seed`.
pub fn random_instances(seed: u64, count: usize, params: RandomParams) -> Result<Vec<Instance>> {
    (0..count as u64)
        .map(|i| Instance::new(random_instance(seed.wrapping_add(i), params)?, &BTreeMap::new()))
        .collect()
}
