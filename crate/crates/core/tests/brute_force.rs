//! Independent brute-force oracles, written from the definitions alone, checked
//! against the library. Frozen values below were produced by these oracles.

use std::collections::BTreeSet;

use coletter::hom::{AlphabetMap, HomSpace, IsotoneMap, PosetIdeal};
use coletter::letterplace::{delta_f, ideal_of, monomial_of_map};
use coletter::linalg::Field;
use coletter::oracle::taylor_betti;
use coletter::powers::bounded_power;
use coletter::resolution::{build_resolution, differential_terms, enumerate_ct, Symbol};
use coletter::simplicial::SimplicialComplex;
use coletter::{Guards, Monomial, MonomialIdeal, Poset};

fn guards() -> Guards {
    Guards::default()
}

fn two_chain() -> Poset {
    Poset::from_cover_relations(&["p1", "p2"], &[("p1", "p2")], &guards()).unwrap()
}

fn full(poset: Poset, n: u32, sets: Vec<Vec<u32>>) -> PosetIdeal {
    let space = HomSpace::new(poset, AlphabetMap::new(n, sets).unwrap()).unwrap();
    PosetIdeal::full(space, &guards()).unwrap()
}

/// All maps `P -> [n]` with values in `A_i` and `f(p) <= f(q)` for `p <= q`.
fn hom_by_brute_force(poset: &Poset, alphabet: &AlphabetMap) -> Vec<IsotoneMap> {
    let m = poset.len();
    let n = alphabet.n();
    let mut out = Vec::new();
    let mut values = vec![1u32; m];
    loop {
        let in_alphabet = (0..m).all(|i| alphabet.contains(i, values[i]));
        let isotone = (0..m).all(|i| (0..m).all(|j| !poset.leq(i, j) || values[i] <= values[j]));
        if in_alphabet && isotone {
            out.push(IsotoneMap::new(values.clone()));
        }
        let Some(i) = (0..m).rev().find(|&i| values[i] < n) else {
            break;
        };
        values[i] += 1;
        for v in &mut values[i + 1..] {
            *v = 1;
        }
    }
    out
}

#[test]
fn hom_enumeration_matches_brute_force() {
    let g = guards();
    let v = Poset::from_cover_relations(&["a", "b", "c"], &[("a", "c"), ("b", "c")], &g).unwrap();
    let cases = [
        (Poset::chain(2), AlphabetMap::uniform(2, 3)),
        (Poset::chain(3), AlphabetMap::uniform(3, 3)),
        (Poset::antichain(2), AlphabetMap::uniform(2, 2)),
        (
            v,
            AlphabetMap::new(4, vec![vec![1, 3], vec![2, 4], vec![2, 3, 4]]).unwrap(),
        ),
        (two_chain(), AlphabetMap::new(3, vec![vec![1, 2], vec![1, 3]]).unwrap()),
    ];
    let mut sizes = Vec::new();
    for (poset, alphabet) in cases {
        let brute = hom_by_brute_force(&poset, &alphabet);
        let space = HomSpace::new(poset, alphabet).unwrap();
        assert_eq!(space.enumerate(&g).unwrap(), brute);
        sizes.push(brute.len());
    }
    assert_eq!(sizes, [6, 10, 4, 7, 3]);
}

/// Weak polymatroidality straight from the exchange definition: for generators
/// `u, v` agreeing on `x_1..x_{t-1}` with `deg_{x_t} u > deg_{x_t} v`, some
/// `j > t` has `x_t v / x_j` in the ideal.
fn weakly_polymatroidal_by_definition(ideal: &MonomialIdeal) -> bool {
    let nv = ideal.nvars();
    for u in ideal.gens() {
        for v in ideal.gens() {
            let Some(t) = (0..nv).find(|&i| u.exp(i) != v.exp(i)) else {
                continue;
            };
            if u.exp(t) <= v.exp(t) {
                continue;
            }
            let ok = (t + 1..nv).any(|j| v.div_var(j).is_some_and(|w| ideal.contains(&w.mul_var(t))));
            if !ok {
                return false;
            }
        }
    }
    true
}

fn ideal(nv: usize, gens: &[&[usize]]) -> MonomialIdeal {
    MonomialIdeal::new(
        nv,
        gens.iter()
            .map(|g| Monomial::from_vars(nv, g.iter().copied()))
            .collect(),
    )
}

#[test]
fn weak_polymatroidality_matches_the_definition() {
    let cases: [(MonomialIdeal, bool); 5] = [
        // (xy, zw)
        (ideal(4, &[&[0, 1], &[2, 3]]), false),
        // (xy, xz, yz)
        (ideal(3, &[&[0, 1], &[0, 2], &[1, 2]]), true),
        (ideal(3, &[&[0, 0], &[0, 1], &[1, 1]]), true),
        (ideal(3, &[&[0, 2], &[1, 1]]), false),
        (ideal(4, &[&[0, 2], &[0, 3], &[1, 3]]), true),
    ];
    for (i, want) in cases {
        assert_eq!(weakly_polymatroidal_by_definition(&i), want);
        assert_eq!(i.is_weakly_polymatroidal().unwrap(), want, "{:?}", i.gens());
    }
    for a in [
        full(two_chain(), 3, vec![vec![1, 2, 3]; 2]),
        full(Poset::chain(3), 3, vec![vec![1, 2, 3]; 3]),
        full(Poset::antichain(2), 3, vec![vec![1, 3], vec![2, 3]]),
    ] {
        let (_, l) = ideal_of(&a);
        assert!(weakly_polymatroidal_by_definition(&l));
    }
}

/// Variables generating `(U_g : g before f) : U_f`, from the minimal generators
/// `U_g / gcd(U_g, U_f)` of the colon.
fn prefix_colon_variables(a: &PosetIdeal, f: &IsotoneMap) -> Option<Vec<usize>> {
    let (ring, _) = ideal_of(a);
    let uf = monomial_of_map(&ring, f).unwrap();
    let quotients: Vec<Monomial> = a
        .members()
        .iter()
        .take_while(|g| *g != f)
        .map(|g| monomial_of_map(&ring, g).unwrap().colon(&uf))
        .collect();
    let colon = MonomialIdeal::new(ring.nvars(), quotients);
    colon.gens().iter().map(Monomial::as_var).collect()
}

#[test]
fn delta_sets_match_prefix_colons() {
    let a = full(two_chain(), 2, vec![vec![1, 2]; 2]);
    let (ring, _) = ideal_of(&a);
    let x = |i: usize, c: u32| ring.var(i, c).unwrap();
    for f in a.members() {
        let mut brute = prefix_colon_variables(&a, f).expect("linear quotients");
        brute.sort_unstable();
        let mut closed: Vec<usize> = delta_f(a.space(), f).into_iter().map(|(i, c)| x(i, c)).collect();
        closed.sort_unstable();
        assert_eq!(brute, closed, "f = {:?}", f.values());
    }
    let at = |v: &[u32]| {
        let vars: Vec<usize> = delta_f(a.space(), &IsotoneMap::new(v.to_vec()))
            .into_iter()
            .map(|(i, c)| x(i, c))
            .collect();
        vars
    };
    assert_eq!(at(&[2, 2]), [x(0, 1)]);
    assert_eq!(at(&[1, 2]), [x(1, 1)]);

    for a in [
        full(Poset::chain(3), 3, vec![vec![1, 2, 3]; 3]),
        full(two_chain(), 4, vec![vec![1, 2, 4], vec![2, 3, 4]]),
    ] {
        let (ring, _) = ideal_of(&a);
        for f in a.members() {
            let mut brute = prefix_colon_variables(&a, f).expect("linear quotients");
            brute.sort_unstable();
            let mut closed: Vec<usize> = delta_f(a.space(), f)
                .into_iter()
                .map(|(i, c)| ring.var(i, c).unwrap())
                .collect();
            closed.sort_unstable();
            assert_eq!(brute, closed);
        }
    }
}

fn subsets(set: &[u32]) -> Vec<Vec<u32>> {
    (1u32..(1 << set.len()))
        .map(|mask| (0..set.len()).filter(|&i| mask >> i & 1 == 1).map(|i| set[i]).collect())
        .collect()
}

/// Every tuple of non-empty `K_i ⊆ A_i` with `sum |K_i| = m + t`,
/// `max K_i <= min K_j` for `p_i < p_j`, and `(max K_i)_i` in 𝔄.
fn ct_by_brute_force(a: &PosetIdeal, t: usize) -> Vec<Symbol> {
    let m = a.m();
    let choices: Vec<Vec<Vec<u32>>> = (0..m).map(|i| subsets(a.alphabet().set(i))).collect();
    let mut out = Vec::new();
    let mut idx = vec![0usize; m];
    loop {
        let sets: Vec<Vec<u32>> = (0..m).map(|i| choices[i][idx[i]].clone()).collect();
        let size: usize = sets.iter().map(Vec::len).sum();
        let ordered = (0..m).all(|i| (0..m).all(|j| !a.poset().lt(i, j) || sets[i].last() <= sets[j].first()));
        let top: Vec<u32> = sets.iter().map(|k| *k.last().unwrap()).collect();
        if size == m + t && ordered && a.contains_values(&top) {
            out.push(Symbol(sets));
        }
        let Some(i) = (0..m).rev().find(|&i| idx[i] + 1 < choices[i].len()) else {
            break;
        };
        idx[i] += 1;
        for v in &mut idx[i + 1..] {
            *v = 0;
        }
    }
    out.sort();
    out
}

#[test]
fn basis_enumeration_matches_all_subset_tuples() {
    let gapped = full(two_chain(), 3, vec![vec![1, 2], vec![1, 3]]);
    let sym = |sets: &[&[u32]]| Symbol(sets.iter().map(|k| k.to_vec()).collect());
    assert_eq!(enumerate_ct(&gapped, 0, &guards()).unwrap().len(), 3);
    assert_eq!(
        ct_by_brute_force(&gapped, 1),
        [sym(&[&[1], &[1, 3]]), sym(&[&[1, 2], &[3]])]
    );
    assert!(ct_by_brute_force(&gapped, 2).is_empty());

    let g = guards();
    let cases = [
        gapped,
        full(Poset::chain(3), 3, vec![vec![1, 2, 3]; 3]),
        full(Poset::antichain(2), 3, vec![vec![1, 2, 3], vec![2, 3]]),
        full(Poset::chain(1), 4, vec![vec![1, 2, 3, 4]]),
    ];
    for a in cases {
        for t in 0..=4 {
            assert_eq!(enumerate_ct(&a, t, &g).unwrap(), ct_by_brute_force(&a, t), "t = {t}");
        }
    }
    let space = HomSpace::new(two_chain(), AlphabetMap::uniform(2, 3)).unwrap();
    let downset =
        PosetIdeal::from_generators(space, &[IsotoneMap::new(vec![1, 3]), IsotoneMap::new(vec![2, 2])], &g).unwrap();
    for t in 0..=3 {
        assert_eq!(enumerate_ct(&downset, t, &g).unwrap(), ct_by_brute_force(&downset, t));
    }
}

/// Sign of `X_{p_i,a}` in `d[K]`: parity of the number of pairs `(j, b)` of the
/// symbol that are strictly larger, larger meaning smaller `j`, then smaller `b`.
fn sign_by_counting(symbol: &Symbol, i: usize, a: u32) -> i8 {
    let larger = symbol
        .sets()
        .iter()
        .enumerate()
        .flat_map(|(j, k)| k.iter().map(move |&b| (j, b)))
        .filter(|&(j, b)| j < i || (j == i && b < a))
        .count();
    if larger % 2 == 0 {
        1
    } else {
        -1
    }
}

#[test]
fn differential_signs_match_the_count_of_larger_variables() {
    let s = Symbol(vec![vec![1], vec![2, 3]]);
    let terms = differential_terms(&s).unwrap();
    assert_eq!(
        terms,
        [
            (Symbol(vec![vec![1], vec![3]]), -1, (1, 2)),
            (Symbol(vec![vec![1], vec![2]]), 1, (1, 3)),
        ]
    );
    let a = full(Poset::chain(3), 4, vec![vec![1, 2, 3, 4]; 3]);
    let g = guards();
    for t in 1..=3 {
        let below: BTreeSet<Symbol> = ct_by_brute_force(&a, t - 1).into_iter().collect();
        for s in enumerate_ct(&a, t, &g).unwrap() {
            for (target, sign, (i, c)) in differential_terms(&s).unwrap() {
                assert_eq!(sign, sign_by_counting(&s, i, c));
                assert!(below.contains(&target), "{target} leaves the basis");
            }
        }
    }
}

fn binomial(n: usize, k: usize) -> usize {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

#[test]
fn single_element_ranks_are_binomial() {
    let g = guards();
    for n in 1..=6u32 {
        let a = full(Poset::chain(1), n, vec![(1..=n).collect()]);
        let rz = build_resolution(&a, &g).unwrap();
        let want: Vec<usize> = (0..n as usize).map(|t| binomial(n as usize, t + 1)).collect();
        assert_eq!(rz.ranks(), want);
        assert_eq!(rz.projective_dimension(), Some(n as usize - 1));
        let (_, l) = ideal_of(&a);
        assert_eq!(taylor_betti(&l, Field::Rational, &g).unwrap().totals(), want);
    }
}

/// Number of monomials of degree `d` in `nv` variables outside the ideal.
fn standard_monomials(ideal: &MonomialIdeal, d: u32) -> i128 {
    fn rec(ideal: &MonomialIdeal, exps: &mut Vec<u32>, v: usize, left: u32) -> i128 {
        if v + 1 == exps.len() {
            exps[v] = left;
            let m = Monomial::from_exponents(exps.clone());
            return i128::from(!ideal.contains(&m));
        }
        (0..=left)
            .map(|e| {
                exps[v] = e;
                rec(ideal, exps, v + 1, left - e)
            })
            .sum()
    }
    rec(ideal, &mut vec![0; ideal.nvars()], 0, d)
}

#[test]
fn hilbert_series_counts_standard_monomials() {
    let ideals = [
        ideal(3, &[&[0, 1], &[0, 2], &[1, 2]]),
        ideal(3, &[&[0, 0], &[0, 1], &[1, 1], &[2]]),
        ideal(4, &[&[0, 1], &[2, 3]]),
        ideal(4, &[&[0, 0, 1], &[1, 2, 3], &[3, 3]]),
        ideal_of(&full(two_chain(), 3, vec![vec![1, 2, 3]; 2])).1,
    ];
    for i in ideals {
        let g = guards();
        let n = i.hilbert_numerator(&g).unwrap();
        assert_eq!(n, i.hilbert_numerator_splitting(&g).unwrap());
        let series = n.series_over_one_minus_t(i.nvars(), 6);
        for d in 0..=6u32 {
            assert_eq!(series[d as usize], standard_monomials(&i, d), "degree {d}");
        }
    }
}

#[test]
fn bounded_power_can_be_strictly_smaller_than_the_power() {
    let g = guards();
    let space = HomSpace::new(Poset::antichain(2), AlphabetMap::uniform(2, 2)).unwrap();
    let maps = [vec![1, 2], vec![2, 1], vec![1, 1]].map(IsotoneMap::new).to_vec();
    let a = PosetIdeal::explicit(space, maps).unwrap();
    let (ring, l) = ideal_of(&a);
    let bp = bounded_power(&a, 2, &g).unwrap();
    let square = l.power(2);
    assert!(bp.gens().iter().all(|u| square.contains(u)));
    let u12 = monomial_of_map(&ring, &IsotoneMap::new(vec![1, 2])).unwrap();
    let u21 = monomial_of_map(&ring, &IsotoneMap::new(vec![2, 1])).unwrap();
    let product = u12.mul(&u21);
    assert!(square.contains(&product));
    assert!(!bp.contains(&product));

    // brute force: products U_f U_g over comparable pairs only
    let (members, nv) = (a.members(), ring.nvars());
    let chained: Vec<Monomial> = members
        .iter()
        .flat_map(|f| members.iter().filter(move |h| f.leq(h)).map(move |h| (f, h)))
        .map(|(f, h)| {
            monomial_of_map(&ring, f)
                .unwrap()
                .mul(&monomial_of_map(&ring, h).unwrap())
        })
        .collect();
    assert_eq!(bp, MonomialIdeal::new(nv, chained));
    assert_ne!(bp, square);
}

fn kunneth_join(a: &[usize], b: &[usize]) -> Vec<usize> {
    // index i holds H~_{i-1}; H~_i(A*B) = sum_{j+k=i-1} H~_j(A) H~_k(B)
    let mut out = vec![0; a.len() + b.len() - 1];
    for (j, x) in a.iter().enumerate() {
        for (k, y) in b.iter().enumerate() {
            out[j + k] += x * y;
        }
    }
    while out.len() > 1 && out.last() == Some(&0) {
        out.pop();
    }
    out
}

#[test]
fn join_homology_follows_the_kunneth_formula() {
    let g = guards();
    let complexes: Vec<(Vec<&str>, Vec<Vec<usize>>)> = vec![
        (vec!["a", "b"], vec![vec![0], vec![1]]),
        (vec!["c", "d", "e"], vec![vec![0, 1], vec![1, 2], vec![0, 2]]),
        (vec!["f", "g", "h"], vec![vec![0, 1, 2]]),
        (vec!["i", "j", "k", "l"], vec![vec![0, 1], vec![2, 3]]),
        (
            vec!["m", "n", "o", "q"],
            vec![vec![0, 1], vec![1, 2], vec![2, 3], vec![3, 0], vec![0, 2]],
        ),
    ];
    let build = |(v, f): &(Vec<&str>, Vec<Vec<usize>>), tag: usize| {
        let names = v.iter().map(|s| format!("{s}{tag}")).collect();
        SimplicialComplex::from_lists(names, f, &g).unwrap()
    };
    for x in &complexes {
        for y in &complexes {
            let (a, b) = (build(x, 1), build(y, 2));
            let ha = a.reduced_homology(Field::Rational, &g).unwrap();
            let hb = b.reduced_homology(Field::Rational, &g).unwrap();
            let mut hj = a.join(&b, &g).unwrap().reduced_homology(Field::Rational, &g).unwrap();
            while hj.len() > 1 && hj.last() == Some(&0) {
                hj.pop();
            }
            assert_eq!(hj, kunneth_join(&ha, &hb));
        }
    }
    // two copies of S^0 give a 4-cycle
    let (s, t) = (build(&complexes[0], 1), build(&complexes[0], 2));
    assert_eq!(
        s.join(&t, &g).unwrap().reduced_homology(Field::Rational, &g).unwrap(),
        [0, 0, 1]
    );
}

#[test]
fn alexander_duality_is_an_involution() {
    let cases = [
        ideal(4, &[&[0, 1], &[2, 3]]),
        ideal(3, &[&[0, 1], &[0, 2], &[1, 2]]),
        ideal(5, &[&[0], &[1, 2, 3], &[3, 4]]),
    ];
    let vertices: Vec<usize> = (0..5).collect();
    for i in cases {
        let vs = &vertices[..i.nvars()];
        let dual = i.alexander_dual(vs).unwrap();
        assert_eq!(dual.alexander_dual(vs).unwrap(), i);
    }
    // (xy, zw) has dual (xz, xw, yz, yw)
    let d = ideal(4, &[&[0, 1], &[2, 3]]).alexander_dual(&vertices[..4]).unwrap();
    assert_eq!(d, ideal(4, &[&[0, 2], &[0, 3], &[1, 2], &[1, 3]]));
}
