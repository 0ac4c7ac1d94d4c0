//! Recursive rebuild of the resolution by iterated mapping cones.
//!
//! For `|A_1| >= 2` the ideal splits as `L = J + K` with `J = L(𝔄_1)`,
//! `K = L(𝔄_2)` and `J ∩ K = X_{p_1,a_1} K`. The cone of the comparison map
//! `F(J ∩ K) -> F(J) ⊕ F(K)` has level `t` equal to
//! `F(J∩K)_{t-1} ⊕ F(J)_t ⊕ F(K)_t`, where a basis element `X_{p_1,a_1}[K]`
//! of the first summand is identified with `[K_1 ∪ {a_1}, K_2, ...]`.
//! For `|A_1| = 1` the ideal is `X_{p_1,a_1}` times an ideal on `P \ {p_1}`.

use std::collections::HashMap;

use super::{assemble, build_resolution, Entry, ResolutionComplex, Symbol};
use crate::error::{Error, Result};
use crate::guards::Guards;
use crate::hom::PosetIdeal;
use crate::letterplace::ideal_of;

/// A subproblem: alphabets, members, and the strict down-sets of the poset.
struct Sub {
    alphabets: Vec<Vec<u32>>,
    members: Vec<Vec<u32>>,
    below: Vec<Vec<usize>>,
}

/// An entry with its variable written as `(element, letter)`.
#[derive(Clone, Copy, Debug)]
struct RawEntry {
    row: usize,
    col: usize,
    sign: i8,
    var: (usize, u32),
}

struct Cx {
    levels: Vec<Vec<Symbol>>,
    /// `diffs[t]` maps level `t` to level `t - 1`; `diffs[0]` is empty.
    diffs: Vec<Vec<RawEntry>>,
}

/// One row of the identification `X_{p_1,a_1}[K] <-> [K_1 ∪ {a_1}, ...]`.
#[derive(Clone, Debug)]
struct Identification {
    k_index: usize,
    symbol: Symbol,
}

fn single(sets: Vec<Vec<u32>>) -> Cx {
    Cx {
        levels: vec![vec![Symbol(sets)]],
        diffs: vec![Vec::new()],
    }
}

fn cone(sub: &Sub, budget: &mut usize) -> Result<Cx> {
    *budget = budget
        .checked_sub(1)
        .ok_or_else(|| Error::verification("mapping cone recursion exceeded its budget"))?;
    let m = sub.alphabets.len();
    if sub.members.is_empty() {
        return Err(Error::verification("mapping cone reached an empty ideal"));
    }
    if m == 0 {
        return Ok(single(Vec::new()));
    }
    if sub.alphabets.iter().all(|a| a.len() == 1) {
        return Ok(single(sub.alphabets.clone()));
    }
    let a_first = &sub.alphabets[0];
    if m == 1 && a_first.len() == 2 && sub.members.len() == 2 {
        let (x1, x2) = (a_first[0], a_first[1]);
        return Ok(Cx {
            levels: vec![
                vec![Symbol(vec![vec![x1]]), Symbol(vec![vec![x2]])],
                vec![Symbol(vec![vec![x1, x2]])],
            ],
            diffs: vec![
                Vec::new(),
                vec![
                    RawEntry {
                        row: 1,
                        col: 0,
                        sign: 1,
                        var: (0, x1),
                    },
                    RawEntry {
                        row: 0,
                        col: 0,
                        sign: -1,
                        var: (0, x2),
                    },
                ],
            ],
        });
    }
    let a1 = a_first[0];
    if a_first.len() == 1 {
        return factor_first(sub, a1, budget);
    }
    let (one, two): (Vec<Vec<u32>>, Vec<Vec<u32>>) = sub.members.iter().cloned().partition(|f| f[0] == a1);
    if two.is_empty() {
        let mut alphabets = sub.alphabets.clone();
        alphabets[0] = vec![a1];
        return cone(
            &Sub {
                alphabets,
                members: one,
                below: sub.below.clone(),
            },
            budget,
        );
    }
    let mut alph_j = sub.alphabets.clone();
    alph_j[0] = vec![a1];
    let mut alph_k = sub.alphabets.clone();
    alph_k[0].remove(0);
    let cj = cone(
        &Sub {
            alphabets: alph_j,
            members: one,
            below: sub.below.clone(),
        },
        budget,
    )?;
    let ck = cone(
        &Sub {
            alphabets: alph_k,
            members: two,
            below: sub.below.clone(),
        },
        budget,
    )?;
    glue(&cj, &ck, a1)
}

/// `|A_1| = 1`: resolve on `P \ {p_1}` and prepend `{a_1}`. The extra
/// element `(1, a_1)` precedes every other pair, so all signs flip.
fn factor_first(sub: &Sub, a1: u32, budget: &mut usize) -> Result<Cx> {
    let m = sub.alphabets.len();
    let alphabets: Vec<Vec<u32>> = (1..m)
        .map(|j| {
            if sub.below[j].contains(&0) {
                sub.alphabets[j].iter().copied().filter(|&a| a >= a1).collect()
            } else {
                sub.alphabets[j].clone()
            }
        })
        .collect();
    let below = (1..m)
        .map(|j| sub.below[j].iter().filter(|&&i| i != 0).map(|i| i - 1).collect())
        .collect();
    let members = sub.members.iter().map(|f| f[1..].to_vec()).collect();
    let inner = cone(
        &Sub {
            alphabets,
            members,
            below,
        },
        budget,
    )?;
    Ok(Cx {
        levels: inner
            .levels
            .into_iter()
            .map(|level| {
                level
                    .into_iter()
                    .map(|s| {
                        let mut sets = vec![vec![a1]];
                        sets.extend(s.0);
                        Symbol(sets)
                    })
                    .collect()
            })
            .collect(),
        diffs: inner
            .diffs
            .into_iter()
            .map(|d| {
                d.into_iter()
                    .map(|e| RawEntry {
                        sign: -e.sign,
                        var: (e.var.0 + 1, e.var.1),
                        ..e
                    })
                    .collect()
            })
            .collect(),
    })
}

/// Assembles the cone with level `t` laid out as `[B3 | B1 | B2]`:
/// `B3` from `F(K)_{t-1}` via the identification table, `B1 = F(J)_t`, `B2 = F(K)_t`.
fn glue(cj: &Cx, ck: &Cx, a1: u32) -> Result<Cx> {
    let depth = cj.levels.len().max(ck.levels.len() + 1);
    let level_of = |cx: &Cx, t: usize| cx.levels.get(t).map_or(0, Vec::len);
    let tables: Vec<Vec<Identification>> = (0..depth)
        .map(|t| {
            if t == 0 {
                return Vec::new();
            }
            ck.levels.get(t - 1).map_or(Vec::new(), |level| {
                level
                    .iter()
                    .enumerate()
                    .map(|(k_index, s)| {
                        let mut sets = s.0.clone();
                        sets[0].insert(0, a1);
                        Identification {
                            k_index,
                            symbol: Symbol(sets),
                        }
                    })
                    .collect()
            })
        })
        .collect();
    // offsets of B1 and B2 inside level t
    let off_b1: Vec<usize> = tables.iter().map(Vec::len).collect();
    let off_b2: Vec<usize> = (0..depth).map(|t| off_b1[t] + level_of(cj, t)).collect();

    let mut levels = Vec::with_capacity(depth);
    for t in 0..depth {
        let mut level: Vec<Symbol> = tables[t].iter().map(|r| r.symbol.clone()).collect();
        level.extend(cj.levels.get(t).into_iter().flatten().cloned());
        level.extend(ck.levels.get(t).into_iter().flatten().cloned());
        levels.push(level);
    }

    let mut diffs = vec![Vec::new()];
    for t in 1..depth {
        let mut d = Vec::new();
        for e in cj.diffs.get(t).into_iter().flatten() {
            d.push(RawEntry {
                row: off_b1[t - 1] + e.row,
                col: off_b1[t] + e.col,
                ..*e
            });
        }
        for e in ck.diffs.get(t).into_iter().flatten() {
            d.push(RawEntry {
                row: off_b2[t - 1] + e.row,
                col: off_b2[t] + e.col,
                ..*e
            });
        }
        // columns of B3: -d(J ∩ K) + f_J + f_K
        let j_index: HashMap<&Symbol, usize> = cj
            .levels
            .get(t - 1)
            .map(|l| l.iter().enumerate().map(|(i, s)| (s, i)).collect())
            .unwrap_or_default();
        for (col, ident) in tables[t].iter().enumerate() {
            let c = ident.k_index;
            if t >= 2 {
                for e in ck.diffs[t - 1].iter().filter(|e| e.col == c) {
                    d.push(RawEntry {
                        row: tables[t - 1]
                            .iter()
                            .position(|r| r.k_index == e.row)
                            .expect("identification table covers F(K)"),
                        col,
                        sign: -e.sign,
                        var: e.var,
                    });
                }
            }
            // f_K: X_{p_1,a_1} [K_1, ...] in F(K)_{t-1}
            d.push(RawEntry {
                row: off_b2[t - 1] + c,
                col,
                sign: 1,
                var: (0, a1),
            });
            // f_J: only when K_1 = {a_2}
            let k = &ck.levels[t - 1][c];
            if let [a2] = k.0[0][..] {
                let mut target = k.0.clone();
                target[0] = vec![a1];
                let target = Symbol(target);
                let row = *j_index
                    .get(&target)
                    .ok_or_else(|| Error::verification(format!("f_J target {target} missing from F(J)")))?;
                d.push(RawEntry {
                    row: off_b1[t - 1] + row,
                    col,
                    sign: -1,
                    var: (0, a2),
                });
            }
        }
        diffs.push(d);
    }
    Ok(Cx { levels, diffs })
}

/// Builds the resolution through the mapping-cone recursion and checks that it
/// coincides, symbol for symbol and sign for sign, with [`build_resolution`].
pub fn build_by_mapping_cone(ideal: &PosetIdeal, guards: &Guards) -> Result<ResolutionComplex> {
    let poset = ideal.poset();
    let sub = Sub {
        alphabets: ideal.alphabet().sets().to_vec(),
        members: ideal.members().iter().map(|f| f.values().to_vec()).collect(),
        below: (0..poset.len()).map(|j| poset.below(j).collect()).collect(),
    };
    let mut budget = 4 * guards.limit("basis") + 64;
    let cx = cone(&sub, &mut budget)?;
    let total: usize = cx.levels.iter().map(Vec::len).sum();
    guards.check("basis", total)?;

    // canonical order inside each level
    let mut perms = Vec::with_capacity(cx.levels.len());
    let mut levels = Vec::with_capacity(cx.levels.len());
    for level in &cx.levels {
        let mut order: Vec<usize> = (0..level.len()).collect();
        order.sort_by(|&a, &b| level[a].cmp(&level[b]));
        let mut pos = vec![0; level.len()];
        for (new, &old) in order.iter().enumerate() {
            pos[old] = new;
        }
        levels.push(order.iter().map(|&i| level[i].clone()).collect::<Vec<_>>());
        perms.push(pos);
    }
    let (ring, _) = ideal_of(ideal);
    let mut rz = assemble(ring.clone(), levels)?;
    let mut diffs = vec![Vec::new()];
    for t in 1..cx.levels.len() {
        let mut d: Vec<Entry> = cx.diffs[t]
            .iter()
            .map(|e| Entry {
                col: perms[t][e.col],
                row: perms[t - 1][e.row],
                sign: e.sign,
                var: ring.var(e.var.0, e.var.1).expect("cone letters lie in the alphabet"),
            })
            .collect();
        d.sort();
        diffs.push(d);
    }
    rz.diffs = diffs;

    let direct = build_resolution(ideal, guards)?;
    if direct.symbols != rz.symbols {
        return Err(Error::verification(
            "mapping cone bases differ from the direct construction",
        ));
    }
    for t in 1..rz.len() {
        if direct.diffs[t] != rz.diffs[t] {
            return Err(Error::verification(format!("mapping cone differential d_{t} differs")));
        }
    }
    super::verify_complex(&rz)?;
    Ok(rz)
}
