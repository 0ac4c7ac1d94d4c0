//! Exact rank of sparse integer matrices over the rationals or a prime field.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};

pub const DEFAULT_PRIME: u64 = 32003;

/// The coefficient field for rank and homology computations.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize)]
pub enum Field {
    #[default]
    Rational,
    Prime(u64),
}

fn is_prime(p: u64) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

impl Field {
    pub fn prime(p: u64) -> Result<Field> {
        if p > u32::MAX as u64 || !is_prime(p) {
            return Err(Error::invalid(format!("{p} is not a supported prime")));
        }
        Ok(Field::Prime(p))
    }
}

impl FromStr for Field {
    type Err = Error;

    /// `rat`, `gfp` (default prime) or `gfp:<p>`.
    fn from_str(s: &str) -> Result<Field> {
        match s {
            "rat" | "rational" | "QQ" => Ok(Field::Rational),
            "gfp" => Ok(Field::Prime(DEFAULT_PRIME)),
            _ => match s.strip_prefix("gfp:") {
                Some(p) => Field::prime(p.parse().map_err(|_| Error::invalid(format!("bad prime `{p}`")))?),
                None => Err(Error::invalid(format!("unknown field `{s}`"))),
            },
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rational => write!(f, "rat"),
            Field::Prime(p) => write!(f, "gfp:{p}"),
        }
    }
}

/// Row-major sparse matrix with small integer entries.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SparseMatrix {
    nrows: usize,
    ncols: usize,
    rows: Vec<Vec<(usize, i64)>>,
}

impl SparseMatrix {
    pub fn new(nrows: usize, ncols: usize) -> SparseMatrix {
        SparseMatrix {
            nrows,
            ncols,
            rows: vec![Vec::new(); nrows],
        }
    }

    pub fn from_dense(rows: &[Vec<i64>]) -> SparseMatrix {
        let ncols = rows.first().map_or(0, Vec::len);
        let mut m = SparseMatrix::new(rows.len(), ncols);
        for (r, row) in rows.iter().enumerate() {
            for (c, &v) in row.iter().enumerate() {
                m.add(r, c, v);
            }
        }
        m
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    /// Adds `v` to entry `(r, c)`.
    pub fn add(&mut self, r: usize, c: usize, v: i64) {
        assert!(r < self.nrows && c < self.ncols, "entry ({r}, {c}) out of range");
        if v == 0 {
            return;
        }
        let row = &mut self.rows[r];
        match row.binary_search_by_key(&c, |e| e.0) {
            Ok(i) => {
                row[i].1 += v;
                if row[i].1 == 0 {
                    row.remove(i);
                }
            }
            Err(i) => row.insert(i, (c, v)),
        }
    }

    pub fn nnz(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn rank(&self, field: Field) -> usize {
        match field {
            Field::Rational => rank_rational(&self.rows),
            Field::Prime(p) => rank_mod_p(&self.rows, p),
        }
    }
}

trait Exact: Clone + PartialEq {
    fn from_i64(v: i64) -> Self;
    fn is_zero(&self) -> bool;
    fn cross(a: &Self, x: &Self, b: &Self, y: &Self) -> Option<Self>;
    fn gcd(&self, other: &Self) -> Self;
    fn div_exact(&self, d: &Self) -> Self;
    fn is_unit(&self) -> bool;
}

impl Exact for i128 {
    fn from_i64(v: i64) -> i128 {
        v as i128
    }
    fn is_zero(&self) -> bool {
        *self == 0
    }
    /// `a*x - b*y`.
    fn cross(a: &i128, x: &i128, b: &i128, y: &i128) -> Option<i128> {
        a.checked_mul(*x)?.checked_sub(b.checked_mul(*y)?)
    }
    fn gcd(&self, other: &i128) -> i128 {
        Integer::gcd(self, other)
    }
    fn div_exact(&self, d: &i128) -> i128 {
        self / d
    }
    fn is_unit(&self) -> bool {
        self.abs() == 1
    }
}

impl Exact for BigInt {
    fn from_i64(v: i64) -> BigInt {
        BigInt::from(v)
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn cross(a: &BigInt, x: &BigInt, b: &BigInt, y: &BigInt) -> Option<BigInt> {
        Some(a * x - b * y)
    }
    fn gcd(&self, other: &BigInt) -> BigInt {
        Integer::gcd(self, other)
    }
    fn div_exact(&self, d: &BigInt) -> BigInt {
        self / d
    }
    fn is_unit(&self) -> bool {
        self.abs().is_one()
    }
}

/// Fraction-free incremental echelon form. `None` on overflow.
fn rank_exact<T: Exact>(rows: &[Vec<(usize, i64)>]) -> Option<usize> {
    let mut pivots: HashMap<usize, Vec<(usize, T)>> = HashMap::new();
    for row in rows {
        let mut cur: Vec<(usize, T)> = row.iter().map(|&(c, v)| (c, T::from_i64(v))).collect();
        while let Some((lead, lv)) = cur.first().cloned() {
            let Some(piv) = pivots.get(&lead) else {
                pivots.insert(lead, cur);
                break;
            };
            let pv = piv[0].1.clone();
            // cur <- pv * cur - lv * piv, merged by column
            let mut next = Vec::with_capacity(cur.len() + piv.len());
            let (mut i, mut j) = (0, 0);
            let zero = T::from_i64(0);
            while i < cur.len() || j < piv.len() {
                let ci = cur.get(i).map_or(usize::MAX, |e| e.0);
                let cj = piv.get(j).map_or(usize::MAX, |e| e.0);
                let (col, val) = if ci < cj {
                    i += 1;
                    (ci, T::cross(&pv, &cur[i - 1].1, &lv, &zero)?)
                } else if cj < ci {
                    j += 1;
                    (cj, T::cross(&pv, &zero, &lv, &piv[j - 1].1)?)
                } else {
                    i += 1;
                    j += 1;
                    (ci, T::cross(&pv, &cur[i - 1].1, &lv, &piv[j - 1].1)?)
                };
                if !val.is_zero() {
                    next.push((col, val));
                }
            }
            if let Some(first) = next.first().map(|e| e.1.clone()) {
                let mut g = first;
                for e in &next[1..] {
                    if g.is_unit() {
                        break;
                    }
                    g = g.gcd(&e.1);
                }
                let g = g.gcd(&g);
                if !g.is_unit() {
                    for e in &mut next {
                        e.1 = e.1.div_exact(&g);
                    }
                }
            }
            cur = next;
        }
    }
    Some(pivots.len())
}

fn rank_rational(rows: &[Vec<(usize, i64)>]) -> usize {
    rank_exact::<i128>(rows).unwrap_or_else(|| rank_exact::<BigInt>(rows).expect("big integers do not overflow"))
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    r
}

fn rank_mod_p(rows: &[Vec<(usize, i64)>], p: u64) -> usize {
    let red = |v: i64| v.rem_euclid(p as i64) as u64;
    let mut pivots: HashMap<usize, Vec<(usize, u64)>> = HashMap::new();
    for row in rows {
        let mut cur: Vec<(usize, u64)> = row.iter().map(|&(c, v)| (c, red(v))).filter(|e| e.1 != 0).collect();
        while let Some(&(lead, lv)) = cur.first() {
            let Some(piv) = pivots.get(&lead) else {
                let inv = pow_mod(lv, p - 2, p);
                for e in &mut cur {
                    e.1 = e.1 * inv % p;
                }
                pivots.insert(lead, cur);
                break;
            };
            // pivot rows are monic: cur <- cur - lv * piv
            let mut acc: std::collections::BTreeMap<usize, u64> = cur.iter().copied().collect();
            for &(c, v) in piv {
                let e = acc.entry(c).or_insert(0);
                *e = (*e + p - lv * v % p) % p;
            }
            cur = acc.into_iter().filter(|e| e.1 != 0).collect();
        }
    }
    pivots.len()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_ranks() {
        let id = SparseMatrix::from_dense(&[vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]);
        let zero = SparseMatrix::new(3, 4);
        let ones = SparseMatrix::from_dense(&[vec![1, 1], vec![1, 1]]);
        for f in [Field::Rational, Field::Prime(DEFAULT_PRIME)] {
            assert_eq!(id.rank(f), 3);
            assert_eq!(zero.rank(f), 0);
            assert_eq!(ones.rank(f), 1);
        }
    }

    #[test]
    fn characteristic_dependence() {
        // determinant 2: full rank over Q, rank 1 over GF(2)
        let m = SparseMatrix::from_dense(&[vec![1, 1], vec![1, -1]]);
        assert_eq!(m.rank(Field::Rational), 2);
        assert_eq!(m.rank(Field::Prime(2)), 1);
    }

    #[test]
    fn overflow_falls_back_to_big_integers() {
        // A Hilbert-like matrix of large entries drives i128 products out of range.
        let n = 12;
        let rows: Vec<Vec<i64>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| (((i + 2) as i64).pow(j as u32 % 16)) % 1_000_000_007 + 1)
                    .collect()
            })
            .collect();
        let m = SparseMatrix::from_dense(&rows);
        assert!(rank_exact::<i128>(&m.rows).is_none() || m.rank(Field::Rational) <= n);
        assert_eq!(rank_exact::<BigInt>(&m.rows).unwrap(), m.rank(Field::Rational));
    }

    #[test]
    fn field_parsing() {
        assert_eq!("rat".parse::<Field>().unwrap(), Field::Rational);
        assert_eq!("gfp:7".parse::<Field>().unwrap(), Field::Prime(7));
        assert_eq!("gfp".parse::<Field>().unwrap(), Field::Prime(32003));
        assert!("gfp:8".parse::<Field>().is_err());
        assert!("real".parse::<Field>().is_err());
        assert_eq!(Field::Prime(7).to_string(), "gfp:7");
    }

    #[test]
    fn add_accumulates_and_cancels() {
        let mut m = SparseMatrix::new(1, 2);
        m.add(0, 1, 2);
        m.add(0, 1, -2);
        assert_eq!(m.nnz(), 0);
    }
}
