//! Integer polynomials in one variable `t`, used for Hilbert series numerators.

use std::fmt;

use serde::Serialize;

/// Dense coefficients, lowest degree first, no trailing zeros.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize)]
pub struct Poly(Vec<i128>);

impl Poly {
    pub fn zero() -> Poly {
        Poly(Vec::new())
    }

    pub fn one() -> Poly {
        Poly(vec![1])
    }

    pub fn from_coeffs(coeffs: Vec<i128>) -> Poly {
        let mut p = Poly(coeffs);
        p.trim();
        p
    }

    /// `t^d`.
    pub fn monomial(d: usize) -> Poly {
        let mut c = vec![0; d + 1];
        c[d] = 1;
        Poly(c)
    }

    /// `1 - t^d`.
    pub fn one_minus_t_pow(d: usize) -> Poly {
        Poly::one().sub(&Poly::monomial(d))
    }

    /// `(1 - t)^e`.
    pub fn one_minus_t_to(e: usize) -> Poly {
        (0..e).fold(Poly::one(), |acc, _| acc.mul(&Poly::one_minus_t_pow(1)))
    }

    pub fn coeffs(&self) -> &[i128] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn coeff(&self, d: usize) -> i128 {
        self.0.get(d).copied().unwrap_or(0)
    }

    fn trim(&mut self) {
        while self.0.last() == Some(&0) {
            self.0.pop();
        }
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let n = self.0.len().max(other.0.len());
        Poly::from_coeffs((0..n).map(|i| self.coeff(i) + other.coeff(i)).collect())
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        let n = self.0.len().max(other.0.len());
        Poly::from_coeffs((0..n).map(|i| self.coeff(i) - other.coeff(i)).collect())
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut c = vec![0i128; self.0.len() + other.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in other.0.iter().enumerate() {
                c[i + j] += a * b;
            }
        }
        Poly::from_coeffs(c)
    }

    /// Multiplies by `t^d`.
    pub fn shift(&self, d: usize) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut c = vec![0; d];
        c.extend_from_slice(&self.0);
        Poly(c)
    }

    /// Power-series coefficients of `self / (1 - t)^e` up to degree `up_to`.
    pub fn series_over_one_minus_t(&self, e: usize, up_to: usize) -> Vec<i128> {
        let mut c: Vec<i128> = (0..=up_to).map(|d| self.coeff(d)).collect();
        for _ in 0..e {
            for d in 1..=up_to {
                c[d] += c[d - 1];
            }
        }
        c
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (d, &c) in self.0.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let sign = if c < 0 { "-" } else { "+" };
            if first {
                if c < 0 {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let a = c.unsigned_abs();
            match (d, a) {
                (0, _) => write!(f, "{a}")?,
                (1, 1) => write!(f, "t")?,
                (1, _) => write!(f, "{a}t")?,
                (_, 1) => write!(f, "t^{d}")?,
                _ => write!(f, "{a}t^{d}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic_and_display() {
        let p = Poly::one_minus_t_to(2);
        assert_eq!(p.coeffs(), [1, -2, 1]);
        assert_eq!(p.to_string(), "1 - 2t + t^2");
        assert_eq!(
            Poly::one_minus_t_pow(2).sub(&p.mul(&Poly::one())).to_string(),
            "2t - 2t^2"
        );
        assert_eq!(Poly::one().shift(3), Poly::monomial(3));
        assert!(p.sub(&p).is_zero());
    }

    #[test]
    fn series_expansion() {
        // 1/(1-t)^2 = 1 + 2t + 3t^2 + ...
        assert_eq!(Poly::one().series_over_one_minus_t(2, 3), vec![1, 2, 3, 4]);
        // (1 - t^2)/(1-t)^2: k[x,y]/(xy) has 1, 2, 2, 2, ...
        assert_eq!(Poly::one_minus_t_pow(2).series_over_one_minus_t(2, 3), vec![1, 2, 2, 2]);
    }
}
