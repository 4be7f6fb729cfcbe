use std::fmt;

use crate::error::{Error, Result};

/// A polynomial in `u` with integer coefficients; `coeffs[k]` multiplies `u^k`.
/// No trailing zeros are stored, so the zero polynomial is empty.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct UPoly {
    coeffs: Vec<i64>,
}

impl UPoly {
    pub fn zero() -> Self {
        UPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: i64) -> Self {
        UPoly::from_coeffs(vec![c])
    }

    pub fn one() -> Self {
        UPoly::constant(1)
    }

    /// `u^k`.
    pub fn monomial(k: usize) -> Self {
        let mut coeffs = vec![0; k + 1];
        coeffs[k] = 1;
        UPoly { coeffs }
    }

    pub fn from_coeffs(mut coeffs: Vec<i64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        UPoly { coeffs }
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Value at `u = 0`.
    pub fn at_zero(&self) -> i64 {
        self.coeffs.first().copied().unwrap_or(0)
    }

    pub fn checked_add(&self, other: &UPoly) -> Result<UPoly> {
        let len = self.coeffs.len().max(other.coeffs.len());
        let mut out = vec![0i64; len];
        for (i, slot) in out.iter_mut().enumerate() {
            let a = self.coeffs.get(i).copied().unwrap_or(0);
            let b = other.coeffs.get(i).copied().unwrap_or(0);
            *slot = a.checked_add(b).ok_or(Error::Overflow)?;
        }
        Ok(UPoly::from_coeffs(out))
    }

    pub fn checked_neg(&self) -> Result<UPoly> {
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| c.checked_neg().ok_or(Error::Overflow))
            .collect::<Result<_>>()?;
        Ok(UPoly { coeffs })
    }

    pub fn checked_sub(&self, other: &UPoly) -> Result<UPoly> {
        self.checked_add(&other.checked_neg()?)
    }

    pub fn checked_mul(&self, other: &UPoly) -> Result<UPoly> {
        if self.is_zero() || other.is_zero() {
            return Ok(UPoly::zero());
        }
        let mut out = vec![0i64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in other.coeffs.iter().enumerate() {
                let t = a.checked_mul(b).ok_or(Error::Overflow)?;
                out[i + j] = out[i + j].checked_add(t).ok_or(Error::Overflow)?;
            }
        }
        Ok(UPoly::from_coeffs(out))
    }
}

impl fmt::Display for UPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            let sign = if c < 0 { "-" } else { "+" };
            if first {
                if c < 0 {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let abs = c.unsigned_abs();
            match (k, abs) {
                (0, _) => write!(f, "{abs}")?,
                (_, 1) => {}
                _ => write!(f, "{abs}")?,
            }
            match k {
                0 => {}
                1 => f.write_str("u")?,
                _ => write!(f, "u^{k}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic() {
        let u = UPoly::monomial(1);
        let one = UPoly::one();
        let u_plus_1 = u.checked_add(&one).unwrap();
        let sq = u_plus_1.checked_mul(&u_plus_1).unwrap();
        assert_eq!(sq.coeffs(), &[1, 2, 1]);
        assert!(sq.checked_sub(&sq).unwrap().is_zero());
        assert_eq!(UPoly::from_coeffs(vec![3, 0, 0]).degree(), Some(0));
        assert_eq!(UPoly::zero().degree(), None);
        assert_eq!(UPoly::from_coeffs(vec![-1, -1, 1]).at_zero(), -1);
    }

    #[test]
    fn display() {
        assert_eq!(
            UPoly::from_coeffs(vec![-1, -1, 1]).to_string(),
            "u^2 - u - 1"
        );
        assert_eq!(UPoly::from_coeffs(vec![0, 2]).to_string(), "2u");
        assert_eq!(UPoly::zero().to_string(), "0");
        assert_eq!(UPoly::constant(-3).to_string(), "-3");
    }

    #[test]
    fn overflow() {
        let big = UPoly::constant(i64::MAX);
        assert_eq!(big.checked_add(&UPoly::one()), Err(Error::Overflow));
        assert_eq!(big.checked_mul(&UPoly::constant(2)), Err(Error::Overflow));
    }
}
