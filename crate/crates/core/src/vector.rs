//! Integer count vectors graded by dimension, order or index.
//!
//! All arithmetic is checked; the enumeration routines elsewhere in the crate
//! can produce counts large enough that silent wraparound would corrupt the
//! very invariants the vectors are meant to certify.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(transparent)]
pub struct GradedVector {
    entries: Vec<i64>,
}

impl GradedVector {
    pub fn new(entries: Vec<i64>) -> Self {
        GradedVector { entries }
    }

    pub fn zeros(len: usize) -> Self {
        GradedVector {
            entries: vec![0; len],
        }
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Entry in degree `k`; degrees outside the stored range read as zero.
    pub fn entry(&self, k: usize) -> i64 {
        self.entries.get(k).copied().unwrap_or(0)
    }

    pub fn entries(&self) -> &[i64] {
        &self.entries
    }

    pub fn add_at(&mut self, k: usize, value: i64) -> Result<()> {
        if k >= self.entries.len() {
            self.entries.resize(k + 1, 0);
        }
        self.entries[k] = self.entries[k].checked_add(value).ok_or(Error::Overflow)?;
        Ok(())
    }

    pub fn total(&self) -> Result<i64> {
        self.entries
            .iter()
            .try_fold(0i64, |acc, &v| acc.checked_add(v).ok_or(Error::Overflow))
    }

    /// Alternating sum over degrees, the Euler number of whatever is counted.
    pub fn alternating_sum(&self) -> Result<i64> {
        let mut acc = 0i64;
        for (k, &v) in self.entries.iter().enumerate() {
            let signed = if k % 2 == 0 { v } else { v.checked_neg().ok_or(Error::Overflow)? };
            acc = acc.checked_add(signed).ok_or(Error::Overflow)?;
        }
        Ok(acc)
    }

    pub fn reversed(&self) -> GradedVector {
        let mut entries = self.entries.clone();
        entries.reverse();
        GradedVector { entries }
    }

    pub fn is_palindromic(&self) -> bool {
        self.entries == self.reversed().entries
    }

    /// Graded convolution: entry `k` of the result sums products of entries
    /// in complementary degrees. The length is `self.len() + other.len() - 1`.
    pub fn product(&self, other: &GradedVector) -> Result<GradedVector> {
        if self.is_empty() || other.is_empty() {
            return Ok(GradedVector::zeros(0));
        }
        let mut out = GradedVector::zeros(self.len() + other.len() - 1);
        for (i, &a) in self.entries.iter().enumerate() {
            for (j, &b) in other.entries.iter().enumerate() {
                let p = a.checked_mul(b).ok_or(Error::Overflow)?;
                out.add_at(i + j, p)?;
            }
        }
        Ok(out)
    }

    /// Multiply every entry by a scalar.
    pub fn scaled(&self, factor: i64) -> Result<GradedVector> {
        let mut entries = Vec::with_capacity(self.entries.len());
        for &v in &self.entries {
            entries.push(v.checked_mul(factor).ok_or(Error::Overflow)?);
        }
        Ok(GradedVector { entries })
    }
}

impl std::fmt::Display for GradedVector {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "(")?;
        for (i, v) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, ")")
    }
}

/// Binomial coefficient with overflow detection.
pub fn binomial(n: u64, k: u64) -> Result<i64> {
    if k > n {
        return Ok(0);
    }
    let k = k.min(n - k);
    let mut acc: i128 = 1;
    for i in 0..k {
        // exact at every step: acc holds C(n, i+1) * (i+1)! / (i+1)! ... the
        // running product (n-i)...(n) / 1...(i+1) stays integral.
        acc = acc
            .checked_mul((n - i) as i128)
            .ok_or(Error::Overflow)?
            / (i as i128 + 1);
        if acc > i64::MAX as i128 {
            return Err(Error::Overflow);
        }
    }
    Ok(acc as i64)
}

/// Checked integer power, used for the scaling factors of formula
/// comparisons.
pub fn checked_pow(base: i64, exp: u32) -> Result<i64> {
    base.checked_pow(exp).ok_or(Error::Overflow)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomials_match_pascal() {
        // independent oracle: Pascal's triangle built additively
        let mut row: Vec<i64> = vec![1];
        for n in 0..=40u64 {
            for (k, &expect) in row.iter().enumerate() {
                assert_eq!(binomial(n, k as u64).unwrap(), expect, "C({n},{k})");
            }
            let mut next = vec![1i64];
            for w in row.windows(2) {
                next.push(w[0] + w[1]);
            }
            next.push(1);
            row = next;
        }
        assert_eq!(binomial(5, 9).unwrap(), 0);
    }

    #[test]
    fn binomial_overflow_is_reported() {
        assert!(binomial(100, 50).is_err());
        // C(66, 33) is the last central binomial below i64::MAX
        assert!(binomial(66, 33).is_ok());
        assert!(binomial(68, 34).is_err());
    }

    #[test]
    fn product_convolves() {
        let a = GradedVector::new(vec![1, 1, 2]);
        let b = GradedVector::new(vec![1, 0, 0, 1]);
        assert_eq!(
            a.product(&b).unwrap(),
            GradedVector::new(vec![1, 1, 2, 1, 1, 2])
        );
    }

    #[test]
    fn palindromy_and_reversal() {
        assert!(GradedVector::new(vec![1, 4, 1, 2]).reversed() == GradedVector::new(vec![2, 1, 4, 1]));
        assert!(GradedVector::new(vec![0, 3, 3, 0]).is_palindromic());
        assert!(!GradedVector::new(vec![1, 4, 1, 2]).is_palindromic());
    }

    #[test]
    fn alternating_sum_signs() {
        let v = GradedVector::new(vec![1, 1, 2, 1]);
        assert_eq!(v.alternating_sum().unwrap(), 1 - 1 + 2 - 1);
    }

    #[test]
    fn product_overflow_is_reported() {
        let big = GradedVector::new(vec![i64::MAX, i64::MAX]);
        assert_eq!(big.product(&big), Err(Error::Overflow));
        assert_eq!(big.scaled(2), Err(Error::Overflow));
        assert_eq!(big.total(), Err(Error::Overflow));
    }
}
