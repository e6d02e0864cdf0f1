//! Dense one-variable polynomials over the integers.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

/// Coefficients in ascending degree; no trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct IntPoly(Vec<BigInt>);

impl IntPoly {
    pub(crate) fn from_coeffs(mut c: Vec<BigInt>) -> Self {
        while c.last().is_some_and(Zero::is_zero) {
            c.pop();
        }
        IntPoly(c)
    }

    pub(crate) fn one() -> Self {
        IntPoly(vec![BigInt::one()])
    }

    /// `Σ c·s^k` over the given `(k, c)` pairs.
    pub(crate) fn sparse(terms: &[(usize, i64)]) -> Self {
        let deg = terms.iter().map(|&(k, _)| k).max().unwrap_or(0);
        let mut c = vec![BigInt::zero(); deg + 1];
        for &(k, v) in terms {
            c[k] += v;
        }
        Self::from_coeffs(c)
    }

    pub(crate) fn coeffs(&self) -> &[BigInt] {
        &self.0
    }

    pub(crate) fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub(crate) fn mul(&self, other: &Self) -> Self {
        if self.0.is_empty() || other.0.is_empty() {
            return IntPoly(Vec::new());
        }
        let mut c = vec![BigInt::zero(); self.0.len() + other.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.0.iter().enumerate() {
                c[i + j] += a * b;
            }
        }
        Self::from_coeffs(c)
    }

    pub(crate) fn pow(&self, k: u64) -> Self {
        (0..k).fold(Self::one(), |acc, _| acc.mul(self))
    }

    /// Quotient when `divisor` divides `self` exactly over ℤ, `None`
    /// otherwise.
    pub(crate) fn div_exact(&self, divisor: &Self) -> Option<Self> {
        let dd = divisor.degree()?;
        let lead = &divisor.0[dd];
        let mut rem = self.0.clone();
        if rem.len() <= dd {
            return if rem.iter().all(Zero::is_zero) { Some(IntPoly(Vec::new())) } else { None };
        }
        let mut q = vec![BigInt::zero(); rem.len() - dd];
        for k in (0..q.len()).rev() {
            let top = &rem[k + dd];
            if top.is_zero() {
                continue;
            }
            let (quot, r) = top.div_rem(lead);
            if !r.is_zero() {
                return None;
            }
            for (j, d) in divisor.0.iter().enumerate() {
                rem[k + j] -= &quot * d;
            }
            q[k] = quot;
        }
        if rem.iter().all(Zero::is_zero) {
            Some(Self::from_coeffs(q))
        } else {
            None
        }
    }
}

/// The `v`-th cyclotomic polynomial, from `T^v − 1 = ∏_{d | v} Φ_d`.
pub(crate) fn cyclotomic(v: u64) -> IntPoly {
    assert!(v >= 1);
    let mut acc = IntPoly::sparse(&[(v as usize, 1), (0, -1)]);
    for d in 1..v {
        if v.is_multiple_of(d) {
            acc = acc.div_exact(&cyclotomic(d)).expect("cyclotomic factors divide T^v - 1");
        }
    }
    acc
}
