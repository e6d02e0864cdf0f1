use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_integer::Integer;
use num_traits::{One, Zero};

use crate::polyalg::Rational;

/// Finite formal sum `Σ n_α t^α` with rational exponents and integer
/// coefficients, an element of `ℤ[t^{1/m}, t^{-1/m}]` for some `m`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct FracPoly(BTreeMap<Rational, i64>);

impl FracPoly {
    pub fn zero() -> Self {
        FracPoly(BTreeMap::new())
    }

    pub fn one() -> Self {
        Self::monomial(Rational::zero(), 1)
    }

    /// `c · t^exponent`.
    pub fn monomial(exponent: Rational, c: i64) -> Self {
        let mut p = Self::zero();
        p.add_term(exponent, c);
        p
    }

    pub fn from_terms<I: IntoIterator<Item = (Rational, i64)>>(terms: I) -> Self {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    pub fn add_term(&mut self, exponent: Rational, c: i64) {
        if c == 0 {
            return;
        }
        match self.0.entry(exponent) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if *o.get() == 0 {
                    o.remove();
                }
            }
        }
    }

    pub fn terms(&self) -> &BTreeMap<Rational, i64> {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn coefficient(&self, exponent: &Rational) -> i64 {
        self.0.get(exponent).copied().unwrap_or(0)
    }

    /// Value at `t = 1`.
    pub fn coefficient_sum(&self) -> i64 {
        self.0.values().sum()
    }

    pub fn min_exponent(&self) -> Option<&Rational> {
        self.0.keys().next()
    }

    pub fn max_exponent(&self) -> Option<&Rational> {
        self.0.keys().next_back()
    }

    /// Multiplication by `t^shift`.
    pub fn shift(&self, shift: &Rational) -> Self {
        FracPoly(self.0.iter().map(|(e, &c)| (e + shift, c)).collect())
    }

    /// Exponent negation `t^α ↦ t^{−α}`.
    pub fn negate_exponents(&self) -> Self {
        FracPoly(self.0.iter().map(|(e, &c)| (-e, c)).collect())
    }

    pub fn scale(&self, k: i64) -> Self {
        if k == 0 {
            return Self::zero();
        }
        FracPoly(self.0.iter().map(|(e, &c)| (e.clone(), c * k)).collect())
    }

    /// Least common denominator of all exponents (1 for the zero polynomial).
    pub fn exponent_denominator(&self) -> num_bigint::BigInt {
        self.0.keys().fold(num_bigint::BigInt::one(), |acc, e| acc.lcm(e.denom()))
    }
}

impl Add for &FracPoly {
    type Output = FracPoly;

    fn add(self, rhs: &FracPoly) -> FracPoly {
        let mut out = self.clone();
        for (e, &c) in &rhs.0 {
            out.add_term(e.clone(), c);
        }
        out
    }
}

impl Sub for &FracPoly {
    type Output = FracPoly;

    fn sub(self, rhs: &FracPoly) -> FracPoly {
        self + &(-rhs)
    }
}

impl Neg for &FracPoly {
    type Output = FracPoly;

    fn neg(self) -> FracPoly {
        self.scale(-1)
    }
}

impl Mul for &FracPoly {
    type Output = FracPoly;

    fn mul(self, rhs: &FracPoly) -> FracPoly {
        let mut out = FracPoly::zero();
        for (e1, &c1) in &self.0 {
            for (e2, &c2) in &rhs.0 {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

fn render_exponent(e: &Rational) -> Option<String> {
    if e.is_zero() {
        None
    } else if e.is_one() {
        Some("t".to_string())
    } else if e.is_integer() && *e > Rational::zero() {
        Some(format!("t^{e}"))
    } else {
        Some(format!("t^({e})"))
    }
}

/// Canonical rendering: ascending exponents, `c*t^(p/q)`, unit coefficients
/// elided, integer exponents without denominator, `t^1` as `t`, negative
/// coefficients joined with ` - `. Examples: `t^(5/6) + t^(7/6)`,
/// `t^(2/3) + 2*t + t^(4/3)`, `1 - t`, `0`.
impl fmt::Display for FracPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("0");
        }
        for (i, (e, &c)) in self.0.iter().enumerate() {
            let abs = c.unsigned_abs();
            match (i, c < 0) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            match (render_exponent(e), abs) {
                (None, _) => write!(f, "{abs}")?,
                (Some(t), 1) => f.write_str(&t)?,
                (Some(t), _) => write!(f, "{abs}*{t}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    #[test]
    fn canonical_rendering() {
        let cusp = FracPoly::from_terms([(r(7, 6), 1), (r(5, 6), 1)]);
        assert_eq!(cusp.to_string(), "t^(5/6) + t^(7/6)");
        let fermat = FracPoly::from_terms([(r(2, 3), 1), (r(1, 1), 2), (r(4, 3), 1)]);
        assert_eq!(fermat.to_string(), "t^(2/3) + 2*t + t^(4/3)");
        let mixed =
            FracPoly::from_terms([(r(0, 1), 1), (r(1, 1), -1), (r(2, 1), 3), (r(-1, 2), -2)]);
        assert_eq!(mixed.to_string(), "-2*t^(-1/2) + 1 - t + 3*t^2");
        assert_eq!(FracPoly::zero().to_string(), "0");
        assert_eq!(FracPoly::monomial(r(-1, 1), 1).to_string(), "t^(-1)");
        assert_eq!(FracPoly::monomial(r(3, 2), 1).to_string(), "t^(3/2)");
    }

    #[test]
    fn cancellation_drops_terms() {
        let a = FracPoly::from_terms([(r(1, 2), 3), (r(1, 3), 1)]);
        let b = FracPoly::from_terms([(r(1, 2), 3)]);
        assert_eq!(&a - &b, FracPoly::monomial(r(1, 3), 1));
        assert!((&a - &a).is_zero());
        assert!((&a - &a).terms().is_empty());
    }

    #[test]
    fn product_adds_exponents() {
        let a = FracPoly::from_terms([(r(1, 3), 1), (r(2, 3), 1)]);
        assert_eq!(&a * &a, FracPoly::from_terms([(r(2, 3), 1), (r(1, 1), 2), (r(4, 3), 1)]));
        assert_eq!(a.exponent_denominator(), 3.into());
    }
}
