use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use super::univariate::{cyclotomic, IntPoly};
use super::{FracPoly, SpectrumError};
use crate::polyalg::{ExponentVector, Polynomial, Rational};

/// An angle `θ ∈ [0, 1)` standing for the eigenvalue `exp(2πiθ)`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Residue(Rational);

impl Residue {
    /// Reduces `r` mod 1 into `[0, 1)`.
    pub fn of(r: &Rational) -> Self {
        Residue(r - r.floor())
    }

    pub fn zero() -> Self {
        Residue(Rational::zero())
    }

    pub fn value(&self) -> &Rational {
        &self.0
    }

    /// `−θ mod 1`, the inverse eigenvalue.
    pub fn inverse(&self) -> Self {
        Residue::of(&-&self.0)
    }

    /// `θ + θ' mod 1`, the product of eigenvalues.
    pub fn add(&self, other: &Self) -> Self {
        Residue::of(&(&self.0 + &other.0))
    }

    /// Order of the eigenvalue as a root of unity.
    pub fn order(&self) -> BigInt {
        self.0.denom().clone()
    }
}

impl fmt::Display for Residue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Multiset of eigenvalues `exp(2πiθ)` keyed by their angle `θ`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct EigenMultiset(BTreeMap<Residue, u64>);

impl EigenMultiset {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_entries<I: IntoIterator<Item = (Residue, u64)>>(entries: I) -> Self {
        let mut e = Self::new();
        for (r, c) in entries {
            e.insert(r, c);
        }
        e
    }

    pub fn insert(&mut self, r: Residue, multiplicity: u64) {
        if multiplicity > 0 {
            *self.0.entry(r).or_insert(0) += multiplicity;
        }
    }

    pub fn entries(&self) -> &BTreeMap<Residue, u64> {
        &self.0
    }

    pub fn multiplicity(&self, r: &Residue) -> u64 {
        self.0.get(r).copied().unwrap_or(0)
    }

    pub fn total(&self) -> u64 {
        self.0.values().sum()
    }

    /// Eigenvalue angles `{α mod 1}` read directly off the exponents of `s`,
    /// i.e. eigenvalues `exp(2πiα)`.
    pub fn from_exponents(s: &FracPoly) -> Result<Self, SpectrumError> {
        let mut out = Self::new();
        for (alpha, &c) in s.terms() {
            let m = u64::try_from(c).map_err(|_| SpectrumError::NegativeMultiplicity {
                exponent: alpha.to_string(),
                coefficient: c,
            })?;
            out.insert(Residue::of(alpha), m);
        }
        Ok(out)
    }
}

impl fmt::Display for EigenMultiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, (r, c)) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{r}: {c}")?;
        }
        f.write_str("}")
    }
}

/// Local-system monodromy eigenvalues: each `c·t^α` of `Sp'` contributes
/// multiplicity `c` at `exp(−2πiα)`, i.e. angle `−α mod 1`.
pub fn eigenvalues_gamma_c(sprime: &FracPoly) -> Result<EigenMultiset, SpectrumError> {
    let mut out = EigenMultiset::new();
    for (alpha, &c) in sprime.terms() {
        let m = u64::try_from(c).map_err(|_| SpectrumError::NegativeMultiplicity {
            exponent: alpha.to_string(),
            coefficient: c,
        })?;
        out.insert(Residue::of(&-alpha), m);
    }
    Ok(out)
}

/// Converts between the local-system and the geometric convention
/// (`γ^* = γ_c^{−1}`): every angle is negated mod 1. An involution.
pub fn eigenvalues_geometric(e: &EigenMultiset) -> EigenMultiset {
    EigenMultiset::from_entries(e.0.iter().map(|(r, &c)| (r.inverse(), c)))
}

/// `∏ (T − exp(2πiθ))` over a Galois-stable multiset, as `∏_v Φ_v(T)^{c_v}`
/// in the single variable `T`.
pub fn char_poly(e: &EigenMultiset) -> Result<Polynomial, SpectrumError> {
    // c_v per denominator v, checking every primitive v-th root has it
    let mut by_order: BTreeMap<u64, u64> = BTreeMap::new();
    for (r, &c) in &e.0 {
        let v = r.order().to_u64().ok_or_else(|| SpectrumError::NotGaloisStable {
            residue: r.to_string(),
            missing: "order exceeds 64 bits".into(),
        })?;
        if let Some(&prev) = by_order.get(&v) {
            if prev != c {
                return Err(SpectrumError::NotGaloisStable {
                    residue: r.to_string(),
                    missing: format!("conjugates have multiplicity {prev}, this one {c}"),
                });
            }
            continue;
        }
        for u in 0..v {
            if u.gcd(&v) != 1 {
                continue;
            }
            let conj = Residue(Rational::new(u.into(), v.into()));
            if e.multiplicity(&conj) != c {
                return Err(SpectrumError::NotGaloisStable {
                    residue: r.to_string(),
                    missing: format!(
                        "{conj} has multiplicity {}, expected {c}",
                        e.multiplicity(&conj)
                    ),
                });
            }
        }
        by_order.insert(v, c);
    }

    let product =
        by_order.iter().fold(IntPoly::one(), |acc, (&v, &c)| acc.mul(&cyclotomic(v).pow(c)));
    let vars = vec!["T".to_string()];
    Ok(Polynomial::from_terms(
        &vars,
        product
            .coeffs()
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| (ExponentVector::new(vec![k as u32]), Rational::from_integer(c.clone()))),
    ))
}

/// Returns whether every coefficient of `p` is an integer.
pub fn has_integer_coefficients(p: &Polynomial) -> bool {
    p.terms().values().all(|c| c.is_integer())
}

/// Degree in the first variable; `None` for zero.
pub fn univariate_degree(p: &Polynomial) -> Option<u32> {
    p.terms().keys().map(|e| e.as_slice()[0]).max()
}
