//! Spectra of weighted-homogeneous isolated singularities and monodromy
//! eigenvalues.
//!
//! Two routes compute the same spectrum and are compared exactly:
//!
//! * [`sp_product_formula`]: `Sp(f, 0) = ∏_i (t − t^{w_i}) / (t^{w_i} − 1)`,
//!   evaluated by exact division in `ℤ[t^{1/m}]`.
//! * [`sp_from_basis`]: every standard monomial `g` of the Jacobian ideal
//!   contributes `t^{ℓ(g) + Σ w_i}` where `ℓ` is the weighted degree.
//!
//! # Eigenvalue conventions
//!
//! Angles are stored as residues `θ ∈ [0, 1)` for the eigenvalue `exp(2πiθ)`.
//!
//! | operator                                  | eigenvalue of `t^α` in `Sp'` |
//! |-------------------------------------------|------------------------------|
//! | local-system monodromy `γ_c` (`T`)        | `exp(−2πiα)`                 |
//! | geometric monodromy `γ^* = γ_c^{−1}`      | `exp(+2πiα)`                 |
//!
//! [`eigenvalues_gamma_c`] produces the first row and
//! [`eigenvalues_geometric`] converts between the two.

mod eigen;
mod fracpoly;
mod univariate;

pub use eigen::{
    char_poly, eigenvalues_gamma_c, eigenvalues_geometric, has_integer_coefficients,
    univariate_degree, EigenMultiset, Residue,
};
pub use fracpoly::FracPoly;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive};
use thiserror::Error;

use crate::milnor::{milnor_basis, MilnorBasis, MilnorError};
use crate::polyalg::{weighted_degree, Polynomial, Rational, WeightVector};
use univariate::IntPoly;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpectrumError {
    #[error(transparent)]
    Milnor(#[from] MilnorError),
    #[error("∏ (t − t^w_i)/(t^w_i − 1) is not a polynomial in t^(1/m) for weights ({weights})")]
    NonExactDivision { weights: String },
    #[error("coefficient {coefficient} at t^({exponent}) is negative; virtual classes are not eigenvalue multisets")]
    NegativeMultiplicity { exponent: String, coefficient: i64 },
    #[error("eigenvalue multiset is not Galois-stable at {residue}: {missing}")]
    NotGaloisStable { residue: String, missing: String },
}

/// `ι(t^α) = t^{−α}`.
pub fn iota(s: &FracPoly) -> FracPoly {
    s.negate_exponents()
}

/// `Sp(f, 0) = ∏_i (t − t^{w_i}) / (t^{w_i} − 1)`.
///
/// With `m` the least common denominator of the weights and `s = t^{1/m}`,
/// the numerator and denominator products are formed in `ℤ[s]` and divided
/// once. Individual factors need not be polynomials (for `w_i = 2/9` the
/// factor is not), only their product.
pub fn sp_product_formula(w: &WeightVector) -> Result<FracPoly, SpectrumError> {
    let non_exact = || SpectrumError::NonExactDivision { weights: w.to_string() };
    let m: BigInt = w.as_slice().iter().fold(BigInt::one(), |acc, wi| acc.lcm(wi.denom()));
    let m_usize = m.to_usize().ok_or_else(non_exact)?;

    let mut numerator = IntPoly::one();
    let mut denominator = IntPoly::one();
    for wi in w.as_slice() {
        let k = (wi * Rational::from_integer(m.clone()))
            .to_integer()
            .to_usize()
            .ok_or_else(non_exact)?;
        numerator = numerator.mul(&IntPoly::sparse(&[(m_usize, 1), (k, -1)]));
        denominator = denominator.mul(&IntPoly::sparse(&[(k, 1), (0, -1)]));
    }
    let quotient = numerator.div_exact(&denominator).ok_or_else(non_exact)?;

    let mut out = FracPoly::zero();
    for (j, c) in quotient.coeffs().iter().enumerate() {
        let c = c.to_i64().ok_or_else(non_exact)?;
        out.add_term(Rational::new(j.into(), m.clone()), c);
    }
    Ok(out)
}

/// `Σ_g t^{ℓ(g) + Σ_i w_i}` over the standard monomials `g` of the basis.
pub fn sp_from_basis(b: &MilnorBasis) -> FracPoly {
    let shift = b.weights().sum();
    let mut out = FracPoly::zero();
    for g in b.monomials() {
        let l = weighted_degree(g, b.weights()).expect("basis monomials match the weights");
        out.add_term(l + &shift, 1);
    }
    out
}

/// `Sp = t^n ι(Sp')`.
pub fn sp_twist(sprime: &FracPoly, n: i64) -> FracPoly {
    iota(sprime).shift(&Rational::from_integer(n.into()))
}

/// True iff `sp = t^n ι(sp)`, i.e. the coefficient at `α` equals the one at
/// `n − α` for every `α`.
pub fn check_symmetry(sp: &FracPoly, n: i64) -> bool {
    *sp == sp_twist(sp, n)
}

/// Spectrum at infinity of a weighted-homogeneous polynomial with an
/// isolated singularity at the origin, where it agrees with the local
/// product formula. Other polynomials are rejected.
pub fn sp_at_infinity(f: &Polynomial, w: &WeightVector) -> Result<FracPoly, SpectrumError> {
    milnor_basis(f, w)?;
    sp_product_formula(w)
}
