//! Exact computation of singularity spectra, monodromy eigenvalue data and
//! motivic nearby-fiber classes.
//!
//! The crate is organised bottom-up:
//!
//! * [`polyalg`]: exact rationals, sparse multivariate polynomials, the input
//!   parser and weighted-degree bookkeeping.
//! * [`milnor`]: Gröbner bases for the graded reverse lexicographic order,
//!   standard monomials of the Jacobian ideal and the Milnor number.
//! * [`spectrum`]: fractional-exponent polynomials, the spectrum by the
//!   closed product formula and by the monomial-basis route, monodromy
//!   eigenvalues under both conventions and characteristic polynomials.
//! * [`motivic`]: equivariant Hodge classes, simple-normal-crossing models and
//!   the nearby-fiber stratum sums.
//!
//! All arithmetic is exact. Nothing in the crate uses floating point.

pub mod milnor;
pub mod motivic;
pub mod polyalg;
pub mod spectrum;

pub use milnor::{
    brieskorn_pham, buchberger, check_isolated, infer_isolated_weights, milnor_basis,
    milnor_number, GroebnerBasis, MilnorBasis, MilnorError,
};
pub use motivic::{
    class_add, class_mul, component_count_cstar, covering_degree, euler_specialization,
    milnor_sp_prime, nearby_fiber_class, reduce_class, sp_by_hodge_filtration, sp_prime_of_class,
    ComponentKind, EquivClass, HodgeKey, MotivicError, NearbyVariant, SncComponent, SncModel,
    Stratum,
};
pub use polyalg::{
    infer_weights, is_weighted_homogeneous, jacobian_generators, parse_polynomial, weighted_degree,
    ExponentVector, PolyError, Polynomial, Rational, WeightVector,
};
pub use spectrum::{
    char_poly, check_symmetry, eigenvalues_gamma_c, eigenvalues_geometric, iota, sp_at_infinity,
    sp_from_basis, sp_product_formula, sp_twist, EigenMultiset, FracPoly, Residue, SpectrumError,
};

/// Model files shipped with the crate.
pub mod fixtures {
    /// Semistable two-component degeneration of elliptic curves (Kodaira
    /// `I₂`), evaluated with [`NearbyVariant::TotalSpace`](crate::NearbyVariant).
    pub const I2_ELLIPTIC: &str = include_str!("../fixtures/i2_elliptic.json");
    /// Embedded resolution of the cusp `x² + y³` restricted to the strata
    /// over the origin, evaluated with [`NearbyVariant::Local`](crate::NearbyVariant).
    pub const CUSP_LOCAL: &str = include_str!("../fixtures/cusp_local.json");
}
