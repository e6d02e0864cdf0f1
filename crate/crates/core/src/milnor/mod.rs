//! Standard monomials of the Jacobian ideal and the Milnor number.
//!
//! For a weighted-homogeneous `f` with an isolated singularity at the origin,
//! the monomials outside the leading-term ideal of `(∂f/∂x_1, …, ∂f/∂x_n)`
//! form a basis `g_1, …, g_μ` of the Milnor algebra. The forms `g_i dx` are
//! eigenvectors of `∂_t t` on the Brieskorn lattice, which is what the
//! spectrum module reads off.

mod groebner;

pub use groebner::{buchberger, normal_form, s_polynomial, GroebnerBasis, MonomialOrder};

use num_traits::One;
use thiserror::Error;

use crate::polyalg::{
    infer_weights, is_weighted_homogeneous, jacobian_generators, weighted_degree, ExponentVector,
    PolyError, Polynomial, Rational, WeightVector,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MilnorError {
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error("f is not weighted homogeneous of degree 1 for weights ({weights})")]
    NotWeightedHomogeneous { weights: String },
    #[error("the singularity is not isolated: no power of `{variable}` lies in the Jacobian leading-term ideal")]
    NonIsolatedSingularity { variable: String },
    #[error("internal consistency failure: {basis_count} standard monomials but ∏(1/w_i − 1) = {closed_form}")]
    ConsistencyFailure { basis_count: usize, closed_form: String },
}

/// Monomial basis of the Milnor algebra, sorted by weighted degree and then
/// by ascending grevlex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MilnorBasis {
    monomials: Vec<ExponentVector>,
    weights: WeightVector,
    groebner: GroebnerBasis,
}

impl MilnorBasis {
    pub fn monomials(&self) -> &[ExponentVector] {
        &self.monomials
    }

    pub fn weights(&self) -> &WeightVector {
        &self.weights
    }

    pub fn dimension(&self) -> usize {
        self.weights.len()
    }

    pub fn groebner(&self) -> &GroebnerBasis {
        &self.groebner
    }

    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }
}

fn pure_power_bounds(f: &Polynomial, lms: &[ExponentVector]) -> Result<Vec<u32>, MilnorError> {
    // bound[i] = smallest k with x_i^k a leading monomial (0 for the unit ideal)
    let mut bounds: Vec<Option<u32>> = vec![None; f.nvars()];
    for m in lms {
        if m.is_one() {
            bounds.iter_mut().for_each(|b| *b = Some(0));
        } else if let Some((i, k)) = m.as_pure_power() {
            bounds[i] = Some(bounds[i].map_or(k, |b| b.min(k)));
        }
    }
    bounds
        .into_iter()
        .enumerate()
        .map(|(i, b)| {
            b.ok_or_else(|| MilnorError::NonIsolatedSingularity { variable: f.vars()[i].clone() })
        })
        .collect()
}

/// Checks that the Jacobian ideal of `f` has finite colength, independently
/// of any weights.
pub fn check_isolated(f: &Polynomial) -> Result<GroebnerBasis, MilnorError> {
    let groebner = buchberger(&jacobian_generators(f));
    pure_power_bounds(f, &groebner.leading_monomials())?;
    Ok(groebner)
}

/// [`infer_weights`], except that a polynomial whose weights are not
/// determined is reported as non-isolated when it is. An isolated
/// weighted-homogeneous singularity determines its weights, so the
/// underdetermined case is normally a non-isolated one.
pub fn infer_isolated_weights(f: &Polynomial) -> Result<WeightVector, MilnorError> {
    match infer_weights(f) {
        Err(e @ PolyError::Underdetermined { .. }) => {
            check_isolated(f)?;
            Err(e.into())
        }
        other => Ok(other?),
    }
}

/// Enumerates the standard monomials of the Jacobian ideal of `f`.
pub fn milnor_basis(f: &Polynomial, w: &WeightVector) -> Result<MilnorBasis, MilnorError> {
    if !is_weighted_homogeneous(f, w)? {
        return Err(MilnorError::NotWeightedHomogeneous { weights: w.to_string() });
    }
    let n = f.nvars();
    let groebner = buchberger(&jacobian_generators(f));
    let lms = groebner.leading_monomials();
    let bounds = pure_power_bounds(f, &lms)?;

    let mut monomials = Vec::new();
    if bounds.iter().all(|&b| b > 0) {
        let mut current = vec![0u32; n];
        'odometer: loop {
            let m = ExponentVector::new(current.clone());
            if !lms.iter().any(|lm| lm.divides(&m)) {
                monomials.push(m);
            }
            for i in 0..n {
                current[i] += 1;
                if current[i] < bounds[i] {
                    continue 'odometer;
                }
                current[i] = 0;
            }
            break;
        }
    }

    let mut keyed: Vec<(Rational, ExponentVector)> = monomials
        .into_iter()
        .map(|m| Ok((weighted_degree(&m, w)?, m)))
        .collect::<Result<_, PolyError>>()?;
    keyed.sort_by(|a, b| a.0.cmp(&b.0).then_with(|| a.1.grevlex_cmp(&b.1)));

    Ok(MilnorBasis {
        monomials: keyed.into_iter().map(|(_, m)| m).collect(),
        weights: w.clone(),
        groebner,
    })
}

/// Milnor number `μ`, cross-checked against `∏ (1/w_i − 1)`.
pub fn milnor_number(f: &Polynomial, w: &WeightVector) -> Result<usize, MilnorError> {
    let basis = milnor_basis(f, w)?;
    check_count(basis.len(), w)?;
    Ok(basis.len())
}

pub(crate) fn check_count(count: usize, w: &WeightVector) -> Result<(), MilnorError> {
    let closed = w.milnor_closed_form();
    if closed != Rational::from_integer(count.into()) {
        return Err(MilnorError::ConsistencyFailure {
            basis_count: count,
            closed_form: closed.to_string(),
        });
    }
    Ok(())
}

impl MilnorBasis {
    /// Renders each monomial, e.g. `["1", "y"]`.
    pub fn render(&self, vars: &[String]) -> Vec<String> {
        self.monomials.iter().map(|m| m.render(vars)).collect()
    }
}

/// Exact weights `1/a_i` and the polynomial `Σ x_i^{a_i}` over variables
/// `x1, x2, …`.
pub fn brieskorn_pham(exponents: &[u32]) -> (Polynomial, WeightVector) {
    let vars: Vec<String> = (1..=exponents.len()).map(|i| format!("x{i}")).collect();
    let f = Polynomial::from_terms(
        &vars,
        exponents
            .iter()
            .enumerate()
            .map(|(i, &a)| (ExponentVector::pure_power(exponents.len(), i, a), Rational::one())),
    );
    let w = WeightVector::brieskorn_pham(exponents).expect("exponents ≥ 2");
    (f, w)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyalg::parse_polynomial;

    fn vars(names: &[&str]) -> Vec<String> {
        names.iter().map(|s| s.to_string()).collect()
    }

    fn basis_of(text: &str, names: &[&str], w: &str) -> Result<Vec<String>, MilnorError> {
        let v = vars(names);
        let f = parse_polynomial(text, &v).unwrap();
        milnor_basis(&f, &w.parse().unwrap()).map(|b| b.render(&v))
    }

    #[test]
    fn ordinary_double_point() {
        assert_eq!(basis_of("x^2 + y^2", &["x", "y"], "1/2,1/2").unwrap(), vec!["1"]);
    }

    #[test]
    fn cusp_basis() {
        assert_eq!(basis_of("x^2 + y^3", &["x", "y"], "1/2,1/3").unwrap(), vec!["1", "y"]);
    }

    #[test]
    fn fermat_cubic_basis() {
        assert_eq!(
            basis_of("x^3 + y^3", &["x", "y"], "1/3,1/3").unwrap(),
            vec!["1", "y", "x", "x*y"]
        );
    }

    #[test]
    fn d4_and_e7_bases() {
        assert_eq!(
            basis_of("x^2*y + y^3", &["x", "y"], "1/3,1/3").unwrap(),
            vec!["1", "y", "x", "y^2"]
        );
        // E7: μ = 7
        assert_eq!(basis_of("x^3 + x*y^3", &["x", "y"], "1/3,2/9").unwrap().len(), 7);
    }

    #[test]
    fn non_isolated_and_non_homogeneous_inputs() {
        assert_eq!(
            basis_of("x^2*y", &["x", "y"], "1/4,1/4").unwrap_err(),
            MilnorError::NotWeightedHomogeneous { weights: "1/4,1/4".into() }
        );
        assert_eq!(
            basis_of("x^2*y", &["x", "y"], "1/4,1/2").unwrap_err(),
            MilnorError::NonIsolatedSingularity { variable: "y".into() }
        );
        assert!(matches!(
            basis_of("x^2 + y^3", &["x", "y", "z"], "1/2,1/3"),
            Err(MilnorError::Poly(PolyError::LengthMismatch { .. }))
        ));
    }

    #[test]
    fn weight_inference_reports_non_isolated_monomials() {
        let v = vars(&["x", "y"]);
        let f = parse_polynomial("x^2*y", &v).unwrap();
        assert_eq!(
            infer_isolated_weights(&f).unwrap_err(),
            MilnorError::NonIsolatedSingularity { variable: "y".into() }
        );
        let cusp = parse_polynomial("x^2 + y^3", &v).unwrap();
        assert_eq!(infer_isolated_weights(&cusp).unwrap(), "1/2,1/3".parse().unwrap());
        assert!(check_isolated(&cusp).is_ok());
        // x^2 alone in two variables: underdetermined and not isolated in y
        let line = parse_polynomial("x^2", &v).unwrap();
        assert_eq!(
            infer_isolated_weights(&line).unwrap_err(),
            MilnorError::NonIsolatedSingularity { variable: "y".into() }
        );
    }

    #[test]
    fn milnor_numbers() {
        let v = vars(&["x", "y", "z"]);
        let num = |t: &str, n: usize, w: &str| {
            milnor_number(&parse_polynomial(t, &v[..n]).unwrap(), &w.parse().unwrap()).unwrap()
        };
        assert_eq!(num("x^2 + y^3", 2, "1/2,1/3"), 2);
        assert_eq!(num("x^2 + y^2 + z^2", 3, "1/2,1/2,1/2"), 1);
        assert_eq!(num("x^3 + y^3", 2, "1/3,1/3"), 4);
    }

    #[test]
    fn count_check_flags_disagreement() {
        let w: WeightVector = "1/2,1/3".parse().unwrap();
        assert!(check_count(2, &w).is_ok());
        assert!(matches!(check_count(3, &w), Err(MilnorError::ConsistencyFailure { .. })));
    }
}
