use std::fmt;
use std::str::FromStr;

use num_traits::{One, Signed, Zero};

use super::{ExponentVector, PolyError, Polynomial, Rational};

/// Weights `(w_1, …, w_n)`, each strictly between 0 and 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WeightVector(Vec<Rational>);

impl WeightVector {
    pub fn new(weights: Vec<Rational>) -> Result<Self, PolyError> {
        for (index, w) in weights.iter().enumerate() {
            if !w.is_positive() || *w >= Rational::one() {
                return Err(PolyError::WeightOutOfRange { index, value: w.to_string() });
            }
        }
        Ok(WeightVector(weights))
    }

    /// Weights `1/a_i` of the Brieskorn–Pham polynomial `Σ x_i^{a_i}`.
    pub fn brieskorn_pham(exponents: &[u32]) -> Result<Self, PolyError> {
        Self::new(exponents.iter().map(|&a| Rational::new(1.into(), a.into())).collect())
    }

    pub fn as_slice(&self) -> &[Rational] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn sum(&self) -> Rational {
        self.0.iter().fold(Rational::zero(), |acc, w| acc + w)
    }

    /// `∏ (1/w_i − 1)`, the closed-form Milnor number.
    pub fn milnor_closed_form(&self) -> Rational {
        self.0.iter().fold(Rational::one(), |acc, w| acc * (w.recip() - Rational::one()))
    }

    /// Concatenation, used for Thom–Sebastiani sums `f(x) + g(y)`.
    pub fn concat(&self, other: &Self) -> Self {
        WeightVector(self.0.iter().chain(&other.0).cloned().collect())
    }
}

impl fmt::Display for WeightVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        f.write_str(&parts.join(","))
    }
}

/// Parses a comma-separated list such as `1/2,1/3`.
impl FromStr for WeightVector {
    type Err = PolyError;

    fn from_str(s: &str) -> Result<Self, PolyError> {
        let mut weights = Vec::new();
        let mut offset = 0;
        for part in s.split(',') {
            let trimmed = part.trim();
            let w = Rational::from_str(trimmed).map_err(|_| {
                PolyError::Parse(super::ParseError::Syntax {
                    offset,
                    message: format!("`{trimmed}` is not a rational number"),
                })
            })?;
            weights.push(w);
            offset += part.len() + 1;
        }
        Self::new(weights)
    }
}

/// `Σ_i w_i m_i`, exactly.
pub fn weighted_degree(m: &ExponentVector, w: &WeightVector) -> Result<Rational, PolyError> {
    if m.len() != w.len() {
        return Err(PolyError::LengthMismatch { expected: w.len(), found: m.len() });
    }
    Ok(m.as_slice()
        .iter()
        .zip(w.as_slice())
        .fold(Rational::zero(), |acc, (&e, wi)| acc + wi * Rational::from_integer(e.into())))
}

/// True iff every term of `f` has weighted degree exactly 1. The zero
/// polynomial qualifies vacuously.
pub fn is_weighted_homogeneous(f: &Polynomial, w: &WeightVector) -> Result<bool, PolyError> {
    if f.nvars() != w.len() {
        return Err(PolyError::LengthMismatch { expected: w.len(), found: f.nvars() });
    }
    for m in f.terms().keys() {
        if !weighted_degree(m, w)?.is_one() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Solves `Σ_i w_i m_i = 1` over every exponent vector `m` of `f`.
///
/// Succeeds only when the system has full rank `n` and its solution lies in
/// the open unit cube.
pub fn infer_weights(f: &Polynomial) -> Result<WeightVector, PolyError> {
    if f.is_zero() {
        return Err(PolyError::ZeroPolynomial);
    }
    let n = f.nvars();
    // augmented rows [m_1 … m_n | 1]
    let mut rows: Vec<Vec<Rational>> = f
        .terms()
        .keys()
        .map(|m| {
            m.as_slice()
                .iter()
                .map(|&e| Rational::from_integer(e.into()))
                .chain(std::iter::once(Rational::one()))
                .collect()
        })
        .collect();

    let mut rank = 0;
    let mut pivot_cols = Vec::new();
    for col in 0..n {
        let Some(p) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, p);
        let inv = rows[rank][col].recip();
        for x in rows[rank].iter_mut() {
            *x = &*x * &inv;
        }
        let pivot = rows[rank].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != rank && !row[col].is_zero() {
                let factor = row[col].clone();
                for (x, p) in row.iter_mut().zip(&pivot) {
                    *x -= &factor * p;
                }
            }
        }
        pivot_cols.push(col);
        rank += 1;
    }
    if rows[rank..].iter().any(|r| !r[n].is_zero()) {
        return Err(PolyError::Inconsistent);
    }
    if rank < n {
        return Err(PolyError::Underdetermined { rank, vars: n });
    }
    let solution: Vec<Rational> = (0..n).map(|i| rows[i][n].clone()).collect();
    debug_assert_eq!(pivot_cols, (0..n).collect::<Vec<_>>());
    let in_range = solution.iter().all(|w| w.is_positive() && *w < Rational::one());
    if !in_range {
        let rendered: Vec<String> = solution.iter().map(ToString::to_string).collect();
        return Err(PolyError::OutOfRange { weights: rendered.join(",") });
    }
    WeightVector::new(solution)
}

#[cfg(test)]
mod tests {
    use super::super::parse_polynomial;
    use super::*;

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    fn vars(names: &[&str]) -> Vec<String> {
        names.iter().map(|s| s.to_string()).collect()
    }

    fn w(ws: &[(i64, i64)]) -> WeightVector {
        WeightVector::new(ws.iter().map(|&(n, d)| r(n, d)).collect()).unwrap()
    }

    #[test]
    fn weighted_degree_examples() {
        let half_third = w(&[(1, 2), (1, 3)]);
        let deg =
            |e: &[u32]| weighted_degree(&ExponentVector::new(e.to_vec()), &half_third).unwrap();
        assert_eq!(deg(&[2, 0]), r(1, 1));
        assert_eq!(deg(&[0, 0]), r(0, 1));
        assert_eq!(deg(&[1, 1]), r(5, 6));
        assert_eq!(
            weighted_degree(&ExponentVector::new(vec![1]), &half_third),
            Err(PolyError::LengthMismatch { expected: 2, found: 1 })
        );
    }

    #[test]
    fn homogeneity_checks() {
        let v = vars(&["x", "y"]);
        let cusp = parse_polynomial("x^2 + y^3", &v).unwrap();
        assert!(is_weighted_homogeneous(&cusp, &w(&[(1, 2), (1, 3)])).unwrap());
        assert!(!is_weighted_homogeneous(&cusp, &w(&[(1, 2), (1, 2)])).unwrap());
        let g = parse_polynomial("x^3 + x*y + y^3", &v).unwrap();
        assert!(!is_weighted_homogeneous(&g, &w(&[(1, 3), (1, 3)])).unwrap());
        assert!(is_weighted_homogeneous(&Polynomial::zero(&v), &w(&[(1, 3), (1, 3)])).unwrap());
    }

    #[test]
    fn infers_weights_when_determined() {
        let v = vars(&["x", "y"]);
        let cusp = parse_polynomial("x^2 + y^3", &v).unwrap();
        assert_eq!(infer_weights(&cusp).unwrap(), w(&[(1, 2), (1, 3)]));
        // 2w1 + w2 = 1, w1 + 2w2 = 1
        let d4 = parse_polynomial("x^2*y + x*y^2", &v).unwrap();
        assert_eq!(infer_weights(&d4).unwrap(), w(&[(1, 3), (1, 3)]));
        let e7 = parse_polynomial("x^3 + x*y^3", &v).unwrap();
        assert_eq!(infer_weights(&e7).unwrap(), w(&[(1, 3), (2, 9)]));
    }

    #[test]
    fn infer_weights_error_cases() {
        let v = vars(&["x", "y"]);
        let p = |s: &str| parse_polynomial(s, &v).unwrap();
        assert_eq!(infer_weights(&p("x^2")), Err(PolyError::Underdetermined { rank: 1, vars: 2 }));
        assert_eq!(infer_weights(&p("x^2 + x^3")), Err(PolyError::Inconsistent));
        assert_eq!(infer_weights(&p("x^2 + y^2 + 1")), Err(PolyError::Inconsistent));
        // x*y^2 with x: w1 + 2 w2 = 1 and y: w2 = 1 gives w1 = -1
        assert!(matches!(infer_weights(&p("x*y^2 + y")), Err(PolyError::OutOfRange { .. })));
        assert_eq!(infer_weights(&Polynomial::zero(&v)), Err(PolyError::ZeroPolynomial));
    }

    #[test]
    fn weight_vector_parsing_and_range() {
        assert_eq!("1/2, 1/3".parse::<WeightVector>().unwrap(), w(&[(1, 2), (1, 3)]));
        assert!(matches!(
            "1/2,1".parse::<WeightVector>(),
            Err(PolyError::WeightOutOfRange { index: 1, .. })
        ));
        assert!(matches!("1/2,0".parse::<WeightVector>(), Err(PolyError::WeightOutOfRange { .. })));
        assert!(matches!("1/2,abc".parse::<WeightVector>(), Err(PolyError::Parse(_))));
    }

    #[test]
    fn closed_form_milnor_number() {
        assert_eq!(w(&[(1, 2), (1, 3)]).milnor_closed_form(), r(2, 1));
        assert_eq!(w(&[(1, 3), (2, 9)]).milnor_closed_form(), r(7, 1));
    }
}
