use limspec::spectrum::{has_integer_coefficients, univariate_degree};
use limspec::{
    char_poly, check_symmetry, eigenvalues_gamma_c, eigenvalues_geometric, infer_weights,
    is_weighted_homogeneous, milnor_basis, parse_polynomial, sp_from_basis, sp_product_formula,
    sp_twist, weighted_degree, EigenMultiset, ExponentVector, FracPoly, Polynomial, Rational,
    WeightVector,
};
use num_traits::{One, ToPrimitive};
use proptest::prelude::*;

fn vars3() -> Vec<String> {
    ["x", "y", "z"].iter().map(|s| s.to_string()).collect()
}

fn rational() -> impl Strategy<Value = Rational> {
    (-20i64..=20, 1i64..=6).prop_map(|(n, d)| Rational::new(n.into(), d.into()))
}

fn poly3() -> impl Strategy<Value = Polynomial> {
    prop::collection::vec((prop::collection::vec(0u32..4, 3), rational()), 0..6).prop_map(|terms| {
        Polynomial::from_terms(
            &vars3(),
            terms.into_iter().map(|(e, c)| (ExponentVector::new(e), c)),
        )
    })
}

/// `x^a + x·y^b`, weights `(1/a, (1 − 1/a)/b)`.
fn chain(a: u32, b: u32) -> (Polynomial, WeightVector) {
    let vars: Vec<String> = vec!["x".into(), "y".into()];
    let f = parse_polynomial(&format!("x^{a} + x*y^{b}"), &vars).unwrap();
    let w1 = Rational::new(1.into(), a.into());
    let w2 = (Rational::one() - &w1) / Rational::from_integer(b.into());
    (f, WeightVector::new(vec![w1, w2]).unwrap())
}

/// Weight vectors whose product formula is known to be exact: Brieskorn–Pham
/// blocks and chain blocks, concatenated.
fn weights() -> impl Strategy<Value = WeightVector> {
    let block = prop_oneof![
        (2u32..=7).prop_map(|a| WeightVector::brieskorn_pham(&[a]).unwrap()),
        (2u32..=5, 2u32..=5).prop_map(|(a, b)| chain(a, b).1),
    ];
    prop::collection::vec(block, 1..=3)
        .prop_map(|bs| bs.iter().skip(1).fold(bs[0].clone(), |acc, b| acc.concat(b)))
}

fn positive_fracpoly() -> impl Strategy<Value = FracPoly> {
    prop::collection::vec(((-30i64..30, 1i64..=12), 1i64..4), 0..8).prop_map(|terms| {
        FracPoly::from_terms(
            terms.into_iter().map(|((n, d), c)| (Rational::new(n.into(), d.into()), c)),
        )
    })
}

/// `∏ (T − exp(2πiθ))` in floating point, rounded to integers.
fn numeric_char_poly(e: &EigenMultiset) -> Vec<i64> {
    let mut coeffs: Vec<(f64, f64)> = vec![(1.0, 0.0)];
    for (r, &c) in e.entries() {
        let theta = r.value().to_f64().unwrap() * std::f64::consts::TAU;
        let (zr, zi) = (theta.cos(), theta.sin());
        for _ in 0..c {
            let mut next = vec![(0.0, 0.0); coeffs.len() + 1];
            for (k, &(a, b)) in coeffs.iter().enumerate() {
                next[k + 1].0 += a;
                next[k + 1].1 += b;
                next[k].0 -= a * zr - b * zi;
                next[k].1 -= a * zi + b * zr;
            }
            coeffs = next;
        }
    }
    coeffs
        .into_iter()
        .map(|(re, im)| {
            let tol = 1e-6 * re.abs().max(1.0);
            assert!(im.abs() < tol && (re - re.round()).abs() < tol, "{re} + {im}i");
            re.round() as i64
        })
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn print_then_parse_is_identity(p in poly3()) {
        let text = p.to_string();
        prop_assert_eq!(parse_polynomial(&text, &vars3()).unwrap(), p);
    }

    #[test]
    fn polynomial_ring_laws(a in poly3(), b in poly3(), c in poly3()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn derivative_is_a_derivation(a in poly3(), b in poly3(), i in 0usize..3) {
        let lhs = (&a * &b).derivative(i);
        let rhs = &(&a.derivative(i) * &b) + &(&a * &b.derivative(i));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn weighted_degree_is_additive(
        e1 in prop::collection::vec(0u32..9, 3),
        e2 in prop::collection::vec(0u32..9, 3),
        w in prop::collection::vec(2u32..9, 3),
    ) {
        let w = WeightVector::brieskorn_pham(&w).unwrap();
        let (a, b) = (ExponentVector::new(e1), ExponentVector::new(e2));
        prop_assert_eq!(
            weighted_degree(&(&a + &b), &w).unwrap(),
            weighted_degree(&a, &w).unwrap() + weighted_degree(&b, &w).unwrap()
        );
    }

    #[test]
    fn inferred_weights_are_recovered(
        a in prop::collection::vec(2u32..=6, 3),
        extra in prop::collection::vec(any::<bool>(), 64),
        coeffs in prop::collection::vec(1i64..5, 64),
    ) {
        // Σ x_i^{a_i} plus a random selection of other monomials of degree 1
        let w = WeightVector::brieskorn_pham(&a).unwrap();
        let mut terms = Vec::new();
        let mut k = 0;
        for i in 0..=a[0] {
            for j in 0..=a[1] {
                for l in 0..=a[2] {
                    let e = ExponentVector::new(vec![i, j, l]);
                    if weighted_degree(&e, &w).unwrap() != Rational::one() {
                        continue;
                    }
                    let pure = e.as_pure_power().is_some();
                    if pure || extra[k % 64] {
                        terms.push((e, Rational::from_integer(coeffs[k % 64].into())));
                    }
                    k += 1;
                }
            }
        }
        let f = Polynomial::from_terms(&vars3(), terms);
        let inferred = infer_weights(&f).unwrap();
        prop_assert!(is_weighted_homogeneous(&f, &inferred).unwrap());
        prop_assert_eq!(inferred, w);
    }

    #[test]
    fn product_formula_invariants(w in weights()) {
        let sp = sp_product_formula(&w).unwrap();
        let n = w.len() as i64;
        prop_assert!(check_symmetry(&sp, n));
        prop_assert_eq!(Rational::from_integer(sp.coefficient_sum().into()), w.milnor_closed_form());
        prop_assert!(sp.terms().values().all(|&c| c > 0));
        prop_assert_eq!(sp.min_exponent().unwrap(), &w.sum());
        prop_assert!(sp.max_exponent().unwrap() < &Rational::from_integer(n.into()));
    }

    #[test]
    fn thom_sebastiani(w1 in weights(), w2 in weights()) {
        let joined = sp_product_formula(&w1.concat(&w2)).unwrap();
        let product = &sp_product_formula(&w1).unwrap() * &sp_product_formula(&w2).unwrap();
        prop_assert_eq!(joined, product);
    }

    #[test]
    fn eigenvalue_conventions_round_trip(s in positive_fracpoly()) {
        let direct = EigenMultiset::from_exponents(&s).unwrap();
        let gamma_c = eigenvalues_gamma_c(&s).unwrap();
        prop_assert_eq!(eigenvalues_geometric(&gamma_c), direct);
        prop_assert_eq!(eigenvalues_geometric(&eigenvalues_geometric(&gamma_c)), gamma_c.clone());
        prop_assert_eq!(gamma_c.total(), s.coefficient_sum() as u64);
    }

    #[test]
    fn char_poly_matches_numeric_product(w in weights()) {
        let sp = sp_product_formula(&w).unwrap();
        if sp.coefficient_sum() > 24 {
            return Ok(());
        }
        let sprime = sp_twist(&sp, w.len() as i64);
        let e = eigenvalues_gamma_c(&sprime).unwrap();
        let p = char_poly(&e).unwrap();
        prop_assert!(has_integer_coefficients(&p));
        prop_assert_eq!(univariate_degree(&p), Some(sp.coefficient_sum() as u32));
        let numeric = numeric_char_poly(&e);
        for (k, &c) in numeric.iter().enumerate() {
            let exact = p.coefficient(&ExponentVector::new(vec![k as u32]));
            prop_assert_eq!(exact, Rational::from_integer(c.into()), "T^{}", k);
        }
    }
}

#[test]
fn chain_family_routes_agree() {
    for a in 2..=6 {
        for b in 2..=6 {
            let (f, w) = chain(a, b);
            let basis = milnor_basis(&f, &w).unwrap();
            assert_eq!(sp_from_basis(&basis), sp_product_formula(&w).unwrap(), "x^{a} + x*y^{b}");
            // μ(x^a + x y^b) = a(b − 1) + 1
            assert_eq!(basis.len() as u32, a * (b - 1) + 1);
        }
    }
}
