//! Buchberger's algorithm for the graded reverse lexicographic order.

use std::collections::BTreeSet;

use num_traits::One;

use crate::polyalg::{ExponentVector, Polynomial, Rational};

/// Monomial orders understood by [`GroebnerBasis`]. Only one is implemented;
/// the tag travels with the basis so callers can assert what they got.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MonomialOrder {
    Grevlex,
}

/// A reduced Gröbner basis: monic, inter-reduced, sorted by ascending leading
/// monomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroebnerBasis {
    generators: Vec<Polynomial>,
    order: MonomialOrder,
}

impl GroebnerBasis {
    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn leading_monomials(&self) -> Vec<ExponentVector> {
        self.generators
            .iter()
            .map(|g| g.leading_term().expect("basis elements are nonzero").0.clone())
            .collect()
    }

    /// Normal form of `p` modulo the basis.
    pub fn reduce(&self, p: &Polynomial) -> Polynomial {
        normal_form(p, &self.generators)
    }

    /// True iff some leading monomial divides `m`.
    pub fn is_leading_multiple(&self, m: &ExponentVector) -> bool {
        self.generators.iter().any(|g| g.leading_term().expect("nonzero").0.divides(m))
    }
}

fn leading(p: &Polynomial) -> (ExponentVector, Rational) {
    let (e, c) = p.leading_term().expect("nonzero polynomial");
    (e.clone(), c.clone())
}

fn make_monic(p: &Polynomial) -> Polynomial {
    let (_, c) = leading(p);
    p.scale(&c.recip())
}

/// `S(f, g) = (L/lt(f))·f − (L/lt(g))·g` with `L = lcm(lm(f), lm(g))`.
pub fn s_polynomial(f: &Polynomial, g: &Polynomial) -> Polynomial {
    let (mf, cf) = leading(f);
    let (mg, cg) = leading(g);
    let l = mf.lcm(&mg);
    let a = f.mul_term(&l.checked_div(&mf).expect("lcm"), &cf.recip());
    let b = g.mul_term(&l.checked_div(&mg).expect("lcm"), &cg.recip());
    &a - &b
}

/// Full reduction of `p` by `divisors`: no term of the result is divisible by
/// any divisor's leading monomial.
pub fn normal_form(p: &Polynomial, divisors: &[Polynomial]) -> Polynomial {
    let leads: Vec<(ExponentVector, Rational)> = divisors.iter().map(leading).collect();
    let mut rest = p.clone();
    let mut remainder = Polynomial::zero(p.vars());
    while let Some((m, c)) = rest.leading_term().map(|(m, c)| (m.clone(), c.clone())) {
        match leads.iter().position(|(lm, _)| lm.divides(&m)) {
            Some(k) => {
                let (lm, lc) = &leads[k];
                let q = m.checked_div(lm).expect("divides");
                rest = &rest - &divisors[k].mul_term(&q, &(&c / lc));
            }
            None => {
                let t = Polynomial::monomial(p.vars(), m, c);
                rest = &rest - &t;
                remainder = &remainder + &t;
            }
        }
    }
    remainder
}

/// Reduced Gröbner basis of the ideal generated by `generators` for grevlex,
/// using the normal selection strategy together with the coprime and chain
/// criteria. Deterministic for a fixed input.
pub fn buchberger(generators: &[Polynomial]) -> GroebnerBasis {
    let mut basis: Vec<Polynomial> =
        generators.iter().filter(|g| !g.is_zero()).map(make_monic).collect();
    let mut lms: Vec<ExponentVector> = basis.iter().map(|g| leading(g).0).collect();

    let mut pending: BTreeSet<(usize, usize)> = BTreeSet::new();
    for j in 0..basis.len() {
        for i in 0..j {
            pending.insert((i, j));
        }
    }

    while let Some(&(i, j)) = pending.iter().min_by(|a, b| {
        lms[a.0].lcm(&lms[a.1]).grevlex_cmp(&lms[b.0].lcm(&lms[b.1])).then_with(|| a.cmp(b))
    }) {
        pending.remove(&(i, j));
        if lms[i].is_coprime(&lms[j]) {
            continue;
        }
        let l = lms[i].lcm(&lms[j]);
        let key = |a: usize, b: usize| if a < b { (a, b) } else { (b, a) };
        let chain = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && lms[k].divides(&l)
                && !pending.contains(&key(i, k))
                && !pending.contains(&key(j, k))
        });
        if chain {
            continue;
        }
        let s = s_polynomial(&basis[i], &basis[j]);
        let r = normal_form(&s, &basis);
        if r.is_zero() {
            continue;
        }
        let r = make_monic(&r);
        let new = basis.len();
        lms.push(leading(&r).0);
        basis.push(r);
        for k in 0..new {
            pending.insert((k, new));
        }
    }

    GroebnerBasis { generators: reduce_basis(basis), order: MonomialOrder::Grevlex }
}

fn reduce_basis(basis: Vec<Polynomial>) -> Vec<Polynomial> {
    // minimal: drop elements whose leading monomial is a multiple of another's
    let lms: Vec<ExponentVector> = basis.iter().map(|g| leading(g).0).collect();
    let mut keep: Vec<usize> = Vec::new();
    for i in 0..basis.len() {
        let redundant = (0..basis.len())
            .any(|j| j != i && lms[j].divides(&lms[i]) && (lms[j] != lms[i] || j < i));
        if !redundant {
            keep.push(i);
        }
    }
    let minimal: Vec<Polynomial> = keep.iter().map(|&i| basis[i].clone()).collect();

    let mut reduced: Vec<Polynomial> = (0..minimal.len())
        .map(|i| {
            let others: Vec<Polynomial> = minimal
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .map(|(_, g)| g.clone())
                .collect();
            let (lm, lc) = leading(&minimal[i]);
            let tail = &minimal[i] - &Polynomial::monomial(minimal[i].vars(), lm.clone(), lc);
            let head = Polynomial::monomial(minimal[i].vars(), lm, Rational::one());
            &head + &normal_form(&tail, &others)
        })
        .collect();
    reduced.sort_by(|a, b| leading(a).0.grevlex_cmp(&leading(b).0));
    reduced
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyalg::{jacobian_generators, parse_polynomial};

    fn vars(names: &[&str]) -> Vec<String> {
        names.iter().map(|s| s.to_string()).collect()
    }

    fn lm_strings(gb: &GroebnerBasis, v: &[String]) -> Vec<String> {
        gb.leading_monomials().iter().map(|m| m.render(v)).collect()
    }

    fn assert_is_groebner(gb: &GroebnerBasis, originals: &[Polynomial]) {
        let g = gb.generators();
        for a in 0..g.len() {
            for b in a + 1..g.len() {
                assert!(gb.reduce(&s_polynomial(&g[a], &g[b])).is_zero());
            }
        }
        for f in originals {
            assert!(gb.reduce(f).is_zero(), "{f} does not reduce to zero");
        }
        let lms = gb.leading_monomials();
        for (i, g) in g.iter().enumerate() {
            assert!(leading(g).1.is_one());
            for (j, lm) in lms.iter().enumerate() {
                if i != j {
                    assert!(g.terms().keys().all(|t| !lm.divides(t)), "not inter-reduced");
                }
            }
        }
    }

    #[test]
    fn cusp_jacobian_basis() {
        let v = vars(&["x", "y"]);
        let gens =
            vec![parse_polynomial("2*x", &v).unwrap(), parse_polynomial("3*y^2", &v).unwrap()];
        let gb = buchberger(&gens);
        assert_eq!(lm_strings(&gb, &v), vec!["x", "y^2"]);
        assert_is_groebner(&gb, &gens);
    }

    #[test]
    fn principal_monomial_ideal() {
        let v = vars(&["x"]);
        let gens = vec![parse_polynomial("x", &v).unwrap()];
        let gb = buchberger(&gens);
        assert_eq!(gb.generators(), &gens[..]);
        assert_eq!(gb.order(), MonomialOrder::Grevlex);
    }

    #[test]
    fn fermat_cubic_jacobian() {
        let v = vars(&["x", "y"]);
        let gens = jacobian_generators(&parse_polynomial("x^3 + y^3", &v).unwrap());
        let gb = buchberger(&gens);
        assert_eq!(lm_strings(&gb, &v), vec!["y^2", "x^2"]);
        assert_is_groebner(&gb, &gens);
    }

    #[test]
    fn d4_jacobian_needs_a_new_element() {
        // f = x^2 y + y^3: (2xy, x^2 + 3y^2) → {xy, x^2 + 3y^2, y^3}
        let v = vars(&["x", "y"]);
        let gens = jacobian_generators(&parse_polynomial("x^2*y + y^3", &v).unwrap());
        let gb = buchberger(&gens);
        assert_eq!(lm_strings(&gb, &v), vec!["x*y", "x^2", "y^3"]);
        assert_is_groebner(&gb, &gens);
    }

    #[test]
    fn three_variable_nonmonomial_ideal() {
        let v = vars(&["x", "y", "z"]);
        let gens = vec![
            parse_polynomial("x^2 + y*z", &v).unwrap(),
            parse_polynomial("y^2 - x*z", &v).unwrap(),
            parse_polynomial("z^3 + x*y", &v).unwrap(),
        ];
        let gb = buchberger(&gens);
        assert_is_groebner(&gb, &gens);
        // deterministic
        assert_eq!(gb, buchberger(&gens));
    }

    #[test]
    fn unit_ideal_and_empty_input() {
        let v = vars(&["x", "y"]);
        let gens = vec![parse_polynomial("x", &v).unwrap(), parse_polynomial("x + 1", &v).unwrap()];
        let gb = buchberger(&gens);
        assert_eq!(gb.generators().len(), 1);
        assert!(gb.leading_monomials()[0].is_one());
        assert!(buchberger(&[]).generators().is_empty());
        assert!(buchberger(&[Polynomial::zero(&v)]).generators().is_empty());
    }
}
