use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::polyalg::Rational;
use crate::spectrum::{FracPoly, Residue};

/// Grading of an equivariant Hodge class: Hodge bidegree `(p, q)` and the
/// eigenvalue angle of the finite-order action.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HodgeKey {
    pub p: i64,
    pub q: i64,
    pub angle: Residue,
}

impl HodgeKey {
    pub fn new(p: i64, q: i64, angle: Residue) -> Self {
        HodgeKey { p, q, angle }
    }
}

/// A class in the Grothendieck group of mixed Hodge structures with an
/// action of finite order, stored as virtual equivariant Hodge numbers.
///
/// Multiplication is the tensor product: bidegrees add and eigenvalue angles
/// add mod 1. The Lefschetz class `𝐋` is `(1, 1, 0)`, which is central with
/// trivial action.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct EquivClass(BTreeMap<HodgeKey, i64>);

impl EquivClass {
    pub fn zero() -> Self {
        EquivClass(BTreeMap::new())
    }

    /// The class of a point.
    pub fn one() -> Self {
        Self::entry(0, 0, Residue::zero(), 1)
    }

    /// `𝐋 = [ℚ(−1)]` with trivial action.
    pub fn lefschetz() -> Self {
        Self::entry(1, 1, Residue::zero(), 1)
    }

    /// `1 − 𝐋`.
    pub fn one_minus_lefschetz() -> Self {
        &Self::one() - &Self::lefschetz()
    }

    /// A single entry `mult · [(p, q, angle)]`.
    pub fn entry(p: i64, q: i64, angle: Residue, mult: i64) -> Self {
        let mut c = Self::zero();
        c.add_entry(HodgeKey::new(p, q, angle), mult);
        c
    }

    /// Sum of the `g` characters of `ℤ/g` in bidegree `(p, p)`: the class of
    /// `g` copies of `ℚ(−p)` permuted cyclically.
    pub fn cyclic_permutation(g: u64, p: i64) -> Self {
        let mut c = Self::zero();
        for j in 0..g {
            let angle = Residue::of(&Rational::new(j.into(), g.into()));
            c.add_entry(HodgeKey::new(p, p, angle), 1);
        }
        c
    }

    pub fn from_entries<I: IntoIterator<Item = (HodgeKey, i64)>>(entries: I) -> Self {
        let mut c = Self::zero();
        for (k, m) in entries {
            c.add_entry(k, m);
        }
        c
    }

    pub fn add_entry(&mut self, key: HodgeKey, mult: i64) {
        if mult == 0 {
            return;
        }
        match self.0.entry(key) {
            Entry::Vacant(v) => {
                v.insert(mult);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += mult;
                if *o.get() == 0 {
                    o.remove();
                }
            }
        }
    }

    pub fn entries(&self) -> &BTreeMap<HodgeKey, i64> {
        &self.0
    }

    pub fn multiplicity(&self, key: &HodgeKey) -> i64 {
        self.0.get(key).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::one(), |acc, _| &acc * self)
    }

    pub fn scale(&self, k: i64) -> Self {
        Self::from_entries(self.0.iter().map(|(key, &m)| (key.clone(), m * k)))
    }
}

impl Add for &EquivClass {
    type Output = EquivClass;

    fn add(self, rhs: &EquivClass) -> EquivClass {
        let mut out = self.clone();
        for (k, &m) in &rhs.0 {
            out.add_entry(k.clone(), m);
        }
        out
    }
}

impl Sub for &EquivClass {
    type Output = EquivClass;

    fn sub(self, rhs: &EquivClass) -> EquivClass {
        self + &(-rhs)
    }
}

impl Neg for &EquivClass {
    type Output = EquivClass;

    fn neg(self) -> EquivClass {
        self.scale(-1)
    }
}

impl Mul for &EquivClass {
    type Output = EquivClass;

    fn mul(self, rhs: &EquivClass) -> EquivClass {
        let mut out = EquivClass::zero();
        for (a, &ma) in &self.0 {
            for (b, &mb) in &rhs.0 {
                out.add_entry(HodgeKey::new(a.p + b.p, a.q + b.q, a.angle.add(&b.angle)), ma * mb);
            }
        }
        out
    }
}

impl fmt::Display for EquivClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("0");
        }
        for (i, (k, m)) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{m:+}[{},{},{}]", k.p, k.q, k.angle)?;
        }
        Ok(())
    }
}

pub fn class_add(a: &EquivClass, b: &EquivClass) -> EquivClass {
    a + b
}

pub fn class_mul(a: &EquivClass, b: &EquivClass) -> EquivClass {
    a * b
}

/// Image under `𝐋 ↦ 1` and trivial action: the sum of all virtual
/// multiplicities.
pub fn euler_specialization(c: &EquivClass) -> i64 {
    c.0.values().sum()
}

/// Subtracts the class of a point, passing to reduced cohomology.
pub fn reduce_class(c: &EquivClass) -> EquivClass {
    c - &EquivClass::one()
}

/// The functional `Sp'(H, T) = Σ n'_α t^α` with `n'_α = dim Gr_F^p H_λ` for
/// `p = ⌊α⌋` and `λ = exp(2πiα)`: an entry `(p, q, θ)` contributes `t^{p+θ}`.
/// The weight grading `q` plays no role.
pub fn sp_prime_of_class(c: &EquivClass) -> FracPoly {
    let mut out = FracPoly::zero();
    for (k, &m) in &c.0 {
        out.add_term(Rational::from_integer(k.p.into()) + k.angle.value(), m);
    }
    out
}

/// The spectrum read through the Hodge filtration indexed from the top:
/// `n_α = dim Gr_F^{n−1−q} H_λ` for `q < α ≤ q + 1` and `λ = exp(−2πiα)`.
///
/// Computed entry by entry without going through [`sp_prime_of_class`]; the
/// two functionals satisfy `sp_by_hodge_filtration(c, n) = t^n ι(sp_prime_of_class(c))`.
pub fn sp_by_hodge_filtration(c: &EquivClass, n: i64) -> FracPoly {
    let mut out = FracPoly::zero();
    for (k, &m) in &c.0 {
        // Gr_F^p with p = n − 1 − q, so the window is (q, q + 1]
        let q = Rational::from_integer((n - 1 - k.p).into());
        // α ≡ −θ (mod 1); lift −θ into the window
        let base = -k.angle.value().clone();
        let lift = (&q - &base).floor() + Rational::from_integer(1.into());
        let alpha = &base + &lift;
        debug_assert!(alpha > q && alpha <= &q + Rational::from_integer(1.into()));
        out.add_term(alpha, m);
    }
    out
}

/// `Sp'` of a Milnor-type class `Σ_j (−1)^j [H^j]` in ambient dimension `n`:
/// the point class is removed and the signs are turned into
/// `(−1)^{n−1−j}`, i.e. the reduced class is multiplied by `(−1)^{n−1}`.
pub fn milnor_sp_prime(c: &EquivClass, n: i64) -> FracPoly {
    let sign = if (n - 1).rem_euclid(2) == 0 { 1 } else { -1 };
    sp_prime_of_class(&reduce_class(c)).scale(sign)
}
