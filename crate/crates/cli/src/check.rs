//! The built-in cross-validation suite behind `limspec check`.

use limspec::spectrum::{has_integer_coefficients, univariate_degree};
use limspec::{
    char_poly, check_symmetry, component_count_cstar, covering_degree, eigenvalues_gamma_c,
    eigenvalues_geometric, euler_specialization, fixtures, infer_isolated_weights, milnor_basis,
    milnor_sp_prime, nearby_fiber_class, parse_polynomial, sp_by_hodge_filtration, sp_from_basis,
    sp_prime_of_class, sp_product_formula, sp_twist, ComponentKind, EigenMultiset, EquivClass,
    FracPoly, HodgeKey, MilnorBasis, NearbyVariant, Rational, Residue, SncComponent, SncModel,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::report::{CheckReport, InvariantResult};

const RANDOM_CLASSES: usize = 1000;
const SEED: u64 = 0x5eed_cafe;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorpusCase {
    pub name: String,
    pub text: String,
    pub vars: Vec<String>,
}

fn case(name: &str, text: &str, vars: &[&str]) -> CorpusCase {
    CorpusCase {
        name: name.to_string(),
        text: text.to_string(),
        vars: vars.iter().map(|v| v.to_string()).collect(),
    }
}

/// Brieskorn–Pham exponent vectors `2 ≤ a_i ≤ 6`, `1 ≤ n ≤ 4`.
pub fn brieskorn_pham_grid() -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    for n in 1..=4 {
        let mut a = vec![2u32; n];
        'next: loop {
            out.push(a.clone());
            for ai in a.iter_mut() {
                if *ai < 6 {
                    *ai += 1;
                    continue 'next;
                }
                *ai = 2;
            }
            break;
        }
    }
    out
}

/// The Brieskorn–Pham grid followed by a handful of other
/// weighted-homogeneous isolated singularities.
pub fn corpus() -> Vec<CorpusCase> {
    let mut out: Vec<CorpusCase> = brieskorn_pham_grid()
        .into_iter()
        .map(|a| {
            let vars: Vec<String> = (1..=a.len()).map(|i| format!("x{i}")).collect();
            let text = a
                .iter()
                .zip(&vars)
                .map(|(ai, v)| format!("{v}^{ai}"))
                .collect::<Vec<_>>()
                .join(" + ");
            let name = format!("BP{a:?}").replace(' ', "");
            CorpusCase { name, text, vars }
        })
        .collect();
    out.extend([
        case("D4", "x^2*y + y^3", &["x", "y"]),
        case("D5", "x^2*y + y^4", &["x", "y"]),
        case("D6", "x^2*y + y^5", &["x", "y"]),
        case("E6", "x^3 + y^4", &["x", "y"]),
        case("E7", "x^3 + x*y^3", &["x", "y"]),
        case("E8", "x^3 + y^5", &["x", "y"]),
        case("D4 + z^2", "x^2*y + y^3 + z^2", &["x", "y", "z"]),
        case("E7 + z^2", "x^3 + x*y^3 + z^2", &["x", "y", "z"]),
        case("P8", "x^3 + y^3 + z^3 + x*y*z", &["x", "y", "z"]),
        case("X9", "x^4 + x^2*y^2 + y^4", &["x", "y"]),
        case("Klein loop", "x^3*y + y^3*z + z^3*x", &["x", "y", "z"]),
        case("chain", "x^4 + x*y^3 + y*z^2", &["x", "y", "z"]),
        case("BP[2,3,7]", "x^2 + y^3 + z^7", &["x", "y", "z"]),
        case("A9", "x^10 + y^2", &["x", "y"]),
    ]);
    out
}

struct Evaluated {
    name: String,
    n: i64,
    basis: MilnorBasis,
    closed: Rational,
    sp_basis: FracPoly,
    sp_product: Result<FracPoly, String>,
}

fn evaluate(c: &CorpusCase) -> Result<Evaluated, String> {
    let f = parse_polynomial(&c.text, &c.vars).map_err(|e| e.to_string())?;
    let w = infer_isolated_weights(&f).map_err(|e| e.to_string())?;
    let basis = milnor_basis(&f, &w).map_err(|e| e.to_string())?;
    Ok(Evaluated {
        name: c.name.clone(),
        n: c.vars.len() as i64,
        sp_basis: sp_from_basis(&basis),
        sp_product: sp_product_formula(&w).map_err(|e| e.to_string()),
        closed: w.milnor_closed_form(),
        basis,
    })
}

struct Tally {
    name: &'static str,
    cases: usize,
    failures: usize,
    first_failure: Option<String>,
}

impl Tally {
    fn new(name: &'static str) -> Self {
        Tally { name, cases: 0, failures: 0, first_failure: None }
    }

    fn record(&mut self, outcome: Result<(), String>) {
        self.cases += 1;
        if let Err(msg) = outcome {
            self.failures += 1;
            self.first_failure.get_or_insert(msg);
        }
    }

    fn finish(self) -> InvariantResult {
        InvariantResult {
            name: self.name.to_string(),
            cases: self.cases,
            failures: self.failures,
            passed: self.failures == 0 && self.cases > 0,
            first_failure: self.first_failure,
        }
    }
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn r(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

fn cusp_spectrum() -> FracPoly {
    FracPoly::from_terms([(r(5, 6), 1), (r(7, 6), 1)])
}

fn product(e: &Evaluated) -> Result<&FracPoly, String> {
    e.sp_product.as_ref().map_err(|m| format!("{}: {m}", e.name))
}

fn routes_agree(e: &Evaluated) -> Result<(), String> {
    let p = product(e)?;
    ensure(*p == e.sp_basis, || format!("{}: basis {} vs product {p}", e.name, e.sp_basis))
}

fn symmetric(e: &Evaluated) -> Result<(), String> {
    let p = product(e)?;
    ensure(check_symmetry(p, e.n), || format!("{}: {p} is not symmetric about n/2", e.name))
}

fn milnor_counts(e: &Evaluated) -> Result<(), String> {
    let p = product(e)?;
    let sum = Rational::from_integer(p.coefficient_sum().into());
    let count = Rational::from_integer(e.basis.len().into());
    ensure(sum == e.closed && count == e.closed, || {
        format!("{}: coefficient sum {sum}, basis {count}, closed form {}", e.name, e.closed)
    })
}

fn conventions(e: &Evaluated) -> Result<(), String> {
    let p = product(e)?;
    let sprime = sp_twist(p, e.n);
    let local = eigenvalues_gamma_c(&sprime).map_err(|m| m.to_string())?;
    let direct = EigenMultiset::from_exponents(&sprime).map_err(|m| m.to_string())?;
    ensure(eigenvalues_geometric(&local) == direct, || format!("{}: geometric ≠ direct", e.name))?;
    ensure(eigenvalues_geometric(&eigenvalues_geometric(&local)) == local, || {
        format!("{}: conversion is not an involution", e.name)
    })?;
    let cp = char_poly(&local).map_err(|m| format!("{}: {m}", e.name))?;
    ensure(
        has_integer_coefficients(&cp) && univariate_degree(&cp) == Some(e.basis.len() as u32),
        || format!("{}: char poly {cp} has wrong degree or non-integer coefficients", e.name),
    )
}

fn cusp_benchmark() -> Result<(), String> {
    let vars = ["x".to_string(), "y".to_string()];
    let f = parse_polynomial("x^2 + y^3", &vars).map_err(|e| e.to_string())?;
    let w = infer_isolated_weights(&f).map_err(|e| e.to_string())?;
    let basis = milnor_basis(&f, &w).map_err(|e| e.to_string())?;
    ensure(basis.render(&vars) == ["1", "y"], || format!("basis {:?}", basis.render(&vars)))?;
    let from_basis = sp_from_basis(&basis);
    let product = sp_product_formula(&w).map_err(|e| e.to_string())?;
    ensure(from_basis == cusp_spectrum() && product == cusp_spectrum(), || {
        format!("basis route {from_basis}, product formula {product}")
    })
}

fn i2_fixture() -> Result<(), String> {
    let model = SncModel::from_json(fixtures::I2_ELLIPTIC).map_err(|e| e.to_string())?;
    let c = nearby_fiber_class(&model, NearbyVariant::TotalSpace);
    ensure(c.is_zero() && euler_specialization(&c) == 0, || format!("I2 class {c}"))
}

fn cusp_fixture() -> Result<(), String> {
    let model = SncModel::from_json(fixtures::CUSP_LOCAL).map_err(|e| e.to_string())?;
    let c = nearby_fiber_class(&model, NearbyVariant::Local);
    let sprime = milnor_sp_prime(&c, model.n);
    let sp = sp_twist(&sprime, model.n);
    ensure(sprime == cusp_spectrum() && sp == cusp_spectrum(), || {
        format!("cusp class {c} gives Sp' {sprime}, Sp {sp}")
    })?;
    let chi = euler_specialization(&c);
    let mu = 2;
    ensure(chi == 1 - mu && chi == 2 + 3 - 6, || format!("cusp Euler specialization {chi}"))
}

/// Multiplicities of `I`, optional adjacent multiplicity, expected GCD.
const GCD_TABLE: [(&[u64], Option<u64>, u64); 10] = [
    (&[6], None, 6),
    (&[4, 6], None, 2),
    (&[2, 3], None, 1),
    (&[12, 18, 30], None, 6),
    (&[7], None, 7),
    (&[6], Some(4), 2),
    (&[6], Some(1), 1),
    (&[2, 4], Some(3), 1),
    (&[10], Some(15), 5),
    (&[8, 12], Some(20), 4),
];

fn gcd_row(ms: &[u64], adjacent: Option<u64>, expected: u64) -> Result<(), String> {
    let mut components: Vec<SncComponent> = ms
        .iter()
        .enumerate()
        .map(|(i, &m)| SncComponent {
            id: format!("E{i}"),
            multiplicity: m,
            kind: ComponentKind::Vertical,
        })
        .collect();
    if let Some(m) = adjacent {
        components.push(SncComponent {
            id: "A".into(),
            multiplicity: m,
            kind: ComponentKind::Vertical,
        });
    }
    let model = SncModel { n: 2, components, strata: Vec::new() };
    let ids: Vec<String> = (0..ms.len()).map(|i| format!("E{i}")).collect();
    let refs: Vec<&str> = ids.iter().map(String::as_str).collect();
    let got = match adjacent {
        None => covering_degree(&refs, &model),
        Some(_) => component_count_cstar(&refs, "A", &model),
    }
    .map_err(|e| e.to_string())?;
    ensure(got == expected, || {
        format!("{ms:?} adjacent {adjacent:?}: got {got}, expected {expected}")
    })
}

pub(crate) fn random_class(rng: &mut ChaCha8Rng) -> EquivClass {
    let len = rng.gen_range(0..8);
    EquivClass::from_entries((0..len).map(|_| {
        let d: i64 = rng.gen_range(1..=12);
        let angle = Residue::of(&r(rng.gen_range(0..d), d));
        let key = HodgeKey::new(rng.gen_range(-4..=4), rng.gen_range(-4..=4), angle);
        (key, rng.gen_range(-5..=5))
    }))
}

fn fixture_round_trip(text: &str) -> Result<(), String> {
    let model = SncModel::from_json(text).map_err(|e| e.to_string())?;
    ensure(model.to_json() == text, || "canonical text changed on round trip".to_string())
}

type CaseCheck = fn(&Evaluated) -> Result<(), String>;

/// Runs every invariant over the corpus and the fixtures.
pub fn cmd_check() -> CheckReport {
    let cases = corpus();
    let evaluated: Vec<Result<Evaluated, String>> = cases.iter().map(evaluate).collect();

    let per_case: [(&'static str, CaseCheck); 4] = [
        ("routes_agree", routes_agree),
        ("symmetry", symmetric),
        ("milnor_counts", milnor_counts),
        ("monodromy_conventions", conventions),
    ];
    let mut invariants = Vec::new();
    for (name, check) in per_case {
        let mut t = Tally::new(name);
        for (c, e) in cases.iter().zip(&evaluated) {
            t.record(match e {
                Ok(e) => check(e),
                Err(m) => Err(format!("{}: {m}", c.name)),
            });
        }
        invariants.push(t);
    }

    let mut t = Tally::new("cusp_benchmark");
    t.record(cusp_benchmark());
    invariants.insert(1, t);

    let mut t = Tally::new("i2_fixture");
    t.record(i2_fixture());
    invariants.push(t);

    let mut t = Tally::new("cusp_fixture");
    t.record(cusp_fixture());
    invariants.push(t);

    let mut t = Tally::new("gcd_formulas");
    for (ms, adjacent, expected) in GCD_TABLE {
        t.record(gcd_row(ms, adjacent, expected));
    }
    invariants.push(t);

    let mut t = Tally::new("spectrum_functionals");
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    for _ in 0..RANDOM_CLASSES {
        let c = random_class(&mut rng);
        let n = rng.gen_range(1..=4);
        let a = sp_twist(&sp_prime_of_class(&c), n);
        let b = sp_by_hodge_filtration(&c, n);
        t.record(ensure(a == b, || format!("class {c}, n = {n}: {a} vs {b}")));
    }
    invariants.push(t);

    let mut t = Tally::new("fixture_round_trip");
    t.record(fixture_round_trip(fixtures::I2_ELLIPTIC));
    t.record(fixture_round_trip(fixtures::CUSP_LOCAL));
    invariants.push(t);

    let invariants: Vec<InvariantResult> = invariants.into_iter().map(Tally::finish).collect();
    CheckReport {
        corpus_size: cases.len(),
        passed: invariants.iter().all(|i| i.passed),
        invariants,
    }
}
