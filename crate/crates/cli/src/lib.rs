//! Commands behind the `limspec` binary.
//!
//! Each command returns a [`Report`] or a [`CliError`]; the binary prints the
//! report (text or JSON) on stdout and errors on stderr.

mod check;
mod report;

use std::fmt;
use std::path::Path;

use limspec::{
    char_poly, check_symmetry, eigenvalues_gamma_c, eigenvalues_geometric, euler_specialization,
    infer_isolated_weights, milnor_basis, milnor_sp_prime, nearby_fiber_class, parse_polynomial,
    sp_from_basis, sp_prime_of_class, sp_product_formula, sp_twist, MilnorError, NearbyVariant,
    SncModel, SpectrumError, WeightVector,
};

pub use check::{cmd_check, corpus, CorpusCase};
pub use report::{
    CheckReport, ClassEntry, Eigenvalue, Eigenvalues, InvariantResult, NearbyReport, Report,
    SpReport, Term,
};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CliError {
    /// Bad input: grammar, validation, schema, unreadable file. Exit code 2.
    Input(String),
    /// The library contradicted itself. Exit code 3.
    Consistency(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Input(_) => 2,
            CliError::Consistency(_) => 3,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Input(m) => f.write_str(m),
            CliError::Consistency(m) => write!(f, "internal consistency failure: {m}"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<MilnorError> for CliError {
    fn from(e: MilnorError) -> Self {
        match e {
            MilnorError::ConsistencyFailure { .. } => CliError::Consistency(e.to_string()),
            MilnorError::NonIsolatedSingularity { .. } => {
                CliError::Input(format!("NonIsolatedSingularity: {e}"))
            }
            MilnorError::NotWeightedHomogeneous { .. } => {
                CliError::Input(format!("NotWeightedHomogeneous: {e}"))
            }
            MilnorError::Poly(p) => CliError::Input(p.to_string()),
        }
    }
}

fn internal(e: SpectrumError) -> CliError {
    match e {
        SpectrumError::Milnor(m) => m.into(),
        other => CliError::Consistency(other.to_string()),
    }
}

fn check_vars(vars: &[String]) -> Result<(), CliError> {
    if vars.is_empty() {
        return Err(CliError::Input("--vars needs at least one variable".into()));
    }
    for (i, v) in vars.iter().enumerate() {
        let ok = v.chars().next().is_some_and(|c| c.is_ascii_alphabetic() || c == '_')
            && v.chars().all(|c| c.is_ascii_alphanumeric() || c == '_');
        if !ok {
            return Err(CliError::Input(format!("`{v}` is not a variable name")));
        }
        if vars[..i].contains(v) {
            return Err(CliError::Input(format!("variable `{v}` listed twice")));
        }
    }
    Ok(())
}

/// Spectrum of a weighted-homogeneous polynomial by both routes.
pub fn cmd_sp(text: &str, vars: &[String], weights: Option<&str>) -> Result<SpReport, CliError> {
    check_vars(vars)?;
    let f = parse_polynomial(text, vars).map_err(|e| CliError::Input(e.to_string()))?;
    if f.is_zero() {
        return Err(CliError::Input("the zero polynomial has no spectrum".into()));
    }
    let (w, weights_inferred) = match weights {
        Some(s) => {
            let w: WeightVector =
                s.parse().map_err(|e: limspec::PolyError| CliError::Input(e.to_string()))?;
            if w.len() != vars.len() {
                return Err(CliError::Input(format!(
                    "{} weights given for {} variables",
                    w.len(),
                    vars.len()
                )));
            }
            (w, false)
        }
        None => (infer_isolated_weights(&f)?, true),
    };

    let basis = milnor_basis(&f, &w)?;
    let closed = w.milnor_closed_form();
    if closed != limspec::Rational::from_integer(basis.len().into()) {
        return Err(MilnorError::ConsistencyFailure {
            basis_count: basis.len(),
            closed_form: closed.to_string(),
        }
        .into());
    }
    let from_basis = sp_from_basis(&basis);
    let product = sp_product_formula(&w).map_err(internal)?;
    if from_basis != product {
        return Err(CliError::Consistency(format!(
            "basis route gives {from_basis}, product formula gives {product}"
        )));
    }

    let n = vars.len() as i64;
    let sprime = sp_twist(&product, n);
    let local = eigenvalues_gamma_c(&sprime).map_err(internal)?;
    let geometric = eigenvalues_geometric(&local);
    let cp = char_poly(&local).map_err(internal)?;

    Ok(SpReport {
        input: text.to_string(),
        polynomial: f.to_string(),
        vars: vars.to_vec(),
        weights: w.as_slice().iter().map(|r| r.to_string()).collect(),
        weights_inferred,
        milnor_number: basis.len() as u64,
        basis: basis.render(vars),
        spectrum: product.to_string(),
        spectrum_terms: report::terms(&product),
        spectrum_prime: sprime.to_string(),
        symmetric: check_symmetry(&product, n),
        eigenvalues: Eigenvalues {
            local_system: report::eigenvalues(&local),
            geometric: report::eigenvalues(&geometric),
        },
        characteristic_polynomial: cp.to_string(),
    })
}

pub fn variant_name(v: NearbyVariant) -> &'static str {
    match v {
        NearbyVariant::TotalSpace => "total",
        NearbyVariant::OpenComplement => "open",
        NearbyVariant::Local => "local",
    }
}

/// Evaluates a model given as JSON text; `origin` names it in the report.
pub fn nearby_from_text(
    origin: &str,
    text: &str,
    variant: NearbyVariant,
    dim: Option<i64>,
) -> Result<NearbyReport, CliError> {
    let model = SncModel::from_json(text).map_err(|e| CliError::Input(format!("{origin}: {e}")))?;
    let class = nearby_fiber_class(&model, variant);
    let n = dim.unwrap_or(model.n);
    let sprime = match variant {
        NearbyVariant::Local => milnor_sp_prime(&class, n),
        _ => sp_prime_of_class(&class),
    };
    Ok(NearbyReport {
        file: origin.to_string(),
        variant: variant_name(variant).to_string(),
        dim: n,
        class: report::class_entries(&class),
        euler_specialization: euler_specialization(&class),
        class_spectrum: sp_prime_of_class(&class).to_string(),
        spectrum: sp_twist(&sprime, n).to_string(),
        spectrum_prime: sprime.to_string(),
        warnings: model
            .unused_components()
            .into_iter()
            .map(|id| format!("component `{id}` occurs in no stratum"))
            .collect(),
    })
}

/// Nearby-fiber class of a model file.
pub fn cmd_nearby(
    path: &Path,
    variant: NearbyVariant,
    dim: Option<i64>,
) -> Result<NearbyReport, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Input(format!("cannot read {}: {e}", path.display())))?;
    nearby_from_text(&path.display().to_string(), &text, variant, dim)
}
