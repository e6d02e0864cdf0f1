//! Nearby-fiber classes of simple-normal-crossing degenerations.
//!
//! For `f: X → Δ` with special fiber components `Y_1, …, Y_r` (vertical) and
//! horizontal components `D_j`, the nearby fibers of `f` and of its
//! restriction to `U = X ∖ D` have the Hodge classes
//!
//! ```text
//! Σ_{I ∩ vertical ≠ ∅} [H_c(Ẽ_I°), T_s] (1 − 𝐋)^{|I ∩ vertical| − 1}
//! Σ_{I ⊂ vertical}     [H_c(Ẽ_I°), T_s] (1 − 𝐋)^{|I| − 1}
//! ```
//!
//! where `Ẽ_I° → E_I°` is the cyclic étale cover obtained by normalized base
//! change of degree `LCM(m_i)`. Models are inputs: the caller supplies the
//! strata and the equivariant classes of their covers.
//!
//! The local Milnor fiber at a point uses the same sum restricted to the
//! strata lying over that point (with every component counted in `|I|`).
//! Choosing those strata is up to the caller; unlike the compactly supported
//! nearby fibers above, this is the Denef–Loeser motivic Milnor fiber.

mod class;
mod model;

pub use class::{
    class_add, class_mul, euler_specialization, milnor_sp_prime, reduce_class,
    sp_by_hodge_filtration, sp_prime_of_class, EquivClass, HodgeKey,
};
pub use model::{parse_class, ComponentKind, SncComponent, SncModel, Stratum};

use num_integer::Integer;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MotivicError {
    #[error("schema violation at `{pointer}`: {message}")]
    Schema { pointer: String, message: String },
    #[error(
        "component `{id}` is horizontal; covering data is defined for vertical components only"
    )]
    HorizontalComponent { id: String },
    #[error("unknown component `{id}`")]
    UnknownComponent { id: String },
    #[error("empty component set")]
    EmptyIdSet,
}

/// Which nearby fiber to evaluate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NearbyVariant {
    /// `ψ_f` on the total space: strata meeting the special fiber, weighted
    /// by `(1 − 𝐋)^{|I ∩ vertical| − 1}`.
    TotalSpace,
    /// `ψ_{f'}` on `U = X ∖ D`: strata of vertical components only, weighted
    /// by `(1 − 𝐋)^{|I| − 1}`.
    OpenComplement,
    /// Every listed stratum, weighted by `(1 − 𝐋)^{|I| − 1}`; for strata
    /// lists restricted to the fiber over a point.
    Local,
}

impl std::str::FromStr for NearbyVariant {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "total" => Ok(NearbyVariant::TotalSpace),
            "open" => Ok(NearbyVariant::OpenComplement),
            "local" => Ok(NearbyVariant::Local),
            other => Err(format!("unknown variant `{other}` (expected total, open or local)")),
        }
    }
}

/// Contribution of one stratum, or `None` when the variant skips it.
fn stratum_term(model: &SncModel, stratum: &Stratum, variant: NearbyVariant) -> Option<EquivClass> {
    let vertical = stratum
        .ids
        .iter()
        .filter(|id| model.component(id).is_some_and(|c| c.kind == ComponentKind::Vertical))
        .count();
    let exponent = match variant {
        NearbyVariant::TotalSpace if vertical > 0 => vertical - 1,
        NearbyVariant::OpenComplement if vertical == stratum.ids.len() => vertical - 1,
        NearbyVariant::Local => stratum.ids.len() - 1,
        _ => return None,
    };
    let weight = EquivClass::one_minus_lefschetz().pow(exponent as u32);
    Some(&stratum.cover_class * &weight)
}

/// Evaluates the nearby-fiber stratum sum. Components that occur in no
/// stratum are reported by [`SncModel::unused_components`]; they do not stop
/// the evaluation.
pub fn nearby_fiber_class(model: &SncModel, variant: NearbyVariant) -> EquivClass {
    model
        .strata
        .iter()
        .filter_map(|s| stratum_term(model, s, variant))
        .fold(EquivClass::zero(), |acc, t| &acc + &t)
}

fn vertical_multiplicities<'a, I>(ids: I, model: &SncModel) -> Result<Vec<u64>, MotivicError>
where
    I: IntoIterator<Item = &'a str>,
{
    ids.into_iter()
        .map(|id| match model.component(id) {
            None => Err(MotivicError::UnknownComponent { id: id.to_string() }),
            Some(c) if c.kind == ComponentKind::Horizontal => {
                Err(MotivicError::HorizontalComponent { id: id.to_string() })
            }
            Some(c) => Ok(c.multiplicity),
        })
        .collect()
}

fn gcd_all(ms: &[u64]) -> u64 {
    ms.iter().fold(0, |acc, m| acc.gcd(m))
}

/// Degree of the cyclic cover `Ẽ_I° → E_I°`: `GCD(m_i | i ∈ I)`.
pub fn covering_degree(ids: &[&str], model: &SncModel) -> Result<u64, MotivicError> {
    if ids.is_empty() {
        return Err(MotivicError::EmptyIdSet);
    }
    Ok(gcd_all(&vertical_multiplicities(ids.iter().copied(), model)?))
}

/// Number of connected components of `Ẽ_I°` when `E_I ≅ ℙ¹` and
/// `E_I° = E_I ∖ (E_{i'} ∪ E_{i''}) ≅ ℂ*` with `i'` vertical:
/// `GCD(m_i | i ∈ I ∪ {i'})`.
///
/// The geometric hypothesis is not checked; only the multiplicities enter.
pub fn component_count_cstar(
    ids: &[&str],
    adjacent: &str,
    model: &SncModel,
) -> Result<u64, MotivicError> {
    if ids.is_empty() {
        return Err(MotivicError::EmptyIdSet);
    }
    let ms = vertical_multiplicities(ids.iter().copied().chain(std::iter::once(adjacent)), model)?;
    Ok(gcd_all(&ms))
}
