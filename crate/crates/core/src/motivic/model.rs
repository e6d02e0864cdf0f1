//! Simple-normal-crossing models and their JSON file format.
//!
//! ```json
//! {
//!   "n": 2,
//!   "components": [
//!     {"id": "E1", "multiplicity": 2, "kind": "vertical"}
//!   ],
//!   "strata": [
//!     {"ids": ["E1"], "cover_class": [[1, 1, "0", 1], [1, 1, "1/2", 1]]}
//!   ]
//! }
//! ```
//!
//! Each `cover_class` entry is `[p, q, angle, multiplicity]`. It is the
//! signed class `Σ_j (−1)^j [H^j_c(Ẽ_I°)]` of the cyclic cover of the open
//! stratum, graded by Hodge bidegree and by the eigenvalue angle of `T_s`.
//! `T_s` is the inverse of the pullback of the geometric monodromy, i.e. the
//! local-system monodromy. Angles are exact rationals in `[0, 1)` written in
//! lowest terms as strings.
//!
//! [`SncModel::to_json`] writes the canonical layout shown above, and a
//! canonical file survives `from_json` followed by `to_json` byte for byte.

use std::collections::{BTreeMap, BTreeSet};
use std::str::FromStr;

use serde_json::{Map, Value};

use super::class::{EquivClass, HodgeKey};
use super::MotivicError;
use crate::polyalg::Rational;
use crate::spectrum::Residue;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ComponentKind {
    /// A component `Y_i` of the special fiber.
    Vertical,
    /// A component `D_j` of the horizontal divisor.
    Horizontal,
}

impl ComponentKind {
    fn as_str(self) -> &'static str {
        match self {
            ComponentKind::Vertical => "vertical",
            ComponentKind::Horizontal => "horizontal",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SncComponent {
    pub id: String,
    pub multiplicity: u64,
    pub kind: ComponentKind,
}

/// An open stratum `E_I°` together with the class of its cyclic cover.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Stratum {
    pub ids: Vec<String>,
    pub cover_class: EquivClass,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SncModel {
    pub n: i64,
    pub components: Vec<SncComponent>,
    pub strata: Vec<Stratum>,
}

fn schema(pointer: impl Into<String>, message: impl Into<String>) -> MotivicError {
    MotivicError::Schema { pointer: pointer.into(), message: message.into() }
}

fn expect_keys(obj: &Map<String, Value>, pointer: &str, keys: &[&str]) -> Result<(), MotivicError> {
    for k in obj.keys() {
        if !keys.contains(&k.as_str()) {
            return Err(schema(format!("{pointer}/{k}"), format!("unknown key `{k}`")));
        }
    }
    for k in keys {
        if !obj.contains_key(*k) {
            return Err(schema(pointer.to_string(), format!("missing key `{k}`")));
        }
    }
    Ok(())
}

fn as_object<'a>(v: &'a Value, pointer: &str) -> Result<&'a Map<String, Value>, MotivicError> {
    v.as_object().ok_or_else(|| schema(pointer, "expected an object"))
}

fn as_array<'a>(v: &'a Value, pointer: &str) -> Result<&'a Vec<Value>, MotivicError> {
    v.as_array().ok_or_else(|| schema(pointer, "expected an array"))
}

fn as_i64(v: &Value, pointer: &str) -> Result<i64, MotivicError> {
    v.as_i64().ok_or_else(|| schema(pointer, "expected an integer"))
}

fn as_str<'a>(v: &'a Value, pointer: &str) -> Result<&'a str, MotivicError> {
    v.as_str().ok_or_else(|| schema(pointer, "expected a string"))
}

fn parse_angle(v: &Value, pointer: &str) -> Result<Residue, MotivicError> {
    let s = as_str(v, pointer)?;
    let r = Rational::from_str(s)
        .map_err(|_| schema(pointer, format!("`{s}` is not an exact rational")))?;
    if r < Rational::from_integer(0.into()) || r >= Rational::from_integer(1.into()) {
        return Err(schema(pointer, format!("angle {s} is outside [0, 1)")));
    }
    if r.to_string() != s {
        return Err(schema(pointer, format!("angle `{s}` is not in lowest terms; write `{r}`")));
    }
    Ok(Residue::of(&r))
}

/// Parses a `cover_class` array.
pub fn parse_class(v: &Value, pointer: &str) -> Result<EquivClass, MotivicError> {
    let mut seen = BTreeSet::new();
    let mut class = EquivClass::zero();
    for (i, entry) in as_array(v, pointer)?.iter().enumerate() {
        let ptr = format!("{pointer}/{i}");
        let items = as_array(entry, &ptr)?;
        if items.len() != 4 {
            return Err(schema(ptr, "expected [p, q, angle, multiplicity]"));
        }
        let p = as_i64(&items[0], &format!("{ptr}/0"))?;
        let q = as_i64(&items[1], &format!("{ptr}/1"))?;
        let angle = parse_angle(&items[2], &format!("{ptr}/2"))?;
        let mult = as_i64(&items[3], &format!("{ptr}/3"))?;
        if mult == 0 {
            return Err(schema(format!("{ptr}/3"), "zero multiplicities are not stored"));
        }
        let key = HodgeKey::new(p, q, angle);
        if !seen.insert(key.clone()) {
            return Err(schema(ptr, "duplicate (p, q, angle) entry"));
        }
        class.add_entry(key, mult);
    }
    Ok(class)
}

fn render_class(c: &EquivClass) -> String {
    let entries: Vec<String> = c
        .entries()
        .iter()
        .map(|(k, m)| format!("[{}, {}, \"{}\", {}]", k.p, k.q, k.angle, m))
        .collect();
    format!("[{}]", entries.join(", "))
}

impl SncModel {
    pub fn from_json(text: &str) -> Result<Self, MotivicError> {
        let root: Value = serde_json::from_str(text).map_err(|e| {
            schema("", format!("invalid JSON at line {}, column {}: {e}", e.line(), e.column()))
        })?;
        let obj = as_object(&root, "")?;
        expect_keys(obj, "", &["n", "components", "strata"])?;

        let n = as_i64(&obj["n"], "/n")?;
        if n < 1 {
            return Err(schema("/n", "dimension must be at least 1"));
        }

        let mut components = Vec::new();
        let mut index: BTreeMap<String, usize> = BTreeMap::new();
        for (i, c) in as_array(&obj["components"], "/components")?.iter().enumerate() {
            let ptr = format!("/components/{i}");
            let co = as_object(c, &ptr)?;
            expect_keys(co, &ptr, &["id", "multiplicity", "kind"])?;
            let id = as_str(&co["id"], &format!("{ptr}/id"))?.to_string();
            if id.is_empty() {
                return Err(schema(format!("{ptr}/id"), "empty component id"));
            }
            let multiplicity = co["multiplicity"].as_u64().filter(|&m| m > 0).ok_or_else(|| {
                schema(format!("{ptr}/multiplicity"), "expected a positive integer")
            })?;
            let kind = match as_str(&co["kind"], &format!("{ptr}/kind"))? {
                "vertical" => ComponentKind::Vertical,
                "horizontal" => ComponentKind::Horizontal,
                other => {
                    return Err(schema(
                        format!("{ptr}/kind"),
                        format!("expected \"vertical\" or \"horizontal\", found \"{other}\""),
                    ))
                }
            };
            if index.insert(id.clone(), i).is_some() {
                return Err(schema(format!("{ptr}/id"), format!("duplicate component id `{id}`")));
            }
            components.push(SncComponent { id, multiplicity, kind });
        }
        if !components.iter().any(|c| c.kind == ComponentKind::Vertical) {
            return Err(schema("/components", "at least one vertical component is required"));
        }

        let mut strata = Vec::new();
        let mut seen_sets: BTreeSet<BTreeSet<String>> = BTreeSet::new();
        for (i, s) in as_array(&obj["strata"], "/strata")?.iter().enumerate() {
            let ptr = format!("/strata/{i}");
            let so = as_object(s, &ptr)?;
            expect_keys(so, &ptr, &["ids", "cover_class"])?;
            let raw_ids = as_array(&so["ids"], &format!("{ptr}/ids"))?;
            if raw_ids.is_empty() {
                return Err(schema(format!("{ptr}/ids"), "a stratum needs at least one component"));
            }
            let mut ids = Vec::new();
            let mut set = BTreeSet::new();
            for (j, id) in raw_ids.iter().enumerate() {
                let iptr = format!("{ptr}/ids/{j}");
                let id = as_str(id, &iptr)?.to_string();
                if !index.contains_key(&id) {
                    return Err(schema(iptr, format!("unknown component `{id}`")));
                }
                if !set.insert(id.clone()) {
                    return Err(schema(iptr, format!("component `{id}` listed twice")));
                }
                ids.push(id);
            }
            if !seen_sets.insert(set) {
                return Err(schema(format!("{ptr}/ids"), "duplicate stratum"));
            }
            let cover_class = parse_class(&so["cover_class"], &format!("{ptr}/cover_class"))?;
            strata.push(Stratum { ids, cover_class });
        }
        Ok(SncModel { n, components, strata })
    }

    /// Canonical JSON text, terminated by a newline.
    pub fn to_json(&self) -> String {
        let quote = |s: &str| serde_json::to_string(s).expect("strings serialize");
        let mut out = String::new();
        out.push_str("{\n");
        out.push_str(&format!("  \"n\": {},\n", self.n));
        out.push_str("  \"components\": [\n");
        let comps: Vec<String> = self
            .components
            .iter()
            .map(|c| {
                format!(
                    "    {{\"id\": {}, \"multiplicity\": {}, \"kind\": \"{}\"}}",
                    quote(&c.id),
                    c.multiplicity,
                    c.kind.as_str()
                )
            })
            .collect();
        out.push_str(&comps.join(",\n"));
        out.push_str("\n  ],\n");
        out.push_str("  \"strata\": [\n");
        let strata: Vec<String> = self
            .strata
            .iter()
            .map(|s| {
                let ids: Vec<String> = s.ids.iter().map(|i| quote(i)).collect();
                format!(
                    "    {{\"ids\": [{}], \"cover_class\": {}}}",
                    ids.join(", "),
                    render_class(&s.cover_class)
                )
            })
            .collect();
        out.push_str(&strata.join(",\n"));
        if !strata.is_empty() {
            out.push('\n');
        }
        out.push_str("  ]\n}\n");
        out
    }

    pub fn component(&self, id: &str) -> Option<&SncComponent> {
        self.components.iter().find(|c| c.id == id)
    }

    /// Declared components that appear in no stratum.
    pub fn unused_components(&self) -> Vec<String> {
        self.components
            .iter()
            .filter(|c| !self.strata.iter().any(|s| s.ids.contains(&c.id)))
            .map(|c| c.id.clone())
            .collect()
    }
}
