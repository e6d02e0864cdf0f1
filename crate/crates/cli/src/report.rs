//! Reports printed by the commands. Every rational is a string (`"5/6"`),
//! so JSON consumers never see a float.

use std::fmt::Write as _;

use limspec::{EigenMultiset, EquivClass, FracPoly};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "command", rename_all = "snake_case")]
pub enum Report {
    Sp(SpReport),
    Nearby(NearbyReport),
    Check(CheckReport),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Term {
    pub exponent: String,
    pub coefficient: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Eigenvalue {
    /// `θ` for the eigenvalue `exp(2πiθ)`.
    pub angle: String,
    pub multiplicity: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Eigenvalues {
    pub local_system: Vec<Eigenvalue>,
    pub geometric: Vec<Eigenvalue>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpReport {
    pub input: String,
    /// The parsed polynomial in canonical form.
    pub polynomial: String,
    pub vars: Vec<String>,
    pub weights: Vec<String>,
    pub weights_inferred: bool,
    pub milnor_number: u64,
    pub basis: Vec<String>,
    pub spectrum: String,
    pub spectrum_terms: Vec<Term>,
    pub spectrum_prime: String,
    pub symmetric: bool,
    pub eigenvalues: Eigenvalues,
    pub characteristic_polynomial: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassEntry {
    pub p: i64,
    pub q: i64,
    pub angle: String,
    pub multiplicity: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NearbyReport {
    pub file: String,
    pub variant: String,
    pub dim: i64,
    pub class: Vec<ClassEntry>,
    pub euler_specialization: i64,
    /// `Sp'` of the class as it stands.
    pub class_spectrum: String,
    /// `Sp'` used for the spectrum: for the local variant the class is read
    /// as a Milnor fiber (point class removed, sign `(−1)^{n−1}`), otherwise
    /// it equals `class_spectrum`.
    pub spectrum_prime: String,
    /// `t^n ι` of `spectrum_prime`.
    pub spectrum: String,
    pub warnings: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantResult {
    pub name: String,
    pub cases: usize,
    pub failures: usize,
    pub passed: bool,
    pub first_failure: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    pub corpus_size: usize,
    pub invariants: Vec<InvariantResult>,
    pub passed: bool,
}

pub(crate) fn terms(s: &FracPoly) -> Vec<Term> {
    s.terms().iter().map(|(e, &c)| Term { exponent: e.to_string(), coefficient: c }).collect()
}

pub(crate) fn eigenvalues(e: &EigenMultiset) -> Vec<Eigenvalue> {
    e.entries().iter().map(|(r, &m)| Eigenvalue { angle: r.to_string(), multiplicity: m }).collect()
}

pub(crate) fn class_entries(c: &EquivClass) -> Vec<ClassEntry> {
    c.entries()
        .iter()
        .map(|(k, &m)| ClassEntry { p: k.p, q: k.q, angle: k.angle.to_string(), multiplicity: m })
        .collect()
}

fn multiset_text(es: &[Eigenvalue]) -> String {
    let parts: Vec<String> =
        es.iter().map(|e| format!("{}: {}", e.angle, e.multiplicity)).collect();
    format!("{{{}}}", parts.join(", "))
}

impl Report {
    /// Process exit code for a report that was produced.
    pub fn exit_code(&self) -> u8 {
        match self {
            Report::Check(c) if !c.passed => 1,
            _ => 0,
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports serialize");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        match self {
            Report::Sp(r) => {
                let _ = writeln!(out, "f           {}", r.polynomial);
                let _ = writeln!(out, "vars        {}", r.vars.join(", "));
                let source = if r.weights_inferred { " (inferred)" } else { "" };
                let _ = writeln!(out, "weights     {}{source}", r.weights.join(", "));
                let _ = writeln!(out, "mu          {}", r.milnor_number);
                let _ = writeln!(out, "basis       {}", r.basis.join(", "));
                let _ = writeln!(out, "Sp          {}", r.spectrum);
                let _ = writeln!(out, "Sp'         {}", r.spectrum_prime);
                let _ = writeln!(out, "symmetric   {}", r.symmetric);
                let _ = writeln!(out, "T           {}", multiset_text(&r.eigenvalues.local_system));
                let _ = writeln!(out, "geometric   {}", multiset_text(&r.eigenvalues.geometric));
                let _ = writeln!(out, "char poly   {}", r.characteristic_polynomial);
            }
            Report::Nearby(r) => {
                let _ = writeln!(out, "file        {}", r.file);
                let _ = writeln!(out, "variant     {}", r.variant);
                let _ = writeln!(out, "dim         {}", r.dim);
                let class = if r.class.is_empty() {
                    "0".to_string()
                } else {
                    r.class
                        .iter()
                        .map(|e| format!("{:+}[{},{},{}]", e.multiplicity, e.p, e.q, e.angle))
                        .collect::<Vec<_>>()
                        .join(" ")
                };
                let _ = writeln!(out, "class       {class}");
                let _ = writeln!(out, "chi         {}", r.euler_specialization);
                let _ = writeln!(out, "Sp'(class)  {}", r.class_spectrum);
                let _ = writeln!(out, "Sp'         {}", r.spectrum_prime);
                let _ = writeln!(out, "Sp          {}", r.spectrum);
            }
            Report::Check(r) => {
                for inv in &r.invariants {
                    let status = if inv.passed { "PASS" } else { "FAIL" };
                    let _ = writeln!(out, "{status}  {:<24} {:>5} cases", inv.name, inv.cases);
                    if let Some(f) = &inv.first_failure {
                        let _ = writeln!(out, "      first failure: {f}");
                    }
                }
                let verdict = if r.passed { "all invariants hold" } else { "FAILED" };
                let _ = writeln!(out, "corpus of {} polynomials: {verdict}", r.corpus_size);
            }
        }
        out
    }
}
