//! Reports: one structure rendered either as text or as JSON.
//!
//! Every field element and every count that may exceed 64 bits is a string,
//! so the JSON holds no floats and re-serialises byte-identically.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    /// Canonical form of the command line, without the input path.
    pub command: String,
    pub input: String,
    pub field: String,
    pub algebra: Option<AlgebraSummary>,
    pub result: Payload,
    pub notes: Vec<String>,
    pub exit_status: i32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraSummary {
    pub dim: usize,
    pub center_dim: usize,
    pub commutator_dim: usize,
    pub basis: Vec<String>,
    pub unit: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DimRow {
    pub degree: usize,
    pub dim: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuiverSummary {
    pub vertices: Vec<String>,
    pub arrows: Vec<String>,
    pub relations: usize,
    /// Smallest `N` with all paths of length `N` in the ideal.
    pub nilpotency: usize,
}

/// Evidence that a pencil of Gram matrices has no nonsingular member.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Evidence {
    pub searched_space_dim: usize,
    pub params: usize,
    pub degree: usize,
    pub points: usize,
    pub extension_degree: usize,
    pub prime_points: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessReport {
    /// `c` in basis coordinates.
    pub c: Vec<String>,
    /// `h` in dual basis coordinates.
    pub h: Vec<String>,
    pub c_display: String,
    pub h_display: String,
    /// Rank of `phi : T -> T*` built from the witness.
    pub iso_rank: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MethodReport {
    pub method: String,
    pub description: String,
    pub verdict: String,
    /// Whether a negative outcome decides not-symmetric.
    pub complete: bool,
    pub witness: Option<WitnessReport>,
    /// Symmetrizing form on the extension, in dual basis coordinates.
    pub form: Option<Vec<String>>,
    pub evidence: Option<Evidence>,
    /// Basis pair with `alpha(a, b)(1) != alpha(b, a)(1)`.
    pub failing_pair: Option<(String, String)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RelativeRow {
    pub degree: usize,
    pub relative_homology: usize,
    pub absolute_homology: usize,
    pub relative_cohomology: usize,
    pub absolute_cohomology: usize,
    /// Size of the relative basis `A (x)_{K^e} A^{(x)_K n}`.
    pub relative_group_size: String,
    /// Size of `A^{(x) n+1}`.
    pub absolute_group_size: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Payload {
    Validate {
        quiver: Option<QuiverSummary>,
        cocycles: Vec<String>,
        bimodules: Vec<String>,
    },
    Homology {
        coefficients: String,
        groups: Vec<DimRow>,
    },
    Cyclic {
        homology: Vec<DimRow>,
        cohomology: Vec<DimRow>,
    },
    Cohomology {
        coefficients: String,
        degree: usize,
        dim: usize,
        representatives: Vec<Vec<String>>,
    },
    Extend {
        cocycle: String,
        out: String,
        dim: usize,
        basis: Vec<String>,
        unit: String,
    },
    Symmetric {
        verdict: String,
        form: Option<Vec<String>>,
        evidence: Option<Evidence>,
    },
    Check {
        cocycle: String,
        consensus: Option<String>,
        verdicts: Vec<MethodReport>,
    },
    RelativeHh {
        nilpotency: usize,
        rows: Vec<RelativeRow>,
    },
    Error {
        message: String,
        dump: Option<String>,
    },
}

impl Report {
    pub fn to_machine(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports serialise");
        s.push('\n');
        s
    }

    pub fn from_machine(text: &str) -> serde_json::Result<Self> {
        serde_json::from_str(text)
    }

    pub fn to_human(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "command: {}", self.command);
        let _ = writeln!(out, "input:   {}", self.input);
        let _ = writeln!(out, "field:   {}", self.field);
        if let Some(a) = &self.algebra {
            let _ = writeln!(
                out,
                "algebra: dim {}, center dim {}, commutator dim {}",
                a.dim, a.center_dim, a.commutator_dim
            );
            let _ = writeln!(out, "basis:   {}", a.basis.join(" "));
            let _ = writeln!(out, "unit:    {}", a.unit);
        }
        out.push('\n');
        self.result.render(&mut out);
        for n in &self.notes {
            let _ = writeln!(out, "note: {n}");
        }
        let _ = writeln!(out, "exit status: {}", self.exit_status);
        out
    }
}

fn vector(v: &[String]) -> String {
    format!("({})", v.join(", "))
}

impl Evidence {
    fn render(&self, out: &mut String) {
        let _ = writeln!(
            out,
            "  evidence: searched space of dim {}; determinant vanishes at all {} lattice points \
             (degree {}, {} parameters, extension degree {}); prime-field points searched: {}",
            self.searched_space_dim, self.points, self.degree, self.params, self.extension_degree, self.prime_points
        );
    }
}

impl Payload {
    fn render(&self, out: &mut String) {
        match self {
            Payload::Validate {
                quiver,
                cocycles,
                bimodules,
            } => {
                let _ = writeln!(out, "valid");
                if let Some(q) = quiver {
                    let _ = writeln!(
                        out,
                        "quiver: vertices {}; arrows {}; {} relations; paths of length {} vanish",
                        q.vertices.join(" "),
                        q.arrows.join(", "),
                        q.relations,
                        q.nilpotency
                    );
                }
                let _ = writeln!(out, "cocycles: {}", cocycles.join(" "));
                if !bimodules.is_empty() {
                    let _ = writeln!(out, "bimodules: {}", bimodules.join(" "));
                }
            }
            Payload::Homology { coefficients, groups } => {
                for g in groups {
                    let _ = writeln!(out, "HH_{}(A, {coefficients}) = {}", g.degree, g.dim);
                }
            }
            Payload::Cyclic { homology, cohomology } => {
                for (h, c) in homology.iter().zip(cohomology) {
                    let _ = writeln!(out, "HC_{} = {}    HC^{} = {}", h.degree, h.dim, c.degree, c.dim);
                }
            }
            Payload::Cohomology {
                coefficients,
                degree,
                dim,
                representatives,
            } => {
                let _ = writeln!(out, "HH^{degree}(A, {coefficients}) = {dim}");
                for (i, r) in representatives.iter().enumerate() {
                    let _ = writeln!(out, "representative {}:", i + 1);
                    for line in r {
                        let _ = writeln!(out, "  {line}");
                    }
                }
            }
            Payload::Extend {
                cocycle,
                out: path,
                dim,
                basis,
                unit,
            } => {
                let _ = writeln!(out, "T(A, {cocycle}) written to {path}");
                let _ = writeln!(out, "dim {dim}; basis {}; unit {unit}", basis.join(" "));
            }
            Payload::Symmetric { verdict, form, evidence } => {
                let _ = writeln!(out, "verdict: {verdict}");
                if let Some(f) = form {
                    let _ = writeln!(out, "  symmetrizing form: {}", vector(f));
                }
                if let Some(e) = evidence {
                    e.render(out);
                }
            }
            Payload::Check {
                cocycle,
                consensus,
                verdicts,
            } => {
                let _ = writeln!(out, "cocycle: {cocycle}");
                if let Some(c) = consensus {
                    let _ = writeln!(out, "consensus: {c}");
                }
                for m in verdicts {
                    let _ = writeln!(out, "[{}] {}: {}", m.method, m.description, m.verdict);
                    if let Some(w) = &m.witness {
                        let _ = writeln!(out, "  c = {}  ({})", vector(&w.c), w.c_display);
                        let _ = writeln!(out, "  h = {}  ({})", vector(&w.h), w.h_display);
                        let _ = writeln!(out, "  bimodule isomorphism T -> T* of rank {}", w.iso_rank);
                    }
                    if let Some(f) = &m.form {
                        let _ = writeln!(out, "  symmetrizing form: {}", vector(f));
                    }
                    if let Some((a, b)) = &m.failing_pair {
                        let _ = writeln!(out, "  alpha({a}, {b})(1) != alpha({b}, {a})(1)");
                    }
                    if let Some(e) = &m.evidence {
                        e.render(out);
                    }
                }
            }
            Payload::RelativeHh { nilpotency, rows } => {
                let _ = writeln!(out, "paths of length {nilpotency} vanish");
                let _ = writeln!(out, "n  HH_n rel/abs  HH^n(A,A*) rel/abs  basis rel/abs");
                for r in rows {
                    let _ = writeln!(
                        out,
                        "{}  {}/{}  {}/{}  {}/{}",
                        r.degree,
                        r.relative_homology,
                        r.absolute_homology,
                        r.relative_cohomology,
                        r.absolute_cohomology,
                        r.relative_group_size,
                        r.absolute_group_size
                    );
                }
            }
            Payload::Error { message, dump } => {
                let _ = writeln!(out, "error: {message}");
                if let Some(d) = dump {
                    let _ = writeln!(out, "{d}");
                }
            }
        }
    }
}
