//! Serializable reports, one per subcommand, and their text renderings.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use superjac::algebra::PrimePower;
use superjac::cm_obstruction::{FeasibilityReport, InvariantAutoReport};
use superjac::curve_model::GluingData;
use superjac::decomposition::{DecompositionLevel, EndAlgebraDescription, GaloisHypothesis, NonIsotrivialPrediction};
use superjac::elliptic::JInvariant;
use superjac::galois::GaloisLabel;

/// Renders a report as plain text.
pub trait Text {
    fn text(&self) -> String;
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct GenusReport {
    pub n: u64,
    pub q: u64,
    pub p: u64,
    pub r: u32,
    pub genus: u64,
    pub lattice: u64,
    pub hurwitz: u64,
}

impl Text for GenusReport {
    fn text(&self) -> String {
        self.genus.to_string()
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct SpectrumReport {
    pub n: u64,
    pub q: u64,
    pub p: u64,
    pub r: u32,
    /// `k -> multiplicity of zeta^{-k}`.
    pub multiplicities: BTreeMap<u64, u64>,
    pub total: u64,
    pub primitive_mass: u64,
}

impl Text for SpectrumReport {
    fn text(&self) -> String {
        let mut out = format!("{:>6}  {:>12}  primitive\n", "k", "multiplicity");
        for (&k, &m) in &self.multiplicities {
            let prim = if k % self.p != 0 { "yes" } else { "no" };
            let _ = writeln!(out, "{k:>6}  {m:>12}  {prim}");
        }
        let _ = write!(out, "total {}, primitive {}", self.total, self.primitive_mass);
        out
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct DecomposeReport {
    pub n: u64,
    pub q: u64,
    pub p: u64,
    pub r: u32,
    pub levels: Vec<DecompositionLevel>,
    pub genus: u64,
}

impl Text for DecomposeReport {
    fn text(&self) -> String {
        let mut out = format!("{:>5}  {:>7}  {:<14}  {:>9}\n", "level", "modulus", "field", "dimension");
        for l in &self.levels {
            let _ = writeln!(out, "{:>5}  {:>7}  {:<14}  {:>9}", l.level, l.modulus, l.field_label(), l.new_part_dim);
        }
        let _ = write!(out, "genus {}", self.genus);
        out
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct EndoReport {
    pub n: u64,
    pub q: u64,
    pub p: u64,
    pub r: u32,
    pub galois: GaloisHypothesis,
    #[serde(flatten)]
    pub description: EndAlgebraDescription,
}

impl Text for EndoReport {
    fn text(&self) -> String {
        let mut out = self.description.to_string();
        for a in &self.description.annotations {
            let _ = write!(out, "\nlevel {}: End = {}", a.level, a.ring);
        }
        let _ = write!(out, "\n{}", serde_json::to_value(self.description.status).expect("plain enum").as_str().unwrap_or(""));
        out
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct NonIsotrivialReport {
    pub n: u64,
    pub q: u64,
    pub p: u64,
    pub r: u32,
    pub galois: GaloisHypothesis,
    #[serde(flatten)]
    pub prediction: NonIsotrivialPrediction,
}

impl Text for NonIsotrivialReport {
    fn text(&self) -> String {
        let mut out = String::new();
        for l in &self.prediction.levels {
            let status = serde_json::to_value(l.status).expect("plain enum");
            let _ = writeln!(out, "level {} (modulus {}): {}", l.level, l.modulus, status.as_str().unwrap_or(""));
        }
        let fully = match self.prediction.fully {
            Some(true) => "yes",
            Some(false) => "no",
            None => "unknown",
        };
        let _ = write!(out, "completely non-isotrivial: {fully}");
        out
    }
}

pub fn invariant_line(r: &InvariantAutoReport) -> String {
    format!("{:>3} {:>6}  invariant {:?}  zero-set {:?}", r.n, r.q, r.invariant_ms, r.zero_set_ms)
}

pub fn feasibility_line(r: &FeasibilityReport) -> String {
    format!("{:>3} {:>6}  |B| {:>5}  dim W {:>6}  feasible {}", r.n, r.q, r.b_count, r.dim_w.to_string(), r.feasible)
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct GaloisReport {
    pub poly: String,
    /// `"Q"` for a polynomial over the rationals, `"Qbar(t)"` for a family
    /// `g(x) - t`.
    pub base: String,
    pub degree: usize,
    pub group: GaloisLabel,
    pub discriminant: String,
    pub doubly_transitive: bool,
}

impl Text for GaloisReport {
    fn text(&self) -> String {
        format!("{} over {} (discriminant {})", self.group, self.base, self.discriminant)
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct JReport {
    pub poly: String,
    pub j: JInvariant,
    pub display: String,
    pub isotrivial: bool,
}

impl Text for JReport {
    fn text(&self) -> String {
        self.display.clone()
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct HpReport {
    pub pole: String,
    pub j: JInvariant,
    pub identity: bool,
}

impl Text for HpReport {
    fn text(&self) -> String {
        format!("j = {} ({})", self.j.value, if self.identity { "identity holds" } else { "identity fails" })
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct ModelReport {
    pub poly: String,
    pub p: u64,
    pub r: u32,
    #[serde(flatten)]
    pub gluing: GluingData,
    pub chart_identity: bool,
    pub delta_order: u64,
    pub genus: u64,
}

impl Text for ModelReport {
    fn text(&self) -> String {
        let g = &self.gluing;
        let mut out = format!("n {}, q {}, a {}, b {}", g.n, g.q, g.a, g.b);
        if let Some(t) = &g.tilde_f {
            let _ = write!(out, "\nreversed f: {t}");
        }
        let _ = write!(
            out,
            "\nchart identity: {}\ndelta order at infinity: {}\ngenus: {}",
            if self.chart_identity { "holds" } else { "fails" },
            self.delta_order,
            self.genus
        );
        out
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct HeartReport {
    pub group: String,
    pub degree: usize,
    pub prime: u64,
    pub doubly_transitive: bool,
    pub centralizer_dim: usize,
    pub absolutely_irreducible: bool,
}

impl Text for HeartReport {
    fn text(&self) -> String {
        self.centralizer_dim.to_string()
    }
}

pub fn q_parts(q: PrimePower) -> (u64, u64, u32) {
    (q.q(), q.p(), q.r())
}
