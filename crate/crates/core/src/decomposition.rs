//! Splitting of `Q[delta_q]` into cyclotomic fields, the dimensions of the
//! new parts `J^(f,p^i)`, and the endomorphism and non-isotriviality
//! predictions for doubly transitive Galois groups.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::algebra::arith::euler_phi;
use crate::algebra::{cyclotomic_of, PolyQ, PrimePower};
use crate::differentials::check_pair;
use crate::error::{Error, Result};
use crate::galois::GaloisLabel;

/// `[Phi_p, Phi_{p^2}, ..., Phi_{p^r}]`.
pub fn factor_geometric_poly(q: PrimePower) -> Vec<PolyQ> {
    q.levels().map(cyclotomic_of).collect()
}

/// `dim J^(f,q) = (n - 1)(q - q/p) / 2`.
pub fn new_part_dim(n: u64, q: PrimePower) -> Result<u64> {
    check_pair(n, q)?;
    Ok((n - 1) * q.phi() / 2)
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct DecompositionLevel {
    pub level: u32,
    /// `p^level`; the level's field is `Q(zeta_modulus)`.
    pub modulus: u64,
    pub field_degree: u64,
    pub new_part_dim: u64,
}

impl DecompositionLevel {
    pub fn field_label(&self) -> String {
        EndFactor::cyclotomic(self.modulus).to_string()
    }
}

pub fn decomposition_ledger(n: u64, q: PrimePower) -> Result<Vec<DecompositionLevel>> {
    check_pair(n, q)?;
    q.levels()
        .map(|lvl| {
            Ok(DecompositionLevel {
                level: lvl.r(),
                modulus: lvl.q(),
                field_degree: lvl.phi(),
                new_part_dim: new_part_dim(n, lvl)?,
            })
        })
        .collect()
}

/// One simple factor of an endomorphism algebra.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum EndFactor {
    #[serde(rename = "Q")]
    Rational,
    #[serde(rename = "cyclotomic")]
    Cyclotomic { modulus: u64 },
    #[serde(rename = "matrix")]
    Matrix { size: u64, modulus: u64 },
}

impl EndFactor {
    /// `Q(zeta_m)`, collapsing `m = 2` to `Q`.
    pub fn cyclotomic(modulus: u64) -> Self {
        if modulus <= 2 {
            EndFactor::Rational
        } else {
            EndFactor::Cyclotomic { modulus }
        }
    }

    /// Dimension over Q.
    pub fn dimension(&self) -> u64 {
        match *self {
            EndFactor::Rational => 1,
            EndFactor::Cyclotomic { modulus } => euler_phi(modulus),
            EndFactor::Matrix { size, modulus } => size * size * euler_phi(modulus),
        }
    }
}

impl fmt::Display for EndFactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            EndFactor::Rational => f.write_str("Q"),
            EndFactor::Cyclotomic { modulus } => write!(f, "Q(zeta_{modulus})"),
            EndFactor::Matrix { size, modulus } if modulus <= 2 => write!(f, "Mat_{size}(Q)"),
            EndFactor::Matrix { size, modulus } => write!(f, "Mat_{size}(Q(zeta_{modulus}))"),
        }
    }
}

/// Integral refinement `End(J^(f,p^i)) = Z[zeta_{p^i}]` of one level.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct IntegralAnnotation {
    pub level: u32,
    pub ring: String,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PredictionStatus {
    /// Follows from the theorems for `n = 3, 4`.
    Asserted,
    /// Generic cyclotomic ledger for other doubly transitive groups; relies
    /// on results for `n >= 5` proved elsewhere and is not asserted here.
    Conjectural,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct EndAlgebraDescription {
    pub factors: Vec<EndFactor>,
    pub total_reduced_dim: u64,
    pub levels: Vec<DecompositionLevel>,
    pub annotations: Vec<IntegralAnnotation>,
    pub status: PredictionStatus,
}

impl fmt::Display for EndAlgebraDescription {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.factors.iter().map(ToString::to_string).collect();
        f.write_str(&parts.join(" x "))
    }
}

/// What is known about `Gal(f)` as a permutation group on the roots.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub enum GaloisHypothesis {
    Label(GaloisLabel),
    Symmetric(u64),
    Alternating(u64),
    /// Only double transitivity is known.
    DoublyTransitive,
}

impl GaloisHypothesis {
    fn degree(&self) -> Option<u64> {
        match *self {
            GaloisHypothesis::Label(l) => l.degree(),
            GaloisHypothesis::Symmetric(k) | GaloisHypothesis::Alternating(k) => Some(k),
            GaloisHypothesis::DoublyTransitive => None,
        }
    }

    /// Checks the group acts on `n` roots.
    fn require_degree(&self, n: u64) -> Result<()> {
        match self.degree() {
            Some(k) if k != n => Err(Error::OutsideHypotheses(format!("{self} does not act on {n} roots"))),
            _ => Ok(()),
        }
    }

    pub fn is_doubly_transitive(&self, n: u64) -> bool {
        match *self {
            GaloisHypothesis::Label(l) => l.is_doubly_transitive(n),
            GaloisHypothesis::Symmetric(k) => k == n && k >= 2,
            GaloisHypothesis::Alternating(k) => k == n && k >= 4,
            GaloisHypothesis::DoublyTransitive => true,
        }
    }

    /// `(3, S3)`, `(4, S4)` and `(4, A4)`.
    fn in_theorem_table(&self, n: u64) -> bool {
        let label = match *self {
            GaloisHypothesis::Label(l) => Some(l),
            GaloisHypothesis::Symmetric(3) => Some(GaloisLabel::S3),
            GaloisHypothesis::Symmetric(4) => Some(GaloisLabel::S4),
            GaloisHypothesis::Alternating(4) => Some(GaloisLabel::A4),
            _ => None,
        };
        matches!((n, label), (3, Some(GaloisLabel::S3)) | (4, Some(GaloisLabel::S4 | GaloisLabel::A4)))
    }
}

impl From<GaloisLabel> for GaloisHypothesis {
    fn from(l: GaloisLabel) -> Self {
        GaloisHypothesis::Label(l)
    }
}

impl fmt::Display for GaloisHypothesis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GaloisHypothesis::Label(l) => write!(f, "{l}"),
            GaloisHypothesis::Symmetric(k) => write!(f, "S{k}"),
            GaloisHypothesis::Alternating(k) => write!(f, "A{k}"),
            GaloisHypothesis::DoublyTransitive => f.write_str("doubly-transitive"),
        }
    }
}

impl FromStr for GaloisHypothesis {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.eq_ignore_ascii_case("doubly-transitive") || s.eq_ignore_ascii_case("2-transitive") {
            return Ok(GaloisHypothesis::DoublyTransitive);
        }
        if let Ok(label) = s.parse::<GaloisLabel>() {
            return Ok(GaloisHypothesis::Label(label));
        }
        let unknown = || Error::OutsideHypotheses(format!("unknown Galois hypothesis {s:?}"));
        let (head, digits) = s.split_at(s.chars().next().map_or(0, char::len_utf8));
        let k: u64 = digits.parse().map_err(|_| unknown())?;
        match head {
            "S" | "s" if k >= 5 => Ok(GaloisHypothesis::Symmetric(k)),
            "A" | "a" if k >= 5 => Ok(GaloisHypothesis::Alternating(k)),
            _ => Err(unknown()),
        }
    }
}

impl TryFrom<String> for GaloisHypothesis {
    type Error = Error;
    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl From<GaloisHypothesis> for String {
    fn from(h: GaloisHypothesis) -> String {
        h.to_string()
    }
}

fn integral_ring(modulus: u64) -> String {
    if modulus == 2 {
        "Z".to_string()
    } else {
        format!("Z[zeta_{modulus}]")
    }
}

fn describe(factors: Vec<EndFactor>, levels: Vec<DecompositionLevel>, annotations: Vec<IntegralAnnotation>, status: PredictionStatus) -> EndAlgebraDescription {
    let total_reduced_dim = factors.iter().map(EndFactor::dimension).sum();
    EndAlgebraDescription { factors, total_reduced_dim, levels, annotations, status }
}

/// `End^0(J(C_{f,q}))` for `(n, Gal f)` in `(3, S3)`, `(4, S4)`, `(4, A4)`.
///
/// Each level contributes `Q(zeta_{p^i})`, except that `(3, 2)` is the
/// elliptic curve `y^2 = f(x)` with `End^0 = Q` and `(3, 4)` is isogenous to
/// the square of the CM curve `y^2 = x^3 - x`, contributing
/// `Mat_2(Q(zeta_4))`.
pub fn predict_end_algebra(n: u64, q: PrimePower, hypothesis: GaloisHypothesis) -> Result<EndAlgebraDescription> {
    check_pair(n, q)?;
    hypothesis.require_degree(n)?;
    if !hypothesis.in_theorem_table(n) {
        return Err(Error::OutsideHypotheses(format!("(n, Gal f) = ({n}, {hypothesis})")));
    }
    let levels = decomposition_ledger(n, q)?;
    let mut factors = Vec::with_capacity(levels.len());
    let mut annotations = Vec::new();
    for lvl in &levels {
        if (n, lvl.modulus) == (3, 4) {
            factors.push(EndFactor::Matrix { size: 2, modulus: 4 });
        } else {
            factors.push(EndFactor::cyclotomic(lvl.modulus));
            annotations.push(IntegralAnnotation { level: lvl.level, ring: integral_ring(lvl.modulus) });
        }
    }
    Ok(describe(factors, levels, annotations, PredictionStatus::Asserted))
}

/// Like [`predict_end_algebra`], but for doubly transitive groups outside
/// the theorem table returns the generic cyclotomic ledger tagged
/// [`PredictionStatus::Conjectural`].
pub fn predict_end_algebra_or_conjectural(n: u64, q: PrimePower, hypothesis: GaloisHypothesis) -> Result<EndAlgebraDescription> {
    check_pair(n, q)?;
    hypothesis.require_degree(n)?;
    if hypothesis.in_theorem_table(n) {
        return predict_end_algebra(n, q, hypothesis);
    }
    if !hypothesis.is_doubly_transitive(n) {
        return Err(Error::OutsideHypotheses(format!("{hypothesis} is not doubly transitive on {n} roots")));
    }
    let levels = decomposition_ledger(n, q)?;
    let factors = levels.iter().map(|l| EndFactor::cyclotomic(l.modulus)).collect();
    Ok(describe(factors, levels, Vec::new(), PredictionStatus::Conjectural))
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum LevelStatus {
    CompletelyNonIsotrivial,
    /// `J^(f,4)` for `n = 3`: isogenous to a constant CM square.
    IsotrivialCmSquare,
    Unknown,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct LevelVerdict {
    pub level: u32,
    pub modulus: u64,
    pub status: LevelStatus,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct NonIsotrivialPrediction {
    /// `Some(true)` if `J(C_{f,q})` is completely non-isotrivial, `Some(false)`
    /// if some level is isotrivial, `None` if undetermined.
    pub fully: Option<bool>,
    pub levels: Vec<LevelVerdict>,
}

impl NonIsotrivialPrediction {
    pub fn nonisotrivial_levels(&self) -> Vec<u32> {
        self.levels.iter().filter(|l| l.status == LevelStatus::CompletelyNonIsotrivial).map(|l| l.level).collect()
    }
}

/// Level-by-level non-isotriviality. For doubly transitive `Gal(f)` every
/// `J^(f,p^i)` with `(n, p^i) != (3, 4)` is completely non-isotrivial.
pub fn predict_nonisotrivial(n: u64, q: PrimePower, hypothesis: GaloisHypothesis) -> Result<NonIsotrivialPrediction> {
    check_pair(n, q)?;
    hypothesis.require_degree(n)?;
    let doubly = hypothesis.is_doubly_transitive(n);
    let levels: Vec<LevelVerdict> = q
        .levels()
        .map(|lvl| {
            let status = if (n, lvl.q()) == (3, 4) && doubly {
                LevelStatus::IsotrivialCmSquare
            } else if doubly {
                LevelStatus::CompletelyNonIsotrivial
            } else {
                LevelStatus::Unknown
            };
            LevelVerdict { level: lvl.r(), modulus: lvl.q(), status }
        })
        .collect();
    let fully = if levels.iter().any(|l| l.status == LevelStatus::IsotrivialCmSquare) {
        Some(false)
    } else if levels.iter().all(|l| l.status == LevelStatus::CompletelyNonIsotrivial) {
        Some(true)
    } else {
        None
    };
    Ok(NonIsotrivialPrediction { fully, levels })
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub enum Verdict {
    EqualsE,
    CMType,
    ContainsCMSubvariety,
    OutOfBound,
}

/// Case analysis for an abelian variety `X` with multiplication by a
/// number field `E`, given `dim_E End^0(X, i)`.
pub fn bigend_dichotomy(dim_x: u64, deg_e: u64, centralizer_dim: u64) -> Result<Verdict> {
    let unsupported = Error::UnsupportedRelation { dim_x, deg_e };
    if deg_e == 0 || dim_x == 0 {
        return Err(unsupported);
    }
    let square_shape = dim_x == deg_e;
    let three_halves_shape = 2 * dim_x == 3 * deg_e;
    if !square_shape && !three_halves_shape {
        return Err(unsupported);
    }
    if centralizer_dim == 0 {
        return Err(Error::ZeroInput);
    }
    let ratio = 2 * dim_x / deg_e;
    if centralizer_dim > ratio * ratio {
        return Ok(Verdict::OutOfBound);
    }
    if centralizer_dim == 1 {
        return Ok(Verdict::EqualsE);
    }
    Ok(match (square_shape, centralizer_dim) {
        (true, _) => Verdict::CMType,
        (false, 3 | 9) => Verdict::CMType,
        (false, _) => Verdict::ContainsCMSubvariety,
    })
}
