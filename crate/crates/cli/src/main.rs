mod report;

use std::io::{self, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use superjac::algebra::{parse_poly, rat, ParsedPoly, PrimePower};
use superjac::cm_obstruction::{cm_scan, feasible_scan};
use superjac::curve_model::{chart_identity_check, delta_chart_order, gluing_for, hurwitz_genus};
use superjac::decomposition::{decomposition_ledger, predict_end_algebra_or_conjectural, predict_nonisotrivial, GaloisHypothesis};
use superjac::differentials::{full_spectrum, genus_formula, genus_lattice, primitive_mass, NewtonTriangle};
use superjac::elliptic::{depress_cubic, hp_j_invariant, is_isotrivial, j_invariant, verify_hp_identity};
use superjac::galois::{
    classify_cubic_geometric, classify_cubic_rational, classify_quartic_geometric, classify_quartic_rational,
    family_discriminant, linear_t_family,
};
use superjac::heart::{heart_centralizer_dim, is_doubly_transitive, Perm, PermGroup};
use superjac::verify::run_all;

use report::*;

#[derive(Parser)]
#[command(name = "superjac", version, about = "Exact invariants of superelliptic jacobians y^q = f(x)")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Args)]
struct Pair {
    /// Degree of f.
    #[arg(long)]
    n: u64,
    #[command(flatten)]
    q: Modulus,
}

/// `q` directly, or as `p` and `r` with `q = p^r`.
#[derive(Args)]
struct Modulus {
    #[arg(long)]
    q: Option<u64>,
    #[arg(long)]
    p: Option<u64>,
    #[arg(long)]
    r: Option<u32>,
}

#[derive(Args)]
struct Out {
    #[arg(long, value_enum)]
    format: Option<Format>,
}

#[derive(Args)]
struct Sweep {
    /// Restrict the sweep to one degree.
    #[arg(long)]
    n: Option<u64>,
    #[arg(long)]
    n_max: Option<u64>,
    #[arg(long)]
    q_max: Option<u64>,
}

#[derive(Subcommand)]
enum Command {
    /// Genus by lattice count, closed formula and Riemann-Hurwitz.
    Genus {
        #[command(flatten)]
        pair: Pair,
        #[command(flatten)]
        out: Out,
    },
    /// Eigenvalue multiplicities of delta on holomorphic differentials.
    Spectrum {
        #[command(flatten)]
        pair: Pair,
        #[command(flatten)]
        out: Out,
    },
    /// Dimensions of the new parts at each level p^i.
    Decompose {
        #[command(flatten)]
        pair: Pair,
        #[command(flatten)]
        out: Out,
    },
    /// Predicted endomorphism algebra for a given Galois group.
    Endo {
        #[command(flatten)]
        pair: Pair,
        #[arg(long)]
        galois: String,
        #[command(flatten)]
        out: Out,
    },
    /// Level-by-level non-isotriviality prediction.
    Nonisotrivial {
        #[command(flatten)]
        pair: Pair,
        #[arg(long)]
        galois: String,
        #[command(flatten)]
        out: Out,
    },
    /// Searches for automorphisms of Q(zeta_q) preserving the multiplicities.
    CmScan {
        #[command(flatten)]
        sweep: Sweep,
        #[command(flatten)]
        out: Out,
    },
    /// Where the square-centralizer case is numerically possible.
    FeasibleScan {
        #[command(flatten)]
        sweep: Sweep,
        #[command(flatten)]
        out: Out,
    },
    /// Galois group of a cubic or quartic over Q, or of g(x) - t.
    Galois {
        #[arg(long)]
        poly: String,
        #[command(flatten)]
        out: Out,
    },
    /// j-invariant of y^2 = f(x) for a cubic f over Q or Q(t).
    Jinv {
        #[arg(long)]
        poly: String,
        #[command(flatten)]
        out: Out,
    },
    /// Checks j(x^3 - c x - c) = alpha for c = 27 alpha / (4 (alpha - 1728)).
    HpCheck {
        #[command(flatten)]
        out: Out,
    },
    /// Gluing data and the chart identity at infinity for y^q = f(x).
    ModelCheck {
        #[arg(long)]
        poly: String,
        #[command(flatten)]
        q: Modulus,
        #[command(flatten)]
        out: Out,
    },
    /// Centralizer dimension of a permutation group on its heart over F_p.
    Heart {
        /// S<k>, A<k>, C<k>, D4, V4 or trivial.
        #[arg(long, required_unless_present = "gens")]
        galois: Option<String>,
        /// Generators separated by ';', in cycle notation such as
        /// "(0 1);(0 1 2)".
        #[arg(long, conflicts_with = "galois")]
        gens: Option<String>,
        /// Number of points; implied by most group names.
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        p: u64,
        #[command(flatten)]
        out: Out,
    },
    /// Runs every acceptance criterion.
    VerifyAll {
        #[command(flatten)]
        out: Out,
    },
}

enum Failure {
    /// Bad arguments or input outside a precondition.
    Input(String),
    /// A computed result contradicts a proven identity.
    Invariant(String),
    Io(io::Error),
}

impl From<superjac::Error> for Failure {
    fn from(e: superjac::Error) -> Self {
        Failure::Input(e.to_string())
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

type Run = Result<(), Failure>;

fn check(cond: bool, what: impl FnOnce() -> String) -> Run {
    if cond {
        Ok(())
    } else {
        Err(Failure::Invariant(what()))
    }
}

impl Modulus {
    fn resolve(&self) -> Result<PrimePower, Failure> {
        match (self.q, self.p, self.r) {
            (Some(q), None, None) => Ok(PrimePower::new(q)?),
            (q, Some(p), Some(r)) => {
                let pp = PrimePower::from_parts(p, r)?;
                match q {
                    Some(q) if q != pp.q() => Err(Failure::Input(format!("q = {q} but p^r = {}", pp.q()))),
                    _ => Ok(pp),
                }
            }
            _ => Err(Failure::Input("give --q, or both --p and --r".into())),
        }
    }
}

impl Pair {
    fn resolve(&self) -> Result<(u64, PrimePower), Failure> {
        let q = self.q.resolve()?;
        q.require_coprime(self.n)?;
        Ok((self.n, q))
    }
}

impl Sweep {
    fn degrees(&self, default_max: u64) -> std::ops::RangeInclusive<u64> {
        match self.n {
            Some(n) => n..=n,
            None => 3..=self.n_max.unwrap_or(default_max),
        }
    }
}

fn emit<T: Serialize + Text>(w: &mut dyn Write, format: Option<Format>, report: &T) -> Run {
    match format.unwrap_or(Format::Text) {
        Format::Text => writeln!(w, "{}", report.text())?,
        Format::Json => writeln!(w, "{}", serde_json::to_string(report).expect("reports serialize"))?,
    }
    Ok(())
}

fn parse_hypothesis(text: &str) -> Result<GaloisHypothesis, Failure> {
    Ok(text.parse::<GaloisHypothesis>()?)
}

fn parse_group(name: Option<&str>, gens: Option<&str>, n: Option<usize>) -> Result<(String, PermGroup), Failure> {
    if let Some(gens) = gens {
        let n = n.ok_or_else(|| Failure::Input("--gens needs --n".into()))?;
        let perms = gens.split(';').map(|g| Perm::parse(n, g)).collect::<Result<Vec<_>, _>>()?;
        return Ok((gens.to_string(), PermGroup::new(n, perms)?));
    }
    let name = name.expect("clap requires --galois or --gens");
    let bad = || Failure::Input(format!("unknown group {name:?}"));
    if name.eq_ignore_ascii_case("trivial") {
        let n = n.ok_or_else(|| Failure::Input("the trivial group needs --n".into()))?;
        return Ok((name.to_string(), PermGroup::trivial(n)));
    }
    let group = match name {
        "D4" => PermGroup::new(4, vec![Perm::parse(4, "(0 1 2 3)")?, Perm::parse(4, "(0 2)")?])?,
        "V4" => PermGroup::new(4, vec![Perm::parse(4, "(0 1)(2 3)")?, Perm::parse(4, "(0 2)(1 3)")?])?,
        _ => {
            let (head, digits) = name.split_at(1.min(name.len()));
            let k: usize = digits.parse().map_err(|_| bad())?;
            match head {
                "S" => PermGroup::symmetric(k),
                "A" => PermGroup::alternating(k),
                "C" => PermGroup::cyclic(k),
                _ => return Err(bad()),
            }
        }
    };
    if let Some(n) = n.filter(|&n| n != group.degree()) {
        return Err(Failure::Input(format!("{name} acts on {} points, not {n}", group.degree())));
    }
    Ok((name.to_string(), group))
}

fn run(cmd: Command, w: &mut dyn Write) -> Run {
    match cmd {
        Command::Genus { pair, out } => {
            let (n, q) = pair.resolve()?;
            let (qq, p, r) = q_parts(q);
            let genus = genus_formula(n, q)?;
            let report = GenusReport {
                n,
                q: qq,
                p,
                r,
                genus,
                lattice: genus_lattice(&NewtonTriangle::new(n, q)?),
                hurwitz: hurwitz_genus(n, q)?,
            };
            emit(w, out.format, &report)?;
            check(report.lattice == genus && report.hurwitz == genus, || {
                format!("genus disagreement: formula {genus}, lattice {}, hurwitz {}", report.lattice, report.hurwitz)
            })
        }
        Command::Spectrum { pair, out } => {
            let (n, q) = pair.resolve()?;
            let (qq, p, r) = q_parts(q);
            let spectrum = full_spectrum(n, q)?;
            let report = SpectrumReport {
                n,
                q: qq,
                p,
                r,
                total: spectrum.total(),
                primitive_mass: primitive_mass(n, q)?,
                multiplicities: spectrum.multiplicities,
            };
            emit(w, out.format, &report)?;
            let genus = genus_formula(n, q)?;
            check(report.total == genus, || format!("spectrum mass {} differs from genus {genus}", report.total))
        }
        Command::Decompose { pair, out } => {
            let (n, q) = pair.resolve()?;
            let (qq, p, r) = q_parts(q);
            let report = DecomposeReport { n, q: qq, p, r, levels: decomposition_ledger(n, q)?, genus: genus_formula(n, q)? };
            emit(w, out.format, &report)?;
            let sum: u64 = report.levels.iter().map(|l| l.new_part_dim).sum();
            check(sum == report.genus, || format!("level dimensions sum to {sum}, genus is {}", report.genus))
        }
        Command::Endo { pair, galois, out } => {
            let (n, q) = pair.resolve()?;
            let (qq, p, r) = q_parts(q);
            let galois = parse_hypothesis(&galois)?;
            let description = predict_end_algebra_or_conjectural(n, q, galois)?;
            emit(w, out.format, &EndoReport { n, q: qq, p, r, galois, description })
        }
        Command::Nonisotrivial { pair, galois, out } => {
            let (n, q) = pair.resolve()?;
            let (qq, p, r) = q_parts(q);
            let galois = parse_hypothesis(&galois)?;
            let prediction = predict_nonisotrivial(n, q, galois)?;
            emit(w, out.format, &NonIsotrivialReport { n, q: qq, p, r, galois, prediction })
        }
        Command::CmScan { sweep, out } => {
            let mut bad = Vec::new();
            for report in cm_scan(sweep.degrees(12), sweep.q_max.unwrap_or(2048)) {
                let report = report?;
                match out.format.unwrap_or(Format::Json) {
                    Format::Json => writeln!(w, "{}", serde_json::to_string(&report).expect("reports serialize"))?,
                    Format::Text => writeln!(w, "{}", invariant_line(&report))?,
                }
                if !report.invariant_ms.is_empty() {
                    bad.push((report.n, report.q));
                }
            }
            check(bad.is_empty(), || format!("invariant automorphisms found at {bad:?}"))
        }
        Command::FeasibleScan { sweep, out } => {
            let mut bad = Vec::new();
            for report in feasible_scan(sweep.degrees(50), sweep.q_max.unwrap_or(1024)) {
                let report = report?;
                match out.format.unwrap_or(Format::Json) {
                    Format::Json => writeln!(w, "{}", serde_json::to_string(&report).expect("reports serialize"))?,
                    Format::Text => writeln!(w, "{}", feasibility_line(&report))?,
                }
                if report.feasible != ((report.n, report.q) == (3, 4)) {
                    bad.push((report.n, report.q));
                }
            }
            check(bad.is_empty(), || format!("feasibility differs from the (3, 4) classification at {bad:?}"))
        }
        Command::Galois { poly, out } => {
            let (base, g, group, disc) = match parse_poly(&poly)? {
                ParsedPoly::Rational(f) => {
                    let group = match f.degree() {
                        Some(3) => classify_cubic_rational(&f)?,
                        Some(4) => classify_quartic_rational(&f)?,
                        d => return Err(Failure::Input(format!("expected a cubic or quartic, got degree {}", d.unwrap_or(0)))),
                    };
                    ("Q", f.clone(), group, superjac::algebra::discriminant(&f)?.to_string())
                }
                ParsedPoly::OverQt(f) => {
                    let g = linear_t_family(&f)?;
                    let group = match g.degree() {
                        Some(3) => classify_cubic_geometric(&g)?,
                        Some(4) => classify_quartic_geometric(&g)?,
                        d => return Err(Failure::Input(format!("expected a cubic or quartic, got degree {}", d.unwrap_or(0)))),
                    };
                    ("Qbar(t)", g.clone(), group, family_discriminant(&g)?.to_string())
                }
            };
            let degree = g.degree().expect("nonzero");
            let report = GaloisReport {
                poly,
                base: base.into(),
                degree,
                group,
                discriminant: disc,
                doubly_transitive: group.is_doubly_transitive(degree as u64),
            };
            emit(w, out.format, &report)
        }
        Command::Jinv { poly, out } => {
            let j = j_invariant(&depress_cubic(&parse_poly(&poly)?.into_over_qt())?)?;
            let report = JReport { poly, display: j.value.to_integral_string(), isotrivial: is_isotrivial(&j), j };
            emit(w, out.format, &report)
        }
        Command::HpCheck { out } => {
            let report = HpReport { pole: "1728".into(), j: hp_j_invariant(&rat(1728, 1))?, identity: verify_hp_identity() };
            emit(w, out.format, &report)?;
            check(report.identity, || "j(x^3 - c x - c) differs from alpha".into())
        }
        Command::ModelCheck { poly, q, out } => {
            let q = q.resolve()?;
            let ParsedPoly::Rational(f) = parse_poly(&poly)? else {
                return Err(Failure::Input("f must have rational coefficients".into()));
            };
            let gluing = gluing_for(&f, q)?;
            let n = gluing.n;
            let report = ModelReport {
                poly,
                p: q.p(),
                r: q.r(),
                chart_identity: chart_identity_check(&f, q)?,
                delta_order: delta_chart_order(n, q)?,
                genus: genus_formula(n, q)?,
                gluing,
            };
            emit(w, out.format, &report)?;
            check(report.chart_identity, || "chart identity fails".into())?;
            check(report.delta_order == q.q(), || format!("delta has order {} at infinity", report.delta_order))
        }
        Command::Heart { galois, gens, n, p, out } => {
            let (name, group) = parse_group(galois.as_deref(), gens.as_deref(), n)?;
            let dim = heart_centralizer_dim(&group, p)?;
            let report = HeartReport {
                group: name,
                degree: group.degree(),
                prime: p,
                doubly_transitive: is_doubly_transitive(&group)?,
                centralizer_dim: dim,
                absolutely_irreducible: dim == 1,
            };
            emit(w, out.format, &report)?;
            check(!report.doubly_transitive || dim == 1, || format!("doubly transitive group with centralizer dimension {dim}"))
        }
        Command::VerifyAll { out } => {
            let outcomes = run_all();
            for o in &outcomes {
                match out.format.unwrap_or(Format::Text) {
                    Format::Json => writeln!(w, "{}", serde_json::to_string(o).expect("outcomes serialize"))?,
                    Format::Text => {
                        let verdict = if o.passed { "PASS" } else { "FAIL" };
                        write!(w, "criterion {:>2} {verdict}  {} ({} ms)", o.id, o.title, o.elapsed_ms)?;
                        if !o.passed {
                            write!(w, ": {}", o.detail)?;
                        }
                        writeln!(w)?;
                    }
                }
            }
            let failed: Vec<u32> = outcomes.iter().filter(|o| !o.passed).map(|o| o.id).collect();
            check(failed.is_empty(), || format!("failed criteria {failed:?}"))
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let stdout = io::stdout();
    let mut w = stdout.lock();
    let result = run(cli.command, &mut w).and_then(|()| w.flush().map_err(Failure::Io));
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Invariant(msg)) => {
            eprintln!("invariant failure: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(Failure::Io(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
