//! The end-to-end checks run by `superjac verify-all`.

use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::algebra::{
    geometric_poly, parse_poly, prime_powers_up_to, rat, Field, ParsedPoly, PolyQ, PrimePower, RatFunc,
};
use crate::cm_obstruction::{coprime_pairs, invariant_automorphisms, square_case_feasible};
use crate::curve_model::{chart_identity_check, delta_chart_order, hurwitz_genus};
use crate::decomposition::{decomposition_ledger, factor_geometric_poly, predict_end_algebra, EndFactor};
use crate::differentials::{full_spectrum, genus_formula, genus_lattice, primitive_mass, NewtonTriangle};
use crate::elliptic::{depress_cubic, is_isotrivial, j_invariant, verify_hp_identity, JInvariant};
use crate::galois::{classify_cubic_geometric, classify_cubic_rational, GaloisLabel};
use crate::heart::{heart_centralizer_dim, PermGroup};

#[derive(Clone, Debug, Serialize)]
pub struct CriterionOutcome {
    pub id: u32,
    pub title: &'static str,
    pub passed: bool,
    /// Empty on success.
    pub detail: String,
    pub elapsed_ms: u128,
}

type Check = fn() -> std::result::Result<(), String>;

pub const CRITERIA: [(u32, &str, Option<u64>, Check); 11] = [
    (1, "genus: lattice = formula = Hurwitz", Some(2_000), genus_triple),
    (2, "spectrum mass and primitive mass", Some(2_000), spectrum_mass),
    (3, "no invariant automorphism of the multiplicities", Some(30_000), invariant_sweep),
    (4, "square centralizer feasible only at (3, 4)", Some(10_000), feasibility_sweep),
    (5, "endomorphism algebra predictions", None, end_algebras),
    (6, "j-invariant fixtures", None, j_fixtures),
    (7, "h_p identity", Some(100), hp_identity),
    (8, "Galois fixtures", None, galois_fixtures),
    (9, "heart centralizer dimensions", None, heart_fixtures),
    (10, "chart identity and delta order", None, chart_identity),
    (11, "cyclotomic factorization and dimension ledger", None, cyclotomic_bookkeeping),
];

/// Runs one criterion, failing it if it exceeds its time bound.
pub fn run_criterion(id: u32) -> Option<CriterionOutcome> {
    let &(id, title, bound_ms, check) = CRITERIA.iter().find(|c| c.0 == id)?;
    let start = Instant::now();
    let result = check();
    let elapsed = start.elapsed();
    let (passed, detail) = match result {
        Err(e) => (false, e),
        Ok(()) => match bound_ms {
            Some(b) if elapsed > Duration::from_millis(b) => (false, format!("took {} ms, bound {b} ms", elapsed.as_millis())),
            _ => (true, String::new()),
        },
    };
    Some(CriterionOutcome { id, title, passed, detail, elapsed_ms: elapsed.as_millis() })
}

pub fn run_all() -> Vec<CriterionOutcome> {
    CRITERIA.iter().filter_map(|c| run_criterion(c.0)).collect()
}

fn ensure(cond: bool, what: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(what())
    }
}

fn err(e: crate::Error) -> String {
    e.to_string()
}

fn genus_sweep() -> impl Iterator<Item = (u64, PrimePower)> {
    coprime_pairs(3..=30, 64)
}

fn genus_triple() -> std::result::Result<(), String> {
    for (n, q) in genus_sweep() {
        let expect = (n - 1) * (q.q() - 1) / 2;
        let lattice = genus_lattice(&NewtonTriangle::new(n, q).map_err(err)?);
        let formula = genus_formula(n, q).map_err(err)?;
        let hurwitz = hurwitz_genus(n, q).map_err(err)?;
        ensure(lattice == expect && formula == expect && hurwitz == expect, || {
            format!("({n}, {q}): lattice {lattice}, formula {formula}, hurwitz {hurwitz}, expected {expect}")
        })?;
    }
    Ok(())
}

fn spectrum_mass() -> std::result::Result<(), String> {
    for (n, q) in genus_sweep() {
        let total = full_spectrum(n, q).map_err(err)?.total();
        let prim = primitive_mass(n, q).map_err(err)?;
        ensure(total == (n - 1) * (q.q() - 1) / 2 && prim == (n - 1) * q.phi() / 2, || {
            format!("({n}, {q}): mass {total}, primitive mass {prim}")
        })?;
    }
    Ok(())
}

fn invariant_sweep() -> std::result::Result<(), String> {
    for (n, q) in coprime_pairs(3..=12, 2048) {
        let report = invariant_automorphisms(n, q).map_err(err)?;
        ensure(report.invariant_ms.is_empty(), || format!("({n}, {q}): invariant m {:?}", report.invariant_ms))?;
    }
    Ok(())
}

fn feasibility_sweep() -> std::result::Result<(), String> {
    for (n, q) in coprime_pairs(3..=50, 1024) {
        let feasible = square_case_feasible(n, q).map_err(err)?.feasible;
        ensure(feasible == ((n, q.q()) == (3, 4)), || format!("({n}, {q}): feasible = {feasible}"))?;
    }
    Ok(())
}

fn end_algebras() -> std::result::Result<(), String> {
    use EndFactor::*;
    let cases: [(u64, u64, GaloisLabel, Vec<EndFactor>); 4] = [
        (3, 5, GaloisLabel::S3, vec![Cyclotomic { modulus: 5 }]),
        (4, 9, GaloisLabel::S4, vec![Cyclotomic { modulus: 3 }, Cyclotomic { modulus: 9 }]),
        (3, 4, GaloisLabel::S3, vec![Rational, Matrix { size: 2, modulus: 4 }]),
        (3, 8, GaloisLabel::S3, vec![Rational, Matrix { size: 2, modulus: 4 }, Cyclotomic { modulus: 8 }]),
    ];
    for (n, q, label, factors) in cases {
        let q = PrimePower::new(q).map_err(err)?;
        let got = predict_end_algebra(n, q, label.into()).map_err(err)?;
        let got_json = serde_json::to_value(&got.factors).map_err(|e| e.to_string())?;
        let want_json = serde_json::to_value(&factors).map_err(|e| e.to_string())?;
        ensure(got_json == want_json, || format!("({n}, {q}, {label}): {got_json}"))?;
    }
    let p5 = predict_end_algebra(3, PrimePower::new(5).map_err(err)?, GaloisLabel::S3.into()).map_err(err)?;
    ensure(p5.annotations.iter().any(|a| a.ring == "Z[zeta_5]"), || "missing Z[zeta_5] annotation".into())
}

fn family(text: &str) -> std::result::Result<JInvariant, String> {
    let f = parse_poly(text).map_err(err)?.into_over_qt();
    j_invariant(&depress_cubic(&f).map_err(err)?).map_err(err)
}

fn j_fixtures() -> std::result::Result<(), String> {
    let j1 = family("x^3 - x - 1")?;
    ensure(j1.as_rational() == Some(rat(1728, 1) * rat(-4, 23)), || format!("j(x^3 - x - 1) = {}", j1.value))?;
    let j2 = family("x^3 - x - t")?;
    let want = RatFunc::from_rational(rat(-4 * 1728, 1)) / RatFunc::from_poly(PolyQ::from_ints(&[-4, 0, 27]));
    ensure(j2.value == want, || format!("j(x^3 - x - t) = {}", j2.value))?;
    ensure(!is_isotrivial(&j2), || "x^3 - x - t reported isotrivial".into())?;
    ensure(is_isotrivial(&j1), || "constant j reported non-isotrivial".into())
}

fn hp_identity() -> std::result::Result<(), String> {
    ensure(verify_hp_identity(), || "j differs from alpha".into())
}

fn galois_fixtures() -> std::result::Result<(), String> {
    let cases = [("x^3 - x - 1", GaloisLabel::S3), ("x^3 - 2", GaloisLabel::S3), ("x^3 - 3x - 1", GaloisLabel::C3)];
    for (text, want) in cases {
        let ParsedPoly::Rational(f) = parse_poly(text).map_err(err)? else {
            return Err(format!("{text} parsed over Q(t)"));
        };
        let got = classify_cubic_rational(&f).map_err(err)?;
        ensure(got == want, || format!("{text}: {got}"))?;
    }
    let g = classify_cubic_geometric(&PolyQ::from_ints(&[0, -1, 0, 1])).map_err(err)?;
    ensure(g == GaloisLabel::S3, || format!("x^3 - x - t: {g}"))
}

fn heart_fixtures() -> std::result::Result<(), String> {
    let cases = [(PermGroup::symmetric(3), 2, 1), (PermGroup::alternating(4), 3, 1), (PermGroup::symmetric(4), 3, 1)];
    for (g, p, want) in cases {
        let got = heart_centralizer_dim(&g, p).map_err(err)?;
        ensure(got == want, || format!("degree {} group over F_{p}: {got}", g.degree()))?;
    }
    for n in 3..=5usize {
        let p = [2u64, 3, 5, 7].into_iter().find(|&p| !(n as u64).is_multiple_of(p)).expect("some prime misses n");
        let got = heart_centralizer_dim(&PermGroup::trivial(n), p).map_err(err)?;
        ensure(got == (n - 1) * (n - 1), || format!("trivial group on {n} points: {got}"))?;
    }
    Ok(())
}

/// A random polynomial of degree exactly `n` with coefficients in `[-5, 5]`.
pub fn random_poly(rng: &mut impl Rng, n: usize) -> PolyQ {
    let mut c: Vec<i64> = (0..=n).map(|_| rng.gen_range(-5..=5)).collect();
    while c[n] == 0 {
        c[n] = rng.gen_range(-5..=5);
    }
    PolyQ::from_ints(&c)
}

fn chart_identity() -> std::result::Result<(), String> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let qs = prime_powers_up_to(9);
    let mut trials = 0;
    let mut with_zero_root = false;
    while trials < 200 {
        let q = qs[rng.gen_range(0..qs.len())];
        let n = rng.gen_range(3..=6usize);
        if !q.is_coprime_to(n as u64) {
            continue;
        }
        let mut f = random_poly(&mut rng, n);
        if trials == 0 {
            let mut c = f.coeffs().to_vec();
            c[0] = Field::zero();
            f = PolyQ::new(c);
        }
        if !f.is_squarefree() {
            continue;
        }
        with_zero_root |= Field::is_zero(&f.coeff(0));
        ensure(chart_identity_check(&f, q).map_err(err)?, || format!("identity fails for f = {f}, q = {q}"))?;
        trials += 1;
    }
    ensure(with_zero_root, || "no trial had f(0) = 0".into())?;
    for (n, q) in genus_sweep() {
        let order = delta_chart_order(n, q).map_err(err)?;
        ensure(order == q.q(), || format!("({n}, {q}): delta order {order}"))?;
    }
    Ok(())
}

fn cyclotomic_bookkeeping() -> std::result::Result<(), String> {
    for q in prime_powers_up_to(4096) {
        let product = factor_geometric_poly(q).iter().fold(PolyQ::one(), |acc, f| &acc * f);
        ensure(product == geometric_poly(q.q()).map_err(err)?, || format!("q = {q}: product differs"))?;
    }
    for (n, q) in genus_sweep() {
        let sum: u64 = decomposition_ledger(n, q).map_err(err)?.iter().map(|l| l.new_part_dim).sum();
        let genus = genus_formula(n, q).map_err(err)?;
        ensure(sum == genus, || format!("({n}, {q}): ledger sum {sum}, genus {genus}"))?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fast_criteria_pass() {
        for id in [1, 2, 5, 6, 7, 8, 9, 10] {
            let o = run_criterion(id).unwrap();
            assert!(o.passed, "criterion {id}: {}", o.detail);
        }
        assert!(run_criterion(12).is_none());
    }
}
