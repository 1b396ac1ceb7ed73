//! Exhaustive searches behind the CM obstruction for `Q(zeta_q)`-actions:
//! automorphisms `zeta -> zeta^m` preserving the multiplicities
//! `n_i = floor(n i / q)`, and the feasibility screen for a centralizer of
//! maximal dimension.

use serde::{Deserialize, Serialize};

use crate::algebra::arith::gcd;
use crate::algebra::repr::rational_string;
use crate::algebra::{prime_powers_up_to, PrimePower, Rational};
use crate::differentials::check_pair;
use crate::error::Result;

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct InvariantAutoReport {
    pub n: u64,
    pub q: u64,
    pub p: u64,
    pub r: u32,
    /// `m` with `1 < m < q`, `p` not dividing `m`, and `n_{i m mod q} = n_i`
    /// for every `i` prime to `p`.
    pub invariant_ms: Vec<u64>,
    /// `m` that merely map the zero set `{i : n_i = 0}` into itself.
    pub zero_set_ms: Vec<u64>,
    /// The two lists differ.
    pub divergent: bool,
}

fn primitive_residues(q: PrimePower) -> impl Iterator<Item = u64> {
    let p = q.p();
    (1..q.q()).filter(move |i| i % p != 0)
}

pub fn invariant_automorphisms(n: u64, q: PrimePower) -> Result<InvariantAutoReport> {
    check_pair(n, q)?;
    let qq = q.q();
    let mult = |i: u64| n * i / qq;
    let zero_set: Vec<u64> = primitive_residues(q).filter(|&i| mult(i) == 0).collect();
    let mut invariant_ms = Vec::new();
    let mut zero_set_ms = Vec::new();
    for m in primitive_residues(q).filter(|&m| m > 1) {
        if primitive_residues(q).all(|i| mult(i) == mult(i * m % qq)) {
            invariant_ms.push(m);
        }
        if zero_set.iter().all(|&i| mult(i * m % qq) == 0) {
            zero_set_ms.push(m);
        }
    }
    let divergent = invariant_ms != zero_set_ms;
    Ok(InvariantAutoReport { n, q: qq, p: q.p(), r: q.r(), invariant_ms, zero_set_ms, divergent })
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct FeasibilityReport {
    pub n: u64,
    pub q: u64,
    pub p: u64,
    pub r: u32,
    /// `#{i : q/n < i < q, p does not divide i}`.
    pub b_count: u64,
    /// `phi(q) / 2`.
    #[serde(with = "rational_string")]
    pub dim_w: Rational,
    /// `n - 1` divides `floor(n i / q)` for every counted `i`.
    pub divisibility_ok: bool,
    pub feasible: bool,
}

/// Necessary conditions for `dim_E End^0 = (2 dim / [E:Q])^2`. This is a
/// screen; passing it does not construct the endomorphisms.
pub fn square_case_feasible(n: u64, q: PrimePower) -> Result<FeasibilityReport> {
    check_pair(n, q)?;
    let qq = q.q();
    let mut b_count = 0;
    let mut divisibility_ok = true;
    for i in primitive_residues(q).filter(|&i| n * i > qq) {
        b_count += 1;
        if !(n * i / qq).is_multiple_of(n - 1) {
            divisibility_ok = false;
        }
    }
    let phi = q.phi();
    let dim_w = Rational::new(phi.into(), 2u64.into());
    let feasible = phi.is_multiple_of(2) && b_count <= phi / 2 && divisibility_ok;
    Ok(FeasibilityReport { n, q: qq, p: q.p(), r: q.r(), b_count, dim_w, divisibility_ok, feasible })
}

/// Coprime pairs `(n, q)` with `n` in `ns` and prime powers `q <= q_max`,
/// ordered by `(n, q)`.
pub fn coprime_pairs(ns: impl IntoIterator<Item = u64>, q_max: u64) -> impl Iterator<Item = (u64, PrimePower)> {
    let qs = prime_powers_up_to(q_max);
    ns.into_iter().flat_map(move |n| {
        qs.clone().into_iter().filter(move |q| gcd(n, q.p()) == 1).map(move |q| (n, q))
    })
}

pub fn cm_scan(ns: impl IntoIterator<Item = u64>, q_max: u64) -> impl Iterator<Item = Result<InvariantAutoReport>> {
    coprime_pairs(ns, q_max).map(|(n, q)| invariant_automorphisms(n, q))
}

pub fn feasible_scan(ns: impl IntoIterator<Item = u64>, q_max: u64) -> impl Iterator<Item = Result<FeasibilityReport>> {
    coprime_pairs(ns, q_max).map(|(n, q)| square_case_feasible(n, q))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;
    use crate::error::Error;

    fn pp(q: u64) -> PrimePower {
        PrimePower::new(q).unwrap()
    }

    #[test]
    fn automorphism_fixtures() {
        for (n, q) in [(3, 7), (3, 4), (4, 3)] {
            assert!(invariant_automorphisms(n, pp(q)).unwrap().invariant_ms.is_empty(), "({n}, {q})");
        }
        assert_eq!(invariant_automorphisms(3, pp(3)), Err(Error::NotCoprime { n: 3, q: 3 }));
    }

    #[test]
    fn zero_set_divergence_is_reported() {
        // n > q leaves the zero set empty, so every m preserves it.
        let r = invariant_automorphisms(4, pp(3)).unwrap();
        assert_eq!(r.zero_set_ms, [2]);
        assert!(r.divergent);
        let r = invariant_automorphisms(3, pp(7)).unwrap();
        assert!(r.zero_set_ms.is_empty() && !r.divergent);
    }

    #[test]
    fn feasibility_fixtures() {
        let a = square_case_feasible(3, pp(4)).unwrap();
        assert_eq!((a.b_count, a.dim_w.clone(), a.divisibility_ok, a.feasible), (1, rat(1, 1), true, true));
        let b = square_case_feasible(3, pp(8)).unwrap();
        assert_eq!((b.b_count, b.feasible), (3, false));
        let c = square_case_feasible(5, pp(4)).unwrap();
        assert_eq!((c.b_count, c.feasible), (2, false));
        let d = square_case_feasible(3, pp(2)).unwrap();
        assert_eq!((d.dim_w.clone(), d.feasible), (rat(1, 2), false));
    }

    #[test]
    fn report_json_round_trip() {
        let f = square_case_feasible(3, pp(2)).unwrap();
        let json = serde_json::to_string(&f).unwrap();
        assert!(json.contains("\"dim_w\":\"1/2\""));
        assert_eq!(serde_json::from_str::<FeasibilityReport>(&json).unwrap(), f);
        let a = invariant_automorphisms(4, pp(3)).unwrap();
        assert_eq!(serde_json::from_str::<InvariantAutoReport>(&serde_json::to_string(&a).unwrap()).unwrap(), a);
    }

    #[test]
    fn pairs_are_ordered() {
        let pairs: Vec<(u64, u64)> = coprime_pairs([3, 4], 9).map(|(n, q)| (n, q.q())).collect();
        assert_eq!(pairs, [(3, 2), (3, 4), (3, 5), (3, 7), (3, 8), (4, 3), (4, 5), (4, 7), (4, 9)]);
    }
}
