use super::arith::{is_prime, PrimePower};
use super::field::{Field, Rational};
use super::laurent::LaurentBivariate;
use super::poly::PolyQ;
use crate::error::{Error, Result};

/// `Phi_{p^i}(t) = sum_{j=0}^{p-1} t^{j p^{i-1}}`.
pub fn cyclotomic_poly(p: u64, i: u32) -> Result<PolyQ> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if i == 0 {
        return Err(Error::IndexOutOfRange { i: 0, max: u32::MAX as u64 });
    }
    Ok(cyclotomic_of(PrimePower::from_parts(p, i)?))
}

pub fn cyclotomic_of(q: PrimePower) -> PolyQ {
    let step = (q.q() / q.p()) as usize;
    let mut coeffs = vec![Rational::zero(); step * (q.p() as usize - 1) + 1];
    for j in 0..q.p() as usize {
        coeffs[j * step] = Rational::one();
    }
    PolyQ::new(coeffs)
}

/// `P_q(t) = 1 + t + ... + t^{q-1}`.
pub fn geometric_poly(q: u64) -> Result<PolyQ> {
    let q = PrimePower::new(q)?;
    Ok(geometric_of(q.q()))
}

pub(crate) fn geometric_of(q: u64) -> PolyQ {
    PolyQ::new(vec![Rational::one(); q as usize])
}

/// Evaluates `t^q Phi_q(1/t) - Phi_q(t) = t^q - 1` as an exact Laurent
/// identity in `t`.
pub fn reflection_identity_check(q: u64) -> Result<bool> {
    let q = PrimePower::new(q)?;
    let phi = cyclotomic_of(q);
    let t = |c: Rational, k: i64| LaurentBivariate::monomial(c, 0, k);
    let phi_at = |sign: i64| {
        phi.coeffs()
            .iter()
            .enumerate()
            .fold(LaurentBivariate::zero(), |acc, (k, c)| &acc + &t(c.clone(), sign * k as i64))
    };
    let tq = t(Rational::one(), q.q() as i64);
    let lhs = &(&tq * &phi_at(-1)) - &phi_at(1);
    let rhs = &tq - &LaurentBivariate::one();
    Ok(lhs == rhs)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> PolyQ {
        PolyQ::from_ints(c)
    }

    #[test]
    fn cyclotomic_fixtures() {
        assert_eq!(cyclotomic_poly(2, 2).unwrap(), p(&[1, 0, 1]));
        assert_eq!(cyclotomic_poly(3, 1).unwrap(), p(&[1, 1, 1]));
        assert_eq!(cyclotomic_poly(2, 3).unwrap(), p(&[1, 0, 0, 0, 1]));
        assert_eq!(cyclotomic_poly(4, 1), Err(Error::NotPrime(4)));
        let deg = cyclotomic_poly(3, 3).unwrap().degree().unwrap();
        assert_eq!(deg, 27 - 9);
    }

    #[test]
    fn geometric_fixtures() {
        assert_eq!(geometric_poly(2).unwrap(), p(&[1, 1]));
        assert_eq!(geometric_poly(4).unwrap(), p(&[1, 1, 1, 1]));
        let g9 = geometric_poly(9).unwrap();
        assert_eq!(g9.degree(), Some(8));
        assert!(g9.coeffs().iter().all(|c| c.is_one()));
        assert_eq!(geometric_poly(6), Err(Error::NotPrimePower(6)));
        assert_eq!(geometric_poly(1), Err(Error::NotPrimePower(1)));
    }

    #[test]
    fn reflection_truth_table() {
        // Hand expansion: q=2 gives t^2(1 + 1/t) - (1 + t) = t^2 - 1, so the
        // identity holds there as well.
        for q in [2, 3, 4, 8, 9, 27] {
            assert!(reflection_identity_check(q).unwrap(), "q = {q}");
        }
    }
}
