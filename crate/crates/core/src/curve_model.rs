//! The two-chart projective model of `y^q = f(x)`.
//!
//! With `b n - a q = 1`, the second chart has coordinates
//! `s = x^{-n} y^q`, `t = x^a y^{-b}`, so that `x = s^{-b} t^{-q}`,
//! `y = s^{-a} t^{-n}`, and the curve becomes `s = f~(s^b t^q)` with
//! `f~(x) = x^n f(1/x)`.

use serde::{Deserialize, Serialize};

use crate::algebra::arith::gcd;
use crate::algebra::repr::option_poly_string;
use crate::algebra::{Field, PolyQ, PrimePower, Rational};
use crate::differentials::check_pair;
use crate::error::{Error, Result};

pub use crate::algebra::LaurentBivariate;

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct GluingData {
    pub n: u64,
    pub q: PrimePower,
    pub a: u64,
    pub b: u64,
    #[serde(with = "option_poly_string", skip_serializing_if = "Option::is_none", default)]
    pub tilde_f: Option<PolyQ>,
}

/// Smallest positive `(a, b)` with `b n - a q = 1`.
pub fn gluing_exponents(n: u64, q: PrimePower) -> Result<GluingData> {
    if n == 0 {
        return Err(Error::DegreeTooSmall { found: 0, min: 1 });
    }
    q.require_coprime(n)?;
    let qq = q.q();
    let mut b = (1..qq).find(|b| (b * n) % qq == 1).expect("n is invertible mod q");
    if b * n == 1 {
        // n = 1 would force a = 0.
        b += qq;
    }
    Ok(GluingData { n, q, a: (b * n - 1) / qq, b, tilde_f: None })
}

pub fn gluing_for(f: &PolyQ, q: PrimePower) -> Result<GluingData> {
    let n = f.degree().filter(|&d| d >= 1).ok_or(Error::DegreeTooSmall { found: 0, min: 1 })?;
    let mut data = gluing_exponents(n as u64, q)?;
    data.tilde_f = Some(f.reversed(n));
    Ok(data)
}

/// `sum c_k m^k` for a monomial-valued argument, as a Laurent polynomial.
fn substitute(f: &PolyQ, arg: &LaurentBivariate) -> LaurentBivariate {
    f.coeffs()
        .iter()
        .rev()
        .fold(LaurentBivariate::zero(), |acc, c| &(&acc * arg) + &LaurentBivariate::constant(c.clone()))
}

/// Checks `s^{bn} t^{nq} (Y^q - f(X)) = s - f~(s^b t^q)` exactly, with
/// `X = s^{-b} t^{-q}` and `Y = s^{-a} t^{-n}`.
pub fn chart_identity_check(f: &PolyQ, q: PrimePower) -> Result<bool> {
    let data = gluing_for(f, q)?;
    let (n, qq, a, b) = (data.n as i64, q.q() as i64, data.a as i64, data.b as i64);
    let one = <Rational as Field>::one();
    let x = LaurentBivariate::monomial(one.clone(), -b, -qq);
    let y = LaurentBivariate::monomial(one.clone(), -a, -n);
    let clear = LaurentBivariate::monomial(one.clone(), b * n, n * qq);
    let lhs = &clear * &(&y.pow(qq as u64) - &substitute(f, &x));
    let s = LaurentBivariate::monomial(one.clone(), 1, 0);
    let tilde = data.tilde_f.as_ref().expect("set by gluing_for");
    let rhs = &s - &substitute(tilde, &LaurentBivariate::monomial(one, b, qq));
    Ok(lhs == rhs)
}

/// Order of `zeta_q^{-b}`, the action of `delta_q` on the second chart.
pub fn delta_chart_order(n: u64, q: PrimePower) -> Result<u64> {
    let data = gluing_exponents(n, q)?;
    let qq = q.q();
    let g = gcd(data.b % qq, qq);
    Ok(qq / g)
}

/// Genus from `2g - 2 = -2q + (n + 1)(q - 1)`: the cover `x` has degree
/// `q` and is totally ramified over the `n` roots and infinity.
pub fn hurwitz_genus(n: u64, q: PrimePower) -> Result<u64> {
    check_pair(n, q)?;
    let qq = q.q() as i64;
    let two_g_minus_two = -2 * qq + (n as i64 + 1) * (qq - 1);
    Ok(((two_g_minus_two + 2) / 2) as u64)
}
