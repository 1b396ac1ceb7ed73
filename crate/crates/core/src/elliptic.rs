//! j-invariants of `y^2 = f(x)` for cubic `f` over Q or Q(t).

use serde::{Deserialize, Serialize};

use crate::algebra::{Field, Poly, PolyQ, RatFunc, Rational};
use crate::error::{Error, Result};

/// The curve `y^2 = twist * (x^3 + p x + q)`.
///
/// `twist` is the leading coefficient of the cubic that was depressed. It
/// changes the curve by a quadratic twist only, so `j` ignores it.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct WeierstrassData {
    pub p_coeff: RatFunc,
    pub q_coeff: RatFunc,
    pub twist: RatFunc,
}

impl WeierstrassData {
    /// Checks `4p^3 + 27q^2 != 0`.
    pub fn new(p_coeff: RatFunc, q_coeff: RatFunc) -> Result<Self> {
        let w = WeierstrassData { p_coeff, q_coeff, twist: RatFunc::one() };
        if w.discriminant_core().is_zero() {
            return Err(Error::SingularCurve);
        }
        Ok(w)
    }

    pub fn from_rationals(p: Rational, q: Rational) -> Result<Self> {
        Self::new(RatFunc::from_rational(p), RatFunc::from_rational(q))
    }

    /// `4p^3 + 27q^2`.
    pub fn discriminant_core(&self) -> RatFunc {
        let p = &self.p_coeff;
        let q = &self.q_coeff;
        RatFunc::from_int(4) * p.pow(3) + RatFunc::from_int(27) * q.pow(2)
    }
}

/// Monicizes and removes the quadratic term with `x -> x - a2/3`.
pub fn depress_cubic(f: &Poly<RatFunc>) -> Result<WeierstrassData> {
    if f.degree() != Some(3) {
        return Err(Error::WrongDegree { expected: 3, found: f.degree().unwrap_or(0) });
    }
    let twist = f.lc();
    let monic = f.monic();
    let shift = -(monic.coeff(2) / RatFunc::from_int(3));
    let depressed = monic.shift(&shift);
    let mut w = WeierstrassData::new(depressed.coeff(1), depressed.coeff(0))?;
    w.twist = twist;
    Ok(w)
}

pub fn depress_cubic_rational(f: &PolyQ) -> Result<WeierstrassData> {
    depress_cubic(&f.map(|c| RatFunc::from_rational(c.clone())))
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct JInvariant {
    pub value: RatFunc,
}

impl JInvariant {
    pub fn as_rational(&self) -> Option<Rational> {
        self.value.as_constant()
    }
}

/// `j = 6912 p^3 / (4p^3 + 27q^2)`.
pub fn j_invariant(w: &WeierstrassData) -> Result<JInvariant> {
    let core = w.discriminant_core();
    if core.is_zero() {
        return Err(Error::SingularCurve);
    }
    Ok(JInvariant { value: RatFunc::from_int(6912) * w.p_coeff.pow(3) / core })
}

/// Constant `j` means the family has constant moduli.
pub fn is_isotrivial(j: &JInvariant) -> bool {
    j.value.is_constant()
}

/// `c = 27 alpha / (4 (alpha - pole))`, with `alpha` the indeterminate.
fn hp_parameter(pole: &Rational) -> RatFunc {
    let alpha = RatFunc::t();
    RatFunc::from_int(27) * alpha.clone()
        / (RatFunc::from_int(4) * (alpha - RatFunc::from_rational(pole.clone())))
}

fn hp_cubic(c: &RatFunc) -> Poly<RatFunc> {
    Poly::new(vec![-c.clone(), -c.clone(), RatFunc::zero(), RatFunc::one()])
}

/// Symbolic `j` of `y^2 = x^3 - c x - c` with `c = 27a/(4(a - pole))`.
pub fn hp_j_invariant(pole: &Rational) -> Result<JInvariant> {
    j_invariant(&depress_cubic(&hp_cubic(&hp_parameter(pole)))?)
}

/// Whether `j(x^3 - c x - c) = alpha` identically for `c = 27a/(4(a - 1728))`.
pub fn verify_hp_identity() -> bool {
    verify_hp_identity_with_pole(&Rational::from_integer(1728.into()))
}

pub fn verify_hp_identity_with_pole(pole: &Rational) -> bool {
    hp_j_invariant(pole).is_ok_and(|j| j.value == RatFunc::t())
}

/// Specializes `alpha` before computing `j` and compares with the symbolic
/// answer evaluated at the same point.
pub fn hp_specialization_agrees(pole: &Rational, alpha: &Rational) -> Result<bool> {
    let symbolic = hp_j_invariant(pole)?.value.eval(alpha).ok_or(Error::DivisionByZero)?;
    let c = hp_parameter(pole).eval(alpha).ok_or(Error::DivisionByZero)?;
    let cubic = PolyQ::new(vec![-c.clone(), -c, Rational::zero(), Rational::one()]);
    let numeric = j_invariant(&depress_cubic_rational(&cubic)?)?;
    Ok(numeric.as_rational() == Some(symbolic))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{int, parse_poly, rat};

    fn j_of(text: &str) -> RatFunc {
        j_invariant(&depress_cubic(&parse_poly(text).unwrap().into_over_qt()).unwrap()).unwrap().value
    }

    #[test]
    fn depress_fixtures() {
        let expect = WeierstrassData::from_rationals(int(-1), int(-1)).unwrap();
        assert_eq!(depress_cubic_rational(&PolyQ::from_ints(&[-1, -1, 0, 1])).unwrap(), expect);
        // (x+1)^3 - (x+1) - 1
        assert_eq!(depress_cubic_rational(&PolyQ::from_ints(&[-1, 2, 3, 1])).unwrap(), expect);
        let scaled = depress_cubic_rational(&PolyQ::from_ints(&[-2, -2, 0, 2])).unwrap();
        assert_eq!((&scaled.p_coeff, &scaled.q_coeff), (&expect.p_coeff, &expect.q_coeff));
        assert_eq!(scaled.twist, RatFunc::from_int(2));
        assert_eq!(depress_cubic_rational(&PolyQ::from_ints(&[0, 0, 1, 1])), Err(Error::SingularCurve));
    }

    #[test]
    fn j_fixtures() {
        assert_eq!(j_of("x^3 - x - 1"), RatFunc::from_rational(rat(-6912, 23)));
        assert_eq!(rat(-6912, 23), int(1728) * rat(-4, 23));
        let fam = j_of("x^3 - x - t");
        let expect = RatFunc::new(PolyQ::from_ints(&[-6912]), PolyQ::from_ints(&[-4, 0, 27]));
        assert_eq!(fam, expect);
        assert_eq!(fam.to_integral_string(), "-6912/(27*t^2 - 4)");
        assert_eq!(j_of("x^3 + 5"), RatFunc::zero());
        assert!(!is_isotrivial(&JInvariant { value: fam }));
        assert!(is_isotrivial(&JInvariant { value: RatFunc::from_int(1728) }));
        let p = PolyQ::from_ints(&[1, 0, 1]);
        assert!(is_isotrivial(&JInvariant { value: RatFunc::new(p.clone(), p) }));
        assert_eq!(j_of("x^3 - x"), RatFunc::from_int(1728));
    }

    #[test]
    fn hp_identity() {
        assert!(verify_hp_identity());
        assert!(!verify_hp_identity_with_pole(&int(1000)));
        assert!(hp_specialization_agrees(&int(1728), &int(123)).unwrap());
        assert!(hp_specialization_agrees(&int(1000), &int(123)).unwrap());
    }
}
