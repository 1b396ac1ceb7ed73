use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use serde::{Deserialize, Serialize};

use super::field::{Field, Rational};
use super::parse::parse_poly_in_t;
use super::poly::PolyQ;

/// An element of Q(t): a reduced fraction of polynomials with monic
/// denominator.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RatFunc {
    num: PolyQ,
    den: PolyQ,
}

impl RatFunc {
    /// Builds `num / den` in lowest terms. Panics when `den` is zero.
    pub fn new(num: PolyQ, den: PolyQ) -> Self {
        assert!(!den.is_zero(), "rational function with zero denominator");
        if num.is_zero() {
            return RatFunc { num, den: PolyQ::one() };
        }
        let g = num.gcd(&den);
        let num = num.div_exact(&g).expect("gcd divides numerator");
        let den = den.div_exact(&g).expect("gcd divides denominator");
        let lc = den.lc();
        RatFunc { num: num.scale(&lc.inv()), den: den.monic() }
    }

    pub fn from_poly(p: PolyQ) -> Self {
        RatFunc { num: p, den: PolyQ::one() }
    }

    pub fn from_rational(c: Rational) -> Self {
        Self::from_poly(PolyQ::constant(c))
    }

    /// The indeterminate t.
    pub fn t() -> Self {
        Self::from_poly(PolyQ::x())
    }

    pub fn numer(&self) -> &PolyQ {
        &self.num
    }

    pub fn denom(&self) -> &PolyQ {
        &self.den
    }

    pub fn is_constant(&self) -> bool {
        self.num.is_constant() && self.den.is_constant()
    }

    /// The constant value, when the function is constant.
    pub fn as_constant(&self) -> Option<Rational> {
        self.is_constant().then(|| self.num.coeff(0))
    }

    pub fn as_poly(&self) -> Option<&PolyQ> {
        self.den.is_constant().then_some(&self.num)
    }

    /// Evaluation at a rational point; `None` at a pole.
    pub fn eval(&self, x: &Rational) -> Option<Rational> {
        let d = self.den.eval(x);
        (!Field::is_zero(&d)).then(|| self.num.eval(x) / d)
    }
}

/// `p = c * P` with `P` integral, primitive and positive-leading.
fn integral_part(p: &PolyQ) -> (Rational, PolyQ) {
    let lcm = p.coeffs().iter().fold(BigInt::from(1), |acc, c| acc.lcm(c.denom()));
    let scaled = p.scale(&Rational::from_integer(lcm.clone()));
    let mut content = scaled.coeffs().iter().fold(BigInt::from(0), |acc, c| acc.gcd(c.numer()));
    if scaled.lc() < <Rational as Field>::zero() {
        content = -content;
    }
    let unit = Rational::new(content, lcm);
    (unit.clone(), p.scale(&unit.inv()))
}

impl RatFunc {
    /// Display with integer coefficients, e.g. `-6912/(27*t^2 - 4)`.
    pub fn to_integral_string(&self) -> String {
        if self.num.is_zero() || self.den.is_constant() {
            return self.to_string();
        }
        let (cn, n) = integral_part(&self.num);
        let (cd, d) = integral_part(&self.den);
        let c = cn / cd;
        let num = n.scale(&Rational::from_integer(c.numer().clone()));
        let den = d.scale(&Rational::from_integer(c.denom().clone()));
        let wrap = |p: &PolyQ| {
            let s = p.to_string_in("t");
            if p.coeffs().iter().filter(|c| !Field::is_zero(*c)).count() > 1 {
                format!("({s})")
            } else {
                s
            }
        };
        format!("{}/{}", wrap(&num), wrap(&den))
    }
}

#[derive(Serialize, Deserialize)]
struct RatFuncRepr {
    numerator: String,
    denominator: String,
}

impl Serialize for RatFunc {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        RatFuncRepr { numerator: self.num.to_string_in("t"), denominator: self.den.to_string_in("t") }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for RatFunc {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let repr = RatFuncRepr::deserialize(d)?;
        let num = parse_poly_in_t(&repr.numerator).map_err(serde::de::Error::custom)?;
        let den = parse_poly_in_t(&repr.denominator).map_err(serde::de::Error::custom)?;
        if den.is_zero() {
            return Err(serde::de::Error::custom("zero denominator"));
        }
        Ok(RatFunc::new(num, den))
    }
}

impl Field for RatFunc {
    fn zero() -> Self {
        Self::from_poly(PolyQ::zero())
    }
    fn one() -> Self {
        Self::from_poly(PolyQ::one())
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
    fn from_int(n: i64) -> Self {
        Self::from_rational(<Rational as Field>::from_int(n))
    }
    fn is_compound(&self) -> bool {
        !self.is_constant()
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let num = self.num.to_string_in("t");
        if self.den.is_constant() {
            return f.write_str(&num);
        }
        let den = self.den.to_string_in("t");
        let wrap = |s: String, p: &PolyQ| {
            if p.coeffs().iter().filter(|c| !Field::is_zero(*c)).count() > 1 {
                format!("({s})")
            } else {
                s
            }
        };
        write!(f, "{}/{}", wrap(num, &self.num), wrap(den, &self.den))
    }
}

impl Add for RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: Self) -> RatFunc {
        if self.den == rhs.den {
            return RatFunc::new(&self.num + &rhs.num, self.den);
        }
        RatFunc::new(&(&self.num * &rhs.den) + &(&rhs.num * &self.den), &self.den * &rhs.den)
    }
}

impl Neg for RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc { num: -self.num, den: self.den }
    }
}

impl Sub for RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: Self) -> RatFunc {
        self + (-rhs)
    }
}

impl Mul for RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: Self) -> RatFunc {
        RatFunc::new(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Div for RatFunc {
    type Output = RatFunc;
    fn div(self, rhs: Self) -> RatFunc {
        assert!(!rhs.num.is_zero(), "division by zero rational function");
        RatFunc::new(&self.num * &rhs.den, &self.den * &rhs.num)
    }
}
