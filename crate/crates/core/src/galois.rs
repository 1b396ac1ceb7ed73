//! Galois groups of cubics and quartics over Q, and geometric Galois groups
//! of the families `g(x) - t` over the rational function field with
//! algebraically closed constants.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::algebra::field::is_rational_square;
use crate::algebra::{discriminant, is_prime, parse_poly_in_t, Field, Poly, PolyQ, RatFunc, Rational};
use crate::error::{Error, Result};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub enum GaloisLabel {
    S3,
    C3,
    S4,
    A4,
    D4,
    C4,
    V4,
    Reducible,
}

impl GaloisLabel {
    /// Whether the labelled group acts doubly transitively on `n` roots.
    pub fn is_doubly_transitive(&self, n: u64) -> bool {
        matches!((self, n), (GaloisLabel::S3, 3) | (GaloisLabel::S4, 4) | (GaloisLabel::A4, 4))
    }

    /// The polynomial degree the label belongs to; `None` for `Reducible`.
    pub fn degree(&self) -> Option<u64> {
        match self {
            GaloisLabel::S3 | GaloisLabel::C3 => Some(3),
            GaloisLabel::Reducible => None,
            _ => Some(4),
        }
    }

    /// Order of the group; `None` for `Reducible`.
    pub fn order(&self) -> Option<u64> {
        Some(match self {
            GaloisLabel::S3 => 6,
            GaloisLabel::C3 => 3,
            GaloisLabel::S4 => 24,
            GaloisLabel::A4 => 12,
            GaloisLabel::D4 => 8,
            GaloisLabel::C4 | GaloisLabel::V4 => 4,
            GaloisLabel::Reducible => return None,
        })
    }
}

impl fmt::Display for GaloisLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl FromStr for GaloisLabel {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s.trim().to_ascii_uppercase().as_str() {
            "S3" => GaloisLabel::S3,
            "C3" | "A3" => GaloisLabel::C3,
            "S4" => GaloisLabel::S4,
            "A4" => GaloisLabel::A4,
            "D4" => GaloisLabel::D4,
            "C4" => GaloisLabel::C4,
            "V4" => GaloisLabel::V4,
            "REDUCIBLE" => GaloisLabel::Reducible,
            _ => return Err(Error::OutsideHypotheses(format!("unknown Galois label {s:?}"))),
        })
    }
}

/// Integer polynomial proportional to `f`, with content removed.
fn primitive_integer_coeffs(f: &PolyQ) -> Vec<BigInt> {
    let lcm = f.coeffs().iter().fold(BigInt::from(1), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = f.coeffs().iter().map(|c| (c * Rational::from_integer(lcm.clone())).to_integer()).collect();
    let content = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    ints.into_iter().map(|c| c / &content).collect()
}

fn eval_mod(g: &[BigInt], y: &BigInt, m: &BigInt) -> BigInt {
    g.iter().rev().fold(BigInt::zero(), |acc, c| (acc * y + c).mod_floor(m))
}

fn inverse_mod(a: &BigInt, m: &BigInt) -> Option<BigInt> {
    let e = a.mod_floor(m).extended_gcd(m);
    (e.gcd == BigInt::from(1)).then(|| e.x.mod_floor(m))
}

/// Integer roots of a monic squarefree integer polynomial with `g(0) != 0`.
///
/// Every root reduces to a simple root modulo a prime `p` not dividing the
/// discriminant, and Newton iteration lifts it uniquely past the Cauchy bound.
fn integer_roots_monic(g: &[BigInt]) -> Vec<BigInt> {
    let n = g.len() - 1;
    let bound = g[..n].iter().map(|c| c.abs()).max().unwrap_or_default() + 1u32;
    let dg: Vec<BigInt> = g.iter().enumerate().skip(1).map(|(k, c)| c * k).collect();
    for p in (3u64..).filter(|&p| is_prime(p)) {
        let pb = BigInt::from(p);
        let residues: Vec<BigInt> =
            (0..p).map(BigInt::from).filter(|r| eval_mod(g, r, &pb).is_zero()).collect();
        if residues.iter().any(|r| eval_mod(&dg, r, &pb).is_zero()) {
            continue;
        }
        let mut roots = Vec::new();
        for mut r in residues {
            let mut m = pb.clone();
            while m <= &bound * 2u32 {
                m = &m * &m;
                let inv = inverse_mod(&eval_mod(&dg, &r, &m), &m).expect("simple root lifts");
                r = (&r - eval_mod(g, &r, &m) * inv).mod_floor(&m);
            }
            let y = if &r * 2u32 > m { r - m } else { r };
            let exact = g.iter().rev().fold(BigInt::zero(), |acc, c| acc * &y + c);
            if exact.is_zero() {
                roots.push(y);
            }
        }
        return roots;
    }
    unreachable!("only finitely many primes divide the discriminant")
}

/// Distinct rational roots, ascending.
pub fn rational_roots(f: &PolyQ) -> Vec<Rational> {
    if f.is_constant() {
        return Vec::new();
    }
    let h = f.div_exact(&f.gcd(&f.derivative())).expect("gcd divides f");
    let mut ints = primitive_integer_coeffs(&h);
    let mut roots = Vec::new();
    if ints[0].is_zero() {
        roots.push(<Rational as Field>::zero());
        ints.remove(0);
    }
    if ints.len() > 1 {
        // g(y) = a^(n-1) h(y / a) is monic with integer coefficients.
        let a = ints.last().expect("nonconstant").clone();
        let n = ints.len() - 1;
        let g: Vec<BigInt> = ints.iter().enumerate().map(|(i, c)| c * num_traits::pow(a.clone(), n - i) / &a).collect();
        roots.extend(integer_roots_monic(&g).into_iter().map(|y| Rational::new(y, a.clone())));
    }
    roots.sort();
    roots
}

fn require_separable(f: &PolyQ, degree: usize) -> Result<()> {
    match f.degree() {
        Some(d) if d == degree => {}
        found => return Err(Error::WrongDegree { expected: degree, found: found.unwrap_or(0) }),
    }
    if !f.is_squarefree() {
        return Err(Error::MultipleRoots);
    }
    Ok(())
}

pub fn classify_cubic_rational(f: &PolyQ) -> Result<GaloisLabel> {
    require_separable(f, 3)?;
    if !rational_roots(f).is_empty() {
        return Ok(GaloisLabel::Reducible);
    }
    let disc = discriminant(f)?;
    Ok(if is_rational_square(&disc) { GaloisLabel::C3 } else { GaloisLabel::S3 })
}

/// Coefficients `(p, q, r)` of the depressed monic form `x^4 + p x^2 + q x + r`.
fn depressed_quartic<F: Field>(f: &Poly<F>) -> (F, F, F) {
    let m = f.monic();
    let shift = -(m.coeff(3) / F::from_int(4));
    let d = m.shift(&shift);
    (d.coeff(2), d.coeff(1), d.coeff(0))
}

/// Resolvent `z^3 - p z^2 - 4 r z + (4 p r - q^2)` of the depressed form.
pub fn resolvent_cubic(f: &PolyQ) -> Result<PolyQ> {
    resolvent_cubic_over(f)
}

pub(crate) fn resolvent_cubic_over<F: Field>(f: &Poly<F>) -> Result<Poly<F>> {
    if f.degree() != Some(4) {
        return Err(Error::WrongDegree { expected: 4, found: f.degree().unwrap_or(0) });
    }
    let (p, q, r) = depressed_quartic(f);
    let four = F::from_int(4);
    Ok(Poly::new(vec![
        four.clone() * p.clone() * r.clone() - q.clone() * q,
        -(four * r),
        -p,
        F::one(),
    ]))
}

/// Whether the depressed quartic (with no rational root) splits into two
/// rational quadratics.
fn has_quadratic_factor(p: &Rational, q: &Rational, r: &Rational) -> bool {
    let four = Rational::from_int(4);
    if Field::is_zero(q) && is_rational_square(&(p.clone() * p.clone() - four.clone() * r.clone())) {
        return true;
    }
    // (x^2 + a x + b)(x^2 - a x + c) with A = a^2 a nonzero root of
    // A^3 + 2p A^2 + (p^2 - 4r) A - q^2.
    let cubic = PolyQ::new(vec![
        -(q.clone() * q.clone()),
        p.clone() * p.clone() - four * r.clone(),
        Rational::from_int(2) * p.clone(),
        <Rational as Field>::one(),
    ]);
    rational_roots(&cubic).iter().any(|a| a.is_positive() && is_rational_square(a))
}

fn splits_over_quadratic(disc_quad: &Rational, delta: &Rational) -> bool {
    Field::is_zero(disc_quad) || is_rational_square(disc_quad) || is_rational_square(&(disc_quad.clone() * delta.clone()))
}

pub fn classify_quartic_rational(f: &PolyQ) -> Result<GaloisLabel> {
    require_separable(f, 4)?;
    if !rational_roots(f).is_empty() {
        return Ok(GaloisLabel::Reducible);
    }
    let (p, q, r) = depressed_quartic(f);
    if has_quadratic_factor(&p, &q, &r) {
        return Ok(GaloisLabel::Reducible);
    }
    let resolvent = resolvent_cubic(f)?;
    let roots = rational_roots(&resolvent);
    let delta = discriminant(f)?;
    Ok(match roots.len() {
        0 if is_rational_square(&delta) => GaloisLabel::A4,
        0 => GaloisLabel::S4,
        1 => {
            // C4 iff (X^2 + (p - r')) and (X^2 - r' X + r) both split over Q(sqrt(delta)).
            let root = &roots[0];
            let four = Rational::from_int(4);
            let d1 = four.clone() * (root.clone() - p.clone());
            let d2 = root.clone() * root.clone() - four * r;
            if splits_over_quadratic(&d1, &delta) && splits_over_quadratic(&d2, &delta) {
                GaloisLabel::C4
            } else {
                GaloisLabel::D4
            }
        }
        _ => GaloisLabel::V4,
    })
}

/// A place of Q̄(t) grouped by squarefree factor: every root of `Finite(g)`
/// shares the same valuation.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Place {
    Finite(PolyQ),
    Infinity,
}

impl fmt::Display for Place {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Place::Finite(g) => f.write_str(&g.to_string_in("t")),
            Place::Infinity => f.write_str("infinity"),
        }
    }
}

impl Serialize for Place {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Place {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let text = String::deserialize(d)?;
        if text == "infinity" {
            return Ok(Place::Infinity);
        }
        parse_poly_in_t(&text).map(Place::Finite).map_err(serde::de::Error::custom)
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    fn of(v: i64) -> Parity {
        if v % 2 == 0 {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct PlaceParity {
    pub place: Place,
    pub valuation: i64,
    pub parity: Parity,
}

/// Squareness in Q̄(t): every place must carry even valuation.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct GeometricSquareVerdict {
    pub is_square: bool,
    /// Every place with nonzero valuation, infinity last.
    pub places: Vec<PlaceParity>,
}

impl GeometricSquareVerdict {
    pub fn odd_places(&self) -> impl Iterator<Item = &PlaceParity> {
        self.places.iter().filter(|p| p.parity == Parity::Odd)
    }
}

pub fn geometric_square_test(u: &RatFunc) -> Result<GeometricSquareVerdict> {
    if u.is_zero() {
        return Err(Error::ZeroInput);
    }
    let mut places = Vec::new();
    for (poly, sign) in [(u.numer(), 1i64), (u.denom(), -1)] {
        for (g, m) in poly.squarefree_factor()? {
            let valuation = sign * m as i64;
            places.push(PlaceParity { place: Place::Finite(g), valuation, parity: Parity::of(valuation) });
        }
    }
    let deg = |p: &PolyQ| p.degree().unwrap_or(0) as i64;
    let at_infinity = deg(u.denom()) - deg(u.numer());
    if at_infinity != 0 {
        places.push(PlaceParity { place: Place::Infinity, valuation: at_infinity, parity: Parity::of(at_infinity) });
    }
    let is_square = places.iter().all(|p| p.parity == Parity::Even);
    Ok(GeometricSquareVerdict { is_square, places })
}

/// `g(x) - t` as a polynomial over Q(t).
pub fn linear_family(g: &PolyQ) -> Poly<RatFunc> {
    let mut coeffs: Vec<RatFunc> = g.coeffs().iter().map(|c| RatFunc::from_rational(c.clone())).collect();
    if coeffs.is_empty() {
        coeffs.push(RatFunc::zero());
    }
    coeffs[0] = coeffs[0].clone() - RatFunc::t();
    Poly::new(coeffs)
}

/// Recognizes `f = g(x) + c t` with `c` a nonzero rational and returns the
/// monic `g0` with `f ~ g0(x) - t'` after rescaling `t' = -c t / lc(g)`.
pub fn linear_t_family(f: &Poly<RatFunc>) -> Result<PolyQ> {
    let outside = |why: &str| Error::OutsideSupportedFamily(why.to_string());
    let mut g = Vec::with_capacity(f.coeffs().len());
    let mut t_coeff = <Rational as Field>::zero();
    for (k, c) in f.coeffs().iter().enumerate() {
        let poly = c.as_poly().ok_or_else(|| outside("coefficients must be polynomial in t"))?;
        match poly.degree() {
            None | Some(0) => g.push(poly.coeff(0)),
            Some(1) if k == 0 => {
                g.push(poly.coeff(0));
                t_coeff = poly.coeff(1);
            }
            _ => return Err(outside("t may only appear linearly in the constant term")),
        }
    }
    if Field::is_zero(&t_coeff) {
        return Err(outside("t does not occur"));
    }
    let g = PolyQ::new(g);
    if g.is_constant() {
        return Err(outside("no x-dependence"));
    }
    Ok(g.monic())
}

/// `disc_x(g(x) - t)`, a polynomial in `t`.
pub fn family_discriminant(g: &PolyQ) -> Result<RatFunc> {
    discriminant(&linear_family(g))
}

fn require_monic_degree(g: &PolyQ, degree: usize) -> Result<()> {
    if g.degree() != Some(degree) {
        return Err(Error::WrongDegree { expected: degree, found: g.degree().unwrap_or(0) });
    }
    if !g.lc().is_one() {
        return Err(Error::OutsideSupportedFamily("g must be monic".into()));
    }
    Ok(())
}

/// Geometric group of `g(x) - t`; always irreducible, so S3 or C3.
pub fn classify_cubic_geometric(g: &PolyQ) -> Result<GaloisLabel> {
    require_monic_degree(g, 3)?;
    let disc = family_discriminant(g)?;
    if disc.is_zero() {
        return Err(Error::MultipleRoots);
    }
    Ok(if geometric_square_test(&disc)?.is_square { GaloisLabel::C3 } else { GaloisLabel::S3 })
}

/// Geometric group of `g(x) - t` for a monic quartic `g`, supported when
/// the resolvent of `g(x) - t` is certified irreducible: writing it as
/// `A(z) t + B(z)`, the certificate is `gcd(A, B) = 1`, which holds exactly
/// when the depressed `g` has nonzero linear coefficient.
pub fn classify_quartic_geometric(g: &PolyQ) -> Result<GaloisLabel> {
    require_monic_degree(g, 4)?;
    let (p, q, r) = depressed_quartic(g);
    let four = Rational::from_int(4);
    let a = PolyQ::new(vec![-(four.clone() * p.clone()), four.clone()]);
    let b = PolyQ::new(vec![
        four.clone() * p.clone() * r.clone() - q.clone() * q.clone(),
        -(four * r),
        -p,
        <Rational as Field>::one(),
    ]);
    if !a.gcd(&b).is_constant() {
        return Err(Error::OutsideSupportedFamily(
            "depressed g has zero linear coefficient; resolvent not certified irreducible".into(),
        ));
    }
    let disc = family_discriminant(g)?;
    if disc.is_zero() {
        return Err(Error::MultipleRoots);
    }
    Ok(if geometric_square_test(&disc)?.is_square { GaloisLabel::A4 } else { GaloisLabel::S4 })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{int, parse_poly, rat, ParsedPoly};

    fn p(c: &[i64]) -> PolyQ {
        PolyQ::from_ints(c)
    }

    #[test]
    fn cubic_rational_fixtures() {
        assert_eq!(classify_cubic_rational(&p(&[-1, -1, 0, 1])).unwrap(), GaloisLabel::S3);
        assert_eq!(classify_cubic_rational(&p(&[-2, 0, 0, 1])).unwrap(), GaloisLabel::S3);
        assert_eq!(classify_cubic_rational(&p(&[-1, -3, 0, 1])).unwrap(), GaloisLabel::C3);
        assert_eq!(classify_cubic_rational(&p(&[0, -1, 0, 1])).unwrap(), GaloisLabel::Reducible);
        assert_eq!(classify_cubic_rational(&p(&[1, 2, 1, 0])), Err(Error::WrongDegree { expected: 3, found: 2 }));
        assert_eq!(classify_cubic_rational(&p(&[0, 0, 1, 1])), Err(Error::MultipleRoots));
    }

    #[test]
    fn rational_root_search() {
        // 6x^3 - 5x^2 - 2x + 1 = (x - 1)(2x + 1)(3x - 1)
        let f = p(&[1, -2, -5, 6]);
        assert_eq!(rational_roots(&f), vec![rat(-1, 2), rat(1, 3), int(1)]);
        let g = PolyQ::new(vec![rat(1, 4), int(0), int(-1)]);
        assert_eq!(rational_roots(&g), vec![rat(-1, 2), rat(1, 2)]);
        assert!(rational_roots(&p(&[-2, 0, 1])).is_empty());
    }

    #[test]
    fn rational_roots_with_large_coefficients() {
        let big = rat(999_999_999_989, 1_000_003);
        let roots = [big.clone(), rat(-3, 1), rat(1, 12_345_678_901)];
        let f = roots.iter().fold(PolyQ::one(), |acc, r| &acc * &PolyQ::new(vec![-r.clone(), int(1)]));
        let sq = &(&f * &f) * &PolyQ::x();
        let mut want = roots.to_vec();
        want.push(int(0));
        want.sort();
        assert_eq!(rational_roots(&sq), want);
        assert!(rational_roots(&p(&[-(1 << 61) + 1, 0, 0, 1])).is_empty());
    }

    #[test]
    fn resolvent_fixtures() {
        assert_eq!(resolvent_cubic(&p(&[1, 0, 0, 0, 1])).unwrap(), p(&[0, -4, 0, 1]));
        assert_eq!(resolvent_cubic(&p(&[1, 1, 0, 0, 1])).unwrap(), p(&[-1, -4, 0, 1]));
        assert_eq!(resolvent_cubic(&p(&[0, 0, 0, 0, 1])).unwrap(), p(&[0, 0, 0, 1]));
        assert!(resolvent_cubic(&p(&[1, 1, 1])).is_err());
    }

    #[test]
    fn quartic_rational_fixtures() {
        let c = |f: &[i64]| classify_quartic_rational(&p(f)).unwrap();
        assert_eq!(c(&[-1, -1, 0, 0, 1]), GaloisLabel::S4);
        assert_eq!(c(&[1, 0, 0, 0, 1]), GaloisLabel::V4);
        assert_eq!(c(&[1, 1, 1, 1, 1]), GaloisLabel::C4);
        assert_eq!(c(&[-2, 0, 0, 0, 1]), GaloisLabel::D4);
        assert_eq!(c(&[12, 8, 0, 0, 1]), GaloisLabel::A4);
        assert_eq!(c(&[5, 0, 5, 0, 1]), GaloisLabel::C4);
        assert_eq!(c(&[1, 0, -10, 0, 1]), GaloisLabel::V4);
        // (x^2 + 1)(x^2 - 2) and (x^2 + x + 1)(x^2 + 2x + 3)
        assert_eq!(c(&[-2, 0, -1, 0, 1]), GaloisLabel::Reducible);
        assert_eq!(c(&[3, 5, 6, 3, 1]), GaloisLabel::Reducible);
        assert_eq!(c(&[0, 1, 0, 0, 1]), GaloisLabel::Reducible);
    }

    #[test]
    fn square_test_fixtures() {
        let v = geometric_square_test(&RatFunc::from_poly(p(&[-4, 0, 27]))).unwrap();
        assert!(!v.is_square);
        assert_eq!(v.odd_places().count(), 1);
        let sq = RatFunc::new(p(&[-1, 1]).pow(2), p(&[2, 1]).pow(4));
        assert!(geometric_square_test(&sq).unwrap().is_square);
        let t = geometric_square_test(&RatFunc::t()).unwrap();
        assert!(!t.is_square);
        assert_eq!(t.places.len(), 2);
        assert!(t.places.iter().any(|pl| pl.place == Place::Infinity && pl.valuation == -1));
        assert!(geometric_square_test(&RatFunc::from_int(-5)).unwrap().is_square);
        assert_eq!(geometric_square_test(&RatFunc::zero()), Err(Error::ZeroInput));
    }

    #[test]
    fn cubic_geometric_fixtures() {
        let disc = family_discriminant(&p(&[0, -1, 0, 1])).unwrap();
        assert_eq!(disc, RatFunc::from_poly(p(&[4, 0, -27])));
        assert_eq!(classify_cubic_geometric(&p(&[0, -1, 0, 1])).unwrap(), GaloisLabel::S3);
        // disc_x(x^3 - t) = -27 t^2: even at 0 and at infinity.
        assert_eq!(family_discriminant(&p(&[0, 0, 0, 1])).unwrap(), RatFunc::from_poly(p(&[0, 0, -27])));
        assert_eq!(classify_cubic_geometric(&p(&[0, 0, 0, 1])).unwrap(), GaloisLabel::C3);
        // disc_x(x^3 + 1 - t) = -27 (1 - t)^2
        assert_eq!(family_discriminant(&p(&[1, 0, 0, 1])).unwrap(), RatFunc::from_poly(p(&[-27, 54, -27])));
        assert_eq!(classify_cubic_geometric(&p(&[1, 0, 0, 1])).unwrap(), GaloisLabel::C3);
    }

    #[test]
    fn quartic_geometric_fixtures() {
        // disc_x(x^4 + q x + r) = -27 q^4 + 256 r^3 with r = -t
        assert_eq!(family_discriminant(&p(&[0, 1, 0, 0, 1])).unwrap(), RatFunc::from_poly(p(&[-27, 0, 0, -256])));
        assert_eq!(classify_quartic_geometric(&p(&[0, 1, 0, 0, 1])).unwrap(), GaloisLabel::S4);
        assert_eq!(classify_quartic_geometric(&p(&[0, -1, 0, 0, 1])).unwrap(), GaloisLabel::S4);
        assert!(matches!(
            classify_quartic_geometric(&p(&[0, 0, 0, 0, 1])),
            Err(Error::OutsideSupportedFamily(_))
        ));
    }

    #[test]
    fn family_recognition() {
        let ParsedPoly::OverQt(f) = parse_poly("x^3 - x - t").unwrap() else { panic!() };
        assert_eq!(linear_t_family(&f).unwrap(), p(&[0, -1, 0, 1]));
        let ParsedPoly::OverQt(f) = parse_poly("2x^3 - 2x + 3t").unwrap() else { panic!() };
        assert_eq!(linear_t_family(&f).unwrap(), p(&[0, -1, 0, 1]));
        let ParsedPoly::OverQt(bad) = parse_poly("x^3 - t*x").unwrap() else { panic!() };
        assert!(linear_t_family(&bad).is_err());
        let ParsedPoly::OverQt(bad) = parse_poly("x^3 - t^2").unwrap() else { panic!() };
        assert!(linear_t_family(&bad).is_err());
    }

    #[test]
    fn verdict_json_round_trip() {
        let v = geometric_square_test(&RatFunc::new(p(&[-4, 0, 27]), p(&[0, 1]).pow(3))).unwrap();
        let json = serde_json::to_string(&v).unwrap();
        let back: GeometricSquareVerdict = serde_json::from_str(&json).unwrap();
        assert_eq!(back, v);
    }
}
