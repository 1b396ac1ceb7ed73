//! Dense univariate polynomials over an exact field.
//!
//! Coefficients are stored lowest degree first with no trailing zeros, so
//! the empty vector is the zero polynomial and structural equality is
//! mathematical equality.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::field::{Field, Rational};
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Poly<F> {
    coeffs: Vec<F>,
}

/// Polynomials over the rationals.
pub type PolyQ = Poly<Rational>;

impl<F: Field> Poly<F> {
    pub fn new(mut coeffs: Vec<F>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(F::one())
    }

    pub fn constant(c: F) -> Self {
        Self::new(vec![c])
    }

    /// The monomial `c * x^k`.
    pub fn monomial(c: F, k: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![F::zero(); k + 1];
        coeffs[k] = c;
        Poly { coeffs }
    }

    pub fn x() -> Self {
        Self::monomial(F::one(), 1)
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| F::from_int(c)).collect())
    }

    pub fn coeffs(&self) -> &[F] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<F> {
        self.coeffs
    }

    pub fn coeff(&self, k: usize) -> F {
        self.coeffs.get(k).cloned().unwrap_or_else(F::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// Leading coefficient; zero for the zero polynomial.
    pub fn lc(&self) -> F {
        self.coeffs.last().cloned().unwrap_or_else(F::zero)
    }

    pub fn scale(&self, c: &F) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Poly::new(self.coeffs.iter().map(|a| a.clone() * c.clone()).collect())
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        self.scale(&self.lc().inv())
    }

    pub fn eval(&self, x: &F) -> F {
        self.coeffs
            .iter()
            .rev()
            .fold(F::zero(), |acc, c| acc * x.clone() + c.clone())
    }

    /// `self(g(x))` by Horner's rule.
    pub fn compose(&self, g: &Self) -> Self {
        self.coeffs
            .iter()
            .rev()
            .fold(Self::zero(), |acc, c| &(&acc * g) + &Self::constant(c.clone()))
    }

    /// `self(x + c)`.
    pub fn shift(&self, c: &F) -> Self {
        self.compose(&Poly::new(vec![c.clone(), F::one()]))
    }

    pub fn derivative(&self) -> Self {
        Poly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c.clone() * F::from_int(k as i64))
                .collect(),
        )
    }

    /// `x^n * self(1/x)`; requires `n >= deg(self)`.
    pub fn reversed(&self, n: usize) -> Self {
        let mut coeffs = self.coeffs.clone();
        assert!(coeffs.len() <= n + 1, "reversal degree below polynomial degree");
        coeffs.resize(n + 1, F::zero());
        coeffs.reverse();
        Poly::new(coeffs)
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn map<G: Field>(&self, f: impl Fn(&F) -> G) -> Poly<G> {
        Poly::new(self.coeffs.iter().map(f).collect())
    }

    /// Quotient and remainder with `deg(rem) < deg(divisor)`.
    pub fn div_rem(&self, divisor: &Self) -> Result<(Self, Self)> {
        let dd = divisor.degree().ok_or(Error::DivisionByZero)?;
        let Some(sd) = self.degree() else {
            return Ok((Self::zero(), Self::zero()));
        };
        if sd < dd {
            return Ok((Self::zero(), self.clone()));
        }
        let lc_inv = divisor.lc().inv();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![F::zero(); sd - dd + 1];
        for k in (0..=sd - dd).rev() {
            let c = rem[k + dd].clone() * lc_inv.clone();
            if c.is_zero() {
                continue;
            }
            for (j, d) in divisor.coeffs.iter().enumerate() {
                if !d.is_zero() {
                    rem[k + j] = rem[k + j].clone() - c.clone() * d.clone();
                }
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        Ok((Poly::new(quot), Poly::new(rem)))
    }

    pub fn rem(&self, divisor: &Self) -> Result<Self> {
        Ok(self.div_rem(divisor)?.1)
    }

    /// Exact division; `None` when the divisor does not divide `self`.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        let (q, r) = self.div_rem(divisor).ok()?;
        r.is_zero().then_some(q)
    }

    /// Monic gcd; zero only when both inputs are zero.
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b).expect("nonzero divisor");
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Squarefree decomposition (Yun): `self = lc * prod g_i^{m_i}` with
    /// each `g_i` monic, squarefree, nonconstant and pairwise coprime.
    pub fn squarefree_factor(&self) -> Result<Vec<(Self, u32)>> {
        if self.is_zero() {
            return Err(Error::ZeroInput);
        }
        let mut out = Vec::new();
        if self.is_constant() {
            return Ok(out);
        }
        let f = self.monic();
        let df = f.derivative();
        let mut a = f.gcd(&df);
        let mut b = f.div_exact(&a).expect("gcd divides f");
        let mut c = df.div_exact(&a).expect("gcd divides f'");
        let mut d = &c - &b.derivative();
        let mut m = 1u32;
        while !b.is_constant() {
            a = b.gcd(&d);
            b = b.div_exact(&a).expect("gcd divides b");
            c = d.div_exact(&a).expect("gcd divides d");
            if !a.is_constant() {
                out.push((a.clone(), m));
            }
            d = &c - &b.derivative();
            m += 1;
        }
        Ok(out)
    }

    pub fn is_squarefree(&self) -> bool {
        !self.is_zero() && self.gcd(&self.derivative()).is_constant()
    }

    /// Render with a chosen variable name.
    pub fn to_string_in(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let raw = c.to_string();
            let (neg, body) = if !c.is_compound() && raw.starts_with('-') {
                (true, raw[1..].to_string())
            } else if c.is_compound() {
                (false, format!("({raw})"))
            } else {
                (false, raw)
            };
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mono = match k {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{k}"),
            };
            if mono.is_empty() {
                out.push_str(&body);
            } else if body == "1" {
                out.push_str(&mono);
            } else {
                out.push_str(&body);
                out.push('*');
                out.push_str(&mono);
            }
        }
        out
    }
}

impl<F: Field> fmt::Display for Poly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_string_in("x"))
    }
}

impl<F: Field> Add for &Poly<F> {
    type Output = Poly<F>;
    fn add(self, rhs: Self) -> Poly<F> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new(
            (0..n)
                .map(|k| match (self.coeffs.get(k), rhs.coeffs.get(k)) {
                    (Some(a), Some(b)) => a.clone() + b.clone(),
                    (Some(a), None) => a.clone(),
                    (None, Some(b)) => b.clone(),
                    (None, None) => unreachable!(),
                })
                .collect(),
        )
    }
}

impl<F: Field> Neg for &Poly<F> {
    type Output = Poly<F>;
    fn neg(self) -> Poly<F> {
        Poly { coeffs: self.coeffs.iter().map(|c| -c.clone()).collect() }
    }
}

impl<F: Field> Sub for &Poly<F> {
    type Output = Poly<F>;
    fn sub(self, rhs: Self) -> Poly<F> {
        self + &(-rhs)
    }
}

impl<F: Field> Mul for &Poly<F> {
    type Output = Poly<F>;
    fn mul(self, rhs: Self) -> Poly<F> {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![F::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        // Cyclotomic factors are sparse; skip zero terms on both sides.
        let rhs_terms: Vec<(usize, &F)> =
            rhs.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()).collect();
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for &(j, b) in &rhs_terms {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Poly::new(out)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl<F: Field> $tr for Poly<F> {
            type Output = Poly<F>;
            fn $m(self, rhs: Self) -> Poly<F> {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl<F: Field> Neg for Poly<F> {
    type Output = Poly<F>;
    fn neg(self) -> Poly<F> {
        -&self
    }
}

/// Resultant over a field by the Euclidean recurrence
/// `Res(a, b) = (-1)^{deg a deg b} lc(b)^{deg a - deg r} Res(b, r)`.
pub fn resultant<F: Field>(a: &Poly<F>, b: &Poly<F>) -> F {
    let (Some(_), Some(_)) = (a.degree(), b.degree()) else {
        return F::zero();
    };
    let (mut a, mut b) = (a.clone(), b.clone());
    let mut acc = F::one();
    loop {
        let da = a.degree().expect("nonzero") as u64;
        let db = b.degree().expect("nonzero") as u64;
        if db == 0 {
            return acc * b.lc().pow(da);
        }
        let r = a.rem(&b).expect("nonzero divisor");
        let Some(dr) = r.degree() else {
            return F::zero();
        };
        if da % 2 == 1 && db % 2 == 1 {
            acc = -acc;
        }
        acc = acc * b.lc().pow(da - dr as u64);
        a = b;
        b = r;
    }
}

/// `disc(f) = (-1)^{d(d-1)/2} Res(f, f') / lc(f)`.
pub fn discriminant<F: Field>(f: &Poly<F>) -> Result<F> {
    let d = f.degree().unwrap_or(0);
    if d < 2 {
        return Err(Error::DegreeTooSmall { found: d, min: 2 });
    }
    let res = resultant(f, &f.derivative());
    let signed = if (d * (d - 1) / 2) % 2 == 1 { -res } else { res };
    Ok(signed / f.lc())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::field::int;

    fn p(c: &[i64]) -> PolyQ {
        PolyQ::from_ints(c)
    }

    #[test]
    fn difference_of_squares() {
        assert_eq!(&p(&[1, 1]) * &p(&[-1, 1]), p(&[-1, 0, 1]));
    }

    #[test]
    fn synthetic_division() {
        let (q, r) = p(&[-1, -1, 0, 1]).div_rem(&p(&[-2, 1])).unwrap();
        assert_eq!(q, p(&[3, 2, 1]));
        assert_eq!(r, p(&[5]));
    }

    #[test]
    fn zero_is_additive_identity() {
        let f = p(&[3, 0, -2, 7]);
        assert_eq!(&PolyQ::zero() + &f, f);
    }

    #[test]
    fn divide_by_zero_polynomial() {
        assert_eq!(p(&[1, 1]).div_rem(&PolyQ::zero()), Err(Error::DivisionByZero));
    }

    #[test]
    fn discriminant_fixtures() {
        assert_eq!(discriminant(&p(&[-1, -1, 0, 1])).unwrap(), int(-23));
        assert_eq!(discriminant(&p(&[-1, -3, 0, 1])).unwrap(), int(81));
        assert_eq!(discriminant(&p(&[-1, 0, 1])).unwrap(), int(4));
        assert!(matches!(discriminant(&p(&[1, 1])), Err(Error::DegreeTooSmall { .. })));
    }

    #[test]
    fn discriminant_matches_root_product_for_split_quartic() {
        // roots 0, 1, 3, -2: disc = prod_{i<j} (ri - rj)^2
        let roots = [0i64, 1, 3, -2];
        let f = roots.iter().fold(PolyQ::one(), |acc, &r| &acc * &p(&[-r, 1]));
        let mut expect = 1i64;
        for i in 0..4 {
            for j in i + 1..4 {
                expect *= (roots[i] - roots[j]).pow(2);
            }
        }
        assert_eq!(discriminant(&f).unwrap(), int(expect));
        // scaling by lc multiplies disc by lc^{2d-2}
        assert_eq!(discriminant(&f.scale(&int(2))).unwrap(), int(expect * 64));
    }

    #[test]
    fn squarefree_fixtures() {
        let f = &p(&[-1, 1]).pow(2) * &p(&[2, 1]);
        assert_eq!(f.squarefree_factor().unwrap(), vec![(p(&[2, 1]), 1), (p(&[-1, 1]), 2)]);
        let g = p(&[-1, -1, 0, 1]);
        assert_eq!(g.squarefree_factor().unwrap(), vec![(g.clone(), 1)]);
        assert!(p(&[5]).squarefree_factor().unwrap().is_empty());
        assert_eq!(PolyQ::zero().squarefree_factor(), Err(Error::ZeroInput));
    }

    #[test]
    fn display() {
        assert_eq!(p(&[-1, -1, 0, 1]).to_string(), "x^3 - x - 1");
        assert_eq!(p(&[0, 2]).to_string(), "2*x");
        assert_eq!(PolyQ::zero().to_string(), "0");
        assert_eq!(p(&[1, 0, -1]).to_string_in("t"), "-t^2 + 1");
    }

    #[test]
    fn reversal_and_shift() {
        let f = p(&[-1, -1, 0, 1]);
        assert_eq!(f.reversed(3), p(&[1, 0, -1, -1]));
        assert_eq!(p(&[0, 0, 1]).reversed(3), p(&[0, 1]));
        assert_eq!(f.shift(&int(1)).shift(&int(-1)), f);
    }
}
