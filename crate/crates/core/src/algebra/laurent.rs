use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use super::field::{Field, Rational};

/// Sparse Laurent polynomial in two variables `s`, `t` with rational
/// coefficients. Exponents may be negative; zero coefficients are never
/// stored.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct LaurentBivariate {
    terms: BTreeMap<(i64, i64), Rational>,
}

impl LaurentBivariate {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(<Rational as Field>::one(), 0, 0)
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial(c, 0, 0)
    }

    /// `c * s^exp_s * t^exp_t`.
    pub fn monomial(c: Rational, exp_s: i64, exp_t: i64) -> Self {
        let mut terms = BTreeMap::new();
        if !Field::is_zero(&c) {
            terms.insert((exp_s, exp_t), c);
        }
        LaurentBivariate { terms }
    }

    pub fn terms(&self) -> &BTreeMap<(i64, i64), Rational> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn accumulate(&mut self, key: (i64, i64), c: Rational) {
        let slot = self.terms.entry(key).or_insert_with(<Rational as Field>::zero);
        *slot = slot.clone() + c;
        if Field::is_zero(slot) {
            self.terms.remove(&key);
        }
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
}

impl Add for &LaurentBivariate {
    type Output = LaurentBivariate;
    fn add(self, rhs: Self) -> LaurentBivariate {
        let mut out = self.clone();
        for (&k, c) in &rhs.terms {
            out.accumulate(k, c.clone());
        }
        out
    }
}

impl Neg for &LaurentBivariate {
    type Output = LaurentBivariate;
    fn neg(self) -> LaurentBivariate {
        LaurentBivariate { terms: self.terms.iter().map(|(&k, c)| (k, -c.clone())).collect() }
    }
}

impl Sub for &LaurentBivariate {
    type Output = LaurentBivariate;
    fn sub(self, rhs: Self) -> LaurentBivariate {
        self + &(-rhs)
    }
}

impl Mul for &LaurentBivariate {
    type Output = LaurentBivariate;
    fn mul(self, rhs: Self) -> LaurentBivariate {
        let mut out = LaurentBivariate::zero();
        for (&(a1, b1), c1) in &self.terms {
            for (&(a2, b2), c2) in &rhs.terms {
                out.accumulate((a1 + a2, b1 + b2), c1.clone() * c2.clone());
            }
        }
        out
    }
}
