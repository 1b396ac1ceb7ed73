use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

pub fn gcd(a: u64, b: u64) -> u64 {
    a.gcd(&b)
}

/// `(g, u, v)` with `u*a + v*b = g = gcd(a, b)`.
pub fn extended_gcd(a: i64, b: i64) -> Result<(i64, i64, i64)> {
    if a == 0 && b == 0 {
        return Err(Error::BothZero);
    }
    let e = a.extended_gcd(&b);
    Ok((e.gcd, e.x, e.y))
}

/// A prime power `q = p^r` with `r >= 1`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
#[serde(try_from = "u64", into = "u64")]
pub struct PrimePower {
    p: u64,
    r: u32,
}

impl PrimePower {
    pub fn new(q: u64) -> Result<Self> {
        if q < 2 {
            return Err(Error::NotPrimePower(q));
        }
        let p = smallest_prime_factor(q);
        let mut m = q;
        let mut r = 0;
        while m.is_multiple_of(p) {
            m /= p;
            r += 1;
        }
        if m != 1 {
            return Err(Error::NotPrimePower(q));
        }
        Ok(PrimePower { p, r })
    }

    pub fn from_parts(p: u64, r: u32) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if r == 0 {
            return Err(Error::NotPrimePower(1));
        }
        Ok(PrimePower { p, r })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    pub fn q(&self) -> u64 {
        self.p.pow(self.r)
    }

    /// `phi(q) = q - q/p`.
    pub fn phi(&self) -> u64 {
        self.q() - self.q() / self.p
    }

    /// The intermediate prime power `p^i` for `1 <= i <= r`.
    pub fn level(&self, i: u32) -> PrimePower {
        assert!((1..=self.r).contains(&i), "level out of range");
        PrimePower { p: self.p, r: i }
    }

    pub fn levels(&self) -> impl Iterator<Item = PrimePower> + '_ {
        (1..=self.r).map(|i| self.level(i))
    }

    pub fn is_coprime_to(&self, n: u64) -> bool {
        !n.is_multiple_of(self.p)
    }

    pub fn require_coprime(&self, n: u64) -> Result<()> {
        if self.is_coprime_to(n) {
            Ok(())
        } else {
            Err(Error::NotCoprime { n, q: self.q() })
        }
    }
}

impl TryFrom<u64> for PrimePower {
    type Error = Error;
    fn try_from(q: u64) -> Result<Self> {
        PrimePower::new(q)
    }
}

impl From<PrimePower> for u64 {
    fn from(q: PrimePower) -> u64 {
        q.q()
    }
}

impl fmt::Display for PrimePower {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.q())
    }
}

fn smallest_prime_factor(n: u64) -> u64 {
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return d;
        }
        d += 1;
    }
    n
}

/// All prime powers `2 <= q <= max`, ascending.
pub fn prime_powers_up_to(max: u64) -> Vec<PrimePower> {
    (2..=max).filter_map(|q| PrimePower::new(q).ok()).collect()
}

pub fn euler_phi(n: u64) -> u64 {
    let mut m = n;
    let mut out = n;
    let mut d = 2;
    while d * d <= m {
        if m.is_multiple_of(d) {
            while m.is_multiple_of(d) {
                m /= d;
            }
            out -= out / d;
        }
        d += 1;
    }
    if m > 1 {
        out -= out / m;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_power_parsing() {
        let q = PrimePower::new(8).unwrap();
        assert_eq!((q.p(), q.r(), q.q(), q.phi()), (2, 3, 8, 4));
        assert_eq!(PrimePower::new(12), Err(Error::NotPrimePower(12)));
        assert_eq!(PrimePower::new(1), Err(Error::NotPrimePower(1)));
        assert_eq!(PrimePower::from_parts(4, 1), Err(Error::NotPrime(4)));
        assert_eq!(prime_powers_up_to(10).iter().map(|q| q.q()).collect::<Vec<_>>(), [2, 3, 4, 5, 7, 8, 9]);
    }

    #[test]
    fn bezout_fixtures() {
        let (g, u, v) = extended_gcd(3, 4).unwrap();
        assert_eq!((g, u * 3 + v * 4), (1, 1));
        assert_eq!(extended_gcd(5, 5).unwrap().0, 5);
        let (g, u, v) = extended_gcd(4, 9).unwrap();
        assert_eq!((g, u * 4 + v * 9), (1, 1));
        assert_eq!(extended_gcd(0, 0), Err(Error::BothZero));
    }

    #[test]
    fn phi_agrees_with_prime_power_phi() {
        for q in prime_powers_up_to(500) {
            assert_eq!(euler_phi(q.q()), q.phi());
        }
    }
}
