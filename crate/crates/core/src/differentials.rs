//! Differentials of the first kind on `y^q = f(x)` via the Newton triangle
//! with vertices `(0,0)`, `(0,q)`, `(n,0)`, and the eigenvalue spectrum of
//! the automorphism `(x, y) -> (x, zeta*y)` acting on them.
//!
//! The interior point `(j, i)` stands for `x^{j-1} dx / y^{q-i}`, an
//! eigenvector with eigenvalue `zeta^i`. Spectra are indexed by the
//! exponent `k` of `zeta^{-k}`, whose multiplicity is `floor(n k / q)`.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::algebra::arith::gcd;
use crate::algebra::PrimePower;
use crate::error::{Error, Result};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct NewtonTriangle {
    n: u64,
    q: PrimePower,
}

impl NewtonTriangle {
    pub fn new(n: u64, q: PrimePower) -> Result<Self> {
        check_pair(n, q)?;
        Ok(NewtonTriangle { n, q })
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn q(&self) -> PrimePower {
        self.q
    }

    /// Strict interiority: `q j + n i < n q` with `j, i >= 1`.
    pub fn contains_interior(&self, j: u64, i: u64) -> bool {
        j >= 1 && i >= 1 && self.q.q() * j + self.n * i < self.n * self.q.q()
    }
}

pub(crate) fn check_pair(n: u64, q: PrimePower) -> Result<()> {
    if n < 3 {
        return Err(Error::DegreeOutOfRange(n));
    }
    q.require_coprime(n)
}

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug, Serialize, Deserialize)]
pub struct LatticeBasisElement {
    pub j: u64,
    pub i: u64,
    /// `omega_{j,i}` has eigenvalue `zeta^{eigen_exponent}`.
    pub eigen_exponent: u64,
}

/// Interior lattice points, sorted by `(j, i)`.
pub fn interior_points(t: &NewtonTriangle) -> Vec<LatticeBasisElement> {
    let (n, q) = (t.n, t.q.q());
    let mut out = Vec::new();
    for j in 1..n {
        for i in 1..q {
            if t.contains_interior(j, i) {
                out.push(LatticeBasisElement { j, i, eigen_exponent: i % q });
            }
        }
    }
    out
}

pub fn genus_lattice(t: &NewtonTriangle) -> u64 {
    interior_points(t).len() as u64
}

/// `(n - 1)(q - 1) / 2`.
pub fn genus_formula(n: u64, q: PrimePower) -> Result<u64> {
    check_pair(n, q)?;
    let twice = (n - 1) * (q.q() - 1);
    debug_assert!(twice.is_multiple_of(2), "coprime n, q force an even product");
    Ok(twice / 2)
}

/// Multiplicity of `zeta^{-i}`: `floor(n i / q)`.
pub fn eigen_multiplicity(n: u64, q: PrimePower, i: u64) -> Result<u64> {
    if i == 0 || i >= q.q() {
        return Err(Error::IndexOutOfRange { i, max: q.q() - 1 });
    }
    Ok(n * i / q.q())
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct EigenSpectrum {
    pub n: u64,
    pub q: PrimePower,
    /// `k -> multiplicity of zeta^{-k}` for `1 <= k <= q-1`. The trivial
    /// character never appears.
    pub multiplicities: BTreeMap<u64, u64>,
}

impl EigenSpectrum {
    pub fn total(&self) -> u64 {
        self.multiplicities.values().sum()
    }

    /// Multiplicities restricted to residues prime to `p`.
    pub fn primitive(&self) -> impl Iterator<Item = (u64, u64)> + '_ {
        let p = self.q.p();
        self.multiplicities.iter().filter(move |(&k, _)| k % p != 0).map(|(&k, &m)| (k, m))
    }
}

pub fn full_spectrum(n: u64, q: PrimePower) -> Result<EigenSpectrum> {
    check_pair(n, q)?;
    let multiplicities = (1..q.q()).map(|k| (k, n * k / q.q())).collect();
    Ok(EigenSpectrum { n, q, multiplicities })
}

/// The spectrum read off the lattice basis: `zeta^{-k}` collects the points
/// on the horizontal line `i = q - k`.
pub fn spectrum_from_lattice(t: &NewtonTriangle) -> EigenSpectrum {
    let q = t.q.q();
    let mut multiplicities: BTreeMap<u64, u64> = (1..q).map(|k| (k, 0)).collect();
    for pt in interior_points(t) {
        *multiplicities.get_mut(&(q - pt.eigen_exponent)).expect("exponent in range") += 1;
    }
    EigenSpectrum { n: t.n, q: t.q, multiplicities }
}

/// Sum of `floor(n i / q)` over `1 <= i < q` with `gcd(i, p) = 1`.
pub fn primitive_mass(n: u64, q: PrimePower) -> Result<u64> {
    check_pair(n, q)?;
    Ok((1..q.q()).filter(|i| gcd(*i, q.p()) == 1).map(|i| n * i / q.q()).sum())
}
