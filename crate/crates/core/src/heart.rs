//! Permutation groups on `{0, .., n-1}` and the sum-zero permutation module
//! over F_p (the heart), together with its commutant.

use std::collections::VecDeque;
use std::fmt;

use crate::algebra::{is_prime, PrimeFieldMatrix};
use crate::error::{Error, Result};

/// A permutation stored as its image list: `images[k] = sigma(k)`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Perm {
    images: Vec<usize>,
}

impl Perm {
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &v in &images {
            if v >= n || seen[v] {
                return Err(Error::InvalidPermutation(format!("{images:?} is not a bijection")));
            }
            seen[v] = true;
        }
        Ok(Perm { images })
    }

    pub fn identity(n: usize) -> Self {
        Perm { images: (0..n).collect() }
    }

    pub fn from_cycles(n: usize, cycles: &[&[usize]]) -> Result<Self> {
        let mut images: Vec<usize> = (0..n).collect();
        let mut touched = vec![false; n];
        for cycle in cycles {
            for (idx, &a) in cycle.iter().enumerate() {
                if a >= n || touched[a] {
                    return Err(Error::InvalidPermutation(format!("bad cycle {cycle:?} on {n} points")));
                }
                touched[a] = true;
                images[a] = cycle[(idx + 1) % cycle.len()];
            }
        }
        Ok(Perm { images })
    }

    /// Parses cycle notation such as `(0 1)(2 3)` or `()`, or a one-line
    /// image list such as `1 2 0` / `[1, 2, 0]`.
    pub fn parse(n: usize, text: &str) -> Result<Self> {
        let text = text.trim();
        let bad = || Error::InvalidPermutation(text.to_string());
        let numbers = |s: &str| -> Result<Vec<usize>> {
            s.split(|c: char| c.is_whitespace() || c == ',')
                .filter(|w| !w.is_empty())
                .map(|w| w.parse::<usize>().map_err(|_| bad()))
                .collect()
        };
        if text.starts_with('(') {
            let mut cycles = Vec::new();
            let mut rest = text;
            while !rest.is_empty() {
                let inner = rest.strip_prefix('(').ok_or_else(bad)?;
                let close = inner.find(')').ok_or_else(bad)?;
                cycles.push(numbers(&inner[..close])?);
                rest = inner[close + 1..].trim_start();
            }
            let refs: Vec<&[usize]> = cycles.iter().map(Vec::as_slice).collect();
            Perm::from_cycles(n, &refs)
        } else {
            let images = numbers(text.trim_start_matches('[').trim_end_matches(']'))?;
            if images.len() != n {
                return Err(Error::InvalidPermutation(format!("expected {n} images in {text:?}")));
            }
            Perm::from_images(images)
        }
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn apply(&self, k: usize) -> usize {
        self.images[k]
    }

    /// `(self * other)(k) = self(other(k))`.
    pub fn compose(&self, other: &Perm) -> Perm {
        Perm { images: other.images.iter().map(|&k| self.images[k]).collect() }
    }

    pub fn inverse(&self) -> Perm {
        let mut images = vec![0; self.images.len()];
        for (k, &v) in self.images.iter().enumerate() {
            images[v] = k;
        }
        Perm { images }
    }

    /// `by * self * by^{-1}`.
    pub fn conjugate_by(&self, by: &Perm) -> Perm {
        by.compose(self).compose(&by.inverse())
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.images.len();
        let mut seen = vec![false; n];
        let mut any = false;
        for start in 0..n {
            if seen[start] || self.images[start] == start {
                continue;
            }
            any = true;
            let mut cycle = vec![start];
            seen[start] = true;
            let mut k = self.images[start];
            while k != start {
                seen[k] = true;
                cycle.push(k);
                k = self.images[k];
            }
            let body: Vec<String> = cycle.iter().map(usize::to_string).collect();
            write!(f, "({})", body.join(" "))?;
        }
        if !any {
            f.write_str("()")?;
        }
        Ok(())
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Perm>,
}

impl PermGroup {
    pub fn new(degree: usize, generators: Vec<Perm>) -> Result<Self> {
        if let Some(g) = generators.iter().find(|g| g.degree() != degree) {
            return Err(Error::InvalidPermutation(format!("{g} does not act on {degree} points")));
        }
        Ok(PermGroup { degree, generators })
    }

    pub fn trivial(n: usize) -> Self {
        PermGroup { degree: n, generators: Vec::new() }
    }

    pub fn symmetric(n: usize) -> Self {
        let mut gens = Vec::new();
        if n >= 2 {
            gens.push(Perm::from_cycles(n, &[&[0, 1]]).expect("valid"));
            let cycle: Vec<usize> = (0..n).collect();
            gens.push(Perm::from_cycles(n, &[&cycle]).expect("valid"));
        }
        PermGroup { degree: n, generators: gens }
    }

    /// Generated by the 3-cycles `(0 1 k)`.
    pub fn alternating(n: usize) -> Self {
        let gens = (2..n).map(|k| Perm::from_cycles(n, &[&[0, 1, k]]).expect("valid")).collect();
        PermGroup { degree: n, generators: gens }
    }

    pub fn cyclic(n: usize) -> Self {
        let cycle: Vec<usize> = (0..n).collect();
        PermGroup { degree: n, generators: vec![Perm::from_cycles(n, &[&cycle]).expect("valid")] }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Perm] {
        &self.generators
    }

    pub fn conjugate_by(&self, by: &Perm) -> Self {
        PermGroup {
            degree: self.degree,
            generators: self.generators.iter().map(|g| g.conjugate_by(by)).collect(),
        }
    }

    /// Size of the orbit of `(a, b)` on ordered pairs of distinct points.
    fn pair_orbit_size(&self, a: usize, b: usize) -> usize {
        let n = self.degree;
        let mut seen = vec![false; n * n];
        let mut queue = VecDeque::from([(a, b)]);
        seen[a * n + b] = true;
        let mut count = 1;
        while let Some((x, y)) = queue.pop_front() {
            for g in &self.generators {
                let (gx, gy) = (g.apply(x), g.apply(y));
                if !seen[gx * n + gy] {
                    seen[gx * n + gy] = true;
                    count += 1;
                    queue.push_back((gx, gy));
                }
            }
        }
        count
    }
}

/// Transitivity on ordered pairs of distinct points, by orbit closure from
/// the pair `(0, 1)`.
pub fn is_doubly_transitive(g: &PermGroup) -> Result<bool> {
    let n = g.degree;
    if n < 2 {
        return Err(Error::GroupDegreeTooSmall);
    }
    Ok(g.pair_orbit_size(0, 1) == n * (n - 1))
}

/// The action of `sigma` on the sum-zero space in the basis
/// `e_k - e_{n-1}`, `k = 0..n-2`.
pub fn heart_action_matrix(sigma: &Perm, p: u64) -> Result<PrimeFieldMatrix> {
    let n = sigma.degree();
    let d = n - 1;
    let mut m = PrimeFieldMatrix::zeros(p, d, d)?;
    let last = sigma.apply(n - 1);
    for k in 0..d {
        let img = sigma.apply(k);
        // sigma(e_k - e_{n-1}) = e_img - e_last; drop the e_{n-1} coordinate.
        let mut col = vec![0i64; n];
        col[img] += 1;
        col[last] -= 1;
        for (r, &v) in col.iter().take(d).enumerate() {
            m.set_signed(r, k, v);
        }
    }
    Ok(m)
}

/// Dimension over F_p of the matrices commuting with every generator on
/// the heart, found as the nullity of the linear system `M A = A M`.
pub fn heart_centralizer_dim(g: &PermGroup, p: u64) -> Result<usize> {
    let n = g.degree;
    if n < 2 {
        return Err(Error::GroupDegreeTooSmall);
    }
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if (n as u64).is_multiple_of(p) {
        return Err(Error::PrimeDividesDegree { p, n });
    }
    let d = n - 1;
    let unknowns = d * d;
    let actions: Vec<PrimeFieldMatrix> =
        g.generators.iter().map(|s| heart_action_matrix(s, p)).collect::<Result<_>>()?;
    let mut system = PrimeFieldMatrix::zeros(p, actions.len() * unknowns, unknowns.max(1))?;
    let unknown = |r: usize, c: usize| r * d + c;
    for (gi, a) in actions.iter().enumerate() {
        for r in 0..d {
            for c in 0..d {
                let row = gi * unknowns + r * d + c;
                // (M A)[r][c] - (A M)[r][c] = sum_k M[r][k] A[k][c] - A[r][k] M[k][c]
                for k in 0..d {
                    let plus = a.get(k, c);
                    if plus != 0 {
                        let idx = unknown(r, k);
                        system.set(row, idx, system.get(row, idx) + plus);
                    }
                    let minus = a.get(r, k);
                    if minus != 0 {
                        let idx = unknown(k, c);
                        system.set(row, idx, system.get(row, idx) + p - minus);
                    }
                }
            }
        }
    }
    Ok(unknowns - system.rank())
}
