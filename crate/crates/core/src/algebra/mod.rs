//! Exact arithmetic: rationals, univariate polynomials, rational functions
//! in one variable, prime-field matrices and cyclotomic utilities.

pub mod arith;
pub mod cyclotomic;
pub mod field;
pub mod laurent;
pub mod parse;
pub mod poly;
pub mod primefield;
pub mod ratfunc;
pub mod repr;

pub use arith::{extended_gcd, is_prime, prime_powers_up_to, PrimePower};
pub use cyclotomic::{cyclotomic_of, cyclotomic_poly, geometric_poly, reflection_identity_check};
pub use field::{int, rat, Field, Rational};
pub use laurent::LaurentBivariate;
pub use parse::{parse_poly, parse_poly_in_t, ParsedPoly};
pub use poly::{discriminant, resultant, Poly, PolyQ};
pub use primefield::PrimeFieldMatrix;
pub use ratfunc::RatFunc;
