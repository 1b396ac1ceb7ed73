//! String representations used by the JSON reports: rationals as `"a/b"`
//! and polynomials in `x` in the parser's grammar.

use serde::{Deserialize, Deserializer, Serializer};

use super::field::Rational;
use super::parse::{parse_poly, ParsedPoly};
use super::poly::PolyQ;

pub mod rational_string {
    use super::*;

    pub fn serialize<S: Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&r.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        let text = String::deserialize(d)?;
        text.trim().parse::<Rational>().map_err(serde::de::Error::custom)
    }
}

pub mod poly_string {
    use super::*;

    pub fn serialize<S: Serializer>(p: &PolyQ, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&p.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<PolyQ, D::Error> {
        let text = String::deserialize(d)?;
        match parse_poly(&text).map_err(serde::de::Error::custom)? {
            ParsedPoly::Rational(p) => Ok(p),
            ParsedPoly::OverQt(_) => Err(serde::de::Error::custom("expected a polynomial over Q")),
        }
    }
}

pub mod option_poly_string {
    use super::*;

    pub fn serialize<S: Serializer>(p: &Option<PolyQ>, s: S) -> Result<S::Ok, S::Error> {
        match p {
            Some(p) => s.serialize_some(&p.to_string()),
            None => s.serialize_none(),
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<PolyQ>, D::Error> {
        let Some(text) = Option::<String>::deserialize(d)? else {
            return Ok(None);
        };
        match parse_poly(&text).map_err(serde::de::Error::custom)? {
            ParsedPoly::Rational(p) => Ok(Some(p)),
            ParsedPoly::OverQt(_) => Err(serde::de::Error::custom("expected a polynomial over Q")),
        }
    }
}
