//! 2×2 matrices with rational entries acting on binary forms by linear
//! substitution.

use std::fmt;
use std::ops::Mul;

use rug::{Integer, Rational};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Row-major `(s u; t v)`; it sends `F(x, y)` to `F(sx + uy, tx + vy)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Mat2Q {
    pub s: Rational,
    pub u: Rational,
    pub t: Rational,
    pub v: Rational,
}

impl Mat2Q {
    pub fn new(s: Rational, u: Rational, t: Rational, v: Rational) -> Self {
        Mat2Q { s, u, t, v }
    }

    pub fn from_ints(s: i64, u: i64, t: i64, v: i64) -> Self {
        Mat2Q::new(s.into(), u.into(), t.into(), v.into())
    }

    pub fn identity() -> Self {
        Mat2Q::from_ints(1, 0, 0, 1)
    }

    pub fn entries(&self) -> [&Rational; 4] {
        [&self.s, &self.u, &self.t, &self.v]
    }

    pub fn det(&self) -> Rational {
        Rational::from(&self.s * &self.v) - Rational::from(&self.u * &self.t)
    }

    pub fn trace(&self) -> Rational {
        Rational::from(&self.s + &self.v)
    }

    pub fn is_invertible(&self) -> bool {
        self.det() != 0
    }

    pub fn inverse(&self) -> Result<Mat2Q> {
        let det = self.det();
        if det == 0 {
            return Err(Error::SingularMatrix);
        }
        Ok(Mat2Q::new(
            Rational::from(&self.v / &det),
            Rational::from(-&self.u) / &det,
            Rational::from(-&self.t) / &det,
            Rational::from(&self.s / &det),
        ))
    }

    pub fn scale(&self, k: &Rational) -> Mat2Q {
        Mat2Q::new(
            Rational::from(&self.s * k),
            Rational::from(&self.u * k),
            Rational::from(&self.t * k),
            Rational::from(&self.v * k),
        )
    }

    pub fn neg(&self) -> Mat2Q {
        self.scale(&Rational::from(-1))
    }

    pub fn is_identity(&self) -> bool {
        *self == Mat2Q::identity()
    }

    pub fn is_integral(&self) -> bool {
        self.entries().iter().all(|e| *e.denom() == 1)
    }

    /// Least common denominator of the entries.
    pub fn denominator(&self) -> Integer {
        self.entries()
            .iter()
            .fold(Integer::from(1), |l, e| l.lcm(e.denom()))
    }

    /// `S⁻¹ · self · S`.
    pub fn conjugate_by(&self, s: &Mat2Q) -> Result<Mat2Q> {
        Ok(&(&s.inverse()? * self) * s)
    }

    /// Multiplicative order if it is at most `limit`.
    pub fn order(&self, limit: usize) -> Option<usize> {
        let mut p = self.clone();
        for k in 1..=limit {
            if p.is_identity() {
                return Some(k);
            }
            p = &p * self;
        }
        None
    }

    /// Parse four entries written as integers or `p/q`.
    pub fn parse_entries(entries: &[&str]) -> Result<Mat2Q> {
        if entries.len() != 4 {
            return Err(Error::Parse(format!(
                "a matrix needs 4 entries, got {}",
                entries.len()
            )));
        }
        let mut vals = entries.iter().map(|e| parse_rational(e));
        Ok(Mat2Q::new(
            vals.next().unwrap()?,
            vals.next().unwrap()?,
            vals.next().unwrap()?,
            vals.next().unwrap()?,
        ))
    }
}

pub(crate) fn parse_rational(s: &str) -> Result<Rational> {
    s.trim()
        .parse::<Rational>()
        .map_err(|e| Error::Parse(format!("bad rational {s:?}: {e}")))
}

/// Rational encoded as `"p/q"`, or `"p"` when integral.
pub(crate) fn rational_string(q: &Rational) -> String {
    q.to_string()
}

impl Mul for &Mat2Q {
    type Output = Mat2Q;
    fn mul(self, r: &Mat2Q) -> Mat2Q {
        let dot = |a: &Rational, b: &Rational, c: &Rational, d: &Rational| {
            Rational::from(a * b) + Rational::from(c * d)
        };
        Mat2Q::new(
            dot(&self.s, &r.s, &self.u, &r.t),
            dot(&self.s, &r.u, &self.u, &r.v),
            dot(&self.t, &r.s, &self.v, &r.t),
            dot(&self.t, &r.u, &self.v, &r.v),
        )
    }
}

impl fmt::Display for Mat2Q {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({} {}; {} {})", self.s, self.u, self.t, self.v)
    }
}

impl Serialize for Mat2Q {
    fn serialize<S: Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        self.entries()
            .iter()
            .map(|e| rational_string(e))
            .collect::<Vec<_>>()
            .serialize(ser)
    }
}

impl<'de> Deserialize<'de> for Mat2Q {
    fn deserialize<D: Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        let raw = Vec::<String>::deserialize(de)?;
        let refs: Vec<&str> = raw.iter().map(String::as_str).collect();
        Mat2Q::parse_entries(&refs).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn products_and_orders() {
        let c4 = Mat2Q::from_ints(0, 1, -1, 0);
        assert_eq!(c4.order(12), Some(4));
        let c6 = Mat2Q::from_ints(0, -1, 1, 1);
        assert_eq!(c6.order(12), Some(6));
        let refl = Mat2Q::from_ints(0, 1, 1, 0);
        assert_eq!(refl.det(), -1);
        assert_eq!(refl.order(12), Some(2));
        assert_eq!(Mat2Q::from_ints(1, 1, 0, 1).order(12), None);
        let m = Mat2Q::from_ints(-1, 2, -1, 1);
        assert_eq!(&m * &m, Mat2Q::from_ints(-1, 0, 0, -1));
        assert_eq!(&m * &m.inverse().unwrap(), Mat2Q::identity());
        assert!(Mat2Q::from_ints(1, 2, 2, 4).inverse().is_err());
    }

    #[test]
    fn json_round_trip() {
        let m = Mat2Q::new(
            Rational::from((1, 2)),
            Rational::from((1, 2)),
            Rational::from((-3, 2)),
            Rational::from((1, 2)),
        );
        let js = serde_json::to_string(&m).unwrap();
        assert_eq!(js, r#"["1/2","1/2","-3/2","1/2"]"#);
        let back: Mat2Q = serde_json::from_str(&js).unwrap();
        assert_eq!(back, m);
    }
}
