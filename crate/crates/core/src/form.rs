//! Binary forms `F(x, y) = Σ cᵢ x^{d−i} yⁱ` with exact rational coefficients.

use std::fmt;
use std::ops::Mul;

use rug::ops::Pow;
use rug::{Integer, Rational};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::matrix::{parse_rational, rational_string, Mat2Q};
use crate::poly::IntPoly;

/// Homogeneous form of degree `d`; `coeffs[i]` multiplies `x^{d−i} yⁱ`, so the
/// leading coefficient in `x` comes first.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BinaryForm {
    coeffs: Vec<Rational>,
}

impl BinaryForm {
    /// The degree is `coeffs.len() − 1`; leading zeros are kept since they
    /// encode roots at infinity.
    pub fn new(coeffs: Vec<Rational>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::InvalidArgument("a form needs at least one coefficient".into()));
        }
        Ok(BinaryForm { coeffs })
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        BinaryForm::new(coeffs.iter().map(|&c| Rational::from(c)).collect()).unwrap()
    }

    pub fn from_integers(coeffs: Vec<Integer>) -> Self {
        BinaryForm::new(coeffs.into_iter().map(Rational::from).collect()).unwrap()
    }

    /// `x^k`, written as a form of degree `k`.
    pub fn x_power(k: usize) -> Self {
        let mut c = vec![Rational::new(); k + 1];
        c[0] = Rational::from(1);
        BinaryForm { coeffs: c }
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| *c == 0)
    }

    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|c| *c.denom() == 1)
    }

    /// `y^d · p(x/y)`.
    pub fn homogenize(p: &IntPoly, d: usize) -> Result<Self> {
        let deg = p.degree().unwrap_or(0);
        if d < deg {
            return Err(Error::HomogenizeDegree { target: d, degree: deg });
        }
        Ok(BinaryForm {
            coeffs: (0..=d).map(|i| Rational::from(p.coeff(d - i))).collect(),
        })
    }

    /// `F(x, 1)` for an integral form.
    pub fn dehomogenize(&self) -> Option<IntPoly> {
        if !self.is_integral() {
            return None;
        }
        Some(IntPoly::new(
            self.coeffs.iter().rev().map(|c| c.numer().clone()).collect(),
        ))
    }

    /// `(G, r)` with `F = G / r`, `G` integral and `r > 0` minimal.
    pub fn integral_parts(&self) -> (Vec<Integer>, Integer) {
        let r = self
            .coeffs
            .iter()
            .fold(Integer::from(1), |l, c| l.lcm(c.denom()));
        let g = self
            .coeffs
            .iter()
            .map(|c| Integer::from(c.numer() * Integer::from(&r / c.denom())))
            .collect();
        (g, r)
    }

    /// Positive rational `c` with `F / c` integral and primitive.
    pub fn content(&self) -> Rational {
        let (g, r) = self.integral_parts();
        let num = g.iter().fold(Integer::new(), |a, c| a.gcd(c));
        Rational::from((num, r))
    }

    pub fn primitive_part(&self) -> Self {
        let c = self.content();
        if c == 0 {
            return self.clone();
        }
        self.scale(&Rational::from(c.recip_ref()))
    }

    pub fn scale(&self, k: &Rational) -> Self {
        BinaryForm {
            coeffs: self.coeffs.iter().map(|c| Rational::from(c * k)).collect(),
        }
    }

    pub fn neg(&self) -> Self {
        self.scale(&Rational::from(-1))
    }

    pub fn eval(&self, x: &Rational, y: &Rational) -> Rational {
        let d = self.degree();
        // Horner in x/y would need y != 0; expand directly instead.
        let mut xp = vec![Rational::from(1); d + 1];
        let mut yp = vec![Rational::from(1); d + 1];
        for k in 1..=d {
            xp[k] = Rational::from(&xp[k - 1] * x);
            yp[k] = Rational::from(&yp[k - 1] * y);
        }
        self.coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| Rational::from(c * &xp[d - i]) * &yp[i])
            .fold(Rational::new(), |a, b| a + b)
    }

    /// Multiplicity of the root `[1 : 0]`, i.e. the power of `y` dividing `F`.
    pub fn infinite_multiplicity(&self) -> usize {
        self.coeffs.iter().take_while(|c| **c == 0).count()
    }

    /// `F_M(x, y) = F(sx + uy, tx + vy)`. Singular `M` is allowed.
    pub fn substitute(&self, m: &Mat2Q) -> BinaryForm {
        let d = self.degree();
        let (g, r) = self.integral_parts();
        let q = m.denominator();
        let scaled = |e: &Rational| Integer::from(e.numer() * Integer::from(&q / e.denom()));
        let (s, u, t, v) = (scaled(&m.s), scaled(&m.u), scaled(&m.t), scaled(&m.v));
        let first = linear_powers(&s, &u, d);
        let second = linear_powers(&t, &v, d);
        let mut out = vec![Integer::new(); d + 1];
        for (i, gi) in g.iter().enumerate() {
            if *gi == 0 {
                continue;
            }
            let a = &first[d - i];
            let b = &second[i];
            for (j, aj) in a.iter().enumerate() {
                if *aj == 0 {
                    continue;
                }
                let ga = Integer::from(gi * aj);
                for (k, bk) in b.iter().enumerate() {
                    out[j + k] += Integer::from(&ga * bk);
                }
            }
        }
        let denom = r * q.pow(d as u32);
        BinaryForm {
            coeffs: out
                .into_iter()
                .map(|c| Rational::from((c, denom.clone())))
                .collect(),
        }
    }

    /// Discriminant, normalised so a form monic in `x` has the discriminant of
    /// the polynomial `F(x, 1)`. It transforms as `D(F_M) = det(M)^{d(d−1)} D(F)`.
    pub fn discriminant(&self) -> Result<Rational> {
        let d = self.degree();
        if d < 2 {
            return Err(Error::DegreeTooSmall { got: d, min: 2 });
        }
        if self.is_zero() {
            return Ok(Rational::new());
        }
        // A unimodular shear (x, y) -> (x, kx + y) moves every root off
        // infinity without changing the discriminant.
        let shifted;
        let form = if self.coeffs[0] != 0 {
            self
        } else {
            let k = (1..=(d as i64 + 1))
                .find(|&k| self.eval(&Rational::from(1), &Rational::from(k)) != 0)
                .expect("a non-zero form has at most d projective roots");
            shifted = self.substitute(&Mat2Q::from_ints(1, 0, k, 1));
            &shifted
        };
        let f: Vec<Rational> = form.coeffs.iter().rev().cloned().collect();
        Ok(poly_discriminant(&f))
    }

    /// `Some(c)` when `other = c · self`.
    pub fn proportionality(&self, other: &BinaryForm) -> Option<Rational> {
        if self.degree() != other.degree() {
            return None;
        }
        let pivot = self.coeffs.iter().position(|c| *c != 0)?;
        let c = Rational::from(&other.coeffs[pivot] / &self.coeffs[pivot]);
        self.coeffs
            .iter()
            .zip(&other.coeffs)
            .all(|(a, b)| Rational::from(a * &c) == *b)
            .then_some(c)
    }

    pub fn add(&self, other: &BinaryForm) -> Result<BinaryForm> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch(self.degree(), other.degree()));
        }
        Ok(BinaryForm {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| Rational::from(a + b))
                .collect(),
        })
    }

    /// Exact quotient by a form of lower or equal degree.
    pub fn div_exact(&self, divisor: &BinaryForm) -> Result<BinaryForm> {
        let (d, e) = (self.degree(), divisor.degree());
        if e > d {
            return Err(Error::InexactDivision);
        }
        let lead = divisor.coeffs.iter().position(|c| *c != 0).ok_or(Error::ZeroForm)?;
        // Division in x with y as a formal variable: work on coefficient
        // vectors indexed by the power of y.
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Rational::new(); d - e + 1];
        for i in 0..=(d - e) {
            let top = &rem[i + lead];
            if *top == 0 {
                continue;
            }
            if i + lead > d {
                return Err(Error::InexactDivision);
            }
            let q = Rational::from(top / &divisor.coeffs[lead]);
            for (j, c) in divisor.coeffs.iter().enumerate() {
                if i + j <= d {
                    rem[i + j] -= Rational::from(&q * c);
                }
            }
            quot[i] = q;
        }
        if rem.iter().any(|c| *c != 0) {
            return Err(Error::InexactDivision);
        }
        Ok(BinaryForm { coeffs: quot })
    }
}

/// `(a x + b y)^k` for all `k ≤ d`, descending in `x`.
fn linear_powers(a: &Integer, b: &Integer, d: usize) -> Vec<Vec<Integer>> {
    let mut out = Vec::with_capacity(d + 1);
    out.push(vec![Integer::from(1)]);
    for k in 1..=d {
        let prev: &Vec<Integer> = &out[k - 1];
        let mut next = vec![Integer::new(); k + 1];
        for (j, c) in prev.iter().enumerate() {
            next[j] += Integer::from(c * a);
            next[j + 1] += Integer::from(c * b);
        }
        out.push(next);
    }
    out
}

fn trim(p: &mut Vec<Rational>) {
    while p.last().is_some_and(|c| *c == 0) {
        p.pop();
    }
}

fn rem_q(f: &[Rational], g: &[Rational]) -> Vec<Rational> {
    let mut r = f.to_vec();
    let n = g.len() - 1;
    let lead = g.last().unwrap();
    while r.len() > n {
        let top = r.last().unwrap().clone();
        if top != 0 {
            let q = top / lead;
            let off = r.len() - 1 - n;
            for (j, c) in g.iter().enumerate() {
                r[off + j] -= Rational::from(&q * c);
            }
        }
        r.pop();
        trim(&mut r);
    }
    trim(&mut r);
    r
}

/// Resultant of two non-zero polynomials (ascending coefficients) over Q.
pub fn resultant(f: &[Rational], g: &[Rational]) -> Rational {
    let mut f = f.to_vec();
    let mut g = g.to_vec();
    trim(&mut f);
    trim(&mut g);
    if f.is_empty() || g.is_empty() {
        return Rational::new();
    }
    let mut acc = Rational::from(1);
    loop {
        let m = f.len() - 1;
        let n = g.len() - 1;
        if n == 0 {
            return acc * Rational::from((&g[0]).pow(m as i32));
        }
        if m == 0 {
            return acc * Rational::from((&f[0]).pow(n as i32));
        }
        let r = rem_q(&f, &g);
        if r.is_empty() {
            return Rational::new();
        }
        let k = r.len() - 1;
        if (m * n) % 2 == 1 {
            acc = -acc;
        }
        acc *= Rational::from((&g[n]).pow((m - k) as i32));
        f = g;
        g = r;
    }
}

/// Discriminant of a polynomial of exact degree `len − 1` (ascending).
pub fn poly_discriminant(f: &[Rational]) -> Rational {
    let n = f.len() - 1;
    let df: Vec<Rational> = f
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| Rational::from(c * i as u32))
        .collect();
    let res = resultant(f, &df);
    let sign = if (n * (n - 1) / 2) % 2 == 1 { -1 } else { 1 };
    res * sign / &f[n]
}

impl Mul for &BinaryForm {
    type Output = BinaryForm;
    fn mul(self, rhs: &BinaryForm) -> BinaryForm {
        let mut out = vec![Rational::new(); self.degree() + rhs.degree() + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if *a == 0 {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += Rational::from(a * b);
            }
        }
        BinaryForm { coeffs: out }
    }
}

impl fmt::Display for BinaryForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let d = self.degree();
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if *c == 0 {
                continue;
            }
            let neg = *c < 0;
            let abs = Rational::from(c.abs_ref());
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let (px, py) = (d - i, i);
            if abs != 1 || (px == 0 && py == 0) {
                write!(f, "{abs}")?;
            }
            match px {
                0 => {}
                1 => write!(f, "x")?,
                _ => write!(f, "x^{px}")?,
            }
            match py {
                0 => {}
                1 => write!(f, "y")?,
                _ => write!(f, "y^{py}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct FormJson {
    degree: usize,
    coeffs: Vec<String>,
}

impl Serialize for BinaryForm {
    fn serialize<S: Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        FormJson {
            degree: self.degree(),
            coeffs: self.coeffs.iter().map(rational_string).collect(),
        }
        .serialize(ser)
    }
}

impl<'de> Deserialize<'de> for BinaryForm {
    fn deserialize<D: Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        let raw = FormJson::deserialize(de)?;
        if raw.coeffs.len() != raw.degree + 1 {
            return Err(serde::de::Error::custom(format!(
                "degree {} needs {} coefficients, got {}",
                raw.degree,
                raw.degree + 1,
                raw.coeffs.len()
            )));
        }
        let coeffs = raw
            .coeffs
            .iter()
            .map(|c| parse_rational(c))
            .collect::<Result<Vec<_>>>()
            .map_err(serde::de::Error::custom)?;
        BinaryForm::new(coeffs).map_err(serde::de::Error::custom)
    }
}
