//! Projective roots of binary forms: a double-precision Aberth pass for
//! starting values, multiprecision polishing, and closed forms for the
//! trigonometric families.

use num_complex::Complex64;
use rayon::prelude::*;
use rug::float::Constant;
use rug::{Float, Integer, Rational};

use crate::error::{Error, Result};
use crate::form::BinaryForm;
use crate::mpc::MpComplex;

/// Closed form of a root known in advance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ClosedForm {
    /// `[1 : 0]`.
    Infinity,
    /// `[q : 1]`.
    Rational(Rational),
    /// `[scale · cos(π·num/den) : 1]`.
    ScaledCos { scale: u32, num: u64, den: u64 },
}

/// A point `[a : b]` of the complex projective line, scaled so that the
/// coordinate of larger modulus equals 1.
#[derive(Clone, Debug)]
pub struct ProjRoot {
    pub a: MpComplex,
    pub b: MpComplex,
    /// Set when the root lies on the real projective line; the imaginary
    /// parts are then exactly zero.
    pub real: bool,
    pub exact: Option<ClosedForm>,
}

impl ProjRoot {
    pub fn infinity(prec: u32) -> Self {
        ProjRoot {
            a: MpComplex::from_f64(prec, 1.0, 0.0),
            b: MpComplex::zero(prec),
            real: true,
            exact: Some(ClosedForm::Infinity),
        }
    }

    /// `[z : 1]`, rescaled when `|z| > 1`.
    pub fn finite(z: MpComplex, real: bool) -> Self {
        let prec = z.prec();
        let z = if real { MpComplex::from_real(z.re) } else { z };
        let one = MpComplex::from_f64(prec, 1.0, 0.0);
        if z.norm_sqr() > 1 {
            ProjRoot { a: one, b: z.recip(), real, exact: None }
        } else {
            ProjRoot { a: z, b: one, real, exact: None }
        }
    }

    pub fn prec(&self) -> u32 {
        self.a.prec()
    }

    pub fn to_c64(&self) -> (Complex64, Complex64) {
        (self.a.to_c64(), self.b.to_c64())
    }

    /// Affine coordinate `a/b`, or `None` at infinity.
    pub fn affine(&self) -> Option<MpComplex> {
        if self.b.is_zero() {
            None
        } else {
            Some(self.a.div(&self.b))
        }
    }

    /// Angle in `[0, π)` of the line through a real root.
    pub fn angle(&self) -> Option<f64> {
        if !self.real {
            return None;
        }
        let prec = self.prec();
        let phi = Float::with_val(prec, self.b.re.atan2_ref(&self.a.re));
        let mut phi = phi.to_f64();
        if phi < 0.0 {
            phi += std::f64::consts::PI;
        }
        if phi >= std::f64::consts::PI {
            phi -= std::f64::consts::PI;
        }
        Some(phi)
    }

    /// Same root with its closed form attached.
    pub fn with_exact(mut self, exact: ClosedForm) -> Self {
        self.exact = Some(exact);
        self
    }
}

/// `|F(a, b)|` divided by the sum of absolute coefficients.
pub fn scaled_residual(form: &BinaryForm, root: &ProjRoot) -> Float {
    let prec = root.prec();
    let d = form.degree();
    let mut acc = MpComplex::zero(prec);
    let mut apow = vec![MpComplex::from_f64(prec, 1.0, 0.0)];
    let mut bpow = vec![MpComplex::from_f64(prec, 1.0, 0.0)];
    for k in 1..=d {
        apow.push(apow[k - 1].mul(&root.a));
        bpow.push(bpow[k - 1].mul(&root.b));
    }
    let mut scale = Float::new(prec);
    for (i, c) in form.coeffs().iter().enumerate() {
        if *c == 0 {
            continue;
        }
        let cf = Float::with_val(prec, c);
        acc = acc.add(&apow[d - i].mul(&bpow[i]).mul_real(&cf));
        scale += cf.abs();
    }
    acc.abs() / scale
}

/// All `d` projective roots of `F` with multiplicity, at `prec` bits. The
/// working precision doubles on failure up to 16 times the request.
pub fn projective_roots(form: &BinaryForm, prec: u32) -> Result<Vec<ProjRoot>> {
    if form.is_zero() {
        return Err(Error::ZeroForm);
    }
    if form.degree() == 0 {
        return Err(Error::DegreeTooSmall { got: 0, min: 1 });
    }
    let mut p = prec.max(53);
    let mut last = Error::NoConvergence { precision: p };
    while p <= prec.max(53) * 16 {
        match roots_at(form, p) {
            Ok(r) => return Ok(r),
            Err(e @ Error::NoConvergence { .. }) => last = e,
            Err(e) => return Err(e),
        }
        p *= 2;
    }
    Err(last)
}

fn roots_at(form: &BinaryForm, prec: u32) -> Result<Vec<ProjRoot>> {
    let k = form.infinite_multiplicity();
    let mut out: Vec<ProjRoot> = (0..k).map(|_| ProjRoot::infinity(prec)).collect();
    let (g, _) = form.integral_parts();
    // F(x, 1) in ascending order, of exact degree d − k
    let poly: Vec<Integer> = g[k..].iter().rev().cloned().collect();
    for (factor, mult) in squarefree_decomposition(&poly) {
        for z in squarefree_roots(&factor, prec)? {
            for _ in 0..mult {
                out.push(z.clone());
            }
        }
    }
    let tol = Float::with_val(prec, Float::i_exp(1, -(prec as i32) / 2));
    if out.iter().any(|r| scaled_residual(form, r) >= tol) {
        return Err(Error::NoConvergence { precision: prec });
    }
    Ok(out)
}

/// Roots of a squarefree integer polynomial (ascending coefficients).
fn squarefree_roots(poly: &[Integer], prec: u32) -> Result<Vec<ProjRoot>> {
    let n = poly.len() - 1;
    if n == 0 {
        return Ok(Vec::new());
    }
    if n == 1 {
        let q = Rational::from((Integer::from(-&poly[0]), poly[1].clone()));
        let z = MpComplex::from_rational(prec, &q);
        return Ok(vec![ProjRoot::finite(z, true).with_exact(ClosedForm::Rational(q))]);
    }
    let wp = prec + guard_bits(poly);
    let coeffs: Vec<Float> = poly.iter().map(|c| Float::with_val(wp, c)).collect();
    let start = aberth_f64(&poly.iter().map(|c| c.to_f64()).collect::<Vec<_>>());
    let zs = match newton_polish(&coeffs, &start, prec) {
        Some(z) => z,
        None => aberth_mp(&coeffs, &start, prec)?,
    };
    let real_tol = Float::with_val(wp, Float::i_exp(1, -(prec as i32) / 2));
    Ok(zs
        .into_iter()
        .map(|z| {
            let mag = Float::with_val(wp, z.abs()).max(&Float::with_val(wp, 1));
            let real = Float::with_val(wp, z.im.abs_ref()) < Float::with_val(wp, &real_tol * &mag);
            let mut z = z;
            z.re.set_prec(prec);
            z.im.set_prec(prec);
            ProjRoot::finite(z, real)
        })
        .collect())
}

/// Extra working bits covering the cancellation in evaluating `poly` near
/// its roots: the coefficient size plus `d·log₂` of a root radius bound.
fn guard_bits(poly: &[Integer]) -> u32 {
    let n = poly.len() - 1;
    let lead = poly[n].significant_bits() as i64;
    let coeff_bits = poly.iter().map(|c| c.significant_bits()).max().unwrap_or(0);
    // Fujiwara-style bound: |z| ≤ 2·max |c_k/c_n|^{1/(n−k)}
    let radius_bits = (0..n)
        .filter(|&k| poly[k] != 0)
        .map(|k| (poly[k].significant_bits() as i64 - lead + 1).max(0) / (n - k) as i64 + 1)
        .max()
        .unwrap_or(1)
        .max(1) as u32;
    64 + coeff_bits + n as u32 * radius_bits
}

fn horner_c64(c: &[f64], z: Complex64) -> (Complex64, Complex64) {
    let mut p = Complex64::new(0.0, 0.0);
    let mut dp = Complex64::new(0.0, 0.0);
    for &a in c.iter().rev() {
        dp = dp * z + p;
        p = p * z + a;
    }
    (p, dp)
}

/// Double-precision Aberth iteration; returns the best approximations found.
pub fn aberth_f64(c: &[f64]) -> Vec<Complex64> {
    let n = c.len() - 1;
    let lead = c[n];
    let radius = (0..n)
        .filter(|&k| c[k] != 0.0)
        .map(|k| (c[k] / lead).abs().powf(1.0 / (n - k) as f64))
        .fold(0.0f64, f64::max)
        .max(1e-3)
        * 1.1;
    let mut z: Vec<Complex64> = (0..n)
        .map(|j| Complex64::from_polar(radius, 2.0 * std::f64::consts::PI * j as f64 / n as f64 + 0.4))
        .collect();
    for _ in 0..800 {
        let mut worst = 0.0f64;
        for i in 0..n {
            let (p, dp) = horner_c64(c, z[i]);
            if p == Complex64::new(0.0, 0.0) {
                continue;
            }
            let ratio = p / dp;
            let s: Complex64 = (0..n)
                .filter(|&j| j != i)
                .map(|j| (z[i] - z[j]).inv())
                .sum();
            let w = ratio / (Complex64::new(1.0, 0.0) - ratio * s);
            if w.is_finite() {
                z[i] -= w;
                worst = worst.max(w.norm() / z[i].norm().max(1.0));
            }
        }
        if worst < 1e-15 {
            break;
        }
    }
    z
}

fn horner_mp(c: &[Float], z: &MpComplex) -> (MpComplex, MpComplex) {
    let prec = c[0].prec();
    let mut p = MpComplex::zero(prec);
    let mut dp = MpComplex::zero(prec);
    for a in c.iter().rev() {
        dp = dp.mul(z).add(&p);
        p = p.mul(z);
        p.re += a;
    }
    (p, dp)
}

fn converged(w: &MpComplex, z: &MpComplex, prec: u32) -> bool {
    let mag = z.abs().max(&Float::with_val(z.prec(), 1));
    w.abs() <= mag * Float::with_val(z.prec(), Float::i_exp(1, -(prec as i32) - 8))
}

/// Newton polishing of each starting value in parallel. Fails when any
/// iteration stalls or two starting values land on the same root.
fn newton_polish(c: &[Float], start: &[Complex64], prec: u32) -> Option<Vec<MpComplex>> {
    let wp = c[0].prec();
    if start.iter().any(|z| !z.is_finite()) {
        return None;
    }
    let polished: Option<Vec<MpComplex>> = start
        .par_iter()
        .map(|&s| {
            let mut z = MpComplex::from_c64(wp, s);
            for _ in 0..80 {
                let (p, dp) = horner_mp(c, &z);
                if p.is_zero() {
                    return Some(z);
                }
                if dp.is_zero() {
                    return None;
                }
                let w = p.div(&dp);
                z = z.sub(&w);
                if converged(&w, &z, prec) {
                    return Some(z);
                }
            }
            None
        })
        .collect();
    let zs = polished?;
    let sep = Float::with_val(wp, Float::i_exp(1, -(prec as i32) / 2));
    for i in 0..zs.len() {
        for j in 0..i {
            if zs[i].sub(&zs[j]).abs() < sep {
                return None;
            }
        }
    }
    Some(zs)
}

fn aberth_mp(c: &[Float], start: &[Complex64], prec: u32) -> Result<Vec<MpComplex>> {
    let wp = c[0].prec();
    let n = c.len() - 1;
    let mut z: Vec<MpComplex> = start
        .iter()
        .enumerate()
        .map(|(j, s)| {
            if s.is_finite() {
                // a tiny deterministic offset separates coincident starts
                let eps = 1e-9 * (j as f64 + 1.0);
                MpComplex::from_f64(wp, s.re + eps, s.im + eps)
            } else {
                let t = 2.0 * std::f64::consts::PI * j as f64 / n as f64 + 0.4;
                MpComplex::from_f64(wp, t.cos(), t.sin())
            }
        })
        .collect();
    let one = MpComplex::from_f64(wp, 1.0, 0.0);
    for _ in 0..400 {
        let mut done = true;
        for i in 0..n {
            let (p, dp) = horner_mp(c, &z[i]);
            if p.is_zero() {
                continue;
            }
            let ratio = p.div(&dp);
            let mut s = MpComplex::zero(wp);
            for j in 0..n {
                if j != i {
                    s = s.add(&z[i].sub(&z[j]).recip());
                }
            }
            let w = ratio.div(&one.sub(&ratio.mul(&s)));
            z[i] = z[i].sub(&w);
            if !converged(&w, &z[i], prec) {
                done = false;
            }
        }
        if done {
            return Ok(z);
        }
    }
    Err(Error::NoConvergence { precision: prec })
}

/// Squarefree factors with multiplicities (Yun), for a non-zero integer
/// polynomial given in ascending order. Factors are primitive integer
/// polynomials.
pub fn squarefree_decomposition(poly: &[Integer]) -> Vec<(Vec<Integer>, usize)> {
    if poly.len() <= 2 || is_squarefree_mod_p(poly) {
        return vec![(poly.to_vec(), 1)];
    }
    let f: Vec<Rational> = poly.iter().map(|c| Rational::from(c.clone())).collect();
    let fp = qderiv(&f);
    let a0 = qgcd(&f, &fp);
    let mut b = qdiv(&f, &a0);
    let c = qdiv(&fp, &a0);
    let mut d = qsub(&c, &qderiv(&b));
    let mut out = Vec::new();
    let mut i = 1;
    while b.len() > 1 {
        let a = qgcd(&b, &d);
        let nb = qdiv(&b, &a);
        let c = qdiv(&d, &a);
        d = qsub(&c, &qderiv(&nb));
        if a.len() > 1 {
            out.push((primitive_integer(&a), i));
        }
        b = nb;
        i += 1;
    }
    out
}

fn primitive_integer(p: &[Rational]) -> Vec<Integer> {
    let l = p.iter().fold(Integer::from(1), |l, c| l.lcm(c.denom()));
    let ints: Vec<Integer> = p
        .iter()
        .map(|c| Integer::from(c.numer() * Integer::from(&l / c.denom())))
        .collect();
    let g = ints.iter().fold(Integer::new(), |g, c| g.gcd(c));
    ints.into_iter().map(|c| c / &g).collect()
}

/// `gcd(f mod p, f' mod p) = 1` for a prime not dividing the leading
/// coefficient implies `f` is squarefree over Q.
fn is_squarefree_mod_p(poly: &[Integer]) -> bool {
    const PRIMES: [u64; 3] = [2_147_483_647, 2_147_483_629, 2_147_483_587];
    for &p in &PRIMES {
        let f: Vec<u64> = poly.iter().map(|c| c.mod_u(p as u32) as u64).collect();
        if *f.last().unwrap() == 0 {
            continue;
        }
        let df: Vec<u64> = f
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * (i as u64 % p) % p)
            .collect();
        if mod_gcd_degree(f, df, p) == 0 {
            return true;
        }
    }
    false
}

/// Whether `F` has `d` distinct projective roots, i.e. `D_F ≠ 0`.
pub fn is_squarefree_form(form: &BinaryForm) -> bool {
    let k = form.infinite_multiplicity();
    if form.is_zero() || k > 1 {
        return false;
    }
    let (g, _) = form.integral_parts();
    let poly: Vec<Integer> = g[k..].iter().rev().cloned().collect();
    if poly.len() <= 2 || is_squarefree_mod_p(&poly) {
        return true;
    }
    squarefree_decomposition(&poly).iter().all(|(_, m)| *m == 1)
}

fn mod_pow(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    r
}

fn mod_trim(v: &mut Vec<u64>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

fn mod_gcd_degree(mut a: Vec<u64>, mut b: Vec<u64>, p: u64) -> usize {
    mod_trim(&mut a);
    mod_trim(&mut b);
    while !b.is_empty() {
        let inv = mod_pow(*b.last().unwrap(), p - 2, p);
        while a.len() >= b.len() {
            let q = a.last().unwrap() * inv % p;
            let off = a.len() - b.len();
            for (j, c) in b.iter().enumerate() {
                a[off + j] = (a[off + j] + p - q * c % p) % p;
            }
            a.pop();
            mod_trim(&mut a);
            if a.is_empty() {
                break;
            }
        }
        std::mem::swap(&mut a, &mut b);
    }
    a.len().saturating_sub(1)
}

fn qtrim(p: &mut Vec<Rational>) {
    while p.last().is_some_and(|c| *c == 0) {
        p.pop();
    }
}

fn qderiv(p: &[Rational]) -> Vec<Rational> {
    let mut d: Vec<Rational> = p
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| Rational::from(c * i as u32))
        .collect();
    qtrim(&mut d);
    d
}

fn qsub(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let n = a.len().max(b.len());
    let zero = Rational::new();
    let mut out: Vec<Rational> = (0..n)
        .map(|i| Rational::from(a.get(i).unwrap_or(&zero) - b.get(i).unwrap_or(&zero)))
        .collect();
    qtrim(&mut out);
    out
}

fn qdivrem(a: &[Rational], b: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    let mut r = a.to_vec();
    qtrim(&mut r);
    let n = b.len() - 1;
    if r.len() <= n {
        return (Vec::new(), r);
    }
    let mut q = vec![Rational::new(); r.len() - n];
    while r.len() > n {
        let off = r.len() - 1 - n;
        let t = Rational::from(r.last().unwrap() / &b[n]);
        for (j, c) in b.iter().enumerate() {
            r[off + j] -= Rational::from(&t * c);
        }
        r.pop();
        q[off] = t;
    }
    qtrim(&mut r);
    (q, r)
}

fn qdiv(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    qdivrem(a, b).0
}

fn qgcd(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let mut x = a.to_vec();
    let mut y = b.to_vec();
    qtrim(&mut x);
    qtrim(&mut y);
    while !y.is_empty() {
        let r = qdivrem(&x, &y).1;
        x = y;
        // keep the intermediate coefficients small
        y = if r.is_empty() {
            r
        } else {
            primitive_integer(&r).into_iter().map(Rational::from).collect()
        };
    }
    let lead = x.last().unwrap().clone();
    x.into_iter().map(|c| c / &lead).collect()
}

/// Roots `[scale·cos(π·num_j/den) : 1]` computed directly from the closed form.
pub fn scaled_cos_roots(scale: u32, angles: &[(u64, u64)], prec: u32) -> Vec<ProjRoot> {
    angles
        .iter()
        .map(|&(num, den)| {
            let pi = Float::with_val(prec + 16, Constant::Pi);
            let x = Float::with_val(prec + 16, pi * num) / den;
            let z = Float::with_val(prec, x.cos() * scale);
            ProjRoot::finite(MpComplex::from_real(z), true)
                .with_exact(ClosedForm::ScaledCos { scale, num, den })
        })
        .collect()
}
