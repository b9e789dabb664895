//! Cyclotomic polynomials, the minimal polynomials `Ψₙ` of `2cos(2π/n)` and
//! `Πₙ` of `2sin(2π/n)`, and the arithmetic functions attached to them.

use rug::ops::Pow;
use rug::Integer;

use crate::arith::{divisors, factorize, gcd, mobius, radical, totient};
use crate::error::{Error, Result};
use crate::form::BinaryForm;
use crate::poly::IntPoly;
use crate::roots::{scaled_cos_roots, ProjRoot};

/// `∏_{d | m} (1 − x^d)^{μ(m/d)}` truncated at degree `deg`, in machine
/// integers; `None` on overflow.
fn squarefree_cyclotomic_i128(m: u64, deg: usize) -> Option<Vec<i128>> {
    let mut c = vec![0i128; deg + 1];
    c[0] = 1;
    let divs = divisors(m);
    let (mul, div): (Vec<u64>, Vec<u64>) = divs
        .iter()
        .copied()
        .filter(|&d| mobius(m / d) != 0)
        .partition(|&d| mobius(m / d) == 1);
    for d in mul {
        let d = d as usize;
        for i in (d..=deg).rev() {
            c[i] = c[i].checked_sub(c[i - d])?;
        }
    }
    for d in div {
        let d = d as usize;
        for i in d..=deg {
            c[i] = c[i].checked_add(c[i - d])?;
        }
    }
    Some(c)
}

fn squarefree_cyclotomic_big(m: u64, deg: usize) -> Vec<Integer> {
    let mut c = vec![Integer::new(); deg + 1];
    c[0] = Integer::from(1);
    for d in divisors(m) {
        let d = d as usize;
        match mobius(m / d as u64) {
            1 => {
                for i in (d..=deg).rev() {
                    let t = c[i - d].clone();
                    c[i] -= t;
                }
            }
            -1 => {
                for i in d..=deg {
                    let t = c[i - d].clone();
                    c[i] += t;
                }
            }
            _ => {}
        }
    }
    c
}

/// The `n`-th cyclotomic polynomial `Φₙ`.
pub fn cyclotomic(n: u64) -> IntPoly {
    assert!(n >= 1, "cyclotomic index must be positive");
    if n == 1 {
        return IntPoly::from_i64(&[-1, 1]);
    }
    let rad = radical(n);
    let deg = totient(rad) as usize;
    let base: Vec<Integer> = match squarefree_cyclotomic_i128(rad, deg) {
        Some(c) => c.into_iter().map(Integer::from).collect(),
        None => squarefree_cyclotomic_big(rad, deg),
    };
    // Φₙ(x) = Φ_rad(x^{n/rad})
    let step = (n / rad) as usize;
    let mut coeffs = vec![Integer::new(); deg * step + 1];
    for (i, c) in base.into_iter().enumerate() {
        coeffs[i * step] = c;
    }
    IntPoly::new(coeffs)
}

/// Degree of `Ψₙ`.
pub fn psi_degree(n: u64) -> usize {
    if n <= 2 {
        1
    } else {
        totient(n) as usize / 2
    }
}

/// Minimal polynomial of `2cos(2π/n)`, obtained from the palindromic
/// cyclotomic polynomial through `Ψₙ(z + 1/z) = z^{−d} Φₙ(z)`.
pub fn psi(n: u64) -> IntPoly {
    assert!(n >= 1, "index must be positive");
    match n {
        1 => return IntPoly::from_i64(&[-2, 1]),
        2 => return IntPoly::from_i64(&[2, 1]),
        _ => {}
    }
    let phi = cyclotomic(n);
    let d = phi.degree().unwrap() / 2;
    // V_0 = 2, V_1 = w, V_{k+1} = w V_k − V_{k−1};  V_k(z + 1/z) = z^k + z^{−k}
    let mut out = IntPoly::new(vec![phi.coeff(d)]);
    let mut prev = IntPoly::from_i64(&[2]);
    let mut cur = IntPoly::x();
    for k in 1..=d {
        let a = phi.coeff(d + k);
        if a != 0 {
            out = &out + &cur.scale(&a);
        }
        let next = &(&IntPoly::x() * &cur) - &prev;
        prev = std::mem::replace(&mut cur, next);
    }
    out
}

pub fn psi_form(n: u64) -> BinaryForm {
    let p = psi(n);
    let d = p.degree().unwrap();
    BinaryForm::homogenize(&p, d).unwrap()
}

/// Roots `[2cos(2πk/n) : 1]` of `Ψₙ`, `1 ≤ k < n/2` with `gcd(k, n) = 1`
/// (and the single root for `n ≤ 2`).
pub fn psi_roots(n: u64, prec: u32) -> Vec<ProjRoot> {
    let angles: Vec<(u64, u64)> = if n <= 2 {
        vec![(2 * (n - 1), n.max(1))]
    } else {
        (1..n.div_ceil(2))
            .filter(|&k| 2 * k < n && gcd(k, n) == 1)
            .map(|k| (2 * k, n))
            .collect()
    };
    scaled_cos_roots(2, &angles, prec)
}

/// Denominator of `(n − 4)/(4n)` in lowest terms.
pub fn c_of_n(n: u64) -> Result<u64> {
    if n == 0 {
        return Err(Error::InvalidArgument("n must be positive".into()));
    }
    if n == 4 {
        return Err(Error::InvalidArgument(
            "c(4) is undefined: sin(2π/4) = 1 is rational".into(),
        ));
    }
    let num = n.abs_diff(4);
    Ok(4 * n / gcd(num, 4 * n))
}

/// `Πₙ(x, y) = Ψ_{c(n)}(x, y)`.
pub fn pi_form(n: u64) -> Result<BinaryForm> {
    Ok(psi_form(c_of_n(n)?))
}

pub fn pi_roots(n: u64, prec: u32) -> Result<Vec<ProjRoot>> {
    Ok(psi_roots(c_of_n(n)?, prec))
}

/// Degree of `Πₙ` from the piecewise totient formula, cross-checked against
/// `deg Ψ_{c(n)}`.
pub fn pi_degree(n: u64) -> Result<usize> {
    if matches!(n, 0 | 1 | 2 | 4) {
        return Err(Error::InvalidArgument(format!("Πₙ is degenerate for n = {n}")));
    }
    let phi = totient(n) as usize;
    let d = match gcd(n, 8) {
        g if g < 4 => phi,
        4 => phi / 4,
        _ => phi / 2,
    };
    let check = psi_degree(c_of_n(n)?);
    if d != check {
        return Err(Error::Inconsistent(format!(
            "piecewise degree {d} differs from deg Ψ_c(n) = {check} at n = {n}"
        )));
    }
    Ok(d)
}

/// `|Ψₘ(0)|` by the closed formula: 0 for `m = 4`, 2 for `m = 2^k` (`k ≥ 3`),
/// `p` for `m = 4p^k` with `p` an odd prime, 1 otherwise.
pub fn constant_coeff_formula(m: u64) -> u64 {
    if m == 4 {
        return 0;
    }
    let f = factorize(m);
    if m >= 8 && f.len() == 1 && f[0].0 == 2 {
        return 2;
    }
    if f.len() == 2 && f[0] == (2, 2) {
        return f[1].0;
    }
    1
}

/// Discriminant of the real cyclotomic field `Q(2cos(2π/k))`.
pub fn field_discriminant(k: u64) -> Result<Integer> {
    if k == 0 {
        return Err(Error::InvalidArgument("k must be positive".into()));
    }
    if matches!(k, 1 | 2 | 3 | 4 | 6) {
        return Ok(Integer::from(1));
    }
    let f = factorize(k);
    let odd: Vec<(u64, u32)> = f.iter().copied().filter(|&(p, _)| p != 2).collect();
    if odd.is_empty() {
        let j = f[0].1;
        let e = (j - 1) * (1 << (j - 2)) - 1;
        return Ok(Integer::from(2).pow(e));
    }
    let two_power = f.iter().find(|&&(p, _)| p == 2).map_or(0, |&(_, e)| e);
    if odd.len() == 1 && two_power <= 1 {
        let (p, j) = odd[0];
        let pj = p.pow(j);
        let e = (j as u64 * pj - (j as u64 + 1) * (pj / p) - 1) / 2;
        return Ok(Integer::from(p).pow(e as u32));
    }
    let half_phi = totient(k) / 2;
    let mut out = Integer::from(1);
    for (p, e) in f {
        // exponent (e − 1/(p − 1)) · φ(k)/2
        let num = (e as u64 * (p - 1) - 1) * half_phi;
        if num % (p - 1) != 0 {
            return Err(Error::Inconsistent(format!("non-integral exponent at k = {k}")));
        }
        out *= Integer::from(p).pow((num / (p - 1)) as u32);
    }
    Ok(out)
}

/// Whether `x^d p(1/x) = p`, i.e. the binary form is symmetric in `x, y`.
/// Anti-palindromic vectors such as `x − 1` do not count.
pub fn is_reciprocal(p: &IntPoly) -> Result<bool> {
    if p.coeff(0) == 0 {
        return Err(Error::InvalidArgument(
            "reciprocity needs a non-zero constant term".into(),
        ));
    }
    Ok(p.is_palindromic())
}

/// Elementary symmetric data of the roots of a monic polynomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TraceStats {
    /// Sum of the roots.
    pub tr: Integer,
    /// Product of the roots.
    pub norm: Integer,
    /// `norm · Σ 1/α`, the elementary symmetric function of degree `d − 1`.
    pub rtr: Integer,
}

pub fn trace_stats_of(p: &IntPoly) -> TraceStats {
    let d = p.degree().expect("non-zero polynomial");
    let sign = |k: usize| if k % 2 == 0 { 1 } else { -1 };
    TraceStats {
        tr: -p.coeff(d - 1),
        norm: p.coeff(0) * sign(d),
        rtr: p.coeff(1) * sign(d - 1),
    }
}

pub fn trace_stats(n: u64) -> Result<TraceStats> {
    if n < 3 {
        return Err(Error::InvalidArgument("trace statistics need n ≥ 3".into()));
    }
    Ok(trace_stats_of(&psi(n)))
}

/// `a + b·ζ` with `ζ = e^{πi/3}`, so `ζ² = ζ − 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EisensteinValue {
    pub a: Integer,
    pub b: Integer,
}

impl EisensteinValue {
    /// `|a + bζ|² = a² + ab + b²`.
    pub fn norm(&self) -> Integer {
        Integer::from(self.a.square_ref()) + Integer::from(&self.a * &self.b) + Integer::from(self.b.square_ref())
    }
}

/// Exact value of `p(ζ)` for `ζ = e^{πi/3}`.
pub fn eval_at_zeta6(p: &IntPoly) -> EisensteinValue {
    // ζ^k for k mod 6 in the basis (1, ζ)
    const POWERS: [(i32, i32); 6] = [(1, 0), (0, 1), (-1, 1), (-1, 0), (0, -1), (1, -1)];
    let mut a = Integer::new();
    let mut b = Integer::new();
    for (k, c) in p.coeffs().iter().enumerate() {
        let (x, y) = POWERS[k % 6];
        a += Integer::from(c * x);
        b += Integer::from(c * y);
    }
    EisensteinValue { a, b }
}

pub fn eval_cyclotomic_at_zeta6(n: u64) -> EisensteinValue {
    eval_at_zeta6(&cyclotomic(n))
}

/// `|Ψₙ(1)| < 2^{deg Ψₙ}`, checked as `|Φₙ(ζ)|² < 4^{φ(n)/2}`.
pub fn psi_one_bound_holds(n: u64) -> Result<bool> {
    if n < 3 {
        return Err(Error::InvalidArgument("the bound is stated for n ≥ 3".into()));
    }
    let v = eval_cyclotomic_at_zeta6(n);
    Ok(v.norm() < Integer::from(4).pow((totient(n) / 2) as u32))
}

#[cfg(test)]
mod tests {
    use super::*;

    /// `(xⁿ − 1) / ∏_{d | n, d < n} Φ_d`, the textbook recursion.
    fn cyclotomic_by_division(n: u64) -> IntPoly {
        let mut p = &IntPoly::monomial(n as usize) - &IntPoly::one();
        for d in divisors(n) {
            if d < n {
                p = p.div_exact(&cyclotomic_by_division(d)).unwrap();
            }
        }
        p
    }

    #[test]
    fn cyclotomic_examples() {
        assert_eq!(cyclotomic(1), IntPoly::from_i64(&[-1, 1]));
        assert_eq!(cyclotomic(12), IntPoly::from_i64(&[1, 0, -1, 0, 1]));
        assert_eq!(cyclotomic(7), IntPoly::from_i64(&[1; 7]));
        for n in 1..=120 {
            assert_eq!(cyclotomic(n), cyclotomic_by_division(n), "n = {n}");
        }
        // first cyclotomic polynomial with a coefficient of size 2
        assert!(cyclotomic(105).coeffs().iter().any(|c| *c == -2));
    }

    #[test]
    fn psi_examples() {
        assert_eq!(psi(3), IntPoly::from_i64(&[1, 1]));
        assert_eq!(psi(24), IntPoly::from_i64(&[1, 0, -4, 0, 1]));
        assert_eq!(psi(7), IntPoly::from_i64(&[-1, -2, 1, 1]));
        assert_eq!(psi(1), IntPoly::from_i64(&[-2, 1]));
        assert_eq!(psi(16), IntPoly::from_i64(&[2, 0, -4, 0, 1]));
        assert_eq!(psi(4), IntPoly::x());
        assert_eq!(psi(6), IntPoly::from_i64(&[-1, 1]));
        assert_eq!(psi_form(7), BinaryForm::from_ints(&[1, 1, -2, -1]));
    }

    #[test]
    fn c_of_n_examples() {
        assert_eq!(c_of_n(5).unwrap(), 20);
        assert_eq!(c_of_n(8).unwrap(), 8);
        assert_eq!(c_of_n(28).unwrap(), 14);
        assert_eq!(c_of_n(16).unwrap(), 16);
        assert_eq!(c_of_n(24).unwrap(), 24);
        assert!(c_of_n(4).is_err());
        assert!(pi_form(4).is_err());
        assert_eq!(pi_form(16).unwrap(), psi_form(16));
        assert_eq!(pi_degree(5).unwrap(), 4);
        assert_eq!(pi_degree(28).unwrap(), 3);
        assert_eq!(pi_degree(16).unwrap(), 4);
    }

    #[test]
    fn closed_formulas() {
        assert_eq!(constant_coeff_formula(4), 0);
        assert_eq!(constant_coeff_formula(8), 2);
        assert_eq!(constant_coeff_formula(28), 7);
        assert_eq!(constant_coeff_formula(15), 1);
        assert_eq!(field_discriminant(7).unwrap(), 49);
        assert_eq!(field_discriminant(9).unwrap(), 81);
        assert_eq!(field_discriminant(16).unwrap(), 2048);
        assert_eq!(field_discriminant(15).unwrap(), 1125);
        assert_eq!(field_discriminant(12).unwrap(), 12);
        assert_eq!(field_discriminant(5).unwrap(), 5);
    }

    #[test]
    fn reciprocity_and_traces() {
        assert!(is_reciprocal(&psi(24)).unwrap());
        assert!(!is_reciprocal(&psi(7)).unwrap());
        assert!(is_reciprocal(&psi(3)).unwrap());
        assert!(is_reciprocal(&psi(4)).is_err());
        assert!(!is_reciprocal(&psi(6)).unwrap());
        let t = trace_stats(24).unwrap();
        assert_eq!((t.tr, t.norm, t.rtr), (0.into(), 1.into(), 0.into()));
        let t = trace_stats(7).unwrap();
        assert_eq!((t.tr, t.norm, t.rtr), ((-1).into(), 1.into(), (-2).into()));
        let t = trace_stats(3).unwrap();
        assert_eq!((t.tr, t.norm, t.rtr), ((-1).into(), (-1).into(), 1.into()));
    }

    #[test]
    fn eisenstein_values() {
        let v = eval_cyclotomic_at_zeta6(16);
        assert_eq!((v.a.clone(), v.b.clone()), (0.into(), 1.into()));
        assert_eq!(v.norm(), 1);
        let v = eval_cyclotomic_at_zeta6(12);
        assert_eq!(v.norm(), 4);
        assert!(psi_one_bound_holds(12).unwrap());
        assert!(psi_one_bound_holds(16).unwrap());
        assert!(!psi_one_bound_holds(3).unwrap());
        // |Ψ₃(1)|² = 4 from both sides
        assert_eq!(eval_cyclotomic_at_zeta6(3).norm(), 4);
    }
}
