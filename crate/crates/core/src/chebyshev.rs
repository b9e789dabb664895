//! Chebyshev polynomials, their homogenisations, the monic rescalings
//! `Ũₙ(x, y) = U_{n−1}(x/2, y)` and `Ṽₙ(x, y) = 2Tₙ(x/2, y)`, and their
//! factorisations into the forms `Ψ_d`.

use crate::arith::divisors;
use crate::error::{Error, Result};
use crate::form::BinaryForm;
use crate::poly::IntPoly;
use crate::roots::{scaled_cos_roots, ProjRoot};
use crate::trig::psi_form;

/// Terms `P_0..=P_n` of `P_{k+1} = a·x·P_k − P_{k−1}`.
fn recurrence(p0: IntPoly, p1: IntPoly, a: i64, n: usize) -> Vec<IntPoly> {
    let ax = IntPoly::from_i64(&[0, a]);
    let mut out = vec![p0, p1];
    while out.len() <= n {
        let k = out.len();
        let next = &(&ax * &out[k - 1]) - &out[k - 2];
        out.push(next);
    }
    out.truncate(n + 1);
    out
}

pub fn chebyshev_t(n: usize) -> IntPoly {
    recurrence(IntPoly::one(), IntPoly::x(), 2, n).pop().unwrap()
}

pub fn chebyshev_u(n: usize) -> IntPoly {
    recurrence(IntPoly::one(), IntPoly::from_i64(&[0, 2]), 2, n).pop().unwrap()
}

/// `Tₙ(x, y)`, of degree `n`.
pub fn t_form(n: usize) -> BinaryForm {
    BinaryForm::homogenize(&chebyshev_t(n), n).unwrap()
}

/// `Uₙ(x, y)`, of degree `n`.
pub fn u_form(n: usize) -> BinaryForm {
    BinaryForm::homogenize(&chebyshev_u(n), n).unwrap()
}

fn require_positive(n: usize) -> Result<()> {
    if n == 0 {
        Err(Error::InvalidArgument("index must be at least 1".into()))
    } else {
        Ok(())
    }
}

/// `Ũₙ`, monic of degree `n − 1`: `Ũ₁ = 1`, `Ũ₂ = x`, `Ũ_{k+1} = xŨ_k − Ũ_{k−1}`.
pub fn u_tilde(n: usize) -> Result<BinaryForm> {
    require_positive(n)?;
    let p = recurrence(IntPoly::one(), IntPoly::x(), 1, n - 1).pop().unwrap();
    BinaryForm::homogenize(&p, n - 1)
}

/// `Ṽₙ`, monic of degree `n`: `Ṽ₀ = 2`, `Ṽ₁ = x`, `Ṽ_{k+1} = xṼ_k − Ṽ_{k−1}`.
pub fn v_tilde(n: usize) -> Result<BinaryForm> {
    require_positive(n)?;
    let p = recurrence(IntPoly::from_i64(&[2]), IntPoly::x(), 1, n).pop().unwrap();
    BinaryForm::homogenize(&p, n)
}

/// Roots `cos((2k+1)π/(2n))` of `Tₙ`.
pub fn t_roots(n: usize, prec: u32) -> Vec<ProjRoot> {
    let angles: Vec<(u64, u64)> = (0..n as u64).map(|k| (2 * k + 1, 2 * n as u64)).collect();
    scaled_cos_roots(1, &angles, prec)
}

/// Roots `cos(kπ/(n+1))` of `Uₙ`.
pub fn u_roots(n: usize, prec: u32) -> Vec<ProjRoot> {
    let angles: Vec<(u64, u64)> = (1..=n as u64).map(|k| (k, n as u64 + 1)).collect();
    scaled_cos_roots(1, &angles, prec)
}

/// Roots `2cos(kπ/n)` of `Ũₙ`.
pub fn u_tilde_roots(n: usize, prec: u32) -> Vec<ProjRoot> {
    let angles: Vec<(u64, u64)> = (1..n as u64).map(|k| (k, n as u64)).collect();
    scaled_cos_roots(2, &angles, prec)
}

/// Roots `2cos((2k+1)π/(2n))` of `Ṽₙ`.
pub fn v_tilde_roots(n: usize, prec: u32) -> Vec<ProjRoot> {
    let angles: Vec<(u64, u64)> = (0..n as u64).map(|k| (2 * k + 1, 2 * n as u64)).collect();
    scaled_cos_roots(2, &angles, prec)
}

/// `x^e · ∏ Ψ_d(x, y)`, checked against the form it factors.
#[derive(Clone, Debug)]
pub struct TildeFactorization {
    pub x_power: usize,
    pub factors: Vec<(u64, BinaryForm)>,
}

impl TildeFactorization {
    pub fn product(&self) -> BinaryForm {
        self.factors
            .iter()
            .fold(BinaryForm::x_power(self.x_power), |acc, (_, f)| &acc * f)
    }

    fn checked(self, target: &BinaryForm, label: &str) -> Result<Self> {
        if self.product() != *target {
            return Err(Error::Inconsistent(format!(
                "the Ψ-product does not reproduce {label}"
            )));
        }
        Ok(self)
    }
}

/// `Ũₙ = x^{[n even]} ∏_{d | 2n, d ∉ {1,2,4}} Ψ_d`.
pub fn factor_u_tilde(n: usize) -> Result<TildeFactorization> {
    let target = u_tilde(n)?;
    let factors = divisors(2 * n as u64)
        .into_iter()
        .filter(|d| !matches!(d, 1 | 2 | 4))
        .map(|d| (d, psi_form(d)))
        .collect();
    TildeFactorization { x_power: usize::from(n % 2 == 0), factors }
        .checked(&target, &format!("Ũ_{n}"))
}

/// `Ṽₙ = x^{[n odd]} ∏_{d | n, d < n, d odd} Ψ_{4n/d}`.
pub fn factor_v_tilde(n: usize) -> Result<TildeFactorization> {
    let target = v_tilde(n)?;
    let n64 = n as u64;
    let factors = divisors(n64)
        .into_iter()
        .filter(|&d| d < n64 && d % 2 == 1)
        .map(|d| (4 * n64 / d, psi_form(4 * n64 / d)))
        .collect();
    TildeFactorization { x_power: usize::from(n % 2 == 1), factors }
        .checked(&target, &format!("Ṽ_{n}"))
}

/// Whether only even powers of `x` occur (`F = G(x², y²)` up to the total
/// degree parity).
pub fn is_even_in_x(form: &BinaryForm) -> bool {
    let d = form.degree();
    form.coeffs()
        .iter()
        .enumerate()
        .all(|(i, c)| *c == 0 || (d - i) % 2 == 0)
}

/// `F / x` when `x` divides `F`.
pub fn divide_by_x(form: &BinaryForm) -> Option<BinaryForm> {
    let c = form.coeffs();
    if c.last().is_some_and(|l| *l != 0) || c.len() < 2 {
        return None;
    }
    BinaryForm::new(c[..c.len() - 1].to_vec()).ok()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::Mat2Q;
    use rug::{Integer, Rational};

    fn two_power(k: u32) -> Integer {
        Integer::from(1) << k
    }

    #[test]
    fn chebyshev_examples() {
        assert_eq!(chebyshev_t(3), IntPoly::from_i64(&[0, -3, 0, 4]));
        assert_eq!(chebyshev_u(2), IntPoly::from_i64(&[-1, 0, 4]));
        assert_eq!(chebyshev_t(0), IntPoly::one());
        assert_eq!(t_form(3), BinaryForm::from_ints(&[4, 0, -3, 0]));
        assert_eq!(u_form(1), BinaryForm::from_ints(&[2, 0]));
        assert_eq!(t_form(1), BinaryForm::from_ints(&[1, 0]));
        for n in 1..20 {
            assert_eq!(*chebyshev_t(n).leading().unwrap(), two_power(n as u32 - 1));
            assert_eq!(*chebyshev_u(n).leading().unwrap(), two_power(n as u32));
        }
    }

    #[test]
    fn tilde_examples() {
        assert_eq!(v_tilde(3).unwrap(), BinaryForm::from_ints(&[1, 0, -3, 0]));
        assert_eq!(u_tilde(4).unwrap(), BinaryForm::from_ints(&[1, 0, -2, 0]));
        assert_eq!(v_tilde(4).unwrap(), psi_form(16));
        assert_eq!(u_tilde(2).unwrap(), BinaryForm::from_ints(&[1, 0]));
        assert_eq!(u_tilde(1).unwrap(), BinaryForm::from_ints(&[1]));
        assert!(u_tilde(0).is_err());
        let half = Mat2Q::new(Rational::from((1, 2)), 0.into(), 0.into(), 1.into());
        for n in 1..15 {
            let v = t_form(n).substitute(&half).scale(&Rational::from(2));
            assert_eq!(v, v_tilde(n).unwrap());
            let u = u_form(n - 1).substitute(&half);
            assert_eq!(u, u_tilde(n).unwrap());
        }
    }

    #[test]
    fn factorization_examples() {
        let f = factor_u_tilde(15).unwrap();
        assert_eq!(f.x_power, 0);
        let degrees: Vec<u64> = f.factors.iter().map(|(d, _)| *d).collect();
        assert_eq!(degrees, vec![3, 5, 6, 10, 15, 30]);
        let v = factor_v_tilde(4).unwrap();
        assert_eq!(v.x_power, 0);
        assert_eq!(v.factors.len(), 1);
        assert_eq!(v.factors[0].0, 16);
        let u2 = factor_u_tilde(2).unwrap();
        assert_eq!(u2.x_power, 1);
        assert!(u2.factors.is_empty());
    }
}
