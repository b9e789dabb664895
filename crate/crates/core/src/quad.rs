//! Numerical quadrature: tanh-sinh for integrands with algebraic endpoint
//! singularities and the trapezoid rule for smooth periodic integrands.

use crate::error::{Error, Result};

/// An integral estimate with the difference between the last two
/// refinement levels as its error.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Estimate {
    pub value: f64,
    pub error: f64,
}

const MAX_LEVEL: u32 = 12;
const T_MAX: f64 = 6.5;

/// Floor on the reported error, relative to the value.
const ERROR_FLOOR: f64 = 1e-15;

/// `∫_a^b f` with `f` given as a function of the distances `(θ − a, b − θ)`
/// to the two endpoints, so that singular factors can be evaluated without
/// cancellation.
pub fn tanh_sinh<F>(length: f64, rel_tol: f64, f: F) -> Result<Estimate>
where
    F: Fn(f64, f64) -> f64,
{
    let half_pi = std::f64::consts::FRAC_PI_2;
    let node = |t: f64| -> f64 {
        let u = half_pi * t.sinh();
        let dl = length / (1.0 + (-2.0 * u).exp());
        let dr = length / (1.0 + (2.0 * u).exp());
        if dl <= 0.0 || dr <= 0.0 || !dl.is_finite() || !dr.is_finite() {
            return 0.0;
        }
        let cosh_u = u.cosh();
        let w = length / 2.0 * half_pi * t.cosh() / (cosh_u * cosh_u);
        if w == 0.0 || !w.is_finite() {
            return 0.0;
        }
        w * f(dl, dr)
    };
    let mut h = 1.0;
    let mut sum = node(0.0);
    let mut k = 1;
    while k as f64 * h <= T_MAX {
        sum += node(k as f64 * h) + node(-(k as f64) * h);
        k += 1;
    }
    let mut prev = sum * h;
    for _ in 0..MAX_LEVEL {
        h /= 2.0;
        // new nodes are the odd multiples of the halved step
        let mut k = 1;
        while k as f64 * h <= T_MAX {
            sum += node(k as f64 * h) + node(-(k as f64) * h);
            k += 2;
        }
        let value = sum * h;
        let diff = (value - prev).abs();
        if diff <= rel_tol * value.abs() {
            return Ok(Estimate { value, error: diff.max(ERROR_FLOOR * value.abs()) });
        }
        prev = value;
    }
    Err(Error::Quadrature { estimate: prev, error: f64::NAN })
}

/// `∫_0^P f` for smooth `P`-periodic `f`, doubling the node count until two
/// successive trapezoid sums agree.
pub fn periodic_trapezoid<F>(period: f64, rel_tol: f64, f: F) -> Result<Estimate>
where
    F: Fn(f64) -> f64,
{
    let mut n = 8usize;
    let mut sum: f64 = (0..n).map(|i| f(period * i as f64 / n as f64)).sum();
    let mut prev = sum * period / n as f64;
    while n < 1 << 22 {
        sum += (0..n).map(|i| f(period * (2 * i + 1) as f64 / (2 * n) as f64)).sum::<f64>();
        n *= 2;
        let value = sum * period / n as f64;
        let diff = (value - prev).abs();
        if diff <= rel_tol * value.abs() {
            return Ok(Estimate { value, error: diff.max(ERROR_FLOOR * value.abs()) });
        }
        prev = value;
    }
    Err(Error::Quadrature { estimate: prev, error: f64::NAN })
}
