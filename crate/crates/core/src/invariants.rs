//! The quantities `m = d(Λ)`, `W_F`, `A_F` and `C_F = W_F·A_F`, and a
//! counter for the integers represented by a definite form.
//!
//! `A_F` is the area of `{|F(x, y)| ≤ 1}`, which in polar coordinates is
//! `∫_0^π |F(cos θ, sin θ)|^{−2/d} dθ`. The integrand is evaluated through
//! the factorisation of `F` over its projective roots, which keeps it
//! accurate near the real roots where it is singular.

use std::collections::BTreeSet;

use num_complex::Complex64;
use rayon::prelude::*;
use rug::ops::Pow;
use rug::{Float, Integer, Rational};
use serde::{Serialize, Serializer};

use crate::aut::{aut_search_with_roots, AutOptions, AutResult};
use crate::error::{Error, Result};
use crate::form::BinaryForm;
use crate::group::{GroupClass, MatrixGroup};
use crate::matrix::rational_string;
use crate::quad::{periodic_trapezoid, tanh_sinh, Estimate};
use crate::roots::{projective_roots, ProjRoot};

/// Default relative tolerance for `A_F`.
pub const DEFAULT_REL_TOL: f64 = 1e-8;

/// Index in `ℤ²` of `Λ = {v ∈ ℤ² : Av ∈ ℤ² for all A ∈ G}`.
pub fn lattice_determinant(g: &MatrixGroup) -> Integer {
    // columns of `basis` span the current lattice
    let mut basis = [[Integer::from(1), Integer::new()], [Integer::new(), Integer::from(1)]];
    for a in &g.elements {
        let l = a.denominator();
        if l == 1 {
            continue;
        }
        let n: Vec<Integer> = a
            .entries()
            .iter()
            .map(|e| Integer::from(e.numer() * Integer::from(&l / e.denom())))
            .collect();
        // M = N·B, then restrict to {x : Mx ≡ 0 mod l}
        let m = mat_mul(&[[n[0].clone(), n[1].clone()], [n[2].clone(), n[3].clone()]], &basis);
        let k = congruence_kernel(&m, &l);
        basis = mat_mul(&basis, &k);
    }
    let det = Integer::from(&basis[0][0] * &basis[1][1]) - Integer::from(&basis[0][1] * &basis[1][0]);
    det.abs()
}

type Mat2Z = [[Integer; 2]; 2];

fn mat_mul(a: &Mat2Z, b: &Mat2Z) -> Mat2Z {
    std::array::from_fn(|i| {
        std::array::from_fn(|j| {
            Integer::from(&a[i][0] * &b[0][j]) + Integer::from(&a[i][1] * &b[1][j])
        })
    })
}

/// Basis (as columns) of `{x ∈ ℤ² : Mx ≡ 0 (mod l)}`: column-reduce
/// `[M | l·I]` to `[H | 0]` and read the kernel off the transformation.
fn congruence_kernel(m: &Mat2Z, l: &Integer) -> Mat2Z {
    let zero = Integer::new;
    let mut a: Vec<Vec<Integer>> = vec![
        vec![m[0][0].clone(), m[0][1].clone(), l.clone(), zero()],
        vec![m[1][0].clone(), m[1][1].clone(), zero(), l.clone()],
    ];
    let mut u: Vec<Vec<Integer>> =
        (0..4).map(|i| (0..4).map(|j| Integer::from(u8::from(i == j))).collect()).collect();
    for (row, pivot) in [(0usize, 0usize), (1, 1)] {
        for j in pivot + 1..4 {
            // Euclid on columns `pivot` and `j` of this row
            while a[row][j] != 0 {
                let (q, _) = <(Integer, Integer)>::from(a[row][pivot].div_rem_floor_ref(&a[row][j]));
                for r in 0..2 {
                    let t = Integer::from(&q * &a[r][j]);
                    a[r][pivot] -= t;
                }
                for r in 0..4 {
                    let t = Integer::from(&q * &u[r][j]);
                    u[r][pivot] -= t;
                }
                for r in 0..2 {
                    let (x, y) = (a[r][pivot].clone(), a[r][j].clone());
                    a[r][pivot] = y;
                    a[r][j] = x;
                }
                for r in 0..4 {
                    let (x, y) = (u[r][pivot].clone(), u[r][j].clone());
                    u[r][pivot] = y;
                    u[r][j] = x;
                }
            }
        }
    }
    [[u[0][2].clone(), u[0][3].clone()], [u[1][2].clone(), u[1][3].clone()]]
}

/// `W_F = 1/|Aut F|`, valid when every automorphism has integer entries.
pub fn w_f(g: &MatrixGroup) -> Result<Rational> {
    if !g.is_integral() {
        return Err(Error::Unsupported(
            "W_F for automorphism groups with non-integral entries".into(),
        ));
    }
    Ok(Rational::from((1, g.order as u64)))
}

/// `A_F`, or divergence when some real root has multiplicity `m ≥ d/2`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Area {
    Finite(Estimate),
    Divergent,
}

impl Area {
    pub fn value(&self) -> Option<f64> {
        match self {
            Area::Finite(e) => Some(e.value),
            Area::Divergent => None,
        }
    }
}

/// `A_F` from freshly computed roots.
pub fn area_fundamental(form: &BinaryForm, rel_tol: f64) -> Result<Area> {
    if form.degree() < 1 || form.is_zero() {
        return Err(Error::DegreeTooSmall { got: form.degree(), min: 1 });
    }
    let roots = projective_roots(form, 128)?;
    area_with_roots(form, &roots, rel_tol)
}

/// A real root as an angle with its multiplicity and the length of its
/// direction vector.
struct RealLine {
    angle: f64,
    mult: usize,
    log_len: f64,
}

/// `log|F(cos θ, sin θ)|` assembled from a constant and per-root factors.
struct LogIntegrand {
    log_c: f64,
    lines: Vec<RealLine>,
    complex: Vec<(Complex64, Complex64)>,
}

impl LogIntegrand {
    /// Sum of the non-singular factors, skipping the real lines listed in
    /// `skip`.
    fn regular(&self, theta: f64, skip: &[usize]) -> f64 {
        let (s, c) = theta.sin_cos();
        let mut acc = self.log_c;
        for (a, b) in &self.complex {
            acc += (b * c - a * s).norm().ln();
        }
        for (j, line) in self.lines.iter().enumerate() {
            acc += line.mult as f64 * line.log_len;
            if !skip.contains(&j) {
                acc += line.mult as f64 * (theta - line.angle).sin().abs().ln();
            }
        }
        acc
    }
}

fn build_integrand(form: &BinaryForm, roots: &[ProjRoot]) -> Result<LogIntegrand> {
    let mut lines: Vec<RealLine> = Vec::new();
    let mut complex = Vec::new();
    for r in roots {
        match r.angle() {
            Some(angle) => {
                let (a, b) = r.to_c64();
                let log_len = a.re.hypot(b.re).ln();
                // repeated roots arrive as identical copies
                match lines.iter_mut().find(|l| (l.angle - angle).abs() < 1e-12) {
                    Some(l) => l.mult += 1,
                    None => lines.push(RealLine { angle, mult: 1, log_len }),
                }
            }
            None => complex.push(r.to_c64()),
        }
    }
    lines.sort_by(|a, b| a.angle.total_cmp(&b.angle));
    // F = C·∏(b_j x − a_j y); fix log|C| at the sample direction farthest
    // from every real line
    let probe = (0..64)
        .map(|k| std::f64::consts::PI * (k as f64 + 0.5) / 64.0)
        .max_by(|x, y| {
            let gap = |t: f64| {
                lines
                    .iter()
                    .map(|l| (t - l.angle).sin().abs())
                    .fold(f64::INFINITY, f64::min)
            };
            gap(*x).total_cmp(&gap(*y))
        })
        .unwrap();
    let partial = LogIntegrand { log_c: 0.0, lines, complex };
    let exact = log_abs_form_at(form, probe);
    let log_c = exact - partial.regular(probe, &[]);
    Ok(LogIntegrand { log_c, ..partial })
}

fn log_abs_form_at(form: &BinaryForm, theta: f64) -> f64 {
    // room for the cancellation between large coefficients
    let prec = 128 + 4 * form.degree() as u32;
    let (s, c) = (Float::with_val(prec, theta).sin(), Float::with_val(prec, theta).cos());
    let d = form.degree();
    let mut acc = Float::new(prec);
    for (i, coef) in form.coeffs().iter().enumerate() {
        if *coef == 0 {
            continue;
        }
        let term = Float::with_val(prec, c.clone().pow((d - i) as u32))
            * Float::with_val(prec, s.clone().pow(i as u32))
            * Float::with_val(prec, coef);
        acc += term;
    }
    acc.abs().ln().to_f64()
}

/// `A_F` from a supplied root multiset.
pub fn area_with_roots(form: &BinaryForm, roots: &[ProjRoot], rel_tol: f64) -> Result<Area> {
    let d = form.degree();
    if roots.len() != d {
        return Err(Error::InvalidArgument(format!("expected {d} roots, got {}", roots.len())));
    }
    let g = build_integrand(form, roots)?;
    if g.lines.iter().any(|l| 2 * l.mult >= d) {
        return Ok(Area::Divergent);
    }
    let expo = -2.0 / d as f64;
    let pi = std::f64::consts::PI;
    if g.lines.is_empty() {
        let e = periodic_trapezoid(pi, rel_tol, |t| (expo * g.regular(t, &[])).exp())?;
        return Ok(Area::Finite(e));
    }
    let k = g.lines.len();
    let pieces: Vec<Result<Estimate>> = (0..k)
        .into_par_iter()
        .map(|i| {
            let left = &g.lines[i];
            let (j, right_angle) = if i + 1 < k { (i + 1, g.lines[i + 1].angle) } else { (0, g.lines[0].angle + pi) };
            let right = &g.lines[j];
            let length = right_angle - left.angle;
            let skip: Vec<usize> = if i == j { vec![i] } else { vec![i, j] };
            tanh_sinh(length, rel_tol, |dl, dr| {
                let theta = left.angle + dl;
                let mut log = g.regular(theta, &skip);
                if i == j {
                    log += left.mult as f64 * dl.min(dr).sin().ln();
                } else {
                    log += left.mult as f64 * dl.sin().ln() + right.mult as f64 * dr.sin().ln();
                }
                (expo * log).exp()
            })
        })
        .collect();
    let mut value = 0.0;
    let mut error = 0.0;
    for p in pieces {
        let p = p?;
        value += p.value;
        error += p.error;
    }
    Ok(Area::Finite(Estimate { value, error }))
}

fn serialize_opt_rational<S: Serializer>(
    q: &Option<Rational>,
    ser: S,
) -> std::result::Result<S::Ok, S::Error> {
    match q {
        Some(q) => ser.serialize_str(&rational_string(q)),
        None => ser.serialize_none(),
    }
}

fn serialize_opt_integer<S: Serializer>(
    q: &Option<Integer>,
    ser: S,
) -> std::result::Result<S::Ok, S::Error> {
    match q {
        Some(q) => ser.collect_str(q),
        None => ser.serialize_none(),
    }
}

/// The invariants of one form. Missing values carry a note saying why.
#[derive(Clone, Debug, Serialize)]
pub struct InvariantReport {
    pub class: Option<GroupClass>,
    pub order: Option<usize>,
    #[serde(serialize_with = "serialize_opt_integer")]
    pub m: Option<Integer>,
    #[serde(rename = "W", serialize_with = "serialize_opt_rational")]
    pub w: Option<Rational>,
    #[serde(rename = "A")]
    pub a: Option<f64>,
    #[serde(rename = "A_err")]
    pub a_err: Option<f64>,
    #[serde(rename = "C")]
    pub c: Option<f64>,
    #[serde(rename = "C_err")]
    pub c_err: Option<f64>,
    pub divergent: bool,
    pub notes: Vec<String>,
}

/// Assembles the report from an automorphism result (if available) and an
/// area.
pub fn report_from_parts(aut: Option<&AutResult>, area: Area) -> InvariantReport {
    let mut notes = Vec::new();
    let (class, order, m, w) = match aut {
        Some(r) => {
            let w = match w_f(&r.aut) {
                Ok(w) => Some(w),
                Err(e) => {
                    notes.push(format!("W unavailable: {e}"));
                    None
                }
            };
            (Some(r.class), Some(r.aut.order), Some(lattice_determinant(&r.aut)), w)
        }
        None => {
            notes.push("W out of theorem scope: degree below 3".into());
            (None, None, None, None)
        }
    };
    let (a, a_err, divergent) = match area {
        Area::Finite(e) => (Some(e.value), Some(e.error), false),
        Area::Divergent => (None, None, true),
    };
    let (c, c_err) = match (&w, a, a_err) {
        (Some(w), Some(a), Some(e)) => (Some(w.to_f64() * a), Some(w.to_f64() * e)),
        _ => (None, None),
    };
    InvariantReport { class, order, m, w, a, a_err, c, c_err, divergent, notes }
}

/// `c_f` with freshly computed roots and automorphisms.
pub fn c_f(form: &BinaryForm, opts: &AutOptions, rel_tol: f64) -> Result<InvariantReport> {
    let roots = projective_roots(form, opts.precision)?;
    c_f_with_roots(form, &roots, opts, rel_tol)
}

/// `c_f` reusing a root multiset for both the automorphism search and the
/// area.
pub fn c_f_with_roots(
    form: &BinaryForm,
    roots: &[ProjRoot],
    opts: &AutOptions,
    rel_tol: f64,
) -> Result<InvariantReport> {
    let aut = if form.degree() >= 3 {
        Some(aut_search_with_roots(form, roots, opts)?)
    } else {
        None
    };
    let area = area_with_roots(form, roots, rel_tol)?;
    Ok(report_from_parts(aut.as_ref(), area))
}

/// Number of integers `h` with `|h| ≤ z` of the form `F(x, y)`, `x, y ∈ ℤ`,
/// for a definite integral form.
pub fn count_represented(form: &BinaryForm, z: u64) -> Result<usize> {
    if !form.is_integral() {
        return Err(Error::InvalidArgument("count_represented needs integer coefficients".into()));
    }
    let d = form.degree();
    let roots = projective_roots(form, 128)?;
    if roots.iter().any(|r| r.real) {
        return Err(Error::InvalidArgument(
            "the form has a real root, so {|F| ≤ Z} is unbounded".into(),
        ));
    }
    // |F(x, y)| ≥ λ·r^d with λ the minimum of |F| on the unit circle
    let g = build_integrand(form, &roots)?;
    let lambda = (0..4096)
        .map(|k| g.regular(std::f64::consts::PI * k as f64 / 4096.0, &[]).exp())
        .fold(f64::INFINITY, f64::min);
    let radius = ((z as f64) / (0.5 * lambda)).powf(1.0 / d as f64).ceil() as i64 + 1;
    let (coeffs, _) = form.integral_parts();
    let zb = Integer::from(z);
    let found: BTreeSet<Integer> = (-radius..=radius)
        .into_par_iter()
        .map(|x| {
            let mut local = BTreeSet::new();
            let xi = Integer::from(x);
            for y in -radius..=radius {
                let yi = Integer::from(y);
                let mut acc = Integer::new();
                let mut ypow = Integer::from(1);
                let mut terms = Vec::with_capacity(d + 1);
                for c in &coeffs {
                    terms.push(Integer::from(c * &ypow));
                    ypow *= &yi;
                }
                for t in &terms {
                    acc *= &xi;
                    acc += t;
                }
                if acc.clone().abs() <= zb {
                    local.insert(acc);
                }
            }
            local
        })
        .reduce(BTreeSet::new, |mut a, b| {
            a.extend(b);
            a
        });
    Ok(found.len())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{group_closure, DEFAULT_CAP};
    use crate::matrix::Mat2Q;
    use crate::trig::psi_form;

    /// Index of `Λ` by counting residues mod the common denominator.
    fn residue_oracle(g: &MatrixGroup) -> u64 {
        let l = g.elements.iter().fold(Integer::from(1), |l, a| l.lcm(&a.denominator()));
        let l = l.to_u64().unwrap();
        let mut count = 0;
        for x in 0..l {
            for y in 0..l {
                let ok = g.elements.iter().all(|a| {
                    let [s, u, t, v] = a.entries();
                    let p = Rational::from(s * x) + Rational::from(u * y);
                    let q = Rational::from(t * x) + Rational::from(v * y);
                    p.is_integer() && q.is_integer()
                });
                count += u64::from(ok);
            }
        }
        l * l / count
    }

    #[test]
    fn lattice_examples() {
        let half = Rational::from((1, 2));
        let a = Mat2Q::new(half.clone(), half.clone(), Rational::from((-3, 2)), half);
        let g = group_closure(&[a], DEFAULT_CAP).unwrap();
        assert_eq!(lattice_determinant(&g), 2);
        assert_eq!(residue_oracle(&g), 2);
        let d4 = group_closure(&GroupClass::D4.representative(), DEFAULT_CAP).unwrap();
        assert_eq!(lattice_determinant(&d4), 1);
        assert_eq!(lattice_determinant(&MatrixGroup::trivial()), 1);
        let s = Mat2Q::new(Rational::from((1, 3)), 1.into(), 2.into(), Rational::from((5, 2)));
        for class in GroupClass::ALL {
            let g = group_closure(&class.representative(), DEFAULT_CAP).unwrap();
            let c = g.conjugate_by(&s).unwrap();
            assert_eq!(lattice_determinant(&c), residue_oracle(&c), "{class}");
        }
    }

    #[test]
    fn weights() {
        let d4 = group_closure(&GroupClass::D4.representative(), DEFAULT_CAP).unwrap();
        assert_eq!(w_f(&d4).unwrap(), Rational::from((1, 8)));
        assert_eq!(w_f(&MatrixGroup::trivial()).unwrap(), 1);
        let s = Mat2Q::new(Rational::from((1, 2)), 0.into(), 0.into(), 1.into());
        assert!(matches!(w_f(&d4.conjugate_by(&s).unwrap()), Err(Error::Unsupported(_))));
    }

    #[test]
    fn areas() {
        let circle2 = BinaryForm::from_ints(&[1, 0, 2, 0, 1]);
        let a = area_fundamental(&circle2, 1e-10).unwrap().value().unwrap();
        assert!((a - std::f64::consts::PI).abs() < 1e-9);
        let a = area_fundamental(&psi_form(7), 1e-10).unwrap().value().unwrap();
        assert!((a - 8.311_716).abs() < 1e-5, "{a}");
        assert_eq!(area_fundamental(&psi_form(5), 1e-8).unwrap(), Area::Divergent);
        // x(x − y)^2 y: a double real root with 2m = d
        let f = BinaryForm::from_ints(&[0, 1, -2, 1, 0]);
        assert_eq!(area_fundamental(&f, 1e-8).unwrap(), Area::Divergent);
    }

    #[test]
    fn definite_counts() {
        let f = BinaryForm::from_ints(&[1, 0, 0, 0, 1]);
        assert_eq!(count_represented(&f, 0).unwrap(), 1);
        // 0, 1, 2, 16, 17, 32
        assert_eq!(count_represented(&f, 32).unwrap(), 6);
        assert!(count_represented(&psi_form(7), 100).is_err());
    }
}
