//! Rational automorphism groups `Aut F = {M : F_M = F}` and
//! `Aut|F| = {M : F_M = ±F}`.
//!
//! The search works on projective roots. An automorphism permutes the roots
//! of `F`, and a Möbius transformation is fixed by the images of three
//! points, so it suffices to try every ordered triple of images for one
//! well-separated source triple. Candidates surviving a double-precision
//! screen are recomputed at full precision, rounded to rationals and then
//! verified exactly; the exact check makes every reported element sound.

use std::collections::BTreeSet;

use num_complex::Complex64;
use rayon::prelude::*;
use rug::{Float, Integer, Rational};
use serde::Serialize;

use crate::arith::{all_rational_roots, rational_sqrt};
use crate::error::{Error, Result};
use crate::form::BinaryForm;
use crate::group::{group_closure, GroupClass, MatrixGroup, DEFAULT_CAP};
use crate::matrix::Mat2Q;
use crate::mpc::MpComplex;
use crate::recon::reconstruct;
use crate::roots::{is_squarefree_form, projective_roots, ProjRoot};

#[derive(Clone, Debug)]
pub struct AutOptions {
    /// Working precision of the root computation, in bits.
    pub precision: u32,
    /// Largest denominator accepted by rational reconstruction.
    pub denom_bound: u64,
}

impl Default for AutOptions {
    fn default() -> Self {
        AutOptions { precision: 192, denom_bound: 1_000_000 }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct AutResult {
    pub aut: MatrixGroup,
    pub aut_abs: MatrixGroup,
    pub class: GroupClass,
    pub abs_class: GroupClass,
}

impl AutResult {
    pub fn from_groups(aut: MatrixGroup, aut_abs: MatrixGroup) -> Result<Self> {
        if !aut.is_subgroup_of(&aut_abs) || !matches!(aut_abs.order / aut.order.max(1), 1 | 2) {
            return Err(Error::Inconsistent(
                "Aut F must be a subgroup of index at most 2 in Aut|F|".into(),
            ));
        }
        Ok(AutResult { class: aut.classify()?, abs_class: aut_abs.classify()?, aut, aut_abs })
    }

    /// `|Aut|F|| / |Aut F|`.
    pub fn index(&self) -> usize {
        self.aut_abs.order / self.aut.order
    }
}

/// `F_M = F`, or `F_M = ±F` when `allow_sign` is set.
pub fn is_automorphism(form: &BinaryForm, m: &Mat2Q, allow_sign: bool) -> Result<bool> {
    if !m.is_invertible() {
        return Err(Error::SingularMatrix);
    }
    let g = form.substitute(m);
    Ok(g == *form || (allow_sign && g == form.neg()))
}

/// Splits the rational multiples `N/μ` of an integer matrix `N` into exact
/// automorphisms and sign-automorphisms. `F_{N/μ} = μ^{−d} F_N`, so with
/// `F_N = cF` we need `μ^d = c` or `μ^d = −c`.
fn scalings(form: &BinaryForm, n: &Mat2Q) -> (Vec<Mat2Q>, Vec<Mat2Q>) {
    let d = form.degree() as u32;
    let g = form.substitute(n);
    let Some(c) = form.proportionality(&g) else {
        return (Vec::new(), Vec::new());
    };
    let scaled = |mus: Vec<Rational>| -> Vec<Mat2Q> {
        mus.into_iter()
            .filter(|mu| *mu != 0)
            .map(|mu| n.scale(&Rational::from(mu.recip_ref())))
            .collect()
    };
    let plus = scaled(all_rational_roots(&c, d));
    let minus = scaled(all_rational_roots(&Rational::from(-&c), d));
    (plus, minus)
}

fn assemble(plus: BTreeSet<Mat2Q>, minus: BTreeSet<Mat2Q>) -> Result<AutResult> {
    let mut plus = plus;
    plus.insert(Mat2Q::identity());
    let abs: BTreeSet<Mat2Q> = plus.iter().chain(minus.iter()).cloned().collect();
    let aut = MatrixGroup::from_closed_set(&closure_set(&plus)?)?;
    let aut_abs = MatrixGroup::from_closed_set(&closure_set(&abs)?)?;
    AutResult::from_groups(aut, aut_abs)
}

fn closure_set(s: &BTreeSet<Mat2Q>) -> Result<BTreeSet<Mat2Q>> {
    let gens: Vec<Mat2Q> = s.iter().cloned().collect();
    Ok(group_closure(&gens, DEFAULT_CAP)?.elements.into_iter().collect())
}

fn primitive_integer_matrix(entries: [Rational; 4]) -> Option<Mat2Q> {
    let l = entries.iter().fold(Integer::from(1), |l, e| l.lcm(e.denom()));
    let ints: Vec<Integer> = entries
        .iter()
        .map(|e| Integer::from(e.numer() * Integer::from(&l / e.denom())))
        .collect();
    let g = ints.iter().fold(Integer::new(), |g, e| g.gcd(e));
    if g == 0 {
        return None;
    }
    let q: Vec<Rational> = ints.into_iter().map(|e| Rational::from(e / &g)).collect();
    let m = Mat2Q::new(q[0].clone(), q[1].clone(), q[2].clone(), q[3].clone());
    m.is_invertible().then_some(m)
}

fn det3<T>(m: [[T; 3]; 3]) -> T
where
    T: Clone + std::ops::Mul<Output = T> + std::ops::Sub<Output = T> + std::ops::Add<Output = T>,
{
    let [a, b, c] = m;
    a[0].clone() * (b[1].clone() * c[2].clone() - b[2].clone() * c[1].clone())
        - a[1].clone() * (b[0].clone() * c[2].clone() - b[2].clone() * c[0].clone())
        + a[2].clone() * (b[0].clone() * c[1].clone() - b[1].clone() * c[0].clone())
}

/// Null vector `(s, u, t, v)` of the rows `(d·a, d·b, −c·a, −c·b)` asking
/// `M·(a, b)ᵀ ∝ (c, d)ᵀ`, by signed 3×3 minors.
fn mobius_c64(src: &[(Complex64, Complex64); 3], dst: &[(Complex64, Complex64); 3]) -> [Complex64; 4] {
    let rows: Vec<[Complex64; 4]> = (0..3)
        .map(|i| {
            let (a, b) = src[i];
            let (c, d) = dst[i];
            [d * a, d * b, -c * a, -c * b]
        })
        .collect();
    let minor = |skip: usize| {
        let m: [[Complex64; 3]; 3] = std::array::from_fn(|r| {
            let cols: Vec<Complex64> = (0..4).filter(|&k| k != skip).map(|k| rows[r][k]).collect();
            [cols[0], cols[1], cols[2]]
        });
        det3(m)
    };
    [minor(0), -minor(1), minor(2), -minor(3)]
}

#[derive(Clone)]
struct C(MpComplex);

impl std::ops::Mul for C {
    type Output = C;
    fn mul(self, o: C) -> C {
        C(self.0.mul(&o.0))
    }
}
impl std::ops::Sub for C {
    type Output = C;
    fn sub(self, o: C) -> C {
        C(self.0.sub(&o.0))
    }
}
impl std::ops::Add for C {
    type Output = C;
    fn add(self, o: C) -> C {
        C(self.0.add(&o.0))
    }
}

fn mobius_mp(src: [&ProjRoot; 3], dst: [&ProjRoot; 3]) -> [MpComplex; 4] {
    let prec = src[0].prec();
    let neg = |z: &MpComplex| MpComplex::zero(prec).sub(z);
    let rows: Vec<[MpComplex; 4]> = (0..3)
        .map(|i| {
            let (a, b) = (&src[i].a, &src[i].b);
            let (c, d) = (&dst[i].a, &dst[i].b);
            [d.mul(a), d.mul(b), neg(&c.mul(a)), neg(&c.mul(b))]
        })
        .collect();
    let minor = |skip: usize| {
        let m: [[C; 3]; 3] = std::array::from_fn(|r| {
            let cols: Vec<C> = (0..4)
                .filter(|&k| k != skip)
                .map(|k| C(rows[r][k].clone()))
                .collect();
            [cols[0].clone(), cols[1].clone(), cols[2].clone()]
        });
        det3(m).0
    };
    [minor(0), neg(&minor(1)), minor(2), neg(&minor(3))]
}

/// Index of the largest-modulus entry, then the vector divided by it.
fn normalize_c64(v: [Complex64; 4]) -> Option<(usize, [Complex64; 4])> {
    let (k, big) = v
        .iter()
        .enumerate()
        .max_by(|a, b| a.1.norm().total_cmp(&b.1.norm()))
        .map(|(k, z)| (k, *z))?;
    if big.norm() == 0.0 || !big.norm().is_finite() {
        return None;
    }
    Some((k, v.map(|z| z / big)))
}

fn chordal(p: Complex64, q: Complex64, a: Complex64, b: Complex64) -> f64 {
    let scale = p.norm().max(q.norm());
    if scale == 0.0 {
        return f64::INFINITY;
    }
    (p * b - q * a).norm() / scale
}

const SCREEN_TOL: f64 = 1e-6;

/// Whether the real matrix `m` sends every root to some root.
fn maps_roots(m: &[f64; 4], roots: &[(Complex64, Complex64)], probe: &[usize]) -> bool {
    let image = |(a, b): (Complex64, Complex64)| (a * m[0] + b * m[1], a * m[2] + b * m[3]);
    probe.iter().all(|&i| {
        let (p, q) = image(roots[i]);
        roots.iter().any(|&(a, b)| chordal(p, q, a, b) < SCREEN_TOL)
    })
}

/// Three roots maximising the smallest pairwise chordal distance.
fn source_triple(roots: &[(Complex64, Complex64)]) -> [usize; 3] {
    let d = roots.len();
    let dist = |i: usize, j: usize| {
        let (a, b) = roots[i];
        let (c, e) = roots[j];
        (a * e - b * c).norm()
    };
    let mut best = ([0, 1, 2], -1.0);
    for i in 0..d {
        for j in i + 1..d {
            let dij = dist(i, j);
            if dij <= best.1 {
                continue;
            }
            for k in j + 1..d {
                let m = dij.min(dist(i, k)).min(dist(j, k));
                if m > best.1 {
                    best = ([i, j, k], m);
                }
            }
        }
    }
    best.0
}

/// Candidate image triples that pass the double-precision screen.
fn screened_candidates(roots: &[(Complex64, Complex64)], src: [usize; 3]) -> Vec<[usize; 3]> {
    let d = roots.len();
    let all: Vec<usize> = (0..d).collect();
    let probe: Vec<usize> = (0..d).filter(|i| !src.contains(i)).take(1).collect();
    let s = [roots[src[0]], roots[src[1]], roots[src[2]]];
    (0..d)
        .into_par_iter()
        .flat_map_iter(|j1| {
            let all = &all;
            let probe = &probe;
            (0..d).flat_map(move |j2| (0..d).map(move |j3| [j1, j2, j3])).filter(move |t| {
                if t[0] == t[1] || t[0] == t[2] || t[1] == t[2] {
                    return false;
                }
                let dst = [roots[t[0]], roots[t[1]], roots[t[2]]];
                let Some((_, v)) = normalize_c64(mobius_c64(&s, &dst)) else {
                    return false;
                };
                if v.iter().any(|z| z.im.abs() > SCREEN_TOL) {
                    return false;
                }
                let m = v.map(|z| z.re);
                if (m[0] * m[3] - m[1] * m[2]).abs() < SCREEN_TOL {
                    return false;
                }
                maps_roots(&m, roots, probe) && maps_roots(&m, roots, all)
            })
        })
        .collect()
}

/// Exact rational matrix behind a screened candidate, if reconstruction
/// succeeds at the working precision.
fn reconstruct_candidate(
    roots: &[ProjRoot],
    src: [usize; 3],
    dst: [usize; 3],
    opts: &AutOptions,
) -> Option<Mat2Q> {
    let prec = roots[0].prec();
    let v = mobius_mp(
        [&roots[src[0]], &roots[src[1]], &roots[src[2]]],
        [&roots[dst[0]], &roots[dst[1]], &roots[dst[2]]],
    );
    let k = (0..4).max_by(|&a, &b| v[a].norm_sqr().partial_cmp(&v[b].norm_sqr()).unwrap())?;
    if v[k].is_zero() {
        return None;
    }
    let tol = Float::with_val(prec, Float::i_exp(1, -(prec as i32) / 4));
    let bound = Integer::from(opts.denom_bound);
    let mut entries: Vec<Rational> = Vec::with_capacity(4);
    for z in &v {
        let q = z.div(&v[k]);
        if Float::with_val(prec, q.im.abs_ref()) > tol {
            return None;
        }
        entries.push(reconstruct(&q.re, &bound, &tol)?);
    }
    primitive_integer_matrix([
        entries[0].clone(),
        entries[1].clone(),
        entries[2].clone(),
        entries[3].clone(),
    ])
}

fn check_searchable(form: &BinaryForm) -> Result<()> {
    if form.degree() < 3 {
        return Err(Error::DegreeTooSmall { got: form.degree(), min: 3 });
    }
    if !is_squarefree_form(form) {
        return Err(Error::ZeroDiscriminant);
    }
    Ok(())
}

/// Root-mapping search for `Aut F` and `Aut|F|`.
pub fn aut_search(form: &BinaryForm, opts: &AutOptions) -> Result<AutResult> {
    check_searchable(form)?;
    let roots = projective_roots(form, opts.precision)?;
    aut_search_with_roots(form, &roots, opts)
}

/// As [`aut_search`], with the projective roots supplied by the caller
/// (for example from a closed form).
pub fn aut_search_with_roots(
    form: &BinaryForm,
    roots: &[ProjRoot],
    opts: &AutOptions,
) -> Result<AutResult> {
    check_searchable(form)?;
    if roots.len() != form.degree() {
        return Err(Error::InvalidArgument(format!(
            "expected {} roots, got {}",
            form.degree(),
            roots.len()
        )));
    }
    let approx: Vec<(Complex64, Complex64)> = roots.iter().map(ProjRoot::to_c64).collect();
    let src = source_triple(&approx);
    let candidates = screened_candidates(&approx, src);
    let found: Vec<(Vec<Mat2Q>, Vec<Mat2Q>)> = candidates
        .par_iter()
        .filter_map(|&dst| reconstruct_candidate(roots, src, dst, opts))
        .map(|n| scalings(form, &n))
        .collect();
    let mut plus = BTreeSet::new();
    let mut minus = BTreeSet::new();
    for (p, m) in found {
        plus.extend(p);
        minus.extend(m);
    }
    assemble(plus, minus)
}

/// All automorphisms `N/μ` with `N` an integer matrix of height at most
/// `height`; exhaustive within that bound.
pub fn aut_brute_force(form: &BinaryForm, height: i64) -> Result<AutResult> {
    check_searchable(form)?;
    let d = form.degree();
    let (g, _) = form.integral_parts();
    let eval = |x: &Integer, y: &Integer| -> Integer {
        let mut acc = Integer::new();
        let mut ypow = Integer::from(1);
        // Horner in x with the y-powers carried alongside
        let mut terms: Vec<Integer> = Vec::with_capacity(d + 1);
        for c in &g {
            terms.push(Integer::from(c * &ypow));
            ypow *= y;
        }
        for t in terms.iter() {
            acc *= x;
            acc += t;
        }
        acc
    };
    // d + 1 pairwise independent integer points where F does not vanish
    let mut points: Vec<(Integer, Integer)> = Vec::new();
    let mut k = 0i64;
    while points.len() < d + 1 {
        let p = (Integer::from(1), Integer::from(k));
        if eval(&p.0, &p.1) != 0 {
            points.push(p);
        }
        k += 1;
    }
    let values: Vec<Integer> = points.iter().map(|(x, y)| eval(x, y)).collect();
    let h = height;
    let quads: Vec<[i64; 4]> = (-h..=h)
        .flat_map(|s| (-h..=h).flat_map(move |u| (-h..=h).flat_map(move |t| (-h..=h).map(move |v| [s, u, t, v]))))
        .filter(|q| q[0] * q[3] != q[1] * q[2])
        .filter(|q| q.iter().fold(0u64, |g, &e| crate::arith::gcd(g, e.unsigned_abs())) == 1)
        .collect();
    let found: Vec<(Vec<Mat2Q>, Vec<Mat2Q>)> = quads
        .par_iter()
        .filter(|q| {
            let image = |(x, y): &(Integer, Integer)| {
                let nx = Integer::from(x * q[0]) + Integer::from(y * q[1]);
                let ny = Integer::from(x * q[2]) + Integer::from(y * q[3]);
                eval(&nx, &ny)
            };
            let f0 = image(&points[0]);
            // F_N(p_j) F(p_0) = F_N(p_0) F(p_j) for all j
            points.iter().zip(&values).skip(1).all(|(p, fp)| {
                Integer::from(&image(p) * &values[0]) == Integer::from(&f0 * fp)
            })
        })
        .map(|q| scalings(form, &Mat2Q::from_ints(q[0], q[1], q[2], q[3])))
        .collect();
    let mut plus = BTreeSet::new();
    let mut minus = BTreeSet::new();
    for (p, m) in found {
        plus.extend(p);
        minus.extend(m);
    }
    assemble(plus, minus)
}

/// The cubic route: for an irreducible cubic with square discriminant, `Aut F`
/// is generated by the order-3 matrix built from the Hessian
/// `q = ax² + bxy + cy²`. Returns `None` when `D_F` is not a square.
pub fn xiao_cubic_aut(form: &BinaryForm) -> Result<Option<MatrixGroup>> {
    if form.degree() != 3 {
        return Err(Error::InvalidArgument("the Hessian route needs a cubic".into()));
    }
    let disc = form.discriminant()?;
    if rational_sqrt(&disc).is_none() {
        return Ok(None);
    }
    let c = form.coeffs();
    let (b3, b2, b1, b0) = (&c[0], &c[1], &c[2], &c[3]);
    let mul = |x: &Rational, y: &Rational| Rational::from(x * y);
    let qa = mul(b2, b2) - mul(b3, b1) * 3u32;
    let qb = mul(b2, b1) - mul(b3, b0) * 9u32;
    let qc = mul(b1, b1) - mul(b2, b0) * 3u32;
    let dq = mul(&qb, &qb) - mul(&qa, &qc) * 4u32;
    if dq == 0 {
        return Err(Error::Inconsistent("the Hessian is degenerate".into()));
    }
    let r = rational_sqrt(&(Rational::from(-&dq) * 3u32)).ok_or_else(|| {
        Error::Inconsistent("−3·D_q is not a square although D_F is".into())
    })?;
    let k = Rational::from(dq.recip_ref()) / 2u32;
    let n = Mat2Q::new(
        mul(&qb, &r) - &dq,
        mul(&qc, &r) * 2u32,
        -(mul(&qa, &r) * 2u32),
        -mul(&qb, &r) - &dq,
    )
    .scale(&k);
    if !is_automorphism(form, &n, false)? || n.order(3) != Some(3) {
        return Err(Error::Inconsistent(format!("{n} is not an order-3 automorphism")));
    }
    group_closure(&[n], DEFAULT_CAP).map(Some)
}

/// `U_f = (1/√|D|)(b 2c; −2a −b)` for `f = ax² + bxy + cy²`; it satisfies
/// `U_f² = −I` exactly when `D < 0`.
pub fn u_f_matrix(f: &BinaryForm) -> Result<Mat2Q> {
    if f.degree() != 2 {
        return Err(Error::InvalidArgument("U_f needs a quadratic form".into()));
    }
    let c = f.coeffs();
    let (a, b, cc) = (&c[0], &c[1], &c[2]);
    let disc = Rational::from(b * b) - Rational::from(a * cc) * 4u32;
    if disc == 0 {
        return Err(Error::ZeroDiscriminant);
    }
    let root = rational_sqrt(&Rational::from(disc.abs_ref()))
        .ok_or_else(|| Error::Unsupported(format!("|D_f| = {} is not a square", Rational::from(disc.abs_ref()))))?;
    let u = Mat2Q::new(
        b.clone(),
        Rational::from(cc * 2u32),
        Rational::from(a * -2i32),
        Rational::from(-b),
    )
    .scale(&Rational::from(root.recip_ref()));
    if !(&u * &u).neg().is_identity() {
        return Err(Error::Inconsistent(format!(
            "U_f = {u} squares to I, not −I (D_f = {disc} > 0)"
        )));
    }
    Ok(u)
}

/// The sextic covariant `15(x² − 2xy + 2y²)(x⁴ + 6x³y + 6x²y² − 4xy³ − 4y⁴)`
/// of `Ψ₁₅`.
pub fn psi15_sextic_covariant() -> BinaryForm {
    let quad = BinaryForm::from_ints(&[1, -2, 2]);
    let quartic = BinaryForm::from_ints(&[1, 6, 6, -4, -4]);
    (&quad * &quartic).scale(&Rational::from(15))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::trig::psi_form;

    fn m(s: i64, u: i64, t: i64, v: i64) -> Mat2Q {
        Mat2Q::from_ints(s, u, t, v)
    }

    #[test]
    fn membership() {
        assert!(is_automorphism(&psi_form(24), &m(0, 1, 1, 0), false).unwrap());
        assert!(is_automorphism(&psi_form(7), &m(-1, -1, 1, 0), false).unwrap());
        assert!(is_automorphism(&psi_form(11), &Mat2Q::identity(), false).unwrap());
        assert!(is_automorphism(&psi_form(11), &m(-1, 0, 0, -1), true).unwrap());
        assert!(!is_automorphism(&psi_form(11), &m(-1, 0, 0, -1), false).unwrap());
        assert!(is_automorphism(&psi_form(7), &m(1, 1, 1, 1), false).is_err());
    }

    #[test]
    fn search_small_cases() {
        let opts = AutOptions::default();
        let r = aut_search(&psi_form(11), &opts).unwrap();
        assert_eq!((r.class, r.abs_class), (GroupClass::C1, GroupClass::C2));
        let r = aut_search(&psi_form(16), &opts).unwrap();
        assert_eq!((r.class, r.abs_class), (GroupClass::D2, GroupClass::D2));
        assert!(r.aut.contains(&m(-1, 0, 0, 1)) && r.aut.contains(&m(1, 0, 0, -1)));
        let r = aut_search(&psi_form(7), &opts).unwrap();
        assert_eq!(r.class, GroupClass::C3);
        assert!(r.aut.contains(&m(-1, -1, 1, 0)));
        let r = aut_search(&psi_form(24), &opts).unwrap();
        assert_eq!((r.class, r.abs_class), (GroupClass::D4, GroupClass::D4));
    }

    #[test]
    fn search_finds_non_integral_automorphisms() {
        // Ψ7(2x, y) is fixed by (−1 −1/2; 2 0), whose primitive integer
        // multiple (−2 −1; 4 0) has height 4
        let s = m(2, 0, 0, 1);
        let g = psi_form(7).substitute(&s);
        let r = aut_search(&g, &AutOptions::default()).unwrap();
        assert_eq!(r.aut.order, 3);
        assert!(!r.aut.is_integral());
        let brute = aut_brute_force(&g, 4).unwrap();
        assert!(brute.aut.same_elements(&r.aut));
    }

    #[test]
    fn brute_force_examples() {
        let r = aut_brute_force(&psi_form(7), 2).unwrap();
        assert_eq!(r.aut.order, 3);
        assert!(r.aut.contains(&m(-1, -1, 1, 0)));
        let v3 = BinaryForm::from_ints(&[1, 0, -3, 0]);
        let r = aut_brute_force(&v3, 2).unwrap();
        assert_eq!(r.aut.elements.len(), 2);
        assert!(r.aut.contains(&m(1, 0, 0, -1)));
        let sum = BinaryForm::from_ints(&[1, 0, 0, 1]);
        assert!(aut_brute_force(&sum, 1).unwrap().aut.contains(&m(0, 1, 1, 0)));
    }

    #[test]
    fn cubic_route() {
        let g = xiao_cubic_aut(&psi_form(7)).unwrap().unwrap();
        assert!(g.contains(&m(-1, -1, 1, 0)));
        let g = xiao_cubic_aut(&psi_form(9)).unwrap().unwrap();
        assert!(g.contains(&m(-1, 1, -1, 0)));
        assert!(xiao_cubic_aut(&BinaryForm::from_ints(&[1, 0, 0, -2])).unwrap().is_none());
    }

    #[test]
    fn quadratic_route() {
        let u = u_f_matrix(&BinaryForm::from_ints(&[1, -2, 2])).unwrap();
        assert_eq!(u, m(-1, 2, -1, 1));
        assert_eq!(u_f_matrix(&BinaryForm::from_ints(&[1, 0, 1])).unwrap(), m(0, 1, -1, 0));
        assert!(matches!(
            u_f_matrix(&BinaryForm::from_ints(&[0, 1, 0])),
            Err(Error::Inconsistent(_))
        ));
        assert!(u_f_matrix(&BinaryForm::from_ints(&[1, 0, -2])).is_err());
    }
}
