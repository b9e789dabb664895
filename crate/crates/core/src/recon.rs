//! Rational reconstruction of real numbers by continued fractions.

use rug::{Float, Integer, Rational};

/// The first continued-fraction convergent `p/q` of `x` with `q ≤ max_den`
/// and `|x − p/q| ≤ tol`.
pub fn reconstruct(x: &Float, max_den: &Integer, tol: &Float) -> Option<Rational> {
    let exact = x.to_rational()?;
    let prec = x.prec();
    let (mut num, mut den) = exact.into_numer_denom();
    // convergents h/k with (h_{-1}, k_{-1}) = (1, 0), (h_{-2}, k_{-2}) = (0, 1)
    let (mut h0, mut h1) = (Integer::from(0), Integer::from(1));
    let (mut k0, mut k1) = (Integer::from(1), Integer::from(0));
    while den != 0 {
        let (a, r) = num.div_rem_floor(den.clone());
        let h2 = Integer::from(&a * &h1) + &h0;
        let k2 = Integer::from(&a * &k1) + &k0;
        if k2 > *max_den {
            return None;
        }
        let cand = Rational::from((h2.clone(), k2.clone()));
        let err = Float::with_val(prec, x - &cand).abs();
        if err <= *tol {
            return Some(cand);
        }
        h0 = std::mem::replace(&mut h1, h2);
        k0 = std::mem::replace(&mut k1, k2);
        num = den;
        den = r;
    }
    None
}
