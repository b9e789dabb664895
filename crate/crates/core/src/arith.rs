//! Small-integer number theory and exact root extraction.

use rug::{Integer, Rational};

/// Prime factorisation by trial division, primes in increasing order.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2u64;
    while p * p <= n {
        if n % p == 0 {
            let mut e = 0;
            while n % p == 0 {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub fn totient(n: u64) -> u64 {
    factorize(n)
        .into_iter()
        .fold(n, |acc, (p, _)| acc / p * (p - 1))
}

/// Divisors of `n` in increasing order.
pub fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut i = 1;
    while i * i <= n {
        if n % i == 0 {
            small.push(i);
            if i != n / i {
                large.push(n / i);
            }
        }
        i += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

pub fn mobius(n: u64) -> i32 {
    let f = factorize(n);
    if f.iter().any(|&(_, e)| e > 1) {
        0
    } else if f.len() % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Product of the distinct primes dividing `n`.
pub fn radical(n: u64) -> u64 {
    factorize(n).into_iter().map(|(p, _)| p).product()
}

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let r = a % b;
        a = b;
        b = r;
    }
    a
}

/// Exact `k`-th root of an integer, if one exists. Negative radicands only
/// have roots for odd `k`.
pub fn integer_root(x: &Integer, k: u32) -> Option<Integer> {
    assert!(k > 0);
    if *x < 0 {
        if k % 2 == 0 {
            return None;
        }
        return integer_root(&Integer::from(-x), k).map(|r| -r);
    }
    let (root, rem) = x.clone().root_rem(Integer::new(), k);
    (rem == 0).then_some(root)
}

/// Exact `k`-th root of a rational number, if one exists.
pub fn rational_root(q: &Rational, k: u32) -> Option<Rational> {
    let num = integer_root(q.numer(), k)?;
    let den = integer_root(q.denom(), k)?;
    Some(Rational::from((num, den)))
}

/// Rational `k`-th roots of `q`: zero, one (odd `k`) or two (even `k`) values.
pub fn all_rational_roots(q: &Rational, k: u32) -> Vec<Rational> {
    match rational_root(q, k) {
        None => Vec::new(),
        Some(r) if k % 2 == 0 && r != 0 => {
            let neg = Rational::from(-&r);
            vec![r, neg]
        }
        Some(r) => vec![r],
    }
}

/// Square root of a non-negative rational that is a perfect square.
pub fn rational_sqrt(q: &Rational) -> Option<Rational> {
    if *q < 0 {
        return None;
    }
    rational_root(q, 2)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn factor_and_totient() {
        assert_eq!(factorize(360), vec![(2, 3), (3, 2), (5, 1)]);
        assert!(factorize(1).is_empty());
        assert_eq!(totient(1), 1);
        assert_eq!(totient(24), 8);
        assert_eq!(totient(14335), 11040);
        assert_eq!(divisors(12), vec![1, 2, 3, 4, 6, 12]);
        assert_eq!(divisors(49), vec![1, 7, 49]);
        assert_eq!(mobius(30), -1);
        assert_eq!(mobius(12), 0);
        assert_eq!(radical(72), 6);
    }

    #[test]
    fn exact_roots() {
        assert_eq!(integer_root(&Integer::from(-27), 3), Some(Integer::from(-3)));
        assert_eq!(integer_root(&Integer::from(-4), 2), None);
        assert_eq!(integer_root(&Integer::from(17), 2), None);
        let q = Rational::from((16, 81));
        assert_eq!(all_rational_roots(&q, 4).len(), 2);
        assert_eq!(rational_root(&q, 4), Some(Rational::from((2, 3))));
        assert!(all_rational_roots(&Rational::from(-16), 4).is_empty());
        assert_eq!(rational_sqrt(&Rational::from(441)), Some(Rational::from(21)));
    }
}
