//! Property-based checks of the algebraic laws the library relies on.

use binforms::aut::{aut_search, AutOptions};
use binforms::chebyshev::{t_form, u_form};
use binforms::group::GroupClass;
use binforms::invariants::{area_fundamental, Area};
use binforms::trig::{psi, psi_form};
use binforms::{BinaryForm, IntPoly, Mat2Q, MatrixGroup};
use proptest::prelude::*;
use rug::ops::Pow;
use rug::{Integer, Rational};

fn form_strategy(min_deg: usize, max_deg: usize) -> impl Strategy<Value = BinaryForm> {
    (min_deg..=max_deg)
        .prop_flat_map(|d| prop::collection::vec(-6i64..=6, d + 1))
        .prop_filter("non-zero form", |c| c.iter().any(|&x| x != 0))
        .prop_map(|c| BinaryForm::from_ints(&c))
}

fn matrix_strategy(bound: i64) -> impl Strategy<Value = Mat2Q> {
    prop::array::uniform4(-bound..=bound)
        .prop_filter("invertible", |[s, u, t, v]| s * v - t * u != 0)
        .prop_map(|[s, u, t, v]| Mat2Q::from_ints(s, u, t, v))
}

/// Products of elementary shears and the swap: every matrix has `det = ±1`.
fn unimodular_strategy() -> impl Strategy<Value = Mat2Q> {
    prop::collection::vec((0usize..3, -2i64..=2), 1..4).prop_map(|steps| {
        steps.into_iter().fold(Mat2Q::identity(), |acc, (kind, k)| {
            let e = match kind {
                0 => Mat2Q::from_ints(1, k, 0, 1),
                1 => Mat2Q::from_ints(1, 0, k, 1),
                _ => Mat2Q::from_ints(0, 1, 1, 0),
            };
            &acc * &e
        })
    })
}

/// Forms from the invariant tables with a non-trivial automorphism group.
fn table_forms() -> Vec<BinaryForm> {
    let mut v: Vec<BinaryForm> = [7, 9, 11, 13, 15, 16, 24].into_iter().map(psi_form).collect();
    v.extend((3..=6).map(t_form));
    v.extend([3, 5, 6].into_iter().map(u_form));
    v
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn substitution_is_functorial(f in form_strategy(1, 6), m in matrix_strategy(4), n in matrix_strategy(4)) {
        prop_assert_eq!(f.substitute(&m).substitute(&n), f.substitute(&(&m * &n)));
        prop_assert_eq!(f.substitute(&Mat2Q::identity()), f);
    }

    #[test]
    fn discriminant_transformation_law(f in form_strategy(2, 6), m in matrix_strategy(3)) {
        let d = f.degree() as u32;
        let lhs = f.substitute(&m).discriminant().unwrap();
        let factor = Rational::from(m.det().pow(d * (d - 1)));
        prop_assert_eq!(lhs, factor * f.discriminant().unwrap());
    }

    #[test]
    fn homogenize_round_trip(c in prop::collection::vec(-20i64..=20, 1..8), extra in 0usize..3) {
        let p = IntPoly::new(c.into_iter().map(Integer::from).collect());
        let d = p.degree().unwrap_or(0) + extra;
        let f = BinaryForm::homogenize(&p, d).unwrap();
        prop_assert_eq!(f.degree(), d);
        prop_assert_eq!(f.dehomogenize().unwrap(), p);
    }

    #[test]
    fn proportionality_recovers_the_scalar(f in form_strategy(1, 6), num in -9i64..=9, den in 1i64..=9) {
        prop_assume!(num != 0);
        let k = Rational::from((num, den));
        prop_assert_eq!(f.proportionality(&f.scale(&k)), Some(k));
    }

    #[test]
    fn psi_parity_identities(n in 3u64..=300) {
        let p = psi(n);
        if n % 4 == 0 && n >= 8 {
            for i in (1..p.coeffs().len()).step_by(2) {
                prop_assert_eq!(p.coeff(i), 0);
            }
        }
        if n % 2 == 1 {
            let d = p.degree().unwrap();
            let q = psi(2 * n).reflect();
            let q = if d % 2 == 1 { -&q } else { q };
            prop_assert_eq!(p, q);
        }
    }

    #[test]
    fn classification_is_conjugation_invariant(i in 0usize..GroupClass::ALL.len(), s in matrix_strategy(3)) {
        let class = GroupClass::ALL[i];
        let g = binforms::group::group_closure(&class.representative(), 48).unwrap();
        let h = g.conjugate_by(&s).unwrap();
        prop_assert_eq!(h.order, g.order);
        prop_assert_eq!(h.classify().unwrap(), class);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn automorphisms_are_conjugation_covariant(i in 0usize..14, s in matrix_strategy(2)) {
        let f = &table_forms()[i];
        let opts = AutOptions::default();
        let base = aut_search(f, &opts).unwrap();
        let moved = aut_search(&f.substitute(&s), &opts).unwrap();
        prop_assert!(moved.aut.same_elements(&base.aut.conjugate_by(&s).unwrap()));
        prop_assert!(moved.aut_abs.same_elements(&base.aut_abs.conjugate_by(&s).unwrap()));
        prop_assert_eq!(moved.class, base.class);
    }

    #[test]
    fn index_bound(f in form_strategy(3, 6), s in matrix_strategy(2), i in 0usize..14, use_table in any::<bool>()) {
        let f = if use_table { table_forms()[i].substitute(&s) } else { f };
        prop_assume!(f.discriminant().unwrap() != 0);
        let r = aut_search(&f, &AutOptions::default()).unwrap();
        prop_assert!(matches!(r.index(), 1 | 2));
        prop_assert!(r.aut.is_subgroup_of(&r.aut_abs));
    }

    #[test]
    fn area_is_unimodular_invariant(i in 0usize..14, s in unimodular_strategy()) {
        let f = &table_forms()[i];
        let (Area::Finite(a), Area::Finite(b)) =
            (area_fundamental(f, 1e-10).unwrap(), area_fundamental(&f.substitute(&s), 1e-10).unwrap())
        else {
            panic!("table forms have finite area");
        };
        prop_assert!((a.value - b.value).abs() <= 1e-7 * a.value, "{} vs {}", a.value, b.value);
    }
}

#[test]
fn trivial_group_is_c1() {
    assert_eq!(MatrixGroup::trivial().classify().unwrap(), GroupClass::C1);
}
