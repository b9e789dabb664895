//! The automorphism groups claimed for the families `Ψₙ`, `Πₙ`, `Tₙ`, `Uₙ`
//! and the tilde forms, encoded as generator lists with their stated class
//! labels.
//!
//! Stated labels are kept verbatim even where they disagree with the
//! classification of the generated group (`⟨N, −I⟩` with `N` of order 3 is
//! cyclic of order 6, and `⟨diag(1, −1)⟩` is conjugate to `D1`). Comparisons
//! therefore use element sets, never labels.

use std::fmt;
use std::str::FromStr;

use crate::arith::totient;
use crate::error::{Error, Result};
use crate::group::{group_closure, GroupClass, MatrixGroup, DEFAULT_CAP};
use crate::matrix::Mat2Q;
use crate::trig::pi_degree;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    Psi,
    Pi,
    T,
    U,
    UTilde,
    VTilde,
}

impl Family {
    pub const ALL: [Family; 6] =
        [Family::Psi, Family::Pi, Family::T, Family::U, Family::UTilde, Family::VTilde];

    pub fn name(self) -> &'static str {
        match self {
            Family::Psi => "psi",
            Family::Pi => "pi",
            Family::T => "T",
            Family::U => "U",
            Family::UTilde => "utilde",
            Family::VTilde => "vtilde",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl serde::Serialize for Family {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        ser.collect_str(self)
    }
}

impl FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .into_iter()
            .find(|f| f.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Parse(format!("unknown family {s:?}")))
    }
}

/// A claimed pair `(Aut F, Aut|F|)`.
#[derive(Clone, Debug)]
pub struct ExpectedAut {
    pub family: Family,
    pub n: u64,
    pub class: GroupClass,
    pub generators: Vec<Mat2Q>,
    pub abs_class: GroupClass,
    pub abs_generators: Vec<Mat2Q>,
}

impl ExpectedAut {
    pub fn aut_group(&self) -> Result<MatrixGroup> {
        group_closure(&self.generators, DEFAULT_CAP)
    }

    pub fn abs_group(&self) -> Result<MatrixGroup> {
        group_closure(&self.abs_generators, DEFAULT_CAP)
    }

    /// Whether the computed groups equal the claimed ones as sets.
    pub fn matches(&self, aut: &MatrixGroup, aut_abs: &MatrixGroup) -> Result<bool> {
        Ok(self.aut_group()?.same_elements(aut) && self.abs_group()?.same_elements(aut_abs))
    }

    /// Whether the stated labels agree with the classification of the
    /// generated groups.
    pub fn labels_consistent(&self) -> Result<bool> {
        Ok(self.aut_group()?.classify()? == self.class
            && self.abs_group()?.classify()? == self.abs_class)
    }
}

fn m(s: i64, u: i64, t: i64, v: i64) -> Mat2Q {
    Mat2Q::from_ints(s, u, t, v)
}

fn minus_i() -> Mat2Q {
    m(-1, 0, 0, -1)
}

fn reflections() -> Vec<Mat2Q> {
    vec![m(-1, 0, 0, 1), m(1, 0, 0, -1)]
}

fn build(
    family: Family,
    n: u64,
    (class, generators): (GroupClass, Vec<Mat2Q>),
    (abs_class, abs_generators): (GroupClass, Vec<Mat2Q>),
) -> ExpectedAut {
    ExpectedAut { family, n, class, generators, abs_class, abs_generators }
}

/// Rows of the exceptional table for `Ψₙ`, keyed by `n`.
fn psi_table_row(n: u64) -> Option<((GroupClass, Vec<Mat2Q>), (GroupClass, Vec<Mat2Q>))> {
    use GroupClass::*;
    let row = match n {
        7 | 18 => {
            let g = m(-1, -1, 1, 0);
            ((C3, vec![g.clone()]), (D3, vec![g, minus_i()]))
        }
        9 | 14 => {
            let g = m(-1, 1, -1, 0);
            ((C3, vec![g.clone()]), (D3, vec![g, minus_i()]))
        }
        15 => ((C4, vec![m(-1, 2, -1, 1)]), (C4, vec![m(-1, 2, -1, 1)])),
        24 => {
            let g = vec![m(0, 1, 1, 0), m(0, 1, -1, 0)];
            ((D4, g.clone()), (D4, g))
        }
        30 => ((C4, vec![m(1, 2, -1, -1)]), (C4, vec![m(1, 2, -1, -1)])),
        _ => return None,
    };
    Some(row)
}

fn psi_expected(n: u64) -> Result<ExpectedAut> {
    use GroupClass::*;
    if n == 0 || matches!(n, 1..=6 | 8 | 10 | 12) {
        return Err(Error::OutOfScope(format!("Ψ_{n} is excluded from the Ψ classification")));
    }
    if let Some((aut, abs)) = psi_table_row(n) {
        return Ok(build(Family::Psi, n, aut, abs));
    }
    let d = totient(n) / 2;
    let (aut, abs) = if n % 4 == 0 {
        ((D2, reflections()), (D2, reflections()))
    } else if d % 2 == 1 {
        ((C1, vec![]), (C2, vec![minus_i()]))
    } else {
        ((C2, vec![minus_i()]), (C2, vec![minus_i()]))
    };
    Ok(build(Family::Psi, n, aut, abs))
}

fn pi_expected(n: u64) -> Result<ExpectedAut> {
    use GroupClass::*;
    if n == 0 || matches!(n, 1..=4 | 6 | 8 | 12 | 20) {
        return Err(Error::OutOfScope(format!("Π_{n} is excluded from the Π classification")));
    }
    let table = match n {
        28 | 36 => psi_table_row(9),
        60 => psi_table_row(30),
        24 => psi_table_row(24),
        _ => None,
    };
    if let Some((aut, abs)) = table {
        return Ok(build(Family::Pi, n, aut, abs));
    }
    let d = pi_degree(n)?;
    let (aut, abs) = if n % 8 == 4 {
        if d % 2 == 1 {
            ((C1, vec![]), (C2, vec![minus_i()]))
        } else {
            ((C2, vec![minus_i()]), (C2, vec![minus_i()]))
        }
    } else {
        // Πₙ = Ψ_{c(n)} with 4 | c(n), so Aut|Πₙ| equals Aut Πₙ here
        ((D2, reflections()), (D2, reflections()))
    };
    Ok(build(Family::Pi, n, aut, abs))
}

/// The half-reflection pair: `Aut = ⟨diag(1, −1)⟩` (labelled `C2`) and
/// `Aut|·| = D2`, or `D2` for both.
fn parity_pair(family: Family, n: u64, half: bool) -> ExpectedAut {
    use GroupClass::*;
    let aut = if half { (C2, vec![m(1, 0, 0, -1)]) } else { (D2, reflections()) };
    build(family, n, aut, (D2, reflections()))
}

/// Claimed groups for `family` at index `n`.
///
/// `Tₙ`, `Uₙ` follow the tilde-form groups transported through
/// `S = diag(1/2, 1)`, which fixes both diagonal reflections: `Tₙ ↔ Ṽₙ` and
/// `Uₙ ↔ Ũ_{n+1}`.
pub fn expected_aut(family: Family, n: u64) -> Result<ExpectedAut> {
    let scope = |min: u64| {
        if n < min {
            Err(Error::OutOfScope(format!("{family}_{n}: the statement needs n ≥ {min}")))
        } else {
            Ok(())
        }
    };
    match family {
        Family::Psi => psi_expected(n),
        Family::Pi => pi_expected(n),
        Family::T => scope(3).map(|_| parity_pair(family, n, n % 2 == 1)),
        Family::U => scope(3).map(|_| parity_pair(family, n, n % 2 == 1)),
        Family::VTilde => scope(3).map(|_| parity_pair(family, n, n % 2 == 1)),
        Family::UTilde => scope(4).map(|_| parity_pair(family, n, n % 2 == 0)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table_rows() {
        let e = expected_aut(Family::Psi, 24).unwrap();
        assert_eq!(e.class, GroupClass::D4);
        assert_eq!(e.generators, vec![m(0, 1, 1, 0), m(0, 1, -1, 0)]);
        let e = expected_aut(Family::Pi, 60).unwrap();
        assert_eq!(e.class, GroupClass::C4);
        assert_eq!(e.generators, vec![m(1, 2, -1, -1)]);
        let e = expected_aut(Family::T, 5).unwrap();
        assert_eq!((e.class, e.abs_class), (GroupClass::C2, GroupClass::D2));
        assert_eq!(e.aut_group().unwrap().order, 2);
    }

    #[test]
    fn stated_labels_versus_classification() {
        let e = expected_aut(Family::Psi, 7).unwrap();
        assert_eq!(e.abs_class, GroupClass::D3);
        assert_eq!(e.abs_group().unwrap().classify().unwrap(), GroupClass::C6);
        assert!(!e.labels_consistent().unwrap());
        assert!(expected_aut(Family::Psi, 24).unwrap().labels_consistent().unwrap());
        assert!(expected_aut(Family::Psi, 11).unwrap().labels_consistent().unwrap());
    }

    #[test]
    fn scope() {
        for n in [1, 5, 10, 12] {
            assert!(matches!(expected_aut(Family::Psi, n), Err(Error::OutOfScope(_))));
        }
        assert!(matches!(expected_aut(Family::Pi, 20), Err(Error::OutOfScope(_))));
        assert!(expected_aut(Family::Pi, 5).is_ok());
        assert!(expected_aut(Family::T, 2).is_err());
        assert!(expected_aut(Family::UTilde, 3).is_err());
        // deg Π₄₄ = 5, deg Π₅₂ = 6
        let e = expected_aut(Family::Pi, 44).unwrap();
        assert_eq!(e.class, GroupClass::C1);
        let e = expected_aut(Family::Pi, 52).unwrap();
        assert_eq!(e.class, GroupClass::C2);
        assert_eq!(Family::from_str("vtilde").unwrap(), Family::VTilde);
    }
}
