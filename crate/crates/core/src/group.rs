//! Finite groups of rational 2×2 matrices and their conjugacy class in
//! `GL₂(Q)`.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::matrix::Mat2Q;

/// Default bound on the size of a closure before it is declared infinite.
pub const DEFAULT_CAP: usize = 48;

/// The ten conjugacy classes of finite subgroups of `GL₂(Q)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GroupClass {
    C1,
    C2,
    C3,
    C4,
    C6,
    D1,
    D2,
    D3,
    D4,
    D6,
}

impl GroupClass {
    pub fn order(self) -> usize {
        use GroupClass::*;
        match self {
            C1 => 1,
            C2 | D1 => 2,
            C3 => 3,
            C4 | D2 => 4,
            C6 | D3 => 6,
            D4 => 8,
            D6 => 12,
        }
    }

    /// Generators of the standard representative.
    pub fn representative(self) -> Vec<Mat2Q> {
        use GroupClass::*;
        let m = Mat2Q::from_ints;
        let swap = m(0, 1, 1, 0);
        match self {
            C1 => vec![],
            C2 => vec![m(-1, 0, 0, -1)],
            C3 => vec![m(0, 1, -1, -1)],
            C4 => vec![m(0, 1, -1, 0)],
            C6 => vec![m(0, -1, 1, 1)],
            D1 => vec![swap],
            D2 => vec![swap, m(-1, 0, 0, -1)],
            D3 => vec![swap, m(0, 1, -1, -1)],
            D4 => vec![swap, m(0, 1, -1, 0)],
            D6 => vec![swap, m(0, 1, -1, 1)],
        }
    }

    pub const ALL: [GroupClass; 10] = {
        use GroupClass::*;
        [C1, C2, C3, C4, C6, D1, D2, D3, D4, D6]
    };
}

impl fmt::Display for GroupClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

impl FromStr for GroupClass {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        GroupClass::ALL
            .into_iter()
            .find(|c| c.to_string() == s)
            .ok_or_else(|| Error::Parse(format!("unknown group class {s:?}")))
    }
}

impl Serialize for GroupClass {
    fn serialize<S: Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        ser.collect_str(self)
    }
}

/// A finite matrix group, stored as its sorted element list together with
/// the generators it was built from.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MatrixGroup {
    pub order: usize,
    pub generators: Vec<Mat2Q>,
    pub elements: Vec<Mat2Q>,
}

/// Closure of `generators` under multiplication; fails once more than `cap`
/// elements appear.
pub fn group_closure(generators: &[Mat2Q], cap: usize) -> Result<MatrixGroup> {
    if generators.iter().any(|g| !g.is_invertible()) {
        return Err(Error::SingularMatrix);
    }
    let gens: Vec<Mat2Q> = generators
        .iter()
        .filter(|g| !g.is_identity())
        .cloned()
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    let mut seen: BTreeSet<Mat2Q> = BTreeSet::from([Mat2Q::identity()]);
    let mut frontier = vec![Mat2Q::identity()];
    while let Some(e) = frontier.pop() {
        for g in &gens {
            let p = &e * g;
            if seen.insert(p.clone()) {
                if seen.len() > cap {
                    return Err(Error::ClosureCap { cap });
                }
                frontier.push(p);
            }
        }
    }
    Ok(MatrixGroup { order: seen.len(), generators: gens, elements: seen.into_iter().collect() })
}

impl MatrixGroup {
    pub fn trivial() -> Self {
        group_closure(&[], 1).unwrap()
    }

    /// Group generated by a set that is already known to be closed; the
    /// generator list is thinned greedily.
    pub fn from_closed_set(elements: &BTreeSet<Mat2Q>) -> Result<Self> {
        let mut gens: Vec<Mat2Q> = Vec::new();
        let mut current = MatrixGroup::trivial();
        // prefer elements of large order so cyclic groups get one generator
        let mut by_order: Vec<(usize, &Mat2Q)> = elements
            .iter()
            .map(|m| (m.order(DEFAULT_CAP).unwrap_or(usize::MAX), m))
            .collect();
        by_order.sort_by(|a, b| b.0.cmp(&a.0).then_with(|| a.1.cmp(b.1)));
        for (_, m) in by_order {
            if !current.contains(m) {
                gens.push(m.clone());
                current = group_closure(&gens, DEFAULT_CAP)?;
            }
        }
        if current.order != elements.len() {
            return Err(Error::Inconsistent("element set is not closed".into()));
        }
        Ok(current)
    }

    pub fn contains(&self, m: &Mat2Q) -> bool {
        self.elements.binary_search(m).is_ok()
    }

    pub fn same_elements(&self, other: &MatrixGroup) -> bool {
        self.elements == other.elements
    }

    pub fn is_subgroup_of(&self, other: &MatrixGroup) -> bool {
        self.elements.iter().all(|m| other.contains(m))
    }

    pub fn is_integral(&self) -> bool {
        self.elements.iter().all(Mat2Q::is_integral)
    }

    /// `{S⁻¹ A S : A ∈ G}`.
    pub fn conjugate_by(&self, s: &Mat2Q) -> Result<MatrixGroup> {
        let gens = self
            .generators
            .iter()
            .map(|g| g.conjugate_by(s))
            .collect::<Result<Vec<_>>>()?;
        group_closure(&gens, self.order.max(1))
    }

    /// Class in the list of finite subgroups of `GL₂(Q)`, decided by the
    /// order and the element orders: a group of order 2 is `C2` exactly when
    /// it contains `−I`.
    pub fn classify(&self) -> Result<GroupClass> {
        use GroupClass::*;
        let has_order = |k: usize| self.elements.iter().any(|m| m.order(12) == Some(k));
        Ok(match self.order {
            1 => C1,
            2 => {
                if self.contains(&Mat2Q::from_ints(-1, 0, 0, -1)) {
                    C2
                } else {
                    D1
                }
            }
            3 => C3,
            4 => {
                if has_order(4) {
                    C4
                } else {
                    D2
                }
            }
            6 => {
                if has_order(6) {
                    C6
                } else {
                    D3
                }
            }
            8 => D4,
            12 => D6,
            k => return Err(Error::BadGroupOrder(k)),
        })
    }
}

pub fn classify_group(g: &MatrixGroup) -> Result<GroupClass> {
    g.classify()
}

#[cfg(test)]
mod tests {
    use super::*;
    use rug::Rational;

    #[test]
    fn closure_examples() {
        let c4 = group_closure(&[Mat2Q::from_ints(0, 1, -1, 0)], DEFAULT_CAP).unwrap();
        assert_eq!(c4.order, 4);
        assert_eq!(c4.classify().unwrap(), GroupClass::C4);
        let d6 = group_closure(
            &[Mat2Q::from_ints(0, 1, 1, 0), Mat2Q::from_ints(0, 1, -1, 1)],
            DEFAULT_CAP,
        )
        .unwrap();
        assert_eq!(d6.order, 12);
        assert_eq!(d6.classify().unwrap(), GroupClass::D6);
        let triv = group_closure(&[], DEFAULT_CAP).unwrap();
        assert_eq!(triv.elements, vec![Mat2Q::identity()]);
        assert!(matches!(
            group_closure(&[Mat2Q::from_ints(1, 1, 0, 1)], DEFAULT_CAP),
            Err(Error::ClosureCap { .. })
        ));
        assert!(group_closure(&[Mat2Q::from_ints(1, 1, 1, 1)], DEFAULT_CAP).is_err());
    }

    #[test]
    fn classification_examples() {
        let pm = group_closure(&[Mat2Q::from_ints(-1, 0, 0, -1)], DEFAULT_CAP).unwrap();
        assert_eq!(pm.classify().unwrap(), GroupClass::C2);
        let d2 = group_closure(
            &[Mat2Q::from_ints(-1, 0, 0, 1), Mat2Q::from_ints(1, 0, 0, -1)],
            DEFAULT_CAP,
        )
        .unwrap();
        assert_eq!(d2.classify().unwrap(), GroupClass::D2);
        let c4 = group_closure(&[Mat2Q::from_ints(-1, 2, -1, 1)], DEFAULT_CAP).unwrap();
        assert_eq!(c4.classify().unwrap(), GroupClass::C4);
        for class in GroupClass::ALL {
            let g = group_closure(&class.representative(), DEFAULT_CAP).unwrap();
            assert_eq!(g.order, class.order());
            assert_eq!(g.classify().unwrap(), class);
        }
    }

    #[test]
    fn conjugation_and_thinning() {
        let d4 = group_closure(&GroupClass::D4.representative(), DEFAULT_CAP).unwrap();
        let s = Mat2Q::new(Rational::from((1, 2)), 3.into(), 1.into(), Rational::from((-2, 3)));
        let conj = d4.conjugate_by(&s).unwrap();
        assert_eq!(conj.order, 8);
        assert_eq!(conj.classify().unwrap(), GroupClass::D4);
        assert!(!conj.is_integral());
        let set: BTreeSet<Mat2Q> = d4.elements.iter().cloned().collect();
        let thin = MatrixGroup::from_closed_set(&set).unwrap();
        assert!(thin.same_elements(&d4));
        assert_eq!(thin.generators.len(), 2);
        assert_eq!(GroupClass::from_str("D3").unwrap(), GroupClass::D3);
    }
}
