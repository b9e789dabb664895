//! Reference values of `W`, `A` and `C` for the trigonometric and Chebyshev
//! families, used as reference data by the table reproduction.

/// A reference cell: a weight `p/q`, a finite decimal, or a placeholder.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Cell {
    Weight(u64, u64),
    Value(f64),
    Infinite,
    Missing,
}

/// One row of the `Ψₙ`/`Πₙ` table: `(W, A, C)` for each family.
#[derive(Clone, Copy, Debug)]
pub struct TrigRow {
    pub n: u64,
    pub psi: [Cell; 3],
    pub pi: [Cell; 3],
}

/// One row of the `Tₙ`/`Uₙ` table.
#[derive(Clone, Copy, Debug)]
pub struct ChebyshevRow {
    pub n: u64,
    pub t: [Cell; 3],
    pub u: [Cell; 3],
}

use Cell::{Infinite as Inf, Missing as Na, Value as V, Weight as W};

pub const TRIG_TABLE: [TrigRow; 10] = [
    TrigRow { n: 5, psi: [Na, Inf, Na], pi: [W(1, 4), V(5.78302), V(1.44575)] },
    TrigRow { n: 7, psi: [W(1, 3), V(8.31171), V(2.77057)], pi: [W(1, 4), V(5.38644), V(1.34661)] },
    TrigRow { n: 9, psi: [W(1, 3), V(7.64379), V(2.54793)], pi: [W(1, 4), V(5.63543), V(1.40886)] },
    TrigRow { n: 10, psi: [Na, Inf, Na], pi: [W(1, 4), V(5.78302), V(1.44575)] },
    TrigRow { n: 11, psi: [W(1, 1), V(6.12984), V(6.12984)], pi: [W(1, 4), V(5.27188), V(1.31797)] },
    TrigRow { n: 13, psi: [W(1, 2), V(5.8883), V(2.94415)], pi: [W(1, 4), V(5.26356), V(1.31589)] },
    TrigRow { n: 14, psi: [W(1, 3), V(8.31171), V(2.77057)], pi: [W(1, 4), V(5.38644), V(1.34661)] },
    TrigRow { n: 15, psi: [W(1, 4), V(6.31617), V(1.57904)], pi: [W(1, 4), V(5.84408), V(1.46102)] },
    TrigRow { n: 16, psi: [W(1, 4), V(6.08123), V(1.52031)], pi: [W(1, 4), V(6.08123), V(1.52031)] },
    TrigRow { n: 17, psi: [W(1, 2), V(5.66529), V(2.83265)], pi: [W(1, 4), V(5.26355), V(1.31589)] },
];

pub const CHEBYSHEV_TABLE: [ChebyshevRow; 10] = [
    ChebyshevRow { n: 3, t: [W(1, 2), V(5.78286), V(2.89143)], u: [W(1, 2), V(4.46217), V(2.23086)] },
    ChebyshevRow { n: 4, t: [W(1, 4), V(4.30008), V(1.07502)], u: [W(1, 4), V(3.50332), V(0.87583)] },
    ChebyshevRow { n: 5, t: [W(1, 2), V(3.78568), V(1.89284)], u: [W(1, 2), V(3.19719), V(1.59859)] },
    ChebyshevRow { n: 6, t: [W(1, 4), V(3.52082), V(0.880205)], u: [W(1, 4), V(3.04985), V(0.762463)] },
    ChebyshevRow { n: 7, t: [W(1, 2), V(3.35841), V(1.6792)], u: [W(1, 2), V(2.96434), V(1.48217)] },
    ChebyshevRow { n: 8, t: [W(1, 4), V(3.24832), V(0.812081)], u: [W(1, 4), V(2.90894), V(0.727235)] },
    ChebyshevRow { n: 9, t: [W(1, 2), V(3.16867), V(1.58434)], u: [W(1, 2), V(2.87035), V(1.43517)] },
    ChebyshevRow { n: 10, t: [W(1, 4), V(3.10831), V(0.777077)], u: [W(1, 4), V(2.84203), V(0.710508)] },
    ChebyshevRow { n: 11, t: [W(1, 2), V(3.06096), V(1.53048)], u: [W(1, 2), V(2.82042), V(1.41021)] },
    ChebyshevRow { n: 12, t: [W(1, 4), V(3.02282), V(0.755705)], u: [W(1, 4), V(2.80343), V(0.700857)] },
];

/// The weight `W_{Πₙ}` by its case table.
pub fn w_pi_case(n: u64, degree: usize) -> Option<(u64, u64)> {
    Some(match n {
        24 => (1, 8),
        28 | 36 => (1, 3),
        60 => (1, 4),
        _ if n % 8 == 4 && degree >= 5 && degree % 2 == 1 => (1, 1),
        _ if n % 8 == 4 && degree >= 6 && degree % 2 == 0 => (1, 2),
        _ if n % 8 != 4 => (1, 4),
        _ => return None,
    })
}

/// The weight `W_{Ψₙ}` by its case table.
pub fn w_psi_case(n: u64, degree: usize) -> Option<(u64, u64)> {
    Some(match n {
        24 => (1, 8),
        7 | 9 | 14 | 18 => (1, 3),
        15 | 30 => (1, 4),
        _ if n % 4 == 0 => (1, 4),
        _ if degree >= 5 && degree % 2 == 1 => (1, 1),
        _ if degree >= 6 && degree % 2 == 0 => (1, 2),
        _ => return None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tables_are_internally_consistent() {
        // C = W·A up to the tabulated rounding, except where A itself is off
        for row in TRIG_TABLE.iter() {
            for cells in [row.psi, row.pi] {
                if let [W(p, q), V(a), V(c)] = cells {
                    assert!((a * p as f64 / q as f64 - c).abs() / c < 2e-5, "n = {}", row.n);
                }
            }
        }
        for row in CHEBYSHEV_TABLE.iter() {
            for cells in [row.t, row.u] {
                if let [W(p, q), V(a), V(c)] = cells {
                    let ok = (a * p as f64 / q as f64 - c).abs() / c < 2e-5;
                    assert_eq!(ok, !(row.n == 3 && cells == row.u), "n = {}", row.n);
                }
            }
        }
    }

    #[test]
    fn weight_cases() {
        assert_eq!(w_psi_case(24, 4), Some((1, 8)));
        assert_eq!(w_psi_case(11, 5), Some((1, 1)));
        assert_eq!(w_psi_case(13, 6), Some((1, 2)));
        assert_eq!(w_pi_case(44, 5), Some((1, 1)));
        assert_eq!(w_pi_case(5, 4), Some((1, 4)));
    }
}
