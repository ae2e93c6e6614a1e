//! Counting bounds relating order, 5-circuits and oddness, as exact rationals.

use crate::canon::are_isomorphic;
use crate::circuits::{five_circuit_incidence, FiveCircuitProfile};
use crate::connectivity::ZetaResult;
use crate::constructions::petersen;
use crate::graph::MultiGraph;
use num_rational::Ratio;

pub type Q = Ratio<u64>;

/// Upper bound `(3n + q) / 21` on the oddness of a snark of girth at least
/// 4 with order `n` and `q` circuits of length 5.
pub fn oddness_upper_bound(n: usize, q: usize) -> Q {
    Q::new(3 * n as u64 + q as u64, 21)
}

/// Lower bound on `n / omega` for snarks other than the Petersen graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RatioClass {
    Any,
    Cyclically3Connected,
    Cyclically5Connected,
}

impl RatioClass {
    pub fn bound(self) -> Q {
        match self {
            RatioClass::Any => Q::new(525, 97),
            RatioClass::Cyclically3Connected => Q::new(105, 19),
            RatioClass::Cyclically5Connected => Q::new(35, 6),
        }
    }

    /// Strongest class that `zeta` qualifies for.
    pub fn of(zeta: &ZetaResult) -> RatioClass {
        if zeta.at_least(5) {
            RatioClass::Cyclically5Connected
        } else if zeta.at_least(3) {
            RatioClass::Cyclically3Connected
        } else {
            RatioClass::Any
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RatioCheck {
    /// The Petersen graph attains ratio 5 and is excluded from the bounds.
    Exempt,
    Checked {
        ratio: Q,
        class: RatioClass,
        bound: Q,
        holds: bool,
    },
}

impl RatioCheck {
    pub fn holds(&self) -> bool {
        match self {
            RatioCheck::Exempt => true,
            RatioCheck::Checked { holds, .. } => *holds,
        }
    }
}

pub fn is_petersen(g: &MultiGraph) -> bool {
    g.order() == 10 && g.is_cubic() && are_isomorphic(g, &petersen())
}

/// Compares `n / omega` with the bound for the connectivity class of `g`.
pub fn ratio_check(g: &MultiGraph, omega: usize, zeta: &ZetaResult) -> RatioCheck {
    if is_petersen(g) {
        return RatioCheck::Exempt;
    }
    let class = RatioClass::of(zeta);
    let ratio = Q::new(g.order() as u64, omega.max(1) as u64);
    RatioCheck::Checked {
        ratio,
        class,
        bound: class.bound(),
        holds: omega > 0 && ratio >= class.bound(),
    }
}

/// Claims about the 5-circuit profile `(n_0..n_6)` of a snark other than the
/// Petersen graph. Conditional claims are `None` when their hypothesis fails.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProfileCheck {
    pub profile: FiveCircuitProfile,
    pub no_vertex_on_six: bool,
    pub few_on_five: bool,
    pub none_on_five: Option<bool>,
    pub none_on_four: Option<bool>,
    /// The count of 5-circuits matches the incidence profile.
    pub double_count: bool,
}

impl ProfileCheck {
    pub fn holds(&self) -> bool {
        self.no_vertex_on_six
            && self.few_on_five
            && self.none_on_five.unwrap_or(true)
            && self.none_on_four.unwrap_or(true)
            && self.double_count
    }
}

pub fn profile_check(g: &MultiGraph, zeta: &ZetaResult) -> ProfileCheck {
    let p = five_circuit_incidence(g);
    let n = g.order();
    let [_, _, _, _, n4, n5, n6] = p.profile;
    ProfileCheck {
        no_vertex_on_six: n6 == 0 && p.overflow.is_empty(),
        few_on_five: 5 * n5 <= 2 * n,
        none_on_five: zeta.at_least(3).then_some(n5 == 0),
        none_on_four: zeta.at_least(5).then_some(n4 == 0),
        double_count: p.weighted_sum() == 5 * p.circuit_count,
        profile: p,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::connectivity::cyclic_connectivity;

    #[test]
    fn petersen_meets_the_bound() {
        assert_eq!(oddness_upper_bound(10, 12), Q::from_integer(2));
        assert_eq!(oddness_upper_bound(14, 0), Q::new(2, 1));
        assert_eq!(oddness_upper_bound(7, 0) * 7, Q::from_integer(7));
        let z = cyclic_connectivity(&petersen(), 7).unwrap();
        assert_eq!(ratio_check(&petersen(), 2, &z), RatioCheck::Exempt);
    }

    #[test]
    fn class_bounds_are_ordered() {
        assert!(RatioClass::Any.bound() < RatioClass::Cyclically3Connected.bound());
        assert!(
            RatioClass::Cyclically3Connected.bound() < RatioClass::Cyclically5Connected.bound()
        );
        assert!(RatioClass::Any.bound() > Q::new(541, 100));
    }
}
