//! Problem instances: capacities, banana budget, objective and accounting.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::sim::WorldState;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Variant {
    OneWay,
    RoundTrip,
    /// Leave one unconsumed banana at `target` and finish at the border.
    Delivery {
        target: Rational,
    },
}

impl Variant {
    pub fn name(&self) -> &'static str {
        match self {
            Variant::OneWay => "one-way",
            Variant::RoundTrip => "round-trip",
            Variant::Delivery { .. } => "delivery",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Accounting {
    CountAll,
    /// Fuel left in the stomach at the finish is not counted as used.
    CreditFinalStomach,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProblemSpec {
    pub back_capacity: u32,
    pub stomach_capacity: u32,
    pub bananas: Rational,
    pub variant: Variant,
    pub accounting: Accounting,
}

impl ProblemSpec {
    /// Validated constructor.
    pub fn new(
        back_capacity: u32,
        stomach_capacity: u32,
        bananas: Rational,
        variant: Variant,
        accounting: Accounting,
    ) -> Result<Self> {
        let spec = ProblemSpec {
            back_capacity,
            stomach_capacity,
            bananas,
            variant,
            accounting,
        };
        spec.validate()?;
        Ok(spec)
    }

    pub fn one_way(back: u32, stomach: u32, bananas: Rational) -> Result<Self> {
        Self::new(
            back,
            stomach,
            bananas,
            Variant::OneWay,
            Accounting::CountAll,
        )
    }

    pub fn round_trip(back: u32, stomach: u32, bananas: Rational) -> Result<Self> {
        Self::new(
            back,
            stomach,
            bananas,
            Variant::RoundTrip,
            Accounting::CountAll,
        )
    }

    pub fn validate(&self) -> Result<()> {
        let invalid = |msg: &str| Err(Error::InvalidSpec(msg.to_string()));
        if self.back_capacity == 0 {
            return invalid("back capacity must be positive");
        }
        if !(1..=2).contains(&self.stomach_capacity) {
            return invalid("stomach capacity must be 1 or 2");
        }
        if !self.bananas.is_positive() {
            return invalid("banana count must be positive");
        }
        if let Variant::Delivery { target } = &self.variant {
            if self.stomach_capacity != 2 || self.back_capacity > 2 {
                return invalid("delivery requires stomach 2 and back capacity 1 or 2");
            }
            if target.is_negative() {
                return invalid("delivery target must be nonnegative");
            }
        }
        if self.accounting == Accounting::CreditFinalStomach && self.variant != Variant::RoundTrip {
            return invalid("stomach credit only applies to round trips");
        }
        Ok(())
    }

    /// Whole bananas initially cached at the border.
    pub fn whole_bananas(&self) -> u32 {
        u32::try_from(self.bananas.floor_i64()).expect("banana count fits in u32")
    }

    /// Fractional start: `N - floor(N)` units already in the stomach.
    pub fn initial_stomach(&self) -> Rational {
        self.bananas.fract()
    }
}

/// Camel at the border with an empty back, the fractional part of `N` in its
/// stomach and `floor(N)` bananas cached at position 0.
pub fn initial_state(spec: &ProblemSpec) -> WorldState {
    WorldState::new(spec.initial_stomach(), spec.whole_bananas())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::r;

    fn cache_at_zero(state: &WorldState) -> u32 {
        state.cached_at(&Rational::zero())
    }

    #[test]
    fn integer_start() {
        let s = initial_state(&ProblemSpec::one_way(1, 2, r(3, 1)).unwrap());
        assert_eq!(s.camel_pos, Rational::zero());
        assert_eq!(s.stomach, Rational::zero());
        assert_eq!(s.load, 0);
        assert_eq!(cache_at_zero(&s), 3);
    }

    #[test]
    fn fractional_start_puts_the_fraction_in_the_stomach() {
        let s = initial_state(&ProblemSpec::one_way(2, 2, r(7, 2)).unwrap());
        assert_eq!(s.stomach, r(1, 2));
        assert_eq!(cache_at_zero(&s), 3);
    }

    #[test]
    fn original_problem_start() {
        let s = initial_state(&ProblemSpec::one_way(1, 1, r(2, 1)).unwrap());
        assert_eq!(s.stomach, Rational::zero());
        assert_eq!(cache_at_zero(&s), 2);
    }

    #[test]
    fn fractional_below_one_has_empty_cache() {
        let s = initial_state(&ProblemSpec::one_way(1, 2, r(1, 3)).unwrap());
        assert_eq!(s.stomach, r(1, 3));
        assert!(s.caches.is_empty());
    }

    #[test]
    fn rejects_invalid_specs() {
        assert!(ProblemSpec::one_way(0, 2, r(3, 1)).is_err());
        assert!(ProblemSpec::one_way(1, 3, r(3, 1)).is_err());
        assert!(ProblemSpec::one_way(1, 2, r(0, 1)).is_err());
        assert!(ProblemSpec::new(
            1,
            2,
            r(3, 1),
            Variant::OneWay,
            Accounting::CreditFinalStomach
        )
        .is_err());
        let delivery = Variant::Delivery { target: r(1, 1) };
        assert!(ProblemSpec::new(3, 2, r(3, 1), delivery.clone(), Accounting::CountAll).is_err());
        assert!(ProblemSpec::new(1, 2, r(3, 1), delivery, Accounting::CountAll).is_ok());
    }

    proptest::proptest! {
        #[test]
        fn initial_state_conserves_bananas(num in 1i64..400, den in 1i64..16) {
            let n = r(num, den);
            let s = initial_state(&ProblemSpec::one_way(2, 2, n.clone()).unwrap());
            let total = &s.stomach + Rational::from(s.total_cached());
            proptest::prop_assert_eq!(total, n);
        }
    }
}
