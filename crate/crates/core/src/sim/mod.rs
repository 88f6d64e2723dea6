//! Rules engine: applies itinerary events to a world state and reports what
//! an itinerary achieves.

mod format;
mod potential;

use std::collections::BTreeMap;

use serde::Serialize;

pub use format::{format_itinerary, parse_itinerary};
pub use potential::{assert_monotone, potential_trace, Checkpoint, PotentialTrace};

use crate::error::{Error, Result, Violation};
use crate::problem::{initial_state, Accounting, ProblemSpec, Variant};
use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "event", content = "arg", rename_all = "lowercase")]
pub enum Event {
    /// Signed displacement; fuel drops by its absolute value.
    Move(Rational),
    Eat,
    Pickup(u32),
    Drop(u32),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WorldState {
    pub camel_pos: Rational,
    pub stomach: Rational,
    pub load: u32,
    /// Position -> number of whole bananas; empty entries are removed.
    pub caches: BTreeMap<Rational, u32>,
    /// Whole bananas eaten so far.
    pub eaten: u32,
}

impl WorldState {
    pub fn new(stomach: Rational, at_border: u32) -> Self {
        let mut caches = BTreeMap::new();
        if at_border > 0 {
            caches.insert(Rational::zero(), at_border);
        }
        WorldState {
            camel_pos: Rational::zero(),
            stomach,
            load: 0,
            caches,
            eaten: 0,
        }
    }

    pub fn cached_at(&self, pos: &Rational) -> u32 {
        self.caches.get(pos).copied().unwrap_or(0)
    }

    pub fn total_cached(&self) -> u32 {
        self.caches.values().sum()
    }

    /// Whole bananas not yet eaten.
    pub fn remaining(&self) -> u32 {
        self.total_cached() + self.load
    }

    fn take_cached(&mut self, count: u32) {
        let pos = self.camel_pos.clone();
        let entry = self.caches.get_mut(&pos).expect("cache present");
        *entry -= count;
        if *entry == 0 {
            self.caches.remove(&pos);
        }
    }
}

/// Applies one event. Eating prefers a cache at the camel's position and
/// falls back to the load.
// Rejections are rare and the oracle only inspects `is_ok`, so the wide
// error costs nothing on the hot path.
#[allow(clippy::result_large_err)]
pub fn apply_event(
    spec: &ProblemSpec,
    state: &WorldState,
    event: &Event,
) -> std::result::Result<WorldState, Violation> {
    let mut next = state.clone();
    match event {
        Event::Move(delta) => {
            if delta.is_zero() {
                return Err(Violation::ZeroMove);
            }
            let distance = delta.abs();
            if distance > state.stomach {
                return Err(Violation::OutOfFuel {
                    stomach: state.stomach.clone(),
                    distance,
                });
            }
            let target = &state.camel_pos + delta;
            if target.is_negative() {
                return Err(Violation::NegativePosition(target));
            }
            next.camel_pos = target;
            next.stomach -= distance;
        }
        Event::Eat => {
            if state.stomach > i64::from(spec.stomach_capacity) - 1 {
                return Err(Violation::StomachFull);
            }
            if state.cached_at(&state.camel_pos) > 0 {
                next.take_cached(1);
            } else if state.load > 0 {
                next.load -= 1;
            } else {
                return Err(Violation::NothingToEat);
            }
            next.stomach += Rational::one();
            next.eaten += 1;
        }
        Event::Pickup(count) => {
            if *count == 0 {
                return Err(Violation::ZeroCount);
            }
            let available = state.cached_at(&state.camel_pos);
            if available < *count {
                return Err(Violation::NotEnoughCached {
                    requested: *count,
                    available,
                });
            }
            if state.load + count > spec.back_capacity {
                return Err(Violation::OverCapacity {
                    requested: *count,
                    capacity: spec.back_capacity,
                });
            }
            next.take_cached(*count);
            next.load += count;
        }
        Event::Drop(count) => {
            if *count == 0 {
                return Err(Violation::ZeroCount);
            }
            if state.load < *count {
                return Err(Violation::NotEnoughCarried {
                    requested: *count,
                    carried: state.load,
                });
            }
            next.load -= count;
            *next.caches.entry(state.camel_pos.clone()).or_insert(0) += count;
        }
    }
    Ok(next)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SimReport {
    pub farthest: Rational,
    pub final_state: WorldState,
    pub bananas_eaten: u32,
    pub returned: bool,
    /// Fuel charged to the run: the fractional start plus every whole banana
    /// eaten, minus the final stomach content under stomach credit.
    pub counted_consumption: Rational,
    /// Whether the variant's success condition holds.
    pub success: bool,
}

/// Runs an itinerary from the initial state. Fails on the first illegal
/// event, reporting its 1-based index.
pub fn run(spec: &ProblemSpec, itinerary: &[Event]) -> Result<SimReport> {
    spec.validate()?;
    let mut state = initial_state(spec);
    let mut farthest = Rational::zero();
    for (i, event) in itinerary.iter().enumerate() {
        state = apply_event(spec, &state, event).map_err(|reason| Error::IllegalEvent {
            index: i + 1,
            reason: Box::new(reason),
        })?;
        if state.camel_pos > farthest {
            farthest = state.camel_pos.clone();
        }
    }
    let returned = state.camel_pos.is_zero();
    let mut counted = spec.initial_stomach() + Rational::from(state.eaten);
    if spec.accounting == Accounting::CreditFinalStomach {
        counted -= &state.stomach;
    }
    let success = match &spec.variant {
        Variant::OneWay => true,
        Variant::RoundTrip => returned,
        Variant::Delivery { target } => returned && state.cached_at(target) > 0,
    };
    Ok(SimReport {
        farthest,
        bananas_eaten: state.eaten,
        returned,
        counted_consumption: counted,
        success,
        final_state: state,
    })
}

/// [`run`], additionally requiring the variant's success condition.
pub fn run_successful(spec: &ProblemSpec, itinerary: &[Event]) -> Result<SimReport> {
    let report = run(spec, itinerary)?;
    if !report.success {
        return Err(Error::NotSuccessful(spec.variant.name()));
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::r;

    fn mv(num: i64, den: i64) -> Event {
        Event::Move(r(num, den))
    }

    fn state(stomach: Rational, caches: &[(i64, u32)]) -> WorldState {
        WorldState {
            camel_pos: Rational::zero(),
            stomach,
            load: 0,
            caches: caches
                .iter()
                .map(|(p, c)| (Rational::from(*p), *c))
                .collect(),
            eaten: 0,
        }
    }

    #[test]
    fn eat_rejected_with_full_stomach() {
        let spec = ProblemSpec::one_way(1, 2, r(3, 1)).unwrap();
        let s = state(r(2, 1), &[(0, 1)]);
        assert_eq!(
            apply_event(&spec, &s, &Event::Eat),
            Err(Violation::StomachFull)
        );
        let s = state(r(3, 2), &[(0, 1)]);
        assert_eq!(
            apply_event(&spec, &s, &Event::Eat),
            Err(Violation::StomachFull)
        );
    }

    #[test]
    fn move_rejected_without_fuel() {
        let spec = ProblemSpec::one_way(1, 2, r(3, 1)).unwrap();
        let s = state(r(1, 2), &[]);
        assert!(matches!(
            apply_event(&spec, &s, &mv(1, 1)),
            Err(Violation::OutOfFuel { .. })
        ));
    }

    #[test]
    fn one_banana_one_mile() {
        let spec = ProblemSpec::one_way(1, 2, r(1, 1)).unwrap();
        let s = state(Rational::zero(), &[(0, 1)]);
        let s = apply_event(&spec, &s, &Event::Eat).unwrap();
        let s = apply_event(&spec, &s, &mv(1, 1)).unwrap();
        assert_eq!(s.camel_pos, r(1, 1));
        assert_eq!(s.stomach, Rational::zero());
        assert!(s.caches.is_empty());
    }

    #[test]
    fn rejects_negative_positions_and_bad_counts() {
        let spec = ProblemSpec::one_way(1, 2, r(3, 1)).unwrap();
        let s = state(r(1, 1), &[(0, 2)]);
        assert!(matches!(
            apply_event(&spec, &s, &mv(-1, 2)),
            Err(Violation::NegativePosition(_))
        ));
        assert_eq!(
            apply_event(&spec, &s, &Event::Pickup(2)),
            Err(Violation::OverCapacity {
                requested: 2,
                capacity: 1
            })
        );
        assert!(matches!(
            apply_event(&spec, &s, &Event::Drop(1)),
            Err(Violation::NotEnoughCarried { .. })
        ));
        assert_eq!(apply_event(&spec, &s, &mv(0, 1)), Err(Violation::ZeroMove));
        assert_eq!(
            apply_event(&spec, &s, &Event::Pickup(0)),
            Err(Violation::ZeroCount)
        );
    }

    #[test]
    fn eat_prefers_cache_over_load() {
        let spec = ProblemSpec::one_way(2, 2, r(3, 1)).unwrap();
        let mut s = state(Rational::zero(), &[(0, 2)]);
        s = apply_event(&spec, &s, &Event::Pickup(1)).unwrap();
        s = apply_event(&spec, &s, &Event::Eat).unwrap();
        assert_eq!(s.load, 1);
        assert!(s.caches.is_empty());
        s = apply_event(&spec, &s, &Event::Eat).unwrap();
        assert_eq!(s.load, 0);
        assert_eq!(s.eaten, 2);
    }

    #[test]
    fn original_camel_eats_only_when_empty() {
        let spec = ProblemSpec::one_way(1, 1, r(2, 1)).unwrap();
        let s = state(r(1, 4), &[(0, 2)]);
        assert_eq!(
            apply_event(&spec, &s, &Event::Eat),
            Err(Violation::StomachFull)
        );
        let s = state(Rational::zero(), &[(0, 2)]);
        assert!(apply_event(&spec, &s, &Event::Eat).is_ok());
    }

    #[test]
    fn two_bananas_two_miles() {
        let spec = ProblemSpec::one_way(1, 2, r(2, 1)).unwrap();
        let it = [Event::Eat, Event::Pickup(1), mv(1, 1), Event::Eat, mv(1, 1)];
        let rep = run(&spec, &it).unwrap();
        assert_eq!(rep.farthest, r(2, 1));
        assert!(!rep.returned);
        assert_eq!(rep.bananas_eaten, 2);
    }

    #[test]
    fn two_bananas_one_mile_and_back() {
        let spec = ProblemSpec::round_trip(2, 2, r(2, 1)).unwrap();
        let it = [
            Event::Eat,
            Event::Pickup(1),
            mv(1, 1),
            Event::Eat,
            mv(-1, 1),
        ];
        let rep = run_successful(&spec, &it).unwrap();
        assert_eq!(rep.farthest, r(1, 1));
        assert!(rep.returned);
    }

    #[test]
    fn empty_itinerary() {
        let spec = ProblemSpec::one_way(1, 2, r(5, 2)).unwrap();
        let rep = run(&spec, &[]).unwrap();
        assert_eq!(rep.farthest, Rational::zero());
        assert_eq!(rep.bananas_eaten, 0);
        assert!(rep.returned);
    }

    #[test]
    fn run_reports_one_based_index() {
        let spec = ProblemSpec::one_way(1, 2, r(3, 1)).unwrap();
        let err = run(&spec, &[Event::Eat, Event::Eat, Event::Eat]).unwrap_err();
        assert_eq!(
            err,
            Error::IllegalEvent {
                index: 3,
                reason: Box::new(Violation::StomachFull)
            }
        );
        assert_eq!(err.to_string(), "stomach full at event 3");
    }

    #[test]
    fn round_trip_requires_return() {
        let spec = ProblemSpec::round_trip(1, 2, r(1, 1)).unwrap();
        let it = [Event::Eat, mv(1, 2)];
        assert!(!run(&spec, &it).unwrap().success);
        assert_eq!(
            run_successful(&spec, &it),
            Err(Error::NotSuccessful("round-trip"))
        );
    }

    #[test]
    fn delivery_requires_banana_at_target() {
        let spec = ProblemSpec::new(
            1,
            2,
            r(3, 1),
            Variant::Delivery { target: r(1, 1) },
            Accounting::CountAll,
        )
        .unwrap();
        let it = [
            Event::Eat,
            Event::Eat,
            Event::Pickup(1),
            mv(1, 1),
            Event::Drop(1),
            mv(-1, 1),
        ];
        assert!(run(&spec, &it).unwrap().success);
        let it = [
            Event::Eat,
            Event::Eat,
            Event::Pickup(1),
            mv(1, 1),
            mv(-1, 1),
        ];
        assert!(!run(&spec, &it).unwrap().success);
    }

    #[test]
    fn stomach_credit_refunds_final_fuel() {
        let spec = ProblemSpec::new(
            2,
            2,
            r(5, 2),
            Variant::RoundTrip,
            Accounting::CreditFinalStomach,
        )
        .unwrap();
        // Start with 1/2, eat one, walk 1/2 out and back, finish with 1/2.
        let it = [Event::Eat, mv(1, 2), mv(-1, 2)];
        let rep = run(&spec, &it).unwrap();
        assert_eq!(rep.final_state.stomach, r(1, 2));
        assert_eq!(rep.counted_consumption, r(1, 1));
    }
}
