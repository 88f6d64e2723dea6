//! Constructive itineraries that realize the lower bounds.
//!
//! Every generator returns concrete events together with the distance it
//! claims; [`StrategyOutcome::validate`] replays them through the simulator.
//! Events are relative moves, so a sub-itinerary can be spliced in at any
//! position without translation.

mod b1;
mod b2;
mod original;

use serde::Serialize;

pub use b1::{b1_delivery_strategy, b1_one_way_strategy, b1_round_trip_strategy};
pub use b2::{b2_round_trip_strategy, b2_stomach_credit_strategy};
pub use original::original_one_way_strategy;

use crate::error::{Error, Result};
use crate::problem::ProblemSpec;
use crate::rational::Rational;
use crate::sim::{run_successful, Event, SimReport};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StrategyOutcome {
    pub itinerary: Vec<Event>,
    pub claimed_distance: Rational,
    pub spec: ProblemSpec,
}

impl StrategyOutcome {
    /// Replays the itinerary and checks the success condition and the
    /// claimed distance.
    pub fn validate(&self) -> Result<SimReport> {
        let report = run_successful(&self.spec, &self.itinerary)?;
        if report.farthest != self.claimed_distance {
            return Err(Error::Unsupported(format!(
                "strategy claims {} but reaches {}",
                self.claimed_distance, report.farthest
            )));
        }
        Ok(report)
    }
}

/// Event list with the camel's position relative to where the list starts.
#[derive(Debug, Default)]
pub(crate) struct Route {
    pub events: Vec<Event>,
    pub pos: Rational,
}

impl Route {
    pub fn new() -> Self {
        Self::default()
    }

    /// Zero-length legs are omitted.
    pub fn goto(&mut self, target: &Rational) {
        let delta = target - &self.pos;
        if !delta.is_zero() {
            self.events.push(Event::Move(delta));
            self.pos = target.clone();
        }
    }

    pub fn walk(&mut self, delta: &Rational) {
        let target = &self.pos + delta;
        self.goto(&target);
    }

    pub fn eat(&mut self) {
        self.events.push(Event::Eat);
    }

    pub fn pickup(&mut self, n: u32) {
        self.events.push(Event::Pickup(n));
    }

    pub fn drop(&mut self, n: u32) {
        self.events.push(Event::Drop(n));
    }

    /// Appends a sub-itinerary that moves the camel by `displacement`.
    pub fn splice(&mut self, events: impl IntoIterator<Item = Event>, displacement: &Rational) {
        self.events.extend(events);
        self.pos = &self.pos + displacement;
    }
}

/// Result of [`one_unit_haul`].
pub(crate) struct Haul {
    pub events: Vec<Event>,
    /// Event index at which the camel is back at the border with an empty
    /// stomach and empty back, if the schedule passes through such a moment.
    pub idle_at_border: Option<usize>,
}

struct Excursion {
    meals: u32,
    fuel: Rational,
    assigned: bool,
}

/// Moves `units` loads of `unit` bananas from the border to `x` (`0 <= x <= 1`),
/// arriving with exactly one unit of fuel in the stomach.
///
/// The camel starts at 0 with `stomach` fuel and eats `meals` whole bananas,
/// all at the border, so `stomach + meals = (2 units - 1) x + 1`. Meals are
/// taken in pairs except possibly the first. Each paired meal has one load
/// assigned to it that goes straight to `x`; leftover miles advance the
/// frontmost partially moved load, or start a new one from the border. The
/// camel walks forward only when loaded and backward only when empty.
pub(crate) fn one_unit_haul(
    stomach: &Rational,
    meals: u32,
    units: u32,
    unit: u32,
    x: &Rational,
) -> Haul {
    let fuel = stomach + Rational::from(meals);
    debug_assert_eq!(fuel, x * (2 * i64::from(units) - 1) + 1);
    debug_assert!(!x.is_negative() && *x <= 1);
    let mut route = Route::new();
    if x.is_zero() {
        // Nothing to carry: just top the stomach up to one unit.
        debug_assert!(stomach.is_zero() && meals == 1);
        route.eat();
        return Haul {
            events: route.events,
            idle_at_border: Some(0),
        };
    }

    let pairs = u32::try_from((&fuel / 2).floor_i64()).expect("pair count");
    let first = &fuel - Rational::from(2 * pairs);
    let mut plan = Vec::new();
    if first.is_positive() {
        plan.push(Excursion {
            meals: meals - 2 * pairs,
            fuel: first,
            assigned: false,
        });
    }
    plan.extend((0..pairs).map(|_| Excursion {
        meals: 2,
        fuel: Rational::from(2i64),
        assigned: true,
    }));

    let mut at_border = units;
    let mut reserved = pairs;
    let mut partials: Vec<Rational> = Vec::new();
    let mut delivered = 0;
    let mut idle_at_border = stomach.is_zero().then_some(0);
    let last = plan.len() - 1;

    for (i, trip) in plan.iter().enumerate() {
        for _ in 0..trip.meals {
            route.eat();
        }
        let mut budget = if i == last {
            // Forward F plus backward F - x, keeping one unit at the end.
            (&trip.fuel - 1 + x) / 2
        } else {
            &trip.fuel / 2
        };
        if trip.assigned {
            reserved -= 1;
            at_border -= 1;
            route.pickup(unit);
            route.goto(x);
            route.drop(unit);
            delivered += 1;
            budget -= x;
        }
        while budget.is_positive() {
            let source = if route.pos == *x && !partials.is_empty() {
                let (idx, _) = partials
                    .iter()
                    .enumerate()
                    .max_by(|a, b| a.1.cmp(b.1))
                    .expect("nonempty");
                partials.swap_remove(idx)
            } else {
                assert!(at_border > reserved, "haul schedule ran out of loads");
                at_border -= 1;
                Rational::zero()
            };
            route.goto(&source);
            route.pickup(unit);
            let step = (x - &source).min(budget.clone());
            let dest = &source + &step;
            route.goto(&dest);
            route.drop(unit);
            budget -= step;
            if dest == *x {
                delivered += 1;
            } else {
                partials.push(dest);
            }
        }
        if i != last {
            route.goto(&Rational::zero());
            if i == 0 && idle_at_border.is_none() {
                idle_at_border = Some(route.events.len());
            }
        }
    }
    assert_eq!(route.pos, *x, "haul must finish at its target");
    assert_eq!(delivered, units, "every load must reach the target");
    Haul {
        events: route.events,
        idle_at_border,
    }
}

/// Walks straight out `distance` and back, taking every banana along and
/// eating whenever the stomach runs dry. Needs `floor(N) - meals_at_start`
/// to fit on the back and `N = 2 distance`.
pub(crate) fn out_and_back(spec: &ProblemSpec, distance: &Rational) -> Vec<Event> {
    let mut route = Route::new();
    let mut stomach = spec.initial_stomach();
    let mut whole = spec.whole_bananas();
    let meals = if stomach.is_zero() {
        whole.min(2)
    } else {
        whole.min(1)
    };
    for _ in 0..meals {
        route.eat();
        stomach += Rational::one();
    }
    whole -= meals;
    assert!(whole <= spec.back_capacity, "load exceeds back capacity");
    if whole > 0 {
        route.pickup(whole);
    }
    for leg in [distance.clone(), -distance] {
        let mut left = leg.abs();
        let dir = if leg.is_negative() { -1 } else { 1 };
        while left.is_positive() {
            if stomach.is_zero() {
                route.eat();
                stomach = Rational::one();
            }
            let step = left.clone().min(stomach.clone());
            route.walk(&(&step * dir));
            stomach -= &step;
            left -= step;
        }
    }
    route.events
}
