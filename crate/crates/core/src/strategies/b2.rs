//! Back capacity 2, stomach capacity 2, round trips.

use super::{one_unit_haul, out_and_back, Route, StrategyOutcome};
use crate::closed_forms::{b2_plan, p_inv, B2Plan};
use crate::error::{Error, Result};
use crate::problem::{Accounting, ProblemSpec, Variant};
use crate::rational::{r, Rational};
use crate::sim::Event;

/// Round trip with `2^k` bananas from an empty stomach, `k >= 1`, turning
/// back `s <= 1/2` short of `k` and coming home with `2s` in the stomach.
///
/// For `k >= 2` the camel ferries `2^(k-1)` bananas to position 1 in pairs,
/// arrives there with one unit of fuel, runs the `k - 1` plan from there
/// without its first meal, and eats the one spare banana for the last mile.
fn power_of_two(k: u32, s: &Rational) -> Vec<Event> {
    debug_assert!(k >= 1 && *s <= r(1, 2));
    if k == 1 {
        let mut route = Route::new();
        route.eat();
        route.eat();
        route.walk(&(Rational::one() - s));
        route.goto(&Rational::zero());
        return route.events;
    }
    let trips = 1u32 << (k - 2);
    let mut events = Vec::new();
    for t in 0..trips {
        events.extend([
            Event::Eat,
            Event::Eat,
            Event::Pickup(2),
            Event::Move(Rational::one()),
            Event::Drop(2),
        ]);
        if t + 1 < trips {
            events.push(Event::Move(r(-1, 1)));
        }
    }
    events.extend(power_of_two(k - 1, s).into_iter().skip(1));
    events.extend([Event::Eat, Event::Move(r(-1, 1))]);
    events
}

fn plan_events(spec: &ProblemSpec, plan: &B2Plan) -> Vec<Event> {
    let bananas = &spec.bananas;
    let whole = spec.whole_bananas();
    match plan {
        B2Plan::Direct => out_and_back(spec, &(bananas / 2)),
        B2Plan::PowerOfTwo { k } => power_of_two(*k, &Rational::zero()),
        B2Plan::EmptyStomachHaul { k, x } => {
            // Burn N - 2^k ferrying 2^(k-1) pairs to x, arriving empty.
            let pairs = 1u32 << (k - 1);
            let mut route = Route::new();
            for _ in 0..whole - 2 * pairs {
                route.eat();
            }
            for t in 0..pairs {
                route.pickup(2);
                route.goto(x);
                route.drop(2);
                if t + 1 < pairs {
                    route.goto(&Rational::zero());
                }
            }
            route.splice(power_of_two(*k, &(x / 2)), &Rational::zero());
            route.goto(&Rational::zero());
            route.events
        }
        B2Plan::OneUnitHaul { k, x } => {
            let pairs = 1u32 << (k - 1);
            let haul = one_unit_haul(&bananas.fract(), whole - 2 * pairs, pairs, 2, x);
            let mut route = Route::new();
            route.splice(haul.events, x);
            route.splice(
                power_of_two(*k, &Rational::zero()).into_iter().skip(1),
                &Rational::zero(),
            );
            route.eat();
            route.goto(&Rational::zero());
            route.events
        }
    }
}

/// Round trip for `N >= 2`, reaching the lower bound of
/// [`crate::closed_forms::b2_round_trip_bounds`].
pub fn b2_round_trip_strategy(bananas: &Rational) -> Result<StrategyOutcome> {
    let plan = b2_plan(bananas)?;
    let spec = ProblemSpec::round_trip(2, 2, bananas.clone())?;
    Ok(StrategyOutcome {
        itinerary: plan_events(&spec, &plan),
        claimed_distance: plan.distance(bananas),
        spec,
    })
}

/// Round trip reaching `p_2^{-1}(N)` when food left in the stomach at the end
/// is not counted as consumed.
///
/// For `2^k <= N < 2^(k+1)` the camel starts with `N' = N + 2 - N / 2^k`
/// bananas and follows the one-unit haul plan to `x = N / 2^k - 1`; it comes
/// home with `1 - x` still in its stomach, so it consumes exactly `N`. The
/// returned spec carries `N'` and credits the final stomach.
pub fn b2_stomach_credit_strategy(bananas: &Rational) -> Result<StrategyOutcome> {
    if *bananas < 2 {
        return Err(Error::Domain {
            what: "b2_stomach_credit",
            value: bananas.clone(),
            requires: "N >= 2",
        });
    }
    let claimed_distance = p_inv(2, bananas)?;
    let credit =
        |n: Rational| ProblemSpec::new(2, 2, n, Variant::RoundTrip, Accounting::CreditFinalStomach);
    if *bananas < 4 {
        let spec = credit(bananas.clone())?;
        return Ok(StrategyOutcome {
            itinerary: out_and_back(&spec, &(bananas / 2)),
            claimed_distance,
            spec,
        });
    }
    let k = claimed_distance.floor_i64();
    let pow = Rational::from(2i64).pow(k);
    let x = bananas / &pow - 1;
    let started = bananas + 2 - bananas / &pow;
    let spec = credit(started)?;
    let plan = B2Plan::OneUnitHaul {
        k: u32::try_from(k).expect("small k"),
        x,
    };
    debug_assert_eq!(plan.distance(&spec.bananas), claimed_distance);
    Ok(StrategyOutcome {
        itinerary: plan_events(&spec, &plan),
        claimed_distance,
        spec,
    })
}
