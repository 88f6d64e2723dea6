//! Back capacity 1, stomach capacity 2.

use super::{one_unit_haul, out_and_back, Route, StrategyOutcome};
use crate::closed_forms::{b1_one_way_exact, b1_round_trip_exact};
use crate::error::{Error, Result};
use crate::problem::{Accounting, ProblemSpec, Variant};
use crate::rational::{r, Rational};
use crate::sim::Event;

fn pow3(k: u32) -> u32 {
    3u32.pow(k)
}

/// One-way itinerary for `N >= 2` plus the index of a moment when the camel
/// idles at the border with nothing in its stomach, if there is one.
///
/// With `N <= 3^(k+1)/2 + 3/2` and `n = (3^k + 1)/2`, the camel hauls `n`
/// bananas to `x = (N - n - 1)/(2n - 1)` and continues from there as if it
/// had started at the border with `n + 1` bananas and eaten the first.
fn one_way_plan(bananas: &Rational) -> (Vec<Event>, Option<usize>) {
    if *bananas == 2 {
        return (vec![Event::Eat, Event::Eat, Event::Move(r(2, 1))], Some(0));
    }
    let mut k = 0;
    while *bananas > r(i64::from(pow3(k + 1)) + 3, 2) {
        k += 1;
    }
    let n = pow3(k).div_ceil(2);
    let x = (bananas - i64::from(n) - 1) / (2 * i64::from(n) - 1);
    let meals = u32::try_from(bananas.floor_i64()).expect("count") - n;
    let haul = one_unit_haul(&bananas.fract(), meals, n, 1, &x);
    let (rest, _) = one_way_plan(&Rational::from(n + 1));
    debug_assert_eq!(rest.first(), Some(&Event::Eat));
    let mut events = haul.events;
    events.extend(rest.into_iter().skip(1));
    (events, haul.idle_at_border)
}

pub fn b1_one_way_strategy(bananas: &Rational) -> Result<StrategyOutcome> {
    let claimed_distance = b1_one_way_exact(bananas)?;
    let spec = ProblemSpec::one_way(1, 2, bananas.clone())?;
    let (itinerary, _) = one_way_plan(bananas);
    Ok(StrategyOutcome {
        itinerary,
        claimed_distance,
        spec,
    })
}

/// Puts one banana at position `j` using `3^j` bananas and returns to the
/// border with an empty stomach.
fn delivery_events(j: u32) -> Vec<Event> {
    let shuttle = [
        Event::Eat,
        Event::Eat,
        Event::Pickup(1),
        Event::Move(Rational::one()),
        Event::Drop(1),
    ];
    let back = Event::Move(r(-1, 1));
    match j {
        0 => Vec::new(),
        1 => shuttle.into_iter().chain([back]).collect(),
        _ => {
            let trips = pow3(j - 1);
            let mut events = Vec::new();
            for t in 0..trips {
                events.extend(shuttle.iter().cloned());
                if t + 1 < trips {
                    events.push(back.clone());
                }
            }
            // One unit of fuel is left at position 1: skip the first meal.
            events.extend(delivery_events(j - 1).into_iter().skip(1));
            events.push(Event::Eat);
            events.push(back);
            events
        }
    }
}

pub fn b1_delivery_strategy(j: u32) -> Result<StrategyOutcome> {
    let target = Rational::from(j);
    let spec = ProblemSpec::new(
        1,
        2,
        Rational::from(pow3(j)),
        Variant::Delivery {
            target: target.clone(),
        },
        Accounting::CountAll,
    )?;
    Ok(StrategyOutcome {
        itinerary: delivery_events(j),
        claimed_distance: target,
        spec,
    })
}

/// Round trip for `N >= 1`.
///
/// Below 2 bananas the camel walks straight out and back. Otherwise, with
/// `N <= 2 * 3^(k+1)`, it first delivers one banana to each of the positions
/// `1..=k`, then runs the one-way plan with the remaining bananas but bends
/// the final two-mile leg back to position `k`, and walks home eating the
/// delivered bananas.
pub fn b1_round_trip_strategy(bananas: &Rational) -> Result<StrategyOutcome> {
    let claimed_distance = b1_round_trip_exact(bananas)?;
    let spec = ProblemSpec::round_trip(1, 2, bananas.clone())?;
    if *bananas < 2 {
        return Ok(StrategyOutcome {
            itinerary: out_and_back(&spec, &(bananas / 2)),
            claimed_distance,
            spec,
        });
    }
    let mut k = 0;
    while *bananas > 2 * i64::from(pow3(k + 1)) {
        k += 1;
    }
    let delivered = (pow3(k + 1) - 3) / 2;
    let rest = bananas - i64::from(delivered);
    let reach = b1_one_way_exact(&rest)?;
    let turn = (&reach + i64::from(k)) / 2;
    debug_assert_eq!(turn, claimed_distance);

    let (mut one_way, idle) = one_way_plan(&rest);
    // Without deliveries the split point is irrelevant.
    let Some(idle) = idle.or((k == 0).then_some(0)) else {
        return Err(Error::Unsupported(format!(
            "round trip with {bananas} bananas: the fractional start cannot be \
             scheduled before the deliveries"
        )));
    };
    let last = one_way.pop();
    debug_assert_eq!(last, Some(Event::Move(r(2, 1))));

    let mut route = Route::new();
    route.events.extend(one_way.drain(..idle));
    for j in 1..=k {
        route.events.extend(delivery_events(j));
    }
    route.events.extend(one_way);
    route.pos = &reach - 2;
    route.goto(&turn);
    route.goto(&Rational::from(k));
    for _ in 0..k {
        route.eat();
        route.walk(&r(-1, 1));
    }
    Ok(StrategyOutcome {
        itinerary: route.events,
        claimed_distance,
        spec,
    })
}
