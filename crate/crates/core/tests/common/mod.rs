//! Seeded generator of random legal itineraries.

use dromedary::rational::r;
use dromedary::sim::apply_event;
use dromedary::{initial_state, Event, ProblemSpec, Rational};
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

/// Random spec with `S = 2`, `B` in {1, 2} and `N` a multiple of 1/4 in
/// `[1, 6]`.
pub fn random_spec(rng: &mut ChaCha8Rng) -> ProblemSpec {
    let back = rng.gen_range(1..=2);
    let bananas = r(rng.gen_range(4..=24), 4);
    if rng.gen_bool(0.5) {
        ProblemSpec::one_way(back, 2, bananas).unwrap()
    } else {
        ProblemSpec::round_trip(back, 2, bananas).unwrap()
    }
}

/// Up to `max_len` events, each drawn among moves on a 1/12 grid, meals,
/// pickups and drops and kept only if the simulator accepts it.
pub fn random_itinerary(rng: &mut ChaCha8Rng, spec: &ProblemSpec, max_len: usize) -> Vec<Event> {
    let mut state = initial_state(spec);
    let mut events = Vec::new();
    while events.len() < max_len {
        let fuel_steps = state.stomach.scaled_integer(12).unwrap_or(0).min(24);
        let mut candidates = vec![Event::Eat];
        for n in 1..=spec.back_capacity {
            candidates.push(Event::Pickup(n));
            candidates.push(Event::Drop(n));
        }
        for _ in 0..4 {
            if fuel_steps > 0 {
                let m = rng.gen_range(1..=fuel_steps);
                let sign = if rng.gen_bool(0.65) { 1 } else { -1 };
                candidates.push(Event::Move(r(sign * m, 12)));
            }
        }
        candidates.shuffle(rng);
        let next = candidates
            .into_iter()
            .find_map(|e| apply_event(spec, &state, &e).ok().map(|s| (e, s)));
        match next {
            Some((e, s)) => {
                events.push(e);
                state = s;
            }
            None => break,
        }
    }
    events
}

/// Total distance walked.
#[allow(dead_code)]
pub fn walked(events: &[Event]) -> Rational {
    events
        .iter()
        .filter_map(|e| match e {
            Event::Move(d) => Some(d.abs()),
            _ => None,
        })
        .sum()
}
