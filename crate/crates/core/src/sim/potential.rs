//! Potential monitor for the two-stomach camel.
//!
//! Whenever the stomach holds exactly one unit of fuel the potential
//! `sum p_B(banana) - (B/2) p_B(camel)` is recorded. Carried bananas sit at
//! the camel's position. Consecutive records are one mile and one banana
//! apart, and the recorded sequence never increases.

use serde::Serialize;

use super::{apply_event, Event, WorldState};
use crate::closed_forms::p;
use crate::error::{Error, Result};
use crate::problem::{initial_state, ProblemSpec};
use crate::rational::{r, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Checkpoint {
    pub position: Rational,
    pub value: Rational,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct PotentialTrace {
    pub checkpoints: Vec<Checkpoint>,
}

fn potential(back: u32, state: &WorldState, camel_pos: &Rational) -> Rational {
    let cached: Rational = state
        .caches
        .iter()
        .map(|(pos, count)| p(back, pos) * i64::from(*count))
        .sum();
    let at_camel = p(back, camel_pos);
    let carried = &at_camel * i64::from(state.load);
    cached + carried - at_camel * r(i64::from(back), 2)
}

struct Recorder {
    trace: PotentialTrace,
    walked_since: Rational,
}

impl Recorder {
    fn record(&mut self, position: Rational, value: Rational) {
        let duplicate = self.walked_since.is_zero()
            && self
                .trace
                .checkpoints
                .last()
                .is_some_and(|c| c.position == position && c.value == value);
        if !duplicate {
            self.trace.checkpoints.push(Checkpoint { position, value });
        }
        self.walked_since = Rational::zero();
    }
}

/// Replays `itinerary` and records the potential at every level-one instant:
/// after an `Eat` that lands exactly on one, and where a move crosses one
/// from above (the crossing point is interpolated since fuel drops linearly).
pub fn potential_trace(spec: &ProblemSpec, itinerary: &[Event]) -> Result<PotentialTrace> {
    if spec.stomach_capacity != 2 {
        return Err(Error::Unsupported(
            "potential traces need stomach capacity 2".into(),
        ));
    }
    spec.validate()?;
    let back = spec.back_capacity;
    let mut state = initial_state(spec);
    let mut rec = Recorder {
        trace: PotentialTrace::default(),
        walked_since: Rational::zero(),
    };
    for (i, event) in itinerary.iter().enumerate() {
        let next = apply_event(spec, &state, event).map_err(|reason| Error::IllegalEvent {
            index: i + 1,
            reason: Box::new(reason),
        })?;
        match event {
            Event::Eat if next.stomach == 1 => {
                let v = potential(back, &next, &next.camel_pos);
                rec.record(next.camel_pos.clone(), v);
            }
            Event::Move(delta) => {
                let before = &state.stomach;
                if *before > 1 && next.stomach <= 1 {
                    let to_crossing = before - 1;
                    let at = if delta.is_negative() {
                        &state.camel_pos - &to_crossing
                    } else {
                        &state.camel_pos + &to_crossing
                    };
                    rec.walked_since += &to_crossing;
                    // Nothing but the camel (and its load) moves during a move.
                    let v = potential(back, &state, &at);
                    rec.record(at, v);
                    rec.walked_since += delta.abs() - to_crossing;
                } else {
                    rec.walked_since += delta.abs();
                }
            }
            _ => {}
        }
        state = next;
    }
    Ok(rec.trace)
}

/// True iff the recorded potential never increases.
pub fn assert_monotone(trace: &PotentialTrace) -> bool {
    trace
        .checkpoints
        .windows(2)
        .all(|w| w[1].value <= w[0].value)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cp(pos: Rational, value: Rational) -> Checkpoint {
        Checkpoint {
            position: pos,
            value,
        }
    }

    #[test]
    fn first_checkpoint_for_integer_start() {
        let spec = ProblemSpec::one_way(1, 2, r(3, 1)).unwrap();
        let trace = potential_trace(&spec, &[Event::Eat]).unwrap();
        assert_eq!(trace.checkpoints, vec![cp(Rational::zero(), r(3, 2))]);
    }

    #[test]
    fn checkpoint_with_no_bananas_left() {
        let spec = ProblemSpec::round_trip(2, 2, r(2, 1)).unwrap();
        let it = [
            Event::Eat,
            Event::Eat,
            Event::Move(r(1, 1)),
            Event::Move(r(-1, 1)),
        ];
        let trace = potential_trace(&spec, &it).unwrap();
        assert_eq!(trace.checkpoints.len(), 2);
        assert_eq!(trace.checkpoints[0], cp(Rational::zero(), Rational::zero()));
        assert_eq!(trace.checkpoints[1], cp(r(1, 1), r(-2, 1)));
        assert!(assert_monotone(&trace));
    }

    #[test]
    fn fractional_start_hauling_full_load() {
        let spec = ProblemSpec::one_way(2, 2, r(7, 2)).unwrap();
        let it = [Event::Eat, Event::Pickup(2), Event::Move(r(1, 2))];
        let trace = potential_trace(&spec, &it).unwrap();
        assert_eq!(trace.checkpoints, vec![cp(r(1, 2), r(3, 2))]);
    }

    #[test]
    fn crossing_inside_a_move_is_interpolated() {
        let spec = ProblemSpec::one_way(1, 2, r(3, 1)).unwrap();
        // Stomach 2 after two meals; level one is crossed 1 mile into a 3/2 move.
        let it = [Event::Eat, Event::Eat, Event::Move(r(3, 2))];
        let trace = potential_trace(&spec, &it).unwrap();
        assert_eq!(trace.checkpoints.len(), 2);
        assert_eq!(trace.checkpoints[1].position, r(1, 1));
        // One banana at 0, camel at 1: 1 - (1/2) * 3.
        assert_eq!(trace.checkpoints[1].value, r(-1, 2));
    }

    #[test]
    fn rejects_single_stomach() {
        let spec = ProblemSpec::one_way(1, 1, r(3, 1)).unwrap();
        assert!(matches!(
            potential_trace(&spec, &[]),
            Err(Error::Unsupported(_))
        ));
    }

    #[test]
    fn monotone_verdicts() {
        let trace = PotentialTrace {
            checkpoints: vec![
                cp(r(0, 1), r(3, 2)),
                cp(r(1, 1), r(3, 2)),
                cp(r(2, 1), r(1, 1)),
            ],
        };
        assert!(assert_monotone(&trace));
        let trace = PotentialTrace {
            checkpoints: vec![cp(r(0, 1), r(1, 1)), cp(r(1, 1), r(2, 1))],
        };
        assert!(!assert_monotone(&trace));
        assert!(assert_monotone(&PotentialTrace::default()));
    }
}
