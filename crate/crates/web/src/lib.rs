//! Browser bindings. Every export returns a JSON string; errors surface as
//! thrown strings on the JavaScript side.

use dromedary::closed_forms::{
    b1_one_way_exact, b1_round_trip_exact, b2_round_trip_bounds, one_way_upper, round_trip_upper,
};
use dromedary::sim::{assert_monotone, format_itinerary, parse_itinerary, potential_trace};
use dromedary::strategies::*;
use dromedary::{initial_state, Accounting, ProblemSpec, Rational, Variant, WorldState};
use serde::Serialize;
use wasm_bindgen::prelude::*;

fn rational(s: &str) -> Result<Rational, String> {
    s.parse().map_err(|e: dromedary::Error| e.to_string())
}

fn json(value: &impl Serialize) -> String {
    serde_json::to_string(value).expect("serializable")
}

#[derive(Serialize)]
struct CurvePoint {
    n: f64,
    /// Best known strategy distance.
    achieved: Option<f64>,
    upper: Option<f64>,
}

/// Achieved distance and upper bound for `N` from `from` to `to` in `steps`
/// equal steps. Points outside a formula's domain carry `null`.
pub fn bounds_curve_json(
    back: u32,
    round_trip: bool,
    from: &str,
    to: &str,
    steps: u32,
) -> Result<String, String> {
    let (from, to) = (rational(from)?, rational(to)?);
    if steps == 0 || from > to {
        return Err("need from <= to and at least one step".into());
    }
    let step = (&to - &from) / i64::from(steps);
    let f64_of = |r: Result<Rational, dromedary::Error>| r.ok().map(|x| x.to_f64());
    let points: Vec<CurvePoint> = (0..=steps)
        .map(|i| {
            let n = &from + &step * i64::from(i);
            let achieved = match (back, round_trip) {
                (1, false) => f64_of(b1_one_way_exact(&n)),
                (1, true) => f64_of(b1_round_trip_exact(&n)),
                (2, true) => f64_of(b2_round_trip_bounds(&n).map(|b| b.lower)),
                _ => None,
            };
            let upper = if round_trip {
                f64_of(round_trip_upper(back, &n))
            } else {
                f64_of(one_way_upper(back, &n))
            };
            CurvePoint {
                n: n.to_f64(),
                achieved,
                upper,
            }
        })
        .collect();
    Ok(json(&points))
}

#[derive(Serialize)]
struct Frame {
    position: f64,
    stomach: f64,
    load: u32,
    /// `(position, count)` for every cache.
    caches: Vec<(f64, u32)>,
}

impl From<&WorldState> for Frame {
    fn from(s: &WorldState) -> Self {
        Frame {
            position: s.camel_pos.to_f64(),
            stomach: s.stomach.to_f64(),
            load: s.load,
            caches: s.caches.iter().map(|(p, c)| (p.to_f64(), *c)).collect(),
        }
    }
}

#[derive(Serialize)]
struct StrategyView {
    distance: Rational,
    returned: bool,
    itinerary: String,
    /// State before the first event and after each one.
    frames: Vec<Frame>,
}

fn generate(name: &str, n: &Rational) -> Result<StrategyOutcome, String> {
    let out = match name {
        "b1-one-way" => b1_one_way_strategy(n),
        "b1-round-trip" => b1_round_trip_strategy(n),
        "b2-round-trip" => b2_round_trip_strategy(n),
        "b2-credit" => b2_stomach_credit_strategy(n),
        _ => return Err(format!("unknown generator {name:?}")),
    };
    out.map_err(|e| e.to_string())
}

/// Builds a strategy, validates it and returns its itinerary with a frame
/// per event for animation.
pub fn strategy_json(name: &str, bananas: &str) -> Result<String, String> {
    let out = generate(name, &rational(bananas)?)?;
    let report = out.validate().map_err(|e| e.to_string())?;
    let mut state = initial_state(&out.spec);
    let mut frames = vec![Frame::from(&state)];
    for event in &out.itinerary {
        state = dromedary::sim::apply_event(&out.spec, &state, event).map_err(|e| e.to_string())?;
        frames.push(Frame::from(&state));
    }
    Ok(json(&StrategyView {
        distance: out.claimed_distance,
        returned: report.returned,
        itinerary: format_itinerary(&out.itinerary),
        frames,
    }))
}

#[derive(Serialize)]
struct PotentialView {
    monotone: bool,
    checkpoints: Vec<(f64, f64)>,
}

/// Potential checkpoints `(position, value)` of an itinerary typed by the
/// user, for a stomach of two.
pub fn potential_json(
    itinerary: &str,
    back: u32,
    bananas: &str,
    round_trip: bool,
) -> Result<String, String> {
    let variant = if round_trip {
        Variant::RoundTrip
    } else {
        Variant::OneWay
    };
    let spec = ProblemSpec::new(back, 2, rational(bananas)?, variant, Accounting::CountAll)
        .map_err(|e| e.to_string())?;
    let events = parse_itinerary(itinerary).map_err(|e| e.to_string())?;
    let trace = potential_trace(&spec, &events).map_err(|e| e.to_string())?;
    Ok(json(&PotentialView {
        monotone: assert_monotone(&trace),
        checkpoints: trace
            .checkpoints
            .iter()
            .map(|c| (c.position.to_f64(), c.value.to_f64()))
            .collect(),
    }))
}

#[wasm_bindgen(js_name = boundsCurve)]
pub fn bounds_curve(
    back: u32,
    round_trip: bool,
    from: &str,
    to: &str,
    steps: u32,
) -> Result<String, JsError> {
    bounds_curve_json(back, round_trip, from, to, steps).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn strategy(name: &str, bananas: &str) -> Result<String, JsError> {
    strategy_json(name, bananas).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn potential(
    itinerary: &str,
    back: u32,
    bananas: &str,
    round_trip: bool,
) -> Result<String, JsError> {
    potential_json(itinerary, back, bananas, round_trip).map_err(|e| JsError::new(&e))
}
