//! Bound columns shared by `bounds` and `sweep`.

use dromedary::closed_forms::{
    b1_one_way_exact, b1_round_trip_exact, b2_round_trip_bounds, b2_round_trip_jeep_upper,
    jeep_one_way, jeep_round_trip, one_way_upper, original_decompose, original_exact,
    original_upper, round_trip_upper,
};
use dromedary::{Error, Rational, Result};

use crate::{Problem, VariantArg};

type Formula = Box<dyn Fn(&Rational) -> Result<Option<Rational>>>;

pub struct Column {
    pub name: &'static str,
    pub source: &'static str,
    formula: Formula,
}

impl Column {
    fn new(
        name: &'static str,
        source: &'static str,
        formula: impl Fn(&Rational) -> Result<Option<Rational>> + 'static,
    ) -> Self {
        Column {
            name,
            source,
            formula: Box::new(formula),
        }
    }

    pub fn eval(&self, n: &Rational) -> Result<Option<Rational>> {
        (self.formula)(n)
    }
}

fn some(r: Result<Rational>) -> Result<Option<Rational>> {
    r.map(Some)
}

pub fn columns(
    problem: Problem,
    back: u32,
    variant: VariantArg,
    tank: Option<Rational>,
) -> Result<Vec<Column>> {
    let unsupported = |what: &str| Err(Error::Unsupported(what.to_string()));
    let cols =
        match (problem, variant) {
            (Problem::Camel2, VariantArg::OneWay) if back == 1 => vec![
                Column::new("lower", "constructive strategy", |n| {
                    some(b1_one_way_exact(n))
                }),
                Column::new("exact", "optimal one-way distance", |n| {
                    some(b1_one_way_exact(n))
                }),
                Column::new("upper_potential", "potential bound", |n| {
                    some(one_way_upper(1, n))
                }),
            ],
            (Problem::Camel2, VariantArg::RoundTrip) if back == 1 => vec![
                Column::new("lower", "constructive strategy", |n| {
                    some(b1_round_trip_exact(n))
                }),
                Column::new("exact", "optimal round-trip distance", |n| {
                    some(b1_round_trip_exact(n))
                }),
                Column::new("upper_potential", "potential bound", |n| {
                    some(round_trip_upper(1, n))
                }),
            ],
            (Problem::Camel2, VariantArg::RoundTrip) if back == 2 => vec![
                Column::new("lower", "constructive strategy", |n| {
                    some(b2_round_trip_bounds(n).map(|b| b.lower))
                }),
                Column::new("exact", "strategy meets a bound", |n| {
                    b2_round_trip_bounds(n).map(|b| b.exact)
                }),
                Column::new("upper", "best available upper bound", |n| {
                    some(b2_round_trip_bounds(n).map(|b| b.upper))
                }),
                Column::new("upper_jeep", "jeep before the last meal", |n| {
                    if *n >= 4 && *n <= 8 {
                        some(b2_round_trip_jeep_upper(n))
                    } else {
                        Ok(None)
                    }
                }),
                Column::new("upper_potential", "potential bound", |n| {
                    some(round_trip_upper(2, n))
                }),
            ],
            (Problem::Camel2, VariantArg::OneWay) => vec![Column::new(
                "upper_potential",
                "potential bound",
                move |n| some(one_way_upper(back, n)),
            )],
            (Problem::Camel2, VariantArg::RoundTrip) => vec![Column::new(
                "upper_potential",
                "potential bound",
                move |n| some(round_trip_upper(back, n)),
            )],
            (Problem::Original, VariantArg::OneWay) => vec![
                Column::new("exact", "optimal original-problem distance", |n| {
                    match original_decompose(n) {
                        Some((k, f)) => some(original_exact(k, &f)),
                        None => Ok(None),
                    }
                }),
                Column::new("upper", "jeep-with-thirds bound", |n| {
                    some(original_upper(n))
                }),
            ],
            (Problem::Jeep, _) => {
                let Some(tank) = tank else {
                    return Err(Error::InvalidSpec("the jeep problem needs --F".into()));
                };
                let round = variant == VariantArg::RoundTrip;
                vec![Column::new("jeep", "jeep formula", move |n| {
                    if round {
                        some(jeep_round_trip(&tank, n))
                    } else {
                        some(jeep_one_way(&tank, n))
                    }
                })]
            }
            (Problem::Original, _) => return unsupported("the original problem is one-way"),
            (Problem::Camel2, VariantArg::Delivery) => {
                return unsupported("no closed forms for the delivery variant")
            }
        };
    Ok(cols)
}
