//! The original problem: back capacity 1, stomach capacity 1, one way,
//! `N = 2^k + f` with `0 <= f <= 2`.

use super::{Route, StrategyOutcome};
use crate::closed_forms::original_exact;
use crate::error::Result;
use crate::problem::ProblemSpec;
use crate::rational::{r, Rational};

/// Camel at `y` with `f <= 1` in its stomach, one banana at `y` and one at
/// `z`. Gathers both at `w = (y + 2z + f)/3` on an exactly empty stomach,
/// then eats them one mile apart and walks two more miles.
fn two_singles(route: &mut Route, y: &Rational, f: &Rational, z: &Rational) {
    let w = (y + z * 2 + f) / 3;
    route.goto(y);
    route.pickup(1);
    route.goto(&w);
    route.drop(1);
    route.goto(z);
    route.pickup(1);
    route.goto(&w);
    route.eat();
    route.walk(&Rational::one());
    route.eat();
    route.walk(&Rational::one());
}

/// Camel at `x` with `f` in its stomach, one banana at `x` and two at `y`.
fn single_and_pair(route: &mut Route, x: &Rational, f: &Rational, y: &Rational) {
    let z = (x + y + f) / 2;
    route.pickup(1);
    route.goto(&z);
    route.drop(1);
    route.goto(y);
    route.eat();
    two_singles(route, y, &Rational::one(), &z);
}

/// Camel at `x` on an empty stomach, `4n - 2` bananas at `x` and two at
/// `y <= x + 1/2`. Leaves `2n - 2` at `x + 1/2` and two at
/// `(x + y)/2 + 5/8`, camel at `x + 1/2` on an empty stomach.
fn halve(route: &mut Route, x: &Rational, n: u32, y: &Rational) -> Rational {
    let half = r(1, 2);
    let eighth = r(1, 8);
    let ahead = x + &half;
    for _ in 0..2 * n - 2 {
        route.eat();
        route.pickup(1);
        route.goto(&ahead);
        route.drop(1);
        route.goto(x);
    }
    let z = (x + y + 1) / 2;
    route.eat();
    route.pickup(1);
    route.goto(&z);
    route.drop(1);
    route.goto(y);
    route.eat();
    route.pickup(1);
    let far = &z + &eighth;
    route.goto(&far);
    route.drop(1);
    route.goto(&z);
    route.pickup(1);
    route.goto(&far);
    route.drop(1);
    route.goto(&ahead);
    far
}

/// Camel at `x` on an empty stomach, `2^k - 2` bananas at `x`, two at `y`.
fn descend(route: &mut Route, k: u32, x: Rational, y: Rational) {
    if k == 2 {
        route.eat();
        single_and_pair(route, &x, &Rational::one(), &y);
    } else {
        let y = halve(route, &x, 1 << (k - 2), &y);
        descend(route, k - 1, x + r(1, 2), y);
    }
}

/// One-way itinerary for `N = 2^k + f`, `k >= 1`, `0 <= f <= 2`.
pub fn original_one_way_strategy(k: u32, f: &Rational) -> Result<StrategyOutcome> {
    let claimed_distance = original_exact(k, f)?;
    let bananas = Rational::from(2i64).pow(i64::from(k)) + f;
    let spec = ProblemSpec::one_way(1, 1, bananas.clone())?;
    let zero = Rational::zero();
    let mut route = Route::new();
    // Whole values of f start on an empty stomach; top it up to match the
    // fractional case.
    if f.is_integer() && f.is_positive() {
        route.eat();
    }
    if k == 1 {
        if *f <= 1 {
            two_singles(&mut route, &zero, f, &zero);
        } else {
            single_and_pair(&mut route, &zero, &(f - 1), &zero);
        }
    } else {
        // Stage two bananas at f/4 with the fractional fuel.
        let y = f / 4;
        if *f <= 1 {
            for _ in 0..2 {
                route.pickup(1);
                route.goto(&y);
                route.drop(1);
                route.goto(&zero);
            }
        } else {
            let w = (f - 1) / 2;
            route.pickup(1);
            route.goto(&w);
            route.drop(1);
            route.goto(&zero);
            route.eat();
            route.pickup(1);
            route.goto(&y);
            route.drop(1);
            route.goto(&w);
            route.pickup(1);
            route.goto(&y);
            route.drop(1);
            route.goto(&zero);
        }
        descend(&mut route, k, zero, y);
    }
    Ok(StrategyOutcome {
        itinerary: route.events,
        claimed_distance,
        spec,
    })
}
