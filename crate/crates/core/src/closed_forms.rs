//! Closed-form distances: the interpolated exponential `p_B` and its inverse,
//! the potential-based upper bounds, the exact values achieved by the
//! constructive strategies, and the classic jeep formulas.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::rational::{r, Rational};

fn domain(what: &'static str, value: &Rational, requires: &'static str) -> Error {
    Error::Domain {
        what,
        value: value.clone(),
        requires,
    }
}

/// Growth factor `1 + 2/B` of `p_B` per mile.
fn growth(back: u32) -> Rational {
    r(i64::from(back) + 2, i64::from(back))
}

/// `p_B(x) = (1 + 2/B)^floor(x) * (1 + (2/B)(x - floor(x)))`: the linear
/// interpolant of `(1 + 2/B)^x` between integer knots. Defined for negative
/// `x` as well.
pub fn p(back: u32, x: &Rational) -> Rational {
    let knot = x.floor_i64();
    let frac = x.fract();
    let slope = r(2, i64::from(back));
    growth(back).pow(knot) * (Rational::one() + slope * frac)
}

/// Inverse of [`p`]. `p_B` is strictly increasing with range `(0, inf)`.
pub fn p_inv(back: u32, y: &Rational) -> Result<Rational> {
    if !y.is_positive() {
        return Err(domain("p_inv", y, "y > 0"));
    }
    let g = growth(back);
    let mut knot = 0i64;
    let mut at_knot = Rational::one();
    if *y >= 1 {
        loop {
            let next = &at_knot * &g;
            if &next > y {
                break;
            }
            at_knot = next;
            knot += 1;
        }
    } else {
        while &at_knot > y {
            at_knot = &at_knot / &g;
            knot -= 1;
        }
    }
    // y / g^knot lies in [1, g), so the fractional offset lies in [0, 1).
    let offset = (y / &at_knot - 1) * r(i64::from(back), 2);
    Ok(Rational::from(knot) + offset)
}

/// One-way upper bound for any back capacity:
/// `p_B^{-1}((2N - 2 - B) / B) + B + 1`, valid for `N >= B + 1`.
pub fn one_way_upper(back: u32, bananas: &Rational) -> Result<Rational> {
    let b = i64::from(back);
    if *bananas < b + 1 {
        return Err(domain("one_way_upper", bananas, "N >= B + 1"));
    }
    let arg = (bananas * 2 - 2 - b) / b;
    Ok(p_inv(back, &arg)? + b + 1)
}

/// Round-trip upper bound `p_B^{-1}(N / B) + B / 2`, valid for `N >= B`.
pub fn round_trip_upper(back: u32, bananas: &Rational) -> Result<Rational> {
    let b = i64::from(back);
    if *bananas < b {
        return Err(domain("round_trip_upper", bananas, "N >= B"));
    }
    Ok(p_inv(back, &(bananas / b))? + r(b, 2))
}

/// Sharper round-trip bound for `B = 2` on `4 <= N <= 8`, obtained by letting
/// the camel behave as a jeep with tank 4 before its last meal.
pub fn b2_round_trip_jeep_upper(bananas: &Rational) -> Result<Rational> {
    if *bananas < 4 || *bananas > 8 {
        return Err(domain("b2_round_trip_jeep_upper", bananas, "4 <= N <= 8"));
    }
    if *bananas <= 6 {
        Ok((bananas - 4) / 6 + 2)
    } else {
        Ok((bananas - 5) / 3 + 2)
    }
}

/// Optimal one-way distance for `B = 1`: `p_1^{-1}(2N - 3) + 2`, `N >= 2`.
pub fn b1_one_way_exact(bananas: &Rational) -> Result<Rational> {
    if *bananas < 2 {
        return Err(domain("b1_one_way_exact", bananas, "N >= 2"));
    }
    Ok(p_inv(1, &(bananas * 2 - 3))? + 2)
}

/// Optimal round-trip distance for `B = 1`: `p_1^{-1}(N) + 1/2`, `N >= 1`.
pub fn b1_round_trip_exact(bananas: &Rational) -> Result<Rational> {
    if *bananas < 1 {
        return Err(domain("b1_round_trip_exact", bananas, "N >= 1"));
    }
    Ok(p_inv(1, bananas)? + r(1, 2))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundsResult {
    pub lower: Rational,
    pub upper: Rational,
    pub exact: Option<Rational>,
}

/// How the `B = 2` round-trip construction handles a given `N`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) enum B2Plan {
    /// `2 <= N <= 4`: walk out `N/2` and back with everything on board.
    Direct,
    /// `N = 2^k`: haul to position 1, recurse, `k` miles.
    PowerOfTwo { k: u32 },
    /// `2n <= N <= 2n + 2`: burn `N - 2n` at the border, haul `2n` to `x`
    /// with an empty stomach, then run the `2n` plan turning back `x/2` early.
    EmptyStomachHaul { k: u32, x: Rational },
    /// `2n + 1 <= N <= 4n`: haul `2n` to `x` arriving with one unit of fuel,
    /// which is kept for the final leg home.
    OneUnitHaul { k: u32, x: Rational },
}

impl B2Plan {
    pub(crate) fn distance(&self, bananas: &Rational) -> Rational {
        match self {
            B2Plan::Direct => bananas / 2,
            B2Plan::PowerOfTwo { k } => Rational::from(*k),
            B2Plan::EmptyStomachHaul { k, x } => Rational::from(*k) + x / 2,
            B2Plan::OneUnitHaul { k, x } => Rational::from(*k) + x,
        }
    }
}

/// Largest `k` with `2^k <= n`, for `n >= 1`.
fn floor_log2(n: &Rational) -> u32 {
    let mut k = 0;
    let mut pow = Rational::from(2i64);
    while &pow <= n {
        pow = pow * 2;
        k += 1;
    }
    k
}

pub(crate) fn b2_plan(bananas: &Rational) -> Result<B2Plan> {
    if *bananas < 2 {
        return Err(domain("b2_round_trip", bananas, "N >= 2"));
    }
    if *bananas <= 4 {
        return Ok(B2Plan::Direct);
    }
    let k = floor_log2(bananas);
    let two_n = Rational::from(2i64).pow(i64::from(k));
    if *bananas == two_n {
        return Ok(B2Plan::PowerOfTwo { k });
    }
    let empty = (bananas <= &(&two_n + 2)).then(|| B2Plan::EmptyStomachHaul {
        k,
        x: (bananas - &two_n) / (&two_n - 1),
    });
    let one_unit = (bananas >= &(&two_n + 1)).then(|| B2Plan::OneUnitHaul {
        k,
        x: (bananas - 1 - &two_n) / (&two_n - 1),
    });
    Ok(match (empty, one_unit) {
        (Some(a), Some(b)) => {
            if a.distance(bananas) > b.distance(bananas) {
                a
            } else {
                b
            }
        }
        (Some(a), None) => a,
        (None, Some(b)) => b,
        (None, None) => unreachable!("2n < N < 4n is covered by one branch"),
    })
}

fn is_power_of_two(n: &Rational) -> bool {
    n.is_integer() && *n >= 1 && {
        let k = floor_log2(n);
        Rational::from(2i64).pow(i64::from(k)) == *n
    }
}

/// Round-trip bounds for `B = 2`, `N >= 2`. The lower bound is the distance
/// of the constructive strategy; the upper bound is `p_2^{-1}(N)`, sharpened
/// to the jeep bound on `[4, 8]`. Both coincide when `N <= 8` or `N` is a
/// power of two, and always differ by less than `1/(N - 1)`.
pub fn b2_round_trip_bounds(bananas: &Rational) -> Result<BoundsResult> {
    let lower = b2_plan(bananas)?.distance(bananas);
    let potential = p_inv(2, bananas)?;
    let upper = if *bananas >= 4 && *bananas <= 8 {
        b2_round_trip_jeep_upper(bananas)?
    } else {
        potential
    };
    let exact = (*bananas <= 8 || is_power_of_two(bananas)).then(|| lower.clone());
    debug_assert!(exact.as_ref().is_none_or(|e| *e == upper));
    Ok(BoundsResult {
        lower,
        upper,
        exact,
    })
}

/// Upper bound for the original problem (back 1, stomach 1):
/// `(1/2) p_2^{-1}((2/3)(N - 1)) + 13/6`, valid for `N >= 3`.
pub fn original_upper(bananas: &Rational) -> Result<Rational> {
    if *bananas < 3 {
        return Err(domain("original_upper", bananas, "N >= 3"));
    }
    let arg = (bananas - 1) * r(2, 3);
    Ok(p_inv(2, &arg)? / 2 + r(13, 6))
}

/// Optimal distance for the original problem with `N = 2^k + f`:
/// `k/2 + 11/6 + (f - 1) / (3 * 2^(k-1))`, for `k >= 1`, `0 <= f <= 2`.
pub fn original_exact(k: u32, f: &Rational) -> Result<Rational> {
    if k < 1 {
        return Err(domain("original_exact", &Rational::from(k), "k >= 1"));
    }
    if f.is_negative() || *f > 2 {
        return Err(domain("original_exact", f, "0 <= f <= 2"));
    }
    let scale = Rational::from(2i64).pow(i64::from(k) - 1) * 3;
    Ok(r(i64::from(k), 2) + r(11, 6) + (f - 1) / scale)
}

/// Splits `N` as `2^k + f` with `0 <= f <= 2` if possible, preferring the
/// largest `k`. Returns `None` when `N` is not within 2 of a power of two.
pub fn original_decompose(bananas: &Rational) -> Option<(u32, Rational)> {
    if *bananas < 2 {
        return None;
    }
    let k = floor_log2(bananas);
    let f = bananas - Rational::from(2i64).pow(i64::from(k));
    (f <= 2).then_some((k, f))
}

fn check_jeep_args(what: &'static str, tank: &Rational, fuel: &Rational) -> Result<()> {
    if !tank.is_positive() {
        return Err(domain(what, tank, "F > 0"));
    }
    if !fuel.is_positive() {
        return Err(domain(what, fuel, "N > 0"));
    }
    Ok(())
}

/// Jeep one-way range:
/// `F/1 + F/3 + ... + F/(2m - 1) + (N - F m) / (2m + 1)` with `m = floor(N/F)`.
pub fn jeep_one_way(tank: &Rational, fuel: &Rational) -> Result<Rational> {
    check_jeep_args("jeep_one_way", tank, fuel)?;
    let m = (fuel / tank).floor_i64();
    let full: Rational = (1..=m).map(|i| tank / (2 * i - 1)).sum();
    Ok(full + (fuel - tank * m) / (2 * m + 1))
}

/// Jeep round-trip range:
/// `F/2 + F/4 + ... + F/(2m) + (N - F m) / (2m + 2)` with `m = floor(N/F)`.
pub fn jeep_round_trip(tank: &Rational, fuel: &Rational) -> Result<Rational> {
    check_jeep_args("jeep_round_trip", tank, fuel)?;
    let m = (fuel / tank).floor_i64();
    let full: Rational = (1..=m).map(|i| tank / (2 * i)).sum();
    Ok(full + (fuel - tank * m) / (2 * m + 2))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn p_examples() {
        assert_eq!(p(1, &r(1, 1)), r(3, 1));
        assert_eq!(p(2, &r(3, 2)), r(3, 1));
        assert_eq!(p(1, &r(-1, 1)), r(1, 3));
        assert_eq!(p(1, &r(-1, 2)), r(2, 3));
    }

    #[test]
    fn p_inv_examples() {
        assert_eq!(p_inv(1, &r(3, 1)).unwrap(), r(1, 1));
        assert_eq!(p_inv(2, &r(6, 1)).unwrap(), r(5, 2));
        assert_eq!(p_inv(1, &r(1, 3)).unwrap(), r(-1, 1));
        assert!(p_inv(1, &Rational::zero()).is_err());
        assert!(p_inv(1, &r(-2, 1)).is_err());
    }

    #[test]
    fn one_way_upper_examples() {
        assert_eq!(one_way_upper(1, &r(2, 1)).unwrap(), r(2, 1));
        assert_eq!(one_way_upper(1, &r(3, 1)).unwrap(), r(3, 1));
        assert_eq!(one_way_upper(2, &r(4, 1)).unwrap(), r(4, 1));
        assert!(one_way_upper(2, &r(5, 2)).is_err());
    }

    #[test]
    fn round_trip_upper_examples() {
        assert_eq!(round_trip_upper(1, &r(3, 1)).unwrap(), r(3, 2));
        assert_eq!(round_trip_upper(2, &r(8, 1)).unwrap(), r(3, 1));
        assert_eq!(round_trip_upper(1, &r(9, 1)).unwrap(), r(5, 2));
        assert!(round_trip_upper(2, &r(1, 1)).is_err());
    }

    #[test]
    fn jeep_reasoning_bound_examples() {
        assert_eq!(b2_round_trip_jeep_upper(&r(5, 1)).unwrap(), r(13, 6));
        assert_eq!(b2_round_trip_jeep_upper(&r(6, 1)).unwrap(), r(7, 3));
        assert_eq!(b2_round_trip_jeep_upper(&r(8, 1)).unwrap(), r(3, 1));
        assert_eq!(
            b2_round_trip_jeep_upper(&r(8, 1)).unwrap(),
            p_inv(2, &r(8, 1)).unwrap()
        );
        assert!(b2_round_trip_jeep_upper(&r(9, 1)).is_err());
        assert!(b2_round_trip_jeep_upper(&r(7, 2)).is_err());
        // Both pieces agree at N = 6.
        assert_eq!((r(6, 1) - 5) / 3 + 2, r(7, 3));
    }

    #[test]
    fn b1_exact_examples() {
        assert_eq!(b1_one_way_exact(&r(2, 1)).unwrap(), r(2, 1));
        assert_eq!(b1_one_way_exact(&r(5, 1)).unwrap(), r(11, 3));
        assert_eq!(b1_one_way_exact(&r(3, 1)).unwrap(), r(3, 1));
        assert!(b1_one_way_exact(&r(3, 2)).is_err());
        assert_eq!(b1_round_trip_exact(&r(1, 1)).unwrap(), r(1, 2));
        assert_eq!(b1_round_trip_exact(&r(3, 1)).unwrap(), r(3, 2));
        assert_eq!(b1_round_trip_exact(&r(9, 1)).unwrap(), r(5, 2));
        assert!(b1_round_trip_exact(&r(1, 2)).is_err());
    }

    #[test]
    fn b2_bounds_examples() {
        let b = b2_round_trip_bounds(&r(16, 1)).unwrap();
        assert_eq!(b.exact, Some(r(4, 1)));
        let b = b2_round_trip_bounds(&r(5, 1)).unwrap();
        assert_eq!(b.exact, Some(r(13, 6)));
        let b = b2_round_trip_bounds(&r(10, 1)).unwrap();
        assert_eq!(b.lower, r(22, 7));
        assert_eq!(b.upper, r(13, 4));
        assert_eq!(b.exact, None);
        assert!(&b.upper - &b.lower < r(1, 9));
        assert!(b2_round_trip_bounds(&r(3, 2)).is_err());
    }

    #[test]
    fn original_examples() {
        assert_eq!(original_upper(&r(4, 1)).unwrap(), r(8, 3));
        assert_eq!(original_upper(&r(3, 1)).unwrap(), r(7, 3));
        assert_eq!(original_upper(&r(10, 1)).unwrap(), r(41, 12));
        assert!(original_upper(&r(2, 1)).is_err());
        assert_eq!(original_exact(1, &r(1, 1)).unwrap(), r(7, 3));
        assert_eq!(original_exact(1, &r(2, 1)).unwrap(), r(8, 3));
        assert_eq!(original_exact(2, &r(0, 1)).unwrap(), r(8, 3));
        assert_eq!(original_exact(2, &r(1, 1)).unwrap(), r(17, 6));
        assert!(original_exact(0, &r(1, 1)).is_err());
        assert!(original_exact(2, &r(5, 2)).is_err());
        assert!(original_exact(2, &r(-1, 2)).is_err());
    }

    #[test]
    fn original_decompose_prefers_largest_power() {
        assert_eq!(original_decompose(&r(4, 1)), Some((2, Rational::zero())));
        assert_eq!(original_decompose(&r(7, 2)), Some((1, r(3, 2))));
        assert_eq!(original_decompose(&r(11, 1)), None);
    }

    #[test]
    fn jeep_examples() {
        assert_eq!(jeep_one_way(&r(1, 1), &r(1, 1)).unwrap(), r(1, 1));
        assert_eq!(jeep_one_way(&r(1, 1), &r(2, 1)).unwrap(), r(4, 3));
        assert_eq!(jeep_one_way(&r(4, 1), &r(8, 1)).unwrap(), r(16, 3));
        assert_eq!(jeep_round_trip(&r(1, 1), &r(1, 1)).unwrap(), r(1, 2));
        assert_eq!(jeep_round_trip(&r(1, 1), &r(2, 1)).unwrap(), r(3, 4));
        assert_eq!(jeep_round_trip(&r(4, 1), &r(4, 1)).unwrap(), r(2, 1));
        assert!(jeep_one_way(&Rational::zero(), &r(1, 1)).is_err());
        assert!(jeep_round_trip(&r(1, 1), &r(-1, 1)).is_err());
    }

    fn rational_in(lo: i64, hi: i64, den: i64) -> impl Strategy<Value = Rational> {
        (lo * den..=hi * den).prop_map(move |n| r(n, den))
    }

    proptest! {
        #[test]
        fn p_matches_power_at_knots(back in 1u32..6, n in -6i64..8) {
            let g = r(i64::from(back) + 2, i64::from(back));
            prop_assert_eq!(p(back, &Rational::from(n)), g.pow(n));
        }

        #[test]
        fn p_is_strictly_increasing(back in 1u32..6, a in rational_in(-4, 6, 12), b in rational_in(-4, 6, 12)) {
            prop_assume!(a != b);
            let (lo, hi) = if a < b { (a, b) } else { (b, a) };
            prop_assert!(p(back, &lo) < p(back, &hi));
        }

        #[test]
        fn p_inv_inverts_p(back in 1u32..6, x in rational_in(-4, 8, 24)) {
            prop_assert_eq!(p_inv(back, &p(back, &x)).unwrap(), x);
        }

        #[test]
        fn p_inverts_p_inv(back in 1u32..6, y in rational_in(0, 200, 7)) {
            prop_assume!(y.is_positive());
            prop_assert_eq!(p(back, &p_inv(back, &y).unwrap()), y);
        }

        #[test]
        // The bound is the optimum for B = 1, and no camel outruns a jeep
        // with tank B + 2.
        fn jeep_dominates_b1_one_way(n in rational_in(2, 40, 4)) {
            let jeep = jeep_one_way(&Rational::from(3i64), &n).unwrap();
            prop_assert!(jeep >= one_way_upper(1, &n).unwrap());
        }
    }
}
