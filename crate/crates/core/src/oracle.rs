//! Exhaustive optimum over itineraries whose positions are multiples of
//! `1/q`.
//!
//! Every quantity is scaled by `q` and held in a `u8`. A state packs into a
//! `u64`: position, stomach, load and the sorted positions of up to five
//! cached bananas. The search is a memoized depth-first evaluation of
//!
//! `V(s)` = farthest position reachable from `s` by a continuation that
//! satisfies the success condition,
//!
//! which does not depend on how `s` was reached, so the farthest-so-far value
//! stays out of the memo key. Total fuel (stomach plus bananas) strictly
//! decreases along every move and the banana count along every meal, so the
//! state graph is acyclic.

use std::collections::HashMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::problem::{ProblemSpec, Variant};
use crate::rational::Rational;
use crate::sim::{run_successful, Event, WorldState};

/// Most bananas the packed encoding can hold.
const MAX_BANANAS: usize = 5;
/// Largest scaled position the search accepts.
const MAX_SCALED_POSITION: i64 = 24;
pub const DEFAULT_STATE_BUDGET: usize = 20_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GridConfig {
    pub denominator: u32,
    pub max_position: Rational,
    /// Hard cap on memoized states.
    pub state_budget: usize,
}

impl GridConfig {
    /// Grid `1/q` with the horizon at `N`.
    pub fn for_spec(spec: &ProblemSpec, denominator: u32) -> Self {
        GridConfig {
            denominator,
            max_position: spec.bananas.clone(),
            state_budget: DEFAULT_STATE_BUDGET,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SearchResult {
    pub best_distance: Rational,
    pub witness: Vec<Event>,
    pub states_explored: usize,
}

/// Opaque memo key: a packed grid state plus the farthest position so far.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GridKey {
    state: u64,
    farthest: u8,
}

#[derive(Debug, Clone, PartialEq, Eq)]
struct Grid {
    pos: u8,
    stomach: u8,
    load: u8,
    /// Position of every cached banana, sorted.
    cached: Vec<u8>,
}

impl Grid {
    fn pack(&self) -> u64 {
        let mut key =
            u64::from(self.pos) | u64::from(self.stomach) << 8 | u64::from(self.load) << 16;
        for (i, &c) in self.cached.iter().enumerate() {
            // Shift by one so that position 0 differs from an empty slot.
            key |= u64::from(c + 1) << (24 + 8 * i);
        }
        key
    }

    fn here(&self) -> usize {
        self.cached.iter().filter(|&&c| c == self.pos).count()
    }

    fn fuel(&self, q: u8) -> u32 {
        u32::from(self.stomach) + u32::from(q) * (self.cached.len() as u32 + u32::from(self.load))
    }
}

fn scaled(value: &Rational, q: u32, what: &str) -> Result<u8> {
    value
        .scaled_integer(q)
        .filter(|v| (0..=i64::from(u8::MAX - 1)).contains(v))
        .map(|v| v as u8)
        .ok_or_else(|| Error::InvalidGrid(format!("{what} {value} is not a multiple of 1/{q}")))
}

fn to_grid(state: &WorldState, q: u32) -> Result<Grid> {
    let mut cached = Vec::new();
    for (pos, &count) in &state.caches {
        let p = scaled(pos, q, "cache position")?;
        cached.extend(std::iter::repeat_n(p, count as usize));
    }
    if cached.len() > MAX_BANANAS {
        return Err(Error::InvalidGrid(format!(
            "{} cached bananas exceed the encodable {MAX_BANANAS}",
            cached.len()
        )));
    }
    cached.sort_unstable();
    Ok(Grid {
        pos: scaled(&state.camel_pos, q, "camel position")?,
        stomach: scaled(&state.stomach, q, "stomach")?,
        load: u8::try_from(state.load).map_err(|_| Error::InvalidGrid("load".into()))?,
        cached,
    })
}

/// Canonical encoding of a grid state: equal states give equal keys, the
/// order of cache entries does not matter, and `farthest` is part of the key.
pub fn canonical_key(state: &WorldState, farthest: &Rational, q: u32) -> Result<GridKey> {
    Ok(GridKey {
        state: to_grid(state, q)?.pack(),
        farthest: scaled(farthest, q, "farthest")?,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Step {
    Stop,
    Eat,
    /// Reload to `load` at the current position, then move one grid step.
    Move {
        forward: bool,
        load: u8,
    },
}

struct Search<'a> {
    spec: &'a ProblemSpec,
    q: u8,
    horizon: u8,
    budget: usize,
    memo: HashMap<u64, (Option<u8>, Step)>,
}

impl Search<'_> {
    fn successful(&self, s: &Grid) -> bool {
        match self.spec.variant {
            Variant::OneWay => true,
            _ => s.pos == 0,
        }
    }

    fn children(&self, s: &Grid) -> Vec<(Step, Grid)> {
        let mut out = Vec::new();
        let full = self.q * self.spec.stomach_capacity as u8;
        if s.stomach + self.q <= full {
            let mut next = s.clone();
            let ate = if let Some(i) = next.cached.iter().position(|&c| c == s.pos) {
                next.cached.remove(i);
                true
            } else if next.load > 0 {
                next.load -= 1;
                true
            } else {
                false
            };
            if ate {
                next.stomach += self.q;
                out.push((Step::Eat, next));
            }
        }
        if s.stomach == 0 {
            return out;
        }
        let max_load = (usize::from(s.load) + s.here()).min(self.spec.back_capacity as usize) as u8;
        for forward in [true, false] {
            if (forward && s.pos >= self.horizon) || (!forward && s.pos == 0) {
                continue;
            }
            for load in 0..=max_load {
                let mut next = s.clone();
                if load > s.load {
                    for _ in s.load..load {
                        let i = next
                            .cached
                            .iter()
                            .position(|&c| c == s.pos)
                            .expect("cached");
                        next.cached.remove(i);
                    }
                } else {
                    next.cached
                        .extend(std::iter::repeat_n(s.pos, usize::from(s.load - load)));
                    next.cached.sort_unstable();
                }
                next.load = load;
                next.stomach -= 1;
                next.pos = if forward { s.pos + 1 } else { s.pos - 1 };
                out.push((Step::Move { forward, load }, next));
            }
        }
        out
    }

    /// Farthest successful reach from `s`, or `None` if no continuation
    /// succeeds.
    fn value(&mut self, s: &Grid) -> Result<Option<u8>> {
        let key = s.pack();
        if let Some(&(v, _)) = self.memo.get(&key) {
            return Ok(v);
        }
        if self.memo.len() >= self.budget {
            return Err(Error::BudgetExceeded(self.budget));
        }
        let mut best = self.successful(s).then_some(s.pos);
        let mut step = Step::Stop;
        // A round trip cannot get home from beyond its total fuel.
        if self.spec.variant == Variant::OneWay || u32::from(s.pos) <= s.fuel(self.q) {
            for (action, child) in self.children(s) {
                if let Some(v) = self.value(&child)? {
                    let v = v.max(s.pos);
                    if best.is_none_or(|b| v > b) {
                        best = Some(v);
                        step = action;
                    }
                }
            }
        } else {
            best = None;
        }
        self.memo.insert(key, (best, step));
        Ok(best)
    }

    fn witness(&self, root: &Grid) -> Vec<Event> {
        let delta = Rational::new(1, i64::from(self.q)).expect("q > 0");
        let mut events: Vec<Event> = Vec::new();
        let mut s = root.clone();
        loop {
            let (_, step) = self.memo[&s.pack()];
            let children = self.children(&s);
            let Some((_, next)) = children.into_iter().find(|(a, _)| *a == step) else {
                break;
            };
            match step {
                Step::Stop => break,
                Step::Eat => events.push(Event::Eat),
                Step::Move { forward, load } => {
                    if load > s.load {
                        events.push(Event::Pickup(u32::from(load - s.load)));
                    } else if load < s.load {
                        events.push(Event::Drop(u32::from(s.load - load)));
                    }
                    let d = if forward { delta.clone() } else { -&delta };
                    match events.last_mut() {
                        // Merge consecutive steps in the same direction.
                        Some(Event::Move(prev)) if prev.is_positive() == forward => {
                            *prev += d;
                        }
                        _ => events.push(Event::Move(d)),
                    }
                }
            }
            s = next;
        }
        events
    }
}

/// Exact optimum over grid itineraries. Requires `floor(N) <= 5` and
/// `q * max_position <= 24`; delivery goals are not searched.
pub fn optimal(spec: &ProblemSpec, grid: &GridConfig) -> Result<SearchResult> {
    spec.validate()?;
    if matches!(spec.variant, Variant::Delivery { .. }) {
        return Err(Error::Unsupported(
            "the oracle does not search delivery goals".into(),
        ));
    }
    let q = grid.denominator;
    if q == 0 {
        return Err(Error::InvalidGrid("denominator must be positive".into()));
    }
    if grid.max_position.is_negative() || grid.max_position > spec.bananas {
        return Err(Error::InvalidGrid(format!(
            "horizon {} must lie in [0, N]",
            grid.max_position
        )));
    }
    if spec.whole_bananas() as usize > MAX_BANANAS {
        return Err(Error::InvalidGrid(format!(
            "at most {MAX_BANANAS} whole bananas are searchable"
        )));
    }
    let horizon = grid
        .max_position
        .scaled_integer(q)
        .filter(|&h| h <= MAX_SCALED_POSITION)
        .ok_or_else(|| {
            Error::InvalidGrid(format!(
                "q * max_position must be an integer at most {MAX_SCALED_POSITION}"
            ))
        })?;
    let root = to_grid(&crate::problem::initial_state(spec), q)?;
    let mut search = Search {
        spec,
        q: u8::try_from(q).expect("q <= 24"),
        horizon: horizon as u8,
        budget: grid.state_budget,
        memo: HashMap::new(),
    };
    let best = search.value(&root)?.expect("staying put always succeeds");
    let witness = search.witness(&root);
    let best_distance = Rational::new(i64::from(best), i64::from(q)).expect("q > 0");
    let report = run_successful(spec, &witness)?;
    assert_eq!(
        report.farthest, best_distance,
        "witness must replay to the optimum"
    );
    Ok(SearchResult {
        best_distance,
        witness,
        states_explored: search.memo.len(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::r;
    use std::collections::BTreeMap;

    fn solve(spec: &ProblemSpec, q: u32) -> Rational {
        optimal(spec, &GridConfig::for_spec(spec, q))
            .unwrap()
            .best_distance
    }

    #[test]
    fn tiny_instances() {
        assert_eq!(
            solve(&ProblemSpec::one_way(1, 2, r(2, 1)).unwrap(), 2),
            r(2, 1)
        );
        assert_eq!(
            solve(&ProblemSpec::round_trip(2, 2, r(2, 1)).unwrap(), 2),
            r(1, 1)
        );
        assert_eq!(
            solve(&ProblemSpec::one_way(1, 2, r(1, 1)).unwrap(), 1),
            r(1, 1)
        );
    }

    #[test]
    fn keys_are_canonical() {
        let mut a = WorldState::new(r(1, 2), 2);
        a.caches.insert(r(1, 1), 1);
        let mut b = WorldState::new(r(1, 2), 0);
        b.caches.insert(r(1, 1), 1);
        b.caches.insert(Rational::zero(), 2);
        let ka = canonical_key(&a, &r(1, 1), 2).unwrap();
        assert_eq!(ka, canonical_key(&b, &r(1, 1), 2).unwrap());
        assert_ne!(ka, canonical_key(&a, &r(3, 2), 2).unwrap());
        assert!(canonical_key(&a, &r(1, 3), 2).is_err());
        let mut c = a.clone();
        c.caches = BTreeMap::new();
        c.caches.insert(r(1, 3), 1);
        assert!(matches!(
            canonical_key(&c, &r(1, 1), 2),
            Err(Error::InvalidGrid(_))
        ));
    }

    #[test]
    fn guards_and_budget() {
        let spec = ProblemSpec::one_way(1, 2, r(6, 1)).unwrap();
        assert!(matches!(
            optimal(&spec, &GridConfig::for_spec(&spec, 2)),
            Err(Error::InvalidGrid(_))
        ));
        let spec = ProblemSpec::round_trip(1, 2, r(3, 1)).unwrap();
        let mut grid = GridConfig::for_spec(&spec, 2);
        grid.state_budget = 10;
        assert_eq!(optimal(&spec, &grid), Err(Error::BudgetExceeded(10)));
        let spec = ProblemSpec::round_trip(1, 2, r(5, 2)).unwrap();
        assert!(matches!(
            optimal(&spec, &GridConfig::for_spec(&spec, 3)),
            Err(Error::InvalidGrid(_))
        ));
    }
}
