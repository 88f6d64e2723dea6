//! Exact-arithmetic engine for camel-banana desert logistics.
//!
//! A camel carries at most `B` whole bananas on its back and holds up to `S`
//! units of banana fuel in its stomach, burning one unit per mile. Starting
//! from a stock of `N` bananas at the desert border it may build caches and
//! tries to get as far as possible, optionally returning to the border.
//!
//! * [`closed_forms`] evaluates the known bounds and exact distances.
//! * [`sim`] is the rules engine and potential monitor.
//! * [`strategies`] builds itineraries that achieve the exact distances.
//! * [`oracle`] brute-forces small instances on a position grid.

pub mod closed_forms;
pub mod error;
pub mod oracle;
pub mod problem;
pub mod rational;
pub mod sim;
pub mod strategies;

pub use error::{Error, Result, Violation};
pub use problem::{initial_state, Accounting, ProblemSpec, Variant};
pub use rational::Rational;
pub use sim::{Event, SimReport, WorldState};
