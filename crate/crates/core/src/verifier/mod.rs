//! Brute-force oracles and property harnesses.
//!
//! * [`exact`]: least `N` with no good coloring (no blue `K_n`, no
//!   `(k+1)`-set with `t` red edges), by backtracking with propagation.
//! * [`dichotomy`]: the monotone-run / alternating-extrema dichotomy for
//!   delta-like sequences, and the edges built from the extrema.
//! * [`stepping`]: exhaustive checks of the stepping-up colorings.
//! * [`properties`]: structural scans over `{0,1}^N` and the rank coloring.
//! * [`bounds`]: the tower function and the bound formulas.

pub mod bounds;
pub mod dichotomy;
pub mod exact;
pub mod properties;
pub mod stepping;



pub use exact::{exact_ramsey, ExactResult, RamseyQuery, RamseyValue};

pub use stepping::{check_stepping_conclusion, SteppingMode, SteppingReport, Verdict};
pub use dichotomy::{check_sequence_dichotomy, Dichotomy};
pub use bounds::{bound_report, tower, BoundRegime, BoundReport, TowerExpr};
