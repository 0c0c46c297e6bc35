//! The explicit colorings: the rank coloring built from a `k`-ary coloring
//! of `(k-1)`-sets, the two stepping-up colorings on `{0,1}^N`, and the
//! greedy partial Steiner packer used to argue independence.

mod base;
mod rank;
mod steiner;
mod stepup;

pub use base::{random_base, seeded_rng, BaseTwoColoring, KaryBaseColoring};
pub use rank::{rank_color, red_probability, RankColoring};
pub use steiner::{greedy_partial_steiner, SteinerFamily};
pub use stepup::{
    step_up_color, step_up_color_strong, Regime, StepUpColoring, StepUpRule, MAX_TABLE_BITS,
};
