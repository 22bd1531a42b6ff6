//! Invariable generation probabilities for the Weyl groups of types A, B, C
//! and D, estimated by seeded Monte Carlo or computed exactly for small `n`,
//! and the resulting lower bounds for the finite classical groups.

pub mod bitset;
pub mod bounds;
pub mod cli;
pub mod combinatorics;
mod error;
pub mod exact;
pub mod montecarlo;
pub mod sampling;
pub mod stats;

pub use combinatorics::{
    all_cycles_even, all_cycles_positive, event_j, event_n, fixed_sizes, make_partition, project,
    signed_fixed_sets, Partition, Profile, Sign, SignedCycleType, SignedSizeProfile, SizeProfile,
    WeylFamily,
};
pub use error::{Error, Result};
