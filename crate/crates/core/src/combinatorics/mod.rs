//! Cycle types, their fixed-subset profiles and the events built on them.

mod cycle_type;
mod event;
mod family;
mod profile;

pub use cycle_type::{make_partition, project, Partition, Sign, SignedCycleType};
pub use event::{all_cycles_even, all_cycles_positive, event_j, event_n, Profile};
pub use family::WeylFamily;
pub use profile::{fixed_sizes, signed_fixed_sets, SignedSizeProfile, SizeProfile};

pub(crate) use profile::{fixed_sizes_into, signed_fixed_sets_into};
