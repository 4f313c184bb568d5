//! Seeded valuation sources, including the lower-bound constructions.

mod fixed_file;
mod four_outcome;
mod grid_hiding;
mod iid;
mod nested_thirds;
mod spec;
mod two_copy;

pub use fixed_file::{parse_sequence_csv, FixedFile};
pub use four_outcome::{FourOutcome, FourOutcomeInstance, FourOutcomeSide};
pub use grid_hiding::{GridHiding, GridHidingInstance};
pub use iid::{IidFinite, PROBABILITY_SUM_TOLERANCE};
pub use nested_thirds::{Branch, NestedThirds, NestedThirdsState, ThirdsProcess, MIN_GAP};
pub use spec::{AdversarySpec, IidOutcome};
pub use two_copy::{Side, TwoCopy};
