//! L(1, ψ) for even primitive ψ, from L(2, ·), L(3, ·), ζ(3) and the
//! central-binomial series, and the class number of real quadratic fields.

mod divisor_data;
mod l1;
mod report;

pub use divisor_data::{CharacterEntry, DivisorCharacterData};
pub use l1::{
    l1_direct, l1_direct_unfolded, l1_via_theorem, l1_via_theorem_with_data, log_sine_via_lseries,
    log_sine_via_lseries_with_data, TheoremBlocks,
};
pub use report::{
    batch_class_numbers, class_number, class_number_oracle, ClassNumberReport, ReportStatus,
};
