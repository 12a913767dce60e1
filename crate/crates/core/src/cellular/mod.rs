//! The cellular structure: labels, cell basis, action and Gram matrices.

mod branching;
mod datum;
mod label;
mod matrix;
mod semisimple;

pub use datum::{AxiomReport, CellCoords, CellDatum};
pub use label::{lambda_poset, CellLabel};
pub use matrix::RingMatrix;
pub use semisimple::{expected_top_coefficient, gram_record, semisimplicity_check, GramRecord, SemisimplicityReport};
pub use branching::{
    branching_record, branching_report, dimension_identity, expected_factors, lambda_minus_one, BranchingRecord,
    BranchingReport, Factor,
};
