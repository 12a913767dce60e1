//! The diagram algebra: reduction of raw tangles, multiplication, special
//! elements, generator words, factorization and positivity.

mod element;
mod factorize;
mod positivity;
mod presentation;
mod words;

pub use element::{reduce, reduce_stepwise, AlgebraElement};
pub use factorize::{factorize, factorize_with};
pub use positivity::{delta_power_form, positivity_check, PositivityReport, PositivityViolation};
pub use presentation::{verify_presentation, verify_presentation_with_fault, PresentationReport, RelationCheck};
pub use words::{evaluate_word, special_elements, Alphabet, GeneratorWord, Letter, SpecialElements};
