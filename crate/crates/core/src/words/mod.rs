//! Finite-word analytics.

mod balance;
mod complexity;
mod height;
mod swap;
mod word;

use thiserror::Error;

pub use balance::{balance, find_imbalance, BalanceReport, ImbalanceWitness};
pub use complexity::{complexity, factor_counts, ComplexityProfile};
pub(crate) use height::g_values;
pub use height::{e_sets, e_sets_within_intervals, height_f, height_g, HeightSeries};
pub use swap::{swap_transform, SwapOutcome};
pub use word::{Alphabet, Word, WordError, A, B, C};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AnalysisError {
    #[error("window length {requested} exceeds word length {available}")]
    WindowTooLong { requested: usize, available: usize },
    #[error("precondition violated at position {position}: {reason}")]
    Precondition {
        position: usize,
        reason: &'static str,
    },
    #[error(transparent)]
    Word(#[from] WordError),
}
