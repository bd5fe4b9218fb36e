//! Executable forms of the characterization of 3iet words and of the
//! necessary conditions on substitution-invariant ones.

mod audit;
mod certificate;
mod facts;
mod recovery;
mod search;
mod sturm;

use thiserror::Error;

use crate::iet::IetError;
use crate::subst::SubstError;
use crate::words::{AnalysisError, WordError};

pub use audit::{
    theorem_b_audit, AuditReport, EpsilonRoute, ExactParameters, FixedPointInfo, FrequencyCheck,
    Overall, PASS_NOTE,
};
pub use certificate::{
    theorem_a_certificate, Certificate, CertificateOptions, CertificateVerdict, Image,
    DEFAULT_MIN_LENGTH,
};
pub use facts::{facts_check, facts_check_with_translations, FactFinding, FactsReport};
pub use recovery::{
    recover_parameters, EpsilonSource, RecoveredParameters, Regeneration, REGENERATION_THRESHOLD,
};
pub use search::{enumerate_substitutions, search, SearchBounds, SearchReport};
pub use sturm::{is_sturm, SturmVerdict};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum TheoremError {
    #[error("word has length {length}, below the minimum {minimum}")]
    TooShort { length: usize, minimum: usize },
    #[error("letter {0} does not occur in the word")]
    MissingLetter(char),
    #[error("insufficient data: word of length {length}")]
    InsufficientData { length: usize },
    #[error("the word contains no B, so l cannot be recovered")]
    NoBOccurrence,
    #[error("regenerated word first differs at index {first_mismatch} and reproduces only {fraction:.4} of the letters")]
    InconsistentRegeneration {
        first_mismatch: usize,
        fraction: f64,
    },
    #[error("expected a substitution on {{A,B,C}}")]
    NotTernarySubstitution,
    #[error(transparent)]
    Iet(#[from] IetError),
    #[error(transparent)]
    Subst(#[from] SubstError),
    #[error(transparent)]
    Word(#[from] WordError),
    #[error(transparent)]
    Analysis(#[from] AnalysisError),
}
