use thiserror::Error;

/// Problems found while reading `.tdx` text. Every variant carries the
/// 1-based line it refers to.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("line {line}: state `{state}` has no transition for letter {letter}")]
    MissingTransition {
        line: usize,
        state: String,
        letter: u32,
    },
    #[error("line {line}: letter {letter} is outside the alphabet 0..{alphabet}")]
    LetterOutOfRange {
        line: usize,
        letter: u32,
        alphabet: usize,
    },
    #[error("line {line}: state `{label}` is declared twice")]
    DuplicateState { line: usize, label: String },
    #[error("line {line}: transition for state `{state}` on letter {letter} is given twice")]
    DuplicateTransition {
        line: usize,
        state: String,
        letter: u32,
    },
    #[error("line {line}: unknown state `{label}`")]
    UnknownState { line: usize, label: String },
}

impl ParseError {
    pub fn line(&self) -> usize {
        match self {
            ParseError::Syntax { line, .. }
            | ParseError::MissingTransition { line, .. }
            | ParseError::LetterOutOfRange { line, .. }
            | ParseError::DuplicateState { line, .. }
            | ParseError::DuplicateTransition { line, .. }
            | ParseError::UnknownState { line, .. } => *line,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("invalid transducer: {0}")]
    Invalid(String),
    #[error("unknown state {0}")]
    UnknownState(String),
    #[error("letter {letter} is outside the alphabet 0..{alphabet}")]
    LetterOutOfRange { letter: u32, alphabet: usize },
    #[error("transducer is not invertible: state `{state}` does not permute the alphabet")]
    NotInvertible { state: String },
    #[error("transducer is not strongly synchronizing")]
    NotSynchronizing,
    #[error("transducer is not synchronizing at level {requested} (minimal level {minimal:?})")]
    NotSynchronizingAtLevel {
        requested: usize,
        minimal: Option<usize>,
    },
    #[error("transducer is not core")]
    NotCore,
    #[error("alphabet sizes differ: {left} vs {right}")]
    AlphabetMismatch { left: usize, right: usize },
    #[error("result would have {states} states, above the cap of {cap}")]
    CapExceeded { states: u128, cap: usize },
    #[error("need at least {needed} growth records, got {got}")]
    TooFewRecords { needed: usize, got: usize },
    #[error("unknown catalog entry `{0}`")]
    UnknownName(String),
    #[error("no machine satisfying {0} found within the retry cap")]
    RequirementUnsatisfiable(String),
    #[error("state `{0}` has no loop labelled x|x")]
    NoFixedLoop(String),
    #[error("catalog entry `{name}` failed self-check: {detail}")]
    CatalogMismatch { name: String, detail: String },
    #[error("periodic word must be nonempty")]
    EmptyCycle,
}

pub type Result<T> = std::result::Result<T, Error>;
