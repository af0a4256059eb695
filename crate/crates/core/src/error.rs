use thiserror::Error;

use crate::fincat::ValidationReport;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("unknown object `{0}`")]
    UnknownObject(String),
    #[error("unknown morphism `{0}`")]
    UnknownMorphism(String),
    #[error("unknown cover label `{0}`")]
    UnknownLabel(String),
    #[error("invalid category: {0}")]
    InvalidCategory(ValidationReport),
    #[error("invalid subcategory: {0}")]
    InvalidSubcategory(String),
    #[error("invalid functor: {0}")]
    InvalidFunctor(String),
    #[error("subcategories do not share a parent category")]
    ParentMismatch,
    #[error("subcategory is not full")]
    NotFull,
    #[error("subcategory is not an ideal")]
    NotIdeal,
    #[error("cover parts are not all ideals: {0}")]
    NotIdealCover(String),
    #[error("not a cover: {0}")]
    NotACover(String),
    #[error("invalid cover: {0}")]
    InvalidCover(String),
    #[error("invalid order: {0}")]
    InvalidOrder(String),
    #[error("invalid index tuple: {0}")]
    InvalidTuple(String),
    #[error("invalid simplicial operator: {0}")]
    InvalidDeltaMap(String),
    #[error("level {level} exceeds the enumeration cap {cap}")]
    LevelCapExceeded { level: usize, cap: usize },
    #[error("invalid descriptor: {0}")]
    InvalidDescriptor(String),
    #[error("not acyclic: {0}")]
    NotAcyclic(String),
    #[error("not a poset category: {0}")]
    NotAPoset(String),
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}
