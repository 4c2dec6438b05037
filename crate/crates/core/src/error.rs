use thiserror::Error;

use crate::word::AlgebraTag;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("algebra mismatch: {left} vs {right}")]
    AlgebraMismatch { left: AlgebraTag, right: AlgebraTag },
    #[error("invalid algebra: O_{0} needs at least 2 generators")]
    InvalidTag(u32),
    #[error("generator index {index} out of range for {tag}")]
    IndexOutOfRange { index: u32, tag: AlgebraTag },
    #[error("wrong number of generator images: expected {expected}, got {got}")]
    ImageCount { expected: usize, got: usize },
    #[error("relation violated ({i},{j}): f(s{i})* f(s{j}) = {residual}")]
    RelationViolated { i: u32, j: u32, residual: String },
    #[error("completeness violated: sum f(s_i) f(s_i)* - I = {residual}")]
    CompletenessViolated { residual: String },
    #[error("{n} does not divide {m}")]
    NotDivisible { n: u64, m: u64 },
    #[error("empty code word set")]
    EmptyCode,
    #[error("empty enumeration")]
    EmptyEnumeration,
    #[error("invalid chain: {0}")]
    InvalidChain(String),
    #[error("word {word} is not in L_{n}")]
    NotInSemigroup { n: u32, word: String },
    #[error("monomial {0} is not spanned by L_n words")]
    Unclassifiable(String),
    #[error("depth mismatch: {0} vs {1}")]
    DepthMismatch(usize, usize),
    #[error("p-adic mismatch: (p={0}, N={1}) vs (p={2}, N={3})")]
    PrecisionMismatch(u64, usize, u64, usize),
    #[error("modulus {modulus} does not divide {of}")]
    ModulusNotDividing { modulus: u64, of: String },
    #[error("not a homomorphism between Cuntz algebras: {0}")]
    NotCuntz(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
}
