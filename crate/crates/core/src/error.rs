use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("Z_n requires n >= 2, got {0}")]
    ModulusTooSmall(usize),
    #[error("carrier of size {size} exceeds the bound {bound}")]
    SizeBound { size: usize, bound: usize },
    #[error("ring axiom violated: {0}")]
    RingAxiom(String),
    #[error("module axiom violated: {0}")]
    ModuleAxiom(String),
    #[error("product factors must have at least two elements")]
    DegenerateFactor,
    #[error("ideal is the whole ring; the zero ring is excluded")]
    ImproperIdeal,
    #[error("submodule must be proper")]
    ImproperSubmodule,
    #[error("operands live over different rings")]
    RingMismatch,
    #[error("operands live in different modules")]
    ModuleMismatch,
    #[error("set is not an ideal: {0}")]
    NotAnIdeal(String),
    #[error("set is not a submodule: {0}")]
    NotASubmodule(String),
    #[error("empty operand set")]
    EmptySet,
    #[error("exponent must be at least {min}, got {got}")]
    Exponent { min: u32, got: u32 },
    #[error("module is not a multiplication module")]
    NotMultiplication,
    #[error("map is not a module homomorphism: {0}")]
    NotHomomorphism(String),
    #[error("set is not multiplicatively closed or misses 1")]
    NotMultiplicativelyClosed,
    #[error("phi is not defined here: {0}")]
    PhiDomain(String),
    #[error("submodule is not phi-classical 1-absorbing prime")]
    NotPhiClassical,
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("parse error at {line}:{column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("unknown element label `{0}`")]
    UnknownElement(String),
}

pub type Result<T> = std::result::Result<T, Error>;
