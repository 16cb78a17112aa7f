use thiserror::Error;

/// Everything that can go wrong in the engine, the path model or the solver.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} cannot reach any sink")]
    NonStopping { vertex: usize },
    #[error("sink {vertex} has outgoing arc {arc}")]
    SinkWithOutArc { vertex: usize, arc: usize },
    #[error("non-sink vertex {vertex} has an empty rotor order")]
    EmptyRotorOrder { vertex: usize },
    #[error("rotor order at vertex {vertex} is not a permutation of its outgoing arcs")]
    BadRotorOrder { vertex: usize },
    #[error("vertex {vertex} out of range (graph has {count} vertices)")]
    VertexOutOfRange { vertex: usize, count: usize },
    #[error("arc {arc} out of range (graph has {count} arcs)")]
    ArcOutOfRange { arc: usize, count: usize },
    #[error("rotor position {position} out of range at vertex {vertex} (outdegree {degree})")]
    RotorOutOfRange {
        vertex: usize,
        position: usize,
        degree: usize,
    },
    #[error("vertex {vertex} is a sink")]
    SinkVertex { vertex: usize },
    #[error("negative particle count on non-sink vertex {vertex}")]
    NegativeInput { vertex: usize },
    #[error("vertices {0:?} do not form a circuit of the rotor graph")]
    NotACircuit(Vec<usize>),
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("index out of range: {0}")]
    IndexOutOfRange(String),
    #[error("invalid instance: {0}")]
    InvalidInstance(String),
    #[error("last digit {0} is not a multiple of x")]
    NonIntegralValue(String),
    #[error("symbol {symbol} at position {position} is outside the transducer alphabet")]
    SymbolOutOfRange { position: usize, symbol: String },
    #[error("rotor configuration is not acyclic")]
    NotAcyclic,
    #[error("digit word is not in the acyclic language")]
    NotInLa,
    #[error("{0} is not an arcmonic value")]
    NotAnArcmonicValue(String),
    #[error("size limit exceeded: {size} > {limit}")]
    SizeLimitExceeded { size: String, limit: String },
    #[error("step budget of {budget} exceeded")]
    StepBudgetExceeded { budget: u64 },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
