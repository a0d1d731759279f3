use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("graph must have at least one vertex")]
    Empty,
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("graph is disconnected: only {reached} of {n} vertices reachable from vertex 0")]
    Disconnected { reached: usize, n: usize },
    #[error("graph on {0} vertices exceeds the 64-vertex bit-set limit")]
    TooLargeForBitset(usize),
    #[error("relabeling is not a permutation of the vertex set")]
    BadPermutation,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FormatError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("line {line}: {source}")]
    Graph { line: usize, source: GraphError },
}

impl FormatError {
    pub fn line(&self) -> usize {
        match self {
            FormatError::Parse { line, .. } | FormatError::Graph { line, .. } => *line,
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FamilyError {
    #[error("invalid parameters for {family}: {reason}")]
    Parameter { family: &'static str, reason: String },
    #[error("cannot parse family `{0}`; expected one of P:n C:n K:n KB:a,b S:n CP:n CH:n TH:a,b,c AD:n,d")]
    Syntax(String),
    #[error("no closed-form NGG value for {0}")]
    NoClosedForm(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EnumerationError {
    #[error(
        "n = {n} exceeds the feasibility bound {bound} for {class}; raise the bound explicitly (--max-n or GGINDEX_MAX_N) if you accept the runtime"
    )]
    TooLarge { n: usize, bound: usize, class: &'static str },
    #[error("invalid constraints: {0}")]
    Constraints(String),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ExtremalError {
    #[error("no graphs to scan")]
    EmptyStream,
    #[error(transparent)]
    Enumeration(#[from] EnumerationError),
    #[error(transparent)]
    Family(#[from] FamilyError),
    #[error("{0}")]
    Invalid(String),
}
