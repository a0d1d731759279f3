//! Graovac-Ghorbani (GG), normalized Graovac-Ghorbani (NGG) and
//! atom-bond connectivity (ABC) indices of connected graphs, the graph
//! families on which their extremal behavior is known, isomorph-free
//! enumeration of small graphs, and exhaustive extremal verification.
//!
//! ```
//! use ggindex::{families, indices};
//!
//! let p4 = families::path(4).unwrap();
//! assert!((indices::ngg_index(&p4) - 1.6547).abs() < 1e-4);
//! ```

pub mod canon;
pub mod enumerate;
pub mod error;
pub mod exact;
pub mod exec;
pub mod extremal;
pub mod families;
pub mod graph;
pub mod graph6;
pub mod indices;

pub use canon::CanonicalForm;
pub use enumerate::{Bounds, Constraints, Enumerator, GraphStream};
pub use error::{EnumerationError, ExtremalError, FamilyError, FormatError, GraphError};
pub use exec::Execution;
pub use extremal::{Claim, Direction, ExtremalResult, Objective, VerificationReport, VerifyOptions};
pub use families::FamilySpec;
pub use graph::{DistanceMatrix, Graph};
pub use indices::{EdgeSplit, Index, IndexValues};
