//! List homomorphisms to trigraphs: models, consistency reductions, class
//! recognition and a polynomial-route solver pipeline with a brute-force
//! oracle for cross-checking.

pub mod budget;
pub mod consistency;
pub mod error;
pub mod gen;
pub mod graph;
pub mod instance;
pub mod network;
pub mod oracle;
pub mod pipeline;
pub mod recognize;
pub mod representatives;
pub mod surjective;
pub mod trigraph;
pub mod twosat;
pub mod vset;

pub use budget::Budget;
pub use error::{Error, Result};
pub use graph::Graph;
pub use instance::{check_certificate, Certificate, InstanceFamily, ListInstance};
pub use oracle::brute_force;
pub use trigraph::{EdgeKind, Remap, Trigraph};
pub use vset::VSet;
