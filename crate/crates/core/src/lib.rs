pub mod catalog;
pub mod coherence;
pub mod combinat;
pub mod error;
pub mod field;
pub mod ideal;
pub mod lp;
pub mod polytope;
pub mod random;
pub mod report;
pub mod svg;
pub mod tableau;
pub mod weights;

pub use combinat::{subsets, Composition, Permutation, Subset};
pub use error::{Error, Result};
pub use field::MatchingField;
