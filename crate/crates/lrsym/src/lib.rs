//! Littlewood-Richardson tableau machinery: shape and word operators,
//! jeu de taquin, tableau switching, the conjugation symmetry maps, a
//! brute-force enumeration oracle, and a cost-accounted circuit model
//! with a linearity benchmark harness.

pub mod circuits;
pub mod conjugation;
pub mod crystal;
pub mod error;
pub mod jdt;
pub mod json;
pub mod oracle;
pub mod plactic;
pub mod shapes;
pub mod suites;
pub mod switching;
pub mod tableau;
pub mod words;

pub use error::{Error, Result};
pub use shapes::{circ, CellOrder, NumberingVariant, Partition, SkewShape};
pub use tableau::{cf_member, yamanouchi_tableau, RecordingMatrix, StandardTableau, Tableau};
pub use words::Word;
