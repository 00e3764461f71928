//! Z2Z4-additive codes: construction, duality, exact covering radii and an
//! audit of printed covering-radius formulas against exhaustive computation.

pub mod alphabet;
pub mod ambient;
pub mod codes;
pub mod constructions;
pub mod covering;
pub mod error;
pub mod verify;

pub use alphabet::{gray_symbol, BinaryVector, Metric, MixedVector};
pub use ambient::{Ambient, Budget, Word, HARD_LIMIT_LOG2};
pub use codes::{Code, CodeType, GeneratorMatrix, RowOrder, WeightDistribution};
pub use error::{Error, Result};
