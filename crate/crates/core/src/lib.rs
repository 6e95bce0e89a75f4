//! Exact combinatorics on binary words: periods and fractional powers,
//! balanced-word enumeration, Sturmian word generation from quadratic
//! irrational slopes, Pell (Ostrowski) numeration, and gap censuses over
//! the ending positions of `e`-powers.
//!
//! All arithmetic is exact. Exponents are [`Rational`]s, slopes and
//! intercepts are [`QuadraticIrrational`]s, and ending positions are 0-based
//! indices of the last symbol of an occurrence.

mod error;
mod rational;

pub mod balanced;
pub mod gaps;
pub mod pell;
pub mod sturmian;
pub mod verify;
pub mod words;

pub use error::{Error, Result};
pub use gaps::{ExponentRow, GapReport};
pub use pell::PellRepresentation;
pub use rational::Rational;
pub use sturmian::QuadraticIrrational;
pub use words::{BinaryWord, PowerOccurrence, PowerScan};
