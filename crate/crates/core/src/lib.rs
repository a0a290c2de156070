//! Exact integer constructions around arithmetic progressions of three
//! squares, and bounded sweeps showing their common difference is never a
//! perfect square.
//!
//! All arithmetic is generic over [`Scalar`]. [`Natural`] is the
//! arbitrary-precision default and the aliases below fix it for the usual
//! case; `u64`/`u128` work too when magnitudes are known to fit.
//!
//! ```
//! use congruum::{apsquares, Natural};
//!
//! let w = apsquares::congruum_from_params(
//!     &Natural::from(2u32),
//!     &Natural::from(1u32),
//!     &Natural::from(1u32),
//! )
//! .unwrap();
//! assert_eq!(w.r, Natural::from(24u32));
//! ```

pub mod apsquares;
pub mod constructions;
pub mod descent;
mod error;
pub mod intcore;
pub mod report;
pub mod shard;
pub mod triples;

pub use error::{Error, Result};
pub use intcore::Scalar;
pub use report::VerificationReport;

/// Arbitrary-precision non-negative integer.
pub type Natural = num_bigint::BigUint;

pub type TripleParams = triples::TripleParams<Natural>;
pub type PythTriple = triples::PythTriple<Natural>;
pub type CongruumWitness = apsquares::CongruumWitness<Natural>;
pub type Progression = apsquares::Progression<Natural>;
pub type AbdSolution = apsquares::AbdSolution<Natural>;
pub type QuadParams = constructions::QuadParams<Natural>;
pub type PythQuadruple = constructions::PythQuadruple<Natural>;
pub type Triangle = constructions::Triangle<Natural>;
pub type QuadSumWitness = constructions::QuadSumWitness<Natural>;
pub type FourSplit = descent::FourSplit<Natural>;
pub type CongruumCandidate = descent::CongruumCandidate<Natural>;
