//! groth-kit: exact computation of Schubert and Grothendieck polynomials,
//! bumpless pipe dreams, zero-one classification and factorization, and
//! Lorentzian / M-convexity checks.

pub mod analysis;
pub mod permcore;
pub mod bpd;
pub mod groth;
pub mod polyring;
pub mod verify;
pub mod zeroone;

pub use permcore::{Diagram, PermError, Permutation};
pub use polyring::{ExponentVector, IntPolynomial, PolyError, RatPolynomial, SparsePolynomial, VarSpace};
