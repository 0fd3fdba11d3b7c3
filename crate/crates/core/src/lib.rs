//! Exact computation of knot concordance obstruction data.
//!
//! The crate is layered bottom-up:
//!
//! * [`laurent`]: rational Laurent polynomials, gcd, squarefree decomposition,
//!   complete factorization over ℚ and the Fox–Milnor test.
//! * [`seifert`]: Alexander polynomials, signatures, Levine–Tristram signature
//!   profiles and the zeroth-order signature ρ⁽⁰⁾ from a Seifert matrix.
//! * [`twist`]: the twist knots `K_n` and their order-two / strong
//!   irreducibility criteria, plus the external ρ⁽¹⁾ status table.
//! * [`blanchfield`]: cyclic Alexander modules with their linking form,
//!   complexity inflation, localization and isotropic submodule search.
//! * [`obstruction`]: anisotropy and localization certificates and the
//!   linear-independence certificate with its independent verifier.

pub mod blanchfield;
pub mod error;
pub mod laurent;
mod linalg;
pub mod obstruction;
pub mod seifert;
pub mod twist;

pub use error::{Error, Result};
pub use laurent::{LaurentPoly, Rational};
