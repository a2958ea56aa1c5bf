//! Twisted Alexander polynomials of finitely presented groups.
//!
//! The pipeline is: a presentation with an augmentation `eps: G -> Z` and a
//! representation `rho: G -> GL_r(F)` ([`presentations`]) is turned into the
//! twisted chain complex of its presentation 2-complex via Fox calculus
//! ([`twisted_homology`]), whose homology is computed over the PID
//! `F[t, t^-1]` ([`laurent`]) with `F = Q(zeta_n)` ([`scalars`]).
//! [`obstructions`] collects the divisibility and root-field checks for plane
//! curve complements.

pub mod expr;
pub mod laurent;
pub mod obstructions;
pub mod presentations;
pub mod scalars;
pub mod twisted_homology;

pub use laurent::{LaurentMatrix, LaurentPoly, ModuleShape, RationalFunction};
pub use scalars::{CycloNumber, FieldContext, Matrix, Rational};
