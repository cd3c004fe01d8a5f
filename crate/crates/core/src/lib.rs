//! Bound states of the Dirac equation with a Yukawa potential `−A e^{−αr}/r`
//! under spin and pseudospin symmetry, solved in the Greene-Aldrich
//! approximation with the Nikiforov-Uvarov method, plus the nonrelativistic,
//! Coulomb and exact-symmetry limits and a Numerov shooting oracle.
//!
//! Natural units throughout: energies, masses and `α` in fm⁻¹.

// Tabulated constants are kept as published; `!(x > 0)` also rejects NaN.
#![allow(clippy::excessive_precision, clippy::neg_cmp_op_on_partial_ord)]

pub mod error;
pub mod limits;
pub mod model;
pub mod nu_engine;
pub mod oracle;
pub mod pseudospin_spectrum;
pub mod quadrature;
pub mod radial;
pub mod specfun;
pub mod spin_spectrum;

pub use error::{Error, Result};
pub use model::{Branch, EnergyPair, PhysicalParams, Root, RootClass, SpuriousCause, StateIndex};
