//! Ratliff-Rush closures, reductions, Valabrega-Valla conditions and
//! Hilbert-Samuel data of m-primary ideals in polynomial rings (and their
//! quotients) localized at the origin.
//!
//! Layers, bottom up:
//!
//! * [`poly`]: exact coefficients, monomials, orders, sparse polynomials.
//! * [`groebner`]: Buchberger's algorithm, normal forms, standard monomials.
//! * [`ideals`]: ideal algebra (sum, product, power, intersection, colon).
//! * [`local`]: certified degree truncation for lengths and comparisons in
//!   the local ring at the origin.
//! * [`invariants`]: filtration invariants and executable checks of the
//!   statements they satisfy.
//! * [`oracle`]: a Gröbner-free engine for monomial ideals used to
//!   cross-check the rest.
//! * [`session`]: the line-oriented session language and JSON reports.

pub mod error;
pub mod groebner;
pub mod ideals;
pub mod invariants;
mod linalg;
pub mod local;
pub mod oracle;
pub mod poly;
pub mod rng;
pub mod session;

pub use error::{Error, Result};
