//! Combinatorics of twisted generalized locally analytic Steinberg
//! representations and the period-domain chain complex built from them.
//!
//! The crate is layered bottom-up:
//!
//! * [`root_datum`]: finite root systems from Cartan matrices, exact pairings.
//! * [`weyl`]: enumerated Weyl groups, Bruhat order, Kostant representatives.
//! * [`kl`]: Kazhdan–Lusztig polynomials and Verma multiplicities `m(u, v)`.
//! * [`jh`]: Jordan–Hölder multiplicities of `V^G_B(w)`.
//! * [`period_domain`]: the index sets `Omega_I`, Schubert-cell data, the
//!   chain complex `C_*` and interval bounds on its homology.

pub mod error;
pub mod jh;
pub mod json;
pub mod kl;
pub mod matrix;
pub mod period_domain;
pub mod root_datum;
pub mod subset;
pub mod weyl;

pub use error::{Error, Result};
pub use jh::{FactorTable, JhFactor, JhContext};
pub use kl::{KlPolynomial, KlTable};
pub use root_datum::{coweight_from_gln, CartanType, ChamberReport, Coweight, RootDatum, Weight};
pub use subset::SimpleSubset;
pub use weyl::{WeylElement, WeylGroup};
