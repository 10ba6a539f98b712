//! Exact arithmetic for juggler's friezes.
//!
//! A juggling function `π` fixes the shape of a frieze: an n-periodic,
//! lower unitriangular array `C` supported between the diagonal and the
//! boundary `a = π(b)`. This crate builds such friezes from π-unimodular
//! matrices, checks the frieze and tameness conditions, computes duals,
//! and exposes the superperiodic recurrences whose solutions they encode.
//!
//! Everything is exact over `Q`; the crate is `no_std` and needs only `alloc`.
//!
//! ```
//! use jfrieze_core::juggling::parse_siteswap;
//! use jfrieze_core::{build_frieze_det, build_frieze_twist, frieze_to_matrix, same_plucker, RationalMatrix};
//!
//! let a = RationalMatrix::from_ints(&[
//!     [1, 0, -1, 0, 1, 2, 0, -3],
//!     [0, 1, 2, 0, -1, -1, 0, 1],
//!     [0, 0, 0, 1, 2, 1, 0, -1],
//!     [0, 0, 0, 0, 0, 0, 1, 1],
//! ]);
//! let pi = parse_siteswap("23345357")?;
//! let c = build_frieze_det(&a, &pi)?;
//! assert_eq!(c.shape().siteswap(), "53635514");
//! assert_eq!(c, build_frieze_twist(&a, &pi)?);
//! assert!(c.is_frieze());
//! assert!(same_plucker(&frieze_to_matrix(&c)?, &a));
//! # Ok::<(), jfrieze_core::Error>(())
//! ```

#![no_std]
#![forbid(unsafe_code)]
#![warn(missing_docs)]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod construct;
mod error;
pub mod frieze;
pub mod juggling;
pub mod matrix;
pub mod rational;
pub mod recurrence;

pub use construct::{
    build_frieze_det, build_frieze_twist, frieze_to_matrix, inverse_twist,
    is_consecutively_unimodular, is_pi_unimodular, positive_complement, same_plucker, twist,
    CertificateKind, UnimodularCertificate,
};
pub use error::{Error, Result};
pub use frieze::{FriezeReport, PeriodicFrieze};
pub use juggling::{Classification, JugglingFunction};
pub use matrix::RationalMatrix;
pub use rational::Rational;
pub use recurrence::{Sequence, SolutionWindow};

