//! Rogers dilogarithm identities on the standard cell of `M_{0,n}`.
//!
//! The crate is `no_std` (it needs `alloc`) and is organised bottom-up:
//!
//! - [`chords`]: chords of the n-gon, crossings, forgetful decorations and
//!   block-chord pullbacks.
//! - [`coords`]: points on the real projective line, cross-ratios, dihedral
//!   coordinates, star-coordinate charts and a seeded cell sampler.
//! - [`dilog`]: `Li2` and the Rogers dilogarithm `L` on `[0, 1]`.
//! - [`relations`]: crossing relations, the exact wedge cancellation behind
//!   `d(E_n) = 0`, and chord degeneration.
//! - [`reduction`]: certificates reducing `Eq_n` to pullbacks of smaller
//!   equations, with exact and numeric verification.
//!
//! ```
//! use rogers_eqn_core::reduction::{verify_eqn, NumericOptions};
//!
//! let report = verify_eqn(7, &NumericOptions { samples: 10, ..Default::default() }).unwrap();
//! assert!(report.max_residual < 1e-10);
//! ```
#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod chords;
pub mod coords;
pub mod dilog;
mod error;
pub mod formal;
pub mod reduction;
pub mod relations;

pub use error::{Error, Result};
