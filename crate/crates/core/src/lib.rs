//! Generalised quadrangles over finite fields, the p-ary codes of their
//! point-line incidence matrices, and the repair metrics of the dual codes
//! viewed as locally repairable codes.
//!
//! The crate is `no_std` and only needs `alloc`. File formats, threading and
//! the command line live in the `gqlrc` crate.
//!
//! - [`gf`]: arithmetic in `F_{p^h}`.
//! - [`pgeom`]: projective/affine spaces, classical varieties, field reduction.
//! - [`egg`]: eggs `E_{n,m}` and their verification.
//! - [`gq`]: `T(E)`, `T2*(O)`, classical quadrangles, axiom checks.
//! - [`codes`]: p-ary codes, minimum distance, low-weight codewords.
//! - [`lrc`]: repair degree and availability.

#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

pub mod codes;
pub mod egg;
pub mod error;
pub mod gf;
pub mod gq;
pub mod linalg;
pub mod lrc;
pub mod matrix;
pub mod pgeom;

pub use error::{Error, Result};
