//! Exact and certified arithmetic for algebraic numbers, heights,
//! multiplicative dependence, Galois actions on eigenvalues and lengths of
//! semisimple elements of `SL_n`.
//!
//! Everything here needs only `alloc`; file formats and the command-line
//! tool live in the `salemforge` crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod algnum;
pub mod arith;
pub mod bounds;
pub mod error;
pub mod galois;
pub mod heights;
pub mod intpoly;
pub mod lattice;
pub mod limits;
pub mod numfield;
pub mod reldep;

pub use algnum::AlgebraicNumber;
pub use error::{Error, Result};
pub use intpoly::{IntPolynomial, RootBox};
