//! Exact dyadic numbers and certified interval arithmetic.

pub mod complex;
pub mod dyadic;
pub mod interval;
pub mod transcendental;

pub use complex::{CDyadic, CInterval};
pub use dyadic::{Dyadic, Round};
pub use interval::Interval;
