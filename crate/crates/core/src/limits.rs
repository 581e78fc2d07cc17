//! Process-wide size caps.

use core::sync::atomic::{AtomicUsize, Ordering};

static FACTOR_DEGREE_CAP: AtomicUsize = AtomicUsize::new(64);
static SPLITTING_DEGREE_CAP: AtomicUsize = AtomicUsize::new(24);

/// Largest degree accepted by [`crate::intpoly::factor_over_integers`].
pub fn factor_degree_cap() -> usize {
    FACTOR_DEGREE_CAP.load(Ordering::Relaxed)
}

pub fn set_factor_degree_cap(cap: usize) {
    FACTOR_DEGREE_CAP.store(cap, Ordering::Relaxed);
}

/// Largest splitting-field degree over the base accepted by the Galois module.
pub fn splitting_degree_cap() -> usize {
    SPLITTING_DEGREE_CAP.load(Ordering::Relaxed)
}

pub fn set_splitting_degree_cap(cap: usize) {
    SPLITTING_DEGREE_CAP.store(cap, Ordering::Relaxed);
}

/// Largest degree an algebraic number may have.
pub const MAX_ALGEBRAIC_DEGREE: usize = 256;
