//! Process-wide limits.

use std::sync::atomic::{AtomicU64, AtomicU8, Ordering};

/// Default cap on the order of any group whose elements are enumerated.
pub const DEFAULT_MAX_ENUMERABLE_ORDER: u64 = 1_000_000;

/// Default cap on candidate elements generated when seeds must be drawn from
/// the full symmetric group instead of an enumerated group.
pub const DEFAULT_MAX_CANDIDATES: u64 = 200_000_000;

static MAX_ENUMERABLE_ORDER: AtomicU64 = AtomicU64::new(DEFAULT_MAX_ENUMERABLE_ORDER);
static MAX_CANDIDATES: AtomicU64 = AtomicU64::new(DEFAULT_MAX_CANDIDATES);
static FAULT: AtomicU8 = AtomicU8::new(0);

pub fn max_enumerable_order() -> u64 {
    MAX_ENUMERABLE_ORDER.load(Ordering::Relaxed)
}

pub fn set_max_enumerable_order(n: u64) {
    MAX_ENUMERABLE_ORDER.store(n, Ordering::Relaxed);
}

pub fn max_candidates() -> u64 {
    MAX_CANDIDATES.load(Ordering::Relaxed)
}

pub fn set_max_candidates(n: u64) {
    MAX_CANDIDATES.store(n, Ordering::Relaxed);
}

/// Deliberate defects used to check that the harness notices broken primitives.
#[doc(hidden)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[repr(u8)]
pub enum Fault {
    None = 0,
    /// `normal_closure` returns its input unchanged.
    IdleNormalClosure = 1,
}

#[doc(hidden)]
pub fn inject_fault(fault: Fault) {
    FAULT.store(fault as u8, Ordering::SeqCst);
}

pub(crate) fn fault() -> Fault {
    match FAULT.load(Ordering::Relaxed) {
        1 => Fault::IdleNormalClosure,
        _ => Fault::None,
    }
}
