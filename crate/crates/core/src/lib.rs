//! Exact embedded resolution of plane curve germs and the invariants read
//! off from it: topological, motivic and p-adic zeta functions, monodromy
//! zeta functions, log canonical thresholds, and verifiers for the
//! conjectures relating them.
//!
//! The crate is `no_std` and only needs an allocator. Everything is exact;
//! there is no floating point in any computation.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod algebra;
pub mod error;
pub mod lab;
pub mod monodromy;
pub mod padic;
pub mod resolution;
pub mod zeta;

pub use error::{Error, Result};
