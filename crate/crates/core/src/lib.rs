//! Exact certificates for the minimum number of distinct eigenvalues of
//! distance-regular graphs.
//!
//! Everything here runs on `core` and `alloc`: matrices are exact rationals,
//! graphs are label-canonical, and every claimed identity is checked by
//! multiplication or elimination rather than trusted.

#![no_std]

extern crate alloc;

pub mod bounds;
pub mod codes;
pub mod combinatorics;
pub mod johnson;
pub mod error;
pub mod graph;
pub mod hamming;
pub mod linalg;
pub mod obstruction;
pub mod scheme;
pub mod simplicial;

pub use error::{Error, Result};
pub use graph::{Graph, SignedGraph};
pub use linalg::{ExactMatrix, PrimeFieldMatrix, Rational};
