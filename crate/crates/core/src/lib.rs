//! Exact constructions and certificates for self-complementary strongly
//! regular Cayley graphs over finite abelian groups.
//!
//! The crate is `no_std` (it needs `alloc`). File formats, reports and the
//! command-line front end live in the `scsrg` crate.

#![no_std]

extern crate alloc;

pub mod algebra;
pub mod arith;
pub mod cayley;
pub mod constructions;
pub mod field;
pub mod graph;
pub mod group;
pub mod iso;

pub use algebra::GroupAlgebraElement;
pub use cayley::ConnectionSet;
pub use field::{FieldElement, FiniteField};
pub use graph::{DenseGraph, SrgParams};
pub use group::{AbelianGroup, EnumerationBudget, GroupAutomorphism, GroupElement};
pub use iso::{IsoCertificate, IsoDecision, IsoOptions};
