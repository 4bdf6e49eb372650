//! Certified constructions of `d`-regular Cayley nut graphs.
//!
//! A nut graph is a simple graph on at least two vertices whose adjacency
//! matrix has a one-dimensional null space spanned by a vector with no zero
//! entries. For every `d` divisible by four and every even `n ≥ d + 4` this
//! crate builds a `d`-regular Cayley nut graph of order `n` and proves the
//! nut property with exact integer arithmetic.
//!
//! The crate is `no_std` and needs only `alloc`.
//!
//! ```
//! use cayley_nut_core::{construct_cayley_nut, Regime, SearchWindow};
//!
//! let result = construct_cayley_nut(12, 8, SearchWindow::default()).unwrap();
//! assert_eq!(result.regime, Regime::PrismComplement);
//! result.certificate.verify().unwrap();
//! ```

#![no_std]

extern crate alloc;

pub mod constructions;
mod error;
pub mod graph;
pub mod graph6;
pub mod group;
pub mod linalg;
pub mod nut;
pub mod poly;

pub use constructions::{
    cayley_feasible, check_cayley_feasible, construct_cayley_nut, prism_complement,
    prism_kernel_vector, qd16_nut_graph, select_regime, ConstructionParameters, ConstructionResult,
    Regime, SearchWindow, DEFAULT_SEARCH_WINDOW,
};
pub use error::{Error, FailedCondition, Result};
pub use graph::{
    cartesian_product, cayley_graph, circulant_graph, complement, cycle_graph, k2, ConnectionSet,
    Graph,
};
pub use graph6::{decode_graph6, encode_graph6};
pub use group::{cyclic_group, direct_product, quasidihedral_16, FiniteGroup, GeneratorSet};
pub use linalg::{
    adjacency_matrix, is_full_vector, kernel_basis, matvec, IntMatrix, KernelBasis, RationalVector,
};
pub use nut::{
    circulant_exists, circulant_is_nut, circulant_nullity, enumerate_connection_sets, is_nut,
    regular_nut_necessary, search_circulant_nut, NotNutReason, NutCertificate, NutVerdict,
};
