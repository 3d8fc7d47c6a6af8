//! Exact combinatorics of the dot action on the cohomology of regular
//! semisimple Hessenberg varieties in type A.
//!
//! The crate computes, for a Hessenberg function `h`, the graded
//! decomposition `H^{2i}(Hess(S, h)) = Σ_λ c_{λ,i} M^λ` into tabloid modules,
//! together with the objects that govern it: the root ideal `I_h`, the
//! incomparability graph `Γ_h` with its acyclic orientations and sink sets,
//! Kostka numbers and the matrix `N = KᵀK`, and Poincaré polynomials of the
//! regular Hessenberg varieties `Hess(X_ν, h)`.
//!
//! Every computation is exact and exhaustive; the intended scale is `n <= 8`.
//!
//! ```
//! use hessdot::{decompose, HessenbergFunction, Partition};
//!
//! let h = HessenbergFunction::new(vec![2, 3, 4, 4]).unwrap();
//! let dec = decompose(&h).unwrap();
//! let p = |v: &[usize]| Partition::new(v.to_vec()).unwrap();
//! assert_eq!(dec.c_at(&p(&[4]), 1), 1);
//! assert_eq!(dec.c_at(&p(&[3, 1]), 1), 1);
//! assert_eq!(dec.c_at(&p(&[2, 2]), 1), 1);
//! ```

#![forbid(unsafe_code)]

pub mod betti;
pub mod dot_action;
pub mod error;
pub mod induction;
pub mod orientations;
pub mod partitions;
pub mod report;
pub mod roots;

pub use betti::{poincare, Composition, GradedPolynomial, Permutation};
pub use dot_action::{decompose, BettiTable, DecompositionCache, GradedRepDecomposition};
pub use error::{Error, Result};
pub use induction::{Suite, VerifyOptions};
pub use orientations::{build_graph, AcyclicOrientation, IncomparabilityGraph, SinkSet};
pub use partitions::{partitions_of, Int, IntegerMatrix, Partition, PartitionOrder};
pub use report::{CheckKind, CheckReport, Summary};
pub use roots::{HessenbergFunction, IdealHeightReport, Root, RootSet};
