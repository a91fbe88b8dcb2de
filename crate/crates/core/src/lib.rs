//! Boolean complexes of ordered graphs and their derangement bases.
//!
//! The boolean complex `Δ(G)` of a finite simple graph has the injective
//! words on `V(G)`, taken modulo commutation of non-adjacent letters, as
//! its cells. Its reduced F₂-homology is concentrated in the top degree
//! and has dimension `β(G)`, the boolean number. This crate
//!
//! * computes `β(G)` by the deletion / contraction / extraction recursion
//!   ([`graph::beta`]),
//! * builds the derangement set `D(G)` by the same recursion and by a
//!   closed-form adjacency test ([`derangement`]),
//! * maps each derangement to a top-degree cycle by bracket expansion
//!   ([`homology::phi_graph`]), and
//! * certifies by exact F₂ elimination that these cycles form a basis
//!   ([`homology::verify_basis`]).
//!
//! ```
//! use boolean_complex::graph::{make_family, Family};
//! use boolean_complex::homology::{verify_basis, Verdict};
//!
//! let k4 = make_family(Family::Complete, 4).unwrap();
//! let report = verify_basis(&k4).unwrap();
//! assert_eq!(report.beta, 9);
//! assert_eq!(report.verdict, Verdict::Pass);
//! ```

pub mod chain;
pub mod cli;
pub mod derangement;
pub mod error;
pub mod gf2;
pub mod graph;
pub mod homology;

pub use error::{Error, Result};
