//! Linear degenerations of type-A flag varieties, studied through quiver
//! Grassmannians for the equioriented A_n quiver.
//!
//! The library works entirely in exact arithmetic (arbitrary-precision
//! rationals or prime fields) and covers:
//!
//! * rank tuples, interval decompositions and named representations ([`core`])
//! * Hom/Ext dimensions, degeneration order, embeddings and the
//!   decomposition of the flag Grassmannian into strata ([`homalg`])
//! * flatness / irreducibility / normality / PBW locus classification,
//!   rhyme-scheme combinatorics and group actions on the PBW locus ([`loci`])
//! * non-crossing arc diagrams, the component bijection and the
//!   desingularization tower ([`arcs`])
//! * cellular decomposition of quiver Grassmannians, Poincaré polynomials
//!   and point counts over finite fields ([`cells`])
//! * PBW degenerations via Schubert words and Demazure characters ([`pbw`])

pub mod arcs;
pub mod cells;
pub mod core;
pub mod error;
pub mod field;
pub mod homalg;
pub mod loci;
pub mod matrix;
pub mod pbw;
