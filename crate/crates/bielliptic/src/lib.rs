//! Exact-arithmetic toolkit for bielliptic smooth plane quartic curves.
//!
//! The crate provides, over the rationals and small number fields:
//!
//! * exact rational and number-field arithmetic ([`rat`], [`nf`]);
//! * univariate polynomials, resultants and low-degree factorization
//!   over Q ([`poly`], [`factor`]);
//! * plane projective curves, nonsingularity testing and projective
//!   changes of variables ([`ternary`], [`transform`], [`curve`]);
//! * the catalog of bielliptic involutions per automorphism stratum,
//!   fixed-point counting and diagonalization ([`involutions`]);
//! * the parametrized curve families and their admissibility
//!   predicates ([`families`]);
//! * quotients of quartics by involutions down to Weierstrass form,
//!   with invertible substitution chains ([`quotient`]);
//! * elliptic curves over Q: invariants, group law, torsion
//!   certificates, quadratic twists and naive point search
//!   ([`elliptic`]);
//! * height-bounded enumeration of rational and quadratic points on
//!   plane curves, and pullback of elliptic points to quadratic points
//!   ([`quad`]);
//! * a registry of named verification suites replaying the library's
//!   headline identities as machine-checkable experiments ([`verify`]).
//!
//! Everything is exact: no floating point is used anywhere.

pub mod elliptic;
pub mod error;
pub mod factor;
pub mod families;
pub mod involutions;
pub mod nf;
pub mod pit;
pub mod poly;
pub mod quad;
pub mod quotient;
pub mod rat;
pub mod ternary;
pub mod transform;
pub mod verify;

pub mod curve;

pub use error::Error;
pub use rat::Rat;
