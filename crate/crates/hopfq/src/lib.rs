//! Exact computer algebra for finite-dimensional non-associative bimonoids
//! and Hopf quasigroups.
//!
//! Everything is structure constants over an exact field (rationals or a
//! prime field), so every identity — bimonoid laws, divisions, antipodes,
//! two-cocycle conditions, skew pairings, quasitriangularity, Yetter-Drinfeld
//! compatibilities — is decided exactly, with a basis witness on failure.
//!
//! Layers, bottom up:
//!
//! * [`scalar`], [`space`], [`linmap`] — exact scalars and sparse linear maps
//!   between tensor powers of based spaces;
//! * [`expr`] — composition trees evaluated basis-vector-wise;
//! * [`algebra`] — structures, convolution, divisions, antipodes;
//! * [`laws`] — the identity catalog, the checker and the named suites;
//! * [`loops`] — finite loops by Cayley table and the loop-algebra functor;
//! * [`deform`] — two-cocycles and the deformed product;
//! * [`pairing`] — skew pairings, the induced cocycle, the twisted tensor
//!   product and double crossproducts;
//! * [`qtyd`] — quasitriangular structures, projections, Yetter-Drinfeld
//!   modules and biproducts;
//! * [`catalog`] — builtin structures (Taft algebra, Chein double of S3, the
//!   standard pairing and R-matrices);
//! * [`formats`] — the JSON/text file formats shared with the CLI.

pub mod algebra;
pub mod catalog;
pub mod deform;
pub mod error;
pub mod expr;
pub mod formats;
pub mod laws;
pub mod linmap;
pub mod loops;
pub mod pairing;
pub mod qtyd;
pub mod scalar;
pub mod space;

pub use error::{Error, Result};
pub use scalar::{Field, Scalar};
