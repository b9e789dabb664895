//! Exact arithmetic for the binary forms attached to `2cos(2π/n)`, `2sin(2π/n)`
//! and the Chebyshev polynomials, together with their rational automorphism
//! groups and the invariants `W_F`, `A_F`, `C_F` governing how many integers
//! such a form represents.
//!
//! The crate is organised bottom-up:
//!
//! * [`arith`], [`poly`], [`form`], [`matrix`]: exact integers, rationals,
//!   univariate polynomials, binary forms and 2×2 rational matrices.
//! * [`mpc`], [`roots`], [`recon`]: multiprecision complex numbers, projective
//!   root isolation and continued-fraction rational reconstruction.
//! * [`trig`], [`chebyshev`]: the forms `Ψₙ`, `Πₙ`, `Tₙ`, `Uₙ`, `Ũₙ`, `Ṽₙ` and
//!   the arithmetic sweeps around them.
//! * [`group`], [`aut`], [`expected`]: finite matrix groups, automorphism
//!   search and the closed-form answers the search is checked against.
//! * [`quad`], [`invariants`]: quadrature of the fundamental region and the
//!   assembled invariant report.
//! * [`verify`], [`tables`], [`source`]: statement-by-statement verification
//!   records, reference values and form sources.

pub mod arith;
pub mod aut;
pub mod chebyshev;
pub mod error;
pub mod expected;
pub mod form;
pub mod group;
pub mod invariants;
pub mod matrix;
pub mod mpc;
pub mod poly;
pub mod quad;
pub mod recon;
pub mod roots;
pub mod source;
pub mod tables;
pub mod trig;
pub mod verify;

pub use error::{Error, Result};
pub use form::BinaryForm;
pub use group::{GroupClass, MatrixGroup};
pub use matrix::Mat2Q;
pub use poly::IntPoly;
