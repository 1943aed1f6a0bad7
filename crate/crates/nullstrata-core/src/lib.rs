//! Exact-arithmetic engine for the Hesselink stratification of nullcones.
//!
//! Given the root datum of a split reductive group and the character of an
//! admissible module (a Weyl-invariant multiset of weights), this crate
//! enumerates the Hesselink strata of the nullcone and evaluates the
//! point-count polynomial `n_V(t)` with `n_V(q) = |N_V(F_q)|` for every
//! prime power `q`, by recursion on the rank of the acting group.
//!
//! All arithmetic is exact: vectors live in `Q^r` with arbitrary-precision
//! rational coordinates, polynomials carry `BigInt` coefficients, and the
//! convex min-norm kernel produces decidable optimality certificates.
//! Brute-force finite-field oracles ([`oracle`]) provide independent ground
//! truth at desk scale.
//!
//! The crate is `no_std` (with `alloc`); IO, CLI and file formats live in
//! the companion `nullstrata-cli` crate.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod count;
pub mod error;
pub mod geomopt;
pub mod linalg;
pub mod oracle;
pub mod poly;
pub mod repchar;
pub mod rootsys;
pub mod strata;

pub use error::{Error, Result};
pub use linalg::{Gram, QVec, Rat};
pub use poly::IntPoly;
pub use repchar::ModuleCharacter;
pub use rootsys::{Family, RootDatum, TypeSpec};
pub use strata::{Engine, EngineConfig, GroupState, Stratum};
