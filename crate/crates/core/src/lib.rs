//! Exact computations with free Lie rings, their derivation algebras, and the Johnson
//! homomorphism of the McCool groups of basis-conjugating automorphisms.

#![allow(clippy::needless_range_loop)]

pub mod cli;
pub mod coeff;
pub mod derivations;
pub mod exactla;
pub mod freelie;
pub mod johnson;
pub mod packed;
pub mod properties;
pub mod psigma3;
pub mod sample;
pub mod stabilization;
pub mod symmetry;

pub use coeff::{Coeff, Ring};
