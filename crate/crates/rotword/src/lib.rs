//! Exact arithmetic for rotation subgroups of SO(3).
//!
//! This crate deals with groups generated by rotations through angles 2πa/m
//! about coordinate axes, rotations through multiples of arctan(4/3), and
//! x-rotations through a formally transcendental angle. Everything is exact:
//! matrix entries live in cyclotomic integer rings scaled by powers of two,
//! in Z[1/5], or in Laurent polynomials over the Gaussian rationals. No
//! floating point is ever consulted for a decision (an f64 bridge exists for
//! sanity checks only).
//!
//! Capability map:
//!
//! - [`cyclo`]: cyclotomic integers in the power basis, dyadic scaling,
//!   exponent splitting into odd and two-power parts, and the GF(2^d)
//!   residue fields that power non-identity certificates.
//! - [`rot3`]: exact 3×3 rotation matrices over pluggable scalar rings.
//! - [`words`]: group words over the supported generator alphabets —
//!   parsing, printing, free reduction, and exact evaluation.
//! - [`normal`]: canonical forms and the word problem — normalization for
//!   two-generator axis-rotation groups in every decidable parameter
//!   regime, equality, and identity tests.
//! - [`certify`]: self-contained non-identity certificates (ideal-residue,
//!   mod-5, and leading-term kinds) with stable text serialization.
//! - [`explore`]: enumeration of canonical balls, closed-form counting,
//!   finite-closure detection, free-product verification, and substitution
//!   orbit statistics for tiling-style rules.
//! - [`cli`]: the command-line surface used by the `rotword` binary;
//!   testable in-process.
//!
//! The `examples/` directory is the guided tour: one runnable example per
//! major capability, from canonical forms through deflation orbits.

pub mod certify;
pub mod cli;
pub mod cyclo;
pub mod explore;
pub mod normal;
pub mod rot3;
pub mod sample;
pub mod words;
