//! Exact computational algebra for hyperoctahedral groups.
//!
//! A hyperoctahedral group `W_n` is the group of signed permutations of
//! `{1, ..., n}`: bijections `w` of `{±1, ..., ±n}` with `w(-a) = -w(a)`.
//! This crate builds, with exact rational and cyclotomic arithmetic,
//!
//! * the combinatorics of signed compositions and signed partitions,
//! * the group `W_n` itself (cycle structure, descents, Coxeter length,
//!   conjugacy classes and centralizers),
//! * the Mantaci-Reutenauer subalgebra of the group algebra together with
//!   its distinguished quasi-idempotents `e_p`, the primitive idempotents
//!   `E_λ`, and the eigen-elements `ẽ_λ` on which centralizers act by
//!   roots of unity,
//! * class functions, induced characters, the linear characters `φ_λ` of
//!   centralizers, and the homomorphism `θ_n` onto class functions,
//!
//! and a verification suite that checks the defining identities of all of
//! the above at small rank.
//!
//! Everything is computed exactly; there is no floating point anywhere.

pub mod algebra;
pub mod characters;
pub mod compositions;
pub mod error;
pub mod group;
pub mod scalars;

pub use algebra::{AlgebraElement, CyclotomicElement, MrBasis, RationalElement};
pub use characters::{ClassFunction, Theta};
pub use compositions::{SignedComposition, SignedPartition};
pub use error::Error;
pub use group::{SignedCycle, SignedPermutation};
pub use scalars::{Cyclotomic, Rational};

/// Largest `n` for which `W_n` is enumerated without an explicit override
/// (`|W_6| = 46080`; beyond that class data comes from order formulas).
pub const DEFAULT_GROUP_BOUND: usize = 6;
