//! Exact tableau combinatorics for refined Grothendieck polynomials.

pub mod bijections;
pub mod enumerate;
pub mod error;
pub mod grothendieck;
pub mod json;
pub mod letter;
pub mod series;
pub mod shape;
pub mod symfunc;
pub mod tableau;
pub mod verify;

pub use error::{Error, Result};
pub use grothendieck::{groth, groth_dual, refined, Variant};
pub use letter::{Letter, TotalOrder};
pub use series::{Alphabet, Coefficient, Monomial, Truncation, ZPoly};
pub use shape::{partition, Partition, SkewShape};
pub use symfunc::{expand_schur, expand_schur_xy, hall_pair, omega, schur_expansion_via_flags, schur_poly, Flagged};
pub use tableau::{check, validate, validate_pt_order, BoxFill, Family, Tableau, WeightVector};

/// Exact integer coefficients.
pub type Integer = num_bigint::BigInt;
/// Series with arbitrary-precision integer coefficients.
pub type Series = series::Series<Integer>;
/// `z`-polynomials with arbitrary-precision integer coefficients.
pub type IntZPoly = series::ZPoly<Integer>;
/// Schur expansions with arbitrary-precision integer coefficients.
pub type SchurExpansion = symfunc::SchurExpansion<Integer>;
pub type DoubleSchurExpansion = symfunc::DoubleSchurExpansion<Integer>;
pub use verify::{run as verify, Identity, VerifyParams, VerifyReport};
