//! Generating functions of overfull and underfull tableaux.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::enumerate::{visit_ot, visit_ut, EnumBounds};
use crate::error::{Error, Result};
use crate::series::{sign, Coefficient, Monomial, Series, Truncation};
use crate::shape::Partition;
use crate::tableau::Tableau;

/// `Σ_{T ∈ OT(λ)} (-1)^{|O(T)|} x^{ℓw(T)} y^{rw(T)} z^{O(T)}`, truncated.
pub fn groth<C: Coefficient>(lambda: &Partition, trunc: Truncation) -> Result<Series<C>> {
    let d = trunc.degree.ok_or(Error::Unbounded)?;
    let mut out = Series::zero(trunc);
    let Some(extra) = d.checked_sub(lambda.size()) else {
        return Ok(out);
    };
    let bounds = EnumBounds::split(trunc.nx as u32, trunc.ny as u32, extra);
    let mut failure = None;
    visit_ot(lambda, bounds, &mut |t: &Tableau| {
        let o = t.overweight_unchecked();
        let c = sign::<C>(o.total());
        let m = Monomial { x: t.left_weight(), y: t.right_weight(), z: o };
        if let Err(e) = out.add_term(m, c) {
            failure.get_or_insert(e);
        }
    });
    failure.map_or(Ok(out), Err)
}

/// `Σ_{T ∈ UT(λ)} x^{ℓw(T)} y^{rw(T)} z^{U(T)}`; a polynomial, so any
/// degree bound in `trunc` only drops terms.
pub fn groth_dual<C: Coefficient>(lambda: &Partition, trunc: Truncation) -> Result<Series<C>> {
    let mut out = Series::zero(trunc);
    let bounds = EnumBounds::split(trunc.nx as u32, trunc.ny as u32, 0);
    let mut failure = None;
    visit_ut(lambda, bounds, &mut |t: &Tableau| {
        let m = Monomial { x: t.left_weight(), y: t.right_weight(), z: t.underweight_unchecked() };
        if let Err(e) = out.add_term(m, C::one()) {
            failure.get_or_insert(e);
        }
    });
    failure.map_or(Ok(out), Err)
}

/// The four refined specializations, all in a single alphabet `x`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Variant {
    /// `𝔊_{λ'}(0, x, z)`
    #[serde(rename = "1A")]
    A1,
    /// `𝔊_λ(x, 0, z)`
    #[serde(rename = "1B")]
    B1,
    /// `𝔊*_{λ'}(0, x, z)`
    #[serde(rename = "2A")]
    A2,
    /// `𝔊*_λ(x, 0, z)`
    #[serde(rename = "2B")]
    B2,
}

impl Variant {
    pub const ALL: [Variant; 4] = [Variant::A1, Variant::B1, Variant::A2, Variant::B2];

    pub fn is_dual(self) -> bool {
        matches!(self, Variant::A2 | Variant::B2)
    }
}

impl FromStr for Variant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Variant> {
        match s.to_ascii_uppercase().as_str() {
            "1A" => Ok(Variant::A1),
            "1B" => Ok(Variant::B1),
            "2A" => Ok(Variant::A2),
            "2B" => Ok(Variant::B2),
            _ => Err(Error::Parse(format!("unknown variant {s:?} (expected 1A, 1B, 2A or 2B)"))),
        }
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Variant::A1 => "1A",
            Variant::B1 => "1B",
            Variant::A2 => "2A",
            Variant::B2 => "2B",
        })
    }
}

/// A refined polynomial in `n` variables `x`. With `z_one` every `z_i`
/// is set to 1, giving the classical (dual, weak) Grothendieck polynomial.
pub fn refined<C: Coefficient>(
    variant: Variant,
    lambda: &Partition,
    n: usize,
    degree: Option<u32>,
    z_one: bool,
) -> Result<Series<C>> {
    let s = match variant {
        Variant::A1 => groth(&lambda.conjugate(), Truncation::new(0, n, degree))?.swap_xy(),
        Variant::B1 => groth(lambda, Truncation::new(n, 0, degree))?,
        Variant::A2 => groth_dual(&lambda.conjugate(), Truncation::new(0, n, degree))?.swap_xy(),
        Variant::B2 => groth_dual(lambda, Truncation::new(n, 0, degree))?,
    };
    Ok(if z_one { s.at_z_one() } else { s })
}
