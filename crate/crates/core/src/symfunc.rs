//! Schur polynomials, Schur expansions with `z`-polynomial coefficients,
//! `ω`, the Hall pairing and the flagged-tableau expansions.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::enumerate::{visit_oft, visit_ssyt, visit_uft};
use crate::error::{Error, Result};
use crate::series::{sign, Alphabet, Coefficient, Monomial, Series, Truncation, ZPoly};
use crate::shape::{Partition, SkewShape};
use crate::tableau::{Tableau, WeightVector};

/// Σ over semistandard tableaux of shape `shape` with entries at most `n`
/// of `x^{weight}`.
pub fn skew_schur_poly<C: Coefficient>(shape: &SkewShape, n: usize) -> Series<C> {
    let mut out = Series::zero(Truncation::new(n, 0, None));
    visit_ssyt(shape, n as u32, &mut |t: &Tableau| {
        out.add_term(Monomial::new(t.left_weight(), vec![], vec![]), C::one()).expect("entries bounded by n");
    });
    out
}

/// `s_λ(x_1, ..., x_n)`.
pub fn schur_poly<C: Coefficient>(lambda: &Partition, n: usize) -> Series<C> {
    skew_schur_poly(&SkewShape::straight(lambda.clone()), n)
}

/// `Σ_ρ terms[ρ] s_ρ` in one alphabet of `n` variables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SchurExpansion<C> {
    pub alphabet: Alphabet,
    pub n: usize,
    terms: BTreeMap<Partition, ZPoly<C>>,
}

impl<C: Coefficient> SchurExpansion<C> {
    pub fn new(alphabet: Alphabet, n: usize) -> Self {
        SchurExpansion { alphabet, n, terms: BTreeMap::new() }
    }

    pub fn terms(&self) -> &BTreeMap<Partition, ZPoly<C>> {
        &self.terms
    }

    pub fn coeff(&self, rho: &Partition) -> ZPoly<C> {
        self.terms.get(rho).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, rho: Partition, c: ZPoly<C>) {
        let v = self.coeff(&rho).add(&c);
        if v.is_zero() {
            self.terms.remove(&rho);
        } else {
            self.terms.insert(rho, v);
        }
    }

    /// Only the terms whose partition satisfies `keep`.
    pub fn restrict(&self, keep: impl Fn(&Partition) -> bool) -> Self {
        SchurExpansion {
            alphabet: self.alphabet,
            n: self.n,
            terms: self.terms.iter().filter(|(p, _)| keep(p)).map(|(p, c)| (p.clone(), c.clone())).collect(),
        }
    }

    /// `Σ_ρ terms[ρ] s_ρ` as a polynomial in the expansion's alphabet.
    pub fn to_series(&self) -> Series<C> {
        let mut out = Series::zero(Truncation::new(self.n, 0, None));
        for (rho, c) in &self.terms {
            let s = schur_poly::<C>(rho, self.n);
            for (e, zc) in c.terms() {
                for (m, sc) in s.terms() {
                    out.add_term(Monomial { z: e.clone(), ..m.clone() }, zc.clone() * sc.clone()).unwrap();
                }
            }
        }
        match self.alphabet {
            Alphabet::X => out,
            Alphabet::Y => out.swap_xy(),
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        let terms: Vec<_> =
            self.terms.iter().map(|(p, c)| serde_json::json!({"partition": p.parts(), "z": c.to_json()})).collect();
        serde_json::json!({"basis": "schur", "alphabet": self.alphabet.to_string(), "terms": terms})
    }

    pub fn to_text(&self) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        self.terms.iter().map(|(p, c)| format!("s{p}({}): {c}", self.alphabet)).collect::<Vec<_>>().join("\n")
    }

    pub fn to_latex(&self) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut out = String::new();
        for (k, (p, c)) in self.terms.iter().enumerate() {
            let basis = format!("s_{{{}}}", p.parts().iter().map(u32::to_string).collect::<Vec<_>>().join(","));
            let coeff = c.to_latex();
            let negative = coeff.starts_with('-');
            let single = c.terms().count() == 1;
            let piece = if coeff == "1" {
                basis
            } else if coeff == "-1" {
                format!("-{basis}")
            } else if single {
                format!("{coeff}{basis}")
            } else {
                format!("({coeff}){basis}")
            };
            if k > 0 && !(single && negative) {
                out.push('+');
            }
            out.push_str(&piece);
        }
        out
    }
}

impl<C: Coefficient> fmt::Display for SchurExpansion<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// `Σ terms[(μ, ν)] s_μ(x) s_ν(y)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DoubleSchurExpansion<C> {
    pub nx: usize,
    pub ny: usize,
    terms: BTreeMap<(Partition, Partition), ZPoly<C>>,
}

impl<C: Coefficient> DoubleSchurExpansion<C> {
    pub fn terms(&self) -> &BTreeMap<(Partition, Partition), ZPoly<C>> {
        &self.terms
    }

    pub fn coeff(&self, mu: &Partition, nu: &Partition) -> ZPoly<C> {
        self.terms.get(&(mu.clone(), nu.clone())).cloned().unwrap_or_default()
    }

    pub fn to_json(&self) -> serde_json::Value {
        let terms: Vec<_> = self
            .terms
            .iter()
            .map(|((m, n), c)| serde_json::json!({"x": m.parts(), "y": n.parts(), "z": c.to_json()}))
            .collect();
        serde_json::json!({"basis": "schur-schur", "terms": terms})
    }

    pub fn to_text(&self) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        self.terms.iter().map(|((m, n), c)| format!("s{m}(x) s{n}(y): {c}")).collect::<Vec<_>>().join("\n")
    }
}

const WATCHDOG: usize = 1_000_000;

/// Leading-term elimination in `x`: returns, for each `ρ`, the `x`-free
/// series coefficient of `s_ρ(x)`.
fn eliminate_x<C: Coefficient>(f: &Series<C>) -> Result<BTreeMap<Partition, Series<C>>> {
    let n = f.truncation().nx;
    if !f.is_symmetric_in(Alphabet::X) {
        return Err(Error::NotSymmetric("not invariant under swapping adjacent x variables".into()));
    }
    let rest_trunc = Truncation { nx: 0, degree: None, ..f.truncation() };
    let work_trunc = Truncation { degree: None, ..f.truncation() };
    let mut rest = f.map_monomials(work_trunc, Monomial::clone)?;
    let mut out = BTreeMap::new();
    for _ in 0..WATCHDOG {
        let Some(lead) = rest.terms().map(|(m, _)| m.x.clone()).max() else {
            return Ok(out);
        };
        let rho = Partition::new(lead.coords().to_vec())
            .map_err(|_| Error::NotSymmetric(format!("leading exponent {lead} is not a partition")))?;
        let coeff = rest
            .filter(|m| m.x == lead)
            .map_monomials(rest_trunc, |m| Monomial { x: WeightVector::zero(), ..m.clone() })?;
        let s = schur_poly::<C>(&rho, n);
        let mut sub = Series::zero(work_trunc);
        for (cm, cc) in coeff.terms() {
            for (sm, sc) in s.terms() {
                sub.add_term(Monomial { x: sm.x.clone(), ..cm.clone() }, cc.clone() * sc.clone())?;
            }
        }
        rest = rest.sub(&sub)?;
        out.insert(rho, coeff);
    }
    Err(Error::Other("Schur expansion did not terminate".into()))
}

/// Expands a series symmetric in one alphabet, with the other alphabet
/// absent, into Schur polynomials of that alphabet.
pub fn expand_schur<C: Coefficient>(f: &Series<C>, alphabet: Alphabet) -> Result<SchurExpansion<C>> {
    let f = match alphabet {
        Alphabet::X => f.clone(),
        Alphabet::Y => f.swap_xy(),
    };
    if f.terms().any(|(m, _)| !m.y.is_zero()) {
        return Err(Error::Incompatible(format!("series depends on the alphabet other than {alphabet}")));
    }
    let mut out = SchurExpansion::new(alphabet, f.truncation().nx);
    for (rho, c) in eliminate_x(&f)? {
        out.add_term(rho, ZPoly::from_series(&c)?);
    }
    Ok(out)
}

/// Expands a series symmetric in `x` and in `y` into products `s_μ(x) s_ν(y)`.
pub fn expand_schur_xy<C: Coefficient>(f: &Series<C>) -> Result<DoubleSchurExpansion<C>> {
    let t = f.truncation();
    let mut out = DoubleSchurExpansion { nx: t.nx, ny: t.ny, terms: BTreeMap::new() };
    for (mu, c) in eliminate_x(f)? {
        for (nu, z) in eliminate_x(&c.swap_xy())? {
            let z = ZPoly::from_series(&z)?;
            if !z.is_zero() {
                out.terms.insert((mu.clone(), nu), z);
            }
        }
    }
    Ok(out)
}

/// `ω(s_ρ) = s_{ρ'}`; the variable count becomes the widest part.
pub fn omega<C: Coefficient>(e: &SchurExpansion<C>) -> SchurExpansion<C> {
    let mut out = SchurExpansion::new(e.alphabet, e.terms.keys().map(|p| p.part(0) as usize).max().unwrap_or(0));
    for (rho, c) in &e.terms {
        out.add_term(rho.conjugate(), c.clone());
    }
    out
}

/// `⟨A, B⟩ = Σ_ρ A[ρ] B[ρ]`, extended bilinearly over `ℤ[z]`.
pub fn hall_pair<C: Coefficient>(a: &SchurExpansion<C>, b: &SchurExpansion<C>) -> Result<ZPoly<C>> {
    if a.alphabet != b.alphabet {
        return Err(Error::Incompatible(format!("alphabets {} and {}", a.alphabet, b.alphabet)));
    }
    let mut out = ZPoly::zero();
    for (rho, ca) in &a.terms {
        if let Some(cb) = b.terms.get(rho) {
            out = out.add(&ca.mul(cb));
        }
    }
    Ok(out)
}

/// Which generating function a flagged expansion describes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Flagged {
    /// Overfull: `Σ_{ρ ⊇ μ} (-1)^{|ρ|-|μ|} Σ_{Q ∈ OFT(ρ/μ)} z^{wt(Q)} s_ρ`, cut at `|ρ| ≤ cap`.
    G,
    /// Underfull: `Σ_{σ ⊆ λ} Σ_{Q ∈ UFT(λ/σ)} z^{wt(Q)} s_σ`.
    Gdual,
}

/// The Schur expansion of `𝔊_μ(x,0,z)` or `𝔊*_μ(x,0,z)` read off flagged
/// tableaux. With `conjugated`, every `s_ρ` becomes `s_{ρ'}`. `cap` bounds
/// `|ρ|` for [`Flagged::G`] and is ignored for [`Flagged::Gdual`].
pub fn schur_expansion_via_flags<C: Coefficient>(
    mu: &Partition,
    which: Flagged,
    conjugated: bool,
    cap: u32,
) -> SchurExpansion<C> {
    let mut terms: Vec<(Partition, ZPoly<C>)> = Vec::new();
    match which {
        Flagged::G => {
            for rho in Partition::up_to_size(cap) {
                if rho.len() != mu.len() || !rho.contains(mu) {
                    continue;
                }
                let shape = SkewShape::new(rho.clone(), mu.clone()).expect("rho contains mu");
                let s = sign::<C>(rho.size() - mu.size());
                let mut c = ZPoly::zero();
                visit_oft(&shape, &mut |q: &Tableau| c.add_term(q.left_weight(), s.clone()));
                terms.push((rho, c));
            }
        }
        Flagged::Gdual => {
            for sigma in mu.subpartitions() {
                let shape = SkewShape::new(mu.clone(), sigma.clone()).expect("sigma inside lambda");
                let mut c = ZPoly::zero();
                visit_uft(&shape, &mut |q: &Tableau| c.add_term(q.right_weight(), C::one()));
                terms.push((sigma, c));
            }
        }
    }
    let terms: Vec<_> = terms.into_iter().map(|(p, c)| (if conjugated { p.conjugate() } else { p }, c)).collect();
    let n = terms.iter().map(|(p, _)| p.len()).max().unwrap_or(0);
    let mut out = SchurExpansion::new(Alphabet::X, n);
    for (p, c) in terms {
        out.add_term(p, c);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grothendieck::{groth_dual, refined, Variant};
    use crate::shape::partition;
    use num_bigint::BigInt;

    type Z = ZPoly<BigInt>;

    fn z1() -> Z {
        ZPoly::monomial(WeightVector::new(vec![1]), BigInt::from(1))
    }

    fn one() -> Z {
        ZPoly::constant(BigInt::from(1))
    }

    #[test]
    fn schur_polynomials() {
        assert_eq!(schur_poly::<BigInt>(&partition(&[1]), 2).to_latex(), "x_1+x_2");
        assert_eq!(schur_poly::<BigInt>(&partition(&[1, 1]), 2).to_latex(), "x_1x_2");
        let s = schur_poly::<BigInt>(&partition(&[2, 1]), 3);
        let total: BigInt = s.terms().map(|(_, c)| c.clone()).sum();
        assert_eq!(total, BigInt::from(8));
        assert!(schur_poly::<BigInt>(&partition(&[1, 1, 1]), 2).is_zero());
    }

    #[test]
    fn basis_elements_expand_to_themselves() {
        for lambda in Partition::up_to_size(4) {
            let e = expand_schur(&schur_poly::<BigInt>(&lambda, 4), Alphabet::X).unwrap();
            assert_eq!(e.terms().len(), 1);
            assert_eq!(e.coeff(&lambda), one());
        }
    }

    #[test]
    fn refined_expansions() {
        let f = refined::<BigInt>(Variant::B2, &partition(&[2]), 2, None, false).unwrap();
        let e = expand_schur(&f, Alphabet::X).unwrap();
        assert_eq!(e.coeff(&partition(&[2])), one());
        assert_eq!(e.coeff(&partition(&[1])), z1());
        assert_eq!(e.terms().len(), 2);

        let f = refined::<BigInt>(Variant::A1, &partition(&[1]), 2, Some(2), false).unwrap();
        let e = expand_schur(&f, Alphabet::X).unwrap();
        assert_eq!(e.coeff(&partition(&[1])), one());
        assert_eq!(e.coeff(&partition(&[1, 1])), z1().neg());
        assert_eq!(e.to_latex(), "s_{1}-z_1s_{1,1}");
    }

    #[test]
    fn non_symmetric_input_is_rejected() {
        let mut f: Series<BigInt> = Series::zero(Truncation::new(2, 0, None));
        f.add_term(Monomial::new(vec![1], vec![], vec![]), BigInt::from(1)).unwrap();
        assert!(matches!(expand_schur(&f, Alphabet::X), Err(Error::NotSymmetric(_))));
    }

    #[test]
    fn double_expansion_of_a_product() {
        let sx = schur_poly::<BigInt>(&partition(&[2, 1]), 2);
        let sy = schur_poly::<BigInt>(&partition(&[1]), 2).swap_xy();
        let t = Truncation::new(2, 2, None);
        let lift = |s: &Series<BigInt>| s.map_monomials(t, Monomial::clone).unwrap();
        let f = lift(&sx).mul(&lift(&sy)).unwrap();
        let e = expand_schur_xy(&f).unwrap();
        assert_eq!(e.terms().len(), 1);
        assert_eq!(e.coeff(&partition(&[2, 1]), &partition(&[1])), one());
    }

    #[test]
    fn omega_and_pairing() {
        let mut e = SchurExpansion::<BigInt>::new(Alphabet::X, 3);
        e.add_term(partition(&[2, 1]), z1());
        e.add_term(partition(&[3]), one());
        let w = omega(&e);
        assert_eq!(w.coeff(&partition(&[2, 1])), z1());
        assert_eq!(w.coeff(&partition(&[1, 1, 1])), one());
        assert_eq!(omega(&w).terms(), e.terms());

        let mut a = SchurExpansion::<BigInt>::new(Alphabet::X, 2);
        a.add_term(partition(&[1]), one());
        let mut b = SchurExpansion::<BigInt>::new(Alphabet::X, 2);
        b.add_term(partition(&[2]), one());
        assert_eq!(hall_pair(&a, &a).unwrap(), one());
        assert!(hall_pair(&a, &b).unwrap().is_zero());
    }

    #[test]
    fn flag_expansions() {
        let g = schur_expansion_via_flags::<BigInt>(&partition(&[1]), Flagged::G, false, 2);
        assert_eq!(g.coeff(&partition(&[1])), one());
        assert_eq!(g.coeff(&partition(&[2])), z1().neg());
        assert_eq!(g.terms().len(), 2);

        let d = schur_expansion_via_flags::<BigInt>(&partition(&[1]), Flagged::Gdual, false, 0);
        assert_eq!(d.terms().len(), 1);
        assert_eq!(d.coeff(&partition(&[1])), one());

        let d = schur_expansion_via_flags::<BigInt>(&partition(&[2]), Flagged::Gdual, false, 0);
        assert_eq!(d.coeff(&partition(&[2])), one());
        assert_eq!(d.coeff(&partition(&[1])), z1());
        let via_series =
            expand_schur(&groth_dual::<BigInt>(&partition(&[2]), Truncation::new(2, 0, None)).unwrap(), Alphabet::X)
                .unwrap();
        assert_eq!(via_series.terms(), d.terms());
    }
}
