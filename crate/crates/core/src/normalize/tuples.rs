//! Tuples of automorphisms: reducing to a common twist by powers, and the
//! exact criterion for shift tuples on ℚ(x).

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use super::engine::exponent_box;
use crate::divalg::{AlgebraTag, AutoDesc, Automorphism, Rat};
use crate::error::{Error, Result};
use crate::ext::{check_automorphic, AutomorphicWitness, ExtensionElement};

/// wᵢ = zᵢ^{dᵢ} with a common twist, and the monomials Π zᵢ^{eᵢ}, eᵢ < dᵢ.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PowerReduction<S> {
    pub sigma: Automorphism,
    pub w: Vec<S>,
    pub basis: Vec<(Vec<u32>, S)>,
}

pub fn power_reduce<S: ExtensionElement>(
    gens: &[AutomorphicWitness<S>],
    d: &[u32],
    unit: &S,
) -> Result<PowerReduction<S>> {
    if gens.len() != d.len() {
        return Err(Error::DimensionMismatch(format!("{} generators but {} exponents", gens.len(), d.len())));
    }
    if d.contains(&0) {
        return Err(Error::ExponentEqualityFails("exponents must be positive".into()));
    }
    for (i, a) in gens.iter().enumerate() {
        for (j, b) in gens.iter().enumerate().skip(i + 1) {
            if a.element.mul(&b.element) != b.element.mul(&a.element) {
                return Err(Error::NonCommutingPoint(i, j));
            }
        }
    }
    let powers: Vec<Automorphism> = gens.iter().zip(d).map(|(g, &k)| g.auto.pow(k as i64)).collect();
    let sigma = powers.first().cloned().unwrap_or_else(|| Automorphism::identity(unit.tag()));
    if let Some(i) = powers.iter().position(|p| !p.agrees_on_generators(&sigma)) {
        return Err(Error::ExponentEqualityFails(format!(
            "σ₁^{} = {} but σ{}^{} = {}",
            d[0],
            sigma,
            i + 1,
            d[i],
            powers[i]
        )));
    }
    let w: Vec<S> = gens.iter().zip(d).map(|(g, &k)| g.element.pow(k)).collect();
    for (i, wi) in w.iter().enumerate() {
        let tw = check_automorphic(wi)?;
        if !tw.agrees_on_generators(&sigma) {
            return Err(Error::CheckFailed(format!("w{} twists by {tw}, expected {sigma}", i + 1)));
        }
    }
    let basis = exponent_box(d)
        .into_iter()
        .map(|e| {
            let v = monomial(gens.iter().map(|g| &g.element), &e, unit);
            (e, v)
        })
        .collect();
    Ok(PowerReduction { sigma, w, basis })
}

fn monomial<'a, S: ExtensionElement + 'a>(elems: impl Iterator<Item = &'a S>, e: &[u32], unit: &S) -> S {
    elems.zip(e).fold(unit.clone(), |acc, (z, &k)| acc.mul(&z.pow(k)))
}

/// Checks z^E = w^Q·z^R (E = Q·d + R) for every E with eᵢ < 2dᵢ.
pub fn verify_power_reduction<S: ExtensionElement>(gens: &[S], d: &[u32], red: &PowerReduction<S>, unit: &S) -> bool {
    let doubled: Vec<u32> = d.iter().map(|k| 2 * k).collect();
    exponent_box(&doubled).into_iter().all(|e| {
        let q: Vec<u32> = e.iter().zip(d).map(|(a, b)| a / b).collect();
        let r: Vec<u32> = e.iter().zip(d).map(|(a, b)| a % b).collect();
        let lhs = monomial(gens.iter(), &e, unit);
        let Some((_, zr)) = red.basis.iter().find(|(k, _)| *k == r) else { return false };
        monomial(red.w.iter(), &q, unit).mul(zr) == lhs
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FieldCriterion {
    /// The least exponents with σ₁^{d₁} = … = σₙ^{dₙ}.
    Normalizable(Vec<u64>),
    NotNormalizable,
}

/// Shift amounts c with σ = (x ↦ x + c), rejecting other shapes.
pub fn shift_amounts(autos: &[AutoDesc]) -> Result<Vec<Rat>> {
    autos
        .iter()
        .map(|a| {
            let res = a.resolve(AlgebraTag::QX)?;
            res.as_mobius()
                .and_then(|m| m.as_shift())
                .ok_or_else(|| Error::UnsupportedAutoShape(format!("{res} is not a shift x ↦ x + c")))
        })
        .collect()
}

/// dᵢ·cᵢ all equal for positive dᵢ iff all cᵢ vanish or all share a sign.
/// The least common value is lcm(|numerators|)/gcd(denominators).
pub fn decide_tuple_normalizable_field_shifts(autos: &[AutoDesc]) -> Result<FieldCriterion> {
    let cs = shift_amounts(autos)?;
    if cs.iter().all(Zero::is_zero) {
        return Ok(FieldCriterion::Normalizable(vec![1; cs.len()]));
    }
    let all_pos = cs.iter().all(Signed::is_positive);
    let all_neg = cs.iter().all(Signed::is_negative);
    if !(all_pos || all_neg) {
        return Ok(FieldCriterion::NotNormalizable);
    }
    let mut l = BigInt::one();
    let mut g = BigInt::zero();
    for c in &cs {
        l = l.lcm(&c.numer().abs());
        g = g.gcd(c.denom());
    }
    let v = Rat::new(l, g);
    let ds = cs
        .iter()
        .map(|c| {
            let d = (&v / c.abs()).to_integer();
            d.to_u64().ok_or_else(|| Error::CheckFailed(format!("exponent {d} overflows")))
        })
        .collect::<Result<_>>()?;
    Ok(FieldCriterion::Normalizable(ds))
}
