//! Substitution homomorphisms and the two variable changes used by
//! normalization.
//!
//! Sending tᵢ ↦ aᵢ extends to a ring homomorphism fixing D exactly when
//! the aᵢ commute pairwise and each aᵢ is automorphic for σᵢ. Both
//! conditions are checked once when a [`Substitution`] is built.

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use crate::divalg::{is_fixed, DElem};
use crate::error::{Error, Result};
use crate::ext::{verify_automorphic, AutomorphicWitness, ExtensionElement};
use crate::skewpoly::{ExpVec, SkewPoly, SkewRing};

/// A validated point; evaluates any polynomial over its ring.
pub struct Substitution<S> {
    ring: Arc<SkewRing>,
    point: Vec<S>,
    unit: S,
    powers: Mutex<HashMap<(usize, u32), S>>,
}

impl<S: ExtensionElement> Substitution<S> {
    /// `unit` is the one of S; it fixes the target ring when n = 0.
    pub fn new(ring: &Arc<SkewRing>, point: Vec<AutomorphicWitness<S>>, unit: S) -> Result<Self> {
        if point.len() != ring.n() {
            return Err(Error::DimensionMismatch(format!(
                "point has {} coordinates, ring has {} variables",
                point.len(),
                ring.n()
            )));
        }
        if unit.tag() != ring.tag() {
            return Err(Error::TagMismatch(unit.tag(), ring.tag()));
        }
        for (i, w) in point.iter().enumerate() {
            if w.element.tag() != ring.tag() {
                return Err(Error::TagMismatch(w.element.tag(), ring.tag()));
            }
            if !w.element.same_ring(&unit) {
                return Err(Error::RingMismatch);
            }
            let sigma = &ring.autos()[i];
            if !w.auto.agrees_on_generators(sigma) {
                return Err(Error::AutomorphismMismatch {
                    index: i,
                    detail: format!("witness twists by {} but the ring variable by {}", w.auto, sigma),
                });
            }
            if !verify_automorphic(&w.element, &w.auto) {
                return Err(Error::AutomorphismMismatch {
                    index: i,
                    detail: format!("{} is not automorphic for {}", w.element, w.auto),
                });
            }
        }
        for i in 0..point.len() {
            for j in i + 1..point.len() {
                let (a, b) = (&point[i].element, &point[j].element);
                if a.mul(b) != b.mul(a) {
                    return Err(Error::NonCommutingPoint(i, j));
                }
            }
        }
        Ok(Self::new_unchecked(ring, point.into_iter().map(|w| w.element).collect(), unit))
    }

    /// Skips validation; for points that are automorphic and commuting by
    /// construction.
    pub(crate) fn new_unchecked(ring: &Arc<SkewRing>, point: Vec<S>, unit: S) -> Self {
        Substitution { ring: ring.clone(), point, unit, powers: Mutex::new(HashMap::new()) }
    }

    pub fn point(&self) -> &[S] {
        &self.point
    }

    fn power(&self, i: usize, k: u32) -> S {
        let mut cache = self.powers.lock().expect("power cache poisoned");
        if let Some(p) = cache.get(&(i, k)) {
            return p.clone();
        }
        let mut start = 0;
        let mut acc = self.unit.clone();
        for j in (1..k).rev() {
            if let Some(p) = cache.get(&(i, j)) {
                start = j;
                acc = p.clone();
                break;
            }
        }
        for j in start + 1..=k {
            acc = acc.mul(&self.point[i]);
            cache.insert((i, j), acc.clone());
        }
        acc
    }

    pub fn monomial(&self, e: &ExpVec) -> S {
        let mut acc = self.unit.clone();
        for (i, &k) in e.0.iter().enumerate() {
            if k > 0 {
                acc = acc.mul(&self.power(i, k));
            }
        }
        acc
    }

    pub fn apply(&self, f: &SkewPoly) -> Result<S> {
        if f.ring().as_ref() != self.ring.as_ref() {
            return Err(Error::RingMismatch);
        }
        let mut acc = self.unit.zero_like();
        for (e, c) in f.terms() {
            acc = acc.add(&self.monomial(e).scale_left(c));
        }
        Ok(acc)
    }
}

/// The image of f under tᵢ ↦ aᵢ.
pub fn substitute<S: ExtensionElement>(f: &SkewPoly, point: Vec<AutomorphicWitness<S>>, unit: S) -> Result<S> {
    Substitution::new(f.ring(), point, unit)?.apply(f)
}

/// Checks membership in F = Z(D) ∩ ⋂ D_{σᵢ}.
pub fn in_f(ring: &SkewRing, a: &DElem) -> Result<bool> {
    a.check_tag(ring.tag())?;
    if !a.is_central() {
        return Ok(false);
    }
    for s in ring.autos() {
        if !is_fixed(s, a)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// f(t₁+a₁tₙ, …, tₙ₋₁+aₙ₋₁tₙ, tₙ) with every aᵢ ∈ F.
pub fn linear_shift(f: &SkewPoly, a: &[DElem]) -> Result<SkewPoly> {
    let ring = f.ring();
    let n = ring.n();
    if n == 0 || a.len() != n - 1 {
        return Err(Error::DimensionMismatch(format!(
            "linear shift in {n} variables needs {} parameters, got {}",
            n.saturating_sub(1),
            a.len()
        )));
    }
    for (i, ai) in a.iter().enumerate() {
        if !in_f(ring, ai)? {
            return Err(Error::NotInF(i));
        }
    }
    let tn = SkewPoly::var(ring, n - 1);
    let mut point = Vec::with_capacity(n);
    for (i, ai) in a.iter().enumerate() {
        let el = &SkewPoly::var(ring, i) + &tn.scale_left(ai);
        point.push(AutomorphicWitness::new(el, ring.autos()[i].clone()));
    }
    point.push(AutomorphicWitness::new(tn, ring.autos()[n - 1].clone()));
    substitute(f, point, SkewPoly::one(ring))
}

/// f(t₁+tₙ^{d^{n−1}}, …, tₙ₋₁+tₙ^d, tₙ) over central variables, d ≥ 1 + deg f.
pub fn power_shift(f: &SkewPoly, d: u64) -> Result<SkewPoly> {
    if !f.ring().is_central() {
        return Err(Error::NonCentralRing);
    }
    let required = (1 + f.total_degree()).max(2) as u64;
    if d < required {
        return Err(Error::DegreeBoundViolated { d, required });
    }
    Ok(power_shift_signed(f, d, false))
}

/// Subtracts the same powers; inverts [`power_shift`] for any d.
pub fn power_shift_inverse(f: &SkewPoly, d: u64) -> Result<SkewPoly> {
    if !f.ring().is_central() {
        return Err(Error::NonCentralRing);
    }
    Ok(power_shift_signed(f, d, true))
}

/// The d-adic substitution without the degree precondition. It is a
/// homomorphism for every d; the bound only matters for monicity.
pub(crate) fn power_shift_signed(f: &SkewPoly, d: u64, negate: bool) -> SkewPoly {
    let ring = f.ring();
    let n = ring.n();
    if n <= 1 || f.is_zero() {
        return f.clone();
    }
    let tn = SkewPoly::var(ring, n - 1);
    let mut point = Vec::with_capacity(n);
    for i in 0..n - 1 {
        let e = d.pow((n - 1 - i) as u32) as u32;
        let mut shift = tn.pow(e);
        if negate {
            shift = -&shift;
        }
        point.push(&SkewPoly::var(ring, i) + &shift);
    }
    point.push(tn);
    Substitution::new_unchecked(ring, point, SkewPoly::one(ring))
        .apply(f)
        .expect("substitution ring matches by construction")
}
