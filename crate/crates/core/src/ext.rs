//! Rings over a division algebra D with a left D-basis of monomials.
//!
//! Every backend (skew polynomials, Laurent polynomials, the monomial
//! quotient, and D itself) writes its elements as Σ c_k·B_k with
//! coefficients on the left and basis monomials B_k satisfying
//! B_k·b = σ_k(b)·B_k. That is all the automorphic test and the
//! normalization engine need.

use std::fmt;

use crate::divalg::{AlgebraTag, Automorphism, DElem};
use crate::error::{Error, Result};
use crate::skewpoly::{ExpVec, SkewPoly};

/// Index of a basis monomial.
pub type BasisKey = Vec<i64>;

pub trait ExtensionElement: Clone + PartialEq + fmt::Debug + fmt::Display {
    fn tag(&self) -> AlgebraTag;
    fn same_ring(&self, other: &Self) -> bool;
    fn zero_like(&self) -> Self;
    fn constant_like(&self, c: &DElem) -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn scale_left(&self, c: &DElem) -> Self;
    /// Left coordinates in the monomial basis; zero coefficients omitted.
    fn left_terms(&self) -> Vec<(BasisKey, DElem)>;
    /// σ_k with B_k·b = σ_k(b)·B_k.
    fn basis_twist(&self, key: &BasisKey) -> Automorphism;

    fn one_like(&self) -> Self {
        self.constant_like(&DElem::one(self.tag()))
    }

    fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    fn pow(&self, e: u32) -> Self {
        let mut acc = self.one_like();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    fn try_mul(&self, other: &Self) -> Result<Self> {
        if self.same_ring(other) {
            Ok(self.mul(other))
        } else {
            Err(Error::RingMismatch)
        }
    }
}

/// The twist of each term c·B_k, namely 𝐢𝐧_c∘σ_k.
pub fn term_twists<S: ExtensionElement>(a: &S) -> Vec<(BasisKey, Automorphism)> {
    a.left_terms()
        .into_iter()
        .map(|(k, c)| {
            let tw = Automorphism::inner(&c).compose(&a.basis_twist(&k));
            (k, tw)
        })
        .collect()
}

/// The unique σ with a·b = σ(b)·a for all b ∈ D, or `NotAutomorphic`.
///
/// Distinct basis monomials are left independent, so a is automorphic
/// exactly when all of its terms twist by the same automorphism. The zero
/// element satisfies the identity for every σ and is rejected.
pub fn check_automorphic<S: ExtensionElement>(a: &S) -> Result<Automorphism> {
    let twists = term_twists(a);
    let Some((_, first)) = twists.first() else {
        return Err(Error::ZeroElement);
    };
    for (_, tw) in &twists[1..] {
        if !tw.agrees_on_generators(first) {
            return Err(Error::NotAutomorphic { first: first.to_string(), second: tw.to_string() });
        }
    }
    Ok(first.clone())
}

/// Direct check of a·b = σ(b)·a on the generators of D.
pub fn verify_automorphic<S: ExtensionElement>(a: &S, sigma: &Automorphism) -> bool {
    DElem::generators(a.tag()).iter().all(|b| {
        let lhs = a.mul(&a.constant_like(b));
        let rhs = a.constant_like(&sigma.apply(b)).mul(a);
        lhs == rhs
    })
}

/// An element together with the automorphism it is automorphic for.
#[derive(Clone, Debug, PartialEq)]
pub struct AutomorphicWitness<S> {
    pub element: S,
    pub auto: Automorphism,
}

impl<S: ExtensionElement> AutomorphicWitness<S> {
    /// Computes the automorphism with [`check_automorphic`].
    pub fn infer(element: S) -> Result<Self> {
        let auto = check_automorphic(&element)?;
        Ok(AutomorphicWitness { element, auto })
    }

    pub fn new(element: S, auto: Automorphism) -> Self {
        AutomorphicWitness { element, auto }
    }
}

impl ExtensionElement for SkewPoly {
    fn tag(&self) -> AlgebraTag {
        self.ring().tag()
    }
    fn same_ring(&self, other: &Self) -> bool {
        SkewPoly::same_ring(self, other)
    }
    fn zero_like(&self) -> Self {
        SkewPoly::zero(self.ring())
    }
    fn constant_like(&self, c: &DElem) -> Self {
        SkewPoly::constant(self.ring(), c.clone())
    }
    fn is_zero(&self) -> bool {
        SkewPoly::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn scale_left(&self, c: &DElem) -> Self {
        SkewPoly::scale_left(self, c)
    }
    fn left_terms(&self) -> Vec<(BasisKey, DElem)> {
        self.terms().iter().map(|(e, c)| (e.0.iter().map(|&k| k as i64).collect(), c.clone())).collect()
    }
    fn basis_twist(&self, key: &BasisKey) -> Automorphism {
        self.ring().twist(&ExpVec(key.iter().map(|&k| k as u32).collect()))
    }
}

impl ExtensionElement for DElem {
    fn tag(&self) -> AlgebraTag {
        DElem::tag(self)
    }
    fn same_ring(&self, other: &Self) -> bool {
        DElem::tag(self) == DElem::tag(other)
    }
    fn zero_like(&self) -> Self {
        DElem::zero(DElem::tag(self))
    }
    fn constant_like(&self, c: &DElem) -> Self {
        c.clone()
    }
    fn is_zero(&self) -> bool {
        DElem::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn scale_left(&self, c: &DElem) -> Self {
        c * self
    }
    fn left_terms(&self) -> Vec<(BasisKey, DElem)> {
        if DElem::is_zero(self) {
            Vec::new()
        } else {
            vec![(Vec::new(), self.clone())]
        }
    }
    fn basis_twist(&self, _key: &BasisKey) -> Automorphism {
        Automorphism::identity(DElem::tag(self))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::divalg::rat::rat;
    use crate::skewpoly::SkewRing;

    #[test]
    fn variable_twists_by_its_automorphism() {
        let s1 = Automorphism::shift(rat(1));
        let s2 = Automorphism::shift(rat(5));
        let r = SkewRing::new(AlgebraTag::QX, vec![s1.clone(), s2]).unwrap();
        assert_eq!(check_automorphic(&SkewPoly::var(&r, 0)).unwrap(), s1);
    }

    #[test]
    fn constant_multiple_of_power() {
        let r = SkewRing::new(AlgebraTag::QX, vec![Automorphism::shift(rat(1))]).unwrap();
        let a = SkewPoly::var(&r, 0).pow(3).scale_left(&DElem::int(AlgebraTag::QX, 5));
        let tw = check_automorphic(&a).unwrap();
        assert_eq!(tw, Automorphism::shift(rat(3)));
        assert!(verify_automorphic(&a, &tw));
    }

    #[test]
    fn mixed_twists_rejected() {
        let r = SkewRing::new(AlgebraTag::QX, vec![Automorphism::shift(rat(1)), Automorphism::shift(rat(-1))]).unwrap();
        let a = &SkewPoly::var(&r, 0) + &SkewPoly::var(&r, 1);
        assert!(matches!(check_automorphic(&a), Err(Error::NotAutomorphic { .. })));
    }

    #[test]
    fn quaternion_coefficient_twists_by_inner() {
        let r = SkewRing::central(AlgebraTag::HQ, 1);
        let i = DElem::quat(0, 1, 0, 0);
        let a = SkewPoly::var(&r, 0).scale_left(&i);
        let tw = check_automorphic(&a).unwrap();
        assert_eq!(tw, Automorphism::inner(&i));
        assert!(verify_automorphic(&a, &tw));
    }
}
