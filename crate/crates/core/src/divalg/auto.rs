//! Automorphisms of the two shipped division algebras.
//!
//! [`AutoDesc`] is the user-facing descriptor (it may nest powers and
//! compositions); [`Automorphism`] is its resolved canonical form:
//!
//! * on ℍ(ℚ) every automorphism is inner, stored as `None` (identity) or
//!   `Some(u)` with u non-real and its first nonzero component equal to 1;
//! * on ℚ(x) every ℚ-automorphism is a Möbius substitution
//!   x ↦ (αx+β)/(γx+δ), stored with the first nonzero of (γ, δ) equal to 1.
//!
//! Composition convention: `Compose[σ₁, σ₂, …]` and [`Automorphism::compose`]
//! both mean σ₁∘σ₂∘…, i.e. the last factor is applied first.

use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize, Serializer};

use super::elem::{AlgebraTag, DElem};
use super::quat::Quat;
use super::rat::Rat;
use super::ratfun::{QPoly, RatFun};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum AutoDesc {
    Identity,
    /// r ↦ u·r·u⁻¹.
    Inner {
        u: DElem,
    },
    /// The ℚ-automorphism of ℚ(x) sending x to `g`.
    GenImage {
        g: RatFun,
    },
    Power {
        base: Box<AutoDesc>,
        k: i64,
    },
    Compose {
        parts: Vec<AutoDesc>,
    },
}

impl AutoDesc {
    pub fn inner(u: DElem) -> Self {
        AutoDesc::Inner { u }
    }

    pub fn gen_image(g: RatFun) -> Self {
        AutoDesc::GenImage { g }
    }

    /// x ↦ x + c on ℚ(x).
    pub fn shift(c: Rat) -> Self {
        AutoDesc::GenImage { g: RatFun::poly(QPoly::new(vec![c, Rat::one()])) }
    }

    pub fn power(base: AutoDesc, k: i64) -> Self {
        AutoDesc::Power { base: Box::new(base), k }
    }

    pub fn compose(parts: Vec<AutoDesc>) -> Self {
        AutoDesc::Compose { parts }
    }

    /// The algebra this descriptor is pinned to, if any part names one.
    pub fn algebra(&self) -> Option<AlgebraTag> {
        match self {
            AutoDesc::Identity => None,
            AutoDesc::Inner { u } => Some(u.tag()),
            AutoDesc::GenImage { .. } => Some(AlgebraTag::QX),
            AutoDesc::Power { base, .. } => base.algebra(),
            AutoDesc::Compose { parts } => parts.iter().find_map(|p| p.algebra()),
        }
    }

    pub fn resolve(&self, tag: AlgebraTag) -> Result<Automorphism> {
        match self {
            AutoDesc::Identity => Ok(Automorphism::identity(tag)),
            AutoDesc::Inner { u } => {
                u.check_tag(tag)?;
                if u.is_zero() {
                    return Err(Error::MalformedAutomorphism("inner automorphism by zero".into()));
                }
                Ok(Automorphism::inner(u))
            }
            AutoDesc::GenImage { g } => {
                if tag != AlgebraTag::QX {
                    return Err(Error::TagMismatch(AlgebraTag::QX, tag));
                }
                Ok(Automorphism::Field(Mobius::from_image(g)?))
            }
            AutoDesc::Power { base, k } => Ok(base.resolve(tag)?.pow(*k)),
            AutoDesc::Compose { parts } => {
                let mut acc = Automorphism::identity(tag);
                for p in parts {
                    acc = acc.compose(&p.resolve(tag)?);
                }
                Ok(acc)
            }
        }
    }
}

/// x ↦ (αx+β)/(γx+δ) with αδ − βγ ≠ 0, normalized.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Mobius {
    alpha: Rat,
    beta: Rat,
    gamma: Rat,
    delta: Rat,
}

impl Mobius {
    pub fn new(alpha: Rat, beta: Rat, gamma: Rat, delta: Rat) -> Result<Self> {
        if (&alpha * &delta - &beta * &gamma).is_zero() {
            return Err(Error::MalformedAutomorphism("Möbius map with zero determinant is not invertible".into()));
        }
        let s = if !gamma.is_zero() { gamma.recip() } else { delta.recip() };
        Ok(Mobius { alpha: alpha * &s, beta: beta * &s, gamma: gamma * &s, delta: delta * s })
    }

    pub fn identity() -> Self {
        Mobius { alpha: Rat::one(), beta: Rat::zero(), gamma: Rat::zero(), delta: Rat::one() }
    }

    pub fn from_image(g: &RatFun) -> Result<Self> {
        if g.num().degree() > 1 || g.den().degree() > 1 {
            return Err(Error::MalformedAutomorphism(format!("image {g} of x is not of the form (αx+β)/(γx+δ)")));
        }
        Mobius::new(g.num().coeff(1), g.num().coeff(0), g.den().coeff(1), g.den().coeff(0))
    }

    pub fn is_identity(&self) -> bool {
        *self == Mobius::identity()
    }

    /// The translation amount when this is x ↦ x + c.
    pub fn as_shift(&self) -> Option<Rat> {
        (self.gamma.is_zero() && self.alpha.is_one()).then(|| self.beta.clone())
    }

    pub fn image_of_x(&self) -> RatFun {
        RatFun::new(
            QPoly::new(vec![self.beta.clone(), self.alpha.clone()]),
            QPoly::new(vec![self.delta.clone(), self.gamma.clone()]),
        )
        .expect("nonzero determinant keeps the denominator nonzero")
    }

    /// Matrix product, i.e. function composition self(other(x)).
    fn after(&self, other: &Mobius) -> Mobius {
        Mobius::new(
            &self.alpha * &other.alpha + &self.beta * &other.gamma,
            &self.alpha * &other.beta + &self.beta * &other.delta,
            &self.gamma * &other.alpha + &self.delta * &other.gamma,
            &self.gamma * &other.beta + &self.delta * &other.delta,
        )
        .expect("product of invertible maps is invertible")
    }

    fn inverse(&self) -> Mobius {
        Mobius::new(self.delta.clone(), -&self.beta, -&self.gamma, self.alpha.clone())
            .expect("inverse of an invertible map is invertible")
    }

    /// r(x) ↦ r(g(x)).
    pub fn apply(&self, r: &RatFun) -> RatFun {
        if self.is_identity() || r.is_constant() {
            return r.clone();
        }
        if self.gamma.is_zero() {
            let g = QPoly::new(vec![&self.beta / &self.delta, &self.alpha / &self.delta]);
            return RatFun::new(r.num().compose(&g), r.den().compose(&g)).unwrap();
        }
        // Homogenize both parts to the common degree so (γx+δ)^D cancels.
        let lin_num = QPoly::new(vec![self.beta.clone(), self.alpha.clone()]);
        let lin_den = QPoly::new(vec![self.delta.clone(), self.gamma.clone()]);
        let top = r.num().degree().max(r.den().degree()).max(0) as u32;
        let homog = |p: &QPoly| {
            let mut acc = QPoly::zero();
            for (i, c) in p.coeffs().iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                let term = &lin_num.pow(i as u32) * &lin_den.pow(top - i as u32);
                acc = &acc + &term.scale(c);
            }
            acc
        };
        RatFun::new(homog(r.num()), homog(r.den())).unwrap()
    }
}

/// A resolved automorphism in canonical form.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Automorphism {
    /// Inner automorphism of ℍ(ℚ); `None` is the identity.
    Quat(Option<Quat>),
    /// Möbius automorphism of ℚ(x).
    Field(Mobius),
}

impl Automorphism {
    pub fn identity(tag: AlgebraTag) -> Self {
        match tag {
            AlgebraTag::HQ => Automorphism::Quat(None),
            AlgebraTag::QX => Automorphism::Field(Mobius::identity()),
        }
    }

    /// 𝐢𝐧_u; trivial on the field ℚ(x). Panics on u = 0.
    pub fn inner(u: &DElem) -> Self {
        assert!(!u.is_zero(), "inner automorphism by zero");
        match u {
            DElem::Quat(q) if q.is_real() => Automorphism::Quat(None),
            DElem::Quat(q) => Automorphism::Quat(Some(q.normalize_leading())),
            DElem::RatFun(_) => Automorphism::identity(AlgebraTag::QX),
        }
    }

    pub fn shift(c: Rat) -> Self {
        Automorphism::Field(Mobius::new(Rat::one(), c, Rat::zero(), Rat::one()).unwrap())
    }

    pub fn tag(&self) -> AlgebraTag {
        match self {
            Automorphism::Quat(_) => AlgebraTag::HQ,
            Automorphism::Field(_) => AlgebraTag::QX,
        }
    }

    pub fn is_identity(&self) -> bool {
        match self {
            Automorphism::Quat(u) => u.is_none(),
            Automorphism::Field(m) => m.is_identity(),
        }
    }

    /// Inner automorphisms of a field are trivial; on ℍ(ℚ) everything is inner.
    pub fn is_inner(&self) -> bool {
        match self {
            Automorphism::Quat(_) => true,
            Automorphism::Field(m) => m.is_identity(),
        }
    }

    /// A unit c with self = 𝐢𝐧_c, when self is inner.
    pub fn inner_unit(&self) -> Option<DElem> {
        match self {
            Automorphism::Quat(None) => Some(DElem::one(AlgebraTag::HQ)),
            Automorphism::Quat(Some(u)) => Some(DElem::Quat(u.clone())),
            Automorphism::Field(m) if m.is_identity() => Some(DElem::one(AlgebraTag::QX)),
            Automorphism::Field(_) => None,
        }
    }

    pub fn apply(&self, r: &DElem) -> DElem {
        match (self, r) {
            (Automorphism::Quat(None), DElem::Quat(_)) => r.clone(),
            (Automorphism::Quat(Some(u)), DElem::Quat(q)) => {
                if q.is_real() {
                    return r.clone();
                }
                let inv = u.inv().expect("canonical inner unit is nonzero");
                DElem::Quat(&(u * q) * &inv)
            }
            (Automorphism::Field(m), DElem::RatFun(f)) => DElem::RatFun(m.apply(f)),
            _ => panic!("applying a {} automorphism to a {} element", self.tag(), r.tag()),
        }
    }

    pub fn try_apply(&self, r: &DElem) -> Result<DElem> {
        r.check_tag(self.tag())?;
        Ok(self.apply(r))
    }

    /// self∘other: apply `other` first.
    pub fn compose(&self, other: &Automorphism) -> Automorphism {
        match (self, other) {
            (Automorphism::Quat(a), Automorphism::Quat(b)) => match (a, b) {
                (None, _) => other.clone(),
                (_, None) => self.clone(),
                (Some(u), Some(v)) => Automorphism::inner(&DElem::Quat(u * v)),
            },
            // x ↦ g_self(x) then x ↦ g_other(x): the image of x is g_other(g_self(x)).
            (Automorphism::Field(a), Automorphism::Field(b)) => Automorphism::Field(b.after(a)),
            _ => panic!("composing automorphisms of different algebras"),
        }
    }

    pub fn inverse(&self) -> Automorphism {
        match self {
            Automorphism::Quat(None) => self.clone(),
            Automorphism::Quat(Some(u)) => Automorphism::inner(&DElem::Quat(u.inv().expect("nonzero unit"))),
            Automorphism::Field(m) => Automorphism::Field(m.inverse()),
        }
    }

    pub fn pow(&self, k: i64) -> Automorphism {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut e = k.unsigned_abs();
        let mut acc = Automorphism::identity(self.tag());
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.compose(&sq);
            }
            sq = sq.compose(&sq);
            e >>= 1;
        }
        acc
    }

    /// Compares images of the ring generators ({i, j} or {x}), which
    /// determine an automorphism fixing ℚ.
    pub fn agrees_on_generators(&self, other: &Automorphism) -> bool {
        self.tag() == other.tag() && DElem::generators(self.tag()).iter().all(|g| self.apply(g) == other.apply(g))
    }

    pub fn to_desc(&self) -> AutoDesc {
        match self {
            Automorphism::Quat(None) => AutoDesc::Identity,
            Automorphism::Quat(Some(u)) => AutoDesc::Inner { u: DElem::Quat(u.clone()) },
            Automorphism::Field(m) if m.is_identity() => AutoDesc::Identity,
            Automorphism::Field(m) => AutoDesc::GenImage { g: m.image_of_x() },
        }
    }

    pub fn as_mobius(&self) -> Option<&Mobius> {
        match self {
            Automorphism::Field(m) => Some(m),
            _ => None,
        }
    }
}

impl Serialize for Automorphism {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_desc().serialize(s)
    }
}

impl fmt::Display for Automorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            _ if self.is_identity() => write!(f, "id"),
            Automorphism::Quat(Some(u)) => write!(f, "in({u})"),
            Automorphism::Quat(None) => unreachable!(),
            Automorphism::Field(m) => write!(f, "x->{}", m.image_of_x()),
        }
    }
}

/// Equality decided on generators. Descriptors that name no algebra are
/// built purely from identities and compare equal.
pub fn auto_equal(sigma: &AutoDesc, tau: &AutoDesc) -> Result<bool> {
    let tag = shared_tag(sigma, tau)?;
    Ok(sigma.resolve(tag)?.agrees_on_generators(&tau.resolve(tag)?))
}

pub fn auto_commute(sigma: &AutoDesc, tau: &AutoDesc) -> Result<bool> {
    let tag = shared_tag(sigma, tau)?;
    let (s, t) = (sigma.resolve(tag)?, tau.resolve(tag)?);
    Ok(s.compose(&t).agrees_on_generators(&t.compose(&s)))
}

fn shared_tag(sigma: &AutoDesc, tau: &AutoDesc) -> Result<AlgebraTag> {
    match (sigma.algebra(), tau.algebra()) {
        (Some(a), Some(b)) if a != b => Err(Error::TagMismatch(a, b)),
        (a, b) => Ok(a.or(b).unwrap_or(AlgebraTag::HQ)),
    }
}

pub fn is_central(r: &DElem) -> bool {
    r.is_central()
}

pub fn is_fixed(sigma: &Automorphism, r: &DElem) -> Result<bool> {
    Ok(sigma.try_apply(r)? == *r)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum InnerOrder {
    Order(u64),
    NotFoundWithinBound(u64),
}

/// Least k ≤ bound with σᵏ inner.
pub fn inner_order(sigma: &Automorphism, bound: u64) -> Result<InnerOrder> {
    if bound == 0 {
        return Err(Error::ZeroBound);
    }
    let mut power = sigma.clone();
    for k in 1..=bound {
        if power.is_inner() {
            return Ok(InnerOrder::Order(k));
        }
        power = power.compose(sigma);
    }
    Ok(InnerOrder::NotFoundWithinBound(bound))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::divalg::rat::{rat, ratio};

    fn i() -> DElem {
        DElem::quat(0, 1, 0, 0)
    }
    fn j() -> DElem {
        DElem::quat(0, 0, 1, 0)
    }

    #[test]
    fn apply_examples() {
        let inner_i = AutoDesc::inner(i()).resolve(AlgebraTag::HQ).unwrap();
        assert_eq!(inner_i.apply(&j()), -&j());

        let shift = AutoDesc::shift(rat(1)).resolve(AlgebraTag::QX).unwrap();
        assert_eq!(shift.apply(&DElem::qx_poly(&[0, 0, 1])), DElem::qx_poly(&[1, 2, 1]));

        let id = Automorphism::identity(AlgebraTag::HQ);
        assert_eq!(id.apply(&DElem::quat(1, 2, 3, 4)), DElem::quat(1, 2, 3, 4));
    }

    #[test]
    fn equality_examples() {
        let ii = AutoDesc::compose(vec![AutoDesc::inner(i()), AutoDesc::inner(i())]);
        assert!(auto_equal(&ii, &AutoDesc::Identity).unwrap());
        assert!(!auto_equal(&AutoDesc::shift(rat(1)), &AutoDesc::shift(rat(2))).unwrap());
        let cube = AutoDesc::power(AutoDesc::shift(rat(1)), 3);
        assert!(auto_equal(&cube, &AutoDesc::shift(rat(3))).unwrap());
        assert!(matches!(auto_equal(&AutoDesc::inner(i()), &AutoDesc::shift(rat(1))), Err(Error::TagMismatch(..))));
    }

    #[test]
    fn commute_examples() {
        assert!(auto_commute(&AutoDesc::shift(rat(1)), &AutoDesc::shift(rat(-1))).unwrap());
        // ij and ji differ by the central factor −1, so in_i and in_j commute.
        assert!(auto_commute(&AutoDesc::inner(i()), &AutoDesc::inner(j())).unwrap());
        let one_plus_j = DElem::quat(1, 0, 1, 0);
        assert!(!auto_commute(&AutoDesc::inner(i()), &AutoDesc::inner(one_plus_j)).unwrap());
        assert!(auto_commute(&AutoDesc::Identity, &AutoDesc::inner(j())).unwrap());
    }

    #[test]
    fn inner_order_examples() {
        let inner_i = Automorphism::inner(&i());
        assert_eq!(inner_order(&inner_i, 5).unwrap(), InnerOrder::Order(1));
        let shift = Automorphism::shift(rat(1));
        assert_eq!(inner_order(&shift, 100).unwrap(), InnerOrder::NotFoundWithinBound(100));
        let neg = AutoDesc::gen_image(RatFun::poly(QPoly::from_ints(&[0, -1]))).resolve(AlgebraTag::QX).unwrap();
        assert_eq!(inner_order(&neg, 10).unwrap(), InnerOrder::Order(2));
        assert_eq!(inner_order(&neg, 0), Err(Error::ZeroBound));
    }

    #[test]
    fn fixed_and_central() {
        assert!(is_fixed(&Automorphism::shift(rat(1)), &DElem::int(AlgebraTag::QX, 5)).unwrap());
        assert!(!is_fixed(&Automorphism::shift(rat(1)), &DElem::x()).unwrap());
        assert!(is_central(&DElem::rational(AlgebraTag::HQ, ratio(3, 2))));
        assert!(!is_central(&i()));
    }

    #[test]
    fn malformed_images_rejected() {
        let sq = AutoDesc::gen_image(RatFun::poly(QPoly::from_ints(&[0, 0, 1])));
        assert!(matches!(sq.resolve(AlgebraTag::QX), Err(Error::MalformedAutomorphism(_))));
        let constant = AutoDesc::gen_image(RatFun::poly(QPoly::from_ints(&[3])));
        assert!(matches!(constant.resolve(AlgebraTag::QX), Err(Error::MalformedAutomorphism(_))));
        let zero_inner = AutoDesc::inner(DElem::zero(AlgebraTag::HQ));
        assert!(matches!(zero_inner.resolve(AlgebraTag::HQ), Err(Error::MalformedAutomorphism(_))));
    }

    #[test]
    fn mobius_composition_order() {
        // σ: x ↦ 2x, τ: x ↦ x + 1. (σ∘τ)(x) = σ(x + 1) = 2x + 1.
        let sigma = AutoDesc::gen_image(RatFun::poly(QPoly::from_ints(&[0, 2])));
        let tau = AutoDesc::shift(rat(1));
        let st = AutoDesc::compose(vec![sigma.clone(), tau.clone()]).resolve(AlgebraTag::QX).unwrap();
        assert_eq!(st.apply(&DElem::x()), DElem::qx_poly(&[1, 2]));
        let s = sigma.resolve(AlgebraTag::QX).unwrap();
        let t = tau.resolve(AlgebraTag::QX).unwrap();
        assert_eq!(st.apply(&DElem::x()), s.apply(&t.apply(&DElem::x())));
    }

    #[test]
    fn mobius_apply_rational() {
        // x ↦ 1/x sends (x+1)/(x-1) to (1+x)/(1-x).
        let inv = AutoDesc::gen_image(RatFun::new(QPoly::one(), QPoly::x()).unwrap()).resolve(AlgebraTag::QX).unwrap();
        let r = DElem::RatFun(RatFun::new(QPoly::from_ints(&[1, 1]), QPoly::from_ints(&[-1, 1])).unwrap());
        let expected = DElem::RatFun(RatFun::new(QPoly::from_ints(&[1, 1]), QPoly::from_ints(&[1, -1])).unwrap());
        assert_eq!(inv.apply(&r), expected);
        assert_eq!(inner_order(&inv, 4).unwrap(), InnerOrder::Order(2));
    }
}
