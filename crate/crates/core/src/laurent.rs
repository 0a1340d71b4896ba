//! Skew Laurent polynomials D[t, t⁻¹; σ].
//!
//! Elements are finite sums Σ c_k·t^k over integer k with t^k·a = σ^k(a)·t^k.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::divalg::{AlgebraTag, AutoDesc, Automorphism, DElem};
use crate::error::{Error, Result};
use crate::ext::{check_automorphic, AutomorphicWitness, BasisKey, ExtensionElement};
use crate::skewpoly::{ExpVec, SkewPoly, SkewRing};
use crate::subst::Substitution;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LaurentRing {
    sigma: Automorphism,
}

impl LaurentRing {
    pub fn new(sigma: Automorphism) -> Arc<Self> {
        Arc::new(LaurentRing { sigma })
    }

    pub fn from_desc(desc: &LaurentRingDesc) -> Result<Arc<Self>> {
        Ok(LaurentRing::new(desc.auto.resolve(desc.algebra)?))
    }

    pub fn tag(&self) -> AlgebraTag {
        self.sigma.tag()
    }

    pub fn sigma(&self) -> &Automorphism {
        &self.sigma
    }

    pub fn desc(&self) -> LaurentRingDesc {
        LaurentRingDesc { algebra: self.tag(), auto: self.sigma.to_desc() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LaurentRingDesc {
    pub algebra: AlgebraTag,
    pub auto: AutoDesc,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LaurentPoly {
    ring: Arc<LaurentRing>,
    terms: BTreeMap<i64, DElem>,
}

impl LaurentPoly {
    pub fn zero(ring: &Arc<LaurentRing>) -> Self {
        LaurentPoly { ring: ring.clone(), terms: BTreeMap::new() }
    }

    pub fn monomial(ring: &Arc<LaurentRing>, k: i64, c: DElem) -> Self {
        let mut out = LaurentPoly::zero(ring);
        out.add_term(k, &c);
        out
    }

    pub fn constant(ring: &Arc<LaurentRing>, c: DElem) -> Self {
        LaurentPoly::monomial(ring, 0, c)
    }

    pub fn one(ring: &Arc<LaurentRing>) -> Self {
        LaurentPoly::constant(ring, DElem::one(ring.tag()))
    }

    /// t^k.
    pub fn t(ring: &Arc<LaurentRing>, k: i64) -> Self {
        LaurentPoly::monomial(ring, k, DElem::one(ring.tag()))
    }

    pub fn from_terms(ring: &Arc<LaurentRing>, terms: impl IntoIterator<Item = (i64, DElem)>) -> Result<Self> {
        let mut out = LaurentPoly::zero(ring);
        for (k, c) in terms {
            c.check_tag(ring.tag())?;
            out.add_term(k, &c);
        }
        Ok(out)
    }

    /// The image of a one-variable skew polynomial with the same σ.
    pub fn from_skew(ring: &Arc<LaurentRing>, f: &SkewPoly) -> Result<Self> {
        let r = f.ring();
        if r.n() != 1 || r.tag() != ring.tag() || !r.autos()[0].agrees_on_generators(&ring.sigma) {
            return Err(Error::RingMismatch);
        }
        LaurentPoly::from_terms(ring, f.terms().iter().map(|(e, c)| (e.0[0] as i64, c.clone())))
    }

    pub fn ring(&self) -> &Arc<LaurentRing> {
        &self.ring
    }

    pub fn terms(&self) -> &BTreeMap<i64, DElem> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn min_exponent(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exponent(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    fn add_term(&mut self, k: i64, c: &DElem) {
        if c.is_zero() {
            return;
        }
        match self.terms.get(&k) {
            Some(old) => {
                let s = old + c;
                if s.is_zero() {
                    self.terms.remove(&k);
                } else {
                    self.terms.insert(k, s);
                }
            }
            None => {
                self.terms.insert(k, c.clone());
            }
        }
    }

    fn same_ring(&self, o: &LaurentPoly) -> bool {
        Arc::ptr_eq(&self.ring, &o.ring) || self.ring == o.ring
    }

    pub fn try_add(&self, o: &LaurentPoly) -> Result<LaurentPoly> {
        if !self.same_ring(o) {
            return Err(Error::RingMismatch);
        }
        let mut out = self.clone();
        for (k, c) in &o.terms {
            out.add_term(*k, c);
        }
        Ok(out)
    }

    pub fn try_mul(&self, o: &LaurentPoly) -> Result<LaurentPoly> {
        if !self.same_ring(o) {
            return Err(Error::RingMismatch);
        }
        let mut out = LaurentPoly::zero(&self.ring);
        for (k, a) in &self.terms {
            let tw = self.ring.sigma.pow(*k);
            for (l, b) in &o.terms {
                out.add_term(k + l, &(a * &tw.apply(b)));
            }
        }
        Ok(out)
    }

    pub fn neg(&self) -> LaurentPoly {
        LaurentPoly { ring: self.ring.clone(), terms: self.terms.iter().map(|(k, c)| (*k, -c)).collect() }
    }

    pub fn scale_left(&self, c: &DElem) -> LaurentPoly {
        let mut out = LaurentPoly::zero(&self.ring);
        for (k, a) in &self.terms {
            out.add_term(*k, &(c * a));
        }
        out
    }
}

pub fn lp_mul(f: &LaurentPoly, g: &LaurentPoly) -> Result<LaurentPoly> {
    f.try_mul(g)
}

pub fn lp_add(f: &LaurentPoly, g: &LaurentPoly) -> Result<LaurentPoly> {
    f.try_add(g)
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (idx, (k, c)) in self.terms.iter().rev().enumerate() {
            if idx > 0 {
                write!(f, " + ")?;
            }
            let mono = match k {
                0 => String::new(),
                1 => "t".to_string(),
                _ => format!("t^{k}"),
            };
            let cs = c.to_string();
            let wrap = cs.contains(['+', '/']) || cs[1..].contains('-');
            match (mono.is_empty(), c.is_one()) {
                (true, _) => write!(f, "{cs}")?,
                (false, true) => write!(f, "{mono}")?,
                (false, false) if wrap => write!(f, "({cs})*{mono}")?,
                (false, false) => write!(f, "{cs}*{mono}")?,
            }
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct LaurentRepr {
    ring: LaurentRingDesc,
    terms: BTreeMap<String, DElem>,
}

impl Serialize for LaurentPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        LaurentRepr {
            ring: self.ring.desc(),
            terms: self.terms.iter().map(|(k, c)| (k.to_string(), c.clone())).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for LaurentPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let repr = LaurentRepr::deserialize(d)?;
        let ring = LaurentRing::from_desc(&repr.ring).map_err(D::Error::custom)?;
        let terms = repr
            .terms
            .into_iter()
            .map(|(k, c)| k.parse::<i64>().map(|k| (k, c)).map_err(D::Error::custom))
            .collect::<std::result::Result<Vec<_>, _>>()?;
        LaurentPoly::from_terms(&ring, terms).map_err(D::Error::custom)
    }
}

impl ExtensionElement for LaurentPoly {
    fn tag(&self) -> AlgebraTag {
        self.ring.tag()
    }
    fn same_ring(&self, other: &Self) -> bool {
        LaurentPoly::same_ring(self, other)
    }
    fn zero_like(&self) -> Self {
        LaurentPoly::zero(&self.ring)
    }
    fn constant_like(&self, c: &DElem) -> Self {
        LaurentPoly::constant(&self.ring, c.clone())
    }
    fn is_zero(&self) -> bool {
        LaurentPoly::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self.try_add(other).expect("Laurent operands live in different rings")
    }
    fn neg(&self) -> Self {
        LaurentPoly::neg(self)
    }
    fn mul(&self, other: &Self) -> Self {
        self.try_mul(other).expect("Laurent operands live in different rings")
    }
    fn scale_left(&self, c: &DElem) -> Self {
        LaurentPoly::scale_left(self, c)
    }
    fn left_terms(&self) -> Vec<(BasisKey, DElem)> {
        self.terms.iter().map(|(k, c)| (vec![*k], c.clone())).collect()
    }
    fn basis_twist(&self, key: &BasisKey) -> Automorphism {
        self.ring.sigma.pow(key[0])
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Classification {
    /// A single term b·t^k, twisting by 𝐢𝐧_b∘σ^k.
    Monomial {
        coef: DElem,
        k: i64,
        twist: Automorphism,
    },
    /// Several terms sharing one twist.
    Automorphic {
        twist: Automorphism,
    },
    NotAutomorphic {
        first: String,
        second: String,
    },
}

impl Classification {
    pub fn twist(&self) -> Option<&Automorphism> {
        match self {
            Classification::Monomial { twist, .. } | Classification::Automorphic { twist } => Some(twist),
            Classification::NotAutomorphic { .. } => None,
        }
    }
}

pub fn classify_automorphic(a: &LaurentPoly) -> Result<Classification> {
    let twist = match check_automorphic(a) {
        Ok(tw) => tw,
        Err(Error::NotAutomorphic { first, second }) => {
            return Ok(Classification::NotAutomorphic { first, second });
        }
        Err(e) => return Err(e),
    };
    if a.terms.len() == 1 {
        let (k, c) = a.terms.iter().next().expect("one term");
        return Ok(Classification::Monomial { coef: c.clone(), k: *k, twist });
    }
    Ok(Classification::Automorphic { twist })
}

/// Lowest exponents of u^j checked as evidence that u is transcendental.
pub const INDEPENDENCE_DEPTH: u32 = 8;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct InnerOrderWitness {
    pub u: LaurentPoly,
    pub twist: Automorphism,
    /// c⁻²·t^{2k} − u·t^k + 1 in D[u, t; 𝐢𝐧_{c⁻¹}, σ].
    pub relation: SkewPoly,
    /// min exponent of u^j for j = 1..=8.
    pub lowest_exponents: Vec<i64>,
}

/// u = t^{−k} + c⁻²·t^k for σ^k = 𝐢𝐧_c, with its relation over D[t; σ].
pub fn finite_inner_order_witness(sigma: &Automorphism, k: u32, c: &DElem) -> Result<InnerOrderWitness> {
    let tag = sigma.tag();
    c.check_tag(tag)?;
    if k == 0 {
        return Err(Error::WitnessHypothesisFails("k must be positive".into()));
    }
    if c.is_zero() {
        return Err(Error::WitnessHypothesisFails("c must be nonzero".into()));
    }
    let ki = k as i64;
    if !sigma.pow(ki).agrees_on_generators(&Automorphism::inner(c)) {
        return Err(Error::WitnessHypothesisFails(format!("σ^{k} = {} differs from in_{c}", sigma.pow(ki))));
    }
    let ring = LaurentRing::new(sigma.clone());
    let cinv = c.inv()?;
    let cinv2 = &cinv * &cinv;
    let u = LaurentPoly::from_terms(&ring, [(-ki, DElem::one(tag)), (ki, cinv2.clone())])?;
    let twist = check_automorphic(&u)?;
    let expected = Automorphism::inner(&cinv);
    if !twist.agrees_on_generators(&expected) {
        return Err(Error::CheckFailed(format!("u twists by {twist}, expected {expected}")));
    }

    let rel_ring = SkewRing::new(tag, vec![expected.clone(), sigma.clone()])?;
    let relation = SkewPoly::from_terms(
        &rel_ring,
        [
            (ExpVec(vec![0, 2 * k]), cinv2),
            (ExpVec(vec![1, k]), -&DElem::one(tag)),
            (ExpVec(vec![0, 0]), DElem::one(tag)),
        ],
    )?;
    let t = LaurentPoly::t(&ring, 1);
    let point = vec![AutomorphicWitness::new(u.clone(), expected), AutomorphicWitness::new(t, sigma.clone())];
    let value = Substitution::new(&rel_ring, point, LaurentPoly::one(&ring))?.apply(&relation)?;
    if !value.is_zero() {
        return Err(Error::CheckFailed(format!("relation evaluates to {value}")));
    }

    let mut lowest = Vec::new();
    let mut p = LaurentPoly::one(&ring);
    for j in 1..=INDEPENDENCE_DEPTH as i64 {
        p = p.mul(&u);
        let low = p.min_exponent().expect("powers of u are nonzero");
        if low != -ki * j {
            return Err(Error::CheckFailed(format!("u^{j} has lowest exponent {low}")));
        }
        lowest.push(low);
    }
    Ok(InnerOrderWitness { u, twist, relation, lowest_exponents: lowest })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Inversion {
    /// The candidate really inverts t.
    Inverse {
        candidate: SkewPoly,
    },
    Inconsistent {
        candidate: SkewPoly,
        product: LaurentPoly,
    },
}

/// From t^{−m} + Σ fᵢ·t^{−i} = 0, the candidate
/// t⁻¹ = −(f_{m−1} + f_{m−2}·t + … + f₀·t^{m−1}), checked by multiplying with t.
pub fn invert_via_integral_relation(coeffs: &[SkewPoly]) -> Result<Inversion> {
    let Some(first) = coeffs.first() else {
        return Err(Error::DimensionMismatch("the relation needs m ≥ 1 coefficients".into()));
    };
    let ring = first.ring().clone();
    if ring.n() != 1 {
        return Err(Error::DimensionMismatch(format!("coefficients must lie in D[t; σ], got {} variables", ring.n())));
    }
    let m = coeffs.len();
    let t = SkewPoly::var(&ring, 0);
    let mut sum = SkewPoly::zero(&ring);
    for (i, f) in coeffs.iter().enumerate() {
        if !f.same_ring(first) {
            return Err(Error::RingMismatch);
        }
        sum = &sum + &(f * &t.pow((m - 1 - i) as u32));
    }
    let candidate = -&sum;
    let lring = LaurentRing::new(ring.autos()[0].clone());
    let product = LaurentPoly::from_skew(&lring, &candidate)?.mul(&LaurentPoly::t(&lring, 1));
    if product == LaurentPoly::one(&lring) {
        Ok(Inversion::Inverse { candidate })
    } else {
        Ok(Inversion::Inconsistent { candidate, product })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::divalg::rat::rat;

    fn shift_ring() -> Arc<LaurentRing> {
        LaurentRing::new(Automorphism::shift(rat(1)))
    }

    #[test]
    fn arithmetic_examples() {
        let r = shift_ring();
        assert_eq!(LaurentPoly::t(&r, 1).mul(&LaurentPoly::t(&r, -1)), LaurentPoly::one(&r));
        let x = LaurentPoly::constant(&r, DElem::x());
        let lhs = LaurentPoly::t(&r, -1).mul(&x);
        let xm1 = DElem::qx_poly(&[-1, 1]);
        assert_eq!(lhs, LaurentPoly::monomial(&r, -1, xm1));
        let s = LaurentPoly::t(&r, 1).add(&LaurentPoly::t(&r, -1));
        let two = DElem::int(AlgebraTag::QX, 2);
        let expect =
            LaurentPoly::from_terms(&r, [(2, DElem::one(AlgebraTag::QX)), (0, two), (-2, DElem::one(AlgebraTag::QX))]);
        assert_eq!(s.pow(2), expect.unwrap());
    }

    #[test]
    fn classification_examples() {
        let r = shift_ring();
        let s = LaurentPoly::t(&r, 1).add(&LaurentPoly::t(&r, -1));
        assert!(matches!(classify_automorphic(&s).unwrap(), Classification::NotAutomorphic { .. }));
        let five = LaurentPoly::monomial(&r, 3, DElem::int(AlgebraTag::QX, 5));
        match classify_automorphic(&five).unwrap() {
            Classification::Monomial { k, twist, .. } => {
                assert_eq!(k, 3);
                assert_eq!(twist, Automorphism::shift(rat(3)));
            }
            other => panic!("unexpected {other:?}"),
        }
        let h = LaurentRing::new(Automorphism::inner(&DElem::quat(0, 1, 0, 0)));
        let u = LaurentPoly::t(&h, -2).add(&LaurentPoly::t(&h, 2));
        let c = classify_automorphic(&u).unwrap();
        assert!(matches!(c, Classification::Automorphic { .. }));
        assert!(c.twist().unwrap().is_identity());
        assert_eq!(classify_automorphic(&LaurentPoly::zero(&h)), Err(Error::ZeroElement));
    }

    #[test]
    fn witness_examples() {
        let i = DElem::quat(0, 1, 0, 0);
        let w = finite_inner_order_witness(&Automorphism::inner(&i), 2, &DElem::quat(-1, 0, 0, 0)).unwrap();
        let h = w.u.ring().clone();
        assert_eq!(w.u, LaurentPoly::t(&h, -2).add(&LaurentPoly::t(&h, 2)));
        assert_eq!(w.lowest_exponents, (1..=8).map(|j| -2 * j).collect::<Vec<_>>());

        let q1 = DElem::one(AlgebraTag::QX);
        let w = finite_inner_order_witness(&Automorphism::identity(AlgebraTag::QX), 1, &q1).unwrap();
        assert_eq!(w.relation.to_string(), "-1*t1*t2 + t2^2 + 1");

        let neg = AutoDesc::gen_image(crate::divalg::RatFun::poly(crate::divalg::QPoly::new(vec![rat(0), rat(-1)])));
        let neg = neg.resolve(AlgebraTag::QX).unwrap();
        assert!(finite_inner_order_witness(&neg, 2, &q1).is_ok());
        assert!(matches!(finite_inner_order_witness(&neg, 1, &q1), Err(Error::WitnessHypothesisFails(_))));
    }

    #[test]
    fn inversion_examples() {
        let r = SkewRing::central(AlgebraTag::QX, 1);
        let t = SkewPoly::var(&r, 0);
        let res = invert_via_integral_relation(&[SkewPoly::zero(&r)]).unwrap();
        assert!(matches!(res, Inversion::Inconsistent { ref candidate, .. } if candidate.is_zero()));
        let res = invert_via_integral_relation(&[t.clone(), SkewPoly::zero(&r)]).unwrap();
        match res {
            Inversion::Inconsistent { candidate, .. } => assert_eq!(candidate, -&t.pow(2)),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn json_keys_are_signed_integers() {
        let r = shift_ring();
        let u = LaurentPoly::t(&r, -2).add(&LaurentPoly::t(&r, 3));
        let v = serde_json::to_value(&u).unwrap();
        assert!(v["terms"].get("-2").is_some());
        let back: LaurentPoly = serde_json::from_value(v).unwrap();
        assert_eq!(back, u);
    }
}
