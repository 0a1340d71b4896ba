//! Multivariate skew polynomials D[t₁,…,tₙ; σ₁,…,σₙ].
//!
//! Coefficients sit on the left and variables commute with each other, so
//! every element has the unique normal form Σ c_I·t^I. Products follow
//! (a·t^I)(b·t^J) = a·σ^I(b)·t^{I+J} with σ^I = σ₁^{i₁}∘…∘σₙ^{iₙ}.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::divalg::{AlgebraTag, AutoDesc, Automorphism, DElem};
use crate::error::{Error, Result};

/// JSON shape of a ring: algebra, number of variables, one automorphism each.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RingDesc {
    pub algebra: AlgebraTag,
    pub n: usize,
    pub autos: Vec<AutoDesc>,
}

/// A validated ring with resolved automorphisms.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SkewRing {
    tag: AlgebraTag,
    autos: Vec<Automorphism>,
}

impl SkewRing {
    pub fn new(tag: AlgebraTag, autos: Vec<Automorphism>) -> Result<Arc<Self>> {
        for a in &autos {
            if a.tag() != tag {
                return Err(Error::TagMismatch(a.tag(), tag));
            }
        }
        for (i, a) in autos.iter().enumerate() {
            for b in &autos[i + 1..] {
                if !a.compose(b).agrees_on_generators(&b.compose(a)) {
                    return Err(Error::MalformedAutomorphism(format!("ring automorphisms {a} and {b} do not commute")));
                }
            }
        }
        Ok(Arc::new(SkewRing { tag, autos }))
    }

    pub fn from_desc(desc: &RingDesc) -> Result<Arc<Self>> {
        if desc.autos.len() != desc.n {
            return Err(Error::DimensionMismatch(format!(
                "ring declares n = {} but lists {} automorphisms",
                desc.n,
                desc.autos.len()
            )));
        }
        let autos = desc.autos.iter().map(|a| a.resolve(desc.algebra)).collect::<Result<_>>()?;
        SkewRing::new(desc.algebra, autos)
    }

    /// n central variables (all automorphisms trivial).
    pub fn central(tag: AlgebraTag, n: usize) -> Arc<Self> {
        Arc::new(SkewRing { tag, autos: vec![Automorphism::identity(tag); n] })
    }

    /// n variables all twisting by the same σ.
    pub fn constant(sigma: &Automorphism, n: usize) -> Arc<Self> {
        Arc::new(SkewRing { tag: sigma.tag(), autos: vec![sigma.clone(); n] })
    }

    pub fn tag(&self) -> AlgebraTag {
        self.tag
    }

    pub fn n(&self) -> usize {
        self.autos.len()
    }

    pub fn autos(&self) -> &[Automorphism] {
        &self.autos
    }

    pub fn is_central(&self) -> bool {
        self.autos.iter().all(Automorphism::is_identity)
    }

    pub fn desc(&self) -> RingDesc {
        RingDesc { algebra: self.tag, n: self.n(), autos: self.autos.iter().map(Automorphism::to_desc).collect() }
    }

    /// σ^I for a monomial exponent.
    pub fn twist(&self, e: &ExpVec) -> Automorphism {
        let mut acc = Automorphism::identity(self.tag);
        for (a, &k) in self.autos.iter().zip(&e.0) {
            if k > 0 && !a.is_identity() {
                acc = acc.compose(&a.pow(k as i64));
            }
        }
        acc
    }
}

/// Exponent vector, ordered graded-lexicographically.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ExpVec(pub Vec<u32>);

impl ExpVec {
    pub fn zero(n: usize) -> Self {
        ExpVec(vec![0; n])
    }

    pub fn unit(n: usize, i: usize) -> Self {
        let mut v = vec![0; n];
        v[i] = 1;
        ExpVec(v)
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn add(&self, o: &ExpVec) -> ExpVec {
        ExpVec(self.0.iter().zip(&o.0).map(|(a, b)| a + b).collect())
    }

    pub fn last(&self) -> u32 {
        self.0.last().copied().unwrap_or(0)
    }

    /// All exponent vectors in n variables of total degree exactly d,
    /// in descending graded-lex order.
    pub fn of_degree(n: usize, d: u32) -> Vec<ExpVec> {
        fn go(n: usize, d: u32, prefix: &mut Vec<u32>, out: &mut Vec<ExpVec>) {
            if prefix.len() + 1 == n {
                prefix.push(d);
                out.push(ExpVec(prefix.clone()));
                prefix.pop();
                return;
            }
            for k in (0..=d).rev() {
                prefix.push(k);
                go(n, d - k, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        if n == 0 {
            if d == 0 {
                out.push(ExpVec(Vec::new()));
            }
            return out;
        }
        go(n, d, &mut Vec::new(), &mut out);
        out
    }

    /// All exponent vectors of total degree ≤ d, ascending by degree.
    pub fn up_to_degree(n: usize, d: u32) -> Vec<ExpVec> {
        (0..=d).flat_map(|k| ExpVec::of_degree(n, k).into_iter().rev()).collect()
    }
}

impl Ord for ExpVec {
    fn cmp(&self, o: &Self) -> Ordering {
        self.degree().cmp(&o.degree()).then_with(|| self.0.cmp(&o.0))
    }
}

impl PartialOrd for ExpVec {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SkewPoly {
    ring: Arc<SkewRing>,
    terms: BTreeMap<ExpVec, DElem>,
}

impl SkewPoly {
    pub fn zero(ring: &Arc<SkewRing>) -> Self {
        SkewPoly { ring: ring.clone(), terms: BTreeMap::new() }
    }

    pub fn constant(ring: &Arc<SkewRing>, c: DElem) -> Self {
        SkewPoly::monomial(ring, ExpVec::zero(ring.n()), c)
    }

    pub fn one(ring: &Arc<SkewRing>) -> Self {
        SkewPoly::constant(ring, DElem::one(ring.tag()))
    }

    /// The variable tᵢ (zero-based index).
    pub fn var(ring: &Arc<SkewRing>, i: usize) -> Self {
        SkewPoly::monomial(ring, ExpVec::unit(ring.n(), i), DElem::one(ring.tag()))
    }

    pub fn monomial(ring: &Arc<SkewRing>, e: ExpVec, c: DElem) -> Self {
        assert_eq!(e.len(), ring.n(), "exponent length must match the ring");
        assert_eq!(c.tag(), ring.tag(), "coefficient algebra must match the ring");
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(e, c);
        }
        SkewPoly { ring: ring.clone(), terms }
    }

    /// Builds from (exponent, coefficient) pairs, summing repeats.
    pub fn from_terms(ring: &Arc<SkewRing>, terms: impl IntoIterator<Item = (ExpVec, DElem)>) -> Result<Self> {
        let mut p = SkewPoly::zero(ring);
        for (e, c) in terms {
            if e.len() != ring.n() {
                return Err(Error::DimensionMismatch(format!(
                    "exponent {:?} has length {} in a ring with {} variables",
                    e.0,
                    e.len(),
                    ring.n()
                )));
            }
            c.check_tag(ring.tag())?;
            p.add_term(e, &c);
        }
        Ok(p)
    }

    pub fn ring(&self) -> &Arc<SkewRing> {
        &self.ring
    }

    pub fn terms(&self) -> &BTreeMap<ExpVec, DElem> {
        &self.terms
    }

    pub fn coeff(&self, e: &ExpVec) -> DElem {
        self.terms.get(e).cloned().unwrap_or_else(|| DElem::zero(self.ring.tag()))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|e| e.degree() == 0)
    }

    /// Same polynomial viewed in another ring with the same n and algebra.
    pub fn with_ring(&self, ring: &Arc<SkewRing>) -> Self {
        assert_eq!(ring.n(), self.ring.n());
        assert_eq!(ring.tag(), self.ring.tag());
        SkewPoly { ring: ring.clone(), terms: self.terms.clone() }
    }

    pub(crate) fn add_term(&mut self, e: ExpVec, c: &DElem) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&e) {
            Some(slot) => {
                let s = &*slot + c;
                if s.is_zero() {
                    self.terms.remove(&e);
                } else {
                    *slot = s;
                }
            }
            None => {
                self.terms.insert(e, c.clone());
            }
        }
    }

    pub fn same_ring(&self, o: &SkewPoly) -> bool {
        Arc::ptr_eq(&self.ring, &o.ring) || self.ring == o.ring
    }

    fn check_ring(&self, o: &SkewPoly) -> Result<()> {
        if self.same_ring(o) {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    pub fn try_add(&self, o: &SkewPoly) -> Result<SkewPoly> {
        self.check_ring(o)?;
        Ok(self + o)
    }

    pub fn try_sub(&self, o: &SkewPoly) -> Result<SkewPoly> {
        self.check_ring(o)?;
        Ok(self - o)
    }

    pub fn try_mul(&self, o: &SkewPoly) -> Result<SkewPoly> {
        self.check_ring(o)?;
        Ok(self * o)
    }

    pub fn scale_left(&self, c: &DElem) -> SkewPoly {
        let mut out = SkewPoly::zero(&self.ring);
        for (e, a) in &self.terms {
            out.add_term(e.clone(), &(c * a));
        }
        out
    }

    pub fn try_scale_left(&self, c: &DElem) -> Result<SkewPoly> {
        c.check_tag(self.ring.tag())?;
        Ok(self.scale_left(c))
    }

    /// f·c for a constant c, i.e. Σ a_I·σ^I(c)·t^I.
    pub fn scale_right(&self, c: &DElem) -> SkewPoly {
        let mut out = SkewPoly::zero(&self.ring);
        for (e, a) in &self.terms {
            out.add_term(e.clone(), &(a * &self.ring.twist(e).apply(c)));
        }
        out
    }

    pub fn pow(&self, e: u32) -> SkewPoly {
        let mut acc = SkewPoly::one(&self.ring);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Largest |I| over the support; −1 for zero.
    pub fn total_degree(&self) -> i64 {
        self.terms.keys().map(|e| e.degree() as i64).max().unwrap_or(-1)
    }

    /// Largest exponent of tᵢ (zero-based); −1 for zero.
    pub fn degree_in(&self, i: usize) -> i64 {
        self.terms.keys().map(|e| e.0[i] as i64).max().unwrap_or(-1)
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(ExpVec::degree);
        match degs.next() {
            Some(d) => degs.all(|k| k == d),
            None => true,
        }
    }

    /// Top homogeneous part, moved to central variables u₁,…,uₙ.
    pub fn leading_form(&self) -> Result<SkewPoly> {
        let m = self.total_degree();
        if m < 0 {
            return Err(Error::ZeroPolynomial);
        }
        let ring = SkewRing::central(self.ring.tag(), self.ring.n());
        let terms = self.terms.iter().filter(|(e, _)| e.degree() as i64 == m).map(|(e, c)| (e.clone(), c.clone()));
        Ok(SkewPoly { ring, terms: terms.collect() })
    }

    /// f = Σₖ cₖ·tₙᵏ with each cₖ free of tₙ (stored in the same ring).
    pub fn decompose_last(&self) -> Vec<SkewPoly> {
        let n = self.ring.n();
        if n == 0 {
            return vec![self.clone()];
        }
        let top = self.degree_in(n - 1);
        let mut parts = vec![SkewPoly::zero(&self.ring); (top + 1).max(0) as usize];
        for (e, c) in &self.terms {
            let mut e2 = e.clone();
            let k = e2.0[n - 1];
            e2.0[n - 1] = 0;
            parts[k as usize].add_term(e2, c);
        }
        parts
    }

    /// Inverse of [`decompose_last`](Self::decompose_last).
    pub fn recompose_last(ring: &Arc<SkewRing>, parts: &[SkewPoly]) -> SkewPoly {
        let n = ring.n();
        let mut acc = SkewPoly::zero(ring);
        for (k, p) in parts.iter().enumerate() {
            let tk = SkewPoly::monomial(ring, ExpVec(unit_pow(n, n - 1, k as u32)), DElem::one(ring.tag()));
            acc = &acc + &(p * &tk);
        }
        acc
    }

    /// The tₙ-leading coefficient is the constant 1. Zero is not monic; for
    /// n = 0 only the constant 1 qualifies.
    pub fn is_monic_in_last(&self) -> bool {
        if self.is_zero() {
            return false;
        }
        let n = self.ring.n();
        if n == 0 {
            return self.terms.values().all(DElem::is_one);
        }
        let top = self.degree_in(n - 1) as u32;
        let lead: Vec<_> = self.terms.iter().filter(|(e, _)| e.0[n - 1] == top).collect();
        lead.len() == 1 && {
            let (e, c) = lead[0];
            c.is_one() && e.0[..n - 1].iter().all(|&k| k == 0)
        }
    }

    /// Evaluation Σ c_I·a^I at a point of central elements.
    pub fn eval_central(&self, point: &[DElem]) -> Result<DElem> {
        if point.len() != self.ring.n() {
            return Err(Error::DimensionMismatch(format!(
                "point has {} coordinates, ring has {} variables",
                point.len(),
                self.ring.n()
            )));
        }
        for p in point {
            p.check_tag(self.ring.tag())?;
        }
        let mut cache: HashMap<(usize, u32), DElem> = HashMap::new();
        let mut acc = DElem::zero(self.ring.tag());
        for (e, c) in &self.terms {
            let mut v = c.clone();
            for (i, &k) in e.0.iter().enumerate() {
                if k > 0 {
                    let p = cache.entry((i, k)).or_insert_with(|| point[i].pow(k as u64));
                    v = &v * p;
                }
            }
            acc = &acc + &v;
        }
        Ok(acc)
    }

    /// Lifts into a ring with more variables by appending zero exponents.
    pub fn embed(&self, ring: &Arc<SkewRing>) -> SkewPoly {
        assert!(ring.n() >= self.ring.n());
        let pad = ring.n() - self.ring.n();
        let terms = self.terms.iter().map(|(e, c)| {
            let mut v = e.0.clone();
            v.extend(std::iter::repeat_n(0, pad));
            (ExpVec(v), c.clone())
        });
        SkewPoly { ring: ring.clone(), terms: terms.collect() }
    }

    /// Drops trailing variables that do not occur.
    pub fn restrict(&self, ring: &Arc<SkewRing>) -> Result<SkewPoly> {
        let k = ring.n();
        let mut out = SkewPoly::zero(ring);
        for (e, c) in &self.terms {
            if e.0[k..].iter().any(|&x| x != 0) {
                return Err(Error::DimensionMismatch("polynomial uses dropped variables".into()));
            }
            out.add_term(ExpVec(e.0[..k].to_vec()), c);
        }
        Ok(out)
    }

    pub fn fmt_with(&self, f: &mut fmt::Formatter<'_>, var: &str) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (idx, (e, c)) in self.terms.iter().rev().enumerate() {
            if idx > 0 {
                write!(f, " + ")?;
            }
            let mono = monomial_string(e, var);
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

fn unit_pow(n: usize, i: usize, k: u32) -> Vec<u32> {
    let mut v = vec![0; n];
    v[i] = k;
    v
}

pub fn monomial_string(e: &ExpVec, var: &str) -> String {
    let mut parts = Vec::new();
    for (i, &k) in e.0.iter().enumerate() {
        match k {
            0 => {}
            1 => parts.push(format!("{var}{}", i + 1)),
            _ => parts.push(format!("{var}{}^{k}", i + 1)),
        }
    }
    parts.join("*")
}

impl fmt::Display for SkewPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_with(f, "t")
    }
}

fn assert_same(a: &SkewPoly, b: &SkewPoly) {
    assert!(a.same_ring(b), "skew polynomial operands live in different rings");
}

impl<'a> Add<&'a SkewPoly> for &'a SkewPoly {
    type Output = SkewPoly;
    fn add(self, o: &SkewPoly) -> SkewPoly {
        assert_same(self, o);
        let mut out = self.clone();
        for (e, c) in &o.terms {
            out.add_term(e.clone(), c);
        }
        out
    }
}

impl Neg for &SkewPoly {
    type Output = SkewPoly;
    fn neg(self) -> SkewPoly {
        SkewPoly { ring: self.ring.clone(), terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect() }
    }
}

impl<'a> Sub<&'a SkewPoly> for &'a SkewPoly {
    type Output = SkewPoly;
    fn sub(self, o: &SkewPoly) -> SkewPoly {
        self + &(-o)
    }
}

impl<'a> Mul<&'a SkewPoly> for &'a SkewPoly {
    type Output = SkewPoly;
    fn mul(self, o: &SkewPoly) -> SkewPoly {
        assert_same(self, o);
        let mut out = SkewPoly::zero(&self.ring);
        let central = self.ring.is_central();
        for (e1, a) in &self.terms {
            let tw = (!central && e1.degree() > 0).then(|| self.ring.twist(e1));
            for (e2, b) in &o.terms {
                let c = match &tw {
                    Some(s) => a * &s.apply(b),
                    None => a * b,
                };
                out.add_term(e1.add(e2), &c);
            }
        }
        out
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct TermRepr {
    exp: Vec<u32>,
    coef: DElem,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct PolyRepr {
    ring: RingDesc,
    terms: Vec<TermRepr>,
}

impl Serialize for SkewPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        PolyRepr {
            ring: self.ring.desc(),
            terms: self.terms.iter().rev().map(|(e, c)| TermRepr { exp: e.0.clone(), coef: c.clone() }).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for SkewPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let repr = PolyRepr::deserialize(d)?;
        let ring = SkewRing::from_desc(&repr.ring).map_err(serde::de::Error::custom)?;
        SkewPoly::from_terms(&ring, repr.terms.into_iter().map(|t| (ExpVec(t.exp), t.coef)))
            .map_err(serde::de::Error::custom)
    }
}

impl Serialize for SkewRing {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.desc().serialize(s)
    }
}

/// Checked product, reporting `RingMismatch` for operands from different rings.
pub fn sp_mul(f: &SkewPoly, g: &SkewPoly) -> Result<SkewPoly> {
    f.try_mul(g)
}

pub fn sp_add(f: &SkewPoly, g: &SkewPoly) -> Result<SkewPoly> {
    f.try_add(g)
}

pub fn sp_sub(f: &SkewPoly, g: &SkewPoly) -> Result<SkewPoly> {
    f.try_sub(g)
}

pub fn sp_scale_left(c: &DElem, f: &SkewPoly) -> Result<SkewPoly> {
    f.try_scale_left(c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::divalg::rat::rat;

    fn shift_ring() -> Arc<SkewRing> {
        SkewRing::new(AlgebraTag::QX, vec![Automorphism::shift(rat(1))]).unwrap()
    }

    #[test]
    fn twisted_product_over_field() {
        let r = shift_ring();
        let t = SkewPoly::var(&r, 0);
        let x = SkewPoly::constant(&r, DElem::x());
        let expected = SkewPoly::monomial(&r, ExpVec(vec![1]), DElem::qx_poly(&[1, 1]));
        assert_eq!(&t * &x, expected);
        assert_eq!(&t * &SkewPoly::one(&r), t);
    }

    #[test]
    fn twisted_product_over_quaternions() {
        let r = SkewRing::new(AlgebraTag::HQ, vec![Automorphism::inner(&DElem::quat(0, 1, 0, 0))]).unwrap();
        let t = SkewPoly::var(&r, 0);
        let j = SkewPoly::constant(&r, DElem::quat(0, 0, 1, 0));
        assert_eq!(&t * &j, SkewPoly::monomial(&r, ExpVec(vec![1]), DElem::quat(0, 0, -1, 0)));
    }

    #[test]
    fn scaling_and_subtraction() {
        let r = SkewRing::central(AlgebraTag::HQ, 1);
        let jt = SkewPoly::monomial(&r, ExpVec(vec![1]), DElem::quat(0, 0, 1, 0));
        let kt = SkewPoly::monomial(&r, ExpVec(vec![1]), DElem::quat(0, 0, 0, 1));
        assert_eq!(jt.scale_left(&DElem::quat(0, 1, 0, 0)), kt);
        assert!((&jt - &jt).is_zero());
    }

    #[test]
    fn degrees() {
        let r = SkewRing::central(AlgebraTag::QX, 2);
        let (t1, t2) = (SkewPoly::var(&r, 0), SkewPoly::var(&r, 1));
        let f = &(&t1 * &t2) + &t1;
        assert_eq!(f.total_degree(), 2);
        assert_eq!((&t1 * &(&t2 * &t2)).degree_in(1), 2);
        assert_eq!(SkewPoly::zero(&r).total_degree(), -1);
    }

    #[test]
    fn leading_form_examples() {
        let r = SkewRing::central(AlgebraTag::QX, 2);
        let (t1, t2) = (SkewPoly::var(&r, 0), SkewPoly::var(&r, 1));
        let f = &(&t1 * &t2) + &t1;
        assert_eq!(f.leading_form().unwrap(), (&t1 * &t2).with_ring(f.leading_form().unwrap().ring()));
        let c = SkewPoly::constant(&r, DElem::int(AlgebraTag::QX, 4));
        assert_eq!(c.leading_form().unwrap().total_degree(), 0);
        assert_eq!(SkewPoly::zero(&r).leading_form(), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn monic_in_last_conventions() {
        let r = SkewRing::central(AlgebraTag::QX, 2);
        let (t1, t2) = (SkewPoly::var(&r, 0), SkewPoly::var(&r, 1));
        assert!((&(&t2 * &t2) + &(&t1 * &t2)).is_monic_in_last());
        assert!(!(&t2 * &t2).scale_left(&DElem::int(AlgebraTag::QX, 2)).is_monic_in_last());
        assert!(!t1.is_monic_in_last());
        assert!(SkewPoly::one(&r).is_monic_in_last());
    }

    #[test]
    fn decompose_roundtrip() {
        let r = SkewRing::new(AlgebraTag::QX, vec![Automorphism::shift(rat(2)), Automorphism::shift(rat(-1))]).unwrap();
        let (t1, t2) = (SkewPoly::var(&r, 0), SkewPoly::var(&r, 1));
        let x = SkewPoly::constant(&r, DElem::x());
        let f = &(&(&x * &t1) * &(&t2 * &t2)) + &(&t2 * &x);
        assert_eq!(SkewPoly::recompose_last(&r, &f.decompose_last()), f);
    }

    #[test]
    fn json_roundtrip_is_graded_lex_descending() {
        let r = SkewRing::central(AlgebraTag::QX, 2);
        let (t1, t2) = (SkewPoly::var(&r, 0), SkewPoly::var(&r, 1));
        let f = &(&t1 + &t2) + &(&t1 * &t2);
        let s = serde_json::to_string(&f).unwrap();
        assert!(s.find("[1,1]").unwrap() < s.find("[1,0]").unwrap());
        assert!(s.find("[1,0]").unwrap() < s.find("[0,1]").unwrap());
        let back: SkewPoly = serde_json::from_str(&s).unwrap();
        assert_eq!(back, f);
    }

    #[test]
    fn exponent_enumeration() {
        assert_eq!(ExpVec::of_degree(2, 2), vec![ExpVec(vec![2, 0]), ExpVec(vec![1, 1]), ExpVec(vec![0, 2])]);
        assert_eq!(ExpVec::up_to_degree(3, 2).len(), 10);
    }
}
