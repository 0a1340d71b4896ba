//! The monomial quotient D[t₁, t₂; σ₁, σ₂]/(t₁t₂).
//!
//! Every element has the normal form c₀ + Σ aᵢ·z₁ⁱ + Σ bⱼ·z₂ʲ, since the
//! ideal contains every mixed monomial.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::divalg::linalg::Insert;
use crate::divalg::{AlgebraTag, AutoDesc, Automorphism, DElem, LeftEchelon, SparseRow};
use crate::error::{Error, Result};
use crate::ext::{check_automorphic, BasisKey, ExtensionElement};
use crate::skewpoly::{RingDesc, SkewPoly, SkewRing};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientElem {
    ring: Arc<SkewRing>,
    c0: DElem,
    z1: BTreeMap<u32, DElem>,
    z2: BTreeMap<u32, DElem>,
}

fn bump(map: &mut BTreeMap<u32, DElem>, k: u32, c: &DElem) {
    if c.is_zero() {
        return;
    }
    let s = match map.get(&k) {
        Some(old) => old + c,
        None => c.clone(),
    };
    if s.is_zero() {
        map.remove(&k);
    } else {
        map.insert(k, s);
    }
}

impl QuotientElem {
    pub fn zero(ring: &Arc<SkewRing>) -> Result<Self> {
        if ring.n() != 2 {
            return Err(Error::DimensionMismatch(format!("the quotient needs 2 variables, got {}", ring.n())));
        }
        Ok(QuotientElem { ring: ring.clone(), c0: DElem::zero(ring.tag()), z1: BTreeMap::new(), z2: BTreeMap::new() })
    }

    pub fn constant(ring: &Arc<SkewRing>, c: DElem) -> Result<Self> {
        c.check_tag(ring.tag())?;
        let mut out = QuotientElem::zero(ring)?;
        out.c0 = c;
        Ok(out)
    }

    pub fn one(ring: &Arc<SkewRing>) -> Result<Self> {
        QuotientElem::constant(ring, DElem::one(ring.tag()))
    }

    /// c·z₁^i·z₂^j; zero when both exponents are positive.
    pub fn monomial(ring: &Arc<SkewRing>, i: u32, j: u32, c: DElem) -> Result<Self> {
        c.check_tag(ring.tag())?;
        let mut out = QuotientElem::zero(ring)?;
        out.add_term(i, j, &c);
        Ok(out)
    }

    /// z₁ (i = 0) or z₂ (i = 1).
    pub fn var(ring: &Arc<SkewRing>, i: usize) -> Result<Self> {
        let one = DElem::one(ring.tag());
        match i {
            0 => QuotientElem::monomial(ring, 1, 0, one),
            1 => QuotientElem::monomial(ring, 0, 1, one),
            _ => Err(Error::DimensionMismatch(format!("variable index {i} out of range"))),
        }
    }

    /// The image of a polynomial of D[t₁, t₂; σ₁, σ₂].
    pub fn from_skew(f: &SkewPoly) -> Result<Self> {
        let mut out = QuotientElem::zero(f.ring())?;
        for (e, c) in f.terms() {
            out.add_term(e.0[0], e.0[1], c);
        }
        Ok(out)
    }

    pub fn from_parts(
        ring: &Arc<SkewRing>,
        c0: DElem,
        z1: impl IntoIterator<Item = (u32, DElem)>,
        z2: impl IntoIterator<Item = (u32, DElem)>,
    ) -> Result<Self> {
        let mut out = QuotientElem::constant(ring, c0)?;
        for (i, c) in z1 {
            c.check_tag(ring.tag())?;
            out.add_term(i, 0, &c);
        }
        for (j, c) in z2 {
            c.check_tag(ring.tag())?;
            out.add_term(0, j, &c);
        }
        Ok(out)
    }

    fn add_term(&mut self, i: u32, j: u32, c: &DElem) {
        match (i, j) {
            (0, 0) => self.c0 = &self.c0 + c,
            (i, 0) => bump(&mut self.z1, i, c),
            (0, j) => bump(&mut self.z2, j, c),
            _ => {}
        }
    }

    /// (i, j, coefficient) with i·j = 0.
    pub fn terms(&self) -> Vec<(u32, u32, DElem)> {
        let mut out = Vec::new();
        if !self.c0.is_zero() {
            out.push((0, 0, self.c0.clone()));
        }
        out.extend(self.z1.iter().map(|(i, c)| (*i, 0, c.clone())));
        out.extend(self.z2.iter().map(|(j, c)| (0, *j, c.clone())));
        out
    }

    pub fn ring(&self) -> &Arc<SkewRing> {
        &self.ring
    }

    pub fn c0(&self) -> &DElem {
        &self.c0
    }

    pub fn z1_part(&self) -> &BTreeMap<u32, DElem> {
        &self.z1
    }

    pub fn z2_part(&self) -> &BTreeMap<u32, DElem> {
        &self.z2
    }

    pub fn is_zero(&self) -> bool {
        self.c0.is_zero() && self.z1.is_empty() && self.z2.is_empty()
    }

    /// Largest power present; −1 for zero.
    pub fn degree(&self) -> i64 {
        let top = self.z1.keys().chain(self.z2.keys()).max().map(|&k| k as i64);
        match top {
            Some(k) => k,
            None if self.c0.is_zero() => -1,
            None => 0,
        }
    }

    fn same_ring(&self, o: &QuotientElem) -> bool {
        Arc::ptr_eq(&self.ring, &o.ring) || self.ring == o.ring
    }

    pub fn try_add(&self, o: &QuotientElem) -> Result<QuotientElem> {
        if !self.same_ring(o) {
            return Err(Error::RingMismatch);
        }
        let mut out = self.clone();
        for (i, j, c) in o.terms() {
            out.add_term(i, j, &c);
        }
        Ok(out)
    }

    pub fn try_mul(&self, o: &QuotientElem) -> Result<QuotientElem> {
        if !self.same_ring(o) {
            return Err(Error::RingMismatch);
        }
        let [s1, s2] = [&self.ring.autos()[0], &self.ring.autos()[1]];
        let mut out = QuotientElem::zero(&self.ring)?;
        let rhs = o.terms();
        for (i, j, a) in self.terms() {
            let tw = s1.pow(i as i64).compose(&s2.pow(j as i64));
            for (k, l, b) in &rhs {
                if (i + k) > 0 && (j + l) > 0 {
                    continue;
                }
                out.add_term(i + k, j + l, &(&a * &tw.apply(b)));
            }
        }
        Ok(out)
    }

    pub fn neg(&self) -> QuotientElem {
        let mut out = QuotientElem::zero(&self.ring).expect("ring has two variables");
        for (i, j, c) in self.terms() {
            out.add_term(i, j, &-&c);
        }
        out
    }

    pub fn scale_left(&self, c: &DElem) -> QuotientElem {
        let mut out = QuotientElem::zero(&self.ring).expect("ring has two variables");
        for (i, j, a) in self.terms() {
            out.add_term(i, j, &(c * &a));
        }
        out
    }

    /// Left coordinates against 1, z₁, z₂, z₁², z₂², … (columns 0, 1, 2, 3, 4, …).
    pub fn coordinates(&self) -> SparseRow {
        let mut row = SparseRow::new();
        if !self.c0.is_zero() {
            row.insert(0, self.c0.clone());
        }
        for (i, c) in &self.z1 {
            row.insert(2 * *i as usize - 1, c.clone());
        }
        for (j, c) in &self.z2 {
            row.insert(2 * *j as usize, c.clone());
        }
        row
    }
}

pub fn q_mul(f: &QuotientElem, g: &QuotientElem) -> Result<QuotientElem> {
    f.try_mul(g)
}

pub fn q_add(f: &QuotientElem, g: &QuotientElem) -> Result<QuotientElem> {
    f.try_add(g)
}

impl fmt::Display for QuotientElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut parts = Vec::new();
        let mut push = |c: &DElem, mono: String| {
            let cs = c.to_string();
            let wrap = cs.contains(['+', '/']) || cs[1..].contains('-');
            parts.push(match (mono.is_empty(), c.is_one()) {
                (true, _) => cs,
                (false, true) => mono,
                (false, false) if wrap => format!("({cs})*{mono}"),
                (false, false) => format!("{cs}*{mono}"),
            });
        };
        let mono = |v: &str, k: u32| if k == 1 { v.to_string() } else { format!("{v}^{k}") };
        for (i, c) in self.z1.iter().rev() {
            push(c, mono("z1", *i));
        }
        for (j, c) in self.z2.iter().rev() {
            push(c, mono("z2", *j));
        }
        if !self.c0.is_zero() {
            push(&self.c0, String::new());
        }
        write!(f, "{}", parts.join(" + "))
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct QuotientRepr {
    ring: RingDesc,
    c0: DElem,
    z1: BTreeMap<String, DElem>,
    z2: BTreeMap<String, DElem>,
}

impl Serialize for QuotientElem {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let keyed = |m: &BTreeMap<u32, DElem>| m.iter().map(|(k, c)| (k.to_string(), c.clone())).collect();
        QuotientRepr { ring: self.ring.desc(), c0: self.c0.clone(), z1: keyed(&self.z1), z2: keyed(&self.z2) }
            .serialize(s)
    }
}

impl<'de> Deserialize<'de> for QuotientElem {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let repr = QuotientRepr::deserialize(d)?;
        let ring = SkewRing::from_desc(&repr.ring).map_err(D::Error::custom)?;
        let parse = |m: BTreeMap<String, DElem>| {
            m.into_iter()
                .map(|(k, c)| match k.parse::<u32>() {
                    Ok(k) if k > 0 => Ok((k, c)),
                    _ => Err(D::Error::custom(format!("power key {k:?} must be a positive integer"))),
                })
                .collect::<std::result::Result<Vec<_>, _>>()
        };
        let (z1, z2) = (parse(repr.z1)?, parse(repr.z2)?);
        QuotientElem::from_parts(&ring, repr.c0, z1, z2).map_err(D::Error::custom)
    }
}

impl ExtensionElement for QuotientElem {
    fn tag(&self) -> AlgebraTag {
        self.ring.tag()
    }
    fn same_ring(&self, other: &Self) -> bool {
        QuotientElem::same_ring(self, other)
    }
    fn zero_like(&self) -> Self {
        QuotientElem::zero(&self.ring).expect("ring has two variables")
    }
    fn constant_like(&self, c: &DElem) -> Self {
        QuotientElem::constant(&self.ring, c.clone()).expect("coefficient from the same algebra")
    }
    fn is_zero(&self) -> bool {
        QuotientElem::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self.try_add(other).expect("quotient operands live in different rings")
    }
    fn neg(&self) -> Self {
        QuotientElem::neg(self)
    }
    fn mul(&self, other: &Self) -> Self {
        self.try_mul(other).expect("quotient operands live in different rings")
    }
    fn scale_left(&self, c: &DElem) -> Self {
        QuotientElem::scale_left(self, c)
    }
    fn left_terms(&self) -> Vec<(BasisKey, DElem)> {
        self.terms().into_iter().map(|(i, j, c)| (vec![i as i64, j as i64], c)).collect()
    }
    fn basis_twist(&self, key: &BasisKey) -> Automorphism {
        let a = self.ring.autos();
        a[0].pow(key[0]).compose(&a[1].pow(key[1]))
    }
}

/// Σ c_{ij}·x₁ⁱ·x₂ʲ = 0 with some c nonzero.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DependenceWitness {
    #[serde(serialize_with = "combo_ser")]
    pub combo: BTreeMap<(u32, u32), DElem>,
    pub n: u32,
}

fn combo_ser<S: Serializer>(m: &BTreeMap<(u32, u32), DElem>, s: S) -> std::result::Result<S::Ok, S::Error> {
    #[derive(Serialize)]
    struct Entry<'a> {
        exp: [u32; 2],
        coef: &'a DElem,
    }
    s.collect_seq(m.iter().map(|(&(i, j), c)| Entry { exp: [i, j], coef: c }))
}

impl DependenceWitness {
    pub fn evaluate(&self, x1: &QuotientElem, x2: &QuotientElem) -> QuotientElem {
        let mut acc = x1.zero_like();
        for (&(i, j), c) in &self.combo {
            acc = acc.add(&x1.pow(i).mul(&x2.pow(j)).scale_left(c));
        }
        acc
    }
}

/// Least N with (N+2)(N+1)/2 > 2dN + 1.
pub fn counting_bound(d: u64) -> u64 {
    (1..).find(|&n| (n + 2) * (n + 1) / 2 > 2 * d * n + 1).expect("quadratic beats linear")
}

/// Monomials x₁^{k₁}x₂^{k₂} with k₁ + k₂ ≤ N by degree, k₁ descending.
fn exponent_pairs(n: u32) -> Vec<(u32, u32)> {
    (0..=n).flat_map(|deg| (0..=deg).rev().map(move |k1| (k1, deg - k1))).collect()
}

/// Lazily computed x₁^{k₁}·x₂^{k₂}.
struct Monomials<'a> {
    p1: Vec<QuotientElem>,
    p2: Vec<QuotientElem>,
    pairs: &'a [(u32, u32)],
    cache: Vec<Option<QuotientElem>>,
}

fn power(p: &mut Vec<QuotientElem>, k: usize) -> &QuotientElem {
    while p.len() <= k {
        let next = p[p.len() - 1].mul(&p[1]);
        p.push(next);
    }
    &p[k]
}

impl<'a> Monomials<'a> {
    fn new(x1: &QuotientElem, x2: &QuotientElem, pairs: &'a [(u32, u32)]) -> Self {
        Monomials {
            p1: vec![x1.one_like(), x1.clone()],
            p2: vec![x2.one_like(), x2.clone()],
            pairs,
            cache: vec![None; pairs.len()],
        }
    }

    fn get(&mut self, idx: usize) -> &QuotientElem {
        if self.cache[idx].is_none() {
            let (k1, k2) = self.pairs[idx];
            let a = power(&mut self.p1, k1 as usize).clone();
            let v = a.mul(power(&mut self.p2, k2 as usize));
            self.cache[idx] = Some(v);
        }
        self.cache[idx].as_ref().expect("just filled")
    }

    fn evaluate(&mut self, combo: &BTreeMap<usize, DElem>) -> QuotientElem {
        let mut acc = self.get(0).zero_like();
        for (&i, c) in combo {
            acc = acc.add(&self.get(i).scale_left(c));
        }
        acc
    }
}

/// A vanishing combination of a zero or repeated monomial, if any.
fn trivial_dependence(mons: &mut Monomials<'_>, idx: usize, seen: &[usize]) -> Option<BTreeMap<usize, DElem>> {
    let tag = mons.get(idx).tag();
    let one = DElem::one(tag);
    if mons.get(idx).is_zero() {
        return Some(BTreeMap::from([(idx, one)]));
    }
    let v = mons.get(idx).clone();
    let prev = seen.iter().copied().find(|&j| *mons.get(j) == v)?;
    Some(BTreeMap::from([(prev, one.clone()), (idx, -&one)]))
}

/// A left dependence between the monomials in two commuting elements.
///
/// The (N+2)(N+1)/2 monomials of degree ≤ N lie in the span of
/// 1, z₁, …, z₁^{dN}, z₂, …, z₂^{dN}, so some left combination vanishes.
pub fn find_dependence(x1: &QuotientElem, x2: &QuotientElem) -> Result<DependenceWitness> {
    if !x1.same_ring(x2) {
        return Err(Error::RingMismatch);
    }
    if x1.mul(x2) != x2.mul(x1) {
        return Err(Error::CommutationRequired);
    }
    let tag = x1.tag();
    let d = x1.degree().max(x2.degree()).max(0) as u64;
    let n = u32::try_from(counting_bound(d)).map_err(|_| Error::CheckFailed("degree bound overflows".into()))?;
    let pairs = exponent_pairs(n);
    let mut mons = Monomials::new(x1, x2, &pairs);
    let witness = |mons: &mut Monomials<'_>, combo: BTreeMap<usize, DElem>| {
        if !mons.evaluate(&combo).is_zero() {
            return Err(Error::CheckFailed("dependence does not vanish".into()));
        }
        Ok(DependenceWitness { combo: combo.into_iter().map(|(i, c)| (pairs[i], c)).collect(), n })
    };
    let mut ech = LeftEchelon::new(tag);
    let mut order = Vec::new();
    for idx in 0..pairs.len() {
        if let Some(combo) = trivial_dependence(&mut mons, idx, &order) {
            return witness(&mut mons, combo);
        }
        order.push(idx);
        if let Insert::Dependent(row) = ech.insert(mons.get(idx).coordinates())? {
            let combo = row.into_iter().map(|(i, c)| (order[i], c)).collect();
            return witness(&mut mons, combo);
        }
    }
    Err(Error::CheckFailed(format!("{} monomials were independent despite the counting bound", pairs.len())))
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct QuotientWitness {
    pub u: QuotientElem,
    pub twist: Automorphism,
    /// max z₁-power of u^j for j = 1..=8.
    pub leading_z1: Vec<u32>,
}

pub const INDEPENDENCE_DEPTH: u32 = 8;

/// u = z₁^{k₁} + c·z₂^{k₂} for σ₁^{k₁}∘σ₂^{−k₂} = 𝐢𝐧_c.
///
/// Checks that u twists by σ₁^{k₁}, that z₁^{k₁+1} = u·z₁ and
/// c·z₂^{k₂+1} = u·z₂, and that the leading z₁-powers of u^j grow.
pub fn quotient_witness(ring: &Arc<SkewRing>, k1: u32, k2: u32, c: &DElem) -> Result<QuotientWitness> {
    c.check_tag(ring.tag())?;
    if k1 == 0 || k2 == 0 {
        return Err(Error::WitnessHypothesisFails("k1 and k2 must be positive".into()));
    }
    if c.is_zero() {
        return Err(Error::WitnessHypothesisFails("c must be nonzero".into()));
    }
    let a = ring.autos();
    let s1k = a[0].pow(k1 as i64);
    let comp = s1k.compose(&a[1].pow(-(k2 as i64)));
    if !comp.agrees_on_generators(&Automorphism::inner(c)) {
        return Err(Error::WitnessHypothesisFails(format!("σ1^{k1}∘σ2^-{k2} = {comp} differs from in_{c}")));
    }
    let u = QuotientElem::from_parts(ring, DElem::zero(ring.tag()), [(k1, DElem::one(ring.tag()))], [(k2, c.clone())])?;
    let twist = check_automorphic(&u)?;
    if !twist.agrees_on_generators(&s1k) {
        return Err(Error::CheckFailed(format!("u twists by {twist}, expected {s1k}")));
    }
    let (z1, z2) = (QuotientElem::var(ring, 0)?, QuotientElem::var(ring, 1)?);
    if u.mul(&z1) != z1.pow(k1 + 1) {
        return Err(Error::CheckFailed("u*z1 differs from z1^(k1+1)".into()));
    }
    if u.mul(&z2) != z2.pow(k2 + 1).scale_left(c) {
        return Err(Error::CheckFailed("u*z2 differs from c*z2^(k2+1)".into()));
    }
    let mut leading = Vec::new();
    let mut p = u.one_like();
    for j in 1..=INDEPENDENCE_DEPTH {
        p = p.mul(&u);
        let top = p.z1.keys().next_back().copied().unwrap_or(0);
        if top != k1 * j {
            return Err(Error::CheckFailed(format!("u^{j} has leading z1-power {top}")));
        }
        leading.push(top);
    }
    Ok(QuotientWitness { u, twist, leading_z1: leading })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum QuotientDecision {
    Witness {
        k1: u32,
        k2: u32,
        c: DElem,
    },
    /// No (k₁, k₂) ≤ bound works. `exact_negative` is set when the pair is
    /// two shifts of ℚ(x) whose signs rule out every pair.
    NoWitnessUpTo {
        bound: u32,
        exact_negative: bool,
    },
}

/// Searches k₁ + k₂ in increasing order for σ₁^{k₁}∘σ₂^{−k₂} inner.
pub fn decide_quotient_normalizable(
    s1: &AutoDesc,
    s2: &AutoDesc,
    bound: u32,
    tag: AlgebraTag,
) -> Result<QuotientDecision> {
    let (a, b) = (s1.resolve(tag)?, s2.resolve(tag)?);
    if !a.compose(&b).agrees_on_generators(&b.compose(&a)) {
        return Err(Error::CommutationRequired);
    }
    for total in 2..=2 * bound {
        for k1 in (1..total).filter(|&k| k <= bound && total - k <= bound) {
            let k2 = total - k1;
            let comp = a.pow(k1 as i64).compose(&b.pow(-(k2 as i64)));
            if let Some(c) = comp.inner_unit() {
                return Ok(QuotientDecision::Witness { k1, k2, c });
            }
        }
    }
    let exact_negative = match (a.as_mobius().and_then(|m| m.as_shift()), b.as_mobius().and_then(|m| m.as_shift())) {
        (Some(p), Some(q)) => {
            use num_traits::Signed;
            p.signum() != q.signum()
        }
        _ => false,
    };
    Ok(QuotientDecision::NoWitnessUpTo { bound, exact_negative })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::divalg::rat::rat;

    fn central() -> Arc<SkewRing> {
        SkewRing::central(AlgebraTag::QX, 2)
    }

    #[test]
    fn arithmetic_examples() {
        let r = central();
        let (z1, z2) = (QuotientElem::var(&r, 0).unwrap(), QuotientElem::var(&r, 1).unwrap());
        assert!(z1.mul(&z2).is_zero());
        let s = z1.add(&z2);
        assert_eq!(s.mul(&s), z1.pow(2).add(&z2.pow(2)));

        let sr =
            SkewRing::new(AlgebraTag::QX, vec![Automorphism::shift(rat(1)), Automorphism::identity(AlgebraTag::QX)])
                .unwrap();
        let z1 = QuotientElem::var(&sr, 0).unwrap();
        let x = QuotientElem::constant(&sr, DElem::x()).unwrap();
        assert_eq!(z1.mul(&x), QuotientElem::monomial(&sr, 1, 0, DElem::qx_poly(&[1, 1])).unwrap());
    }

    #[test]
    fn dependence_examples() {
        let r = central();
        let (z1, z2) = (QuotientElem::var(&r, 0).unwrap(), QuotientElem::var(&r, 1).unwrap());
        let one = DElem::one(AlgebraTag::QX);
        let w = find_dependence(&z1, &z1.pow(2)).unwrap();
        assert_eq!(w.combo, BTreeMap::from([((0, 1), one.clone()), ((2, 0), -&one)]));
        let (x1, x2) = (z1.add(&z2), z1.pow(2).add(&z2.pow(2)));
        let w = find_dependence(&x1, &x2).unwrap();
        assert_eq!(w.combo, BTreeMap::from([((0, 1), one.clone()), ((2, 0), -&one)]));
        let w = find_dependence(&z1, &z2).unwrap();
        assert_eq!(w.combo, BTreeMap::from([((1, 1), one)]));
    }

    #[test]
    fn counting_bound_values() {
        for d in 0..40u64 {
            let n = counting_bound(d);
            assert!((n + 2) * (n + 1) / 2 > 2 * d * n + 1);
            assert!(n <= 4 * d + 1);
        }
    }

    #[test]
    fn noncommuting_rejected() {
        let sr =
            SkewRing::new(AlgebraTag::QX, vec![Automorphism::shift(rat(1)), Automorphism::identity(AlgebraTag::QX)])
                .unwrap();
        let z1 = QuotientElem::var(&sr, 0).unwrap();
        let x = QuotientElem::constant(&sr, DElem::x()).unwrap();
        assert_eq!(find_dependence(&z1, &x), Err(Error::CommutationRequired));
    }

    #[test]
    fn witness_examples() {
        let r = central();
        let w = quotient_witness(&r, 1, 1, &DElem::one(AlgebraTag::QX)).unwrap();
        assert_eq!(w.u.to_string(), "z1 + z2");

        let sr = SkewRing::new(AlgebraTag::QX, vec![Automorphism::shift(rat(2)), Automorphism::shift(rat(1))]).unwrap();
        let w = quotient_witness(&sr, 1, 2, &DElem::one(AlgebraTag::QX)).unwrap();
        assert_eq!(w.twist, Automorphism::shift(rat(2)));

        let i = DElem::quat(0, 1, 0, 0);
        let hr = SkewRing::new(AlgebraTag::HQ, vec![Automorphism::inner(&i), Automorphism::identity(AlgebraTag::HQ)])
            .unwrap();
        let w = quotient_witness(&hr, 2, 1, &DElem::quat(-1, 0, 0, 0)).unwrap();
        assert!(w.twist.is_identity());
        assert_eq!(w.leading_z1, (1..=8).map(|j| 2 * j).collect::<Vec<_>>());
        assert!(matches!(
            quotient_witness(&sr, 1, 1, &DElem::one(AlgebraTag::QX)),
            Err(Error::WitnessHypothesisFails(_))
        ));
    }

    #[test]
    fn decision_examples() {
        let s = |c| AutoDesc::shift(rat(c));
        assert_eq!(
            decide_quotient_normalizable(&s(1), &s(-1), 20, AlgebraTag::QX).unwrap(),
            QuotientDecision::NoWitnessUpTo { bound: 20, exact_negative: true }
        );
        assert_eq!(
            decide_quotient_normalizable(&s(2), &s(3), 5, AlgebraTag::QX).unwrap(),
            QuotientDecision::Witness { k1: 3, k2: 2, c: DElem::one(AlgebraTag::QX) }
        );
        let i = AutoDesc::inner(DElem::quat(0, 1, 0, 0));
        assert_eq!(
            decide_quotient_normalizable(&i, &i, 3, AlgebraTag::HQ).unwrap(),
            QuotientDecision::Witness { k1: 1, k2: 1, c: DElem::one(AlgebraTag::HQ) }
        );
    }

    #[test]
    fn json_shape() {
        let r = central();
        let e = QuotientElem::from_parts(&r, DElem::int(AlgebraTag::QX, 3), [(2, DElem::x())], []).unwrap();
        let v = serde_json::to_value(&e).unwrap();
        assert!(v["z1"].get("2").is_some());
        let back: QuotientElem = serde_json::from_value(v).unwrap();
        assert_eq!(back, e);
    }
}
