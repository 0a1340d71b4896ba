//! Seeded generators of small random elements, shared by the property
//! verbs and the test suites.

use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::divalg::rat::{rat, ratio};
use crate::divalg::{AlgebraTag, AutoDesc, Automorphism, DElem, QPoly, Quat, Rat, RatFun};
use crate::laurent::{LaurentPoly, LaurentRing};
use crate::quotient::QuotientElem;
use crate::skewpoly::{ExpVec, SkewPoly, SkewRing};

pub struct RandomGen {
    rng: ChaCha8Rng,
}

impl RandomGen {
    pub fn new(seed: u64) -> Self {
        RandomGen { rng: ChaCha8Rng::seed_from_u64(seed) }
    }

    pub fn rng(&mut self) -> &mut ChaCha8Rng {
        &mut self.rng
    }

    pub fn int(&mut self, lo: i64, hi: i64) -> i64 {
        self.rng.gen_range(lo..=hi)
    }

    pub fn chance(&mut self, p: f64) -> bool {
        self.rng.gen_bool(p)
    }

    /// Numerator in [−4, 4], denominator in [1, 3].
    pub fn small_rat(&mut self) -> Rat {
        let n = self.int(-4, 4);
        let d = self.int(1, 3);
        ratio(n, d)
    }

    pub fn nonzero_rat(&mut self) -> Rat {
        loop {
            let r = self.small_rat();
            if r != rat(0) {
                return r;
            }
        }
    }

    pub fn quat(&mut self) -> Quat {
        Quat::new(self.small_rat(), self.small_rat(), self.small_rat(), self.small_rat())
    }

    /// A polynomial of degree ≤ 2, sometimes over a linear denominator.
    pub fn ratfun(&mut self) -> RatFun {
        let deg = self.int(0, 2) as usize;
        let num = QPoly::new((0..=deg).map(|_| self.small_rat()).collect());
        if self.chance(0.2) {
            let den = QPoly::new(vec![self.small_rat(), rat(1)]);
            RatFun::new(num, den).expect("monic denominator is nonzero")
        } else {
            RatFun::poly(num)
        }
    }

    pub fn delem(&mut self, tag: AlgebraTag) -> DElem {
        match tag {
            AlgebraTag::HQ => DElem::Quat(self.quat()),
            AlgebraTag::QX => DElem::RatFun(self.ratfun()),
        }
    }

    pub fn nonzero_delem(&mut self, tag: AlgebraTag) -> DElem {
        loop {
            let d = self.delem(tag);
            if !d.is_zero() {
                return d;
            }
        }
    }

    pub fn rational(&mut self, tag: AlgebraTag) -> DElem {
        DElem::rational(tag, self.small_rat())
    }

    /// Inner by a small non-real quaternion, or a shift / reflection of ℚ(x).
    pub fn auto(&mut self, tag: AlgebraTag) -> Automorphism {
        match tag {
            AlgebraTag::HQ => loop {
                let q = Quat::from_ints(self.int(-2, 2), self.int(-2, 2), self.int(-2, 2), self.int(-2, 2));
                if !q.is_real() {
                    return Automorphism::inner(&DElem::Quat(q));
                }
            },
            AlgebraTag::QX => {
                if self.chance(0.8) {
                    Automorphism::shift(rat(self.int(1, 3) * if self.chance(0.5) { 1 } else { -1 }))
                } else {
                    let c = self.int(-2, 2);
                    AutoDesc::gen_image(RatFun::poly(QPoly::from_ints(&[c, -1])))
                        .resolve(AlgebraTag::QX)
                        .expect("x ↦ c − x is an automorphism")
                }
            }
        }
    }

    /// Powers σ^{kᵢ} of one random σ, so they commute.
    pub fn commuting_autos(&mut self, tag: AlgebraTag, n: usize) -> Vec<Automorphism> {
        let base = self.auto(tag);
        (0..n).map(|_| base.pow(self.int(-1, 2))).collect()
    }

    pub fn ring(&mut self, tag: AlgebraTag, n: usize) -> Arc<SkewRing> {
        let autos = self.commuting_autos(tag, n);
        SkewRing::new(tag, autos).expect("powers of one automorphism commute")
    }

    /// Up to `max_terms` terms of total degree ≤ `max_deg`.
    pub fn poly(&mut self, ring: &Arc<SkewRing>, max_deg: u32, max_terms: usize) -> SkewPoly {
        let exps = ExpVec::up_to_degree(ring.n(), max_deg);
        let count = self.int(0, max_terms as i64) as usize;
        let terms: Vec<(ExpVec, DElem)> = (0..count)
            .map(|_| {
                let e = exps[self.rng.gen_range(0..exps.len())].clone();
                (e, self.nonzero_delem(ring.tag()))
            })
            .collect();
        SkewPoly::from_terms(ring, terms).expect("coefficients match the ring")
    }

    pub fn nonzero_poly(&mut self, ring: &Arc<SkewRing>, max_deg: u32, max_terms: usize) -> SkewPoly {
        loop {
            let p = self.poly(ring, max_deg, max_terms.max(1));
            if !p.is_zero() {
                return p;
            }
        }
    }

    /// Rational coefficients only.
    pub fn rational_poly(&mut self, ring: &Arc<SkewRing>, max_deg: u32, max_terms: usize) -> SkewPoly {
        let exps = ExpVec::up_to_degree(ring.n(), max_deg);
        let count = self.int(1, max_terms.max(1) as i64) as usize;
        let terms: Vec<(ExpVec, DElem)> = (0..count)
            .map(|_| {
                let e = exps[self.rng.gen_range(0..exps.len())].clone();
                (e, self.rational(ring.tag()))
            })
            .collect();
        SkewPoly::from_terms(ring, terms).expect("coefficients match the ring")
    }

    pub fn laurent(&mut self, ring: &Arc<LaurentRing>, span: i64, max_terms: usize) -> LaurentPoly {
        let count = self.int(1, max_terms as i64) as usize;
        let terms: Vec<(i64, DElem)> =
            (0..count).map(|_| (self.int(-span, span), self.nonzero_delem(ring.tag()))).collect();
        LaurentPoly::from_terms(ring, terms).expect("coefficients match the ring")
    }

    pub fn quotient(&mut self, ring: &Arc<SkewRing>, max_deg: u32, max_terms: usize) -> QuotientElem {
        let tag = ring.tag();
        let c0 = if self.chance(0.5) { self.delem(tag) } else { DElem::zero(tag) };
        let n1 = self.int(0, max_terms as i64);
        let n2 = self.int(0, max_terms as i64);
        let z1: Vec<(u32, DElem)> = (0..n1).map(|_| (self.int(1, max_deg as i64) as u32, self.delem(tag))).collect();
        let z2: Vec<(u32, DElem)> = (0..n2).map(|_| (self.int(1, max_deg as i64) as u32, self.delem(tag))).collect();
        QuotientElem::from_parts(ring, c0, z1, z2).expect("coefficients match the ring")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn same_seed_same_stream() {
        let mut a = RandomGen::new(7);
        let mut b = RandomGen::new(7);
        let r = SkewRing::central(AlgebraTag::HQ, 2);
        for _ in 0..20 {
            assert_eq!(a.poly(&r, 3, 4), b.poly(&r, 3, 4));
        }
    }

    #[test]
    fn rings_are_valid() {
        let mut g = RandomGen::new(1);
        for tag in [AlgebraTag::HQ, AlgebraTag::QX] {
            for n in 0..4 {
                assert_eq!(g.ring(tag, n).n(), n);
            }
        }
    }
}
