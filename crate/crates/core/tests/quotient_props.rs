use proptest::prelude::*;
use skewnorm::divalg::rat::rat;
use skewnorm::divalg::{AlgebraTag, AutoDesc, Automorphism, DElem};
use skewnorm::ext::ExtensionElement;
use skewnorm::quotient::{
    counting_bound, decide_quotient_normalizable, find_dependence, quotient_witness, QuotientDecision, QuotientElem,
};
use skewnorm::random::RandomGen;
use skewnorm::skewpoly::{SkewPoly, SkewRing};

fn tag_of(g: &mut RandomGen) -> AlgebraTag {
    if g.chance(0.5) {
        AlgebraTag::HQ
    } else {
        AlgebraTag::QX
    }
}

/// A polynomial in y with rational coefficients, so any two commute.
fn rational_poly_in(y: &QuotientElem, g: &mut RandomGen, deg: u32) -> QuotientElem {
    (0..=deg).fold(y.zero_like(), |acc, k| {
        let c = DElem::rational(y.tag(), g.small_rat());
        acc.add(&y.pow(k).scale_left(&c))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn normal_form_is_a_ring_image(seed in any::<u64>()) {
        let mut g = RandomGen::new(seed);
        let tag = tag_of(&mut g);
        let ring = g.ring(tag, 2);
        let (f, h) = (g.poly(&ring, 3, 4), g.poly(&ring, 3, 4));
        let (qf, qh) = (QuotientElem::from_skew(&f).unwrap(), QuotientElem::from_skew(&h).unwrap());
        prop_assert_eq!(QuotientElem::from_skew(&(&f * &h)).unwrap(), qf.mul(&qh));
        prop_assert_eq!(QuotientElem::from_skew(&(&f + &h)).unwrap(), qf.add(&qh));
        let c = g.quotient(&ring, 3, 2);
        prop_assert_eq!(qf.mul(&qh).mul(&c), qf.mul(&qh.mul(&c)));
        let text = serde_json::to_string(&c).unwrap();
        prop_assert_eq!(serde_json::from_str::<QuotientElem>(&text).unwrap(), c);
    }

    #[test]
    fn mixed_monomials_vanish(seed in any::<u64>()) {
        let mut g = RandomGen::new(seed);
        let tag = tag_of(&mut g);
        let ring = g.ring(tag, 2);
        let (i, j) = (g.int(1, 4) as u32, g.int(1, 4) as u32);
        let c = g.nonzero_delem(tag);
        prop_assert!(QuotientElem::monomial(&ring, i, j, c.clone()).unwrap().is_zero());
        let (z1, z2) = (QuotientElem::var(&ring, 0).unwrap(), QuotientElem::var(&ring, 1).unwrap());
        prop_assert!(z1.pow(i).mul(&z2.pow(j)).is_zero());
        prop_assert!(z2.pow(j).scale_left(&c).mul(&z1.pow(i)).is_zero());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn dependences_vanish_within_the_counting_bound(seed in any::<u64>()) {
        let mut g = RandomGen::new(seed);
        let tag = tag_of(&mut g);
        let ring = g.ring(tag, 2);
        let y = loop {
            let y = g.quotient(&ring, 2, 2);
            if y.degree() > 0 {
                break y;
            }
        };
        let (e1, e2) = (g.int(1, 2) as u32, g.int(0, 2) as u32);
        let x1 = rational_poly_in(&y, &mut g, e1);
        let x2 = rational_poly_in(&y, &mut g, e2);
        prop_assume!(x1.degree() <= 3 && x2.degree() <= 3);
        let w = find_dependence(&x1, &x2).unwrap();
        let d = x1.degree().max(x2.degree()).max(0) as u64;
        prop_assert!(u64::from(w.n) <= 4 * d + 1);
        prop_assert!(w.combo.values().any(|c| !c.is_zero()));
        let mut acc = x1.zero_like();
        for (&(i, j), c) in &w.combo {
            prop_assert!(i + j <= w.n);
            acc = acc.add(&x1.pow(i).mul(&x2.pow(j)).scale_left(c));
        }
        prop_assert!(acc.is_zero());
    }

    #[test]
    fn quotient_witness_twists_and_absorbs(seed in any::<u64>()) {
        let mut g = RandomGen::new(seed);
        let tag = tag_of(&mut g);
        let base = g.auto(tag);
        let (k1, k2) = (g.int(1, 3) as u32, g.int(1, 3) as u32);
        let (s1, s2, c) = match tag {
            AlgebraTag::HQ => {
                let e = g.int(-1, 2);
                let c = base.pow(k1 as i64 - e * k2 as i64).inner_unit().unwrap();
                (base.clone(), base.pow(e), c)
            }
            AlgebraTag::QX => {
                let a = rat(g.int(1, 3));
                let b = &a * rat(k1 as i64) / rat(k2 as i64);
                (Automorphism::shift(a), Automorphism::shift(b), DElem::rational(tag, g.nonzero_rat()))
            }
        };
        let ring = SkewRing::new(tag, vec![s1.clone(), s2]).unwrap();
        let w = quotient_witness(&ring, k1, k2, &c).unwrap();
        let (z1, z2) = (QuotientElem::var(&ring, 0).unwrap(), QuotientElem::var(&ring, 1).unwrap());
        prop_assert_eq!(&w.u, &z1.pow(k1).add(&z2.pow(k2).scale_left(&c)));
        let twist = s1.pow(k1 as i64);
        let mut probes = DElem::generators(tag);
        probes.push(g.delem(tag));
        for b in probes {
            let lhs = w.u.mul(&QuotientElem::constant(&ring, b.clone()).unwrap());
            prop_assert_eq!(lhs, QuotientElem::constant(&ring, twist.apply(&b)).unwrap().mul(&w.u));
        }
        prop_assert_eq!(w.u.mul(&z1), z1.pow(k1 + 1));
        prop_assert_eq!(w.u.mul(&z2), z2.pow(k2 + 1).scale_left(&c));
    }

    #[test]
    fn shift_pairs_split_by_sign(seed in any::<u64>()) {
        let mut g = RandomGen::new(seed);
        let (a, b) = (rat(g.int(-3, 3)), rat(g.int(-3, 3)));
        prop_assume!(a != rat(0) && b != rat(0));
        let bound = 6;
        let got = decide_quotient_normalizable(&AutoDesc::shift(a.clone()), &AutoDesc::shift(b.clone()), bound, AlgebraTag::QX).unwrap();
        // k₁a − k₂b = 0 is the only way a shift is inner on ℚ(x).
        let brute = (2..=2 * bound).flat_map(|s| (1..s).map(move |k1| (k1, s - k1)))
            .filter(|&(k1, k2)| k1 <= bound && k2 <= bound)
            .find(|&(k1, k2)| &a * rat(k1 as i64) == &b * rat(k2 as i64));
        match (got, brute) {
            (QuotientDecision::Witness { k1, k2, .. }, Some(p)) => prop_assert_eq!((k1, k2), p),
            (QuotientDecision::NoWitnessUpTo { bound: got_bound, exact_negative }, None) => {
                prop_assert_eq!(got_bound, bound);
                prop_assert_eq!(exact_negative, (a > rat(0)) != (b > rat(0)));
            }
            (got, brute) => prop_assert!(false, "decision {:?} vs brute force {:?}", got, brute),
        }
    }
}

#[test]
fn counting_bound_is_least() {
    for d in 0..=6u64 {
        let n = counting_bound(d);
        assert!((n + 2) * (n + 1) / 2 > 2 * d * n + 1);
        assert!(n == 1 || (n + 1) * n / 2 <= 2 * d * (n - 1) + 1);
        assert!(n <= 4 * d + 1);
    }
}

#[test]
fn noncommuting_inputs_are_rejected() {
    let sigma = Automorphism::shift(rat(1));
    let ring = SkewRing::new(AlgebraTag::QX, vec![sigma.clone(), sigma]).unwrap();
    let z1 = QuotientElem::var(&ring, 0).unwrap();
    let x = QuotientElem::constant(&ring, DElem::x()).unwrap();
    assert_eq!(find_dependence(&z1, &x).unwrap_err().code(), "CommutationRequired");
    let t = SkewPoly::var(&SkewRing::central(AlgebraTag::QX, 3), 0);
    assert_eq!(QuotientElem::from_skew(&t).unwrap_err().code(), "DimensionMismatch");
}
