use proptest::prelude::*;
use skewnorm::divalg::{AlgebraTag, Automorphism, DElem};
use skewnorm::ext::{check_automorphic, term_twists, AutomorphicWitness, ExtensionElement};
use skewnorm::laurent::{LaurentPoly, LaurentRing};
use skewnorm::random::RandomGen;
use skewnorm::skewpoly::{SkewPoly, SkewRing};
use skewnorm::subst::{linear_shift, power_shift, power_shift_inverse, substitute, Substitution};

fn tag_of(g: &mut RandomGen) -> AlgebraTag {
    if g.chance(0.5) {
        AlgebraTag::HQ
    } else {
        AlgebraTag::QX
    }
}

fn id_witness<S: ExtensionElement>(s: S) -> AutomorphicWitness<S> {
    let id = Automorphism::identity(s.tag());
    AutomorphicWitness::new(s, id)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn homomorphism_into_central_polynomials(seed in any::<u64>()) {
        let mut g = RandomGen::new(seed);
        let tag = tag_of(&mut g);
        let n = g.int(1, 3) as usize;
        let src = SkewRing::central(tag, n);
        let dst = SkewRing::central(tag, 2);
        let point: Vec<_> = (0..n).map(|_| id_witness(g.rational_poly(&dst, 2, 3))).collect();
        let (f, h) = (g.poly(&src, 3, 3), g.poly(&src, 3, 3));
        let sub = Substitution::new(&src, point, SkewPoly::one(&dst)).unwrap();
        prop_assert_eq!(sub.apply(&(&f * &h)).unwrap(), &sub.apply(&f).unwrap() * &sub.apply(&h).unwrap());
        prop_assert_eq!(sub.apply(&(&f + &h)).unwrap(), &sub.apply(&f).unwrap() + &sub.apply(&h).unwrap());
    }

    #[test]
    fn homomorphism_into_laurent_ring(seed in any::<u64>()) {
        let mut g = RandomGen::new(seed);
        let tag = tag_of(&mut g);
        let sigma = g.auto(tag);
        let lring = LaurentRing::new(sigma.clone());
        let ks: Vec<i64> = (0..g.int(1, 3)).map(|_| g.int(-2, 2)).collect();
        let src = SkewRing::new(tag, ks.iter().map(|&k| sigma.pow(k)).collect()).unwrap();
        let point: Vec<_> = ks
            .iter()
            .map(|&k| {
                let c = DElem::rational(tag, g.nonzero_rat());
                AutomorphicWitness::new(LaurentPoly::monomial(&lring, k, c), sigma.pow(k))
            })
            .collect();
        let (f, h) = (g.poly(&src, 3, 3), g.poly(&src, 3, 3));
        let sub = Substitution::new(&src, point, LaurentPoly::one(&lring)).unwrap();
        prop_assert_eq!(sub.apply(&(&f * &h)).unwrap(), sub.apply(&f).unwrap().mul(&sub.apply(&h).unwrap()));
        prop_assert_eq!(sub.apply(&(&f + &h)).unwrap(), sub.apply(&f).unwrap().add(&sub.apply(&h).unwrap()));
    }

    #[test]
    fn linear_shift_is_invertible(seed in any::<u64>()) {
        let mut g = RandomGen::new(seed);
        let tag = tag_of(&mut g);
        let sigma = g.auto(tag);
        let n = g.int(1, 3) as usize;
        let ring = SkewRing::constant(&sigma, n);
        let f = g.poly(&ring, 3, 4);
        let a: Vec<DElem> = (0..n - 1).map(|_| g.rational(tag)).collect();
        let neg: Vec<DElem> = a.iter().map(|x| -x).collect();
        prop_assert_eq!(linear_shift(&linear_shift(&f, &a).unwrap(), &neg).unwrap(), f);
    }

    #[test]
    fn power_shift_is_invertible(seed in any::<u64>()) {
        let mut g = RandomGen::new(seed);
        let tag = tag_of(&mut g);
        let ring = SkewRing::central(tag, g.int(1, 3) as usize);
        let f = g.poly(&ring, 3, 3);
        let d = (f.total_degree() + 1).max(2) as u64 + g.int(0, 2) as u64;
        prop_assert_eq!(power_shift_inverse(&power_shift(&f, d).unwrap(), d).unwrap(), f);
    }

    #[test]
    fn automorphic_twist_is_correct(seed in any::<u64>()) {
        let mut g = RandomGen::new(seed);
        let tag = tag_of(&mut g);
        let n = g.int(1, 3) as usize;
        let ring = g.ring(tag, n);
        let a = g.nonzero_poly(&ring, 2, 3);
        match check_automorphic(&a) {
            Ok(s) => {
                for _ in 0..100 {
                    let b = g.delem(tag);
                    let lhs = &a * &SkewPoly::constant(&ring, b.clone());
                    prop_assert_eq!(lhs, &SkewPoly::constant(&ring, s.apply(&b)) * &a);
                }
            }
            Err(e) => {
                prop_assert_eq!(e.code(), "NotAutomorphic");
                for (_, tau) in term_twists(&a) {
                    let broken = DElem::generators(tag).into_iter().any(|x| {
                        let b = SkewPoly::constant(&ring, x.clone());
                        &a * &b != &SkewPoly::constant(&ring, tau.apply(&x)) * &a
                    });
                    prop_assert!(broken, "twist {} is not refuted", tau);
                }
            }
        }
    }

    #[test]
    fn substitution_commutes_with_linear_shift(seed in any::<u64>()) {
        let mut g = RandomGen::new(seed);
        let tag = tag_of(&mut g);
        let n = g.int(1, 3) as usize;
        let ring = SkewRing::central(tag, n);
        let f = g.poly(&ring, 3, 4);
        let a: Vec<DElem> = (0..n - 1).map(|_| g.rational(tag)).collect();
        let p: Vec<DElem> = (0..n).map(|_| g.rational(tag)).collect();
        let mut shifted_point = p.clone();
        for i in 0..n - 1 {
            shifted_point[i] = &p[i] + &(&a[i] * &p[n - 1]);
        }
        let one = DElem::one(tag);
        let lhs = substitute(&linear_shift(&f, &a).unwrap(), p.into_iter().map(id_witness).collect(), one.clone()).unwrap();
        let rhs = substitute(&f, shifted_point.into_iter().map(id_witness).collect(), one).unwrap();
        prop_assert_eq!(lhs, rhs);
    }
}

#[test]
fn witnesses_must_match_the_ring() {
    let sigma = Automorphism::shift(skewnorm::divalg::rat::rat(1));
    let ring = SkewRing::new(AlgebraTag::QX, vec![sigma.clone()]).unwrap();
    let lring = LaurentRing::new(sigma.clone());
    let wrong = vec![AutomorphicWitness::new(LaurentPoly::t(&lring, 2), sigma.pow(2))];
    let err = Substitution::new(&ring, wrong, LaurentPoly::one(&lring)).err().unwrap();
    assert_eq!(err.code(), "AutomorphismMismatch");
    let ring2 = SkewRing::new(AlgebraTag::QX, vec![sigma.clone(), sigma.clone()]).unwrap();
    let dst = SkewRing::constant(&sigma, 1);
    let t = SkewPoly::var(&dst, 0);
    let x = SkewPoly::constant(&dst, DElem::x());
    let non_commuting =
        vec![AutomorphicWitness::new(t.clone(), sigma.clone()), AutomorphicWitness::new(&x * &t, sigma.clone())];
    let err = Substitution::new(&ring2, non_commuting, SkewPoly::one(&dst)).err().unwrap();
    assert_eq!(err.code(), "NonCommutingPoint");
}
