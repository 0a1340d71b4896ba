use proptest::prelude::*;
use skewnorm::divalg::{AlgebraTag, DElem, Quat};
use skewnorm::quatcentral::{
    central_components, centralize_generators, extraction_constants, point_ideal_two_sided, recombine,
    verify_centralized, PointIdeal,
};
use skewnorm::random::RandomGen;
use skewnorm::skewpoly::{SkewPoly, SkewRing};

fn basis() -> [DElem; 4] {
    [DElem::quat(1, 0, 0, 0), DElem::quat(0, 1, 0, 0), DElem::quat(0, 0, 1, 0), DElem::quat(0, 0, 0, 1)]
}

/// Coordinates of the pure part cross to zero exactly when two quaternions commute.
fn commute_by_coordinates(x: &Quat, y: &Quat) -> bool {
    let (a, b) = (x.components(), y.components());
    let cross = [a[2] * b[3] - a[3] * b[2], a[3] * b[1] - a[1] * b[3], a[1] * b[2] - a[2] * b[1]];
    cross.iter().all(num_traits::Zero::is_zero)
}

/// Fifty fixed points: rational, commuting non-real, and non-commuting.
fn fixed_points() -> Vec<Vec<DElem>> {
    let mut g = RandomGen::new(50);
    (0..50)
        .map(|n| {
            let len = 1 + n % 3;
            match n % 4 {
                0 => (0..len).map(|_| g.rational(AlgebraTag::HQ)).collect(),
                1 => {
                    let v = DElem::Quat(g.quat());
                    (0..len).map(|_| &DElem::rational(AlgebraTag::HQ, g.small_rat()) * &v).collect()
                }
                _ => (0..len).map(|_| DElem::Quat(g.quat())).collect(),
            }
        })
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn extraction_recovers_coordinates(seed in any::<u64>()) {
        let mut g = RandomGen::new(seed);
        let q = g.quat();
        let consts = extraction_constants();
        let v = basis();
        let mut sum = DElem::zero(AlgebraTag::HQ);
        for (i, vi) in v.iter().enumerate() {
            let c = consts.component(i, &DElem::Quat(q.clone()));
            prop_assert_eq!(c.as_rational(), Some(q.component(i).clone()));
            sum = &sum + &(&c * vi);
        }
        prop_assert_eq!(sum, DElem::Quat(q));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn components_round_trip(seed in any::<u64>()) {
        let mut g = RandomGen::new(seed);
        let ring = SkewRing::central(AlgebraTag::HQ, 3);
        let p = g.poly(&ring, 4, 5);
        let parts = central_components(&p).unwrap();
        prop_assert_eq!(recombine(&ring, &parts), p.clone());
        for (i, part) in parts.iter().enumerate() {
            for (e, c) in part.terms() {
                let q = p.terms()[e].as_quat().unwrap().clone();
                prop_assert_eq!(c.as_rational(), Some(q.component(i).clone()));
            }
        }
    }

    #[test]
    fn centralized_generators_span_both_ways(seed in any::<u64>()) {
        let mut g = RandomGen::new(seed);
        let ring = SkewRing::central(AlgebraTag::HQ, g.int(1, 3) as usize);
        let gens: Vec<SkewPoly> = (0..g.int(1, 3)).map(|_| g.poly(&ring, 3, 3)).collect();
        let c = centralize_generators(&gens).unwrap();
        prop_assert!(verify_centralized(&gens, &c));
        let v = basis();
        for b in &c.central {
            prop_assert!(b.terms().values().all(|x| x.as_rational().is_some()));
            let probe = SkewPoly::constant(&ring, DElem::Quat(g.quat()));
            prop_assert_eq!(b * &probe, &probe * b);
        }
        for (a, uses) in gens.iter().zip(&c.rebuild) {
            let sum = uses.iter().fold(SkewPoly::zero(&ring), |acc, &(i, pos)| {
                &acc + &(&c.central[pos] * &SkewPoly::constant(&ring, v[i].clone()))
            });
            prop_assert_eq!(&sum, a);
        }
    }
}

#[test]
fn point_ideals_on_fixed_points() {
    for a in fixed_points() {
        let quats: Vec<Quat> = a.iter().map(|x| x.as_quat().unwrap().clone()).collect();
        let all_real = quats.iter().all(Quat::is_real);
        let commuting =
            quats.iter().enumerate().all(|(i, x)| quats[i + 1..].iter().all(|y| commute_by_coordinates(x, y)));
        match point_ideal_two_sided(&a).unwrap() {
            PointIdeal::TwoSidedReal => assert!(all_real, "{a:?}"),
            PointIdeal::CommutingNonReal { index, b, conjugated, unit_in_ideal } => {
                assert!(commuting && !all_real, "{a:?}");
                assert_eq!(&(&b * &conjugated), &(&a[index] * &b));
                assert_eq!(unit_in_ideal, &a[index] - &conjugated);
                assert!(!unit_in_ideal.is_zero());
            }
            PointIdeal::NonCommuting { i, j } => {
                assert!(!commuting);
                assert!(!commute_by_coordinates(&quats[i], &quats[j]));
            }
        }
    }
}

#[test]
fn rational_field_is_rejected() {
    let p = SkewPoly::var(&SkewRing::central(AlgebraTag::QX, 1), 0);
    assert_eq!(central_components(&p).unwrap_err().code(), "TagMismatch");
}
