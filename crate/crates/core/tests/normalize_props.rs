use std::sync::Arc;

use proptest::prelude::*;
use skewnorm::divalg::rat::rat;
use skewnorm::divalg::{AlgebraTag, AutoDesc, Automorphism, DElem, Rat};
use skewnorm::ext::AutomorphicWitness;
use skewnorm::normalize::search::target_monomial;
use skewnorm::normalize::{
    decide_tuple_normalizable_field_shifts, exponent_box, find_nonvanishing, monicize_dadic, monicize_linear,
    normalize, verify_certificate, BoundedSearchOracle, DependenceOracle, FieldCriterion, Mode, OracleAnswer,
    PointSearchSpec, ShiftKind,
};
use skewnorm::random::RandomGen;
use skewnorm::skewpoly::{SkewPoly, SkewRing};
use skewnorm::subst::Substitution;

fn tag_of(g: &mut RandomGen) -> AlgebraTag {
    if g.chance(0.5) {
        AlgebraTag::HQ
    } else {
        AlgebraTag::QX
    }
}

/// Nonconstant polynomials with rational coefficients in one central variable.
fn central_gens(g: &mut RandomGen, tag: AlgebraTag, count: usize, deg: u32) -> (Arc<SkewRing>, Vec<SkewPoly>) {
    let s = SkewRing::central(tag, 1);
    let gens = (0..count)
        .map(|_| loop {
            let p = g.rational_poly(&s, deg, 3);
            if p.total_degree() > 0 {
                break p;
            }
        })
        .collect();
    (s, gens)
}

fn eval_at(f: &SkewPoly, point: &[SkewPoly], unit: &SkewPoly) -> SkewPoly {
    let id = Automorphism::identity(unit.ring().tag());
    let ws = point.iter().map(|p| AutomorphicWitness::new(p.clone(), id.clone())).collect();
    Substitution::new(f.ring(), ws, unit.clone()).unwrap().apply(f).unwrap()
}

/// z̃ with f(z) = 0 turned into g(z̃) = 0, undoing the variable change.
fn transformed_point(shift: &ShiftKind, z: &[SkewPoly]) -> Vec<SkewPoly> {
    let n = z.len();
    let last = &z[n - 1];
    let mut out = z.to_vec();
    for i in 0..n - 1 {
        let sub = match shift {
            ShiftKind::Linear { a } if a.is_empty() => continue,
            ShiftKind::Linear { a } => last.scale_left(&a[i]),
            ShiftKind::Power { d } => last.pow(d.pow((n - 1 - i) as u32) as u32),
        };
        out[i] = &z[i] - &sub;
    }
    out
}

fn brute_force(c: &[Rat]) -> FieldCriterion {
    for d1 in 1..=50i64 {
        let target = &c[0] * rat(d1);
        let ds: Option<Vec<u64>> = c.iter().map(|ci| (1..=50u64).find(|&d| ci * rat(d as i64) == target)).collect();
        if let Some(ds) = ds {
            return FieldCriterion::Normalizable(ds);
        }
    }
    FieldCriterion::NotNormalizable
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn monicize_outputs_reconstruct(seed in any::<u64>()) {
        let mut g = RandomGen::new(seed);
        let tag = tag_of(&mut g);
        let n = g.int(1, 3) as usize;
        let sigma = g.auto(tag);
        let f = g.nonzero_poly(&SkewRing::constant(&sigma, n), 3, 4);
        let lin = monicize_linear(&f, &PointSearchSpec::Incremental).unwrap();
        prop_assert!(lin.g.is_monic_in_last());
        prop_assert_eq!(lin.shift.apply(&f).unwrap().scale_left(&lin.scale), lin.g.clone());
        prop_assert_eq!(lin.g.degree_in(n - 1), lin.m as i64);

        let c = g.nonzero_poly(&SkewRing::central(tag, n), 3, 4);
        let dad = monicize_dadic(&c).unwrap();
        prop_assert!(dad.g.is_monic_in_last());
        prop_assert_eq!(dad.shift.apply(&c).unwrap().scale_left(&dad.scale), dad.g.clone());
    }

    #[test]
    fn nonvanishing_grid_points(seed in any::<u64>()) {
        let mut g = RandomGen::new(seed);
        for tag in [AlgebraTag::HQ, AlgebraTag::QX] {
            let ring = SkewRing::central(tag, g.int(1, 3) as usize);
            let f = g.nonzero_poly(&ring, 3, 4);
            let k = target_monomial(&f, None).unwrap();
            let grids: Vec<Vec<DElem>> = k.0.iter().map(|&ki| {
                let mut grid = Vec::new();
                while grid.len() <= ki as usize {
                    let r = DElem::rational(tag, g.small_rat());
                    if !grid.contains(&r) {
                        grid.push(r);
                    }
                }
                grid
            }).collect();
            let p = find_nonvanishing(&f, &PointSearchSpec::Grid { grids: grids.clone() }).unwrap();
            prop_assert!(p.iter().zip(&grids).all(|(x, grid)| grid.contains(x)));
            prop_assert!(!f.eval_central(&p).unwrap().is_zero());
        }
    }

    #[test]
    fn field_criterion_matches_brute_force(seed in any::<u64>()) {
        let mut g = RandomGen::new(seed);
        let n = g.int(1, 4) as usize;
        let c: Vec<Rat> = (0..n).map(|_| if g.chance(0.1) { rat(0) } else { g.small_rat() }).collect();
        let descs: Vec<AutoDesc> = c.iter().cloned().map(AutoDesc::shift).collect();
        prop_assert_eq!(decide_tuple_normalizable_field_shifts(&descs).unwrap(), brute_force(&c));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn monic_relations_vanish_at_transformed_generators(seed in any::<u64>()) {
        let mut g = RandomGen::new(seed);
        let tag = tag_of(&mut g);
        let count = g.int(2, 3) as usize;
        let (s, z) = central_gens(&mut g, tag, count, 3);
        let unit = SkewPoly::one(&s);
        let ring = SkewRing::central(tag, count);
        let OracleAnswer::Relation(f) = BoundedSearchOracle { max_degree: 4 }.find_relation(&ring, &z, &unit).unwrap() else {
            return Err(TestCaseError::fail("generators in one variable must be dependent"));
        };
        prop_assert!(eval_at(&f, &z, &unit).is_zero());
        for res in [monicize_dadic(&f).unwrap(), monicize_linear(&f, &PointSearchSpec::Incremental).unwrap()] {
            let zt = transformed_point(&res.shift, &z);
            prop_assert!(eval_at(&res.g, &zt, &unit).is_zero());
            let parts = res.g.decompose_last();
            prop_assert_eq!(parts.len(), res.m as usize + 1);
            prop_assert_eq!(parts[res.m as usize].clone(), SkewPoly::one(&ring));
        }
    }

    #[test]
    fn certificates_verify(seed in any::<u64>()) {
        let mut g = RandomGen::new(seed);
        let tag = tag_of(&mut g);
        let count = g.int(1, 3) as usize;
        let (s, z) = central_gens(&mut g, tag, count, 2);
        let unit = SkewPoly::one(&s);
        let ws: Vec<_> = z.into_iter().map(|p| AutomorphicWitness::new(p, Automorphism::identity(tag))).collect();
        let cert = normalize(ws, &unit, &BoundedSearchOracle { max_degree: 4 }, Mode::Central, &PointSearchSpec::Incremental).unwrap();
        // Power shifts raise degrees, so only one elimination is guaranteed within the bound.
        prop_assert!(!cert.independent_gens.is_empty() && cert.independent_gens.len() <= count);
        if count <= 2 {
            prop_assert_eq!(cert.independent_gens.len(), 1);
        }
        let report = verify_certificate(&cert, &unit, 4).unwrap();
        prop_assert!(report.ok(), "{:?}", report);
    }
}

#[test]
fn exponent_box_is_lexicographic() {
    let b = exponent_box(&[2, 3]);
    assert_eq!(b.len(), 6);
    assert_eq!(b[0], vec![0, 0]);
    assert_eq!(b[1], vec![0, 1]);
    assert_eq!(b[5], vec![1, 2]);
    assert!(exponent_box(&[2, 0]).is_empty());
}

#[test]
fn undersized_grids_are_rejected() {
    let ring = SkewRing::central(AlgebraTag::QX, 2);
    let f = SkewPoly::var(&ring, 0).pow(2);
    let one = DElem::one(AlgebraTag::QX);
    let spec = PointSearchSpec::Grid { grids: vec![vec![one.clone(), -&one], vec![one]] };
    assert_eq!(find_nonvanishing(&f, &spec).unwrap_err().code(), "GridTooSmall");
}

#[test]
fn mode_mismatch_is_reported() {
    let sigma = Automorphism::shift(rat(1));
    let ring = SkewRing::new(AlgebraTag::QX, vec![sigma.clone(), sigma.pow(2)]).unwrap();
    let unit = SkewPoly::one(&ring);
    let ws = vec![
        AutomorphicWitness::new(SkewPoly::var(&ring, 0), sigma.clone()),
        AutomorphicWitness::new(SkewPoly::var(&ring, 1), sigma.pow(2)),
    ];
    let err =
        normalize(ws, &unit, &BoundedSearchOracle { max_degree: 2 }, Mode::Constant, &PointSearchSpec::Incremental);
    assert_eq!(err.unwrap_err().code(), "ModeMismatch");
}
