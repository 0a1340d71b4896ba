//! Seeded property verbs. Each draws its cases from the request seed and
//! fails with `CheckFailed` naming the first bad trial.

use serde_json::{json, Value};

use super::args::opt;
use super::Ctx;
use crate::divalg::rat::rat;
use crate::divalg::{AlgebraTag, AutoDesc, DElem, Quat, Rat};
use crate::error::{Error, Result};
use crate::ext::{AutomorphicWitness, ExtensionElement};
use crate::laurent::{LaurentPoly, LaurentRing};
use crate::normalize::search::target_monomial;
use crate::normalize::{
    decide_tuple_normalizable_field_shifts, find_nonvanishing, monicize_dadic, monicize_linear, FieldCriterion,
    PointSearchSpec,
};
use crate::quatcentral::extraction_constants;
use crate::random::RandomGen;
use crate::skewpoly::SkewRing;
use crate::subst::Substitution;

fn trials(a: &Value, default: u64) -> Result<u64> {
    Ok(opt(a, "trials")?.unwrap_or(default))
}

fn algebra(a: &Value) -> Result<AlgebraTag> {
    Ok(opt(a, "algebra")?.unwrap_or(AlgebraTag::HQ))
}

fn fail(trial: u64, what: String) -> Error {
    Error::CheckFailed(format!("trial {trial}: {what}"))
}

fn summary(ctx: &Ctx, n: u64) -> Value {
    json!({ "seed": ctx.seed, "trials": n, "passed": n })
}

/// A point tᵢ ↦ rᵢ·t^{kᵢ} in D[t, t⁻¹; σ] for a ring whose autos are σ^{kᵢ}.
fn laurent_point(
    g: &mut RandomGen,
    tag: AlgebraTag,
    n: usize,
) -> (std::sync::Arc<SkewRing>, Vec<AutomorphicWitness<LaurentPoly>>, LaurentPoly) {
    let sigma = g.auto(tag);
    let lring = LaurentRing::new(sigma.clone());
    let ks: Vec<i64> = (0..n).map(|_| g.int(-1, 2)).collect();
    let ring = SkewRing::new(tag, ks.iter().map(|&k| sigma.pow(k)).collect()).expect("powers of σ commute");
    let point = ks
        .iter()
        .map(|&k| {
            let r = DElem::rational(tag, g.nonzero_rat());
            AutomorphicWitness::new(LaurentPoly::monomial(&lring, k, r), sigma.pow(k))
        })
        .collect();
    (ring, point, LaurentPoly::one(&lring))
}

pub(crate) fn homomorphism(a: &Value, ctx: &mut Ctx) -> Result<Value> {
    let (n_trials, tag) = (trials(a, 100)?, algebra(a)?);
    let mut g = RandomGen::new(ctx.seed);
    for t in 0..n_trials {
        let n = g.int(1, 3) as usize;
        let (ring, point, unit) = laurent_point(&mut g, tag, n);
        let (f, h) = (g.poly(&ring, 3, 4), g.poly(&ring, 3, 4));
        let sub = Substitution::new(&ring, point, unit)?;
        let (sf, sh) = (sub.apply(&f)?, sub.apply(&h)?);
        if sub.apply(&(&f * &h))? != sf.mul(&sh) {
            return Err(fail(t, format!("substitution is not multiplicative on {f} and {h}")));
        }
        if sub.apply(&(&f + &h))? != sf.add(&sh) {
            return Err(fail(t, format!("substitution is not additive on {f} and {h}")));
        }
    }
    Ok(summary(ctx, n_trials))
}

pub(crate) fn ring_axioms(a: &Value, ctx: &mut Ctx) -> Result<Value> {
    let (n_trials, tag) = (trials(a, 100)?, algebra(a)?);
    let mut g = RandomGen::new(ctx.seed);
    for t in 0..n_trials {
        let n = g.int(1, 3) as usize;
        let ring = g.ring(tag, n);
        let (x, y, z) = (g.poly(&ring, 2, 3), g.poly(&ring, 2, 3), g.poly(&ring, 2, 3));
        if &(&x * &y) * &z != &x * &(&y * &z) {
            return Err(fail(t, format!("associativity fails for {x}, {y}, {z}")));
        }
        if &x * &(&y + &z) != &(&x * &y) + &(&x * &z) || &(&y + &z) * &x != &(&y * &x) + &(&z * &x) {
            return Err(fail(t, format!("distributivity fails for {x}, {y}, {z}")));
        }
    }
    Ok(summary(ctx, n_trials))
}

pub(crate) fn monicize(a: &Value, ctx: &mut Ctx) -> Result<Value> {
    let n_trials = trials(a, 50)?;
    let mut g = RandomGen::new(ctx.seed);
    for t in 0..n_trials {
        let tag = if g.chance(0.5) { AlgebraTag::HQ } else { AlgebraTag::QX };
        let n = g.int(1, 3) as usize;
        let sigma = g.auto(tag);
        let f = g.nonzero_poly(&SkewRing::constant(&sigma, n), 3, 4);
        let lin = monicize_linear(&f, &PointSearchSpec::Incremental)?;
        let central = g.nonzero_poly(&SkewRing::central(tag, n), 3, 4);
        let dad = monicize_dadic(&central)?;
        for (src, res) in [(&f, &lin), (&central, &dad)] {
            if !res.g.is_monic_in_last() || res.shift.apply(src)?.scale_left(&res.scale) != res.g {
                return Err(fail(t, format!("monicization of {src} gave {}", res.g)));
            }
        }
    }
    Ok(summary(ctx, n_trials))
}

pub(crate) fn nullsatz(a: &Value, ctx: &mut Ctx) -> Result<Value> {
    let n_trials = trials(a, 50)?;
    let mut g = RandomGen::new(ctx.seed);
    for t in 0..n_trials {
        let tag = if g.chance(0.5) { AlgebraTag::HQ } else { AlgebraTag::QX };
        let ring = SkewRing::central(tag, g.int(1, 3) as usize);
        let f = g.nonzero_poly(&ring, 3, 4);
        let k = target_monomial(&f, None).expect("f is nonzero");
        let grids: Vec<Vec<DElem>> =
            k.0.iter()
                .map(|&ki| {
                    let mut grid: Vec<Rat> = Vec::new();
                    while grid.len() < ki as usize + 1 {
                        let r = g.small_rat();
                        if !grid.contains(&r) {
                            grid.push(r);
                        }
                    }
                    grid.into_iter().map(|r| DElem::rational(tag, r)).collect()
                })
                .collect();
        let p = find_nonvanishing(&f, &PointSearchSpec::Grid { grids: grids.clone() })?;
        let in_grid = p.iter().zip(&grids).all(|(x, grid)| grid.contains(x));
        if !in_grid || f.eval_central(&p)?.is_zero() {
            return Err(fail(t, format!("bad point for {f}")));
        }
    }
    Ok(summary(ctx, n_trials))
}

/// Least exponents with equal powers, scanning d₁ ≤ 50 directly.
pub(crate) fn brute_force_shifts(c: &[Rat]) -> FieldCriterion {
    for d1 in 1..=50u64 {
        let target = &c[0] * rat(d1 as i64);
        let ds: Option<Vec<u64>> = c.iter().map(|ci| (1..=50u64).find(|&di| ci * rat(di as i64) == target)).collect();
        if let Some(ds) = ds {
            return FieldCriterion::Normalizable(ds);
        }
    }
    FieldCriterion::NotNormalizable
}

pub(crate) fn field_criterion(a: &Value, ctx: &mut Ctx) -> Result<Value> {
    let n_trials = trials(a, 100)?;
    let mut g = RandomGen::new(ctx.seed);
    for t in 0..n_trials {
        let n = g.int(1, 4) as usize;
        let c: Vec<Rat> = (0..n).map(|_| if g.chance(0.1) { rat(0) } else { g.small_rat() }).collect();
        let descs: Vec<AutoDesc> = c.iter().cloned().map(AutoDesc::shift).collect();
        let got = decide_tuple_normalizable_field_shifts(&descs)?;
        let want = brute_force_shifts(&c);
        if got != want {
            return Err(fail(t, format!("criterion {got:?} but brute force {want:?}")));
        }
    }
    Ok(summary(ctx, n_trials))
}

pub(crate) fn extraction(a: &Value, ctx: &mut Ctx) -> Result<Value> {
    let n_trials = trials(a, 200)?;
    let mut g = RandomGen::new(ctx.seed);
    let consts = extraction_constants();
    for t in 0..n_trials {
        let q = DElem::Quat(g.quat());
        let mut rebuilt = DElem::zero(AlgebraTag::HQ);
        for (i, v) in Quat::basis().into_iter().enumerate() {
            let ci = consts.component(i, &q);
            if !ci.is_central() {
                return Err(fail(t, format!("component {i} of {q} is {ci}")));
            }
            rebuilt = &rebuilt + &(&ci * &DElem::Quat(v));
        }
        if rebuilt != q {
            return Err(fail(t, format!("components of {q} recombine to {rebuilt}")));
        }
    }
    Ok(summary(ctx, n_trials))
}
