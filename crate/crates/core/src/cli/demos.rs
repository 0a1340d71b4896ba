//! Named scenarios that replay small worked constructions and assert
//! their outcomes.

use serde_json::{json, Value};

use crate::divalg::rat::rat;
use crate::divalg::{AlgebraTag, AutoDesc, Automorphism, DElem};
use crate::error::{Error, Result};
use crate::ext::{AutomorphicWitness, ExtensionElement};
use crate::laurent::{
    classify_automorphic, finite_inner_order_witness, invert_via_integral_relation, Classification, Inversion,
};
use crate::laurent::{LaurentPoly, LaurentRing};
use crate::normalize::{
    decide_tuple_normalizable_field_shifts, find_nonvanishing, monicize_dadic, monicize_linear, normalize,
    power_reduce, verify_certificate, verify_power_reduction, BoundedSearchOracle, FieldCriterion, Mode,
    PointSearchSpec, ShiftKind,
};
use crate::quatcentral::{centralize_generators, point_ideal_two_sided, PointIdeal};
use crate::quotient::{
    decide_quotient_normalizable, find_dependence, quotient_witness, QuotientDecision, QuotientElem,
};
use crate::random::RandomGen;
use crate::skewpoly::{ExpVec, SkewPoly, SkewRing};

/// Lines of narration plus a count of assertions that held.
pub struct Transcript {
    lines: Vec<String>,
    checks: usize,
}

impl Transcript {
    fn say(&mut self, line: impl Into<String>) {
        self.lines.push(line.into());
    }

    fn check(&mut self, cond: bool, what: &str) -> Result<()> {
        if !cond {
            return Err(Error::CheckFailed(format!("demo assertion failed: {what}")));
        }
        self.checks += 1;
        self.say(format!("  ok: {what}"));
        Ok(())
    }
}

type DemoFn = fn(&mut Transcript, &mut RandomGen) -> Result<()>;

pub struct Demo {
    pub name: &'static str,
    pub summary: &'static str,
    run: DemoFn,
}

const fn demo(name: &'static str, summary: &'static str, run: DemoFn) -> Demo {
    Demo { name, summary, run }
}

pub static DEMOS: &[Demo] = &[
    demo("twisted-product", "t*x = (x+1)*t over a shift of Q(x)", twisted_product),
    demo("linear-monicize", "t1*t2 becomes monic after t1 -> t1 + t2", linear_monicize),
    demo("dadic-monicize", "t1*t2 becomes t1*t2 + t2^4 after t1 -> t1 + t2^3", dadic_monicize),
    demo("nullsatz-grid", "a nonvanishing grid point for t^2 - t", nullsatz_grid),
    demo("laurent-negative", "under x -> x+1 only monomials are automorphic", laurent_negative),
    demo("laurent-witness", "u = t^-2 + t^2 for in(i) squared", laurent_witness),
    demo("laurent-invert", "t^-1 is not integral over D[t; sigma]", laurent_invert),
    demo("quotient-dependence", "z1 + z2 and z1^2 + z2^2 are dependent", quotient_dependence),
    demo("quotient-witness", "z1 + z2^2 for shifts by 2 and 1", quotient_witness_demo),
    demo("quotient-decide", "opposite shifts admit no witness", quotient_decide),
    demo("quaternion-point-ideal", "point ideals over the quaternions", quaternion_point_ideal),
    demo("quaternion-centralize", "central generators of i*t1 + j*t2", quaternion_centralize),
    demo("field-criterion", "shift tuples with and without common powers", field_criterion),
    demo("power-reduce", "equal powers of two shifted variables", power_reduce_demo),
    demo("normalize-central", "s^2 and s^3 over a central ring", normalize_central),
    demo("normalize-constant", "three generators twisting by in(i)", normalize_constant),
    demo("random-homomorphism", "seeded substitution into a Laurent ring", random_homomorphism),
];

pub fn listing() -> Value {
    Value::Array(DEMOS.iter().map(|d| json!({ "name": d.name, "summary": d.summary })).collect())
}

pub fn run_demo(name: &str, seed: u64) -> Result<Value> {
    let d = DEMOS.iter().find(|d| d.name == name).ok_or_else(|| Error::UnknownDemo(name.to_string()))?;
    let mut tr = Transcript { lines: Vec::new(), checks: 0 };
    let mut rng = RandomGen::new(seed);
    (d.run)(&mut tr, &mut rng)?;
    Ok(json!({ "name": d.name, "summary": d.summary, "seed": seed, "transcript": tr.lines, "checks": tr.checks }))
}

fn q(a: i64, b: i64, c: i64, d: i64) -> DElem {
    DElem::quat(a, b, c, d)
}

fn one(tag: AlgebraTag) -> DElem {
    DElem::one(tag)
}

fn mono(ring: &std::sync::Arc<SkewRing>, e: &[u32], c: DElem) -> SkewPoly {
    SkewPoly::monomial(ring, ExpVec(e.to_vec()), c)
}

fn twisted_product(tr: &mut Transcript, _: &mut RandomGen) -> Result<()> {
    let ring = SkewRing::new(AlgebraTag::QX, vec![Automorphism::shift(rat(1))])?;
    let t = SkewPoly::var(&ring, 0);
    let x = SkewPoly::constant(&ring, DElem::x());
    let p = &t * &x;
    tr.say(format!("ring QX[t; x -> x+1], t*x = {p}"));
    let want = mono(&ring, &[1], DElem::qx_poly(&[1, 1]));
    tr.check(p == want, "t*x = (x + 1)*t")?;
    tr.check(&x * &t != p, "x*t differs from t*x")
}

fn linear_monicize(tr: &mut Transcript, _: &mut RandomGen) -> Result<()> {
    let ring = SkewRing::central(AlgebraTag::HQ, 2);
    let f = mono(&ring, &[1, 1], one(AlgebraTag::HQ));
    let res = monicize_linear(&f, &PointSearchSpec::Incremental)?;
    tr.say(format!("f = {f}, shift {:?}, scale {}", res.shift, res.scale));
    tr.say(format!("g = {}", res.g));
    let want = &f + &mono(&ring, &[0, 2], one(AlgebraTag::HQ));
    tr.check(res.shift == ShiftKind::Linear { a: vec![one(AlgebraTag::HQ)] }, "shift t1 -> t1 + t2")?;
    tr.check(res.g == want, "g = t1*t2 + t2^2")?;
    tr.check(res.g.is_monic_in_last() && res.m == 2, "g is monic of degree 2 in t2")
}

fn dadic_monicize(tr: &mut Transcript, _: &mut RandomGen) -> Result<()> {
    let ring = SkewRing::central(AlgebraTag::QX, 2);
    let f = mono(&ring, &[1, 1], one(AlgebraTag::QX));
    let res = monicize_dadic(&f)?;
    tr.say(format!("f = {f}, shift {:?}", res.shift));
    tr.say(format!("g = {}", res.g));
    let want = &f + &mono(&ring, &[0, 4], one(AlgebraTag::QX));
    tr.check(res.shift == ShiftKind::Power { d: 3 }, "d = 3")?;
    tr.check(res.g == want, "g = t1*t2 + t2^4")?;
    tr.check(res.g.is_monic_in_last() && res.m == 4, "g is monic of degree 4 in t2")
}

fn nullsatz_grid(tr: &mut Transcript, _: &mut RandomGen) -> Result<()> {
    let tag = AlgebraTag::QX;
    let ring = SkewRing::central(tag, 1);
    let f = &mono(&ring, &[2], one(tag)) - &mono(&ring, &[1], one(tag));
    let grid: Vec<DElem> = (0..3).map(|k| DElem::int(tag, k)).collect();
    let p = find_nonvanishing(&f, &PointSearchSpec::Grid { grids: vec![grid] })?;
    tr.say(format!("f = {f} on the grid {{0, 1, 2}} gives t = {}", p[0]));
    tr.check(p[0] == DElem::int(tag, 2), "the first nonvanishing grid point is 2")?;
    tr.check(f.eval_central(&p)? == DElem::int(tag, 2), "f(2) = 2")
}

fn laurent_negative(tr: &mut Transcript, _: &mut RandomGen) -> Result<()> {
    let ring = LaurentRing::new(Automorphism::shift(rat(1)));
    let coefs = [one(AlgebraTag::QX), DElem::x()];
    let exps: Vec<i64> = (-2..=2).collect();
    let (mut monomials, mut multi) = (0, 0);
    for size in 1..=3usize {
        for support in subsets(&exps, size) {
            for choice in 0..coefs.len().pow(size as u32) {
                let terms =
                    support.iter().enumerate().map(|(i, &k)| (k, coefs[(choice / 2usize.pow(i as u32)) % 2].clone()));
                let a = LaurentPoly::from_terms(&ring, terms)?;
                match classify_automorphic(&a)? {
                    Classification::Monomial { .. } => monomials += 1,
                    Classification::Automorphic { .. } => {
                        return Err(Error::CheckFailed(format!("{a} is automorphic with several terms")))
                    }
                    Classification::NotAutomorphic { .. } => multi += 1,
                }
            }
        }
    }
    tr.say("sigma = x -> x+1, supports of size <= 3 in [-2, 2], coefficients in {1, x}".to_string());
    tr.say(format!("{monomials} monomials, {multi} multi-term elements"));
    tr.check(monomials == 10, "every monomial is automorphic")?;
    tr.check(multi == 40 + 80, "every multi-term element fails")
}

fn subsets(items: &[i64], k: usize) -> Vec<Vec<i64>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for (i, &x) in items.iter().enumerate() {
        for mut rest in subsets(&items[i + 1..], k - 1) {
            rest.insert(0, x);
            out.push(rest);
        }
    }
    out
}

fn laurent_witness(tr: &mut Transcript, _: &mut RandomGen) -> Result<()> {
    let sigma = Automorphism::inner(&q(0, 1, 0, 0));
    let w = finite_inner_order_witness(&sigma, 2, &q(-1, 0, 0, 0))?;
    tr.say(format!("sigma = {sigma}, sigma^2 = in(-1), u = {}", w.u));
    tr.say(format!("relation {} in D[u, t]", w.relation));
    tr.check(w.u.to_string() == "t^2 + t^-2", "u = t^-2 + t^2")?;
    tr.check(w.twist.is_identity(), "u is central")?;
    tr.check(w.lowest_exponents == (1..=8).map(|j| -2 * j).collect::<Vec<_>>(), "u^j reaches t^-2j")
}

fn laurent_invert(tr: &mut Transcript, _: &mut RandomGen) -> Result<()> {
    let ring = SkewRing::new(AlgebraTag::QX, vec![Automorphism::shift(rat(1))])?;
    let t = SkewPoly::var(&ring, 0);
    for coeffs in [vec![SkewPoly::one(&ring)], vec![SkewPoly::zero(&ring), t.clone()]] {
        let inv = invert_via_integral_relation(&coeffs)?;
        match &inv {
            Inversion::Inconsistent { candidate, product } => {
                tr.say(format!("m = {}: candidate {candidate}, candidate*t = {product}", coeffs.len()));
            }
            Inversion::Inverse { candidate } => tr.say(format!("candidate {candidate} inverts t")),
        }
        tr.check(matches!(inv, Inversion::Inconsistent { .. }), "the candidate does not invert t")?;
    }
    Ok(())
}

fn quotient_dependence(tr: &mut Transcript, _: &mut RandomGen) -> Result<()> {
    let tag = AlgebraTag::HQ;
    let ring = SkewRing::central(tag, 2);
    let (z1, z2) = (QuotientElem::var(&ring, 0)?, QuotientElem::var(&ring, 1)?);
    let x1 = z1.add(&z2);
    let x2 = z1.pow(2).add(&z2.pow(2));
    let w = find_dependence(&x1, &x2)?;
    tr.say(format!("x1 = {x1}, x2 = {x2}"));
    let shown: Vec<String> = w.combo.iter().map(|((i, j), c)| format!("({c})*x1^{i}*x2^{j}")).collect();
    tr.say(format!("relation {} = 0", shown.join(" + ")));
    tr.check(w.evaluate(&x1, &x2).is_zero(), "the relation vanishes")?;
    tr.check(w.combo.len() == 2, "x2 - x1^2 = 0")
}

fn quotient_witness_demo(tr: &mut Transcript, _: &mut RandomGen) -> Result<()> {
    let ring = SkewRing::new(AlgebraTag::QX, vec![Automorphism::shift(rat(2)), Automorphism::shift(rat(1))])?;
    let w = quotient_witness(&ring, 1, 2, &one(AlgebraTag::QX))?;
    tr.say(format!("sigma1 = {}, sigma2 = {}, u = {}", ring.autos()[0], ring.autos()[1], w.u));
    tr.check(w.u.to_string() == "z1 + z2^2", "u = z1 + z2^2")?;
    tr.check(w.twist.agrees_on_generators(&ring.autos()[0]), "u twists by sigma1")?;
    tr.check(w.leading_z1 == (1..=8).collect::<Vec<u32>>(), "powers of u grow in z1")
}

fn quotient_decide(tr: &mut Transcript, _: &mut RandomGen) -> Result<()> {
    let tag = AlgebraTag::QX;
    let opposite = decide_quotient_normalizable(&AutoDesc::shift(rat(1)), &AutoDesc::shift(rat(-1)), 6, tag)?;
    tr.say(format!("x -> x+1 with x -> x-1: {opposite:?}"));
    tr.check(
        opposite == QuotientDecision::NoWitnessUpTo { bound: 6, exact_negative: true },
        "no witness, and none exists",
    )?;
    let same = decide_quotient_normalizable(&AutoDesc::shift(rat(2)), &AutoDesc::shift(rat(1)), 6, tag)?;
    tr.say(format!("x -> x+2 with x -> x+1: {same:?}"));
    tr.check(matches!(same, QuotientDecision::Witness { k1: 1, k2: 2, .. }), "witness (1, 2)")
}

fn quaternion_point_ideal(tr: &mut Transcript, _: &mut RandomGen) -> Result<()> {
    let real = point_ideal_two_sided(&[q(1, 0, 0, 0), q(2, 0, 0, 0)])?;
    tr.say(format!("(1, 2): {real:?}"));
    tr.check(real == PointIdeal::TwoSidedReal, "rational points give two-sided ideals")?;
    let r = point_ideal_two_sided(&[q(0, 1, 0, 0)])?;
    tr.say(format!("(i): {r:?}"));
    let PointIdeal::CommutingNonReal { unit_in_ideal, .. } = &r else {
        return Err(Error::CheckFailed(format!("unexpected {r:?}")));
    };
    tr.check(!unit_in_ideal.is_zero(), "the two-sided ideal contains a unit")?;
    let nc = point_ideal_two_sided(&[q(0, 1, 0, 0), q(0, 0, 1, 0)])?;
    tr.say(format!("(i, j): {nc:?}"));
    tr.check(nc == PointIdeal::NonCommuting { i: 0, j: 1 }, "i and j do not commute")
}

fn quaternion_centralize(tr: &mut Transcript, _: &mut RandomGen) -> Result<()> {
    let ring = SkewRing::central(AlgebraTag::HQ, 2);
    let a = &mono(&ring, &[1, 0], q(0, 1, 0, 0)) + &mono(&ring, &[0, 1], q(0, 0, 1, 0));
    let c = centralize_generators(std::slice::from_ref(&a))?;
    let shown: Vec<String> = c.central.iter().map(ToString::to_string).collect();
    tr.say(format!("a = {a}, central generators [{}]", shown.join(", ")));
    tr.check(c.central.len() == 2, "two central generators")?;
    tr.check(c.central.iter().all(|b| b.terms().values().all(DElem::is_central)), "all coefficients are rational")
}

fn field_criterion(tr: &mut Transcript, _: &mut RandomGen) -> Result<()> {
    let yes = decide_tuple_normalizable_field_shifts(&[AutoDesc::shift(rat(2)), AutoDesc::shift(rat(3))])?;
    tr.say(format!("shifts (2, 3): {yes:?}"));
    tr.check(yes == FieldCriterion::Normalizable(vec![3, 2]), "exponents (3, 2)")?;
    let no = decide_tuple_normalizable_field_shifts(&[AutoDesc::shift(rat(1)), AutoDesc::shift(rat(-1))])?;
    tr.say(format!("shifts (1, -1): {no:?}"));
    tr.check(no == FieldCriterion::NotNormalizable, "opposite signs are not normalizable")
}

fn power_reduce_demo(tr: &mut Transcript, _: &mut RandomGen) -> Result<()> {
    let ring = SkewRing::new(AlgebraTag::QX, vec![Automorphism::shift(rat(2)), Automorphism::shift(rat(3))])?;
    let gens: Vec<AutomorphicWitness<SkewPoly>> =
        (0..2).map(|i| AutomorphicWitness::new(SkewPoly::var(&ring, i), ring.autos()[i].clone())).collect();
    let d = [3, 2];
    let unit = SkewPoly::one(&ring);
    let red = power_reduce(&gens, &d, &unit)?;
    let shown: Vec<String> = red.w.iter().map(ToString::to_string).collect();
    tr.say(format!("w = [{}], common twist {}", shown.join(", "), red.sigma));
    tr.check(red.basis.len() == 6, "module basis of size 6")?;
    let elems: Vec<SkewPoly> = gens.into_iter().map(|g| g.element).collect();
    tr.check(verify_power_reduction(&elems, &d, &red, &unit), "monomials regenerate")
}

fn normalize_central(tr: &mut Transcript, _: &mut RandomGen) -> Result<()> {
    let tag = AlgebraTag::HQ;
    let ring = SkewRing::central(tag, 1);
    let s = SkewPoly::var(&ring, 0);
    let gens = [s.pow(2), s.pow(3)];
    let ws: Vec<_> = gens.iter().map(|g| AutomorphicWitness::infer(g.clone())).collect::<Result<_>>()?;
    let unit = SkewPoly::one(&ring);
    let cert =
        normalize(ws, &unit, &BoundedSearchOracle { max_degree: 4 }, Mode::Central, &PointSearchSpec::Incremental)?;
    for step in &cert.transforms {
        tr.say(format!("relation {} made monic: {}", step.relation, step.monic.g));
    }
    tr.say(format!(
        "{} independent generator(s), {} module generator(s)",
        cert.independent_gens.len(),
        cert.module_gens.len()
    ));
    let report = verify_certificate(&cert, &unit, 6)?;
    tr.check(cert.independent_gens.len() == 1, "one independent generator")?;
    tr.check(report.ok(), "certificate verifies through degree 6")
}

fn normalize_constant(tr: &mut Transcript, _: &mut RandomGen) -> Result<()> {
    let tag = AlgebraTag::HQ;
    let sigma = Automorphism::inner(&q(0, 1, 0, 0));
    let ring = SkewRing::constant(&sigma, 2);
    let (s1, s2) = (SkewPoly::var(&ring, 0), SkewPoly::var(&ring, 1));
    let gens = [s1.clone(), s2.clone(), &s1 + &s2.scale_left(&DElem::int(tag, 2))];
    let ws: Vec<_> = gens.iter().map(|g| AutomorphicWitness::new(g.clone(), sigma.clone())).collect();
    let unit = SkewPoly::one(&ring);
    let cert =
        normalize(ws, &unit, &BoundedSearchOracle { max_degree: 3 }, Mode::Constant, &PointSearchSpec::Incremental)?;
    for step in &cert.transforms {
        tr.say(format!("relation {} made monic: {}", step.relation, step.monic.g));
    }
    let report = verify_certificate(&cert, &unit, 4)?;
    tr.check(cert.transforms.len() == 1, "one relation")?;
    tr.check(cert.independent_gens.len() == 2, "two independent generators")?;
    tr.check(report.ok(), "certificate verifies through degree 4")
}

fn random_homomorphism(tr: &mut Transcript, g: &mut RandomGen) -> Result<()> {
    let tag = AlgebraTag::QX;
    let sigma = g.auto(tag);
    let lring = LaurentRing::new(sigma.clone());
    let ring = SkewRing::new(tag, vec![sigma.clone(), sigma.inverse()])?;
    let point = vec![
        AutomorphicWitness::new(LaurentPoly::t(&lring, 1), sigma.clone()),
        AutomorphicWitness::new(LaurentPoly::t(&lring, -1).scale_left(&DElem::int(tag, 2)), sigma.inverse()),
    ];
    let sub = crate::subst::Substitution::new(&ring, point, LaurentPoly::one(&lring))?;
    let (f, h) = (g.poly(&ring, 2, 3), g.poly(&ring, 2, 3));
    tr.say(format!("sigma = {sigma}, f = {f}, g = {h}"));
    tr.say(format!("f(t, 2t^-1) = {}", sub.apply(&f)?));
    tr.check(sub.apply(&(&f * &h))? == sub.apply(&f)?.mul(&sub.apply(&h)?), "f*g maps to f(z)*g(z)")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_demo_runs() {
        for d in DEMOS {
            let out = run_demo(d.name, 0).unwrap_or_else(|e| panic!("{}: {e}", d.name));
            assert!(out["checks"].as_u64().unwrap() > 0, "{}", d.name);
        }
    }

    #[test]
    fn missing_demo() {
        assert_eq!(run_demo("missing", 0).unwrap_err().code(), "UnknownDemo");
    }
}
