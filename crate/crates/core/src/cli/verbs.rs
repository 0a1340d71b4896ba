//! The verb registry and handlers.

use serde_json::{json, Value};

use super::args::{algebra_for, opt, req, to_json, with_witnesses, witnesses, Witnesses};
use super::{checks, demos, verb_listing, Ctx};
use crate::divalg::{
    auto_commute, auto_equal, delem_arith, inner_order, is_fixed, left_nullspace, left_solve, AlgebraTag, ArithOp,
    AutoDesc, DElem, DMatrix,
};
use crate::error::{Error, Result};
use crate::ext::{AutomorphicWitness, ExtensionElement};
use crate::laurent::{
    classify_automorphic, finite_inner_order_witness, invert_via_integral_relation, lp_add, lp_mul, LaurentPoly,
};
use crate::normalize::{
    decide_tuple_normalizable_field_shifts, find_nonvanishing, find_projective_point, monicize_dadic, monicize_linear,
    normalize, power_reduce, verify_certificate, BoundedSearchOracle, Mode, PointSearchSpec,
};
use crate::quatcentral::{
    central_components, centralize_generators, extraction_constants, point_ideal_two_sided, recombine,
};
use crate::quotient::{decide_quotient_normalizable, find_dependence, q_add, q_mul, quotient_witness, QuotientElem};
use crate::skewpoly::{sp_add, sp_mul, sp_scale_left, sp_sub, RingDesc, SkewPoly, SkewRing};
use crate::subst::{in_f, linear_shift, power_shift, power_shift_inverse, Substitution};

type Handler = fn(&Value, &mut Ctx) -> Result<Value>;

pub struct Verb {
    pub name: &'static str,
    pub args: &'static [&'static str],
    pub summary: &'static str,
    pub run: Handler,
}

const fn verb(name: &'static str, args: &'static [&'static str], summary: &'static str, run: Handler) -> Verb {
    Verb { name, args, summary, run }
}

pub static VERBS: &[Verb] = &[
    verb("arith", &["op", "x", "y"], "add, sub, mul or inv in D", arith),
    verb("auto.apply", &["auto", "r"], "σ(r)", auto_apply),
    verb("auto.equal", &["sigma", "tau", "algebra"], "whether two automorphisms agree", auto_eq),
    verb("auto.commute", &["sigma", "tau", "algebra"], "whether two automorphisms commute", auto_comm),
    verb("auto.inner-order", &["auto", "algebra", "bound"], "least k ≤ bound with σ^k inner", auto_inner_order),
    verb("is-central", &["r"], "whether r is central in D", is_central_verb),
    verb("is-fixed", &["auto", "r"], "whether σ(r) = r", is_fixed_verb),
    verb("in-f", &["ring", "a"], "whether a is central and fixed by every ring automorphism", in_f_verb),
    verb("linalg.solve", &["matrix", "b"], "solve x·A = b over D", linalg_solve),
    verb("linalg.nullspace", &["matrix"], "left null space of A over D", linalg_nullspace),
    verb("mul", &["f", "g"], "product of skew polynomials", poly_mul),
    verb("add", &["f", "g"], "sum of skew polynomials", poly_add),
    verb("sub", &["f", "g"], "difference of skew polynomials", poly_sub),
    verb("scale", &["c", "f"], "left scalar multiple c·f", poly_scale),
    verb("degree", &["f"], "total degree and degree in each variable", poly_degree),
    verb("leading-form", &["f"], "top-degree homogeneous part", poly_leading_form),
    verb("is-monic", &["f"], "whether f is monic in the last variable", poly_is_monic),
    verb("eval", &["f", "point"], "evaluate a polynomial in central variables at a point of D", poly_eval),
    verb("automorphic", &["element"], "the twist of an automorphic element", automorphic),
    verb("subst", &["f", "point"], "substitute an automorphic commuting point", subst),
    verb("shift-linear", &["f", "a"], "tᵢ ↦ tᵢ + aᵢ·tₙ", shift_linear),
    verb("shift-power", &["f", "d", "inverse"], "tᵢ ↦ tᵢ ± tₙ^{d^{n−i}}", shift_power),
    verb("nullsatz.search", &["f", "search"], "a point where f does not vanish", nullsatz_search),
    verb(
        "nullsatz.projective",
        &["f", "search"],
        "a point where the leading form does not vanish",
        nullsatz_projective,
    ),
    verb("monicize", &["f", "linear", "dadic", "search"], "make f monic in the last variable", monicize),
    verb(
        "normalize.run",
        &["generators", "mode", "oracle_degree", "verify_degree", "search", "algebra"],
        "normalize commuting automorphic generators and verify the certificate",
        normalize_run,
    ),
    verb(
        "tuple.power-reduce",
        &["generators", "d"],
        "powers with a common twist and the module basis",
        power_reduce_verb,
    ),
    verb("tuple.decide-shifts", &["autos"], "normalizability of a tuple of shifts of ℚ(x)", decide_shifts),
    verb("laurent.mul", &["f", "g"], "product of Laurent polynomials", laurent_mul),
    verb("laurent.add", &["f", "g"], "sum of Laurent polynomials", laurent_add),
    verb("laurent.classify", &["a"], "monomial, automorphic or not automorphic", laurent_classify),
    verb(
        "laurent.witness",
        &["auto", "k", "c"],
        "automorphic element for σ^k = in_c and its relation",
        laurent_witness,
    ),
    verb(
        "laurent.invert-check",
        &["coeffs"],
        "check a candidate inverse of t from an integral relation",
        laurent_invert,
    ),
    verb("quotient.mul", &["f", "g"], "product in D[z1,z2]/(t1t2)", quotient_mul),
    verb("quotient.add", &["f", "g"], "sum in D[z1,z2]/(t1t2)", quotient_add),
    verb("quotient.depend", &["x1", "x2"], "a dependence relation between commuting elements", quotient_depend),
    verb("quotient.witness", &["ring", "k1", "k2", "c"], "automorphic element z1^k1 + c·z2^k2", quotient_witness_verb),
    verb(
        "quotient.decide",
        &["sigma1", "sigma2", "bound", "algebra"],
        "search for a quotient witness",
        quotient_decide,
    ),
    verb("quat.constants", &[], "the extraction constants over ℍ(ℚ)", quat_constants),
    verb("quat.decompose", &["p"], "central components p = Σ pᵢ·vᵢ", quat_decompose),
    verb("quat.centralize", &["gens"], "central generators of the same subring", quat_centralize),
    verb("quat.point-ideal", &["a"], "whether the point ideal is two-sided", quat_point_ideal),
    verb(
        "check.homomorphism",
        &["algebra", "trials"],
        "seeded check that substitution is a homomorphism",
        checks::homomorphism,
    ),
    verb(
        "check.ring-axioms",
        &["algebra", "trials"],
        "seeded check of associativity and distributivity",
        checks::ring_axioms,
    ),
    verb("check.monicize", &["trials"], "seeded check of both monicizations", checks::monicize),
    verb("check.nullsatz", &["trials"], "seeded check of the grid point search", checks::nullsatz),
    verb(
        "check.field-criterion",
        &["trials"],
        "seeded check of the shift criterion against brute force",
        checks::field_criterion,
    ),
    verb("check.extraction", &["trials"], "seeded check of quaternion extraction", checks::extraction),
    verb("demo.run", &["name"], "replay a named scenario", demo_run),
    verb("demo.list", &[], "names of the scenarios", demo_list),
    verb("verbs", &[], "every verb with its arguments", verbs_list),
];

fn shown<T: serde::Serialize + std::fmt::Display>(v: &T) -> Result<Value> {
    Ok(json!({ "value": to_json(v)?, "display": v.to_string() }))
}

fn arith(a: &Value, _: &mut Ctx) -> Result<Value> {
    let op: ArithOp = req(a, "op")?;
    let x: DElem = req(a, "x")?;
    let y: Option<DElem> = opt(a, "y")?;
    shown(&delem_arith(op, &x, y.as_ref())?)
}

fn auto_apply(a: &Value, _: &mut Ctx) -> Result<Value> {
    let r: DElem = req(a, "r")?;
    let sigma = req::<AutoDesc>(a, "auto")?.resolve(r.tag())?;
    shown(&sigma.apply(&r))
}

fn pinned_pair(a: &Value) -> Result<(AutoDesc, AutoDesc)> {
    let (s, t): (AutoDesc, AutoDesc) = (req(a, "sigma")?, req(a, "tau")?);
    let explicit: Option<AlgebraTag> = opt(a, "algebra")?;
    match explicit {
        None => Ok((s, t)),
        Some(tag) => Ok((s.resolve(tag)?.to_desc(), t.resolve(tag)?.to_desc())),
    }
}

fn auto_eq(a: &Value, _: &mut Ctx) -> Result<Value> {
    let (s, t) = pinned_pair(a)?;
    Ok(json!({ "equal": auto_equal(&s, &t)? }))
}

fn auto_comm(a: &Value, _: &mut Ctx) -> Result<Value> {
    let (s, t) = pinned_pair(a)?;
    Ok(json!({ "commute": auto_commute(&s, &t)? }))
}

fn auto_inner_order(a: &Value, _: &mut Ctx) -> Result<Value> {
    let desc: AutoDesc = req(a, "auto")?;
    let sigma = desc.resolve(algebra_for(&desc, a)?)?;
    to_json(&inner_order(&sigma, req(a, "bound")?)?)
}

fn is_central_verb(a: &Value, _: &mut Ctx) -> Result<Value> {
    let r: DElem = req(a, "r")?;
    Ok(json!({ "central": r.is_central() }))
}

fn is_fixed_verb(a: &Value, _: &mut Ctx) -> Result<Value> {
    let r: DElem = req(a, "r")?;
    let sigma = req::<AutoDesc>(a, "auto")?.resolve(r.tag())?;
    Ok(json!({ "fixed": is_fixed(&sigma, &r)? }))
}

fn in_f_verb(a: &Value, _: &mut Ctx) -> Result<Value> {
    let ring = SkewRing::from_desc(&req::<RingDesc>(a, "ring")?)?;
    Ok(json!({ "in_f": in_f(&ring, &req(a, "a")?)? }))
}

fn linalg_solve(a: &Value, _: &mut Ctx) -> Result<Value> {
    let m: DMatrix = req(a, "matrix")?;
    let b: Vec<DElem> = req(a, "b")?;
    to_json(&left_solve(&m, &b)?)
}

fn linalg_nullspace(a: &Value, _: &mut Ctx) -> Result<Value> {
    let m: DMatrix = req(a, "matrix")?;
    Ok(json!({ "basis": to_json(&left_nullspace(&m)?)? }))
}

fn two<T: serde::de::DeserializeOwned>(a: &Value) -> Result<(T, T)> {
    Ok((req(a, "f")?, req(a, "g")?))
}

fn poly_mul(a: &Value, _: &mut Ctx) -> Result<Value> {
    let (f, g) = two::<SkewPoly>(a)?;
    shown(&sp_mul(&f, &g)?)
}

fn poly_add(a: &Value, _: &mut Ctx) -> Result<Value> {
    let (f, g) = two::<SkewPoly>(a)?;
    shown(&sp_add(&f, &g)?)
}

fn poly_sub(a: &Value, _: &mut Ctx) -> Result<Value> {
    let (f, g) = two::<SkewPoly>(a)?;
    shown(&sp_sub(&f, &g)?)
}

fn poly_scale(a: &Value, _: &mut Ctx) -> Result<Value> {
    let f: SkewPoly = req(a, "f")?;
    shown(&sp_scale_left(&req(a, "c")?, &f)?)
}

fn poly_degree(a: &Value, _: &mut Ctx) -> Result<Value> {
    let f: SkewPoly = req(a, "f")?;
    let per: Vec<i64> = (0..f.ring().n()).map(|i| f.degree_in(i)).collect();
    Ok(json!({ "total": f.total_degree(), "per_variable": per }))
}

fn poly_leading_form(a: &Value, _: &mut Ctx) -> Result<Value> {
    let f: SkewPoly = req(a, "f")?;
    shown(&f.leading_form()?)
}

fn poly_is_monic(a: &Value, _: &mut Ctx) -> Result<Value> {
    let f: SkewPoly = req(a, "f")?;
    Ok(json!({ "monic": f.is_monic_in_last() }))
}

fn poly_eval(a: &Value, _: &mut Ctx) -> Result<Value> {
    let f: SkewPoly = req(a, "f")?;
    let point: Vec<DElem> = req(a, "point")?;
    shown(&f.eval_central(&point)?)
}

fn automorphic(a: &Value, _: &mut Ctx) -> Result<Value> {
    let ws = witnesses(&json!({ "w": [{ "element": req::<Value>(a, "element")? }] }), "w", false)?;
    let twist = with_witnesses!(ws, v => v[0].auto.clone());
    Ok(json!({ "twist": to_json(&twist)?, "display": twist.to_string() }))
}

fn evaluate<S: ExtensionElement + serde::Serialize>(
    f: &SkewPoly,
    point: Vec<AutomorphicWitness<S>>,
    unit: S,
) -> Result<Value> {
    shown(&Substitution::new(f.ring(), point, unit)?.apply(f)?)
}

fn subst(a: &Value, _: &mut Ctx) -> Result<Value> {
    let f: SkewPoly = req(a, "f")?;
    match witnesses(a, "point", true)? {
        Witnesses::D(p) if p.is_empty() => evaluate(&f, p, DElem::one(f.ring().tag())),
        ws => with_witnesses!(ws, p => {
            let unit = p[0].element.one_like();
            evaluate(&f, p, unit)
        }),
    }
}

fn shift_linear(a: &Value, _: &mut Ctx) -> Result<Value> {
    let f: SkewPoly = req(a, "f")?;
    shown(&linear_shift(&f, &req::<Vec<DElem>>(a, "a")?)?)
}

fn shift_power(a: &Value, _: &mut Ctx) -> Result<Value> {
    let f: SkewPoly = req(a, "f")?;
    let d: u64 = req(a, "d")?;
    if opt(a, "inverse")?.unwrap_or(false) {
        shown(&power_shift_inverse(&f, d)?)
    } else {
        shown(&power_shift(&f, d)?)
    }
}

fn search_spec(a: &Value) -> Result<PointSearchSpec> {
    Ok(opt(a, "search")?.unwrap_or(PointSearchSpec::Incremental))
}

fn nullsatz_search(a: &Value, _: &mut Ctx) -> Result<Value> {
    let f: SkewPoly = req(a, "f")?;
    Ok(json!({ "point": to_json(&find_nonvanishing(&f, &search_spec(a)?)?)? }))
}

fn nullsatz_projective(a: &Value, _: &mut Ctx) -> Result<Value> {
    let f: SkewPoly = req(a, "f")?;
    Ok(json!({ "point": to_json(&find_projective_point(&f, &search_spec(a)?)?)? }))
}

fn monicize(a: &Value, _: &mut Ctx) -> Result<Value> {
    let f: SkewPoly = req(a, "f")?;
    let linear = opt(a, "linear")?.unwrap_or(false);
    let dadic = opt(a, "dadic")?.unwrap_or(false);
    let res = match (linear, dadic) {
        (true, false) => monicize_linear(&f, &search_spec(a)?)?,
        (false, true) => monicize_dadic(&f)?,
        _ => return Err(Error::SchemaViolation("pass exactly one of `linear` and `dadic`".into())),
    };
    Ok(json!({ "result": to_json(&res)?, "display": res.g.to_string() }))
}

fn run_normalization<S: ExtensionElement + serde::Serialize>(
    gens: Vec<AutomorphicWitness<S>>,
    unit: &S,
    mode: Mode,
    oracle_degree: u32,
    verify_degree: u32,
    search: &PointSearchSpec,
) -> Result<Value> {
    let oracle = BoundedSearchOracle { max_degree: oracle_degree };
    let cert = normalize(gens, unit, &oracle, mode, search)?;
    let report = verify_certificate(&cert, unit, verify_degree)?;
    if !report.ok() {
        return Err(Error::CheckFailed(format!("certificate does not verify: {report:?}")));
    }
    Ok(json!({ "certificate": to_json(&cert)?, "report": to_json(&report)? }))
}

fn normalize_run(a: &Value, _: &mut Ctx) -> Result<Value> {
    let mode: Mode = req(a, "mode")?;
    let oracle_degree = opt(a, "oracle_degree")?.unwrap_or(4);
    let verify_degree = opt(a, "verify_degree")?.unwrap_or(4);
    let search = search_spec(a)?;
    match witnesses(a, "generators", false)? {
        Witnesses::D(g) if g.is_empty() => {
            let tag: AlgebraTag = opt(a, "algebra")?.unwrap_or(AlgebraTag::HQ);
            run_normalization(g, &DElem::one(tag), mode, oracle_degree, verify_degree, &search)
        }
        ws => with_witnesses!(ws, g => {
            let unit = g[0].element.one_like();
            run_normalization(g, &unit, mode, oracle_degree, verify_degree, &search)
        }),
    }
}

fn reduce_powers<S: ExtensionElement + serde::Serialize>(gens: Vec<AutomorphicWitness<S>>, d: &[u32]) -> Result<Value> {
    let Some(first) = gens.first() else {
        return Err(Error::DimensionMismatch("power reduction needs at least one generator".into()));
    };
    let unit = first.element.one_like();
    let red = power_reduce(&gens, d, &unit)?;
    let elems: Vec<S> = gens.into_iter().map(|g| g.element).collect();
    let verified = crate::normalize::verify_power_reduction(&elems, d, &red, &unit);
    if !verified {
        return Err(Error::CheckFailed("power reduction does not regenerate the monomials".into()));
    }
    Ok(json!({ "reduction": to_json(&red)?, "verified": verified }))
}

fn power_reduce_verb(a: &Value, _: &mut Ctx) -> Result<Value> {
    let d: Vec<u32> = req(a, "d")?;
    with_witnesses!(witnesses(a, "generators", false)?, g => reduce_powers(g, &d))
}

fn decide_shifts(a: &Value, _: &mut Ctx) -> Result<Value> {
    to_json(&decide_tuple_normalizable_field_shifts(&req::<Vec<AutoDesc>>(a, "autos")?)?)
}

fn laurent_mul(a: &Value, _: &mut Ctx) -> Result<Value> {
    let (f, g) = two::<LaurentPoly>(a)?;
    shown(&lp_mul(&f, &g)?)
}

fn laurent_add(a: &Value, _: &mut Ctx) -> Result<Value> {
    let (f, g) = two::<LaurentPoly>(a)?;
    shown(&lp_add(&f, &g)?)
}

fn laurent_classify(a: &Value, _: &mut Ctx) -> Result<Value> {
    to_json(&classify_automorphic(&req(a, "a")?)?)
}

fn laurent_witness(a: &Value, _: &mut Ctx) -> Result<Value> {
    let c: DElem = req(a, "c")?;
    let sigma = req::<AutoDesc>(a, "auto")?.resolve(c.tag())?;
    let w = finite_inner_order_witness(&sigma, req(a, "k")?, &c)?;
    let mut out = to_json(&w)?;
    out["u_display"] = json!(w.u.to_string());
    out["relation_display"] = json!(w.relation.to_string());
    Ok(out)
}

fn laurent_invert(a: &Value, _: &mut Ctx) -> Result<Value> {
    to_json(&invert_via_integral_relation(&req::<Vec<SkewPoly>>(a, "coeffs")?)?)
}

fn quotient_mul(a: &Value, _: &mut Ctx) -> Result<Value> {
    let (f, g) = two::<QuotientElem>(a)?;
    shown(&q_mul(&f, &g)?)
}

fn quotient_add(a: &Value, _: &mut Ctx) -> Result<Value> {
    let (f, g) = two::<QuotientElem>(a)?;
    shown(&q_add(&f, &g)?)
}

fn quotient_depend(a: &Value, _: &mut Ctx) -> Result<Value> {
    let x1: QuotientElem = req(a, "x1")?;
    let x2: QuotientElem = req(a, "x2")?;
    to_json(&find_dependence(&x1, &x2)?)
}

fn quotient_witness_verb(a: &Value, _: &mut Ctx) -> Result<Value> {
    let ring = SkewRing::from_desc(&req::<RingDesc>(a, "ring")?)?;
    let w = quotient_witness(&ring, req(a, "k1")?, req(a, "k2")?, &req(a, "c")?)?;
    let mut out = to_json(&w)?;
    out["u_display"] = json!(w.u.to_string());
    Ok(out)
}

fn quotient_decide(a: &Value, _: &mut Ctx) -> Result<Value> {
    let s1: AutoDesc = req(a, "sigma1")?;
    let s2: AutoDesc = req(a, "sigma2")?;
    let tag = match (algebra_for(&s1, a), algebra_for(&s2, a)) {
        (Ok(t), _) | (_, Ok(t)) => t,
        (Err(e), _) => return Err(e),
    };
    to_json(&decide_quotient_normalizable(&s1, &s2, req(a, "bound")?, tag)?)
}

fn quat_constants(_: &Value, _: &mut Ctx) -> Result<Value> {
    to_json(extraction_constants())
}

fn quat_decompose(a: &Value, _: &mut Ctx) -> Result<Value> {
    let p: SkewPoly = req(a, "p")?;
    let parts = central_components(&p)?;
    let display: Vec<String> = parts.iter().map(ToString::to_string).collect();
    let rebuilt = recombine(p.ring(), &parts) == p;
    Ok(json!({ "components": to_json(&parts)?, "display": display, "recombines": rebuilt }))
}

fn quat_centralize(a: &Value, _: &mut Ctx) -> Result<Value> {
    to_json(&centralize_generators(&req::<Vec<SkewPoly>>(a, "gens")?)?)
}

fn quat_point_ideal(a: &Value, _: &mut Ctx) -> Result<Value> {
    to_json(&point_ideal_two_sided(&req::<Vec<DElem>>(a, "a")?)?)
}

fn demo_run(a: &Value, ctx: &mut Ctx) -> Result<Value> {
    demos::run_demo(&req::<String>(a, "name")?, ctx.seed)
}

fn demo_list(_: &Value, _: &mut Ctx) -> Result<Value> {
    Ok(demos::listing())
}

fn verbs_list(_: &Value, _: &mut Ctx) -> Result<Value> {
    Ok(verb_listing())
}
