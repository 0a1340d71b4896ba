//! Recursive normalization of commuting automorphic generators.
//!
//! At each level the oracle supplies a relation f(z₁,…,z_k) = 0, the
//! relation is made monic in the last variable by a change of variables,
//! and the remaining generators are replaced by z̃ᵢ = zᵢ − bᵢ with bᵢ a
//! multiple or power of z_k. Then z_k is integral over the subring
//! generated by z̃₁,…,z̃_{k−1} and the recursion continues there until the
//! oracle reports independence.

use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::monic::{monicize_dadic, monicize_linear, MonicizationResult, ShiftKind};
use super::search::PointSearchSpec;
use crate::divalg::linalg::{Insert, LeftEchelon, SparseRow};
use crate::divalg::{Automorphism, DElem};
use crate::error::{Error, Result};
use crate::ext::{check_automorphic, AutomorphicWitness, BasisKey, ExtensionElement};
use crate::skewpoly::{ExpVec, SkewPoly, SkewRing};
use crate::subst::Substitution;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    /// All generators twist by one common σ; linear monicization.
    Constant,
    /// All generators twist trivially; d-adic monicization.
    Central,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OracleAnswer {
    /// f ≠ 0 with f(z) = 0.
    Relation(SkewPoly),
    /// No relation among monomials up to this total degree.
    IndependentUpTo(u32),
}

/// Supplies relations among commuting automorphic generators.
pub trait DependenceOracle<S: ExtensionElement> {
    /// `ring` has one variable per generator and the generators' common twist.
    fn find_relation(&self, ring: &Arc<SkewRing>, gens: &[S], unit: &S) -> Result<OracleAnswer>;
}

/// Assigns column indices to basis monomials so elements become sparse rows.
#[derive(Clone, Debug, Default)]
pub struct Coords {
    index: HashMap<BasisKey, usize>,
}

impl Coords {
    pub fn new() -> Self {
        Coords::default()
    }

    pub fn row<S: ExtensionElement>(&mut self, s: &S) -> SparseRow {
        let mut row = SparseRow::new();
        for (k, c) in s.left_terms() {
            let next = self.index.len();
            let col = *self.index.entry(k).or_insert(next);
            row.insert(col, c);
        }
        row
    }
}

/// Exhaustive left linear search over monomials of bounded degree.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundedSearchOracle {
    pub max_degree: u32,
}

impl<S: ExtensionElement> DependenceOracle<S> for BoundedSearchOracle {
    fn find_relation(&self, ring: &Arc<SkewRing>, gens: &[S], unit: &S) -> Result<OracleAnswer> {
        let sub = Substitution::new_unchecked(ring, gens.to_vec(), unit.clone());
        let mut coords = Coords::new();
        let mut ech = LeftEchelon::new(ring.tag());
        let mut exps = Vec::new();
        for e in ExpVec::up_to_degree(ring.n(), self.max_degree) {
            let v = sub.monomial(&e);
            exps.push(e);
            if let Insert::Dependent(combo) = ech.insert(coords.row(&v))? {
                let terms = combo.into_iter().map(|(i, c)| (exps[i].clone(), c));
                return Ok(OracleAnswer::Relation(SkewPoly::from_terms(ring, terms)?));
            }
        }
        Ok(OracleAnswer::IndependentUpTo(self.max_degree))
    }
}

/// A generator as a polynomial in the input generators, with its value.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct GenRecord<S> {
    pub expr: SkewPoly,
    pub value: S,
    pub auto: Automorphism,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TransformStep {
    /// Number of generators before this step.
    pub level: usize,
    pub relation: SkewPoly,
    pub monic: MonicizationResult,
}

/// Π ŷ_L^{e_L} over the eliminated generators ŷ.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ModuleGen<S> {
    pub exponents: Vec<u32>,
    pub expr: SkewPoly,
    pub value: S,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Independence {
    NoGenerators,
    IndependentUpTo(u32),
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct NormalizationCert<S> {
    pub mode: Mode,
    pub sigma: Automorphism,
    pub inputs: Vec<S>,
    /// Outermost first.
    pub transforms: Vec<TransformStep>,
    /// The generator made integral at each step, in step order.
    pub eliminated: Vec<GenRecord<S>>,
    pub independent_gens: Vec<GenRecord<S>>,
    pub independence: Independence,
    pub module_gens: Vec<ModuleGen<S>>,
}

fn common_twist<S: ExtensionElement>(gens: &[AutomorphicWitness<S>], unit: &S, mode: Mode) -> Result<Automorphism> {
    let id = Automorphism::identity(unit.tag());
    match mode {
        Mode::Central => match gens.iter().position(|w| !w.auto.is_identity()) {
            Some(i) => Err(Error::ModeMismatch(format!(
                "central mode needs identity twists; generator {} twists by {}",
                i + 1,
                gens[i].auto
            ))),
            None => Ok(id),
        },
        Mode::Constant => {
            let Some(first) = gens.first() else { return Ok(id) };
            match gens.iter().position(|w| !w.auto.agrees_on_generators(&first.auto)) {
                Some(i) => Err(Error::ModeMismatch(format!(
                    "constant-tuple mode needs equal twists; generator 1 twists by {}, generator {} by {}",
                    first.auto,
                    i + 1,
                    gens[i].auto
                ))),
                None => Ok(first.auto.clone()),
            }
        }
    }
}

/// Odometer over 0 ≤ eᵢ < boundsᵢ, last coordinate fastest.
pub fn exponent_box(bounds: &[u32]) -> Vec<Vec<u32>> {
    let mut out = vec![Vec::new()];
    for &b in bounds {
        out = out
            .into_iter()
            .flat_map(|p| {
                (0..b).map(move |e| {
                    let mut q = p.clone();
                    q.push(e);
                    q
                })
            })
            .collect();
    }
    out
}

pub fn normalize<S, O>(
    gens: Vec<AutomorphicWitness<S>>,
    unit: &S,
    oracle: &O,
    mode: Mode,
    search: &PointSearchSpec,
) -> Result<NormalizationCert<S>>
where
    S: ExtensionElement,
    O: DependenceOracle<S> + ?Sized,
{
    let sigma = common_twist(&gens, unit, mode)?;
    let k0 = gens.len();
    let r0 = SkewRing::constant(&sigma, k0);
    Substitution::new(&r0, gens.clone(), unit.clone())?;

    let mut current: Vec<GenRecord<S>> = gens
        .iter()
        .enumerate()
        .map(|(i, w)| GenRecord { expr: SkewPoly::var(&r0, i), value: w.element.clone(), auto: sigma.clone() })
        .collect();
    let mut transforms = Vec::new();
    let mut eliminated = Vec::new();
    let independence = loop {
        let k = current.len();
        if k == 0 {
            break Independence::NoGenerators;
        }
        let rk = SkewRing::constant(&sigma, k);
        let values: Vec<S> = current.iter().map(|g| g.value.clone()).collect();
        let f = match oracle.find_relation(&rk, &values, unit)? {
            OracleAnswer::IndependentUpTo(b) => break Independence::IndependentUpTo(b),
            OracleAnswer::Relation(f) => f,
        };
        if f.ring().as_ref() != rk.as_ref() || f.total_degree() < 1 {
            return Err(Error::OracleInconsistent);
        }
        let f = f.with_ring(&rk);
        let sub = Substitution::new_unchecked(&rk, values, unit.clone());
        if !sub.apply(&f)?.is_zero() {
            return Err(Error::OracleInconsistent);
        }
        let monic = match mode {
            Mode::Constant => monicize_linear(&f, search)?,
            Mode::Central => monicize_dadic(&f)?,
        };
        let last = current[k - 1].clone();
        let mut next = Vec::with_capacity(k - 1);
        for (i, cur) in current.iter().take(k - 1).enumerate() {
            let (expr, value) = match &monic.shift {
                ShiftKind::Linear { a } => {
                    (&cur.expr - &last.expr.scale_left(&a[i]), cur.value.sub(&last.value.scale_left(&a[i])))
                }
                ShiftKind::Power { d } => {
                    let e = d.pow((k - 1 - i) as u32) as u32;
                    (&cur.expr - &last.expr.pow(e), cur.value.sub(&last.value.pow(e)))
                }
            };
            next.push(GenRecord { expr, value, auto: sigma.clone() });
        }
        let mut pt: Vec<S> = next.iter().map(|g| g.value.clone()).collect();
        pt.push(last.value.clone());
        if !Substitution::new_unchecked(&rk, pt, unit.clone()).apply(&monic.g)?.is_zero() {
            return Err(Error::CheckFailed(format!("transformed relation {} does not vanish", monic.g)));
        }
        transforms.push(TransformStep { level: k, relation: f, monic });
        eliminated.push(last);
        current = next;
    };

    let bounds: Vec<u32> = transforms.iter().map(|t| t.monic.m).collect();
    let module_gens = exponent_box(&bounds)
        .into_iter()
        .map(|ex| {
            let mut expr = SkewPoly::one(&r0);
            let mut value = unit.clone();
            for (g, &e) in eliminated.iter().zip(&ex) {
                expr = &expr * &g.expr.pow(e);
                value = value.mul(&g.value.pow(e));
            }
            ModuleGen { exponents: ex, expr, value }
        })
        .collect();
    Ok(NormalizationCert {
        mode,
        sigma,
        inputs: gens.into_iter().map(|w| w.element).collect(),
        transforms,
        eliminated,
        independent_gens: current,
        independence,
        module_gens,
    })
}

/// Remainder of h on division by g, monic of degree m in the last variable.
pub fn monic_remainder(h: &SkewPoly, g: &SkewPoly, m: u32) -> SkewPoly {
    let ring = h.ring();
    let last = ring.n() - 1;
    let mut rem = h.clone();
    loop {
        let e = rem.degree_in(last);
        if e < m as i64 {
            return rem;
        }
        let (exp, c) = rem
            .terms()
            .iter()
            .find(|(x, _)| x.0[last] as i64 == e)
            .map(|(x, c)| (x.clone(), c.clone()))
            .expect("degree is attained");
        let mut q = exp;
        q.0[last] -= m;
        rem = &rem - &(&SkewPoly::monomial(ring, q, c) * g);
    }
}

/// Writes h (a polynomial in the generators before `steps[0]`) as
/// Σ c_key(independent gens)·module_gen(key).
pub fn reduce_to_module(
    steps: &[TransformStep],
    sigma: &Automorphism,
    h: &SkewPoly,
) -> Result<BTreeMap<Vec<u32>, SkewPoly>> {
    let Some(step) = steps.first() else {
        return Ok(BTreeMap::from([(Vec::new(), h.clone())]));
    };
    let k = step.level;
    let shifted = step.monic.shift.apply(h)?;
    let rem = monic_remainder(&shifted, &step.monic.g, step.monic.m);
    let lower = SkewRing::constant(sigma, k - 1);
    let mut out: BTreeMap<Vec<u32>, SkewPoly> = BTreeMap::new();
    for (j, part) in rem.decompose_last().into_iter().enumerate() {
        if part.is_zero() {
            continue;
        }
        for (key, c) in reduce_to_module(&steps[1..], sigma, &part.restrict(&lower)?)? {
            let mut full = vec![j as u32];
            full.extend(key);
            out.entry(full).and_modify(|acc| *acc = &*acc + &c).or_insert(c);
        }
    }
    out.retain(|_, c| !c.is_zero());
    Ok(out)
}

/// Outcome of [`verify_certificate`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CertReport {
    pub max_degree: u32,
    pub monomials_checked: usize,
    pub generators_automorphic: bool,
    pub generators_commute: bool,
    /// Constructive reduction by the monic relations reproduces every monomial.
    pub reduction_route: bool,
    /// An independent left linear solve over module generators times
    /// monomials in the independent generators reproduces every monomial.
    pub linear_route: bool,
    pub coefficient_degree: i64,
}

impl CertReport {
    pub fn ok(&self) -> bool {
        self.generators_automorphic && self.generators_commute && self.reduction_route && self.linear_route
    }
}

/// Checks that every monomial of degree ≤ `max_degree` in the input
/// generators lies in Σ D[independent gens]·module_gens, by two routes.
pub fn verify_certificate<S: ExtensionElement>(
    cert: &NormalizationCert<S>,
    unit: &S,
    max_degree: u32,
) -> Result<CertReport> {
    let sigma = &cert.sigma;
    let k0 = cert.inputs.len();
    let r0 = SkewRing::constant(sigma, k0);
    let inputs = Substitution::new_unchecked(&r0, cert.inputs.clone(), unit.clone());
    let ind_vals: Vec<S> = cert.independent_gens.iter().map(|g| g.value.clone()).collect();
    let r = ind_vals.len();
    let rr = SkewRing::constant(sigma, r);
    let ind = Substitution::new_unchecked(&rr, ind_vals.clone(), unit.clone());

    let generators_automorphic =
        ind_vals.iter().all(|v| check_automorphic(v).map(|t| t.agrees_on_generators(sigma)).unwrap_or(false));
    let generators_commute =
        ind_vals.iter().enumerate().all(|(i, a)| ind_vals[i + 1..].iter().all(|b| a.mul(b) == b.mul(a)));

    let mg_index: HashMap<&Vec<u32>, &S> = cert.module_gens.iter().map(|m| (&m.exponents, &m.value)).collect();
    let monomials = ExpVec::up_to_degree(k0, max_degree);
    let mut reduction_route = true;
    let mut coefficient_degree = -1i64;
    let mut targets = Vec::with_capacity(monomials.len());
    for e in &monomials {
        let target = inputs.monomial(e);
        let h = SkewPoly::monomial(&r0, e.clone(), DElem::one(unit.tag()));
        let parts = reduce_to_module(&cert.transforms, sigma, &h)?;
        let mut acc = unit.zero_like();
        for (key, c) in &parts {
            coefficient_degree = coefficient_degree.max(c.total_degree());
            match mg_index.get(key) {
                Some(mg) => acc = acc.add(&ind.apply(&c.with_ring(&rr))?.mul(mg)),
                None => reduction_route = false,
            }
        }
        if acc != target {
            reduction_route = false;
        }
        targets.push(target);
    }

    let b = coefficient_degree.max(0) as u32;
    let mut coords = Coords::new();
    let mut ech = LeftEchelon::new(unit.tag());
    let mut row_vals = Vec::new();
    for j in ExpVec::up_to_degree(r, b) {
        let base = ind.monomial(&j);
        for mg in &cert.module_gens {
            let v = base.mul(&mg.value);
            ech.insert(coords.row(&v))?;
            row_vals.push(v);
        }
    }
    let mut linear_route = true;
    for t in &targets {
        match ech.solve(&coords.row(t)) {
            Some(x) => {
                let mut rebuilt = unit.zero_like();
                for (i, c) in &x {
                    rebuilt = rebuilt.add(&row_vals[*i].scale_left(c));
                }
                if rebuilt != *t {
                    linear_route = false;
                }
            }
            None => linear_route = false,
        }
    }
    Ok(CertReport {
        max_degree,
        monomials_checked: monomials.len(),
        generators_automorphic: generators_automorphic || r == 0,
        generators_commute,
        reduction_route,
        linear_route,
        coefficient_degree,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::divalg::AlgebraTag;

    fn witnesses(elems: Vec<SkewPoly>) -> Vec<AutomorphicWitness<SkewPoly>> {
        elems.into_iter().map(|e| AutomorphicWitness::infer(e).unwrap()).collect()
    }

    #[test]
    fn free_generators_need_no_transform() {
        let r = SkewRing::central(AlgebraTag::QX, 2);
        let gens = witnesses(vec![SkewPoly::var(&r, 0), SkewPoly::var(&r, 1)]);
        let oracle = BoundedSearchOracle { max_degree: 3 };
        let cert = normalize(gens, &SkewPoly::one(&r), &oracle, Mode::Central, &PointSearchSpec::Incremental).unwrap();
        assert!(cert.transforms.is_empty());
        assert_eq!(cert.independent_gens.len(), 2);
        assert_eq!(cert.module_gens.len(), 1);
        assert_eq!(cert.independence, Independence::IndependentUpTo(3));
        assert!(verify_certificate(&cert, &SkewPoly::one(&r), 4).unwrap().ok());
    }

    #[test]
    fn zero_generators() {
        let unit = DElem::one(AlgebraTag::HQ);
        let oracle = BoundedSearchOracle { max_degree: 2 };
        let cert = normalize(Vec::new(), &unit, &oracle, Mode::Constant, &PointSearchSpec::Incremental).unwrap();
        assert_eq!(cert.independence, Independence::NoGenerators);
        assert_eq!(cert.module_gens.len(), 1);
    }

    #[test]
    fn square_and_cube() {
        let r = SkewRing::central(AlgebraTag::QX, 1);
        let s = SkewPoly::var(&r, 0);
        let gens = witnesses(vec![s.pow(2), s.pow(3)]);
        let unit = SkewPoly::one(&r);
        for mode in [Mode::Central, Mode::Constant] {
            let cert = normalize(
                gens.clone(),
                &unit,
                &BoundedSearchOracle { max_degree: 4 },
                mode,
                &PointSearchSpec::Incremental,
            )
            .unwrap();
            assert_eq!(cert.transforms.len(), 1);
            assert_eq!(cert.independent_gens.len(), 1);
            let rep = verify_certificate(&cert, &unit, 6).unwrap();
            assert!(rep.ok(), "{rep:?}");
        }
    }

    #[test]
    fn mode_mismatch() {
        let r = SkewRing::new(AlgebraTag::QX, vec![Automorphism::shift(crate::divalg::rat::rat(1)); 1]).unwrap();
        let gens = witnesses(vec![SkewPoly::var(&r, 0)]);
        let unit = SkewPoly::one(&r);
        let res = normalize(
            gens,
            &unit,
            &BoundedSearchOracle { max_degree: 2 },
            Mode::Central,
            &PointSearchSpec::Incremental,
        );
        assert!(matches!(res, Err(Error::ModeMismatch(_))));
    }

    struct Liar;
    impl DependenceOracle<SkewPoly> for Liar {
        fn find_relation(&self, ring: &Arc<SkewRing>, _: &[SkewPoly], _: &SkewPoly) -> Result<OracleAnswer> {
            Ok(OracleAnswer::Relation(SkewPoly::var(ring, 0)))
        }
    }

    #[test]
    fn oracle_relations_are_checked() {
        let r = SkewRing::central(AlgebraTag::QX, 1);
        let gens = witnesses(vec![SkewPoly::var(&r, 0)]);
        let res = normalize(gens, &SkewPoly::one(&r), &Liar, Mode::Central, &PointSearchSpec::Incremental);
        assert_eq!(res, Err(Error::OracleInconsistent));
    }
}
