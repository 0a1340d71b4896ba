//! ℍ(ℚ) is finite over its center ℚ, so coefficients split into rational
//! components recoverable by two-sided products with the basis.

use std::sync::{Arc, OnceLock};

use num_traits::{One, Zero};
use serde::Serialize;

use crate::divalg::rat::format_rat;
use crate::divalg::{left_solve, AlgebraTag, DElem, DMatrix, Quat, Rat, Solve};
use crate::error::{Error, Result};
use crate::skewpoly::{SkewPoly, SkewRing};

/// b[i][s][t] with component_i(q) = Σ b[i][s][t]·v_s·q·v_t, v = (1, i, j, k).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExtractionConstants {
    #[serde(serialize_with = "table_ser")]
    pub table: Vec<Vec<Vec<Rat>>>,
}

fn table_ser<S: serde::Serializer>(t: &[Vec<Vec<Rat>>], s: S) -> std::result::Result<S::Ok, S::Error> {
    let strings: Vec<Vec<Vec<String>>> =
        t.iter().map(|m| m.iter().map(|r| r.iter().map(format_rat).collect()).collect()).collect();
    strings.serialize(s)
}

fn basis() -> [DElem; 4] {
    Quat::basis().map(DElem::Quat)
}

fn real(r: Rat) -> DElem {
    DElem::Quat(Quat::real(r))
}

impl ExtractionConstants {
    pub fn component(&self, i: usize, q: &DElem) -> DElem {
        let v = basis();
        let mut acc = DElem::zero(AlgebraTag::HQ);
        for (s, vs) in v.iter().enumerate() {
            for (t, vt) in v.iter().enumerate() {
                let b = &self.table[i][s][t];
                if !b.is_zero() {
                    acc = &acc + &(&(&real(b.clone()) * vs) * &(q * vt));
                }
            }
        }
        acc
    }
}

/// Solves the 16 × 16 system per component: unknowns b_{st}, equations
/// indexed by (basis element v_r, quaternion coordinate).
pub fn compute_extraction_constants() -> Result<ExtractionConstants> {
    let v = basis();
    let mut rows = Vec::with_capacity(16);
    for vs in &v {
        for vt in &v {
            let mut row = Vec::with_capacity(16);
            for vr in &v {
                let p = &(vs * vr) * vt;
                let q = p.as_quat().expect("quaternion product");
                row.extend(q.components().iter().map(|c| real((*c).clone())));
            }
            rows.push(row);
        }
    }
    let a = DMatrix::new(AlgebraTag::HQ, rows)?;
    let mut table = Vec::with_capacity(4);
    for i in 0..4 {
        let b: Vec<DElem> = (0..16).map(|col| real(if col == 4 * i { Rat::one() } else { Rat::zero() })).collect();
        let Solve::Solution(x) = left_solve(&a, &b)? else {
            return Err(Error::CheckFailed(format!("no extraction constants for component {i}")));
        };
        let flat: Vec<Rat> = x
            .iter()
            .map(|e| e.as_rational().ok_or_else(|| Error::CheckFailed("non-rational extraction constant".into())))
            .collect::<Result<_>>()?;
        table.push(flat.chunks(4).map(<[Rat]>::to_vec).collect());
    }
    Ok(ExtractionConstants { table })
}

static CONSTANTS: OnceLock<ExtractionConstants> = OnceLock::new();

pub fn extraction_constants() -> &'static ExtractionConstants {
    CONSTANTS.get_or_init(|| compute_extraction_constants().expect("the extraction system is nonsingular"))
}

fn require_central(ring: &SkewRing) -> Result<()> {
    if ring.tag() != AlgebraTag::HQ {
        return Err(Error::TagMismatch(ring.tag(), AlgebraTag::HQ));
    }
    if !ring.is_central() {
        return Err(Error::NonCentralRing);
    }
    Ok(())
}

/// Σ b_{st}·v_s·p·v_t computed by ring multiplication.
pub fn extract(p: &SkewPoly, i: usize) -> SkewPoly {
    let ring = p.ring();
    let consts = extraction_constants();
    let v = basis();
    let mut acc = SkewPoly::zero(ring);
    for (s, vs) in v.iter().enumerate() {
        for (t, vt) in v.iter().enumerate() {
            let b = &consts.table[i][s][t];
            if b.is_zero() {
                continue;
            }
            let left = SkewPoly::constant(ring, &real(b.clone()) * vs);
            let right = SkewPoly::constant(ring, vt.clone());
            acc = &acc + &(&(&left * p) * &right);
        }
    }
    acc
}

/// Σ pᵢ·vᵢ for central pᵢ.
pub fn recombine(ring: &Arc<SkewRing>, parts: &[SkewPoly]) -> SkewPoly {
    parts.iter().zip(basis()).fold(SkewPoly::zero(ring), |acc, (p, v)| &acc + &p.scale_right(&v))
}

fn is_rational_poly(p: &SkewPoly) -> bool {
    p.terms().values().all(|c| c.as_rational().is_some())
}

/// (p₁, p₂, p₃, p₄) with rational coefficients and p = Σ pᵢ·vᵢ.
pub fn central_components(p: &SkewPoly) -> Result<[SkewPoly; 4]> {
    require_central(p.ring())?;
    let ring = p.ring();
    let parts: [SkewPoly; 4] = std::array::from_fn(|i| {
        let terms = p.terms().iter().map(|(e, c)| {
            let q = c.as_quat().expect("quaternion coefficient");
            (e.clone(), real(q.component(i).clone()))
        });
        SkewPoly::from_terms(ring, terms).expect("same ring")
    });
    if recombine(ring, &parts) != *p {
        return Err(Error::CheckFailed(format!("components of {p} do not recombine")));
    }
    for (i, part) in parts.iter().enumerate() {
        if !is_rational_poly(part) || extract(p, i) != *part {
            return Err(Error::CheckFailed(format!("component {} of {p} fails the extraction identity", i + 1)));
        }
    }
    Ok(parts)
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Centralized {
    /// Distinct nonzero central components.
    pub central: Vec<SkewPoly>,
    /// For each input, (basis index, position in `central`) with a = Σ central·v.
    pub rebuild: Vec<Vec<(usize, usize)>>,
    /// For each central element, (input index, component index) it is extracted from.
    pub extract: Vec<(usize, usize)>,
}

/// B with D[A] = D[B] and every element of B central.
pub fn centralize_generators(gens: &[SkewPoly]) -> Result<Centralized> {
    let mut central: Vec<SkewPoly> = Vec::new();
    let mut rebuild = Vec::with_capacity(gens.len());
    let mut source = Vec::new();
    for (a_idx, a) in gens.iter().enumerate() {
        if a_idx > 0 && !a.same_ring(&gens[0]) {
            return Err(Error::RingMismatch);
        }
        let parts = central_components(a)?;
        let mut uses = Vec::new();
        for (i, p) in parts.into_iter().enumerate() {
            if p.is_zero() {
                continue;
            }
            let pos = match central.iter().position(|b| *b == p) {
                Some(pos) => pos,
                None => {
                    central.push(p);
                    source.push((a_idx, i));
                    central.len() - 1
                }
            };
            uses.push((i, pos));
        }
        rebuild.push(uses);
    }
    let out = Centralized { central, rebuild, extract: source };
    if !verify_centralized(gens, &out) {
        return Err(Error::CheckFailed("centralization certificate does not verify".into()));
    }
    Ok(out)
}

/// Expands both directions of the membership certificate.
pub fn verify_centralized(gens: &[SkewPoly], c: &Centralized) -> bool {
    let Some(first) = gens.first() else {
        return c.central.is_empty();
    };
    let ring = first.ring();
    let v = basis();
    let forward = gens.iter().zip(&c.rebuild).all(|(a, uses)| {
        let sum = uses.iter().fold(SkewPoly::zero(ring), |acc, &(i, pos)| &acc + &c.central[pos].scale_right(&v[i]));
        sum == *a
    });
    let backward = c
        .central
        .iter()
        .zip(&c.extract)
        .all(|(b, &(a_idx, i))| b.ring().is_central() && is_rational_poly(b) && extract(&gens[a_idx], i) == *b);
    forward && backward && c.rebuild.len() == gens.len() && c.extract.len() == c.central.len()
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum PointIdeal {
    /// Every coordinate is rational.
    TwoSidedReal,
    /// (tᵢ − aᵢ)·b = b·(tᵢ − b⁻¹aᵢb), so aᵢ − b⁻¹aᵢb is a nonzero constant in
    /// the two-sided ideal.
    CommutingNonReal {
        index: usize,
        b: DElem,
        conjugated: DElem,
        unit_in_ideal: DElem,
    },
    NonCommuting {
        i: usize,
        j: usize,
    },
}

/// Whether the left ideal generated by tᵢ − aᵢ is two-sided and proper.
pub fn point_ideal_two_sided(a: &[DElem]) -> Result<PointIdeal> {
    for x in a {
        x.check_tag(AlgebraTag::HQ)?;
    }
    for (i, x) in a.iter().enumerate() {
        for (j, y) in a.iter().enumerate().skip(i + 1) {
            if x * y != y * x {
                return Ok(PointIdeal::NonCommuting { i, j });
            }
        }
    }
    let Some(index) = a.iter().position(|x| x.as_rational().is_none()) else {
        return Ok(PointIdeal::TwoSidedReal);
    };
    let ai = &a[index];
    let b = basis()[1..]
        .iter()
        .find(|b| (ai * b) != (*b * ai))
        .cloned()
        .expect("a non-real quaternion fails to commute with i, j or k");
    let conjugated = &(&b.inv()? * ai) * &b;
    let unit_in_ideal = ai - &conjugated;

    let ring = SkewRing::central(AlgebraTag::HQ, a.len());
    let t = SkewPoly::var(&ring, index);
    let lhs = &(&t - &SkewPoly::constant(&ring, ai.clone())) * &SkewPoly::constant(&ring, b.clone());
    let rhs = &SkewPoly::constant(&ring, b.clone()) * &(&t - &SkewPoly::constant(&ring, conjugated.clone()));
    if lhs != rhs || unit_in_ideal.is_zero() {
        return Err(Error::CheckFailed("conjugation chain does not verify".into()));
    }
    Ok(PointIdeal::CommutingNonReal { index, b, conjugated, unit_in_ideal })
}
