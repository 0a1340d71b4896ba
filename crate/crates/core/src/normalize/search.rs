//! Nonvanishing points of polynomials in central variables.

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::divalg::{DElem, Rat};
use crate::error::{Error, Result};
use crate::skewpoly::{ExpVec, SkewPoly, SkewRing};

/// Where to look for a point: explicit finite grids, or an unbounded
/// deterministic walk over ℚ.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "mode", rename_all = "lowercase", deny_unknown_fields)]
pub enum PointSearchSpec {
    Grid { grids: Vec<Vec<DElem>> },
    Incremental,
}

/// Evaluation budget for incremental mode.
pub const INCREMENTAL_LIMIT: usize = 1_000_000;

/// 0, 1, −1, 2, −2, …
pub fn spiral(i: usize) -> Rat {
    let k = i.div_ceil(2) as i64;
    let v = if i % 2 == 1 { k } else { -k };
    Rat::from_integer(BigInt::from(v))
}

/// The graded-lex greatest monomial of top degree whose exponents are all
/// below the grid sizes, or the greatest one overall when none fits.
pub fn target_monomial(f: &SkewPoly, sizes: Option<&[usize]>) -> Option<ExpVec> {
    let top = f.total_degree();
    let mut tops = f.terms().keys().rev().filter(|e| e.degree() as i64 == top);
    match sizes {
        None => tops.next().cloned(),
        Some(sz) => {
            let all: Vec<&ExpVec> = tops.collect();
            all.iter()
                .find(|e| e.0.iter().zip(sz).all(|(&k, &s)| s > k as usize))
                .or_else(|| all.first())
                .map(|e| (*e).clone())
        }
    }
}

fn dedup(grid: &[DElem]) -> Vec<DElem> {
    let mut out: Vec<DElem> = Vec::new();
    for g in grid {
        if !out.contains(g) {
            out.push(g.clone());
        }
    }
    out
}

/// Odometer over index ranges, last coordinate fastest.
fn odometer(sizes: &[usize], mut visit: impl FnMut(&[usize]) -> bool) -> bool {
    if sizes.contains(&0) {
        return false;
    }
    let mut idx = vec![0usize; sizes.len()];
    loop {
        if visit(&idx) {
            return true;
        }
        let mut pos = sizes.len();
        loop {
            if pos == 0 {
                return false;
            }
            pos -= 1;
            idx[pos] += 1;
            if idx[pos] < sizes[pos] {
                break;
            }
            idx[pos] = 0;
        }
    }
}

/// A point of F^n at which f does not vanish.
///
/// Grid mode first checks that some top-degree monomial t^k has
/// |Aᵢ| > kᵢ for all i; such grids always contain a nonvanishing point.
pub fn find_nonvanishing(f: &SkewPoly, spec: &PointSearchSpec) -> Result<Vec<DElem>> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let n = f.ring().n();
    let tag = f.ring().tag();
    match spec {
        PointSearchSpec::Grid { grids } => {
            if grids.len() != n {
                return Err(Error::DimensionMismatch(format!("{} grids supplied for {n} variables", grids.len())));
            }
            for (i, g) in grids.iter().enumerate() {
                for a in g {
                    a.check_tag(tag)?;
                    if !a.is_central() {
                        return Err(Error::NotInF(i));
                    }
                }
            }
            let grids: Vec<Vec<DElem>> = grids.iter().map(|g| dedup(g)).collect();
            let sizes: Vec<usize> = grids.iter().map(Vec::len).collect();
            let target = target_monomial(f, Some(&sizes)).expect("nonzero polynomial has a top monomial");
            if let Some(i) = (0..n).find(|&i| sizes[i] <= target.0[i] as usize) {
                return Err(Error::GridTooSmall(format!(
                    "grid {} has {} points but the target monomial {:?} needs more than {}",
                    i + 1,
                    sizes[i],
                    target.0,
                    target.0[i]
                )));
            }
            let mut found = None;
            let mut err = None;
            odometer(&sizes, |idx| {
                let pt: Vec<DElem> = idx.iter().enumerate().map(|(i, &j)| grids[i][j].clone()).collect();
                match f.eval_central(&pt) {
                    Ok(v) if !v.is_zero() => {
                        found = Some(pt);
                        true
                    }
                    Ok(_) => false,
                    Err(e) => {
                        err = Some(e);
                        true
                    }
                }
            });
            if let Some(e) = err {
                return Err(e);
            }
            found.ok_or_else(|| Error::CheckFailed("grid search failed despite the size bound".into()))
        }
        PointSearchSpec::Incremental => {
            if n == 0 {
                return Ok(Vec::new());
            }
            let mut evals = 0usize;
            for r in 0.. {
                let sizes = vec![r + 1; n];
                let mut found = None;
                odometer(&sizes, |idx| {
                    if !idx.contains(&r) {
                        return false;
                    }
                    evals += 1;
                    let pt: Vec<DElem> = idx.iter().map(|&j| DElem::rational(tag, spiral(j))).collect();
                    let v = f.eval_central(&pt).expect("point matches ring");
                    if !v.is_zero() {
                        found = Some(pt);
                        return true;
                    }
                    evals >= INCREMENTAL_LIMIT
                });
                if let Some(pt) = found {
                    return Ok(pt);
                }
                if evals >= INCREMENTAL_LIMIT {
                    break;
                }
            }
            Err(Error::SearchExhausted(format!("no nonvanishing point within {INCREMENTAL_LIMIT} evaluations")))
        }
    }
}

/// A point (a₁,…,aₙ₋₁, 1) where the homogeneous f does not vanish.
pub fn find_projective_point(f: &SkewPoly, spec: &PointSearchSpec) -> Result<Vec<DElem>> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if !f.is_homogeneous() {
        return Err(Error::NotHomogeneous);
    }
    let n = f.ring().n();
    if n == 0 {
        return Err(Error::DimensionMismatch("projective point needs at least one variable".into()));
    }
    let ring = SkewRing::central(f.ring().tag(), n - 1);
    let dehom = SkewPoly::from_terms(&ring, f.terms().iter().map(|(e, c)| (ExpVec(e.0[..n - 1].to_vec()), c.clone())))?;
    let mut pt = find_nonvanishing(&dehom, spec)?;
    pt.push(DElem::one(f.ring().tag()));
    Ok(pt)
}
