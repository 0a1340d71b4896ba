//! Making a relation monic in the last variable.

use serde::Serialize;

use super::search::{find_projective_point, PointSearchSpec};
use crate::divalg::DElem;
use crate::error::{Error, Result};
use crate::skewpoly::{ExpVec, SkewPoly};
use crate::subst::{linear_shift, power_shift_signed};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum ShiftKind {
    /// tᵢ ↦ tᵢ + aᵢ·tₙ.
    Linear { a: Vec<DElem> },
    /// tᵢ ↦ tᵢ + tₙ^{d^{n−i}}.
    Power { d: u64 },
}

impl ShiftKind {
    /// Applies the variable change to a polynomial over the same ring.
    pub fn apply(&self, f: &SkewPoly) -> Result<SkewPoly> {
        match self {
            ShiftKind::Linear { a } if a.is_empty() => Ok(f.clone()),
            ShiftKind::Linear { a } => linear_shift(f, a),
            ShiftKind::Power { d } => Ok(power_shift_signed(f, *d, false)),
        }
    }
}

/// g = scale·shift(f), monic of degree m in the last variable.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MonicizationResult {
    pub scale: DElem,
    pub shift: ShiftKind,
    pub g: SkewPoly,
    pub m: u32,
}

fn finish(f: &SkewPoly, scale: DElem, shift: ShiftKind, m: u32) -> Result<MonicizationResult> {
    let g = shift.apply(f)?.scale_left(&scale);
    let n = f.ring().n();
    let deg_ok = n == 0 || g.degree_in(n - 1) == m as i64;
    if !g.is_monic_in_last() || !deg_ok {
        return Err(Error::CheckFailed(format!("monicization of {f} produced {g}, not monic of degree {m}")));
    }
    Ok(MonicizationResult { scale, shift, g, m })
}

fn constant_case(f: &SkewPoly) -> Result<MonicizationResult> {
    let c = f.coeff(&ExpVec::zero(f.ring().n()));
    finish(f, c.inv()?, ShiftKind::Linear { a: Vec::new() }, 0)
}

/// Linear change of variables by a point where the top form is nonzero,
/// then left scaling by the inverse of that value.
pub fn monicize_linear(f: &SkewPoly, search: &PointSearchSpec) -> Result<MonicizationResult> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let n = f.ring().n();
    if n == 0 {
        return constant_case(f);
    }
    let m = f.total_degree() as u32;
    let top = f.leading_form()?;
    let point = find_projective_point(&top, search)?;
    let value = top.eval_central(&point)?;
    let a = point[..n - 1].to_vec();
    finish(f, value.inv()?, ShiftKind::Linear { a }, m)
}

/// Weight Σ iⱼ·d^{n−j} of an exponent under the d-adic shift.
pub fn dadic_weight(e: &ExpVec, d: u64) -> u64 {
    let n = e.len();
    e.0.iter().enumerate().map(|(j, &k)| k as u64 * d.pow((n - 1 - j) as u32)).sum()
}

/// d-adic change of variables with d = 1 + deg f (at least 2), then left
/// scaling by the inverse of the coefficient of the heaviest monomial.
pub fn monicize_dadic(f: &SkewPoly) -> Result<MonicizationResult> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if !f.ring().is_central() {
        return Err(Error::NonCentralRing);
    }
    if f.ring().n() == 0 {
        return constant_case(f);
    }
    let d = (1 + f.total_degree()).max(2) as u64;
    let (top, coef) = f.terms().iter().max_by_key(|(e, _)| dadic_weight(e, d)).expect("nonzero polynomial has terms");
    let m = dadic_weight(top, d);
    let m = u32::try_from(m).map_err(|_| Error::CheckFailed(format!("d-adic degree {m} overflows")))?;
    finish(f, coef.inv()?, ShiftKind::Power { d }, m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::divalg::AlgebraTag;
    use crate::skewpoly::SkewRing;

    #[test]
    fn linear_examples() {
        let r = SkewRing::central(AlgebraTag::QX, 2);
        let (t1, t2) = (SkewPoly::var(&r, 0), SkewPoly::var(&r, 1));
        let res = monicize_linear(&(&t1 * &t2), &PointSearchSpec::Incremental).unwrap();
        assert_eq!(res.shift, ShiftKind::Linear { a: vec![DElem::one(AlgebraTag::QX)] });
        assert!(res.scale.is_one());
        assert_eq!(res.g, &t2.pow(2) + &(&t1 * &t2));
        assert_eq!(res.m, 2);

        let monic = &t2.pow(3) + &t1;
        let res = monicize_linear(&monic, &PointSearchSpec::Incremental).unwrap();
        assert_eq!(res.shift, ShiftKind::Linear { a: vec![DElem::zero(AlgebraTag::QX)] });
        assert_eq!(res.g, monic);
    }

    #[test]
    fn linear_over_quaternions() {
        let r = SkewRing::central(AlgebraTag::HQ, 2);
        let i = DElem::quat(0, 1, 0, 0);
        let f = (&SkewPoly::var(&r, 0) * &SkewPoly::var(&r, 1)).scale_left(&i);
        let res = monicize_linear(&f, &PointSearchSpec::Incremental).unwrap();
        assert_eq!(res.scale, DElem::quat(0, -1, 0, 0));
        assert!(res.g.is_monic_in_last());
    }

    #[test]
    fn dadic_examples() {
        let r = SkewRing::central(AlgebraTag::QX, 2);
        let (t1, t2) = (SkewPoly::var(&r, 0), SkewPoly::var(&r, 1));
        let res = monicize_dadic(&(&t1 * &t2)).unwrap();
        assert_eq!(res.g, &t2.pow(4) + &(&t1 * &t2));
        assert_eq!((res.m, res.scale.is_one()), (4, true));

        let res = monicize_dadic(&(&t1 + &t2)).unwrap();
        assert_eq!(res.g, &(&t2.pow(2) + &t1) + &t2);
        assert_eq!(res.m, 2);

        let r1 = SkewRing::central(AlgebraTag::QX, 1);
        let f = SkewPoly::var(&r1, 0).scale_left(&DElem::int(AlgebraTag::QX, 5));
        let res = monicize_dadic(&f).unwrap();
        assert_eq!(res.g, SkewPoly::var(&r1, 0));
        assert_eq!(res.scale, DElem::rational(AlgebraTag::QX, crate::divalg::rat::ratio(1, 5)));
    }
}
