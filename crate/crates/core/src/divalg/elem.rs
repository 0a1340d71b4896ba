use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use super::quat::Quat;
use super::rat::Rat;
use super::ratfun::{QPoly, RatFun};
use crate::error::{Error, Result};

/// Which concrete division algebra an element lives in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum AlgebraTag {
    /// Rational quaternions ℍ(ℚ).
    HQ,
    /// Rational functions ℚ(x).
    QX,
}

impl fmt::Display for AlgebraTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            AlgebraTag::HQ => "HQ",
            AlgebraTag::QX => "QX",
        })
    }
}

/// An element of the active division algebra.
///
/// The operator impls panic when tags differ; use the `try_*` methods at
/// trust boundaries. Every container in this crate checks tags on
/// construction, so internal arithmetic never mixes algebras.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(untagged)]
pub enum DElem {
    Quat(Quat),
    RatFun(RatFun),
}

impl DElem {
    pub fn tag(&self) -> AlgebraTag {
        match self {
            DElem::Quat(_) => AlgebraTag::HQ,
            DElem::RatFun(_) => AlgebraTag::QX,
        }
    }

    pub fn zero(tag: AlgebraTag) -> Self {
        DElem::rational(tag, Rat::from_integer(0.into()))
    }

    pub fn one(tag: AlgebraTag) -> Self {
        DElem::rational(tag, Rat::from_integer(1.into()))
    }

    pub fn rational(tag: AlgebraTag, r: Rat) -> Self {
        match tag {
            AlgebraTag::HQ => DElem::Quat(Quat::real(r)),
            AlgebraTag::QX => DElem::RatFun(RatFun::constant(r)),
        }
    }

    pub fn int(tag: AlgebraTag, n: i64) -> Self {
        DElem::rational(tag, super::rat::rat(n))
    }

    /// The element x of ℚ(x).
    pub fn x() -> Self {
        DElem::RatFun(RatFun::x())
    }

    pub fn qx_poly(coeffs: &[i64]) -> Self {
        DElem::RatFun(RatFun::poly(QPoly::from_ints(coeffs)))
    }

    pub fn quat(a: i64, b: i64, c: i64, d: i64) -> Self {
        DElem::Quat(Quat::from_ints(a, b, c, d))
    }

    pub fn is_zero(&self) -> bool {
        match self {
            DElem::Quat(q) => q.is_zero(),
            DElem::RatFun(r) => r.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        *self == DElem::one(self.tag())
    }

    /// The rational value when the element lies in ℚ.
    pub fn as_rational(&self) -> Option<Rat> {
        match self {
            DElem::Quat(q) if q.is_real() => Some(q.a.clone()),
            DElem::RatFun(r) if r.is_constant() => Some(r.num().coeff(0)),
            _ => None,
        }
    }

    pub fn as_quat(&self) -> Option<&Quat> {
        match self {
            DElem::Quat(q) => Some(q),
            _ => None,
        }
    }

    pub fn as_ratfun(&self) -> Option<&RatFun> {
        match self {
            DElem::RatFun(r) => Some(r),
            _ => None,
        }
    }

    pub fn check_tag(&self, tag: AlgebraTag) -> Result<()> {
        if self.tag() == tag {
            Ok(())
        } else {
            Err(Error::TagMismatch(self.tag(), tag))
        }
    }

    fn same(&self, o: &DElem) -> Result<()> {
        if self.tag() == o.tag() {
            Ok(())
        } else {
            Err(Error::TagMismatch(self.tag(), o.tag()))
        }
    }

    pub fn try_add(&self, o: &DElem) -> Result<DElem> {
        self.same(o)?;
        Ok(self + o)
    }

    pub fn try_sub(&self, o: &DElem) -> Result<DElem> {
        self.same(o)?;
        Ok(self - o)
    }

    pub fn try_mul(&self, o: &DElem) -> Result<DElem> {
        self.same(o)?;
        Ok(self * o)
    }

    pub fn inv(&self) -> Result<DElem> {
        match self {
            DElem::Quat(q) => q.inv().map(DElem::Quat),
            DElem::RatFun(r) => r.inv().map(DElem::RatFun),
        }
        .ok_or(Error::DivisionByZero)
    }

    pub fn scale(&self, r: &Rat) -> DElem {
        match self {
            DElem::Quat(q) => DElem::Quat(q.scale(r)),
            DElem::RatFun(f) => DElem::RatFun(f.scale(r)),
        }
    }

    pub fn pow(&self, e: u64) -> DElem {
        let mut acc = DElem::one(self.tag());
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Central elements: ℚ inside ℍ(ℚ), everything in the field ℚ(x).
    pub fn is_central(&self) -> bool {
        match self {
            DElem::Quat(q) => q.is_real(),
            DElem::RatFun(_) => true,
        }
    }

    /// Ring generators over ℚ: {i, j} for ℍ(ℚ), {x} for ℚ(x).
    pub fn generators(tag: AlgebraTag) -> Vec<DElem> {
        match tag {
            AlgebraTag::HQ => vec![DElem::Quat(Quat::i()), DElem::Quat(Quat::j())],
            AlgebraTag::QX => vec![DElem::x()],
        }
    }
}

fn mixed(a: AlgebraTag, b: AlgebraTag) -> ! {
    panic!("arithmetic between {a} and {b} elements")
}

impl<'a> Add<&'a DElem> for &'a DElem {
    type Output = DElem;
    fn add(self, o: &DElem) -> DElem {
        match (self, o) {
            (DElem::Quat(a), DElem::Quat(b)) => DElem::Quat(a + b),
            (DElem::RatFun(a), DElem::RatFun(b)) => DElem::RatFun(a + b),
            _ => mixed(self.tag(), o.tag()),
        }
    }
}

impl<'a> Sub<&'a DElem> for &'a DElem {
    type Output = DElem;
    fn sub(self, o: &DElem) -> DElem {
        match (self, o) {
            (DElem::Quat(a), DElem::Quat(b)) => DElem::Quat(a - b),
            (DElem::RatFun(a), DElem::RatFun(b)) => DElem::RatFun(a - b),
            _ => mixed(self.tag(), o.tag()),
        }
    }
}

impl<'a> Mul<&'a DElem> for &'a DElem {
    type Output = DElem;
    fn mul(self, o: &DElem) -> DElem {
        match (self, o) {
            (DElem::Quat(a), DElem::Quat(b)) => DElem::Quat(a * b),
            (DElem::RatFun(a), DElem::RatFun(b)) => DElem::RatFun(a * b),
            _ => mixed(self.tag(), o.tag()),
        }
    }
}

impl Neg for &DElem {
    type Output = DElem;
    fn neg(self) -> DElem {
        match self {
            DElem::Quat(q) => DElem::Quat(-q),
            DElem::RatFun(r) => DElem::RatFun(-r),
        }
    }
}

impl fmt::Display for DElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DElem::Quat(q) => write!(f, "{q}"),
            DElem::RatFun(r) => write!(f, "{r}"),
        }
    }
}

/// The four arithmetic operations exposed as a single checked entry point.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Inv,
}

pub fn delem_arith(op: ArithOp, x: &DElem, y: Option<&DElem>) -> Result<DElem> {
    let need_y = || y.ok_or_else(|| Error::SchemaViolation("binary operation needs a second operand".into()));
    match op {
        ArithOp::Add => x.try_add(need_y()?),
        ArithOp::Sub => x.try_sub(need_y()?),
        ArithOp::Mul => x.try_mul(need_y()?),
        ArithOp::Inv => x.inv(),
    }
}
