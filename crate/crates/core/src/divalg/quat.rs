//! Rational quaternions ℍ(ℚ).

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::rat::{self, Rat};

/// `a + b·i + c·j + d·k` with i² = j² = k² = ijk = −1.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Quat {
    #[serde(with = "rat")]
    pub a: Rat,
    #[serde(with = "rat")]
    pub b: Rat,
    #[serde(with = "rat")]
    pub c: Rat,
    #[serde(with = "rat")]
    pub d: Rat,
}

impl Quat {
    pub fn new(a: Rat, b: Rat, c: Rat, d: Rat) -> Self {
        Quat { a, b, c, d }
    }

    pub fn from_ints(a: i64, b: i64, c: i64, d: i64) -> Self {
        Quat::new(rat::rat(a), rat::rat(b), rat::rat(c), rat::rat(d))
    }

    pub fn real(a: Rat) -> Self {
        Quat::new(a, Rat::zero(), Rat::zero(), Rat::zero())
    }

    pub fn zero() -> Self {
        Quat::real(Rat::zero())
    }

    pub fn one() -> Self {
        Quat::real(Rat::one())
    }

    pub fn i() -> Self {
        Quat::from_ints(0, 1, 0, 0)
    }

    pub fn j() -> Self {
        Quat::from_ints(0, 0, 1, 0)
    }

    pub fn k() -> Self {
        Quat::from_ints(0, 0, 0, 1)
    }

    /// The basis (1, i, j, k).
    pub fn basis() -> [Quat; 4] {
        [Quat::one(), Quat::i(), Quat::j(), Quat::k()]
    }

    pub fn components(&self) -> [&Rat; 4] {
        [&self.a, &self.b, &self.c, &self.d]
    }

    pub fn component(&self, idx: usize) -> &Rat {
        self.components()[idx]
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero() && self.c.is_zero() && self.d.is_zero()
    }

    /// Rational multiples of 1 are exactly the central elements.
    pub fn is_real(&self) -> bool {
        self.b.is_zero() && self.c.is_zero() && self.d.is_zero()
    }

    pub fn conj(&self) -> Self {
        Quat::new(self.a.clone(), -&self.b, -&self.c, -&self.d)
    }

    pub fn norm(&self) -> Rat {
        &self.a * &self.a + &self.b * &self.b + &self.c * &self.c + &self.d * &self.d
    }

    pub fn scale(&self, r: &Rat) -> Self {
        Quat::new(&self.a * r, &self.b * r, &self.c * r, &self.d * r)
    }

    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let n = self.norm();
        Some(self.conj().scale(&n.recip()))
    }

    pub fn pow(&self, e: u64) -> Self {
        let mut acc = Quat::one();
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

    /// Scales so the first nonzero component is 1. Zero stays zero.
    pub fn normalize_leading(&self) -> Self {
        match self.components().into_iter().find(|c| !c.is_zero()) {
            Some(lead) => self.scale(&lead.recip()),
            None => self.clone(),
        }
    }
}

impl<'a> Add<&'a Quat> for &'a Quat {
    type Output = Quat;
    fn add(self, o: &Quat) -> Quat {
        Quat::new(&self.a + &o.a, &self.b + &o.b, &self.c + &o.c, &self.d + &o.d)
    }
}

impl<'a> Sub<&'a Quat> for &'a Quat {
    type Output = Quat;
    fn sub(self, o: &Quat) -> Quat {
        Quat::new(&self.a - &o.a, &self.b - &o.b, &self.c - &o.c, &self.d - &o.d)
    }
}

impl Neg for &Quat {
    type Output = Quat;
    fn neg(self) -> Quat {
        Quat::new(-&self.a, -&self.b, -&self.c, -&self.d)
    }
}

impl<'a> Mul<&'a Quat> for &'a Quat {
    type Output = Quat;
    fn mul(self, o: &Quat) -> Quat {
        let (a1, b1, c1, d1) = (&self.a, &self.b, &self.c, &self.d);
        let (a2, b2, c2, d2) = (&o.a, &o.b, &o.c, &o.d);
        Quat::new(
            a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
            a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
            a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
            a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
        )
    }
}

impl fmt::Display for Quat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (c, unit) in self.components().into_iter().zip(["", "i", "j", "k"]) {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let abs = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { "-" } else { "+" })?;
            }
            first = false;
            if unit.is_empty() || !abs.is_one() {
                write!(f, "{abs}")?;
            }
            write!(f, "{unit}")?;
        }
        Ok(())
    }
}
