//! Sparse integer Laurent polynomials in one variable `x`.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An element of `Z[x, x^{-1}]`.
///
/// Terms are kept sorted by ascending exponent with no zero coefficients.
/// Coefficient arithmetic is checked: the `try_*` methods report overflow as
/// an error and the operator impls panic on it.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<(i32, i64)>", into = "Vec<(i32, i64)>")]
pub struct LaurentPoly {
    terms: Vec<(i32, i64)>,
}

impl TryFrom<Vec<(i32, i64)>> for LaurentPoly {
    type Error = Error;

    fn try_from(pairs: Vec<(i32, i64)>) -> Result<Self> {
        let mut p = LaurentPoly::zero();
        for (e, c) in pairs {
            p = p.try_add(&LaurentPoly::monomial(c, e))?;
        }
        Ok(p)
    }
}

impl From<LaurentPoly> for Vec<(i32, i64)> {
    fn from(p: LaurentPoly) -> Self {
        p.terms
    }
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    pub fn constant(c: i64) -> Self {
        Self::monomial(c, 0)
    }

    /// `c · x^e`.
    pub fn monomial(c: i64, e: i32) -> Self {
        if c == 0 {
            Self::zero()
        } else {
            LaurentPoly { terms: vec![(e, c)] }
        }
    }

    pub fn x() -> Self {
        Self::monomial(1, 1)
    }

    pub fn x_inv() -> Self {
        Self::monomial(1, -1)
    }

    /// `x - x^{-1}`.
    pub fn x_minus_x_inv() -> Self {
        LaurentPoly {
            terms: vec![(-1, -1), (1, 1)],
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &[(i32, i64)] {
        &self.terms
    }

    /// Coefficient of `x^e`.
    pub fn coeff(&self, e: i32) -> i64 {
        self.terms
            .binary_search_by_key(&e, |t| t.0)
            .map_or(0, |k| self.terms[k].1)
    }

    /// The bar involution `x ↦ x^{-1}`.
    pub fn bar(&self) -> Self {
        LaurentPoly {
            terms: self.terms.iter().rev().map(|&(e, c)| (-e, c)).collect(),
        }
    }

    /// True iff every exponent is at most `-1`, i.e. `p ∈ x^{-1} Z[x^{-1}]`.
    pub fn in_neg_span(&self) -> bool {
        self.terms.last().is_none_or(|t| t.0 <= -1)
    }

    pub fn min_exponent(&self) -> Option<i32> {
        self.terms.first().map(|t| t.0)
    }

    pub fn max_exponent(&self) -> Option<i32> {
        self.terms.last().map(|t| t.0)
    }

    /// Value at `x = 1`.
    pub fn try_eval_one(&self) -> Result<i64> {
        self.terms
            .iter()
            .try_fold(0i64, |acc, t| acc.checked_add(t.1).ok_or(Error::Overflow))
    }

    pub fn eval_one(&self) -> i64 {
        self.try_eval_one().expect("Laurent coefficient overflow")
    }

    /// Multiplication by `x^e`.
    pub fn shift(&self, e: i32) -> Self {
        LaurentPoly {
            terms: self.terms.iter().map(|&(k, c)| (k + e, c)).collect(),
        }
    }

    pub fn try_scale(&self, s: i64) -> Result<Self> {
        if s == 0 {
            return Ok(Self::zero());
        }
        let terms = self
            .terms
            .iter()
            .map(|&(e, c)| c.checked_mul(s).map(|c| (e, c)).ok_or(Error::Overflow))
            .collect::<Result<_>>()?;
        Ok(LaurentPoly { terms })
    }

    pub fn scale(&self, s: i64) -> Self {
        self.try_scale(s).expect("Laurent coefficient overflow")
    }

    fn merge(&self, other: &Self, sign: i64) -> Result<Self> {
        let (a, b) = (&self.terms, &other.terms);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() || j < b.len() {
            let take_a = j == b.len() || (i < a.len() && a[i].0 < b[j].0);
            let take_b = i == a.len() || (j < b.len() && b[j].0 < a[i].0);
            if take_a {
                out.push(a[i]);
                i += 1;
            } else if take_b {
                let c = b[j].1.checked_mul(sign).ok_or(Error::Overflow)?;
                out.push((b[j].0, c));
                j += 1;
            } else {
                let c = b[j].1.checked_mul(sign).ok_or(Error::Overflow)?;
                let c = a[i].1.checked_add(c).ok_or(Error::Overflow)?;
                if c != 0 {
                    out.push((a[i].0, c));
                }
                i += 1;
                j += 1;
            }
        }
        Ok(LaurentPoly { terms: out })
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.merge(other, 1)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.merge(other, -1)
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero());
        }
        let lo = self.terms[0].0 + other.terms[0].0;
        let hi = self.terms.last().unwrap().0 + other.terms.last().unwrap().0;
        let mut dense = vec![0i64; (hi - lo + 1) as usize];
        for &(e1, c1) in &self.terms {
            for &(e2, c2) in &other.terms {
                let slot = &mut dense[(e1 + e2 - lo) as usize];
                let prod = c1.checked_mul(c2).ok_or(Error::Overflow)?;
                *slot = slot.checked_add(prod).ok_or(Error::Overflow)?;
            }
        }
        let terms = dense
            .into_iter()
            .enumerate()
            .filter(|&(_, c)| c != 0)
            .map(|(k, c)| (lo + k as i32, c))
            .collect();
        Ok(LaurentPoly { terms })
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        // highest power first, the usual way of writing polynomials
        for (k, &(e, c)) in self.terms.iter().rev().enumerate() {
            let sign = if c < 0 { "-" } else { "+" };
            if k == 0 {
                if c < 0 {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            let a = c.unsigned_abs();
            match (e, a) {
                (0, _) => write!(f, "{a}")?,
                (_, 1) => {}
                _ => write!(f, "{a}")?,
            }
            match e {
                0 => {}
                1 => write!(f, "x")?,
                _ => write!(f, "x^{e}")?,
            }
        }
        Ok(())
    }
}

macro_rules! checked_binop {
    ($trait:ident, $method:ident, $impl:ident) => {
        impl $trait<&LaurentPoly> for &LaurentPoly {
            type Output = LaurentPoly;

            fn $method(self, rhs: &LaurentPoly) -> LaurentPoly {
                self.$impl(rhs).expect("Laurent coefficient overflow")
            }
        }

        impl $trait<LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;

            fn $method(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$method(&rhs)
            }
        }

        impl $trait<&LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;

            fn $method(self, rhs: &LaurentPoly) -> LaurentPoly {
                (&self).$method(rhs)
            }
        }
    };
}

checked_binop!(Add, add, try_add);
checked_binop!(Sub, sub, try_sub);
checked_binop!(Mul, mul, try_mul);

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        *self = &*self + rhs;
    }
}

impl SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &LaurentPoly) {
        *self = &*self - rhs;
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;

    fn neg(self) -> LaurentPoly {
        self.scale(-1)
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;

    fn neg(self) -> LaurentPoly {
        -&self
    }
}
