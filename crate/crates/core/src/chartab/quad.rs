use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::{BigInt, BigRational, One, Signed, ToPrimitive, Zero};

use super::ChartabError;

/// `a + b√d` with rational `a`, `b` and a fixed squarefree `d ≥ 1`.
///
/// `d = 1` is the rational field; values there are kept with `b = 0`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QuadValue {
    a: BigRational,
    b: BigRational,
    d: u64,
}

pub fn is_squarefree(d: u64) -> bool {
    d >= 1 && (2..).take_while(|k: &u64| k * k <= d).all(|k| d % (k * k) != 0)
}

impl QuadValue {
    pub fn new(a: BigRational, b: BigRational, d: u64) -> Result<Self, ChartabError> {
        if !is_squarefree(d) {
            return Err(ChartabError::NotSquarefree(d));
        }
        Ok(Self::new_unchecked(a, b, d))
    }

    pub(crate) fn new_unchecked(a: BigRational, b: BigRational, d: u64) -> Self {
        if d == 1 {
            Self { a: a + b, b: BigRational::zero(), d }
        } else {
            Self { a, b, d }
        }
    }

    pub fn rational(a: BigRational, d: u64) -> Self {
        Self::new_unchecked(a, BigRational::zero(), d)
    }

    pub fn integer(n: i64, d: u64) -> Self {
        Self::rational(BigRational::from_integer(n.into()), d)
    }

    pub fn zero(d: u64) -> Self {
        Self::integer(0, d)
    }

    pub fn one(d: u64) -> Self {
        Self::integer(1, d)
    }

    /// `(1 + √5) / 2`.
    pub fn phi() -> Self {
        let half = BigRational::new(1.into(), 2.into());
        Self::new_unchecked(half.clone(), half, 5)
    }

    /// `(1 - √5) / 2`.
    pub fn phi_conj() -> Self {
        let half = BigRational::new(1.into(), 2.into());
        Self::new_unchecked(half.clone(), -half, 5)
    }

    pub fn rational_part(&self) -> &BigRational {
        &self.a
    }

    pub fn radical_part(&self) -> &BigRational {
        &self.b
    }

    pub fn radicand(&self) -> u64 {
        self.d
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    /// The value as a rational, if its radical part vanishes.
    pub fn to_rational(&self) -> Option<BigRational> {
        self.is_rational().then(|| self.a.clone())
    }

    pub fn to_integer(&self) -> Option<BigInt> {
        self.to_rational().filter(|r| r.is_integer()).map(|r| r.to_integer())
    }

    /// Galois conjugate `a - b√d`.
    pub fn conjugate(&self) -> Self {
        Self { a: self.a.clone(), b: -self.b.clone(), d: self.d }
    }

    pub fn to_f64(&self) -> f64 {
        self.a.to_f64().unwrap_or(f64::NAN) + self.b.to_f64().unwrap_or(f64::NAN) * (self.d as f64).sqrt()
    }

    fn same_field(&self, other: &Self) -> Result<(), ChartabError> {
        if self.d == other.d {
            Ok(())
        } else {
            Err(ChartabError::MixedRadicand(self.d, other.d))
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, ChartabError> {
        self.same_field(other)?;
        Ok(Self { a: &self.a + &other.a, b: &self.b + &other.b, d: self.d })
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self, ChartabError> {
        self.same_field(other)?;
        Ok(Self { a: &self.a - &other.a, b: &self.b - &other.b, d: self.d })
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self, ChartabError> {
        self.same_field(other)?;
        let d = BigRational::from_integer(self.d.into());
        Ok(Self {
            a: &self.a * &other.a + &self.b * &other.b * d,
            b: &self.a * &other.b + &other.a * &self.b,
            d: self.d,
        })
    }

    pub fn scale(&self, k: &BigRational) -> Self {
        Self { a: &self.a * k, b: &self.b * k, d: self.d }
    }
}

impl fmt::Debug for QuadValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for QuadValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            return write!(f, "{}", self.a);
        }
        let sign = if self.b.is_negative() { "-" } else { "+" };
        let mag = self.b.abs();
        let coeff = if mag.is_one() { String::new() } else { format!("{mag}*") };
        if self.a.is_zero() {
            let lead = if self.b.is_negative() { "-" } else { "" };
            write!(f, "{lead}{coeff}sqrt({})", self.d)
        } else {
            write!(f, "{} {sign} {coeff}sqrt({})", self.a, self.d)
        }
    }
}

// Operator forms panic on mixed radicands; callers inside one table never mix.
macro_rules! forward_op {
    ($tr:ident, $m:ident, $try:ident) => {
        impl $tr<&QuadValue> for &QuadValue {
            type Output = QuadValue;
            fn $m(self, rhs: &QuadValue) -> QuadValue {
                self.$try(rhs).expect("operands share a radicand")
            }
        }
        impl $tr<QuadValue> for QuadValue {
            type Output = QuadValue;
            fn $m(self, rhs: QuadValue) -> QuadValue {
                (&self).$try(&rhs).expect("operands share a radicand")
            }
        }
    };
}

forward_op!(Add, add, try_add);
forward_op!(Sub, sub, try_sub);
forward_op!(Mul, mul, try_mul);

impl Neg for QuadValue {
    type Output = QuadValue;
    fn neg(self) -> QuadValue {
        QuadValue { a: -self.a, b: -self.b, d: self.d }
    }
}

impl Neg for &QuadValue {
    type Output = QuadValue;
    fn neg(self) -> QuadValue {
        -self.clone()
    }
}
