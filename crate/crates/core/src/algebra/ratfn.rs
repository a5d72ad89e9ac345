use std::fmt;
use std::sync::Arc;

use num_traits::{One, Zero};

use super::{AlgebraError, MultiPoly, Rational, VarSet};

/// Quotient of two polynomials. No gcd cancellation is attempted; equality
/// is decided by cross-multiplication.
#[derive(Clone)]
pub struct RationalFn {
    num: MultiPoly,
    den: MultiPoly,
}

impl RationalFn {
    pub fn new(num: MultiPoly, den: MultiPoly) -> Result<Self, AlgebraError> {
        if den.is_zero() {
            return Err(AlgebraError::ZeroDenominator);
        }
        super::assert_same_vars(num.vars(), den.vars());
        Ok(RationalFn { num, den }.normalized())
    }

    pub fn from_poly(p: MultiPoly) -> Self {
        let den = MultiPoly::one(p.vars());
        RationalFn { num: p, den }
    }

    pub fn zero(vars: &Arc<VarSet>) -> Self {
        Self::from_poly(MultiPoly::zero(vars))
    }

    pub fn constant(vars: &Arc<VarSet>, c: Rational) -> Self {
        Self::from_poly(MultiPoly::constant(vars, c))
    }

    pub fn numer(&self) -> &MultiPoly {
        &self.num
    }

    pub fn denom(&self) -> &MultiPoly {
        &self.den
    }

    pub fn vars(&self) -> &Arc<VarSet> {
        self.num.vars()
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// Constant denominators are folded into the numerator, and a zero
    /// numerator gets denominator 1.
    fn normalized(self) -> Self {
        if self.num.is_zero() {
            return RationalFn::zero(self.num.vars());
        }
        if self.den.is_constant() {
            let c = self.den.constant_term();
            if !c.is_one() {
                let inv = c.recip();
                return RationalFn {
                    num: self.num.scale(&inv),
                    den: MultiPoly::one(self.num.vars()),
                };
            }
        }
        self
    }

    pub fn add(&self, other: &RationalFn) -> RationalFn {
        if self.den == other.den {
            return RationalFn {
                num: &self.num + &other.num,
                den: self.den.clone(),
            }
            .normalized();
        }
        RationalFn {
            num: &self.num * &other.den + &other.num * &self.den,
            den: &self.den * &other.den,
        }
        .normalized()
    }

    pub fn sub(&self, other: &RationalFn) -> RationalFn {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> RationalFn {
        RationalFn {
            num: -&self.num,
            den: self.den.clone(),
        }
    }

    pub fn mul(&self, other: &RationalFn) -> RationalFn {
        RationalFn {
            num: &self.num * &other.num,
            den: &self.den * &other.den,
        }
        .normalized()
    }

    pub fn mul_poly(&self, p: &MultiPoly) -> RationalFn {
        RationalFn {
            num: &self.num * p,
            den: self.den.clone(),
        }
        .normalized()
    }

    pub fn scale(&self, c: &Rational) -> RationalFn {
        RationalFn {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
        .normalized()
    }

    pub fn div(&self, other: &RationalFn) -> Result<RationalFn, AlgebraError> {
        if other.is_zero() {
            return Err(AlgebraError::ZeroDenominator);
        }
        Ok(RationalFn {
            num: &self.num * &other.den,
            den: &self.den * &other.num,
        }
        .normalized())
    }

    pub fn derivative(&self, k: usize) -> RationalFn {
        if self.den.is_constant() {
            return RationalFn {
                num: self.num.derivative(k),
                den: self.den.clone(),
            }
            .normalized();
        }
        RationalFn {
            num: self.num.derivative(k) * &self.den - &self.num * self.den.derivative(k),
            den: &self.den * &self.den,
        }
        .normalized()
    }

    /// Tries to clear the denominator by exact division.
    pub fn as_poly(&self) -> Option<MultiPoly> {
        self.num.div_exact(&self.den).ok()
    }

    pub fn eval(&self, point: &[Rational]) -> Result<Rational, AlgebraError> {
        let d = self.den.eval(point);
        if d.is_zero() {
            return Err(AlgebraError::ZeroDenominator);
        }
        Ok(self.num.eval(point) / d)
    }

    /// Equality by cross-multiplication.
    pub fn equals(&self, other: &RationalFn) -> bool {
        &self.num * &other.den == &other.num * &self.den
    }

    /// `self - other` written over the product of denominators; zero iff the
    /// two functions agree.
    pub fn cross_residual(&self, other: &RationalFn) -> MultiPoly {
        &self.num * &other.den - &other.num * &self.den
    }
}

impl fmt::Debug for RationalFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RationalFn({self})")
    }
}

impl fmt::Display for RationalFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_constant() && self.den.constant_term().is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}
