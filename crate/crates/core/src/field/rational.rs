use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rand::Rng;

use super::{Field, FieldDescriptor};
use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::resultant::UPolynomial;

/// Context of the rationals; there is only one.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Rationals;

/// An exact rational number, always stored in lowest terms with a positive
/// denominator.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Rational(BigRational);

impl Rational {
    pub fn new(numer: i64, denom: i64) -> Self {
        Rational(BigRational::new(numer.into(), denom.into()))
    }

    pub fn from_integer(n: i64) -> Self {
        Rational(BigRational::from_integer(n.into()))
    }

    pub fn from_big(numer: BigInt, denom: BigInt) -> Result<Self> {
        if denom.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Rational(BigRational::new(numer, denom)))
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn inner(&self) -> &BigRational {
        &self.0
    }
}

impl From<BigRational> for Rational {
    fn from(r: BigRational) -> Self {
        Rational(r)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.denom().is_one() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl Field for Rational {
    type Ctx = Rationals;

    fn ctx(&self) -> Rationals {
        Rationals
    }

    fn describe(_: &Rationals) -> FieldDescriptor {
        FieldDescriptor::rationals()
    }

    fn zero(_: &Rationals) -> Self {
        Rational(BigRational::zero())
    }

    fn one(_: &Rationals) -> Self {
        Rational(BigRational::one())
    }

    fn from_bigint(_: &Rationals, n: &BigInt) -> Self {
        Rational(BigRational::from_integer(n.clone()))
    }

    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    fn is_one(&self) -> bool {
        self.0.is_one()
    }

    fn add(&self, rhs: &Self) -> Self {
        Rational(&self.0 + &rhs.0)
    }

    fn sub(&self, rhs: &Self) -> Self {
        Rational(&self.0 - &rhs.0)
    }

    fn mul(&self, rhs: &Self) -> Self {
        Rational(&self.0 * &rhs.0)
    }

    fn neg(&self) -> Self {
        Rational(-&self.0)
    }

    fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            Err(Error::DivisionByZero)
        } else {
            Ok(Rational(self.0.recip()))
        }
    }

    fn pth_power(&self) -> Self {
        self.clone()
    }

    fn pth_root(&self) -> Result<Self> {
        Err(Error::UnsupportedField(
            "p-th roots need positive characteristic".into(),
        ))
    }

    fn div_with_inverse(&self, divisor: &Self, divisor_inv: &Self) -> Self {
        if self.0.is_integer() && divisor.0.is_integer() {
            let (q, r) = self.0.numer().div_rem(divisor.0.numer());
            if r.is_zero() {
                return Rational(BigRational::from_integer(q));
            }
        }
        self.mul(divisor_inv)
    }

    fn exact_quotient(&self, rhs: &Self) -> Result<Self> {
        if rhs.0.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.0.is_integer() && rhs.0.is_integer() {
            let (q, r) = self.0.numer().div_rem(rhs.0.numer());
            if r.is_zero() {
                return Ok(Rational(BigRational::from_integer(q)));
            }
        }
        Ok(Rational(&self.0 / &rhs.0))
    }

    fn specialized_resultant_in_u(
        f: &Poly<Rational>,
        g: &UPolynomial<Rational>,
    ) -> Option<Result<Poly<Rational>>> {
        Some(crate::resultant::resultant_in_u_multimodular(f, g))
    }

    /// Small integers centred on zero.
    fn interpolation_points(count: usize, _: &Rationals) -> Option<Vec<Self>> {
        let half = (count / 2) as i64;
        Some((0..count as i64).map(|k| Rational::from_integer(k - half)).collect())
    }

    fn clearing_factor(values: &[Self], _: &Rationals) -> Self {
        let lcm = values
            .iter()
            .fold(BigInt::one(), |acc, v| acc.lcm(v.0.denom()));
        Rational(BigRational::from_integer(lcm))
    }

    fn sample<R: Rng + ?Sized>(_: &Rationals, rng: &mut R) -> Self {
        let n = rng.gen_range(-9i64..=9);
        let d = rng.gen_range(1i64..=4);
        Rational::new(n, d)
    }
}
