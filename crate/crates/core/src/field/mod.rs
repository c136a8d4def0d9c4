//! Exact coefficient fields.
//!
//! Every scalar type implements [`Field`]. Elements carry their own context
//! (the prime modulus for `F_p` and `F_p(t)`), so a zero or one is always
//! built from a context rather than out of thin air.

mod descriptor;
mod dynamic;
mod prime;
mod ratfunc;
mod rational;

pub use descriptor::{FieldDescriptor, FieldKind, Modulus, MODULUS_BOUND};
pub(crate) use descriptor::is_prime;
pub use dynamic::{field_arith, ArithOp, FieldElement};
pub use prime::Fp;
pub use ratfunc::RatFunc;
pub use rational::{Rational, Rationals};

use std::fmt::{Debug, Display};

use num_bigint::{BigInt, BigUint, Sign};
use rand::Rng;

use crate::error::{Error, Result};
use crate::factor::Factorization;
use crate::poly::Poly;
use crate::resultant::UPolynomial;

pub trait Field: Clone + PartialEq + Eq + Debug + Display + Send + Sync + 'static {
    /// Everything needed to build constants of the field.
    type Ctx: Clone + PartialEq + Eq + Debug + Send + Sync + 'static;

    fn ctx(&self) -> Self::Ctx;
    fn describe(ctx: &Self::Ctx) -> FieldDescriptor;

    fn zero(ctx: &Self::Ctx) -> Self;
    fn one(ctx: &Self::Ctx) -> Self;
    fn from_bigint(ctx: &Self::Ctx, n: &BigInt) -> Self;

    fn is_zero(&self) -> bool;

    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    fn inv(&self) -> Result<Self>;

    /// `self^p` where `p` is the characteristic. Only called in positive
    /// characteristic.
    fn pth_power(&self) -> Self;

    /// The unique `d` with `d^p = self`, over perfect fields of positive
    /// characteristic.
    fn pth_root(&self) -> Result<Self>;

    /// A small pseudorandom element, for test generators.
    fn sample<R: Rng + ?Sized>(ctx: &Self::Ctx, rng: &mut R) -> Self;

    fn from_i64(ctx: &Self::Ctx, n: i64) -> Self {
        Self::from_bigint(ctx, &BigInt::from(n))
    }

    fn is_one(&self) -> bool {
        *self == Self::one(&self.ctx())
    }

    fn div(&self, rhs: &Self) -> Result<Self> {
        Ok(self.mul(&rhs.inv()?))
    }

    /// `self / divisor`, given `divisor_inv = 1 / divisor`.
    fn div_with_inverse(&self, _divisor: &Self, divisor_inv: &Self) -> Self {
        self.mul(divisor_inv)
    }

    /// `self / rhs` for a division known to be exact in the integral
    /// subring (`Z` or `F_p[t]`) when both operands lie in it.
    fn exact_quotient(&self, rhs: &Self) -> Result<Self> {
        Ok(self.div_with_inverse(rhs, &rhs.inv()?))
    }

    /// `count` distinct elements suitable as interpolation nodes, when the
    /// field has enough of them to spare.
    fn interpolation_points(count: usize, ctx: &Self::Ctx) -> Option<Vec<Self>> {
        let _ = (count, ctx);
        None
    }

    /// Determinant of a square matrix over the field.
    fn determinant(m: Vec<Vec<Self>>, ctx: &Self::Ctx) -> Self {
        crate::resultant::bareiss_determinant(m, Self::one(ctx))
    }

    /// `res_x(f, G)` by a method specific to the field, if it has one.
    fn specialized_resultant_in_u(
        f: &Poly<Self>,
        g: &UPolynomial<Self>,
    ) -> Option<Result<Poly<Self>>> {
        let _ = (f, g);
        None
    }

    /// A nonzero `c` such that `c * v` is integral (in `Z` or `F_p[t]`) for
    /// every `v` in `values`. Fields without a notion of integrality return 1.
    fn clearing_factor(values: &[Self], ctx: &Self::Ctx) -> Self {
        let _ = values;
        Self::one(ctx)
    }

    fn square(&self) -> Self {
        self.mul(self)
    }

    fn pow(&self, mut exp: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(&self.ctx());
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.mul(&base);
            }
            exp >>= 1;
            if exp > 0 {
                base = base.square();
            }
        }
        acc
    }

    fn pow_big(&self, exp: &BigUint) -> Self {
        let mut acc = Self::one(&self.ctx());
        for i in (0..exp.bits()).rev() {
            acc = acc.square();
            if exp.bit(i) {
                acc = acc.mul(self);
            }
        }
        acc
    }

    /// Integer power allowing negative exponents (which need `self != 0`).
    fn pow_signed(&self, exp: i64) -> Result<Self> {
        if exp >= 0 {
            Ok(self.pow(exp as u64))
        } else {
            Ok(self.inv()?.pow(exp.unsigned_abs()))
        }
    }

    fn pow_signed_big(&self, exp: &BigInt) -> Result<Self> {
        let magnitude = exp.magnitude();
        if exp.sign() == Sign::Minus {
            Ok(self.inv()?.pow_big(magnitude))
        } else {
            Ok(self.pow_big(magnitude))
        }
    }

    /// Whether `f` is irreducible, when that can be decided cheaply:
    /// `Some(true)` or `Some(false)` when settled, `None` when unknown.
    /// Only linear polynomials are certified irreducible. Reducibility is
    /// detected when the separable part after desubstitution is not
    /// separable, or when `f = x^(p^e) - a` with `a` a p-th power.
    fn irreducibility_known(f: &Poly<Self>) -> Option<bool> {
        match f.degree() {
            None | Some(0) => Some(false),
            Some(1) => Some(true),
            Some(_) => match f.monic().desubstitute() {
                Ok(form) if !form.f_sep.is_separable().unwrap_or(false) => Some(false),
                Ok(form) if form.e > 0 && form.f_sep.deg() == 1 => {
                    form.f_sep.coeff(0).pth_root().is_ok().then_some(false)
                }
                _ => None,
            },
        }
    }

    /// A complete factorization into irreducibles, for fields where one is
    /// computable. `None` elsewhere.
    fn factorize(_f: &Poly<Self>) -> Option<Result<Factorization<Self>>> {
        None
    }

    /// `self^(p^a)` by repeated p-th powering.
    fn frobenius_power(&self, a: u32) -> Result<Self> {
        if a == 0 {
            return Ok(self.clone());
        }
        if Self::characteristic(&self.ctx()) == 0 {
            return Err(Error::UnsupportedField(
                "Frobenius needs positive characteristic".into(),
            ));
        }
        let mut c = self.clone();
        for _ in 0..a {
            c = c.pth_power();
        }
        Ok(c)
    }

    /// 0 for the rationals, `p` otherwise.
    fn characteristic(ctx: &Self::Ctx) -> u64 {
        Self::describe(ctx).p.unwrap_or(0)
    }

    /// The characteristic exponent: `p` in characteristic `p`, 1 in characteristic 0.
    fn char_exponent(ctx: &Self::Ctx) -> u64 {
        Self::describe(ctx).char_exponent
    }
}

/// `(-1)^k` as a field element.
pub fn sign<F: Field>(ctx: &F::Ctx, k: u64) -> F {
    if k.is_multiple_of(2) {
        F::one(ctx)
    } else {
        F::one(ctx).neg()
    }
}
