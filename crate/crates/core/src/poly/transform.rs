//! Hasse derivatives, substitutions and separability analysis.

use num_bigint::BigInt;
use num_integer::binomial;

use super::Poly;
use crate::error::{Error, Result};
use crate::field::Field;

/// `f(x) = f_sep(x^(p^e))`.
///
/// `f_sep` is separable whenever the source polynomial was irreducible. For
/// reducible input it is only guaranteed to have a nonzero derivative.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeparableForm<F: Field> {
    pub f_sep: Poly<F>,
    pub e: u32,
}

impl<F: Field> SeparableForm<F> {
    /// Substitutes `x^(p^e)` back into `f_sep`.
    pub fn reconstruct(&self) -> Poly<F> {
        let q = F::char_exponent(self.f_sep.ctx());
        self.f_sep.inflate(q.pow(self.e) as usize)
    }
}

impl<F: Field> Poly<F> {
    /// The `r`-th Hasse derivative, `x^n -> binom(n, r) x^(n-r)`. Binomials
    /// are exact integers reduced into the field, so they vanish correctly in
    /// positive characteristic.
    pub fn hasse_derivative(&self, r: usize) -> Self {
        if r == 0 {
            return self.clone();
        }
        if self.coeffs.len() <= r {
            return Self::zero(&self.ctx);
        }
        let coeffs = (r..self.coeffs.len())
            .map(|n| {
                let b = binomial(BigInt::from(n), BigInt::from(r));
                self.coeffs[n].mul(&F::from_bigint(&self.ctx, &b))
            })
            .collect();
        Self::new(&self.ctx, coeffs)
    }

    /// `f(x + alpha)`.
    pub fn taylor_shift(&self, alpha: &F) -> Result<Self> {
        self.check_scalar(alpha)?;
        // Horner in the ring: acc = acc * (x + alpha) + a_i
        let mut acc: Vec<F> = Vec::with_capacity(self.coeffs.len());
        for a in self.coeffs.iter().rev() {
            acc.insert(0, F::zero(&self.ctx));
            for i in 0..acc.len() - 1 {
                let shifted = acc[i + 1].mul(alpha);
                acc[i] = acc[i].add(&shifted);
            }
            acc[0] = acc[0].add(a);
        }
        Ok(Self::new(&self.ctx, acc))
    }

    /// `f(alpha x)`.
    pub fn homothety(&self, alpha: &F) -> Result<Self> {
        self.check_scalar(alpha)?;
        if alpha.is_zero() {
            return Err(Error::ZeroScale);
        }
        let mut power = F::one(&self.ctx);
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs {
            coeffs.push(c.mul(&power));
            power = power.mul(alpha);
        }
        Ok(Self::new(&self.ctx, coeffs))
    }

    /// `x^deg(f) f(1/x)`, the coefficient reversal. Needs `f(0) != 0`.
    pub fn reciprocal(&self) -> Result<Self> {
        if self.constant_term().is_zero() {
            return Err(Error::ZeroConstantTerm);
        }
        let mut coeffs = self.coeffs.clone();
        coeffs.reverse();
        Ok(Self::new(&self.ctx, coeffs))
    }

    /// True iff `gcd(f, f')` is constant. A polynomial with vanishing
    /// derivative is never separable.
    pub fn is_separable(&self) -> Result<bool> {
        if self.is_constant() {
            return Err(Error::ConstantInput);
        }
        let d = self.derivative();
        Ok(!d.is_zero() && self.gcd(&d).is_constant())
    }

    /// `f(x^k)`.
    pub fn inflate(&self, k: usize) -> Self {
        if k <= 1 || self.is_constant() {
            return self.clone();
        }
        let mut coeffs = vec![F::zero(&self.ctx); (self.coeffs.len() - 1) * k + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i * k] = c.clone();
        }
        Self::new(&self.ctx, coeffs)
    }

    /// Inverse of [`Poly::inflate`]; `None` if some exponent is not a multiple of `k`.
    pub fn deflate(&self, k: usize) -> Option<Self> {
        if k <= 1 {
            return Some(self.clone());
        }
        let ok = self
            .coeffs
            .iter()
            .enumerate()
            .all(|(i, c)| c.is_zero() || i % k == 0);
        ok.then(|| {
            Self::new(
                &self.ctx,
                self.coeffs.iter().step_by(k).cloned().collect(),
            )
        })
    }

    /// Writes `f(x) = f_sep(x^(p^e))` with `e` maximal. In characteristic 0
    /// this is `(f, 0)`.
    pub fn desubstitute(&self) -> Result<SeparableForm<F>> {
        if self.is_constant() {
            return Err(Error::ConstantInput);
        }
        let p = F::characteristic(&self.ctx) as usize;
        let mut form = SeparableForm {
            f_sep: self.clone(),
            e: 0,
        };
        if p == 0 {
            return Ok(form);
        }
        while let Some(next) = form.f_sep.deflate(p) {
            form.f_sep = next;
            form.e += 1;
        }
        Ok(form)
    }

    /// Raises every coefficient to the power `p^a`. If `g` has roots `r`, the
    /// result has roots `r^(p^a)`.
    pub fn frobenius_twist(&self, a: u32) -> Result<Self> {
        if a == 0 {
            return Ok(self.clone());
        }
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| c.frobenius_power(a))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::new(&self.ctx, coeffs))
    }

    fn check_scalar(&self, c: &F) -> Result<()> {
        if c.ctx() != self.ctx {
            return Err(Error::FieldMismatch(
                self.descriptor().to_string(),
                F::describe(&c.ctx()).to_string(),
            ));
        }
        Ok(())
    }
}
