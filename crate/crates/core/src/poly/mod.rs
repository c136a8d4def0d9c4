//! Dense univariate polynomials over any [`Field`].

mod transform;

pub use transform::SeparableForm;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use rand::Rng;

use crate::error::{Error, Result};
use crate::field::{Field, FieldDescriptor};

/// A polynomial `sum coeffs[i] * x^i`. The coefficient vector never ends in a
/// zero; the zero polynomial has no coefficients at all.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poly<F: Field> {
    ctx: F::Ctx,
    coeffs: Vec<F>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PolyOp {
    Add,
    Sub,
    Mul,
    DivMod,
    Gcd,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PolyArith<F: Field> {
    Single(Poly<F>),
    Pair(Poly<F>, Poly<F>),
}

/// Checked binary arithmetic, reporting mixed fields and zero divisors as
/// errors instead of panicking.
pub fn poly_arith<F: Field>(f: &Poly<F>, g: &Poly<F>, op: PolyOp) -> Result<PolyArith<F>> {
    if f.ctx != g.ctx {
        return Err(Error::FieldMismatch(f.descriptor().to_string(), g.descriptor().to_string()));
    }
    Ok(match op {
        PolyOp::Add => PolyArith::Single(f + g),
        PolyOp::Sub => PolyArith::Single(f - g),
        PolyOp::Mul => PolyArith::Single(f * g),
        PolyOp::DivMod => {
            let (q, r) = f.div_rem(g)?;
            PolyArith::Pair(q, r)
        }
        PolyOp::Gcd => PolyArith::Single(f.gcd(g)),
    })
}

impl<F: Field> Poly<F> {
    pub fn new(ctx: &F::Ctx, coeffs: Vec<F>) -> Self {
        let mut p = Poly {
            ctx: ctx.clone(),
            coeffs,
        };
        p.normalize();
        p
    }

    pub fn zero(ctx: &F::Ctx) -> Self {
        Poly {
            ctx: ctx.clone(),
            coeffs: Vec::new(),
        }
    }

    pub fn one(ctx: &F::Ctx) -> Self {
        Self::constant(F::one(ctx))
    }

    pub fn constant(c: F) -> Self {
        Self::new(&c.ctx(), vec![c])
    }

    /// The indeterminate `x`.
    pub fn x(ctx: &F::Ctx) -> Self {
        Self::monomial(F::one(ctx), 1)
    }

    /// `c * x^k`
    pub fn monomial(c: F, k: usize) -> Self {
        let ctx = c.ctx();
        let mut coeffs = vec![F::zero(&ctx); k];
        coeffs.push(c);
        Self::new(&ctx, coeffs)
    }

    /// Builds from integer coefficients, lowest degree first.
    pub fn from_ints(ctx: &F::Ctx, coeffs: &[i64]) -> Self {
        Self::new(ctx, coeffs.iter().map(|&c| F::from_i64(ctx, c)).collect())
    }

    /// `prod (x - r)`
    pub fn from_roots<'a>(ctx: &F::Ctx, roots: impl IntoIterator<Item = &'a F>) -> Self {
        roots.into_iter().fold(Self::one(ctx), |acc, r| {
            &acc * &Self::new(ctx, vec![r.neg(), F::one(ctx)])
        })
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn ctx(&self) -> &F::Ctx {
        &self.ctx
    }

    pub fn descriptor(&self) -> FieldDescriptor {
        F::describe(&self.ctx)
    }

    pub fn coeffs(&self) -> &[F] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<F> {
        self.coeffs
    }

    /// Coefficient of `x^i`, zero past the degree.
    pub fn coeff(&self, i: usize) -> F {
        self.coeffs
            .get(i)
            .cloned()
            .unwrap_or_else(|| F::zero(&self.ctx))
    }

    /// `None` stands for the degree of the zero polynomial, minus infinity.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree with the zero polynomial mapped to 0; for callers that already
    /// excluded zero.
    pub fn deg(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn leading(&self) -> Option<&F> {
        self.coeffs.last()
    }

    pub fn constant_term(&self) -> F {
        self.coeff(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// True for the zero polynomial and nonzero constants.
    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(|c| c.is_one())
    }

    pub fn eval(&self, at: &F) -> F {
        self.coeffs
            .iter()
            .rev()
            .fold(F::zero(&self.ctx), |acc, c| acc.mul(at).add(c))
    }

    pub fn scale(&self, c: &F) -> Self {
        Self::new(&self.ctx, self.coeffs.iter().map(|a| a.mul(c)).collect())
    }

    /// Applies `op` to every coefficient.
    pub fn map(&self, op: impl Fn(&F) -> F) -> Self {
        Self::new(&self.ctx, self.coeffs.iter().map(op).collect())
    }

    /// Divides by the leading coefficient; zero stays zero.
    pub fn monic(&self) -> Self {
        match self.leading() {
            None => self.clone(),
            Some(lc) if lc.is_one() => self.clone(),
            Some(lc) => self.scale(&lc.inv().expect("nonzero leading coefficient")),
        }
    }

    pub fn pow(&self, mut exp: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(&self.ctx);
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &base;
            }
            exp >>= 1;
            if exp > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Euclidean division: `self = q * divisor + r` with `deg r < deg divisor`.
    pub fn div_rem(&self, divisor: &Self) -> Result<(Self, Self)> {
        let lc = divisor.leading().ok_or(Error::DivisionByZero)?;
        let lc_inv = lc.inv()?;
        let dd = divisor.deg();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Self::zero(&self.ctx), self.clone()));
        }
        let mut quot = vec![F::zero(&self.ctx); rem.len() - dd];
        for i in (0..quot.len()).rev() {
            let c = rem[i + dd].div_with_inverse(lc, &lc_inv);
            if c.is_zero() {
                continue;
            }
            for (j, d) in divisor.coeffs.iter().enumerate() {
                rem[i + j] = rem[i + j].sub(&c.mul(d));
            }
            quot[i] = c;
        }
        rem.truncate(dd);
        Ok((Self::new(&self.ctx, quot), Self::new(&self.ctx, rem)))
    }

    pub fn rem(&self, divisor: &Self) -> Result<Self> {
        Ok(self.div_rem(divisor)?.1)
    }

    /// Quotient of a division known to be exact.
    pub fn exact_div(&self, divisor: &Self) -> Result<Self> {
        let (q, r) = self.div_rem(divisor)?;
        debug_assert!(r.is_zero(), "inexact division");
        Ok(q)
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b).expect("nonzero divisor");
            a = b;
            b = r;
        }
        a.monic()
    }

    /// The unique polynomial of degree below `points.len()` through the
    /// given values, by Newton divided differences. Points must be distinct.
    pub fn interpolate(points: &[F], values: &[F]) -> Result<Self> {
        assert_eq!(points.len(), values.len(), "one value per point");
        let Some(first) = points.first() else {
            return Err(Error::ZeroInput);
        };
        let ctx = first.ctx();
        let mut c = values.to_vec();
        for j in 1..c.len() {
            for i in (j..c.len()).rev() {
                let step = points[i].sub(&points[i - j]);
                c[i] = c[i].sub(&c[i - 1]).div(&step)?;
            }
        }
        let mut acc = Self::zero(&ctx);
        for (ci, xi) in c.iter().zip(points).rev() {
            let lin = Self::new(&ctx, vec![xi.neg(), F::one(&ctx)]);
            acc = &(&acc * &lin) + &Self::constant(ci.clone());
        }
        Ok(acc)
    }

    /// Formal derivative.
    pub fn derivative(&self) -> Self {
        self.hasse_derivative(1)
    }

    pub fn random<R: Rng + ?Sized>(ctx: &F::Ctx, degree: usize, rng: &mut R) -> Self {
        let mut coeffs: Vec<F> = (0..degree).map(|_| F::sample(ctx, rng)).collect();
        let mut lead = F::sample(ctx, rng);
        while lead.is_zero() {
            lead = F::sample(ctx, rng);
        }
        coeffs.push(lead);
        Self::new(ctx, coeffs)
    }

    pub fn random_monic<R: Rng + ?Sized>(ctx: &F::Ctx, degree: usize, rng: &mut R) -> Self {
        let mut coeffs: Vec<F> = (0..degree).map(|_| F::sample(ctx, rng)).collect();
        coeffs.push(F::one(ctx));
        Self::new(ctx, coeffs)
    }

    /// Renders the polynomial in the variable `var`; the output re-parses to
    /// the same value.
    pub fn display_in(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mut s = c.to_string();
            let negative = !s.contains(' ') && s.starts_with('-');
            if negative {
                s.remove(0);
            }
            if s.contains(' ') {
                s = format!("({s})");
            }
            let monomial = match k {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{k}"),
            };
            let term = if k == 0 {
                s
            } else if s == "1" {
                monomial
            } else {
                format!("{s}*{monomial}")
            };
            match (out.is_empty(), negative) {
                (true, false) => out.push_str(&term),
                (true, true) => {
                    out.push('-');
                    out.push_str(&term);
                }
                (false, false) => {
                    out.push_str(" + ");
                    out.push_str(&term);
                }
                (false, true) => {
                    out.push_str(" - ");
                    out.push_str(&term);
                }
            }
        }
        out
    }
}

impl<F: Field> fmt::Display for Poly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_in("x"))
    }
}

impl<F: Field> Add for &Poly<F> {
    type Output = Poly<F>;

    fn add(self, rhs: &Poly<F>) -> Poly<F> {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut coeffs = long.coeffs.clone();
        for (c, s) in coeffs.iter_mut().zip(&short.coeffs) {
            *c = c.add(s);
        }
        Poly::new(&self.ctx, coeffs)
    }
}

impl<F: Field> Sub for &Poly<F> {
    type Output = Poly<F>;

    fn sub(self, rhs: &Poly<F>) -> Poly<F> {
        self + &(-rhs)
    }
}

impl<F: Field> Neg for &Poly<F> {
    type Output = Poly<F>;

    fn neg(self) -> Poly<F> {
        Poly {
            ctx: self.ctx.clone(),
            coeffs: self.coeffs.iter().map(F::neg).collect(),
        }
    }
}

impl<F: Field> Mul for &Poly<F> {
    type Output = Poly<F>;

    fn mul(self, rhs: &Poly<F>) -> Poly<F> {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero(&self.ctx);
        }
        let mut coeffs = vec![F::zero(&self.ctx); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] = coeffs[i + j].add(&a.mul(b));
            }
        }
        Poly::new(&self.ctx, coeffs)
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl<F: Field> $tr for Poly<F> {
            type Output = Poly<F>;
            fn $m(self, rhs: Poly<F>) -> Poly<F> {
                (&self).$m(&rhs)
            }
        }
    )*};
}

forward_owned!(Add add, Sub sub, Mul mul);

impl<F: Field> Neg for Poly<F> {
    type Output = Poly<F>;

    fn neg(self) -> Poly<F> {
        -&self
    }
}
