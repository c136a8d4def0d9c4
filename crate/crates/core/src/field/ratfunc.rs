use std::fmt;

use num_bigint::BigInt;
use rand::Rng;

use super::{Field, FieldDescriptor, Fp, Modulus};
use crate::error::{Error, Result};
use crate::poly::Poly;

/// An element `num / den` of `F_p(t)`, in lowest terms with `den` monic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatFunc {
    num: Poly<Fp>,
    den: Poly<Fp>,
}

impl RatFunc {
    /// The indeterminate `t`.
    pub fn t(m: Modulus) -> Self {
        Self::from_poly(Poly::x(&m))
    }

    pub fn from_poly(num: Poly<Fp>) -> Self {
        let den = Poly::one(num.ctx());
        RatFunc { num, den }
    }

    pub fn from_fraction(num: Poly<Fp>, den: Poly<Fp>) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::reduced(num, den))
    }

    pub fn numer(&self) -> &Poly<Fp> {
        &self.num
    }

    pub fn denom(&self) -> &Poly<Fp> {
        &self.den
    }

    pub fn modulus(&self) -> Modulus {
        *self.num.ctx()
    }

    /// True if the element is a polynomial in `t`.
    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    fn reduced(num: Poly<Fp>, den: Poly<Fp>) -> Self {
        if num.is_zero() {
            return RatFunc {
                den: Poly::one(num.ctx()),
                num,
            };
        }
        let (num, den) = if den.is_one() {
            (num, den)
        } else {
            let g = num.gcd(&den);
            if g.is_one() {
                (num, den)
            } else {
                (
                    num.exact_div(&g).expect("gcd divides"),
                    den.exact_div(&g).expect("gcd divides"),
                )
            }
        };
        let lc = *den.leading().expect("nonzero denominator");
        if lc.is_one() {
            RatFunc { num, den }
        } else {
            let inv = lc.inv().expect("nonzero");
            RatFunc {
                num: num.scale(&inv),
                den: den.scale(&inv),
            }
        }
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let num = self.num.display_in("t");
        if self.den.is_one() {
            return f.write_str(&num);
        }
        let den = self.den.display_in("t");
        let wrap = |s: String| if s.contains(' ') { format!("({s})") } else { s };
        write!(f, "{}/{}", wrap(num), wrap(den))
    }
}

impl Field for RatFunc {
    type Ctx = Modulus;

    fn ctx(&self) -> Modulus {
        self.modulus()
    }

    fn describe(ctx: &Modulus) -> FieldDescriptor {
        FieldDescriptor::rational_function_field(*ctx)
    }

    fn zero(ctx: &Modulus) -> Self {
        Self::from_poly(Poly::zero(ctx))
    }

    fn one(ctx: &Modulus) -> Self {
        Self::from_poly(Poly::one(ctx))
    }

    fn from_bigint(ctx: &Modulus, n: &BigInt) -> Self {
        Self::from_poly(Poly::constant(Fp::from_bigint(ctx, n)))
    }

    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    fn add(&self, rhs: &Self) -> Self {
        if self.den == rhs.den {
            let num = &self.num + &rhs.num;
            if self.den.is_one() {
                return RatFunc {
                    num,
                    den: self.den.clone(),
                };
            }
            return Self::reduced(num, self.den.clone());
        }
        let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        Self::reduced(num, &self.den * &rhs.den)
    }

    fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    fn mul(&self, rhs: &Self) -> Self {
        if self.den.is_one() && rhs.den.is_one() {
            return Self::from_poly(&self.num * &rhs.num);
        }
        if self.is_zero() || rhs.is_zero() {
            return Self::zero(&self.ctx());
        }
        // cross-cancel before multiplying
        let g1 = self.num.gcd(&rhs.den);
        let g2 = rhs.num.gcd(&self.den);
        let a = self.num.exact_div(&g1).expect("gcd divides");
        let d = rhs.den.exact_div(&g1).expect("gcd divides");
        let c = rhs.num.exact_div(&g2).expect("gcd divides");
        let b = self.den.exact_div(&g2).expect("gcd divides");
        let num = &a * &c;
        let den = &b * &d;
        let lc = *den.leading().expect("nonzero");
        let inv = lc.inv().expect("nonzero");
        RatFunc {
            num: num.scale(&inv),
            den: den.scale(&inv),
        }
    }

    fn neg(&self) -> Self {
        RatFunc {
            num: -&self.num,
            den: self.den.clone(),
        }
    }

    fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let lc = self.num.leading().expect("nonzero").inv()?;
        Ok(RatFunc {
            num: self.den.scale(&lc),
            den: self.num.scale(&lc),
        })
    }

    /// `c(t)^p = c(t^p)` because the coefficients lie in the prime field.
    fn pth_power(&self) -> Self {
        let p = self.modulus().get() as usize;
        RatFunc {
            num: self.num.inflate(p),
            den: self.den.inflate(p),
        }
    }

    /// Exists iff numerator and denominator are polynomials in `t^p`.
    fn pth_root(&self) -> Result<Self> {
        let p = self.modulus().get() as usize;
        match (self.num.deflate(p), self.den.deflate(p)) {
            (Some(num), Some(den)) => Ok(RatFunc { num, den }),
            _ => Err(Error::UnsupportedField(format!(
                "{self} is not a p-th power in F_p(t)"
            ))),
        }
    }

    fn div_with_inverse(&self, divisor: &Self, divisor_inv: &Self) -> Self {
        if self.den.is_one() && divisor.den.is_one() {
            if let Ok((q, r)) = self.num.div_rem(&divisor.num) {
                if r.is_zero() {
                    return Self::from_poly(q);
                }
            }
        }
        self.mul(divisor_inv)
    }

    fn exact_quotient(&self, rhs: &Self) -> Result<Self> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.den.is_one() && rhs.den.is_one() {
            let (q, r) = self.num.div_rem(&rhs.num)?;
            if r.is_zero() {
                return Ok(Self::from_poly(q));
            }
        }
        self.div(rhs)
    }

    fn clearing_factor(values: &[Self], ctx: &Modulus) -> Self {
        let lcm = values.iter().fold(Poly::one(ctx), |acc, v| {
            if v.den.is_one() {
                return acc;
            }
            let g = acc.gcd(&v.den);
            (&acc * &v.den).exact_div(&g).expect("gcd divides")
        });
        Self::from_poly(lcm)
    }

    fn sample<R: Rng + ?Sized>(ctx: &Modulus, rng: &mut R) -> Self {
        let num_deg = rng.gen_range(0..=2);
        let num = Poly::new(ctx, (0..=num_deg).map(|_| Fp::sample(ctx, rng)).collect());
        if rng.gen_bool(0.75) {
            return Self::from_poly(num);
        }
        let den = Poly::random_monic(ctx, 1, rng);
        Self::reduced(num, den)
    }
}
