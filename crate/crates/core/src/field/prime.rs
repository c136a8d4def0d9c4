use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;
use rand::Rng;

use super::{Field, FieldDescriptor, Modulus};
use crate::error::{Error, Result};
use crate::factor::Factorization;
use crate::poly::Poly;

/// A residue modulo a prime `p < 2^31`, kept in `[0, p)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Fp {
    value: u64,
    modulus: Modulus,
}

impl Fp {
    pub fn new(value: i64, modulus: Modulus) -> Self {
        let p = modulus.get() as i64;
        Fp {
            value: value.rem_euclid(p) as u64,
            modulus,
        }
    }

    pub fn value(self) -> u64 {
        self.value
    }

    pub fn modulus(self) -> Modulus {
        self.modulus
    }

    fn p(self) -> u64 {
        self.modulus.get()
    }

    fn check(self, rhs: Fp) {
        assert_eq!(
            self.modulus, rhs.modulus,
            "mixing residues modulo {} and {}",
            self.modulus, rhs.modulus
        );
    }
}

/// Inverse of a nonzero `a` modulo the prime `p`, by the extended Euclidean
/// algorithm.
fn inv_mod(a: u64, p: u64) -> u64 {
    let (mut r0, mut r1) = (p as i64, a as i64);
    let (mut s0, mut s1) = (0i64, 1i64);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
    }
    s0.rem_euclid(p as i64) as u64
}

impl fmt::Display for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

impl Field for Fp {
    type Ctx = Modulus;

    fn ctx(&self) -> Modulus {
        self.modulus
    }

    fn describe(ctx: &Modulus) -> FieldDescriptor {
        FieldDescriptor::prime_field(*ctx)
    }

    fn zero(ctx: &Modulus) -> Self {
        Fp {
            value: 0,
            modulus: *ctx,
        }
    }

    fn one(ctx: &Modulus) -> Self {
        Fp {
            value: 1,
            modulus: *ctx,
        }
    }

    fn from_bigint(ctx: &Modulus, n: &BigInt) -> Self {
        let r = n.mod_floor(&BigInt::from(ctx.get()));
        Fp {
            value: r.to_u64().expect("residue below modulus"),
            modulus: *ctx,
        }
    }

    fn from_i64(ctx: &Modulus, n: i64) -> Self {
        Fp::new(n, *ctx)
    }

    fn is_zero(&self) -> bool {
        self.value == 0
    }

    fn is_one(&self) -> bool {
        self.value == 1
    }

    fn add(&self, rhs: &Self) -> Self {
        self.check(*rhs);
        let s = self.value + rhs.value;
        Fp {
            value: if s >= self.p() { s - self.p() } else { s },
            modulus: self.modulus,
        }
    }

    fn sub(&self, rhs: &Self) -> Self {
        self.check(*rhs);
        let value = if self.value >= rhs.value {
            self.value - rhs.value
        } else {
            self.value + self.p() - rhs.value
        };
        Fp {
            value,
            modulus: self.modulus,
        }
    }

    fn mul(&self, rhs: &Self) -> Self {
        self.check(*rhs);
        Fp {
            value: self.value * rhs.value % self.p(),
            modulus: self.modulus,
        }
    }

    fn neg(&self) -> Self {
        Fp {
            value: if self.value == 0 { 0 } else { self.p() - self.value },
            modulus: self.modulus,
        }
    }

    fn inv(&self) -> Result<Self> {
        if self.value == 0 {
            return Err(Error::DivisionByZero);
        }
        Ok(Fp {
            value: inv_mod(self.value, self.p()),
            modulus: self.modulus,
        })
    }

    fn pth_power(&self) -> Self {
        *self
    }

    fn pth_root(&self) -> Result<Self> {
        Ok(*self)
    }

    /// Gaussian elimination, one inversion per pivot.
    fn determinant(mut m: Vec<Vec<Fp>>, ctx: &Modulus) -> Fp {
        let p = ctx.get();
        let n = m.len();
        let mut det = 1u64;
        for k in 0..n {
            let Some(piv) = (k..n).find(|&i| m[i][k].value != 0) else {
                return Fp::zero(ctx);
            };
            if piv != k {
                m.swap(k, piv);
                det = p - det;
            }
            let pivot = m[k][k].value;
            det = det * pivot % p;
            let inv = inv_mod(pivot, p);
            let (top, bottom) = m.split_at_mut(k + 1);
            let pivot_row = &top[k];
            for row in bottom.iter_mut() {
                let factor = row[k].value * inv % p;
                if factor == 0 {
                    continue;
                }
                for j in k + 1..n {
                    let sub = factor * pivot_row[j].value % p;
                    let v = row[j].value;
                    row[j].value = if v >= sub { v - sub } else { v + p - sub };
                }
            }
        }
        Fp {
            value: det % p,
            modulus: *ctx,
        }
    }

    fn interpolation_points(count: usize, ctx: &Modulus) -> Option<Vec<Self>> {
        (count as u64 <= ctx.get()).then(|| (0..count as i64).map(|k| Fp::new(k, *ctx)).collect())
    }

    fn irreducibility_known(f: &Poly<Fp>) -> Option<bool> {
        Some(crate::factor::is_irreducible_prime_field(f))
    }

    fn factorize(f: &Poly<Fp>) -> Option<Result<Factorization<Fp>>> {
        Some(crate::factor::factor_prime_field(f, crate::factor::DEFAULT_SEED))
    }

    fn sample<R: Rng + ?Sized>(ctx: &Modulus, rng: &mut R) -> Self {
        Fp {
            value: rng.gen_range(0..ctx.get()),
            modulus: *ctx,
        }
    }
}
