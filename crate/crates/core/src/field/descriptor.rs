use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// Largest admissible prime modulus is below this bound, so that a product of
/// two residues fits in a `u64`.
pub const MODULUS_BOUND: u64 = 1 << 31;

/// A validated prime `p < 2^31`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Modulus(u64);

impl Modulus {
    pub fn new(p: u64) -> Result<Self> {
        if p < 2 {
            return Err(Error::InvalidModulus(p, "must be at least 2"));
        }
        if p >= MODULUS_BOUND {
            return Err(Error::InvalidModulus(p, "must be below 2^31"));
        }
        if !is_prime(p) {
            return Err(Error::InvalidModulus(p, "not prime"));
        }
        Ok(Modulus(p))
    }

    pub fn get(self) -> u64 {
        self.0
    }
}

impl fmt::Display for Modulus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, b, m);
        }
        b = mul_mod(b, b, m);
        e >>= 1;
    }
    acc
}

/// Deterministic Miller-Rabin; the bases 2, 7, 61 are exact below 4,759,123,141.
pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for small in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n.is_multiple_of(small) {
            return n == small;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 7, 61] {
        if a % n == 0 {
            continue;
        }
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum FieldKind {
    Rationals,
    PrimeField,
    RationalFunctionField,
}

/// Which field a value lives in, plus the metadata the invariant formulas
/// depend on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FieldDescriptor {
    pub kind: FieldKind,
    pub p: Option<u64>,
    pub char_exponent: u64,
    pub is_perfect: bool,
}

impl FieldDescriptor {
    pub fn rationals() -> Self {
        FieldDescriptor {
            kind: FieldKind::Rationals,
            p: None,
            char_exponent: 1,
            is_perfect: true,
        }
    }

    pub fn prime_field(p: Modulus) -> Self {
        FieldDescriptor {
            kind: FieldKind::PrimeField,
            p: Some(p.get()),
            char_exponent: p.get(),
            is_perfect: true,
        }
    }

    pub fn rational_function_field(p: Modulus) -> Self {
        FieldDescriptor {
            kind: FieldKind::RationalFunctionField,
            p: Some(p.get()),
            char_exponent: p.get(),
            is_perfect: false,
        }
    }

    /// The validated modulus, for the two positive-characteristic kinds.
    pub fn modulus(&self) -> Option<Modulus> {
        self.p.map(Modulus)
    }
}

impl fmt::Display for FieldDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.kind, self.p) {
            (FieldKind::Rationals, _) => write!(f, "q"),
            (FieldKind::PrimeField, Some(p)) => write!(f, "fp:{p}"),
            (FieldKind::RationalFunctionField, Some(p)) => write!(f, "fpt:{p}"),
            _ => write!(f, "?"),
        }
    }
}

impl FromStr for FieldDescriptor {
    type Err = Error;

    /// Accepts `q`, `fp:<p>` and `fpt:<p>`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.eq_ignore_ascii_case("q") {
            return Ok(Self::rationals());
        }
        let bad = || Error::Syntax {
            offset: 0,
            message: format!("unknown field `{s}` (expected q, fp:<p> or fpt:<p>)"),
        };
        let (tag, num) = s.split_once(':').ok_or_else(bad)?;
        let p: u64 = num.trim().parse().map_err(|_| bad())?;
        match tag.trim().to_ascii_lowercase().as_str() {
            "fp" => Ok(Self::prime_field(Modulus::new(p)?)),
            "fpt" => Ok(Self::rational_function_field(Modulus::new(p)?)),
            _ => Err(bad()),
        }
    }
}

impl Serialize for FieldDescriptor {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}
