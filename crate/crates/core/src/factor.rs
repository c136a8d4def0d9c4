//! Squarefree and separable decompositions, full factorization over `F_p`,
//! and the closure multiplicity profile.
//!
//! Full factorization over `Q` and `F_p(t)` is not attempted; those fields
//! take caller-supplied [`Factorization`] values, checked by
//! [`Factorization::validate`].

use std::fmt;

use num_bigint::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::field::{Field, Fp};
use crate::poly::Poly;

/// Seed used by [`factor_prime_field`] callers that do not care.
pub const DEFAULT_SEED: u64 = 0x7011_e4a7;

/// `unit * prod g^m` with monic, pairwise coprime `g`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization<F: Field> {
    pub unit: F,
    pub factors: Vec<(Poly<F>, u32)>,
}

impl<F: Field> Factorization<F> {
    pub fn new(unit: F, factors: Vec<(Poly<F>, u32)>) -> Self {
        Factorization { unit, factors }
    }

    /// `lc(f) * (f / lc(f))^1`, the trivial factorization of a nonconstant `f`.
    pub fn trivial(f: &Poly<F>) -> Result<Self> {
        if f.is_constant() {
            return Err(Error::ConstantInput);
        }
        Ok(Factorization {
            unit: f.leading().expect("nonconstant").clone(),
            factors: vec![(f.monic(), 1)],
        })
    }

    pub fn ctx(&self) -> F::Ctx {
        self.unit.ctx()
    }

    /// `sum m * deg g`.
    pub fn degree(&self) -> usize {
        self.factors.iter().map(|(g, m)| *m as usize * g.deg()).sum()
    }

    /// Multiplies everything back out.
    pub fn expand(&self) -> Poly<F> {
        self.factors
            .iter()
            .fold(Poly::constant(self.unit.clone()), |acc, (g, m)| {
                &acc * &g.pow(*m as u64)
            })
    }

    /// Checks the structural invariants: nonzero unit, monic nonconstant
    /// factors, positive multiplicities, pairwise coprime factors.
    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidFactorization(msg));
        if self.unit.is_zero() {
            return bad("unit is zero".into());
        }
        let ctx = self.ctx();
        for (i, (g, m)) in self.factors.iter().enumerate() {
            if g.ctx() != &ctx {
                return bad(format!("factor {g} lives in another field"));
            }
            if g.is_constant() {
                return bad(format!("factor {g} is constant"));
            }
            if !g.is_monic() {
                return bad(format!("factor {g} is not monic"));
            }
            if *m == 0 {
                return bad(format!("factor {g} has multiplicity 0"));
            }
            for (h, _) in &self.factors[..i] {
                if !g.gcd(h).is_one() {
                    return bad(format!("factors {h} and {g} are not coprime"));
                }
            }
        }
        Ok(())
    }

    /// Validates and additionally checks that the product equals `f`.
    pub fn validate_against(&self, f: &Poly<F>) -> Result<()> {
        self.validate()?;
        if &self.expand() != f {
            return Err(Error::InvalidFactorization(format!(
                "factors multiply to {}, not {f}",
                self.expand()
            )));
        }
        Ok(())
    }
}

impl<F: Field> fmt::Display for Factorization<F> {
    /// `unit * (g1)^m1 * (g2)^m2 * ...`, re-parseable in factored mode.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let unit = self.unit.to_string();
        if unit.contains(' ') {
            write!(f, "({unit})")?;
        } else {
            f.write_str(&unit)?;
        }
        for (g, m) in &self.factors {
            write!(f, " * ({g})^{m}")?;
        }
        Ok(())
    }
}

/// The derivative-gcd loop. For monic nonconstant `f`, returns the monic
/// separable parts `(z_i, i)` carrying the roots whose multiplicity `i` is
/// prime to the characteristic, and the leftover product of roots whose
/// multiplicity is divisible by it (a polynomial in `x^p`, or 1).
fn separable_parts<F: Field>(f: &Poly<F>) -> (Vec<(Poly<F>, u32)>, Poly<F>) {
    let d = f.derivative();
    if d.is_zero() {
        return (Vec::new(), f.clone());
    }
    let mut c = f.gcd(&d);
    let mut w = f.exact_div(&c).expect("gcd divides");
    let mut parts = Vec::new();
    let mut i = 1;
    while !w.is_constant() {
        let y = w.gcd(&c);
        let z = w.exact_div(&y).expect("gcd divides");
        if !z.is_constant() {
            parts.push((z, i));
        }
        i += 1;
        c = c.exact_div(&y).expect("gcd divides");
        w = y;
    }
    (parts, c.monic())
}

/// Squarefree decomposition over a perfect field: `f = lc * prod g_i^i` with
/// each `g_i` squarefree. In positive characteristic the `x^p`-part is
/// unwound with coefficient-wise p-th roots, which fails with
/// `UNSUPPORTED_FIELD` over `F_p(t)` when a coefficient is not a p-th power;
/// use [`separable_decomposition`] there.
pub fn squarefree_decomposition<F: Field>(f: &Poly<F>) -> Result<Factorization<F>> {
    if f.is_constant() {
        return Err(Error::ConstantInput);
    }
    let p = F::characteristic(f.ctx()) as usize;
    let mut factors = Vec::new();
    let mut current = f.monic();
    let mut scale = 1u32;
    loop {
        let (parts, rest) = separable_parts(&current);
        factors.extend(parts.into_iter().map(|(g, i)| (g, i * scale)));
        if rest.is_constant() {
            break;
        }
        let deflated = rest.deflate(p).expect("leftover is a polynomial in x^p");
        let coeffs = deflated
            .coeffs()
            .iter()
            .map(F::pth_root)
            .collect::<Result<Vec<_>>>()?;
        current = Poly::new(f.ctx(), coeffs);
        scale *= p as u32;
    }
    Ok(Factorization::new(f.leading().expect("nonconstant").clone(), factors))
}

/// Decomposition valid over every supported field, perfect or not:
/// `f = lc * prod g^m` where each `g = h(x^(p^e))` with `h` separable and
/// monic, and the `g` are pairwise coprime. Every root of such a `g` has
/// multiplicity `m * p^e` in `f`.
pub fn separable_decomposition<F: Field>(f: &Poly<F>) -> Result<Factorization<F>> {
    if f.is_constant() {
        return Err(Error::ConstantInput);
    }
    let p = F::characteristic(f.ctx()) as usize;
    let mut factors = Vec::new();
    let mut current = f.monic();
    let mut inflation = 1usize;
    loop {
        let (parts, rest) = separable_parts(&current);
        factors.extend(parts.into_iter().map(|(h, i)| (h.inflate(inflation), i)));
        if rest.is_constant() {
            break;
        }
        current = rest.deflate(p).expect("leftover is a polynomial in x^p");
        inflation *= p;
    }
    Ok(Factorization::new(f.leading().expect("nonconstant").clone(), factors))
}

fn merge_profile(mut entries: Vec<(u64, usize)>) -> Vec<(u64, usize)> {
    entries.sort_by_key(|e| std::cmp::Reverse(e.0));
    let mut out: Vec<(u64, usize)> = Vec::new();
    for (m, c) in entries {
        match out.last_mut() {
            Some(last) if last.0 == m => last.1 += c,
            _ => out.push((m, c)),
        }
    }
    out
}

/// For each root multiplicity over the algebraic closure, the number of
/// distinct roots carrying it, largest multiplicity first. The sum of
/// `multiplicity * count` is `deg f`.
pub fn multiplicity_profile<F: Field>(f: &Poly<F>) -> Result<Vec<(u64, usize)>> {
    multiplicity_profile_of(&separable_decomposition(f)?)
}

/// [`multiplicity_profile`] read off a factorization whose factors are each
/// of the form `h(x^(p^e))` with `h` separable (true of irreducible factors).
pub fn multiplicity_profile_of<F: Field>(fac: &Factorization<F>) -> Result<Vec<(u64, usize)>> {
    let q = F::char_exponent(&fac.ctx());
    let mut entries = Vec::new();
    for (g, m) in &fac.factors {
        let sep = g.desubstitute()?;
        if !sep.f_sep.is_separable()? {
            return Err(Error::UnsupportedField(format!(
                "factor {g} is not a separable polynomial in x^(p^e); supply an irreducible factorization"
            )));
        }
        entries.push((*m as u64 * q.pow(sep.e), sep.f_sep.deg()));
    }
    Ok(merge_profile(entries))
}

fn pow_mod_big(base: &Poly<Fp>, exp: &BigUint, modulus: &Poly<Fp>) -> Poly<Fp> {
    let mut acc = Poly::one(modulus.ctx());
    let b = base.rem(modulus).expect("nonzero modulus");
    for i in (0..exp.bits()).rev() {
        acc = (&acc * &acc).rem(modulus).expect("nonzero modulus");
        if exp.bit(i) {
            acc = (&acc * &b).rem(modulus).expect("nonzero modulus");
        }
    }
    acc
}

fn pow_mod(base: &Poly<Fp>, exp: u64, modulus: &Poly<Fp>) -> Poly<Fp> {
    pow_mod_big(base, &BigUint::from(exp), modulus)
}

/// Splits a squarefree monic `f` into `(g, d)` where `g` is the product of
/// all irreducible factors of degree `d`.
fn distinct_degree(f: &Poly<Fp>) -> Vec<(Poly<Fp>, usize)> {
    let ctx = *f.ctx();
    let p = ctx.get();
    let x = Poly::x(&ctx);
    let mut out = Vec::new();
    let mut rest = f.clone();
    let mut h = x.clone();
    let mut d = 1;
    while rest.deg() >= 2 * d {
        h = pow_mod(&h, p, &rest);
        let g = (&h - &x).gcd(&rest);
        if !g.is_one() {
            rest = rest.exact_div(&g).expect("gcd divides");
            h = h.rem(&rest).expect("nonzero");
            out.push((g, d));
        }
        d += 1;
    }
    if !rest.is_constant() {
        let d = rest.deg();
        out.push((rest, d));
    }
    out
}

/// Cantor-Zassenhaus splitting of a monic `f` whose irreducible factors all
/// have degree `d`.
fn equal_degree<R: Rng>(f: &Poly<Fp>, d: usize, rng: &mut R, out: &mut Vec<Poly<Fp>>) {
    if f.deg() == d {
        out.push(f.clone());
        return;
    }
    let ctx = *f.ctx();
    let p = ctx.get();
    loop {
        let a = Poly::random_monic(&ctx, f.deg() - 1, rng);
        let b = if p == 2 {
            // absolute trace to F_2: a + a^2 + ... + a^(2^(d-1))
            let mut term = a.rem(f).expect("nonzero");
            let mut acc = term.clone();
            for _ in 1..d {
                term = (&term * &term).rem(f).expect("nonzero");
                acc = &acc + &term;
            }
            acc
        } else {
            let exp = (BigUint::from(p).pow(d as u32) - 1u32) / 2u32;
            &pow_mod_big(&a, &exp, f) - &Poly::one(&ctx)
        };
        let g = b.gcd(f);
        if !g.is_constant() && g.deg() < f.deg() {
            let h = f.exact_div(&g).expect("gcd divides");
            equal_degree(&g, d, rng, out);
            equal_degree(&h, d, rng, out);
            return;
        }
    }
}

/// Full monic irreducible factorization over `F_p`. Equal-degree splitting
/// is randomized; `seed` makes it reproducible. Factors come out sorted by
/// degree, then by coefficients.
pub fn factor_prime_field(f: &Poly<Fp>, seed: u64) -> Result<Factorization<Fp>> {
    let sqf = squarefree_decomposition(f)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut factors = Vec::new();
    for (part, m) in &sqf.factors {
        for (g, d) in distinct_degree(part) {
            let mut irreducibles = Vec::new();
            equal_degree(&g, d, &mut rng, &mut irreducibles);
            factors.extend(irreducibles.into_iter().map(|h| (h, *m)));
        }
    }
    factors.sort_by_cached_key(|(g, _)| {
        (g.deg(), g.coeffs().iter().map(|c| c.value()).collect::<Vec<_>>())
    });
    Ok(Factorization::new(sqf.unit, factors))
}

/// Rabin-style test: `g` is irreducible iff `gcd(g, x^(p^d) - x mod g) = 1`
/// for every `1 <= d < deg g`.
pub fn is_irreducible_prime_field(g: &Poly<Fp>) -> bool {
    if g.is_constant() {
        return false;
    }
    let ctx = *g.ctx();
    let x = Poly::x(&ctx);
    let mut h = x.rem(g).expect("nonzero");
    for _ in 1..g.deg() {
        h = pow_mod(&h, ctx.get(), g);
        if !(&h - &x).gcd(g).is_one() {
            return false;
        }
    }
    true
}

/// A uniformly drawn monic irreducible of the given degree over `F_p`.
pub fn random_irreducible<R: Rng + ?Sized>(ctx: &crate::field::Modulus, degree: usize, rng: &mut R) -> Poly<Fp> {
    loop {
        let g = Poly::random_monic(ctx, degree, rng);
        if is_irreducible_prime_field(&g) {
            return g;
        }
    }
}
