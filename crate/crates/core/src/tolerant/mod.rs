//! The tolerant and its relatives.
//!
//! For `f = a_n prod (x - r_i)^(m_i)` over an algebraic closure, with the
//! `r_i` distinct,
//!
//! ```text
//! tol(f)  = a_n^(2n-2) prod_{i<j} (r_i - r_j)^(2 m_i m_j)
//! dupl(f) = a_n^2 tol(f)
//! ```
//!
//! The reference computation is [`tol`], which goes through the generalized
//! discriminant and needs no factorization, only gcds to fix the sign. The
//! factorization formulas and the root product are independent paths used to
//! cross-check it.

mod report;

pub use report::{
    report, DiscEntry, ErrorRecord, ExponentEntry, InTEntry, InvariantReport, ReportOptions,
};

use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};

use crate::error::{Error, Result};
use crate::factor::Factorization;
use crate::field::{sign, Field};
use crate::poly::Poly;
use crate::resultant::{discriminant, resultant_in_u, sylvester_resultant, UPolynomial};

/// `lc(f)^-1 * tc_u res_x(f, sum_{i=1}^n u^(i-1) f^[i](x))`, for `deg f >= 2`.
///
/// The resultant is taken with the second argument at its formal `x`-degree
/// `n - 1`. When the Hasse generating polynomial has smaller exact degree
/// (for instance when `n` is a multiple of the characteristic) the exact
/// Sylvester determinant is short by `lc(f)^((n-1) - deg_x G)`.
pub fn gdisc<F: Field>(f: &Poly<F>) -> Result<F> {
    let n = f.degree().ok_or(Error::ZeroPolynomial)?;
    if n < 2 {
        return Err(Error::DegreeTooSmall(n, 2));
    }
    // gdisc(c f) = c^(2n-2) gdisc(f); integral coefficients keep the
    // elimination free of denominators
    let c = F::clearing_factor(f.coeffs(), f.ctx());
    let scaled = f.scale(&c);
    let lc = scaled.leading().expect("nonzero").clone();
    let g = UPolynomial::hasse_generating(&scaled);
    let dg = g.x_degree().expect("f^[n] = lc is nonzero");
    let res = resultant_in_u(&scaled, &g)?;
    let trailing = res
        .coeffs()
        .iter()
        .find(|c| !c.is_zero())
        .cloned()
        .ok_or_else(|| Error::ZeroDiscriminantFactor(format!("res_x(f, G) vanished for {f}")))?;
    let formal = lc.pow((n - 1 - dg) as u64);
    trailing
        .mul(&formal)
        .div(&lc)?
        .div(&c.pow(2 * n as u64 - 2))
}

/// The `k` with `tol(f) = (-1)^k gdisc(f)`: `sum_{i<j} m_i m_j` over the
/// distinct roots of `f` in the closure, with multiplicities `m_i`. This is
/// `binom(n, 2)` exactly when `sum binom(m_i, 2)` is even, so in particular
/// for separable `f`.
pub fn gdisc_sign_exponent<F: Field>(f: &Poly<F>) -> Result<u64> {
    let n = f.degree().ok_or(Error::ZeroPolynomial)? as u64;
    if n <= 1 {
        return Ok(0);
    }
    if F::characteristic(f.ctx()) == 2 {
        return Ok(0);
    }
    let profile = crate::factor::multiplicity_profile(f)?;
    let squares: u64 = profile.iter().map(|(m, c)| *c as u64 * m * m).sum();
    Ok((n * n - squares) / 2)
}

/// The tolerant, as `(-1)^k gdisc(f)` with `k` from [`gdisc_sign_exponent`].
/// Constants and linear polynomials have tolerant 1.
pub fn tol<F: Field>(f: &Poly<F>) -> Result<F> {
    let n = f.degree().ok_or(Error::ZeroPolynomial)?;
    if n <= 1 {
        return Ok(F::one(f.ctx()));
    }
    let s: F = sign(f.ctx(), gdisc_sign_exponent(f)?);
    Ok(s.mul(&gdisc(f)?))
}

/// The duplicant `a_n^2 tol(f)`.
pub fn dupl<F: Field>(f: &Poly<F>) -> Result<F> {
    let t = tol(f)?;
    Ok(f.leading().expect("tol succeeded").square().mul(&t))
}

/// Distinct base-field roots with multiplicities, and a leading coefficient.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootMultiset<F: Field> {
    pub leading: F,
    pub roots: Vec<(F, u32)>,
}

impl<F: Field> RootMultiset<F> {
    pub fn new(leading: F, roots: Vec<(F, u32)>) -> Self {
        RootMultiset { leading, roots }
    }

    pub fn degree(&self) -> usize {
        self.roots.iter().map(|(_, m)| *m as usize).sum()
    }

    /// `leading * prod (x - r)^m`.
    pub fn expand(&self) -> Poly<F> {
        let ctx = self.leading.ctx();
        self.roots.iter().fold(Poly::constant(self.leading.clone()), |acc, (r, m)| {
            let lin = Poly::new(&ctx, vec![r.neg(), F::one(&ctx)]);
            &acc * &lin.pow(*m as u64)
        })
    }
}

/// `a^(2n-2) prod_{i<j} (r_i - r_j)^(2 m_i m_j)`, straight from the roots.
pub fn tol_from_roots<F: Field>(rm: &RootMultiset<F>, n: usize) -> Result<F> {
    if rm.leading.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let found = rm.degree();
    if found != n {
        return Err(Error::DegreeMismatch { expected: n, found });
    }
    let ctx = rm.leading.ctx();
    if n == 0 {
        return Ok(F::one(&ctx));
    }
    let mut acc = rm.leading.pow(2 * n as u64 - 2);
    for (i, (ri, mi)) in rm.roots.iter().enumerate() {
        for (rj, mj) in &rm.roots[i + 1..] {
            let diff = ri.sub(rj);
            if diff.is_zero() {
                return Err(Error::DuplicateRoots);
            }
            acc = acc.mul(&diff.pow(2 * *mi as u64 * *mj as u64));
        }
    }
    Ok(acc)
}

/// A value together with whether it rests on an unverified assumption.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Assessed<T> {
    pub value: T,
    /// True when the caller's irreducibility claim could not be checked.
    pub trusted: bool,
}

/// `a^(2n-2) disc(f_sep)^(p^e)` for `f = a f_sep(x^(p^e))` irreducible.
///
/// Over `F_p` the irreducibility claim is verified (and a reducible input is
/// rejected); elsewhere it is verified only in the cases settled by
/// [`Field::irreducibility_known`] and otherwise flagged as trusted.
pub fn tol_irreducible<F: Field>(f: &Poly<F>) -> Result<Assessed<F>> {
    let n = f.degree().ok_or(Error::ZeroPolynomial)?;
    if n == 0 {
        return Err(Error::ConstantInput);
    }
    let trusted = match F::irreducibility_known(f) {
        Some(true) => false,
        Some(false) => {
            return Err(Error::InvalidFactorization(format!("{f} is reducible")));
        }
        None => true,
    };
    let ctx = f.ctx();
    let lc = f.leading().expect("nonconstant");
    let form = f.monic().desubstitute()?;
    let q = BigUint::from(F::char_exponent(ctx)).pow(form.e);
    let value = lc
        .pow(2 * n as u64 - 2)
        .mul(&discriminant(&form.f_sep)?.pow_big(&q));
    Ok(Assessed { value, trusted })
}

/// Which factorization formula [`tol_from_factorization`] evaluates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FormulaMode {
    /// `a^(2n-2) prod disc(f_i)^(m_i(2m_i-N)) prod_{i<j} disc(f_i f_j)^(m_i m_j)`
    /// with `N = sum m_i`; every factor must be separable.
    PaperSeparable,
    /// The same shape with `N = sum m_i p^(e_i)`, factor discriminants
    /// `disc(f_i,sep)^(m_i p^(e_i)(2 m_i p^(e_i) - N))` and cross terms
    /// `disc(f_i,sep f_j,sep)^(m_i m_j p^(e_i+e_j))`. Kept verbatim; it does
    /// not agree with the root product once some `e_i > 0`.
    PaperGeneral,
    /// `a^(2n-2) prod disc(f_i,sep)^(m_i^2 p^(e_i))
    ///  prod_{i<j} res(f_i,sep^(p^(E-e_i)), f_j,sep^(p^(E-e_j)))^(2 m_i m_j p^min(e_i,e_j))`
    /// with `E = max(e_i, e_j)` and `g^(p^a)` the Frobenius twist. Agrees with
    /// the root product for every valid factorization.
    Corrected,
}

impl FormulaMode {
    pub fn name(self) -> &'static str {
        match self {
            FormulaMode::PaperSeparable => "paper-separable",
            FormulaMode::PaperGeneral => "paper-general",
            FormulaMode::Corrected => "corrected",
        }
    }
}

impl fmt::Display for FormulaMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FormulaMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().replace('_', "-").as_str() {
            "paper-separable" => Ok(FormulaMode::PaperSeparable),
            "paper-general" => Ok(FormulaMode::PaperGeneral),
            "corrected" => Ok(FormulaMode::Corrected),
            _ => Err(Error::Syntax {
                offset: 0,
                message: format!(
                    "unknown mode `{s}` (expected paper-separable, paper-general or corrected)"
                ),
            }),
        }
    }
}

struct Part<F: Field> {
    g: Poly<F>,
    m: BigUint,
    sep: Poly<F>,
    e: u32,
}

fn parts<F: Field>(fac: &Factorization<F>) -> Result<Vec<Part<F>>> {
    fac.factors
        .iter()
        .map(|(g, m)| {
            let form = g.desubstitute()?;
            if !form.f_sep.is_separable()? {
                return Err(Error::InvalidFactorization(format!(
                    "factor {g} is not a separable polynomial in x^(p^e)"
                )));
            }
            Ok(Part {
                g: g.clone(),
                m: BigUint::from(*m),
                sep: form.f_sep,
                e: form.e,
            })
        })
        .collect()
}

/// `d^k`, refusing only the genuinely undefined `0^(negative)`.
fn signed_power<F: Field>(d: &F, k: &BigInt, what: impl Fn() -> String) -> Result<F> {
    if d.is_zero() && k.sign() == num_bigint::Sign::Minus {
        return Err(Error::ZeroDiscriminantFactor(what()));
    }
    d.pow_signed_big(k)
}

/// The tolerant evaluated from a factorization `unit * prod g_i^(m_i)` with
/// monic, pairwise coprime factors. See [`FormulaMode`] for the formulas.
pub fn tol_from_factorization<F: Field>(fac: &Factorization<F>, mode: FormulaMode) -> Result<F> {
    fac.validate()?;
    let ctx = fac.ctx();
    let n = fac.degree();
    if n == 0 {
        return Ok(F::one(&ctx));
    }
    let parts = parts(fac)?;
    let q = BigUint::from(F::char_exponent(&ctx));
    let mut acc = fac.unit.pow(2 * n as u64 - 2);
    match mode {
        FormulaMode::PaperSeparable => {
            if let Some(bad) = parts.iter().find(|pt| pt.e > 0 || !pt.g.is_separable().unwrap_or(false)) {
                return Err(Error::InseparableInSeparableMode(bad.g.to_string()));
            }
            let big_n: BigInt = parts.iter().map(|pt| BigInt::from(pt.m.clone())).sum();
            for pt in &parts {
                let m = BigInt::from(pt.m.clone());
                let k = &m * (BigInt::from(2) * &m - &big_n);
                let d = discriminant(&pt.g)?;
                acc = acc.mul(&signed_power(&d, &k, || format!("disc({})", pt.g))?);
            }
            for (i, a) in parts.iter().enumerate() {
                for b in &parts[i + 1..] {
                    let d = discriminant(&(&a.g * &b.g))?;
                    acc = acc.mul(&d.pow_big(&(&a.m * &b.m)));
                }
            }
        }
        FormulaMode::PaperGeneral => {
            let weight = |pt: &Part<F>| BigInt::from(&pt.m * q.pow(pt.e));
            let big_n: BigInt = parts.iter().map(weight).sum();
            for pt in &parts {
                let w = weight(pt);
                let k = &w * (BigInt::from(2) * &w - &big_n);
                let d = discriminant(&pt.sep)?;
                acc = acc.mul(&signed_power(&d, &k, || format!("disc({})", pt.sep))?);
            }
            for (i, a) in parts.iter().enumerate() {
                for b in &parts[i + 1..] {
                    let d = discriminant(&(&a.sep * &b.sep))?;
                    acc = acc.mul(&d.pow_big(&(&a.m * &b.m * q.pow(a.e + b.e))));
                }
            }
        }
        FormulaMode::Corrected => {
            for pt in &parts {
                let d = discriminant(&pt.sep)?;
                acc = acc.mul(&d.pow_big(&(&pt.m * &pt.m * q.pow(pt.e))));
            }
            for (i, a) in parts.iter().enumerate() {
                for b in &parts[i + 1..] {
                    let top = a.e.max(b.e);
                    let ra = a.sep.frobenius_twist(top - a.e)?;
                    let rb = b.sep.frobenius_twist(top - b.e)?;
                    let r = sylvester_resultant(&ra, &rb)?;
                    let k = BigUint::from(2u32) * &a.m * &b.m * q.pow(a.e.min(b.e));
                    acc = acc.mul(&r.pow_big(&k));
                }
            }
        }
    }
    Ok(acc)
}

/// `n^2 - 2n + sum m^2` over the closure multiplicities: the `k` with
/// `tol(f(alpha x)) = alpha^k tol(f)`.
pub fn homothety_exponent<F: Field>(f: &Poly<F>) -> Result<u64> {
    let n = f.degree().ok_or(Error::ZeroPolynomial)?;
    if n == 0 {
        return Ok(0);
    }
    Ok(exponent_from_profile(n, &crate::factor::multiplicity_profile(f)?))
}

/// [`homothety_exponent`] read off a factorization.
pub fn homothety_exponent_of<F: Field>(fac: &Factorization<F>) -> Result<u64> {
    let n = fac.degree();
    if n == 0 {
        return Ok(0);
    }
    Ok(exponent_from_profile(n, &crate::factor::multiplicity_profile_of(fac)?))
}

fn exponent_from_profile(n: usize, profile: &[(u64, usize)]) -> u64 {
    let n = n as u64;
    let squares: u64 = profile.iter().map(|(m, c)| *c as u64 * m * m).sum();
    // n^2 - 2n + sum m^2 >= n^2 - 2n + n >= 0
    n * n + squares - 2 * n
}

/// Whether `tol(f) = tol(f*)`, with `f*` the reciprocal polynomial.
pub fn in_t<F: Field>(f: &Poly<F>) -> Result<bool> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let recip = f.reciprocal()?;
    Ok(tol(f)? == tol(&recip)?)
}

/// Inversion invariance decided from a factorization, without roots:
/// `prod_i f_i,sep(0)^(2 m_i (n - m_i p^(e_i))) = (a_0 / a_n)^(2n-2)`.
pub fn inversion_criterion<F: Field>(fac: &Factorization<F>) -> Result<bool> {
    fac.validate()?;
    let ctx = fac.ctx();
    let n = fac.degree();
    if fac.factors.iter().any(|(g, _)| g.constant_term().is_zero()) {
        return Err(Error::ZeroConstantTerm);
    }
    if n == 0 {
        return Ok(true);
    }
    let parts = parts(fac)?;
    let q = BigUint::from(F::char_exponent(&ctx));
    let big_n = BigInt::from(n);
    let mut lhs = F::one(&ctx);
    let mut ratio = F::one(&ctx);
    for pt in &parts {
        let m = BigInt::from(pt.m.clone());
        let k = BigInt::from(2) * &m * (&big_n - &m * BigInt::from(q.pow(pt.e)));
        lhs = lhs.mul(&pt.sep.constant_term().pow_signed_big(&k)?);
        ratio = ratio.mul(&pt.g.constant_term().pow_big(&pt.m));
    }
    Ok(lhs == ratio.pow(2 * n as u64 - 2))
}
