//! Sylvester resultants over a field and over `K[u]`, and the classical
//! discriminant.
//!
//! Resultants are built from the exact degrees of their arguments, with the
//! convention `res(f, g) = lc(f)^deg(g) * prod g(r)` over the roots `r` of `f`.
//! Constant arguments follow `res(f, c) = c^deg(f)` and `res(c, g) = c^deg(g)`.

mod multimodular;

pub use multimodular::resultant_in_u_multimodular;

use crate::error::{Error, Result};
use crate::field::{sign, Field};
use crate::poly::Poly;

/// Integral-domain operations needed by fraction-free elimination.
pub trait Domain: Clone {
    fn is_null(&self) -> bool;
    fn times(&self, rhs: &Self) -> Self;
    fn minus(&self, rhs: &Self) -> Self;
    fn negate(&self) -> Self;
    /// Quotient of a division that is known to be exact.
    fn exact_div(&self, rhs: &Self) -> Self;
}

impl<F: Field> Domain for F {
    fn is_null(&self) -> bool {
        Field::is_zero(self)
    }
    fn times(&self, rhs: &Self) -> Self {
        Field::mul(self, rhs)
    }
    fn minus(&self, rhs: &Self) -> Self {
        Field::sub(self, rhs)
    }
    fn negate(&self) -> Self {
        Field::neg(self)
    }
    fn exact_div(&self, rhs: &Self) -> Self {
        Field::exact_quotient(self, rhs).expect("nonzero Bareiss pivot")
    }
}

impl<F: Field> Domain for Poly<F> {
    fn is_null(&self) -> bool {
        Poly::is_zero(self)
    }
    fn times(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn minus(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn negate(&self) -> Self {
        -self
    }
    fn exact_div(&self, rhs: &Self) -> Self {
        Poly::exact_div(self, rhs).expect("nonzero Bareiss pivot")
    }
}

/// Determinant of a square matrix by Bareiss fraction-free elimination.
/// `one` is the multiplicative identity of the entry ring.
pub fn bareiss_determinant<R: Domain>(mut m: Vec<Vec<R>>, one: R) -> R {
    let n = m.len();
    if n == 0 {
        return one;
    }
    let mut negate = false;
    let mut prev = one;
    for k in 0..n - 1 {
        if m[k][k].is_null() {
            match (k + 1..n).find(|&i| !m[i][k].is_null()) {
                Some(i) => {
                    m.swap(k, i);
                    negate = !negate;
                }
                None => return m[k][k].clone(),
            }
        }
        let (top, bottom) = m.split_at_mut(k + 1);
        let pivot_row = &top[k];
        let pivot = &pivot_row[k];
        for row in bottom.iter_mut() {
            let lead = row[k].clone();
            for j in k + 1..n {
                let t = row[j].times(pivot).minus(&lead.times(&pivot_row[j]));
                row[j] = t.exact_div(&prev);
            }
            row[k] = lead.minus(&lead);
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if negate {
        det.negate()
    } else {
        det
    }
}

/// The `(m + n)`-square Sylvester matrix of `a` (degree `n`) and `b` (degree
/// `m`), given coefficient lists from the constant term up.
pub fn sylvester_matrix<R: Domain>(a: &[R], b: &[R], zero: &R) -> Vec<Vec<R>> {
    let n = a.len() - 1;
    let m = b.len() - 1;
    let size = n + m;
    let mut rows = Vec::with_capacity(size);
    for shift in 0..m {
        let mut row = vec![zero.clone(); size];
        for (i, c) in a.iter().rev().enumerate() {
            row[shift + i] = c.clone();
        }
        rows.push(row);
    }
    for shift in 0..n {
        let mut row = vec![zero.clone(); size];
        for (i, c) in b.iter().rev().enumerate() {
            row[shift + i] = c.clone();
        }
        rows.push(row);
    }
    rows
}

/// `res_x(f, g)` over the coefficient field.
pub fn sylvester_resultant<F: Field>(f: &Poly<F>, g: &Poly<F>) -> Result<F> {
    if f.is_zero() || g.is_zero() {
        return Err(Error::ZeroInput);
    }
    let ctx = f.ctx();
    let (df, dg) = (f.deg(), g.deg());
    if dg == 0 {
        return Ok(g.coeff(0).pow(df as u64));
    }
    if df == 0 {
        return Ok(f.coeff(0).pow(dg as u64));
    }
    let m = sylvester_matrix(f.coeffs(), g.coeffs(), &F::zero(ctx));
    Ok(F::determinant(m, ctx))
}

/// A polynomial in an auxiliary variable `u` whose coefficients are
/// polynomials in `x`: `sum_i u^i coeffs[i](x)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UPolynomial<F: Field> {
    coeffs: Vec<Poly<F>>,
}

impl<F: Field> UPolynomial<F> {
    pub fn new(mut coeffs: Vec<Poly<F>>) -> Self {
        while coeffs.last().is_some_and(Poly::is_zero) {
            coeffs.pop();
        }
        UPolynomial { coeffs }
    }

    /// `sum_{i=1}^{deg f} u^(i-1) f^[i](x)`, the Hasse-derivative generating
    /// polynomial of `f`.
    pub fn hasse_generating(f: &Poly<F>) -> Self {
        Self::new((1..=f.deg()).map(|i| f.hasse_derivative(i)).collect())
    }

    pub fn coeffs(&self) -> &[Poly<F>] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Exact degree in `x` over `K[u]`; `None` for zero.
    pub fn x_degree(&self) -> Option<usize> {
        self.coeffs.iter().filter_map(Poly::degree).max()
    }

    /// Regroups as a polynomial in `x` with coefficients in `K[u]`, listed
    /// from `x^0` up to the exact `x`-degree.
    pub fn x_major(&self, ctx: &F::Ctx) -> Vec<Poly<F>> {
        let Some(dx) = self.x_degree() else {
            return Vec::new();
        };
        (0..=dx)
            .map(|j| Poly::new(ctx, self.coeffs.iter().map(|c| c.coeff(j)).collect()))
            .collect()
    }

    /// Specializes `u = u0`, giving a polynomial in `x`.
    pub fn eval_u(&self, u0: &F, ctx: &F::Ctx) -> Poly<F> {
        self.coeffs
            .iter()
            .rev()
            .fold(Poly::zero(ctx), |acc, c| &acc.scale(u0) + c)
    }
}

/// `res_x(f, G)` as an exact polynomial in `u`, from the Sylvester matrix
/// built on the exact `x`-degree of `G`. Over `Q` the work is done modulo
/// primes; other fields that supply interpolation nodes go through
/// [`resultant_in_u_by_interpolation`], the rest through
/// [`resultant_in_u_by_elimination`]. All routes return the same polynomial.
pub fn resultant_in_u<F: Field>(f: &Poly<F>, g: &UPolynomial<F>) -> Result<Poly<F>> {
    check_resultant_args(f, g)?;
    if let Some(res) = F::specialized_resultant_in_u(f, g) {
        return res;
    }
    let bound = f.deg() * (g.coeffs().len() - 1);
    match F::interpolation_points(bound + 1, f.ctx()) {
        Some(points) => resultant_in_u_by_interpolation(f, g, &points),
        None => resultant_in_u_by_elimination(f, g),
    }
}

fn check_resultant_args<F: Field>(f: &Poly<F>, g: &UPolynomial<F>) -> Result<()> {
    if f.is_zero() || f.is_constant() || g.is_zero() {
        return Err(Error::ZeroInput);
    }
    Ok(())
}

/// Bareiss elimination on the Sylvester matrix over `K[u]`.
pub fn resultant_in_u_by_elimination<F: Field>(
    f: &Poly<F>,
    g: &UPolynomial<F>,
) -> Result<Poly<F>> {
    check_resultant_args(f, g)?;
    let ctx = f.ctx();
    let gx = g.x_major(ctx);
    if gx.len() == 1 {
        return Ok(gx[0].pow(f.deg() as u64));
    }
    let fx: Vec<Poly<F>> = f.coeffs().iter().cloned().map(Poly::constant).collect();
    let m = sylvester_matrix(&fx, &gx, &Poly::zero(ctx));
    Ok(bareiss_determinant(m, Poly::one(ctx)))
}

/// Specializes `u` at each of `points`, takes scalar Sylvester determinants
/// with the matrix shape fixed by the exact `x`-degree of `G`, and
/// interpolates. Needs more than `deg f * deg_u G` distinct points.
pub fn resultant_in_u_by_interpolation<F: Field>(
    f: &Poly<F>,
    g: &UPolynomial<F>,
    points: &[F],
) -> Result<Poly<F>> {
    check_resultant_args(f, g)?;
    let ctx = f.ctx();
    let gx = g.x_major(ctx);
    if gx.len() == 1 {
        return Ok(gx[0].pow(f.deg() as u64));
    }
    let bound = f.deg() * (g.coeffs().len() - 1);
    if points.len() <= bound {
        return Err(Error::DegreeTooSmall(points.len(), bound + 1));
    }
    let points = &points[..=bound];
    let values = points
        .iter()
        .map(|u0| {
            let b: Vec<F> = gx.iter().map(|c| c.eval(u0)).collect();
            let m = sylvester_matrix(f.coeffs(), &b, &F::zero(ctx));
            F::determinant(m, ctx)
        })
        .collect::<Vec<_>>();
    Poly::interpolate(points, &values)
}

/// `disc(f) = (-1)^binom(n,2) / a_n * res(f, f')`, with the derivative taken
/// at its formal degree `n - 1`. Linear polynomials have discriminant 1.
pub fn discriminant<F: Field>(f: &Poly<F>) -> Result<F> {
    if f.is_constant() {
        return Err(Error::ConstantInput);
    }
    let ctx = f.ctx();
    let n = f.deg();
    if n == 1 {
        return Ok(F::one(ctx));
    }
    let d = f.derivative();
    if d.is_zero() {
        return Ok(F::zero(ctx));
    }
    let lc = f.leading().expect("nonconstant").clone();
    // the exact-degree resultant lacks lc^(n-1-deg f') when f' drops degree
    let res = sylvester_resultant(f, &d)?.mul(&lc.pow((n - 1 - d.deg()) as u64));
    let s: F = sign(ctx, (n * (n - 1) / 2) as u64);
    s.mul(&res).div(&lc)
}
