//! Resultants over `Q[u]` recovered from their images modulo word-sized
//! primes.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{check_resultant_args, resultant_in_u_by_interpolation, UPolynomial};
use crate::error::Result;
use crate::field::{is_prime, Field, Fp, Modulus, Rational, Rationals, MODULUS_BOUND};
use crate::poly::Poly;

/// Primes below `2^31`, largest first.
fn primes() -> impl Iterator<Item = Modulus> {
    (3..MODULUS_BOUND)
        .rev()
        .step_by(2)
        .filter(|&p| is_prime(p))
        .map(|p| Modulus::new(p).expect("prime below the bound"))
}

fn reduce(n: &BigInt, m: Modulus) -> Fp {
    let r = n.mod_floor(&BigInt::from(m.get()));
    Fp::new(r.to_i64().expect("residue fits"), m)
}

fn l1(coeffs: &[BigInt]) -> BigInt {
    coeffs.iter().map(|c| c.abs()).sum()
}

/// `res_x(f, G)` as a polynomial in `u` over `Q`, the same polynomial as
/// [`super::resultant_in_u_by_elimination`].
///
/// Denominators are cleared first (`res(a f, b G) = a^deg_x(G) b^deg(f) res(f, G)`).
/// The integer resultant is then computed modulo primes that preserve both
/// exact `x`-degrees, until the product of the primes exceeds twice the
/// bound `|f|_1^deg_x(G) |G|_1^deg(f)` on every coefficient, and recombined
/// by the Chinese remainder theorem.
pub fn resultant_in_u_multimodular(
    f: &Poly<Rational>,
    g: &UPolynomial<Rational>,
) -> Result<Poly<Rational>> {
    check_resultant_args(f, g)?;
    let gx = g.x_major(&Rationals);
    let n = f.deg();
    if gx.len() == 1 {
        return Ok(gx[0].pow(n as u64));
    }
    let dg = gx.len() - 1;

    let a = Rational::clearing_factor(f.coeffs(), &Rationals);
    let flat: Vec<Rational> = g.coeffs().iter().flat_map(|c| c.coeffs().to_vec()).collect();
    let b = Rational::clearing_factor(&flat, &Rationals);
    let fi: Vec<BigInt> = f.coeffs().iter().map(|c| c.mul(&a).numer().clone()).collect();
    // gi[i][j]: coefficient of u^i x^j
    let gi: Vec<Vec<BigInt>> = g
        .coeffs()
        .iter()
        .map(|c| c.coeffs().iter().map(|v| v.mul(&b).numer().clone()).collect())
        .collect();

    let g_norm: BigInt = gi.iter().map(|row| l1(row)).sum();
    let bound = l1(&fi).pow(dg as u32) * g_norm.pow(n as u32);
    let target = bound * 2;
    let u_degree = n * (gi.len() - 1);

    let mut residues = vec![BigInt::zero(); u_degree + 1];
    let mut modulus = BigInt::one();
    for m in primes() {
        if modulus > target {
            break;
        }
        let fp = Poly::new(&m, fi.iter().map(|c| reduce(c, m)).collect());
        if fp.degree() != Some(n) {
            continue;
        }
        let gp = UPolynomial::new(
            gi.iter()
                .map(|row| Poly::new(&m, row.iter().map(|c| reduce(c, m)).collect()))
                .collect(),
        );
        if gp.x_degree() != Some(dg) {
            continue;
        }
        let points = Fp::interpolation_points(u_degree + 1, &m).expect("prime exceeds degree");
        let image = resultant_in_u_by_interpolation(&fp, &gp, &points)?;

        let p = BigInt::from(m.get());
        let m_inv = Fp::from_bigint(&m, &modulus).inv()?;
        for (k, r) in residues.iter_mut().enumerate() {
            let have = reduce(r, m);
            let step = image.coeff(k).sub(&have).mul(&m_inv);
            *r += &modulus * BigInt::from(step.value());
        }
        modulus *= p;
    }

    let half = &modulus >> 1;
    let scale = a.pow(dg as u64).mul(&b.pow(n as u64));
    let coeffs = residues
        .into_iter()
        .map(|r| {
            let r = if r > half { r - &modulus } else { r };
            Rational::from_big(r, BigInt::one()).map(|v| v.div(&scale).expect("nonzero scale"))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Poly::new(&Rationals, coeffs))
}
