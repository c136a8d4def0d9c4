use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use super::parse::{parse_factored, parse_poly, ParseField};
use crate::factor::{factor_prime_field, multiplicity_profile_of, random_irreducible, Factorization};
use crate::field::{sign, Field, FieldDescriptor, FieldKind, Fp, Modulus, RatFunc, Rational, Rationals};
use crate::poly::Poly;
use crate::resultant::discriminant;
use crate::tolerant::{
    dupl, gdisc, homothety_exponent_of, in_t, inversion_criterion, tol, tol_from_factorization,
    tol_from_roots, FormulaMode, RootMultiset,
};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    /// Position of the failing polynomial in the generated sequence.
    pub index: usize,
    /// The polynomial in factored form, re-parseable with `--factored`.
    pub input: String,
    pub check: &'static str,
    pub detail: String,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct Tally {
    pub passed: usize,
    pub failed: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SelfcheckSummary {
    pub seed: u64,
    pub count: usize,
    pub field: FieldDescriptor,
    pub max_degree: usize,
    pub passed: usize,
    pub failed: usize,
    pub per_check: BTreeMap<&'static str, Tally>,
    pub first_counterexample: Option<Counterexample>,
}

/// A generated polynomial with the structure it was built from.
struct Case<F: Field> {
    fac: Factorization<F>,
    roots: Option<RootMultiset<F>>,
}

trait Generate: ParseField {
    fn generate(ctx: &Self::Ctx, max_degree: usize, rng: &mut ChaCha8Rng) -> Case<Self>;

    /// A complete factorization computed from scratch, where available.
    fn full_factorization(_f: &Poly<Self>) -> Option<crate::error::Result<Factorization<Self>>> {
        None
    }
}

fn nonzero<F: Field>(ctx: &F::Ctx, rng: &mut ChaCha8Rng) -> F {
    loop {
        let c = F::sample(ctx, rng);
        if !c.is_zero() {
            return c;
        }
    }
}

/// Distinct rational roots with multiplicities up to 3.
impl Generate for Rational {
    fn generate(ctx: &Rationals, max_degree: usize, rng: &mut ChaCha8Rng) -> Case<Self> {
        let target = rng.gen_range(1..=max_degree);
        let mut roots: Vec<(Rational, u32)> = Vec::new();
        let mut n = 0;
        while n < target {
            let r = Rational::sample(ctx, rng);
            if roots.iter().any(|(s, _)| *s == r) {
                continue;
            }
            let m = rng.gen_range(1..=3.min(target - n)) as u32;
            n += m as usize;
            roots.push((r, m));
        }
        let leading: Rational = nonzero(ctx, rng);
        let factors = roots
            .iter()
            .map(|(r, m)| (Poly::new(ctx, vec![r.neg(), Rational::one(ctx)]), *m))
            .collect();
        Case {
            fac: Factorization::new(leading.clone(), factors),
            roots: Some(RootMultiset::new(leading, roots)),
        }
    }
}

/// Products of distinct random irreducibles with multiplicities up to 3.
impl Generate for Fp {
    fn generate(ctx: &Modulus, max_degree: usize, rng: &mut ChaCha8Rng) -> Case<Self> {
        let target = rng.gen_range(1..=max_degree);
        let mut factors: Vec<(Poly<Fp>, u32)> = Vec::new();
        let mut n = 0;
        let mut attempts = 0;
        while n < target && attempts < 64 {
            attempts += 1;
            let d = rng.gen_range(1..=(target - n).min(4));
            let g = random_irreducible(ctx, d, rng);
            if factors.iter().any(|(h, _)| *h == g) {
                continue;
            }
            let m = rng.gen_range(1..=3.min((target - n) / d)) as u32;
            n += m as usize * d;
            factors.push((g, m));
        }
        Case {
            fac: Factorization::new(nonzero(ctx, rng), factors),
            roots: None,
        }
    }

    fn full_factorization(f: &Poly<Fp>) -> Option<crate::error::Result<Factorization<Fp>>> {
        Some(factor_prime_field(f, crate::factor::DEFAULT_SEED))
    }
}

/// Coprime products of low-degree factors with coefficients in `F_p(t)`,
/// sometimes including the inseparable irreducible `x^p - (t + c)`.
impl Generate for RatFunc {
    fn generate(ctx: &Modulus, max_degree: usize, rng: &mut ChaCha8Rng) -> Case<Self> {
        let p = ctx.get() as usize;
        let target = rng.gen_range(1..=max_degree);
        let mut factors: Vec<(Poly<RatFunc>, u32)> = Vec::new();
        let mut n = 0;
        let mut attempts = 0;
        while n < target && attempts < 64 {
            attempts += 1;
            let room = target - n;
            let g = if p <= room && rng.gen_bool(0.3) {
                let c = RatFunc::t(*ctx).add(&RatFunc::from_i64(ctx, rng.gen_range(0..p as i64)));
                &Poly::monomial(RatFunc::one(ctx), p) - &Poly::constant(c)
            } else {
                let g = Poly::random_monic(ctx, rng.gen_range(1..=room.min(2)), rng);
                if !g.is_separable().unwrap_or(false) {
                    continue;
                }
                g
            };
            if factors.iter().any(|(h, _)| !h.gcd(&g).is_one()) {
                continue;
            }
            let m = rng.gen_range(1..=3.min(room / g.deg())) as u32;
            n += m as usize * g.deg();
            factors.push((g, m));
        }
        Case {
            fac: Factorization::new(nonzero(ctx, rng), factors),
            roots: None,
        }
    }
}

type Outcome = (&'static str, Result<(), String>);

fn same<F: Field>(what: &str, a: crate::error::Result<F>, b: crate::error::Result<F>) -> Result<(), String> {
    match (a, b) {
        (Ok(a), Ok(b)) if a == b => Ok(()),
        (Ok(a), Ok(b)) => Err(format!("{what}: {a} != {b}")),
        (Err(e), _) | (_, Err(e)) => Err(format!("{what}: {} ({})", e.kind(), e)),
    }
}

fn run_checks<F: Generate>(case: &Case<F>, ctx: &F::Ctx, rng: &mut ChaCha8Rng) -> Vec<Outcome> {
    let mut out: Vec<Outcome> = Vec::new();
    let f = case.fac.expand();
    let n = f.deg();

    let printed = f.to_string();
    out.push((
        "round_trip",
        match (parse_poly::<F>(&printed, ctx), parse_factored::<F>(&case.fac.to_string(), ctx)) {
            (Ok(g), Ok(fac)) if g == f && fac == case.fac => Ok(()),
            (Ok(_), Ok(_)) => Err(format!("{printed} does not re-parse to itself")),
            (Err(e), _) | (_, Err(e)) => Err(e.to_string()),
        },
    ));

    let reference = tol(&f);
    let Ok(t) = reference.clone() else {
        out.push(("gdisc_path", Err(format!("{:?}", reference))));
        return out;
    };
    out.push((
        "nonzero",
        if t.is_zero() { Err("tol vanished".into()) } else { Ok(()) },
    ));
    out.push((
        "factorization_path",
        same("gdisc path vs corrected formula", Ok(t.clone()), tol_from_factorization(&case.fac, FormulaMode::Corrected)),
    ));
    if let Some(full) = F::full_factorization(&f) {
        let value = full.and_then(|fac| {
            fac.validate_against(&f)?;
            tol_from_factorization(&fac, FormulaMode::Corrected)
        });
        out.push(("full_factorization", same("gdisc path vs computed factorization", Ok(t.clone()), value)));
    }
    if let Some(rm) = &case.roots {
        out.push(("roots", same("gdisc path vs root product", Ok(t.clone()), tol_from_roots(rm, n))));
    }
    if f.is_separable() == Ok(true) {
        out.push(("discriminant", same("gdisc path vs discriminant", Ok(t.clone()), discriminant(&f))));
    }
    if n >= 2 {
        // closure multiplicities m_i give the sign exponent sum_{i<j} m_i m_j
        let sign_law = multiplicity_profile_of(&case.fac).and_then(|profile| {
            let squares: u64 = profile.iter().map(|(m, c)| *c as u64 * m * m).sum();
            let k = ((n * n) as u64 - squares) / 2;
            Ok(sign::<F>(ctx, k).mul(&gdisc(&f)?))
        });
        out.push(("sign_law", same("signed gdisc vs tol", sign_law, Ok(t.clone()))));
    }
    let lc = f.leading().expect("nonzero").clone();
    out.push(("dupl", same("dupl vs lc^2 tol", dupl(&f), Ok(lc.square().mul(&t)))));

    let alpha = F::sample(ctx, rng);
    out.push((
        "translation",
        same(
            &format!("tol(f(x + {alpha}))"),
            f.taylor_shift(&alpha).and_then(|g| tol(&g)),
            Ok(t.clone()),
        ),
    ));
    let alpha = nonzero::<F>(ctx, rng);
    out.push((
        "homothety",
        same(
            &format!("tol(f({alpha} x))"),
            f.homothety(&alpha).and_then(|g| tol(&g)),
            homothety_exponent_of(&case.fac).map(|k| alpha.pow(k).mul(&t)),
        ),
    ));
    if !f.constant_term().is_zero() {
        out.push((
            "inversion_criterion",
            match (inversion_criterion(&case.fac), in_t(&f)) {
                (Ok(a), Ok(b)) if a == b => Ok(()),
                (Ok(a), Ok(b)) => Err(format!("criterion {a}, in_T {b}")),
                (Err(e), _) | (_, Err(e)) => Err(e.to_string()),
            },
        ));
    }
    out
}

struct CaseResult {
    input: String,
    outcomes: Vec<Outcome>,
}

fn run_all<F: Generate>(seed: u64, count: usize, ctx: &F::Ctx, max_degree: usize) -> Vec<CaseResult> {
    (0..count)
        .into_par_iter()
        .map(|index| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(index as u64);
            let case = F::generate(ctx, max_degree.max(1), &mut rng);
            CaseResult {
                input: case.fac.to_string(),
                outcomes: run_checks(&case, ctx, &mut rng),
            }
        })
        .collect()
}

/// Generates `count` polynomials of degree at most `max_degree` from `seed`
/// and cross-checks every computation path on each. The result depends only
/// on the arguments.
pub fn selfcheck(seed: u64, count: usize, field: FieldDescriptor, max_degree: usize) -> SelfcheckSummary {
    let results = match (field.kind, field.modulus()) {
        (FieldKind::Rationals, _) => run_all::<Rational>(seed, count, &Rationals, max_degree),
        (FieldKind::PrimeField, Some(m)) => run_all::<Fp>(seed, count, &m, max_degree),
        (FieldKind::RationalFunctionField, Some(m)) => run_all::<RatFunc>(seed, count, &m, max_degree),
        _ => Vec::new(),
    };
    let mut summary = SelfcheckSummary {
        seed,
        count,
        field,
        max_degree,
        passed: 0,
        failed: 0,
        per_check: BTreeMap::new(),
        first_counterexample: None,
    };
    for (index, r) in results.into_iter().enumerate() {
        for (check, outcome) in r.outcomes {
            let tally = summary.per_check.entry(check).or_default();
            match outcome {
                Ok(()) => {
                    tally.passed += 1;
                    summary.passed += 1;
                }
                Err(detail) => {
                    tally.failed += 1;
                    summary.failed += 1;
                    summary.first_counterexample.get_or_insert(Counterexample {
                        index,
                        input: r.input.clone(),
                        check,
                        detail,
                    });
                }
            }
        }
    }
    summary
}
