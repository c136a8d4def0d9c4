//! Acceptance gate. Runs every criterion, prints one PASS/FAIL line each, and
//! exits nonzero if any criterion fails.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::{Command, ExitCode};
use std::sync::Mutex;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use tolerant::cli::{parse_batch, round_trip};
use tolerant::factor::{random_irreducible, Factorization};
use tolerant::resultant::discriminant;
use tolerant::tolerant::{
    gdisc, homothety_exponent, in_t, inversion_criterion, tol, tol_from_factorization,
    tol_from_roots, tol_irreducible, FormulaMode, RootMultiset,
};
use tolerant::{Field, FieldDescriptor, Fp, Modulus, Poly, RatFunc, Rational, Rationals};

type Verdict = Result<String, String>;
type Criterion = (&'static str, fn() -> Verdict);

/// Every tolerant computed by the suite, as (description, nonzero and canonical).
static TOLERANTS: Mutex<Vec<(String, bool)>> = Mutex::new(Vec::new());

trait Canonical: Field {
    fn is_canonical(&self) -> bool;
}

impl Canonical for Rational {
    fn is_canonical(&self) -> bool {
        self.denom().is_positive() && self.numer().gcd(self.denom()).is_one()
    }
}

impl Canonical for Fp {
    fn is_canonical(&self) -> bool {
        self.value() < self.modulus().get()
    }
}

impl Canonical for RatFunc {
    fn is_canonical(&self) -> bool {
        self.denom().is_monic() && self.numer().gcd(self.denom()).is_one()
    }
}

/// Records a computed tolerant and passes it through.
fn seen<F: Canonical>(v: F) -> F {
    let ok = !v.is_zero() && v.is_canonical();
    TOLERANTS.lock().unwrap().push((v.to_string(), ok));
    v
}

fn tol_of<F: Canonical>(f: &Poly<F>) -> F {
    seen(tol(f).unwrap_or_else(|e| panic!("tol({f}): {e}")))
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn q(c: &[i64]) -> Poly<Rational> {
    Poly::from_ints(&Rationals, c)
}

fn rat(n: i64, d: i64) -> Rational {
    Rational::new(n, d)
}

fn linear<F: Field>(root: &F) -> Poly<F> {
    let ctx = root.ctx();
    Poly::new(&ctx, vec![root.neg(), F::one(&ctx)])
}

fn f101() -> Modulus {
    Modulus::new(101).unwrap()
}

fn m5() -> Modulus {
    Modulus::new(5).unwrap()
}

fn sign_of<F: Field>(ctx: &F::Ctx, k: u64) -> F {
    if k.is_multiple_of(2) {
        F::one(ctx)
    } else {
        F::one(ctx).neg()
    }
}

/// `lc^(2n-2) prod_{i<j} (r_i - r_j)^(2 m_i m_j)` in plain big rationals.
fn root_product(lc: &BigRational, roots: &[(BigRational, u32)]) -> BigRational {
    let n: u32 = roots.iter().map(|(_, m)| m).sum();
    let mut acc = num_traits::pow(lc.clone(), (2 * n - 2) as usize);
    for (i, (ri, mi)) in roots.iter().enumerate() {
        for (rj, mj) in &roots[i + 1..] {
            acc *= num_traits::pow(ri - rj, (2 * mi * mj) as usize);
        }
    }
    acc
}

fn to_big(r: &Rational) -> BigRational {
    r.inner().clone()
}

fn criterion_1() -> Verdict {
    let cases: [(Poly<Rational>, Rational, Rational); 3] = [
        (&q(&[-2, 1]).pow(2) * &q(&[-3, 1]), rat(1, 1), rat(16, 1)),
        (
            &q(&[-2, 1]).pow(2) * &linear(&rat(-1, 4)),
            rat(6561, 256),
            rat(6561, 16),
        ),
        (&q(&[-1, 1]).pow(2) * &q(&[-2, 1]).pow(2), rat(1, 1), rat(16, 1)),
    ];
    let mut shown = Vec::new();
    for (f, want, want_recip) in cases {
        let got = tol_of(&f);
        let got_recip = tol_of(&f.reciprocal().unwrap());
        ensure(got == want && got_recip == want_recip, || {
            format!("{f}: tol {got}, reciprocal {got_recip}; expected {want}, {want_recip}")
        })?;
        shown.push(format!("{got}/{got_recip}"));
    }
    Ok(format!("tol/reciprocal = {}", shown.join(", ")))
}

fn criterion_2() -> Verdict {
    for n in 1..=10u64 {
        let f = q(&[-1, 1]).pow(n);
        let (a, b) = (tol_of(&f), tol_of(&f.reciprocal().unwrap()));
        ensure(a.is_one() && b.is_one(), || format!("n = {n}: {a}, {b}"))?;
    }
    Ok("tol((x-1)^n) = tol of reciprocal = 1 for n = 1..10".into())
}

/// A monic product of distinct random irreducibles over `F_p`, degree at
/// most `max_degree`, multiplicities at most 3.
fn random_product(m: Modulus, max_degree: usize, rng: &mut ChaCha8Rng) -> Factorization<Fp> {
    let target = rng.gen_range(1..=max_degree);
    let mut factors: Vec<(Poly<Fp>, u32)> = Vec::new();
    let mut n = 0;
    while n < target {
        let d = rng.gen_range(1..=(target - n).min(4));
        let g = random_irreducible(&m, d, rng);
        if factors.iter().any(|(h, _)| *h == g) {
            continue;
        }
        let mult = rng.gen_range(1..=3.min((target - n) / d)) as u32;
        n += mult as usize * d;
        factors.push((g, mult));
    }
    Factorization::new(Fp::new(1, m), factors)
}

fn criterion_3() -> Verdict {
    let start = Instant::now();
    let m = f101();
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let mut separable = 0;
    let mut sign_law_failures = Vec::new();
    let mut corrected_sign_holds = 0;
    let mut problems = Vec::new();
    for _ in 0..500 {
        let fac = random_product(m, 8, &mut rng);
        let f = fac.expand();
        let n = f.deg() as u64;
        let t = tol_of(&f);
        let by_fac = seen(tol_from_factorization(&fac, FormulaMode::Corrected).unwrap());
        if by_fac != t {
            problems.push(format!("{fac}: gdisc path {t}, factorization {by_fac}"));
        }
        if f.is_separable().unwrap() {
            separable += 1;
            let d = discriminant(&f).unwrap();
            if d != t {
                problems.push(format!("{fac}: discriminant {d}, tol {t}"));
            }
        }
        if n >= 2 {
            let g = gdisc(&f).unwrap();
            if g != sign_of::<Fp>(&m, n * (n - 1) / 2).mul(&t) {
                sign_law_failures.push(fac.to_string());
            }
            // sum_{i<j} m_i m_j over the roots = (n^2 - sum deg(g) m^2) / 2
            let squares: u64 = fac.factors.iter().map(|(g, k)| g.deg() as u64 * (*k as u64).pow(2)).sum();
            if g == sign_of::<Fp>(&m, (n * n - squares) / 2).mul(&t) {
                corrected_sign_holds += 1;
            } else {
                problems.push(format!("{fac}: gdisc {g} off by more than the multiplicity sign"));
            }
        } else {
            corrected_sign_holds += 1;
        }
    }
    let elapsed = start.elapsed();
    ensure(problems.is_empty(), || format!("{} disagreements, first: {}", problems.len(), problems[0]))?;
    ensure(elapsed < Duration::from_secs(30), || format!("took {elapsed:?}"))?;
    let summary = format!(
        "500 products: gdisc path = corrected factorization everywhere, = discriminant on {separable} separable; \
         gdisc = (-1)^(sum_{{i<j}} m_i m_j) tol on {corrected_sign_holds}/500; {elapsed:.1?}"
    );
    ensure(sign_law_failures.is_empty(), || {
        format!(
            "{summary}; but gdisc = (-1)^binom(n,2) tol fails on {}/500 repeated-root inputs, first {}",
            sign_law_failures.len(),
            sign_law_failures[0]
        )
    })?;
    Ok(summary)
}

fn criterion_4() -> Verdict {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for k in 0..200 {
        let distinct = rng.gen_range(1..=4);
        let mut roots: Vec<(Rational, u32)> = Vec::new();
        while roots.len() < distinct {
            let r = rat(rng.gen_range(-12..=12), rng.gen_range(1..=5));
            if roots.iter().all(|(s, _)| *s != r) {
                roots.push((r, rng.gen_range(1..=3)));
            }
        }
        let mut lc = rat(rng.gen_range(-6..=6), rng.gen_range(1..=4));
        if lc.is_zero() {
            lc = rat(1, 3);
        }
        let rm = RootMultiset::new(lc.clone(), roots.clone());
        let f = rm.expand();
        let by_roots = seen(tol_from_roots(&rm, f.deg()).unwrap());
        let t = tol_of(&f);
        let oracle = root_product(
            &to_big(&lc),
            &roots.iter().map(|(r, m)| (to_big(r), *m)).collect::<Vec<_>>(),
        );
        ensure(t == by_roots && to_big(&t) == oracle, || {
            format!("case {k}, {f}: gdisc path {t}, roots {by_roots}, oracle {oracle}")
        })?;
    }
    Ok("200 rational-rooted products: gdisc path = root product".into())
}

/// Root multiset plus the polynomial, over `Q`, for invariance checks.
fn random_rooted(rng: &mut ChaCha8Rng) -> (Poly<Rational>, Vec<u32>) {
    let distinct = rng.gen_range(1..=4);
    let mut roots: Vec<(Rational, u32)> = Vec::new();
    while roots.len() < distinct {
        let r = rat(rng.gen_range(-9..=9), rng.gen_range(1..=3));
        if roots.iter().all(|(s, _)| *s != r) {
            roots.push((r, rng.gen_range(1..=3)));
        }
    }
    let mults = roots.iter().map(|(_, m)| *m).collect();
    (RootMultiset::new(rat(rng.gen_range(1..=5), 1), roots).expand(), mults)
}

fn criterion_5() -> Verdict {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for k in 0..200 {
        let (f, _) = random_rooted(&mut rng);
        // also polynomials with irrational roots
        let f = if k % 2 == 0 { f } else { Poly::<Rational>::random(&Rationals, rng.gen_range(1..=6), &mut rng) };
        let a = rat(rng.gen_range(-20..=20), rng.gen_range(1..=7));
        let (t, shifted) = (tol_of(&f), tol_of(&f.taylor_shift(&a).unwrap()));
        ensure(t == shifted, || format!("Q: tol({f}) = {t}, after shifting by {a}: {shifted}"))?;
    }
    let m = f101();
    for _ in 0..200 {
        let f = random_product(m, 8, &mut rng).expand().scale(&Fp::new(rng.gen_range(1..101), m));
        let a = Fp::new(rng.gen_range(0..101), m);
        let (t, shifted) = (tol_of(&f), tol_of(&f.taylor_shift(&a).unwrap()));
        ensure(t == shifted, || format!("F_101: tol({f}) = {t}, after shifting by {a}: {shifted}"))?;
    }

    let cubic = &q(&[-2, 1]).pow(2) * &q(&[-3, 1]);
    let k = homothety_exponent(&cubic).unwrap();
    ensure(k == 8, || format!("exponent for {cubic} is {k}, expected 8"))?;
    let mut checked = 0;
    let mut check = |f: &Poly<Rational>, mults: &[u32], alpha: &Rational| -> Result<(), String> {
        let n: u64 = mults.iter().map(|&m| m as u64).sum();
        let expected: u64 = n * n + mults.iter().map(|&m| (m as u64).pow(2)).sum::<u64>() - 2 * n;
        let k = homothety_exponent(f).unwrap();
        let lhs = tol_of(&f.homothety(alpha).unwrap());
        let rhs = alpha.pow(expected).mul(&tol_of(f));
        checked += 1;
        ensure(k == expected && lhs == rhs, || {
            format!("{f} scaled by {alpha}: exponent {k} (expected {expected}), {lhs} vs {rhs}")
        })
    };
    for a in [rat(2, 1), rat(-1, 3), rat(5, 2)] {
        check(&cubic, &[2, 1], &a)?;
    }
    for _ in 0..67 {
        let (f, mults) = random_rooted(&mut rng);
        let mut a = rat(rng.gen_range(-9..=9), rng.gen_range(1..=4));
        if a.is_zero() {
            a = rat(7, 2);
        }
        check(&f, &mults, &a)?;
    }
    for _ in 0..30 {
        let fac = random_product(m, 8, &mut rng);
        let f = fac.expand();
        let n = f.deg() as u64;
        let expected = n * n + fac.factors.iter().map(|(g, k)| g.deg() as u64 * (*k as u64).pow(2)).sum::<u64>() - 2 * n;
        let a = Fp::new(rng.gen_range(1..101), m);
        let lhs = tol_of(&f.homothety(&a).unwrap());
        let rhs = a.pow(expected).mul(&tol_of(&f));
        ensure(homothety_exponent(&f) == Ok(expected) && lhs == rhs, || format!("F_101: {fac} scaled by {a}"))?;
        checked += 1;
    }
    Ok(format!("translation on 200 + 200 pairs over Q and F_101; homothety on {checked} pairs, exponent 8 for (x-2)^2(x-3)"))
}

fn x_pow_minus_t(k: usize) -> Poly<RatFunc> {
    let m = m5();
    &Poly::monomial(RatFunc::one(&m), k) - &Poly::constant(RatFunc::t(m))
}

fn criterion_6() -> Verdict {
    let m = m5();
    let t = RatFunc::t(m);
    let four = RatFunc::from_i64(&m, 4);

    let f = x_pow_minus_t(5);
    let (a, b) = (tol_of(&f), seen(tol_irreducible(&f).unwrap().value));
    ensure(a.is_one() && b.is_one(), || format!("tol(x^5 - t): {a}, {b}"))?;

    let f = x_pow_minus_t(10);
    let want = four.mul(&t.pow(5));
    let (a, b) = (tol_of(&f), seen(tol_irreducible(&f).unwrap().value));
    let c = seen(tol_from_factorization(&Factorization::trivial(&f).unwrap(), FormulaMode::Corrected).unwrap());
    ensure(a == want && b == want && c == want, || format!("tol(x^10 - t): {a}, {b}, {c}; expected {want}"))?;

    let f = x_pow_minus_t(10).pow(2);
    let want = four.mul(&t).pow(20);
    let fac = Factorization::new(RatFunc::one(&m), vec![(x_pow_minus_t(10), 2)]);
    let (a, c) = (tol_of(&f), seen(tol_from_factorization(&fac, FormulaMode::Corrected).unwrap()));
    ensure(a == want && c == want, || format!("tol((x^10 - t)^2): {a}, {c}; expected {want}"))?;
    Ok(format!("1, {}, {} on both paths", four.mul(&t.pow(5)), want))
}

fn criterion_7() -> Verdict {
    let m = m5();
    let one = RatFunc::one(&m);
    let x_minus_1 = linear(&one);
    let fac = Factorization::new(one.clone(), vec![(x_pow_minus_t(5), 1), (x_minus_1, 1)]);
    let f = fac.expand();
    let by_gdisc = tol_of(&f);
    let corrected = seen(tol_from_factorization(&fac, FormulaMode::Corrected).unwrap());
    ensure(by_gdisc == corrected, || format!("gdisc path {by_gdisc}, corrected {corrected}"))?;
    let general = tol_from_factorization(&fac, FormulaMode::PaperGeneral);
    let root_value = RatFunc::t(m).sub(&one).square();
    let comparison = match &general {
        Ok(v) if *v == corrected => format!("paper-general {v} matches"),
        Ok(v) => format!("paper-general {v} differs from {corrected}"),
        Err(e) => format!("paper-general fails: {e}"),
    };
    Ok(format!(
        "gdisc path = corrected = {corrected} (root product {root_value}); {comparison}"
    ))
}

/// Separable factors with nonzero constant term, or powers of palindromic
/// ones.
fn member_of_t(rng: &mut ChaCha8Rng) -> Poly<Rational> {
    if rng.gen_bool(0.5) {
        loop {
            let f: Poly<Rational> = Poly::random(&Rationals, rng.gen_range(1..=3), rng);
            if !f.constant_term().is_zero() && f.is_separable().unwrap() {
                return f;
            }
        }
    }
    let half: Vec<i64> = (0..rng.gen_range(1..=2)).map(|_| rng.gen_range(-4..=4)).collect();
    let mut coeffs = vec![1];
    coeffs.extend(&half);
    coeffs.extend(half.iter().rev().skip(if rng.gen_bool(0.5) { 1 } else { 0 }));
    coeffs.push(1);
    let g = q(&coeffs);
    g.pow(rng.gen_range(1..=3))
}

fn criterion_8() -> Verdict {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let mut built = 0;
    let mut attempts = 0;
    while built < 100 {
        attempts += 1;
        let (g, h) = (member_of_t(&mut rng), member_of_t(&mut rng));
        if g.deg() + h.deg() > 10 || !g.gcd(&h).is_one() {
            continue;
        }
        let (ig, ih) = (in_t(&g).unwrap(), in_t(&h).unwrap());
        seen(tol(&g).unwrap());
        seen(tol(&h).unwrap());
        ensure(ig && ih, || format!("generator produced {g} (in T: {ig}), {h} (in T: {ih})"))?;
        let gh = &g * &h;
        seen(tol(&gh).unwrap());
        ensure(in_t(&gh).unwrap(), || format!("({g})({h}) left T"))?;
        built += 1;
    }
    Ok(format!("100 coprime pairs in T ({attempts} draws), every product in T"))
}

fn criterion_9() -> Verdict {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let (mut yes, mut no) = (0, 0);
    for _ in 0..100 {
        // roots paired with their reciprocals part of the time
        let mut factors: Vec<(Poly<Rational>, u32)> = Vec::new();
        let push = |g: Poly<Rational>, m: u32, factors: &mut Vec<(Poly<Rational>, u32)>| {
            if factors.iter().all(|(h, _)| h.gcd(&g).is_one()) {
                factors.push((g, m));
            }
        };
        for _ in 0..rng.gen_range(1..=2) {
            let mut r = rat(rng.gen_range(-6..=6), rng.gen_range(1..=3));
            if r.is_zero() {
                r = rat(5, 1);
            }
            let m = rng.gen_range(1..=2);
            push(linear(&r), m, &mut factors);
            if rng.gen_bool(0.6) {
                push(linear(&r.inv().unwrap()), m, &mut factors);
            }
        }
        if rng.gen_bool(0.3) {
            push(q(&[rng.gen_range(1..=5), 0, 1]), rng.gen_range(1..=2), &mut factors);
        }
        let fac = Factorization::new(rat(rng.gen_range(1..=4), rng.gen_range(1..=3)), factors);
        let f = fac.expand();
        let (c, member) = (inversion_criterion(&fac).unwrap(), in_t(&f).unwrap());
        seen(tol(&f).unwrap());
        ensure(c == member, || format!("Q: {fac}: criterion {c}, in_T {member}"))?;
        if member { yes += 1 } else { no += 1 }
    }
    let m = f101();
    for _ in 0..100 {
        let mut fac = random_product(m, 8, &mut rng);
        fac.factors.retain(|(g, _)| !g.constant_term().is_zero());
        if fac.factors.is_empty() {
            fac.factors.push((Poly::from_ints(&m, &[1, 1]), 2));
        }
        if rng.gen_bool(0.5) {
            // close the root set under inversion
            let extra: Vec<(Poly<Fp>, u32)> = fac
                .factors
                .iter()
                .map(|(g, k)| (g.reciprocal().unwrap().monic(), *k))
                .filter(|(g, _)| fac.factors.iter().all(|(h, _)| h.gcd(g).is_one()))
                .collect();
            for (g, k) in extra {
                if fac.factors.iter().all(|(h, _)| h.gcd(&g).is_one()) {
                    fac.factors.push((g, k));
                }
            }
        }
        let f = fac.expand();
        let (c, member) = (inversion_criterion(&fac).unwrap(), in_t(&f).unwrap());
        seen(tol(&f).unwrap());
        ensure(c == member, || format!("F_101: {fac}: criterion {c}, in_T {member}"))?;
        if member { yes += 1 } else { no += 1 }
    }
    Ok(format!("200 factored inputs agree ({yes} in T, {no} not)"))
}

fn criterion_10() -> Verdict {
    let all = TOLERANTS.lock().unwrap();
    let bad: Vec<&String> = all.iter().filter(|(_, ok)| !ok).map(|(s, _)| s).collect();
    ensure(!all.is_empty() && bad.is_empty(), || {
        format!("{} of {} tolerants zero or non-canonical, first {:?}", bad.len(), all.len(), bad.first())
    })?;
    Ok(format!("{} tolerants, all nonzero and canonical", all.len()))
}

/// Coefficient `i` of `f(x + a)` from the binomial expansion, independently
/// of the library's Hasse derivatives.
fn shifted_coeff<F: Field>(f: &Poly<F>, i: usize, a: &F) -> F {
    let ctx = a.ctx();
    (i..=f.deg()).fold(F::zero(&ctx), |acc, n| {
        let b = F::from_bigint(&ctx, &num_integer::binomial(BigInt::from(n), BigInt::from(i)));
        acc.add(&f.coeff(n).mul(&b).mul(&a.pow((n - i) as u64)))
    })
}

fn taylor_case<F: Field>(f: &Poly<F>, a: &F) -> Result<(), String> {
    let shifted = f.taylor_shift(a).unwrap();
    for i in 0..=f.deg() {
        let hasse = f.hasse_derivative(i).eval(a);
        ensure(shifted.coeff(i) == hasse && hasse == shifted_coeff(f, i, a), || {
            format!("{f} at {a}, coefficient {i}")
        })?;
    }
    Ok(())
}

fn criterion_11() -> Verdict {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..40 {
        let f: Poly<Rational> = Poly::random(&Rationals, rng.gen_range(0..=9), &mut rng);
        taylor_case(&f, &Rational::sample(&Rationals, &mut rng))?;
    }
    let m = m5();
    for _ in 0..40 {
        let f: Poly<Fp> = Poly::random(&m, rng.gen_range(0..=14), &mut rng);
        taylor_case(&f, &Fp::sample(&m, &mut rng))?;
    }
    for _ in 0..20 {
        let f = Poly::random(&m, rng.gen_range(0..=11), &mut rng);
        taylor_case::<RatFunc>(&f, &RatFunc::sample(&m, &mut rng))?;
    }
    Ok("100 pairs over Q, F_5 and F_5(t)".into())
}

fn criterion_12() -> Verdict {
    let dir = concat!(env!("CARGO_MANIFEST_DIR"), "/tests/data");
    let mut lines = 0;
    for (file, factored) in [("corpus.txt", false), ("corpus_factored.txt", true)] {
        let text = std::fs::read_to_string(format!("{dir}/{file}")).unwrap();
        for l in parse_batch(&text, FieldDescriptor::rationals()) {
            let field = l.field.map_err(|e| format!("{file}:{}: {e}", l.line))?;
            let (printed, same) = round_trip(&l.text, field, factored)
                .map_err(|e| format!("{file}:{}: {e}", l.line))?;
            ensure(same, || format!("{file}:{}: `{}` printed as `{printed}`", l.line, l.text))?;
            lines += 1;
        }
    }

    let bin = env!("CARGO_BIN_EXE_tolerant");
    let run = |args: &[&str]| Command::new(bin).args(args).output().unwrap();
    let first = run(&["selfcheck", "--seed", "42"]);
    let second = run(&["selfcheck", "--seed", "42"]);
    ensure(first.status.code() == Some(0), || {
        format!("selfcheck exited {:?}: {}", first.status.code(), String::from_utf8_lossy(&first.stdout))
    })?;
    ensure(first.stdout == second.stdout && !first.stdout.is_empty(), || "selfcheck output differs between runs".into())?;
    let summary: serde_json::Value = serde_json::from_slice(&first.stdout).unwrap();

    let bad = run(&["tol", "x^^2"]);
    let record: serde_json::Value = serde_json::from_slice(&bad.stdout).unwrap();
    let err = &record["errors"][0];
    ensure(
        bad.status.code() == Some(1) && err["kind"] == "SYNTAX_ERROR" && err["offset"] == 2,
        || format!("malformed input gave exit {:?}, {record}", bad.status.code()),
    )?;
    ensure(String::from_utf8_lossy(&bad.stderr).contains("offset 2"), || "no position on stderr".into())?;
    Ok(format!(
        "{lines} corpus lines round-trip; selfcheck --seed 42 identical twice ({} checks passed); `x^^2` exits 1 at offset 2",
        summary["passed"]
    ))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 12] = [
        ("example regression", criterion_1),
        ("palindromic family", criterion_2),
        ("cross-method fuzz over F_101", criterion_3),
        ("rational-root oracle", criterion_4),
        ("translation and homothety invariance", criterion_5),
        ("inseparable cases over F_5(t)", criterion_6),
        ("mixed-inseparability formula comparison", criterion_7),
        ("multiplicativity of T", criterion_8),
        ("inversion criterion equivalence", criterion_9),
        ("tolerants nonzero and canonical", criterion_10),
        ("Taylor identity", criterion_11),
        ("CLI contract", criterion_12),
    ];
    let start = Instant::now();
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let t0 = Instant::now();
        let verdict = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|panic| {
            let msg = panic
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| panic.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        let secs = t0.elapsed().as_secs_f64();
        match verdict {
            Ok(detail) => println!("PASS criterion {:>2} {name} [{secs:.2}s]: {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL criterion {:>2} {name} [{secs:.2}s]: {detail}", i + 1);
            }
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed in {:.1}s",
        criteria.len() - failed,
        start.elapsed().as_secs_f64()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
