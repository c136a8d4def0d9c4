use num_integer::binomial;
use proptest::prelude::*;

use crate::cli::parse_poly;
use crate::factor::{factor_prime_field, multiplicity_profile, squarefree_decomposition};
use crate::resultant::{discriminant, sylvester_resultant};
use crate::tolerant::{homothety_exponent, tol};
use crate::{Field, Fp, FpPoly, Modulus, Poly, QPoly, RatFunc, Rational, Rationals};

fn rational() -> impl Strategy<Value = Rational> {
    (-20i64..=20, 1i64..=6).prop_map(|(n, d)| Rational::new(n, d))
}

fn nonzero_rational() -> impl Strategy<Value = Rational> {
    rational().prop_filter("nonzero", |r| !r.is_zero())
}

fn qpoly(max_degree: usize) -> impl Strategy<Value = QPoly> {
    prop::collection::vec(rational(), 1..=max_degree + 1).prop_map(|c| Poly::new(&Rationals, c))
}

fn prime() -> impl Strategy<Value = Modulus> {
    prop::sample::select(vec![2u64, 3, 5, 7, 101]).prop_map(|p| Modulus::new(p).unwrap())
}

fn fppoly(m: Modulus, max_degree: usize) -> impl Strategy<Value = FpPoly> {
    prop::collection::vec(0i64..m.get() as i64, 1..=max_degree + 1)
        .prop_map(move |c| Poly::from_ints(&m, &c))
}

fn ratfunc(m: Modulus) -> impl Strategy<Value = RatFunc> {
    (
        prop::collection::vec(0i64..m.get() as i64, 1..=3),
        prop::collection::vec(0i64..m.get() as i64, 0..=2),
    )
        .prop_map(move |(n, d)| {
            let mut d = d;
            d.push(1);
            RatFunc::from_fraction(Poly::from_ints(&m, &n), Poly::from_ints(&m, &d)).unwrap()
        })
}

fn field_axioms<F: Field>(a: &F, b: &F, c: &F) {
    let ctx = a.ctx();
    assert_eq!(a.add(b), b.add(a));
    assert_eq!(a.mul(b), b.mul(a));
    assert_eq!(a.add(b).add(c), a.add(&b.add(c)));
    assert_eq!(a.mul(b).mul(c), a.mul(&b.mul(c)));
    assert_eq!(a.mul(&b.add(c)), a.mul(b).add(&a.mul(c)));
    assert_eq!(a.add(&F::zero(&ctx)), *a);
    assert_eq!(a.mul(&F::one(&ctx)), *a);
    assert!(a.add(&a.neg()).is_zero());
    assert_eq!(a.sub(b), a.add(&b.neg()));
    if !a.is_zero() {
        assert!(a.mul(&a.inv().unwrap()).is_one());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn rational_field_axioms(a in rational(), b in rational(), c in rational()) {
        field_axioms(&a, &b, &c);
    }

    #[test]
    fn prime_field_axioms_and_frobenius(m in prime(), a in 0i64..1000, b in 0i64..1000, c in 0i64..1000) {
        let (a, b, c) = (Fp::new(a, m), Fp::new(b, m), Fp::new(c, m));
        field_axioms(&a, &b, &c);
        prop_assert_eq!(a.pow(m.get()), a);
        prop_assert_eq!(a.add(&b).pow(m.get()), a.pow(m.get()).add(&b.pow(m.get())));
    }

    #[test]
    fn ratfunc_axioms_and_frobenius((a, b, c, m) in prime().prop_filter("small p", |m| m.get() <= 7)
        .prop_flat_map(|m| (ratfunc(m), ratfunc(m), ratfunc(m), Just(m))))
    {
        field_axioms(&a, &b, &c);
        prop_assert_eq!(a.add(&b).pth_power(), a.pth_power().add(&b.pth_power()));
        prop_assert_eq!(a.pth_power(), a.pow(m.get()));
        prop_assert_eq!(a.pth_power().pth_root().unwrap(), a);
    }

    #[test]
    fn taylor_coefficients_are_hasse_derivatives(f in qpoly(7), alpha in rational()) {
        let shifted = f.taylor_shift(&alpha).unwrap();
        for i in 0..=f.deg() {
            prop_assert_eq!(shifted.coeff(i), f.hasse_derivative(i).eval(&alpha));
        }
    }

    #[test]
    fn taylor_identity_in_positive_characteristic((f, a) in prime().prop_flat_map(|m| (fppoly(m, 12), (0i64..1000).prop_map(move |a| Fp::new(a, m))))) {
        let shifted = f.taylor_shift(&a).unwrap();
        for i in 0..=f.deg() {
            prop_assert_eq!(shifted.coeff(i), f.hasse_derivative(i).eval(&a));
        }
    }

    #[test]
    fn hasse_composition(f in qpoly(9), r in 0usize..5, s in 0usize..5) {
        let lhs = f.hasse_derivative(r).hasse_derivative(s);
        let c = Rational::from_integer(binomial(r + s, r) as i64);
        prop_assert_eq!(lhs, f.hasse_derivative(r + s).scale(&c));
    }

    #[test]
    fn translations_and_homotheties_compose(f in qpoly(6), a in rational(), b in rational(), c in nonzero_rational(), d in nonzero_rational()) {
        prop_assert_eq!(f.taylor_shift(&a).unwrap().taylor_shift(&b).unwrap(), f.taylor_shift(&a.add(&b)).unwrap());
        prop_assert_eq!(f.homothety(&c).unwrap().homothety(&d).unwrap(), f.homothety(&c.mul(&d)).unwrap());
        prop_assert_eq!(f.taylor_shift(&a).unwrap().taylor_shift(&a.neg()).unwrap(), f);
    }

    #[test]
    fn reciprocal_is_an_involution(f in qpoly(8)) {
        prop_assume!(!f.constant_term().is_zero());
        let r = f.reciprocal().unwrap();
        prop_assert_eq!(r.deg(), f.deg());
        prop_assert_eq!(r.reciprocal().unwrap(), f);
    }

    #[test]
    fn resultant_is_multiplicative(f in qpoly(4), g in qpoly(3), h in qpoly(3)) {
        prop_assume!(!f.is_zero() && !g.is_zero() && !h.is_zero());
        let gh = &g * &h;
        let lhs = sylvester_resultant(&f, &gh).unwrap();
        let rhs = sylvester_resultant(&f, &g).unwrap().mul(&sylvester_resultant(&f, &h).unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn resultant_swaps_with_sign(f in qpoly(5), g in qpoly(5)) {
        prop_assume!(!f.is_zero() && !g.is_zero());
        let k = (f.deg() * g.deg()) as u64;
        let sign = if k.is_multiple_of(2) { Rational::from_integer(1) } else { Rational::from_integer(-1) };
        prop_assert_eq!(sylvester_resultant(&f, &g).unwrap(), sign.mul(&sylvester_resultant(&g, &f).unwrap()));
    }

    #[test]
    fn discriminant_of_product(f in qpoly(4), g in qpoly(4)) {
        prop_assume!(f.deg() >= 1 && g.deg() >= 1);
        let fg = &f * &g;
        let res = sylvester_resultant(&f, &g).unwrap();
        let rhs = discriminant(&f).unwrap().mul(&discriminant(&g).unwrap()).mul(&res.square());
        prop_assert_eq!(discriminant(&fg).unwrap(), rhs);
    }

    #[test]
    fn prime_field_factorization((f, seed) in prime().prop_flat_map(|m| (fppoly(m, 10), any::<u64>()))) {
        prop_assume!(f.deg() >= 1);
        let fac = factor_prime_field(&f, seed).unwrap();
        prop_assert_eq!(fac.expand(), f.clone());
        fac.validate().unwrap();
        for (g, _) in &fac.factors {
            prop_assert!(crate::factor::is_irreducible_prime_field(g));
        }
        let sqf = squarefree_decomposition(&f).unwrap();
        prop_assert_eq!(sqf.expand(), f.clone());
        let profile = multiplicity_profile(&f).unwrap();
        prop_assert_eq!(profile.iter().map(|(m, c)| *m as usize * c).sum::<usize>(), f.deg());
    }

    #[test]
    fn tolerant_is_nonzero_and_translation_invariant(f in qpoly(5), a in rational()) {
        prop_assume!(f.deg() >= 1);
        let t = tol(&f).unwrap();
        prop_assert!(!t.is_zero());
        prop_assert_eq!(tol(&f.taylor_shift(&a).unwrap()).unwrap(), t);
    }

    #[test]
    fn homothety_law_over_prime_fields((f, a) in fppoly(Modulus::new(11).unwrap(), 7).prop_flat_map(|f| (Just(f), 1i64..11))) {
        prop_assume!(f.deg() >= 1);
        let m = Modulus::new(11).unwrap();
        let a = Fp::new(a, m);
        let k = homothety_exponent(&f).unwrap();
        prop_assert_eq!(tol(&f.homothety(&a).unwrap()).unwrap(), a.pow(k).mul(&tol(&f).unwrap()));
    }

    #[test]
    fn print_parse_round_trip_q(f in qpoly(8)) {
        prop_assert_eq!(parse_poly::<Rational>(&f.to_string(), &Rationals).unwrap(), f);
    }

    #[test]
    fn print_parse_round_trip_fp((m, f) in prime().prop_flat_map(|m| (Just(m), fppoly(m, 8)))) {
        prop_assert_eq!(parse_poly::<Fp>(&f.to_string(), &m).unwrap(), f);
    }

    #[test]
    fn print_parse_round_trip_fpt(cs in prop::collection::vec(ratfunc(Modulus::new(3).unwrap()), 1..5)) {
        let m = Modulus::new(3).unwrap();
        let f = Poly::new(&m, cs);
        prop_assert_eq!(parse_poly::<RatFunc>(&f.to_string(), &m).unwrap(), f);
    }
}
