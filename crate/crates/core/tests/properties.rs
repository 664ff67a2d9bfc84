use bell_euler_core::algebra::{frac, Rational, X, XY};
use bell_euler_core::sequences as seq;
use bell_euler_core::umbral::{apply_operator, expand_in_appell, pair, AppellContext, LinearFunctional, YParam};
use bell_euler_core::{BivariatePoly, SeriesError, TruncatedSeries};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;

type Series = TruncatedSeries<Rational>;

fn rational(bound: i64) -> impl Strategy<Value = Rational> {
    (-bound..=bound, 1..=bound).prop_map(|(p, q)| frac(p, q))
}

fn series(order: usize, bound: i64) -> impl Strategy<Value = Series> {
    prop::collection::vec(rational(bound), order + 1).prop_map(move |c| Series::from_coeffs(c, order))
}

fn with_constant(s: Series, c: Rational) -> Series {
    let order = s.order();
    let mut coeffs = s.into_coeffs();
    coeffs[0] = c;
    Series::from_coeffs(coeffs, order)
}

/// Series of order one: zero constant term and nonzero linear term.
fn delta(order: usize, bound: i64) -> impl Strategy<Value = Series> {
    (series(order, bound), rational(bound)).prop_map(|(s, lin)| {
        let order = s.order();
        let mut c = s.into_coeffs();
        c[0] = Rational::zero();
        c[1] = if lin.is_zero() { Rational::one() } else { lin };
        Series::from_coeffs(c, order)
    })
}

fn poly_x(max_degree: usize, bound: i64) -> impl Strategy<Value = BivariatePoly> {
    prop::collection::vec(rational(bound), 1..=max_degree + 1).prop_map(|c| {
        BivariatePoly::from_terms(c.into_iter().enumerate().map(|(k, q)| ([k as u32, 0], q)))
    })
}

fn poly_xy(max_degree: u32, bound: i64) -> impl Strategy<Value = BivariatePoly> {
    prop::collection::vec(((0..=max_degree, 0..=max_degree), rational(bound)), 0..8)
        .prop_map(|t| BivariatePoly::from_terms(t.into_iter().map(|((a, b), q)| ([a, b], q))))
}

const BIG: i64 = 1_000_000;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rationals_stay_reduced(a in rational(BIG), b in rational(BIG)) {
        for r in [&a + &b, &a * &b, &a - &b] {
            prop_assert!(r.denom().is_positive());
            prop_assert!(r.numer().gcd(r.denom()).is_one());
        }
        prop_assert_eq!(&(&a + &b) - &b, a);
    }

    #[test]
    fn polynomials_stay_canonical(p in poly_xy(4, 50), q in poly_xy(4, 50)) {
        for r in [&p + &q, &p * &q, &p - &p] {
            prop_assert!(r.terms().all(|(_, c)| !c.is_zero()));
        }
        prop_assert!((&p - &p).is_zero());
    }

    #[test]
    fn series_ring_laws((a, b, c) in (0usize..=16).prop_flat_map(|n| (series(n, BIG), series(n, BIG), series(n, BIG)))) {
        let n = a.order();
        let ab = a.checked_mul(&b).unwrap();
        prop_assert_eq!(ab.checked_mul(&c).unwrap(), a.checked_mul(&b.checked_mul(&c).unwrap()).unwrap());
        prop_assert_eq!(&ab, &b.checked_mul(&a).unwrap());
        prop_assert_eq!(a.checked_add(&b).unwrap(), b.checked_add(&a).unwrap());
        prop_assert_eq!(
            a.checked_mul(&b.checked_add(&c).unwrap()).unwrap(),
            ab.checked_add(&a.checked_mul(&c).unwrap()).unwrap()
        );
        prop_assert_eq!(a.checked_mul(&Series::one(n)).unwrap(), a);
    }

    #[test]
    fn exp_log_round_trip(f in series(12, 20)) {
        let unit = with_constant(f.clone(), Rational::one());
        prop_assert_eq!(unit.log().unwrap().exp().unwrap(), unit);
        let zero = with_constant(f, Rational::zero());
        prop_assert_eq!(zero.exp().unwrap().log().unwrap(), zero);
    }

    #[test]
    fn inverse_is_reciprocal(f in series(12, 50), c in rational(50)) {
        let c = if c.is_zero() { Rational::one() } else { c };
        let f = with_constant(f, c);
        prop_assert_eq!(f.inv().unwrap().checked_mul(&f).unwrap(), Series::one(12));
    }

    #[test]
    fn integer_powers_add(f in series(12, 20), c in rational(20), a in -4i64..=4, b in -4i64..=4) {
        let c = if c.is_zero() { Rational::one() } else { c };
        let f = with_constant(f, c);
        let lhs = f.pow_int(a + b).unwrap();
        prop_assert_eq!(lhs, f.pow_int(a).unwrap().checked_mul(&f.pow_int(b).unwrap()).unwrap());
    }

    #[test]
    fn rational_powers_add(f in series(10, 20), a in rational(6), b in rational(6)) {
        let f = with_constant(f, Rational::one());
        let lhs = f.pow_rational(&(&a + &b)).unwrap();
        prop_assert_eq!(lhs, f.pow_rational(&a).unwrap().checked_mul(&f.pow_rational(&b).unwrap()).unwrap());
    }

    #[test]
    fn composition_is_associative(f in series(10, 9), g in delta(10, 9), h in delta(10, 9)) {
        let left = f.compose(&g).unwrap().compose(&h).unwrap();
        let right = f.compose(&g.compose(&h).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn coefficients_beyond_order_are_errors(f in series(6, 9), k in 7usize..40) {
        prop_assert_eq!(f.coefficient_of(k), Err(SeriesError::OutOfRange { index: k, order: 6 }));
    }

    #[test]
    fn pretty_and_json_round_trip(p in poly_xy(5, 1000)) {
        prop_assert_eq!(BivariatePoly::parse(&p.pretty(), &XY).unwrap(), p.clone());
        prop_assert_eq!(BivariatePoly::from_json(&p.json(), &XY).unwrap(), p);
    }

    #[test]
    fn pairing_is_linear(f in series(8, 20), p in poly_x(8, 100), q in poly_x(8, 100), c in rational(100)) {
        let f = LinearFunctional::from_rational(&f);
        let combo = &p + &q.scale(&c);
        prop_assert_eq!(pair(&f, &combo).unwrap(), pair(&f, &p).unwrap() + pair(&f, &q).unwrap().scale(&c));
    }

    #[test]
    fn pairing_product_rule(g in series(8, 20), h in series(8, 20), q in poly_x(8, 100)) {
        let gh = LinearFunctional::from_rational(&g.checked_mul(&h).unwrap());
        let hq = apply_operator(&h.lift(), &q).unwrap();
        prop_assert_eq!(pair(&gh, &q).unwrap(), pair(&LinearFunctional::from_rational(&g), &hq).unwrap());
    }

    #[test]
    fn appell_round_trip(q in poly_x(8, BIG), mu in -1i64..=3) {
        let ctx = AppellContext::for_degree(mu, YParam::Formal, 8).unwrap();
        let e = expand_in_appell(&q, &ctx).unwrap();
        prop_assert_eq!(e.reconstruct(&ctx).unwrap(), q);
    }

    #[test]
    fn appell_round_trip_fixed_y(q in poly_x(6, 1000), y in rational(30), mu in 0i64..=3) {
        let ctx = AppellContext::for_degree(mu, YParam::Value(y), 6).unwrap();
        let e = expand_in_appell(&q, &ctx).unwrap();
        prop_assert!(e.coeffs.iter().all(|b| b.as_constant().is_some()));
        prop_assert_eq!(e.reconstruct(&ctx).unwrap(), q);
    }

    #[test]
    fn rational_orders_keep_the_recurrence(alpha in rational(12), n in 1usize..=7) {
        // Derivative in y lowers the order by one.
        let be = seq::bell_euler_poly(n, &alpha).unwrap();
        let lower = seq::bell_euler_poly(n, &(&alpha - Rational::one())).unwrap();
        prop_assert_eq!(be.derivative(bell_euler_core::algebra::Y), (&be - &lower).scale(&frac(-2, 1)));
        prop_assert_eq!(be.degree_in(X) as usize, n);
    }
}
