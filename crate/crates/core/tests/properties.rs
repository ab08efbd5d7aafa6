use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use proptest::prelude::*;

use seqconv::exactmath::{geom_ratio_sum, ExactDiv, QuadExt};
use seqconv::identities::{convolve, four_sum_sides, FourSumParams};
use seqconv::sequences::{binet_at, HoradamParams, LucasPair};
use seqconv::weights::{WeightContext, WeightFamily};
use seqconv::{ChebyshevTable, ExactScalar, Horadam, Params, Poly, Quad, Rational};

fn rat() -> impl Strategy<Value = Rational> {
    (-40i64..=40, 1i64..=12).prop_map(|(n, d)| Rational::new(n.into(), d.into()))
}

fn nonzero_rat() -> impl Strategy<Value = Rational> {
    rat().prop_filter("non-zero", |x| !x.is_zero())
}

fn int(v: i64) -> Rational {
    Rational::from_integer(v.into())
}

fn nonzero_int() -> impl Strategy<Value = i64> {
    (-6i64..=6).prop_filter("non-zero", |v| *v != 0)
}

fn params() -> impl Strategy<Value = Params> {
    (-6i64..=6, -6i64..=6, nonzero_int(), nonzero_int())
        .prop_map(|(a, b, p, q)| HoradamParams::new(int(a), int(b), int(p), int(q)).unwrap())
}

fn poly() -> impl Strategy<Value = Poly> {
    prop::collection::vec(rat(), 0..6).prop_map(Poly::new)
}

const RADICANDS: [i64; 5] = [-1, 2, 3, 5, 7];

fn quad_in(d: i64) -> impl Strategy<Value = Quad> {
    (rat(), rat()).prop_map(move |(a, b)| QuadExt::new(int(d), a, b).unwrap())
}

proptest! {
    #[test]
    fn rational_inverse(x in nonzero_rat()) {
        let inv = Rational::one().exact_div(&x).unwrap();
        prop_assert_eq!(x * inv, Rational::one());
    }

    #[test]
    fn quad_inverse(d in prop::sample::select(RADICANDS.to_vec()), a in rat(), b in rat()) {
        prop_assume!(!a.is_zero() || !b.is_zero());
        let q = QuadExt::new(int(d), a, b).unwrap();
        let one = QuadExt::from_base(int(d), Rational::one()).unwrap();
        prop_assert_eq!(q.try_mul(&q.inv().unwrap()).unwrap(), one);
        prop_assert_eq!(q.try_mul(&q.conjugate()).unwrap(), q.lift(q.norm()));
    }

    #[test]
    fn geometric_sum_invariants(x in rat(), z in rat(), n in 0u32..12) {
        let g = geom_ratio_sum(&x, &z, n).unwrap();
        let brute = (0..=n).fold(Rational::zero(), |acc, k| {
            acc + num_traits::pow(x.clone(), k as usize) * num_traits::pow(z.clone(), (n - k) as usize)
        });
        prop_assert_eq!(&g, &brute);
        prop_assert_eq!(&g, &geom_ratio_sum(&z, &x, n).unwrap());
        let top = num_traits::pow(x.clone(), n as usize + 1) - num_traits::pow(z.clone(), n as usize + 1);
        prop_assert_eq!((x - z) * g, top);
    }

    #[test]
    fn polynomial_ring_laws(a in poly(), b in poly(), c in poly()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a - &a, Poly::zero());
        prop_assert_eq!(&a * &Poly::one(), a.clone());
    }

    #[test]
    fn polynomial_division_reconstructs(a in poly(), b in poly()) {
        prop_assume!(!b.is_zero());
        let (q, r) = a.div_rem(&b).unwrap();
        prop_assert_eq!(&(&q * &b) + &r, a);
        prop_assert!(r.degree() < b.degree() || r.is_zero());
    }

    #[test]
    fn recurrence_holds_on_both_sides(p in params()) {
        let s = Horadam::new(p.clone());
        for n in -30i64..100 {
            let want = p.p.clone() * s.at(n - 1) - p.q.clone() * s.at(n - 2);
            prop_assert_eq!(s.at(n), want, "n = {}", n);
        }
    }

    #[test]
    fn binet_matches_recurrence(p in params()) {
        prop_assume!(!p.discriminant().is_zero());
        let s = Horadam::new(p.clone());
        for n in 0..=30 {
            prop_assert_eq!(binet_at(&p, n).unwrap(), s.at(n));
        }
    }

    #[test]
    fn second_kind_from_first_kind(p in nonzero_int(), q in nonzero_int()) {
        let pair = LucasPair::new(int(p), int(q)).unwrap();
        for n in -20i64..40 {
            let want = pair.u.at(n + 1) - int(q) * pair.u.at(n - 1);
            prop_assert_eq!(pair.v.at(n), want, "n = {}", n);
        }
    }

    #[test]
    fn convolution_is_symmetric(x in params(), y in params(), r in 0i64..4, n in 0i64..15) {
        let (sx, sy) = (Horadam::new(x), Horadam::new(y));
        let xy = convolve(|i| sx.at(i), |i| sy.at(i), r, n);
        let yx = convolve(|i| sy.at(i), |i| sx.at(i), r, n);
        prop_assert_eq!(xy, yx);
    }

    #[test]
    fn weights_are_symmetric(r in 1i64..4, n in 0i64..12) {
        let ctx = WeightContext::default()
            .with_r(r)
            .with_lucas(Arc::new(LucasPair::new(int(1), int(-1)).unwrap()))
            .with_chebyshev(Arc::new(ChebyshevTable::new()));
        for w in WeightFamily::ALL.into_iter().filter(|w| w.in_domain(n)) {
            for k in 0..=n {
                prop_assert_eq!(w.value(&ctx, n, k).unwrap(), w.value(&ctx, n, n - k).unwrap(), "{} k = {}", w, k);
            }
        }
    }

    #[test]
    fn chebyshev_values_at_rationals(n in 0i64..30, x in rat()) {
        let c = ChebyshevTable::new();
        // t_n = (u_n − u_{n−2})/2 and u_n(x) obeys the scalar recurrence.
        let t = c.t(n).eval(&x);
        let half = Rational::new(BigInt::from(1), BigInt::from(2));
        prop_assert_eq!(t, (c.u(n).eval(&x) - c.u(n - 2).eval(&x)) * half);
        let two_x = int(2) * x.clone();
        prop_assert_eq!(c.u(n + 1).eval(&x), two_x * c.u(n).eval(&x) - c.u(n - 1).eval(&x));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn four_geometric_sums_rational(
        v in prop::collection::vec(nonzero_rat(), 8),
        n in 0u32..10,
    ) {
        let e = |i: usize| ExactScalar::Rational(v[i].clone());
        let p = FourSumParams { a1: e(0), a2: e(1), b1: e(2), b2: e(3), x: e(4), y: e(5), z: e(6), w: e(7) };
        let (lhs, rhs) = four_sum_sides(&p, n).unwrap();
        prop_assert_eq!(lhs, rhs);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(50))]

    #[test]
    fn four_geometric_sums_quadratic(
        d in prop::sample::select(vec![2i64, 3, 5]),
        seeds in prop::collection::vec((rat(), rat()), 8),
        n in 0u32..8,
    ) {
        let vals: Vec<Quad> = seeds
            .into_iter()
            .map(|(a, b)| QuadExt::new(int(d), a, b).unwrap())
            .collect();
        prop_assume!(vals.iter().all(|q| !q.is_zero()));
        let e = |i: usize| ExactScalar::Quad(vals[i].clone());
        let p = FourSumParams { a1: e(0), a2: e(1), b1: e(2), b2: e(3), x: e(4), y: e(5), z: e(6), w: e(7) };
        let (lhs, rhs) = four_sum_sides(&p, n).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn quad_field_is_closed(d in prop::sample::select(RADICANDS.to_vec()), a in quad_in(2), b in rat()) {
        // Mixing radicands is refused rather than coerced.
        let other = QuadExt::new(int(d), b, Rational::one()).unwrap();
        prop_assert_eq!(a.try_add(&other).is_ok(), d == 2);
    }
}
