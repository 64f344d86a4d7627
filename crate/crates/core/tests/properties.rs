//! Property tests: ring axioms, exact division, substitution, text round
//! trips, determinant algorithms and path-counting invariants.

use std::collections::HashMap;

use hankel_core::charpoly::f_poly;
use hankel_core::hankel::{det_bareiss, det_cofactor, hankel_det, hankel_product_formula, HankelSpec, ProductVariant, SquareMatrix};
use hankel_core::moments::moments;
use hankel_core::oracle::{cut_path_sum, enum_paths, enum_pillars};
use hankel_core::verify::{detect_recurrence, verify, VerifyOptions};
use hankel_core::weights::{Mode, Weight, WeightSystem};
use hankel_core::{Poly, Var};
use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

/// Sparse polynomials in x, y, z with small coefficients and degrees.
fn poly() -> impl Strategy<Value = Poly> {
    prop::collection::vec((-5i64..=5, 0u32..3, 0u32..3, 0u32..2), 0..5).prop_map(|terms| {
        terms
            .into_iter()
            .map(|(c, a, b, d)| Poly::from(c) * Poly::named("x").pow(a) * Poly::named("y").pow(b) * Poly::named("z").pow(d))
            .sum()
    })
}

fn nonzero_poly() -> impl Strategy<Value = Poly> {
    poly().prop_filter("nonzero", |p| !p.is_zero())
}

/// Motzkin weights with integer prefix of length 4 and a constant tail.
fn motzkin_weights() -> impl Strategy<Value = WeightSystem> {
    let w = || (-3i64..=3, prop_oneof![-3i64..=-1, 1i64..=3]);
    (prop::collection::vec(w(), 4), w()).prop_map(|(prefix, (s, t))| {
        let weight = |(s, t): (i64, i64)| Weight::Motzkin { s: Poly::from(s), t: Poly::from(t) };
        WeightSystem::new(Mode::Motzkin, prefix.into_iter().map(weight).collect(), weight((s, t)))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms(a in poly(), b in poly(), c in poly()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!((&a + &b) + &c, &a + (&b + &c));
        prop_assert_eq!((&a * &b) * &c, &a * (&b * &c));
        prop_assert_eq!(&a * (&b + &c), &a * &b + &a * &c);
        prop_assert_eq!(&a * &Poly::one(), a.clone());
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn exact_division_inverts_multiplication(a in poly(), b in nonzero_poly()) {
        prop_assert_eq!((&a * &b).exact_div(&b).unwrap(), a);
    }

    #[test]
    fn substitution_is_a_ring_map(a in poly(), b in poly(), v in poly()) {
        let mut bind = HashMap::new();
        bind.insert(Var::new("x"), v);
        let sub = |p: &Poly| p.substitute(&bind);
        prop_assert_eq!(sub(&(&a * &b)), sub(&a) * sub(&b));
        prop_assert_eq!(sub(&(&a + &b)), sub(&a) + sub(&b));
    }

    #[test]
    fn text_round_trip(a in poly()) {
        let back: Poly = a.to_string().parse().unwrap();
        prop_assert_eq!(back, a);
    }

    #[test]
    fn bareiss_agrees_with_cofactor(n in 1usize..=4, entries in prop::collection::vec(poly(), 16)) {
        let m = SquareMatrix::from_fn(n, |i, j| entries[i * 4 + j].clone());
        prop_assert_eq!(det_bareiss(&m), det_cofactor(&m));
    }

    #[test]
    fn roots_enter_symmetrically(ws in motzkin_weights(), roots in prop::collection::vec(-4i64..=4, 3), n in 1usize..=3) {
        let r: Vec<Poly> = roots.iter().map(|&x| Poly::from(x)).collect();
        let perm = vec![r[2].clone(), r[0].clone(), r[1].clone()];
        let spec = HankelSpec::new(0, r);
        let seq = moments(&ws, spec.required_len(n) - 1);
        prop_assert_eq!(hankel_det(&seq, &spec, n).unwrap(), hankel_det(&seq, &HankelSpec::new(0, perm), n).unwrap());
    }

    #[test]
    fn moments_count_paths(ws in motzkin_weights(), n in 0usize..=7) {
        prop_assert_eq!(moments(&ws, n)[n].clone(), enum_paths(&ws, n, 0));
    }

    #[test]
    fn paths_split_anywhere(ws in motzkin_weights(), i in 0usize..=4, j in 0usize..=4) {
        prop_assert_eq!(cut_path_sum(&ws, i, j), moments(&ws, i + j)[i + j].clone());
    }

    #[test]
    fn pillars_count_f(ws in motzkin_weights(), n in 0usize..=6) {
        let x = Var::new("alpha");
        prop_assert_eq!(enum_pillars(&ws, n, x), f_poly(&ws, n as i64, x).unwrap());
    }

    #[test]
    fn plain_determinant_is_a_product(ws in motzkin_weights(), n in 1usize..=5) {
        let seq = moments(&ws, 2 * n);
        prop_assert_eq!(
            hankel_det(&seq, &HankelSpec::plain(0), n).unwrap(),
            hankel_product_formula(&ws, ProductVariant::Base, n).unwrap()
        );
    }

    #[test]
    fn two_root_sum_at_integer_points(ws in motzkin_weights(), a in -5i64..=5, b in -5i64..=5) {
        let opts = VerifyOptions::default()
            .with_weights(ws)
            .with_n_max(3)
            .bind("alpha", BigRational::from_integer(BigInt::from(a)))
            .bind("beta", BigRational::from_integer(BigInt::from(b)));
        let report = verify("two-root-sum", &opts).unwrap();
        prop_assert!(report.passed(), "{:?}", report.witnesses);
    }

    #[test]
    fn recurrences_are_recovered(coeffs in prop::collection::vec(-3i64..=3, 1..=3), init in prop::collection::vec(-5i64..=5, 3)) {
        let order = coeffs.len();
        let q = |x: i64| BigRational::from_integer(BigInt::from(x));
        let mut seq: Vec<BigRational> = init[..order].iter().map(|&x| q(x)).collect();
        while seq.len() < 12 {
            let k = seq.len();
            let next: BigRational = (0..order).map(|i| q(coeffs[i]) * &seq[k - order + i]).sum();
            seq.push(next);
        }
        let found = detect_recurrence(&seq, 5).unwrap().expect("a recurrence exists");
        prop_assert!(found.order <= order);
        prop_assert!(found.fits(&seq));
    }
}
