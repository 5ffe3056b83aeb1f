use proptest::prelude::*;

use adjprof_core::algebra::{act, Algebra, AlgebraElement, Grading, Transvection};
use adjprof_core::linalg::matrix::{is_zero_matrix, Matrix};
use adjprof_core::linalg::poly::eval_poly_at_matrix;
use adjprof_core::linalg::scalar::{rat, rat_int};
use adjprof_core::linalg::{Coeff, Field, PrimeField, Rationals, DEFAULT_PRIME, GAUSSIAN_PRIME};
use adjprof_core::profiles::{rank_profile, trace_powers};

fn z2(n: usize) -> Algebra {
    Algebra::full(Grading::z2(n).unwrap()).unwrap()
}

/// Sums of `k`-forms on `n` letters with small integer coefficients.
fn forms(n: usize, k: usize, terms: usize) -> impl Strategy<Value = AlgebraElement> {
    let letters: Vec<usize> = (0..n).collect();
    prop::collection::vec((prop::sample::subsequence(letters, k), -3i64..=3), 1..=terms).prop_map(move |ts| {
        ts.into_iter().fold(AlgebraElement::zero(n), |acc, (idx, c)| {
            acc.add(&AlgebraElement::wedge(n, &idx).unwrap().scale(&Coeff::from_i64(c)))
        })
    })
}

fn transvection(n: usize) -> impl Strategy<Value = Transvection> {
    (0..n, 1..n, prop_oneof![-3i64..=-1, 1i64..=3])
        .prop_map(move |(i, off, s)| Transvection::new(i, (i + off) % n, rat_int(s)).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn bracket_is_equivariant(x in forms(6, 3, 4), y in forms(6, 3, 4), g in prop::collection::vec(transvection(6), 1..4)) {
        let alg = z2(6);
        let lhs = act(&g, &alg.bracket(&x, &y).unwrap()).unwrap();
        let rhs = alg.bracket(&act(&g, &x).unwrap(), &act(&g, &y).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn profiles_are_orbit_invariants(x in forms(6, 3, 4), g in prop::collection::vec(transvection(6), 1..6)) {
        let alg = z2(6);
        let f = PrimeField::new(DEFAULT_PRIME).unwrap();
        let gx = act(&g, &x).unwrap();
        prop_assert_eq!(rank_profile(&f, &alg, &x, None).unwrap(), rank_profile(&f, &alg, &gx, None).unwrap());
    }

    #[test]
    fn profiles_are_scale_invariant(x in forms(8, 4, 5), num in 1i64..9, den in 1i64..9, neg in any::<bool>()) {
        let alg = z2(8);
        let f = PrimeField::new(GAUSSIAN_PRIME).unwrap();
        let s = rat(if neg { -num } else { num }, den);
        let y = x.scale(&Coeff::real(s));
        prop_assert_eq!(rank_profile(&f, &alg, &x, None).unwrap(), rank_profile(&f, &alg, &y, None).unwrap());
    }

    #[test]
    fn rational_and_modular_ranks_agree(x in forms(6, 3, 5)) {
        let alg = z2(6);
        let f = PrimeField::new(DEFAULT_PRIME).unwrap();
        prop_assert_eq!(rank_profile(&Rationals, &alg, &x, None).unwrap(), rank_profile(&f, &alg, &x, None).unwrap());
    }

    #[test]
    fn odd_traces_vanish(x in forms(8, 4, 6)) {
        let alg = z2(8);
        let f = PrimeField::new(DEFAULT_PRIME).unwrap();
        let tp = trace_powers(&f, &alg, &x, 9).unwrap();
        prop_assert!(tp.iter().step_by(2).all(|v| f.is_zero(v)));
    }

    #[test]
    fn cayley_hamilton(size in 1usize..9, seed in prop::collection::vec(-6i64..=6, 64)) {
        let m = Matrix::from_vec(size, size, (0..size * size).map(|i| rat_int(seed[i % 64] + i as i64 % 3)).collect());
        let chi = Rationals.char_poly(&m);
        prop_assert!(is_zero_matrix(&Rationals, &eval_poly_at_matrix(&Rationals, &chi, &m)));
        let f = PrimeField::new(DEFAULT_PRIME).unwrap();
        let mp = m.map(|q| f.from_rational(q).unwrap());
        prop_assert!(is_zero_matrix(&f, &eval_poly_at_matrix(&f, &f.char_poly(&mp), &mp)));
    }
}
