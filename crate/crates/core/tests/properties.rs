use ladder_core::fock::{
    annihilation_matrix, anticommutator, commutator, creation_matrix, operator_exponential,
    total_number_operator, OperatorMatrix, SpinOrbital, DIM,
};
use ladder_core::integrals::ModelCoefficients;
use ladder_core::model::{d_minus, d_plus, ladder_data};
use ladder_core::solver::{
    density_profile, ground_energy, ground_state_vector, pair_rotation, stationary_eta, support,
    uniform_grid,
};
use proptest::prelude::*;

fn small_int_operator() -> impl Strategy<Value = OperatorMatrix> {
    prop::collection::vec(-3i32..=3, DIM * DIM)
        .prop_map(|v| OperatorMatrix::from_fn(|i, j| f64::from(v[i * DIM + j])))
}

fn bounded_operator() -> impl Strategy<Value = OperatorMatrix> {
    prop::collection::vec(-0.6f64..0.6, DIM * DIM)
        .prop_map(|v| OperatorMatrix::from_fn(|i, j| v[i * DIM + j]))
}

/// A word of ladder operators, `true` meaning creation.
fn ladder_word() -> impl Strategy<Value = Vec<(usize, bool)>> {
    prop::collection::vec((0usize..4, any::<bool>()), 0..6)
}

fn word_operator(word: &[(usize, bool)]) -> OperatorMatrix {
    word.iter()
        .fold(OperatorMatrix::identity(), |acc, &(mode, create)| {
            let o = SpinOrbital::ALL[mode];
            acc * if create {
                creation_matrix(o)
            } else {
                annihilation_matrix(o)
            }
        })
}

fn coefficients() -> impl Strategy<Value = ModelCoefficients> {
    (
        -3.0f64..3.0,
        -3.0f64..3.0,
        -3.0f64..3.0,
        -3.0f64..3.0,
        -3.0f64..3.0,
        0.0f64..0.1,
    )
        .prop_map(|(e1, e2, v1, v2, u, ub)| ModelCoefficients::new(e1, e2, v1, v2, u, ub))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn product_rules_for_commutators(a in small_int_operator(), b in small_int_operator(), c in small_int_operator()) {
        let zero = OperatorMatrix::zeros();
        prop_assert_eq!(commutator(&(a * b), &c) - (a * commutator(&b, &c) + commutator(&a, &c) * b), zero);
        prop_assert_eq!(commutator(&a, &(b * c)) - (commutator(&a, &b) * c + b * commutator(&a, &c)), zero);
        prop_assert_eq!(commutator(&(a * b), &c) - (a * anticommutator(&b, &c) - anticommutator(&a, &c) * b), zero);
        prop_assert_eq!(commutator(&a, &(b * c)) - (anticommutator(&a, &b) * c - b * anticommutator(&a, &c)), zero);
    }

    #[test]
    fn exponential_inverse(a in bounded_operator()) {
        let e = operator_exponential(&a).unwrap();
        let inv = operator_exponential(&(-a)).unwrap();
        prop_assert!((e * inv).max_abs_diff(&OperatorMatrix::identity()) < 1e-10);
    }

    #[test]
    fn exponential_of_antisymmetric_is_orthogonal(a in bounded_operator()) {
        let skew = a - a.adjoint();
        let q = operator_exponential(&skew).unwrap();
        prop_assert!((q.adjoint() * q).max_abs_diff(&OperatorMatrix::identity()) < 1e-10);
    }

    #[test]
    fn number_conserving_words_commute_with_total_number(word in ladder_word(), perm in ladder_word()) {
        // pair each creation with an annihilation so the word is balanced
        let mut balanced: Vec<(usize, bool)> = word.iter().map(|&(m, _)| (m, true)).collect();
        balanced.extend(perm.iter().take(word.len()).map(|&(m, _)| (m, false)));
        balanced.extend(word.iter().skip(perm.len()).map(|&(m, _)| (m, false)));
        let op = word_operator(&balanced);
        prop_assert_eq!(commutator(&total_number_operator(), &op), OperatorMatrix::zeros());
    }

    #[test]
    fn step_difference_is_energy_slope(c in coefficients(), eta in 0.0f64..=1.0) {
        // slope of 2e1+2V1 + (-2e1+2e2-4V1+4U) eta + 2(V1+V2-2U) eta^2
        let slope = -2.0 * c.eps1 + 2.0 * c.eps2 - 4.0 * c.v1 + 4.0 * c.u
            + 4.0 * (c.v1 + c.v2 - 2.0 * c.u) * eta;
        prop_assert!((d_plus(&c, eta) - d_minus(&c, eta) - slope).abs() < 1e-12);
    }

    #[test]
    fn ladder_cross_consistency(c in coefficients(), eta in 0.0f64..=1.0) {
        if let Ok(l) = ladder_data(&c, eta) {
            let k = (1.0 - 2.0 * eta) * (1.0 - 2.0 * eta + 2.0 * eta * eta);
            prop_assert_eq!(l.k, k);
            prop_assert!((l.lambda_minus * l.d_minus - k * c.ubar).abs() < 1e-12);
            prop_assert!((l.lambda_plus * l.d_plus + k * c.ubar).abs() < 1e-12);
        }
    }

    #[test]
    fn ground_state_dual_path(c in coefficients(), eta in 0.0f64..=1.0) {
        if let Ok(l) = ladder_data(&c, eta) {
            prop_assume!(l.theta.abs() < 50.0);
            let g = ground_state_vector(&c, eta).unwrap();
            prop_assert!(g.max_abs_diff(&pair_rotation(l.theta)) < 1e-10);
            prop_assert!((g.norm() - 1.0).abs() < 1e-10);
            prop_assert!(support(&g).len() <= 2);
        }
    }

    #[test]
    fn energies_coincide_at_interior_stationary_point(c in coefficients()) {
        let p = stationary_eta(&c);
        prop_assume!(p.is_interior());
        if let Ok(e) = ground_energy(&c, p.eta) {
            let l = ladder_data(&c, p.eta).unwrap();
            prop_assume!(l.d_plus.abs() > 1e-3 && l.d_minus.abs() > 1e-3);
            prop_assert!((e.full - e.quadratic).abs() < 1e-9);
        }
    }

    #[test]
    fn density_carries_two_electrons(c in coefficients(), eta in 0.0f64..=1.0) {
        let grid = uniform_grid(40.0, 2000).unwrap();
        if let Ok(p) = density_profile(&c, eta, &grid) {
            prop_assert!((p.integral - 2.0).abs() < 1e-6);
            prop_assert!(p.density.iter().all(|&x| x >= 0.0));
        }
    }
}
