//! Grid and property checks of the invariants that tie the modules together.

use approx::assert_abs_diff_eq;
use num_complex::Complex64;
use proptest::prelude::*;

use relspin::boosted::{
    boost, closed_form_velocity_matrix, initial_state, mode_embedding, spin_density_matrix,
    velocity_density_matrix,
};
use relspin::measures::{
    bell_closed_form, entanglement_of_formation, relative_entropy_closed_form,
    relative_entropy_of_entanglement,
};
use relspin::quantum::{
    hermitian_eigen, hermitian_eigenvalues, von_neumann_entropy, ComplexMatrix, DensityMatrix,
};
use relspin::{analyze, wigner_angle, Velocity};

fn v(beta: f64) -> Velocity {
    Velocity::new(beta).unwrap()
}

fn grid(n: usize, max: f64) -> impl Iterator<Item = (Velocity, Velocity)> {
    (0..n).flat_map(move |i| {
        (0..n).map(move |j| {
            let a = max * i as f64 / (n - 1) as f64;
            let b = max * j as f64 / (n - 1) as f64;
            (v(a), v(b))
        })
    })
}

#[test]
fn boost_preserves_norm() {
    for (a, b) in grid(50, 1.0) {
        let s = boost(&initial_state(a), b).unwrap();
        assert_abs_diff_eq!(s.state().norm(), 1.0, epsilon = 1e-12);
    }
}

#[test]
fn reduced_velocity_state_matches_closed_form() {
    for (a, b) in grid(50, 1.0) {
        let s = boost(&initial_state(a), b).unwrap();
        let w = wigner_angle(a, b);
        let rho = velocity_density_matrix(&s);
        assert!(
            rho.matrix()
                .max_abs_diff(&closed_form_velocity_matrix(w.cos_two_omega))
                <= 1e-12
        );
        let ev = rho.eigenvalues().unwrap();
        assert_abs_diff_eq!(ev[0], w.sin_sq_omega, epsilon = 1e-12);
        assert_abs_diff_eq!(ev[1], w.cos_sq_omega(), epsilon = 1e-12);
        assert_abs_diff_eq!(ev[0], 0.5 * (1.0 - w.cos_two_omega), epsilon = 1e-12);
    }
}

#[test]
fn schmidt_symmetry_and_mode_entropy() {
    for (a, b) in grid(50, 1.0) {
        let s = boost(&initial_state(a), b).unwrap();
        let sv = von_neumann_entropy(&velocity_density_matrix(&s)).unwrap();
        let ss = von_neumann_entropy(&spin_density_matrix(&s)).unwrap();
        assert_abs_diff_eq!(sv, ss, epsilon = 1e-10);
        let m = mode_embedding(&s);
        assert!(m.leakage() <= 1e-15);
        assert_abs_diff_eq!(m.mode_entropy(0).unwrap(), 1.0, epsilon = 1e-10);
    }
}

#[test]
fn measures_agree_with_closed_forms() {
    for (a, b) in grid(50, 1.0) {
        let r = analyze(a, b).unwrap();
        let w = wigner_angle(a, b);
        assert_abs_diff_eq!(r.bell_b, bell_closed_form(w.cos_two_omega), epsilon = 1e-10);
        assert_abs_diff_eq!(
            r.entanglement_e,
            relative_entropy_closed_form(w.cos_two_omega),
            epsilon = 1e-12
        );
        assert_abs_diff_eq!(r.entanglement_e, 1.0 - r.entropy_s, epsilon = 1e-12);
        assert_abs_diff_eq!(r.concurrence_c, w.sin_two_omega(), epsilon = 1e-12);
        assert_abs_diff_eq!(
            r.entanglement_e + entanglement_of_formation(r.concurrence_c),
            1.0,
            epsilon = 1e-10
        );
        assert!(r.bell_b >= 2.0 && r.bell_b <= 2.0 * 2f64.sqrt() + 1e-12);
    }
}

#[test]
fn relative_entropy_forms_agree() {
    for k in 0..=1000 {
        let c = k as f64 / 1000.0;
        let rho = DensityMatrix::new(closed_form_velocity_matrix(c)).unwrap();
        assert_abs_diff_eq!(
            relative_entropy_of_entanglement(&rho).unwrap(),
            relative_entropy_closed_form(c),
            epsilon = 1e-12
        );
    }
}

#[test]
fn entanglement_and_violation_persist_below_light_speed() {
    for (a, b) in grid(101, 0.999) {
        let r = analyze(a, b).unwrap();
        assert!(r.entanglement_e > 0.0, "{a:?} {b:?}");
        assert!(r.bell_b > 2.0, "{a:?} {b:?}");
    }
    let r = analyze(Velocity::LIGHT, Velocity::LIGHT).unwrap();
    assert_eq!((r.entanglement_e, r.bell_b), (0.0, 2.0));
    let r = analyze(Velocity::LIGHT, v(0.999_999)).unwrap();
    assert!(r.entanglement_e > 0.0 && r.bell_b > 2.0);
}

#[test]
fn measures_non_increasing_along_each_axis() {
    let n = 101;
    let at = |i: usize| v(i as f64 / (n - 1) as f64);
    for i in 0..n {
        let row: Vec<_> = (0..n).map(|j| analyze(at(i), at(j)).unwrap()).collect();
        let col: Vec<_> = (0..n).map(|j| analyze(at(j), at(i)).unwrap()).collect();
        for line in [row, col] {
            for w in line.windows(2) {
                assert!(w[1].entanglement_e <= w[0].entanglement_e);
                assert!(w[1].bell_b <= w[0].bell_b);
                assert!(w[1].cos_two_omega <= w[0].cos_two_omega);
            }
        }
    }
}

fn complex_strategy() -> impl Strategy<Value = Complex64> {
    (-1.0..1.0f64, -1.0..1.0f64).prop_map(|(re, im)| Complex64::new(re, im))
}

/// Random density matrix `A A^dagger / tr` over the given factors.
fn density_strategy(factors: Vec<usize>) -> impl Strategy<Value = DensityMatrix> {
    let n: usize = factors.iter().product();
    proptest::collection::vec(complex_strategy(), n * n).prop_map(move |entries| {
        let a = ComplexMatrix::new(n, n, entries).unwrap();
        let aa = &a * &a.adjoint();
        let tr = aa.trace().re;
        let m = aa
            .scale(Complex64::new(1.0 / tr, 0.0))
            .with_factors(factors.clone())
            .unwrap();
        DensityMatrix::new(m).unwrap()
    })
}

fn unitary_from(entries: Vec<Complex64>, n: usize) -> ComplexMatrix {
    // eigenvectors of a random Hermitian matrix form a random unitary
    let a = ComplexMatrix::new(n, n, entries).unwrap();
    let h = &a + &a.adjoint();
    hermitian_eigen(&h).unwrap().vectors
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn partial_trace_preserves_trace_and_hermiticity(
        rho in prop_oneof![
            density_strategy(vec![2, 2]),
            density_strategy(vec![3, 3]),
            density_strategy(vec![2, 3]),
        ],
        keep in 0usize..2,
    ) {
        let r = rho.partial_trace(keep).unwrap();
        prop_assert!((r.matrix().trace().re - 1.0).abs() <= 1e-10);
        prop_assert!(r.matrix().trace().im.abs() <= 1e-10);
        prop_assert!(r.matrix().hermiticity_error() <= 1e-10);
        prop_assert!(DensityMatrix::new(r.matrix().clone()).is_ok());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn entropy_is_unitarily_invariant(
        rho in density_strategy(vec![2, 2]),
        u in proptest::collection::vec(complex_strategy(), 16),
    ) {
        let u = unitary_from(u, 4);
        let rotated = &(&u * rho.matrix()) * &u.adjoint();
        let rotated = DensityMatrix::new(rotated).unwrap();
        let s0 = von_neumann_entropy(&rho).unwrap();
        let s1 = von_neumann_entropy(&rotated).unwrap();
        prop_assert!((s0 - s1).abs() <= 1e-10, "{} vs {}", s0, s1);
        prop_assert!((-1e-12..=2.0 + 1e-12).contains(&s0));
    }

    #[test]
    fn eigenvalues_sum_to_trace(entries in proptest::collection::vec(complex_strategy(), 81)) {
        let a = ComplexMatrix::new(9, 9, entries).unwrap();
        let h = &a + &a.adjoint();
        let ev = hermitian_eigenvalues(&h).unwrap();
        prop_assert!((ev.iter().sum::<f64>() - h.trace().re).abs() <= 1e-10);
    }
}
