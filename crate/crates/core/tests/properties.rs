use proptest::prelude::*;

use sigcycle::cycle::{SignedCycle, VertexSet};
use sigcycle::descriptors::{describe, spectrum_fingerprint, wiener_sum};
use sigcycle::matrix::{b_power_closed_form, build_a, build_b, switch_diagonal, SquareMatrix};
use sigcycle::recovery::{recover_from_cosine, recover_from_pair};
use sigcycle::spectral::{
    char_poly_coefficients, complex_eigenvector, cosine_eigenvector, eigen_residual,
    full_eigenbasis, jacobi_eigen, sine_eigenvector, spectrum_of, EIGEN_TOL,
};

fn signings(n: usize) -> impl Iterator<Item = SignedCycle> {
    (0..1u64 << n).map(move |m| SignedCycle::from_mask(n, m).unwrap())
}

fn cycle() -> impl Strategy<Value = SignedCycle> {
    (3usize..=12)
        .prop_flat_map(|n| (0..1u64 << n).prop_map(move |m| SignedCycle::from_mask(n, m).unwrap()))
}

fn cycle_and_set() -> impl Strategy<Value = (SignedCycle, VertexSet)> {
    (3usize..=12).prop_flat_map(|n| {
        (0..1u64 << n, 0..1u64 << n).prop_map(move |(m, w)| {
            (
                SignedCycle::from_mask(n, m).unwrap(),
                VertexSet::from_mask(n, w),
            )
        })
    })
}

proptest! {
    #[test]
    fn switching_is_an_involution((c, w) in cycle_and_set()) {
        let once = c.switch(&w).unwrap();
        prop_assert_eq!(once.invariants().sigma, c.invariants().sigma);
        prop_assert_eq!(once.switch(&w).unwrap(), c);
    }

    #[test]
    fn switching_matches_conjugation((c, w) in cycle_and_set()) {
        let d = switch_diagonal(&w, c.n()).unwrap();
        let dad = d.multiply(&build_a(&c)).unwrap().multiply(&d).unwrap();
        prop_assert_eq!(dad, build_a(&c.switch(&w).unwrap()));
    }

    #[test]
    fn switching_equivalence_witness_is_valid((c, w) in cycle_and_set()) {
        let other = c.switch(&w).unwrap();
        let found = c.switching_equivalent(&other).unwrap().expect("same sigma");
        prop_assert_eq!(c.switch(&found).unwrap(), other);
    }

    #[test]
    fn rotation_and_reversal_preserve_invariants(c in cycle(), k in -20i64..20) {
        let inv = c.invariants();
        prop_assert_eq!(c.rotate(k).invariants(), inv);
        prop_assert_eq!(c.reverse().invariants(), inv);
        prop_assert_eq!(c.rotate(k).rotate(-k), c.clone());
        prop_assert_eq!(c.reverse().reverse(), c.clone());
        prop_assert_eq!(spectrum_fingerprint(&c.rotate(k)), spectrum_fingerprint(&c));
    }

    #[test]
    fn canonical_forms_are_idempotent_and_class_constant(c in cycle(), k in 0i64..12) {
        let canon = c.canonical_rotation();
        prop_assert_eq!(canon.canonical_rotation(), canon.clone());
        prop_assert_eq!(c.rotate(k).canonical_rotation(), canon);
        prop_assert_eq!(c.reverse().rotate(k).canonical_unoriented(), c.canonical_unoriented());
        let shift = c.rotate(k).iso_oriented(&c).unwrap();
        prop_assert!(shift.is_some());
    }

    #[test]
    fn recovery_is_scale_invariant_up_to_first_sign(c in cycle(), scale in 0.01f64..100.0) {
        let x = cosine_eigenvector(&c, 0).unwrap();
        let y = sine_eigenvector(&c, 0).unwrap();
        let scaled_x: Vec<f64> = x.iter().map(|v| v * scale).collect();
        let scaled_y: Option<Vec<f64>> = y.as_ref().map(|y| y.iter().map(|v| v * scale).collect());
        let got = recover_from_pair(&scaled_x, scaled_y.as_deref()).unwrap();
        prop_assert_eq!(got.sign_string(), c.sign_string());

        let flipped: Vec<f64> = x.iter().map(|v| -v).collect();
        let neg = recover_from_cosine(&flipped).unwrap();
        let pos = recover_from_cosine(&x).unwrap();
        prop_assert_eq!(neg.signs[0], pos.signs[0].map(|s| -s));
        prop_assert_eq!(&neg.signs[1..], &pos.signs[1..]);
    }

    #[test]
    fn basis_vectors_are_orthogonal_and_complete(c in cycle()) {
        let basis = full_eigenbasis(&c);
        let vs: Vec<(f64, &[f64])> = basis.vectors().collect();
        prop_assert_eq!(vs.len(), c.n());
        for (i, (_, u)) in vs.iter().enumerate() {
            for (_, v) in &vs[i + 1..] {
                let dot: f64 = u.iter().zip(v.iter()).map(|(a, b)| a * b).sum();
                prop_assert!(dot.abs() < 1e-9, "dot {}", dot);
            }
        }
    }

    #[test]
    fn complex_vectors_diagonalize_b(c in cycle(), j in 0usize..12) {
        let n = c.n();
        let j = j % n;
        let z = complex_eigenvector(&c, j).unwrap();
        let lambda = sigcycle::spectral::b_eigenvalue(&c, j);
        let b = build_b(&c);
        for i in 0..n {
            let bz: num_complex::Complex64 = (0..n).map(|k| z[k] * b[(i, k)] as f64).sum();
            prop_assert!((bz - lambda * z[i]).norm() < EIGEN_TOL);
        }
    }
}

#[test]
fn descriptors_depend_only_on_n_and_parity() {
    for n in 3..=8 {
        for s in 0..2u8 {
            let reports: Vec<_> = signings(n)
                .filter(|c| c.invariants().s == s)
                .map(|c| describe(&c))
                .collect();
            for r in &reports[1..] {
                assert_eq!(r.spectrum_key, reports[0].spectrum_key);
                assert_eq!(r.energy, reports[0].energy);
                assert_eq!(r.n3, reports[0].n3);
            }
        }
    }
}

#[test]
fn wiener_sum_is_determined_by_negative_edge_count() {
    for n in 3..=8 {
        for c in signings(n) {
            assert_eq!(wiener_sum(&c), 2 * (n as i64 - 2 * c.invariants().r as i64));
        }
    }
}

#[test]
fn switching_equivalence_is_parity_equality() {
    for n in 3..=6 {
        for a in signings(n) {
            for b in signings(n) {
                let same = a.invariants().s == b.invariants().s;
                assert_eq!(
                    a.switching_equivalent(&b).unwrap().is_some(),
                    same,
                    "{a} {b}"
                );
            }
        }
    }
}

#[test]
fn powers_of_b_match_closed_form() {
    for n in 3..=7 {
        for c in signings(n) {
            let b = build_b(&c);
            for k in 0..=2 * n {
                assert_eq!(b.power(k as u32), b_power_closed_form(&c, k), "{c} k={k}");
            }
        }
    }
}

#[test]
fn char_poly_constant_term_is_signed_determinant() {
    // det(A) via Jacobi eigenvalues, compared to (−1)^n c_n
    for n in 3..=10 {
        for s in 0..2u8 {
            let c = SignedCycle::from_mask(n, s as u64).unwrap();
            let coeffs = char_poly_coefficients(n, s).unwrap();
            let det: f64 = jacobi_eigen(&build_a(&c).to_f64())
                .unwrap()
                .values
                .iter()
                .product();
            let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
            assert!((sign * coeffs[n] as f64 - det).abs() < 1e-8, "n={n} s={s}");
        }
    }
}

#[test]
fn multiplicities_match_jacobi_counts() {
    for n in 3..=10 {
        for s in 0..2u8 {
            let c = SignedCycle::from_mask(n, s as u64).unwrap();
            let jac = jacobi_eigen(&build_a(&c).to_f64()).unwrap();
            for (value, mult) in spectrum_of(&c).distinct() {
                let count = jac
                    .values
                    .iter()
                    .filter(|v| (*v - value).abs() < EIGEN_TOL)
                    .count();
                assert_eq!(count, mult, "n={n} s={s} value={value}");
            }
            for (k, &mu) in jac.values.iter().enumerate() {
                let v = jac.vector(k);
                assert!(eigen_residual(&build_a(&c), mu, &v).unwrap() < EIGEN_TOL);
            }
        }
    }
}

#[test]
fn identity_switch_is_trivial() {
    let c: SignedCycle = "+-+-+".parse().unwrap();
    assert_eq!(c.switch(&VertexSet::empty()).unwrap(), c);
    assert_eq!(c.switch(&VertexSet::all(5)).unwrap(), c);
    assert_eq!(
        switch_diagonal(&VertexSet::all(5), 5).unwrap(),
        SquareMatrix::identity(5).scale(-1)
    );
}
