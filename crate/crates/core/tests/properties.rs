//! Property-based checks of the operator algebra and ring invariants on
//! randomly generated polynomials and permutations.

use num_bigint::BigInt;
use proptest::prelude::*;

use groth_kit::groth::{grothendieck_dd, schubert_dd, Variant};
use groth_kit::permcore::Permutation;
use groth_kit::polyring::{ExponentVector, IntPolynomial, VarSpace};

const VARS: usize = 4;

fn poly_strategy() -> impl Strategy<Value = IntPolynomial> {
    let term = (proptest::collection::vec(0u32..4, VARS), -10i64..=10);
    proptest::collection::vec(term, 0..6).prop_map(|terms| {
        let s = VarSpace::x_only(VARS);
        let mut f = IntPolynomial::zero(s);
        for (exps, c) in terms {
            f = f.add(&IntPolynomial::monomial(
                s,
                ExponentVector(exps),
                BigInt::from(c),
            ));
        }
        f
    })
}

fn perm_strategy(max_n: usize) -> impl Strategy<Value = Permutation> {
    (1..=max_n).prop_flat_map(|n| {
        Just(n).prop_perturb(move |n, mut rng| {
            let mut entries: Vec<usize> = (1..=n).collect();
            for i in (1..n).rev() {
                let j = rng.random_range(0..=i);
                entries.swap(i, j);
            }
            Permutation::new(entries).unwrap()
        })
    })
}

proptest! {
    #[test]
    fn divided_difference_squares_to_zero(f in poly_strategy(), i in 1usize..VARS) {
        prop_assert!(f.divided_difference(i).divided_difference(i).is_zero());
    }

    #[test]
    fn isobaric_is_idempotent(f in poly_strategy(), i in 1usize..VARS) {
        let p = f.isobaric_divided_difference(i);
        prop_assert_eq!(p.isobaric_divided_difference(i), p);
    }

    #[test]
    fn braid_relations(f in poly_strategy(), i in 1usize..VARS - 1) {
        let lhs = f.divided_difference(i).divided_difference(i + 1).divided_difference(i);
        let rhs = f.divided_difference(i + 1).divided_difference(i).divided_difference(i + 1);
        prop_assert_eq!(lhs, rhs);
        let lhs = f
            .isobaric_divided_difference(i)
            .isobaric_divided_difference(i + 1)
            .isobaric_divided_difference(i);
        let rhs = f
            .isobaric_divided_difference(i + 1)
            .isobaric_divided_difference(i)
            .isobaric_divided_difference(i + 1);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn distant_operators_commute(f in poly_strategy()) {
        prop_assert_eq!(
            f.divided_difference(1).divided_difference(3),
            f.divided_difference(3).divided_difference(1)
        );
        prop_assert_eq!(
            f.isobaric_divided_difference(1).isobaric_divided_difference(3),
            f.isobaric_divided_difference(3).isobaric_divided_difference(1)
        );
    }

    #[test]
    fn exact_divide_inverts_multiplication(f in poly_strategy(), g in poly_strategy()) {
        prop_assume!(!g.is_zero());
        let product = f.mul(&g);
        prop_assert_eq!(product.exact_divide(&g).unwrap(), f);
    }

    #[test]
    fn normalization_is_linear(f in poly_strategy(), g in poly_strategy()) {
        prop_assert_eq!(
            f.add(&g).normalize(),
            f.normalize().add(&g.normalize())
        );
    }

    #[test]
    fn sign_flip_is_an_involution(f in poly_strategy()) {
        prop_assume!(!f.is_zero());
        let base = f.min_degree().unwrap();
        prop_assert_eq!(f.sign_flip_by_degree(base).sign_flip_by_degree(base), f);
    }

    #[test]
    fn inverse_preserves_length(w in perm_strategy(7)) {
        prop_assert_eq!(w.inverse().length(), w.length());
        prop_assert_eq!(w.inverse().inverse(), w);
    }

    #[test]
    fn rothe_diagram_size_is_length(w in perm_strategy(7)) {
        prop_assert_eq!(w.rothe_diagram().len(), w.length());
    }

    #[test]
    fn schubert_is_lowest_component(w in perm_strategy(5)) {
        let g = grothendieck_dd(&w, Variant::Single);
        let low = g.homogeneous_component(w.length() as u32);
        prop_assert_eq!(low, schubert_dd(&w, Variant::Single));
    }

    #[test]
    fn double_specializes_to_single(w in perm_strategy(4)) {
        let double = grothendieck_dd(&w, Variant::Double);
        prop_assert_eq!(
            double.set_y_zero().restrict_to_x(),
            grothendieck_dd(&w, Variant::Single)
        );
    }
}
