mod common;

use num_bigint::BigInt;
use num_traits::Signed;
use proptest::prelude::*;
use torsionscan_core::algebra::quotient_group;
use torsionscan_core::{IntegerMatrix, SublatticeSpan};

use common::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn smith_form_contract((cols, a) in small_matrix()) {
        if let Err(msg) = check_snf(&a, cols) {
            prop_assert!(false, "{}", msg);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn wedge_square_matches_closed_form((d, gens) in full_rank_span()) {
        if let Err(msg) = check_wedge_closed_form(d, &gens) {
            prop_assert!(false, "{}", msg);
        }
    }

    #[test]
    fn quotient_invariant_under_generator_moves(
        (d, gens) in full_rank_span(),
        seed in any::<u64>(),
        factor in -4i64..=4,
    ) {
        let base = quotient_group(&SublatticeSpan::from_i64(d, &gens).unwrap());

        let mut permuted = gens.clone();
        let n = permuted.len();
        permuted.rotate_left((seed % n as u64) as usize);
        permuted.swap(0, (seed / 7 % n as u64) as usize);
        prop_assert_eq!(&quotient_group(&SublatticeSpan::from_i64(d, &permuted).unwrap()), &base);

        let (i, j) = ((seed % n as u64) as usize, ((seed / 3 + 1) % n as u64) as usize);
        if i != j {
            let mut moved = gens.clone();
            let src = moved[j].clone();
            for (x, y) in moved[i].iter_mut().zip(&src) {
                *x += factor * y;
            }
            prop_assert_eq!(&quotient_group(&SublatticeSpan::from_i64(d, &moved).unwrap()), &base);
        }
    }

    #[test]
    fn square_quotient_order_is_abs_det(
        a in (1usize..=4).prop_flat_map(|n| prop::collection::vec(prop::collection::vec(-9i64..=9, n), n))
    ) {
        let n = a.len();
        let m = IntegerMatrix::from_columns(n, &a).unwrap();
        let det: BigInt = laplace_det(
            &(0..n).map(|i| m.row(i).to_vec()).collect::<Vec<_>>(),
        );
        let g = quotient_group(&SublatticeSpan::from_i64(n, &a).unwrap());
        if det == BigInt::from(0) {
            prop_assert!(!g.is_finite());
        } else {
            prop_assert_eq!(BigInt::from(g.order().unwrap()), det.abs());
        }
    }
}
