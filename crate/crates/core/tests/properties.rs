//! Randomized invariants over the exact-arithmetic kernel. All generated
//! values are rationals with small numerators and denominators, so every
//! check is exact.

use cybe_rb::algebra::multiply;
use cybe_rb::catalog::catalog_sl2;
use cybe_rb::exactlinalg::{
    format_scalar, frac, kernel_basis, parse_scalar, solve_linear, Matrix, Scalar,
};
use cybe_rb::yangbaxter::{tau, Tensor2};
use num_traits::Zero;
use proptest::prelude::*;

fn scalar() -> impl Strategy<Value = Scalar> {
    (-20i64..=20, 1i64..=12).prop_map(|(n, d)| frac(n, d))
}

fn matrix(rows: usize, cols: usize) -> impl Strategy<Value = Matrix> {
    proptest::collection::vec(scalar(), rows * cols).prop_map(move |v| {
        let mut m = Matrix::zero(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m[(i, j)] = v[i * cols + j].clone();
            }
        }
        m
    })
}

fn vector(n: usize) -> impl Strategy<Value = Vec<Scalar>> {
    proptest::collection::vec(scalar(), n)
}

proptest! {
    #[test]
    fn scalar_format_round_trips(x in scalar()) {
        prop_assert_eq!(parse_scalar(&format_scalar(&x)).unwrap(), x);
    }

    #[test]
    fn rank_plus_nullity(m in matrix(4, 5)) {
        prop_assert_eq!(m.rank() + kernel_basis(&m).len(), 5);
    }

    #[test]
    fn rank_is_transpose_invariant(m in matrix(4, 4)) {
        prop_assert_eq!(m.rank(), m.transpose().rank());
    }

    #[test]
    fn solutions_substitute_back(m in matrix(3, 4), rhs in vector(3)) {
        if let Some(x) = solve_linear(&m, &rhs).unwrap() {
            prop_assert_eq!(m.mul_vec(&x), rhs);
        } else {
            // inconsistent: rhs must add a pivot to the row space
            let mut rows = m.row_vecs();
            let aug_rank = {
                let mut aug = rows.clone();
                for (i, r) in aug.iter_mut().enumerate() {
                    r.push(rhs[i].clone());
                }
                Matrix::from_rows(aug).unwrap().rank()
            };
            rows.iter_mut().for_each(|r| r.push(Scalar::zero()));
            prop_assert_eq!(aug_rank, m.rank() + 1);
        }
    }

    #[test]
    fn kernel_vectors_annihilate(m in matrix(3, 5)) {
        for k in kernel_basis(&m) {
            prop_assert!(m.mul_vec(&k).iter().all(Scalar::is_zero));
        }
    }

    #[test]
    fn inverse_round_trips(m in matrix(3, 3)) {
        if let Some(inv) = m.inverse() {
            prop_assert_eq!(m.mul(&inv), Matrix::identity(3));
            prop_assert_eq!(inv.mul(&m), Matrix::identity(3));
        } else {
            prop_assert!(m.rank() < 3);
        }
    }

    #[test]
    fn multiplication_is_bilinear(a in vector(3), b in vector(3), c in scalar()) {
        let alg = catalog_sl2().algebra;
        let ea = alg.element(a).unwrap();
        let eb = alg.element(b).unwrap();
        let lhs = multiply(&ea.scale(&c), &eb).unwrap();
        let rhs = multiply(&ea, &eb).unwrap().scale(&c);
        prop_assert_eq!(lhs.coords, rhs.coords);
        let sum = multiply(&ea.add(&eb), &eb).unwrap();
        let parts = multiply(&ea, &eb).unwrap().add(&multiply(&eb, &eb).unwrap());
        prop_assert_eq!(sum.coords, parts.coords);
    }

    #[test]
    fn tau_is_an_involution(grid in matrix(3, 3)) {
        let alg = catalog_sl2().algebra;
        let t = Tensor2::new(&alg, grid).unwrap();
        prop_assert_eq!(tau(&tau(&t)).coeff, t.coeff);
    }
}
