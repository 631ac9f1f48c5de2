use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use proptest::prelude::*;

use super::*;

fn m(rows: &[Vec<i64>]) -> IntMatrix {
    IntMatrix::from_rows(rows)
}

fn v(xs: &[i64]) -> Vec<BigInt> {
    xs.iter().map(|&x| BigInt::from(x)).collect()
}

fn is_row_hnf(h: &IntMatrix) -> bool {
    let mut last_pivot: Option<usize> = None;
    let mut seen_zero = false;
    for r in 0..h.rows() {
        match h.row(r).iter().position(|x| !x.is_zero()) {
            None => seen_zero = true,
            Some(p) => {
                if seen_zero || last_pivot.is_some_and(|lp| p <= lp) {
                    return false;
                }
                let pv = h.get(r, p);
                if !pv.is_positive() {
                    return false;
                }
                for above in 0..r {
                    let x = h.get(above, p);
                    if x.is_negative() || x >= pv {
                        return false;
                    }
                }
                last_pivot = Some(p);
            }
        }
    }
    true
}

fn is_smith(d: &IntMatrix) -> bool {
    for i in 0..d.rows() {
        for j in 0..d.cols() {
            if i != j && !d.get(i, j).is_zero() {
                return false;
            }
        }
    }
    let diag: Vec<&BigInt> = (0..d.rows().min(d.cols())).map(|i| d.get(i, i)).collect();
    if diag.iter().any(|x| x.is_negative()) {
        return false;
    }
    diag.windows(2).all(|w| {
        if w[0].is_zero() {
            w[1].is_zero()
        } else {
            (w[1] % w[0]).is_zero()
        }
    })
}

#[test]
fn hnf_identity_and_zero() {
    let id = IntMatrix::identity(3);
    let (h, u) = hnf(&id);
    assert_eq!(h, id);
    assert_eq!(u, id);

    let z = IntMatrix::zeros(2, 3);
    let (h, u) = hnf(&z);
    assert_eq!(h, z);
    assert_eq!(u, IntMatrix::identity(2));
}

#[test]
fn hnf_small_example() {
    let a = m(&[vec![2, 4], vec![1, 3]]);
    let (h, u) = hnf(&a);
    // [1, 3] reduced above the pivot 2 gives [1, 1]; same row lattice.
    assert_eq!(h, m(&[vec![1, 1], vec![0, 2]]));
    assert_eq!(u.mul(&a).unwrap(), h);
    assert!(u.is_unimodular());
}

#[test]
fn snf_examples() {
    assert_eq!(smith_diagonal(&m(&[vec![2, 0], vec![0, 3]])), v(&[1, 6]));
    assert_eq!(smith_diagonal(&m(&[vec![1, 2], vec![3, 4]])), v(&[1, 2]));
    assert_eq!(smith_diagonal(&IntMatrix::zeros(2, 2)), v(&[0, 0]));
}

#[test]
fn kernel_examples() {
    assert!(kernel(&IntMatrix::identity(3)).is_empty());
    assert_eq!(kernel(&m(&[vec![1, 1]])), vec![v(&[1, -1])]);
    assert_eq!(kernel(&m(&[vec![2, 4]])), vec![v(&[2, -1])]);
}

/// Brute force over a box: every small kernel vector is an integer
/// combination of the returned basis (checked by solving in the basis).
#[test]
fn kernel_brute_force_two_by_four() {
    let a = m(&[vec![2, 4, 6, 1], vec![0, 3, 3, 0]]);
    let basis = kernel(&a);
    assert_eq!(basis.len(), 2);
    let b = IntMatrix::from_vec(basis.len(), 4, basis.concat()).unwrap();
    let range = -3i64..=3;
    for x0 in range.clone() {
        for x1 in range.clone() {
            for x2 in range.clone() {
                for x3 in range.clone() {
                    let x = v(&[x0, x1, x2, x3]);
                    if !a.mul_vec(&x).unwrap().iter().all(Zero::is_zero) {
                        continue;
                    }
                    // x lies in the row lattice of b iff appending it keeps
                    // the HNF unchanged.
                    let mut rows = basis.clone();
                    rows.push(x);
                    let ext = IntMatrix::from_vec(rows.len(), 4, rows.concat()).unwrap();
                    let (h, _) = hnf(&ext);
                    let (hb, _) = hnf(&b);
                    for r in 0..hb.rows() {
                        assert_eq!(h.row(r), hb.row(r));
                    }
                    assert!(h.row(hb.rows()).iter().all(Zero::is_zero));
                }
            }
        }
    }
}

#[test]
fn injectivity_examples() {
    let r = is_injective(&IntMatrix::identity(2));
    assert!(r.injective);
    assert_eq!(r.rank, 2);

    let r = is_injective(&m(&[vec![1], vec![1]]));
    assert!(r.injective);
    assert_eq!(r.rank, 1);

    let r = is_injective(&m(&[vec![1, -1], vec![-1, 1]]));
    assert!(!r.injective);
    assert_eq!(r.witness, Some(v(&[1, 1])));
}

#[test]
fn torsion_reported_without_affecting_verdict() {
    let r = is_injective(&m(&[vec![2, 0], vec![0, 1]]));
    assert!(r.injective);
    assert_eq!(r.torsion, v(&[2]));
}

#[test]
fn stacked_kernel_matches_direct() {
    let a = m(&[vec![1, 1, 0, 2]]);
    let b = m(&[vec![0, 2, 2, 0], vec![1, 0, -1, 3]]);
    let stacked = IntMatrix::vstack(&[&a, &b]).unwrap();
    assert_eq!(kernel_of_stack(&[&a, &b]), kernel(&stacked));
}

#[test]
fn determinant_small() {
    assert_eq!(m(&[vec![1, 2], vec![3, 4]]).determinant().unwrap(), BigInt::from(-2));
    assert_eq!(
        m(&[vec![0, 2, 1], vec![1, 0, 0], vec![3, 1, 1]]).determinant().unwrap(),
        BigInt::from(-1)
    );
}

fn matrix_strategy() -> impl Strategy<Value = IntMatrix> {
    (1usize..=6, 1usize..=6).prop_flat_map(|(r, c)| {
        proptest::collection::vec(-9i64..=9, r * c)
            .prop_map(move |d| IntMatrix::from_vec(r, c, d.into_iter().map(BigInt::from).collect()).unwrap())
    })
}

proptest! {
    #[test]
    fn hnf_postconditions(a in matrix_strategy()) {
        let (h, u) = hnf(&a);
        prop_assert_eq!(u.mul(&a).unwrap(), h.clone());
        prop_assert!(u.is_unimodular());
        prop_assert!(is_row_hnf(&h));
    }

    #[test]
    fn snf_postconditions(a in matrix_strategy()) {
        let (d, u, v) = snf(&a);
        prop_assert_eq!(u.mul(&a).unwrap().mul(&v).unwrap(), d.clone());
        prop_assert!(u.is_unimodular());
        prop_assert!(v.is_unimodular());
        prop_assert!(is_smith(&d));
    }

    #[test]
    fn kernel_is_exact_and_full(a in matrix_strategy()) {
        let ker = kernel(&a);
        for k in &ker {
            prop_assert!(a.mul_vec(k).unwrap().iter().all(Zero::is_zero));
        }
        prop_assert_eq!(ker.len(), a.cols() - rank(&a));
        prop_assert_eq!(is_injective(&a).injective, rank(&a) == a.cols());
    }
}
