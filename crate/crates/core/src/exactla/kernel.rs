use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::normal_form::hnf_in_place;
use super::{hnf, smith_diagonal, IntMatrix};

/// ℤ-basis of `{v : A·v = 0}`, returned in row Hermite normal form.
///
/// The kernel of an integer matrix is a saturated sublattice, so every
/// returned vector is primitive. An empty result means `A` is injective.
pub fn kernel(a: &IntMatrix) -> Vec<Vec<BigInt>> {
    let basis = kernel_basis_rows(a);
    canonical_rows(basis)
}

/// Kernel of the vertical stack of `blocks`, computed block by block: the
/// kernel of each block is restricted to the kernel found so far.
pub fn kernel_of_stack(blocks: &[&IntMatrix]) -> Vec<Vec<BigInt>> {
    let Some(first) = blocks.first() else {
        return Vec::new();
    };
    let n = first.cols();
    // Columns of `k` span the current kernel.
    let mut k = IntMatrix::identity(n);
    for block in blocks {
        assert_eq!(block.cols(), n, "blocks must share a column count");
        if k.cols() == 0 {
            break;
        }
        let restricted = block.mul(&k).expect("dimensions checked");
        let sub = kernel_basis_rows(&restricted);
        let sub_cols = IntMatrix::from_columns(k.cols(), &sub);
        k = k.mul(&sub_cols).expect("dimensions checked");
    }
    let rows: Vec<Vec<BigInt>> = (0..k.cols()).map(|c| k.column(c)).collect();
    canonical_rows(rows)
}

fn kernel_basis_rows(a: &IntMatrix) -> Vec<Vec<BigInt>> {
    let n = a.cols();
    // Zero constraints do not affect the kernel.
    let reduced = a.without_zero_rows();
    let mut h = reduced.transpose();
    let mut u = IntMatrix::identity(n);
    let pivots = hnf_in_place(&mut h, &mut u);
    (pivots.len()..n).map(|r| u.row(r).to_vec()).collect()
}

fn canonical_rows(rows: Vec<Vec<BigInt>>) -> Vec<Vec<BigInt>> {
    if rows.is_empty() {
        return rows;
    }
    let n = rows[0].len();
    let m = IntMatrix::from_vec(rows.len(), n, rows.into_iter().flatten().collect())
        .expect("rows share a length");
    let (h, _) = hnf(&m);
    (0..h.rows())
        .map(|r| h.row(r).to_vec())
        .filter(|r| r.iter().any(|x| !x.is_zero()))
        .collect()
}

/// Outcome of an injectivity test on a map of free abelian groups.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Injectivity {
    pub injective: bool,
    /// Rank from the Smith normal form.
    pub rank: usize,
    /// A nonzero kernel vector when not injective.
    pub witness: Option<Vec<BigInt>>,
    /// Smith invariants greater than one (cokernel torsion); informational.
    pub torsion: Vec<BigInt>,
}

pub fn is_injective(a: &IntMatrix) -> Injectivity {
    let ker = kernel(a);
    let diag = smith_diagonal(a);
    let rank = diag.iter().filter(|d| !d.is_zero()).count();
    let torsion = diag.into_iter().filter(|d| !d.is_zero() && !d.is_one()).collect();
    Injectivity {
        injective: ker.is_empty(),
        rank,
        witness: ker.into_iter().next(),
        torsion,
    }
}

/// Rank via the Smith normal form.
pub fn rank(a: &IntMatrix) -> usize {
    smith_diagonal(a).iter().filter(|d| !d.is_zero()).count()
}
