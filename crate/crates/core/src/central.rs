//! Degreewise centralizers and adjoint kernels in `E_0^*(P_n)`.
//!
//! Centralizing the free factor `L[V_n]` only needs the constraints coming
//! from its generators `B(s,n)`, since `ad x` is a derivation. Kernels of
//! integer matrices are saturated, so the reported lattices need no extra
//! saturation pass.

use std::fmt::Write as _;

use num_bigint::BigInt;

use crate::braidlie::{Generator, GradedBasis, PnLieElement, PureBraidLie};
use crate::exactla::{kernel, kernel_of_stack, IntMatrix};
use crate::freelie::{lyndon_words, substitute, FreeLieElement, LyndonWord};
use crate::{Error, Result};

/// Where graded bases and generator bracket matrices come from.
///
/// [`Direct`] computes them; a persistent cache can implement the same
/// contract.
pub trait MatrixSource {
    fn basis(&self, lie: &PureBraidLie, q: usize) -> Result<GradedBasis>;

    /// Matrix of `x ↦ [x, g]` from degree `q` to degree `q + 1`.
    fn bracket_matrix(&self, lie: &PureBraidLie, q: usize, g: Generator) -> Result<IntMatrix>;
}

#[derive(Clone, Copy, Debug, Default)]
pub struct Direct;

impl MatrixSource for Direct {
    fn basis(&self, lie: &PureBraidLie, q: usize) -> Result<GradedBasis> {
        lie.basis(q)
    }

    fn bracket_matrix(&self, lie: &PureBraidLie, q: usize, g: Generator) -> Result<IntMatrix> {
        let source = lie.basis(q)?;
        let target = lie.basis(q + 1)?;
        lie.ad_matrix_between(&source, &target, &PnLieElement::generator(lie.n(), g))
    }
}

fn require_theorem_range(lie: &PureBraidLie, q: usize) -> Result<()> {
    if lie.n() < 3 {
        return Err(Error::InvalidStrandCount { n: lie.n(), reason: "the centralizer theorem needs n > 2" });
    }
    lie.check_degree(q)?;
    lie.check_degree(q + 1)
}

fn solve(lie: &PureBraidLie, q: usize, gens: &[Generator], src: &dyn MatrixSource) -> Result<Vec<PnLieElement>> {
    require_theorem_range(lie, q)?;
    let basis = src.basis(lie, q)?;
    let blocks: Vec<IntMatrix> = gens.iter().map(|&g| src.bracket_matrix(lie, q, g)).collect::<Result<_>>()?;
    let refs: Vec<&IntMatrix> = blocks.iter().collect();
    Ok(kernel_of_stack(&refs).iter().map(|v| basis.combination(v)).collect())
}

/// Generators of the top free factor, `B(1,n), …, B(n-1,n)`.
pub fn top_generators(n: usize) -> Vec<Generator> {
    (1..n).map(|s| Generator::new(s, n).expect("s < n")).collect()
}

/// Basis of the degree-`q` elements commuting with every `B(s,n)`.
pub fn centralizer_of_top(lie: &PureBraidLie, q: usize) -> Result<Vec<PnLieElement>> {
    centralizer_of_top_with(lie, q, &Direct)
}

pub fn centralizer_of_top_with(lie: &PureBraidLie, q: usize, src: &dyn MatrixSource) -> Result<Vec<PnLieElement>> {
    solve(lie, q, &top_generators(lie.n()), src)
}

/// Basis of the degree-`q` elements commuting with every generator.
pub fn adjoint_kernel(lie: &PureBraidLie, q: usize) -> Result<Vec<PnLieElement>> {
    adjoint_kernel_with(lie, q, &Direct)
}

pub fn adjoint_kernel_with(lie: &PureBraidLie, q: usize, src: &dyn MatrixSource) -> Result<Vec<PnLieElement>> {
    solve(lie, q, &lie.generators(), src)
}

/// Basis of the degree-`q` solutions of `[x, z] = 0` for a degree-one `z`.
pub fn centralizer_of_element(lie: &PureBraidLie, z: &PnLieElement, q: usize) -> Result<Vec<PnLieElement>> {
    if z.is_zero() {
        return Err(Error::ZeroElement);
    }
    if z.degree() != Some(1) {
        return Err(Error::NotDegreeOne);
    }
    let basis = lie.basis(q)?;
    let a = lie.ad_matrix(q, z)?;
    Ok(kernel(&a).iter().map(|v| basis.combination(v)).collect())
}

/// Matrix, in the Lyndon basis of degree `q`, of the substitution
/// `B(1,n) ↦ B(1,n) + … + B(n-1,n)` on `L[V_n]` (other generators fixed).
pub fn top_change_of_basis(n: usize, q: usize) -> IntMatrix {
    let k = n - 1;
    let words = lyndon_words(k, q);
    let sum: FreeLieElement = (0..k as u8).fold(FreeLieElement::zero(), |acc, l| {
        acc + FreeLieElement::basis(LyndonWord::letter(l))
    });
    let image = |l: u8| if l == 0 { sum.clone() } else { FreeLieElement::basis(LyndonWord::letter(l)) };
    let columns: Vec<Vec<BigInt>> = words
        .iter()
        .map(|w| {
            let x = substitute(&FreeLieElement::basis(w.clone()), &image);
            words.iter().map(|u| x.coeff(u)).collect()
        })
        .collect();
    IntMatrix::from_columns(words.len(), &columns)
}

/// Per-degree record of a theorem check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeRecord {
    pub q: usize,
    pub rank: usize,
    pub basis: Vec<PnLieElement>,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CentralizerReport {
    pub n: usize,
    pub degrees: Vec<DegreeRecord>,
}

impl CentralizerReport {
    pub fn passed(&self) -> bool {
        self.degrees.iter().all(|d| d.pass)
    }

    /// One line per degree: `n q rank basis verdict`.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        writeln!(out, "centralizer of L[V_{}] in E_0(P_{})", self.n, self.n).unwrap();
        for d in &self.degrees {
            let basis: Vec<String> = d.basis.iter().map(ToString::to_string).collect();
            writeln!(
                out,
                "n={} q={} rank={} basis=[{}] verdict={}",
                self.n,
                d.q,
                d.rank,
                basis.join("; "),
                if d.pass { "pass" } else { "fail" }
            )
            .unwrap();
        }
        writeln!(out, "overall={}", if self.passed() { "pass" } else { "fail" }).unwrap();
        out
    }
}

/// Expected answer: `±Δ(n)` in degree one, nothing above.
pub fn matches_prediction(lie: &PureBraidLie, q: usize, basis: &[PnLieElement]) -> bool {
    if q == 1 {
        let delta = lie.delta();
        basis.len() == 1 && (basis[0] == delta || basis[0] == -delta)
    } else {
        basis.is_empty()
    }
}

/// Runs [`centralizer_of_top`] for `q = 1..=max_q` and compares each degree
/// with the prediction.
pub fn verify_theorem(lie: &PureBraidLie, max_q: usize) -> Result<CentralizerReport> {
    verify_theorem_with(lie, max_q, &Direct)
}

pub fn verify_theorem_with(lie: &PureBraidLie, max_q: usize, src: &dyn MatrixSource) -> Result<CentralizerReport> {
    if max_q == 0 {
        return Err(Error::ZeroDegree);
    }
    require_theorem_range(lie, max_q)?;
    let degrees = (1..=max_q)
        .map(|q| {
            let basis = centralizer_of_top_with(lie, q, src)?;
            Ok(DegreeRecord { q, rank: basis.len(), pass: matches_prediction(lie, q, &basis), basis })
        })
        .collect::<Result<_>>()?;
    Ok(CentralizerReport { n: lie.n(), degrees })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::{rank, smith_diagonal};
    use num_traits::Zero;

    fn lie(n: usize) -> PureBraidLie {
        PureBraidLie::new(n).unwrap()
    }

    #[test]
    fn centralizer_examples() {
        let l3 = lie(3);
        assert_eq!(centralizer_of_top(&l3, 1).unwrap(), vec![l3.delta()]);
        assert!(centralizer_of_top(&lie(4), 2).unwrap().is_empty());
        let l5 = lie(5);
        assert_eq!(centralizer_of_top(&l5, 1).unwrap(), vec![l5.delta()]);
    }

    #[test]
    fn adjoint_examples() {
        let l4 = lie(4);
        assert_eq!(adjoint_kernel(&l4, 1).unwrap(), vec![l4.delta()]);
        assert!(adjoint_kernel(&l4, 3).unwrap().is_empty());
        let l3 = lie(3);
        assert_eq!(adjoint_kernel(&l3, 1).unwrap(), centralizer_of_top(&l3, 1).unwrap());
    }

    #[test]
    fn theorem_small() {
        assert!(verify_theorem(&lie(3), 5).unwrap().passed());
        assert!(verify_theorem(&lie(4), 5).unwrap().passed());
        assert!(matches!(verify_theorem(&lie(2), 3), Err(Error::InvalidStrandCount { .. })));
        assert!(matches!(centralizer_of_top(&lie(2), 1), Err(Error::InvalidStrandCount { .. })));
    }

    #[test]
    fn degree_cap_respected() {
        let l = lie(3).with_degree_cap(4);
        assert!(centralizer_of_top(&l, 3).is_ok());
        assert!(matches!(centralizer_of_top(&l, 4), Err(Error::DegreeAboveCap { degree: 5, cap: 4 })));
    }

    #[test]
    fn centralizer_of_bn_meets_top_trivially() {
        let l4 = lie(4);
        let bn = l4.bn_element().unwrap();
        let sols = centralizer_of_element(&l4, &bn, 2).unwrap();
        // The solutions may have lower components, but none of them has a
        // component-4 part that is itself a solution: intersecting with
        // component 4 gives zero.
        let b = l4.basis(2).unwrap();
        let top = b.component_indices(4);
        let coords: Vec<Vec<BigInt>> = sols.iter().map(|s| b.coordinates(s).unwrap()).collect();
        // Solutions supported only on the top component:
        let lower: Vec<usize> = (0..b.len()).filter(|i| !top.contains(i)).collect();
        let constraint = IntMatrix::from_columns(lower.len(), &coords.iter().map(|c| lower.iter().map(|&i| c[i].clone()).collect()).collect::<Vec<_>>());
        let combos = kernel(&constraint);
        for combo in combos {
            let mut v = vec![BigInt::zero(); b.len()];
            for (s, c) in coords.iter().zip(&combo) {
                for i in 0..b.len() {
                    v[i] += &s[i] * c;
                }
            }
            assert!(v.iter().all(Zero::is_zero));
        }
    }

    #[test]
    fn centralizer_of_delta_is_everything_in_degree_one() {
        let l3 = lie(3);
        let sols = centralizer_of_element(&l3, &l3.delta(), 1).unwrap();
        assert_eq!(sols.len(), 3);
        for g in l3.generators() {
            assert!(l3.bracket(&PnLieElement::generator(3, g), &l3.delta()).unwrap().is_zero());
        }
    }

    #[test]
    fn centralizer_of_single_generator() {
        let l3 = lie(3);
        let b13 = l3.generator(1, 3).unwrap();
        let sols = centralizer_of_element(&l3, &b13, 1).unwrap();
        let b = l3.basis(1).unwrap();
        let span: Vec<Vec<BigInt>> = sols.iter().map(|s| b.coordinates(s).unwrap()).collect();
        let contains = |x: &PnLieElement| {
            let mut cols = span.clone();
            cols.push(b.coordinates(x).unwrap());
            rank(&IntMatrix::from_columns(b.len(), &cols)) == span.len()
        };
        assert!(contains(&b13));
        assert!(contains(&l3.delta()));
        assert!(!contains(&l3.generator(1, 2).unwrap()));
    }

    #[test]
    fn centralizer_rejects_bad_element() {
        let l3 = lie(3);
        assert_eq!(centralizer_of_element(&l3, &PnLieElement::zero(3), 1), Err(Error::ZeroElement));
        let two = l3.bracket(&l3.generator(1, 3).unwrap(), &l3.generator(2, 3).unwrap()).unwrap();
        assert_eq!(centralizer_of_element(&l3, &two, 1), Err(Error::NotDegreeOne));
    }

    #[test]
    fn change_of_basis_is_unimodular() {
        for n in 3..=5 {
            for q in 1..=4 {
                let t = top_change_of_basis(n, q);
                assert!(t.is_unimodular(), "n={n} q={q}");
            }
        }
    }

    #[test]
    fn solution_lattices_are_saturated() {
        for n in 3..=4 {
            let l = lie(n);
            for q in 1..=3 {
                let blocks: Vec<IntMatrix> =
                    top_generators(n).into_iter().map(|g| Direct.bracket_matrix(&l, q, g).unwrap()).collect();
                let refs: Vec<&IntMatrix> = blocks.iter().collect();
                let stacked = IntMatrix::vstack(&refs).unwrap();
                let nonzero = smith_diagonal(&stacked).iter().filter(|d| !d.is_zero()).count();
                assert_eq!(centralizer_of_top(&l, q).unwrap().len(), stacked.cols() - nonzero);
            }
        }
    }

    #[test]
    fn report_text_lists_every_degree() {
        let r = verify_theorem(&lie(3), 2).unwrap();
        let text = r.to_text();
        assert!(text.contains("n=3 q=1 rank=1 basis=[B(1,2)+B(1,3)+B(2,3)] verdict=pass"));
        assert!(text.contains("n=3 q=2 rank=0 basis=[] verdict=pass"));
    }
}
