use std::collections::BTreeMap;

use num_bigint::BigInt;
use proptest::prelude::*;

use super::*;
use crate::braidlie::{Generator, PnLieElement, PureBraidLie};
use crate::exactla::IntMatrix;
use crate::freelie::{normalize_letters, BracketTree};
use crate::Error;

fn word(n: usize, letters: &[(usize, i8)]) -> BraidWord {
    BraidWord::new(n, letters.to_vec()).unwrap()
}

fn int_rows(rows: &[Vec<i64>]) -> IntMatrix {
    IntMatrix::from_rows(rows)
}

#[test]
fn burau_sigma_squared_in_degree_one() {
    let spec = RepresentationSpec::burau(2, 1).unwrap();
    let x = &spec.degree_one_images().unwrap()[&Generator::new(1, 2).unwrap()];
    assert_eq!(*x, int_rows(&[vec![1, -1], vec![-1, 1]]));
}

#[test]
fn burau_braid_relations() {
    for n in 3..=5 {
        let spec = RepresentationSpec::burau(n, 4).unwrap();
        for i in 1..n - 1 {
            let lhs = spec.rep_image(&word(n, &[(i, 1), (i + 1, 1), (i, 1)])).unwrap();
            let rhs = spec.rep_image(&word(n, &[(i + 1, 1), (i, 1), (i + 1, 1)])).unwrap();
            assert_eq!(lhs, rhs, "n={n} i={i}");
        }
        for i in 1..n {
            for j in i + 2..n {
                let lhs = spec.rep_image(&word(n, &[(i, 1), (j, 1)])).unwrap();
                let rhs = spec.rep_image(&word(n, &[(j, 1), (i, 1)])).unwrap();
                assert_eq!(lhs, rhs);
            }
            let s = burau_sigma(n, i, 4).unwrap();
            let s_inv = burau_sigma_inverse(n, i, 4).unwrap();
            assert!(s.mul(&s_inv).unwrap().is_identity());
            assert_eq!(s.inverse().unwrap(), s_inv);
        }
    }
}

#[test]
fn burau_at_u_zero_is_the_permutation() {
    let n = 4;
    let spec = RepresentationSpec::burau(n, 3).unwrap();
    let w = word(n, &[(1, 1), (3, -1), (2, 1), (1, -1)]);
    let m = spec.rep_image(&w).unwrap().constant_part();
    let order = w.strand_order();
    // Row p carries the strand that ends at position p.
    let mut expected = IntMatrix::zeros(n, n);
    let mut pos = vec![0; n];
    for (p, &s) in order.iter().enumerate() {
        pos[s - 1] = p;
    }
    for s in 0..n {
        expected.set(s, pos[s], BigInt::from(1));
    }
    assert!(m == expected || m == expected.transpose(), "{m:?}");
    assert!(m.is_unimodular());
}

#[test]
fn gassner_respects_braid_relations() {
    for n in 3..=4 {
        let spec = RepresentationSpec::gassner(n, 3).unwrap();
        for i in 1..n - 1 {
            // σ_i σ_{i+1} σ_i (σ_{i+1} σ_i σ_{i+1})⁻¹ is the trivial braid.
            let w = word(n, &[(i, 1), (i + 1, 1), (i, 1), (i + 1, -1), (i, -1), (i + 1, -1)]);
            assert!(spec.rep_image(&w).unwrap().is_identity(), "n={n} i={i}");
            // Conjugating by other letters keeps it trivial.
            let c = word(n, &[(1, 1), (n - 1, -1)]);
            let conj = c.concat(&w).unwrap().concat(&c.inverse()).unwrap();
            assert!(spec.rep_image(&conj).unwrap().is_identity());
        }
        assert!(matches!(spec.rep_image(&word(n, &[(1, 1)])), Err(Error::InvalidBraid(_))));
    }
}

#[test]
fn full_twist_is_central() {
    for spec in [RepresentationSpec::burau(4, 3).unwrap(), RepresentationSpec::gassner(4, 3).unwrap()] {
        let z = spec.rep_image(&center_word(4).unwrap()).unwrap();
        for g in crate::braidlie::generators(4).unwrap() {
            let a = spec.generator_image(g).unwrap();
            assert_eq!(z.mul(&a).unwrap(), a.mul(&z).unwrap(), "{} {g}", spec.family_name());
        }
    }
}

#[test]
fn gassner_specializes_to_burau() {
    let n = 4;
    let g = RepresentationSpec::gassner(n, 3).unwrap();
    let b = RepresentationSpec::burau(n, 3).unwrap();
    let a13 = pure_generator_word(n, 1, 3).unwrap();
    let a24 = pure_generator_word(n, 2, 4).unwrap();
    let a34 = pure_generator_word(n, 3, 4).unwrap();
    let words = [
        a13.clone(),
        a13.commutator(&a24).unwrap(),
        a34.concat(&a13.inverse()).unwrap().concat(&a24).unwrap(),
        center_word(n).unwrap(),
    ];
    for w in &words {
        assert_eq!(g.rep_image(w).unwrap().identify_variables(), b.rep_image(w).unwrap(), "{w}");
    }
}

#[test]
fn center_word_degree_one_is_sum() {
    for n in 3..=5 {
        for spec in [RepresentationSpec::burau(n, 1).unwrap(), RepresentationSpec::gassner(n, 1).unwrap()] {
            let xs = spec.degree_one_series(1).unwrap();
            let sum = xs.values().skip(1).fold(xs.values().next().unwrap().clone(), |a, x| a.add(x).unwrap());
            let z = spec.rep_image(&center_word(n).unwrap()).unwrap().homogeneous_part(1);
            assert_eq!(z, sum);
        }
    }
}

#[test]
fn infinitesimal_relations_hold() {
    for n in 3..=5 {
        let spec = RepresentationSpec::burau(n, 2).unwrap();
        assert_eq!(infinitesimal_relation_failure(n, &spec.degree_one_series(2).unwrap()).unwrap(), None);
    }
    for n in 3..=4 {
        let spec = RepresentationSpec::gassner(n, 2).unwrap();
        assert_eq!(infinitesimal_relation_failure(n, &spec.degree_one_series(2).unwrap()).unwrap(), None);
    }
}

fn all_trees(k: u8, d: usize) -> Vec<BracketTree<u8>> {
    if d == 1 {
        return (0..k).map(BracketTree::leaf).collect();
    }
    let mut out = Vec::new();
    for left in 1..d {
        for a in all_trees(k, left) {
            for b in all_trees(k, d - left) {
                out.push(BracketTree::node(a.clone(), b));
            }
        }
    }
    out
}

#[test]
fn magnus_expansion_of_commutators() {
    for k in 1..=3u8 {
        for d in 1..=4 {
            for tree in all_trees(k, d) {
                let m = magnus_expand(&commutator_word(&tree), d);
                assert!(m.lowest_positive_degree().is_none_or(|l| l >= d), "{tree}");
                let lie = normalize_letters(&tree);
                assert_eq!(m.homogeneous_part(d), tensor_embedding(&lie), "{tree}");
            }
        }
    }
}

#[test]
fn dual_paths_agree() {
    let burau = RepresentationSpec::burau(4, 1).unwrap();
    let lie4 = PureBraidLie::new(4).unwrap();
    for q in 1..=3 {
        let basis = lie4.basis(q).unwrap();
        assert_eq!(induced_graded_map(&burau, &basis).unwrap(), induced_graded_map_group(&burau, &basis).unwrap(), "q={q}");
    }
    let gassner = RepresentationSpec::gassner(3, 1).unwrap();
    let lie3 = PureBraidLie::new(3).unwrap();
    for q in 1..=2 {
        let basis = lie3.basis(q).unwrap();
        assert_eq!(
            induced_graded_map(&gassner, &basis).unwrap(),
            induced_graded_map_group(&gassner, &basis).unwrap(),
            "q={q}"
        );
    }
}

/// Image of a homogeneous element under the induced graded map.
fn image(spec: &RepresentationSpec, lie: &PureBraidLie, x: &PnLieElement) -> Vec<BigInt> {
    let q = x.degree().unwrap();
    let basis = lie.basis(q).unwrap();
    let map = induced_graded_map(spec, &basis).unwrap();
    map.mul_vec(&basis.coordinates(x).unwrap()).unwrap()
}

fn ring_bracket_of_images(spec: &RepresentationSpec, lie: &PureBraidLie, x: &PnLieElement, y: &PnLieElement) -> Vec<BigInt> {
    // Rebuild the matrices from their flattened coordinates.
    let p = x.degree().unwrap();
    let q = y.degree().unwrap();
    let to_matrix = |v: Vec<BigInt>, d: usize| {
        let m = spec.size();
        let monos = monomials_of_degree(spec.vars(), d);
        let mut out = TruncSeriesMatrix::zero(m, spec.vars(), p + q);
        for r in 0..m {
            for c in 0..m {
                let mut poly = TruncPoly::zero();
                for (mi, mono) in monos.iter().enumerate() {
                    poly.add_term(mono.clone(), v[mi * m * m + r * m + c].clone());
                }
                out.set(r, c, poly);
            }
        }
        out
    };
    let a = to_matrix(image(spec, lie, x), p);
    let b = to_matrix(image(spec, lie, y), q);
    a.lie_commutator(&b).unwrap().flatten_degree(p + q)
}

#[test]
fn induced_map_is_a_lie_morphism() {
    // The bracket in the Lie algebra must agree with the matrix commutator
    // for a representation whose graded map is a Lie morphism.
    let n = 4;
    let lie = PureBraidLie::new(n).unwrap();
    let spec = RepresentationSpec::gassner(n, 1).unwrap();
    let b = |i, j| lie.generator(i, j).unwrap();
    let b12_b14 = lie.bracket(&b(1, 2), &b(1, 4)).unwrap();
    assert_eq!(b12_b14.to_string(), "B(1,4)B(2,4)");
    assert_eq!(image(&spec, &lie, &b12_b14), ring_bracket_of_images(&spec, &lie, &b(1, 2), &b(1, 4)));
    let deg1 = lie.basis(1).unwrap();
    let deg2 = lie.basis(2).unwrap();
    for i in 0..deg1.len() {
        for j in 0..deg1.len() {
            let (x, y) = (deg1.element(i), deg1.element(j));
            let xy = lie.bracket(&x, &y).unwrap();
            if xy.is_zero() {
                continue;
            }
            assert_eq!(image(&spec, &lie, &xy), ring_bracket_of_images(&spec, &lie, &x, &y), "[{x}, {y}]");
        }
        for j in (0..deg2.len()).step_by(3) {
            let (x, y) = (deg1.element(i), deg2.element(j));
            let xy = lie.bracket(&x, &y).unwrap();
            if xy.is_zero() {
                continue;
            }
            assert_eq!(image(&spec, &lie, &xy), ring_bracket_of_images(&spec, &lie, &x, &y), "[{x}, {y}]");
        }
    }
}

fn diagonal_fixture(n: usize) -> RepresentationSpec {
    let gens = crate::braidlie::generators(n).unwrap();
    let m = gens.len();
    let images = gens
        .iter()
        .enumerate()
        .map(|(k, &g)| {
            let mut x = TruncSeriesMatrix::identity(m, 1, 2);
            x.set(k, k, TruncPoly::parse("1+u", 1).unwrap());
            (g, x)
        })
        .collect();
    RepresentationSpec::custom(n, 2, images).unwrap()
}

#[test]
fn trivial_fixture_fails_on_delta() {
    let n = 4;
    let images: BTreeMap<_, _> = crate::braidlie::generators(n)
        .unwrap()
        .into_iter()
        .map(|g| (g, TruncSeriesMatrix::identity(2, 1, 2)))
        .collect();
    let spec = RepresentationSpec::custom(n, 2, images).unwrap();
    let report = criterion_test(&spec, 2).unwrap();
    assert_eq!(report.conclusion, Conclusion::Failed { degree: 1, check: CheckKind::DeltaLine });
    let lie = PureBraidLie::new(n).unwrap();
    assert_eq!(report.checks[0].witness.as_ref(), Some(&lie.delta()));
    assert_eq!(report.checks[0].witness_label().unwrap(), "Δ(4)");
    assert!(report.to_text().contains("witness=Δ(4)"));
}

#[test]
fn abelian_fixture_passes_degree_one_only() {
    let report = criterion_test(&diagonal_fixture(4), 3).unwrap();
    assert!(report.checks.iter().filter(|c| c.degree == 1).all(|c| c.injective));
    assert_eq!(report.conclusion, Conclusion::Failed { degree: 2, check: CheckKind::Top });
    let w = report.checks[3].witness.as_ref().unwrap();
    assert_eq!(w.degree(), Some(2));
    assert!(w.components().keys().all(|&m| m == 4));
}

#[test]
fn bad_relations_are_rejected() {
    let n = 3;
    let gens = crate::braidlie::generators(n).unwrap();
    let images = gens
        .iter()
        .map(|&g| {
            let mut x = TruncSeriesMatrix::identity(2, 1, 2);
            let entry = if g == gens[0] { "u" } else { "0" };
            x.set(0, 1, TruncPoly::parse(entry, 1).unwrap());
            if g == gens[1] {
                x.set(1, 0, TruncPoly::parse("u", 1).unwrap());
            }
            (g, x)
        })
        .collect();
    let spec = RepresentationSpec::custom(n, 2, images).unwrap();
    assert!(matches!(criterion_test(&spec, 2), Err(Error::InvalidSpec(_))));
}

#[test]
fn check_order_does_not_matter() {
    let spec = RepresentationSpec::burau(4, 1).unwrap();
    let lie = PureBraidLie::new(4).unwrap();
    let direct = criterion_test_with(&spec, &lie, 3, &crate::central::Direct, None).unwrap();
    let k = criterion_checks(3).len();
    let reversed: Vec<usize> = (0..k).rev().collect();
    let permuted = criterion_test_with(&spec, &lie, 3, &crate::central::Direct, Some(&reversed)).unwrap();
    assert_eq!(direct, permuted);
    assert!(criterion_test_with(&spec, &lie, 3, &crate::central::Direct, Some(&[0, 0, 1, 2, 3])).is_err());
}

#[test]
fn custom_spec_from_toml() {
    let text = r#"
        family = "custom"
        n = 3
        order = 3
        [images]
        "A(1,2)" = [["1+u", 0], [0, 1]]
        "A(1,3)" = [[1, 0], [0, "1+u"]]
        "A(2,3)" = [[1, "u"], [0, 1]]
    "#;
    let spec = RepresentationSpec::from_toml_str(text).unwrap();
    assert_eq!((spec.family_name(), spec.size(), spec.vars(), spec.order()), ("custom", 2, 1, 3));
    let g = Generator::new(2, 3).unwrap();
    assert_eq!(spec.degree_one_images().unwrap()[&g], int_rows(&[vec![0, 1], vec![0, 0]]));
    assert!(matches!(spec.rep_image(&word(3, &[(1, 1)])), Err(Error::InvalidSpec(_))));
    let w = PureWord::new(3, vec![(g, 1), (g, -1)]).unwrap();
    assert!(spec.rep_image_pure(&w).unwrap().is_identity());

    let burau = RepresentationSpec::from_toml_str("family = \"burau\"\nn = 4\n").unwrap();
    assert_eq!((burau.size(), burau.vars(), burau.order()), (4, 1, DEFAULT_ORDER));

    for bad in [
        "family = \"custom\"\nn = 3\n",
        "family = \"other\"\nn = 3\n",
        "family = \"burau\"\nn = 1\n",
        "family = \"burau\"\nn = 3\nextra = 1\n",
        "family = \"custom\"\nn = 2\n[images]\n\"A(1,2)\" = [[\"2\"]]\n",
        "family = \"custom\"\nn = 2\n[images]\n\"A(1,2)\" = [[\"1+v\"]]\n",
        "family = \"custom\"\nn = 3\n[images]\n\"A(1,2)\" = [[\"1+u\"]]\n",
    ] {
        assert!(RepresentationSpec::from_toml_str(bad).is_err(), "{bad}");
    }
}

fn pure_word_strategy(n: usize) -> impl Strategy<Value = PureWord> {
    let gens = crate::braidlie::generators(n).unwrap();
    prop::collection::vec((0..gens.len(), prop::bool::ANY), 1..5).prop_map(move |letters| {
        PureWord::new(n, letters.into_iter().map(|(g, pos)| (gens[g], if pos { 1 } else { -1 })).collect()).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn commutators_raise_the_filtration(a in pure_word_strategy(4), b in pure_word_strategy(4)) {
        let spec = RepresentationSpec::burau(4, 2).unwrap();
        let ma = spec.rep_image_pure(&a).unwrap();
        let mb = spec.rep_image_pure(&b).unwrap();
        prop_assert!(ma.congruent_to_identity_below(1));
        let c = spec.rep_image_pure(&a.commutator(&b).unwrap()).unwrap();
        prop_assert!(c.congruent_to_identity_below(2));
        let expected = ma.homogeneous_part(1).lie_commutator(&mb.homogeneous_part(1)).unwrap().homogeneous_part(2);
        prop_assert_eq!(c.homogeneous_part(2), expected);
    }

    #[test]
    fn gassner_pure_words_specialize(a in pure_word_strategy(3)) {
        let g = RepresentationSpec::gassner(3, 2).unwrap();
        let b = RepresentationSpec::burau(3, 2).unwrap();
        prop_assert_eq!(g.rep_image_pure(&a).unwrap().identify_variables(), b.rep_image_pure(&a).unwrap());
    }
}

#[test]
fn gassner_report_notes_specialization() {
    let report = criterion_test(&RepresentationSpec::gassner(3, 1).unwrap(), 2).unwrap();
    assert_eq!(report.specializes_to_burau, Some(true));
    assert!(report.met());
    assert!(report.to_text().contains("specialization=consistent"));
    let burau = criterion_test(&RepresentationSpec::burau(3, 1).unwrap(), 2).unwrap();
    assert_eq!(burau.specializes_to_burau, None);
}
