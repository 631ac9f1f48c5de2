//! Degreewise injectivity tests for the graded map induced by a
//! representation.
//!
//! In degree one the tests cover the line spanned by `Δ(n)`, the top
//! generators `B(s,n)`, and both together; in degree `q ≥ 2` they cover the
//! top free factor `L_q[V_n]`.

use std::collections::BTreeMap;
use std::fmt::{self, Write as _};

use num_bigint::BigInt;

use super::graded::{gassner_specializes, induced_graded_map, infinitesimal_relation_failure};
use super::rep::RepresentationSpec;
use crate::braidlie::{GradedBasis, PnLieElement, PureBraidLie};
use crate::central::{Direct, MatrixSource};
use crate::exactla::{is_injective, IntMatrix};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CheckKind {
    /// The line spanned by `Δ(n)` in degree one.
    DeltaLine,
    /// The top free factor: `B(1,n), …, B(n-1,n)` in degree one, `L_q[V_n]`
    /// in degree `q`.
    Top,
    /// `Δ(n)` together with the top generators in degree one.
    DeltaAndTop,
}

impl CheckKind {
    pub fn name(self) -> &'static str {
        match self {
            CheckKind::DeltaLine => "delta-line",
            CheckKind::Top => "top",
            CheckKind::DeltaAndTop => "delta-and-top",
        }
    }
}

impl fmt::Display for CheckKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// The checks up to `max_degree`, in canonical order.
pub fn criterion_checks(max_degree: usize) -> Vec<(usize, CheckKind)> {
    let mut out = Vec::new();
    if max_degree >= 1 {
        out.extend([(1, CheckKind::DeltaLine), (1, CheckKind::Top), (1, CheckKind::DeltaAndTop)]);
    }
    out.extend((2..=max_degree).map(|q| (q, CheckKind::Top)));
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckOutcome {
    pub degree: usize,
    pub kind: CheckKind,
    /// Number of source elements tested.
    pub columns: usize,
    pub rank: usize,
    pub injective: bool,
    /// A nonzero element mapped to zero, when not injective.
    pub witness: Option<PnLieElement>,
}

impl CheckOutcome {
    /// `Δ(n)` when the witness is the central element itself, otherwise
    /// its canonical text.
    pub fn witness_label(&self) -> Option<String> {
        let w = self.witness.as_ref()?;
        let delta = PureBraidLie::new(w.n()).ok()?.delta();
        Some(if *w == delta || *w == -delta { format!("Δ({})", w.n()) } else { w.to_string() })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Conclusion {
    /// Every check passed through this degree.
    Met { up_to: usize },
    /// The first failing check in canonical order. This says the
    /// criterion is not satisfied, not that the representation is
    /// unfaithful.
    Failed { degree: usize, check: CheckKind },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CriterionReport {
    pub n: usize,
    pub family: String,
    pub size: usize,
    pub vars: usize,
    pub max_degree: usize,
    /// For Gassner specs: whether identifying the variables reproduces the
    /// Burau images, degree-one images and graded maps.
    pub specializes_to_burau: Option<bool>,
    pub checks: Vec<CheckOutcome>,
    pub conclusion: Conclusion,
}

impl CriterionReport {
    pub fn met(&self) -> bool {
        matches!(self.conclusion, Conclusion::Met { .. })
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "representation={} n={} size={} variables={} max_degree={}",
            self.family, self.n, self.size, self.vars, self.max_degree
        );
        for c in &self.checks {
            let _ = write!(
                out,
                "q={} check={} columns={} rank={} injective={}",
                c.degree, c.kind, c.columns, c.rank, c.injective
            );
            if let Some(label) = c.witness_label() {
                let _ = write!(out, " witness={label}");
            }
            out.push('\n');
        }
        if let Some(ok) = self.specializes_to_burau {
            let _ = writeln!(out, "gassner-to-burau specialization={}", if ok { "consistent" } else { "MISMATCH" });
        }
        let _ = match &self.conclusion {
            Conclusion::Met { up_to } => {
                writeln!(out, "conclusion=criterion-met up_to={up_to} (degrees above {up_to} not examined: inconclusive)")
            }
            Conclusion::Failed { degree, check } => {
                writeln!(out, "conclusion=criterion-not-satisfied degree={degree} check={check}")
            }
        };
        out
    }
}

pub fn criterion_test(spec: &RepresentationSpec, max_degree: usize) -> Result<CriterionReport> {
    let lie = PureBraidLie::new(spec.n())?.with_degree_cap(max_degree.max(crate::DEFAULT_DEGREE_CAP));
    criterion_test_with(spec, &lie, max_degree, &Direct, None)
}

/// Runs the checks, optionally in the given permutation of
/// [`criterion_checks`] indices. The report always lists them in
/// canonical order.
pub fn criterion_test_with(
    spec: &RepresentationSpec,
    lie: &PureBraidLie,
    max_degree: usize,
    src: &dyn MatrixSource,
    order: Option<&[usize]>,
) -> Result<CriterionReport> {
    if lie.n() != spec.n() {
        return Err(Error::MismatchedStrands(spec.n(), lie.n()));
    }
    if spec.n() < 3 {
        return Err(Error::InvalidStrandCount { n: spec.n(), reason: "the criterion needs n > 2" });
    }
    if max_degree == 0 {
        return Err(Error::ZeroDegree);
    }
    lie.check_degree(max_degree)?;
    let checks = criterion_checks(max_degree);
    let order: Vec<usize> = match order {
        Some(o) => {
            let mut sorted = o.to_vec();
            sorted.sort_unstable();
            if sorted != (0..checks.len()).collect::<Vec<_>>() {
                return Err(Error::NotBijective(checks.len()));
            }
            o.to_vec()
        }
        None => (0..checks.len()).collect(),
    };
    let mut report = CriterionReport {
        n: spec.n(),
        family: spec.family_name().to_string(),
        size: spec.size(),
        vars: spec.vars(),
        max_degree,
        specializes_to_burau: None,
        checks: Vec::new(),
        conclusion: Conclusion::Met { up_to: max_degree },
    };
    if let Some(reason) = infinitesimal_relation_failure(spec.n(), &spec.degree_one_series(2)?)? {
        return Err(Error::InvalidSpec(format!(
            "degree-one images violate the infinitesimal braid relations ({reason}); no induced graded map"
        )));
    }
    if spec.family_name() == "gassner" {
        report.specializes_to_burau = Some(gassner_specializes(spec.n(), max_degree, lie, src)?);
    }

    let mut maps: BTreeMap<usize, (GradedBasis, IntMatrix)> = BTreeMap::new();
    let mut outcomes: BTreeMap<usize, CheckOutcome> = BTreeMap::new();
    for idx in order {
        let (q, kind) = checks[idx];
        if !maps.contains_key(&q) {
            let basis = src.basis(lie, q)?;
            let map = induced_graded_map(spec, &basis)?;
            maps.insert(q, (basis, map));
        }
        let (basis, map) = &maps[&q];
        outcomes.insert(idx, run_check(lie, basis, map, q, kind));
    }
    report.checks = outcomes.into_values().collect();
    if let Some(c) = report.checks.iter().find(|c| !c.injective) {
        report.conclusion = Conclusion::Failed { degree: c.degree, check: c.kind };
    }
    Ok(report)
}

fn run_check(lie: &PureBraidLie, basis: &GradedBasis, map: &IntMatrix, q: usize, kind: CheckKind) -> CheckOutcome {
    let n = lie.n();
    let top = basis.component_indices(n);
    // Source elements as coordinate vectors over `basis`, plus the
    // elements themselves for witnesses.
    let mut sources: Vec<(Vec<BigInt>, PnLieElement)> = Vec::new();
    let unit = |i: usize| {
        let mut v = vec![BigInt::from(0); basis.len()];
        v[i] = BigInt::from(1);
        v
    };
    if matches!(kind, CheckKind::DeltaLine | CheckKind::DeltaAndTop) {
        sources.push((vec![BigInt::from(1); basis.len()], lie.delta()));
    }
    if matches!(kind, CheckKind::Top | CheckKind::DeltaAndTop) {
        sources.extend(top.iter().map(|&i| (unit(i), basis.element(i))));
    }
    let columns: Vec<Vec<BigInt>> = sources.iter().map(|(v, _)| map.mul_vec(v).expect("basis-sized vector")).collect();
    let restricted = IntMatrix::from_columns(map.rows(), &columns);
    let inj = is_injective(&restricted);
    let witness = inj.witness.map(|v| {
        sources
            .iter()
            .zip(&v)
            .fold(PnLieElement::zero(n), |acc, ((_, x), c)| acc + x.scaled(c))
    });
    CheckOutcome { degree: q, kind, columns: sources.len(), rank: inj.rank, injective: inj.injective, witness }
}
