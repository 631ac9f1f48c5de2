use super::{GradedBasis, PnLieElement, PureBraidLie};
use crate::Result;

/// Outcome of [`PureBraidLie::verify_relations`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationReport {
    pub n: usize,
    pub max_degree: usize,
    /// Number of identities evaluated, per family.
    pub braid_relations: usize,
    pub antisymmetry: usize,
    pub jacobi: usize,
    pub ideal_containment: usize,
    pub failure: Option<RelationFailure>,
}

impl RelationReport {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationFailure {
    pub check: String,
    /// The nonzero (or misplaced) value that should have vanished.
    pub value: String,
}

impl PureBraidLie {
    /// Checks every instance of the infinitesimal braid relations, then
    /// antisymmetry, Jacobi and the ideal property of the top components on
    /// all basis pairs and triples of total degree `<= max_degree`.
    ///
    /// Stops at the first failure.
    pub fn verify_relations(&self, max_degree: usize) -> Result<RelationReport> {
        let n = self.n();
        let mut report = RelationReport {
            n,
            max_degree,
            braid_relations: 0,
            antisymmetry: 0,
            jacobi: 0,
            ideal_containment: 0,
            failure: None,
        };
        let fail = |report: &mut RelationReport, check: String, value: &PnLieElement| {
            report.failure = Some(RelationFailure { check, value: value.to_string() });
        };

        let gens = self.generators();
        for g in &gens {
            for h in &gens {
                if g.is_disjoint(h) {
                    report.braid_relations += 1;
                    let v = self.bracket(&self.unit_generator(*g), &self.unit_generator(*h))?;
                    if !v.is_zero() {
                        fail(&mut report, format!("[{g}, {h}] = 0"), &v);
                        return Ok(report);
                    }
                }
            }
        }
        // [B(i,j), B(i,t) + B(j,t)] = 0 for distinct i, j, t in any order;
        // the relabelings cover every printed relation family.
        for i in 1..=n {
            for j in 1..=n {
                for t in 1..=n {
                    if i == j || j == t || i == t {
                        continue;
                    }
                    report.braid_relations += 1;
                    let x = self.generator(i, j)?;
                    let y = self.generator(i, t)? + self.generator(j, t)?;
                    let v = self.bracket(&x, &y)?;
                    if !v.is_zero() {
                        fail(&mut report, format!("[{x}, {y}] = 0"), &v);
                        return Ok(report);
                    }
                }
            }
        }

        let bases: Vec<GradedBasis> = (1..max_degree.min(self.degree_cap() + 1))
            .map(|q| self.basis(q))
            .collect::<Result<_>>()?;
        let elements: Vec<(usize, PnLieElement)> = bases
            .iter()
            .flat_map(|b| (0..b.len()).map(move |i| (b.degree(), b.element(i))))
            .collect();

        for (ix, (dx, x)) in elements.iter().enumerate() {
            for (dy, y) in &elements[ix..] {
                if dx + dy > max_degree {
                    continue;
                }
                report.antisymmetry += 1;
                let xy = self.bracket(x, y)?;
                let v = xy.clone() + self.bracket(y, x)?;
                if !v.is_zero() {
                    fail(&mut report, format!("[{x}, {y}] + [{y}, {x}] = 0"), &v);
                    return Ok(report);
                }
                let (a, b) = (component_of(x), component_of(y));
                if a != b {
                    report.ideal_containment += 1;
                    let hi = a.max(b);
                    if xy.components().keys().any(|&m| m != hi) {
                        fail(&mut report, format!("[{x}, {y}] lies in component {hi}"), &xy);
                        return Ok(report);
                    }
                }
            }
        }

        for (ix, (dx, x)) in elements.iter().enumerate() {
            for (iy, (dy, y)) in elements.iter().enumerate().skip(ix) {
                if dx + dy >= max_degree {
                    continue;
                }
                let xy = self.bracket(x, y)?;
                for (dz, z) in &elements[iy..] {
                    if dx + dy + dz > max_degree {
                        continue;
                    }
                    report.jacobi += 1;
                    let v = self.bracket(&xy, z)?
                        + self.bracket(&self.bracket(y, z)?, x)?
                        + self.bracket(&self.bracket(z, x)?, y)?;
                    if !v.is_zero() {
                        fail(&mut report, format!("Jacobi({x}, {y}, {z})"), &v);
                        return Ok(report);
                    }
                }
            }
        }
        Ok(report)
    }
}

fn component_of(x: &PnLieElement) -> usize {
    *x.components().keys().next().expect("basis elements are nonzero")
}
