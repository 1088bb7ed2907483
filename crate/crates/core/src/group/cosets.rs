//! The factorization `g·g_i = j(g, g_i)·h(g, g_i)` with `j(g, g_i)` in the
//! transversal and `h(g, g_i)` in the subgroup.

use super::{FiniteGroup, LeftTransversal, Subgroup};
use crate::error::{Error, Result};

/// The maps `j: G×T → T` and `h: G×T → H` for a fixed transversal.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CosetFactorization {
    transversal: LeftTransversal,
    // Flat tables indexed by g * |T| + i.
    j: Vec<usize>,
    h: Vec<usize>,
}

/// One entry of the factorization table, in parent element indices except for
/// `rep_index`/`j_index`, which index the transversal.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct FactorRow {
    pub g: usize,
    pub rep_index: usize,
    pub j_index: usize,
    pub h: usize,
}

/// Outcome of the exhaustive cocycle check.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct CocycleReport {
    pub triples_checked: usize,
    pub j_failures: usize,
    pub h_failures: usize,
}

impl CocycleReport {
    pub fn holds(&self) -> bool {
        self.j_failures == 0 && self.h_failures == 0
    }
}

/// Computes `j` and `h` and checks every defining identity before returning.
pub fn coset_factorize(transversal: &LeftTransversal) -> Result<CosetFactorization> {
    let g = transversal.group();
    let t = transversal.len();
    let mut j = Vec::with_capacity(g.order() * t);
    let mut h = Vec::with_capacity(g.order() * t);
    for x in g.elements() {
        for &rep in transversal.reps() {
            let prod = g.mul(x, rep);
            let k = transversal.coset_index(prod);
            j.push(k);
            h.push(g.mul(g.inv(transversal.reps()[k]), prod));
        }
    }
    let cf = CosetFactorization {
        transversal: transversal.clone(),
        j,
        h,
    };
    cf.check_invariants()?;
    Ok(cf)
}

impl CosetFactorization {
    pub fn transversal(&self) -> &LeftTransversal {
        &self.transversal
    }

    pub fn group(&self) -> &FiniteGroup {
        self.transversal.group()
    }

    pub fn subgroup(&self) -> &Subgroup {
        self.transversal.subgroup()
    }

    /// Transversal index of `j(g, g_i)`.
    pub fn j(&self, g: usize, rep_index: usize) -> usize {
        self.j[g * self.transversal.len() + rep_index]
    }

    /// `j(g, g_i)` as a group element.
    pub fn j_element(&self, g: usize, rep_index: usize) -> usize {
        self.transversal.reps()[self.j(g, rep_index)]
    }

    pub fn h(&self, g: usize, rep_index: usize) -> usize {
        self.h[g * self.transversal.len() + rep_index]
    }

    /// All `|G|·|T|` rows, ordered by `g` then by transversal index.
    pub fn rows(&self) -> Vec<FactorRow> {
        let t = self.transversal.len();
        self.group()
            .elements()
            .flat_map(|g| {
                (0..t).map(move |i| FactorRow {
                    g,
                    rep_index: i,
                    j_index: self.j(g, i),
                    h: self.h(g, i),
                })
            })
            .collect()
    }

    /// Checks `j(gt, g_i) = j(g, j(t, g_i))` and
    /// `h(gt, g_i) = h(g, j(t, g_i))·h(t, g_i)` over every triple.
    pub fn check_cocycles(&self) -> CocycleReport {
        let grp = self.group();
        let mut report = CocycleReport::default();
        for g in grp.elements() {
            for t in grp.elements() {
                let gt = grp.mul(g, t);
                for i in 0..self.transversal.len() {
                    report.triples_checked += 1;
                    let jt = self.j(t, i);
                    if self.j(gt, i) != self.j(g, jt) {
                        report.j_failures += 1;
                    }
                    if self.h(gt, i) != grp.mul(self.h(g, jt), self.h(t, i)) {
                        report.h_failures += 1;
                    }
                }
            }
        }
        report
    }

    fn check_invariants(&self) -> Result<()> {
        let grp = self.group();
        let reps = self.transversal.reps();
        let bad = |msg: String| Err(Error::InternalInconsistency(msg));
        for g in grp.elements() {
            let mut hit = vec![false; reps.len()];
            for (i, &rep) in reps.iter().enumerate() {
                let (jx, hx) = (self.j_element(g, i), self.h(g, i));
                if grp.mul(g, rep) != grp.mul(jx, hx) {
                    return bad(format!("g·g_i ≠ j·h at ({}, {})", grp.name(g), grp.name(rep)));
                }
                if !self.subgroup().contains(hx) {
                    return bad(format!("h({}, {}) ∉ H", grp.name(g), grp.name(rep)));
                }
                hit[self.j(g, i)] = true;
            }
            if hit.contains(&false) {
                return bad(format!("j({}, ·) is not a permutation of T", grp.name(g)));
            }
        }
        let e = grp.identity();
        if (0..reps.len()).any(|i| self.j(e, i) != i || self.h(e, i) != e) {
            return bad("j(e, g_i) = g_i or h(e, g_i) = e fails".into());
        }
        let report = self.check_cocycles();
        if !report.holds() {
            return bad(format!("cocycle identities fail: {report:?}"));
        }
        Ok(())
    }
}

/// A row of a claimed j/h table, with elements given by display label.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ClaimedRow {
    pub g: String,
    pub rep: String,
    pub j: String,
    pub h: String,
}

impl ClaimedRow {
    pub fn new(g: &str, rep: &str, j: &str, h: &str) -> Self {
        ClaimedRow {
            g: g.into(),
            rep: rep.into(),
            j: j.into(),
            h: h.into(),
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum RowStatus {
    Match,
    Mismatch {
        /// Recomputed `j(g, g_i)` as a group element.
        j: usize,
        /// Recomputed `h(g, g_i)`.
        h: usize,
        /// The claimed `h` is not even a member of `H`.
        claimed_h_outside_subgroup: bool,
    },
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RowComparison {
    pub claimed: ClaimedRow,
    pub g: usize,
    pub rep_index: usize,
    pub status: RowStatus,
}

/// Per-row verdicts plus the rows of `G×T` the claim does not cover.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DiscrepancyReport {
    pub compared: Vec<RowComparison>,
    pub missing: Vec<FactorRow>,
}

impl DiscrepancyReport {
    pub fn matches(&self) -> usize {
        self.compared
            .iter()
            .filter(|r| r.status == RowStatus::Match)
            .count()
    }

    pub fn mismatches(&self) -> usize {
        self.compared.len() - self.matches()
    }

    pub fn is_clean(&self) -> bool {
        self.mismatches() == 0 && self.missing.is_empty()
    }

    /// Verdict for the row keyed by `(g, g_i)`, if it was claimed.
    pub fn verdict(&self, g: usize, rep_index: usize) -> Option<&RowComparison> {
        self.compared
            .iter()
            .find(|r| r.g == g && r.rep_index == rep_index)
    }
}

/// Recomputes each claimed row and reports matches, corrections and the
/// uncovered rows of `G×T`.
pub fn cross_validate_table(
    cf: &CosetFactorization,
    claimed: &[ClaimedRow],
) -> Result<DiscrepancyReport> {
    let grp = cf.group();
    let reps = cf.transversal().reps();
    let mut covered = vec![false; grp.order() * reps.len()];
    let mut compared = Vec::with_capacity(claimed.len());
    for row in claimed {
        let g = grp.element_or_err(&row.g)?;
        let rep = grp.element_or_err(&row.rep)?;
        let rep_index = reps
            .iter()
            .position(|&r| r == rep)
            .ok_or_else(|| Error::UnknownElement(format!("{} is not in the transversal", row.rep)))?;
        let claimed_j = grp.element_or_err(&row.j)?;
        let claimed_h = grp.element_or_err(&row.h)?;
        covered[g * reps.len() + rep_index] = true;
        let (j, h) = (cf.j_element(g, rep_index), cf.h(g, rep_index));
        let status = if (claimed_j, claimed_h) == (j, h) {
            RowStatus::Match
        } else {
            RowStatus::Mismatch {
                j,
                h,
                claimed_h_outside_subgroup: !cf.subgroup().contains(claimed_h),
            }
        };
        compared.push(RowComparison {
            claimed: row.clone(),
            g,
            rep_index,
            status,
        });
    }
    let missing = cf
        .rows()
        .into_iter()
        .filter(|r| !covered[r.g * reps.len() + r.rep_index])
        .collect();
    Ok(DiscrepancyReport { compared, missing })
}
