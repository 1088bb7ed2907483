//! Exhaustive enumeration of partial actions on `Λⁿ`.
//!
//! Position maps come from the set enumerator; twists are then chosen for
//! one element of each inverse pair and pruned with the composition axiom.

use itertools::Itertools;
use rayon::prelude::*;

use super::{AlgebraPartialAction, SubgroupAutAction};
use crate::block::{Block, BlockAlgebra};
use crate::error::Result;
use crate::group::{FiniteGroup, Subgroup};
use crate::set_action::{enumerate_partial_actions, SetPartialAction};

/// Every homomorphism `H → Aut(Λ)`, in lexicographic order of images.
pub fn enumerate_hom_actions(subgroup: &Subgroup, block: &Block) -> Vec<SubgroupAutAction> {
    let h = subgroup.as_group();
    let aut = block.aut();
    (0..h.order())
        .map(|k| {
            if k == h.identity() {
                vec![aut.identity()]
            } else {
                aut.elements().collect()
            }
        })
        .multi_cartesian_product()
        .filter_map(|images| SubgroupAutAction::new(subgroup.clone(), block.clone(), images).ok())
        .collect()
}

type Twists = Vec<Option<usize>>;

/// Every partial action of `group` on `block^n`, grouped by the underlying
/// partial action on idempotents (in the set enumerator's order).
pub fn enumerate_algebra_partial_actions(
    group: &FiniteGroup,
    block: &Block,
    n: usize,
) -> Result<Vec<AlgebraPartialAction>> {
    let algebra = BlockAlgebra::power(block, n)?;
    let sets = enumerate_partial_actions(group, n)?;
    let per_set: Vec<Vec<AlgebraPartialAction>> = sets
        .par_iter()
        .map(|spa| twisted_lifts(spa, &algebra))
        .collect::<Result<_>>()?;
    Ok(per_set.into_iter().flatten().collect())
}

fn twisted_lifts(spa: &SetPartialAction, algebra: &BlockAlgebra) -> Result<Vec<AlgebraPartialAction>> {
    let group = spa.group();
    let aut = algebra.block(0).aut();
    let n = spa.carrier_size();
    let reps: Vec<usize> = group
        .elements()
        .filter(|&g| g != group.identity() && g <= group.inv(g))
        .collect();
    let mut base: Vec<Option<Twists>> = vec![None; group.order()];
    base[group.identity()] = Some(vec![Some(aut.identity()); n]);

    let search = Search { spa, aut, reps: &reps };
    let mut tables = Vec::new();
    search.extend(base, 0, &mut tables);

    let mut out = Vec::with_capacity(tables.len());
    for twists in tables {
        let entries = group
            .elements()
            .map(|g| {
                (0..n)
                    .filter_map(|x| spa.apply(g, x).map(|y| (x, y, twists[g][x].expect("assigned"))))
                    .collect()
            })
            .collect();
        let pa = AlgebraPartialAction::from_entries(group.clone(), algebra.clone(), entries)?;
        if pa.verify().all_pass() {
            out.push(pa);
        }
    }
    Ok(out)
}

struct Search<'a> {
    spa: &'a SetPartialAction,
    aut: &'a FiniteGroup,
    reps: &'a [usize],
}

impl Search<'_> {
    fn candidates(&self, g: usize) -> Vec<Twists> {
        let domain: Vec<usize> = (0..self.spa.carrier_size())
            .filter(|&x| self.spa.apply(g, x).is_some())
            .collect();
        domain
            .iter()
            .map(|_| self.aut.elements())
            .multi_cartesian_product()
            .map(|choice| {
                let mut t = vec![None; self.spa.carrier_size()];
                for (&x, c) in domain.iter().zip(choice) {
                    t[x] = Some(c);
                }
                t
            })
            .collect()
    }

    fn inverse(&self, g: usize, t: &Twists) -> Twists {
        let mut inv = vec![None; t.len()];
        for (x, tw) in t.iter().enumerate() {
            if let (Some(tw), Some(y)) = (tw, self.spa.apply(g, x)) {
                inv[y] = Some(self.aut.inv(*tw));
            }
        }
        inv
    }

    fn extend(&self, maps: Vec<Option<Twists>>, depth: usize, out: &mut Vec<Vec<Twists>>) {
        let Some(&g) = self.reps.get(depth) else {
            out.push(maps.into_iter().map(|m| m.expect("all assigned")).collect());
            return;
        };
        let group = self.spa.group();
        let gi = group.inv(g);
        for t in self.candidates(g) {
            let inv = self.inverse(g, &t);
            if gi == g && inv != t {
                continue;
            }
            let mut next = maps.clone();
            next[g] = Some(t);
            next[gi] = Some(inv);
            if self.consistent(&next) {
                self.extend(next, depth + 1, out);
            }
        }
    }

    /// Twisted composition on every fully assigned triple.
    fn consistent(&self, maps: &[Option<Twists>]) -> bool {
        let group = self.spa.group();
        for a in group.elements() {
            let Some(ta) = &maps[a] else { continue };
            for b in group.elements() {
                let Some(tb) = &maps[b] else { continue };
                let Some(tab) = &maps[group.mul(a, b)] else { continue };
                for x in 0..self.spa.carrier_size() {
                    let Some(y) = self.spa.apply(b, x) else { continue };
                    if let (Some(fa), Some(fb)) = (ta[y], tb[x]) {
                        if tab[x] != Some(self.aut.mul(fa, fb)) {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }
}
