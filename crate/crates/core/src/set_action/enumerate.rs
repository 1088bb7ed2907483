//! Exhaustive enumeration of the partial actions of a small group on a small
//! set.
//!
//! `α_e` is forced to be the identity and `α_{g⁻¹}` to be `α_g⁻¹`, so only one
//! element of each inverse pair is chosen; involutions range over partial
//! involutions. Partial assignments are pruned with the composition axiom on
//! every triple `(g, h, gh)` already assigned, and each complete assignment is
//! run through the full verifier.

use rayon::prelude::*;

use super::{point_labels, SetPartialAction};
use crate::error::{Error, Result};
use crate::group::FiniteGroup;

pub const MAX_ENUMERATION_ORDER: usize = 6;
pub const MAX_ENUMERATION_CARRIER: usize = 4;

type Map = Vec<Option<usize>>;

/// Every partial action of `group` on the carrier `x1, …, xn`, without
/// duplicates, sorted by the map table.
pub fn enumerate_partial_actions(
    group: &FiniteGroup,
    carrier_size: usize,
) -> Result<Vec<SetPartialAction>> {
    if group.order() > MAX_ENUMERATION_ORDER {
        return Err(Error::SizeLimit {
            what: "group order for enumeration",
            limit: MAX_ENUMERATION_ORDER,
            got: group.order(),
        });
    }
    if carrier_size > MAX_ENUMERATION_CARRIER {
        return Err(Error::SizeLimit {
            what: "carrier size for enumeration",
            limit: MAX_ENUMERATION_CARRIER,
            got: carrier_size,
        });
    }
    let n = carrier_size;
    let injections = partial_injections(n);
    let involutions: Vec<Map> = injections
        .iter()
        .filter(|m| is_involution(m))
        .cloned()
        .collect();

    let reps: Vec<usize> = group
        .elements()
        .filter(|&g| g != group.identity() && g <= group.inv(g))
        .collect();

    let mut base: Vec<Option<Map>> = vec![None; group.order()];
    base[group.identity()] = Some((0..n).map(Some).collect());

    let enumerator = Enumerator {
        group,
        reps: &reps,
        injections: &injections,
        involutions: &involutions,
    };

    let mut tables: Vec<Vec<Map>> = match reps.first() {
        None => enumerator.complete(base),
        Some(&first) => enumerator
            .candidates(first)
            .par_iter()
            .flat_map_iter(|m| {
                let mut maps = base.clone();
                enumerator.set(&mut maps, first, m);
                if enumerator.consistent(&maps) {
                    enumerator.extend(maps, 1)
                } else {
                    Vec::new()
                }
            })
            .collect(),
    };
    tables.sort();
    tables.dedup();

    let labels = point_labels("x", n);
    let mut out = Vec::with_capacity(tables.len());
    for maps in tables {
        let action = SetPartialAction::from_maps(group.clone(), labels.clone(), maps)?;
        if action.verify().all_pass() {
            out.push(action);
        }
    }
    Ok(out)
}

struct Enumerator<'a> {
    group: &'a FiniteGroup,
    reps: &'a [usize],
    injections: &'a [Map],
    involutions: &'a [Map],
}

impl Enumerator<'_> {
    fn candidates(&self, g: usize) -> &[Map] {
        if self.group.inv(g) == g {
            self.involutions
        } else {
            self.injections
        }
    }

    fn set(&self, maps: &mut [Option<Map>], g: usize, m: &Map) {
        maps[g] = Some(m.clone());
        maps[self.group.inv(g)] = Some(invert(m));
    }

    fn extend(&self, maps: Vec<Option<Map>>, depth: usize) -> Vec<Vec<Map>> {
        let Some(&g) = self.reps.get(depth) else {
            return self.complete(maps);
        };
        let mut out = Vec::new();
        for m in self.candidates(g) {
            let mut next = maps.clone();
            self.set(&mut next, g, m);
            if self.consistent(&next) {
                out.extend(self.extend(next, depth + 1));
            }
        }
        out
    }

    fn complete(&self, maps: Vec<Option<Map>>) -> Vec<Vec<Map>> {
        vec![maps.into_iter().map(|m| m.expect("all assigned")).collect()]
    }

    /// Axioms (ii) and (iii) on every fully assigned triple.
    fn consistent(&self, maps: &[Option<Map>]) -> bool {
        let g = self.group;
        for a in g.elements() {
            let Some(ma) = &maps[a] else { continue };
            for b in g.elements() {
                let Some(mb) = &maps[b] else { continue };
                let Some(mab) = &maps[g.mul(a, b)] else { continue };
                for (x, y) in mb.iter().enumerate() {
                    let Some(y) = *y else { continue };
                    if let Some(z) = ma[y] {
                        if mab[x] != Some(z) {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }
}

fn partial_injections(n: usize) -> Vec<Map> {
    let mut out = Vec::new();
    let mut current = vec![None; n];
    let mut used = vec![false; n];
    fn go(x: usize, current: &mut Map, used: &mut [bool], out: &mut Vec<Map>) {
        if x == current.len() {
            out.push(current.clone());
            return;
        }
        current[x] = None;
        go(x + 1, current, used, out);
        for y in 0..current.len() {
            if !used[y] {
                used[y] = true;
                current[x] = Some(y);
                go(x + 1, current, used, out);
                used[y] = false;
            }
        }
        current[x] = None;
    }
    go(0, &mut current, &mut used, &mut out);
    out
}

fn invert(m: &Map) -> Map {
    let mut inv = vec![None; m.len()];
    for (x, y) in m.iter().enumerate() {
        if let Some(y) = *y {
            inv[y] = Some(x);
        }
    }
    inv
}

fn is_involution(m: &Map) -> bool {
    invert(m) == *m
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{cyclic_group, trivial_group};

    #[test]
    fn injection_counts() {
        // Σ_k C(n,k)² k!
        assert_eq!(partial_injections(0).len(), 1);
        assert_eq!(partial_injections(2).len(), 7);
        assert_eq!(partial_injections(3).len(), 34);
        assert_eq!(partial_injections(4).len(), 209);
    }

    #[test]
    fn trivial_group_has_one_action() {
        for n in 0..=3 {
            assert_eq!(enumerate_partial_actions(&trivial_group(), n).unwrap().len(), 1);
        }
    }

    #[test]
    fn z2_counts() {
        let z2 = cyclic_group(2).unwrap();
        assert_eq!(enumerate_partial_actions(&z2, 1).unwrap().len(), 2);
        assert_eq!(enumerate_partial_actions(&z2, 2).unwrap().len(), 5);
    }

    #[test]
    fn size_limits() {
        assert!(matches!(
            enumerate_partial_actions(&cyclic_group(7).unwrap(), 1),
            Err(Error::SizeLimit { .. })
        ));
        assert!(matches!(
            enumerate_partial_actions(&cyclic_group(2).unwrap(), 5),
            Err(Error::SizeLimit { .. })
        ));
    }
}
