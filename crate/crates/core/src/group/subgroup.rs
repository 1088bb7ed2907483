use std::collections::BTreeSet;

use super::FiniteGroup;
use crate::error::{Error, Result};

/// A subgroup `H ≤ G`, stored as its sorted member list together with the
/// group structure it inherits (elements re-indexed `0..|H|` in member order).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Subgroup {
    parent: FiniteGroup,
    members: Vec<usize>,
    local: Vec<Option<usize>>,
    as_group: FiniteGroup,
}

impl Subgroup {
    /// Checks that `members` is closed under products and inverses and
    /// contains the identity.
    pub fn new(parent: &FiniteGroup, members: impl IntoIterator<Item = usize>) -> Result<Self> {
        let members: Vec<usize> = members.into_iter().collect::<BTreeSet<_>>().into_iter().collect();
        if let Some(&bad) = members.iter().find(|&&m| m >= parent.order()) {
            return Err(Error::UnknownElement(bad.to_string()));
        }
        let mut local = vec![None; parent.order()];
        for (i, &m) in members.iter().enumerate() {
            local[m] = Some(i);
        }
        if local[parent.identity()].is_none() {
            return Err(Error::NotASubgroup("identity is missing".into()));
        }
        for &a in &members {
            if local[parent.inv(a)].is_none() {
                return Err(Error::NotASubgroup(format!(
                    "inverse of {} is missing",
                    parent.name(a)
                )));
            }
            for &b in &members {
                if local[parent.mul(a, b)].is_none() {
                    return Err(Error::NotASubgroup(format!(
                        "{}·{} is missing",
                        parent.name(a),
                        parent.name(b)
                    )));
                }
            }
        }
        let table = members
            .iter()
            .map(|&a| {
                members
                    .iter()
                    .map(|&b| local[parent.mul(a, b)].unwrap())
                    .collect()
            })
            .collect();
        let names = members.iter().map(|&m| parent.name(m).to_string()).collect();
        let as_group = FiniteGroup::from_table(table, Some(names))
            .map_err(|e| Error::InternalInconsistency(format!("subgroup table: {e}")))?;
        Ok(Subgroup {
            parent: parent.clone(),
            members,
            local,
            as_group,
        })
    }

    /// The whole group as a subgroup of itself.
    pub fn whole(parent: &FiniteGroup) -> Self {
        Subgroup::new(parent, parent.elements()).expect("G is a subgroup of itself")
    }

    /// The trivial subgroup `{e}`.
    pub fn trivial(parent: &FiniteGroup) -> Self {
        Subgroup::new(parent, [parent.identity()]).expect("{e} is a subgroup")
    }

    pub fn parent(&self) -> &FiniteGroup {
        &self.parent
    }

    /// Members as parent element indices, ascending.
    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }

    /// The index `[G:H]`.
    pub fn index(&self) -> usize {
        self.parent.order() / self.members.len()
    }

    pub fn contains(&self, g: usize) -> bool {
        self.local.get(g).is_some_and(Option::is_some)
    }

    /// Position of a parent element inside [`Subgroup::as_group`].
    pub fn local_index(&self, g: usize) -> Option<usize> {
        self.local.get(g).copied().flatten()
    }

    /// The parent element for a local index.
    pub fn member(&self, local: usize) -> usize {
        self.members[local]
    }

    /// `H` as a group in its own right, with the parent's element labels.
    pub fn as_group(&self) -> &FiniteGroup {
        &self.as_group
    }
}

/// Whether `set` is a subgroup of `group`.
pub fn is_subgroup(group: &FiniteGroup, set: &[usize]) -> bool {
    Subgroup::new(group, set.iter().copied()).is_ok()
}

/// Smallest subgroup containing `generators`.
pub fn subgroup_closure(group: &FiniteGroup, generators: &[usize]) -> Subgroup {
    let mut seen = vec![false; group.order()];
    let mut members = vec![group.identity()];
    seen[group.identity()] = true;
    let mut frontier = 0;
    while frontier < members.len() {
        let a = members[frontier];
        frontier += 1;
        for &s in generators {
            let b = group.mul(a, s);
            if !seen[b] {
                seen[b] = true;
                members.push(b);
            }
        }
    }
    Subgroup::new(group, members).expect("closure of a finite set is a subgroup")
}

/// Every subgroup of `group`, sorted by order and then by member list.
///
/// Built from the closures of all pairs of elements followed by joins, so it
/// does not assume the subgroups are 2-generated.
pub fn all_subgroups(group: &FiniteGroup) -> Vec<Subgroup> {
    let mut found: BTreeSet<Vec<usize>> = BTreeSet::new();
    for a in group.elements() {
        for b in a..group.order() {
            found.insert(subgroup_closure(group, &[a, b]).members().to_vec());
        }
    }
    loop {
        let current: Vec<Vec<usize>> = found.iter().cloned().collect();
        let mut grew = false;
        for (i, x) in current.iter().enumerate() {
            for y in &current[i + 1..] {
                let gens: Vec<usize> = x.iter().chain(y).copied().collect();
                if found.insert(subgroup_closure(group, &gens).members().to_vec()) {
                    grew = true;
                }
            }
        }
        if !grew {
            break;
        }
    }
    let mut out: Vec<Subgroup> = found
        .into_iter()
        .map(|m| Subgroup::new(group, m).expect("closure"))
        .collect();
    out.sort_by(|x, y| (x.order(), x.members()).cmp(&(y.order(), y.members())));
    out
}

/// Representatives of the left cosets `g_i·H`.
///
/// `reps[0]` is the identity; the rest are listed in increasing element index,
/// each being the least index in its coset.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LeftTransversal {
    subgroup: Subgroup,
    reps: Vec<usize>,
    coset_of: Vec<usize>,
}

impl LeftTransversal {
    /// Validates an explicit choice of representatives.
    pub fn from_reps(subgroup: &Subgroup, reps: Vec<usize>) -> Result<Self> {
        let g = subgroup.parent();
        if reps.first() != Some(&g.identity()) {
            return Err(Error::MalformedInput(
                "the identity must represent the subgroup itself".into(),
            ));
        }
        let mut coset_of = vec![usize::MAX; g.order()];
        for (i, &r) in reps.iter().enumerate() {
            if r >= g.order() {
                return Err(Error::UnknownElement(r.to_string()));
            }
            for &h in subgroup.members() {
                let x = g.mul(r, h);
                if coset_of[x] != usize::MAX {
                    return Err(Error::MalformedInput(format!(
                        "cosets of {} and {} overlap",
                        g.name(reps[coset_of[x]]),
                        g.name(r)
                    )));
                }
                coset_of[x] = i;
            }
        }
        if coset_of.contains(&usize::MAX) {
            return Err(Error::MalformedInput("cosets do not cover the group".into()));
        }
        Ok(LeftTransversal {
            subgroup: subgroup.clone(),
            reps,
            coset_of,
        })
    }

    pub fn subgroup(&self) -> &Subgroup {
        &self.subgroup
    }

    pub fn group(&self) -> &FiniteGroup {
        self.subgroup.parent()
    }

    pub fn reps(&self) -> &[usize] {
        &self.reps
    }

    pub fn len(&self) -> usize {
        self.reps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reps.is_empty()
    }

    /// Index into [`LeftTransversal::reps`] of the coset containing `g`.
    pub fn coset_index(&self, g: usize) -> usize {
        self.coset_of[g]
    }
}

/// Deterministic left transversal of `subgroup` in its parent.
pub fn left_transversal(subgroup: &Subgroup) -> LeftTransversal {
    let g = subgroup.parent();
    let mut covered = vec![false; g.order()];
    let mut reps = Vec::with_capacity(subgroup.index());
    let mut take = |r: usize, covered: &mut Vec<bool>| {
        for &h in subgroup.members() {
            covered[g.mul(r, h)] = true;
        }
        reps.push(r);
    };
    take(g.identity(), &mut covered);
    for x in g.elements() {
        if !covered[x] {
            take(x, &mut covered);
        }
    }
    LeftTransversal::from_reps(subgroup, reps).expect("greedy transversal is valid")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{cyclic_group, symmetric_group};

    fn names(g: &FiniteGroup, xs: &[usize]) -> Vec<String> {
        xs.iter().map(|&x| g.name(x).to_string()).collect()
    }

    #[test]
    fn closure_examples() {
        let s3 = symmetric_group(3).unwrap();
        let p = |s: &str| s3.element(s).unwrap();
        let h = subgroup_closure(&s3, &[p("(12)")]);
        assert_eq!(names(&s3, h.members()), ["1", "(12)"]);
        assert_eq!(subgroup_closure(&s3, &[]).members(), [s3.identity()]);
        let a3 = subgroup_closure(&s3, &[p("(123)")]);
        assert_eq!(names(&s3, a3.members()), ["1", "(123)", "(132)"]);
    }

    #[test]
    fn rejects_non_subgroups() {
        let s3 = symmetric_group(3).unwrap();
        let p = |s: &str| s3.element(s).unwrap();
        assert!(matches!(
            Subgroup::new(&s3, [p("(12)")]),
            Err(Error::NotASubgroup(_))
        ));
        assert!(matches!(
            Subgroup::new(&s3, [p("1"), p("(12)"), p("(13)")]),
            Err(Error::NotASubgroup(_))
        ));
        assert!(!is_subgroup(&s3, &[p("1"), p("(123)")]));
    }

    #[test]
    fn subgroup_as_group_keeps_labels() {
        let s3 = symmetric_group(3).unwrap();
        let h = subgroup_closure(&s3, &[s3.element("(12)").unwrap()]);
        assert_eq!(h.as_group().names(), ["1", "(12)"]);
        assert_eq!(h.index(), 3);
    }

    #[test]
    fn transversal_examples() {
        let s3 = symmetric_group(3).unwrap();
        let h = subgroup_closure(&s3, &[s3.element("(12)").unwrap()]);
        let t = left_transversal(&h);
        assert_eq!(names(&s3, t.reps()), ["1", "(13)", "(23)"]);

        let whole = Subgroup::whole(&s3);
        assert_eq!(left_transversal(&whole).reps(), [s3.identity()]);

        let z4 = cyclic_group(4).unwrap();
        let h = Subgroup::new(&z4, [0, 2]).unwrap();
        assert_eq!(left_transversal(&h).reps(), [0, 1]);
    }

    #[test]
    fn explicit_transversal_validation() {
        let z4 = cyclic_group(4).unwrap();
        let h = Subgroup::new(&z4, [0, 2]).unwrap();
        assert!(LeftTransversal::from_reps(&h, vec![0, 3]).is_ok());
        assert!(LeftTransversal::from_reps(&h, vec![0, 2]).is_err());
        assert!(LeftTransversal::from_reps(&h, vec![1, 0]).is_err());
        assert!(LeftTransversal::from_reps(&h, vec![0]).is_err());
    }

    #[test]
    fn subgroup_lattices() {
        let s3 = symmetric_group(3).unwrap();
        assert_eq!(all_subgroups(&s3).len(), 6);
        assert_eq!(all_subgroups(&cyclic_group(6).unwrap()).len(), 4);
        assert_eq!(all_subgroups(&symmetric_group(4).unwrap()).len(), 30);
    }
}
