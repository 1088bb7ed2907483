//! Finite groups given by Cayley tables.
//!
//! Elements are the indices `0..order`. The table stores `a·b` at row `a`,
//! column `b`. For permutation groups the product is right-to-left function
//! composition: `(a·b)(x) = a(b(x))`.

mod cosets;
mod subgroup;

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use itertools::Itertools;

use crate::error::{Error, Result};

pub use cosets::{
    coset_factorize, cross_validate_table, ClaimedRow, CocycleReport, CosetFactorization,
    DiscrepancyReport, FactorRow, RowComparison, RowStatus,
};
pub use subgroup::{
    all_subgroups, is_subgroup, left_transversal, subgroup_closure, LeftTransversal, Subgroup,
};

/// Largest group order accepted. Associativity is checked exhaustively at
/// construction, which is cubic in the order.
pub const MAX_ORDER: usize = 64;

/// Largest `n` accepted by [`symmetric_group`].
pub const MAX_SYMMETRIC_DEGREE: usize = 4;

/// A validated finite group. Cloning is cheap.
#[derive(Clone)]
pub struct FiniteGroup {
    inner: Arc<GroupData>,
}

struct GroupData {
    order: usize,
    table: Vec<usize>,
    identity: usize,
    inverses: Vec<usize>,
    names: Vec<String>,
    lookup: HashMap<String, usize>,
}

impl FiniteGroup {
    /// Validates a Cayley table. `names` defaults to the decimal indices.
    pub fn from_table(table: Vec<Vec<usize>>, names: Option<Vec<String>>) -> Result<Self> {
        let order = table.len();
        if order == 0 {
            return Err(Error::NotAGroup("empty table".into()));
        }
        if order > MAX_ORDER {
            return Err(Error::SizeLimit {
                what: "group order",
                limit: MAX_ORDER,
                got: order,
            });
        }
        if let Some((r, row)) = table.iter().enumerate().find(|(_, row)| row.len() != order) {
            return Err(Error::NotAGroup(format!(
                "row {r} has {} entries, expected {order}",
                row.len()
            )));
        }
        let flat: Vec<usize> = table.into_iter().flatten().collect();
        if let Some(&bad) = flat.iter().find(|&&v| v >= order) {
            return Err(Error::NotAGroup(format!("entry {bad} is out of range")));
        }
        let at = |a: usize, b: usize| flat[a * order + b];

        // Latin square.
        for a in 0..order {
            let mut row_seen = vec![false; order];
            let mut col_seen = vec![false; order];
            for b in 0..order {
                if std::mem::replace(&mut row_seen[at(a, b)], true) {
                    return Err(Error::NotAGroup(format!("row {a} repeats an entry")));
                }
                if std::mem::replace(&mut col_seen[at(b, a)], true) {
                    return Err(Error::NotAGroup(format!("column {a} repeats an entry")));
                }
            }
        }

        let identity = (0..order)
            .find(|&e| (0..order).all(|a| at(e, a) == a && at(a, e) == a))
            .ok_or_else(|| Error::NotAGroup("no identity element".into()))?;

        let mut inverses = Vec::with_capacity(order);
        for a in 0..order {
            let b = (0..order)
                .find(|&b| at(a, b) == identity && at(b, a) == identity)
                .ok_or_else(|| Error::NotAGroup(format!("element {a} has no two-sided inverse")))?;
            inverses.push(b);
        }

        for (a, b, c) in itertools::iproduct!(0..order, 0..order, 0..order) {
            if at(at(a, b), c) != at(a, at(b, c)) {
                return Err(Error::NotAGroup(format!(
                    "associativity fails at ({a}, {b}, {c})"
                )));
            }
        }

        let names = match names {
            Some(names) => {
                if names.len() != order {
                    return Err(Error::NotAGroup(format!(
                        "{} names given for {order} elements",
                        names.len()
                    )));
                }
                names
            }
            None => (0..order).map(|i| i.to_string()).collect(),
        };
        let mut lookup = HashMap::with_capacity(order);
        for (i, name) in names.iter().enumerate() {
            if lookup.insert(name.clone(), i).is_some() {
                return Err(Error::NotAGroup(format!("duplicate element name `{name}`")));
            }
        }

        Ok(FiniteGroup {
            inner: Arc::new(GroupData {
                order,
                table: flat,
                identity,
                inverses,
                names,
                lookup,
            }),
        })
    }

    pub fn order(&self) -> usize {
        self.inner.order
    }

    pub fn identity(&self) -> usize {
        self.inner.identity
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.inner.table[a * self.inner.order + b]
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inner.inverses[a]
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.inner.order
    }

    pub fn name(&self, a: usize) -> &str {
        &self.inner.names[a]
    }

    pub fn names(&self) -> &[String] {
        &self.inner.names
    }

    /// Looks up an element by its display label.
    pub fn element(&self, name: &str) -> Option<usize> {
        self.inner.lookup.get(name).copied()
    }

    pub fn element_or_err(&self, name: &str) -> Result<usize> {
        self.element(name)
            .ok_or_else(|| Error::UnknownElement(name.to_string()))
    }

    /// The Cayley table as nested rows.
    pub fn table(&self) -> Vec<Vec<usize>> {
        self.inner
            .table
            .chunks(self.inner.order)
            .map(<[usize]>::to_vec)
            .collect()
    }

    /// Whether the group is trivial.
    pub fn is_trivial(&self) -> bool {
        self.inner.order == 1
    }

    /// Order of a single element.
    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != self.identity() {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }
}

impl PartialEq for FiniteGroup {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner)
            || (self.inner.table == other.inner.table && self.inner.names == other.inner.names)
    }
}

impl Eq for FiniteGroup {}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FiniteGroup{{{}}}", self.inner.names.join(", "))
    }
}

/// Builds a group from a Cayley table, validating every axiom.
pub fn make_group(table: Vec<Vec<usize>>) -> Result<FiniteGroup> {
    FiniteGroup::from_table(table, None)
}

/// The trivial group `{1}`.
pub fn trivial_group() -> FiniteGroup {
    FiniteGroup::from_table(vec![vec![0]], Some(vec!["1".into()])).expect("trivial group")
}

/// The cyclic group `Z_n` with elements labeled `0..n`.
pub fn cyclic_group(n: usize) -> Result<FiniteGroup> {
    if n == 0 {
        return Err(Error::NotAGroup("Z_0 is not finite".into()));
    }
    if n > MAX_ORDER {
        return Err(Error::SizeLimit {
            what: "group order",
            limit: MAX_ORDER,
            got: n,
        });
    }
    let table = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
    FiniteGroup::from_table(table, None)
}

/// The symmetric group on `{1, …, n}`.
///
/// Elements are ordered by the number of moved points, then by their cycle
/// lists, so `S_3` reads `1, (12), (13), (23), (123), (132)`. Products
/// compose right to left.
pub fn symmetric_group(n: usize) -> Result<FiniteGroup> {
    if n == 0 {
        return Err(Error::NotAGroup("S_0 is not supported".into()));
    }
    if n > MAX_SYMMETRIC_DEGREE {
        return Err(Error::SizeLimit {
            what: "symmetric group degree",
            limit: MAX_SYMMETRIC_DEGREE,
            got: n,
        });
    }
    let mut perms: Vec<Vec<usize>> = (0..n).permutations(n).collect();
    perms.sort_by_key(|p| {
        let moved = p.iter().enumerate().filter(|(i, &x)| *i != x).count();
        (moved, cycles(p))
    });
    let index: HashMap<Vec<usize>, usize> =
        perms.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
    let table = perms
        .iter()
        .map(|a| {
            perms
                .iter()
                .map(|b| {
                    let ab: Vec<usize> = (0..n).map(|x| a[b[x]]).collect();
                    index[&ab]
                })
                .collect()
        })
        .collect();
    let names = perms.iter().map(|p| cycle_notation(p)).collect();
    FiniteGroup::from_table(table, Some(names))
}

/// The direct product `A × B`, elements `(a, b)` indexed `a·|B| + b`.
pub fn direct_product(a: &FiniteGroup, b: &FiniteGroup) -> Result<FiniteGroup> {
    let nb = b.order();
    let n = a.order() * nb;
    if n > MAX_ORDER {
        return Err(Error::SizeLimit {
            what: "group order",
            limit: MAX_ORDER,
            got: n,
        });
    }
    let table = (0..n)
        .map(|x| {
            (0..n)
                .map(|y| a.mul(x / nb, y / nb) * nb + b.mul(x % nb, y % nb))
                .collect()
        })
        .collect();
    let names = (0..n)
        .map(|x| format!("({},{})", a.name(x / nb), b.name(x % nb)))
        .collect();
    FiniteGroup::from_table(table, Some(names))
}

/// Nontrivial cycles of a permutation of `0..n`, each starting at its least
/// point, in order of that point.
fn cycles(p: &[usize]) -> Vec<Vec<usize>> {
    let mut seen = vec![false; p.len()];
    let mut out = Vec::new();
    for start in 0..p.len() {
        if seen[start] || p[start] == start {
            continue;
        }
        let mut cycle = vec![start];
        seen[start] = true;
        let mut x = p[start];
        while x != start {
            seen[x] = true;
            cycle.push(x);
            x = p[x];
        }
        out.push(cycle);
    }
    out
}

fn cycle_notation(p: &[usize]) -> String {
    let cs = cycles(p);
    if cs.is_empty() {
        return "1".into();
    }
    cs.iter()
        .map(|c| format!("({})", c.iter().map(|x| (x + 1).to_string()).join("")))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trivial_table_is_a_group() {
        let g = make_group(vec![vec![0]]).unwrap();
        assert_eq!(g.order(), 1);
        assert_eq!(g.identity(), 0);
    }

    #[test]
    fn z2_table() {
        let g = make_group(vec![vec![0, 1], vec![1, 0]]).unwrap();
        assert_eq!(g.order(), 2);
        assert_eq!(g.inv(1), 1);
    }

    #[test]
    fn rejects_non_latin_and_missing_identity() {
        assert!(matches!(
            make_group(vec![vec![0, 0], vec![1, 0]]),
            Err(Error::NotAGroup(_))
        ));
        // Latin square without an identity element.
        assert!(matches!(
            make_group(vec![vec![0, 2, 1], vec![2, 1, 0], vec![1, 0, 2]]),
            Err(Error::NotAGroup(_))
        ));
        assert!(matches!(make_group(vec![vec![0, 1]]), Err(Error::NotAGroup(_))));
        assert!(matches!(make_group(vec![]), Err(Error::NotAGroup(_))));
    }

    #[test]
    fn s3_labels_and_composition() {
        let s3 = symmetric_group(3).unwrap();
        assert_eq!(s3.order(), 6);
        assert_eq!(s3.names(), ["1", "(12)", "(13)", "(23)", "(123)", "(132)"]);
        let p = |s: &str| s3.element(s).unwrap();
        // Right to left: apply (13) first, then (23).
        assert_eq!(s3.mul(p("(23)"), p("(13)")), p("(123)"));
        assert_eq!(s3.inv(p("(123)")), p("(132)"));
    }

    #[test]
    fn symmetric_sizes() {
        assert!(symmetric_group(1).unwrap().is_trivial());
        assert_eq!(symmetric_group(4).unwrap().order(), 24);
        assert!(matches!(symmetric_group(5), Err(Error::SizeLimit { .. })));
    }

    #[test]
    fn cyclic_and_product() {
        let z4 = cyclic_group(4).unwrap();
        assert_eq!(z4.element_order(1), 4);
        assert_eq!(z4.element_order(2), 2);
        let z2 = cyclic_group(2).unwrap();
        let v4 = direct_product(&z2, &z2).unwrap();
        assert_eq!(v4.order(), 4);
        assert!(v4.elements().all(|a| v4.mul(a, a) == v4.identity()));
        assert!(matches!(cyclic_group(65), Err(Error::SizeLimit { .. })));
    }
}
