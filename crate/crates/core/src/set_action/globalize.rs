//! Globalization of set partial actions.
//!
//! The envelope is `(G × X)/~` with `(g, x) ~ (t, y)` iff `x ∈ D_{g⁻¹t}` and
//! `α_{t⁻¹g}(x) = y`; `G` acts by `t·[g, x] = [tg, x]` and `X` embeds as
//! `x ↦ [e, x]`. Classes are listed by their least pair `(g, x)`.

use petgraph::unionfind::UnionFind;

use super::{GlobalSetAction, SetPartialAction};
use crate::equivalence::{find_equivariant_iso, TwistedAction};
use crate::error::{Error, Result};
use crate::group::trivial_group;
use crate::report::EnvelopingChecks;

/// An enveloping action of a set partial action.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SetGlobalization {
    envelope: GlobalSetAction,
    embedding: Vec<usize>,
    witnesses: Vec<(usize, usize)>,
}

impl SetGlobalization {
    pub fn envelope(&self) -> &GlobalSetAction {
        &self.envelope
    }

    /// `embedding[x]` is the envelope point `[e, x]`.
    pub fn embedding(&self) -> &[usize] {
        &self.embedding
    }

    /// For each envelope point, the least pair `(g, x)` with point `= β_g(φ(x))`.
    pub fn witnesses(&self) -> &[(usize, usize)] {
        &self.witnesses
    }

    pub fn size(&self) -> usize {
        self.envelope.carrier_size()
    }

    /// The partial action the envelope induces on the embedded copy of `X`,
    /// expressed on the original carrier.
    pub fn restriction(&self, carrier: Vec<String>) -> Result<SetPartialAction> {
        let mut back = vec![None; self.envelope.carrier_size()];
        for (x, &p) in self.embedding.iter().enumerate() {
            back[p] = Some(x);
        }
        let maps = self
            .envelope
            .group()
            .elements()
            .map(|g| {
                self.embedding
                    .iter()
                    .map(|&p| back[self.envelope.apply(g, p)])
                    .collect()
            })
            .collect();
        SetPartialAction::from_maps(self.envelope.group().clone(), carrier, maps)
    }

    /// Checks the enveloping conditions against `action`.
    pub fn verify(&self, action: &SetPartialAction) -> EnvelopingChecks {
        verify_set_envelope(action, &self.envelope.permutations(), &self.embedding)
    }

    fn twisted(&self) -> TwistedAction {
        let n = self.envelope.carrier_size();
        let trivial = trivial_group();
        TwistedAction {
            classes: vec![String::new(); n],
            auts: vec![trivial; n],
            perm: self.envelope.permutations(),
            twist: vec![vec![0; n]; self.envelope.group().order()],
        }
    }
}

/// Computes the enveloping action of a valid set partial action.
pub fn globalize_set(action: &SetPartialAction) -> Result<SetGlobalization> {
    let report = action.verify();
    if !report.all_pass() {
        return Err(Error::InvalidAction(report.to_string()));
    }
    let grp = action.group();
    let n = action.carrier_size();
    let pair = |g: usize, x: usize| g * n + x;

    let mut uf = UnionFind::<usize>::new(grp.order() * n);
    for g in grp.elements() {
        for s in grp.elements() {
            // (g, x) ~ (g·s⁻¹, α_s(x)) whenever x ∈ D_{s⁻¹}.
            let target = grp.mul(g, grp.inv(s));
            for x in 0..n {
                if let Some(y) = action.apply(s, x) {
                    uf.union(pair(g, x), pair(target, y));
                }
            }
        }
    }

    // Pair indices are lexicographic in (g, x), so the first pair met in each
    // class is its least member.
    let roots = uf.into_labeling();
    let mut class_of_root = vec![usize::MAX; roots.len()];
    let mut witnesses = Vec::new();
    for (idx, &root) in roots.iter().enumerate() {
        if class_of_root[root] == usize::MAX {
            class_of_root[root] = witnesses.len();
            witnesses.push((idx / n.max(1), idx % n.max(1)));
        }
    }
    let point = |g: usize, x: usize| class_of_root[roots[pair(g, x)]];

    let perms: Vec<Vec<usize>> = grp
        .elements()
        .map(|t| {
            witnesses
                .iter()
                .map(|&(g, x)| point(grp.mul(t, g), x))
                .collect()
        })
        .collect();
    let labels = witnesses
        .iter()
        .map(|&(g, x)| format!("[{},{}]", grp.name(g), action.carrier()[x]))
        .collect();
    let envelope = GlobalSetAction::from_permutations(grp.clone(), labels, perms)
        .map_err(|e| Error::InternalInconsistency(format!("envelope action: {e}")))?;
    let embedding = (0..n).map(|x| point(grp.identity(), x)).collect();
    Ok(SetGlobalization {
        envelope,
        embedding,
        witnesses,
    })
}

/// Checks the enveloping conditions for a candidate envelope given by its
/// permutations `perms[g][p]` and embedding `embedding[x]`.
pub fn verify_set_envelope(
    action: &SetPartialAction,
    perms: &[Vec<usize>],
    embedding: &[usize],
) -> EnvelopingChecks {
    let grp = action.group();
    let n = action.carrier_size();
    let size = perms.first().map_or(0, Vec::len);
    let mut checks = EnvelopingChecks {
        ideal: true,
        covers: true,
        intersection: true,
        equivariance: true,
        global_action: true,
        failures: Vec::new(),
    };

    if perms.len() != grp.order()
        || perms.iter().any(|p| p.len() != size || p.iter().any(|&q| q >= size))
    {
        checks.global_action = false;
        checks.failures.push("envelope permutations have the wrong shape".into());
        return checks;
    }
    let e = grp.identity();
    if (0..size).any(|p| perms[e][p] != p) {
        checks.global_action = false;
        checks.failures.push("β_e is not the identity".into());
    }
    'outer: for g in grp.elements() {
        for t in grp.elements() {
            let gt = grp.mul(g, t);
            if (0..size).any(|p| perms[g][perms[t][p]] != perms[gt][p]) {
                checks.global_action = false;
                checks.failures.push(format!(
                    "β_{}∘β_{} ≠ β_{}",
                    grp.name(g),
                    grp.name(t),
                    grp.name(gt)
                ));
                break 'outer;
            }
        }
    }

    let mut in_image = vec![false; size];
    if embedding.len() != n {
        checks.ideal = false;
        checks.failures.push("embedding has the wrong length".into());
        return checks;
    }
    for &p in embedding {
        if p >= size || std::mem::replace(&mut in_image[p], true) {
            checks.ideal = false;
            checks.failures.push("embedding is not injective".into());
            return checks;
        }
    }

    let mut reached = vec![false; size];
    for g in grp.elements() {
        for &p in embedding {
            reached[perms[g][p]] = true;
        }
    }
    if let Some(p) = reached.iter().position(|&r| !r) {
        checks.covers = false;
        checks.failures.push(format!("envelope point {p} is not a translate of X"));
    }

    for g in grp.elements() {
        let mut translate = vec![false; size];
        for &p in embedding {
            translate[perms[g][p]] = true;
        }
        for x in 0..n {
            let p = embedding[x];
            if action.in_domain(g, x) != translate[p] {
                checks.intersection = false;
                checks.failures.push(format!(
                    "g={}: {} membership in D_g disagrees with φ(X) ∩ β_g(φ(X))",
                    grp.name(g),
                    action.carrier()[x]
                ));
            }
        }
        for x in 0..n {
            if let Some(y) = action.apply(g, x) {
                if embedding[y] != perms[g][embedding[x]] {
                    checks.equivariance = false;
                    checks.failures.push(format!(
                        "g={}, x={}: φ(α_g(x)) ≠ β_g(φ(x))",
                        grp.name(g),
                        action.carrier()[x]
                    ));
                }
            }
        }
    }
    checks
}

/// Searches for an equivariant bijection `f` between two envelopes of the
/// same partial action with `f∘φ_a = φ_b`; `f[p]` is the image of point `p`.
pub fn envelopes_equivalent(a: &SetGlobalization, b: &SetGlobalization) -> Option<Vec<usize>> {
    if a.envelope.group() != b.envelope.group() || a.embedding.len() != b.embedding.len() {
        return None;
    }
    let fixed: Vec<(usize, usize, usize)> = a
        .embedding
        .iter()
        .zip(&b.embedding)
        .map(|(&p, &q)| (p, q, 0))
        .collect();
    find_equivariant_iso(&a.twisted(), &b.twisted(), &fixed)
        .map(|m| m.into_iter().map(|(q, _)| q).collect())
}

impl SetGlobalization {
    /// Rebuilds the same envelope with its points listed in a different
    /// order: `order[k]` is the old index of new point `k`.
    pub fn reindexed(&self, order: &[usize]) -> Result<SetGlobalization> {
        let size = self.envelope.carrier_size();
        let mut new_of_old = vec![usize::MAX; size];
        for (k, &old) in order.iter().enumerate() {
            if old >= size || new_of_old[old] != usize::MAX {
                return Err(Error::MalformedInput("not a permutation of the envelope".into()));
            }
            new_of_old[old] = k;
        }
        if order.len() != size {
            return Err(Error::MalformedInput("not a permutation of the envelope".into()));
        }
        let perms = self
            .envelope
            .permutations()
            .iter()
            .map(|p| order.iter().map(|&old| new_of_old[p[old]]).collect())
            .collect();
        let labels = order
            .iter()
            .map(|&old| self.envelope.carrier()[old].clone())
            .collect();
        Ok(SetGlobalization {
            envelope: GlobalSetAction::from_permutations(
                self.envelope.group().clone(),
                labels,
                perms,
            )?,
            embedding: self.embedding.iter().map(|&p| new_of_old[p]).collect(),
            witnesses: order.iter().map(|&old| self.witnesses[old]).collect(),
        })
    }
}
