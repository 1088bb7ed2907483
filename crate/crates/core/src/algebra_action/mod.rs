//! Partial actions of finite groups on block algebras.
//!
//! Each domain `S_g` is an ideal generated by a central idempotent (a set of
//! whole blocks) and each `α_g: S_{g⁻¹} → S_g` is a [`WreathMap`]. Because every
//! domain is of that form, every partial action in this model is
//! globalizable; the pipelines in [`globalize`](self) construct the envelope
//! explicitly and check it.

mod enumerate;
mod globalize;

use std::fmt;

use crate::block::{decompose_isotypic, Block, BlockAlgebra, BlockIdeal, WreathMap};
use crate::error::{Error, Result};
use crate::group::{FiniteGroup, Subgroup};
use crate::report::{Axiom, VerificationReport};
use crate::set_action::{point_labels, SetPartialAction};

pub use enumerate::{enumerate_algebra_partial_actions, enumerate_hom_actions};
pub use globalize::{
    algebra_envelopes_equivalent, envelope_block_count, globalize, globalize_block_power,
    globalize_extension_by_zero, globalize_k_blocks, verify_enveloping, BlockProvenance,
    EnvelopeCandidate, GlobalizationResult, GlobalizationRoute,
};

/// A candidate partial action on a block algebra; `S_g` is the target of
/// `α_g`. The axioms are checked by [`AlgebraPartialAction::verify`].
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AlgebraPartialAction {
    group: FiniteGroup,
    algebra: BlockAlgebra,
    maps: Vec<WreathMap>,
}

impl AlgebraPartialAction {
    /// Requires `α_g: S_{g⁻¹} → S_g`, i.e. the source of `maps[g]` is the
    /// target of `maps[g⁻¹]`.
    pub fn new(group: FiniteGroup, algebra: BlockAlgebra, maps: Vec<WreathMap>) -> Result<Self> {
        if maps.len() != group.order() {
            return Err(Error::MalformedInput(format!(
                "expected {} maps, got {}",
                group.order(),
                maps.len()
            )));
        }
        for (g, m) in maps.iter().enumerate() {
            if m.source().algebra() != &algebra || m.target().algebra() != &algebra {
                return Err(Error::MalformedInput(format!(
                    "α_{} is not a map of the given algebra",
                    group.name(g)
                )));
            }
            let inv = group.inv(g);
            if m.source().support() != maps[inv].target().support() {
                return Err(Error::MalformedInput(format!(
                    "α_{} is not defined on S_{}",
                    group.name(g),
                    group.name(inv)
                )));
            }
        }
        Ok(AlgebraPartialAction {
            group,
            algebra,
            maps,
        })
    }

    /// Builds the maps from `(i, η_g(i), f_{g,i})` triples for each `g`; the
    /// domains are read off the triples.
    pub fn from_entries(
        group: FiniteGroup,
        algebra: BlockAlgebra,
        entries: Vec<Vec<(usize, usize, usize)>>,
    ) -> Result<Self> {
        let maps = entries
            .iter()
            .map(|es| {
                let source = BlockIdeal::new(&algebra, es.iter().map(|e| e.0))?;
                let target = BlockIdeal::new(&algebra, es.iter().map(|e| e.1))?;
                WreathMap::new(source, target, es)
            })
            .collect::<Result<Vec<_>>>()?;
        AlgebraPartialAction::new(group, algebra, maps)
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn algebra(&self) -> &BlockAlgebra {
        &self.algebra
    }

    /// `S_g`.
    pub fn domain(&self, g: usize) -> &BlockIdeal {
        self.maps[g].target()
    }

    /// `α_g`.
    pub fn map(&self, g: usize) -> &WreathMap {
        &self.maps[g]
    }

    pub fn maps(&self) -> &[WreathMap] {
        &self.maps
    }

    pub fn is_global(&self) -> bool {
        self.maps.iter().all(|m| m.target().is_full())
    }

    /// Checks the partial-action axioms blockwise, including twists.
    pub fn verify(&self) -> VerificationReport {
        let g = &self.group;
        let alg = &self.algebra;
        let n = alg.len();
        let mut report = VerificationReport::new(&[
            Axiom::Identity,
            Axiom::DomainInclusion,
            Axiom::Composition,
            Axiom::IntersectionTransport,
            Axiom::InverseMaps,
            Axiom::ClassPreservation,
        ]);
        let e = g.identity();
        if !self.maps[e].target().is_full() {
            report.fail(Axiom::Identity, || format!("S_{} is not the whole algebra", g.name(e)));
        } else if !self.maps[e].is_identity() {
            report.fail(Axiom::Identity, || format!("α_{} is not the identity", g.name(e)));
        }

        for a in g.elements() {
            let ma = &self.maps[a];
            for (from, to, _) in ma.entries() {
                let (s, t) = (alg.block(from), alg.block(to));
                if s.class() != t.class() {
                    report.fail(Axiom::ClassPreservation, || {
                        format!("α_{} sends block {from} to block {to}", g.name(a))
                    });
                }
            }
            for b in g.elements() {
                let mb = &self.maps[b];
                let ab = g.mul(a, b);
                let mab = &self.maps[ab];
                for (p, q, fb) in mb.entries() {
                    let (Some(r), Some(fa)) = (ma.target_of(q), ma.twist_at(q)) else {
                        continue;
                    };
                    match (mab.target_of(p), mab.twist_at(p)) {
                        (None, _) | (_, None) => report.fail(Axiom::DomainInclusion, || {
                            format!(
                                "g={}, h={}, block {p}: α_h(e_p) ∈ S_g⁻¹ but e_p ∉ S_{}",
                                g.name(a),
                                g.name(b),
                                g.name(g.inv(ab))
                            )
                        }),
                        (Some(r2), Some(f2)) => {
                            let aut = alg.block(p).aut();
                            let composed = aut.mul(fa, fb);
                            if r2 != r || f2 != composed {
                                report.fail(Axiom::Composition, || {
                                    format!(
                                        "g={}, h={}, block {p}: α_g∘α_h gives block {r} twisted by {}, α_gh gives block {r2} twisted by {}",
                                        g.name(a),
                                        g.name(b),
                                        aut.name(composed),
                                        aut.name(f2)
                                    )
                                });
                            }
                        }
                    }
                }

                let mut image = vec![false; n];
                for (p, q, _) in ma.entries() {
                    if mb.target().contains(p) {
                        image[q] = true;
                    }
                }
                for (q, &hit) in image.iter().enumerate() {
                    let expected = ma.target().contains(q) && mab.target().contains(q);
                    if hit != expected {
                        report.fail(Axiom::IntersectionTransport, || {
                            format!(
                                "g={}, h={}: block {q} breaks α_g(S_g⁻¹ ∩ S_h) = S_g ∩ S_gh",
                                g.name(a),
                                g.name(b)
                            )
                        });
                    }
                }
            }
            if self.maps[g.inv(a)] != ma.inverse() {
                report.fail(Axiom::InverseMaps, || {
                    format!("α_{} is not the inverse of α_{}", g.name(g.inv(a)), g.name(a))
                });
            }
        }
        report
    }
}

impl fmt::Display for AlgebraPartialAction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .group
            .elements()
            .map(|g| {
                let es: Vec<String> = self.maps[g]
                    .entries()
                    .map(|(p, q, t)| {
                        format!("{p}→{q}·{}", self.algebra.block(p).aut().name(t))
                    })
                    .collect();
                format!("{}:{{{}}}", self.group.name(g), es.join(","))
            })
            .collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// A global action of a subgroup `H` on an indecomposable block, given as a
/// homomorphism `H → Aut(Λ)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SubgroupAutAction {
    subgroup: Subgroup,
    block: Block,
    images: Vec<usize>,
}

impl SubgroupAutAction {
    /// `images[k]` is the automorphism assigned to the `k`-th member of `H`.
    pub fn new(subgroup: Subgroup, block: Block, images: Vec<usize>) -> Result<Self> {
        let h = subgroup.as_group();
        let aut = block.aut();
        if images.len() != h.order() {
            return Err(Error::NotAHomomorphism(format!(
                "{} images for a subgroup of order {}",
                images.len(),
                h.order()
            )));
        }
        if let Some(&bad) = images.iter().find(|&&x| x >= aut.order()) {
            return Err(Error::NotAHomomorphism(format!("{bad} is not an automorphism")));
        }
        for a in h.elements() {
            for b in h.elements() {
                if images[h.mul(a, b)] != aut.mul(images[a], images[b]) {
                    return Err(Error::NotAHomomorphism(format!(
                        "ρ({}·{}) ≠ ρ({})·ρ({})",
                        h.name(a),
                        h.name(b),
                        h.name(a),
                        h.name(b)
                    )));
                }
            }
        }
        Ok(SubgroupAutAction {
            subgroup,
            block,
            images,
        })
    }

    /// The trivial action of `H`.
    pub fn trivial(subgroup: Subgroup, block: Block) -> Self {
        let images = vec![block.aut().identity(); subgroup.order()];
        SubgroupAutAction {
            subgroup,
            block,
            images,
        }
    }

    pub fn subgroup(&self) -> &Subgroup {
        &self.subgroup
    }

    pub fn block(&self) -> &Block {
        &self.block
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// `ρ(h)` for a parent element `h ∈ H`.
    pub fn image(&self, h: usize) -> Option<usize> {
        self.subgroup.local_index(h).map(|k| self.images[k])
    }
}

/// Extends an `H`-action on `Λ` to `G` with `S_g = 0` off `H`.
pub fn extend_by_zero_algebra(action: &SubgroupAutAction) -> AlgebraPartialAction {
    let alg = BlockAlgebra::new(vec![action.block.clone()]).expect("one block");
    let g = action.subgroup.parent().clone();
    let full = BlockIdeal::full(&alg);
    let maps = g
        .elements()
        .map(|x| match action.image(x) {
            Some(f) => WreathMap::new(full.clone(), full.clone(), &[(0, 0, f)]).expect("automorphism"),
            None => WreathMap::zero(&alg, &alg),
        })
        .collect();
    AlgebraPartialAction::new(g, alg, maps).expect("extension by zero is well formed")
}

/// Recovers `H = {g : S_g = Λ}` and the `H`-action from a partial action on
/// an indecomposable algebra.
pub fn classify_indecomposable(pa: &AlgebraPartialAction) -> Result<SubgroupAutAction> {
    if !pa.algebra.is_indecomposable() {
        return Err(Error::NotIndecomposable(pa.algebra.len()));
    }
    let report = pa.verify();
    if !report.all_pass() {
        return Err(Error::InvalidAction(report.to_string()));
    }
    let g = &pa.group;
    let members: Vec<usize> = g.elements().filter(|&x| pa.domain(x).is_full()).collect();
    let subgroup = Subgroup::new(g, members)
        .map_err(|e| Error::InternalInconsistency(format!("global part: {e}")))?;
    let images = subgroup
        .members()
        .iter()
        .map(|&h| pa.maps[h].twist_at(0).expect("full domain"))
        .collect();
    SubgroupAutAction::new(subgroup, pa.algebra.block(0).clone(), images)
        .map_err(|e| Error::InternalInconsistency(e.to_string()))
}

/// Whether a domain is zero or the whole algebra.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum DomainKind {
    Zero,
    Full,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GlobalizabilityReport {
    /// Always true in the block model: every domain is a sum of blocks, hence
    /// generated by a central idempotent.
    pub globalizable: bool,
    pub components: Vec<(String, Vec<usize>)>,
    /// For an indecomposable algebra, the kind of every `S_g`.
    pub dichotomy: Option<Vec<DomainKind>>,
}

/// Globalizability holds exactly when every domain is generated by a central
/// idempotent, which is true of every domain in this model.
pub fn globalizable_check(pa: &AlgebraPartialAction) -> GlobalizabilityReport {
    let dichotomy = pa.algebra.is_indecomposable().then(|| {
        pa.group
            .elements()
            .map(|g| {
                if pa.domain(g).is_zero() {
                    DomainKind::Zero
                } else {
                    DomainKind::Full
                }
            })
            .collect()
    });
    GlobalizabilityReport {
        globalizable: true,
        components: decompose_isotypic(&pa.algebra),
        dichotomy,
    }
}

/// One isotypic component `Λ_i^{n_i}` and the partial action restricted to it.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IsotypicComponent {
    pub class: String,
    /// Positions of the component's blocks in the original algebra.
    pub positions: Vec<usize>,
    pub action: AlgebraPartialAction,
}

/// Restricts a partial action to each isotypic component.
pub fn split_partial_action(pa: &AlgebraPartialAction) -> Result<Vec<IsotypicComponent>> {
    let mut out = Vec::new();
    for (class, positions) in decompose_isotypic(&pa.algebra) {
        let mut local = vec![None; pa.algebra.len()];
        for (i, &p) in positions.iter().enumerate() {
            local[p] = Some(i);
        }
        let sub = pa.algebra.sub_algebra(&positions)?;
        let mut entries = Vec::with_capacity(pa.group.order());
        for m in &pa.maps {
            let mut es = Vec::new();
            for (p, q, t) in m.entries() {
                match (local[p], local[q]) {
                    (Some(lp), Some(lq)) => es.push((lp, lq, t)),
                    (None, None) => {}
                    _ => {
                        return Err(Error::InternalInconsistency(format!(
                            "component `{class}` is not invariant"
                        )))
                    }
                }
            }
            entries.push(es);
        }
        let action = AlgebraPartialAction::from_entries(pa.group.clone(), sub, entries)?;
        out.push(IsotypicComponent {
            class,
            positions,
            action,
        });
    }
    Ok(out)
}

/// The product partial action on the concatenation of the algebras.
pub fn product_partial_action(parts: &[AlgebraPartialAction]) -> Result<AlgebraPartialAction> {
    let first = parts
        .first()
        .ok_or_else(|| Error::MalformedInput("no components".into()))?;
    if let Some(bad) = parts.iter().find(|p| p.group != first.group) {
        return Err(Error::GroupMismatch(format!(
            "components act by {:?} and {:?}",
            first.group, bad.group
        )));
    }
    let algebra = BlockAlgebra::product(parts.iter().map(|p| &p.algebra))?;
    let mut entries = vec![Vec::new(); first.group.order()];
    let mut offset = 0;
    for part in parts {
        for (g, m) in part.maps.iter().enumerate() {
            entries[g].extend(m.entries().map(|(p, q, t)| (p + offset, q + offset, t)));
        }
        offset += part.algebra.len();
    }
    AlgebraPartialAction::from_entries(first.group.clone(), algebra, entries)
}

/// The partial action induced on the primitive central idempotents
/// `e1, …, en`: `D_g = ψ(S_g)` and `α_g` is the position map.
pub fn restrict_to_idempotents(pa: &AlgebraPartialAction) -> SetPartialAction {
    let n = pa.algebra.len();
    let maps = pa
        .maps
        .iter()
        .map(|m| (0..n).map(|p| m.target_of(p)).collect())
        .collect();
    SetPartialAction::from_maps(pa.group.clone(), point_labels("e", n), maps)
        .expect("position maps of a well-formed action are well formed")
}

/// The partial action on `⊕ K e_i` with trivial twists that restricts to
/// `spa` on the idempotents.
pub fn lift_set_action(spa: &SetPartialAction) -> Result<AlgebraPartialAction> {
    let algebra = BlockAlgebra::k_lines(spa.carrier_size())?;
    let entries = spa
        .maps()
        .iter()
        .map(|row| {
            row.iter()
                .enumerate()
                .filter_map(|(x, y)| y.map(|y| (x, y, 0)))
                .collect()
        })
        .collect();
    AlgebraPartialAction::from_entries(spa.group().clone(), algebra, entries)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{cyclic_group, subgroup_closure, symmetric_group};

    pub(crate) fn quiver_block() -> Block {
        let z2 = FiniteGroup::from_table(vec![vec![0, 1], vec![1, 0]], Some(vec!["1".into(), "σ".into()]))
            .unwrap();
        Block::new("Λ", z2)
    }

    pub(crate) fn s3_quiver_action() -> SubgroupAutAction {
        let s3 = symmetric_group(3).unwrap();
        let h = subgroup_closure(&s3, &[s3.element("(12)").unwrap()]);
        SubgroupAutAction::new(h, quiver_block(), vec![0, 1]).unwrap()
    }

    #[test]
    fn product_of_global_actions_passes() {
        let z2 = cyclic_group(2).unwrap();
        let block = quiver_block();
        let alg = BlockAlgebra::power(&block, 2).unwrap();
        let pa = AlgebraPartialAction::from_entries(
            z2,
            alg,
            vec![vec![(0, 0, 0), (1, 1, 0)], vec![(0, 1, 1), (1, 0, 1)]],
        )
        .unwrap();
        let report = pa.verify();
        assert!(report.all_pass(), "{report}");
    }

    #[test]
    fn identity_domain_must_be_everything() {
        let z2 = cyclic_group(2).unwrap();
        let alg = BlockAlgebra::k_lines(2).unwrap();
        let pa = AlgebraPartialAction::from_entries(z2, alg, vec![vec![(0, 0, 0)], vec![]]).unwrap();
        assert!(!pa.verify().passed(Axiom::Identity));
    }

    #[test]
    fn composition_failure_on_k2_with_z4() {
        // Valid domains (everything is global) but α_2 ≠ α_1∘α_1.
        let z4 = cyclic_group(4).unwrap();
        let alg = BlockAlgebra::k_lines(2).unwrap();
        let id = vec![(0, 0, 0), (1, 1, 0)];
        let swap = vec![(0, 1, 0), (1, 0, 0)];
        let pa = AlgebraPartialAction::from_entries(
            z4,
            alg,
            vec![id.clone(), swap.clone(), swap.clone(), swap],
        )
        .unwrap();
        let report = pa.verify();
        let check = report.get(Axiom::Composition).unwrap();
        assert!(check.witness.as_ref().unwrap().contains("block"), "{report}");
        assert!(report.passed(Axiom::DomainInclusion));
    }

    #[test]
    fn twisted_composition_failure() {
        // Z2 on one block, α_σ twisted by σ but α_e∘... is checked via α_σ∘α_σ = id.
        let z4 = cyclic_group(4).unwrap();
        let alg = BlockAlgebra::new(vec![quiver_block()]).unwrap();
        // ρ(1) = σ forces ρ(2) = 1; claim ρ(2) = σ instead.
        let pa = AlgebraPartialAction::from_entries(
            z4,
            alg,
            vec![vec![(0, 0, 0)], vec![(0, 0, 1)], vec![(0, 0, 1)], vec![(0, 0, 1)]],
        )
        .unwrap();
        assert!(!pa.verify().passed(Axiom::Composition));
    }

    #[test]
    fn malformed_domains() {
        let z2 = cyclic_group(2).unwrap();
        let alg = BlockAlgebra::k_lines(2).unwrap();
        let full = BlockIdeal::full(&alg);
        let one = BlockIdeal::new(&alg, [0]).unwrap();
        let two = BlockIdeal::new(&alg, [1]).unwrap();
        // α_σ: {0} → {1} but α_σ⁻¹ = α_σ would need source {1}.
        let sigma = WreathMap::new(one, two, &[(0, 1, 0)]).unwrap();
        assert!(matches!(
            AlgebraPartialAction::new(z2, alg, vec![WreathMap::identity(&full), sigma]),
            Err(Error::MalformedInput(_))
        ));
    }

    #[test]
    fn s3_example_extension_and_classification() {
        let act = s3_quiver_action();
        let pa = extend_by_zero_algebra(&act);
        assert!(pa.verify().all_pass());
        let back = classify_indecomposable(&pa).unwrap();
        assert_eq!(back, act);
        let s3 = pa.group().clone();
        let names: Vec<&str> = back.subgroup().members().iter().map(|&m| s3.name(m)).collect();
        assert_eq!(names, ["1", "(12)"]);
        assert_eq!(back.images(), [0, 1]);

        let report = globalizable_check(&pa);
        assert!(report.globalizable);
        let kinds = report.dichotomy.unwrap();
        assert_eq!(kinds.iter().filter(|k| **k == DomainKind::Full).count(), 2);
    }

    #[test]
    fn classification_of_trivial_and_global() {
        let s3 = symmetric_group(3).unwrap();
        let trivial = SubgroupAutAction::trivial(Subgroup::trivial(&s3), quiver_block());
        let pa = extend_by_zero_algebra(&trivial);
        assert_eq!(classify_indecomposable(&pa).unwrap().subgroup().order(), 1);

        let whole = SubgroupAutAction::trivial(Subgroup::whole(&s3), quiver_block());
        let pa = extend_by_zero_algebra(&whole);
        assert!(pa.is_global());
        assert_eq!(classify_indecomposable(&pa).unwrap().subgroup().order(), 6);

        let two = AlgebraPartialAction::from_entries(
            cyclic_group(2).unwrap(),
            BlockAlgebra::k_lines(2).unwrap(),
            vec![vec![(0, 0, 0), (1, 1, 0)], vec![]],
        )
        .unwrap();
        assert!(matches!(classify_indecomposable(&two), Err(Error::NotIndecomposable(2))));
    }

    #[test]
    fn homomorphism_check() {
        let z4 = cyclic_group(4).unwrap();
        let whole = Subgroup::whole(&z4);
        // 1 ↦ σ is fine (Z4 → Z2), but 1 ↦ σ, 2 ↦ σ is not.
        assert!(SubgroupAutAction::new(whole.clone(), quiver_block(), vec![0, 1, 0, 1]).is_ok());
        assert!(matches!(
            SubgroupAutAction::new(whole, quiver_block(), vec![0, 1, 1, 1]),
            Err(Error::NotAHomomorphism(_))
        ));
    }

    #[test]
    fn split_and_product_round_trip() {
        let z2 = cyclic_group(2).unwrap();
        let l1 = quiver_block();
        let l2 = Block::new("M", cyclic_group(3).unwrap());
        let alg = BlockAlgebra::new(vec![l1.clone(), l1, l2]).unwrap();
        // Z2 swaps the two Λ blocks with a twist and fixes nothing on M.
        let pa = AlgebraPartialAction::from_entries(
            z2,
            alg,
            vec![vec![(0, 0, 0), (1, 1, 0), (2, 2, 0)], vec![(0, 1, 1), (1, 0, 1)]],
        )
        .unwrap();
        assert!(pa.verify().all_pass());
        let parts = split_partial_action(&pa).unwrap();
        assert_eq!(parts.len(), 2);
        assert_eq!(parts[0].positions, [0, 1]);
        assert!(parts[1].action.domain(1).is_zero());
        let actions: Vec<AlgebraPartialAction> = parts.into_iter().map(|c| c.action).collect();
        assert_eq!(product_partial_action(&actions).unwrap(), pa);
    }

    #[test]
    fn product_requires_one_group() {
        let a = lift_set_action(
            &SetPartialAction::from_maps(
                cyclic_group(2).unwrap(),
                point_labels("x", 1),
                vec![vec![Some(0)], vec![None]],
            )
            .unwrap(),
        )
        .unwrap();
        let b = extend_by_zero_algebra(&s3_quiver_action());
        assert!(matches!(product_partial_action(&[a, b]), Err(Error::GroupMismatch(_))));
    }

    #[test]
    fn idempotent_restriction_of_s3_example() {
        let pa = extend_by_zero_algebra(&s3_quiver_action());
        let spa = restrict_to_idempotents(&pa);
        assert_eq!(spa.carrier(), ["e1"]);
        let s3 = pa.group();
        for g in s3.elements() {
            let in_h = ["1", "(12)"].contains(&s3.name(g));
            assert_eq!(spa.domain(g).len(), usize::from(in_h));
        }
    }
}
