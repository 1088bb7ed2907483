//! Enveloping actions of algebra partial actions.
//!
//! Three constructions, chosen by [`globalize`]:
//!
//! * one block with stabilizer `H`: `Λ^{[G:H]}` indexed by a left transversal,
//!   `β_g` moving the component at `g_i` to `j(g, g_i)` twisted by
//!   `ρ(h(g, g_i))`;
//! * K-lines: the set envelope of the idempotents, one K-line per point;
//! * `Λⁿ` in general: blocks indexed by the classes of `G × {1..n}` as for
//!   sets, with twists transported along the identifications.
//!
//! Mixed algebras are split into isotypic components, globalized
//! separately and recombined.

use std::collections::VecDeque;

use super::{
    classify_indecomposable, extend_by_zero_algebra, restrict_to_idempotents,
    split_partial_action, AlgebraPartialAction, SubgroupAutAction,
};
use crate::block::{wreath_compose, Block, BlockAlgebra, BlockIdeal, WreathMap};
use crate::equivalence::{find_equivariant_iso, TwistedAction};
use crate::error::{Error, Result};
use crate::group::{coset_factorize, left_transversal};
use crate::report::EnvelopingChecks;
use crate::set_action::globalize_set;

/// Where an envelope block comes from.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum BlockProvenance {
    /// The copy of `Λ` at coset representative `rep`.
    Coset { rep: usize },
    /// The class of `(g, position)` in `G × {blocks}`.
    Orbit { g: usize, position: usize },
}

/// Which construction produced an envelope.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum GlobalizationRoute {
    ExtensionByZero,
    KBlocks,
    BlockPower,
    Mixed,
}

/// A candidate enveloping action: `β_g` on `envelope` and
/// `φ(block x) = (embedding[x].0, twisted by embedding[x].1)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct EnvelopeCandidate {
    pub envelope: BlockAlgebra,
    pub action: Vec<WreathMap>,
    pub embedding: Vec<(usize, usize)>,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GlobalizationResult {
    route: GlobalizationRoute,
    envelope: BlockAlgebra,
    provenance: Vec<BlockProvenance>,
    action: Vec<WreathMap>,
    embedding: WreathMap,
    checks: EnvelopingChecks,
}

impl GlobalizationResult {
    pub fn route(&self) -> GlobalizationRoute {
        self.route
    }

    pub fn envelope(&self) -> &BlockAlgebra {
        &self.envelope
    }

    pub fn block_count(&self) -> usize {
        self.envelope.len()
    }

    pub fn provenance(&self) -> &[BlockProvenance] {
        &self.provenance
    }

    /// `β_g`.
    pub fn action(&self, g: usize) -> &WreathMap {
        &self.action[g]
    }

    pub fn actions(&self) -> &[WreathMap] {
        &self.action
    }

    /// `φ`, from the full source algebra onto its image ideal.
    pub fn embedding(&self) -> &WreathMap {
        &self.embedding
    }

    pub fn checks(&self) -> &EnvelopingChecks {
        &self.checks
    }

    pub fn candidate(&self) -> EnvelopeCandidate {
        EnvelopeCandidate {
            envelope: self.envelope.clone(),
            action: self.action.clone(),
            embedding: self
                .embedding
                .entries()
                .map(|(_, to, twist)| (to, twist))
                .collect(),
        }
    }

    fn twisted(&self) -> TwistedAction {
        let n = self.envelope.len();
        TwistedAction {
            classes: self.envelope.blocks().iter().map(|b| b.class().to_string()).collect(),
            auts: self.envelope.blocks().iter().map(|b| b.aut().clone()).collect(),
            perm: self
                .action
                .iter()
                .map(|m| (0..n).map(|p| m.target_of(p).expect("global")).collect())
                .collect(),
            twist: self
                .action
                .iter()
                .map(|m| (0..n).map(|p| m.twist_at(p).expect("global")).collect())
                .collect(),
        }
    }
}

fn fail(checks: &mut EnvelopingChecks, which: fn(&mut EnvelopingChecks) -> &mut bool, msg: String) {
    *which(checks) = false;
    checks.failures.push(msg);
}

/// Checks a candidate against the four enveloping conditions and that `β`
/// is a global action. Returns `MalformedInput` only when the candidate
/// does not have the right shape to be checked at all.
pub fn verify_enveloping(pa: &AlgebraPartialAction, candidate: &EnvelopeCandidate) -> Result<EnvelopingChecks> {
    let grp = pa.group();
    let env = &candidate.envelope;
    let full = BlockIdeal::full(env);
    if candidate.action.len() != grp.order() {
        return Err(Error::MalformedInput(format!(
            "expected {} envelope maps, got {}",
            grp.order(),
            candidate.action.len()
        )));
    }
    if let Some(g) = candidate
        .action
        .iter()
        .position(|m| m.source() != &full || m.target() != &full)
    {
        return Err(Error::MalformedInput(format!(
            "β_{} is not an automorphism of the envelope",
            grp.name(g)
        )));
    }
    if candidate.embedding.len() != pa.algebra().len() {
        return Err(Error::MalformedInput(format!(
            "embedding covers {} blocks, the algebra has {}",
            candidate.embedding.len(),
            pa.algebra().len()
        )));
    }

    let mut checks = EnvelopingChecks {
        ideal: true,
        covers: true,
        intersection: true,
        equivariance: true,
        global_action: true,
        failures: Vec::new(),
    };
    let beta = &candidate.action;
    if !beta[grp.identity()].is_identity() {
        fail(&mut checks, |c| &mut c.global_action, "β_e is not the identity".into());
    }
    'outer: for g in grp.elements() {
        for t in grp.elements() {
            let composed = wreath_compose(&beta[g], &beta[t])?;
            if composed != beta[grp.mul(g, t)] {
                fail(
                    &mut checks,
                    |c| &mut c.global_action,
                    format!("β_{}∘β_{} ≠ β_{}", grp.name(g), grp.name(t), grp.name(grp.mul(g, t))),
                );
                break 'outer;
            }
        }
    }

    // (i): φ must be an isomorphism onto an ideal of the envelope.
    let entries: Vec<(usize, usize, usize)> = candidate
        .embedding
        .iter()
        .enumerate()
        .map(|(x, &(p, t))| (x, p, t))
        .collect();
    let phi = BlockIdeal::new(env, entries.iter().map(|e| e.1)).and_then(|image| {
        WreathMap::new(BlockIdeal::full(pa.algebra()), image, &entries)
    });
    let phi = match phi {
        Ok(phi) => phi,
        Err(e) => {
            fail(&mut checks, |c| &mut c.ideal, format!("φ is not an ideal embedding: {e}"));
            checks.covers = false;
            checks.intersection = false;
            checks.equivariance = false;
            checks.failures.push("(ii)-(iv) not evaluated without a valid φ".into());
            return Ok(checks);
        }
    };
    let image = phi.target();

    let mut reached = vec![false; env.len()];
    for m in beta {
        for &p in image.support() {
            reached[m.target_of(p).expect("global")] = true;
        }
    }
    if let Some(p) = reached.iter().position(|&r| !r) {
        fail(
            &mut checks,
            |c| &mut c.covers,
            format!("envelope block {p} is not in any translate of φ(A)"),
        );
    }

    for g in grp.elements() {
        let mut translate = vec![false; env.len()];
        for &p in image.support() {
            translate[beta[g].target_of(p).expect("global")] = true;
        }
        for x in 0..pa.algebra().len() {
            let p = phi.target_of(x).expect("full source");
            if pa.domain(g).contains(x) != translate[p] {
                fail(
                    &mut checks,
                    |c| &mut c.intersection,
                    format!("g={}: block {x} disagrees between φ(S_g) and φ(A) ∩ β_g(φ(A))", grp.name(g)),
                );
            }
        }
        for (x, y, f) in pa.map(g).entries() {
            let aut = pa.algebra().block(x).aut();
            let (py, ty) = (phi.target_of(y).unwrap(), phi.twist_at(y).unwrap());
            let (px, tx) = (phi.target_of(x).unwrap(), phi.twist_at(x).unwrap());
            let (q, b) = (beta[g].target_of(px).unwrap(), beta[g].twist_at(px).unwrap());
            if py != q || aut.mul(ty, f) != aut.mul(b, tx) {
                fail(
                    &mut checks,
                    |c| &mut c.equivariance,
                    format!("g={}, block {x}: φ∘α_g ≠ β_g∘φ", grp.name(g)),
                );
            }
        }
    }
    Ok(checks)
}

fn finish(
    pa: &AlgebraPartialAction,
    route: GlobalizationRoute,
    envelope: BlockAlgebra,
    provenance: Vec<BlockProvenance>,
    action: Vec<WreathMap>,
    embedding: Vec<(usize, usize)>,
) -> Result<GlobalizationResult> {
    let candidate = EnvelopeCandidate {
        envelope: envelope.clone(),
        action,
        embedding,
    };
    let checks = verify_enveloping(pa, &candidate)?;
    if !checks.all_pass() {
        return Err(Error::InternalInconsistency(format!(
            "constructed envelope fails its own checks:\n{checks}"
        )));
    }
    let entries: Vec<(usize, usize, usize)> = candidate
        .embedding
        .iter()
        .enumerate()
        .map(|(x, &(p, t))| (x, p, t))
        .collect();
    let image = BlockIdeal::new(&envelope, entries.iter().map(|e| e.1))?;
    let embedding = WreathMap::new(BlockIdeal::full(pa.algebra()), image, &entries)?;
    Ok(GlobalizationResult {
        route,
        envelope,
        provenance,
        action: candidate.action,
        embedding,
        checks,
    })
}

/// The envelope of an indecomposable block acted on by `H ≤ G` and extended
/// by zero: `[G:H]` copies of the block.
pub fn globalize_extension_by_zero(action: &SubgroupAutAction) -> Result<GlobalizationResult> {
    let pa = extend_by_zero_algebra(action);
    let transversal = left_transversal(action.subgroup());
    let cf = coset_factorize(&transversal)?;
    let grp = pa.group();
    let m = transversal.len();
    let envelope = BlockAlgebra::power(action.block(), m)?;
    let full = BlockIdeal::full(&envelope);
    let beta = grp
        .elements()
        .map(|g| {
            let entries: Vec<(usize, usize, usize)> = (0..m)
                .map(|i| {
                    let h = cf.h(g, i);
                    (i, cf.j(g, i), action.image(h).expect("h lies in H"))
                })
                .collect();
            WreathMap::new(full.clone(), full.clone(), &entries)
        })
        .collect::<Result<Vec<_>>>()?;
    let provenance = transversal
        .reps()
        .iter()
        .map(|&rep| BlockProvenance::Coset { rep })
        .collect();
    let identity = action.block().aut().identity();
    finish(
        &pa,
        GlobalizationRoute::ExtensionByZero,
        envelope,
        provenance,
        beta,
        vec![(0, identity)],
    )
}

/// The envelope of a partial action on K-lines: the set envelope of its
/// idempotents, one K-line per point.
pub fn globalize_k_blocks(pa: &AlgebraPartialAction) -> Result<GlobalizationResult> {
    if !pa.algebra().is_k_lines() {
        return Err(Error::NotKBlocks(pa.algebra().to_string()));
    }
    let report = pa.verify();
    if !report.all_pass() {
        return Err(Error::InvalidAction(report.to_string()));
    }
    let sets = restrict_to_idempotents(pa);
    let env = globalize_set(&sets)?;
    let envelope = BlockAlgebra::power(pa.algebra().block(0), env.size())?;
    let full = BlockIdeal::full(&envelope);
    let beta = env
        .envelope()
        .permutations()
        .iter()
        .map(|perm| {
            let entries: Vec<(usize, usize, usize)> =
                perm.iter().enumerate().map(|(p, &q)| (p, q, 0)).collect();
            WreathMap::new(full.clone(), full.clone(), &entries)
        })
        .collect::<Result<Vec<_>>>()?;
    let provenance = env
        .witnesses()
        .iter()
        .map(|&(g, position)| BlockProvenance::Orbit { g, position })
        .collect();
    let embedding = env.embedding().iter().map(|&p| (p, 0)).collect();
    finish(pa, GlobalizationRoute::KBlocks, envelope, provenance, beta, embedding)
}

/// The envelope of a partial action on `Λⁿ`.
///
/// Blocks are the classes of `G × {1..n}` under `(g, x) ~ (g·s⁻¹, α_s(x))`.
/// Each class is given coordinates at a root pair, `(e, x)` when the class
/// contains one, and the twist `τ(g, x)` records how a payload placed at
/// `(g, x)` reads in root coordinates. `β_t` moves the class of `(g, x)` to
/// that of `(tg, x)` with twist `τ(tg, x)` relative to the roots.
pub fn globalize_block_power(pa: &AlgebraPartialAction) -> Result<GlobalizationResult> {
    let alg = pa.algebra();
    if !alg.is_isotypic() {
        return Err(Error::ClassMismatch(format!("{alg} is not a power of one block")));
    }
    let report = pa.verify();
    if !report.all_pass() {
        return Err(Error::InvalidAction(report.to_string()));
    }
    let grp = pa.group();
    let block: &Block = alg.block(0);
    let aut = block.aut();
    let n = alg.len();
    let sets = restrict_to_idempotents(pa);
    let env = globalize_set(&sets)?;
    let point = |g: usize, x: usize| env.envelope().apply(g, env.embedding()[x]);
    let pair = |g: usize, x: usize| g * n + x;

    // λ@(g,x) ≡ f(λ)@(g·s⁻¹, α_s(x)), so τ(g,x) = τ(g·s⁻¹, α_s(x))·f.
    let mut adj: Vec<Vec<(usize, usize)>> = vec![Vec::new(); grp.order() * n];
    let mut edges = Vec::new();
    for g in grp.elements() {
        for s in grp.elements() {
            let gs = grp.mul(g, grp.inv(s));
            for (x, y, f) in pa.map(s).entries() {
                let (u, v) = (pair(g, x), pair(gs, y));
                adj[u].push((v, aut.inv(f)));
                adj[v].push((u, f));
                edges.push((u, v, f));
            }
        }
    }
    let mut tau: Vec<Option<usize>> = vec![None; grp.order() * n];
    let roots: Vec<(usize, usize)> = env
        .witnesses()
        .iter()
        .enumerate()
        .map(|(p, &w)| {
            env.embedding()
                .iter()
                .position(|&q| q == p)
                .map_or(w, |x| (grp.identity(), x))
        })
        .collect();
    for &(g, x) in &roots {
        let root = pair(g, x);
        tau[root] = Some(aut.identity());
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            let tu = tau[u].expect("queued pairs have a twist");
            for &(v, step) in &adj[u] {
                if tau[v].is_none() {
                    tau[v] = Some(aut.mul(tu, step));
                    queue.push_back(v);
                }
            }
        }
    }
    let tau: Vec<usize> = tau
        .into_iter()
        .map(|t| t.ok_or_else(|| Error::InternalInconsistency("unreached pair".into())))
        .collect::<Result<_>>()?;
    if let Some(&(u, v, f)) = edges.iter().find(|&&(u, v, f)| tau[u] != aut.mul(tau[v], f)) {
        return Err(Error::TwistTransportConflict(format!(
            "({}, block {}) and ({}, block {}) disagree by {}",
            grp.name(u / n),
            u % n,
            grp.name(v / n),
            v % n,
            aut.name(f)
        )));
    }

    let envelope = BlockAlgebra::power(block, env.size())?;
    let full = BlockIdeal::full(&envelope);
    let beta = grp
        .elements()
        .map(|t| {
            let entries: Vec<(usize, usize, usize)> = roots
                .iter()
                .enumerate()
                .map(|(p, &(g, x))| {
                    let tg = grp.mul(t, g);
                    (p, point(tg, x), tau[pair(tg, x)])
                })
                .collect();
            WreathMap::new(full.clone(), full.clone(), &entries)
        })
        .collect::<Result<Vec<_>>>()?;
    let provenance = roots
        .iter()
        .map(|&(g, position)| BlockProvenance::Orbit { g, position })
        .collect();
    let embedding = (0..n)
        .map(|x| (point(grp.identity(), x), tau[pair(grp.identity(), x)]))
        .collect();
    finish(pa, GlobalizationRoute::BlockPower, envelope, provenance, beta, embedding)
}

/// Globalizes any valid partial action on a block algebra, dispatching on
/// its shape.
pub fn globalize(pa: &AlgebraPartialAction) -> Result<GlobalizationResult> {
    let alg = pa.algebra();
    if alg.is_indecomposable() {
        return globalize_extension_by_zero(&classify_indecomposable(pa)?);
    }
    if alg.is_k_lines() {
        return globalize_k_blocks(pa);
    }
    if alg.is_isotypic() {
        return globalize_block_power(pa);
    }
    let report = pa.verify();
    if !report.all_pass() {
        return Err(Error::InvalidAction(report.to_string()));
    }
    let grp = pa.group();
    let components = split_partial_action(pa)?;
    let mut parts = Vec::with_capacity(components.len());
    for c in &components {
        parts.push(globalize(&c.action)?);
    }
    let envelope = BlockAlgebra::product(parts.iter().map(|r| &r.envelope))?;
    let full = BlockIdeal::full(&envelope);
    let mut provenance = Vec::new();
    let mut embedding = vec![(0, 0); alg.len()];
    let mut entries = vec![Vec::new(); grp.order()];
    let mut offset = 0;
    for (c, part) in components.iter().zip(&parts) {
        for prov in &part.provenance {
            provenance.push(match *prov {
                BlockProvenance::Orbit { g, position } => BlockProvenance::Orbit {
                    g,
                    position: c.positions[position],
                },
                coset => coset,
            });
        }
        for (local, to, twist) in part.embedding.entries() {
            embedding[c.positions[local]] = (to + offset, twist);
        }
        for (g, m) in part.action.iter().enumerate() {
            entries[g].extend(m.entries().map(|(p, q, t)| (p + offset, q + offset, t)));
        }
        offset += part.envelope.len();
    }
    let beta = entries
        .iter()
        .map(|es| WreathMap::new(full.clone(), full.clone(), es))
        .collect::<Result<Vec<_>>>()?;
    finish(pa, GlobalizationRoute::Mixed, envelope, provenance, beta, embedding)
}

/// `[G : H]` for a partial action on an indecomposable algebra.
pub fn envelope_block_count(pa: &AlgebraPartialAction) -> Result<usize> {
    Ok(classify_indecomposable(pa)?.subgroup().index())
}

/// Searches for an equivariant isomorphism `f` between two envelopes with
/// `f∘φ_a = φ_b`. Entry `p` of the result is `(f(p), twist)`.
pub fn algebra_envelopes_equivalent(
    a: &GlobalizationResult,
    b: &GlobalizationResult,
) -> Option<Vec<(usize, usize)>> {
    if a.action.len() != b.action.len() || a.embedding.source() != b.embedding.source() {
        return None;
    }
    let fixed: Vec<(usize, usize, usize)> = a
        .embedding
        .entries()
        .zip(b.embedding.entries())
        .map(|((x, pa, ta), (_, pb, tb))| {
            let aut = a.embedding.source().algebra().block(x).aut();
            (pa, pb, aut.mul(tb, aut.inv(ta)))
        })
        .collect();
    find_equivariant_iso(&a.twisted(), &b.twisted(), &fixed)
}
