use std::collections::BTreeMap;

use super::{BlockAlgebra, BlockIdeal};
use crate::error::{Error, Result};

/// An isomorphism between block ideals: `Σ λ_i e_i ↦ Σ f_i(λ_i) e_{η(i)}`.
///
/// `η` is a bijection between supports that preserves block classes and each
/// twist `f_i` is an automorphism of block `i`, given as an element index of
/// that block's automorphism group.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct WreathMap {
    source: BlockIdeal,
    target: BlockIdeal,
    // source position -> (target position, twist)
    entries: BTreeMap<usize, (usize, usize)>,
}

impl WreathMap {
    /// `entries` lists `(i, η(i), f_i)` for every `i` in the source support.
    pub fn new(source: BlockIdeal, target: BlockIdeal, entries: &[(usize, usize, usize)]) -> Result<Self> {
        let mut map = BTreeMap::new();
        let mut hit = BTreeMap::new();
        for &(from, to, twist) in entries {
            if !source.contains(from) {
                return Err(Error::MalformedInput(format!(
                    "position {from} is not in the source support"
                )));
            }
            if !target.contains(to) {
                return Err(Error::MalformedInput(format!(
                    "position {to} is not in the target support"
                )));
            }
            let sb = source.algebra().block(from);
            let tb = target.algebra().block(to);
            if sb.class() != tb.class() || sb.aut() != tb.aut() {
                return Err(Error::ClassMismatch(format!(
                    "block {from} ({}) cannot map to block {to} ({})",
                    sb.class(),
                    tb.class()
                )));
            }
            if twist >= sb.aut().order() {
                return Err(Error::MalformedInput(format!(
                    "twist {twist} is not an automorphism of block {from}"
                )));
            }
            if map.insert(from, (to, twist)).is_some() {
                return Err(Error::MalformedInput(format!("position {from} is assigned twice")));
            }
            if hit.insert(to, from).is_some() {
                return Err(Error::MalformedInput(format!("position {to} is hit twice")));
            }
        }
        if map.len() != source.support().len() || hit.len() != target.support().len() {
            return Err(Error::MalformedInput(
                "the position map is not a bijection between the supports".into(),
            ));
        }
        Ok(WreathMap {
            source,
            target,
            entries: map,
        })
    }

    /// The identity of `ideal`.
    pub fn identity(ideal: &BlockIdeal) -> Self {
        let entries = ideal
            .support()
            .iter()
            .map(|&p| (p, (p, ideal.algebra().block(p).aut().identity())))
            .collect();
        WreathMap {
            source: ideal.clone(),
            target: ideal.clone(),
            entries,
        }
    }

    /// The empty map between zero ideals.
    pub fn zero(source_algebra: &BlockAlgebra, target_algebra: &BlockAlgebra) -> Self {
        WreathMap {
            source: BlockIdeal::zero(source_algebra),
            target: BlockIdeal::zero(target_algebra),
            entries: BTreeMap::new(),
        }
    }

    pub fn source(&self) -> &BlockIdeal {
        &self.source
    }

    pub fn target(&self) -> &BlockIdeal {
        &self.target
    }

    /// `η(i)`.
    pub fn target_of(&self, position: usize) -> Option<usize> {
        self.entries.get(&position).map(|&(to, _)| to)
    }

    /// `f_i`.
    pub fn twist_at(&self, position: usize) -> Option<usize> {
        self.entries.get(&position).map(|&(_, twist)| twist)
    }

    /// `(i, η(i), f_i)` in increasing `i`.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, usize)> + '_ {
        self.entries.iter().map(|(&from, &(to, twist))| (from, to, twist))
    }

    pub fn is_identity(&self) -> bool {
        self.source == self.target
            && self.entries.iter().all(|(&from, &(to, twist))| {
                from == to && twist == self.source.algebra().block(from).aut().identity()
            })
    }

    pub fn inverse(&self) -> WreathMap {
        let entries = self
            .entries
            .iter()
            .map(|(&from, &(to, twist))| {
                let aut = self.source.algebra().block(from).aut();
                (to, (from, aut.inv(twist)))
            })
            .collect();
        WreathMap {
            source: self.target.clone(),
            target: self.source.clone(),
            entries,
        }
    }
}

/// A payload `λ` living in one block, with the automorphism applied to it so
/// far.
#[derive(Clone, PartialEq, Eq, Debug, PartialOrd, Ord)]
pub struct Payload {
    pub token: String,
    pub twist: usize,
}

/// `Σ λ_i e_i` with symbolic payloads, keyed by block position.
pub type FormalSum = BTreeMap<usize, Payload>;

/// Applies a wreath map to a formal sum supported on its source.
pub fn wreath_apply(w: &WreathMap, element: &FormalSum) -> Result<FormalSum> {
    let mut out = FormalSum::new();
    for (&p, payload) in element {
        let (to, twist) = w.entries.get(&p).copied().ok_or_else(|| {
            Error::SupportViolation(format!("position {p} is outside the source ideal"))
        })?;
        let aut = w.source.algebra().block(p).aut();
        out.insert(
            to,
            Payload {
                token: payload.token.clone(),
                twist: aut.mul(twist, payload.twist),
            },
        );
    }
    Ok(out)
}

/// `w₂ ∘ w₁`: positions compose as `η₂∘η₁` and the twist at `i` is
/// `f₂,η₁(i) · f₁,i`.
pub fn wreath_compose(w2: &WreathMap, w1: &WreathMap) -> Result<WreathMap> {
    if w1.target != w2.source {
        return Err(Error::CompositionMismatch(
            "the target of the first map is not the source of the second".into(),
        ));
    }
    let entries = w1
        .entries
        .iter()
        .map(|(&i, &(mid, f1))| {
            let (to, f2) = w2.entries[&mid];
            let aut = w1.source.algebra().block(i).aut();
            (i, (to, aut.mul(f2, f1)))
        })
        .collect();
    Ok(WreathMap {
        source: w1.source.clone(),
        target: w2.target.clone(),
        entries,
    })
}
