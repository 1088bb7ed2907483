//! Algebras modeled as finite products of indecomposable blocks.
//!
//! A block is known only through an isomorphism-class label and its group of
//! automorphisms. Ideals generated by central idempotents are sums of whole
//! blocks, so an ideal is its support: a set of block positions. Every
//! isomorphism between such ideals moves blocks to blocks of the same class
//! and twists each one by an automorphism, which is what [`WreathMap`] records.

mod wreath;

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::group::{trivial_group, FiniteGroup};

pub use wreath::{wreath_apply, wreath_compose, FormalSum, Payload, WreathMap};

/// An indecomposable algebra, up to isomorphism.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Block {
    class: String,
    aut: FiniteGroup,
}

impl Block {
    pub fn new(class: impl Into<String>, aut: FiniteGroup) -> Self {
        Block {
            class: class.into(),
            aut,
        }
    }

    /// A copy of the base field: no automorphisms besides the identity.
    pub fn k_line() -> Self {
        Block::new("K", trivial_group())
    }

    pub fn class(&self) -> &str {
        &self.class
    }

    pub fn aut(&self) -> &FiniteGroup {
        &self.aut
    }

    pub fn is_k_line(&self) -> bool {
        self.aut.is_trivial()
    }
}

/// `Λ_1 × … × Λ_n`, one primitive central idempotent per position.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BlockAlgebra {
    blocks: Arc<Vec<Block>>,
}

impl BlockAlgebra {
    /// Blocks sharing a class label must carry the same automorphism group.
    pub fn new(blocks: Vec<Block>) -> Result<Self> {
        if blocks.is_empty() {
            return Err(Error::MalformedInput("a block algebra needs at least one block".into()));
        }
        for (i, a) in blocks.iter().enumerate() {
            if let Some(b) = blocks[..i].iter().find(|b| b.class == a.class) {
                if b.aut != a.aut {
                    return Err(Error::ClassMismatch(format!(
                        "blocks of class `{}` disagree on their automorphism group",
                        a.class
                    )));
                }
            }
        }
        Ok(BlockAlgebra {
            blocks: Arc::new(blocks),
        })
    }

    /// `Λⁿ`.
    pub fn power(block: &Block, n: usize) -> Result<Self> {
        BlockAlgebra::new(vec![block.clone(); n])
    }

    /// `K e_1 ⊕ … ⊕ K e_n`.
    pub fn k_lines(n: usize) -> Result<Self> {
        BlockAlgebra::power(&Block::k_line(), n)
    }

    pub fn blocks(&self) -> &[Block] {
        &self.blocks
    }

    pub fn block(&self, position: usize) -> &Block {
        &self.blocks[position]
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn is_indecomposable(&self) -> bool {
        self.blocks.len() == 1
    }

    /// Whether every block is a K-line of one common class.
    pub fn is_k_lines(&self) -> bool {
        self.blocks.iter().all(Block::is_k_line)
            && self.blocks.iter().all(|b| b.class == self.blocks[0].class)
    }

    /// Whether all blocks share one class, i.e. the algebra is `Λⁿ`.
    pub fn is_isotypic(&self) -> bool {
        self.blocks.iter().all(|b| b.class == self.blocks[0].class)
    }

    /// The blocks at `positions`, in that order, as an algebra of their own.
    pub fn sub_algebra(&self, positions: &[usize]) -> Result<BlockAlgebra> {
        BlockAlgebra::new(positions.iter().map(|&p| self.blocks[p].clone()).collect())
    }

    /// Concatenation of the blocks of several algebras.
    pub fn product<'a>(parts: impl IntoIterator<Item = &'a BlockAlgebra>) -> Result<BlockAlgebra> {
        BlockAlgebra::new(
            parts
                .into_iter()
                .flat_map(|a| a.blocks.iter().cloned())
                .collect(),
        )
    }
}

impl fmt::Display for BlockAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<&str> = self.blocks.iter().map(|b| b.class.as_str()).collect();
        write!(f, "{}", parts.join(" × "))
    }
}

/// The ideal generated by the central idempotent `Σ_{i∈support} e_i`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BlockIdeal {
    algebra: BlockAlgebra,
    support: Vec<usize>,
}

impl BlockIdeal {
    pub fn new(algebra: &BlockAlgebra, support: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut support: Vec<usize> = support.into_iter().collect();
        support.sort_unstable();
        support.dedup();
        if let Some(&bad) = support.iter().find(|&&p| p >= algebra.len()) {
            return Err(Error::MalformedInput(format!(
                "block position {bad} is out of range for {} blocks",
                algebra.len()
            )));
        }
        Ok(BlockIdeal {
            algebra: algebra.clone(),
            support,
        })
    }

    pub fn zero(algebra: &BlockAlgebra) -> Self {
        BlockIdeal {
            algebra: algebra.clone(),
            support: Vec::new(),
        }
    }

    pub fn full(algebra: &BlockAlgebra) -> Self {
        BlockIdeal {
            algebra: algebra.clone(),
            support: (0..algebra.len()).collect(),
        }
    }

    pub fn algebra(&self) -> &BlockAlgebra {
        &self.algebra
    }

    pub fn support(&self) -> &[usize] {
        &self.support
    }

    pub fn contains(&self, position: usize) -> bool {
        self.support.binary_search(&position).is_ok()
    }

    pub fn is_zero(&self) -> bool {
        self.support.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.support.len() == self.algebra.len()
    }

    /// Class labels of the supported blocks, sorted.
    pub fn class_multiset(&self) -> Vec<&str> {
        let mut classes: Vec<&str> = self
            .support
            .iter()
            .map(|&p| self.algebra.block(p).class())
            .collect();
        classes.sort_unstable();
        classes
    }
}

/// `ψ(I) = {e_i : e_i·I ≠ 0}`, the primitive idempotents under the ideal.
pub fn ideal_psi(ideal: &BlockIdeal) -> &[usize] {
    ideal.support()
}

/// Two ideals are isomorphic iff their blocks agree as a multiset of classes.
/// On `⊕ K e_i` this reduces to `#ψ(I₁) = #ψ(I₂)`.
pub fn ideals_isomorphic(a: &BlockIdeal, b: &BlockIdeal) -> bool {
    a.class_multiset() == b.class_multiset()
}

/// The coordinate-transport isomorphism `Σ λ_x e_x ↦ Σ λ_x e_{θ(x)}` for a
/// bijection `θ: ψ(I₁) → ψ(I₂)` given as `(x, θ(x))` pairs.
pub fn make_ideal_iso(
    source: &BlockIdeal,
    target: &BlockIdeal,
    theta: &[(usize, usize)],
) -> Result<WreathMap> {
    let entries = theta
        .iter()
        .map(|&(x, y)| {
            let identity = source
                .algebra()
                .blocks()
                .get(x)
                .map_or(0, |b| b.aut().identity());
            (x, y, identity)
        })
        .collect::<Vec<_>>();
    WreathMap::new(source.clone(), target.clone(), &entries)
}

/// Positions grouped by class, classes in order of first occurrence.
pub fn decompose_isotypic(algebra: &BlockAlgebra) -> Vec<(String, Vec<usize>)> {
    let mut out: Vec<(String, Vec<usize>)> = Vec::new();
    for (p, block) in algebra.blocks().iter().enumerate() {
        match out.iter_mut().find(|(c, _)| c == block.class()) {
            Some((_, positions)) => positions.push(p),
            None => out.push((block.class().to_string(), vec![p])),
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::cyclic_group;

    fn z2_block(class: &str) -> Block {
        Block::new(class, cyclic_group(2).unwrap())
    }

    #[test]
    fn psi_examples() {
        let k3 = BlockAlgebra::k_lines(3).unwrap();
        assert!(ideal_psi(&BlockIdeal::zero(&k3)).is_empty());
        assert_eq!(ideal_psi(&BlockIdeal::full(&k3)), [0, 1, 2]);
        assert_eq!(ideal_psi(&BlockIdeal::new(&k3, [2, 0]).unwrap()), [0, 2]);
        assert!(BlockIdeal::new(&k3, [3]).is_err());
    }

    #[test]
    fn isomorphism_of_ideals() {
        let k3 = BlockAlgebra::k_lines(3).unwrap();
        let i1 = BlockIdeal::new(&k3, [0]).unwrap();
        let i3 = BlockIdeal::new(&k3, [2]).unwrap();
        let i12 = BlockIdeal::new(&k3, [0, 1]).unwrap();
        assert!(ideals_isomorphic(&i1, &i3));
        assert!(ideals_isomorphic(&i12, &i12));
        assert!(!ideals_isomorphic(&i1, &i12));

        let mixed = BlockAlgebra::new(vec![z2_block("L1"), z2_block("L2")]).unwrap();
        let a = BlockIdeal::new(&mixed, [0]).unwrap();
        let b = BlockIdeal::new(&mixed, [1]).unwrap();
        assert!(!ideals_isomorphic(&a, &b));
    }

    #[test]
    fn ideal_iso_construction() {
        let k3 = BlockAlgebra::k_lines(3).unwrap();
        let i1 = BlockIdeal::new(&k3, [0]).unwrap();
        let i3 = BlockIdeal::new(&k3, [2]).unwrap();
        let w = make_ideal_iso(&i1, &i3, &[(0, 2)]).unwrap();
        assert_eq!(w.target_of(0), Some(2));
        let id = make_ideal_iso(&i1, &i1, &[(0, 0)]).unwrap();
        assert!(id.is_identity());

        let mixed = BlockAlgebra::new(vec![z2_block("L1"), z2_block("L2")]).unwrap();
        let a = BlockIdeal::new(&mixed, [0]).unwrap();
        let b = BlockIdeal::new(&mixed, [1]).unwrap();
        assert!(matches!(
            make_ideal_iso(&a, &b, &[(0, 1)]),
            Err(Error::ClassMismatch(_))
        ));
    }

    #[test]
    fn isotypic_components() {
        let l1 = z2_block("L1");
        let l2 = Block::new("L2", trivial_group());
        let alg = BlockAlgebra::new(vec![l1.clone(), l1.clone(), l2]).unwrap();
        assert_eq!(
            decompose_isotypic(&alg),
            vec![("L1".to_string(), vec![0, 1]), ("L2".to_string(), vec![2])]
        );
        assert_eq!(decompose_isotypic(&BlockAlgebra::power(&l1, 3).unwrap()).len(), 1);
        let k5 = BlockAlgebra::k_lines(5).unwrap();
        assert_eq!(decompose_isotypic(&k5), vec![("K".to_string(), vec![0, 1, 2, 3, 4])]);
    }

    #[test]
    fn class_labels_must_agree_on_automorphisms() {
        let a = z2_block("L");
        let b = Block::new("L", trivial_group());
        assert!(matches!(BlockAlgebra::new(vec![a, b]), Err(Error::ClassMismatch(_))));
        assert!(BlockAlgebra::new(vec![]).is_err());
    }
}
