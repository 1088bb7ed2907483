//! The JSON workbench document and its conversion into library values.
//!
//! A document names its groups, algebras and actions; actions refer to groups
//! and algebras either by name or inline.

use std::collections::BTreeMap;
use std::fmt;
use std::marker::PhantomData;

use partial_actions::algebra_action::{extend_by_zero_algebra, AlgebraPartialAction, SubgroupAutAction};
use partial_actions::block::{Block, BlockAlgebra};
use partial_actions::group::{
    cyclic_group, subgroup_closure, symmetric_group, FiniteGroup,
};
use partial_actions::set_action::SetPartialAction;
use serde::de::{Deserializer, MapAccess, Visitor};
use serde::{Deserialize, Serialize};

use crate::CliError;

pub const FORMAT_VERSION: &str = "1";

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase", deny_unknown_fields)]
pub enum GroupDoc {
    Cayley {
        table: Vec<Vec<usize>>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        names: Option<Vec<String>>,
    },
    Symmetric {
        n: usize,
    },
    Cyclic {
        n: usize,
    },
}

impl GroupDoc {
    pub fn build(&self) -> Result<FiniteGroup, CliError> {
        let g = match self {
            GroupDoc::Cayley { table, names } => FiniteGroup::from_table(table.clone(), names.clone()),
            GroupDoc::Symmetric { n } => symmetric_group(*n),
            GroupDoc::Cyclic { n } => cyclic_group(*n),
        };
        g.map_err(|e| CliError::Input(format!("bad group: {e}")))
    }

    /// `symmetric:3`, `cyclic:6`, or a JSON group document.
    pub fn parse_spec(spec: &str) -> Result<GroupDoc, CliError> {
        let spec = spec.trim();
        if spec.starts_with('{') {
            return serde_json::from_str(spec).map_err(|e| CliError::Parse(format!("group: {e}")));
        }
        let (kind, n) = spec
            .split_once(':')
            .ok_or_else(|| CliError::Input(format!("group spec `{spec}` is not kind:n")))?;
        let n: usize = n
            .parse()
            .map_err(|_| CliError::Input(format!("group spec `{spec}` has a bad order")))?;
        match kind {
            "symmetric" => Ok(GroupDoc::Symmetric { n }),
            "cyclic" => Ok(GroupDoc::Cyclic { n }),
            _ => Err(CliError::Input(format!("unknown group kind `{kind}`"))),
        }
    }
}

/// A name from the document's `groups` section, or an inline group.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum GroupRef {
    Name(String),
    Inline(GroupDoc),
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BlockDoc {
    pub class: String,
    pub aut: GroupRef,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraDoc {
    pub blocks: Vec<BlockDoc>,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum AlgebraRef {
    Name(String),
    Inline(AlgebraDoc),
}

/// `α_g` sends block `from` to block `to`, twisted by the named automorphism
/// (the identity when omitted).
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BlockEntry {
    pub from: usize,
    pub to: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub twist: Option<String>,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum ActionDoc {
    /// Omitted elements have empty domain, except the identity, which
    /// defaults to the identity map.
    Set {
        group: GroupRef,
        carrier: Vec<String>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        domains: Option<BTreeMap<String, Vec<String>>>,
        #[serde(default)]
        maps: BTreeMap<String, BTreeMap<String, String>>,
    },
    /// Domains are read off the entries; the same defaults as for sets.
    Algebra {
        group: GroupRef,
        algebra: AlgebraRef,
        #[serde(default)]
        maps: BTreeMap<String, Vec<BlockEntry>>,
    },
    /// One block acted on by the subgroup generated by `generators`, with
    /// `S_g = 0` elsewhere. `rho` gives the automorphism of each generator.
    ExtensionByZero {
        group: GroupRef,
        generators: Vec<String>,
        block: BlockDoc,
        #[serde(default)]
        rho: BTreeMap<String, String>,
    },
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WorkbenchDocument {
    pub version: String,
    #[serde(default, deserialize_with = "unique_keys", skip_serializing_if = "BTreeMap::is_empty")]
    pub groups: BTreeMap<String, GroupDoc>,
    #[serde(default, deserialize_with = "unique_keys", skip_serializing_if = "BTreeMap::is_empty")]
    pub algebras: BTreeMap<String, AlgebraDoc>,
    #[serde(deserialize_with = "unique_keys")]
    pub actions: BTreeMap<String, ActionDoc>,
}

fn unique_keys<'de, D, T>(de: D) -> Result<BTreeMap<String, T>, D::Error>
where
    D: Deserializer<'de>,
    T: Deserialize<'de>,
{
    struct Unique<T>(PhantomData<T>);
    impl<'de, T: Deserialize<'de>> Visitor<'de> for Unique<T> {
        type Value = BTreeMap<String, T>;

        fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
            f.write_str("a map with unique names")
        }

        fn visit_map<A: MapAccess<'de>>(self, mut access: A) -> Result<Self::Value, A::Error> {
            let mut out = BTreeMap::new();
            while let Some((k, v)) = access.next_entry::<String, T>()? {
                if out.contains_key(&k) {
                    return Err(serde::de::Error::custom(format!("duplicate name `{k}`")));
                }
                out.insert(k, v);
            }
            Ok(out)
        }
    }
    de.deserialize_map(Unique(PhantomData))
}

/// A resolved action, ready for the library.
#[derive(Clone, Debug)]
pub enum Action {
    Set(SetPartialAction),
    Algebra(AlgebraPartialAction),
}

impl WorkbenchDocument {
    pub fn parse(text: &str) -> Result<Self, CliError> {
        let doc: WorkbenchDocument =
            serde_json::from_str(text).map_err(|e| CliError::Parse(e.to_string()))?;
        if doc.version != FORMAT_VERSION {
            return Err(CliError::Input(format!(
                "unsupported format version `{}` (expected `{FORMAT_VERSION}`)",
                doc.version
            )));
        }
        Ok(doc)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("documents serialize")
    }

    pub fn with_action(name: &str, action: ActionDoc) -> Self {
        WorkbenchDocument {
            version: FORMAT_VERSION.into(),
            groups: BTreeMap::new(),
            algebras: BTreeMap::new(),
            actions: BTreeMap::from([(name.to_string(), action)]),
        }
    }

    pub fn group(&self, r: &GroupRef) -> Result<FiniteGroup, CliError> {
        match r {
            GroupRef::Inline(doc) => doc.build(),
            GroupRef::Name(name) => self
                .groups
                .get(name)
                .ok_or_else(|| CliError::Input(format!("unknown group `{name}`")))?
                .build(),
        }
    }

    fn block(&self, b: &BlockDoc) -> Result<Block, CliError> {
        Ok(Block::new(b.class.clone(), self.group(&b.aut)?))
    }

    pub fn algebra(&self, r: &AlgebraRef) -> Result<BlockAlgebra, CliError> {
        let doc = match r {
            AlgebraRef::Inline(doc) => doc,
            AlgebraRef::Name(name) => self
                .algebras
                .get(name)
                .ok_or_else(|| CliError::Input(format!("unknown algebra `{name}`")))?,
        };
        let blocks = doc.blocks.iter().map(|b| self.block(b)).collect::<Result<_, _>>()?;
        BlockAlgebra::new(blocks).map_err(|e| CliError::Input(format!("bad algebra: {e}")))
    }

    /// Resolves every action, in name order.
    pub fn actions(&self) -> Result<Vec<(String, Action)>, CliError> {
        self.actions
            .iter()
            .map(|(name, doc)| {
                self.resolve(doc)
                    .map(|a| (name.clone(), a))
                    .map_err(|e| CliError::Input(format!("action `{name}`: {e}")))
            })
            .collect()
    }

    pub fn resolve(&self, doc: &ActionDoc) -> Result<Action, CliError> {
        match doc {
            ActionDoc::Set {
                group,
                carrier,
                domains,
                maps,
            } => self.resolve_set(&self.group(group)?, carrier, domains.as_ref(), maps),
            ActionDoc::Algebra { group, algebra, maps } => {
                let group = self.group(group)?;
                let algebra = self.algebra(algebra)?;
                resolve_algebra(group, algebra, maps)
            }
            ActionDoc::ExtensionByZero {
                group,
                generators,
                block,
                rho,
            } => {
                let group = self.group(group)?;
                let block = self.block(block)?;
                Ok(Action::Algebra(extend_by_zero_algebra(&hom_from_generators(
                    &group, generators, block, rho,
                )?)))
            }
        }
    }

    fn resolve_set(
        &self,
        group: &FiniteGroup,
        carrier: &[String],
        domains: Option<&BTreeMap<String, Vec<String>>>,
        maps: &BTreeMap<String, BTreeMap<String, String>>,
    ) -> Result<Action, CliError> {
        let point = |x: &str| {
            carrier
                .iter()
                .position(|c| c == x)
                .ok_or_else(|| CliError::Input(format!("unknown point `{x}`")))
        };
        for name in maps.keys().chain(domains.into_iter().flat_map(|d| d.keys())) {
            element(group, name)?;
        }
        let e = group.identity();
        let e_given = maps.contains_key(group.name(e))
            || domains.is_some_and(|d| d.contains_key(group.name(e)));
        let mut dom = Vec::with_capacity(group.order());
        let mut pairs = Vec::with_capacity(group.order());
        for g in group.elements() {
            let name = group.name(g);
            if g == e && !e_given {
                dom.push((0..carrier.len()).collect());
                pairs.push((0..carrier.len()).map(|x| (x, x)).collect());
                continue;
            }
            let m: Vec<(usize, usize)> = maps
                .get(name)
                .into_iter()
                .flatten()
                .map(|(x, y)| Ok((point(x)?, point(y)?)))
                .collect::<Result<_, CliError>>()?;
            let d: Vec<usize> = match domains.and_then(|d| d.get(name)) {
                Some(d) => d.iter().map(|x| point(x)).collect::<Result<_, _>>()?,
                None => m.iter().map(|&(_, y)| y).collect(),
            };
            dom.push(d);
            pairs.push(m);
        }
        SetPartialAction::new(group.clone(), carrier.to_vec(), dom, pairs)
            .map(Action::Set)
            .map_err(|e| CliError::Input(e.to_string()))
    }
}

fn element(group: &FiniteGroup, name: &str) -> Result<usize, CliError> {
    group
        .element(name)
        .ok_or_else(|| CliError::Input(format!("unknown group element `{name}`")))
}

fn resolve_algebra(
    group: FiniteGroup,
    algebra: BlockAlgebra,
    maps: &BTreeMap<String, Vec<BlockEntry>>,
) -> Result<Action, CliError> {
    for name in maps.keys() {
        element(&group, name)?;
    }
    let e = group.identity();
    let mut entries = Vec::with_capacity(group.order());
    for g in group.elements() {
        let es = match maps.get(group.name(g)) {
            None if g == e => (0..algebra.len())
                .map(|p| (p, p, algebra.block(p).aut().identity()))
                .collect(),
            None => Vec::new(),
            Some(list) => list
                .iter()
                .map(|b| {
                    let aut = algebra
                        .blocks()
                        .get(b.from)
                        .ok_or_else(|| CliError::Input(format!("block {} does not exist", b.from)))?
                        .aut();
                    let twist = match &b.twist {
                        None => aut.identity(),
                        Some(t) => aut.element(t).ok_or_else(|| {
                            CliError::Input(format!("`{t}` is not an automorphism of block {}", b.from))
                        })?,
                    };
                    Ok((b.from, b.to, twist))
                })
                .collect::<Result<_, CliError>>()?,
        };
        entries.push(es);
    }
    AlgebraPartialAction::from_entries(group, algebra, entries)
        .map(Action::Algebra)
        .map_err(|e| CliError::Input(e.to_string()))
}

/// Extends `rho` on the generators to the subgroup they generate.
pub fn hom_from_generators(
    group: &FiniteGroup,
    generators: &[String],
    block: Block,
    rho: &BTreeMap<String, String>,
) -> Result<SubgroupAutAction, CliError> {
    let gens = generators
        .iter()
        .map(|g| element(group, g))
        .collect::<Result<Vec<_>, _>>()?;
    for name in rho.keys() {
        if !generators.contains(name) {
            return Err(CliError::Input(format!("rho names `{name}`, which is not a generator")));
        }
    }
    let aut = block.aut().clone();
    let gen_images = generators
        .iter()
        .map(|g| match rho.get(g) {
            None => Ok(aut.identity()),
            Some(a) => aut
                .element(a)
                .ok_or_else(|| CliError::Input(format!("`{a}` is not an automorphism"))),
        })
        .collect::<Result<Vec<_>, _>>()?;
    let h = subgroup_closure(group, &gens);
    let mut images = vec![None; h.order()];
    images[h.local_index(group.identity()).expect("e ∈ H")] = Some(aut.identity());
    let mut queue = vec![group.identity()];
    while let Some(x) = queue.pop() {
        let fx = images[h.local_index(x).expect("member")].expect("assigned");
        for (&s, &fs) in gens.iter().zip(&gen_images) {
            let y = group.mul(s, x);
            let k = h.local_index(y).expect("closed");
            if images[k].is_none() {
                images[k] = Some(aut.mul(fs, fx));
                queue.push(y);
            }
        }
    }
    let images = images.into_iter().map(|i| i.expect("generated")).collect();
    SubgroupAutAction::new(h, block, images).map_err(|e| CliError::Input(e.to_string()))
}

/// Claimed rows of a j/h table, as read by `factorize --compare`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ClaimedTable {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub source: Option<String>,
    pub rows: Vec<ClaimedRowDoc>,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ClaimedRowDoc {
    pub g: String,
    pub g_i: String,
    pub j: String,
    pub h: String,
}

impl ClaimedTable {
    pub fn parse(text: &str) -> Result<Self, CliError> {
        serde_json::from_str(text).map_err(|e| CliError::Parse(e.to_string()))
    }
}
