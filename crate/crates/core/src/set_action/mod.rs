//! Partial actions of a finite group on a finite set.
//!
//! A partial action assigns to every `g` a domain `D_g ⊆ X` and a bijection
//! `α_g: D_{g⁻¹} → D_g`. Points are the indices `0..|X|`; the carrier keeps a
//! display label for each. Empty domains are stored explicitly.

mod enumerate;
mod globalize;
mod ops;

use std::fmt;

use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::report::{Axiom, VerificationReport};

pub use enumerate::{enumerate_partial_actions, MAX_ENUMERATION_CARRIER, MAX_ENUMERATION_ORDER};
pub use globalize::{envelopes_equivalent, globalize_set, verify_set_envelope, SetGlobalization};
pub use ops::{extend_by_zero, global_part, restrict_global};

/// A well-formed candidate partial action. Well-formedness only means every
/// `α_g` is a bijection `D_{g⁻¹} → D_g`; the axioms are checked by
/// [`SetPartialAction::verify`].
#[derive(Clone, PartialEq, Eq)]
pub struct SetPartialAction {
    group: FiniteGroup,
    carrier: Vec<String>,
    domains: Vec<Vec<bool>>,
    // maps[g][x] = α_g(x) for x ∈ D_{g⁻¹}.
    maps: Vec<Vec<Option<usize>>>,
}

impl SetPartialAction {
    /// Builds a candidate from explicit domains and maps, given as
    /// `(x, α_g(x))` pairs for each `g`.
    pub fn new(
        group: FiniteGroup,
        carrier: Vec<String>,
        domains: Vec<Vec<usize>>,
        maps: Vec<Vec<(usize, usize)>>,
    ) -> Result<Self> {
        let n = carrier.len();
        let order = group.order();
        if domains.len() != order || maps.len() != order {
            return Err(Error::MalformedInput(format!(
                "expected {order} domains and maps, got {} and {}",
                domains.len(),
                maps.len()
            )));
        }
        let mut dom_masks = Vec::with_capacity(order);
        for (g, dom) in domains.iter().enumerate() {
            let mut mask = vec![false; n];
            for &x in dom {
                if x >= n {
                    return Err(Error::MalformedInput(format!(
                        "domain of {} contains unknown point {x}",
                        group.name(g)
                    )));
                }
                mask[x] = true;
            }
            dom_masks.push(mask);
        }
        let mut table = Vec::with_capacity(order);
        for (g, pairs) in maps.iter().enumerate() {
            let mut row = vec![None; n];
            for &(x, y) in pairs {
                if x >= n || y >= n {
                    return Err(Error::MalformedInput(format!(
                        "map of {} mentions an unknown point",
                        group.name(g)
                    )));
                }
                if row[x].replace(y).is_some() {
                    return Err(Error::MalformedInput(format!(
                        "map of {} assigns {} twice",
                        group.name(g),
                        carrier[x]
                    )));
                }
            }
            table.push(row);
        }
        let action = SetPartialAction {
            group,
            carrier,
            domains: dom_masks,
            maps: table,
        };
        action.check_well_formed()?;
        Ok(action)
    }

    /// Builds a candidate from the maps alone; `D_g` is taken to be the image
    /// of `α_g`.
    pub fn from_maps(
        group: FiniteGroup,
        carrier: Vec<String>,
        maps: Vec<Vec<Option<usize>>>,
    ) -> Result<Self> {
        let n = carrier.len();
        if maps.len() != group.order() || maps.iter().any(|m| m.len() != n) {
            return Err(Error::MalformedInput("map table has the wrong shape".into()));
        }
        let mut domains = vec![vec![false; n]; group.order()];
        for (g, row) in maps.iter().enumerate() {
            for &y in row.iter().flatten() {
                if y >= n {
                    return Err(Error::MalformedInput(format!("unknown point {y}")));
                }
                domains[g][y] = true;
            }
        }
        let action = SetPartialAction {
            group,
            carrier,
            domains,
            maps,
        };
        action.check_well_formed()?;
        Ok(action)
    }

    fn check_well_formed(&self) -> Result<()> {
        let g = &self.group;
        for a in g.elements() {
            let inv = g.inv(a);
            let mut hit = vec![false; self.carrier.len()];
            for x in 0..self.carrier.len() {
                match self.maps[a][x] {
                    Some(y) => {
                        if !self.domains[inv][x] {
                            return Err(Error::MalformedInput(format!(
                                "α_{} is defined at {} outside D_{}",
                                g.name(a),
                                self.carrier[x],
                                g.name(inv)
                            )));
                        }
                        if !self.domains[a][y] {
                            return Err(Error::MalformedInput(format!(
                                "α_{} sends {} outside D_{}",
                                g.name(a),
                                self.carrier[x],
                                g.name(a)
                            )));
                        }
                        if std::mem::replace(&mut hit[y], true) {
                            return Err(Error::MalformedInput(format!(
                                "α_{} is not injective",
                                g.name(a)
                            )));
                        }
                    }
                    None if self.domains[inv][x] => {
                        return Err(Error::MalformedInput(format!(
                            "α_{} is undefined at {} ∈ D_{}",
                            g.name(a),
                            self.carrier[x],
                            g.name(inv)
                        )));
                    }
                    None => {}
                }
            }
            if hit != self.domains[a] {
                return Err(Error::MalformedInput(format!(
                    "α_{} is not onto D_{}",
                    g.name(a),
                    g.name(a)
                )));
            }
        }
        Ok(())
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn carrier(&self) -> &[String] {
        &self.carrier
    }

    pub fn carrier_size(&self) -> usize {
        self.carrier.len()
    }

    pub fn in_domain(&self, g: usize, x: usize) -> bool {
        self.domains[g][x]
    }

    /// Points of `D_g`, ascending.
    pub fn domain(&self, g: usize) -> Vec<usize> {
        (0..self.carrier.len()).filter(|&x| self.domains[g][x]).collect()
    }

    /// `α_g(x)`, defined for `x ∈ D_{g⁻¹}`.
    pub fn apply(&self, g: usize, x: usize) -> Option<usize> {
        self.maps[g][x]
    }

    /// The map table `maps[g][x]`, which determines the action.
    pub fn maps(&self) -> &[Vec<Option<usize>>] {
        &self.maps
    }

    pub fn is_global(&self) -> bool {
        self.domains.iter().all(|d| d.iter().all(|&b| b))
    }

    /// Equality of the action data, ignoring carrier labels.
    pub fn same_action(&self, other: &SetPartialAction) -> bool {
        self.group == other.group && self.domains == other.domains && self.maps == other.maps
    }

    /// Canonical form: the domains are recomputed from the maps. Idempotent,
    /// and the identity on every well-formed action.
    pub fn canonicalize(&self) -> SetPartialAction {
        SetPartialAction::from_maps(self.group.clone(), self.carrier.clone(), self.maps.clone())
            .expect("well-formed actions stay well-formed")
    }

    pub fn with_carrier(mut self, carrier: Vec<String>) -> Result<Self> {
        if carrier.len() != self.carrier.len() {
            return Err(Error::MalformedInput("carrier size changed".into()));
        }
        self.carrier = carrier;
        Ok(self)
    }

    /// Checks every axiom, recording the first witness for each failure.
    pub fn verify(&self) -> VerificationReport {
        let g = &self.group;
        let n = self.carrier.len();
        let e = g.identity();
        let mut report = VerificationReport::new(&Axiom::SET_AXIOMS);
        let pt = |x: usize| self.carrier[x].as_str();

        for x in 0..n {
            match self.maps[e][x] {
                Some(y) if y == x => {}
                Some(y) => report.fail(Axiom::Identity, || {
                    format!("α_{}({}) = {}", g.name(e), pt(x), pt(y))
                }),
                None => report.fail(Axiom::Identity, || {
                    format!("{} ∉ D_{}", pt(x), g.name(e))
                }),
            }
        }

        for a in g.elements() {
            for b in g.elements() {
                let ab = g.mul(a, b);
                let ab_inv = g.inv(ab);
                for x in 0..n {
                    let Some(y) = self.maps[b][x] else { continue };
                    let Some(z) = self.maps[a][y] else { continue };
                    match self.maps[ab][x] {
                        None => report.fail(Axiom::DomainInclusion, || {
                            format!(
                                "g={}, h={}, x={}: α_h(x) ∈ D_g⁻¹ but x ∉ D_{}",
                                g.name(a),
                                g.name(b),
                                pt(x),
                                g.name(ab_inv)
                            )
                        }),
                        Some(w) if w != z => report.fail(Axiom::Composition, || {
                            format!(
                                "g={}, h={}, x={}: α_g(α_h(x)) = {} but α_gh(x) = {}",
                                g.name(a),
                                g.name(b),
                                pt(x),
                                pt(z),
                                pt(w)
                            )
                        }),
                        Some(_) => {}
                    }
                }

                // α_a(D_{a⁻¹} ∩ D_b) = D_a ∩ D_{ab}
                let mut image = vec![false; n];
                for x in 0..n {
                    if self.domains[b][x] {
                        if let Some(y) = self.maps[a][x] {
                            image[y] = true;
                        }
                    }
                }
                for y in 0..n {
                    let expected = self.domains[a][y] && self.domains[ab][y];
                    if image[y] != expected {
                        report.fail(Axiom::IntersectionTransport, || {
                            format!(
                                "g={}, h={}: point {} is {} α_g(D_g⁻¹ ∩ D_h) but {} D_g ∩ D_gh",
                                g.name(a),
                                g.name(b),
                                pt(y),
                                if image[y] { "in" } else { "not in" },
                                if expected { "in" } else { "not in" },
                            )
                        });
                    }
                }
            }

            let inv = g.inv(a);
            for x in 0..n {
                if let Some(y) = self.maps[a][x] {
                    if self.maps[inv][y] != Some(x) {
                        report.fail(Axiom::InverseMaps, || {
                            format!(
                                "α_{}(α_{}({})) ≠ {}",
                                g.name(inv),
                                g.name(a),
                                pt(x),
                                pt(x)
                            )
                        });
                    }
                }
            }
        }
        report
    }
}

impl fmt::Debug for SetPartialAction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for SetPartialAction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .group
            .elements()
            .map(|g| {
                let pairs: Vec<String> = (0..self.carrier.len())
                    .filter_map(|x| {
                        self.maps[g][x].map(|y| format!("{}→{}", self.carrier[x], self.carrier[y]))
                    })
                    .collect();
                format!("{}:{{{}}}", self.group.name(g), pairs.join(","))
            })
            .collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// A partial action whose domains are all of `X`: an ordinary group action.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GlobalSetAction(SetPartialAction);

impl GlobalSetAction {
    pub fn new(action: SetPartialAction) -> Result<Self> {
        if !action.is_global() {
            return Err(Error::InvalidAction("some domain is not the whole carrier".into()));
        }
        let report = action.verify();
        if !report.all_pass() {
            return Err(Error::InvalidAction(report.to_string()));
        }
        Ok(GlobalSetAction(action))
    }

    /// `perms[g][x] = β_g(x)`.
    pub fn from_permutations(
        group: FiniteGroup,
        carrier: Vec<String>,
        perms: Vec<Vec<usize>>,
    ) -> Result<Self> {
        let maps = perms
            .into_iter()
            .map(|p| p.into_iter().map(Some).collect())
            .collect();
        GlobalSetAction::new(SetPartialAction::from_maps(group, carrier, maps)?)
    }

    /// Left translation of a group on itself.
    pub fn regular(group: &FiniteGroup) -> Self {
        let perms = group
            .elements()
            .map(|g| group.elements().map(|x| group.mul(g, x)).collect())
            .collect();
        GlobalSetAction::from_permutations(group.clone(), group.names().to_vec(), perms)
            .expect("left translation is an action")
    }

    pub fn apply(&self, g: usize, x: usize) -> usize {
        self.0.maps[g][x].expect("global actions are total")
    }

    pub fn as_partial(&self) -> &SetPartialAction {
        &self.0
    }

    pub fn into_partial(self) -> SetPartialAction {
        self.0
    }

    pub fn group(&self) -> &FiniteGroup {
        self.0.group()
    }

    pub fn carrier(&self) -> &[String] {
        self.0.carrier()
    }

    pub fn carrier_size(&self) -> usize {
        self.0.carrier_size()
    }

    /// `perms[g][x] = β_g(x)`.
    pub fn permutations(&self) -> Vec<Vec<usize>> {
        self.0
            .maps
            .iter()
            .map(|row| row.iter().map(|y| y.unwrap()).collect())
            .collect()
    }
}

/// Labels `x1, …, xn`.
pub fn point_labels(prefix: &str, n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("{prefix}{i}")).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{cyclic_group, symmetric_group};

    fn z4_r_full() -> SetPartialAction {
        // D_e = D_r = D_{r³} = X, D_{r²} = ∅; α_r a transposition.
        let z4 = cyclic_group(4).unwrap();
        let swap = vec![Some(1), Some(0)];
        SetPartialAction::from_maps(
            z4,
            point_labels("x", 2),
            vec![vec![Some(0), Some(1)], swap.clone(), vec![None, None], swap],
        )
        .unwrap()
    }

    #[test]
    fn global_actions_pass() {
        let s3 = symmetric_group(3).unwrap();
        let report = GlobalSetAction::regular(&s3).as_partial().verify();
        assert!(report.all_pass(), "{report}");
    }

    #[test]
    fn identity_domain_too_small() {
        let z2 = cyclic_group(2).unwrap();
        let a = SetPartialAction::new(
            z2,
            point_labels("x", 2),
            vec![vec![0], vec![]],
            vec![vec![(0, 0)], vec![]],
        )
        .unwrap();
        let report = a.verify();
        assert!(!report.passed(Axiom::Identity));
        assert!(report.get(Axiom::Identity).unwrap().witness.as_ref().unwrap().contains("x2"));
    }

    #[test]
    fn z4_generator_without_its_square_fails() {
        let report = z4_r_full().verify();
        assert!(!report.passed(Axiom::IntersectionTransport), "{report}");
        assert!(!report.passed(Axiom::DomainInclusion));
        assert!(report.passed(Axiom::Identity));
    }

    #[test]
    fn malformed_maps_are_rejected() {
        let z2 = cyclic_group(2).unwrap();
        // α_σ defined on a point outside D_σ.
        let err = SetPartialAction::new(
            z2.clone(),
            point_labels("x", 2),
            vec![vec![0, 1], vec![0]],
            vec![vec![(0, 0), (1, 1)], vec![(1, 0)]],
        );
        assert!(matches!(err, Err(Error::MalformedInput(_))));
        // Not injective.
        let err = SetPartialAction::from_maps(
            z2,
            point_labels("x", 2),
            vec![vec![Some(0), Some(1)], vec![Some(0), Some(0)]],
        );
        assert!(matches!(err, Err(Error::MalformedInput(_))));
    }

    #[test]
    fn composition_failure_has_witness() {
        // Z3 acting globally with α_1 a 3-cycle but α_2 = α_1 (should be α_1²).
        let z3 = cyclic_group(3).unwrap();
        let c = vec![Some(1), Some(2), Some(0)];
        let cinv = vec![Some(2), Some(0), Some(1)];
        let good = SetPartialAction::from_maps(
            z3.clone(),
            point_labels("x", 3),
            vec![vec![Some(0), Some(1), Some(2)], c.clone(), cinv],
        )
        .unwrap();
        assert!(good.verify().all_pass());
        let bad = SetPartialAction::from_maps(
            z3,
            point_labels("x", 3),
            vec![vec![Some(0), Some(1), Some(2)], c.clone(), c],
        )
        .unwrap();
        let report = bad.verify();
        assert!(!report.passed(Axiom::Composition));
        assert!(!report.passed(Axiom::InverseMaps));
    }

    #[test]
    fn canonical_form_is_identity_on_valid_actions() {
        let a = z4_r_full();
        assert_eq!(a.canonicalize(), a);
    }
}
