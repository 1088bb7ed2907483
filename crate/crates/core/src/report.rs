//! Itemized outcomes of the partial-action and enveloping-action checkers.

use std::fmt;

/// The conditions a partial action must satisfy, plus the identities they
/// imply and (for algebras) blockwise class preservation.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash, PartialOrd, Ord)]
pub enum Axiom {
    /// `D_e` is everything and `α_e` is the identity.
    Identity,
    /// `D_{(gh)⁻¹} ⊇ α_h⁻¹(D_h ∩ D_{g⁻¹})`.
    DomainInclusion,
    /// `α_g∘α_h = α_{gh}` on `α_h⁻¹(D_h ∩ D_{g⁻¹})`.
    Composition,
    /// `α_g(D_{g⁻¹} ∩ D_h) = D_g ∩ D_{gh}`.
    IntersectionTransport,
    /// `α_{g⁻¹} = α_g⁻¹`.
    InverseMaps,
    /// Every map sends a block to a block of the same isomorphism class.
    ClassPreservation,
}

impl Axiom {
    pub const SET_AXIOMS: [Axiom; 5] = [
        Axiom::Identity,
        Axiom::DomainInclusion,
        Axiom::Composition,
        Axiom::IntersectionTransport,
        Axiom::InverseMaps,
    ];

    pub fn label(self) -> &'static str {
        match self {
            Axiom::Identity => "axiom (i): D_e is everything and α_e = id",
            Axiom::DomainInclusion => "axiom (ii): D_(gh)⁻¹ ⊇ α_h⁻¹(D_h ∩ D_g⁻¹)",
            Axiom::Composition => "axiom (iii): α_g∘α_h = α_gh on α_h⁻¹(D_h ∩ D_g⁻¹)",
            Axiom::IntersectionTransport => "derived: α_g(D_g⁻¹ ∩ D_h) = D_g ∩ D_gh",
            Axiom::InverseMaps => "derived: α_g⁻¹ = (α_g)⁻¹",
            Axiom::ClassPreservation => "blocks map to blocks of the same class",
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AxiomCheck {
    pub axiom: Axiom,
    /// First counterexample found, if any.
    pub witness: Option<String>,
}

impl AxiomCheck {
    pub fn passed(&self) -> bool {
        self.witness.is_none()
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct VerificationReport {
    pub checks: Vec<AxiomCheck>,
}

impl VerificationReport {
    pub(crate) fn new(axioms: &[Axiom]) -> Self {
        VerificationReport {
            checks: axioms
                .iter()
                .map(|&axiom| AxiomCheck {
                    axiom,
                    witness: None,
                })
                .collect(),
        }
    }

    /// Records a failure unless one is already recorded for the axiom.
    pub(crate) fn fail(&mut self, axiom: Axiom, witness: impl FnOnce() -> String) {
        if let Some(check) = self.checks.iter_mut().find(|c| c.axiom == axiom) {
            if check.witness.is_none() {
                check.witness = Some(witness());
            }
        }
    }

    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(AxiomCheck::passed)
    }

    pub fn get(&self, axiom: Axiom) -> Option<&AxiomCheck> {
        self.checks.iter().find(|c| c.axiom == axiom)
    }

    pub fn passed(&self, axiom: Axiom) -> bool {
        self.get(axiom).is_some_and(AxiomCheck::passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &AxiomCheck> {
        self.checks.iter().filter(|c| !c.passed())
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for check in &self.checks {
            match &check.witness {
                None => writeln!(f, "PASS  {}", check.axiom.label())?,
                Some(w) => writeln!(f, "FAIL  {}\n      witness: {w}", check.axiom.label())?,
            }
        }
        Ok(())
    }
}

/// The four conditions on an enveloping action, plus the requirement that the
/// candidate is a genuine global action.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct EnvelopingChecks {
    /// The embedded copy is an ideal of the envelope.
    pub ideal: bool,
    /// The translates of the embedded copy cover the envelope.
    pub covers: bool,
    /// `φ(D_g) = φ(X) ∩ β_g(φ(X))` for every `g`.
    pub intersection: bool,
    /// `φ∘α_g = β_g∘φ` on `D_{g⁻¹}`.
    pub equivariance: bool,
    /// `β_e = id` and `β_g∘β_t = β_{gt}`.
    pub global_action: bool,
    /// Human-readable descriptions of the failures.
    pub failures: Vec<String>,
}

impl EnvelopingChecks {
    pub fn all_pass(&self) -> bool {
        self.ideal && self.covers && self.intersection && self.equivariance && self.global_action
    }
}

impl fmt::Display for EnvelopingChecks {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = |b: bool| if b { "PASS" } else { "FAIL" };
        writeln!(f, "{}  (i) embedded copy is an ideal", verdict(self.ideal))?;
        writeln!(f, "{}  (ii) translates cover the envelope", verdict(self.covers))?;
        writeln!(f, "{}  (iii) φ(D_g) = φ(Λ) ∩ β_g(φ(Λ))", verdict(self.intersection))?;
        writeln!(f, "{}  (iv) φ∘α_g = β_g∘φ", verdict(self.equivariance))?;
        writeln!(f, "{}  β is a global action", verdict(self.global_action))?;
        for failure in &self.failures {
            writeln!(f, "      {failure}")?;
        }
        Ok(())
    }
}
