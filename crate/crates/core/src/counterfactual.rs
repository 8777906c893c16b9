//! Counterfactual virtualization and resolution.
//!
//! A counterfactual `p* < q*` is valued with the implication matrix and
//! assumed a-priori true. Premultiplying by a square root of NOT `X`
//! splits that value into an equal-weight complex superposition of `s` and
//! `n`. Plausibility (membership of `p*` and `q*` in the evidence sets F
//! and C) then picks the second factor: `conj(X)` sends the virtual value
//! back to `s`, `X` itself sends it to `n`.

use std::collections::BTreeSet;
use std::fmt;

use num_complex::Complex64;
use serde::{Deserialize, Deserializer, Serialize};

use crate::basis::{project, BasisSpec, Label, TruthValue};
use crate::error::{Error, Result};
use crate::matrix::pairs::Cx;
use crate::operators::{apply_dyadic, apply_monadic, OperatorSet, Root};

/// Tolerance used when labelling resolved values as crisp.
pub const CRISP_TOL: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PropositionRef {
    pub id: String,
    pub value: bool,
}

impl PropositionRef {
    pub fn new(id: impl Into<String>, value: bool) -> Self {
        PropositionRef {
            id: id.into(),
            value,
        }
    }
}

/// The factual-evidence set F and the logical-consistency set C.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EvidenceBase {
    #[serde(rename = "F", deserialize_with = "unique_ids")]
    pub factual: BTreeSet<String>,
    #[serde(rename = "C", deserialize_with = "unique_ids")]
    pub consistent: BTreeSet<String>,
}

fn unique_ids<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<BTreeSet<String>, D::Error> {
    let ids: Vec<String> = Vec::deserialize(d)?;
    let mut set = BTreeSet::new();
    for id in ids {
        if !set.insert(id.clone()) {
            return Err(serde::de::Error::custom(format!("duplicate evidence id `{id}`")));
        }
    }
    Ok(set)
}

impl EvidenceBase {
    pub fn new<I, J, S, T>(factual: I, consistent: J) -> Self
    where
        I: IntoIterator<Item = S>,
        J: IntoIterator<Item = T>,
        S: Into<String>,
        T: Into<String>,
    {
        EvidenceBase {
            factual: factual.into_iter().map(Into::into).collect(),
            consistent: consistent.into_iter().map(Into::into).collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CounterfactualScenario {
    /// Falls back to the caller's default basis when absent.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub basis: Option<BasisSpec>,
    pub p_star: PropositionRef,
    pub q_star: PropositionRef,
    pub evidence: EvidenceBase,
    pub root: Root,
}

impl CounterfactualScenario {
    pub fn from_json(src: &str) -> Result<Self> {
        let scenario: CounterfactualScenario =
            serde_json::from_str(src).map_err(|e| Error::Scenario(e.to_string()))?;
        scenario.validate()?;
        Ok(scenario)
    }

    pub fn validate(&self) -> Result<()> {
        for (name, prop) in [("p_star", &self.p_star), ("q_star", &self.q_star)] {
            if prop.id.is_empty() {
                return Err(Error::Scenario(format!("{name}.id must be nonempty")));
            }
        }
        Ok(())
    }

    pub fn basis_spec(&self) -> BasisSpec {
        self.basis.unwrap_or_default()
    }
}

/// The four membership conjuncts, in the order they are checked.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Conjunct {
    #[serde(rename = "p* ∈ F")]
    AntecedentFactual,
    #[serde(rename = "q* ∈ F")]
    ConsequentFactual,
    #[serde(rename = "p* ∈ C")]
    AntecedentConsistent,
    #[serde(rename = "q* ∈ C")]
    ConsequentConsistent,
}

impl fmt::Display for Conjunct {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Conjunct::AntecedentFactual => "p* ∈ F",
            Conjunct::ConsequentFactual => "q* ∈ F",
            Conjunct::AntecedentConsistent => "p* ∈ C",
            Conjunct::ConsequentConsistent => "q* ∈ C",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Plausibility {
    pub plausible: bool,
    pub failing_conjunct: Option<Conjunct>,
}

/// `[(p* ∈ F) ∧ (q* ∈ F)] ∧ [(p* ∈ C) ∧ (q* ∈ C)]`, by proposition id.
pub fn plausibility(
    p_star: &PropositionRef,
    q_star: &PropositionRef,
    evidence: &EvidenceBase,
) -> Plausibility {
    let conjuncts = [
        (Conjunct::AntecedentFactual, evidence.factual.contains(&p_star.id)),
        (Conjunct::ConsequentFactual, evidence.factual.contains(&q_star.id)),
        (Conjunct::AntecedentConsistent, evidence.consistent.contains(&p_star.id)),
        (Conjunct::ConsequentConsistent, evidence.consistent.contains(&q_star.id)),
    ];
    let failing_conjunct = conjuncts.iter().find(|(_, holds)| !holds).map(|(c, _)| *c);
    Plausibility {
        plausible: failing_conjunct.is_none(),
        failing_conjunct,
    }
}

/// `L(p ⊗ q)` for crisp `p`, `q`.
pub fn factual_conditional(ops: &OperatorSet, p: bool, q: bool) -> TruthValue {
    let basis = ops.basis();
    apply_dyadic(ops.implication(), &basis.crisp(p), &basis.crisp(q))
        .expect("operator set and basis share a dimension")
}

/// False exactly for `(p*, q*) = (true, false)`.
pub fn admissible(scenario: &CounterfactualScenario) -> bool {
    !(scenario.p_star.value && !scenario.q_star.value)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VirtualValuation {
    pub vector: TruthValue,
    pub c_s: Cx,
    pub c_n: Cx,
}

impl VirtualValuation {
    pub fn coefficients(&self) -> (Complex64, Complex64) {
        (self.c_s.0, self.c_n.0)
    }
}

fn counterfactual_value(ops: &OperatorSet, scenario: &CounterfactualScenario) -> Result<TruthValue> {
    if !admissible(scenario) {
        return Err(Error::Inadmissible);
    }
    let basis = ops.basis();
    apply_dyadic(
        &ops.counterfactual_implication(),
        &basis.crisp(scenario.p_star.value),
        &basis.crisp(scenario.q_star.value),
    )
}

/// `X · Lc(p* ⊗ q*)` with `X` the scenario's root.
pub fn virtualize(ops: &OperatorSet, scenario: &CounterfactualScenario) -> Result<VirtualValuation> {
    let cf = counterfactual_value(ops, scenario)?;
    let vector = apply_monadic(ops.root(scenario.root), &cf)?;
    let (c_s, c_n) = project(ops.basis(), &vector)?;
    Ok(VirtualValuation {
        vector,
        c_s: Cx(c_s),
        c_n: Cx(c_n),
    })
}

/// Second root application: `conj(X)` when plausible, `X` when not.
pub fn resolve(ops: &OperatorSet, scenario: &CounterfactualScenario) -> Result<TruthValue> {
    let virt = virtualize(ops, scenario)?;
    let verdict = plausibility(&scenario.p_star, &scenario.q_star, &scenario.evidence);
    let second = if verdict.plausible {
        scenario.root.conjugate()
    } else {
        scenario.root
    };
    apply_monadic(ops.root(second), &virt.vector)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FactualReport {
    pub p: bool,
    pub q: bool,
    pub vector: TruthValue,
    pub label: Label,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ResolvedReport {
    pub vector: TruthValue,
    pub c_s: Cx,
    pub c_n: Cx,
    pub label: Label,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ScenarioReport {
    pub basis: BasisSpec,
    pub p_star: PropositionRef,
    pub q_star: PropositionRef,
    pub root: Root,
    /// The paired factual conditional `L(¬p* ⊗ ¬q*)`; informational only.
    pub factual_conditional: FactualReport,
    pub admissible: bool,
    pub rejection: Option<String>,
    #[serde(rename = "virtual")]
    pub virtual_valuation: Option<VirtualValuation>,
    pub plausibility: Plausibility,
    pub resolved: Option<ResolvedReport>,
}

impl ScenarioReport {
    pub fn resolved_label(&self) -> Option<Label> {
        self.resolved.as_ref().map(|r| r.label)
    }
}

/// Runs the full pipeline. Inadmissible scenarios yield a report with
/// `rejection` set and no virtual or resolved value.
pub fn run_scenario(scenario: &CounterfactualScenario) -> Result<ScenarioReport> {
    scenario.validate()?;
    let spec = scenario.basis_spec();
    let basis = spec.build()?;
    let ops = OperatorSet::new(&basis);

    let (p, q) = (!scenario.p_star.value, !scenario.q_star.value);
    let fc = factual_conditional(&ops, p, q);
    let (fs, fn_) = project(&basis, &fc)?;
    let factual_conditional = FactualReport {
        p,
        q,
        label: Label::from_projection(fs, fn_, CRISP_TOL),
        vector: fc,
    };

    let plaus = plausibility(&scenario.p_star, &scenario.q_star, &scenario.evidence);
    let is_admissible = admissible(scenario);

    let (virtual_valuation, resolved, rejection) = if is_admissible {
        let virt = virtualize(&ops, scenario)?;
        let vector = resolve(&ops, scenario)?;
        let (c_s, c_n) = project(&basis, &vector)?;
        let resolved = ResolvedReport {
            label: Label::from_projection(c_s, c_n, CRISP_TOL),
            vector,
            c_s: Cx(c_s),
            c_n: Cx(c_n),
        };
        (Some(virt), Some(resolved), None)
    } else {
        (None, None, Some(Error::Inadmissible.to_string()))
    };

    Ok(ScenarioReport {
        basis: spec,
        p_star: scenario.p_star.clone(),
        q_star: scenario.q_star.clone(),
        root: scenario.root,
        factual_conditional,
        admissible: is_admissible,
        rejection,
        virtual_valuation,
        plausibility: plaus,
        resolved,
    })
}
