//! Operator-level tautologies checked as numerical matrix equalities.
//!
//! Each identity is a name plus two builders over an [`OperatorSet`]; the
//! runner compares the two sides by max-abs entrywise deviation.

use serde::Serialize;

use crate::basis::{BasisSpec, TruthBasis};
use crate::error::Result;
use crate::matrix::{self, kronecker, CMatrix};
use crate::operators::OperatorSet;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct IdentityCheck {
    pub name: String,
    pub deviation: f64,
    pub tolerance: f64,
    pub passed: bool,
}

impl IdentityCheck {
    fn new(name: &str, deviation: f64, tolerance: f64) -> Self {
        IdentityCheck {
            name: name.to_string(),
            deviation,
            tolerance,
            // NaN deviation never passes
            passed: deviation <= tolerance,
        }
    }
}

type Builder = fn(&OperatorSet) -> CMatrix;

/// A registered matrix identity `lhs = rhs`.
pub struct Identity {
    pub name: &'static str,
    pub group: Group,
    pub lhs: Builder,
    pub rhs: Builder,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Group {
    ImplicationDisjunction,
    DeMorgan,
    RootAlgebra,
}

impl Identity {
    pub fn check(&self, ops: &OperatorSet, tol: f64) -> IdentityCheck {
        let lhs = (self.lhs)(ops);
        let rhs = (self.rhs)(ops);
        let deviation = operator_distance(&lhs, &rhs).unwrap_or(f64::INFINITY);
        IdentityCheck::new(self.name, deviation, tol)
    }
}

fn n(o: &OperatorSet) -> CMatrix {
    o.negation().matrix().clone()
}
fn i(o: &OperatorSet) -> CMatrix {
    o.identity().matrix().clone()
}
fn a(o: &OperatorSet) -> CMatrix {
    o.sqrt_not_pair().0.matrix().clone()
}
fn b(o: &OperatorSet) -> CMatrix {
    o.sqrt_not_pair().1.matrix().clone()
}
fn l(o: &OperatorSet) -> CMatrix {
    o.implication().matrix().clone()
}
fn d(o: &OperatorSet) -> CMatrix {
    o.disjunction().matrix().clone()
}
fn c(o: &OperatorSet) -> CMatrix {
    o.conjunction().matrix().clone()
}

static REGISTRY: &[Identity] = &[
    Identity {
        name: "L = D(N⊗I)",
        group: Group::ImplicationDisjunction,
        lhs: l,
        rhs: |o| d(o).dot(&kronecker(&n(o), &i(o))),
    },
    Identity {
        name: "C = N·D(N⊗N)",
        group: Group::DeMorgan,
        lhs: c,
        rhs: |o| n(o).dot(&d(o)).dot(&kronecker(&n(o), &n(o))),
    },
    Identity {
        name: "D = N·C(N⊗N)",
        group: Group::DeMorgan,
        lhs: d,
        rhs: |o| n(o).dot(&c(o)).dot(&kronecker(&n(o), &n(o))),
    },
    Identity {
        name: "A² = N",
        group: Group::RootAlgebra,
        lhs: |o| a(o).dot(&a(o)),
        rhs: n,
    },
    Identity {
        name: "B² = N",
        group: Group::RootAlgebra,
        lhs: |o| b(o).dot(&b(o)),
        rhs: n,
    },
    Identity {
        name: "AB = I",
        group: Group::RootAlgebra,
        lhs: |o| a(o).dot(&b(o)),
        rhs: i,
    },
    Identity {
        name: "BA = I",
        group: Group::RootAlgebra,
        lhs: |o| b(o).dot(&a(o)),
        rhs: i,
    },
    Identity {
        name: "N² = I",
        group: Group::RootAlgebra,
        lhs: |o| n(o).dot(&n(o)),
        rhs: i,
    },
    Identity {
        name: "NA = B",
        group: Group::RootAlgebra,
        lhs: |o| n(o).dot(&a(o)),
        rhs: b,
    },
    Identity {
        name: "conj(A) = B",
        group: Group::RootAlgebra,
        lhs: |o| matrix::conj(&a(o)),
        rhs: b,
    },
];

pub fn registry() -> &'static [Identity] {
    REGISTRY
}

/// Max over entries of `|M1 - M2|`; errors on shape mismatch.
pub fn operator_distance(m1: &CMatrix, m2: &CMatrix) -> Result<f64> {
    matrix::max_abs_diff(m1, m2)
}

fn check_group(ops: &OperatorSet, group: Group, tol: f64) -> Vec<IdentityCheck> {
    REGISTRY
        .iter()
        .filter(|id| id.group == group)
        .map(|id| id.check(ops, tol))
        .collect()
}

pub fn check_implication_disjunction(basis: &TruthBasis, tol: f64) -> IdentityCheck {
    let ops = OperatorSet::new(basis);
    check_group(&ops, Group::ImplicationDisjunction, tol).remove(0)
}

/// `(C = N·D(N⊗N), D = N·C(N⊗N))`.
pub fn check_de_morgan(basis: &TruthBasis, tol: f64) -> (IdentityCheck, IdentityCheck) {
    let ops = OperatorSet::new(basis);
    let mut checks = check_group(&ops, Group::DeMorgan, tol).into_iter();
    let first = checks.next().expect("two De Morgan identities registered");
    let second = checks.next().expect("two De Morgan identities registered");
    (first, second)
}

pub fn check_root_algebra(basis: &TruthBasis, tol: f64) -> Vec<IdentityCheck> {
    check_group(&OperatorSet::new(basis), Group::RootAlgebra, tol)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(transparent)]
pub struct SuiteReport {
    pub checks: Vec<IdentityCheck>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &IdentityCheck> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

/// Runs every registered identity against the basis described by `spec`.
pub fn run_suite(spec: &BasisSpec, tol: f64) -> Result<SuiteReport> {
    let basis = spec.build()?;
    Ok(run_suite_on(&basis, tol))
}

pub fn run_suite_on(basis: &TruthBasis, tol: f64) -> SuiteReport {
    let ops = OperatorSet::new(basis);
    // checks are independent; scoped threads keep report order stable
    let checks = std::thread::scope(|scope| {
        let handles: Vec<_> = REGISTRY
            .iter()
            .map(|id| {
                let ops = &ops;
                scope.spawn(move || id.check(ops, tol))
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("identity check panicked"))
            .collect()
    });
    SuiteReport { checks }
}
