//! Matrix-vector logic.
//!
//! Truth values are orthonormal vectors `s` ("true") and `n` ("false");
//! connectives are matrices acting on them, with two-place connectives acting
//! on Kronecker products. The two complex square roots of NOT turn a
//! counterfactual valuation into an equal-weight superposition of "true" and
//! "false", and a second application resolves it once plausibility is known.
//!
//! ```
//! use vlogic_core::{BasisSpec, OperatorSet, apply_dyadic};
//!
//! let basis = BasisSpec::Set2.build().unwrap();
//! let ops = OperatorSet::new(&basis);
//! let v = apply_dyadic(ops.implication(), &basis.truth(), &basis.falsity()).unwrap();
//! assert!(v.distance(&basis.falsity()) < 1e-12);
//! ```

pub mod basis;
pub mod counterfactual;
pub mod error;
pub mod frontend;
pub mod identities;
pub mod matrix;
pub mod operators;

pub use basis::{
    canonical_basis, fuzzy_value, project, random_basis, BasisSpec, CanonicalKind, Label,
    TruthBasis, TruthValue,
};
pub use counterfactual::{
    admissible, factual_conditional, plausibility, resolve, run_scenario, virtualize,
    CounterfactualScenario, EvidenceBase, Plausibility, PropositionRef, ScenarioReport,
    VirtualValuation,
};
pub use error::{Error, Result};
pub use frontend::{
    classical_oracle, evaluate, parse, parse_formula, tokenize, truth_table, Assignment,
    AtomValue, Formula, Program, TruthTable,
};
pub use identities::{operator_distance, run_suite, run_suite_on, IdentityCheck, SuiteReport};
pub use matrix::{kronecker, CMatrix, CVector};
pub use operators::{
    apply_dyadic, apply_monadic, Arity, DyadicSignature, LogicOperator, OperatorSet, Role, Root,
};
