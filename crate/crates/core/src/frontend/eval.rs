//! Compilation of formulas into postfix matrix pipelines, and their
//! evaluation against atom assignments.

use std::collections::BTreeMap;
use std::str::FromStr;

use num_complex::Complex64;
use serde::Serialize;

use super::parser::Formula;
use crate::basis::{fuzzy_value, project, Label, TruthBasis, TruthValue};
use crate::counterfactual::CRISP_TOL;
use crate::error::{Error, Result};
use crate::matrix::{self, c, pairs::Cx};
use crate::operators::OperatorSet;

pub const MAX_TABLE_ATOMS: usize = 16;

const NORM_TOL: f64 = 1e-9;

/// Value bound to an atom.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum AtomValue {
    Crisp(bool),
    /// `αs + (1-α)n`.
    Fuzzy(f64),
    /// `c_s·s + c_n·n` with `|c_s|² + |c_n|² = 1`.
    Complex(Complex64, Complex64),
}

impl AtomValue {
    pub fn fuzzy(alpha: f64) -> Result<Self> {
        if !(0.0..=1.0).contains(&alpha) {
            return Err(Error::FuzzyDomain(alpha));
        }
        Ok(AtomValue::Fuzzy(alpha))
    }

    pub fn complex(c_s: Complex64, c_n: Complex64) -> Result<Self> {
        let norm = c_s.norm_sqr() + c_n.norm_sqr();
        if norm.is_nan() || (norm - 1.0).abs() > NORM_TOL {
            return Err(Error::InvalidAssignment {
                input: format!("complex:{},{},{},{}", c_s.re, c_s.im, c_n.re, c_n.im),
                reason: format!("|c_s|² + |c_n|² = {norm}, expected 1"),
            });
        }
        Ok(AtomValue::Complex(c_s, c_n))
    }

    pub fn to_truth_value(self, basis: &TruthBasis) -> Result<TruthValue> {
        match self {
            AtomValue::Crisp(b) => Ok(basis.crisp(b)),
            AtomValue::Fuzzy(alpha) => fuzzy_value(basis, alpha),
            AtomValue::Complex(c_s, c_n) => Ok(basis.combine(c_s, c_n)),
        }
    }
}

/// Parses `true`, `false`, `fuzzy:0.25` or `complex:re,im,re,im`.
impl FromStr for AtomValue {
    type Err = Error;

    fn from_str(src: &str) -> Result<Self> {
        let invalid = |reason: &str| Error::InvalidAssignment {
            input: src.to_string(),
            reason: reason.to_string(),
        };
        match src {
            "true" => return Ok(AtomValue::Crisp(true)),
            "false" => return Ok(AtomValue::Crisp(false)),
            _ => {}
        }
        if let Some(rest) = src.strip_prefix("fuzzy:") {
            let alpha: f64 = rest.trim().parse().map_err(|_| invalid("bad fuzzy weight"))?;
            return AtomValue::fuzzy(alpha);
        }
        if let Some(rest) = src.strip_prefix("complex:") {
            let parts = rest
                .split(',')
                .map(|p| p.trim().parse::<f64>())
                .collect::<std::result::Result<Vec<_>, _>>()
                .map_err(|_| invalid("bad complex component"))?;
            let [sr, si, nr, ni] = parts[..] else {
                return Err(invalid("complex needs four components re,im,re,im"));
            };
            return AtomValue::complex(c(sr, si), c(nr, ni));
        }
        Err(invalid("expected true, false, fuzzy:<α> or complex:<re,im,re,im>"))
    }
}

/// Atom id to value.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct Assignment {
    values: BTreeMap<String, AtomValue>,
}

impl Assignment {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn set(&mut self, id: impl Into<String>, value: AtomValue) -> &mut Self {
        self.values.insert(id.into(), value);
        self
    }

    pub fn with(mut self, id: impl Into<String>, value: AtomValue) -> Self {
        self.set(id, value);
        self
    }

    pub fn get(&self, id: &str) -> Option<AtomValue> {
        self.values.get(id).copied()
    }

    /// Parses `id=value` bindings; a repeated id is an error.
    pub fn from_bindings<I, S>(bindings: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let mut out = Assignment::new();
        for binding in bindings {
            let binding = binding.as_ref();
            let invalid = |reason: &str| Error::InvalidAssignment {
                input: binding.to_string(),
                reason: reason.to_string(),
            };
            let (id, value) = binding.split_once('=').ok_or_else(|| invalid("expected id=value"))?;
            let id = id.trim();
            let valid_id = id.starts_with(|ch: char| ch.is_ascii_alphabetic() || ch == '_')
                && id.chars().all(|ch| ch.is_ascii_alphanumeric() || ch == '_');
            if !valid_id {
                return Err(invalid("invalid atom id"));
            }
            if out.values.contains_key(id) {
                return Err(invalid("atom assigned twice"));
            }
            out.set(id, value.trim().parse()?);
        }
        Ok(out)
    }
}

impl From<&BTreeMap<String, bool>> for Assignment {
    fn from(crisp: &BTreeMap<String, bool>) -> Self {
        Assignment {
            values: crisp
                .iter()
                .map(|(k, &v)| (k.clone(), AtomValue::Crisp(v)))
                .collect(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Instr {
    Load(usize),
    Negate,
    RootA,
    RootB,
    Conjoin,
    Disjoin,
    Imply,
}

/// A formula compiled to a postfix sequence of matrix applications.
///
/// Atoms are indexed in lexicographic order of their ids.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Program {
    atoms: Vec<String>,
    instrs: Vec<Instr>,
}

impl Program {
    pub fn compile(formula: &Formula) -> Program {
        let atoms = formula.atoms();
        let mut instrs = Vec::new();
        emit(formula, &atoms, &mut instrs);
        Program { atoms, instrs }
    }

    pub fn atoms(&self) -> &[String] {
        &self.atoms
    }

    /// Number of matrix applications.
    pub fn len(&self) -> usize {
        self.instrs.iter().filter(|i| !matches!(i, Instr::Load(_))).count()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Runs the pipeline; `inputs` are the atom values in [`Program::atoms`] order.
    pub fn run(&self, ops: &OperatorSet, inputs: &[TruthValue]) -> Result<TruthValue> {
        if inputs.len() != self.atoms.len() {
            return Err(Error::DimensionMismatch {
                expected: self.atoms.len(),
                found: inputs.len(),
            });
        }
        if let Some(bad) = inputs.iter().find(|v| v.dim() != ops.dim()) {
            return Err(Error::DimensionMismatch {
                expected: ops.dim(),
                found: bad.dim(),
            });
        }
        let mut stack: Vec<matrix::CVector> = Vec::with_capacity(8);
        for instr in &self.instrs {
            let op = match instr {
                Instr::Load(i) => {
                    stack.push(inputs[*i].coords().clone());
                    continue;
                }
                Instr::Negate => ops.negation(),
                Instr::RootA => ops.sqrt_not_pair().0,
                Instr::RootB => ops.sqrt_not_pair().1,
                Instr::Conjoin => ops.conjunction(),
                Instr::Disjoin => ops.disjunction(),
                Instr::Imply => ops.implication(),
            };
            let arg = match instr {
                Instr::Negate | Instr::RootA | Instr::RootB => {
                    stack.pop().expect("compiled program is well formed")
                }
                _ => {
                    let rhs = stack.pop().expect("compiled program is well formed");
                    let lhs = stack.pop().expect("compiled program is well formed");
                    matrix::kronecker_vec(&lhs, &rhs)
                }
            };
            stack.push(op.matrix().dot(&arg));
        }
        let out = stack.pop().expect("compiled program leaves one value");
        Ok(TruthValue::from_coords(out))
    }

    pub fn run_assignment(&self, ops: &OperatorSet, assignment: &Assignment) -> Result<TruthValue> {
        let inputs = self
            .atoms
            .iter()
            .map(|id| {
                assignment
                    .get(id)
                    .ok_or_else(|| Error::UnboundAtom(id.clone()))?
                    .to_truth_value(ops.basis())
            })
            .collect::<Result<Vec<_>>>()?;
        self.run(ops, &inputs)
    }
}

fn emit(f: &Formula, atoms: &[String], out: &mut Vec<Instr>) {
    let binary = |l: &Formula, r: &Formula, instr: Instr, out: &mut Vec<Instr>| {
        emit(l, atoms, out);
        emit(r, atoms, out);
        out.push(instr);
    };
    match f {
        Formula::Atom(id) => {
            let idx = atoms.binary_search(id).expect("atom list built from formula");
            out.push(Instr::Load(idx));
        }
        Formula::Not(x) => {
            emit(x, atoms, out);
            out.push(Instr::Negate);
        }
        Formula::RootA(x) => {
            emit(x, atoms, out);
            out.push(Instr::RootA);
        }
        Formula::RootB(x) => {
            emit(x, atoms, out);
            out.push(Instr::RootB);
        }
        Formula::And(l, r) => binary(l, r, Instr::Conjoin, out),
        Formula::Or(l, r) => binary(l, r, Instr::Disjoin, out),
        Formula::Implies(l, r) => binary(l, r, Instr::Imply, out),
    }
}

/// Evaluates `formula` bottom-up under `assignment`.
pub fn evaluate(formula: &Formula, assignment: &Assignment, ops: &OperatorSet) -> Result<TruthValue> {
    Program::compile(formula).run_assignment(ops, assignment)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TruthRow {
    pub values: Vec<bool>,
    pub c_s: Cx,
    pub c_n: Cx,
    pub label: Label,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TruthTable {
    pub atoms: Vec<String>,
    pub rows: Vec<TruthRow>,
}

/// Enumerates all crisp assignments, first atom most significant, `true`
/// before `false`; so two atoms give rows tt, tf, ft, ff.
pub fn truth_table(formula: &Formula, ops: &OperatorSet) -> Result<TruthTable> {
    let program = Program::compile(formula);
    let k = program.atoms().len();
    if k > MAX_TABLE_ATOMS {
        return Err(Error::TableTooLarge(k));
    }
    let basis = ops.basis();
    let (s, n) = (basis.truth(), basis.falsity());
    let rows = (0..1usize << k)
        .map(|row| {
            let values: Vec<bool> = (0..k).map(|j| row & (1 << (k - 1 - j)) == 0).collect();
            let inputs: Vec<TruthValue> = values
                .iter()
                .map(|&v| if v { s.clone() } else { n.clone() })
                .collect();
            let out = program.run(ops, &inputs)?;
            let (c_s, c_n) = project(basis, &out)?;
            Ok(TruthRow {
                values,
                c_s: Cx(c_s),
                c_n: Cx(c_n),
                label: Label::from_projection(c_s, c_n, CRISP_TOL),
            })
        })
        .collect::<Result<_>>()?;
    Ok(TruthTable {
        atoms: program.atoms().to_vec(),
        rows,
    })
}

/// Plain boolean semantics, for cross-checking the matrix evaluator.
pub fn classical_oracle(formula: &Formula, assignment: &BTreeMap<String, bool>) -> Result<bool> {
    Ok(match formula {
        Formula::Atom(id) => *assignment
            .get(id)
            .ok_or_else(|| Error::UnboundAtom(id.clone()))?,
        Formula::Not(x) => !classical_oracle(x, assignment)?,
        Formula::RootA(_) | Formula::RootB(_) => return Err(Error::RootInClassicalFormula),
        Formula::And(l, r) => classical_oracle(l, assignment)? & classical_oracle(r, assignment)?,
        Formula::Or(l, r) => classical_oracle(l, assignment)? | classical_oracle(r, assignment)?,
        Formula::Implies(l, r) => !classical_oracle(l, assignment)? | classical_oracle(r, assignment)?,
    })
}
