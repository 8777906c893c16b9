//! Monadic and dyadic logic operators built from a truth basis.
//!
//! Monadic operators are `Q×Q`; dyadic operators are `Q×Q²` and act on the
//! Kronecker product of their two arguments. Every dyadic operator is
//! `W Hᵀ`, where `H = [s⊗s, s⊗n, n⊗s, n⊗n]` and the columns of `W` are the
//! outputs the connective assigns to those four crisp pairs.

use std::fmt;
use std::str::FromStr;

use ndarray::Array2;
use serde::{Deserialize, Serialize, Serializer};

use crate::basis::{TruthBasis, TruthValue};
use crate::error::{Error, Result};
use crate::matrix::{self, c, CMatrix, CVector};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Arity {
    Monadic,
    Dyadic,
}

impl Arity {
    pub fn name(self) -> &'static str {
        match self {
            Arity::Monadic => "monadic",
            Arity::Dyadic => "dyadic",
        }
    }

    fn cols(self, dim: usize) -> usize {
        match self {
            Arity::Monadic => dim,
            Arity::Dyadic => dim * dim,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Role {
    Identity,
    Negation,
    RootA,
    RootB,
    Implication,
    Disjunction,
    Conjunction,
    /// The implication matrix applied to counterfactual propositions.
    CounterfactualImplication,
    Custom(String),
}

impl Role {
    pub fn tag(&self) -> &str {
        match self {
            Role::Identity => "I",
            Role::Negation => "N",
            Role::RootA => "A",
            Role::RootB => "B",
            Role::Implication => "L",
            Role::Disjunction => "D",
            Role::Conjunction => "C",
            Role::CounterfactualImplication => "Lc",
            Role::Custom(name) => name,
        }
    }
}

impl fmt::Display for Role {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

/// A complex matrix tagged with its arity and role.
#[derive(Debug, Clone, PartialEq)]
pub struct LogicOperator {
    matrix: CMatrix,
    arity: Arity,
    role: Role,
}

impl LogicOperator {
    /// Wraps `matrix`, checking that its shape fits `arity` over dimension `dim`.
    pub fn new(matrix: CMatrix, arity: Arity, role: Role, dim: usize) -> Result<Self> {
        let expected = (dim, arity.cols(dim));
        if matrix.dim() != expected {
            return Err(Error::ShapeMismatch(matrix.dim(), expected));
        }
        Ok(LogicOperator {
            matrix,
            arity,
            role,
        })
    }

    pub fn matrix(&self) -> &CMatrix {
        &self.matrix
    }

    pub fn arity(&self) -> Arity {
        self.arity
    }

    pub fn role(&self) -> &Role {
        &self.role
    }

    pub fn dim(&self) -> usize {
        self.matrix.nrows()
    }

    pub fn with_role(mut self, role: Role) -> Self {
        self.role = role;
        self
    }

    /// True when every entry has zero imaginary part.
    pub fn is_real(&self) -> bool {
        self.matrix.iter().all(|z| z.im == 0.0)
    }

    fn expect_arity(&self, expected: Arity) -> Result<()> {
        if self.arity != expected {
            return Err(Error::ArityMismatch {
                role: self.role.tag().to_string(),
                expected: expected.name(),
                actual: self.arity.name(),
            });
        }
        Ok(())
    }
}

/// JSON dump: `{"role", "arity", "rows", "cols", "data": [[re,im],...]}`, row-major.
impl Serialize for LogicOperator {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Dump<'a> {
            role: &'a str,
            arity: Arity,
            rows: usize,
            cols: usize,
            #[serde(serialize_with = "row_major")]
            data: &'a CMatrix,
        }

        fn row_major<S: Serializer>(m: &&CMatrix, s: S) -> std::result::Result<S::Ok, S::Error> {
            // `iter()` walks in logical (row-major) order regardless of layout.
            matrix::pairs::serialize_iter(m.iter(), m.len(), s)
        }

        Dump {
            role: self.role.tag(),
            arity: self.arity,
            rows: self.matrix.nrows(),
            cols: self.matrix.ncols(),
            data: &self.matrix,
        }
        .serialize(s)
    }
}

pub fn apply_monadic(op: &LogicOperator, v: &TruthValue) -> Result<TruthValue> {
    op.expect_arity(Arity::Monadic)?;
    if v.dim() != op.matrix.ncols() {
        return Err(Error::DimensionMismatch {
            expected: op.matrix.ncols(),
            found: v.dim(),
        });
    }
    Ok(TruthValue::from_coords(op.matrix.dot(v.coords())))
}

/// `op · (u ⊗ v)`.
pub fn apply_dyadic(op: &LogicOperator, u: &TruthValue, v: &TruthValue) -> Result<TruthValue> {
    op.expect_arity(Arity::Dyadic)?;
    for arg in [u, v] {
        if arg.dim() != op.dim() {
            return Err(Error::DimensionMismatch {
                expected: op.dim(),
                found: arg.dim(),
            });
        }
    }
    let uv = matrix::kronecker_vec(u.coords(), v.coords());
    Ok(TruthValue::from_coords(op.matrix.dot(&uv)))
}

/// Outputs of a two-place connective on `(s⊗s, s⊗n, n⊗s, n⊗n)`, with
/// `true` standing for `s` and `false` for `n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct DyadicSignature(pub [bool; 4]);

impl DyadicSignature {
    pub const IMPLICATION: Self = DyadicSignature([true, false, true, true]);
    pub const DISJUNCTION: Self = DyadicSignature([true, true, true, false]);
    pub const CONJUNCTION: Self = DyadicSignature([true, false, false, false]);

    /// All 16 signatures, `(n,n,n,n)` first.
    pub fn all() -> impl Iterator<Item = DyadicSignature> {
        (0u8..16).map(|bits| DyadicSignature(std::array::from_fn(|k| bits & (8 >> k) != 0)))
    }

    pub fn output(&self, p: bool, q: bool) -> bool {
        self.0[usize::from(!p) * 2 + usize::from(!q)]
    }

    fn named_role(&self) -> Role {
        match *self {
            Self::IMPLICATION => Role::Implication,
            Self::DISJUNCTION => Role::Disjunction,
            Self::CONJUNCTION => Role::Conjunction,
            other => Role::Custom(other.to_string()),
        }
    }
}

impl fmt::Display for DyadicSignature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sym = |b: bool| if b { 's' } else { 'n' };
        let [a, b, c, d] = self.0;
        write!(f, "({},{},{},{})", sym(a), sym(b), sym(c), sym(d))
    }
}

impl FromStr for DyadicSignature {
    type Err = String;

    /// Accepts `snss`, `(s,n,s,s)`, `TFTT` and similar spellings.
    fn from_str(src: &str) -> std::result::Result<Self, String> {
        let outs: Vec<bool> = src
            .chars()
            .filter(|ch| !matches!(ch, '(' | ')' | ',' | ' '))
            .map(|ch| match ch {
                's' | 'S' | 't' | 'T' => Ok(true),
                'n' | 'N' | 'f' | 'F' => Ok(false),
                other => Err(format!("invalid signature symbol {other:?}")),
            })
            .collect::<std::result::Result<_, _>>()?;
        let arr: [bool; 4] = outs
            .try_into()
            .map_err(|v: Vec<bool>| format!("signature needs 4 entries, got {}", v.len()))?;
        Ok(DyadicSignature(arr))
    }
}

/// Which square root of NOT.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Root {
    A,
    B,
}

impl Root {
    /// The other root, which is also the entrywise complex conjugate.
    pub fn conjugate(self) -> Root {
        match self {
            Root::A => Root::B,
            Root::B => Root::A,
        }
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Root::A => "A",
            Root::B => "B",
        })
    }
}

/// All operators of one basis, built once.
///
/// `H` is materialized here and shared by every dyadic construction.
#[derive(Debug, Clone)]
pub struct OperatorSet {
    basis: TruthBasis,
    h: CMatrix,
    identity: LogicOperator,
    negation: LogicOperator,
    root_a: LogicOperator,
    root_b: LogicOperator,
    implication: LogicOperator,
    disjunction: LogicOperator,
    conjunction: LogicOperator,
}

impl OperatorSet {
    pub fn new(basis: &TruthBasis) -> Self {
        let q = basis.dim();
        let s = basis.s_complex();
        let n = basis.n_complex();

        let pairs = [
            matrix::kronecker_vec(&s, &s),
            matrix::kronecker_vec(&s, &n),
            matrix::kronecker_vec(&n, &s),
            matrix::kronecker_vec(&n, &n),
        ];
        let h = Array2::from_shape_fn((q * q, 4), |(i, k)| pairs[k][i]);

        // I = nnᵀ + ssᵀ, N = snᵀ + nsᵀ
        let i_mat = matrix::outer(&n, &n) + matrix::outer(&s, &s);
        let n_mat = matrix::outer(&s, &n) + matrix::outer(&n, &s);

        // A = ½(1+i)I + ½(1-i)N, B = ½(1-i)I + ½(1+i)N
        let plus = c(0.5, 0.5);
        let minus = c(0.5, -0.5);
        let a_mat = i_mat.mapv(|z| z * plus) + n_mat.mapv(|z| z * minus);
        let b_mat = i_mat.mapv(|z| z * minus) + n_mat.mapv(|z| z * plus);

        let mono = |m: CMatrix, role: Role| LogicOperator {
            matrix: m,
            arity: Arity::Monadic,
            role,
        };

        OperatorSet {
            basis: basis.clone(),
            identity: mono(i_mat, Role::Identity),
            negation: mono(n_mat, Role::Negation),
            root_a: mono(a_mat, Role::RootA),
            root_b: mono(b_mat, Role::RootB),
            implication: dyadic_operator(basis, &h, DyadicSignature::IMPLICATION),
            disjunction: dyadic_operator(basis, &h, DyadicSignature::DISJUNCTION),
            conjunction: dyadic_operator(basis, &h, DyadicSignature::CONJUNCTION),
            h,
        }
    }

    pub fn basis(&self) -> &TruthBasis {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.dim()
    }

    /// `H = [s⊗s, s⊗n, n⊗s, n⊗n]`, shape `Q²×4`.
    pub fn pair_matrix(&self) -> &CMatrix {
        &self.h
    }

    pub fn identity(&self) -> &LogicOperator {
        &self.identity
    }

    pub fn negation(&self) -> &LogicOperator {
        &self.negation
    }

    /// The two square roots of NOT, `(A, B)`.
    pub fn sqrt_not_pair(&self) -> (&LogicOperator, &LogicOperator) {
        (&self.root_a, &self.root_b)
    }

    pub fn root(&self, which: Root) -> &LogicOperator {
        match which {
            Root::A => &self.root_a,
            Root::B => &self.root_b,
        }
    }

    pub fn implication(&self) -> &LogicOperator {
        &self.implication
    }

    pub fn disjunction(&self) -> &LogicOperator {
        &self.disjunction
    }

    pub fn conjunction(&self) -> &LogicOperator {
        &self.conjunction
    }

    /// The implication matrix under its counterfactual role tag.
    pub fn counterfactual_implication(&self) -> LogicOperator {
        self.implication
            .clone()
            .with_role(Role::CounterfactualImplication)
    }

    /// `[w₁ w₂ w₃ w₄] Hᵀ` for an arbitrary signature.
    pub fn dyadic(&self, sig: DyadicSignature) -> LogicOperator {
        dyadic_operator(&self.basis, &self.h, sig)
    }

    /// Disjunction with the roots as switching variables:
    /// `D(X B s ⊗ Y A n)` for `X, Y ∈ {A, B}`.
    pub fn switching_gate_disjunction(&self, x: Root, y: Root) -> TruthValue {
        let s = self.basis.s_complex();
        let n = self.basis.n_complex();
        let left: CVector = self.root(x).matrix.dot(&self.root_b.matrix.dot(&s));
        let right: CVector = self.root(y).matrix.dot(&self.root_a.matrix.dot(&n));
        let uv = matrix::kronecker_vec(&left, &right);
        TruthValue::from_coords(self.disjunction.matrix.dot(&uv))
    }

    /// `NOR(X, Y) = N · D(X, Y)`.
    pub fn switching_gate_nor(&self, x: Root, y: Root) -> TruthValue {
        let d = self.switching_gate_disjunction(x, y);
        TruthValue::from_coords(self.negation.matrix.dot(d.coords()))
    }
}

fn dyadic_operator(basis: &TruthBasis, h: &CMatrix, sig: DyadicSignature) -> LogicOperator {
    let s = basis.s_complex();
    let n = basis.n_complex();
    let w = Array2::from_shape_fn((basis.dim(), 4), |(i, k)| if sig.0[k] { s[i] } else { n[i] });
    LogicOperator {
        matrix: w.dot(&h.t()),
        arity: Arity::Dyadic,
        role: sig.named_role(),
    }
}
