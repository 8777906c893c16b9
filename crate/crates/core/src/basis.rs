//! Orthonormal truth bases and truth-value vectors.
//!
//! A basis is a pair of real orthonormal vectors `s` ("true") and `n`
//! ("false") of dimension `Q >= 2`. Truth values are complex `Q`-vectors:
//! crisp (`s` or `n`), fuzzy (`αs + (1-α)n`) or complex superpositions
//! produced by the square roots of NOT.

use std::f64::consts::FRAC_1_SQRT_2;
use std::fmt;

use ndarray::Array1;
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::{self, c, CVector};

/// Tolerance for `⟨s,s⟩ = ⟨n,n⟩ = 1` and `⟨s,n⟩ = 0`.
pub const ORTHONORMAL_TOL: f64 = 1e-12;

const MAX_DRAWS: u32 = 16;
const DEGENERATE_COS: f64 = 1.0 - 1e-9;

#[derive(Debug, Clone, PartialEq)]
pub struct TruthBasis {
    s: Array1<f64>,
    n: Array1<f64>,
}

impl TruthBasis {
    /// Validates and wraps a pair of real vectors.
    pub fn new(s: Vec<f64>, n: Vec<f64>) -> Result<Self> {
        if s.len() != n.len() {
            return Err(Error::DimensionMismatch {
                expected: s.len(),
                found: n.len(),
            });
        }
        if s.len() < 2 {
            return Err(Error::DimensionTooSmall(s.len()));
        }
        let basis = TruthBasis {
            s: Array1::from(s),
            n: Array1::from(n),
        };
        let dev = basis.orthonormality_deviation();
        if dev > ORTHONORMAL_TOL || dev.is_nan() {
            return Err(Error::NotOrthonormal(dev));
        }
        Ok(basis)
    }

    /// Standard basis `s = (1,0)`, `n = (0,1)`.
    pub fn set1() -> Self {
        TruthBasis {
            s: Array1::from(vec![1.0, 0.0]),
            n: Array1::from(vec![0.0, 1.0]),
        }
    }

    /// Hadamard-like basis `s = (1,1)/√2`, `n = (1,-1)/√2`.
    pub fn set2() -> Self {
        TruthBasis {
            s: Array1::from(vec![FRAC_1_SQRT_2, FRAC_1_SQRT_2]),
            n: Array1::from(vec![FRAC_1_SQRT_2, -FRAC_1_SQRT_2]),
        }
    }

    pub fn dim(&self) -> usize {
        self.s.len()
    }

    pub fn s(&self) -> &Array1<f64> {
        &self.s
    }

    pub fn n(&self) -> &Array1<f64> {
        &self.n
    }

    pub fn s_complex(&self) -> CVector {
        self.s.mapv(|x| c(x, 0.0))
    }

    pub fn n_complex(&self) -> CVector {
        self.n.mapv(|x| c(x, 0.0))
    }

    pub fn truth(&self) -> TruthValue {
        TruthValue::from_coords(self.s_complex())
    }

    pub fn falsity(&self) -> TruthValue {
        TruthValue::from_coords(self.n_complex())
    }

    pub fn crisp(&self, value: bool) -> TruthValue {
        if value {
            self.truth()
        } else {
            self.falsity()
        }
    }

    /// `c_s·s + c_n·n`.
    pub fn combine(&self, c_s: Complex64, c_n: Complex64) -> TruthValue {
        let coords = self
            .s
            .iter()
            .zip(self.n.iter())
            .map(|(&si, &ni)| c_s * si + c_n * ni)
            .collect();
        TruthValue::from_coords(coords)
    }

    /// Max of `|⟨s,s⟩-1|`, `|⟨n,n⟩-1|` and `|⟨s,n⟩|`.
    pub fn orthonormality_deviation(&self) -> f64 {
        let ss = self.s.dot(&self.s);
        let nn = self.n.dot(&self.n);
        let sn = self.s.dot(&self.n);
        (ss - 1.0).abs().max((nn - 1.0).abs()).max(sn.abs())
    }
}

/// Which of the two fixed 2-dimensional bases to build.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CanonicalKind {
    Set1,
    Set2,
}

pub fn canonical_basis(kind: CanonicalKind) -> TruthBasis {
    match kind {
        CanonicalKind::Set1 => TruthBasis::set1(),
        CanonicalKind::Set2 => TruthBasis::set2(),
    }
}

/// Seeded random orthonormal basis of dimension `dim`.
///
/// Two vectors are drawn uniformly from `(-1, 1)^Q` and orthonormalized by
/// Gram–Schmidt (with one reorthogonalization pass). A near-parallel draw is
/// retried on the next ChaCha stream, up to 16 attempts.
pub fn random_basis(dim: usize, seed: u64) -> Result<TruthBasis> {
    if dim < 2 {
        return Err(Error::DimensionTooSmall(dim));
    }
    for attempt in 0..MAX_DRAWS {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(u64::from(attempt));
        let a: Array1<f64> = (0..dim).map(|_| rng.random_range(-1.0..1.0)).collect();
        let b: Array1<f64> = (0..dim).map(|_| rng.random_range(-1.0..1.0)).collect();
        if let Some(basis) = gram_schmidt(a, b) {
            return Ok(basis);
        }
    }
    Err(Error::DegenerateBasis(MAX_DRAWS))
}

fn gram_schmidt(a: Array1<f64>, b: Array1<f64>) -> Option<TruthBasis> {
    let na = a.dot(&a).sqrt();
    let nb = b.dot(&b).sqrt();
    if na == 0.0 || nb == 0.0 {
        return None;
    }
    let cos = a.dot(&b) / (na * nb);
    if cos.abs() > DEGENERATE_COS {
        return None;
    }
    let s = a / na;
    let mut n = b;
    for _ in 0..2 {
        let proj = s.dot(&n);
        n = &n - &(&s * proj);
    }
    let nn = n.dot(&n).sqrt();
    let n = n / nn;
    let basis = TruthBasis { s, n };
    (basis.orthonormality_deviation() <= ORTHONORMAL_TOL).then_some(basis)
}

/// `αs + (1-α)n` for `α ∈ [0, 1]`.
pub fn fuzzy_value(basis: &TruthBasis, alpha: f64) -> Result<TruthValue> {
    if !(0.0..=1.0).contains(&alpha) {
        return Err(Error::FuzzyDomain(alpha));
    }
    Ok(basis.combine(c(alpha, 0.0), c(1.0 - alpha, 0.0)))
}

/// Projection coefficients `(⟨s,v⟩, ⟨n,v⟩)`.
pub fn project(basis: &TruthBasis, v: &TruthValue) -> Result<(Complex64, Complex64)> {
    if v.dim() != basis.dim() {
        return Err(Error::DimensionMismatch {
            expected: basis.dim(),
            found: v.dim(),
        });
    }
    Ok((
        matrix::dot(&basis.s_complex(), v.coords()),
        matrix::dot(&basis.n_complex(), v.coords()),
    ))
}

/// A complex truth-value vector.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct TruthValue {
    #[serde(
        serialize_with = "matrix::pairs::serialize_vector",
        deserialize_with = "matrix::pairs::deserialize_vector"
    )]
    coords: CVector,
}

impl TruthValue {
    pub fn from_coords(coords: CVector) -> Self {
        TruthValue { coords }
    }

    pub fn coords(&self) -> &CVector {
        &self.coords
    }

    pub fn into_coords(self) -> CVector {
        self.coords
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    /// Max entrywise modulus of the difference.
    pub fn distance(&self, other: &TruthValue) -> f64 {
        if self.dim() != other.dim() {
            return f64::INFINITY;
        }
        matrix::max_abs_diff_vec(&self.coords, &other.coords)
    }
}

/// Crisp reading of a truth value from its projection coefficients.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Label {
    True,
    False,
    /// Neither `s` nor `n` within tolerance (fuzzy or virtual).
    Mixed,
}

impl Label {
    pub fn from_projection(c_s: Complex64, c_n: Complex64, tol: f64) -> Label {
        let near = |z: Complex64, target: f64| (z - c(target, 0.0)).norm() <= tol;
        if near(c_s, 1.0) && near(c_n, 0.0) {
            Label::True
        } else if near(c_s, 0.0) && near(c_n, 1.0) {
            Label::False
        } else {
            Label::Mixed
        }
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Label::True => "true",
            Label::False => "false",
            Label::Mixed => "mixed",
        })
    }
}

/// How to obtain a basis; the JSON form is
/// `{"kind":"set1"|"set2"|"random","dim":<int>,"seed":<int>}`.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawBasisSpec", into = "RawBasisSpec")]
pub enum BasisSpec {
    #[default]
    Set1,
    Set2,
    Random { dim: usize, seed: u64 },
}

impl BasisSpec {
    /// Builds a spec from loose parts as they arrive from JSON or CLI flags.
    pub fn from_parts(kind: &str, dim: Option<usize>, seed: Option<u64>) -> Result<Self> {
        match kind {
            "set1" | "set2" => {
                let (name, spec) = if kind == "set1" {
                    ("set1", BasisSpec::Set1)
                } else {
                    ("set2", BasisSpec::Set2)
                };
                match dim {
                    Some(d) if d != 2 => Err(Error::FixedDimension { kind: name, dim: d }),
                    _ => Ok(spec),
                }
            }
            "random" => {
                let dim = dim.ok_or(Error::MissingDimension)?;
                if dim < 2 {
                    return Err(Error::DimensionTooSmall(dim));
                }
                Ok(BasisSpec::Random {
                    dim,
                    seed: seed.unwrap_or(0),
                })
            }
            other => Err(Error::UnknownBasisKind(other.to_string())),
        }
    }

    pub fn build(&self) -> Result<TruthBasis> {
        match *self {
            BasisSpec::Set1 => Ok(TruthBasis::set1()),
            BasisSpec::Set2 => Ok(TruthBasis::set2()),
            BasisSpec::Random { dim, seed } => random_basis(dim, seed),
        }
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawBasisSpec {
    kind: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    dim: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    seed: Option<u64>,
}

impl TryFrom<RawBasisSpec> for BasisSpec {
    type Error = Error;

    fn try_from(raw: RawBasisSpec) -> Result<Self> {
        BasisSpec::from_parts(&raw.kind, raw.dim, raw.seed)
    }
}

impl From<BasisSpec> for RawBasisSpec {
    fn from(spec: BasisSpec) -> Self {
        match spec {
            BasisSpec::Set1 => RawBasisSpec {
                kind: "set1".into(),
                dim: None,
                seed: None,
            },
            BasisSpec::Set2 => RawBasisSpec {
                kind: "set2".into(),
                dim: None,
                seed: None,
            },
            BasisSpec::Random { dim, seed } => RawBasisSpec {
                kind: "random".into(),
                dim: Some(dim),
                seed: Some(seed),
            },
        }
    }
}
