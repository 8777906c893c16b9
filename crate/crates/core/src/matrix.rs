//! Dense complex matrices and vectors.
//!
//! Storage is `ndarray` (row-major). The Kronecker product lives here because
//! every dyadic operator is built from it.

use ndarray::{Array1, Array2};
use num_complex::Complex64;
use serde::ser::SerializeSeq;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

pub type CMatrix = Array2<Complex64>;
pub type CVector = Array1<Complex64>;

pub const ZERO: Complex64 = Complex64::new(0.0, 0.0);
pub const ONE: Complex64 = Complex64::new(1.0, 0.0);
pub const I: Complex64 = Complex64::new(0.0, 1.0);

#[inline]
pub fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

/// Builds a complex matrix from a row-major slice of real entries.
pub fn from_real_rows(rows: usize, cols: usize, data: &[f64]) -> CMatrix {
    assert_eq!(rows * cols, data.len(), "data length does not match shape");
    Array2::from_shape_fn((rows, cols), |(i, j)| c(data[i * cols + j], 0.0))
}

/// Kronecker product `U ⊗ V = [u_ij V]`.
///
/// No shape restrictions; the result is `(r_u * r_v) × (c_u * c_v)`.
pub fn kronecker(u: &CMatrix, v: &CMatrix) -> CMatrix {
    let (ur, uc) = u.dim();
    let (vr, vc) = v.dim();
    let mut out = Array2::from_elem((ur * vr, uc * vc), ZERO);
    for ((i, j), &uij) in u.indexed_iter() {
        if uij == ZERO {
            continue;
        }
        for ((k, l), &vkl) in v.indexed_iter() {
            out[[i * vr + k, j * vc + l]] = uij * vkl;
        }
    }
    out
}

/// Kronecker product of two column vectors.
pub fn kronecker_vec(a: &CVector, b: &CVector) -> CVector {
    let mut out = Array1::from_elem(a.len() * b.len(), ZERO);
    for (i, &ai) in a.iter().enumerate() {
        for (k, &bk) in b.iter().enumerate() {
            out[i * b.len() + k] = ai * bk;
        }
    }
    out
}

/// Outer product `a bᵀ` (plain transpose, no conjugation).
pub fn outer(a: &CVector, b: &CVector) -> CMatrix {
    Array2::from_shape_fn((a.len(), b.len()), |(i, j)| a[i] * b[j])
}

/// Bilinear product `aᵀ b` (no conjugation).
pub fn dot(a: &CVector, b: &CVector) -> Complex64 {
    a.iter().zip(b.iter()).map(|(x, y)| x * y).sum()
}

pub fn identity(dim: usize) -> CMatrix {
    Array2::from_shape_fn((dim, dim), |(i, j)| if i == j { ONE } else { ZERO })
}

pub fn conj(m: &CMatrix) -> CMatrix {
    m.mapv(|z| z.conj())
}

pub fn matmul(a: &CMatrix, b: &CMatrix) -> Result<CMatrix> {
    if a.ncols() != b.nrows() {
        return Err(Error::ShapeMismatch(a.dim(), b.dim()));
    }
    Ok(a.dot(b))
}

/// Largest entrywise modulus of `a - b`.
pub fn max_abs_diff(a: &CMatrix, b: &CMatrix) -> Result<f64> {
    if a.dim() != b.dim() {
        return Err(Error::ShapeMismatch(a.dim(), b.dim()));
    }
    Ok(a.iter()
        .zip(b.iter())
        .map(|(x, y)| (x - y).norm())
        .fold(0.0, f64::max))
}

pub fn max_abs_diff_vec(a: &CVector, b: &CVector) -> f64 {
    debug_assert_eq!(a.len(), b.len());
    a.iter()
        .zip(b.iter())
        .map(|(x, y)| (x - y).norm())
        .fold(0.0, f64::max)
}

/// Serde helpers for the `[re, im]` pair encoding used by every JSON surface.
pub mod pairs {
    use super::*;

    #[derive(Serialize, Deserialize)]
    struct Pair(f64, f64);

    pub fn serialize_complex<S: Serializer>(z: &Complex64, s: S) -> Result<S::Ok, S::Error> {
        Pair(z.re, z.im).serialize(s)
    }

    pub fn deserialize_complex<'de, D: Deserializer<'de>>(d: D) -> Result<Complex64, D::Error> {
        let Pair(re, im) = Pair::deserialize(d)?;
        Ok(c(re, im))
    }

    pub fn serialize_vector<S: Serializer>(v: &CVector, s: S) -> Result<S::Ok, S::Error> {
        serialize_iter(v.iter(), v.len(), s)
    }

    pub fn deserialize_vector<'de, D: Deserializer<'de>>(d: D) -> Result<CVector, D::Error> {
        let raw: Vec<Pair> = Vec::deserialize(d)?;
        Ok(raw.into_iter().map(|Pair(re, im)| c(re, im)).collect())
    }

    pub fn serialize_iter<'a, S, I>(it: I, len: usize, s: S) -> Result<S::Ok, S::Error>
    where
        S: Serializer,
        I: Iterator<Item = &'a Complex64>,
    {
        let mut seq = s.serialize_seq(Some(len))?;
        for z in it {
            seq.serialize_element(&Pair(z.re, z.im))?;
        }
        seq.end()
    }

    /// Wrapper that serializes a complex scalar as `[re, im]`.
    #[derive(Debug, Clone, Copy, PartialEq)]
    pub struct Cx(pub Complex64);

    impl Serialize for Cx {
        fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
            serialize_complex(&self.0, s)
        }
    }

    impl<'de> Deserialize<'de> for Cx {
        fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
            deserialize_complex(d).map(Cx)
        }
    }
}
