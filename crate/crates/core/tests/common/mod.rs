#![allow(dead_code)]

use std::collections::BTreeMap;

use ndarray::Array2;
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use vlogic_core::{random_basis, CMatrix, DyadicSignature, Formula, TruthBasis};

pub const ATOMS: [&str; 4] = ["p", "q", "r", "s"];

/// set1, set2 and random bases for Q ∈ {2,3,5,8} × 20 seeds.
pub fn basis_sweep() -> Vec<(String, TruthBasis)> {
    let mut out = vec![
        ("set1".to_string(), TruthBasis::set1()),
        ("set2".to_string(), TruthBasis::set2()),
    ];
    for q in [2, 3, 5, 8] {
        for seed in 0..20 {
            out.push((format!("random Q={q} seed={seed}"), random_basis(q, seed).unwrap()));
        }
    }
    out
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_complex_matrix(rng: &mut impl Rng, rows: usize, cols: usize) -> CMatrix {
    Array2::from_shape_fn((rows, cols), |_| {
        Complex64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0))
    })
}

/// Random root-free formula over at most four atoms.
pub fn random_formula(rng: &mut impl Rng, depth: usize) -> Formula {
    if depth == 0 || rng.random_bool(0.25) {
        return Formula::atom(ATOMS[rng.random_range(0..ATOMS.len())]);
    }
    match rng.random_range(0..4) {
        0 => Formula::not(random_formula(rng, depth - 1)),
        1 => Formula::and(random_formula(rng, depth - 1), random_formula(rng, depth - 1)),
        2 => Formula::or(random_formula(rng, depth - 1), random_formula(rng, depth - 1)),
        _ => Formula::implies(random_formula(rng, depth - 1), random_formula(rng, depth - 1)),
    }
}

/// Every crisp assignment over `atoms`.
pub fn crisp_assignments(atoms: &[String]) -> Vec<BTreeMap<String, bool>> {
    (0..1usize << atoms.len())
        .map(|bits| {
            atoms
                .iter()
                .enumerate()
                .map(|(j, a)| (a.clone(), bits & (1 << j) != 0))
                .collect()
        })
        .collect()
}

/// `⟨s, Op(u⊗v)⟩` for fuzzy `u = αs+(1-α)n`, `v = βs+(1-β)n`, by expanding
/// over the four crisp pairs and summing the weights of those the
/// connective sends to `s`.
pub fn bilinear_truth(sig: DyadicSignature, alpha: f64, beta: f64) -> f64 {
    let mut total = 0.0;
    for (p, wp) in [(true, alpha), (false, 1.0 - alpha)] {
        for (q, wq) in [(true, beta), (false, 1.0 - beta)] {
            if sig.output(p, q) {
                total += wp * wq;
            }
        }
    }
    total
}
