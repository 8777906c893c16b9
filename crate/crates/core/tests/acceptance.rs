//! Acceptance criteria, one printed `[PASS]`/`[FAIL]` line each.
//!
//! Run with `cargo test -p vlogic-core --test acceptance -- --nocapture`.

mod common;

use std::f64::consts::FRAC_1_SQRT_2;
use std::time::{Duration, Instant};

use num_complex::Complex64;
use vlogic_core::identities::{check_de_morgan, check_implication_disjunction, check_root_algebra};
use vlogic_core::matrix::{c, from_real_rows, kronecker, I, ONE, ZERO};
use vlogic_core::{
    admissible, apply_dyadic, apply_monadic, classical_oracle, evaluate, fuzzy_value,
    operator_distance, plausibility, project, random_basis, resolve, run_scenario, virtualize,
    Assignment, CMatrix, CounterfactualScenario, DyadicSignature, EvidenceBase, Error, Label,
    OperatorSet, PropositionRef, Root, TruthBasis,
};

const EXACT_TOL: f64 = 1e-15;
const TOL: f64 = 1e-12;

struct Outcome {
    passed: bool,
    detail: String,
}

impl Outcome {
    fn new(passed: bool, detail: impl Into<String>) -> Self {
        Outcome {
            passed,
            detail: detail.into(),
        }
    }
}

fn cm(rows: usize, cols: usize, data: &[Complex64]) -> CMatrix {
    CMatrix::from_shape_vec((rows, cols), data.to_vec()).unwrap()
}

fn scaled(m: CMatrix, k: f64) -> CMatrix {
    m.mapv(|z| z * k)
}

fn max_dev(pairs: &[(&CMatrix, &CMatrix)]) -> f64 {
    pairs
        .iter()
        .map(|(a, b)| operator_distance(a, b).unwrap_or(f64::INFINITY))
        .fold(0.0, f64::max)
}

fn scenario_path(name: &str) -> String {
    format!("{}/../../scenarios/{name}.json", env!("CARGO_MANIFEST_DIR"))
}

fn load_scenario(name: &str) -> CounterfactualScenario {
    let src = std::fs::read_to_string(scenario_path(name)).unwrap();
    CounterfactualScenario::from_json(&src).unwrap()
}

fn ac1_worked_matrices() -> Outcome {
    let start = Instant::now();
    let h = c(0.5, 0.5);
    let hc = c(0.5, -0.5);

    let set1 = OperatorSet::new(&TruthBasis::set1());
    let set1_expected = [
        cm(2, 2, &[ONE, ZERO, ZERO, ONE]),
        cm(2, 2, &[ZERO, ONE, ONE, ZERO]),
        cm(2, 2, &[h, hc, hc, h]),
        cm(2, 2, &[hc, h, h, hc]),
        from_real_rows(2, 4, &[1., 0., 1., 1., 0., 1., 0., 0.]),
        from_real_rows(2, 4, &[1., 1., 1., 0., 0., 0., 0., 1.]),
        from_real_rows(2, 4, &[1., 0., 0., 0., 0., 1., 1., 1.]),
    ];
    let set2 = OperatorSet::new(&TruthBasis::set2());
    let set2_expected = [
        cm(2, 2, &[ONE, ZERO, ZERO, ONE]),
        cm(2, 2, &[ONE, ZERO, ZERO, -ONE]),
        cm(2, 2, &[ONE, ZERO, ZERO, I]),
        cm(2, 2, &[ONE, ZERO, ZERO, -I]),
        scaled(from_real_rows(2, 4, &[2., 0., 0., 0., 1., 1., -1., 1.]), FRAC_1_SQRT_2),
        scaled(from_real_rows(2, 4, &[2., 0., 0., 0., 1., 1., 1., -1.]), FRAC_1_SQRT_2),
        scaled(from_real_rows(2, 4, &[2., 0., 0., 0., -1., 1., 1., 1.]), FRAC_1_SQRT_2),
    ];

    let generated = |o: &OperatorSet| {
        [
            o.identity().matrix().clone(),
            o.negation().matrix().clone(),
            o.root(Root::A).matrix().clone(),
            o.root(Root::B).matrix().clone(),
            o.implication().matrix().clone(),
            o.disjunction().matrix().clone(),
            o.conjunction().matrix().clone(),
        ]
    };
    let g1 = generated(&set1);
    let g2 = generated(&set2);
    let pairs: Vec<_> = g1
        .iter()
        .zip(&set1_expected)
        .chain(g2.iter().zip(&set2_expected))
        .collect();
    let dev = max_dev(&pairs);
    let elapsed = start.elapsed();
    Outcome::new(
        dev <= EXACT_TOL && elapsed < Duration::from_secs(1),
        format!("max deviation {dev:.3e} (tol {EXACT_TOL:e}), {elapsed:.2?} (< 1s)"),
    )
}

fn ac2_kronecker() -> Outcome {
    let u = from_real_rows(2, 2, &[1., 0., 2., -1.]);
    let v = from_real_rows(2, 3, &[1., -1., 4., 3., 1., 0.]);
    let expected = from_real_rows(
        4,
        6,
        &[
            1., -1., 4., 0., 0., 0., //
            3., 1., 0., 0., 0., 0., //
            2., -2., 8., -1., 1., -4., //
            6., 2., 0., -3., -1., 0.,
        ],
    );
    let exact = kronecker(&u, &v) == expected;

    let mut rng = common::rng(2);
    let mut worst = 0.0f64;
    for _ in 0..100 {
        let u1 = common::random_complex_matrix(&mut rng, 3, 2);
        let u2 = common::random_complex_matrix(&mut rng, 2, 4);
        let v1 = common::random_complex_matrix(&mut rng, 2, 3);
        let v2 = common::random_complex_matrix(&mut rng, 3, 2);
        let lhs = kronecker(&u1, &v1).dot(&kronecker(&u2, &v2));
        let rhs = kronecker(&u1.dot(&u2), &v1.dot(&v2));
        worst = worst.max(operator_distance(&lhs, &rhs).unwrap());
    }
    Outcome::new(
        exact && worst <= TOL,
        format!("worked product exact: {exact}; mixed-product max deviation {worst:.3e} over 100 quadruples (tol {TOL:e})"),
    )
}

fn ac3_root_algebra() -> Outcome {
    let start = Instant::now();
    let sweep = common::basis_sweep();
    let mut worst = 0.0f64;
    let mut failures = Vec::new();
    for (label, basis) in &sweep {
        for check in check_root_algebra(basis, TOL) {
            worst = worst.max(check.deviation);
            if !check.passed {
                failures.push(format!("{label}: {}", check.name));
            }
        }
    }
    let elapsed = start.elapsed();
    Outcome::new(
        failures.is_empty() && elapsed < Duration::from_secs(5),
        format!(
            "7 identities × {} bases, max deviation {worst:.3e} (tol {TOL:e}), {elapsed:.2?} (< 5s){}",
            sweep.len(),
            if failures.is_empty() { String::new() } else { format!(", failures: {failures:?}") }
        ),
    )
}

fn ac4_tautologies() -> Outcome {
    let sweep = common::basis_sweep();
    let mut worst = 0.0f64;
    let mut failures = Vec::new();
    for (label, basis) in &sweep {
        let (dm1, dm2) = check_de_morgan(basis, TOL);
        for check in [check_implication_disjunction(basis, TOL), dm1, dm2] {
            worst = worst.max(check.deviation);
            if !check.passed {
                failures.push(format!("{label}: {}", check.name));
            }
        }
    }
    Outcome::new(
        failures.is_empty(),
        format!("3 identities × {} bases, max deviation {worst:.3e} (tol {TOL:e}){}", sweep.len(),
            if failures.is_empty() { String::new() } else { format!(", failures: {failures:?}") }),
    )
}

fn ac5_crisp_semantics() -> Outcome {
    let bases = [
        TruthBasis::set1(),
        TruthBasis::set2(),
        random_basis(3, 5).unwrap(),
    ];
    // classical truth table, written out independently of the signatures
    let table: [(bool, bool, bool, bool, bool); 4] = [
        (true, true, true, true, true),
        (true, false, false, true, false),
        (false, true, true, true, false),
        (false, false, true, false, false),
    ];
    let mut table_ok = true;
    for basis in &bases {
        let ops = OperatorSet::new(basis);
        for &(p, q, imp, or, and) in &table {
            let (u, v) = (basis.crisp(p), basis.crisp(q));
            for (op, want) in [(ops.implication(), imp), (ops.disjunction(), or), (ops.conjunction(), and)] {
                let got = apply_dyadic(op, &u, &v).unwrap();
                table_ok &= got.distance(&basis.crisp(want)) <= TOL;
            }
        }
    }

    let mut rng = common::rng(5);
    let formulas: Vec<_> = (0..500).map(|_| common::random_formula(&mut rng, 5)).collect();
    let mut evaluations = 0usize;
    let mut mismatches = 0usize;
    for basis in &bases {
        let ops = OperatorSet::new(basis);
        for f in &formulas {
            for crisp in common::crisp_assignments(&f.atoms()) {
                let want = classical_oracle(f, &crisp).unwrap();
                let got = evaluate(f, &Assignment::from(&crisp), &ops).unwrap();
                evaluations += 1;
                if got.distance(&basis.crisp(want)) > TOL {
                    mismatches += 1;
                }
            }
        }
    }
    Outcome::new(
        table_ok && mismatches == 0,
        format!("truth table ok: {table_ok}; {} formulas, {evaluations} evaluations, {mismatches} mismatches", formulas.len()),
    )
}

const ADMISSIBLE_PAIRS: [(bool, bool); 3] = [(true, true), (false, true), (false, false)];

fn scenario(p: bool, q: bool, root: Root, evidence: EvidenceBase) -> CounterfactualScenario {
    CounterfactualScenario {
        basis: None,
        p_star: PropositionRef::new("p", p),
        q_star: PropositionRef::new("q", q),
        evidence,
        root,
    }
}

fn ac6_virtualization() -> Outcome {
    let mut worst = 0.0f64;
    let mut modulus_dev = 0.0f64;
    let mut cases = 0;
    for (_, basis) in common::basis_sweep() {
        let ops = OperatorSet::new(&basis);
        let s = basis.s_complex();
        let n = basis.n_complex();
        let half = |a: f64, b: f64| c(0.5 * a, 0.5 * b);
        let want_a = s.mapv(|x| x * half(1., 1.)) + n.mapv(|x| x * half(1., -1.));
        let want_b = s.mapv(|x| x * half(1., -1.)) + n.mapv(|x| x * half(1., 1.));
        for (p, q) in ADMISSIBLE_PAIRS {
            let lv = apply_dyadic(ops.implication(), &basis.crisp(p), &basis.crisp(q)).unwrap();
            for (root, want) in [(Root::A, &want_a), (Root::B, &want_b)] {
                let direct = apply_monadic(ops.root(root), &lv).unwrap();
                let virt = virtualize(&ops, &scenario(p, q, root, EvidenceBase::default())).unwrap();
                let want = vlogic_core::basis::TruthValue::from_coords(want.clone());
                worst = worst.max(direct.distance(&want)).max(virt.vector.distance(&want));
                let (cs, cn) = virt.coefficients();
                modulus_dev = modulus_dev
                    .max((cs.norm() - FRAC_1_SQRT_2).abs())
                    .max((cn.norm() - FRAC_1_SQRT_2).abs());
                cases += 1;
            }
        }
    }
    Outcome::new(
        worst <= TOL && modulus_dev <= TOL,
        format!("{cases} cases, max vector deviation {worst:.3e}, max |c|-1/√2 deviation {modulus_dev:.3e} (tol {TOL:e})"),
    )
}

fn ac7_resolution() -> Outcome {
    let label = |name: &str| run_scenario(&load_scenario(name)).unwrap().resolved_label();
    let borges = label("borges");
    let willis = label("willis");
    let fixtures_ok = borges == Some(Label::True) && willis == Some(Label::False);

    let mut root_dev = 0.0f64;
    for name in ["borges", "willis", "electricity_dinner", "pigs"] {
        let sc = load_scenario(name);
        let ops = OperatorSet::new(&sc.basis_spec().build().unwrap());
        let mut other = sc.clone();
        other.root = sc.root.conjugate();
        root_dev = root_dev.max(resolve(&ops, &sc).unwrap().distance(&resolve(&ops, &other).unwrap()));
    }
    for (_, basis) in common::basis_sweep() {
        let ops = OperatorSet::new(&basis);
        for (p, q) in ADMISSIBLE_PAIRS {
            for ev in [EvidenceBase::new(["p", "q"], ["p", "q"]), EvidenceBase::new(["p"], ["p", "q"])] {
                let a = resolve(&ops, &scenario(p, q, Root::A, ev.clone())).unwrap();
                let b = resolve(&ops, &scenario(p, q, Root::B, ev)).unwrap();
                root_dev = root_dev.max(a.distance(&b));
            }
        }
    }

    let ops = OperatorSet::new(&TruthBasis::set1());
    let bad = scenario(true, false, Root::A, EvidenceBase::new(["p", "q"], ["p", "q"]));
    let report = run_scenario(&bad).unwrap();
    let rejected = !admissible(&bad)
        && matches!(virtualize(&ops, &bad), Err(Error::Inadmissible))
        && matches!(resolve(&ops, &bad), Err(Error::Inadmissible))
        && !report.admissible
        && report.rejection.is_some()
        && report.resolved.is_none();

    Outcome::new(
        fixtures_ok && root_dev <= TOL && rejected,
        format!(
            "borges → {}, willis → {}; root A vs B max deviation {root_dev:.3e} (tol {TOL:e}); (true,false) rejected: {rejected}",
            borges.map_or("none".into(), |l| l.to_string()),
            willis.map_or("none".into(), |l| l.to_string()),
        ),
    )
}

fn ac8_fuzzy_projections() -> Outcome {
    let bases = [TruthBasis::set1(), TruthBasis::set2(), random_basis(4, 8).unwrap()];
    let mut worst = 0.0f64;
    for basis in &bases {
        let ops = OperatorSet::new(basis);
        for i in 0..=10 {
            for j in 0..=10 {
                let (a, b) = (i as f64 / 10.0, j as f64 / 10.0);
                let (u, v) = (fuzzy_value(basis, a).unwrap(), fuzzy_value(basis, b).unwrap());
                let cases = [
                    (ops.conjunction(), DyadicSignature::CONJUNCTION, a * b),
                    (ops.disjunction(), DyadicSignature::DISJUNCTION, a + b - a * b),
                    (ops.implication(), DyadicSignature::IMPLICATION, 1.0 - a * (1.0 - b)),
                ];
                for (op, sig, closed) in cases {
                    let (cs, _) = project(basis, &apply_dyadic(op, &u, &v).unwrap()).unwrap();
                    let oracle = common::bilinear_truth(sig, a, b);
                    worst = worst
                        .max((cs - c(closed, 0.0)).norm())
                        .max((cs - c(oracle, 0.0)).norm())
                        .max((closed - oracle).abs());
                }
            }
        }
    }
    Outcome::new(
        worst <= TOL,
        format!("11×11 grid × 3 connectives × {} bases, max deviation {worst:.3e} (tol {TOL:e})", bases.len()),
    )
}

fn ac9_switching_gates() -> Outcome {
    let mut worst = 0.0f64;
    for (_, basis) in common::basis_sweep() {
        let ops = OperatorSet::new(&basis);
        let slot = |r: Root| r == Root::A;
        for x in [Root::A, Root::B] {
            for y in [Root::A, Root::B] {
                let want = basis.crisp(slot(x) || slot(y));
                let d = ops.switching_gate_disjunction(x, y);
                let nor = ops.switching_gate_nor(x, y);
                let n_d = apply_monadic(ops.negation(), &d).unwrap();
                let want_nor = basis.crisp(!(slot(x) || slot(y)));
                worst = worst
                    .max(d.distance(&want))
                    .max(nor.distance(&n_d))
                    .max(nor.distance(&want_nor));
            }
        }
    }
    Outcome::new(worst <= TOL, format!("4 gate pairs × swept bases, max deviation {worst:.3e} (tol {TOL:e})"))
}

fn ac10_plausibility() -> Outcome {
    let p = PropositionRef::new("p", false);
    let q = PropositionRef::new("q", true);
    let mut mismatches = 0;
    for bits in 0u8..16 {
        let m: [bool; 4] = std::array::from_fn(|k| bits & (1 << k) != 0);
        let pick = |a: bool, b: bool| {
            [("p", a), ("q", b)].into_iter().filter(|(_, keep)| *keep).map(|(id, _)| id).collect::<Vec<_>>()
        };
        let evidence = EvidenceBase::new(pick(m[0], m[1]), pick(m[2], m[3]));
        let expected = m[0] && m[1] && m[2] && m[3];
        if plausibility(&p, &q, &evidence).plausible != expected {
            mismatches += 1;
        }
    }
    Outcome::new(mismatches == 0, format!("16 membership combinations, {mismatches} mismatches"))
}

type Criterion = (&'static str, &'static str, fn() -> Outcome);

#[test]
fn acceptance_criteria() {
    let criteria: [Criterion; 10] = [
        ("AC1", "worked operator matrices", ac1_worked_matrices),
        ("AC2", "Kronecker product", ac2_kronecker),
        ("AC3", "root algebra", ac3_root_algebra),
        ("AC4", "operator tautologies", ac4_tautologies),
        ("AC5", "crisp semantics", ac5_crisp_semantics),
        ("AC6", "virtualization", ac6_virtualization),
        ("AC7", "counterfactual resolution", ac7_resolution),
        ("AC8", "fuzzy projections", ac8_fuzzy_projections),
        ("AC9", "switching gates", ac9_switching_gates),
        ("AC10", "plausibility predicate", ac10_plausibility),
    ];
    println!();
    let mut failed = Vec::new();
    for (id, title, run) in criteria {
        let outcome = run();
        let tag = if outcome.passed { "PASS" } else { "FAIL" };
        println!("[{tag}] {id} {title}: {}", outcome.detail);
        if !outcome.passed {
            failed.push(id);
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
