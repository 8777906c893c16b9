use std::io::Read;
use std::path::Path;

use serde::Serialize;
use vlogic_core::counterfactual::CRISP_TOL;
use vlogic_core::matrix::pairs::Cx;
use vlogic_core::{
    evaluate, parse_formula, project, run_scenario, run_suite, truth_table, Assignment,
    CounterfactualScenario, Label, LogicOperator, OperatorSet, ScenarioReport, TruthValue,
};

use crate::render;
use crate::{Config, Failure, Output};

fn print_json<T: Serialize>(value: &T) {
    println!("{}", serde_json::to_string(value).expect("reports serialize"));
}

fn read_formula(arg: &str) -> Result<String, Failure> {
    if arg != "-" {
        return Ok(arg.to_string());
    }
    let mut buf = String::new();
    std::io::stdin()
        .read_to_string(&mut buf)
        .map_err(|e| Failure::Input(format!("reading formula from stdin: {e}")))?;
    Ok(buf.trim().to_string())
}

#[derive(Serialize)]
struct OpsReport<'a> {
    basis: vlogic_core::BasisSpec,
    operators: Vec<&'a LogicOperator>,
}

pub fn ops(config: &Config) -> Result<(), Failure> {
    let basis = config.basis.build()?;
    let set = OperatorSet::new(&basis);
    let lc = set.counterfactual_implication();
    let (a, b) = set.sqrt_not_pair();
    let operators = vec![
        set.identity(),
        set.negation(),
        a,
        b,
        set.implication(),
        set.disjunction(),
        set.conjunction(),
    ];
    match config.output {
        Output::Json => print_json(&OpsReport {
            basis: config.basis,
            operators,
        }),
        Output::Pretty => {
            println!("s = {}", render::vector(&basis.truth()));
            println!("n = {}", render::vector(&basis.falsity()));
            for op in operators {
                let (r, c) = op.matrix().dim();
                println!("\n{} ({}, {r}×{c}):", op.role().tag(), op.arity().name());
                print!("{}", render::matrix(op.matrix()));
            }
            // Lc shares L's matrix; mention it rather than print it twice
            println!("\n{} = L", lc.role().tag());
        }
    }
    Ok(())
}

#[derive(Serialize)]
struct Valuation {
    formula: String,
    vector: TruthValue,
    c_s: Cx,
    c_n: Cx,
    label: Label,
}

pub fn eval(formula: &str, bindings: &[String], config: &Config) -> Result<(), Failure> {
    let formula = parse_formula(&read_formula(formula)?)?;
    let assignment = Assignment::from_bindings(bindings)?;
    let basis = config.basis.build()?;
    let ops = OperatorSet::new(&basis);
    let vector = evaluate(&formula, &assignment, &ops)?;
    let (c_s, c_n) = project(&basis, &vector)?;
    let report = Valuation {
        formula: formula.to_string(),
        label: Label::from_projection(c_s, c_n, CRISP_TOL),
        vector,
        c_s: Cx(c_s),
        c_n: Cx(c_n),
    };
    match config.output {
        Output::Json => print_json(&report),
        Output::Pretty => {
            println!("formula: {}", report.formula);
            println!("vector:  {}", render::vector(&report.vector));
            println!("c_s:     {}", render::complex(c_s));
            println!("c_n:     {}", render::complex(c_n));
            println!("label:   {}", report.label);
        }
    }
    Ok(())
}

#[derive(Serialize)]
struct TableReport {
    formula: String,
    #[serde(flatten)]
    table: vlogic_core::TruthTable,
}

pub fn table(formula: &str, config: &Config) -> Result<(), Failure> {
    let formula = parse_formula(&read_formula(formula)?)?;
    let ops = OperatorSet::new(&config.basis.build()?);
    let table = truth_table(&formula, &ops)?;
    match config.output {
        Output::Json => print_json(&TableReport {
            formula: formula.to_string(),
            table,
        }),
        Output::Pretty => {
            let printed = formula.to_string();
            let width = printed.chars().count().max("false".len());
            let cells = |values: Vec<String>| {
                values
                    .iter()
                    .zip(&table.atoms)
                    .map(|(v, a)| format!("{v:<w$}", w = a.chars().count()))
                    .collect::<Vec<_>>()
                    .join(" ")
            };
            println!("{}  | {printed:<width$}  | c_s  c_n", cells(table.atoms.clone()));
            for row in &table.rows {
                let flags = row.values.iter().map(|v| render::flag(*v).to_string()).collect();
                println!(
                    "{}  | {:<width$}  | {}  {}",
                    cells(flags),
                    row.label.to_string(),
                    render::complex(row.c_s.0),
                    render::complex(row.c_n.0),
                );
            }
        }
    }
    Ok(())
}

pub fn identities(config: &Config) -> Result<(), Failure> {
    let report = run_suite(&config.basis, config.tolerance)?;
    match config.output {
        Output::Json => print_json(&report),
        Output::Pretty => {
            let width = report.checks.iter().map(|c| c.name.chars().count()).max().unwrap_or(0);
            for check in &report.checks {
                println!(
                    "{}  {:<width$}  deviation {:.3e}  tolerance {:e}",
                    if check.passed { "PASS" } else { "FAIL" },
                    check.name,
                    check.deviation,
                    check.tolerance,
                );
            }
        }
    }
    if report.passed() {
        Ok(())
    } else {
        Err(Failure::Identities)
    }
}

pub fn cf(path: &Path, config: &Config) -> Result<(), Failure> {
    let src = std::fs::read_to_string(path)
        .map_err(|e| Failure::Input(format!("reading {}: {e}", path.display())))?;
    let mut scenario = CounterfactualScenario::from_json(&src)?;
    scenario.basis.get_or_insert(config.basis);
    let report = run_scenario(&scenario)?;
    match config.output {
        Output::Json => print_json(&report),
        Output::Pretty => print_scenario(&report),
    }
    match report.rejection {
        Some(reason) => Err(Failure::Input(reason)),
        None => Ok(()),
    }
}

fn print_scenario(report: &ScenarioReport) {
    let fc = &report.factual_conditional;
    println!(
        "antecedent p*: {} = {}",
        report.p_star.id,
        render::flag(report.p_star.value)
    );
    println!(
        "consequent q*: {} = {}",
        report.q_star.id,
        render::flag(report.q_star.value)
    );
    println!("root:          {}", report.root);
    println!(
        "factual L({} ⊗ {}): {} ({})",
        render::flag(fc.p),
        render::flag(fc.q),
        render::vector(&fc.vector),
        fc.label
    );
    println!("admissible:    {}", report.admissible);
    if let Some(reason) = &report.rejection {
        println!("rejected:      {reason}");
        return;
    }
    if let Some(v) = &report.virtual_valuation {
        let (c_s, c_n) = v.coefficients();
        println!(
            "virtual:       c_s = {}, c_n = {}",
            render::complex(c_s),
            render::complex(c_n)
        );
    }
    match report.plausibility.failing_conjunct {
        None => println!("plausible:     true"),
        Some(c) => println!("plausible:     false ({c} fails)"),
    }
    if let Some(r) = &report.resolved {
        println!(
            "resolved:      {} (c_s = {}, c_n = {})",
            r.label,
            render::complex(r.c_s.0),
            render::complex(r.c_n.0)
        );
    }
}
