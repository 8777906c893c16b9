use num_complex::Complex64;
use vlogic_core::{CMatrix, TruthValue};

/// Shortest `%g`-style rendering with six significant digits.
pub fn real(x: f64) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    if !x.is_finite() {
        return x.to_string();
    }
    let sci = format!("{x:.5e}");
    let (mantissa, exp) = sci.split_once('e').expect("exponent in {:e} output");
    let exp: i32 = exp.parse().expect("integer exponent");
    if (-5..6).contains(&exp) {
        let decimals = (5 - exp).max(0) as usize;
        trim(&format!("{x:.decimals$}")).to_string()
    } else {
        format!("{}e{exp}", trim(mantissa))
    }
}

fn trim(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

/// Parts smaller than this print as zero in pretty output.
const DISPLAY_ZERO: f64 = 1e-12;

fn snap(x: f64) -> f64 {
    if x.abs() < DISPLAY_ZERO {
        0.0
    } else {
        x
    }
}

/// `a+bi` with both parts at six significant digits.
pub fn complex(z: Complex64) -> String {
    let re = real(snap(z.re));
    let im = real(snap(z.im));
    match im.strip_prefix('-') {
        Some(abs) => format!("{re}-{abs}i"),
        None => format!("{re}+{im}i"),
    }
}

pub fn vector(v: &TruthValue) -> String {
    let parts: Vec<_> = v.coords().iter().map(|z| complex(*z)).collect();
    format!("[{}]", parts.join(", "))
}

/// Rows of right-aligned entries, indented by two spaces.
pub fn matrix(m: &CMatrix) -> String {
    let cells: Vec<Vec<String>> = m
        .rows()
        .into_iter()
        .map(|row| row.iter().map(|z| complex(*z)).collect())
        .collect();
    let width = cells.iter().flatten().map(|c| c.chars().count()).max().unwrap_or(0);
    let mut out = String::new();
    for row in cells {
        let line: Vec<_> = row.iter().map(|c| format!("{c:>width$}")).collect();
        out.push_str("  ");
        out.push_str(&line.join("  "));
        out.push('\n');
    }
    out
}

pub fn flag(b: bool) -> &'static str {
    if b {
        "t"
    } else {
        "f"
    }
}
