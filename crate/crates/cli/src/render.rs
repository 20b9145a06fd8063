//! Text renderings of sequences: JSON, CSV and LaTeX.

use std::fmt::Write;

use sheffer_core::engine::{PolySequence, SequenceKind};
use sheffer_core::{Poly, Rational};

fn latex_coeff(c: &Rational) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("\\frac{{{}}}{{{}}}", c.numer(), c.denom())
    }
}

/// LaTeX for a polynomial, highest power first.
pub fn poly_latex(p: &Poly) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (k, c) in p.coeffs().iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let mag = c.abs();
        if out.is_empty() {
            if c.is_negative() {
                out.push('-');
            }
        } else {
            out.push_str(if c.is_negative() { " - " } else { " + " });
        }
        if k == 0 || !mag.is_one() {
            out.push_str(&latex_coeff(&mag));
        }
        match k {
            0 => {}
            1 => out.push('x'),
            _ => write!(out, "x^{{{k}}}").unwrap(),
        }
    }
    out
}

fn symbol(kind: SequenceKind, k: usize) -> String {
    match kind {
        SequenceKind::Sheffer | SequenceKind::Associated => format!("s_{{{k}}}(x)"),
        SequenceKind::Appell => format!("\\alpha_{{{k}}}(x)"),
        SequenceKind::ShefferAppell => format!("{{}}_{{s}}A_{{{k}}}(x)"),
    }
}

pub fn emit_latex(seq: &PolySequence) -> String {
    let mut out = String::from("\\begin{align*}\n");
    for (k, p) in seq.polys.iter().enumerate() {
        let end = if k + 1 == seq.polys.len() { "" } else { " \\\\" };
        writeln!(out, "{} &= {}{end}", symbol(seq.kind, k), poly_latex(p)).unwrap();
    }
    out.push_str("\\end{align*}\n");
    out
}

/// One row per `(degree, coefficient index, coefficient)`.
pub fn emit_csv(seq: &PolySequence) -> String {
    let mut out = String::from("degree,index,coefficient\n");
    for (n, p) in seq.polys.iter().enumerate() {
        for (i, c) in p.coeffs().iter().enumerate() {
            writeln!(out, "{n},{i},{c}").unwrap();
        }
    }
    out
}
