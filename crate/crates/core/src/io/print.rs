use std::fmt::Write;

use crate::groebner::Ideal;
use crate::poly::Polynomial;

use super::parse::IdealFile;

/// Coefficients in `(-p/2, p/2]`, terms in the polynomial's order.
pub fn format_polynomial(f: &Polynomial, names: &[String]) -> String {
    if f.is_zero() {
        return "0".to_string();
    }
    let field = f.ring().field();
    let mut out = String::new();
    for (k, t) in f.terms().iter().enumerate() {
        let c = field.to_symmetric(t.coeff);
        let (neg, abs) = (c < 0, c.unsigned_abs());
        match (k, neg) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        let mut factors: Vec<String> = Vec::new();
        if abs != 1 || t.monomial.is_one() {
            factors.push(abs.to_string());
        }
        for v in t.monomial.support() {
            match t.monomial.exp(v) {
                1 => factors.push(names[v].clone()),
                e => factors.push(format!("{}^{e}", names[v])),
            }
        }
        out.push_str(&factors.join("*"));
    }
    out
}

pub fn default_names(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("x{i}")).collect()
}

pub fn format_ideal(ideal: &Ideal, names: &[String]) -> String {
    let ring = ideal.ring();
    let mut out = format!("ring {} {} {}\n", ring.nvars(), ring.characteristic(), names.join(" "));
    for g in ideal.gens() {
        let _ = writeln!(out, "{}", format_polynomial(g, names));
    }
    out
}

pub fn format_ideal_file(file: &IdealFile) -> String {
    let mut out = format_ideal(&file.ideal, &file.names);
    let body = out.split_off(out.find('\n').map_or(out.len(), |i| i + 1));
    if let Some(h) = file.height {
        let _ = writeln!(out, "height {h}");
    }
    if file.unmixed_radical {
        out.push_str("unmixed_radical\n");
    }
    out + &body
}
