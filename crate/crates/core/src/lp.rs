//! LP-format text export.
//!
//! ```text
//! Maximize
//!  obj: x0 + x1
//! Subject To
//!  dom0: x0 + x1 >= 1
//! Binary
//!  x0
//!  x1
//! End
//! ```
//!
//! A row with no terms is written against the first variable with a zero
//! coefficient (`0 x0`), since the format has no empty left-hand side.

use std::fmt::Write as _;

use crate::model::{LinearModel, Sense, VarId, VarKind};

fn write_terms(out: &mut String, model: &LinearModel, terms: &[(VarId, i64)]) {
    if terms.is_empty() {
        write!(out, "0 {}", model.variables()[0].name).unwrap();
        return;
    }
    for (i, &(j, a)) in terms.iter().enumerate() {
        let name = &model.variables()[j].name;
        let sign = if a < 0 { "-" } else { "+" };
        let mag = a.unsigned_abs();
        match (i, mag) {
            (0, 1) if a > 0 => write!(out, "{name}"),
            (0, _) if a > 0 => write!(out, "{mag} {name}"),
            (0, 1) => write!(out, "- {name}"),
            (0, _) => write!(out, "- {mag} {name}"),
            (_, 1) => write!(out, " {sign} {name}"),
            (_, _) => write!(out, " {sign} {mag} {name}"),
        }
        .unwrap();
    }
}

/// Byte-deterministic LP text for `model`.
pub fn export_lp(model: &LinearModel) -> String {
    let mut out = String::new();
    out.push_str(match model.sense {
        Sense::Maximize => "Maximize\n",
        Sense::Minimize => "Minimize\n",
    });
    let objective: Vec<(VarId, i64)> = model
        .objective()
        .iter()
        .enumerate()
        .filter(|(_, &c)| c != 0)
        .map(|(j, &c)| (j, c))
        .collect();
    out.push_str(" obj: ");
    write_terms(&mut out, model, &objective);
    out.push_str("\nSubject To\n");
    for c in model.constraints() {
        write!(out, " {}: ", c.name).unwrap();
        write_terms(&mut out, model, &c.terms);
        writeln!(out, " {} {}", c.relation.symbol(), c.rhs).unwrap();
    }
    for (header, kind) in [("Binary", VarKind::Binary), ("General", VarKind::Integer)] {
        let mut vars = model
            .variables()
            .iter()
            .filter(|v| v.kind == kind)
            .peekable();
        if vars.peek().is_some() {
            writeln!(out, "{header}").unwrap();
            for v in vars {
                writeln!(out, " {}", v.name).unwrap();
            }
        }
    }
    out.push_str("End\n");
    out
}
