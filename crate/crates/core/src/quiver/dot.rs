use std::fmt::Write;

use super::Quiver;

fn vertex_label(name: &str) -> String {
    match name.strip_prefix("rho") {
        Some(k) if !k.is_empty() && k.chars().all(|c| c.is_ascii_digit()) => format!("ρ{k}"),
        _ => name.to_string(),
    }
}

fn arrow_label(quiver: &Quiver, id: usize) -> String {
    let a = quiver.arrow(id);
    match (a.var, a.base) {
        (Some(i), Some(k)) => format!("x_{{{i},{k}}}"),
        _ => a.name.clone(),
    }
}

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

/// Graphviz digraph with one node per vertex and one labeled edge per arrow.
pub fn export_dot(quiver: &Quiver) -> String {
    let mut out = String::from("digraph quiver {\n    rankdir=LR;\n");
    for v in quiver.vertices() {
        let _ = writeln!(
            out,
            "    \"{}\" [label=\"{}\"];",
            escape(v),
            escape(&vertex_label(v))
        );
    }
    for a in quiver.arrows() {
        let _ = writeln!(
            out,
            "    \"{}\" -> \"{}\" [label=\"{}\"];",
            escape(&quiver.vertices()[a.source]),
            escape(&quiver.vertices()[a.target]),
            escape(&arrow_label(quiver, a.id))
        );
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grading::WeightVector;
    use crate::quiver::build_gamma;

    #[test]
    fn gamma_111() {
        let g = build_gamma(&WeightVector::new(&[1, 1, 1]).unwrap());
        let dot = export_dot(&g.quiver);
        assert_eq!(dot.matches(" -> ").count(), 3);
        assert_eq!(dot.matches("[label=\"ρ").count(), 2);
        assert!(dot.contains("\"rho1\" -> \"rho2\" [label=\"x_{2,1}\"];"));
        assert_eq!(dot, export_dot(&g.quiver));
    }
}
