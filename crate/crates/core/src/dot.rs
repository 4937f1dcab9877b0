//! Graphviz output: the Hasse diagram of a family under inclusion.

use std::fmt::Write;

use crate::bits::PointSet;
use crate::engine::RepresentationEngine;

/// Names are escaped for quotes only; labels use `\n` line breaks.
fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('"', "\\\""))
}

/// One node per point, labelled with its name and, for points of `chosen`,
/// its classification; one edge per covering pair, smaller to larger.
pub fn hasse_dot(engine: &RepresentationEngine<'_>, chosen: PointSet) -> String {
    let family = engine.family();
    let space = engine.space();
    let mut out = String::from("digraph family {\n  rankdir=BT;\n  node [shape=box];\n");
    for b in 0..family.len() {
        let mut flags: Vec<&str> = Vec::new();
        if chosen.contains(b) {
            match engine.classify_member(chosen, b) {
                Ok(f) => {
                    flags.push(if f.irredundant {
                        "irredundant"
                    } else {
                        "redundant"
                    });
                    if f.strongly_irredundant {
                        flags.push("strongly irredundant");
                    }
                    if f.isolated_spectral {
                        flags.push("isolated");
                    }
                }
                Err(_) => flags.push("chosen"),
            }
        }
        if engine.is_critical(b) {
            flags.push("critical");
        }
        let label = if flags.is_empty() {
            family.name(b).to_string()
        } else {
            format!("{}\\n{}", family.name(b), flags.join(", "))
        };
        let style = if chosen.contains(b) {
            ", style=bold"
        } else {
            ""
        };
        let _ = writeln!(
            out,
            "  {} [label={}{style}];",
            quote(family.name(b)),
            quote(&label)
        );
    }
    for (lower, upper) in space.covers() {
        let _ = writeln!(
            out,
            "  {} -> {};",
            quote(family.name(lower)),
            quote(family.name(upper))
        );
    }
    out.push_str("}\n");
    out
}
