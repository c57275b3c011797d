//! Line-oriented quiver text format.
//!
//! ```text
//! # comment
//! vertices: rho1 rho2 rho3
//! arrow x_1_1: rho1 -> rho2
//! relation: x_1_1 x_2_2 = x_2_1 x_1_2
//! ```
//!
//! Relation sides list arrow names in traversal order. Arrows named
//! `x_<i>_<k>` are read back as the variable `i` with base `k`.

use std::collections::HashMap;
use std::fmt::Write;

use super::{Arrow, Path, Quiver, QuiverWithRelations, Relation};
use crate::error::{Error, Result};

struct Token<'a> {
    text: &'a str,
    column: usize,
}

struct ArrowDecl<'a> {
    line: usize,
    name: Token<'a>,
    source: Token<'a>,
    target: Token<'a>,
}

struct RelationDecl<'a> {
    line: usize,
    lhs: Vec<Token<'a>>,
    rhs: Vec<Token<'a>>,
}

fn tokens(line: &str, offset: usize) -> Vec<Token<'_>> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, c) in line.char_indices() {
        if c.is_whitespace() {
            if let Some(s) = start.take() {
                out.push(Token {
                    text: &line[s..i],
                    column: offset + line[..s].chars().count() + 1,
                });
            }
        } else if start.is_none() {
            start = Some(i);
        }
    }
    if let Some(s) = start {
        out.push(Token {
            text: &line[s..],
            column: offset + line[..s].chars().count() + 1,
        });
    }
    out
}

fn is_name(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

fn parse_error(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        column,
        message: message.into(),
    }
}

fn expect_name(line: usize, token: &Token<'_>) -> Result<()> {
    if is_name(token.text) {
        Ok(())
    } else {
        Err(parse_error(
            line,
            token.column,
            format!("{:?} is not a valid name", token.text),
        ))
    }
}

/// Recovers `(i, k)` from an arrow named `x_<i>_<k>`.
fn labels_from_name(name: &str) -> (Option<usize>, Option<u32>) {
    let Some(rest) = name.strip_prefix("x_") else {
        return (None, None);
    };
    let Some((var, base)) = rest.split_once('_') else {
        return (None, None);
    };
    match (var.parse::<usize>(), base.parse::<u32>()) {
        (Ok(v), Ok(b)) if v >= 1 => (Some(v), Some(b)),
        _ => (None, None),
    }
}

pub fn parse_quiver_dsl(text: &str) -> Result<QuiverWithRelations> {
    let mut vertices: Vec<Token<'_>> = Vec::new();
    let mut arrows: Vec<ArrowDecl<'_>> = Vec::new();
    let mut relations: Vec<RelationDecl<'_>> = Vec::new();

    for (number, raw) in text.lines().enumerate() {
        let line = number + 1;
        let content = raw.split('#').next().unwrap_or("");
        let trimmed = content.trim_start();
        if trimmed.trim().is_empty() {
            continue;
        }
        let indent = content.chars().count() - trimmed.chars().count();

        if let Some(rest) = trimmed.strip_prefix("vertices:") {
            let offset = indent + "vertices:".len();
            for token in tokens(rest, offset) {
                expect_name(line, &token)?;
                vertices.push(token);
            }
        } else if let Some(rest) = trimmed.strip_prefix("relation:") {
            let offset = indent + "relation:".len();
            let all = tokens(rest, offset);
            let Some(eq) = all.iter().position(|t| t.text == "=") else {
                return Err(parse_error(line, indent + 1, "relation is missing '='"));
            };
            let mut all = all;
            let rhs = all.split_off(eq + 1);
            let eq_token = all.pop().expect("position found");
            let lhs = all;
            if lhs.is_empty() {
                return Err(parse_error(line, eq_token.column, "empty left-hand side"));
            }
            if rhs.is_empty() {
                return Err(parse_error(line, eq_token.column, "empty right-hand side"));
            }
            for t in lhs.iter().chain(&rhs) {
                expect_name(line, t)?;
            }
            relations.push(RelationDecl { line, lhs, rhs });
        } else if let Some(rest) = trimmed.strip_prefix("arrow") {
            let offset = indent + "arrow".len();
            if !rest.starts_with(char::is_whitespace) {
                return Err(parse_error(line, indent + 1, "unknown statement"));
            }
            let Some(colon) = rest.find(':') else {
                return Err(parse_error(line, indent + 1, "arrow declaration needs ':'"));
            };
            let head = tokens(&rest[..colon], offset);
            let body_offset = offset + rest[..=colon].chars().count();
            let body = tokens(&rest[colon + 1..], body_offset);
            let [name] = head.as_slice() else {
                return Err(parse_error(line, offset + 1, "expected one arrow name"));
            };
            expect_name(line, name)?;
            let [source, arrow_tok, target] = body.as_slice() else {
                return Err(parse_error(
                    line,
                    body_offset + 1,
                    "expected '<src> -> <dst>'",
                ));
            };
            if arrow_tok.text != "->" {
                return Err(parse_error(line, arrow_tok.column, "expected '->'"));
            }
            expect_name(line, source)?;
            expect_name(line, target)?;
            let (name, source, target) = (
                Token {
                    text: name.text,
                    column: name.column,
                },
                Token {
                    text: source.text,
                    column: source.column,
                },
                Token {
                    text: target.text,
                    column: target.column,
                },
            );
            arrows.push(ArrowDecl {
                line,
                name,
                source,
                target,
            });
        } else {
            return Err(parse_error(line, indent + 1, "unknown statement"));
        }
    }

    let mut vertex_index = HashMap::new();
    for (i, v) in vertices.iter().enumerate() {
        if vertex_index.insert(v.text, i).is_some() {
            return Err(Error::Validation(format!("duplicate vertex {}", v.text)));
        }
    }
    let lookup_vertex = |t: &Token<'_>, line: usize| {
        vertex_index.get(t.text).copied().ok_or_else(|| {
            Error::Validation(format!(
                "line {line}:{}: unknown vertex {}",
                t.column, t.text
            ))
        })
    };

    let mut built = Vec::with_capacity(arrows.len());
    for (id, decl) in arrows.iter().enumerate() {
        let (var, base) = labels_from_name(decl.name.text);
        built.push(Arrow {
            id,
            name: decl.name.text.to_string(),
            source: lookup_vertex(&decl.source, decl.line)?,
            target: lookup_vertex(&decl.target, decl.line)?,
            var,
            base,
        });
    }
    let quiver = Quiver::new(vertices.iter().map(|t| t.text.to_string()).collect(), built)?;

    let arrow_index: HashMap<&str, usize> = arrows
        .iter()
        .enumerate()
        .map(|(i, a)| (a.name.text, i))
        .collect();
    let side = |names: &[Token<'_>], line: usize| -> Result<Path> {
        let ids = names
            .iter()
            .map(|t| {
                arrow_index.get(t.text).copied().ok_or_else(|| {
                    Error::Validation(format!(
                        "line {line}:{}: unknown arrow {}",
                        t.column, t.text
                    ))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Path::from_arrows(&quiver, ids).map_err(|e| Error::Validation(format!("line {line}: {e}")))
    };
    let mut rels = Vec::with_capacity(relations.len());
    for decl in &relations {
        let lhs = side(&decl.lhs, decl.line)?;
        let rhs = side(&decl.rhs, decl.line)?;
        rels.push(
            Relation::new(&quiver, lhs, rhs)
                .map_err(|e| Error::Validation(format!("line {}: {e}", decl.line)))?,
        );
    }
    QuiverWithRelations::new(quiver, rels, None)
}

pub fn serialize_dsl(qwr: &QuiverWithRelations) -> String {
    let q = &qwr.quiver;
    let mut out = String::new();
    if let Some(w) = &qwr.weights {
        let _ = writeln!(out, "# Γ{w}");
    }
    let _ = writeln!(out, "vertices: {}", q.vertices().join(" "));
    for a in q.arrows() {
        let _ = writeln!(
            out,
            "arrow {}: {} -> {}",
            a.name,
            q.vertices()[a.source],
            q.vertices()[a.target]
        );
    }
    let names = |p: &Path| {
        p.arrows()
            .iter()
            .map(|&id| q.arrow(id).name.as_str())
            .collect::<Vec<_>>()
            .join(" ")
    };
    for r in &qwr.relations {
        let _ = writeln!(out, "relation: {} = {}", names(&r.lhs), names(&r.rhs));
    }
    out
}
