//! Line-oriented text formats for categories and covers.
//!
//! Category files:
//!
//! ```text
//! category C
//! objects x y z
//! mor f : x -> y
//! comp h f = k
//! ```
//!
//! Every object `o` gets the identity `id_o`. A `comp g f = h` line is
//! required for each composable pair of non-identities.
//!
//! Cover files:
//!
//! ```text
//! cover U of C
//! order 1 2
//! part 1 : x y
//! part 2 : objects y z ; morphisms h
//! ```
//!
//! A part listing bare objects is the full subcategory on them. Without an
//! `order` line labels are ordered lexicographically. Tokens are separated
//! by whitespace; `#` starts a comment.

use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::sync::Arc;

use crate::cover::{full_subcategory, Cover, Subcategory};
use crate::error::{Error, Result};
use crate::fincat::{CategoryData, FinCategory};

fn parse_error(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

/// Non-empty lines as `(line number, tokens)`, comments removed.
fn lines(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, l)| {
        let l = l.split('#').next().unwrap_or("");
        let tokens: Vec<&str> = l.split_whitespace().collect();
        (!tokens.is_empty()).then_some((i + 1, tokens))
    })
}

/// Parses without validating.
pub fn parse_category_data(text: &str) -> Result<CategoryData> {
    let mut data: Option<CategoryData> = None;
    let mut known_objects = BTreeSet::new();
    for (n, t) in lines(text) {
        if t[0] == "category" {
            if data.is_some() {
                return Err(parse_error(n, "second `category` line"));
            }
            let [_, name] = t[..] else {
                return Err(parse_error(n, "expected `category <name>`"));
            };
            data = Some(CategoryData::new(name));
            continue;
        }
        let Some(d) = data.as_mut() else {
            return Err(parse_error(n, "file must start with `category <name>`"));
        };
        match t[0] {
            "objects" => {
                for &o in &t[1..] {
                    known_objects.insert(o.to_string());
                    *d = std::mem::take(d).object(o);
                }
            }
            "mor" => {
                let [_, id, ":", dom, "->", cod] = t[..] else {
                    return Err(parse_error(n, "expected `mor <id> : <obj> -> <obj>`"));
                };
                for o in [dom, cod] {
                    if !known_objects.contains(o) {
                        return Err(parse_error(n, format!("unknown object `{o}`")));
                    }
                }
                *d = std::mem::take(d).morphism(id, dom, cod);
            }
            "comp" => {
                let [_, g, f, "=", h] = t[..] else {
                    return Err(parse_error(n, "expected `comp <g> <f> = <h>`"));
                };
                *d = std::mem::take(d).compose(g, f, h);
            }
            other => return Err(parse_error(n, format!("unknown declaration `{other}`"))),
        }
    }
    data.ok_or_else(|| parse_error(1, "missing `category` line"))
}

/// Parses and validates a category file.
pub fn parse_category(text: &str) -> Result<FinCategory> {
    FinCategory::new(&parse_category_data(text)?)
}

/// Canonical text of a category. Identities must be named `id_<object>`.
pub fn emit_category(cat: &FinCategory) -> String {
    let mut s = String::new();
    writeln!(s, "category {}", cat.name()).unwrap();
    if cat.object_count() > 0 {
        writeln!(s, "objects {}", cat.objects().join(" ")).unwrap();
    }
    for (m, mor) in cat.morphisms().iter().enumerate() {
        if !cat.is_identity(m) {
            writeln!(
                s,
                "mor {} : {} -> {}",
                mor.id,
                cat.object_id(mor.dom),
                cat.object_id(mor.cod)
            )
            .unwrap();
        }
    }
    for (g, f) in cat.composable_non_identity_pairs() {
        let h = cat.compose(g, f).expect("composable");
        writeln!(
            s,
            "comp {} {} = {}",
            cat.morphism_id(g),
            cat.morphism_id(f),
            cat.morphism_id(h)
        )
        .unwrap();
    }
    s
}

/// A parsed cover together with its declared name.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverFile {
    pub name: String,
    pub cover: Cover,
}

pub fn parse_cover(text: &str, cat: &Arc<FinCategory>) -> Result<Cover> {
    parse_cover_file(text, cat).map(|f| f.cover)
}

pub fn parse_cover_file(text: &str, cat: &Arc<FinCategory>) -> Result<CoverFile> {
    let mut name: Option<String> = None;
    let mut order: Option<Vec<String>> = None;
    let mut parts: Vec<(String, Subcategory)> = Vec::new();
    let at = |n: usize| move |e: Error| parse_error(n, e.to_string());
    for (n, t) in lines(text) {
        if t[0] == "cover" {
            let [_, cover_name, "of", cat_name] = t[..] else {
                return Err(parse_error(n, "expected `cover <name> of <category>`"));
            };
            if name.is_some() {
                return Err(parse_error(n, "second `cover` line"));
            }
            if cat_name != cat.name() {
                return Err(parse_error(
                    n,
                    format!("cover is over `{cat_name}`, not `{}`", cat.name()),
                ));
            }
            name = Some(cover_name.to_string());
            continue;
        }
        if name.is_none() {
            return Err(parse_error(n, "file must start with `cover <name> of <category>`"));
        }
        match t[0] {
            "order" => {
                if order.is_some() {
                    return Err(parse_error(n, "second `order` line"));
                }
                order = Some(t[1..].iter().map(|s| s.to_string()).collect());
            }
            "part" => {
                if t.len() < 3 || t[2] != ":" {
                    return Err(parse_error(n, "expected `part <label> : …`"));
                }
                let label = t[1].to_string();
                let body = &t[3..];
                let part = if body.first() == Some(&"objects") {
                    let split = body.iter().position(|&s| s == ";");
                    let (objs, mors) = match split {
                        Some(i) => (&body[1..i], &body[i + 1..]),
                        None => (&body[1..], &[][..]),
                    };
                    let mors = match mors.split_first() {
                        None => &[][..],
                        Some((&"morphisms", rest)) => rest,
                        Some(_) => return Err(parse_error(n, "expected `; morphisms …`")),
                    };
                    Subcategory::from_ids(cat, objs, mors).map_err(at(n))?
                } else {
                    full_subcategory(cat, body).map_err(at(n))?
                };
                parts.push((label, part));
            }
            other => return Err(parse_error(n, format!("unknown declaration `{other}`"))),
        }
    }
    let name = name.ok_or_else(|| parse_error(1, "missing `cover` line"))?;
    let cover = Cover::new(cat.clone(), parts, order)?;
    Ok(CoverFile { name, cover })
}

/// Canonical text of a cover; the order is always written out.
pub fn emit_cover(name: &str, cover: &Cover) -> String {
    let cat = cover.parent();
    let mut s = String::new();
    writeln!(s, "cover {name} of {}", cat.name()).unwrap();
    writeln!(s, "order {}", cover.labels().join(" ")).unwrap();
    for (label, part) in cover.labels().iter().zip(cover.parts()) {
        let objs = part.object_ids().join(" ");
        let full = part.objects().iter().all(|&x| {
            part.objects()
                .iter()
                .all(|&y| cat.hom(x, y).iter().all(|m| part.contains_morphism(*m)))
        });
        if full {
            writeln!(s, "part {label} : {objs}").unwrap();
        } else {
            let mors: Vec<&str> = part
                .morphisms()
                .iter()
                .filter(|&&m| !cat.is_identity(m))
                .map(|&m| cat.morphism_id(m))
                .collect();
            writeln!(s, "part {label} : objects {objs} ; morphisms {}", mors.join(" ")).unwrap();
        }
    }
    s
}
