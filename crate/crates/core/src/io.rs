//! Line-oriented text formats for expansion specs and colorings.
//!
//! Spec files:
//!
//! ```text
//! host cycle 5            # or: host bipartite <n>
//! hostedge 0 1            # bipartite hosts only
//! component 0 3
//! cedge 0 0 1
//! ```
//!
//! Coloring files start with `colors <distinct colors>`, then the three
//! palette lines (`gamma0`, `gamma1`, `extra`, always present), then one
//! `c <component> <vertex> <color>` line per vertex in sorted order.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::str::FromStr;

use crate::coloring::{Coloring, PaletteLayout};
use crate::error::{Error, Result};
use crate::expansion::{ExpansionSpec, HostKind};
use crate::graph::Graph;

/// Non-empty lines with comments stripped, paired with 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, line)| {
        let body = line.split('#').next().unwrap_or("");
        let words: Vec<&str> = body.split_whitespace().collect();
        (!words.is_empty()).then_some((i + 1, words))
    })
}

fn number<T: FromStr>(line: usize, word: &str) -> Result<T> {
    word.parse().map_err(|_| {
        Error::parse(
            line,
            format!("expected a non-negative integer, got {word:?}"),
        )
    })
}

fn arity(line: usize, words: &[&str], n: usize) -> Result<()> {
    if words.len() != n {
        return Err(Error::parse(
            line,
            format!(
                "{} takes {} arguments, got {}",
                words[0],
                n - 1,
                words.len() - 1
            ),
        ));
    }
    Ok(())
}

enum HostHeader {
    Cycle(usize),
    Bipartite(usize),
}

pub fn parse_spec(text: &str) -> Result<ExpansionSpec> {
    let mut lines = content_lines(text);
    let (line, words) = lines
        .next()
        .ok_or_else(|| Error::parse(1, "missing host line"))?;
    if words[0] != "host" {
        return Err(Error::parse(
            line,
            "first line must be `host cycle <L>` or `host bipartite <n>`",
        ));
    }
    arity(line, &words, 3)?;
    let header = match words[1] {
        "cycle" => {
            let l: usize = number(line, words[2])?;
            if l.is_multiple_of(2) {
                return Err(Error::parse(line, "even cycle length"));
            }
            if l < 3 {
                return Err(Error::parse(line, "cycle length must be at least 3"));
            }
            HostHeader::Cycle(l)
        }
        "bipartite" => HostHeader::Bipartite(number(line, words[2])?),
        other => return Err(Error::parse(line, format!("unknown host kind {other:?}"))),
    };
    let n = match header {
        HostHeader::Cycle(l) | HostHeader::Bipartite(l) => l,
    };

    let mut host_edges = Vec::new();
    let mut sizes: BTreeMap<usize, usize> = BTreeMap::new();
    let mut cedges: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n];
    for (line, words) in lines {
        match words[0] {
            "hostedge" => {
                arity(line, &words, 3)?;
                if matches!(header, HostHeader::Cycle(_)) {
                    return Err(Error::parse(
                        line,
                        "hostedge is only valid for bipartite hosts",
                    ));
                }
                let (i, j): (usize, usize) = (number(line, words[1])?, number(line, words[2])?);
                if i >= n || j >= n || i == j {
                    return Err(Error::parse(line, format!("bad host edge {i} {j}")));
                }
                host_edges.push((i, j));
            }
            "component" => {
                arity(line, &words, 3)?;
                let (idx, count): (usize, usize) =
                    (number(line, words[1])?, number(line, words[2])?);
                if idx >= n {
                    return Err(Error::parse(
                        line,
                        format!("component index {idx} out of range"),
                    ));
                }
                if count == 0 {
                    return Err(Error::parse(line, "component needs at least one vertex"));
                }
                if sizes.insert(idx, count).is_some() {
                    return Err(Error::parse(
                        line,
                        format!("component {idx} declared twice"),
                    ));
                }
            }
            "cedge" => {
                arity(line, &words, 4)?;
                let idx: usize = number(line, words[1])?;
                let (u, v): (usize, usize) = (number(line, words[2])?, number(line, words[3])?);
                let size = *sizes
                    .get(&idx)
                    .ok_or_else(|| Error::parse(line, format!("cedge before component {idx}")))?;
                if u >= size || v >= size || u == v {
                    return Err(Error::parse(
                        line,
                        format!("bad edge {u} {v} in component {idx}"),
                    ));
                }
                cedges[idx].push((u, v));
            }
            "host" => return Err(Error::parse(line, "duplicate host line")),
            other => return Err(Error::parse(line, format!("unknown keyword {other:?}"))),
        }
    }

    if let Some(missing) = (0..n).find(|i| !sizes.contains_key(i)) {
        return Err(Error::InvalidSpec(format!("missing component {missing}")));
    }
    let components = sizes
        .iter()
        .zip(cedges)
        .map(|((_, &size), edges)| Graph::new(size, edges))
        .collect::<Result<Vec<_>>>()?;
    let host = match header {
        HostHeader::Cycle(l) => HostKind::odd_cycle(l)?,
        HostHeader::Bipartite(n) => HostKind::bipartite(Graph::new(n, host_edges)?)?,
    };
    ExpansionSpec::new(host, components)
}

pub fn emit_spec(spec: &ExpansionSpec) -> String {
    let mut out = String::new();
    match spec.host() {
        HostKind::OddCycle { length } => writeln!(out, "host cycle {length}").unwrap(),
        HostKind::Bipartite { graph, .. } => {
            writeln!(out, "host bipartite {}", graph.order()).unwrap();
            for &(i, j) in graph.edges() {
                writeln!(out, "hostedge {i} {j}").unwrap();
            }
        }
    }
    for (idx, g) in spec.components().iter().enumerate() {
        writeln!(out, "component {idx} {}", g.order()).unwrap();
        for &(u, v) in g.edges() {
            writeln!(out, "cedge {idx} {u} {v}").unwrap();
        }
    }
    out
}

pub fn emit_coloring(coloring: &Coloring) -> String {
    let mut out = String::new();
    writeln!(out, "colors {}", coloring.distinct_colors()).unwrap();
    let layout = coloring.layout();
    for (name, ids) in [
        ("gamma0", &layout.gamma0),
        ("gamma1", &layout.gamma1),
        ("extra", &layout.extra),
    ] {
        out.push_str("palette ");
        out.push_str(name);
        for id in ids {
            write!(out, " {id}").unwrap();
        }
        out.push('\n');
    }
    for (comp, colors) in coloring.assignment().iter().enumerate() {
        for (v, c) in colors.iter().enumerate() {
            writeln!(out, "c {comp} {v} {c}").unwrap();
        }
    }
    out
}

pub fn parse_coloring(text: &str) -> Result<Coloring> {
    let (coloring, declared) = parse_coloring_unchecked(text)?;
    let found = coloring.distinct_colors();
    if found != declared {
        return Err(Error::parse(
            text.lines().count() + 1,
            format!("header declares {declared} colors, found {found}"),
        ));
    }
    Ok(coloring)
}

/// The coloring and the count from its `colors` header, without checking
/// that the two agree.
pub fn parse_coloring_unchecked(text: &str) -> Result<(Coloring, usize)> {
    let mut declared = None;
    let mut palettes: BTreeMap<&str, Vec<usize>> = BTreeMap::new();
    let mut cells: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    let mut last_line = 0;
    for (line, words) in content_lines(text) {
        last_line = line;
        match words[0] {
            "colors" => {
                arity(line, &words, 2)?;
                if declared.replace(number::<usize>(line, words[1])?).is_some() {
                    return Err(Error::parse(line, "duplicate colors line"));
                }
            }
            "palette" => {
                if words.len() < 2 {
                    return Err(Error::parse(line, "palette needs a name"));
                }
                let name = match words[1] {
                    n @ ("gamma0" | "gamma1" | "extra") => n,
                    other => return Err(Error::parse(line, format!("unknown palette {other:?}"))),
                };
                let ids = words[2..]
                    .iter()
                    .map(|w| number(line, w))
                    .collect::<Result<Vec<usize>>>()?;
                if palettes.insert(name, ids).is_some() {
                    return Err(Error::parse(line, format!("duplicate palette {name}")));
                }
            }
            "c" => {
                arity(line, &words, 4)?;
                let key = (number(line, words[1])?, number(line, words[2])?);
                if cells.insert(key, number(line, words[3])?).is_some() {
                    return Err(Error::parse(
                        line,
                        format!("vertex {} {} colored twice", key.0, key.1),
                    ));
                }
            }
            other => return Err(Error::parse(line, format!("unknown keyword {other:?}"))),
        }
    }
    let end = last_line + 1;
    let declared = declared.ok_or_else(|| Error::parse(end, "missing colors line"))?;
    let mut take = |name: &str| {
        palettes
            .remove(name)
            .ok_or_else(|| Error::parse(end, format!("missing palette {name}")))
    };
    let layout = PaletteLayout {
        gamma0: take("gamma0")?,
        gamma1: take("gamma1")?,
        extra: take("extra")?,
    };

    let mut assignment: Vec<Vec<usize>> = Vec::new();
    for (&(comp, v), &c) in &cells {
        if comp > assignment.len() {
            return Err(Error::parse(
                end,
                format!("component {comp} is not contiguous"),
            ));
        }
        if comp == assignment.len() {
            assignment.push(Vec::new());
        }
        let colors = &mut assignment[comp];
        if v != colors.len() {
            return Err(Error::parse(
                end,
                format!("component {comp} skips vertex {}", colors.len()),
            ));
        }
        colors.push(c);
    }
    Ok((Coloring::new(assignment, layout), declared))
}
