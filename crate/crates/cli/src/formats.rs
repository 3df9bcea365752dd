// Licensed under the Apache License, Version 2.0 (the "License"); you may
// not use this file except in compliance with the License. You may obtain
// a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
// WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied. See the
// License for the specific language governing permissions and limitations
// under the License.

//! Graph and coloring file formats.
//!
//! Graphs are read either as edge lists (`p <n> <m>` then `e <u> <v>` lines,
//! 0-based ids, `c` comment lines allowed) or as JSON
//! `{"n": int, "edges": [[u, v], ...]}`. Edge ids are assigned in file order.
//! Colorings are JSON `{"k": int, "colors": {"<edge id>": color}}`.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use strongedge_core::{Color, Graph, PartialColoring, MAX_COLORS};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FormatError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("missing header line `p <n> <m>`")]
    MissingHeader,
    #[error("header announced {expected} edges, found {found}")]
    EdgeCount { expected: usize, found: usize },
    #[error("edge {index}: {msg}")]
    BadEdge { index: usize, msg: String },
    #[error("invalid JSON: {0}")]
    Json(String),
    #[error("palette size {0} outside 1..={MAX_COLORS}")]
    Palette(u64),
    #[error("coloring names edge {0}, which the graph does not have")]
    UnknownEdge(usize),
    #[error("edge {edge} has color {color} outside 1..={k}")]
    ColorRange { edge: usize, color: u64, k: u8 },
}

#[derive(Serialize, Deserialize)]
struct GraphJson {
    n: usize,
    edges: Vec<[usize; 2]>,
}

#[derive(Serialize, Deserialize)]
struct ColoringJson {
    k: u64,
    colors: BTreeMap<usize, u64>,
}

fn build(n: usize, pairs: &[[usize; 2]]) -> Result<Graph, FormatError> {
    let mut g = Graph::new(n);
    for (index, &[u, v]) in pairs.iter().enumerate() {
        g.add_edge(u, v).map_err(|e| FormatError::BadEdge { index, msg: e.to_string() })?;
    }
    Ok(g)
}

/// Parses either supported graph format, chosen by the first non-blank
/// character.
pub fn parse_graph(text: &str) -> Result<Graph, FormatError> {
    if text.trim_start().starts_with('{') {
        let raw: GraphJson = serde_json::from_str(text).map_err(|e| FormatError::Json(e.to_string()))?;
        build(raw.n, &raw.edges)
    } else {
        parse_edge_list(text)
    }
}

pub fn parse_edge_list(text: &str) -> Result<Graph, FormatError> {
    let mut header: Option<(usize, usize)> = None;
    let mut pairs = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let mut words = raw.split_whitespace();
        let Some(tag) = words.next() else { continue };
        let syntax = |msg: &str| FormatError::Syntax { line, msg: msg.to_string() };
        let mut number = |what: &str| -> Result<usize, FormatError> {
            words.next().ok_or_else(|| syntax(&format!("missing {what}")))?.parse().map_err(|_| syntax(&format!("bad {what}")))
        };
        match tag {
            "c" => continue,
            "p" if header.is_none() => {
                let n = number("vertex count")?;
                let m = number("edge count")?;
                header = Some((n, m));
            }
            "p" => return Err(syntax("second header")),
            "e" if header.is_some() => {
                let u = number("endpoint")?;
                let v = number("endpoint")?;
                pairs.push([u, v]);
            }
            "e" => return Err(FormatError::MissingHeader),
            other => return Err(syntax(&format!("unknown line type `{other}`"))),
        }
        if words.next().is_some() {
            return Err(syntax("trailing fields"));
        }
    }
    let (n, m) = header.ok_or(FormatError::MissingHeader)?;
    if pairs.len() != m {
        return Err(FormatError::EdgeCount { expected: m, found: pairs.len() });
    }
    build(n, &pairs)
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("p {} {}\n", g.vertex_bound(), g.edge_count());
    for (_, [u, v]) in g.edges() {
        let _ = writeln!(out, "e {u} {v}");
    }
    out
}

pub fn write_graph_json(g: &Graph) -> String {
    let raw = GraphJson { n: g.vertex_bound(), edges: g.edges().map(|(_, p)| p).collect() };
    serde_json::to_string(&raw).expect("plain data")
}

/// Parses a coloring and checks it against `g`: every named edge must exist
/// and every color must lie in `1..=k`.
pub fn parse_coloring(text: &str, g: &Graph) -> Result<PartialColoring, FormatError> {
    let raw: ColoringJson = serde_json::from_str(text).map_err(|e| FormatError::Json(e.to_string()))?;
    if raw.k == 0 || raw.k > u64::from(MAX_COLORS) {
        return Err(FormatError::Palette(raw.k));
    }
    let k = raw.k as u8;
    let mut c = PartialColoring::with_capacity(k, g.edge_bound());
    for (edge, color) in raw.colors {
        if !g.contains_edge(edge) {
            return Err(FormatError::UnknownEdge(edge));
        }
        if color == 0 || color > raw.k {
            return Err(FormatError::ColorRange { edge, color, k });
        }
        c.set(edge, color as Color);
    }
    Ok(c)
}

pub fn write_coloring(c: &PartialColoring) -> String {
    let raw = ColoringJson {
        k: u64::from(c.palette_size()),
        colors: c.iter().map(|(e, col)| (e, u64::from(col))).collect(),
    };
    serde_json::to_string(&raw).expect("plain data")
}
