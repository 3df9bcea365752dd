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

//! Exact strong chromatic index by branch and bound on the square of the
//! line graph: a clique lower bound, DSATUR branching, and color symmetry
//! breaking (a vertex may only open the next unused color).

use alloc::vec;
use alloc::vec::Vec;

use thiserror::Error;

use crate::coloring::{Color, ColorSet, PartialColoring, MAX_COLORS};
use crate::graph::{EdgeId, Graph};
use crate::neighborhood::edge_neighborhood;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExactError {
    #[error("instance needs more than {MAX_COLORS} colors")]
    PaletteOverflow,
}

/// Result of [`exact_strong_index`]. When `exact` is false the node budget
/// ran out and only `lower <= χ'ₛ <= upper` is known.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactOutcome {
    pub lower: usize,
    pub upper: usize,
    pub witness: PartialColoring,
    pub exact: bool,
    pub nodes: u64,
}

impl ExactOutcome {
    pub fn value(&self) -> Option<usize> {
        self.exact.then_some(self.upper)
    }
}

/// Outcome of a fixed-palette search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum KColoring {
    Found(PartialColoring),
    Impossible,
    BudgetExhausted,
}

struct Square {
    edges: Vec<EdgeId>,
    adj: Vec<Vec<usize>>,
    bits: Vec<Vec<u64>>,
}

impl Square {
    fn new(g: &Graph) -> Square {
        let edges: Vec<EdgeId> = g.edge_ids().collect();
        let mut index = vec![usize::MAX; g.edge_bound()];
        for (i, &e) in edges.iter().enumerate() {
            index[e] = i;
        }
        let words = edges.len().div_ceil(64);
        let mut adj = vec![Vec::new(); edges.len()];
        let mut bits = vec![vec![0u64; words]; edges.len()];
        for (i, &e) in edges.iter().enumerate() {
            for f in edge_neighborhood(g, e).expect("live edge").all() {
                let j = index[f];
                adj[i].push(j);
                bits[i][j / 64] |= 1 << (j % 64);
            }
        }
        Square { edges, adj, bits }
    }

    fn len(&self) -> usize {
        self.edges.len()
    }
}

struct CliqueSearch<'a> {
    sq: &'a Square,
    best: usize,
    nodes: u64,
    budget: u64,
}

impl CliqueSearch<'_> {
    fn expand(&mut self, size: usize, cand: Vec<u64>) {
        self.nodes += 1;
        let count: usize = cand.iter().map(|w| w.count_ones() as usize).sum();
        if size + count <= self.best || self.nodes > self.budget {
            if count == 0 && size > self.best {
                self.best = size;
            }
            return;
        }
        let mut cand = cand;
        while let Some(v) = first_bit(&cand) {
            let remaining: usize = cand.iter().map(|w| w.count_ones() as usize).sum();
            if size + remaining <= self.best || self.nodes > self.budget {
                return;
            }
            let next: Vec<u64> = cand.iter().zip(&self.sq.bits[v]).map(|(a, b)| a & b).collect();
            if next.iter().all(|&w| w == 0) {
                self.best = self.best.max(size + 1);
            } else {
                self.expand(size + 1, next);
            }
            cand[v / 64] &= !(1 << (v % 64));
        }
    }
}

fn first_bit(words: &[u64]) -> Option<usize> {
    words
        .iter()
        .enumerate()
        .find(|(_, &w)| w != 0)
        .map(|(i, w)| i * 64 + w.trailing_zeros() as usize)
}

fn max_clique(sq: &Square, budget: u64) -> usize {
    if sq.len() == 0 {
        return 0;
    }
    let words = sq.len().div_ceil(64);
    let mut all = vec![0u64; words];
    for v in 0..sq.len() {
        all[v / 64] |= 1 << (v % 64);
    }
    let mut search = CliqueSearch { sq, best: 1, nodes: 0, budget };
    search.expand(0, all);
    search.best
}

/// Size of the largest set of pairwise-seeing edges found within `budget`
/// search nodes. Always a valid lower bound on the strong chromatic index.
pub fn clique_lower_bound(g: &Graph, budget: u64) -> usize {
    max_clique(&Square::new(g), budget)
}

struct Dsatur<'a> {
    sq: &'a Square,
    color: Vec<Color>,
    counts: Vec<[u16; MAX_COLORS as usize + 1]>,
    sat: Vec<ColorSet>,
    uncolored: usize,
    nodes: u64,
    budget: u64,
    aborted: bool,
    // Colorings must use strictly fewer than `best` colors to be recorded.
    best: usize,
    best_color: Option<Vec<Color>>,
    stop_at: usize,
    // Never abort before the first complete coloring is recorded.
    finish_first: bool,
}

impl<'a> Dsatur<'a> {
    fn new(sq: &'a Square, cap: usize, stop_at: usize, budget: u64) -> Self {
        let n = sq.len();
        Dsatur {
            sq,
            color: vec![0; n],
            counts: vec![[0; MAX_COLORS as usize + 1]; n],
            sat: vec![ColorSet::EMPTY; n],
            uncolored: n,
            nodes: 0,
            budget,
            aborted: false,
            best: cap + 1,
            best_color: None,
            stop_at,
            finish_first: false,
        }
    }

    fn assign(&mut self, v: usize, c: Color) {
        self.color[v] = c;
        self.uncolored -= 1;
        for &w in &self.sq.adj[v] {
            self.counts[w][c as usize] += 1;
            self.sat[w].insert(c);
        }
    }

    fn unassign(&mut self, v: usize) {
        let c = self.color[v];
        self.color[v] = 0;
        self.uncolored += 1;
        for &w in &self.sq.adj[v] {
            self.counts[w][c as usize] -= 1;
            if self.counts[w][c as usize] == 0 {
                self.sat[w].remove(c);
            }
        }
    }

    fn done(&self) -> bool {
        self.aborted || self.best <= self.stop_at
    }

    fn search(&mut self, used: usize) {
        if self.uncolored == 0 {
            if used < self.best {
                self.best = used;
                self.best_color = Some(self.color.clone());
            }
            return;
        }
        self.nodes += 1;
        if self.nodes > self.budget && (self.best_color.is_some() || !self.finish_first) {
            self.aborted = true;
            return;
        }
        // Most saturated uncolored vertex, ties broken by lowest index.
        let mut pick = usize::MAX;
        let mut pick_sat = 0;
        for v in 0..self.sq.len() {
            if self.color[v] == 0 && (pick == usize::MAX || self.sat[v].len() > pick_sat) {
                pick = v;
                pick_sat = self.sat[v].len();
            }
        }
        let limit = (used + 1).min(self.best - 1).min(MAX_COLORS as usize);
        for c in 1..=limit as Color {
            if self.sat[pick].contains(c) {
                continue;
            }
            self.assign(pick, c);
            self.search(used.max(c as usize));
            self.unassign(pick);
            if self.done() {
                return;
            }
        }
    }

    fn witness(&self, g_palette: usize) -> Option<PartialColoring> {
        let colors = self.best_color.as_ref()?;
        let mut c = PartialColoring::new(g_palette as u8);
        for (i, &col) in colors.iter().enumerate() {
            c.set(self.sq.edges[i], col);
        }
        Some(c)
    }
}

/// Strong chromatic index of `g`, or bounds when `budget` search nodes are
/// not enough to close the gap.
pub fn exact_strong_index(g: &Graph, budget: u64) -> Result<ExactOutcome, ExactError> {
    let sq = Square::new(g);
    if sq.len() == 0 {
        return Ok(ExactOutcome {
            lower: 0,
            upper: 0,
            witness: PartialColoring::new(0),
            exact: true,
            nodes: 0,
        });
    }
    let lower = max_clique(&sq, budget);
    let mut search = Dsatur::new(&sq, MAX_COLORS as usize, lower, budget);
    search.finish_first = true;
    search.search(0);
    let Some(witness) = search.witness(search.best) else {
        return Err(ExactError::PaletteOverflow);
    };
    let upper = search.best;
    let exact = upper == lower || !search.aborted;
    Ok(ExactOutcome {
        lower: if exact { upper } else { lower },
        upper,
        witness,
        exact,
        nodes: search.nodes,
    })
}

/// Searches for a strong edge-coloring of `g` with colors `1..=k`.
pub fn find_coloring(g: &Graph, k: u8, budget: u64) -> KColoring {
    let sq = Square::new(g);
    if sq.len() == 0 {
        return KColoring::Found(PartialColoring::new(k));
    }
    let k = k.min(MAX_COLORS);
    let mut search = Dsatur::new(&sq, k as usize, k as usize, budget);
    search.search(0);
    match search.witness(k as usize) {
        Some(c) => KColoring::Found(c),
        None if search.aborted => KColoring::BudgetExhausted,
        None => KColoring::Impossible,
    }
}
