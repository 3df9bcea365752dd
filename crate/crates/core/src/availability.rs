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

//! Available colors under a partial coloring, both as a read-only view and
//! as an incrementally maintained state with cheap undo.

use alloc::vec;
use alloc::vec::Vec;

use crate::coloring::{Color, ColorSet, PartialColoring, MAX_COLORS};
use crate::graph::{EdgeId, Graph, VertexId};
use crate::neighborhood::{edge_neighborhood, NeighborhoodTable};

/// Read-only snapshot over `(graph, coloring)`.
#[derive(Debug, Clone, Copy)]
pub struct AvailabilityView<'a> {
    g: &'a Graph,
    c: &'a PartialColoring,
}

impl<'a> AvailabilityView<'a> {
    pub fn new(g: &'a Graph, c: &'a PartialColoring) -> Self {
        AvailabilityView { g, c }
    }

    /// Colors on `N(e)`.
    pub fn seen_colors(&self, e: EdgeId) -> ColorSet {
        match edge_neighborhood(self.g, e) {
            Ok(nb) => nb.n1.iter().chain(&nb.n2).filter_map(|&f| self.c.get(f)).collect(),
            Err(_) => ColorSet::EMPTY,
        }
    }

    /// `A(e)`: the palette minus the colors on `N(e)`.
    pub fn available(&self, e: EdgeId) -> ColorSet {
        self.c.palette().difference(self.seen_colors(e))
    }

    /// Colors on edges incident with `v`.
    pub fn used_at(&self, v: VertexId) -> ColorSet {
        self.g.incident(v).iter().filter_map(|&f| self.c.get(f)).collect()
    }

    /// Colors on edges incident with `u` other than the edges joining `u`
    /// and `v`.
    pub fn used_at_except(&self, u: VertexId, v: VertexId) -> ColorSet {
        self.g
            .neighbors(u)
            .filter(|&(_, w)| w != v)
            .filter_map(|(f, _)| self.c.get(f))
            .collect()
    }
}

/// Partial coloring plus per-edge counts of each color in `N(e)`, kept up
/// to date on every assignment so availability queries are O(1).
#[derive(Debug, Clone)]
pub struct ColoringState<'g> {
    g: &'g Graph,
    table: NeighborhoodTable,
    coloring: PartialColoring,
    counts: Vec<[u16; MAX_COLORS as usize]>,
    blocked: Vec<ColorSet>,
}

impl<'g> ColoringState<'g> {
    pub fn new(g: &'g Graph, coloring: PartialColoring) -> Self {
        let table = NeighborhoodTable::new(g);
        Self::with_table(g, table, coloring)
    }

    pub fn with_table(g: &'g Graph, table: NeighborhoodTable, coloring: PartialColoring) -> Self {
        let bound = g.edge_bound();
        let mut state = ColoringState {
            g,
            table,
            coloring: PartialColoring::with_capacity(coloring.palette_size(), bound),
            counts: vec![[0; MAX_COLORS as usize]; bound],
            blocked: vec![ColorSet::EMPTY; bound],
        };
        for (e, c) in coloring.iter() {
            if g.contains_edge(e) {
                state.assign(e, c);
            }
        }
        state
    }

    pub fn graph(&self) -> &'g Graph {
        self.g
    }

    pub fn table(&self) -> &NeighborhoodTable {
        &self.table
    }

    pub fn coloring(&self) -> &PartialColoring {
        &self.coloring
    }

    pub fn into_coloring(self) -> PartialColoring {
        self.coloring
    }

    pub fn palette_size(&self) -> u8 {
        self.coloring.palette_size()
    }

    pub fn color_of(&self, e: EdgeId) -> Option<Color> {
        self.coloring.get(e)
    }

    /// `A(e)` under the current assignment.
    pub fn available(&self, e: EdgeId) -> ColorSet {
        self.coloring.palette().difference(self.blocked[e])
    }

    pub fn is_available(&self, e: EdgeId, c: Color) -> bool {
        c >= 1 && c <= self.palette_size() && !self.blocked[e].contains(c)
    }

    /// Colors `e` with `c`. The caller is responsible for `c` being
    /// available; a conflicting assignment is still recorded.
    pub fn assign(&mut self, e: EdgeId, c: Color) {
        if let Some(old) = self.coloring.get(e) {
            if old == c {
                return;
            }
            self.unassign(e);
        }
        self.coloring.set(e, c);
        let slot = (c - 1) as usize;
        for &f in self.table.get(e) {
            self.counts[f][slot] += 1;
            self.blocked[f].insert(c);
        }
        self.debug_check(e);
    }

    pub fn unassign(&mut self, e: EdgeId) -> Option<Color> {
        let c = self.coloring.clear(e)?;
        let slot = (c - 1) as usize;
        for &f in self.table.get(e) {
            self.counts[f][slot] -= 1;
            if self.counts[f][slot] == 0 {
                self.blocked[f].remove(c);
            }
        }
        self.debug_check(e);
        Some(c)
    }

    /// Colors `e` with its smallest available color.
    pub fn assign_min(&mut self, e: EdgeId) -> Option<Color> {
        let c = self.available(e).min()?;
        self.assign(e, c);
        Some(c)
    }

    #[cfg(debug_assertions)]
    fn debug_check(&self, e: EdgeId) {
        let view = AvailabilityView::new(self.g, &self.coloring);
        for &f in self.table.get(e).iter().chain(core::iter::once(&e)) {
            debug_assert_eq!(self.blocked[f], view.seen_colors(f), "stale availability at {f}");
        }
    }

    #[cfg(not(debug_assertions))]
    fn debug_check(&self, _e: EdgeId) {}
}
