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

//! The 21-coloring algorithm for graphs of maximum degree four.
//!
//! [`solve21`] recursively shrinks the input until a piece is small enough
//! for the exact solver, then extends the colorings back. The moves, in
//! dispatch order: split components, solve tiny pieces exactly, peel
//! vertices of degree at most three and surplus parallel edges, split
//! along edge cuts of size at most three, delete short-cycle
//! configurations, and finally, on 4-regular graphs of girth at least six,
//! precolor and sequence around an anchor vertex and color the two sides
//! of the resulting partition separately.
//!
//! Whenever a move fails to produce a coloring the step is logged as a
//! fallback and the exact solver colors that piece with 21 colors instead,
//! so the output is always a valid coloring.

mod collaborative;
mod complete;
mod partition;
mod rename;
mod sequence;
mod short_cycle;
mod small_cut;
pub mod trace;

use alloc::vec::Vec;

use thiserror::Error;

pub use collaborative::collaborative_color;
pub use partition::{build_partition, PartitionLmr, PartitionViolation, Region};
pub use rename::{rename_colors, RenameSpec};
pub use sequence::{build_precolor_and_sequence, extend_sequence, Anchor, SequenceError, SequencePlan};
pub use short_cycle::claimed_minimums;
pub use trace::{CaseLabel, Completion, FallbackReason, Step, Trace, TraceEntry};

use crate::availability::ColoringState;
use crate::coloring::{Color, PartialColoring};
use crate::exact::{exact_strong_index, find_coloring, KColoring};
use crate::graph::{EdgeId, Graph, VertexId};
use crate::structure::{find_configuration, find_edge_cut_at_most, girth, ConfigurationKind};
use crate::verify::verify_complete;

/// Palette size of every coloring produced here.
pub const PALETTE: Color = 21;

/// Graphs with at most this many edges go straight to the exact solver.
pub const BASE_CASE_EDGES: usize = 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SolveOptions {
    /// Node budget for each exact-solver call.
    pub exact_budget: u64,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions { exact_budget: 20_000_000 }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolveError {
    #[error("maximum degree {0} exceeds 4")]
    DegreeTooLarge(usize),
    #[error("exact solver ran out of budget on a piece with {edges} edges")]
    ExactBudget { edges: usize },
    #[error("no 21-coloring exists for a piece with {edges} edges")]
    NoColoring { edges: usize },
    #[error("recursive instance with |V|+|E|={child} is not smaller than its parent ({parent})")]
    NotSmaller { parent: usize, child: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Solution {
    pub coloring: PartialColoring,
    pub trace: Trace,
}

/// Strong edge-coloring of `g` with at most 21 colors, plus the step trace.
pub fn solve21(g: &Graph) -> Result<Solution, SolveError> {
    solve21_with(g, SolveOptions::default())
}

pub fn solve21_with(g: &Graph, options: SolveOptions) -> Result<Solution, SolveError> {
    if g.max_degree() > 4 {
        return Err(SolveError::DegreeTooLarge(g.max_degree()));
    }
    let mut solver = Solver { trace: Trace::default(), depth: 0, options };
    let coloring = solver.solve(g)?;
    debug_assert_eq!(verify_complete(g, &coloring), Ok(()));
    Ok(Solution { coloring, trace: solver.trace })
}

pub(crate) struct Solver {
    pub(crate) trace: Trace,
    pub(crate) depth: usize,
    options: SolveOptions,
}

/// Copies the colors of `from` on edges of `g` into `into`.
pub(crate) fn merge_into(into: &mut PartialColoring, from: &PartialColoring, g: &Graph) {
    for (e, c) in from.iter() {
        if g.contains_edge(e) {
            into.set(e, c);
        }
    }
}

enum Peeled {
    Vertex(Vec<EdgeId>),
    Edge(EdgeId),
}

impl Solver {
    pub(crate) fn log(&mut self, g: &Graph, step: Step) {
        self.trace.entries.push(TraceEntry {
            depth: self.depth,
            step,
            vertices: g.vertex_count(),
            edges: g.edge_count(),
        });
    }

    /// Solves a strictly smaller instance one level deeper.
    pub(crate) fn recurse(&mut self, parent: &Graph, child: &Graph) -> Result<PartialColoring, SolveError> {
        if child.size() >= parent.size() {
            return Err(SolveError::NotSmaller { parent: parent.size(), child: child.size() });
        }
        self.depth += 1;
        let out = self.solve(child);
        self.depth -= 1;
        out
    }

    /// Logs a fallback and colors `g` with the exact solver.
    pub(crate) fn fallback(&mut self, g: &Graph, reason: FallbackReason) -> Result<PartialColoring, SolveError> {
        self.log(g, Step::Fallback { reason });
        self.exact21(g)
    }

    /// Logs a fallback, then finishes `partial` by search before resorting
    /// to the exact solver on all of `g`.
    pub(crate) fn fallback_from(
        &mut self,
        g: &Graph,
        partial: PartialColoring,
        reason: FallbackReason,
    ) -> Result<PartialColoring, SolveError> {
        self.log(g, Step::Fallback { reason });
        let targets: Vec<EdgeId> = g.edge_ids().filter(|&e| !partial.is_colored(e)).collect();
        let mut state = ColoringState::new(g, partial);
        let mut budget = 200_000;
        if complete::list_search(&mut state, &targets, &mut budget) {
            let out = state.into_coloring();
            if verify_complete(g, &out).is_ok() {
                return Ok(out);
            }
        }
        self.exact21(g)
    }

    fn exact21(&mut self, g: &Graph) -> Result<PartialColoring, SolveError> {
        match find_coloring(g, PALETTE, self.options.exact_budget) {
            KColoring::Found(c) => Ok(c.with_palette(PALETTE)),
            KColoring::Impossible => Err(SolveError::NoColoring { edges: g.edge_count() }),
            KColoring::BudgetExhausted => Err(SolveError::ExactBudget { edges: g.edge_count() }),
        }
    }

    pub(crate) fn solve(&mut self, g: &Graph) -> Result<PartialColoring, SolveError> {
        let components = g.components();
        if components.len() > 1 && g.edge_count() > 0 {
            return self.solve_components(g, components);
        }
        if g.edge_count() <= BASE_CASE_EDGES {
            return self.base_case(g);
        }
        if low_degree_vertex(g).is_some() || parallel_edge(g).is_some() {
            return self.peel(g);
        }
        if let Some(cut) = find_edge_cut_at_most(g, 3).expect("connected") {
            return small_cut::reduce_small_cut(self, g, &cut);
        }
        for kind in ConfigurationKind::ALL {
            if kind == ConfigurationKind::MultiEdge {
                continue;
            }
            if let Some(conf) = find_configuration(g, kind) {
                return short_cycle::reduce_short_cycle(self, g, &conf);
            }
        }
        debug_assert!(girth(g).is_none_or(|len| len >= 6));
        self.partition_path(g)
    }

    fn solve_components(&mut self, g: &Graph, components: Vec<Vec<VertexId>>) -> Result<PartialColoring, SolveError> {
        self.log(g, Step::Components { count: components.len() });
        let mut out = PartialColoring::with_capacity(PALETTE, g.edge_bound());
        let mut member = alloc::vec![usize::MAX; g.vertex_bound()];
        for (i, comp) in components.iter().enumerate() {
            for &v in comp {
                member[v] = i;
            }
        }
        for i in 0..components.len() {
            let piece = g.retain_vertices(|v| member[v] == i);
            if piece.edge_count() == 0 {
                continue;
            }
            let c = self.recurse(g, &piece)?;
            merge_into(&mut out, &c, &piece);
        }
        Ok(out)
    }

    fn base_case(&mut self, g: &Graph) -> Result<PartialColoring, SolveError> {
        let out = exact_strong_index(g, self.options.exact_budget)
            .map_err(|_| SolveError::NoColoring { edges: g.edge_count() })?;
        self.log(g, Step::BaseCase { colors: out.upper });
        Ok(out.witness.with_palette(PALETTE))
    }

    /// Removes low-degree vertices and surplus parallel edges one at a time
    /// until neither is left, solves the rest, then restores the removed
    /// edges in reverse order, each with its smallest available color.
    fn peel(&mut self, g: &Graph) -> Result<PartialColoring, SolveError> {
        let depth0 = self.depth;
        let mut core = g.clone();
        let mut stack = Vec::new();
        while core.edge_count() > BASE_CASE_EDGES && core.is_connected() {
            if let Some(v) = low_degree_vertex(&core) {
                self.log(&core, Step::LowDegree { vertex: v });
                let edges = core.incident(v).to_vec();
                core.remove_vertex(v).expect("live vertex");
                stack.push(Peeled::Vertex(edges));
            } else if let Some(e) = parallel_edge(&core) {
                self.log(&core, Step::MultiEdge { edge: e });
                core.remove_edge(e).expect("live edge");
                stack.push(Peeled::Edge(e));
            } else {
                break;
            }
            self.depth += 1;
        }
        self.depth -= 1;
        let sub = self.recurse(g, &core);
        self.depth = depth0;
        let sub = sub?;
        let mut state = ColoringState::new(g, sub);
        while let Some(item) = stack.pop() {
            let (edges, claimed, context) = match item {
                Peeled::Vertex(edges) => (edges, 3, "low-degree"),
                Peeled::Edge(e) => (alloc::vec![e], 5, "multi-edge"),
            };
            for &e in &edges {
                let avail = state.available(e).len();
                if avail < claimed {
                    self.log(g, Step::CountCheck { context, edge: e, claimed, actual: avail });
                }
            }
            for &e in &edges {
                if state.assign_min(e).is_none() {
                    let reason = if claimed == 3 {
                        FallbackReason::LowDegree { edge: e }
                    } else {
                        FallbackReason::MultiEdge { edge: e }
                    };
                    return self.fallback_from(g, state.into_coloring(), reason);
                }
            }
        }
        Ok(state.into_coloring())
    }

    fn partition_path(&mut self, g: &Graph) -> Result<PartialColoring, SolveError> {
        let Some(x) = g.vertices().next() else { return self.base_case(g) };
        let plan = match build_precolor_and_sequence(g, x) {
            Ok(plan) => plan,
            Err(_) => return self.fallback(g, FallbackReason::Partition("anchor-shape")),
        };
        let extended = extend_sequence(g, &plan);
        let covers = plan.covers_all(g);
        self.log(g, Step::Sequence { anchor: x, length: plan.s.len(), covers });
        if covers {
            return match extended {
                Ok(c) if verify_complete(g, &c).is_ok() => Ok(c),
                Ok(c) => self.fallback_from(g, c, FallbackReason::Sequence { edge: usize::MAX }),
                Err(SequenceError::Stuck { edge, partial }) => {
                    self.fallback_from(g, partial, FallbackReason::Sequence { edge })
                }
                Err(_) => self.fallback(g, FallbackReason::Sequence { edge: usize::MAX }),
            };
        }
        let part = match build_partition(g, &plan) {
            Ok(part) => part,
            Err(violation) => return self.fallback(g, FallbackReason::Partition(violation.check)),
        };
        self.log(
            g,
            Step::Partition {
                anchor: x,
                l: part.l.len(),
                m: part.m.len(),
                r: part.r.len(),
                f: part.f.len(),
            },
        );
        collaborative::color_partition(self, g, &plan, &part)
    }
}

/// Lowest vertex of degree between one and three.
fn low_degree_vertex(g: &Graph) -> Option<VertexId> {
    g.vertices().find(|&v| (1..=3).contains(&g.degree(v)))
}

/// Highest-id edge that has a parallel copy.
fn parallel_edge(g: &Graph) -> Option<EdgeId> {
    for v in g.vertices() {
        let inc = g.incident(v);
        for (i, &e) in inc.iter().enumerate() {
            let w = g.opposite(e, v).expect("incident");
            if w < v {
                continue;
            }
            for &f in &inc[i + 1..] {
                if g.opposite(f, v) == Some(w) {
                    return Some(e.max(f));
                }
            }
        }
    }
    None
}
