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

//! Strong edge-coloring of multigraphs with maximum degree at most four.
//!
//! The crate is `no_std` and only needs `alloc`. It provides the graph
//! model, partial colorings with incremental availability tracking, greedy
//! and exact solvers, and [`reduce::solve21`], which colors any graph of
//! maximum degree four with at most 21 colors by replaying a reduction
//! argument step by step.

#![no_std]

extern crate alloc;

pub mod availability;
pub mod bounds;
pub mod coloring;
pub mod exact;
pub mod generators;
pub mod graph;
pub mod greedy;
pub mod line_graph;
pub mod neighborhood;
pub mod reduce;
pub mod sdr;
pub mod structure;
pub mod verify;

pub use availability::{AvailabilityView, ColoringState};
pub use bounds::{bounds, Bounds};
pub use coloring::{Color, ColorSet, PartialColoring, MAX_COLORS};
pub use exact::{clique_lower_bound, exact_strong_index, find_coloring, ExactOutcome, KColoring};
pub use graph::{EdgeId, Graph, GraphError, VertexId};
pub use greedy::greedy_color;
pub use line_graph::line_graph_square;
pub use neighborhood::{edge_neighborhood, sees};
pub use reduce::{solve21, solve21_with, Solution, SolveError, SolveOptions, Trace};
pub use verify::{verify_complete, verify_strong_coloring, Violation};
