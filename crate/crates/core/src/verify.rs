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

use thiserror::Error;

use crate::coloring::{Color, PartialColoring};
use crate::graph::{EdgeId, Graph};
use crate::neighborhood::edge_neighborhood;

/// First problem found in a coloring, scanning edges by ascending id.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum Violation {
    #[error("edges {first} and {second} see each other but share color {color}")]
    Conflict { first: EdgeId, second: EdgeId, color: Color },
    #[error("edge {edge} has color {color} outside the palette 1..={k}")]
    OutOfPalette { edge: EdgeId, color: Color, k: u8 },
    #[error("edge {edge} is colored but not in the graph")]
    UnknownEdge { edge: EdgeId },
    #[error("edge {edge} is uncolored")]
    Uncolored { edge: EdgeId },
}

/// Checks that no two same-colored edges see each other. Uncolored edges
/// are ignored, so this accepts good partial colorings.
pub fn verify_strong_coloring(g: &Graph, c: &PartialColoring) -> Result<(), Violation> {
    for (e, color) in c.iter() {
        if !g.contains_edge(e) {
            return Err(Violation::UnknownEdge { edge: e });
        }
        if color == 0 || color > c.palette_size() {
            return Err(Violation::OutOfPalette { edge: e, color, k: c.palette_size() });
        }
    }
    for (e, color) in c.iter() {
        let nb = edge_neighborhood(g, e).expect("checked above");
        if let Some(&f) = nb.n1.iter().chain(&nb.n2).filter(|&&f| f > e).find(|&&f| c.get(f) == Some(color)) {
            return Err(Violation::Conflict { first: e, second: f, color });
        }
    }
    Ok(())
}

/// [`verify_strong_coloring`] plus every live edge being colored.
pub fn verify_complete(g: &Graph, c: &PartialColoring) -> Result<(), Violation> {
    verify_strong_coloring(g, c)?;
    match g.edge_ids().find(|&e| !c.is_colored(e)) {
        Some(edge) => Err(Violation::Uncolored { edge }),
        None => Ok(()),
    }
}
