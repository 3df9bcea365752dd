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

use alloc::vec::Vec;

use thiserror::Error;

use crate::availability::ColoringState;
use crate::coloring::PartialColoring;
use crate::graph::{EdgeId, Graph};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GreedyError {
    #[error("order is not a permutation of the edge set")]
    BadOrder,
    #[error("no color left for edge {edge}")]
    Stuck { edge: EdgeId, partial: PartialColoring },
}

/// Colors edges in `order`, each with its smallest available color.
pub fn greedy_color(g: &Graph, k: u8, order: &[EdgeId]) -> Result<PartialColoring, GreedyError> {
    let mut sorted: Vec<EdgeId> = order.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() != order.len() || !sorted.iter().copied().eq(g.edge_ids()) {
        return Err(GreedyError::BadOrder);
    }
    let mut state = ColoringState::new(g, PartialColoring::new(k));
    for &e in order {
        if state.assign_min(e).is_none() {
            return Err(GreedyError::Stuck { edge: e, partial: state.into_coloring() });
        }
    }
    Ok(state.into_coloring())
}
