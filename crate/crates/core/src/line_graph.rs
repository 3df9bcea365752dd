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

use alloc::vec;
use alloc::vec::Vec;

use crate::graph::{EdgeId, Graph};
use crate::neighborhood::edge_neighborhood;

/// Square of the line graph: vertex `i` stands for the `i`-th live edge of
/// `g` in ascending id order; two vertices are adjacent iff the edges see
/// each other.
pub fn line_graph_square(g: &Graph) -> Graph {
    line_graph_square_with_map(g).0
}

/// [`line_graph_square`] together with the edge of `g` behind each vertex.
pub fn line_graph_square_with_map(g: &Graph) -> (Graph, Vec<EdgeId>) {
    let edges: Vec<EdgeId> = g.edge_ids().collect();
    let mut index = vec![usize::MAX; g.edge_bound()];
    for (i, &e) in edges.iter().enumerate() {
        index[e] = i;
    }
    let mut sq = Graph::new(edges.len());
    for (i, &e) in edges.iter().enumerate() {
        for f in edge_neighborhood(g, e).expect("live edge").all() {
            if index[f] > i {
                sq.add_edge(i, index[f]).expect("valid vertices");
            }
        }
    }
    (sq, edges)
}
