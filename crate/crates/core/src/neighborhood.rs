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

//! First and second edge neighborhoods, and the "sees" relation.

use alloc::vec;
use alloc::vec::Vec;

use crate::graph::{EdgeId, Graph, GraphError, VertexId};

/// `n1`: edges sharing an endpoint with `e`. `n2`: the remaining edges with
/// an endpoint adjacent (in `G - e`) to an endpoint of `e`. Both ascending.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeNeighborhood {
    pub n1: Vec<EdgeId>,
    pub n2: Vec<EdgeId>,
}

impl EdgeNeighborhood {
    /// `N(e) = n1 ∪ n2`, ascending.
    pub fn all(&self) -> Vec<EdgeId> {
        let mut out: Vec<EdgeId> = self.n1.iter().chain(&self.n2).copied().collect();
        out.sort_unstable();
        out
    }

    pub fn len(&self) -> usize {
        self.n1.len() + self.n2.len()
    }

    pub fn is_empty(&self) -> bool {
        self.n1.is_empty() && self.n2.is_empty()
    }
}

pub fn edge_neighborhood(g: &Graph, e: EdgeId) -> Result<EdgeNeighborhood, GraphError> {
    let [u, v] = g.endpoints(e).ok_or(GraphError::UnknownEdge(e))?;
    let mut n1: Vec<EdgeId> = g
        .incident(u)
        .iter()
        .chain(g.incident(v))
        .copied()
        .filter(|&f| f != e)
        .collect();
    n1.sort_unstable();
    n1.dedup();
    let mut near: Vec<VertexId> = g
        .neighbors(u)
        .chain(g.neighbors(v))
        .filter(|&(f, _)| f != e)
        .map(|(_, w)| w)
        .collect();
    near.sort_unstable();
    near.dedup();
    let mut n2: Vec<EdgeId> = near
        .iter()
        .flat_map(|&w| g.incident(w).iter().copied())
        .filter(|&f| f != e && n1.binary_search(&f).is_err())
        .collect();
    n2.sort_unstable();
    n2.dedup();
    Ok(EdgeNeighborhood { n1, n2 })
}

/// Whether distinct edges `e` and `f` see each other. Edges that are not
/// live never see anything.
pub fn sees(g: &Graph, e: EdgeId, f: EdgeId) -> bool {
    if e == f {
        return false;
    }
    let (Some([a, b]), Some([c, d])) = (g.endpoints(e), g.endpoints(f)) else {
        return false;
    };
    if a == c || a == d || b == c || b == d {
        return true;
    }
    [a, b].iter().any(|&x| g.adjacent(x, c) || g.adjacent(x, d))
}

/// `N(e)` for every live edge, precomputed.
#[derive(Debug, Clone)]
pub struct NeighborhoodTable {
    lists: Vec<Vec<EdgeId>>,
}

impl NeighborhoodTable {
    pub fn new(g: &Graph) -> Self {
        let mut lists = vec![Vec::new(); g.edge_bound()];
        for e in g.edge_ids() {
            lists[e] = edge_neighborhood(g, e).expect("live edge").all();
        }
        NeighborhoodTable { lists }
    }

    pub fn get(&self, e: EdgeId) -> &[EdgeId] {
        self.lists.get(e).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn max_len(&self) -> usize {
        self.lists.iter().map(Vec::len).max().unwrap_or(0)
    }
}
