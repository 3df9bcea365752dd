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

//! Undirected loopless multigraph with stable vertex and edge ids.
//!
//! Deleting a vertex or an edge never renumbers the survivors: the slot is
//! tombstoned and iteration skips it. New vertices and edges are appended,
//! so ids handed out before a mutation stay valid afterwards.

use alloc::vec;
use alloc::vec::Vec;

use thiserror::Error;

pub type VertexId = usize;
pub type EdgeId = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("self-loop at vertex {0}")]
    SelfLoop(VertexId),
    #[error("unknown vertex {0}")]
    UnknownVertex(VertexId),
    #[error("unknown edge {0}")]
    UnknownEdge(EdgeId),
    #[error("graph is disconnected")]
    Disconnected,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Graph {
    alive: Vec<bool>,
    edges: Vec<Option<[VertexId; 2]>>,
    // Sorted ascending by edge id.
    adjacency: Vec<Vec<EdgeId>>,
    live_vertices: usize,
    live_edges: usize,
}

impl Graph {
    /// Graph with `n` isolated vertices `0..n`.
    pub fn new(n: usize) -> Self {
        Graph {
            alive: vec![true; n],
            edges: Vec::new(),
            adjacency: vec![Vec::new(); n],
            live_vertices: n,
            live_edges: 0,
        }
    }

    /// Builds a graph on `n` vertices; edge `i` of the result is `pairs[i]`.
    pub fn from_edges(n: usize, pairs: &[(VertexId, VertexId)]) -> Result<Self, GraphError> {
        let mut g = Graph::new(n);
        for &(u, v) in pairs {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn add_vertex(&mut self) -> VertexId {
        self.alive.push(true);
        self.adjacency.push(Vec::new());
        self.live_vertices += 1;
        self.alive.len() - 1
    }

    pub fn add_edge(&mut self, u: VertexId, v: VertexId) -> Result<EdgeId, GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        let id = self.edges.len();
        self.edges.push(Some([u, v]));
        self.adjacency[u].push(id);
        self.adjacency[v].push(id);
        self.live_edges += 1;
        Ok(id)
    }

    pub fn remove_edge(&mut self, e: EdgeId) -> Result<[VertexId; 2], GraphError> {
        let [u, v] = self.endpoints(e).ok_or(GraphError::UnknownEdge(e))?;
        self.edges[e] = None;
        self.adjacency[u].retain(|&f| f != e);
        self.adjacency[v].retain(|&f| f != e);
        self.live_edges -= 1;
        Ok([u, v])
    }

    /// Removes `v` together with every edge incident with it.
    pub fn remove_vertex(&mut self, v: VertexId) -> Result<(), GraphError> {
        self.check_vertex(v)?;
        let incident = core::mem::take(&mut self.adjacency[v]);
        for e in incident {
            if let Some([a, b]) = self.edges[e].take() {
                let other = if a == v { b } else { a };
                self.adjacency[other].retain(|&f| f != e);
                self.live_edges -= 1;
            }
        }
        self.alive[v] = false;
        self.live_vertices -= 1;
        Ok(())
    }

    fn check_vertex(&self, v: VertexId) -> Result<(), GraphError> {
        if self.contains_vertex(v) {
            Ok(())
        } else {
            Err(GraphError::UnknownVertex(v))
        }
    }

    pub fn contains_vertex(&self, v: VertexId) -> bool {
        self.alive.get(v).copied().unwrap_or(false)
    }

    pub fn contains_edge(&self, e: EdgeId) -> bool {
        matches!(self.edges.get(e), Some(Some(_)))
    }

    pub fn vertex_count(&self) -> usize {
        self.live_vertices
    }

    pub fn edge_count(&self) -> usize {
        self.live_edges
    }

    /// One past the largest vertex id ever handed out.
    pub fn vertex_bound(&self) -> usize {
        self.alive.len()
    }

    /// One past the largest edge id ever handed out.
    pub fn edge_bound(&self) -> usize {
        self.edges.len()
    }

    /// `|V| + |E|`, the size measure reductions must strictly decrease.
    pub fn size(&self) -> usize {
        self.live_vertices + self.live_edges
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.alive.iter().enumerate().filter(|(_, &a)| a).map(|(v, _)| v)
    }

    pub fn edges(&self) -> impl Iterator<Item = (EdgeId, [VertexId; 2])> + '_ {
        self.edges.iter().enumerate().filter_map(|(e, ends)| ends.map(|p| (e, p)))
    }

    pub fn edge_ids(&self) -> impl Iterator<Item = EdgeId> + '_ {
        self.edges().map(|(e, _)| e)
    }

    pub fn endpoints(&self, e: EdgeId) -> Option<[VertexId; 2]> {
        self.edges.get(e).copied().flatten()
    }

    /// The endpoint of `e` that is not `v`.
    pub fn opposite(&self, e: EdgeId, v: VertexId) -> Option<VertexId> {
        let [a, b] = self.endpoints(e)?;
        if a == v {
            Some(b)
        } else if b == v {
            Some(a)
        } else {
            None
        }
    }

    /// Incident edge ids in ascending order; empty for dead vertices.
    pub fn incident(&self, v: VertexId) -> &[EdgeId] {
        self.adjacency.get(v).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.incident(v).len()
    }

    pub fn max_degree(&self) -> usize {
        self.vertices().map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        self.vertices().map(|v| self.degree(v)).min().unwrap_or(0)
    }

    /// `(edge, neighbor)` pairs at `v`, ordered by edge id. Parallel edges
    /// yield the same neighbor more than once.
    pub fn neighbors(&self, v: VertexId) -> impl Iterator<Item = (EdgeId, VertexId)> + '_ {
        self.incident(v).iter().map(move |&e| {
            let [a, b] = self.edges[e].expect("adjacency lists only hold live edges");
            (e, if a == v { b } else { a })
        })
    }

    /// Distinct neighbors of `v` in ascending id order.
    pub fn neighbor_set(&self, v: VertexId) -> Vec<VertexId> {
        let mut out: Vec<VertexId> = self.neighbors(v).map(|(_, w)| w).collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    pub fn adjacent(&self, u: VertexId, v: VertexId) -> bool {
        self.edge_between(u, v).is_some()
    }

    /// Lowest-id edge joining `u` and `v`.
    pub fn edge_between(&self, u: VertexId, v: VertexId) -> Option<EdgeId> {
        let (a, b) = if self.degree(u) <= self.degree(v) { (u, v) } else { (v, u) };
        self.neighbors(a).find(|&(_, w)| w == b).map(|(e, _)| e)
    }

    pub fn edges_between(&self, u: VertexId, v: VertexId) -> Vec<EdgeId> {
        self.neighbors(u).filter(|&(_, w)| w == v).map(|(e, _)| e).collect()
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<VertexId>> {
        let mut seen = vec![false; self.vertex_bound()];
        let mut out = Vec::new();
        for start in self.vertices() {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut comp = vec![start];
            let mut head = 0;
            while head < comp.len() {
                let v = comp[head];
                head += 1;
                for (_, w) in self.neighbors(v) {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Copy keeping only the vertices with `keep[v]`; ids are preserved.
    pub fn retain_vertices(&self, keep: impl Fn(VertexId) -> bool) -> Graph {
        let mut g = self.clone();
        for v in self.vertices() {
            if !keep(v) {
                g.remove_vertex(v).expect("vertex is live");
            }
        }
        g
    }

    /// Renumbered copy without tombstones, plus the original id of every new
    /// vertex and every new edge.
    pub fn compacted(&self) -> (Graph, Vec<VertexId>, Vec<EdgeId>) {
        let mut index = vec![usize::MAX; self.vertex_bound()];
        let vertex_map: Vec<VertexId> = self.vertices().collect();
        for (i, &v) in vertex_map.iter().enumerate() {
            index[v] = i;
        }
        let mut g = Graph::new(vertex_map.len());
        let mut edge_map = Vec::with_capacity(self.live_edges);
        for (e, [u, v]) in self.edges() {
            g.add_edge(index[u], index[v]).expect("endpoints are live");
            edge_map.push(e);
        }
        (g, vertex_map, edge_map)
    }

    /// True when no vertex pair is joined by more than one edge.
    pub fn is_simple(&self) -> bool {
        self.vertices().all(|v| {
            let ns = self.neighbor_set(v);
            ns.len() == self.degree(v)
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn edge_ids_survive_deletion() {
        let mut g = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        g.remove_edge(1).unwrap();
        assert_eq!(g.endpoints(0), Some([0, 1]));
        assert_eq!(g.endpoints(1), None);
        assert_eq!(g.endpoints(2), Some([2, 3]));
        assert_eq!(g.endpoints(3), Some([3, 0]));
        g.remove_vertex(0).unwrap();
        assert_eq!(g.edge_ids().collect::<Vec<_>>(), vec![2]);
        assert_eq!(g.vertex_count(), 3);
        let e = g.add_edge(1, 3).unwrap();
        assert_eq!(e, 4);
        assert_eq!(g.endpoints(2), Some([2, 3]));
    }

    #[test]
    fn rejects_loops_and_dead_vertices() {
        let mut g = Graph::new(2);
        assert_eq!(g.add_edge(1, 1), Err(GraphError::SelfLoop(1)));
        g.remove_vertex(0).unwrap();
        assert_eq!(g.add_edge(0, 1), Err(GraphError::UnknownVertex(0)));
    }

    #[test]
    fn parallel_edges_get_distinct_ids() {
        let g = Graph::from_edges(2, &[(0, 1), (1, 0)]).unwrap();
        assert_eq!(g.edges_between(0, 1), vec![0, 1]);
        assert_eq!(g.degree(0), 2);
        assert!(!g.is_simple());
        assert_eq!(g.neighbor_set(0), vec![1]);
    }

    #[test]
    fn compaction_maps_back() {
        let mut g = Graph::from_edges(5, &[(0, 1), (1, 2), (3, 4)]).unwrap();
        g.remove_vertex(1).unwrap();
        let (c, vmap, emap) = g.compacted();
        assert_eq!(c.vertex_count(), 4);
        assert_eq!(vmap, vec![0, 2, 3, 4]);
        assert_eq!(emap, vec![2]);
        assert_eq!(c.endpoints(0), Some([2, 3]));
    }

    #[test]
    fn components_sorted() {
        let g = Graph::from_edges(5, &[(3, 4), (0, 2)]).unwrap();
        assert_eq!(g.components(), vec![vec![0, 2], vec![1], vec![3, 4]]);
        assert!(!g.is_connected());
    }
}
