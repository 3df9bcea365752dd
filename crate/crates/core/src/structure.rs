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

//! Structural queries: girth, small edge cuts, and the forbidden local
//! configurations that the reductions remove.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::graph::{EdgeId, Graph, GraphError, VertexId};

/// Length of a shortest cycle, `None` for forests. Two parallel edges form
/// a cycle of length 2.
pub fn girth(g: &Graph) -> Option<usize> {
    let mut best: Option<usize> = None;
    let mut dist = vec![usize::MAX; g.vertex_bound()];
    let mut parent_edge = vec![usize::MAX; g.vertex_bound()];
    let mut touched = Vec::new();
    for root in g.vertices() {
        for &v in &touched {
            dist[v] = usize::MAX;
            parent_edge[v] = usize::MAX;
        }
        touched.clear();
        dist[root] = 0;
        touched.push(root);
        let mut queue = VecDeque::from([root]);
        'bfs: while let Some(v) = queue.pop_front() {
            if let Some(b) = best {
                // No shorter cycle can be closed from this depth on.
                if 2 * dist[v] >= b {
                    break 'bfs;
                }
            }
            for (e, w) in g.neighbors(v) {
                if e == parent_edge[v] {
                    continue;
                }
                if dist[w] == usize::MAX {
                    dist[w] = dist[v] + 1;
                    parent_edge[w] = e;
                    touched.push(w);
                    queue.push_back(w);
                } else {
                    let len = dist[v] + dist[w] + 1;
                    if best.is_none_or(|b| len < b) {
                        best = Some(len);
                    }
                }
            }
        }
    }
    best
}

/// A bipartition of the vertex set together with the edges crossing it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeCut {
    pub side1: Vec<VertexId>,
    pub side2: Vec<VertexId>,
    pub cut_edges: Vec<EdgeId>,
}

impl EdgeCut {
    pub fn len(&self) -> usize {
        self.cut_edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cut_edges.is_empty()
    }

    fn from_side(g: &Graph, in_side1: &[bool]) -> EdgeCut {
        let side1: Vec<_> = g.vertices().filter(|&v| in_side1[v]).collect();
        let side2: Vec<_> = g.vertices().filter(|&v| !in_side1[v]).collect();
        let cut_edges = g
            .edges()
            .filter(|&(_, [a, b])| in_side1[a] != in_side1[b])
            .map(|(e, _)| e)
            .collect();
        EdgeCut { side1, side2, cut_edges }
    }
}

/// Unit-capacity max-flow between `s` and `t`, stopping once `limit` paths
/// are found. Returns the flow value and the residual-reachable set of `s`.
fn bounded_flow(g: &Graph, s: VertexId, t: VertexId, limit: usize) -> (usize, Vec<bool>) {
    // flow[e] > 0 means one unit travels from endpoints[0] to endpoints[1].
    let mut flow = vec![0i8; g.edge_bound()];
    let mut value = 0;
    let mut pred: Vec<Option<(EdgeId, VertexId)>> = vec![None; g.vertex_bound()];
    loop {
        for p in pred.iter_mut() {
            *p = None;
        }
        let mut reached = vec![false; g.vertex_bound()];
        reached[s] = true;
        let mut queue = VecDeque::from([s]);
        while let Some(v) = queue.pop_front() {
            if v == t {
                break;
            }
            for (e, w) in g.neighbors(v) {
                if reached[w] {
                    continue;
                }
                let [a, _] = g.endpoints(e).expect("live edge");
                let forward = a == v;
                let residual = if forward { 1 - flow[e] } else { 1 + flow[e] };
                if residual > 0 {
                    reached[w] = true;
                    pred[w] = Some((e, v));
                    queue.push_back(w);
                }
            }
        }
        if !reached[t] || value >= limit {
            return (value, reached);
        }
        let mut v = t;
        while let Some((e, from)) = pred[v] {
            let [a, _] = g.endpoints(e).expect("live edge");
            if a == from {
                flow[e] += 1;
            } else {
                flow[e] -= 1;
            }
            v = from;
        }
        value += 1;
    }
}

/// A minimum edge cut of `g` when its size is at most `k`.
///
/// The returned cut is globally minimum. Single-vertex graphs have no cut.
pub fn find_edge_cut_at_most(g: &Graph, k: usize) -> Result<Option<EdgeCut>, GraphError> {
    if !g.is_connected() {
        return Err(GraphError::Disconnected);
    }
    let mut vs = g.vertices();
    let Some(s) = vs.next() else { return Ok(None) };
    let mut best = k + 1;
    let mut best_t = None;
    for t in vs {
        let (value, _) = bounded_flow(g, s, t, best);
        if value < best {
            best = value;
            best_t = Some(t);
        }
    }
    Ok(best_t.map(|t| {
        let (_, reached) = bounded_flow(g, s, t, best);
        EdgeCut::from_side(g, &reached)
    }))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ConfigurationKind {
    MultiEdge,
    Triangle,
    K33,
    K24,
    K23,
    C4,
    C5,
}

impl ConfigurationKind {
    /// Order in which the reductions look for configurations.
    pub const ALL: [ConfigurationKind; 7] = [
        ConfigurationKind::MultiEdge,
        ConfigurationKind::Triangle,
        ConfigurationKind::K33,
        ConfigurationKind::K24,
        ConfigurationKind::K23,
        ConfigurationKind::C4,
        ConfigurationKind::C5,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ConfigurationKind::MultiEdge => "multi-edge",
            ConfigurationKind::Triangle => "triangle",
            ConfigurationKind::K33 => "K33",
            ConfigurationKind::K24 => "K24",
            ConfigurationKind::K23 => "K23",
            ConfigurationKind::C4 => "C4",
            ConfigurationKind::C5 => "C5",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|k| k.name().eq_ignore_ascii_case(name))
    }
}

impl fmt::Display for ConfigurationKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// An occurrence of a configuration.
///
/// Embedding layout per kind:
/// * `MultiEdge`: `[u, v]`, the endpoints of the parallel class;
/// * `Triangle`, `C4`, `C5`: the cycle in traversal order;
/// * `K23`: `[u1, u2, u3, v1, v2]` with every `ui` adjacent to both `vj`;
/// * `K24`: `[u1, u2, u3, u4, v1, v2]`, same convention;
/// * `K33`: `[u1, u2, u3, v1, v2, v3]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Configuration {
    pub kind: ConfigurationKind,
    pub embedding: Vec<VertexId>,
}

impl Configuration {
    /// Checks the embedding against `g` directly.
    pub fn is_present_in(&self, g: &Graph) -> bool {
        let emb = &self.embedding;
        let distinct = {
            let mut s = emb.clone();
            s.sort_unstable();
            s.dedup();
            s.len() == emb.len()
        };
        if !distinct || !emb.iter().all(|&v| g.contains_vertex(v)) {
            return false;
        }
        let cycle = |len: usize| {
            emb.len() == len && (0..len).all(|i| g.adjacent(emb[i], emb[(i + 1) % len]))
        };
        let biclique = |a: usize, b: usize| {
            emb.len() == a + b
                && emb[..a].iter().all(|&u| emb[a..].iter().all(|&v| g.adjacent(u, v)))
        };
        match self.kind {
            ConfigurationKind::MultiEdge => {
                emb.len() == 2 && g.edges_between(emb[0], emb[1]).len() >= 2
            }
            ConfigurationKind::Triangle => cycle(3),
            ConfigurationKind::C4 => cycle(4),
            ConfigurationKind::C5 => cycle(5),
            ConfigurationKind::K23 => biclique(3, 2),
            ConfigurationKind::K24 => biclique(4, 2),
            ConfigurationKind::K33 => biclique(3, 3),
        }
    }
}

fn common_neighbors(g: &Graph, a: VertexId, b: VertexId) -> Vec<VertexId> {
    let nb = g.neighbor_set(b);
    g.neighbor_set(a).into_iter().filter(|w| nb.binary_search(w).is_ok()).collect()
}

/// Vertices at distance exactly two from `v` (through distinct neighbors),
/// ascending.
fn second_ring(g: &Graph, v: VertexId) -> Vec<VertexId> {
    let mut out = Vec::new();
    for w in g.neighbor_set(v) {
        for z in g.neighbor_set(w) {
            if z != v {
                out.push(z);
            }
        }
    }
    out.sort_unstable();
    out.dedup();
    out
}

/// First occurrence of `kind` scanning from the lowest vertex id.
///
/// The search walks bounded-radius neighborhoods, so it is meant for graphs
/// of small maximum degree.
pub fn find_configuration(g: &Graph, kind: ConfigurationKind) -> Option<Configuration> {
    let found = |embedding: Vec<VertexId>| Some(Configuration { kind, embedding });
    match kind {
        ConfigurationKind::MultiEdge => {
            for v in g.vertices() {
                let mut ns: Vec<VertexId> = g.neighbors(v).map(|(_, w)| w).collect();
                ns.sort_unstable();
                if let Some(w) = ns.windows(2).find(|p| p[0] == p[1]).map(|p| p[0]) {
                    return found(vec![v.min(w), v.max(w)]);
                }
            }
            None
        }
        ConfigurationKind::Triangle => {
            for a in g.vertices() {
                let na = g.neighbor_set(a);
                for &b in na.iter().filter(|&&b| b > a) {
                    for c in g.neighbor_set(b) {
                        if c > b && na.binary_search(&c).is_ok() {
                            return found(vec![a, b, c]);
                        }
                    }
                }
            }
            None
        }
        ConfigurationKind::C4 => {
            for a in g.vertices() {
                let na = g.neighbor_set(a);
                for &b in na.iter().filter(|&&b| b > a) {
                    for c in g.neighbor_set(b).into_iter().filter(|&c| c > a) {
                        for d in g.neighbor_set(c) {
                            if d > a && d != b && na.binary_search(&d).is_ok() {
                                return found(vec![a, b, c, d]);
                            }
                        }
                    }
                }
            }
            None
        }
        ConfigurationKind::C5 => {
            for a in g.vertices() {
                let na = g.neighbor_set(a);
                for &b in na.iter().filter(|&&b| b > a) {
                    for c in g.neighbor_set(b).into_iter().filter(|&c| c > a) {
                        for d in g.neighbor_set(c) {
                            if d <= a || d == b {
                                continue;
                            }
                            for e in g.neighbor_set(d) {
                                if e > a && e != b && e != c && na.binary_search(&e).is_ok() {
                                    return found(vec![a, b, c, d, e]);
                                }
                            }
                        }
                    }
                }
            }
            None
        }
        ConfigurationKind::K23 | ConfigurationKind::K24 => {
            let need = if kind == ConfigurationKind::K23 { 3 } else { 4 };
            for v1 in g.vertices() {
                for v2 in second_ring(g, v1).into_iter().filter(|&v2| v2 > v1) {
                    let common = common_neighbors(g, v1, v2);
                    if common.len() >= need {
                        let mut emb: Vec<VertexId> = common[..need].to_vec();
                        emb.extend([v1, v2]);
                        return found(emb);
                    }
                }
            }
            None
        }
        ConfigurationKind::K33 => {
            for u1 in g.vertices() {
                let ring: Vec<VertexId> =
                    second_ring(g, u1).into_iter().filter(|&w| w > u1).collect();
                for (i, &u2) in ring.iter().enumerate() {
                    let c12 = common_neighbors(g, u1, u2);
                    if c12.len() < 3 {
                        continue;
                    }
                    for &u3 in &ring[i + 1..] {
                        let n3 = g.neighbor_set(u3);
                        let c: Vec<VertexId> =
                            c12.iter().copied().filter(|w| n3.binary_search(w).is_ok()).collect();
                        if c.len() >= 3 {
                            return found(vec![u1, u2, u3, c[0], c[1], c[2]]);
                        }
                    }
                }
            }
            None
        }
    }
}

/// True iff every pair of edges sees each other: they share an endpoint or
/// some edge joins an endpoint of one to an endpoint of the other.
pub fn is_2k2_free(g: &Graph) -> bool {
    let edges: Vec<[VertexId; 2]> = g.edges().map(|(_, p)| p).collect();
    for (i, &[a, b]) in edges.iter().enumerate() {
        for &[c, d] in &edges[i + 1..] {
            let touch = a == c || a == d || b == c || b == d;
            let joined = g.adjacent(a, c) || g.adjacent(a, d) || g.adjacent(b, c) || g.adjacent(b, d);
            if !touch && !joined {
                return false;
            }
        }
    }
    true
}
