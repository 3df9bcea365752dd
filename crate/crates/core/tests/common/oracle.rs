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

//! Brute-force reference implementations. These only read the raw edge
//! list and never call into the library's own algorithms.

#![allow(dead_code)]

use strongedge_core::{ColorSet, EdgeId, Graph, VertexId};

/// Edge list as `(id, a, b)` triples.
pub fn edge_list(g: &Graph) -> Vec<(EdgeId, VertexId, VertexId)> {
    g.edges().map(|(e, [a, b])| (e, a, b)).collect()
}

/// Multiplicity matrix over `0..vertex_bound`.
pub fn multiplicity(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.vertex_bound();
    let mut m = vec![vec![0; n]; n];
    for (_, a, b) in edge_list(g) {
        m[a][b] += 1;
        m[b][a] += 1;
    }
    m
}

/// Distinct edges see each other when they share an endpoint or an edge
/// joins an endpoint of one to an endpoint of the other.
pub fn sees(m: &[Vec<usize>], (a, b): (VertexId, VertexId), (c, d): (VertexId, VertexId)) -> bool {
    let share = a == c || a == d || b == c || b == d;
    share || m[a][c] > 0 || m[a][d] > 0 || m[b][c] > 0 || m[b][d] > 0
}

/// All edges seen by `e`, ascending.
pub fn neighborhood(g: &Graph, e: EdgeId) -> Vec<EdgeId> {
    let m = multiplicity(g);
    let edges = edge_list(g);
    let &(_, a, b) = edges.iter().find(|t| t.0 == e).expect("edge exists");
    let mut out: Vec<EdgeId> =
        edges.iter().filter(|&&(f, c, d)| f != e && sees(&m, (a, b), (c, d))).map(|t| t.0).collect();
    out.sort_unstable();
    out
}

/// The seeing relation as an adjacency matrix over edge positions.
pub fn conflict_matrix(g: &Graph) -> (Vec<EdgeId>, Vec<Vec<bool>>) {
    let m = multiplicity(g);
    let edges = edge_list(g);
    let ids = edges.iter().map(|t| t.0).collect();
    let conflict = edges
        .iter()
        .map(|&(e, a, b)| edges.iter().map(|&(f, c, d)| e != f && sees(&m, (a, b), (c, d))).collect())
        .collect();
    (ids, conflict)
}

/// Smallest number of classes in a partition of the edges into sets of
/// pairwise non-seeing edges, by exhaustive set-partition search.
pub fn strong_index(g: &Graph) -> usize {
    let (ids, conflict) = conflict_matrix(g);
    fn go(i: usize, conflict: &[Vec<bool>], classes: &mut Vec<Vec<usize>>, best: &mut usize) {
        if classes.len() >= *best {
            return;
        }
        if i == conflict.len() {
            *best = classes.len();
            return;
        }
        for k in 0..classes.len() {
            if classes[k].iter().all(|&j| !conflict[i][j]) {
                classes[k].push(i);
                go(i + 1, conflict, classes, best);
                classes[k].pop();
            }
        }
        classes.push(vec![i]);
        go(i + 1, conflict, classes, best);
        classes.pop();
    }
    let mut best = ids.len() + 1;
    go(0, &conflict, &mut Vec::new(), &mut best);
    best.min(ids.len())
}

/// Whether every set can get a different element.
pub fn has_sdr(sets: &[ColorSet]) -> bool {
    fn go(i: usize, sets: &[ColorSet], used: u64) -> bool {
        if i == sets.len() {
            return true;
        }
        (1..=64u8).any(|c| sets[i].contains(c) && used & (1 << (c - 1)) == 0 && go(i + 1, sets, used | (1 << (c - 1))))
    }
    go(0, sets, 0)
}

/// Shortest cycle length, by deleting each edge and searching for a path
/// between its endpoints.
pub fn girth(g: &Graph) -> Option<usize> {
    let edges = edge_list(g);
    let n = g.vertex_bound();
    let mut best: Option<usize> = None;
    for &(skip, s, t) in &edges {
        let mut dist = vec![usize::MAX; n];
        dist[s] = 0;
        let mut frontier = vec![s];
        while !frontier.is_empty() && dist[t] == usize::MAX {
            let mut next = Vec::new();
            for &v in &frontier {
                for &(e, a, b) in &edges {
                    if e == skip {
                        continue;
                    }
                    let w = if a == v {
                        b
                    } else if b == v {
                        a
                    } else {
                        continue;
                    };
                    if dist[w] == usize::MAX {
                        dist[w] = dist[v] + 1;
                        next.push(w);
                    }
                }
            }
            frontier = next;
        }
        if dist[t] != usize::MAX {
            let len = dist[t] + 1;
            best = Some(best.map_or(len, |b: usize| b.min(len)));
        }
    }
    best
}

/// Size of a minimum edge cut over all bipartitions into nonempty sides.
pub fn min_cut(g: &Graph) -> Option<usize> {
    let vs: Vec<VertexId> = g.vertices().collect();
    if vs.len() < 2 {
        return None;
    }
    let edges = edge_list(g);
    let mut best = usize::MAX;
    // Fix vs[0] on side one; every other vertex chooses a side.
    for mask in 0u64..(1 << (vs.len() - 1)) - 1 {
        let mut side = vec![false; g.vertex_bound()];
        side[vs[0]] = true;
        for (i, &v) in vs[1..].iter().enumerate() {
            side[v] = mask & (1 << i) != 0;
        }
        let crossing = edges.iter().filter(|&&(_, a, b)| side[a] != side[b]).count();
        best = best.min(crossing);
    }
    Some(best)
}

fn simple_adjacent(m: &[Vec<usize>], a: VertexId, b: VertexId) -> bool {
    m[a][b] > 0
}

/// Whether some cycle of exactly `len` distinct vertices exists.
pub fn has_cycle(g: &Graph, len: usize) -> bool {
    let m = multiplicity(g);
    let vs: Vec<VertexId> = g.vertices().collect();
    fn extend(path: &mut Vec<VertexId>, len: usize, vs: &[VertexId], m: &[Vec<usize>]) -> bool {
        let last = *path.last().unwrap();
        if path.len() == len {
            return simple_adjacent(m, last, path[0]);
        }
        for &w in vs {
            if !path.contains(&w) && simple_adjacent(m, last, w) {
                path.push(w);
                if extend(path, len, vs, m) {
                    return true;
                }
                path.pop();
            }
        }
        false
    }
    vs.iter().any(|&s| extend(&mut vec![s], len, &vs, &m))
}

fn subsets(vs: &[VertexId], k: usize) -> Vec<Vec<VertexId>> {
    if k == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for i in 0..vs.len() {
        for mut rest in subsets(&vs[i + 1..], k - 1) {
            rest.insert(0, vs[i]);
            out.push(rest);
        }
    }
    out
}

/// Whether `K_{a,b}` occurs as a (not necessarily induced) subgraph.
pub fn has_biclique(g: &Graph, a: usize, b: usize) -> bool {
    let m = multiplicity(g);
    let vs: Vec<VertexId> = g.vertices().collect();
    subsets(&vs, a).into_iter().any(|left| {
        let common: Vec<VertexId> = vs
            .iter()
            .copied()
            .filter(|w| !left.contains(w) && left.iter().all(|&u| simple_adjacent(&m, u, *w)))
            .collect();
        common.len() >= b
    })
}

pub fn has_parallel_pair(g: &Graph) -> bool {
    multiplicity(g).iter().flatten().any(|&k| k >= 2)
}
