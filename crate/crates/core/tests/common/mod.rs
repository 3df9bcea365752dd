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

//! Shared builders for integration tests.

#![allow(dead_code)]

pub mod oracle;

use std::collections::VecDeque;

use strongedge_core::generators::{gen_incidence_pg, gen_random_lift};
use strongedge_core::reduce::Anchor;
use strongedge_core::{Graph, VertexId};

/// Breadth-first distance from `s` to `t`, or `usize::MAX` when it exceeds `cap`.
pub fn distance(g: &Graph, s: VertexId, t: VertexId, cap: usize) -> usize {
    let mut d = vec![usize::MAX; g.vertex_bound()];
    d[s] = 0;
    let mut q = VecDeque::from([s]);
    while let Some(v) = q.pop_front() {
        if v == t {
            return d[v];
        }
        if d[v] >= cap {
            continue;
        }
        for (_, w) in g.neighbors(v) {
            if d[w] == usize::MAX {
                d[w] = d[v] + 1;
                q.push_back(w);
            }
        }
    }
    usize::MAX
}

/// Removes `count / 2` edges of `g` whose endpoints lie pairwise at
/// distance at least five, returning the freed endpoints.
fn spread_edges(g: &Graph, count: usize) -> Option<Vec<[VertexId; 2]>> {
    let mut chosen: Vec<[VertexId; 2]> = Vec::new();
    for (_, [p, q]) in g.edges() {
        if chosen.len() * 2 >= count {
            break;
        }
        if chosen.iter().flatten().all(|&r| distance(g, r, p, 5) >= 5 && distance(g, r, q, 5) >= 5) {
            chosen.push([p, q]);
        }
    }
    (chosen.len() * 2 >= count).then_some(chosen)
}

/// Disjoint union of `graphs` minus `removed[i]` in graph `i`, with offsets.
fn union(graphs: &[(&Graph, &[[VertexId; 2]])]) -> (Graph, Vec<usize>) {
    let total = graphs.iter().map(|(g, _)| g.vertex_bound()).sum();
    let mut out = Graph::new(total);
    let mut offsets = Vec::new();
    let mut off = 0;
    for (g, removed) in graphs {
        for (_, [p, q]) in g.edges() {
            if !removed.contains(&[p, q]) {
                out.add_edge(p + off, q + off).unwrap();
            }
        }
        offsets.push(off);
        off += g.vertex_bound();
    }
    (out, offsets)
}

/// Cuts the edges `cuts` out of `outer`, re-pairs the freed far endpoints
/// among themselves and hangs a copy of `pocket` (minus a few spread-out
/// edges) off the freed near endpoints. Both inputs should be 4-regular of
/// girth at least six; so is the result when it exists.
pub fn attach_pocket(outer: &Graph, cuts: &[(VertexId, VertexId)], pocket: &Graph) -> Option<Graph> {
    if cuts.len() % 2 == 1 {
        return None;
    }
    let mut g1 = outer.clone();
    for &(a, b) in cuts {
        let e = g1.edge_between(a, b)?;
        g1.remove_edge(e).ok()?;
    }
    let filler = gen_random_lift(&gen_incidence_pg(3).unwrap(), 10, 7).ok()?;
    let near = spread_edges(pocket, cuts.len())?;
    let far = spread_edges(&filler, cuts.len())?;
    let (mut g, off) = union(&[(&g1, &[]), (pocket, &near), (&filler, &far)]);
    let mut near_ends: Vec<VertexId> = near.iter().flatten().map(|&v| v + off[1]).collect();
    let mut far_ends: Vec<VertexId> = far.iter().flatten().map(|&v| v + off[2]).collect();
    for &(a, b) in cuts {
        g.add_edge(a, near_ends.pop()?).unwrap();
        g.add_edge(b, far_ends.pop()?).unwrap();
    }
    Some(g)
}

/// Index pairs `(hub, kid)` of the seven precolored kids, in order.
pub const A_SLOTS: [(usize, usize); 7] = [(0, 0), (0, 1), (0, 2), (1, 0), (1, 1), (1, 2), (2, 0)];

/// Pocket graph attached so that the precolored kid in slot `i` loses its
/// first `near[i]` children to the pocket.
pub fn pocket_by_counts(outer_lift: usize, near: [usize; 7], seed: u64) -> Option<Graph> {
    let base = gen_incidence_pg(3).unwrap();
    let outer = gen_random_lift(&base, outer_lift, seed).ok()?;
    let pocket = gen_random_lift(&base, 10, seed + 1000).ok()?;
    let anchor = Anchor::new(&outer, 0)?;
    let mut cuts = Vec::new();
    for (i, &(h, k)) in A_SLOTS.iter().enumerate() {
        for j in 0..near[i] {
            cuts.push((anchor.kids[h][k], anchor.grand[h][k][j]));
        }
    }
    attach_pocket(&outer, &cuts, &pocket)
}

/// Shapes of the sparse middle layer.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sparse {
    /// `w₁` and one kid under each of `u`, `v` keep one common far child.
    Shared,
    /// `w₁` and one kid under `u` or `v` keep one common far child.
    TwoEdge,
    /// One kid under `u` and one under `v` keep one common far child.
    OffW,
}

/// Pocket graph whose middle vertices all keep a single far child shared
/// with another middle vertex.
pub fn pocket_sparse(shape: Sparse, seed: u64) -> Option<Graph> {
    [6, 2, 1].into_iter().find_map(|lift| pocket_sparse_in(shape, lift, seed))
}

fn pocket_sparse_in(shape: Sparse, lift: usize, seed: u64) -> Option<Graph> {
    let base = gen_incidence_pg(3).unwrap();
    let outer = gen_random_lift(&base, lift, seed).ok()?;
    let pocket = gen_random_lift(&base, 10, seed + 1000).ok()?;
    let anchor = Anchor::new(&outer, 0)?;
    let kid_under = |h: usize, g: VertexId| (0..3).find(|&k| outer.adjacent(anchor.kids[h][k], g));
    let mut middle: Vec<(usize, usize, VertexId)> = Vec::new();
    match shape {
        Sparse::Shared | Sparse::TwoEdge => {
            for &g in &anchor.grand[2][0] {
                let (ku, kv) = (kid_under(0, g), kid_under(1, g));
                let pick = match (shape, ku, kv) {
                    (Sparse::Shared, Some(a), Some(b)) => vec![(0, a), (1, b)],
                    (Sparse::TwoEdge, Some(a), None) => vec![(0, a)],
                    (Sparse::TwoEdge, None, Some(b)) => vec![(1, b)],
                    _ => continue,
                };
                middle.push((2, 0, g));
                middle.extend(pick.into_iter().map(|(h, k)| (h, k, g)));
                break;
            }
        }
        Sparse::OffW => {
            'outer: for k in 0..3 {
                for &g in &anchor.grand[0][k] {
                    if outer.adjacent(anchor.kids[2][0], g) {
                        continue;
                    }
                    if let Some(b) = kid_under(1, g) {
                        middle.push((0, k, g));
                        middle.push((1, b, g));
                        break 'outer;
                    }
                }
            }
        }
    }
    if middle.is_empty() {
        return None;
    }
    let mut cuts = Vec::new();
    for &(h, k, keep) in &middle {
        let z = anchor.kids[h][k];
        for &c in &anchor.grand[h][k] {
            if c != keep {
                cuts.push((z, c));
            }
        }
    }
    attach_pocket(&outer, &cuts, &pocket)
}
