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

//! Precoloring around an anchor vertex and the sequence colored after it.

use alloc::vec;
use alloc::vec::Vec;

use thiserror::Error;

use super::PALETTE;
use crate::availability::ColoringState;
use crate::coloring::PartialColoring;
use crate::graph::{EdgeId, Graph, VertexId};
use crate::neighborhood::NeighborhoodTable;
use crate::structure::girth;

/// Labels of the two-ball around the anchor `x`.
///
/// `hubs` is `[u, v, w, y]`, the neighbors of `x` in ascending order.
/// `kids[h]` are the other three neighbors of hub `h` ascending, and
/// `grand[h][i]` the other three neighbors of `kids[h][i]` ascending.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Anchor {
    pub x: VertexId,
    pub hubs: [VertexId; 4],
    pub kids: [[VertexId; 3]; 4],
    pub grand: [[[VertexId; 3]; 3]; 4],
}

pub const U: usize = 0;
pub const V: usize = 1;
pub const W: usize = 2;
pub const Y: usize = 3;

fn three_others(g: &Graph, v: VertexId, skip: VertexId) -> Option<[VertexId; 3]> {
    let ns: Vec<VertexId> = g.neighbor_set(v).into_iter().filter(|&w| w != skip).collect();
    ns.try_into().ok()
}

impl Anchor {
    pub fn new(g: &Graph, x: VertexId) -> Option<Anchor> {
        let hubs: [VertexId; 4] = g.neighbor_set(x).try_into().ok()?;
        let mut kids = [[0; 3]; 4];
        let mut grand = [[[0; 3]; 3]; 4];
        for h in 0..4 {
            kids[h] = three_others(g, hubs[h], x)?;
            for i in 0..3 {
                grand[h][i] = three_others(g, kids[h][i], hubs[h])?;
            }
        }
        Some(Anchor { x, hubs, kids, grand })
    }

    /// The seven vertices carrying precolored edges other than `w₂`, `w₃`.
    pub fn a_set(&self) -> [VertexId; 7] {
        let [u, v, w, _] = self.kids;
        [u[0], u[1], u[2], v[0], v[1], v[2], w[0]]
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SequencePlan {
    pub anchor: Anchor,
    pub psi: PartialColoring,
    pub s0: Vec<EdgeId>,
    /// The full sequence in coloring order; ends with `s0`.
    pub s: Vec<EdgeId>,
}

impl SequencePlan {
    /// Edges neither precolored nor in the sequence.
    pub fn uncovered(&self, g: &Graph) -> Vec<EdgeId> {
        let mut in_s = vec![false; g.edge_bound()];
        for &e in &self.s {
            in_s[e] = true;
        }
        g.edge_ids().filter(|&e| !in_s[e] && !self.psi.is_colored(e)).collect()
    }

    pub fn covers_all(&self, g: &Graph) -> bool {
        self.uncovered(g).is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SequenceError {
    #[error("graph is not 4-regular")]
    NotRegular,
    #[error("girth below 6")]
    ShortGirth,
    #[error("no color left for edge {edge}")]
    Stuck { edge: EdgeId, partial: PartialColoring },
}

/// Precolors seven edges around `x` and builds the maximal sequence of
/// edges each seeing at least four later ones.
pub fn build_precolor_and_sequence(g: &Graph, x: VertexId) -> Result<SequencePlan, SequenceError> {
    if g.vertices().any(|v| g.degree(v) != 4) {
        return Err(SequenceError::NotRegular);
    }
    if girth(g).is_some_and(|len| len < 6) {
        return Err(SequenceError::ShortGirth);
    }
    let anchor = Anchor::new(g, x).ok_or(SequenceError::NotRegular)?;
    let e = |a: VertexId, b: VertexId| g.edge_between(a, b).expect("anchor edge");
    let [u, v, w, y] = anchor.hubs;
    let [uk, vk, wk, _] = anchor.kids;
    let mut psi = PartialColoring::with_capacity(PALETTE, g.edge_bound());
    for (a, b, c) in [
        (u, uk[0], 1),
        (v, vk[0], 1),
        (w, wk[0], 1),
        (u, uk[1], 2),
        (v, vk[1], 2),
        (u, uk[2], 3),
        (v, vk[2], 3),
    ] {
        psi.set(e(a, b), c);
    }
    let [w2, w3] = [wk[1], wk[2]];
    let s0 = vec![
        e(w2, anchor.grand[W][1][0]),
        e(w3, anchor.grand[W][2][0]),
        e(w, w2),
        e(w, w3),
        e(x, u),
        e(x, v),
        e(x, y),
        e(x, w),
    ];

    let table = NeighborhoodTable::new(g);
    let mut in_s = vec![false; g.edge_bound()];
    let mut seen = vec![0usize; g.edge_bound()];
    let mut prefix = Vec::new();
    let add = |f: EdgeId, in_s: &mut Vec<bool>, seen: &mut Vec<usize>| {
        in_s[f] = true;
        for &n in table.get(f) {
            seen[n] += 1;
        }
    };
    for &f in &s0 {
        add(f, &mut in_s, &mut seen);
    }
    loop {
        let mut grew = false;
        for f in g.edge_ids() {
            if !in_s[f] && !psi.is_colored(f) && seen[f] >= 4 {
                add(f, &mut in_s, &mut seen);
                prefix.push(f);
                grew = true;
            }
        }
        if !grew {
            break;
        }
    }
    prefix.reverse();
    prefix.extend_from_slice(&s0);
    Ok(SequencePlan { anchor, psi, s0, s: prefix })
}

/// Colors the sequence greedily on top of the precoloring. When the first
/// or second edge of `s0` is blocked, `ww₁` gives up color 1 to it and is
/// recolored.
pub fn extend_sequence(g: &Graph, plan: &SequencePlan) -> Result<PartialColoring, SequenceError> {
    let anchor = &plan.anchor;
    let ww1 = g.edge_between(anchor.hubs[W], anchor.kids[W][0]).expect("anchor edge");
    let (first, second) = (plan.s0[0], plan.s0[1]);
    let mut state = ColoringState::new(g, plan.psi.clone());
    let stuck = |edge: EdgeId, state: ColoringState<'_>| SequenceError::Stuck { edge, partial: state.into_coloring() };
    for &e in &plan.s {
        if state.color_of(e).is_some() || state.assign_min(e).is_some() {
            continue;
        }
        if (e != first && e != second) || state.color_of(ww1) != Some(1) {
            return Err(stuck(e, state));
        }
        state.unassign(ww1);
        if !state.is_available(e, 1) {
            return Err(stuck(e, state));
        }
        state.assign(e, 1);
        if e == first && state.assign_min(second).is_none() {
            return Err(stuck(second, state));
        }
        if state.assign_min(ww1).is_none() {
            return Err(stuck(ww1, state));
        }
    }
    Ok(state.into_coloring())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{families, gen_incidence_pg};
    use crate::verify::verify_strong_coloring;

    #[test]
    fn plan_on_incidence_graph() {
        let g = gen_incidence_pg(3).unwrap();
        let plan = build_precolor_and_sequence(&g, 0).unwrap();
        assert_eq!(plan.psi.colored_count(), 7);
        assert_eq!(&plan.s[plan.s.len() - 8..], &plan.s0[..]);
        let c = extend_sequence(&g, &plan).unwrap();
        assert_eq!(verify_strong_coloring(&g, &c), Ok(()));
        for &e in &plan.s {
            assert!(c.is_colored(e));
        }
    }

    #[test]
    fn rejects_short_girth() {
        let g = families::complete(5);
        assert_eq!(build_precolor_and_sequence(&g, 0), Err(SequenceError::ShortGirth));
        let g = families::cycle(7);
        assert_eq!(build_precolor_and_sequence(&g, 0), Err(SequenceError::NotRegular));
    }
}
