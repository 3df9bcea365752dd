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

//! The near/middle/far vertex partition induced by an unfinished sequence.

use alloc::vec;
use alloc::vec::Vec;

use super::sequence::{SequencePlan, U, V, W, Y};
use crate::graph::{EdgeId, Graph, VertexId};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Region {
    L,
    M,
    R,
}

/// `l` holds the endpoints of the uncovered edges `h`, `m` the anchor, its
/// first three hubs and the outside endpoints of `f = E(l, V − l)`, and `r`
/// everything else.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartitionLmr {
    pub h: Vec<EdgeId>,
    pub l: Vec<VertexId>,
    pub m: Vec<VertexId>,
    pub r: Vec<VertexId>,
    pub f: Vec<EdgeId>,
    pub a: [VertexId; 7],
    pub v_f: Vec<VertexId>,
    pub v_f_prime: Vec<VertexId>,
    region: Vec<Option<Region>>,
}

/// The first structural check that failed, by name.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PartitionViolation {
    pub check: &'static str,
}

impl PartitionLmr {
    pub fn region(&self, v: VertexId) -> Region {
        self.region[v].expect("vertex of the partitioned graph")
    }

    pub fn in_l(&self, v: VertexId) -> bool {
        self.region(v) == Region::L
    }

    pub fn in_m(&self, v: VertexId) -> bool {
        self.region(v) == Region::M
    }

    pub fn in_r(&self, v: VertexId) -> bool {
        self.region(v) == Region::R
    }

    /// Edges at `v` whose other endpoint lies in the same region as `v`.
    pub fn inner_edges(&self, g: &Graph, v: VertexId) -> Vec<EdgeId> {
        let own = self.region(v);
        let mut out: Vec<EdgeId> =
            g.neighbors(v).filter(|&(_, w)| self.region(w) == own).map(|(e, _)| e).collect();
        out.sort_unstable();
        out
    }

    /// Number of edges of `G[R]` at `v` (zero outside `R`).
    pub fn far_degree(&self, g: &Graph, v: VertexId) -> usize {
        if self.in_r(v) {
            self.inner_edges(g, v).len()
        } else {
            0
        }
    }
}

fn fail(check: &'static str) -> Result<PartitionLmr, PartitionViolation> {
    Err(PartitionViolation { check })
}

/// Builds the partition and checks every structural property the coloring
/// cases rely on.
pub fn build_partition(g: &Graph, plan: &SequencePlan) -> Result<PartitionLmr, PartitionViolation> {
    let anchor = &plan.anchor;
    let h = plan.uncovered(g);
    if h.is_empty() {
        return fail("nonempty-h");
    }
    let mut in_l = vec![false; g.vertex_bound()];
    let mut in_h = vec![false; g.edge_bound()];
    for &e in &h {
        in_h[e] = true;
        for v in g.endpoints(e).expect("live edge") {
            in_l[v] = true;
        }
    }
    let mut f = Vec::new();
    let mut v_f = Vec::new();
    let mut v_f_prime = Vec::new();
    for (e, [a, b]) in g.edges() {
        if in_l[a] && in_l[b] && !in_h[e] {
            return fail("induced-h");
        }
        if in_l[a] != in_l[b] {
            f.push(e);
            let (outer, inner) = if in_l[a] { (b, a) } else { (a, b) };
            v_f.push(outer);
            v_f_prime.push(inner);
        }
    }
    v_f.sort_unstable();
    v_f.dedup();
    v_f_prime.sort_unstable();
    v_f_prime.dedup();

    let [u, v, w, _] = anchor.hubs;
    let x = anchor.x;
    let mut region = vec![None; g.vertex_bound()];
    for z in g.vertices() {
        region[z] = Some(if in_l[z] { Region::L } else { Region::R });
    }
    for &z in v_f.iter().chain(&[x, u, v, w]) {
        if in_l[z] {
            return fail("anchor-in-l");
        }
        region[z] = Some(Region::M);
    }
    let collect = |want: Region| -> Vec<VertexId> { g.vertices().filter(|&z| region[z] == Some(want)).collect() };
    let part = PartitionLmr {
        l: collect(Region::L),
        m: collect(Region::M),
        r: collect(Region::R),
        h,
        f,
        a: anchor.a_set(),
        v_f,
        v_f_prime,
        region,
    };
    check(g, plan, part)
}

fn check(g: &Graph, plan: &SequencePlan, part: PartitionLmr) -> Result<PartitionLmr, PartitionViolation> {
    let anchor = &plan.anchor;
    let in_a = |z: VertexId| part.a.contains(&z);
    for &e in &part.f {
        let [a, b] = g.endpoints(e).expect("live edge");
        if in_a(a) == in_a(b) {
            return fail("f-meets-one-a");
        }
    }
    let f_count = |z: VertexId| g.incident(z).iter().filter(|e| part.f.contains(e)).count();
    if part.a.iter().any(|&z| f_count(z) > 2) {
        return fail("a-at-most-two-f");
    }
    if part.l.iter().any(|&z| f_count(z) > 1) {
        return fail("l-at-most-one-f");
    }
    if g.edges().any(|(_, [a, b])| {
        let (ra, rb) = (part.region(a), part.region(b));
        (ra, rb) == (Region::L, Region::R) || (ra, rb) == (Region::R, Region::L)
    }) {
        return fail("l-r-edges");
    }
    let [u, v, w, y] = anchor.hubs;
    let [w2, w3] = [anchor.kids[W][1], anchor.kids[W][2]];
    if !(part.in_r(y) && part.in_r(w2) && part.in_r(w3)) {
        return fail("far-anchors");
    }
    if part.v_f.iter().any(|&z| !in_a(z) && ![anchor.x, u, v, w].contains(&z)) {
        return fail("vf-shape");
    }
    if part.f.len() < 4 {
        return fail("cut-size");
    }
    for hub in [U, V, W] {
        for i in 0..3 {
            let zi = anchor.kids[hub][i];
            let kids = anchor.grand[hub][i];
            let ri = part.region(zi);
            let near: Vec<VertexId> = kids.iter().copied().filter(|&k| part.in_l(k)).collect();
            let far: Vec<VertexId> = kids.iter().copied().filter(|&k| part.in_r(k)).collect();
            if ri == Region::M && (near.is_empty() || far.is_empty()) {
                return fail("branch-1");
            }
            for &k in &kids {
                let rk = part.region(k);
                let in_f = (ri == Region::L) != (rk == Region::L);
                if in_f && !(ri == Region::M && rk == Region::L && part.inner_edges(g, k).len() == 3) {
                    return fail("branch-2");
                }
                let mr = matches!((ri, rk), (Region::M, Region::R) | (Region::R, Region::M));
                if mr && !(ri == Region::M && part.far_degree(g, k) >= 1) {
                    return fail("branch-5");
                }
            }
            if ri == Region::L && near.len() != 3 {
                return fail("branch-3");
            }
            if ri == Region::R && far.len() != 3 {
                return fail("branch-4");
            }
            if ri == Region::M && zi != anchor.kids[W][0] {
                for (j, &a) in far.iter().enumerate() {
                    for &b in &far[j + 1..] {
                        if part.far_degree(g, a) + part.far_degree(g, b) < 3 {
                            return fail("branch-6");
                        }
                    }
                }
            }
        }
    }
    if anchor.kids[Y].iter().any(|&k| !part.in_r(k)) {
        return fail("branch-4");
    }
    Ok(part)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{gen_incidence_pg, gen_random_lift};
    use crate::reduce::sequence::build_precolor_and_sequence;

    #[test]
    fn covered_plans_have_no_partition() {
        let base = gen_incidence_pg(3).unwrap();
        for seed in 0..4 {
            let g = gen_random_lift(&base, 2, seed).unwrap();
            let plan = build_precolor_and_sequence(&g, 0).unwrap();
            assert!(plan.covers_all(&g));
            assert_eq!(build_partition(&g, &plan), Err(PartitionViolation { check: "nonempty-h" }));
        }
    }
}
