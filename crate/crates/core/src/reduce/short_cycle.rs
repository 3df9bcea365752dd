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

//! Deleting a short-cycle configuration and extending the coloring back.

use alloc::vec::Vec;

use super::complete::complete;
use super::trace::{Completion, FallbackReason, Step};
use super::{merge_into, Solver, SolveError, PALETTE};
use crate::availability::AvailabilityView;
use crate::coloring::PartialColoring;
use crate::graph::{EdgeId, Graph, VertexId};
use crate::structure::{Configuration, ConfigurationKind};

/// Vertices removed before recursing.
fn deleted_vertices(conf: &Configuration) -> Vec<VertexId> {
    let emb = &conf.embedding;
    match conf.kind {
        ConfigurationKind::K24 | ConfigurationKind::K23 => emb[emb.len() - 2..].to_vec(),
        _ => emb.clone(),
    }
}

/// For a `K23` embedding: the fourth neighbor of each of `v1`, `v2`.
fn k23_tails(g: &Graph, emb: &[VertexId]) -> Option<[VertexId; 2]> {
    let tail = |v: VertexId| g.neighbor_set(v).into_iter().find(|w| !emb[..3].contains(w));
    Some([tail(emb[3])?, tail(emb[4])?])
}

fn incident_edges(g: &Graph, vs: &[VertexId]) -> Vec<EdgeId> {
    let mut out: Vec<EdgeId> = vs.iter().flat_map(|&v| g.incident(v).iter().copied()).collect();
    out.sort_unstable();
    out.dedup();
    out
}

/// Whether the tails of a `K23` are distinct and non-adjacent, in which case
/// the helper edge between them is added before recursing.
fn k23_needs_helper(g: &Graph, emb: &[VertexId]) -> Option<[VertexId; 2]> {
    let [z1, z2] = k23_tails(g, emb)?;
    (z1 != z2 && !g.adjacent(z1, z2)).then_some([z1, z2])
}

/// Lower bounds on `|A(e)|` that the reduction argument states for each
/// edge left uncolored by deleting `conf` from a 4-regular graph.
pub fn claimed_minimums(g: &Graph, conf: &Configuration) -> Vec<(EdgeId, usize)> {
    let deleted = deleted_vertices(conf);
    let emb = &conf.embedding;
    let inner = |e: EdgeId| {
        let [a, b] = g.endpoints(e).expect("live edge");
        deleted.contains(&a) && deleted.contains(&b)
    };
    let helper = conf.kind == ConfigurationKind::K23 && k23_needs_helper(g, emb).is_some();
    let mut out = Vec::new();
    for e in incident_edges(g, &deleted) {
        let claim = match conf.kind {
            ConfigurationKind::MultiEdge => 5,
            ConfigurationKind::Triangle | ConfigurationKind::C4 | ConfigurationKind::C5 => {
                if inner(e) {
                    9
                } else {
                    6
                }
            }
            ConfigurationKind::K33 => {
                if inner(e) {
                    15
                } else {
                    9
                }
            }
            ConfigurationKind::K24 => 7,
            ConfigurationKind::K23 => {
                let [a, b] = g.endpoints(e).expect("live edge");
                let to_u = emb[..3].contains(&a) || emb[..3].contains(&b);
                match (to_u, helper) {
                    (true, false) => 6,
                    (true, true) => 5,
                    (false, false) => 4,
                    (false, true) => continue,
                }
            }
        };
        out.push((e, claim));
    }
    out
}

pub(crate) fn reduce_short_cycle(
    solver: &mut Solver,
    g: &Graph,
    conf: &Configuration,
) -> Result<PartialColoring, SolveError> {
    let idx = solver.trace.entries.len();
    solver.log(
        g,
        Step::ShortCycle { kind: conf.kind, embedding: conf.embedding.clone(), strategy: Completion::Failed },
    );
    let deleted = deleted_vertices(conf);
    let mut sub = g.retain_vertices(|v| !deleted.contains(&v));
    let mut targets = incident_edges(g, &deleted);
    let mut seed = None;
    if conf.kind == ConfigurationKind::K23 {
        if let Some([z1, z2]) = k23_needs_helper(g, &conf.embedding) {
            let helper = sub.add_edge(z1, z2).expect("live vertices");
            let e1 = g.edge_between(conf.embedding[3], z1).expect("tail edge");
            let e2 = g.edge_between(conf.embedding[4], z2).expect("tail edge");
            seed = Some((helper, e1, e2));
        }
    }
    let c = solver.recurse(g, &sub)?;
    let mut base = PartialColoring::with_capacity(PALETTE, g.edge_bound());
    merge_into(&mut base, &c, g);

    if let Some((helper, e1, e2)) = seed {
        // The two tail edges take the color of the helper edge when they can.
        let gamma = c.get(helper).expect("helper colored");
        let view = AvailabilityView::new(g, &base);
        let ok1 = view.available(e1).contains(gamma);
        let ok2 = view.available(e2).contains(gamma);
        if ok1 && ok2 {
            base.set(e1, gamma);
            base.set(e2, gamma);
            targets.retain(|&e| e != e1 && e != e2);
        } else {
            for (e, ok) in [(e1, ok1), (e2, ok2)] {
                if !ok {
                    solver.log(g, Step::CountCheck { context: "k23-tail-seed", edge: e, claimed: 1, actual: 0 });
                }
            }
        }
    }

    let view = AvailabilityView::new(g, &base);
    for (e, claimed) in claimed_minimums(g, conf) {
        if !base.is_colored(e) {
            let actual = view.available(e).len();
            if actual < claimed {
                solver.log(g, Step::CountCheck { context: conf.kind.name(), edge: e, claimed, actual });
            }
        }
    }

    let (done, strategy) = complete(g, base, &targets, &mut |s| solver.log(g, s));
    if let Step::ShortCycle { strategy: slot, .. } = &mut solver.trace.entries[idx].step {
        *slot = strategy;
    }
    match done {
        Some(out) => Ok(out),
        None => solver.fallback(g, FallbackReason::ShortCycle(conf.kind)),
    }
}
