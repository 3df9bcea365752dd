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

//! Splitting along an edge cut with at most three edges.

use alloc::vec::Vec;

use super::rename::{rename_colors, RenameSpec};
use super::trace::{FallbackReason, Step};
use super::{merge_into, Solver, SolveError, PALETTE};
use crate::coloring::{Color, ColorSet, PartialColoring};
use crate::graph::{EdgeId, Graph, VertexId};
use crate::structure::EdgeCut;
use crate::verify::verify_complete;

/// One side of the cut plus an apex joined to the side's cut endpoints.
struct Side {
    graph: Graph,
    /// `spokes[s]` joins the apex to the endpoint of cut edge `s`.
    spokes: Vec<EdgeId>,
    ends: Vec<VertexId>,
}

fn build_side(g: &Graph, cut: &EdgeCut, keep: &[bool]) -> Side {
    let mut graph = g.retain_vertices(|v| keep[v]);
    let apex = graph.add_vertex();
    let mut spokes = Vec::new();
    let mut ends = Vec::new();
    for &e in &cut.cut_edges {
        let [a, b] = g.endpoints(e).expect("cut edge");
        let end = if keep[a] { a } else { b };
        spokes.push(graph.add_edge(apex, end).expect("live endpoint"));
        ends.push(end);
    }
    Side { graph, spokes, ends }
}

/// Colors of the edges of `g` (not cut edges) at any of `ends`.
fn colors_at(g: &Graph, c: &PartialColoring, ends: &[VertexId], cut: &[EdgeId]) -> ColorSet {
    let mut out = ColorSet::EMPTY;
    for &v in ends {
        for &e in g.incident(v) {
            if !cut.contains(&e) {
                if let Some(col) = c.get(e) {
                    out.insert(col);
                }
            }
        }
    }
    out
}

pub(crate) fn reduce_small_cut(solver: &mut Solver, g: &Graph, cut: &EdgeCut) -> Result<PartialColoring, SolveError> {
    solver.log(g, Step::SmallCut { cut_edges: cut.cut_edges.clone() });
    let mut in1 = alloc::vec![false; g.vertex_bound()];
    for &v in &cut.side1 {
        in1[v] = true;
    }
    let in2: Vec<bool> = (0..g.vertex_bound()).map(|v| g.contains_vertex(v) && !in1[v]).collect();
    let side1 = build_side(g, cut, &in1);
    let side2 = build_side(g, cut, &in2);
    let c1 = solver.recurse(g, &side1.graph)?;
    let c2 = solver.recurse(g, &side2.graph)?;

    // Spoke s carries color s on both sides; that becomes the color of cut
    // edge s.
    let mut spec1 = RenameSpec::new();
    for (s, &e) in side1.spokes.iter().enumerate() {
        spec1 = spec1.pin(e, (s + 1) as Color);
    }
    let Some(c1) = rename_colors(&c1, &spec1) else {
        return solver.fallback(g, FallbackReason::SmallCut);
    };
    let near = colors_at(g, &c1, &side1.ends, &cut.cut_edges);
    let mut spec2 = RenameSpec::new();
    for (s, &e) in side2.spokes.iter().enumerate() {
        spec2 = spec2.pin(e, (s + 1) as Color);
    }
    for &v in &side2.ends {
        for &e in g.incident(v) {
            if !cut.cut_edges.contains(&e) {
                spec2 = spec2.avoid(e, near);
            }
        }
    }
    let Some(c2) = rename_colors(&c2, &spec2) else {
        return solver.fallback(g, FallbackReason::SmallCut);
    };

    let mut out = PartialColoring::with_capacity(PALETTE, g.edge_bound());
    merge_into(&mut out, &c1, &g.retain_vertices(|v| in1[v]));
    merge_into(&mut out, &c2, &g.retain_vertices(|v| in2[v]));
    for (s, &e) in cut.cut_edges.iter().enumerate() {
        out.set(e, (s + 1) as Color);
    }
    if verify_complete(g, &out).is_err() {
        return solver.fallback_from(g, out, FallbackReason::SmallCut);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::super::solve21;
    use crate::generators::gen_blowup_c5;
    use crate::graph::Graph;
    use crate::verify::verify_complete;

    /// Two copies of a 4-regular graph, each missing one edge, joined by
    /// two edges between the freed endpoints.
    fn joined_pair() -> Graph {
        let base = gen_blowup_c5(2).unwrap();
        let n = base.vertex_count();
        let [a, b] = base.endpoints(0).unwrap();
        let mut g = Graph::new(2 * n);
        for copy in 0..2 {
            for (e, [p, q]) in base.edges() {
                if e != 0 {
                    g.add_edge(p + copy * n, q + copy * n).unwrap();
                }
            }
        }
        g.add_edge(a, a + n).unwrap();
        g.add_edge(b, b + n).unwrap();
        g
    }

    #[test]
    fn two_edge_cut_combines_halves() {
        let g = joined_pair();
        assert_eq!(g.max_degree(), 4);
        let sol = solve21(&g).unwrap();
        assert_eq!(verify_complete(&g, &sol.coloring), Ok(()));
        assert!(sol.trace.tags().contains(&"small-cut"));
        assert_eq!(sol.trace.fallback_count(), 0);
    }
}
