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

//! Coloring the near and far sides of a partition separately and joining
//! them through the middle layer.
//!
//! Each case builds a near graph `G_L` and a far graph `G_R` (the induced
//! sides plus a few helper edges and possibly an apex), colors both
//! recursively, renames the far coloring so a handful of anchor edges agree
//! with the near coloring, and then colors the middle edges in a fixed
//! order.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use super::partition::{PartitionLmr, Region};
use super::rename::{rename_colors, RenameSpec};
use super::sequence::{Anchor, SequencePlan, U, V, W, Y};
use super::trace::{CaseLabel, FallbackReason, Step};
use super::{Solver, SolveError};
use crate::availability::ColoringState;
use crate::coloring::{Color, PartialColoring};
use crate::graph::{EdgeId, Graph, VertexId};
use crate::verify::verify_complete;

enum Fail {
    Solve(SolveError),
    Case { detail: String, partial: Option<PartialColoring> },
}

impl From<SolveError> for Fail {
    fn from(e: SolveError) -> Self {
        Fail::Solve(e)
    }
}

fn fail<T>(detail: impl Into<String>) -> Result<T, Fail> {
    Err(Fail::Case { detail: detail.into(), partial: None })
}

type CaseResult = Result<PartialColoring, Fail>;

/// Mutable copy of the anchor labels; cases permute it freely.
#[derive(Clone)]
struct Frame {
    x: VertexId,
    hubs: [VertexId; 4],
    kids: [[VertexId; 3]; 4],
    grand: [[[VertexId; 3]; 3]; 4],
}

impl Frame {
    fn new(a: &Anchor) -> Frame {
        Frame { x: a.x, hubs: a.hubs, kids: a.kids, grand: a.grand }
    }

    fn swap_hubs(&mut self, a: usize, b: usize) {
        self.hubs.swap(a, b);
        self.kids.swap(a, b);
        self.grand.swap(a, b);
    }

    /// Puts the kids of hub `h` in the order `order` (indices into the
    /// current order).
    fn order_kids(&mut self, h: usize, order: [usize; 3]) {
        let kids = self.kids[h];
        let grand = self.grand[h];
        for (slot, &i) in order.iter().enumerate() {
            self.kids[h][slot] = kids[i];
            self.grand[h][slot] = grand[i];
        }
    }

    fn kid_first(&mut self, h: usize, i: usize) {
        let rest: Vec<usize> = (0..3).filter(|&j| j != i).collect();
        self.order_kids(h, [i, rest[0], rest[1]]);
    }

    /// Orders the children of `kids[h][i]`: first a near child, last the
    /// far child with the most far edges, and `mid` in between.
    fn standard_children(&mut self, g: &Graph, part: &PartitionLmr, h: usize, i: usize) -> Result<(), Fail> {
        let ch = self.grand[h][i];
        let Some(near) = ch.iter().copied().filter(|&c| part.in_l(c)).min() else {
            return fail("middle vertex without near child");
        };
        let Some(far) = ch
            .iter()
            .copied()
            .filter(|&c| part.in_r(c))
            .max_by_key(|&c| (part.far_degree(g, c), core::cmp::Reverse(c)))
        else {
            return fail("middle vertex without far child");
        };
        let mid = ch.iter().copied().find(|&c| c != near && c != far).expect("three children");
        self.grand[h][i] = [near, mid, far];
        Ok(())
    }

    /// Orders the children of `kids[h][i]` with `last` in the third slot and
    /// a near child first.
    fn children_ending_with(&mut self, part: &PartitionLmr, h: usize, i: usize, last: VertexId) -> Result<(), Fail> {
        let ch = self.grand[h][i];
        if !ch.contains(&last) {
            return fail("expected shared child missing");
        }
        let rest: Vec<VertexId> = ch.iter().copied().filter(|&c| c != last).collect();
        let (a, b) = if part.in_l(rest[0]) || !part.in_l(rest[1]) { (rest[0], rest[1]) } else { (rest[1], rest[0]) };
        self.grand[h][i] = [a, b, last];
        Ok(())
    }
}

#[derive(Clone, Copy)]
enum Node {
    V(VertexId),
    Apex,
}

struct SideGraph {
    graph: Graph,
    helpers: Vec<EdgeId>,
}

fn side_graph(g: &Graph, part: &PartitionLmr, region: Region, helpers: &[(Node, Node)]) -> Result<SideGraph, Fail> {
    let mut graph = g.retain_vertices(|v| part.region(v) == region);
    let apex = helpers
        .iter()
        .any(|&(a, b)| matches!(a, Node::Apex) || matches!(b, Node::Apex))
        .then(|| graph.add_vertex());
    let resolve = |n: Node| match n {
        Node::V(v) => v,
        Node::Apex => apex.expect("apex added"),
    };
    let mut ids = Vec::new();
    for &(a, b) in helpers {
        match graph.add_edge(resolve(a), resolve(b)) {
            Ok(e) => ids.push(e),
            Err(_) => return fail("helper edge endpoint outside its side"),
        }
    }
    if graph.max_degree() > 4 {
        return fail("side graph exceeds degree four");
    }
    Ok(SideGraph { graph, helpers: ids })
}

struct Sides {
    left: SideGraph,
    right: SideGraph,
    cl: PartialColoring,
    cr: PartialColoring,
}

fn color_sides(
    solver: &mut Solver,
    g: &Graph,
    part: &PartitionLmr,
    left: &[(Node, Node)],
    right: &[(Node, Node)],
) -> Result<Sides, Fail> {
    let left = side_graph(g, part, Region::L, left)?;
    let right = side_graph(g, part, Region::R, right)?;
    let cl = solver.recurse(g, &left.graph)?;
    let cr = solver.recurse(g, &right.graph)?;
    Ok(Sides { left, right, cl, cr })
}

fn color_of(c: &PartialColoring, e: EdgeId) -> Result<Color, Fail> {
    match c.get(e) {
        Some(col) => Ok(col),
        None => fail("side coloring misses an edge"),
    }
}

fn renamed(c: &PartialColoring, spec: &RenameSpec) -> Result<PartialColoring, Fail> {
    match rename_colors(c, spec) {
        Some(out) => Ok(out),
        None => fail("no renaming meets the anchor colors"),
    }
}

/// The global coloring being assembled for one case.
struct Run<'g> {
    g: &'g Graph,
    state: ColoringState<'g>,
}

impl<'g> Run<'g> {
    /// Copies the near coloring onto `G[L]` and the far one onto `G[R]`.
    fn new(g: &'g Graph, part: &PartitionLmr, cl: &PartialColoring, cr: &PartialColoring) -> Result<Run<'g>, Fail> {
        let mut base = PartialColoring::with_capacity(super::PALETTE, g.edge_bound());
        for (e, [a, b]) in g.edges() {
            match (part.region(a), part.region(b)) {
                (Region::L, Region::L) => base.set(e, color_of(cl, e)?),
                (Region::R, Region::R) => base.set(e, color_of(cr, e)?),
                _ => {}
            }
        }
        Ok(Run { g, state: ColoringState::new(g, base) })
    }

    fn err<T>(&self, detail: String) -> Result<T, Fail> {
        Err(Fail::Case { detail, partial: Some(self.state.coloring().clone()) })
    }

    fn edge(&self, a: VertexId, b: VertexId) -> Result<EdgeId, Fail> {
        match self.g.edge_between(a, b) {
            Some(e) => Ok(e),
            None => self.err(format!("expected edge {a}-{b} missing")),
        }
    }

    fn fix(&mut self, a: VertexId, b: VertexId, c: Color) -> Result<(), Fail> {
        let e = self.edge(a, b)?;
        match self.state.color_of(e) {
            Some(old) if old == c => Ok(()),
            Some(old) => self.err(format!("edge {e} already has {old}, wanted {c}")),
            None if self.state.is_available(e, c) => {
                self.state.assign(e, c);
                Ok(())
            }
            None => self.err(format!("color {c} unavailable at edge {e}")),
        }
    }

    fn fill(&mut self, a: VertexId, b: VertexId) -> Result<(), Fail> {
        let e = self.edge(a, b)?;
        if self.state.color_of(e).is_none() && self.state.assign_min(e).is_none() {
            return self.err(format!("no color left for edge {e} ({a}-{b})"));
        }
        Ok(())
    }

    fn fill_all(&mut self, pairs: &[(VertexId, VertexId)]) -> Result<(), Fail> {
        pairs.iter().try_for_each(|&(a, b)| self.fill(a, b))
    }

    /// Colors every uncolored edge at the kids of hub `h`, then the hub edges.
    fn fill_branch(&mut self, fr: &Frame, h: usize) -> Result<(), Fail> {
        for i in 0..3 {
            self.fill_grand(fr, h, i)?;
        }
        for i in 0..3 {
            self.fill(fr.hubs[h], fr.kids[h][i])?;
        }
        Ok(())
    }

    fn fill_grand(&mut self, fr: &Frame, h: usize, i: usize) -> Result<(), Fail> {
        for j in 0..3 {
            self.fill(fr.kids[h][i], fr.grand[h][i][j])?;
        }
        Ok(())
    }

    fn color_at(&self, v: VertexId, c: Color) -> bool {
        self.g.incident(v).iter().any(|&e| self.state.color_of(e) == Some(c))
    }

    fn finish(mut self) -> CaseResult {
        let rest: Vec<EdgeId> = self.g.edge_ids().filter(|&e| self.state.color_of(e).is_none()).collect();
        for e in rest {
            if self.state.assign_min(e).is_none() {
                return self.err(format!("no color left for leftover edge {e}"));
            }
        }
        let out = self.state.into_coloring();
        match verify_complete(self.g, &out) {
            Ok(()) => Ok(out),
            Err(v) => Err(Fail::Case { detail: format!("{v:?}"), partial: None }),
        }
    }
}

fn hub_edge_colors(cl: &PartialColoring, edges: &[EdgeId]) -> Result<[Color; 3], Fail> {
    if edges.len() != 3 {
        return fail("near vertex without three near edges");
    }
    Ok([color_of(cl, edges[0])?, color_of(cl, edges[1])?, color_of(cl, edges[2])?])
}

/// An `F` edge other than `skip`, returned as its endpoint in `L`.
fn other_f_end(g: &Graph, part: &PartitionLmr, skip: EdgeId) -> Result<VertexId, Fail> {
    let Some(&e) = part.f.iter().find(|&&e| e != skip) else {
        return fail("cut has a single edge");
    };
    let [a, b] = g.endpoints(e).expect("live edge");
    Ok(if part.in_l(a) { a } else { b })
}

/// Up to three far edges at `first` then `second`.
fn three_far_edges(g: &Graph, part: &PartitionLmr, first: VertexId, second: VertexId) -> Result<Vec<EdgeId>, Fail> {
    let mut out = part.inner_edges(g, first);
    if part.in_r(second) {
        out.extend(part.inner_edges(g, second));
    }
    out.dedup();
    if out.len() < 3 {
        return fail("fewer than three far edges at the far children");
    }
    out.truncate(3);
    Ok(out)
}

fn others(h: usize) -> [usize; 2] {
    match h {
        U => [V, W],
        V => [U, W],
        _ => [U, V],
    }
}

/// A hub with one child in `L`, one in `R` and none in `M`.
fn split_branch(solver: &mut Solver, g: &Graph, part: &PartitionLmr, mut fr: Frame, h: usize) -> CaseResult {
    let kids = fr.kids[h];
    let li = (0..3).find(|&i| part.in_l(kids[i])).expect("near kid");
    let ri = (0..3).find(|&i| part.in_r(kids[i])).expect("far kid");
    let mi = 3 - li - ri;
    fr.order_kids(h, [li, mi, ri]);
    let (x, z, y) = (fr.x, fr.hubs[h], fr.hubs[Y]);
    let [z1, z2, z3] = fr.kids[h];
    let a2 = other_f_end(g, part, g.edge_between(z, z1).expect("hub edge"))?;
    let sides = color_sides(solver, g, part, &[(Node::V(z1), Node::V(a2))], &[(Node::V(z3), Node::V(y))])?;
    let cs = hub_edge_colors(&sides.cl, &part.inner_edges(g, z1))?;
    let d = color_of(&sides.cl, sides.left.helpers[0])?;
    let far = part.inner_edges(g, z3);
    if far.len() != 3 {
        return fail("far kid without three far edges");
    }
    let y1 = g.edge_between(y, fr.kids[Y][0]).expect("anchor edge");
    let spec = RenameSpec::new().pin(far[0], cs[0]).pin(far[1], cs[1]).pin(far[2], cs[2]).pin(y1, d);
    let cr = renamed(&sides.cr, &spec)?;
    let mut run = Run::new(g, part, &sides.cl, &cr)?;
    let [p, q] = others(h);
    run.fill_branch(&fr, p)?;
    run.fill_branch(&fr, q)?;
    let (zp, zq) = (fr.hubs[p], fr.hubs[q]);
    if run.color_at(z2, d) {
        run.fill_all(&[(x, zp), (x, zq), (x, y), (z, z1), (z, z3), (z, z2), (x, z)])?;
    } else {
        run.fix(z, z1, d)?;
        run.fill_all(&[(x, zp), (x, zq), (x, y), (z, z3), (z, z2), (x, z)])?;
    }
    run.finish()
}

/// `w₁` in the middle, its far child `w₁₃` with a single far edge and two
/// more middle neighbors, one under `u` and one under `v`.
fn sparse_shared(solver: &mut Solver, g: &Graph, part: &PartitionLmr, mut fr: Frame) -> CaseResult {
    let w13 = fr.grand[W][0][2];
    let w1 = fr.kids[W][0];
    let mids: Vec<VertexId> = g.neighbor_set(w13).into_iter().filter(|&n| n != w1 && part.in_m(n)).collect();
    let under = |fr: &Frame, h: usize| mids.iter().find_map(|m| fr.kids[h].iter().position(|k| k == m));
    let (Some(iu), Some(iv)) = (under(&fr, U), under(&fr, V)) else {
        return fail("shared far child not adjacent to both side branches");
    };
    fr.kid_first(U, iu);
    fr.kid_first(V, iv);
    fr.children_ending_with(part, U, 0, w13)?;
    fr.children_ending_with(part, V, 0, w13)?;
    let (x, u, v, w, y) = (fr.x, fr.hubs[U], fr.hubs[V], fr.hubs[W], fr.hubs[Y]);
    let [u1, u2, u3] = fr.kids[U];
    let [v1, v2, v3] = fr.kids[V];
    let [_, w2, w3] = fr.kids[W];
    let [u11, u12, u13] = fr.grand[U][0];
    let [v11, v12, v13] = fr.grand[V][0];
    let [w11, w12, _] = fr.grand[W][0];
    if !part.in_l(u11) || !part.in_l(w11) {
        return fail("near children not in L");
    }
    let u_prime = g
        .neighbor_set(u11)
        .into_iter()
        .find(|&n| part.in_l(n) && n != w11 && n != w12)
        .map_or_else(|| fail("no near edge at u11 away from w11, w12"), Ok)?;
    let sides = color_sides(
        solver,
        g,
        part,
        &[(Node::V(w11), Node::V(u11))],
        &[(Node::V(w13), Node::V(w2)), (Node::V(w13), Node::V(w3)), (Node::V(w13), Node::V(y))],
    )?;
    let cs = hub_edge_colors(&sides.cl, &part.inner_edges(g, w11))?;
    let d = color_of(&sides.cl, g.edge_between(u11, u_prime).expect("near edge"))?;
    let far = part.inner_edges(g, w13);
    if far.len() != 1 {
        return fail("shared far child without exactly one far edge");
    }
    let hs = &sides.right.helpers;
    let spec = RenameSpec::new().pin(far[0], cs[0]).pin(hs[0], cs[1]).pin(hs[1], cs[2]).pin(hs[2], d);
    let cr = renamed(&sides.cr, &spec)?;
    let mut run = Run::new(g, part, &sides.cl, &cr)?;
    run.fix(x, y, d)?;
    run.fix(w, w2, cs[1])?;
    run.fix(w, w3, cs[2])?;
    let d_near_w12 = run.color_at(w12, d);
    if !d_near_w12 {
        run.fix(w1, w13, d)?;
    }
    for (h, i) in [(U, 1), (U, 2), (V, 1), (V, 2)] {
        run.fill_grand(&fr, h, i)?;
    }
    let mut order = alloc::vec![
        (u1, u11),
        (u1, u12),
        (u, u1),
        (u, u2),
        (u, u3),
        (x, u),
        (v1, v11),
        (v1, v12),
        (v, v2),
        (v, v3),
        (x, v),
        (v, v1),
        (v1, v13),
        (u1, u13),
        (x, w),
        (fr.kids[W][0], w11),
        (w1, w12),
        (w1, w13),
        (w, w1),
    ];
    if !d_near_w12 {
        order.retain(|&p| p != (w1, w13));
    }
    run.fill_all(&order)?;
    run.finish()
}

/// `w₁` in the middle, `w₁₃` with two far edges and one more middle
/// neighbor.
fn sparse_two_edge(solver: &mut Solver, g: &Graph, part: &PartitionLmr, mut fr: Frame) -> CaseResult {
    let w1 = fr.kids[W][0];
    let [w11, w12, w13] = fr.grand[W][0];
    if !part.in_l(w12) {
        return fail("w12 not in L");
    }
    let mids: Vec<VertexId> = g.neighbor_set(w13).into_iter().filter(|&n| n != w1 && part.in_m(n)).collect();
    let found = [U, V].into_iter().find_map(|h| {
        mids.iter().find_map(|m| fr.kids[h].iter().position(|k| k == m)).map(|i| (h, i))
    });
    let Some((h, i)) = found else {
        return fail("far child of w1 has no middle neighbor under u or v");
    };
    if h == V {
        fr.swap_hubs(U, V);
    }
    fr.kid_first(U, i);
    fr.children_ending_with(part, U, 0, w13)?;
    let (x, u, v, w, y) = (fr.x, fr.hubs[U], fr.hubs[V], fr.hubs[W], fr.hubs[Y]);
    let u1 = fr.kids[U][0];
    let [_, w2, w3] = fr.kids[W];
    let u13 = fr.grand[U][0][2];
    let sides = color_sides(
        solver,
        g,
        part,
        &[(Node::V(w11), Node::V(w12))],
        &[(Node::V(w13), Node::V(w2)), (Node::V(w13), Node::V(w3))],
    )?;
    let cs = hub_edge_colors(&sides.cl, &part.inner_edges(g, w11))?;
    let Some(&d_edge) = part.inner_edges(g, w12).first() else {
        return fail("w12 without near edges");
    };
    let d = color_of(&sides.cl, d_edge)?;
    let far = part.inner_edges(g, w13);
    if far.len() != 2 {
        return fail("w13 without exactly two far edges");
    }
    let w3w31 = g.edge_between(w3, fr.grand[W][2][0]).expect("anchor edge");
    let spec = RenameSpec::new()
        .pin(far[0], cs[0])
        .pin(far[1], cs[1])
        .pin(sides.right.helpers[0], cs[2])
        .pin(w3w31, d);
    let cr = renamed(&sides.cr, &spec)?;
    let mut run = Run::new(g, part, &sides.cl, &cr)?;
    run.fix(w, w2, cs[2])?;
    for hub in [U, V] {
        for k in 0..3 {
            for j in 0..3 {
                let (a, b) = (fr.kids[hub][k], fr.grand[hub][k][j]);
                if (a, b) != (u1, u13) {
                    run.fill(a, b)?;
                }
            }
        }
    }
    for hub in [U, V] {
        for k in 0..3 {
            run.fill(fr.hubs[hub], fr.kids[hub][k])?;
        }
    }
    run.fill_all(&[
        (x, v),
        (x, y),
        (x, u),
        (u1, u13),
        (x, w),
        (w, w3),
        (w1, w11),
        (w1, w12),
        (w1, w13),
        (w, w1),
    ])?;
    run.finish()
}

/// No dense middle vertex and `w₁` on the far side.
fn sparse_off_w(solver: &mut Solver, g: &Graph, part: &PartitionLmr, mut fr: Frame) -> CaseResult {
    let found = [U, V].into_iter().find_map(|h| (0..3).find(|&i| part.in_m(fr.kids[h][i])).map(|i| (h, i)));
    let Some((h, i)) = found else {
        return fail("no middle vertex under u or v");
    };
    if h == V {
        fr.swap_hubs(U, V);
    }
    fr.kid_first(U, i);
    fr.standard_children(g, part, U, 0)?;
    let [u11, u12, u13] = fr.grand[U][0];
    let u1 = fr.kids[U][0];
    if !part.in_l(u12) {
        return fail("u12 not in L");
    }
    let mids: Vec<VertexId> = g.neighbor_set(u13).into_iter().filter(|&n| n != u1 && part.in_m(n)).collect();
    let Some(iv) = mids.iter().find_map(|m| fr.kids[V].iter().position(|k| k == m)) else {
        return fail("u13 has no middle neighbor under v");
    };
    fr.kid_first(V, iv);
    fr.children_ending_with(part, V, 0, u13)?;
    let [v11, v12, _] = fr.grand[V][0];
    if !part.in_l(v11) || !part.in_l(v12) {
        return fail("v1 near children not in L");
    }
    let (x, u, v, w, y) = (fr.x, fr.hubs[U], fr.hubs[V], fr.hubs[W], fr.hubs[Y]);
    let [w1, w2, w3] = fr.kids[W];
    let [v1, v2, v3] = fr.kids[V];
    let [_, u2, u3] = fr.kids[U];
    let sides = color_sides(
        solver,
        g,
        part,
        &[(Node::V(u11), Node::V(u12))],
        &[
            (Node::V(w1), Node::Apex),
            (Node::V(w2), Node::Apex),
            (Node::V(w3), Node::Apex),
            (Node::V(u13), Node::Apex),
            (Node::V(u13), Node::V(y)),
        ],
    )?;
    let cs = hub_edge_colors(&sides.cl, &part.inner_edges(g, u11))?;
    let d = color_of(&sides.cl, sides.left.helpers[0])?;
    let far = part.inner_edges(g, u13);
    if far.len() != 2 {
        return fail("u13 without exactly two far edges");
    }
    let hs = sides.right.helpers.clone();
    // Colors of the near graph at v11 and v12.
    let mut seen_v = Vec::new();
    for n in [v11, v12] {
        for e in part.inner_edges(g, n) {
            seen_v.push(color_of(&sides.cl, e)?);
        }
    }
    let missing = cs.iter().copied().find(|c| !seen_v.contains(c));
    let (pair, third) = match missing {
        Some(m) => {
            let rest: Vec<Color> = cs.iter().copied().filter(|&c| c != m).collect();
            ([rest[0], rest[1]], m)
        }
        None => ([cs[0], cs[1]], cs[2]),
    };
    let spec = RenameSpec::new().pin(far[0], pair[0]).pin(far[1], pair[1]).pin(hs[4], third).pin(hs[3], d);
    let cr = renamed(&sides.cr, &spec)?;
    let ds = [color_of(&cr, hs[0])?, color_of(&cr, hs[1])?, color_of(&cr, hs[2])?];
    let mut run = Run::new(g, part, &sides.cl, &cr)?;
    if missing.is_some() {
        run.fix(v1, u13, third)?;
        run.fix(x, y, third)?;
    } else {
        run.fix(x, y, third)?;
        run.fix(x, w, d)?;
        run.fix(u1, u13, d)?;
    }
    for (k, wk) in [w1, w2, w3].into_iter().enumerate() {
        run.fix(w, wk, ds[k])?;
    }
    for (hub, k) in [(U, 1), (U, 2), (V, 1), (V, 2)] {
        run.fill_grand(&fr, hub, k)?;
    }
    if missing.is_some() {
        run.fill_all(&[
            (v1, v11),
            (v1, v12),
            (v, v1),
            (v, v2),
            (v, v3),
            (x, v),
            (x, w),
            (x, u),
            (u, u2),
            (u, u3),
            (u1, u11),
            (u1, u12),
            (u1, u13),
            (u, u1),
        ])?;
    } else {
        run.fill_all(&[
            (u, u2),
            (u, u3),
            (u1, u11),
            (u1, u12),
            (x, u),
            (x, v),
            (v, v2),
            (v, v3),
            (v1, v11),
            (v1, v12),
            (v1, u13),
            (v, v1),
            (u, u1),
        ])?;
    }
    run.finish()
}

/// Dense middle vertex `kids[h][i]` with a sibling on the far side.
fn dense_sibling_far(solver: &mut Solver, g: &Graph, part: &PartitionLmr, mut fr: Frame, h: usize, i: usize) -> CaseResult {
    let kids = fr.kids[h];
    let far_sib = (0..3).find(|&j| j != i && part.in_r(kids[j])).expect("far sibling");
    let mid = 3 - i - far_sib;
    fr.order_kids(h, [i, mid, far_sib]);
    fr.standard_children(g, part, h, 0)?;
    let (x, z, y) = (fr.x, fr.hubs[h], fr.hubs[Y]);
    let [z1, z2, z3] = fr.kids[h];
    let [z11, z12, z13] = fr.grand[h][0];
    let a2 = other_f_end(g, part, g.edge_between(z1, z11).expect("kid edge"))?;
    let mut right = alloc::vec![(Node::V(z13), Node::V(z3))];
    if part.far_degree(g, z13) < 3 {
        right.insert(0, (Node::V(z13), Node::V(z12)));
    }
    let sides = color_sides(solver, g, part, &[(Node::V(z11), Node::V(a2))], &right)?;
    let cs = hub_edge_colors(&sides.cl, &part.inner_edges(g, z11))?;
    let d = color_of(&sides.cl, sides.left.helpers[0])?;
    let far = three_far_edges(g, part, z13, z12)?;
    let base = RenameSpec::new().pin(far[0], cs[0]).pin(far[1], cs[1]).pin(far[2], cs[2]);
    let cr = part
        .inner_edges(g, z3)
        .into_iter()
        .find_map(|e| rename_colors(&sides.cr, &base.clone().pin(e, d)))
        .map_or_else(|| fail("no far edge at z3 can take d"), Ok)?;
    let mut run = Run::new(g, part, &sides.cl, &cr)?;
    let [p, q] = others(h);
    run.fill_branch(&fr, p)?;
    run.fill_branch(&fr, q)?;
    run.fill_grand(&fr, h, 1)?;
    let (zp, zq) = (fr.hubs[p], fr.hubs[q]);
    if run.color_at(z12, d) {
        run.fill_all(&[(x, zp), (x, zq), (x, y), (x, z), (z, z2), (z, z3), (z1, z11), (z1, z12), (z1, z13), (z, z1)])?;
    } else {
        run.fix(z1, z11, d)?;
        run.fill_all(&[(x, zp), (x, zq), (x, y), (x, z), (z, z2), (z, z3), (z1, z12), (z1, z13), (z, z1)])?;
    }
    run.finish()
}

/// Dense middle vertex with no far sibling; it becomes `u₁`.
fn dense(solver: &mut Solver, g: &Graph, part: &PartitionLmr, mut fr: Frame, h: usize, i: usize) -> Result<(CaseLabel, CaseResult), Fail> {
    if h == W {
        return fail("dense vertex under w without far sibling");
    }
    if h == V {
        fr.swap_hubs(U, V);
    }
    fr.kid_first(U, i);
    fr.standard_children(g, part, U, 0)?;
    let sibs = [fr.kids[U][1], fr.kids[U][2]];
    if let Some(j) = sibs.iter().position(|&s| part.in_l(s)) {
        solver.log(g, Step::Collaborative { case: CaseLabel::DenseSiblingNear });
        if j == 1 {
            fr.order_kids(U, [0, 2, 1]);
        }
        return Ok((CaseLabel::DenseSiblingNear, dense_sibling_near(solver, g, part, fr)));
    }
    if !sibs.iter().all(|&s| part.in_m(s)) {
        return fail("sibling of dense vertex outside L and M");
    }
    for k in 1..3 {
        fr.standard_children(g, part, U, k)?;
    }
    let second_near: Vec<bool> = (0..3).map(|k| part.in_l(fr.grand[U][k][1])).collect();
    let fi = (0..3).find(|&k| second_near[k]);
    let ri = (0..3).find(|&k| !second_near[k]);
    let label = match (fi, ri) {
        (Some(a), Some(b)) => {
            fr.order_kids(U, [a, b, 3 - a - b]);
            CaseLabel::DenseMixed
        }
        (Some(_), None) => CaseLabel::DenseAllNear,
        _ => CaseLabel::DenseAllFar,
    };
    solver.log(g, Step::Collaborative { case: label });
    let out = match label {
        CaseLabel::DenseMixed => dense_mixed(solver, g, part, fr),
        _ => dense_uniform(solver, g, part, fr, label == CaseLabel::DenseAllNear),
    };
    Ok((label, out))
}

fn fill_side_branches(run: &mut Run<'_>, fr: &Frame) -> Result<(), Fail> {
    for hub in [V, W] {
        for k in 0..3 {
            run.fill_grand(fr, hub, k)?;
        }
    }
    for hub in [V, W] {
        for k in 0..3 {
            run.fill(fr.hubs[hub], fr.kids[hub][k])?;
        }
    }
    Ok(())
}

fn dense_sibling_near(solver: &mut Solver, g: &Graph, part: &PartitionLmr, fr: Frame) -> CaseResult {
    let (x, u, v, w, y) = (fr.x, fr.hubs[U], fr.hubs[V], fr.hubs[W], fr.hubs[Y]);
    let [u1, u2, u3] = fr.kids[U];
    let [u11, u12, u13] = fr.grand[U][0];
    let mut right = alloc::vec![(Node::V(u13), Node::V(y))];
    if part.far_degree(g, u13) < 3 {
        right.insert(0, (Node::V(u13), Node::V(u12)));
    }
    let sides = color_sides(solver, g, part, &[(Node::V(u11), Node::V(u2))], &right)?;
    let cs = hub_edge_colors(&sides.cl, &part.inner_edges(g, u11))?;
    let d = color_of(&sides.cl, g.edge_between(u2, fr.grand[U][1][0]).expect("kid edge"))?;
    let far = three_far_edges(g, part, u13, u12)?;
    let uy = *sides.right.helpers.last().expect("helper");
    let spec = RenameSpec::new().pin(far[0], cs[0]).pin(far[1], cs[1]).pin(far[2], cs[2]).pin(uy, d);
    let cr = renamed(&sides.cr, &spec)?;
    let mut run = Run::new(g, part, &sides.cl, &cr)?;
    for hub in [V, W] {
        for k in 0..3 {
            run.fill_grand(&fr, hub, k)?;
        }
    }
    run.fill_grand(&fr, U, 2)?;
    for hub in [V, W] {
        for k in 0..3 {
            run.fill(fr.hubs[hub], fr.kids[hub][k])?;
        }
    }
    if run.color_at(u12, d) {
        run.fill_all(&[(x, v), (x, w), (x, y), (x, u), (u, u2), (u, u3), (u1, u11), (u1, u12), (u1, u13), (u, u1)])?;
    } else {
        run.fix(u1, u13, d)?;
        run.fill_all(&[(x, v), (x, w), (x, y), (x, u), (u, u2), (u, u3), (u1, u11), (u1, u12), (u, u1)])?;
    }
    run.finish()
}

fn dense_mixed(solver: &mut Solver, g: &Graph, part: &PartitionLmr, fr: Frame) -> CaseResult {
    let (x, u, v, w, y) = (fr.x, fr.hubs[U], fr.hubs[V], fr.hubs[W], fr.hubs[Y]);
    let [u1, u2, u3] = fr.kids[U];
    let [u11, u12, u13] = fr.grand[U][0];
    let [u21, u22, u23] = fr.grand[U][1];
    let [u31, u32, u33] = fr.grand[U][2];
    let sides = color_sides(
        solver,
        g,
        part,
        &[(Node::V(u11), Node::Apex), (Node::V(u12), Node::Apex), (Node::V(u21), Node::Apex), (Node::V(u31), Node::Apex)],
        &[(Node::V(u13), Node::Apex), (Node::V(u22), Node::Apex), (Node::V(u23), Node::Apex), (Node::V(u33), Node::Apex)],
    )?;
    let hl = &sides.left.helpers;
    let hr = &sides.right.helpers;
    let c = [color_of(&sides.cl, hl[0])?, color_of(&sides.cl, hl[1])?, color_of(&sides.cl, hl[2])?];
    let base = RenameSpec::new().pin(hr[2], c[0]).pin(hr[1], c[1]).pin(hr[0], c[2]);
    let mut cr = None;
    'search: for el in part.inner_edges(g, u31) {
        let d = color_of(&sides.cl, el)?;
        for er in part.inner_edges(g, u33) {
            if let Some(out) = rename_colors(&sides.cr, &base.clone().pin(er, d)) {
                cr = Some(out);
                break 'search;
            }
        }
    }
    let Some(cr) = cr else {
        return fail("no shared color at u31 and u33");
    };
    let mut run = Run::new(g, part, &sides.cl, &cr)?;
    run.fix(u1, u11, c[0])?;
    run.fix(u2, u23, c[0])?;
    run.fix(u1, u12, c[1])?;
    run.fix(u2, u22, c[1])?;
    run.fix(u1, u13, c[2])?;
    run.fix(u2, u21, c[2])?;
    fill_side_branches(&mut run, &fr)?;
    run.fill_all(&[(x, v), (x, w), (x, y), (x, u), (u3, u31), (u3, u32), (u3, u33), (u, u1), (u, u2), (u, u3)])?;
    run.finish()
}

fn dense_uniform(solver: &mut Solver, g: &Graph, part: &PartitionLmr, fr: Frame, near: bool) -> CaseResult {
    let (x, u, v, w, y) = (fr.x, fr.hubs[U], fr.hubs[V], fr.hubs[W], fr.hubs[Y]);
    let [u1, u2, u3] = fr.kids[U];
    let [u11, u12, u13] = fr.grand[U][0];
    let [u21, u22, u23] = fr.grand[U][1];
    let (sides, d, far, anchor_edge) = if near {
        if part.far_degree(g, u13) != 3 {
            return fail("u13 without three far edges");
        }
        let sides = color_sides(
            solver,
            g,
            part,
            &[(Node::V(u11), Node::Apex), (Node::V(u12), Node::Apex), (Node::V(u21), Node::Apex), (Node::V(u22), Node::Apex)],
            &[(Node::V(u13), Node::V(u23))],
        )?;
        let d = color_of(&sides.cl, sides.left.helpers[0])?;
        let far = part.inner_edges(g, u13);
        let anchor_edge = sides.right.helpers[0];
        (sides, d, far, anchor_edge)
    } else {
        let mut right = alloc::vec![
            (Node::V(u12), Node::Apex),
            (Node::V(u13), Node::Apex),
            (Node::V(u22), Node::Apex),
            (Node::V(u23), Node::Apex),
        ];
        if part.far_degree(g, u13) < 3 {
            right.push((Node::V(u12), Node::V(u13)));
        }
        let sides = color_sides(solver, g, part, &[(Node::V(u11), Node::V(u21))], &right)?;
        let d = color_of(&sides.cl, sides.left.helpers[0])?;
        let far = three_far_edges(g, part, u13, u12)?;
        let anchor_edge = sides.right.helpers[3];
        (sides, d, far, anchor_edge)
    };
    let cs = hub_edge_colors(&sides.cl, &part.inner_edges(g, u11))?;
    let spec = RenameSpec::new().pin(far[0], cs[0]).pin(far[1], cs[1]).pin(far[2], cs[2]).pin(anchor_edge, d);
    let cr = renamed(&sides.cr, &spec)?;
    let mut run = Run::new(g, part, &sides.cl, &cr)?;
    run.fix(u1, u11, d)?;
    run.fix(u2, u23, d)?;
    fill_side_branches(&mut run, &fr)?;
    let [u31, u32, u33] = fr.grand[U][2];
    run.fill_all(&[
        (x, v),
        (x, w),
        (x, y),
        (u2, u21),
        (u2, u22),
        (u3, u31),
        (u3, u32),
        (u3, u33),
        (x, u),
        (u, u2),
        (u, u3),
        (u1, u12),
        (u1, u13),
        (u, u1),
    ])?;
    run.finish()
}

/// Chooses the case for the current partition and runs it.
fn dispatch(solver: &mut Solver, g: &Graph, part: &PartitionLmr, fr: &Frame) -> Result<(Option<CaseLabel>, CaseResult), Fail> {
    for h in [U, V, W] {
        let kids = fr.kids[h];
        let has_l = kids.iter().any(|&k| part.in_l(k));
        let has_r = kids.iter().any(|&k| part.in_r(k));
        let has_m = kids.iter().any(|&k| part.in_m(k));
        if has_l && has_r && !has_m {
            solver.log(g, Step::Collaborative { case: CaseLabel::SplitBranch });
            return Ok((Some(CaseLabel::SplitBranch), split_branch(solver, g, part, fr.clone(), h)));
        }
    }
    let mut middle = Vec::new();
    for h in [U, V, W] {
        for i in 0..3 {
            if part.in_m(fr.kids[h][i]) {
                let mut probe = fr.clone();
                probe.standard_children(g, part, h, i)?;
                let [_, a, b] = probe.grand[h][i];
                middle.push((h, i, part.far_degree(g, a) + part.far_degree(g, b)));
            }
        }
    }
    if middle.is_empty() {
        return fail("middle layer misses every precolored kid");
    }
    let Some(&(h, i, _)) = middle.iter().find(|m| m.2 >= 3) else {
        let w1 = fr.kids[W][0];
        let mut fr = fr.clone();
        let label = if part.in_m(w1) {
            fr.standard_children(g, part, W, 0)?;
            match part.far_degree(g, fr.grand[W][0][2]) {
                1 => CaseLabel::SparseShared,
                2 => CaseLabel::SparseTwoEdge,
                _ => return fail("far child of w1 with unexpected far degree"),
            }
        } else {
            CaseLabel::SparseOffW
        };
        solver.log(g, Step::Collaborative { case: label });
        let out = match label {
            CaseLabel::SparseShared => sparse_shared(solver, g, part, fr),
            CaseLabel::SparseTwoEdge => sparse_two_edge(solver, g, part, fr),
            _ => sparse_off_w(solver, g, part, fr),
        };
        return Ok((Some(label), out));
    };
    if (0..3).any(|j| j != i && part.in_r(fr.kids[h][j])) {
        solver.log(g, Step::Collaborative { case: CaseLabel::DenseSiblingFar });
        return Ok((Some(CaseLabel::DenseSiblingFar), dense_sibling_far(solver, g, part, fr.clone(), h, i)));
    }
    let (label, out) = dense(solver, g, part, fr.clone(), h, i)?;
    Ok((Some(label), out))
}

pub(crate) fn color_partition(
    solver: &mut Solver,
    g: &Graph,
    plan: &SequencePlan,
    part: &PartitionLmr,
) -> Result<PartialColoring, SolveError> {
    let fr = Frame::new(&plan.anchor);
    let (case, outcome) = match dispatch(solver, g, part, &fr) {
        Ok(pair) => pair,
        Err(e) => (None, Err(e)),
    };
    match outcome {
        Ok(c) => Ok(c),
        Err(Fail::Solve(e)) => Err(e),
        Err(Fail::Case { detail, partial }) => {
            let reason = FallbackReason::Collaborative { case, detail };
            match partial {
                Some(p) => solver.fallback_from(g, p, reason),
                None => solver.fallback(g, reason),
            }
        }
    }
}

/// Colors a 4-regular graph of girth at least six through the partition
/// built around its lowest vertex, returning the coloring and the case used.
pub fn collaborative_color(g: &Graph, part: &PartitionLmr, plan: &SequencePlan) -> Result<super::Solution, SolveError> {
    let mut solver = Solver { trace: super::Trace::default(), depth: 0, options: super::SolveOptions::default() };
    let coloring = color_partition(&mut solver, g, plan, part)?;
    Ok(super::Solution { coloring, trace: solver.trace })
}
