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

//! Finishing a partial coloring on a small set of uncolored edges.

use alloc::vec::Vec;

use super::trace::{Completion, Step};
use crate::availability::ColoringState;
use crate::coloring::PartialColoring;
use crate::graph::{EdgeId, Graph};
use crate::sdr::sdr_extend;

const SEARCH_BUDGET: u64 = 200_000;
const RECOLOR_BUDGET: u64 = 4_000;
const RECOLOR_ATTEMPTS: usize = 3_000;
const PAIRING_ATTEMPTS: usize = 5_000;

/// Backtracking list coloring of `targets`, most constrained edge first.
/// On failure the state is left as it was.
pub(crate) fn list_search(state: &mut ColoringState<'_>, targets: &[EdgeId], budget: &mut u64) -> bool {
    let mut pick = None;
    let mut fewest = usize::MAX;
    for &e in targets {
        if state.color_of(e).is_none() {
            let n = state.available(e).len();
            if n < fewest {
                fewest = n;
                pick = Some(e);
            }
        }
    }
    let Some(e) = pick else { return true };
    if *budget == 0 {
        return false;
    }
    *budget -= 1;
    for c in state.available(e).iter() {
        state.assign(e, c);
        if list_search(state, targets, budget) {
            return true;
        }
        state.unassign(e);
        if *budget == 0 {
            return false;
        }
    }
    false
}

fn try_sdr(g: &Graph, c: &PartialColoring, targets: &[EdgeId], log: &mut dyn FnMut(Step)) -> Option<PartialColoring> {
    let out = sdr_extend(g, c, targets).ok();
    log(Step::SdrCall { targets: targets.len(), ok: out.is_some() });
    out
}

/// Two edges that do not see each other share a color, then the rest go by
/// distinct representatives.
fn pairing(state: &mut ColoringState<'_>, targets: &[EdgeId]) -> Option<PartialColoring> {
    let g = state.graph();
    let mut attempts = 0;
    for (i, &e) in targets.iter().enumerate() {
        for &f in &targets[i + 1..] {
            if state.table().get(e).contains(&f) {
                continue;
            }
            let common = state.available(e).intersection(state.available(f));
            for alpha in common.iter() {
                attempts += 1;
                if attempts > PAIRING_ATTEMPTS {
                    return None;
                }
                state.assign(e, alpha);
                state.assign(f, alpha);
                let rest: Vec<EdgeId> = targets.iter().copied().filter(|&t| t != e && t != f).collect();
                let done = sdr_extend(g, state.coloring(), &rest).ok();
                state.unassign(f);
                state.unassign(e);
                if done.is_some() {
                    return done;
                }
            }
        }
    }
    None
}

/// Uncolors one or two colored edges seen by the targets and searches again.
fn recolor(state: &mut ColoringState<'_>, targets: &[EdgeId]) -> bool {
    let mut near: Vec<EdgeId> = Vec::new();
    for &e in targets {
        for &f in state.table().get(e) {
            if state.color_of(f).is_some() && !near.contains(&f) {
                near.push(f);
            }
        }
    }
    near.sort_unstable();
    let mut attempts = 0;
    for (i, &a) in near.iter().enumerate() {
        for &b in &near[i..] {
            attempts += 1;
            if attempts > RECOLOR_ATTEMPTS {
                return false;
            }
            let mut freed = Vec::with_capacity(2);
            freed.push((a, state.unassign(a).expect("colored")));
            if b != a {
                freed.push((b, state.unassign(b).expect("colored")));
            }
            let mut all: Vec<EdgeId> = targets.to_vec();
            all.extend(freed.iter().map(|&(e, _)| e));
            let mut budget = RECOLOR_BUDGET;
            if list_search(state, &all, &mut budget) {
                return true;
            }
            for (e, c) in freed {
                state.assign(e, c);
            }
        }
    }
    false
}

/// Colors every edge of `targets` (uncolored under `c`), trying distinct
/// representatives, then shared-color pairs, then full search, then local
/// recoloring.
pub(crate) fn complete(
    g: &Graph,
    c: PartialColoring,
    targets: &[EdgeId],
    log: &mut dyn FnMut(Step),
) -> (Option<PartialColoring>, Completion) {
    if let Some(out) = try_sdr(g, &c, targets, log) {
        return (Some(out), Completion::Sdr);
    }
    let mut state = ColoringState::new(g, c);
    if let Some(out) = pairing(&mut state, targets) {
        return (Some(out), Completion::Pairing);
    }
    let mut budget = SEARCH_BUDGET;
    if list_search(&mut state, targets, &mut budget) {
        return (Some(state.into_coloring()), Completion::Search);
    }
    if recolor(&mut state, targets) {
        return (Some(state.into_coloring()), Completion::Recolor);
    }
    (None, Completion::Failed)
}
