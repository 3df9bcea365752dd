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

//! Global color permutations meeting point and distinctness constraints.

use alloc::vec;
use alloc::vec::Vec;

use crate::coloring::{Color, ColorSet, PartialColoring};
use crate::graph::EdgeId;
use crate::sdr::max_matching;

/// Constraints on a renaming. Every referenced edge must be colored.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct RenameSpec {
    /// `(e, c)`: after renaming, `e` has color `c`.
    pub pins: Vec<(EdgeId, Color)>,
    /// `(e, s)`: after renaming, the color of `e` is outside `s`.
    pub avoid: Vec<(EdgeId, ColorSet)>,
    /// Each group must end up with pairwise distinct colors.
    pub distinct: Vec<Vec<EdgeId>>,
}

impl RenameSpec {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn pin(mut self, e: EdgeId, c: Color) -> Self {
        self.pins.push((e, c));
        self
    }

    pub fn avoid(mut self, e: EdgeId, s: ColorSet) -> Self {
        self.avoid.push((e, s));
        self
    }
}

/// A permutation of the palette of `c` satisfying `spec`, applied to `c`.
///
/// Returns `None` when no permutation works or a constrained edge is
/// uncolored. Colors not touched by any constraint keep their name when
/// possible.
pub fn rename_colors(c: &PartialColoring, spec: &RenameSpec) -> Option<PartialColoring> {
    let k = c.palette_size();
    let palette = ColorSet::full(k);
    let mut allowed = vec![palette; k as usize];
    for &(e, target) in &spec.pins {
        let source = c.get(e)?;
        allowed[(source - 1) as usize] =
            allowed[(source - 1) as usize].intersection(ColorSet::singleton(target));
    }
    for &(e, ref set) in &spec.avoid {
        let source = c.get(e)?;
        allowed[(source - 1) as usize] = allowed[(source - 1) as usize].difference(*set);
    }
    for group in &spec.distinct {
        let mut seen = ColorSet::EMPTY;
        for &e in group {
            let source = c.get(e)?;
            if seen.contains(source) {
                return None;
            }
            seen.insert(source);
        }
    }
    // Prefer the identity for unconstrained colors by trying it first.
    let mut sets = allowed.clone();
    for (i, set) in sets.iter_mut().enumerate() {
        let own = (i + 1) as Color;
        if *set == palette {
            *set = ColorSet::singleton(own);
        }
    }
    let mut matching = max_matching(&sets);
    if matching.iter().any(Option::is_none) {
        matching = max_matching(&allowed);
        if matching.iter().any(Option::is_none) {
            return None;
        }
    }
    let mut perm = vec![0 as Color; k as usize + 1];
    for (i, target) in matching.into_iter().enumerate() {
        perm[i + 1] = target.expect("perfect matching");
    }
    Some(c.permuted(&perm))
}
