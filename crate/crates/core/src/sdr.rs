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

//! Systems of distinct representatives via augmenting-path matching between
//! uncolored edges and colors.

use alloc::vec;
use alloc::vec::Vec;

use thiserror::Error;

use crate::availability::AvailabilityView;
use crate::coloring::{Color, ColorSet, PartialColoring, MAX_COLORS};
use crate::graph::{EdgeId, Graph};

/// A set of targets whose combined availability is smaller than the set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HallViolation {
    pub deficient: Vec<EdgeId>,
    pub available: ColorSet,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SdrError {
    #[error("target edge {0} is not in the graph")]
    UnknownEdge(EdgeId),
    #[error("target edge {0} is already colored")]
    AlreadyColored(EdgeId),
    #[error("target edge {0} listed twice")]
    Duplicate(EdgeId),
    #[error("no distinct representatives: {} edges share only {} colors", .0.deficient.len(), .0.available.len())]
    Hall(HallViolation),
}

fn augment(
    i: usize,
    sets: &[ColorSet],
    owner: &mut [Option<usize>; MAX_COLORS as usize + 1],
    visited: &mut ColorSet,
    pick: &mut [Option<Color>],
) -> bool {
    for c in sets[i].iter() {
        if visited.contains(c) {
            continue;
        }
        visited.insert(c);
        let free = match owner[c as usize] {
            None => true,
            Some(j) => augment(j, sets, owner, visited, pick),
        };
        if free {
            owner[c as usize] = Some(i);
            pick[i] = Some(c);
            return true;
        }
    }
    false
}

/// Maximum matching of set indices to colors. Entry `i` is the color
/// matched to `sets[i]`, if any.
pub fn max_matching(sets: &[ColorSet]) -> Vec<Option<Color>> {
    let mut owner = [None; MAX_COLORS as usize + 1];
    let mut pick = vec![None; sets.len()];
    for i in 0..sets.len() {
        let mut visited = ColorSet::EMPTY;
        augment(i, sets, &mut owner, &mut visited, &mut pick);
    }
    pick
}

/// Indices reachable by alternating paths from the unmatched set `start`.
/// When `start` is unmatched in a maximum matching this set violates Hall's
/// condition.
fn deficient_from(sets: &[ColorSet], pick: &[Option<Color>], start: usize) -> (Vec<usize>, ColorSet) {
    let mut owner = [None; MAX_COLORS as usize + 1];
    for (i, c) in pick.iter().enumerate() {
        if let Some(c) = c {
            owner[*c as usize] = Some(i);
        }
    }
    let mut reached = vec![start];
    let mut colors = ColorSet::EMPTY;
    let mut head = 0;
    while head < reached.len() {
        let i = reached[head];
        head += 1;
        for c in sets[i].difference(colors).iter() {
            colors.insert(c);
            if let Some(j) = owner[c as usize] {
                if !reached.contains(&j) {
                    reached.push(j);
                }
            }
        }
    }
    reached.sort_unstable();
    (reached, colors)
}

/// Distinct representatives for `sets`, or a Hall-violating index subset
/// with the union of its sets.
pub fn distinct_representatives(sets: &[ColorSet]) -> Result<Vec<Color>, (Vec<usize>, ColorSet)> {
    let pick = max_matching(sets);
    match pick.iter().position(Option::is_none) {
        None => Ok(pick.into_iter().map(|c| c.expect("perfect matching")).collect()),
        Some(start) => Err(deficient_from(sets, &pick, start)),
    }
}

/// Gives every target a different color from its availability under `c`.
pub fn sdr_extend(
    g: &Graph,
    c: &PartialColoring,
    targets: &[EdgeId],
) -> Result<PartialColoring, SdrError> {
    for (i, &e) in targets.iter().enumerate() {
        if !g.contains_edge(e) {
            return Err(SdrError::UnknownEdge(e));
        }
        if c.is_colored(e) {
            return Err(SdrError::AlreadyColored(e));
        }
        if targets[..i].contains(&e) {
            return Err(SdrError::Duplicate(e));
        }
    }
    let view = AvailabilityView::new(g, c);
    let sets: Vec<ColorSet> = targets.iter().map(|&e| view.available(e)).collect();
    match distinct_representatives(&sets) {
        Ok(colors) => {
            let mut out = c.clone();
            for (&e, col) in targets.iter().zip(colors) {
                out.set(e, col);
            }
            Ok(out)
        }
        Err((idx, available)) => Err(SdrError::Hall(HallViolation {
            deficient: idx.into_iter().map(|i| targets[i]).collect(),
            available,
        })),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::families;
    use crate::verify::verify_strong_coloring;

    fn set(cs: &[Color]) -> ColorSet {
        cs.iter().copied().collect()
    }

    #[test]
    fn forced_singletons() {
        assert_eq!(distinct_representatives(&[set(&[1]), set(&[2]), set(&[3])]), Ok(vec![1, 2, 3]));
    }

    #[test]
    fn two_edges_one_color() {
        let (idx, avail) = distinct_representatives(&[set(&[1]), set(&[1])]).unwrap_err();
        assert_eq!(idx, vec![0, 1]);
        assert_eq!(avail, set(&[1]));
    }

    #[test]
    fn needs_augmenting_path() {
        let sets = [set(&[1, 2]), set(&[1]), set(&[2, 3])];
        let reps = distinct_representatives(&sets).unwrap();
        assert_eq!(reps[1], 1);
        assert_eq!(reps[0], 2);
        assert_eq!(reps[2], 3);
    }

    #[test]
    fn deficiency_is_minimal_witness() {
        let sets = [set(&[1, 2]), set(&[1, 2]), set(&[1, 2]), set(&[4, 5])];
        let (idx, avail) = distinct_representatives(&sets).unwrap_err();
        assert_eq!(idx, vec![0, 1, 2]);
        assert_eq!(avail, set(&[1, 2]));
    }

    #[test]
    fn extends_graph_coloring() {
        let g = families::cycle(5);
        let mut c = PartialColoring::new(5);
        c.set(0, 1);
        c.set(1, 2);
        let out = sdr_extend(&g, &c, &[2, 3, 4]).unwrap();
        assert_eq!(verify_strong_coloring(&g, &out), Ok(()));
        assert_eq!(out.colored_count(), 5);
        assert_eq!(sdr_extend(&g, &c, &[0]), Err(SdrError::AlreadyColored(0)));
        let tight = PartialColoring::new(4);
        assert!(matches!(sdr_extend(&g, &tight, &[0, 1, 2, 3, 4]), Err(SdrError::Hall(_))));
    }
}
