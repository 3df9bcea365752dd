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

//! Partial strong edge-colorings and small color sets.

use alloc::vec::Vec;
use core::fmt;

use crate::graph::EdgeId;

/// Colors are `1..=k`.
pub type Color = u8;

/// Largest supported palette.
pub const MAX_COLORS: u8 = 64;

/// Set of colors `1..=64` stored as a bitmask.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct ColorSet(u64);

impl ColorSet {
    pub const EMPTY: ColorSet = ColorSet(0);

    /// `{1, .., k}`.
    pub fn full(k: u8) -> ColorSet {
        debug_assert!(k <= MAX_COLORS);
        if k >= 64 {
            ColorSet(u64::MAX)
        } else {
            ColorSet((1u64 << k) - 1)
        }
    }

    pub fn from_bits(bits: u64) -> ColorSet {
        ColorSet(bits)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn singleton(c: Color) -> ColorSet {
        ColorSet(bit(c))
    }

    pub fn contains(self, c: Color) -> bool {
        (1..=MAX_COLORS).contains(&c) && self.0 & bit(c) != 0
    }

    pub fn insert(&mut self, c: Color) {
        self.0 |= bit(c);
    }

    pub fn remove(&mut self, c: Color) {
        self.0 &= !bit(c);
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn union(self, other: ColorSet) -> ColorSet {
        ColorSet(self.0 | other.0)
    }

    pub fn intersection(self, other: ColorSet) -> ColorSet {
        ColorSet(self.0 & other.0)
    }

    pub fn difference(self, other: ColorSet) -> ColorSet {
        ColorSet(self.0 & !other.0)
    }

    pub fn min(self) -> Option<Color> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as Color + 1)
    }

    pub fn iter(self) -> impl Iterator<Item = Color> {
        let mut bits = self.0;
        core::iter::from_fn(move || {
            if bits == 0 {
                return None;
            }
            let c = bits.trailing_zeros() as Color + 1;
            bits &= bits - 1;
            Some(c)
        })
    }
}

fn bit(c: Color) -> u64 {
    debug_assert!((1..=MAX_COLORS).contains(&c), "color {c} out of range");
    1u64 << (c - 1)
}

impl FromIterator<Color> for ColorSet {
    fn from_iter<I: IntoIterator<Item = Color>>(iter: I) -> Self {
        let mut s = ColorSet::EMPTY;
        for c in iter {
            s.insert(c);
        }
        s
    }
}

impl fmt::Debug for ColorSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Edge id → optional color with palette `1..=k`. Indexed by edge id, so
/// it stays meaningful while the graph loses or gains edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartialColoring {
    k: u8,
    colors: Vec<Option<Color>>,
}

impl PartialColoring {
    pub fn new(k: u8) -> Self {
        assert!(k <= MAX_COLORS, "palette of {k} colors exceeds {MAX_COLORS}");
        PartialColoring { k, colors: Vec::new() }
    }

    pub fn with_capacity(k: u8, edge_bound: usize) -> Self {
        let mut c = PartialColoring::new(k);
        c.colors.resize(edge_bound, None);
        c
    }

    pub fn palette_size(&self) -> u8 {
        self.k
    }

    pub fn palette(&self) -> ColorSet {
        ColorSet::full(self.k)
    }

    pub fn get(&self, e: EdgeId) -> Option<Color> {
        self.colors.get(e).copied().flatten()
    }

    pub fn set(&mut self, e: EdgeId, c: Color) {
        if e >= self.colors.len() {
            self.colors.resize(e + 1, None);
        }
        self.colors[e] = Some(c);
    }

    pub fn clear(&mut self, e: EdgeId) -> Option<Color> {
        self.colors.get_mut(e).and_then(Option::take)
    }

    pub fn is_colored(&self, e: EdgeId) -> bool {
        self.get(e).is_some()
    }

    /// `(edge, color)` for every colored edge, ascending by edge id.
    pub fn iter(&self) -> impl Iterator<Item = (EdgeId, Color)> + '_ {
        self.colors.iter().enumerate().filter_map(|(e, c)| c.map(|c| (e, c)))
    }

    pub fn colored_count(&self) -> usize {
        self.colors.iter().filter(|c| c.is_some()).count()
    }

    pub fn used_colors(&self) -> ColorSet {
        self.iter().map(|(_, c)| c).collect()
    }

    /// Number of distinct colors in use.
    pub fn color_count(&self) -> usize {
        self.used_colors().len()
    }

    /// Applies `perm[c]` to every color (index 0 unused).
    pub fn permuted(&self, perm: &[Color]) -> PartialColoring {
        let colors = self.colors.iter().map(|c| c.map(|c| perm[c as usize])).collect();
        PartialColoring { k: self.k, colors }
    }

    /// Same assignment with a different palette bound.
    pub fn with_palette(mut self, k: u8) -> PartialColoring {
        assert!(k <= MAX_COLORS);
        self.k = k;
        self
    }
}
