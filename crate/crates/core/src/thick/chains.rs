//! Chains of primitive roots spanning a skyline root, and the
//! intersection of two adjacent chains.

use std::ops::RangeInclusive;

use crate::blocks::floor_log;
use crate::canonical::CanonicalPair;
use crate::meta::View;
use crate::seq::Axis;

use super::skyline::SkylineEntry;

/// How chain intersections are evaluated. Both modes return the same
/// classes in the same order.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum Mode {
    /// Every class pair is tested directly.
    #[default]
    Reference,
    /// Classes are read off precomputed period profiles.
    Tabulated,
}

/// Classes of the roots that may span `s` in direction `dir`, anchored at
/// `(i, j)`, by decreasing class.
///
/// `Axis::Horizontal` collects roots `R` whose three stacked copies fill
/// the top of `S^{2,2}`; `Axis::Vertical` the transposed situation.
pub fn generate_chain(view: &View, i: usize, j: usize, s: &SkylineEntry, dir: Axis) -> Vec<CanonicalPair> {
    let CanonicalPair { a: alpha, b: beta } = s.class();
    let mut out = Vec::new();
    match dir {
        Axis::Horizontal => {
            let mut bits = view.v(j, beta).beta(i, 0) & ((1u32 << alpha) - 1);
            while bits != 0 {
                let p = 31 - bits.leading_zeros();
                bits &= !(1 << p);
                if let Some(q) = view.h(i, p + 1).period(j, 2 * s.width) {
                    out.push(CanonicalPair::new(p, floor_log(q)));
                }
            }
        }
        Axis::Vertical => {
            let mut bits = view.h(i, alpha).beta(j, 0) & ((1u32 << beta) - 1);
            while bits != 0 {
                let p = 31 - bits.leading_zeros();
                bits &= !(1 << p);
                if let Some(q) = view.v(j, p + 1).period(i, 2 * s.height) {
                    out.push(CanonicalPair::new(floor_log(q), p));
                }
            }
        }
    }
    out
}

/// Floor-log periods of one fragment across consecutive strip levels.
///
/// `values[k]` belongs to level `first + k`; `None` marks a fragment whose
/// smallest period exceeds half its length.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PeriodProfile {
    pub first: u32,
    pub values: Vec<Option<u32>>,
    cap: u32,
}

impl PeriodProfile {
    pub fn get(&self, level: u32) -> Option<u32> {
        level.checked_sub(self.first).and_then(|k| self.values.get(k as usize).copied().flatten())
    }

    /// Unary encoding: the `k`-th one is preceded by exactly `values[k]`
    /// zeros in total (`None` counts as the fragment's length class plus
    /// one).
    pub fn encode(&self) -> Vec<bool> {
        let mut out = Vec::new();
        let mut zeros = 0;
        for v in &self.values {
            let v = v.unwrap_or(self.cap);
            while zeros < v {
                out.push(false);
                zeros += 1;
            }
            out.push(true);
        }
        out
    }

    pub fn decode(first: u32, fragment_len: usize, bits: &[bool]) -> Self {
        let cap = floor_log(fragment_len) + 1;
        let mut zeros = 0;
        let mut values = Vec::new();
        for &bit in bits {
            if bit {
                values.push(if zeros >= cap { None } else { Some(zeros) });
            } else {
                zeros += 1;
            }
        }
        PeriodProfile { first, values, cap }
    }
}

/// Periods of the fragment `[start, start + len)` of the strips at `fixed`
/// for each level in `levels`: horizontal strips at row `fixed` read
/// columns, vertical strips at column `fixed` read rows.
pub fn period_profile(view: &View, axis: Axis, fixed: usize, start: usize, len: usize, levels: RangeInclusive<u32>) -> PeriodProfile {
    let first = *levels.start();
    let values = levels
        .map(|lv| {
            let s = match axis {
                Axis::Horizontal => view.h(fixed, lv),
                Axis::Vertical => view.v(fixed, lv),
            };
            s.period(start, len).map(floor_log)
        })
        .collect();
    PeriodProfile { first, values, cap: floor_log(len) + 1 }
}

/// Classes of the roots anchored at `(i, j)` that span `sk` horizontally
/// and `prev` vertically, by decreasing class. `prev` is the wider
/// neighbour of `sk` on the skyline.
pub fn chain_intersection(view: &View, i: usize, j: usize, sk: &SkylineEntry, prev: &SkylineEntry, mode: Mode) -> Vec<CanonicalPair> {
    let CanonicalPair { a: _, b: b1 } = sk.class();
    let CanonicalPair { a: a2, b: _ } = prev.class();
    let bh = view.h(i, a2 + 1).beta(j, 0);
    let bv = view.v(j, b1 + 1).beta(i, 0);
    let mut out = Vec::new();
    match mode {
        Mode::Reference => {
            for a in (0..=a2).rev() {
                for b in (0..=b1).rev() {
                    let horizontal = bh & (1 << b) != 0
                        && view.h(i, a + 1).period(j, 2 * sk.width).map(floor_log) == Some(b);
                    let vertical = bv & (1 << a) != 0
                        && view.v(j, b + 1).period(i, 2 * prev.height).map(floor_log) == Some(a);
                    if horizontal && vertical {
                        out.push(CanonicalPair::new(a, b));
                    }
                }
            }
        }
        Mode::Tabulated => {
            let hp = period_profile(view, Axis::Horizontal, i, j, 2 * sk.width, 1..=a2 + 1);
            let vp = period_profile(view, Axis::Vertical, j, i, 2 * prev.height, 1..=b1 + 1);
            for a in (0..=a2).rev() {
                let Some(b) = hp.get(a + 1) else { continue };
                if b <= b1 && bh & (1 << b) != 0 && bv & (1 << a) != 0 && vp.get(b + 1) == Some(a) {
                    out.push(CanonicalPair::new(a, b));
                }
            }
        }
    }
    out
}
