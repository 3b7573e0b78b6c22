//! Skylines: the non-dominated primitive roots `R` with an occurrence of
//! `R^{5,5}` anchored at a position.

use crate::blocks::floor_log;
use crate::canonical::CanonicalPair;
use crate::meta::View;

/// The unique root height of class `a` whose fifth power is anchored at
/// `i` in the vertical strips at column `j` of every level in `levels`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct HeightCandidate {
    pub a: u32,
    pub h: usize,
    /// Bit `b` set iff the strip of width `2^b` carries the power.
    pub levels: u32,
}

impl HeightCandidate {
    pub fn b1(&self) -> u32 {
        self.levels.trailing_zeros()
    }

    pub fn b2(&self) -> u32 {
        31 - self.levels.leading_zeros()
    }
}

/// One skyline root, `height x width`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SkylineEntry {
    pub height: usize,
    pub width: usize,
}

impl SkylineEntry {
    pub fn class(&self) -> CanonicalPair {
        CanonicalPair::of(self.height, self.width)
    }
}

/// Whether the `5h x 5w` window anchored at `(i, j)` is `R^{5,5}` for a
/// primitive `h x w` root `R`.
pub fn anchored_root(view: &View, i: usize, j: usize, h: usize, w: usize) -> bool {
    if h == 0 || w == 0 || i < 2 * h || j < 2 * w || i + 3 * h > view.rows() || j + 3 * w > view.cols() {
        return false;
    }
    let (r0, c0) = (i - 2 * h, j - 2 * w);
    if !view.eq(r0, c0, r0 + h, c0, 4 * h, 5 * w) || !view.eq(r0, c0, r0, c0 + w, 5 * h, 4 * w) {
        return false;
    }
    // strips wider than w contain every column of R
    let y = floor_log(5 * w);
    let x = floor_log(5 * h);
    view.v(c0, y).period(r0, 5 * h) == Some(h) && view.h(r0, x).period(c0, 5 * w) == Some(w)
}

/// Root heights anchored at `(i, j)`, one per class, by increasing class.
pub fn height_candidates(view: &View, i: usize, j: usize) -> Vec<HeightCandidate> {
    let mut out: Vec<HeightCandidate> = Vec::new();
    for b in 0..=view.max_b() {
        if j + (1 << b) > view.cols() {
            break;
        }
        let s = view.v(j, b);
        let mask = s.beta(i, 2);
        if mask == 0 {
            continue;
        }
        for (p, run) in s.squares_at(i) {
            let a = floor_log(p);
            if mask & (1 << a) == 0 || run.start + 2 * p > i || run.end + 1 < i + 3 * p {
                continue;
            }
            match out.iter_mut().find(|c| c.a == a) {
                Some(c) => {
                    if c.h != p {
                        log::warn!("two anchored heights {} and {} share class {a} at ({i}, {j})", c.h, p);
                        debug_assert_eq!(c.h, p);
                    }
                    c.levels |= 1 << b;
                }
                None => out.push(HeightCandidate { a, h: p, levels: 1 << b }),
            }
        }
    }
    out.sort_unstable_by_key(|c| c.a);
    debug_assert!(out.windows(2).all(|w| w[1].h >= 2 * w[0].h), "anchored heights must at least double");
    out
}

/// Heights for every row of column `j`.
pub fn skyline_heights(view: &View, j: usize) -> Vec<Vec<HeightCandidate>> {
    (0..view.rows()).map(|i| height_candidates(view, i, j)).collect()
}

/// Row offsets of horizontal strips of height `2^l` covering rows
/// `[s0, e)` where consecutive strips overlap by at least `h` rows.
fn cover(s0: usize, e: usize, l: u32, h: usize) -> Vec<usize> {
    let len = 1usize << l;
    let mut out = vec![s0];
    if s0 + len < e {
        let last = e - len;
        if s0 + len - last < h {
            out.push(s0 + len - h);
        }
        out.push(last);
    }
    out
}

/// The widest root of height `cand.h` anchored at `(i, j)`.
pub fn skyline_width(view: &View, i: usize, j: usize, cand: &HeightCandidate) -> Option<SkylineEntry> {
    let h = cand.h;
    if i < 2 * h || i + 3 * h > view.rows() {
        return None;
    }
    let (s0, e) = (i - 2 * h, i + 3 * h);
    let l = floor_log(5 * h);
    let mut beta = u32::MAX;
    for x in cover(s0, e, l, h) {
        beta &= view.h(x, l).beta(j, 2);
    }
    let lo = cand.b1().saturating_sub(1);
    let hi = cand.b2();
    let span = if hi >= 31 { u32::MAX } else { (1u32 << (hi + 1)) - 1 };
    let mut bits = beta & span & !((1u32 << lo) - 1);
    let t = view.h(s0, l);
    while bits != 0 {
        let x = 31 - bits.leading_zeros();
        bits &= !(1 << x);
        for (p, run) in t.squares_at(j) {
            if floor_log(p) != x || run.start + 2 * p > j || run.end + 1 < j + 3 * p {
                continue;
            }
            if anchored_root(view, i, j, h, p) {
                return Some(SkylineEntry { height: h, width: p });
            }
        }
    }
    None
}

/// Non-dominated anchored roots at `(i, j)` by decreasing width.
pub fn compute_skyline(view: &View, i: usize, j: usize) -> Vec<SkylineEntry> {
    let found: Vec<SkylineEntry> = height_candidates(view, i, j)
        .iter()
        .filter_map(|c| skyline_width(view, i, j, c))
        .collect();
    let mut out: Vec<SkylineEntry> = found
        .iter()
        .filter(|s| !found.iter().any(|t| s.class().strictly_dominated_by(&t.class())))
        .copied()
        .collect();
    out.sort_unstable_by_key(|s| std::cmp::Reverse(s.width));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid::Grid;
    use crate::meta::GridIndex;
    use crate::oracle::{brute_primitive_root, corpus};

    fn brute_anchored(g: &Grid, i: usize, j: usize, h: usize, w: usize) -> bool {
        if i < 2 * h || j < 2 * w || i + 3 * h > g.rows() || j + 3 * w > g.cols() {
            return false;
        }
        let block = g.block(i - 2 * h, j - 2 * w, 5 * h, 5 * w);
        let root = g.block(i - 2 * h, j - 2 * w, h, w);
        brute_primitive_root(&root) == (h, w)
            && (0..5 * h).all(|r| (0..5 * w).all(|c| block[r][c] == root[r % h][c % w]))
    }

    #[test]
    fn constant_grid_skyline() {
        let ix = GridIndex::build(&Grid::from_raw(16, 16, &[0u8; 256]).unwrap());
        let got = compute_skyline(&ix.view(), 8, 8);
        assert_eq!(got, vec![SkylineEntry { height: 1, width: 1 }]);
        assert!(compute_skyline(&ix.view(), 1, 8).is_empty());
    }

    #[test]
    fn anchored_root_matches_brute_force() {
        for cg in corpus(5, 40, 5, 16) {
            let g = &cg.grid;
            let ix = GridIndex::build(g);
            let view = ix.view();
            for i in 0..g.rows() {
                for j in 0..g.cols() {
                    for h in 1..=g.rows() / 5 {
                        for w in 1..=g.cols() / 5 {
                            assert_eq!(anchored_root(&view, i, j, h, w), brute_anchored(g, i, j, h, w), "{}", cg.name);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn skyline_matches_brute_force() {
        for cg in corpus(6, 60, 5, 18) {
            let g = &cg.grid;
            let ix = GridIndex::build(g);
            for view in [ix.view(), ix.transposed()] {
                let vg = if view.is_transposed() { crate::grid::transpose(g) } else { g.clone() };
                for i in 0..view.rows() {
                    for j in 0..view.cols() {
                        let mut all = Vec::new();
                        for h in 1..=view.rows() / 5 {
                            for w in 1..=view.cols() / 5 {
                                if brute_anchored(&vg, i, j, h, w) {
                                    all.push(SkylineEntry { height: h, width: w });
                                }
                            }
                        }
                        let mut want: Vec<SkylineEntry> = all
                            .iter()
                            .filter(|s| !all.iter().any(|t| s.class().strictly_dominated_by(&t.class())))
                            .copied()
                            .collect();
                        want.sort_unstable_by_key(|s| std::cmp::Reverse(s.width));
                        assert_eq!(compute_skyline(&view, i, j), want, "{} at ({i}, {j})", cg.name);
                    }
                }
            }
        }
    }
}
