//! Names of all `2^a x 2^b` blocks of a grid.
//!
//! Two blocks of equal dimensions get the same name iff they are cell-wise
//! equal. Level `(a, 0)` holds the metacharacters of the horizontal
//! metastrings of height `2^a`; level `(0, b)` those of the vertical
//! metastrings of width `2^b`. Any `h x w` block comparison reduces to four
//! name lookups at level `(floor(log h), floor(log w))`.

use crate::grid::Grid;

#[inline]
pub fn floor_log(x: usize) -> u32 {
    debug_assert!(x > 0);
    x.ilog2()
}

struct Level {
    /// Number of valid top-left columns at this level.
    stride: usize,
    ids: Vec<u32>,
}

pub struct BlockNames {
    rows: usize,
    cols: usize,
    max_a: u32,
    max_b: u32,
    levels: Vec<Level>,
}

/// Dense renaming of pairs by lexicographic order, via two stable counting
/// sorts.
fn rename_pairs(pairs: &[(u32, u32)], bound: usize) -> Vec<u32> {
    let n = pairs.len();
    let mut count = vec![0u32; bound + 2];
    let mut by_second = vec![0u32; n];
    for &(_, y) in pairs {
        count[y as usize + 1] += 1;
    }
    for k in 1..count.len() {
        count[k] += count[k - 1];
    }
    for (idx, &(_, y)) in pairs.iter().enumerate() {
        let slot = &mut count[y as usize];
        by_second[*slot as usize] = idx as u32;
        *slot += 1;
    }
    count.iter_mut().for_each(|c| *c = 0);
    for &(x, _) in pairs {
        count[x as usize + 1] += 1;
    }
    for k in 1..count.len() {
        count[k] += count[k - 1];
    }
    let mut sorted = vec![0u32; n];
    for &idx in &by_second {
        let slot = &mut count[pairs[idx as usize].0 as usize];
        sorted[*slot as usize] = idx;
        *slot += 1;
    }
    let mut out = vec![0u32; n];
    let mut next = 0u32;
    for k in 0..n {
        let cur = pairs[sorted[k] as usize];
        if k > 0 && cur != pairs[sorted[k - 1] as usize] {
            next += 1;
        }
        out[sorted[k] as usize] = next;
    }
    out
}

impl BlockNames {
    pub fn build(g: &Grid) -> Self {
        let (rows, cols) = (g.rows(), g.cols());
        let max_a = floor_log(rows);
        let max_b = floor_log(cols);
        let mut levels: Vec<Level> = Vec::with_capacity(((max_a + 1) * (max_b + 1)) as usize);
        let bound0 = g.cells().iter().copied().max().unwrap_or(0) as usize;
        // Column 0 of the level table, built top-down by stacking heights.
        let mut column0: Vec<(Level, usize)> = vec![(Level { stride: cols, ids: g.cells().to_vec() }, bound0)];
        for a in 1..=max_a {
            let (prev, _) = column0.last().unwrap();
            let half = 1usize << (a - 1);
            let h_cnt = rows - (1 << a) + 1;
            let pairs: Vec<(u32, u32)> = (0..h_cnt * cols)
                .map(|k| (prev.ids[k], prev.ids[k + half * cols]))
                .collect();
            let bound = pairs.iter().map(|&(x, y)| x.max(y)).max().unwrap_or(0) as usize;
            let ids = rename_pairs(&pairs, bound);
            let nb = ids.iter().copied().max().unwrap_or(0) as usize;
            column0.push((Level { stride: cols, ids }, nb));
        }
        for (a, (base, bound)) in column0.into_iter().enumerate() {
            let h_cnt = rows - (1usize << a) + 1;
            levels.push(base);
            let mut bound = bound;
            for b in 1..=max_b {
                let prev = levels.last().unwrap();
                let half = 1usize << (b - 1);
                let w_cnt = cols - (1 << b) + 1;
                let mut pairs = Vec::with_capacity(h_cnt * w_cnt);
                for r in 0..h_cnt {
                    let row = &prev.ids[r * prev.stride..r * prev.stride + prev.stride];
                    pairs.extend((0..w_cnt).map(|c| (row[c], row[c + half])));
                }
                let ids = rename_pairs(&pairs, bound);
                bound = ids.iter().copied().max().unwrap_or(0) as usize;
                levels.push(Level { stride: w_cnt, ids });
            }
        }
        BlockNames { rows, cols, max_a, max_b, levels }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn max_a(&self) -> u32 {
        self.max_a
    }

    pub fn max_b(&self) -> u32 {
        self.max_b
    }

    #[inline]
    fn level(&self, a: u32, b: u32) -> &Level {
        &self.levels[(a * (self.max_b + 1) + b) as usize]
    }

    /// Name of the `2^a x 2^b` block at `(r, c)`.
    #[inline]
    pub fn name(&self, a: u32, b: u32, r: usize, c: usize) -> u32 {
        let lv = self.level(a, b);
        lv.ids[r * lv.stride + c]
    }

    /// Canonical identity of the `h x w` block at `(r, c)`; equal for two
    /// blocks of the same dimensions iff they are cell-wise equal.
    #[inline]
    pub fn content_id(&self, r: usize, c: usize, h: usize, w: usize) -> [u32; 4] {
        let (a, b) = (floor_log(h), floor_log(w));
        let (dr, dc) = (h - (1 << a), w - (1 << b));
        let lv = self.level(a, b);
        let at = |x: usize, y: usize| lv.ids[x * lv.stride + y];
        [at(r, c), at(r + dr, c), at(r, c + dc), at(r + dr, c + dc)]
    }

    /// Whether the `h x w` blocks at `(r1, c1)` and `(r2, c2)` are equal.
    /// Both blocks must lie inside the grid.
    #[inline]
    pub fn eq(&self, r1: usize, c1: usize, r2: usize, c2: usize, h: usize, w: usize) -> bool {
        debug_assert!(r1 + h <= self.rows && r2 + h <= self.rows);
        debug_assert!(c1 + w <= self.cols && c2 + w <= self.cols);
        if h == 0 || w == 0 {
            return true;
        }
        let (a, b) = (floor_log(h), floor_log(w));
        let (dr, dc) = (h - (1 << a), w - (1 << b));
        let lv = self.level(a, b);
        let at = |x: usize, y: usize| lv.ids[x * lv.stride + y];
        at(r1, c1) == at(r2, c2)
            && at(r1 + dr, c1) == at(r2 + dr, c2)
            && at(r1, c1 + dc) == at(r2, c2 + dc)
            && at(r1 + dr, c1 + dc) == at(r2 + dr, c2 + dc)
    }
}
