//! Metastring families and the per-metastring indices over them.

use rayon::prelude::*;

use crate::blocks::BlockNames;
use crate::grid::Grid;
use crate::seq::{Axis, MetaText, SeqIndex, Text};

/// A materialized metastring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MetaString {
    pub axis: Axis,
    pub origin: usize,
    pub level: u32,
    pub chars: Vec<u32>,
}

impl MetaString {
    pub fn len(&self) -> usize {
        self.chars.len()
    }

    pub fn is_empty(&self) -> bool {
        self.chars.is_empty()
    }
}

/// Every horizontal and vertical metastring of `g`, level 0 included.
pub fn build_metastrings(g: &Grid) -> Vec<MetaString> {
    let names = BlockNames::build(g);
    let mut out = Vec::new();
    for a in 0..=names.max_a() {
        for i in 0..=g.rows() - (1 << a) {
            let t = MetaText { names: &names, axis: Axis::Horizontal, origin: i, level: a };
            let chars = (0..t.len()).map(|x| t.char_at(x)).collect();
            out.push(MetaString { axis: Axis::Horizontal, origin: i, level: a, chars });
        }
    }
    for b in 0..=names.max_b() {
        for j in 0..=g.cols() - (1 << b) {
            let t = MetaText { names: &names, axis: Axis::Vertical, origin: j, level: b };
            let chars = (0..t.len()).map(|x| t.char_at(x)).collect();
            out.push(MetaString { axis: Axis::Vertical, origin: j, level: b, chars });
        }
    }
    out
}

/// Block names plus a [`SeqIndex`] for every metastring.
pub struct GridIndex {
    grid: Grid,
    names: BlockNames,
    /// `h[a][i]` indexes the horizontal metastring of rows `[i, i + 2^a)`.
    h: Vec<Vec<SeqIndex>>,
    /// `v[b][j]` indexes the vertical metastring of columns `[j, j + 2^b)`.
    v: Vec<Vec<SeqIndex>>,
}

impl GridIndex {
    pub fn build(grid: &Grid) -> Self {
        let names = BlockNames::build(grid);
        let family = |axis: Axis, levels: u32, extent: usize| -> Vec<Vec<SeqIndex>> {
            (0..=levels)
                .map(|lv| {
                    (0..=extent - (1 << lv))
                        .into_par_iter()
                        .map(|o| {
                            let t = MetaText { names: &names, axis, origin: o, level: lv };
                            SeqIndex::build(&t, true)
                        })
                        .collect()
                })
                .collect()
        };
        let h = family(Axis::Horizontal, names.max_a(), grid.rows());
        let v = family(Axis::Vertical, names.max_b(), grid.cols());
        GridIndex { grid: grid.clone(), names, h, v }
    }

    pub fn grid(&self) -> &Grid {
        &self.grid
    }

    pub fn names(&self) -> &BlockNames {
        &self.names
    }

    pub fn view(&self) -> View<'_> {
        View { ix: self, t: false }
    }

    /// The same index seen with rows and columns exchanged.
    pub fn transposed(&self) -> View<'_> {
        View { ix: self, t: true }
    }

    /// Every indexed metastring as `(axis, origin, level, index)`.
    pub fn all(&self) -> impl Iterator<Item = (Axis, usize, u32, &SeqIndex)> + '_ {
        let hs = self.h.iter().enumerate().flat_map(|(a, row)| {
            row.iter().enumerate().map(move |(i, s)| (Axis::Horizontal, i, a as u32, s))
        });
        let vs = self.v.iter().enumerate().flat_map(|(b, row)| {
            row.iter().enumerate().map(move |(j, s)| (Axis::Vertical, j, b as u32, s))
        });
        hs.chain(vs)
    }
}

/// Read access to a [`GridIndex`], optionally transposed.
#[derive(Clone, Copy)]
pub struct View<'a> {
    ix: &'a GridIndex,
    t: bool,
}

impl<'a> View<'a> {
    pub fn is_transposed(&self) -> bool {
        self.t
    }

    pub fn rows(&self) -> usize {
        if self.t { self.ix.grid.cols() } else { self.ix.grid.rows() }
    }

    pub fn cols(&self) -> usize {
        if self.t { self.ix.grid.rows() } else { self.ix.grid.cols() }
    }

    pub fn max_a(&self) -> u32 {
        if self.t { self.ix.names.max_b() } else { self.ix.names.max_a() }
    }

    pub fn max_b(&self) -> u32 {
        if self.t { self.ix.names.max_a() } else { self.ix.names.max_b() }
    }

    /// Index of the horizontal metastring of rows `[i, i + 2^a)`.
    #[inline]
    pub fn h(&self, i: usize, a: u32) -> &'a SeqIndex {
        if self.t { &self.ix.v[a as usize][i] } else { &self.ix.h[a as usize][i] }
    }

    /// Index of the vertical metastring of columns `[j, j + 2^b)`.
    #[inline]
    pub fn v(&self, j: usize, b: u32) -> &'a SeqIndex {
        if self.t { &self.ix.h[b as usize][j] } else { &self.ix.v[b as usize][j] }
    }

    #[inline]
    pub fn htext(&self, i: usize, a: u32) -> MetaText<'a> {
        let axis = if self.t { Axis::Vertical } else { Axis::Horizontal };
        MetaText { names: &self.ix.names, axis, origin: i, level: a }
    }

    #[inline]
    pub fn vtext(&self, j: usize, b: u32) -> MetaText<'a> {
        let axis = if self.t { Axis::Horizontal } else { Axis::Vertical };
        MetaText { names: &self.ix.names, axis, origin: j, level: b }
    }

    /// Equality of the `h x w` blocks at `(r1, c1)` and `(r2, c2)`.
    #[inline]
    pub fn eq(&self, r1: usize, c1: usize, r2: usize, c2: usize, h: usize, w: usize) -> bool {
        if self.t {
            self.ix.names.eq(c1, r1, c2, r2, w, h)
        } else {
            self.ix.names.eq(r1, c1, r2, c2, h, w)
        }
    }

    /// Whether the `h x w` window at `(r, c)` is a quartic.
    #[inline]
    pub fn is_quartic(&self, r: usize, c: usize, h: usize, w: usize) -> bool {
        if h % 2 == 1 || w % 2 == 1 || h == 0 || w == 0 || r + h > self.rows() || c + w > self.cols() {
            return false;
        }
        let (hh, hw) = (h / 2, w / 2);
        self.eq(r, c, r, c + hw, h, hw) && self.eq(r, c, r + hh, c, hh, w)
    }

    /// Maps a position of this view to grid coordinates.
    #[inline]
    pub fn to_grid(&self, r: usize, c: usize) -> (usize, usize) {
        if self.t { (c, r) } else { (r, c) }
    }

    /// Maps block dimensions of this view to grid dimensions.
    #[inline]
    pub fn dims_to_grid(&self, h: usize, w: usize) -> (usize, usize) {
        if self.t { (w, h) } else { (h, w) }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn constant_grid_gives_constant_metastrings() {
        let g = Grid::from_raw(4, 4, &[0u8; 16]).unwrap();
        for m in build_metastrings(&g) {
            assert_eq!(m.len(), 4);
            assert!(m.chars.iter().all(|&c| c == m.chars[0]));
        }
    }

    #[test]
    fn alternating_columns() {
        let rows: Vec<Vec<u8>> = (0..4).map(|r| vec![r, 9, r, 9]).collect();
        let g = Grid::from_rows(&rows).unwrap();
        for m in build_metastrings(&g).into_iter().filter(|m| m.axis == Axis::Horizontal) {
            let c = &m.chars;
            assert_eq!((c[0], c[1]), (c[2], c[3]));
            assert_ne!(c[0], c[1]);
        }
    }

    #[test]
    fn metacharacters_match_fragments() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for n in [8usize, 11, 16] {
            let raw: Vec<u8> = (0..n * n).map(|_| rng.gen_range(0..2)).collect();
            let g = Grid::from_raw(n, n, &raw).unwrap();
            for m in build_metastrings(&g) {
                let side = 1 << m.level;
                for p in 0..n {
                    for q in 0..n {
                        let same = match m.axis {
                            Axis::Horizontal => g.blocks_equal(m.origin, p, m.origin, q, side, 1),
                            Axis::Vertical => g.blocks_equal(p, m.origin, q, m.origin, 1, side),
                        };
                        assert_eq!(m.chars[p] == m.chars[q], same);
                    }
                }
            }
        }
    }

    #[test]
    fn transposed_view_swaps_axes() {
        let g = Grid::from_rows(&[vec![1, 2, 3], vec![4, 5, 6]]).unwrap();
        let ix = GridIndex::build(&g);
        let t = ix.transposed();
        assert_eq!((t.rows(), t.cols()), (3, 2));
        assert_eq!(t.htext(1, 0).char_at(0), ix.view().vtext(1, 0).char_at(0));
        assert!(!t.eq(0, 0, 1, 0, 1, 2));
        assert!(t.eq(2, 1, 2, 1, 1, 1));
    }
}
