use crate::blocks::BlockNames;
use crate::grid::Grid;

/// A 1D string with constant-time fragment equality.
pub trait Text {
    fn len(&self) -> usize;

    fn is_empty(&self) -> bool {
        self.len() == 0
    }

    fn char_at(&self, x: usize) -> u32;

    /// Whether `s[x..x+len) == s[y..y+len)`.
    fn eq(&self, x: usize, y: usize, len: usize) -> bool;
}

/// Longest common prefix of the suffixes starting at `x` and `y`.
pub fn lce<T: Text + ?Sized>(t: &T, x: usize, y: usize) -> usize {
    let n = t.len();
    let cap = n - x.max(y);
    let mut l = 0;
    // most extensions are short; probe a few characters directly
    while l < cap && l < 8 {
        if t.char_at(x + l) != t.char_at(y + l) {
            return l;
        }
        l += 1;
    }
    if l == cap {
        return l;
    }
    let mut step = 8;
    let mut good = l;
    let mut bad = cap + 1;
    while good + step <= cap {
        if t.eq(x, y, good + step) {
            good += step;
            step *= 2;
        } else {
            bad = good + step;
            break;
        }
    }
    while bad - good > 1 {
        let mid = good + (bad - good) / 2;
        if mid <= cap && t.eq(x, y, mid) {
            good = mid;
        } else {
            bad = mid;
        }
    }
    good
}

/// Longest common suffix of `s[..x)` and `s[..y)`.
pub fn lcs<T: Text + ?Sized>(t: &T, x: usize, y: usize) -> usize {
    let cap = x.min(y);
    let mut l = 0;
    while l < cap && l < 8 {
        if t.char_at(x - 1 - l) != t.char_at(y - 1 - l) {
            return l;
        }
        l += 1;
    }
    if l == cap {
        return l;
    }
    let mut step = 8;
    let mut good = l;
    let mut bad = cap + 1;
    while good + step <= cap {
        if t.eq(x - good - step, y - good - step, good + step) {
            good += step;
            step *= 2;
        } else {
            bad = good + step;
            break;
        }
    }
    while bad - good > 1 {
        let mid = good + (bad - good) / 2;
        if mid <= cap && t.eq(x - mid, y - mid, mid) {
            good = mid;
        } else {
            bad = mid;
        }
    }
    good
}

/// A standalone string indexed by doubling names.
pub struct PlainText {
    names: BlockNames,
}

impl PlainText {
    /// `s` must be non-empty.
    pub fn new(s: &[u32]) -> Self {
        let g = Grid::from_raw(1, s.len(), s).expect("non-empty string");
        PlainText { names: BlockNames::build(&g) }
    }

    pub fn from_str(s: &str) -> Self {
        let v: Vec<u32> = s.bytes().map(u32::from).collect();
        PlainText::new(&v)
    }
}

impl Text for PlainText {
    fn len(&self) -> usize {
        self.names.cols()
    }

    fn char_at(&self, x: usize) -> u32 {
        self.names.name(0, 0, 0, x)
    }

    fn eq(&self, x: usize, y: usize, len: usize) -> bool {
        self.names.eq(0, x, 0, y, 1, len)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Axis {
    Horizontal,
    Vertical,
}

/// A metastring viewed through the block names of its grid.
///
/// `Horizontal` at origin `i`, level `a`: one metacharacter per column of
/// rows `[i, i + 2^a)`. `Vertical` at origin `j`, level `b`: one per row of
/// columns `[j, j + 2^b)`.
#[derive(Clone, Copy)]
pub struct MetaText<'a> {
    pub names: &'a BlockNames,
    pub axis: Axis,
    pub origin: usize,
    pub level: u32,
}

impl Text for MetaText<'_> {
    fn len(&self) -> usize {
        match self.axis {
            Axis::Horizontal => self.names.cols(),
            Axis::Vertical => self.names.rows(),
        }
    }

    #[inline]
    fn char_at(&self, x: usize) -> u32 {
        match self.axis {
            Axis::Horizontal => self.names.name(self.level, 0, self.origin, x),
            Axis::Vertical => self.names.name(0, self.level, x, self.origin),
        }
    }

    #[inline]
    fn eq(&self, x: usize, y: usize, len: usize) -> bool {
        let side = 1usize << self.level;
        match self.axis {
            Axis::Horizontal => self.names.eq(self.origin, x, self.origin, y, side, len),
            Axis::Vertical => self.names.eq(x, self.origin, y, self.origin, len, side),
        }
    }
}
