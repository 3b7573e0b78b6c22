//! Thin quartics: forms `P^{2y,2}` and `P^{2y,4}` found on a view, and the
//! transposed forms found by running the same procedure on the transposed
//! view.

use crate::blocks::floor_log;
use crate::canonical::CanonicalPair;
use crate::meta::View;

/// More occurrences than this switch to the periodic case analysis.
const FEW_OCCURRENCES: usize = 10;

/// A verified quartic window `height x width` with top-left `(row, col)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ThinCandidate {
    pub row: usize,
    pub col: usize,
    pub height: usize,
    pub width: usize,
}

/// A superset of the classes `(a, b)` whose quartics may have an extreme
/// occurrence at `(i, j)`.
///
/// With `b_a = floor(log l_a)` for the longest square `l_a` at `j` in the
/// horizontal metastring of height `2^a` at row `i`, the staircase under the
/// points `(a, b_a)` is shifted down by up to two in each coordinate.
pub fn candidate_canonical_sets(view: &View, i: usize, j: usize) -> Vec<CanonicalPair> {
    let mut levels = vec![0u32];
    for a in 1..=view.max_a() {
        if i + (1 << a) > view.rows() {
            break;
        }
        let l = view.h(i, a).longest_square(j);
        if l == 0 {
            break;
        }
        levels.push(floor_log(l));
    }
    let top = levels.len() as u32 - 1;
    let b_at = |a: u32| levels.get(a as usize).copied().unwrap_or(0);
    let mut out = Vec::new();
    for a in 1..=top {
        let lo = b_at(a + 3).saturating_sub(2).max(1);
        for b in lo..=b_at(a) {
            out.push(CanonicalPair::new(a, b));
        }
    }
    out
}

/// Widths of the squares `U^2` (at most two) and the fourth power `U^4`
/// (at most one) with primitive `U` at `j` in the strip of height `2^a` at
/// row `i`, restricted to `[2^b, 2^(b+1))`.
pub fn candidate_widths(view: &View, i: usize, j: usize, a: u32, b: u32) -> Vec<usize> {
    let s = view.h(i, a);
    let mut out: Vec<usize> = s.primitive_squares(j, b).collect();
    if let Some(run) = s.period_run(j, 1 << b) {
        let p = run.period;
        if floor_log(4 * p) == b && run.end + 1 >= j + 4 * p {
            out.push(4 * p);
        }
    }
    out.sort_unstable();
    out.dedup();
    out
}

/// Decides whether the `h x w` window at `(i, j)` is a quartic with four
/// half-equalities on strips of side `2^floor(log)`.
pub fn verify_quartic(view: &View, i: usize, j: usize, h: usize, w: usize) -> bool {
    if h < 2 || w < 2 || h % 2 == 1 || w % 2 == 1 || i + h > view.rows() || j + w > view.cols() {
        return false;
    }
    let (sa, sb) = (1usize << floor_log(h), 1usize << floor_log(w));
    let (hh, hw) = (h / 2, w / 2);
    view.eq(i, j, i + hh, j, hh, sb)
        && view.eq(i, j + w - sb, i + hh, j + w - sb, hh, sb)
        && view.eq(i, j, i, j + hw, sa, hw)
        && view.eq(i + h - sa, j, i + h - sa, j + hw, sa, hw)
}

/// Heights worth checking for width `w` in class `(a, b)` at `(i, j)`.
fn candidate_heights(view: &View, i: usize, j: usize, a: u32, b: u32, w: usize) -> Vec<usize> {
    let g_len = 1usize << (a - 1);
    let text_len = (1usize << (a + 1)).min(view.rows() - i);
    let vs = view.v(j, b);
    let vt = view.vtext(j, b);
    let progs = vs.ipm(&vt, (i, g_len), (i, text_len));
    let total: usize = progs.iter().map(|g| g.count).sum();
    let mut out = Vec::new();
    if total <= FEW_OCCURRENCES {
        out.extend(progs.iter().flat_map(|g| g.iter().collect::<Vec<_>>()).filter(|&x| x > i).map(|x| 2 * (x - i)));
        return out;
    }
    let head = progs[0];
    for g in &progs[1..] {
        out.push(2 * (g.first - i));
        out.push(2 * (g.last() - head.last()));
    }
    // the whole quartic shares the vertical period of G: only the tallest
    // power starting at i can be extreme
    let p = head.diff;
    let right = j + w - (1 << b);
    let reach = |col: usize| {
        view.v(col, b)
            .period_run(i, 2 * p)
            .filter(|r| p % r.period == 0)
            .map(|r| r.end + 1)
    };
    if let (Some(t1), Some(t2)) = (reach(j), reach(right)) {
        let span = t1.min(t2) - i;
        let y = span / (2 * p);
        if y > 0 {
            out.push(2 * y * p);
        }
    }
    out
}

/// Verified quartics of width `w` in class `(a, b)` at `(i, j)`.
pub fn thin_quartics_at(view: &View, i: usize, j: usize, a: u32, b: u32, w: usize) -> Vec<ThinCandidate> {
    let mut hs = candidate_heights(view, i, j, a, b, w);
    hs.retain(|&h| h > 0 && floor_log(h) == a);
    hs.sort_unstable();
    hs.dedup();
    hs.into_iter()
        .filter(|&h| verify_quartic(view, i, j, h, w))
        .map(|h| ThinCandidate { row: i, col: j, height: h, width: w })
        .collect()
}

/// All thin candidates at `(i, j)` of the view, grouped by class.
pub fn thin_at(view: &View, i: usize, j: usize) -> Vec<(CanonicalPair, Vec<ThinCandidate>)> {
    let mut out = Vec::new();
    for cls in candidate_canonical_sets(view, i, j) {
        if j + (1 << cls.b) > view.cols() {
            continue;
        }
        let mut found = Vec::new();
        for w in candidate_widths(view, i, j, cls.a, cls.b) {
            found.extend(thin_quartics_at(view, i, j, cls.a, cls.b, w));
        }
        if !found.is_empty() {
            out.push((cls, found));
        }
    }
    out
}

/// Every thin candidate found on `view`, in grid coordinates.
pub fn collect_thin(view: &View) -> Vec<ThinCandidate> {
    let mut out = Vec::new();
    for i in 0..view.rows() {
        for j in 0..view.cols() {
            for (_, found) in thin_at(view, i, j) {
                out.extend(found.into_iter().map(|c| to_grid(view, c)));
            }
        }
    }
    out
}

/// Maps a candidate found on a view back to grid coordinates.
pub fn to_grid(view: &View, c: ThinCandidate) -> ThinCandidate {
    let (row, col) = view.to_grid(c.row, c.col);
    let (height, width) = view.dims_to_grid(c.height, c.width);
    ThinCandidate { row, col, height, width }
}
