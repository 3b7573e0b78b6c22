//! Thick quartics: primitive roots `R` with `R^{5,5}` anchored at each
//! position, found through skylines and the chains spanning them.

mod chains;
mod skyline;

use std::collections::BTreeSet;

use crate::blocks::floor_log;
use crate::canonical::CanonicalPair;
use crate::meta::View;
use crate::seq::Axis;

pub use chains::{chain_intersection, generate_chain, period_profile, Mode, PeriodProfile};
pub use skyline::{
    anchored_root, compute_skyline, height_candidates, skyline_heights, skyline_width, HeightCandidate, SkylineEntry,
};

/// Candidate classes at one anchor and the roots they verified to.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CandidateSet {
    pub row: usize,
    pub col: usize,
    pub pairs: Vec<CanonicalPair>,
    /// `(height, width)` of each verified root.
    pub roots: Vec<(usize, usize)>,
}

/// The position `(r + 2h, c + 2w)` at which an occurrence of `R^{5,5}` at
/// `(r, c)` is anchored.
pub fn anchor_of(r: usize, c: usize, h: usize, w: usize) -> (usize, usize) {
    (r + 2 * h, c + 2 * w)
}

/// The root of class `cls` anchored at `(i, j)`, if any.
pub fn verify_candidate(view: &View, i: usize, j: usize, cls: CanonicalPair) -> Option<(usize, usize)> {
    let CanonicalPair { a, b } = cls;
    let mut hs = Vec::with_capacity(2);
    if j + (2 << b) <= view.cols() {
        let s = view.v(j, b + 1);
        for len in [4usize << a, 3usize << a] {
            if let Some(run) = s.period_run(i, len) {
                let p = run.period;
                if floor_log(p) == a && run.start + 2 * p <= i && run.end + 1 >= i + 3 * p {
                    hs.push(p);
                }
            }
        }
    }
    let mut ws = Vec::with_capacity(2);
    if i + (2 << a) <= view.rows() {
        let s = view.h(i, a + 1);
        for len in [4usize << b, 3usize << b] {
            if let Some(run) = s.period_run(j, len) {
                let q = run.period;
                if floor_log(q) == b && run.start + 2 * q <= j && run.end + 1 >= j + 3 * q {
                    ws.push(q);
                }
            }
        }
    }
    for &h in &hs {
        for &w in &ws {
            if anchored_root(view, i, j, h, w) {
                return Some((h, w));
            }
        }
    }
    None
}

/// Classes that may hold a root anchored at `(i, j)`, each verified.
pub fn candidate_set(view: &View, i: usize, j: usize, mode: Mode) -> CandidateSet {
    let sky = compute_skyline(view, i, j);
    let mut pairs = BTreeSet::new();
    for s in &sky {
        let c = s.class();
        pairs.extend((0..=c.a).map(|a| CanonicalPair::new(a, c.b)));
        pairs.extend((0..=c.b).map(|b| CanonicalPair::new(c.a, b)));
    }
    let n = sky.len();
    let chain = |k: usize, dir: Axis| generate_chain(view, i, j, &sky[k], dir);
    let not_under = |c: &CanonicalPair, k: usize| !c.dominated_by(&sky[k].class());
    if n == 1 {
        pairs.extend(chain(0, Axis::Horizontal));
        pairs.extend(chain(0, Axis::Vertical));
    } else if n > 1 {
        pairs.extend(chain(0, Axis::Horizontal));
        pairs.extend(chain(0, Axis::Vertical).into_iter().filter(|c| (1..n).all(|t| not_under(c, t))));
        let mut marked = BTreeSet::new();
        for k in 1..n - 1 {
            pairs.extend(chain(k, Axis::Vertical).into_iter().filter(|c| not_under(c, k + 1)));
            pairs.extend(chain(k, Axis::Horizontal).into_iter().filter(|c| not_under(c, k - 1)));
            for c in chain_intersection(view, i, j, &sky[k], &sky[k - 1], mode) {
                if !marked.insert(c) {
                    break;
                }
                pairs.insert(c);
            }
        }
        pairs.extend(chain(n - 1, Axis::Horizontal));
        pairs.extend(chain(n - 1, Axis::Vertical));
    }
    let pairs: Vec<CanonicalPair> = pairs.into_iter().collect();
    let roots = pairs.iter().filter_map(|&c| verify_candidate(view, i, j, c)).collect();
    CandidateSet { row: i, col: j, pairs, roots }
}

/// Every anchored root of the view as `(anchor row, anchor col, h, w)`.
pub fn anchored_roots(view: &View, mode: Mode) -> Vec<(usize, usize, usize, usize)> {
    let mut out = Vec::new();
    for i in 0..view.rows() {
        for j in 0..view.cols() {
            out.extend(candidate_set(view, i, j, mode).roots.into_iter().map(|(h, w)| (i, j, h, w)));
        }
    }
    out
}
