//! Grouping anchored roots by content and composing them into thick
//! quartics `R^{x,y}`.

use std::collections::HashMap;

use crate::blocks::BlockNames;
use crate::hash::{PrefixHash, QuarticKey};

/// All found occurrences of `R^{5,5}` for one primitive root `R`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootGroup {
    pub height: usize,
    pub width: usize,
    /// Top-left corners of the `R^{5,5}` occurrences, sorted.
    pub occurrences: Vec<(usize, usize)>,
}

/// For each rectangle height `x` (index `x - 1`), the widest all-white
/// `x x y` rectangle in any residue class, with its top-left in grid
/// coordinates.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Rectangles {
    pub widest: Vec<(usize, (usize, usize))>,
}

impl Rectangles {
    /// Largest `y` with an all-white `x x y` rectangle, or 0.
    pub fn y_max(&self, x: usize) -> usize {
        self.widest.get(x.wrapping_sub(1)).map_or(0, |e| e.0)
    }
}

/// Root dimensions and exact content.
type RootKey = (usize, usize, [u32; 4]);

/// Groups anchored roots `(anchor row, anchor col, h, w)` by root content.
/// Groups come out sorted by their smallest occurrence.
pub fn group_roots(names: &BlockNames, anchored: &[(usize, usize, usize, usize)]) -> Vec<RootGroup> {
    let mut keyed: Vec<(RootKey, (usize, usize))> = anchored
        .iter()
        .map(|&(i, j, h, w)| {
            let (r, c) = (i - 2 * h, j - 2 * w);
            ((h, w, names.content_id(r, c, h, w)), (r, c))
        })
        .collect();
    keyed.sort_unstable();
    keyed.dedup();
    let mut out: Vec<RootGroup> = Vec::new();
    let mut last = None;
    for (key, pos) in keyed {
        if last != Some(key) {
            out.push(RootGroup { height: key.0, width: key.1, occurrences: Vec::new() });
            last = Some(key);
        }
        out.last_mut().unwrap().occurrences.push(pos);
    }
    out.sort_unstable_by_key(|g| (g.occurrences[0], g.height, g.width));
    out
}

/// Largest all-white rectangles per height, over every residue class of
/// the group's occurrences.
pub fn maximal_rectangles(group: &RootGroup) -> Rectangles {
    let (h, w) = (group.height, group.width);
    let mut classes: HashMap<(usize, usize), Vec<(usize, usize)>> = HashMap::new();
    for &(r, c) in &group.occurrences {
        classes.entry((r % h, c % w)).or_default().push((r / h, c / w));
    }
    let mut widest: Vec<(usize, (usize, usize))> = Vec::new();
    let mut residues: Vec<_> = classes.into_iter().collect();
    residues.sort_unstable();
    for ((rr, rc), mut cells) in residues {
        cells.sort_unstable();
        let to_grid = |p: usize, q: usize| (p * h + rr, q * w + rc);
        // towers[k] is the tower height of cells[k]; `prev` spans the
        // previous row of cells
        let mut towers = vec![0usize; cells.len()];
        let mut prev = 0..0;
        let mut k = 0;
        while k < cells.len() {
            let row = cells[k].0;
            let start = k;
            while k < cells.len() && cells[k].0 == row {
                k += 1;
            }
            let mut pi = prev.start;
            for t in start..k {
                let col = cells[t].1;
                while pi < prev.end && (cells[pi].0 + 1 != row || cells[pi].1 < col) {
                    pi += 1;
                }
                let above = pi < prev.end && cells[pi].0 + 1 == row && cells[pi].1 == col;
                towers[t] = if above { towers[pi] + 1 } else { 1 };
            }
            // maximal runs of consecutive columns, then nearest smaller
            // towers on both sides within each run
            let mut s = start;
            while s < k {
                let mut e = s + 1;
                while e < k && cells[e].1 == cells[e - 1].1 + 1 {
                    e += 1;
                }
                let mut stack: Vec<usize> = Vec::new();
                for t in s..=e {
                    let cur = if t < e { towers[t] } else { 0 };
                    while let Some(&top) = stack.last() {
                        if towers[top] < cur {
                            break;
                        }
                        stack.pop();
                        let left = stack.last().map_or(s, |&l| l + 1);
                        let x = towers[top];
                        let y = t - left;
                        if x == 0 {
                            continue;
                        }
                        if widest.len() < x {
                            widest.resize(x, (0, (0, 0)));
                        }
                        let top_left = to_grid(row + 1 - x, cells[left].1);
                        let slot = &mut widest[x - 1];
                        if y > slot.0 || (y == slot.0 && top_left < slot.1) {
                            *slot = (y, top_left);
                        }
                    }
                    stack.push(t);
                }
                s = e;
            }
            prev = start..k;
        }
    }
    // a taller rectangle contains shorter ones of the same width
    for x in (1..widest.len()).rev() {
        let taller = widest[x];
        let slot = &mut widest[x - 1];
        if taller.0 > slot.0 {
            *slot = taller;
        }
    }
    Rectangles { widest }
}

/// Thick quartics `R^{x,y}` with even `x, y >= 6` composable from the
/// group's occurrences.
pub fn enumerate_thick_quartics(group: &RootGroup, rects: &Rectangles, hash: &PrefixHash) -> Vec<QuarticKey> {
    let (h, w) = (group.height, group.width);
    let mut out = Vec::new();
    for x in (6..).step_by(2) {
        if x - 4 > rects.widest.len() {
            break;
        }
        let (ymax, (r, c)) = rects.widest[x - 5];
        for y in (6..=ymax + 4).step_by(2) {
            let (height, width) = (x * h, y * w);
            out.push(QuarticKey { height, width, row: r, col: c, fingerprint: hash.fingerprint(r, c, height, width) });
        }
    }
    out
}

/// Dedups by exact content, keeping the smallest witness, and sorts by
/// `(height, width, row, col)`.
pub fn merge_inventory(names: &BlockNames, keys: impl IntoIterator<Item = QuarticKey>) -> Vec<QuarticKey> {
    let mut best: HashMap<(usize, usize, [u32; 4]), QuarticKey> = HashMap::new();
    for k in keys {
        let id = (k.height, k.width, names.content_id(k.row, k.col, k.height, k.width));
        best.entry(id)
            .and_modify(|cur| {
                if (k.row, k.col) < (cur.row, cur.col) {
                    *cur = k;
                }
            })
            .or_insert(k);
    }
    let mut out: Vec<QuarticKey> = best.into_values().collect();
    out.sort_unstable();
    out
}
