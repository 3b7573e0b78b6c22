//! End-to-end enumeration: index, thin engine on both views, thick engine,
//! assembly and merge.

use std::time::{Duration, Instant};

use rayon::prelude::*;

use crate::assembly::{enumerate_thick_quartics, group_roots, maximal_rectangles, merge_inventory};
use crate::error::{Error, Result};
use crate::grid::Grid;
use crate::hash::{PrefixHash, QuarticKey};
use crate::meta::{GridIndex, View};
use crate::thick::{candidate_set, Mode};
use crate::thin::{thin_at, to_grid};

#[derive(Clone, Copy, Debug, Default)]
pub struct Options {
    /// Worker threads; 0 uses the global pool.
    pub threads: usize,
    pub mode: Mode,
}

#[derive(Clone, Copy, Debug, Default)]
pub struct Timings {
    pub index: Duration,
    pub thin: Duration,
    pub thick: Duration,
    pub assembly: Duration,
}

impl Timings {
    pub fn total(&self) -> Duration {
        self.index + self.thin + self.thick + self.assembly
    }
}

/// The distinct quartics of a grid plus per-phase counters.
#[derive(Clone, Debug, Default)]
pub struct Inventory {
    /// Sorted by `(height, width, row, col)`.
    pub quartics: Vec<QuarticKey>,
    pub thin_candidates: usize,
    pub anchored_roots: usize,
    pub root_groups: usize,
    pub timings: Timings,
}

fn thin_keys(view: &View, hash: &PrefixHash) -> Vec<QuarticKey> {
    (0..view.rows())
        .into_par_iter()
        .flat_map_iter(|i| {
            (0..view.cols()).flat_map(move |j| {
                thin_at(view, i, j).into_iter().flat_map(|(_, found)| found).map(|c| {
                    let c = to_grid(view, c);
                    QuarticKey {
                        height: c.height,
                        width: c.width,
                        row: c.row,
                        col: c.col,
                        fingerprint: hash.fingerprint(c.row, c.col, c.height, c.width),
                    }
                })
            })
        })
        .collect()
}

fn run(g: &Grid, mode: Mode) -> Inventory {
    let mut timings = Timings::default();
    let t0 = Instant::now();
    let ix = GridIndex::build(g);
    let hash = PrefixHash::build(g);
    timings.index = t0.elapsed();

    let t0 = Instant::now();
    let mut keys = thin_keys(&ix.view(), &hash);
    keys.extend(thin_keys(&ix.transposed(), &hash));
    let thin_candidates = keys.len();
    timings.thin = t0.elapsed();

    let t0 = Instant::now();
    let view = ix.view();
    let anchored: Vec<(usize, usize, usize, usize)> = (0..view.rows())
        .into_par_iter()
        .flat_map_iter(|i| {
            (0..view.cols()).flat_map(move |j| {
                candidate_set(&view, i, j, mode).roots.into_iter().map(move |(h, w)| (i, j, h, w))
            })
        })
        .collect();
    timings.thick = t0.elapsed();

    let t0 = Instant::now();
    let groups = group_roots(ix.names(), &anchored);
    let thick: Vec<QuarticKey> = groups
        .par_iter()
        .flat_map_iter(|grp| enumerate_thick_quartics(grp, &maximal_rectangles(grp), &hash))
        .collect();
    keys.extend(thick);
    let quartics = merge_inventory(ix.names(), keys);
    timings.assembly = t0.elapsed();

    log::debug!(
        "{}x{}: {} thin candidates, {} anchored roots, {} quartics",
        g.rows(),
        g.cols(),
        thin_candidates,
        anchored.len(),
        quartics.len()
    );
    Inventory { quartics, thin_candidates, anchored_roots: anchored.len(), root_groups: groups.len(), timings }
}

/// Enumerates every distinct quartic of `g`. The result does not depend on
/// the thread count or the mode.
pub fn enumerate(g: &Grid, opts: &Options) -> Result<Inventory> {
    if opts.threads == 0 {
        return Ok(run(g, opts.mode));
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(opts.threads)
        .build()
        .map_err(|e| Error::Threads(e.to_string()))?;
    Ok(pool.install(|| run(g, opts.mode)))
}

pub fn count_quartics(g: &Grid) -> usize {
    run(g, Mode::Reference).quartics.len()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::{brute_distinct_quartics, constant_grid};

    #[test]
    fn constant_grid_count() {
        for n in [1usize, 2, 5, 8, 13] {
            assert_eq!(count_quartics(&constant_grid(n, n)), (n / 2) * (n / 2));
        }
    }

    #[test]
    fn small_grid_matches_oracle() {
        let g = Grid::from_rows(&[vec![1, 2, 1, 2], vec![3, 3, 3, 3], vec![1, 2, 1, 2], vec![3, 3, 3, 3]]).unwrap();
        let inv = enumerate(&g, &Options { threads: 2, mode: Mode::Tabulated }).unwrap();
        assert!(crate::oracle::same_inventory(&g, &inv.quartics, &brute_distinct_quartics(&g, 8).unwrap()));
    }
}
