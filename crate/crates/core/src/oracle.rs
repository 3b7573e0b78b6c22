//! Brute-force ground truth for small grids, written straight from the
//! definitions, plus the seeded corpus generators used by tests and the CLI.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::grid::Grid;
use crate::hash::{PrefixHash, QuarticKey};

pub const DEFAULT_CAP: usize = 32;

/// A distinct quartic with every occurrence, sorted.
#[derive(Clone, Debug)]
pub struct QuarticOccurrences {
    pub key: QuarticKey,
    pub occurrences: Vec<(usize, usize)>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ExtremeOccurrence {
    pub quartic: QuarticKey,
    pub row: usize,
    pub col: usize,
}

fn check_cap(g: &Grid, cap: usize) -> Result<()> {
    if g.rows() > cap || g.cols() > cap {
        return Err(Error::OracleCap { rows: g.rows(), cols: g.cols(), cap });
    }
    Ok(())
}

/// Every distinct quartic of `g` with all its occurrences.
pub fn brute_quartic_occurrences(g: &Grid, cap: usize) -> Result<Vec<QuarticOccurrences>> {
    check_cap(g, cap)?;
    let ph = PrefixHash::build(g);
    let mut buckets: HashMap<(usize, usize, (u64, u64)), Vec<usize>> = HashMap::new();
    let mut found: Vec<QuarticOccurrences> = Vec::new();
    for h in (2..=g.rows()).step_by(2) {
        for w in (2..=g.cols()).step_by(2) {
            let (hh, hw) = (h / 2, w / 2);
            for r in 0..=g.rows() - h {
                for c in 0..=g.cols() - w {
                    let q = ph.block(r, c, hh, hw);
                    if ph.block(r + hh, c, hh, hw) != q
                        || ph.block(r, c + hw, hh, hw) != q
                        || ph.block(r + hh, c + hw, hh, hw) != q
                    {
                        continue;
                    }
                    if !(g.blocks_equal(r, c, r + hh, c, hh, w) && g.blocks_equal(r, c, r, c + hw, h, hw)) {
                        continue;
                    }
                    let bucket = buckets.entry((h, w, ph.block(r, c, h, w))).or_default();
                    let hit = bucket.iter().copied().find(|&k| {
                        let key = found[k].key;
                        g.blocks_equal(key.row, key.col, r, c, h, w)
                    });
                    match hit {
                        Some(k) => found[k].occurrences.push((r, c)),
                        None => {
                            bucket.push(found.len());
                            let key = QuarticKey { height: h, width: w, row: r, col: c, fingerprint: ph.fingerprint(r, c, h, w) };
                            found.push(QuarticOccurrences { key, occurrences: vec![(r, c)] });
                        }
                    }
                }
            }
        }
    }
    for q in &mut found {
        q.occurrences.sort_unstable();
    }
    found.sort_by_key(|q| q.key);
    Ok(found)
}

/// Distinct quartics, each witnessed by its first occurrence in row-major
/// order.
pub fn brute_distinct_quartics(g: &Grid, cap: usize) -> Result<Vec<QuarticKey>> {
    Ok(brute_quartic_occurrences(g, cap)?.into_iter().map(|q| q.key).collect())
}

/// Occurrences not dominated (weakly in both coordinates) by another
/// occurrence of the same quartic.
pub fn extreme_positions(occ: &[(usize, usize)]) -> Vec<(usize, usize)> {
    let mut v = occ.to_vec();
    v.sort_unstable_by(|x, y| y.cmp(x));
    let mut best: Option<usize> = None;
    let mut out = Vec::new();
    for (r, c) in v {
        if best.is_none_or(|b| b < c) {
            out.push((r, c));
        }
        best = Some(best.map_or(c, |b| b.max(c)));
    }
    out.sort_unstable();
    out
}

pub fn brute_extreme_occurrences(g: &Grid, cap: usize) -> Result<Vec<ExtremeOccurrence>> {
    let mut out = Vec::new();
    for q in brute_quartic_occurrences(g, cap)? {
        for (row, col) in extreme_positions(&q.occurrences) {
            out.push(ExtremeOccurrence { quartic: q.key, row, col });
        }
    }
    Ok(out)
}

fn has_period(block: &[Vec<u32>], p: usize, vertical: bool) -> bool {
    let (h, w) = (block.len(), block[0].len());
    if vertical {
        (p..h).all(|r| block[r] == block[r - p])
    } else {
        (0..h).all(|r| (p..w).all(|c| block[r][c] == block[r][c - p]))
    }
}

/// Dimensions of the primitive root of a non-empty block.
pub fn brute_primitive_root(block: &[Vec<u32>]) -> (usize, usize) {
    let (h, w) = (block.len(), block[0].len());
    let ph = (1..=h).find(|&p| h % p == 0 && has_period(block, p, true)).unwrap();
    let pw = (1..=w).find(|&p| w % p == 0 && has_period(block, p, false)).unwrap();
    (ph, pw)
}

/// Whether a quartic with this content is thick: both exponents of its
/// primitive root are at least 5.
pub fn is_thick(block: &[Vec<u32>]) -> bool {
    let (ph, pw) = brute_primitive_root(block);
    block.len() / ph >= 5 && block[0].len() / pw >= 5
}

/// Roots `(height, width)` assigned to each anchor position.
pub type AssignMap = BTreeMap<(usize, usize), BTreeSet<(usize, usize)>>;

/// For every extreme occurrence of a thick quartic `R^{x,y}`, the aligned
/// occurrences of `R^{5,5}` inside it, keyed by anchor.
pub fn brute_assign(g: &Grid, cap: usize) -> Result<AssignMap> {
    let mut out = AssignMap::new();
    for e in brute_extreme_occurrences(g, cap)? {
        let key = e.quartic;
        let block = g.block(e.row, e.col, key.height, key.width);
        let (rh, rw) = brute_primitive_root(&block);
        let (x, y) = (key.height / rh, key.width / rw);
        if x < 5 || y < 5 {
            continue;
        }
        for k in 0..=x - 5 {
            for l in 0..=y - 5 {
                let anchor = (e.row + (k + 2) * rh, e.col + (l + 2) * rw);
                out.entry(anchor).or_default().insert((rh, rw));
            }
        }
    }
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SpanDirection {
    Horizontal,
    Vertical,
}

/// Whether the primitive block `s` spans the primitive block `t` in the
/// given direction.
pub fn brute_spans(s: &[Vec<u32>], t: &[Vec<u32>], dir: SpanDirection) -> bool {
    let (sh, sw) = (s.len(), s[0].len());
    let (th, tw) = (t.len(), t[0].len());
    match dir {
        SpanDirection::Horizontal => {
            if 3 * sh > 2 * th || sw >= tw || (2 * tw) % sw != 0 {
                return false;
            }
            (0..3 * sh).all(|r| (0..2 * tw).all(|c| t[r % th][c % tw] == s[r % sh][c % sw]))
        }
        SpanDirection::Vertical => {
            if 3 * sw > 2 * tw || sh >= th || (2 * th) % sh != 0 {
                return false;
            }
            (0..2 * th).all(|r| (0..3 * sw).all(|c| t[r % th][c % tw] == s[r % sh][c % sw]))
        }
    }
}

/// Cell contents of each key, for comparisons independent of witnesses.
pub fn content_set(g: &Grid, keys: &[QuarticKey]) -> BTreeSet<(usize, usize, Vec<Vec<u32>>)> {
    keys.iter().map(|k| (k.height, k.width, g.block(k.row, k.col, k.height, k.width))).collect()
}

/// Whether two inventories list the same distinct quartics: equal sizes,
/// equal contents and every witness a genuine quartic.
pub fn same_inventory(g: &Grid, got: &[QuarticKey], want: &[QuarticKey]) -> bool {
    let genuine = got.iter().all(|k| {
        let (hh, hw) = (k.height / 2, k.width / 2);
        k.row + k.height <= g.rows()
            && k.col + k.width <= g.cols()
            && g.blocks_equal(k.row, k.col, k.row, k.col + hw, k.height, hw)
            && g.blocks_equal(k.row, k.col, k.row + hh, k.col, hh, k.width)
    });
    genuine && got.len() == want.len() && content_set(g, got) == content_set(g, want)
}

/// Uniformly random grid over `sigma` symbols.
pub fn random_grid(rng: &mut impl Rng, rows: usize, cols: usize, sigma: u32) -> Grid {
    let raw: Vec<u32> = (0..rows * cols).map(|_| rng.gen_range(0..sigma)).collect();
    Grid::from_raw(rows, cols, &raw).unwrap()
}

pub fn constant_grid(rows: usize, cols: usize) -> Grid {
    Grid::from_raw(rows, cols, &vec![0u8; rows * cols]).unwrap()
}

/// Zeros on and above the diagonal running from the bottom-left corner to
/// the top-right one (`r + c <= n - 1`), ones elsewhere.
pub fn triangle_grid(n: usize) -> Grid {
    let raw: Vec<u8> = (0..n * n).map(|k| u8::from(k / n + k % n >= n)).collect();
    Grid::from_raw(n, n, &raw).unwrap()
}

/// A random `bh x bw` block tiled over the grid, then `flips` random cells
/// overwritten.
pub fn tiled_grid(rng: &mut impl Rng, rows: usize, cols: usize, bh: usize, bw: usize, sigma: u32, flips: usize) -> Grid {
    let tile: Vec<u32> = (0..bh * bw).map(|_| rng.gen_range(0..sigma)).collect();
    let mut raw: Vec<u32> = (0..rows * cols).map(|k| tile[(k / cols % bh) * bw + k % cols % bw]).collect();
    for _ in 0..flips {
        raw[rng.gen_range(0..rows * cols)] = rng.gen_range(0..sigma);
    }
    Grid::from_raw(rows, cols, &raw).unwrap()
}

/// A tiling whose tile is itself a perturbed tiling of a smaller block.
pub fn nested_grid(rng: &mut impl Rng, n: usize, sigma: u32) -> Grid {
    let (ih, iw) = (rng.gen_range(1..=2), rng.gen_range(1..=2));
    let (oh, ow) = (ih * rng.gen_range(3..=5) + rng.gen_range(0..2), iw * rng.gen_range(3..=5) + rng.gen_range(0..2));
    let inner = tiled_grid(rng, oh, ow, ih, iw, sigma, 1);
    let raw: Vec<u32> = (0..n * n).map(|k| inner.get(k / n % oh, k % n % ow)).collect();
    Grid::from_raw(n, n, &raw).unwrap()
}

/// A named corpus grid.
#[derive(Clone, Debug)]
pub struct CorpusGrid {
    pub name: String,
    pub grid: Grid,
}

/// Deterministic corpus of `count` square grids with sides in
/// `[min_n, max_n]`, cycling through the generator families.
pub fn corpus(seed: u64, count: usize, min_n: usize, max_n: usize) -> Vec<CorpusGrid> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|k| {
            let n = rng.gen_range(min_n..=max_n);
            let sigma = rng.gen_range(2..=4);
            let (name, grid) = match k % 10 {
                0..=3 => (format!("random-{n}-s{sigma}"), random_grid(&mut rng, n, n, sigma)),
                4 => {
                    let g = random_grid(&mut rng, n, n, 2);
                    (format!("binary-{n}"), g)
                }
                5 | 6 => {
                    let (bh, bw) = (rng.gen_range(1..=4), rng.gen_range(1..=4));
                    let flips = rng.gen_range(0..=3);
                    (format!("tiled-{n}-{bh}x{bw}-f{flips}"), tiled_grid(&mut rng, n, n, bh, bw, sigma, flips))
                }
                7 | 8 => (format!("nested-{n}"), nested_grid(&mut rng, n, sigma)),
                _ => {
                    if rng.gen_bool(0.5) {
                        (format!("triangle-{n}"), triangle_grid(n))
                    } else {
                        (format!("constant-{n}"), constant_grid(n, n))
                    }
                }
            };
            CorpusGrid { name, grid }
        })
        .collect()
}
