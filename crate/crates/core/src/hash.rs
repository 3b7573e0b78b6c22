//! 2D polynomial fingerprints and the identity of a reported quartic.

use std::fmt;

use crate::grid::Grid;

const M1: u64 = (1 << 61) - 1;
const M2: u64 = 1_000_000_007;
const P1: u64 = 1_000_003;
const Q1: u64 = 998_244_353;
const P2: u64 = 131_071;
const Q2: u64 = 65_537;

#[inline]
fn mul(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

struct Table {
    m: u64,
    pow_r: Vec<u64>,
    pow_c: Vec<u64>,
    /// `pre[r][c]` hashes the block `[0, r) x [0, c)`.
    pre: Vec<u64>,
    stride: usize,
}

impl Table {
    fn build(g: &Grid, m: u64, pr: u64, pc: u64) -> Self {
        let (rows, cols) = (g.rows(), g.cols());
        let powers = |base: u64, n: usize| {
            let mut v = vec![1u64; n + 1];
            for k in 1..=n {
                v[k] = mul(v[k - 1], base, m);
            }
            v
        };
        let stride = cols + 1;
        let mut pre = vec![0u64; (rows + 1) * stride];
        for r in 0..rows {
            let mut acc = 0u64;
            for c in 0..cols {
                acc = (mul(acc, pc, m) + g.get(r, c) as u64) % m;
                let above = mul(pre[r * stride + c + 1], pr, m);
                pre[(r + 1) * stride + c + 1] = (above + acc) % m;
            }
        }
        Table { m, pow_r: powers(pr, rows), pow_c: powers(pc, cols), pre, stride }
    }

    fn block(&self, r: usize, c: usize, h: usize, w: usize) -> u64 {
        let m = self.m;
        let at = |x: usize, y: usize| self.pre[x * self.stride + y];
        let (ph, pw) = (self.pow_r[h], self.pow_c[w]);
        let full = at(r + h, c + w);
        let top = mul(at(r, c + w), ph, m);
        let left = mul(at(r + h, c), pw, m);
        let corner = mul(mul(at(r, c), ph, m), pw, m);
        ((full + corner) % m + 2 * m - top - left) % m
    }
}

/// Constant-time hashes of arbitrary blocks under two independent moduli.
pub struct PrefixHash {
    t1: Table,
    t2: Table,
}

impl PrefixHash {
    pub fn build(g: &Grid) -> Self {
        PrefixHash { t1: Table::build(g, M1, P1, Q1), t2: Table::build(g, M2, P2, Q2) }
    }

    pub fn block(&self, r: usize, c: usize, h: usize, w: usize) -> (u64, u64) {
        (self.t1.block(r, c, h, w), self.t2.block(r, c, h, w))
    }

    /// Single-word digest of the block.
    pub fn fingerprint(&self, r: usize, c: usize, h: usize, w: usize) -> u64 {
        let (x, y) = self.block(r, c, h, w);
        x.rotate_left(3) ^ y.wrapping_mul(0x9E37_79B9_7F4A_7C15)
    }
}

/// One distinct quartic: its dimensions, a content fingerprint and the
/// top-left corner of one occurrence (0-based).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct QuarticKey {
    pub height: usize,
    pub width: usize,
    pub row: usize,
    pub col: usize,
    pub fingerprint: u64,
}

impl QuarticKey {
    pub fn fingerprint_hex(&self) -> String {
        format!("{:016x}", self.fingerprint)
    }
}

impl fmt::Display for QuarticKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}x{} at ({}, {}) [{}]", self.height, self.width, self.row + 1, self.col + 1, self.fingerprint_hex())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn equal_blocks_hash_equal() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let raw: Vec<u8> = (0..100).map(|_| rng.gen_range(0..2)).collect();
        let g = Grid::from_raw(10, 10, &raw).unwrap();
        let ph = PrefixHash::build(&g);
        for _ in 0..2000 {
            let (h, w) = (rng.gen_range(1..=10), rng.gen_range(1..=10));
            let (r1, r2) = (rng.gen_range(0..=10 - h), rng.gen_range(0..=10 - h));
            let (c1, c2) = (rng.gen_range(0..=10 - w), rng.gen_range(0..=10 - w));
            let same = g.blocks_equal(r1, c1, r2, c2, h, w);
            assert_eq!(ph.block(r1, c1, h, w) == ph.block(r2, c2, h, w), same);
        }
    }
}
