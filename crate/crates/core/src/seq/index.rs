use super::runs::{compute_runs, Run};
use super::text::Text;
use crate::blocks::floor_log;
use crate::error::{Error, Result};

/// Arithmetic progression `first, first + diff, ..` of `count` positions.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Progression {
    pub first: usize,
    pub diff: usize,
    pub count: usize,
}

impl Progression {
    pub fn last(&self) -> usize {
        self.first + (self.count - 1) * self.diff
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.count).map(move |k| self.first + k * self.diff)
    }
}

/// Per-string query structure: runs, primitively rooted squares at every
/// position and the overhang bitvectors.
///
/// A square `U^2` with `U` primitive starting at `x` lies in exactly one run
/// of period `|U|`, so each position stores the list of runs (sorted by
/// period) in which such a square starts.
pub struct SeqIndex {
    len: usize,
    runs: Vec<Run>,
    offsets: Vec<u32>,
    squares: Vec<(u32, u32)>,
    beta0: Vec<u32>,
    beta2: Option<Vec<u32>>,
}

impl SeqIndex {
    /// Builds the index; `with_beta2` additionally materializes the bits
    /// with overhang 2.
    pub fn build<T: Text + ?Sized>(t: &T, with_beta2: bool) -> Self {
        let len = t.len();
        let runs = compute_runs(t);
        let mut counts = vec![0u32; len + 1];
        for r in &runs {
            for x in r.start..=r.end + 1 - 2 * r.period {
                counts[x + 1] += 1;
            }
        }
        for k in 1..=len {
            counts[k] += counts[k - 1];
        }
        let offsets = counts.clone();
        let mut squares = vec![(0u32, 0u32); counts[len] as usize];
        for (idx, r) in runs.iter().enumerate() {
            for x in r.start..=r.end + 1 - 2 * r.period {
                squares[counts[x] as usize] = (r.period as u32, idx as u32);
                counts[x] += 1;
            }
        }
        for x in 0..len {
            squares[offsets[x] as usize..offsets[x + 1] as usize].sort_unstable();
        }
        let beta0 = sweep_beta(len, &runs, 0);
        let beta2 = with_beta2.then(|| sweep_beta(len, &runs, 2));
        SeqIndex { len, runs, offsets, squares, beta0, beta2 }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn runs(&self) -> &[Run] {
        &self.runs
    }

    pub fn run(&self, idx: usize) -> &Run {
        &self.runs[idx]
    }

    /// `(period, run)` for every primitively rooted square starting at `x`,
    /// by increasing period.
    #[inline]
    pub fn squares_at(&self, x: usize) -> impl Iterator<Item = (usize, &Run)> + '_ {
        self.squares[self.offsets[x] as usize..self.offsets[x + 1] as usize]
            .iter()
            .map(|&(p, r)| (p as usize, &self.runs[r as usize]))
    }

    /// The run carrying the smallest period of `s[l..l+len)` when that
    /// period is at most `len / 2`.
    #[inline]
    pub fn period_run(&self, l: usize, len: usize) -> Option<&Run> {
        if len < 2 || l + len > self.len {
            return None;
        }
        let r = l + len - 1;
        for (p, run) in self.squares_at(l) {
            if 2 * p > len {
                break;
            }
            if run.end >= r {
                return Some(run);
            }
        }
        None
    }

    /// Smallest period of `s[l..l+len)` if it is at most `len / 2`.
    #[inline]
    pub fn period(&self, l: usize, len: usize) -> Option<usize> {
        self.period_run(l, len).map(|r| r.period)
    }

    /// Smallest period of `s[l..=r]` when the fragment is periodic.
    pub fn two_period(&self, l: usize, r: usize) -> Result<Option<usize>> {
        self.check(l, r)?;
        Ok(self.period(l, r + 1 - l))
    }

    /// The run with the same period containing the periodic `s[l..=r]`.
    pub fn periodic_extension(&self, l: usize, r: usize) -> Result<Run> {
        self.check(l, r)?;
        self.period_run(l, r + 1 - l)
            .copied()
            .ok_or(Error::NotPeriodic { start: l, end: r })
    }

    fn check(&self, l: usize, r: usize) -> Result<()> {
        if l > r || r >= self.len {
            return Err(Error::Range { start: l, end: r, len: self.len });
        }
        Ok(())
    }

    /// Length of the longest square starting at `x` (0 if none).
    pub fn longest_square(&self, x: usize) -> usize {
        self.squares_at(x)
            .map(|(p, run)| 2 * p * ((run.end + 1 - x) / (2 * p)))
            .max()
            .unwrap_or(0)
    }

    pub fn longest_square_index(&self) -> Vec<usize> {
        (0..self.len).map(|x| self.longest_square(x)).collect()
    }

    /// Lengths of the primitively rooted squares at `x` with length in
    /// `[2^level, 2^(level+1))`; there are at most two.
    pub fn primitive_squares(&self, x: usize, level: u32) -> impl Iterator<Item = usize> + '_ {
        self.squares_at(x)
            .map(|(p, _)| 2 * p)
            .filter(move |&l| floor_log(l) == level)
    }

    /// Bit `b` set iff `s[x - k|U| .. x + 3|U|) = U^(k+3)` for a primitive
    /// `U` with `floor(log |U|) = b`.
    #[inline]
    pub fn beta(&self, x: usize, k: u32) -> u32 {
        match k {
            0 => self.beta0[x],
            2 => self.beta2.as_ref().expect("overhang-2 bits not built")[x],
            _ => panic!("unsupported overhang {k}"),
        }
    }

    pub fn has_beta2(&self) -> bool {
        self.beta2.is_some()
    }

    /// Occurrences of `s[pat]` that lie inside `txt`, grouped into
    /// progressions whose difference is the smallest period of the pattern.
    pub fn ipm<T: Text + ?Sized>(&self, t: &T, pat: (usize, usize), txt: (usize, usize)) -> Vec<Progression> {
        let (ps, m) = pat;
        let (ts, tl) = txt;
        let mut out: Vec<Progression> = Vec::new();
        if m == 0 || m > tl {
            return out;
        }
        let last_start = ts + tl - m;
        if let Some(p) = self.period(ps, m) {
            let mut x = ts;
            while x <= last_start {
                if !t.eq(ps, x, m) {
                    x += 1;
                    continue;
                }
                let run = self.period_run(x, m).expect("periodic occurrence lies in a run");
                let stop = run.end.min(ts + tl - 1);
                let count = (stop + 1 - m - x) / p + 1;
                out.push(Progression { first: x, diff: p, count });
                x = (x + (count - 1) * p + 1).max(run.end + 2 - m);
            }
            return out;
        }
        let q = (m / 2 + 1..m).find(|&d| t.eq(ps, ps + d, m - d)).unwrap_or(m);
        for x in ts..=last_start {
            if !t.eq(ps, x, m) {
                continue;
            }
            match out.last_mut() {
                Some(g) if g.last() + q == x => g.count += 1,
                _ => out.push(Progression { first: x, diff: q, count: 1 }),
            }
        }
        out
    }
}

fn sweep_beta(len: usize, runs: &[Run], k: usize) -> Vec<u32> {
    let mut events: Vec<(usize, u32, i32)> = Vec::new();
    for r in runs {
        let p = r.period;
        if r.len() < (k + 3) * p {
            continue;
        }
        let bit = floor_log(p);
        events.push((r.start + k * p, bit, 1));
        events.push((r.end + 2 - 3 * p, bit, -1));
    }
    events.sort_unstable();
    let mut active = [0i32; 32];
    let mut mask = 0u32;
    let mut out = vec![0u32; len];
    let mut e = 0;
    for (x, slot) in out.iter_mut().enumerate() {
        while e < events.len() && events[e].0 == x {
            let (_, bit, d) = events[e];
            active[bit as usize] += d;
            if active[bit as usize] > 0 {
                mask |= 1 << bit;
            } else {
                mask &= !(1 << bit);
            }
            e += 1;
        }
        *slot = mask;
    }
    out
}
