use super::text::{lce, lcs, Text};

/// A maximal periodic fragment `[start, end]` (inclusive, 0-based) whose
/// smallest period is `period`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Run {
    pub start: usize,
    pub end: usize,
    pub period: usize,
}

impl Run {
    pub fn len(&self) -> usize {
        self.end + 1 - self.start
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Whether `[l, r]` lies inside the run.
    pub fn covers(&self, l: usize, r: usize) -> bool {
        self.start <= l && r <= self.end
    }
}

/// Whether the suffix at `i` is smaller than the suffix at `j` under the
/// given character order; a proper prefix counts as smaller.
fn suffix_less<T: Text + ?Sized>(t: &T, i: usize, j: usize, inverted: bool) -> bool {
    let n = t.len();
    let l = lce(t, i, j);
    if i + l == n {
        return true;
    }
    if j + l == n {
        return false;
    }
    let (ci, cj) = (t.char_at(i + l), t.char_at(j + l));
    if inverted {
        ci > cj
    } else {
        ci < cj
    }
}

/// All runs of `t`, sorted by `(start, end)`.
///
/// Every run has a Lyndon root under one of the two character orders, so
/// extending the longest Lyndon word starting at each position finds them
/// all.
pub fn compute_runs<T: Text + ?Sized>(t: &T) -> Vec<Run> {
    let n = t.len();
    let mut out = Vec::new();
    let mut stack: Vec<usize> = Vec::with_capacity(n);
    let mut next_smaller = vec![n; n];
    for inverted in [false, true] {
        stack.clear();
        for i in (0..n).rev() {
            while let Some(&top) = stack.last() {
                if suffix_less(t, top, i, inverted) {
                    break;
                }
                stack.pop();
            }
            next_smaller[i] = stack.last().copied().unwrap_or(n);
            stack.push(i);
        }
        for i in 0..n {
            let j = next_smaller[i];
            let p = j - i;
            let right = if j < n { lce(t, i, j) } else { 0 };
            let left = if i > 0 { lcs(t, i, j) } else { 0 };
            if left + right >= p {
                out.push(Run { start: i - left, end: j + right - 1, period: p });
            }
        }
    }
    out.sort_unstable();
    out.dedup();
    out
}
