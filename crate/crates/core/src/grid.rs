//! The 2D string itself: loading, alphabet renaming and transposition.

use std::io::Read;

use crate::error::{Error, Result};

/// Input encodings accepted by [`load_grid`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GridFormat {
    /// One line per row, one printable ASCII symbol (33..=126) per cell.
    Char,
    /// A `rows cols` header followed by `rows * cols` non-negative integers.
    Int,
}

/// A `rows x cols` array of symbol ids stored row-major.
///
/// Grids produced by [`load_grid`] or [`Grid::from_raw`] carry dense ids in
/// `1..=rows*cols`, assigned by sorted order of the raw symbols.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Grid {
    rows: usize,
    cols: usize,
    cells: Vec<u32>,
}

impl Grid {
    /// Builds a grid from raw symbols and renames them to dense ranks.
    pub fn from_raw<T: Ord + Copy>(rows: usize, cols: usize, raw: &[T]) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::Format { line: 0, msg: "grid must be non-empty".into() });
        }
        if raw.len() != rows * cols {
            return Err(Error::Format {
                line: 0,
                msg: format!("expected {} cells, found {}", rows * cols, raw.len()),
            });
        }
        let mut order: Vec<T> = raw.to_vec();
        order.sort_unstable();
        order.dedup();
        let cells = raw
            .iter()
            .map(|s| order.binary_search(s).expect("symbol present") as u32 + 1)
            .collect();
        Ok(Grid { rows, cols, cells })
    }

    /// Builds a grid from nested rows, renaming symbols.
    pub fn from_rows<T: Ord + Copy>(rows: &[Vec<T>]) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if let Some(bad) = rows.iter().position(|row| row.len() != c) {
            return Err(Error::Format { line: bad + 1, msg: "ragged row".into() });
        }
        let flat: Vec<T> = rows.iter().flatten().copied().collect();
        Grid::from_raw(r, c, &flat)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> u32 {
        self.cells[r * self.cols + c]
    }

    pub fn cells(&self) -> &[u32] {
        &self.cells
    }

    /// Row `r` as a slice.
    pub fn row(&self, r: usize) -> &[u32] {
        &self.cells[r * self.cols..(r + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<u32>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    /// Copies the `h x w` block with top-left corner `(r, c)`.
    pub fn block(&self, r: usize, c: usize, h: usize, w: usize) -> Vec<Vec<u32>> {
        (r..r + h).map(|x| self.row(x)[c..c + w].to_vec()).collect()
    }

    /// Cell-wise comparison of two equally sized blocks.
    pub fn blocks_equal(&self, r1: usize, c1: usize, r2: usize, c2: usize, h: usize, w: usize) -> bool {
        (0..h).all(|x| self.row(r1 + x)[c1..c1 + w] == self.row(r2 + x)[c2..c2 + w])
    }

    /// Writes the grid in int format.
    pub fn to_int_text(&self) -> String {
        let mut out = format!("{} {}\n", self.rows, self.cols);
        for r in 0..self.rows {
            let line: Vec<String> = self.row(r).iter().map(u32::to_string).collect();
            out.push_str(&line.join(" "));
            out.push('\n');
        }
        out
    }
}

/// Cell `(i, j)` of the result equals cell `(j, i)` of `g`.
pub fn transpose(g: &Grid) -> Grid {
    let mut cells = Vec::with_capacity(g.cells.len());
    for c in 0..g.cols {
        for r in 0..g.rows {
            cells.push(g.get(r, c));
        }
    }
    Grid { rows: g.cols, cols: g.rows, cells }
}

/// Reads a grid from `source` and renames its alphabet.
pub fn load_grid<R: Read>(mut source: R, format: GridFormat) -> Result<Grid> {
    let mut text = String::new();
    source.read_to_string(&mut text)?;
    match format {
        GridFormat::Char => parse_char(&text),
        GridFormat::Int => parse_int(&text),
    }
}

fn parse_char(text: &str) -> Result<Grid> {
    let mut rows: Vec<&[u8]> = Vec::new();
    for (idx, line) in text.lines().enumerate() {
        let line = line.trim_end_matches('\r');
        if line.is_empty() {
            // trailing blank lines are tolerated, interior ones are not
            if text.lines().skip(idx).all(|l| l.trim_end_matches('\r').is_empty()) {
                break;
            }
            return Err(Error::Format { line: idx + 1, msg: "empty row".into() });
        }
        let bytes = line.as_bytes();
        if let Some(pos) = bytes.iter().position(|b| !(33..=126).contains(b)) {
            return Err(Error::Format {
                line: idx + 1,
                msg: format!("non-printable symbol at column {}", pos + 1),
            });
        }
        if let Some(first) = rows.first() {
            if first.len() != bytes.len() {
                return Err(Error::Format {
                    line: idx + 1,
                    msg: format!("row has {} symbols, expected {}", bytes.len(), first.len()),
                });
            }
        }
        rows.push(bytes);
    }
    if rows.is_empty() {
        return Err(Error::Format { line: 1, msg: "empty input".into() });
    }
    let cols = rows[0].len();
    let flat: Vec<u8> = rows.iter().flat_map(|r| r.iter().copied()).collect();
    Grid::from_raw(rows.len(), cols, &flat)
}

fn parse_int(text: &str) -> Result<Grid> {
    let mut tokens = text
        .lines()
        .enumerate()
        .flat_map(|(ln, line)| line.split_whitespace().map(move |t| (ln + 1, t)));
    let mut header = |what: &str| -> Result<usize> {
        let (ln, tok) = tokens
            .next()
            .ok_or_else(|| Error::Format { line: 1, msg: "empty input".into() })?;
        tok.parse::<usize>()
            .ok()
            .filter(|&v| v > 0)
            .ok_or_else(|| Error::Format { line: ln, msg: format!("invalid {what} count {tok:?}") })
    };
    let rows = header("row")?;
    let cols = header("column")?;
    let mut raw = Vec::with_capacity(rows * cols);
    let mut last_line = 1;
    for (ln, tok) in tokens {
        last_line = ln;
        let v: u32 = tok
            .parse()
            .ok()
            .filter(|&v: &u32| v < (1 << 31))
            .ok_or_else(|| Error::Format { line: ln, msg: format!("invalid symbol {tok:?}") })?;
        raw.push(v);
    }
    if raw.len() != rows * cols {
        return Err(Error::Format {
            line: last_line,
            msg: format!("expected {} symbols, found {}", rows * cols, raw.len()),
        });
    }
    Grid::from_raw(rows, cols, &raw)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn load(s: &str, f: GridFormat) -> Result<Grid> {
        load_grid(s.as_bytes(), f)
    }

    #[test]
    fn char_format_renames_in_sorted_order() {
        let g = load("ab\nba", GridFormat::Char).unwrap();
        assert_eq!(g.to_rows(), vec![vec![1, 2], vec![2, 1]]);
        let g = load("aa\naa\n", GridFormat::Char).unwrap();
        assert_eq!(g.to_rows(), vec![vec![1, 1], vec![1, 1]]);
    }

    #[test]
    fn int_format_ranks_values() {
        let g = load("2 3\n5 5 9\n5 5 9", GridFormat::Int).unwrap();
        assert_eq!(g.to_rows(), vec![vec![1, 1, 2], vec![1, 1, 2]]);
    }

    #[test]
    fn ragged_rows_report_line() {
        match load("abc\nab\nabc", GridFormat::Char) {
            Err(Error::Format { line, .. }) => assert_eq!(line, 2),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn empty_input_is_rejected() {
        assert!(matches!(load("", GridFormat::Char), Err(Error::Format { .. })));
        assert!(matches!(load("  \n", GridFormat::Int), Err(Error::Format { .. })));
    }

    #[test]
    fn int_format_count_mismatch() {
        assert!(load("2 2\n1 2 3", GridFormat::Int).is_err());
        assert!(load("1 1\n4294967295", GridFormat::Int).is_err());
    }

    #[test]
    fn transpose_examples() {
        let g = Grid::from_rows(&[vec![1, 2], vec![3, 4]]).unwrap();
        assert_eq!(transpose(&g).to_rows(), vec![vec![1, 3], vec![2, 4]]);
        assert_eq!(transpose(&transpose(&g)), g);
        let g = Grid::from_rows(&[vec![1, 2, 3, 4, 5]]).unwrap();
        let t = transpose(&g);
        assert_eq!((t.rows(), t.cols()), (5, 1));
    }

    #[test]
    fn int_round_trip() {
        let g = Grid::from_rows(&[vec![3, 1, 2], vec![2, 2, 3]]).unwrap();
        let back = load(&g.to_int_text(), GridFormat::Int).unwrap();
        assert_eq!(back, g);
    }
}
