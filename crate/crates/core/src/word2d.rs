//! Rectangular words over `{a,b,c,d}`.
//!
//! Coordinates at the public surface are 1-based (`(1,1)` is the top-left
//! letter); offsets used by the occurrence arithmetic are 0-based.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::letter::{ColAlphabet, Letter, RowAlphabet};
use crate::word1d::{fib_usize, Numbering, Word1D};

/// A rectangular word stored row-major. The empty word has size `(0, 0)`;
/// sizes `(m, 0)` and `(0, m)` with `m > 0` are not representable.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Word2DJson", into = "Word2DJson")]
pub struct Word2D {
    rows: usize,
    cols: usize,
    data: Vec<Letter>,
}

impl Word2D {
    pub fn new(rows: usize, cols: usize, data: Vec<Letter>) -> Result<Word2D> {
        if (rows == 0) != (cols == 0) {
            return Err(Error::ShapeMismatch(format!(
                "size ({rows},{cols}) is undefined"
            )));
        }
        if rows * cols != data.len() {
            return Err(Error::ShapeMismatch(format!(
                "size ({rows},{cols}) needs {} letters, got {}",
                rows * cols,
                data.len()
            )));
        }
        Ok(Word2D { rows, cols, data })
    }

    /// The empty word.
    pub fn empty() -> Word2D {
        Word2D {
            rows: 0,
            cols: 0,
            data: Vec::new(),
        }
    }

    pub fn single(letter: Letter) -> Word2D {
        Word2D {
            rows: 1,
            cols: 1,
            data: vec![letter],
        }
    }

    pub fn from_rows(rows: &[Word1D]) -> Result<Word2D> {
        let cols = rows.first().map_or(0, Word1D::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::ShapeMismatch("rows of unequal length".into()));
        }
        let data = rows
            .iter()
            .flat_map(|r| r.letters().iter().copied())
            .collect();
        Word2D::new(rows.len(), cols, data)
    }

    /// Builds a word from row strings, e.g. `["dc", "ba"]`.
    pub fn from_strs(rows: &[&str]) -> Result<Word2D> {
        let rows: Vec<Word1D> = rows.iter().map(|r| r.parse()).collect::<Result<_>>()?;
        Word2D::from_rows(&rows)
    }

    pub(crate) fn from_fn(rows: usize, cols: usize, f: impl Fn(usize, usize) -> Letter) -> Word2D {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Word2D { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn size(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn is_empty(&self) -> bool {
        self.data.is_empty()
    }

    pub fn letters(&self) -> &[Letter] {
        &self.data
    }

    /// 0-based access.
    pub(crate) fn at(&self, r: usize, c: usize) -> Letter {
        self.data[r * self.cols + c]
    }

    /// Letter at 1-based position `(i, j)`.
    pub fn get(&self, i: usize, j: usize) -> Option<Letter> {
        if i == 0 || j == 0 || i > self.rows || j > self.cols {
            return None;
        }
        Some(self.at(i - 1, j - 1))
    }

    /// Row `i` (1-based).
    pub fn row(&self, i: usize) -> Word1D {
        let start = (i - 1) * self.cols;
        Word1D::new(self.data[start..start + self.cols].to_vec())
    }

    /// Column `j` (1-based).
    pub fn col(&self, j: usize) -> Word1D {
        Word1D::new((0..self.rows).map(|r| self.at(r, j - 1)).collect())
    }

    pub fn row_strings(&self) -> Vec<String> {
        (1..=self.rows).map(|i| self.row(i).to_string()).collect()
    }

    pub fn transpose(&self) -> Word2D {
        Word2D::from_fn(self.cols, self.rows, |r, c| self.at(c, r))
    }

    /// Column concatenation: `v` placed to the right of `u`.
    pub fn concat_col(&self, other: &Word2D) -> Result<Word2D> {
        if self.is_empty() {
            return Ok(other.clone());
        }
        if other.is_empty() {
            return Ok(self.clone());
        }
        if self.rows != other.rows {
            return Err(Error::ShapeMismatch(format!(
                "column concatenation needs equal row counts, got {} and {}",
                self.rows, other.rows
            )));
        }
        let cols = self.cols + other.cols;
        Ok(Word2D::from_fn(self.rows, cols, |r, c| {
            if c < self.cols {
                self.at(r, c)
            } else {
                other.at(r, c - self.cols)
            }
        }))
    }

    /// Row concatenation: `v` placed below `u`.
    pub fn concat_row(&self, other: &Word2D) -> Result<Word2D> {
        if self.is_empty() {
            return Ok(other.clone());
        }
        if other.is_empty() {
            return Ok(self.clone());
        }
        if self.cols != other.cols {
            return Err(Error::ShapeMismatch(format!(
                "row concatenation needs equal column counts, got {} and {}",
                self.cols, other.cols
            )));
        }
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Word2D::new(self.rows + other.rows, self.cols, data)
    }

    /// 0-based window of size `(height, width)` at `(r0, c0)`; caller
    /// guarantees it fits.
    pub fn window(&self, r0: usize, c0: usize, height: usize, width: usize) -> Word2D {
        Word2D::from_fn(height, width, |r, c| self.at(r0 + r, c0 + c))
    }

    /// Whether `pattern` sits at 0-based offset `(r0, c0)`.
    pub fn matches_at(&self, pattern: &Word2D, r0: usize, c0: usize) -> bool {
        (0..pattern.rows).all(|r| {
            let start = (r0 + r) * self.cols + c0;
            self.data[start..start + pattern.cols]
                == pattern.data[r * pattern.cols..(r + 1) * pattern.cols]
        })
    }
}

impl fmt::Display for Word2D {
    /// One row per line, each terminated by a newline.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            for c in 0..self.cols {
                write!(f, "{}", self.at(r, c))?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

impl FromStr for Word2D {
    type Err = Error;

    /// Parses the text format: one row per line. Blank lines are ignored.
    fn from_str(s: &str) -> Result<Word2D> {
        let rows: Vec<&str> = s.lines().map(str::trim).filter(|l| !l.is_empty()).collect();
        Word2D::from_strs(&rows)
    }
}

#[derive(Serialize, Deserialize)]
struct Word2DJson {
    rows: usize,
    cols: usize,
    data: Vec<String>,
}

impl From<Word2D> for Word2DJson {
    fn from(w: Word2D) -> Word2DJson {
        Word2DJson {
            rows: w.rows,
            cols: w.cols,
            data: w.row_strings(),
        }
    }
}

impl TryFrom<Word2DJson> for Word2D {
    type Error = Error;

    fn try_from(j: Word2DJson) -> Result<Word2D> {
        let refs: Vec<&str> = j.data.iter().map(String::as_str).collect();
        let w = Word2D::from_strs(&refs)?;
        if w.size() != (j.rows, j.cols) {
            return Err(Error::ShapeMismatch(format!(
                "declared size ({},{}) but data has size ({},{})",
                j.rows, j.cols, w.rows, w.cols
            )));
        }
        Ok(w)
    }
}

/// 1-based inclusive rectangle `{top..=bottom} x {left..=right}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Domain2D {
    top: usize,
    left: usize,
    bottom: usize,
    right: usize,
}

impl Domain2D {
    pub fn new(top_left: (usize, usize), bottom_right: (usize, usize)) -> Result<Domain2D> {
        let ((top, left), (bottom, right)) = (top_left, bottom_right);
        if top == 0 || left == 0 || top > bottom || left > right {
            return Err(Error::OutOfDomain(format!(
                "[({top},{left}),({bottom},{right})]"
            )));
        }
        Ok(Domain2D {
            top,
            left,
            bottom,
            right,
        })
    }

    pub fn full(w: &Word2D) -> Result<Domain2D> {
        Domain2D::new((1, 1), (w.rows(), w.cols()))
    }
}

impl fmt::Display for Domain2D {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[({},{}),({},{})]",
            self.top, self.left, self.bottom, self.right
        )
    }
}

/// The sub-array `w[(i,j),(i',j')]`.
pub fn subblock(w: &Word2D, dom: Domain2D) -> Result<Word2D> {
    if dom.bottom > w.rows() || dom.right > w.cols() {
        return Err(Error::OutOfDomain(format!(
            "{dom} in a word of size {:?}",
            w.size()
        )));
    }
    Ok(w.window(
        dom.top - 1,
        dom.left - 1,
        dom.bottom - dom.top + 1,
        dom.right - dom.left + 1,
    ))
}

/// The four seed letters `f_{0,0}, f_{0,1}, f_{1,0}, f_{1,1}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Seeds2D {
    pub s00: Letter,
    pub s01: Letter,
    pub s10: Letter,
    pub s11: Letter,
}

impl Default for Seeds2D {
    fn default() -> Seeds2D {
        Seeds2D {
            s00: Letter::A,
            s01: Letter::B,
            s10: Letter::C,
            s11: Letter::D,
        }
    }
}

impl Seeds2D {
    pub fn new(s00: Letter, s01: Letter, s10: Letter, s11: Letter) -> Result<Seeds2D> {
        if s00 == s01 && s01 == s10 && s10 == s11 {
            return Err(Error::InvalidAlphabet(
                "seed letters may not all be identical".into(),
            ));
        }
        Ok(Seeds2D { s00, s01, s10, s11 })
    }

    fn seed(&self, m: usize, n: usize) -> Word2D {
        Word2D::single(match (m, n) {
            (0, 0) => self.s00,
            (0, 1) => self.s01,
            (1, 0) => self.s10,
            _ => self.s11,
        })
    }

    /// True when all four seeds are distinct.
    pub fn is_distinct(&self) -> bool {
        let mut s = [self.s00, self.s01, self.s10, self.s11];
        s.sort();
        s.windows(2).all(|p| p[0] != p[1])
    }
}

/// Which index the Fibonacci array recursion unfolds first.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Expansion {
    /// `f_{m,n} = f_{m-1,n} (-) f_{m-2,n}` over column-built `f_{0,n}`, `f_{1,n}`.
    RowFirst,
    /// `f_{m,n} = f_{m,n-1} (|) f_{m,n-2}` over row-built `f_{m,0}`, `f_{m,1}`.
    ColFirst,
}

fn unfold(
    n: usize,
    f0: Word2D,
    f1: Word2D,
    join: fn(&Word2D, &Word2D) -> Result<Word2D>,
) -> Word2D {
    if n == 0 {
        return f0;
    }
    let (mut prev, mut cur) = (f0, f1);
    for _ in 1..n {
        let next = join(&cur, &prev).expect("Fibonacci array shapes always agree");
        prev = cur;
        cur = next;
    }
    cur
}

/// The Fibonacci array `f_{m,n}` of size `(F(m), F(n))` (`F(0) = F(1) = 1`).
pub fn fib_array(m: usize, n: usize, seeds: Seeds2D) -> Word2D {
    fib_array_with(m, n, seeds, Expansion::RowFirst)
}

pub fn fib_array_with(m: usize, n: usize, seeds: Seeds2D, expansion: Expansion) -> Word2D {
    match expansion {
        Expansion::RowFirst => {
            let top = |k| unfold(n, seeds.seed(k, 0), seeds.seed(k, 1), Word2D::concat_col);
            unfold(m, top(0), top(1), Word2D::concat_row)
        }
        Expansion::ColFirst => {
            let left = |k| unfold(m, seeds.seed(0, k), seeds.seed(1, k), Word2D::concat_row);
            unfold(n, left(0), left(1), Word2D::concat_col)
        }
    }
}

/// One application of the 2D morphism
/// `d -> [dc/ba]`, `c -> [d/b]`, `b -> [dc]`, `a -> [d]`.
///
/// Image heights follow the row alphabet (`{d,c}` rows double) and widths the
/// column alphabet (`{d,b}` columns double), so on a Fibonacci-structured
/// word the blocks tile.
pub fn apply_mu(w: &Word2D) -> Word2D {
    const BLOCK: [[Letter; 2]; 2] = [[Letter::D, Letter::C], [Letter::B, Letter::A]];
    // For each output row: (source row, row within the image block).
    let mut row_src = Vec::new();
    for r in 0..w.rows() {
        let h = if w.at(r, 0).row_alphabet() == RowAlphabet::DC {
            2
        } else {
            1
        };
        row_src.extend((0..h).map(|dr| (r, dr)));
    }
    let mut col_src = Vec::new();
    for c in 0..w.cols() {
        let wd = if w.at(0, c).col_alphabet() == ColAlphabet::DB {
            2
        } else {
            1
        };
        col_src.extend((0..wd).map(|dc| (c, dc)));
    }
    // The image of any letter at block offset (dr, dc) is BLOCK[dr][dc].
    Word2D::from_fn(row_src.len(), col_src.len(), |r, c| {
        BLOCK[row_src[r].1][col_src[c].1]
    })
}

/// The `(rows, cols)` prefix of the infinite 2D Fibonacci word, the fixed
/// point of the morphism on `d`.
pub fn mu_prefix(rows: usize, cols: usize) -> Result<Word2D> {
    if rows == 0 || cols == 0 {
        return Err(Error::OutOfRange(format!(
            "prefix size ({rows},{cols}) must be positive"
        )));
    }
    let mut w = Word2D::single(Letter::D);
    while w.rows() < rows || w.cols() < cols {
        w = apply_mu(&w);
    }
    Ok(w.window(0, 0, rows, cols))
}

/// Per-line alphabet tags of a Fibonacci-structured word.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LineClasses {
    pub rows: Vec<RowAlphabet>,
    pub cols: Vec<ColAlphabet>,
}

fn line_class<T: Copy + PartialEq>(line: &Word1D, tag: impl Fn(Letter) -> T) -> Option<T> {
    let t = tag(line.first()?);
    line.letters().iter().all(|&l| tag(l) == t).then_some(t)
}

/// Tags every row `{a,b}` or `{c,d}` and every column `{a,c}` or `{b,d}`.
///
/// Once every line is over one of its two alphabets, the letter at `(i,j)` is
/// the unique member of `row_alphabet(i) ∩ col_alphabet(j)`, so rows with the
/// same tag are identical and likewise for columns.
pub fn classify_lines(w: &Word2D) -> Result<LineClasses> {
    if w.is_empty() {
        return Err(Error::EmptyWord);
    }
    let rows = (1..=w.rows())
        .map(|i| {
            let row = w.row(i);
            line_class(&row, Letter::row_alphabet).ok_or_else(|| {
                Error::NotFibStructured(format!("row {i} `{row}` mixes row alphabets"))
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let cols = (1..=w.cols())
        .map(|j| {
            let col = w.col(j);
            line_class(&col, Letter::col_alphabet).ok_or_else(|| {
                Error::NotFibStructured(format!("column {j} `{col}` mixes column alphabets"))
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(LineClasses { rows, cols })
}

/// True iff `w` is not a proper row-and-column tiling of a smaller block.
pub fn is_primitive2d(w: &Word2D) -> bool {
    let divisors = |n: usize| (1..=n).filter(move |d| n.is_multiple_of(*d));
    for p in divisors(w.rows()) {
        for q in divisors(w.cols()) {
            if (p, q) == w.size() {
                continue;
            }
            let tiles =
                (0..w.rows()).all(|r| (0..w.cols()).all(|c| w.at(r, c) == w.at(r % p, c % q)));
            if tiles {
                return false;
            }
        }
    }
    true
}

/// Size `(F(m), F(n))` of `f_{m,n}`.
pub fn fib_array_size(m: usize, n: usize) -> (usize, usize) {
    (fib_usize(m, Numbering::F11), fib_usize(n, Numbering::F11))
}
