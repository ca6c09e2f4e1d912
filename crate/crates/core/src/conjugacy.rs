//! Cyclic row and column shifts of 2D words, and enumeration of subwords as
//! prefixes of conjugates of finite Fibonacci arrays.

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::word1d::{fib_index_above, fib_usize, Numbering};
use crate::word2d::{fib_array, Seeds2D, Word2D};

/// Exponents of `T_row^i T_col^j`. Positive exponents move the first row
/// (column) to the end; negative ones move the last to the front.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Rotation2D {
    pub i: i64,
    pub j: i64,
}

impl Rotation2D {
    pub fn new(i: i64, j: i64) -> Rotation2D {
        Rotation2D { i, j }
    }

    pub fn inverse(self) -> Rotation2D {
        Rotation2D {
            i: -self.i,
            j: -self.j,
        }
    }
}

impl fmt::Display for Rotation2D {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "T_row^{} T_col^{}", self.i, self.j)
    }
}

pub fn rotate2d(w: &Word2D, r: Rotation2D) -> Result<Word2D> {
    if w.is_empty() {
        return Err(Error::EmptyWord);
    }
    let di = r.i.rem_euclid(w.rows() as i64) as usize;
    let dj = r.j.rem_euclid(w.cols() as i64) as usize;
    Ok(Word2D::from_fn(w.rows(), w.cols(), |row, col| {
        w.at((row + di) % w.rows(), (col + dj) % w.cols())
    }))
}

/// All distinct `T_row^i T_col^j (w)`.
pub fn conjugacy_class(w: &Word2D) -> BTreeSet<Word2D> {
    let mut out = BTreeSet::new();
    for i in 0..w.rows() {
        for j in 0..w.cols() {
            out.insert(rotate2d(w, Rotation2D::new(i as i64, j as i64)).expect("non-empty"));
        }
    }
    out
}

/// `F(n) - 1` for even `n`, `F(n-1) - 1` for odd `n` (`F(0) = F(1) = 1`).
fn special_exponent(n: usize) -> i64 {
    let idx = if n.is_multiple_of(2) { n } else { n - 1 };
    fib_usize(idx, Numbering::F11) as i64 - 1
}

/// The rotation taking `f_{m,n}` to its special conjugate `q_{m,n}`.
pub fn special_rotation(m: usize, n: usize) -> Result<Rotation2D> {
    if m < 2 || n < 2 {
        return Err(Error::OutOfRange(format!(
            "special conjugate needs m, n >= 2, got ({m},{n})"
        )));
    }
    Ok(Rotation2D::new(special_exponent(m), special_exponent(n)))
}

pub fn special_conjugate2d(m: usize, n: usize) -> Result<Word2D> {
    rotate2d(
        &fib_array(m, n, Seeds2D::default()),
        special_rotation(m, n)?,
    )
}

/// Least `m` with `k < F(m)` (`F(0) = F(1) = 1`); at least 2.
fn covering_index(k: usize) -> usize {
    fib_index_above(k, Numbering::F11).max(2)
}

/// One listed conjugate and its top-left prefix.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConjugateRow {
    pub rotation: Rotation2D,
    pub conjugate: Word2D,
    pub prefix: Word2D,
}

/// The conjugates `T_row^{-i} T_col^{-j} (q_{m,n})`, `0 <= i <= k`,
/// `0 <= j <= l`, with their `(k,l)` prefixes, `m` and `n` least such that
/// `k < F(m)` and `l < F(n)`. Ordered by `i`, then `j`.
pub fn conjugation_table(k: usize, l: usize) -> Result<Vec<ConjugateRow>> {
    if k == 0 || l == 0 {
        return Err(Error::OutOfRange(format!(
            "subword size ({k},{l}) must be positive"
        )));
    }
    let q = special_conjugate2d(covering_index(k), covering_index(l))?;
    let mut rows = Vec::with_capacity((k + 1) * (l + 1));
    for i in 0..=k as i64 {
        for j in 0..=l as i64 {
            let rotation = Rotation2D::new(-i, -j);
            let conjugate = rotate2d(&q, rotation)?;
            let prefix = conjugate.window(0, 0, k, l);
            rows.push(ConjugateRow {
                rotation,
                conjugate,
                prefix,
            });
        }
    }
    Ok(rows)
}

pub fn enumerate_conjugation(k: usize, l: usize) -> Result<BTreeSet<Word2D>> {
    Ok(conjugation_table(k, l)?
        .into_iter()
        .map(|r| r.prefix)
        .collect())
}

/// `{0, ..., F(m)-1} ∪ {F(m+2)-k-1, ..., F(m+1)-1}` where
/// `F(m) <= k < F(m+1)`.
fn prefix_shifts(k: usize) -> (usize, Vec<usize>) {
    let m = fib_index_above(k, Numbering::F11) - 1;
    let f = |i| fib_usize(i, Numbering::F11);
    let mut shifts: Vec<usize> = (0..f(m)).collect();
    shifts.extend(f(m + 2) - k - 1..f(m + 1));
    (m, shifts)
}

/// The `(k,l)` prefixes of `T_row^i T_col^j (f_{m+1,n+1})` over the index
/// sets of [`prefix_shifts`]. Needs `k, l >= 2`.
pub fn enumerate_prefix_conjugates(k: usize, l: usize) -> Result<BTreeSet<Word2D>> {
    if k < 2 || l < 2 {
        return Err(Error::OutOfRange(format!(
            "prefix conjugates need k, l >= 2, got ({k},{l})"
        )));
    }
    let (m, rows) = prefix_shifts(k);
    let (n, cols) = prefix_shifts(l);
    let f = fib_array(m + 1, n + 1, Seeds2D::default());
    let mut out = BTreeSet::new();
    for &i in &rows {
        for &j in &cols {
            out.insert(rotate2d(&f, Rotation2D::new(i as i64, j as i64))?.window(0, 0, k, l));
        }
    }
    Ok(out)
}
