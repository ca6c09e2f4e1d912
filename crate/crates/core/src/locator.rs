//! Occurrences of a factor of the 2D word, computed from the 1D occurrence
//! sets of its first column and first row.

use std::fmt;

use serde::Serialize;

use crate::error::Result;
use crate::frames::frame_tl;
use crate::word1d::{occ_descriptor1d, OccDescriptor1D};
use crate::word2d::Word2D;

/// 0-based offset of a factor: it covers rows `row_offset+1 ..= row_offset+k`
/// and columns `col_offset+1 ..= col_offset+l` of the infinite word.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Occurrence2D {
    pub row_offset: u64,
    pub col_offset: u64,
}

impl Occurrence2D {
    pub fn new(row_offset: u64, col_offset: u64) -> Occurrence2D {
        Occurrence2D {
            row_offset,
            col_offset,
        }
    }
}

impl fmt::Display for Occurrence2D {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row_offset, self.col_offset)
    }
}

// JSON form is the pair `[row, col]`.
impl Serialize for Occurrence2D {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        [self.row_offset, self.col_offset].serialize(s)
    }
}

/// Occurrence rows come from the first column, occurrence columns from the
/// first row; the occurrence set is their Cartesian product.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct OccDescriptor2D {
    pub row_part: OccDescriptor1D,
    pub col_part: OccDescriptor1D,
}

impl OccDescriptor2D {
    pub fn first(&self) -> Occurrence2D {
        Occurrence2D::new(
            self.row_part.first_occ as u64,
            self.col_part.first_occ as u64,
        )
    }

    pub fn members(&self, row_bound: u64, col_bound: u64) -> Vec<Occurrence2D> {
        let cols = self.col_part.members(col_bound);
        self.row_part
            .members(row_bound)
            .into_iter()
            .flat_map(|x| cols.iter().map(move |&y| Occurrence2D::new(x, y)))
            .collect()
    }
}

pub fn occ_descriptor2d(w: &Word2D) -> Result<OccDescriptor2D> {
    // A line-structured block is fixed by its frame, so only the frame words
    // need to be factors.
    let f = frame_tl(w)?;
    Ok(OccDescriptor2D {
        row_part: occ_descriptor1d(f.frame_l(), f.alph_l())?,
        col_part: occ_descriptor1d(f.frame_t(), f.alph_t())?,
    })
}

pub fn first_occ2d(w: &Word2D) -> Result<Occurrence2D> {
    occ_descriptor2d(w).map(|d| d.first())
}

/// Occurrences with `row_offset < row_bound` and `col_offset < col_bound`,
/// in row-major order.
pub fn occ2d(w: &Word2D, row_bound: u64, col_bound: u64) -> Result<Vec<Occurrence2D>> {
    occ_descriptor2d(w).map(|d| d.members(row_bound, col_bound))
}

/// What `locate` prints.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LocateReport {
    pub first: Occurrence2D,
    pub occurrences: Vec<Occurrence2D>,
    pub row_bound: u64,
    pub col_bound: u64,
}

pub fn locate(w: &Word2D, row_bound: u64, col_bound: u64) -> Result<LocateReport> {
    let d = occ_descriptor2d(w)?;
    Ok(LocateReport {
        first: d.first(),
        occurrences: d.members(row_bound, col_bound),
        row_bound,
        col_bound,
    })
}
