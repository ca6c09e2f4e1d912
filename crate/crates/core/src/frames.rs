//! Frames of 2D subwords: the first row and first column determine the
//! whole block, and extending both by one letter grows the subword set from
//! size `(k,l)` to `(k+1,l+1)`.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::letter::{Alphabet1D, Letter};
use crate::word1d::{is_factor, is_special, right_extensions, Word1D};
use crate::word2d::{classify_lines, Word2D};

/// First row, first column and their shared corner letter.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FrameTL {
    frame_t: Word1D,
    frame_l: Word1D,
    s_joint: Letter,
}

impl FrameTL {
    /// Checks that both words start with the same letter and that each stays
    /// within one row (resp. column) alphabet.
    pub fn new(frame_t: Word1D, frame_l: Word1D) -> Result<FrameTL> {
        let (t0, l0) = match (frame_t.first(), frame_l.first()) {
            (Some(t), Some(l)) => (t, l),
            _ => return Err(Error::EmptyWord),
        };
        if t0 != l0 {
            return Err(Error::InconsistentJoint {
                expected: t0,
                found: l0,
            });
        }
        if !frame_t.is_over(row_alphabet_of(&frame_t)) {
            return Err(Error::NotFibStructured(format!(
                "top frame `{frame_t}` mixes row alphabets"
            )));
        }
        if !frame_l.is_over(col_alphabet_of(&frame_l)) {
            return Err(Error::NotFibStructured(format!(
                "left frame `{frame_l}` mixes column alphabets"
            )));
        }
        Ok(FrameTL {
            frame_t,
            frame_l,
            s_joint: t0,
        })
    }

    pub fn frame_t(&self) -> &Word1D {
        &self.frame_t
    }

    pub fn frame_l(&self) -> &Word1D {
        &self.frame_l
    }

    pub fn s_joint(&self) -> Letter {
        self.s_joint
    }

    /// `(rows, cols)` of the block the frame describes.
    pub fn size(&self) -> (usize, usize) {
        (self.frame_l.len(), self.frame_t.len())
    }

    /// Row alphabet of `frame_t`, in seed order.
    pub fn alph_t(&self) -> Alphabet1D {
        row_alphabet_of(&self.frame_t)
    }

    /// Column alphabet of `frame_l`, in seed order.
    pub fn alph_l(&self) -> Alphabet1D {
        col_alphabet_of(&self.frame_l)
    }
}

impl fmt::Display for FrameTL {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "T={} L={} joint={}",
            self.frame_t, self.frame_l, self.s_joint
        )
    }
}

fn row_alphabet_of(w: &Word1D) -> Alphabet1D {
    w[0].row_alphabet().alphabet()
}

fn col_alphabet_of(w: &Word1D) -> Alphabet1D {
    w[0].col_alphabet().alphabet()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FrameType {
    /// Neither frame word is special.
    I,
    /// Only the left frame is special.
    II,
    /// Only the top frame is special.
    III,
    /// Both frame words are special.
    IV,
}

impl FrameType {
    /// Number of `(k+1,l+1)` subwords a frame of this type extends to.
    pub fn extension_count(self) -> usize {
        match self {
            FrameType::I => 1,
            FrameType::II | FrameType::III => 2,
            FrameType::IV => 4,
        }
    }
}

impl fmt::Display for FrameType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FrameType::I => "I",
            FrameType::II => "II",
            FrameType::III => "III",
            FrameType::IV => "IV",
        })
    }
}

pub fn frame_tl(w: &Word2D) -> Result<FrameTL> {
    classify_lines(w)?;
    FrameTL::new(w.row(1), w.col(1))
}

/// Rebuilds the block: row `i` is `frame_t` when `frame_l[i]` is the joint
/// letter, otherwise `frame_t` carried to the other row alphabet.
pub fn fill_from_frame(f: &FrameTL) -> Result<Word2D> {
    if !is_factor(&f.frame_t, f.alph_t()) {
        return Err(Error::NotAFactor(f.frame_t.to_string()));
    }
    if !is_factor(&f.frame_l, f.alph_l()) {
        return Err(Error::NotAFactor(f.frame_l.to_string()));
    }
    Ok(fill_unchecked(f))
}

fn fill_unchecked(f: &FrameTL) -> Word2D {
    let other = f.frame_t.map(Letter::swap_row);
    let rows: Vec<Word1D> = f
        .frame_l
        .letters()
        .iter()
        .map(|&l| {
            if l == f.s_joint {
                f.frame_t.clone()
            } else {
                other.clone()
            }
        })
        .collect();
    Word2D::from_rows(&rows).expect("rows share one length")
}

pub fn classify_frame(f: &FrameTL) -> FrameType {
    match (
        is_special(&f.frame_t, f.alph_t()),
        is_special(&f.frame_l, f.alph_l()),
    ) {
        (false, false) => FrameType::I,
        (false, true) => FrameType::II,
        (true, false) => FrameType::III,
        (true, true) => FrameType::IV,
    }
}

/// The `(k+1,l+1)` subwords whose top-left `(k,l)` block is `w`.
pub fn extend_one(w: &Word2D) -> Result<Vec<Word2D>> {
    let f = frame_tl(w)?;
    let right = right_extensions(&f.frame_t, f.alph_t())?;
    let down = right_extensions(&f.frame_l, f.alph_l())?;
    let mut out = Vec::with_capacity(right.len() * down.len());
    for &x in &right {
        for &y in &down {
            let g = FrameTL {
                frame_t: f.frame_t.with(x),
                frame_l: f.frame_l.with(y),
                s_joint: f.s_joint,
            };
            out.push(fill_unchecked(&g));
        }
    }
    Ok(out)
}

/// Extends the complete set of `(k,l)` subwords to the `(k+1,l+1)` set.
pub fn extend_diagonal(s: &BTreeSet<Word2D>) -> Result<BTreeSet<Word2D>> {
    let (k, l) = s.first().map(Word2D::size).ok_or(Error::IncompleteInput {
        expected: 1,
        got: 0,
    })?;
    if s.iter().any(|w| w.size() != (k, l)) {
        return Err(Error::ShapeMismatch("subwords of mixed sizes".into()));
    }
    let expected = (k + 1) * (l + 1);
    if s.len() != expected {
        return Err(Error::IncompleteInput {
            expected,
            got: s.len(),
        });
    }
    let mut out = BTreeSet::new();
    for w in s {
        out.extend(extend_one(w)?);
    }
    Ok(out)
}

/// The four letters: the subwords of size `(1,1)`.
pub fn base_set() -> BTreeSet<Word2D> {
    Letter::ALL.iter().map(|&l| Word2D::single(l)).collect()
}

/// All `(k,l)` subwords: extend the square set up to side `max(k,l)`, then
/// keep the distinct top-left `(k,l)` blocks.
pub fn enumerate_extension(k: usize, l: usize) -> Result<BTreeSet<Word2D>> {
    if k == 0 || l == 0 {
        return Err(Error::OutOfRange(format!(
            "subword size ({k},{l}) must be positive"
        )));
    }
    let side = k.max(l);
    let mut set = base_set();
    for _ in 1..side {
        set = extend_diagonal(&set)?;
    }
    Ok(set.iter().map(|w| w.window(0, 0, k, l)).collect())
}
