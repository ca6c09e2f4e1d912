//! Letters of the four-letter alphabet and the binary sub-alphabets that
//! rows and columns of the two-dimensional Fibonacci word are drawn from.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Letter {
    A,
    B,
    C,
    D,
}

impl Letter {
    pub const ALL: [Letter; 4] = [Letter::A, Letter::B, Letter::C, Letter::D];

    pub fn as_char(self) -> char {
        match self {
            Letter::A => 'a',
            Letter::B => 'b',
            Letter::C => 'c',
            Letter::D => 'd',
        }
    }

    pub fn from_char(ch: char) -> Option<Letter> {
        match ch {
            'a' => Some(Letter::A),
            'b' => Some(Letter::B),
            'c' => Some(Letter::C),
            'd' => Some(Letter::D),
            _ => None,
        }
    }

    fn bit(self) -> u8 {
        1 << (self as u8)
    }

    /// The row alphabet this letter belongs to: `{d,c}` or `{b,a}`.
    pub fn row_alphabet(self) -> RowAlphabet {
        match self {
            Letter::D | Letter::C => RowAlphabet::DC,
            Letter::B | Letter::A => RowAlphabet::BA,
        }
    }

    /// The column alphabet this letter belongs to: `{d,b}` or `{c,a}`.
    pub fn col_alphabet(self) -> ColAlphabet {
        match self {
            Letter::D | Letter::B => ColAlphabet::DB,
            Letter::C | Letter::A => ColAlphabet::CA,
        }
    }

    /// Carries a row letter to the same position in the other row alphabet
    /// (a <-> c, b <-> d).
    pub fn swap_row(self) -> Letter {
        match self {
            Letter::A => Letter::C,
            Letter::B => Letter::D,
            Letter::C => Letter::A,
            Letter::D => Letter::B,
        }
    }

    /// Carries a column letter to the same position in the other column
    /// alphabet (d <-> c, b <-> a).
    pub fn swap_col(self) -> Letter {
        match self {
            Letter::A => Letter::B,
            Letter::B => Letter::A,
            Letter::C => Letter::D,
            Letter::D => Letter::C,
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_char())
    }
}

/// A small set of letters, used as an edge label in the word graphs.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LetterSet(u8);

impl LetterSet {
    pub const EMPTY: LetterSet = LetterSet(0);

    pub fn of(letters: &[Letter]) -> LetterSet {
        LetterSet(letters.iter().fold(0, |acc, l| acc | l.bit()))
    }

    pub fn contains(self, letter: Letter) -> bool {
        self.0 & letter.bit() != 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn intersect(self, other: LetterSet) -> LetterSet {
        LetterSet(self.0 & other.0)
    }

    /// Letters in descending order, the order used when printing labels.
    pub fn iter(self) -> impl Iterator<Item = Letter> {
        Letter::ALL
            .into_iter()
            .rev()
            .filter(move |l| self.contains(*l))
    }

    /// The single member, if the set is a singleton.
    pub fn single(self) -> Option<Letter> {
        let mut it = self.iter();
        match (it.next(), it.next()) {
            (Some(l), None) => Some(l),
            _ => None,
        }
    }
}

impl fmt::Display for LetterSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.iter().map(|l| l.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

/// An ordered pair of distinct letters. The Fibonacci morphism
/// `first -> first second`, `second -> first` is prolongable on `first`,
/// so `first` always opens the infinite word.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Alphabet1D {
    first: Letter,
    second: Letter,
}

impl Alphabet1D {
    pub const AB: Alphabet1D = Alphabet1D {
        first: Letter::A,
        second: Letter::B,
    };
    pub const BA: Alphabet1D = Alphabet1D {
        first: Letter::B,
        second: Letter::A,
    };
    pub const DC: Alphabet1D = Alphabet1D {
        first: Letter::D,
        second: Letter::C,
    };
    pub const DB: Alphabet1D = Alphabet1D {
        first: Letter::D,
        second: Letter::B,
    };
    pub const CA: Alphabet1D = Alphabet1D {
        first: Letter::C,
        second: Letter::A,
    };

    pub fn new(first: Letter, second: Letter) -> Result<Alphabet1D> {
        if first == second {
            return Err(Error::InvalidAlphabet(format!(
                "letters must be distinct, got `{first}{second}`"
            )));
        }
        Ok(Alphabet1D { first, second })
    }

    pub fn first(self) -> Letter {
        self.first
    }

    pub fn second(self) -> Letter {
        self.second
    }

    pub fn contains(self, letter: Letter) -> bool {
        letter == self.first || letter == self.second
    }

    /// 0 for `first`, 1 for `second`.
    pub fn rank(self, letter: Letter) -> Option<u8> {
        if letter == self.first {
            Some(0)
        } else if letter == self.second {
            Some(1)
        } else {
            None
        }
    }

    pub fn letter(self, rank: u8) -> Letter {
        if rank == 0 {
            self.first
        } else {
            self.second
        }
    }

    /// Maps `first -> other.first`, `second -> other.second`.
    pub fn rename(self, other: Alphabet1D, letter: Letter) -> Option<Letter> {
        self.rank(letter).map(|r| other.letter(r))
    }
}

impl fmt::Display for Alphabet1D {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.first, self.second)
    }
}

impl FromStr for Alphabet1D {
    type Err = Error;

    fn from_str(s: &str) -> Result<Alphabet1D> {
        let letters: Vec<Letter> = s
            .chars()
            .filter(|c| !matches!(c, ',' | ' '))
            .map(|c| {
                Letter::from_char(c)
                    .ok_or_else(|| Error::InvalidAlphabet(format!("unknown letter `{c}`")))
            })
            .collect::<Result<_>>()?;
        match letters.as_slice() {
            [first, second] => Alphabet1D::new(*first, *second),
            _ => Err(Error::InvalidAlphabet(format!(
                "expected two letters, got `{s}`"
            ))),
        }
    }
}

/// Alphabet of a row of the 2D word.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum RowAlphabet {
    /// `{d,c}`, rows reading `dcddc...`
    DC,
    /// `{b,a}`, rows reading `babba...`
    BA,
}

impl RowAlphabet {
    /// The alphabet with the seed order of the rows of the infinite word.
    pub fn alphabet(self) -> Alphabet1D {
        match self {
            RowAlphabet::DC => Alphabet1D::DC,
            RowAlphabet::BA => Alphabet1D::BA,
        }
    }
}

/// Alphabet of a column of the 2D word.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ColAlphabet {
    /// `{d,b}`, columns reading `dbddb...`
    DB,
    /// `{c,a}`, columns reading `cacca...`
    CA,
}

impl ColAlphabet {
    pub fn alphabet(self) -> Alphabet1D {
        match self {
            ColAlphabet::DB => Alphabet1D::DB,
            ColAlphabet::CA => Alphabet1D::CA,
        }
    }
}

impl fmt::Display for RowAlphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RowAlphabet::DC => write!(f, "{{c,d}}"),
            RowAlphabet::BA => write!(f, "{{a,b}}"),
        }
    }
}

impl fmt::Display for ColAlphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ColAlphabet::DB => write!(f, "{{b,d}}"),
            ColAlphabet::CA => write!(f, "{{a,c}}"),
        }
    }
}
