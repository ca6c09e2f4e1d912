pub mod cli;
pub mod conjugacy;
pub mod dawg;
pub mod error;
pub mod frames;
pub mod letter;
pub mod locator;
pub mod oracle;
pub mod word1d;
pub mod word2d;

pub use error::{Error, Result};
pub use letter::{Alphabet1D, ColAlphabet, Letter, LetterSet, RowAlphabet};
