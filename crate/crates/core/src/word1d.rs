//! One-dimensional Fibonacci words over a binary alphabet.
//!
//! Two numbering conventions are in play. The *standard* convention seeds
//! `f_0 = second`, `f_1 = first` and numbers lengths `1, 1, 2, 3, 5, ...`;
//! the *locator* convention seeds `f_0 = first`, `f_1 = first second` and
//! numbers lengths `1, 2, 3, 5, 8, ...`. Both generate the same infinite word
//! `first second first first second ...`; they only disagree on indices.
//!
//! Offsets returned by the occurrence functions are 0-based: an occurrence
//! `i` of `u` means `f_inf[i..i + |u|] == u`.

use std::collections::BTreeSet;
use std::fmt;
use std::ops::Index;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::letter::{Alphabet1D, Letter};

#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word1D(Vec<Letter>);

impl Word1D {
    pub fn new(letters: Vec<Letter>) -> Word1D {
        Word1D(letters)
    }

    pub fn empty() -> Word1D {
        Word1D(Vec::new())
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn into_letters(self) -> Vec<Letter> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn first(&self) -> Option<Letter> {
        self.0.first().copied()
    }

    pub fn last(&self) -> Option<Letter> {
        self.0.last().copied()
    }

    pub fn reversed(&self) -> Word1D {
        Word1D(self.0.iter().rev().copied().collect())
    }

    pub fn push(&mut self, letter: Letter) {
        self.0.push(letter);
    }

    pub fn with(&self, letter: Letter) -> Word1D {
        let mut w = self.clone();
        w.push(letter);
        w
    }

    pub fn map(&self, f: impl Fn(Letter) -> Letter) -> Word1D {
        Word1D(self.0.iter().map(|&l| f(l)).collect())
    }

    pub fn is_over(&self, alphabet: Alphabet1D) -> bool {
        self.0.iter().all(|&l| alphabet.contains(l))
    }

    pub fn prefix(&self, len: usize) -> Word1D {
        Word1D(self.0[..len.min(self.len())].to_vec())
    }

    /// Whether `needle` occurs in this word.
    pub fn contains(&self, needle: &Word1D) -> bool {
        needle.is_empty() || self.0.windows(needle.len()).any(|w| w == needle.letters())
    }
}

impl Index<usize> for Word1D {
    type Output = Letter;

    fn index(&self, i: usize) -> &Letter {
        &self.0[i]
    }
}

impl From<Vec<Letter>> for Word1D {
    fn from(v: Vec<Letter>) -> Word1D {
        Word1D(v)
    }
}

impl fmt::Display for Word1D {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.0 {
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

impl FromStr for Word1D {
    type Err = Error;

    fn from_str(s: &str) -> Result<Word1D> {
        s.trim()
            .chars()
            .map(|c| {
                Letter::from_char(c).ok_or_else(|| Error::Parse(format!("unknown letter `{c}`")))
            })
            .collect::<Result<Vec<_>>>()
            .map(Word1D)
    }
}

/// Numbering of the Fibonacci sequence.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Numbering {
    /// `F(0) = F(1) = 1, F(2) = 2, ...`
    F11,
    /// `F(0) = 1, F(1) = 2, F(2) = 3, ...`
    F12,
}

/// Seed words of the finite Fibonacci word recursion.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Seeds {
    /// `f_0 = second`, `f_1 = first`, `f_n = f_{n-1} f_{n-2}`.
    AbStandard,
    /// `f_0 = first`, `f_1 = first second`, `f_{n+1} = f_n f_{n-1}`.
    Loc,
}

/// A seed choice together with the numbering that makes `|f_n| = F(n)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FibConvention {
    numbering: Numbering,
    seeds: Seeds,
}

impl FibConvention {
    pub const STANDARD: FibConvention = FibConvention {
        numbering: Numbering::F11,
        seeds: Seeds::AbStandard,
    };
    pub const LOCATOR: FibConvention = FibConvention {
        numbering: Numbering::F12,
        seeds: Seeds::Loc,
    };

    pub fn numbering(self) -> Numbering {
        self.numbering
    }

    pub fn seeds(self) -> Seeds {
        self.seeds
    }
}

/// The `n`-th Fibonacci number.
pub fn fib(n: usize, numbering: Numbering) -> u64 {
    let (mut prev, mut cur) = match numbering {
        Numbering::F11 => (1u64, 1u64),
        Numbering::F12 => (1u64, 2u64),
    };
    if n == 0 {
        return prev;
    }
    for _ in 1..n {
        let next = prev + cur;
        prev = cur;
        cur = next;
    }
    cur
}

pub(crate) fn fib_usize(n: usize, numbering: Numbering) -> usize {
    fib(n, numbering) as usize
}

/// Smallest `n` with `F(n) > x`.
pub(crate) fn fib_index_above(x: usize, numbering: Numbering) -> usize {
    (0..).find(|&n| fib_usize(n, numbering) > x).unwrap()
}

/// The finite Fibonacci word `f_n` under the given convention.
pub fn fib_word(n: usize, alphabet: Alphabet1D, conv: FibConvention) -> Word1D {
    let (f0, f1) = match conv.seeds {
        Seeds::AbStandard => (vec![alphabet.second()], vec![alphabet.first()]),
        Seeds::Loc => (
            vec![alphabet.first()],
            vec![alphabet.first(), alphabet.second()],
        ),
    };
    if n == 0 {
        return Word1D(f0);
    }
    let mut prev = f0;
    let mut cur = f1;
    for _ in 1..n {
        let mut next = cur.clone();
        next.extend_from_slice(&prev);
        prev = cur;
        cur = next;
    }
    Word1D(cur)
}

/// Length-`len` prefix of the infinite Fibonacci word over `alphabet`.
pub fn fib_prefix(alphabet: Alphabet1D, len: usize) -> Word1D {
    // f_{n+1} = f_n f_{n-1}, and f_{n-1} is a prefix of f_n, so the word can
    // grow in place by copying its own prefix.
    let mut w = vec![alphabet.first(), alphabet.second()];
    let mut prev_len = 1;
    while w.len() < len {
        let cur_len = w.len();
        w.extend_from_within(..prev_len);
        prev_len = cur_len;
    }
    w.truncate(len);
    Word1D(w)
}

/// A prefix length that contains every factor of length `k`.
///
/// With `F(n) > k` (locator numbering) every length-`k` factor is a cyclic
/// factor of `f_n`, hence a factor of `f_n f_n`, which sits inside `f_{n+3}`.
fn factor_window(k: usize) -> usize {
    let n = fib_index_above(k, Numbering::F12);
    fib_usize(n + 3, Numbering::F12).max(k + 2)
}

fn distinct_windows(prefix: &Word1D, k: usize) -> BTreeSet<Vec<Letter>> {
    prefix.letters().windows(k).map(|w| w.to_vec()).collect()
}

fn sort_canonical(words: &mut [Word1D], alphabet: Alphabet1D) {
    words.sort_by_key(|w| {
        w.letters()
            .iter()
            .map(|&l| alphabet.rank(l).unwrap_or(u8::MAX))
            .collect::<Vec<_>>()
    });
}

/// The `k + 1` distinct factors of length `k`, ordered lexicographically
/// with `alphabet.first() < alphabet.second()`.
pub fn factors1d(k: usize, alphabet: Alphabet1D) -> Vec<Word1D> {
    if k == 0 {
        return vec![Word1D::empty()];
    }
    let prefix = fib_prefix(alphabet, factor_window(k));
    let mut out: Vec<Word1D> = distinct_windows(&prefix, k)
        .into_iter()
        .map(Word1D)
        .collect();
    assert_eq!(
        out.len(),
        k + 1,
        "factor complexity of a Sturmian word is k+1"
    );
    sort_canonical(&mut out, alphabet);
    out
}

/// Letters `x` such that `u x` is a factor.
pub fn right_extensions(u: &Word1D, alphabet: Alphabet1D) -> Result<Vec<Letter>> {
    if !u.is_over(alphabet) {
        return Err(Error::NotAFactor(u.to_string()));
    }
    let k = u.len() + 1;
    let prefix = fib_prefix(alphabet, factor_window(k));
    let mut ext: Vec<Letter> = prefix
        .letters()
        .windows(k)
        .filter(|w| w[..k - 1] == *u.letters())
        .map(|w| w[k - 1])
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    if ext.is_empty() {
        return Err(Error::NotAFactor(u.to_string()));
    }
    ext.sort_by_key(|&l| alphabet.rank(l));
    Ok(ext)
}

/// The unique factor of length `k` extendable on the right by both letters.
pub fn special_factor(k: usize, alphabet: Alphabet1D) -> Word1D {
    let longer = factors1d(k + 1, alphabet);
    let mut specials: Vec<Word1D> = Vec::new();
    for pair in longer.windows(2) {
        // canonical order puts `w first` and `w second` next to each other
        if pair[0].letters()[..k] == pair[1].letters()[..k] {
            specials.push(pair[0].prefix(k));
        }
    }
    assert_eq!(specials.len(), 1, "exactly one special factor per length");
    specials.pop().unwrap()
}

pub fn is_special(u: &Word1D, alphabet: Alphabet1D) -> bool {
    u.is_over(alphabet) && special_factor(u.len(), alphabet) == *u
}

pub fn is_factor(u: &Word1D, alphabet: Alphabet1D) -> bool {
    u.is_empty() || (u.is_over(alphabet) && right_extensions(u, alphabet).is_ok())
}

/// `T^p(w)`: rotate left by `p` positions; negative `p` rotates right.
pub fn rotate1d(w: &Word1D, p: i64) -> Result<Word1D> {
    if w.is_empty() {
        return Err(Error::EmptyWord);
    }
    let shift = p.rem_euclid(w.len() as i64) as usize;
    let mut letters = w.0.clone();
    letters.rotate_left(shift);
    Ok(Word1D(letters))
}

/// The special conjugate `q_n` of the standard `f_n`, whose inverse rotations
/// `T^0(q_n), T^-1(q_n), ..., T^-k(q_n)` have as length-`k` prefixes all the
/// factors of length `k < F(n)`.
pub fn special_conjugate1d(n: usize, alphabet: Alphabet1D) -> Result<Word1D> {
    if n < 2 {
        return Err(Error::OutOfRange(format!(
            "special conjugate needs n >= 2, got {n}"
        )));
    }
    let f = fib_word(n, alphabet, FibConvention::STANDARD);
    let exp = if n.is_multiple_of(2) {
        fib(n, Numbering::F11) - 1
    } else {
        fib(n - 1, Numbering::F11) - 1
    };
    rotate1d(&f, exp as i64)
}

/// The truncated word `g_n`: locator `f_n` minus its last two letters.
pub fn truncated(n: usize, alphabet: Alphabet1D) -> Result<Word1D> {
    if n < 2 {
        return Err(Error::TooShort(n));
    }
    let mut f = fib_word(n, alphabet, FibConvention::LOCATOR).into_letters();
    f.truncate(f.len() - 2);
    Ok(Word1D(f))
}

/// Zeckendorf representation of `x`: ascending Fibonacci indices, no two
/// consecutive, summing to `x`. Under `F11` index 0 is never used (it
/// duplicates index 1).
pub fn zeck_repr(x: u64, numbering: Numbering) -> Vec<usize> {
    let mut fibs = Vec::new();
    let mut i = 0;
    while fib(i, Numbering::F12) <= x {
        fibs.push(fib(i, Numbering::F12));
        i += 1;
    }
    let mut rest = x;
    let mut idx = Vec::new();
    for (i, &f) in fibs.iter().enumerate().rev() {
        if f <= rest {
            rest -= f;
            idx.push(i);
        }
    }
    idx.reverse();
    if numbering == Numbering::F11 {
        idx.iter_mut().for_each(|i| *i += 1);
    }
    idx
}

/// Members of `Z_n` below `bound`, ascending: the integers whose Zeckendorf
/// representation (locator numbering) avoids `F(0), ..., F(n-1)`.
pub fn z_stream(n: usize, bound: u64) -> Vec<u64> {
    fn grow(min_idx: usize, sum: u64, bound: u64, out: &mut Vec<u64>) {
        out.push(sum);
        let mut i = min_idx;
        loop {
            let f = fib(i, Numbering::F12);
            if sum + f >= bound {
                break;
            }
            grow(i + 2, sum + f, bound, out);
            i += 1;
        }
    }
    let mut out = Vec::new();
    if bound > 0 {
        grow(n, 0, bound, &mut out);
    }
    out.sort_unstable();
    out
}

/// `occ(u) = Z_{truncated_index - 1} + first_occ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
pub struct OccDescriptor1D {
    /// Least `n` with `u` a factor of `g_n`.
    pub truncated_index: usize,
    pub first_occ: usize,
}

impl OccDescriptor1D {
    /// Index of the shift set `Z_n` the occurrences are drawn from.
    pub fn z_index(&self) -> usize {
        self.truncated_index - 1
    }

    /// All described occurrences strictly below `bound`.
    pub fn members(&self, bound: u64) -> Vec<u64> {
        let first = self.first_occ as u64;
        if bound <= first {
            return Vec::new();
        }
        z_stream(self.z_index(), bound - first)
            .into_iter()
            .map(|z| z + first)
            .collect()
    }
}

fn check_factor(u: &Word1D, alphabet: Alphabet1D) -> Result<()> {
    if u.is_empty() {
        return Err(Error::EmptyWord);
    }
    if !is_factor(u, alphabet) {
        return Err(Error::NotAFactor(u.to_string()));
    }
    Ok(())
}

/// Least `n >= 2` such that `u` is a factor of the truncated word `g_n`.
pub fn shortest_truncated_index(u: &Word1D, alphabet: Alphabet1D) -> Result<usize> {
    check_factor(u, alphabet)?;
    Ok((2..)
        .find(|&n| truncated(n, alphabet).unwrap().contains(u))
        .unwrap())
}

pub fn occ_descriptor1d(u: &Word1D, alphabet: Alphabet1D) -> Result<OccDescriptor1D> {
    let n = shortest_truncated_index(u, alphabet)?;
    let scan = fib_prefix(alphabet, fib_usize(n + 2, Numbering::F12));
    let first_occ = scan
        .letters()
        .windows(u.len())
        .position(|w| w == u.letters())
        .ok_or_else(|| Error::NotAFactor(u.to_string()))?;
    Ok(OccDescriptor1D {
        truncated_index: n,
        first_occ,
    })
}

/// Least 0-based offset of `u` in the infinite word over `alphabet`.
pub fn first_occ1d(u: &Word1D, alphabet: Alphabet1D) -> Result<usize> {
    occ_descriptor1d(u, alphabet).map(|d| d.first_occ)
}

/// All occurrences of `u` below `bound`, ascending.
pub fn occ1d(u: &Word1D, alphabet: Alphabet1D, bound: u64) -> Result<Vec<u64>> {
    occ_descriptor1d(u, alphabet).map(|d| d.members(bound))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word1D {
        s.parse().unwrap()
    }

    fn set(words: &[&str]) -> BTreeSet<Word1D> {
        words.iter().map(|s| w(s)).collect()
    }

    /// Iterates the morphism `first -> first second`, `second -> first`.
    fn morphism_prefix(alphabet: Alphabet1D, len: usize) -> Word1D {
        let mut cur = vec![alphabet.first()];
        while cur.len() < len + 1 {
            cur = cur
                .iter()
                .flat_map(|&l| {
                    if l == alphabet.first() {
                        vec![alphabet.first(), alphabet.second()]
                    } else {
                        vec![alphabet.first()]
                    }
                })
                .collect();
        }
        cur.truncate(len);
        Word1D(cur)
    }

    fn scan_occurrences(u: &Word1D, text: &Word1D, bound: usize) -> Vec<u64> {
        text.letters()
            .windows(u.len())
            .enumerate()
            .filter(|(i, win)| *i < bound && *win == u.letters())
            .map(|(i, _)| i as u64)
            .collect()
    }

    #[test]
    fn fibonacci_numbers() {
        assert_eq!(fib(4, Numbering::F11), 5);
        assert_eq!(fib(0, Numbering::F11), 1);
        assert_eq!(fib(1, Numbering::F11), 1);
        assert_eq!(fib(4, Numbering::F12), 8);
        assert_eq!(fib(0, Numbering::F12), 1);
        for n in 0..40 {
            assert_eq!(fib(n, Numbering::F12), fib(n + 1, Numbering::F11));
        }
    }

    #[test]
    fn finite_fibonacci_words() {
        let ba = Alphabet1D::BA;
        assert_eq!(fib_word(4, ba, FibConvention::STANDARD), w("babba"));
        assert_eq!(fib_word(0, ba, FibConvention::STANDARD), w("a"));
        assert_eq!(
            fib_word(5, Alphabet1D::AB, FibConvention::LOCATOR),
            w("abaababaabaab")
        );
        for n in 0..15 {
            for conv in [FibConvention::STANDARD, FibConvention::LOCATOR] {
                let f = fib_word(n, ba, conv);
                assert_eq!(f.len() as u64, fib(n, conv.numbering()));
            }
        }
        for n in 2..15 {
            let f = fib_word(n, ba, FibConvention::STANDARD);
            let g = fib_word(n + 1, ba, FibConvention::STANDARD);
            assert_eq!(g.prefix(f.len()), f);
        }
    }

    #[test]
    fn infinite_word_prefixes() {
        assert_eq!(fib_prefix(Alphabet1D::BA, 8), w("babbabab"));
        assert_eq!(fib_prefix(Alphabet1D::DC, 5), w("dcddc"));
        assert!(fib_prefix(Alphabet1D::AB, 0).is_empty());
        for alph in [Alphabet1D::AB, Alphabet1D::DB, Alphabet1D::CA] {
            for len in [1, 2, 3, 7, 100, 987, 1000] {
                assert_eq!(fib_prefix(alph, len), morphism_prefix(alph, len));
            }
        }
    }

    #[test]
    fn factors_of_small_length() {
        let got: BTreeSet<_> = factors1d(4, Alphabet1D::AB).into_iter().collect();
        assert_eq!(got, set(&["baba", "abab", "aaba", "baab", "abaa"]));
        assert_eq!(factors1d(1, Alphabet1D::BA), vec![w("b"), w("a")]);
        let got: BTreeSet<_> = factors1d(2, Alphabet1D::BA).into_iter().collect();
        assert_eq!(got, set(&["ab", "ba", "bb"]));
        // seed-ordered canonical order: b < a for this alphabet
        assert_eq!(
            factors1d(2, Alphabet1D::BA),
            vec![w("bb"), w("ba"), w("ab")]
        );
    }

    #[test]
    fn factors_match_a_long_scan() {
        for alph in [
            Alphabet1D::DC,
            Alphabet1D::BA,
            Alphabet1D::DB,
            Alphabet1D::CA,
        ] {
            let text = morphism_prefix(alph, 5000);
            for k in 1..=25 {
                let oracle: BTreeSet<Word1D> =
                    distinct_windows(&text, k).into_iter().map(Word1D).collect();
                let got: BTreeSet<Word1D> = factors1d(k, alph).into_iter().collect();
                assert_eq!(got, oracle, "k={k} alphabet={alph}");
                let two_way: Vec<_> = got
                    .iter()
                    .filter(|u| right_extensions(u, alph).unwrap().len() == 2)
                    .collect();
                assert_eq!(two_way.len(), 1);
                assert_eq!(*two_way[0], special_factor(k, alph));
            }
        }
    }

    #[test]
    fn special_factors() {
        assert_eq!(special_factor(1, Alphabet1D::BA), w("b"));
        assert_eq!(special_factor(2, Alphabet1D::BA), w("ab"));
        assert_eq!(special_factor(2, Alphabet1D::DC), w("cd"));
        assert!(is_special(&w("ab"), Alphabet1D::BA));
        assert!(!is_special(&w("bb"), Alphabet1D::BA));
    }

    #[test]
    fn right_extension_sets() {
        assert_eq!(
            right_extensions(&w("bb"), Alphabet1D::BA).unwrap(),
            vec![Letter::A]
        );
        assert_eq!(
            right_extensions(&w("ab"), Alphabet1D::BA).unwrap(),
            vec![Letter::B, Letter::A]
        );
        assert_eq!(
            right_extensions(&w("aa"), Alphabet1D::BA),
            Err(Error::NotAFactor("aa".into()))
        );
        assert!(right_extensions(&w("dd"), Alphabet1D::BA).is_err());
    }

    #[test]
    fn rotations() {
        assert_eq!(rotate1d(&w("abaab"), 4).unwrap(), w("babaa"));
        assert_eq!(rotate1d(&w("babaa"), -1).unwrap(), w("ababa"));
        assert_eq!(rotate1d(&w("abaab"), 0).unwrap(), w("abaab"));
        assert_eq!(
            rotate1d(&w("abaab"), 9).unwrap(),
            rotate1d(&w("abaab"), 4).unwrap()
        );
        assert_eq!(rotate1d(&Word1D::empty(), 1), Err(Error::EmptyWord));
    }

    #[test]
    fn special_conjugates() {
        let q4 = special_conjugate1d(4, Alphabet1D::AB).unwrap();
        assert_eq!(q4, w("babaa"));
        let prefixes: BTreeSet<Word1D> = (0..=4)
            .map(|i| rotate1d(&q4, -i).unwrap().prefix(4))
            .collect();
        assert_eq!(prefixes, set(&["baba", "abab", "aaba", "baab", "abaa"]));

        let q3 = special_conjugate1d(3, Alphabet1D::BA).unwrap();
        assert_eq!(q3, w("abb"));
        let prefixes: BTreeSet<Word1D> = (0..=2)
            .map(|i| rotate1d(&q3, -i).unwrap().prefix(2))
            .collect();
        assert_eq!(prefixes, set(&["ab", "bb", "ba"]));
        assert!(special_conjugate1d(1, Alphabet1D::AB).is_err());
    }

    #[test]
    fn special_conjugate_prefixes_enumerate_factors() {
        for alph in [Alphabet1D::AB, Alphabet1D::DC] {
            for n in 2..=12 {
                let q = special_conjugate1d(n, alph).unwrap();
                for k in 1..fib_usize(n, Numbering::F11) {
                    let got: BTreeSet<Word1D> = (0..=k as i64)
                        .map(|i| rotate1d(&q, -i).unwrap().prefix(k))
                        .collect();
                    let want: BTreeSet<Word1D> = factors1d(k, alph).into_iter().collect();
                    assert_eq!(got, want, "n={n} k={k}");
                }
            }
        }
    }

    #[test]
    fn truncated_words() {
        assert_eq!(truncated(5, Alphabet1D::AB).unwrap(), w("abaababaaba"));
        assert_eq!(truncated(2, Alphabet1D::AB).unwrap(), w("a"));
        assert_eq!(truncated(1, Alphabet1D::AB), Err(Error::TooShort(1)));
        for n in 2..20 {
            assert_eq!(
                truncated(n, Alphabet1D::DB).unwrap().len() as u64,
                fib(n, Numbering::F12) - 2
            );
        }
    }

    /// Greedy largest-first decomposition, checked independently.
    fn greedy_values(x: u64) -> Vec<u64> {
        let mut fibs = vec![1u64, 2];
        while *fibs.last().unwrap() <= x {
            let n = fibs[fibs.len() - 1] + fibs[fibs.len() - 2];
            fibs.push(n);
        }
        let mut rest = x;
        let mut out = Vec::new();
        for &f in fibs.iter().rev() {
            if f <= rest {
                out.push(f);
                rest -= f;
            }
        }
        out.reverse();
        out
    }

    #[test]
    fn zeckendorf_representations() {
        assert!(zeck_repr(0, Numbering::F12).is_empty());
        assert_eq!(greedy_values(11), vec![3, 8]);
        assert_eq!(zeck_repr(11, Numbering::F12), vec![2, 4]);
        assert_eq!(zeck_repr(4, Numbering::F12), vec![0, 2]);
        assert_eq!(zeck_repr(4, Numbering::F11), vec![1, 3]);
        for x in 0..=10_000u64 {
            let idx = zeck_repr(x, Numbering::F12);
            let values: Vec<u64> = idx.iter().map(|&i| fib(i, Numbering::F12)).collect();
            assert_eq!(values, greedy_values(x));
            assert_eq!(values.iter().sum::<u64>(), x);
            assert!(idx.windows(2).all(|p| p[1] >= p[0] + 2));
            let idx11 = zeck_repr(x, Numbering::F11);
            assert_eq!(
                idx11.iter().map(|&i| fib(i, Numbering::F11)).sum::<u64>(),
                x
            );
        }
    }

    #[test]
    fn z_sets() {
        assert_eq!(z_stream(1, 6), vec![0, 2, 3, 5]);
        assert_eq!(z_stream(2, 12), vec![0, 3, 5, 8, 11]);
        assert_eq!(z_stream(4, 30), vec![0, 8, 13, 21, 29]);
        assert_eq!(z_stream(3, 19), vec![0, 5, 8, 13, 18]);
        assert!(z_stream(3, 0).is_empty());
        for n in 1..8 {
            let filtered: Vec<u64> = (0..2000u64)
                .filter(|&x| zeck_repr(x, Numbering::F12).iter().all(|&i| i >= n))
                .collect();
            assert_eq!(z_stream(n, 2000), filtered, "Z_{n}");
        }
    }

    #[test]
    fn first_occurrences() {
        assert_eq!(first_occ1d(&w("abab"), Alphabet1D::AB).unwrap(), 3);
        assert_eq!(first_occ1d(&w("a"), Alphabet1D::AB).unwrap(), 0);
        assert_eq!(first_occ1d(&w("ddb"), Alphabet1D::DB).unwrap(), 2);
        assert_eq!(
            shortest_truncated_index(&w("ddb"), Alphabet1D::DB).unwrap(),
            4
        );
        assert_eq!(
            shortest_truncated_index(&w("abab"), Alphabet1D::AB).unwrap(),
            5
        );
        assert_eq!(
            first_occ1d(&w("aa"), Alphabet1D::BA),
            Err(Error::NotAFactor("aa".into()))
        );
        assert_eq!(
            first_occ1d(&Word1D::empty(), Alphabet1D::BA),
            Err(Error::EmptyWord)
        );
    }

    #[test]
    fn occurrence_sets() {
        assert_eq!(
            occ1d(&w("abab"), Alphabet1D::AB, 33).unwrap(),
            vec![3, 11, 16, 24, 32]
        );
        assert_eq!(occ1d(&w("a"), Alphabet1D::AB, 6).unwrap(), vec![0, 2, 3, 5]);
        // occ(f_1) = occ(f_2)
        assert_eq!(
            occ1d(&w("ab"), Alphabet1D::AB, 200).unwrap(),
            occ1d(&w("aba"), Alphabet1D::AB, 200).unwrap()
        );
        assert!(occ1d(&w("abab"), Alphabet1D::AB, 3).unwrap().is_empty());
    }

    #[test]
    fn occurrence_sets_match_scanning() {
        const BOUND: usize = 500;
        for alph in [
            Alphabet1D::AB,
            Alphabet1D::DC,
            Alphabet1D::BA,
            Alphabet1D::DB,
            Alphabet1D::CA,
        ] {
            for k in 1..=15 {
                let text = morphism_prefix(alph, BOUND + k);
                for u in factors1d(k, alph) {
                    let got = occ1d(&u, alph, BOUND as u64).unwrap();
                    assert_eq!(got, scan_occurrences(&u, &text, BOUND), "u={u} over {alph}");
                }
            }
        }
    }

    #[test]
    fn renaming_commutes() {
        let pairs = [
            (Alphabet1D::AB, Alphabet1D::DC),
            (Alphabet1D::BA, Alphabet1D::CA),
            (Alphabet1D::DB, Alphabet1D::AB),
        ];
        for (from, to) in pairs {
            let rename = |u: &Word1D| u.map(|l| from.rename(to, l).unwrap());
            for k in 1..=12 {
                let mapped: Vec<Word1D> = factors1d(k, from).iter().map(rename).collect();
                assert_eq!(mapped, factors1d(k, to));
                assert_eq!(rename(&special_factor(k, from)), special_factor(k, to));
                for u in factors1d(k, from) {
                    assert_eq!(
                        occ1d(&u, from, 300).unwrap(),
                        occ1d(&rename(&u), to, 300).unwrap()
                    );
                }
            }
        }
    }
}
