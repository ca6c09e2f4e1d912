//! Brute-force ground truth over explicit prefixes of the 2D word, and the
//! cross-method verification report.

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use crate::conjugacy::{enumerate_conjugation, enumerate_prefix_conjugates};
use crate::dawg::enumerate_dawg;
use crate::error::{Error, Result};
use crate::frames::enumerate_extension;
use crate::locator::Occurrence2D;
use crate::word1d::{fib_index_above, fib_usize, Numbering};
use crate::word2d::{mu_prefix, Word2D};

/// Distinct `(k,l)` blocks of the `(rows, cols)` prefix.
pub fn oracle_subwords(k: usize, l: usize, rows: usize, cols: usize) -> Result<BTreeSet<Word2D>> {
    if k == 0 || l == 0 || rows < k || cols < l {
        return Err(Error::BadBounds(format!(
            "cannot take ({k},{l}) blocks from a ({rows},{cols}) prefix"
        )));
    }
    let big = mu_prefix(rows, cols)?;
    let mut out = BTreeSet::new();
    for r in 0..=rows - k {
        for c in 0..=cols - l {
            out.insert(big.window(r, c, k, l));
        }
    }
    Ok(out)
}

/// Every offset where `w` sits entirely inside the `(rows, cols)` prefix.
pub fn oracle_occurrences(w: &Word2D, rows: usize, cols: usize) -> Result<Vec<Occurrence2D>> {
    if w.is_empty() || rows < w.rows() || cols < w.cols() {
        return Err(Error::BadBounds(format!(
            "cannot place a ({},{}) block in a ({rows},{cols}) prefix",
            w.rows(),
            w.cols()
        )));
    }
    let big = mu_prefix(rows, cols)?;
    let mut out = Vec::new();
    for r in 0..=rows - w.rows() {
        for c in 0..=cols - w.cols() {
            if big.matches_at(w, r, c) {
                out.push(Occurrence2D::new(r as u64, c as u64));
            }
        }
    }
    Ok(out)
}

/// `(F(m+2), F(n+2))` with `m`, `n` least such that `k < F(m)`, `l < F(n)`
/// (`F(0) = F(1) = 1`).
pub fn sufficient_prefix(k: usize, l: usize) -> (usize, usize) {
    let side = |x| {
        fib_usize(
            fib_index_above(x, Numbering::F11).max(2) + 2,
            Numbering::F11,
        )
    };
    (side(k), side(l))
}

/// Oracle set on the sufficient prefix, and whether doubling the prefix
/// leaves it unchanged.
pub fn stable_oracle(k: usize, l: usize) -> Result<(BTreeSet<Word2D>, bool)> {
    let (r, c) = sufficient_prefix(k, l);
    let base = oracle_subwords(k, l, r, c)?;
    let doubled = oracle_subwords(k, l, 2 * r, 2 * c)?;
    let stable = base == doubled;
    Ok((base, stable))
}

#[derive(Clone, Debug, Serialize)]
pub struct MethodResult {
    pub method: &'static str,
    pub size: usize,
    pub count_ok: bool,
    pub matches_oracle: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport {
    pub k: usize,
    pub l: usize,
    pub expected: usize,
    pub oracle_prefix: (usize, usize),
    pub oracle_size: usize,
    pub oracle_stable: bool,
    pub methods: Vec<MethodResult>,
    /// Pairs of methods whose sets differ.
    pub disagreements: Vec<(&'static str, &'static str)>,
    pub all_pass: bool,
}

/// Runs every enumeration method plus the oracle and compares the sets.
pub fn verify(k: usize, l: usize) -> Result<VerifyReport> {
    if k == 0 || l == 0 {
        return Err(Error::OutOfRange(format!(
            "subword size ({k},{l}) must be positive"
        )));
    }
    let expected = (k + 1) * (l + 1);
    let (oracle, oracle_stable) = stable_oracle(k, l)?;
    let mut sets: Vec<(&'static str, BTreeSet<Word2D>)> = vec![
        ("dawg", enumerate_dawg(k, l)?),
        ("extend", enumerate_extension(k, l)?),
        ("conjugate", enumerate_conjugation(k, l)?),
    ];
    if k >= 2 && l >= 2 {
        sets.push(("prefix", enumerate_prefix_conjugates(k, l)?));
    }
    let methods: Vec<MethodResult> = sets
        .iter()
        .map(|(name, s)| MethodResult {
            method: name,
            size: s.len(),
            count_ok: s.len() == expected,
            matches_oracle: *s == oracle,
        })
        .collect();
    sets.push(("oracle", oracle));
    let mut disagreements = Vec::new();
    for (i, (a, sa)) in sets.iter().enumerate() {
        for (b, sb) in &sets[i + 1..] {
            if sa != sb {
                disagreements.push((*a, *b));
            }
        }
    }
    let oracle_size = sets.last().map(|(_, s)| s.len()).unwrap_or(0);
    let all_pass = oracle_stable
        && oracle_size == expected
        && disagreements.is_empty()
        && methods.iter().all(|m| m.count_ok && m.matches_oracle);
    Ok(VerifyReport {
        k,
        l,
        expected,
        oracle_prefix: sufficient_prefix(k, l),
        oracle_size,
        oracle_stable,
        methods,
        disagreements,
        all_pass,
    })
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let yes = |b: bool| if b { "yes" } else { "NO" };
        writeln!(
            f,
            "size ({},{}): expecting {} subwords",
            self.k, self.l, self.expected
        )?;
        writeln!(
            f,
            "{:<10} {:>6} {:>8} {:>8}",
            "method", "count", "count ok", "= oracle"
        )?;
        for m in &self.methods {
            writeln!(
                f,
                "{:<10} {:>6} {:>8} {:>8}",
                m.method,
                m.size,
                yes(m.count_ok),
                yes(m.matches_oracle)
            )?;
        }
        let (r, c) = self.oracle_prefix;
        writeln!(
            f,
            "{:<10} {:>6} {:>8}   prefix {r}x{c}, stable at {}x{}: {}",
            "oracle",
            self.oracle_size,
            yes(self.oracle_size == self.expected),
            2 * r,
            2 * c,
            yes(self.oracle_stable)
        )?;
        for (a, b) in &self.disagreements {
            writeln!(f, "mismatch: {a} vs {b}")?;
        }
        writeln!(f, "{}", if self.all_pass { "PASS" } else { "FAIL" })
    }
}
