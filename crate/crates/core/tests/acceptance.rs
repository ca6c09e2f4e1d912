//! One line per acceptance criterion. Run with
//! `cargo test -p fib2d --test acceptance -- --nocapture` to see the report.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use proptest::prelude::*;
use proptest::test_runner::{Config, TestRunner};

use fib2d::cli::{enumerate, Method};
use fib2d::conjugacy::{conjugacy_class, conjugation_table, rotate2d, Rotation2D};
use fib2d::frames::{
    classify_frame, extend_diagonal, extend_one, fill_from_frame, frame_tl, FrameType,
};
use fib2d::letter::Alphabet1D;
use fib2d::locator::{occ2d, Occurrence2D};
use fib2d::oracle::{oracle_occurrences, stable_oracle};
use fib2d::word1d::{fib, occ1d, rotate1d, special_conjugate1d, zeck_repr, Numbering, Word1D};
use fib2d::word2d::{classify_lines, fib_array, mu_prefix, Seeds2D, Word2D};

const TABLE1_LIMIT: Duration = Duration::from_secs(1);
const TABLE2_LIMIT: Duration = Duration::from_secs(1);
const COUNT_LAW_LIMIT: Duration = Duration::from_secs(60);
const STRUCTURE_LIMIT: Duration = Duration::from_secs(120);

const ALL_METHODS: [Method; 5] = [
    Method::Dawg,
    Method::Extend,
    Method::Conjugate,
    Method::Prefix,
    Method::Oracle,
];

type Check = Result<String, String>;
type Criterion = (&'static str, fn() -> Check);

/// Source block, its frame type, and the blocks it extends to.
type ExtensionRow<'a> = (&'a [&'a str], FrameType, &'a [[&'a str; 3]]);

fn g(rows: &[&str]) -> Word2D {
    Word2D::from_strs(rows).unwrap()
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(start: Instant, limit: Duration) -> Result<String, String> {
    let t = start.elapsed();
    ensure(t < limit, || format!("took {t:.2?}, limit {limit:?}"))?;
    Ok(format!("{t:.2?} < {limit:?}"))
}

fn table1() -> BTreeSet<Word2D> {
    [
        ["dc", "ba"],
        ["dc", "dc"],
        ["dd", "bb"],
        ["dd", "dd"],
        ["cd", "ab"],
        ["cd", "cd"],
        ["ba", "dc"],
        ["bb", "dd"],
        ["ab", "cd"],
    ]
    .iter()
    .map(|r| g(r))
    .collect()
}

fn criterion_1() -> Check {
    let start = Instant::now();
    let want = table1();
    for m in ALL_METHODS {
        let got = enumerate(2, 2, m).map_err(|e| format!("{m:?}: {e}"))?;
        ensure(got == want, || {
            format!("{m:?} returned {} blocks, not Table 1", got.len())
        })?;
    }
    within(start, TABLE1_LIMIT)
}

fn criterion_2() -> Check {
    let start = Instant::now();
    let rows: [ExtensionRow; 9] = [
        (&["dc", "ba"], FrameType::I, &[["dcd", "bab", "dcd"]]),
        (&["dc", "dc"], FrameType::I, &[["dcd", "dcd", "bab"]]),
        (&["dd", "bb"], FrameType::I, &[["ddc", "bba", "ddc"]]),
        (&["dd", "dd"], FrameType::I, &[["ddc", "ddc", "bba"]]),
        (
            &["cd", "ab"],
            FrameType::III,
            &[["cdc", "aba", "cdc"], ["cdd", "abb", "cdd"]],
        ),
        (
            &["cd", "cd"],
            FrameType::III,
            &[["cdc", "cdc", "aba"], ["cdd", "cdd", "abb"]],
        ),
        (
            &["ba", "dc"],
            FrameType::II,
            &[["bab", "dcd", "bab"], ["bab", "dcd", "dcd"]],
        ),
        (
            &["bb", "dd"],
            FrameType::II,
            &[["bba", "ddc", "bba"], ["bba", "ddc", "ddc"]],
        ),
        (
            &["ab", "cd"],
            FrameType::IV,
            &[
                ["aba", "cdc", "aba"],
                ["aba", "cdc", "cdc"],
                ["abb", "cdd", "abb"],
                ["abb", "cdd", "cdd"],
            ],
        ),
    ];
    let mut table2 = BTreeSet::new();
    for (src, ty, outs) in rows {
        let src = g(src);
        let got_ty = classify_frame(&frame_tl(&src).map_err(|e| e.to_string())?);
        ensure(got_ty == ty, || {
            format!("type of {:?}: {got_ty}, want {ty}", src.row_strings())
        })?;
        let got: BTreeSet<Word2D> = extend_one(&src)
            .map_err(|e| e.to_string())?
            .into_iter()
            .collect();
        let want: BTreeSet<Word2D> = outs.iter().map(|r| g(r)).collect();
        ensure(got == want, || {
            format!("extensions of {:?} differ", src.row_strings())
        })?;
        ensure(got.len() == ty.extension_count(), || {
            format!("type {ty} multiplicity {}", got.len())
        })?;
        table2.extend(want);
    }
    let extended = extend_diagonal(&table1()).map_err(|e| e.to_string())?;
    ensure(extended == table2 && table2.len() == 16, || {
        format!("extension gave {} blocks", extended.len())
    })?;
    within(start, TABLE2_LIMIT)
}

fn criterion_3() -> Check {
    let want: [(i64, i64, [&str; 3], [&str; 2]); 9] = [
        (0, 0, ["abb", "cdd", "cdd"], ["ab", "cd"]),
        (0, -1, ["bab", "dcd", "dcd"], ["ba", "dc"]),
        (0, -2, ["bba", "ddc", "ddc"], ["bb", "dd"]),
        (-1, 0, ["cdd", "abb", "cdd"], ["cd", "ab"]),
        (-1, -1, ["dcd", "bab", "dcd"], ["dc", "ba"]),
        (-1, -2, ["ddc", "bba", "ddc"], ["dd", "bb"]),
        (-2, 0, ["cdd", "cdd", "abb"], ["cd", "cd"]),
        (-2, -1, ["dcd", "dcd", "bab"], ["dc", "dc"]),
        (-2, -2, ["ddc", "ddc", "bba"], ["dd", "dd"]),
    ];
    let table = conjugation_table(2, 2).map_err(|e| e.to_string())?;
    ensure(table.len() == 9, || format!("{} rows", table.len()))?;
    for (row, (i, j, conj, pre)) in table.iter().zip(want) {
        ensure(row.rotation == Rotation2D::new(i, j), || {
            format!("row order at ({i},{j})")
        })?;
        ensure(row.conjugate == g(&conj), || {
            format!("conjugate at ({i},{j})")
        })?;
        ensure(row.prefix == g(&pre), || format!("prefix at ({i},{j})"))?;
    }
    Ok("9/9 rows exact".into())
}

fn criterion_4() -> Check {
    let start = Instant::now();
    for k in 1..=10 {
        for l in 1..=10 {
            let mut reference: Option<BTreeSet<Word2D>> = None;
            for m in [
                Method::Dawg,
                Method::Extend,
                Method::Conjugate,
                Method::Prefix,
            ] {
                if m == Method::Prefix && (k < 2 || l < 2) {
                    continue;
                }
                let set = enumerate(k, l, m).map_err(|e| format!("{m:?} ({k},{l}): {e}"))?;
                ensure(set.len() == (k + 1) * (l + 1), || {
                    format!("{m:?} ({k},{l}): {} subwords", set.len())
                })?;
                match &reference {
                    None => reference = Some(set),
                    Some(r) => ensure(*r == set, || format!("{m:?} ({k},{l}) differs from dawg"))?,
                }
            }
        }
    }
    within(start, COUNT_LAW_LIMIT)
}

fn criterion_5() -> Check {
    for k in 1..=8 {
        for l in 1..=8 {
            let (oracle, stable) = stable_oracle(k, l).map_err(|e| e.to_string())?;
            ensure(stable, || format!("oracle prefix unstable at ({k},{l})"))?;
            for m in [
                Method::Dawg,
                Method::Extend,
                Method::Conjugate,
                Method::Prefix,
            ] {
                if m == Method::Prefix && (k < 2 || l < 2) {
                    continue;
                }
                let set = enumerate(k, l, m).map_err(|e| e.to_string())?;
                ensure(set == oracle, || {
                    format!("{m:?} ({k},{l}) differs from oracle")
                })?;
            }
        }
    }
    Ok("64 sizes, double-bound stable".into())
}

fn criterion_6() -> Check {
    let u: Word1D = "abab".parse().unwrap();
    let got = occ1d(&u, Alphabet1D::AB, 33).map_err(|e| e.to_string())?;
    ensure(got == [3, 11, 16, 24, 32], || format!("{got:?}"))?;
    Ok(format!("{got:?}"))
}

fn criterion_7() -> Check {
    let w = g(&["ddc", "ddc", "bba"]);
    let axis = [2u64, 7, 10, 15, 20];
    let want: Vec<Occurrence2D> = axis
        .iter()
        .flat_map(|&x| axis.iter().map(move |&y| Occurrence2D::new(x, y)))
        .collect();
    let got = occ2d(&w, 21, 21).map_err(|e| e.to_string())?;
    ensure(got == want, || {
        format!("{} occurrences, first {:?}", got.len(), got.first())
    })?;
    let scanned = oracle_occurrences(&w, 24, 24).map_err(|e| e.to_string())?;
    ensure(scanned == want, || {
        format!("oracle found {} occurrences", scanned.len())
    })?;
    Ok("X = Y = {2,7,10,15,20}, oracle agrees".into())
}

fn criterion_8() -> Check {
    let q = special_conjugate1d(4, Alphabet1D::AB).map_err(|e| e.to_string())?;
    ensure(q.to_string() == "babaa", || format!("q_4 = {q}"))?;
    let prefixes: Vec<String> = (0..=4)
        .map(|p| rotate1d(&q, -p).unwrap().prefix(4).to_string())
        .collect();
    ensure(prefixes == ["baba", "abab", "aaba", "baab", "abaa"], || {
        format!("{prefixes:?}")
    })?;
    Ok(format!("q_4 = {q}, prefixes {prefixes:?}"))
}

fn structural_laws() -> Result<(), String> {
    let mut runner = TestRunner::new(Config {
        cases: 256,
        failure_persistence: None,
        ..Config::default()
    });
    let big = mu_prefix(60, 60).unwrap();
    let blocks = (1usize..=8, 1usize..=8, 0usize..52, 0usize..52)
        .prop_map(move |(k, l, r, c)| big.window(r, c, k, l));

    runner
        .run(&blocks, |w| {
            let f = frame_tl(&w).unwrap();
            prop_assert_eq!(fill_from_frame(&f).unwrap(), w);
            Ok(())
        })
        .map_err(|e| format!("frame round trip: {e}"))?;

    let big = mu_prefix(60, 60).unwrap();
    let rotations = (
        (1usize..=8, 1usize..=8, 0usize..52, 0usize..52),
        -50i64..50,
        -50i64..50,
    );
    runner
        .run(&rotations, |((k, l, r, c), i, j)| {
            let w = big.window(r, c, k, l);
            let rot = Rotation2D::new(i, j);
            prop_assert_eq!(
                rotate2d(&rotate2d(&w, rot).unwrap(), rot.inverse()).unwrap(),
                w
            );
            Ok(())
        })
        .map_err(|e| format!("rotate/unrotate: {e}"))?;

    runner
        .run(&(1usize..=8, 1usize..=8), |(k, l)| {
            for w in enumerate(k, l, Method::Dawg).unwrap() {
                prop_assert!(classify_lines(&w).is_ok());
            }
            Ok(())
        })
        .map_err(|e| format!("classify_lines: {e}"))?;

    for m in 2..=6 {
        for n in 2..=6 {
            let size = conjugacy_class(&fib_array(m, n, Seeds2D::default())).len() as u64;
            let want = fib(m, Numbering::F11) * fib(n, Numbering::F11);
            ensure(size == want, || {
                format!("class of f_{{{m},{n}}} has {size}, want {want}")
            })?;
        }
    }

    for x in 0..=104u64 {
        let idx = zeck_repr(x, Numbering::F12);
        let sum: u64 = idx.iter().map(|&i| fib(i, Numbering::F12)).sum();
        ensure(sum == x && idx.windows(2).all(|p| p[1] >= p[0] + 2), || {
            format!("zeck_repr({x}) = {idx:?}")
        })?;
    }
    Ok(())
}

fn criterion_9() -> Check {
    let start = Instant::now();
    structural_laws()?;
    within(start, STRUCTURE_LIMIT)
}

#[test]
fn acceptance() {
    let checks: [Criterion; 9] = [
        ("Table 1 under every method", criterion_1),
        ("Table 2 by extension with type multiplicities", criterion_2),
        ("Table 3 conjugates and prefixes", criterion_3),
        (
            "(k+1)(l+1) count law, all methods agree, k,l <= 10",
            criterion_4,
        ),
        ("methods equal oracle, k,l <= 8", criterion_5),
        ("1D occurrences of abab below 33", criterion_6),
        ("2D occurrences of the 3x3 example", criterion_7),
        ("special conjugate q_4 and its prefixes", criterion_8),
        ("structural laws (property suite)", criterion_9),
    ];
    let mut failed = Vec::new();
    for (n, (name, check)) in checks.iter().enumerate() {
        let (tag, detail) = match check() {
            Ok(d) => ("PASS", d),
            Err(d) => {
                failed.push(n + 1);
                ("FAIL", d)
            }
        };
        println!("[{tag}] {}. {name}: {detail}", n + 1);
    }
    // Infinite-word claims are only checked through the bounded suites above.
    let bounded_ok = ![4, 5, 9].iter().any(|n| failed.contains(n));
    if !bounded_ok {
        failed.push(10);
    }
    println!(
        "[{}] 10. infinite-word claims: covered by bounded suites 4, 5 and 9 only",
        if bounded_ok { "PASS" } else { "FAIL" }
    );
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
