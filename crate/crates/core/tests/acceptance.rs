//! Exit criteria. Run with `cargo test --test acceptance -- --nocapture` to
//! see one PASS/FAIL line per criterion.

use std::collections::BTreeSet;
use std::process::Command;
use std::time::{Duration, Instant};

use serde_json::{json, Value};

use semigap::{
    dls, dual_set, h_residue_signature, isolated_count, isolated_gaps, oracle_dls,
    oracle_isolated_gaps, residue_partition, smith_extension, AnalysisDocument, PairSemigroup,
};

const SWEEP_MAX_B: i64 = 60;
/// Coprime pairs 1 < a < b <= 60, counted by `independent_pairs`.
const SWEEP_PAIRS: usize = 1042;
const EXAMPLE_BUDGET: Duration = Duration::from_millis(10);
const SWEEP_BUDGET: Duration = Duration::from_secs(5);

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn independent_pairs() -> Vec<(i64, i64)> {
    fn euclid(x: i64, y: i64) -> i64 {
        if y == 0 {
            x
        } else {
            euclid(y, x % y)
        }
    }
    let mut pairs = Vec::new();
    for b in 2..=SWEEP_MAX_B {
        for a in 2..b {
            if euclid(b, a) == 1 {
                pairs.push((a, b));
            }
        }
    }
    pairs
}

fn analyze(a: i64, b: i64) -> Value {
    let out = Command::new(env!("CARGO_BIN_EXE_semigap"))
        .args([
            "analyze",
            &a.to_string(),
            &b.to_string(),
            "--format",
            "json",
        ])
        .output()
        .expect("run semigap");
    assert!(out.status.success(), "analyze {a} {b} failed");
    serde_json::from_slice(&out.stdout).expect("analyze emits JSON")
}

fn expect_eq(what: &str, got: &Value, want: Value) -> Result<(), String> {
    if *got == want {
        Ok(())
    } else {
        Err(format!("{what}: got {got}, want {want}"))
    }
}

fn time_analysis(a: i64, b: i64) -> Duration {
    let start = Instant::now();
    let s = PairSemigroup::new(a, b).unwrap();
    let doc = AnalysisDocument::new(&s).unwrap();
    std::hint::black_box(doc.to_json());
    start.elapsed()
}

fn criterion_1() -> Outcome {
    let doc = analyze(9, 13);
    expect_eq("dls", &doc["dls"], json!({"u": 3, "v": -2}))?;
    expect_eq("count", &doc["isolated_count"], json!(6))?;
    expect_eq(
        "I(S)",
        &doc["isolated_gaps"],
        json!([64, 73, 77, 82, 86, 95]),
    )?;
    expect_eq("h", &doc["min_isolated_gap"], json!(64))?;
    expect_eq("F", &doc["frobenius"], json!(95))?;
    let elapsed = time_analysis(9, 13);
    if elapsed >= EXAMPLE_BUDGET {
        return Err(format!("analysis took {elapsed:?}"));
    }
    Ok(format!("exact match, analysis in {elapsed:?}"))
}

fn criterion_2() -> Outcome {
    let doc = analyze(8, 13);
    expect_eq("dls", &doc["dls"], json!({"u": 5, "v": -3}))?;
    expect_eq("count", &doc["isolated_count"], json!(15))?;
    expect_eq(
        "I(S)",
        &doc["isolated_gaps"],
        json!([25, 33, 38, 41, 46, 49, 51, 54, 57, 59, 62, 67, 70, 75, 83]),
    )?;
    Ok("exact match".into())
}

fn criterion_3() -> Outcome {
    let doc = analyze(7, 16);
    expect_eq("dls", &doc["dls"], json!({"u": 7, "v": -3}))?;
    expect_eq(
        "partition mod 7",
        &doc["partition_mod_a"],
        json!({
            "modulus": 7,
            "blocks": [
                {"residue": 1, "gaps": [15, 22, 29, 36, 43, 50, 57]},
                {"residue": 3, "gaps": [31, 38, 45, 52, 59, 66, 73]},
                {"residue": 5, "gaps": [47, 54, 61, 68, 75, 82, 89]},
            ]
        }),
    )?;
    expect_eq(
        "L(S)",
        &doc["gap_matrix"]["entries"],
        json!([
            [15, 22, 29, 36, 43, 50, 57],
            [31, 38, 45, 52, 59, 66, 73],
            [47, 54, 61, 68, 75, 82, 89],
        ]),
    )?;
    Ok("exact match".into())
}

fn criterion_4() -> Outcome {
    let doc = analyze(7, 11);
    expect_eq("h", &doc["min_isolated_gap"], json!(34))?;
    expect_eq(
        "I(S)",
        &doc["isolated_gaps"],
        json!([34, 41, 45, 48, 52, 59]),
    )?;
    Ok("exact match".into())
}

fn criterion_5() -> Outcome {
    let pairs = independent_pairs();
    if pairs.len() != SWEEP_PAIRS {
        return Err(format!("{} pairs enumerated", pairs.len()));
    }
    let start = Instant::now();
    for &(a, b) in &pairs {
        let s = PairSemigroup::new(a, b).map_err(|e| e.to_string())?;
        let d = s.dls();
        let closed = isolated_count(&s);
        let brute = oracle_isolated_gaps(&[a, b])
            .map_err(|e| e.to_string())?
            .isolated_gaps
            .len() as i64;
        if closed != (d.u * d.v).abs() || closed != brute {
            return Err(format!(
                "<{a}, {b}>: closed {closed}, |uv| {}, brute {brute}",
                (d.u * d.v).abs()
            ));
        }
    }
    let elapsed = start.elapsed();
    if elapsed >= SWEEP_BUDGET {
        return Err(format!("sweep took {elapsed:?}"));
    }
    Ok(format!(
        "{} pairs, single-threaded in {elapsed:?}",
        pairs.len()
    ))
}

fn criterion_6() -> Outcome {
    for (a, b) in independent_pairs() {
        let s = PairSemigroup::new(a, b).unwrap();
        let closed: BTreeSet<i64> = isolated_gaps(&s).gaps.into_iter().collect();
        let brute: BTreeSet<i64> = oracle_isolated_gaps(&[a, b])
            .unwrap()
            .isolated_gaps
            .into_iter()
            .collect();
        if closed != brute {
            return Err(format!("<{a}, {b}>: {closed:?} vs {brute:?}"));
        }
    }
    Ok(format!("{SWEEP_PAIRS} pairs set-equal"))
}

fn criterion_7() -> Outcome {
    for (a, b) in independent_pairs() {
        let s = PairSemigroup::new(a, b).unwrap();
        let d = s.dls();
        let f = s.frobenius();
        let gaps = isolated_gaps(&s).gaps;

        let p = residue_partition(&s, a).map_err(|e| e.to_string())?;
        if p.blocks.len() as i64 != d.v.abs()
            || p.blocks.values().any(|blk| blk.len() as i64 != d.u.abs())
        {
            return Err(format!("<{a}, {b}>: partition mod a {:?}", p.blocks));
        }
        if gaps.iter().max() != Some(&f) || !gaps.contains(&f) {
            return Err(format!("<{a}, {b}>: max I(S) != F(S)"));
        }
        let t = dual_set(&s).elements;
        let predicate_ok = t
            .iter()
            .all(|&x| x < f && s.contains(x) && !s.contains(x - 1) && !s.contains(x + 1));
        let image: BTreeSet<i64> = t.iter().map(|x| f - x).collect();
        let target: BTreeSet<i64> = gaps.iter().copied().collect();
        if !predicate_ok || image != target || image.len() != t.len() {
            return Err(format!("<{a}, {b}>: alpha is not a bijection T(S) -> I(S)"));
        }
        let sig = h_residue_signature(&s);
        if !sig.is_allowed() {
            return Err(format!("<{a}, {b}>: residue signature {sig:?}"));
        }
    }
    Ok(format!("{SWEEP_PAIRS} pairs"))
}

fn criterion_8() -> Outcome {
    for (a, b) in independent_pairs() {
        let s = PairSemigroup::new(a, b).unwrap();
        let ext = smith_extension(&s).map_err(|e| e.to_string())?;
        let report = oracle_isolated_gaps(ext.generators()).map_err(|e| e.to_string())?;
        if !report.is_perfect {
            return Err(format!(
                "<{:?}> has isolated gaps {:?}",
                ext.generators(),
                report.isolated_gaps
            ));
        }
    }
    Ok(format!("{SWEEP_PAIRS} extensions perfect"))
}

fn criterion_9() -> Outcome {
    for (a, b) in independent_pairs() {
        let searched = oracle_dls(a, b).map_err(|e| format!("<{a}, {b}>: {e}"))?;
        let euclid = dls(a, b).map_err(|e| e.to_string())?;
        if searched != euclid {
            return Err(format!("<{a}, {b}>: box {searched:?}, euclid {euclid:?}"));
        }
    }
    Ok(format!("{SWEEP_PAIRS} pairs, one box solution each"))
}

#[test]
fn acceptance() {
    let criteria: [Criterion; 9] = [
        ("1 <9,13> example", criterion_1),
        ("2 <8,13> example", criterion_2),
        ("3 <7,16> partition and matrix", criterion_3),
        ("4 <7,11> example", criterion_4),
        ("5 count sweep |uv| = brute force", criterion_5),
        ("6 I(S) sweep set equality", criterion_6),
        ("7 structural sweep", criterion_7),
        ("8 <a,b,h> perfect sweep", criterion_8),
        ("9 dls box uniqueness", criterion_9),
    ];
    let mut failed = Vec::new();
    for (name, check) in criteria {
        match check() {
            Ok(note) => println!("PASS  {name}: {note}"),
            Err(why) => {
                println!("FAIL  {name}: {why}");
                failed.push(name);
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
