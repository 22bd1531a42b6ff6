//! Acceptance run: one PASS/FAIL line per criterion, non-zero exit on any FAIL.
//!
//! Run with `cargo test --test acceptance` (add `--release` for realistic timings).

mod common;

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};
use std::time::{Duration, Instant};

use invgen::exact::{exact_prob_j, exact_prob_predicate, Predicate};
use invgen::montecarlo::{self, Event, ExperimentSpec};
use invgen::WeylFamily;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;

type Outcome = Result<String, String>;

fn sigma(p: f64, trials: u64) -> f64 {
    (p * (1.0 - p) / trials as f64).sqrt()
}

/// Runs the command line front end in-process; returns stdout.
fn cli(args: &[&str]) -> Result<String, String> {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = invgen::cli::run(std::iter::once("invgen").chain(args.iter().copied()), &mut out, &mut err);
    if code != 0 {
        return Err(format!("invgen {} exited {code}: {}", args.join(" "), String::from_utf8_lossy(&err)));
    }
    Ok(String::from_utf8_lossy(&out).into_owned())
}

#[derive(Debug)]
struct Row {
    n: usize,
    l: usize,
    family: String,
    trials: u64,
    successes: u64,
    p_hat: f64,
}

fn read_rows(path: &Path) -> Result<Vec<Row>, String> {
    let text = std::fs::read_to_string(path).map_err(|e| e.to_string())?;
    let body: String = text.lines().filter(|l| !l.starts_with('#')).map(|l| format!("{l}\n")).collect();
    let mut reader = csv::Reader::from_reader(body.as_bytes());
    let mut rows = Vec::new();
    for rec in reader.records() {
        let rec = rec.map_err(|e| e.to_string())?;
        let num = |i: usize| rec[i].parse::<f64>().map_err(|e| format!("column {i}: {e}"));
        rows.push(Row {
            n: rec[0].parse().map_err(|e| format!("{e}"))?,
            l: rec[1].parse().map_err(|e| format!("{e}"))?,
            family: rec[2].to_string(),
            trials: rec[4].parse().map_err(|e| format!("{e}"))?,
            successes: rec[5].parse().map_err(|e| format!("{e}"))?,
            p_hat: num(6)?,
        });
    }
    Ok(rows)
}

/// The command lines behind criteria 1 and 4, each with its output file name.
fn sweep_jobs() -> Vec<(String, Vec<String>)> {
    let mut jobs = vec![(
        "baseline.csv".to_string(),
        ["sweep", "--ns", "10,100,1000,10000,100000", "--l", "4", "--family", "A", "--trials", "10000"]
            .map(String::from)
            .to_vec(),
    )];
    for family in ["A", "B", "D+"] {
        for l in 1..=4 {
            let args = ["sweep", "--ns", "2,3,4,5,6", "--l", &l.to_string(), "--family", family, "--trials", "100000"];
            jobs.push((format!("oracle_{family}_{l}.csv"), args.map(String::from).to_vec()));
        }
    }
    jobs
}

fn run_jobs(dir: &Path, threads: usize) -> Result<Vec<PathBuf>, String> {
    let mut paths = Vec::new();
    for (name, args) in sweep_jobs() {
        let path = dir.join(format!("t{threads}_{name}"));
        let mut full: Vec<&str> = args.iter().map(String::as_str).collect();
        let threads = threads.to_string();
        let path_str = path.to_string_lossy().into_owned();
        full.extend(["--threads", &threads, "--out", &path_str]);
        cli(&full)?;
        paths.push(path);
    }
    Ok(paths)
}

fn criterion_1(baseline: &[Row]) -> Outcome {
    let mut detail = Vec::new();
    let mut ok = baseline.len() == 5;
    for r in baseline {
        let band = if r.n == 1000 { (0.40, 0.60) } else { (0.35, 0.75) };
        ok &= r.p_hat >= band.0 && r.p_hat <= band.1;
        detail.push(format!("n={} {:.4}", r.n, r.p_hat));
    }
    let detail = detail.join(", ");
    if ok {
        Ok(detail)
    } else {
        Err(detail)
    }
}

fn criterion_2(baseline: &[Row]) -> Outcome {
    let floor = 1.0 / 3.0 - 0.05;
    let mut worst = f64::INFINITY;
    let mut notes = Vec::new();
    for r in baseline {
        let s = sigma(r.p_hat, r.trials);
        worst = worst.min(r.p_hat - 3.0 * s);
        if r.p_hat + 3.0 * s < 1.0 / 3.0 {
            notes.push(format!("n={} below 1/3 beyond noise", r.n));
        }
    }
    let note = if notes.is_empty() { "no estimate below 1/3 beyond noise".to_string() } else { notes.join("; ") };
    let detail = format!("min p_hat-3sigma = {worst:.4} (floor {floor:.4}); {note}");
    if worst >= floor {
        Ok(detail)
    } else {
        Err(detail)
    }
}

fn criterion_3() -> Outcome {
    let want = [("SL", 12u64), ("SU", 12), ("Sp", 36), ("SO", 25)];
    let mut got = Vec::new();
    let mut ok = true;
    for (family, k) in want {
        let out = cli(&["bounds", "--family", family, "--solve-k", "--b-j4", "1/3"])?;
        let value: u64 = out.trim().trim_start_matches("K = ").parse().map_err(|e| format!("{out:?}: {e}"))?;
        ok &= value == k;
        got.push(format!("{family}={value}"));
    }
    let printed = cli(&["bounds", "--family", "Sp", "--solve-k", "--b-j4", "1/3", "--expansion", "printed"])?;
    let detail = format!("{} (Sp with the q^-2 term kept: {})", got.join(" "), printed.trim());
    if ok {
        Ok(detail)
    } else {
        Err(detail)
    }
}

fn family_of(name: &str) -> WeylFamily {
    name.parse().expect("family column")
}

fn criterion_4(oracle: &[Row]) -> Outcome {
    let mut misses = Vec::new();
    let mut worst = 0.0f64;
    for r in oracle {
        let exact = exact_prob_j(r.n, r.l, family_of(&r.family)).map_err(|e| e.to_string())?;
        let p = exact.to_f64().unwrap();
        let (low, high) = invgen::stats::wilson_interval(r.successes, r.trials, 3.0);
        let z = (r.p_hat - p).abs() / sigma(p, r.trials).max(1e-300);
        if sigma(p, r.trials) > 0.0 {
            worst = worst.max(z);
        }
        if p < low || p > high {
            misses.push(format!("n={} l={} {}: {:.5} vs {:.5}", r.n, r.l, r.family, r.p_hat, p));
        }
    }
    let detail = format!("{} comparisons, largest deviation {worst:.2} sigma", oracle.len());
    if oracle.len() == 60 && misses.is_empty() {
        Ok(detail)
    } else {
        Err(format!("{detail}; outside band: {}", misses.join("; ")))
    }
}

fn brute_for(n: usize, family: WeylFamily) -> BTreeMap<Vec<(usize, bool)>, u64> {
    match family {
        WeylFamily::A => common::brute_classes(n, false, None),
        WeylFamily::B | WeylFamily::C => common::brute_classes(n, true, None),
        WeylFamily::DPlus => common::brute_classes(n, true, Some(false)),
        WeylFamily::DMinus => common::brute_classes(n, true, Some(true)),
    }
}

fn criterion_5() -> Outcome {
    let mut count = 0;
    for n in 1..=6 {
        for family in WeylFamily::ALL {
            let classes = brute_for(n, family);
            for l in 1..=3 {
                let want = common::brute_prob_j(&classes, l, family.uses_signed_profiles());
                let got = exact_prob_j(n, l, family).map_err(|e| e.to_string())?;
                if got != want {
                    return Err(format!("n={n} l={l} {family}: {got} vs {want}"));
                }
                count += 1;
            }
        }
    }
    Ok(format!("{count} rational values identical"))
}

fn criterion_6() -> Outcome {
    const CASES: u32 = 10_000;
    for name in common::props::NAMES {
        common::props::check(name, CASES).map_err(|e| format!("{name}: {e}"))?;
    }
    for n in 1..=8 {
        for l in 1..=4 {
            let a = exact_prob_j(n, l, WeylFamily::A).map_err(|e| e.to_string())?;
            let b = exact_prob_j(n, l, WeylFamily::B).map_err(|e| e.to_string())?;
            let c = exact_prob_j(n, l, WeylFamily::C).map_err(|e| e.to_string())?;
            if a != c || b < a {
                return Err(format!("n={n} l={l}: A={a} B={b} C={c}"));
            }
        }
    }
    Ok(format!("{} properties x {CASES} cases; exact C = A and B >= A for n <= 8", common::props::NAMES.len()))
}

fn decreasing(family: WeylFamily, event: Event, seed: u64) -> Result<String, String> {
    let trials = 100_000;
    let small = montecarlo::run(&ExperimentSpec::new(100, 1, family, event, trials, seed)).map_err(|e| e.to_string())?;
    let large = montecarlo::run(&ExperimentSpec::new(10_000, 1, family, event, trials, seed + 1))
        .map_err(|e| e.to_string())?;
    let detail = format!(
        "{} {}: n=100 [{:.4},{:.4}] n=10000 [{:.4},{:.4}]",
        event.name(),
        family,
        small.ci_low,
        small.ci_high,
        large.ci_low,
        large.ci_high
    );
    if large.p_hat < small.p_hat && large.ci_high < small.ci_low {
        Ok(detail)
    } else {
        Err(detail)
    }
}

fn criterion_7() -> Outcome {
    let exact = exact_prob_predicate(4, WeylFamily::A, Predicate::AllEven).map_err(|e| e.to_string())?;
    let want = BigRational::new(BigInt::from(3), BigInt::from(8));
    let head = format!("exact all_even n=4 = {exact}");
    let even = decreasing(WeylFamily::A, Event::AllEven, 71);
    let positive = decreasing(WeylFamily::B, Event::AllPositive, 73);
    let parts = [Ok(head.clone()), even, positive];
    let detail = parts.iter().map(|p| p.clone().unwrap_or_else(|e| e)).collect::<Vec<_>>().join("; ");
    if exact == want && parts.iter().all(Result::is_ok) {
        Ok(detail)
    } else {
        Err(detail)
    }
}

fn criterion_8() -> Outcome {
    let trials = 10_000;
    let small = montecarlo::run(&ExperimentSpec::new(100, 3, WeylFamily::A, Event::J, trials, 81))
        .map_err(|e| e.to_string())?;
    let large = montecarlo::run(&ExperimentSpec::new(100_000, 3, WeylFamily::A, Event::J, trials, 82))
        .map_err(|e| e.to_string())?;
    let s = (sigma(small.p_hat, trials).powi(2) + sigma(large.p_hat, trials).powi(2)).sqrt();
    let detail = format!("n=100 {:.4}, n=100000 {:.4}, 2sigma {:.4}", small.p_hat, large.p_hat, 2.0 * s);
    if large.p_hat <= small.p_hat + 2.0 * s {
        Ok(detail)
    } else {
        Err(detail)
    }
}

fn criterion_9() -> Outcome {
    let est = montecarlo::run(&ExperimentSpec::new(50, 4, WeylFamily::B, Event::N, 100_000, 91))
        .map_err(|e| e.to_string())?;
    let (low, high) = est.wilson_band(3.0);
    let detail = format!("{:.5} vs 0.125, Wilson 3sigma band [{low:.5},{high:.5}]", est.p_hat);
    if est.consistent_with(0.125, 3.0) {
        Ok(detail)
    } else {
        Err(detail)
    }
}

fn criterion_10() -> Outcome {
    let n = 1_000_000;
    let spec = ExperimentSpec::new(n, 4, WeylFamily::B, Event::J, 10_000, 101);
    let mut slowest = Duration::ZERO;
    for trial in 0..50 {
        let start = Instant::now();
        montecarlo::trial_outcome(&spec, trial).map_err(|e| e.to_string())?;
        slowest = slowest.max(start.elapsed());
    }
    let pool = |threads| rayon::ThreadPoolBuilder::new().num_threads(threads).build().unwrap();
    let start = Instant::now();
    let single = pool(1).install(|| montecarlo::run(&spec)).map_err(|e| e.to_string())?;
    let single_time = start.elapsed();
    let start = Instant::now();
    let multi = pool(4).install(|| montecarlo::run(&spec)).map_err(|e| e.to_string())?;
    let multi_time = start.elapsed();
    let detail = format!(
        "slowest single trial {:.2} ms; 10^4 trials {:.1} s on 1 thread, {:.1} s on 4; successes {} / {}",
        slowest.as_secs_f64() * 1e3,
        single_time.as_secs_f64(),
        multi_time.as_secs_f64(),
        single.successes,
        multi.successes
    );
    if slowest <= Duration::from_millis(10)
        && single_time <= Duration::from_secs(180)
        && single.successes == multi.successes
    {
        Ok(detail)
    } else {
        Err(detail)
    }
}

fn criterion_11(dir: &Path, first: &[PathBuf]) -> Outcome {
    let second = run_jobs(dir, 4)?;
    let mut bytes = 0;
    for (a, b) in first.iter().zip(&second) {
        let (x, y) = (std::fs::read(a).map_err(|e| e.to_string())?, std::fs::read(b).map_err(|e| e.to_string())?);
        if x != y {
            return Err(format!("{} differs from {}", a.display(), b.display()));
        }
        bytes += x.len();
    }
    Ok(format!("{} files, {bytes} bytes identical between 1 and 4 threads", first.len()))
}

fn main() {
    let dir = tempfile::tempdir().expect("temp dir");
    let mut results: Vec<(usize, &str, Outcome, Duration)> = Vec::new();
    let mut record = |id, name, f: &mut dyn FnMut() -> Outcome| {
        let start = Instant::now();
        let outcome = f();
        let elapsed = start.elapsed();
        let (tag, detail) = match &outcome {
            Ok(d) => ("PASS", d),
            Err(d) => ("FAIL", d),
        };
        println!("{tag} {id:>2} {name} [{:.1}s]: {detail}", elapsed.as_secs_f64());
        results.push((id, name, outcome, elapsed));
    };

    let start = Instant::now();
    let first = run_jobs(dir.path(), 1);
    println!("sweeps for criteria 1 and 4 written in {:.1}s", start.elapsed().as_secs_f64());
    let rows = |i: usize| -> Result<Vec<Row>, String> {
        let paths = first.as_ref().map_err(Clone::clone)?;
        read_rows(&paths[i])
    };
    let baseline = rows(0);
    let oracle: Result<Vec<Row>, String> =
        (1..sweep_jobs().len()).map(rows).collect::<Result<Vec<_>, _>>().map(|v| v.into_iter().flatten().collect());

    record(1, "l=4 sweep of n, type A", &mut || criterion_1(baseline.as_ref().map_err(Clone::clone)?));
    record(2, "Prob(J_A^4) lower bound support", &mut || criterion_2(baseline.as_ref().map_err(Clone::clone)?));
    record(3, "K table", &mut criterion_3);
    record(4, "oracle and Monte Carlo agree", &mut || criterion_4(oracle.as_ref().map_err(Clone::clone)?));
    record(5, "zeta transform equals brute force", &mut criterion_5);
    record(6, "property suite", &mut criterion_6);
    record(7, "vanishing predicates", &mut criterion_7);
    record(8, "l=3 non-increase", &mut criterion_8);
    record(9, "event N", &mut criterion_9);
    record(10, "performance", &mut criterion_10);
    record(11, "determinism across thread counts", &mut || {
        criterion_11(dir.path(), first.as_ref().map_err(Clone::clone)?)
    });

    let failed: Vec<usize> = results.iter().filter(|r| r.2.is_err()).map(|r| r.0).collect();
    if failed.is_empty() {
        println!("acceptance: all {} criteria passed", results.len());
    } else {
        println!("acceptance: failed criteria {failed:?}");
        std::process::exit(1);
    }
}
