//! Randomized property checks over profiles and events, shared by the
//! proptest suite and the acceptance harness.

use invgen::{
    event_j, fixed_sizes, make_partition, project, signed_fixed_sets, Profile, Sign, SignedCycleType,
    WeylFamily,
};
use proptest::prelude::*;
use proptest::test_runner::{Config, TestCaseError, TestRunner};

type CaseResult = Result<(), TestCaseError>;

fn sign(neg: bool) -> Sign {
    if neg {
        Sign::Minus
    } else {
        Sign::Plus
    }
}

fn partition_strategy(max_n: usize) -> impl Strategy<Value = Vec<usize>> {
    prop::collection::vec(1usize..=max_n, 1..12)
}

fn signed_strategy(max_len: usize) -> impl Strategy<Value = SignedCycleType> {
    prop::collection::vec((1usize..=max_len, any::<bool>()), 1..12).prop_map(|cs| {
        SignedCycleType::new(cs.into_iter().map(|(l, neg)| (l, sign(neg))).collect()).unwrap()
    })
}

/// Signed types of a common n: cut `n` into cycles at the given points.
pub fn same_n_signed(n: usize, cuts: &[(usize, bool)]) -> SignedCycleType {
    let mut points: Vec<usize> = cuts.iter().map(|c| c.0 % n).filter(|&c| c > 0).collect();
    points.push(0);
    points.push(n);
    points.sort_unstable();
    points.dedup();
    let cycles = points
        .windows(2)
        .zip(cuts.iter().cycle())
        .map(|(w, c)| (w[1] - w[0], sign(c.1)))
        .collect();
    SignedCycleType::new(cycles).unwrap()
}

fn tuple_strategy() -> impl Strategy<Value = Vec<SignedCycleType>> {
    (
        2usize..40,
        prop::collection::vec(prop::collection::vec((0usize..1000, any::<bool>()), 1..8), 1..6),
    )
        .prop_map(|(n, elems)| elems.iter().map(|c| same_n_signed(n, c)).collect())
}

fn complement(parts: Vec<usize>) -> CaseResult {
    let p = make_partition(&parts).unwrap();
    let prof = fixed_sizes(&p);
    for k in 0..=p.n() {
        prop_assert_eq!(prof.contains(k), k > 0 && k < p.n() && prof.contains(p.n() - k));
    }
    Ok(())
}

fn signed_complement(s: SignedCycleType) -> CaseResult {
    let prof = signed_fixed_sets(&s);
    let n = s.n();
    for k in 1..n {
        for e in [Sign::Plus, Sign::Minus] {
            prop_assert_eq!(prof.contains(k, e), prof.contains(n - k, s.total_sign() * e));
        }
    }
    Ok(())
}

fn shadow(s: SignedCycleType) -> CaseResult {
    let signed = signed_fixed_sets(&s);
    let mut sizes: Vec<usize> = signed.pairs().into_iter().map(|p| p.0).collect();
    sizes.dedup();
    prop_assert_eq!(sizes, fixed_sizes(&project(&s)).sizes());
    Ok(())
}

fn brute_force((n, cuts): (usize, Vec<(usize, bool)>)) -> CaseResult {
    let s = same_n_signed(n, &cuts);
    let cycles: Vec<(usize, bool)> = s.cycles().iter().map(|&(l, e)| (l, e == Sign::Minus)).collect();
    let want: Vec<(usize, Sign)> =
        super::brute_signed_profile(&cycles).into_iter().map(|(k, neg)| (k, sign(neg))).collect();
    let mut got = signed_fixed_sets(&s).pairs();
    got.sort_unstable_by_key(|&(k, e)| (k, e == Sign::Minus));
    prop_assert_eq!(got, want);
    let lengths: Vec<usize> = cycles.iter().map(|c| c.0).collect();
    let want_unsigned: Vec<usize> = super::brute_unsigned_profile(&lengths).into_iter().collect();
    prop_assert_eq!(fixed_sizes(&project(&s)).sizes(), want_unsigned);
    Ok(())
}

fn profiles(types: &[SignedCycleType]) -> (Vec<Profile>, Vec<Profile>) {
    let unsigned = types.iter().map(|t| fixed_sizes(&t.project()).into()).collect();
    let signed = types.iter().map(|t| signed_fixed_sets(t).into()).collect();
    (unsigned, signed)
}

fn signed_implies_unsigned(types: Vec<SignedCycleType>) -> CaseResult {
    let (unsigned, signed) = profiles(&types);
    let ja = event_j(&unsigned, WeylFamily::A).unwrap();
    prop_assert!(!ja || event_j(&signed, WeylFamily::B).unwrap());
    Ok(())
}

fn monotone_in_l(types: Vec<SignedCycleType>) -> CaseResult {
    let (unsigned, signed) = profiles(&types);
    for l in 1..types.len() {
        if event_j(&signed[..l], WeylFamily::B).unwrap() {
            prop_assert!(event_j(&signed[..l + 1], WeylFamily::B).unwrap());
        }
        if event_j(&unsigned[..l], WeylFamily::A).unwrap() {
            prop_assert!(event_j(&unsigned[..l + 1], WeylFamily::A).unwrap());
        }
    }
    Ok(())
}

fn c_matches_a(types: Vec<SignedCycleType>) -> CaseResult {
    let (unsigned, _) = profiles(&types);
    prop_assert_eq!(event_j(&unsigned, WeylFamily::C).unwrap(), event_j(&unsigned, WeylFamily::A).unwrap());
    Ok(())
}

pub const NAMES: [&str; 7] = [
    "complement symmetry",
    "signed complement symmetry",
    "unsigned shadow",
    "brute-force profiles",
    "signed implies unsigned",
    "monotone in l",
    "J_C equals J_A",
];

fn run_with<S: Strategy>(cases: u32, strategy: S, f: impl Fn(S::Value) -> CaseResult) -> Result<(), String>
where
    S::Value: std::fmt::Debug,
{
    let mut runner = TestRunner::new(Config { cases, failure_persistence: None, ..Config::default() });
    runner.run(&strategy, f).map_err(|e| e.to_string())
}

/// Runs one named property over `cases` random inputs.
pub fn check(name: &str, cases: u32) -> Result<(), String> {
    match name {
        "complement symmetry" => run_with(cases, partition_strategy(60), complement),
        "signed complement symmetry" => run_with(cases, signed_strategy(60), signed_complement),
        "unsigned shadow" => run_with(cases, signed_strategy(60), shadow),
        "brute-force profiles" => run_with(
            cases,
            (1usize..=10, prop::collection::vec((0usize..100, any::<bool>()), 1..10)),
            brute_force,
        ),
        "signed implies unsigned" => run_with(cases, tuple_strategy(), signed_implies_unsigned),
        "monotone in l" => run_with(cases, tuple_strategy(), monotone_in_l),
        "J_C equals J_A" => run_with(cases, tuple_strategy(), c_matches_a),
        other => Err(format!("unknown property {other}")),
    }
}
