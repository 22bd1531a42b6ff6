// Monte Carlo estimates of Prob(J) for l = 4 across n, with Wilson intervals.

use invgen::montecarlo::{derive_seed, sweep, Event, ExperimentSpec};
use invgen::WeylFamily;

pub fn run_example() -> invgen::Result<()> {
    let trials = std::env::var("INVGEN_TRIALS").ok().and_then(|t| t.parse().ok()).unwrap_or(2000);
    let specs: Vec<ExperimentSpec> = [10, 100, 1000, 10_000]
        .into_iter()
        .enumerate()
        .map(|(i, n)| ExperimentSpec::new(n, 4, WeylFamily::A, Event::J, trials, derive_seed(0x5eed, i as u64)))
        .collect();
    println!("{:>6} {:>8} {:>8} {:>8}", "n", "p_hat", "low", "high");
    for est in sweep(&specs)? {
        println!("{:>6} {:>8.4} {:>8.4} {:>8.4}", est.spec.n, est.p_hat, est.ci_low, est.ci_high);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> invgen::Result<()> {
    run_example()
}
