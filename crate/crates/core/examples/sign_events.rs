// Sign-based events: equal total signs, and the all-positive / all-even
// predicates, compared against their exact values.

use invgen::exact::{exact_prob_predicate, Predicate};
use invgen::montecarlo::{run, Event, ExperimentSpec};
use invgen::WeylFamily;

pub fn run_example() -> invgen::Result<()> {
    let n_est = run(&ExperimentSpec::new(50, 4, WeylFamily::B, Event::N, 20_000, 3))?;
    println!("N, l=4, B50: {:.4} (exact 1/8)", n_est.p_hat);

    for n in [4, 8] {
        let exact = exact_prob_predicate(n, WeylFamily::B, Predicate::AllPositive)?;
        let est = run(&ExperimentSpec::new(n, 1, WeylFamily::B, Event::AllPositive, 20_000, 4))?;
        println!("all positive, B{n}: {:.4} vs {exact}", est.p_hat);
    }
    for n in [10, 100, 1000] {
        let est = run(&ExperimentSpec::new(n, 1, WeylFamily::A, Event::AllEven, 20_000, 5))?;
        println!("all even, A{n}: {:.4}", est.p_hat);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> invgen::Result<()> {
    run_example()
}
