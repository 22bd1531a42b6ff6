// Exact values of Prob(J) for small n, as fractions.

use invgen::exact::{enumerate_classes, exact_prob_j, exact_prob_predicate, Predicate};
use invgen::WeylFamily;
use num_traits::ToPrimitive;

pub fn run_example() -> invgen::Result<()> {
    let table = enumerate_classes(3, WeylFamily::B)?;
    println!("B3: {} classes over {}", table.len(), table.denominator());
    for (label, p) in table.probabilities().take(4) {
        println!("  {label:<10} {p}");
    }

    println!("{:>3} {:>4} {:>12} {:>12} {:>12}", "n", "fam", "l=2", "l=3", "l=4");
    for family in [WeylFamily::A, WeylFamily::B, WeylFamily::DPlus] {
        for n in [4, 6, 8] {
            let row = (2..=4)
                .map(|l| exact_prob_j(n, l, family).map(|p| p.to_f64().unwrap_or(f64::NAN)))
                .collect::<invgen::Result<Vec<_>>>()?;
            println!("{n:>3} {:>4} {:>12.6} {:>12.6} {:>12.6}", family.name(), row[0], row[1], row[2]);
        }
    }
    println!("all cycles even, n=4: {}", exact_prob_predicate(4, WeylFamily::A, Predicate::AllEven)?);
    Ok(())
}

#[allow(dead_code)]
fn main() -> invgen::Result<()> {
    run_example()
}
