// Draw random cycle types for each family from a fixed seed.

use invgen::sampling::{sample_partition, sample_signed, sample_signed_conditioned, RngState};
use invgen::Sign;

pub fn run_example() -> invgen::Result<()> {
    let n = 12;
    let mut rng = RngState::new(2024, 0);
    for _ in 0..3 {
        println!("A   {}", sample_partition(n, &mut rng)?);
    }
    for _ in 0..3 {
        println!("B   {}", sample_signed(n, &mut rng)?);
    }
    for want in [Sign::Plus, Sign::Minus] {
        let s = sample_signed_conditioned(n, want, &mut rng)?;
        assert_eq!(s.total_sign(), want);
        println!("D{want}  {s}");
    }

    // Same seed and stream, same draw.
    let a = sample_partition(1000, &mut RngState::new(5, 17))?;
    let b = sample_partition(1000, &mut RngState::new(5, 17))?;
    assert_eq!(a, b);
    println!("n=1000 draw has {} cycles", a.num_cycles());
    Ok(())
}

#[allow(dead_code)]
fn main() -> invgen::Result<()> {
    run_example()
}
