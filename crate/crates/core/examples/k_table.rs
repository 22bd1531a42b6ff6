// Lower bounds on Prob(I4) for classical groups, and the smallest q from
// which the bound is positive.

use invgen::bounds::{
    i4_lower_bound, solve_k4, BoundOptions, ClassicalFamily, ClassicalKind, Expansion, Parity, DEFAULT_B_J4,
};

pub fn run_example() -> invgen::Result<()> {
    for expansion in [Expansion::Leading, Expansion::Printed] {
        let opts = BoundOptions::new(expansion);
        print!("{expansion:<8}");
        for kind in [ClassicalKind::SL, ClassicalKind::SU, ClassicalKind::Sp, ClassicalKind::SOOddDim] {
            print!("  {}={}", kind.name(), solve_k4(kind, Parity::Odd, DEFAULT_B_J4, &opts)?);
        }
        println!();
    }

    let opts = BoundOptions::new(Expansion::Leading);
    for q in [16, 64, 1024] {
        let f = ClassicalFamily::new(ClassicalKind::SL, q)?;
        let r = i4_lower_bound(&f, DEFAULT_B_J4, &opts)?;
        println!("SL q={q:<5} s={:.5} bound={:.5}", r.s, r.i4_lower);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> invgen::Result<()> {
    run_example()
}
