// Fixed-subset sizes of a few cycle types, and whether a tuple of them
// leaves no common size.

use invgen::{event_j, fixed_sizes, signed_fixed_sets, Partition, Profile, SignedCycleType, WeylFamily};

pub fn run_example() -> invgen::Result<()> {
    for text in ["3,1", "4,2,1", "5", "2,2,2"] {
        let p: Partition = text.parse()?;
        println!("{p:<8} -> {:?}", fixed_sizes(&p).sizes());
    }

    let tuple: Vec<Profile> = ["3,1", "2,2"]
        .iter()
        .map(|t| t.parse::<Partition>().map(|p| fixed_sizes(&p).into()))
        .collect::<Result<_, _>>()?;
    println!("J for (3,1),(2,2) in A: {}", event_j(&tuple, WeylFamily::A)?);

    let s: SignedCycleType = "2+,1-".parse()?;
    let prof = signed_fixed_sets(&s);
    println!("{s} -> {:?}", prof.pairs());
    let t: SignedCycleType = "3-".parse()?;
    let both = [Profile::from(prof), Profile::from(signed_fixed_sets(&t))];
    println!("J for (2+,1-),(3-) in B: {}", event_j(&both, WeylFamily::B)?);
    Ok(())
}

#[allow(dead_code)]
fn main() -> invgen::Result<()> {
    run_example()
}
