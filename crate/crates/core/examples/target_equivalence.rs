// Two maps with the same pulled-back form differ by a target automorphism; recover it.

use hqforms::automorphism::random_automorphism;
use hqforms::hqclass::lookup;
use hqforms::maps::recover_target_equivalence;
use hqforms::MatrixK;
use rand::SeedableRng;

pub fn run() -> Result<MatrixK, Box<dyn std::error::Error>> {
    let f = lookup("T1.2.iv")?.map;
    let (pos, neg) = f.target().homogeneous_signature();
    let mut rng = rand::rngs::StdRng::seed_from_u64(11);
    let c = random_automorphism(pos, neg, 2, &mut rng);
    let g = f.postcompose(&c)?;
    let got = recover_target_equivalence(&f, &g)?;
    print!("{}", got.to_text());
    assert_eq!(got, c);
    Ok(got)
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run()?;
    Ok(())
}
