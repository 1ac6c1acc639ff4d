// Generate a degree-two sphere map from its parameters, scramble it, classify it back.

use hqforms::automorphism::random_automorphism;
use hqforms::deg2::{classify_deg2_sphere_map, generate_deg2_map, Deg2NormalForm};
use rand::SeedableRng;

pub fn run() -> Result<Deg2NormalForm, Box<dyn std::error::Error>> {
    let t = Deg2NormalForm::parse(&["1/4", "9/16"])?;
    let f = generate_deg2_map(&t)?;
    print!("{}", f.to_text());
    f.verify()?;
    let mut rng = rand::rngs::StdRng::seed_from_u64(3);
    let g = f.precompose(&random_automorphism(2, 1, 3, &mut rng))?;
    let back = classify_deg2_sphere_map(&g)?;
    println!("{t} -> {back}");
    Ok(back)
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run()?;
    Ok(())
}
