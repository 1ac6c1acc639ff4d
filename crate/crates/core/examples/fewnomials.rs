// Vanishing fewnomials on x + y + t = 0, the sphere polynomials they give,
// and the maps built from them.

use hqforms::monomial::{enumerate_vanishing_fewnomials, fewnomial_to_maps, sphere_polynomials, Fewnomial};

pub fn run() -> Result<Vec<Fewnomial>, Box<dyn std::error::Error>> {
    let reps = enumerate_vanishing_fewnomials(6, 4);
    for p in &reps {
        println!("{:?} {p}", p.signature());
    }
    for s in sphere_polynomials(&reps, 3) {
        println!("{s}");
    }
    for m in fewnomial_to_maps(&reps[0]) {
        m.map.verify()?;
        println!("{}: {} -> {}", m.substitution, m.map.source(), m.map.target());
    }
    Ok(reps)
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run()?;
    Ok(())
}
