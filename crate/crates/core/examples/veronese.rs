// Monomial basis of the Veronese map and the form of a map in that basis.

use hqforms::hqclass::lookup;
use hqforms::veronese::VeroneseBasis;

pub fn run() -> Result<usize, Box<dyn std::error::Error>> {
    let basis = VeroneseBasis::new(2, 2);
    for (k, e) in basis.iter().enumerate() {
        println!("{:<6} {e:?}", basis.label(k, &["z0", "z1", "z2"]));
    }
    let whitney = lookup("T1.1.iii")?.map;
    print!("{}", whitney.target_form().to_text());
    Ok(basis.len())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run()?;
    Ok(())
}
