// Turn a form into a map out of the sphere and check the map.

use hqforms::maps::map_from_decomposition;
use hqforms::{HermitianForm, Hyperquadric, MatrixK, RationalMap};

pub fn run() -> Result<RationalMap, Box<dyn std::error::Error>> {
    let j = HermitianForm::linear(MatrixK::from_int_diag(&[1, 1, -1]))?;
    let a = HermitianForm::linear(MatrixK::from_int_diag(&[1, -1, 1]))?;
    let b = a.multiply(&j)?;
    println!("inertia {}", b.inertia());
    let map = map_from_decomposition(Hyperquadric::sphere(2), 2, &b.decompose())?;
    print!("{}", map.to_text());
    let q = map.verify()?;
    println!("{} -> {}, quotient form:", map.source(), map.target());
    print!("{}", q.to_text());
    Ok(map)
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run()?;
    Ok(())
}
